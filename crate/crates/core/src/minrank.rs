//! Minimum rank over S(F,G): enumeration, mr(F,G), the rank-attaining
//! set with its column-space classes, and the cut-vertex reduction.
//!
//! S(F,G) is the set of symmetric matrices over F whose off-diagonal
//! zero/nonzero pattern is the adjacency of G; diagonals are free. Its
//! size is (p-1)^|E| * p^n. Enumeration order is fixed: matrices are
//! indexed by `edge_index * p^n + diag_index`, where the edge index is a
//! base-(p-1) odometer over the sorted edge list (first edge most
//! significant, digit d encoding the value d+1) and the diagonal index a
//! base-p odometer (vertex 0 most significant).

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FMatrix};
use crate::gf2;
use crate::graph::Graph;
use crate::linalg;

pub type Budget = u64;

pub const DEFAULT_BUDGET: Budget = 100_000_000;

/// |S(F,G)|, saturating.
pub fn s_count(field: FieldSpec, g: &Graph) -> u128 {
    let p = field.p() as u128;
    let mut count: u128 = 1;
    for _ in 0..g.edge_count() {
        count = count.saturating_mul(p - 1);
    }
    for _ in 0..g.n() {
        count = count.saturating_mul(p);
    }
    count
}

fn check_budget(field: FieldSpec, g: &Graph, budget: Budget) -> Result<()> {
    let required = s_count(field, g);
    if required > budget as u128 {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Is `m` an element of S(field, g)?
pub fn matrix_in_pattern(g: &Graph, m: &FMatrix) -> bool {
    if m.rows() != g.n() || m.cols() != g.n() || !m.is_symmetric() {
        return false;
    }
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if (m.get(i, j) != 0) != g.has_edge(i, j) {
                return false;
            }
        }
    }
    true
}

/// Streaming enumeration of S(F,G) in the fixed order described above.
#[derive(Debug)]
pub struct SEnumeration {
    matrix: FMatrix,
    edges: Vec<(usize, usize)>,
    edge_digits: Vec<u8>,
    diag_digits: Vec<u8>,
    p: u8,
    started: bool,
    done: bool,
}

/// Enumerate S(F,G); refuses when |S| exceeds `budget`.
pub fn enumerate_s(field: FieldSpec, g: &Graph, budget: Budget) -> Result<SEnumeration> {
    check_budget(field, g, budget)?;
    let edges = g.edges();
    let mut matrix = FMatrix::zeros(field, g.n(), g.n());
    for &(u, v) in &edges {
        matrix.set(u, v, 1);
        matrix.set(v, u, 1);
    }
    Ok(SEnumeration {
        matrix,
        edge_digits: vec![0; edges.len()],
        diag_digits: vec![0; g.n()],
        edges,
        p: field.p(),
        started: false,
        done: false,
    })
}

impl SEnumeration {
    /// Advance the (edge, diagonal) odometer; the diagonal counter is
    /// least significant, and within each counter the last position is
    /// least significant.
    fn advance(&mut self) -> bool {
        for i in (0..self.diag_digits.len()).rev() {
            if self.diag_digits[i] + 1 < self.p {
                self.diag_digits[i] += 1;
                self.matrix.set(i, i, self.diag_digits[i]);
                return true;
            }
            self.diag_digits[i] = 0;
            self.matrix.set(i, i, 0);
        }
        for k in (0..self.edge_digits.len()).rev() {
            let (u, v) = self.edges[k];
            if self.edge_digits[k] + 2 < self.p {
                self.edge_digits[k] += 1;
                self.matrix.set(u, v, self.edge_digits[k] + 1);
                self.matrix.set(v, u, self.edge_digits[k] + 1);
                return true;
            }
            self.edge_digits[k] = 0;
            self.matrix.set(u, v, 1);
            self.matrix.set(v, u, 1);
        }
        false
    }
}

impl Iterator for SEnumeration {
    type Item = FMatrix;

    fn next(&mut self) -> Option<FMatrix> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.matrix.clone());
        }
        if self.advance() {
            Some(self.matrix.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Visit every matrix of S(F,G) without per-item allocation; `f` returns
/// false to stop early.
fn visit_s(
    field: FieldSpec,
    g: &Graph,
    budget: Budget,
    mut f: impl FnMut(&FMatrix) -> bool,
) -> Result<()> {
    let mut en = enumerate_s(field, g, budget)?;
    if !f(&en.matrix) {
        return Ok(());
    }
    while en.advance() {
        if !f(&en.matrix) {
            return Ok(());
        }
    }
    Ok(())
}

/// A lower bound for mr(F,G) read off the graph shape: 0 for edgeless
/// graphs, 1 when the edges form a single clique plus isolated vertices,
/// 2 otherwise (a symmetric rank-1 matrix has clique support).
pub fn structural_floor(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    let support: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    for (i, &u) in support.iter().enumerate() {
        for &v in support.iter().skip(i + 1) {
            if !g.has_edge(u, v) {
                return 2;
            }
        }
    }
    1
}

/// mr(F,G) by exhaustive enumeration, stopping early at the structural
/// floor.
pub fn min_rank(field: FieldSpec, g: &Graph, budget: Budget) -> Result<usize> {
    min_rank_with_floor(field, g, budget, 0)
}

/// mr(F,G), stopping early once the running minimum reaches
/// `max(floor, structural_floor(g))`. The caller asserts that `floor` is
/// a proven lower bound.
pub fn min_rank_with_floor(
    field: FieldSpec,
    g: &Graph,
    budget: Budget,
    floor: usize,
) -> Result<usize> {
    let floor = floor.max(structural_floor(g));
    if field.p() == 2 {
        check_budget(field, g, budget)?;
        return Ok(gf2_min_rank_bounded(g, floor));
    }
    let mut best = g.n();
    visit_s(field, g, budget, |m| {
        let r = linalg::rank(m);
        if r < best {
            best = r;
        }
        best > floor
    })?;
    Ok(best)
}

/// Decide mr(F,G) <= k without computing the exact minimum.
pub fn min_rank_at_most(field: FieldSpec, g: &Graph, k: usize, budget: Budget) -> Result<bool> {
    if field.p() == 2 {
        check_budget(field, g, budget)?;
        let n = g.n();
        let adj = adjacency_rows(g);
        for diag in 0u32..(1u32 << n) {
            if gf2::rank_adj_with_diagonal(&adj, n, diag as u16) <= k {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let mut found = false;
    visit_s(field, g, budget, |m| {
        if linalg::rank(m) <= k {
            found = true;
        }
        !found
    })?;
    Ok(found)
}

fn adjacency_rows(g: &Graph) -> [u16; 16] {
    let mut adj = [0u16; 16];
    for (v, row) in adj.iter_mut().enumerate().take(g.n()) {
        *row = g.neighbors(v);
    }
    adj
}

/// GF(2) fast path: only the 2^n diagonals vary; edges are forced to 1.
fn gf2_min_rank_bounded(g: &Graph, floor: usize) -> usize {
    let n = g.n();
    let adj = adjacency_rows(g);
    let mut best = n;
    for index in 0..(1u32 << n) {
        let diag = diag_mask_for_index(index, n);
        let r = gf2::rank_adj_with_diagonal(&adj, n, diag);
        if r < best {
            best = r;
            if best <= floor {
                break;
            }
        }
    }
    best
}

/// Map a diagonal enumeration index to its bitmask: vertex 0 is the most
/// significant digit of the index.
fn diag_mask_for_index(index: u32, n: usize) -> u16 {
    let mut diag = 0u16;
    for v in 0..n {
        if index >> (n - 1 - v) & 1 == 1 {
            diag |= 1 << v;
        }
    }
    diag
}

/// The rank-attaining matrices MR(F,G) and their column-space classes
/// C(F,G).
#[derive(Debug, Clone)]
pub struct MRSet {
    field: FieldSpec,
    graph: Graph,
    mr: usize,
    matrices: Vec<FMatrix>,
    classes: Vec<Vec<usize>>,
}

impl MRSet {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn mr(&self) -> usize {
        self.mr
    }

    pub fn matrices(&self) -> &[FMatrix] {
        &self.matrices
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Column-space classes as lists of indices into `matrices`, ordered
    /// by first member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, index: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&index))
            .expect("index within the matrix list")
    }

    /// Build the set from externally supplied matrices (e.g. a reference
    /// labeling), validating that each lies in S(F,G) and attains mr.
    pub fn from_matrices(
        field: FieldSpec,
        graph: Graph,
        matrices: Vec<FMatrix>,
        budget: Budget,
    ) -> Result<Self> {
        let mr = min_rank(field, &graph, budget)?;
        for m in &matrices {
            if !matrix_in_pattern(&graph, m) {
                return Err(Error::DimensionMismatch(
                    "matrix does not match the graph pattern".into(),
                ));
            }
            if linalg::rank(m) != mr {
                return Err(Error::DimensionMismatch(format!(
                    "matrix has rank {} but mr = {mr}",
                    linalg::rank(m)
                )));
            }
        }
        let classes = column_space_classes(&matrices)?;
        Ok(MRSet {
            field,
            graph,
            mr,
            matrices,
            classes,
        })
    }
}

fn column_space_classes(matrices: &[FMatrix]) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, m) in matrices.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            if linalg::col_space_equal(&matrices[class[0]], m)? {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    Ok(classes)
}

/// All matrices attaining mr(F,G), partitioned by column space.
pub fn min_rank_set(field: FieldSpec, g: &Graph, budget: Budget) -> Result<MRSet> {
    let mr = min_rank(field, g, budget)?;
    let mut matrices = Vec::new();
    visit_s(field, g, budget, |m| {
        if linalg::rank(m) == mr {
            matrices.push(m.clone());
        }
        true
    })?;
    let classes = column_space_classes(&matrices)?;
    Ok(MRSet {
        field,
        graph: *g,
        mr,
        matrices,
        classes,
    })
}

/// mr(F,G) computed by decomposing at cut vertices and across connected
/// components, brute-forcing only 2-connected leaves.
///
/// Disconnected graphs use the component sum rule; a connected graph
/// with a cut vertex v uses the exact reduction
/// `min(sum mr(G_i), sum mr(G_i - v) + 2)` over the branches G_i at v.
/// Decomposition always picks the lowest-indexed cut vertex; the value
/// is order-independent, only the runtime varies.
pub fn mr_via_cut_vertex(field: FieldSpec, g: &Graph, budget: Budget) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut total = 0;
        for comp in &comps {
            total += mr_via_cut_vertex(field, &g.induced_subgraph(comp)?, budget)?;
        }
        return Ok(total);
    }
    let cuts = g.cut_vertices();
    let Some(&v) = cuts.first() else {
        return min_rank(field, g, budget);
    };
    let rest = g.delete_vertex(v)?;
    let mut sum_full = 0;
    let mut sum_deleted = 0;
    for comp in rest.components() {
        // component labels refer to g - v; lift them back to g
        let lifted: Vec<usize> = comp
            .iter()
            .map(|&u| if u >= v { u + 1 } else { u })
            .collect();
        let mut with_v = lifted.clone();
        with_v.push(v);
        let branch = g.induced_subgraph(&with_v)?;
        sum_full += mr_via_cut_vertex(field, &branch, budget)?;
        sum_deleted += mr_via_cut_vertex(field, &g.induced_subgraph(&lifted)?, budget)?;
    }
    Ok(sum_full.min(sum_deleted + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, full_house, graph38, graph39, m_copies, path, Graph};
    use std::collections::HashSet;

    fn gf(p: u8) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(s_count(gf(2), &path(3)), 8);
        assert_eq!(s_count(gf(2), &full_house()), 32);
        assert_eq!(s_count(gf(3), &full_house()), 62_208);
        assert_eq!(s_count(gf(5), &full_house()), 4u128.pow(8) * 5u128.pow(5));
    }

    #[test]
    fn enumeration_is_exact_and_unique() {
        for p in [2u8, 3] {
            let g = path(3);
            let f = gf(p);
            let all: Vec<FMatrix> = enumerate_s(f, &g, DEFAULT_BUDGET).unwrap().collect();
            assert_eq!(all.len() as u128, s_count(f, &g));
            let distinct: HashSet<Vec<u8>> = all.iter().map(|m| m.entries().to_vec()).collect();
            assert_eq!(distinct.len(), all.len());
            for m in &all {
                assert!(matrix_in_pattern(&g, m));
            }
            // first matrix: zero diagonal, all edges 1
            assert!(all[0].entries().iter().enumerate().all(|(k, &e)| {
                let (i, j) = (k / 3, k % 3);
                if i == j {
                    e == 0
                } else {
                    e == u8::from(g.has_edge(i, j))
                }
            }));
        }
    }

    #[test]
    fn budget_refusal_names_the_count() {
        let err = enumerate_s(gf(3), &full_house(), 1000).unwrap_err();
        match err {
            Error::BudgetExceeded { required, budget } => {
                assert_eq!(required, 62_208);
                assert_eq!(budget, 1000);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn min_rank_examples() {
        assert_eq!(min_rank(gf(2), &path(5), DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(min_rank(gf(2), &full_house(), DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(min_rank(gf(3), &full_house(), DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(min_rank(gf(2), &complete(7), DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(
            min_rank(gf(2), &Graph::empty(6).unwrap(), DEFAULT_BUDGET).unwrap(),
            0
        );
    }

    #[test]
    fn structural_floor_cases() {
        assert_eq!(structural_floor(&Graph::empty(4).unwrap()), 0);
        let k3_isolated = complete(3)
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap();
        assert_eq!(structural_floor(&k3_isolated), 1);
        assert_eq!(structural_floor(&path(3)), 2);
        assert_eq!(structural_floor(&m_copies(2, &complete(2)).unwrap()), 2);
    }

    #[test]
    fn min_rank_at_most_agrees_with_min_rank() {
        for g in [
            path(4),
            full_house(),
            complete(5),
            m_copies(3, &complete(2)).unwrap(),
        ] {
            for p in [2u8, 3] {
                let mr = min_rank(gf(p), &g, DEFAULT_BUDGET).unwrap();
                for k in 0..=g.n() {
                    assert_eq!(
                        min_rank_at_most(gf(p), &g, k, DEFAULT_BUDGET).unwrap(),
                        k >= mr
                    );
                }
            }
        }
    }

    #[test]
    fn p3_attaining_matrices_match_the_reference_list() {
        let set = min_rank_set(gf(2), &path(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(set.mr(), 2);
        let expected: Vec<FMatrix> = [
            [[0, 1, 0], [1, 0, 1], [0, 1, 0]],
            [[0, 1, 0], [1, 1, 1], [0, 1, 0]],
            [[1, 1, 0], [1, 0, 1], [0, 1, 1]],
        ]
        .iter()
        .map(|rows| {
            let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
            FMatrix::from_rows(gf(2), &refs).unwrap()
        })
        .collect();
        assert_eq!(set.matrices(), expected.as_slice());
    }

    #[test]
    fn p4_class_sizes() {
        let set = min_rank_set(gf(2), &path(4), DEFAULT_BUDGET).unwrap();
        assert_eq!(set.mr(), 3);
        assert_eq!(set.len(), 5);
        let mut sizes: Vec<usize> = set.classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2]);
    }

    #[test]
    fn three_k2_has_a_unique_attaining_matrix() {
        let set =
            min_rank_set(gf(2), &m_copies(3, &complete(2)).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(set.mr(), 3);
        assert_eq!(set.len(), 1);
        assert_eq!(set.classes().len(), 1);
    }

    #[test]
    fn from_matrices_validates() {
        let f = gf(2);
        let good = FMatrix::from_rows(f, &[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]).unwrap();
        let set = MRSet::from_matrices(f, path(3), vec![good], DEFAULT_BUDGET).unwrap();
        assert_eq!(set.mr(), 2);
        // a rank-3 member of S(P3) is rejected
        let bad = FMatrix::from_rows(f, &[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]).unwrap();
        assert!(MRSet::from_matrices(f, path(3), vec![bad], DEFAULT_BUDGET).is_err());
        // a matrix with the wrong pattern is rejected
        let off = FMatrix::from_rows(f, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        assert!(MRSet::from_matrices(f, path(3), vec![off], DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn cut_vertex_worked_examples() {
        assert_eq!(
            mr_via_cut_vertex(gf(2), &graph38(), DEFAULT_BUDGET).unwrap(),
            4
        );
        assert_eq!(
            mr_via_cut_vertex(gf(2), &graph39(), DEFAULT_BUDGET).unwrap(),
            4
        );
        assert_eq!(
            mr_via_cut_vertex(gf(3), &graph38(), DEFAULT_BUDGET).unwrap(),
            4
        );
        assert_eq!(
            mr_via_cut_vertex(gf(2), &path(4), DEFAULT_BUDGET).unwrap(),
            3
        );
        // disconnected: the component sum rule
        let g = path(3).disjoint_union(&complete(4)).unwrap();
        assert_eq!(mr_via_cut_vertex(gf(2), &g, DEFAULT_BUDGET).unwrap(), 3);
        // deleting a ladder corner leaves a rank-3 graph for any field
        let house = crate::graph::ladder_p3xp2().delete_vertex(2).unwrap();
        assert_eq!(min_rank(gf(2), &house, DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(min_rank(gf(3), &house, DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(mr_via_cut_vertex(gf(2), &house, DEFAULT_BUDGET).unwrap(), 3);
    }
}
