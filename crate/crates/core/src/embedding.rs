//! Rank behavior of a host graph over an embedded pattern subgraph.
//!
//! For a fixed induced copy of a pattern H inside a host G, every host
//! vertex outside the copy carries a 0/1 weight vector (its adjacencies
//! into the copy) and every pair of outside vertices carries a 0/1 edge
//! weight. Against each minimum-rank matrix M of H these weights either
//! preserve or increase the rank; the increase profile records which, the
//! rank-preserving table gives the unique preserving edge weights, and an
//! optimal triple is a minimum-cost witness that every M is increased.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FMatrix, FVector};
use crate::graph::Graph;
use crate::linalg;
use crate::minrank::MRSet;

/// An exact induced copy of `pattern` inside `host`: pattern vertex `i`
/// sits at host vertex `map[i]`, edge for edge.
#[derive(Debug, Clone)]
pub struct Embedding {
    host: Graph,
    pattern: Graph,
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(host: Graph, pattern: Graph, map: Vec<usize>) -> Result<Self> {
        if map.len() != pattern.n() {
            return Err(Error::DimensionMismatch(format!(
                "map covers {} vertices but the pattern has {}",
                map.len(),
                pattern.n()
            )));
        }
        for &v in &map {
            if v >= host.n() {
                return Err(Error::InvalidVertex { v, n: host.n() });
            }
        }
        let mut seen = vec![false; host.n()];
        for &v in &map {
            if seen[v] {
                return Err(Error::DimensionMismatch(format!(
                    "map is not injective at host vertex {v}"
                )));
            }
            seen[v] = true;
        }
        for i in 0..pattern.n() {
            for j in i + 1..pattern.n() {
                if pattern.has_edge(i, j) != host.has_edge(map[i], map[j]) {
                    return Err(Error::DimensionMismatch(
                        "map is not an exact induced copy of the pattern".into(),
                    ));
                }
            }
        }
        Ok(Embedding { host, pattern, map })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Host vertices outside the copy, ascending.
    pub fn complement_vertices(&self) -> Vec<usize> {
        (0..self.host.n())
            .filter(|v| !self.map.contains(v))
            .collect()
    }

    /// wt(v): the vector of adjacencies from host vertex `v` to the copy,
    /// ordered by pattern label.
    pub fn vertex_weight(&self, field: FieldSpec, v: usize) -> Result<FVector> {
        if v >= self.host.n() {
            return Err(Error::InvalidVertex {
                v,
                n: self.host.n(),
            });
        }
        FVector::new(
            field,
            self.map
                .iter()
                .map(|&h| u8::from(self.host.has_edge(v, h)))
                .collect(),
        )
    }

    /// wt(uv): 1 iff uv is an edge of the host.
    pub fn pair_weight(&self, u: usize, v: usize) -> u8 {
        u8::from(self.host.has_edge(u, v))
    }
}

/// All induced copies of `pattern` in `host`, one per vertex subset, in
/// lexicographic subset order; each copy uses the lexicographically
/// smallest vertex map.
pub fn find_embeddings(host: &Graph, pattern: &Graph) -> Vec<Embedding> {
    let mut out = Vec::new();
    if pattern.n() > host.n() {
        return out;
    }
    crate::canon::for_each_subset(host.n(), pattern.n(), &mut |subset| {
        if let Some(map) = lex_min_map(host, pattern, subset) {
            out.push(Embedding {
                host: *host,
                pattern: *pattern,
                map,
            });
        }
    });
    out
}

/// Lexicographically smallest exact map of `pattern` onto the host
/// subset, if the subset induces a copy of the pattern.
fn lex_min_map(host: &Graph, pattern: &Graph, subset: &[usize]) -> Option<Vec<usize>> {
    fn place(
        host: &Graph,
        pattern: &Graph,
        subset: &[usize],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for (k, &cand) in subset.iter().enumerate() {
            if used[k] {
                continue;
            }
            if (0..i).all(|j| pattern.has_edge(j, i) == host.has_edge(map[j], cand)) {
                map.push(cand);
                used[k] = true;
                if place(host, pattern, subset, map, used) {
                    return true;
                }
                used[k] = false;
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::with_capacity(pattern.n());
    let mut used = vec![false; subset.len()];
    place(host, pattern, subset, &mut map, &mut used).then_some(map)
}

/// P = A^T M A for witnesses A of the given weights: entry ij is the
/// unique edge weight that keeps a pair with weights (w_i, w_j)
/// rank-preserving with respect to M.
///
/// Any witness gives the same table when the weights lie in col(M) and M
/// is symmetric; the tests cover that independence rather than assuming
/// it silently.
pub fn rank_preserving_table(m: &FMatrix, weights: &[FVector]) -> Result<FMatrix> {
    let field = m.field();
    let mut witnesses = Vec::with_capacity(weights.len());
    for (index, w) in weights.iter().enumerate() {
        match linalg::col_space_contains(m, w)? {
            Some(a) => witnesses.push(a),
            None => return Err(Error::WeightOutsideColumnSpace { index }),
        }
    }
    let images: Vec<FVector> = witnesses
        .iter()
        .map(|a| m.mul_vector(a))
        .collect::<Result<_>>()?;
    let k = weights.len();
    let mut table = FMatrix::zeros(field, k, k);
    for (i, witness) in witnesses.iter().enumerate() {
        for (j, image) in images.iter().enumerate() {
            let mut acc = 0u8;
            for t in 0..m.rows() {
                acc = field.add(acc, field.mul(witness.get(t), image.get(t)));
            }
            table.set(i, j, acc);
        }
    }
    Ok(table)
}

/// Which minimum-rank matrices of the pattern are rank-increased by each
/// outside vertex and each outside pair.
///
/// Matrix subsets are bitmasks over the indices of the MRSet (capped at
/// 128 matrices). Pairs range over all 2-subsets of the outside vertices;
/// their weights are read from the host, so both edges and non-edges
/// participate.
#[derive(Debug, Clone)]
pub struct IncreaseProfile {
    vertices: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    i_vertex: Vec<u128>,
    i_pair: Vec<u128>,
    pair_weights: Vec<u8>,
    n_matrices: usize,
    class_of: Vec<usize>,
    n_classes: usize,
}

pub fn increase_profile(embedding: &Embedding, mrset: &MRSet) -> Result<IncreaseProfile> {
    if mrset.graph() != embedding.pattern() {
        return Err(Error::DimensionMismatch(
            "the minimum-rank set belongs to a different pattern graph".into(),
        ));
    }
    if mrset.len() > 128 {
        return Err(Error::SizeLimit {
            n: mrset.len(),
            limit: 128,
            what: "increase_profile matrix subsets",
        });
    }
    let field = mrset.field();
    let mr = mrset.mr();
    let vertices = embedding.complement_vertices();
    let weights: Vec<FVector> = vertices
        .iter()
        .map(|&v| embedding.vertex_weight(field, v))
        .collect::<Result<_>>()?;

    let mut i_vertex = vec![0u128; vertices.len()];
    for (vi, w) in weights.iter().enumerate() {
        for (mi, m) in mrset.matrices().iter().enumerate() {
            if linalg::rank(&m.with_column(w)?) > mr {
                i_vertex[vi] |= 1 << mi;
            }
        }
    }

    let mut pairs = Vec::new();
    let mut i_pair = Vec::new();
    let mut pair_weights = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let (u, v) = (vertices[a], vertices[b]);
            let c = embedding.pair_weight(u, v);
            let mut mask = 0u128;
            for (mi, m) in mrset.matrices().iter().enumerate() {
                if linalg::bordered_rank(m, &weights[a], &weights[b], c)? > mr {
                    mask |= 1 << mi;
                }
            }
            pairs.push((u, v));
            i_pair.push(mask);
            pair_weights.push(c);
        }
    }

    let mut class_of = vec![0usize; mrset.len()];
    for (ci, class) in mrset.classes().iter().enumerate() {
        for &mi in class {
            class_of[mi] = ci;
        }
    }
    Ok(IncreaseProfile {
        vertices,
        pairs,
        i_vertex,
        i_pair,
        pair_weights,
        n_matrices: mrset.len(),
        class_of,
        n_classes: mrset.classes().len(),
    })
}

impl IncreaseProfile {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn n_matrices(&self) -> usize {
        self.n_matrices
    }

    pub fn n_classes(&self) -> usize {
        self.n_classes
    }

    pub fn full_mask(&self) -> u128 {
        if self.n_matrices == 128 {
            u128::MAX
        } else {
            (1u128 << self.n_matrices) - 1
        }
    }

    /// I_v for a host vertex outside the copy.
    pub fn i_of_vertex(&self, v: usize) -> u128 {
        let idx = self
            .vertices
            .iter()
            .position(|&u| u == v)
            .expect("vertex outside the copy");
        self.i_vertex[idx]
    }

    /// I_uv for a pair of host vertices outside the copy.
    pub fn i_of_pair(&self, u: usize, v: usize) -> u128 {
        self.i_pair[self.pair_index(u, v)]
    }

    pub fn weight_of_pair(&self, u: usize, v: usize) -> u8 {
        self.pair_weights[self.pair_index(u, v)]
    }

    fn pair_index(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.pairs
            .iter()
            .position(|&p| p == key)
            .expect("pair outside the copy")
    }

    /// I_V: union over a vertex set.
    pub fn i_of_vertex_set(&self, set: &[usize]) -> u128 {
        set.iter().fold(0, |acc, &v| acc | self.i_of_vertex(v))
    }

    /// I_R: union over a pair set.
    pub fn i_of_pair_set(&self, set: &[(usize, usize)]) -> u128 {
        set.iter()
            .fold(0, |acc, &(u, v)| acc | self.i_of_pair(u, v))
    }

    /// Class-level set: the classes all of whose matrices lie in `mask`.
    pub fn classes_contained(&self, mask: u128) -> Vec<usize> {
        let mut class_masks = vec![0u128; self.n_classes];
        for (mi, &ci) in self.class_of.iter().enumerate() {
            class_masks[ci] |= 1 << mi;
        }
        (0..self.n_classes)
            .filter(|&ci| class_masks[ci] & mask == class_masks[ci])
            .collect()
    }

    /// Is `mask` an exact union of column-space classes?
    pub fn is_class_union(&self, mask: u128) -> bool {
        let contained = self.classes_contained(mask);
        let mut rebuilt = 0u128;
        for (mi, &ci) in self.class_of.iter().enumerate() {
            if contained.contains(&ci) {
                rebuilt |= 1 << mi;
            }
        }
        rebuilt == mask
    }
}

/// A minimum-cost certificate that every minimum-rank matrix of the
/// pattern is rank-increased: pairs R with endpoint set S and vertices T
/// such that I_R u I_T covers everything, minimizing
/// (2|R| + |T|, |R|, |S|) lexicographically, tie-broken by the sorted
/// pair and vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalTriple {
    pub pairs: Vec<(usize, usize)>,
    pub endpoints: Vec<usize>,
    pub vertices: Vec<usize>,
    pub objective: (usize, usize, usize),
    /// True when some pair in R is a host non-edge (weight 0).
    pub uses_zero_weight_pair: bool,
}

/// Exhaustive optimal-triple search over at most 6 outside vertices.
/// Returns `None` when no (R, T) covers all of MR(H), which certifies
/// that the host's minimum rank equals the pattern's.
pub fn find_optimal_triple(embedding: &Embedding, mrset: &MRSet) -> Result<Option<OptimalTriple>> {
    let profile = increase_profile(embedding, mrset)?;
    find_optimal_triple_in(&profile)
}

/// Same search on a precomputed profile.
pub fn find_optimal_triple_in(profile: &IncreaseProfile) -> Result<Option<OptimalTriple>> {
    let m = profile.vertices.len();
    if m > 6 {
        return Err(Error::SizeLimit {
            n: m,
            limit: 6,
            what: "optimal triple search over the outside vertices",
        });
    }
    let full = profile.full_mask();
    let np = profile.pairs.len();

    // union of I over every subset, by lowest-set-bit recurrence
    let mut pair_union = vec![0u128; 1 << np];
    for s in 1usize..(1 << np) {
        let low = s.trailing_zeros() as usize;
        pair_union[s] = pair_union[s & (s - 1)] | profile.i_pair[low];
    }
    let mut vertex_union = vec![0u128; 1 << m];
    for s in 1usize..(1 << m) {
        let low = s.trailing_zeros() as usize;
        vertex_union[s] = vertex_union[s & (s - 1)] | profile.i_vertex[low];
    }

    if pair_union[(1 << np) - 1] | vertex_union[(1 << m) - 1] != full {
        return Ok(None);
    }

    type Candidate = (
        (usize, usize, usize),
        Vec<(usize, usize)>,
        Vec<usize>,
        Vec<usize>,
    );
    let mut best: Option<Candidate> = None;
    for (r_mask, &i_r) in pair_union.iter().enumerate() {
        let r_size = r_mask.count_ones() as usize;
        for (t_mask, &i_t) in vertex_union.iter().enumerate() {
            if i_r | i_t != full {
                continue;
            }
            let t_size = t_mask.count_ones() as usize;
            let pairs: Vec<(usize, usize)> = (0..np)
                .filter(|k| r_mask >> k & 1 == 1)
                .map(|k| profile.pairs[k])
                .collect();
            let mut endpoints: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
            endpoints.sort_unstable();
            endpoints.dedup();
            let objective = (2 * r_size + t_size, r_size, endpoints.len());
            let vertices: Vec<usize> = (0..m)
                .filter(|k| t_mask >> k & 1 == 1)
                .map(|k| profile.vertices[k])
                .collect();
            let candidate = (objective, pairs, endpoints, vertices);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    Ok(best.map(|(objective, pairs, endpoints, vertices)| {
        let uses_zero_weight_pair = pairs
            .iter()
            .any(|&(u, v)| profile.weight_of_pair(u, v) == 0);
        OptimalTriple {
            pairs,
            endpoints,
            vertices,
            objective,
            uses_zero_weight_pair,
        }
    }))
}

/// The minimality conclusions every optimal triple must satisfy: no
/// vertex of T is redundant against T \ {v} and S, and no pair of R is
/// redundant against R \ {uv}, S, and T.
pub fn triple_conclusions_hold(profile: &IncreaseProfile, triple: &OptimalTriple) -> bool {
    let i_s = profile.i_of_vertex_set(&triple.endpoints);
    let i_t = profile.i_of_vertex_set(&triple.vertices);
    for &v in &triple.vertices {
        let rest: Vec<usize> = triple
            .vertices
            .iter()
            .copied()
            .filter(|&u| u != v)
            .collect();
        let cover = profile.i_of_vertex_set(&rest) | i_s;
        if profile.i_of_vertex(v) & !cover == 0 {
            return false;
        }
    }
    for &(u, v) in &triple.pairs {
        let rest: Vec<(usize, usize)> = triple
            .pairs
            .iter()
            .copied()
            .filter(|&e| e != (u, v))
            .collect();
        let cover = profile.i_of_pair_set(&rest) | i_s | i_t;
        if profile.i_of_pair(u, v) & !cover == 0 {
            return false;
        }
    }
    true
}

/// Status of the four structural properties of an (R, S, T) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleProperties {
    /// I_S and I_T are unions of column-space classes.
    pub p1: bool,
    /// I_S is contained in I_R.
    pub p2: bool,
    /// The class-level sets of S and T do not cover all classes.
    pub p3: bool,
    /// Some class lies inside I_R \ I_S.
    pub p4: bool,
}

pub fn triple_properties(profile: &IncreaseProfile, triple: &OptimalTriple) -> TripleProperties {
    let i_s = profile.i_of_vertex_set(&triple.endpoints);
    let i_t = profile.i_of_vertex_set(&triple.vertices);
    let i_r = profile.i_of_pair_set(&triple.pairs);
    let p1 = profile.is_class_union(i_s) && profile.is_class_union(i_t);
    let p2 = i_s & !i_r == 0;
    let covered: Vec<usize> = {
        let mut c = profile.classes_contained(i_s);
        c.extend(profile.classes_contained(i_t));
        c.sort_unstable();
        c.dedup();
        c
    };
    let p3 = covered.len() < profile.n_classes;
    let p4 = !profile.classes_contained(i_r & !i_s).is_empty();
    TripleProperties { p1, p2, p3, p4 }
}
