//! Simple undirected graphs on at most 16 vertices.
//!
//! Adjacency is a row of bitmasks: bit `j` of `adj[i]` is set iff `ij` is
//! an edge. Rows are symmetric, the diagonal is zero, and bits at
//! positions `>= n` are zero.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u16; MAX_VERTICES],
}

/// Vertex-connectivity trichotomy used by the catalog reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectivityClass {
    Disconnected,
    HasCutVertex,
    TwoConnected,
}

impl fmt::Display for ConnectivityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConnectivityClass::Disconnected => "disconnected",
            ConnectivityClass::HasCutVertex => "cut_vertex",
            ConnectivityClass::TwoConnected => "two_connected",
        };
        f.write_str(s)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                n,
                limit: MAX_VERTICES,
                what: "Graph",
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Graph6(format!("loop at vertex {u} is not allowed")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] & (1 << v) != 0
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Relabel by `perm`: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        let full = if self.n == 16 {
            u16::MAX
        } else {
            (1u16 << self.n) - 1
        };
        for i in 0..self.n {
            g.adj[i] = !self.adj[i] & full & !(1 << i);
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for i in 0..self.n {
            g.adj[i] = self.adj[i];
        }
        for i in 0..other.n {
            g.adj[self.n + i] = other.adj[i] << self.n;
        }
        Ok(g)
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..g.n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Glue `other` onto `self`, identifying vertex `u` of `self` with
    /// vertex `v` of `other`. Both graphs must have at least 2 vertices.
    pub fn vertex_sum(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        if self.n < 2 || other.n < 2 {
            return Err(Error::DimensionMismatch(
                "vertex sum requires both graphs to have at least 2 vertices".into(),
            ));
        }
        let n = self.n + other.n - 1;
        let mut g = Graph::empty(n)?;
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        // Vertices of `other` except `v` take labels self.n .. n, keeping
        // their relative order; `v` maps onto `u`.
        let map = |w: usize| -> usize {
            if w == v {
                u
            } else if w < v {
                self.n + w
            } else {
                self.n + w - 1
            }
        };
        for (a, b) in other.edges() {
            g.add_edge(map(a), map(b));
        }
        Ok(g)
    }

    /// Subgraph induced by the vertex set `keep`; retained vertices are
    /// relabeled 0.. in increasing order of their original index.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut sorted: Vec<usize> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(sorted.len())?;
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u16;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u16 << start;
            loop {
                let mut grown = comp;
                for v in 0..self.n {
                    if comp & (1 << v) != 0 {
                        grown |= self.adj[v];
                    }
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push((0..self.n).filter(|&v| comp & (1 << v) != 0).collect());
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Cut vertices of a connected graph, in ascending order. For a
    /// disconnected graph this returns vertices whose removal increases
    /// the component count.
    pub fn cut_vertices(&self) -> Vec<usize> {
        if self.n < 3 {
            return Vec::new();
        }
        let base = self.components().len();
        (0..self.n)
            .filter(|&v| {
                self.delete_vertex(v)
                    .map(|g| g.components().len() > base)
                    .unwrap_or(false)
            })
            .collect()
    }

    pub fn connectivity_class(&self) -> ConnectivityClass {
        if !self.is_connected() {
            ConnectivityClass::Disconnected
        } else if !self.cut_vertices().is_empty() {
            ConnectivityClass::HasCutVertex
        } else {
            ConnectivityClass::TwoConnected
        }
    }
}

// --- constructors for the named graphs used throughout -----------------

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).expect("path size within bounds")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete size within bounds")
}

/// Complete multipartite graph; parts take consecutive label blocks.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let n: usize = sizes.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut starts = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        starts.push(acc);
        acc += s;
    }
    for (a, (&sa, &oa)) in sizes.iter().zip(&starts).enumerate() {
        for (&sb, &ob) in sizes.iter().zip(&starts).skip(a + 1) {
            for u in oa..oa + sa {
                for v in ob..ob + sb {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// `m` disjoint copies of `g`.
pub fn m_copies(m: usize, g: &Graph) -> Result<Graph> {
    let mut out = Graph::empty(0)?;
    for _ in 0..m {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

/// The full house: a triangle stacked on a 4-clique, 5 vertices,
/// edges {01, 02, 12, 13, 14, 23, 24, 34}.
pub fn full_house() -> Graph {
    Graph::from_edges(
        5,
        &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    )
    .unwrap()
}

/// The dart: edges {01, 12, 13, 14, 23, 34}.
pub fn dart() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap()
}

/// The ltimes graph: a 4-star with one edge between two leaves,
/// edges {01, 02, 03, 04, 34}.
pub fn ltimes() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

/// The 2x3 grid ("ladder"), labeled so that {0,1,2,3} and {0,1,4,5}
/// both induce paths: 0,1,2 across the top (1 the corner), 3,4,5 across
/// the bottom.
pub fn ladder_p3xp2() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (0, 4), (1, 3), (3, 4), (4, 5), (2, 5)],
    )
    .unwrap()
}

/// The join of two 3-paths, labeled with the paths 0-2-4 and 1-3-5, so
/// the only non-edges are {0,4} and {1,5}.
pub fn p3_join_p3() -> Graph {
    let mut edges = complete(6).edges();
    edges.retain(|&e| e != (0, 4) && e != (1, 5));
    Graph::from_edges(6, &edges).unwrap()
}

/// Two triangles and two pendant edges sharing one vertex (7 vertices).
pub fn graph38() -> Graph {
    let k3 = complete(3);
    let k2 = complete(2);
    let g = k3.vertex_sum(0, &k3, 0).unwrap();
    let g = g.vertex_sum(0, &k2, 0).unwrap();
    g.vertex_sum(0, &k2, 0).unwrap()
}

/// K_{2,4} plus an edge on the large side plus a pendant on the small
/// side (7 vertices).
pub fn graph39() -> Graph {
    let h = Graph::from_edges(
        6,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (4, 5),
        ],
    )
    .unwrap();
    h.vertex_sum(0, &complete(2), 0).unwrap()
}

/// Complement of two disjoint 3-paths (6 vertices).
pub fn hexad_complement_2p3() -> Graph {
    m_copies(2, &path(3)).unwrap().complement()
}

/// Complement of P3 u K2 u K1 (6 vertices).
pub fn hexad_complement_p3_k2_k1() -> Graph {
    path(3)
        .disjoint_union(&complete(2))
        .unwrap()
        .disjoint_union(&Graph::empty(1).unwrap())
        .unwrap()
        .complement()
}

/// Look up a graph by name: `p5`, `k4`, `3k2`, `k3,3,3`, `full_house`,
/// `dart`, `ltimes`, `p3vp3`, `p3uk2`, `ladder`, `graph38`, `graph39`,
/// `g1`, `g2`.
pub fn named(name: &str) -> Option<Graph> {
    let name = name.trim().to_ascii_lowercase();
    match name.as_str() {
        "full_house" | "fullhouse" => return Some(full_house()),
        "dart" => return Some(dart()),
        "ltimes" => return Some(ltimes()),
        "p3vp3" => return Some(p3_join_p3()),
        "p3uk2" => return Some(path(3).disjoint_union(&complete(2)).unwrap()),
        "ladder" => return Some(ladder_p3xp2()),
        "graph38" => return Some(graph38()),
        "graph39" => return Some(graph39()),
        "g1" => return Some(hexad_complement_2p3()),
        "g2" => return Some(hexad_complement_p3_k2_k1()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('p') {
        if let Ok(n) = rest.parse::<usize>() {
            if n <= MAX_VERTICES {
                return Some(path(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix('k') {
        if rest.contains(',') {
            let sizes: Option<Vec<usize>> = rest.split(',').map(|s| s.parse().ok()).collect();
            if let Some(sizes) = sizes {
                if sizes.iter().sum::<usize>() <= MAX_VERTICES {
                    return complete_multipartite(&sizes).ok();
                }
            }
        } else if let Ok(n) = rest.parse::<usize>() {
            if n <= MAX_VERTICES {
                return Some(complete(n));
            }
        }
    }
    // mKn: m copies of the complete graph on n vertices
    if let Some(kpos) = name.find('k') {
        let (m_str, rest) = name.split_at(kpos);
        if let (Ok(m), Ok(n)) = (m_str.parse::<usize>(), rest[1..].parse::<usize>()) {
            if m * n <= MAX_VERTICES {
                return m_copies(m, &complete(n)).ok();
            }
        }
    }
    None
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        write!(f, "Graph(n={}, edges=[{}])", self.n, edges.join(","))
    }
}
