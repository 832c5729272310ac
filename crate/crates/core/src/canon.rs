//! Canonical forms and isomorphism for graphs on at most 10 vertices.
//!
//! The canonical form of a graph is the lexicographically minimal
//! upper-triangle adjacency bit string (column-major, the graph6 bit
//! order) over all vertex relabelings that list the vertices in
//! non-decreasing order of an invariant key (degree, then the sorted
//! multiset of neighbor degrees). Restricting to key-ordered relabelings
//! is sound because the key is an isomorphism invariant, and it prunes
//! the permutation search hard on irregular graphs.
//!
//! The search is branch-and-bound on string prefixes, with one extra
//! rule: interchangeable vertices (twins) are tried only once per node.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

pub const MAX_CANON_VERTICES: usize = 10;

/// Permutation-invariant representative encoding of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The minimal bit string packed into a u64, first bit highest.
    pub fn code(&self) -> u64 {
        self.code
    }

    /// Byte-string form: the graph6 encoding of the canonical relabeling.
    pub fn bytes(&self) -> Vec<u8> {
        graph6::encode(&self.to_graph()).into_bytes()
    }

    /// The canonically labeled graph this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let len = n * n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (len - 1 - idx) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical form within bounds")
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    len: usize,
    /// vertices grouped by invariant class, ordered by ascending key;
    /// position k must take a vertex from class_of_position[k]
    class_of_position: Vec<usize>,
    class_members: Vec<Vec<usize>>,
    best: u64,
    best_perm: Vec<usize>,
    /// placement[d] = vertex assigned to position d
    placement: Vec<usize>,
    used: u16,
}

impl<'a> Search<'a> {
    fn invariant_classes(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = g.n();
        let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nd: Vec<usize> = (0..n)
                    .filter(|&u| g.has_edge(u, v))
                    .map(|u| degree[u])
                    .collect();
                nd.sort_unstable();
                (degree[v], nd)
            })
            .collect();
        let mut distinct: Vec<(usize, Vec<usize>)> = keys.clone();
        distinct.sort();
        distinct.dedup();
        let mut class_members: Vec<Vec<usize>> = vec![Vec::new(); distinct.len()];
        for (v, key) in keys.iter().enumerate() {
            let c = distinct.binary_search(key).unwrap();
            class_members[c].push(v);
        }
        let mut class_of_position = Vec::with_capacity(n);
        for (c, members) in class_members.iter().enumerate() {
            class_of_position.extend(std::iter::repeat_n(c, members.len()));
        }
        (class_of_position, class_members)
    }

    /// Are u and w twins, i.e. is swapping them an automorphism?
    fn twins(&self, u: usize, w: usize) -> bool {
        let mask = !((1u16 << u) | (1u16 << w));
        self.g.neighbors(u) & mask == self.g.neighbors(w) & mask
    }

    fn descend(&mut self, depth: usize, prefix: u64, prefix_bits: usize) {
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_perm = self.placement.clone();
            }
            return;
        }
        let class = self.class_of_position[depth];
        let candidates: Vec<usize> = self.class_members[class]
            .iter()
            .copied()
            .filter(|&v| self.used & (1 << v) == 0)
            .collect();
        let mut tried: Vec<usize> = Vec::with_capacity(candidates.len());
        for v in candidates {
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            // bits of v against the already placed vertices, in position order
            let mut ext = prefix;
            for d in 0..depth {
                ext = (ext << 1) | u64::from(self.g.has_edge(self.placement[d], v));
            }
            let ext_bits = prefix_bits + depth;
            // prune: compare against the best string's prefix of equal length
            if ext > self.best >> (self.len - ext_bits) {
                continue;
            }
            self.placement.push(v);
            self.used |= 1 << v;
            self.descend(depth + 1, ext, ext_bits);
            self.used &= !(1 << v);
            self.placement.pop();
        }
    }
}

fn canonicalize(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: MAX_CANON_VERTICES,
            what: "canonical_form",
        });
    }
    if n <= 1 {
        return Ok((
            CanonicalForm {
                n: n as u8,
                code: 0,
            },
            (0..n).collect(),
        ));
    }
    let (class_of_position, class_members) = Search::invariant_classes(g);
    let len = n * (n - 1) / 2;
    let mut search = Search {
        g,
        n,
        len,
        class_of_position,
        class_members,
        best: u64::MAX >> (64 - len),
        best_perm: Vec::new(),
        placement: Vec::with_capacity(n),
        used: 0,
    };
    // Seed the incumbent with the greedy class-ordered placement so the
    // bound is tight from the start.
    let greedy: Vec<usize> = search.class_members.iter().flatten().copied().collect();
    let mut seed = 0u64;
    for j in 1..n {
        for i in 0..j {
            seed = (seed << 1) | u64::from(g.has_edge(greedy[i], greedy[j]));
        }
    }
    search.best = seed;
    search.best_perm = greedy;
    search.descend(0, 0, 0);
    let code = search.best;
    // best_perm lists, for each position, the original vertex; invert it
    // to get the relabeling map vertex -> position.
    let mut perm = vec![0usize; n];
    for (pos, &v) in search.best_perm.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((
        CanonicalForm {
            n: n as u8,
            code,
        },
        perm,
    ))
}

/// Canonical form of `g` (graphs on at most 10 vertices).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonicalize(g).map(|(c, _)| c)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonicalize(g)?;
    g.relabel(&perm)
}

/// graph6 code of the canonical relabeling; the catalog file format key.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    Ok(graph6::encode(&canonical_graph(g)?))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        // still enforce the size contract before answering
        if a.n().max(b.n()) > MAX_CANON_VERTICES {
            return Err(Error::SizeLimit {
                n: a.n().max(b.n()),
                limit: MAX_CANON_VERTICES,
                what: "is_isomorphic",
            });
        }
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Does `g` contain an induced copy of `h`?
///
/// Subset enumeration over |h|-subsets of V(g) with a degree-sequence
/// prefilter before the canonical comparison.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(Error::SizeLimit {
            n: g.n(),
            limit: MAX_CANON_VERTICES,
            what: "contains_induced",
        });
    }
    if h.n() > g.n() {
        return Ok(false);
    }
    if h.n() == 0 {
        return Ok(true);
    }
    let target = canonical_form(h)?;
    let mut h_degrees: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    h_degrees.sort_unstable();
    let mut found = false;
    for_each_subset(g.n(), h.n(), &mut |subset| {
        if found {
            return;
        }
        let induced = g.induced_subgraph(subset).expect("subset within range");
        if induced.edge_count() != h.edge_count() {
            return;
        }
        let mut degrees: Vec<usize> = induced.vertices().map(|v| induced.degree(v)).collect();
        degrees.sort_unstable();
        if degrees != h_degrees {
            return;
        }
        if canonical_form(&induced).expect("induced graph within size cap") == target {
            found = true;
        }
    });
    Ok(found)
}

/// Visit all k-subsets of 0..n in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        f(&subset);
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}
