//! Cross-module invariants: rank inequalities under vertex deletion,
//! induced-subgraph monotonicity, the disconnected sum rule, coherence
//! between rank-preserving tables and bordered ranks, and the
//! self-consistency of the graph generator.

use minrank_core::canon::canonical_form;
use minrank_core::embedding::rank_preserving_table;
use minrank_core::field::{FieldSpec, FVector};
use minrank_core::forbidden::generate_levels;
use minrank_core::graph::{complete, path, Graph};
use minrank_core::graph6;
use minrank_core::linalg::{bordered_rank, rank};
use minrank_core::minrank::{min_rank, min_rank_set, s_count, DEFAULT_BUDGET};

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf(p: u8) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p_edge: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn deletion_inequality_over_gf2_and_gf3() {
    // mr(G - v) <= mr(G) <= mr(G - v) + 2 for every vertex
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for p in [2u8, 3] {
        let field = gf(p);
        let mut checked = 0;
        while checked < 200 {
            let n = rng.gen_range(2..=7);
            let g = random_graph(&mut rng, n, 0.35);
            // keep the GF(3) cases inside a snappy enumeration size
            if s_count(field, &g) > 2_000_000 {
                continue;
            }
            let mr = min_rank(field, &g, DEFAULT_BUDGET).unwrap();
            for v in 0..n {
                let del = min_rank(field, &g.delete_vertex(v).unwrap(), DEFAULT_BUDGET).unwrap();
                assert!(del <= mr, "deletion increased rank: {g} at {v}");
                assert!(mr <= del + 2, "deletion dropped rank by 3+: {g} at {v}");
            }
            checked += 1;
        }
    }
}

#[test]
fn induced_subgraph_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(419);
    for p in [2u8, 3] {
        let field = gf(p);
        for _ in 0..120 {
            let n = rng.gen_range(2..=6);
            let g = random_graph(&mut rng, n, 0.5);
            let keep: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
            let sub = g.induced_subgraph(&keep).unwrap();
            let mr_g = min_rank(field, &g, DEFAULT_BUDGET).unwrap();
            let mr_sub = min_rank(field, &sub, DEFAULT_BUDGET).unwrap();
            assert!(mr_sub <= mr_g, "induced {sub} of {g} has larger rank");
        }
    }
}

#[test]
fn disconnected_union_adds_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(431);
    let field = gf(2);
    for _ in 0..100 {
        let na = rng.gen_range(1..=5);
        let nb = rng.gen_range(1..=5);
        let a = random_graph(&mut rng, na, 0.5);
        let b = random_graph(&mut rng, nb, 0.5);
        let u = a.disjoint_union(&b).unwrap();
        let mr_a = min_rank(field, &a, DEFAULT_BUDGET).unwrap();
        let mr_b = min_rank(field, &b, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            min_rank(field, &u, DEFAULT_BUDGET).unwrap(),
            mr_a + mr_b,
            "union of {a} and {b}"
        );
    }
}

#[test]
fn table_entries_are_the_unique_preserving_weights() {
    // with weights inside col(M), the bordered matrix keeps rank M exactly
    // at the table entry and gains one at every other field element
    let mut rng = ChaCha8Rng::seed_from_u64(443);
    for (p, g) in [(2u8, path(3)), (2, path(4)), (3, path(3)), (3, complete(3))] {
        let field = gf(p);
        let set = min_rank_set(field, &g, DEFAULT_BUDGET).unwrap();
        for m in set.matrices() {
            for _ in 0..20 {
                let x1 = FVector::new(
                    field,
                    (0..g.n()).map(|_| rng.gen_range(0..p)).collect(),
                )
                .unwrap();
                let x2 = FVector::new(
                    field,
                    (0..g.n()).map(|_| rng.gen_range(0..p)).collect(),
                )
                .unwrap();
                let w1 = m.mul_vector(&x1).unwrap();
                let w2 = m.mul_vector(&x2).unwrap();
                let table = rank_preserving_table(m, &[w1.clone(), w2.clone()]).unwrap();
                let keep = table.get(0, 1);
                let r = rank(m);
                assert_eq!(bordered_rank(m, &w1, &w2, keep).unwrap(), r);
                for other in field.elements().filter(|&c| c != keep) {
                    assert_eq!(bordered_rank(m, &w1, &w2, other).unwrap(), r + 1);
                }
            }
        }
    }
}

#[test]
fn generation_self_consistency_at_eight_vertices() {
    // grow level 8 twice: once from the canonical level-7 members and once
    // from randomly relabeled copies; both orders must produce the same set
    let levels = generate_levels(7).unwrap();
    let level7 = levels.last().unwrap();
    assert_eq!(level7.len(), 1044);

    let mut rng = ChaCha8Rng::seed_from_u64(467);
    let shuffled: Vec<Graph> = level7
        .members()
        .iter()
        .map(|g| {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            g.relabel(&perm).unwrap()
        })
        .collect();

    let grow = |bases: &[Graph]| {
        let mut forms = std::collections::HashSet::new();
        for g in bases {
            for mask in 0u32..(1 << g.n()) {
                let mut edges = g.edges();
                for v in 0..g.n() {
                    if mask >> v & 1 == 1 {
                        edges.push((v, g.n()));
                    }
                }
                let grown = Graph::from_edges(g.n() + 1, &edges).unwrap();
                forms.insert(canonical_form(&grown).unwrap());
            }
        }
        forms
    };

    let from_canonical = grow(level7.members());
    let from_shuffled = grow(&shuffled);
    assert_eq!(from_canonical, from_shuffled);
    assert_eq!(from_canonical.len(), generate_levels(8).unwrap()[7].len());
}

// --- property tests ------------------------------------------------------

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let bits = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), bits))
        })
        .prop_map(|(n, mask)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(16)) {
        let line = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&line).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(16)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn canonical_form_survives_relabeling(g in arb_graph(8), seed in any::<u64>()) {
        prop_assume!(g.n() >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn vertex_sum_then_deletion_splits(
        a in arb_graph(6),
        b in arb_graph(6),
        ua in any::<usize>(),
        vb in any::<usize>(),
    ) {
        prop_assume!(a.n() >= 2 && b.n() >= 2);
        let u = ua % a.n();
        let v = vb % b.n();
        let sum = a.vertex_sum(u, &b, v).unwrap();
        let cut = sum.delete_vertex(u).unwrap();
        let parts = a
            .delete_vertex(u)
            .unwrap()
            .disjoint_union(&b.delete_vertex(v).unwrap())
            .unwrap();
        // same graph up to the block relabeling: compare canonically
        prop_assert_eq!(
            canonical_form(&cut).unwrap(),
            canonical_form(&parts).unwrap()
        );
    }
}
