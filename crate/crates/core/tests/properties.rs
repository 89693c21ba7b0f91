use mongraph::algebra::{cayley_digraph, validate_table};
use mongraph::digraph::{canonical_form_digraph, canonical_form_simple};
use mongraph::embed::{embed_monoid, greedy_cover};
use mongraph::graph::{Digraph, Graph, SimpleGraph};
use mongraph::invariants::{
    arboricity, beta, beta_upper_bound, beta_work, pseudoarboricity, pseudoarboricity_by_subsets,
    spectrum, Rational,
};
use mongraph::record::WitnessRecord;
use mongraph::zelinka;
use proptest::prelude::*;

fn simple_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn functional(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n).prop_map(|succ| Digraph::from_successors(&succ).unwrap())
    })
}

fn sink_free(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=3.min(n)), n).prop_map(
            move |outs| {
                Digraph::from_arcs(
                    n,
                    outs.iter()
                        .enumerate()
                        .flat_map(|(u, s)| s.iter().map(move |&v| (u, v))),
                )
                .unwrap()
            },
        )
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Circulant graph on `n` vertices with jumps `s`: always regular.
fn circulant() -> impl Strategy<Value = SimpleGraph> {
    (4usize..=10).prop_flat_map(|n| {
        proptest::collection::btree_set(1..=n / 2, 1..=2).prop_map(move |jumps| {
            let mut g = SimpleGraph::new(n);
            for v in 0..n {
                for &j in &jumps {
                    let w = (v + j) % n;
                    if !g.has_edge(v, w) {
                        g.add_edge(v, w).unwrap();
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zelinka_round_trips(g in functional(8)) {
        let p = zelinka::profile(&g).unwrap();
        let monoid = zelinka::decide_monoid(&p).is_some();
        let semigroup = zelinka::decide_semigroup(&p).is_some();
        prop_assert!(!monoid || semigroup);
        if monoid {
            let w = zelinka::construct_monoid(&g).unwrap();
            prop_assert_eq!(cayley_digraph(&w.table, &w.connection).unwrap(), g.clone());
        }
        if semigroup {
            let w = zelinka::construct_semigroup(&g).unwrap();
            prop_assert!(validate_table(&w.table).is_ok());
            prop_assert_eq!(cayley_digraph(&w.table, &w.connection).unwrap(), g.clone());
        } else {
            prop_assert!(zelinka::construct_semigroup(&g).is_err());
        }
    }

    #[test]
    fn embeddings_verify(g in sink_free(5)) {
        let k = g.max_outdegree();
        let w = embed_monoid(&g, &greedy_cover(&g, k).unwrap()).unwrap();
        prop_assert_eq!(w.connection.len(), k);
        let rec = WitnessRecord::new(Graph::Directed(g), w);
        prop_assert!(rec.verify().all_ok());
        prop_assert_eq!(WitnessRecord::parse(&rec.to_string()).unwrap(), rec);
    }

    #[test]
    fn canonical_form_is_invariant(
        (g, perm) in simple_graph(8).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        prop_assert_eq!(
            canonical_form_simple(&g).unwrap(),
            canonical_form_simple(&g.permuted(&perm)).unwrap()
        );
    }

    #[test]
    fn canonical_form_is_invariant_directed(
        (g, perm) in sink_free(6).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        prop_assert_eq!(
            canonical_form_digraph(&g).unwrap(),
            canonical_form_digraph(&g.permuted(&perm)).unwrap()
        );
    }

    #[test]
    fn graph_text_round_trips(g in simple_graph(8), d in sink_free(6)) {
        let g = Graph::Undirected(g);
        prop_assert_eq!(Graph::parse(&g.to_string()).unwrap(), g);
        let d = Graph::Directed(d);
        prop_assert_eq!(Graph::parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn arboricity_within_one_of_pseudoarboricity(g in simple_graph(10)) {
        prop_assume!(g.order() >= 2);
        let p = pseudoarboricity(&g);
        let a = arboricity(&g).unwrap();
        prop_assert!(p <= a && a <= p + 1, "p={} a={}", p, a);
    }

    #[test]
    fn flow_matches_subset_formula(g in simple_graph(12)) {
        prop_assert_eq!(pseudoarboricity(&g), pseudoarboricity_by_subsets(&g).unwrap());
    }

    #[test]
    fn trace_identities(g in simple_graph(10)) {
        let p = spectrum(&g).unwrap();
        let s1: f64 = p.eigenvalues.iter().sum();
        let s2: f64 = p.eigenvalues.iter().map(|x| x * x).sum();
        prop_assert!(s1.abs() < 1e-6);
        prop_assert!((s2 - 2.0 * g.edge_count() as f64).abs() < 1e-6);
    }

    #[test]
    fn beta_is_monotone_and_bounded(g in circulant()) {
        let p = spectrum(&g).unwrap();
        let mut last = 0;
        for k in (0..=2).take_while(|&k| beta_work(&g, k) <= 200_000) {
            let b = beta(&g, k).unwrap();
            prop_assert!(b >= last);
            last = b;
            let up = beta_upper_bound(&p, k).unwrap();
            prop_assert!(Rational::from_integer(b as i128) <= up, "k={} beta={} bound={}", k, b, up);
        }
    }
}
