use std::collections::BTreeSet;

use jetgraph::graph::{self, Graph};
use jetgraph::jets;
use jetgraph::verify::{self, Outcome};
use jetgraph::{betti, JetsRing, Limits, Polynomial, Ring, Suite};
use proptest::prelude::*;

fn named_edges(g: &Graph) -> BTreeSet<(String, String)> {
    g.edges()
        .map(|(a, b)| {
            let (a, b) = (g.name(a).to_string(), g.name(b).to_string());
            if a < b { (a, b) } else { (b, a) }
        })
        .collect()
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, keep)| *keep).map(|(p, _)| p).collect();
            Graph::new((0..n).map(|i| format!("v{i}")), edges).unwrap()
        })
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, 2), -3i64..4), 1..4).prop_map(|terms| {
        let r = Ring::grevlex(["x", "y"]).unwrap();
        terms.iter().fold(Polynomial::zero(&r), |acc, (e, c)| {
            let t = Polynomial::parse(&r, &format!("{c}*x^{}*y^{}", e[0], e[1])).unwrap();
            acc.add(&t)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn jets_coefficients_are_stable(f in polynomial(), s in 0usize..3, extra in 0usize..2) {
        let t = s + extra;
        let small = JetsRing::new(f.ring(), s).unwrap();
        let large = JetsRing::new(f.ring(), t).unwrap();
        let a = jets::jets_of_polynomial(&f, s).unwrap();
        let b = jets::jets_of_polynomial(&f, t).unwrap();
        let psi = small.inclusion_into(&large);
        for m in 0..=s {
            prop_assert_eq!(a[m].remap(large.ring(), &psi), b[m].clone());
        }
    }

    #[test]
    fn cover_suites_pass_on_random_graphs(g in small_graph(5), s in 0usize..2) {
        let limits = Limits::default();
        for suite in [Suite::VcColon, Suite::MinimalPrime, Suite::GhwCover] {
            let out = verify::check(suite, &g, s, &limits).unwrap();
            prop_assert!(matches!(out, Outcome::Pass), "{} {:?}", suite.name(), out);
        }
    }
}

#[test]
fn radical_of_jets_is_edge_ideal_of_jets_graph() {
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]);
            let g = Graph::new((0..n).map(|i| format!("v{i}")), edges).unwrap();
            for s in 0..=2 {
                let r = jets::radical_of_jets(&graph::edge_ideal(&g), s).unwrap();
                assert_eq!(r, graph::edge_ideal(&jets::jets_of_graph(&g, s)), "s={s}\n{}", g.to_edge_list());
            }
        }
    }
}

#[test]
fn principal_component_routes_agree() {
    let limits = Limits::default();
    for n in 1..=5 {
        for g in jetgraph::corpus::all_connected(n) {
            for s in 1..=2 {
                let closed = jets::principal_component_ideal(&g, s);
                assert_eq!(closed.len(), g.edge_count() * (s + 1) * (s + 1));
                assert_eq!(jets::pc_as_cover_intersection(&g, s, &limits).unwrap(), closed);
                assert_eq!(graph::edge_ideal(&jets::principal_component_graph(&g, s)), closed);
            }
        }
    }
}

#[test]
fn complement_of_principal_component_is_larger() {
    for n in 1..=5 {
        for g in jetgraph::corpus::all_connected(n) {
            for s in 1..=2 {
                let inner = named_edges(&jets::principal_component_graph(&graph::complement(&g), s));
                let outer = named_edges(&graph::complement(&jets::principal_component_graph(&g, s)));
                assert!(inner.is_subset(&outer) && inner.len() < outer.len(), "{}", g.to_edge_list());
            }
        }
    }
}

#[test]
fn cochordal_graphs_give_linear_principal_components() {
    let limits = Limits::default();
    for n in 1..=4 {
        for g in jetgraph::corpus::all_connected(n).into_iter().filter(graph::is_cochordal) {
            for s in 1..=2 {
                let pc = jets::principal_component_ideal(&g, s);
                assert!(betti::has_linear_resolution(&pc, &limits).unwrap(), "s={s}\n{}", g.to_edge_list());
                assert!(graph::is_cochordal(&jets::principal_component_graph(&g, s)));
            }
        }
    }
}
