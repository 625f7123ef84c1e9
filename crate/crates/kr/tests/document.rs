use kr::document::{bfs_order, GraphDocument};
use kr_core::builders::Builder;
use kr_core::cartan::{AffineSpec, Family};
use kr_core::crystal::crystal_isomorphism;
use kr_core::verify::default_grid;
use proptest::prelude::*;

#[test]
fn json_round_trip_over_the_grid() {
    let mut b = Builder::new();
    for spec in default_grid() {
        let build = b.build(spec).unwrap();
        let doc = GraphDocument::from_build(&build);
        let back = GraphDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc, "{spec}");
        assert_eq!(back.spec().unwrap(), spec);
        let g = back.to_graph().unwrap();
        assert_eq!(g.len(), build.len());
        let tau: Vec<u8> = spec.colors();
        assert!(crystal_isomorphism(&build.graph, &g, &tau).is_some(), "{spec}");
        assert_eq!(GraphDocument::from_graph(spec, &g), doc, "{spec}: not a fixed point");
    }
}

#[test]
fn ids_follow_breadth_first_order() {
    let mut b = Builder::new();
    let build = b.build(AffineSpec::new(Family::A2Odd, 3, 2, 1).unwrap()).unwrap();
    let doc = GraphDocument::from_build(&build);
    let order = bfs_order(&build.graph);
    for (nd, &v) in doc.nodes.iter().zip(&order) {
        assert_eq!(nd.element, build.graph.label(v));
        assert_eq!(nd.weight, build.graph.weight(v).0);
    }
    assert_eq!(doc.nodes[0].id, 0);
    assert!(doc.edges.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn rejects_bad_documents() {
    let mut b = Builder::new();
    let build = b.build(AffineSpec::new(Family::C1, 2, 1, 1).unwrap()).unwrap();
    let doc = GraphDocument::from_build(&build);

    let mut shuffled = doc.clone();
    shuffled.nodes.swap(0, 1);
    assert!(shuffled.to_graph().is_err());

    let mut bad = doc.clone();
    bad.family = "Z9".into();
    assert!(bad.to_graph().is_err());

    let mut dup = doc.clone();
    let e = dup.edges[0];
    dup.edges.push(kr::document::Edge { dst: (e.dst + 1) % 4, ..e });
    assert!(dup.to_graph().is_err());

    assert!(GraphDocument::from_json("{\"family\": 3}").is_err());
}

#[test]
fn dot_lists_every_node_and_edge() {
    let mut b = Builder::new();
    let build = b.build(AffineSpec::new(Family::D2, 2, 2, 1).unwrap()).unwrap();
    let doc = GraphDocument::from_build(&build);
    let dot = doc.to_dot();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), doc.nodes.len());
    for e in &doc.edges {
        assert!(dot.contains(&format!("  {} -> {} [label=\"{}\"];", e.src, e.dst, e.color)));
    }
}

fn small_spec() -> impl Strategy<Value = AffineSpec> {
    (0..Family::ALL.len(), 2usize..=3, 1usize..=4, 1usize..=2).prop_filter_map("valid spec", |(f, n, r, s)| {
        let family = Family::ALL[f];
        let n = if family == Family::D1 { 4 } else { n };
        AffineSpec::new(family, n, r, s).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn documents_are_deterministic(spec in small_spec()) {
        let a = GraphDocument::from_build(&Builder::new().build(spec).unwrap());
        let b = GraphDocument::from_build(&Builder::new().build(spec).unwrap());
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert_eq!(a.to_dot(), b.to_dot());
    }
}
