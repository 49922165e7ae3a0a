use super::*;
use crate::bracelet::{build_bracelet, BraceletSpec};
use crate::generators::{gen_directed, gen_g, gen_h, gen_p};
use crate::graph::Graph;
use crate::oracle::{is_k_ordered, OracleOptions};

#[test]
fn four_cycle() {
    let r = connectivity(&Graph::cycle(4).unwrap());
    assert_eq!((r.vertex_connectivity, r.edge_connectivity, r.diameter), (2, 2, Diameter::Finite(2)));
}

#[test]
fn uniform_bracelet_is_four_connected() {
    let r = connectivity(gen_g(2, 4).unwrap().graph());
    assert_eq!((r.vertex_connectivity, r.edge_connectivity, r.min_degree()), (4, 4, 4));
}

#[test]
fn complete_digraph() {
    let r = connectivity(&Digraph::complete(5));
    assert_eq!((r.vertex_connectivity, r.edge_connectivity, r.diameter), (4, 4, Diameter::Finite(1)));
}

#[test]
fn disconnected_graph_has_infinite_diameter() {
    let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    let r = connectivity(&g);
    assert_eq!((r.vertex_connectivity, r.edge_connectivity, r.diameter), (0, 0, Diameter::Infinite));
    let d = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(diameter(&d), Diameter::Infinite);
    assert_eq!(connectivity(&d).edge_connectivity, 0);
}

#[test]
fn flow_matches_cut_enumeration_on_small_families() {
    let undirected = [
        Graph::cycle(5).unwrap(),
        Graph::complete(5),
        gen_h(2, 1).unwrap().into_graph(),
        gen_g(2, 4).unwrap().into_graph(),
        Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
    ];
    for g in &undirected {
        let r = connectivity(g);
        assert_eq!(r.vertex_connectivity, exhaustive_vertex_connectivity(g).unwrap());
        assert_eq!(r.edge_connectivity, exhaustive_edge_connectivity(g).unwrap());
    }
    let directed = [
        Digraph::complete(4),
        Digraph::directed_cycle(5).unwrap(),
        gen_directed(3, 4).unwrap().into_graph(),
        Digraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0), (2, 3)]).unwrap(),
    ];
    for d in &directed {
        let r = connectivity(d);
        assert_eq!(r.vertex_connectivity, exhaustive_vertex_connectivity(d).unwrap());
        assert_eq!(r.edge_connectivity, exhaustive_edge_connectivity(d).unwrap());
    }
}

#[test]
fn diameter_bounds() {
    let opts = OracleOptions::default();
    let k33 = gen_h(2, 1).unwrap();
    let v = is_k_ordered(k33.graph(), 4, false, opts).unwrap();
    let r = check_diameter_bound(k33.graph(), 2, &v);
    assert!(r.applicable && r.ok);
    assert_eq!((r.diameter, r.bound, r.slack), (Diameter::Finite(2), 2, Some(0)));

    let g = gen_g(2, 4).unwrap();
    let v = is_k_ordered(g.graph(), 5, false, opts).unwrap();
    let r = check_diameter_bound(g.graph(), 2, &v);
    assert_eq!((r.diameter, r.bound, r.ok), (Diameter::Finite(2), 3, true));
    assert_eq!(diameter_bound(12, 2), 4);

    let h = gen_h(2, 2).unwrap();
    let v = is_k_ordered(h.graph(), 4, false, opts).unwrap();
    assert!(!check_diameter_bound(h.graph(), 2, &v).applicable);
}

#[test]
fn directed_necessary_conditions() {
    assert!(check_directed_necessary(gen_directed(3, 4).unwrap().graph(), 3).passes());
    let r = check_directed_necessary(gen_directed(2, 4).unwrap().graph(), 3);
    assert!(r.violations.contains(&DirectedViolation::OutDegree { vertex: 0, degree: 1 }));
    assert!(r.violations.contains(&DirectedViolation::VertexConnectivity { value: 1 }));
    // a 5-cycle with chords from every vertex except 4
    let d = Digraph::new(5, (0..5).map(|i| (i, (i + 1) % 5)).chain((0..4).map(|i| (i, (i + 2) % 5)))).unwrap();
    let r = check_directed_necessary(&d, 3);
    assert!(r.violations.contains(&DirectedViolation::OutDegree { vertex: 4, degree: 1 }));
}

#[test]
fn bracelet_audits() {
    let p = bracelet_degree_audit(&gen_p(2, 6).unwrap(), 2);
    assert!(p.passes(), "{p:?}");
    assert_eq!((p.min_degree, p.max_degree), (3, 6));
    let h = bracelet_degree_audit(&gen_h(2, 2).unwrap(), 2);
    assert!(h.failed.contains(&Screen::NonAdjacentParts));
    assert!(h.failed.contains(&Screen::SmallPartNeighbourhood));
    let b = bracelet_degree_audit(&build_bracelet(&BraceletSpec::new(vec![1, 1, 3, 3, 3, 3, 3]).unwrap()), 2);
    assert_eq!(b.adjacent_sums, vec![4, 4, 4, 6, 6, 6, 4]);
    assert_eq!(b.applicable.len(), 5);
    assert!(b.passes());
    let window = bracelet_degree_audit(&build_bracelet(&BraceletSpec::new(vec![1, 2, 2, 2, 2, 2, 2]).unwrap()), 2);
    assert!(window.failed.contains(&Screen::DegreeWindow));
}
