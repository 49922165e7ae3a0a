use super::*;
use crate::generators::{gen_directed, gen_g};
use crate::graph::{Digraph, Graph};
use crate::witness::{verify_ordered_cycle, verify_tour, EdgeSequence, MarkSequence};

fn pairs(p: &[(usize, usize)], n: usize) -> TerminalPairs {
    TerminalPairs::new(p.to_vec(), n).unwrap()
}

#[test]
fn four_cycle_pairs() {
    let g = Graph::cycle(4).unwrap();
    let tp = pairs(&[(0, 2), (2, 0)], 4);
    let sys = find_edge_disjoint_paths(&g, &tp, LinkageOptions::default()).unwrap().unwrap();
    assert!(sys.check(&g, &tp).is_ok());
    // crossing pairs each need two of the four edges, and every choice collides
    let crossing = pairs(&[(0, 2), (1, 3)], 4);
    assert_eq!(find_edge_disjoint_paths(&g, &crossing, LinkageOptions::default()).unwrap(), None);
}

#[test]
fn bridge_cannot_be_shared() {
    // two triangles joined by the bridge 2-3
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
    let tp = pairs(&[(0, 4), (1, 5)], 6);
    assert_eq!(find_edge_disjoint_paths(&g, &tp, LinkageOptions::default()).unwrap(), None);
}

#[test]
fn seeded_search_is_reproducible() {
    let g = gen_g(2, 4).unwrap();
    let tp = pairs(&[(0, 5), (1, 6), (2, 7), (3, 4)], 8);
    let opts = LinkageOptions { seed: Some(7), ..LinkageOptions::default() };
    let a = find_edge_disjoint_paths(g.graph(), &tp, opts).unwrap().unwrap();
    let b = find_edge_disjoint_paths(g.graph(), &tp, opts).unwrap().unwrap();
    assert_eq!(a, b);
    assert!(a.check(g.graph(), &tp).is_ok());
}

#[test]
fn budget_is_reported() {
    let g = gen_g(2, 4).unwrap();
    let tp = pairs(&[(0, 5), (1, 6), (2, 7), (3, 4)], 8);
    let opts = LinkageOptions { budget: 2, seed: None };
    assert!(matches!(find_edge_disjoint_paths(g.graph(), &tp, opts), Err(Error::ResourceExceeded { budget: 2 })));
}

#[test]
fn repair_fixed_point_and_single_swap() {
    let d = Digraph::complete(4);
    let marks = EdgeSequence::new(vec![(0, 1), (2, 3)], &d).unwrap();
    let direct = PathSystem { paths: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]] };
    let r = linkage_to_edge_tour(&d, &marks, &direct).unwrap();
    assert_eq!((r.swaps, r.tour.walk()), (0, &[0, 1, 2, 3][..]));

    // e_1 = 0-1 lies inside the path for (v_2, u_2)
    let g = Graph::complete(5);
    let marks = EdgeSequence::new(vec![(0, 1), (2, 3)], &g).unwrap();
    let sys = PathSystem { paths: vec![vec![0, 4, 1], vec![1, 2], vec![2, 0, 1, 3], vec![3, 0]] };
    let r = linkage_to_edge_tour(&g, &marks, &sys).unwrap();
    assert_eq!(r.swaps, 2);
    assert_eq!(r.system.paths[2], vec![2, 3]);
    assert_eq!(r.system.paths[0], vec![0, 1]);
    assert!(verify_tour(&g, &r.tour, &marks).is_ok());
}

#[test]
fn repair_rejects_wrong_endpoints() {
    let g = Graph::complete(4);
    let marks = EdgeSequence::new(vec![(0, 1), (2, 3)], &g).unwrap();
    let sys = PathSystem { paths: vec![vec![0, 1], vec![1, 3], vec![3, 2], vec![2, 0]] };
    assert!(matches!(linkage_to_edge_tour(&g, &marks, &sys), Err(Error::Precondition(_))));
}

#[test]
fn greedy_edge_tour_gates() {
    let d = Digraph::complete(5);
    let marks = EdgeSequence::new(vec![(0, 1), (3, 2)], &d).unwrap();
    let t = greedy_edge_tour(&d, &marks, 2).unwrap();
    assert_eq!((t.gate.connectivity, t.gate.required), (4, Some(4)));
    assert!(verify_tour(&d, &t.tour, &marks).is_ok());
    let small = Digraph::complete(3);
    let marks = EdgeSequence::new(vec![(0, 1), (1, 2)], &small).unwrap();
    assert!(matches!(greedy_edge_tour(&small, &marks, 2), Err(Error::Precondition(_))));
}

#[test]
fn greedy_vertex_cycle_gates() {
    let d = Digraph::complete(6);
    let marks = MarkSequence::new(vec![0, 1, 2], 6).unwrap();
    let c = greedy_vertex_cycle(&d, &marks, 3).unwrap();
    assert_eq!(c.cycle.vertices(), &[0, 1, 2]);
    let d4 = Digraph::complete(4);
    let marks = MarkSequence::new(vec![3, 1, 0, 2], 4).unwrap();
    let c = greedy_vertex_cycle(&d4, &marks, 4).unwrap();
    assert!(verify_ordered_cycle(&d4, &c.cycle, &marks, true).is_ok());
    // two marks never give a 2-cycle
    let c = greedy_vertex_cycle(&d4, &MarkSequence::new(vec![0, 1], 4).unwrap(), 2).unwrap();
    assert_eq!(c.cycle.len(), 3);
    let sparse = Digraph::directed_cycle(5).unwrap();
    let e = greedy_vertex_cycle(&sparse, &MarkSequence::new(vec![0, 2, 4], 5).unwrap(), 3).unwrap_err();
    assert!(e.to_string().contains("connectivity 1 < required 8"), "{e}");
}

#[test]
fn greedy_undirected_gates() {
    let k6 = Graph::complete(6);
    let marks = EdgeSequence::new(vec![(0, 1), (2, 3)], &k6).unwrap();
    let out = greedy_undirected(&k6, &UndirectedTarget::Edges(marks.clone()), 2).unwrap();
    let GreedyOutput::Tour(t) = out else { panic!("expected a tour") };
    assert!(verify_tour(&k6, &t.tour, &marks).is_ok());
    let c4 = Graph::cycle(4).unwrap();
    let marks = EdgeSequence::new(vec![(0, 1), (2, 3)], &c4).unwrap();
    assert!(greedy_undirected(&c4, &UndirectedTarget::Edges(marks), 2).is_err());
    // G(3,4) has diameter 2 and connectivity 6: the gate (2k-1)*2+1 admits k = 1 only
    let g = gen_g(3, 4).unwrap();
    let m = MarkSequence::new(vec![0, 5], 12).unwrap();
    assert!(greedy_undirected(g.graph(), &UndirectedTarget::Vertices(m), 2).is_err());
}

#[test]
fn linkage_from_tours() {
    let k6 = Graph::complete(6);
    let tp = pairs(&[(0, 1), (2, 3)], 6);
    let sys = tour_to_linkage(&k6, &tp, 10_000_000).unwrap().unwrap();
    assert!(sys.check(&k6, &tp).is_ok());
    let c4 = Graph::cycle(4).unwrap();
    let tp = pairs(&[(0, 2)], 4);
    let sys = tour_to_linkage(&c4, &tp, 1_000_000).unwrap().unwrap();
    assert_eq!(sys.paths[0].len(), 3);
    // vertex 0 of the 5-wheel rim has degree 3 < 4
    let wheel = Graph::new(6, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5)])).unwrap();
    assert!(matches!(tour_to_linkage(&wheel, &pairs(&[(0, 2), (1, 3)], 6), 1000), Err(Error::Precondition(_))));
}

#[test]
fn directed_bracelet_greedy_is_measured() {
    let d = gen_directed(4, 3).unwrap();
    let r = crate::metrics::connectivity(d.graph());
    let marks = EdgeSequence::new(vec![d.graph().edges()[0]], d.graph()).unwrap();
    let out = greedy_edge_tour(d.graph(), &marks, 1);
    let need = r.diameter.finite().unwrap().div_ceil(2) + 1;
    assert_eq!(out.is_ok(), r.edge_connectivity >= need);
}
