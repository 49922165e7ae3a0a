use kordered::constructive::{
    construct_bracelet_cycle, construct_g_hamiltonian, construct_uniform_cycle, reroute_alpha, select_free_vertices,
    StarCertificate,
};
use kordered::generators::gen_g;
use kordered::metrics::{connectivity, diameter, exhaustive_edge_connectivity, exhaustive_vertex_connectivity, Diameter};
use kordered::oracle::{mark_sequences, sequence_count};
use kordered::{build_bracelet, verify_ordered_cycle, Adjacency, AnyGraph, BraceletSpec, Digraph, Graph, MarkSequence};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn any_graph() -> impl Strategy<Value = AnyGraph> {
    (2usize..=8, any::<bool>()).prop_flat_map(|(n, directed)| {
        let slots = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            if directed {
                let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
                Digraph::new(n, arcs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap().into()
            } else {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap().into()
            }
        })
    })
}

/// Floyd-Warshall over unit arcs.
fn apsp_diameter<G: Adjacency>(g: &G) -> Diameter {
    let n = g.vertex_count();
    let inf = usize::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
        for &w in g.out_neighbors(v) {
            row[w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let worst = d.iter().flatten().copied().max().unwrap_or(0);
    if worst >= inf {
        Diameter::Infinite
    } else {
        Diameter::Finite(worst)
    }
}

fn check_metrics<G: Adjacency + Sync>(g: &G) -> Result<(), TestCaseError> {
    let r = connectivity(g);
    prop_assert_eq!(r.vertex_connectivity, exhaustive_vertex_connectivity(g).unwrap());
    prop_assert_eq!(r.edge_connectivity, exhaustive_edge_connectivity(g).unwrap());
    prop_assert!(r.vertex_connectivity <= r.edge_connectivity);
    prop_assert!(r.edge_connectivity <= r.min_degree());
    prop_assert_eq!(r.diameter, apsp_diameter(g));
    prop_assert_eq!(diameter(g), apsp_diameter(g));
    Ok(())
}

fn marks_in(n: usize, k: usize) -> impl Strategy<Value = Vec<usize>> {
    subsequence((0..n).collect::<Vec<_>>(), k).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn flow_connectivity_matches_cut_enumeration(g in any_graph()) {
        match &g {
            AnyGraph::Undirected(g) => check_metrics(g)?,
            AnyGraph::Directed(d) => check_metrics(d)?,
        }
    }

    #[test]
    fn g26_witnesses_verify(s in marks_in(12, 5)) {
        let bg = gen_g(2, 6).unwrap();
        let marks = MarkSequence::new(s, 12).unwrap();
        let (cycle, star) = construct_g_hamiltonian(&bg, &marks).unwrap();
        prop_assert!(verify_ordered_cycle(bg.graph(), &cycle, &marks, true).is_ok());
        prop_assert!(star.check(&bg, &cycle));
    }

    #[test]
    fn g38_witnesses_verify(s in marks_in(24, 7)) {
        let bg = gen_g(3, 8).unwrap();
        let marks = MarkSequence::new(s, 24).unwrap();
        let (cycle, _) = construct_g_hamiltonian(&bg, &marks).unwrap();
        prop_assert_eq!(cycle.len(), 24);
        prop_assert!(verify_ordered_cycle(bg.graph(), &cycle, &marks, true).is_ok());
    }

    #[test]
    fn free_vertices_form_a_transversal(s in marks_in(18, 7)) {
        let bg = gen_g(3, 6).unwrap();
        let marks = MarkSequence::new(s, 18).unwrap();
        let sel = select_free_vertices(&bg, &marks).unwrap();
        prop_assert_eq!(sel.free.len(), 6);
        for (p, &v) in sel.free.iter().enumerate() {
            prop_assert_eq!(bg.part_of(v), p);
        }
        let (a, b) = sel.marked_pair(&marks);
        let marked_free: Vec<usize> = sel.free.iter().copied().filter(|v| marks.as_slice().contains(v)).collect();
        prop_assert_eq!(marked_free.len(), 2);
        prop_assert!(marked_free.contains(&a) && marked_free.contains(&b));
    }

    #[test]
    fn rerouting_keeps_order_and_grows_by_two(s in marks_in(15, 5), pick in any::<prop::sample::Index>()) {
        // parts of 3 with 5 marks: the cycle leaves vertices free to reroute through
        let bg = build_bracelet(&BraceletSpec::uniform(3, 5).unwrap());
        let marks = MarkSequence::new(s, 15).unwrap();
        let cycle = construct_bracelet_cycle(&bg, &marks).unwrap();
        prop_assert!(verify_ordered_cycle(bg.graph(), &cycle, &marks, false).is_ok());
        let vs = cycle.vertices();
        let off = |v: &usize| !vs.contains(v) && !marks.as_slice().contains(v);
        let options: Vec<(usize, usize, usize, usize)> = cycle
            .edges()
            .filter(|&(a, b)| bg.parts_adjacent(bg.part_of(a), bg.part_of(b)))
            .filter_map(|(a, b)| {
                let c = bg.part(bg.part_of(a)).iter().copied().find(off)?;
                let d = bg.part(bg.part_of(b)).iter().copied().find(off)?;
                Some((a, b, c, d))
            })
            .collect();
        prop_assume!(!options.is_empty());
        let (a, b, c, d) = options[pick.index(options.len())];
        let before = StarCertificate::from_cycle(&bg, &cycle).is_some();
        let longer = reroute_alpha(&bg, &cycle, &marks, (a, b), c, d).unwrap();
        prop_assert_eq!(longer.len(), cycle.len() + 2);
        prop_assert!(verify_ordered_cycle(bg.graph(), &longer, &marks, false).is_ok());
        // every crossing survives, since a-d and c-b still cross the same pair
        prop_assert!(!before || StarCertificate::from_cycle(&bg, &longer).is_some());
    }

    #[test]
    fn odd_part_uniform_cycles_verify(s in marks_in(10, 5)) {
        let bg = build_bracelet(&BraceletSpec::uniform(2, 5).unwrap());
        let marks = MarkSequence::new(s, 10).unwrap();
        let cycle = construct_uniform_cycle(&bg, &marks).unwrap();
        prop_assert!(verify_ordered_cycle(bg.graph(), &cycle, &marks, false).is_ok());
    }

    #[test]
    fn distance_two_cycles_verify(
        sizes in proptest::collection::vec(2usize..=4, 4..=6),
        seed in any::<prop::sample::Index>(),
    ) {
        let spec = BraceletSpec::new(sizes.clone()).unwrap();
        let m = sizes.len();
        prop_assume!((0..m).all(|i| sizes[i] + sizes[(i + 2) % m] >= 5));
        let bg = build_bracelet(&spec);
        let n = bg.vertex_count();
        let seqs = mark_sequences(n, 5, true, true).unwrap();
        let s = &seqs[seed.index(seqs.len())];
        let marks = MarkSequence::new(s.clone(), n).unwrap();
        let cycle = construct_bracelet_cycle(&bg, &marks).unwrap();
        prop_assert!(verify_ordered_cycle(bg.graph(), &cycle, &marks, false).is_ok());
    }

    #[test]
    fn bracelet_degrees_follow_part_sizes(sizes in proptest::collection::vec(1usize..=4, 3..=8)) {
        let spec = BraceletSpec::new(sizes).unwrap();
        let bg = build_bracelet(&spec);
        for p in 0..bg.part_count() {
            for &v in bg.part(p) {
                prop_assert_eq!(bg.graph().degree(v), spec.part_degree(p));
            }
        }
        prop_assert_eq!(bg.graph().min_degree(), spec.min_degree());
        prop_assert_eq!(bg.graph().max_degree(), spec.max_degree());
    }

    #[test]
    fn canonical_form_ignores_rotation_and_reflection(
        sizes in proptest::collection::vec(1usize..=4, 3..=8),
        shift in 0usize..8,
        flip in any::<bool>(),
    ) {
        let m = sizes.len();
        let mut moved: Vec<usize> = (0..m).map(|j| sizes[(j + shift) % m]).collect();
        if flip {
            moved.reverse();
        }
        let a = BraceletSpec::new(sizes).unwrap().dihedral_canonical();
        let b = BraceletSpec::new(moved).unwrap().dihedral_canonical();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sequence_counts_match_enumeration(n in 1usize..=7, k in 1usize..=5, reflect in any::<bool>(), reduced in any::<bool>()) {
        prop_assume!(k <= n);
        let seqs = mark_sequences(n, k, reflect, reduced).unwrap();
        prop_assert_eq!(seqs.len() as u128, sequence_count(n, k, reflect, reduced));
    }
}
