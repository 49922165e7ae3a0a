use super::*;
use crate::bracelet::{build_bracelet, BraceletSpec};
use crate::generators::{gen_directed, gen_g, gen_p};
use crate::graph::{Adjacency, Graph};
use crate::oracle::{find_ordered_cycle, mark_sequences};
use crate::witness::{verify_ordered_cycle, MarkSequence};

fn seq(v: &[usize], n: usize) -> MarkSequence {
    MarkSequence::new(v.to_vec(), n).unwrap()
}

#[test]
fn g14_is_the_four_cycle() {
    let bg = gen_g(1, 4).unwrap();
    let (c, star) = construct_g_hamiltonian(&bg, &seq(&[0, 1, 2], 4)).unwrap();
    assert_eq!(c.vertices(), &[0, 1, 2, 3]);
    assert!(star.check(&bg, &c));
}

#[test]
fn g24_every_sequence_is_hamiltonian_with_star() {
    let bg = gen_g(2, 4).unwrap();
    for s in mark_sequences(8, 5, true, false).unwrap() {
        let marks = seq(&s, 8);
        let (c, star) = construct_g_hamiltonian(&bg, &marks).unwrap();
        assert_eq!(c.len(), 8);
        assert!(verify_ordered_cycle(bg.graph(), &c, &marks, true).is_ok());
        assert!(star.check(&bg, &c));
    }
}

#[test]
fn free_selection_with_two_full_parts() {
    // parts {0,1}, {2,3}, {4,5}, {6,7}; marks a1 a2 b1 b2 c1
    let bg = gen_g(2, 4).unwrap();
    let marks = seq(&[0, 1, 2, 3, 4], 8);
    let sel = select_free_vertices(&bg, &marks).unwrap();
    assert_eq!(sel.marked_pair(&marks), (1, 2));
    assert_eq!(sel.free, vec![1, 2, 5, 6]);
    let marked: Vec<_> = sel.free.iter().filter(|v| marks.as_slice().contains(v)).collect();
    assert_eq!(marked.len(), 2);
}

#[test]
fn free_selection_one_per_part_in_g14() {
    let bg = gen_g(1, 4).unwrap();
    let marks = seq(&[2, 0, 3], 4);
    let sel = select_free_vertices(&bg, &marks).unwrap();
    assert_eq!(sel.free, vec![0, 1, 2, 3]);
    assert_eq!(sel.pair, (0, 1));
}

#[test]
fn alpha_grows_cycle_by_two() {
    let bg = gen_g(2, 6).unwrap();
    // parts {0,1} {2,3} ... {10,11}; transversal cycle on even vertices
    let marks = seq(&[0, 4, 8], 12);
    let cycle = crate::witness::OrderedCycle::new(vec![0, 2, 4, 6, 8, 10], &marks).unwrap();
    let out = reroute_alpha(&bg, &cycle, &marks, (0, 2), 1, 3).unwrap();
    assert_eq!(out.len(), cycle.len() + 2);
    assert_eq!(out.vertices()[..4], [0, 3, 1, 2]);
    assert!(verify_ordered_cycle(bg.graph(), &out, &marks, false).is_ok());
    assert!(reroute_alpha(&bg, &cycle, &marks, (0, 2), 3, 1).is_err());
}

#[test]
fn odd_part_count_uniform_cycle() {
    let bg = build_bracelet(&BraceletSpec::uniform(2, 5).unwrap());
    for s in mark_sequences(10, 5, true, true).unwrap().into_iter().step_by(7) {
        let marks = seq(&s, 10);
        let c = construct_uniform_cycle(&bg, &marks).unwrap();
        assert!(verify_ordered_cycle(bg.graph(), &c, &marks, false).is_ok());
    }
}

fn agrees_with_oracle(g: &Graph, marks: &MarkSequence) {
    assert!(find_ordered_cycle(g, marks, false, 10_000_000).unwrap().cycle.is_some());
}

#[test]
fn distance_two_bracelets() {
    for sizes in [vec![3, 3, 3, 3], vec![2, 3, 3, 3], vec![2, 3, 3, 3, 3]] {
        let bg = build_bracelet(&BraceletSpec::new(sizes).unwrap());
        let n = bg.vertex_count();
        for s in mark_sequences(n, 5, true, true).unwrap() {
            let marks = seq(&s, n);
            let c = construct_bracelet_cycle(&bg, &marks).unwrap_or_else(|e| panic!("{s:?}: {e}"));
            assert!(verify_ordered_cycle(bg.graph(), &c, &marks, false).is_ok());
        }
    }
    let bg = build_bracelet(&BraceletSpec::new(vec![2, 3, 3, 3]).unwrap());
    let marks = seq(&[0, 2, 5, 8, 3], 11);
    construct_bracelet_cycle(&bg, &marks).unwrap();
    agrees_with_oracle(bg.graph(), &marks);
}

#[test]
fn short_distance_two_pair_is_refused_but_may_still_have_cycles() {
    // parts 0 and 2 of (2,3,2,3) hold only 4 vertices
    let bg = build_bracelet(&BraceletSpec::new(vec![2, 3, 2, 3]).unwrap());
    let marks = seq(&[0, 2, 5, 7, 3], 10);
    assert!(matches!(construct_bracelet_cycle(&bg, &marks), Err(crate::Error::Precondition(_))));
    agrees_with_oracle(bg.graph(), &marks);
}

#[test]
fn distance_two_k3() {
    let bg = build_bracelet(&BraceletSpec::new(vec![3, 4, 4, 4]).unwrap());
    let n = bg.vertex_count();
    for s in mark_sequences(n, 7, true, true).unwrap().into_iter().step_by(997) {
        let marks = seq(&s, n);
        let c = construct_bracelet_cycle(&bg, &marks).unwrap_or_else(|e| panic!("{s:?}: {e}"));
        assert!(verify_ordered_cycle(bg.graph(), &c, &marks, false).is_ok());
    }
}

#[test]
fn counterexample_is_refused() {
    let bg = build_bracelet(&BraceletSpec::new(vec![2, 5, 2, 2]).unwrap());
    let marks = seq(&[2, 3, 4, 5, 6], 11);
    assert!(matches!(construct_bracelet_cycle(&bg, &marks), Err(crate::Error::Precondition(_))));
}

#[test]
fn p25_every_sequence() {
    let bg = gen_p(2, 5).unwrap();
    let n = bg.vertex_count();
    for s in mark_sequences(n, 4, true, false).unwrap() {
        let marks = seq(&s, n);
        let c = construct_p_cycle(&bg, &marks, 1_000_000).unwrap_or_else(|e| panic!("{s:?}: {e}"));
        assert!(verify_ordered_cycle(bg.graph(), &c, &marks, false).is_ok());
    }
}

#[test]
fn p36_sampled_and_full_small_parts() {
    let bg = gen_p(3, 6).unwrap();
    let n = bg.vertex_count();
    // both size-2 parts (0 and 1) full, interleaved with other marks
    let (a, b) = (bg.part(0), bg.part(1));
    let marks = seq(&[a[0], bg.part(3)[0], a[1], b[0], bg.part(4)[0], b[1]], n);
    let c = construct_p_cycle(&bg, &marks, 1_000_000).unwrap();
    assert!(verify_ordered_cycle(bg.graph(), &c, &marks, false).is_ok());
    for s in mark_sequences(n, 6, true, true).unwrap().into_iter().step_by(50_021) {
        let marks = seq(&s, n);
        let c = construct_p_cycle(&bg, &marks, 1_000_000).unwrap_or_else(|e| panic!("{s:?}: {e}"));
        assert!(verify_ordered_cycle(bg.graph(), &c, &marks, false).is_ok());
    }
}

#[test]
fn p_builder_rejects_other_bracelets() {
    let bg = gen_g(2, 6).unwrap();
    assert!(construct_p_cycle(&bg, &seq(&[0, 1, 2, 3], 12), 1000).is_err());
}

#[test]
fn directed_grid_sweeps() {
    for (k, l) in [(2, 4), (3, 4), (3, 5), (4, 3)] {
        let bg = gen_directed(k, l).unwrap();
        let n = bg.vertex_count();
        for s in mark_sequences(n, k, false, false).unwrap() {
            let marks = seq(&s, n);
            let grid = directed_grid(&bg, &marks).unwrap();
            for row in &grid.rows {
                let parts: Vec<usize> = row.iter().map(|&v| bg.part_of(v)).collect();
                let want: Vec<usize> = (0..l).map(|c| bg.part_offset(grid.first_part, c as isize)).collect();
                assert_eq!(parts, want);
            }
            let c = construct_directed_hamiltonian(&bg, &marks).unwrap();
            assert_eq!(c.len(), n);
            assert!(bg.graph().has_edge(c.vertices()[n - 1], c.vertices()[0]));
        }
    }
}
