mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;

use common::{random_model, random_model_of_size, random_sequence, random_tree, random_vpt, rng};
use treebend::layout::{realize, validate, GridLayout, Point};
use treebend::minbend::{balance_step, embed, embed_traced, embed_with_sequence};
use treebend::oracle::oracle_b;
use treebend::smodel::SModel;
use treebend::tree::Tree;
use treebend::vptepg::{
    epg_graph, epg_max_bends, ept_graph, vpt_epg_transform, vpt_graph, VptModel,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

/// Unit edges of the half edges at the vertices of `path`, in the doubled
/// coordinates used by the transform.
fn star_edges(host: &Tree, layout: &GridLayout, path: &[usize]) -> BTreeSet<(Point, Point)> {
    let mut out = BTreeSet::new();
    for &u in path {
        let a = layout.point(u);
        for &w in host.neighbors(u) {
            let b = layout.point(w);
            let mut p = Point::new(2 * a.x, 2 * a.y);
            let mid = Point::new(a.x + b.x, a.y + b.y);
            let d = p.direction_to(mid).expect("axis-aligned edge");
            while p != mid {
                let q = p.offset(d, 1);
                out.insert((p.min(q), p.max(q)));
                p = q;
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn sequences_replay_their_tree(seed: u64, n in 1usize..60) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, n, 4);
        let seq = random_sequence(&mut r, &t);
        prop_assert!(seq.builds(&t));
        prop_assert_eq!(seq.replay().edges(), t.edges());
        let degree_sum: usize = (0..n).map(|v| t.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * (n - 1));
    }

    #[test]
    fn path_bends_symmetric_and_rigid(seed: u64, n in 2usize..40, turns in 0u8..4, mirror: bool) {
        let mut r = rng(seed);
        let m = random_model_of_size(&mut r, n, 4);
        let moved = m.transformed(turns, mirror);
        for _ in 0..20 {
            let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
            prop_assert_eq!(m.path_bends(u, v), m.path_bends(v, u));
            prop_assert_eq!(m.path_bends(u, v), moved.path_bends(u, v));
        }
        prop_assert_eq!(m.max_bends(), moved.max_bends());
    }

    #[test]
    fn max_bends_matches_naive(seed: u64, n in 1usize..40) {
        let mut r = rng(seed);
        let m = random_model_of_size(&mut r, n, 4);
        prop_assert_eq!(m.max_bends(), m.max_bends_naive());
    }

    #[test]
    fn leaf_bends_reach_a_leaf(seed: u64, n in 2usize..30) {
        let mut r = rng(seed);
        let m = random_model_of_size(&mut r, n, 4);
        let t = m.tree();
        for (a, b) in t.edges() {
            for (p, v) in [(a, b), (b, a)] {
                let best = t
                    .side(p, v)
                    .into_iter()
                    .filter(|&f| t.is_leaf(f))
                    .map(|f| m.walk_bends(&[vec![p], t.path_between(v, f)].concat()))
                    .max()
                    .unwrap();
                prop_assert_eq!(m.leaf_bends(p, v), best);
            }
        }
    }

    #[test]
    fn leaves_are_balanced(seed: u64, n in 1usize..40) {
        let mut r = rng(seed);
        let m = random_model_of_size(&mut r, n, 4);
        for v in m.tree().leaves() {
            prop_assert!(m.is_balanced(v));
        }
    }

    #[test]
    fn balance_step_never_increases_bends(seed: u64, n in 2usize..40) {
        let mut r = rng(seed);
        let mut m = random_model_of_size(&mut r, n, 4);
        let v = r.gen_range(0..n);
        let before = m.max_bends();
        balance_step(&mut m, v);
        prop_assert!(m.is_balanced(v));
        prop_assert!(m.max_bends() <= before);
    }

    #[test]
    fn embed_growth_is_at_most_one_per_step(seed: u64, n in 1usize..80) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, n, 4);
        let seq = random_sequence(&mut r, &t);
        let (m, trace) = embed_traced(&t, &seq).unwrap();
        prop_assert_eq!(trace[0], 0);
        for w in trace.windows(2) {
            prop_assert!(w[1] <= w[0] + 1, "trace {:?}", trace);
        }
        prop_assert_eq!(*trace.last().unwrap(), m.max_bends());
    }

    #[test]
    fn embed_output_is_balanced(seed: u64, n in 1usize..60) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, n, 4);
        let m = embed_with_sequence(&t, &random_sequence(&mut r, &t)).unwrap();
        for v in 0..n {
            prop_assert!(m.is_balanced(v), "vertex {}", v);
        }
    }

    #[test]
    fn layouts_are_valid_and_agree(seed: u64, n in 1usize..80, turns in 0u8..4) {
        let mut r = rng(seed);
        let m = random_model_of_size(&mut r, n, 4);
        let l = realize(&m);
        let report = validate(&l, &m);
        prop_assert!(report.is_valid(), "{:?}", report.violations);
        let (lo, hi) = l.bounds();
        let side = 2 * n as i64;
        prop_assert!(hi.x - lo.x <= side && hi.y - lo.y <= side);
        for _ in 0..10 {
            let path = m.tree().path_between(r.gen_range(0..n), r.gen_range(0..n));
            prop_assert_eq!(l.walk_bends(&path), m.walk_bends(&path));
        }
        let mut rotated = l.clone();
        for _ in 0..turns {
            rotated = rotated.rotated();
        }
        prop_assert!(validate(&rotated, &m.transformed(turns, false)).is_valid());
    }

    #[test]
    fn transform_preserves_graph(seed: u64, n in 1usize..30, paths in 1usize..12) {
        let mut r = rng(seed);
        let host = random_tree(&mut r, n, 3);
        let v = random_vpt(&mut r, host.clone(), paths);
        let m = embed(&host).unwrap();
        let l = realize(&m);
        let e = vpt_epg_transform(&v, &m, &l).unwrap();
        prop_assert_eq!(epg_graph(&e), vpt_graph(&v));
        prop_assert!(epg_max_bends(&e) <= m.max_bends() + 2);
        if n > 1 {
            for (i, path) in v.paths().iter().enumerate() {
                let allowed = star_edges(&host, &l, path);
                prop_assert!(e.unit_edges(i).is_subset(&allowed), "path {}", i);
            }
        }
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn embed_ignores_build_order(seed: u64, n in 1usize..9) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, n, 4);
        let a = embed_with_sequence(&t, &random_sequence(&mut r, &t)).unwrap();
        let b = embed_with_sequence(&t, &random_sequence(&mut r, &t)).unwrap();
        prop_assert_eq!(a.max_bends(), b.max_bends());
        prop_assert_eq!(a.max_bends(), oracle_b(&t).unwrap());
    }

    #[test]
    fn oracle_is_a_lower_bound_and_certified(seed: u64, n in 1usize..10) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, n, 4);
        let b = oracle_b(&t).unwrap();
        prop_assert!(b <= random_model(&mut r, t.clone()).max_bends());
        let m = embed(&t).unwrap();
        let cert = m.certify().expect("embed output is certified");
        prop_assert!(m.check_lower_bound(&cert));
        prop_assert!(cert.value() <= b);
    }

    #[test]
    fn oracle_ignores_labels_and_grows_with_subtrees(seed: u64, n in 2usize..10) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, n, 4);
        let mut perm: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut r);
        let b = oracle_b(&t).unwrap();
        prop_assert_eq!(oracle_b(&t.relabel(&perm)).unwrap(), b);
        // Dropping a leaf gives a subtree.
        let leaf = t.leaves()[0];
        let keep: Vec<usize> = (0..n).filter(|&v| v != leaf).collect();
        let index = |v: usize| keep.iter().position(|&k| k == v).unwrap();
        let edges: Vec<_> = t
            .edges()
            .into_iter()
            .filter(|&(a, c)| a != leaf && c != leaf)
            .map(|(a, c)| (index(a), index(c)))
            .collect();
        let sub = Tree::from_edges(n - 1, &edges).unwrap();
        prop_assert!(oracle_b(&sub).unwrap() <= b);
    }
}

#[test]
fn ept_and_vpt_differ_on_a_claw() {
    // Three paths through the centre pairwise share only the centre vertex.
    let v = VptModel::new(
        Tree::star(3),
        vec![vec![1, 0, 2], vec![2, 0, 3], vec![3, 0, 1]],
    )
    .unwrap();
    assert!(vpt_graph(&v).is_clique(&[0, 1, 2]));
    assert!(ept_graph(&v).is_clique(&[0, 1, 2]));
    let single = VptModel::new(Tree::star(3), vec![vec![0], vec![1, 0]]).unwrap();
    assert!(vpt_graph(&single).adjacent(0, 1));
    assert!(!ept_graph(&single).adjacent(0, 1));
}

#[test]
fn every_model_of_a_small_tree_realizes() {
    let t = Tree::star(4);
    for m in treebend::oracle::enumerate_models(&t) {
        assert!(validate(&realize(&m), &m).is_valid());
    }
    let _: SModel = embed(&t).unwrap();
}
