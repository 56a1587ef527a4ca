//! Smallest trees that need a given number of bends.
//!
//! The building block with bend budget `k` is the full binary tree of height
//! `k`. The extremal tree with `k` bends takes a path `v_0 .. v_{k+1}` and
//! hangs, from every inner vertex `v_i`, a full binary tree of height
//! `min(i - 1, k - i)` attached by its root.

use crate::smodel::{SModel, Slot};
use crate::tree::Tree;

/// A tree together with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub tree: Tree,
    pub root: usize,
}

/// The extremal tree with its spine and the roots of the hanging subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalTree {
    pub tree: Tree,
    /// `v_0 .. v_{k+1}`; just `[0]` when `k == 0`.
    pub spine: Vec<usize>,
    /// `(v_i, r_i)` for `i = 1..=k`: spine vertex and root of its hanging subtree.
    pub hangs: Vec<(usize, usize)>,
    pub k: usize,
}

impl ExtremalTree {
    /// Height of the subtree hanging from spine vertex `v_i`, `1 <= i <= k`.
    pub fn hang_height(k: usize, i: usize) -> usize {
        (i - 1).min(k - i)
    }

    /// Vertices of the subtree hanging from `v_i` (excluding `v_i`).
    pub fn hang_vertices(&self, i: usize) -> Vec<usize> {
        let (vi, root) = self.hangs[i - 1];
        self.tree.side(vi, root)
    }
}

/// Full binary tree of height `k` in heap order: root 0, children of `v` are
/// `2v + 1` and `2v + 2`. Has `2^(k+1) - 1` vertices.
pub fn gen_tf(k: usize) -> RootedTree {
    let n = (1usize << (k + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    RootedTree {
        tree: Tree::from_edges(n, &edges).expect("heap-ordered binary tree"),
        root: 0,
    }
}

/// The extremal tree with `k` bends. Spine vertices get ids `0..=k+1`, the
/// hanging copies follow in order of `i`.
pub fn gen_tk(k: usize) -> ExtremalTree {
    if k == 0 {
        return ExtremalTree {
            tree: Tree::single(),
            spine: vec![0],
            hangs: Vec::new(),
            k,
        };
    }
    let spine: Vec<usize> = (0..k + 2).collect();
    let mut edges: Vec<(usize, usize)> = (1..k + 2).map(|i| (i - 1, i)).collect();
    let mut next = k + 2;
    let mut hangs = Vec::with_capacity(k);
    for i in 1..=k {
        let copy = gen_tf(ExtremalTree::hang_height(k, i));
        let offset = next;
        edges.extend(
            copy.tree
                .edges()
                .into_iter()
                .map(|(a, b)| (a + offset, b + offset)),
        );
        edges.push((i, offset + copy.root));
        hangs.push((i, offset + copy.root));
        next += copy.tree.len();
    }
    ExtremalTree {
        tree: Tree::from_edges(next, &edges).expect("spine plus disjoint copies is a tree"),
        spine,
        hangs,
        k,
    }
}

/// A model of [`gen_tk`]`(k)` with `k` bends in which the spine turns at
/// every `v_1 .. v_k`.
///
/// At `v_i` the previous spine vertex sits west and the next one north. The
/// hanging root is placed opposite the next spine vertex in the left half
/// (`2i <= k + 1`) and opposite the previous one otherwise, so paths leaving
/// a hanging subtree run straight towards the far end of the spine. Inside
/// the hanging subtrees the smaller child continues straight and the other
/// one turns.
pub fn spine_bent_model(k: usize) -> SModel {
    let t = gen_tk(k);
    let parent = t.tree.parents_from(0);
    let on_spine = |v: usize| v <= k + 1 && k > 0;
    SModel::from_fn(t.tree.clone(), |v, u| {
        if on_spine(v) {
            return if on_spine(u) {
                if u < v {
                    Slot::W
                } else if v == 0 {
                    Slot::E
                } else {
                    Slot::N
                }
            } else if 2 * v <= k + 1 {
                Slot::S
            } else {
                Slot::E
            };
        }
        if parent[v] == Some(u) {
            return Slot::W;
        }
        let first_child = t
            .tree
            .neighbors(v)
            .iter()
            .copied()
            .find(|&c| parent[c] == Some(v));
        if first_child == Some(u) {
            Slot::E
        } else {
            Slot::N
        }
    })
    .expect("slots are distinct at every vertex")
}

/// Closed-form vertex count of [`gen_tk`].
pub fn tk_vertex_count(k: u32) -> u64 {
    match k {
        0 => 1,
        k if k % 2 == 0 => (1u64 << ((k + 4) / 2)) - 2,
        k => 3 * (1u64 << k.div_ceil(2)) - 2,
    }
}

/// Largest bend number possible for a tree on `n` vertices: `2 log2(n + 2) - 4`.
pub fn bend_upper_bound(n: usize) -> f64 {
    2.0 * ((n + 2) as f64).log2() - 4.0
}

/// Whether `tree` rooted at `root` is a full binary tree of height `k`:
/// the root has two children (none when `k == 0`), every other interior
/// vertex has exactly two children and all leaves sit at depth `k`.
pub fn is_full_binary(tree: &Tree, root: usize, k: usize) -> bool {
    let mut stack = vec![(None, root, 0usize)];
    while let Some((parent, v, depth)) = stack.pop() {
        let kids: Vec<usize> = tree
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| Some(u) != parent)
            .collect();
        match kids.len() {
            0 if depth == k => {}
            2 if depth < k => stack.extend(kids.into_iter().map(|u| (Some(v), u, depth + 1))),
            _ => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::HOST_MAX_DEGREE;

    #[test]
    fn binary_tree_sizes() {
        assert_eq!(gen_tf(0).tree.len(), 1);
        assert_eq!(gen_tf(2).tree.len(), 7);
        let t3 = gen_tf(3);
        assert_eq!(t3.tree.len(), 15);
        assert!(is_full_binary(&t3.tree, t3.root, 3));
        assert_eq!(t3.tree.degree(t3.root), 2);
        for leaf in t3.tree.leaves() {
            assert_eq!(t3.tree.path_between(t3.root, leaf).len() - 1, 3);
        }
    }

    #[test]
    fn full_binary_check_rejects_other_shapes() {
        assert!(is_full_binary(&Tree::single(), 0, 0));
        assert!(!is_full_binary(&Tree::path(3), 0, 2));
        assert!(is_full_binary(&Tree::path(3), 1, 1));
        assert!(!is_full_binary(&Tree::star(3), 0, 1));
    }

    #[test]
    fn extremal_sizes() {
        assert_eq!(gen_tk(0).tree.len(), 1);
        assert_eq!(tk_vertex_count(0), 1);
        assert_eq!(tk_vertex_count(1), 4);
        assert_eq!(tk_vertex_count(2), 6);
        assert_eq!(gen_tk(4).tree.len(), 14);
        assert_eq!(tk_vertex_count(4), 14);
        assert_eq!(gen_tk(5).tree.len(), 22);
        assert_eq!(tk_vertex_count(5), 22);
    }

    #[test]
    fn extremal_structure() {
        let t = gen_tk(5);
        assert_eq!(t.spine, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(t.tree.max_degree() <= HOST_MAX_DEGREE);
        let heights: Vec<usize> = (1..=5).map(|i| ExtremalTree::hang_height(5, i)).collect();
        assert_eq!(heights, vec![0, 1, 2, 1, 0]);
        for (i, &(vi, r)) in t.hangs.iter().enumerate() {
            assert_eq!(vi, i + 1);
            assert!(t.tree.is_edge(vi, r));
            assert_eq!(t.hang_vertices(i + 1).len(), (1 << (heights[i] + 1)) - 1);
        }
        // T_1 is the claw.
        let t1 = gen_tk(1);
        assert_eq!(t1.tree.len(), 4);
        assert_eq!(t1.tree.degree(1), 3);
    }

    #[test]
    fn spine_bent_model_is_optimal() {
        for k in 0..=8 {
            let m = spine_bent_model(k);
            let t = gen_tk(k);
            assert_eq!(m.max_bends(), k, "k = {k}");
            assert_eq!(m.walk_bends(&t.spine), k, "k = {k}");
        }
    }

    #[test]
    fn upper_bound_values() {
        assert!((bend_upper_bound(14) - 4.0).abs() < 1e-12);
        assert!((bend_upper_bound(4) - 1.169_925_001_442_312).abs() < 1e-12);
        assert!((bend_upper_bound(1) + 0.830_074_998_557_688).abs() < 1e-12);
    }
}
