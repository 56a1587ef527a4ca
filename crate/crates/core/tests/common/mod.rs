//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use treebend::smodel::{SModel, Slot};
use treebend::tree::{BuildSequence, Tree};
use treebend::vptepg::VptModel;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random tree on `n` vertices with maximum degree `cap`, grown by attaching
/// each new vertex to a uniformly chosen vertex that still has room.
pub fn random_tree(rng: &mut impl Rng, n: usize, cap: usize) -> Tree {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < cap).collect();
        let p = *open.choose(rng).expect("cap >= 2 leaves room");
        degree[p] += 1;
        degree[v] += 1;
        edges.push((p, v));
    }
    // Scramble ids so vertex 0 is not always the first-grown vertex.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    Tree::from_edges(n, &edges).expect("grown tree")
}

/// Uniformly random distinct slots at every vertex.
pub fn random_model(rng: &mut impl Rng, tree: Tree) -> SModel {
    let slots = (0..tree.len())
        .map(|v| {
            let mut all = Slot::ALL.to_vec();
            all.shuffle(rng);
            all.truncate(tree.degree(v));
            all
        })
        .collect();
    SModel::new(tree, slots).expect("distinct slots")
}

/// Random valid build sequence: random root, then random frontier picks.
pub fn random_sequence(rng: &mut impl Rng, tree: &Tree) -> BuildSequence {
    let root = rng.gen_range(0..tree.len());
    let mut placed = vec![false; tree.len()];
    placed[root] = true;
    let mut steps = vec![(root, None)];
    let mut frontier: Vec<(usize, usize)> =
        tree.neighbors(root).iter().map(|&u| (u, root)).collect();
    while !frontier.is_empty() {
        let (v, p) = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        placed[v] = true;
        steps.push((v, Some(p)));
        frontier.extend(
            tree.neighbors(v)
                .iter()
                .filter(|&&u| !placed[u])
                .map(|&u| (u, v)),
        );
    }
    BuildSequence::new(steps).expect("frontier order is valid")
}

/// Up to `max_paths` random paths, some of them single vertices.
pub fn random_vpt(rng: &mut impl Rng, host: Tree, max_paths: usize) -> VptModel {
    let n = host.len();
    let count = rng.gen_range(1..=max_paths);
    let paths = (0..count)
        .map(|_| {
            let a = rng.gen_range(0..n);
            if rng.gen_bool(0.15) {
                vec![a]
            } else {
                host.path_between(a, rng.gen_range(0..n))
            }
        })
        .collect();
    VptModel::new(host, paths).expect("tree paths")
}

/// Random model of a fresh random tree.
pub fn random_model_of_size(rng: &mut impl Rng, n: usize, cap: usize) -> SModel {
    let tree = random_tree(rng, n, cap);
    random_model(rng, tree)
}
