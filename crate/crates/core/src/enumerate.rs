//! Exhaustive enumeration of small free trees, one representative per
//! isomorphism class.
//!
//! Up to eight vertices every Prüfer sequence is decoded and deduplicated by
//! canonical form. For nine and ten vertices the classes are grown by leaf
//! extension of the previous size, which stays small in memory.

use std::collections::BTreeMap;

use crate::tree::{Tree, TreeError};

/// Largest vertex count [`enumerate_trees`] accepts.
pub const MAX_ENUM_VERTICES: usize = 10;
const MAX_PRUFER_VERTICES: usize = 8;

/// AHU encoding of `tree` rooted at `root`.
pub fn rooted_canonical(tree: &Tree, root: usize) -> String {
    encode(tree, None, root)
}

/// Encoding of the subtree hanging below `v` when entered from `parent`.
fn encode(tree: &Tree, parent: Option<usize>, v: usize) -> String {
    let mut parts: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&u| Some(u) != parent)
        .map(|&u| encode(tree, Some(v), u))
        .collect();
    parts.sort_unstable();
    let mut s = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
    s.push('(');
    parts.iter().for_each(|p| s.push_str(p));
    s.push(')');
    s
}

/// The one or two center vertices (minimum eccentricity).
pub fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &u in tree.neighbors(leaf) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical string of the free tree: lexicographic minimum of the AHU
/// encodings rooted at its centers. Equal strings iff isomorphic trees.
pub fn canonical_form(tree: &Tree) -> String {
    centers(tree)
        .into_iter()
        .map(|c| rooted_canonical(tree, c))
        .min()
        .expect("a tree has a center")
}

/// Canonical representative: BFS numbering from the canonical root, children
/// visited in order of their encodings.
fn canonical_representative(tree: &Tree) -> (String, Tree) {
    let (root, code) = centers(tree)
        .into_iter()
        .map(|c| (c, rooted_canonical(tree, c)))
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("a tree has a center");
    let mut perm = vec![usize::MAX; tree.len()];
    let mut order = vec![(None, root)];
    let mut next = 0;
    let mut head = 0;
    while head < order.len() {
        let (parent, v) = order[head];
        head += 1;
        perm[v] = next;
        next += 1;
        let mut kids: Vec<(String, usize)> = tree
            .neighbors(v)
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| (encode(tree, Some(v), u), u))
            .collect();
        kids.sort();
        order.extend(kids.into_iter().map(|(_, u)| (Some(v), u)));
    }
    (code, tree.relabel(&perm))
}

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into its tree.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Every free tree on `n` vertices with maximum degree at most `max_degree`,
/// one canonical representative per isomorphism class, ordered by canonical form.
pub fn enumerate_trees(n: usize, max_degree: usize) -> Result<Vec<Tree>, TreeError> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(TreeError::SizeTooLarge {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    let classes = if n <= MAX_PRUFER_VERTICES {
        by_prufer(n, max_degree)
    } else {
        by_extension(n, max_degree)
    };
    Ok(classes.into_values().collect())
}

fn by_prufer(n: usize, max_degree: usize) -> BTreeMap<String, Tree> {
    let mut out = BTreeMap::new();
    if n <= 2 {
        let t = Tree::path(n);
        if t.max_degree() <= max_degree {
            let (code, rep) = canonical_representative(&t);
            out.insert(code, rep);
        }
        return out;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut counts = vec![0usize; n];
    counts[0] = len;
    loop {
        // A vertex appearing k times in the sequence has degree k + 1.
        if counts.iter().all(|&c| c < max_degree) {
            let t = prufer_decode(&seq);
            let (code, rep) = canonical_representative(&t);
            out.entry(code).or_insert(rep);
        }
        // Odometer increment.
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            counts[seq[i]] -= 1;
            if seq[i] + 1 < n {
                seq[i] += 1;
                counts[seq[i]] += 1;
                break;
            }
            seq[i] = 0;
            counts[0] += 1;
        }
    }
}

fn by_extension(n: usize, max_degree: usize) -> BTreeMap<String, Tree> {
    let mut level = by_prufer(MAX_PRUFER_VERTICES.min(n), max_degree);
    for size in MAX_PRUFER_VERTICES + 1..=n {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            let mut edges = tree.edges();
            for v in 0..tree.len() {
                if tree.degree(v) >= max_degree {
                    continue;
                }
                edges.push((v, size - 1));
                let grown = Tree::from_edges(size, &edges).expect("adding a leaf keeps a tree");
                edges.pop();
                let code = canonical_form(&grown);
                if !next.contains_key(&code) {
                    let (code, rep) = canonical_representative(&grown);
                    next.insert(code, rep);
                }
            }
        }
        level = next;
    }
    level
}
