//! Ground-truth bend numbers by exhaustive search over opposite-pairings.
//!
//! Bends depend only on which incident edges sit opposite each other at every
//! vertex, so the search ranges over pairings: two states at a degree-2
//! vertex, three at degree 3 or 4, one otherwise. The search is a plain
//! branch-and-bound and shares nothing with [`crate::minbend`]; it keeps its
//! own notion of which edge pairs are collinear.

use thiserror::Error;

use crate::enumerate::{enumerate_trees, MAX_ENUM_VERTICES};
use crate::smodel::{pairing_arity, SModel};
use crate::tree::{Tree, TreeError, EMBED_MAX_DEGREE};

/// Default cap on the number of pairings a single query may range over.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex {vertex} has degree {degree}, a straight model allows at most 4")]
    DegreeExceeded { vertex: usize, degree: usize },
    #[error("search space of {space} pairings exceeds the budget of {budget}")]
    BudgetExceeded { space: u128, budget: u128 },
    #[error("({0}, {1}) is not an edge of the tree")]
    NotAnEdge(usize, usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Whether neighbor positions `a` and `b` at a vertex of degree `deg` are
/// collinear under pairing `choice`.
fn collinear(deg: usize, choice: u8, a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    match deg {
        2 => choice == 0,
        // `choice` names the edge left without a partner.
        3 => a != choice as usize && b != choice as usize,
        // Edge 0 is partnered with edge `choice + 1`; the other two pair up.
        4 => {
            let partner = choice as usize + 1;
            if a == 0 {
                b == partner
            } else {
                a != partner && b != partner
            }
        }
        _ => false,
    }
}

/// A path reduced to the vertices where it may turn.
struct Turns {
    /// (vertex, neighbor position in, neighbor position out)
    sites: Vec<(usize, usize, usize)>,
}

fn turns_of(tree: &Tree, walk: &[usize]) -> Turns {
    let sites = walk
        .windows(3)
        .map(|w| {
            let a = tree.neighbor_index(w[1], w[0]).expect("walk edge");
            let b = tree.neighbor_index(w[1], w[2]).expect("walk edge");
            (w[1], a, b)
        })
        .collect();
    Turns { sites }
}

fn check_degree(tree: &Tree) -> Result<(), OracleError> {
    match (0..tree.len()).find(|&v| tree.degree(v) > EMBED_MAX_DEGREE) {
        Some(v) => Err(OracleError::DegreeExceeded {
            vertex: v,
            degree: tree.degree(v),
        }),
        None => Ok(()),
    }
}

/// Min over pairings of the max bends over `paths`, by branch and bound.
fn minimax(tree: &Tree, paths: &[Turns], budget: u128) -> Result<usize, OracleError> {
    // Only vertices where some path can turn and that have a real choice matter.
    let mut decision: Vec<usize> = paths
        .iter()
        .flat_map(|p| p.sites.iter().map(|&(w, _, _)| w))
        .filter(|&w| pairing_arity(tree.degree(w)) > 1)
        .collect();
    decision.sort_unstable();
    decision.dedup();
    let space = decision
        .iter()
        .try_fold(1u128, |acc, &w| {
            acc.checked_mul(pairing_arity(tree.degree(w)) as u128)
        })
        .unwrap_or(u128::MAX);
    if space > budget {
        return Err(OracleError::BudgetExceeded { space, budget });
    }
    // Sites grouped by decision vertex, as (path index, in, out).
    let mut by_vertex: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); decision.len()];
    for (pi, p) in paths.iter().enumerate() {
        for &(w, a, b) in &p.sites {
            if let Ok(k) = decision.binary_search(&w) {
                by_vertex[k].push((pi, a, b));
            }
        }
    }
    // Turns at vertices without a choice are fixed (degree <= 1 never occurs
    // inside a path), so every site belongs to a decision vertex.
    let mut search = Search {
        tree,
        decision: &decision,
        by_vertex: &by_vertex,
        counts: vec![0; paths.len()],
        best: usize::MAX,
    };
    search.run(0, 0);
    Ok(if paths.is_empty() { 0 } else { search.best })
}

struct Search<'a> {
    tree: &'a Tree,
    decision: &'a [usize],
    by_vertex: &'a [Vec<(usize, usize, usize)>],
    counts: Vec<usize>,
    best: usize,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, current: usize) {
        if current >= self.best {
            return;
        }
        if depth == self.decision.len() {
            self.best = current;
            return;
        }
        let w = self.decision[depth];
        let deg = self.tree.degree(w);
        for choice in 0..pairing_arity(deg) {
            let mut raised = current;
            for &(pi, a, b) in &self.by_vertex[depth] {
                if !collinear(deg, choice, a, b) {
                    self.counts[pi] += 1;
                    raised = raised.max(self.counts[pi]);
                }
            }
            self.run(depth + 1, raised);
            for &(pi, a, b) in &self.by_vertex[depth] {
                if !collinear(deg, choice, a, b) {
                    self.counts[pi] -= 1;
                }
            }
        }
    }
}

/// Product of the per-vertex pairing counts.
pub fn pairing_space_size(tree: &Tree) -> u128 {
    (0..tree.len())
        .map(|v| pairing_arity(tree.degree(v)) as u128)
        .fold(1u128, u128::saturating_mul)
}

/// Bend number of `tree`: the minimum over all models of the maximum bends
/// of a leaf-to-leaf path.
pub fn oracle_b(tree: &Tree) -> Result<usize, OracleError> {
    oracle_b_with_budget(tree, DEFAULT_BUDGET)
}

pub fn oracle_b_with_budget(tree: &Tree, budget: u128) -> Result<usize, OracleError> {
    check_degree(tree)?;
    let leaves = tree.leaves();
    let mut paths = Vec::new();
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            paths.push(turns_of(tree, &tree.path_between(a, b)));
        }
    }
    minimax(tree, &paths, budget)
}

/// Minimum over all models of the maximum bends of a path from `p` through
/// the edge `(p, v)` to a leaf.
pub fn oracle_leaf_bends(tree: &Tree, p: usize, v: usize) -> Result<usize, OracleError> {
    oracle_leaf_bends_with_budget(tree, p, v, DEFAULT_BUDGET)
}

pub fn oracle_leaf_bends_with_budget(
    tree: &Tree,
    p: usize,
    v: usize,
    budget: u128,
) -> Result<usize, OracleError> {
    check_degree(tree)?;
    if !tree.is_edge(p, v) {
        return Err(OracleError::NotAnEdge(p, v));
    }
    let paths: Vec<Turns> = tree
        .side(p, v)
        .into_iter()
        .filter(|&f| tree.is_leaf(f))
        .map(|f| turns_of(tree, &tree.path_between(p, f)))
        .collect();
    minimax(tree, &paths, budget)
}

/// Every model of `tree` up to slot symmetry: one per combination of pairings.
pub fn enumerate_models(tree: &Tree) -> impl Iterator<Item = SModel> + '_ {
    let arity: Vec<u8> = (0..tree.len())
        .map(|v| pairing_arity(tree.degree(v)))
        .collect();
    let mut next = Some(vec![0u8; tree.len()]);
    std::iter::from_fn(move || {
        let choices = next.take()?;
        let mut succ = choices.clone();
        for (i, c) in succ.iter_mut().enumerate() {
            *c += 1;
            if *c < arity[i] {
                next = Some(succ);
                break;
            }
            *c = 0;
        }
        Some(SModel::from_pairings(tree.clone(), &choices).expect("degree checked by caller"))
    })
}

/// Smallest `n <= n_max` for which some tree of maximum degree 4 on `n`
/// vertices has bend number exactly `k`.
pub fn min_vertices_with_bends(k: usize, n_max: usize) -> Result<Option<usize>, OracleError> {
    if n_max > MAX_ENUM_VERTICES {
        return Err(TreeError::SizeTooLarge {
            n: n_max,
            max: MAX_ENUM_VERTICES,
        }
        .into());
    }
    for n in 1..=n_max {
        for t in enumerate_trees(n, EMBED_MAX_DEGREE)? {
            if oracle_b(&t)? == k {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collinearity_matches_model_slots() {
        for deg in 2..=4 {
            let tree = Tree::star(deg);
            for choice in 0..pairing_arity(deg) {
                let mut choices = vec![0u8; deg + 1];
                choices[0] = choice;
                let m = SModel::from_pairings(tree.clone(), &choices).unwrap();
                for a in 0..deg {
                    for b in 0..deg {
                        if a != b {
                            let (u, w) = (a + 1, b + 1);
                            assert_eq!(
                                collinear(deg, choice, a, b),
                                !m.bends_at(0, u, w),
                                "deg {deg} choice {choice} ({a}, {b})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_bend_numbers() {
        assert_eq!(oracle_b(&Tree::single()), Ok(0));
        assert_eq!(oracle_b(&Tree::path(2)), Ok(0));
        assert_eq!(oracle_b(&Tree::path(9)), Ok(0));
        assert_eq!(oracle_b(&Tree::star(3)), Ok(1));
        assert_eq!(oracle_b(&Tree::star(4)), Ok(1));
        assert!(matches!(
            oracle_b(&Tree::star(5)),
            Err(OracleError::DegreeExceeded {
                vertex: 0,
                degree: 5
            })
        ));
    }

    #[test]
    fn star_leaf_bends() {
        let t = Tree::star(3);
        assert_eq!(oracle_leaf_bends(&t, 0, 1), Ok(0));
        assert_eq!(oracle_leaf_bends(&t, 1, 0), Ok(1));
        assert_eq!(
            oracle_leaf_bends(&t, 1, 2),
            Err(OracleError::NotAnEdge(1, 2))
        );
    }

    #[test]
    fn budget_is_enforced() {
        let t = Tree::star(3);
        assert_eq!(
            oracle_b_with_budget(&t, 2),
            Err(OracleError::BudgetExceeded {
                space: 3,
                budget: 2
            })
        );
        assert_eq!(oracle_b_with_budget(&t, 3), Ok(1));
    }

    #[test]
    fn model_enumeration_covers_the_space() {
        let t = crate::test_support::example_tree();
        let space = pairing_space_size(&t);
        assert_eq!(space, 2 * 3u128.pow(6));
        assert_eq!(enumerate_models(&t).count() as u128, space);
        assert_eq!(enumerate_models(&Tree::single()).count(), 1);
    }

    #[test]
    fn oracle_lower_bounds_every_model() {
        let t = crate::test_support::example_tree();
        let b = oracle_b(&t).unwrap();
        let best = enumerate_models(&t)
            .map(|m| m.max_bends_naive())
            .min()
            .unwrap();
        assert_eq!(b, best);
    }

    #[test]
    fn smallest_trees_per_bend_count() {
        assert_eq!(min_vertices_with_bends(0, 6), Ok(Some(1)));
        assert_eq!(min_vertices_with_bends(1, 6), Ok(Some(4)));
        assert_eq!(min_vertices_with_bends(2, 6), Ok(Some(6)));
        assert_eq!(min_vertices_with_bends(3, 6), Ok(None));
        assert!(min_vertices_with_bends(1, 11).is_err());
    }
}
