//! Combinatorial straight models.
//!
//! A straight model assigns every edge incident to a vertex one of the four
//! grid directions at that vertex. Whether a tree path bends at an internal
//! vertex depends only on whether its two edges there sit on opposite slots,
//! so every bend metric is computed from the slot table alone. Turning the
//! slot table into coordinates is the job of [`crate::layout`].

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{Tree, EMBED_MAX_DEGREE};

/// Direction of an edge as seen from one of its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    E,
    W,
    N,
    S,
}

impl Slot {
    /// Fixed fill order used whenever a free slot is needed.
    pub const ALL: [Slot; 4] = [Slot::E, Slot::W, Slot::N, Slot::S];

    pub fn opposite(self) -> Slot {
        match self {
            Slot::E => Slot::W,
            Slot::W => Slot::E,
            Slot::N => Slot::S,
            Slot::S => Slot::N,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Slot::E | Slot::W)
    }

    /// Quarter turn counter-clockwise.
    pub fn rotate_ccw(self) -> Slot {
        match self {
            Slot::E => Slot::N,
            Slot::N => Slot::W,
            Slot::W => Slot::S,
            Slot::S => Slot::E,
        }
    }

    pub fn rotate_ccw_by(self, quarter_turns: u8) -> Slot {
        (0..quarter_turns % 4).fold(self, |s, _| s.rotate_ccw())
    }

    /// Number of counter-clockwise quarter turns taking `self` to `to`.
    pub fn turns_to(self, to: Slot) -> u8 {
        (0..4)
            .find(|&k| self.rotate_ccw_by(k) == to)
            .expect("rotations are transitive")
    }

    /// Unit step on the integer grid, y pointing north.
    pub fn unit(self) -> (i64, i64) {
        match self {
            Slot::E => (1, 0),
            Slot::W => (-1, 0),
            Slot::N => (0, 1),
            Slot::S => (0, -1),
        }
    }

    pub fn from_unit(dx: i64, dy: i64) -> Option<Slot> {
        match (dx.signum(), dy.signum()) {
            (1, 0) => Some(Slot::E),
            (-1, 0) => Some(Slot::W),
            (0, 1) => Some(Slot::N),
            (0, -1) => Some(Slot::S),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Slot::E => "E",
            Slot::W => "W",
            Slot::N => "N",
            Slot::S => "S",
        }
    }

    pub fn parse(s: &str) -> Option<Slot> {
        match s {
            "E" => Some(Slot::E),
            "W" => Some(Slot::W),
            "N" => Some(Slot::N),
            "S" => Some(Slot::S),
            _ => None,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("vertex {vertex} has degree {degree}, a straight model allows at most 4")]
    DegreeExceeded { vertex: usize, degree: usize },
    #[error("vertex {vertex} needs {expected} slots, got {got}")]
    SlotCount {
        vertex: usize,
        expected: usize,
        got: usize,
    },
    #[error("vertex {0} uses the same slot for two edges")]
    DuplicateSlot(usize),
    #[error("({0}, {1}) is not an edge of the tree")]
    NotAnEdge(usize, usize),
    #[error("pairing choice {choice} at vertex {vertex} is out of range")]
    PairingOutOfRange { vertex: usize, choice: u8 },
}

/// Number of essentially different opposite-pairings at a vertex of degree `deg`.
pub fn pairing_arity(deg: usize) -> u8 {
    match deg {
        0 | 1 => 1,
        2 => 2,
        _ => 3,
    }
}

/// Slot table for one vertex realizing pairing `choice` over `deg` edges
/// (edges in sorted-neighbor order).
///
/// * degree 2: `0` collinear, `1` perpendicular;
/// * degree 3: edge `choice` is the odd one out, the other two are opposite;
/// * degree 4: edge 0 is opposite edge `choice + 1`.
pub fn pairing_slots(deg: usize, choice: u8) -> Option<Vec<Slot>> {
    use Slot::*;
    let slots = match (deg, choice) {
        (0, 0) => vec![],
        (1, 0) => vec![E],
        (2, 0) => vec![E, W],
        (2, 1) => vec![E, N],
        (3, 0) => vec![N, E, W],
        (3, 1) => vec![E, N, W],
        (3, 2) => vec![E, W, N],
        (4, 0) => vec![E, W, N, S],
        (4, 1) => vec![E, N, W, S],
        (4, 2) => vec![E, N, S, W],
        _ => return None,
    };
    Some(slots)
}

/// A straight model of a tree: for each vertex, the slot of every incident edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SModel {
    tree: Tree,
    /// `slots[v][i]` is the slot at `v` of the edge to `tree.neighbors(v)[i]`.
    slots: Vec<Vec<Slot>>,
}

impl SModel {
    pub fn new(tree: Tree, slots: Vec<Vec<Slot>>) -> Result<Self, ModelError> {
        if slots.len() != tree.len() {
            return Err(ModelError::SlotCount {
                vertex: slots.len().min(tree.len()),
                expected: tree.len(),
                got: slots.len(),
            });
        }
        for (v, local) in slots.iter().enumerate() {
            check_local(&tree, v, local)?;
        }
        Ok(Self { tree, slots })
    }

    /// Builds a model by asking `slot_of(v, u)` for every vertex and neighbor.
    pub fn from_fn(
        tree: Tree,
        mut slot_of: impl FnMut(usize, usize) -> Slot,
    ) -> Result<Self, ModelError> {
        let slots = (0..tree.len())
            .map(|v| tree.neighbors(v).iter().map(|&u| slot_of(v, u)).collect())
            .collect();
        Self::new(tree, slots)
    }

    /// Model realizing one opposite-pairing choice per vertex (see [`pairing_slots`]).
    pub fn from_pairings(tree: Tree, choices: &[u8]) -> Result<Self, ModelError> {
        assert_eq!(choices.len(), tree.len(), "one pairing choice per vertex");
        let mut slots = Vec::with_capacity(tree.len());
        for (v, &choice) in choices.iter().enumerate() {
            let deg = tree.degree(v);
            if deg > EMBED_MAX_DEGREE {
                return Err(ModelError::DegreeExceeded {
                    vertex: v,
                    degree: deg,
                });
            }
            slots.push(
                pairing_slots(deg, choice)
                    .ok_or(ModelError::PairingOutOfRange { vertex: v, choice })?,
            );
        }
        Ok(Self { tree, slots })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    /// Slots at `v`, parallel to `tree().neighbors(v)`.
    pub fn local_slots(&self, v: usize) -> &[Slot] {
        &self.slots[v]
    }

    /// Slot at `v` of the edge `(v, u)`. Panics if it is not an edge.
    pub fn slot(&self, v: usize, u: usize) -> Slot {
        let i = self
            .tree
            .neighbor_index(v, u)
            .unwrap_or_else(|| panic!("({v}, {u}) is not an edge"));
        self.slots[v][i]
    }

    pub fn set_local_slots(&mut self, v: usize, local: Vec<Slot>) -> Result<(), ModelError> {
        check_local(&self.tree, v, &local)?;
        self.slots[v] = local;
        Ok(())
    }

    /// Neighbor of `v` sitting on `slot`, if any.
    pub fn neighbor_at(&self, v: usize, slot: Slot) -> Option<usize> {
        self.slots[v]
            .iter()
            .position(|&s| s == slot)
            .map(|i| self.tree.neighbors(v)[i])
    }

    /// Whether a path entering `w` from `a` and leaving towards `b` turns at `w`.
    #[inline]
    pub fn bends_at(&self, w: usize, a: usize, b: usize) -> bool {
        self.slot(w, a) != self.slot(w, b).opposite()
    }

    /// Bends of the tree path from `u` to `v`.
    pub fn path_bends(&self, u: usize, v: usize) -> usize {
        let path = self.tree.path_between(u, v);
        self.walk_bends(&path)
    }

    /// Bends along an explicit vertex walk (consecutive vertices adjacent).
    pub fn walk_bends(&self, walk: &[usize]) -> usize {
        walk.windows(3)
            .filter(|w| self.bends_at(w[1], w[0], w[2]))
            .count()
    }

    /// Maximum bends over all leaf-to-leaf paths, via per-edge leaf-bend values.
    pub fn max_bends(&self) -> usize {
        self.leaf_bend_table().max_bends(self)
    }

    /// Reference implementation of [`SModel::max_bends`]: every leaf pair, path by path.
    pub fn max_bends_naive(&self) -> usize {
        let leaves = self.tree.leaves();
        let mut best = 0;
        for (i, &a) in leaves.iter().enumerate() {
            let parent = self.tree.parents_from(a);
            for &b in &leaves[i + 1..] {
                let mut walk = vec![b];
                let mut cur = b;
                while let Some(p) = parent[cur] {
                    walk.push(p);
                    cur = p;
                }
                best = best.max(self.walk_bends(&walk));
            }
        }
        best
    }

    /// Leaf-bend values of every directed edge.
    pub fn leaf_bend_table(&self) -> LeafBendTable {
        LeafBendTable::new(self)
    }

    /// Maximum bends of a path that starts at `p`, contains `v` and ends at a leaf.
    ///
    /// `p` and `v` need not be adjacent; with `p == v` every leaf qualifies.
    pub fn leaf_bends(&self, p: usize, v: usize) -> usize {
        if self.tree.len() == 1 {
            return 0;
        }
        let table = self.leaf_bend_table();
        if p == v {
            return self
                .tree
                .neighbors(v)
                .iter()
                .map(|&u| table.get(&self.tree, v, u))
                .max()
                .unwrap_or(0);
        }
        let path = self.tree.path_between(p, v);
        let inner = self.walk_bends(&path);
        let prev = path[path.len() - 2];
        let tail = self
            .tree
            .neighbors(v)
            .iter()
            .filter(|&&x| x != prev)
            .map(|&x| table.get(&self.tree, v, x) + usize::from(self.bends_at(v, prev, x)))
            .max()
            .unwrap_or(0);
        inner + tail
    }

    /// Neighbors of `v` ranked by leaf-bend value, padded to four with virtual entries.
    pub fn neighbor_rank(&self, v: usize) -> NeighborRank {
        let table = self.leaf_bend_table();
        NeighborRank::build(&self.tree, &table, v, None, 4)
    }

    /// Neighbors of `v` other than `p`, ranked, padded to three.
    pub fn neighbor_rank_excluding(&self, p: usize, v: usize) -> NeighborRank {
        let table = self.leaf_bend_table();
        NeighborRank::build(&self.tree, &table, v, Some(p), 3)
    }

    /// Whether the two highest-ranked neighbors of `v` are opposite.
    ///
    /// Ties in the ranking are resolved in favour of balance: `v` is balanced
    /// if some admissible choice of first and second neighbor is collinear.
    pub fn is_balanced(&self, v: usize) -> bool {
        let table = self.leaf_bend_table();
        is_balanced_with(self, &table, v)
    }

    pub fn is_critical(&self, p: usize, v: Option<usize>) -> Result<bool, ModelError> {
        let Some(v) = v else { return Ok(true) };
        if !self.tree.is_edge(p, v) {
            return Err(ModelError::NotAnEdge(p, v));
        }
        Ok(CriticalPairs::new(self).is_critical(p, v))
    }

    /// All critical ordered edges.
    pub fn critical_pairs(&self) -> Vec<(usize, usize)> {
        let mut crit = CriticalPairs::new(self);
        let mut out = Vec::new();
        for p in 0..self.tree.len() {
            for &v in self.tree.neighbors(p) {
                if crit.is_critical(p, v) {
                    out.push((p, v));
                }
            }
        }
        out
    }

    /// A critical pair whose leaf-bend value equals the model's maximum bends,
    /// which certifies that no model of the tree does better.
    pub fn optimality_certificate(&self) -> Option<Certificate> {
        if self.tree.len() == 1 {
            return Some(Certificate {
                from: 0,
                to: None,
                value: 0,
            });
        }
        let mut crit = CriticalPairs::new(self);
        let target = crit.table.max_bends(self);
        for p in 0..self.tree.len() {
            for &v in self.tree.neighbors(p) {
                if crit.table.get(&self.tree, p, v) == target && crit.is_critical(p, v) {
                    return Some(Certificate {
                        from: p,
                        to: Some(v),
                        value: target,
                    });
                }
            }
        }
        None
    }

    /// A vertex whose arms towards `arms` are all critical pairs, and whose
    /// arm values force `value = max_bends` bends on some leaf-to-leaf path
    /// through it in every model. Complements [`Self::optimality_certificate`]
    /// on trees where no single arm reaches the bend number.
    pub fn junction_certificate(&self) -> Option<JunctionCertificate> {
        let mut crit = CriticalPairs::new(self);
        let target = crit.table.max_bends(self);
        for v in 0..self.tree.len() {
            let arms: Vec<usize> = self
                .tree
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| crit.is_critical(v, u))
                .collect();
            if arms.len() < 2 {
                continue;
            }
            let values: Vec<usize> = arms
                .iter()
                .map(|&u| crit.table.get(&self.tree, v, u))
                .collect();
            if junction_bound(&self.tree, v, &arms, &values) == target {
                return Some(JunctionCertificate {
                    vertex: v,
                    arms,
                    value: target,
                });
            }
        }
        None
    }

    /// A critical pair certificate if there is one, a junction otherwise.
    pub fn certify(&self) -> Option<LowerBound> {
        self.optimality_certificate()
            .map(LowerBound::Pair)
            .or_else(|| self.junction_certificate().map(LowerBound::Junction))
    }

    /// Re-derives `cert` from scratch: criticality of every pair involved and
    /// the claimed value. Does not compare against [`Self::max_bends`].
    pub fn check_lower_bound(&self, cert: &LowerBound) -> bool {
        match cert {
            LowerBound::Pair(c) => match c.to {
                None => c.value == 0,
                Some(v) => {
                    self.tree.is_edge(c.from, v)
                        && self.is_critical(c.from, Some(v)) == Ok(true)
                        && self.leaf_bends(c.from, v) == c.value
                }
            },
            LowerBound::Junction(j) => {
                let arms_ok = j.arms.len() >= 2
                    && j.arms.iter().all(|&u| {
                        self.tree.is_edge(j.vertex, u)
                            && self.is_critical(j.vertex, Some(u)) == Ok(true)
                    });
                arms_ok && {
                    let values: Vec<usize> = j
                        .arms
                        .iter()
                        .map(|&u| self.leaf_bends(j.vertex, u))
                        .collect();
                    junction_bound(&self.tree, j.vertex, &j.arms, &values) == j.value
                }
            }
        }
    }

    /// Same model with every slot rotated by `quarter_turns` (and mirrored when asked).
    pub fn transformed(&self, quarter_turns: u8, mirror: bool) -> SModel {
        let map = |s: Slot| {
            let s = if mirror && s.is_horizontal() {
                s.opposite()
            } else {
                s
            };
            s.rotate_ccw_by(quarter_turns)
        };
        SModel {
            tree: self.tree.clone(),
            slots: self
                .slots
                .iter()
                .map(|local| local.iter().map(|&s| map(s)).collect())
                .collect(),
        }
    }
}

fn check_local(tree: &Tree, v: usize, local: &[Slot]) -> Result<(), ModelError> {
    let deg = tree.degree(v);
    if deg > EMBED_MAX_DEGREE {
        return Err(ModelError::DegreeExceeded {
            vertex: v,
            degree: deg,
        });
    }
    if local.len() != deg {
        return Err(ModelError::SlotCount {
            vertex: v,
            expected: deg,
            got: local.len(),
        });
    }
    for (i, s) in local.iter().enumerate() {
        if local[..i].contains(s) {
            return Err(ModelError::DuplicateSlot(v));
        }
    }
    Ok(())
}

/// `get(p, v)` is the maximum bends of a path from `p` through the edge
/// `(p, v)` to a leaf on `v`'s side.
#[derive(Debug, Clone)]
pub struct LeafBendTable {
    /// `down[v][i]` for the directed edge from `v` to its `i`-th neighbor.
    down: Vec<Vec<usize>>,
}

impl LeafBendTable {
    pub fn new(model: &SModel) -> Self {
        let tree = model.tree();
        let n = tree.len();
        let mut down: Vec<Vec<usize>> = (0..n).map(|v| vec![0; tree.degree(v)]).collect();
        let parent = tree.parents_from(0);
        let order = bfs_order(tree, &parent);

        // Edges pointing away from vertex 0, deepest first.
        for &c in order.iter().rev() {
            let Some(p) = parent[c] else { continue };
            let value = tree
                .neighbors(c)
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x != p)
                .map(|(j, &x)| down[c][j] + usize::from(model.bends_at(c, p, x)))
                .max()
                .unwrap_or(0);
            let i = tree.neighbor_index(p, c).expect("tree edge");
            down[p][i] = value;
        }
        // Edges pointing towards vertex 0, shallowest first.
        for &c in &order {
            let Some(p) = parent[c] else { continue };
            let value = tree
                .neighbors(p)
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x != c)
                .map(|(j, &x)| down[p][j] + usize::from(model.bends_at(p, c, x)))
                .max()
                .unwrap_or(0);
            let i = tree.neighbor_index(c, p).expect("tree edge");
            down[c][i] = value;
        }
        Self { down }
    }

    #[inline]
    pub fn get(&self, tree: &Tree, p: usize, v: usize) -> usize {
        let i = tree.neighbor_index(p, v).expect("tree edge");
        self.down[p][i]
    }

    /// Values at `v` towards each neighbor, parallel to `tree.neighbors(v)`.
    pub fn at(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    pub fn max_bends(&self, model: &SModel) -> usize {
        let tree = model.tree();
        let mut best = 0;
        for v in 0..tree.len() {
            let nb = tree.neighbors(v);
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let through = self.down[v][i]
                        + self.down[v][j]
                        + usize::from(model.bends_at(v, nb[i], nb[j]));
                    best = best.max(through);
                }
            }
        }
        best
    }
}

fn bfs_order(tree: &Tree, parent: &[Option<usize>]) -> Vec<usize> {
    let mut order = Vec::with_capacity(tree.len());
    let root = parent.iter().position(Option::is_none).unwrap_or(0);
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        order.extend(tree.neighbors(v).iter().filter(|&&u| parent[u] == Some(v)));
    }
    order
}

/// One ranked neighbor; `vertex == None` marks a virtual neighbor with value -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankEntry {
    pub vertex: Option<usize>,
    pub bends: i64,
}

/// Neighbors in non-increasing order of leaf-bend value, ties by smaller id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborRank {
    entries: Vec<RankEntry>,
}

impl NeighborRank {
    pub(crate) fn build(
        tree: &Tree,
        table: &LeafBendTable,
        v: usize,
        exclude: Option<usize>,
        width: usize,
    ) -> Self {
        let mut entries: Vec<RankEntry> = tree
            .neighbors(v)
            .iter()
            .zip(table.at(v))
            .filter(|&(&u, _)| Some(u) != exclude)
            .map(|(&u, &b)| RankEntry {
                vertex: Some(u),
                bends: b as i64,
            })
            .collect();
        entries.sort_by_key(|e| (Reverse(e.bends), e.vertex));
        entries.resize(
            width.max(entries.len()),
            RankEntry {
                vertex: None,
                bends: -1,
            },
        );
        Self { entries }
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    /// Entry `i` counting from 1, as `u^i` / `b^i`.
    pub fn get(&self, i: usize) -> RankEntry {
        self.entries[i - 1]
    }

    pub fn values(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.bends).collect()
    }
}

pub(crate) fn is_balanced_with(model: &SModel, table: &LeafBendTable, v: usize) -> bool {
    let tree = model.tree();
    if tree.degree(v) <= 1 {
        return true;
    }
    let values = table.at(v);
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let (b1, b2) = (sorted[0], sorted[1]);
    let nb = tree.neighbors(v);
    let local = model.local_slots(v);
    (0..nb.len()).any(|i| {
        values[i] == b1
            && (0..nb.len()).any(|j| j != i && values[j] == b2 && local[i] == local[j].opposite())
    })
}

/// Least, over all pairings at `v`, of the largest `values[a] + values[b] +
/// [bend at v]` over two distinct arms.
fn junction_bound(tree: &Tree, v: usize, arms: &[usize], values: &[usize]) -> usize {
    let deg = tree.degree(v);
    let pos: Vec<usize> = arms
        .iter()
        .map(|&u| tree.neighbor_index(v, u).expect("arm is a neighbor"))
        .collect();
    (0..pairing_arity(deg))
        .map(|choice| {
            let slots = pairing_slots(deg, choice).expect("choice within arity");
            let mut worst = 0;
            for i in 0..arms.len() {
                for j in i + 1..arms.len() {
                    let bend = slots[pos[i]] != slots[pos[j]].opposite();
                    worst = worst.max(values[i] + values[j] + bend as usize);
                }
            }
            worst
        })
        .min()
        .unwrap_or(0)
}

/// Memoized evaluation of the recursive critical-pair condition.
struct CriticalPairs<'a> {
    model: &'a SModel,
    table: LeafBendTable,
    memo: Vec<Vec<Option<bool>>>,
}

impl<'a> CriticalPairs<'a> {
    fn new(model: &'a SModel) -> Self {
        let tree = model.tree();
        Self {
            model,
            table: model.leaf_bend_table(),
            memo: (0..tree.len())
                .map(|v| vec![None; tree.degree(v)])
                .collect(),
        }
    }

    fn is_critical(&mut self, p: usize, v: usize) -> bool {
        let tree = self.model.tree();
        let slot = tree.neighbor_index(p, v).expect("tree edge");
        if let Some(known) = self.memo[p][slot] {
            return known;
        }
        let here = self.table.get(tree, p, v) as i64;
        let kids: Vec<(usize, i64)> = tree
            .neighbors(v)
            .iter()
            .zip(self.table.at(v))
            .filter(|&(&u, _)| u != p)
            .map(|(&u, &b)| (u, b as i64))
            .collect();
        let mut values: Vec<i64> = kids.iter().map(|&(_, b)| b).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.resize(values.len().max(2), -1);
        let (b1, b2) = (values[0], values[1]);
        let with_value = |b: i64| -> Vec<usize> {
            kids.iter()
                .filter(|&&(_, x)| x == b)
                .map(|&(u, _)| u)
                .collect()
        };

        // First clause: the value is inherited from a critical top neighbor.
        let mut result =
            here == b1 && b1 >= 0 && with_value(b1).into_iter().any(|u| self.is_critical(v, u));

        // Second clause: one bend over the second-best, both top neighbors critical.
        if !result && here == b2 + 1 {
            result = if b2 < 0 {
                b1 < 0 || with_value(b1).into_iter().any(|u| self.is_critical(v, u))
            } else if b1 > b2 {
                with_value(b1).into_iter().any(|u| self.is_critical(v, u))
                    && with_value(b2).into_iter().any(|u| self.is_critical(v, u))
            } else {
                with_value(b1)
                    .into_iter()
                    .filter(|&u| self.is_critical(v, u))
                    .take(2)
                    .count()
                    == 2
            };
        }
        self.memo[p][slot] = Some(result);
        result
    }
}

/// A critical pair `(from, to)` with its leaf-bend value; lower-bounds the
/// bend number of the tree by `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub from: usize,
    pub to: Option<usize>,
    pub value: usize,
}

/// Arms of `vertex` that are all critical pairs; every model has a
/// leaf-to-leaf path through `vertex` with at least `value` bends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JunctionCertificate {
    pub vertex: usize,
    pub arms: Vec<usize>,
    pub value: usize,
}

/// Either kind of lower-bound certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LowerBound {
    Pair(Certificate),
    Junction(JunctionCertificate),
}

impl LowerBound {
    pub fn value(&self) -> usize {
        match self {
            LowerBound::Pair(c) => c.value,
            LowerBound::Junction(j) => j.value,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(slots_at_center: [Slot; 2]) -> SModel {
        let t = Tree::path(3);
        SModel::new(
            t,
            vec![vec![Slot::W], slots_at_center.to_vec(), vec![Slot::W]],
        )
        .unwrap()
    }

    #[test]
    fn slot_algebra() {
        for s in Slot::ALL {
            assert_eq!(s.opposite().opposite(), s);
            assert_eq!(s.is_horizontal(), s.opposite().is_horizontal());
            assert_eq!(s.rotate_ccw_by(4), s);
            assert_eq!(s.rotate_ccw_by(2), s.opposite());
            assert_eq!(Slot::parse(s.as_str()), Some(s));
            let (dx, dy) = s.unit();
            assert_eq!(Slot::from_unit(dx, dy), Some(s));
        }
        assert_eq!(Slot::E.turns_to(Slot::S), 3);
    }

    #[test]
    fn path_of_three() {
        let straight = p3([Slot::E, Slot::W]);
        assert_eq!(straight.path_bends(0, 2), 0);
        assert_eq!(straight.max_bends(), 0);
        let bent = p3([Slot::E, Slot::N]);
        assert_eq!(bent.path_bends(0, 2), 1);
        assert_eq!(bent.path_bends(2, 0), 1);
        assert_eq!(bent.path_bends(1, 1), 0);
        assert_eq!(bent.max_bends(), 1);
        assert!(!bent.is_balanced(1));
        assert!(straight.is_balanced(1));
        assert!(bent.is_balanced(0));
    }

    #[test]
    fn duplicate_slots_rejected() {
        let t = Tree::path(3);
        let err = SModel::new(
            t.clone(),
            vec![vec![Slot::W], vec![Slot::E, Slot::E], vec![Slot::W]],
        );
        assert_eq!(err.unwrap_err(), ModelError::DuplicateSlot(1));
        let err = SModel::new(t, vec![vec![Slot::W], vec![Slot::E], vec![Slot::W]]);
        assert!(matches!(
            err.unwrap_err(),
            ModelError::SlotCount { vertex: 1, .. }
        ));
    }

    #[test]
    fn star_of_four() {
        let m = SModel::from_pairings(Tree::star(4), &[0, 0, 0, 0, 0]).unwrap();
        // Center slots E, W, N, S for leaves 1..4.
        assert_eq!(m.path_bends(1, 2), 0);
        assert_eq!(m.path_bends(1, 3), 1);
        assert_eq!(m.path_bends(3, 4), 0);
        assert_eq!(m.max_bends(), 1);
        let rank = m.neighbor_rank(0);
        assert!(rank.entries().iter().all(|e| e.bends == 0));
        assert!(m.is_balanced(0));
    }

    #[test]
    fn star_of_three_always_one_bend() {
        for choice in 0..3 {
            let m = SModel::from_pairings(Tree::star(3), &[choice, 0, 0, 0]).unwrap();
            assert_eq!(m.max_bends(), 1);
            assert_eq!(m.max_bends_naive(), 1);
            let cert = m.optimality_certificate().unwrap();
            assert_eq!(cert.value, 1);
        }
    }

    #[test]
    fn leaf_bends_examples() {
        // Edge to a leaf.
        let m = p3([Slot::E, Slot::N]);
        assert_eq!(m.leaf_bends(1, 2), 0);
        // p - v - x - y with a bend at x only.
        let t = Tree::path(4);
        let m = SModel::new(
            t,
            vec![
                vec![Slot::E],
                vec![Slot::W, Slot::E],
                vec![Slot::W, Slot::N],
                vec![Slot::S],
            ],
        )
        .unwrap();
        assert_eq!(m.leaf_bends(0, 1), 1);
        assert_eq!(m.leaf_bends(0, 3), 1);
        assert_eq!(m.leaf_bends(1, 1), 1);
        // K_{1,3}, leaves 1 and 2 opposite, leaf 3 perpendicular.
        let m = SModel::from_pairings(Tree::star(3), &[2, 0, 0, 0]).unwrap();
        assert_eq!(m.slot(0, 1), Slot::E);
        assert_eq!(m.slot(0, 2), Slot::W);
        assert_eq!(m.leaf_bends(1, 0), 1);
        assert_eq!(m.leaf_bends(3, 0), 1);
        assert_eq!(m.leaf_bends(0, 1), 0);
        assert_eq!(
            SModel::from_pairings(Tree::single(), &[0])
                .unwrap()
                .leaf_bends(0, 0),
            0
        );
    }

    #[test]
    fn neighbor_rank_of_a_leaf_is_padded() {
        let m = p3([Slot::E, Slot::W]);
        let rank = m.neighbor_rank(0);
        assert_eq!(rank.get(1).vertex, Some(1));
        assert_eq!(rank.get(1).bends, 0);
        for i in 2..=4 {
            assert_eq!(
                rank.get(i),
                RankEntry {
                    vertex: None,
                    bends: -1
                }
            );
        }
        let ex = m.neighbor_rank_excluding(0, 1);
        assert_eq!(ex.entries().len(), 3);
        assert_eq!(ex.get(1).vertex, Some(2));
        assert_eq!(ex.get(2).bends, -1);
    }

    #[test]
    fn critical_base_cases() {
        let m = p3([Slot::E, Slot::N]);
        assert_eq!(m.is_critical(0, None), Ok(true));
        assert_eq!(m.is_critical(1, Some(2)), Ok(true));
        assert_eq!(m.is_critical(0, Some(2)), Err(ModelError::NotAnEdge(0, 2)));
        // Bent degree-2 chain: leaf value 1 = b^1(0) + 1 but neither clause applies.
        assert_eq!(m.leaf_bends(0, 1), 1);
        assert_eq!(m.is_critical(0, Some(1)), Ok(false));
        // Straight chain: inherited value.
        let m = p3([Slot::E, Slot::W]);
        assert_eq!(m.is_critical(0, Some(1)), Ok(true));
    }

    #[test]
    fn degree_four_balance_by_ranking() {
        // Center 0 with four arms of different bend depth: arm values 3, 2, 1, 0
        // are produced by hanging bent chains off the neighbors.
        let m = crate::test_support::four_arm_model([Slot::E, Slot::N, Slot::W, Slot::S]);
        let rank = m.neighbor_rank(0);
        assert_eq!(rank.values(), vec![3, 2, 1, 0]);
        assert!(!m.is_balanced(0));
        let m = crate::test_support::four_arm_model([Slot::E, Slot::W, Slot::N, Slot::S]);
        assert!(m.is_balanced(0));
    }

    #[test]
    fn example_tree_needs_a_junction() {
        let m = crate::minbend::embed(&crate::test_support::example_tree()).unwrap();
        assert_eq!(m.max_bends(), 3);
        // No single arm of this tree forces three bends in every model.
        assert_eq!(m.optimality_certificate(), None);
        let cert = m.certify().unwrap();
        assert!(matches!(cert, LowerBound::Junction(_)));
        assert_eq!(cert.value(), 3);
        assert!(m.check_lower_bound(&cert));
        let LowerBound::Junction(mut j) = cert else {
            unreachable!()
        };
        j.value = 4;
        assert!(!m.check_lower_bound(&LowerBound::Junction(j)));
    }

    #[test]
    fn junction_bound_on_a_claw() {
        // Three leaves: any pairing leaves one bent pair.
        let t = Tree::star(3);
        assert_eq!(junction_bound(&t, 0, &[1, 2, 3], &[0, 0, 0]), 1);
        assert_eq!(junction_bound(&t, 0, &[1, 2], &[0, 0]), 0);
        assert_eq!(junction_bound(&t, 0, &[1, 2, 3], &[2, 1, 1]), 4);
    }

    #[test]
    fn certificate_on_tiny_trees() {
        let single = SModel::from_pairings(Tree::single(), &[0]).unwrap();
        assert_eq!(
            single.optimality_certificate(),
            Some(Certificate {
                from: 0,
                to: None,
                value: 0
            })
        );
        let edge = SModel::from_pairings(Tree::path(2), &[0, 0]).unwrap();
        let cert = edge.optimality_certificate().unwrap();
        assert_eq!(cert.value, 0);
        assert!(cert.to.is_some());
    }

    #[test]
    fn transformations_preserve_bends() {
        let m = crate::test_support::four_arm_model([Slot::E, Slot::N, Slot::W, Slot::S]);
        let base = m.max_bends();
        for turns in 0..4 {
            for mirror in [false, true] {
                let t = m.transformed(turns, mirror);
                assert_eq!(t.max_bends(), base);
                assert_eq!(t.path_bends(4, 10), m.path_bends(4, 10));
            }
        }
    }
}
