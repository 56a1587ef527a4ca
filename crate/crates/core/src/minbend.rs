//! Bend-minimal straight models by incremental construction.
//!
//! Vertices are added one at a time along a build sequence. After each
//! addition the whole tree is traversed in post-order from the new vertex and
//! every unbalanced vertex is rebalanced by putting its two deepest subtrees
//! on opposite sides. The resulting model attains the bend number of the tree.
//!
//! Rebalancing only permutes the slots of one vertex. Leaf-bend values of the
//! directed edges are cached; a change at vertex `w` invalidates exactly the
//! edges pointing towards `w`, and invalid entries are recomputed on demand.

use thiserror::Error;

use crate::smodel::{LeafBendTable, SModel, Slot};
use crate::tree::{BuildSequence, Tree, EMBED_MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("vertex {vertex} has degree {degree}, a straight model allows at most 4")]
    DegreeExceeded { vertex: usize, degree: usize },
    #[error("vertex {0} has no free slot left")]
    NoFreeSlot(usize),
    #[error("vertex {0} is outside the model")]
    VertexOutOfRange(usize),
    #[error("vertex {0} is already part of the model")]
    AlreadyPresent(usize),
    #[error("vertex {0} has not been added yet")]
    NotPresent(usize),
    #[error("build sequence does not describe the input tree")]
    SequenceMismatch,
}

/// Computes a straight model with the minimum possible maximum bends, growing
/// the tree in BFS order from vertex 0.
pub fn embed(tree: &Tree) -> Result<SModel, EmbedError> {
    embed_with_sequence(tree, &tree.build_sequence(0))
}

/// Like [`embed`] with a caller-chosen build sequence.
pub fn embed_with_sequence(tree: &Tree, seq: &BuildSequence) -> Result<SModel, EmbedError> {
    Ok(embed_traced(tree, seq)?.0)
}

/// Runs the construction and also reports the maximum bends of the partial
/// model after every vertex addition (entry 0 is the single start vertex).
pub fn embed_traced(tree: &Tree, seq: &BuildSequence) -> Result<(SModel, Vec<usize>), EmbedError> {
    if let Some(v) = (0..tree.len()).find(|&v| tree.degree(v) > EMBED_MAX_DEGREE) {
        return Err(EmbedError::DegreeExceeded {
            vertex: v,
            degree: tree.degree(v),
        });
    }
    if !seq.builds(tree) {
        return Err(EmbedError::SequenceMismatch);
    }
    let mut emb = Embedder::new(tree.len(), seq.root())?;
    let mut trace = Vec::with_capacity(tree.len());
    trace.push(0);
    for &(v, p) in &seq.steps()[1..] {
        let p = p.expect("validated sequence");
        emb.attach(v, p)?;
        emb.balance(v, p);
        trace.push(emb.max_bends());
    }
    // Same edge set as `tree`, so the slot tables line up; this keeps labels.
    let raw = emb.finish();
    let slots = (0..tree.len())
        .map(|v| raw.local_slots(v).to_vec())
        .collect();
    let model = SModel::new(tree.clone(), slots).expect("same tree, same slots");
    Ok((model, trace))
}

/// Private working state of the construction: a partial tree with slot
/// assignments and cached leaf-bend values per directed edge.
#[derive(Debug, Clone)]
pub struct Embedder {
    present: Vec<bool>,
    adj: Vec<Vec<usize>>,
    slots: Vec<Vec<Slot>>,
    cache: Vec<Vec<Option<usize>>>,
}

impl Embedder {
    /// Starts with the single vertex `root` out of `n` possible ids.
    pub fn new(n: usize, root: usize) -> Result<Self, EmbedError> {
        if root >= n {
            return Err(EmbedError::VertexOutOfRange(root));
        }
        let mut present = vec![false; n];
        present[root] = true;
        Ok(Self {
            present,
            adj: vec![Vec::new(); n],
            slots: vec![Vec::new(); n],
            cache: vec![Vec::new(); n],
        })
    }

    /// Adds `v` as a new leaf of `p` on the first free slot of `p` in E, W, N, S
    /// order. The new vertex sees `p` on its W slot. Returns the slot used at `p`.
    pub fn attach(&mut self, v: usize, p: usize) -> Result<Slot, EmbedError> {
        let n = self.present.len();
        if v >= n {
            return Err(EmbedError::VertexOutOfRange(v));
        }
        if p >= n {
            return Err(EmbedError::VertexOutOfRange(p));
        }
        if self.present[v] {
            return Err(EmbedError::AlreadyPresent(v));
        }
        if !self.present[p] {
            return Err(EmbedError::NotPresent(p));
        }
        let free = Slot::ALL
            .into_iter()
            .find(|s| !self.slots[p].contains(s))
            .ok_or(EmbedError::NoFreeSlot(p))?;
        self.present[v] = true;
        self.adj[p].push(v);
        self.slots[p].push(free);
        self.cache[p].push(Some(0));
        self.adj[v] = vec![p];
        self.slots[v] = vec![Slot::W];
        self.cache[v] = vec![None];
        self.invalidate_towards(p);
        Ok(free)
    }

    /// Post-order traversal of the component of `v` away from `p`, balancing
    /// every visited vertex after its subtrees.
    pub fn balance(&mut self, p: usize, v: usize) {
        // (parent, vertex, next child position) frames.
        let mut stack: Vec<(usize, usize, usize)> = vec![(p, v, 0)];
        while let Some(frame) = stack.last_mut() {
            let (parent, at, next) = *frame;
            let kids = self.children_sorted(parent, at);
            if next < kids.len() {
                frame.2 += 1;
                stack.push((at, kids[next], 0));
            } else {
                stack.pop();
                self.balance_vertex(at);
            }
        }
    }

    /// Balance step at `v`: if unbalanced, keep the slot of the deepest
    /// neighbor, move the second deepest to the opposite slot and place the
    /// rest on the other axis. Returns whether anything changed.
    pub fn balance_vertex(&mut self, v: usize) -> bool {
        let deg = self.adj[v].len();
        if deg <= 1 {
            return false;
        }
        let values: Vec<usize> = (0..deg).map(|i| self.down(v, self.adj[v][i])).collect();
        if balanced(&values, &self.slots[v]) {
            return false;
        }
        let new_slots = rebalanced_slots(&self.adj[v], &values, &self.slots[v]);
        self.slots[v] = new_slots;
        self.invalidate_towards(v);
        true
    }

    /// Maximum bends over leaf-to-leaf paths of the current partial model.
    pub fn max_bends(&mut self) -> usize {
        let mut best = 0;
        for v in 0..self.adj.len() {
            let deg = self.adj[v].len();
            if deg < 2 {
                continue;
            }
            let values: Vec<usize> = (0..deg).map(|i| self.down(v, self.adj[v][i])).collect();
            for i in 0..deg {
                for j in i + 1..deg {
                    let bend = self.slots[v][i] != self.slots[v][j].opposite();
                    best = best.max(values[i] + values[j] + usize::from(bend));
                }
            }
        }
        best
    }

    pub fn is_present(&self, v: usize) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    /// Freezes the working model. Every vertex id must have been added.
    pub fn finish(self) -> SModel {
        assert!(
            self.present.iter().all(|&p| p),
            "finish called on a partial model"
        );
        let n = self.adj.len();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| {
                self.adj[v]
                    .iter()
                    .filter(move |&&u| u > v)
                    .map(move |&u| (v, u))
            })
            .collect();
        let tree = Tree::from_edges(n, &edges).expect("attachments form a tree");
        SModel::from_fn(tree, |v, u| {
            let i = self.adj[v]
                .iter()
                .position(|&x| x == u)
                .expect("edge present");
            self.slots[v][i]
        })
        .expect("working slots are distinct per vertex")
    }

    fn index(&self, v: usize, u: usize) -> usize {
        self.adj[v]
            .iter()
            .position(|&x| x == u)
            .expect("edge of the working model")
    }

    fn children_sorted(&self, parent: usize, v: usize) -> Vec<usize> {
        let mut kids: Vec<usize> = self.adj[v]
            .iter()
            .copied()
            .filter(|&u| u != parent)
            .collect();
        kids.sort_unstable();
        kids
    }

    /// Cached leaf-bend value of the directed edge `(p, v)`.
    fn down(&mut self, p: usize, v: usize) -> usize {
        let i = self.index(p, v);
        if let Some(value) = self.cache[p][i] {
            return value;
        }
        let mut stack = vec![(p, v)];
        while let Some(&(a, b)) = stack.last() {
            let ia = self.index(a, b);
            if self.cache[a][ia].is_some() {
                stack.pop();
                continue;
            }
            let mut missing = false;
            for (j, &x) in self.adj[b].iter().enumerate() {
                if x != a && self.cache[b][j].is_none() {
                    stack.push((b, x));
                    missing = true;
                }
            }
            if missing {
                continue;
            }
            let ib = self.index(b, a);
            let from = self.slots[b][ib].opposite();
            let value = self.adj[b]
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x != a)
                .map(|(j, _)| {
                    self.cache[b][j].expect("computed above")
                        + usize::from(self.slots[b][j] != from)
                })
                .max()
                .unwrap_or(0);
            self.cache[a][ia] = Some(value);
            stack.pop();
        }
        self.cache[p][i].expect("computed")
    }

    /// Drops cached values of every directed edge pointing towards `w`.
    ///
    /// Invalid entries are closed outwards: if `(x, y)` is invalid, so is
    /// every `(z, x)` with `z != y`. That lets the sweep stop early.
    fn invalidate_towards(&mut self, w: usize) {
        let mut stack = vec![w];
        while let Some(y) = stack.pop() {
            for k in 0..self.adj[y].len() {
                let x = self.adj[y][k];
                let ix = self.index(x, y);
                if self.cache[x][ix].take().is_some() {
                    stack.push(x);
                }
            }
        }
    }
}

/// Tie-aware balance test on raw values/slots (see [`SModel::is_balanced`]).
fn balanced(values: &[usize], slots: &[Slot]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let (b1, b2) = (sorted[0], sorted[1]);
    (0..values.len()).any(|i| {
        values[i] == b1
            && (0..values.len())
                .any(|j| j != i && values[j] == b2 && slots[i] == slots[j].opposite())
    })
}

fn rebalanced_slots(neighbors: &[usize], values: &[usize], slots: &[Slot]) -> Vec<Slot> {
    let mut order: Vec<usize> = (0..neighbors.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(values[i]), neighbors[i]));
    let keep = slots[order[0]];
    let mut out = slots.to_vec();
    out[order[1]] = keep.opposite();
    let mut rest = Slot::ALL
        .into_iter()
        .filter(|&s| s != keep && s != keep.opposite());
    for &i in &order[2..] {
        out[i] = rest.next().expect("at most two neighbors remain");
    }
    out
}

/// Applies one balance step to vertex `v` of a complete model. Returns
/// whether `v` was unbalanced (and hence rewritten).
pub fn balance_step(model: &mut SModel, v: usize) -> bool {
    let table = LeafBendTable::new(model);
    let values = table.at(v).to_vec();
    let slots = model.local_slots(v).to_vec();
    if values.len() <= 1 || balanced(&values, &slots) {
        return false;
    }
    let new_slots = rebalanced_slots(model.tree().neighbors(v), &values, &slots);
    model
        .set_local_slots(v, new_slots)
        .expect("rebalancing permutes distinct slots");
    true
}
