//! Undirected trees with dense vertex ids and incremental build sequences.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

/// Largest vertex degree an embeddable tree may have (one edge per grid direction).
pub const EMBED_MAX_DEGREE: usize = 4;

/// Largest vertex degree allowed for a host tree of a VPT model.
pub const HOST_MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("vertex {vertex} has degree {degree}, above the cap of {cap}")]
    DegreeExceeded {
        vertex: usize,
        degree: usize,
        cap: usize,
    },
    #[error("invalid build sequence: {0}")]
    InvalidSequence(String),
    #[error("tree enumeration supports 1 <= n <= {max}, got n = {n}")]
    SizeTooLarge { n: usize, max: usize },
}

/// An undirected tree on the vertices `0..n`.
///
/// Adjacency lists are kept sorted so traversal orders are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Tree {
    /// Validates `edges` as a spanning tree of `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree(format!(
                "{} edges on {} vertices",
                edges.len(),
                n
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TreeError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(TreeError::NotATree(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(TreeError::NotATree("parallel edges".into()));
            }
        }
        // n - 1 edges and connected implies acyclic.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        if reached != n {
            return Err(TreeError::NotATree(
                "graph is disconnected or has a cycle".into(),
            ));
        }
        Ok(Self {
            adj,
            labels: BTreeMap::new(),
        })
    }

    /// Like [`Tree::from_edges`], additionally rejecting any vertex of degree above `cap`.
    pub fn from_edges_capped(
        n: usize,
        edges: &[(usize, usize)],
        cap: usize,
    ) -> Result<Self, TreeError> {
        let tree = Self::from_edges(n, edges)?;
        tree.check_max_degree(cap)?;
        Ok(tree)
    }

    pub fn single() -> Self {
        Self {
            adj: vec![Vec::new()],
            labels: BTreeMap::new(),
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path graph is a tree")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star is a tree")
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Self {
        self.labels = labels
            .into_iter()
            .filter(|(v, _)| *v < self.len())
            .collect();
        self
    }

    pub fn check_max_degree(&self, cap: usize) -> Result<(), TreeError> {
        match (0..self.len()).find(|&v| self.degree(v) > cap) {
            Some(vertex) => Err(TreeError::DegreeExceeded {
                vertex,
                degree: self.degree(vertex),
                cap,
            }),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    /// Always false; a tree has at least one vertex.
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Position of `u` in the sorted neighbor list of `v`.
    #[inline]
    pub fn neighbor_index(&self, v: usize, u: usize) -> Option<usize> {
        self.adj[v].binary_search(&u).ok()
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        u < self.len() && v < self.len() && self.neighbor_index(u, v).is_some()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for (v, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&u| u > v).map(|&u| (v, u)));
        }
        out
    }

    /// Degree-0 and degree-1 vertices. A single vertex counts as a leaf.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.degree(v) <= 1).collect()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) <= 1
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Label when present, the decimal id otherwise.
    pub fn display_name(&self, v: usize) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels
            .iter()
            .find_map(|(&v, l)| (l == name).then_some(v))
    }

    /// Parent pointers of a BFS from `root` (`parent[root] == None`).
    pub fn parents_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
        parent
    }

    /// Vertex sequence of the unique path from `u` to `v`, both ends included.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        let parent = self.parents_from(v);
        let mut path = vec![u];
        let mut cur = u;
        while let Some(p) = parent[cur] {
            path.push(p);
            cur = p;
        }
        path
    }

    /// Connected-component of `v` after deleting the edge `(p, v)`, i.e. the
    /// vertices reachable from `v` without passing through `p`.
    pub fn side(&self, p: usize, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut stack = vec![(p, v)];
        while let Some((from, at)) = stack.pop() {
            for &u in &self.adj[at] {
                if u != from {
                    out.push(u);
                    stack.push((at, u));
                }
            }
        }
        out
    }

    /// Deterministic BFS build sequence from `root` (neighbors in id order).
    pub fn build_sequence(&self, root: usize) -> BuildSequence {
        assert!(root < self.len(), "root {root} out of range");
        let mut steps = vec![(root, None)];
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    steps.push((u, Some(v)));
                    queue.push_back(u);
                }
            }
        }
        BuildSequence { steps }
    }

    /// Returns a copy with vertex `v` renamed to `perm[v]`; labels follow their vertices.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        let labels = self
            .labels
            .iter()
            .map(|(&v, l)| (perm[v], l.clone()))
            .collect();
        Self::from_edges(self.len(), &edges)
            .expect("relabeling by a permutation preserves tree-ness")
            .with_labels(labels)
    }
}

/// Order in which a tree is grown from a single vertex: `(v_0, None), (v_1, Some(p_1)), ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildSequence {
    steps: Vec<(usize, Option<usize>)>,
}

impl BuildSequence {
    pub fn new(steps: Vec<(usize, Option<usize>)>) -> Result<Self, TreeError> {
        let n = steps.len();
        if n == 0 {
            return Err(TreeError::InvalidSequence("empty sequence".into()));
        }
        let mut present = vec![false; n];
        for (i, &(v, p)) in steps.iter().enumerate() {
            if v >= n {
                return Err(TreeError::InvalidSequence(format!(
                    "vertex {v} outside 0..{n}"
                )));
            }
            if present[v] {
                return Err(TreeError::InvalidSequence(format!(
                    "vertex {v} added twice"
                )));
            }
            match (i, p) {
                (0, None) => {}
                (0, Some(_)) => {
                    return Err(TreeError::InvalidSequence(
                        "first vertex must have no parent".into(),
                    ))
                }
                (_, None) => {
                    return Err(TreeError::InvalidSequence(format!(
                        "vertex {v} has no parent"
                    )))
                }
                (_, Some(p)) if p >= n || !present[p] => {
                    return Err(TreeError::InvalidSequence(format!(
                        "parent {p} of {v} not added yet"
                    )))
                }
                _ => {}
            }
            present[v] = true;
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[(usize, Option<usize>)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn root(&self) -> usize {
        self.steps[0].0
    }

    /// Rebuilds the tree this sequence describes.
    pub fn replay(&self) -> Tree {
        let edges: Vec<_> = self
            .steps
            .iter()
            .filter_map(|&(v, p)| p.map(|p| (p, v)))
            .collect();
        Tree::from_edges(self.steps.len(), &edges).expect("validated sequence yields a tree")
    }

    /// True when replaying produces exactly the edge set of `tree`.
    pub fn builds(&self, tree: &Tree) -> bool {
        self.len() == tree.len() && self.replay().edges() == tree.edges()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_tree() {
        let t = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.leaves(), vec![0]);
        assert_eq!(t.degree(0), 0);
    }

    #[test]
    fn triangle_is_rejected() {
        let err = Tree::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap_err();
        assert!(matches!(err, TreeError::NotATree(_)));
    }

    #[test]
    fn disconnected_with_cycle_is_rejected() {
        let err = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, TreeError::NotATree(_)));
        assert!(Tree::from_edges(2, &[(0, 0)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1), (0, 1)]).is_err());
        assert_eq!(
            Tree::from_edges(2, &[(0, 5)]).unwrap_err(),
            TreeError::VertexOutOfRange(0, 5, 2)
        );
    }

    #[test]
    fn degree_cap() {
        let star = Tree::star(5);
        assert!(star.check_max_degree(5).is_ok());
        let err = Tree::from_edges_capped(6, &star.edges(), 4).unwrap_err();
        assert_eq!(
            err,
            TreeError::DegreeExceeded {
                vertex: 0,
                degree: 5,
                cap: 4
            }
        );
    }

    #[test]
    fn path_leaves_and_degrees() {
        let t = Tree::path(3);
        assert_eq!(t.leaves(), vec![0, 2]);
        assert_eq!(t.degree(1), 2);
        let total: usize = (0..t.len()).map(|v| t.degree(v)).sum();
        assert_eq!(total, 2 * (t.len() - 1));
    }

    #[test]
    fn build_sequence_of_path_and_star() {
        let seq = Tree::path(3).build_sequence(0);
        assert_eq!(seq.steps(), &[(0, None), (1, Some(0)), (2, Some(1))]);
        let seq = Tree::star(4).build_sequence(0);
        assert_eq!(
            seq.steps(),
            &[
                (0, None),
                (1, Some(0)),
                (2, Some(0)),
                (3, Some(0)),
                (4, Some(0))
            ]
        );
    }

    #[test]
    fn build_sequence_validation() {
        assert!(BuildSequence::new(vec![]).is_err());
        assert!(BuildSequence::new(vec![(0, Some(1)), (1, None)]).is_err());
        assert!(BuildSequence::new(vec![(0, None), (1, Some(2)), (2, Some(0))]).is_err());
        assert!(BuildSequence::new(vec![(0, None), (0, Some(0))]).is_err());
        let seq = BuildSequence::new(vec![(1, None), (0, Some(1)), (2, Some(0))]).unwrap();
        assert_eq!(seq.replay().edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn path_between_and_side() {
        let t = Tree::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(t.path_between(0, 4), vec![0, 1, 3, 4]);
        assert_eq!(t.path_between(2, 2), vec![2]);
        let mut side = t.side(1, 3);
        side.sort_unstable();
        assert_eq!(side, vec![3, 4]);
    }
}
