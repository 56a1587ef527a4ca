//! Path families on trees and their translation to paths on a grid.
//!
//! A family of paths in a host tree of maximum degree 3 defines a vertex
//! intersection graph. Drawing the host as a straight model and stretching
//! every path end into half of a neighboring edge turns the family into grid
//! paths whose edge intersection graph is the same, with no more bends than
//! the host drawing has on a leaf-to-leaf path.

use std::collections::{BTreeSet, HashSet};
use std::ops::Range;

use thiserror::Error;

use crate::extremal::gen_tk;
use crate::layout::{GridLayout, Point};
use crate::smodel::{SModel, Slot};
use crate::tree::{Tree, HOST_MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VptError {
    #[error("host vertex {vertex} has degree {degree}, at most 3 is allowed")]
    HostDegreeTooHigh { vertex: usize, degree: usize },
    #[error("path {index} is empty")]
    EmptyPath { index: usize },
    #[error("path {index} is not a simple path of the host: {reason}")]
    InvalidPath { index: usize, reason: String },
    #[error("host model or layout does not match the host tree")]
    HostMismatch,
    #[error("grid path {index} is malformed: {reason}")]
    InvalidGridPath { index: usize, reason: String },
}

/// A family of paths in a host tree, each given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VptModel {
    host: Tree,
    paths: Vec<Vec<usize>>,
}

fn check_host(host: &Tree) -> Result<(), VptError> {
    match (0..host.len()).find(|&v| host.degree(v) > HOST_MAX_DEGREE) {
        Some(v) => Err(VptError::HostDegreeTooHigh {
            vertex: v,
            degree: host.degree(v),
        }),
        None => Ok(()),
    }
}

impl VptModel {
    pub fn new(host: Tree, paths: Vec<Vec<usize>>) -> Result<Self, VptError> {
        check_host(&host)?;
        for (index, path) in paths.iter().enumerate() {
            if path.is_empty() {
                return Err(VptError::EmptyPath { index });
            }
            let bad = |reason: String| VptError::InvalidPath { index, reason };
            if let Some(&v) = path.iter().find(|&&v| v >= host.len()) {
                return Err(bad(format!("vertex {v} out of range")));
            }
            if let Some(w) = path.windows(2).find(|w| !host.is_edge(w[0], w[1])) {
                return Err(bad(format!("({}, {}) is not an edge", w[0], w[1])));
            }
            let distinct: HashSet<usize> = path.iter().copied().collect();
            if distinct.len() != path.len() {
                return Err(bad("repeats a vertex".into()));
            }
        }
        Ok(Self { host, paths })
    }

    pub fn host(&self) -> &Tree {
        &self.host
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Simple graph on path indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    adj: Vec<Vec<bool>>,
}

impl IntersectionGraph {
    /// Graph on `n` vertices with `i ~ j` iff `meets(i, j)` for `i < j`.
    #[allow(clippy::needless_range_loop)]
    pub fn from_fn(n: usize, mut meets: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let m = meets(i, j);
                adj[i][j] = m;
                adj[j][i] = m;
            }
        }
        Self { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| {
                (i + 1..self.len())
                    .filter(move |&j| self.adj[i][j])
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn is_universal(&self, v: usize) -> bool {
        (0..self.len()).all(|u| u == v || self.adj[v][u])
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| self.adj[a][b]))
    }
}

fn sets_meet<T: Ord>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> bool {
    a.intersection(b).next().is_some()
}

/// Paths adjacent iff they share a host vertex.
pub fn vpt_graph(v: &VptModel) -> IntersectionGraph {
    let sets: Vec<BTreeSet<usize>> = v
        .paths
        .iter()
        .map(|p| p.iter().copied().collect())
        .collect();
    IntersectionGraph::from_fn(sets.len(), |i, j| sets_meet(&sets[i], &sets[j]))
}

/// Paths adjacent iff they share a host edge.
pub fn ept_graph(v: &VptModel) -> IntersectionGraph {
    let sets: Vec<BTreeSet<(usize, usize)>> = v
        .paths
        .iter()
        .map(|p| {
            p.windows(2)
                .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                .collect()
        })
        .collect();
    IntersectionGraph::from_fn(sets.len(), |i, j| sets_meet(&sets[i], &sets[j]))
}

/// Unit grid edge, endpoints in increasing order.
pub type UnitEdge = (Point, Point);

/// Grid paths stored as corner points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpgModel {
    paths: Vec<Vec<Point>>,
}

impl EpgModel {
    /// Checks that every path has at least one segment, all segments are
    /// axis-aligned with positive length and no unit edge is used twice.
    pub fn new(paths: Vec<Vec<Point>>) -> Result<Self, VptError> {
        for (index, p) in paths.iter().enumerate() {
            let bad = |reason: &str| VptError::InvalidGridPath {
                index,
                reason: reason.into(),
            };
            if p.len() < 2 {
                return Err(bad("fewer than two points"));
            }
            if p.windows(2).any(|w| w[0].direction_to(w[1]).is_none()) {
                return Err(bad("segment is not axis-aligned with positive length"));
            }
            let steps: usize = p.windows(2).map(|w| segment_len(w[0], w[1])).sum();
            if unit_edges_of(p).len() != steps {
                return Err(bad("repeats a unit edge"));
            }
        }
        Ok(Self { paths })
    }

    pub fn paths(&self) -> &[Vec<Point>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn unit_edges(&self, i: usize) -> BTreeSet<UnitEdge> {
        unit_edges_of(&self.paths[i])
    }

    /// Direction changes along path `i`.
    pub fn bends(&self, i: usize) -> usize {
        let dirs: Vec<Slot> = self.paths[i]
            .windows(2)
            .filter_map(|w| w[0].direction_to(w[1]))
            .collect();
        dirs.windows(2).filter(|d| d[0] != d[1]).count()
    }
}

fn segment_len(a: Point, b: Point) -> usize {
    ((a.x - b.x).abs() + (a.y - b.y).abs()) as usize
}

fn unit_edges_of(path: &[Point]) -> BTreeSet<UnitEdge> {
    let mut out = BTreeSet::new();
    for w in path.windows(2) {
        let Some(d) = w[0].direction_to(w[1]) else {
            continue;
        };
        let mut p = w[0];
        while p != w[1] {
            let q = p.offset(d, 1);
            out.insert((p.min(q), p.max(q)));
            p = q;
        }
    }
    out
}

/// Paths adjacent iff they share a unit grid edge.
pub fn epg_graph(e: &EpgModel) -> IntersectionGraph {
    let sets: Vec<BTreeSet<UnitEdge>> = (0..e.len()).map(|i| e.unit_edges(i)).collect();
    IntersectionGraph::from_fn(sets.len(), |i, j| sets_meet(&sets[i], &sets[j]))
}

pub fn epg_max_bends(e: &EpgModel) -> usize {
    (0..e.len()).map(|i| e.bends(i)).max().unwrap_or(0)
}

/// Drops corner points that continue straight on.
fn corners(points: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if out.last() == Some(&p) {
            continue;
        }
        if out.len() >= 2 {
            let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
            if a.direction_to(b) == b.direction_to(p) {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

/// Grid paths for `v` drawn over the host realization `(host_model, host_layout)`.
///
/// Coordinates are doubled so that edge midpoints are lattice points. Each
/// path is drawn through its host vertices and then, at every end `u`,
/// stretched to the midpoint of one more edge at `u`:
/// - degree 2: the other edge;
/// - degree 3, arriving on neither of the two reference edges (the vertical
///   one and the horizontal one with the smallest neighbor ids): the
///   reference edge straight ahead;
/// - degree 3 otherwise: the other reference edge.
///
/// A single-vertex path at `u` becomes the half edge at a leaf, or the span
/// between the two reference midpoints. On a one-vertex host every path is
/// the same unit segment.
pub fn vpt_epg_transform(
    v: &VptModel,
    host_model: &SModel,
    host_layout: &GridLayout,
) -> Result<EpgModel, VptError> {
    let host = &v.host;
    check_host(host)?;
    if host_model.tree().len() != host.len()
        || host_model.tree().edges() != host.edges()
        || host_layout.len() != host.len()
    {
        return Err(VptError::HostMismatch);
    }
    if host.len() == 1 {
        let unit = vec![Point::new(0, 0), Point::new(1, 0)];
        return EpgModel::new(vec![unit; v.len()]);
    }
    let at = |u: usize| {
        let p = host_layout.point(u);
        Point::new(2 * p.x, 2 * p.y)
    };
    let mid = |u: usize, w: usize| {
        let (a, b) = (host_layout.point(u), host_layout.point(w));
        Point::new(a.x + b.x, a.y + b.y)
    };
    let dir = |u: usize, w: usize| host_layout.direction(u, w).ok_or(VptError::HostMismatch);

    // Endpoints of the auxiliary path at `u` as neighbor ids.
    let reference = |u: usize| -> Result<(usize, usize), VptError> {
        let nb = host.neighbors(u);
        if nb.len() != 3 {
            return Ok((nb[0], nb[nb.len() - 1]));
        }
        let mut vertical = None;
        let mut horizontal = None;
        for &w in nb {
            let slot = if dir(u, w)?.is_horizontal() {
                &mut horizontal
            } else {
                &mut vertical
            };
            slot.get_or_insert(w);
        }
        vertical.zip(horizontal).ok_or(VptError::HostMismatch)
    };

    // Neighbor whose half edge extends a path ending at `u` that arrives from `from`.
    let stretch = |u: usize, from: usize| -> Result<Option<usize>, VptError> {
        let nb = host.neighbors(u);
        Ok(match nb.len() {
            2 => nb.iter().copied().find(|&w| w != from),
            3 => {
                let (e1, e2) = reference(u)?;
                if from == e1 {
                    Some(e2)
                } else if from == e2 {
                    Some(e1)
                } else {
                    let ahead = dir(u, from)?.opposite();
                    Some(if dir(u, e1)? == ahead { e1 } else { e2 })
                }
            }
            _ => None,
        })
    };

    let mut out = Vec::with_capacity(v.len());
    for q in &v.paths {
        let points = if let [u] = q[..] {
            match host.degree(u) {
                1 => vec![at(u), mid(u, host.neighbors(u)[0])],
                _ => {
                    let (a, b) = reference(u)?;
                    vec![mid(u, a), at(u), mid(u, b)]
                }
            }
        } else {
            let m = q.len();
            let mut pts = Vec::with_capacity(m + 2);
            if let Some(w) = stretch(q[0], q[1])? {
                pts.push(mid(q[0], w));
            }
            pts.extend(q.iter().map(|&u| at(u)));
            if let Some(w) = stretch(q[m - 1], q[m - 2])? {
                pts.push(mid(q[m - 1], w));
            }
            pts
        };
        out.push(corners(points));
    }
    EpgModel::new(out)
}

/// The extremal tree with `k` bends carrying its spine and, for every spine
/// vertex `v_i`, the paths from `v_i` to each leaf of the subtree hanging
/// from it. Path 0 is the spine; see [`b0_groups`] for the rest.
///
/// # Panics
/// If `k == 0`.
pub fn gen_b0_family(k: usize) -> VptModel {
    assert!(k >= 1, "the family needs at least one bend");
    let t = gen_tk(k);
    let mut paths = vec![t.spine.clone()];
    for i in 1..=k {
        let (vi, _) = t.hangs[i - 1];
        let mut leaves: Vec<usize> = t
            .hang_vertices(i)
            .into_iter()
            .filter(|&f| t.tree.is_leaf(f))
            .collect();
        leaves.sort_unstable();
        paths.extend(leaves.into_iter().map(|f| t.tree.path_between(vi, f)));
    }
    VptModel::new(t.tree, paths).expect("extremal trees have maximum degree 3")
}

/// Index ranges of the groups attached to `v_1 .. v_k` in [`gen_b0_family`].
pub fn b0_groups(k: usize) -> Vec<Range<usize>> {
    let mut start = 1;
    (1..=k)
        .map(|i| {
            let h = crate::extremal::ExtremalTree::hang_height(k, i);
            let size = 1 << h;
            start += size;
            start - size..start
        })
        .collect()
}

/// Zero-bend model of the same graph on a single row: the spine covers
/// `[0, 2k]` and every path of group `i` covers `[2i - 2, 2i - 1]`.
///
/// # Panics
/// If `k == 0`.
pub fn b0_interval_model(k: usize) -> EpgModel {
    assert!(k >= 1, "the family needs at least one bend");
    let seg = |a: usize, b: usize| vec![Point::new(a as i64, 0), Point::new(b as i64, 0)];
    let mut paths = vec![seg(0, 2 * k)];
    for (i, group) in b0_groups(k).into_iter().enumerate() {
        let i = i + 1;
        paths.extend(group.map(|_| seg(2 * i - 2, 2 * i - 1)));
    }
    EpgModel::new(paths).expect("intervals are valid grid paths")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::realize;
    use crate::minbend::embed;

    fn transform(v: &VptModel) -> EpgModel {
        let m = embed(v.host()).unwrap();
        let l = realize(&m);
        vpt_epg_transform(v, &m, &l).unwrap()
    }

    #[test]
    fn model_validation() {
        let host = Tree::path(4);
        assert!(VptModel::new(host.clone(), vec![vec![0, 1, 2], vec![3]]).is_ok());
        assert_eq!(
            VptModel::new(host.clone(), vec![vec![]]),
            Err(VptError::EmptyPath { index: 0 })
        );
        assert!(matches!(
            VptModel::new(host.clone(), vec![vec![0, 2]]),
            Err(VptError::InvalidPath { index: 0, .. })
        ));
        assert!(matches!(
            VptModel::new(host.clone(), vec![vec![1, 2, 1]]),
            Err(VptError::InvalidPath { .. })
        ));
        assert!(matches!(
            VptModel::new(host, vec![vec![7]]),
            Err(VptError::InvalidPath { .. })
        ));
        assert_eq!(
            VptModel::new(Tree::star(4), vec![]),
            Err(VptError::HostDegreeTooHigh {
                vertex: 0,
                degree: 4
            })
        );
    }

    #[test]
    fn vertex_versus_edge_intersections() {
        // Star with one long arm: A and B meet only at the center.
        let host = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let v = VptModel::new(
            host,
            vec![vec![1, 0, 2], vec![3, 0], vec![0, 3, 4], vec![4]],
        )
        .unwrap();
        let vpt = vpt_graph(&v);
        let ept = ept_graph(&v);
        assert_eq!(vpt.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(ept.edges(), vec![(1, 2)]);
    }

    #[test]
    fn straight_path_on_a_path_host() {
        let v = VptModel::new(Tree::path(4), vec![vec![0, 1, 2, 3]]).unwrap();
        let e = transform(&v);
        assert_eq!(e.len(), 1);
        assert_eq!(e.paths()[0].len(), 2);
        assert_eq!(epg_max_bends(&e), 0);
    }

    #[test]
    fn paths_meeting_at_a_degree_two_vertex_share_a_unit_edge() {
        let v = VptModel::new(Tree::path(3), vec![vec![0, 1], vec![1, 2]]).unwrap();
        let e = transform(&v);
        assert!(sets_meet(&e.unit_edges(0), &e.unit_edges(1)));
        assert_eq!(epg_graph(&e), vpt_graph(&v));
    }

    #[test]
    fn grid_paths_touching_at_a_point_are_not_adjacent() {
        let p = |x, y| Point::new(x, y);
        let e = EpgModel::new(vec![vec![p(0, 0), p(1, 0)], vec![p(1, 0), p(1, 1)]]).unwrap();
        assert!(!epg_graph(&e).adjacent(0, 1));
    }

    #[test]
    fn two_bend_path() {
        let p = |x, y| Point::new(x, y);
        let e = EpgModel::new(vec![vec![p(0, 0), p(2, 0), p(2, 2), p(4, 2)]]).unwrap();
        assert_eq!(epg_max_bends(&e), 2);
        assert!(EpgModel::new(vec![vec![p(0, 0), p(2, 0), p(1, 0)]]).is_err());
        assert!(EpgModel::new(vec![vec![p(0, 0), p(1, 1)]]).is_err());
        assert!(EpgModel::new(vec![vec![p(0, 0)]]).is_err());
    }

    #[test]
    fn single_vertex_paths() {
        let host = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let v = VptModel::new(
            host,
            vec![vec![0], vec![1], vec![3], vec![1, 0], vec![2, 0, 3, 4]],
        )
        .unwrap();
        let e = transform(&v);
        assert_eq!(epg_graph(&e), vpt_graph(&v));
        let v1 = VptModel::new(Tree::single(), vec![vec![0], vec![0]]).unwrap();
        let e1 = transform(&v1);
        assert!(epg_graph(&e1).adjacent(0, 1));
    }

    #[test]
    fn b0_family_small() {
        let v = gen_b0_family(1);
        assert_eq!(v.host().len(), 4);
        assert_eq!(v.paths(), &[vec![0, 1, 2], vec![1, 3]]);
        assert_eq!(b0_groups(1), vec![1..2]);
        let i = b0_interval_model(1);
        assert_eq!(i.paths()[0], vec![Point::new(0, 0), Point::new(2, 0)]);
        assert_eq!(i.paths()[1], vec![Point::new(0, 0), Point::new(1, 0)]);
        assert_eq!(epg_graph(&i), vpt_graph(&v));
    }

    #[test]
    fn b0_family_structure() {
        let k = 4;
        let v = gen_b0_family(k);
        let g = vpt_graph(&v);
        assert!(g.is_universal(0));
        let groups = b0_groups(k);
        assert_eq!(groups.last().unwrap().end, v.len());
        for r in &groups {
            assert!(g.is_clique(&r.clone().collect::<Vec<_>>()));
        }
        let i = b0_interval_model(k);
        assert_eq!(i.paths()[groups[1].start][0].x, 2);
        assert_eq!(i.paths()[groups[2].start][0].x, 4);
        assert_eq!(epg_max_bends(&i), 0);
        assert_eq!(epg_graph(&i), g);
        let host = crate::extremal::spine_bent_model(k);
        let e = vpt_epg_transform(&v, &host, &realize(&host)).unwrap();
        assert_eq!(epg_max_bends(&e), k);
        assert_eq!(epg_graph(&e), g);
        // Any optimal host drawing bounds the bends, whichever path carries them.
        assert!(epg_max_bends(&transform(&v)) <= k);
    }
}
