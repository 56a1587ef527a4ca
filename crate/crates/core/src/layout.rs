//! Integer-grid realization of straight models.
//!
//! Slots are local to each vertex. [`realize`] first picks a rotation per
//! vertex so that both ends of every edge agree on its absolute direction,
//! then places subtrees in nested bounding boxes: the child on the east is
//! pushed past everything its north and south siblings occupy on that side,
//! likewise for west, and north/south children only need to clear the
//! horizontal line through the parent. Subtree boxes are therefore disjoint
//! and segments never cross.

use serde::{Deserialize, Serialize};

use crate::smodel::{SModel, Slot};
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn offset(self, dir: Slot, len: i64) -> Self {
        let (dx, dy) = dir.unit();
        Self::new(self.x + dx * len, self.y + dy * len)
    }

    /// Axis direction from `self` to `to`, if they share exactly one coordinate.
    pub fn direction_to(self, to: Point) -> Option<Slot> {
        if (self.x == to.x) == (self.y == to.y) {
            return None;
        }
        Slot::from_unit(to.x - self.x, to.y - self.y)
    }
}

/// Coordinates of every tree vertex; edges are the straight segments between them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GridLayout {
    coords: Vec<Point>,
}

impl GridLayout {
    pub fn new(coords: Vec<Point>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn point(&self, v: usize) -> Point {
        self.coords[v]
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Quarter turn counter-clockwise about the origin.
    pub fn rotated(&self) -> Self {
        Self::new(self.coords.iter().map(|p| Point::new(-p.y, p.x)).collect())
    }

    pub fn scaled(&self, factor: i64) -> Self {
        Self::new(
            self.coords
                .iter()
                .map(|p| Point::new(p.x * factor, p.y * factor))
                .collect(),
        )
    }

    /// `(min, max)` corners of the bounding box.
    pub fn bounds(&self) -> (Point, Point) {
        let xs = self.coords.iter().map(|p| p.x);
        let ys = self.coords.iter().map(|p| p.y);
        (
            Point::new(xs.clone().min().unwrap_or(0), ys.clone().min().unwrap_or(0)),
            Point::new(xs.max().unwrap_or(0), ys.max().unwrap_or(0)),
        )
    }

    /// Absolute direction of the edge `(v, u)` leaving `v`, if axis-aligned.
    pub fn direction(&self, v: usize, u: usize) -> Option<Slot> {
        self.coords[v].direction_to(self.coords[u])
    }

    /// Number of direction changes along the drawn polyline of a vertex walk.
    pub fn walk_bends(&self, walk: &[usize]) -> usize {
        walk.windows(3)
            .filter(|w| self.direction(w[0], w[1]) != self.direction(w[1], w[2]))
            .count()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Extent {
    left: i64,
    right: i64,
    down: i64,
    up: i64,
}

/// Places `model` on the integer grid with vertex 0 at the origin.
pub fn realize(model: &SModel) -> GridLayout {
    let tree = model.tree();
    let n = tree.len();
    let parent = tree.parents_from(0);
    let order = bfs_order(tree, &parent);

    // Rotation frames: quarter turns mapping local slots to absolute directions.
    let mut turns = vec![0u8; n];
    for &v in &order[1..] {
        let p = parent[v].expect("non-root has a parent");
        let abs = model.slot(p, v).rotate_ccw_by(turns[p]);
        turns[v] = model.slot(v, p).turns_to(abs.opposite());
    }
    let abs_dir = |v: usize, u: usize| model.slot(v, u).rotate_ccw_by(turns[v]);

    // Bottom-up: edge length to each child and subtree extents.
    let mut extent = vec![Extent::default(); n];
    let mut length = vec![0i64; n];
    for &v in order.iter().rev() {
        let mut by_dir: [Option<usize>; 4] = [None; 4];
        for &c in tree.neighbors(v) {
            if parent[c] == Some(v) {
                by_dir[dir_index(abs_dir(v, c))] = Some(c);
            }
        }
        let ext = |d: Slot| by_dir[dir_index(d)].map_or(Extent::default(), |c| extent[c]);
        let (north, south) = (ext(Slot::N), ext(Slot::S));
        let mut own = Extent::default();
        for d in Slot::ALL {
            let Some(c) = by_dir[dir_index(d)] else {
                continue;
            };
            let e = extent[c];
            let len = match d {
                Slot::E => 1 + e.left + north.right.max(south.right),
                Slot::W => 1 + e.right + north.left.max(south.left),
                Slot::N => 1 + e.down,
                Slot::S => 1 + e.up,
            };
            length[c] = len;
            let (dx, dy) = d.unit();
            let (cx, cy) = (dx * len, dy * len);
            own.left = own.left.max(e.left - cx);
            own.right = own.right.max(cx + e.right);
            own.down = own.down.max(e.down - cy);
            own.up = own.up.max(cy + e.up);
        }
        extent[v] = own;
    }

    let mut coords = vec![Point::new(0, 0); n];
    for &v in &order[1..] {
        let p = parent[v].expect("non-root has a parent");
        coords[v] = coords[p].offset(abs_dir(p, v), length[v]);
    }
    GridLayout::new(coords)
}

fn dir_index(d: Slot) -> usize {
    match d {
        Slot::E => 0,
        Slot::W => 1,
        Slot::N => 2,
        Slot::S => 3,
    }
}

fn bfs_order(tree: &Tree, parent: &[Option<usize>]) -> Vec<usize> {
    let mut order = vec![0];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        order.extend(tree.neighbors(v).iter().filter(|&&u| parent[u] == Some(v)));
    }
    order
}

/// A defect found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexCount {
        expected: usize,
        got: usize,
    },
    NotAxisAligned {
        edge: (usize, usize),
    },
    ZeroLength {
        edge: (usize, usize),
    },
    SharedPoint {
        u: usize,
        v: usize,
    },
    Intersection {
        first: (usize, usize),
        second: (usize, usize),
    },
    PairingMismatch {
        vertex: usize,
        a: usize,
        b: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::VertexCount { expected, got } => {
                write!(f, "layout has {got} points for {expected} vertices")
            }
            Violation::NotAxisAligned { edge: (u, v) } => {
                write!(f, "edge ({u}, {v}) is not axis-aligned")
            }
            Violation::ZeroLength { edge: (u, v) } => write!(f, "edge ({u}, {v}) has zero length"),
            Violation::SharedPoint { u, v } => write!(f, "vertices {u} and {v} share a grid point"),
            Violation::Intersection { first, second } => write!(
                f,
                "edges ({}, {}) and ({}, {}) intersect",
                first.0, first.1, second.0, second.1
            ),
            Violation::PairingMismatch { vertex, a, b } => write!(
                f,
                "at vertex {vertex}, edges to {a} and {b} disagree with the model on collinearity"
            ),
        }
    }
}

/// Violations of a layout against its model; empty when valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `layout` is a straight model realizing `model`: axis-aligned
/// edges of positive length, interior-disjoint segments, distinct vertex
/// points and, at every vertex, the same collinear edge pairs as the model.
pub fn validate(layout: &GridLayout, model: &SModel) -> ValidationReport {
    let tree = model.tree();
    let mut violations = Vec::new();
    if layout.len() != tree.len() {
        violations.push(Violation::VertexCount {
            expected: tree.len(),
            got: layout.len(),
        });
        return ValidationReport { violations };
    }
    let pts = layout.coords();

    let mut aligned = Vec::new();
    for (u, v) in tree.edges() {
        let (a, b) = (pts[u], pts[v]);
        if a == b {
            violations.push(Violation::ZeroLength { edge: (u, v) });
        } else if a.x != b.x && a.y != b.y {
            violations.push(Violation::NotAxisAligned { edge: (u, v) });
        } else {
            aligned.push((u, v));
        }
    }

    let mut by_point: Vec<(Point, usize)> = pts.iter().copied().zip(0..).collect();
    by_point.sort_unstable();
    for w in by_point.windows(2) {
        if w[0].0 == w[1].0 {
            violations.push(Violation::SharedPoint {
                u: w[0].1,
                v: w[1].1,
            });
        }
    }

    for (i, &e) in aligned.iter().enumerate() {
        for &f in &aligned[i + 1..] {
            let Some((lo, hi)) = overlap((pts[e.0], pts[e.1]), (pts[f.0], pts[f.1])) else {
                continue;
            };
            let shared = [e.0, e.1].into_iter().find(|&s| s == f.0 || s == f.1);
            let allowed = lo == hi && shared.is_some_and(|s| pts[s] == lo);
            if !allowed {
                violations.push(Violation::Intersection {
                    first: e,
                    second: f,
                });
            }
        }
    }

    for v in 0..tree.len() {
        let nb = tree.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (Some(da), Some(db)) = (layout.direction(v, nb[i]), layout.direction(v, nb[j]))
                else {
                    continue;
                };
                let drawn_straight = da == db.opposite();
                if drawn_straight == model.bends_at(v, nb[i], nb[j]) {
                    violations.push(Violation::PairingMismatch {
                        vertex: v,
                        a: nb[i],
                        b: nb[j],
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}

/// Common part of two axis-aligned segments as a (possibly degenerate) segment.
fn overlap(s: (Point, Point), t: (Point, Point)) -> Option<(Point, Point)> {
    let span = |a: i64, b: i64| (a.min(b), a.max(b));
    let (sx, sy) = (span(s.0.x, s.1.x), span(s.0.y, s.1.y));
    let (tx, ty) = (span(t.0.x, t.1.x), span(t.0.y, t.1.y));
    let x = (sx.0.max(tx.0), sx.1.min(tx.1));
    let y = (sy.0.max(ty.0), sy.1.min(ty.1));
    (x.0 <= x.1 && y.0 <= y.1).then(|| (Point::new(x.0, y.0), Point::new(x.1, y.1)))
}
