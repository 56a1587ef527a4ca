//! Straight grid models of trees with the fewest possible bends per path.
//!
//! A *straight model* draws a tree of maximum degree 4 on the integer grid so
//! that every edge is a straight axis-parallel segment. A tree path may still
//! turn at its internal vertices; the goal is a model minimizing the largest
//! number of turns over all paths.
//!
//! * [`tree`] and [`enumerate`]: trees, build sequences, exhaustive small-tree enumeration.
//! * [`smodel`]: slot assignments, bend metrics, balance, critical pairs and certificates.
//! * [`minbend`]: the incremental balancing construction ([`minbend::embed`]).
//! * [`oracle`]: brute-force bend numbers for cross-checking.
//! * [`extremal`]: smallest trees needing `k` bends and the logarithmic bound.
//! * [`layout`] and [`render`]: integer coordinates, validity checks, SVG/ASCII output.
//! * [`vptepg`]: path families in trees turned into grid path families with bounded bends.
//! * [`format`] and [`cli`]: file formats and the command-line front end.
//!
//! ```
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! use treebend::format::parse_tree;
//!
//! let tree = parse_tree("5\n0 1\n1 2\n1 3\n3 4\n")?;
//! let model = treebend::embed(&tree)?;
//! assert_eq!(model.max_bends(), treebend::oracle_b(&tree)?);
//!
//! let cert = model.certify().expect("lower bound");
//! assert!(model.check_lower_bound(&cert) && cert.value() == model.max_bends());
//!
//! let layout = treebend::realize(&model);
//! assert!(treebend::validate(&layout, &model).is_valid());
//! # Ok(())
//! # }
//! ```

pub mod cli;
pub mod enumerate;
pub mod extremal;
pub mod format;
pub mod layout;
pub mod minbend;
pub mod oracle;
pub mod render;
pub mod smodel;
pub mod tree;
pub mod vptepg;

pub use enumerate::{canonical_form, enumerate_trees};
pub use layout::{realize, validate, GridLayout, Point};
pub use minbend::{embed, embed_with_sequence};
pub use oracle::{oracle_b, oracle_leaf_bends};
pub use smodel::{Certificate, SModel, Slot};
pub use tree::{BuildSequence, Tree, TreeError};
pub use vptepg::{EpgModel, IntersectionGraph, VptModel};

#[cfg(test)]
pub(crate) mod test_support {
    use std::collections::BTreeMap;

    use crate::smodel::{SModel, Slot};
    use crate::tree::Tree;

    /// The 15-vertex example tree, vertices `a..o` numbered `0..14`.
    pub fn example_tree() -> Tree {
        let id = |c: char| c as usize - 'a' as usize;
        let pairs = [
            ('i', 'g'),
            ('l', 'i'),
            ('c', 'g'),
            ('j', 'i'),
            ('k', 'j'),
            ('m', 'j'),
            ('d', 'c'),
            ('b', 'c'),
            ('f', 'b'),
            ('a', 'b'),
            ('e', 'd'),
            ('h', 'd'),
            ('n', 'h'),
            ('o', 'h'),
        ];
        let edges: Vec<_> = pairs.iter().map(|&(v, p)| (id(p), id(v))).collect();
        let labels: BTreeMap<usize, String> = ('a'..='o').map(|c| (id(c), c.to_string())).collect();
        Tree::from_edges(15, &edges).unwrap().with_labels(labels)
    }

    /// Center 0 with four arms whose leaf-bend values are 3, 2, 1, 0 (arm
    /// roots 1, 5, 8, 10). Each arm is a chain bending at every internal vertex.
    pub fn four_arm_model(center: [Slot; 4]) -> SModel {
        let arms = [(1, 4), (5, 3), (8, 2), (10, 1)];
        let mut edges = Vec::new();
        for &(start, len) in &arms {
            edges.push((0, start));
            for k in 1..len {
                edges.push((start + k - 1, start + k));
            }
        }
        let tree = Tree::from_edges(11, &edges).unwrap();
        SModel::from_fn(tree, |v, u| {
            if v == 0 {
                let arm = arms.iter().position(|&(s, _)| s == u).unwrap();
                center[arm]
            } else if u < v {
                Slot::W
            } else {
                Slot::N
            }
        })
        .unwrap()
    }
}
