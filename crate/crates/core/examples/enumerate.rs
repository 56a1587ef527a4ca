//! Non-isomorphic trees of bounded degree and their canonical forms.
use treebend::{canonical_form, enumerate_trees};

fn main() {
    for n in 1..=10 {
        let all = enumerate_trees(n, n.max(1)).unwrap().len();
        let capped = enumerate_trees(n, 4).unwrap().len();
        println!("n = {n:>2}: {all:>3} trees, {capped:>3} with max degree 4");
    }
    for t in enumerate_trees(5, 4).unwrap() {
        println!("{}", canonical_form(&t));
    }
}
