//! Exhaustive bend numbers, compared with the fast construction.
use treebend::enumerate::enumerate_trees;
use treebend::oracle::{min_vertices_with_bends, pairing_space_size};

fn main() {
    for n in 1..=8 {
        let trees = enumerate_trees(n, 4).unwrap();
        let mut agree = 0;
        for t in &trees {
            let exact = treebend::oracle_b(t).unwrap();
            agree += usize::from(treebend::embed(t).unwrap().max_bends() == exact);
        }
        let space: u128 = trees.iter().map(pairing_space_size).sum();
        println!(
            "n = {n}: {agree}/{} agree, {space} pairings searched at most",
            trees.len()
        );
    }
    for k in 0..=3 {
        match min_vertices_with_bends(k, 10).unwrap() {
            Some(n) => println!("smallest tree with b = {k}: {n} vertices"),
            None => println!("no tree with b = {k} up to 10 vertices"),
        }
    }
}
