//! The smallest trees that force k bends.
use treebend::extremal::{bend_upper_bound, gen_tf, gen_tk, tk_vertex_count};

fn main() {
    for k in 0..=6 {
        println!("T^f_{k}: {} vertices", gen_tf(k).tree.len());
    }
    for k in 0..=8 {
        let tk = gen_tk(k);
        let b = treebend::embed(&tk.tree).unwrap().max_bends();
        let n = tk.tree.len();
        println!(
            "T_{k}: {n} vertices (formula {}), b = {b}, upper bound at this size {:.3}",
            tk_vertex_count(k as u32),
            bend_upper_bound(n)
        );
    }
}
