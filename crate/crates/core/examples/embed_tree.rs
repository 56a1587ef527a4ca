//! Minimum-bend model of the 15-vertex example tree.
use treebend::format::parse_tree;
use treebend::smodel::Slot;

fn main() {
    let tree = parse_tree(include_str!("../data/example.tree")).expect("bundled tree");
    let model = treebend::embed(&tree).expect("max degree 4");
    println!("b(T) = {}", model.max_bends());
    for v in 0..tree.len() {
        let arms: Vec<String> = Slot::ALL
            .iter()
            .filter_map(|&s| {
                model
                    .neighbor_at(v, s)
                    .map(|u| format!("{}:{}", s.as_str(), tree.display_name(u)))
            })
            .collect();
        println!("{:>2} {}", tree.display_name(v), arms.join(" "));
    }
}
