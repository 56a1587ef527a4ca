//! Text and JSON round trips for trees, models and layouts.
use treebend::format::{
    layout_from_json, layout_to_json, model_from_json, model_to_json, parse_tree, to_pretty,
    tree_from_json, tree_to_json, write_tree_text,
};

fn main() {
    let tree = parse_tree("4\n0 1\n1 2\n1 3\n# 1 hub\n").unwrap();
    print!("{}", write_tree_text(&tree));
    assert_eq!(tree_from_json(&tree_to_json(&tree)).unwrap(), tree);

    let model = treebend::embed(&tree).unwrap();
    let json = model_to_json(&model);
    print!("{}", to_pretty(&json));
    assert_eq!(model_from_json(&json).unwrap(), model);

    let layout = treebend::realize(&model);
    assert_eq!(layout_from_json(&layout_to_json(&layout)).unwrap(), layout);
    print!("{}", to_pretty(&layout_to_json(&layout)));
}
