//! Grid drawing of a model: validation, ASCII output and an SVG file.
//!
//! `cargo run --example render -- out.svg` also writes the SVG.
use treebend::format::parse_tree;
use treebend::render::{ascii, svg};
use treebend::{realize, validate};

fn main() {
    let tree = parse_tree(include_str!("../data/example.tree")).unwrap();
    let model = treebend::embed(&tree).unwrap();
    let layout = realize(&model);
    let report = validate(&layout, &model);
    assert!(report.is_valid(), "{:?}", report.violations);
    let (lo, hi) = layout.bounds();
    println!("{} x {} grid", hi.x - lo.x, hi.y - lo.y);
    print!("{}", ascii(&tree, &layout));
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, svg(&tree, &layout)).unwrap();
        println!("wrote {path}");
    }
}
