//! Lower-bound certificates. A critical pair is enough on most trees; the
//! example tree needs a junction of critical arms.
use treebend::format::parse_tree;
use treebend::smodel::LowerBound;
use treebend::tree::Tree;

fn show(name: &str, tree: &Tree) {
    let model = treebend::embed(tree).expect("max degree 4");
    match model.certify() {
        Some(LowerBound::Pair(c)) => println!(
            "{name}: b = {}, critical pair ({}, {}) with value {}",
            model.max_bends(),
            tree.display_name(c.from),
            c.to.map_or("-".to_string(), |v| tree.display_name(v)),
            c.value
        ),
        Some(LowerBound::Junction(j)) => println!(
            "{name}: b = {}, junction at {} over arms {:?} with value {}",
            model.max_bends(),
            tree.display_name(j.vertex),
            j.arms
                .iter()
                .map(|&a| tree.display_name(a))
                .collect::<Vec<_>>(),
            j.value
        ),
        None => println!("{name}: b = {}, no certificate", model.max_bends()),
    }
    if let Some(cert) = model.certify() {
        assert!(model.check_lower_bound(&cert));
    }
}

fn main() {
    show("path", &Tree::path(6));
    show("claw", &Tree::star(3));
    show("T_3", &treebend::extremal::gen_tk(3).tree);
    show(
        "example",
        &parse_tree(include_str!("../data/example.tree")).unwrap(),
    );
}
