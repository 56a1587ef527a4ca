//! Paths in a tree of max degree 3 turned into grid paths with the same
//! intersection graph.
use treebend::tree::Tree;
use treebend::vptepg::{epg_graph, epg_max_bends, vpt_epg_transform, vpt_graph, VptModel};

fn main() {
    // A caterpillar: spine 0-1-2-3 with a leaf on each inner vertex.
    let host = Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
    let paths = vec![
        vec![0, 1, 2, 3],
        vec![4, 1, 2, 5],
        vec![4, 1, 0],
        vec![5, 2, 3],
        vec![2],
    ];
    let vpt = VptModel::new(host.clone(), paths).unwrap();

    let model = treebend::embed(&host).unwrap();
    let layout = treebend::realize(&model);
    let epg = vpt_epg_transform(&vpt, &model, &layout).unwrap();

    assert_eq!(epg_graph(&epg), vpt_graph(&vpt));
    println!(
        "host b(T) = {}, grid paths bend at most {}",
        model.max_bends(),
        epg_max_bends(&epg)
    );
    for (i, p) in epg.paths().iter().enumerate() {
        let corners: Vec<String> = p.iter().map(|q| format!("({},{})", q.x, q.y)).collect();
        println!("path {i}: {} bends, {}", epg.bends(i), corners.join(" "));
    }
    println!("edges: {:?}", vpt_graph(&vpt).edges());
}
