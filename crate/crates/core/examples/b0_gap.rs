//! A path family whose transform needs k bends although its intersection
//! graph has a straight-segment model.
use treebend::extremal::spine_bent_model;
use treebend::vptepg::{
    b0_interval_model, epg_graph, epg_max_bends, gen_b0_family, vpt_epg_transform, vpt_graph,
};

fn main() {
    for k in 1..=6 {
        let family = gen_b0_family(k);
        let host = spine_bent_model(k);
        let grid = vpt_epg_transform(&family, &host, &treebend::realize(&host)).unwrap();
        let interval = b0_interval_model(k);
        let same =
            epg_graph(&grid) == vpt_graph(&family) && epg_graph(&interval) == vpt_graph(&family);
        println!(
            "k = {k}: {} paths, transform {} bends, intervals {} bends, same graph {same}",
            family.len(),
            epg_max_bends(&grid),
            epg_max_bends(&interval)
        );
    }
}
