//! Replays a build sequence vertex by vertex and shows how the maximum bend
//! count grows.
use treebend::format::parse_build_sequence;
use treebend::minbend::embed_traced;

fn main() {
    let seq = parse_build_sequence(include_str!("../data/example.seq")).expect("bundled sequence");
    let tree = seq.replay();
    let (model, trace) = embed_traced(&tree, &seq).expect("max degree 4");
    for (step, (&(v, p), bends)) in seq.steps().iter().zip(&trace).enumerate() {
        match p {
            Some(p) => println!("step {step:>2}: add {v:>2} under {p:>2}, max bends {bends}"),
            None => println!("step {step:>2}: start at {v}"),
        }
    }
    println!("final: {}", model.max_bends());
}
