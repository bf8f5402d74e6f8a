use std::time::Instant;
use toric::graphs::Graph;
use toric::ideal::{self, MonomialOrder};

fn main() {
    let edges: Vec<(usize, usize)> = (1..=6)
        .flat_map(|u| ((u + 1)..=6).map(move |v| (u, v)))
        .collect();
    let g = Graph::new(6, &edges).unwrap();
    let c = toric::graphs::graph_incidence(&g);

    let t = Instant::now();
    let gb = ideal::toric_groebner(&c, &MonomialOrder::graded_revlex(15));
    println!("toric_groebner: {:?} ({} elements)", t.elapsed(), gb.elements.len());

    let t = Instant::now();
    let circuits = toric::circuits::enumerate_circuits(&c);
    println!("matroid circuits: {:?} ({})", t.elapsed(), circuits.len());

    let t = Instant::now();
    let walk = toric::graphs::enumerate_graph_circuits(&g);
    println!("walk circuits: {:?} ({})", t.elapsed(), walk.len());

    let t = Instant::now();
    let rep = toric::verify::check_graph_theorems(&g);
    println!("full theorem check: {:?} ({})", t.elapsed(), rep.verdict);

    let t = Instant::now();
    let gens = toric::fibers::minimal_generators(&c);
    println!("minimal generators: {:?} ({})", t.elapsed(), gens.len());
}
