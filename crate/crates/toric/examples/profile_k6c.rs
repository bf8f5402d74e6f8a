use std::time::Instant;
use toric::graphs::Graph;
use toric::ideal::{saturate_variable, Binomial, MonomialOrder, buchberger};

fn main() {
    let edges: Vec<(usize, usize)> = (1..=6)
        .flat_map(|u| ((u + 1)..=6).map(move |v| (u, v)))
        .collect();
    let g = Graph::new(6, &edges).unwrap();
    let c = toric::graphs::graph_incidence(&g);
    let t0 = Instant::now();
    let kernel = toric::lattice::kernel_lattice_basis(c.matrix());
    println!("kernel: {:?}", t0.elapsed());
    let mut gens: Vec<Binomial> = kernel.iter().filter_map(|v| Binomial::from_vector(v)).collect();
    for pass in 0..2 {
        for var in 0..15 {
            let t = Instant::now();
            gens = saturate_variable(&gens, var);
            let dt = t.elapsed();
            if dt.as_millis() > 200 {
                println!("pass {pass} var {var}: {dt:?} ({} gens)", gens.len());
            }
        }
        println!("pass {pass} done ({} gens)", gens.len());
    }
    let t = Instant::now();
    let gb = buchberger(&gens, &MonomialOrder::graded_revlex(15));
    println!("final GB: {:?} ({})", t.elapsed(), gb.elements.len());
}
