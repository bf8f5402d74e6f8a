use toric::graphs::Graph;

fn main() {
    let edges: Vec<(usize, usize)> = (1..=6)
        .flat_map(|u| ((u + 1)..=6).map(move |v| (u, v)))
        .collect();
    let g = Graph::new(6, &edges).unwrap();
    let c = toric::graphs::graph_incidence(&g);
    for v in toric::lattice::kernel_lattice_basis(c.matrix()) {
        let degree: i64 = v.iter().map(|e| i64::try_from(e).unwrap().abs()).sum::<i64>() / 2;
        println!(
            "deg<={degree} {:?}",
            v.iter().map(|e| e.to_string()).collect::<Vec<_>>()
        );
    }
}
