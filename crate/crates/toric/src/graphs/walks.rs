//! Graph-side circuit enumeration through even closed walks, and the walk
//! shape classifier for binomials of a graph ideal.

use std::collections::BTreeMap;
use std::fmt;

use super::cycles::{all_cycles, all_cycles_adj, cycle_edges, rotate_cycle, vertex_mask};
use super::{binomial_of_edge_sequence, graph_incidence, Graph, GraphError};
use crate::circuits::Circuit;
use crate::ideal::{self, Binomial};

/// The even-closed-walk shapes that generate a graph's toric ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkType {
    EvenCycle,
    TwoCyclesSharedVertex,
    TwoCyclesPath,
    Other,
}

impl fmt::Display for WalkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WalkType::EvenCycle => "even_cycle",
            WalkType::TwoCyclesSharedVertex => "two_cycles_shared_vertex",
            WalkType::TwoCyclesPath => "two_cycles_path",
            WalkType::Other => "other",
        };
        write!(f, "{s}")
    }
}

/// A circuit of a graph ideal together with the walk shape it came from.
#[derive(Debug, Clone)]
pub struct GraphCircuit {
    pub circuit: Circuit,
    pub walk_type: WalkType,
    /// Connecting path length for `TwoCyclesPath`, otherwise 0.
    pub path_len: usize,
}

/// All circuits of the graph's toric ideal, via the three walk shapes:
/// even cycles, pairs of odd cycles sharing exactly one vertex, and
/// vertex-disjoint odd cycle pairs joined by a path.
pub fn enumerate_graph_circuits(g: &Graph) -> Vec<Circuit> {
    enumerate_graph_circuits_detailed(g)
        .into_iter()
        .map(|gc| gc.circuit)
        .collect()
}

pub(crate) fn enumerate_graph_circuits_detailed(g: &Graph) -> Vec<GraphCircuit> {
    let n = g.edge_count();
    let cycles = all_cycles(g);
    // Support -> circuit; a configuration has at most one circuit per support.
    let mut found: BTreeMap<Vec<usize>, GraphCircuit> = BTreeMap::new();
    let mut record = |edge_walk: Vec<usize>, walk_type: WalkType, path_len: usize| {
        let binomial = binomial_of_edge_sequence(&edge_walk, n)
            .expect("circuit walks have distinct sides");
        let support = binomial.support();
        found.entry(support.clone()).or_insert(GraphCircuit {
            circuit: Circuit { binomial, support },
            walk_type,
            path_len,
        });
    };

    for cycle in cycles.iter().filter(|c| c.len() % 2 == 0) {
        record(cycle_edges(g, cycle), WalkType::EvenCycle, 0);
    }

    let odd: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() % 2 == 1).collect();
    for i in 0..odd.len() {
        let mask_i = vertex_mask(odd[i]);
        for j in i + 1..odd.len() {
            let mask_j = vertex_mask(odd[j]);
            let shared = mask_i & mask_j;
            if shared.count_ones() == 1 {
                let v = shared.trailing_zeros() as usize;
                let mut walk = cycle_edges(g, &rotate_cycle(odd[i], v));
                walk.extend(cycle_edges(g, &rotate_cycle(odd[j], v)));
                record(walk, WalkType::TwoCyclesSharedVertex, 0);
            } else if shared == 0 {
                for path in connecting_paths(g, odd[i], odd[j], mask_i | mask_j) {
                    let mut walk = cycle_edges(g, &rotate_cycle(odd[i], path[0]));
                    let path_edges: Vec<usize> = path
                        .windows(2)
                        .map(|w| g.edge_between(w[0], w[1]).expect("path edge"))
                        .collect();
                    walk.extend(&path_edges);
                    walk.extend(cycle_edges(g, &rotate_cycle(odd[j], path[path.len() - 1])));
                    walk.extend(path_edges.iter().rev());
                    record(walk, WalkType::TwoCyclesPath, path_edges.len());
                }
            }
        }
    }

    let mut out: Vec<GraphCircuit> = found.into_values().collect();
    out.sort_by(|a, b| {
        a.circuit
            .binomial
            .degree()
            .cmp(&b.circuit.binomial.degree())
            .then_with(|| a.circuit.support.cmp(&b.circuit.support))
    });
    out
}

// Simple paths from a vertex of c1 to a vertex of c2 whose interior avoids
// both cycles (paths touching a cycle twice never give nullity one).
fn connecting_paths(g: &Graph, c1: &[usize], c2: &[usize], cycle_mask: u64) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    let in_c2 = vertex_mask(c2);
    for &a in c1 {
        let mut path = vec![a];
        connecting_dfs(g, cycle_mask, in_c2, &mut path, &mut paths);
    }
    paths
}

fn connecting_dfs(
    g: &Graph,
    cycle_mask: u64,
    in_c2: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path never empty");
    for &w in g.neighbors(last) {
        if (1 << w) & in_c2 != 0 {
            let mut complete = path.clone();
            complete.push(w);
            out.push(complete);
        } else if (1 << w) & cycle_mask == 0 && !path.contains(&w) {
            path.push(w);
            connecting_dfs(g, cycle_mask, in_c2, path, out);
            path.pop();
        }
    }
}

/// Reconstructs which walk shape a binomial of the graph ideal realizes.
/// `Other` flags binomials not of any generator shape (disconnected support
/// or no suitable cycle structure).
pub fn classify_walk_type(b: &Binomial, g: &Graph) -> Result<WalkType, GraphError> {
    let config = graph_incidence(g);
    if !ideal::in_toric_ideal(b, &config) {
        return Err(GraphError::NotInIdeal);
    }
    let n = g.edge_count();
    let mult: Vec<u64> = (0..n)
        .map(|e| b.plus().exponent(e) + b.minus().exponent(e))
        .collect();
    let support: Vec<usize> = (0..n).filter(|&e| mult[e] > 0).collect();
    if !edges_connected(g, &support) {
        return Ok(WalkType::Other);
    }

    if mult.iter().all(|&m| m <= 1) {
        if let Some(t) = classify_multiplicity_free(g, &support) {
            return Ok(t);
        }
    }
    if mult.iter().all(|&m| m <= 2) {
        if classify_cycle_pair_with_path(g, &mult, &support) {
            return Ok(WalkType::TwoCyclesPath);
        }
    }
    // Broad shape of the generator proposition: the support carries two
    // vertex-disjoint odd cycles connected by walks.
    if has_disjoint_odd_cycle_pair(g, &support) {
        return Ok(WalkType::TwoCyclesPath);
    }
    Ok(WalkType::Other)
}

fn edges_connected(g: &Graph, edges: &[usize]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let vertices: Vec<usize> = {
        let mut vs: Vec<usize> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    };
    let mut reached = vec![false; g.vertex_count()];
    let (start, _) = g.edge(edges[0]);
    reached[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &e in edges {
            let (a, b) = g.edge(e);
            let next = if a == v { b } else if b == v { a } else { continue };
            if !reached[next] {
                reached[next] = true;
                stack.push(next);
            }
        }
    }
    vertices.iter().all(|&v| reached[v])
}

// Even cycle, or two odd cycles sharing exactly one vertex. The in-ideal
// check already forces the parity split, so shape recognition suffices.
fn classify_multiplicity_free(g: &Graph, support: &[usize]) -> Option<WalkType> {
    let mut degree = vec![0usize; g.vertex_count()];
    for &e in support {
        let (u, v) = g.edge(e);
        degree[u] += 1;
        degree[v] += 1;
    }
    let vertices = support_vertices(g, support);
    if vertices.iter().all(|&v| degree[v] == 2) && support.len() == vertices.len() {
        if support.len() % 2 == 0 {
            return Some(WalkType::EvenCycle);
        }
        return None;
    }
    let quads: Vec<usize> = vertices.iter().copied().filter(|&v| degree[v] == 4).collect();
    if quads.len() == 1
        && support.len() == vertices.len() + 1
        && vertices.iter().all(|&v| degree[v] == 2 || v == quads[0])
    {
        let sub_cycles = cycles_of_edge_subset(g, support);
        if sub_cycles.len() == 2
            && sub_cycles.iter().all(|c| c.len() % 2 == 1)
        {
            return Some(WalkType::TwoCyclesSharedVertex);
        }
    }
    None
}

// Circuit shape (iii): squared edges form the connecting path, single edges
// form two vertex-disjoint odd cycles at its ends.
fn classify_cycle_pair_with_path(g: &Graph, mult: &[u64], support: &[usize]) -> bool {
    let path_edges: Vec<usize> = support.iter().copied().filter(|&e| mult[e] == 2).collect();
    let cycle_edges: Vec<usize> = support.iter().copied().filter(|&e| mult[e] == 1).collect();
    if path_edges.is_empty() || cycle_edges.is_empty() {
        return false;
    }
    let cycles = cycles_of_edge_subset(g, &cycle_edges);
    if cycles.len() != 2
        || cycles.iter().any(|c| c.len() % 2 == 0)
        || vertex_mask(&cycles[0]) & vertex_mask(&cycles[1]) != 0
    {
        return false;
    }
    if cycles.iter().map(Vec::len).sum::<usize>() != cycle_edges.len() {
        return false;
    }
    // The squared edges must chain into a simple path between the cycles
    // whose interior avoids both.
    let mut degree = vec![0usize; g.vertex_count()];
    for &e in &path_edges {
        let (u, v) = g.edge(e);
        degree[u] += 1;
        degree[v] += 1;
    }
    let cycle_vertices = vertex_mask(&cycles[0]) | vertex_mask(&cycles[1]);
    let mut endpoints = Vec::new();
    for v in 0..g.vertex_count() {
        match degree[v] {
            0 => {}
            1 => endpoints.push(v),
            2 => {
                if (1 << v) & cycle_vertices != 0 {
                    return false;
                }
            }
            _ => return false,
        }
    }
    if endpoints.len() != 2 {
        return false;
    }
    let on0 = (1 << endpoints[0]) & cycle_vertices != 0;
    let on1 = (1 << endpoints[1]) & cycle_vertices != 0;
    let distinct_cycles = (vertex_mask(&cycles[0]) & (1 << endpoints[0]) != 0)
        != (vertex_mask(&cycles[0]) & (1 << endpoints[1]) != 0);
    on0 && on1 && distinct_cycles && edges_connected(g, &path_edges)
}

fn has_disjoint_odd_cycle_pair(g: &Graph, support: &[usize]) -> bool {
    let cycles = cycles_of_edge_subset(g, support);
    for i in 0..cycles.len() {
        if cycles[i].len() % 2 == 0 {
            continue;
        }
        for j in i + 1..cycles.len() {
            if cycles[j].len() % 2 == 1
                && vertex_mask(&cycles[i]) & vertex_mask(&cycles[j]) == 0
            {
                return true;
            }
        }
    }
    false
}

fn support_vertices(g: &Graph, edges: &[usize]) -> Vec<usize> {
    let mut vs: Vec<usize> = edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.edge(e);
            [u, v]
        })
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

fn cycles_of_edge_subset(g: &Graph, edges: &[usize]) -> Vec<Vec<usize>> {
    let mut adjacency = vec![Vec::new(); g.vertex_count()];
    for &e in edges {
        let (u, v) = g.edge(e);
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for nbrs in adjacency.iter_mut() {
        nbrs.sort_unstable();
    }
    all_cycles_adj(&adjacency)
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;
    use crate::circuits::{enumerate_circuits, squarefree_class, SquarefreeClass};
    use crate::ideal::parse_binomial;

    fn assert_same_circuits(g: &Graph) {
        let via_walks = enumerate_graph_circuits(g);
        let via_matroid = enumerate_circuits(&graph_incidence(g));
        assert_eq!(via_walks, via_matroid);
    }

    #[test]
    fn k4_circuits_are_the_three_four_cycles() {
        let circuits = enumerate_graph_circuits(&k4());
        assert_eq!(circuits.len(), 3);
        let detailed = enumerate_graph_circuits_detailed(&k4());
        assert!(detailed.iter().all(|c| c.walk_type == WalkType::EvenCycle));
        assert_same_circuits(&k4());
    }

    #[test]
    fn example1_circuits_include_the_generators() {
        let g = example1();
        let detailed = enumerate_graph_circuits_detailed(&g);
        let names: Vec<String> =
            detailed.iter().map(|c| c.circuit.binomial.to_string()).collect();
        assert!(names.contains(&"x1*x3 - x2*x4".to_string()));
        assert!(names.contains(&"x3*x4*x6*x9 - x5^2*x7*x8".to_string()));
        assert_same_circuits(&g);
    }

    #[test]
    fn dumbbell_has_exactly_one_circuit() {
        let g = dumbbell();
        let detailed = enumerate_graph_circuits_detailed(&g);
        assert_eq!(detailed.len(), 1);
        assert_eq!(detailed[0].walk_type, WalkType::TwoCyclesPath);
        assert_eq!(detailed[0].path_len, 2);
        assert_eq!(
            squarefree_class(&detailed[0].circuit.binomial),
            SquarefreeClass::Neither
        );
        assert_same_circuits(&g);
    }

    #[test]
    fn cross_oracle_on_named_graphs() {
        for g in [four_cycle(), triangle(), example2(), two_k4_zero_sum(), k33()] {
            assert_same_circuits(&g);
        }
    }

    #[test]
    fn squarefree_matches_path_length() {
        // A circuit lies outside C^sf exactly when it is a cycle pair joined
        // by a path of length > 1.
        for g in [k4(), example1(), example2(), dumbbell(), two_k4_zero_sum()] {
            for gc in enumerate_graph_circuits_detailed(&g) {
                let outside_sf =
                    squarefree_class(&gc.circuit.binomial) == SquarefreeClass::Neither;
                let long_path =
                    gc.walk_type == WalkType::TwoCyclesPath && gc.path_len > 1;
                assert_eq!(outside_sf, long_path, "{}", gc.circuit.binomial);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let g4 = four_cycle();
        assert_eq!(
            classify_walk_type(&parse_binomial("x1*x3 - x2*x4", 4).unwrap(), &g4),
            Ok(WalkType::EvenCycle)
        );

        let g = example1();
        assert_eq!(
            classify_walk_type(&parse_binomial("x3*x4*x6*x9 - x5^2*x7*x8", 9).unwrap(), &g),
            Ok(WalkType::TwoCyclesPath)
        );
        assert_eq!(
            classify_walk_type(&parse_binomial("x1*x2 - x3*x4", 9).unwrap(), &g),
            Err(GraphError::NotInIdeal)
        );

        let g = example2();
        assert_eq!(
            classify_walk_type(&parse_binomial("x3*x4*x10 - x5*x8*x9", 10).unwrap(), &g),
            Ok(WalkType::TwoCyclesSharedVertex)
        );
    }

    #[test]
    fn minimal_generators_classify_into_walk_shapes() {
        for g in [four_cycle(), k4(), example1(), example2(), dumbbell(), two_k4_zero_sum()] {
            let c = graph_incidence(&g);
            for gen in crate::fibers::minimal_generators(&c) {
                let t = classify_walk_type(&gen, &g).unwrap();
                assert_ne!(t, WalkType::Other, "{gen} on {g:?}");
            }
        }
    }
}
