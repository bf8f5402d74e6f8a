//! Odd cycle condition, induced two-odd-cycles-plus-path patterns, and
//! normality gap witnesses.

use std::fmt;

use num_bigint::BigInt;

use super::cycles::{all_cycles_adj, chordless_odd_cycles, vertex_mask};
use super::{Graph, GraphError};
use crate::config::DegreeVector;

/// Two vertex-disjoint odd cycles and a connecting path whose union is an
/// induced subgraph. Vertices are 0-based; the path runs from a vertex of
/// `cycle1` to a vertex of `cycle2`, endpoints included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub cycle1: Vec<usize>,
    pub cycle2: Vec<usize>,
    pub path: Vec<usize>,
}

impl PatternWitness {
    pub fn path_len(&self) -> usize {
        self.path.len() - 1
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_list = |vs: &[usize]| {
            vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "cycle ({}) and cycle ({}) joined by path {}",
            fmt_list(&self.cycle1),
            fmt_list(&self.cycle2),
            fmt_list(&self.path)
        )
    }
}

/// The odd cycle condition: every two vertex-disjoint odd cycles are joined
/// by at least one edge. Equivalent to normality of the edge ring.
///
/// Checking chordless pairs suffices: every odd cycle contains a chordless
/// odd cycle on a subset of its vertices, and joining edges transfer.
pub fn odd_cycle_condition(g: &Graph) -> bool {
    unjoined_disjoint_odd_pair(g).is_none()
}

fn unjoined_disjoint_odd_pair(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let odd = chordless_odd_cycles(g);
    for i in 0..odd.len() {
        let mask_i = vertex_mask(&odd[i]);
        for j in i + 1..odd.len() {
            if mask_i & vertex_mask(&odd[j]) != 0 {
                continue;
            }
            let joined = odd[i]
                .iter()
                .any(|&u| odd[j].iter().any(|&v| g.has_edge(u, v)));
            if !joined {
                return Some((odd[i].clone(), odd[j].clone()));
            }
        }
    }
    None
}

/// Searches for an induced subgraph made of two vertex-disjoint odd cycles
/// joined by a path of length >= `min_path_len` (1 or 2).
///
/// An induced pattern forces both cycles chordless, at most one joining
/// edge, and path interior vertices adjacent only to their path neighbors,
/// so the search over chordless odd pairs plus induced connecting paths is
/// exhaustive.
pub fn find_pattern(g: &Graph, min_path_len: usize) -> Option<PatternWitness> {
    assert!(min_path_len == 1 || min_path_len == 2);
    let odd = chordless_odd_cycles(g);
    for i in 0..odd.len() {
        let mask_i = vertex_mask(&odd[i]);
        for j in i + 1..odd.len() {
            if mask_i & vertex_mask(&odd[j]) != 0 {
                continue;
            }
            let (c1, c2) = (&odd[i], &odd[j]);
            let joins: Vec<(usize, usize)> = c1
                .iter()
                .flat_map(|&u| c2.iter().filter(move |&&v| g.has_edge(u, v)).map(move |&v| (u, v)))
                .collect();
            match joins.len() {
                0 => {
                    if let Some(path) = induced_connecting_path(g, c1, c2) {
                        return Some(PatternWitness {
                            cycle1: c1.clone(),
                            cycle2: c2.clone(),
                            path,
                        });
                    }
                }
                1 if min_path_len == 1 => {
                    let (u, v) = joins[0];
                    return Some(PatternWitness {
                        cycle1: c1.clone(),
                        cycle2: c2.clone(),
                        path: vec![u, v],
                    });
                }
                _ => {}
            }
        }
    }
    None
}

// Depth-first search for a path c1 -> c2 whose interior vertices avoid both
// cycles, are mutually non-adjacent except consecutively, and touch the
// cycles only at the attachment edges. Such a path has length >= 2 because
// the cycles have no joining edge.
fn induced_connecting_path(g: &Graph, c1: &[usize], c2: &[usize]) -> Option<Vec<usize>> {
    let in_c1 = vertex_mask(c1);
    let in_c2 = vertex_mask(c2);
    for &a in c1 {
        let mut interior: Vec<usize> = Vec::new();
        if let Some(path) = extend_path(g, a, c1, c2, in_c1, in_c2, &mut interior) {
            return Some(path);
        }
    }
    None
}

fn extend_path(
    g: &Graph,
    a: usize,
    c1: &[usize],
    c2: &[usize],
    in_c1: u64,
    in_c2: u64,
    interior: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let last = *interior.last().unwrap_or(&a);
    for &w in g.neighbors(last) {
        if (1 << w) & (in_c1 | in_c2) != 0 || interior.contains(&w) {
            continue;
        }
        // Cycle adjacencies of the candidate interior vertex.
        let c1_neighbors: Vec<usize> =
            c1.iter().copied().filter(|&u| g.has_edge(w, u)).collect();
        let c2_neighbors: Vec<usize> =
            c2.iter().copied().filter(|&u| g.has_edge(w, u)).collect();
        let expected_c1: &[usize] = if interior.is_empty() { &[a] } else { &[] };
        if c1_neighbors != expected_c1 {
            continue;
        }
        // Non-adjacent to earlier interior vertices.
        if interior.len() >= 1 {
            let earlier = &interior[..interior.len() - 1];
            if earlier.iter().any(|&p| g.has_edge(w, p)) {
                continue;
            }
        }
        match c2_neighbors.len() {
            0 => {
                interior.push(w);
                if let Some(path) = extend_path(g, a, c1, c2, in_c1, in_c2, interior) {
                    return Some(path);
                }
                interior.pop();
            }
            1 => {
                let mut path = vec![a];
                path.extend_from_slice(interior);
                path.push(w);
                path.push(c2_neighbors[0]);
                return Some(path);
            }
            _ => {}
        }
    }
    None
}

/// Exhaustive oracle for `find_pattern`: scans every vertex subset and
/// checks whether the induced subgraph is exactly two vertex-disjoint odd
/// cycles plus a connecting path of length >= `min_path_len`.
pub fn pattern_oracle(g: &Graph, min_path_len: usize) -> Result<Option<PatternWitness>, GraphError> {
    const CAP: usize = 20;
    let d = g.vertex_count();
    if d > CAP {
        return Err(GraphError::TooLarge(d, CAP));
    }
    for mask in 0u32..(1 << d) {
        let subset: Vec<usize> = (0..d).filter(|v| mask & (1 << v) != 0).collect();
        if subset.len() < 6 {
            continue;
        }
        if let Some(witness) = subset_as_pattern(g, &subset, min_path_len) {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

fn subset_as_pattern(g: &Graph, subset: &[usize], min_path_len: usize) -> Option<PatternWitness> {
    let k = subset.len();
    let mut local_of = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in subset.iter().enumerate() {
        local_of[v] = i;
    }
    let mut adjacency = vec![Vec::new(); k];
    let mut edge_list: Vec<(usize, usize)> = Vec::new();
    for (i, &v) in subset.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = local_of[w];
            if j != usize::MAX && i < j {
                adjacency[i].push(j);
                adjacency[j].push(i);
                edge_list.push((i, j));
            }
        }
    }
    if edge_list.len() != k + 1 {
        return None;
    }
    let mut degree = vec![0usize; k];
    for &(u, v) in &edge_list {
        degree[u] += 1;
        degree[v] += 1;
    }
    if degree.iter().filter(|&&x| x == 3).count() != 2
        || degree.iter().any(|&x| x != 2 && x != 3)
    {
        return None;
    }
    // Decompose: two vertex-disjoint odd cycles plus a path over the rest.
    let cycles = all_cycles_adj(&adjacency);
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let (c1, c2) = (&cycles[i], &cycles[j]);
            if c1.len() % 2 == 0 || c2.len() % 2 == 0 {
                continue;
            }
            if c1.iter().any(|v| c2.contains(v)) {
                continue;
            }
            if let Some(path) = rest_is_connecting_path(&adjacency, &edge_list, c1, c2) {
                if path.len() - 1 >= min_path_len {
                    let lift = |vs: &[usize]| vs.iter().map(|&v| subset[v]).collect::<Vec<_>>();
                    return Some(PatternWitness {
                        cycle1: lift(c1),
                        cycle2: lift(c2),
                        path: lift(&path),
                    });
                }
            }
        }
    }
    None
}

// Checks that the edges outside the two cycles form a single simple path
// from a vertex of c1 to a vertex of c2 whose interior is exactly the
// leftover vertices.
fn rest_is_connecting_path(
    adjacency: &[Vec<usize>],
    edge_list: &[(usize, usize)],
    c1: &[usize],
    c2: &[usize],
) -> Option<Vec<usize>> {
    let k = adjacency.len();
    let cycle_edge = |u: usize, v: usize| {
        let on = |c: &[usize]| {
            let q = c.len();
            (0..q).any(|i| {
                let (a, b) = (c[i], c[(i + 1) % q]);
                (a, b) == (u, v) || (b, a) == (u, v)
            })
        };
        on(c1) || on(c2)
    };
    let rest: Vec<(usize, usize)> =
        edge_list.iter().copied().filter(|&(u, v)| !cycle_edge(u, v)).collect();
    let leftover: Vec<usize> =
        (0..k).filter(|v| !c1.contains(v) && !c2.contains(v)).collect();
    if rest.len() != leftover.len() + 1 {
        return None;
    }
    let mut rest_deg = vec![0usize; k];
    let mut rest_adj = vec![Vec::new(); k];
    for &(u, v) in &rest {
        rest_deg[u] += 1;
        rest_deg[v] += 1;
        rest_adj[u].push(v);
        rest_adj[v].push(u);
    }
    if leftover.iter().any(|&v| rest_deg[v] != 2) {
        return None;
    }
    let mut ends: Vec<usize> =
        (0..k).filter(|&v| !leftover.contains(&v) && rest_deg[v] > 0).collect();
    if ends.len() != 2 || rest_deg[ends[0]] != 1 || rest_deg[ends[1]] != 1 {
        return None;
    }
    // Orient from the c1 end.
    if !c1.contains(&ends[0]) {
        ends.swap(0, 1);
    }
    if !c1.contains(&ends[0]) || !c2.contains(&ends[1]) {
        return None;
    }
    // Walk the path and insist it is a single chain covering every rest edge.
    let mut path = vec![ends[0]];
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    while cur != ends[1] {
        let next = *rest_adj[cur].iter().find(|&&w| w != prev)?;
        prev = cur;
        cur = next;
        path.push(cur);
        if path.len() > rest.len() + 1 {
            return None;
        }
    }
    if path.len() != rest.len() + 1 {
        return None;
    }
    Some(path)
}

/// A multidegree in the cone and lattice but outside the semigroup, when the
/// odd cycle condition fails: the vertex indicator of two vertex-disjoint
/// odd cycles with no joining edge. Its fiber is empty because the cycles
/// cannot be perfectly matched internally.
pub fn normality_gap_witness(g: &Graph) -> Option<DegreeVector> {
    let (c1, c2) = unjoined_disjoint_odd_pair(g)?;
    let mut indicator = vec![BigInt::from(0); g.vertex_count()];
    for &v in c1.iter().chain(&c2) {
        indicator[v] = BigInt::from(1);
    }
    Some(DegreeVector(indicator))
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;
    use crate::fibers::enumerate_fiber;
    use crate::graphs::graph_incidence;

    #[test]
    fn occ_examples() {
        assert!(odd_cycle_condition(&k4()));
        assert!(!odd_cycle_condition(&example1()));
        assert!(!odd_cycle_condition(&two_k4_zero_sum()));
        assert!(odd_cycle_condition(&k33()));
    }

    #[test]
    fn find_pattern_on_example1() {
        let g = example1();
        assert_eq!(find_pattern(&g, 2), None);
        let w = find_pattern(&g, 1).expect("length-1 pattern");
        // Triangles (1,3,4) and (5,6,7) joined by the edge 4-5 (0-based 3-4).
        assert_eq!(w.path_len(), 1);
        let mut all: Vec<usize> = w.cycle1.iter().chain(&w.cycle2).copied().collect();
        all.sort_unstable();
        assert_eq!(all, vec![0, 2, 3, 4, 5, 6]);
        assert_eq!(w.path, vec![3, 4]);
    }

    #[test]
    fn find_pattern_on_example2_and_dumbbell() {
        assert_eq!(find_pattern(&example2(), 1), None);
        let w = find_pattern(&dumbbell(), 2).expect("the graph is the pattern");
        assert_eq!(w.path_len(), 2);
        assert_eq!(w.path, vec![2, 3, 4]);
        assert!(find_pattern(&dumbbell(), 1).is_some());
    }

    #[test]
    fn zero_sum_of_k4_has_no_induced_pattern() {
        let g = two_k4_zero_sum();
        assert_eq!(find_pattern(&g, 1), None);
        assert_eq!(pattern_oracle(&g, 1).unwrap(), None);
    }

    #[test]
    fn oracle_agrees_on_named_graphs() {
        for g in [four_cycle(), triangle(), k4(), example1(), example2(), dumbbell(), k33()] {
            for len in [1, 2] {
                let fast = find_pattern(&g, len);
                let slow = pattern_oracle(&g, len).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "len {len} on {g:?}");
            }
        }
    }

    #[test]
    fn bipartite_graphs_never_match() {
        assert_eq!(pattern_oracle(&k33(), 1).unwrap(), None);
        assert_eq!(find_pattern(&k33(), 1), None);
    }

    #[test]
    fn gap_witnesses() {
        assert_eq!(normality_gap_witness(&k4()), None);

        let g = example1();
        let w = normality_gap_witness(&g).expect("nonnormal");
        let ints: Vec<i64> = w.0.iter().map(|e| i64::try_from(e).unwrap()).collect();
        assert_eq!(ints, vec![1, 1, 1, 0, 1, 1, 1]);
        let fiber = enumerate_fiber(&graph_incidence(&g), &w).unwrap();
        assert!(fiber.monomials.is_empty());

        let g = two_k4_zero_sum();
        let w = normality_gap_witness(&g).expect("nonnormal");
        let fiber = enumerate_fiber(&graph_incidence(&g), &w).unwrap();
        assert!(fiber.monomials.is_empty());
        // The indicator avoids the shared vertex 4 (0-based 3).
        assert!(w.0[3] == BigInt::from(0));
    }
}
