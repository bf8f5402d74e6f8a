//! Simple cycle enumeration on adjacency lists.

use super::Graph;

/// All simple cycles as vertex lists (0-based). Each cycle starts at its
/// minimal vertex with the smaller of its two neighbors on the cycle second,
/// so every cycle appears exactly once. Sorted by (length, vertices).
pub(crate) fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let adjacency: Vec<Vec<usize>> =
        (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    all_cycles_adj(&adjacency)
}

pub(crate) fn all_cycles_adj(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let d = adjacency.len();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; d];

    fn dfs(
        adjacency: &[Vec<usize>],
        root: usize,
        cur: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        for &w in &adjacency[cur] {
            if w == root {
                if path.len() >= 3 && path[1] < path[path.len() - 1] {
                    cycles.push(path.clone());
                }
            } else if w > root && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                dfs(adjacency, root, w, path, on_path, cycles);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    for root in 0..d {
        path.push(root);
        on_path[root] = true;
        dfs(adjacency, root, root, &mut path, &mut on_path, &mut cycles);
        on_path[root] = false;
        path.pop();
    }
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cycles
}

/// Whether the cycle (as vertex list) has no chord in `g`.
pub(crate) fn is_chordless(g: &Graph, cycle: &[usize]) -> bool {
    let q = cycle.len();
    for i in 0..q {
        for j in i + 1..q {
            let consecutive = j == i + 1 || (i == 0 && j == q - 1);
            if !consecutive && g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn chordless_odd_cycles(g: &Graph) -> Vec<Vec<usize>> {
    all_cycles(g)
        .into_iter()
        .filter(|c| c.len() % 2 == 1 && is_chordless(g, c))
        .collect()
}

/// Edge indices of a vertex cycle, in traversal order.
pub(crate) fn cycle_edges(g: &Graph, cycle: &[usize]) -> Vec<usize> {
    let q = cycle.len();
    (0..q)
        .map(|i| {
            g.edge_between(cycle[i], cycle[(i + 1) % q])
                .expect("cycle edges exist")
        })
        .collect()
}

/// Vertex set of a cycle as a bitmask (vertex counts stay far below 64).
pub(crate) fn vertex_mask(cycle: &[usize]) -> u64 {
    cycle.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// The cycle rotated so `anchor` comes first, orientation preserved.
pub(crate) fn rotate_cycle(cycle: &[usize], anchor: usize) -> Vec<usize> {
    let pos = cycle.iter().position(|&v| v == anchor).expect("anchor on cycle");
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[pos..]);
    out.extend_from_slice(&cycle[..pos]);
    out
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;

    #[test]
    fn cycle_counts() {
        assert_eq!(all_cycles(&triangle()).len(), 1);
        assert_eq!(all_cycles(&four_cycle()).len(), 1);
        // K4: four triangles and three 4-cycles.
        let cycles = all_cycles(&k4());
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn chordless_filter() {
        let g = example1();
        let odd = chordless_odd_cycles(&g);
        // Triangles (1,2,3), (1,3,4), (5,6,7); the 5-cycle (1,2,3)+(1,3,4)
        // boundary has chord {1,3}.
        assert_eq!(odd.len(), 3);
        assert!(odd.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn rotation_keeps_edges() {
        let g = k4();
        let cycle = vec![0, 1, 2, 3];
        let rot = rotate_cycle(&cycle, 2);
        assert_eq!(rot, vec![2, 3, 0, 1]);
        assert_eq!(cycle_edges(&g, &rot).len(), 4);
    }
}
