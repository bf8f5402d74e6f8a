//! Finite simple connected graphs, even closed walks and their binomials,
//! graph-theoretic circuit enumeration, the odd cycle condition, and the
//! induced two-odd-cycles-plus-path pattern detectors.

mod cycles;
mod patterns;
mod walks;

pub use patterns::{
    find_pattern, normality_gap_witness, odd_cycle_condition, pattern_oracle, PatternWitness,
};
pub use walks::{
    classify_walk_type, enumerate_graph_circuits, GraphCircuit, WalkType,
};
pub(crate) use walks::enumerate_graph_circuits_detailed;

use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::config::Configuration;
use crate::ideal::{Binomial, Monomial};
use crate::lattice::IntMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("edge {{{0},{0}}} is a loop")]
    LoopEdge(usize),
    #[error("edge {{{0},{1}}} occurs twice")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("walk does not chain into a closed walk")]
    WalkNotClosed,
    #[error("walk has odd length")]
    WalkNotEven,
    #[error("the two sides of the walk binomial coincide")]
    DegenerateWalk,
    #[error("graph has {0} vertices; exhaustive search is capped at {1}")]
    TooLarge(usize, usize),
    #[error("binomial does not lie in the toric ideal of the graph")]
    NotInIdeal,
}

/// Simple connected undirected graph with 1-based vertices and an indexed
/// edge list (edge i corresponds to variable x_{i+1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// 0-based endpoints, smaller first, in input order.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    edge_of: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds and validates a graph from 1-based edge endpoints.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        let mut edge_of = HashMap::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u == 0 || u > vertex_count {
                return Err(GraphError::VertexOutOfRange(u, vertex_count));
            }
            if v == 0 || v > vertex_count {
                return Err(GraphError::VertexOutOfRange(v, vertex_count));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let (a, b) = (u.min(v) - 1, u.max(v) - 1);
            if edge_of.contains_key(&(a, b)) {
                return Err(GraphError::DuplicateEdge(a + 1, b + 1));
            }
            edge_of.insert((a, b), norm.len());
            adjacency[a].push(b);
            adjacency[b].push(a);
            norm.push((a, b));
        }
        for nbrs in adjacency.iter_mut() {
            nbrs.sort_unstable();
        }
        let g = Graph { vertex_count, edges: norm, adjacency, edge_of };
        if !g.is_connected() {
            return Err(GraphError::NotConnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// 0-based endpoints of edge `i`, smaller endpoint first.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_of.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Text form: `d n` header then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or(GraphError::Parse { line: 0, msg: "empty input".into() })?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| GraphError::Parse {
                    line: line_no,
                    msg: format!("bad header `{header}`"),
                })
            })
            .collect::<Result<_, _>>()?;
        let [d, n] = nums[..] else {
            return Err(GraphError::Parse { line: line_no, msg: "header must be `d n`".into() });
        };
        let mut edges = Vec::with_capacity(n);
        for _ in 0..n {
            let (line_no, line) = lines
                .next()
                .ok_or(GraphError::Parse { line: 0, msg: format!("expected {n} edges") })?;
            let ends: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| GraphError::Parse {
                        line: line_no,
                        msg: format!("bad vertex `{t}`"),
                    })
                })
                .collect::<Result<_, _>>()?;
            let [u, v] = ends[..] else {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: "edge line must be `u v`".into(),
                });
            };
            edges.push((u, v));
        }
        Graph::new(d, &edges)
    }
}

/// Vertex-edge incidence configuration: column j is `e_u + e_v` for edge j.
pub fn graph_incidence(g: &Graph) -> Configuration {
    let d = g.vertex_count();
    let cols: Vec<Vec<BigInt>> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut col = vec![BigInt::from(0); d];
            col[u] += 1;
            col[v] += 1;
            col
        })
        .collect();
    Configuration::new(IntMatrix::from_columns(&cols))
        .expect("incidence matrices of simple connected graphs validate")
}

/// A closed walk given by its edge index sequence (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    edges: Vec<usize>,
}

impl ClosedWalk {
    /// Validates that consecutive edges chain through shared vertices and
    /// that the walk closes up.
    pub fn new(edges: Vec<usize>, g: &Graph) -> Result<ClosedWalk, GraphError> {
        if edges.is_empty() {
            return Err(GraphError::WalkNotClosed);
        }
        let (a, b) = g.edge(edges[0]);
        for start in [a, b] {
            let mut cur = start;
            let mut ok = true;
            for &e in &edges {
                let (x, y) = g.edge(e);
                if cur == x {
                    cur = y;
                } else if cur == y {
                    cur = x;
                } else {
                    ok = false;
                    break;
                }
            }
            if ok && cur == start {
                return Ok(ClosedWalk { edges });
            }
        }
        Err(GraphError::WalkNotClosed)
    }

    /// Closed walk visiting the given 0-based vertices in order.
    pub fn from_vertices(vertices: &[usize], g: &Graph) -> Result<ClosedWalk, GraphError> {
        let q = vertices.len();
        let mut edges = Vec::with_capacity(q);
        for k in 0..q {
            let u = vertices[k];
            let v = vertices[(k + 1) % q];
            let e = g.edge_between(u, v).ok_or(GraphError::WalkNotClosed)?;
            edges.push(e);
        }
        Ok(ClosedWalk { edges })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }
}

/// The binomial of an even closed walk: product over odd positions minus
/// product over even positions.
pub fn walk_binomial(w: &ClosedWalk, g: &Graph) -> Result<Binomial, GraphError> {
    if w.len() % 2 != 0 {
        return Err(GraphError::WalkNotEven);
    }
    binomial_of_edge_sequence(w.edges(), g.edge_count()).ok_or(GraphError::DegenerateWalk)
}

// Parity product of an even edge sequence; None when the two sides agree.
pub(crate) fn binomial_of_edge_sequence(seq: &[usize], nvars: usize) -> Option<Binomial> {
    let mut plus = vec![0u64; nvars];
    let mut minus = vec![0u64; nvars];
    for (pos, &e) in seq.iter().enumerate() {
        if pos % 2 == 0 {
            plus[e] += 1;
        } else {
            minus[e] += 1;
        }
    }
    Binomial::new(Monomial::new(plus), Monomial::new(minus))
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use super::Graph;

    pub fn four_cycle() -> Graph {
        Graph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    pub fn triangle() -> Graph {
        Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    pub fn k4() -> Graph {
        Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    pub fn example1() -> Graph {
        Graph::new(
            7,
            &[(1, 2), (2, 3), (3, 4), (1, 4), (4, 5), (5, 6), (6, 7), (1, 3), (5, 7)],
        )
        .unwrap()
    }

    pub fn example2() -> Graph {
        Graph::new(
            7,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
                (1, 3),
                (5, 7),
            ],
        )
        .unwrap()
    }

    /// Two disjoint triangles (1,2,3), (5,6,7) joined by the path 3-4-5.
    pub fn dumbbell() -> Graph {
        Graph::new(
            7,
            &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)],
        )
        .unwrap()
    }

    /// 0-sum (one shared vertex) of two K4.
    pub fn two_k4_zero_sum() -> Graph {
        Graph::new(
            7,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap()
    }

    pub fn k33() -> Graph {
        Graph::new(
            6,
            &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_graphs::*;
    use super::*;

    #[test]
    fn validation_errors() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
        assert_eq!(
            Graph::new(3, &[(1, 2), (2, 1), (2, 3)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert_eq!(Graph::new(3, &[(1, 4)]), Err(GraphError::VertexOutOfRange(4, 3)));
        assert_eq!(Graph::new(4, &[(1, 2), (3, 4)]), Err(GraphError::NotConnected));
    }

    #[test]
    fn text_round_trip() {
        let g = example1();
        let text = g.to_text();
        assert!(text.starts_with("7 9\n1 2\n"));
        assert_eq!(Graph::parse(&text).unwrap(), g);
        let commented = format!("# example\n{text}");
        assert_eq!(Graph::parse(&commented).unwrap(), g);
    }

    #[test]
    fn incidence_matches_paper_display() {
        let c = graph_incidence(&example1());
        let expected = IntMatrix::from_rows(&[
            vec![1, 0, 0, 1, 0, 0, 0, 1, 0],
            vec![1, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 1, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 1, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 0, 1],
        ]);
        assert_eq!(c.matrix(), &expected);

        let c = graph_incidence(&example2());
        let expected = IntMatrix::from_rows(&[
            vec![1, 0, 0, 1, 0, 0, 0, 0, 1, 0],
            vec![1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 1, 0, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 1, 1, 1, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 1, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 1, 0, 1],
        ]);
        assert_eq!(c.matrix(), &expected);
    }

    #[test]
    fn walk_binomials() {
        let g = four_cycle();
        let w = ClosedWalk::new(vec![0, 1, 2, 3], &g).unwrap();
        assert_eq!(walk_binomial(&w, &g).unwrap().to_string(), "x1*x3 - x2*x4");

        // Triangle (1,3,4), edge 4-5, triangle (5,6,7), edge 4-5 again.
        let g = example1();
        let w = ClosedWalk::new(vec![3, 7, 2, 4, 5, 6, 8, 4], &g).unwrap();
        assert_eq!(
            walk_binomial(&w, &g).unwrap().to_string(),
            "x3*x4*x6*x9 - x5^2*x7*x8"
        );

        // Back-and-forth over one edge is degenerate.
        let w = ClosedWalk::new(vec![0, 0], &g).unwrap();
        assert_eq!(walk_binomial(&w, &g), Err(GraphError::DegenerateWalk));

        let odd = ClosedWalk::from_vertices(&[0, 1, 2], &triangle()).unwrap();
        assert_eq!(walk_binomial(&odd, &triangle()), Err(GraphError::WalkNotEven));

        assert_eq!(
            ClosedWalk::new(vec![0, 2], &four_cycle()),
            Err(GraphError::WalkNotClosed)
        );
    }
}
