//! Small simple graphs: hypercube and complete families plus edge-list input.
//!
//! Graphs are immutable after construction, so they can be shared freely
//! across worker threads. Adjacency is kept as sorted neighbour lists, with
//! dense bit-rows added for small orders to make membership tests O(1).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Orders up to this bound keep a dense bit-row per vertex (n*n/8 bytes).
const BITROW_MAX_N: usize = 4096;

/// Hard cap on the vertex count of any constructed or loaded graph.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("hypercube dimension {0} out of range 1..=20")]
    HypercubeDimension(u32),
    #[error("complete graph order {0} out of range 1..={MAX_VERTICES}")]
    CompleteOrder(usize),
    #[error("edge list is empty")]
    EmptyEdgeList,
    #[error("line {line}: expected two integers, got {text:?}")]
    BadEdgeLine { line: usize, text: String },
    #[error("line {line}: self-loop {v} {v} is not allowed")]
    SelfLoop { line: usize, v: usize },
    #[error("vertex index {0} exceeds the maximum {MAX_VERTICES}")]
    VertexOutOfRange(usize),
    #[error("unknown graph spec {0:?} (expected hypercube:<d>, complete:<n>, or a file path)")]
    BadSpec(String),
}

/// Family tag, kept for reporting and for family-aware solver heuristics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphLabel {
    Hypercube(u32),
    Complete(usize),
    Custom,
}

impl fmt::Display for GraphLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphLabel::Hypercube(d) => write!(f, "hypercube:{d}"),
            GraphLabel::Complete(n) => write!(f, "complete:{n}"),
            GraphLabel::Custom => write!(f, "custom"),
        }
    }
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
    bits: Option<Vec<u64>>,
    words_per_row: usize,
    label: GraphLabel,
}

impl Graph {
    fn from_neighbour_lists(adj: Vec<Vec<u32>>, label: GraphLabel) -> Self {
        let n = adj.len();
        let mut g = Graph {
            n,
            adj,
            bits: None,
            words_per_row: 0,
            label,
        };
        if n <= BITROW_MAX_N {
            let words = n.div_ceil(64);
            let mut bits = vec![0u64; words * n];
            for (v, nbrs) in g.adj.iter().enumerate() {
                for &w in nbrs {
                    bits[v * words + (w as usize) / 64] |= 1u64 << (w % 64);
                }
            }
            g.bits = Some(bits);
            g.words_per_row = words;
        }
        g
    }

    /// Edge graph of the d-dimensional hypercube: vertices are d-bit strings,
    /// adjacent exactly when they differ in one bit. Vertex numbering is the
    /// binary encoding, so witness files are portable.
    pub fn hypercube(d: u32) -> Result<Self, GraphError> {
        if !(1..=20).contains(&d) {
            return Err(GraphError::HypercubeDimension(d));
        }
        let n = 1usize << d;
        let adj = (0..n)
            .map(|v| (0..d).map(|i| (v ^ (1 << i)) as u32).collect::<Vec<_>>())
            .map(|mut nb| {
                nb.sort_unstable();
                nb
            })
            .collect();
        Ok(Self::from_neighbour_lists(adj, GraphLabel::Hypercube(d)))
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::CompleteOrder(n));
        }
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&w| w as usize != v).collect())
            .collect();
        Ok(Self::from_neighbour_lists(adj, GraphLabel::Complete(n)))
    }

    /// Parses an edge list: one `u v` pair per line, `#` comments and blank
    /// lines ignored. Duplicate edges are merged; self-loops are rejected.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = BTreeSet::new();
        let mut max = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut it = body.split_whitespace();
            let (a, b) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(GraphError::BadEdgeLine {
                        line,
                        text: body.to_string(),
                    })
                }
            };
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|_| GraphError::BadEdgeLine {
                    line,
                    text: body.to_string(),
                })
            };
            let (u, v) = (parse(a)?, parse(b)?);
            if u == v {
                return Err(GraphError::SelfLoop { line, v: u });
            }
            if u >= MAX_VERTICES || v >= MAX_VERTICES {
                return Err(GraphError::VertexOutOfRange(u.max(v)));
            }
            max = max.max(u).max(v);
            edges.insert((u.min(v), u.max(v)));
        }
        if edges.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        let n = max + 1;
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Self::from_neighbour_lists(adj, GraphLabel::Custom))
    }

    /// Resolves a family spec string: `hypercube:<d>` or `complete:<n>`.
    pub fn from_family_spec(spec: &str) -> Result<Self, GraphError> {
        let mut parts = spec.splitn(2, ':');
        match (parts.next(), parts.next()) {
            (Some("hypercube"), Some(d)) => {
                let d = d
                    .parse::<u32>()
                    .map_err(|_| GraphError::BadSpec(spec.to_string()))?;
                Self::hypercube(d)
            }
            (Some("complete"), Some(n)) => {
                let n = n
                    .parse::<usize>()
                    .map_err(|_| GraphError::BadSpec(spec.to_string()))?;
                Self::complete(n)
            }
            _ => Err(GraphError::BadSpec(spec.to_string())),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &GraphLabel {
        &self.label
    }

    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> u64 {
        self.adj.iter().map(|nb| nb.len() as u64).sum::<u64>() / 2
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        match &self.bits {
            Some(bits) => bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1,
            None => self.adj[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<u32> {
        let d = self.adj.first()?.len();
        self.adj
            .iter()
            .all(|nb| nb.len() == d)
            .then_some(d as u32)
    }

    /// All edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for (v, nbrs) in self.adj.iter().enumerate() {
            for &w in nbrs {
                if (v as u32) < w {
                    out.push((v as u32, w));
                }
            }
        }
        out
    }

    /// Breadth-first order from vertex 0, neighbours in ascending index.
    /// Unreached vertices (disconnected graphs) are appended in ascending
    /// order, each starting a fresh BFS, so the order is always total.
    pub fn bfs_order(&self) -> Vec<u32> {
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start as u32]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &self.adj[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w as usize);
                }
            }
        }
        count == self.n
    }

    /// Two-colouring by parts if bipartite, else an odd cycle as witness.
    pub fn bipartition(&self) -> Result<Vec<u8>, Vec<u32>> {
        let mut side = vec![u8::MAX; self.n];
        let mut parent = vec![u32::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    let w = w as usize;
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        parent[w] = v as u32;
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return Err(odd_cycle(&parent, v as u32, w as u32));
                    }
                }
            }
        }
        Ok(side)
    }
}

/// Reconstructs the odd cycle through conflict edge (u, v) from BFS parents.
fn odd_cycle(parent: &[u32], u: u32, v: u32) -> Vec<u32> {
    let path_to_root = |mut x: u32| {
        let mut path = vec![x];
        while parent[x as usize] != u32::MAX {
            x = parent[x as usize];
            path.push(x);
        }
        path
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    // Trim the common tail after the lowest common ancestor.
    let mut i = pu.len();
    let mut j = pv.len();
    while i > 0 && j > 0 && pu[i - 1] == pv[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<u32> = pu[..=i.min(pu.len() - 1)].to_vec();
    let back: Vec<u32> = pv[..=j.min(pv.len() - 1)].iter().rev().copied().collect();
    cycle.extend(back);
    debug_assert!(cycle.len() % 2 == 1, "cycle witness must be odd");
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercube_family_counts() {
        for d in 1..=10u32 {
            let g = Graph::hypercube(d).unwrap();
            assert_eq!(g.n(), 1 << d);
            assert_eq!(g.edge_count(), (d as u64) << (d - 1));
            assert_eq!(g.regularity(), Some(d));
            assert!(g.is_connected());
            let parts = g.bipartition().unwrap();
            let zeros = parts.iter().filter(|&&s| s == 0).count();
            assert_eq!(zeros, 1 << (d - 1));
            // Parity classes: side equals popcount parity.
            for v in 0..g.n() {
                assert_eq!(parts[v] as u32, (v.count_ones() + parts[0] as u32) % 2);
            }
        }
    }

    #[test]
    fn hypercube_dimension_bounds() {
        assert!(Graph::hypercube(0).is_err());
        assert!(Graph::hypercube(21).is_err());
        let g = Graph::hypercube(1).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn complete_family() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(g.regularity(), Some(4));
        assert_eq!(g.edge_count(), 10);
        let g = Graph::complete(6).unwrap();
        assert_eq!(g.regularity(), Some(5));
        assert_eq!(g.edge_count(), 15);
        assert_eq!(Graph::complete(2).unwrap().edges(), vec![(0, 1)]);
    }

    #[test]
    fn adjacency_is_symmetric() {
        for g in [
            Graph::hypercube(4).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::from_edge_list("0 1\n1 2\n2 3\n3 0\n").unwrap(),
        ] {
            for v in 0..g.n() {
                for &w in g.neighbours(v) {
                    assert!(g.is_adjacent(w as usize, v));
                    assert!(g.is_adjacent(v, w as usize));
                }
                assert!(!g.is_adjacent(v, v));
            }
        }
    }

    #[test]
    fn edge_list_triangle() {
        let g = Graph::from_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.regularity(), Some(2));
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn edge_list_three_cube_matches_family() {
        let text = "
            0 1\n0 2\n0 4\n1 3\n1 5\n2 3\n2 6\n3 7\n4 5\n4 6\n5 7\n6 7\n";
        let g = Graph::from_edge_list(text).unwrap();
        let q3 = Graph::hypercube(3).unwrap();
        assert_eq!(g.n(), q3.n());
        assert_eq!(g.edges(), q3.edges());
        assert_eq!(g.regularity(), Some(3));
    }

    #[test]
    fn edge_list_rejects_loops_and_junk() {
        assert!(matches!(
            Graph::from_edge_list("0 0"),
            Err(GraphError::SelfLoop { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("0 x"),
            Err(GraphError::BadEdgeLine { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("# nothing\n\n"),
            Err(GraphError::EmptyEdgeList)
        ));
        // Duplicates collapse.
        let g = Graph::from_edge_list("0 1\n1 0\n0 1").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn regularity_absent_on_path() {
        let g = Graph::from_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.regularity(), None);
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!(Graph::from_family_spec("hypercube:4").unwrap().n(), 16);
        assert_eq!(Graph::from_family_spec("complete:5").unwrap().n(), 5);
        assert!(Graph::from_family_spec("torus:3").is_err());
        assert!(Graph::from_family_spec("hypercube:x").is_err());
    }

    #[test]
    fn bfs_order_on_hypercube_starts_with_unit_vectors() {
        let g = Graph::hypercube(5).unwrap();
        let order = g.bfs_order();
        assert_eq!(&order[..6], &[0, 1, 2, 4, 8, 16]);
        assert_eq!(order.len(), 32);
    }

    #[test]
    fn triangle_odd_cycle_witness() {
        let g = Graph::from_edge_list("0 1\n1 2\n2 0").unwrap();
        let cycle = g.bipartition().unwrap_err();
        assert_eq!(cycle.len() % 2, 1);
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted, vec![0, 1, 2]);
    }
}
