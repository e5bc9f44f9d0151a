//! Finite undirected multigraphs with integer initial edge weights.
//!
//! Parallel edges are first class: the two-vertex graph joined by two
//! parallel edges (the "pair" system) is a central object. Edge order is
//! insertion order and is part of the reproducibility contract — the
//! simulator iterates incident edges in this order when sampling.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    /// Unordered endpoint pairs, insertion-ordered.
    edges: Vec<(usize, usize)>,
    /// Initial weight l0 per edge, all >= 1.
    initial_weights: Vec<u64>,
    start_vertex: usize,
    /// Incident edge indices per vertex, in edge-insertion order.
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Build from explicit parts, validating connectivity and weights.
    pub fn new(
        n_vertices: usize,
        edges: Vec<(usize, usize)>,
        initial_weights: Vec<u64>,
        start_vertex: usize,
    ) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::Construction("graph needs at least one vertex".into()));
        }
        if edges.is_empty() {
            return Err(Error::Construction("graph needs at least one edge".into()));
        }
        if edges.len() != initial_weights.len() {
            return Err(Error::Construction(format!(
                "{} edges but {} initial weights",
                edges.len(),
                initial_weights.len()
            )));
        }
        if start_vertex >= n_vertices {
            return Err(Error::Construction(format!(
                "start vertex {start_vertex} out of range (n={n_vertices})"
            )));
        }
        for &(u, v) in &edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::Construction(format!(
                    "edge ({u},{v}) out of range (n={n_vertices})"
                )));
            }
            if u == v {
                return Err(Error::Construction(format!("self-loop at vertex {u} not supported")));
            }
        }
        if let Some(i) = initial_weights.iter().position(|&w| w == 0) {
            return Err(Error::Construction(format!("edge {i} has zero initial weight")));
        }
        let mut incidence = vec![Vec::new(); n_vertices];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push(i);
            incidence[v].push(i);
        }
        let g = Self { n_vertices, edges, initial_weights, start_vertex, incidence };
        if !g.is_connected() {
            return Err(Error::Construction("graph is not connected".into()));
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n_vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.incidence[v] {
                let (a, b) = self.edges[e];
                let u = if a == v { b } else { a };
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    // ----- canonical builders -----

    /// Two vertices joined by two parallel edges with initial weights (a, b);
    /// start at vertex 0. This realizes the parallel-pair two-edge law.
    pub fn two_edge_pair(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Construction("pair weights must be >= 1".into()));
        }
        Self::new(2, vec![(0, 1), (0, 1)], vec![a, b], 0)
    }

    /// Three vertices in a path with the walk started at the middle; edge
    /// weights (a, b). This realizes the three-vertex two-edge law.
    pub fn two_edge_path(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Construction("path weights must be >= 1".into()));
        }
        // Vertices: 0 = middle, 1 = left, 2 = right.
        Self::new(3, vec![(0, 1), (0, 2)], vec![a, b], 0)
    }

    /// Star with m fingers, start at the center (vertex 0). `l0` must have
    /// length m; `None` gives unit weights.
    pub fn star(m: usize, l0: Option<Vec<u64>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Construction("star needs at least one finger".into()));
        }
        let weights = l0.unwrap_or_else(|| vec![1; m]);
        if weights.len() != m {
            return Err(Error::Construction(format!(
                "star with {m} fingers given {} weights",
                weights.len()
            )));
        }
        let edges = (0..m).map(|i| (0, i + 1)).collect();
        Self::new(m + 1, edges, weights, 0)
    }

    /// Path on n vertices (n-1 edges), unit weights, start at one end.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Construction("path needs n >= 2 vertices".into()));
        }
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let w = vec![1; edges.len()];
        Self::new(n, edges, w, 0)
    }

    /// Cycle on n vertices, unit weights.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Construction("cycle needs n >= 3 vertices".into()));
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        let w = vec![1; edges.len()];
        Self::new(n, edges, w, 0)
    }

    /// Complete graph on n vertices, unit weights.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Construction("complete graph needs n >= 2".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        let w = vec![1; edges.len()];
        Self::new(n, edges, w, 0)
    }

    /// Regular tree truncated at the given depth: the root has d children,
    /// every internal vertex below the root has d-1 children (so that all
    /// internal degrees equal d). Unit weights, start at the root.
    pub fn truncated_regular_tree(d: usize, depth: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::Construction("tree degree must be >= 2".into()));
        }
        if depth == 0 {
            return Err(Error::Construction("tree depth must be >= 1".into()));
        }
        let mut edges = Vec::new();
        let mut frontier = vec![0usize];
        let mut next_id = 1usize;
        for level in 0..depth {
            let children_per = if level == 0 { d } else { d - 1 };
            let mut next_frontier = Vec::new();
            for &v in &frontier {
                for _ in 0..children_per {
                    edges.push((v, next_id));
                    next_frontier.push(next_id);
                    next_id += 1;
                }
            }
            frontier = next_frontier;
        }
        let w = vec![1; edges.len()];
        Self::new(next_id, edges, w, 0)
    }

    // ----- accessors -----

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// n-bar: the number of edges.
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn initial_weights(&self) -> &[u64] {
        &self.initial_weights
    }

    pub fn start_vertex(&self) -> usize {
        self.start_vertex
    }

    /// Incident edge indices of `v`, in insertion order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// D: maximum vertex degree.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// t0: the initial time, sum of the initial edge weights.
    pub fn t0(&self) -> u64 {
        self.initial_weights.iter().sum()
    }

    /// The endpoint of edge `e` that is not `v`.
    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// m(G): number of unordered pairs of distinct edges sharing at least
    /// one vertex. A parallel pair shares both endpoints but is counted
    /// once.
    pub fn m_pairs(&self) -> usize {
        let n = self.n_edges();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    count += 1;
                }
            }
        }
        count
    }

    /// Parse the textual grammar used by the command line:
    /// `pair:a=1,b=1`, `path2:a=1,b=2`, `star:m=3`, `cycle:n=5`,
    /// `complete:n=4`, `tree:d=3,depth=6`, or `@file.json`.
    pub fn parse_spec(s: &str) -> Result<Self> {
        if let Some(path) = s.strip_prefix('@') {
            return Self::from_json_file(path);
        }
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("graph spec `{s}` is missing `:`")))?;
        let mut pairs = std::collections::BTreeMap::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad key=value pair `{part}`")))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer value in `{part}`")))?;
            pairs.insert(k.trim().to_string(), v);
        }
        let get = |key: &str| -> Result<u64> {
            pairs
                .get(key)
                .copied()
                .ok_or_else(|| Error::Parse(format!("graph spec `{s}` is missing `{key}`")))
        };
        match head {
            "pair" => Self::two_edge_pair(get("a")?, get("b")?),
            "path2" => Self::two_edge_path(get("a")?, get("b")?),
            "star" => Self::star(get("m")? as usize, None),
            "path" => Self::path(get("n")? as usize),
            "cycle" => Self::cycle(get("n")? as usize),
            "complete" => Self::complete(get("n")? as usize),
            "tree" => Self::truncated_regular_tree(get("d")? as usize, get("depth")? as usize),
            other => Err(Error::Parse(format!("unknown graph preset `{other}`"))),
        }
    }

    fn from_json_file(path: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Spec {
            vertices: usize,
            edges: Vec<(usize, usize)>,
            #[serde(default)]
            weights: Option<Vec<u64>>,
            #[serde(default)]
            start: usize,
        }
        let text = std::fs::read_to_string(path)?;
        let spec: Spec =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("graph json: {e}")))?;
        let weights = spec.weights.unwrap_or_else(|| vec![1; spec.edges.len()]);
        Self::new(spec.vertices, spec.edges, weights, spec.start)
    }
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_spec(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph<{} vertices, {} edges, t0={}, start={}>",
            self.n_vertices,
            self.n_edges(),
            self.t0(),
            self.start_vertex
        )
    }
}
