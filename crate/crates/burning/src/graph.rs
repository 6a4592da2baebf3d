//! Simple undirected graphs in canonical adjacency-list form.

use std::fmt;

/// A simple undirected graph on vertices `0..n`.
///
/// Canonical form: no self-loops, no parallel edges, every adjacency list
/// sorted ascending. Construction enforces all three, so traversal order is
/// deterministic everywhere downstream.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

/// What a constructor discarded to reach canonical form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DroppedEdges {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl Graph {
    /// Builds a graph from an edge list; self-loops and duplicate edges are
    /// dropped silently. Panics if an endpoint is `>= n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        Self::from_edges_counted(n, edges).0
    }

    /// Like [`Graph::from_edges`] but reports how many self-loops and
    /// duplicates were dropped. An edge and its reversal count as duplicates.
    pub fn from_edges_counted(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> (Graph, DroppedEdges) {
        let mut dropped = DroppedEdges::default();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u == v {
                dropped.self_loops += 1;
            } else {
                pairs.push((u.min(v), u.max(v)));
            }
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        dropped.duplicates = before - pairs.len();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &pairs {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph {
            adj,
            edge_count: pairs.len(),
            labels: None,
        };
        (g, dropped)
    }

    /// Attaches one display label per vertex. Panics on a length mismatch.
    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n(), "one label per vertex required");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name for `v`: its label if labels are attached, else its id.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves a label back to a vertex id.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|x| x == label))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

/// Dense set of vertex ids over the fixed universe `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> VertexSet {
        VertexSet {
            bits: vec![false; universe],
            len: 0,
        }
    }

    pub fn from_iter(universe: usize, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = VertexSet::new(universe);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Inserts `v`; returns whether it was newly added.
    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = !self.bits[v];
        if fresh {
            self.bits[v] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits[v]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    /// Whether every vertex of the universe is in the set.
    pub fn is_full(&self) -> bool {
        self.len == self.bits.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Assignment of every vertex to a connected component id in `0..count`.
///
/// Components are numbered by their smallest vertex, so ids are stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub component_of: Vec<usize>,
    pub count: usize,
}

/// Labels connected components by BFS sweep in vertex order.
pub fn connected_components(g: &Graph) -> ComponentPartition {
    let n = g.n();
    let mut component_of = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        component_of[start] = count;
        queue.push(start);
        while let Some(u) = queue.pop() {
            for &w in g.neighbors(u) {
                if component_of[w] == usize::MAX {
                    component_of[w] = count;
                    queue.push(w);
                }
            }
        }
        count += 1;
    }
    ComponentPartition {
        component_of,
        count,
    }
}
