use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Simple undirected graph on dense 0-based vertex ids with sorted
/// adjacency lists. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// Girth of a graph: the length of its shortest cycle, with an explicit
/// sentinel for acyclic graphs that orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Acyclic => true,
            Girth::Finite(v) => v >= g,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(v) => write!(f, "{v}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// Bijection between external string labels and internal vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexLabeling {
    labels: Vec<String>,
    ids: HashMap<String, usize>,
}

impl VertexLabeling {
    /// Identity labeling "0", "1", ... for graphs without external names.
    pub fn identity(n: usize) -> Self {
        let mut l = VertexLabeling::default();
        for i in 0..n {
            l.intern(&i.to_string());
        }
        l
    }

    pub fn intern(&mut self, label: &str) -> usize {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        id
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.ids.get(label).copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// An induced subgraph together with the map from its dense ids back to
/// the ids of the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `original_ids[i]` is the host-graph id of induced vertex `i`.
    pub original_ids: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { id: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u.to_string()));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.to_string(), v.to_string()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj })
    }

    /// Unchecked constructor for internal callers that already guarantee
    /// the invariants.
    pub(crate) fn from_adj(adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        let mut g = Graph { n, adj };
        for list in &mut g.adj {
            list.sort_unstable();
            list.dedup();
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete edges are valid")
    }

    pub fn star(n: usize, center: usize) -> Graph {
        assert!(center < n);
        let edges: Vec<(usize, usize)> = (0..n).filter(|&v| v != center).map(|v| (center, v)).collect();
        Graph::from_edges(n, &edges).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted list of (min,max) edge pairs; equal iff same labeled graph.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `src`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.bfs_distances(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn diameter(&self) -> usize {
        let mut d = 0;
        for v in 0..self.n {
            for &x in &self.bfs_distances(v) {
                if x != usize::MAX {
                    d = d.max(x);
                }
            }
        }
        d
    }

    /// r-th power: same vertex set, u~v iff their distance is in [1, r].
    /// Rejects disconnected input.
    pub fn power(&self, r: usize) -> Result<Graph, GraphError> {
        if r == 0 {
            return Err(GraphError::BadExponent);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.power_tolerant(r))
    }

    /// Power computed componentwise: vertices in different components stay
    /// non-adjacent. Internal building block for gadget construction.
    pub(crate) fn power_tolerant(&self, r: usize) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            let dist = self.bfs_distances(u);
            for (v, &d) in dist.iter().enumerate() {
                if v != u && d != usize::MAX && d <= r {
                    adj[u].push(v);
                }
            }
        }
        Graph::from_adj(adj)
    }

    /// Girth via per-vertex BFS with cross-edge detection.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                // Depth bound: deeper tree edges cannot improve on `best`.
                if best != usize::MAX && 2 * dist[u] + 1 > best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        // Cross edge: closes a cycle through the BFS tree.
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// Membership in the class of graphs with girth >= g_min and, when
    /// `leafless`, minimum degree >= 2.
    pub fn is_in_class(&self, g_min: usize, leafless: bool) -> bool {
        if leafless && self.min_degree() < 2 {
            return false;
        }
        self.girth().at_least(g_min)
    }

    /// Vertices surviving `steps` rounds of simultaneous degree-one removal.
    pub fn peel_levels(&self, steps: usize) -> Vec<usize> {
        let mut alive: Vec<bool> = vec![true; self.n];
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        for _ in 0..steps {
            let leaves: Vec<usize> = (0..self.n).filter(|&v| alive[v] && deg[v] == 1).collect();
            if leaves.is_empty() {
                break;
            }
            for &v in &leaves {
                alive[v] = false;
            }
            for &v in &leaves {
                for &w in &self.adj[v] {
                    if alive[w] {
                        deg[w] -= 1;
                    }
                }
            }
        }
        (0..self.n).filter(|&v| alive[v]).collect()
    }

    /// Largest subgraph with no degree-one vertices, as an induced
    /// subgraph with a vertex map. Undefined (error) on trees.
    pub fn core_of(&self) -> Result<Induced, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.is_tree() {
            return Err(GraphError::CoreOfTree);
        }
        let survivors = self.peel_levels(self.n);
        Ok(self.induced(&survivors))
    }

    /// Induced subgraph on `vertices` (host ids, need not be sorted).
    pub fn induced(&self, vertices: &[usize]) -> Induced {
        let mut original_ids = vertices.to_vec();
        original_ids.sort_unstable();
        original_ids.dedup();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in original_ids.iter().enumerate() {
            back[v] = i;
        }
        let mut adj = vec![Vec::new(); original_ids.len()];
        for (i, &v) in original_ids.iter().enumerate() {
            for &w in &self.adj[v] {
                if back[w] != usize::MAX {
                    adj[i].push(back[w]);
                }
            }
        }
        Induced { graph: Graph::from_adj(adj), original_ids }
    }

    /// Parses the edge-list text format: lines "u v" add an edge, a single
    /// token declares an isolated vertex, '#' starts a comment line.
    pub fn parse_edge_list(text: &str) -> Result<(Graph, VertexLabeling), GraphError> {
        let mut labeling = VertexLabeling::default();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [single] => {
                    labeling.intern(single);
                }
                [a, b] => {
                    if a == b {
                        return Err(GraphError::SelfLoop(a.to_string()));
                    }
                    let u = labeling.intern(a);
                    let v = labeling.intern(b);
                    if edges.contains(&(u, v)) || edges.contains(&(v, u)) {
                        return Err(GraphError::DuplicateEdge(a.to_string(), b.to_string()));
                    }
                    edges.push((u, v));
                }
                _ => {
                    return Err(GraphError::MalformedLine {
                        line: lineno + 1,
                        reason: format!("expected 1 or 2 tokens, got {}", tokens.len()),
                    });
                }
            }
        }
        let g = Graph::from_edges(labeling.len(), &edges)?;
        Ok((g, labeling))
    }

    /// Serializes to the edge-list format using the given labeling.
    /// Isolated vertices appear as single-token lines.
    pub fn to_edge_list(&self, labeling: &VertexLabeling) -> String {
        let mut out = String::new();
        for v in 0..self.n {
            if self.degree(v) == 0 {
                let _ = writeln!(out, "{}", labeling.label(v));
            }
        }
        for (u, v) in self.canonical_edges() {
            let _ = writeln!(out, "{} {}", labeling.label(u), labeling.label(v));
        }
        out
    }

    /// JSON form {"n": int, "edges": [[u,v],...]} with u<v, sorted.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.n,
            edges: self.canonical_edges().iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph json serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(doc.n, &edges)
    }

    /// Undirected DOT export with label attributes.
    pub fn to_dot(&self, labeling: &VertexLabeling) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {} [label=\"{}\"];", v, labeling.label(v));
        }
        for (u, v) in self.canonical_edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// New graph with one extra edge; panics on invalid input (internal use).
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        debug_assert!(u != v && !self.has_edge(u, v));
        adj[u].push(v);
        adj[v].push(u);
        Graph::from_adj(adj)
    }
}
