//! Reconstruction of all r-th roots with girth >= 2r+3 and no leaves,
//! by seeding a single root edge and propagating forced neighborhoods.

use std::collections::VecDeque;

use crate::balls::{self, BallFamily};
use crate::graph::Graph;

/// The verified roots of a graph for a given (r, girth bound) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    pub roots: Vec<Graph>,
    pub r: usize,
    pub girth_min: usize,
}

impl RootSet {
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }
}

/// Candidate root grown from the assumption that `e = (x, y)` is an edge
/// of a root of `g`. The result is not verified.
pub fn reconstruct_from_one_edge(g: &Graph, e: (usize, usize), _r: usize) -> Graph {
    let f = balls::balls(g);
    reconstruct_with_balls(g, &f, e)
}

fn reconstruct_with_balls(g: &Graph, f: &BallFamily, e: (usize, usize)) -> Graph {
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let (x0, y0) = e;
    adj[x0].push(y0);
    adj[y0].push(x0);

    let mut processed = vec![false; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    queue.push_back(x0);
    queue.push_back(y0);
    queued[x0] = true;
    queued[y0] = true;

    while let Some(x) = queue.pop_front() {
        if processed[x] || adj[x].is_empty() {
            continue;
        }
        processed[x] = true;
        let y = *adj[x].iter().min().expect("degree checked above");
        let forced = balls::n_set(f, x, y);
        // Degree bound: a root neighborhood lives inside the ball.
        if forced.len() > f.ball(x).len().saturating_sub(1) {
            break;
        }
        for &z in &forced {
            if z == x {
                continue;
            }
            if !adj[x].contains(&z) {
                adj[x].push(z);
                adj[z].push(x);
            }
            if !queued[z] {
                queued[z] = true;
                queue.push_back(z);
            }
        }
    }
    Graph::from_adj(adj)
}

/// Class membership plus exact power equality.
pub fn verify_root(g: &Graph, h: &Graph, r: usize) -> bool {
    if h.n() != g.n() {
        return false;
    }
    if !h.is_connected() {
        return false;
    }
    if !h.is_in_class(2 * r + 3, true) {
        return false;
    }
    match h.power(r) {
        Ok(p) => &p == g,
        Err(_) => false,
    }
}

/// All r-th roots of `g` with girth >= 2r+3 and minimum degree >= 2,
/// deduplicated and sorted by edge list.
pub fn all_leafless_roots(g: &Graph, r: usize) -> RootSet {
    let girth_min = 2 * r + 3;
    let mut roots: Vec<Graph> = Vec::new();
    if g.n() >= 3 && g.is_connected() && r >= 1 {
        let f = balls::balls(g);
        // Seed vertex: smallest ball, ties by id.
        let x = (0..g.n())
            .min_by_key(|&v| (f.ball(v).len(), v))
            .expect("nonempty graph");
        for &y in f.ball(x) {
            if y == x {
                continue;
            }
            let candidate = reconstruct_with_balls(g, &f, (x, y));
            if verify_root(g, &candidate, r)
                && !roots.iter().any(|h| h.canonical_edges() == candidate.canonical_edges())
            {
                roots.push(candidate);
            }
        }
        roots.sort_by_key(|h| h.canonical_edges());
    }
    RootSet { roots, r, girth_min }
}
