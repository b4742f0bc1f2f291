//! Closed balls B_v = N_G(v) ∪ {v} and the set algebra built on them:
//! the edge-neighborhood extraction sets and the tail-structure layers.
//!
//! All sets are sorted integer vectors; intersections, unions and
//! differences are merge-based for determinism.

use crate::error::TailError;
use crate::graph::Graph;

/// Per-vertex closed neighborhoods over a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallFamily {
    balls: Vec<Vec<usize>>,
}

impl BallFamily {
    pub fn ball(&self, v: usize) -> &[usize] {
        &self.balls[v]
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }
}

/// Computes the closed ball of every vertex in G.
pub fn balls(g: &Graph) -> BallFamily {
    let mut out = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mut b = Vec::with_capacity(g.degree(v) + 1);
        b.extend_from_slice(g.neighbors(v));
        b.push(v);
        b.sort_unstable();
        out.push(b);
    }
    BallFamily { balls: out }
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            out.push(x);
        }
    }
    out
}

pub(crate) fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn remove_one(set: &mut Vec<usize>, x: usize) {
    if let Ok(pos) = set.binary_search(&x) {
        set.remove(pos);
    }
}

/// S_{x,y}: B_x ∩ B_y minus every ball centered in B_y \ B_x, minus {x}.
pub fn s_set(f: &BallFamily, x: usize, y: usize) -> Vec<usize> {
    debug_assert_ne!(x, y);
    let bx = f.ball(x);
    let by = f.ball(y);
    let mut acc = intersect(bx, by);
    for &v in &difference(by, bx) {
        acc = difference(&acc, f.ball(v));
        if acc.is_empty() {
            break;
        }
    }
    remove_one(&mut acc, x);
    acc
}

/// P_{x,y}: the part of B_x ∩ B_y covered by balls centered in S_{x,y}.
pub fn p_set(f: &BallFamily, x: usize, y: usize) -> Vec<usize> {
    let s = s_set(f, x, y);
    let mut covered: Vec<usize> = Vec::new();
    for &v in &s {
        covered = union(&covered, f.ball(v));
    }
    intersect(&intersect(f.ball(x), f.ball(y)), &covered)
}

/// N_{x,y}: the part of B_x ∩ B_y inside every ball centered in P_{x,y},
/// minus {x}. An empty P leaves the ambient intersection untouched.
pub fn n_set(f: &BallFamily, x: usize, y: usize) -> Vec<usize> {
    debug_assert_ne!(x, y);
    let p = p_set(f, x, y);
    let mut acc = intersect(f.ball(x), f.ball(y));
    for &v in &p {
        acc = intersect(&acc, f.ball(v));
        if acc.is_empty() {
            break;
        }
    }
    remove_one(&mut acc, x);
    acc
}

/// Ordered list of the 1..r neighborhoods of the tail tip, recovered from
/// the ball chain of a pendant tail v_0..v_r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailPartition {
    /// `sets[d-1]` is the d-neighborhood of v_0, for d = 1..r.
    pub sets: Vec<Vec<usize>>,
}

/// Extracts the d-neighborhoods of tail[0] for d = 1..r from a tail
/// v_0..v_r whose balls satisfy B_{v_r} = {v_0..v_r} and
/// B_{v_{i+1}} ⊊ B_{v_i}.
pub fn tail_neighborhoods(
    f: &BallFamily,
    tail: &[usize],
) -> Result<TailPartition, TailError> {
    if tail.len() < 2 {
        return Err(TailError::BadLength);
    }
    let r = tail.len() - 1;
    {
        let mut sorted = tail.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != tail.len() {
            return Err(TailError::BadLength);
        }
        if f.ball(tail[r]) != sorted.as_slice() {
            return Err(TailError::TipBallMismatch);
        }
    }
    for i in 0..r {
        let inner = f.ball(tail[i + 1]);
        let outer = f.ball(tail[i]);
        if !is_subset(inner, outer) || inner.len() == outer.len() {
            return Err(TailError::NotNested(i));
        }
    }
    let mut sets = Vec::with_capacity(r);
    for d in 1..=r {
        let diff = difference(f.ball(tail[r - d]), f.ball(tail[r - d + 1]));
        sets.push(union(&diff, &[tail[d]]));
    }
    Ok(TailPartition { sets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn c9_cubed() -> BallFamily {
        balls(&Graph::cycle(9).power(3).unwrap())
    }

    #[test]
    fn balls_examples() {
        let f = balls(&Graph::complete(3));
        assert_eq!(f.ball(0), &[0, 1, 2]);

        let f = c9_cubed();
        assert_eq!(f.ball(0), &[0, 1, 2, 3, 6, 7, 8]);

        let f = balls(&Graph::path(3));
        assert_eq!(f.ball(1), &[0, 1, 2]);
    }

    #[test]
    fn s_set_examples() {
        let f = c9_cubed();
        assert_eq!(s_set(&f, 0, 1), vec![8]);

        let f = balls(&Graph::complete(3));
        assert_eq!(s_set(&f, 0, 1), vec![1, 2]);

        // B_y ⊆ B_x: the union over B_y \ B_x is vacuous.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let f = balls(&g);
        // x = 0 (ball {0,1,2,3}), y = 1 (ball {0,1,2} ⊆ B_0)
        let expected = {
            let mut e = intersect(f.ball(0), f.ball(1));
            e.retain(|&v| v != 0);
            e
        };
        assert_eq!(s_set(&f, 0, 1), expected);
    }

    #[test]
    fn p_set_examples() {
        let f = c9_cubed();
        assert_eq!(p_set(&f, 0, 1), vec![0, 1, 2, 7, 8]);

        let f = balls(&Graph::complete(3));
        assert_eq!(p_set(&f, 0, 1), vec![0, 1, 2]);

        // Empty S forces empty P: two far-apart vertices of a long path.
        let f = balls(&Graph::path(8));
        assert!(s_set(&f, 0, 7).is_empty());
        assert!(p_set(&f, 0, 7).is_empty());
    }

    #[test]
    fn n_set_examples() {
        let f = c9_cubed();
        assert_eq!(n_set(&f, 0, 1), vec![1, 8]);
        assert_eq!(n_set(&f, 3, 4), vec![2, 4]);

        let f = balls(&Graph::cycle(11).power(4).unwrap());
        assert_eq!(n_set(&f, 0, 1), vec![1, 10]);
    }

    #[test]
    fn n_set_matches_root_neighborhood_on_edges() {
        // Theorem check over every edge of small class members.
        for (h, r) in [
            (Graph::cycle(9), 3usize),
            (Graph::cycle(11), 4),
            (Graph::cycle(7), 2),
        ] {
            let g = h.power(r).unwrap();
            let f = balls(&g);
            for (x, y) in h.canonical_edges() {
                let mut expect = h.neighbors(x).to_vec();
                expect.sort_unstable();
                assert_eq!(n_set(&f, x, y), expect, "x={x} y={y}");
                let mut expect_y = h.neighbors(y).to_vec();
                expect_y.sort_unstable();
                assert_eq!(n_set(&f, y, x), expect_y);
            }
        }
    }

    #[test]
    fn set_chain_inclusions() {
        let g = Graph::cycle(9).power(3).unwrap();
        let f = balls(&g);
        for x in 0..9 {
            for y in 0..9 {
                if x == y {
                    continue;
                }
                let s = s_set(&f, x, y);
                let p = p_set(&f, x, y);
                let n = n_set(&f, x, y);
                let bxy = intersect(f.ball(x), f.ball(y));
                assert!(is_subset(&s, &p) || s.iter().all(|v| p.contains(v)));
                assert!(is_subset(&p, &bxy));
                assert!(!s.contains(&x));
                assert!(!n.contains(&x));
            }
        }
    }

    #[test]
    fn tail_path_cubed() {
        let g = Graph::path(8).power(3).unwrap();
        let f = balls(&g);
        let part = tail_neighborhoods(&f, &[4, 5, 6, 7]).unwrap();
        assert_eq!(part.sets, vec![vec![3, 5], vec![2, 6], vec![1, 7]]);
    }

    #[test]
    fn tail_path_squared() {
        let g = Graph::path(6).power(2).unwrap();
        let f = balls(&g);
        let part = tail_neighborhoods(&f, &[3, 4, 5]).unwrap();
        assert_eq!(part.sets, vec![vec![2, 4], vec![1, 5]]);
    }

    #[test]
    fn tail_matches_bfs_layers_in_root() {
        // For tails embedded in verified powers the sets reproduce the
        // exact breadth-first layers of the tip in the root.
        for (root, r, tail) in [
            (Graph::path(9), 3usize, vec![5, 6, 7, 8]),
            (Graph::path(7), 2, vec![4, 5, 6]),
        ] {
            let g = root.power(r).unwrap();
            let f = balls(&g);
            let part = tail_neighborhoods(&f, &tail).unwrap();
            let dist = root.bfs_distances(tail[0]);
            for d in 1..=r {
                let mut layer: Vec<usize> =
                    (0..root.n()).filter(|&v| dist[v] == d).collect();
                layer.sort_unstable();
                assert_eq!(part.sets[d - 1], layer, "d={d}");
            }
        }
    }

    #[test]
    fn tail_hypothesis_violations() {
        let g = Graph::path(8).power(3).unwrap();
        let f = balls(&g);
        // Wrong direction: B_{v_1} ⊄ B_{v_0}.
        assert_eq!(
            tail_neighborhoods(&f, &[7, 6, 5, 4]),
            Err(TailError::TipBallMismatch)
        );
        // Interior start: tip ball is not the tail set.
        assert_eq!(
            tail_neighborhoods(&f, &[3, 4, 5, 6]),
            Err(TailError::TipBallMismatch)
        );
        // Nesting failure with a correct tip ball: complete graph tails
        // have equal balls everywhere.
        let k = balls(&Graph::complete(4));
        assert_eq!(
            tail_neighborhoods(&k, &[0, 1, 2, 3]),
            Err(TailError::NotNested(0))
        );
    }
}
