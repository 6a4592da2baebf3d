//! All-pairs hop distances and the queries solvers need on top of them.

use std::fmt;
use std::ops::Add;

use thiserror::Error;

use crate::graph::Graph;

/// Hop distance between vertices; unreachable pairs are explicit, not a
/// magic large number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Unreachable,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Unreachable => None,
        }
    }
}

impl Add for Dist {
    type Output = Dist;

    /// Path concatenation: any unreachable leg makes the whole unreachable.
    fn add(self, rhs: Dist) -> Dist {
        match (self, rhs) {
            (Dist::Finite(a), Dist::Finite(b)) => Dist::Finite(a.saturating_add(b)),
            _ => Dist::Unreachable,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Unreachable => write!(f, "inf"),
        }
    }
}

const UNREACHED: u32 = u32::MAX;

/// Dense symmetric matrix of hop distances, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Dist {
        assert!(u < self.n && v < self.n, "vertex out of range");
        match self.d[u * self.n + v] {
            UNREACHED => Dist::Unreachable,
            d => Dist::Finite(d),
        }
    }

    /// Raw row of `u`; unreachable entries hold `u32::MAX`, which compares
    /// greater than every real distance.
    pub(crate) fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// One line per source, `inf` for unreachable pairs.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|v| self.get(u, v).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DistanceMatrix(n={})", self.n)
    }
}

fn bfs_row(g: &Graph, src: usize, row: &mut [u32]) {
    row.fill(UNREACHED);
    row[src] = 0;
    let mut frontier = vec![src];
    let mut next = Vec::new();
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if row[w] == UNREACHED {
                    row[w] = depth;
                    next.push(w);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
}

/// All-pairs distances via one BFS per source, `O(n (n + m))` total.
///
/// Runs the sources in parallel when the `parallel` feature is on; the result
/// is identical either way.
pub fn apsp(g: &Graph) -> DistanceMatrix {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let n = g.n();
        let mut d = vec![UNREACHED; n * n];
        d.par_chunks_mut(n.max(1))
            .enumerate()
            .for_each(|(src, row)| bfs_row(g, src, row));
        DistanceMatrix { n, d }
    }
    #[cfg(not(feature = "parallel"))]
    {
        apsp_serial(g)
    }
}

/// Sequential twin of [`apsp`], kept unconditionally for benchmarking the
/// parallel speedup.
pub fn apsp_serial(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHED; n * n];
    for (src, row) in d.chunks_mut(n.max(1)).enumerate() {
        bfs_row(g, src, row);
    }
    DistanceMatrix { n, d }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DistanceError {
    #[error("distance to an empty set is undefined")]
    EmptySet,
}

/// Distance from `v` to the nearest vertex of `set`.
pub fn distance_to_set(dm: &DistanceMatrix, v: usize, set: &[usize]) -> Result<Dist, DistanceError> {
    if set.is_empty() {
        return Err(DistanceError::EmptySet);
    }
    Ok(set
        .iter()
        .map(|&s| dm.get(v, s))
        .min()
        .expect("set is non-empty"))
}

/// A lower bound on the burning number.
///
/// Two sound bounds combined: the component count (each component needs its
/// own fire), and the smallest `k` such that the `k` largest neighborhood
/// balls of radii `k-1, ..., 0` can cover all `n` vertices.
pub fn burning_lower_bound(dm: &DistanceMatrix) -> u32 {
    let n = dm.n();
    if n == 0 {
        return 0;
    }
    // component count from reachability, which is transitive
    let mut assigned = vec![false; n];
    let mut components = 0u32;
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        components += 1;
        for (u, &d) in dm.row(v).iter().enumerate().skip(v) {
            if d != UNREACHED {
                assigned[u] = true;
            }
        }
    }

    // max_ball[r] = largest |N_r[v]| over all v, saturating at the biggest
    // component size once r reaches the diameter
    let mut max_ball: Vec<u64> = Vec::new();
    for v in 0..n {
        let mut hist = vec![0u64; 1];
        for &d in dm.row(v) {
            if d == UNREACHED {
                continue;
            }
            let d = d as usize;
            if hist.len() <= d {
                hist.resize(d + 1, 0);
            }
            hist[d] += 1;
        }
        let mut acc = 0;
        for (r, count) in hist.iter().enumerate() {
            acc += count;
            if max_ball.len() <= r {
                max_ball.resize(r + 1, 0);
            }
            max_ball[r] = max_ball[r].max(acc);
        }
    }
    let cap = *max_ball.last().expect("n > 0");

    let mut k = 0u32;
    let mut covered = 0u64;
    while covered < n as u64 {
        let r = k as usize;
        covered += max_ball.get(r).copied().unwrap_or(cap);
        k += 1;
    }
    k.max(components)
}
