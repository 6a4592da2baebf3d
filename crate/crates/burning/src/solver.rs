//! Farthest-first burning solvers.
//!
//! All solvers share one selection rule: repeatedly pick the vertex farthest
//! from everything picked so far (unreachable counts as farthest). Kept
//! incremental by folding each new row into a running minimum, so a step
//! costs `O(n)` instead of `O(n |S|)`.

use thiserror::Error;

use crate::distance::DistanceMatrix;
use crate::graph::{Graph, VertexSet};
use crate::sequence::{verify, BurningSequence};
use crate::util::splitmix64;

/// How to resolve ties among equally-far candidates.
///
/// Every policy is a pure function of the candidate set, so solver output is
/// reproducible run to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest vertex id wins.
    LowestId,
    /// Earliest listed vertex wins; falls back to lowest id when no
    /// candidate is listed.
    Preference(Vec<usize>),
    /// Seed-keyed hash of the candidate set picks the winner.
    SeededRandom(u64),
}

impl TieBreak {
    /// Picks one vertex from a non-empty ascending candidate list.
    fn choose(&self, candidates: &[usize]) -> usize {
        debug_assert!(!candidates.is_empty());
        match self {
            TieBreak::LowestId => candidates[0],
            TieBreak::Preference(list) => list
                .iter()
                .copied()
                .find(|p| candidates.binary_search(p).is_ok())
                .unwrap_or(candidates[0]),
            TieBreak::SeededRandom(seed) => {
                let mut state = *seed;
                for &c in candidates {
                    state = splitmix64(state ^ c as u64);
                }
                candidates[(state % candidates.len() as u64) as usize]
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("no vertices selected yet")]
    EmptySelection,
    #[error("sequence length k must be at least 1")]
    ZeroLength,
}

/// Running minimum distance from every vertex to the selected set.
struct FarthestState {
    dist: Vec<u32>, // raw rows: u32::MAX encodes unreachable
}

impl FarthestState {
    fn new(dm: &DistanceMatrix, first: usize) -> FarthestState {
        FarthestState {
            dist: dm.row(first).to_vec(),
        }
    }

    fn absorb(&mut self, dm: &DistanceMatrix, v: usize) {
        for (slot, &d) in self.dist.iter_mut().zip(dm.row(v)) {
            if d < *slot {
                *slot = d;
            }
        }
    }

    /// All vertices attaining the maximum distance, ascending.
    fn candidates(&self) -> Vec<usize> {
        let max = *self.dist.iter().max().expect("non-empty graph");
        (0..self.dist.len())
            .filter(|&v| self.dist[v] == max)
            .collect()
    }
}

/// One farthest-first step: the vertex maximizing distance to `selected`,
/// ties resolved by `tiebreak`.
pub fn farthest_first_step(
    dm: &DistanceMatrix,
    selected: &[usize],
    tiebreak: &TieBreak,
) -> Result<usize, SolveError> {
    let n = dm.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let (&first, rest) = selected.split_first().ok_or(SolveError::EmptySelection)?;
    for &s in selected {
        if s >= n {
            return Err(SolveError::VertexOutOfRange { id: s, n });
        }
    }
    let mut state = FarthestState::new(dm, first);
    for &s in rest {
        state.absorb(dm, s);
    }
    Ok(tiebreak.choose(&state.candidates()))
}

/// Fixed-length greedy: a farthest-first prefix of `k` vertices starting at
/// `start`, padded with repeats of `start` to length `3k - 2`.
///
/// Burns any graph whose burning number is at most `k`; for larger `k` than
/// necessary the output is simply longer, never invalid.
pub fn greedy_known_b(
    dm: &DistanceMatrix,
    k: u32,
    start: usize,
    tiebreak: &TieBreak,
) -> Result<BurningSequence, SolveError> {
    let n = dm.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if start >= n {
        return Err(SolveError::VertexOutOfRange { id: start, n });
    }
    if k == 0 {
        return Err(SolveError::ZeroLength);
    }
    let mut vertices = vec![start];
    let mut state = FarthestState::new(dm, start);
    for _ in 1..k {
        let v = tiebreak.choose(&state.candidates());
        state.absorb(dm, v);
        vertices.push(v);
    }
    vertices.resize(3 * k as usize - 2, start);
    Ok(BurningSequence::new(vertices))
}

/// Outcome of a solver run.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub sequence: BurningSequence,
    pub start_vertex: usize,
    /// Selection rounds performed, which equals the sequence length.
    pub iterations: usize,
    /// Verification result for the produced sequence.
    pub valid: bool,
}

/// Burning greedy permutation: farthest-first selection interleaved with
/// fire spreading, stopping as soon as the graph is fully burned.
///
/// The produced sequence has length at most `3 b(G) - 2`.
pub fn bgp(
    g: &Graph,
    dm: &DistanceMatrix,
    start: usize,
    tiebreak: &TieBreak,
) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if start >= n {
        return Err(SolveError::VertexOutOfRange { id: start, n });
    }
    let mut vertices = vec![start];
    let mut state = FarthestState::new(dm, start);
    let mut burned = VertexSet::new(n);
    burned.insert(start);
    let mut delta = vec![start]; // burned in the latest round
    while !burned.is_full() {
        let v = tiebreak.choose(&state.candidates());
        state.absorb(dm, v);
        vertices.push(v);
        // spread from the latest front, then ignite v
        let mut next_delta = Vec::new();
        for &u in &delta {
            for &w in g.neighbors(u) {
                if burned.insert(w) {
                    next_delta.push(w);
                }
            }
        }
        if burned.insert(v) {
            next_delta.push(v);
        }
        delta = next_delta;
    }
    let sequence = BurningSequence::new(vertices);
    let valid = verify(&sequence, dm).expect("ids are in range");
    Ok(SolveResult {
        iterations: sequence.len(),
        start_vertex: start,
        sequence,
        valid,
    })
}

fn best_of(results: Vec<SolveResult>) -> SolveResult {
    results
        .into_iter()
        .min_by_key(|r| (r.sequence.len(), r.start_vertex))
        .expect("one result per start vertex")
}

/// Best BGP run over every start vertex: shortest sequence wins, with the
/// smallest start id as the deterministic tie-break.
///
/// Runs the starts in parallel when the `parallel` feature is on; the result
/// is identical either way.
pub fn bgp_plus(
    g: &Graph,
    dm: &DistanceMatrix,
    tiebreak: &TieBreak,
) -> Result<SolveResult, SolveError> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if g.n() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        let results: Result<Vec<_>, _> = (0..g.n())
            .into_par_iter()
            .map(|start| bgp(g, dm, start, tiebreak))
            .collect();
        Ok(best_of(results?))
    }
    #[cfg(not(feature = "parallel"))]
    {
        bgp_plus_serial(g, dm, tiebreak)
    }
}

/// Sequential twin of [`bgp_plus`], kept unconditionally for benchmarking
/// the parallel speedup.
pub fn bgp_plus_serial(
    g: &Graph,
    dm: &DistanceMatrix,
    tiebreak: &TieBreak,
) -> Result<SolveResult, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let results: Result<Vec<_>, _> = (0..g.n()).map(|start| bgp(g, dm, start, tiebreak)).collect();
    Ok(best_of(results?))
}
