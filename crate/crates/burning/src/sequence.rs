//! Burning sequences: coverage semantics, round simulation, verification.
//!
//! A sequence `(s_1, ..., s_k)` burns a graph if every vertex lies within
//! distance `k - i` of some `s_i`. Two equivalent readings are implemented
//! deliberately: [`covered_set`] takes the ball-union view directly, while
//! [`simulate`] spreads fire round by round. They must always agree on
//! whether a graph ends up fully burned; tests lean on that redundancy.

use std::collections::HashMap;

use thiserror::Error;

use crate::distance::DistanceMatrix;
use crate::graph::{Graph, VertexSet};

/// An ordered burning sequence; vertices may repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurningSequence {
    vertices: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("vertex {0} does not occur in the sequence")]
    NotInSequence(usize),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("empty vertex token")]
    EmptyToken,
}

impl BurningSequence {
    pub fn new(vertices: Vec<usize>) -> BurningSequence {
        BurningSequence { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn push(&mut self, v: usize) {
        self.vertices.push(v);
    }

    /// Parses a comma-separated sequence; each token is a vertex label of
    /// `g` or, failing that, a numeric id.
    pub fn parse(text: &str, g: &Graph) -> Result<BurningSequence, SequenceError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(BurningSequence::new(Vec::new()));
        }
        let mut vertices = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(SequenceError::EmptyToken);
            }
            let v = match g.vertex_by_label(token) {
                Some(v) => v,
                None => token
                    .parse::<usize>()
                    .map_err(|_| SequenceError::UnknownVertex(token.to_string()))?,
            };
            if v >= g.n() {
                return Err(SequenceError::VertexOutOfRange { id: v, n: g.n() });
            }
            vertices.push(v);
        }
        Ok(BurningSequence::new(vertices))
    }

    /// Comma-separated rendering using the graph's vertex names.
    pub fn display(&self, g: &Graph) -> String {
        self.vertices
            .iter()
            .map(|&v| g.vertex_name(v))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Covering radius of `v`: `k` minus its earliest (1-based) position.
    pub fn covering_radius(&self, v: usize) -> Result<u32, SequenceError> {
        let pos = self
            .vertices
            .iter()
            .position(|&s| s == v)
            .ok_or(SequenceError::NotInSequence(v))?;
        Ok((self.len() - (pos + 1)) as u32)
    }
}

impl FromIterator<usize> for BurningSequence {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> BurningSequence {
        BurningSequence::new(iter.into_iter().collect())
    }
}

/// 1-based positions of every vertex occurring in a sequence.
#[derive(Clone, Debug, Default)]
pub struct PositionSet {
    by_vertex: HashMap<usize, Vec<usize>>,
}

impl PositionSet {
    pub fn of(seq: &BurningSequence) -> PositionSet {
        let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, &v) in seq.vertices().iter().enumerate() {
            by_vertex.entry(v).or_default().push(i + 1);
        }
        PositionSet { by_vertex }
    }

    /// Positions of `v` in ascending order; empty if absent.
    pub fn positions(&self, v: usize) -> &[usize] {
        self.by_vertex.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn min_position(&self, v: usize) -> Option<usize> {
        self.positions(v).first().copied()
    }
}

/// Vertices within distance `k - i` of some `s_i`, the ball-union reading.
pub fn covered_set(
    seq: &BurningSequence,
    dm: &DistanceMatrix,
) -> Result<VertexSet, SequenceError> {
    let n = dm.n();
    let k = seq.len();
    assert!(k < u32::MAX as usize, "sequence unreasonably long");
    let mut covered = VertexSet::new(n);
    for (i, &s) in seq.vertices().iter().enumerate() {
        if s >= n {
            return Err(SequenceError::VertexOutOfRange { id: s, n });
        }
        let radius = (k - 1 - i) as u32;
        for (v, &d) in dm.row(s).iter().enumerate() {
            if d <= radius {
                covered.insert(v);
            }
        }
    }
    Ok(covered)
}

/// Whether the sequence burns the whole graph.
///
/// The empty graph is vacuously burned by any sequence, empty included.
pub fn verify(seq: &BurningSequence, dm: &DistanceMatrix) -> Result<bool, SequenceError> {
    if dm.n() == 0 {
        return Ok(true);
    }
    Ok(covered_set(seq, dm)?.is_full())
}

/// Burn front after a simulation: the sets before and after the last round.
#[derive(Clone, Debug)]
pub struct BurnState {
    pub burned_prev: VertexSet,
    pub burned_curr: VertexSet,
    pub round: usize,
}

/// Burned set after each round of fire spreading.
///
/// Round 1 ignites `s_1`; round `i` spreads fire from every vertex burned in
/// round `i - 1` to its neighbors, then ignites `s_i`.
pub fn simulate_rounds(
    seq: &BurningSequence,
    g: &Graph,
) -> Result<Vec<VertexSet>, SequenceError> {
    let n = g.n();
    for &s in seq.vertices() {
        if s >= n {
            return Err(SequenceError::VertexOutOfRange { id: s, n });
        }
    }
    let mut rounds = Vec::with_capacity(seq.len());
    let mut curr = VertexSet::new(n);
    let mut delta: Vec<usize> = Vec::new(); // burned last round: curr \ prev
    for (i, &s) in seq.vertices().iter().enumerate() {
        if i == 0 {
            curr.insert(s);
            delta.push(s);
        } else {
            let mut next_delta = Vec::new();
            for &u in &delta {
                for &w in g.neighbors(u) {
                    if curr.insert(w) {
                        next_delta.push(w);
                    }
                }
            }
            if curr.insert(s) {
                next_delta.push(s);
            }
            delta = next_delta;
        }
        rounds.push(curr.clone());
    }
    Ok(rounds)
}

/// Runs the full simulation; returns the final state and whether the graph
/// ended fully burned. Agrees with [`verify`] on every sequence.
pub fn simulate(seq: &BurningSequence, g: &Graph) -> Result<(BurnState, bool), SequenceError> {
    let rounds = simulate_rounds(seq, g)?;
    let k = rounds.len();
    let burned_curr = match rounds.last() {
        Some(last) => last.clone(),
        None => VertexSet::new(g.n()),
    };
    let burned_prev = if k >= 2 {
        rounds[k - 2].clone()
    } else {
        VertexSet::new(g.n())
    };
    let fully = burned_curr.is_full();
    Ok((
        BurnState {
            burned_prev,
            burned_curr,
            round: k,
        },
        fully,
    ))
}
