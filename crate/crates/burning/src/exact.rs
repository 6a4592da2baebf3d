//! Exact burning-number computation for small instances.
//!
//! Feasibility of length `k` is a covering search: position `i` gets a ball
//! of radius `k - i`, positions are assigned largest radius first, and a
//! candidate for a position must cover at least one still-uncovered vertex.
//! That restriction is exhaustive: in any solution, a position covering
//! nothing new can be swapped with a later position that does cover
//! something (its ball only grows at the earlier, larger radius), or
//! replaced by a repeat of an earlier vertex once everything is covered.

use thiserror::Error;

use crate::distance::{apsp, burning_lower_bound, DistanceMatrix};
use crate::graph::Graph;
use crate::sequence::BurningSequence;

/// Resource limits for the exact search.
#[derive(Clone, Copy, Debug)]
pub struct ExactLimits {
    /// Largest accepted vertex count (the representation caps out at 64).
    pub max_n: usize,
    /// Largest sequence length to try before giving up.
    pub max_k: usize,
    /// Search nodes allowed across all feasibility checks.
    pub node_budget: u64,
}

impl Default for ExactLimits {
    fn default() -> ExactLimits {
        ExactLimits {
            max_n: 20,
            max_k: 64,
            node_budget: 10_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub burning_number: u32,
    pub witness: BurningSequence,
    pub nodes_explored: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {n} vertices, above the exact-search limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("node budget exhausted after {nodes} search nodes; result unknown")]
    BudgetExceeded { nodes: u64 },
    #[error("no burning sequence of length <= {max_k} found; result unknown")]
    MaxKExceeded { max_k: usize },
}

/// Signals that the node budget ran out mid-search.
struct Exhausted;

struct Searcher<'a> {
    n: usize,
    k: usize,
    dm: &'a DistanceMatrix,
    /// `balls[r][v]` is the bitmask of vertices within distance `r` of `v`.
    balls: Vec<Vec<u64>>,
    /// `avail[t]` bounds how much positions with radii `0..=t` can cover.
    avail: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl<'a> Searcher<'a> {
    fn new(dm: &'a DistanceMatrix, k: usize, budget: u64) -> Searcher<'a> {
        let n = dm.n();
        assert!(n <= 64, "exact search is limited to 64 vertices");
        let mut balls = Vec::with_capacity(k);
        for r in 0..k {
            let r = r as u32;
            let masks: Vec<u64> = (0..n)
                .map(|v| {
                    let mut mask = 0u64;
                    for (u, &d) in dm.row(v).iter().enumerate() {
                        if d <= r {
                            mask |= 1 << u;
                        }
                    }
                    mask
                })
                .collect();
            balls.push(masks);
        }
        let mut avail = Vec::with_capacity(k);
        let mut acc = 0u64;
        for masks in &balls {
            let best = masks
                .iter()
                .map(|m| u64::from(m.count_ones()))
                .max()
                .unwrap_or(0);
            acc += best;
            avail.push(acc);
        }
        Searcher {
            n,
            k,
            dm,
            balls,
            avail,
            nodes: 0,
            budget,
        }
    }

    /// Lower bound on positions needed for `uncovered`: vertices pairwise
    /// more than `2r` apart cannot share any ball of radius <= `r`.
    fn scattered_count(&self, uncovered: u64, r: u32, cap: usize) -> usize {
        let mut far: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if uncovered & (1 << v) == 0 {
                continue;
            }
            let row = self.dm.row(v);
            if far.iter().all(|&u| row[u] > 2 * r) {
                far.push(v);
                if far.len() > cap {
                    break;
                }
            }
        }
        far.len()
    }

    fn search(
        &mut self,
        pos: usize,
        uncovered: u64,
        chosen: &mut Vec<usize>,
    ) -> Result<bool, Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        if uncovered == 0 {
            return Ok(true);
        }
        if pos > self.k {
            return Ok(false);
        }
        let r = self.k - pos;
        let remaining = self.k - pos + 1;
        if self.avail[r] < u64::from(uncovered.count_ones()) {
            return Ok(false);
        }
        if self.scattered_count(uncovered, r as u32, remaining) > remaining {
            return Ok(false);
        }
        // candidates must cover something new; identical marginal coverage
        // is explored once
        let mut cands: Vec<(u32, usize, u64)> = Vec::new();
        let mut seen: Vec<u64> = Vec::new();
        for v in 0..self.n {
            let gain = self.balls[r][v] & uncovered;
            if gain == 0 || seen.contains(&gain) {
                continue;
            }
            seen.push(gain);
            cands.push((gain.count_ones(), v, gain));
        }
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, v, gain) in cands {
            chosen.push(v);
            if self.search(pos + 1, uncovered & !gain, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    /// Runs the whole length-`k` search from scratch.
    fn run(&mut self) -> Result<Option<BurningSequence>, Exhausted> {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut chosen = Vec::with_capacity(self.k);
        if self.search(1, full, &mut chosen)? {
            // cover achieved early: repeat the first pick to full length
            let first = chosen[0];
            chosen.resize(self.k, first);
            Ok(Some(BurningSequence::new(chosen)))
        } else {
            Ok(None)
        }
    }
}

/// Whether some length-`k` sequence burns `g`; returns a witness if so.
///
/// Exhaustive up to the prunes documented on the searcher. Panics if `g` has
/// more than 64 vertices; use [`burning_number_exact`] for guarded access.
pub fn is_feasible(g: &Graph, dm: &DistanceMatrix, k: usize) -> Option<BurningSequence> {
    assert!(k >= 1, "sequence length must be positive");
    assert_eq!(g.n(), dm.n(), "distance matrix does not match the graph");
    if g.n() == 0 {
        return None; // no vertices to place in a sequence
    }
    let mut searcher = Searcher::new(dm, k, u64::MAX);
    match searcher.run() {
        Ok(result) => result,
        Err(Exhausted) => unreachable!("unlimited budget"),
    }
}

/// Smallest `k` such that a length-`k` sequence burns `g`, with a witness.
///
/// Searches upward from the distance lower bound, then re-checks one length
/// below the answer so minimality is established by the search itself, not
/// by trust in the bound.
pub fn burning_number_exact(g: &Graph, limits: &ExactLimits) -> Result<ExactResult, ExactError> {
    let n = g.n();
    if n == 0 {
        return Err(ExactError::EmptyGraph);
    }
    let limit = limits.max_n.min(64);
    if n > limit {
        return Err(ExactError::TooLarge { n, limit });
    }
    let dm = apsp(g);
    let mut nodes_total: u64 = 0;
    let try_k = |k: usize, nodes_total: &mut u64| -> Result<Option<BurningSequence>, ExactError> {
        let remaining = limits.node_budget.saturating_sub(*nodes_total);
        let mut searcher = Searcher::new(&dm, k, remaining);
        let outcome = searcher.run();
        *nodes_total += searcher.nodes;
        match outcome {
            Ok(result) => Ok(result),
            Err(Exhausted) => Err(ExactError::BudgetExceeded {
                nodes: *nodes_total,
            }),
        }
    };

    let cap = n.min(limits.max_k);
    let mut k = burning_lower_bound(&dm).max(1) as usize;
    let mut witness = loop {
        if k > cap {
            // length n is always feasible, so only max_k can get us here
            return Err(ExactError::MaxKExceeded { max_k: limits.max_k });
        }
        if let Some(w) = try_k(k, &mut nodes_total)? {
            break w;
        }
        k += 1;
    };
    // descend while still feasible; normally one infeasible check at k - 1
    while k > 1 {
        match try_k(k - 1, &mut nodes_total)? {
            Some(w) => {
                witness = w;
                k -= 1;
            }
            None => break,
        }
    }
    Ok(ExactResult {
        burning_number: k as u32,
        witness,
        nodes_explored: nodes_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::sequence::verify;
    use proptest::prelude::*;

    fn exact(g: &Graph) -> ExactResult {
        burning_number_exact(g, &ExactLimits::default()).unwrap()
    }

    #[test]
    fn path9_burns_in_three() {
        let g = generate::path(9).unwrap();
        let dm = apsp(&g);
        let r = exact(&g);
        assert_eq!(r.burning_number, 3);
        assert_eq!(r.witness.len(), 3);
        assert_eq!(verify(&r.witness, &dm), Ok(true));
        assert!(r.nodes_explored > 0);
        assert!(is_feasible(&g, &dm, 2).is_none());
    }

    #[test]
    fn path9_k2_matches_exhaustive_pair_scan() {
        let g = generate::path(9).unwrap();
        let dm = apsp(&g);
        for u in 0..9 {
            for v in 0..9 {
                let s = BurningSequence::new(vec![u, v]);
                assert_eq!(verify(&s, &dm), Ok(false), "({u},{v}) should not burn P9");
            }
        }
    }

    #[test]
    fn known_optimal_witnesses_are_accepted() {
        let g = generate::path(9).unwrap();
        let dm = apsp(&g);
        assert_eq!(verify(&BurningSequence::new(vec![2, 6, 8]), &dm), Ok(true));
        let w = is_feasible(&g, &dm, 3).unwrap();
        assert_eq!(verify(&w, &dm), Ok(true));
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn worked_example_burns_in_three() {
        let g = generate::tight_example();
        let dm = apsp(&g);
        let r = exact(&g);
        assert_eq!(r.burning_number, 3);
        assert_eq!(verify(&r.witness, &dm), Ok(true));
        // the known optimum: center, middle of the path, the isolate
        let s = BurningSequence::parse("C,L,N", &g).unwrap();
        assert_eq!(verify(&s, &dm), Ok(true));
        assert!(is_feasible(&g, &dm, 2).is_none());
    }

    #[test]
    fn complete_graph_burns_in_two() {
        let edges = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)));
        let g = Graph::from_edges(4, edges);
        let dm = apsp(&g);
        assert!(is_feasible(&g, &dm, 1).is_none());
        let r = exact(&g);
        assert_eq!(r.burning_number, 2);
    }

    #[test]
    fn single_vertex_burns_in_one() {
        let g = Graph::from_edges(1, []);
        let dm = apsp(&g);
        let w = is_feasible(&g, &dm, 1).unwrap();
        assert_eq!(w.vertices(), &[0]);
        assert_eq!(exact(&g).burning_number, 1);
    }

    #[test]
    fn early_cover_pads_witness_with_repeats() {
        // P3 with k = 4: radius-3 ball from anywhere covers everything
        let g = generate::path(3).unwrap();
        let dm = apsp(&g);
        let w = is_feasible(&g, &dm, 4).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(verify(&w, &dm), Ok(true));
    }

    #[test]
    fn edgeless_graph_needs_every_vertex() {
        let g = Graph::from_edges(5, []);
        assert_eq!(exact(&g).burning_number, 5);
    }

    #[test]
    fn limits_are_enforced() {
        let g = generate::path(9).unwrap();
        assert_eq!(
            burning_number_exact(&Graph::from_edges(0, []), &ExactLimits::default()),
            Err(ExactError::EmptyGraph)
        );
        let tiny = ExactLimits {
            max_n: 5,
            ..ExactLimits::default()
        };
        assert_eq!(
            burning_number_exact(&g, &tiny),
            Err(ExactError::TooLarge { n: 9, limit: 5 })
        );
        let broke = ExactLimits {
            node_budget: 1,
            ..ExactLimits::default()
        };
        assert!(matches!(
            burning_number_exact(&g, &broke),
            Err(ExactError::BudgetExceeded { .. })
        ));
        let short = ExactLimits {
            max_k: 2,
            ..ExactLimits::default()
        };
        assert_eq!(
            burning_number_exact(&g, &short),
            Err(ExactError::MaxKExceeded { max_k: 2 })
        );
    }

    #[test]
    fn default_limit_is_twenty_vertices() {
        let g = generate::path(21).unwrap();
        assert_eq!(
            burning_number_exact(&g, &ExactLimits::default()),
            Err(ExactError::TooLarge { n: 21, limit: 20 })
        );
        assert!(burning_number_exact(&generate::path(20).unwrap(), &ExactLimits::default()).is_ok());
    }

    /// Zero-pruning brute force: try every vertex tuple of length k.
    fn brute_force(g: &Graph) -> u32 {
        let dm = apsp(g);
        let n = g.n();
        fn rec(dm: &DistanceMatrix, n: usize, k: usize, tuple: &mut Vec<usize>) -> bool {
            if tuple.len() == k {
                let s = BurningSequence::new(tuple.clone());
                return verify(&s, dm).unwrap();
            }
            for v in 0..n {
                tuple.push(v);
                if rec(dm, n, k, tuple) {
                    return true;
                }
                tuple.pop();
            }
            false
        }
        for k in 1..=n {
            if rec(&dm, n, k, &mut Vec::new()) {
                return k as u32;
            }
        }
        unreachable!("length n always burns");
    }

    #[test]
    fn agrees_with_brute_force_on_fixed_small_graphs() {
        let cases: Vec<Graph> = vec![
            generate::path(7).unwrap(),
            generate::path(8).unwrap(),
            Graph::from_edges(8, (0..8).map(|v| (v, (v + 1) % 8))), // cycle
            Graph::from_edges(7, (1..7).map(|v| (0, v))),           // star
            Graph::from_edges(6, [(0, 1), (1, 2), (3, 4)]),         // forest
            generate::grid2d(3, 2).unwrap(),
        ];
        for g in cases {
            assert_eq!(exact(&g).burning_number, brute_force(&g), "{g:?}");
        }
    }

    fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(move |n| {
            prop::collection::vec((0..n, 0..n), 0..2 * max_n)
                .prop_map(move |pairs| Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        /// Pruned search equals the zero-pruning brute force.
        #[test]
        fn agrees_with_brute_force(g in arbitrary_graph(6)) {
            let r = exact(&g);
            prop_assert_eq!(r.burning_number, brute_force(&g));
            let dm = apsp(&g);
            prop_assert_eq!(verify(&r.witness, &dm), Ok(true));
            prop_assert!(is_feasible(&g, &dm, r.burning_number as usize).is_some());
            if r.burning_number > 1 {
                prop_assert!(is_feasible(&g, &dm, r.burning_number as usize - 1).is_none());
            }
        }

        /// Fire cannot jump components, so b is at least the component count.
        #[test]
        fn at_least_the_component_count(g in arbitrary_graph(8)) {
            let parts = crate::graph::connected_components(&g);
            prop_assert!(exact(&g).burning_number >= parts.count as u32);
        }
    }
}
