//! Exact minimum vertex cover for desk-scale instances.
//!
//! Depth-first branch and bound on an explicit stack. Each node first
//! applies the reductions (loop vertex: take it; degree 0: drop it; degree 1:
//! take its neighbor), then prunes with the half-integral LP bound on what
//! remains, then branches on the lowest-index vertex of maximum remaining
//! degree: take it, or take all of its neighbors. The incumbent starts as the
//! LP 2-approximation, so a timed-out search still returns a valid cover.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoverAssignment, SimpleGraph};
use crate::lp::{doubled_matching_size, solve_half_integral, two_approx_cover};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const BRUTE_VC_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub opt_size: usize,
    /// Sorted vertex list of the best cover found.
    pub cover: Vec<usize>,
    pub nodes_explored: u64,
    /// The node budget ran out; `opt_size` is then only an upper bound.
    pub timed_out: bool,
}

impl ExactResult {
    pub fn assignment(&self, n: usize) -> CoverAssignment {
        CoverAssignment::from_set(n, self.cover.iter().copied())
    }
}

struct Node {
    alive: Vec<bool>,
    taken: Vec<usize>,
}

/// Applies the reductions to exhaustion.
fn reduce(g: &SimpleGraph, node: &mut Node) {
    let alive = &mut node.alive;
    let mut deg: Vec<usize> = (0..g.n())
        .map(|v| if alive[v] { g.neighbors(v).iter().filter(|&&w| alive[w]).count() } else { 0 })
        .collect();
    let mut queue: Vec<usize> = (0..g.n()).rev().filter(|&v| alive[v]).collect();
    let take = |v: usize, alive: &mut Vec<bool>, deg: &mut Vec<usize>, queue: &mut Vec<usize>, taken: &mut Vec<usize>| {
        alive[v] = false;
        taken.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                queue.push(w);
            }
        }
    };
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        if g.has_loop(v) {
            take(v, alive, &mut deg, &mut queue, &mut node.taken);
        } else if deg[v] == 0 {
            alive[v] = false;
        } else if deg[v] == 1 {
            let u = *g.neighbors(v).iter().find(|&&w| alive[w]).expect("degree is 1");
            take(u, alive, &mut deg, &mut queue, &mut node.taken);
        }
    }
}

fn remaining_lp_halves(g: &SimpleGraph, alive: &[bool]) -> usize {
    let (sub, _) = g.induced(alive);
    doubled_matching_size(&sub)
}

/// Exact minimum vertex cover of `g` (loop vertices included), exploring at
/// most `budget` search nodes.
pub fn exact_vc(g: &SimpleGraph, budget: u64) -> ExactResult {
    let n = g.n();
    let mut best: Vec<usize> = two_approx_cover(&solve_half_integral(g)).vertices();
    let mut nodes = 0u64;
    let mut timed_out = false;
    let mut stack = vec![Node { alive: vec![true; n], taken: Vec::new() }];

    while let Some(mut node) = stack.pop() {
        if nodes >= budget {
            timed_out = true;
            break;
        }
        nodes += 1;
        reduce(g, &mut node);
        let alive_count = node.alive.iter().filter(|&&a| a).count();
        if alive_count == 0 {
            if node.taken.len() < best.len() {
                best = node.taken;
            }
            continue;
        }
        let lb = node.taken.len() + remaining_lp_halves(g, &node.alive).div_ceil(2);
        if lb >= best.len() {
            continue;
        }
        let deg = |v: usize| g.neighbors(v).iter().filter(|&&w| node.alive[w]).count();
        let v = (0..n)
            .filter(|&v| node.alive[v])
            .max_by(|&a, &b| deg(a).cmp(&deg(b)).then(b.cmp(&a)))
            .expect("some vertex is alive");

        let mut without = Node { alive: node.alive.clone(), taken: node.taken.clone() };
        without.alive[v] = false;
        for &w in g.neighbors(v) {
            if without.alive[w] {
                without.alive[w] = false;
                without.taken.push(w);
            }
        }
        let mut with = node;
        with.alive[v] = false;
        with.taken.push(v);
        // Pushed last, popped first: "take v" is explored before "take N(v)".
        stack.push(without);
        stack.push(with);
    }

    best.sort_unstable();
    ExactResult { opt_size: best.len(), cover: best, nodes_explored: nodes, timed_out }
}

/// Minimum cover size by enumerating every subset. Only for `n <= 20`.
pub fn brute_vc(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n > BRUTE_VC_MAX_N {
        return Err(Error::TooLarge { n, limit: BRUTE_VC_MAX_N });
    }
    let nb: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let forced: u32 = g.loop_vertices().fold(0, |m, v| m | (1 << v));
    let mut best = n;
    for set in 0u32..(1u32 << n) {
        let size = set.count_ones() as usize;
        if size >= best || set & forced != forced {
            continue;
        }
        // Every vertex outside the set needs all its neighbors inside.
        if (0..n).all(|v| set >> v & 1 == 1 || nb[v] & !set == 0) {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_cover;
    use crate::lp::nt_partition;
    use crate::rounding::round;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn petersen() -> SimpleGraph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        SimpleGraph::from_edges(10, e).unwrap()
    }

    fn k(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn check(g: &SimpleGraph, expected: usize) {
        let r = exact_vc(g, DEFAULT_BUDGET);
        assert!(!r.timed_out);
        assert_eq!(r.opt_size, expected);
        assert!(validate_cover(g, &r.assignment(g.n())).unwrap());
        assert_eq!(brute_vc(g).unwrap(), expected);
    }

    #[test]
    fn named_graphs() {
        check(&cycle(3), 2);
        check(&graph(4, &[(0, 1), (1, 2), (2, 3)]), 2);
        check(&petersen(), 6);
        check(&k(4), 3);
        check(&cycle(6), 3);
        check(&graph(5, &[]), 0);
        check(&SimpleGraph::from_edges(3, [(1, 1), (0, 1), (1, 2)]).unwrap(), 1);
        check(&SimpleGraph::from_edges(2, [(0, 0), (1, 1)]).unwrap(), 2);
    }

    #[test]
    fn p4_cover_has_two_vertices() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let r = exact_vc(&g, DEFAULT_BUDGET);
        assert_eq!(r.cover.len(), 2);
        assert!(validate_cover(&g, &r.assignment(4)).unwrap());
    }

    #[test]
    fn petersen_brute_over_all_subsets() {
        // Independent check: no 5-subset of the Petersen graph is a cover.
        let g = petersen();
        let edges: Vec<_> = g.edges().collect();
        let covers = |set: u32| edges.iter().all(|&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1);
        assert!(!(0u32..1 << 10).any(|s| s.count_ones() == 5 && covers(s)));
        assert!((0u32..1 << 10).any(|s| s.count_ones() == 6 && covers(s)));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = k(12);
        let r = exact_vc(&g, 1);
        assert!(r.timed_out);
        assert_eq!(r.nodes_explored, 1);
        assert!(validate_cover(&g, &r.assignment(12)).unwrap());
        assert!(r.opt_size >= 11);
    }

    #[test]
    fn brute_rejects_large() {
        assert!(matches!(brute_vc(&graph(21, &[])), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn node_count_is_deterministic() {
        let g = petersen();
        assert_eq!(exact_vc(&g, DEFAULT_BUDGET), exact_vc(&g, DEFAULT_BUDGET));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..=3 * n)
                .prop_map(move |e| SimpleGraph::from_edges(n, e).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn matches_brute_force(g in arb_graph(16)) {
            let r = exact_vc(&g, DEFAULT_BUDGET);
            prop_assert!(!r.timed_out);
            prop_assert_eq!(r.opt_size, brute_vc(&g).unwrap());
            prop_assert!(validate_cover(&g, &r.assignment(g.n())).unwrap());
        }

        #[test]
        fn lp_sandwich(g in arb_graph(16)) {
            let x = solve_half_integral(&g);
            let y = round(&g, &x).unwrap();
            let opt = exact_vc(&g, DEFAULT_BUDGET).opt_size as u64;
            prop_assert!(x.cost_halves() <= 2 * opt);
            prop_assert!(opt <= y.cost() as u64);
        }

        #[test]
        fn nt_consistency(g in arb_graph(16)) {
            let x = solve_half_integral(&g);
            let part = nt_partition(&g, &x).unwrap();
            let mut keep = vec![false; g.n()];
            for &v in &part.q {
                keep[v] = true;
            }
            let (sub, _) = g.induced(&keep);
            let opt = exact_vc(&g, DEFAULT_BUDGET).opt_size;
            prop_assert_eq!(opt, part.p.len() + exact_vc(&sub, DEFAULT_BUDGET).opt_size);
        }
    }
}
