//! Half-integral optimum of the vertex-cover LP and the Nemhauser–Trotter
//! partition.
//!
//! Values are kept in half-units: `halves(v) ∈ {0, 1, 2}` stands for
//! `x(v) ∈ {0, ½, 1}`, so every cost comparison is exact integer arithmetic.
//!
//! The optimum comes from the doubled bipartite graph: each vertex `v` gets a
//! left copy `v_L` and a right copy `v_R`, each edge `{u, v}` becomes
//! `(u_L, v_R)` and `(v_L, u_R)`, and each loop vertex contributes
//! `(v_L, v_R)`. A minimum vertex cover `C` of that graph (König) yields
//! `halves(v) = [v_L ∈ C] + [v_R ∈ C]`, and the LP value is `|C| / 2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoverAssignment, SimpleGraph};
use crate::matching::{hopcroft_karp, konig_cover};

/// Largest `n` accepted by [`brute_half_lp`].
pub const BRUTE_HALF_LP_MAX_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfAssignment {
    halves: Vec<u8>,
}

impl HalfAssignment {
    /// Wraps raw half-unit values; any value above 2 is rejected.
    pub fn new(halves: Vec<u8>) -> Result<Self> {
        if let Some(v) = halves.iter().position(|&h| h > 2) {
            return Err(Error::InvalidInput(format!(
                "x({v}) = {}/2 is not in {{0, 1/2, 1}}",
                halves[v]
            )));
        }
        Ok(HalfAssignment { halves })
    }

    pub fn len(&self) -> usize {
        self.halves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halves.is_empty()
    }

    pub fn halves(&self, v: usize) -> u8 {
        self.halves[v]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.halves
    }

    pub fn value(&self, v: usize) -> f64 {
        f64::from(self.halves[v]) / 2.0
    }

    /// `Σ halves`; the LP cost is half of this.
    pub fn cost_halves(&self) -> u64 {
        self.halves.iter().map(|&h| u64::from(h)).sum()
    }

    pub fn cost(&self) -> f64 {
        self.cost_halves() as f64 / 2.0
    }

    /// `Σ halves` over the vertices flagged in `mask`.
    pub fn cost_halves_on(&self, mask: &[bool]) -> u64 {
        self.halves
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(&h, _)| u64::from(h))
            .sum()
    }

    /// Checks the LP constraints on `g`: `x(u) + x(v) >= 1` on every edge and
    /// `x(v) >= ½` on every loop vertex.
    pub fn check_feasible(&self, g: &SimpleGraph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::SizeMismatch { expected: g.n(), found: self.len() });
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.halves[u] + self.halves[v] < 2) {
            return Err(Error::Infeasible(format!("edge {{{u},{v}}} has x(u) + x(v) < 1")));
        }
        if let Some(v) = g.loop_vertices().find(|&v| self.halves[v] == 0) {
            return Err(Error::Infeasible(format!("loop vertex {v} has x = 0")));
        }
        Ok(())
    }
}

/// Vertices split by LP value: `p` (x = 1), `q` (x = ½), `r` (x = 0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NtPartition {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
}

/// Optimal half-integral LP solution via maximum matching on the doubled
/// bipartite graph.
pub fn solve_half_integral(g: &SimpleGraph) -> HalfAssignment {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb = g.neighbors(v).to_vec();
            if g.has_loop(v) {
                // neighbors are sorted and never contain v itself
                let pos = nb.partition_point(|&w| w < v);
                nb.insert(pos, v);
            }
            nb
        })
        .collect();
    let m = hopcroft_karp(&adj, n);
    let (left, right) = konig_cover(&adj, n, &m);
    let halves = (0..n).map(|v| u8::from(left[v]) + u8::from(right[v])).collect();
    HalfAssignment { halves }
}

/// Size of the maximum matching in the doubled bipartite graph. Equal to the
/// optimal `cost_halves` by König's theorem.
pub fn doubled_matching_size(g: &SimpleGraph) -> usize {
    let adj: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut nb = g.neighbors(v).to_vec();
            if g.has_loop(v) {
                nb.push(v);
            }
            nb
        })
        .collect();
    hopcroft_karp(&adj, g.n()).size
}

/// Splits vertices into P/Q/R. Rejects assignments that are infeasible on
/// `g`; feasibility alone puts every neighbor of an R vertex into P.
pub fn nt_partition(g: &SimpleGraph, x: &HalfAssignment) -> Result<NtPartition> {
    x.check_feasible(g)?;
    let mut part = NtPartition { p: Vec::new(), q: Vec::new(), r: Vec::new() };
    for v in 0..x.len() {
        match x.halves(v) {
            2 => part.p.push(v),
            1 => part.q.push(v),
            _ => part.r.push(v),
        }
    }
    Ok(part)
}

/// `y(v) = 1` iff `x(v) >= ½`.
pub fn two_approx_cover(x: &HalfAssignment) -> CoverAssignment {
    CoverAssignment::new(x.as_slice().iter().map(|&h| h >= 1).collect())
}

/// Exhaustive minimum over `{0, ½, 1}^n`. Search is a depth-first
/// enumeration in vertex order that discards a partial assignment as soon as
/// an edge between assigned vertices is violated or its cost already reaches
/// the best found; every feasible assignment is otherwise visited.
pub fn brute_half_lp(g: &SimpleGraph) -> Result<HalfAssignment> {
    let n = g.n();
    if n > BRUTE_HALF_LP_MAX_N {
        return Err(Error::TooLarge { n, limit: BRUTE_HALF_LP_MAX_N });
    }
    struct Search<'a> {
        g: &'a SimpleGraph,
        cur: Vec<u8>,
        best: Vec<u8>,
        best_cost: u64,
    }
    impl Search<'_> {
        fn go(&mut self, v: usize, cost: u64) {
            if cost >= self.best_cost {
                return;
            }
            if v == self.g.n() {
                self.best_cost = cost;
                self.best.clone_from(&self.cur);
                return;
            }
            let lo = u8::from(self.g.has_loop(v));
            for h in lo..=2u8 {
                let ok = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| w < v)
                    .all(|&w| self.cur[w] + h >= 2);
                if ok {
                    self.cur[v] = h;
                    self.go(v + 1, cost + u64::from(h));
                }
            }
            self.cur[v] = 0;
        }
    }
    let mut s = Search { g, cur: vec![0; n], best: vec![2; n], best_cost: 2 * n as u64 + 1 };
    s.go(0, 0);
    Ok(HalfAssignment { halves: s.best })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub(crate) fn petersen() -> SimpleGraph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        graph(10, &e)
    }

    /// All 3^n assignments, no pruning.
    fn enumerate_min(g: &SimpleGraph) -> u64 {
        let n = g.n() as u32;
        let mut best = u64::MAX;
        for code in 0..3u64.pow(n) {
            let mut c = code;
            let h: Vec<u8> = (0..n)
                .map(|_| {
                    let d = (c % 3) as u8;
                    c /= 3;
                    d
                })
                .collect();
            let x = HalfAssignment::new(h).unwrap();
            if x.check_feasible(g).is_ok() {
                best = best.min(x.cost_halves());
            }
        }
        best
    }

    #[test]
    fn named_graphs() {
        let k2 = graph(2, &[(0, 1)]);
        assert_eq!(solve_half_integral(&k2).cost_halves(), 2);
        let k3 = cycle(3);
        let x = solve_half_integral(&k3);
        assert_eq!(x.cost_halves(), 3);
        assert_eq!(x.as_slice(), &[1, 1, 1]);
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let x = solve_half_integral(&star);
        assert_eq!(x.as_slice(), &[2, 0, 0, 0]);
        assert_eq!(enumerate_min(&star), 2);
    }

    #[test]
    fn brute_force_named_graphs() {
        assert_eq!(brute_half_lp(&graph(3, &[(0, 1), (1, 2)])).unwrap().cost_halves(), 2);
        assert_eq!(brute_half_lp(&cycle(5)).unwrap().cost_halves(), 5);
        let p = petersen();
        assert_eq!(enumerate_min(&p), 10);
        assert_eq!(brute_half_lp(&p).unwrap().cost_halves(), 10);
        assert_eq!(solve_half_integral(&p).cost_halves(), 10);
    }

    #[test]
    fn brute_force_rejects_large_graphs() {
        let g = cycle(15);
        assert!(matches!(brute_half_lp(&g), Err(Error::TooLarge { n: 15, .. })));
    }

    #[test]
    fn empty_graph_is_all_zero() {
        let g = graph(3, &[]);
        assert_eq!(solve_half_integral(&g).as_slice(), &[0, 0, 0]);
    }

    #[test]
    fn loops_force_at_least_half() {
        let g = graph(2, &[(0, 0)]);
        let x = solve_half_integral(&g);
        assert_eq!(x.as_slice(), &[1, 0]);
        assert_eq!(brute_half_lp(&g).unwrap().cost_halves(), 1);
    }

    #[test]
    fn partitions() {
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let part = nt_partition(&star, &solve_half_integral(&star)).unwrap();
        assert_eq!(part, NtPartition { p: vec![0], q: vec![], r: vec![1, 2, 3] });

        let k3 = cycle(3);
        let part = nt_partition(&k3, &solve_half_integral(&k3)).unwrap();
        assert_eq!(part, NtPartition { p: vec![], q: vec![0, 1, 2], r: vec![] });

        let k2 = graph(2, &[(0, 1)]);
        let x = HalfAssignment::new(vec![2, 0]).unwrap();
        assert_eq!(nt_partition(&k2, &x).unwrap(), NtPartition { p: vec![0], q: vec![], r: vec![1] });
    }

    #[test]
    fn partition_rejects_infeasible() {
        let k2 = graph(2, &[(0, 1)]);
        let x = HalfAssignment::new(vec![1, 0]).unwrap();
        assert!(matches!(nt_partition(&k2, &x), Err(Error::Infeasible(_))));
        assert!(HalfAssignment::new(vec![3]).is_err());
    }

    #[test]
    fn two_approximation() {
        let k3 = cycle(3);
        let y = two_approx_cover(&solve_half_integral(&k3));
        assert_eq!(y.cost(), 3);
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let y = two_approx_cover(&solve_half_integral(&star));
        assert_eq!(y.vertices(), vec![0]);
        let y = two_approx_cover(&HalfAssignment::new(vec![2, 0, 2, 0]).unwrap());
        assert!(crate::graph::validate_cover(&cycle(4), &y).unwrap());
        assert_eq!(y.cost(), 2);
    }
}
