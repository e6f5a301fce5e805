//! Deterministic rounding of a half-integral LP optimum into an integral
//! cover that pays at most 3/2 on the low-degree region V*.
//!
//! All degree tests use simple degree (loops and parallel edges collapsed).
//! Vertices are scanned in ascending index order in every step, and a vertex
//! becomes *processed* as soon as any step assigns it. The steps:
//!
//! 1. each unprocessed degree-1 vertex takes 0, its neighbor 1;
//! 2. a path `u - v1 - v2 - w` with `deg(u) >= 3` and `v1`, `v2` degree-2
//!    with `x = ½` sets `u, v1, w` to 1 and `v2` to 0;
//! 3. a degree-2, `x = ½` vertex with a neighbor of degree >= 3 takes 0 and
//!    its unprocessed neighbors take 1;
//! 4. the same for every remaining degree-2, `x = ½` vertex;
//! 5. unprocessed `x = ½` vertices take 1, other untouched vertices keep
//!    `x`, and loop vertices are forced to 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{validate_cover, CoverAssignment, SimpleGraph};
use crate::lp::HalfAssignment;

/// The vertex sets the rounding works on, plus the final processed flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundingContext {
    /// Degree-1 vertices and degree-2 vertices with `x = ½`.
    pub l: Vec<bool>,
    /// `L ∪ N(L)`.
    pub vprime: Vec<bool>,
    /// Degree-1 and degree-2 vertices together with their neighbors.
    pub vstar: Vec<bool>,
    pub processed: Vec<bool>,
}

impl RoundingContext {
    pub fn new(g: &SimpleGraph, x: &HalfAssignment) -> Self {
        let n = g.n();
        let l: Vec<bool> = (0..n)
            .map(|v| g.degree(v) == 1 || (g.degree(v) == 2 && x.halves(v) == 1))
            .collect();
        let mut vprime = l.clone();
        for v in (0..n).filter(|&v| l[v]) {
            for &u in g.neighbors(v) {
                vprime[u] = true;
            }
        }
        RoundingContext { l, vprime, vstar: compute_vstar(g), processed: vec![false; n] }
    }
}

/// Degree-1 and degree-2 vertices and all their neighbors.
pub fn compute_vstar(g: &SimpleGraph) -> Vec<bool> {
    let mut vstar = vec![false; g.n()];
    for v in 0..g.n() {
        if matches!(g.degree(v), 1 | 2) {
            vstar[v] = true;
            for &u in g.neighbors(v) {
                vstar[u] = true;
            }
        }
    }
    vstar
}

struct State<'a> {
    g: &'a SimpleGraph,
    x: &'a HalfAssignment,
    y: Vec<bool>,
    processed: Vec<bool>,
}

impl State<'_> {
    fn set(&mut self, v: usize, val: bool) {
        self.y[v] = val;
        self.processed[v] = true;
    }

    fn pending_deg2(&self, v: usize) -> bool {
        !self.processed[v] && self.g.degree(v) == 2 && self.x.halves(v) == 1
    }

    /// Steps 3 and 4: `v` takes 0, unprocessed neighbors take 1. A processed
    /// neighbor must already be 1, otherwise the edge would go uncovered.
    fn settle_deg2(&mut self, v: usize) -> Result<()> {
        let nb = self.g.neighbors(v);
        let (a, b) = (nb[0], nb[1]);
        for w in [a, b] {
            if self.processed[w] && !self.y[w] {
                return Err(Error::Invariant(format!(
                    "vertex {v}: processed neighbor {w} has y = 0"
                )));
            }
        }
        self.set(v, false);
        for w in [a, b] {
            if !self.processed[w] {
                self.set(w, true);
            }
        }
        Ok(())
    }
}

/// Rounds `x` (feasible and LP-optimal on `g`) to an integral cover.
pub fn round(g: &SimpleGraph, x: &HalfAssignment) -> Result<CoverAssignment> {
    round_with_context(g, x).map(|(y, _)| y)
}

/// [`round`], also returning the vertex sets and final processed flags.
pub fn round_with_context(g: &SimpleGraph, x: &HalfAssignment) -> Result<(CoverAssignment, RoundingContext)> {
    x.check_feasible(g)?;
    let n = g.n();
    let mut st = State { g, x, y: vec![false; n], processed: vec![false; n] };

    for v in 0..n {
        if g.degree(v) == 1 && !st.processed[v] {
            let u = g.neighbors(v)[0];
            st.set(v, false);
            st.set(u, true);
        }
    }

    for v1 in 0..n {
        if !st.pending_deg2(v1) {
            continue;
        }
        let nb = g.neighbors(v1);
        for (u, v2) in [(nb[0], nb[1]), (nb[1], nb[0])] {
            if g.degree(u) >= 3 && !st.processed[u] && st.pending_deg2(v2) {
                let nb2 = g.neighbors(v2);
                let w = if nb2[0] == v1 { nb2[1] } else { nb2[0] };
                st.set(u, true);
                st.set(w, true);
                st.set(v1, true);
                st.set(v2, false);
                break;
            }
        }
    }

    for v in 0..n {
        if st.pending_deg2(v) && g.neighbors(v).iter().any(|&u| g.degree(u) >= 3) {
            st.settle_deg2(v)?;
        }
    }

    for v in 0..n {
        if st.pending_deg2(v) {
            st.settle_deg2(v)?;
        }
    }

    for v in 0..n {
        if !st.processed[v] {
            st.y[v] = x.halves(v) >= 1;
        }
    }
    for v in g.loop_vertices() {
        st.y[v] = true;
    }

    let y = CoverAssignment::new(st.y);
    if !validate_cover(g, &y)? {
        return Err(Error::Invariant("rounded assignment is not a vertex cover".into()));
    }
    let mut ctx = RoundingContext::new(g, x);
    ctx.processed = st.processed;
    Ok((y, ctx))
}

/// Cost split between V* and the rest, as exact integer pairs (`y` in
/// vertices, `x` in half-units) plus the derived ratios. A ratio whose
/// denominator is zero is `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioDecomposition {
    pub y_vstar: u64,
    pub x_vstar_halves: u64,
    pub y_rest: u64,
    pub x_rest_halves: u64,
    /// `y(V*) / x(V*)`.
    pub r_vstar: Option<f64>,
    /// `y(V \ V*) / x(V \ V*)`.
    pub r_rest: Option<f64>,
    /// `(3/2)·x(V*)/x(V) + 2·x(V \ V*)/x(V)`, i.e. `2 − ½·x(V*)/x(V)`.
    pub r_composite: Option<f64>,
}

fn ratio(y: u64, x_halves: u64) -> Option<f64> {
    (x_halves > 0).then(|| 2.0 * y as f64 / x_halves as f64)
}

pub fn ratio_decomposition(g: &SimpleGraph, x: &HalfAssignment, y: &CoverAssignment) -> Result<RatioDecomposition> {
    for len in [x.len(), y.len()] {
        if len != g.n() {
            return Err(Error::SizeMismatch { expected: g.n(), found: len });
        }
    }
    let vstar = compute_vstar(g);
    let rest: Vec<bool> = vstar.iter().map(|&b| !b).collect();
    let y_vstar = y.cost_on(&vstar) as u64;
    let y_rest = y.cost_on(&rest) as u64;
    let x_vstar_halves = x.cost_halves_on(&vstar);
    let x_rest_halves = x.cost_halves_on(&rest);
    let total = x_vstar_halves + x_rest_halves;
    let r_composite = (total > 0)
        .then(|| (1.5 * x_vstar_halves as f64 + 2.0 * x_rest_halves as f64) / total as f64);
    Ok(RatioDecomposition {
        y_vstar,
        x_vstar_halves,
        y_rest,
        x_rest_halves,
        r_vstar: ratio(y_vstar, x_vstar_halves),
        r_rest: ratio(y_rest, x_rest_halves),
        r_composite,
    })
}

/// Number of vertices of degree >= 3 adjacent to a degree-1 or degree-2
/// vertex. Every LP optimum has `x(V*)` at least half this count.
pub fn vstar_lower_bound_witness(g: &SimpleGraph) -> usize {
    (0..g.n())
        .filter(|&u| g.degree(u) >= 3 && g.neighbors(u).iter().any(|&v| matches!(g.degree(v), 1 | 2)))
        .count()
}

/// Outcome of checking the rounding guarantees on one instance. All
/// comparisons are in integers: `y` in vertices, `x` in half-units.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GuaranteeCheck {
    pub valid: bool,
    /// Every vertex of V′ with degree >= 3 has `y = 1`.
    pub high_degree_in_vprime_taken: bool,
    /// `2·y(V*) <= 3·x_halves(V*)`.
    pub vstar_halfunit_bound: bool,
    /// `y(V*) <= (3/2)·x(V*)`, i.e. `4·y(V*) <= 3·x_halves(V*)`.
    pub vstar_three_halves: bool,
    /// `y(v) <= 2·x(v)` for every `v` outside V*.
    pub rest_pointwise: bool,
    /// `y(V) <= 2·x(V)`.
    pub global_two: bool,
}

impl GuaranteeCheck {
    pub fn all(&self) -> bool {
        self.valid
            && self.high_degree_in_vprime_taken
            && self.vstar_halfunit_bound
            && self.vstar_three_halves
            && self.rest_pointwise
            && self.global_two
    }
}

pub fn check_guarantees(g: &SimpleGraph, x: &HalfAssignment, y: &CoverAssignment) -> Result<GuaranteeCheck> {
    let valid = validate_cover(g, y)?;
    let ctx = RoundingContext::new(g, x);
    let d = ratio_decomposition(g, x, y)?;
    let n = g.n();
    Ok(GuaranteeCheck {
        valid,
        high_degree_in_vprime_taken: (0..n).all(|v| !ctx.vprime[v] || g.degree(v) < 3 || y.get(v)),
        vstar_halfunit_bound: 2 * d.y_vstar <= 3 * d.x_vstar_halves,
        vstar_three_halves: 4 * d.y_vstar <= 3 * d.x_vstar_halves,
        rest_pointwise: (0..n).all(|v| ctx.vstar[v] || u8::from(y.get(v)) <= x.halves(v)),
        global_two: y.cost() as u64 <= x.cost_halves(),
    })
}
