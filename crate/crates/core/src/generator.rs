//! Sampling from M(alpha, beta) by uniformly matching vertex copies.
//!
//! Every vertex of target degree `d` contributes `d` copies, laid out
//! vertex-major. The copy list is shuffled with Fisher–Yates driven by a
//! ChaCha8 stream seeded from the 64-bit seed, and consecutive entries are
//! paired. Each pair becomes one multigraph edge, so loops and parallel edges
//! occur exactly as the model prescribes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::degree::{build_degree_sequence, DegreeSequence, PlgParams};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenSeed(pub u64);

impl From<u64> for GenSeed {
    fn from(s: u64) -> Self {
        GenSeed(s)
    }
}

fn shuffle<T>(items: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = rng.random_range(0..=i);
        items.swap(i, j);
    }
}

/// Perfect matching on copy indices `0..D`. Copy `c` belongs to the vertex
/// found by walking the vertex-major layout of `seq`.
pub fn random_copy_matching(seq: &DegreeSequence, seed: GenSeed) -> Result<Vec<(usize, usize)>> {
    let total = seq.total_degree();
    if !total.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("total degree {total} is odd")));
    }
    let mut copies: Vec<usize> = (0..total as usize).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    shuffle(&mut copies, &mut rng);
    Ok(copies.chunks_exact(2).map(|p| (p[0], p[1])).collect())
}

pub fn generate(seq: &DegreeSequence, seed: GenSeed) -> Result<MultiGraph> {
    let degrees = seq.vertex_degrees();
    let owner: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect();
    let pairs = random_copy_matching(seq, seed)?;
    MultiGraph::from_edges(degrees.len(), pairs.into_iter().map(|(a, b)| (owner[a], owner[b])))
}

/// One graph per seed over the same degree sequence, in seed order.
pub fn generate_batch(p: &PlgParams, seeds: &[GenSeed]) -> Result<Vec<MultiGraph>> {
    let seq = build_degree_sequence(p);
    seeds.par_iter().map(|&s| generate(&seq, s)).collect()
}
