//! Seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::HarnessError;

/// Attempts allowed before rejection sampling gives up.
pub const RETRY_BUDGET: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_args(n: usize, p: f64) -> Result<(), HarnessError> {
    if n == 0 || n > 64 {
        return Err(HarnessError::BadOrder(n));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(HarnessError::BadProbability(p));
    }
    Ok(())
}

/// `G(n, p)`, drawn from `rng`.
pub fn random_graph_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Result<Graph, HarnessError> {
    check_args(n, p)?;
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// `G(n, p)` conditioned on connectivity, by rejection sampling.
pub fn random_connected_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Result<Graph, HarnessError> {
    check_args(n, p)?;
    for _ in 0..RETRY_BUDGET {
        let g = random_graph_with(rng, n, p)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(HarnessError::RetryBudget { n, p })
}

pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, HarnessError> {
    random_connected_with(&mut rng(seed), n, p)
}

/// A connected graph with maximum degree at most `max_degree`: a random
/// tree grown within the cap, plus each remaining admissible pair with
/// probability `extra`.
pub fn random_bounded_degree_with(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_degree: usize,
    extra: f64,
) -> Result<Graph, HarnessError> {
    check_args(n, 1.0)?;
    if max_degree < 2 && n > 2 {
        return Err(HarnessError::BadDegree(max_degree));
    }
    let mut g = Graph::new(n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let open: Vec<usize> = order[..i].iter().copied().filter(|&v| g.degree(v) < max_degree).collect();
        let &parent = open.choose(rng).expect("a tree with cap >= 2 always has an open vertex");
        g.add_edge(parent, order[i])?;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && g.degree(u) < max_degree && g.degree(v) < max_degree && rng.gen_bool(extra) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}
