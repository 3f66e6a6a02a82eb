//! Constructive search for [2,2s]-factors in squares.
//!
//! [`oracle`] is an exhaustive ground-truth search over edge subsets. The
//! remaining submodules build factors inductively: Hamiltonian cycles of
//! squares with incidence constraints, minimum path covers, trail
//! extraction from factors of `(H x P)^2`, and the two top-level solvers.

mod condition;
mod extract;
mod hamilton;
mod oracle;
mod path_cover;
mod star_free;

pub use condition::solve_condition;
pub use extract::{lemma4_extract, lemma5_extract, ComponentSplit, OutcomeKind, TrailOutcome};
pub use hamilton::{
    block_double_path_cover, check_fleischner, fleischner_cycle, hamiltonian_cycle, HAMILTON_MAX_VERTICES,
};
pub use oracle::{oracle_factor, oracle_square_factor, ORACLE_MAX_VERTICES};
pub use path_cover::{path_cover, PATH_COVER_MAX_VERTICES};
pub use star_free::solve_star_free;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::pattern::{is_star_free, PatternError, StarEmbedding};
use crate::trails::{EdgeSet, EvenFactor, TrailError, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("s must be at least 1")]
    InvalidS,
    #[error("graph has {0} vertices, at least 3 are required")]
    TooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, the limit for this search is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph contains an induced subdivided star: {0}")]
    NotStarFree(StarEmbedding),
    #[error("block condition violated by {0}")]
    HypothesisViolated(StarEmbedding),
    #[error("reduced instance violates the block condition: {0}")]
    ReducedInstanceViolation(StarEmbedding),
    #[error("factor does not live on the expected host graph")]
    HostMismatch,
    #[error("input is not a [2,2s]-factor: {0}")]
    InvalidFactor(VerificationReport),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Trail(#[from] TrailError),
}

impl From<PatternError> for SolveError {
    fn from(e: PatternError) -> Self {
        match e {
            PatternError::InvalidS => SolveError::InvalidS,
            PatternError::Disconnected => SolveError::Disconnected,
        }
    }
}

fn internal(msg: impl Into<String>) -> SolveError {
    SolveError::Internal(msg.into())
}

/// Depth guard for the inductive solvers; every recursive instance is
/// strictly smaller, so this only trips on a bug.
const MAX_DEPTH: usize = 64;

fn check_input(g: &Graph, s: usize) -> Result<(), SolveError> {
    if s < 1 {
        return Err(SolveError::InvalidS);
    }
    if g.vertex_count() < 3 {
        return Err(SolveError::TooSmall(g.vertex_count()));
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(())
}

/// Final gate: the returned factor must verify against `g^2`.
fn verified(g: &Graph, edges: EdgeSet, s: usize) -> Result<EvenFactor, SolveError> {
    let host = g.square();
    let report = crate::trails::verify_factor(&host, &edges, s)?;
    if !report.is_valid() {
        return Err(internal(format!("assembled factor failed verification: {report}")));
    }
    Ok(EvenFactor::new(host, edges)?)
}

fn cycle_edges(n: usize, cycle: &[usize]) -> EdgeSet {
    let mut e = EdgeSet::new(n);
    for i in 0..cycle.len() {
        e.insert(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    e
}

/// Picks the applicable solver: the star-free solver when `g` has no
/// induced `S(K_{1,2s+1})`, the block-condition solver otherwise.
pub fn solve(g: &Graph, s: usize) -> Result<EvenFactor, SolveError> {
    check_input(g, s)?;
    if is_star_free(g, s) {
        solve_star_free(g, s)
    } else {
        solve_condition(g, s)
    }
}
