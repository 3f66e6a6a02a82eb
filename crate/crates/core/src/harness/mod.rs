//! Graph generation, fixtures and the property suite.

pub mod enumerate;
pub mod fixtures;
pub mod random;
pub mod suite;

pub use enumerate::{enumerate_all, enumerate_connected, ENUMERATE_MAX_VERTICES};
pub use fixtures::{all_fixtures, case_g_graph, figure1_graph, fixture, Expectation, Fixture};
pub use random::{random_bounded_degree_with, random_connected, random_connected_with, random_graph_with};
pub use suite::{run_property, run_suite, Counterexample, Property, PropertyResult, SuiteConfig, SuiteReport};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("order {n} exceeds the enumeration limit {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("order must be between 1 and 64, got {0}")]
    BadOrder(usize),
    #[error("edge probability must lie in (0, 1], got {0}")]
    BadProbability(f64),
    #[error("degree cap {0} cannot hold a connected graph")]
    BadDegree(usize),
    #[error("no connected G({n}, {p}) within the retry budget")]
    RetryBudget { n: usize, p: f64 },
    #[error("invalid thread count: {0}")]
    Threads(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
