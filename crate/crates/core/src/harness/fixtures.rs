//! Named graphs with known answers.

use std::fmt;

use crate::graph::Graph;
use crate::pattern::make_star_subdivision;

/// Vertex ids of [`figure1_graph`].
pub mod figure1 {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const M: usize = 2;
    pub const C1: usize = 3;
    pub const C2: usize = 4;
    pub const P1: usize = 5;
    pub const Q1: usize = 6;
    pub const P2: usize = 7;
    pub const Q2: usize = 8;
    pub const P3: usize = 9;
    pub const Q3: usize = 10;
    pub const P4: usize = 11;
    pub const Q4: usize = 12;
}

/// Vertex ids of [`case_g_graph`].
pub mod case_g {
    pub const C: usize = 0;
    pub const M1: usize = 1;
    pub const L1: usize = 2;
    pub const M2: usize = 3;
    pub const L2: usize = 4;
    pub const M3: usize = 5;
    pub const L3: usize = 6;
    pub const X: usize = 7;
}

/// The 13-vertex graph whose every induced `S(K_{1,3})` has only two edges
/// in a block of degree at most two, and whose square has no Hamiltonian
/// cycle.
pub fn figure1_graph() -> Graph {
    use figure1::*;
    Graph::from_edges(
        13,
        [
            (A, M),
            (M, B),
            (A, C1),
            (A, C2),
            (B, C1),
            (B, C2),
            (C1, P1),
            (P1, Q1),
            (C1, P2),
            (P2, Q2),
            (C2, P3),
            (P3, Q3),
            (C2, P4),
            (P4, Q4),
        ],
    )
    .expect("fixture is a simple graph")
}

/// A subdivided claw at `c` whose arms 1 and 2 are joined through `x`, so
/// the unique induced `S(K_{1,3})` has three edges in the block
/// `{c, m1, l1, x, m2}`.
pub fn case_g_graph() -> Graph {
    use case_g::*;
    Graph::from_edges(8, [(C, M1), (C, M2), (C, M3), (M1, L1), (M2, L2), (M3, L3), (L1, X), (X, M2)])
        .expect("fixture is a simple graph")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Expectation {
    StarFree { s: usize, holds: bool },
    Condition { s: usize, holds: bool },
    FactorExists { s: usize, holds: bool },
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, s, holds) = match *self {
            Expectation::StarFree { s, holds } => ("star-free", s, holds),
            Expectation::Condition { s, holds } => ("condition", s, holds),
            Expectation::FactorExists { s, holds } => ("factor", s, holds),
        };
        write!(f, "{name}[s={s}]={holds}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub expected: Vec<Expectation>,
}

/// Every fixture, in a fixed order.
pub fn all_fixtures() -> Vec<Fixture> {
    use Expectation::*;
    vec![
        Fixture {
            name: "figure1",
            graph: figure1_graph(),
            expected: vec![
                StarFree { s: 1, holds: false },
                Condition { s: 1, holds: false },
                FactorExists { s: 1, holds: false },
            ],
        },
        Fixture {
            name: "case-g",
            graph: case_g_graph(),
            expected: vec![
                StarFree { s: 1, holds: false },
                Condition { s: 1, holds: true },
                FactorExists { s: 1, holds: true },
            ],
        },
        Fixture {
            name: "star-s1",
            graph: make_star_subdivision(1).expect("s >= 1"),
            expected: vec![
                StarFree { s: 1, holds: false },
                Condition { s: 1, holds: false },
                FactorExists { s: 1, holds: false },
                StarFree { s: 2, holds: true },
                FactorExists { s: 2, holds: true },
            ],
        },
        Fixture {
            name: "star-s2",
            graph: make_star_subdivision(2).expect("s >= 1"),
            expected: vec![
                StarFree { s: 2, holds: false },
                Condition { s: 2, holds: false },
                FactorExists { s: 2, holds: false },
            ],
        },
        Fixture {
            name: "p7",
            graph: Graph::path(7).expect("small"),
            expected: vec![
                StarFree { s: 1, holds: true },
                Condition { s: 1, holds: true },
                FactorExists { s: 1, holds: true },
            ],
        },
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    all_fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_degrees() {
        use figure1::*;
        let g = figure1_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (13, 14));
        for (v, d) in [(C1, 4), (C2, 4), (A, 3), (B, 3), (M, 2), (P1, 2), (P4, 2), (Q1, 1), (Q3, 1)] {
            assert_eq!(g.degree(v), d, "vertex {v}");
        }
    }

    #[test]
    fn case_g_shape() {
        let g = case_g_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 8));
        assert!(g.is_connected());
    }

    #[test]
    fn lookup() {
        assert_eq!(fixture("p7").unwrap().graph.vertex_count(), 7);
        assert!(fixture("nope").is_none());
        let names: Vec<&str> = all_fixtures().iter().map(|f| f.name).collect();
        assert_eq!(names, ["figure1", "case-g", "star-s1", "star-s2", "p7"]);
    }
}
