use proptest::prelude::*;

use squarefactor::graph::Graph;
use squarefactor::harness::{case_g_graph, figure1_graph, random_connected};
use squarefactor::io::{parse_factor, parse_graph, write_factor, write_graph};
use squarefactor::pattern::{is_star_free, make_star_subdivision, satisfies_block_condition};
use squarefactor::solver::{oracle_square_factor, solve, solve_condition, solve_star_free, SolveError};
use squarefactor::trails::{factor_to_trail, verify_factor};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (3usize..=max_n, 0.15f64..0.6, any::<u64>()).prop_map(|(n, p, seed)| random_connected(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    /// Whenever a hypothesis holds the solver succeeds, and the oracle agrees.
    #[test]
    fn solver_matches_oracle(g in graph_strategy(10), s in 1usize..=2) {
        let oracle = oracle_square_factor(&g, s).unwrap();
        match solve(&g, s) {
            Ok(f) => {
                prop_assert!(verify_factor(&g.square(), f.edges(), s).unwrap().is_valid());
                prop_assert!(oracle.is_some());
                let t = factor_to_trail(&f, s).unwrap();
                prop_assert!(t.is_closed());
                prop_assert!(t.max_visits() <= s);
            }
            Err(SolveError::HypothesisViolated(star)) => {
                prop_assert!(star.is_induced_in(&g));
                prop_assert!(!satisfies_block_condition(&g, s).unwrap().holds);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn star_free_solver_on_sparse_trees(n in 3usize..=14, seed in any::<u64>()) {
        let g = random_connected(n, 2.0 / n as f64, seed).unwrap();
        if is_star_free(&g, 2) {
            let f = solve_star_free(&g, 2).unwrap();
            prop_assert!(f.verify(2).is_valid());
        }
    }

    #[test]
    fn factor_text_round_trip(g in graph_strategy(9)) {
        let parsed = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(&parsed, &g);
        if let Ok(f) = solve(&g, 2) {
            let back = parse_factor(&write_factor(f.edges()), g.vertex_count()).unwrap();
            prop_assert_eq!(&back, f.edges());
        }
    }
}

#[test]
fn fixtures_end_to_end() {
    let f1 = figure1_graph();
    assert!(matches!(solve(&f1, 1), Err(SolveError::HypothesisViolated(_))));
    assert!(oracle_square_factor(&f1, 1).unwrap().is_none());
    // with s = 2 the same graph is star-free
    assert!(solve(&f1, 2).unwrap().verify(2).is_valid());

    let g = case_g_graph();
    assert!(!is_star_free(&g, 1));
    assert!(solve_condition(&g, 1).unwrap().verify(1).is_valid());

    let star = make_star_subdivision(2).unwrap();
    assert!(matches!(solve(&star, 2), Err(SolveError::HypothesisViolated(_))));
    assert!(solve(&star, 3).unwrap().verify(3).is_valid());
}

#[test]
fn larger_trees_and_blocks() {
    let mut solved = 0;
    for seed in 0..40 {
        let g = random_connected(20, 0.12, seed).unwrap();
        for s in 1..=3 {
            match solve(&g, s) {
                Ok(f) => {
                    assert!(f.verify(s).is_valid(), "seed {seed} s {s}");
                    solved += 1;
                }
                Err(SolveError::HypothesisViolated(_)) => {}
                Err(e) => panic!("seed {seed} s {s}: {e}"),
            }
        }
    }
    assert!(solved >= 60, "only {solved} solved");
}
