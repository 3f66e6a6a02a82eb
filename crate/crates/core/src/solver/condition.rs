//! [2,2s]-factors in squares of graphs whose induced `S(K_{1,2s+1})` all
//! have three edges in one block of degree at most two.
//!
//! The solver picks such a block `H`, replaces what hangs off its cut
//! vertices by short paths, recurses, and closes a tour through `H`.

use crate::graph::{block_decomposition, Graph, VertexSet};
use crate::pattern::{find_induced_stars, satisfies_block_condition};
use crate::trails::{EvenFactor, Trail, TrailBuilder};

use super::star_free::{square_cycle, star_free_rec};
use super::{
    block_double_path_cover, check_input, fleischner_cycle, internal, lemma4_extract, lemma5_extract, verified,
    SolveError, MAX_DEPTH,
};

/// A [2,2s]-factor of `g^2` for a connected `g` satisfying the block condition.
pub fn solve_condition(g: &Graph, s: usize) -> Result<EvenFactor, SolveError> {
    check_input(g, s)?;
    let cond = satisfies_block_condition(g, s)?;
    if let Some(v) = cond.violators.into_iter().next() {
        return Err(SolveError::HypothesisViolated(v));
    }
    condition_rec(g, s, 0)
}

fn condition_rec(g: &Graph, s: usize, depth: usize) -> Result<EvenFactor, SolveError> {
    if depth > MAX_DEPTH {
        return Err(internal("recursion depth exceeded"));
    }
    if g.is_biconnected() {
        return square_cycle(g, s);
    }
    let stars = find_induced_stars(g, s, None);
    if stars.is_empty() {
        return star_free_rec(g, s, depth);
    }
    let bd = block_decomposition(g);
    let mut chosen = None;
    for star in &stars {
        match star.supporting_block(&bd) {
            Some(b) => {
                chosen.get_or_insert(b);
            }
            None => return Err(SolveError::ReducedInstanceViolation(star.clone())),
        }
    }
    let block = chosen.ok_or_else(|| internal("no supporting block"))?;
    let h_set = bd.blocks[block].vertices;
    let cuts: Vec<usize> = h_set.intersection(bd.cut_vertices).to_vec();
    match cuts.as_slice() {
        [c] => one_cut(g, s, h_set, *c, depth),
        [c1, c2] => two_cuts(g, s, h_set, *c1, *c2, depth),
        _ => Err(internal(format!("supporting block has degree {}", cuts.len()))),
    }
}

/// Subgraph on `set` plus the map from its ids back to `g`.
fn local(g: &Graph, set: VertexSet) -> (Graph, Vec<usize>) {
    (g.induced_by(set), set.to_vec())
}

fn position(ids: &[usize], v: usize) -> usize {
    ids.iter().position(|&w| w == v).expect("vertex in subgraph")
}

fn map_trail(t: &Trail, ids: &[usize]) -> Result<Trail, SolveError> {
    Ok(Trail::new(t.vertices().iter().map(|&v| ids[v]).collect())?)
}

/// A walk through everything hanging at `c` on the side `side`,
/// starting at `c` and ending next to `c`.
fn side_walk(g: &Graph, s: usize, side: VertexSet, c: usize, depth: usize) -> Result<Trail, SolveError> {
    let rest = side.difference(VertexSet::singleton(c));
    if rest.is_subset(g.neighbors(c)) {
        let mut vs = vec![c];
        vs.extend(rest.iter());
        return Ok(Trail::new(vs)?);
    }
    if rest.len() == 2 {
        // a path c - b1 - b2 entered from its far end
        let b1 = rest.intersection(g.neighbors(c)).first().ok_or_else(|| internal("side not attached"))?;
        let b2 = rest.difference(VertexSet::singleton(b1)).first().unwrap();
        return Ok(Trail::new(vec![c, b2, b1])?);
    }
    let (b, ids) = local(g, side);
    let cl = position(&ids, c);
    let f = condition_rec(&b.with_pendant_path(cl, 2)?, s, depth + 1)?;
    let out = lemma4_extract(&b, cl, s, &f)?;
    map_trail(&out.trail, &ids)
}

fn one_cut(g: &Graph, s: usize, h_set: VertexSet, c: usize, depth: usize) -> Result<EvenFactor, SolveError> {
    let r_set = g.vertices().difference(h_set).union(VertexSet::singleton(c));
    let (r, ids) = local(g, r_set);
    let cl = position(&ids, c);
    let sq = g.square();
    let mut b = TrailBuilder::new(&sq);
    let others = h_set.difference(VertexSet::singleton(c));
    if others.is_subset(g.neighbors(c)) {
        let f = condition_rec(&r.with_pendant_path(cl, 1)?, s, depth + 1)?;
        let out = lemma5_extract(&r, cl, s, &f)?;
        b.push_trail(&map_trail(&out.trail, &ids)?)?;
        for v in others {
            b.push_vertex(v)?;
        }
    } else {
        let f = condition_rec(&r.with_pendant_path(cl, 2)?, s, depth + 1)?;
        let out = lemma4_extract(&r, cl, s, &f)?;
        let (hg, hids) = local(g, h_set);
        let cycle = fleischner_cycle(&hg, position(&hids, c), position(&hids, c))?;
        b.push_trail(&map_trail(&out.trail, &ids)?)?;
        for &v in &cycle[1..] {
            b.push_vertex(hids[v])?;
        }
    }
    let tour = b.close(s)?;
    verified(g, tour.edge_set(g.vertex_count()), s)
}

fn two_cuts(
    g: &Graph,
    s: usize,
    h_set: VertexSet,
    c1: usize,
    c2: usize,
    depth: usize,
) -> Result<EvenFactor, SolveError> {
    let all = g.vertices();
    let side = |c: usize, other: usize| {
        let away = g.component_within(other, all.difference(VertexSet::singleton(c)));
        all.difference(away)
    };
    let w1 = side_walk(g, s, side(c1, c2), c1, depth)?;
    let w2 = side_walk(g, s, side(c2, c1), c2, depth)?;
    let (hg, hids) = local(g, h_set);
    let (p1, p2) = block_double_path_cover(&hg, position(&hids, c1), position(&hids, c2))?;
    let sq = g.square();
    let mut b = TrailBuilder::new(&sq);
    b.push_trail(&w1)?;
    for &v in &p1 {
        b.push_vertex(hids[v])?;
    }
    b.push_trail(&w2.reversed())?;
    // the reversed side walk already ends at c2
    for &v in &p2[1..] {
        b.push_vertex(hids[v])?;
    }
    let tour = b.close(s)?;
    if tour.first() != c1 {
        return Err(internal("tour does not start at the first cut vertex"));
    }
    verified(g, tour.edge_set(g.vertex_count()), s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures::{case_g, case_g_graph, figure1_graph};
    use crate::pattern::{is_star_free, make_star_subdivision};
    use crate::solver::oracle_square_factor;

    #[test]
    fn case_g_is_solved() {
        let g = case_g_graph();
        assert!(!is_star_free(&g, 1));
        let f = solve_condition(&g, 1).unwrap();
        assert!(f.verify(1).is_valid());
    }

    #[test]
    fn figure1_is_rejected() {
        let g = figure1_graph();
        assert!(matches!(solve_condition(&g, 1), Err(SolveError::HypothesisViolated(_))));
        assert!(oracle_square_factor(&g, 1).unwrap().is_none());
    }

    #[test]
    fn star_free_input_falls_through() {
        let g = Graph::path(9).unwrap();
        assert!(solve_condition(&g, 1).unwrap().verify(1).is_valid());
    }

    #[test]
    fn k4_with_two_tails() {
        let mut g = Graph::complete(4).unwrap();
        for _ in 0..2 {
            g = g.with_pendant_path(0, 2).unwrap();
        }
        assert!(solve_condition(&g, 1).unwrap().verify(1).is_valid());
    }

    #[test]
    fn c5_block_between_two_cuts() {
        // C5 on 0..5 with tails at 0 and 2; the star at 0 uses three cycle edges
        let mut g = Graph::cycle(5).unwrap();
        g = g.with_pendant_path(0, 2).unwrap();
        g = g.with_pendant_path(2, 3).unwrap();
        assert!(satisfies_block_condition(&g, 1).unwrap().holds);
        assert!(solve_condition(&g, 1).unwrap().verify(1).is_valid());
    }

    #[test]
    fn side_walk_shapes() {
        let g = case_g_graph();
        let w = side_walk(&g, 1, VertexSet::from_iter([case_g::C, case_g::M3, case_g::L3]), case_g::C, 0).unwrap();
        assert_eq!(w.vertices(), &[case_g::C, case_g::L3, case_g::M3]);
        let star = make_star_subdivision(1).unwrap();
        let w = side_walk(&star, 1, VertexSet::from_iter([0, 1, 2, 3]), 0, 0).unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2, 3]);
    }
}
