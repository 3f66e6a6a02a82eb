//! [2,2s]-factors in squares of `S(K_{1,2s+1})`-free graphs, by induction
//! on the order: split at a cut vertex `u` of degree at least 3, solve
//! every branch with a two-vertex tail at its root, and stitch the
//! extracted trails together through `u`.

use crate::graph::{contract_pairs, Graph, VertexSet};
use crate::pattern::find_induced_stars;
use crate::trails::{EvenFactor, Trail, TrailBuilder};

use super::{
    check_input, cycle_edges, hamiltonian_cycle, internal, lemma4_extract, path_cover, verified, OutcomeKind,
    SolveError, MAX_DEPTH,
};

/// A [2,2s]-factor of `g^2`; `g` must be connected, of order at least 3
/// and free of induced `S(K_{1,2s+1})`.
pub fn solve_star_free(g: &Graph, s: usize) -> Result<EvenFactor, SolveError> {
    check_input(g, s)?;
    if g.max_degree() > 2 * s {
        if let Some(star) = find_induced_stars(g, s, Some(1)).pop() {
            return Err(SolveError::NotStarFree(star));
        }
    }
    star_free_rec(g, s, 0)
}

/// Hamiltonian cycle of the square for the base cases.
pub(super) fn square_cycle(g: &Graph, s: usize) -> Result<EvenFactor, SolveError> {
    let cycle = hamiltonian_cycle(&g.square())?
        .ok_or_else(|| internal(format!("square of base graph {g:?} has no Hamiltonian cycle")))?;
    verified(g, cycle_edges(g.vertex_count(), &cycle), s)
}

/// Vertex order of a path graph, from one end.
fn path_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if g.edge_count() != n - 1 || g.max_degree() > 2 {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).iter().find(|&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

pub(super) fn star_free_rec(g: &Graph, s: usize, depth: usize) -> Result<EvenFactor, SolveError> {
    if depth > MAX_DEPTH {
        return Err(internal("recursion depth exceeded"));
    }
    let n = g.vertex_count();
    if n <= 6 || g.is_biconnected() {
        return square_cycle(g, s);
    }
    if let Some(p) = path_order(g) {
        // even positions out, odd positions back
        let cycle: Vec<usize> = p.iter().step_by(2).chain(p.iter().skip(1).step_by(2).rev()).copied().collect();
        return verified(g, cycle_edges(n, &cycle), s);
    }
    let u = (0..n)
        .find(|&v| g.degree(v) >= 3 && g.is_cut_vertex(v))
        .ok_or_else(|| internal("no cut vertex of degree at least 3"))?;
    split_at(g, s, u, depth)
}

/// A finished piece of a branch, in ids of `g`.
struct Piece {
    root: usize,
    kind: OutcomeKind,
    trail: Trail,
}

fn split_at(g: &Graph, s: usize, u: usize, depth: usize) -> Result<EvenFactor, SolveError> {
    let n = g.vertex_count();
    // BFS tree rooted at u; it contains every edge at u
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([u]);
    parent[u] = u;
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let branch_of = |mut v: usize| {
        while parent[v] != u {
            v = parent[v];
        }
        v
    };
    let mut subtree = vec![VertexSet::EMPTY; n];
    for v in 0..n {
        if v != u {
            subtree[branch_of(v)].insert(v);
        }
    }
    let nbrs = g.neighbors(u).to_vec();
    let (inner, leaves): (Vec<usize>, Vec<usize>) = nbrs.iter().partition(|&&v| g.degree(v) >= 2);
    let rest = g.vertices().difference(VertexSet::singleton(u));

    let mut pieces = Vec::new();
    for &ui in &inner {
        let gi_set = subtree[ui];
        let home = g.component_within(ui, rest);
        let other = g
            .neighbors(u)
            .iter()
            .find(|&w| !home.contains(w))
            .ok_or_else(|| internal("cut vertex has all neighbours in one component"))?;
        let gi_vertices = gi_set.to_vec();
        let mut hi_vertices = gi_vertices.clone();
        hi_vertices.push(u);
        hi_vertices.push(other);
        let hi = g.induced_subgraph(&hi_vertices)?;
        let gi = g.induced_subgraph(&gi_vertices)?;
        let x = gi_vertices.iter().position(|&v| v == ui).unwrap();
        let f = star_free_rec(&hi, s, depth + 1)?;
        let out = lemma4_extract(&gi, x, s, &f)?;
        let trail = Trail::new(out.trail.vertices().iter().map(|&v| gi_vertices[v]).collect())?;
        pieces.push(Piece { root: ui, kind: out.kind, trail });
    }

    let (open, closed): (Vec<Piece>, Vec<Piece>) =
        pieces.into_iter().partition(|p| p.kind == OutcomeKind::OpenToNeighbor);

    // contract every u_j z_j and cover the result by paths
    let mut pair_vertices = Vec::with_capacity(2 * open.len());
    for p in &open {
        pair_vertices.push(p.root);
        pair_vertices.push(p.trail.last());
    }
    let pairs: Vec<(usize, usize)> = (0..open.len()).map(|j| (2 * j, 2 * j + 1)).collect();
    let contracted = contract_pairs(&g.induced_subgraph(&pair_vertices)?, &pairs)?;
    let paths = path_cover(&contracted.graph)?;
    if paths.len() > 2 * s {
        return Err(internal(format!("{} paths exceed 2s", paths.len())));
    }

    let sq = g.square();
    // chain the trails of each path into one trail F_i
    let mut chains: Vec<Trail> = Vec::with_capacity(paths.len());
    for path in &paths {
        let mut b = TrailBuilder::new(&sq);
        for (k, &w) in path.iter().enumerate() {
            let t = &open[w].trail;
            let oriented = if k == 0 {
                t.clone()
            } else {
                let exit = b.last().unwrap();
                let (a, z) = (t.first(), t.last());
                match [a, z].into_iter().filter(|&e| sq.has_edge(exit, e)).min() {
                    Some(e) if e == a => t.clone(),
                    Some(_) => t.reversed(),
                    None => return Err(internal("consecutive branches are not joined in the square")),
                }
            };
            b.push_trail(&oriented)?;
        }
        chains.push(b.finish(s)?);
    }

    let mut b = TrailBuilder::new(&sq);
    let mut k = 0;
    while k < chains.len() {
        b.push_trail(&chains[k])?;
        if k + 1 < chains.len() {
            b.push_vertex(u)?;
            b.push_trail(&chains[k + 1].reversed())?;
        } else {
            b.push_vertex(u)?;
        }
        k += 2;
    }
    for p in &closed {
        b.push_trail(&p.trail)?;
    }
    for &l in &leaves {
        b.push_vertex(l)?;
    }
    if chains.is_empty() {
        b.push_vertex(u)?;
    }
    let tour = b.close(s)?;
    verified(g, tour.edge_set(n), s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::make_star_subdivision;
    use crate::solver::oracle_square_factor;

    #[test]
    fn long_path() {
        let p7 = Graph::path(7).unwrap();
        let f = solve_star_free(&p7, 1).unwrap();
        assert!(f.verify(1).is_valid());
        assert!(oracle_square_factor(&p7, 1).unwrap().is_some());
        let p12 = Graph::path(12).unwrap();
        assert!(solve_star_free(&p12, 1).unwrap().verify(1).is_valid());
    }

    #[test]
    fn star_with_five_rays() {
        let k15 = Graph::star(5).unwrap();
        let f = solve_star_free(&k15, 2).unwrap();
        assert!(f.verify(2).is_valid());
        assert!(f.degree(0) <= 4);
        assert!(oracle_square_factor(&k15, 2).unwrap().is_some());
    }

    #[test]
    fn spider_with_s2() {
        let sk13 = make_star_subdivision(1).unwrap();
        let f = solve_star_free(&sk13, 2).unwrap();
        assert!(f.verify(2).is_valid());
        assert!(matches!(solve_star_free(&sk13, 1), Err(SolveError::NotStarFree(_))));
    }

    #[test]
    fn larger_trees() {
        // spider with four legs of length 2 plus a long tail, s = 2
        let mut g = make_star_subdivision(1).unwrap().with_pendant_path(0, 1).unwrap();
        g = g.with_pendant_path(7, 1).unwrap();
        g = g.with_pendant_path(8, 4).unwrap();
        let f = solve_star_free(&g, 2).unwrap();
        assert!(f.verify(2).is_valid());
    }

    #[test]
    fn input_checks() {
        assert_eq!(solve_star_free(&Graph::path(2).unwrap(), 1), Err(SolveError::TooSmall(2)));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(solve_star_free(&two, 1), Err(SolveError::Disconnected));
        assert_eq!(solve_star_free(&Graph::path(3).unwrap(), 0), Err(SolveError::InvalidS));
    }
}
