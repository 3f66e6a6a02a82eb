//! Hamiltonian cycles of squares, optionally with constraints on the
//! cycle edges at two chosen vertices.
//!
//! Depth-first search from a fixed start vertex, fewest-onward-neighbours
//! first, with a memo of failed `(visited, end, flag)` states.

use std::collections::HashSet;

use crate::graph::{Bits, Graph};

use super::SolveError;

pub const HAMILTON_MAX_VERTICES: usize = 24;

/// States with at most this many vertices use a dense bit memo.
const DENSE_MEMO: usize = 16;

enum Memo {
    Dense { n: usize, bits: Vec<u64> },
    Sparse(HashSet<(u64, u8, bool)>),
}

impl Memo {
    fn new(n: usize) -> Self {
        if n <= DENSE_MEMO {
            let len = ((1usize << n) * n * 2).div_ceil(64);
            Memo::Dense { n, bits: vec![0; len] }
        } else {
            Memo::Sparse(HashSet::new())
        }
    }

    fn index(n: usize, visited: u64, v: usize, flag: bool) -> usize {
        ((visited as usize * n + v) << 1) | flag as usize
    }

    fn contains(&self, visited: u64, v: usize, flag: bool) -> bool {
        match self {
            Memo::Dense { n, bits } => {
                let i = Self::index(*n, visited, v, flag);
                bits[i >> 6] >> (i & 63) & 1 == 1
            }
            Memo::Sparse(set) => set.contains(&(visited, v as u8, flag)),
        }
    }

    fn insert(&mut self, visited: u64, v: usize, flag: bool) {
        match self {
            Memo::Dense { n, bits } => {
                let i = Self::index(*n, visited, v, flag);
                bits[i >> 6] |= 1 << (i & 63);
            }
            Memo::Sparse(set) => {
                set.insert((visited, v as u8, flag));
            }
        }
    }
}

/// Cycle through every vertex of `adj` starting at `start`. The first and
/// last vertices after `start` must lie in `ends`. When `flag` starts
/// false, the cycle must also use an edge joining `z` to a vertex of `zmask`.
struct CycleSearch<'a> {
    adj: &'a [u64],
    all: u64,
    start: usize,
    ends: u64,
    z: usize,
    zmask: u64,
    memo: Memo,
    path: Vec<usize>,
}

impl CycleSearch<'_> {
    fn run(&mut self, visited: u64, v: usize, flag: bool) -> bool {
        if visited == self.all {
            return self.ends >> v & 1 == 1 && flag;
        }
        if self.ends & !visited == 0 || self.memo.contains(visited, v, flag) {
            return false;
        }
        let open = !visited & self.all;
        // an unvisited vertex needs two usable neighbours
        for w in Bits(open) {
            let mut usable = self.adj[w] & (open | 1 << v);
            if self.ends >> w & 1 == 1 {
                usable |= self.adj[w] & 1 << self.start;
            }
            if usable.count_ones() < 2 {
                self.memo.insert(visited, v, flag);
                return false;
            }
        }
        let mut cand = self.adj[v] & open;
        if v == self.start {
            cand &= self.ends;
        }
        let mut order: Vec<(u32, usize)> = Bits(cand)
            .map(|w| ((self.adj[w] & open).count_ones(), w))
            .collect();
        order.sort_unstable();
        for (_, w) in order {
            let f = flag || (v == self.z && self.zmask >> w & 1 == 1) || (w == self.z && self.zmask >> v & 1 == 1);
            self.path.push(w);
            if self.run(visited | 1 << w, w, f) {
                return true;
            }
            self.path.pop();
        }
        self.memo.insert(visited, v, flag);
        false
    }
}

fn search(adj: &[u64], start: usize, ends: u64, z: usize, zmask: Option<u64>) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut s = CycleSearch {
        adj,
        all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        start,
        ends: ends & adj[start],
        z,
        zmask: zmask.unwrap_or(0),
        memo: Memo::new(n),
        path: vec![start],
    };
    if s.run(1 << start, start, zmask.is_none()) {
        Some(s.path)
    } else {
        None
    }
}

/// A Hamiltonian cycle of `host` itself (not of its square), as a vertex
/// list starting at 0 with the closing edge implicit.
pub fn hamiltonian_cycle(host: &Graph) -> Result<Option<Vec<usize>>, SolveError> {
    let n = host.vertex_count();
    if n > HAMILTON_MAX_VERTICES {
        return Err(SolveError::TooLarge { n, cap: HAMILTON_MAX_VERTICES });
    }
    if n < 3 {
        return Ok(None);
    }
    let adj: Vec<u64> = (0..n).map(|v| host.neighbors(v).0).collect();
    Ok(search(&adj, 0, u64::MAX, 0, None))
}

/// Hamiltonian cycle `C` of `g^2`, starting at `y`, whose two edges at `y`
/// are edges of `g` and which uses an edge of `g` at `z`; when `yz` is an
/// edge of `g` the edge at `z` is not `yz`.
pub fn fleischner_cycle(g: &Graph, y: usize, z: usize) -> Result<Vec<usize>, SolveError> {
    let n = g.vertex_count();
    for v in [y, z] {
        if v >= n {
            return Err(SolveError::VertexOutOfRange(v));
        }
    }
    if n > HAMILTON_MAX_VERTICES {
        return Err(SolveError::TooLarge { n, cap: HAMILTON_MAX_VERTICES });
    }
    if !g.is_biconnected() {
        return Err(SolveError::NotBiconnected);
    }
    let sq = g.square();
    let adj: Vec<u64> = (0..n).map(|v| sq.neighbors(v).0).collect();
    let zmask = (z != y).then(|| g.neighbors(z).0 & !(1 << y));
    search(&adj, y, g.neighbors(y).0, z, zmask).ok_or_else(|| {
        super::internal(format!("no constrained Hamiltonian cycle for y={y}, z={z} in {g:?}"))
    })
}

/// Checks the postconditions of [`fleischner_cycle`].
pub fn check_fleischner(g: &Graph, y: usize, z: usize, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let set: crate::graph::VertexSet = cycle.iter().copied().collect();
    if set != g.vertices() {
        return false;
    }
    let sq = g.square();
    let edge = |i: usize| (cycle[i], cycle[(i + 1) % n]);
    if !(0..n).all(|i| sq.has_edge(edge(i).0, edge(i).1)) {
        return false;
    }
    let at = |v: usize| -> Vec<(usize, usize)> {
        let i = cycle.iter().position(|&w| w == v).unwrap();
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        vec![key(cycle[(i + n - 1) % n], v), key(v, cycle[(i + 1) % n])]
    };
    let y_edges = at(y);
    if !y_edges.iter().all(|&(a, b)| g.has_edge(a, b)) {
        return false;
    }
    if z == y {
        return true;
    }
    at(z)
        .into_iter()
        .any(|e| g.has_edge(e.0, e.1) && !y_edges.contains(&e))
}

/// Two vertex-disjoint paths of `h^2` covering `V(h)`: one from some
/// `a1` in `N(c1)` to some `a2` in `N(c2)`, one from `c2` to `c1`.
pub fn block_double_path_cover(h: &Graph, c1: usize, c2: usize) -> Result<(Vec<usize>, Vec<usize>), SolveError> {
    if c1 == c2 {
        return Err(super::internal("path cover needs two distinct vertices"));
    }
    let cycle = fleischner_cycle(h, c1, c2)?;
    let n = cycle.len();
    let pos = cycle.iter().position(|&v| v == c2).unwrap();
    let before = cycle[pos - 1];
    // orient the cycle so that c2 is entered through an edge of h
    let cycle: Vec<usize> = if before != c1 && h.has_edge(before, c2) {
        cycle
    } else {
        std::iter::once(c1).chain(cycle[1..].iter().rev().copied()).collect()
    };
    let pos = cycle.iter().position(|&v| v == c2).unwrap();
    let first: Vec<usize> = cycle[1..pos].to_vec();
    let second: Vec<usize> = cycle[pos..].iter().copied().chain(std::iter::once(c1)).collect();
    debug_assert_eq!(first.len() + second.len(), n);
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Every Hamiltonian cycle of `g^2` through permutations; tiny graphs only.
    fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
        fn extend(sq: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let n = sq.vertex_count();
            if path.len() == n {
                if sq.has_edge(path[n - 1], path[0]) {
                    out.push(path.clone());
                }
                return;
            }
            for w in 0..n {
                if !path.contains(&w) && sq.has_edge(*path.last().unwrap(), w) {
                    path.push(w);
                    extend(sq, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(&g.square(), &mut vec![0], &mut out);
        out
    }

    fn random_biconnected(n: usize, bits: &[bool]) -> Option<Graph> {
        let mut g = Graph::cycle(n).unwrap();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    g.add_edge(u, v).unwrap();
                }
                k += 1;
            }
        }
        g.is_biconnected().then_some(g)
    }

    #[test]
    fn c4_cycle_is_itself() {
        let c4 = Graph::cycle(4).unwrap();
        let c = fleischner_cycle(&c4, 0, 1).unwrap();
        assert!(check_fleischner(&c4, 0, 1, &c));
        for i in 0..4 {
            assert!(c4.has_edge(c[i], c[(i + 1) % 4]));
        }
    }

    #[test]
    fn k4_minus_edge_all_pairs() {
        let mut g = Graph::complete(4).unwrap();
        g.remove_edge(0, 1);
        for y in 0..4 {
            for z in 0..4 {
                let c = fleischner_cycle(&g, y, z).unwrap();
                assert!(check_fleischner(&g, y, z, &c));
                assert_eq!(c[0], y);
            }
        }
    }

    #[test]
    fn rejects_cut_vertex() {
        let g = Graph::path(4).unwrap();
        assert_eq!(fleischner_cycle(&g, 0, 1), Err(SolveError::NotBiconnected));
    }

    #[test]
    fn plain_cycles() {
        assert_eq!(hamiltonian_cycle(&Graph::complete(2).unwrap()).unwrap(), None);
        let c = hamiltonian_cycle(&Graph::cycle(6).unwrap()).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        let star = Graph::star(3).unwrap();
        assert_eq!(hamiltonian_cycle(&star).unwrap(), None);
        let sk13 = crate::pattern::make_star_subdivision(1).unwrap();
        assert_eq!(hamiltonian_cycle(&sk13.square()).unwrap(), None);
    }

    #[test]
    fn double_path_cover_examples() {
        // C4 as c1 - a - c2 - b - c1
        let c4 = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let (p1, p2) = block_double_path_cover(&c4, 0, 1).unwrap();
        check_cover(&c4, 0, 1, &p1, &p2);

        let k4 = Graph::complete(4).unwrap();
        let (p1, p2) = block_double_path_cover(&k4, 0, 1).unwrap();
        check_cover(&k4, 0, 1, &p1, &p2);
        assert_eq!(p2, vec![1, 0]);
        assert_eq!(p1.len(), 2);

        let c5 = Graph::cycle(5).unwrap();
        for (c1, c2) in [(0, 1), (0, 2), (3, 1)] {
            let (p1, p2) = block_double_path_cover(&c5, c1, c2).unwrap();
            check_cover(&c5, c1, c2, &p1, &p2);
        }
    }

    fn check_cover(h: &Graph, c1: usize, c2: usize, p1: &[usize], p2: &[usize]) {
        let sq = h.square();
        assert!(!p1.is_empty());
        assert!(h.has_edge(c1, p1[0]));
        assert!(h.has_edge(c2, *p1.last().unwrap()));
        assert_eq!((p2[0], *p2.last().unwrap()), (c2, c1));
        let mut all: Vec<usize> = p1.iter().chain(p2).copied().collect();
        all.sort();
        assert_eq!(all, (0..h.vertex_count()).collect::<Vec<_>>());
        for p in [p1, p2] {
            for w in p.windows(2) {
                assert!(sq.has_edge(w[0], w[1]));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_exhaustive_filter(n in 3usize..7, bits in proptest::collection::vec(prop::bool::weighted(0.25), 15), y in 0usize..7, z in 0usize..7) {
            let Some(g) = random_biconnected(n, &bits) else { return Ok(()) };
            let (y, z) = (y % n, z % n);
            let exists = all_cycles(&g).iter().any(|c| check_fleischner(&g, y, z, c));
            prop_assert!(exists);
            let c = fleischner_cycle(&g, y, z).unwrap();
            prop_assert!(check_fleischner(&g, y, z, &c));
        }

        #[test]
        fn plain_search_matches_exhaustive(n in 3usize..8, bits in proptest::collection::vec(prop::bool::weighted(0.3), 21)) {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let found = hamiltonian_cycle(&g).unwrap();
            let mut exists = false;
            let mut perm: Vec<usize> = (1..n).collect();
            permute(&mut perm, 0, &mut |p| {
                let cyc: Vec<usize> = std::iter::once(0).chain(p.iter().copied()).collect();
                if (0..n).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % n])) {
                    exists = true;
                }
            });
            prop_assert_eq!(found.is_some(), exists);
            if let Some(c) = found {
                prop_assert_eq!(c.len(), n);
                for i in 0..n {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % n]));
                }
            }
        }
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }
}
