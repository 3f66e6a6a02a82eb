//! Exhaustive [2,2s]-factor search.
//!
//! Vertices are processed in a fixed order; at each vertex the search picks
//! which of its edges to later vertices join the factor, so that the vertex
//! ends with an even degree in `[2, 2s]`. Branches die when some later
//! vertex can no longer reach degree 2 or when a finished component does
//! not span the graph.

use crate::graph::{Bits, Graph};
use crate::trails::{EdgeSet, EvenFactor};

use super::SolveError;

pub const ORACLE_MAX_VERTICES: usize = 20;

/// Some [2,2s]-factor of `host`, or `None` when none exists.
pub fn oracle_factor(host: &Graph, s: usize) -> Result<Option<EvenFactor>, SolveError> {
    if s < 1 {
        return Err(SolveError::InvalidS);
    }
    let n = host.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(SolveError::TooLarge { n, cap: ORACLE_MAX_VERTICES });
    }
    if n < 3 || (0..n).any(|v| host.degree(v) < 2) || !host.is_connected() {
        return Ok(None);
    }
    let adj: Vec<u64> = (0..n).map(|v| host.neighbors(v).0).collect();
    let order = search_order(&adj);
    let mut search = Search {
        adj: &adj,
        order,
        cap: 2 * s,
        all: host.vertices().0,
        deg: vec![0; n],
        chosen: vec![0; n],
        processed: 0,
        full: 0,
    };
    if !search.run(0) {
        return Ok(None);
    }
    let mut edges = EdgeSet::new(n);
    for u in 0..n {
        for v in Bits(search.chosen[u]) {
            edges.insert(u, v);
        }
    }
    Ok(Some(EvenFactor::new(host.clone(), edges).expect("search keeps degrees even")))
}

/// Oracle on the square of `g`.
pub fn oracle_square_factor(g: &Graph, s: usize) -> Result<Option<EvenFactor>, SolveError> {
    oracle_factor(&g.square(), s)
}

/// Minimum-degree start, then repeatedly the vertex with the most ordered
/// neighbours (ties: lower degree, lower id).
fn search_order(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let deg = |v: usize| adj[v].count_ones();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    let first = (0..n).min_by_key(|&v| (deg(v), v)).unwrap();
    order.push(first);
    placed |= 1 << first;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| (std::cmp::Reverse((adj[v] & placed).count_ones()), deg(v), v))
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    order
}

struct Search<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    cap: usize,
    all: u64,
    deg: Vec<usize>,
    chosen: Vec<u64>,
    processed: u64,
    /// Vertices whose degree already equals the cap.
    full: u64,
}

impl Search<'_> {
    fn run(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        let d = self.deg[v];
        let forward = self.adj[v] & !self.processed & !self.full & !(1 << v);
        let avail = forward.count_ones() as usize;
        let lo = 2usize.saturating_sub(d);
        let hi = self.cap.saturating_sub(d).min(avail);
        let mut k = lo + (d + lo) % 2;
        while k <= hi {
            if self.try_size(i, v, forward, k) {
                return true;
            }
            k += 2;
        }
        false
    }

    /// Tries every subset of `forward` of size `k` (Gosper order).
    fn try_size(&mut self, i: usize, v: usize, forward: u64, k: usize) -> bool {
        let bits: Vec<usize> = Bits(forward).collect();
        let f = bits.len();
        if k == 0 {
            return self.apply_and_recurse(i, v, 0);
        }
        let mut c: u64 = (1 << k) - 1;
        while c < 1 << f {
            let mut subset = 0u64;
            for j in Bits(c) {
                subset |= 1 << bits[j];
            }
            if self.apply_and_recurse(i, v, subset) {
                return true;
            }
            let t = c | (c - 1);
            c = (t + 1) | (((!t & (t + 1)) - 1) >> (c.trailing_zeros() + 1));
        }
        false
    }

    fn apply_and_recurse(&mut self, i: usize, v: usize, subset: u64) -> bool {
        let k = subset.count_ones() as usize;
        self.deg[v] += k;
        self.chosen[v] |= subset;
        for w in Bits(subset) {
            self.deg[w] += 1;
            self.chosen[w] |= 1 << v;
            if self.deg[w] == self.cap {
                self.full |= 1 << w;
            }
        }
        self.processed |= 1 << v;
        let ok = self.feasible(v) && self.run(i + 1);
        if !ok {
            self.processed &= !(1 << v);
            for w in Bits(subset) {
                self.deg[w] -= 1;
                self.chosen[w] &= !(1 << v);
                self.full &= !(1 << w);
            }
            self.chosen[v] &= !subset;
            self.deg[v] -= k;
        }
        ok
    }

    fn feasible(&self, v: usize) -> bool {
        let open = !self.processed & self.all;
        for w in Bits(self.adj[v] & open) {
            let reach = (self.adj[w] & open & !(1 << w) & !self.full).count_ones() as usize;
            if self.deg[w] < self.cap && self.deg[w] + reach < 2 {
                return false;
            }
        }
        // the component of v is finished once it contains no open vertex
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.chosen[u];
            }
            next &= !comp;
            comp |= next;
            frontier = next;
        }
        comp & open != 0 || comp == self.all
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::make_star_subdivision;
    use crate::trails::verify_factor;
    use proptest::prelude::*;

    /// Enumerates every edge subset of `host`; only for tiny hosts.
    fn brute_has_factor(host: &Graph, s: usize) -> bool {
        let edges: Vec<(usize, usize)> = host.edges().collect();
        let n = host.vertex_count();
        (0u64..1 << edges.len()).any(|mask| {
            let set = EdgeSet::from_edges(n, Bits(mask).map(|i| edges[i])).unwrap();
            verify_factor(host, &set, s).unwrap().is_valid()
        })
    }

    #[test]
    fn star_square_has_no_factor() {
        let g = make_star_subdivision(1).unwrap();
        assert!(oracle_square_factor(&g, 1).unwrap().is_none());
        assert!(oracle_square_factor(&g, 2).unwrap().is_some());
    }

    #[test]
    fn path_square_is_hamiltonian() {
        let p4 = Graph::path(4).unwrap();
        let f = oracle_square_factor(&p4, 1).unwrap().unwrap();
        assert!(f.verify(1).is_valid());
        // a-c-d-b-a for a-b-c-d
        let expected = EdgeSet::from_edges(4, [(0, 2), (2, 3), (3, 1), (1, 0)]).unwrap();
        assert_eq!(f.edges(), &expected);
    }

    #[test]
    fn small_hosts() {
        assert!(oracle_factor(&Graph::complete(2).unwrap(), 1).unwrap().is_none());
        assert!(oracle_factor(&Graph::path(5).unwrap(), 3).unwrap().is_none());
        assert!(oracle_factor(&Graph::cycle(5).unwrap(), 1).unwrap().is_some());
        assert_eq!(oracle_factor(&Graph::cycle(5).unwrap(), 0), Err(SolveError::InvalidS));
        assert!(matches!(
            oracle_factor(&Graph::new(21).unwrap(), 1),
            Err(SolveError::TooLarge { .. })
        ));
        // bowtie needs degree 4 at the shared vertex
        let bow = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(oracle_factor(&bow, 1).unwrap().is_none());
        let f = oracle_factor(&bow, 2).unwrap().unwrap();
        assert_eq!(f.degree(2), 4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_subset_enumeration(n in 3usize..7, bits in proptest::collection::vec(prop::bool::weighted(0.5), 15), s in 1usize..3) {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let found = oracle_factor(&g, s).unwrap();
            if let Some(f) = &found {
                prop_assert!(verify_factor(&g, f.edges(), s).unwrap().is_valid());
            }
            prop_assert_eq!(found.is_some(), brute_has_factor(&g, s));
        }
    }
}
