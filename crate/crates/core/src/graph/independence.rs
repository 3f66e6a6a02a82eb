//! Exact maximum independent set by branch and bound.
//!
//! Searches for a maximum clique of the complement, bounding each node by
//! a greedy colouring of the candidate set (colour classes are cliques of
//! the original graph, so each contributes at most one vertex).

use super::{Graph, GraphError, VertexSet};

pub const INDEPENDENCE_MAX_VERTICES: usize = 40;

pub fn independence_number(g: &Graph) -> Result<usize, GraphError> {
    max_independent_set(g).map(VertexSet::len)
}

pub fn max_independent_set(g: &Graph) -> Result<VertexSet, GraphError> {
    let n = g.vertex_count();
    if n > INDEPENDENCE_MAX_VERTICES {
        return Err(GraphError::TooLarge { n, cap: INDEPENDENCE_MAX_VERTICES });
    }
    let all = g.vertices().0;
    let comp: Vec<u64> = (0..n).map(|v| !g.adjacency()[v] & all & !(1 << v)).collect();
    let mut best = Best { size: 0, set: 0 };
    expand(&comp, all, 0, 0, &mut best);
    Ok(VertexSet(best.set))
}

struct Best {
    size: usize,
    set: u64,
}

/// Greedy sequential colouring in the complement; returns vertices in
/// colour order together with their colour numbers (1-based).
fn colour_sort(comp: &[u64], cand: u64, order: &mut Vec<usize>, colours: &mut Vec<usize>) {
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !comp[v];
            uncoloured &= !(1 << v);
            order.push(v);
            colours.push(colour);
        }
    }
}

fn expand(comp: &[u64], mut cand: u64, size: usize, current: u64, best: &mut Best) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    colour_sort(comp, cand, &mut order, &mut colours);
    for i in (0..order.len()).rev() {
        if size + colours[i] <= best.size {
            return;
        }
        let v = order[i];
        let next = cand & comp[v];
        let with_v = current | 1 << v;
        if next == 0 {
            if size + 1 > best.size {
                best.size = size + 1;
                best.set = with_v;
            }
        } else {
            expand(comp, next, size + 1, with_v, best);
        }
        cand &= !(1 << v);
    }
}

/// Reference implementation by subset enumeration; exponential, test use only.
#[cfg(test)]
pub(crate) fn brute_independence_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter(|&s| super::Bits(s).all(|v| g.adjacency()[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert_eq!(independence_number(&Graph::complete(4).unwrap()).unwrap(), 1);
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()).unwrap(), 2);
        let sk13 = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(brute_independence_number(&sk13), 4);
        assert_eq!(independence_number(&sk13).unwrap(), 4);
        assert_eq!(independence_number(&Graph::new(0).unwrap()).unwrap(), 0);
        assert_eq!(independence_number(&Graph::new(5).unwrap()).unwrap(), 5);
    }

    #[test]
    fn returned_set_is_independent() {
        let g = Graph::cycle(9).unwrap();
        let s = max_independent_set(&g).unwrap();
        assert_eq!(s.len(), 4);
        for v in s {
            assert!(g.neighbors(v).intersection(s).is_empty());
        }
    }

    #[test]
    fn cap() {
        let g = Graph::new(41).unwrap();
        assert!(matches!(independence_number(&g), Err(GraphError::TooLarge { .. })));
        let g = Graph::cycle(40).unwrap();
        assert_eq!(independence_number(&g).unwrap(), 20);
    }

    proptest! {
        #[test]
        fn agrees_with_subset_enumeration(n in 0usize..=16, bits in proptest::collection::vec(any::<bool>(), 120)) {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let set = max_independent_set(&g).unwrap();
            for v in set {
                prop_assert!(g.neighbors(v).intersection(set).is_empty());
            }
            prop_assert_eq!(set.len(), brute_independence_number(&g));
        }
    }
}
