//! Exhaustive labeled graph enumeration.
//!
//! Graph number `mask` on `n` vertices has edge `k` (pairs `(u, v)`, `u < v`,
//! in lexicographic order) exactly when bit `k` of `mask` is set.

use crate::graph::Graph;

use super::HarnessError;

/// Largest order for which exhaustive enumeration is offered.
pub const ENUMERATE_MAX_VERTICES: usize = 7;

/// Vertex pairs in the bit order used by [`graph_from_mask`].
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::new(n).expect("enumerated order is small");
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(u, v).expect("pairs are valid");
        }
    }
    g
}

fn check(n: usize) -> Result<(), HarnessError> {
    if n > ENUMERATE_MAX_VERTICES {
        return Err(HarnessError::TooLarge { n, cap: ENUMERATE_MAX_VERTICES });
    }
    Ok(())
}

/// Number of graphs [`enumerate_all`] yields.
pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// All labeled simple graphs on `n` vertices, by ascending edge mask.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    check(n)?;
    let pairs = pairs(n);
    Ok((0..mask_count(n)).map(move |mask| graph_from_mask(n, &pairs, mask)))
}

/// All labeled connected simple graphs on `n` vertices, by ascending edge mask.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    Ok(enumerate_all(n)?.filter(|g| g.is_connected()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Connected labeled graphs by the exponential-formula recurrence
    /// `c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)`.
    fn connected_counts(max: usize) -> Vec<u64> {
        let binom = |n: usize, k: usize| -> u64 {
            (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
        };
        let all = |n: usize| 1u64 << (n * n.saturating_sub(1) / 2);
        let mut c = vec![0u64; max + 1];
        for n in 1..=max {
            let mut rest = 0;
            for k in 1..n {
                rest += binom(n - 1, k - 1) * c[k] * all(n - k);
            }
            c[n] = all(n) - rest;
        }
        c
    }

    #[test]
    fn counts_match_recurrence() {
        let expected = connected_counts(6);
        assert_eq!(&expected[1..], &[1, 1, 4, 38, 728, 26704]);
        for n in 1..=6 {
            assert_eq!(enumerate_connected(n).unwrap().count() as u64, expected[n], "n = {n}");
        }
    }

    #[test]
    fn no_duplicates() {
        let mut seen: Vec<Vec<(usize, usize)>> = enumerate_connected(5).unwrap().map(|g| g.edges().collect()).collect();
        let len = seen.len();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), len);
    }

    #[test]
    fn all_graphs_and_cap() {
        assert_eq!(enumerate_all(4).unwrap().count(), 64);
        assert_eq!(enumerate_all(0).unwrap().count(), 1);
        assert!(matches!(enumerate_connected(8), Err(HarnessError::TooLarge { .. })));
    }
}
