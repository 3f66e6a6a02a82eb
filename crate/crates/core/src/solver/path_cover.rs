//! Exact minimum vertex-disjoint path cover.
//!
//! `ends[mask]` holds the vertices at which a Hamiltonian path of
//! `G[mask]` can end; a second pass covers each mask by peeling off the
//! path through its lowest vertex.

use crate::graph::{Bits, Graph};

use super::SolveError;

pub const PATH_COVER_MAX_VERTICES: usize = 16;

/// A minimum set of vertex-disjoint paths of `g` covering all vertices.
/// Its size never exceeds the independence number.
pub fn path_cover(g: &Graph) -> Result<Vec<Vec<usize>>, SolveError> {
    let n = g.vertex_count();
    if n > PATH_COVER_MAX_VERTICES {
        return Err(SolveError::TooLarge { n, cap: PATH_COVER_MAX_VERTICES });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).0 as u32).collect();
    let size = 1usize << n;
    let mut ends = vec![0u32; size];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..size {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in Bits(e as u64) {
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let mut cover = vec![u8::MAX; size];
    let mut choice = vec![0u32; size];
    cover[0] = 0;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // submasks of `rest`, each joined with the lowest vertex
        let mut sub = rest;
        loop {
            let part = sub | low;
            if ends[part] != 0 {
                let c = cover[mask ^ part].saturating_add(1);
                if c < cover[mask] {
                    cover[mask] = c;
                    choice[mask] = part as u32;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut paths = Vec::new();
    let mut mask = size - 1;
    while mask != 0 {
        let part = choice[mask] as usize;
        paths.push(trace_path(&adj, &ends, part));
        mask ^= part;
    }
    Ok(paths)
}

/// Recovers one Hamiltonian path of `G[mask]`.
fn trace_path(adj: &[u32], ends: &[u32], mask: usize) -> Vec<usize> {
    let mut path = Vec::new();
    let mut mask = mask;
    let mut v = ends[mask].trailing_zeros() as usize;
    loop {
        path.push(v);
        let rest = mask & !(1 << v);
        if rest == 0 {
            break;
        }
        let prev = ends[rest] & adj[v];
        v = prev.trailing_zeros() as usize;
        mask = rest;
    }
    path.reverse();
    path
}
