//! Induced subdivided stars `S(K_{1,2s+1})` and the block condition.

use std::fmt;

use thiserror::Error;

use crate::graph::{block_decomposition, BlockDecomposition, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("s must be at least 1")]
    InvalidS,
    #[error("graph is disconnected")]
    Disconnected,
}

/// An induced copy of `S(K_{1,2s+1})`: a center and `2s+1` (middle, leaf)
/// arms, middles in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarEmbedding {
    pub center: usize,
    pub arms: Vec<(usize, usize)>,
    pub s: usize,
}

impl StarEmbedding {
    pub fn vertices(&self) -> VertexSet {
        let mut set = VertexSet::singleton(self.center);
        for &(m, l) in &self.arms {
            set.insert(m);
            set.insert(l);
        }
        set
    }

    /// The `2(2s+1)` edges, center edges and leaf edges interleaved per arm.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.arms
            .iter()
            .flat_map(|&(m, l)| [(self.center, m), (m, l)])
            .collect()
    }

    /// Checks that the embedding is an induced `S(K_{1,2s+1})` of `g`.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        if vs.len() != 4 * self.s + 3 || self.arms.len() != 2 * self.s + 1 {
            return false;
        }
        if vs.iter().any(|v| v >= g.vertex_count()) {
            return false;
        }
        let induced = g.induced_by(vs);
        let expected: Vec<(usize, usize)> = {
            let mut e: Vec<(usize, usize)> = self.edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            e.sort();
            e
        };
        let order = vs.to_vec();
        let mut actual: Vec<(usize, usize)> = induced.edges().map(|(a, b)| (order[a], order[b])).collect();
        actual.sort();
        actual == expected
    }

    /// Largest number of star edges inside one block of degree at most two.
    pub fn max_edges_in_low_degree_block(&self, bd: &BlockDecomposition) -> usize {
        self.low_degree_block_counts(bd).into_iter().map(|(_, c)| c).max().unwrap_or(0)
    }

    /// First block of degree at most two holding at least three star edges.
    pub fn supporting_block(&self, bd: &BlockDecomposition) -> Option<usize> {
        self.low_degree_block_counts(bd)
            .into_iter()
            .find(|&(_, c)| c >= 3)
            .map(|(b, _)| b)
    }

    fn low_degree_block_counts(&self, bd: &BlockDecomposition) -> Vec<(usize, usize)> {
        let mut counts = vec![0; bd.blocks.len()];
        for (u, v) in self.edges() {
            if let Some(b) = bd.block_of_edge(u, v) {
                counts[b] += 1;
            }
        }
        counts
            .into_iter()
            .enumerate()
            .filter(|&(b, c)| c > 0 && bd.blocks[b].degree <= 2)
            .collect()
    }
}

impl fmt::Display for StarEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "center {} arms", self.center)?;
        for (m, l) in &self.arms {
            write!(f, " ({m},{l})")?;
        }
        Ok(())
    }
}

/// `S(K_{1,2s+1})` with center 0, middles `1..=2s+1`, leaf of middle `i`
/// at `i + 2s + 1`.
pub fn make_star_subdivision(s: usize) -> Result<Graph, PatternError> {
    if s < 1 {
        return Err(PatternError::InvalidS);
    }
    let k = 2 * s + 1;
    let mut g = Graph::new(2 * k + 1).map_err(|_| PatternError::InvalidS)?;
    for i in 1..=k {
        g.add_edge(0, i).unwrap();
        g.add_edge(i, i + k).unwrap();
    }
    Ok(g)
}

struct StarSearch<'a> {
    g: &'a Graph,
    k: usize,
    s: usize,
    limit: usize,
    found: Vec<StarEmbedding>,
}

impl StarSearch<'_> {
    /// `blocked`: closed neighbourhoods of every chosen middle and leaf.
    fn arms(&mut self, c: usize, arms: &mut Vec<(usize, usize)>, blocked: VertexSet, next: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if arms.len() == self.k {
            self.found.push(StarEmbedding {
                center: c,
                arms: arms.clone(),
                s: self.s,
            });
            return;
        }
        let near_c = self.g.closed_neighbors(c);
        let middles = self.g.neighbors(c).difference(blocked);
        let need = self.k - arms.len();
        let mut remaining = VertexSet(middles.0 & (u64::MAX << next));
        while let Some(m) = remaining.first() {
            if remaining.len() < need {
                return;
            }
            remaining.remove(m);
            let leaves = self.g.neighbors(m).difference(near_c).difference(blocked);
            for l in leaves {
                let b = blocked
                    .union(self.g.closed_neighbors(m))
                    .union(self.g.closed_neighbors(l));
                arms.push((m, l));
                self.arms(c, arms, b, m + 1);
                arms.pop();
                if self.found.len() >= self.limit {
                    return;
                }
            }
        }
    }
}

/// Induced copies of `S(K_{1,2s+1})` in `g`, centers ascending, each copy
/// once with middles ascending. Stops after `limit` copies when given.
pub fn find_induced_stars(g: &Graph, s: usize, limit: Option<usize>) -> Vec<StarEmbedding> {
    if s < 1 {
        return Vec::new();
    }
    let k = 2 * s + 1;
    let mut search = StarSearch {
        g,
        k,
        s,
        limit: limit.unwrap_or(usize::MAX),
        found: Vec::new(),
    };
    for c in 0..g.vertex_count() {
        if g.degree(c) >= k {
            search.arms(c, &mut Vec::with_capacity(k), VertexSet::EMPTY, 0);
        }
        if search.found.len() >= search.limit {
            break;
        }
    }
    search.found
}

pub fn is_star_free(g: &Graph, s: usize) -> bool {
    g.max_degree() < 2 * s + 1 || find_induced_stars(g, s, Some(1)).is_empty()
}

/// Outcome of [`satisfies_block_condition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCondition {
    pub holds: bool,
    /// Embeddings with fewer than three edges in every block of degree at most two.
    pub violators: Vec<StarEmbedding>,
}

/// Whether every induced `S(K_{1,2s+1})` has three edges in one block of
/// degree at most two.
pub fn satisfies_block_condition(g: &Graph, s: usize) -> Result<BlockCondition, PatternError> {
    if s < 1 {
        return Err(PatternError::InvalidS);
    }
    if !g.is_connected() {
        return Err(PatternError::Disconnected);
    }
    let stars = find_induced_stars(g, s, None);
    if stars.is_empty() {
        return Ok(BlockCondition { holds: true, violators: Vec::new() });
    }
    let bd = block_decomposition(g);
    let violators: Vec<StarEmbedding> = stars.into_iter().filter(|e| e.supporting_block(&bd).is_none()).collect();
    Ok(BlockCondition {
        holds: violators.is_empty(),
        violators,
    })
}
