use super::{Bits, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    pub edge_count: usize,
    /// Number of cut vertices of the whole graph lying in this block.
    pub degree: usize,
}

impl Block {
    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.vertices.contains(u) && self.vertices.contains(v)
    }
}

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// cut vertices. Blocks are ordered by their sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Index of the unique block holding edge `uv`.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.edge_count > 0 && b.contains_edge(u, v))
    }
}

struct Lowpoint<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

const UNSEEN: usize = usize::MAX;

impl Lowpoint<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in self.g.neighbors(u) {
            if self.disc[w] == UNSEEN {
                children += 1;
                self.stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != UNSEEN {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        if parent == UNSEEN && children > 1 {
            self.cuts.insert(u);
        }
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut lp = Lowpoint {
        g,
        disc: vec![UNSEEN; n],
        low: vec![UNSEEN; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if lp.disc[v] == UNSEEN {
            if g.degree(v) == 0 {
                lp.disc[v] = lp.time;
                lp.time += 1;
                lp.blocks.push(VertexSet::singleton(v));
            } else {
                lp.visit(v, UNSEEN);
            }
        }
    }
    let cuts = lp.cuts;
    let mut sets = lp.blocks;
    sets.sort_by_key(|s| s.to_vec());
    let blocks = sets
        .into_iter()
        .map(|vertices| Block {
            vertices,
            edge_count: vertices
                .iter()
                .map(|v| (g.adjacency()[v] & vertices.0).count_ones() as usize)
                .sum::<usize>()
                / 2,
            degree: vertices.intersection(cuts).len(),
        })
        .collect();
    BlockDecomposition {
        blocks,
        cut_vertices: cuts,
    }
}

/// Branches of `g` at `x`: `G[V(H') + x]` for every component `H'` of `g - x`.
pub fn branches_at(g: &Graph, x: usize) -> Result<Vec<Graph>, GraphError> {
    if x >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange { v: x, n: g.vertex_count() });
    }
    let rest = g.vertices().difference(VertexSet::singleton(x));
    let comps = g.components_within(rest);
    if comps.is_empty() {
        return Ok(vec![g.clone()]);
    }
    Ok(comps
        .into_iter()
        .map(|c| g.induced_by(c.union(VertexSet::singleton(x))))
        .collect())
}

/// Looks for an induced path `x - y - z` that is a proper induced subgraph
/// of `f`. Returns `None` when `f` is trivial at `x`, i.e. `f` is that path
/// itself or lies inside `N[x]`.
pub fn is_nontrivial_at(f: &Graph, x: usize) -> Result<Option<[usize; 3]>, GraphError> {
    if x >= f.vertex_count() {
        return Err(GraphError::VertexOutOfRange { v: x, n: f.vertex_count() });
    }
    if !f.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if f.vertex_count() <= 3 {
        return Ok(None);
    }
    let outer = f.vertices().difference(f.closed_neighbors(x));
    for y in f.neighbors(x) {
        if let Some(z) = Bits(f.adjacency()[y] & outer.0).next() {
            return Ok(Some([x, y, z]));
        }
    }
    Ok(None)
}
