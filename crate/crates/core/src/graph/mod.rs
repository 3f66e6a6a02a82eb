//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex. Every vertex also
//! carries an opaque label so that vertex identity survives induced
//! subgraphs, branches and gluing.

mod blocks;
mod independence;

pub use blocks::{block_decomposition, branches_at, is_nontrivial_at, Block, BlockDecomposition};
pub use independence::{independence_number, max_independent_set, INDEPENDENCE_MAX_VERTICES};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Hard limit imposed by the bitset representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, more than the supported {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate vertex {0} in vertex list")]
    DuplicateVertex(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("contracted pairs are not disjoint (vertex {0} repeats)")]
    PairsNotDisjoint(usize),
    #[error("glued graphs must share exactly one label, found {0}")]
    GlueOverlap(usize),
    #[error("label {0} not present in graph")]
    MissingLabel(usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// A set of vertex ids, backed by a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.vertex_count())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices, labelled `0..n`.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n, cap: MAX_VERTICES });
        }
        Ok(Graph {
            adj: vec![0; n],
            labels: (0..n).collect(),
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).0 & !(1 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Result<Self, GraphError> {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.vertex_count() })
        }
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.vertex_count() && v < self.vertex_count() {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && v < 64 && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |u| Bits(self.adj[u] & (u64::MAX << u << 1)).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: usize) {
        self.labels[v] = label;
    }

    pub fn vertex_with_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Same edges, labels reset to vertex ids.
    pub fn unlabeled(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            labels: (0..self.vertex_count()).collect(),
        }
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.component_within(v, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True for the empty graph and for every connected graph.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.component_within(0, self.vertices()) == self.vertices()
    }

    /// Whether `G - v` is connected.
    pub fn is_connected_without(&self, v: usize) -> bool {
        let rest = self.vertices().difference(VertexSet::singleton(v));
        match rest.first() {
            None => true,
            Some(start) => self.component_within(start, rest) == rest,
        }
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let rest = self.vertices().difference(VertexSet::singleton(v));
        let before = self.components().len();
        let after = self.components_within(rest).len();
        after > before
    }

    /// 2-connected in the block sense: connected, at least 3 vertices,
    /// no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.is_connected() && (0..n).all(|v| self.is_connected_without(v))
    }

    /// The square: `u ~ v` iff `1 <= dist(u, v) <= 2`. Labels are kept.
    pub fn square(&self) -> Graph {
        let adj = (0..self.vertex_count())
            .map(|v| {
                let mut reach = self.adj[v];
                for w in Bits(self.adj[v]) {
                    reach |= self.adj[w];
                }
                reach & !(1 << v)
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced by `vertices`, in the given order; labels are carried over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(GraphError::DuplicateVertex(v));
            }
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                Bits(self.adj[v])
                    .filter(|&w| index[w] != usize::MAX)
                    .fold(0u64, |acc, w| acc | 1 << index[w])
            })
            .collect();
        Ok(Graph {
            adj,
            labels: vertices.iter().map(|&v| self.labels[v]).collect(),
        })
    }

    /// Subgraph induced by a vertex set, vertices in ascending order.
    pub fn induced_by(&self, set: VertexSet) -> Graph {
        self.induced_subgraph(&set.to_vec())
            .expect("vertex set drawn from this graph")
    }

    /// Appends a path `x - y_1 - ... - y_len` of new vertices `n, .., n+len-1`.
    /// The new vertices get labels past the current maximum label.
    pub fn with_pendant_path(&self, x: usize, len: usize) -> Result<Graph, GraphError> {
        self.check_vertex(x)?;
        let n = self.vertex_count();
        if n + len > MAX_VERTICES {
            return Err(GraphError::TooLarge { n: n + len, cap: MAX_VERTICES });
        }
        let mut g = self.clone();
        let next_label = self.labels.iter().max().map_or(0, |&l| l + 1);
        let mut prev = x;
        for i in 0..len {
            g.adj.push(0);
            g.labels.push(next_label + i);
            g.add_edge(prev, n + i)?;
            prev = n + i;
        }
        Ok(g)
    }
}

/// `G1 x G2`: union of two graphs whose label sets meet exactly in `x`.
///
/// Vertices of `g1` keep their ids; the remaining vertices of `g2` follow
/// in their original order.
pub fn glue(g1: &Graph, g2: &Graph, x: usize) -> Result<Graph, GraphError> {
    let shared: Vec<usize> = g2
        .labels()
        .iter()
        .copied()
        .filter(|l| g1.labels().contains(l))
        .collect();
    if shared.len() != 1 {
        return Err(GraphError::GlueOverlap(shared.len()));
    }
    if shared[0] != x {
        return Err(GraphError::MissingLabel(x));
    }
    let n1 = g1.vertex_count();
    let x1 = g1.vertex_with_label(x).ok_or(GraphError::MissingLabel(x))?;
    let x2 = g2.vertex_with_label(x).ok_or(GraphError::MissingLabel(x))?;
    let n = n1 + g2.vertex_count() - 1;
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { n, cap: MAX_VERTICES });
    }
    let map: Vec<usize> = (0..g2.vertex_count())
        .map(|v| match v.cmp(&x2) {
            std::cmp::Ordering::Less => n1 + v,
            std::cmp::Ordering::Equal => x1,
            std::cmp::Ordering::Greater => n1 + v - 1,
        })
        .collect();
    let mut g = g1.clone();
    for v in 0..g2.vertex_count() {
        if v != x2 {
            g.adj.push(0);
            g.labels.push(g2.label(v));
        }
    }
    for (u, v) in g2.edges() {
        g.add_edge(map[u], map[v])?;
    }
    Ok(g)
}

/// Result of [`contract_pairs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `members[w]` lists the original vertices merged into `w`.
    pub members: Vec<Vec<usize>>,
}

/// Contracts each edge of `pairs` to a single vertex.
///
/// The contracted vertices come first (in the order of `pairs`), followed
/// by the untouched vertices in ascending order. Loops and parallel edges
/// are dropped.
pub fn contract_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Contraction, GraphError> {
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    let mut members = Vec::new();
    for (i, &(u, v)) in pairs.iter().enumerate() {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        for w in [u, v] {
            if owner[w] != usize::MAX {
                return Err(GraphError::PairsNotDisjoint(w));
            }
            owner[w] = i;
        }
        members.push(vec![u, v]);
    }
    for v in 0..n {
        if owner[v] == usize::MAX {
            owner[v] = members.len();
            members.push(vec![v]);
        }
    }
    let mut out = Graph::new(members.len())?;
    for (i, group) in members.iter().enumerate() {
        out.labels[i] = g.label(group[0]);
    }
    for (u, v) in g.edges() {
        if owner[u] != owner[v] {
            out.add_edge(owner[u], owner[v])?;
        }
    }
    Ok(Contraction { graph: out, members })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk13() -> Graph {
        // center 0, middles 1..=3, leaves 4..=6
        Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    /// Distance matrix by repeated BFS, independent of `square`.
    fn brute_square(g: &Graph) -> Vec<(usize, usize)> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            let dist = g.distances_from(u);
            for v in u + 1..n {
                if matches!(dist[v], Some(1) | Some(2)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[test]
    fn square_of_p3_is_triangle() {
        let sq = Graph::path(3).unwrap().square();
        assert_eq!(sq, Graph::complete(3).unwrap());
    }

    #[test]
    fn square_of_single_vertex() {
        let sq = Graph::new(1).unwrap().square();
        assert_eq!(sq.vertex_count(), 1);
        assert_eq!(sq.edge_count(), 0);
    }

    #[test]
    fn square_of_subdivided_claw() {
        let g = sk13();
        let sq = g.square();
        assert_eq!(sq.edges().collect::<Vec<_>>(), brute_square(&g));
        for v in 1..7 {
            assert!(sq.has_edge(0, v));
        }
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            assert!(sq.has_edge(a, b));
        }
        for (m, l) in [(1, 4), (2, 5), (3, 6)] {
            assert!(sq.has_edge(m, l));
        }
        for (a, b) in [(4, 5), (4, 6), (5, 6), (1, 5), (1, 6), (2, 4), (2, 6), (3, 4), (3, 5)] {
            assert!(!sq.has_edge(a, b), "{a}-{b}");
        }
    }

    #[test]
    fn induced_subgraph_cases() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.induced_subgraph(&[0, 1, 2]).unwrap().unlabeled(), Graph::complete(3).unwrap());
        assert_eq!(k4.induced_subgraph(&[]).unwrap().vertex_count(), 0);
        let c5 = Graph::cycle(5).unwrap();
        let p = c5.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p.unlabeled(), Graph::path(3).unwrap());
        assert_eq!(p.labels(), &[1, 2, 3]);
        assert_eq!(k4.induced_subgraph(&[0, 7]), Err(GraphError::VertexOutOfRange { v: 7, n: 4 }));
        assert_eq!(k4.induced_subgraph(&[1, 1]), Err(GraphError::DuplicateVertex(1)));
    }

    #[test]
    fn glue_examples() {
        // edges x-a and x-b, labels: x = 0
        let e1 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let mut e2 = e1.clone();
        e2.set_label(1, 7);
        let mut e1b = e1.clone();
        e1b.set_label(1, 5);
        let p = glue(&e1b, &e2, 0).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.degree(0), 2);

        let tri = Graph::complete(3).unwrap();
        let mut pendant = Graph::from_edges(2, [(0, 1)]).unwrap();
        pendant.set_label(0, 2);
        pendant.set_label(1, 9);
        let g = glue(&tri, &pendant, 2).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2), (2, 3)]);

        assert_eq!(glue(&tri, &tri, 0), Err(GraphError::GlueOverlap(3)));
    }

    #[test]
    fn glue_matches_pendant_path() {
        let h = Graph::cycle(5).unwrap();
        let mut p3 = Graph::path(3).unwrap();
        p3.set_label(0, 2);
        p3.set_label(1, 5);
        p3.set_label(2, 6);
        let glued = glue(&h, &p3, 2).unwrap();
        assert_eq!(glued, h.with_pendant_path(2, 2).unwrap());
    }

    #[test]
    fn contraction_examples() {
        let k3 = Graph::complete(3).unwrap();
        let c = contract_pairs(&k3, &[(0, 1)]).unwrap();
        assert_eq!(c.graph.unlabeled(), Graph::complete(2).unwrap());
        assert_eq!(c.members, vec![vec![0, 1], vec![2]]);

        let p4 = Graph::path(4).unwrap();
        let c = contract_pairs(&p4, &[(1, 2)]).unwrap();
        assert_eq!(c.graph.vertex_count(), 3);
        assert_eq!(c.graph.edge_count(), 2);
        assert_eq!(c.graph.degree(0), 2);

        // C4 0-1-2-3-0, matching {01, 23}: the two merged vertices are adjacent.
        let c4 = Graph::cycle(4).unwrap();
        let c = contract_pairs(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(c.graph.unlabeled(), Graph::complete(2).unwrap());

        assert_eq!(contract_pairs(&c4, &[(0, 2)]), Err(GraphError::NotAnEdge(0, 2)));
        assert_eq!(contract_pairs(&c4, &[(0, 1), (1, 2)]), Err(GraphError::PairsNotDisjoint(1)));
    }

    #[test]
    fn size_cap() {
        assert!(Graph::new(64).is_ok());
        assert_eq!(Graph::new(65), Err(GraphError::TooLarge { n: 65, cap: 64 }));
    }

    #[test]
    fn connectivity_helpers() {
        let p4 = Graph::path(4).unwrap();
        assert!(p4.is_connected());
        assert!(p4.is_cut_vertex(1));
        assert!(!p4.is_cut_vertex(0));
        assert!(!p4.is_biconnected());
        assert!(Graph::cycle(4).unwrap().is_biconnected());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_connected());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut g = Graph::new(n).unwrap();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                g.add_edge(u, v).unwrap();
                            }
                            k += 1;
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn square_is_distance_two_closure(g in arb_graph()) {
                let sq = g.square();
                prop_assert_eq!(sq.edges().collect::<Vec<_>>(), brute_square(&g));
                for (u, v) in g.edges() {
                    prop_assert!(sq.has_edge(u, v));
                }
            }

            #[test]
            fn glue_counts(a in arb_graph(), b in arb_graph()) {
                let mut b = b;
                let offset = a.vertex_count();
                for v in 0..b.vertex_count() {
                    b.set_label(v, offset + v);
                }
                b.set_label(0, 0);
                if a.vertex_count() + b.vertex_count() - 1 <= MAX_VERTICES {
                    let g = glue(&a, &b, 0).unwrap();
                    prop_assert_eq!(g.vertex_count(), a.vertex_count() + b.vertex_count() - 1);
                    prop_assert_eq!(g.edge_count(), a.edge_count() + b.edge_count());
                }
            }
        }
    }
}
