//! Even subgraphs, [2,2s]-factors and s-trails.
//!
//! A [2,2s]-factor is stored as an [`EvenFactor`]: an edge subset of a host
//! graph (usually a square) in which every vertex has even degree. Its trail
//! view is a [`Trail`], a vertex sequence whose consecutive pairs are
//! pairwise distinct edges.

use std::fmt;

use thiserror::Error;

use crate::graph::{Bits, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrailError {
    #[error("{0}-{1} is not an edge of the host graph")]
    EdgeNotInHost(usize, usize),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} used twice")]
    RepeatedEdge(usize, usize),
    #[error("factors live on different host graphs")]
    HostMismatch,
    #[error("vertex {0} has odd degree")]
    OddDegree(usize),
    #[error("edge set is disconnected")]
    Disconnected,
    #[error("edge set is empty")]
    Empty,
    #[error("vertex {vertex} visited {visits} times, bound is {bound}")]
    VisitBound { vertex: usize, visits: usize, bound: usize },
    #[error("trail is not closed")]
    NotClosed,
    #[error("an Euler walk must start at an odd vertex when two exist (start {0})")]
    BadStart(usize),
}

/// A set of edges on a fixed vertex range, one neighbour bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    adj: Vec<u64>,
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.edges()).finish()
    }
}

impl EdgeSet {
    pub fn new(n: usize) -> Self {
        EdgeSet { adj: vec![0; n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, TrailError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = EdgeSet::new(n);
        for (u, v) in edges {
            set.check(u, v)?;
            if !set.insert(u, v) {
                return Err(TrailError::RepeatedEdge(u.min(v), u.max(v)));
            }
        }
        Ok(set)
    }

    /// All edges of `g`.
    pub fn of_graph(g: &Graph) -> Self {
        EdgeSet {
            adj: (0..g.vertex_count()).map(|v| g.neighbors(v).0).collect(),
        }
    }

    fn check(&self, u: usize, v: usize) -> Result<(), TrailError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(TrailError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(TrailError::SelfLoop(u));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Returns `false` if the edge was already present.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        let fresh = self.adj[u] >> v & 1 == 0;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        fresh
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn toggle(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < 64 && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn len(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.iter().all(|&a| a == 0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.adj.len()).flat_map(move |u| Bits(self.adj[u] & (u64::MAX << u << 1)).map(move |v| (u, v)))
    }

    /// Vertices with at least one incident edge.
    pub fn touched(&self) -> VertexSet {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn odd_vertices(&self) -> VertexSet {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &a)| a.count_ones() % 2 == 1)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_subset_of(&self, host: &Graph) -> bool {
        self.adj.len() == host.vertex_count()
            && self.adj.iter().enumerate().all(|(v, &a)| a & !host.neighbors(v).0 == 0)
    }

    pub fn xor(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect(),
        }
    }

    /// Vertices reachable from `start` along edges of the set.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// All edges lie in a single component (vacuously true when empty).
    pub fn is_connected(&self) -> bool {
        let touched = self.touched();
        match touched.first() {
            None => true,
            Some(v) => touched.is_subset(self.component_of(v)),
        }
    }

    /// Edges with exactly one end in `k`.
    pub fn boundary(&self, k: VertexSet) -> Vec<(usize, usize)> {
        self.edges()
            .filter(|&(u, v)| k.contains(u) != k.contains(v))
            .collect()
    }
}

/// `∂_H(K)`: edges of `h` with exactly one end in `k`.
pub fn boundary(h: &Graph, k: VertexSet) -> Vec<(usize, usize)> {
    h.edges()
        .filter(|&(u, v)| k.contains(u) != k.contains(v))
        .collect()
}

/// An even edge subset of a host graph.
#[derive(Clone, PartialEq, Eq)]
pub struct EvenFactor {
    host: Graph,
    edges: EdgeSet,
}

impl fmt::Debug for EvenFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EvenFactor({:?})", self.edges)
    }
}

impl EvenFactor {
    pub fn new(host: Graph, edges: EdgeSet) -> Result<Self, TrailError> {
        if edges.vertex_count() != host.vertex_count() {
            return Err(TrailError::HostMismatch);
        }
        if let Some((u, v)) = edges.edges().find(|&(u, v)| !host.has_edge(u, v)) {
            return Err(TrailError::EdgeNotInHost(u, v));
        }
        if let Some(v) = edges.odd_vertices().first() {
            return Err(TrailError::OddDegree(v));
        }
        Ok(EvenFactor { host, edges })
    }

    pub fn empty(host: Graph) -> Self {
        let edges = EdgeSet::new(host.vertex_count());
        EvenFactor { host, edges }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.degree(v)
    }

    pub fn verify(&self, s: usize) -> VerificationReport {
        verify_factor(&self.host, &self.edges, s).expect("factor edges lie in host")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerificationReport {
    /// Every host vertex has an incident factor edge.
    pub spanning: bool,
    pub connected: bool,
    pub even: bool,
    pub degree_bounded: bool,
    pub max_degree: usize,
}

impl VerificationReport {
    /// Whether the edge set is a [2,2s]-factor.
    pub fn is_valid(&self) -> bool {
        self.spanning && self.connected && self.even && self.degree_bounded
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "spanning={} connected={} even={} max-degree={} ({})",
            self.spanning,
            self.connected,
            self.even,
            self.max_degree,
            if self.degree_bounded { "ok" } else { "too large" }
        )
    }
}

/// Checks whether `edges` is a [2,2s]-factor of `host`.
pub fn verify_factor(host: &Graph, edges: &EdgeSet, s: usize) -> Result<VerificationReport, TrailError> {
    if edges.vertex_count() != host.vertex_count() {
        return Err(TrailError::HostMismatch);
    }
    if let Some((u, v)) = edges.edges().find(|&(u, v)| !host.has_edge(u, v)) {
        return Err(TrailError::EdgeNotInHost(u, v));
    }
    let max_degree = (0..edges.vertex_count()).map(|v| edges.degree(v)).max().unwrap_or(0);
    Ok(VerificationReport {
        spanning: edges.touched() == host.vertices(),
        connected: !edges.is_empty() && edges.is_connected(),
        even: edges.odd_vertices().is_empty(),
        degree_bounded: max_degree <= 2 * s,
        max_degree,
    })
}

/// A trail as a vertex sequence `u_0 u_1 .. u_r`; the edges `u_{i-1}u_i` are
/// pairwise distinct. Closed iff `u_0 = u_r`; a single vertex is a closed
/// trail with no edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trail {
    vertices: Vec<usize>,
}

impl fmt::Debug for Trail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trail{:?}", self.vertices)
    }
}

impl fmt::Display for Trail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Trail {
    pub fn new(vertices: Vec<usize>) -> Result<Self, TrailError> {
        if vertices.is_empty() {
            return Err(TrailError::Empty);
        }
        let n = vertices.iter().max().unwrap() + 1;
        let mut used = EdgeSet::new(n);
        for w in vertices.windows(2) {
            used.check(w[0], w[1])?;
            if !used.insert(w[0], w[1]) {
                return Err(TrailError::RepeatedEdge(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        Ok(Trail { vertices })
    }

    pub fn single(v: usize) -> Self {
        Trail { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    /// Number of visits to `v`; the closing occurrence of a closed trail
    /// is not counted separately.
    pub fn visits(&self, v: usize) -> usize {
        let body = if self.is_closed() && self.vertices.len() > 1 {
            &self.vertices[..self.vertices.len() - 1]
        } else {
            &self.vertices[..]
        };
        body.iter().filter(|&&w| w == v).count()
    }

    pub fn max_visits(&self) -> usize {
        self.vertices.iter().map(|&v| self.visits(v)).max().unwrap_or(0)
    }

    /// Vertices appearing on the trail.
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn reversed(&self) -> Trail {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Trail { vertices }
    }

    /// Re-roots a closed trail at its first occurrence of `v`.
    pub fn rotated_to(&self, v: usize) -> Option<Trail> {
        if !self.is_closed() {
            return None;
        }
        let body = &self.vertices[..self.vertices.len() - 1];
        let at = body.iter().position(|&w| w == v)?;
        let mut vertices: Vec<usize> = body[at..].iter().chain(&body[..at]).copied().collect();
        vertices.push(v);
        Some(Trail { vertices })
    }

    pub fn edge_set(&self, n: usize) -> EdgeSet {
        let mut set = EdgeSet::new(n);
        for (u, v) in self.edges() {
            set.insert(u, v);
        }
        set
    }

    pub fn check_in(&self, host: &Graph) -> Result<(), TrailError> {
        for &v in &self.vertices {
            if v >= host.vertex_count() {
                return Err(TrailError::VertexOutOfRange { v, n: host.vertex_count() });
            }
        }
        match self.edges().find(|&(u, v)| !host.has_edge(u, v)) {
            Some((u, v)) => Err(TrailError::EdgeNotInHost(u, v)),
            None => Ok(()),
        }
    }

    pub fn check_visits(&self, s: usize) -> Result<(), TrailError> {
        for &v in &self.vertices {
            let visits = self.visits(v);
            if visits > s {
                return Err(TrailError::VisitBound { vertex: v, visits, bound: s });
            }
        }
        Ok(())
    }
}

/// Euler walk through all of `edges`, starting at `start` (stack-based
/// Hierholzer, smallest neighbour first). With two odd vertices the walk
/// is open and `start` must be one of them.
pub fn euler_walk(edges: &EdgeSet, start: usize) -> Result<Trail, TrailError> {
    let odd = edges.odd_vertices();
    match odd.len() {
        0 => {}
        2 if odd.contains(start) => {}
        2 => return Err(TrailError::BadStart(start)),
        _ => return Err(TrailError::OddDegree(odd.difference(VertexSet::singleton(start)).first().unwrap())),
    }
    let mut rem = edges.adj.clone();
    let mut stack = vec![start];
    let mut out = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        if rem[v] != 0 {
            let w = rem[v].trailing_zeros() as usize;
            rem[v] &= !(1 << w);
            rem[w] &= !(1 << v);
            stack.push(w);
        } else {
            out.push(v);
            stack.pop();
        }
    }
    if out.len() != edges.len() + 1 {
        return Err(TrailError::Disconnected);
    }
    out.reverse();
    Ok(Trail { vertices: out })
}

/// Closed Euler tour of a connected even factor, rooted at its lowest vertex.
pub fn factor_to_trail(f: &EvenFactor, s: usize) -> Result<Trail, TrailError> {
    let start = f.edges.touched().first().ok_or(TrailError::Empty)?;
    let trail = euler_walk(&f.edges, start)?;
    trail.check_visits(s)?;
    Ok(trail)
}

pub fn trail_to_factor(t: &Trail, host: &Graph) -> Result<EvenFactor, TrailError> {
    if !t.is_closed() {
        return Err(TrailError::NotClosed);
    }
    t.check_in(host)?;
    EvenFactor::new(host.clone(), t.edge_set(host.vertex_count()))
}

pub fn symmetric_difference(a: &EvenFactor, b: &EvenFactor) -> Result<EvenFactor, TrailError> {
    if a.host != b.host {
        return Err(TrailError::HostMismatch);
    }
    Ok(EvenFactor {
        host: a.host.clone(),
        edges: a.edges.xor(&b.edges),
    })
}

/// Joins trails end to end inside a host graph.
///
/// Consecutive pieces either share the junction vertex or are linked by a
/// connector edge, which must be a host edge not used before.
pub struct TrailBuilder<'a> {
    host: &'a Graph,
    seq: Vec<usize>,
    used: EdgeSet,
}

impl<'a> TrailBuilder<'a> {
    pub fn new(host: &'a Graph) -> Self {
        TrailBuilder {
            host,
            seq: Vec::new(),
            used: EdgeSet::new(host.vertex_count()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.seq.last().copied()
    }

    fn step(&mut self, v: usize) -> Result<(), TrailError> {
        if v >= self.host.vertex_count() {
            return Err(TrailError::VertexOutOfRange { v, n: self.host.vertex_count() });
        }
        if let Some(&u) = self.seq.last() {
            if !self.host.has_edge(u, v) {
                return Err(TrailError::EdgeNotInHost(u, v));
            }
            if !self.used.insert(u, v) {
                return Err(TrailError::RepeatedEdge(u.min(v), u.max(v)));
            }
        }
        self.seq.push(v);
        Ok(())
    }

    pub fn push_vertex(&mut self, v: usize) -> Result<&mut Self, TrailError> {
        self.step(v)?;
        Ok(self)
    }

    pub fn push_trail(&mut self, t: &Trail) -> Result<&mut Self, TrailError> {
        let skip = usize::from(self.last() == Some(t.first()));
        for &v in &t.vertices[skip..] {
            self.step(v)?;
        }
        Ok(self)
    }

    fn checked(self, s: usize) -> Result<Trail, TrailError> {
        if self.seq.is_empty() {
            return Err(TrailError::Empty);
        }
        let trail = Trail { vertices: self.seq };
        trail.check_visits(s)?;
        Ok(trail)
    }

    /// Returns the trail as built (open unless it already returned to its start).
    pub fn finish(self, s: usize) -> Result<Trail, TrailError> {
        self.checked(s)
    }

    /// Adds the closing edge back to the first vertex when needed.
    pub fn close(mut self, s: usize) -> Result<Trail, TrailError> {
        let first = *self.seq.first().ok_or(TrailError::Empty)?;
        if self.seq.len() > 1 && self.last() != Some(first) {
            self.step(first)?;
        }
        self.checked(s)
    }
}

/// Concatenates `parts` in order; see [`TrailBuilder`].
pub fn concat_trails(parts: &[Trail], host: &Graph, s: usize) -> Result<Trail, TrailError> {
    let mut b = TrailBuilder::new(host);
    for p in parts {
        b.push_trail(p)?;
    }
    b.finish(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn es(n: usize, e: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn c4_in_k4() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(Graph::cycle(4).unwrap().square(), k4);
        let c4 = es(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(verify_factor(&k4, &c4, 1).unwrap().is_valid());
    }

    #[test]
    fn missing_vertex_is_not_spanning() {
        let k4 = Graph::complete(4).unwrap();
        let tri = es(4, &[(0, 1), (1, 2), (0, 2)]);
        let r = verify_factor(&k4, &tri, 1).unwrap();
        assert!(!r.spanning);
        assert!(r.connected && r.even && r.degree_bounded);
        assert!(!r.is_valid());
    }

    #[test]
    fn star_square_with_degree_four() {
        // K_{1,5}: center 0, leaves 1..=5; its square is K6.
        let host = Graph::star(5).unwrap().square();
        let t = Trail::new(vec![0, 1, 2, 3, 0, 4, 5, 0]).unwrap();
        let f = trail_to_factor(&t, &host).unwrap();
        let r = f.verify(2);
        assert!(r.is_valid());
        assert_eq!(r.max_degree, 4);
        assert_eq!(f.degree(0), 4);
        assert!(!f.verify(1).is_valid());
    }

    #[test]
    fn edge_outside_host() {
        let p3 = Graph::path(3).unwrap();
        let e = es(3, &[(0, 2)]);
        assert_eq!(verify_factor(&p3, &e, 1), Err(TrailError::EdgeNotInHost(0, 2)));
    }

    #[test]
    fn euler_tours() {
        let k3 = Graph::complete(3).unwrap();
        let f = EvenFactor::new(k3.clone(), EdgeSet::of_graph(&k3)).unwrap();
        let t = factor_to_trail(&f, 1).unwrap();
        assert_eq!(t.vertices(), &[0, 1, 2, 0]);
        assert_eq!(t.max_visits(), 1);

        // bowtie: triangles {0,1,2} and {2,3,4}
        let bow = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let f = EvenFactor::new(bow.clone(), EdgeSet::of_graph(&bow)).unwrap();
        let t = factor_to_trail(&f, 2).unwrap();
        assert_eq!(t.edge_count(), 6);
        assert!(t.is_closed());
        assert_eq!(t.visits(2), 2);
        assert_eq!(factor_to_trail(&f, 1), Err(TrailError::VisitBound { vertex: 2, visits: 2, bound: 1 }));
        assert_eq!(trail_to_factor(&t, &bow).unwrap(), f);

        let c5 = Graph::cycle(5).unwrap();
        let f = EvenFactor::new(c5.clone(), EdgeSet::of_graph(&c5)).unwrap();
        assert_eq!(factor_to_trail(&f, 1).unwrap().vertices(), &[0, 1, 2, 3, 4, 0]);
    }

    #[test]
    fn factor_to_trail_rejects_bad_input() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let f = EvenFactor::new(g.clone(), EdgeSet::of_graph(&g)).unwrap();
        assert_eq!(factor_to_trail(&f, 1), Err(TrailError::Disconnected));
        assert_eq!(factor_to_trail(&EvenFactor::empty(g), 1), Err(TrailError::Empty));
        let p3 = Graph::path(3).unwrap();
        assert_eq!(EvenFactor::new(p3.clone(), EdgeSet::of_graph(&p3)), Err(TrailError::OddDegree(0)));
    }

    #[test]
    fn symmetric_difference_examples() {
        let k4 = Graph::complete(4).unwrap();
        let t1 = EvenFactor::new(k4.clone(), es(4, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        let t2 = EvenFactor::new(k4.clone(), es(4, &[(0, 2), (2, 3), (0, 3)])).unwrap();
        assert!(symmetric_difference(&t1, &t1).unwrap().edges().is_empty());
        assert_eq!(symmetric_difference(&t1, &EvenFactor::empty(k4.clone())).unwrap(), t1);
        let sq = symmetric_difference(&t1, &t2).unwrap();
        assert_eq!(sq.edges().edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let other = EvenFactor::empty(Graph::cycle(4).unwrap());
        assert_eq!(symmetric_difference(&t1, &other), Err(TrailError::HostMismatch));
    }

    #[test]
    fn boundary_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(boundary(&k4, VertexSet::singleton(0)).len(), 3);
        assert!(boundary(&k4, k4.vertices()).is_empty());
    }

    #[test]
    fn concatenation() {
        let k5 = Graph::complete(5).unwrap();
        let a = Trail::new(vec![0, 1, 2]).unwrap();
        let b = Trail::new(vec![2, 3, 4]).unwrap();
        let t = concat_trails(&[a.clone(), b.clone()], &k5, 1).unwrap();
        assert_eq!(t.vertices(), &[0, 1, 2, 3, 4]);

        let closed = Trail::new(vec![0, 1, 2, 0]).unwrap();
        let open = Trail::new(vec![0, 3, 4]).unwrap();
        let t = concat_trails(&[closed, open], &k5, 2).unwrap();
        assert_eq!(t.vertices(), &[0, 1, 2, 0, 3, 4]);
        assert!(!t.is_closed());

        // connector edge 2-3 joins disjoint pieces
        let c = Trail::new(vec![3, 4]).unwrap();
        let t = concat_trails(&[a.clone(), c], &k5, 1).unwrap();
        assert_eq!(t.vertices(), &[0, 1, 2, 3, 4]);

        // visit bound at the junction
        let again = Trail::new(vec![2, 0, 3]).unwrap();
        assert!(matches!(
            concat_trails(&[a.clone(), again], &k5, 1),
            Err(TrailError::VisitBound { vertex: 0, .. })
        ));
        // connector missing from host
        let p5 = Graph::path(5).unwrap();
        let d = Trail::new(vec![4]).unwrap();
        assert_eq!(concat_trails(&[a.clone(), d], &p5, 1), Err(TrailError::EdgeNotInHost(2, 4)));
        // repeated edge
        let back = Trail::new(vec![2, 1]).unwrap();
        assert_eq!(concat_trails(&[a, back], &k5, 2), Err(TrailError::RepeatedEdge(1, 2)));
    }

    #[test]
    fn builder_closes() {
        let k4 = Graph::complete(4).unwrap();
        let mut b = TrailBuilder::new(&k4);
        b.push_vertex(0).unwrap().push_trail(&Trail::new(vec![1, 2]).unwrap()).unwrap();
        b.push_vertex(3).unwrap();
        let t = b.close(1).unwrap();
        assert_eq!(t.vertices(), &[0, 1, 2, 3, 0]);
        let f = trail_to_factor(&t, &k4).unwrap();
        assert!(f.verify(1).is_valid());
    }

    #[test]
    fn trail_helpers() {
        let t = Trail::new(vec![0, 1, 2, 0, 3, 4, 0]).unwrap();
        assert_eq!(t.visits(0), 2);
        let r = t.rotated_to(3).unwrap();
        assert_eq!(r.vertices(), &[3, 4, 0, 1, 2, 0, 3]);
        assert_eq!(r.edge_set(5), t.edge_set(5));
        assert_eq!(Trail::single(4).visits(4), 1);
        assert!(Trail::single(4).is_closed());
        assert_eq!(Trail::new(vec![0, 1, 0]), Err(TrailError::RepeatedEdge(0, 1)));
    }

    /// Random even subgraph of K_n as a union (xor) of random cycles.
    fn random_even(n: usize, cycles: &[Vec<usize>]) -> EdgeSet {
        let mut e = EdgeSet::new(n);
        for c in cycles {
            let mut vs: Vec<usize> = c.iter().map(|&v| v % n).collect();
            vs.sort();
            vs.dedup();
            if vs.len() >= 3 {
                for i in 0..vs.len() {
                    e.toggle(vs[i], vs[(i + 1) % vs.len()]);
                }
            }
        }
        e
    }

    proptest! {
        #[test]
        fn cut_meets_even_graph_evenly(
            n in 3usize..12,
            cycles in proptest::collection::vec(proptest::collection::vec(0usize..12, 3..8), 1..5),
            k in any::<u64>(),
        ) {
            let e = random_even(n, &cycles);
            prop_assert!(e.odd_vertices().is_empty());
            let k = VertexSet(k).intersection(VertexSet::full(n));
            prop_assert_eq!(e.boundary(k).len() % 2, 0);
        }

        #[test]
        fn xor_keeps_evenness(
            n in 3usize..12,
            a in proptest::collection::vec(proptest::collection::vec(0usize..12, 3..8), 1..4),
            b in proptest::collection::vec(proptest::collection::vec(0usize..12, 3..8), 1..4),
        ) {
            let host = Graph::complete(n).unwrap();
            let fa = EvenFactor::new(host.clone(), random_even(n, &a)).unwrap();
            let fb = EvenFactor::new(host.clone(), random_even(n, &b)).unwrap();
            let x = symmetric_difference(&fa, &fb).unwrap();
            prop_assert!(x.edges().odd_vertices().is_empty());
        }

        #[test]
        fn euler_round_trip(
            n in 3usize..10,
            cycles in proptest::collection::vec(proptest::collection::vec(0usize..10, 3..8), 1..4),
        ) {
            let host = Graph::complete(n).unwrap();
            let e = random_even(n, &cycles);
            prop_assume!(!e.is_empty() && e.is_connected());
            let f = EvenFactor::new(host.clone(), e.clone()).unwrap();
            let s = (0..n).map(|v| e.degree(v)).max().unwrap() / 2;
            let t = factor_to_trail(&f, s).unwrap();
            prop_assert!(t.max_visits() <= s);
            let back = trail_to_factor(&t, &host).unwrap();
            prop_assert_eq!(back.edges(), &e);
        }
    }
}
