//! Trails of `H^2` recovered from a factor of `(HxP)^2`, where `P` is a
//! short path hanging at `x`.
//!
//! The host of the factor is `square(h.with_pendant_path(x, k))`: the
//! vertices of `h` keep their ids, `y = |V(h)|` and (for `k = 2`)
//! `z = |V(h)| + 1`.

use crate::graph::{Graph, VertexSet};
use crate::trails::{euler_walk, verify_factor, EdgeSet, EvenFactor, Trail};

use super::{internal, SolveError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeKind {
    /// A spanning closed trail rooted at `x`, with `x` of degree at most `2s-2`.
    ClosedAtRoot,
    /// A spanning open trail ending at a neighbour of `x`.
    OpenToNeighbor,
}

/// The components `K_i` of `F - {y, z}` and the repair matchings `M_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSplit {
    /// `K_0` holds `x`; the others follow by smallest vertex.
    pub components: Vec<VertexSet>,
    pub root_index: usize,
    /// `N_F(y) - z`.
    pub w: VertexSet,
    /// `W ∩ V(K_i)`.
    pub w_parts: Vec<VertexSet>,
    pub matchings: Vec<Vec<(usize, usize)>>,
    /// Vertices of each `W_i` left uncovered by `M_i`, ascending.
    pub unmatched: Vec<Vec<usize>>,
}

impl ComponentSplit {
    /// `|W_i|` is odd exactly for `i = 0` and no `W_i` is empty.
    pub fn root_parity_holds(&self) -> bool {
        self.w_parts
            .iter()
            .enumerate()
            .all(|(i, p)| !p.is_empty() && (p.len() % 2 == 1) == (i == self.root_index))
    }

    /// Every `W_i` is nonempty and even.
    pub fn all_even(&self) -> bool {
        self.w_parts.iter().all(|p| !p.is_empty() && p.len() % 2 == 0)
    }

    fn matchings_leave(&self, count: impl Fn(usize) -> usize) -> bool {
        self.w_parts.iter().enumerate().all(|(i, part)| {
            let mut covered = VertexSet::EMPTY;
            for &(a, b) in &self.matchings[i] {
                if covered.contains(a) || covered.contains(b) || !part.contains(a) || !part.contains(b) {
                    return false;
                }
                covered.insert(a);
                covered.insert(b);
            }
            let left: VertexSet = self.unmatched[i].iter().copied().collect();
            left.len() == count(i) && covered.union(left) == *part && covered.intersection(left).is_empty()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailOutcome {
    pub kind: OutcomeKind,
    /// Starts at `x` (at `x'` for the single-edge variant).
    pub trail: Trail,
    pub split: ComponentSplit,
}

impl TrailOutcome {
    fn common(&self, h: &Graph, s: usize) -> bool {
        self.trail.vertex_set() == h.vertices()
            && self.trail.check_in(&h.square()).is_ok()
            && self.trail.check_visits(s).is_ok()
    }

    /// Contract of [`lemma4_extract`].
    pub fn satisfies_lemma4(&self, h: &Graph, x: usize, s: usize) -> bool {
        let shape = match self.kind {
            OutcomeKind::ClosedAtRoot => {
                self.trail.is_closed()
                    && self.trail.first() == x
                    && self.trail.edge_set(h.vertex_count()).degree(x) + 2 <= 2 * s
            }
            OutcomeKind::OpenToNeighbor => {
                !self.trail.is_closed() && self.trail.first() == x && h.has_edge(x, self.trail.last())
            }
        };
        shape
            && self.common(h, s)
            && self.split.root_parity_holds()
            && self.split.matchings_leave(|i| if i == 0 { 1 } else { 2 })
    }

    /// Contract of [`lemma5_extract`].
    pub fn satisfies_lemma5(&self, h: &Graph, x: usize, s: usize) -> bool {
        let first = self.trail.first();
        self.kind == OutcomeKind::OpenToNeighbor
            && !self.trail.is_closed()
            && h.closed_neighbors(x).contains(first)
            && h.has_edge(x, self.trail.last())
            && self.common(h, s)
            && self.split.all_even()
            && self.split.matchings_leave(|_| 2)
    }
}

struct Prepared {
    /// `F` restricted to `V(h)`.
    inner: EdgeSet,
    w: VertexSet,
    components: Vec<VertexSet>,
}

fn prepare(h: &Graph, x: usize, s: usize, f: &EvenFactor, tail: usize) -> Result<Prepared, SolveError> {
    let n = h.vertex_count();
    if x >= n {
        return Err(SolveError::VertexOutOfRange(x));
    }
    let expected = h.with_pendant_path(x, tail)?.square();
    if f.host().unlabeled() != expected.unlabeled() {
        return Err(SolveError::HostMismatch);
    }
    let report = verify_factor(f.host(), f.edges(), s)?;
    if !report.is_valid() {
        return Err(SolveError::InvalidFactor(report));
    }
    let inner = EdgeSet::from_edges(n, f.edges().edges().filter(|&(u, v)| u < n && v < n))?;
    let w = f.edges().neighbors(n).intersection(h.vertices());
    let mut components = Vec::new();
    let mut rest = h.vertices();
    while let Some(v) = rest.first() {
        let c = inner.component_of(v);
        rest = rest.difference(c);
        components.push(c);
    }
    let root = components.iter().position(|c| c.contains(x)).unwrap();
    let k0 = components.remove(root);
    components.insert(0, k0);
    Ok(Prepared { inner, w, components })
}

/// Matching on `w` leaving exactly `leave` vertices uncovered, using as
/// few edges of `f` as possible; ties go to the lexicographically
/// smallest edge list.
fn choose_matching(w: &[usize], leave: usize, f: &EdgeSet) -> Option<(Vec<(usize, usize)>, Vec<usize>)> {
    fn walk(
        rest: &[usize],
        leave: usize,
        cur: &mut Vec<(usize, usize)>,
        un: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[(usize, usize)], &[usize]),
    ) {
        let Some((&a, tail)) = rest.split_first() else {
            if leave == 0 {
                visit(cur, un);
            }
            return;
        };
        if leave > 0 {
            un.push(a);
            walk(tail, leave - 1, cur, un, visit);
            un.pop();
        }
        for j in 0..tail.len() {
            let b = tail[j];
            let remaining: Vec<usize> = tail[..j].iter().chain(&tail[j + 1..]).copied().collect();
            cur.push((a, b));
            walk(&remaining, leave, cur, un, visit);
            cur.pop();
        }
    }
    let mut best: Option<(usize, Vec<(usize, usize)>, Vec<usize>)> = None;
    walk(w, leave, &mut Vec::new(), &mut Vec::new(), &mut |m, un| {
        let used = m.iter().filter(|&&(a, b)| f.contains(a, b)).count();
        let better = match &best {
            None => true,
            Some((c, bm, bu)) => (used, m, un) < (*c, bm.as_slice(), bu.as_slice()),
        };
        if better {
            best = Some((used, m.to_vec(), un.to_vec()));
        }
    });
    best.map(|(_, m, un)| (m, un))
}

/// Applies `K_i △ M_i` to every component and checks each stays connected.
fn repair(
    prep: &Prepared,
    leave: impl Fn(usize) -> usize,
) -> Result<(EdgeSet, Vec<VertexSet>, Vec<Vec<(usize, usize)>>, Vec<Vec<usize>>), SolveError> {
    let mut t = prep.inner.clone();
    let mut parts = Vec::new();
    let mut matchings = Vec::new();
    let mut unmatched = Vec::new();
    for (i, comp) in prep.components.iter().enumerate() {
        let part = prep.w.intersection(*comp);
        let (m, un) = choose_matching(&part.to_vec(), leave(i), &prep.inner)
            .ok_or_else(|| internal(format!("no matching leaving {} of {:?}", leave(i), part)))?;
        for &(a, b) in &m {
            t.toggle(a, b);
        }
        parts.push(part);
        matchings.push(m);
        unmatched.push(un);
    }
    for comp in &prep.components {
        let v = comp.first().unwrap();
        if comp.len() > 1 && t.component_of(v) != *comp {
            return Err(internal(format!("repaired component {comp:?} is disconnected")));
        }
    }
    Ok((t, parts, matchings, unmatched))
}

fn finish_trail(h: &Graph, s: usize, t: &Trail) -> Result<(), SolveError> {
    if t.vertex_set() != h.vertices() {
        return Err(internal("extracted trail is not spanning"));
    }
    t.check_in(&h.square()).map_err(|e| internal(format!("extracted trail leaves the square: {e}")))?;
    t.check_visits(s).map_err(|e| internal(format!("extracted trail: {e}")))?;
    Ok(())
}

/// Trail of `h^2` from a [2,2s]-factor `f` of `(hxP)^2`, `P = x-y-z`:
/// either closed at `x` with `x` of degree at most `2s-2`, or open from
/// `x` to a neighbour of `x`.
pub fn lemma4_extract(h: &Graph, x: usize, s: usize, f: &EvenFactor) -> Result<TrailOutcome, SolveError> {
    let prep = prepare(h, x, s, f, 2)?;
    let (mut t, parts, matchings, unmatched) = {
        let parity_ok = prep.components.iter().enumerate().all(|(i, c)| {
            let k = prep.w.intersection(*c).len();
            k > 0 && (k % 2 == 1) == (i == 0)
        });
        if !parity_ok {
            return Err(internal("parity of W_i violated"));
        }
        repair(&prep, |i| if i == 0 { 1 } else { 2 })?
    };
    let ell = prep.components.len() - 1;
    let u0 = unmatched[0][0];
    let mut end = u0;
    for i in 1..=ell {
        let (v, u) = (unmatched[i][0], unmatched[i][1]);
        t.insert(end, v);
        end = u;
    }
    let split = ComponentSplit {
        components: prep.components,
        root_index: 0,
        w: prep.w,
        w_parts: parts,
        matchings,
        unmatched,
    };
    let (kind, trail) = if ell == 0 && u0 == x {
        let trail = if t.is_empty() { Trail::single(x) } else { euler_walk(&t, x)? };
        if t.degree(x) + 2 > 2 * s {
            return Err(internal("root degree exceeds 2s-2 in closed outcome"));
        }
        (OutcomeKind::ClosedAtRoot, trail)
    } else {
        let trail = euler_walk(&t, x)?;
        if trail.last() != end || !h.has_edge(x, end) {
            return Err(internal(format!("open trail ends at {} instead of a neighbour", trail.last())));
        }
        (OutcomeKind::OpenToNeighbor, trail)
    };
    finish_trail(h, s, &trail)?;
    Ok(TrailOutcome { kind, trail, split })
}

/// Open trail of `h^2` between some `x'` in `N[x]` and some `x''` in
/// `N(x)`, from a [2,2s]-factor `f` of `(hxP)^2` with `P = x-y`.
pub fn lemma5_extract(h: &Graph, x: usize, s: usize, f: &EvenFactor) -> Result<TrailOutcome, SolveError> {
    let prep = prepare(h, x, s, f, 1)?;
    if prep.components.iter().any(|c| {
        let k = prep.w.intersection(*c).len();
        k == 0 || k % 2 == 1
    }) {
        return Err(internal("parity of W_i violated"));
    }
    let (mut t, parts, matchings, unmatched) = repair(&prep, |_| 2)?;
    let v0 = unmatched[0][0];
    let mut end = unmatched[0][1];
    for pair in &unmatched[1..] {
        t.insert(end, pair[0]);
        end = pair[1];
    }
    let (from, to) = if end != x { (v0, end) } else { (end, v0) };
    let trail = euler_walk(&t, from)?;
    if trail.last() != to || !h.closed_neighbors(x).contains(from) || !h.has_edge(x, to) {
        return Err(internal("single-edge extraction produced wrong endpoints"));
    }
    finish_trail(h, s, &trail)?;
    Ok(TrailOutcome {
        kind: OutcomeKind::OpenToNeighbor,
        trail,
        split: ComponentSplit {
            components: prep.components,
            root_index: 0,
            w: prep.w,
            w_parts: parts,
            matchings,
            unmatched,
        },
    })
}
