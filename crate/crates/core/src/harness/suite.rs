//! Property runner.
//!
//! Each property sweeps enumerated or seeded random graphs, checks every
//! answer with code that does not share logic with the producer, and
//! tallies instances and failures. Reports are line-oriented:
//!
//! ```text
//! PROPERTY star-free-sweep PASS 1234
//! PROPERTY extraction-fuzz FAIL 1000
//!   failures 2
//!   counterexample s=1 x=0: open trail ends at 3
//!     4 3
//!     0 1
//!     ...
//! ```

use std::fmt;
use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::{independence_number, Graph};
use crate::io::write_graph;
use crate::pattern::{find_induced_stars, is_star_free, make_star_subdivision, satisfies_block_condition};
use crate::solver::{
    fleischner_cycle, lemma4_extract, lemma5_extract, oracle_square_factor, path_cover, solve_condition,
    solve_star_free,
};
use crate::trails::EvenFactor;

use super::enumerate::{graph_from_mask, mask_count, pairs};
use super::fixtures::{all_fixtures, case_g_graph, figure1_graph, Expectation};
use super::random::{random_bounded_degree_with, random_connected_with, random_graph_with, rng};
use super::HarnessError;

/// Counterexamples kept per property.
pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Fixtures,
    Figure1,
    StarFixtures,
    StarFreeSweep,
    ConditionSweep,
    ConditionRandom,
    ConstrainedCycleSweep,
    ExtractionFuzz,
    PathCover,
    BoundedDegree,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::Fixtures,
        Property::Figure1,
        Property::StarFixtures,
        Property::StarFreeSweep,
        Property::ConditionSweep,
        Property::ConditionRandom,
        Property::ConstrainedCycleSweep,
        Property::ExtractionFuzz,
        Property::PathCover,
        Property::BoundedDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Fixtures => "fixtures",
            Property::Figure1 => "figure1-fixture",
            Property::StarFixtures => "star-fixtures",
            Property::StarFreeSweep => "star-free-sweep",
            Property::ConditionSweep => "condition-sweep",
            Property::ConditionRandom => "condition-random",
            Property::ConstrainedCycleSweep => "constrained-cycle-sweep",
            Property::ExtractionFuzz => "extraction-fuzz",
            Property::PathCover => "path-cover",
            Property::BoundedDegree => "bounded-degree",
        }
    }

    pub fn from_name(name: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == name)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub properties: Vec<Property>,
    /// Largest order in the exhaustive sweeps.
    pub max_n: usize,
    pub seed: u64,
    /// Instances with an oracle factor in the extraction fuzz.
    pub fuzz_instances: usize,
    /// Instances in each random property.
    pub random_instances: usize,
    /// Worker threads; `None` reads `SQUAREFACTOR_THREADS`, then uses rayon's default.
    pub threads: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            properties: Property::ALL.to_vec(),
            max_n: 7,
            seed: 1,
            fuzz_instances: 1000,
            random_instances: 200,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub note: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub property: Property,
    pub checked: usize,
    pub failures: usize,
    /// The first failures in sweep order.
    pub counterexamples: Vec<Counterexample>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "PROPERTY {} {verdict} {}", self.property, self.checked)?;
        if !self.passed() {
            writeln!(f, "  failures {}", self.failures)?;
        }
        for c in &self.counterexamples {
            writeln!(f, "  counterexample {}", c.note)?;
            for line in write_graph(&c.graph).lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn get(&self, p: Property) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.property == p)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

fn thread_count(config: &SuiteConfig) -> Result<Option<usize>, HarnessError> {
    if let Some(t) = config.threads {
        return Ok(Some(t));
    }
    match std::env::var("SQUAREFACTOR_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or(HarnessError::Threads(v)),
        Err(_) => Ok(None),
    }
}

/// Runs the configured properties in order.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_count(config)? {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| HarnessError::Threads(e.to_string()))?;
    pool.install(|| {
        let results = config
            .properties
            .iter()
            .map(|&p| run_property(p, config))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SuiteReport { results })
    })
}

/// Runs one property on the current rayon pool.
pub fn run_property(p: Property, config: &SuiteConfig) -> Result<PropertyResult, HarnessError> {
    let sizes = 3..=config.max_n;
    let tally = match p {
        Property::Fixtures => fixtures(),
        Property::Figure1 => figure1(),
        Property::StarFixtures => star_fixtures(),
        Property::StarFreeSweep => sweep(sizes, true, star_free_case),
        Property::ConditionSweep => {
            let mut t = sweep(sizes, true, condition_case);
            t.record(0, case_g_graph(), "case-g", condition_case(&case_g_graph()));
            t
        }
        Property::ConditionRandom => condition_random(config)?,
        Property::ConstrainedCycleSweep => sweep(sizes, true, fleischner),
        Property::ExtractionFuzz => extraction_fuzz(config)?,
        Property::PathCover => {
            let mut t = sweep(1..=config.max_n, false, path_cover_bound);
            t.merge(path_cover_random(config)?);
            t
        }
        Property::BoundedDegree => bounded_degree(config)?,
    };
    Ok(tally.finish(p))
}

enum Verdict {
    Skip,
    Pass,
    Fail(String),
}

fn require(ok: bool, why: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(why())
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    /// Sort key, note, graph.
    examples: Vec<(u64, String, Graph)>,
}

impl Tally {
    fn record(&mut self, key: u64, g: Graph, label: &str, v: Verdict) {
        match v {
            Verdict::Skip => {}
            Verdict::Pass => self.checked += 1,
            Verdict::Fail(why) => {
                self.checked += 1;
                self.failures += 1;
                let note = if label.is_empty() { why } else { format!("{label}: {why}") };
                self.examples.push((key, note, g));
                self.trim();
            }
        }
    }

    fn trim(&mut self) {
        self.examples.sort_by_key(|e| e.0);
        self.examples.truncate(MAX_COUNTEREXAMPLES);
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures += other.failures;
        self.examples.extend(other.examples);
        self.trim();
    }

    fn finish(self, property: Property) -> PropertyResult {
        PropertyResult {
            property,
            checked: self.checked,
            failures: self.failures,
            counterexamples: self
                .examples
                .into_iter()
                .map(|(_, note, graph)| Counterexample { note, graph })
                .collect(),
        }
    }
}

/// Every labeled graph on each order in `sizes`, in parallel.
fn sweep<F>(sizes: RangeInclusive<usize>, connected_only: bool, check: F) -> Tally
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    let mut total = Tally::default();
    for n in sizes {
        let pairs = pairs(n);
        let t = (0..mask_count(n))
            .into_par_iter()
            .fold(Tally::default, |mut t, mask| {
                let g = graph_from_mask(n, &pairs, mask);
                if !connected_only || g.is_connected() {
                    let v = check(&g);
                    t.record((n as u64) << 40 | mask, g, &format!("n={n} mask={mask}"), v);
                }
                t
            })
            .reduce(Tally::default, |mut a, b| {
                a.merge(b);
                a
            });
        total.merge(t);
    }
    total
}

/// Checks a list of generated instances in parallel, keyed by position.
fn check_all<T, F>(instances: Vec<(Graph, String, T)>, check: F) -> Tally
where
    T: Sync,
    F: Fn(&Graph, &T) -> Verdict + Sync,
{
    let verdicts: Vec<Verdict> = instances.par_iter().map(|(g, _, extra)| check(g, extra)).collect();
    let mut t = Tally::default();
    for (i, ((g, label, _), v)) in instances.into_iter().zip(verdicts).enumerate() {
        t.record(i as u64, g, &label, v);
    }
    t
}

// ---- independent checks ----

/// Spanning, connected, even, degrees in `[2, 2s]`, all edges at distance
/// at most two in `g`; recomputed from BFS distances.
fn factor_ok(g: &Graph, f: &EvenFactor, s: usize) -> Result<(), String> {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = f.edges().edges().collect();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| g.distances_from(v)).collect();
    let mut deg = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for &(u, v) in &edges {
        match dist[u][v] {
            Some(1 | 2) => {}
            _ => return Err(format!("edge {u}-{v} is not in the square")),
        }
        deg[u] += 1;
        deg[v] += 1;
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        parent[a] = b;
    }
    for (v, &d) in deg.iter().enumerate() {
        if d < 2 || d > 2 * s || d % 2 == 1 {
            return Err(format!("vertex {v} has degree {d}"));
        }
    }
    let r = root(&mut parent, 0);
    if (0..n).any(|v| root(&mut parent, v) != r) {
        return Err("factor is disconnected".into());
    }
    Ok(())
}

fn solved(g: &Graph, s: usize, result: Result<EvenFactor, crate::solver::SolveError>) -> Verdict {
    let f = match result {
        Ok(f) => f,
        Err(e) => return Verdict::Fail(format!("s={s}: solver failed: {e}")),
    };
    if let Err(why) = factor_ok(g, &f, s) {
        return Verdict::Fail(format!("s={s}: {why}"));
    }
    Verdict::Pass
}

fn oracle_agrees(g: &Graph, s: usize) -> Verdict {
    match oracle_square_factor(g, s) {
        Ok(Some(_)) => Verdict::Pass,
        Ok(None) => Verdict::Fail(format!("s={s}: oracle finds no factor")),
        Err(e) => Verdict::Fail(format!("s={s}: oracle failed: {e}")),
    }
}

fn both(a: Verdict, b: impl FnOnce() -> Verdict) -> Verdict {
    match a {
        Verdict::Pass => b(),
        other => other,
    }
}

// ---- properties ----

fn fixtures() -> Tally {
    let mut t = Tally::default();
    for (i, fx) in all_fixtures().into_iter().enumerate() {
        for (j, e) in fx.expected.iter().enumerate() {
            let g = &fx.graph;
            let actual = match *e {
                Expectation::StarFree { s, .. } => Ok(is_star_free(g, s)),
                Expectation::Condition { s, .. } => satisfies_block_condition(g, s).map(|c| c.holds).map_err(|e| e.to_string()),
                Expectation::FactorExists { s, .. } => {
                    oracle_square_factor(g, s).map(|f| f.is_some()).map_err(|e| e.to_string())
                }
            };
            let want = match *e {
                Expectation::StarFree { holds, .. }
                | Expectation::Condition { holds, .. }
                | Expectation::FactorExists { holds, .. } => holds,
            };
            let v = match actual {
                Ok(a) => require(a == want, || format!("expected {e}, found {a}")),
                Err(why) => Verdict::Fail(why),
            };
            t.record((i * 16 + j) as u64, g.clone(), fx.name, v);
        }
    }
    t
}

fn figure1() -> Tally {
    let g = figure1_graph();
    let mut t = Tally::default();
    let stars = find_induced_stars(&g, 1, None);
    let bd = crate::graph::block_decomposition(&g);
    t.record(0, g.clone(), "oracle", match oracle_square_factor(&g, 1) {
        Ok(None) => Verdict::Pass,
        Ok(Some(_)) => Verdict::Fail("square has a Hamiltonian cycle".into()),
        Err(e) => Verdict::Fail(e.to_string()),
    });
    t.record(1, g.clone(), "stars", require(!stars.is_empty(), || "no induced S(K_{1,3})".into()));
    for (i, star) in stars.iter().enumerate() {
        let most = star.max_edges_in_low_degree_block(&bd);
        t.record(
            2 + i as u64,
            g.clone(),
            "star",
            require(most == 2, || format!("{star} has {most} edges in a block of degree at most two")),
        );
    }
    t
}

fn star_fixtures() -> Tally {
    let mut t = Tally::default();
    for s in [1, 2] {
        let g = make_star_subdivision(s).expect("s >= 1");
        let v = match oracle_square_factor(&g, s) {
            Ok(None) => Verdict::Pass,
            Ok(Some(_)) => Verdict::Fail(format!("s={s}: oracle found a factor")),
            Err(e) => Verdict::Fail(e.to_string()),
        };
        t.record(s as u64, g, &format!("star s={s}"), v);
    }
    t
}

fn star_free_case(g: &Graph) -> Verdict {
    if !is_star_free(g, 1) {
        return Verdict::Skip;
    }
    both(solved(g, 1, solve_star_free(g, 1)), || oracle_agrees(g, 1))
}

fn condition_case(g: &Graph) -> Verdict {
    match satisfies_block_condition(g, 1) {
        Ok(c) if c.holds => both(solved(g, 1, solve_condition(g, 1)), || oracle_agrees(g, 1)),
        Ok(_) => Verdict::Skip,
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

/// `S(K_{1,2s+1})` plus up to `max_n` vertices in total, each new vertex
/// joined to one or two earlier ones, and a few random chords.
fn grown_star(r: &mut ChaCha8Rng, s: usize, max_n: usize) -> Graph {
    let mut g = make_star_subdivision(s).expect("s >= 1");
    let base = g.vertex_count();
    let extra = r.gen_range(0..=max_n.saturating_sub(base));
    for _ in 0..extra {
        let n = g.vertex_count();
        let a = r.gen_range(0..n);
        g = g.with_pendant_path(a, 1).expect("small");
        if r.gen_bool(0.6) {
            let b = r.gen_range(0..n);
            if b != a {
                g.add_edge(b, n).expect("valid");
            }
        }
    }
    let n = g.vertex_count();
    for _ in 0..r.gen_range(0..3) {
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).expect("valid");
        }
    }
    g
}

/// Condition-satisfying graphs that contain an induced subdivided star,
/// found by filtering grown stars.
fn condition_random(config: &SuiteConfig) -> Result<Tally, HarnessError> {
    let mut r = rng(config.seed ^ 0x7432);
    let mut instances = Vec::new();
    for (s, want) in [(1, config.random_instances / 2), (2, config.random_instances / 4)] {
        let mut found = 0;
        let mut attempts = 0;
        while found < want && attempts < 200 * want.max(1) {
            attempts += 1;
            let g = grown_star(&mut r, s, 12);
            if is_star_free(&g, s) || !satisfies_block_condition(&g, s).map(|c| c.holds).unwrap_or(false) {
                continue;
            }
            instances.push((g, format!("s={s} attempt={attempts}"), s));
            found += 1;
        }
    }
    Ok(check_all(instances, |g, &s| both(solved(g, s, solve_condition(g, s)), || oracle_agrees(g, s))))
}

/// Hamiltonian cycle of the square, two edges of `g` at `y`, an edge of
/// `g` at `z` that differs from those.
fn fleischner_ok(g: &Graph, near2: &[Vec<bool>], y: usize, z: usize, cycle: &[usize]) -> Result<(), String> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(format!("cycle {cycle:?} is not a permutation"));
        }
    }
    if cycle.len() != n {
        return Err(format!("cycle {cycle:?} misses vertices"));
    }
    let near = |u: usize, v: usize| near2[u][v];
    let succ = |i: usize| cycle[(i + 1) % n];
    let pred = |i: usize| cycle[(i + n - 1) % n];
    if let Some(i) = (0..n).find(|&i| !near(cycle[i], succ(i))) {
        return Err(format!("{}-{} is not in the square", cycle[i], succ(i)));
    }
    let iy = cycle.iter().position(|&v| v == y).unwrap();
    if !g.has_edge(y, pred(iy)) || !g.has_edge(y, succ(iy)) {
        return Err(format!("cycle leaves y={y} through a non-edge"));
    }
    if y != z {
        let iz = cycle.iter().position(|&v| v == z).unwrap();
        let good = [pred(iz), succ(iz)].into_iter().any(|w| w != y && g.has_edge(z, w));
        if !good {
            return Err(format!("no separate edge of g at z={z}"));
        }
    }
    Ok(())
}

fn fleischner(g: &Graph) -> Verdict {
    if !g.is_biconnected() {
        return Verdict::Skip;
    }
    let n = g.vertex_count();
    let near2: Vec<Vec<bool>> = (0..n)
        .map(|u| g.distances_from(u).into_iter().map(|d| matches!(d, Some(1 | 2))).collect())
        .collect();
    for y in 0..n {
        for z in 0..n {
            let outcome = fleischner_cycle(g, y, z)
                .map_err(|e| e.to_string())
                .and_then(|c| fleischner_ok(g, &near2, y, z, &c));
            if let Err(why) = outcome {
                return Verdict::Fail(format!("y={y} z={z}: {why}"));
            }
        }
    }
    Verdict::Pass
}

struct FuzzCase {
    x: usize,
    s: usize,
    tail: usize,
    factor: EvenFactor,
}

fn extraction_fuzz(config: &SuiteConfig) -> Result<Tally, HarnessError> {
    let mut r = rng(config.seed ^ 0x4c45);
    let mut cases = Vec::new();
    let mut attempts = 0;
    while cases.len() < config.fuzz_instances && attempts < 20 * config.fuzz_instances.max(1) {
        attempts += 1;
        let n = r.gen_range(2..=10);
        let p = r.gen_range(0.15..0.7);
        let h = random_connected_with(&mut r, n, p)?;
        let x = r.gen_range(0..n);
        let s = r.gen_range(1..=2);
        let tail = r.gen_range(1..=2);
        let host = h.with_pendant_path(x, tail)?;
        // the oracle supplies the factor the extraction starts from
        let Ok(Some(factor)) = oracle_square_factor(&host, s) else { continue };
        let label = format!("attempt={attempts} x={x} s={s} tail={tail}");
        cases.push((h, label, FuzzCase { x, s, tail, factor }));
    }
    Ok(check_all(cases, |h, c| {
        let out = if c.tail == 2 {
            lemma4_extract(h, c.x, c.s, &c.factor)
        } else {
            lemma5_extract(h, c.x, c.s, &c.factor)
        };
        match out {
            Ok(o) => {
                let ok = if c.tail == 2 { o.satisfies_lemma4(h, c.x, c.s) } else { o.satisfies_lemma5(h, c.x, c.s) };
                let split = &o.split;
                let parity = if c.tail == 2 { split.root_parity_holds() } else { split.all_even() };
                require(ok && parity, || format!("contract broken by trail {}", o.trail))
            }
            Err(e) => Verdict::Fail(e.to_string()),
        }
    }))
}

fn cover_ok(g: &Graph) -> Verdict {
    let paths = match path_cover(g) {
        Ok(p) => p,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for p in &paths {
        for &v in p {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Verdict::Fail(format!("vertex {v} covered twice"));
            }
        }
        if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return Verdict::Fail(format!("{p:?} is not a path"));
        }
    }
    if seen.iter().any(|&b| !b) {
        return Verdict::Fail("cover misses a vertex".into());
    }
    match independence_number(g) {
        Ok(a) => require(paths.len() <= a, || format!("{} paths but independence number {a}", paths.len())),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn path_cover_bound(g: &Graph) -> Verdict {
    cover_ok(g)
}

fn path_cover_random(config: &SuiteConfig) -> Result<Tally, HarnessError> {
    let mut r = rng(config.seed ^ 0x5043);
    let mut graphs = Vec::new();
    for i in 0..config.random_instances {
        let n = r.gen_range(1..=12);
        let p = r.gen_range(0.1..0.8);
        graphs.push((random_graph_with(&mut r, n, p)?, format!("random {i}"), ()));
    }
    Ok(check_all(graphs, |g, _| cover_ok(g)))
}

fn bounded_degree(config: &SuiteConfig) -> Result<Tally, HarnessError> {
    let mut r = rng(config.seed ^ 0x4244);
    let mut graphs = Vec::new();
    for i in 0..config.random_instances {
        let n = r.gen_range(8..=16);
        let extra = r.gen_range(0.0..0.4);
        graphs.push((random_bounded_degree_with(&mut r, n, 4, extra)?, format!("random {i}"), ()));
    }
    Ok(check_all(graphs, |g, _| solved(g, 2, solve_star_free(g, 2))))
}
