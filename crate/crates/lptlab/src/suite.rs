//! Suite orchestration: catalog sources, per-graph evaluation, and the worker
//! pool that merges results back in catalog order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use lptlab_core::bpg::{
    bpg_gallai_vertex, check_edge_transversal, check_representation_props, find_strong_ordering,
    graph_from_line_representation, line_representation_from_ordering, order_path, LineRepresentation, OrderedPath,
    Side,
};
use lptlab_core::catalog::{
    enumerate_graphs, enumerate_trees, GraphClass, LabeledGraphs, MAX_CANONICAL_N, MAX_LABELED_N,
};
use lptlab_core::chordal::{
    all_cliques, build_clique_tree, check_chordal_theorem, check_lemma_extreme_join, check_lemma_extreme_separated,
    check_lemma_fenceds, clique_number, is_chordal, maximal_cliques_chordal,
};
use lptlab_core::graph6::{parse_graph6, write_graph6};
use lptlab_core::paths::{enumerate_all_paths, enumerate_longest_paths_with_budget, to_dot, DEFAULT_BUDGET};
use lptlab_core::substar::{
    check_previous_onebranch, check_substar_theorem, enumerate_models, intersection_graph, HostTree, SubstarModel,
    MAX_HOST_NODES, MAX_STARS,
};
use lptlab_core::transversal::{gallai_vertex_of, is_transversal_of, lpt_from_paths, TransversalResult};
use lptlab_core::treedecomp::{
    check_branch_props, check_separator_property, check_tw_theorem, exact_treewidth, make_full_decomposition,
    TreeDecomposition, Validity,
};
use lptlab_core::{Error, Graph, LongestPathSet, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::fixtures::load_fixture;
use crate::report::{Record, Section, SuiteReport, Violation, ViolationKind};
use crate::{HarnessError, Result};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Largest graphs that get the full-decomposition and branch property checks.
pub const PROPS_MAX_N: usize = 7;
/// Largest graphs whose every path is put in order.
pub const ALL_PATHS_MAX_N: usize = 8;
/// Every connected graph up to this size goes through the clique lemmas...
pub const LEMMA_ALL_MAX_N: usize = 6;
/// ...and chordal ones up to this size.
pub const LEMMA_CHORDAL_MAX_N: usize = 7;
pub const RANDOM_REPRESENTATIONS: usize = 200;
pub const REPRESENTATION_SIDE_MAX: usize = 6;

const CHUNK: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteName {
    Gallai,
    Chordal,
    Tw,
    Bpg,
    Substar,
    Lemmas,
    All,
}

impl SuiteName {
    /// The suites `all` runs, in report order.
    pub const SINGLE: [SuiteName; 6] =
        [SuiteName::Gallai, SuiteName::Chordal, SuiteName::Tw, SuiteName::Bpg, SuiteName::Substar, SuiteName::Lemmas];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Gallai => "gallai",
            SuiteName::Chordal => "chordal",
            SuiteName::Tw => "tw",
            SuiteName::Bpg => "bpg",
            SuiteName::Substar => "substar",
            SuiteName::Lemmas => "lemmas",
            SuiteName::All => "all",
        }
    }

    /// Largest `n_max` the suite accepts.
    pub fn limit(self, dedup: bool) -> usize {
        let catalog = if dedup { MAX_CANONICAL_N } else { MAX_LABELED_N };
        match self {
            SuiteName::Gallai | SuiteName::Chordal | SuiteName::Tw | SuiteName::Bpg => catalog,
            SuiteName::Lemmas => LEMMA_CHORDAL_MAX_N,
            SuiteName::Substar => MAX_HOST_NODES.min(MAX_STARS),
            SuiteName::All => catalog,
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::SINGLE
            .into_iter()
            .chain([SuiteName::All])
            .find(|n| n.as_str() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub n_max: usize,
    pub dedup: bool,
    pub jobs: usize,
    pub seed: u64,
    /// Node expansions allowed per path enumeration.
    pub budget: u64,
    /// Run on one named graph instead of the catalog.
    pub fixture: Option<String>,
    pub out: Option<PathBuf>,
    pub csv: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(suite: SuiteName, n_max: usize) -> Self {
        SuiteConfig {
            suite,
            n_max,
            dedup: false,
            jobs: 1,
            seed: DEFAULT_SEED,
            budget: DEFAULT_BUDGET,
            fixture: None,
            out: None,
            csv: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(HarnessError::Config("jobs must be at least 1".into()));
        }
        if self.budget == 0 {
            return Err(HarnessError::Config("budget must be positive".into()));
        }
        if self.fixture.is_some() {
            if matches!(self.suite, SuiteName::Substar | SuiteName::All) {
                return Err(HarnessError::Config(format!("suite {} does not run on a fixture", self.suite)));
            }
            return Ok(());
        }
        let limit = self.suite.limit(self.dedup);
        if self.n_max == 0 || self.n_max > limit {
            return Err(HarnessError::Config(format!(
                "n_max {} outside 1..={limit} for suite {}",
                self.n_max, self.suite
            )));
        }
        Ok(())
    }
}

/// What one worker produces for one catalog entry.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub record: Record,
    pub violations: Vec<Violation>,
}

struct Eval<'a> {
    g: &'a Graph,
    record: Record,
    violations: Vec<Violation>,
    source: Option<String>,
}

impl<'a> Eval<'a> {
    fn new(index: usize, g: &'a Graph) -> Self {
        let record = Record {
            index,
            graph6: write_graph6(g).expect("catalog graphs fit graph6"),
            n: g.n(),
            m: g.edge_count(),
            ..Record::default()
        };
        Eval { g, record, violations: Vec::new(), source: None }
    }

    fn check(
        &mut self,
        name: &str,
        kind: ViolationKind,
        ok: bool,
        detail: impl FnOnce() -> String,
        dot: Option<String>,
    ) {
        let entry = self.record.verdicts.entry(name.to_string()).or_insert(true);
        *entry &= ok;
        if !ok {
            self.violations.push(Violation {
                kind,
                check: name.to_string(),
                index: self.record.index,
                graph6: self.record.graph6.clone(),
                source: self.source.clone(),
                detail: detail(),
                dot,
            });
        }
    }

    fn fail(&mut self, name: &str, e: &Error) {
        let kind = match e {
            Error::BudgetExceeded { .. } => ViolationKind::Budget,
            _ => ViolationKind::Internal,
        };
        self.check(name, kind, false, || e.to_string(), None);
    }

    fn lpt_basics(&mut self, lps: &LongestPathSet, t: &TransversalResult) {
        self.record.length = Some(lps.length);
        self.record.lpt = Some(t.size);
        self.record.gallai = gallai_vertex_of(self.g, lps);
    }

    fn dot(&self, lps: &LongestPathSet, marked: VertexSet) -> Option<String> {
        Some(to_dot(self.g, &lps.paths, marked))
    }

    fn finish(self) -> Outcome {
        Outcome { record: self.record, violations: self.violations }
    }
}

macro_rules! attempt {
    ($ev:ident, $name:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => {
                $ev.fail($name, &err);
                return $ev.finish();
            }
        }
    };
}

fn longest(ev: &mut Eval<'_>, budget: u64) -> std::result::Result<(LongestPathSet, TransversalResult), Error> {
    let lps = enumerate_longest_paths_with_budget(ev.g, budget)?;
    let t = lpt_from_paths(ev.g, &lps)?;
    ev.lpt_basics(&lps, &t);
    Ok((lps, t))
}

/// Runs one graph-based suite's checks on `g`. The substar suite works on
/// models; see [`evaluate_model`].
pub fn evaluate(suite: SuiteName, index: usize, g: &Graph, budget: u64) -> Outcome {
    match suite {
        SuiteName::Gallai => eval_gallai(index, g, budget),
        SuiteName::Chordal => eval_chordal(index, g, budget),
        SuiteName::Tw => eval_tw(index, g, budget),
        SuiteName::Bpg => eval_bpg(index, g, budget),
        SuiteName::Lemmas => eval_lemmas(index, g, budget),
        SuiteName::Substar | SuiteName::All => panic!("suite {suite} has no per-graph evaluation"),
    }
}

fn eval_gallai(index: usize, g: &Graph, budget: u64) -> Outcome {
    let mut ev = Eval::new(index, g);
    let (lps, t) = attempt!(ev, "longest-paths", longest(&mut ev, budget));
    let gallai = ev.record.gallai;
    ev.check(
        "witness",
        ViolationKind::Internal,
        t.witness.len() == t.size && is_transversal_of(&lps, t.witness),
        || format!("witness {:?} of claimed size {}", t.witness, t.size),
        None,
    );
    ev.check(
        "gallai-iff-lpt-1",
        ViolationKind::Internal,
        (t.size == 1) == gallai.is_some(),
        || format!("lpt {} with common vertex {gallai:?}", t.size),
        None,
    );
    ev.finish()
}

fn eval_chordal(index: usize, g: &Graph, budget: u64) -> Outcome {
    let mut ev = Eval::new(index, g);
    let Some(peo) = is_chordal(g) else {
        ev.record.detail = Some("not chordal".into());
        return ev.finish();
    };
    let (lps, t) = attempt!(ev, "longest-paths", longest(&mut ev, budget));
    let (cliques, omega) = attempt!(ev, "maximal-cliques", maximal_cliques_chordal(g, &peo));
    ev.record.omega = Some(omega);
    let brute = clique_number(g);
    ev.check(
        "omega",
        ViolationKind::Internal,
        brute == omega,
        || format!("elimination gives {omega}, search gives {brute}"),
        None,
    );

    let verdict = attempt!(ev, "chordal-bound", check_chordal_theorem(g, &lps));
    let dot = ev.dot(&lps, t.witness);
    ev.check("chordal-bound", ViolationKind::Theorem, verdict.holds, || format!("{:?}", verdict.evidence), dot);

    let (tw, _) = attempt!(ev, "treewidth", exact_treewidth(g));
    ev.record.tw = Some(tw);
    ev.check("tw=omega-1", ViolationKind::Internal, tw + 1 == omega, || format!("tw {tw}, omega {omega}"), None);

    let tree = attempt!(ev, "clique-tree", build_clique_tree(g, &peo));
    let validity = attempt!(ev, "clique-tree", tree.validate(g));
    let mut bags = tree.bags().to_vec();
    let mut expected = cliques.clone();
    bags.sort();
    expected.sort();
    ev.check(
        "clique-tree",
        ViolationKind::Internal,
        validity == (Validity::Valid { width: omega - 1 }) && bags == expected,
        || format!("{validity:?} with bags {bags:?}"),
        None,
    );
    ev.finish()
}

/// Valid, of width `k`, all bags of size `k + 1`, neighbouring bags sharing `k`.
pub fn is_full_of_width(g: &Graph, td: &TreeDecomposition, k: usize) -> bool {
    matches!(td.validate(g), Ok(Validity::Valid { width }) if width == k)
        && td.bags().iter().all(|b| b.len() == k + 1)
        && td.tree_edges().iter().all(|&(a, b)| td.bag(a).intersection(td.bag(b)).len() == k)
}

fn eval_tw(index: usize, g: &Graph, budget: u64) -> Outcome {
    let mut ev = Eval::new(index, g);
    let (lps, t) = attempt!(ev, "longest-paths", longest(&mut ev, budget));
    if g.edge_count() == 0 {
        // a lone vertex has treewidth 0 but still needs one vertex to meet its path
        ev.record.tw = Some(0);
        ev.record.detail = Some(format!("single vertex: tw 0, lpt {}", t.size));
        return ev.finish();
    }
    let verdict = attempt!(ev, "transversal-bag", check_tw_theorem(g, &lps));
    ev.record.tw = Some(verdict.treewidth);
    ev.check(
        "transversal-bag",
        ViolationKind::Internal,
        is_transversal_of(&lps, verdict.transversal_bag),
        || format!("bag {:?} misses a longest path", verdict.transversal_bag),
        None,
    );
    let dot = ev.dot(&lps, verdict.transversal_bag);
    ev.check(
        "lpt<=tw",
        ViolationKind::Theorem,
        verdict.holds,
        || format!("lpt {} exceeds treewidth {}", t.size, verdict.treewidth),
        dot,
    );
    if g.n() > PROPS_MAX_N {
        return ev.finish();
    }
    let (tw, td) = attempt!(ev, "treewidth", exact_treewidth(g));
    match make_full_decomposition(&td, tw) {
        Ok(full) => {
            let ok = is_full_of_width(g, &full, tw);
            ev.check("full-decomposition", ViolationKind::Internal, ok, || format!("bags {:?}", full.bags()), None);
        }
        Err(e) => ev.fail("full-decomposition", &e),
    }
    let seps = check_separator_property(g, &td);
    ev.check("separator", ViolationKind::Internal, seps.is_empty(), || format!("{:?}", seps.first()), None);
    match check_branch_props(g, &td, &lps) {
        Ok(props) => {
            ev.check("branch-props", ViolationKind::Internal, props.is_empty(), || format!("{:?}", props.first()), None)
        }
        Err(e) => ev.fail("branch-props", &e),
    }
    ev.finish()
}

fn eval_lemmas(index: usize, g: &Graph, budget: u64) -> Outcome {
    let mut ev = Eval::new(index, g);
    let (lps, _) = attempt!(ev, "longest-paths", longest(&mut ev, budget));
    let chordal = is_chordal(g).is_some();
    let cliques = all_cliques(g, 1);
    type Checker = fn(&Graph, VertexSet, &LongestPathSet) -> lptlab_core::Result<lptlab_core::chordal::LemmaVerdict>;
    let mut lemmas: Vec<(&str, Checker, usize)> =
        vec![("extreme-join", check_lemma_extreme_join, 2), ("extreme-separated", check_lemma_extreme_separated, 2)];
    if chordal {
        lemmas.push(("fenceds", check_lemma_fenceds, 1));
    }
    for (name, checker, min_size) in lemmas {
        let mut checked = 0;
        let mut failure = None;
        for &k in cliques.iter().filter(|k| k.len() >= min_size) {
            checked += 1;
            match checker(g, k, &lps) {
                Ok(v) if v.holds => {}
                Ok(v) => failure = failure.or(Some((k, format!("clique {k:?}: {:?}", v.evidence)))),
                Err(e) => failure = failure.or(Some((k, format!("clique {k:?}: {e}")))),
            }
        }
        ev.record.counts.insert(format!("{name}-cliques"), checked);
        let dot = failure.as_ref().and_then(|&(k, _)| ev.dot(&lps, k));
        let ok = failure.is_none();
        ev.check(name, ViolationKind::Internal, ok, || failure.map(|f| f.1).unwrap_or_default(), dot);
    }
    ev.finish()
}

fn eval_bpg(index: usize, g: &Graph, budget: u64) -> Outcome {
    let mut ev = Eval::new(index, g);
    let so = attempt!(ev, "strong-ordering", find_strong_ordering(g));
    let Some(so) = so else {
        ev.record.detail = Some("no strong ordering".into());
        return ev.finish();
    };
    ev.check("strong-ordering", ViolationKind::Internal, so.is_strong_for(g), || format!("{so:?}"), None);
    let (lps, t) = attempt!(ev, "longest-paths", longest(&mut ev, budget));
    let dot = ev.dot(&lps, t.witness);
    ev.check("lpt=1", ViolationKind::Theorem, t.size == 1, || format!("lpt {} under {so:?}", t.size), dot);

    let firsts: Vec<usize> = [so.x_order.first(), so.y_order.first()].into_iter().flatten().copied().collect();
    match bpg_gallai_vertex(g, &so, &lps) {
        Ok(v) => ev.check(
            "first-vertex-gallai",
            ViolationKind::Internal,
            firsts.contains(&v) && lps.common_vertices().contains(v),
            || format!("returned {v}, first vertices {firsts:?}"),
            None,
        ),
        Err(e) => ev.fail("first-vertex-gallai", &e),
    }

    let et = check_edge_transversal(g, &lps);
    ev.check("edge-transversal", ViolationKind::Internal, et.holds, || format!("{:?}", et.violation), None);

    if g.n() <= ALL_PATHS_MAX_N {
        let paths = attempt!(ev, "ordered-paths", enumerate_all_paths(g, budget));
        let mut failure = None;
        for p in &paths {
            match order_path(g, &so, p) {
                Ok(op)
                    if op.path().vertex_set() == p.vertex_set() && OrderedPath::is_ordered(op.path(), &so, g.n()) => {}
                Ok(op) => failure = failure.or(Some(format!("{:?} became {:?}", p.vertices(), op.path().vertices()))),
                Err(e) => failure = failure.or(Some(format!("{:?}: {e}", p.vertices()))),
            }
        }
        ev.record.counts.insert("paths".into(), paths.len());
        let ok = failure.is_none();
        ev.check("ordered-paths", ViolationKind::Internal, ok, || failure.unwrap_or_default(), None);
    }

    match line_representation_from_ordering(g, &so) {
        Ok(rep) => {
            let round_trip = graph_from_line_representation(&rep).map(|h| h == *g).unwrap_or(false);
            let props = check_representation_props(&rep);
            let ok = round_trip && matches!(props, Ok(ref v) if v.holds);
            ev.check(
                "line-representation",
                ViolationKind::Internal,
                ok,
                || format!("{}{props:?}", rep.to_text()),
                None,
            );
        }
        Err(e) => ev.fail("line-representation", &e),
    }
    ev.finish()
}

/// Representation properties of one arbitrary line representation.
pub fn evaluate_representation(index: usize, rep: &LineRepresentation) -> Outcome {
    let g = match graph_from_line_representation(rep) {
        Ok(g) => g,
        Err(e) => {
            let mut out = Outcome::default();
            out.record.index = index;
            out.record.verdicts.insert("representation-props".into(), false);
            out.violations.push(Violation {
                kind: ViolationKind::Internal,
                check: "representation-props".into(),
                index,
                graph6: String::new(),
                source: Some(rep.to_text()),
                detail: e.to_string(),
                dot: None,
            });
            return out;
        }
    };
    let mut ev = Eval::new(index, &g);
    ev.source = Some(rep.to_text());
    match check_representation_props(rep) {
        Ok(v) => {
            ev.check("representation-props", ViolationKind::Internal, v.holds, || format!("{:?}", v.violation), None)
        }
        Err(e) => ev.fail("representation-props", &e),
    }
    ev.finish()
}

/// A uniformly shuffled top line, and a bottom line that interleaves the two
/// sides at random while keeping each side's top order.
pub fn random_representation(rng: &mut impl Rng, nx: usize, ny: usize) -> LineRepresentation {
    let n = nx + ny;
    let side: Vec<Side> = (0..n).map(|v| if v < nx { Side::X } else { Side::Y }).collect();
    let mut top_line: Vec<usize> = (0..n).collect();
    top_line.shuffle(rng);
    let mut top = vec![0; n];
    for (pos, &v) in top_line.iter().enumerate() {
        top[v] = pos + 1;
    }
    let by_top = |s: Side| top_line.iter().copied().filter(|&v| side[v] == s).collect::<Vec<_>>();
    let (xs, ys) = (by_top(Side::X), by_top(Side::Y));
    let mut slots: Vec<Side> = side.clone();
    slots.shuffle(rng);
    let mut bottom = vec![0; n];
    let (mut i, mut j) = (0, 0);
    for (pos, s) in slots.into_iter().enumerate() {
        let v = if s == Side::X {
            i += 1;
            xs[i - 1]
        } else {
            j += 1;
            ys[j - 1]
        };
        bottom[v] = pos + 1;
    }
    LineRepresentation { side, top, bottom }
}

/// Checks of one connected full-substar model; `None` when its intersection
/// graph is disconnected.
pub fn evaluate_model(index: usize, model: &SubstarModel, budget: u64) -> Option<Outcome> {
    let g = intersection_graph(model).ok()?;
    if !g.is_connected() {
        return None;
    }
    Some(eval_model_graph(index, model, &g, budget))
}

fn eval_model_graph(index: usize, model: &SubstarModel, g: &Graph, budget: u64) -> Outcome {
    let mut ev = Eval::new(index, g);
    ev.source = Some(model.to_text());
    ev.check(
        "chordal",
        ViolationKind::Internal,
        is_chordal(g).is_some(),
        || "intersection graph has a hole".into(),
        None,
    );
    let (lps, t) = attempt!(ev, "longest-paths", longest(&mut ev, budget));
    let verdict = attempt!(ev, "lpt=1", check_substar_theorem(model, &lps));
    let dot = ev.dot(&lps, t.witness);
    ev.check("lpt=1", ViolationKind::Theorem, verdict.lpt == 1, || format!("lpt {}", verdict.lpt), dot);
    let bad_node = verdict.nodes.iter().find(|r| r.all_paths_hold_clique == Some(false));
    ev.check("branch-records", ViolationKind::Internal, bad_node.is_none(), || format!("{bad_node:?}"), None);
    match check_previous_onebranch(model, &lps) {
        Ok(v) => ev.check("onebranch", ViolationKind::Internal, v.holds, || format!("{:?}", v.violation), None),
        Err(e) => ev.fail("onebranch", &e),
    }
    ev.finish()
}

/// Re-runs the check named by `v` on the input it embeds; true when the
/// violation reproduces.
pub fn recheck(suite: SuiteName, v: &Violation, budget: u64) -> Result<bool> {
    let outcome = match (suite, &v.source) {
        (SuiteName::Substar, Some(text)) => {
            let model = SubstarModel::parse_text(text)?;
            let g = intersection_graph(&model)?;
            eval_model_graph(v.index, &model, &g, budget)
        }
        (SuiteName::Bpg, Some(text)) => evaluate_representation(v.index, &LineRepresentation::parse_text(text)?),
        (SuiteName::Substar | SuiteName::All, None) => {
            return Err(HarnessError::Config("violation carries no model".into()));
        }
        _ => evaluate(suite, v.index, &parse_graph6(&v.graph6)?, budget),
    };
    Ok(outcome.record.verdicts.get(&v.check) == Some(&false) && outcome.violations.iter().any(|w| w.kind == v.kind))
}

type GraphSource = Box<dyn Iterator<Item = Graph> + Send>;

/// Connected members of `class` on each size in `sizes`, in catalog order.
pub fn catalog(class: GraphClass, sizes: RangeInclusive<usize>, dedup: bool) -> GraphSource {
    Box::new(sizes.flat_map(move |n| -> GraphSource {
        if dedup {
            Box::new(enumerate_graphs(n, class, true).expect("size checked against the catalog limit").into_iter())
        } else {
            Box::new(
                LabeledGraphs::new(n, 0)
                    .expect("size checked against the catalog limit")
                    .filter(move |g| g.is_connected() && class.contains(g)),
            )
        }
    }))
}

/// Evaluates `items` on the pool one chunk at a time; results keep catalog
/// order whatever the scheduling.
fn sweep<T, I, F>(pool: &rayon::ThreadPool, items: I, f: F) -> Vec<T>
where
    T: Send,
    I: Iterator,
    I::Item: Send + Sync,
    F: Fn(usize, &I::Item) -> T + Sync,
{
    let mut out = Vec::new();
    let mut chunk = Vec::with_capacity(CHUNK);
    let run = |chunk: &mut Vec<I::Item>, out: &mut Vec<T>| {
        let base = out.len();
        let results: Vec<T> = pool.install(|| chunk.par_iter().enumerate().map(|(i, g)| f(base + i, g)).collect());
        out.extend(results);
        chunk.clear();
    };
    for item in items {
        chunk.push(item);
        if chunk.len() == CHUNK {
            run(&mut chunk, &mut out);
        }
    }
    if !chunk.is_empty() {
        run(&mut chunk, &mut out);
    }
    out
}

fn split(outcomes: Vec<Outcome>) -> (Vec<Record>, Vec<Violation>) {
    let mut records = Vec::with_capacity(outcomes.len());
    let mut violations = Vec::new();
    for o in outcomes {
        records.push(o.record);
        violations.extend(o.violations);
    }
    (records, violations)
}

fn lpt_histogram(records: &[Record]) -> Value {
    let mut h: BTreeMap<usize, usize> = BTreeMap::new();
    for lpt in records.iter().filter_map(|r| r.lpt) {
        *h.entry(lpt).or_default() += 1;
    }
    json!(h)
}

fn count_sum(records: &[Record], key: &str) -> usize {
    records.iter().filter_map(|r| r.counts.get(key)).sum()
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| HarnessError::Config(format!("worker pool: {e}")))?;
    let fixture = cfg.fixture.as_deref().map(load_fixture).transpose()?;
    let suites = if cfg.suite == SuiteName::All { SuiteName::SINGLE.to_vec() } else { vec![cfg.suite] };
    let sections: Vec<Section> = suites.into_iter().map(|s| run_section(s, cfg, &pool, fixture.as_ref())).collect();
    Ok(SuiteReport {
        suite: cfg.suite.to_string(),
        n_max: cfg.n_max,
        dedup: cfg.dedup,
        seed: cfg.seed,
        budget: cfg.budget,
        fixture: cfg.fixture.clone(),
        counters: SuiteReport::total(&sections),
        sections,
        wall_time: start.elapsed(),
    })
}

fn run_section(suite: SuiteName, cfg: &SuiteConfig, pool: &rayon::ThreadPool, fixture: Option<&Graph>) -> Section {
    let n = if fixture.is_some() { fixture.map_or(0, Graph::n) } else { cfg.n_max.min(suite.limit(cfg.dedup)) };
    if suite == SuiteName::Substar {
        return run_substar(cfg, pool, n);
    }
    let source: GraphSource = match fixture {
        Some(g) => Box::new(std::iter::once(g.clone())),
        None => match suite {
            SuiteName::Chordal => catalog(GraphClass::Chordal, 1..=n, cfg.dedup),
            SuiteName::Bpg => catalog(GraphClass::Bipartite, 1..=n, cfg.dedup),
            SuiteName::Lemmas => {
                Box::new(catalog(GraphClass::All, 1..=n.min(LEMMA_ALL_MAX_N), cfg.dedup).chain(catalog(
                    GraphClass::Chordal,
                    LEMMA_ALL_MAX_N + 1..=n,
                    cfg.dedup,
                )))
            }
            _ => catalog(GraphClass::All, 1..=n, cfg.dedup),
        },
    };
    let budget = cfg.budget;
    let outcomes = sweep(pool, source, |i, g| evaluate(suite, i, g, budget));
    let (mut records, mut violations) = split(outcomes);
    let mut notes = BTreeMap::new();
    match suite {
        SuiteName::Gallai => {
            let without: Vec<&str> = records
                .iter()
                .filter(|r| r.length.is_some() && r.gallai.is_none())
                .map(|r| r.graph6.as_str())
                .collect();
            notes.insert("without_gallai".into(), json!(without));
            notes.insert("lpt_histogram".into(), lpt_histogram(&records));
        }
        SuiteName::Chordal => {
            let above: Vec<&str> =
                records.iter().filter(|r| r.lpt.is_some_and(|l| l > 1)).map(|r| r.graph6.as_str()).collect();
            notes.insert("lpt_gt_1".into(), json!(above));
            notes.insert("lpt_histogram".into(), lpt_histogram(&records));
        }
        SuiteName::Tw => {
            let low: Vec<usize> =
                records.iter().filter(|r| r.tw.is_some_and(|t| t <= 3)).filter_map(|r| r.lpt).collect();
            let range = low.iter().min().zip(low.iter().max()).map(|(a, b)| json!([a, b]));
            notes.insert("lpt_range_tw_le_3".into(), range.unwrap_or(Value::Null));
            let mut pairs: BTreeMap<String, usize> = BTreeMap::new();
            for r in &records {
                if let (Some(tw), Some(lpt)) = (r.tw, r.lpt) {
                    *pairs.entry(format!("tw{tw}/lpt{lpt}")).or_default() += 1;
                }
            }
            notes.insert("tw_lpt_pairs".into(), json!(pairs));
        }
        SuiteName::Bpg => {
            let orderable = records.iter().filter(|r| r.verdicts.contains_key("strong-ordering")).count();
            notes.insert("strong_orderable".into(), json!(orderable));
            notes.insert("not_strong_orderable".into(), json!(records.len() - orderable));
            notes.insert("paths_ordered".into(), json!(count_sum(&records, "paths")));
            if fixture.is_none() {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                let reps: Vec<LineRepresentation> = (0..RANDOM_REPRESENTATIONS)
                    .map(|_| {
                        let nx = rng.gen_range(1..=REPRESENTATION_SIDE_MAX);
                        let ny = rng.gen_range(1..=REPRESENTATION_SIDE_MAX);
                        random_representation(&mut rng, nx, ny)
                    })
                    .collect();
                let base = records.len();
                let outcomes = sweep(pool, reps.into_iter(), |i, rep| evaluate_representation(base + i, rep));
                let (r, v) = split(outcomes);
                records.extend(r);
                violations.extend(v);
                notes.insert("random_representations".into(), json!(RANDOM_REPRESENTATIONS));
            }
        }
        SuiteName::Lemmas => {
            for key in ["extreme-join-cliques", "extreme-separated-cliques", "fenceds-cliques"] {
                notes.insert(key.into(), json!(count_sum(&records, key)));
            }
        }
        SuiteName::Substar | SuiteName::All => unreachable!(),
    }
    Section::new(suite.as_str(), n, records, violations, notes)
}

/// One record per (host tree, star count): hosts with up to `n` nodes and
/// models with up to `n` stars, verdicts joined over the connected models.
fn run_substar(cfg: &SuiteConfig, pool: &rayon::ThreadPool, n: usize) -> Section {
    let mut records = Vec::new();
    let mut violations = Vec::new();
    let mut total_models = 0;
    let mut connected_models = 0;
    for m in 1..=n {
        for tree in enumerate_trees(m).expect("host size checked") {
            let host = HostTree::from_graph(tree).expect("catalog trees are trees");
            let host6 = write_graph6(host.graph()).expect("small host");
            for k in 1..=n {
                let index = records.len();
                let models: Vec<SubstarModel> = enumerate_models(&host, k, cfg.dedup).expect("sizes checked").collect();
                let budget = cfg.budget;
                let outcomes: Vec<Option<Outcome>> =
                    pool.install(|| models.par_iter().map(|model| evaluate_model(index, model, budget)).collect());
                let mut rec = Record { index, graph6: host6.clone(), n: m, m: m - 1, ..Record::default() };
                let mut connected = 0;
                for o in outcomes.into_iter().flatten() {
                    connected += 1;
                    rec.length = rec.length.max(o.record.length);
                    rec.lpt = rec.lpt.max(o.record.lpt);
                    for (name, ok) in o.record.verdicts {
                        *rec.verdicts.entry(name).or_insert(true) &= ok;
                    }
                    violations.extend(o.violations.into_iter().map(|v| Violation { index, ..v }));
                }
                rec.counts.insert("stars".into(), k);
                rec.counts.insert("models".into(), models.len());
                rec.counts.insert("connected".into(), connected);
                total_models += models.len();
                connected_models += connected;
                records.push(rec);
            }
        }
    }
    let mut notes = BTreeMap::new();
    notes.insert("models".into(), json!(total_models));
    notes.insert("connected_models".into(), json!(connected_models));
    notes.insert("max_lpt".into(), json!(records.iter().filter_map(|r| r.lpt).max()));
    Section::new(SuiteName::Substar.as_str(), n, records, violations, notes)
}
