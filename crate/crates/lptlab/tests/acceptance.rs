//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use lptlab::fixtures::load_fixture;
use lptlab::suite::{catalog, run_suite, SuiteConfig, SuiteName};
use lptlab::{Record, SuiteReport};
use lptlab_core::bpg::{bipartition, find_strong_ordering, order_path, StrongOrdering};
use lptlab_core::catalog::{enumerate_graphs, GraphClass};
use lptlab_core::chordal::{clique_number, is_chordal};
use lptlab_core::paths::{enumerate_all_paths, enumerate_longest_paths, DEFAULT_BUDGET};
use lptlab_core::transversal::{min_hitting_set, SetFamily};
use lptlab_core::treedecomp::{
    exact_treewidth, find_transversal_bag, make_full_decomposition, treewidth_by_orderings, TreeDecomposition,
};
use lptlab_core::{Graph, PathSeq, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const JOBS: usize = 8;
/// Connected graphs on 1..=8 vertices, up to isomorphism.
const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
/// Graphs the treewidth bound is stated for: all of the above but the single vertex.
const TW_CHECKED: usize = 12_112;
const TW_SWEEP_LIMIT: Duration = Duration::from_secs(15 * 60);
const WALTHER_LPT: usize = 2;
const WALTHER_TW: usize = 2;
const WALTHER_LIMIT: Duration = Duration::from_secs(5);
const HITTING_FAMILIES: usize = 500;
const HITTING_SEED: u64 = 0x5eed_0009;

type Verdict = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(suite: SuiteName, n_max: usize, dedup: bool) -> SuiteReport {
    let mut cfg = SuiteConfig::new(suite, n_max);
    cfg.dedup = dedup;
    cfg.jobs = JOBS;
    run_suite(&cfg).expect("valid configuration")
}

fn clean(report: &SuiteReport) -> Result<(), String> {
    let c = report.counters;
    ensure(c.theorem_violations + c.internal_errors + c.budget_errors == 0 && c.failed_checks == 0, || {
        format!("{c:?}; first: {:?}", report.violations().next().map(|v| (&v.check, &v.graph6, &v.detail)))
    })
}

fn records<'a>(report: &'a SuiteReport, suite: &str) -> &'a [Record] {
    &report.section(suite).expect("section present").records
}

fn all_pass(rs: &[Record], check: &str) -> (usize, bool) {
    let with: Vec<bool> = rs.iter().filter_map(|r| r.verdicts.get(check).copied()).collect();
    (with.len(), with.iter().all(|&ok| ok))
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let report = sweep(SuiteName::Tw, 8, true);
    let elapsed = start.elapsed();
    let rs = records(&report, "tw");
    let mut per_n = [0usize; 8];
    for r in rs {
        per_n[r.n - 1] += 1;
    }
    ensure(per_n == CONNECTED_COUNTS, || format!("per-size counts {per_n:?}"))?;
    let (checked, ok) = all_pass(rs, "lpt<=tw");
    ensure(ok, || "lpt<=tw failed".into())?;
    ensure(checked == TW_CHECKED, || format!("{checked} graphs checked"))?;
    let unchecked: Vec<&str> =
        rs.iter().filter(|r| !r.verdicts.contains_key("lpt<=tw")).map(|r| r.graph6.as_str()).collect();
    ensure(unchecked == ["@"], || format!("graphs without a verdict: {unchecked:?}"))?;
    clean(&report)?;
    ensure(elapsed <= TW_SWEEP_LIMIT, || format!("took {elapsed:.1?}"))?;
    Ok(format!(
        "{} connected graphs (per-size sum {}), lpt<=tw on {checked}, single vertex excluded, 0 violations, {elapsed:.1?}",
        rs.len(),
        per_n.iter().sum::<usize>()
    ))
}

fn criterion_2() -> Verdict {
    let report = sweep(SuiteName::Chordal, 8, true);
    clean(&report)?;
    let rs = records(&report, "chordal");
    let (checked, ok) = all_pass(rs, "chordal-bound");
    ensure(ok && checked == rs.len(), || format!("bound checked on {checked} of {}", rs.len()))?;
    let listed = &report.section("chordal").unwrap().notes["lpt_gt_1"];
    let count = listed.as_array().map_or(usize::MAX, Vec::len);
    ensure(count == 0, || format!("chordal graphs with lpt > 1: {listed}"))?;
    Ok(format!("{checked} connected chordal graphs, lpt > 1 list has {count} entries"))
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let mut cfg = SuiteConfig::new(SuiteName::Gallai, 1);
    cfg.fixture = Some("walther".into());
    let report = run_suite(&cfg).map_err(|e| e.to_string())?;
    let rec = &records(&report, "gallai")[0];
    let g = load_fixture("walther").map_err(|e| e.to_string())?;
    let (tw, _) = exact_treewidth(&g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let summary = format!("n {}, lpt {:?}, gallai {:?}, tw {tw}, {elapsed:.2?}", g.n(), rec.lpt, rec.gallai);
    ensure(rec.lpt == Some(WALTHER_LPT), || format!("lpt mismatch: {summary}"))?;
    ensure(rec.gallai.is_none(), || format!("gallai vertex present: {summary}"))?;
    ensure(elapsed <= WALTHER_LIMIT, || format!("too slow: {summary}"))?;
    ensure(tw == WALTHER_TW, || format!("treewidth {tw}, expected {WALTHER_TW}: {summary}"))?;
    Ok(summary)
}

/// Strong orderability by trying every pair of side orders.
fn orderable_by_brute_force(g: &Graph) -> bool {
    fn perms(items: &[usize]) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let head = rest.remove(i);
            for mut p in perms(&rest) {
                p.insert(0, head);
                out.push(p);
            }
        }
        out
    }
    let (x, y) = bipartition(g).expect("bipartite");
    let (xs, ys) = (perms(&x.to_vec()), perms(&y.to_vec()));
    xs.iter().any(|xo| {
        ys.iter().any(|yo| {
            // crossing edges x_a y_d, x_b y_c with a < b, c < d force x_a y_c and x_b y_d
            let px = |v: usize| xo.iter().position(|&u| u == v).unwrap();
            let py = |v: usize| yo.iter().position(|&u| u == v).unwrap();
            let edges: Vec<(usize, usize)> =
                g.edges().into_iter().map(|(u, v)| if x.contains(u) { (u, v) } else { (v, u) }).collect();
            edges.iter().all(|&(xa, yd)| {
                edges.iter().all(|&(xb, yc)| {
                    !(px(xa) < px(xb) && py(yc) < py(yd)) || (g.has_edge(xa, yc) && g.has_edge(xb, yd))
                })
            })
        })
    })
}

fn criterion_4() -> Verdict {
    let report = sweep(SuiteName::Bpg, 9, true);
    clean(&report)?;
    let rs = records(&report, "bpg");
    let graphs: Vec<&Record> = rs.iter().filter(|r| !r.verdicts.contains_key("representation-props")).collect();
    let orderable: Vec<&&Record> = graphs.iter().filter(|r| r.verdicts.contains_key("strong-ordering")).collect();
    let bipartite: Vec<Graph> = catalog(GraphClass::Bipartite, 1..=9, true).collect();
    ensure(bipartite.len() == graphs.len(), || {
        format!("{} catalog graphs, {} records", bipartite.len(), graphs.len())
    })?;
    let oracle = bipartite.iter().filter(|g| orderable_by_brute_force(g)).count();
    ensure(oracle == orderable.len(), || format!("search finds {} orderable, brute force {oracle}", orderable.len()))?;
    for check in ["lpt=1", "first-vertex-gallai", "edge-transversal"] {
        let (n, ok) = all_pass(rs, check);
        ensure(ok && n == orderable.len(), || format!("{check}: {n} records, all pass {ok}"))?;
    }
    Ok(format!(
        "{} connected bipartite graphs, {} strong-orderable, all three checks pass",
        graphs.len(),
        orderable.len()
    ))
}

fn is_ordered_path(g: &Graph, so: &StrongOrdering, original: &PathSeq, p: &PathSeq) -> bool {
    let vs = p.vertices();
    let rank =
        |v: usize| so.x_order.iter().position(|&u| u == v).or_else(|| so.y_order.iter().position(|&u| u == v)).unwrap();
    let on_x = |v: usize| so.x_order.contains(&v);
    p.vertex_set() == original.vertex_set()
        && vs.windows(2).all(|w| g.has_edge(w[0], w[1]) && on_x(w[0]) != on_x(w[1]))
        && vs.iter().step_by(2).collect::<Vec<_>>().windows(2).all(|w| rank(*w[0]) < rank(*w[1]))
        && vs.iter().skip(1).step_by(2).collect::<Vec<_>>().windows(2).all(|w| rank(*w[0]) < rank(*w[1]))
}

fn criterion_5() -> Verdict {
    let mut graphs = 0;
    let mut paths = 0;
    for g in catalog(GraphClass::Bipartite, 1..=8, true) {
        let Some(so) = find_strong_ordering(&g).map_err(|e| e.to_string())? else { continue };
        graphs += 1;
        for p in enumerate_all_paths(&g, DEFAULT_BUDGET).map_err(|e| e.to_string())? {
            paths += 1;
            let op = order_path(&g, &so, &p).map_err(|e| format!("{:?}: {e}", p.vertices()))?;
            ensure(is_ordered_path(&g, &so, &p, op.path()), || {
                format!("{:?} became {:?}", p.vertices(), op.path().vertices())
            })?;
        }
    }
    Ok(format!("{paths} paths of {graphs} strong-orderable graphs put in order, 0 internal errors"))
}

fn criterion_6() -> Verdict {
    let report = sweep(SuiteName::Lemmas, 7, true);
    clean(&report)?;
    let rs = records(&report, "lemmas");
    let expected: usize = CONNECTED_COUNTS[..6].iter().sum::<usize>()
        + enumerate_graphs(7, GraphClass::Chordal, true).map_err(|e| e.to_string())?.len();
    ensure(rs.len() == expected, || format!("{} graphs swept, expected {expected}", rs.len()))?;
    let mut parts = Vec::new();
    for check in ["extreme-join", "extreme-separated", "fenceds"] {
        let (_, ok) = all_pass(rs, check);
        ensure(ok, || format!("{check} failed"))?;
        let cliques: usize = rs.iter().filter_map(|r| r.counts.get(&format!("{check}-cliques"))).sum();
        parts.push(format!("{check} on {cliques} cliques"));
    }
    let chordal = rs.iter().filter(|r| r.verdicts.contains_key("fenceds")).count();
    let expected_chordal = rs.iter().filter(|r| is_chordal(&parse(&r.graph6)).is_some()).count();
    ensure(chordal == expected_chordal, || format!("fenceds ran on {chordal} of {expected_chordal} chordal graphs"))?;
    Ok(format!("{} graphs; {}", rs.len(), parts.join(", ")))
}

fn parse(g6: &str) -> Graph {
    lptlab_core::graph6::parse_graph6(g6).unwrap()
}

/// T1 to T3 plus tree shape, written out independently of the library validator.
fn decomposition_is_valid(g: &Graph, td: &TreeDecomposition) -> bool {
    let nodes = td.node_count();
    let edges = td.tree_edges();
    let connected_over = |allowed: &dyn Fn(usize) -> bool| {
        let members: Vec<usize> = (0..nodes).filter(|&t| allowed(t)).collect();
        let Some(&first) = members.first() else { return true };
        let mut seen = vec![first];
        let mut i = 0;
        while i < seen.len() {
            let t = seen[i];
            for &(a, b) in edges {
                let other = if a == t {
                    b
                } else if b == t {
                    a
                } else {
                    continue;
                };
                if allowed(other) && !seen.contains(&other) {
                    seen.push(other);
                }
            }
            i += 1;
        }
        seen.len() == members.len()
    };
    nodes >= 1
        && edges.len() == nodes - 1
        && connected_over(&|_| true)
        && (0..g.n()).all(|v| td.bags().iter().any(|b| b.contains(v)))
        && g.edges().iter().all(|&(u, v)| td.bags().iter().any(|b| b.contains(u) && b.contains(v)))
        && (0..g.n()).all(|v| connected_over(&|t| td.bag(t).contains(v)))
}

fn criterion_7() -> Verdict {
    let mut transversal = 0;
    let mut full = 0;
    for g in catalog(GraphClass::All, 1..=7, true) {
        let (k, td) = exact_treewidth(&g).map_err(|e| e.to_string())?;
        let lps = enumerate_longest_paths(&g).map_err(|e| e.to_string())?;
        let t = find_transversal_bag(&g, &td, &lps).map_err(|e| format!("{}: {e}", g.edge_count()))?;
        ensure(lps.vertex_sets.iter().all(|p| p.intersects(td.bag(t))), || "bag misses a longest path".into())?;
        transversal += 1;
        let f = make_full_decomposition(&td, k).map_err(|e| e.to_string())?;
        let sizes_exact = f.bags().iter().all(|b| b.len() == k + 1)
            && f.tree_edges().iter().all(|&(a, b)| f.bag(a).intersection(f.bag(b)).len() == k);
        ensure(decomposition_is_valid(&g, &f) && sizes_exact, || format!("full decomposition {:?}", f.bags()))?;
        full += 1;
    }
    let mut chordal = 0;
    for g in catalog(GraphClass::Chordal, 1..=8, true) {
        let (k, _) = exact_treewidth(&g).map_err(|e| e.to_string())?;
        let omega = clique_number(&g);
        ensure(k + 1 == omega, || format!("tw {k}, omega {omega}"))?;
        chordal += 1;
    }
    Ok(format!(
        "transversal bag on {transversal} graphs, tw = omega - 1 on {chordal} chordal graphs, {full} full decompositions valid"
    ))
}

fn criterion_8() -> Verdict {
    let report = sweep(SuiteName::Substar, 6, false);
    clean(&report)?;
    let section = report.section("substar").unwrap();
    for check in ["chordal", "lpt=1", "onebranch", "branch-records"] {
        let (n, ok) = all_pass(&section.records, check);
        ensure(ok && n > 0, || format!("{check} failed"))?;
    }
    ensure(section.notes["max_lpt"] == 1, || format!("max lpt {}", section.notes["max_lpt"]))?;
    Ok(format!(
        "{} models, {} connected; chordal, lpt = 1 and onebranch hold on all",
        section.notes["models"], section.notes["connected_models"]
    ))
}

/// Minimum hitting set by scanning every subset of the universe, ties broken by
/// the sorted member list.
fn hitting_set_by_scan(universe: usize, sets: &[VertexSet]) -> VertexSet {
    let mut best: Option<VertexSet> = None;
    for bits in 0..1u64 << universe {
        let h = VertexSet::from_bits(bits);
        if !sets.iter().all(|s| s.intersects(h)) {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => (h.len(), h.to_vec()) < (b.len(), b.to_vec()),
        };
        if better {
            best = Some(h);
        }
    }
    best.expect("the universe hits every nonempty set")
}

fn criterion_9() -> Verdict {
    let mut graphs = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n, GraphClass::All, true).map_err(|e| e.to_string())? {
            let (dp, _) = exact_treewidth(&g).map_err(|e| e.to_string())?;
            let brute = treewidth_by_orderings(&g).map_err(|e| e.to_string())?;
            ensure(dp == brute, || format!("dp {dp}, orderings {brute}"))?;
            graphs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(HITTING_SEED);
    for i in 0..HITTING_FAMILIES {
        let universe = rng.gen_range(1..=10);
        let count = rng.gen_range(1..=8);
        let sets: Vec<VertexSet> = (0..count)
            .map(|_| loop {
                let s = VertexSet::from_bits(rng.gen_range(1..1u64 << universe));
                if !s.is_empty() {
                    break s;
                }
            })
            .collect();
        let got = min_hitting_set(&SetFamily::new(universe, sets.clone()).unwrap()).map_err(|e| e.to_string())?;
        let want = hitting_set_by_scan(universe, &sets);
        ensure(got == want, || format!("family {i}: solver {got:?}, scan {want:?}"))?;
    }
    Ok(format!("treewidth agrees on {graphs} graphs; hitting sets agree on {HITTING_FAMILIES} families"))
}

fn criterion_10() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_lptlab"))
            .args(["verify", "all", "--n-max", "6", "--jobs", "8", "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("run {run} exited with {status}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", outputs[0].len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "lpt <= tw on connected graphs n <= 8", criterion_1),
        (2, "chordal bound on connected chordal graphs n <= 8", criterion_2),
        (3, "walther fixture", criterion_3),
        (4, "bipartite permutation graphs |X|+|Y| <= 9", criterion_4),
        (5, "ordered paths |X|+|Y| <= 8", criterion_5),
        (6, "clique lemma sweep", criterion_6),
        (7, "decomposition machinery", criterion_7),
        (8, "full substar models", criterion_8),
        (9, "oracle equivalence", criterion_9),
        (10, "determinism of verify all", criterion_10),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, run) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
