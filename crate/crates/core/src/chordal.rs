//! Chordal graphs: recognition, cliques, clique trees, and checkers for the
//! clique lemmas and the chordal lpt bound.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cut::{classify_unchecked, Disposition, Extremes};
use crate::graph::{Graph, VertexSet};
use crate::paths::{LongestPathSet, PathSeq};
use crate::transversal::lpt_from_paths;
use crate::treedecomp::TreeDecomposition;
use crate::{Error, Result};

/// A vertex ordering; `order[i]` is eliminated `i`-th.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

impl EliminationOrdering {
    fn positions(&self, n: usize) -> Result<Vec<usize>> {
        let mut pos = vec![usize::MAX; n];
        if self.order.len() != n {
            return Err(Error::Validation(format!("ordering has {} entries for {n} vertices", self.order.len())));
        }
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::Validation(format!("ordering is not a permutation at entry {i}")));
            }
            pos[v] = i;
        }
        Ok(pos)
    }

    /// Neighbors of each vertex that come later in the ordering.
    fn later_neighbors(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        let pos = self.positions(g.n())?;
        Ok((0..g.n()).map(|v| g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect()).collect())
    }

    /// Whether every vertex's later neighbors form a clique.
    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.later_neighbors(g).is_ok_and(|later| later.iter().all(|&s| g.is_clique(s)))
    }
}

/// Maximum cardinality search visit order; ties go to the smallest id.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    while !unvisited.is_empty() {
        let v = unvisited.iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).expect("nonempty");
        unvisited.remove(v);
        order.push(v);
        for u in g.neighbors(v).intersection(unvisited) {
            weight[u] += 1;
        }
    }
    order
}

/// A perfect elimination ordering (reverse maximum cardinality search) when
/// `g` is chordal.
pub fn is_chordal(g: &Graph) -> Option<EliminationOrdering> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    let peo = EliminationOrdering { order };
    peo.is_perfect_for(g).then_some(peo)
}

/// Maximal cliques read off a perfect elimination ordering, sorted, and ω(G).
pub fn maximal_cliques_chordal(g: &Graph, peo: &EliminationOrdering) -> Result<(Vec<VertexSet>, usize)> {
    let later = peo.later_neighbors(g)?;
    if !later.iter().all(|&s| g.is_clique(s)) {
        return Err(Error::Validation("ordering is not a perfect elimination ordering".into()));
    }
    let candidates: BTreeSet<VertexSet> = (0..g.n()).map(|v| later[v].with(v)).collect();
    let cliques: Vec<VertexSet> =
        candidates.iter().filter(|&&c| !candidates.iter().any(|&d| d != c && c.is_subset(d))).copied().collect();
    let omega = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
    Ok((cliques, omega))
}

/// Every clique with at least `min_size` vertices, by brute force over subsets.
pub fn all_cliques(g: &Graph, min_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    fn grow(g: &Graph, current: VertexSet, candidates: VertexSet, min_size: usize, out: &mut Vec<VertexSet>) {
        if current.len() >= min_size {
            out.push(current);
        }
        for v in candidates {
            let rest = candidates.intersection(g.neighbors(v)).difference(VertexSet::range(v + 1));
            grow(g, current.with(v), rest, min_size, out);
        }
    }
    grow(g, VertexSet::EMPTY, g.vertices(), min_size.max(1), &mut out);
    out.sort();
    out
}

/// ω(G) for any graph.
pub fn clique_number(g: &Graph) -> usize {
    all_cliques(g, 1).iter().map(|c| c.len()).max().unwrap_or(0)
}

/// Clique tree of a connected chordal graph: bags are the maximal cliques,
/// joined by a maximum-weight spanning tree on intersection sizes (ties to the
/// smallest bag indices).
pub fn build_clique_tree(g: &Graph, peo: &EliminationOrdering) -> Result<TreeDecomposition> {
    if !peo.is_perfect_for(g) {
        return Err(Error::NotChordal);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (cliques, _) = maximal_cliques_chordal(g, peo)?;
    let mut candidates = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let w = cliques[i].intersection(cliques[j]).len();
            if w > 0 {
                candidates.push((std::cmp::Reverse(w), i, j));
            }
        }
    }
    candidates.sort();
    let mut root: Vec<usize> = (0..cliques.len()).collect();
    fn find(root: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while root[r] != r {
            r = root[r];
        }
        root[x] = r;
        r
    }
    let mut edges = Vec::new();
    for (_, i, j) in candidates {
        let (ri, rj) = (find(&mut root, i), find(&mut root, j));
        if ri != rj {
            root[ri.max(rj)] = ri.min(rj);
            edges.push((i, j));
        }
    }
    TreeDecomposition::new(cliques, edges)
}

/// Outcome of one lemma check on one clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub holds: bool,
    pub clique: VertexSet,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// Touched pairs of the crossing, 2-touching, extreme-joined longest paths,
    /// with one representative path per pair.
    JoinedClasses {
        classes: Vec<VertexSet>,
        representatives: Vec<PathSeq>,
    },
    /// Number of qualifying extreme-separated paths and a pair with no common
    /// clique vertex, if any.
    SeparatedPairs {
        qualifying: usize,
        violation: Option<(PathSeq, PathSeq)>,
    },
    Fenced(FencedBranches),
    Bound {
        lpt: usize,
        omega: usize,
        bound: usize,
    },
}

/// Which alternatives of the fenced-clique lemma are realized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FencedBranches {
    pub lpt: usize,
    pub omega: usize,
    /// lpt(G) <= max{1, ω - 2}.
    pub a: bool,
    /// Some longest path misses K.
    pub b: bool,
    /// Some vertex v of K has a fenced longest path 1-touching K at v.
    pub c_fenced: bool,
    /// ... and no crossing longest path 1-touches K at that v.
    pub c: bool,
    pub c_vertex: Option<usize>,
    /// Some edge e of K has a fenced longest path 2-touching K at its ends.
    pub d_fenced: bool,
    /// ... and no crossing longest path 2-touches K at the ends of that e.
    pub d: bool,
    pub d_edge: Option<(usize, usize)>,
}

fn require_clique(g: &Graph, k: VertexSet) -> Result<()> {
    if !k.is_subset(g.vertices()) || !g.is_clique(k) {
        return Err(Error::Precondition(format!("{k:?} is not a clique")));
    }
    Ok(())
}

/// Longest paths that cross `k`, 2-touch it and are extreme-joined fall into at
/// most two classes by touched pair.
pub fn check_lemma_extreme_join(g: &Graph, k: VertexSet, lps: &LongestPathSet) -> Result<LemmaVerdict> {
    require_clique(g, k)?;
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut representatives = Vec::new();
    for p in &lps.paths {
        let c = classify_unchecked(g, p, k);
        if c.disposition == Disposition::Crossing
            && c.touch_count == 2
            && c.extremes == Extremes::Joined
            && !classes.contains(&c.touched)
        {
            classes.push(c.touched);
            representatives.push(p.clone());
        }
    }
    Ok(LemmaVerdict {
        holds: classes.len() <= 2,
        clique: k,
        evidence: Evidence::JoinedClasses { classes, representatives },
    })
}

/// Any two extreme-separated longest paths touching `k` at most twice share a
/// vertex of `k`.
pub fn check_lemma_extreme_separated(g: &Graph, k: VertexSet, lps: &LongestPathSet) -> Result<LemmaVerdict> {
    require_clique(g, k)?;
    let qualifying: Vec<(&PathSeq, VertexSet)> = lps
        .paths
        .iter()
        .filter_map(|p| {
            let c = classify_unchecked(g, p, k);
            (c.extremes == Extremes::Separated && c.touch_count <= 2).then_some((p, c.touched))
        })
        .collect();
    let mut violation = None;
    'outer: for (i, (p, tp)) in qualifying.iter().enumerate() {
        for (q, tq) in &qualifying[i + 1..] {
            if !tp.intersects(*tq) {
                violation = Some(((*p).clone(), (*q).clone()));
                break 'outer;
            }
        }
    }
    Ok(LemmaVerdict {
        holds: violation.is_none(),
        clique: k,
        evidence: Evidence::SeparatedPairs { qualifying: qualifying.len(), violation },
    })
}

/// At least one of four alternatives holds for a clique of a connected chordal
/// graph; each alternative is evaluated by direct quantification over the
/// longest paths.
pub fn check_lemma_fenceds(g: &Graph, k: VertexSet, lps: &LongestPathSet) -> Result<LemmaVerdict> {
    let peo = is_chordal(g).ok_or(Error::NotChordal)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    require_clique(g, k)?;
    let (_, omega) = maximal_cliques_chordal(g, &peo)?;
    let lpt = lpt_from_paths(g, lps)?.size;
    let classes: Vec<_> = lps.paths.iter().map(|p| classify_unchecked(g, p, k)).collect();

    let a = lpt <= 1.max(omega.saturating_sub(2));
    let b = classes.iter().any(|c| c.touch_count == 0);

    // (c) over single vertices, (d) over edges of K
    let realized = |touch: VertexSet| {
        let fenced = classes.iter().any(|c| c.touched == touch && c.is_fenced());
        let crossing = classes.iter().any(|c| c.touched == touch && c.is_crossing());
        (fenced, fenced && !crossing)
    };
    let mut c_fenced = false;
    let mut c_vertex = None;
    for v in k {
        let (fenced, full) = realized(VertexSet::singleton(v));
        c_fenced |= fenced;
        if full && c_vertex.is_none() {
            c_vertex = Some(v);
        }
    }
    let mut d_fenced = false;
    let mut d_edge = None;
    for u in k {
        for v in k.iter().filter(|&v| v > u) {
            let (fenced, full) = realized(VertexSet::singleton(u).with(v));
            d_fenced |= fenced;
            if full && d_edge.is_none() {
                d_edge = Some((u, v));
            }
        }
    }
    let branches = FencedBranches {
        lpt,
        omega,
        a,
        b,
        c_fenced,
        c: c_vertex.is_some(),
        c_vertex,
        d_fenced,
        d: d_edge.is_some(),
        d_edge,
    };
    Ok(LemmaVerdict { holds: a || b || branches.c || branches.d, clique: k, evidence: Evidence::Fenced(branches) })
}

/// lpt(G) <= max{1, ω(G) - 2} for a connected chordal graph.
pub fn check_chordal_theorem(g: &Graph, lps: &LongestPathSet) -> Result<LemmaVerdict> {
    let peo = is_chordal(g).ok_or(Error::NotChordal)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (_, omega) = maximal_cliques_chordal(g, &peo)?;
    let lpt = lpt_from_paths(g, lps)?.size;
    let bound = 1.max(omega.saturating_sub(2));
    Ok(LemmaVerdict { holds: lpt <= bound, clique: VertexSet::EMPTY, evidence: Evidence::Bound { lpt, omega, bound } })
}
