//! Minimum longest-path transversals via exact hitting set.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::paths::{enumerate_longest_paths_with_budget, LongestPathSet, DEFAULT_BUDGET};
use crate::{Error, Result};

/// A family of vertex sets over `0..universe`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub universe: usize,
    pub sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(universe: usize, sets: Vec<VertexSet>) -> Result<Self> {
        if universe > 64 {
            return Err(Error::UnsupportedSize { n: universe, limit: 64, what: "set family universe" });
        }
        if let Some(s) = sets.iter().find(|s| !s.is_subset(VertexSet::range(universe))) {
            return Err(Error::Precondition(format!("{s:?} exceeds universe 0..{universe}")));
        }
        Ok(SetFamily { universe, sets })
    }

    pub fn is_hit_by(&self, h: VertexSet) -> bool {
        self.sets.iter().all(|s| s.intersects(h))
    }
}

/// Smallest set meeting every member; among those, the lexicographically
/// smallest. Cardinalities are tried in increasing order and candidates drawn
/// in lexicographic order from the vertices that occur in some member.
pub fn min_hitting_set(f: &SetFamily) -> Result<VertexSet> {
    if let Some(index) = f.sets.iter().position(|s| s.is_empty()) {
        return Err(Error::Infeasible { index });
    }
    let pool: Vec<usize> = f.sets.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s)).to_vec();
    for k in 0..=pool.len() {
        if let Some(h) = first_hitting_combination(f, &pool, k) {
            return Ok(h);
        }
    }
    unreachable!("the whole pool hits every nonempty member")
}

fn first_hitting_combination(f: &SetFamily, pool: &[usize], k: usize) -> Option<VertexSet> {
    fn rec(f: &SetFamily, pool: &[usize], start: usize, left: usize, chosen: VertexSet) -> Option<VertexSet> {
        if left == 0 {
            return f.is_hit_by(chosen).then_some(chosen);
        }
        // a member with no element at or past `start` can no longer be hit
        let reachable = pool[start..].iter().copied().collect::<VertexSet>().union(chosen);
        if !f.is_hit_by(reachable) {
            return None;
        }
        for i in start..=pool.len() - left {
            if let Some(h) = rec(f, pool, i + 1, left - 1, chosen.with(pool[i])) {
                return Some(h);
            }
        }
        None
    }
    if k > pool.len() {
        return None;
    }
    rec(f, pool, 0, k, VertexSet::EMPTY)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalResult {
    /// L(G), the longest path length.
    pub length: usize,
    pub size: usize,
    pub witness: VertexSet,
    /// For each longest path (in enumeration order), a witness vertex on it.
    pub certificate: Vec<usize>,
}

/// lpt(G) of a connected graph.
pub fn lpt(g: &Graph) -> Result<TransversalResult> {
    lpt_with_budget(g, DEFAULT_BUDGET)
}

pub fn lpt_with_budget(g: &Graph, budget: u64) -> Result<TransversalResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lps = enumerate_longest_paths_with_budget(g, budget)?;
    lpt_from_paths(g, &lps)
}

/// lpt from a precomputed longest path set of `g`.
pub fn lpt_from_paths(g: &Graph, lps: &LongestPathSet) -> Result<TransversalResult> {
    let family = SetFamily::new(g.n(), lps.vertex_sets.clone())?;
    let witness = min_hitting_set(&family)?;
    let certificate = lps
        .paths
        .iter()
        .map(|p| p.vertex_set().intersection(witness).min().expect("witness hits every longest path"))
        .collect();
    Ok(TransversalResult { length: lps.length, size: witness.len(), witness, certificate })
}

/// Whether every longest path of `g` meets `s`.
pub fn is_transversal(g: &Graph, s: VertexSet) -> Result<bool> {
    let lps = enumerate_longest_paths_with_budget(g, DEFAULT_BUDGET)?;
    Ok(is_transversal_of(&lps, s))
}

pub fn is_transversal_of(lps: &LongestPathSet, s: VertexSet) -> bool {
    lps.vertex_sets.iter().all(|p| p.intersects(s))
}

/// Smallest vertex lying on every longest path.
pub fn gallai_vertex(g: &Graph) -> Result<Option<usize>> {
    let lps = enumerate_longest_paths_with_budget(g, DEFAULT_BUDGET)?;
    Ok(gallai_vertex_of(g, &lps))
}

pub fn gallai_vertex_of(g: &Graph, lps: &LongestPathSet) -> Option<usize> {
    lps.common_vertices().intersection(g.vertices()).min()
}

/// The result record written by the `lpt` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LptReport {
    pub n: usize,
    #[serde(rename = "L")]
    pub length: usize,
    pub lpt: usize,
    pub witness: VertexSet,
    pub gallai: Option<usize>,
}

impl LptReport {
    pub fn compute(g: &Graph, budget: u64) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let lps = enumerate_longest_paths_with_budget(g, budget)?;
        let t = lpt_from_paths(g, &lps)?;
        Ok(LptReport { n: g.n(), length: t.length, lpt: t.size, witness: t.witness, gallai: gallai_vertex_of(g, &lps) })
    }
}
