//! How a path meets a vertex set: touch counts, fenced/crossing, extremes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::paths::PathSeq;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Disposition {
    /// `V(P) ⊇ S`.
    ContainsAllOfS,
    /// `V(P) ⊆ S` while missing part of `S`; neither fenced nor crossing.
    InsideS,
    /// Every vertex of `P - S` lies in one component of `G - S`.
    Fenced,
    Crossing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Extremes {
    Joined,
    Separated,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CutClassification {
    pub touch_count: usize,
    pub touched: VertexSet,
    pub disposition: Disposition,
    pub extremes: Extremes,
    /// Smallest vertex of the component of `G - S` holding `P - S`; fenced paths only.
    pub component_id: Option<usize>,
}

impl CutClassification {
    pub fn is_fenced(&self) -> bool {
        self.disposition == Disposition::Fenced
    }

    pub fn is_crossing(&self) -> bool {
        self.disposition == Disposition::Crossing
    }
}

pub fn touch_count(p: &PathSeq, s: VertexSet) -> usize {
    p.vertex_set().intersection(s).len()
}

/// Component ids (smallest member) of `G - S`, indexed by vertex.
fn component_ids(g: &Graph, s: VertexSet) -> Vec<Option<usize>> {
    let mut ids = vec![None; g.n()];
    for comp in g.components_after_removal(s) {
        let id = comp.min();
        for v in comp {
            ids[v] = id;
        }
    }
    ids
}

/// Classify `p` against `s`. Validates `p` as a path of `g`.
pub fn classify(g: &Graph, p: &PathSeq, s: VertexSet) -> Result<CutClassification> {
    PathSeq::new(g, p.vertices().to_vec())?;
    Ok(classify_unchecked(g, p, s))
}

/// [`classify`] without re-validating the path.
pub fn classify_unchecked(g: &Graph, p: &PathSeq, s: VertexSet) -> CutClassification {
    let vp = p.vertex_set();
    let touched = vp.intersection(s);
    let mut c = CutClassification {
        touch_count: touched.len(),
        touched,
        disposition: Disposition::ContainsAllOfS,
        extremes: Extremes::NotApplicable,
        component_id: None,
    };
    if s.is_subset(vp) {
        return c;
    }
    let outside = vp.difference(s);
    if outside.is_empty() {
        c.disposition = Disposition::InsideS;
        return c;
    }
    let ids = component_ids(g, s);
    let comps: BTreeSet<usize> = outside.iter().filter_map(|v| ids[v]).collect();
    if comps.len() == 1 {
        c.disposition = Disposition::Fenced;
        c.component_id = comps.first().copied();
        return c;
    }
    c.disposition = Disposition::Crossing;
    let (a, b) = (p.first(), p.last());
    if !s.contains(a) && !s.contains(b) {
        c.extremes = if ids[a] == ids[b] { Extremes::Joined } else { Extremes::Separated };
    }
    c
}

/// Ids of the components of `G - S` meeting `X \ S`.
pub fn comp_of(g: &Graph, s: VertexSet, x: VertexSet) -> Result<BTreeSet<usize>> {
    if x.is_subset(s) {
        return Err(Error::Precondition(format!("{x:?} is contained in {s:?}")));
    }
    let ids = component_ids(g, s);
    Ok(x.difference(s).iter().filter_map(|v| ids[v]).collect())
}

/// Whether `p` and `q` touch `s` at the same vertices.
pub fn s_equivalent(p: &PathSeq, q: &PathSeq, s: VertexSet) -> bool {
    p.vertex_set().intersection(s) == q.vertex_set().intersection(s)
}
