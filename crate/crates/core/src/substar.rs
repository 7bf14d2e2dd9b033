//! Full substar intersection models and their longest-path checks.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::paths::{LongestPathSet, PathSeq};
use crate::transversal::{gallai_vertex_of, lpt_from_paths};
use crate::{Error, Result};

pub const MAX_HOST_NODES: usize = 7;
pub const MAX_STARS: usize = 8;

/// A tree on nodes `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostTree {
    tree: Graph,
}

impl HostTree {
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_graph(Graph::from_edges(m, edges)?)
    }

    pub fn from_graph(tree: Graph) -> Result<Self> {
        if tree.n() == 0 || tree.edge_count() != tree.n() - 1 || !tree.is_connected() {
            return Err(Error::Structural("host is not a tree".into()));
        }
        Ok(HostTree { tree })
    }

    pub fn path(m: usize) -> Result<Self> {
        Self::from_graph(Graph::path(m)?)
    }

    pub fn m(&self) -> usize {
        self.tree.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.tree
    }

    pub fn neighbors(&self, x: usize) -> VertexSet {
        self.tree.neighbors(x)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.tree.degree(x)
    }

    /// Nodes of the component of `T - x` holding the neighbour `y`.
    pub fn branch(&self, x: usize, y: usize) -> VertexSet {
        self.tree.reach(y, self.tree.vertices().without(x))
    }
}

/// A substar of the host: a center and some of its neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    pub leaves: VertexSet,
}

impl Star {
    pub fn nodes(&self) -> VertexSet {
        self.leaves.with(self.center)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstarModel {
    pub host: HostTree,
    pub stars: Vec<Star>,
    /// Display names, one per star.
    pub names: Vec<String>,
}

impl SubstarModel {
    pub fn new(host: HostTree, stars: Vec<Star>) -> Result<Self> {
        let names = (0..stars.len()).map(|i| format!("s{i}")).collect();
        let m = SubstarModel { host, stars, names };
        m.validate()?;
        Ok(m)
    }

    /// Leaves are host neighbours of the center, missing at most one.
    pub fn validate(&self) -> Result<()> {
        if self.names.len() != self.stars.len() {
            return Err(Error::Validation("one name per star required".into()));
        }
        for (s, name) in self.stars.iter().zip(&self.names) {
            if s.center >= self.host.m() {
                return Err(Error::Validation(format!("star {name}: center {} is not a host node", s.center)));
            }
            let nbrs = self.host.neighbors(s.center);
            if !s.leaves.is_subset(nbrs) {
                return Err(Error::Validation(format!("star {name}: leaves are not neighbours of the center")));
            }
            if s.leaves.len() + 1 < nbrs.len() {
                return Err(Error::Validation(format!("star {name} is not full")));
            }
        }
        Ok(())
    }

    /// Stars centered at host node `x`.
    pub fn centered_at(&self, x: usize) -> VertexSet {
        (0..self.stars.len()).filter(|&i| self.stars[i].center == x).collect()
    }

    /// Stars centered inside the host node set `nodes`.
    pub fn centered_in(&self, nodes: VertexSet) -> VertexSet {
        (0..self.stars.len()).filter(|&i| nodes.contains(self.stars[i].center)).collect()
    }

    /// Text form: node count, tree edges, then `name center leaf...` per star.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.host.m());
        for (u, v) in self.host.graph().edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        for (star, name) in self.stars.iter().zip(&self.names) {
            s.push_str(&format!("{name} {}", star.center));
            for l in star.leaves {
                s.push_str(&format!(" {l}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let t = line.trim();
            if !t.is_empty() && !t.starts_with('#') {
                lines.push((offset, t));
            }
            offset += line.len() + 1;
        }
        let bad = |at: usize, reason: &str| Error::Parse { offset: at, reason: reason.into() };
        let num = |at: usize, s: &str| s.parse::<usize>().map_err(|_| bad(at, "expected a number"));
        let &(at, first) = lines.first().ok_or_else(|| bad(0, "empty model"))?;
        let m = num(at, first)?;
        if m == 0 || lines.len() < m {
            return Err(bad(at, "missing host edges"));
        }
        let mut edges = Vec::new();
        for &(at, line) in &lines[1..m] {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 2 {
                return Err(bad(at, "expected a host edge"));
            }
            edges.push((num(at, f[0])?, num(at, f[1])?));
        }
        let host = HostTree::new(m, &edges)?;
        let (mut stars, mut names) = (Vec::new(), Vec::new());
        for &(at, line) in &lines[m..] {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() < 2 {
                return Err(bad(at, "expected a star"));
            }
            let leaves = f[2..].iter().map(|s| num(at, s)).collect::<Result<Vec<_>>>()?;
            if leaves.iter().any(|&l| l >= m) {
                return Err(bad(at, "leaf is not a host node"));
            }
            names.push(f[0].to_string());
            stars.push(Star { center: num(at, f[1])?, leaves: leaves.into_iter().collect() });
        }
        let model = SubstarModel { host, stars, names };
        model.validate()?;
        Ok(model)
    }
}

/// One vertex per star, adjacent iff the stars share a host node.
pub fn intersection_graph(m: &SubstarModel) -> Result<Graph> {
    m.validate()?;
    let mut edges = Vec::new();
    for i in 0..m.stars.len() {
        for j in i + 1..m.stars.len() {
            if m.stars[i].nodes().intersects(m.stars[j].nodes()) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(m.stars.len(), &edges)
}

/// Stars centered at `x`, and stars centered in the branch at `x` holding `y`.
pub fn center_sets(m: &SubstarModel, x: usize, y: usize) -> Result<(VertexSet, VertexSet)> {
    if x >= m.host.m() || !m.host.neighbors(x).contains(y) {
        return Err(Error::Precondition(format!("{y} is not a host neighbour of {x}")));
    }
    Ok((m.centered_at(x), m.centered_in(m.host.branch(x, y))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnebranchViolation {
    /// The avoided vertex and its center.
    pub vertex: usize,
    pub center: usize,
    pub path: PathSeq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnebranchVerdict {
    pub holds: bool,
    /// (vertex, longest path avoiding it) pairs examined.
    pub pairs_checked: usize,
    pub violation: Option<OnebranchViolation>,
}

/// For each vertex `x` centered at `X` and each longest path avoiding `x`:
/// some host neighbour `Y` of `X` has the path inside the stars centered at
/// `X` or in the branch toward `Y`; at most one path vertex is centered at
/// `X`; and when exactly one is, `Y` is not a node of `x`'s star.
pub fn check_previous_onebranch(m: &SubstarModel, lps: &LongestPathSet) -> Result<OnebranchVerdict> {
    let g = intersection_graph(m)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut pairs_checked = 0;
    for x in 0..m.stars.len() {
        let center = m.stars[x].center;
        let at_center = m.centered_at(center);
        for p in lps.paths.iter().filter(|p| !p.contains(x)) {
            pairs_checked += 1;
            let vp = p.vertex_set();
            let on_center = vp.intersection(at_center).len();
            let some_branch = m.host.neighbors(center).iter().any(|y| {
                let branch = m.centered_in(m.host.branch(center, y));
                vp.is_subset(branch.union(at_center)) && (on_center != 1 || !m.stars[x].nodes().contains(y))
            });
            if on_center > 1 || !some_branch {
                return Ok(OnebranchVerdict {
                    holds: false,
                    pairs_checked,
                    violation: Some(OnebranchViolation { vertex: x, center, path: p.clone() }),
                });
            }
        }
    }
    Ok(OnebranchVerdict { holds: true, pairs_checked, violation: None })
}

/// What the branch argument sees at one host node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub node: usize,
    pub centered: usize,
    /// Host neighbours `Y` with a longest path inside the branch toward `Y`.
    pub confined_toward: Vec<usize>,
    /// With no star centered here and no confined longest path: whether every
    /// longest path holds every star through this node.
    pub all_paths_hold_clique: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstarVerdict {
    pub holds: bool,
    pub lpt: usize,
    pub gallai: Option<usize>,
    pub nodes: Vec<NodeRecord>,
}

/// lpt = 1 for the intersection graph, with the per-node branch records.
pub fn check_substar_theorem(m: &SubstarModel, lps: &LongestPathSet) -> Result<SubstarVerdict> {
    let g = intersection_graph(m)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lpt = lpt_from_paths(&g, lps)?.size;
    let mut nodes = Vec::new();
    for x in 0..m.host.m() {
        let centered = m.centered_at(x).len();
        let confined_toward: Vec<usize> = m
            .host
            .neighbors(x)
            .iter()
            .filter(|&y| {
                let branch = m.centered_in(m.host.branch(x, y));
                lps.vertex_sets.iter().any(|vp| vp.is_subset(branch))
            })
            .collect();
        let all_paths_hold_clique = (centered == 0 && confined_toward.is_empty()).then(|| {
            let clique: VertexSet = (0..m.stars.len()).filter(|&i| m.stars[i].nodes().contains(x)).collect();
            lps.vertex_sets.iter().all(|vp| clique.is_subset(*vp))
        });
        nodes.push(NodeRecord { node: x, centered, confined_toward, all_paths_hold_clique });
    }
    let records_ok = nodes.iter().all(|r| r.all_paths_hold_clique != Some(false));
    Ok(SubstarVerdict { holds: lpt == 1 && records_ok, lpt, gallai: gallai_vertex_of(&g, lps), nodes })
}

/// Every full star of the host: centers ascending, leaf sets in lexicographic
/// order.
pub fn full_stars(host: &HostTree) -> Vec<Star> {
    let mut out = Vec::new();
    for center in 0..host.m() {
        let nbrs = host.neighbors(center);
        let mut sets: Vec<VertexSet> = (0..1u64 << nbrs.len())
            .map(|mask| nbrs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).collect())
            .filter(|s: &VertexSet| s.len() + 1 >= nbrs.len())
            .collect();
        sets.sort();
        out.extend(sets.into_iter().map(|leaves| Star { center, leaves }));
    }
    out
}

/// Multisets of `star_count` full stars, as nondecreasing index sequences into
/// [`full_stars`]. With `suppress_duplicates`, no two stars share a node set.
pub struct ModelIter {
    host: HostTree,
    types: Vec<Star>,
    idx: Vec<usize>,
    suppress_duplicates: bool,
    done: bool,
}

impl ModelIter {
    fn advance(&mut self) {
        let k = self.idx.len();
        let t = self.types.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] + 1 < t {
                let v = self.idx[i] + 1;
                for slot in &mut self.idx[i..] {
                    *slot = v;
                }
                return;
            }
        }
        self.done = true;
    }

    fn acceptable(&self) -> bool {
        !self.suppress_duplicates
            || self.idx.windows(2).all(|w| w[0] != w[1])
                && (0..self.idx.len()).all(|i| {
                    (i + 1..self.idx.len()).all(|j| self.types[self.idx[i]].nodes() != self.types[self.idx[j]].nodes())
                })
    }
}

impl Iterator for ModelIter {
    type Item = SubstarModel;

    fn next(&mut self) -> Option<SubstarModel> {
        while !self.done {
            let ok = self.acceptable();
            let stars: Vec<Star> = self.idx.iter().map(|&i| self.types[i]).collect();
            self.advance();
            if ok {
                return Some(SubstarModel::new(self.host.clone(), stars).expect("full stars form a valid model"));
            }
        }
        None
    }
}

pub fn enumerate_models(host: &HostTree, star_count: usize, suppress_duplicates: bool) -> Result<ModelIter> {
    if host.m() > MAX_HOST_NODES {
        return Err(Error::UnsupportedSize { n: host.m(), limit: MAX_HOST_NODES, what: "host tree" });
    }
    if star_count > MAX_STARS {
        return Err(Error::UnsupportedSize { n: star_count, limit: MAX_STARS, what: "star count" });
    }
    let types = full_stars(host);
    Ok(ModelIter {
        host: host.clone(),
        done: star_count == 0 || types.is_empty(),
        types,
        idx: vec![0; star_count],
        suppress_duplicates,
    })
}
