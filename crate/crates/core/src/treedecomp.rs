//! Tree decompositions: validation, exact treewidth, full decompositions,
//! branches, and the transversal-bag checks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cut::classify_unchecked;
use crate::graph::{Graph, VertexSet};
use crate::paths::{LongestPathSet, PathSeq};
use crate::transversal::{is_transversal_of, lpt_from_paths};
use crate::{Error, Result};

pub const MAX_TREEWIDTH_N: usize = 16;
pub const MAX_ORDERINGS_N: usize = 8;

/// A tree on nodes `0..bags.len()` with one bag per node. Edges are stored as
/// sorted `(a, b)` pairs with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    bags: Vec<VertexSet>,
    tree_edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validity {
    Valid {
        width: usize,
    },
    /// Vertex in no bag.
    FailT1 {
        vertex: usize,
    },
    /// Edge in no bag.
    FailT2 {
        edge: (usize, usize),
    },
    /// Vertex whose bags do not induce a subtree.
    FailT3 {
        vertex: usize,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid { .. })
    }
}

impl TreeDecomposition {
    /// Checks node indices only; tree shape is checked by [`validate_decomposition`].
    pub fn new(bags: Vec<VertexSet>, tree_edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges = Vec::with_capacity(tree_edges.len());
        for (a, b) in tree_edges {
            if a >= bags.len() || b >= bags.len() || a == b {
                return Err(Error::Structural(format!("bad tree edge ({a}, {b}) on {} nodes", bags.len())));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(TreeDecomposition { bags, tree_edges: edges })
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, t: usize) -> VertexSet {
        self.bags[t]
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Largest bag size minus one (0 for no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn neighbors(&self, t: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .tree_edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == t {
                    Some(b)
                } else if b == t {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Nodes reachable from `start` without entering `blocked`.
    fn reach(&self, adj: &[Vec<usize>], start: usize, blocked: Option<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.bags.len()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for &u in &adj[t] {
                if !seen[u] && Some(u) != blocked {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    fn is_tree(&self) -> bool {
        let m = self.bags.len();
        m > 0 && self.tree_edges.len() == m - 1 && self.reach(&self.adjacency(), 0, None).iter().all(|&s| s)
    }

    pub fn validate(&self, g: &Graph) -> Result<Validity> {
        validate_decomposition(g, self)
    }
}

/// First failing condition among T1, T2, T3 (each scanned by smallest witness).
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<Validity> {
    if !td.is_tree() {
        return Err(Error::Structural("decomposition tree is not a tree".into()));
    }
    if let Some(b) = td.bags.iter().find(|b| !b.is_subset(g.vertices())) {
        return Err(Error::Validation(format!("bag {b:?} has vertices outside the graph")));
    }
    let covered = td.bags.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
    if let Some(vertex) = g.vertices().difference(covered).min() {
        return Ok(Validity::FailT1 { vertex });
    }
    for (u, v) in g.edges() {
        let e = VertexSet::singleton(u).with(v);
        if !td.bags.iter().any(|b| e.is_subset(*b)) {
            return Ok(Validity::FailT2 { edge: (u, v) });
        }
    }
    let adj = td.adjacency();
    for v in g.vertices() {
        let holders: Vec<usize> = (0..td.bags.len()).filter(|&t| td.bags[t].contains(v)).collect();
        // the holders must be connected within the holder-induced subtree
        let mut seen = vec![false; td.bags.len()];
        seen[holders[0]] = true;
        let mut stack = vec![holders[0]];
        while let Some(t) = stack.pop() {
            for &u in &adj[t] {
                if !seen[u] && td.bags[u].contains(v) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if holders.iter().any(|&t| !seen[t]) {
            return Ok(Validity::FailT3 { vertex: v });
        }
    }
    Ok(Validity::Valid { width: td.width() })
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` through `eliminated`.
fn fill_neighbors(g: &Graph, eliminated: VertexSet, v: usize) -> VertexSet {
    let through = g.reach(v, eliminated.with(v));
    let mut out = VertexSet::EMPTY;
    for u in through {
        out = out.union(g.neighbors(u));
    }
    out.difference(eliminated).without(v)
}

/// Decomposition induced by eliminating vertices in `order`.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("treewidth of the empty graph".into()));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::Validation("elimination order is not a permutation".into()));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(Error::Validation("elimination order is not a permutation".into()));
    }
    // node i holds order[i] and its later neighbors in the filled graph
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    let mut eliminated = VertexSet::EMPTY;
    for (i, &v) in order.iter().enumerate() {
        let later = fill_neighbors(g, eliminated, v);
        bags.push(later.with(v));
        match later.iter().min_by_key(|&u| pos[u]) {
            Some(u) => edges.push((i, pos[u])),
            None => roots.push(i),
        }
        eliminated.insert(v);
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges)
}

/// Elimination width by explicit fill-in: each eliminated vertex turns its
/// remaining neighborhood into a clique.
fn ordering_width(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut gone = vec![false; n];
    let mut width = 0;
    for &v in order {
        let nbrs: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
        width = width.max(nbrs.len());
        for &a in &nbrs {
            for &b in &nbrs {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        gone[v] = true;
    }
    width
}

/// Exact treewidth by dynamic programming over the set of vertices eliminated
/// first, with an optimal decomposition.
pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n > MAX_TREEWIDTH_N {
        return Err(Error::UnsupportedSize { n, limit: MAX_TREEWIDTH_N, what: "exact treewidth" });
    }
    if n == 0 {
        return Err(Error::Precondition("treewidth of the empty graph".into()));
    }
    let full = 1usize << n;
    // best[S]: min over orderings of S of the largest fill degree met while
    // eliminating S first; last[S]: the vertex eliminated last in that ordering
    let mut best = vec![u8::MAX; full];
    let mut last = vec![u8::MAX; full];
    best[0] = 0;
    for bits in 1..full {
        let s = VertexSet::from_bits(bits as u64);
        for v in s {
            let rest = s.without(v);
            let cost = best[rest.bits() as usize].max(fill_neighbors(g, rest, v).len() as u8);
            if cost < best[bits] {
                best[bits] = cost;
                last[bits] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full - 1;
    while s != 0 {
        let v = last[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let width = best[full - 1] as usize;
    let td = decomposition_from_ordering(g, &order)?;
    if td.width() != width {
        return Err(Error::InternalInconsistency(format!("ordering width {} but dp width {width}", td.width())));
    }
    Ok((width, td))
}

/// Treewidth as the minimum elimination width over every vertex ordering.
pub fn treewidth_by_orderings(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > MAX_ORDERINGS_N {
        return Err(Error::UnsupportedSize { n, limit: MAX_ORDERINGS_N, what: "ordering brute force" });
    }
    fn permute(g: &Graph, order: &mut Vec<usize>, k: usize, best: &mut usize) {
        if k == order.len() {
            *best = (*best).min(ordering_width(g, order));
            return;
        }
        for i in k..order.len() {
            order.swap(k, i);
            permute(g, order, k + 1, best);
            order.swap(k, i);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(g, &mut order, 0, &mut best);
    Ok(if n == 0 { 0 } else { best })
}

/// Working copy of a decomposition with removable nodes.
struct Editable {
    bags: Vec<Option<VertexSet>>,
    adj: Vec<BTreeSet<usize>>,
}

impl Editable {
    fn contract_into(&mut self, t: usize, into: usize) {
        let nbrs = std::mem::take(&mut self.adj[t]);
        for u in nbrs {
            self.adj[u].remove(&t);
            if u != into {
                self.adj[u].insert(into);
                self.adj[into].insert(u);
            }
        }
        self.bags[t] = None;
    }

    /// Contract the first edge (smallest ids) whose one bag lies inside the other.
    fn contract_one(&mut self) -> bool {
        for t in 0..self.bags.len() {
            let Some(bt) = self.bags[t] else { continue };
            let nbrs: Vec<usize> = self.adj[t].iter().copied().collect();
            for u in nbrs {
                if bt.is_subset(self.bags[u].expect("live neighbor")) {
                    self.contract_into(t, u);
                    return true;
                }
            }
        }
        false
    }

    /// Grow the first bag below `size` by the smallest new vertex of its
    /// smallest-id neighbor.
    fn pad_one(&mut self, size: usize) -> bool {
        for t in 0..self.bags.len() {
            let Some(bt) = self.bags[t] else { continue };
            if bt.len() >= size {
                continue;
            }
            for &u in &self.adj[t] {
                if let Some(x) = self.bags[u].expect("live neighbor").difference(bt).min() {
                    self.bags[t] = Some(bt.with(x));
                    return true;
                }
            }
        }
        false
    }
}

/// A decomposition of the same graph where every bag has `k + 1` vertices and
/// adjacent bags share exactly `k`.
pub fn make_full_decomposition(td: &TreeDecomposition, k: usize) -> Result<TreeDecomposition> {
    if !td.is_tree() {
        return Err(Error::Structural("decomposition tree is not a tree".into()));
    }
    if td.width() > k {
        return Err(Error::Precondition(format!("width {} exceeds {k}", td.width())));
    }
    let covered = td.bags.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
    if covered.len() < k + 1 {
        return Err(Error::Precondition(format!("{} vertices cannot fill bags of size {}", covered.len(), k + 1)));
    }
    let adj = td.adjacency();
    let mut ed = Editable {
        bags: td.bags.iter().map(|&b| Some(b)).collect(),
        adj: adj.into_iter().map(|l| l.into_iter().collect()).collect(),
    };
    loop {
        if ed.contract_one() {
            continue;
        }
        if ed.pad_one(k + 1) {
            continue;
        }
        break;
    }
    // renumber the surviving nodes
    let alive: Vec<usize> = (0..ed.bags.len()).filter(|&t| ed.bags[t].is_some()).collect();
    let mut index = vec![usize::MAX; ed.bags.len()];
    for (i, &t) in alive.iter().enumerate() {
        index[t] = i;
    }
    let mut bags: Vec<VertexSet> = alive.iter().map(|&t| ed.bags[t].expect("alive")).collect();
    if bags.iter().any(|b| b.len() != k + 1) {
        return Err(Error::InternalInconsistency("padding left a short bag".into()));
    }
    let mut edges = Vec::new();
    for &t in &alive {
        for &u in ed.adj[t].iter().filter(|&&u| u > t) {
            let (a, b) = (index[t], index[u]);
            let (mut from, to) = (bags[a], bags[b]);
            let mut prev = a;
            // walk from one bag to the other swapping one vertex at a time
            while from.intersection(to).len() < k {
                let out = from.difference(to).min().expect("bags differ");
                let inn = to.difference(from).min().expect("bags have equal size");
                from = from.without(out).with(inn);
                bags.push(from);
                edges.push((prev, bags.len() - 1));
                prev = bags.len() - 1;
            }
            edges.push((prev, b));
        }
    }
    TreeDecomposition::new(bags, edges)
}

/// A node of the tree or a vertex of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Locus {
    Node(usize),
    Vertex(usize),
}

/// Smallest node id of the branch of the tree at `t` containing `x`.
pub fn branch_of(td: &TreeDecomposition, t: usize, x: Locus) -> Result<usize> {
    let m = td.node_count();
    if t >= m {
        return Err(Error::Precondition(format!("node {t} out of range")));
    }
    let start = match x {
        Locus::Node(u) if u == t || u >= m => {
            return Err(Error::Precondition(format!("node {u} is not a node of T - {t}")));
        }
        Locus::Node(u) => u,
        Locus::Vertex(v) => {
            if td.bags[t].contains(v) {
                return Err(Error::Precondition(format!("vertex {v} lies in bag {t}")));
            }
            (0..m)
                .find(|&u| td.bags[u].contains(v))
                .ok_or_else(|| Error::Precondition(format!("vertex {v} is in no bag")))?
        }
    };
    let seen = td.reach(&td.adjacency(), start, Some(t));
    Ok(seen.iter().position(|&s| s).expect("start is reached"))
}

/// Smallest node whose bag meets every longest path.
pub fn find_transversal_bag(g: &Graph, td: &TreeDecomposition, lps: &LongestPathSet) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !validate_decomposition(g, td)?.is_valid() {
        return Err(Error::Precondition("decomposition is not valid".into()));
    }
    (0..td.node_count())
        .find(|&t| is_transversal_of(lps, td.bags[t]))
        .ok_or_else(|| Error::InternalInconsistency("no bag meets every longest path".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwVerdict {
    pub holds: bool,
    pub lpt: usize,
    pub treewidth: usize,
    pub transversal_bag: VertexSet,
}

/// lpt(G) <= tw(G), with the transversal bag of an optimal decomposition.
pub fn check_tw_theorem(g: &Graph, lps: &LongestPathSet) -> Result<TwVerdict> {
    let (treewidth, td) = exact_treewidth(g)?;
    let lpt = lpt_from_paths(g, lps)?.size;
    let t = find_transversal_bag(g, &td, lps)?;
    Ok(TwVerdict { holds: lpt <= treewidth, lpt, treewidth, transversal_bag: td.bags[t] })
}

/// A failed instance of one of the branch and separator properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "kebab-case")]
pub enum PropViolation {
    /// The shared bag of a tree edge fails to separate the two sides.
    Separator { edge: (usize, usize), u: usize, v: usize },
    /// A fenced path reaches two branches at a node.
    PathBranch { node: usize, path: VertexSet },
    /// A fenced 1-touching path touches outside the adjacent bag toward it.
    TouchOutsideAdjacent { node: usize, neighbor: usize, path: VertexSet },
    /// Two fenced 1-touching paths meet although one touches outside the
    /// adjacent bag toward the other.
    FencedPathsMeet { node: usize, neighbor: usize, p: VertexSet, q: VertexSet },
}

/// Separator property over every tree edge of `td`.
pub fn check_separator_property(g: &Graph, td: &TreeDecomposition) -> Vec<PropViolation> {
    let adj = td.adjacency();
    let mut out = Vec::new();
    for &(p, q) in &td.tree_edges {
        let sep = td.bags[p].intersection(td.bags[q]);
        let side = |from: usize, blocked: usize| {
            td.reach(&adj, from, Some(blocked))
                .iter()
                .enumerate()
                .filter(|&(_, &s)| s)
                .fold(VertexSet::EMPTY, |a, (t, _)| a.union(td.bags[t]))
                .difference(sep)
        };
        let (a, b) = (side(p, q), side(q, p));
        for u in a {
            let comp = g.reach(u, g.vertices().difference(sep));
            if let Some(v) = comp.intersection(b).min() {
                out.push(PropViolation::Separator { edge: (p, q), u, v });
                break;
            }
        }
    }
    out
}

/// Vertex sets of the longest paths and all their tails.
fn tail_vertex_sets(lps: &LongestPathSet) -> BTreeSet<VertexSet> {
    let mut out = BTreeSet::new();
    for p in &lps.paths {
        for &v in p.vertices() {
            let (a, b) = p.tails_at(v).expect("vertex on the path");
            out.insert(a.vertex_set());
            out.insert(b.vertex_set());
        }
    }
    out
}

/// Branch consistency of fenced paths and the two 1-touching tail properties,
/// over the longest paths of `g` and their tails, at every node of `td`.
pub fn check_branch_props(g: &Graph, td: &TreeDecomposition, lps: &LongestPathSet) -> Result<Vec<PropViolation>> {
    let mut out = Vec::new();
    let sets = tail_vertex_sets(lps);
    for t in 0..td.node_count() {
        let bag = td.bags[t];
        let mut corner: Vec<(VertexSet, usize, usize)> = Vec::new();
        for &ps in &sets {
            let c = classify_unchecked(g, &set_path(ps), bag);
            if !c.is_fenced() {
                continue;
            }
            let branches: BTreeSet<usize> =
                ps.difference(bag).iter().map(|v| branch_of(td, t, Locus::Vertex(v))).collect::<Result<_>>()?;
            if branches.len() != 1 {
                out.push(PropViolation::PathBranch { node: t, path: ps });
                continue;
            }
            if c.touch_count == 1 {
                let branch = *branches.first().expect("one branch");
                corner.push((ps, c.touched.min().expect("touched"), branch));
            }
        }
        for t2 in td.neighbors(t) {
            let branch = branch_of(td, t, Locus::Node(t2))?;
            let inside = bag.intersection(td.bags[t2]);
            for &(p, x, pb) in &corner {
                if pb != branch {
                    continue;
                }
                if !inside.contains(x) {
                    out.push(PropViolation::TouchOutsideAdjacent { node: t, neighbor: t2, path: p });
                }
                for &(q, y, _) in &corner {
                    if !inside.contains(y) && p.intersects(q) {
                        out.push(PropViolation::FencedPathsMeet { node: t, neighbor: t2, p, q });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Classification depends on the vertex set only; any order stands in.
fn set_path(s: VertexSet) -> PathSeq {
    PathSeq::from_vec_unchecked(s.to_vec())
}

/// PACE `.td` text for `td` as a decomposition of a graph on `n` vertices.
pub fn to_td_format(td: &TreeDecomposition, n: usize) -> String {
    let max_bag = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    let mut s = format!("s td {} {} {}\n", td.bags.len(), max_bag, n);
    for (i, b) in td.bags.iter().enumerate() {
        s.push_str(&format!("b {}", i + 1));
        for v in *b {
            s.push_str(&format!(" {}", v + 1));
        }
        s.push('\n');
    }
    for &(a, b) in &td.tree_edges {
        s.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    s
}

/// Parse PACE `.td` text; returns the decomposition and the vertex count.
pub fn parse_td_format(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let at = offset;
        offset += line.len() + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num =
            |s: &str| s.parse::<usize>().map_err(|_| Error::Parse { offset: at, reason: format!("bad number {s:?}") });
        match fields.first().copied() {
            None | Some("c") => {}
            Some("s") => {
                if fields.len() != 5 || fields[1] != "td" || header.is_some() {
                    return Err(Error::Parse { offset: at, reason: "bad solution line".into() });
                }
                let (nb, n) = (num(fields[2])?, num(fields[4])?);
                if n > crate::graph::MAX_VERTICES {
                    return Err(Error::UnsupportedSize { n, limit: crate::graph::MAX_VERTICES, what: "td vertices" });
                }
                header = Some((nb, n));
                bags = vec![None; nb];
            }
            Some("b") => {
                let (nb, n) = header.ok_or(Error::Parse { offset: at, reason: "bag before header".into() })?;
                let id = num(fields.get(1).copied().unwrap_or(""))?;
                if id == 0 || id > nb || bags[id - 1].is_some() {
                    return Err(Error::Parse { offset: at, reason: format!("bad bag id {id}") });
                }
                let mut bag = VertexSet::EMPTY;
                for f in &fields[2..] {
                    let v = num(f)?;
                    if v == 0 || v > n {
                        return Err(Error::Parse { offset: at, reason: format!("vertex {v} out of range") });
                    }
                    bag.insert(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            Some(_) => {
                let (nb, _) = header.ok_or(Error::Parse { offset: at, reason: "edge before header".into() })?;
                if fields.len() != 2 {
                    return Err(Error::Parse { offset: at, reason: "expected a tree edge".into() });
                }
                let (a, b) = (num(fields[0])?, num(fields[1])?);
                if a == 0 || b == 0 || a > nb || b > nb {
                    return Err(Error::Parse { offset: at, reason: format!("tree edge {a} {b} out of range") });
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, n) = header.ok_or(Error::Parse { offset: 0, reason: "missing solution line".into() })?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(Error::Parse { offset, reason: format!("bag {} missing", i + 1) }))
        .collect::<Result<Vec<_>>>()?;
    Ok((TreeDecomposition::new(bags, edges)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_longest_paths;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn p4_bags() -> TreeDecomposition {
        TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])], vec![(0, 1), (1, 2)]).unwrap()
    }

    fn assert_full(g: &Graph, td: &TreeDecomposition, k: usize) {
        assert!(td.validate(g).unwrap().is_valid(), "{td:?}");
        assert!(td.bags().iter().all(|b| b.len() == k + 1), "{td:?}");
        for &(a, b) in td.tree_edges() {
            assert_eq!(td.bag(a).intersection(td.bag(b)).len(), k, "{td:?}");
        }
    }

    #[test]
    fn validation_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4_bags().validate(&p4).unwrap(), Validity::Valid { width: 1 });

        let missing =
            TreeDecomposition::new(vec![set(&[0, 1]), set(&[1]), set(&[2, 3])], vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(missing.validate(&p4).unwrap(), Validity::FailT2 { edge: (1, 2) });

        let gap = TreeDecomposition::new(vec![set(&[0, 1]), set(&[2]), set(&[1, 2, 3])], vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(gap.validate(&p4).unwrap(), Validity::FailT3 { vertex: 1 });

        let uncovered = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2])], vec![(0, 1)]).unwrap();
        assert_eq!(uncovered.validate(&p4).unwrap(), Validity::FailT1 { vertex: 3 });

        let forest = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2, 3])], vec![]).unwrap();
        assert!(matches!(forest.validate(&p4), Err(Error::Structural(_))));
    }

    #[test]
    fn treewidth_examples() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(exact_treewidth(&tree).unwrap().0, 1);
        let (w, td) = exact_treewidth(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!((w, td.width()), (4, 4));
        let c5 = Graph::cycle(5).unwrap();
        let (w, td) = exact_treewidth(&c5).unwrap();
        assert_eq!(w, 2);
        assert_eq!(treewidth_by_orderings(&c5).unwrap(), 2);
        assert!(td.validate(&c5).unwrap().is_valid());
        assert!(exact_treewidth(&Graph::empty(17).unwrap()).is_err());
    }

    #[test]
    fn treewidth_matches_orderings_oracle() {
        for n in 1..=6 {
            for g in crate::catalog::enumerate_graphs(n, crate::catalog::GraphClass::All, false).unwrap() {
                let (w, td) = exact_treewidth(&g).unwrap();
                assert_eq!(w, treewidth_by_orderings(&g).unwrap(), "{g:?}");
                assert_eq!(td.validate(&g).unwrap(), Validity::Valid { width: w });
            }
        }
    }

    #[test]
    fn disconnected_graph_decomposition() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let (w, td) = exact_treewidth(&g).unwrap();
        assert_eq!(w, 1);
        assert!(td.validate(&g).unwrap().is_valid());
    }

    #[test]
    fn full_decomposition_examples() {
        let full = make_full_decomposition(&p4_bags(), 1).unwrap();
        assert_full(&Graph::path(4).unwrap(), &full, 1);
        assert_eq!(full, p4_bags());

        let single = TreeDecomposition::new(vec![set(&[0, 1])], vec![]).unwrap();
        assert_eq!(make_full_decomposition(&single, 1).unwrap(), single);
        assert_full(&Graph::path(2).unwrap(), &single, 1);

        let c5 = Graph::cycle(5).unwrap();
        let (_, td) = exact_treewidth(&c5).unwrap();
        assert_full(&c5, &make_full_decomposition(&td, 2).unwrap(), 2);

        assert!(make_full_decomposition(&p4_bags(), 0).is_err());
        assert!(make_full_decomposition(&single, 2).is_err());
    }

    #[test]
    fn full_decomposition_over_catalog() {
        for n in 2..=6 {
            for g in crate::catalog::enumerate_graphs(n, crate::catalog::GraphClass::All, true).unwrap() {
                let (w, td) = exact_treewidth(&g).unwrap();
                assert_full(&g, &make_full_decomposition(&td, w).unwrap(), w);
                if w + 2 <= n {
                    assert_full(&g, &make_full_decomposition(&td, w + 1).unwrap(), w + 1);
                }
            }
        }
    }

    #[test]
    fn branch_examples() {
        let td = p4_bags();
        assert_ne!(branch_of(&td, 1, Locus::Node(0)).unwrap(), branch_of(&td, 1, Locus::Node(2)).unwrap());
        assert_eq!(branch_of(&td, 1, Locus::Vertex(3)).unwrap(), 2);
        assert_eq!(branch_of(&td, 1, Locus::Vertex(0)).unwrap(), 0);
        assert!(branch_of(&td, 1, Locus::Vertex(1)).is_err());
        assert!(branch_of(&td, 1, Locus::Node(1)).is_err());
    }

    #[test]
    fn transversal_bag_examples() {
        let p4 = Graph::path(4).unwrap();
        let lps = enumerate_longest_paths(&p4).unwrap();
        assert_eq!(find_transversal_bag(&p4, &p4_bags(), &lps).unwrap(), 0);

        let star = Graph::star(3).unwrap();
        let peo = crate::chordal::is_chordal(&star).unwrap();
        let td = crate::chordal::build_clique_tree(&star, &peo).unwrap();
        let lps = enumerate_longest_paths(&star).unwrap();
        assert_eq!(find_transversal_bag(&star, &td, &lps).unwrap(), 0);

        let v = check_tw_theorem(&star, &lps).unwrap();
        assert_eq!((v.holds, v.lpt, v.treewidth), (true, 1, 1));
    }

    #[test]
    fn branch_and_separator_props_on_catalog() {
        for n in 2..=6 {
            for g in crate::catalog::enumerate_graphs(n, crate::catalog::GraphClass::All, true).unwrap() {
                let (w, td) = exact_treewidth(&g).unwrap();
                let lps = enumerate_longest_paths(&g).unwrap();
                for d in [td.clone(), make_full_decomposition(&td, w).unwrap()] {
                    assert!(check_separator_property(&g, &d).is_empty(), "{g:?}");
                    assert_eq!(check_branch_props(&g, &d, &lps).unwrap(), vec![], "{g:?}");
                }
            }
        }
    }

    #[test]
    fn separator_violation_is_reported() {
        // a decomposition of C4 that breaks T2, so the shared bag does not separate
        let c4 = Graph::cycle(4).unwrap();
        let td = TreeDecomposition::new(vec![set(&[0, 1, 2]), set(&[2, 3])], vec![(0, 1)]).unwrap();
        assert!(!check_separator_property(&c4, &td).is_empty());
    }

    #[test]
    fn td_format_round_trip() {
        let text = to_td_format(&p4_bags(), 4);
        assert_eq!(text, "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n");
        assert_eq!(parse_td_format(&text).unwrap(), (p4_bags(), 4));
        assert!(parse_td_format("b 1 1\n").is_err());
        assert!(parse_td_format("s td 1 1 2\nb 1 3\n").is_err());
        assert!(parse_td_format("c only\ns td 2 1 1\nb 1 1\n").is_err());
    }
}
