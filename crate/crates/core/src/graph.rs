//! Dense simple undirected graphs on at most 62 vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 62;

/// A set of vertex ids packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`
    pub fn range(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Simple undirected graph with vertex ids `0..n`, stored as adjacency rows.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    name: Option<String>,
}

impl PartialEq for Graph {
    /// Names are labels only; equality is on the adjacency relation.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize { n, limit: MAX_VERTICES, what: "graph" });
        }
        let mut rows = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop { v });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { n, rows, name: None })
    }

    /// Build a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize { n, limit: MAX_VERTICES, what: "graph" });
        }
        for (u, row) in rows.iter().enumerate() {
            if row.contains(u) {
                return Err(Error::Loop { v: u });
            }
            for v in row.iter() {
                if v >= n {
                    return Err(Error::EdgeOutOfRange { u, v, n });
                }
                if !rows[v].contains(u) {
                    return Err(Error::Validation(format!("adjacency not symmetric at ({u}, {v})")));
                }
            }
        }
        Ok(Graph { n, rows, name: None })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::from_edges(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.rows[v]))
    }

    /// Vertices reachable from `start` inside `within` (start included).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.rows[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of `G - s`, ordered by smallest member.
    pub fn components_after_removal(&self, s: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices().difference(s))
    }

    /// Components of the subgraph induced by `within`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach(v, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n || perm.iter().copied().collect::<VertexSet>() != self.vertices() {
            return Err(Error::Precondition("relabeling is not a permutation".into()));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        let mut g = Graph::from_edges(self.n, &edges)?;
        g.name = self.name.clone();
        Ok(g)
    }

    /// Subgraph induced by the first `k` vertices.
    pub fn prefix(&self, k: usize) -> Self {
        let keep = VertexSet::range(k);
        Graph { n: k, rows: self.rows[..k].iter().map(|r| r.intersection(keep)).collect(), name: None }
    }

    /// Append a vertex adjacent to `nbrs`.
    pub fn extended(&self, nbrs: VertexSet) -> Result<Self> {
        if self.n >= MAX_VERTICES {
            return Err(Error::UnsupportedSize { n: self.n + 1, limit: MAX_VERTICES, what: "graph" });
        }
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::Precondition(format!("neighbors {nbrs:?} outside 0..{}", self.n)));
        }
        let v = self.n;
        let mut rows: Vec<_> =
            self.rows.iter().enumerate().map(|(u, r)| if nbrs.contains(u) { r.with(v) } else { *r }).collect();
        rows.push(nbrs);
        Ok(Graph { n: v + 1, rows, name: None })
    }

    /// Parse the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Validation("empty edge list".into()))?;
        let nums = parse_numbers(header)?;
        let [n, m] = nums[..] else {
            return Err(Error::Validation(format!("bad edge-list header {header:?}")));
        };
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let nums = parse_numbers(line)?;
            let [u, v] = nums[..] else {
                return Err(Error::Validation(format!("bad edge line {line:?}")));
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Validation(format!("header promises {m} edges, found {}", edges.len())));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace().map(|t| t.parse().map_err(|_| Error::Validation(format!("bad integer {t:?}")))).collect()
}
