//! Exact longest paths by exhaustive depth-first search.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Default cap on DFS node expansions per graph.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Intended upper limit on graph order for exhaustive path search.
pub const MAX_PATH_N: usize = 16;

/// A vertex-simple path, stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathSeq(Vec<usize>);

impl PathSeq {
    /// Validate `vertices` as a nonempty simple path of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty vertex sequence".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.n() {
                return Err(Error::InvalidPath(format!("vertex {v} out of range")));
            }
            if seen.contains(v) {
                return Err(Error::InvalidPath(format!("vertex {v} repeated")));
            }
            seen.insert(v);
            if i > 0 && !g.has_edge(vertices[i - 1], v) {
                return Err(Error::InvalidPath(format!("{} and {v} are not adjacent", vertices[i - 1])));
            }
        }
        Ok(PathSeq(vertices))
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Self {
        PathSeq(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    pub fn reversed(&self) -> Self {
        PathSeq(self.0.iter().rev().copied().collect())
    }

    pub fn is_canonical(&self) -> bool {
        self.first() <= self.last()
    }

    /// The orientation whose first vertex id is not larger than its last.
    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            self.clone()
        } else {
            self.reversed()
        }
    }

    /// The two `v`-tails: the prefix ending at `v` and the suffix starting at `v`.
    pub fn tails_at(&self, v: usize) -> Option<(PathSeq, PathSeq)> {
        let i = self.position(v)?;
        Some((PathSeq(self.0[..=i].to_vec()), PathSeq(self.0[i..].to_vec())))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Every longest path of a graph, each listed once in canonical orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongestPathSet {
    pub length: usize,
    pub paths: Vec<PathSeq>,
    pub vertex_sets: Vec<VertexSet>,
}

impl LongestPathSet {
    /// Vertices lying on every longest path.
    pub fn common_vertices(&self) -> VertexSet {
        self.vertex_sets.iter().fold(VertexSet::range(64), |acc, &s| acc.intersection(s))
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    budget: u64,
    expansions: u64,
    path: Vec<usize>,
}

impl Dfs<'_> {
    fn tick(&mut self) -> Result<()> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    /// Longest extension length reachable from the current path; stops early
    /// once `target` is reached.
    fn longest(&mut self, visited: VertexSet, best: &mut usize, target: usize) -> Result<()> {
        self.tick()?;
        let len = self.path.len() - 1;
        *best = (*best).max(len);
        if *best >= target {
            return Ok(());
        }
        let end = *self.path.last().expect("path is nonempty");
        let free = self.g.vertices().difference(visited);
        let reachable = self.g.reach(end, free.with(end)).len() - 1;
        if len + reachable <= *best {
            return Ok(());
        }
        for w in self.g.neighbors(end).intersection(free) {
            self.path.push(w);
            self.longest(visited.with(w), best, target)?;
            self.path.pop();
            if *best >= target {
                break;
            }
        }
        Ok(())
    }

    /// Collect canonical paths of exactly `length` edges, or of every length when `None`.
    fn collect(&mut self, visited: VertexSet, length: Option<usize>, out: &mut Vec<PathSeq>) -> Result<()> {
        self.tick()?;
        let len = self.path.len() - 1;
        let first = self.path[0];
        let end = *self.path.last().expect("path is nonempty");
        if length.is_none_or(|l| l == len) && (len == 0 || first < end) {
            out.push(PathSeq(self.path.clone()));
        }
        let free = self.g.vertices().difference(visited);
        if let Some(target) = length {
            if len == target {
                return Ok(());
            }
            let reachable = self.g.reach(end, free.with(end)).len() - 1;
            if len + reachable < target {
                return Ok(());
            }
        }
        for w in self.g.neighbors(end).intersection(free) {
            self.path.push(w);
            self.collect(visited.with(w), length, out)?;
            self.path.pop();
        }
        Ok(())
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if g.n() > MAX_PATH_N {
        return Err(Error::UnsupportedSize { n: g.n(), limit: MAX_PATH_N, what: "exhaustive path search" });
    }
    Ok(())
}

fn longest_with(g: &Graph, dfs: &mut Dfs<'_>) -> Result<usize> {
    let mut best = 0;
    let target = g.n() - 1;
    for v in 0..g.n() {
        dfs.path = vec![v];
        dfs.longest(VertexSet::singleton(v), &mut best, target)?;
        if best >= target {
            break;
        }
    }
    Ok(best)
}

/// L(G): the number of edges of a longest path.
pub fn longest_path_length(g: &Graph) -> Result<usize> {
    check_order(g)?;
    let mut dfs = Dfs { g, budget: DEFAULT_BUDGET, expansions: 0, path: Vec::new() };
    longest_with(g, &mut dfs)
}

pub fn enumerate_longest_paths(g: &Graph) -> Result<LongestPathSet> {
    enumerate_longest_paths_with_budget(g, DEFAULT_BUDGET)
}

/// All longest paths, sorted by vertex sequence. The budget covers both the
/// length pass and the collection pass.
pub fn enumerate_longest_paths_with_budget(g: &Graph, budget: u64) -> Result<LongestPathSet> {
    check_order(g)?;
    let mut dfs = Dfs { g, budget, expansions: 0, path: Vec::new() };
    let length = longest_with(g, &mut dfs)?;
    let mut paths = Vec::new();
    for v in 0..g.n() {
        dfs.path = vec![v];
        dfs.collect(VertexSet::singleton(v), Some(length), &mut paths)?;
    }
    paths.sort();
    let vertex_sets: BTreeSet<VertexSet> = paths.iter().map(PathSeq::vertex_set).collect();
    Ok(LongestPathSet { length, paths, vertex_sets: vertex_sets.into_iter().collect() })
}

/// Every simple path (single vertices included), canonical orientation, sorted.
pub fn enumerate_all_paths(g: &Graph, budget: u64) -> Result<Vec<PathSeq>> {
    check_order(g)?;
    let mut dfs = Dfs { g, budget, expansions: 0, path: Vec::new() };
    let mut paths = Vec::new();
    for v in 0..g.n() {
        dfs.path = vec![v];
        dfs.collect(VertexSet::singleton(v), None, &mut paths)?;
    }
    paths.sort();
    Ok(paths)
}

/// Whether `p` is a valid path of `g` with exactly L(G) edges.
pub fn is_longest_path(g: &Graph, p: &[usize]) -> Result<bool> {
    let p = PathSeq::new(g, p.to_vec())?;
    Ok(p.len() == longest_path_length(g)?)
}

/// Graphviz rendering of `g`; edges used by any of `highlight` are drawn bold red
/// and vertices in `marked` are filled.
pub fn to_dot(g: &Graph, highlight: &[PathSeq], marked: VertexSet) -> String {
    let used: BTreeSet<(usize, usize)> =
        highlight.iter().flat_map(|p| p.edges().map(|(u, v)| (u.min(v), u.max(v)))).collect();
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", g.name().map(dot_id).unwrap_or_else(|| "G".into()));
    for v in 0..g.n() {
        if marked.contains(v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=gold];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        if used.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -- {v} [color=red, penwidth=2.5];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(set: &LongestPathSet) -> Vec<Vec<usize>> {
        set.paths.iter().map(|p| p.vertices().to_vec()).collect()
    }

    fn fig2() -> Graph {
        // x1..x3 = 0..2, y1..y4 = 3..6
        Graph::from_edges(7, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6)]).unwrap()
    }

    // Independent oracle: extend every path by brute force, no pruning.
    fn naive_longest(g: &Graph) -> usize {
        fn go(g: &Graph, path: &mut Vec<usize>, best: &mut usize) {
            *best = (*best).max(path.len() - 1);
            let end = *path.last().unwrap();
            for w in g.neighbors(end) {
                if !path.contains(&w) {
                    path.push(w);
                    go(g, path, best);
                    path.pop();
                }
            }
        }
        let mut best = 0;
        for v in 0..g.n() {
            go(g, &mut vec![v], &mut best);
        }
        best
    }

    #[test]
    fn longest_lengths() {
        assert_eq!(longest_path_length(&Graph::path(4).unwrap()).unwrap(), 3);
        assert_eq!(longest_path_length(&Graph::star(3).unwrap()).unwrap(), 2);
        assert_eq!(naive_longest(&fig2()), 6);
        assert_eq!(longest_path_length(&fig2()).unwrap(), 6);
        assert_eq!(longest_path_length(&Graph::empty(3).unwrap()).unwrap(), 0);
        assert!(longest_path_length(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let p4 = enumerate_longest_paths(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(seqs(&p4), vec![vec![0, 1, 2, 3]]);

        let k3 = enumerate_longest_paths(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(seqs(&k3), vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]]);
        assert_eq!(k3.vertex_sets, vec![VertexSet::range(3)]);

        let star = enumerate_longest_paths(&Graph::star(3).unwrap()).unwrap();
        assert_eq!(seqs(&star), vec![vec![1, 0, 2], vec![1, 0, 3], vec![2, 0, 3]]);
        assert_eq!(star.common_vertices(), VertexSet::singleton(0));
    }

    #[test]
    fn budget_is_an_error_not_a_truncation() {
        let k7 = Graph::complete(7).unwrap();
        assert_eq!(enumerate_longest_paths_with_budget(&k7, 100), Err(Error::BudgetExceeded { budget: 100 }));
        assert_eq!(enumerate_longest_paths_with_budget(&k7, 10_000_000).unwrap().paths.len(), 5040 / 2);
    }

    #[test]
    fn is_longest_path_examples() {
        let p4 = Graph::path(4).unwrap();
        assert!(is_longest_path(&p4, &[0, 1, 2, 3]).unwrap());
        assert!(!is_longest_path(&p4, &[0, 1, 2]).unwrap());
        assert!(!is_longest_path(&Graph::complete(3).unwrap(), &[0, 1]).unwrap());
        assert!(matches!(is_longest_path(&p4, &[0, 2]), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn all_paths_of_triangle() {
        // 3 single vertices, 3 edges, 3 Hamiltonian paths
        let all = enumerate_all_paths(&Graph::complete(3).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 9);
        assert!(all.iter().all(PathSeq::is_canonical));
    }

    #[test]
    fn tails() {
        let p = PathSeq::new(&Graph::path(4).unwrap(), vec![0, 1, 2, 3]).unwrap();
        let (a, b) = p.tails_at(2).unwrap();
        assert_eq!((a.vertices(), b.vertices()), (&[0, 1, 2][..], &[2, 3][..]));
    }

    #[test]
    fn dot_marks_highlighted_edges() {
        let g = Graph::path(3).unwrap();
        let set = enumerate_longest_paths(&g).unwrap();
        let dot = to_dot(&g, &set.paths, VertexSet::singleton(1));
        assert!(dot.contains("0 -- 1 [color=red"));
        assert!(dot.contains("1 [style=filled"));
    }
}
