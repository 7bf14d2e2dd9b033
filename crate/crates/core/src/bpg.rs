//! Bipartite permutation graphs: line representations, strong orderings,
//! ordered paths, and the longest-path checks built on them.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::paths::{LongestPathSet, PathSeq};
use crate::{Error, Result};

pub const MAX_ORDERING_N: usize = 12;

/// Two-colouring; the smallest vertex of each component goes to the first side.
pub fn bipartition(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    let (mut x, mut y) = (VertexSet::EMPTY, VertexSet::EMPTY);
    for root in 0..g.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("queued vertices are coloured");
            if s {
                y.insert(v)
            } else {
                x.insert(v)
            }
            for u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!s);
                        queue.push_back(u);
                    }
                    Some(t) if t == s => return Err(Error::NotBipartite { vertex: u }),
                    Some(_) => {}
                }
            }
        }
    }
    Ok((x, y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

/// One segment per vertex, from `top` on the first line to `bottom` on the
/// second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRepresentation {
    pub side: Vec<Side>,
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl LineRepresentation {
    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.top.len() != n || self.bottom.len() != n {
            return Err(Error::Validation("segment arrays differ in length".into()));
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.top[u] == self.top[v] {
                    return Err(Error::Validation(format!("segments {u} and {v} share a top position")));
                }
                if self.bottom[u] == self.bottom[v] {
                    return Err(Error::Validation(format!("segments {u} and {v} share a bottom position")));
                }
                if self.side[u] == self.side[v] && self.crosses(u, v) {
                    return Err(Error::Validation(format!("segments {u} and {v} are on one side and cross")));
                }
            }
        }
        Ok(())
    }

    fn crosses(&self, u: usize, v: usize) -> bool {
        let dt = self.top[u] as i64 - self.top[v] as i64;
        let db = self.bottom[u] as i64 - self.bottom[v] as i64;
        dt * db < 0
    }

    /// Vertices of one side ordered by top position.
    pub fn side_order(&self, side: Side) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.n()).filter(|&v| self.side[v] == side).collect();
        out.sort_by_key(|&v| self.top[v]);
        out
    }

    /// Text form: the top line then the bottom line, each listing names
    /// `x<id>` / `y<id>` left to right.
    pub fn to_text(&self) -> String {
        let name = |v: usize| format!("{}{v}", if self.side[v] == Side::X { 'x' } else { 'y' });
        let line = |pos: &[usize]| {
            let mut vs: Vec<usize> = (0..self.n()).collect();
            vs.sort_by_key(|&v| pos[v]);
            vs.into_iter().map(name).collect::<Vec<_>>().join(" ")
        };
        format!("{}\n{}\n", line(&self.top), line(&self.bottom))
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        if lines.len() != 2 {
            return Err(Error::Parse { offset: 0, reason: format!("expected 2 lines, found {}", lines.len()) });
        }
        let read = |line: &str| -> Result<Vec<(Side, usize)>> {
            line.split_whitespace()
                .map(|tok| {
                    let side = match tok.as_bytes().first() {
                        Some(b'x') => Side::X,
                        Some(b'y') => Side::Y,
                        _ => return Err(Error::Parse { offset: 0, reason: format!("bad segment name {tok:?}") }),
                    };
                    let id = tok[1..]
                        .parse()
                        .map_err(|_| Error::Parse { offset: 0, reason: format!("bad segment name {tok:?}") })?;
                    Ok((side, id))
                })
                .collect()
        };
        let (top, bottom) = (read(lines[0])?, read(lines[1])?);
        let n = top.len();
        if bottom.len() != n {
            return Err(Error::Parse { offset: 0, reason: "top and bottom list different segments".into() });
        }
        let mut rep = LineRepresentation { side: vec![Side::X; n], top: vec![0; n], bottom: vec![0; n] };
        let mut seen = vec![0u8; n];
        for (line, list) in [(0, &top), (1, &bottom)] {
            for (pos, &(side, id)) in list.iter().enumerate() {
                if id >= n || seen[id] & (1 << line) != 0 || (line == 1 && rep.side[id] != side) {
                    return Err(Error::Parse { offset: 0, reason: format!("segment {id} is inconsistent") });
                }
                seen[id] |= 1 << line;
                rep.side[id] = side;
                if line == 0 {
                    rep.top[id] = pos + 1;
                } else {
                    rep.bottom[id] = pos + 1;
                }
            }
        }
        rep.validate()?;
        Ok(rep)
    }
}

/// Intersection graph of the segments: opposite sides joined iff they cross.
pub fn graph_from_line_representation(rep: &LineRepresentation) -> Result<Graph> {
    rep.validate()?;
    let mut edges = Vec::new();
    for u in 0..rep.n() {
        for v in u + 1..rep.n() {
            if rep.side[u] != rep.side[v] && rep.crosses(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(rep.n(), &edges)
}

/// Orders of the two sides such that any two crossing edges `x_a y_d`,
/// `x_b y_c` (with `a <= b`, `c <= d`) force `x_a y_c` and `x_b y_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongOrdering {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

impl StrongOrdering {
    /// Position of each vertex within its side.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for order in [&self.x_order, &self.y_order] {
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
        }
        pos
    }

    pub fn side_of(&self, v: usize) -> Side {
        if self.x_order.contains(&v) {
            Side::X
        } else {
            Side::Y
        }
    }

    /// Whether the orders partition a bipartition of `g` and satisfy the
    /// crossing condition.
    pub fn is_strong_for(&self, g: &Graph) -> bool {
        let xs: VertexSet = self.x_order.iter().copied().collect();
        let ys: VertexSet = self.y_order.iter().copied().collect();
        if xs.len() != self.x_order.len()
            || ys.len() != self.y_order.len()
            || xs.intersects(ys)
            || xs.union(ys) != g.vertices()
            || xs.iter().any(|v| g.neighbors(v).intersects(xs))
            || ys.iter().any(|v| g.neighbors(v).intersects(ys))
        {
            return false;
        }
        let (x, y) = (&self.x_order, &self.y_order);
        for a in 0..x.len() {
            for b in a..x.len() {
                for c in 0..y.len() {
                    for d in c..y.len() {
                        if g.has_edge(x[a], y[d])
                            && g.has_edge(x[b], y[c])
                            && !(g.has_edge(x[a], y[c]) && g.has_edge(x[b], y[d]))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

struct OrderSearch<'a> {
    g: &'a Graph,
    xs: Vec<usize>,
    ys: Vec<usize>,
    x_order: Vec<usize>,
    y_order: Vec<usize>,
}

impl OrderSearch<'_> {
    /// The crossing condition for quadruples whose last X is the newest X.
    fn x_ok(&self) -> bool {
        let (x, y, g) = (&self.x_order, &self.y_order, self.g);
        let b = x[x.len() - 1];
        x.iter().all(|&a| {
            (0..y.len()).all(|c| {
                (c..y.len()).all(|d| {
                    !(g.has_edge(a, y[d]) && g.has_edge(b, y[c])) || (g.has_edge(a, y[c]) && g.has_edge(b, y[d]))
                })
            })
        })
    }

    /// The same for quadruples whose last Y is the newest Y.
    fn y_ok(&self) -> bool {
        let (x, y, g) = (&self.x_order, &self.y_order, self.g);
        let d = y[y.len() - 1];
        (0..x.len()).all(|a| {
            (a..x.len()).all(|b| {
                y.iter().all(|&c| {
                    !(g.has_edge(x[a], d) && g.has_edge(x[b], c)) || (g.has_edge(x[a], c) && g.has_edge(x[b], d))
                })
            })
        })
    }

    fn run(&mut self) -> bool {
        let (px, py) = (self.x_order.len(), self.y_order.len());
        if px == self.xs.len() && py == self.ys.len() {
            return true;
        }
        let grow_x = px < self.xs.len() && (px <= py || py == self.ys.len());
        let pool = if grow_x { self.xs.clone() } else { self.ys.clone() };
        for v in pool {
            if self.x_order.contains(&v) || self.y_order.contains(&v) {
                continue;
            }
            let ok = if grow_x {
                self.x_order.push(v);
                self.x_ok()
            } else {
                self.y_order.push(v);
                self.y_ok()
            };
            if ok && self.run() {
                return true;
            }
            if grow_x {
                self.x_order.pop();
            } else {
                self.y_order.pop();
            }
        }
        false
    }
}

/// A strong ordering of `g`, by backtracking over both side orders with the
/// crossing condition checked as soon as a quadruple is placed.
pub fn find_strong_ordering(g: &Graph) -> Result<Option<StrongOrdering>> {
    if g.n() > MAX_ORDERING_N {
        return Err(Error::UnsupportedSize { n: g.n(), limit: MAX_ORDERING_N, what: "strong ordering search" });
    }
    let (x, y) = bipartition(g)?;
    let mut search = OrderSearch { g, xs: x.to_vec(), ys: y.to_vec(), x_order: Vec::new(), y_order: Vec::new() };
    Ok(search.run().then_some(StrongOrdering { x_order: search.x_order, y_order: search.y_order }))
}

/// A line representation realizing `so`: `x_i` precedes `y_j` on top iff `j`
/// is at least its first neighbour index, and on the bottom iff `j` is past its
/// last neighbour index.
pub fn line_representation_from_ordering(g: &Graph, so: &StrongOrdering) -> Result<LineRepresentation> {
    if !so.is_strong_for(g) {
        return Err(Error::Precondition("not a strong ordering of the graph".into()));
    }
    let pos = so.positions(g.n());
    let ny = so.y_order.len();
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for &x in &so.x_order {
        let idx: Vec<usize> = g.neighbors(x).iter().map(|y| pos[y]).collect();
        // an isolated x sits next to the previous x on both lines
        let first = idx.iter().min().copied().unwrap_or_else(|| lo.last().copied().unwrap_or(0));
        let last_past = idx.iter().max().map(|&m| m + 1).unwrap_or(first);
        lo.push(first);
        hi.push(last_past);
    }
    let merge = |thresholds: &[usize]| {
        let mut out = vec![0; g.n()];
        let (mut i, mut j, mut p) = (0, 0, 1);
        while i < so.x_order.len() || j < ny {
            if i < so.x_order.len() && (j == ny || thresholds[i] <= j) {
                out[so.x_order[i]] = p;
                i += 1;
            } else {
                out[so.y_order[j]] = p;
                j += 1;
            }
            p += 1;
        }
        out
    };
    let mut side = vec![Side::X; g.n()];
    for &v in &so.y_order {
        side[v] = Side::Y;
    }
    let rep = LineRepresentation { side, top: merge(&lo), bottom: merge(&hi) };
    if rep.validate().is_err() || graph_from_line_representation(&rep)? != *g {
        return Err(Error::Validation("strong ordering has no line representation of this shape".into()));
    }
    Ok(rep)
}

/// A path alternating sides with both side subsequences increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPath(pub PathSeq);

impl OrderedPath {
    pub fn path(&self) -> &PathSeq {
        &self.0
    }

    pub fn is_ordered(p: &PathSeq, so: &StrongOrdering, n: usize) -> bool {
        let pos = so.positions(n);
        let vs = p.vertices();
        let alternates = vs.windows(2).all(|w| so.side_of(w[0]) != so.side_of(w[1]));
        let increasing = vs.windows(3).all(|w| pos[w[0]] < pos[w[2]]);
        alternates && increasing
    }
}

/// The ordered path on the vertex set of `p`: both sides sorted and
/// interleaved, the larger side first; on equal sides, the side whose extreme
/// has the smaller rank within the path starts.
pub fn order_path(g: &Graph, so: &StrongOrdering, p: &PathSeq) -> Result<OrderedPath> {
    let p = PathSeq::new(g, p.vertices().to_vec())?;
    let pos = so.positions(g.n());
    let (mut px, mut py): (Vec<usize>, Vec<usize>) = p.vertices().iter().partition(|&&v| so.side_of(v) == Side::X);
    px.sort_by_key(|&v| pos[v]);
    py.sort_by_key(|&v| pos[v]);
    let x_first = match px.len().cmp(&py.len()) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            let (a, b) = (p.first(), p.last());
            let (ex, ey) = if so.side_of(a) == Side::X { (a, b) } else { (b, a) };
            let rank = |side: &[usize], v: usize| side.iter().position(|&u| u == v).expect("extreme on its side");
            rank(&px, ex) <= rank(&py, ey)
        }
    };
    let (first, second) = if x_first { (&px, &py) } else { (&py, &px) };
    let mut seq = Vec::with_capacity(p.vertices().len());
    for (i, &v) in first.iter().enumerate() {
        seq.push(v);
        if let Some(&w) = second.get(i) {
            seq.push(w);
        }
    }
    let ordered = PathSeq::new(g, seq)
        .map_err(|e| Error::InternalInconsistency(format!("interleaving of {:?} is not a path: {e}", p.vertices())))?;
    if ordered.vertex_set() != p.vertex_set() || !OrderedPath::is_ordered(&ordered, so, g.n()) {
        return Err(Error::InternalInconsistency(format!("interleaving of {:?} is malformed", p.vertices())));
    }
    Ok(OrderedPath(ordered))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeTransversalVerdict {
    pub holds: bool,
    pub edges_checked: usize,
    /// An edge and a longest path avoiding both its ends.
    pub violation: Option<((usize, usize), PathSeq)>,
}

/// Every edge's ends meet every longest path.
pub fn check_edge_transversal(g: &Graph, lps: &LongestPathSet) -> EdgeTransversalVerdict {
    let edges = g.edges();
    let violation = edges.iter().find_map(|&(u, v)| {
        let e = VertexSet::singleton(u).with(v);
        lps.paths.iter().find(|p| !p.vertex_set().intersects(e)).map(|p| ((u, v), p.clone()))
    });
    EdgeTransversalVerdict { holds: violation.is_none(), edges_checked: edges.len(), violation }
}

/// The first vertex of the X order if it lies on every longest path,
/// otherwise the first of the Y order.
pub fn bpg_gallai_vertex(g: &Graph, so: &StrongOrdering, lps: &LongestPathSet) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !so.is_strong_for(g) {
        return Err(Error::Precondition("not a strong ordering of the graph".into()));
    }
    let common = lps.common_vertices();
    [so.x_order.first(), so.y_order.first()]
        .into_iter()
        .flatten()
        .copied()
        .find(|&v| common.contains(v))
        .ok_or_else(|| Error::InternalInconsistency("neither first vertex lies on every longest path".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationVerdict {
    pub holds: bool,
    /// Name of the first failing property and a description of the witness.
    pub violation: Option<(String, String)>,
}

/// Neighbourhood one-sidedness, interval neighbourhoods, and both crossing
/// closures, checked on the graph of `rep` under its top-line orders.
pub fn check_representation_props(rep: &LineRepresentation) -> Result<RepresentationVerdict> {
    let g = graph_from_line_representation(rep)?;
    let x = rep.side_order(Side::X);
    let y = rep.side_order(Side::Y);
    let fail =
        |name: &str, what: String| Ok(RepresentationVerdict { holds: false, violation: Some((name.into(), what)) });

    for (own, other) in [(&x, &y), (&y, &x)] {
        for &k in other.iter() {
            let sides: Vec<bool> =
                own.iter().filter(|&&v| g.has_edge(v, k)).map(|&v| rep.top[v] < rep.top[k]).collect();
            if sides.windows(2).any(|w| w[0] != w[1]) {
                return fail("sameside", format!("neighbours of {k} on both sides"));
            }
        }
    }
    for (own, other) in [(&x, &y), (&y, &x)] {
        for &v in own.iter() {
            let idx: Vec<usize> = (0..other.len()).filter(|&j| g.has_edge(v, other[j])).collect();
            if let (Some(&a), Some(&b)) = (idx.first(), idx.last()) {
                if b - a + 1 != idx.len() {
                    return fail("middle", format!("neighbourhood of {v} is not an interval"));
                }
            }
        }
    }
    let e = |a: usize, b: usize| g.has_edge(x[a], y[b]);
    for a in 0..x.len() {
        for b in a..x.len() {
            for c in 0..y.len() {
                for d in c..y.len() {
                    if e(a, d) && e(b, c) && !(e(a, c) && e(b, d)) {
                        return fail("cruzados", format!("x{} y{} x{} y{}", x[a], y[c], x[b], y[d]));
                    }
                }
            }
        }
    }
    // nondecreasing quadruples on each side; the outer pair crossing forces
    // the inner four to be complete
    let quads = |len: usize| {
        let mut out = Vec::new();
        for a in 0..len {
            for b in a..len {
                for c in b..len {
                    for d in c..len {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
        out
    };
    let yq = quads(y.len());
    for i in quads(x.len()) {
        for j in &yq {
            if e(i[0], j[3]) && e(i[3], j[0]) && !(e(i[1], j[2]) && e(i[2], j[1]) && e(i[1], j[1]) && e(i[2], j[2])) {
                let mut w = String::new();
                let _ = write!(w, "x {:?} y {:?}", i.map(|k| x[k]), j.map(|k| y[k]));
                return fail("cruzados-contraidos", w);
            }
        }
    }
    Ok(RepresentationVerdict { holds: true, violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_all_paths, enumerate_longest_paths};

    // x1..x3 are 0..2, y1..y4 are 3..6
    fn fig2_rep() -> LineRepresentation {
        LineRepresentation::parse_text("x0 x1 y3 y4 x2 y5 y6\ny3 y4 y5 x0 y6 x1 x2\n").unwrap()
    }

    fn fig2() -> Graph {
        Graph::from_edges(7, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6)]).unwrap()
    }

    fn natural() -> StrongOrdering {
        StrongOrdering { x_order: vec![0, 1, 2], y_order: vec![3, 4, 5, 6] }
    }

    fn path(g: &Graph, vs: &[usize]) -> PathSeq {
        PathSeq::new(g, vs.to_vec()).unwrap()
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            bipartition(&fig2()).unwrap(),
            (VertexSet::range(3), VertexSet::range(7).difference(VertexSet::range(3)))
        );
        assert!(matches!(bipartition(&Graph::cycle(5).unwrap()), Err(Error::NotBipartite { .. })));
        let (x, y) = bipartition(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!((x.len(), y.len()), (2, 0));
    }

    #[test]
    fn line_representation_examples() {
        let rep = fig2_rep();
        assert_eq!(rep.top, vec![1, 2, 5, 3, 4, 6, 7]);
        assert_eq!(rep.bottom, vec![4, 6, 7, 1, 2, 3, 5]);
        assert_eq!(graph_from_line_representation(&rep).unwrap(), fig2());
        assert_eq!(LineRepresentation::parse_text(&rep.to_text()).unwrap(), rep);

        let parallel = LineRepresentation::parse_text("x0 y1\nx0 y1").unwrap();
        assert_eq!(graph_from_line_representation(&parallel).unwrap().edge_count(), 0);
        let crossing = LineRepresentation::parse_text("x0 y1\ny1 x0").unwrap();
        assert_eq!(graph_from_line_representation(&crossing).unwrap(), Graph::path(2).unwrap());

        let same_side = LineRepresentation { side: vec![Side::X, Side::X], top: vec![1, 2], bottom: vec![2, 1] };
        assert!(matches!(graph_from_line_representation(&same_side), Err(Error::Validation(_))));
        let shared = LineRepresentation { side: vec![Side::X, Side::Y], top: vec![1, 1], bottom: vec![2, 1] };
        assert!(shared.validate().is_err());
    }

    #[test]
    fn strong_ordering_examples() {
        let g = fig2();
        assert!(natural().is_strong_for(&g));
        let found = find_strong_ordering(&g).unwrap().unwrap();
        assert!(found.is_strong_for(&g));
        assert!(find_strong_ordering(&Graph::path(4).unwrap()).unwrap().is_some());
        assert!(find_strong_ordering(&Graph::cycle(6).unwrap()).unwrap().is_none());
        assert!(find_strong_ordering(&Graph::cycle(3).unwrap()).is_err());
        assert!(find_strong_ordering(&Graph::empty(13).unwrap()).is_err());
    }

    // Oracle: every pair of side permutations, checked directly.
    fn any_ordering_exhaustive(g: &Graph) -> bool {
        fn perms(v: Vec<usize>) -> Vec<Vec<usize>> {
            if v.len() <= 1 {
                return vec![v];
            }
            let mut out = Vec::new();
            for i in 0..v.len() {
                let mut rest = v.clone();
                let head = rest.remove(i);
                for mut p in perms(rest) {
                    p.insert(0, head);
                    out.push(p);
                }
            }
            out
        }
        let (x, y) = bipartition(g).unwrap();
        let ys = perms(y.to_vec());
        perms(x.to_vec())
            .into_iter()
            .any(|xo| ys.iter().any(|yo| StrongOrdering { x_order: xo.clone(), y_order: yo.clone() }.is_strong_for(g)))
    }

    #[test]
    fn ordering_search_matches_exhaustive() {
        assert!(!any_ordering_exhaustive(&Graph::cycle(6).unwrap()));
        for n in 1..=7 {
            for g in crate::catalog::enumerate_graphs(n, crate::catalog::GraphClass::Bipartite, false).unwrap() {
                let found = find_strong_ordering(&g).unwrap();
                assert_eq!(found.is_some(), any_ordering_exhaustive(&g), "{g:?}");
                if let Some(so) = found {
                    assert!(so.is_strong_for(&g));
                }
            }
        }
    }

    #[test]
    fn synthesized_representation_round_trips() {
        assert_eq!(
            graph_from_line_representation(&line_representation_from_ordering(&fig2(), &natural()).unwrap()).unwrap(),
            fig2()
        );
        for n in 2..=8 {
            for g in crate::catalog::enumerate_graphs(n, crate::catalog::GraphClass::Bipartite, true).unwrap() {
                if let Some(so) = find_strong_ordering(&g).unwrap() {
                    let rep = line_representation_from_ordering(&g, &so).unwrap();
                    assert_eq!(graph_from_line_representation(&rep).unwrap(), g);
                    assert!(check_representation_props(&rep).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn order_path_examples() {
        let g = fig2();
        let so = natural();
        let p = path(&g, &[0, 3, 1, 5]);
        assert_eq!(order_path(&g, &so, &p).unwrap().0, p);
        let p = path(&g, &[1, 3, 0, 5]);
        assert_eq!(order_path(&g, &so, &p).unwrap().0.vertices(), &[0, 3, 1, 5]);
        let scrambled = path(&g, &[6, 2, 5, 0, 3, 1, 4]);
        assert_eq!(order_path(&g, &so, &scrambled).unwrap().0.vertices(), &[3, 0, 4, 1, 5, 2, 6]);
        let bogus = PathSeq::from_vec_unchecked(vec![0, 1]);
        assert!(matches!(order_path(&g, &so, &bogus), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn order_path_on_every_path_of_catalog() {
        for n in 1..=7 {
            for g in crate::catalog::enumerate_graphs(n, crate::catalog::GraphClass::Bipartite, true).unwrap() {
                let Some(so) = find_strong_ordering(&g).unwrap() else { continue };
                for p in enumerate_all_paths(&g, u64::MAX).unwrap() {
                    let o = order_path(&g, &so, &p).unwrap();
                    assert_eq!(o.0.vertex_set(), p.vertex_set());
                }
            }
        }
    }

    #[test]
    fn edge_transversal_and_gallai() {
        let g = fig2();
        let lps = enumerate_longest_paths(&g).unwrap();
        assert_eq!(lps.length, 6);
        let v = check_edge_transversal(&g, &lps);
        assert!(v.holds);
        assert_eq!(v.edges_checked, 9);
        assert_eq!(bpg_gallai_vertex(&g, &natural(), &lps).unwrap(), 0);

        let k2 = Graph::path(2).unwrap();
        let lps = enumerate_longest_paths(&k2).unwrap();
        assert!(check_edge_transversal(&k2, &lps).holds);
        let so = find_strong_ordering(&k2).unwrap().unwrap();
        assert_eq!(bpg_gallai_vertex(&k2, &so, &lps).unwrap(), 0);

        let star = Graph::star(4).unwrap();
        let lps = enumerate_longest_paths(&star).unwrap();
        let so = find_strong_ordering(&star).unwrap().unwrap();
        assert_eq!(so.x_order[0], 0);
        assert_eq!(bpg_gallai_vertex(&star, &so, &lps).unwrap(), 0);

        // a spider with three legs of length 2 is bipartite but not a
        // permutation graph; a longest path avoids one leg entirely
        let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(find_strong_ordering(&spider).unwrap().is_none());
        let lps = enumerate_longest_paths(&spider).unwrap();
        let v = check_edge_transversal(&spider, &lps);
        assert_eq!(v.violation.map(|(e, _)| e), Some((1, 2)));
    }

    #[test]
    fn representation_props_examples() {
        assert_eq!(
            check_representation_props(&fig2_rep()).unwrap(),
            RepresentationVerdict { holds: true, violation: None }
        );
        let crossing = LineRepresentation::parse_text("x0 y1\ny1 x0").unwrap();
        assert!(check_representation_props(&crossing).unwrap().holds);
    }
}
