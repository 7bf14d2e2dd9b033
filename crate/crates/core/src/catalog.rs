//! Canonical forms and exhaustive small-graph catalogs.

use std::collections::BTreeMap;

use crate::graph::{Graph, VertexSet};
use crate::{bpg, chordal, Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 9;
/// Largest order for labeled (edge-mask) enumeration; the mask must fit in 64 bits.
pub const MAX_LABELED_N: usize = 11;

/// Upper-triangle adjacency bit string in column order `(0,1),(0,2),(1,2),(0,3),...`,
/// packed so that the first bit is the most significant. Strings of the same
/// order compare lexicographically as integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The bit string as `0`/`1` characters.
    pub fn to_bit_string(&self) -> String {
        let len = pair_count(self.n());
        (0..len).map(|k| if self.bits >> (len - 1 - k) & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// The graph whose upper triangle spells this string.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let len = pair_count(n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical form is a valid graph")
    }
}

/// The adjacency bit string of `g` under its current labeling.
pub fn labeled_form(g: &Graph) -> CanonicalForm {
    let mut bits = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            bits = bits << 1 | g.has_edge(i, j) as u64;
        }
    }
    CanonicalForm { n: g.n() as u8, bits }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: usize,
    perm: Vec<usize>,
    best: u64,
    best_perm: Vec<usize>,
}

impl CanonSearch<'_> {
    // Bits of column `depth` when `v` is placed at position `depth`, first
    // position most significant.
    fn column(&self, depth: usize, v: usize) -> u64 {
        let nbrs = self.g.neighbors(v);
        self.perm[..depth].iter().fold(0u64, |acc, &u| acc << 1 | nbrs.contains(u) as u64)
    }

    fn run(&mut self, depth: usize, unused: VertexSet, prefix: u64) {
        if unused.is_empty() {
            if prefix < self.best {
                self.best = prefix;
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        let cols: Vec<(usize, u64)> = unused.iter().map(|v| (v, self.column(depth, v))).collect();
        let min_col = cols.iter().map(|&(_, c)| c).min().expect("unused is nonempty");
        let placed = pair_count(depth + 1);
        let next_prefix = prefix << depth | min_col;
        // Any column above the minimum loses to the minimum on the same prefix,
        // so only tied candidates can extend to the optimum.
        if self.best != u64::MAX && next_prefix > self.best >> (self.total_bits - placed) {
            return;
        }
        for (v, c) in cols {
            if c != min_col {
                continue;
            }
            self.perm.push(v);
            self.run(depth + 1, unused.without(v), next_prefix);
            self.perm.pop();
        }
    }
}

/// Minimum of the adjacency bit string over all relabelings, together with a
/// labeling that attains it: `labeling[pos]` is the original vertex placed at
/// position `pos`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::UnsupportedSize { n, limit: MAX_CANONICAL_N, what: "canonical form" });
    }
    let mut search = CanonSearch {
        g,
        total_bits: pair_count(n),
        perm: Vec::with_capacity(n),
        best: u64::MAX,
        best_perm: Vec::new(),
    };
    search.run(0, g.vertices(), 0);
    if n == 0 {
        return Ok((CanonicalForm { n: 0, bits: 0 }, Vec::new()));
    }
    Ok((CanonicalForm { n: n as u8, bits: search.best }, search.best_perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// The representative of `g`'s isomorphism class: the graph spelled by its canonical form.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_form(g).map(|f| f.to_graph())
}

/// Hereditary graph classes the catalog can grow vertex by vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    All,
    Chordal,
    Bipartite,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Chordal => chordal::is_chordal(g).is_some(),
            GraphClass::Bipartite => bpg::bipartition(g).is_ok(),
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices in
/// `class`, ordered by canonical form. Built by extending every class member on
/// `n - 1` vertices with a new vertex in all possible ways, which reaches every
/// member because the classes are closed under vertex deletion.
pub fn enumerate_graphs(n: usize, class: GraphClass, connected_only: bool) -> Result<Vec<Graph>> {
    if !(1..=MAX_CANONICAL_N).contains(&n) {
        return Err(Error::UnsupportedSize { n, limit: MAX_CANONICAL_N, what: "deduplicated enumeration" });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
        for h in &level {
            for mask in 0..1u64 << k {
                let cand = h.extended(VertexSet::from_bits(mask))?;
                if class.contains(&cand) {
                    next.insert(canonical_form(&cand)?, ());
                }
            }
        }
        level = next.into_keys().map(|f| f.to_graph()).collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}

/// Connected graphs on `n` vertices. Without `dedup`, every labeled graph is
/// produced in ascending edge-mask order (bit `k` of the mask is the `k`-th pair
/// in column order). With `dedup`, one canonical representative per
/// isomorphism class, ordered by canonical form.
pub fn enumerate_connected_graphs(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    if dedup {
        return Ok(Box::new(enumerate_graphs(n, GraphClass::All, true)?.into_iter()));
    }
    Ok(Box::new(LabeledGraphs::new(n, 0)?.filter(Graph::is_connected)))
}

/// Labeled graphs on `n` vertices by ascending edge mask, resumable at any cursor.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize, start_mask: u64) -> Result<Self> {
        if !(1..=MAX_LABELED_N).contains(&n) {
            return Err(Error::UnsupportedSize { n, limit: MAX_LABELED_N, what: "labeled enumeration" });
        }
        let pairs: Vec<_> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let end = 1u64 << pairs.len();
        Ok(LabeledGraphs { n, pairs, next_mask: start_mask.min(end), end })
    }

    /// Mask of the next graph to be produced.
    pub fn cursor(&self) -> u64 {
        self.next_mask
    }

    pub fn total(&self) -> u64 {
        self.end
    }

    pub fn graph_for_mask(&self, mask: u64) -> Graph {
        let edges: Vec<_> =
            self.pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        Graph::from_edges(self.n, &edges).expect("pairs are in range")
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next_mask >= self.end {
            return None;
        }
        let g = self.graph_for_mask(self.next_mask);
        self.next_mask += 1;
        Some(g)
    }
}

/// Non-isomorphic trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    let mut out = enumerate_graphs(n, GraphClass::Chordal, true)?;
    out.retain(|g| g.edge_count() + 1 == n);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    // Literal minimum over every relabeling.
    fn brute_force_form(g: &Graph) -> CanonicalForm {
        permutations(g.n()).iter().map(|p| labeled_form(&g.permuted(p).unwrap())).min().unwrap()
    }

    #[test]
    fn isomorphic_labelings_share_a_form() {
        let p3a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&p3a).unwrap(), canonical_form(&p3b).unwrap());
        assert_ne!(canonical_form(&p3a).unwrap(), canonical_form(&Graph::complete(3).unwrap()).unwrap());
        assert_eq!(canonical_form(&p3a).unwrap().to_bit_string(), "011");
    }

    #[test]
    fn pruned_search_matches_brute_force_on_all_graphs_up_to_five() {
        for n in 1..=5 {
            for g in LabeledGraphs::new(n, 0).unwrap() {
                let (form, labeling) = canonical_labeling(&g).unwrap();
                assert_eq!(form, brute_force_form(&g), "{g:?}");
                // labeling[pos] = original vertex; invert to relabel
                let mut inv = vec![0; n];
                for (pos, &v) in labeling.iter().enumerate() {
                    inv[v] = pos;
                }
                assert_eq!(labeled_form(&g.permuted(&inv).unwrap()), form);
            }
        }
    }

    #[test]
    fn form_is_injective_on_classes_up_to_six() {
        // every labeled graph on 6 vertices: forms partition into the 156 classes
        let forms: std::collections::BTreeSet<_> =
            LabeledGraphs::new(6, 0).unwrap().map(|g| canonical_form(&g).unwrap()).collect();
        assert_eq!(forms.len(), 156);
        for f in &forms {
            assert_eq!(canonical_form(&f.to_graph()).unwrap(), *f);
        }
    }

    #[test]
    fn connected_counts_match_known_sequence() {
        // number of connected graphs on n unlabeled vertices, n = 1..=7
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (n, &count) in (1..=7).zip(expected.iter()) {
            assert_eq!(enumerate_connected_graphs(n, true).unwrap().count(), count, "n = {n}");
        }
    }

    #[test]
    fn connected_count_at_four_matches_labeled_oracle() {
        // Independent route: labeled connected graphs, grouped by brute-force form.
        let classes: std::collections::BTreeSet<_> =
            enumerate_connected_graphs(4, false).unwrap().map(|g| brute_force_form(&g)).collect();
        assert_eq!(classes.len(), 6);
        assert_eq!(enumerate_connected_graphs(4, false).unwrap().count(), 38);
    }

    #[test]
    fn small_catalogs() {
        let two: Vec<_> = enumerate_connected_graphs(2, true).unwrap().collect();
        assert_eq!(two, vec![Graph::complete(2).unwrap()]);
        let three: Vec<_> = enumerate_connected_graphs(3, true).unwrap().collect();
        assert_eq!(three.len(), 2);
        assert!(three.contains(&canonical_graph(&Graph::path(3).unwrap()).unwrap()));
        assert!(three.contains(&Graph::complete(3).unwrap()));
    }

    #[test]
    fn class_catalog_counts() {
        // connected chordal graphs: 1, 1, 2, 5, 15, 58
        let chordal: Vec<_> = (1..=6).map(|n| enumerate_graphs(n, GraphClass::Chordal, true).unwrap().len()).collect();
        assert_eq!(chordal, vec![1, 1, 2, 5, 15, 58]);
        // connected bipartite graphs: 1, 1, 1, 3, 5, 17
        let bip: Vec<_> = (1..=6).map(|n| enumerate_graphs(n, GraphClass::Bipartite, true).unwrap().len()).collect();
        assert_eq!(bip, vec![1, 1, 1, 3, 5, 17]);
        let trees: Vec<_> = (1..=7).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn size_limits() {
        assert!(enumerate_connected_graphs(0, true).is_err());
        assert!(enumerate_connected_graphs(10, true).is_err());
        assert!(canonical_form(&Graph::empty(10).unwrap()).is_err());
    }

    #[test]
    fn labeled_cursor_resumes() {
        let mut it = LabeledGraphs::new(3, 5).unwrap();
        assert_eq!(it.cursor(), 5);
        assert_eq!(it.next().unwrap(), Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(it.count(), 2);
    }
}
