//! Simple undirected and antiparallel-free directed graphs on dense
//! `0..n` vertex indices.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Sorted set of distinct vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    /// Builds a subset, sorting the input. Repeated vertices are rejected.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::param(format!("vertex {} repeated in subset", w[0])));
        }
        Ok(VertexSubset(v))
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSubset((0..n).collect())
    }

    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSubset(v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::Vertex { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

/// Simple undirected graph. Adjacency is kept both as sorted neighbour lists
/// and as one bitmask row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    m: usize,
    words: usize,
    neighbors: Vec<Vec<usize>>,
    rows: Vec<u64>,
}

impl UndirectedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        UndirectedGraph {
            n,
            m: 0,
            words,
            neighbors: vec![Vec::new(); n],
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one; self-loops and out-of-range endpoints
    /// are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = UndirectedGraph::new(n);
        for (u, v) in edges {
            g.insert(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::Vertex { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::param(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        self.m += 1;
        Ok(true)
    }

    fn finish(&mut self) {
        for list in &mut self.neighbors {
            list.sort_unstable();
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid by construction")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid by construction")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid by construction")
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("valid by construction")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Number of `u64` words in each adjacency row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency bitmask of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors[u]
                    .iter()
                    .filter(move |&&v| v > u)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    /// Copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        if g.insert(u, v)? {
            g.finish();
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Self::from_edges(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    /// The subgraph induced by `subset`, relabelled `0..|subset|` in ascending
    /// order of the original indices.
    pub fn induced_subgraph(&self, subset: &VertexSubset) -> Result<Self> {
        subset.check_range(self.n)?;
        Ok(self.induced_unchecked(subset.as_slice()))
    }

    pub(crate) fn induced_unchecked(&self, vs: &[usize]) -> Self {
        let mut g = UndirectedGraph::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j).expect("in range");
                }
            }
        }
        g.finish();
        g
    }

    /// The spanning subgraph with edge set exactly `edges`, each of which must
    /// be an edge of `self`.
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !self.has_edge(u, v)) {
            return Err(Error::param(format!("{u}-{v} is not an edge of the host graph")));
        }
        Self::from_edges(self.n, edges.iter().copied())
    }

    /// Graph on `k` vertices whose edges are the set bits of `mask`, with
    /// pair `(i, j)`, `i < j`, at bit [`pair_index`]`(k, i, j)`.
    pub fn from_edge_mask(k: usize, mask: u64) -> Self {
        let mut g = UndirectedGraph::new(k);
        let mut bit = 0;
        for i in 0..k {
            for j in i + 1..k {
                if mask >> bit & 1 == 1 {
                    g.insert(i, j).expect("in range");
                }
                bit += 1;
            }
        }
        g.finish();
        g
    }

    /// Inverse of [`UndirectedGraph::from_edge_mask`]. Requires at most 11
    /// vertices.
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n * self.n.saturating_sub(1) / 2 <= 64, "too many vertex pairs for a mask");
        self.edges()
            .into_iter()
            .fold(0, |acc, (u, v)| acc | 1 << pair_index(self.n, u, v))
    }
}

/// Bit position of the pair `{i, j}` in lexicographic pair order on `k`
/// vertices.
pub fn pair_index(k: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UndirectedGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::param(format!("permutation has length {}, expected {n}", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::param("not a permutation"));
        }
    }
    Ok(())
}

/// Directed graph without self-loops or antiparallel arc pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    n: usize,
    m: usize,
    out: Vec<Vec<usize>>,
    in_degree: Vec<usize>,
}

impl DirectedGraph {
    pub fn new(n: usize) -> Self {
        DirectedGraph {
            n,
            m: 0,
            out: vec![Vec::new(); n],
            in_degree: vec![0; n],
        }
    }

    /// Builds a graph from arcs `u -> v`. Repeated arcs collapse; an arc whose
    /// reverse is present is an error.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = DirectedGraph::new(n);
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::Vertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            if g.out[v].contains(&u) {
                return Err(Error::param(format!("antiparallel arcs {u}->{v} and {v}->{u}")));
            }
            if !g.out[u].contains(&v) {
                g.out[u].push(v);
                g.in_degree[v] += 1;
                g.m += 1;
            }
        }
        for list in &mut g.out {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// All arcs into vertex `center` from every other vertex.
    pub fn in_star(n: usize, center: usize) -> Self {
        Self::from_arcs(n, (0..n).filter(|&v| v != center).map(|v| (v, center))).expect("valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_degree[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out[u].iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Self::from_arcs(self.n, self.arcs().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn induced_subgraph(&self, subset: &VertexSubset) -> Result<Self> {
        subset.check_range(self.n)?;
        Ok(self.induced_unchecked(subset.as_slice()))
    }

    pub(crate) fn induced_unchecked(&self, vs: &[usize]) -> Self {
        let mut arcs = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate() {
                if self.has_arc(u, v) {
                    arcs.push((i, j));
                }
            }
        }
        Self::from_arcs(vs.len(), arcs).expect("restriction keeps invariants")
    }
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirectedGraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

/// Owned graph of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    Undirected(UndirectedGraph),
    Directed(DirectedGraph),
}

impl Graph {
    pub fn as_ref(&self) -> GraphRef<'_> {
        match self {
            Graph::Undirected(g) => GraphRef::Undirected(g),
            Graph::Directed(g) => GraphRef::Directed(g),
        }
    }
}

/// Borrowed graph of either kind.
#[derive(Debug, Clone, Copy)]
pub enum GraphRef<'a> {
    Undirected(&'a UndirectedGraph),
    Directed(&'a DirectedGraph),
}

impl GraphRef<'_> {
    pub fn vertex_count(&self) -> usize {
        match self {
            GraphRef::Undirected(g) => g.vertex_count(),
            GraphRef::Directed(g) => g.vertex_count(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GraphRef::Undirected(_) => "undirected",
            GraphRef::Directed(_) => "directed",
        }
    }

    pub(crate) fn induced_owned(&self, vs: &[usize]) -> Graph {
        match self {
            GraphRef::Undirected(g) => Graph::Undirected(g.induced_unchecked(vs)),
            GraphRef::Directed(g) => Graph::Directed(g.induced_unchecked(vs)),
        }
    }
}

impl<'a> From<&'a UndirectedGraph> for GraphRef<'a> {
    fn from(g: &'a UndirectedGraph) -> Self {
        GraphRef::Undirected(g)
    }
}

impl<'a> From<&'a DirectedGraph> for GraphRef<'a> {
    fn from(g: &'a DirectedGraph) -> Self {
        GraphRef::Directed(g)
    }
}
