//! Brute-force ground truth: direct subset enumeration, labelled-graph
//! census, isomorphism by search, and exhaustive anatomy search.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{GraphRef, UndirectedGraph, VertexSubset};
use crate::num::binomial;
use crate::recognition::{locate_anatomy, PropertySpec};
use crate::BigCount;

/// Default cap on the number of subsets [`brute_count`] will visit.
pub const DEFAULT_SUBSET_BUDGET: u64 = 100_000_000;

/// All `k`-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct SubsetIterator {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl SubsetIterator {
    pub fn new(n: usize, k: usize) -> Self {
        SubsetIterator {
            n,
            current: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// Subsets whose smallest element is `first`.
    fn starting_with(n: usize, k: usize, first: usize) -> impl Iterator<Item = Vec<usize>> {
        SubsetIterator::new(n - first - 1, k - 1).map(move |rest| {
            let mut v = Vec::with_capacity(k);
            v.push(first);
            v.extend(rest.iter().map(|x| x + first + 1));
            v
        })
    }

    /// Advances and returns the next subset without allocating.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        let Some(i) = (0..k).rev().find(|&i| self.current[i] < self.n - k + i) else {
            self.done = true;
            return None;
        };
        self.current[i] += 1;
        for j in i + 1..k {
            self.current[j] = self.current[j - 1] + 1;
        }
        Some(&self.current)
    }
}

impl Iterator for SubsetIterator {
    type Item = VertexSubset;

    fn next(&mut self) -> Option<VertexSubset> {
        self.next_subset().map(|s| VertexSubset::from_sorted(s.to_vec()))
    }
}

fn check_budget(n: usize, k: usize, budget: u64) -> Result<()> {
    let needed = binomial(n as u64, k as i64);
    if needed > BigCount::from(budget) {
        return Err(Error::budget("subset enumeration", needed, budget));
    }
    Ok(())
}

fn prepare(g: GraphRef<'_>, k: usize, spec: &PropertySpec, budget: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::param("k must be positive"));
    }
    spec.validate()?;
    spec.check_kind(g)?;
    check_budget(g.vertex_count(), k, budget)
}

/// Number of `k`-subsets `X` with `spec(G[X])`, by evaluating every subset.
pub fn brute_count<'a>(g: impl Into<GraphRef<'a>>, k: usize, spec: &PropertySpec, budget: u64) -> Result<BigCount> {
    let g = g.into();
    prepare(g, k, spec, budget)?;
    let mut subsets = SubsetIterator::new(g.vertex_count(), k);
    let mut hits = 0u64;
    while let Some(x) = subsets.next_subset() {
        if spec.eval(g.induced_owned(x).as_ref())? {
            hits += 1;
        }
    }
    Ok(BigCount::from(hits))
}

/// [`brute_count`] sharded by the smallest element of each subset.
pub fn brute_count_par<'a>(g: impl Into<GraphRef<'a>>, k: usize, spec: &PropertySpec, budget: u64) -> Result<BigCount> {
    let g = g.into();
    prepare(g, k, spec, budget)?;
    let n = g.vertex_count();
    if k > n {
        return Ok(BigCount::from(0));
    }
    let hits = (0..=n - k)
        .into_par_iter()
        .map(|first| {
            SubsetIterator::starting_with(n, k, first).try_fold(0u64, |acc, x| {
                Ok::<_, Error>(acc + spec.eval(g.induced_owned(&x).as_ref())? as u64)
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(BigCount::from(hits.iter().sum::<u64>()))
}

/// Largest `k` for which [`enumerate_labeled_graphs`] is allowed.
pub const MAX_CENSUS_VERTICES: usize = 8;

/// Every labelled graph on `k` vertices, in edge-mask order (see
/// [`UndirectedGraph::from_edge_mask`]).
pub fn enumerate_labeled_graphs(k: usize) -> Result<LabeledGraphs> {
    if k > MAX_CENSUS_VERTICES {
        return Err(Error::budget("labelled graph census", format!("2^{}", k * (k - 1) / 2), 1 << 28));
    }
    Ok(LabeledGraphs {
        k,
        next: 0,
        end: 1u64 << (k * k.saturating_sub(1) / 2),
    })
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    k: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// Total number of graphs in the census.
    pub fn total(&self) -> u64 {
        self.end
    }

    /// The census as `(edge_mask, graph)` pairs.
    pub fn with_masks(self) -> impl Iterator<Item = (u64, UndirectedGraph)> {
        let k = self.k;
        (self.next..self.end).map(move |m| (m, UndirectedGraph::from_edge_mask(k, m)))
    }
}

impl Iterator for LabeledGraphs {
    type Item = UndirectedGraph;

    fn next(&mut self) -> Option<UndirectedGraph> {
        (self.next < self.end).then(|| {
            self.next += 1;
            UndirectedGraph::from_edge_mask(self.k, self.next - 1)
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Largest vertex count [`are_isomorphic`] will search.
pub const MAX_ISOMORPHISM_VERTICES: usize = 10;

/// Whether an adjacency-preserving bijection exists, by backtracking over
/// degree-compatible assignments.
pub fn are_isomorphic(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n > MAX_ISOMORPHISM_VERTICES || h.vertex_count() > MAX_ISOMORPHISM_VERTICES {
        return Err(Error::budget(
            "isomorphism search",
            format!("{}! permutations", n.max(h.vertex_count())),
            MAX_ISOMORPHISM_VERTICES as u64,
        ));
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let degrees = |x: &UndirectedGraph| {
        let mut d: Vec<usize> = (0..n).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    Ok(extend_isomorphism(g, h, 0, &mut image, &mut taken))
}

fn extend_isomorphism(g: &UndirectedGraph, h: &UndirectedGraph, v: usize, image: &mut [usize], taken: &mut [bool]) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for w in 0..h.vertex_count() {
        if taken[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        taken[w] = true;
        if extend_isomorphism(g, h, v + 1, image, taken) {
            return true;
        }
        taken[w] = false;
    }
    false
}

/// Every tuple `(b, t_1, ..., t_ell, s)` of distinct vertices witnessing that
/// `h` is an `ell`-scorpion.
///
/// Every vertex is tried at every position; a partial tuple is abandoned as
/// soon as it stops being an induced path in tuple order.
pub fn scorpion_tuples(h: &UndirectedGraph, ell: usize) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    if ell == 0 || h.vertex_count() < ell + 4 {
        return found;
    }
    let mut tuple = Vec::with_capacity(ell + 2);
    extend_tuple(h, ell + 2, &mut tuple, &mut found);
    found
}

fn extend_tuple(h: &UndirectedGraph, len: usize, tuple: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    if tuple.len() == len {
        if legs_attach_to_body(h, tuple) {
            found.push(tuple.clone());
        }
        return;
    }
    for v in 0..h.vertex_count() {
        if tuple.contains(&v) {
            continue;
        }
        let pos = tuple.len();
        let fits = tuple.iter().enumerate().all(|(i, &u)| h.has_edge(u, v) == (i + 1 == pos));
        if fits {
            tuple.push(v);
            extend_tuple(h, len, tuple, found);
            tuple.pop();
        }
    }
}

fn legs_attach_to_body(h: &UndirectedGraph, q: &[usize]) -> bool {
    (0..h.vertex_count()).filter(|v| !q.contains(v)).all(|leg| {
        h.has_edge(q[0], leg) && q[1..].iter().all(|&x| !h.has_edge(x, leg))
    })
}

/// Whether the exhaustive tuple search and [`locate_anatomy`] agree on `h`:
/// either both find nothing, or the search finds exactly one tuple and it is
/// the located anatomy.
pub fn anatomy_is_unique(h: &UndirectedGraph, ell: usize) -> bool {
    let tuples = scorpion_tuples(h, ell);
    match locate_anatomy(h, ell) {
        Some(a) => tuples == [a.path()],
        None => tuples.is_empty(),
    }
}

/// Outcome of [`verify_anatomy_uniqueness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnatomyReport {
    pub ell: usize,
    pub k: usize,
    pub graphs_scanned: u64,
    pub scorpions: u64,
    /// Edge masks where the search and the located anatomy disagree.
    pub counterexamples: Vec<u64>,
}

impl AnatomyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Runs [`anatomy_is_unique`] on every labelled `k`-vertex graph (`k <= 7`).
pub fn verify_anatomy_uniqueness(ell: usize, k: usize) -> Result<AnatomyReport> {
    if ell < 1 || k < ell + 4 {
        return Err(Error::param(format!("need ell >= 1 and k >= ell + 4, got ell = {ell}, k = {k}")));
    }
    if k > 7 {
        return Err(Error::budget("anatomy census", format!("2^{}", k * (k - 1) / 2), 1 << 21));
    }
    let census = enumerate_labeled_graphs(k)?;
    let graphs_scanned = census.total();
    let results: Vec<(bool, Option<u64>)> = census
        .with_masks()
        .par_bridge()
        .map(|(mask, g)| {
            let scorpion = locate_anatomy(&g, ell).is_some();
            (scorpion, (!anatomy_is_unique(&g, ell)).then_some(mask))
        })
        .collect();
    let mut counterexamples: Vec<u64> = results.iter().filter_map(|r| r.1).collect();
    counterexamples.sort_unstable();
    Ok(AnatomyReport {
        ell,
        k,
        graphs_scanned,
        scorpions: results.iter().filter(|r| r.0).count() as u64,
        counterexamples,
    })
}
