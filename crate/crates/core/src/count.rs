//! Polynomial-time counters for induced sinks and induced scorpions.
//!
//! Both rest on the same observation: the distinguished vertices of a
//! satisfying subgraph (the sink; the body, tail and sting) are unique, so
//! the satisfying `k`-sets split into classes keyed by those vertices, and
//! every class is a binomial coefficient of a set size in the host graph.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, UndirectedGraph};
use crate::num::{binomial_column, weighted_sum, Count};
use crate::BigCount;

/// Validated slice parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceQuery {
    pub k: usize,
    /// Tail length; zero for sink queries.
    pub ell: usize,
}

impl SliceQuery {
    pub fn sink(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("k must be positive"));
        }
        Ok(SliceQuery { k, ell: 0 })
    }

    pub fn scorpion(ell: usize, k: usize) -> Result<Self> {
        if ell < 1 {
            return Err(Error::param("ell must be at least 1"));
        }
        if k < ell + 4 {
            return Err(Error::param(format!("k = {k} is below ell + 4 = {}", ell + 4)));
        }
        Ok(SliceQuery { k, ell })
    }

    /// Number of legs in a `k`-vertex scorpion.
    pub fn legs(&self) -> usize {
        self.k - self.ell - 2
    }
}

/// Number of `k`-sets whose induced subgraph has a sink:
/// the sum over `v` of `C(in(v), k - 1)`.
pub fn count_sinks_slice_in<T: Count>(d: &DirectedGraph, k: usize) -> Result<T> {
    let q = SliceQuery::sink(k)?;
    let n = d.vertex_count();
    let mut hist = vec![0u64; n.max(1)];
    for v in 0..n {
        hist[d.in_degree(v)] += 1;
    }
    let column = binomial_column::<T>(hist.len() as u64 - 1, q.k as i64 - 1).ok_or(Error::Overflow("sink count"))?;
    weighted_sum(&hist, &column).ok_or(Error::Overflow("sink count"))
}

pub fn count_sinks_slice(d: &DirectedGraph, k: usize) -> Result<BigCount> {
    count_sinks_slice_in(d, k)
}

/// Histogram over induced `(ell + 2)`-vertex path tuples
/// `q = (b, t_1, ..., t_ell, s)` of `|N(b) \ (q ∪ N(t_1) ∪ ... ∪ N(s))|`.
///
/// Both orientations of every induced path are visited.
pub fn leg_pool_histogram(g: &UndirectedGraph, ell: usize) -> Vec<u64> {
    let mut walker = PathWalker::new(g, ell);
    for b in 0..g.vertex_count() {
        walker.walk_from(b);
    }
    walker.hist
}

/// As [`leg_pool_histogram`], sharded over bodies with rayon.
pub fn leg_pool_histogram_par(g: &UndirectedGraph, ell: usize) -> Vec<u64> {
    let n = g.vertex_count();
    (0..n)
        .into_par_iter()
        .fold(
            || PathWalker::new(g, ell),
            |mut w, b| {
                w.walk_from(b);
                w
            },
        )
        .map(|w| w.hist)
        .reduce(
            || vec![0; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

struct PathWalker<'g> {
    g: &'g UndirectedGraph,
    ell: usize,
    words: usize,
    /// Row `d`: union of closed neighbourhoods of `v_0..v_{d-1}`.
    excluded: Vec<u64>,
    /// Row `d`: `N(b)` minus `v_1..v_d` and their neighbourhoods.
    pool: Vec<u64>,
    /// Row `d`: candidates for `v_{d+1}`.
    cand: Vec<u64>,
    hist: Vec<u64>,
}

impl<'g> PathWalker<'g> {
    fn new(g: &'g UndirectedGraph, ell: usize) -> Self {
        let words = g.row_words();
        let depth = ell + 2;
        PathWalker {
            g,
            ell,
            words,
            excluded: vec![0; depth * words],
            pool: vec![0; depth * words],
            cand: vec![0; depth * words],
            hist: vec![0; g.vertex_count() + 1],
        }
    }

    fn walk_from(&mut self, b: usize) {
        let w = self.words;
        self.excluded[..w].fill(0);
        self.pool[..w].copy_from_slice(self.g.row(b));
        self.visit(0, b);
    }

    fn visit(&mut self, d: usize, v: usize) {
        let w = self.words;
        let row = self.g.row(v);
        let (cur, next) = (d * w, (d + 1) * w);
        if d > 0 {
            for i in 0..w {
                self.pool[cur + i] = self.pool[cur - w + i] & !row[i];
            }
            self.pool[cur + v / 64] &= !(1 << (v % 64));
        }
        for i in 0..w {
            self.cand[cur + i] = row[i] & !self.excluded[cur + i];
        }
        if d == self.ell {
            self.tally_stings(cur);
            return;
        }
        for i in 0..w {
            self.excluded[next + i] = self.excluded[cur + i] | row[i];
        }
        self.excluded[next + v / 64] |= 1 << (v % 64);
        for i in 0..w {
            let mut bits = self.cand[cur + i];
            while bits != 0 {
                let u = i * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.visit(d + 1, u);
            }
        }
    }

    fn tally_stings(&mut self, cur: usize) {
        let w = self.words;
        let pool = &self.pool[cur..cur + w];
        for i in 0..w {
            let mut bits = self.cand[cur + i];
            while bits != 0 {
                let s = i * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let row = self.g.row(s);
                let mut x: u32 = pool.iter().zip(row).map(|(p, r)| (p & !r).count_ones()).sum();
                x -= (pool[s / 64] >> (s % 64) & 1) as u32;
                self.hist[x as usize] += 1;
            }
        }
    }
}

/// Number of `k`-subsets of `g` inducing an `ell`-scorpion, accumulated in
/// `T`.
///
/// Every induced path `q = (b, t_1, ..., t_ell, s)` is the body, tail and
/// sting of exactly the scorpions obtained by adding `k - ell - 2` legs from
/// `N(b)` outside `q` and outside the neighbourhoods of `t_1, ..., s`.
pub fn count_scorpions_in<T: Count>(g: &UndirectedGraph, ell: usize, k: usize) -> Result<T> {
    let q = SliceQuery::scorpion(ell, k)?;
    finish_scorpions(&leg_pool_histogram(g, ell), q)
}

fn finish_scorpions<T: Count>(hist: &[u64], q: SliceQuery) -> Result<T> {
    let column = binomial_column::<T>(hist.len() as u64 - 1, q.legs() as i64).ok_or(Error::Overflow("scorpion count"))?;
    weighted_sum(hist, &column).ok_or(Error::Overflow("scorpion count"))
}

pub fn count_scorpions(g: &UndirectedGraph, ell: usize, k: usize) -> Result<BigCount> {
    count_scorpions_in(g, ell, k)
}

/// [`count_scorpions`] with the path enumeration spread over threads. The
/// result is identical to the sequential one.
pub fn count_scorpions_par(g: &UndirectedGraph, ell: usize, k: usize) -> Result<BigCount> {
    let q = SliceQuery::scorpion(ell, k)?;
    finish_scorpions(&leg_pool_histogram_par(g, ell), q)
}

/// Counts `k`-vertex `f(k)`-scorpions, for a tail length chosen per slice.
/// Requires `1 <= f(k) <= (k - 4) / 2`.
pub fn count_scorpions_slicewise(g: &UndirectedGraph, f: impl Fn(usize) -> usize, k: usize) -> Result<BigCount> {
    let ell = f(k);
    if ell < 1 || 2 * ell + 4 > k {
        return Err(Error::param(format!(
            "tail length f({k}) = {ell} outside [1, ({k} - 4) / 2]"
        )));
    }
    count_scorpions(g, ell, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_skeleton, random_graph, random_orientation, random_permutation};
    use crate::num::binomial;

    #[test]
    fn sink_examples() {
        assert_eq!(count_sinks_slice(&DirectedGraph::in_star(4, 0), 3).unwrap(), BigCount::from(3));
        assert_eq!(count_sinks_slice(&DirectedGraph::new(5), 2).unwrap(), BigCount::from(0));
        let d = random_orientation(9, 1);
        assert_eq!(count_sinks_slice(&d, 1).unwrap(), BigCount::from(9));
        assert!(count_sinks_slice(&d, 0).is_err());
        assert_eq!(count_sinks_slice(&DirectedGraph::new(0), 3).unwrap(), BigCount::from(0));
    }

    #[test]
    fn scorpion_examples() {
        let (skel, _) = gen_skeleton(1, 5).unwrap();
        assert_eq!(count_scorpions(&skel, 1, 5).unwrap(), BigCount::from(1));
        assert_eq!(count_scorpions(&UndirectedGraph::complete(7), 1, 5).unwrap(), BigCount::from(0));
        assert!(count_scorpions(&skel, 1, 4).is_err());
        assert!(count_scorpions(&skel, 0, 5).is_err());
        // k beyond n is just zero
        assert_eq!(count_scorpions(&skel, 1, 9).unwrap(), BigCount::from(0));
    }

    #[test]
    fn wide_graph_crosses_word_boundaries() {
        // Skeleton with 150 legs: one scorpion per 5-set containing the
        // path and two legs.
        let (g, _) = gen_skeleton(1, 153).unwrap();
        assert_eq!(count_scorpions(&g, 1, 5).unwrap(), binomial(150, 2));
        assert_eq!(count_scorpions(&g, 1, 153).unwrap(), BigCount::from(1));
    }

    #[test]
    fn slicewise() {
        let g = random_graph(10, 0.5, 3).unwrap();
        assert_eq!(
            count_scorpions_slicewise(&g, |_| 1, 6).unwrap(),
            count_scorpions(&g, 1, 6).unwrap()
        );
        // 2 * 1 + 4 > 5
        assert!(count_scorpions_slicewise(&g, |_| 1, 5).is_err());
        let sqrt = |k: usize| (k as f64).sqrt() as usize;
        assert_eq!(
            count_scorpions_slicewise(&g, sqrt, 8).unwrap(),
            count_scorpions(&g, 2, 8).unwrap()
        );
        assert_eq!(
            count_scorpions_slicewise(&random_graph(18, 0.5, 3).unwrap(), sqrt, 16).unwrap(),
            count_scorpions(&random_graph(18, 0.5, 3).unwrap(), 4, 16).unwrap()
        );
        assert!(count_scorpions_slicewise(&g, |_| 3, 9).is_err());
        assert!(count_scorpions_slicewise(&g, |_| 0, 9).is_err());
    }

    #[test]
    fn accumulator_types_agree() {
        let g = random_graph(40, 0.4, 11).unwrap();
        for k in 5..9 {
            let big = count_scorpions(&g, 1, k).unwrap();
            let small: u64 = count_scorpions_in(&g, 1, k).unwrap();
            let wide: u128 = count_scorpions_in(&g, 1, k).unwrap();
            assert_eq!(big, BigCount::from(small));
            assert_eq!(big, BigCount::from(wide));
        }
        assert_eq!(count_scorpions_in::<u8>(&g, 1, 5), Err(Error::Overflow("scorpion count")));
    }

    #[test]
    fn parallel_matches_sequential() {
        for seed in 0..5 {
            let g = random_graph(70, 0.3, seed).unwrap();
            for ell in 1..3 {
                assert_eq!(leg_pool_histogram(&g, ell), leg_pool_histogram_par(&g, ell));
                assert_eq!(count_scorpions(&g, ell, 7).unwrap(), count_scorpions_par(&g, ell, 7).unwrap());
            }
        }
    }

    #[test]
    fn clique_and_bound() {
        for n in 5..12 {
            let kn = UndirectedGraph::complete(n);
            for k in 5..=n {
                assert_eq!(count_scorpions(&kn, 1, k).unwrap(), BigCount::from(0));
            }
        }
        let g = random_graph(14, 0.5, 5).unwrap();
        for k in 5..=14 {
            assert!(count_scorpions(&g, 1, k).unwrap() <= binomial(14, k as i64));
        }
    }

    #[test]
    fn relabelling_invariance() {
        let g = random_graph(16, 0.45, 21).unwrap();
        let d = random_orientation(16, 21);
        for seed in 0..10 {
            let perm = random_permutation(16, seed);
            let h = g.permuted(&perm).unwrap();
            let e = d.permuted(&perm).unwrap();
            for k in 3..8 {
                assert_eq!(count_sinks_slice(&d, k).unwrap(), count_sinks_slice(&e, k).unwrap());
            }
            for (ell, k) in [(1, 5), (1, 7), (2, 6), (2, 9)] {
                assert_eq!(count_scorpions(&g, ell, k).unwrap(), count_scorpions(&h, ell, k).unwrap());
            }
        }
    }
}
