//! Subgraph-basis analysis: alternating enumerators, the fossil
//! characterisation of scorpions, exact vertex cover numbers and weight
//! spectra.
//!
//! The alternating enumerator of a property `P` at a graph `H` is
//!
//! ```text
//! alt(P, H) = (-1)^|E(H)| * sum over S ⊆ E(H) of (-1)^|S| * P(H[S])
//! ```
//!
//! where `H[S]` keeps all vertices of `H`. It is the coefficient of the
//! `H`-subgraph count when induced `P`-counts are written in the subgraph
//! basis.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{GraphRef, UndirectedGraph};
use crate::num::binomial;
use crate::oracle::enumerate_labeled_graphs;
use crate::recognition::{is_fossil, PropertySpec};
use crate::BigCount;

/// Largest edge count [`alt_enum`] will expand.
pub const MAX_ALT_ENUM_EDGES: usize = 30;

/// Largest vertex count for the per-slice tables (`2^21` labelled graphs).
pub const MAX_SLICE_VERTICES: usize = 7;

/// Largest vertex count [`vertex_cover_number`] accepts.
pub const MAX_COVER_VERTICES: usize = 24;

/// Signed alternating-enumerator value; `|value| <= 2^|E(H)|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltEnumValue(pub BigCount);

impl AltEnumValue {
    pub fn is_zero(&self) -> bool {
        self.0 == BigCount::from(0)
    }
}

impl From<i64> for AltEnumValue {
    fn from(v: i64) -> Self {
        AltEnumValue(BigCount::from(v))
    }
}

fn parity_sign(bits: usize) -> i64 {
    if bits % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Alternating enumerator by direct inclusion-exclusion over all edge subsets
/// of `h`, walked in Gray-code order.
pub fn alt_enum(spec: &PropertySpec, h: &UndirectedGraph) -> Result<AltEnumValue> {
    spec.validate()?;
    spec.check_kind(GraphRef::Undirected(h))?;
    let edges = h.edges();
    let m = edges.len();
    if m > MAX_ALT_ENUM_EDGES {
        return Err(Error::budget("alternating enumerator", format!("2^{m} subsets"), 1 << MAX_ALT_ENUM_EDGES));
    }
    let n = h.vertex_count();
    let mut present = vec![false; m];
    let mut size = 0usize;
    let mut sum = 0i64;
    for step in 0u64..1 << m {
        if step > 0 {
            // Gray code: step i flips the bit at the position of i's lowest set bit.
            let flip = step.trailing_zeros() as usize;
            present[flip] = !present[flip];
            if present[flip] {
                size += 1;
            } else {
                size -= 1;
            }
        }
        let sub = UndirectedGraph::from_edges(n, edges.iter().zip(&present).filter(|(_, &p)| p).map(|(e, _)| *e))?;
        if spec.eval(GraphRef::Undirected(&sub))? {
            sum += parity_sign(size);
        }
    }
    Ok(AltEnumValue::from(parity_sign(m) * sum))
}

/// Alternating enumerator of `spec` for every labelled graph on `k`
/// vertices, indexed by edge mask.
///
/// The property is evaluated once per labelled graph; the signed sums over
/// submasks come from a subset-sum transform rather than per-graph expansion.
pub fn alt_enum_table(spec: &PropertySpec, k: usize) -> Result<Vec<i64>> {
    spec.validate()?;
    if k > MAX_SLICE_VERTICES {
        return Err(Error::budget("alternating enumerator table", format!("2^{}", k * (k - 1) / 2), 1 << 21));
    }
    let pairs = k * k.saturating_sub(1) / 2;
    let mut table: Vec<i64> = (0..1u64 << pairs)
        .into_par_iter()
        .map(|mask| {
            let g = UndirectedGraph::from_edge_mask(k, mask);
            spec.check_kind(GraphRef::Undirected(&g))?;
            let hit = spec.eval(GraphRef::Undirected(&g))?;
            Ok(if hit { parity_sign(mask.count_ones() as usize) } else { 0 })
        })
        .collect::<Result<_>>()?;
    for bit in 0..pairs {
        let step = 1usize << bit;
        for mask in 0..table.len() {
            if mask & step != 0 {
                table[mask] += table[mask ^ step];
            }
        }
    }
    for (mask, v) in table.iter_mut().enumerate() {
        *v *= parity_sign(mask.count_ones() as usize);
    }
    Ok(table)
}

/// Minimum vertex cover size, by branching on an uncovered edge.
pub fn vertex_cover_number(h: &UndirectedGraph) -> Result<usize> {
    let n = h.vertex_count();
    if n > MAX_COVER_VERTICES {
        return Err(Error::budget("vertex cover search", format!("{n} vertices"), MAX_COVER_VERTICES as u64));
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| h.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    let alive = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = n;
    cover_branch(&rows, alive, 0, &mut best);
    Ok(best)
}

fn cover_branch(rows: &[u32], alive: u32, chosen: usize, best: &mut usize) {
    // Branch on an edge at a vertex of maximum remaining degree.
    let mut pick = None;
    let mut top = 0;
    let mut live_edges = 0;
    let mut bits = alive;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (rows[v] & alive).count_ones();
        live_edges += d;
        if d > top {
            top = d;
            pick = Some(v);
        }
    }
    let Some(u) = pick else {
        *best = (*best).min(chosen);
        return;
    };
    // every cover vertex handles at most `top` of the remaining edges
    let live_edges = live_edges / 2;
    if chosen + live_edges.div_ceil(top) as usize >= *best {
        return;
    }
    let v = (rows[u] & alive).trailing_zeros() as usize;
    cover_branch(rows, alive & !(1 << u), chosen + 1, best);
    cover_branch(rows, alive & !(1 << v), chosen + 1, best);
}

/// Outcome of checking "nonzero alternating enumerator iff fossil" over every
/// labelled graph of a slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FossilReport {
    pub ell: usize,
    pub k: usize,
    pub graphs_scanned: u64,
    pub fossils: u64,
    pub nonzero: u64,
    /// Edge masks where the two sides disagree.
    pub counterexamples: Vec<u64>,
    /// Largest vertex cover number among graphs with nonzero enumerator.
    pub max_cover_nonzero: usize,
    /// Largest vertex cover number among fossils.
    pub max_cover_fossil: usize,
}

impl FossilReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn check_scorpion_slice(ell: usize, k: usize) -> Result<()> {
    if ell < 1 {
        return Err(Error::param("ell must be at least 1"));
    }
    if k < ell + 4 {
        return Err(Error::param(format!("k = {k} is below ell + 4 = {}", ell + 4)));
    }
    if k > MAX_SLICE_VERTICES {
        return Err(Error::budget("labelled graph census", format!("2^{}", k * (k - 1) / 2), 1 << 21));
    }
    Ok(())
}

#[derive(Default)]
struct ScanTally {
    fossils: u64,
    nonzero: u64,
    counterexamples: Vec<u64>,
    max_cover_nonzero: usize,
    max_cover_fossil: usize,
}

impl ScanTally {
    fn merge(mut self, other: ScanTally) -> ScanTally {
        self.fossils += other.fossils;
        self.nonzero += other.nonzero;
        self.counterexamples.extend(other.counterexamples);
        self.max_cover_nonzero = self.max_cover_nonzero.max(other.max_cover_nonzero);
        self.max_cover_fossil = self.max_cover_fossil.max(other.max_cover_fossil);
        self
    }
}

/// Compares `alt(scorpion(ell), H) != 0` with `is_fossil(H, ell)` for every
/// labelled `k`-vertex graph, and records vertex cover numbers on the way.
pub fn verify_fossil_characterization(ell: usize, k: usize) -> Result<FossilReport> {
    check_scorpion_slice(ell, k)?;
    let table = alt_enum_table(&PropertySpec::Scorpion(ell), k)?;
    let mut tally = (0..table.len() as u64)
        .into_par_iter()
        .map(|mask| -> Result<ScanTally> {
            let g = UndirectedGraph::from_edge_mask(k, mask);
            let nonzero = table[mask as usize] != 0;
            let fossil = is_fossil(&g, ell);
            let mut t = ScanTally::default();
            if nonzero != fossil {
                t.counterexamples.push(mask);
            }
            if nonzero || fossil {
                let cover = vertex_cover_number(&g)?;
                if nonzero {
                    t.nonzero = 1;
                    t.max_cover_nonzero = cover;
                }
                if fossil {
                    t.fossils = 1;
                    t.max_cover_fossil = cover;
                }
            }
            Ok(t)
        })
        .try_reduce(ScanTally::default, |a, b| Ok(a.merge(b)))?;
    tally.counterexamples.sort_unstable();
    Ok(FossilReport {
        ell,
        k,
        graphs_scanned: table.len() as u64,
        fossils: tally.fossils,
        nonzero: tally.nonzero,
        counterexamples: tally.counterexamples,
        max_cover_nonzero: tally.max_cover_nonzero,
        max_cover_fossil: tally.max_cover_fossil,
    })
}

/// Largest vertex cover number over `k`-vertex graphs with nonzero
/// alternating enumerator for `ell`-scorpions.
pub fn tau_slice(ell: usize, k: usize) -> Result<usize> {
    check_scorpion_slice(ell, k)?;
    let table = alt_enum_table(&PropertySpec::Scorpion(ell), k)?;
    (0..table.len())
        .into_par_iter()
        .filter(|&m| table[m] != 0)
        .map(|m| vertex_cover_number(&UndirectedGraph::from_edge_mask(k, m as u64)))
        .try_reduce(|| 0, |a, b| Ok(a.max(b)))
}

/// Edge counts realised by `k`-vertex members of a property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpectrum {
    pub k: usize,
    pub attained: BTreeSet<usize>,
    /// `C(k, 2) + 1 - |attained|`.
    pub avoided_count: usize,
}

impl WeightSpectrum {
    pub fn from_attained(k: usize, attained: BTreeSet<usize>) -> Self {
        let total = k * k.saturating_sub(1) / 2 + 1;
        debug_assert!(attained.iter().all(|&w| w < total));
        WeightSpectrum {
            k,
            avoided_count: total - attained.len(),
            attained,
        }
    }
}

/// Weights of `k`-vertex `ell`-scorpions in closed form: a skeleton has
/// `k - 1` edges and any subset of the `C(k - ell - 2, 2)` leg pairs may be
/// added.
pub fn attained_weights(ell: usize, k: usize) -> Result<WeightSpectrum> {
    if ell < 1 || k < ell + 4 {
        return Err(Error::param(format!("need ell >= 1 and k >= ell + 4, got ell = {ell}, k = {k}")));
    }
    let legs = k - ell - 2;
    let leg_pairs = legs * (legs - 1) / 2;
    Ok(WeightSpectrum::from_attained(k, (k - 1..=k - 1 + leg_pairs).collect()))
}

/// Number of weights in `0..=C(k, 2)` that no `k`-vertex `ell`-scorpion
/// attains: `C(k, 2) + 1 - (C(k - ell - 2, 2) + 1)`.
pub fn avoided_weight_count(ell: usize, k: usize) -> BigCount {
    binomial(k as u64, 2) - binomial((k - ell - 2) as u64, 2)
}

/// Weight spectrum of `spec` on slice `k` by scanning every labelled graph.
pub fn brute_attained_weights(spec: &PropertySpec, k: usize) -> Result<WeightSpectrum> {
    spec.validate()?;
    let census = enumerate_labeled_graphs(k)?;
    if k > MAX_SLICE_VERTICES {
        return Err(Error::budget("labelled graph census", format!("2^{}", census.total().trailing_zeros()), 1 << 21));
    }
    let attained = census
        .with_masks()
        .par_bridge()
        .map(|(mask, g)| {
            spec.check_kind(GraphRef::Undirected(&g))?;
            Ok(spec.eval(GraphRef::Undirected(&g))?.then_some(mask.count_ones() as usize))
        })
        .collect::<Result<Vec<Option<usize>>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(WeightSpectrum::from_attained(k, attained))
}
