//! Membership tests for scorpions, skeletons, fossils and sinks.
//!
//! An `ell`-scorpion on `k >= ell + 4` vertices has an induced path
//! `body - t_1 - ... - t_ell - sting`; every other vertex (a leg) is adjacent
//! to the body and to no other path vertex. Edges among legs are free. The
//! body, tail and sting of a scorpion are unique, which is what makes the
//! counting in [`crate::count`] work.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, GraphRef, UndirectedGraph, VertexSubset};

/// Body, tail, sting and legs of a scorpion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScorpionAnatomy {
    pub body: usize,
    /// `t_1, ..., t_ell`, ordered from the body towards the sting.
    pub tail: Vec<usize>,
    pub sting: usize,
    pub legs: VertexSubset,
}

impl ScorpionAnatomy {
    pub fn ell(&self) -> usize {
        self.tail.len()
    }

    /// `(body, t_1, ..., t_ell, sting)`.
    pub fn path(&self) -> Vec<usize> {
        let mut q = Vec::with_capacity(self.tail.len() + 2);
        q.push(self.body);
        q.extend_from_slice(&self.tail);
        q.push(self.sting);
        q
    }
}

/// Checks the scorpion conditions for the given path tuple
/// `(body, t_1, ..., t_ell, sting)` and returns the resulting anatomy.
pub fn anatomy_from_path(h: &UndirectedGraph, path: &[usize]) -> Option<ScorpionAnatomy> {
    let n = h.vertex_count();
    if path.len() < 3 || n < path.len() + 2 {
        return None;
    }
    let mut on_path = vec![false; n];
    for &v in path {
        if v >= n || std::mem::replace(&mut on_path[v], true) {
            return None;
        }
    }
    for (i, &u) in path.iter().enumerate() {
        for (j, &v) in path.iter().enumerate().skip(i + 1) {
            if h.has_edge(u, v) != (j == i + 1) {
                return None;
            }
        }
    }
    let body = path[0];
    let legs: Vec<usize> = (0..n).filter(|&v| !on_path[v]).collect();
    for &leg in &legs {
        if !h.has_edge(body, leg) || path[1..].iter().any(|&q| h.has_edge(q, leg)) {
            return None;
        }
    }
    Some(ScorpionAnatomy {
        body,
        tail: path[1..path.len() - 1].to_vec(),
        sting: path[path.len() - 1],
        legs: VertexSubset::from_sorted(legs),
    })
}

fn unique<I: Iterator<Item = usize>>(mut it: I) -> Option<usize> {
    let first = it.next()?;
    it.next().is_none().then_some(first)
}

/// Recovers the anatomy of an `ell`-scorpion, or `None` if `h` is not one.
///
/// The body is the only vertex of degree `k - ell - 1`, the sting the only
/// degree-one vertex outside the body's closed neighbourhood, and `t_i` the
/// only vertex at distance `ell - i + 1` from the sting. The candidate is
/// then checked against the full definition.
pub fn locate_anatomy(h: &UndirectedGraph, ell: usize) -> Option<ScorpionAnatomy> {
    let k = h.vertex_count();
    if ell < 1 || k < ell + 4 {
        return None;
    }
    let body = unique((0..k).filter(|&v| h.degree(v) == k - ell - 1))?;
    let sting = unique((0..k).filter(|&v| v != body && !h.has_edge(body, v) && h.degree(v) == 1))?;

    let mut dist = vec![usize::MAX; k];
    let mut frontier = vec![sting];
    dist[sting] = 0;
    for d in 1..=ell {
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in h.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = d;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let mut path = vec![body];
    for i in 1..=ell {
        path.push(unique((0..k).filter(|&v| dist[v] == ell - i + 1))?);
    }
    path.push(sting);
    anatomy_from_path(h, &path)
}

pub fn is_scorpion(h: &UndirectedGraph, ell: usize) -> bool {
    locate_anatomy(h, ell).is_some()
}

/// A scorpion whose legs are pairwise non-adjacent.
pub fn is_skeleton(h: &UndirectedGraph, ell: usize) -> bool {
    locate_anatomy(h, ell).is_some_and(|a| independent(h, a.legs.as_slice()))
}

fn independent(h: &UndirectedGraph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !h.has_edge(u, v)))
}

/// A skeleton plus any number of extra edges, none of them between two legs.
///
/// Searches all `(ell + 2)`-tuples for one whose path edges and body-leg edges
/// are all present and whose remaining vertices are independent. Returns the
/// first witness in lexicographic order.
pub fn fossil_witness(h: &UndirectedGraph, ell: usize) -> Option<Vec<usize>> {
    let k = h.vertex_count();
    if ell < 1 || k < ell + 4 {
        return None;
    }
    let mut path = Vec::with_capacity(ell + 2);
    let mut used = vec![false; k];
    (0..k)
        .filter(|&b| h.degree(b) >= k - ell - 1)
        .find_map(|b| {
            path.clear();
            path.push(b);
            used[b] = true;
            let found = extend_fossil(h, ell + 2, &mut path, &mut used);
            used[b] = false;
            found
        })
}

fn extend_fossil(h: &UndirectedGraph, len: usize, path: &mut Vec<usize>, used: &mut [bool]) -> Option<Vec<usize>> {
    if path.len() == len {
        let body = path[0];
        let legs: Vec<usize> = (0..h.vertex_count()).filter(|&v| !used[v]).collect();
        let ok = legs.iter().all(|&l| h.has_edge(body, l)) && independent(h, &legs);
        return ok.then(|| path.clone());
    }
    let last = *path.last().expect("path starts at the body");
    for &next in h.neighbors(last) {
        if used[next] {
            continue;
        }
        used[next] = true;
        path.push(next);
        let found = extend_fossil(h, len, path, used);
        path.pop();
        used[next] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn is_fossil(h: &UndirectedGraph, ell: usize) -> bool {
    fossil_witness(h, ell).is_some()
}

/// The vertex every other vertex points to, if any. Without antiparallel
/// arcs there is at most one. A single vertex is its own (vacuous) sink.
pub fn find_sink(d: &DirectedGraph) -> Option<usize> {
    let n = d.vertex_count();
    (0..n).find(|&v| d.in_degree(v) + 1 == n)
}

/// User-supplied graph predicate.
#[derive(Clone)]
pub struct CustomProperty {
    name: String,
    predicate: Arc<dyn Fn(GraphRef<'_>) -> bool + Send + Sync>,
}

impl fmt::Debug for CustomProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CustomProperty({})", self.name)
    }
}

/// A graph property that can be evaluated on single graphs.
#[derive(Debug, Clone)]
pub enum PropertySpec {
    /// Directed graphs with a sink.
    Sink,
    Scorpion(usize),
    Skeleton(usize),
    Fossil(usize),
    Custom(CustomProperty),
    /// Complement of the inner property on its own graph kind.
    Not(Box<PropertySpec>),
}

impl PropertySpec {
    pub fn custom(name: impl Into<String>, predicate: impl Fn(GraphRef<'_>) -> bool + Send + Sync + 'static) -> Self {
        PropertySpec::Custom(CustomProperty {
            name: name.into(),
            predicate: Arc::new(predicate),
        })
    }

    pub fn always_true() -> Self {
        Self::custom("true", |_| true)
    }

    pub fn negate(self) -> Self {
        PropertySpec::Not(Box::new(self))
    }

    pub fn name(&self) -> String {
        match self {
            PropertySpec::Sink => "sink".into(),
            PropertySpec::Scorpion(l) => format!("scorpion({l})"),
            PropertySpec::Skeleton(l) => format!("skeleton({l})"),
            PropertySpec::Fossil(l) => format!("fossil({l})"),
            PropertySpec::Custom(c) => c.name.clone(),
            PropertySpec::Not(inner) => format!("not {}", inner.name()),
        }
    }

    /// Rejects `ell = 0`.
    pub fn validate(&self) -> Result<()> {
        match self {
            PropertySpec::Scorpion(0) | PropertySpec::Skeleton(0) | PropertySpec::Fossil(0) => {
                Err(Error::param("ell must be at least 1"))
            }
            PropertySpec::Not(inner) => inner.validate(),
            _ => Ok(()),
        }
    }

    fn mismatch(&self, g: GraphRef<'_>) -> Error {
        Error::Mismatch {
            property: self.name(),
            found: g.kind(),
        }
    }

    /// Evaluates the property, after [`PropertySpec::validate`] has passed.
    pub(crate) fn eval(&self, g: GraphRef<'_>) -> Result<bool> {
        Ok(match (self, g) {
            (PropertySpec::Sink, GraphRef::Directed(d)) => find_sink(d).is_some(),
            (PropertySpec::Scorpion(l), GraphRef::Undirected(h)) => is_scorpion(h, *l),
            (PropertySpec::Skeleton(l), GraphRef::Undirected(h)) => is_skeleton(h, *l),
            (PropertySpec::Fossil(l), GraphRef::Undirected(h)) => is_fossil(h, *l),
            (PropertySpec::Custom(c), g) => (c.predicate)(g),
            (PropertySpec::Not(inner), g) => !inner.eval(g)?,
            (spec, g) => return Err(spec.mismatch(g)),
        })
    }

    /// Checks that the property applies to graphs of `g`'s kind.
    pub(crate) fn check_kind(&self, g: GraphRef<'_>) -> Result<()> {
        match (self, g) {
            (PropertySpec::Sink, GraphRef::Directed(_)) | (PropertySpec::Custom(_), _) => Ok(()),
            (PropertySpec::Sink, _) => Err(self.mismatch(g)),
            (PropertySpec::Not(inner), g) => inner.check_kind(g),
            (_, GraphRef::Undirected(_)) => Ok(()),
            (_, GraphRef::Directed(_)) => Err(self.mismatch(g)),
        }
    }
}

/// Evaluates `spec` on `h`.
pub fn evaluate_property<'a>(spec: &PropertySpec, h: impl Into<GraphRef<'a>>) -> Result<bool> {
    let h = h.into();
    spec.validate()?;
    spec.check_kind(h)?;
    spec.eval(h)
}
