//! Structured and seeded random graph generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, UndirectedGraph, VertexSubset};
use crate::recognition::ScorpionAnatomy;

/// The `ell`-scorpion skeleton on `k` vertices: body `0`, tail `1..=ell`,
/// sting `ell + 1`, independent legs `ell + 2..k`.
pub fn gen_skeleton(ell: usize, k: usize) -> Result<(UndirectedGraph, ScorpionAnatomy)> {
    if ell < 1 {
        return Err(Error::param("ell must be at least 1"));
    }
    if k < ell + 4 {
        return Err(Error::param(format!("k = {k} is below ell + 4 = {}", ell + 4)));
    }
    let sting = ell + 1;
    let path = (0..sting).map(|v| (v, v + 1));
    let legs = (sting + 1..k).map(|leg| (0, leg));
    let graph = UndirectedGraph::from_edges(k, path.chain(legs))?;
    let anatomy = ScorpionAnatomy {
        body: 0,
        tail: (1..=ell).collect(),
        sting,
        legs: VertexSubset::from_sorted((sting + 1..k).collect()),
    };
    Ok((graph, anatomy))
}

/// A random `ell`-scorpion: the skeleton plus each leg-leg pair with
/// probability `leg_p`, then relabelled by a random permutation. Returns the
/// anatomy under the new labels.
pub fn random_scorpion(ell: usize, k: usize, leg_p: f64, seed: u64) -> Result<(UndirectedGraph, ScorpionAnatomy)> {
    check_probability(leg_p)?;
    let (skeleton, anatomy) = gen_skeleton(ell, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let legs = anatomy.legs.as_slice();
    let mut edges = skeleton.edges();
    for (i, &u) in legs.iter().enumerate() {
        for &v in &legs[i + 1..] {
            if rng.gen_bool(leg_p) {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..k).collect();
    perm.shuffle(&mut rng);
    let graph = UndirectedGraph::from_edges(k, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))?;
    let anatomy = ScorpionAnatomy {
        body: perm[anatomy.body],
        tail: anatomy.tail.iter().map(|&t| perm[t]).collect(),
        sting: perm[anatomy.sting],
        legs: VertexSubset::new(legs.iter().map(|&l| perm[l]))?,
    };
    Ok((graph, anatomy))
}

/// `K_{a,b}` with the left side `0..a` completed to a clique.
pub fn gen_augmented_biclique(a: usize, b: usize) -> Result<UndirectedGraph> {
    if a < 1 || b < 1 {
        return Err(Error::param("both sides of the biclique need at least one vertex"));
    }
    let clique = (0..a).flat_map(|u| (u + 1..a).map(move |v| (u, v)));
    let cross = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    UndirectedGraph::from_edges(a + b, clique.chain(cross))
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::param(format!("probability {p} outside [0, 1]")))
    }
}

/// `G(n, p)`: every pair independently, visited in lexicographic order and
/// driven by a ChaCha8 stream seeded with `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<UndirectedGraph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::from_edges(n, edges)
}

/// Each pair independently absent, `u -> v` or `v -> u`, uniformly.
pub fn random_orientation(n: usize, seed: u64) -> DirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => {}
                1 => arcs.push((u, v)),
                _ => arcs.push((v, u)),
            }
        }
    }
    DirectedGraph::from_arcs(n, arcs).expect("one orientation per pair")
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}
