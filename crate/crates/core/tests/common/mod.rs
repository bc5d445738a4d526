#![allow(dead_code)]

pub mod crowns;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vc4_core::{Graph, VertexId};

/// Random graph with maximum degree ≤ `max_deg`, built by adding random edges while degrees allow.
pub fn random_bounded(n: usize, max_deg: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            pairs.push((a, b));
        }
    }
    pairs.shuffle(&mut rng);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if deg[a as usize] < max_deg && deg[b as usize] < max_deg && rng.gen_bool(density) {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
            edges.push((a, b));
        }
    }
    Graph::from_internal_edges(n, &edges)
}

pub fn set(ids: &[u32]) -> std::collections::BTreeSet<VertexId> {
    ids.iter().map(|&i| VertexId(i)).collect()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i + 1, (i + 1) % 5 + 1));
        edges.push((i + 1, i + 6));
        edges.push((i + 6, (i + 2) % 5 + 6));
    }
    Graph::from_edges(10, &edges).unwrap()
}
