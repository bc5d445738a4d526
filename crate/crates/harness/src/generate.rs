//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use vc4_core::{Graph, VertexId, VertexSet};

/// Degree profile of generated graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Degrees drawn from {2, 3, 4}.
    Mixed34,
    Regular3,
    Regular4,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::Mixed34, Profile::Regular3, Profile::Regular4];
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Mixed34 => "mixed34",
            Profile::Regular3 => "regular3",
            Profile::Regular4 => "regular4",
        })
    }
}

impl FromStr for Profile {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mixed34" => Ok(Profile::Mixed34),
            "regular3" => Ok(Profile::Regular3),
            "regular4" => Ok(Profile::Regular4),
            other => Err(GenError::UnknownProfile(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("n = {0} is below the minimum of 5")]
    TooSmall(usize),
    #[error("no {profile} graph on {n} vertices (odd degree sum)")]
    OddDegreeSum { n: usize, profile: Profile },
    #[error("gave up after {0} attempts")]
    GaveUp(usize),
    #[error("unknown profile {0:?}")]
    UnknownProfile(String),
}

const MAX_ATTEMPTS: usize = 200_000;

/// Connected graph with degrees in [2, 4] following `profile`, reproducible from `(n, seed)`.
///
/// Draws a degree sequence, pairs stubs uniformly, and starts over whenever the
/// pairing has a loop or parallel edge or the result is disconnected.
pub fn gen_bounded_degree(n: usize, seed: u64, profile: Profile) -> Result<Graph, GenError> {
    if n < 5 {
        return Err(GenError::TooSmall(n));
    }
    if profile == Profile::Regular3 && n % 2 == 1 {
        return Err(GenError::OddDegreeSum { n, profile });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ n as u64);
    for _ in 0..MAX_ATTEMPTS {
        let degrees = degree_sequence(n, profile, &mut rng);
        if let Some(g) = pair_stubs(&degrees, &mut rng) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(GenError::GaveUp(MAX_ATTEMPTS))
}

fn degree_sequence(n: usize, profile: Profile, rng: &mut ChaCha8Rng) -> Vec<usize> {
    match profile {
        Profile::Regular3 => vec![3; n],
        Profile::Regular4 => vec![4; n],
        Profile::Mixed34 => {
            let mut d: Vec<usize> = (0..n).map(|_| [2, 3, 3, 4, 4][rng.gen_range(0..5)]).collect();
            if d.iter().sum::<usize>() % 2 == 1 {
                let i = rng.gen_range(0..n);
                d[i] = if d[i] == 3 { 4 } else { 3 };
            }
            d
        }
    }
}

fn pair_stubs(degrees: &[usize], rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut stubs: Vec<u32> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v as u32, d))
        .collect();
    stubs.shuffle(rng);
    let mut edges: Vec<(u32, u32)> = stubs
        .chunks(2)
        .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
        .collect();
    if edges.iter().any(|&(a, b)| a == b) {
        return None;
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(Graph::from_internal_edges(degrees.len(), &edges))
}

/// A cubic graph of girth ≥ 5 on `n` vertices plus `hubs` (1 or 2) extra
/// vertices, each joined to four spokes pairwise at distance ≥ 3; spokes of
/// different hubs are distinct and non-adjacent. No triangle or 4-cycle passes
/// through a degree-3 vertex, so the instance reaches the tail of the degree-4
/// ladder: with one hub every degree-3 vertex has at most one degree-4
/// neighbor, with two some usually have two.
pub fn gen_hub_instance(n: usize, hubs: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 10 {
        return Err(GenError::TooSmall(n));
    }
    if n % 2 == 1 {
        return Err(GenError::OddDegreeSum { n, profile: Profile::Regular3 });
    }
    let hubs = hubs.clamp(1, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0FF_EE00 ^ (n as u64) << 32 ^ (hubs as u64) << 48);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let Some(g) = pair_stubs(&vec![3; n], &mut rng) else { continue };
        if !g.is_connected() || has_short_cycle(&g) {
            continue;
        }
        let dist: Vec<Vec<usize>> = g.vertices().map(|v| bfs(&g, v)).collect();
        let mut edges: Vec<(u32, u32)> = g.edges().into_iter().map(|(a, b)| (a.0, b.0)).collect();
        let mut taken: Vec<u32> = Vec::new();
        for hub in 0..hubs {
            let mut order: Vec<u32> = (0..n as u32).collect();
            order.shuffle(&mut rng);
            let mut spokes: Vec<u32> = Vec::new();
            for v in order {
                let near_own = spokes.iter().any(|&s| dist[s as usize][v as usize] < 3);
                let near_other = taken.iter().any(|&s| dist[s as usize][v as usize] < 2);
                if !near_own && !near_other {
                    spokes.push(v);
                    if spokes.len() == 4 {
                        break;
                    }
                }
            }
            if spokes.len() < 4 {
                continue 'attempt;
            }
            edges.extend(spokes.iter().map(|&s| (s, (n + hub) as u32)));
            taken.extend(spokes);
        }
        return Ok(Graph::from_internal_edges(n + hubs, &edges));
    }
    Err(GenError::GaveUp(MAX_ATTEMPTS))
}

fn bfs(g: &Graph, s: VertexId) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.id_bound()];
    d[s.index()] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if d[y.index()] == usize::MAX {
                d[y.index()] = d[x.index()] + 1;
                queue.push_back(y);
            }
        }
    }
    d
}

/// Triangle or 4-cycle anywhere.
fn has_short_cycle(g: &Graph) -> bool {
    g.edges().iter().any(|&(a, b)| {
        let (na, nb) = (g.neighbors(a), g.neighbors(b));
        na.iter().any(|x| nb.contains(x))
            || na.iter().filter(|&&x| x != b).any(|&x| nb.iter().filter(|&&y| y != a).any(|&y| g.has_edge(x, y)))
    })
}

/// A host graph (max degree 4, ≤ 20 vertices) with a general crown `(C, H)`,
/// `|C| ≤ 5`, `|H| ≤ |C| + 1`, and every vertex of `C` adjacent to `H`.
#[derive(Clone, Debug)]
pub struct CrownInstance {
    pub graph: Graph,
    pub c: VertexSet,
    pub h: VertexSet,
}

pub fn gen_crown_instance(seed: u64) -> CrownInstance {
    (0..)
        .map(|i| draw_crown(seed.wrapping_add(i)))
        .find(|inst| inst.c.iter().all(|&v| inst.graph.degree(v) > 0))
        .expect("some draw succeeds")
}

fn draw_crown(seed: u64) -> CrownInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nc = rng.gen_range(1..=5usize);
    let nh = rng.gen_range(1..=nc + 1);
    let nr = rng.gen_range(0..=9usize);
    let n = nc + nh + nr;
    let (cs, hs) = (0..nc as u32, nc as u32..(nc + nh) as u32);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut try_add = |a: u32, b: u32, p: f64, rng: &mut ChaCha8Rng| {
        if rng.gen_bool(p) && deg[a as usize] < 4 && deg[b as usize] < 4 {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
            edges.push((a, b));
        }
    };
    let (p_ch, p_hh, p_rest) = (rng.gen_range(0.3..1.0), rng.gen_range(0.0..0.5), rng.gen_range(0.2..0.8));
    for c in cs.clone() {
        for h in hs.clone() {
            try_add(c, h, p_ch, &mut rng);
        }
    }
    for a in hs.clone() {
        for b in a + 1..hs.end {
            try_add(a, b, p_hh, &mut rng);
        }
    }
    for a in hs.start..n as u32 {
        for b in (a + 1).max(hs.end)..n as u32 {
            try_add(a, b, p_rest, &mut rng);
        }
    }
    CrownInstance {
        graph: Graph::from_internal_edges(n, &edges),
        c: cs.map(VertexId).collect(),
        h: hs.map(VertexId).collect(),
    }
}
