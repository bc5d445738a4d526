use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vc4_core::{Graph, VertexId, VertexSet};

/// A graph of maximum degree ≤ 4 with a general crown `(C, H)`, `|C| ≥ |H| - 1`.
pub struct CrownInstance {
    pub graph: Graph,
    pub c: VertexSet,
    pub h: VertexSet,
}

/// Rejects draws where some crown-side vertex ended up isolated.
pub fn random_crown_instance(seed: u64) -> CrownInstance {
    (0..)
        .map(|i| draw(seed.wrapping_add(i)))
        .find(|inst| inst.c.iter().all(|&v| inst.graph.degree(v) > 0))
        .expect("some draw succeeds")
}

fn draw(seed: u64) -> CrownInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nc = rng.gen_range(1..=5usize);
    let nh = rng.gen_range(1..=nc + 1);
    let nr = rng.gen_range(0..=9usize);
    let n = nc + nh + nr;
    let (cs, hs, rs) = (0..nc as u32, nc as u32..(nc + nh) as u32, (nc + nh) as u32..n as u32);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut add = |a: u32, b: u32, deg: &mut Vec<usize>| {
        if deg[a as usize] < 4 && deg[b as usize] < 4 {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
            edges.push((a, b));
        }
    };
    let p_ch = rng.gen_range(0.3..1.0);
    for c in cs.clone() {
        for h in hs.clone() {
            if rng.gen_bool(p_ch) {
                add(c, h, &mut deg);
            }
        }
    }
    let p_hh = rng.gen_range(0.0..0.5);
    for a in hs.clone() {
        for b in a + 1..hs.end {
            if rng.gen_bool(p_hh) {
                add(a, b, &mut deg);
            }
        }
    }
    let p_rest = rng.gen_range(0.2..0.8);
    for a in hs.start..n as u32 {
        for b in rs.clone().filter(|&b| b > a) {
            if rng.gen_bool(p_rest) {
                add(a, b, &mut deg);
            }
        }
    }
    CrownInstance {
        graph: Graph::from_internal_edges(n, &edges),
        c: cs.map(VertexId).collect(),
        h: hs.map(VertexId).collect(),
    }
}
