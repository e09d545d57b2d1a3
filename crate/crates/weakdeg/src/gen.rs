//! Seeded random graph generators used by the pipelines and the test
//! harnesses. Everything is deterministic in the provided RNG.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Erdos-Renyi G(n, p).
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("gnp emits simple edges")
}

/// Random d-regular graph by the pairing model with rejection; `n * d` must
/// be even and `d < n`. Dense degrees go through the complement.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    assert!(d < n, "degree must be below n");
    assert!(n * d % 2 == 0, "n * d must be even");
    if d == 0 {
        return Graph::empty(n);
    }
    if d > n / 2 {
        // Complement of a sparse regular graph.
        let sparse = random_regular(n, n - 1 - d, rng);
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if !sparse.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        return Graph::new(n, &edges).expect("complement is simple");
    }
    'attempt: loop {
        let mut points: Vec<u32> = (0..(n * d) as u32).map(|i| i / d as u32).collect();
        points.shuffle(rng);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'attempt;
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::new(n, &edges).expect("pairing produced simple edges");
    }
}

/// Random connected G(n, p), resampled until connected.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random GDP-tree: glue `blocks` random clique/cycle blocks one at a time,
/// each attached at a uniformly chosen existing vertex.
pub fn random_gdp_tree<R: Rng>(blocks: usize, max_block: usize, rng: &mut R) -> Graph {
    assert!(max_block >= 3);
    let mut n = 1usize;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for _ in 0..blocks {
        let attach = rng.gen_range(0..n) as u32;
        let size = rng.gen_range(2..=max_block);
        let is_cycle = size >= 3 && rng.gen_bool(0.5);
        let mut verts = Vec::with_capacity(size);
        verts.push(attach);
        for _ in 1..size {
            verts.push(n as u32);
            n += 1;
        }
        if is_cycle {
            for i in 0..size {
                edges.push((verts[i], verts[(i + 1) % size]));
            }
        } else {
            for i in 0..size {
                for j in i + 1..size {
                    edges.push((verts[i], verts[j]));
                }
            }
        }
    }
    Graph::new(n, &edges).expect("block gluing is simple")
}

/// Bipartite double cover: vertices (v, side), edges between opposite sides
/// of original edges. Kills odd cycles.
pub fn bipartite_double_cover(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (u, v) in g.edges() {
        edges.push((u, n as u32 + v));
        edges.push((v, n as u32 + u));
    }
    Graph::new(2 * n, &edges).expect("double cover is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn regular_generator_is_regular() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (n, d) in [(10, 3), (12, 5), (16, 11), (9, 8)] {
            let g = random_regular(n, d, &mut rng);
            assert!(g.vertices().all(|v| g.degree(v) == d), "n={n} d={d}");
        }
    }

    #[test]
    fn generators_are_seed_deterministic() {
        let a = gnp(12, 0.4, &mut ChaCha8Rng::seed_from_u64(7));
        let b = gnp(12, 0.4, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
    }

    #[test]
    fn gdp_trees_are_gdp_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_gdp_tree(4, 5, &mut rng);
            assert!(g.is_connected());
            let verdict = crate::structure::is_gdp_tree(&g).unwrap();
            assert!(verdict.is_gdp_tree);
        }
    }

    #[test]
    fn double_cover_is_bipartite_and_regular() {
        let g = Graph::petersen();
        let cover = bipartite_double_cover(&g);
        assert_eq!(cover.n(), 20);
        assert!(cover.vertices().all(|v| cover.degree(v) == 3));
        // Bipartite: no odd cycle; petersen has girth 5, the cover has 6.
        assert_eq!(crate::graph::girth(&cover), Some(6));
    }
}
