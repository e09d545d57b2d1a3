//! Exhaustive non-isomorphic graph catalogs for small n, built by vertex
//! augmentation with canonical-code deduplication. The catalogs anchor the
//! sweep-style checks: claims verified over "all graphs with n <= k" run over
//! exactly these lists.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::graph::Graph;

/// Largest n the catalog generator accepts (the canonical code packs
/// n(n-1)/2 bits into a u64 together with n itself).
pub const CATALOG_MAX_N: usize = 10;

/// Canonical isomorphism code: `n` plus the lexicographically maximal
/// placement string. Equal codes iff isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u64,
}

/// Computes the canonical code by building a vertex placement left to right,
/// at each step keeping exactly the choices that maximize the bits of
/// adjacency to the already-placed prefix. States that expose the same
/// interface to the unplaced rest are merged, which tames the ties on
/// symmetric graphs.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.n();
    assert!(n <= CATALOG_MAX_N, "canonical code supports n <= {CATALOG_MAX_N}");
    if n == 0 {
        return CanonicalCode { n: 0, bits: 0 };
    }
    let adj: Vec<u16> = (0..n as u32)
        .map(|u| g.neighbors(u).iter().fold(0u16, |m, &v| m | 1 << v))
        .collect();

    // A state is the placement order so far; its interface is, per unplaced
    // vertex, the adjacency bitmask relative to placement positions.
    let mut states: Vec<Vec<u32>> = alloc::vec![Vec::new()];
    let mut bits: u64 = 0;
    for level in 0..n {
        let mut best: Option<u16> = None;
        let mut next: Vec<(Vec<u32>, u16)> = Vec::new();
        for placed in &states {
            let used = placed.iter().fold(0u16, |m, &v| m | 1 << v);
            for v in 0..n as u32 {
                if used >> v & 1 == 1 {
                    continue;
                }
                let mut b = 0u16;
                for (i, &p) in placed.iter().enumerate() {
                    if adj[v as usize] >> p & 1 == 1 {
                        b |= 1 << (level - 1 - i);
                    }
                }
                if best.is_none_or(|cur| b > cur) {
                    best = Some(b);
                    next.clear();
                }
                if best == Some(b) {
                    let mut order = placed.clone();
                    order.push(v);
                    next.push((order, b));
                }
            }
        }
        let b = best.expect("some vertex is always placeable") as u64;
        bits = (bits << level) | b;
        // Merge states whose unplaced vertices look identical from here on.
        let mut seen: HashSet<(u16, Vec<u16>)> = HashSet::new();
        states.clear();
        for (order, _) in next {
            let used = order.iter().fold(0u16, |m, &v| m | 1 << v);
            let mut interface: Vec<u16> = Vec::with_capacity(n - level - 1);
            for v in 0..n as u32 {
                if used >> v & 1 == 0 {
                    let mut ib = 0u16;
                    for (i, &p) in order.iter().enumerate() {
                        if adj[v as usize] >> p & 1 == 1 {
                            ib |= 1 << i;
                        }
                    }
                    interface.push(ib);
                }
            }
            if seen.insert((used, interface)) {
                states.push(order);
            }
        }
    }
    CanonicalCode { n: n as u8, bits }
}

/// Rebuilds the representative graph of a canonical code.
pub fn graph_from_code(code: CanonicalCode) -> Graph {
    let n = code.n as usize;
    let mut edges = Vec::new();
    let mut shift = (n * (n - 1) / 2) as u32;
    for k in 1..n {
        for i in 0..k {
            shift -= 1;
            if code.bits >> shift & 1 == 1 {
                edges.push((i as u32, k as u32));
            }
        }
    }
    Graph::new(n, &edges).expect("code encodes a simple graph")
}

/// All non-isomorphic graphs on exactly `n` vertices, ordered by canonical
/// code. Counts match the classical enumeration (1, 1, 2, 4, 11, 34, 156,
/// 1044, 12346 for n = 0..8).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= CATALOG_MAX_N);
    if n == 0 {
        return alloc::vec![Graph::empty(0)];
    }
    let mut codes: Vec<CanonicalCode> = alloc::vec![canonical_code(&Graph::empty(1))];
    for k in 2..=n {
        let mut seen: HashSet<CanonicalCode> = HashSet::new();
        for code in &codes {
            let parent = graph_from_code(*code);
            let mut edges: Vec<(u32, u32)> = parent.edges().collect();
            let base = edges.len();
            for mask in 0u32..1 << (k - 1) {
                edges.truncate(base);
                for v in 0..k as u32 - 1 {
                    if mask >> v & 1 == 1 {
                        edges.push((v, k as u32 - 1));
                    }
                }
                let child = Graph::new(k, &edges).expect("augmented graph is simple");
                seen.insert(canonical_code(&child));
            }
        }
        let mut next: Vec<CanonicalCode> = seen.into_iter().collect();
        next.sort_unstable();
        codes = next;
    }
    codes.into_iter().map(graph_from_code).collect()
}

/// All non-isomorphic connected graphs on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_isomorphism_invariant() {
        // C5 under two different labelings.
        let a = Graph::cycle(5);
        let b = Graph::new(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        // And distinguishes C5 from P5 plus an edge elsewhere.
        let c = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]).unwrap();
        assert_ne!(canonical_code(&a), canonical_code(&c));
    }

    #[test]
    fn code_roundtrip() {
        for g in [Graph::petersen(), Graph::complete(6), Graph::path(5)] {
            let code = canonical_code(&g);
            assert_eq!(canonical_code(&graph_from_code(code)), code);
        }
    }

    #[test]
    fn counts_match_the_classical_enumeration() {
        let expected = [1usize, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(all_graphs(n).len(), want, "graph count at n={n}");
        }
        let expected_connected = [1usize, 1, 1, 2, 6, 21, 112, 853];
        for (n, &want) in expected_connected.iter().enumerate() {
            assert_eq!(connected_graphs(n).len(), want, "connected count at n={n}");
        }
    }
}
