//! Simple undirected graphs with contiguous integer vertex ids, plus the
//! classical structural subroutines the rest of the crate leans on:
//! degeneracy peeling, girth, block decomposition and clique search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: u32 },
    VertexOutOfRange { vertex: u32, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph. Vertex ids are exactly `0..n`.
///
/// Immutable after construction; adjacency lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for x in [u, v] {
                if x as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n as u32).map(|u| (u, (u + 1) % n as u32)).collect();
        Graph::new(n, &edges).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as u32).map(|u| (u - 1, u)).collect();
        Graph::new(n, &edges).expect("path is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a as u32 {
            for v in 0..b as u32 {
                edges.push((u, a as u32 + v));
            }
        }
        Graph::new(a + b, &edges).expect("complete bipartite is simple")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, &edges).expect("petersen is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.adj[u as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.n as u32
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n as u32)
            .flat_map(move |u| self.adj[u as usize].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || self.adj.iter().all(|a| a.len() == self.adj[0].len())
    }

    /// Induced subgraph on `verts`; returns the subgraph together with the
    /// map from new ids to original ids (`verts` in sorted order).
    pub fn induced(&self, verts: &VertexSet) -> (Graph, Vec<u32>) {
        let to_orig: Vec<u32> = verts.iter().collect();
        let mut to_new = vec![u32::MAX; self.n];
        for (new, &orig) in to_orig.iter().enumerate() {
            to_new[orig as usize] = new as u32;
        }
        let mut edges = Vec::new();
        for &u in &to_orig {
            for &v in self.neighbors(u) {
                if v > u && verts.contains(v) {
                    edges.push((to_new[u as usize], to_new[v as usize]));
                }
            }
        }
        let g = Graph::new(to_orig.len(), &edges).expect("induced subgraph is simple");
        (g, to_orig)
    }

    /// Graph with one edge removed.
    pub fn without_edge(&self, u: u32, v: u32) -> Graph {
        let edges: Vec<_> = self.edges().filter(|&e| e != (u.min(v), u.max(v))).collect();
        Graph::new(self.n, &edges).expect("edge deletion keeps graph simple")
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n as u32 {
            if seen[s as usize] {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut queue = VecDeque::from([s]);
            seen[s as usize] = true;
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, source: u32) -> Vec<usize> {
        self.bfs_distances_multi(&[source])
    }

    /// BFS distances from a set of sources.
    pub fn bfs_distances_multi(&self, sources: &[u32]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s as usize] == usize::MAX {
                dist[s as usize] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// A subset of `0..n` backed by a `u64` block bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    blocks: Vec<u64>,
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet { n, blocks: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in 0..n as u32 {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = u32>>(n: usize, iter: I) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: u32) {
        assert!((v as usize) < self.n, "vertex {v} outside universe {}", self.n);
        self.blocks[v as usize / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: u32) {
        if (v as usize) < self.n {
            self.blocks[v as usize / 64] &= !(1 << (v % 64));
        }
    }

    pub fn contains(&self, v: u32) -> bool {
        (v as usize) < self.n && self.blocks[v as usize / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &b)| {
            let mut bits = b;
            core::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let t = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(i as u32 * 64 + t)
                }
            })
        })
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a | b).collect();
        VertexSet { n: self.n, blocks }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a & b).collect();
        VertexSet { n: self.n, blocks }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a & !b).collect();
        VertexSet { n: self.n, blocks }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.difference(other).is_empty()
    }
}

/// Degeneracy by iterative minimum-degree peeling.
///
/// Returns `(d, order)` where `order` is a removal order witnessing that the
/// graph is `d`-degenerate: every vertex has at most `d` neighbors removed
/// after it. The empty graph has degeneracy 0.
pub fn degeneracy(g: &Graph) -> (usize, Vec<u32>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n as u32).map(|u| g.degree(u)).collect();
    let mut removed = vec![false; n];
    let mut peel = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let u = (0..n as u32)
            .filter(|&u| !removed[u as usize])
            .min_by_key(|&u| (deg[u as usize], u))
            .expect("vertices remain");
        d = d.max(deg[u as usize]);
        removed[u as usize] = true;
        peel.push(u);
        for &v in g.neighbors(u) {
            if !removed[v as usize] {
                deg[v as usize] -= 1;
            }
        }
    }
    // Peeling removes a min-degree vertex first, so each peeled vertex has at
    // most d neighbors among the *later* ones; the witnessing removal order
    // (each vertex has at most d neighbors removed after it) is the reverse.
    peel.reverse();
    (d, peel)
}

/// Length of the shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..g.n() as u32 {
        // BFS from s; a non-tree edge closing at depths (du, dv) gives a
        // cycle through s of length du + dv + 1.
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![u32::MAX; g.n()];
        dist[s as usize] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                } else if parent[u as usize] != v && u < v {
                    let len = dist[u as usize] + dist[v as usize] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Block decomposition: biconnected components (as vertex sets, every edge in
/// exactly one block, plus isolated vertices as singleton blocks) and the cut
/// vertices. Blocks are ordered by their smallest vertex.
pub fn blocks(g: &Graph) -> (Vec<VertexSet>, Vec<u32>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut out: Vec<VertexSet> = Vec::new();

    for root in 0..n as u32 {
        if disc[root as usize] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root as usize] = timer;
            timer += 1;
            out.push(VertexSet::from_iter(n, [root]));
            continue;
        }
        // Iterative DFS: (vertex, parent, next neighbor index).
        let mut stack: Vec<(u32, u32, usize)> = vec![(root, u32::MAX, 0)];
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        let mut root_children = 0usize;
        while let Some(&mut (u, p, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let v = g.neighbors(u)[*idx];
                *idx += 1;
                if v == p {
                    continue;
                }
                if disc[v as usize] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v as usize] = timer;
                    low[v as usize] = timer;
                    timer += 1;
                    stack.push((v, u, 0));
                } else if disc[v as usize] < disc[u as usize] {
                    edge_stack.push((u, v));
                    low[u as usize] = low[u as usize].min(disc[v as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (pu, _, _)) = stack.last_mut() {
                    low[pu as usize] = low[pu as usize].min(low[u as usize]);
                    if low[u as usize] >= disc[pu as usize] {
                        // pu closes a block containing the edge (pu, u).
                        if pu == root {
                            root_children += 1;
                        } else {
                            is_cut[pu as usize] = true;
                        }
                        let mut block = VertexSet::new(n);
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a as usize] >= disc[u as usize] || (a, b) == (pu, u) {
                                block.insert(a);
                                block.insert(b);
                                edge_stack.pop();
                                if (a, b) == (pu, u) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root as usize] = true;
        }
    }

    out.sort_by_key(|b| b.iter().next().unwrap_or(u32::MAX));
    let cuts = (0..n as u32).filter(|&v| is_cut[v as usize]).collect();
    (out, cuts)
}

/// Exact k-clique decision by backtracking with pivoting.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "clique size must be at least 1");
    if k == 1 {
        return g.n() > 0;
    }
    if k == 2 {
        return g.m() > 0;
    }
    // Candidates ordered by degeneracy order keeps the branch sets small.
    let (_, order) = degeneracy(g);
    let mut pos = vec![0usize; g.n()];
    for (i, &u) in order.iter().enumerate() {
        pos[u as usize] = i;
    }
    fn extend(g: &Graph, clique: &mut Vec<u32>, cands: &[u32], k: usize) -> bool {
        if clique.len() == k {
            return true;
        }
        if clique.len() + cands.len() < k {
            return false;
        }
        for (i, &v) in cands.iter().enumerate() {
            clique.push(v);
            let next: Vec<u32> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            if extend(g, clique, &next, k) {
                return true;
            }
            clique.pop();
        }
        false
    }
    for &u in &order {
        // Later-in-order neighbors of u.
        let cands: Vec<u32> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| pos[v as usize] > pos[u as usize])
            .collect();
        if extend(g, &mut vec![u], &cands, k) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_self_loops() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop { vertex: 0 }
        );
        assert_eq!(
            Graph::new(2, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 2 }
        );
    }

    #[test]
    fn construction_collapses_duplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&Graph::complete(4)).0, 3);
        assert_eq!(degeneracy(&Graph::cycle(5)).0, 2);
        // A tree on 5 vertices.
        let t = Graph::new(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(degeneracy(&t).0, 1);
        assert_eq!(degeneracy(&Graph::empty(0)).0, 0);
    }

    #[test]
    fn degeneracy_order_witnesses() {
        for g in [Graph::complete(5), Graph::cycle(6), Graph::petersen()] {
            let (d, order) = degeneracy(&g);
            let mut pos = vec![0usize; g.n()];
            for (i, &u) in order.iter().enumerate() {
                pos[u as usize] = i;
            }
            for u in 0..g.n() as u32 {
                let later = g.neighbors(u).iter().filter(|&&v| pos[v as usize] > pos[u as usize]).count();
                assert!(later <= d);
            }
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        let t = Graph::new(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(girth(&t), None);
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
        assert_eq!(girth(&Graph::complete_bipartite(2, 3)), Some(4));
    }

    #[test]
    fn blocks_bowtie() {
        // Two triangles sharing vertex 2.
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let (bl, cuts) = blocks(&g);
        assert_eq!(bl.len(), 2);
        assert_eq!(cuts, vec![2]);
    }

    #[test]
    fn blocks_cycle_and_path() {
        let (bl, cuts) = blocks(&Graph::cycle(5));
        assert_eq!(bl.len(), 1);
        assert!(cuts.is_empty());
        assert_eq!(bl[0].len(), 5);

        let (bl, cuts) = blocks(&Graph::path(4));
        assert_eq!(bl.len(), 3);
        assert_eq!(cuts, vec![1, 2]);
    }

    #[test]
    fn blocks_partition_edges() {
        for g in [Graph::petersen(), Graph::path(6), Graph::complete(5)] {
            let (bl, _) = blocks(&g);
            for (u, v) in g.edges() {
                let holding = bl.iter().filter(|b| b.contains(u) && b.contains(v)).count();
                assert_eq!(holding, 1, "edge ({u},{v}) in {holding} blocks");
            }
        }
    }

    #[test]
    fn blocks_isolated_vertices() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let (bl, cuts) = blocks(&g);
        assert_eq!(bl.len(), 2);
        assert!(cuts.is_empty());
    }

    #[test]
    fn clique_examples() {
        assert!(has_clique(&Graph::complete(4), 4));
        assert!(!has_clique(&Graph::cycle(5), 3));
        let k4_minus = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!has_clique(&k4_minus, 4));
        assert!(has_clique(&k4_minus, 3));
    }

    #[test]
    fn vertex_set_ops() {
        let mut s = VertexSet::new(100);
        s.insert(3);
        s.insert(70);
        assert!(s.contains(70) && !s.contains(71));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 70]);
        let t = VertexSet::from_iter(100, [70, 80]);
        assert_eq!(s.intersection(&t).len(), 1);
        assert_eq!(s.union(&t).len(), 3);
        assert_eq!(s.difference(&t).iter().collect::<Vec<_>>(), vec![3]);
        assert!(s.difference(&t).is_subset(&s));
    }
}
