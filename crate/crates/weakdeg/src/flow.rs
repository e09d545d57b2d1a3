//! Dinic max-flow on small integer-capacity networks, plus a bipartite
//! matching wrapper. Serves the densest-subgraph search and the Hall-type
//! save construction.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy)]
struct Edge {
    to: u32,
    cap: i64,
}

/// Residual flow network with explicit reverse edges.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    edges: Vec<Edge>,
    head: Vec<Vec<u32>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork { edges: Vec::new(), head: vec![Vec::new(); nodes] }
    }

    /// Adds a directed edge and returns its index (reverse edge is index+1).
    pub fn add_edge(&mut self, from: u32, to: u32, cap: i64) -> usize {
        let id = self.edges.len();
        self.edges.push(Edge { to, cap });
        self.edges.push(Edge { to: from, cap: 0 });
        self.head[from as usize].push(id as u32);
        self.head[to as usize].push(id as u32 + 1);
        id
    }

    /// Flow currently pushed through edge `id` (as returned by `add_edge`).
    pub fn flow_on(&self, id: usize) -> i64 {
        self.edges[id + 1].cap
    }

    pub fn max_flow(&mut self, s: u32, t: u32) -> i64 {
        let n = self.head.len();
        let mut total = 0;
        loop {
            // BFS level graph.
            let mut level = vec![u32::MAX; n];
            level[s as usize] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &id in &self.head[u as usize] {
                    let e = self.edges[id as usize];
                    if e.cap > 0 && level[e.to as usize] == u32::MAX {
                        level[e.to as usize] = level[u as usize] + 1;
                        queue.push_back(e.to);
                    }
                }
            }
            if level[t as usize] == u32::MAX {
                return total;
            }
            let mut iter = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn dfs(&mut self, u: u32, t: u32, limit: i64, level: &[u32], iter: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while iter[u as usize] < self.head[u as usize].len() {
            let id = self.head[u as usize][iter[u as usize]] as usize;
            let Edge { to, cap } = self.edges[id];
            if cap > 0 && level[to as usize] == level[u as usize] + 1 {
                let pushed = self.dfs(to, t, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.edges[id].cap -= pushed;
                    self.edges[id ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[u as usize] += 1;
        }
        0
    }

    /// Nodes reachable from `s` in the residual network (the source side of a
    /// minimum cut once `max_flow` has run).
    pub fn source_side(&self, s: u32) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s as usize] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u as usize] {
                let e = self.edges[id as usize];
                if e.cap > 0 && !seen[e.to as usize] {
                    seen[e.to as usize] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }
}

/// Maximum bipartite matching between `0..left` and `0..right` given the
/// admissible pairs; returns `match_of_left` (right index or `u32::MAX`).
pub fn bipartite_matching(left: usize, right: usize, pairs: &[(u32, u32)]) -> Vec<u32> {
    let s = (left + right) as u32;
    let t = s + 1;
    let mut net = FlowNetwork::new(left + right + 2);
    for u in 0..left as u32 {
        net.add_edge(s, u, 1);
    }
    for v in 0..right as u32 {
        net.add_edge(left as u32 + v, t, 1);
    }
    let mut ids = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        ids.push(net.add_edge(u, left as u32 + v, 1));
    }
    net.max_flow(s, t);
    let mut match_of_left = vec![u32::MAX; left];
    for (&(u, v), &id) in pairs.iter().zip(&ids) {
        if net.flow_on(id) > 0 {
            match_of_left[u as usize] = v;
        }
    }
    match_of_left
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_flow_diamond() {
        let mut net = FlowNetwork::new(4);
        net.add_edge(0, 1, 1);
        net.add_edge(0, 2, 1);
        net.add_edge(1, 3, 1);
        net.add_edge(2, 3, 1);
        assert_eq!(net.max_flow(0, 3), 2);
    }

    #[test]
    fn matching_k23() {
        let pairs: Vec<(u32, u32)> = (0..2).flat_map(|u| (0..3).map(move |v| (u, v))).collect();
        let m = bipartite_matching(2, 3, &pairs);
        assert!(m.iter().all(|&v| v != u32::MAX));
        assert_ne!(m[0], m[1]);
    }

    #[test]
    fn matching_respects_structure() {
        // 0-0, 1-0 only: one of the left vertices stays unmatched.
        let m = bipartite_matching(2, 2, &[(0, 0), (1, 0)]);
        let matched = m.iter().filter(|&&v| v != u32::MAX).count();
        assert_eq!(matched, 1);
    }
}
