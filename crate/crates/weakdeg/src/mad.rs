//! Maximum average degree as an exact rational.
//!
//! Small graphs (n <= 20) are handled by subset enumeration with incremental
//! edge counts. Larger graphs binary-search the density through a max-flow
//! construction: the density of some subgraph exceeds p/q exactly when the
//! cut capacity of the scaled edge/vertex network falls short of q*m.
//! Restricting to induced subgraphs is enough, since dropping edges on the
//! same vertex set only lowers the density.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::flow::FlowNetwork;
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MadError {
    EmptyGraph,
}

impl fmt::Display for MadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "maximum average degree requires a nonempty graph")
    }
}

impl core::error::Error for MadError {}

const SUBSET_LIMIT: usize = 20;

/// Exact maximum of `2|E(H)|/|V(H)|` over nonempty subgraphs.
pub fn max_average_degree(g: &Graph) -> Result<Rational, MadError> {
    if g.n() == 0 {
        return Err(MadError::EmptyGraph);
    }
    if g.m() == 0 {
        return Ok(Rational::new(0, 1));
    }
    if g.n() <= SUBSET_LIMIT {
        Ok(mad_by_subsets(g))
    } else {
        Ok(mad_by_flow(g))
    }
}

fn mad_by_subsets(g: &Graph) -> Rational {
    let n = g.n();
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    // edges(S) = edges(S minus lowest bit) + deg of lowest bit inside S.
    let mut edge_count = vec![0u32; 1 << n];
    let mut best = Rational::new(0, 1);
    for s in 1usize..1 << n {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        edge_count[s] = edge_count[rest] + (adj[v] & rest as u32).count_ones();
        let density = Rational::new(2 * edge_count[s] as i64, s.count_ones() as i64);
        if density > best {
            best = density;
        }
    }
    best
}

/// Does some induced subgraph have density (|E|/|V|) strictly above p/q?
/// Network: source -> edge nodes (cap q), edge -> endpoints (infinite),
/// vertex -> sink (cap p). Min cut < q*m iff such a subgraph exists; the
/// source side of the cut names its vertices.
fn denser_than(g: &Graph, p: i64, q: i64) -> Option<Vec<u32>> {
    let n = g.n();
    let m = g.m();
    let s = (n + m) as u32;
    let t = s + 1;
    let inf = q * m as i64 + p * n as i64 + 1;
    let mut net = FlowNetwork::new(n + m + 2);
    for (i, (u, v)) in g.edges().enumerate() {
        let enode = (n + i) as u32;
        net.add_edge(s, enode, q);
        net.add_edge(enode, u, inf);
        net.add_edge(enode, v, inf);
    }
    for v in 0..n as u32 {
        net.add_edge(v, t, p);
    }
    let flow = net.max_flow(s, t);
    if flow >= q * m as i64 {
        return None;
    }
    let side = net.source_side(s);
    let verts: Vec<u32> = (0..n as u32).filter(|&v| side[v as usize]).collect();
    debug_assert!(!verts.is_empty());
    Some(verts)
}

fn mad_by_flow(g: &Graph) -> Rational {
    let n = g.n() as i64;
    // Candidate densities are fractions with denominator <= n; any two
    // distinct ones differ by at least 1/n^2, so bisect until the interval
    // is that narrow, tracking the densest witness seen.
    let mut lo = Rational::new(0, 1);
    let mut hi = Rational::new(g.m() as i64, 1);
    let mut witness: Vec<u32> = (0..g.n() as u32).collect();
    loop {
        // Distinct densities with denominator <= n differ by at least 1/n^2,
        // so a strictly narrower bracket pins the maximum to the witness.
        if hi - lo < Rational::new(1, n * n) {
            break;
        }
        let mid = (lo + hi) / 2;
        match denser_than(g, *mid.numer(), *mid.denom()) {
            Some(w) => {
                let (sub, _) = g.induced(&crate::graph::VertexSet::from_iter(g.n(), w.iter().copied()));
                let d = Rational::new(sub.m() as i64, sub.n() as i64);
                witness = w;
                lo = if d > mid { d } else { mid };
            }
            None => hi = mid,
        }
    }
    let (sub, _) =
        g.induced(&crate::graph::VertexSet::from_iter(g.n(), witness.iter().copied()));
    Rational::new(2 * sub.m() as i64, sub.n() as i64)
}
