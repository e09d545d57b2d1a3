//! Delete-only certificates from distance layering, and the constructive
//! characterization of weakly (deg-1)-degenerate graphs.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{blocks, Graph, VertexSet};
use crate::structure::block_kind;
use crate::weak::{
    deg_minus_one_weights, verify_certificate, Certificate, Operation, VerifyError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyError {
    Disconnected,
    /// `f(u) >= deg(u) - 1` fails at `vertex`.
    WeightBelowDegMinusOne { vertex: u32 },
    /// The anchor needs `f(x) >= deg(x)`.
    AnchorTooLight { vertex: u32 },
    OutputInvalid(VerifyError),
}

impl fmt::Display for GreedyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GreedyError::Disconnected => write!(f, "graph must be connected"),
            GreedyError::WeightBelowDegMinusOne { vertex } => {
                write!(f, "f({vertex}) < deg({vertex}) - 1")
            }
            GreedyError::AnchorTooLight { vertex } => {
                write!(f, "anchor {vertex} needs f >= its degree")
            }
            GreedyError::OutputInvalid(e) => write!(f, "construction failed to verify: {e}"),
        }
    }
}

impl core::error::Error for GreedyError {}

/// Delete-only certificate for a connected graph with `f >= deg - 1`
/// everywhere and `f(x) >= deg(x)` at the anchor: remove vertices in order of
/// decreasing distance to `x` (ties by id), so everyone but `x` keeps a
/// neighbor behind them.
pub fn greedy_delete_certificate(g: &Graph, f: &[i32], x: u32) -> Result<Certificate, GreedyError> {
    assert_eq!(f.len(), g.n());
    if !g.is_connected() {
        return Err(GreedyError::Disconnected);
    }
    for u in g.vertices() {
        if f[u as usize] < g.degree(u) as i32 - 1 {
            return Err(GreedyError::WeightBelowDegMinusOne { vertex: u });
        }
    }
    if f[x as usize] < g.degree(x) as i32 {
        return Err(GreedyError::AnchorTooLight { vertex: x });
    }
    let ops = deletes_by_decreasing_distance(g, &VertexSet::full(g.n()), &[x]);
    let cert = Certificate { initial_f: f.to_vec(), ops, safe_set: None };
    verify_certificate(g, &cert).map_err(GreedyError::OutputInvalid)?;
    Ok(cert)
}

/// Delete operations for `within`, ordered by decreasing BFS distance to
/// `sources` (ties by vertex id). Distances are measured inside `within`.
fn deletes_by_decreasing_distance(g: &Graph, within: &VertexSet, sources: &[u32]) -> Vec<Operation> {
    let (sub, to_orig) = g.induced(within);
    let local_sources: Vec<u32> = to_orig
        .iter()
        .enumerate()
        .filter(|(_, v)| sources.contains(v))
        .map(|(i, _)| i as u32)
        .collect();
    let dist = sub.bfs_distances_multi(&local_sources);
    let mut order: Vec<u32> = (0..sub.n() as u32).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(dist[v as usize]), to_orig[v as usize]));
    order.into_iter().map(|v| Operation::Delete { u: to_orig[v as usize] }).collect()
}

/// Outcome of the weakly (deg-1)-degenerate construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegMinusOne {
    Certificate(Certificate),
    /// Every block is a clique or a cycle, so no certificate exists.
    GdpTree,
}

/// Builds a verified certificate for `f = deg - 1` on a connected graph, or
/// reports that the graph is a GDP-tree (in which case none exists).
///
/// The construction needs an induced subgraph `G[A]` that is connected,
/// non-regular and free of cut vertices: delete everything outside `A` by
/// decreasing distance to `A`, spend one save inside `A` from a heavier
/// vertex onto a lighter neighbor, and finish with deletes anchored at the
/// saved vertex.
pub fn deg_minus_one_certificate(g: &Graph) -> Result<DegMinusOne, GreedyError> {
    if !g.is_connected() {
        return Err(GreedyError::Disconnected);
    }
    if g.n() == 0 {
        return Ok(DegMinusOne::GdpTree);
    }
    let a = match find_irregular_cutfree_set(g) {
        Some(a) => a,
        None => return Ok(DegMinusOne::GdpTree),
    };

    let f = deg_minus_one_weights(g);
    let mut ops = Vec::with_capacity(g.n());

    // Everything outside A goes first, farthest from A first; each such
    // vertex keeps a neighbor on its A-ward side, so deg - 1 pays for it.
    let a_boundary: Vec<u32> = g
        .vertices()
        .filter(|&v| !a.contains(v) && g.neighbors(v).iter().any(|&x| a.contains(x)))
        .collect();
    let outside = VertexSet::full(g.n()).difference(&a);
    if !outside.is_empty() {
        ops.extend(deletes_by_decreasing_distance(g, &outside, &a_boundary));
    }

    // Inside A: pick adjacent x, y with deg_A(x) < deg_A(y), save x while
    // removing y, then delete by decreasing distance to x.
    let (sub, to_orig) = g.induced(&a);
    let mut pick = None;
    'outer: for u in sub.vertices() {
        for &v in sub.neighbors(u) {
            if sub.degree(u) != sub.degree(v) {
                let (x, y) = if sub.degree(u) < sub.degree(v) { (u, v) } else { (v, u) };
                pick = Some((x, y));
                break 'outer;
            }
        }
    }
    let (x, y) = pick.expect("A is connected and non-regular");
    ops.push(Operation::DelSave { u: to_orig[y as usize], w: to_orig[x as usize] });
    let mut rest = a.clone();
    rest.remove(to_orig[y as usize]);
    ops.extend(deletes_by_decreasing_distance(g, &rest, &[to_orig[x as usize]]));

    let cert = Certificate { initial_f: f, ops, safe_set: None };
    verify_certificate(g, &cert).map_err(GreedyError::OutputInvalid)?;
    Ok(DegMinusOne::Certificate(cert))
}

/// Finds a vertex set inducing a connected, non-regular subgraph without cut
/// vertices, or `None` when the graph is a GDP-tree.
///
/// A non-regular block works directly. Otherwise every block is regular; if
/// all of them are cliques or cycles the graph is a GDP-tree. A regular block
/// `B` that is neither is 2-connected with degree >= 3, hence not critically
/// 2-connected (those have a degree-2 vertex), so some `B - x` is 2-connected
/// again; `B` has no universal vertex, so `B - x` is also non-regular.
fn find_irregular_cutfree_set(g: &Graph) -> Option<VertexSet> {
    let (bl, _) = blocks(g);
    for b in &bl {
        let (sub, _) = g.induced(b);
        if !sub.is_regular() {
            return Some(b.clone());
        }
    }
    let stubborn = bl.iter().find(|b| {
        let (sub, _) = g.induced(b);
        block_kind(&sub).is_none()
    })?;
    let (sub, to_orig) = g.induced(stubborn);
    for x in sub.vertices() {
        let mut rest = VertexSet::full(sub.n());
        rest.remove(x);
        let (without, _) = sub.induced(&rest);
        let (_, cuts) = blocks(&without);
        if cuts.is_empty() && without.is_connected() {
            debug_assert!(!without.is_regular(), "regular non-clique blocks have no universal vertex");
            let mut set = stubborn.clone();
            set.remove(to_orig[x as usize]);
            return Some(set);
        }
    }
    unreachable!("a regular 2-connected non-cycle block admits a vertex whose removal keeps it 2-connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::const_weights;
    use alloc::vec;

    #[test]
    fn greedy_on_c5() {
        let g = Graph::cycle(5);
        for x in 0..5 {
            let cert = greedy_delete_certificate(&g, &const_weights(5, 2), x).unwrap();
            assert_eq!(verify_certificate(&g, &cert), Ok(()));
            assert!(cert.ops.iter().all(|op| op.save_target().is_none()));
        }
    }

    #[test]
    fn greedy_on_star_with_heavy_leaf() {
        // K_{1,4}: center 0, leaves 1..4; f = deg - 1 except the anchor leaf.
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let f = vec![3, 1, 0, 0, 0];
        let cert = greedy_delete_certificate(&g, &f, 1).unwrap();
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
    }

    #[test]
    fn greedy_rejects_light_anchor() {
        let g = Graph::complete(3);
        let res = greedy_delete_certificate(&g, &const_weights(3, 1), 0);
        assert_eq!(res, Err(GreedyError::AnchorTooLight { vertex: 0 }));
    }

    #[test]
    fn deg_minus_one_on_subdivided_k4() {
        // K4 with the edge (2,3) subdivided through vertex 4: 2-connected and
        // non-regular, so the certificate route applies.
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        match deg_minus_one_certificate(&g).unwrap() {
            DegMinusOne::Certificate(cert) => {
                assert_eq!(cert.initial_f, deg_minus_one_weights(&g));
                assert_eq!(verify_certificate(&g, &cert), Ok(()));
            }
            DegMinusOne::GdpTree => panic!("subdivided K4 is not a GDP-tree"),
        }
    }

    #[test]
    fn deg_minus_one_gdp_verdicts() {
        assert_eq!(deg_minus_one_certificate(&Graph::cycle(6)).unwrap(), DegMinusOne::GdpTree);
        // Bowtie: two triangles at a cut vertex.
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(deg_minus_one_certificate(&bowtie).unwrap(), DegMinusOne::GdpTree);
        assert_eq!(deg_minus_one_certificate(&Graph::complete(4)).unwrap(), DegMinusOne::GdpTree);
    }

    #[test]
    fn deg_minus_one_on_regular_non_gdp_block() {
        // Petersen: one regular 2-connected block, neither clique nor cycle;
        // exercises the vertex-removal fallback.
        let g = Graph::petersen();
        match deg_minus_one_certificate(&g).unwrap() {
            DegMinusOne::Certificate(cert) => assert_eq!(verify_certificate(&g, &cert), Ok(())),
            DegMinusOne::GdpTree => panic!("petersen is not a GDP-tree"),
        }
    }

    #[test]
    fn deg_minus_one_rejects_disconnected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(deg_minus_one_certificate(&g), Err(GreedyError::Disconnected));
    }
}
