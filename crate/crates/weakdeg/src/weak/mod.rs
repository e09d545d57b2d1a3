//! The removal calculus: `Delete` and `DelSave` operations on weighted
//! graphs, removal certificates, and the replay verifier.
//!
//! A vertex weight function starts non-negative. `Delete(u)` removes `u` and
//! charges every neighbor one unit; `DelSave(u, w)` removes `u` but spares
//! the neighbor `w`, and is only legal while `u` carries strictly more weight
//! than `w`. A graph is weakly `f`-degenerate when some sequence of legal
//! operations removes every vertex, and a [`Certificate`] records such a
//! sequence so that anyone can replay it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};

mod greedy;
mod lift;
mod partition;
mod solver;

pub use greedy::{deg_minus_one_certificate, greedy_delete_certificate, DegMinusOne, GreedyError};
pub use lift::{lift_ops, monotone_lift, LiftError};
pub use partition::{partition, PartitionError};
pub use solver::{is_weakly_f_degenerate, weak_degeneracy_exact, SolverError, SolverLimits};

/// Constant weight function.
pub fn const_weights(n: usize, d: i32) -> Vec<i32> {
    vec![d; n]
}

/// The weight function `u -> deg(u) - 1`.
pub fn deg_minus_one_weights(g: &Graph) -> Vec<i32> {
    g.vertices().map(|u| g.degree(u) as i32 - 1).collect()
}

/// A single removal operation. `u` is the removed vertex; for `DelSave`,
/// `w` is the neighbor spared from the charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    Delete { u: u32 },
    DelSave { u: u32, w: u32 },
}

impl Operation {
    pub fn removed(&self) -> u32 {
        match *self {
            Operation::Delete { u } | Operation::DelSave { u, .. } => u,
        }
    }

    pub fn save_target(&self) -> Option<u32> {
        match *self {
            Operation::Delete { .. } => None,
            Operation::DelSave { w, .. } => Some(w),
        }
    }
}

/// A machine-checkable witness that a graph is weakly `f`-degenerate:
/// the initial weights plus an operation per vertex, in removal order.
/// When `safe_set` is present, the certificate additionally claims that every
/// vertex in it is removed by plain `Delete`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub initial_f: Vec<i32>,
    pub ops: Vec<Operation>,
    pub safe_set: Option<VertexSet>,
}

impl Certificate {
    pub fn n(&self) -> usize {
        self.initial_f.len()
    }
}

/// Weights over the not-yet-removed vertices of a fixed host graph.
///
/// Vertex ids stay stable as vertices are removed, so certificate operations
/// can be replayed without relabeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalState {
    remaining: VertexSet,
    weights: Vec<i32>,
}

impl RemovalState {
    pub fn new(g: &Graph, f: &[i32]) -> RemovalState {
        assert_eq!(f.len(), g.n(), "weight function must cover every vertex");
        RemovalState { remaining: VertexSet::full(g.n()), weights: f.to_vec() }
    }

    pub fn remaining(&self) -> &VertexSet {
        &self.remaining
    }

    pub fn weight(&self, v: u32) -> i32 {
        self.weights[v as usize]
    }

    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    /// First remaining vertex with negative weight, if any.
    pub fn first_negative(&self) -> Option<u32> {
        self.remaining.iter().find(|&v| self.weights[v as usize] < 0)
    }
}

/// Structural misuse of an operation, as opposed to an illegal-but-meaningful
/// application.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralError {
    RemovedVertexAbsent { u: u32 },
    SaveTargetAbsent { w: u32 },
    SaveTargetNotNeighbor { u: u32, w: u32 },
}

impl fmt::Display for StructuralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuralError::RemovedVertexAbsent { u } => write!(f, "removed vertex {u} is not present"),
            StructuralError::SaveTargetAbsent { w } => write!(f, "save target {w} is not present"),
            StructuralError::SaveTargetNotNeighbor { u, w } => {
                write!(f, "save target {w} is not a neighbor of {u}")
            }
        }
    }
}

impl core::error::Error for StructuralError {}

/// Why an operation application is illegal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Illegality {
    /// The resulting weight function would be negative at `vertex`.
    NegativeWeight { vertex: u32 },
    /// `DelSave(u, w)` requires the weight of `u` to strictly exceed that of `w`.
    SaveNotGreater { u: u32, w: u32 },
}

impl fmt::Display for Illegality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Illegality::NegativeWeight { vertex } => {
                write!(f, "weight of vertex {vertex} would become negative")
            }
            Illegality::SaveNotGreater { u, w } => {
                write!(f, "save requires weight({u}) > weight({w})")
            }
        }
    }
}

/// Result of a structurally valid operation application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApplyOutcome {
    Applied(RemovalState),
    Illegal(Illegality),
}

/// Applies one operation to a state, per the defining formulas.
///
/// Structural misuse (absent vertex, non-neighbor save target) is an error;
/// an application that would drive a weight negative, or a save without a
/// strict weight excess, is a legality verdict.
pub fn apply_operation(
    g: &Graph,
    state: &RemovalState,
    op: Operation,
) -> Result<ApplyOutcome, StructuralError> {
    let u = op.removed();
    if !state.remaining.contains(u) {
        return Err(StructuralError::RemovedVertexAbsent { u });
    }
    if let Operation::DelSave { u, w } = op {
        if !state.remaining.contains(w) {
            return Err(StructuralError::SaveTargetAbsent { w });
        }
        if !g.has_edge(u, w) {
            return Err(StructuralError::SaveTargetNotNeighbor { u, w });
        }
        if state.weights[u as usize] <= state.weights[w as usize] {
            return Ok(ApplyOutcome::Illegal(Illegality::SaveNotGreater { u, w }));
        }
    }
    let mut next = state.clone();
    next.remaining.remove(u);
    for &v in g.neighbors(u) {
        if next.remaining.contains(v) && op.save_target() != Some(v) {
            next.weights[v as usize] -= 1;
        }
    }
    match next.first_negative() {
        Some(vertex) => Ok(ApplyOutcome::Illegal(Illegality::NegativeWeight { vertex })),
        None => Ok(ApplyOutcome::Applied(next)),
    }
}

/// First failure found while replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    WrongWeightCount { expected: usize, got: usize },
    /// Some vertex is not removed exactly once.
    CoverageMismatch { vertex: u32 },
    NegativeInitialWeight { vertex: u32 },
    StepStructural { index: usize, source: StructuralError },
    StepIllegal { index: usize, source: Illegality },
    /// A safe-set vertex was removed by `DelSave`.
    UnsafeRemoval { index: usize, vertex: u32 },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::WrongWeightCount { expected, got } => {
                write!(f, "certificate has {got} weights for a graph on {expected} vertices")
            }
            VerifyError::CoverageMismatch { vertex } => {
                write!(f, "vertex {vertex} is not removed exactly once")
            }
            VerifyError::NegativeInitialWeight { vertex } => {
                write!(f, "initial weight of vertex {vertex} is negative")
            }
            VerifyError::StepStructural { index, source } => {
                write!(f, "step {index}: {source}")
            }
            VerifyError::StepIllegal { index, source } => {
                write!(f, "step {index}: illegal: {source}")
            }
            VerifyError::UnsafeRemoval { index, vertex } => {
                write!(f, "step {index}: safe vertex {vertex} removed by DelSave")
            }
        }
    }
}

impl core::error::Error for VerifyError {}

/// Replays a certificate against a graph and reports the first failure.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<(), VerifyError> {
    if cert.initial_f.len() != g.n() {
        return Err(VerifyError::WrongWeightCount { expected: g.n(), got: cert.initial_f.len() });
    }
    let mut seen = vec![false; g.n()];
    for op in &cert.ops {
        let u = op.removed();
        if (u as usize) >= g.n() || seen[u as usize] {
            return Err(VerifyError::CoverageMismatch { vertex: u });
        }
        seen[u as usize] = true;
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(VerifyError::CoverageMismatch { vertex: v as u32 });
    }
    let mut state = RemovalState::new(g, &cert.initial_f);
    if let Some(vertex) = state.first_negative() {
        return Err(VerifyError::NegativeInitialWeight { vertex });
    }
    for (index, &op) in cert.ops.iter().enumerate() {
        if let (Some(safe), Operation::DelSave { u, .. }) = (&cert.safe_set, op) {
            if safe.contains(u) {
                return Err(VerifyError::UnsafeRemoval { index, vertex: u });
            }
        }
        match apply_operation(g, &state, op) {
            Err(source) => return Err(VerifyError::StepStructural { index, source }),
            Ok(ApplyOutcome::Illegal(source)) => return Err(VerifyError::StepIllegal { index, source }),
            Ok(ApplyOutcome::Applied(next)) => state = next,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        // v=0 - w=1 - u=2
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn apply_delete_on_triangle() {
        let g = Graph::complete(3);
        let state = RemovalState::new(&g, &[2, 1, 1]);
        match apply_operation(&g, &state, Operation::Delete { u: 0 }).unwrap() {
            ApplyOutcome::Applied(next) => {
                assert_eq!(next.weight(1), 0);
                assert_eq!(next.weight(2), 0);
                assert_eq!(next.remaining().len(), 2);
            }
            other => panic!("expected legal application, got {other:?}"),
        }
    }

    #[test]
    fn apply_delsave_star_illegal() {
        // K_{1,3}: center 0 with weight 1, leaves weight 0. Saving one leaf
        // still charges the other two, which cannot pay.
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let state = RemovalState::new(&g, &[1, 0, 0, 0]);
        let out = apply_operation(&g, &state, Operation::DelSave { u: 0, w: 1 }).unwrap();
        assert!(matches!(out, ApplyOutcome::Illegal(Illegality::NegativeWeight { .. })));
    }

    #[test]
    fn apply_delsave_edge_legal() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let state = RemovalState::new(&g, &[1, 0]);
        match apply_operation(&g, &state, Operation::DelSave { u: 0, w: 1 }).unwrap() {
            ApplyOutcome::Applied(next) => {
                assert_eq!(next.weight(1), 0);
                assert_eq!(next.remaining().iter().collect::<Vec<_>>(), vec![1]);
            }
            other => panic!("expected legal application, got {other:?}"),
        }
    }

    #[test]
    fn apply_structural_errors() {
        let g = p3();
        let state = RemovalState::new(&g, &[1, 1, 1]);
        // 0 and 2 are not adjacent.
        assert_eq!(
            apply_operation(&g, &state, Operation::DelSave { u: 0, w: 2 }),
            Err(StructuralError::SaveTargetNotNeighbor { u: 0, w: 2 })
        );
        let after = match apply_operation(&g, &state, Operation::Delete { u: 0 }).unwrap() {
            ApplyOutcome::Applied(s) => s,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(
            apply_operation(&g, &after, Operation::Delete { u: 0 }),
            Err(StructuralError::RemovedVertexAbsent { u: 0 })
        );
    }

    #[test]
    fn verify_p3_certificate() {
        // f == 1 on the path 0-1-2: Delete(0) drops w(1) to 0, then
        // DelSave(2, 1) is legal since 1 > 0, and Delete(1) finishes.
        let g = p3();
        let cert = Certificate {
            initial_f: vec![1, 1, 1],
            ops: vec![
                Operation::Delete { u: 0 },
                Operation::DelSave { u: 2, w: 1 },
                Operation::Delete { u: 1 },
            ],
            safe_set: None,
        };
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
    }

    #[test]
    fn verify_reports_first_offense() {
        let g = Graph::complete(3);
        let cert = Certificate {
            initial_f: vec![1, 1, 1],
            ops: vec![
                Operation::Delete { u: 0 },
                Operation::Delete { u: 1 },
                Operation::Delete { u: 2 },
            ],
            safe_set: None,
        };
        assert_eq!(
            verify_certificate(&g, &cert),
            Err(VerifyError::StepIllegal {
                index: 1,
                source: Illegality::NegativeWeight { vertex: 2 }
            })
        );
    }

    #[test]
    fn verify_safety_failure() {
        let g = p3();
        let cert = Certificate {
            initial_f: vec![1, 1, 1],
            ops: vec![
                Operation::Delete { u: 0 },
                Operation::DelSave { u: 2, w: 1 },
                Operation::Delete { u: 1 },
            ],
            safe_set: Some(VertexSet::from_iter(3, [2])),
        };
        assert_eq!(
            verify_certificate(&g, &cert),
            Err(VerifyError::UnsafeRemoval { index: 1, vertex: 2 })
        );
    }

    #[test]
    fn verify_coverage_and_weights() {
        let g = p3();
        let cert = Certificate {
            initial_f: vec![1, 1],
            ops: vec![],
            safe_set: None,
        };
        assert!(matches!(verify_certificate(&g, &cert), Err(VerifyError::WrongWeightCount { .. })));
        let cert = Certificate {
            initial_f: vec![1, 1, 1],
            ops: vec![Operation::Delete { u: 0 }, Operation::Delete { u: 0 }],
            safe_set: None,
        };
        assert!(matches!(verify_certificate(&g, &cert), Err(VerifyError::CoverageMismatch { .. })));
    }

    #[test]
    fn verify_empty_graph() {
        let g = Graph::empty(0);
        let cert = Certificate { initial_f: vec![], ops: vec![], safe_set: None };
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
    }
}
