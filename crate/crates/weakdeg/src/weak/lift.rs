//! Monotone lifting of operation sequences.
//!
//! A removal sequence that is legal for weights `f` stays usable for any
//! pointwise-larger weights: whenever a `DelSave(u, w)` loses its strict
//! excess under the larger weights, the target's weight must have grown, so a
//! plain `Delete(u)` is affordable instead. [`lift_ops`] performs that replay
//! with substitution and is also what turns raw solver output (searched under
//! clamped weights) and supergraph-built sequences into certificates for the
//! weights actually requested.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::weak::{
    apply_operation, verify_certificate, ApplyOutcome, Certificate, Operation, RemovalState,
    VerifyError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftError {
    /// `gfun` must dominate the certificate's weights pointwise.
    NotPointwiseAbove { vertex: u32 },
    /// The input certificate does not verify.
    InvalidInput(VerifyError),
    /// The lifted sequence failed to replay (indicates a caller bug: the ops
    /// were not legal for any weights below the target).
    ReplayFailed(VerifyError),
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::NotPointwiseAbove { vertex } => {
                write!(f, "target weights drop below certificate weights at vertex {vertex}")
            }
            LiftError::InvalidInput(e) => write!(f, "input certificate invalid: {e}"),
            LiftError::ReplayFailed(e) => write!(f, "lifted replay failed: {e}"),
        }
    }
}

impl core::error::Error for LiftError {}

/// Replays `ops` against `(g, f)`, substituting `Delete` for any `DelSave`
/// that has lost its strict weight excess or its target (the sequence may
/// come from a supergraph whose extra edges carried the save), and returns
/// the result as a verified certificate. `safe` is carried through unchanged
/// (substitution never turns a `Delete` into a save, so safety is
/// preserved).
pub fn lift_ops(
    g: &Graph,
    f: &[i32],
    ops: &[Operation],
    safe: Option<crate::graph::VertexSet>,
) -> Result<Certificate, VerifyError> {
    let mut state = RemovalState::new(g, f);
    if let Some(vertex) = state.first_negative() {
        return Err(VerifyError::NegativeInitialWeight { vertex });
    }
    let mut out = Vec::with_capacity(ops.len());
    for (index, &op) in ops.iter().enumerate() {
        let attempt = match op {
            Operation::DelSave { u, w }
                if !(state.remaining().contains(w)
                    && g.has_edge(u, w)
                    && state.weight(u) > state.weight(w)) =>
            {
                Operation::Delete { u }
            }
            other => other,
        };
        match apply_operation(g, &state, attempt) {
            Ok(ApplyOutcome::Applied(next)) => {
                state = next;
                out.push(attempt);
            }
            Ok(ApplyOutcome::Illegal(source)) => {
                return Err(VerifyError::StepIllegal { index, source })
            }
            Err(source) => return Err(VerifyError::StepStructural { index, source }),
        }
    }
    let cert = Certificate { initial_f: f.to_vec(), ops: out, safe_set: safe };
    debug_assert_eq!(verify_certificate(g, &cert), Ok(()));
    Ok(cert)
}

/// Lifts a verified certificate for `f` to one for `gfun >= f` (pointwise),
/// keeping the removal order and substituting `Delete` for saves exactly
/// where legality under `gfun` fails.
pub fn monotone_lift(g: &Graph, cert: &Certificate, gfun: &[i32]) -> Result<Certificate, LiftError> {
    verify_certificate(g, cert).map_err(LiftError::InvalidInput)?;
    if gfun.len() != cert.initial_f.len() {
        return Err(LiftError::InvalidInput(VerifyError::WrongWeightCount {
            expected: cert.initial_f.len(),
            got: gfun.len(),
        }));
    }
    for (v, (&lo, &hi)) in cert.initial_f.iter().zip(gfun).enumerate() {
        if hi < lo {
            return Err(LiftError::NotPointwiseAbove { vertex: v as u32 });
        }
    }
    lift_ops(g, gfun, &cert.ops, cert.safe_set.clone()).map_err(LiftError::ReplayFailed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lift_p3_to_larger_weights() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cert = Certificate {
            initial_f: vec![1, 1, 1],
            ops: vec![
                Operation::Delete { u: 0 },
                Operation::DelSave { u: 2, w: 1 },
                Operation::Delete { u: 1 },
            ],
            safe_set: None,
        };
        let lifted = monotone_lift(&g, &cert, &[2, 2, 2]).unwrap();
        assert_eq!(verify_certificate(&g, &lifted), Ok(()));
        // Under f == 2, Delete(0) leaves w(1) = 1 and w(2) = 2 > 1, so the
        // save survives the lift here; order is unchanged either way.
        assert_eq!(
            lifted.ops.iter().map(Operation::removed).collect::<Vec<_>>(),
            vec![0, 2, 1]
        );
    }

    #[test]
    fn lift_substitutes_when_excess_vanishes() {
        // Edge 0-1 with f = (1, 0): DelSave(0, 1) is legal. Raising f(1) to 1
        // kills the strict excess, so the lift must fall back to Delete.
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let cert = Certificate {
            initial_f: vec![1, 0],
            ops: vec![Operation::DelSave { u: 0, w: 1 }, Operation::Delete { u: 1 }],
            safe_set: None,
        };
        let lifted = monotone_lift(&g, &cert, &[1, 1]).unwrap();
        assert_eq!(lifted.ops[0], Operation::Delete { u: 0 });
        assert_eq!(verify_certificate(&g, &lifted), Ok(()));
    }

    #[test]
    fn lift_identity_when_equal() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cert = Certificate {
            initial_f: vec![1, 1, 1],
            ops: vec![
                Operation::Delete { u: 0 },
                Operation::DelSave { u: 2, w: 1 },
                Operation::Delete { u: 1 },
            ],
            safe_set: None,
        };
        let lifted = monotone_lift(&g, &cert, &[1, 1, 1]).unwrap();
        assert_eq!(lifted, cert);
    }

    #[test]
    fn lift_rejects_smaller_target() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let cert = Certificate {
            initial_f: vec![1, 1],
            ops: vec![Operation::Delete { u: 0 }, Operation::Delete { u: 1 }],
            safe_set: None,
        };
        assert_eq!(
            monotone_lift(&g, &cert, &[1, 0]),
            Err(LiftError::NotPointwiseAbove { vertex: 1 })
        );
    }
}
