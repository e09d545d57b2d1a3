//! Constructive weight splitting: given a certificate for `f` and an integer
//! split `f1 + f2 = f - 1`, partition the vertices into two parts so that
//! each part induces a weakly `f_i`-degenerate subgraph, with certificates.
//!
//! The construction walks the certificate once. A deleted vertex joins a part
//! where its share is still non-negative; a saving vertex joins a part where
//! its share strictly exceeds the target's. Before deciding a save, a share
//! that has fallen below -1 at the target is rebalanced: that part can never
//! admit the target anyway, so the other part absorbs the target's full
//! current weight (and the final lift repairs the bookkeeping monotonically).

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::weak::{lift_ops, verify_certificate, Certificate, Operation, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// `f1 + f2` must equal `f - 1` pointwise.
    BadSplit { vertex: u32 },
    InvalidCertificate(VerifyError),
    /// One of the produced sub-certificates failed to verify; this indicates
    /// a bug, not bad input.
    OutputInvalid(VerifyError),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::BadSplit { vertex } => {
                write!(f, "f1 + f2 != f - 1 at vertex {vertex}")
            }
            PartitionError::InvalidCertificate(e) => write!(f, "input certificate invalid: {e}"),
            PartitionError::OutputInvalid(e) => write!(f, "sub-certificate failed to verify: {e}"),
        }
    }
}

impl core::error::Error for PartitionError {}

/// Output of [`partition`]: the two parts with certificates for the induced
/// subgraphs. `to_orig` maps each sub-certificate's vertex ids back to the
/// host graph (sorted order of the part).
#[derive(Debug, Clone)]
pub struct PartitionOutcome {
    pub part1: VertexSet,
    pub cert1: Certificate,
    pub part2: VertexSet,
    pub cert2: Certificate,
    pub to_orig1: Vec<u32>,
    pub to_orig2: Vec<u32>,
}

pub fn partition(
    g: &Graph,
    cert: &Certificate,
    f1: &[i32],
    f2: &[i32],
) -> Result<PartitionOutcome, PartitionError> {
    verify_certificate(g, cert).map_err(PartitionError::InvalidCertificate)?;
    let n = g.n();
    assert_eq!(f1.len(), n);
    assert_eq!(f2.len(), n);
    for v in 0..n {
        if f1[v] + f2[v] != cert.initial_f[v] - 1 {
            return Err(PartitionError::BadSplit { vertex: v as u32 });
        }
    }

    // Forward pass: assign each removed vertex a side, tracking the current
    // weight vectors. Rebalanced shares shadow the inputs from then on.
    let mut f = cert.initial_f.clone();
    let mut s1 = f1.to_vec();
    let mut s2 = f2.to_vec();
    let mut remaining = VertexSet::full(n);
    let mut side = alloc::vec![0u8; n];
    for &op in &cert.ops {
        let u = op.removed();
        let chosen = match op {
            Operation::Delete { .. } => {
                if s1[u as usize] >= 0 {
                    1
                } else {
                    debug_assert!(s2[u as usize] >= 0, "f(u) - 1 >= -1 forces a non-negative share");
                    2
                }
            }
            Operation::DelSave { u, w } => {
                // A share below -1 at the save target can never admit the
                // target; hand the target's whole weight to the other part.
                if s1[w as usize] < -1 {
                    s1[w as usize] = -1;
                    s2[w as usize] = f[w as usize];
                } else if s2[w as usize] < -1 {
                    s2[w as usize] = -1;
                    s1[w as usize] = f[w as usize];
                }
                if s1[u as usize] > s1[w as usize] {
                    1
                } else {
                    debug_assert!(
                        s2[u as usize] > s2[w as usize],
                        "f(u) > f(w) forces a strict share excess on one side"
                    );
                    2
                }
            }
        };
        side[u as usize] = chosen;
        remaining.remove(u);
        let spared = op.save_target();
        for &v in g.neighbors(u) {
            if remaining.contains(v) && spared != Some(v) {
                f[v as usize] -= 1;
                if chosen == 1 {
                    s1[v as usize] -= 1;
                } else {
                    s2[v as usize] -= 1;
                }
            }
        }
    }

    // Second pass: restate each operation inside its part. A save whose
    // target landed in the other part degrades to a plain delete.
    let part1 = VertexSet::from_iter(n, (0..n as u32).filter(|&v| side[v as usize] == 1));
    let part2 = VertexSet::from_iter(n, (0..n as u32).filter(|&v| side[v as usize] == 2));
    let (g1, to_orig1) = g.induced(&part1);
    let (g2, to_orig2) = g.induced(&part2);
    let mut new_id = alloc::vec![u32::MAX; n];
    for (i, &v) in to_orig1.iter().enumerate() {
        new_id[v as usize] = i as u32;
    }
    for (i, &v) in to_orig2.iter().enumerate() {
        new_id[v as usize] = i as u32;
    }
    let mut ops1 = Vec::new();
    let mut ops2 = Vec::new();
    for &op in &cert.ops {
        let u = op.removed();
        let s = side[u as usize];
        let local = match op {
            Operation::DelSave { u, w } if side[w as usize] == s => Operation::DelSave {
                u: new_id[u as usize],
                w: new_id[w as usize],
            },
            _ => Operation::Delete { u: new_id[u as usize] },
        };
        if s == 1 {
            ops1.push(local);
        } else {
            ops2.push(local);
        }
    }

    // The walk certifies the parts for the (possibly rebalanced) shares;
    // rebalancing only ever lowered the share a part actually keeps, so the
    // monotone replay against the requested f1/f2 restrictions goes through.
    let rf1: Vec<i32> = to_orig1.iter().map(|&v| f1[v as usize]).collect();
    let rf2: Vec<i32> = to_orig2.iter().map(|&v| f2[v as usize]).collect();
    let cert1 = lift_ops(&g1, &rf1, &ops1, None).map_err(PartitionError::OutputInvalid)?;
    let cert2 = lift_ops(&g2, &rf2, &ops2, None).map_err(PartitionError::OutputInvalid)?;
    debug_assert_eq!(verify_certificate(&g1, &cert1), Ok(()));
    debug_assert_eq!(verify_certificate(&g2, &cert2), Ok(()));
    Ok(PartitionOutcome { part1, cert1, part2, cert2, to_orig1, to_orig2 })
}
