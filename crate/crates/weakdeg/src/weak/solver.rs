//! Exact search for weak `f`-degeneracy on small graphs.
//!
//! Depth-first over legal operations with memoization on the pair
//! (remaining vertex set, weight vector). Weights are clamped to
//! `min(f(u), deg-within-remaining(u))`: excess weight can never matter.
//! Branch order is deterministic: removable vertices ascending by current
//! weight (ties by id), saves tried before the plain delete, save targets
//! ascending by id. A state that is already removable by deletes alone is
//! accepted immediately.
//!
//! Raw search output is replayed against the unclamped weights through
//! [`lift_ops`], which substitutes `Delete` where clamping manufactured a
//! strict excess the true weights do not have.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::graph::{Graph, VertexSet};
use crate::weak::{lift_ops, verify_certificate, Certificate, Operation};

/// Hard cap of the bitmask engine.
pub const ENGINE_MAX_VERTICES: usize = 16;

/// Resource guards for the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    /// Largest accepted vertex count (at most [`ENGINE_MAX_VERTICES`]).
    pub max_vertices: usize,
    /// Cap on visited search states.
    pub max_states: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits { max_vertices: 12, max_states: 200_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverError {
    TooManyVertices { n: usize, limit: usize },
    StateBudgetExceeded { limit: usize },
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::TooManyVertices { n, limit } => {
                write!(f, "graph has {n} vertices, exact search capped at {limit}")
            }
            SolverError::StateBudgetExceeded { limit } => {
                write!(f, "exact search exceeded the {limit}-state budget")
            }
        }
    }
}

impl core::error::Error for SolverError {}

struct Engine {
    adj: Vec<u16>,
    safe: u16,
    memo: HashSet<u128>,
    states: usize,
    max_states: usize,
}

impl Engine {
    fn key(mask: u16, w: &[i8; 16]) -> u128 {
        // Stale weights of removed vertices must not leak into the key.
        let mut k = mask as u128;
        for i in 0..16 {
            if mask >> i & 1 == 1 {
                debug_assert!((0..16).contains(&(w[i] as i32)));
                k |= ((w[i] as u128) & 0xf) << (16 + 4 * i);
            }
        }
        k
    }

    fn clamp(&self, mask: u16, w: &mut [i8; 16]) {
        for v in 0..16 {
            if mask >> v & 1 == 1 {
                let deg = (self.adj[v] & mask).count_ones() as i8;
                if w[v] > deg {
                    w[v] = deg;
                }
            }
        }
    }

    /// Delete-only completion: repeatedly peel a vertex whose remaining
    /// degree fits inside its weight; the removal order is the reverse.
    fn delete_only(&self, mask: u16, w: &[i8; 16]) -> Option<Vec<Operation>> {
        let mut cur = mask;
        let mut rev = Vec::new();
        while cur != 0 {
            let mut picked = None;
            for v in 0..16u16 {
                if cur >> v & 1 == 1 {
                    let deg = (self.adj[v as usize] & cur).count_ones() as i8;
                    if deg <= w[v as usize] {
                        picked = Some(v);
                        break;
                    }
                }
            }
            let v = picked?;
            cur &= !(1 << v);
            rev.push(Operation::Delete { u: v as u32 });
        }
        rev.reverse();
        Some(rev)
    }

    fn search(&mut self, mask: u16, w: &[i8; 16], ops: &mut Vec<Operation>) -> Result<bool, SolverError> {
        if mask == 0 {
            return Ok(true);
        }
        self.states += 1;
        if self.states > self.max_states {
            return Err(SolverError::StateBudgetExceeded { limit: self.max_states });
        }
        let key = Self::key(mask, w);
        if self.memo.contains(&key) {
            return Ok(false);
        }
        if let Some(tail) = self.delete_only(mask, w) {
            ops.extend(tail);
            return Ok(true);
        }

        let mut verts: Vec<u16> = (0..16).filter(|&v| mask >> v & 1 == 1).collect();
        verts.sort_unstable_by_key(|&v| (w[v as usize], v));

        for &u in &verts {
            let nbs = self.adj[u as usize] & mask;
            // Weight of neighbors other than the spared one must stay >= 1.
            let mut deletable = true;
            let mut min_nb: Option<u16> = None;
            {
                let mut bits = nbs;
                while bits != 0 {
                    let v = bits.trailing_zeros() as u16;
                    bits &= bits - 1;
                    if w[v as usize] < 1 {
                        deletable = false;
                        if min_nb.is_some() {
                            // Two drained neighbors: no single save can help.
                            min_nb = Some(u16::MAX);
                        } else {
                            min_nb = Some(v);
                        }
                    }
                }
            }
            if self.safe >> u & 1 == 0 {
                let mut bits = nbs;
                while bits != 0 {
                    let x = bits.trailing_zeros() as u16;
                    bits &= bits - 1;
                    if w[u as usize] <= w[x as usize] {
                        continue;
                    }
                    // All neighbors but x must afford the charge.
                    if let Some(mn) = min_nb {
                        if mn != x {
                            continue;
                        }
                    }
                    let mut w2 = *w;
                    let mut b2 = nbs & !(1 << x);
                    while b2 != 0 {
                        let v = b2.trailing_zeros() as usize;
                        b2 &= b2 - 1;
                        w2[v] -= 1;
                    }
                    let next = mask & !(1 << u);
                    self.clamp(next, &mut w2);
                    ops.push(Operation::DelSave { u: u as u32, w: x as u32 });
                    if self.search(next, &w2, ops)? {
                        return Ok(true);
                    }
                    ops.pop();
                }
            }
            if deletable {
                let mut w2 = *w;
                let mut b2 = nbs;
                while b2 != 0 {
                    let v = b2.trailing_zeros() as usize;
                    b2 &= b2 - 1;
                    w2[v] -= 1;
                }
                let next = mask & !(1 << u);
                self.clamp(next, &mut w2);
                ops.push(Operation::Delete { u: u as u32 });
                if self.search(next, &w2, ops)? {
                    return Ok(true);
                }
                ops.pop();
            }
        }
        self.memo.insert(key);
        Ok(false)
    }
}

/// Decides whether `g` is weakly `f`-degenerate (with every vertex of `safe`,
/// if given, removed by plain `Delete`), returning a verified certificate on
/// success and a definitive negative otherwise.
pub fn is_weakly_f_degenerate(
    g: &Graph,
    f: &[i32],
    safe: Option<&VertexSet>,
    limits: &SolverLimits,
) -> Result<Option<Certificate>, SolverError> {
    assert_eq!(f.len(), g.n(), "weight function must cover every vertex");
    let cap = limits.max_vertices.min(ENGINE_MAX_VERTICES);
    if g.n() > cap {
        return Err(SolverError::TooManyVertices { n: g.n(), limit: cap });
    }
    if f.iter().any(|&x| x < 0) {
        // A present vertex with negative weight makes every state invalid.
        return Ok(None);
    }

    let mut adj = vec![0u16; 16];
    for u in g.vertices() {
        for &v in g.neighbors(u) {
            adj[u as usize] |= 1 << v;
        }
    }
    let mut safe_mask = 0u16;
    if let Some(s) = safe {
        for v in s.iter() {
            safe_mask |= 1 << v;
        }
    }
    let mut engine = Engine {
        adj,
        safe: safe_mask,
        memo: HashSet::new(),
        states: 0,
        max_states: limits.max_states,
    };
    let mask: u16 = if g.n() == 16 { u16::MAX } else { ((1u32 << g.n()) - 1) as u16 };
    let mut w = [0i8; 16];
    for v in 0..g.n() {
        w[v] = f[v].min(15) as i8;
    }
    engine.clamp(mask, &mut w);
    let mut ops = Vec::with_capacity(g.n());
    if !engine.search(mask, &w, &mut ops)? {
        return Ok(None);
    }
    // Clamping may have manufactured strict excesses; replay under the true
    // weights with Delete substitution, then re-verify.
    let cert = lift_ops(g, f, &ops, safe.cloned())
        .expect("search output must lift to the requested weights");
    debug_assert_eq!(verify_certificate(g, &cert), Ok(()));
    Ok(Some(cert))
}

/// Weak degeneracy: the least `d` admitting a constant-`d` certificate,
/// found by increasing `d` from 0. Degeneracy is an upper bound, so the
/// search always terminates.
pub fn weak_degeneracy_exact(
    g: &Graph,
    limits: &SolverLimits,
) -> Result<(usize, Certificate), SolverError> {
    for d in 0.. {
        let f = vec![d as i32; g.n()];
        if let Some(cert) = is_weakly_f_degenerate(g, &f, None, limits)? {
            return Ok((d, cert));
        }
    }
    unreachable!("every graph is d(G)-degenerate")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::const_weights;

    fn wd(g: &Graph) -> usize {
        weak_degeneracy_exact(g, &SolverLimits::default()).unwrap().0
    }

    #[test]
    fn small_weak_degeneracies() {
        assert_eq!(wd(&Graph::empty(1)), 0);
        assert_eq!(wd(&Graph::empty(0)), 0);
        assert_eq!(wd(&Graph::complete(4)), 3);
        assert_eq!(wd(&Graph::cycle(5)), 2);
        assert_eq!(wd(&Graph::cycle(4)), 2);
        assert_eq!(wd(&Graph::complete(3)), 2);
    }

    #[test]
    fn c4_not_weakly_1_degenerate() {
        let g = Graph::cycle(4);
        let res = is_weakly_f_degenerate(&g, &const_weights(4, 1), None, &SolverLimits::default());
        assert_eq!(res.unwrap(), None);
    }

    #[test]
    fn c4_weakly_2_degenerate_delete_only() {
        let g = Graph::cycle(4);
        let cert = is_weakly_f_degenerate(&g, &const_weights(4, 2), None, &SolverLimits::default())
            .unwrap()
            .unwrap();
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
        assert!(cert.ops.iter().all(|op| matches!(op, Operation::Delete { .. })));
    }

    #[test]
    fn k3_not_weakly_1_degenerate() {
        let g = Graph::complete(3);
        let res = is_weakly_f_degenerate(&g, &const_weights(3, 1), None, &SolverLimits::default());
        assert_eq!(res.unwrap(), None);
    }

    #[test]
    fn negative_weight_is_definitive_no() {
        let g = Graph::empty(2);
        let res = is_weakly_f_degenerate(&g, &[0, -1], None, &SolverLimits::default());
        assert_eq!(res.unwrap(), None);
    }

    #[test]
    fn safe_set_forces_deletes() {
        // The octahedron is 4-regular: weakly 3-degenerate (Brooks-type, not
        // K5) but not 3-degenerate. Making every vertex safe rules saves out,
        // so the constrained answer must flip to negative.
        let g = Graph::new(
            6,
            &[
                (0, 2), (0, 3), (0, 4), (0, 5),
                (1, 2), (1, 3), (1, 4), (1, 5),
                (2, 4), (2, 5), (3, 4), (3, 5),
            ],
        )
        .unwrap();
        let all = VertexSet::full(6);
        let f = const_weights(6, 3);
        let unconstrained =
            is_weakly_f_degenerate(&g, &f, None, &SolverLimits::default()).unwrap();
        let cert = unconstrained.expect("octahedron is weakly 3-degenerate");
        assert_eq!(crate::weak::verify_certificate(&g, &cert), Ok(()));
        assert!(cert.ops.iter().any(|op| op.save_target().is_some()));
        let constrained =
            is_weakly_f_degenerate(&g, &f, Some(&all), &SolverLimits::default()).unwrap();
        assert!(constrained.is_none(), "octahedron is not 3-degenerate");
    }

    #[test]
    fn vertex_guard_fires() {
        let g = Graph::empty(20);
        let res = weak_degeneracy_exact(&g, &SolverLimits::default());
        assert!(matches!(res, Err(SolverError::TooManyVertices { .. })));
    }

    #[test]
    fn petersen_weak_degeneracy() {
        // Petersen is 3-regular, not K4, so by the Brooks-type bound its weak
        // degeneracy is exactly 2 (the triangle-free lower bound rules out 1).
        assert_eq!(wd(&Graph::petersen()), 2);
    }
}
