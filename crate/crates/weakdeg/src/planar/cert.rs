//! Safe weak-degeneracy certificates for plane graphs.
//!
//! The recursion mirrors the inductive construction: a chord of the outer
//! cycle splits the instance in two, handled in sequence; with no chord, the
//! last outer vertex is pulled out, the recursion runs on the rest, and the
//! deletes of its interior-path neighbors are upgraded to saves aimed at it.
//! Upgrades are decided against the actual replay weights, threaded through
//! the recursion, so every emitted operation is legal as built; any failure
//! of the construction's counting surfaces as an error instead of being
//! patched. The top-level theorem route triangulates, deletes one face
//! edge's endpoints, runs the recursion, and restates everything on the
//! original graph at constant weight 4.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use crate::graph::{Graph, VertexSet};
use crate::planar::triangulate::chord_faces;
use crate::planar::{
    trace_faces, validate_embedding, EmbeddingViolation, PlanarInstance, RotationSystem,
    TriangulateError,
};
use crate::weak::{lift_ops, verify_certificate, Certificate, Operation, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarCertError {
    Embedding(EmbeddingViolation),
    Triangulate(TriangulateError),
    /// `v1 v2` must be an edge of the outer cycle.
    NotOuterEdge { v1: u32, v2: u32 },
    InnerFaceNotTriangle { face: Vec<u32> },
    /// A structural invariant of the construction failed; surfaced, never
    /// patched.
    ProofInvariant(&'static str),
    Verify(VerifyError),
}

impl fmt::Display for PlanarCertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarCertError::Embedding(e) => write!(f, "{e}"),
            PlanarCertError::Triangulate(e) => write!(f, "{e}"),
            PlanarCertError::NotOuterEdge { v1, v2 } => {
                write!(f, "({v1},{v2}) is not an outer-cycle edge")
            }
            PlanarCertError::InnerFaceNotTriangle { face } => {
                write!(f, "inner face {face:?} is not a triangle")
            }
            PlanarCertError::ProofInvariant(what) => write!(f, "construction invariant: {what}"),
            PlanarCertError::Verify(e) => write!(f, "emitted certificate failed: {e}"),
        }
    }
}

impl core::error::Error for PlanarCertError {}

/// Working instance: local ids, outer cycle starting with the two protected
/// vertices (which the recursion never removes or charges).
struct Inst {
    g: Graph,
    rot: Vec<Vec<u32>>,
    outer: Vec<u32>,
}

impl Inst {
    fn protected(&self, v: u32) -> bool {
        v == self.outer[0] || v == self.outer[1]
    }

    /// Charges the neighbors of `u` (minus a spared one and the protected
    /// pair) and drops `u`.
    fn apply(&self, w: &mut [i32], alive: &mut [bool], op: Operation) {
        let u = op.removed();
        alive[u as usize] = false;
        for &x in self.g.neighbors(u) {
            if alive[x as usize] && !self.protected(x) && op.save_target() != Some(x) {
                w[x as usize] -= 1;
            }
        }
    }

    /// Sub-instance induced on `verts` with outer cycle `outer` (parent
    /// ids); returns it with the local-to-parent map.
    fn restrict(&self, verts: &VertexSet, outer: &[u32]) -> (Inst, Vec<u32>) {
        let (g, to_parent) = self.g.induced(verts);
        let mut local = vec![u32::MAX; self.g.n()];
        for (i, &p) in to_parent.iter().enumerate() {
            local[p as usize] = i as u32;
        }
        let rot = to_parent
            .iter()
            .map(|&p| {
                self.rot[p as usize]
                    .iter()
                    .filter(|&&x| verts.contains(x))
                    .map(|&x| local[x as usize])
                    .collect()
            })
            .collect();
        let outer = outer.iter().map(|&p| local[p as usize]).collect();
        (Inst { g, rot, outer }, to_parent)
    }
}

fn remap(ops: Vec<Operation>, to_parent: &[u32]) -> Vec<Operation> {
    ops.into_iter()
        .map(|op| match op {
            Operation::Delete { u } => Operation::Delete { u: to_parent[u as usize] },
            Operation::DelSave { u, w } => {
                Operation::DelSave { u: to_parent[u as usize], w: to_parent[w as usize] }
            }
        })
        .collect()
}

/// Chords of the outer cycle, as position pairs `(a, b)`, a < b, sorted.
fn outer_chords(inst: &Inst) -> Vec<(usize, usize)> {
    let k = inst.outer.len();
    let mut pos = vec![usize::MAX; inst.g.n()];
    for (i, &v) in inst.outer.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut chords = Vec::new();
    for (i, &v) in inst.outer.iter().enumerate() {
        for &w in inst.g.neighbors(v) {
            let j = pos[w as usize];
            if j != usize::MAX && i < j {
                let dist = j - i;
                if dist >= 2 && dist != k - 1 {
                    chords.push((i, j));
                }
            }
        }
    }
    chords.sort_unstable();
    chords
}

/// Layered weights of one recursion level: outer-cycle vertices start
/// from 2, interior vertices from 4, reduced by adjacency to the protected
/// pair.
fn level_weights(inst: &Inst) -> Vec<i32> {
    let on_outer: HashSet<u32> = inst.outer.iter().copied().collect();
    let (v1, v2) = (inst.outer[0], inst.outer[1]);
    inst.g
        .vertices()
        .map(|u| {
            let base = if on_outer.contains(&u) { 2 } else { 4 };
            let near = inst.g.neighbors(u).iter().filter(|&&x| x == v1 || x == v2).count() as i32;
            base - near
        })
        .collect()
}

/// Emits legal removal operations for `V - outer[0] - outer[1]`, deleting
/// every outer-cycle vertex plainly and keeping `weights` non-negative on
/// the not-yet-removed part; `weights` is updated to the final state.
///
/// The entry weights must dominate this level's layered weights pointwise;
/// the slack above them ("surplus") is what the chordless step spends and
/// replenishes. Removing the last outer vertex up front charges its interior
/// fan once but leaves each fan vertex one unit above the next level's
/// layer, at the price of one unit at the preceding cycle vertex; the
/// save-upgrade route instead reserves two units on each fan vertex so that
/// the upgraded saves are always legal. A failure of the counting surfaces
/// as an error.
fn rec(inst: &Inst, weights: &mut [i32]) -> Result<Vec<Operation>, PlanarCertError> {
    let n = inst.g.n();
    let k = inst.outer.len();
    if n < 3 || k < 3 {
        return Err(PlanarCertError::ProofInvariant("recursion needs an outer cycle"));
    }
    if n == 3 {
        let last = inst.outer[2];
        if weights[last as usize] < 0 {
            return Err(PlanarCertError::ProofInvariant("base vertex underfunded"));
        }
        return Ok(vec![Operation::Delete { u: last }]);
    }

    if let Some(&(a, b)) = outer_chords(inst).first() {
        return split_at_chord(inst, weights, a, b);
    }

    // Chordless outer cycle: pick which end vertex to remove. Listing the
    // cycle as [v1, v2, ...] makes the end beside v1 the removal target;
    // the reflected listing targets the end beside v2.
    let lemma = level_weights(inst);
    let surplus = |v: u32| weights[v as usize] - lemma[v as usize];
    let reflected: Vec<u32> = {
        let mut r = vec![inst.outer[1], inst.outer[0]];
        r.extend(inst.outer[2..].iter().rev());
        r
    };
    let orderings: [&[u32]; 2] = [&inst.outer, &reflected];
    // Mode choice: k == 3 always allows the up-front delete; otherwise
    // prefer an end whose cycle predecessor can pay the one-unit deficit,
    // then a surplus-free end for the reservation route, then fall through
    // to the adaptive replay on the end with the least surplus.
    let mode_first_ok = |outer: &[u32]| k == 3 || surplus(outer[k - 2]) >= 1;
    let choice = if k == 3 {
        Some((0usize, true))
    } else if mode_first_ok(orderings[0]) {
        Some((0, true))
    } else if mode_first_ok(orderings[1]) {
        Some((1, true))
    } else if surplus(orderings[0][k - 1]) == 0 {
        Some((0, false))
    } else if surplus(orderings[1][k - 1]) == 0 {
        Some((1, false))
    } else {
        None
    };
    let (ord, mode_first) = match choice {
        Some((i, m)) => (orderings[i].to_vec(), m),
        None => {
            let i = if surplus(orderings[0][k - 1]) <= surplus(orderings[1][k - 1]) { 0 } else { 1 };
            (orderings[i].to_vec(), false)
        }
    };

    let vk = ord[k - 1];
    let v1 = ord[0];
    let vk1 = ord[k - 2];
    let r = &inst.rot[vk as usize];
    let deg = r.len();
    let p1 = r
        .iter()
        .position(|&x| x == v1)
        .ok_or(PlanarCertError::ProofInvariant("outer neighbor missing in rotation"))?;
    let p2 = r
        .iter()
        .position(|&x| x == vk1)
        .ok_or(PlanarCertError::ProofInvariant("outer neighbor missing in rotation"))?;
    let arc = |from: usize, to: usize| -> Vec<u32> {
        let mut out = Vec::new();
        let mut i = (from + 1) % deg;
        while i != to {
            out.push(r[i]);
            i = (i + 1) % deg;
        }
        out
    };
    let fwd = arc(p1, p2);
    let bwd = arc(p2, p1);
    let inner: Vec<u32> = match (fwd.is_empty(), bwd.is_empty()) {
        (false, true) => fwd,
        (true, false) => bwd.into_iter().rev().collect(),
        _ => {
            return Err(PlanarCertError::ProofInvariant(
                "last outer vertex must see exactly one interior fan",
            ))
        }
    };
    {
        let mut path = vec![v1];
        path.extend(&inner);
        path.push(vk1);
        for w in path.windows(2) {
            if !inst.g.has_edge(w[0], w[1]) {
                return Err(PlanarCertError::ProofInvariant("fan neighbors must form a path"));
            }
        }
    }

    // New outer cycle: v1 .. v_{k-1}, then the interior fan walked back.
    let mut new_outer: Vec<u32> = ord[..k - 1].to_vec();
    new_outer.extend(inner.iter().rev());
    let mut verts = VertexSet::full(n);
    verts.remove(vk);
    let mut alive = vec![true; n];
    alive[ord[0] as usize] = false;
    alive[ord[1] as usize] = false;

    if mode_first {
        let op = Operation::Delete { u: vk };
        if inner.iter().any(|&u| weights[u as usize] < 1)
            || (k > 3 && weights[vk1 as usize] < 1)
            || weights[vk as usize] < 0
        {
            return Err(PlanarCertError::ProofInvariant("up-front delete underfunded"));
        }
        inst.apply(&mut weights[..], &mut alive, op);
        let (child, to_parent) = inst.restrict(&verts, &new_outer);
        let mut child_w: Vec<i32> = to_parent.iter().map(|&p| weights[p as usize]).collect();
        let child_ops = remap(rec(&child, &mut child_w)?, &to_parent);
        for (i, &p) in to_parent.iter().enumerate() {
            weights[p as usize] = child_w[i];
        }
        let mut ops = vec![op];
        ops.extend(child_ops);
        return Ok(ops);
    }

    // Save-upgrade route: reserve two units on each fan vertex for the
    // deferred saves, run the child tight, then replay with upgrades.
    let (child, to_parent) = inst.restrict(&verts, &new_outer);
    let mut child_w: Vec<i32> = to_parent.iter().map(|&p| weights[p as usize]).collect();
    let mut local_of = vec![u32::MAX; n];
    for (i, &p) in to_parent.iter().enumerate() {
        local_of[p as usize] = i as u32;
    }
    for &u in &inner {
        child_w[local_of[u as usize] as usize] -= 2;
        if child_w[local_of[u as usize] as usize] < 0 {
            return Err(PlanarCertError::ProofInvariant("fan reservation underfunded"));
        }
    }
    let child_ops = remap(rec(&child, &mut child_w)?, &to_parent);

    let inner_set: HashSet<u32> = inner.iter().copied().collect();
    let mut ops = Vec::with_capacity(child_ops.len() + 1);
    for op in child_ops {
        let final_op = match op {
            Operation::Delete { u }
                if inner_set.contains(&u) && weights[u as usize] > weights[vk as usize] =>
            {
                Operation::DelSave { u, w: vk }
            }
            other => other,
        };
        if inst.g.has_edge(final_op.removed(), vk)
            && final_op.save_target() != Some(vk)
            && weights[vk as usize] < 1
        {
            return Err(PlanarCertError::ProofInvariant("last outer vertex ran out of charge"));
        }
        inst.apply(&mut weights[..], &mut alive, final_op);
        ops.push(final_op);
    }
    if weights[vk as usize] < 0 {
        return Err(PlanarCertError::ProofInvariant("last outer vertex ran out of charge"));
    }
    ops.push(Operation::Delete { u: vk });
    Ok(ops)
}

/// Case 1: the outer cycle has a chord at positions `(a, b)`. The side
/// containing the protected edge goes first; its operations leave exactly
/// the other side, whose protected pair is the chord.
fn split_at_chord(
    inst: &Inst,
    weights: &mut [i32],
    a: usize,
    b: usize,
) -> Result<Vec<Operation>, PlanarCertError> {
    let k = inst.outer.len();
    let outer = &inst.outer;
    // Cycle X: positions a..=b plus the chord; cycle Y: b..k-1, 0..=a.
    let (c1, c2): (Vec<u32>, Vec<u32>) = if a == 0 {
        // X holds the protected edge (positions 0, 1).
        let c1 = outer[0..=b].to_vec();
        let mut c2 = vec![outer[0], outer[b]];
        c2.extend(outer[b + 1..].iter());
        (c1, c2)
    } else {
        let mut c1 = outer[0..=a].to_vec();
        c1.extend(outer[b..].iter());
        let mut c2 = vec![outer[a], outer[b]];
        c2.extend(outer[a + 1..b].iter().rev());
        (c1, c2)
    };
    let (va, vb) = (outer[a], outer[b]);

    // Interior vertices on the C1 side, by face flood fill walled at C1.
    let faces = trace_faces(&inst.g, &inst.rot);
    let mut wall: HashSet<(u32, u32)> = HashSet::new();
    for i in 0..c1.len() {
        let (x, y) = (c1[i], c1[(i + 1) % c1.len()]);
        wall.insert((x.min(y), x.max(y)));
    }
    let mut faces_of_edge: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            let (x, y) = (f[i], f[(i + 1) % f.len()]);
            faces_of_edge.entry((x.min(y), x.max(y))).or_default().push(fi);
        }
    }
    let canon = |w: &[u32]| {
        let mut best: Option<Vec<u32>> = None;
        for rev in [false, true] {
            let seq: Vec<u32> = if rev { w.iter().rev().copied().collect() } else { w.to_vec() };
            for s in 0..w.len() {
                let rot: Vec<u32> = (0..w.len()).map(|i| seq[(s + i) % w.len()]).collect();
                if best.as_ref().is_none_or(|bst| rot < *bst) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap_or_default()
    };
    let outer_face = faces
        .iter()
        .position(|f| f.len() == k && canon(f) == canon(outer))
        .ok_or(PlanarCertError::ProofInvariant("outer face must be traceable"))?;

    let chord_key = (va.min(vb), va.max(vb));
    let chord_face_ids = faces_of_edge
        .get(&chord_key)
        .filter(|v| v.len() == 2)
        .ok_or(PlanarCertError::ProofInvariant("chord borders two faces"))?;

    let flood = |start: usize| -> HashSet<usize> {
        let mut seen = HashSet::new();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(fi) = stack.pop() {
            let f = &faces[fi];
            for i in 0..f.len() {
                let (x, y) = (f[i], f[(i + 1) % f.len()]);
                let key = (x.min(y), x.max(y));
                if wall.contains(&key) {
                    continue;
                }
                for &nf in &faces_of_edge[&key] {
                    if seen.insert(nf) {
                        stack.push(nf);
                    }
                }
            }
        }
        seen
    };
    let region = flood(chord_face_ids[0]);
    let inside1 = if region.contains(&outer_face) { flood(chord_face_ids[1]) } else { region };
    if inside1.contains(&outer_face) {
        return Err(PlanarCertError::ProofInvariant("chord sides must separate the outer face"));
    }

    let mut v1set = VertexSet::new(inst.g.n());
    for &v in &c1 {
        v1set.insert(v);
    }
    for &fi in &inside1 {
        for &v in &faces[fi] {
            v1set.insert(v);
        }
    }
    let mut v2set = VertexSet::full(inst.g.n()).difference(&v1set);
    v2set.insert(va);
    v2set.insert(vb);

    let (sub1, map1) = inst.restrict(&v1set, &c1);
    let mut w1: Vec<i32> = map1.iter().map(|&p| weights[p as usize]).collect();
    let ops1 = remap(rec(&sub1, &mut w1)?, &map1);
    let mut alive = vec![true; inst.g.n()];
    alive[inst.outer[0] as usize] = false;
    alive[inst.outer[1] as usize] = false;
    for &op in &ops1 {
        inst.apply(&mut weights[..], &mut alive, op);
    }

    let (sub2, map2) = inst.restrict(&v2set, &c2);
    let mut w2: Vec<i32> = map2.iter().map(|&p| weights[p as usize]).collect();
    let ops2 = remap(rec(&sub2, &mut w2)?, &map2);
    let mut ops = ops1;
    for &op in &ops2 {
        inst.apply(&mut weights[..], &mut alive, op);
    }
    ops.extend(ops2);
    Ok(ops)
}

/// Weights of the safe-certificate construction on `G - v1 - v2`:
/// outer-cycle vertices start from 2, interior vertices from 4, each reduced
/// by its adjacency into the removed pair.
fn lemma_weights(g: &Graph, outer: &[u32], v1: u32, v2: u32) -> Vec<i32> {
    let on_outer: HashSet<u32> = outer.iter().copied().collect();
    g.vertices()
        .map(|u| {
            let base = if on_outer.contains(&u) { 2 } else { 4 };
            let near = g.neighbors(u).iter().filter(|&&x| x == v1 || x == v2).count() as i32;
            base - near
        })
        .collect()
}

/// Builds a verified certificate witnessing that `G - v1 - v2` is safely
/// weakly degenerate for the layered weights, with every remaining
/// outer-cycle vertex deleted plainly. `v1 v2` must be an outer-cycle edge
/// and all inner faces triangles. Returns the certificate over the induced
/// subgraph together with the map back to the instance's vertex ids.
pub fn safe_certificate(
    inst: &PlanarInstance,
    v1: u32,
    v2: u32,
) -> Result<(Certificate, Vec<u32>), PlanarCertError> {
    let outer = inst.outer_cycle();
    let k = outer.len();
    let p1 = outer.iter().position(|&v| v == v1).ok_or(PlanarCertError::NotOuterEdge { v1, v2 })?;
    let p2 = outer.iter().position(|&v| v == v2).ok_or(PlanarCertError::NotOuterEdge { v1, v2 })?;
    // Normalize the outer listing to start v1, v2 (reflecting if needed).
    let listed: Vec<u32> = if (p1 + 1) % k == p2 {
        (0..k).map(|i| outer[(p1 + i) % k]).collect()
    } else if (p2 + 1) % k == p1 {
        (0..k).map(|i| outer[(p1 + k - i) % k]).collect()
    } else {
        return Err(PlanarCertError::NotOuterEdge { v1, v2 });
    };

    let report = validate_embedding(inst.graph(), &inst.rotation_system())
        .map_err(PlanarCertError::Embedding)?;
    for (fi, f) in report.faces.iter().enumerate() {
        if fi != report.outer_face && f.len() != 3 {
            return Err(PlanarCertError::InnerFaceNotTriangle { face: f.clone() });
        }
    }

    let mut weights = lemma_weights(inst.graph(), outer, v1, v2);
    let work = Inst { g: inst.graph().clone(), rot: inst.rotations().to_vec(), outer: listed };
    let ops = rec(&work, &mut weights)?;

    let mut keep = VertexSet::full(inst.graph().n());
    keep.remove(v1);
    keep.remove(v2);
    let (sub, to_orig) = inst.graph().induced(&keep);
    let mut local = vec![u32::MAX; inst.graph().n()];
    for (i, &p) in to_orig.iter().enumerate() {
        local[p as usize] = i as u32;
    }
    let ops = ops
        .into_iter()
        .map(|op| match op {
            Operation::Delete { u } => Operation::Delete { u: local[u as usize] },
            Operation::DelSave { u, w } => {
                Operation::DelSave { u: local[u as usize], w: local[w as usize] }
            }
        })
        .collect();
    let all = lemma_weights(inst.graph(), outer, v1, v2);
    let f: Vec<i32> = to_orig.iter().map(|&p| all[p as usize]).collect();
    let safe = VertexSet::from_iter(
        sub.n(),
        outer.iter().filter(|&&v| v != v1 && v != v2).map(|&v| local[v as usize]),
    );
    let cert = Certificate { initial_f: f, ops, safe_set: Some(safe) };
    verify_certificate(&sub, &cert).map_err(PlanarCertError::Verify)?;
    Ok((cert, to_orig))
}

/// Constant-4 certificate for any validly embedded planar graph: each
/// component is completed to a maximal plane graph, two adjacent vertices of
/// a chosen triangle face are deleted outright, the safe recursion supplies
/// the rest, and the whole sequence is restated on the original graph.
pub fn weakly4_certificate(
    g: &Graph,
    rotation: &RotationSystem,
) -> Result<Certificate, PlanarCertError> {
    validate_embedding(g, rotation).map_err(PlanarCertError::Embedding)?;
    let mut ops: Vec<Operation> = Vec::new();
    for comp in g.components() {
        let (sub, to_orig) = g.induced(&comp);
        if sub.n() <= 2 {
            for v in sub.vertices() {
                ops.push(Operation::Delete { u: to_orig[v as usize] });
            }
            continue;
        }
        let mut local = vec![u32::MAX; g.n()];
        for (i, &p) in to_orig.iter().enumerate() {
            local[p as usize] = i as u32;
        }
        let rot: Vec<Vec<u32>> = to_orig
            .iter()
            .map(|&p| rotation.rot[p as usize].iter().map(|&x| local[x as usize]).collect())
            .collect();
        let (maximal, max_rot, _) =
            chord_faces(&sub, &rot, None).map_err(PlanarCertError::Triangulate)?;

        // Every face is now a triangle; take the lexicographically least as
        // outer, listed from its smallest vertex in its traced direction.
        let faces = trace_faces(&maximal, &max_rot);
        let outer = faces
            .iter()
            .map(|f| {
                let base = (0..3).min_by_key(|&i| f[i]).unwrap();
                vec![f[base], f[(base + 1) % 3], f[(base + 2) % 3]]
            })
            .min()
            .ok_or(PlanarCertError::ProofInvariant("triangulation has faces"))?;
        let (v1, v2) = (outer[0], outer[1]);
        let mut weights = lemma_weights(&maximal, &outer, v1, v2);
        let work = Inst { g: maximal, rot: max_rot, outer };
        let mut comp_ops = vec![Operation::Delete { u: v1 }, Operation::Delete { u: v2 }];
        comp_ops.extend(rec(&work, &mut weights)?);
        ops.extend(remap(comp_ops, &to_orig));
    }
    let four = vec![4; g.n()];
    let cert = lift_ops(g, &four, &ops, None).map_err(PlanarCertError::Verify)?;
    debug_assert_eq!(verify_certificate(g, &cert), Ok(()));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{
        apollonian, cube, dodecahedron, grid, icosahedron, octahedron, tetrahedron, triangle,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn triangle_base_case() {
        let inst = triangle();
        let (v1, v2) = (inst.outer_cycle()[0], inst.outer_cycle()[1]);
        let (cert, to_orig) = safe_certificate(&inst, v1, v2).unwrap();
        assert_eq!(cert.ops.len(), 1);
        assert_eq!(cert.initial_f, vec![0]);
        assert_eq!(to_orig.len(), 1);
    }

    #[test]
    fn tetrahedron_safe_certificate() {
        let inst = tetrahedron();
        let (v1, v2) = (inst.outer_cycle()[0], inst.outer_cycle()[1]);
        let (cert, _) = safe_certificate(&inst, v1, v2).unwrap();
        assert_eq!(cert.ops.len(), 2);
    }

    #[test]
    fn icosahedron_safe_certificate() {
        let inst = icosahedron();
        let (v1, v2) = (inst.outer_cycle()[0], inst.outer_cycle()[1]);
        let (cert, to_orig) = safe_certificate(&inst, v1, v2).unwrap();
        assert_eq!(cert.ops.len(), 10);
        assert_eq!(to_orig.len(), 10);
        // Safety is part of verification; re-checked here mechanically.
        let safe = cert.safe_set.as_ref().unwrap();
        for op in &cert.ops {
            if op.save_target().is_some() {
                assert!(!safe.contains(op.removed()));
            }
        }
    }

    #[test]
    fn non_outer_edge_rejected() {
        let inst = octahedron();
        let out = inst.outer_cycle().to_vec();
        let non_neighbors: Vec<u32> =
            inst.graph().vertices().filter(|&v| !out.contains(&v)).collect();
        assert!(!non_neighbors.is_empty());
        assert!(matches!(
            safe_certificate(&inst, out[0], non_neighbors[0]),
            Err(PlanarCertError::NotOuterEdge { .. })
        ));
    }

    #[test]
    fn weakly4_platonic_solids() {
        for inst in [tetrahedron(), octahedron(), cube(), icosahedron(), dodecahedron()] {
            let cert = weakly4_certificate(inst.graph(), &inst.rotation_system()).unwrap();
            assert_eq!(verify_certificate(inst.graph(), &cert), Ok(()));
            assert!(cert.initial_f.iter().all(|&f| f == 4));
        }
    }

    #[test]
    fn weakly4_grid_and_random_triangulations() {
        let inst = grid(4, 5);
        let cert = weakly4_certificate(inst.graph(), &inst.rotation_system()).unwrap();
        assert_eq!(verify_certificate(inst.graph(), &cert), Ok(()));

        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for n in [10usize, 40, 80] {
            let inst = apollonian(n, &mut rng);
            let cert = weakly4_certificate(inst.graph(), &inst.rotation_system()).unwrap();
            assert_eq!(verify_certificate(inst.graph(), &cert), Ok(()));
        }
    }

    #[test]
    fn weakly4_disconnected() {
        // Two disjoint triangles.
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let rot = RotationSystem {
            rot: vec![vec![1, 2], vec![2, 0], vec![0, 1], vec![4, 5], vec![5, 3], vec![3, 4]],
            outer: vec![0, 2, 1],
        };
        let cert = weakly4_certificate(&g, &rot).unwrap();
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
    }

    #[test]
    fn weakly4_tree_and_cut_vertices() {
        // A star: triangulation must first biconnect it.
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let rot = RotationSystem {
            rot: vec![vec![1, 2, 3, 4], vec![0], vec![0], vec![0], vec![0]],
            outer: vec![0, 1, 0, 2, 0, 3, 0, 4],
        };
        let cert = weakly4_certificate(&g, &rot).unwrap();
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
    }
}
