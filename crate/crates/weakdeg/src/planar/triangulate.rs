//! Chord insertion until faces are triangles.
//!
//! A chord between two boundary positions of a face splits it in two; the
//! rotation updates are local to the two endpoints. On a simple face of
//! length >= 4 an addable chord always exists among the distance-2 position
//! pairs (two crossing short chords cannot both be present in a plane
//! graph). Faces with repeated vertices (cut vertices on the boundary) are
//! handled by the same scan over all non-adjacent position pairs, which also
//! serves as biconnectivity augmentation.

use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::graph::Graph;
use crate::planar::{trace_faces, PlanarInstance, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangulateError {
    /// A non-triangular face admits no chord: all its distinct vertex pairs
    /// are already adjacent.
    NoAddableChord { face: Vec<u32> },
}

impl fmt::Display for TriangulateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangulateError::NoAddableChord { face } => {
                write!(f, "face {face:?} cannot be chorded further")
            }
        }
    }
}

impl core::error::Error for TriangulateError {}

fn is_triangle(face: &[u32]) -> bool {
    face.len() == 3
}

/// Picks chord positions `(i, j)` in the face walk: distinct non-adjacent
/// vertices at non-consecutive positions, scanning outward from the position
/// of the lowest vertex id (so unobstructed faces get fanned from it).
fn pick_chord(face: &[u32], has_edge: impl Fn(u32, u32) -> bool) -> Option<(usize, usize)> {
    let k = face.len();
    let base = (0..k).min_by_key(|&i| face[i]).unwrap_or(0);
    for d1 in 0..k {
        for d2 in d1 + 2..k {
            if d1 == 0 && d2 == k - 1 {
                continue;
            }
            let i = (base + d1) % k;
            let j = (base + d2) % k;
            let (x, y) = (face[i], face[j]);
            if x != y && !has_edge(x, y) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Inserts a chord between walk positions `i` and `j` of `face`: each
/// endpoint's rotation gains the other endpoint right after the walk
/// predecessor at that occurrence.
fn insert_chord(rot: &mut [Vec<u32>], face: &[u32], i: usize, j: usize) {
    let k = face.len();
    let (x, y) = (face[i], face[j]);
    let pred_x = face[(i + k - 1) % k];
    let pred_y = face[(j + k - 1) % k];
    let px = rot[x as usize].iter().position(|&v| v == pred_x).expect("pred is a neighbor");
    rot[x as usize].insert(px + 1, y);
    let py = rot[y as usize].iter().position(|&v| v == pred_y).expect("pred is a neighbor");
    rot[y as usize].insert(py + 1, x);
}

/// Repeatedly chords non-triangular faces. When `protect` carries a directed
/// edge, the face containing it is left alone (the designated outer face).
/// Returns the augmented graph, rotations, and the added edges.
pub(crate) fn chord_faces(
    g: &Graph,
    rot: &[Vec<u32>],
    protect: Option<(u32, u32)>,
) -> Result<(Graph, Vec<Vec<u32>>, Vec<(u32, u32)>), TriangulateError> {
    let mut rot = rot.to_vec();
    let mut edge_set: HashSet<(u32, u32)> = g.edges().collect();
    let mut added = Vec::new();
    loop {
        let cur =
            Graph::new(g.n(), &edge_set.iter().copied().collect::<Vec<_>>()).expect("still simple");
        let faces = trace_faces(&cur, &rot);
        let protected = protect.map(|(a, b)| {
            faces
                .iter()
                .position(|f| {
                    let k = f.len();
                    (0..k).any(|i| f[i] == a && f[(i + 1) % k] == b)
                })
                .expect("protected directed edge lies on some face")
        });
        let target = faces
            .iter()
            .enumerate()
            .find(|(fi, f)| Some(*fi) != protected && !is_triangle(f));
        let Some((_, face)) = target else {
            return Ok((cur, rot, added));
        };
        let has = |x: u32, y: u32| edge_set.contains(&(x.min(y), x.max(y)));
        let Some((i, j)) = pick_chord(face, has) else {
            return Err(TriangulateError::NoAddableChord { face: face.clone() });
        };
        let (x, y) = (face[i], face[j]);
        insert_chord(&mut rot, face, i, j);
        edge_set.insert((x.min(y), x.max(y)));
        added.push((x.min(y), x.max(y)));
    }
}

/// Chords every non-outer face of the instance into triangles, leaving the
/// outer face untouched. Returns the triangulated instance and the edges
/// that were added (so certificates can later be restated on the original
/// graph).
pub fn triangulate(
    inst: &PlanarInstance,
) -> Result<(PlanarInstance, Vec<(u32, u32)>), TriangulateError> {
    let outer = inst.outer_cycle();
    // The protected directed edge must come from the outer face's own walk:
    // the inner face beside it carries the same edge reversed.
    let report = crate::planar::validate_embedding(inst.graph(), &inst.rotation_system())
        .expect("planar instance stays valid");
    let walk = &report.faces[report.outer_face];
    let oriented = (walk[0], walk[1]);
    let (graph, rot, added) = chord_faces(inst.graph(), inst.rotations(), Some(oriented))?;
    let out = PlanarInstance::new(graph, RotationSystem { rot, outer: outer.to_vec() })
        .expect("chording preserves embedding validity");
    Ok((out, added))
}
