//! Plane graphs as rotation systems, with face tracing and validation.
//!
//! A rotation system lists each vertex's neighbors in cyclic embedding
//! order. Faces are traced by the successor rule: after arriving along
//! `(u, v)`, the walk continues to the neighbor following `u` in the
//! rotation at `v`. Euler's formula per connected component certifies that
//! the rotation describes a sphere embedding.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

mod cert;
mod gen;
mod triangulate;

pub use cert::{safe_certificate, weakly4_certificate, PlanarCertError};
pub use gen::{
    apollonian, cube, dodecahedron, grid, icosahedron, octahedron, rotation_from_coordinates,
    rotation_from_faces, tetrahedron, triangle,
};
pub use triangulate::{triangulate, TriangulateError};

/// Cyclic neighbor order per vertex plus the designated outer face, named by
/// one of its boundary walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub rot: Vec<Vec<u32>>,
    pub outer: Vec<u32>,
}

/// A validated plane graph whose designated outer face is a simple cycle,
/// listed in boundary order.
#[derive(Debug, Clone)]
pub struct PlanarInstance {
    graph: Graph,
    rot: Vec<Vec<u32>>,
    outer: Vec<u32>,
}

impl PlanarInstance {
    /// Validates the rotation system against the graph and checks that the
    /// designated outer face is a simple cycle.
    pub fn new(graph: Graph, rotation: RotationSystem) -> Result<PlanarInstance, EmbeddingViolation> {
        let report = validate_embedding(&graph, &rotation)?;
        let outer = report.faces[report.outer_face].clone();
        let mut seen = vec![false; graph.n()];
        if outer.len() < 3 {
            return Err(EmbeddingViolation::OuterFaceNotSimpleCycle);
        }
        for &v in &outer {
            if seen[v as usize] {
                return Err(EmbeddingViolation::OuterFaceNotSimpleCycle);
            }
            seen[v as usize] = true;
        }
        Ok(PlanarInstance { graph, rot: rotation.rot, outer })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotations(&self) -> &[Vec<u32>] {
        &self.rot
    }

    /// Outer cycle in boundary order (as traced).
    pub fn outer_cycle(&self) -> &[u32] {
        &self.outer
    }

    pub fn rotation_system(&self) -> RotationSystem {
        RotationSystem { rot: self.rot.clone(), outer: self.outer.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingViolation {
    WrongVertexCount { expected: usize, got: usize },
    /// The rotation at `vertex` is not a permutation of its neighbors.
    RotationMismatch { vertex: u32 },
    /// Euler's formula failed on some connected component.
    EulerFailure { component_vertex: u32, n: usize, m: usize, faces: usize },
    /// The designated outer face is not among the traced faces.
    OuterFaceMissing,
    OuterFaceNotSimpleCycle,
}

impl fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingViolation::WrongVertexCount { expected, got } => {
                write!(f, "rotation lists {got} vertices for a graph on {expected}")
            }
            EmbeddingViolation::RotationMismatch { vertex } => {
                write!(f, "rotation at vertex {vertex} does not list its neighbors")
            }
            EmbeddingViolation::EulerFailure { component_vertex, n, m, faces } => write!(
                f,
                "component of vertex {component_vertex}: n={n}, m={m}, faces={faces} violates Euler"
            ),
            EmbeddingViolation::OuterFaceMissing => write!(f, "designated outer face not traced"),
            EmbeddingViolation::OuterFaceNotSimpleCycle => {
                write!(f, "outer face is not a simple cycle")
            }
        }
    }
}

impl core::error::Error for EmbeddingViolation {}

/// Traced faces plus the index of the designated outer face.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub faces: Vec<Vec<u32>>,
    pub outer_face: usize,
}

/// Traces every face of the rotation system. Each face is the vertex walk
/// of its boundary; every directed edge lies on exactly one face.
pub fn trace_faces(g: &Graph, rot: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = g.n();
    // Position of u within rot[v].
    let mut pos: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for v in 0..n {
        let mut list: Vec<(u32, u32)> =
            rot[v].iter().enumerate().map(|(i, &u)| (u, i as u32)).collect();
        list.sort_unstable();
        pos[v] = list;
    }
    let index_of = |v: u32, u: u32| -> usize {
        let list = &pos[v as usize];
        let i = list.binary_search_by_key(&u, |p| p.0).expect("u in rot[v]");
        list[i].1 as usize
    };

    // Directed edge (v, rot[v][i]) identified by (v, i).
    let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rot[v].len()]).collect();
    let mut faces = Vec::new();
    for start_v in 0..n as u32 {
        for start_i in 0..rot[start_v as usize].len() {
            if used[start_v as usize][start_i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut v, mut i) = (start_v, start_i);
            loop {
                used[v as usize][i] = true;
                walk.push(v);
                let w = rot[v as usize][i];
                // Next directed edge out of w: successor of v in rot[w].
                let j = (index_of(w, v) + 1) % rot[w as usize].len();
                (v, i) = (w, j);
                if (v, i) == (start_v, start_i) {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    faces
}

/// Canonical form of a closed walk: minimal rotation of the smaller of the
/// walk and its reversal.
fn canonical_walk(walk: &[u32]) -> Vec<u32> {
    let k = walk.len();
    let mut best: Option<Vec<u32>> = None;
    for rev in [false, true] {
        let seq: Vec<u32> =
            if rev { walk.iter().rev().copied().collect() } else { walk.to_vec() };
        for s in 0..k {
            let rotated: Vec<u32> = (0..k).map(|i| seq[(s + i) % k]).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

/// Checks structural consistency, Euler's formula per component, and the
/// presence of the designated outer face.
pub fn validate_embedding(
    g: &Graph,
    rotation: &RotationSystem,
) -> Result<EmbeddingReport, EmbeddingViolation> {
    let n = g.n();
    if rotation.rot.len() != n {
        return Err(EmbeddingViolation::WrongVertexCount { expected: n, got: rotation.rot.len() });
    }
    for v in 0..n as u32 {
        let mut listed = rotation.rot[v as usize].clone();
        listed.sort_unstable();
        if listed != g.neighbors(v) {
            return Err(EmbeddingViolation::RotationMismatch { vertex: v });
        }
    }
    let faces = trace_faces(g, &rotation.rot);

    // Euler per connected component; faces belong to the component of any of
    // their vertices. Isolated vertices carry no directed edges (skip).
    for comp in g.components() {
        let root = comp.iter().next().expect("components are nonempty");
        let (sub, _) = g.induced(&comp);
        if sub.m() == 0 {
            continue;
        }
        let fcount = faces.iter().filter(|f| comp.contains(f[0])).count();
        if sub.n() + fcount != sub.m() + 2 {
            return Err(EmbeddingViolation::EulerFailure {
                component_vertex: root,
                n: sub.n(),
                m: sub.m(),
                faces: fcount,
            });
        }
    }

    let target = canonical_walk(&rotation.outer);
    let outer_face = faces
        .iter()
        .position(|f| canonical_walk(f) == target)
        .ok_or(EmbeddingViolation::OuterFaceMissing)?;
    Ok(EmbeddingReport { faces, outer_face })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_four_faces() {
        let inst = tetrahedron();
        let report =
            validate_embedding(inst.graph(), &inst.rotation_system()).unwrap();
        assert_eq!(report.faces.len(), 4);
        assert!(report.faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn c4_has_two_faces() {
        let g = Graph::cycle(4);
        let rot = RotationSystem {
            rot: vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            outer: vec![0, 1, 2, 3],
        };
        let report = validate_embedding(&g, &rot).unwrap();
        assert_eq!(report.faces.len(), 2);
        assert_eq!(report.faces[0].len(), 4);
    }

    #[test]
    fn mangled_rotation_is_rejected() {
        // K4 with one rotation listing a non-neighbor set.
        let g = Graph::complete(4);
        let rot = RotationSystem {
            rot: vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 1]],
            outer: vec![0, 1, 2],
        };
        assert_eq!(
            validate_embedding(&g, &rot).unwrap_err(),
            EmbeddingViolation::RotationMismatch { vertex: 3 }
        );
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // K5 admits no sphere embedding, so every rotation system fails.
        let g = Graph::complete(5);
        let rot = RotationSystem {
            rot: (0..5u32)
                .map(|v| (0..5u32).filter(|&u| u != v).collect())
                .collect(),
            outer: vec![0, 1, 2],
        };
        assert!(matches!(
            validate_embedding(&g, &rot),
            Err(EmbeddingViolation::EulerFailure { .. })
        ));
    }

    #[test]
    fn outer_face_matching_handles_direction() {
        let g = Graph::cycle(4);
        let rot = RotationSystem {
            rot: vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            outer: vec![2, 1, 0, 3],
        };
        assert!(validate_embedding(&g, &rot).is_ok());
        let bad = RotationSystem {
            rot: vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            outer: vec![0, 2, 1, 3],
        };
        assert_eq!(validate_embedding(&g, &bad).unwrap_err(), EmbeddingViolation::OuterFaceMissing);
    }
}
