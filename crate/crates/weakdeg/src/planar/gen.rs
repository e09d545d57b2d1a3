//! Plane-graph builders: rotations recovered from oriented face lists or
//! straight-line coordinates, the platonic solids, grids, and seeded random
//! triangulations (stacked/apollonian).

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::graph::Graph;
use crate::planar::{PlanarInstance, RotationSystem};

/// Recovers a rotation system from a consistently oriented face list (every
/// directed edge appears in exactly one face). The first face is designated
/// outer.
pub fn rotation_from_faces(n: usize, faces: &[Vec<u32>]) -> PlanarInstance {
    let mut edges = Vec::new();
    // succ[v]: directed-edge successor relation a -> b for walk [a, v, b].
    let mut succ: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let a = face[i];
            let v = face[(i + 1) % k];
            let b = face[(i + 2) % k];
            succ[v as usize].push((a, b));
            if a < v {
                edges.push((a, v));
            } else {
                edges.push((v, a));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(n, &edges).expect("face list describes a simple graph");
    let mut rot: Vec<Vec<u32>> = vec![Vec::new(); n];
    for v in 0..n {
        if succ[v].is_empty() {
            continue;
        }
        let mut map = succ[v].clone();
        map.sort_unstable();
        map.dedup();
        assert_eq!(map.len(), graph.degree(v as u32), "faces must chain around vertex {v}");
        let mut order = Vec::with_capacity(map.len());
        let mut cur = map[0].0;
        for _ in 0..map.len() {
            order.push(cur);
            let i = map.binary_search_by_key(&cur, |p| p.0).expect("successor chain closed");
            cur = map[i].1;
        }
        rot[v] = order;
    }
    PlanarInstance::new(graph, RotationSystem { rot, outer: faces[0].clone() })
        .expect("oriented face list is a valid embedding")
}

/// Rotation system from a straight-line plane drawing: neighbors sorted by
/// angle around each vertex. `outer` names the outer face walk.
pub fn rotation_from_coordinates(g: &Graph, coords: &[(f64, f64)], outer: Vec<u32>) -> PlanarInstance {
    assert_eq!(coords.len(), g.n());
    let mut rot = Vec::with_capacity(g.n());
    for v in g.vertices() {
        let (x, y) = coords[v as usize];
        let mut nbs: Vec<u32> = g.neighbors(v).to_vec();
        nbs.sort_by(|&a, &b| {
            let ang = |u: u32| {
                let (ux, uy) = coords[u as usize];
                libm::atan2(uy - y, ux - x)
            };
            ang(a).partial_cmp(&ang(b)).expect("angles are finite")
        });
        rot.push(nbs);
    }
    PlanarInstance::new(g.clone(), RotationSystem { rot, outer })
        .expect("straight-line drawing is a valid embedding")
}

/// Geometric dual: one vertex per face, adjacent across shared edges. Every
/// 3-connected primal gives a simple dual. The dual vertex of the primal
/// outer face becomes... a vertex like any other; the face of the dual
/// designated outer is the one around the primal outer face's first vertex.
pub fn dual(inst: &PlanarInstance) -> PlanarInstance {
    let faces = crate::planar::trace_faces(inst.graph(), inst.rotations());
    // face_of[(u, i)] = face owning directed edge (u, rot[u][i]).
    let n = inst.graph().n();
    let mut pos: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for v in 0..n {
        let mut list: Vec<(u32, u32)> =
            inst.rotations()[v].iter().enumerate().map(|(i, &u)| (u, i as u32)).collect();
        list.sort_unstable();
        pos[v] = list;
    }
    let index_of = |v: u32, u: u32| -> usize {
        let list = &pos[v as usize];
        let i = list.binary_search_by_key(&u, |p| p.0).expect("u in rot[v]");
        list[i].1 as usize
    };
    let mut face_of = vec![vec![usize::MAX; 0]; n];
    for (v, r) in inst.rotations().iter().enumerate() {
        face_of[v] = vec![usize::MAX; r.len()];
    }
    for (fi, face) in faces.iter().enumerate() {
        let k = face.len();
        for i in 0..k {
            let u = face[i];
            let v = face[(i + 1) % k];
            face_of[u as usize][index_of(u, v)] = fi;
        }
    }
    // Dual faces, one per primal vertex: the cyclic fan of faces around it.
    let mut dual_faces: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in 0..n as u32 {
        let deg = inst.rotations()[v as usize].len();
        let walk: Vec<u32> =
            (0..deg).map(|i| face_of[v as usize][i] as u32).collect();
        dual_faces.push(walk);
    }
    // Designate the dual face around the first outer-cycle vertex as outer.
    let first = inst.outer_cycle()[0] as usize;
    dual_faces.swap(0, first);
    rotation_from_faces(faces.len(), &dual_faces)
}

/// The triangle instance: two faces, outer designated.
pub fn triangle() -> PlanarInstance {
    rotation_from_faces(3, &[vec![0, 2, 1], vec![0, 1, 2]])
}

pub fn tetrahedron() -> PlanarInstance {
    rotation_from_faces(
        4,
        &[vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]],
    )
}

pub fn octahedron() -> PlanarInstance {
    // Vertices: 0 top, 5 bottom, equatorial cycle 1-2-3-4.
    rotation_from_faces(
        6,
        &[
            vec![1, 2, 0],
            vec![2, 3, 0],
            vec![3, 4, 0],
            vec![4, 1, 0],
            vec![2, 1, 5],
            vec![3, 2, 5],
            vec![4, 3, 5],
            vec![1, 4, 5],
        ],
    )
}

pub fn cube() -> PlanarInstance {
    dual(&octahedron())
}

pub fn icosahedron() -> PlanarInstance {
    // Gyroelongated bipyramid: 0 north, 1..=5 upper ring u_i, 6..=10 lower
    // ring l_i (l_i adjacent u_i, u_{i+1}), 11 south.
    let u = |i: usize| 1 + (i % 5) as u32;
    let l = |i: usize| 6 + (i % 5) as u32;
    let mut faces: Vec<Vec<u32>> = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, u(i + 1), u(i)]);
        faces.push(vec![u(i), u(i + 1), l(i)]);
        faces.push(vec![l(i), u(i + 1), l(i + 1)]);
        faces.push(vec![11, l(i), l(i + 1)]);
    }
    rotation_from_faces(12, &faces)
}

pub fn dodecahedron() -> PlanarInstance {
    dual(&icosahedron())
}

/// The r x c grid drawn on integer coordinates; outer face is the boundary.
pub fn grid(r: usize, c: usize) -> PlanarInstance {
    assert!(r >= 2 && c >= 2);
    let id = |i: usize, j: usize| (i * c + j) as u32;
    let mut edges = Vec::new();
    let mut coords = Vec::new();
    for i in 0..r {
        for j in 0..c {
            coords.push((j as f64, i as f64));
            if j + 1 < c {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < r {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let g = Graph::new(r * c, &edges).unwrap();
    let mut outer = Vec::new();
    for j in 0..c {
        outer.push(id(0, j));
    }
    for i in 1..r - 1 {
        outer.push(id(i, c - 1));
    }
    for j in (0..c).rev() {
        outer.push(id(r - 1, j));
    }
    for i in (1..r - 1).rev() {
        outer.push(id(i, 0));
    }
    rotation_from_coordinates(&g, &coords, outer)
}

/// Random stacked triangulation on `n >= 3` vertices: starting from a
/// triangle, each new vertex lands in a uniformly random inner face and is
/// joined to its three corners. All faces are triangles; the outer face is
/// the starting triangle.
pub fn apollonian<R: Rng>(n: usize, rng: &mut R) -> PlanarInstance {
    assert!(n >= 3);
    let mut rot: Vec<Vec<u32>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Inner faces as oriented triangles; outer is [0, 2, 1].
    let mut faces: Vec<[u32; 3]> = vec![[0, 1, 2]];
    let mut edges: Vec<(u32, u32)> = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n as u32 {
        let fidx = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(fidx);
        // Insert v: rotation [b, a, c] at v; between the face corners at
        // a, b, c so the three new triangles trace correctly.
        rot.push(vec![b, a, c]);
        let insert_after = |rot: &mut Vec<Vec<u32>>, at: u32, after: u32, who: u32| {
            let list = &mut rot[at as usize];
            let i = list.iter().position(|&x| x == after).expect("after is a neighbor");
            list.insert(i + 1, who);
        };
        insert_after(&mut rot, a, c, v);
        insert_after(&mut rot, b, a, v);
        insert_after(&mut rot, c, b, v);
        for x in [a, b, c] {
            edges.push((x.min(v), x.max(v)));
        }
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    let g = Graph::new(n, &edges).expect("stacking keeps the graph simple");
    PlanarInstance::new(g, RotationSystem { rot, outer: vec![0, 2, 1] })
        .expect("stacked triangulation is a valid embedding")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{trace_faces, validate_embedding};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn face_count(inst: &PlanarInstance) -> usize {
        trace_faces(inst.graph(), inst.rotations()).len()
    }

    #[test]
    fn platonic_solids_validate() {
        let tetra = tetrahedron();
        assert_eq!((tetra.graph().n(), tetra.graph().m(), face_count(&tetra)), (4, 6, 4));
        let octa = octahedron();
        assert_eq!((octa.graph().n(), octa.graph().m(), face_count(&octa)), (6, 12, 8));
        let c = cube();
        assert_eq!((c.graph().n(), c.graph().m(), face_count(&c)), (8, 12, 6));
        let icosa = icosahedron();
        assert_eq!((icosa.graph().n(), icosa.graph().m(), face_count(&icosa)), (12, 30, 20));
        let dodeca = dodecahedron();
        assert_eq!((dodeca.graph().n(), dodeca.graph().m(), face_count(&dodeca)), (20, 30, 12));
        assert!(dodeca.graph().vertices().all(|v| dodeca.graph().degree(v) == 3));
    }

    #[test]
    fn grid_embeds() {
        let inst = grid(3, 4);
        assert_eq!(inst.graph().n(), 12);
        assert_eq!(face_count(&inst), 1 + 2 * 3);
        assert_eq!(inst.outer_cycle().len(), 10);
    }

    #[test]
    fn apollonian_all_inner_faces_triangular() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in [3usize, 5, 20, 60] {
            let inst = apollonian(n, &mut rng);
            let report = validate_embedding(inst.graph(), &inst.rotation_system()).unwrap();
            assert_eq!(report.faces.len(), 2 * n - 4);
            assert!(report.faces.iter().all(|f| f.len() == 3));
            assert_eq!(inst.graph().m(), 3 * n - 6);
        }
    }
}
