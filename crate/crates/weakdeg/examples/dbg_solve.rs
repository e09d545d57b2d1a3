use weakdeg::graph::{Graph, VertexSet};
use weakdeg::weak::{is_weakly_f_degenerate, SolverLimits};

fn main() {
    // Icosahedron minus v1=0, v2=2, relabeled: original ids 1,3,4,5,6,7,8,9,10,11
    let icosa = weakdeg::planar::icosahedron();
    let g = icosa.graph();
    let mut keep = VertexSet::full(12);
    keep.remove(0);
    keep.remove(2);
    let (sub, to_orig) = g.induced(&keep);
    // lemma weights: outer C = {0,2,1}: vertex 1 -> 2 - |N∩{0,2}| = 0; interior: 4 - |N∩{0,2}|
    let f: Vec<i32> = to_orig
        .iter()
        .map(|&u| {
            let near = g.neighbors(u).iter().filter(|&&x| x == 0 || x == 2).count() as i32;
            if u == 1 { 2 - near } else { 4 - near }
        })
        .collect();
    let safe_local: Vec<u32> = to_orig
        .iter()
        .enumerate()
        .filter(|(_, &u)| u == 1)
        .map(|(i, _)| i as u32)
        .collect();
    let safe = VertexSet::from_iter(sub.n(), safe_local.iter().copied());
    println!("f = {f:?}, safe = {safe_local:?}, to_orig = {to_orig:?}");
    let limits = SolverLimits { max_vertices: 12, ..Default::default() };
    match is_weakly_f_degenerate(&sub, &f, Some(&safe), &limits) {
        Ok(Some(cert)) => println!("CERT EXISTS: {:?}", cert.ops),
        Ok(None) => println!("NO certificate exists"),
        Err(e) => println!("solver error: {e}"),
    }
}
