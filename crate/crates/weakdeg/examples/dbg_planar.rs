use weakdeg::planar::*;

fn main() {
    let inst = icosahedron();
    let (v1, v2) = (inst.outer_cycle()[0], inst.outer_cycle()[1]);
    println!("outer: {:?} v1={v1} v2={v2}", inst.outer_cycle());
    println!("graph: {:?}", inst.graph());
    match safe_certificate(&inst, v1, v2) {
        Ok((cert, map)) => println!("ok: {} ops, map {map:?}\n{:?}", cert.ops.len(), cert.ops),
        Err(e) => println!("ERR: {e}"),
    }
}
