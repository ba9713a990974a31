use relink_core::generators::*;
use relink_core::oracle::*;

fn main() {
    let t0 = std::time::Instant::now();
    let g = gen_cylinder_lean(6, 4, 2, 0, 1).unwrap();
    let d = oracle_decide(&g.instance, &g.p, &g.q, 3_000_000).unwrap();
    println!("lean 6x4 wound: decide={d} in {:?}", t0.elapsed());
    let t0 = std::time::Instant::now();
    let g = gen_cylinder_lean(8, 6, 3, 0, 1).unwrap();
    let d = oracle_decide(&g.instance, &g.p, &g.q, 3_000_000).unwrap();
    println!("lean 8x6 k=3 wound: decide={d} in {:?}", t0.elapsed());
    for k in [2usize, 3] {
        for (mm, db) in [(true, false), (false, true), (true, true)] {
            let t0 = std::time::Instant::now();
            let g = gen_ladder_bottleneck(k, mm, db).unwrap();
            let d = oracle_decide(&g.instance, &g.p, &g.q, 3_000_000).unwrap();
            println!("ladder k={k} mismatch={mm} doubled={db}: decide={d} in {:?}", t0.elapsed());
        }
    }
}
