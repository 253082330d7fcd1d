//! Stringy Hodge numbers of the quintic threefold and its mirror, and the
//! mirror duality between them.

use stringy::lattice::LatticeVector;
use stringy::mirror::{verify_mirror_duality, NefPartition};

fn main() -> stringy::Result<()> {
    let simplex: [&[i64]; 5] = [
        &[-1, -1, -1, -1],
        &[4, -1, -1, -1],
        &[-1, 4, -1, -1],
        &[-1, -1, 4, -1],
        &[-1, -1, -1, 4],
    ];
    let pts: Vec<LatticeVector> = simplex.iter().map(|c| LatticeVector::from_i64(c)).collect();
    let nef = NefPartition::from_points(4, &[pts])?;
    let report = verify_mirror_duality(&nef)?;

    println!("mirror polytope: {}", report.dual);
    println!("E_st(V) = {}", report.e_st_v);
    println!("E_st(W) = {}", report.e_st_w);
    println!("quintic:\n{}", report.diamond_v);
    println!("mirror quintic:\n{}", report.diamond_w);
    println!(
        "h11 = {}, h21 = {}",
        report.diamond_v.get(1, 1),
        report.diamond_v.get(2, 1)
    );
    println!("euler number = {}", report.diamond_v.euler());
    println!("mirror duality: {}", report.duality);
    println!("V-form cross-check: {}", report.v_form);
    Ok(())
}
