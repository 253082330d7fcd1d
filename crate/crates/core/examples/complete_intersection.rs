//! A complete intersection of two quadrics in P^3 (an elliptic curve) from a
//! nef-partition with two summands: Cayley cone, dual nef-partition and
//! stringy E-polynomial.

use stringy::lattice::LatticeVector;
use stringy::mirror::{check_poincare, hodge_diamond, CayleyData, NefPartition};

fn summand(pts: &[&[i64]]) -> Vec<LatticeVector> {
    pts.iter().map(|c| LatticeVector::from_i64(c)).collect()
}

fn main() -> stringy::Result<()> {
    let nef = NefPartition::from_points(
        3,
        &[
            summand(&[&[-1, -1, 0], &[-1, -1, 2], &[-1, 1, 0], &[1, -1, 0]]),
            summand(&[&[0, 0, -1], &[0, 0, 1], &[2, 0, -1], &[0, 2, -1]]),
        ],
    )?;
    let mut cd = CayleyData::new(nef)?;
    println!("Cayley cone rank {} with index {}", cd.rank(), cd.index());
    println!("f-vector of C:  {:?}", cd.lattice().f_vector());
    println!("f-vector of C*: {:?}", cd.dual_lattice().f_vector());
    println!("dual nef-partition: {}", cd.dual_partition()?);

    let ambient = cd.e_st_toric()?;
    let e = cd.e_st_variety()?;
    println!("E_st(P) = {ambient}");
    println!("E_st(V) = {e}");
    println!("Poincare duality: {}", check_poincare(&e, 1));
    println!("V-form cross-check: {}", cd.v_form_crosscheck()?);
    print!("{}", hodge_diamond(&e, 1)?);
    Ok(())
}
