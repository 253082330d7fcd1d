mod common;

use num_bigint::BigInt;

use common::*;
use stringy::error::Error;
use stringy::mirror::{dual_nef_partition, hodge_diamond, verify_mirror_duality, CayleyData};
use stringy::poly::poly;

#[test]
fn quintic_hodge_numbers() {
    // h21 counts quintic monomials modulo the 24-dimensional PGL(5)
    // and the overall scale
    let monomials = simplex_points(4, 1) as i64;
    assert_eq!(monomials, 126);
    let h21 = monomials - 25;
    let h11 = 1;
    let report = verify_mirror_duality(&quintic()).unwrap();
    let v = &report.diamond_v;
    assert_eq!(v.get(1, 1), &BigInt::from(h11));
    assert_eq!(v.get(2, 1), &BigInt::from(h21));
    assert_eq!(v.get(1, 2), &BigInt::from(h21));
    assert_eq!(v.get(3, 0), &BigInt::from(1));
    assert_eq!(v.get(1, 0), &BigInt::from(0));
    assert_eq!(v.euler(), BigInt::from(2 * (h11 - h21)));
    assert_eq!(report.diamond_w, v.mirror());
    assert!(report.all_hold());
}

#[test]
fn quartic_k3() {
    let report = verify_mirror_duality(&quartic()).unwrap();
    // every K3 has h20 = 1 and Euler number 24, hence h11 = 20
    let k3 = poly("1 + u^2 + v^2 + 20*u*v + u^2*v^2");
    assert_eq!(report.e_st_v, k3);
    assert_eq!(report.e_st_w, k3);
    assert_eq!(report.diamond_v.euler(), BigInt::from(24));
    assert!(report.all_hold());
}

#[test]
fn intersection_of_two_quadrics() {
    let nef = ci22();
    let mut cd = CayleyData::new(nef.clone()).unwrap();
    assert_eq!(cd.index(), 2);
    assert_eq!(cd.e_st_variety().unwrap(), poly("1 - u - v + u*v"));
    // P3 itself: 1 + uv + (uv)^2 + (uv)^3 times the P1 of the bundle
    assert_eq!(
        cd.e_st_toric().unwrap(),
        poly("1 + 2*u*v + 2*u^2*v^2 + 2*u^3*v^3 + u^4*v^4")
    );
    let dual = cd.dual_partition().unwrap();
    let first: Vec<Vec<i64>> = dual.summands()[0].vertices().iter().map(to_i64).collect();
    let second: Vec<Vec<i64>> = dual.summands()[1].vertices().iter().map(to_i64).collect();
    assert_eq!(first, vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0]]);
    assert_eq!(second, vec![vec![-1, -1, -1], vec![0, 0, 0], vec![0, 0, 1]]);
    assert_eq!(dual_nef_partition(&dual).unwrap(), nef);
    assert!(verify_mirror_duality(&nef).unwrap().all_hold());
}

#[test]
fn plane_cubic() {
    let report = verify_mirror_duality(&cubic()).unwrap();
    assert_eq!(report.e_st_v, poly("1 - u - v + u*v"));
    assert!(report.all_hold());
    hodge_diamond(&report.e_st_v, 1).unwrap();
}

#[test]
fn quintic_ambient_is_p4() {
    let mut cd = CayleyData::new(quintic()).unwrap();
    assert_eq!(
        cd.e_st_toric().unwrap(),
        poly("1 + u*v + u^2*v^2 + u^3*v^3 + u^4*v^4")
    );
}

#[test]
fn summands_must_contain_the_origin() {
    let shifted = nef(2, &[&[&[0, -1], &[3, -1], &[0, 2]]]);
    let cd = CayleyData::new(shifted).unwrap();
    assert!(matches!(cd.dual_partition(), Err(Error::Structure(_))));
}

#[test]
fn non_nef_partitions_are_rejected() {
    let square = nef(2, &[&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]]);
    assert!(matches!(
        CayleyData::new(square),
        Err(Error::NotNefPartition(_))
    ));
    // two summands whose sum has no interior point
    let bad = nef(2, &[&[&[0, 0], &[1, 0]], &[&[0, 0], &[0, 1]]]);
    assert!(matches!(
        CayleyData::new(bad),
        Err(Error::NotNefPartition(_))
    ));
}
