//! One PASS/FAIL line per acceptance criterion. Expected values are either
//! closed forms of the standard examples or come from the oracles in
//! `common`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use stringy::cone::Cone;
use stringy::ehrhart::check_all_faces;
use stringy::hypersurface::HypersurfaceContext;
use stringy::mirror::{
    check_hodge_symmetry, check_poincare, hodge_diamond, verify_mirror_duality, MirrorReport,
};
use stringy::poly::{poly, LaurentPoly2};
use stringy::poset::GradedPoset;
use stringy::stanley::{b_poly, g_poly, h_poly, verify_all_intervals};
use stringy::Result;

fn random_cones(seed: u64, n: usize, dim: usize, npts: usize, range: i64) -> Vec<Cone> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| polytope_cone(&random_polytope(&mut rng, dim, npts, range)))
        .collect()
}

fn cayley(nef: &stringy::mirror::NefPartition) -> Cone {
    stringy::mirror::CayleyData::new(nef.clone())
        .unwrap()
        .cone()
        .clone()
}

/// Every cone used by the per-face criteria, with the duals of the Cayley
/// cones.
fn test_cones() -> Vec<(String, Cone)> {
    let mut out = Vec::new();
    for k in 3..=8 {
        out.push((format!("{k}-gon"), polygon_cone(k)));
    }
    for (name, nef) in [
        ("quintic", quintic()),
        ("cubic", cubic()),
        ("ci22", ci22()),
        ("quartic", quartic()),
    ] {
        let c = cayley(&nef);
        out.push((format!("{name} dual"), c.dual()));
        out.push((name.to_string(), c));
    }
    for (i, c) in random_cones(31, 6, 3, 6, 2).into_iter().enumerate() {
        out.push((format!("random {i}"), c));
    }
    out
}

fn criterion1() -> Result<bool> {
    let mut ok = true;
    for k in 3..=8i64 {
        let p = polygon_cone(k as usize).face_lattice().poset;
        let b = poly(&format!(
            "1 - {k}*u + {}*u*v + {k}*u^2 - {}*u^2*v - u^3",
            k - 3,
            k - 3
        ));
        ok &= b_poly(&p)? == b;
        ok &= g_poly(&p)? == LaurentPoly2::from_coeffs(&[1, k - 3]);
        ok &= h_poly(&p)? == LaurentPoly2::from_coeffs(&[1, k - 2, 1]);
    }
    for d in 0..=6 {
        ok &=
            b_poly(&GradedPoset::boolean(d))? == LaurentPoly2::from_coeffs(&[1, -1]).pow(d as u32);
    }
    Ok(ok)
}

fn criterion2() -> Result<bool> {
    let mut cones: Vec<Cone> = (3..=8).map(polygon_cone).collect();
    cones.push(cayley(&quintic()));
    cones.push(cayley(&ci22()));
    cones.extend(random_cones(21, 20, 3, 6, 2));
    let mut ok = true;
    for c in &cones {
        ok &= verify_all_intervals(&c.face_lattice().poset)?.all_hold();
    }
    Ok(ok)
}

fn criterion3() -> Result<bool> {
    let mut ok = true;
    for (_, c) in test_cones() {
        ok &= check_all_faces(&c, c.rank() as u64 + 2)?;
    }
    Ok(ok)
}

fn criterion4() -> Result<bool> {
    let mut ok = true;
    for (_, c) in test_cones() {
        if !c.is_gorenstein() {
            continue;
        }
        let mut ctx = HypersurfaceContext::new(c)?;
        ok &= ctx.verify_recursion()?;
        ok &= ctx.check_all_specializations()?;
        // e_prim refuses to return a non-homogeneous result
        ok &= ctx.rank() < 2 || ctx.e_prim().is_ok();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..10 {
        let pts = random_polytope(&mut rng, 2, 6, 3);
        let (g, b) = pick(&pts);
        let expect = LaurentPoly2::uv() - (LaurentPoly2::u() + LaurentPoly2::v()).scale(&g.into())
            + LaurentPoly2::constant(1 - b);
        ok &= HypersurfaceContext::new(polytope_cone(&pts))?.e_affine_top()? == expect;
    }
    Ok(ok)
}

fn criterion5() -> Result<bool> {
    let h21 = simplex_points(4, 1) as i64 - 25;
    let h11 = 1i64;
    let r = verify_mirror_duality(&quintic())?;
    let d = &r.diamond_v;
    Ok(d.get(1, 1) == &BigInt::from(h11)
        && d.get(2, 1) == &BigInt::from(h21)
        && d.euler() == BigInt::from(2 * (h11 - h21))
        && d.is_hodge_symmetric()
        && d.is_serre_symmetric())
}

fn mirror_cases() -> Result<Vec<MirrorReport>> {
    [quintic(), cubic(), ci22(), quartic()]
        .iter()
        .map(verify_mirror_duality)
        .collect()
}

fn criterion9() -> Result<bool> {
    let mut ok = true;
    for nef in [quintic(), cubic(), ci22(), quartic()] {
        let mut cd = stringy::mirror::CayleyData::new(nef)?;
        let k = cd.rank() as u64 + 2;
        ok &= cd.check_truncation(k)?;
    }
    for (_, c) in test_cones() {
        if !c.is_gorenstein() {
            continue;
        }
        let k = c.rank() as u64 + 2;
        ok &= HypersurfaceContext::new(c)?.check_truncation(k)?;
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let mut failed = false;
    let mut report = |n: usize, name: &str, f: &dyn Fn() -> Result<bool>| {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        let (tag, note) = match verdict {
            Ok(true) => ("PASS", String::new()),
            Ok(false) => ("FAIL", String::new()),
            Err(e) => ("FAIL", format!(" ({e})")),
        };
        failed |= tag == "FAIL";
        println!("criterion {n}: {tag} {name} [{secs:.2}s]{note}");
    };
    report(1, "poset examples", &criterion1);
    report(2, "interval identities", &criterion2);
    report(3, "Ehrhart reciprocity", &criterion3);
    report(4, "hypersurface suite", &criterion4);
    report(5, "quintic Hodge numbers", &criterion5);
    report(6, "mirror duality", &|| {
        Ok(mirror_cases()?.iter().all(|r| r.duality))
    });
    report(7, "two-path consistency", &|| {
        Ok(mirror_cases()?.iter().all(|r| r.v_form))
    });
    report(8, "structural properties", &|| {
        let mut ok = true;
        for r in mirror_cases()? {
            for e in [&r.e_st_v, &r.e_st_w] {
                ok &= check_poincare(e, r.dim as i32)
                    && check_hodge_symmetry(e)
                    && hodge_diamond(e, r.dim as usize)?.is_nonnegative();
            }
        }
        Ok(ok)
    });
    report(9, "truncation", &criterion9);
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
