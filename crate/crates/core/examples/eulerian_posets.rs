//! Toric g-, h- and B-polynomials of boolean lattices and of face posets of
//! cones over polygons, with the B-polynomial duality check.

use stringy::cone::Cone;
use stringy::lattice::LatticeVector;
use stringy::poset::GradedPoset;
use stringy::stanley::{b_poly, check_b_duality, g_poly, h_lef, h_poly, verify_all_intervals};

fn main() -> stringy::Result<()> {
    for d in 1..=4 {
        let p = GradedPoset::boolean(d);
        println!(
            "boolean rank {d}: G = {}, H = {}, B = {}",
            g_poly(&p)?.display_t(),
            h_poly(&p)?.display_t(),
            b_poly(&p)?
        );
    }

    for k in 3..=6i64 {
        // k points on the moment curve are in convex position
        let gens: Vec<LatticeVector> = (0..k)
            .map(|i| LatticeVector::from_i64(&[1, i, i * i]))
            .collect();
        let lattice = Cone::from_generators(3, &gens)?.face_lattice();
        let p = &lattice.poset;
        println!("cone over a {k}-gon, f-vector {:?}", lattice.f_vector());
        println!("  G     = {}", g_poly(p)?.display_t());
        println!("  H     = {}", h_poly(p)?.display_t());
        println!("  H_Lef = {}", h_lef(p)?.display_t());
        println!("  B     = {}", b_poly(p)?);
        println!("  B duality: {}", check_b_duality(p)?);
        let report = verify_all_intervals(p)?;
        println!(
            "  all identities on {} intervals: {}",
            report.intervals,
            report.all_hold()
        );
    }
    Ok(())
}
