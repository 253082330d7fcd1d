//! E-polynomials of generic hypersurfaces: a plane cubic curve and the
//! quintic threefold, with the recursion and specialization checks.

use stringy::cone::Polytope;
use stringy::hypersurface::HypersurfaceContext;
use stringy::lattice::LatticeVector;

fn report(name: &str, vertices: &[&[i64]]) -> stringy::Result<()> {
    let rank = vertices[0].len();
    let pts: Vec<LatticeVector> = vertices
        .iter()
        .map(|c| LatticeVector::from_i64(c))
        .collect();
    let mut ctx = HypersurfaceContext::from_polytope(&Polytope::from_points(rank, &pts)?)?;
    println!("{name}");
    println!("  E(Z)         = {}", ctx.e_affine_top()?);
    println!("  E_int(P)     = {}", ctx.e_int_toric());
    println!("  E_int(Zbar)  = {}", ctx.e_int_hypersurface()?);
    println!("  E_prim       = {}", ctx.e_prim()?);
    println!("  recursion holds: {}", ctx.verify_recursion()?);
    println!(
        "  specialization holds on all faces: {}",
        ctx.check_all_specializations()?
    );
    Ok(())
}

fn main() -> stringy::Result<()> {
    report("plane cubic", &[&[-1, -1], &[2, -1], &[-1, 2]])?;
    report("two points on a line", &[&[0], &[2]])?;
    report(
        "quintic threefold",
        &[
            &[-1, -1, -1, -1],
            &[4, -1, -1, -1],
            &[-1, 4, -1, -1],
            &[-1, -1, 4, -1],
            &[-1, -1, -1, 4],
        ],
    )?;
    Ok(())
}
