//! Cones, their duals, face lattices and Gorenstein data.

use stringy::cone::Cone;
use stringy::lattice::LatticeVector;

fn show(name: &str, rank: usize, gens: &[&[i64]]) -> stringy::Result<()> {
    let g: Vec<LatticeVector> = gens.iter().map(|c| LatticeVector::from_i64(c)).collect();
    let cone = Cone::from_generators(rank, &g)?;
    let dual = cone.dual();
    println!("{name}");
    let rays: Vec<String> = cone.generators().iter().map(|v| v.to_string()).collect();
    let normals: Vec<String> = cone.facets().iter().map(|f| f.to_string()).collect();
    println!("  rays:          {}", rays.join(" "));
    println!("  facet normals: {}", normals.join(" "));
    println!("  f-vector:      {:?}", cone.face_lattice().f_vector());
    match cone.degree_form() {
        Some(n) => println!("  Gorenstein, degree form {n}"),
        None => println!("  not Gorenstein"),
    }
    match dual.degree_form() {
        Some(m) => println!("  dual Gorenstein, degree form {m}"),
        None => println!("  dual not Gorenstein"),
    }
    if let Some(r) = cone.reflexive_index() {
        println!("  reflexive of index {r}");
    }
    Ok(())
}

fn main() -> stringy::Result<()> {
    show("orthant", 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])?;
    show(
        "cone over the unit square",
        3,
        &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]],
    )?;
    show(
        "cone over [-1, 1]^2",
        3,
        &[&[1, -1, -1], &[1, 1, -1], &[1, -1, 1], &[1, 1, 1]],
    )?;
    show("cone over [0, 3]", 2, &[&[1, 0], &[1, 3]])?;
    match Cone::from_generators(
        2,
        &[
            LatticeVector::from_i64(&[1, 0]),
            LatticeVector::from_i64(&[-1, 0]),
            LatticeVector::from_i64(&[0, 1]),
        ],
    ) {
        Ok(_) => println!("half-plane accepted?"),
        Err(e) => println!("half-plane rejected: {e}"),
    }
    Ok(())
}
