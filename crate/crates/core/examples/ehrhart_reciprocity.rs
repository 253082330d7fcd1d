//! S- and T-polynomials of every face of a Gorenstein cone, and the
//! reciprocity S(t) = t^dim T(1/t) between them.

use stringy::cone::Cone;
use stringy::ehrhart::EhrhartCache;
use stringy::lattice::LatticeVector;

fn main() -> stringy::Result<()> {
    // cone over a lattice pentagon at height 1
    let pts: [&[i64]; 5] = [&[1, 0, 0], &[1, 2, 0], &[1, 3, 1], &[1, 1, 3], &[1, -1, 1]];
    let gens: Vec<LatticeVector> = pts.iter().map(|c| LatticeVector::from_i64(c)).collect();
    let cone = Cone::from_generators(3, &gens)?;
    let lattice = cone.face_lattice();
    let mut cache = EhrhartCache::new();

    println!("degree form: {}", cone.degree_form().expect("Gorenstein"));
    println!("reflexive index: {:?}", cone.reflexive_index());
    for x in 0..lattice.len() {
        let dim = lattice.face(x).dim;
        let s = cache.s_poly(&cone, &lattice, x)?;
        let t = cache.t_poly(&cone, &lattice, x)?;
        let ok = cache.check_reciprocity(&cone, &lattice, x)?;
        println!(
            "face {x:2} dim {dim}: S = {:<16} T = {:<20} reciprocity {ok}",
            s.display_t(),
            t.display_t()
        );
    }

    let counts = cache.counts(&cone, &lattice, lattice.top(), 6)?;
    let totals: Vec<u64> = counts.iter().map(|c| c.total).collect();
    let interior: Vec<u64> = counts.iter().map(|c| c.interior).collect();
    println!("points by degree:   {totals:?}");
    println!("interior by degree: {interior:?}");
    println!(
        "series check to degree 6: {}",
        cache.check_series(&cone, &lattice, lattice.top(), 6)?
    );
    Ok(())
}
