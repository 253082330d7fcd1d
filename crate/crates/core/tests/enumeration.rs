mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use stringy::cone::Cone;
use stringy::ehrhart::EhrhartCache;
use stringy::lattice::LatticeVector;
use stringy::poly::LaurentPoly2;

/// Per-face counts must agree with a single pass that sorts every point of
/// the cone into the face containing it in its relative interior; totals of
/// a face are the sums over its subfaces.
fn agrees_with_classification(cone: &Cone, max_k: i64) {
    let lattice = cone.face_lattice();
    let mut cache = EhrhartCache::new();
    for k in 0..=max_k {
        let interior = classify(cone, &lattice, k);
        for x in 0..lattice.len() {
            let counts = cache.counts(cone, &lattice, x, k as u64).unwrap()[k as usize];
            let total: u64 = lattice.poset.down_set(x).ones().map(|y| interior[y]).sum();
            assert_eq!(
                counts.interior, interior[x],
                "interior, face {x}, degree {k}"
            );
            assert_eq!(counts.total, total, "total, face {x}, degree {k}");
        }
    }
}

#[test]
fn polygon_cones_match_classification() {
    for k in 3..=8 {
        agrees_with_classification(&polygon_cone(k), 4);
    }
}

#[test]
fn big_simplices_match_classification() {
    agrees_with_classification(&hypersurface_cone(&quartic()), 4);
    agrees_with_classification(&hypersurface_cone(&quintic()), 2);
    agrees_with_classification(&hypersurface_cone(&quintic()).dual(), 4);
}

#[test]
fn random_polytopes_match_classification() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..6 {
        let pts = random_polytope(&mut rng, 3, 6, 2);
        agrees_with_classification(&polytope_cone(&pts), 3);
    }
}

#[test]
fn quintic_simplex_has_126_points() {
    let c = hypersurface_cone(&quintic());
    let lattice = c.face_lattice();
    let counts = EhrhartCache::new()
        .counts(&c, &lattice, lattice.top(), 1)
        .unwrap();
    assert_eq!(counts[1].total as usize, simplex_points(4, 1));
    assert_eq!(counts[1].total, 126);
    assert_eq!(counts[1].interior, 1);
}

#[test]
fn h_star_of_quintic_simplex() {
    let c = hypersurface_cone(&quintic());
    let s = stringy::ehrhart::s_poly(&c).unwrap();
    assert_eq!(s, LaurentPoly2::from_coeffs(&[1, 121, 381, 121, 1]));
}

/// Multiset of `(dim, S, T)` over all faces.
fn face_data(cone: &Cone) -> Vec<(usize, String, String)> {
    let lattice = cone.face_lattice();
    let mut cache = EhrhartCache::new();
    let mut out: Vec<(usize, String, String)> = (0..lattice.len())
        .map(|x| {
            (
                lattice.face(x).dim,
                cache.s_poly(cone, &lattice, x).unwrap().to_string(),
                cache.t_poly(cone, &lattice, x).unwrap().to_string(),
            )
        })
        .collect();
    out.sort();
    out
}

/// Random unimodular matrix as a product of elementary row operations.
fn unimodular(d: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % d, j % d);
        if i == j {
            m.swap(i, (i + 1) % d);
            continue;
        }
        for col in 0..d {
            m[i][col] += c * m[j][col];
        }
    }
    m
}

fn transform(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_invariant_under_unimodular_maps(
        seed in 0u64..1000,
        ops in proptest::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..6),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = random_polytope(&mut rng, 2, 5, 2);
        let c = polytope_cone(&pts);
        let m = unimodular(3, &ops);
        let gens: Vec<LatticeVector> = c
            .generators()
            .iter()
            .map(|g| LatticeVector::from_i64(&transform(&m, &to_i64(g))))
            .collect();
        let image = Cone::from_generators(3, &gens).unwrap();
        prop_assert_eq!(face_data(&c), face_data(&image));
    }
}
