//! Test data and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use stringy::cone::{Cone, FaceLattice, Polytope};
use stringy::lattice::LatticeVector;
use stringy::mirror::NefPartition;

pub fn vecs(pts: &[&[i64]]) -> Vec<LatticeVector> {
    pts.iter().map(|c| LatticeVector::from_i64(c)).collect()
}

pub fn cone(rank: usize, gens: &[&[i64]]) -> Cone {
    Cone::from_generators(rank, &vecs(gens)).unwrap()
}

/// Cone over a convex k-gon at height 1.
pub fn polygon_cone(k: usize) -> Cone {
    let gens: Vec<LatticeVector> = (0..k as i64)
        .map(|i| LatticeVector::from_i64(&[1, i, i * i]))
        .collect();
    Cone::from_generators(3, &gens).unwrap()
}

pub fn polytope_cone(pts: &[Vec<i64>]) -> Cone {
    let rank = pts[0].len();
    let v: Vec<LatticeVector> = pts.iter().map(|p| LatticeVector::from_i64(p)).collect();
    Polytope::from_points(rank, &v)
        .unwrap()
        .cone_over()
        .unwrap()
}

/// Convex hull of random points in `[-range, range]^dim`, retried until it is
/// full-dimensional.
pub fn random_polytope(rng: &mut ChaCha8Rng, dim: usize, npts: usize, range: i64) -> Vec<Vec<i64>> {
    loop {
        let pts: Vec<Vec<i64>> = (0..npts)
            .map(|_| (0..dim).map(|_| rng.gen_range(-range..=range)).collect())
            .collect();
        let v: Vec<LatticeVector> = pts.iter().map(|p| LatticeVector::from_i64(p)).collect();
        if let Ok(p) = Polytope::from_points(dim, &v) {
            if p.dim() == dim {
                return p.vertices().iter().map(to_i64).collect();
            }
        }
    }
}

pub fn to_i64(v: &LatticeVector) -> Vec<i64> {
    v.coords()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Interior point counts of degree `k` for every face at once: each lattice
/// point of degree `k` in the cone is assigned to the face cut out by the
/// facets it lies on. Brute force over a box in all but one coordinate.
pub fn classify(cone: &Cone, lattice: &FaceLattice, k: i64) -> Vec<u64> {
    let n = to_i64(
        &cone
            .degree_form()
            .expect("Gorenstein")
            .clone()
            .into_vector(),
    );
    let gens: Vec<Vec<i64>> = cone.generators().iter().map(to_i64).collect();
    let facets: Vec<Vec<i64>> = cone
        .facets()
        .iter()
        .map(|f| to_i64(&f.clone().into_vector()))
        .collect();
    let d = cone.rank();
    let pivot = (0..d).find(|&j| n[j] != 0).unwrap();
    let free: Vec<usize> = (0..d).filter(|&j| j != pivot).collect();
    let lo: Vec<i64> = free
        .iter()
        .map(|&j| k * gens.iter().map(|g| g[j]).min().unwrap())
        .collect();
    let hi: Vec<i64> = free
        .iter()
        .map(|&j| k * gens.iter().map(|g| g[j]).max().unwrap())
        .collect();
    let mut out = vec![0u64; lattice.len()];
    let mut c = lo.clone();
    let mut m = vec![0i64; d];
    loop {
        let mut rest = k;
        for (i, &j) in free.iter().enumerate() {
            m[j] = c[i];
            rest -= n[j] * c[i];
        }
        if rest % n[pivot] == 0 {
            m[pivot] = rest / n[pivot];
            let values: Vec<i64> = facets.iter().map(|f| dot(f, &m)).collect();
            if values.iter().all(|&x| x >= 0) {
                let incident = fixedbitset_of(&values);
                let face = lattice.find(&incident).expect("a face");
                out[face] += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == c.len() {
                return out;
            }
            if c[i] < hi[i] {
                c[i] += 1;
                break;
            }
            c[i] = lo[i];
            i += 1;
        }
    }
}

fn fixedbitset_of(values: &[i64]) -> fixedbitset::FixedBitSet {
    let mut s = fixedbitset::FixedBitSet::with_capacity(values.len());
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            s.insert(i);
        }
    }
    s
}

/// Genus and number of boundary points of a lattice polygon, from Pick's
/// theorem: `2A = 2g + b - 2`.
pub fn pick(vertices: &[Vec<i64>]) -> (i64, i64) {
    let cx: f64 = vertices.iter().map(|v| v[0] as f64).sum::<f64>() / vertices.len() as f64;
    let cy: f64 = vertices.iter().map(|v| v[1] as f64).sum::<f64>() / vertices.len() as f64;
    let mut ordered = vertices.to_vec();
    ordered.sort_by(|a, b| {
        let ta = (a[1] as f64 - cy).atan2(a[0] as f64 - cx);
        let tb = (b[1] as f64 - cy).atan2(b[0] as f64 - cx);
        ta.partial_cmp(&tb).unwrap()
    });
    let mut twice_area = 0i64;
    let mut boundary = 0i64;
    for i in 0..ordered.len() {
        let p = &ordered[i];
        let q = &ordered[(i + 1) % ordered.len()];
        twice_area += p[0] * q[1] - p[1] * q[0];
        boundary += (q[0] - p[0]).gcd(&(q[1] - p[1]));
    }
    let twice_area = twice_area.abs();
    let interior = (twice_area - boundary + 2) / 2;
    (interior, boundary)
}

/// Lattice points of a simplex `{x : x_i >= -1, sum x_i <= k}`, by brute
/// force.
pub fn simplex_points(dim: usize, k: i64) -> usize {
    let mut count = 0;
    let mut c = vec![-1i64; dim];
    loop {
        if c.iter().sum::<i64>() <= k {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == dim {
                return count;
            }
            if c[i] < k + dim as i64 {
                c[i] += 1;
                break;
            }
            c[i] = -1;
            i += 1;
        }
    }
}

pub fn nef(rank: usize, summands: &[&[&[i64]]]) -> NefPartition {
    let parts: Vec<Vec<LatticeVector>> = summands.iter().map(|s| vecs(s)).collect();
    NefPartition::from_points(rank, &parts).unwrap()
}

pub fn quintic() -> NefPartition {
    nef(
        4,
        &[&[
            &[-1, -1, -1, -1],
            &[4, -1, -1, -1],
            &[-1, 4, -1, -1],
            &[-1, -1, 4, -1],
            &[-1, -1, -1, 4],
        ]],
    )
}

pub fn cubic() -> NefPartition {
    nef(2, &[&[&[-1, -1], &[2, -1], &[-1, 2]]])
}

pub fn ci22() -> NefPartition {
    nef(
        3,
        &[
            &[&[-1, -1, 0], &[-1, -1, 2], &[-1, 1, 0], &[1, -1, 0]],
            &[&[0, 0, -1], &[0, 0, 1], &[2, 0, -1], &[0, 2, -1]],
        ],
    )
}

pub fn quartic() -> NefPartition {
    nef(
        3,
        &[&[&[-1, -1, -1], &[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]],
    )
}

/// The cone over `Δ` of a one-summand partition.
pub fn hypersurface_cone(nef: &NefPartition) -> Cone {
    nef.summands()[0].cone_over().unwrap()
}
