//! Lattice point counts by degree in the faces of a Gorenstein cone, and
//! the `S`/`T` polynomials built from them.
//!
//! For a face `F` of dimension `ρ` with degree form `n`,
//! `S(F, t) = (1 - t)^ρ sum_{m in F} t^<m, n>` and `T` is the same sum over
//! the relative interior. Both are polynomials; `S` has degree below `ρ`.
//! The zero face has `S = T = 1`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, ToPrimitive, Zero};

use crate::cone::{Cone, FaceLattice};
use crate::error::{Error, Result};
use crate::lattice::{self, dot};
use crate::poly::{LaurentPoly2, Monomial};

fn small(c: &BigInt) -> Result<i64> {
    c.to_i64().ok_or(Error::Overflow)
}

/// Number of lattice points of degree `k` in a face and in its relative
/// interior.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PointCounts {
    pub total: u64,
    pub interior: u64,
}

/// Enumerates the lattice points of one face, degree by degree.
///
/// A point `m` of the face is recovered from `(<m, n>, m_J)` for a set `J` of
/// `ρ - 1` ambient coordinates on which the face projects injectively:
/// `D m = P (k, m_J)`. The `m_J` run over the box spanned by `k` times the
/// face generators.
#[derive(Clone, Debug)]
struct FaceEnumerator {
    dim: usize,
    lo: Vec<i64>,
    hi: Vec<i64>,
    lift: Vec<Vec<i64>>,
    denom: i64,
    // facets of the cone not containing the face
    walls: Vec<Vec<i64>>,
}

impl FaceEnumerator {
    fn new(cone: &Cone, lattice: &FaceLattice, face: usize, n: &[BigInt]) -> Result<Self> {
        let f = lattice.face(face);
        let gens: Vec<Vec<BigInt>> = f
            .generators
            .ones()
            .map(|i| cone.generators()[i].coords().to_vec())
            .collect();
        let walls = (0..cone.facets().len())
            .filter(|j| !f.incident.contains(*j))
            .map(|j| cone.facets()[j].coords().iter().map(small).collect())
            .collect::<Result<Vec<Vec<i64>>>>()?;
        let rho = f.dim;
        if rho == 0 {
            return Ok(FaceEnumerator {
                dim: 0,
                lo: Vec::new(),
                hi: Vec::new(),
                lift: Vec::new(),
                denom: 1,
                walls,
            });
        }
        let d = cone.rank();
        let basis: Vec<Vec<BigInt>> = lattice::independent_rows(&gens)
            .into_iter()
            .map(|i| gens[i].clone())
            .collect();
        debug_assert_eq!(basis.len(), rho);

        // rows of the projection restricted to the face: (n, e_j for j in J)
        let restrict =
            |form: &[BigInt]| -> Vec<BigInt> { basis.iter().map(|b| dot(b, form)).collect() };
        let span = |j: usize| {
            let lo = gens.iter().map(|g| &g[j]).min().unwrap();
            let hi = gens.iter().map(|g| &g[j]).max().unwrap();
            hi - lo
        };
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&j| span(j));
        let mut rows = vec![restrict(n)];
        let mut coords = Vec::new();
        for j in order {
            if rows.len() == rho {
                break;
            }
            let mut e = vec![BigInt::zero(); d];
            e[j] = BigInt::one();
            rows.push(restrict(&e));
            if lattice::rank(&rows) == rows.len() {
                coords.push(j);
            } else {
                rows.pop();
            }
        }
        if rows.len() != rho {
            return Err(Error::integrity("face does not project injectively"));
        }
        // m = B^T (A B^T)^{-1} (k, c), where `rows` is A B^T
        let inv =
            lattice::inverse(&rows).ok_or_else(|| Error::integrity("singular face projection"))?;
        let denom = inv
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut lift = vec![vec![0i64; rho]; d];
        for (i, row) in lift.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                let mut acc = BigInt::zero();
                for (b, basis_vec) in basis.iter().enumerate() {
                    // (A B^T)^{-1} is indexed [basis][row]
                    let q = &inv[b][c];
                    acc += &basis_vec[i] * q.numer() * (&denom / q.denom());
                }
                *entry = small(&acc)?;
            }
        }
        let lo = coords
            .iter()
            .map(|&j| small(gens.iter().map(|g| &g[j]).min().unwrap()))
            .collect::<Result<_>>()?;
        let hi = coords
            .iter()
            .map(|&j| small(gens.iter().map(|g| &g[j]).max().unwrap()))
            .collect::<Result<_>>()?;
        Ok(FaceEnumerator {
            dim: rho,
            lo,
            hi,
            lift,
            denom: small(&denom)?,
            walls,
        })
    }

    fn count(&self, k: u64) -> Result<PointCounts> {
        if self.dim == 0 {
            let n = u64::from(k == 0);
            return Ok(PointCounts {
                total: n,
                interior: n,
            });
        }
        let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
        let lo: Vec<i64> = self
            .lo
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        let hi: Vec<i64> = self
            .hi
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        let mut c = lo.clone();
        let mut out = PointCounts::default();
        let mut m = vec![0i64; self.lift.len()];
        loop {
            if let Some(interior) = self.classify(k, &c, &mut m)? {
                out.total += 1;
                out.interior += u64::from(interior);
            }
            // odometer step
            let mut i = 0;
            loop {
                if i == c.len() {
                    return Ok(out);
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

    /// `None` if `(k, c)` is not a lattice point of the face, otherwise
    /// whether it lies in the relative interior.
    fn classify(&self, k: i64, c: &[i64], m: &mut [i64]) -> Result<Option<bool>> {
        for (row, out) in self.lift.iter().zip(m.iter_mut()) {
            let mut acc = row[0].checked_mul(k).ok_or(Error::Overflow)?;
            for (a, x) in row[1..].iter().zip(c) {
                acc = a
                    .checked_mul(*x)
                    .and_then(|p| acc.checked_add(p))
                    .ok_or(Error::Overflow)?;
            }
            if acc % self.denom != 0 {
                return Ok(None);
            }
            *out = acc / self.denom;
        }
        let mut interior = true;
        for w in &self.walls {
            let mut acc = 0i64;
            for (a, x) in w.iter().zip(m.iter()) {
                acc = a
                    .checked_mul(*x)
                    .and_then(|p| acc.checked_add(p))
                    .ok_or(Error::Overflow)?;
            }
            if acc < 0 {
                return Ok(None);
            }
            interior &= acc > 0;
        }
        Ok(Some(interior))
    }
}

/// Per-face point counts and `S`/`T` polynomials of one Gorenstein cone.
///
/// Faces are addressed by their index in the cone's [`FaceLattice`]; a cache
/// must only ever be used with one cone.
#[derive(Clone, Debug, Default)]
pub struct EhrhartCache {
    enumerators: HashMap<usize, FaceEnumerator>,
    counts: HashMap<usize, Vec<PointCounts>>,
    s: HashMap<usize, LaurentPoly2>,
    t: HashMap<usize, LaurentPoly2>,
}

impl EhrhartCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Counts in degrees `0..=k` of face `face`.
    pub fn counts(
        &mut self,
        cone: &Cone,
        lattice: &FaceLattice,
        face: usize,
        k: u64,
    ) -> Result<Vec<PointCounts>> {
        let have = self.counts.get(&face).map_or(0, Vec::len) as u64;
        if have <= k {
            if !self.enumerators.contains_key(&face) {
                let n = cone.degree_form().ok_or(Error::NotGorenstein)?;
                let e = FaceEnumerator::new(cone, lattice, face, n.coords())?;
                self.enumerators.insert(face, e);
            }
            let e = &self.enumerators[&face];
            let mut fresh = Vec::new();
            for j in have..=k {
                fresh.push(e.count(j)?);
            }
            self.counts.entry(face).or_default().extend(fresh);
        }
        Ok(self.counts[&face][..=k as usize].to_vec())
    }

    fn from_counts(
        &mut self,
        cone: &Cone,
        lattice: &FaceLattice,
        face: usize,
        interior: bool,
    ) -> Result<LaurentPoly2> {
        let rho = lattice.face(face).dim;
        if rho == 0 {
            return Ok(LaurentPoly2::one());
        }
        let counts = self.counts(cone, lattice, face, rho as u64)?;
        let n: Vec<BigInt> = counts
            .iter()
            .map(|c| BigInt::from(if interior { c.interior } else { c.total }))
            .collect();
        let mut coeffs = Vec::with_capacity(rho + 1);
        for j in 0..=rho {
            let mut acc = BigInt::zero();
            for i in 0..=j {
                let term = binomial(BigInt::from(rho), BigInt::from(j - i)) * &n[i];
                if (j - i) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            coeffs.push(acc);
        }
        if !interior && !coeffs[rho].is_zero() {
            return Err(Error::integrity("S-polynomial has degree ρ"));
        }
        if interior && !n[0].is_zero() {
            return Err(Error::integrity(
                "origin in the relative interior of a nonzero face",
            ));
        }
        Ok(LaurentPoly2::from_coeffs(&coeffs))
    }

    /// `S(F, t)`.
    pub fn s_poly(
        &mut self,
        cone: &Cone,
        lattice: &FaceLattice,
        face: usize,
    ) -> Result<LaurentPoly2> {
        if let Some(s) = self.s.get(&face) {
            return Ok(s.clone());
        }
        let s = self.from_counts(cone, lattice, face, false)?;
        self.s.insert(face, s.clone());
        Ok(s)
    }

    /// `T(F, t)`.
    pub fn t_poly(
        &mut self,
        cone: &Cone,
        lattice: &FaceLattice,
        face: usize,
    ) -> Result<LaurentPoly2> {
        if let Some(t) = self.t.get(&face) {
            return Ok(t.clone());
        }
        let t = self.from_counts(cone, lattice, face, true)?;
        self.t.insert(face, t.clone());
        Ok(t)
    }

    /// `S(F, t) = t^ρ T(F, 1/t)`.
    pub fn check_reciprocity(
        &mut self,
        cone: &Cone,
        lattice: &FaceLattice,
        face: usize,
    ) -> Result<bool> {
        let rho = lattice.face(face).dim as i32;
        let s = self.s_poly(cone, lattice, face)?;
        let t = self.t_poly(cone, lattice, face)?;
        Ok(s == t.subst_t(Monomial::new(-1, 0)).shift(rho, 0))
    }

    /// Compares interior counts in degrees `0..=k` with the expansion of
    /// `T(F, s) / (1 - s)^ρ`.
    pub fn check_series(
        &mut self,
        cone: &Cone,
        lattice: &FaceLattice,
        face: usize,
        k: u64,
    ) -> Result<bool> {
        let rho = lattice.face(face).dim;
        let t = self.t_poly(cone, lattice, face)?.univariate_coeffs()?;
        let counts = self.counts(cone, lattice, face, k)?;
        for (j, c) in counts.iter().enumerate() {
            let mut predicted = BigInt::zero();
            for (i, ti) in t.iter().enumerate().take(j + 1) {
                let ways = if rho == 0 {
                    BigInt::from(u8::from(i == j))
                } else {
                    binomial(BigInt::from(j - i + rho - 1), BigInt::from(rho - 1))
                };
                predicted += ti * ways;
            }
            if predicted != BigInt::from(c.interior) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `S(C, t)` of a whole Gorenstein cone.
pub fn s_poly(cone: &Cone) -> Result<LaurentPoly2> {
    let lattice = cone.face_lattice();
    EhrhartCache::new().s_poly(cone, &lattice, lattice.top())
}

/// `T(C, t)` of a whole Gorenstein cone.
pub fn t_poly(cone: &Cone) -> Result<LaurentPoly2> {
    let lattice = cone.face_lattice();
    EhrhartCache::new().t_poly(cone, &lattice, lattice.top())
}

/// Reciprocity and the truncated series check on every face of `cone`.
pub fn check_all_faces(cone: &Cone, series_degree: u64) -> Result<bool> {
    let lattice = cone.face_lattice();
    let mut cache = EhrhartCache::new();
    for face in 0..lattice.len() {
        if !cache.check_reciprocity(cone, &lattice, face)?
            || !cache.check_series(cone, &lattice, face, series_degree)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}
