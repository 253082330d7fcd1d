//! Nef-partitions, their Cayley cones, and string-theoretic E-polynomials
//! of the Calabi-Yau complete intersections they define.
//!
//! A nef-partition `Δ = Δ_1 + ... + Δ_r` in a rank `d` lattice is encoded by
//! the Cayley cone `C` in rank `d + r`, generated by `(e_i, w)` for `w` a
//! vertex of `Δ_i`. It is a nef-partition exactly when `C` is reflexive of
//! index `r`; the dual cone `C*` is then the Cayley cone of the dual
//! nef-partition `∇_1, ..., ∇_r`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cone::{Cone, FaceLattice, Polytope};
use crate::ehrhart::EhrhartCache;
use crate::error::{Error, Result};
use crate::hypersurface::HypersurfaceContext;
use crate::lattice::{LatticeVector, LinearForm};
use crate::poly::{LaurentPoly2, Monomial};

const U_OVER_V: Monomial = Monomial::new(1, -1);

/// Summands `Δ_1, ..., Δ_r` of a Minkowski decomposition, all in the same
/// rank `d` lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefPartition {
    rank: usize,
    summands: Vec<Polytope>,
}

impl NefPartition {
    /// Validates ranks only; whether the summands really form a
    /// nef-partition is decided by [`CayleyData::new`].
    pub fn new(rank: usize, summands: Vec<Polytope>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::NotNefPartition("no summands".into()));
        }
        for s in &summands {
            if s.rank() != rank {
                return Err(Error::Dimension {
                    expected: rank,
                    got: s.rank(),
                });
            }
        }
        Ok(NefPartition { rank, summands })
    }

    /// Each summand given as a list of points whose convex hull it is.
    pub fn from_points(rank: usize, summands: &[Vec<LatticeVector>]) -> Result<Self> {
        let polys = summands
            .iter()
            .map(|pts| Polytope::from_points(rank, pts))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, polys)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of summands `r`.
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> &[Polytope] {
        &self.summands
    }

    /// Dimension `d - r` of the complete intersection.
    pub fn cy_dim(&self) -> i64 {
        self.rank as i64 - self.summands.len() as i64
    }

    fn cayley_generators(&self) -> Vec<LatticeVector> {
        let r = self.summands.len();
        let mut gens = Vec::new();
        for (i, s) in self.summands.iter().enumerate() {
            for w in s.vertices() {
                let mut c = vec![BigInt::zero(); r];
                c[i] = BigInt::one();
                c.extend(w.coords().iter().cloned());
                gens.push(LatticeVector::new(c));
            }
        }
        gens
    }
}

impl fmt::Display for NefPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "conv{{")?;
            for (j, v) in s.vertices().iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// `(1, ..., 1, 0, ..., 0)` with `r` ones.
fn block_form(r: usize, d: usize) -> LinearForm {
    let mut c = vec![BigInt::one(); r];
    c.extend(std::iter::repeat(BigInt::zero()).take(d));
    LinearForm::new(c)
}

/// The Cayley cone of a nef-partition with its dual, both face lattices and
/// the caches used by the stringy E-polynomial formulas.
#[derive(Clone, Debug)]
pub struct CayleyData {
    nef: NefPartition,
    hyper: HypersurfaceContext,
    dual: Cone,
    dual_lattice: FaceLattice,
    dual_ehrhart: EhrhartCache,
    // face x of C -> face C_x* of C*
    dual_face: Vec<usize>,
}

impl CayleyData {
    /// Builds `C` and `C*` and checks that `C` is reflexive of index `r`.
    pub fn new(nef: NefPartition) -> Result<Self> {
        let r = nef.len();
        let d = nef.rank();
        let rank = d + r;
        let cone = Cone::from_generators(rank, &nef.cayley_generators()).map_err(|e| match e {
            Error::Structure(msg) => Error::NotNefPartition(format!("Cayley cone: {msg}")),
            other => other,
        })?;
        let n_c = block_form(r, d);
        if cone.degree_form() != Some(&n_c) {
            return Err(Error::integrity(
                "Cayley cone has an unexpected degree form",
            ));
        }
        let dual = cone.dual();
        let m = dual
            .degree_form()
            .ok_or_else(|| Error::NotNefPartition("dual Cayley cone is not Gorenstein".into()))?;
        let index: BigInt = m
            .coords()
            .iter()
            .zip(n_c.coords())
            .map(|(a, b)| a * b)
            .sum();
        if index != BigInt::from(r) {
            return Err(Error::NotNefPartition(format!(
                "Cayley cone has index {index}, expected {r}"
            )));
        }
        let hyper = HypersurfaceContext::new(cone)?;
        let dual_lattice = dual.face_lattice();
        let dual_face = (0..hyper.lattice().len())
            .map(|x| hyper.lattice().dual_face(x, &dual_lattice))
            .collect::<Result<Vec<_>>>()?;
        Ok(CayleyData {
            nef,
            hyper,
            dual,
            dual_lattice,
            dual_ehrhart: EhrhartCache::new(),
            dual_face,
        })
    }

    pub fn nef(&self) -> &NefPartition {
        &self.nef
    }

    /// Index `r`.
    pub fn index(&self) -> usize {
        self.nef.len()
    }

    /// Rank `d̄ = d + r` of the Cayley cone.
    pub fn rank(&self) -> usize {
        self.hyper.rank()
    }

    pub fn cone(&self) -> &Cone {
        self.hyper.cone()
    }

    pub fn lattice(&self) -> &FaceLattice {
        self.hyper.lattice()
    }

    pub fn dual_cone(&self) -> &Cone {
        &self.dual
    }

    pub fn dual_lattice(&self) -> &FaceLattice {
        &self.dual_lattice
    }

    pub fn hypersurface(&mut self) -> &mut HypersurfaceContext {
        &mut self.hyper
    }

    /// `S(C_x*, t)` of the face of `C*` dual to face `x` of `C`.
    pub fn s_dual(&mut self, x: usize) -> Result<LaurentPoly2> {
        let y = self.dual_face[x];
        self.dual_ehrhart.s_poly(&self.dual, &self.dual_lattice, y)
    }

    /// Reads off `∇_i = conv{z : (e_i, z) is a ray of C*}`.
    pub fn dual_partition(&self) -> Result<NefPartition> {
        let r = self.index();
        let d = self.nef.rank();
        let mut parts: Vec<Vec<LatticeVector>> = vec![Vec::new(); r];
        for g in self.dual.generators() {
            let (head, tail) = g.coords().split_at(r);
            let i = head
                .iter()
                .position(|c| c.is_one())
                .filter(|_| head.iter().filter(|c| !c.is_zero()).count() == 1)
                .ok_or_else(|| {
                    Error::structure(format!(
                        "ray {g} of the dual Cayley cone is not of the form (e_i, z)"
                    ))
                })?;
            parts[i].push(LatticeVector::new(tail.to_vec()));
        }
        if parts.iter().any(Vec::is_empty) {
            return Err(Error::structure("a dual summand is empty"));
        }
        let dual_nef = NefPartition::from_points(d, &parts)?;
        let rebuilt = Cone::from_generators(d + r, &dual_nef.cayley_generators())?;
        let mut a = rebuilt.generators().to_vec();
        let mut b = self.dual.generators().to_vec();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::integrity(
                "dual Cayley cone differs from the Cayley cone of the dual summands",
            ));
        }
        if self.dual.degree_form() != Some(&block_form(r, d)) {
            return Err(Error::integrity(
                "dual Cayley cone has an unexpected degree form",
            ));
        }
        Ok(dual_nef)
    }

    /// `E_st` of the toric variety `P` of the Cayley cone, from its strata
    /// `sum_{x > 0̂} (uv - 1)^(ρ(x)-1) S(C_x*, uv)`, checked against
    /// `((uv)^r - 1) / (uv - 1) S(C*, uv)`.
    pub fn e_st_toric(&mut self) -> Result<LaurentPoly2> {
        let uv1 = LaurentPoly2::uv() - LaurentPoly2::one();
        let bottom = self.lattice().bottom();
        let mut acc = LaurentPoly2::zero();
        for x in 0..self.lattice().len() {
            if x == bottom {
                continue;
            }
            let rho = self.lattice().face(x).dim as u32;
            acc += &(&uv1.pow(rho - 1) * &self.s_dual(x)?.subst_t(Monomial::UV));
        }
        let geometric = LaurentPoly2::from_coeffs(&vec![1; self.index()]).subst_t(Monomial::UV);
        let closed = &geometric * &self.s_dual(bottom)?.subst_t(Monomial::UV);
        if acc != closed {
            return Err(Error::integrity(format!(
                "stratified E_st(P) = {acc} but closed form gives {closed}"
            )));
        }
        Ok(acc)
    }

    /// `E_st` of the hypersurface `Z̄ ⊂ P`: `sum_{x > 0̂} E(Z_x) S(C_x*, uv)`.
    pub fn e_st_hypersurface(&mut self) -> Result<LaurentPoly2> {
        let bottom = self.lattice().bottom();
        let mut acc = LaurentPoly2::zero();
        for x in 0..self.lattice().len() {
            if x == bottom {
                continue;
            }
            let e = self.hyper.e_affine(x)?;
            acc += &(&e * &self.s_dual(x)?.subst_t(Monomial::UV));
        }
        Ok(acc)
    }

    /// `E_st(V; u, v)` of the Calabi-Yau complete intersection:
    ///
    /// ```text
    /// (uv)^-r sum_{x <= y} (-1)^ρ(y) v^ρ(x) T(C_x; u/v) B([x, y]*; u, v) S(C_y*; uv)
    /// ```
    ///
    /// the sum over pairs `(m, n)` with `<m, n> = 0` grouped by the faces
    /// whose relative interiors contain `m` and `n`.
    pub fn e_st_variety(&mut self) -> Result<LaurentPoly2> {
        let r = self.index() as i32;
        let n = self.nef.cy_dim();
        let faces = self.lattice().len();
        let mut acc = LaurentPoly2::zero();
        for x in 0..faces {
            let rx = self.lattice().face(x).dim as i32;
            let t = self.hyper.t_poly(x)?.subst_t(U_OVER_V).shift(0, rx);
            let above: Vec<usize> = self.lattice().poset.up_set(x).ones().collect();
            for y in above {
                let ry = self.lattice().face(y).dim;
                let s = self.s_dual(y)?.subst_t(Monomial::UV);
                let b = self.hyper.b_dual(x, y)?;
                let term = &(&t * &b) * &s;
                if ry % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
        }
        let e = acc.shift(-r, -r).require_polynomial("E_st(V)")?;
        let too_high = e.terms().any(|(&(p, q), _)| i64::from(p + q) > 2 * n);
        if too_high {
            return Err(Error::integrity(format!(
                "E_st(V) = {e} exceeds degree {}",
                2 * n
            )));
        }
        Ok(e)
    }

    /// Compares [`Self::e_st_variety`] with
    /// `(uv - 1) / ((uv)^r - 1) E_st(P) - (uv)^(1-r) (E_st(P) - E_st(Z̄))`.
    pub fn v_form_crosscheck(&mut self) -> Result<bool> {
        let r = self.index() as i32;
        let p = self.e_st_toric()?;
        let z = self.e_st_hypersurface()?;
        let uv1 = LaurentPoly2::uv() - LaurentPoly2::one();
        let uvr1 = LaurentPoly2::monomial(1, r, r) - LaurentPoly2::one();
        let first = (&uv1 * &p).exact_div(&uvr1)?;
        let v_form = first - (&p - &z).shift(1 - r, 1 - r);
        Ok(v_form == self.e_st_variety()?)
    }

    /// Series check to order `k` on every face of `C` and of `C*`.
    pub fn check_truncation(&mut self, k: u64) -> Result<bool> {
        if !self.hyper.check_truncation(k)? {
            return Ok(false);
        }
        for y in 0..self.dual_lattice.len() {
            if !self
                .dual_ehrhart
                .check_series(&self.dual, &self.dual_lattice, y, k)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The dual nef-partition `∇_1, ..., ∇_r`.
pub fn dual_nef_partition(nef: &NefPartition) -> Result<NefPartition> {
    CayleyData::new(nef.clone())?.dual_partition()
}

/// String-theoretic Hodge numbers `h^{p,q} = (-1)^(p+q) a_{p,q}` of an
/// `n`-dimensional variety, indexed `[p][q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    n: usize,
    h: Vec<Vec<BigInt>>,
}

impl HodgeDiamond {
    /// Extracts the numbers without validating them. Errors if a monomial
    /// lies outside `[0, n]^2`.
    pub fn from_poly(e: &LaurentPoly2, n: usize) -> Result<Self> {
        let mut h = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for (&(p, q), c) in e.terms() {
            if p < 0 || q < 0 || p as usize > n || q as usize > n {
                return Err(Error::integrity(format!(
                    "monomial u^{p} v^{q} outside the diamond"
                )));
            }
            let sign = if (p + q) % 2 == 0 { c.clone() } else { -c };
            h[p as usize][q as usize] = sign;
        }
        Ok(HodgeDiamond { n, h })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> &BigInt {
        &self.h[p][q]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.h
    }

    pub fn is_nonnegative(&self) -> bool {
        self.h.iter().flatten().all(|c| !c.is_negative())
    }

    /// `h^{p,q} = h^{q,p}`.
    pub fn is_hodge_symmetric(&self) -> bool {
        (0..=self.n).all(|p| (0..=self.n).all(|q| self.h[p][q] == self.h[q][p]))
    }

    /// `h^{p,q} = h^{n-p,n-q}`.
    pub fn is_serre_symmetric(&self) -> bool {
        let n = self.n;
        (0..=n).all(|p| (0..=n).all(|q| self.h[p][q] == self.h[n - p][n - q]))
    }

    /// Euler number `sum (-1)^(p+q) h^{p,q}`.
    pub fn euler(&self) -> BigInt {
        let mut e = BigInt::zero();
        for (p, row) in self.h.iter().enumerate() {
            for (q, c) in row.iter().enumerate() {
                if (p + q) % 2 == 0 {
                    e += c;
                } else {
                    e -= c;
                }
            }
        }
        e
    }

    /// The transposed diamond under `h^{p,q} -> h^{n-p,q}`.
    pub fn mirror(&self) -> HodgeDiamond {
        let n = self.n;
        let h = (0..=n).map(|p| self.h[n - p].clone()).collect();
        HodgeDiamond { n, h }
    }
}

impl fmt::Display for HodgeDiamond {
    /// Rows of constant `p + q`, top to bottom, centered.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let width = self
            .h
            .iter()
            .flatten()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1);
        for s in 0..=2 * n {
            let lo = s.saturating_sub(n);
            let hi = s.min(n);
            let entries: Vec<String> = (lo..=hi)
                .rev()
                .map(|p| format!("{:^width$}", self.h[p][s - p].to_string()))
                .collect();
            let count = hi - lo + 1;
            let pad = (n + 1 - count) * (width + 1) / 2;
            let line = format!("{}{}", " ".repeat(pad), entries.join(" "));
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Diamond of `e`, failing unless all numbers are non-negative and both
/// symmetries hold.
pub fn hodge_diamond(e: &LaurentPoly2, n: usize) -> Result<HodgeDiamond> {
    let d = HodgeDiamond::from_poly(e, n)?;
    if !d.is_nonnegative() {
        return Err(Error::integrity("negative stringy Hodge number"));
    }
    if !d.is_hodge_symmetric() || !d.is_serre_symmetric() {
        return Err(Error::integrity("Hodge diamond is not symmetric"));
    }
    Ok(d)
}

/// `E(u, v) = (uv)^n E(1/u, 1/v)`.
pub fn check_poincare(e: &LaurentPoly2, n: i32) -> bool {
    e.subst(Monomial::new(-1, 0), Monomial::new(0, -1))
        .shift(n, n)
        == *e
}

/// `E(u, v) = E(v, u)`.
pub fn check_hodge_symmetry(e: &LaurentPoly2) -> bool {
    e.swap_uv() == *e
}

/// Everything computed by [`verify_mirror_duality`].
#[derive(Clone, Debug)]
pub struct MirrorReport {
    pub index: usize,
    pub dim: i64,
    pub dual: NefPartition,
    pub e_st_v: LaurentPoly2,
    pub e_st_w: LaurentPoly2,
    pub diamond_v: HodgeDiamond,
    pub diamond_w: HodgeDiamond,
    /// `E_st(V; u, v) = (-u)^n E_st(W; 1/u, v)`.
    pub duality: bool,
    pub poincare: bool,
    pub hodge_symmetry: bool,
    pub nonnegative: bool,
    pub v_form: bool,
}

impl MirrorReport {
    pub fn all_hold(&self) -> bool {
        self.duality && self.poincare && self.hodge_symmetry && self.nonnegative && self.v_form
    }
}

/// `(-u)^n E(1/u, v)`.
pub fn mirror_transform(e: &LaurentPoly2, n: i32) -> LaurentPoly2 {
    let out = e.subst(Monomial::new(-1, 0), Monomial::V).shift(n, 0);
    if n % 2 == 0 {
        out
    } else {
        -out
    }
}

/// Computes `E_st` of `V` and of the mirror `W` given by the dual
/// nef-partition and checks mirror duality, the structural properties of
/// both, and the V-form identity on both sides.
pub fn verify_mirror_duality(nef: &NefPartition) -> Result<MirrorReport> {
    let n = nef.cy_dim();
    if n < 0 {
        return Err(Error::NotNefPartition(
            "more summands than the lattice rank".into(),
        ));
    }
    let mut v = CayleyData::new(nef.clone())?;
    let dual = v.dual_partition()?;
    let mut w = CayleyData::new(dual.clone())?;
    let e_st_v = v.e_st_variety()?;
    let e_st_w = w.e_st_variety()?;
    let diamond_v = HodgeDiamond::from_poly(&e_st_v, n as usize)?;
    let diamond_w = HodgeDiamond::from_poly(&e_st_w, n as usize)?;
    let n32 = n as i32;
    Ok(MirrorReport {
        index: nef.len(),
        dim: n,
        duality: e_st_v == mirror_transform(&e_st_w, n32),
        poincare: check_poincare(&e_st_v, n32) && check_poincare(&e_st_w, n32),
        hodge_symmetry: check_hodge_symmetry(&e_st_v) && check_hodge_symmetry(&e_st_w),
        nonnegative: diamond_v.is_nonnegative() && diamond_w.is_nonnegative(),
        v_form: v.v_form_crosscheck()? && w.v_form_crosscheck()?,
        dual,
        e_st_v,
        e_st_w,
        diamond_v,
        diamond_w,
    })
}
