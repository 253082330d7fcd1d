//! E-polynomials of generic hypersurfaces in the projective toric variety of
//! a Gorenstein cone, and of their strata in the torus orbits.
//!
//! For a face `x` of `C` of dimension `ρ >= 1`, `Z_x` is the affine
//! hypersurface in the `(ρ - 1)`-torus cut out by the part of a generic
//! section supported on `C_x`. Its E-polynomial is
//!
//! ```text
//! E(Z_x) = (uv - 1)^(ρ-1) / uv
//!        + (-1)^ρ / uv * sum_{y <= x} v^ρ(y) T(C_y; u/v) B([y, x]*; u, v)
//! ```
//!
//! which is the sum over lattice points of `C_x` grouped by the face whose
//! relative interior contains them.

use crate::cone::{Cone, FaceLattice, Polytope};
use crate::ehrhart::EhrhartCache;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly2, Monomial};
use crate::stanley::PosetPolyCache;

const U_OVER_V: Monomial = Monomial::new(1, -1);

fn uv_minus_one() -> LaurentPoly2 {
    LaurentPoly2::uv() - LaurentPoly2::one()
}

fn signed(p: LaurentPoly2, exponent: usize) -> LaurentPoly2 {
    if exponent % 2 == 0 {
        p
    } else {
        -p
    }
}

/// A Gorenstein cone with its face lattice and the caches the E-polynomial
/// formulas draw on.
#[derive(Clone, Debug)]
pub struct HypersurfaceContext {
    cone: Cone,
    lattice: FaceLattice,
    stanley: PosetPolyCache,
    ehrhart: EhrhartCache,
}

impl HypersurfaceContext {
    pub fn new(cone: Cone) -> Result<Self> {
        if !cone.is_gorenstein() {
            return Err(Error::NotGorenstein);
        }
        let lattice = cone.face_lattice();
        Ok(HypersurfaceContext {
            cone,
            lattice,
            stanley: PosetPolyCache::new(),
            ehrhart: EhrhartCache::new(),
        })
    }

    /// Context for the cone over `Δ × {1}`.
    pub fn from_polytope(polytope: &Polytope) -> Result<Self> {
        Self::new(polytope.cone_over()?)
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// Rank `d` of the cone.
    pub fn rank(&self) -> usize {
        self.cone.rank()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    fn check_face(&self, x: usize) -> Result<()> {
        if x >= self.lattice.len() {
            return Err(Error::Argument(format!("no face with index {x}")));
        }
        Ok(())
    }

    pub fn s_poly(&mut self, x: usize) -> Result<LaurentPoly2> {
        self.check_face(x)?;
        self.ehrhart.s_poly(&self.cone, &self.lattice, x)
    }

    pub fn t_poly(&mut self, x: usize) -> Result<LaurentPoly2> {
        self.check_face(x)?;
        self.ehrhart.t_poly(&self.cone, &self.lattice, x)
    }

    /// `G([x, 1̂], t)`.
    pub fn g_above(&mut self, x: usize) -> LaurentPoly2 {
        self.stanley.g(&self.lattice.poset, x, self.lattice.top())
    }

    /// `B([y, x]*; u, v)`.
    pub fn b_dual(&mut self, y: usize, x: usize) -> Result<LaurentPoly2> {
        self.stanley.b_dual(&self.lattice.poset, y, x)
    }

    /// `E(Z_x; u, v)` for a face of dimension at least 1.
    pub fn e_affine(&mut self, x: usize) -> Result<LaurentPoly2> {
        self.check_face(x)?;
        let rho = self.lattice.face(x).dim;
        if rho == 0 {
            return Err(Error::Argument(
                "the zero face carries no hypersurface".into(),
            ));
        }
        let mut sum = LaurentPoly2::zero();
        for y in self.lattice.poset.between(self.lattice.bottom(), x) {
            let ry = self.lattice.face(y).dim as i32;
            let t = self.t_poly(y)?.subst_t(U_OVER_V).shift(0, ry);
            sum += &(&t * &self.b_dual(y, x)?);
        }
        let total = uv_minus_one().pow(rho as u32 - 1) + signed(sum, rho);
        total.shift(-1, -1).require_polynomial("E(Z_x)")
    }

    /// `E(Z; u, v)` of the hypersurface in the big torus.
    pub fn e_affine_top(&mut self) -> Result<LaurentPoly2> {
        self.e_affine(self.top())
    }

    /// Intersection E-polynomial of the projective toric variety,
    /// `H(P, uv)`.
    pub fn e_int_toric(&mut self) -> LaurentPoly2 {
        let top = self.top();
        self.stanley
            .h(&self.lattice.poset, self.lattice.bottom(), top)
            .subst_t(Monomial::UV)
    }

    /// Intersection E-polynomial of the compact hypersurface,
    /// `sum_{x > 0̂} E(Z_x) G([x, 1̂], uv)`.
    pub fn e_int_hypersurface(&mut self) -> Result<LaurentPoly2> {
        let mut acc = LaurentPoly2::zero();
        for x in 0..self.lattice.len() {
            if x == self.lattice.bottom() {
                continue;
            }
            let g = self.g_above(x).subst_t(Monomial::UV);
            acc += &(&self.e_affine(x)? * &g);
        }
        Ok(acc)
    }

    /// `H_Lef(P, uv)`.
    pub fn h_lef(&mut self) -> Result<LaurentPoly2> {
        let top = self.top();
        Ok(self
            .stanley
            .h_lef(&self.lattice.poset, self.lattice.bottom(), top)?
            .subst_t(Monomial::UV))
    }

    /// Primitive part `E_int(Z̄) - H_Lef(P, uv)`, homogeneous of degree
    /// `d - 2`.
    pub fn e_prim(&mut self) -> Result<LaurentPoly2> {
        let prim = self.e_int_hypersurface()? - self.h_lef()?;
        if !prim.is_homogeneous(self.rank() as i32 - 2) {
            return Err(Error::integrity(format!(
                "primitive part {prim} is not homogeneous of degree {}",
                self.rank() as i32 - 2
            )));
        }
        Ok(prim)
    }

    /// Both sides of the recursion
    ///
    /// ```text
    /// sum_x (E(Z_x) - (uv)^-1 (uv - 1)^(ρ(x)-1)) G([x, 1̂], uv)
    ///   = v^(d-2) sum_x (v/u) (-1)^ρ(x) S(C_x, u/v) G([x, 1̂], u/v)
    /// ```
    ///
    /// with `E(Z_0̂) = (uv - 1)^-1`, which makes the `x = 0̂` term on the left
    /// equal to `(uv)^-1 G(P, uv)`.
    pub fn recursion_sides(&mut self) -> Result<(LaurentPoly2, LaurentPoly2)> {
        let d = self.rank() as i32;
        let bottom = self.lattice.bottom();
        let mut lhs = self.g_above(bottom).subst_t(Monomial::UV).shift(-1, -1);
        let mut rhs = LaurentPoly2::zero();
        for x in 0..self.lattice.len() {
            let rho = self.lattice.face(x).dim;
            let g = self.g_above(x);
            if x != bottom {
                let correction = uv_minus_one().pow(rho as u32 - 1).shift(-1, -1);
                let e = self.e_affine(x)? - correction;
                lhs += &(&e * &g.subst_t(Monomial::UV));
            }
            let s = self.s_poly(x)?.subst_t(U_OVER_V);
            rhs += &signed(&s * &g.subst_t(U_OVER_V), rho);
        }
        Ok((lhs, rhs.shift(-1, d - 1)))
    }

    pub fn verify_recursion(&mut self) -> Result<bool> {
        let (lhs, rhs) = self.recursion_sides()?;
        Ok(lhs == rhs)
    }

    /// `E(Z_x; t, 1) = ((t - 1)^(ρ-1) + (-1)^ρ S(C_x, t)) / t`.
    pub fn check_specialization(&mut self, x: usize) -> Result<bool> {
        let rho = self.lattice.face(x).dim;
        if rho == 0 {
            return Err(Error::Argument(
                "specialization needs a nonzero face".into(),
            ));
        }
        let at_v1 = self.e_affine(x)?.subst(Monomial::U, Monomial::ONE);
        let closed =
            LaurentPoly2::from_coeffs(&[-1, 1]).pow(rho as u32 - 1) + signed(self.s_poly(x)?, rho);
        Ok(at_v1 == closed.shift(-1, 0))
    }

    /// Specialization on every nonzero face.
    pub fn check_all_specializations(&mut self) -> Result<bool> {
        for x in 0..self.lattice.len() {
            if x != self.lattice.bottom() && !self.check_specialization(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Interior point counts against `T(C_y, s) / (1 - s)^ρ(y)` to order `k`
    /// on every face, which is the regrouping behind [`Self::e_affine`].
    pub fn check_truncation(&mut self, k: u64) -> Result<bool> {
        for y in 0..self.lattice.len() {
            if !self.ehrhart.check_series(&self.cone, &self.lattice, y, k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reciprocity `S = t^ρ T(1/t)` on every face.
    pub fn check_reciprocity(&mut self) -> Result<bool> {
        for y in 0..self.lattice.len() {
            if !self
                .ehrhart
                .check_reciprocity(&self.cone, &self.lattice, y)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
