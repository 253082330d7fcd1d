//! Toric `G`, `H`, `H_Lef` and the two-variable `B` polynomials of Eulerian
//! posets, memoized per interval, together with checkers for the identities
//! they satisfy.
//!
//! Univariate polynomials are in `t` (stored as `u`, see [`crate::poly`]).
//! Every function here works on an interval `[x, y]` of a parent poset,
//! addressed by its endpoints; ranks are taken relative to `x`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly2, Monomial};
use crate::poset::GradedPoset;

const INV: Monomial = Monomial::new(-1, 0);

/// Memo tables for `G`, `H` and `B`, keyed by interval endpoints.
///
/// A cache belongs to one poset; feeding it a different poset gives
/// meaningless results.
#[derive(Clone, Debug, Default)]
pub struct PosetPolyCache {
    g: HashMap<(usize, usize), LaurentPoly2>,
    h: HashMap<(usize, usize), LaurentPoly2>,
    b: HashMap<(usize, usize), LaurentPoly2>,
}

fn t_minus_one() -> LaurentPoly2 {
    LaurentPoly2::from_coeffs(&[-1, 1])
}

fn one_minus_t() -> LaurentPoly2 {
    LaurentPoly2::from_coeffs(&[1, -1])
}

impl PosetPolyCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn rank(p: &GradedPoset, x: usize, y: usize) -> usize {
        p.rank_of(y) - p.rank_of(x)
    }

    /// `G([x, y], t)`.
    pub fn g(&mut self, p: &GradedPoset, x: usize, y: usize) -> LaurentPoly2 {
        if let Some(g) = self.g.get(&(x, y)) {
            return g.clone();
        }
        let d = Self::rank(p, x, y) as i32;
        let g = if d == 0 {
            LaurentPoly2::one()
        } else {
            let h = self.h(p, x, y);
            (&one_minus_t() * &h)
                .truncate_below((d + 1) / 2)
                .expect("univariate")
        };
        self.g.insert((x, y), g.clone());
        g
    }

    /// `H([x, y], t) = sum_{x < z <= y} (t - 1)^(ρ(z) - 1) G([z, y], t)`.
    pub fn h(&mut self, p: &GradedPoset, x: usize, y: usize) -> LaurentPoly2 {
        if let Some(h) = self.h.get(&(x, y)) {
            return h.clone();
        }
        let h = if x == y {
            LaurentPoly2::one()
        } else {
            let mut acc = LaurentPoly2::zero();
            for z in p.between(x, y) {
                if z == x {
                    continue;
                }
                let k = Self::rank(p, x, z) as u32;
                acc += &(&t_minus_one().pow(k - 1) * &self.g(p, z, y));
            }
            acc
        };
        self.h.insert((x, y), h.clone());
        h
    }

    /// `H_Lef([x, y], t) = (G(t) - t^(d-1) G(1/t)) / (1 - t)` for `d >= 1`.
    pub fn h_lef(&mut self, p: &GradedPoset, x: usize, y: usize) -> Result<LaurentPoly2> {
        let d = Self::rank(p, x, y) as i32;
        if d == 0 {
            return Err(Error::Argument("H_Lef needs rank at least 1".into()));
        }
        let g = self.g(p, x, y);
        let num = &g - &g.subst_t(INV).shift(d - 1, 0);
        num.exact_div(&one_minus_t())?.require_polynomial("H_Lef")
    }

    /// `B([x, y]; u, v)` from the recursion
    /// `B(P) = G(P, uv) - sum_{z < 1̂} B([0̂, z]) u^(d - ρ(z)) G([z, 1̂], v/u)`.
    pub fn b(&mut self, p: &GradedPoset, x: usize, y: usize) -> Result<LaurentPoly2> {
        if let Some(b) = self.b.get(&(x, y)) {
            return Ok(b.clone());
        }
        let b = if x == y {
            LaurentPoly2::one()
        } else {
            let d = Self::rank(p, x, y) as i32;
            let mut acc = self.g(p, x, y).subst_t(Monomial::UV);
            for z in p.between(x, y) {
                if z == y {
                    continue;
                }
                let k = d - Self::rank(p, x, z) as i32;
                let tail = self.g(p, z, y).subst_t(Monomial::new(-1, 1)).shift(k, 0);
                // deg G([z, y]) < k / 2 keeps this polynomial
                let tail = tail.require_polynomial("u^(d-ρ) G(v/u)")?;
                acc -= &(&self.b(p, x, z)? * &tail);
            }
            acc.require_polynomial("B-polynomial")?
        };
        self.b.insert((x, y), b.clone());
        Ok(b)
    }

    /// `B([x, y]*; u, v)` of the dual interval, via
    /// `B(Q*; u, v) = (-u)^d B(Q; 1/u, v)`.
    pub fn b_dual(&mut self, p: &GradedPoset, x: usize, y: usize) -> Result<LaurentPoly2> {
        let d = Self::rank(p, x, y) as i32;
        let b = self.b(p, x, y)?;
        let mut out = b.subst(INV, Monomial::V).shift(d, 0);
        if d % 2 == 1 {
            out = -out;
        }
        out.require_polynomial("dual B-polynomial")
    }

    /// `H(t) = t^(d-1) H(1/t)`, for `d >= 1`.
    pub fn check_h_symmetry(&mut self, p: &GradedPoset, x: usize, y: usize) -> bool {
        let d = Self::rank(p, x, y) as i32;
        if d == 0 {
            return true;
        }
        let h = self.h(p, x, y);
        h.subst_t(INV).shift(d - 1, 0) == h
    }

    /// `t^d G(1/t) = sum_{x <= z <= y} (t - 1)^ρ(z) G([z, y], t)`.
    pub fn check_inversion(&mut self, p: &GradedPoset, x: usize, y: usize) -> bool {
        let d = Self::rank(p, x, y) as i32;
        let lhs = self.g(p, x, y).subst_t(INV).shift(d, 0);
        let mut rhs = LaurentPoly2::zero();
        for z in p.between(x, y) {
            let k = Self::rank(p, x, z) as u32;
            rhs += &(&t_minus_one().pow(k) * &self.g(p, z, y));
        }
        lhs == rhs
    }

    /// `B(u, 1) = (1 - u)^d`, `B(1, v) = 0` and `deg_v B < d / 2`, for `d > 0`.
    pub fn check_degree(&mut self, p: &GradedPoset, x: usize, y: usize) -> Result<bool> {
        let d = Self::rank(p, x, y);
        if d == 0 {
            return Ok(true);
        }
        let b = self.b(p, x, y)?;
        let at_v1 = b.subst(Monomial::U, Monomial::ONE);
        let at_u1 = b.subst(Monomial::ONE, Monomial::V);
        let vdeg_ok = b.v_degree().map_or(true, |k| 2 * k < d as i32);
        Ok(at_v1 == one_minus_t().pow(d as u32) && at_u1.is_zero() && vdeg_ok)
    }

    /// The two defining properties of `H_Lef`: palindromic of degree `d - 2`
    /// and agreeing with `H` in degrees `<= (d - 2) / 2`.
    pub fn check_lef(&mut self, p: &GradedPoset, x: usize, y: usize) -> Result<bool> {
        let d = Self::rank(p, x, y) as i32;
        if d == 0 {
            return Ok(true);
        }
        let lef = self.h_lef(p, x, y)?;
        let palindromic = lef.subst_t(INV).shift(d - 2, 0) == lef;
        let cut = (d - 2).div_euclid(2) + 1;
        let h = self.h(p, x, y);
        Ok(palindromic && lef.truncate_below(cut)? == h.truncate_below(cut)?)
    }

    /// `sum_z B([x,z]; 1/u, 1/v) (uv)^ρ(z) (v - u)^(d - ρ(z))
    ///  = sum_z B([z,y]; u, v) (uv - 1)^ρ(z)`.
    pub fn check_relation(&mut self, p: &GradedPoset, x: usize, y: usize) -> Result<bool> {
        let d = Self::rank(p, x, y);
        let v_minus_u = LaurentPoly2::v() - LaurentPoly2::u();
        let uv_minus_one = LaurentPoly2::uv() - LaurentPoly2::one();
        let mut lhs = LaurentPoly2::zero();
        let mut rhs = LaurentPoly2::zero();
        for z in p.between(x, y) {
            let k = Self::rank(p, x, z);
            let low = self
                .b(p, x, z)?
                .subst(Monomial::new(-1, 0), Monomial::new(0, -1))
                .shift(k as i32, k as i32);
            lhs += &(&low * &v_minus_u.pow((d - k) as u32));
            rhs += &(&self.b(p, z, y)? * &uv_minus_one.pow(k as u32));
        }
        Ok(lhs == rhs)
    }
}

fn require_eulerian(p: &GradedPoset) -> Result<()> {
    if p.is_eulerian() {
        Ok(())
    } else {
        Err(Error::structure("poset is not Eulerian"))
    }
}

/// Toric g-polynomial of an Eulerian poset.
pub fn g_poly(p: &GradedPoset) -> Result<LaurentPoly2> {
    require_eulerian(p)?;
    Ok(PosetPolyCache::new().g(p, p.bottom(), p.top()))
}

/// Toric h-polynomial of an Eulerian poset.
pub fn h_poly(p: &GradedPoset) -> Result<LaurentPoly2> {
    require_eulerian(p)?;
    Ok(PosetPolyCache::new().h(p, p.bottom(), p.top()))
}

pub fn h_lef(p: &GradedPoset) -> Result<LaurentPoly2> {
    require_eulerian(p)?;
    PosetPolyCache::new().h_lef(p, p.bottom(), p.top())
}

pub fn b_poly(p: &GradedPoset) -> Result<LaurentPoly2> {
    require_eulerian(p)?;
    PosetPolyCache::new().b(p, p.bottom(), p.top())
}

/// `B(P; u, v) = (-u)^d B(P*; 1/u, v)`, with `B(P*)` computed from the dual
/// poset itself rather than through the identity.
pub fn check_b_duality(p: &GradedPoset) -> Result<bool> {
    require_eulerian(p)?;
    let dual = p.dual();
    let mut primal = PosetPolyCache::new();
    let mut other = PosetPolyCache::new();
    duality_on_interval(p, &dual, &mut primal, &mut other, p.bottom(), p.top())
}

fn duality_on_interval(
    p: &GradedPoset,
    dual: &GradedPoset,
    primal: &mut PosetPolyCache,
    other: &mut PosetPolyCache,
    x: usize,
    y: usize,
) -> Result<bool> {
    let d = (p.rank_of(y) - p.rank_of(x)) as i32;
    let b = primal.b(p, x, y)?;
    // [x, y] in P is [y, x] in P*
    let bd = other.b(dual, y, x)?;
    let mut rhs = bd.subst(INV, Monomial::V).shift(d, 0);
    if d % 2 == 1 {
        rhs = -rhs;
    }
    Ok(b == rhs)
}

pub fn check_interval_relation(p: &GradedPoset) -> Result<bool> {
    require_eulerian(p)?;
    PosetPolyCache::new().check_relation(p, p.bottom(), p.top())
}

/// Outcome of running every identity on every interval of a poset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub intervals: usize,
    pub h_symmetry: bool,
    pub inversion: bool,
    pub degree: bool,
    pub relation: bool,
    pub duality: bool,
    pub lef: bool,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.h_symmetry
            && self.inversion
            && self.degree
            && self.relation
            && self.duality
            && self.lef
    }
}

/// Checks the `H` symmetry, the `G` inversion formula, the `B` degree
/// properties, the interval relation, `B` duality and the `H_Lef`
/// characterization on every interval `[x, y]` of `p`.
pub fn verify_all_intervals(p: &GradedPoset) -> Result<IdentityReport> {
    require_eulerian(p)?;
    let dual = p.dual();
    let mut cache = PosetPolyCache::new();
    let mut dual_cache = PosetPolyCache::new();
    let mut report = IdentityReport {
        intervals: 0,
        h_symmetry: true,
        inversion: true,
        degree: true,
        relation: true,
        duality: true,
        lef: true,
    };
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| p.rank_of(x));
    for &x in &order {
        for &y in &order {
            if !p.leq(x, y) {
                continue;
            }
            report.intervals += 1;
            report.h_symmetry &= cache.check_h_symmetry(p, x, y);
            report.inversion &= cache.check_inversion(p, x, y);
            report.degree &= cache.check_degree(p, x, y)?;
            report.relation &= cache.check_relation(p, x, y)?;
            report.duality &= duality_on_interval(p, &dual, &mut cache, &mut dual_cache, x, y)?;
            report.lef &= cache.check_lef(p, x, y)?;
        }
    }
    Ok(report)
}
