//! Sparse Laurent polynomials in `u, v` with big-integer coefficients.
//!
//! Univariate polynomials in `t` are stored as polynomials in `u` alone; the
//! substitutions used throughout the crate (`t -> uv`, `t -> v/u`, ...) are
//! then ordinary monomial substitutions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(a, b)` of the monomial `u^a v^b`.
pub type Exponent = (i32, i32);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<Exponent, BigInt>,
}

/// A signed Laurent monomial `sign * u^u * v^v`, the image of a variable
/// under [`LaurentPoly2::subst`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub negative: bool,
    pub u: i32,
    pub v: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial::new(0, 0);
    pub const U: Monomial = Monomial::new(1, 0);
    pub const V: Monomial = Monomial::new(0, 1);
    pub const UV: Monomial = Monomial::new(1, 1);

    pub const fn new(u: i32, v: i32) -> Self {
        Monomial {
            negative: false,
            u,
            v,
        }
    }

    pub const fn negated(self) -> Self {
        Monomial {
            negative: !self.negative,
            ..self
        }
    }
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        LaurentPoly2 { terms }
    }

    pub fn u() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `uv`, the product of the two variables.
    pub fn uv() -> Self {
        Self::monomial(1, 1, 1)
    }

    /// Univariate polynomial `sum c_i t^i` (stored in `u`).
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term((i as i32, 0), c.clone().into());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// True if no term involves `v`.
    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|&(_, b)| b == 0)
    }

    /// True if every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    pub fn require_polynomial(self, what: &str) -> Result<Self> {
        if self.is_polynomial() {
            Ok(self)
        } else {
            Err(Error::integrity(format!(
                "{what} has a Laurent residue: {self}"
            )))
        }
    }

    /// Coefficients of a univariate polynomial, index = exponent of `t`.
    pub fn univariate_coeffs(&self) -> Result<Vec<BigInt>> {
        if !self.is_univariate() || !self.is_polynomial() {
            return Err(Error::Argument(format!("not a polynomial in t: {self}")));
        }
        let deg = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(-1);
        let mut out = vec![BigInt::zero(); (deg + 1) as usize];
        for (&(a, _), c) in &self.terms {
            out[a as usize] = c.clone();
        }
        Ok(out)
    }

    /// Degree in `u` (the `t`-degree of a univariate polynomial); `None` for zero.
    pub fn u_degree(&self) -> Option<i32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn v_degree(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// True if every term has total degree `deg`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self, deg: i32) -> bool {
        self.terms.keys().all(|&(a, b)| a + b == deg)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplies by `u^a v^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps the terms `a_i t^i` with `i < r` of a univariate polynomial.
    pub fn truncate_below(&self, r: i32) -> Result<Self> {
        if !self.is_univariate() {
            return Err(Error::Argument(format!(
                "truncation applies to univariate polynomials, got {self}"
            )));
        }
        Ok(LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, _), _)| a < r)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    /// Substitutes `u -> mu`, `v -> mv`.
    pub fn subst(&self, mu: Monomial, mv: Monomial) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let flip =
                (mu.negative && a.rem_euclid(2) == 1) ^ (mv.negative && b.rem_euclid(2) == 1);
            let e = (a * mu.u + b * mv.u, a * mu.v + b * mv.v);
            out.add_term(e, if flip { -c } else { c.clone() });
        }
        out
    }

    /// Univariate `p(t)` evaluated at `t -> m`.
    pub fn subst_t(&self, m: Monomial) -> Self {
        self.subst(m, Monomial::ONE)
    }

    /// `p(v, u)`.
    pub fn swap_uv(&self) -> Self {
        self.subst(Monomial::V, Monomial::U)
    }

    /// Value at `u = v = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn lead(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn exponent_box(&self) -> Option<(i32, i32, i32, i32)> {
        if self.is_zero() {
            return None;
        }
        let us = self.terms.keys().map(|e| e.0);
        let vs = self.terms.keys().map(|e| e.1);
        Some((
            us.clone().min().unwrap(),
            us.max().unwrap(),
            vs.clone().min().unwrap(),
            vs.max().unwrap(),
        ))
    }

    /// Exact division in the Laurent ring. Fails with an integrity error if
    /// `q` does not divide `self`.
    pub fn exact_div(&self, q: &LaurentPoly2) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::integrity("division by zero polynomial"));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (pu0, pu1, pv0, pv1) = self.exponent_box().unwrap();
        let (qu0, qu1, qv0, qv1) = q.exponent_box().unwrap();
        // Newton polytopes add under multiplication, so the quotient's
        // exponents are confined to this box.
        let (lu, hu, lv, hv) = (pu0 - qu0, pu1 - qu1, pv0 - qv0, pv1 - qv1);
        let (lq, lc) = q.lead().map(|(e, c)| (e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((lr, rc)) = rem.lead() {
            let e = (lr.0 - lq.0, lr.1 - lq.1);
            let (c, r) = rc.div_rem(&lc);
            if !r.is_zero() || e.0 < lu || e.0 > hu || e.1 < lv || e.1 > hv {
                return Err(Error::integrity(format!(
                    "{q} does not divide {self} exactly"
                )));
            }
            let term = Self::monomial(c, e.0, e.1);
            rem = &rem - &(&term * q);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    /// Canonical rendering with custom variable names.
    pub fn display_with(&self, uname: &str, vname: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Exponent> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, std::cmp::Reverse(a)));
        let mut out = String::new();
        for (i, &&(a, b)) in keys.iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if a != 0 {
                factors.push(power(uname, a));
            }
            if b != 0 {
                factors.push(power(vname, b));
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Renders a univariate polynomial in the variable `t`.
    pub fn display_t(&self) -> String {
        self.display_with("t", "v")
    }
}

fn power(var: &str, e: i32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("u", "v"))
    }
}

impl FromStr for LaurentPoly2 {
    type Err = Error;

    /// Parses the canonical rendering. `t` is accepted as a synonym for `u`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("cannot parse polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Self::zero();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let is_sign = (ch == '+' || ch == '-') && prev != Some('^');
            if is_sign {
                if !cur.is_empty() {
                    chunks.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad());
        }
        chunks.push((neg, cur));
        for (neg, chunk) in chunks {
            let mut coeff = BigInt::one();
            let (mut a, mut b) = (0i32, 0i32);
            for factor in chunk.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((base, e)) => (base, e.parse::<i32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                match base {
                    "u" | "t" => a += exp,
                    "v" => b += exp,
                    num => {
                        let n: BigInt = num.parse().map_err(|_| bad())?;
                        coeff *= n.pow(exp as u32);
                    }
                }
            }
            out.add_term((a, b), if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// Shorthand for parsing a literal polynomial; panics on malformed input.
pub fn poly(s: &str) -> LaurentPoly2 {
    s.parse().expect("malformed polynomial literal")
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly2> for LaurentPoly2 {
    fn sub_assign(&mut self, rhs: &LaurentPoly2) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly2 {
    fn sum<I: Iterator<Item = LaurentPoly2>>(iter: I) -> Self {
        let mut acc = LaurentPoly2::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ring_operations() {
        assert_eq!(poly("1 - u") * poly("1 + u"), poly("1 - u^2"));
        let p = poly("3 - 2*u*v + v^4");
        assert!((&p + &(-&p)).is_zero());
        assert_eq!(poly("u*v - 1").pow(2), poly("u^2*v^2 - 2*u*v + 1"));
    }

    #[test]
    fn truncation() {
        let p = poly("1 + t + t^2 + t^3");
        assert_eq!(p.truncate_below(2).unwrap(), poly("1 + t"));
        assert!(p.truncate_below(0).unwrap().is_zero());
        // tau_{<3/2} keeps exponents 0 and 1
        assert_eq!(p.truncate_below((3 + 1) / 2).unwrap(), poly("1 + t"));
        assert!(poly("1 + v").truncate_below(3).is_err());
    }

    #[test]
    fn substitution() {
        let inv_u = Monomial::new(-1, 0);
        assert_eq!(poly("1 + u").subst(inv_u, Monomial::V), poly("1 + u^-1"));
        let h = poly("1 + 2*t + 2*t^2 + t^3");
        assert_eq!(h.subst_t(Monomial::new(-1, 0)).shift(3, 0), h);
        // (-u)^2 (1 - 1/u)^2 = (u - 1)^2
        let b = poly("1 - 2*u + u^2");
        let dual = b.subst(inv_u, Monomial::V).shift(2, 0);
        assert_eq!(dual, b);
        assert_eq!(
            poly("u - v").subst(Monomial::U.negated(), Monomial::V),
            poly("-u - v")
        );
        assert_eq!(poly("t^2").subst_t(Monomial::new(1, -1)), poly("u^2*v^-2"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            poly("1 - t^3").exact_div(&poly("1 - t")).unwrap(),
            poly("1 + t + t^2")
        );
        let q = poly("u*v - 1");
        assert_eq!(q.pow(2).exact_div(&q).unwrap(), q);
        // (G - t^2 G(1/t)) / (1 - t) with G = 1 + t
        let g = poly("1 + t");
        let num = &g - &g.subst_t(Monomial::new(-1, 0)).shift(2, 0);
        assert_eq!(num.exact_div(&poly("1 - t")).unwrap(), poly("1 + t"));
        assert_eq!(
            poly("u*v - 1").exact_div(&poly("u^2*v^2 - u*v")).unwrap(),
            poly("u^-1*v^-1")
        );
        assert!(matches!(
            poly("1 + t^2").exact_div(&poly("1 - t")),
            Err(Error::Integrity(_))
        ));
        assert!(poly("2 + 2*t").exact_div(&poly("3")).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(poly("u*v - u - v + 1").to_string(), "1 - u - v + u*v");
        assert_eq!(poly("u*v - u - v - 2").to_string(), "-2 - u - v + u*v");
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
        assert_eq!(
            poly("t^3 + 2*t^2 + 2*t + 1").display_t(),
            "1 + 2*t + 2*t^2 + t^3"
        );
        assert_eq!(poly("u^-1*v^2 - 7").to_string(), "-7 + u^-1*v^2");
        let p = poly("-101*u^2*v + 3*u^3 - 1");
        assert_eq!(p.to_string().parse::<LaurentPoly2>().unwrap(), p);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec(((-3i32..4, -3i32..4), -5i64..6), 0..6).prop_map(|ts| {
            LaurentPoly2::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
        }

        #[test]
        fn division_inverts_multiplication(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
        }

        #[test]
        fn inversion_is_involutive(p in arb_poly()) {
            let inv = Monomial::new(-1, 0);
            prop_assert_eq!(p.subst(inv, Monomial::V).subst(inv, Monomial::V), p.clone());
            prop_assert_eq!(p.to_string().parse::<LaurentPoly2>().unwrap(), p);
        }
    }
}
