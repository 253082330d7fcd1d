//! Integer lattice vectors, dual linear forms and the small amount of exact
//! linear algebra the rest of the crate needs.
//!
//! Everything here is exact. Rationals only show up inside solves and are
//! cleared back to integers before anything is stored.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of the lattice `M = Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<BigInt>);

/// An element of the dual lattice `N = Hom(M, Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(Vec<BigInt>);

macro_rules! coord_impls {
    ($ty:ident) => {
        impl $ty {
            pub fn new(coords: Vec<BigInt>) -> Self {
                Self(coords)
            }

            pub fn from_i64(coords: &[i64]) -> Self {
                Self(coords.iter().map(|&c| BigInt::from(c)).collect())
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![BigInt::zero(); rank])
            }

            /// The `i`-th standard basis element.
            pub fn basis(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.0[i] = BigInt::one();
                v
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[BigInt] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<BigInt> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            /// Divides out the gcd of the coordinates. The zero vector is
            /// returned unchanged.
            pub fn primitive(&self) -> Self {
                Self(primitive(&self.0))
            }

            pub fn neg(&self) -> Self {
                Self(self.0.iter().map(|c| -c).collect())
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

coord_impls!(LatticeVector);
coord_impls!(LinearForm);

impl LatticeVector {
    /// Reads this vector as a linear form on the dual lattice, `M = Hom(N, Z)`.
    pub fn into_form(self) -> LinearForm {
        LinearForm(self.0)
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl LinearForm {
    /// Reads this form as a vector of the dual lattice `N`.
    pub fn into_vector(self) -> LatticeVector {
        LatticeVector(self.0)
    }
}

/// The canonical pairing `<m, n> = sum m_i n_i`.
pub fn pair(m: &LatticeVector, n: &LinearForm) -> Result<BigInt> {
    if m.rank() != n.rank() {
        return Err(Error::Dimension {
            expected: m.rank(),
            got: n.rank(),
        });
    }
    Ok(dot(&m.0, &n.0))
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

/// Rank of an integer matrix given by rows (fraction-free elimination).
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            for j in c..cols {
                let v = &m[i][j] * &a - &m[r][j] * &b;
                m[i][j] = v;
            }
            let reduced = primitive(&m[i]);
            m[i] = reduced;
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Greedily selects row indices forming a basis of the row space.
pub fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        basis.push(row.clone());
        if rank(&basis) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

fn to_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect()
        })
        .collect()
}

/// Solves `A x = b` over the rationals. Returns `None` when the system is
/// inconsistent or the solution is not unique.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.first().map_or(0, Vec::len);
    let mut m = to_rational(a);
    for (row, rhs) in m.iter_mut().zip(b) {
        row.push(BigRational::from_integer(rhs.clone()));
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=n {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) || pivots.len() < n {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    Some(x)
}

/// Inverse of a square integer matrix, or `None` if singular.
pub fn inverse(a: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        cols.push(solve(a, &e)?);
    }
    // cols[j] is column j of the inverse
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}

/// Clears denominators of a rational vector and makes it primitive.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    primitive(&ints)
}

/// Finds the integral linear form taking the value 1 on every ray.
///
/// The rays must span the ambient space. Returns `None` if no such form
/// exists, if it is not integral, or if it fails to be positive on the rays
/// (which cannot happen when it exists, but is checked).
pub fn solve_degree_form(rays: &[LatticeVector]) -> Option<LinearForm> {
    let rank = rays.first()?.rank();
    let a: Vec<Vec<BigInt>> = rays.iter().map(|r| r.coords().to_vec()).collect();
    if a.iter().any(|r| r.len() != rank) {
        return None;
    }
    let ones = vec![BigInt::one(); rays.len()];
    let x = solve(&a, &ones)?;
    if x.iter().any(|q| !q.is_integer()) {
        return None;
    }
    let form = LinearForm(x.into_iter().map(|q| q.to_integer()).collect());
    if rays
        .iter()
        .any(|r| !dot(r.coords(), form.coords()).is_positive())
    {
        return None;
    }
    Some(form)
}
