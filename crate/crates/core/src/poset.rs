//! Finite graded posets with a bottom and a top element.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite graded poset with unique minimum `0̂` and maximum `1̂`.
///
/// The order is stored as a reachability matrix: `up[x]` is the set of
/// `y >= x`, `down[y]` the set of `x <= y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    bottom: usize,
    top: usize,
}

impl GradedPoset {
    /// Builds a poset on `0..n` from an order predicate `leq(x, y)`.
    ///
    /// Checks the partial order axioms, the existence of `0̂` and `1̂`, and
    /// that every cover relation raises the rank by exactly one.
    pub fn from_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::structure("empty poset"));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::structure("order is not reflexive"));
            }
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::structure("order is not antisymmetric"));
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::structure("order is not transitive"));
                }
            }
        }
        let bottom = (0..n)
            .find(|&x| up[x].count_ones(..) == n)
            .ok_or_else(|| Error::structure("no unique minimal element"))?;
        let top = (0..n)
            .find(|&x| down[x].count_ones(..) == n)
            .ok_or_else(|| Error::structure("no unique maximal element"))?;

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| down[x].count_ones(..));
        let mut ranks = vec![0usize; n];
        for &y in &order {
            ranks[y] = down[y]
                .ones()
                .filter(|&x| x != y)
                .map(|x| ranks[x] + 1)
                .max()
                .unwrap_or(0);
        }
        let poset = GradedPoset {
            ranks,
            up,
            down,
            bottom,
            top,
        };
        for x in 0..n {
            for y in poset.covers(x) {
                if poset.ranks[y] != poset.ranks[x] + 1 {
                    return Err(Error::structure("poset is not graded"));
                }
            }
        }
        Ok(poset)
    }

    /// Boolean lattice of subsets of a `d`-element set.
    pub fn boolean(d: usize) -> Self {
        Self::from_order(1 << d, |x, y| x & y == x).expect("boolean lattice is graded")
    }

    /// Chain `0 < 1 < ... < d`.
    pub fn chain(d: usize) -> Self {
        Self::from_order(d + 1, |x, y| x <= y).expect("chains are graded")
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Rank of the poset, the length of every maximal chain.
    pub fn rank(&self) -> usize {
        self.ranks[self.top]
    }

    /// Rank function `ρ`.
    pub fn rank_of(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_set(&self, y: usize) -> &FixedBitSet {
        &self.down[y]
    }

    /// Elements `z` with `x <= z <= y`, in increasing index order.
    pub fn between(&self, x: usize, y: usize) -> Vec<usize> {
        self.up[x].intersection(&self.down[y]).collect()
    }

    /// Elements covering `x`.
    pub fn covers(&self, x: usize) -> Vec<usize> {
        self.up[x]
            .ones()
            .filter(|&y| {
                y != x
                    && self.up[x]
                        .intersection(&self.down[y])
                        .all(|z| z == x || z == y)
            })
            .collect()
    }

    /// Möbius function `μ(x, y)`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::Argument(format!("{x} is not below {y}")));
        }
        Ok(self.mobius_from(x)[y])
    }

    /// `μ(x, z)` for every `z` (zero off the up-set of `x`).
    fn mobius_from(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        let mut above: Vec<usize> = self.up[x].ones().collect();
        above.sort_by_key(|&z| self.ranks[z]);
        for &z in &above {
            if z == x {
                mu[z] = 1;
                continue;
            }
            mu[z] = -self.up[x]
                .intersection(&self.down[z])
                .filter(|&w| w != z)
                .map(|w| mu[w])
                .sum::<i64>();
        }
        mu
    }

    /// True iff `μ(x, y) = (-1)^(ρ(y) - ρ(x))` for all `x <= y`.
    pub fn is_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            let mu = self.mobius_from(x);
            self.up[x].ones().all(|y| {
                let sign = if (self.ranks[y] - self.ranks[x]) % 2 == 0 {
                    1
                } else {
                    -1
                };
                mu[y] == sign
            })
        })
    }

    /// The interval `[x, y]` as a standalone poset, together with the map
    /// from its elements back to elements of `self`.
    pub fn interval(&self, x: usize, y: usize) -> Result<(GradedPoset, Vec<usize>)> {
        if !self.leq(x, y) {
            return Err(Error::Argument(format!("{x} is not below {y}")));
        }
        let elems = self.between(x, y);
        let sub = GradedPoset::from_order(elems.len(), |i, j| self.leq(elems[i], elems[j]))?;
        Ok((sub, elems))
    }

    /// The dual poset: same elements, order reversed, `ρ* = d - ρ`.
    pub fn dual(&self) -> GradedPoset {
        GradedPoset {
            ranks: self.ranks.iter().map(|r| self.rank() - r).collect(),
            up: self.down.clone(),
            down: self.up.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }
}
