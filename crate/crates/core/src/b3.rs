//! Squarefree Boolean polynomials of degree at most 3 in the symbols
//! `X_1..X_{2g}`, the reduction of an arbitrary class symbol and the map
//! `B^1 -> B^3` given by multiplication with `alpha = sum_i A_i B_i`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::binomial;
use crate::error::{Error, Result};
use crate::homology::{pair_bits, Z2Class};

pub const MAX_DEGREE: u32 = 3;

/// A Z_2 combination of squarefree monomials; a monomial is a bitmask of
/// variables, `0` being the constant `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BPoly {
    g: usize,
    support: BTreeSet<u32>,
}

impl BPoly {
    pub fn zero(g: usize) -> Self {
        BPoly {
            g,
            support: BTreeSet::new(),
        }
    }

    pub fn one(g: usize) -> Self {
        Self::monomial(g, 0).expect("constant")
    }

    pub fn monomial(g: usize, vars: u32) -> Result<Self> {
        let deg = vars.count_ones();
        if deg > MAX_DEGREE {
            return Err(Error::DegreeOverflow(deg as usize));
        }
        let mut p = Self::zero(g);
        p.support.insert(vars);
        Ok(p)
    }

    /// The symbol `X_k`, 0-based (block convention).
    pub fn var(g: usize, k: usize) -> Self {
        Self::monomial(g, 1 << k).expect("degree 1")
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn support(&self) -> &BTreeSet<u32> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.support.iter().map(|m| m.count_ones()).max()
    }

    fn toggle(&mut self, m: u32) {
        if !self.support.remove(&m) {
            self.support.insert(m);
        }
    }

    pub fn add(&self, o: &BPoly) -> BPoly {
        let mut r = self.clone();
        for &m in &o.support {
            r.toggle(m);
        }
        r
    }

    /// Product with idempotent variables; fails if a product monomial has
    /// more than three variables.
    pub fn mul_truncated(&self, o: &BPoly) -> Result<BPoly> {
        let mut r = BPoly::zero(self.g);
        for &a in &self.support {
            for &b in &o.support {
                let m = a | b;
                let deg = m.count_ones();
                if deg > MAX_DEGREE {
                    return Err(Error::DegreeOverflow(deg as usize));
                }
                r.toggle(m);
            }
        }
        Ok(r)
    }

    /// Coordinates in the basis of [`b3_basis`].
    pub fn coordinates(&self) -> Vec<u8> {
        let basis = b3_basis(self.g);
        basis
            .iter()
            .map(|m| u8::from(self.support.contains(m)))
            .collect()
    }
}

impl fmt::Display for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        let g = self.g;
        let name = |k: usize| {
            if k < g {
                format!("A{}", k + 1)
            } else {
                format!("B{}", k - g + 1)
            }
        };
        let terms: Vec<String> = b3_basis(g)
            .into_iter()
            .filter(|m| self.support.contains(m))
            .map(|m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    (0..2 * g)
                        .filter(|k| m >> k & 1 == 1)
                        .map(name)
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Squarefree monomials of degree <= 3, by degree then lexicographic.
pub fn b3_basis(g: usize) -> Vec<u32> {
    let n = 2 * g;
    let mut out = vec![0u32];
    for deg in 1..=MAX_DEGREE as usize {
        let mut level: Vec<u32> = (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == deg)
            .collect();
        level.sort_by_key(|m| {
            (0..n)
                .filter(|k| m >> k & 1 == 1)
                .collect::<Vec<_>>()
        });
        out.extend(level);
    }
    out
}

pub fn b3_dimension(g: usize) -> usize {
    let n = 2 * g;
    1 + n + binomial(n, 2) + binomial(n, 3)
}

/// `x = sum_{i in S} X_i` expands to `sum_{i in S} X_i + sum_{i<j in S} (X_i . X_j) 1`,
/// splitting off one basis class at a time in ascending order.
pub fn reduce_symbol(x: &Z2Class) -> BPoly {
    let g = x.genus();
    let mut acc = BPoly::zero(g);
    let mut partial = 0u32;
    for k in 0..2 * g {
        if x.bits() >> k & 1 == 0 {
            continue;
        }
        let xk = 1u32 << k;
        acc = acc.add(&BPoly::var(g, k));
        if pair_bits(g, partial, xk) == 1 {
            acc = acc.add(&BPoly::one(g));
        }
        partial |= xk;
    }
    acc
}

/// `alpha = sum_i A_i B_i`.
pub fn alpha(g: usize) -> BPoly {
    (0..g).fold(BPoly::zero(g), |acc, i| {
        acc.add(&BPoly::monomial(g, (1 << i) | (1 << (g + i))).expect("degree 2"))
    })
}

/// Columns are the images of `1, X_1, ..., X_{2g}`; rows index [`b3_basis`].
pub fn alpha_multiplication_map(g: usize) -> Vec<Vec<u8>> {
    let a = alpha(g);
    let mut domain = vec![BPoly::one(g)];
    domain.extend((0..2 * g).map(|k| BPoly::var(g, k)));
    let images: Vec<Vec<u8>> = domain
        .iter()
        .map(|x| x.mul_truncated(&a).expect("degree <= 3").coordinates())
        .collect();
    let rows = b3_dimension(g);
    (0..rows)
        .map(|r| images.iter().map(|col| col[r]).collect())
        .collect()
}

/// Rank over GF(2) of a 0/1 matrix.
pub fn gf2_rank(m: &[Vec<u8>]) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    let words = ncols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &v) in r.iter().enumerate() {
                if v & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for c in 0..ncols {
        let (wi, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][wi] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pr = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[wi] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of multiplication by `alpha` on `B^1`.
pub fn alpha_rank(g: usize) -> usize {
    gf2_rank(&alpha_multiplication_map(g))
}

/// `dim B^3 - rank(alpha)`.
pub fn closed_b3_dimension(g: usize) -> usize {
    b3_dimension(g) - alpha_rank(g)
}

/// `(log2 |B^3_{g,1}|, log2 |B^3_{g,1} / <1>|)`.
pub fn b3_log_orders(g: usize) -> (usize, usize) {
    let d = b3_dimension(g);
    (d, d - 1)
}

/// `(|B^3_{g,1}|, |B^3_{g,1} / <1>|)`.
pub fn b3_orders(g: usize) -> (BigUint, BigUint) {
    let (a, b) = b3_log_orders(g);
    (BigUint::one() << a, BigUint::one() << b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let g = 2;
        assert_eq!(reduce_symbol(&Z2Class::a(g, 1)), BPoly::var(g, 0));
        let r = reduce_symbol(&(Z2Class::a(g, 1) + Z2Class::b(g, 1)));
        let e = BPoly::var(g, 0).add(&BPoly::var(g, 2)).add(&BPoly::one(g));
        assert_eq!(r, e);
        assert!(reduce_symbol(&Z2Class::zero(g)).is_zero());
    }

    #[test]
    fn idempotent_product() {
        let g = 2;
        let x = BPoly::var(g, 0);
        assert_eq!(x.mul_truncated(&x).unwrap(), x);
        let p = BPoly::var(g, 0)
            .mul_truncated(&BPoly::var(g, 1))
            .and_then(|p| p.mul_truncated(&BPoly::var(g, 2)))
            .unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.mul_truncated(&BPoly::var(g, 3)), Err(Error::DegreeOverflow(4)));
        assert_eq!(BPoly::one(g).mul_truncated(&p).unwrap(), p);
    }

    #[test]
    fn dimensions() {
        assert_eq!(b3_dimension(3), 42);
        assert_eq!(b3_dimension(1), 4);
        assert_eq!(b3_basis(3).len(), 42);
        assert_eq!(b3_log_orders(3), (42, 41));
        assert_eq!(b3_log_orders(1), (4, 3));
    }

    #[test]
    fn alpha_image_of_one() {
        let g = 3;
        let m = alpha_multiplication_map(g);
        let col0: Vec<u8> = m.iter().map(|r| r[0]).collect();
        assert_eq!(col0, alpha(g).coordinates());
        assert_eq!(alpha(g).support().len(), g);
    }

    #[test]
    fn display() {
        let g = 2;
        let r = reduce_symbol(&(Z2Class::a(g, 1) + Z2Class::b(g, 1)));
        assert_eq!(r.to_string(), "1 + A1 + B1");
    }
}
