//! Z_4-valued quadratic enhancements and their Brown invariants, computed
//! from exact Gauss sums in Z[i].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::SpinForm;

pub const MAX_DIM: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, o: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `i^k`.
    pub fn i_pow(k: u32) -> GaussianInt {
        match k % 4 {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < BigInt::zero() {
            write!(f, "{} - {}i", self.re, -&self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

/// A quadratic enhancement `q: Z_2^n -> Z_4` of a symmetric pairing, given on
/// a basis. A basis vector with `x . x = 1` needs an odd value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Enhancement {
    dim: usize,
    // row i as a bitmask
    pairing: Vec<u32>,
    values: Vec<u8>,
}

/// JSON shape: `{dim, pairing: [[...]], basis_values: [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnhancementRecord {
    pub dim: usize,
    pub pairing: Vec<Vec<u8>>,
    pub basis_values: Vec<i64>,
}

impl Enhancement {
    pub fn new(pairing: &[Vec<u8>], basis_values: &[i64]) -> Result<Self> {
        let dim = basis_values.len();
        if dim > MAX_DIM {
            return Err(Error::SizeLimit(format!("enhancement dimension {dim} > {MAX_DIM}")));
        }
        if pairing.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: pairing.len(),
            });
        }
        let mut rows = vec![0u32; dim];
        for (i, row) in pairing.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(Error::InvalidEnhancement(format!("pairing entry {v} is not a bit")));
                }
                if v != pairing[j][i] {
                    return Err(Error::InvalidEnhancement("pairing is not symmetric".into()));
                }
                rows[i] |= (v as u32) << j;
            }
        }
        let values: Vec<u8> = basis_values.iter().map(|v| v.rem_euclid(4) as u8).collect();
        for (i, &v) in values.iter().enumerate() {
            if (v & 1) as u32 != (rows[i] >> i) & 1 {
                return Err(Error::InvalidEnhancement(format!(
                    "basis value {v} at {i} has the wrong parity for x.x = {}",
                    (rows[i] >> i) & 1
                )));
            }
        }
        Ok(Enhancement {
            dim,
            pairing: rows,
            values,
        })
    }

    pub fn from_record(r: &EnhancementRecord) -> Result<Self> {
        if r.dim != r.basis_values.len() {
            return Err(Error::DimensionMismatch {
                expected: r.dim,
                got: r.basis_values.len(),
            });
        }
        Self::new(&r.pairing, &r.basis_values)
    }

    pub fn to_record(&self) -> EnhancementRecord {
        EnhancementRecord {
            dim: self.dim,
            pairing: (0..self.dim)
                .map(|i| (0..self.dim).map(|j| ((self.pairing[i] >> j) & 1) as u8).collect())
                .collect(),
            basis_values: self.values.iter().map(|&v| v as i64).collect(),
        }
    }

    /// `2 q_sigma` on `H_1(Sigma_g; Z_2)` with the intersection form.
    pub fn doubled(sigma: &SpinForm) -> Self {
        let g = sigma.genus();
        let n = 2 * g;
        let pairing: Vec<u32> = (0..n).map(|i| 1u32 << ((i + g) % n)).collect();
        let values = (0..n)
            .map(|i| 2 * ((sigma.basis_values() >> i) & 1) as u8)
            .collect();
        Enhancement {
            dim: n,
            pairing,
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_values(&self) -> &[u8] {
        &self.values
    }

    pub fn pair(&self, x: u32, y: u32) -> u8 {
        let mut s = 0u32;
        let mut xs = x;
        while xs != 0 {
            let i = xs.trailing_zeros();
            s ^= (self.pairing[i as usize] & y).count_ones() & 1;
            xs &= xs - 1;
        }
        s as u8
    }

    /// `q(x) = sum_{i in x} v_i + 2 sum_{i<j in x} p_ij mod 4`.
    pub fn qhat(&self, x: u32) -> u8 {
        let mut s: u32 = 0;
        let mut cross: u32 = 0;
        let mut xs = x;
        while xs != 0 {
            let i = xs.trailing_zeros() as usize;
            s += self.values[i] as u32;
            let above = x & !((2u32 << i) - 1);
            cross += (self.pairing[i] & above).count_ones();
            xs &= xs - 1;
        }
        ((s + 2 * cross) % 4) as u8
    }

    /// Counts of `q = 0, 1, 2, 3`.
    pub fn value_counts(&self) -> [u64; 4] {
        let mut c = [0u64; 4];
        for x in 0..(1u32 << self.dim) {
            c[self.qhat(x) as usize] += 1;
        }
        c
    }

    /// `sum_x i^{q(x)}`.
    pub fn gauss_sum(&self) -> GaussianInt {
        let c = self.value_counts();
        GaussianInt::new(c[0] as i64 - c[2] as i64, c[1] as i64 - c[3] as i64)
    }

    pub fn is_nondegenerate(&self) -> bool {
        gf2_rank(&self.pairing, self.dim) == self.dim
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &Enhancement) -> Result<Enhancement> {
        let dim = self.dim + other.dim;
        if dim > MAX_DIM {
            return Err(Error::SizeLimit(format!("enhancement dimension {dim} > {MAX_DIM}")));
        }
        let mut pairing = self.pairing.clone();
        pairing.extend(other.pairing.iter().map(|r| r << self.dim));
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Ok(Enhancement {
            dim,
            pairing,
            values,
        })
    }
}

pub fn gf2_rank(rows: &[u32], ncols: usize) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for c in 0..ncols {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> c & 1 == 1) {
            rows.swap(rank, p);
            let pr = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> c & 1 == 1 {
                    *row ^= pr;
                }
            }
            rank += 1;
        }
    }
    rank
}

/// The `B` in `Z_8` with `gauss_sum = 2^{n/2} exp(2 pi i B / 8)`.
///
/// `2^{n/2} zeta_8^B = (1+i)^n zeta_8^{B-n}`, which lies in `Z[i]` only for
/// `B = n + 2k`; then it equals `(1+i)^n i^k`.
pub fn brown_invariant(e: &Enhancement) -> Result<u8> {
    let gs = e.gauss_sum();
    let n = e.dim;
    if gs.norm() != BigInt::one() << n {
        return Err(Error::DegenerateEnhancement {
            re: gs.re.to_string(),
            im: gs.im.to_string(),
        });
    }
    let mut base = GaussianInt::one();
    for _ in 0..n {
        base = base.mul(&GaussianInt::new(1, 1));
    }
    for k in 0..4u32 {
        if base.mul(&GaussianInt::i_pow(k)) == gs {
            return Ok(((n as u32 + 2 * k) % 8) as u8);
        }
    }
    Err(Error::DegenerateEnhancement {
        re: gs.re.to_string(),
        im: gs.im.to_string(),
    })
}

/// The enhancement on the three-dimensional `H_1(F; Z_2)` attached to a spin
/// structure: basis `x, y, z` with `x.x = y.y = x.y = x.z = 1`, `z.z = y.z = 0`,
/// values `q(x) = -1 + 2 q(A_1)`, `q(y) = 1 + 2 q(B_1)`, `q(z) = 0`.
pub fn surface_f(q_a1: u8, q_b1: u8) -> Enhancement {
    let pairing = vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 0]];
    let values = [-1 + 2 * q_a1 as i64, 1 + 2 * q_b1 as i64, 0];
    Enhancement::new(&pairing, &values).expect("valid by construction")
}

/// Every symmetric nondegenerate pairing on `Z_2^n`, as row bitmasks.
pub fn nondegenerate_pairings(n: usize) -> Vec<Vec<Vec<u8>>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << slots.len()) {
        let mut m = vec![vec![0u8; n]; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            let v = ((mask >> k) & 1) as u8;
            m[i][j] = v;
            m[j][i] = v;
        }
        let rows: Vec<u32> = m
            .iter()
            .map(|r| r.iter().enumerate().fold(0u32, |acc, (j, &v)| acc | (v as u32) << j))
            .collect();
        if gf2_rank(&rows, n) == n {
            out.push(m);
        }
    }
    out
}

/// Every basis assignment in `Z_4^n` compatible with the diagonal of `pairing`.
pub fn compatible_assignments(pairing: &[Vec<u8>]) -> Vec<Vec<i64>> {
    let n = pairing.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        // bit i picks the high bit of v_i; parity is forced
        let v: Vec<i64> = (0..n)
            .map(|i| 2 * ((mask >> i) & 1) as i64 + pairing[i][i] as i64)
            .collect();
        out.push(v);
    }
    out
}
