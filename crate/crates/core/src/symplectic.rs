//! Integral symplectic matrices, level-d congruence subgroups and the
//! abelianization maps attached to them.
//!
//! Basis order is `A_1..A_g, B_1..B_g`. The form is `x . y = x^T J y` with
//! `J = [[0, I], [-I, 0]]`, so `A_i . B_i = +1`. Matrices act on column
//! vectors; column `j` is the image of basis vector `j`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::smith::InvariantFactors;

type Mat = Vec<Vec<BigInt>>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector {
    g: usize,
    entries: Vec<BigInt>,
}

impl IntVector {
    pub fn new(g: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != 2 * g {
            return Err(Error::DimensionMismatch {
                expected: 2 * g,
                got: entries.len(),
            });
        }
        Ok(IntVector { g, entries })
    }

    pub fn from_i64(g: usize, entries: &[i64]) -> Result<Self> {
        Self::new(g, entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero(g: usize) -> Self {
        IntVector {
            g,
            entries: vec![BigInt::zero(); 2 * g],
        }
    }

    /// `A_i`, 1-based.
    pub fn a(g: usize, i: usize) -> Self {
        let mut v = Self::zero(g);
        v.entries[i - 1] = BigInt::one();
        v
    }

    /// `B_i`, 1-based.
    pub fn b(g: usize, i: usize) -> Self {
        let mut v = Self::zero(g);
        v.entries[g + i - 1] = BigInt::one();
        v
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        let g = self.g;
        let mut s = BigInt::zero();
        for i in 0..g {
            s += &self.entries[i] * &other.entries[g + i];
            s -= &self.entries[g + i] * &other.entries[i];
        }
        s
    }

    pub fn scale(&self, k: i64) -> Self {
        IntVector {
            g: self.g,
            entries: self.entries.iter().map(|v| v * k).collect(),
        }
    }
}

impl std::ops::Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        IntVector {
            g: self.g,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        self + &rhs.scale(-1)
    }
}

/// An element of Sp(2g; Z).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SympElement {
    g: usize,
    m: Mat,
}

fn identity_mat(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn j_mat(g: usize) -> Mat {
    let n = 2 * g;
    let mut j = vec![vec![BigInt::zero(); n]; n];
    for i in 0..g {
        j[i][g + i] = BigInt::one();
        j[g + i][i] = -BigInt::one();
    }
    j
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    out[i][j] += &a[i][t] * &b[t][j];
                }
            }
        }
    }
    out
}

fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

fn is_symplectic(g: usize, m: &Mat) -> bool {
    let j = j_mat(g);
    mat_mul(&mat_mul(&transpose(m), &j), m) == j
}

impl SympElement {
    /// Checked constructor.
    pub fn new(g: usize, m: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = 2 * g;
        if m.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.len(),
            });
        }
        if let Some(r) = m.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: r.len(),
            });
        }
        if !is_symplectic(g, &m) {
            return Err(Error::NotSymplectic);
        }
        Ok(SympElement { g, m })
    }

    pub fn from_i64(g: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            g,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    fn raw(g: usize, m: Mat) -> Self {
        debug_assert!(is_symplectic(g, &m));
        SympElement { g, m }
    }

    pub fn identity(g: usize) -> Self {
        SympElement {
            g,
            m: identity_mat(2 * g),
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.m[i][j]
    }

    pub fn is_identity(&self) -> bool {
        self.m == identity_mat(2 * self.g)
    }

    pub fn mul(&self, other: &SympElement) -> Result<SympElement> {
        if self.g != other.g {
            return Err(Error::GenusMismatch(self.g, other.g));
        }
        Ok(SympElement::raw(self.g, mat_mul(&self.m, &other.m)))
    }

    /// `J^{-1} M^T J`.
    pub fn inverse(&self) -> SympElement {
        let j = j_mat(self.g);
        let jinv: Mat = j
            .iter()
            .map(|r| r.iter().map(|v| -v).collect())
            .collect();
        SympElement::raw(self.g, mat_mul(&mat_mul(&jinv, &transpose(&self.m)), &j))
    }

    pub fn pow(&self, k: i64) -> SympElement {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = SympElement::identity(self.g);
        while e > 0 {
            if e & 1 == 1 {
                acc = SympElement::raw(self.g, mat_mul(&acc.m, &base.m));
            }
            e >>= 1;
            if e > 0 {
                base = SympElement::raw(self.g, mat_mul(&base.m, &base.m));
            }
        }
        acc
    }

    pub fn commutator(&self, other: &SympElement) -> Result<SympElement> {
        self.mul(other)?
            .mul(&self.inverse())?
            .mul(&other.inverse())
    }

    pub fn apply(&self, x: &IntVector) -> IntVector {
        let n = 2 * self.g;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &self.m[i][j] * &x.entries[j])
                    .sum::<BigInt>()
            })
            .collect();
        IntVector { g: self.g, entries }
    }

    /// Row-major `{g, level, entries}` record.
    pub fn to_record(&self, level: Option<u64>) -> MatrixRecord {
        MatrixRecord {
            g: self.g,
            level,
            entries: self
                .m
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_record(rec: &MatrixRecord) -> Result<Self> {
        let m = rec
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        s.parse::<BigInt>()
                            .map_err(|e| Error::Parse(format!("{s}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rec.g, m)
    }
}

impl fmt::Display for SympElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.m {
            let row: Vec<String> = r.iter().map(|v| format!("{v:>4}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// JSON shape of a matrix; entries are decimal strings so big values survive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub g: usize,
    pub level: Option<u64>,
    pub entries: Vec<Vec<String>>,
}

/// `x -> x + (y.x) y`.
pub fn transvection(y: &IntVector) -> SympElement {
    transvection_pow(y, 1)
}

/// `T_y^k = I + k (x -> (y.x) y)`.
pub fn transvection_pow(y: &IntVector, k: i64) -> SympElement {
    let g = y.g;
    let n = 2 * g;
    let mut m = identity_mat(n);
    // y^T J as a row: (y^T J)_j = y.e_j
    let row: Vec<BigInt> = (0..n)
        .map(|j| {
            if j < g {
                -&y.entries[g + j]
            } else {
                y.entries[j - g].clone()
            }
        })
        .collect();
    for i in 0..n {
        if y.entries[i].is_zero() {
            continue;
        }
        for j in 0..n {
            m[i][j] += &y.entries[i] * &row[j] * k;
        }
    }
    SympElement::raw(g, m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub level: u64,
    pub p: Mat,
    pub q: Mat,
    pub r: Mat,
    pub s: Mat,
}

impl BlockDecomposition {
    pub fn reconstruct(&self) -> Mat {
        let g = self.p.len();
        let d = BigInt::from(self.level);
        let mut m = identity_mat(2 * g);
        for i in 0..g {
            for j in 0..g {
                m[i][j] += &d * &self.p[i][j];
                m[i][g + j] += &d * &self.q[i][j];
                m[g + i][j] += &d * &self.r[i][j];
                m[g + i][g + j] += &d * &self.s[i][j];
            }
        }
        m
    }
}

fn check_level(d: u64) -> Result<()> {
    if d == 0 {
        Err(Error::InvalidLevel(0))
    } else {
        Ok(())
    }
}

/// `A = I + d A'` split into `[[p, q], [r, s]]`.
pub fn block_decompose(a: &SympElement, d: u64) -> Result<BlockDecomposition> {
    check_level(d)?;
    let g = a.g;
    let dd = BigInt::from(d);
    let mut blocks = [
        vec![vec![BigInt::zero(); g]; g],
        vec![vec![BigInt::zero(); g]; g],
        vec![vec![BigInt::zero(); g]; g],
        vec![vec![BigInt::zero(); g]; g],
    ];
    for i in 0..2 * g {
        for j in 0..2 * g {
            let mut v = a.m[i][j].clone();
            if i == j {
                v -= 1;
            }
            let (quo, rem) = v.div_rem(&dd);
            if !rem.is_zero() {
                return Err(Error::NotInLevel(d));
            }
            let b = 2 * usize::from(i >= g) + usize::from(j >= g);
            blocks[b][i % g][j % g] = quo;
        }
    }
    let [p, q, r, s] = blocks;
    Ok(BlockDecomposition {
        level: d,
        p,
        q,
        r,
        s,
    })
}

pub fn in_level(a: &SympElement, d: u64) -> bool {
    d != 0 && block_decompose(a, d).is_ok()
}

/// Membership in the Igusa subgroup `Gamma_g[d, 2d]`.
pub fn in_igusa(a: &SympElement, d: u64) -> Result<bool> {
    check_level(d)?;
    if d % 2 == 1 {
        return Err(Error::OddLevelIgusa(d));
    }
    let Ok(b) = block_decompose(a, d) else {
        return Ok(false);
    };
    Ok((0..a.g).all(|i| b.q[i][i].is_even() && b.r[i][i].is_even()))
}

fn modu(v: &BigInt, d: u64) -> u64 {
    v.mod_floor(&BigInt::from(d)).to_u64().unwrap_or(0)
}

/// Slot of `q_{ij}` (i <= j) inside the output of [`m_map`], 0-based.
pub fn m_index_q(g: usize, i: usize, j: usize) -> usize {
    g * g + upper_index(g, i, j)
}

/// Slot of `r_{ij}` (i <= j) inside the output of [`m_map`], 0-based.
pub fn m_index_r(g: usize, i: usize, j: usize) -> usize {
    g * g + g * (g + 1) / 2 + upper_index(g, i, j)
}

fn upper_index(g: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j);
    // row-major over i <= j
    i * g - i * i.saturating_sub(1) / 2 + j - i
}

/// `(p_ij all; q_ij i<=j; r_ij i<=j) mod d`, row-major in each block.
pub fn m_map(a: &SympElement, d: u64) -> Result<Vec<u64>> {
    let b = block_decompose(a, d)?;
    let g = a.g;
    let mut out = Vec::with_capacity(2 * g * g + g);
    for i in 0..g {
        for j in 0..g {
            out.push(modu(&b.p[i][j], d));
        }
    }
    for blk in [&b.q, &b.r] {
        for i in 0..g {
            for j in i..g {
                out.push(modu(&blk[i][j], d));
            }
        }
    }
    Ok(out)
}

/// `(q_ii; r_ii) mod 2` of the level `d^2` decomposition.
pub fn m1_map(a: &SympElement, d: u64) -> Result<Vec<u8>> {
    check_level(d)?;
    let b = block_decompose(a, d * d)?;
    let g = a.g;
    let mut out: Vec<u8> = (0..g).map(|i| b.q[i][i].is_odd() as u8).collect();
    out.extend((0..g).map(|i| b.r[i][i].is_odd() as u8));
    Ok(out)
}

/// `(p_ij all; q_ij i<j; r_ij i<j) mod 2` of the level `d^2` decomposition.
pub fn m2_map(a: &SympElement, d: u64) -> Result<Vec<u8>> {
    check_level(d)?;
    let dd = d * d;
    let igusa = if dd.is_multiple_of(2) {
        in_igusa(a, dd)?
    } else {
        in_level(a, dd)
    };
    if !igusa {
        return Err(Error::NotInIgusa(dd, 2 * dd));
    }
    let b = block_decompose(a, dd)?;
    let g = a.g;
    let mut out = Vec::with_capacity(2 * g * g - g);
    for i in 0..g {
        for j in 0..g {
            out.push(b.p[i][j].is_odd() as u8);
        }
    }
    for blk in [&b.q, &b.r] {
        for i in 0..g {
            for j in (i + 1)..g {
                out.push(blk[i][j].is_odd() as u8);
            }
        }
    }
    Ok(out)
}

/// Both sides of the transvection power identity for `a_1 A_1 + b_1 B_1 + a_2 A_2`.
pub fn lemma_matrix_sides(
    a1: i64,
    b1: i64,
    a2: i64,
    d: i64,
    g: usize,
    a2_exponent: i64,
) -> (SympElement, SympElement) {
    assert!(g >= 2, "needs two handles");
    let va1 = IntVector::a(g, 1);
    let vb1 = IntVector::b(g, 1);
    let va2 = IntVector::a(g, 2);
    let lhs_vec = &(&va1.scale(a1) + &vb1.scale(b1)) + &va2.scale(a2);
    let lhs = transvection_pow(&lhs_vec, d);

    let t = |v: &IntVector, k: i64| transvection_pow(v, k);
    let x = t(&(&vb1 + &va2), d)
        .mul(&t(&va2, -d))
        .and_then(|m| m.mul(&t(&vb1, -d)))
        .expect("same genus");
    let y = t(&(&va1 + &va2), d)
        .mul(&t(&va1, -d))
        .and_then(|m| m.mul(&t(&va2, -d)))
        .expect("same genus");
    let tail = t(&(&va1.scale(a1) + &vb1.scale(b1)), d);
    let rhs = t(&va2, d)
        .pow(a2_exponent)
        .mul(&x.pow(b1 * a2))
        .and_then(|m| m.mul(&y.pow(a1 * a2)))
        .and_then(|m| m.mul(&tail))
        .expect("same genus");
    (lhs, rhs)
}

/// Exact matrix equality of the two sides, with the stated exponent
/// `(a_1 b_1 + 1) a_2^2` on `T_{A_2}^d`.
pub fn verify_lemma_matrix(a1: i64, b1: i64, a2: i64, d: i64, g: usize) -> bool {
    let (lhs, rhs) = lemma_matrix_sides(a1, b1, a2, d, g, (a1 * b1 + 1) * a2 * a2);
    lhs == rhs
}

/// The two sides agree modulo `Gamma_g[d^2]` when the exponent on
/// `T_{A_2}^d` is `a_2^2`.
pub fn verify_lemma_matrix_mod_d2(a1: i64, b1: i64, a2: i64, d: i64, g: usize) -> bool {
    let (lhs, rhs) = lemma_matrix_sides(a1, b1, a2, d, g, a2 * a2);
    let dd = BigInt::from(d * d);
    lhs.m
        .iter()
        .flatten()
        .zip(rhs.m.iter().flatten())
        .all(|(x, y)| ((x - y) % &dd).is_zero())
}

/// `T_{x+y} T_{x-y} = T_x^2 T_y^2` for orthogonal `x, y`.
pub fn verify_lantern(x: &IntVector, y: &IntVector) -> Result<bool> {
    if x.g != y.g {
        return Err(Error::GenusMismatch(x.g, y.g));
    }
    let p = x.dot(y);
    if !p.is_zero() {
        return Err(Error::NonOrthogonal(p.to_string()));
    }
    let lhs = transvection(&(x + y)).mul(&transvection(&(x - y)))?;
    let rhs = transvection_pow(x, 2).mul(&transvection_pow(y, 2))?;
    Ok(lhs == rhs)
}

fn add_scaled_identity(g: usize, a: &Mat, d: i64) -> Mat {
    let mut m = identity_mat(2 * g);
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m[i][j] += v * d;
        }
    }
    m
}

fn to_big(a: &[Vec<i64>]) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Commutator of `I + dA'` and `I + dB'` computed exactly.
pub fn commutator_of_level_elements(
    g: usize,
    a_prime: &[Vec<i64>],
    b_prime: &[Vec<i64>],
    d: i64,
) -> Result<SympElement> {
    let a = SympElement::new(g, add_scaled_identity(g, &to_big(a_prime), d))?;
    let b = SympElement::new(g, add_scaled_identity(g, &to_big(b_prime), d))?;
    a.commutator(&b)
}

/// `[I + dA', I + dB'] = I + d^2 (A'B' - B'A') mod d^3`.
pub fn verify_commutator_congruence(
    g: usize,
    a_prime: &[Vec<i64>],
    b_prime: &[Vec<i64>],
    d: i64,
) -> Result<bool> {
    let c = commutator_of_level_elements(g, a_prime, b_prime, d)?;
    let ap = to_big(a_prime);
    let bp = to_big(b_prime);
    let ab = mat_mul(&ap, &bp);
    let ba = mat_mul(&bp, &ap);
    let diff: Mat = ab
        .iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect();
    let expected = add_scaled_identity(g, &diff, d * d);
    Ok(congruent(&c.m, &expected, d * d * d))
}

/// Whether `a` is congruent to `I + d^2 E` modulo `d^3`.
pub fn commutator_matches(c: &SympElement, e: &[Vec<i64>], d: i64) -> bool {
    let expected = add_scaled_identity(c.g, &to_big(e), d * d);
    congruent(&c.m, &expected, d * d * d)
}

fn congruent(a: &Mat, b: &Mat, modulus: i64) -> bool {
    let m = BigInt::from(modulus);
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .all(|(x, y)| ((x - y) % &m).is_zero())
}

/// Elementary matrix `e_{ij}` (1-based) of size `2g`.
pub fn elementary(g: usize, i: usize, j: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; 2 * g]; 2 * g];
    m[i - 1][j - 1] = 1;
    m
}

pub fn mat_add_i64(a: &[Vec<i64>], b: &[Vec<i64>], sign: i64) -> Vec<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + sign * y).collect())
        .collect()
}

/// `(A', B', expected difference)`.
pub type GeneratorInstance = (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>);

/// The two commutator generator instances.
pub fn generator_instances(g: usize) -> Vec<GeneratorInstance> {
    assert!(g >= 2);
    let e = |i, j| elementary(g, i, j);
    vec![
        (
            e(1, g + 1),
            e(g + 1, 1),
            mat_add_i64(&e(1, 1), &e(g + 1, g + 1), -1),
        ),
        (
            mat_add_i64(&e(1, 2), &e(g + 2, g + 1), -1),
            e(2, g + 2),
            mat_add_i64(&e(1, g + 2), &e(2, g + 1), 1),
        ),
    ]
}

/// Closed-form abelianization of `Gamma_g[d]`: `Z_d^{2g^2+g}` for odd `d`,
/// `Z_d^{2g^2-g} + Z_{2d}^{2g}` for even `d`.
pub fn abelianization_formula(g: usize, d: u64) -> InvariantFactors {
    if d % 2 == 1 {
        InvariantFactors::from_counts(&[(d, 2 * g * g + g)])
    } else {
        InvariantFactors::from_counts(&[(d, 2 * g * g - g), (2 * d, 2 * g)])
    }
}

/// A random element of `Sp(2g; Z)` built from basis transvections.
pub fn random_conjugator<R: Rng>(g: usize, rng: &mut R, len: usize) -> SympElement {
    let mut s = SympElement::identity(g);
    for _ in 0..len {
        let i = rng.gen_range(1..=g);
        let y = match rng.gen_range(0..3) {
            0 => IntVector::a(g, i),
            1 => IntVector::b(g, i),
            _ if g >= 2 => {
                let j = (i % g) + 1;
                &IntVector::a(g, i) - &IntVector::a(g, j)
            }
            _ => &IntVector::a(g, i) + &IntVector::b(g, i),
        };
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        s = s.mul(&transvection_pow(&y, k)).expect("same genus");
    }
    s
}

/// A random element of `Gamma_g[d]`: a product of at most `max_len`
/// conjugates `S T_x^{+-d} S^{-1}` of basis transvection powers.
pub fn random_level_element<R: Rng>(g: usize, d: i64, rng: &mut R, max_len: usize) -> SympElement {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut acc = SympElement::identity(g);
    for _ in 0..len {
        let steps = rng.gen_range(0..=3);
        let s = random_conjugator(g, rng, steps);
        let i = rng.gen_range(1..=g);
        let x = if rng.gen_bool(0.5) {
            IntVector::a(g, i)
        } else {
            IntVector::b(g, i)
        };
        let k = if rng.gen_bool(0.5) { d } else { -d };
        let f = s
            .mul(&transvection_pow(&x, k))
            .and_then(|m| m.mul(&s.inverse()))
            .expect("same genus");
        acc = acc.mul(&f).expect("same genus");
    }
    acc
}

/// A random vector with entries in `[-bound, bound]`.
pub fn random_vector<R: Rng>(g: usize, rng: &mut R, bound: i64) -> IntVector {
    let v: Vec<i64> = (0..2 * g).map(|_| rng.gen_range(-bound..=bound)).collect();
    IntVector::from_i64(g, &v).expect("length 2g")
}

/// A random pair `(x, y)` with `x . y = 0`: for a coordinate `k` with
/// `c = x . e_k != 0`, `c y - (x . y) e_k` is orthogonal to `x`.
pub fn random_orthogonal_pair<R: Rng>(g: usize, rng: &mut R, bound: i64) -> (IntVector, IntVector) {
    loop {
        let x = random_vector(g, rng, bound);
        let y = random_vector(g, rng, bound);
        let p = x.dot(&y).to_i64().expect("small");
        let Some((e, c)) = (0..2 * g)
            .map(|k| unit(g, k))
            .map(|e| {
                let c = x.dot(&e).to_i64().expect("small");
                (e, c)
            })
            .find(|(_, c)| *c != 0)
        else {
            continue;
        };
        let y2 = &y.scale(c) - &e.scale(p);
        debug_assert!(x.dot(&y2).is_zero());
        return (x, y2);
    }
}

fn unit(g: usize, k: usize) -> IntVector {
    let mut v = IntVector::zero(g);
    v.entries[k] = BigInt::one();
    v
}

/// Largest absolute entry, for diagnostics.
pub fn max_abs_entry(a: &SympElement) -> BigInt {
    a.m.iter()
        .flatten()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(g: usize, rows: &[&[i64]]) -> SympElement {
        SympElement::from_i64(g, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn transvection_basis() {
        let t = transvection(&IntVector::a(2, 1));
        let e = mat(2, &[&[1, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(t, e);
        let t = transvection(&IntVector::b(2, 1));
        let e = mat(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[-1, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(t, e);
    }

    #[test]
    fn transvection_matches_definition() {
        let g = 2;
        let y = &IntVector::a(g, 1) + &IntVector::b(g, 1);
        let t = transvection(&y);
        for k in 0..2 * g {
            let x = unit(g, k);
            let expect = &x + &y.scale(y.dot(&x).to_i64().unwrap());
            assert_eq!(t.apply(&x), expect);
        }
    }

    #[test]
    fn inverse_and_power() {
        let y = IntVector::a(2, 1);
        let t = transvection(&y);
        assert_eq!(t.inverse(), transvection_pow(&y, -1));
        assert!(t.mul(&t.inverse()).unwrap().is_identity());
        assert_eq!(t.pow(5), transvection_pow(&y, 5));
        assert_eq!(t.pow(-3), transvection_pow(&y, -3));
    }

    #[test]
    fn non_symplectic_rejected() {
        let r = SympElement::from_i64(1, &[vec![2, 0], vec![0, 1]]);
        assert_eq!(r, Err(Error::NotSymplectic));
    }

    #[test]
    fn blocks_of_twist_powers() {
        let g = 2;
        let d = 3;
        let b = block_decompose(&transvection_pow(&IntVector::a(g, 1), d), d as u64).unwrap();
        assert_eq!(b.q[0][0], BigInt::one());
        assert!(b.p.iter().chain(&b.r).chain(&b.s).flatten().all(|v| v.is_zero()));
        let b = block_decompose(&transvection_pow(&IntVector::b(g, 1), d), d as u64).unwrap();
        assert_eq!(b.r[0][0], BigInt::from(-1));
        let t = transvection_pow(&IntVector::b(g, 1), d);
        assert_eq!(b.reconstruct(), t.entries().to_vec());
    }

    #[test]
    fn not_in_level() {
        let t = transvection(&IntVector::a(2, 1));
        assert_eq!(block_decompose(&t, 2).unwrap_err(), Error::NotInLevel(2));
        assert!(!in_level(&t, 2));
    }

    #[test]
    fn igusa_examples() {
        let g = 2;
        let d = 2;
        let a = IntVector::a(g, 1);
        assert!(in_igusa(&transvection_pow(&a, 2 * d), d as u64).unwrap());
        assert!(!in_igusa(&transvection_pow(&a, d), d as u64).unwrap());
        assert_eq!(in_igusa(&SympElement::identity(g), 3), Err(Error::OddLevelIgusa(3)));
    }

    #[test]
    fn m_of_twist_power() {
        let g = 2;
        let m = m_map(&transvection_pow(&IntVector::a(g, 1), 3), 3).unwrap();
        assert_eq!(m.len(), 2 * g * g + g);
        let mut e = vec![0; m.len()];
        e[m_index_q(g, 0, 0)] = 1;
        assert_eq!(m, e);
        assert!(m_map(&SympElement::identity(g), 3).unwrap().iter().all(|&v| v == 0));
    }

    #[test]
    fn m_slots() {
        let g = 3;
        assert_eq!(m_index_q(g, 0, 0), 9);
        assert_eq!(m_index_q(g, 0, 2), 11);
        assert_eq!(m_index_q(g, 1, 1), 12);
        assert_eq!(m_index_q(g, 2, 2), 14);
        assert_eq!(m_index_r(g, 0, 0), 15);
        assert_eq!(m_index_r(g, 2, 2), 20);
    }

    #[test]
    fn m1_of_twist() {
        let g = 2;
        let d = 2;
        let m = m1_map(&transvection_pow(&IntVector::a(g, 1), (d * d) as i64), d).unwrap();
        assert_eq!(m, vec![1, 0, 0, 0]);
        assert_eq!(
            m2_map(&SympElement::identity(g), d).unwrap(),
            vec![0; 2 * g * g - g]
        );
    }

    #[test]
    fn lemma_matrix_trivial_and_unit_level() {
        assert!(verify_lemma_matrix(0, 0, 0, 3, 2));
        assert!(verify_lemma_matrix(2, 2, 1, 1, 2));
        assert!(verify_lemma_matrix(1, 0, -1, 2, 2));
    }

    #[test]
    fn lantern_simple() {
        assert!(verify_lantern(&IntVector::a(2, 1), &IntVector::a(2, 2)).unwrap());
        assert!(verify_lantern(&IntVector::zero(2), &IntVector::zero(2)).unwrap());
        assert!(matches!(
            verify_lantern(&IntVector::a(2, 1), &IntVector::b(2, 1)),
            Err(Error::NonOrthogonal(_))
        ));
    }

    #[test]
    fn commutator_instances() {
        for d in [2, 3, 4] {
            for g in [2, 3] {
                for (a, b, e) in generator_instances(g) {
                    assert!(verify_commutator_congruence(g, &a, &b, d).unwrap());
                    let c = commutator_of_level_elements(g, &a, &b, d).unwrap();
                    assert!(commutator_matches(&c, &e, d));
                }
            }
        }
        let a = elementary(2, 1, 3);
        let c = commutator_of_level_elements(2, &a, &a, 2).unwrap();
        assert!(c.is_identity());
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(abelianization_formula(2, 3).to_string(), "Z_3^10");
        assert_eq!(abelianization_formula(2, 2).to_string(), "Z_2^6 + Z_4^4");
        assert_eq!(abelianization_formula(3, 2).to_string(), "Z_2^15 + Z_4^6");
    }

    #[test]
    fn record_roundtrip() {
        let t = transvection_pow(&IntVector::b(2, 2), 7);
        let rec = t.to_record(Some(7));
        assert_eq!(SympElement::from_record(&rec).unwrap(), t);
    }
}
