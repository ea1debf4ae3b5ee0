//! Free-group words, the Magnus expansion truncated past degree 2 over
//! `Z_d`, the mod-d Johnson homomorphism on level-d IA endomorphisms and
//! membership of its values in the image of `Lambda^3 H`.
//!
//! Generators of `F_{2g}` are numbered in block order: `x_i = a_i`,
//! `x_{g+i} = b_i` (1-based). A letter is a signed generator number.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::binomial;
use crate::error::{Error, Result};
use crate::smith::{in_span_mod, ModularSnf};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    /// Freely reduces the given letters. Zero is not a letter.
    pub fn new(letters: &[i32]) -> Self {
        assert!(letters.iter().all(|&l| l != 0), "0 is not a letter");
        let mut w = FreeWord::empty();
        for &l in letters {
            w.push(l);
        }
        w
    }

    pub fn gen(i: i32) -> Self {
        Self::new(&[i])
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, o: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &o.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::empty(), |acc, _| acc.mul(&base))
    }

    pub fn commutator(&self, o: &FreeWord) -> FreeWord {
        self.mul(o).mul(&self.inverse()).mul(&o.inverse())
    }

    /// Exponent sums over `n` generators.
    pub fn abelianize(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// Cyclically reduced core.
    pub fn cyclic_reduction(&self) -> FreeWord {
        let mut l = &self.letters[..];
        while l.len() >= 2 && l[0] == -l[l.len() - 1] {
            l = &l[1..l.len() - 1];
        }
        FreeWord { letters: l.to_vec() }
    }

    /// Conjugacy in the free group: cyclic reductions agree up to rotation.
    pub fn is_conjugate(&self, o: &FreeWord) -> bool {
        let a = self.cyclic_reduction().letters;
        let b = o.cyclic_reduction().letters;
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|r| a[r..].iter().chain(&a[..r]).eq(b.iter()))
    }

    /// Parses `"a1 b1 A1 B1"`; uppercase is the inverse letter.
    pub fn parse(s: &str, g: usize) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let mut chars = tok.chars();
            let c = chars.next().expect("nonempty token");
            let idx: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            if idx == 0 || idx > g {
                return Err(Error::Parse(format!("letter {tok:?} out of range for genus {g}")));
            }
            let (base, sign) = match c {
                'a' => (idx, 1),
                'A' => (idx, -1),
                'b' => (g + idx, 1),
                'B' => (g + idx, -1),
                _ => return Err(Error::Parse(format!("bad letter {tok:?}"))),
            };
            letters.push(sign * base as i32);
        }
        Ok(FreeWord::new(&letters))
    }

    pub fn format(&self, g: usize) -> String {
        self.letters
            .iter()
            .map(|&l| {
                let k = l.unsigned_abs() as usize;
                let (c, i) = if k <= g { ('a', k) } else { ('b', k - g) };
                let c = if l < 0 { c.to_ascii_uppercase() } else { c };
                format!("{c}{i}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize, len: usize) -> FreeWord {
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let k = rng.gen_range(1..=n as i32);
                if rng.gen_bool(0.5) {
                    k
                } else {
                    -k
                }
            })
            .collect();
        FreeWord::new(&letters)
    }
}

/// `c0 + c1 + c2` with `c1` in `H (x) Z_d` and `c2` in `H^{(x)2} (x) Z_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncTensor2 {
    d: u64,
    c0: u64,
    c1: Vec<u64>,
    c2: Vec<Vec<u64>>,
}

impl TruncTensor2 {
    pub fn one(n: usize, d: u64) -> Self {
        TruncTensor2 {
            d,
            c0: 1 % d,
            c1: vec![0; n],
            c2: vec![vec![0; n]; n],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    pub fn c0(&self) -> u64 {
        self.c0
    }

    pub fn c1(&self) -> &[u64] {
        &self.c1
    }

    pub fn c2(&self) -> &[Vec<u64>] {
        &self.c2
    }

    pub fn mul(&self, o: &TruncTensor2) -> TruncTensor2 {
        let d = self.d;
        let n = self.c1.len();
        let c0 = self.c0 * o.c0 % d;
        let c1 = (0..n)
            .map(|i| (self.c0 * o.c1[i] + self.c1[i] * o.c0) % d)
            .collect();
        let c2 = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (self.c0 * o.c2[i][j] + self.c1[i] * o.c1[j] + self.c2[i][j] * o.c0) % d
                    })
                    .collect()
            })
            .collect();
        TruncTensor2 { d, c0, c1, c2 }
    }

    /// `theta(x_i) = 1 + X_i`, `theta(x_i^{-1}) = 1 - X_i + X_i (x) X_i`.
    fn letter(n: usize, d: u64, l: i32) -> TruncTensor2 {
        let mut t = TruncTensor2::one(n, d);
        let k = l.unsigned_abs() as usize - 1;
        if l > 0 {
            t.c1[k] = 1 % d;
        } else {
            t.c1[k] = (d - 1) % d;
            t.c2[k][k] = 1 % d;
        }
        t
    }
}

/// Magnus expansion of a word in `F_n` modulo degree 3, over `Z_d`.
pub fn magnus(w: &FreeWord, n: usize, d: u64) -> TruncTensor2 {
    assert!(d >= 2, "modulus must be at least 2");
    w.letters
        .iter()
        .fold(TruncTensor2::one(n, d), |acc, &l| acc.mul(&TruncTensor2::letter(n, d, l)))
}

fn in_kernel(w: &FreeWord, n: usize, d: u64) -> bool {
    w.abelianize(n).iter().all(|v| v.rem_euclid(d as i64) == 0)
}

/// Degree-2 part of `theta(w)` for `w` in the mod-d kernel of abelianization.
pub fn theta2_on_kernel(w: &FreeWord, n: usize, d: u64) -> Result<Vec<Vec<u64>>> {
    if !in_kernel(w, n, d) {
        return Err(Error::NotInKernel(d));
    }
    Ok(magnus(w, n, d).c2)
}

pub fn is_skew(m: &[Vec<u64>], d: u64) -> bool {
    let n = m.len();
    (0..n).all(|i| m[i][i].is_multiple_of(d) && (0..n).all(|j| (m[i][j] + m[j][i]).is_multiple_of(d)))
}

/// A random word in the mod-d kernel: a product of `d`-th powers and
/// commutators of random words, conjugated at random.
pub fn random_kernel_word<R: Rng>(rng: &mut R, n: usize, d: u64, len: usize) -> FreeWord {
    let mut w = FreeWord::empty();
    for _ in 0..rng.gen_range(1..=3) {
        let u = FreeWord::random(rng, n, len);
        let v = FreeWord::random(rng, n, len);
        let c = FreeWord::random(rng, n, len);
        let piece = if rng.gen_bool(0.5) {
            u.pow(d as i64)
        } else {
            u.commutator(&v)
        };
        w = w.mul(&c.mul(&piece).mul(&c.inverse()));
    }
    w
}

/// An endomorphism of `F_{2g}` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EndoF {
    g: usize,
    d: u64,
    images: Vec<FreeWord>,
}

/// JSON shape: `{g, d, images: ["a1 b1 A1", ...]}` in the order `a_1..a_g, b_1..b_g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismRecord {
    pub g: usize,
    pub d: u64,
    pub images: Vec<String>,
}

impl EndoF {
    pub fn new(g: usize, d: u64, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != 2 * g {
            return Err(Error::DimensionMismatch {
                expected: 2 * g,
                got: images.len(),
            });
        }
        if images
            .iter()
            .flat_map(|w| &w.letters)
            .any(|l| l.unsigned_abs() as usize > 2 * g)
        {
            return Err(Error::Parse("image uses a letter outside F_2g".into()));
        }
        Ok(EndoF { g, d, images })
    }

    pub fn identity(g: usize, d: u64) -> Self {
        EndoF {
            g,
            d,
            images: (1..=2 * g as i32).map(FreeWord::gen).collect(),
        }
    }

    pub fn from_record(r: &AutomorphismRecord) -> Result<Self> {
        let images = r
            .images
            .iter()
            .map(|s| FreeWord::parse(s, r.g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(r.g, r.d, images)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: AutomorphismRecord =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_record(&r)
    }

    pub fn to_record(&self) -> AutomorphismRecord {
        AutomorphismRecord {
            g: self.g,
            d: self.d,
            images: self.images.iter().map(|w| w.format(self.g)).collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn level(&self) -> u64 {
        self.d
    }

    pub fn with_level(&self, d: u64) -> Self {
        EndoF {
            d,
            ..self.clone()
        }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::empty();
        for &l in &w.letters {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            out = if l > 0 {
                out.mul(img)
            } else {
                out.mul(&img.inverse())
            };
        }
        out
    }

    /// `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &EndoF) -> EndoF {
        EndoF {
            g: self.g,
            d: self.d,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> EndoF {
        (0..k).fold(EndoF::identity(self.g, self.d), |acc, _| acc.compose(self))
    }

    /// Integral action on `H`; column `i` is the class of the image of `x_i`.
    pub fn h_action(&self) -> Vec<Vec<i64>> {
        let n = 2 * self.g;
        let cols: Vec<Vec<i64>> = self.images.iter().map(|w| w.abelianize(n)).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect()
    }

    pub fn is_level_ia(&self) -> bool {
        let n = 2 * self.g;
        let d = self.d as i64;
        self.h_action().iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, &v)| (v - i64::from(r == c)).rem_euclid(d) == 0)
        }) && n == self.images.len()
    }

    pub fn acts_trivially_on_h(&self) -> bool {
        self.h_action()
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(r == c)))
    }
}

/// `prod_i [a_i, b_i]`, `[a, b] = a b a^-1 b^-1`.
pub fn boundary_word(g: usize) -> FreeWord {
    (1..=g as i32).fold(FreeWord::empty(), |acc, i| {
        acc.mul(&FreeWord::gen(i).commutator(&FreeWord::gen(g as i32 + i)))
    })
}

/// `phi(boundary)` is conjugate to the boundary word.
pub fn boundary_preserved(phi: &EndoF) -> bool {
    let b = boundary_word(phi.g);
    phi.apply(&b).is_conjugate(&b)
}

/// `tau_d(phi)`: for each generator, the matrix of `theta_2(x^{-1} phi(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JohnsonValue {
    pub d: u64,
    pub mats: Vec<Vec<Vec<u64>>>,
}

impl JohnsonValue {
    pub fn is_zero(&self) -> bool {
        self.mats.iter().flatten().flatten().all(|&v| v == 0)
    }

    pub fn add(&self, o: &JohnsonValue) -> JohnsonValue {
        let d = self.d;
        JohnsonValue {
            d,
            mats: self
                .mats
                .iter()
                .zip(&o.mats)
                .map(|(a, b)| {
                    a.iter()
                        .zip(b)
                        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + y) % d).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn ngens(&self) -> usize {
        self.mats.len()
    }
}

pub fn tau(phi: &EndoF) -> Result<JohnsonValue> {
    if !phi.is_level_ia() {
        return Err(Error::NotIa(phi.d));
    }
    let n = 2 * phi.g;
    let d = phi.d;
    let mats: Vec<Vec<Vec<u64>>> = (0..n)
        .map(|i| {
            let x = FreeWord::gen(i as i32 + 1);
            let w = x.inverse().mul(&phi.images[i]);
            theta2_on_kernel(&w, n, d).expect("IA image lies in the kernel")
        })
        .collect();
    if d % 2 == 1 {
        assert!(mats.iter().all(|m| is_skew(m, d)), "odd-level values are skew");
    }
    Ok(JohnsonValue { d, mats })
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Coordinates of an element of `H (x) Lambda^2 H` as `(c, a<b)` in row-major
/// order; `X_c (x) (X_a ^ X_b)`.
fn h_lambda2_dim(n: usize) -> usize {
    n * binomial(n, 2)
}

fn add_h_wedge(v: &mut [i64], n: usize, c: usize, a: usize, b: usize, k: i64) {
    if a == b {
        return;
    }
    let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
    v[c * binomial(n, 2) + pair_index(n, lo, hi)] += s * k;
}

/// `a ^ b ^ c -> a (x) (b ^ c) + b (x) (c ^ a) + c (x) (a ^ b)` on basis triples.
pub fn lambda3_embedding_rows(g: usize) -> Vec<Vec<i64>> {
    let n = 2 * g;
    let mut rows = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let mut v = vec![0i64; h_lambda2_dim(n)];
                add_h_wedge(&mut v, n, a, b, c, 1);
                add_h_wedge(&mut v, n, b, c, a, 1);
                add_h_wedge(&mut v, n, c, a, b, 1);
                rows.push(v);
            }
        }
    }
    rows
}

/// Image of `e_i^*` under `H^* -> H`, `f -> y` with `f(x) = y . x`:
/// `e_{A_j}^* -> -B_j`, `e_{B_j}^* -> A_j`. Returns `(index, sign)`.
pub fn dual_basis(g: usize, i: usize) -> (usize, i64) {
    if i < g {
        (g + i, -1)
    } else {
        (i - g, 1)
    }
}

/// `sum_i dual(e_i) (x) tau(x_i)` in `H (x) Lambda^2 H`.
pub fn to_h_lambda2(v: &JohnsonValue) -> Vec<i64> {
    let n = v.ngens();
    let g = n / 2;
    let mut out = vec![0i64; h_lambda2_dim(n)];
    for (i, m) in v.mats.iter().enumerate() {
        let (c, s) = dual_basis(g, i);
        for a in 0..n {
            for b in (a + 1)..n {
                add_h_wedge(&mut out, n, c, a, b, s * m[a][b] as i64);
            }
        }
    }
    out
}

/// Whether `v`, read in `H (x) Lambda^2 H (x) Z_d`, lies in the image of `Lambda^3 H`.
pub fn in_lambda3(v: &JohnsonValue) -> Result<bool> {
    if v.d.is_multiple_of(2) {
        return Err(Error::EvenModulus(v.d));
    }
    let g = v.ngens() / 2;
    let rows = lambda3_embedding_rows(g);
    let target = to_h_lambda2(v);
    Ok(in_span_mod(&rows, &target, v.d))
}

/// The Johnson value whose `H (x) Lambda^2 H` image is `a ^ b ^ c`
/// (0-based basis indices), for tests.
pub fn johnson_value_of_trivector(g: usize, d: u64, a: usize, b: usize, c: usize) -> JohnsonValue {
    let n = 2 * g;
    let mut mats = vec![vec![vec![0u64; n]; n]; n];
    // pull X_t back through the duality: X_t = s * dual(e_i)
    let undual = |t: usize| -> (usize, i64) {
        (0..n)
            .map(|i| (i, dual_basis(g, i)))
            .find(|(_, (c, _))| *c == t)
            .map(|(i, (_, s))| (i, s))
            .expect("duality is a bijection")
    };
    let di = d as i64;
    for (head, x, y) in [(a, b, c), (b, c, a), (c, a, b)] {
        let (i, s) = undual(head);
        let k = s.rem_euclid(di) as u64;
        mats[i][x][y] = (mats[i][x][y] + k) % d;
        mats[i][y][x] = (mats[i][y][x] + d - k) % d;
    }
    JohnsonValue { d, mats }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankFormula {
    pub g: usize,
    pub d: u64,
    pub closed: bool,
    pub exponent: usize,
    pub closed_form: usize,
    /// Rank of `H -> Lambda^3 H`, `x -> omega ^ x`, over `Z_d`.
    pub omega_rank: usize,
    pub small_genus: bool,
}

impl RankFormula {
    pub fn matches(&self) -> bool {
        self.exponent == self.closed_form
    }
}

/// Rank of `x -> (sum_i A_i ^ B_i) ^ x` from `H (x) Z_d` into `Lambda^3 H (x) Z_d`.
pub fn omega_wedge_rank(g: usize, d: u64) -> usize {
    let n = 2 * g;
    let ncols = binomial(n, 3);
    if ncols == 0 {
        return 0;
    }
    let triple_index = |t: [usize; 3]| -> usize {
        let mut k = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    if [a, b, c] == t {
                        return k;
                    }
                    k += 1;
                }
            }
        }
        unreachable!()
    };
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|x| {
            let mut v = vec![0i64; ncols];
            for i in 0..g {
                let mut t = [i, g + i, x];
                if t[0] == x || t[1] == x {
                    continue;
                }
                // sort with sign
                let mut sign = 1;
                for p in 0..3 {
                    for q in 0..2 - p {
                        if t[q] > t[q + 1] {
                            t.swap(q, q + 1);
                            sign = -sign;
                        }
                    }
                }
                v[triple_index(t)] += sign;
            }
            v
        })
        .collect();
    let img = ModularSnf::new(&rows, ncols, d).image();
    img.factors_u64().iter().filter(|&&f| f == d).count()
}

/// `C(2g,3) + 2g^2 + g = (4g^3 + 5g)/3` for a bounded surface and
/// `C(2g,3) - 2g + 2g^2 + g = (4g^3 - g)/3` for a closed one.
pub fn odd_level_rank_formula(g: usize, d: u64, closed: bool) -> Result<RankFormula> {
    if d.is_multiple_of(2) {
        return Err(Error::EvenModulus(d));
    }
    let omega_rank = omega_wedge_rank(g, d);
    let lambda3 = binomial(2 * g, 3);
    let sp = 2 * g * g + g;
    let exponent = if closed {
        lambda3 - omega_rank + sp
    } else {
        lambda3 + sp
    };
    let g3 = 4 * g * g * g;
    let closed_form = if closed { (g3 - g) / 3 } else { (g3 + 5 * g) / 3 };
    Ok(RankFormula {
        g,
        d,
        closed,
        exponent,
        closed_form,
        omega_rank,
        small_genus: g < 3,
    })
}

/// Standard automorphisms of `F_{2g}` fixing the boundary word.
pub mod fixtures {
    use super::*;

    fn word(g: usize, s: &str) -> FreeWord {
        FreeWord::parse(s, g).expect("fixture word")
    }

    fn with_images(g: usize, d: u64, changes: &[(usize, FreeWord)]) -> EndoF {
        let mut e = EndoF::identity(g, d);
        for (slot, w) in changes {
            e.images[*slot] = w.clone();
        }
        e
    }

    /// Twist along `a_i`: `b_i -> b_i a_i`; acts on `H` as `T_{A_i}`.
    pub fn twist_a(g: usize, i: usize, d: u64) -> EndoF {
        with_images(g, d, &[(g + i - 1, word(g, &format!("b{i} a{i}")))])
    }

    /// Twist along `b_i`: `a_i -> a_i b_i^{-1}`; acts on `H` as `T_{B_i}`.
    pub fn twist_b(g: usize, i: usize, d: u64) -> EndoF {
        with_images(g, d, &[(i - 1, word(g, &format!("a{i} B{i}")))])
    }

    /// Inverse twist along `a_i`: `b_i -> b_i a_i^{-1}`.
    pub fn twist_a_inv(g: usize, i: usize, d: u64) -> EndoF {
        with_images(g, d, &[(g + i - 1, word(g, &format!("b{i} A{i}")))])
    }

    /// Handle-mixing class: acts on `H` as the inverse transvection along
    /// `A_1 - A_2` (`B_1 -> B_1 - A_1 + A_2`, `B_2 -> B_2 + A_1 - A_2`).
    pub fn mixing(g: usize, d: u64) -> EndoF {
        assert!(g >= 2);
        let k = "b1 A1 B1";
        let kinv = "b1 a1 B1";
        with_images(
            g,
            d,
            &[
                (g, word(g, "b1 A1 B1 a2 b1")),
                (1, word(g, &format!("{k} a2 {kinv}"))),
                (g + 1, word(g, "b2 A2 b1 a1 B1")),
            ],
        )
    }

    /// Inverse of [`mixing`].
    pub fn mixing_inverse(g: usize, d: u64) -> EndoF {
        assert!(g >= 2);
        let kp = word(g, "A2 b1 A1 B1 a2");
        let a2 = kp.inverse().mul(&FreeWord::gen(2)).mul(&kp);
        let b2 = FreeWord::gen(g as i32 + 2).mul(&kp).mul(&a2);
        with_images(
            g,
            d,
            &[(g, word(g, "A2 b1 a1")), (1, a2), (g + 1, b2)],
        )
    }

    /// Inverse twist along `b_i`: `a_i -> a_i b_i`.
    pub fn twist_b_inv(g: usize, i: usize, d: u64) -> EndoF {
        with_images(g, d, &[(i - 1, word(g, &format!("a{i} b{i}")))])
    }

    /// `f = t_{b_2} psi^{-1} t_{b_1} t_{a_1}^2 t_{b_1} psi^{-1} t_{b_2}`; carries
    /// `a_2` to a curve freely homotopic to `([a_1, b_1] a_2)^{-1}`.
    pub fn bounding_pair_carrier(g: usize, d: u64) -> (EndoF, EndoF) {
        let tb2 = twist_b(g, 2, d);
        let tb1 = twist_b(g, 1, d);
        let ta1 = twist_a(g, 1, d);
        let psi_inv = mixing_inverse(g, d);
        let f = [&tb2, &psi_inv, &tb1, &ta1, &ta1, &tb1, &psi_inv, &tb2]
            .into_iter()
            .fold(EndoF::identity(g, d), |acc, h| acc.compose(h));
        let tb2i = twist_b_inv(g, 2, d);
        let tb1i = twist_b_inv(g, 1, d);
        let ta1i = twist_a_inv(g, 1, d);
        let psi = mixing(g, d);
        let f_inv = [&tb2i, &psi, &tb1i, &ta1i, &ta1i, &tb1i, &psi, &tb2i]
            .into_iter()
            .fold(EndoF::identity(g, d), |acc, h| acc.compose(h));
        (f, f_inv)
    }

    /// `t_{f(a_2)} t_{a_2}^{-1}`: opposite twists along `a_2` and a disjoint
    /// homologous curve cobounding the first handle with it.
    pub fn bounding_pair(g: usize, d: u64) -> EndoF {
        let (f, f_inv) = bounding_pair_carrier(g, d);
        f.compose(&twist_a(g, 2, d))
            .compose(&f_inv)
            .compose(&twist_a_inv(g, 2, d))
    }

    /// The level-`d` fixtures: `t_{a_1}^d`, `t_{b_1}^d` and `psi^d`.
    pub fn level_d(g: usize, d: u64) -> Vec<(&'static str, EndoF)> {
        let mut out = vec![
            ("twist_a1_pow", twist_a(g, 1, d).pow(d as usize)),
            ("twist_b1_pow", twist_b(g, 1, d).pow(d as usize)),
        ];
        if g >= 2 {
            out.push(("mixing_pow", mixing(g, d).pow(d as usize)));
        }
        out
    }
}

impl fmt::Display for JohnsonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.mats.iter().enumerate() {
            writeln!(f, "x{}:", i + 1)?;
            for r in m {
                writeln!(f, "  {:?}", r)?;
            }
        }
        Ok(())
    }
}
