//! `H_1(Sigma_g; Z_2)` with its intersection form, spin structures as
//! quadratic refinements, the Arf invariant and the indicator functions
//! `i_x(y) = x . y`.
//!
//! A class is a bitmask: bit `i` is `A_{i+1}`, bit `g + i` is `B_{i+1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_GENUS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2Class {
    g: usize,
    bits: u32,
}

impl Z2Class {
    pub fn new(g: usize, bits: u32) -> Self {
        assert!(g <= MAX_GENUS, "genus too large");
        let mask = if g == 16 { u32::MAX } else { (1u32 << (2 * g)) - 1 };
        Z2Class {
            g,
            bits: bits & mask,
        }
    }

    pub fn zero(g: usize) -> Self {
        Self::new(g, 0)
    }

    /// `A_i`, 1-based.
    pub fn a(g: usize, i: usize) -> Self {
        Self::new(g, 1 << (i - 1))
    }

    /// `B_i`, 1-based.
    pub fn b(g: usize, i: usize) -> Self {
        Self::new(g, 1 << (g + i - 1))
    }

    /// `X_k` in block convention: `X_k = A_k`, `X_{g+k} = B_k`, 0-based `k`.
    pub fn basis(g: usize, k: usize) -> Self {
        Self::new(g, 1 << k)
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Every class of genus `g`, in bitmask order.
    pub fn all(g: usize) -> impl Iterator<Item = Z2Class> {
        (0..(1u32 << (2 * g))).map(move |b| Z2Class::new(g, b))
    }

    pub fn pairing(&self, other: &Z2Class) -> Result<u8> {
        if self.g != other.g {
            return Err(Error::GenusMismatch(self.g, other.g));
        }
        Ok(pair_bits(self.g, self.bits, other.bits))
    }

    /// The partner `X_{k+g}` of a basis class, wrapping past `2g`.
    pub fn partner(&self) -> Z2Class {
        let g = self.g;
        let lo = self.bits & ((1 << g) - 1);
        let hi = self.bits >> g;
        Z2Class::new(g, (lo << g) | hi)
    }
}

impl std::ops::Add for Z2Class {
    type Output = Z2Class;
    fn add(self, rhs: Z2Class) -> Z2Class {
        debug_assert_eq!(self.g, rhs.g);
        Z2Class::new(self.g, self.bits ^ rhs.bits)
    }
}

/// Intersection number mod 2 of two bitmasks.
pub fn pair_bits(g: usize, x: u32, y: u32) -> u8 {
    let mask = (1u32 << g) - 1;
    let t = ((x & mask) & (y >> g)) ^ ((x >> g) & (y & mask));
    (t.count_ones() & 1) as u8
}

impl fmt::Display for Z2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: String = (0..self.g)
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect();
        let b: String = (0..self.g)
            .map(|i| if self.bits >> (self.g + i) & 1 == 1 { '1' } else { '0' })
            .collect();
        write!(f, "{a}|{b}")
    }
}

impl FromStr for Z2Class {
    type Err = Error;

    /// `"a1..ag|b1..bg"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected a|b bit string, got {s:?}")))?;
        if a.len() != b.len() || a.len() > MAX_GENUS {
            return Err(Error::Parse(format!("bad class {s:?}")));
        }
        let g = a.len();
        let mut bits = 0u32;
        for (i, c) in a.chars().chain(b.chars()).enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("bad bit {c:?} in {s:?}"))),
            }
        }
        Ok(Z2Class::new(g, bits))
    }
}

/// A spin structure, stored as the values of `q` on `A_1..A_g, B_1..B_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinForm {
    g: usize,
    values: u32,
}

impl SpinForm {
    pub fn new(g: usize, basis_values: u32) -> Self {
        let c = Z2Class::new(g, basis_values);
        SpinForm {
            g,
            values: c.bits,
        }
    }

    /// All basis values 0.
    pub fn sigma0(g: usize) -> Self {
        Self::new(g, 0)
    }

    pub fn from_values(values: &[u8]) -> Result<Self> {
        if values.len() % 2 == 1 {
            return Err(Error::Parse("spin form needs 2g values".into()));
        }
        let g = values.len() / 2;
        let mut bits = 0;
        for (i, &v) in values.iter().enumerate() {
            if v > 1 {
                return Err(Error::Parse(format!("spin value {v} is not a bit")));
            }
            bits |= (v as u32) << i;
        }
        Ok(Self::new(g, bits))
    }

    pub fn all(g: usize) -> impl Iterator<Item = SpinForm> {
        (0..(1u32 << (2 * g))).map(move |b| SpinForm::new(g, b))
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn basis_values(&self) -> u32 {
        self.values
    }

    /// `q(x)` for a raw bitmask.
    pub fn q_bits(&self, x: u32) -> u8 {
        let g = self.g;
        let lin = (x & self.values).count_ones();
        let cross = ((x & ((1 << g) - 1)) & (x >> g)).count_ones();
        ((lin + cross) & 1) as u8
    }

    pub fn q(&self, x: &Z2Class) -> u8 {
        debug_assert_eq!(x.g, self.g);
        self.q_bits(x.bits)
    }

    /// `sum_i q(A_i) q(B_i)`.
    pub fn arf(&self) -> u8 {
        let g = self.g;
        let t = (self.values & ((1 << g) - 1)) & (self.values >> g);
        (t.count_ones() & 1) as u8
    }

    /// `sigma + x`, with `q_{sigma+x}(y) = q_sigma(y) + x . y`.
    pub fn act(&self, x: &Z2Class) -> SpinForm {
        debug_assert_eq!(x.g, self.g);
        // x . A_i = x_{B_i}, x . B_i = x_{A_i}
        SpinForm::new(self.g, self.values ^ x.partner().bits)
    }
}

impl fmt::Display for SpinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Z2Class::new(self.g, self.values).fmt(f)
    }
}

impl FromStr for SpinForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let c: Z2Class = s.parse()?;
        Ok(SpinForm::new(c.g, c.bits))
    }
}

/// Arf invariant by majority: the value `q` takes on more than half of all classes.
pub fn arf_by_majority(sigma: &SpinForm) -> u8 {
    let g = sigma.g;
    let ones = (0..(1u32 << (2 * g))).filter(|&x| sigma.q_bits(x) == 1).count();
    u8::from(2 * ones > (1usize << (2 * g)))
}

/// `I(x_1, ..., x_n) = sum_{i<j} x_i . x_j mod 2`.
pub fn sign_i(xs: &[Z2Class]) -> u8 {
    let mut s = 0;
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i + 1..] {
            s ^= pair_bits(x.g, x.bits, y.bits);
        }
    }
    s
}

/// The 0/1 table of `i_x` over all classes, in bitmask order.
pub fn indicator(x: &Z2Class) -> Vec<u8> {
    let g = x.g;
    (0..(1u32 << (2 * g)))
        .map(|y| pair_bits(g, x.bits, y))
        .collect()
}

/// Some coordinate of `x` is a unit mod `d`.
pub fn primitive_mod_d(x: &[u64], d: u64) -> bool {
    assert!(d >= 2, "level must be at least 2");
    x.iter().any(|&v| num_integer::gcd(v % d, d) == 1)
}

/// Canonical representative of `{x, -x}` mod `d`: the lexicographically
/// smaller of the two reduced vectors.
pub fn sd_representative(x: &[u64], d: u64) -> Vec<u64> {
    let a: Vec<u64> = x.iter().map(|v| v % d).collect();
    let b: Vec<u64> = a.iter().map(|v| (d - v) % d).collect();
    a.min(b)
}

/// Number of `S_d` classes in `Z_d^n` (primitive vectors up to sign), by enumeration.
pub fn count_sd_classes(n: usize, d: u64) -> usize {
    let total = (d as usize).pow(n as u32);
    let mut reps = std::collections::BTreeSet::new();
    let mut v = vec![0u64; n];
    for mut k in 0..total {
        for slot in v.iter_mut() {
            *slot = k as u64 % d;
            k /= d as usize;
        }
        if primitive_mod_d(&v, d) {
            reps.insert(sd_representative(&v, d));
        }
    }
    reps.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_basics() {
        let g = 2;
        let a1 = Z2Class::a(g, 1);
        let b1 = Z2Class::b(g, 1);
        let a2 = Z2Class::a(g, 2);
        let b2 = Z2Class::b(g, 2);
        assert_eq!(a1.pairing(&b1).unwrap(), 1);
        for x in Z2Class::all(g) {
            assert_eq!(x.pairing(&x).unwrap(), 0);
        }
        assert_eq!((a1 + b2).pairing(&(b1 + a2)).unwrap(), 0);
        assert!(a1.pairing(&Z2Class::a(3, 1)).is_err());
    }

    #[test]
    fn bit_string_roundtrip() {
        let x: Z2Class = "10|01".parse().unwrap();
        assert_eq!(x, Z2Class::a(2, 1) + Z2Class::b(2, 2));
        assert_eq!(x.to_string(), "10|01");
        assert!("1|01".parse::<Z2Class>().is_err());
    }

    #[test]
    fn q_examples() {
        let s = SpinForm::sigma0(2);
        assert_eq!(s.q(&(Z2Class::a(2, 1) + Z2Class::b(2, 1))), 1);
        assert_eq!(s.q(&Z2Class::zero(2)), 0);
    }

    #[test]
    fn arf_examples() {
        assert_eq!(SpinForm::sigma0(3).arf(), 0);
        let s = SpinForm::new(3, 0b001_001);
        assert_eq!(s.arf(), 1);
    }

    #[test]
    fn act_involution() {
        let g = 2;
        for s in SpinForm::all(g) {
            assert_eq!(s.act(&Z2Class::zero(g)), s);
            for x in Z2Class::all(g) {
                assert_eq!(s.act(&x).act(&x), s);
                for y in Z2Class::all(g) {
                    assert_eq!(s.act(&x).q(&y), s.q(&y) ^ x.pairing(&y).unwrap());
                }
            }
        }
    }

    #[test]
    fn indicator_examples() {
        let g = 2;
        let i = indicator(&Z2Class::a(g, 1));
        assert_eq!(i[Z2Class::b(g, 1).index()], 1);
        assert_eq!(i[Z2Class::a(g, 2).index()], 0);
        let b1 = Z2Class::b(g, 1);
        assert_eq!(i[(b1 + b1).index()], 0);
        assert_ne!(i[(b1 + b1).index()], i[b1.index()] + i[b1.index()]);
    }

    #[test]
    fn primitivity() {
        assert!(!primitive_mod_d(&[2, 0], 4));
        assert!(primitive_mod_d(&[2, 3], 4));
        assert_eq!(sd_representative(&[1, 2], 5), vec![1, 2]);
        assert_eq!(sd_representative(&[4, 3], 5), vec![1, 2]);
    }

    #[test]
    fn partner_wraps() {
        let g = 3;
        assert_eq!(Z2Class::a(g, 2).partner(), Z2Class::b(g, 2));
        assert_eq!(Z2Class::b(g, 3).partner(), Z2Class::a(g, 3));
    }
}
