//! The group ring `Z_8[H]`, `H = H_1(Sigma_g; Z_2)`, the Delta generators
//! and the relation submodules `L_{g,1}` (bounded surface) and `L_g`
//! (closed surface), with the invariant factors of the quotients.

use rand::Rng;

use crate::binomial;
use crate::error::{Error, Result};
use crate::homology::{pair_bits, sign_i, SpinForm, Z2Class};
use crate::smith::{InvariantFactors, ModularSnf, PresentationMatrix};

pub const MAX_QUOTIENT_GENUS: usize = 4;

/// Dense `Z_8`-valued coefficient vector indexed by class bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElt {
    g: usize,
    coeffs: Vec<u8>,
}

impl GroupRingElt {
    pub fn zero(g: usize) -> Self {
        GroupRingElt {
            g,
            coeffs: vec![0; 1 << (2 * g)],
        }
    }

    /// The basis element `[x]`.
    pub fn basis(x: &Z2Class) -> Self {
        let mut e = Self::zero(x.genus());
        e.coeffs[x.index()] = 1;
        e
    }

    pub fn from_coeffs(g: usize, coeffs: Vec<u8>) -> Result<Self> {
        if coeffs.len() != 1 << (2 * g) {
            return Err(Error::DimensionMismatch {
                expected: 1 << (2 * g),
                got: coeffs.len(),
            });
        }
        Ok(GroupRingElt {
            g,
            coeffs: coeffs.into_iter().map(|c| c % 8).collect(),
        })
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, x: &Z2Class) -> u8 {
        self.coeffs[x.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &GroupRingElt) -> GroupRingElt {
        debug_assert_eq!(self.g, o.g);
        GroupRingElt {
            g: self.g,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| (a + b) % 8)
                .collect(),
        }
    }

    pub fn sub(&self, o: &GroupRingElt) -> GroupRingElt {
        self.add(&o.scale(7))
    }

    pub fn scale(&self, k: i64) -> GroupRingElt {
        let k = k.rem_euclid(8) as u16;
        GroupRingElt {
            g: self.g,
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| ((c as u16 * k) % 8) as u8)
                .collect(),
        }
    }

    fn add_term(&mut self, x: u32, c: i64) {
        let slot = &mut self.coeffs[x as usize];
        *slot = ((*slot as i64 + c).rem_euclid(8)) as u8;
    }

    /// Support as `(class, coefficient)` pairs.
    pub fn terms(&self) -> Vec<(Z2Class, u8)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(x, &c)| (Z2Class::new(self.g, x as u32), c))
            .collect()
    }

    pub fn lifted(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| c as i64).collect()
    }
}

fn subset_sum(xs: &[Z2Class], s: usize) -> (u32, Vec<Z2Class>) {
    let mut sum = 0u32;
    let mut chosen = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        if s >> i & 1 == 1 {
            sum ^= x.bits();
            chosen.push(*x);
        }
    }
    (sum, chosen)
}

/// `sum_{S nonempty} (-1)^{I(x_S)} [sum_{i in S} x_i]`.
pub fn delta0(xs: &[Z2Class]) -> GroupRingElt {
    assert!(!xs.is_empty(), "delta needs at least one class");
    let g = xs[0].genus();
    let mut e = GroupRingElt::zero(g);
    for s in 1..(1usize << xs.len()) {
        let (sum, chosen) = subset_sum(xs, s);
        let sign = if sign_i(&chosen) == 1 { -1 } else { 1 };
        e.add_term(sum, sign);
    }
    e
}

/// `sum_{S nonempty} (-1)^{q_sigma(x_S)} [x_S]`.
pub fn delta_sigma(sigma: &SpinForm, xs: &[Z2Class]) -> GroupRingElt {
    assert!(!xs.is_empty(), "delta needs at least one class");
    let g = xs[0].genus();
    let mut e = GroupRingElt::zero(g);
    for s in 1..(1usize << xs.len()) {
        let (sum, _) = subset_sum(xs, s);
        let sign = if sigma.q_bits(sum) == 1 { -1 } else { 1 };
        e.add_term(sum, sign);
    }
    e
}

fn basis_classes(g: usize) -> Vec<Z2Class> {
    (0..2 * g).map(|k| Z2Class::basis(g, k)).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Smallest tuple size taken from the full Delta family.
pub const DELTA_FULL_FROM: usize = 4;

/// Generators of `L_{g,1}` over the symplectic basis: `[0]`,
/// `4 Delta_0(X_i, X_j)`, `2 Delta_0(X_i, X_j, X_k)` and
/// `Delta_0(X_{i_1}, ..., X_{i_n})` for `4 <= n <= 2g`.
pub fn build_l_open(g: usize) -> Vec<GroupRingElt> {
    let basis = basis_classes(g);
    let mut out = vec![GroupRingElt::basis(&Z2Class::zero(g))];
    let pick = |idx: &[usize]| idx.iter().map(|&i| basis[i]).collect::<Vec<_>>();
    for c in combinations(2 * g, 2) {
        out.push(delta0(&pick(&c)).scale(4));
    }
    for c in combinations(2 * g, 3) {
        out.push(delta0(&pick(&c)).scale(2));
    }
    for n in DELTA_FULL_FROM..=2 * g {
        for c in combinations(2 * g, n) {
            out.push(delta0(&pick(&c)));
        }
    }
    out
}

/// `sum_i {2 Delta_0(A_i, B_i) + 4[A_i] + 4[B_i]}`.
pub fn closed_handle_relation(g: usize) -> GroupRingElt {
    let mut e = GroupRingElt::zero(g);
    for i in 1..=g {
        let (a, b) = (Z2Class::a(g, i), Z2Class::b(g, i));
        e = e
            .add(&delta0(&[a, b]).scale(2))
            .add(&GroupRingElt::basis(&a).scale(4))
            .add(&GroupRingElt::basis(&b).scale(4));
    }
    e
}

/// `sum_i {Delta_0(A_i, B_i, X) + 2 Delta_0(A_i, X) + 2 Delta_0(B_i, X) + 4[X]}`.
pub fn closed_class_relation(x: &Z2Class) -> GroupRingElt {
    let g = x.genus();
    let mut e = GroupRingElt::zero(g);
    for i in 1..=g {
        let (a, b) = (Z2Class::a(g, i), Z2Class::b(g, i));
        e = e
            .add(&delta0(&[a, b, *x]))
            .add(&delta0(&[a, *x]).scale(2))
            .add(&delta0(&[b, *x]).scale(2))
            .add(&GroupRingElt::basis(x).scale(4));
    }
    e
}

/// `L_g`: `L_{g,1}` plus the handle relation and one class relation per basis class.
pub fn build_l_closed(g: usize) -> Vec<GroupRingElt> {
    let mut out = build_l_open(g);
    out.push(closed_handle_relation(g));
    for x in basis_classes(g) {
        out.push(closed_class_relation(&x));
    }
    out
}

/// Generator labels `[X]` with `X` printed as a bit string.
pub fn generator_labels(g: usize) -> Vec<String> {
    Z2Class::all(g).map(|x| format!("[{x}]")).collect()
}

/// Presentation of `Z_8[H] / L`: one generator per class, relations `8 e_X`
/// and the lifted generators of `L`.
pub fn presentation(g: usize, relations: &[GroupRingElt]) -> PresentationMatrix {
    let mut m = PresentationMatrix::new(generator_labels(g));
    m.push_torsion(8);
    for r in relations {
        m.push(r.lifted());
    }
    m
}

fn check_size(g: usize) -> Result<()> {
    if g > MAX_QUOTIENT_GENUS {
        return Err(Error::SizeLimit(format!(
            "genus {g} > {MAX_QUOTIENT_GENUS}: {} generators",
            1usize << (2 * g)
        )));
    }
    Ok(())
}

pub fn quotient_presentation(g: usize, closed: bool) -> Result<PresentationMatrix> {
    check_size(g)?;
    let rel = if closed { build_l_closed(g) } else { build_l_open(g) };
    Ok(presentation(g, &rel))
}

/// Invariant factors of `Z_8[H] / L_{g,1}` (or `/ L_g` when `closed`).
pub fn quotient_structure(g: usize, closed: bool) -> Result<InvariantFactors> {
    let rel = {
        check_size(g)?;
        if closed {
            build_l_closed(g)
        } else {
            build_l_open(g)
        }
    };
    Ok(cokernel_mod8(g, &rel))
}

/// Invariant factors of `Z_8[H] / span(rel)`.
pub fn cokernel_mod8(g: usize, rel: &[GroupRingElt]) -> InvariantFactors {
    let rows: Vec<Vec<i64>> = rel.iter().map(|r| r.lifted()).collect();
    ModularSnf::new(&rows, 1 << (2 * g), 8).cokernel()
}

/// Whether `v` lies in the `Z_8`-span of `rel`.
pub fn in_span(rel: &[GroupRingElt], v: &GroupRingElt) -> bool {
    let rows: Vec<Vec<i64>> = rel.iter().map(|r| r.lifted()).collect();
    crate::smith::in_span_mod(&rows, &v.lifted(), 8)
}

/// `Z_8^{2g} + Z_4^{C(2g,2)} + Z_2^{C(2g,3)}`.
pub fn expected_open_structure(g: usize) -> InvariantFactors {
    let n = 2 * g;
    InvariantFactors::from_counts(&[
        (2, binomial(n, 3)),
        (4, binomial(n, 2)),
        (8, n),
    ])
}

/// `|B^3_{g,1} / <1>| * |H_1(Gamma_g[2])| = 2^{6g + 2 C(2g,2) + C(2g,3)}`, as
/// an identity of exponents.
pub fn counting_identity(g: usize) -> bool {
    let (_, b3_mod_one) = crate::b3::b3_log_orders(g);
    let gamma = crate::symplectic::abelianization_formula(g, 2);
    let gamma_log = gamma
        .factors()
        .iter()
        .map(|f| f.bits() as usize - 1)
        .sum::<usize>();
    let n = 2 * g;
    b3_mod_one + gamma_log == 6 * g + 2 * binomial(n, 2) + binomial(n, 3)
}

/// A random generator of `L_{g,1}` on arbitrary (non-basis) classes:
/// `4 Delta_0^2`, `2 Delta_0^3` or `Delta_0^n` with `4 <= n <= max_n`.
pub fn random_l_generator<R: Rng>(g: usize, rng: &mut R, max_n: usize) -> GroupRingElt {
    let kind = rng.gen_range(0..3);
    let n = match kind {
        0 => 2,
        1 => 3,
        _ => rng.gen_range(DELTA_FULL_FROM..=max_n.max(DELTA_FULL_FROM)),
    };
    let xs: Vec<Z2Class> = (0..n)
        .map(|_| Z2Class::new(g, rng.gen_range(0..(1u32 << (2 * g)))))
        .collect();
    let d = delta0(&xs);
    match kind {
        0 => d.scale(4),
        1 => d.scale(2),
        _ => d,
    }
}

/// Coefficient of `y` in `Delta_0(xs)` by direct subset enumeration.
pub fn delta0_coefficient_bruteforce(xs: &[Z2Class], y: &Z2Class) -> u8 {
    let g = y.genus();
    let mut c: i64 = 0;
    for s in 1..(1usize << xs.len()) {
        let chosen: Vec<Z2Class> = (0..xs.len())
            .filter(|i| s >> i & 1 == 1)
            .map(|i| xs[i])
            .collect();
        let sum = chosen.iter().fold(0u32, |a, x| a ^ x.bits());
        if sum != y.bits() {
            continue;
        }
        let mut sign = 0u8;
        for i in 0..chosen.len() {
            for j in (i + 1)..chosen.len() {
                sign ^= pair_bits(g, chosen[i].bits(), chosen[j].bits());
            }
        }
        c += if sign == 1 { -1 } else { 1 };
    }
    c.rem_euclid(8) as u8
}

/// Checks the Delta recurrence
///
/// ```text
/// D(x_1..x_{n+1}) = D(x_1..x_{n-1}, x_n + x_{n+1}) + D(x_1..x_n)
///                 + D(x_1..x_{n-1}, x_{n+1}) - 2 D(x_1..x_{n-1})
/// ```
///
/// Needs at least two classes; an empty prefix contributes 0.
pub fn delta_recurrence_holds(sigma: &SpinForm, xs: &[Z2Class]) -> bool {
    let m = xs.len();
    assert!(m >= 2);
    let g = xs[0].genus();
    let d = |v: &[Z2Class]| {
        if v.is_empty() {
            GroupRingElt::zero(g)
        } else {
            delta_sigma(sigma, v)
        }
    };
    let prefix = &xs[..m - 2];
    let (xn, xn1) = (xs[m - 2], xs[m - 1]);
    let mut a = prefix.to_vec();
    a.push(xn + xn1);
    let mut c = prefix.to_vec();
    c.push(xn1);
    let rhs = d(&a)
        .add(&d(&xs[..m - 1]))
        .add(&d(&c))
        .sub(&d(prefix).scale(2));
    rhs == d(xs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_examples() {
        let g = 2;
        let (a1, b1, a2) = (Z2Class::a(g, 1), Z2Class::b(g, 1), Z2Class::a(g, 2));
        assert_eq!(sign_i(&[a1, b1]), 1);
        assert_eq!(sign_i(&[a1, a2]), 0);
        assert_eq!(sign_i(&[a1, b1, a1 + b1]), 1);
    }

    #[test]
    fn delta_examples() {
        let g = 2;
        let (a1, b1, a2) = (Z2Class::a(g, 1), Z2Class::b(g, 1), Z2Class::a(g, 2));
        assert_eq!(delta0(&[a1]), GroupRingElt::basis(&a1));
        let d = delta0(&[a1, b1]);
        assert_eq!(d.coeff(&a1), 1);
        assert_eq!(d.coeff(&b1), 1);
        assert_eq!(d.coeff(&(a1 + b1)), 7);
        assert_eq!(d.terms().len(), 3);
        let d = delta0(&[a1, a2]);
        assert_eq!(d.coeff(&(a1 + a2)), 1);
    }

    #[test]
    fn sigma0_matches_delta0() {
        let g = 3;
        let s = SpinForm::sigma0(g);
        let b: Vec<Z2Class> = (0..6).map(|k| Z2Class::basis(g, k)).collect();
        for c in combinations(6, 3) {
            let xs: Vec<Z2Class> = c.iter().map(|&i| b[i]).collect();
            assert_eq!(delta_sigma(&s, &xs), delta0(&xs));
        }
    }

    #[test]
    fn l_counts() {
        assert_eq!(build_l_open(3).len(), 1 + 15 + 20 + 15 + 6 + 1);
        assert_eq!(build_l_closed(3).len(), 58 + 1 + 6);
        assert_eq!(build_l_open(1).len(), 2);
        assert!(build_l_open(3)[0] == GroupRingElt::basis(&Z2Class::zero(3)));
    }

    #[test]
    fn g2_open_structure() {
        let f = quotient_structure(2, false).unwrap();
        assert_eq!(f, expected_open_structure(2));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(quotient_structure(5, false), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn counting_identity_small() {
        for g in 2..=6 {
            assert!(counting_identity(g));
        }
    }
}
