//! Smith normal form over the integers, and the structure of finitely
//! generated abelian groups given by generators and relations.
//!
//! Two elimination routes share one contract. The general route works on
//! arbitrary-precision integers with the smallest nonzero |entry| as pivot
//! (row index, then column index, breaks ties). When every generator `e_j`
//! has an explicit relation `m * e_j` with a common `m`, the relation lattice
//! contains `m Z^n` and the elimination runs with entries reduced mod each
//! prime power of `m`; the result is the same group.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// A presentation of an abelian group: one column per generator, one row per
/// relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationMatrix {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<i64>>,
}

impl PresentationMatrix {
    pub fn new(generators: Vec<String>) -> Self {
        PresentationMatrix {
            generators,
            relations: Vec::new(),
        }
    }

    pub fn with_unlabelled(ngens: usize, relations: Vec<Vec<i64>>) -> Self {
        let generators = (0..ngens).map(|j| format!("e{j}")).collect();
        PresentationMatrix {
            generators,
            relations,
        }
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn push(&mut self, row: Vec<i64>) {
        assert_eq!(row.len(), self.ngens(), "relation length");
        self.relations.push(row);
    }

    /// Adds `modulus * e_j` for every generator.
    pub fn push_torsion(&mut self, modulus: i64) {
        for j in 0..self.ngens() {
            let mut row = vec![0; self.ngens()];
            row[j] = modulus;
            self.relations.push(row);
        }
    }

    /// The common `m` such that `m * e_j` is a relation for every `j`, if any.
    pub fn uniform_torsion(&self) -> Option<u64> {
        let n = self.ngens();
        if n == 0 {
            return None;
        }
        let mut per_col: Vec<Option<u64>> = vec![None; n];
        for row in &self.relations {
            let mut nz = row.iter().enumerate().filter(|(_, v)| **v != 0);
            if let (Some((j, v)), None) = (nz.next(), nz.next()) {
                let v = v.unsigned_abs();
                per_col[j] = Some(match per_col[j] {
                    Some(old) => old.gcd(&v),
                    None => v,
                });
            }
        }
        let mut common: Option<u64> = None;
        for c in per_col {
            let c = c?;
            common = Some(match common {
                Some(x) => x.lcm(&c),
                None => c,
            });
        }
        common.filter(|m| *m >= 1)
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_k` (all at least 2) plus free rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    factors: Vec<BigUint>,
    free_rank: usize,
}

impl InvariantFactors {
    pub fn trivial() -> Self {
        InvariantFactors {
            factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// Builds the canonical form of `Z^free_rank + sum Z_{c}` for any multiset
    /// of cyclic orders. Orders 0 count as free summands, orders 1 vanish.
    pub fn from_cyclic<I, T>(orders: I, free_rank: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let mut free_rank = free_rank;
        let mut xs: Vec<BigUint> = Vec::new();
        for o in orders {
            let o: BigUint = o.into();
            if o.is_zero() {
                free_rank += 1;
            } else if !o.is_one() {
                xs.push(o);
            }
        }
        // gcd/lcm exchange until the sequence is a divisibility chain
        let k = xs.len();
        for i in 0..k {
            for j in (i + 1)..k {
                let g = xs[i].gcd(&xs[j]);
                let l = xs[i].lcm(&xs[j]);
                xs[i] = g;
                xs[j] = l;
            }
        }
        xs.retain(|x| !x.is_one());
        xs.sort();
        InvariantFactors {
            factors: xs,
            free_rank,
        }
    }

    /// `Z_{o_1}^{n_1} + Z_{o_2}^{n_2} + ...`
    pub fn from_counts(counts: &[(u64, usize)]) -> Self {
        Self::from_cyclic(
            counts
                .iter()
                .flat_map(|&(o, n)| std::iter::repeat_n(BigUint::from(o), n)),
            0,
        )
    }

    pub fn factors(&self) -> &[BigUint] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when there is a free part.
    pub fn order(&self) -> Option<BigUint> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.factors.iter().fold(BigUint::one(), |acc, f| acc * f))
    }

    /// Factor -> multiplicity, for factors that fit in a u64.
    pub fn counts(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            *out.entry(f.to_u64().unwrap_or(u64::MAX)).or_insert(0) += 1;
        }
        out
    }

    pub fn factors_u64(&self) -> Vec<u64> {
        self.factors
            .iter()
            .map(|f| f.to_u64().unwrap_or(u64::MAX))
            .collect()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        let mut runs: Vec<(BigUint, usize)> = Vec::new();
        for x in &self.factors {
            match runs.last_mut() {
                Some((y, n)) if y == x => *n += 1,
                _ => runs.push((x.clone(), 1)),
            }
        }
        for (x, n) in runs {
            parts.push(if n == 1 {
                format!("Z_{x}")
            } else {
                format!("Z_{x}^{n}")
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariant factors of the cokernel `Z^n / rowspace`.
pub fn smith_normal_form(m: &PresentationMatrix) -> InvariantFactors {
    match m.uniform_torsion() {
        Some(modulus) if modulus > 1 => ModularSnf::new(&m.relations, m.ngens(), modulus).cokernel(),
        _ => integer_cokernel(&m.relations, m.ngens()),
    }
}

/// Cokernel through exact integer elimination, whatever the matrix.
pub fn integer_cokernel(rows: &[Vec<i64>], ncols: usize) -> InvariantFactors {
    let a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    cokernel_of_big(a, ncols)
}

pub fn cokernel_of_big(a: Vec<Vec<BigInt>>, ncols: usize) -> InvariantFactors {
    let diag = smith_diagonal(a, ncols);
    let rank = diag.len();
    InvariantFactors::from_cyclic(
        diag.into_iter().map(|d| d.magnitude().clone()),
        ncols - rank,
    )
}

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<BigInt> {
    a.retain(|r| r.iter().any(|v| !v.is_zero()));
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pi, pj)) = min_pivot(&a, t, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut dirty = false;
            // column t
            for i in (t + 1)..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(i);
                    let pivot_row = &head[t];
                    for (x, p) in tail[0][t..].iter_mut().zip(&pivot_row[t..]) {
                        *x -= &q * p;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            // row t
            for j in (t + 1)..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a[t..].iter_mut() {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_pivot_cross(&a, t);
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            // pivot must divide the rest
            let p = a[t][t].clone();
            let bad = ((t + 1)..nrows)
                .find(|&i| ((t + 1)..ncols).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

fn min_pivot(a: &[Vec<BigInt>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, v) in row.iter().enumerate().skip(c0) {
            if v.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => v.magnitude() < a[bi][bj].magnitude(),
            };
            if better {
                best = Some((i, j));
                if v.magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

// smallest nonzero entry in row t or column t (t, t) included
fn min_pivot_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mag = |i: usize, j: usize| a[i][j].magnitude().clone();
    let mut bm = mag(t, t);
    for i in t..a.len() {
        if !a[i][t].is_zero() && (bm.is_zero() || mag(i, t) < bm) {
            best = (i, t);
            bm = mag(i, t);
        }
    }
    for j in t..a[t].len() {
        if !a[t][j].is_zero() && (bm.is_zero() || mag(t, j) < bm) {
            best = (t, j);
            bm = mag(t, j);
        }
    }
    best
}

/// Elimination over `Z / p^k` for each prime power `p^k` dividing the modulus.
/// Describes both the cokernel `Z_m^n / S` and the row span `S` itself.
#[derive(Debug, Clone)]
pub struct ModularSnf {
    modulus: u64,
    ncols: usize,
    // (p, k, valuation of each diagonal entry; k means zero)
    local: Vec<(u64, u32, Vec<u32>)>,
}

impl ModularSnf {
    pub fn new(rows: &[Vec<i64>], ncols: usize, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let local = factor(modulus)
            .into_iter()
            .map(|(p, k)| {
                let q = p.pow(k);
                let vals = local_valuations(rows, ncols, p, k, q);
                (p, k, vals)
            })
            .collect();
        ModularSnf {
            modulus,
            ncols,
            local,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn cokernel(&self) -> InvariantFactors {
        InvariantFactors::from_cyclic(
            self.local
                .iter()
                .flat_map(|(p, _, vals)| vals.iter().map(move |&v| BigUint::from(p.pow(v)))),
            0,
        )
    }

    /// Structure of the span of the rows inside `Z_m^n`.
    pub fn image(&self) -> InvariantFactors {
        InvariantFactors::from_cyclic(
            self.local.iter().flat_map(|(p, k, vals)| {
                vals.iter().map(move |&v| BigUint::from(p.pow(k - v)))
            }),
            0,
        )
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
}

fn local_valuations(rows: &[Vec<i64>], ncols: usize, p: u64, k: u32, q: u64) -> Vec<u32> {
    let qi = q as i128;
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            r.iter()
                .map(|&v| (v as i128).rem_euclid(qi) as u64)
                .collect()
        })
        .filter(|r: &Vec<u64>| r.iter().any(|&v| v != 0))
        .collect();
    let val = |x: u64| -> u32 {
        if x == 0 {
            return k;
        }
        let mut x = x;
        let mut v = 0;
        while x.is_multiple_of(p) {
            x /= p;
            v += 1;
        }
        v
    };
    let mut vals = Vec::with_capacity(ncols);
    let mut live_cols: Vec<usize> = (0..ncols).collect();
    while !a.is_empty() && !live_cols.is_empty() {
        // minimal valuation pivot, first in row-major order
        let mut best: Option<(u32, usize, usize)> = None;
        'scan: for (i, row) in a.iter().enumerate() {
            for (ci, &j) in live_cols.iter().enumerate() {
                let v = val(row[j]);
                if v < k && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, ci));
                    if v == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((v, pi, pci)) = best else {
            break;
        };
        let pj = live_cols[pci];
        let pv = p.pow(v);
        let mut prow = a.swap_remove(pi);
        let unit = prow[pj] / pv;
        let inv = mod_inverse(unit % q, q);
        for x in prow.iter_mut() {
            *x = mul_mod(*x, inv, q);
        }
        debug_assert_eq!(prow[pj], pv);
        for row in a.iter_mut() {
            let c = row[pj];
            if c == 0 {
                continue;
            }
            let f = c / pv;
            for &j in &live_cols {
                let s = mul_mod(f, prow[j], q);
                row[j] = (row[j] + q - s) % q;
            }
        }
        a.retain(|r| live_cols.iter().any(|&j| r[j] != 0));
        live_cols.swap_remove(pci);
        vals.push(v);
    }
    vals.extend(std::iter::repeat_n(k, live_cols.len()));
    vals
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    assert_eq!(g, 1, "not a unit");
    x.rem_euclid(m as i128) as u64
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Prime factorisation by trial division.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Whether `v` lies in the span of `rows` inside `Z_m^n`: adjoining it must
/// not shrink the cokernel.
pub fn in_span_mod(rows: &[Vec<i64>], v: &[i64], modulus: u64) -> bool {
    let n = v.len();
    let before = ModularSnf::new(rows, n, modulus).cokernel().order();
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    let after = ModularSnf::new(&ext, n, modulus).cokernel().order();
    before == after
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_and_four() {
        let m = PresentationMatrix::with_unlabelled(2, vec![vec![2, 0], vec![0, 4]]);
        let f = smith_normal_form(&m);
        assert_eq!(f, InvariantFactors::from_counts(&[(2, 1), (4, 1)]));
        assert_eq!(f.to_string(), "Z_2 + Z_4");
    }

    #[test]
    fn no_relations_is_free() {
        let m = PresentationMatrix::with_unlabelled(3, vec![]);
        let f = smith_normal_form(&m);
        assert_eq!(f.free_rank(), 3);
        assert!(f.factors().is_empty());
        assert_eq!(f.order(), None);
    }

    #[test]
    fn canonical_form_merges_coprime() {
        let f = InvariantFactors::from_cyclic([2u32, 3, 4], 0);
        assert_eq!(f.factors_u64(), vec![2, 12]);
    }

    #[test]
    fn non_diagonal_example() {
        // [[2,4],[6,8]] has determinant -8 and content 2 -> Z_2 + Z_4
        let f = integer_cokernel(&[vec![2, 4], vec![6, 8]], 2);
        assert_eq!(f.factors_u64(), vec![2, 4]);
    }

    #[test]
    fn modular_route_detected() {
        let mut m = PresentationMatrix::with_unlabelled(3, vec![vec![1, 2, 3], vec![0, 4, 4]]);
        m.push_torsion(8);
        assert_eq!(m.uniform_torsion(), Some(8));
        let a = smith_normal_form(&m);
        let b = integer_cokernel(&m.relations, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn modular_composite_modulus() {
        let rows = vec![vec![3, 0], vec![0, 5]];
        let s = ModularSnf::new(&rows, 2, 15);
        assert_eq!(s.cokernel().factors_u64(), vec![15]);
        assert_eq!(s.image().factors_u64(), vec![15]);
    }

    #[test]
    fn span_membership() {
        let rows = vec![vec![2, 0, 0], vec![0, 4, 0]];
        assert!(in_span_mod(&rows, &[6, 4, 0], 8));
        assert!(!in_span_mod(&rows, &[1, 0, 0], 8));
        assert!(!in_span_mod(&rows, &[0, 2, 0], 8));
    }

    #[test]
    fn factorisation() {
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor(1), vec![]);
    }
}
