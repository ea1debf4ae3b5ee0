//! The homomorphism `beta_sigma`, given on generators by
//! `[C] -> (-1)^{q_sigma(C)} i_C`, its linear extension to `Z_8[H]`, the
//! projection `Psi` onto values at sums of at most three basis classes, and
//! the checks built on them.

use rand::Rng;

use crate::error::{Error, Result};
use crate::group_ring::{build_l_open, delta0, delta_sigma, GroupRingElt, MAX_QUOTIENT_GENUS};
use crate::homology::{pair_bits, SpinForm, Z2Class};
use crate::smith::{InvariantFactors, ModularSnf};

/// A map `H_1(Sigma_g; Z_2) -> Z_8`, dense in bitmask order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Z8Function {
    g: usize,
    values: Vec<u8>,
}

impl Z8Function {
    pub fn zero(g: usize) -> Self {
        Z8Function {
            g,
            values: vec![0; 1 << (2 * g)],
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn at(&self, x: &Z2Class) -> u8 {
        self.values[x.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn add_scaled(&mut self, o: &Z8Function, k: u8) {
        for (a, b) in self.values.iter_mut().zip(&o.values) {
            *a = ((*a as u16 + *b as u16 * k as u16) % 8) as u8;
        }
    }
}

fn check_size(g: usize) -> Result<()> {
    if g > MAX_QUOTIENT_GENUS {
        return Err(Error::SizeLimit(format!("genus {g} > {MAX_QUOTIENT_GENUS}")));
    }
    Ok(())
}

/// `x -> (-1)^{q_sigma(C)} i_C(x)`.
pub fn beta_generator(sigma: &SpinForm, c: &Z2Class) -> Result<Z8Function> {
    if c.is_zero() {
        return Err(Error::ZeroClass);
    }
    let g = c.genus();
    let s = if sigma.q(c) == 1 { 7 } else { 1 };
    let values = (0..(1u32 << (2 * g)))
        .map(|x| s * pair_bits(g, c.bits(), x))
        .collect();
    Ok(Z8Function { g, values })
}

/// Linear extension to the group ring; `[0]` maps to 0.
pub fn beta_extend(sigma: &SpinForm, e: &GroupRingElt) -> Z8Function {
    let g = e.genus();
    let mut f = Z8Function::zero(g);
    for (x, c) in e.terms() {
        if x.is_zero() {
            continue;
        }
        let b = beta_generator(sigma, &x).expect("nonzero");
        f.add_scaled(&b, c);
    }
    f
}

/// The classes `Psi` reads, in order: basis classes, sums of two, sums of three.
pub fn psi_classes(g: usize) -> Vec<Z2Class> {
    let n = 2 * g;
    let mut out: Vec<Z2Class> = (0..n).map(|k| Z2Class::basis(g, k)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(Z2Class::new(g, (1 << i) | (1 << j)));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                out.push(Z2Class::new(g, (1 << i) | (1 << j) | (1 << k)));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiValue {
    pub singles: Vec<u8>,
    pub pairs: Vec<u8>,
    pub triples: Vec<u8>,
}

impl PsiValue {
    pub fn is_zero(&self) -> bool {
        self.singles
            .iter()
            .chain(&self.pairs)
            .chain(&self.triples)
            .all(|&v| v == 0)
    }

    pub fn flat(&self) -> Vec<u8> {
        let mut v = self.singles.clone();
        v.extend_from_slice(&self.pairs);
        v.extend_from_slice(&self.triples);
        v
    }
}

pub fn psi_project(f: &Z8Function) -> PsiValue {
    let g = f.g;
    let n = 2 * g;
    let vals: Vec<u8> = psi_classes(g).iter().map(|x| f.at(x)).collect();
    let n2 = n * (n - 1) / 2;
    PsiValue {
        singles: vals[..n].to_vec(),
        pairs: vals[n..n + n2].to_vec(),
        triples: vals[n + n2..].to_vec(),
    }
}

/// Rows `Psi(beta([X]))` for every nonzero `X`.
pub fn psi_beta_rows(sigma: &SpinForm) -> Vec<Vec<i64>> {
    let g = sigma.genus();
    Z2Class::all(g)
        .filter(|x| !x.is_zero())
        .map(|x| {
            psi_project(&beta_generator(sigma, &x).expect("nonzero"))
                .flat()
                .into_iter()
                .map(i64::from)
                .collect()
        })
        .collect()
}

/// Structure of `Im(Psi beta_sigma)` inside `Z_8^N`.
pub fn image_of_psi_beta(sigma: &SpinForm) -> Result<InvariantFactors> {
    let g = sigma.genus();
    check_size(g)?;
    let rows = psi_beta_rows(sigma);
    let n = psi_classes(g).len();
    Ok(ModularSnf::new(&rows, n, 8).image())
}

/// Structure of the image of `beta_sigma` on all of `Z_8[H]` inside `Map(H, Z_8)`.
/// It factors through the quotient by `L_{g,1}`, so this is the image of the
/// induced map on the quotient.
pub fn image_of_beta(sigma: &SpinForm) -> Result<InvariantFactors> {
    let g = sigma.genus();
    check_size(g)?;
    let rows: Vec<Vec<i64>> = Z2Class::all(g)
        .filter(|x| !x.is_zero())
        .map(|x| {
            beta_generator(sigma, &x)
                .expect("nonzero")
                .values
                .iter()
                .map(|&v| v as i64)
                .collect()
        })
        .collect();
    Ok(ModularSnf::new(&rows, 1 << (2 * g), 8).image())
}

/// `beta_sigma` kills every generator of `L_{g,1}`.
pub fn kernel_contains_l(sigma: &SpinForm) -> Result<bool> {
    let g = sigma.genus();
    check_size(g)?;
    Ok(build_l_open(g)
        .iter()
        .all(|l| beta_extend(sigma, l).is_zero()))
}

/// `4 Delta_sigma^2`, `2 Delta_sigma^3` and `Delta_sigma^n` (`4 <= n <= max_n`)
/// on random tuples all lie in the kernel; returns the number of failures.
pub fn kernel_contains_delta_sigma<R: Rng>(
    sigma: &SpinForm,
    rng: &mut R,
    trials: usize,
    max_n: usize,
) -> usize {
    let g = sigma.genus();
    let mut fails = 0;
    for t in 0..trials {
        let (n, k) = match t % 3 {
            0 => (2, 4),
            1 => (3, 2),
            _ => (rng.gen_range(4..=max_n.max(4)), 1),
        };
        let xs: Vec<Z2Class> = (0..n)
            .map(|_| Z2Class::new(g, rng.gen_range(0..(1u32 << (2 * g)))))
            .collect();
        if !beta_extend(sigma, &delta_sigma(sigma, &xs).scale(k)).is_zero() {
            fails += 1;
        }
    }
    fails
}

/// `2^{n-1} prod_j i_{x_j}`.
pub fn product_formula(xs: &[Z2Class]) -> Z8Function {
    let g = xs[0].genus();
    let n = xs.len();
    let p = ((1u32 << (n - 1)) % 8) as u8;
    let values = (0..(1u32 << (2 * g)))
        .map(|x| {
            let all = xs.iter().all(|c| pair_bits(g, c.bits(), x) == 1);
            if all {
                p
            } else {
                0
            }
        })
        .collect();
    Z8Function { g, values }
}

/// `2^{n-1} (1 - prod_j (1 - i_{x_j}))`: `2^{n-1}` wherever some `x_j . x = 1`.
pub fn union_formula(xs: &[Z2Class]) -> Z8Function {
    let g = xs[0].genus();
    let n = xs.len();
    let p = ((1u32 << (n - 1)) % 8) as u8;
    let values = (0..(1u32 << (2 * g)))
        .map(|x| {
            let any = xs.iter().any(|c| pair_bits(g, c.bits(), x) == 1);
            if any {
                p
            } else {
                0
            }
        })
        .collect();
    Z8Function { g, values }
}

/// `beta_sigma(Delta_sigma(xs)) = 2^{n-1} prod_j i_{x_j}` pointwise.
pub fn beta_delta_product_holds(sigma: &SpinForm, xs: &[Z2Class]) -> bool {
    beta_extend(sigma, &delta_sigma(sigma, xs)) == product_formula(xs)
}

/// `beta_sigma(Delta_sigma(xs)) = 2^{n-1} (1 - prod_j (1 - i_{x_j}))` pointwise.
pub fn beta_delta_union_holds(sigma: &SpinForm, xs: &[Z2Class]) -> bool {
    beta_extend(sigma, &delta_sigma(sigma, xs)) == union_formula(xs)
}

/// Number of `(C, x, y)` violating
/// `s i_C(x+y) = s i_C(x) + s' i_C(y)`, `s = (-1)^{q_sigma(C)}`, `s' = (-1)^{q_{sigma+x}(C)}`.
pub fn spin_action_violations(sigma: &SpinForm) -> usize {
    let g = sigma.genus();
    let mut bad = 0;
    for c in Z2Class::all(g).filter(|c| !c.is_zero()) {
        let b = beta_generator(sigma, &c).expect("nonzero");
        for x in Z2Class::all(g) {
            let b2 = beta_generator(&sigma.act(&x), &c).expect("nonzero");
            for y in Z2Class::all(g) {
                if b.at(&(x + y)) != (b.at(&x) + b2.at(&y)) % 8 {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// A pair of group-ring expressions for the same element, equal modulo `L_{g,1}`.
#[derive(Debug, Clone)]
pub struct IotaRelation {
    pub name: &'static str,
    pub lhs: GroupRingElt,
    pub rhs: GroupRingElt,
}

/// Explicit representatives of the images of `A_1 B_1`, `A_1 B_1 (B_2 + 1)`,
/// `A_1 B_1 B_2`, `A_1 B_2`, `A_1` and `1`, each paired with the expression
/// obtained from the twist and chain-relation computations.
pub fn iota_relations(g: usize) -> Vec<IotaRelation> {
    assert!(g >= 2, "needs two handles");
    let a1 = Z2Class::a(g, 1);
    let b1 = Z2Class::b(g, 1);
    let b2 = Z2Class::b(g, 2);
    let br = |x: Z2Class| GroupRingElt::basis(&x);
    let sum = |terms: &[(i64, Z2Class)]| {
        terms
            .iter()
            .fold(GroupRingElt::zero(g), |acc, &(k, x)| acc.add(&br(x).scale(k)))
    };

    let a1b1 = delta0(&[a1, b1])
        .scale(2)
        .add(&br(a1).scale(4))
        .add(&br(b1).scale(4));
    let a1b1_chain = sum(&[(2, a1), (2, b1), (2, a1 + b1)]);

    let chain3 = sum(&[
        (1, b1),
        (1, a1),
        (1, b1 + b2),
        (1, a1 + b1),
        (1, a1 + b1 + b2),
        (1, a1 + b2),
        (-1, b2),
    ]);
    let closed3 = delta0(&[a1, b1, b2])
        .add(&delta0(&[a1, b2]).scale(2))
        .add(&delta0(&[b1, b2]).scale(2))
        .add(&br(b2).scale(4));

    let a1b1b2 = closed3.add(&a1b1);
    let a1b1b2_chain = chain3.sub(&a1b1_chain);

    let a1b2 = sum(&[(2, a1), (2, b2), (-2, a1 + b2)]);
    let a1_b1pb2 = sum(&[(-2, b1), (2, b2), (-2, a1 + b1), (-2, a1 + b2)]);
    let a1b2_chain = a1_b1pb2.add(&a1b1_chain);

    let a1_a1pb2 = sum(&[(2, a1), (2, a1 + b2), (-2, b2)]);
    let a1_chain = a1_a1pb2.sub(&a1b2);

    vec![
        IotaRelation {
            name: "A1*B1",
            lhs: a1b1,
            rhs: a1b1_chain,
        },
        IotaRelation {
            name: "A1*B1*(B2+1)",
            lhs: chain3,
            rhs: closed3,
        },
        IotaRelation {
            name: "A1*B1*B2",
            lhs: a1b1b2,
            rhs: a1b1b2_chain,
        },
        IotaRelation {
            name: "A1*B2",
            lhs: a1b2,
            rhs: a1b2_chain,
        },
        IotaRelation {
            name: "A1",
            lhs: br(a1).scale(4),
            rhs: a1_chain,
        },
        IotaRelation {
            name: "1",
            lhs: delta0(&[a1, b1]).scale(4),
            rhs: GroupRingElt::zero(g),
        },
    ]
}

/// Whether `lhs - rhs` lies in the span of `L_{g,1}`.
pub fn iota_relation_holds(rel: &IotaRelation, l: &[GroupRingElt]) -> bool {
    crate::group_ring::in_span(l, &rel.lhs.sub(&rel.rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_values() {
        let g = 2;
        let s = SpinForm::sigma0(g);
        let b = beta_generator(&s, &Z2Class::b(g, 1)).unwrap();
        assert_eq!(b.at(&Z2Class::a(g, 1)), 1);
        assert_eq!(b.at(&Z2Class::a(g, 2)), 0);
        assert_eq!(b.at(&Z2Class::zero(g)), 0);
        assert_eq!(beta_generator(&s, &Z2Class::zero(g)), Err(Error::ZeroClass));
        // q(A_1 + B_1) = 1 under sigma_0
        let c = Z2Class::a(g, 1) + Z2Class::b(g, 1);
        let b = beta_generator(&s, &c).unwrap();
        assert_eq!(b.at(&Z2Class::a(g, 1)), 7);
    }

    #[test]
    fn extension_of_delta() {
        let g = 2;
        let s = SpinForm::sigma0(g);
        let (a1, b1) = (Z2Class::a(g, 1), Z2Class::b(g, 1));
        let f = beta_extend(&s, &delta0(&[a1, b1]));
        // i_{B_1}(A_1) = 1, and 7 * 7 * i_{A_1+B_1}(A_1) = 1
        assert_eq!(f.at(&a1), 2);
        assert_eq!(f.at(&(a1 + b1)), 2);
        assert!(beta_extend(&s, &GroupRingElt::basis(&Z2Class::zero(g))).is_zero());
    }

    #[test]
    fn psi_of_generator() {
        let g = 3;
        let s = SpinForm::sigma0(g);
        let x1 = Z2Class::basis(g, 0);
        let p = psi_project(&beta_generator(&s, &x1).unwrap());
        let nz: Vec<usize> = (0..p.singles.len()).filter(|&i| p.singles[i] != 0).collect();
        assert_eq!(nz, vec![g]);
        assert_eq!(p.singles[g], 1);
        assert!(psi_project(&Z8Function::zero(g)).is_zero());
    }

    #[test]
    fn union_not_product() {
        let g = 2;
        let s = SpinForm::sigma0(g);
        let xs = [Z2Class::a(g, 1), Z2Class::b(g, 1)];
        assert!(!beta_delta_product_holds(&s, &xs));
        assert!(beta_delta_union_holds(&s, &xs));
    }

    #[test]
    fn spin_action_law_g1() {
        for s in SpinForm::all(1) {
            assert_eq!(spin_action_violations(&s), 0);
        }
    }
}
