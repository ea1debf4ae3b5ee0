use std::collections::BTreeSet;

use levelab::homology::*;
use levelab::rng;
use rand::Rng;

#[test]
fn pairing_examples() {
    let g = 2;
    let a1 = Z2Class::a(g, 1);
    let b1 = Z2Class::b(g, 1);
    let a2 = Z2Class::a(g, 2);
    let b2 = Z2Class::b(g, 2);
    assert_eq!(a1.pairing(&b1).unwrap(), 1);
    assert_eq!((a1 + b2).pairing(&(b1 + a2)).unwrap(), 0);
    for x in Z2Class::all(g) {
        assert_eq!(x.pairing(&x).unwrap(), 0);
    }
    assert!(a1.pairing(&Z2Class::a(3, 1)).is_err());
}

#[test]
fn class_parse_roundtrip() {
    let x: Z2Class = "10|01".parse().unwrap();
    assert_eq!(x, Z2Class::a(2, 1) + Z2Class::b(2, 2));
    assert_eq!(x.to_string().parse::<Z2Class>().unwrap(), x);
    assert!("10|0".parse::<Z2Class>().is_err());
}

#[test]
fn q_examples() {
    let g = 2;
    let s = SpinForm::sigma0(g);
    assert_eq!(s.q(&(Z2Class::a(g, 1) + Z2Class::b(g, 1))), 1);
    assert_eq!(s.q(&Z2Class::zero(g)), 0);
}

#[test]
fn sigma0_q_is_intersection_sign() {
    let g = 3;
    let s = SpinForm::sigma0(g);
    let mut r = rng(4);
    for _ in 0..200 {
        let n = r.gen_range(1..=2 * g);
        let mut ks: Vec<usize> = (0..2 * g).collect();
        for i in 0..n {
            let j = r.gen_range(i..2 * g);
            ks.swap(i, j);
        }
        let xs: Vec<Z2Class> = ks[..n].iter().map(|&k| Z2Class::basis(g, k)).collect();
        let sum = xs.iter().fold(Z2Class::zero(g), |a, &b| a + b);
        assert_eq!(s.q(&sum), sign_i(&xs));
    }
}

#[test]
fn quadratic_law_exhaustive() {
    for g in 1..=2 {
        for s in SpinForm::all(g) {
            for x in Z2Class::all(g) {
                for y in Z2Class::all(g) {
                    let lhs = s.q(&(x + y));
                    let rhs = (s.q(&x) + s.q(&y) + x.pairing(&y).unwrap()) % 2;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn arf_examples() {
    assert_eq!(SpinForm::sigma0(3).arf(), 0);
    let g = 3;
    let s = SpinForm::new(g, (1 << 0) | (1 << g));
    assert_eq!(s.arf(), 1);
    for g in 1..=3 {
        for s in SpinForm::all(g) {
            assert_eq!(s.arf(), arf_by_majority(&s));
        }
    }
}

#[test]
fn action_examples() {
    for g in 1..=3 {
        for s in SpinForm::all(g) {
            assert_eq!(s.act(&Z2Class::zero(g)), s);
            let orbit: BTreeSet<u32> = Z2Class::all(g).map(|x| s.act(&x).basis_values()).collect();
            assert_eq!(orbit.len(), 1 << (2 * g));
            for x in Z2Class::all(g) {
                assert_eq!(s.act(&x).act(&x), s);
            }
        }
    }
}

#[test]
fn indicator_examples() {
    let g = 2;
    let a1 = Z2Class::a(g, 1);
    let b1 = Z2Class::b(g, 1);
    let ia = indicator(&a1);
    assert_eq!(ia[b1.index()], 1);
    assert_eq!(ia[Z2Class::a(g, 2).index()], 0);
    assert_eq!(ia[(b1 + b1).index()], 0);
}

#[test]
fn sign_examples() {
    let g = 2;
    let a1 = Z2Class::a(g, 1);
    let b1 = Z2Class::b(g, 1);
    assert_eq!(sign_i(&[a1, b1]), 1);
    assert_eq!(sign_i(&[a1, Z2Class::a(g, 2)]), 0);
    assert_eq!(sign_i(&[a1, b1, a1 + b1]), 1);
}

#[test]
fn primitive_examples() {
    for x in 1..4u64 {
        assert!(primitive_mod_d(&[x & 1, x >> 1], 2));
    }
    assert_eq!(count_sd_classes(2, 2), 3);
    assert!(!primitive_mod_d(&[2, 0], 4));

    let primitive = (0..36u64)
        .filter(|k| primitive_mod_d(&[k % 6, k / 6], 6))
        .count();
    assert_eq!(count_sd_classes(2, 6), primitive / 2);
}
