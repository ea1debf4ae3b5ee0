use levelab::beta::*;
use levelab::group_ring::{build_l_open, delta0, delta_sigma, GroupRingElt};
use levelab::homology::{SpinForm, Z2Class};
use levelab::{rng, Error};
use rand::Rng;

#[test]
fn generator_values() {
    let g = 2;
    let s0 = SpinForm::sigma0(g);
    let f = beta_generator(&s0, &Z2Class::b(g, 1)).unwrap();
    assert_eq!(f.at(&Z2Class::a(g, 1)), 1);
    assert_eq!(f.at(&Z2Class::a(g, 2)), 0);
    for s in SpinForm::all(g) {
        for c in Z2Class::all(g).filter(|c| !c.is_zero()) {
            let f = beta_generator(&s, &c).unwrap();
            assert_eq!(f.at(&Z2Class::zero(g)), 0);
            for x in Z2Class::all(g) {
                if c.pairing(&x).unwrap() == 1 {
                    assert_eq!(f.at(&x), if s.q(&c) == 1 { 7 } else { 1 });
                }
            }
        }
    }
    assert_eq!(beta_generator(&s0, &Z2Class::zero(g)), Err(Error::ZeroClass));
}

#[test]
fn extension_examples() {
    let g = 2;
    let s0 = SpinForm::sigma0(g);
    let (a1, b1) = (Z2Class::a(g, 1), Z2Class::b(g, 1));
    // [A1 + B1] enters with coefficient 7 and q(A1 + B1) = 1 flips its sign,
    // so the value at A1 is 1 + 7 * 7 = 2, not 0.
    let f = beta_extend(&s0, &delta0(&[a1, b1]));
    assert_eq!(f.at(&a1), 2);
    assert_eq!(f.at(&b1), 2);
    assert_eq!(f.at(&(a1 + b1)), 2);
    assert_eq!(f, union_formula(&[a1, b1]));
    assert!(beta_extend(&s0, &GroupRingElt::basis(&Z2Class::zero(g))).is_zero());
}

#[test]
fn beta_of_delta_pairs() {
    // The union reading holds for every tuple; the product reading only for one class.
    let g = 3;
    let mut r = rng(14);
    for s in SpinForm::all(g).step_by(7) {
        for _ in 0..10 {
            let xs: Vec<Z2Class> = (0..r.gen_range(1..=5))
                .map(|_| Z2Class::new(g, r.gen_range(1..1u32 << (2 * g))))
                .collect();
            assert!(beta_delta_union_holds(&s, &xs));
            if xs.len() == 1 {
                assert!(beta_delta_product_holds(&s, &xs));
            }
        }
    }
}

#[test]
fn psi_examples() {
    let g = 3;
    let s0 = SpinForm::sigma0(g);
    let x1 = Z2Class::basis(g, 0);
    let p = psi_project(&beta_generator(&s0, &x1).unwrap());
    let nonzero: Vec<usize> = (0..p.singles.len()).filter(|&i| p.singles[i] != 0).collect();
    assert_eq!(nonzero, vec![g]);
    assert_eq!(p.singles[g], 1);

    // Value 2 wherever x pairs with X_1 or X_2, so the singleton block
    // is not zero and every pair touching X_{1+g} or X_{2+g} is hit.
    let x2 = Z2Class::basis(g, 1);
    let f = beta_extend(&s0, &delta_sigma(&s0, &[x1, x2]));
    assert_eq!(f, union_formula(&[x1, x2]));
    let p = psi_project(&f);
    let singles: Vec<usize> = (0..p.singles.len()).filter(|&i| p.singles[i] != 0).collect();
    assert_eq!(singles, vec![g, g + 1]);
    let classes = psi_classes(g);
    let n = 2 * g;
    let target = Z2Class::basis(g, g) + Z2Class::basis(g, g + 1);
    let at = classes[n..].iter().position(|c| *c == target).unwrap();
    assert_eq!(p.pairs[at], 2);
    assert!(p.pairs.iter().all(|&v| v == 0 || v == 2));

    assert!(psi_project(&Z8Function::zero(g)).is_zero());
}

#[test]
fn psi_image_structure() {
    let s0 = SpinForm::sigma0(3);
    assert_eq!(image_of_psi_beta(&s0).unwrap().to_string(), "Z_2^20 + Z_4^15 + Z_8^6");
    for s in SpinForm::all(2) {
        assert_eq!(image_of_psi_beta(&s).unwrap().to_string(), "Z_2^4 + Z_4^6 + Z_8^4");
    }
}

#[test]
fn psi_kills_l() {
    for s in SpinForm::all(2) {
        for l in build_l_open(2) {
            let p = psi_project(&beta_extend(&s, &l));
            assert!(p.is_zero());
        }
    }
}

#[test]
fn kernel_contains_l_examples() {
    assert!(kernel_contains_l(&SpinForm::sigma0(3)).unwrap());
    let g = 3;
    let s = SpinForm::new(g, 0b101011);
    let mut r = rng(15);
    assert_eq!(kernel_contains_delta_sigma(&s, &mut r, 60, 6), 0);
    let (x, y) = (Z2Class::new(g, 5), Z2Class::new(g, 48));
    assert!(beta_extend(&s, &delta_sigma(&s, &[x, y]).scale(4)).is_zero());
}

#[test]
fn beta_image_independent_of_spin_structure() {
    let first = image_of_beta(&SpinForm::sigma0(2)).unwrap();
    for s in SpinForm::all(2) {
        assert_eq!(image_of_beta(&s).unwrap(), first);
    }
}

#[test]
fn spin_action_law() {
    for g in 1..=2 {
        for s in SpinForm::all(g) {
            assert_eq!(spin_action_violations(&s), 0);
        }
    }
}

#[test]
fn iota_relations_hold_modulo_l() {
    let g = 3;
    let l = build_l_open(g);
    for rel in iota_relations(g) {
        assert!(iota_relation_holds(&rel, &l), "{}", rel.name);
    }
}
