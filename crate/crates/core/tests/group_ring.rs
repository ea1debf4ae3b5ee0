use levelab::group_ring::*;
use levelab::homology::{sign_i, SpinForm, Z2Class};
use levelab::rng;
use levelab::smith::*;
use num_bigint::BigUint;
use rand::Rng;

fn random_classes(r: &mut impl Rng, g: usize, n: usize) -> Vec<Z2Class> {
    (0..n)
        .map(|_| Z2Class::new(g, r.gen_range(0..1u32 << (2 * g))))
        .collect()
}

#[test]
fn sign_examples() {
    let g = 2;
    let (a1, b1) = (Z2Class::a(g, 1), Z2Class::b(g, 1));
    assert_eq!(sign_i(&[a1, b1]), 1);
    assert_eq!(sign_i(&[a1, Z2Class::a(g, 2)]), 0);
}

#[test]
fn delta0_examples() {
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
    assert_eq!(d.terms().len(), 3);
}

#[test]
fn delta_sigma_examples() {
    let g = 3;
    let s0 = SpinForm::sigma0(g);
    let mut r = rng(6);
    for _ in 0..50 {
        let n = r.gen_range(1..=2 * g);
        let xs: Vec<Z2Class> = (0..n).map(|k| Z2Class::basis(g, k)).collect();
        assert_eq!(delta_sigma(&s0, &xs), delta0(&xs));
    }
    for s in SpinForm::all(2) {
        for x in Z2Class::all(2) {
            let expected = GroupRingElt::basis(&x).scale(if s.q(&x) == 1 { -1 } else { 1 });
            assert_eq!(delta_sigma(&s, &[x]), expected);
        }
    }
}

#[test]
fn delta_recurrence_on_random_tuples() {
    let g = 3;
    let mut r = rng(7);
    let forms: Vec<SpinForm> = SpinForm::all(g).collect();
    for _ in 0..300 {
        let s = forms[r.gen_range(0..forms.len())];
        let n = r.gen_range(2..=6);
        let xs = random_classes(&mut r, g, n);
        assert!(delta_recurrence_holds(&s, &xs));
    }
}

#[test]
fn delta0_matches_subset_enumeration() {
    let g = 2;
    let mut r = rng(9);
    for _ in 0..100 {
        let n = r.gen_range(1..=6);
        let xs = random_classes(&mut r, g, n);
        let d = delta0(&xs);
        for y in Z2Class::all(g) {
            assert_eq!(d.coeff(&y), delta0_coefficient_bruteforce(&xs, &y));
        }
    }
}

#[test]
fn l_open_shape() {
    let g1 = build_l_open(1);
    assert_eq!(g1.len(), 2);
    assert!(g1.contains(&GroupRingElt::basis(&Z2Class::zero(1))));
    let l = build_l_open(3);
    assert!(l.contains(&GroupRingElt::basis(&Z2Class::zero(3))));
    // [0], C(6,2) doubled pairs, C(6,3) triples, and full subsets of size >= 4
    assert_eq!(l.len(), 1 + 15 + 20 + 15 + 6 + 1);
    assert_eq!(build_l_closed(3).len(), l.len() + 1 + 6);
}

#[test]
fn closed_class_relation_expands() {
    let g = 3;
    let x = Z2Class::a(g, 1);
    let mut e = GroupRingElt::zero(g);
    for i in 1..=g {
        let (a, b) = (Z2Class::a(g, i), Z2Class::b(g, i));
        for (k, t) in [
            (1, delta0(&[a, b, x])),
            (2, delta0(&[a, x])),
            (2, delta0(&[b, x])),
            (4, GroupRingElt::basis(&x)),
        ] {
            e = e.add(&t.scale(k));
        }
    }
    assert_eq!(closed_class_relation(&x), e);
}

#[test]
fn snf_small_examples() {
    let m = PresentationMatrix::with_unlabelled(2, vec![vec![2, 0], vec![0, 4]]);
    assert_eq!(smith_normal_form(&m).to_string(), "Z_2 + Z_4");
    let m = PresentationMatrix::with_unlabelled(3, vec![]);
    let f = smith_normal_form(&m);
    assert_eq!(f.free_rank(), 3);
    assert!(f.factors().is_empty());
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for c in 0..n {
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
            .collect();
        let s = if c % 2 == 0 { 1 } else { -1 };
        total += s * m[0][c] * det(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn snf_matches_minor_gcds() {
    let mut r = rng(10);
    for _ in 0..20 {
        let n = 6;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| r.gen_range(-6..=6)).collect())
            .collect();
        let big: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        let f = integer_cokernel(&rows, n);
        let diag: Vec<BigUint> = {
            let mut d = vec![BigUint::from(1u32); n - f.factors().len() - f.free_rank()];
            d.extend(f.factors().iter().cloned());
            d
        };
        let mut prev = 1i128;
        for k in 1..=n {
            let mut g = 0i128;
            for rs in subsets(n, k) {
                for cs in subsets(n, k) {
                    let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| big[i][j]).collect()).collect();
                    g = gcd(g, det(&sub));
                }
            }
            if g == 0 {
                assert!(k > diag.len());
                break;
            }
            assert_eq!(BigUint::from((g / prev) as u128), diag[k - 1], "k = {k}");
            prev = g;
        }
    }
}

#[test]
fn open_quotient_structure() {
    assert_eq!(quotient_structure(3, false).unwrap(), expected_open_structure(3));
    assert_eq!(
        quotient_structure(3, false).unwrap().to_string(),
        "Z_2^20 + Z_4^15 + Z_8^6"
    );
}

#[test]
fn open_quotient_structure_genus_four() {
    assert_eq!(
        quotient_structure(4, false).unwrap().to_string(),
        "Z_2^56 + Z_4^28 + Z_8^8"
    );
}

#[test]
fn closed_quotient_divides_open() {
    let open = quotient_structure(3, false).unwrap().order().unwrap();
    let closed = quotient_structure(3, true).unwrap();
    assert_eq!(closed.to_string(), "Z_2^15 + Z_4^14 + Z_8^6");
    assert!((open % closed.order().unwrap()) == BigUint::from(0u32));
}

#[test]
fn quotient_size_guard() {
    assert!(quotient_structure(MAX_QUOTIENT_GENUS + 1, false).is_err());
}

#[test]
fn counting_identity_holds() {
    for g in [2, 3, 4, 10] {
        assert!(counting_identity(g), "g = {g}");
    }
}

#[test]
fn random_l_generators_lie_in_l() {
    let g = 3;
    let l = build_l_open(g);
    let mut r = rng(12);
    for _ in 0..30 {
        assert!(in_span(&l, &random_l_generator(g, &mut r, 2 * g)));
    }
    assert!(!in_span(&l, &GroupRingElt::basis(&Z2Class::a(g, 1))));
}
