use levelab::b3::*;
use levelab::homology::Z2Class;
use levelab::{rng, Error};
use num_bigint::BigUint;
use rand::Rng;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn reduce_examples() {
    let g = 3;
    assert_eq!(reduce_symbol(&Z2Class::a(g, 1)), BPoly::var(g, 0));
    let expected = BPoly::var(g, 0).add(&BPoly::var(g, g)).add(&BPoly::one(g));
    assert_eq!(reduce_symbol(&(Z2Class::a(g, 1) + Z2Class::b(g, 1))), expected);
}

#[test]
fn reduce_is_additive_up_to_pairing() {
    for g in 1..=2 {
        for x in Z2Class::all(g) {
            for y in Z2Class::all(g) {
                let mut lhs = reduce_symbol(&x).add(&reduce_symbol(&y));
                if x.pairing(&y).unwrap() == 1 {
                    lhs = lhs.add(&BPoly::one(g));
                }
                assert_eq!(lhs, reduce_symbol(&(x + y)));
            }
        }
    }
}

#[test]
fn reduce_is_order_independent() {
    let g = 3;
    let mut r = rng(16);
    let corr = |x: &Z2Class, y: &Z2Class| {
        if x.pairing(y).unwrap() == 1 {
            BPoly::one(g)
        } else {
            BPoly::zero(g)
        }
    };
    for _ in 0..200 {
        let [x, y, z] = [(); 3].map(|_| Z2Class::new(g, r.gen_range(0..1u32 << (2 * g))));
        let left = reduce_symbol(&(x + y))
            .add(&reduce_symbol(&z))
            .add(&corr(&(x + y), &z));
        let right = reduce_symbol(&x)
            .add(&reduce_symbol(&(y + z)))
            .add(&corr(&x, &(y + z)));
        assert_eq!(left, right);
        assert_eq!(left, reduce_symbol(&(x + y + z)));
    }
}

#[test]
fn truncated_products() {
    let g = 3;
    let x = |k| BPoly::var(g, k);
    assert_eq!(x(0).mul_truncated(&x(0)).unwrap(), x(0));
    let t = x(0).mul_truncated(&x(1)).unwrap().mul_truncated(&x(2)).unwrap();
    assert_eq!(t.degree(), Some(3));
    assert_eq!(t.mul_truncated(&x(3)), Err(Error::DegreeOverflow(4)));
    let a = x(1).add(&x(4)).add(&BPoly::one(g));
    assert_eq!(BPoly::one(g).mul_truncated(&a).unwrap(), a);
}

#[test]
fn dimensions() {
    assert_eq!(b3_dimension(3), 42);
    for g in 1..=3 {
        let n = 2 * g;
        let brute = (0u32..1 << n).filter(|m| m.count_ones() <= 3).count();
        assert_eq!(b3_dimension(g), brute);
        assert_eq!(b3_basis(g).len(), brute);
        assert_eq!(b3_dimension(g), 1 + n + binomial(n, 2) + binomial(n, 3));
    }
}

#[test]
fn alpha_map() {
    for g in 1..=4 {
        let a = alpha(g);
        assert_eq!(a.support().len(), g);
        assert_eq!(BPoly::one(g).mul_truncated(&a).unwrap(), a);
        let m = alpha_multiplication_map(g);
        assert_eq!(m.len(), b3_dimension(g));
        assert_eq!(m[0].len(), 2 * g + 1);
        assert_eq!(closed_b3_dimension(g), b3_dimension(g) - alpha_rank(g));
    }
    assert_eq!(alpha_rank(3), 7);
}

#[test]
fn kernel_generators_fit() {
    for g in 1..=4 {
        let a = alpha(g);
        for k in 0..2 * g {
            assert!(a.mul_truncated(&BPoly::var(g, k)).is_ok());
        }
    }
}

#[test]
fn orders() {
    let two = |k: u32| BigUint::from(2u32).pow(k);
    assert_eq!(b3_orders(3), (two(42), two(41)));
    assert_eq!(b3_orders(1), (two(4), two(3)));
}
