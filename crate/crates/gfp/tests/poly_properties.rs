use gfp::Poly;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-20i64..=20, 0..=max_degree + 1).prop_map(|c| Poly::from_i64s(&c))
}

fn nonzero(max_degree: usize) -> impl Strategy<Value = Poly> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn no_zero_divisors(a in poly(4), b in poly(4)) {
        prop_assert_eq!((&a * &b).is_zero(), a.is_zero() || b.is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(4), b in nonzero(4)) {
        prop_assert_eq!((&a * &b).exact_div(&b), Ok(a));
    }

    #[test]
    fn gcd_divides_both_and_is_symmetric(a in nonzero(4), b in nonzero(4), c in nonzero(2)) {
        let (a, b) = (&a * &c, &b * &c);
        let g = a.gcd(&b);
        prop_assert!(a.exact_div(&g).is_ok());
        prop_assert!(b.exact_div(&g).is_ok());
        prop_assert!(g.exact_div(&c.normalized()).is_ok());
        prop_assert_eq!(g, b.gcd(&a));
        prop_assert_eq!(a.gcd(&a), a.normalized());
    }

    #[test]
    fn content_times_primitive_part(p in nonzero(6)) {
        let rebuilt = p.primitive_part().unwrap().scale(&p.content());
        prop_assert!(rebuilt == p || rebuilt == -p.clone());
        prop_assert!(p.primitive_part().unwrap().content() == BigInt::from(1));
    }

    #[test]
    fn gcd_is_invariant_under_multiple_shift(r in nonzero(3), s in poly(3), t in nonzero(3), u in nonzero(2)) {
        let (r, t) = (&r * &u, &t * &u);
        prop_assert_eq!(r.gcd(&t), r.gcd(&(&(&r * &s) - &t)));
    }

    #[test]
    fn gcd_of_coprime_products_splits(
        p in nonzero(2), q in nonzero(2), r in nonzero(2), s in nonzero(2), shared in nonzero(1),
    ) {
        let (p, r) = (&p * &shared, &r * &shared);
        prop_assume!(p.gcd(&q).is_one() && r.gcd(&s).is_one());
        let lhs = (&p * &q).gcd(&(&r * &s));
        let rhs = &(&p.gcd(&r) * &p.gcd(&s)) * &(&q.gcd(&r) * &q.gcd(&s));
        prop_assert_eq!(lhs, rhs.normalized());
    }

    #[test]
    fn gcd_of_cross_coprime_products(p in nonzero(2), q in nonzero(2), r in nonzero(2), s in nonzero(2)) {
        prop_assume!(p.gcd(&r).is_one() && q.gcd(&s).is_one());
        let lhs = (&p * &q).gcd(&(&r * &s));
        prop_assert_eq!(lhs, (&p.gcd(&s) * &q.gcd(&r)).normalized());
    }

    #[test]
    fn gcd_through_common_factors(p in nonzero(2), q in nonzero(2), r in nonzero(2), s in nonzero(2)) {
        let (z1, z2) = (p.gcd(&r), q.gcd(&s));
        let lhs = (&p * &q).gcd(&(&r * &s));
        let num = &(&z2 * &p).gcd(&(&z1 * &s)) * &(&z1 * &q).gcd(&(&z2 * &r));
        prop_assert_eq!(num.exact_div(&(&z1 * &z2)).unwrap().normalized(), lhs);
    }

    #[test]
    fn text_round_trip(p in poly(8)) {
        prop_assert_eq!(p.to_string().parse::<Poly>().unwrap(), p);
    }

    #[test]
    fn json_round_trip(p in poly(8)) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(4), b in poly(4), x in -9i64..=9) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }
}
