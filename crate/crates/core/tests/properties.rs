use num_bigint::BigInt;
use proptest::prelude::*;

use penta5_core::dissect::{collapse, dissect, huff, reassemble};
use penta5_core::qexpr::{parse, Factor, QExpression, Term};
use penta5_core::{LaurentSeries, SeriesError};

fn series(max_len: usize) -> impl Strategy<Value = LaurentSeries> {
    (
        -4i64..4,
        prop::collection::vec(-20i64..20, 0..max_len),
        0i64..6,
    )
        .prop_map(|(offset, c, slack)| {
            let trunc = offset + c.len() as i64 + slack;
            LaurentSeries::from_i64s(offset, &c, trunc)
        })
}

/// Series whose leading coefficient is 1 or -1.
fn unit_series() -> impl Strategy<Value = LaurentSeries> {
    (
        -3i64..3,
        any::<bool>(),
        prop::collection::vec(-9i64..9, 0..14),
        1i64..4,
    )
        .prop_map(|(offset, neg, mut c, slack)| {
            c.insert(0, if neg { -1 } else { 1 });
            LaurentSeries::from_i64s(offset, &c, offset + c.len() as i64 + slack)
        })
}

/// Both truncated to the smaller bound, then compared.
fn agree(x: &LaurentSeries, y: &LaurentSeries) -> bool {
    let t = x.trunc().min(y.trunc());
    x.truncate(t) == y.truncate(t)
}

fn factor() -> impl Strategy<Value = Factor> {
    let exp = prop_oneof![-6i64..0, 2i64..6, Just(1i64)];
    prop_oneof![
        (prop::sample::select(vec![1u32, 2, 5, 25]), exp.clone())
            .prop_map(|(b, e)| Factor::eta(b, e)),
        ((1u32..5), exp.clone()).prop_map(|(a, e)| Factor::gen_eta(a, 5, e)),
        (prop::sample::select(vec![1u32, 5]), exp).prop_map(|(k, e)| Factor::r(k, e)),
    ]
}

fn term() -> impl Strategy<Value = Term> {
    (
        prop_oneof![-50i64..-1, 1i64..50],
        0i64..6,
        prop::collection::btree_set(factor(), 0..3),
    )
        .prop_map(|(c, s, f)| Term::new(c, s, f.into_iter().collect()))
}

fn expression() -> impl Strategy<Value = QExpression> {
    prop::collection::vec(term(), 1..4).prop_map(QExpression::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn addition_is_commutative_and_associative(a in series(12), b in series(12), c in series(12)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(agree(&a.add(&b).add(&c), &a.add(&b.add(&c))));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&a.neg()), LaurentSeries::zero(a.trunc()));
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(
        a in series(10), b in series(10), c in series(10)
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(agree(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(agree(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert_eq!(a.mul(&LaurentSeries::one(a.precision().max(0) + 64)), a.clone());
    }

    #[test]
    fn inverse_is_two_sided(u in unit_series()) {
        let inv = u.inverse().unwrap();
        prop_assert_eq!(inv.offset(), -u.offset());
        prop_assert_eq!(inv.precision(), u.precision());
        let one = u.mul(&inv);
        prop_assert_eq!(one, LaurentSeries::one(u.precision()));
    }

    #[test]
    fn powers_agree(u in unit_series(), e in -5i64..7) {
        let by_squaring = u.int_pow(e).unwrap();
        let by_recurrence = u.pow_recurrence(e).unwrap();
        prop_assert_eq!(&by_squaring, &by_recurrence);
        prop_assert_eq!(by_squaring.precision(), u.precision());
    }

    #[test]
    fn coefficients_stop_at_the_bound(a in series(12)) {
        let t = a.trunc();
        let beyond = a.coeff_at(t);
        let is_beyond = matches!(beyond, Err(SeriesError::BeyondTruncation { .. }));
        prop_assert!(is_beyond);
        if t > a.offset() {
            prop_assert!(a.coeff_at(t - 1).is_ok());
        }
    }

    #[test]
    fn parse_inverts_display(e in expression()) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back.evaluate(20), e.evaluate(20));
    }

    #[test]
    fn evaluation_is_a_ring_map(x in expression(), y in expression()) {
        let bound = 25;
        let mut sum = x.clone();
        sum.terms.extend(y.terms.iter().cloned());
        prop_assert_eq!(sum.evaluate(bound), x.evaluate(bound).add(&y.evaluate(bound)));
        prop_assert_eq!(x.times(&y).evaluate(bound), x.evaluate(bound).mul(&y.evaluate(bound)).truncate(bound));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dissection_reassembles(a in series(40), m in 1u32..8) {
        let parts = dissect(&a, m);
        prop_assert_eq!(parts.len(), m as usize);
        prop_assert_eq!(reassemble(&parts), a.clone());
        let huffed = (0..m).map(|r| huff(&a, m, r)).fold(LaurentSeries::zero(a.trunc()), |s, h| s.add(&h));
        prop_assert_eq!(huffed, a);
    }

    #[test]
    fn huff_pulls_out_series_in_q_to_the_m(a in series(8), b in series(40), m in 2u32..6, r in 0u32..6) {
        let r = r % m;
        let am = a.substitute(m);
        prop_assert!(agree(&huff(&am.mul(&b), m, r), &am.mul(&huff(&b, m, r))));
        prop_assert!(agree(&collapse(&am.mul(&b), m, r), &a.mul(&collapse(&b, m, r))));
    }

    #[test]
    fn scaling_commutes_with_collapse(a in series(30), c in -40i64..40, m in 1u32..6) {
        let c = BigInt::from(c);
        for r in 0..m {
            prop_assert_eq!(collapse(&a.scale(&c), m, r), collapse(&a, m, r).scale(&c));
        }
    }
}
