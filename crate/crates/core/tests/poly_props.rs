mod common;

use chromex::{falling_factorial, FallingFactorialForm, IntPolynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(-50i64..50, 0..=max_deg + 1).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplication_distributes(a in arb_poly(6), b in arb_poly(6), c in arb_poly(6)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn falling_basis_round_trips(mut c in proptest::collection::vec(-1000i64..1000, 1..=9)) {
        // polynomials with zero constant term are exactly the span of (λ)_1..(λ)_n
        c[0] = 0;
        let p = IntPolynomial::from_i64s(&c);
        let n = c.len() - 1;
        let form = p.to_falling_basis(n).unwrap();
        prop_assert_eq!(form.to_polynomial(), p.clone());
        for x in -5..=5 {
            prop_assert_eq!(form.eval(x), p.eval_i64(x));
        }
    }

    #[test]
    fn forms_round_trip(alpha in proptest::collection::vec(-1000i64..1000, 1..=9)) {
        // alpha[k - 1] is the coefficient of (λ)_k
        let form = FallingFactorialForm::from_i64s(&alpha);
        let back = form.to_polynomial().to_falling_basis(alpha.len()).unwrap();
        prop_assert_eq!(&back, &form);
        for x in -5..=5 {
            prop_assert_eq!(form.eval(x), form.to_polynomial().eval_i64(x));
        }
    }

    #[test]
    fn div_linear_inverts_mul_linear(p in arb_poly(8), a in -10i64..10) {
        let (q, r) = p.mul_linear(a).div_linear(a);
        prop_assert_eq!(q, p);
        prop_assert_eq!(r, BigInt::from(0));
    }
}

#[test]
fn falling_factorial_vanishes_below_k() {
    for k in 0..8usize {
        for x in 0..k as i64 {
            assert_eq!(falling_factorial(x, k), BigInt::from(0));
        }
        assert!(falling_factorial(k as i64, k) > BigInt::from(0));
    }
}

#[test]
fn monomials_expand_into_stirling_numbers() {
    for n in 1..=10 {
        let form = IntPolynomial::monomial(n).to_falling_basis(n).unwrap();
        let stirling = common::stirling2_row(n);
        for k in 1..=n {
            assert_eq!(form.get(k), stirling[k - 1], "S({n}, {k})");
        }
    }
}
