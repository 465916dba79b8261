//! Randomized algebraic invariants.

use lgv_reciprocity::rational::{frac, int};
use lgv_reciprocity::{char_poly, ExactMatrix, LinearRecurrence, Rational, RationalPolynomial};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn square(size: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(rational(), size * size)
        .prop_map(move |e| ExactMatrix::new(size, size, e).unwrap())
}

fn matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=5).prop_flat_map(square)
}

fn matrix_pair() -> impl Strategy<Value = (ExactMatrix, ExactMatrix)> {
    (1usize..=4).prop_flat_map(|n| (square(n), square(n)))
}

/// Monic polynomial of degree 1..=4 with nonzero constant term, plus
/// matching initial values.
fn recurrence() -> impl Strategy<Value = LinearRecurrence> {
    (1usize..=4).prop_flat_map(|d| {
        (
            nonzero_rational(),
            prop::collection::vec(rational(), d - 1),
            prop::collection::vec(rational(), d),
        )
            .prop_map(|(constant, middle, initial)| {
                let mut coeffs = vec![constant];
                coeffs.extend(middle);
                coeffs.push(Rational::one());
                LinearRecurrence::from_char_poly(&RationalPolynomial::new(coeffs), initial).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compound_times_adjugate_is_det(m in matrix()) {
        let det = m.det().unwrap();
        for k in 0..=m.rows() {
            let com = m.compound(k).unwrap();
            let adj = m.adjugate(k).unwrap();
            let expected = ExactMatrix::identity(com.rows()).scale(&det);
            prop_assert_eq!(com.mul(&adj).unwrap(), expected.clone());
            prop_assert_eq!(adj.mul(&com).unwrap(), expected);
        }
    }

    #[test]
    fn cayley_hamilton(m in matrix()) {
        prop_assert!(char_poly(&m).unwrap().eval_matrix(&m).unwrap().is_zero());
    }

    #[test]
    fn det_is_signed_constant_term(m in matrix()) {
        let p = char_poly(&m).unwrap();
        let sign = if m.rows() % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(m.det().unwrap(), sign * p.coefficient(0));
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(m.rows()));
    }

    #[test]
    fn compound_is_multiplicative((a, b) in matrix_pair()) {
        let ab = a.mul(&b).unwrap();
        for k in 0..=a.rows() {
            prop_assert_eq!(ab.compound(k).unwrap(), a.compound(k).unwrap().mul(&b.compound(k).unwrap()).unwrap());
        }
    }

    #[test]
    fn rationals_are_canonical(p in -1000i64..1000, q in 1i64..1000) {
        let r = frac(p, q);
        let again = Rational::new(r.numer().clone(), r.denom().clone());
        prop_assert_eq!(&again, &r);
        prop_assert!(*r.denom() > num_bigint::BigInt::zero());
        if p == 0 {
            prop_assert!(r.denom().is_one());
        }
    }

    #[test]
    fn backward_forward_round_trip(r in recurrence(), len in 1usize..=20) {
        let d = r.order();
        let mut back = r.backward_terms(len.max(d)).unwrap();
        back.reverse();
        let shifted = LinearRecurrence::new(r.coefficients().to_vec(), back[..d].to_vec()).unwrap();
        let forward = shifted.forward_terms(back.len() + d);
        prop_assert_eq!(&forward[..back.len()], &back[..]);
        prop_assert_eq!(&forward[back.len()..], r.initial_values());
    }

    #[test]
    fn generating_function_reproduces_terms(r in recurrence()) {
        let terms = 2 * r.order() + 5;
        let gf = r.generating_function().unwrap();
        prop_assert!(gf.numerator.degree().is_none_or(|d| d < r.order()));
        prop_assert!(gf.denominator.coefficient(0).is_one());
        prop_assert_eq!(gf.series(terms), r.forward_terms(terms));
        prop_assert_eq!(r.eval_forward(terms as u64), gf.series(terms + 1)[terms].clone());
    }

    #[test]
    fn negative_series_matches_backward(r in recurrence()) {
        prop_assert!(r.negative_series_check(10).unwrap());
    }

    #[test]
    fn annihilator_choice_is_irrelevant(r in recurrence(), c in nonzero_rational()) {
        // p(x)(x - c) also annihilates the sequence
        let wider = r.char_poly().mul(&RationalPolynomial::new(vec![-c, Rational::one()]));
        let initial = r.forward_terms(r.order() + 1);
        let other = LinearRecurrence::from_char_poly(&wider, initial).unwrap();
        prop_assert_eq!(other.forward_terms(15), r.forward_terms(15));
        prop_assert_eq!(other.backward_terms(10).unwrap(), r.backward_terms(10).unwrap());
    }
}
