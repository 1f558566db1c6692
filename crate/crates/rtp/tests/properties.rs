//! Randomized algebraic invariants: round trips, group laws, and the
//! structural guarantees the positivity checks rely on.

use std::collections::BTreeMap;

use proptest::prelude::*;

use rtp::arith::{binomial, rat, ratio, Rational, Ring};
use rtp::contfrac::bsf_production_matrix;
use rtp::expr::Expr;
use rtp::matrix::RingMatrix;
use rtp::positivity::{is_tp_r, toeplitz};
use rtp::riordan::ExpRiordan;
use rtp::series::Series;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn nonneg_rational() -> impl Strategy<Value = Rational> {
    (0i64..=5, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

/// Series with constant term zero and the given number of free coefficients.
fn vanishing_series(order: usize) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(small_rational(), order).prop_map(|tail| {
        let mut coeffs = vec![rat(0)];
        coeffs.extend(tail);
        Series::from_coeffs(coeffs)
    })
}

/// Proper composition inputs: constant term zero, linear term one.
fn proper_series(order: usize) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(small_rational(), order - 1).prop_map(|tail| {
        let mut coeffs = vec![rat(0), rat(1)];
        coeffs.extend(tail);
        Series::from_coeffs(coeffs)
    })
}

/// Unit constant term, for the numerator slot of a Riordan pair.
fn unit_series(order: usize) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(small_rational(), order).prop_map(|tail| {
        let mut coeffs = vec![rat(1)];
        coeffs.extend(tail);
        Series::from_coeffs(coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_then_log_is_identity(s in vanishing_series(7)) {
        let round = s.exp().unwrap().log().unwrap();
        prop_assert_eq!(round, s);
    }

    #[test]
    fn reversion_inverts_composition(f in proper_series(7)) {
        let fbar = f.revert().unwrap();
        prop_assert_eq!(f.compose(&fbar).unwrap(), Series::t(7));
        prop_assert_eq!(fbar.compose(&f).unwrap(), Series::t(7));
    }

    #[test]
    fn riordan_multiplication_matches_matrix_product(
        g1 in unit_series(6), f1 in proper_series(6),
        g2 in unit_series(6), f2 in proper_series(6),
    ) {
        let r1 = ExpRiordan::new(g1, f1).unwrap();
        let r2 = ExpRiordan::new(g2, f2).unwrap();
        let product = r1.multiply(&r2).unwrap().triangle(6).unwrap();
        prop_assert_eq!(product, r1.triangle(6).unwrap().mul(&r2.triangle(6).unwrap()));
    }

    #[test]
    fn riordan_inverse_gives_identity_triangle(g in unit_series(6), f in proper_series(6)) {
        let r = ExpRiordan::new(g, f).unwrap();
        let id = r.multiply(&r.inverse().unwrap()).unwrap().triangle(6).unwrap();
        prop_assert_eq!(id, RingMatrix::identity(7));
    }

    #[test]
    fn production_identity_holds_for_random_proper_pairs(
        g in unit_series(7), f in proper_series(7),
    ) {
        let r = ExpRiordan::new(g, f).unwrap();
        prop_assert!(r.verify_production(6, false).unwrap());
        prop_assert!(r.verify_production(6, true).unwrap());
    }

    #[test]
    fn bidiagonal_products_are_totally_positive(
        xs in prop::collection::vec(nonneg_rational(), 3),
        nu in nonneg_rational(),
        step in nonneg_rational(),
    ) {
        use rtp::arith::Poly;
        let xs: Vec<Poly> = xs.iter().map(Poly::from_rational).collect();
        let p = bsf_production_matrix(
            &Poly::from_rational(&nu),
            &Poly::from_rational(&step),
            &xs,
            6,
        );
        let values = p.map(|e| e.as_constant().expect("constant entries"));
        prop_assert!(is_tp_r(&values, 3).unwrap().pass);
    }

    #[test]
    fn failed_positivity_checks_carry_revalidating_witnesses(
        entries in prop::collection::vec(-5i64..=5, 16),
    ) {
        let m = RingMatrix::new(4, 4, entries.iter().map(|&v| rat(v)).collect());
        let verdict = is_tp_r(&m, 3).unwrap();
        match verdict.witness {
            Some(w) => {
                prop_assert!(!verdict.pass);
                let det = w.recompute_determinant().unwrap();
                prop_assert_eq!(&det, &w.determinant);
                prop_assert!(!Ring::is_nonneg(&det));
            }
            None => prop_assert!(verdict.pass),
        }
    }

    #[test]
    fn toeplitz_places_entries_on_diagonals(
        seq in prop::collection::vec(small_rational(), 1..8),
        n in 0usize..6,
    ) {
        let m = toeplitz(&seq, n);
        prop_assert_eq!(m.rows(), n + 1);
        for i in 0..=n {
            for j in 0..=n {
                let expect = if i >= j { seq.get(i - j).cloned().unwrap_or(rat(0)) } else { rat(0) };
                prop_assert_eq!(m.get(i, j), &expect);
            }
        }
    }

    #[test]
    fn binomial_powers_expand_with_falling_coefficients(k in -3i64..=3) {
        let series = Expr::parse(&format!("(1+t)^{k}"))
            .unwrap()
            .eval_rational(8, &BTreeMap::new())
            .unwrap();
        for n in 0..=8usize {
            let expect = Rational::from_integer(binomial(k, n as i64));
            prop_assert_eq!(series.coeff(n), &expect);
        }
    }
}
