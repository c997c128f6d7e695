use num_bigint::BigInt;
use num_rational::BigRational;

use durfee_core::cfinite::{eventual_period_mod, leading_asymptotic_rk, lcm_upto, quasipoly_fit, rk_sequence};
use durfee_core::durfee::{curly_fk_ratfn, dk_ratfn, fk_ratfn, fk_series_convolution, DurfeeGF};
use durfee_core::partitions::{count_dk_bruteforce, count_pd_bruteforce, enumerate_partitions};
use durfee_core::polyring::{gaussian_binomial, q_pochhammer, IntPolynomial, RationalFunction};
use durfee_core::qseries::check_alpha_structure;

#[test]
fn convolution_matches_expansion_up_to_ten() {
    for k in 1..=10 {
        assert_eq!(fk_ratfn(k, false).unwrap().expand(30), fk_series_convolution(k, 30), "k={k}");
    }
}

#[test]
fn rk_columns_sum_to_partition_numbers() {
    let order = 24;
    let series: Vec<_> = (1..=6).map(|k| curly_fk_ratfn(k, false).unwrap().expand(order)).collect();
    for n in 1..=order {
        let total: BigInt = series.iter().map(|s| s.coeff(n)).sum();
        let p = enumerate_partitions(n).unwrap().count();
        assert_eq!(total, BigInt::from(p), "n={n}");
    }
}

#[test]
fn dk_matches_bruteforce_from_k_squared() {
    for k in 1..=4 {
        let s = dk_ratfn(k).expand(30);
        for n in k * k..=30 {
            assert_eq!(s.coeff(n), &BigInt::from(count_dk_bruteforce(k, n).unwrap()), "k={k} n={n}");
        }
    }
}

#[test]
fn inverse_pochhammer_counts_partitions_into_at_most_d_parts() {
    for d in 1..=5 {
        let s = RationalFunction::new(IntPolynomial::one(), q_pochhammer(d)).unwrap().expand(20);
        for n in 0..=20 {
            assert_eq!(s.coeff(n), &BigInt::from(count_pd_bruteforce(d, n).unwrap()), "d={d} n={n}");
        }
    }
}

#[test]
fn gaussian_binomials_symmetric_and_reduce_to_binomials() {
    for k in 0..=12usize {
        let mut binom = BigInt::from(1);
        for d in 0..=k {
            let g = gaussian_binomial(k, d);
            assert_eq!(g, gaussian_binomial(k, k - d));
            assert_eq!(g.eval_i64(1), binom, "k={k} d={d}");
            binom = binom * (k - d) / (d + 1);
        }
    }
}

#[test]
fn phi_at_minus_one_pattern_is_observed() {
    for k in 1..=12 {
        assert!(DurfeeGF::compute(k).unwrap().minus1_matches_conjecture(), "k={k}");
    }
    for d in 1..=12 {
        assert!(check_alpha_structure(d).minus1_matches_conjecture, "d={d}");
    }
}

#[test]
fn quasipolynomials_reproduce_extended_sequence() {
    for k in 1..=6 {
        let period = lcm_upto(k);
        let n0 = k * k + 1;
        let n_max = n0 + period * (k + 4);
        let values = rk_sequence(k, n_max).unwrap();
        let qp = quasipoly_fit(&values, 0, period, k - 1, n0).unwrap();
        for n in n0..=n0 + 4 * period {
            assert_eq!(qp.eval(n), BigRational::from_integer(values[n].clone()), "k={k} n={n}");
        }
        let lead = leading_asymptotic_rk(k);
        assert!((0..period).all(|nu| qp.coeffs_in_n(nu)[k - 1] == lead), "k={k}");
    }
}

#[test]
fn paired_mod_two_periods_agree() {
    for k in [2, 4, 6, 8] {
        let n_min = (k + 1) * (k + 1) + 1;
        let a = rk_sequence(k, n_min + 6 * 64).unwrap();
        let b = rk_sequence(k + 1, n_min + 6 * 64).unwrap();
        let pa = eventual_period_mod(&a, 2, n_min).unwrap().period;
        let pb = eventual_period_mod(&b, 2, n_min).unwrap().period;
        assert_eq!(pa, pb, "k={k}");
    }
}
