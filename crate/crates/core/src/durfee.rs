//! Generating functions for partitions by Durfee triangle size `k`:
//! `F_k(q) = phi_k(q) / (q;q)_k` (normalised so that `F_k(0) = 1`) and the
//! shifted `q^{T_k} F_k(q) = sum R_k(n) q^n`, plus the classical Durfee square
//! series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::triangular;
use crate::polyring::{gaussian_binomial, q_pochhammer, IntPolynomial, PowerSeries, RationalFunction};
use crate::qseries::{ad_series_dp, alpha_poly};

fn one_plus_q() -> IntPolynomial {
    IntPolynomial::from_i64s(&[1, 1])
}

/// `phi_k(q) = sum_{d=0}^{k} [k choose d]_q q^d alpha_d(q) alpha_{k-d}(q)`.
///
/// Before returning, checks `phi(0) = 1`, degree `k^2`, leading coefficient
/// `(-1)^{k-1}`, `phi(1) = 2^k`, and `(1 + q) | phi` for odd `k`.
pub fn phi_poly(k: usize) -> Result<IntPolynomial> {
    if k == 0 {
        return Err(Error::Domain("phi_k needs k >= 1".into()));
    }
    let alphas = (0..=k).map(alpha_poly).collect::<Result<Vec<_>>>()?;
    let mut phi = IntPolynomial::zero();
    for d in 0..=k {
        let term = &(&gaussian_binomial(k, d) * &alphas[d]) * &alphas[k - d];
        phi = &phi + &term.shift(d);
    }
    let what = || format!("phi_{k}");
    if !phi.constant_term().is_one() {
        return Err(Error::structure(what(), "constant term is not 1"));
    }
    if phi.degree() != Some(k * k) {
        return Err(Error::structure(what(), format!("degree {:?}, expected {}", phi.degree(), k * k)));
    }
    let lead = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    if phi.leading_coeff() != lead {
        return Err(Error::structure(what(), "leading coefficient is not (-1)^(k-1)"));
    }
    if phi.eval_i64(1) != BigInt::one() << k {
        return Err(Error::structure(what(), "phi_k(1) != 2^k"));
    }
    if k % 2 == 1 && !phi.eval_i64(-1).is_zero() {
        return Err(Error::structure(what(), "odd k but (1 + q) does not divide phi_k"));
    }
    Ok(phi)
}

/// Everything attached to a single `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DurfeeGF {
    pub k: usize,
    pub phi: IntPolynomial,
    /// `q^{T_k} phi_k`
    pub full_num: IntPolynomial,
    /// `(q;q)_k`
    pub denom: IntPolynomial,
    /// `(q;q)_k / (1 + q)` for odd `k >= 3`, otherwise `(q;q)_k`.
    pub reduced_denom: IntPolynomial,
    pub t_k: usize,
}

impl DurfeeGF {
    pub fn compute(k: usize) -> Result<Self> {
        let phi = phi_poly(k)?;
        let denom = q_pochhammer(k);
        let reduced_denom = if k % 2 == 1 && k >= 3 {
            denom.exact_div(&one_plus_q())?
        } else {
            denom.clone()
        };
        let t_k = triangular(k);
        Ok(DurfeeGF {
            k,
            full_num: phi.shift(t_k),
            phi,
            denom,
            reduced_denom,
            t_k,
        })
    }

    /// `phi_k(-1)` against the observed pattern: `(-2)^{k/2}` for even `k`,
    /// `0` for odd `k`. The even case is conjectural, so only reported.
    pub fn minus1_matches_conjecture(&self) -> bool {
        let at = self.phi.eval_i64(-1);
        if self.k % 2 == 1 {
            at.is_zero()
        } else {
            at == BigInt::from(-2).pow(self.k as u32 / 2)
        }
    }
}

/// `F_k(q) = phi_k / (q;q)_k`; with `reduced` set and `k` odd `>= 3` both
/// sides are divided by `1 + q`.
pub fn fk_ratfn(k: usize, reduced: bool) -> Result<RationalFunction> {
    let mut num = phi_poly(k)?;
    let mut den = q_pochhammer(k);
    if reduced && k % 2 == 1 && k >= 3 {
        num = num.exact_div(&one_plus_q())?;
        den = den.exact_div(&one_plus_q())?;
    }
    RationalFunction::new(num, den)
}

/// `sum R_k(n) q^n = q^{T_k} F_k(q)`.
pub fn curly_fk_ratfn(k: usize, reduced: bool) -> Result<RationalFunction> {
    Ok(fk_ratfn(k, reduced)?.shift(triangular(k)))
}

/// `f_k(0..=order)` from `sum_{d=0}^{k} q^d A_d(q) A_{k-d}(q)` using only the
/// composition counts, independent of `phi_k`.
pub fn fk_series_convolution(k: usize, order: usize) -> PowerSeries {
    let series: Vec<PowerSeries> = (0..=k).map(|d| ad_series_dp(d, order)).collect();
    (0..=k).fold(PowerSeries::zero(order), |acc, d| {
        &acc + &(&series[d] * &series[k - d]).shift(d)
    })
}

/// `R_k(0..=order)` from the convolution route.
pub fn rk_series_convolution(k: usize, order: usize) -> PowerSeries {
    let t = triangular(k);
    if order < t {
        return PowerSeries::zero(order);
    }
    fk_series_convolution(k, order - t).prepend_zeros(t)
}

/// `q^{k^2} / ((q;q)_k)^2`, the Durfee square series.
pub fn dk_ratfn(k: usize) -> RationalFunction {
    let poch = q_pochhammer(k);
    RationalFunction::new(IntPolynomial::monomial(BigInt::one(), k * k), &poch * &poch)
        .expect("(q;q)_k^2 has constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{count_dk_bruteforce, count_rk_bruteforce};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn phi_small() {
        assert_eq!(phi_poly(1).unwrap(), p(&[1, 1]));
        assert_eq!(phi_poly(2).unwrap(), p(&[1, 2, 1, 1, -1]));
        assert!(matches!(phi_poly(0), Err(Error::Domain(_))));
    }

    #[test]
    fn phi_six() {
        let expected = p(&[
            1, 6, 15, 25, 34, 35, 31, 20, 0, -19, -39, -48, -50, -36, -19, 13, 30, 45, 42, 28, 11, -8, -21, -24,
            -15, -9, 2, 3, 5, 3, 2, 2, 0, 0, 0, 0, -1,
        ]);
        assert_eq!(phi_poly(6).unwrap(), expected);
    }

    #[test]
    fn fk_examples() {
        let f3 = fk_ratfn(3, true).unwrap();
        assert_eq!(f3.num(), &p(&[1, 2, 1, 2, -1, 0, -1, -1, 1]));
        // (1-q)^3 (1+q+q^2)
        assert_eq!(f3.den(), &p(&[1, -2, 1, -1, 2, -1]));

        let f1 = fk_ratfn(1, false).unwrap();
        assert_eq!(f1.num(), &p(&[1, 1]));
        assert_eq!(f1.den(), &p(&[1, -1]));
        // reduction only applies to odd k >= 3
        assert_eq!(fk_ratfn(1, true).unwrap(), f1);

        let f2 = fk_ratfn(2, true).unwrap();
        assert_eq!(f2.num(), &p(&[1, 2, 1, 1, -1]));
        assert_eq!(f2.den(), &q_pochhammer(2));
    }

    #[test]
    fn curly_examples() {
        let r3 = curly_fk_ratfn(3, false).unwrap().expand(11);
        assert_eq!(r3.coeff(6), &BigInt::from(1));
        assert_eq!(r3.coeff(11), &BigInt::from(32));
        assert_eq!(curly_fk_ratfn(5, false).unwrap().expand(25).coeff(25), &BigInt::from(736));
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(
            fk_series_convolution(2, 10),
            PowerSeries::from_i64s(&[1, 3, 5, 8, 9, 12, 13, 16, 17, 20, 21])
        );
        assert_eq!(fk_series_convolution(7, 10).coeff(10), &BigInt::from(3286));
        assert_eq!(fk_series_convolution(1, 4), PowerSeries::from_i64s(&[1, 2, 2, 2, 2]));
        assert_eq!(rk_series_convolution(1, 5), PowerSeries::from_i64s(&[0, 1, 2, 2, 2, 2]));
        assert_eq!(rk_series_convolution(3, 4), PowerSeries::zero(4));
    }

    #[test]
    fn ratfn_matches_convolution() {
        for k in 1..=7 {
            assert_eq!(fk_ratfn(k, false).unwrap().expand(30), fk_series_convolution(k, 30), "k={k}");
            assert_eq!(fk_ratfn(k, true).unwrap().expand(30), fk_series_convolution(k, 30), "k={k}");
        }
    }

    #[test]
    fn rk_matches_bruteforce() {
        for k in 1..=4 {
            let s = curly_fk_ratfn(k, false).unwrap().expand(22);
            for n in 0..=22 {
                assert_eq!(s.coeff(n), &BigInt::from(count_rk_bruteforce(k, n).unwrap()), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn dk_examples() {
        let d1 = dk_ratfn(1).expand(5);
        assert_eq!(d1.coeff(5), &BigInt::from(5));
        let d2 = dk_ratfn(2).expand(5);
        assert_eq!(d2.coeff(5), &BigInt::from(2));
        assert_eq!(d2.coeff(3), &BigInt::zero());
        for k in 1..=3 {
            let s = dk_ratfn(k).expand(20);
            for n in 0..=20 {
                assert_eq!(s.coeff(n), &BigInt::from(count_dk_bruteforce(k, n).unwrap()));
            }
        }
    }

    #[test]
    fn gf_bundle() {
        let g = DurfeeGF::compute(5).unwrap();
        assert_eq!(g.t_k, 15);
        assert_eq!(&g.reduced_denom * &one_plus_q(), g.denom);
        assert_eq!(g.full_num.degree(), Some(15 + 25));
        assert!(g.minus1_matches_conjecture());
        assert_eq!(DurfeeGF::compute(4).unwrap().reduced_denom, q_pochhammer(4));
        assert!(DurfeeGF::compute(4).unwrap().minus1_matches_conjecture());
    }
}
