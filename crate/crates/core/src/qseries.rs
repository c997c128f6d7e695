//! The series `A_d(q) = sum a_d(n) q^n` counting weak compositions
//! `(k_1, ..., k_d)` of `n` with `k_j <= k_{j-1} + 1`, and its numerator
//! `alpha_d(q) = A_d(q) (q;q)_d`.
//!
//! Three independent routes are provided: a dynamic programme for the
//! coefficients, a rational-function recursion on the diagonal
//! specialisation `B_{e,m}(q) = A_e(q, ..., q, q^m)`, and the truncated product
//! of the series with `(q;q)_d`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::triangular;
use crate::polyring::{poly_gcd, q_pochhammer, IntPolynomial, PowerSeries, RationalFunction};

/// Coefficients `a_d(0..=order)`. For `d = 0` this is `1 + 0q + ...`.
///
/// The state after placing `j` parts is a table `count[v][s]` of prefixes with
/// last part `v` and sum `s`. Appending a part `w` requires `w <= v + 1`, so
/// the new table is a suffix sum over `v >= w - 1`; each step costs
/// `O(order^2)`.
pub fn ad_series_dp(d: usize, order: usize) -> PowerSeries {
    let len = order + 1;
    if d == 0 {
        let mut coeffs = vec![BigInt::zero(); len];
        coeffs[0] = BigInt::one();
        return PowerSeries::new(coeffs);
    }
    // count[v][s], v <= s <= order
    let mut count: Vec<Vec<BigInt>> = (0..len)
        .map(|v| {
            let mut row = vec![BigInt::zero(); len];
            row[v] = BigInt::one();
            row
        })
        .collect();
    for _ in 1..d {
        // suffix[v][s] = sum_{u >= v} count[u][s]
        let mut suffix = vec![vec![BigInt::zero(); len]; len + 1];
        for v in (0..len).rev() {
            let (lo, hi) = suffix.split_at_mut(v + 1);
            for s in 0..len {
                lo[v][s] = &hi[0][s] + &count[v][s];
            }
        }
        let mut next = vec![vec![BigInt::zero(); len]; len];
        for (w, row) in next.iter_mut().enumerate() {
            let from = w.saturating_sub(1);
            row[w..len].clone_from_slice(&suffix[from][..len - w]);
        }
        count = next;
    }
    let coeffs = (0..len)
        .map(|s| count.iter().map(|row| &row[s]).sum())
        .collect();
    PowerSeries::new(coeffs)
}

/// Rational function whose denominator is kept as a product of factors
/// `(1 - q^r)`, stored as exponent -> multiplicity.
#[derive(Clone, Debug)]
struct FactoredFraction {
    num: IntPolynomial,
    den: BTreeMap<usize, usize>,
}

impl FactoredFraction {
    fn geometric(r: usize) -> Self {
        FactoredFraction {
            num: IntPolynomial::one(),
            den: BTreeMap::from([(r, 1)]),
        }
    }

    /// Numerator rewritten over the denominator `target`, which must be a
    /// multiple of `self.den` factor by factor.
    fn num_over(&self, target: &BTreeMap<usize, usize>) -> IntPolynomial {
        target.iter().fold(self.num.clone(), |acc, (&r, &mult)| {
            let have = self.den.get(&r).copied().unwrap_or(0);
            (have..mult).fold(acc, |acc, _| &acc * &IntPolynomial::one_minus_q_pow(r))
        })
    }

    fn expanded_den(&self) -> IntPolynomial {
        self.den.iter().fold(IntPolynomial::one(), |acc, (&r, &mult)| {
            (0..mult).fold(acc, |acc, _| &acc * &IntPolynomial::one_minus_q_pow(r))
        })
    }

    fn into_rational(self) -> RationalFunction {
        let den = self.expanded_den();
        RationalFunction::new(self.num, den).expect("product of (1 - q^r) has constant term 1")
    }
}

/// `(a - q^shift b) / (1 - q^m)`, where the division is required to be exact
/// on the numerator over the common denominator.
fn combine_step(a: &FactoredFraction, b: &FactoredFraction, shift: usize, m: usize) -> Result<FactoredFraction> {
    let mut common = a.den.clone();
    for (&r, &mult) in &b.den {
        let e = common.entry(r).or_insert(0);
        *e = (*e).max(mult);
    }
    let num = &a.num_over(&common) - &b.num_over(&common).shift(shift);
    let num = num.exact_div(&IntPolynomial::one_minus_q_pow(m))?;
    Ok(FactoredFraction { num, den: common })
}

/// `A_d(q)` via `B_{1,m} = 1/(1 - q^m)` and
/// `B_{e,m} = (B_{e-1,1} - q^{2m} B_{e-1,m+1}) / (1 - q^m)`, returning `B_{d,1}`.
///
/// The numerator is divided by `1 - q^m` after combining the two terms; a
/// remainder is reported as `NonDivisible`. For `d = 0` the result is `1`.
pub fn ad_ratfn_recursive(d: usize) -> Result<RationalFunction> {
    if d == 0 {
        return Ok(RationalFunction::from_polynomial(IntPolynomial::one()));
    }
    // level[m - 1] = B_{e,m} for m = 1..=d-e+1
    let mut level: Vec<FactoredFraction> = (1..=d).map(FactoredFraction::geometric).collect();
    for e in 2..=d {
        let next = (1..=d - e + 1)
            .map(|m| combine_step(&level[0], &level[m], 2 * m, m))
            .collect::<Result<Vec<_>>>()?;
        level = next;
    }
    Ok(level.swap_remove(0).into_rational())
}

/// Outcome of the series-times-Pochhammer construction before any
/// structural checks.
#[derive(Clone, Debug)]
struct AlphaCandidate {
    poly: IntPolynomial,
    tail_zero: bool,
}

fn alpha_candidate(d: usize) -> AlphaCandidate {
    if d == 0 {
        return AlphaCandidate {
            poly: IntPolynomial::one(),
            tail_zero: true,
        };
    }
    let deg = (d - 1) * d;
    let guard = triangular(d) + 8;
    let order = deg + triangular(d) + guard;
    let product = &ad_series_dp(d, order) * &q_pochhammer(d);
    let tail_zero = product.coeffs()[deg + 1..].iter().all(Zero::is_zero);
    AlphaCandidate {
        poly: product.to_polynomial().truncate(deg),
        tail_zero,
    }
}

fn alpha_cache() -> &'static RwLock<HashMap<usize, IntPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn sign_pow(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `alpha_d(q)` with `A_d(q) = alpha_d(q) / (q;q)_d`.
///
/// Computed from the series of `A_d` times `(q;q)_d`; the coefficients above
/// degree `(d-1)d` are required to vanish over a window of width
/// `2 T_d + 8`, and degree, constant term and leading coefficient are checked.
/// Results are memoised per `d`.
pub fn alpha_poly(d: usize) -> Result<IntPolynomial> {
    if let Some(p) = alpha_cache().read().unwrap().get(&d) {
        return Ok(p.clone());
    }
    let AlphaCandidate { poly, tail_zero } = alpha_candidate(d);
    let what = format!("alpha_{d}");
    if !tail_zero {
        return Err(Error::structure(what, "series times (q;q)_d is not a polynomial of degree (d-1)d"));
    }
    if d > 0 {
        let deg = (d - 1) * d;
        if poly.degree() != Some(deg) {
            return Err(Error::structure(what, format!("degree {:?}, expected {deg}", poly.degree())));
        }
        if poly.leading_coeff() != sign_pow(d - 1) {
            return Err(Error::structure(what, "leading coefficient is not (-1)^(d-1)"));
        }
    }
    if !poly.constant_term().is_one() {
        return Err(Error::structure(what, "constant term is not 1"));
    }
    alpha_cache().write().unwrap().entry(d).or_insert_with(|| poly.clone());
    Ok(poly)
}

/// `A_d` bundled as numerator, rational function and a series prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdResult {
    pub d: usize,
    pub alpha: IntPolynomial,
    pub ratfn: RationalFunction,
    pub series_prefix: PowerSeries,
}

impl AdResult {
    pub fn compute(d: usize, order: usize) -> Result<Self> {
        let alpha = alpha_poly(d)?;
        let ratfn = RationalFunction::new(alpha.clone(), q_pochhammer(d))?;
        Ok(AdResult {
            d,
            alpha,
            ratfn,
            series_prefix: ad_series_dp(d, order),
        })
    }
}

/// Structure report for `alpha_d`. Hard properties are the tail window,
/// degree, constant term, leading coefficient and `alpha_d(1) = 1`; the value
/// at `-1` and the gcd with `(q;q)_d` are reported only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaReport {
    pub d: usize,
    pub alpha: IntPolynomial,
    pub tail_zero_ok: bool,
    pub degree_ok: bool,
    pub constant_term_ok: bool,
    pub leading_coeff_ok: bool,
    pub value_at_1: BigInt,
    pub value_at_minus1: BigInt,
    /// Whether `alpha_d(-1) = (-1)^floor(d/2)`; conjectural.
    pub minus1_matches_conjecture: bool,
    pub gcd_with_pochhammer: IntPolynomial,
}

impl AlphaReport {
    /// All hard checks, including `alpha_d(1) = 1`.
    pub fn hard_ok(&self) -> bool {
        self.tail_zero_ok
            && self.degree_ok
            && self.constant_term_ok
            && self.leading_coeff_ok
            && self.value_at_1.is_one()
    }

    pub fn reduced(&self) -> bool {
        self.gcd_with_pochhammer == IntPolynomial::one()
    }
}

pub fn check_alpha_structure(d: usize) -> AlphaReport {
    let AlphaCandidate { poly, tail_zero } = alpha_candidate(d);
    let deg = d.saturating_sub(1) * d;
    let value_at_minus1 = poly.eval_i64(-1);
    AlphaReport {
        d,
        tail_zero_ok: tail_zero,
        degree_ok: poly.degree() == Some(deg),
        constant_term_ok: poly.constant_term().is_one(),
        leading_coeff_ok: poly.leading_coeff() == sign_pow(d.saturating_sub(1)),
        value_at_1: poly.eval_i64(1),
        minus1_matches_conjecture: value_at_minus1 == sign_pow(d / 2),
        value_at_minus1,
        gcd_with_pochhammer: poly_gcd(&poly, &q_pochhammer(d)),
        alpha: poly,
    }
}
