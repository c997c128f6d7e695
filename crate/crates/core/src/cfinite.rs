//! Linear recurrences with constant coefficients read off rational generating
//! functions, quasi-polynomial fitting over residue classes, leading
//! asymptotic constants, and eventual periods modulo `M`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::codec::{format_rational, parse_rational};
use crate::durfee::curly_fk_ratfn;
use crate::error::{Error, Result};
use crate::polyring::RationalFunction;

/// `a(n + r) = c_{r-1} a(n + r - 1) + ... + c_0 a(n)` for all `n >= valid_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFiniteRecurrence {
    /// `(c_{r-1}, ..., c_1, c_0)`
    pub coeffs: Vec<BigInt>,
    pub valid_from: usize,
}

impl CFiniteRecurrence {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Number of leading terms a seed must supply.
    pub fn seed_len(&self) -> usize {
        self.valid_from + self.order()
    }
}

/// With `den = 1 - c_{r-1} q - ... - c_0 q^r`, the order is `deg(den)` and the
/// recurrence holds from `max(0, deg(num) - deg(den) + 1)`.
pub fn recurrence_from_ratfn(f: &RationalFunction) -> CFiniteRecurrence {
    let den = f.den().coeffs();
    let coeffs = den.iter().skip(1).map(|d| -d).collect();
    let den_deg = den.len() - 1;
    let valid_from = match f.num().degree() {
        Some(nd) if nd >= den_deg => nd - den_deg + 1,
        _ => 0,
    };
    CFiniteRecurrence { coeffs, valid_from }
}

/// `a(0..=n_max)`: the first `rec.seed_len()` values are copied from `seed`,
/// the rest are generated by the recurrence.
pub fn extend_sequence(rec: &CFiniteRecurrence, seed: &[BigInt], n_max: usize) -> Result<Vec<BigInt>> {
    let horizon = rec.seed_len();
    if seed.len() < horizon {
        return Err(Error::InsufficientSeed {
            given: seed.len(),
            needed: horizon,
        });
    }
    let mut out: Vec<BigInt> = seed.iter().take(horizon.min(n_max + 1)).cloned().collect();
    for n in out.len()..=n_max {
        let next = rec
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * &out[n - 1 - j])
            .sum();
        out.push(next);
    }
    Ok(out)
}

/// `R_k(0..=n_max)` by extending the recurrence of the reduced generating
/// function from a series-expanded seed.
pub fn rk_sequence(k: usize, n_max: usize) -> Result<Vec<BigInt>> {
    let f = curly_fk_ratfn(k, true)?;
    let rec = recurrence_from_ratfn(&f);
    let seed = f.expand(rec.seed_len().saturating_sub(1));
    extend_sequence(&rec, seed.coeffs(), n_max)
}

pub fn lcm_upto(k: usize) -> usize {
    (1..=k).fold(1, |acc, j| acc.lcm(&j))
}

/// Quasi-period used for `R_k`: `lcm(1..k)`, except `3` for `k = 3`.
pub fn rk_quasi_period(k: usize) -> usize {
    if k == 3 {
        3
    } else {
        lcm_upto(k)
    }
}

/// One polynomial per residue class `nu` modulo `period`, written in
/// `m = (n - nu) / period`, valid for `n >= valid_from`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuasiRepr", into = "QuasiRepr")]
pub struct QuasiPolynomial {
    pub period: usize,
    pub valid_from: usize,
    /// `polys[nu][j]` is the coefficient of `m^j`; all have the same length
    /// `degree + 1`.
    pub polys: Vec<Vec<BigRational>>,
}

impl QuasiPolynomial {
    pub fn degree(&self) -> usize {
        self.polys.first().map_or(0, |p| p.len().saturating_sub(1))
    }

    /// Value of the residue polynomial for `n`; only meaningful for
    /// `n >= valid_from`.
    pub fn eval(&self, n: usize) -> BigRational {
        let nu = n % self.period;
        let m = BigRational::from_integer(BigInt::from(n / self.period));
        self.polys[nu]
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &m + c)
    }

    /// Coefficients in `n` (ascending) of the polynomial for residue `nu`,
    /// obtained by substituting `m = (n - nu) / period`.
    pub fn coeffs_in_n(&self, nu: usize) -> Vec<BigRational> {
        let delta = BigRational::from_integer(BigInt::from(self.period));
        // (n - nu) / delta as a linear polynomial in n
        let lin = [
            -BigRational::from_integer(BigInt::from(nu)) / &delta,
            BigRational::one() / &delta,
        ];
        let len = self.polys[nu].len();
        let mut out = vec![BigRational::zero(); len];
        let mut power = vec![BigRational::one()];
        for c in &self.polys[nu] {
            for (i, p) in power.iter().enumerate() {
                out[i] += c * p;
            }
            power = mul_rat_poly(&power, &lin);
        }
        out
    }
}

fn mul_rat_poly(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients (ascending) of the unique polynomial of degree
/// `< xs.len()` through the points, by Lagrange's formula.
pub fn lagrange_interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut out = vec![BigRational::zero(); n];
    for i in 0..n {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in (0..n).filter(|&j| j != i) {
            basis = mul_rat_poly(&basis, &[-xs[j].clone(), BigRational::one()]);
            denom *= &xs[i] - &xs[j];
        }
        let scale = &ys[i] / denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += &scale * b;
        }
    }
    out
}

/// Extra samples per residue class that must agree with the fit.
pub const FIT_VERIFY_SAMPLES: usize = 3;

/// Fits one polynomial of degree `<= degree` per residue class modulo
/// `period`, using `values[i] = a(offset + i)` at indices `n >= valid_from`.
///
/// The first `degree + 1` samples of each class are interpolated exactly and
/// the next three must match, otherwise `FitMismatch` names the first bad
/// index.
pub fn quasipoly_fit(
    values: &[BigInt],
    offset: usize,
    period: usize,
    degree: usize,
    valid_from: usize,
) -> Result<QuasiPolynomial> {
    if period == 0 {
        return Err(Error::Domain("period must be positive".into()));
    }
    let needed = degree + 1 + FIT_VERIFY_SAMPLES;
    let start = valid_from.max(offset);
    let end = offset + values.len();
    let mut polys = Vec::with_capacity(period);
    for nu in 0..period {
        let first = start + (nu + period - start % period) % period;
        let samples: Vec<usize> = (first..end).step_by(period).take(needed).collect();
        if samples.len() < needed {
            return Err(Error::InsufficientData {
                residue: nu,
                given: samples.len(),
                needed,
            });
        }
        let to_m = |n: usize| BigRational::from_integer(BigInt::from(n / period));
        let value = |n: usize| BigRational::from_integer(values[n - offset].clone());
        let (fit_pts, check_pts) = samples.split_at(degree + 1);
        let xs: Vec<_> = fit_pts.iter().map(|&n| to_m(n)).collect();
        let ys: Vec<_> = fit_pts.iter().map(|&n| value(n)).collect();
        let coeffs = lagrange_interpolate(&xs, &ys);
        for &n in check_pts {
            let m = to_m(n);
            let at = coeffs
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * &m + c);
            if at != value(n) {
                return Err(Error::FitMismatch { n });
            }
        }
        polys.push(coeffs);
    }
    Ok(QuasiPolynomial {
        period,
        valid_from,
        polys,
    })
}

/// Quasi-polynomial for `R_k(n)`, `n > k^2`, of degree `k - 1`.
pub fn rk_quasipolynomial(k: usize) -> Result<QuasiPolynomial> {
    let period = rk_quasi_period(k);
    let degree = k.saturating_sub(1);
    let valid_from = k * k + 1;
    let n_max = valid_from + period * (degree + 1 + FIT_VERIFY_SAMPLES + 1);
    let values = rk_sequence(k, n_max)?;
    quasipoly_fit(&values, 0, period, degree, valid_from)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Coefficient of `n^{k-1}` in `R_k(n)`: `2^k / (k! (k-1)!)`.
pub fn leading_asymptotic_rk(k: usize) -> BigRational {
    assert!(k >= 1, "R_k asymptotics need k >= 1");
    BigRational::new(BigInt::one() << k, factorial(k) * factorial(k - 1))
}

/// Coefficient of `n^{2k-1}` in `D_k(n)`: `1 / ((k!)^2 (2k-1)!)`.
pub fn dk_leading_term(k: usize) -> BigRational {
    assert!(k >= 1, "D_k asymptotics need k >= 1");
    let kf = factorial(k);
    BigRational::new(BigInt::one(), &kf * &kf * factorial(2 * k - 1))
}

/// Coefficient of `n^{2k-2}` in `D_k(n)`: `-1 / (2 k! (k-2)! (2k-2)!)`.
pub fn dk_second_term(k: usize) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::Domain("second D_k term needs k >= 2".into()));
    }
    Ok(BigRational::new(
        -BigInt::one(),
        BigInt::from(2) * factorial(k) * factorial(k - 2) * factorial(2 * k - 2),
    ))
}

pub fn leading_asymptotic_dk(k: usize) -> Result<(BigRational, BigRational)> {
    let second = dk_second_term(k)?;
    Ok((dk_leading_term(k), second))
}

/// A detected eventual period and the window it was confirmed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub period: usize,
    pub modulus: u64,
    /// First index of the window.
    pub window_start: usize,
    /// One past the last index of the window.
    pub window_end: usize,
}

/// Smallest `p <= L/6` with `values[n] = values[n + p] (mod M)` for every `n`
/// in `[n_min, n_min + L - p)`, where `L = values.len() - n_min`.
///
/// The detection is empirical: a period is only confirmed on the window.
pub fn eventual_period_mod(values: &[BigInt], modulus: u64, n_min: usize) -> Result<PeriodReport> {
    if modulus < 2 {
        return Err(Error::Domain("modulus must be at least 2".into()));
    }
    let window = values.len().saturating_sub(n_min);
    let bound = window / 6;
    let m = BigInt::from(modulus);
    let residues: Vec<BigInt> = values[n_min.min(values.len())..].iter().map(|v| v.mod_floor(&m)).collect();
    for p in 1..=bound {
        if (0..window - p).all(|i| residues[i] == residues[i + p]) {
            return Ok(PeriodReport {
                period: p,
                modulus,
                window_start: n_min,
                window_end: n_min + window,
            });
        }
    }
    Err(Error::WindowTooSmall { bound, window })
}

/// Eventual period of `R_k mod M` past `n = k^2`, searching with windows of
/// six times a doubling bound, capped at `M * Q` with `Q` the quasi-period.
pub fn rk_eventual_period_mod(k: usize, modulus: u64) -> Result<PeriodReport> {
    let n_min = k * k + 1;
    let cap = modulus as usize * rk_quasi_period(k);
    let mut bound = 16.min(cap);
    loop {
        let values = rk_sequence(k, n_min + 6 * bound - 1)?;
        match eventual_period_mod(&values, modulus, n_min) {
            Err(Error::WindowTooSmall { .. }) if bound < cap => bound = (2 * bound).min(cap),
            other => return other,
        }
    }
}

/// Result of checking `a(n + shift) = a(n) (mod M)` over `n_min..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftReport {
    pub modulus: u64,
    pub shift: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Indices `n` where the congruence fails, in increasing order.
    pub counterexamples: Vec<usize>,
}

impl ShiftReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// `values` must cover indices up to `n_max + shift`.
pub fn shift_congruence(values: &[BigInt], modulus: u64, shift: usize, n_min: usize, n_max: usize) -> Result<ShiftReport> {
    if modulus == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    if values.len() <= n_max + shift {
        return Err(Error::InsufficientData {
            residue: 0,
            given: values.len(),
            needed: n_max + shift + 1,
        });
    }
    let m = BigInt::from(modulus);
    let counterexamples = (n_min..=n_max)
        .filter(|&n| !(&values[n + shift] - &values[n]).mod_floor(&m).is_zero())
        .collect();
    Ok(ShiftReport {
        modulus,
        shift,
        n_min,
        n_max,
        counterexamples,
    })
}

/// Checks `R_k(n + M Q) = R_k(n) (mod M)` for `n` in `n_min..=n_max`.
pub fn congruence_shift_check(k: usize, modulus: u64, quasi_period: usize, n_min: usize, n_max: usize) -> Result<ShiftReport> {
    let shift = modulus as usize * quasi_period;
    let values = rk_sequence(k, n_max + shift)?;
    shift_congruence(&values, modulus, shift, n_min, n_max)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResidueRepr {
    nu: usize,
    coeffs_in_m: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuasiRepr {
    period: usize,
    valid_from: usize,
    residues: Vec<ResidueRepr>,
}

impl From<QuasiPolynomial> for QuasiRepr {
    fn from(q: QuasiPolynomial) -> Self {
        QuasiRepr {
            period: q.period,
            valid_from: q.valid_from,
            residues: q
                .polys
                .iter()
                .enumerate()
                .map(|(nu, p)| ResidueRepr {
                    nu,
                    coeffs_in_m: p.iter().map(format_rational).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<QuasiRepr> for QuasiPolynomial {
    type Error = Error;
    fn try_from(r: QuasiRepr) -> Result<Self> {
        if r.period == 0 || r.residues.len() != r.period {
            return Err(Error::Parse("need exactly one residue per class".into()));
        }
        let width = r.residues[0].coeffs_in_m.len();
        if width == 0 {
            return Err(Error::Parse("residue polynomial has no coefficients".into()));
        }
        let mut polys = Vec::with_capacity(r.period);
        for (i, res) in r.residues.iter().enumerate() {
            if res.nu != i {
                return Err(Error::Parse(format!("residue {i} is labelled {}", res.nu)));
            }
            if res.coeffs_in_m.len() != width {
                return Err(Error::Parse("residue polynomials differ in length".into()));
            }
            polys.push(
                res.coeffs_in_m
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(QuasiPolynomial {
            period: r.period,
            valid_from: r.valid_from,
            polys,
        })
    }
}

/// Human readable residue polynomial in `m`, e.g. `6m^2 - 15m + 7`.
pub fn format_poly_in_m(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (j, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag_str = if mag.denom().is_one() {
            mag.numer().to_string()
        } else {
            format!("({}/{})", mag.numer(), mag.denom())
        };
        match j {
            0 => out.push_str(&mag_str),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag_str);
                }
                out.push('m');
                if j > 1 {
                    out.push_str(&format!("^{j}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
