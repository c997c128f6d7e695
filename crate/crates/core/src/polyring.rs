//! Dense univariate polynomials over ℤ in the formal variable `q`, rational
//! functions with unit constant term in the denominator, and truncated power
//! series.
//!
//! Everything here is exact. Coefficients are arbitrary precision because the
//! numerators of interest overflow 64 bits for moderately sized parameters.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::codec::parse_decimal;
use crate::error::{Error, Result};

/// A polynomial `c0 + c1 q + c2 q^2 + ...` stored as an ascending coefficient
/// vector without trailing zeros. The zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c q^e`
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `1 - q^r` (for `r = 0` this is the zero polynomial).
    pub fn one_minus_q_pow(r: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); r + 1];
        coeffs[0] += 1;
        coeffs[r] -= 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands in for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Drops every coefficient above `q^max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::new(self.coeffs.iter().take(max_degree + 1).cloned().collect())
    }

    /// Returns `c` with `self = divisor * c`, or `NonDivisible`.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (quot, rem) = self.div_rem_exact_lead(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonDivisible)
        }
    }

    /// Long division over ℤ; fails if some leading quotient term is not an
    /// integer.
    fn div_rem_exact_lead(&self, divisor: &IntPolynomial) -> Result<(Self, Self)> {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "division by the zero polynomial");
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonDivisible);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the sign is left alone.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Sign normalisation used for gcds: positive constant term when it is
    /// nonzero, otherwise positive leading coefficient.
    fn sign_normalized(self) -> Self {
        let pivot = match self.coeffs.first() {
            Some(c) if !c.is_zero() => c.clone(),
            _ => self.leading_coeff(),
        };
        if pivot.is_negative() {
            -self
        } else {
            self
        }
    }

    /// `self * lc(g)^k - (...) * g` with `deg < deg g`; a pseudo-remainder.
    fn pseudo_rem(&self, g: &IntPolynomial) -> IntPolynomial {
        let glen = g.coeffs.len();
        let glead = g.coeffs.last().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() >= glen {
            let rlead = r.last().unwrap().clone();
            let off = r.len() - glen;
            for c in r.iter_mut() {
                *c *= glead;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[off + j] -= &rlead * gc;
            }
            // Top coefficient is now zero by construction.
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPolynomial { coeffs: r }.primitive_part()
    }
}

/// Primitive gcd via the primitive pseudo-remainder sequence, normalised to a
/// positive constant term (or positive leading coefficient if `q` divides it).
///
/// `gcd(0, 0)` is the zero polynomial.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.primitive_part().sign_normalized();
    }
    if b.is_zero() {
        return a.primitive_part().sign_normalized();
    }
    let (mut f, mut g) = if a.coeffs.len() >= b.coeffs.len() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    loop {
        if g.degree() == Some(0) {
            return IntPolynomial::one();
        }
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            return g.sign_normalized();
        }
        f = g;
        g = r;
    }
}

/// `(q;q)_d = (1-q)(1-q^2)...(1-q^d)`, of degree `d(d+1)/2`.
pub fn q_pochhammer(d: usize) -> IntPolynomial {
    (1..=d).fold(IntPolynomial::one(), |acc, r| {
        &acc * &IntPolynomial::one_minus_q_pow(r)
    })
}

/// Gaussian binomial `[k choose d]_q = (q;q)_k / ((q;q)_d (q;q)_{k-d})`.
///
/// Returns the zero polynomial when `d > k`.
pub fn gaussian_binomial(k: usize, d: usize) -> IntPolynomial {
    if d > k {
        return IntPolynomial::zero();
    }
    let den = &q_pochhammer(d) * &q_pochhammer(k - d);
    q_pochhammer(k)
        .exact_div(&den)
        .expect("q-binomial quotient of q-Pochhammer symbols is a polynomial")
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

fn mul_coeffs(a: &[BigInt], b: &[BigInt], max_len: usize) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = (a.len() + b.len() - 1).min(max_len);
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(mul_coeffs(&self.coeffs, &rhs.coeffs, usize::MAX))
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for IntPolynomial {
    /// Human readable form, e.g. `1 + 2q - q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyRepr {
    var: String,
    coeffs: Vec<String>,
}

impl From<IntPolynomial> for PolyRepr {
    fn from(p: IntPolynomial) -> Self {
        PolyRepr {
            var: "q".to_string(),
            coeffs: p.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<PolyRepr> for IntPolynomial {
    type Error = Error;
    fn try_from(r: PolyRepr) -> Result<Self> {
        if r.var != "q" {
            return Err(Error::Parse(format!("unsupported variable {:?}", r.var)));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_decimal(s))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(Error::Parse("trailing zero coefficient".into()));
        }
        Ok(IntPolynomial { coeffs })
    }
}

/// `num / den` with `den(0) = 1`. Not reduced to lowest terms unless
/// [`RationalFunction::reduce`] is called.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RatRepr", into = "RatRepr")]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    /// Accepts a denominator with constant term `1`, or `-1` in which case both
    /// sides are negated.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        let c0 = den.constant_term();
        if c0.is_one() {
            Ok(RationalFunction { num, den })
        } else if (-&c0).is_one() {
            Ok(RationalFunction {
                num: -num,
                den: -den,
            })
        } else {
            Err(Error::InvalidDenominator)
        }
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn into_parts(self) -> (IntPolynomial, IntPolynomial) {
        (self.num, self.den)
    }

    /// Divides numerator and denominator by their gcd.
    pub fn reduce(&self) -> Self {
        let g = poly_gcd(&self.num, &self.den);
        if g.is_zero() || g.degree() == Some(0) {
            return self.clone();
        }
        let num = self.num.exact_div(&g).expect("gcd divides numerator");
        let den = self.den.exact_div(&g).expect("gcd divides denominator");
        RationalFunction::new(num, den).expect("gcd has unit constant term")
    }

    /// Multiplies the numerator by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        RationalFunction {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
    }

    /// Power series coefficients through `q^order` by exact long division.
    pub fn expand(&self, order: usize) -> PowerSeries {
        let len = order + 1;
        let den = &self.den.coeffs;
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for n in 0..len {
            let mut c = self.num.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    c -= d * &out[n - i];
                }
            }
            out.push(c);
        }
        PowerSeries { coeffs: out }
    }
}

pub fn series_expand(f: &RationalFunction, order: usize) -> PowerSeries {
    f.expand(order)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatRepr {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl From<RationalFunction> for RatRepr {
    fn from(r: RationalFunction) -> Self {
        RatRepr {
            num: r.num,
            den: r.den,
        }
    }
}

impl TryFrom<RatRepr> for RationalFunction {
    type Error = Error;
    fn try_from(r: RatRepr) -> Result<Self> {
        if !r.den.constant_term().is_one() {
            return Err(Error::InvalidDenominator);
        }
        Ok(RationalFunction {
            num: r.num,
            den: r.den,
        })
    }
}

/// The first `order + 1` coefficients of a formal power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Panics on an empty vector: a series always stores at least `a(0)`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs at least one term");
        PowerSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The series of `p`, padded or truncated to `order`.
    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Multiplies by `q^e`, keeping the order.
    pub fn shift(&self, e: usize) -> Self {
        let len = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); e.min(len)];
        coeffs.extend(self.coeffs.iter().take(len.saturating_sub(e)).cloned());
        PowerSeries { coeffs }
    }

    /// Multiplies by `q^e` and raises the order by `e`.
    pub fn prepend_zeros(&self, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { coeffs }
    }

    /// The series as a polynomial (a truncation).
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        PowerSeries {
            coeffs: (0..len).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        PowerSeries {
            coeffs: mul_coeffs(&self.coeffs, &rhs.coeffs, len),
        }
    }
}

impl Mul<&IntPolynomial> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &IntPolynomial) -> PowerSeries {
        let len = self.coeffs.len();
        let mut coeffs = mul_coeffs(&self.coeffs, &rhs.coeffs, len);
        coeffs.resize(len, BigInt::zero());
        PowerSeries { coeffs }
    }
}
