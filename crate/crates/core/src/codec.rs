//! Text encodings shared by the JSON schemas and the b-file exporter.
//!
//! Integers are written in canonical decimal: an optional `-`, no leading
//! zeros, no `+`, and never `-0`. Rationals are written `p/q` in lowest terms
//! with `q > 0`; integral values are still written with `/1`.
//!
//! A b-file is ASCII with one `n value` pair per line, each line terminated
//! by `\n`, indices strictly increasing by one, and no trailing blank line.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

fn is_canonical_digits(digits: &str) -> bool {
    !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
}

/// Parses a canonical decimal integer.
pub fn parse_decimal(s: &str) -> Result<BigInt> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    if !is_canonical_digits(digits) || (neg && digits == "0") {
        return Err(Error::Parse(format!("not a canonical decimal integer: {s:?}")));
    }
    let magnitude: BigInt = digits
        .parse()
        .map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))?;
    Ok(if neg { -magnitude } else { magnitude })
}

pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("rational must be written p/q: {s:?}")))?;
    let numer = parse_decimal(p)?;
    let denom = parse_decimal(q)?;
    if denom <= BigInt::zero() {
        return Err(Error::Parse(format!("denominator must be positive: {s:?}")));
    }
    let r = BigRational::new(numer.clone(), denom.clone());
    if r.numer() != &numer || r.denom() != &denom {
        return Err(Error::Parse(format!("rational not in lowest terms: {s:?}")));
    }
    Ok(r)
}

/// Renders `values[i]` as the line `offset + i values[i]`.
pub fn write_bfile(offset: usize, values: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        let _ = writeln!(out, "{} {}", offset + i, v);
    }
    out
}

/// Parses a b-file and returns the first index together with the values.
///
/// Comment lines starting with `#` are accepted, since published b-files
/// frequently carry a header; everything else must follow the strict format.
pub fn parse_bfile(text: &str) -> Result<(usize, Vec<BigInt>)> {
    if !text.is_ascii() {
        return Err(Error::Parse("b-file must be ASCII".into()));
    }
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(Error::Parse("b-file must end with a newline".into()));
    }
    let mut offset = None;
    let mut values = Vec::new();
    for (lineno, line) in text.split_terminator('\n').enumerate() {
        if line.starts_with('#') {
            continue;
        }
        let (idx, val) = line
            .split_once(' ')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `n value`", lineno + 1)))?;
        if !is_canonical_digits(idx) {
            return Err(Error::Parse(format!("line {}: bad index {idx:?}", lineno + 1)));
        }
        let idx: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: index overflow", lineno + 1)))?;
        let start = *offset.get_or_insert(idx);
        if idx.checked_sub(start) != Some(values.len()) {
            return Err(Error::Parse(format!(
                "line {}: index {idx} out of sequence",
                lineno + 1
            )));
        }
        values.push(parse_decimal(val)?);
    }
    Ok((offset.unwrap_or(0), values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_accepts_canonical_only() {
        assert_eq!(parse_decimal("0").unwrap(), BigInt::zero());
        assert_eq!(parse_decimal("-17").unwrap(), BigInt::from(-17));
        for bad in ["", "-", "-0", "+1", "01", " 1", "1_000", "1e3", "0x10"] {
            assert!(parse_decimal(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn rational_requires_lowest_terms() {
        assert_eq!(
            parse_rational("-1/8").unwrap(),
            BigRational::new((-1).into(), 8.into())
        );
        assert_eq!(parse_rational("3/1").unwrap(), BigRational::from_integer(3.into()));
        assert!(parse_rational("2/4").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("3").is_err());
    }

    #[test]
    fn bfile_layout() {
        let vals: Vec<BigInt> = [1, 3, -4].iter().map(|&v| BigInt::from(v)).collect();
        let text = write_bfile(5, &vals);
        assert_eq!(text, "5 1\n6 3\n7 -4\n");
        assert_eq!(parse_bfile(&text).unwrap(), (5, vals));
        assert_eq!(parse_bfile("").unwrap(), (0, vec![]));
    }

    #[test]
    fn bfile_rejects_malformed() {
        for bad in ["0 1", "0 1\n\n", "0 1\n2 3\n", "0  1\n", "0 1 \n", "a 1\n", "0 1\r\n"] {
            assert!(parse_bfile(bad).is_err(), "{bad:?}");
        }
        assert_eq!(parse_bfile("# A000000\n3 7\n").unwrap().0, 3);
    }
}
