//! The `verify` battery. Jobs run in parallel and are reported in job order.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use durfee_core::cfinite::{
    leading_asymptotic_rk, lcm_upto, quasipoly_fit, rk_eventual_period_mod, rk_sequence,
};
use durfee_core::durfee::{curly_fk_ratfn, dk_ratfn, fk_ratfn, fk_series_convolution, phi_poly};
use durfee_core::partitions::{count_ad_bruteforce, count_dk_bruteforce, count_rk_bruteforce};
use durfee_core::polyring::{poly_gcd, q_pochhammer, IntPolynomial, RationalFunction};
use durfee_core::qseries::{ad_ratfn_recursive, ad_series_dp, alpha_poly, check_alpha_structure};

/// Largest `d` for which coprimality with `(q;q)_d` is a hard check.
const GCD_HARD_LIMIT: usize = 12;
const BRUTE_N: usize = 30;
const SERIES_ORDER: usize = 40;
const EXTENSION_N: usize = 200;

pub struct Check {
    pub name: String,
    pub pass: bool,
    pub conjectural: bool,
}

pub struct Report {
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy)]
enum Job {
    Alpha(usize),
    Phi(usize),
    Pair(usize),
}

fn hard(name: String, pass: bool) -> Check {
    Check { name, pass, conjectural: false }
}

fn conjectural(name: String, pass: bool) -> Check {
    Check { name, pass, conjectural: true }
}

fn alpha_checks(d: usize) -> Vec<Check> {
    let r = check_alpha_structure(d);
    let mut out = vec![hard(format!("alpha_{d} degree, ends and value at 1"), r.hard_ok())];

    let dp = ad_series_dp(d, SERIES_ORDER);
    let rec = ad_ratfn_recursive(d).map(|f| f.expand(SERIES_ORDER));
    let closed = alpha_poly(d)
        .and_then(|a| RationalFunction::new(a, q_pochhammer(d)))
        .map(|f| f.expand(SERIES_ORDER));
    let agree = matches!((&rec, &closed), (Ok(x), Ok(y)) if *x == dp && *y == dp);
    out.push(hard(format!("A_{d}: DP, recursion and closed form agree to order {SERIES_ORDER}"), agree));

    if d <= 6 {
        let ok = (0..=15).all(|n| count_ad_bruteforce(d, n).is_ok_and(|b| dp.coeff(n) == &BigInt::from(b)));
        out.push(hard(format!("a_{d}(n) matches enumeration, n <= 15"), ok));
    }
    let gcd_name = format!("gcd(alpha_{d}, (q;q)_{d}) = 1");
    if d <= GCD_HARD_LIMIT {
        out.push(hard(gcd_name, r.reduced()));
    } else {
        out.push(conjectural(gcd_name, r.reduced()));
    }
    out.push(conjectural(
        format!("alpha_{d}(-1) = (-1)^floor(d/2)"),
        r.minus1_matches_conjecture,
    ));
    out
}

fn phi_checks(k: usize) -> Vec<Check> {
    let phi = phi_poly(k);
    let mut out = vec![hard(
        format!("phi_{k} degree, ends, value at 1, (1+q) for odd k"),
        phi.is_ok(),
    )];
    let f = fk_ratfn(k, false);
    out.push(hard(
        format!("F_{k} expansion equals convolution to order 30"),
        f.as_ref().is_ok_and(|f| f.expand(30) == fk_series_convolution(k, 30)),
    ));

    let series = curly_fk_ratfn(k, false).map(|f| f.expand(EXTENSION_N));
    if k <= 6 {
        let ok = series.as_ref().is_ok_and(|s| {
            (0..=BRUTE_N).all(|n| count_rk_bruteforce(k, n).is_ok_and(|b| s.coeff(n) == &BigInt::from(b)))
        });
        out.push(hard(format!("R_{k}(n) matches enumeration, n <= {BRUTE_N}"), ok));
    }
    if k <= 4 {
        let s = dk_ratfn(k).expand(BRUTE_N);
        let ok = (0..=BRUTE_N).all(|n| count_dk_bruteforce(k, n).is_ok_and(|b| s.coeff(n) == &BigInt::from(b)));
        out.push(hard(format!("D_{k}(n) matches enumeration, n <= {BRUTE_N}"), ok));
    }
    let ext = rk_sequence(k, EXTENSION_N);
    out.push(hard(
        format!("R_{k} recurrence extension equals series to n = {EXTENSION_N}"),
        matches!((&ext, &series), (Ok(e), Ok(s)) if e.as_slice() == s.coeffs()),
    ));

    if k <= 8 {
        let period = lcm_upto(k);
        let n0 = k * k + 1;
        let lead = leading_asymptotic_rk(k);
        let ok = rk_sequence(k, n0 + period * (k + 4))
            .and_then(|v| quasipoly_fit(&v, 0, period, k - 1, n0))
            .is_ok_and(|qp| (0..period).all(|nu| qp.coeffs_in_n(nu)[k - 1] == lead));
        out.push(hard(format!("R_{k} quasi-polynomial top coefficient is {lead}"), ok));
    }

    if let Ok(phi) = &phi {
        let at = phi.eval_i64(-1);
        let pattern = if k % 2 == 1 {
            at.is_zero()
        } else {
            at == BigInt::from(-2).pow(k as u32 / 2)
        };
        out.push(conjectural(format!("phi_{k}(-1) follows the (-2)^(k/2) / 0 pattern"), pattern));
    }
    if let Ok(f) = fk_ratfn(k, true) {
        let g = poly_gcd(f.num(), f.den());
        out.push(conjectural(format!("F_{k} reduced denominator is minimal"), g == IntPolynomial::one()));
    }
    out
}

fn pair_checks(k: usize) -> Vec<Check> {
    let a = rk_eventual_period_mod(k, 2).map(|r| r.period);
    let b = rk_eventual_period_mod(k + 1, 2).map(|r| r.period);
    let name = match (&a, &b) {
        (Ok(p), Ok(q)) => format!("R_{k} and R_{} share a mod-2 period ({p}, {q})", k + 1),
        _ => format!("R_{k} and R_{} share a mod-2 period", k + 1),
    };
    vec![conjectural(name, matches!((a, b), (Ok(p), Ok(q)) if p == q))]
}

pub fn run(k_max: usize, d_max: usize) -> Report {
    let jobs: Vec<Job> = (1..=d_max)
        .map(Job::Alpha)
        .chain((1..=k_max).map(Job::Phi))
        .chain((2..k_max).step_by(2).map(Job::Pair))
        .collect();
    let checks = jobs
        .par_iter()
        .map(|&job| match job {
            Job::Alpha(d) => alpha_checks(d),
            Job::Phi(k) => phi_checks(k),
            Job::Pair(k) => pair_checks(k),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report { checks }
}

impl Report {
    pub fn all_hard_pass(&self) -> bool {
        self.checks.iter().filter(|c| !c.conjectural).all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("hard checks\n");
        let line = |c: &Check| format!("  {}  {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name);
        for c in self.checks.iter().filter(|c| !c.conjectural) {
            s.push_str(&line(c));
        }
        s.push_str("conjectural (reported only)\n");
        for c in self.checks.iter().filter(|c| c.conjectural) {
            s.push_str(&line(c));
        }
        let failed = self.checks.iter().filter(|c| !c.conjectural && !c.pass).count();
        s.push_str(&format!("{failed} hard failure(s)\n"));
        s
    }

    pub fn to_json(&self) -> Value {
        let section = |conj: bool| -> Vec<Value> {
            self.checks
                .iter()
                .filter(|c| c.conjectural == conj)
                .map(|c| json!({ "name": c.name, "pass": c.pass }))
                .collect()
        };
        json!({
            "ok": self.all_hard_pass(),
            "hard": section(false),
            "conjectural": section(true),
        })
    }
}
