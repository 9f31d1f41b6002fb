//! Exact evaluation of the edge-density bounds.
//!
//! Every certified value is a [`BigRational`]. The one floating-point
//! quantity, [`runtime_log_estimate`], is an order-of-magnitude estimate.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::dumbbell::required_count_closed_form;
use crate::BoundsError;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn check_cl(c: i64, l: i64) -> Result<(), BoundsError> {
    if c < 6 || c % 2 != 0 {
        return Err(BoundsError::InvalidParameters(format!("c must be even and at least 6, got {c}")));
    }
    if l < -1 {
        return Err(BoundsError::InvalidParameters(format!("l must be at least -1, got {l}")));
    }
    Ok(())
}

/// `⌊l/2⌋` for `l ≥ 0`.
fn half(l: i64) -> i64 {
    l.div_euclid(2)
}

/// Density bound τ(c, l) certified by excluding all required dumbbells.
pub fn tau(c: i64, l: i64) -> Result<BigRational, BoundsError> {
    check_cl(c, l)?;
    if l == -1 {
        return Ok(frac(47 * c * c + 116 * c + 80, 35 * c * c + 68 * c + 32));
    }
    let r = half(l);
    let num = 2 * c * c * r + 4 * c * r * r + 22 * c * r + 7 * c * c + 22 * c + 8 * r * r + 24 * r + 16;
    let den = 2 * c * c * r * r + 14 * c * c * r + 4 * c * r * r + 16 * c * r + 24 * c * c + 12 * c;
    Ok(BigRational::one() + frac(num, den))
}

/// Slope and intercept `(k1, k2)` of the bipartite bound `m ≤ k1·n − k2`.
pub fn bipartite_coefficients(c: i64, l: i64) -> Result<(BigRational, BigRational), BoundsError> {
    check_cl(c, l)?;
    if l == -1 {
        return Ok((frac(6 * c + 12, 5 * c + 4), frac(12 * c + 24, 5 * c + 4)));
    }
    let r = half(l);
    Ok((frac(2 * c * r + 4 * r + 7 * c + 8, 2 * c * r + 6 * c), frac(2 * c + 4, c)))
}

/// Edge bound for bipartite thrackles on `n` vertices.
pub fn bipartite_edge_bound(c: i64, l: i64, n: u64) -> Result<BigRational, BoundsError> {
    if n < 3 {
        return Err(BoundsError::InvalidParameters(format!("n must be at least 3, got {n}")));
    }
    let (k1, k2) = bipartite_coefficients(c, l)?;
    Ok(k1 * q(n as i64) - k2)
}

/// Coefficient of `|C|` in the bound that grows with the odd cycle.
fn cycle_slope(c: i64, l: i64) -> BigRational {
    if l == -1 {
        frac(c - 4, 5 * c + 4)
    } else {
        let r = half(l);
        frac(c - 4, 2 * c * r + 6 * c)
    }
}

/// Bound growing with the shortest odd cycle length: `k1·n + s·|C|`.
pub fn case_b_increasing(c: i64, l: i64, n: &BigRational, cycle_len: &BigRational) -> Result<BigRational, BoundsError> {
    let (k1, _) = bipartite_coefficients(c, l)?;
    Ok(k1 * n + cycle_slope(c, l) * cycle_len)
}

/// Bound shrinking with the shortest odd cycle length: `k1·(n − |C|) + n`.
pub fn case_b_decreasing(c: i64, l: i64, n: &BigRational, cycle_len: &BigRational) -> Result<BigRational, BoundsError> {
    let (k1, _) = bipartite_coefficients(c, l)?;
    Ok(k1 * (n - cycle_len) + n)
}

/// Fraction of `n` at which the two odd-cycle bounds coincide.
pub fn critical_cycle_fraction(c: i64, l: i64) -> Result<BigRational, BoundsError> {
    check_cl(c, l)?;
    if l == -1 {
        return Ok(frac(5 * c + 4, 7 * c + 8));
    }
    let r = half(l);
    Ok(frac(c * r + 3 * c, c * r + 2 * r + 4 * c + 2))
}

/// The smaller of the two odd-cycle bounds for a shortest odd cycle of
/// length `cycle_len`.
pub fn case_b_bound(c: i64, l: i64, n: u64, cycle_len: u64) -> Result<BigRational, BoundsError> {
    if cycle_len < 3 || cycle_len > n {
        return Err(BoundsError::InvalidParameters(format!(
            "cycle length must lie in 3..={n}, got {cycle_len}"
        )));
    }
    let (n, cl) = (q(n as i64), q(cycle_len as i64));
    let a = case_b_increasing(c, l, &n, &cl)?;
    let b = case_b_decreasing(c, l, &n, &cl)?;
    Ok(if a < b { a } else { b })
}

/// Coefficient of `n` in the Turán-type bound for plane graphs with no cycle
/// shorter than `c1` and with the constraint on `c2` cycles; `l` selects the
/// distance-restricted variant.
pub fn turan_bound(c1: i64, c2: i64, l: Option<i64>) -> Result<BigRational, BoundsError> {
    if c1 < 3 || c2 < c1 {
        return Err(BoundsError::InvalidParameters(format!("need 3 <= c1 <= c2, got c1={c1}, c2={c2}")));
    }
    match l {
        None => Ok(frac(c1 * c2 + c1, c1 * c2 - c2 - 1)),
        Some(l) if l < 0 => Err(BoundsError::InvalidParameters(format!("l must be non-negative, got {l}"))),
        Some(l) => {
            let r = half(l);
            Ok(frac(
                c1 * c2 + 2 * r * c2 + 2 * r + c2 + 1,
                2 * r * c2 - 2 * r + c1 * c2 - c1,
            ))
        }
    }
}

/// Natural log of `(lc² + c³)·((2c+l−2)!)^(2c+l)·(2c+l)²`.
pub fn runtime_log_estimate(c: i64, l: i64) -> f64 {
    let (cf, lf) = (c as f64, l as f64);
    let k = 2.0 * cf + lf;
    libm::log(lf * cf * cf + cf * cf * cf) + k * libm::lgamma(k - 1.0) + 2.0 * libm::log(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonPlan {
    pub c: i64,
    pub l: i64,
    pub tau: BigRational,
    /// Number of dumbbells the campaign for `(c, l)` must exclude.
    pub dumbbells: i128,
}

/// Smallest campaign `(c, l)` with `τ(c, l) ≤ 1 + eps`: fewest dumbbells,
/// then smallest `c`. Only `l = −1` and even `l` are considered, since odd
/// `l` has the τ of `l − 1` and more dumbbells.
pub fn epsilon_plan(eps: &BigRational) -> Result<EpsilonPlan, BoundsError> {
    if !eps.is_positive() || *eps >= BigRational::one() {
        return Err(BoundsError::InvalidParameters(format!("eps must lie in (0, 1), got {eps}")));
    }
    let target = BigRational::one() + eps;
    let count = |c: i64, l: i64| required_count_closed_form(c as u32, l).expect("valid campaign parameters");
    let mut best: Option<EpsilonPlan> = None;
    let mut c = 6;
    loop {
        if let Some(b) = &best {
            if count(c, -1) > b.dumbbells {
                break;
            }
        }
        // τ(c, 2r) decreases to 1 + 2/c as r grows.
        if frac(2, c) < *eps {
            let mut l = -1;
            loop {
                let t = tau(c, l)?;
                if t <= target {
                    let n = count(c, l);
                    if best.as_ref().is_none_or(|b| n < b.dumbbells) {
                        best = Some(EpsilonPlan { c, l, tau: t, dumbbells: n });
                    }
                    break;
                }
                if let Some(b) = &best {
                    if count(c, l) > b.dumbbells {
                        break;
                    }
                }
                l = if l == -1 { 0 } else { l + 2 };
            }
        }
        c += 2;
    }
    Ok(best.expect("the loop only exits once a plan exists"))
}

/// Smallest integer `c` satisfying the closed-form sufficient condition
/// for `τ(c, 2r) ≤ 1 + eps`. The square root is handled exactly.
pub fn sufficient_c(r: u64, eps: &BigRational) -> Result<BigInt, BoundsError> {
    if !eps.is_positive() || *eps >= BigRational::one() {
        return Err(BoundsError::InvalidParameters(format!("eps must lie in (0, 1), got {eps}")));
    }
    let rr = q(r as i64);
    let e = eps.clone();
    let den = &e * (q(2) * &rr * &rr + q(14) * &rr + q(24)) - q(2) * &rr - q(7);
    if !den.is_positive() {
        return Err(BoundsError::InfeasibleR(r));
    }
    let a = &rr * &rr * (q(2) - q(2) * &e) + &rr * (q(11) - q(8) * &e) + q(11) - q(6) * &e;
    let b = &rr * &rr * (q(4) + q(8) * &e + q(4) * &e * &e)
        + &rr * (q(4) + q(36) * &e + q(8) * &e * &e)
        + q(1)
        + q(28) * &e
        + q(4) * &e * &e;
    // c ≥ (a + (r+3)√b) / den  ⇔  c·den − a ≥ (r+3)√b.
    let k = &rr + q(3);
    let ok = |c: &BigInt| {
        let t = BigRational::from_integer(c.clone()) * &den - &a;
        !t.is_negative() && &t * &t >= &k * &k * &b
    };
    // Start just below the real bound, then step up.
    let kb = &k * &k * &b;
    let root_floor = (kb.numer() * kb.denom()).sqrt();
    let approx = (&a + BigRational::new(root_floor, kb.denom().clone())) / &den;
    let mut c = approx.floor().to_integer() - 1;
    while !ok(&c) {
        c += 1;
    }
    while ok(&(&c - 1)) {
        c -= 1;
    }
    Ok(c)
}

/// Decimal expansion of `x` rounded half away from zero to `places` digits.
pub fn decimal(x: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = x * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let (int, rem) = abs.div_rem(&scale);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&format!("{int}"));
    if places > 0 {
        let digits = format!("{rem}");
        s.push('.');
        for _ in digits.len()..places {
            s.push('0');
        }
        s.push_str(&digits);
    }
    s
}

/// Canonical `p/q` form (denominator shown even when 1).
pub fn ratio(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Approximate value, for display only.
pub fn approx(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFormula {
    Tau,
    Bipartite,
    CaseB,
    CriticalFraction,
    Turan,
}

impl fmt::Display for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundFormula::Tau => "tau",
            BoundFormula::Bipartite => "bipartite",
            BoundFormula::CaseB => "case-b",
            BoundFormula::CriticalFraction => "critical",
            BoundFormula::Turan => "turan",
        })
    }
}

/// A bound value together with what produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub formula: BoundFormula,
    pub params: Vec<(&'static str, i64)>,
    /// Coefficient of `n`.
    pub value: BigRational,
    /// `value · n` for a requested `n`. The bounds are asymptotic, so this
    /// is not rounded down.
    pub at_n: Option<(u64, BigRational)>,
}

impl BoundReport {
    pub fn tau(c: i64, l: i64, n: Option<u64>) -> Result<Self, BoundsError> {
        let value = tau(c, l)?;
        let at_n = n.map(|n| (n, &value * q(n as i64)));
        Ok(BoundReport {
            formula: BoundFormula::Tau,
            params: alloc::vec![("c", c), ("l", l)],
            value,
            at_n,
        })
    }

    pub fn turan(c1: i64, c2: i64, l: Option<i64>) -> Result<Self, BoundsError> {
        let value = turan_bound(c1, c2, l)?;
        let mut params = alloc::vec![("c1", c1), ("c2", c2)];
        if let Some(l) = l {
            params.push(("l", l));
        }
        Ok(BoundReport {
            formula: BoundFormula::Turan,
            params,
            value,
            at_n: None,
        })
    }

    /// Recomputes the value from the parameters.
    pub fn recompute(&self) -> Result<BigRational, BoundsError> {
        let p = |k: &str| self.params.iter().find(|(n, _)| *n == k).map(|(_, v)| *v);
        let need = |k: &str| p(k).ok_or_else(|| BoundsError::InvalidParameters(format!("missing {k}")));
        match self.formula {
            BoundFormula::Tau => tau(need("c")?, need("l")?),
            BoundFormula::Turan => turan_bound(need("c1")?, need("c2")?, p("l")),
            BoundFormula::CriticalFraction => critical_cycle_fraction(need("c")?, need("l")?),
            BoundFormula::Bipartite => Ok(bipartite_coefficients(need("c")?, need("l")?)?.0),
            BoundFormula::CaseB => {
                let (c, l, n, len) = (need("c")?, need("l")?, need("n")?, need("cycle_len")?);
                case_b_bound(c, l, n as u64, len as u64)
            }
        }
    }
}

impl fmt::Display for BoundReport {
    /// `tau 6 0 = 167/117 (~1.427350)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.formula)?;
        for (_, v) in &self.params {
            write!(f, " {v}")?;
        }
        write!(f, " = {} (~{})", ratio(&self.value), decimal(&self.value, 6))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_reference_values() {
        assert_eq!(tau(6, -1).unwrap(), frac(617, 425));
        assert_eq!(tau(6, 0).unwrap(), frac(167, 117));
        assert_eq!(tau(6, 1).unwrap(), tau(6, 0).unwrap());
        assert!(tau(5, 0).is_err());
        assert!(tau(6, -2).is_err());
    }

    #[test]
    fn critical_fraction_examples() {
        assert_eq!(critical_cycle_fraction(6, 0).unwrap(), frac(9, 13));
        assert_eq!(critical_cycle_fraction(6, -1).unwrap(), frac(17, 25));
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan_bound(3, 3, None).unwrap(), frac(12, 5));
        assert_eq!(turan_bound(6, 6, None).unwrap(), frac(42, 29));
        assert_eq!(turan_bound(6, 6, Some(2)).unwrap(), frac(57, 40));
        assert_eq!(turan_bound(4, 4, None).unwrap(), frac(20, 11));
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(decimal(&frac(167, 117), 6), "1.427350");
        assert_eq!(decimal(&frac(-1, 3), 2), "-0.33");
        assert_eq!(decimal(&frac(1, 200), 2), "0.01");
        assert_eq!(decimal(&q(2), 0), "2");
    }

    #[test]
    fn report_line() {
        let r = BoundReport::tau(6, 0, None).unwrap();
        assert_eq!(r.to_string(), "tau 6 0 = 167/117 (~1.427350)");
        assert_eq!(r.recompute().unwrap(), r.value);
    }

    #[test]
    fn runtime_estimate_is_monotone() {
        assert!(runtime_log_estimate(8, 0) > runtime_log_estimate(6, 0));
    }

    #[test]
    fn tau_large_example() {
        let t = tau(100, 100).unwrap();
        assert_eq!(t, q(1) + frac(2203416, 58321200));
        assert!(t <= frac(26, 25));
    }

    #[test]
    fn balancing_identity() {
        let n = q(1);
        for c in (6..=20).step_by(2) {
            for l in -1..=10 {
                let f = critical_cycle_fraction(c, l).unwrap();
                let t = tau(c, l).unwrap();
                assert_eq!(case_b_increasing(c, l, &n, &f).unwrap(), t, "c={c} l={l}");
                assert_eq!(case_b_decreasing(c, l, &n, &f).unwrap(), t, "c={c} l={l}");
            }
        }
    }

    #[test]
    fn bipartite_is_stronger() {
        for c in (6..=40).step_by(2) {
            for l in -1..=12 {
                let (k1, _) = bipartite_coefficients(c, l).unwrap();
                assert!(k1 <= tau(c, l).unwrap(), "c={c} l={l}");
            }
        }
        assert_eq!(bipartite_coefficients(6, 0).unwrap().0, frac(25, 18));
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(bipartite_edge_bound(6, -1, 100).unwrap(), frac(2352, 17));
        assert_eq!(bipartite_edge_bound(6, 0, 100).unwrap(), frac(1226, 9));
    }

    #[test]
    fn case_b_examples() {
        let n = q(130);
        let len = q(10);
        let inc = case_b_increasing(6, 0, &n, &len).unwrap();
        let dec = case_b_decreasing(6, 0, &n, &len).unwrap();
        assert_eq!(case_b_bound(6, 0, 130, 10).unwrap(), inc.clone().min(dec));
        // With the whole graph on the cycle the decreasing branch wins.
        let full = q(130);
        let inc = case_b_increasing(6, 0, &n, &full).unwrap();
        let dec = case_b_decreasing(6, 0, &n, &full).unwrap();
        assert!(dec < inc);
        assert_eq!(case_b_bound(6, 0, 130, 130).unwrap(), dec);
        assert!(case_b_bound(6, 0, 130, 2).is_err());
        assert!(case_b_bound(6, 0, 130, 131).is_err());
    }

    #[test]
    fn tau_decreases_in_c() {
        for l in -1..=12 {
            for c in (6..40).step_by(2) {
                assert!(tau(c + 2, l).unwrap() < tau(c, l).unwrap(), "c={c} l={l}");
            }
        }
    }

    #[test]
    fn epsilon_plan_examples() {
        let p = epsilon_plan(&frac(1, 2)).unwrap();
        assert_eq!((p.c, p.l, p.tau.clone()), (6, -1, frac(617, 425)));
        let p = epsilon_plan(&frac(43, 100)).unwrap();
        assert_eq!((p.c, p.l, p.tau.clone()), (6, 0, frac(167, 117)));
        let p = epsilon_plan(&frac(1, 25)).unwrap();
        assert!(p.tau <= frac(26, 25));
        assert_eq!(tau(p.c, p.l).unwrap(), p.tau);
        assert!(epsilon_plan(&q(0)).is_err());
        assert!(epsilon_plan(&q(1)).is_err());
    }

    #[test]
    fn sufficient_c_is_sufficient() {
        for r in 0..=8u64 {
            for (a, b) in [(1, 2), (1, 3), (1, 5), (1, 10), (1, 25)] {
                let eps = frac(a, b);
                let Ok(c) = sufficient_c(r, &eps) else { continue };
                let c: i64 = c.try_into().unwrap();
                let mut even = c.max(6);
                even += even % 2;
                for c2 in (even..even + 40).step_by(2) {
                    assert!(tau(c2, 2 * r as i64).unwrap() <= q(1) + &eps, "r={r} eps={eps} c={c2}");
                }
                // The closed form is sufficient, not minimal.
                let smallest = (6..).step_by(2).find(|&c| tau(c, 2 * r as i64).unwrap() <= q(1) + &eps).unwrap();
                assert!(smallest <= even);
            }
        }
    }

    #[test]
    fn sufficient_c_infeasible() {
        // eps(2r²+14r+24) ≤ 2r+7.
        assert_eq!(sufficient_c(0, &frac(7, 24)), Err(BoundsError::InfeasibleR(0)));
        assert_eq!(sufficient_c(1, &frac(1, 10)), Err(BoundsError::InfeasibleR(1)));
        assert!(sufficient_c(0, &frac(1, 2)).is_ok());
    }

    #[test]
    fn runtime_estimate_reference() {
        let direct = libm::log(216.0) + 12.0 * libm::lgamma(11.0) + 2.0 * libm::log(12.0);
        assert!((runtime_log_estimate(6, 0) - direct).abs() < 1e-9);
        let ratio = |c: i64| {
            let k = (2 * c) as f64;
            runtime_log_estimate(c, 0) / (k * k * libm::log(k))
        };
        assert!((ratio(2000) - 1.0).abs() < (ratio(20) - 1.0).abs());
    }
}
