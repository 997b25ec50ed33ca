use serde::Serialize;

use crate::error::{Error, Result};

/// Golden-section stops once the bracket is narrower than this.
pub const GOLDEN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaResult {
    pub alpha_star: f64,
    /// `exp` of the maximum of the log objective.
    pub growth_per_point: f64,
    pub beta: f64,
    pub gamma: f64,
    pub c: f64,
    /// Interval on which the derivative of the objective changes sign.
    pub bracket: (f64, f64),
}

/// Binary entropy in bits, with `0·log 0 = 0`.
pub fn binary_entropy(alpha: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    term(alpha) + term(1.0 - alpha)
}

/// `ln 2·H(α) + (1−α) ln β + c α ln γ`.
pub fn log_objective(alpha: f64, beta: f64, gamma: f64, c: f64) -> f64 {
    std::f64::consts::LN_2 * binary_entropy(alpha) + (1.0 - alpha) * beta.ln() + c * alpha * gamma.ln()
}

fn log_derivative(alpha: f64, beta: f64, gamma: f64, c: f64) -> f64 {
    ((1.0 - alpha) / alpha).ln() - beta.ln() + c * gamma.ln()
}

fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > GOLDEN_TOLERANCE {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    (a, b)
}

fn check_params(beta: f64, gamma: f64, c: f64) -> Result<()> {
    if !(beta.is_finite() && beta > 1.0) {
        return Err(Error::input("beta", "must be finite and > 1"));
    }
    if !(gamma.is_finite() && gamma >= 1.0) {
        return Err(Error::input("gamma", "must be finite and >= 1"));
    }
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::input("c", "must lie in [0, 1]"));
    }
    Ok(())
}

/// Maximizes `2^{H(α)} β^{1−α} γ^{cα}` over `α ∈ (0, 1)`.
pub fn optimize_alpha(beta: f64, gamma: f64, c: f64) -> Result<AlphaResult> {
    optimize_alpha_within(beta, gamma, c, 0.0, 1.0)
}

/// As [`optimize_alpha`], starting golden-section from `[lo, hi] ⊂ [0, 1]`.
///
/// Golden-section on objective values alone stalls near `1e-8` because the
/// maximum is flat to double precision. The result is therefore polished by
/// bisection on the derivative, which is strictly decreasing on (0, 1).
pub fn optimize_alpha_within(beta: f64, gamma: f64, c: f64, lo: f64, hi: f64) -> Result<AlphaResult> {
    check_params(beta, gamma, c)?;
    if !(0.0 <= lo && lo < hi && hi <= 1.0) {
        return Err(Error::input("bracket", "need 0 <= lo < hi <= 1"));
    }
    let f = |a: f64| log_objective(a, beta, gamma, c);
    let df = |a: f64| log_derivative(a, beta, gamma, c);
    let (ga, gb) = golden_section(f, lo, hi);

    // widen until the derivative changes sign
    let mid = 0.5 * (ga + gb);
    let mut half = (gb - ga).max(f64::EPSILON);
    let (mut a, mut b) = loop {
        let a = (mid - half).max(f64::MIN_POSITIVE);
        let b = (mid + half).min(1.0 - f64::EPSILON);
        if df(a) >= 0.0 && df(b) <= 0.0 {
            break (a, b);
        }
        if a <= f64::MIN_POSITIVE && b >= 1.0 - f64::EPSILON {
            break (a, b);
        }
        half *= 2.0;
    };
    let bracket = (a, b);
    loop {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if df(m) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let alpha_star = 0.5 * (a + b);
    Ok(AlphaResult {
        alpha_star,
        growth_per_point: f(alpha_star).exp(),
        beta,
        gamma,
        c,
        bracket,
    })
}
