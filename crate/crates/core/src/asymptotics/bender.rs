use serde::Serialize;

use super::relation::AlgebraicRelation;
use crate::error::{Error, Result};

pub const GRID_POINTS: usize = 10_000;
pub const GRID_LO: f64 = 1e-6;
pub const GRID_HI: f64 = 1.0 - 1e-6;
pub const MAX_NEWTON_STEPS: usize = 200;
pub const RESIDUAL_TOLERANCE: f64 = 1e-12;

/// Stated alongside every result: the side conditions of Bender's theorem
/// are taken on trust.
pub const ASSUMPTION: &str =
    "growth = 1/r assumes Bender's theorem applies (aperiodicity and analyticity are not checked)";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularityResult {
    pub relation: String,
    pub r: f64,
    pub s: f64,
    pub growth: f64,
    pub f_residual: f64,
    pub fw_residual: f64,
    pub newton_steps: usize,
}

type Poly = Vec<i128>;

fn mul(a: &[i128], b: &[i128]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_scaled(acc: &mut Poly, p: &[i128], k: i128) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (i, &x) in p.iter().enumerate() {
        acc[i] += k * x;
    }
}

fn product(factors: &[&[i128]]) -> Poly {
    factors.iter().fold(vec![1], |acc, f| mul(&acc, f))
}

fn eval_poly(p: &[i128], z: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * z + c as f64)
}

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Discriminant of `F` with respect to `w`, as an integer polynomial in `z`
/// (lowest degree first). Only quadratic and cubic relations are supported.
pub fn discriminant(rel: &AlgebraicRelation) -> Result<Vec<i128>> {
    let coef = |k| -> Poly { rel.w_coefficient(k).into_iter().map(i128::from).collect() };
    match rel.w_degree() {
        3 => {
            let (a, b, c, d) = (coef(3), coef(2), coef(1), coef(0));
            let mut disc = Vec::new();
            add_scaled(&mut disc, &product(&[&a, &b, &c, &d]), 18);
            add_scaled(&mut disc, &product(&[&b, &b, &b, &d]), -4);
            add_scaled(&mut disc, &product(&[&b, &b, &c, &c]), 1);
            add_scaled(&mut disc, &product(&[&a, &c, &c, &c]), -4);
            add_scaled(&mut disc, &product(&[&a, &a, &d, &d]), -27);
            Ok(trim(disc))
        }
        2 => {
            let (a, b, c) = (coef(2), coef(1), coef(0));
            let mut disc = Vec::new();
            add_scaled(&mut disc, &product(&[&b, &b]), 1);
            add_scaled(&mut disc, &product(&[&a, &c]), -4);
            Ok(trim(disc))
        }
        d => Err(Error::input(
            "relation",
            format!("expected a quadratic or cubic in w, got degree {d}"),
        )),
    }
}

/// Smallest sign change of `p` on the fixed grid over (0, 1), refined by
/// bisection.
fn smallest_root(p: &[i128]) -> Option<f64> {
    let step = (GRID_HI - GRID_LO) / (GRID_POINTS - 1) as f64;
    let mut lo = GRID_LO;
    let mut f_lo = eval_poly(p, lo);
    if f_lo == 0.0 {
        return Some(lo);
    }
    for k in 1..GRID_POINTS {
        let hi = GRID_LO + step * k as f64;
        let f_hi = eval_poly(p, hi);
        if f_hi == 0.0 {
            return Some(hi);
        }
        if (f_lo < 0.0) != (f_hi < 0.0) {
            let (mut a, mut b) = (lo, hi);
            loop {
                let m = 0.5 * (a + b);
                if m <= a || m >= b {
                    break;
                }
                let fm = eval_poly(p, m);
                if fm == 0.0 {
                    return Some(m);
                }
                if (fm < 0.0) == (f_lo < 0.0) {
                    a = m;
                } else {
                    b = m;
                }
            }
            return Some(0.5 * (a + b));
        }
        lo = hi;
        f_lo = f_hi;
    }
    None
}

/// The repeated root in `w` of `F(r, w)`.
fn double_root(rel: &AlgebraicRelation, r: f64) -> Result<f64> {
    let at = |k| eval_poly(&rel.w_coefficient(k).into_iter().map(i128::from).collect::<Vec<_>>(), r);
    let s = if rel.w_degree() == 3 {
        let (a, b, c, d) = (at(3), at(2), at(1), at(0));
        (9.0 * a * d - b * c) / (2.0 * (b * b - 3.0 * a * c))
    } else {
        -at(1) / (2.0 * at(2))
    };
    if s.is_finite() {
        Ok(s)
    } else {
        Err(Error::NoBranchPoint(format!(
            "the repeated root at z = {r} is degenerate (triple root or vanishing leading coefficient)"
        )))
    }
}

/// Damped Newton on `(F, F_w) = (0, 0)`.
fn refine(rel: &AlgebraicRelation, mut z: f64, mut w: f64) -> Result<(f64, f64, usize)> {
    let residual = |z: f64, w: f64| {
        let f = rel.eval(z, w);
        let fw = rel.eval_derivative(z, w, 0, 1);
        (f, fw, f.abs().max(fw.abs()))
    };
    let (mut f, mut fw, mut res) = residual(z, w);
    let mut steps = 0;
    while steps < MAX_NEWTON_STEPS {
        if res < RESIDUAL_TOLERANCE * 1e-2 {
            break;
        }
        steps += 1;
        let fz = rel.eval_derivative(z, w, 1, 0);
        let fwz = rel.eval_derivative(z, w, 1, 1);
        let fww = rel.eval_derivative(z, w, 0, 2);
        let det = fz * fww - fw * fwz;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let dz = (f * fww - fw * fw) / det;
        let dw = (fz * fw - fwz * f) / det;
        let mut t = 1.0;
        let mut improved = false;
        while t > 1e-6 {
            let (nz, nw) = (z - t * dz, w - t * dw);
            let (nf, nfw, nres) = residual(nz, nw);
            if nres < res {
                (z, w, f, fw, res) = (nz, nw, nf, nfw, nres);
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if !improved {
            break;
        }
    }
    if res < RESIDUAL_TOLERANCE {
        Ok((z, w, steps))
    } else {
        Err(Error::NewtonDiverged {
            steps,
            f_residual: f.abs(),
            fw_residual: fw.abs(),
        })
    }
}

/// Locates the branch point `(r, s)` with `F = F_w = 0` and returns the
/// growth constant `1/r`.
pub fn bender_growth(rel: &AlgebraicRelation) -> Result<SingularityResult> {
    let disc = discriminant(rel)?;
    let r0 = smallest_root(&disc).ok_or_else(|| {
        Error::NoBranchPoint(format!(
            "the discriminant of {} has no sign change on ({GRID_LO}, {GRID_HI})",
            rel.name()
        ))
    })?;
    let s0 = double_root(rel, r0)?;
    let (r, s, newton_steps) = refine(rel, r0, s0)?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::NoBranchPoint(format!("refinement left (0, 1): r = {r}")));
    }
    Ok(SingularityResult {
        relation: rel.name().to_string(),
        r,
        s,
        growth: 1.0 / r,
        f_residual: rel.eval(r, s).abs(),
        fw_residual: rel.eval_derivative(r, s, 0, 1).abs(),
        newton_steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_discriminant() {
        // w² − w + z: branch at z = 1/4, w = 1/2 (Catalan)
        let rel = AlgebraicRelation::new("catalan", [(0, 2, 1), (0, 1, -1), (1, 0, 1)]);
        assert_eq!(discriminant(&rel).unwrap(), vec![1, -4]);
        let res = bender_growth(&rel).unwrap();
        assert!((res.r - 0.25).abs() < 1e-14);
        assert!((res.s - 0.5).abs() < 1e-7);
        assert!((res.growth - 4.0).abs() < 1e-12);
    }

    #[test]
    fn cubic_discriminant_closed_form() {
        // w³ − 3w + 2z: Δ = −4·(−3)³ − 27·(2z)² = 108(1 − z²)
        let rel = AlgebraicRelation::new("c", [(0, 3, 1), (0, 1, -3), (1, 0, 2)]);
        assert_eq!(discriminant(&rel).unwrap(), vec![108, 0, -108]);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        let rel = AlgebraicRelation::new("flat", [(0, 2, 1), (0, 0, 1)]);
        assert!(matches!(bender_growth(&rel), Err(Error::NoBranchPoint(_))));
        let linear = AlgebraicRelation::new("lin", [(0, 1, 1), (1, 0, 1)]);
        assert!(bender_growth(&linear).is_err());
    }
}
