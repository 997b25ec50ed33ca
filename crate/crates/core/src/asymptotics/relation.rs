use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A polynomial `F(z, w)` with integer coefficients, keyed by
/// `(z-degree, w-degree)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraicRelation {
    name: String,
    coefficients: BTreeMap<(u32, u32), i64>,
}

impl AlgebraicRelation {
    pub fn new(name: impl Into<String>, terms: impl IntoIterator<Item = (u32, u32, i64)>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (zd, wd, c) in terms {
            *coefficients.entry((zd, wd)).or_insert(0) += c;
        }
        coefficients.retain(|_, c| *c != 0);
        AlgebraicRelation {
            name: name.into(),
            coefficients,
        }
    }

    /// Relation satisfied by the generating function of all ncp partitions:
    /// `(3z³−4z²)w³ + (z²+4z)w² + (−3z−1)w + 1`.
    pub fn eq8() -> Self {
        Self::new(
            "eq8",
            [
                (3, 3, 3),
                (2, 3, -4),
                (2, 2, 1),
                (1, 2, 4),
                (1, 1, -3),
                (0, 1, -1),
                (0, 0, 1),
            ],
        )
    }

    /// Partitions without singletons:
    /// `(z³+4z²)w³ + (−5z²−4z)w² + (4z+1)w − 1`.
    pub fn eq15() -> Self {
        Self::new(
            "eq15",
            [
                (3, 3, 1),
                (2, 3, 4),
                (2, 2, -5),
                (1, 2, -4),
                (1, 1, 4),
                (0, 1, 1),
                (0, 0, -1),
            ],
        )
    }

    /// Ordered partitions:
    /// `(z³−z²)w³ + (2z³−3z²+2z)w² + (z−1)w + z²−2z+1`.
    pub fn eq22() -> Self {
        Self::new(
            "eq22",
            [
                (3, 3, 1),
                (2, 3, -1),
                (3, 2, 2),
                (2, 2, -3),
                (1, 2, 2),
                (1, 1, 1),
                (0, 1, -1),
                (2, 0, 1),
                (1, 0, -2),
                (0, 0, 1),
            ],
        )
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "eq8" => Ok(Self::eq8()),
            "eq15" => Ok(Self::eq15()),
            "eq22" => Ok(Self::eq22()),
            _ => Err(Error::input(
                "relation",
                format!("unknown relation `{name}` (expected eq8, eq15, eq22 or a coefficient list)"),
            )),
        }
    }

    /// Parses `[[zdeg, wdeg, coef], ...]`.
    pub fn from_coefficient_list(name: impl Into<String>, json: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(json).map_err(|e| {
            Error::input(
                format!("line {} column {}", e.line(), e.column()),
                format!("expected [[zdeg, wdeg, coef], ...]: {e}"),
            )
        })?;
        let mut terms = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let &[zd, wd, c] = row.as_slice() else {
                return Err(Error::input(format!("[{i}]"), "expected exactly three integers"));
            };
            let deg = |d: i64, j: usize| {
                u32::try_from(d)
                    .ok()
                    .filter(|&d| d <= 64)
                    .ok_or_else(|| Error::input(format!("[{i}][{j}]"), "degree must be in 0..=64"))
            };
            terms.push((deg(zd, 0)?, deg(wd, 1)?, c));
        }
        Ok(Self::new(name, terms))
    }

    /// Accepts a built-in name or an inline coefficient list.
    pub fn parse(spec: &str) -> Result<Self> {
        let trimmed = spec.trim();
        if trimmed.starts_with('[') {
            Self::from_coefficient_list("custom", trimmed)
        } else {
            Self::builtin(trimmed)
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficients(&self) -> &BTreeMap<(u32, u32), i64> {
        &self.coefficients
    }

    pub fn w_degree(&self) -> u32 {
        self.coefficients.keys().map(|&(_, w)| w).max().unwrap_or(0)
    }

    /// Coefficient of `w^k` as a polynomial in `z`, lowest degree first.
    pub fn w_coefficient(&self, k: u32) -> Vec<i64> {
        let mut out = Vec::new();
        for (&(zd, wd), &c) in &self.coefficients {
            if wd == k {
                let zd = zd as usize;
                if out.len() <= zd {
                    out.resize(zd + 1, 0);
                }
                out[zd] += c;
            }
        }
        out
    }

    /// `∂^i/∂z^i ∂^j/∂w^j F` at `(z, w)`.
    pub fn eval_derivative(&self, z: f64, w: f64, dz: u32, dw: u32) -> f64 {
        self.coefficients
            .iter()
            .filter(|(&(zd, wd), _)| zd >= dz && wd >= dw)
            .map(|(&(zd, wd), &c)| {
                c as f64
                    * falling(zd, dz)
                    * falling(wd, dw)
                    * z.powi((zd - dz) as i32)
                    * w.powi((wd - dw) as i32)
            })
            .sum()
    }

    pub fn eval(&self, z: f64, w: f64) -> f64 {
        self.eval_derivative(z, w, 0, 0)
    }
}

fn falling(n: u32, k: u32) -> f64 {
    (0..k).map(|i| (n - i) as f64).product()
}

impl fmt::Display for AlgebraicRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "{}: 0", self.name);
        }
        write!(f, "{}:", self.name)?;
        for (i, (&(zd, wd), &c)) in self.coefficients.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if i == 0 { "" } else { "+" };
            write!(f, " {sign}{}", c.abs())?;
            match zd {
                0 => {}
                1 => write!(f, "z")?,
                d => write!(f, "z^{d}")?,
            }
            match wd {
                0 => {}
                1 => write!(f, "w")?,
                d => write!(f, "w^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_by_name() {
        assert_eq!(AlgebraicRelation::builtin("EQ8").unwrap(), AlgebraicRelation::eq8());
        assert!(AlgebraicRelation::builtin("eq9").is_err());
        assert_eq!(AlgebraicRelation::eq22().w_coefficient(0), vec![1, -2, 1]);
        assert_eq!(AlgebraicRelation::eq8().w_coefficient(3), vec![0, 0, -4, 3]);
        assert_eq!(AlgebraicRelation::eq15().w_degree(), 3);
    }

    #[test]
    fn coefficient_list() {
        let r = AlgebraicRelation::parse("[[0,0,1],[1,1,-1],[0,1,0],[1,1,1]]").unwrap();
        assert_eq!(r.coefficients().len(), 1);
        assert!(AlgebraicRelation::parse("[[0,0]]").is_err());
        assert!(AlgebraicRelation::parse("[[0,-1,2]]").is_err());
        assert!(AlgebraicRelation::parse("[[0,0,1]").is_err());
    }

    #[test]
    fn evaluation_and_derivatives() {
        let r = AlgebraicRelation::eq8();
        let (z, w) = (0.1, 1.2);
        let f = (3.0 * z * z * z - 4.0 * z * z) * w * w * w + (z * z + 4.0 * z) * w * w - (3.0 * z + 1.0) * w + 1.0;
        assert!((r.eval(z, w) - f).abs() < 1e-15);
        let fw = 3.0 * (3.0 * z * z * z - 4.0 * z * z) * w * w + 2.0 * (z * z + 4.0 * z) * w - (3.0 * z + 1.0);
        assert!((r.eval_derivative(z, w, 0, 1) - fw).abs() < 1e-14);
    }

    #[test]
    fn display() {
        let r = AlgebraicRelation::new("t", [(1, 2, -3), (0, 0, 1)]);
        assert_eq!(r.to_string(), "t: -3zw^2 +1");
    }
}
