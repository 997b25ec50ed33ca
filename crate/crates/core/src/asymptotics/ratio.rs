use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recurrences::CountTable;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioEstimate {
    pub n: usize,
    /// `table[n] / table[n-1]`.
    pub ratio: f64,
    /// Aitken's delta-squared limit of the ratios at `n-2`, `n-1`, `n`, when
    /// those exist and the second difference is nonzero.
    pub aitken: Option<f64>,
}

/// `a / b` to full double precision for arbitrarily large operands.
pub fn big_ratio(a: &BigUint, b: &BigUint) -> f64 {
    let scaled = (a << 64u32) / b;
    scaled.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(64)
}

fn ratio_at(table: &CountTable, n: usize) -> Result<f64> {
    let den = table.get(n - 1).ok_or_else(|| Error::TableTooShort {
        needed: n,
        have: table.end_index(),
    })?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator(n - 1));
    }
    let num = table.get(n).ok_or_else(|| Error::TableTooShort {
        needed: n + 1,
        have: table.end_index(),
    })?;
    Ok(big_ratio(num, den))
}

pub fn aitken(x0: f64, x1: f64, x2: f64) -> Option<f64> {
    let d1 = x1 - x0;
    let d2 = x2 - x1;
    let second = d2 - d1;
    (second != 0.0).then(|| x2 - d2 * d2 / second)
}

pub fn ratio_growth(table: &CountTable, n: usize) -> Result<RatioEstimate> {
    if n < 2 || n <= table.first_index() {
        return Err(Error::input("n", "must be at least 2 and above the table's first index"));
    }
    if n >= table.end_index() {
        return Err(Error::TableTooShort {
            needed: n + 1,
            have: table.end_index(),
        });
    }
    let ratio = ratio_at(table, n)?;
    let aitken = if n >= table.first_index() + 3 {
        match (ratio_at(table, n - 2), ratio_at(table, n - 1)) {
            (Ok(r0), Ok(r1)) => aitken(r0, r1, ratio),
            _ => None,
        }
    } else {
        None
    };
    Ok(RatioEstimate { n, ratio, aitken })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrences::{ab_tables, gfh_tables, gs_tables};

    #[test]
    fn table_one_ratio() {
        let (g, _, _) = gfh_tables(11);
        let est = ratio_growth(&g, 11).unwrap();
        assert!((est.ratio - 1391820.0 / 282918.0).abs() < 1e-15);
        assert!(est.aitken.is_some());
    }

    #[test]
    fn zero_denominator_and_short_tables() {
        let (gs, _, _) = gs_tables(5);
        assert!(matches!(ratio_growth(&gs, 2), Err(Error::ZeroDenominator(1))));
        assert!(matches!(ratio_growth(&gs, 6), Err(Error::TableTooShort { .. })));
        assert!(ratio_growth(&gs, 1).is_err());
    }

    #[test]
    fn pell_limit() {
        let (a, _) = ab_tables(40).unwrap();
        let est = ratio_growth(&a, 40).unwrap();
        assert!((est.ratio - (1.0 + 2f64.sqrt())).abs() < 1e-6);
    }

    #[test]
    fn aitken_on_geometric_error() {
        let lim = 3.0;
        let xs: Vec<f64> = (0..3).map(|k| lim + 0.5f64.powi(k)).collect();
        assert!((aitken(xs[0], xs[1], xs[2]).unwrap() - lim).abs() < 1e-12);
        assert_eq!(aitken(1.0, 2.0, 3.0), None);
    }

    #[test]
    fn huge_operands() {
        let a = BigUint::from(7u32) << 5000u32;
        let b = BigUint::from(2u32) << 5000u32;
        assert_eq!(big_ratio(&a, &b), 3.5);
    }
}
