use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::relation::AlgebraicRelation;
use crate::error::{Error, Result};
use crate::recurrences::CountTable;

/// Product of two power series truncated after `z^order`.
fn mul_truncated(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Substitutes `w = Σ table[i] z^i` (indices `0..=order`) into `F(z, w)` with
/// exact arithmetic and returns the largest absolute coefficient among
/// `z^0 .. z^(order-3)`. Zero when the table is the series of a root of `F`.
pub fn series_residual(rel: &AlgebraicRelation, table: &CountTable, order: usize) -> Result<BigUint> {
    if order < 3 {
        return Err(Error::input("order", "must be at least 3"));
    }
    if table.end_index() <= order {
        return Err(Error::TableTooShort {
            needed: order + 1,
            have: table.end_index(),
        });
    }
    let w: Vec<BigInt> = (0..=order)
        .map(|i| table.get(i).map(|v| BigInt::from(v.clone())).unwrap_or_default())
        .collect();

    let mut powers = vec![{
        let mut one = vec![BigInt::zero(); order + 1];
        one[0] = BigInt::from(1);
        one
    }];
    let mut acc = vec![BigInt::zero(); order + 1];
    for (&(zd, wd), &c) in rel.coefficients() {
        while powers.len() <= wd as usize {
            let next = mul_truncated(powers.last().expect("seeded"), &w, order);
            powers.push(next);
        }
        let shift = zd as usize;
        for (i, x) in powers[wd as usize].iter().enumerate() {
            if i + shift > order {
                break;
            }
            acc[i + shift] += x * c;
        }
    }
    Ok(acc[..=order - 3]
        .iter()
        .map(|x| x.abs().to_biguint().expect("absolute value"))
        .max()
        .unwrap_or_default())
}
