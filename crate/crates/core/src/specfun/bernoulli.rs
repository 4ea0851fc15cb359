//! Bernoulli numbers from the exact Akiyama–Tanigawa recurrence.

use std::sync::OnceLock;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::error::{domain, Result};

/// Largest index held in the cached `f64` table.
pub const TABLE_MAX: usize = 120;

/// All Bernoulli numbers `B_0..=B_n` as exact rationals (convention `B_1 = +1/2`).
pub fn bernoulli_sequence(n: usize) -> Vec<BigRational> {
    let mut row: Vec<BigRational> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
        }
        out.push(row[0].clone());
    }
    out
}

/// Exact Bernoulli number `B_k` for even `k ≥ 2`.
pub fn bernoulli_exact(k: u32) -> Result<BigRational> {
    check_index(k)?;
    Ok(bernoulli_sequence(k as usize)
        .pop()
        .unwrap_or_else(BigRational::zero))
}

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        bernoulli_sequence(TABLE_MAX)
            .iter()
            .map(|r| r.to_f64().unwrap_or(f64::NAN))
            .collect()
    })
}

fn check_index(k: u32) -> Result<()> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(domain("bernoulli_number", k as f64, "even k >= 2"));
    }
    Ok(())
}

/// Bernoulli number `B_k` (even `k ≥ 2`) as a float.
///
/// Indices up to [`TABLE_MAX`] come from the exact rational table; larger
/// ones use `B_{2m} = (-1)^{m+1} 2 (2m)! ζ(2m) / (2π)^{2m}` and overflow to
/// infinity past `k ≈ 258`.
pub fn bernoulli_number(k: u32) -> Result<f64> {
    check_index(k)?;
    let k = k as usize;
    if k <= TABLE_MAX {
        return Ok(table()[k]);
    }
    // ζ(k) = 1 to double precision for k > 120.
    let m = k / 2;
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let mut log_mag = std::f64::consts::LN_2 - (k as f64) * (2.0 * std::f64::consts::PI).ln();
    for i in 2..=k {
        log_mag += (i as f64).ln();
    }
    Ok(sign * log_mag.exp())
}

/// Unchecked table access for internal series (`k` even, `2 ≤ k ≤ TABLE_MAX`).
pub(crate) fn b(k: usize) -> f64 {
    table()[k]
}

/// Second Bernoulli polynomial `B₂(h) = h² − h + 1/6`.
pub fn bernoulli_poly2(h: f64) -> f64 {
    h * h - h + 1.0 / 6.0
}
