//! Log-gamma, digamma and polygammas by upward recurrence into the
//! Stirling regime, plus the asymptotic remainders used by the
//! cancellation-free forms of the Lagrangian derivatives.

use super::bernoulli::b as bern;
use super::zeta::zeta_minus_one_table;
use super::EULER_GAMMA;
use crate::error::{domain, Result};

/// ½ ln(2π).
pub const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Arguments at or above this use the asymptotic expansions directly.
const ASYMPTOTIC_MIN: f64 = 8.0;
/// Bernoulli terms kept in the asymptotic expansions (error < 1e-20 at x = 8).
const TERMS: usize = 14;
/// Terms of the ln Γ(1+z) Taylor series in ζ(k) − 1.
const TAYLOR_TERMS: usize = 40;

fn check(func: &'static str, x: f64) -> Result<()> {
    if x > 0.0 {
        Ok(())
    } else {
        Err(domain(func, x, "x > 0"))
    }
}

/// Σ_{k=from+1}^{to} B_{2k} / (2k(2k−1) x^{2k−1}).
fn stirling_tail(x: f64, from: usize, to: usize) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut pow = (1.0 / x) * inv2.powi(from as i32);
    let mut sum = 0.0;
    for k in (from + 1)..=to {
        let kk = 2 * k;
        sum += bern(kk) / (kk * (kk - 1)) as f64 * pow;
        pow *= inv2;
    }
    sum
}

/// Σ_{k=from+1}^{to} B_{2k} / (2k x^{2k}).
fn digamma_tail(x: f64, from: usize, to: usize) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2.powi(from as i32 + 1);
    let mut sum = 0.0;
    for k in (from + 1)..=to {
        sum += bern(2 * k) / (2 * k) as f64 * pow;
        pow *= inv2;
    }
    sum
}

/// Σ_{k=from+1}^{to} B_{2k} / x^{2k+1}.
fn trigamma_tail(x: f64, from: usize, to: usize) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2.powi(from as i32 + 1) / x;
    let mut sum = 0.0;
    for k in (from + 1)..=to {
        sum += bern(2 * k) * pow;
        pow *= inv2;
    }
    sum
}

/// Σ_{k≥1} (2k+1) B_{2k} / x^{2k+2}.
fn tetragamma_tail(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2 * inv2;
    let mut sum = 0.0;
    for k in 1..=TERMS {
        sum += (2 * k + 1) as f64 * bern(2 * k) * pow;
        pow *= inv2;
    }
    sum
}

/// (x − ½) ln x − x + ½ ln 2π.
fn stirling_leading(x: f64) -> f64 {
    (x - 0.5) * x.ln() - x + HALF_LN_2PI
}

/// ln Γ(1+z) for |z| ≤ ½ from the ζ(k) − 1 Taylor series.
fn ln_gamma_1p(z: f64) -> f64 {
    let zm1 = zeta_minus_one_table();
    let mut sum = 0.0;
    // pow runs through (−z)^k
    let mut pow = -z;
    for (k, &c) in zm1.iter().enumerate().take(TAYLOR_TERMS + 1).skip(2) {
        pow *= -z;
        sum += c * pow / k as f64;
    }
    -EULER_GAMMA * z + (z - z.ln_1p()) + sum
}

/// Natural logarithm of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check("ln_gamma", x)?;
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    Ok(if x < 0.5 {
        ln_gamma_1p(x) - x.ln()
    } else if x < 1.5 {
        ln_gamma_1p(x - 1.0)
    } else if x < 2.5 {
        let z = x - 2.0;
        z.ln_1p() + ln_gamma_1p(z)
    } else if x < ASYMPTOTIC_MIN {
        // Down into [1.5, 2.5): every term added is positive.
        let mut y = x;
        let mut prod = 1.0;
        while y >= 2.5 {
            y -= 1.0;
            prod *= y;
        }
        let z = y - 2.0;
        z.ln_1p() + ln_gamma_1p(z) + prod.ln()
    } else {
        stirling_leading(x) + stirling_tail(x, 0, TERMS)
    })
}

/// Digamma ψ(x) = d/dx ln Γ(x) for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    check("digamma", x)?;
    let mut y = x;
    let mut shift = 0.0;
    while y < ASYMPTOTIC_MIN {
        shift += 1.0 / y;
        y += 1.0;
    }
    Ok(y.ln() - 0.5 / y - digamma_tail(y, 0, TERMS) - shift)
}

/// Polygamma ψ⁽ⁿ⁾(x) for n ∈ {1, 2} and `x > 0`.
pub fn polygamma(n: u32, x: f64) -> Result<f64> {
    check("polygamma", x)?;
    let mut y = x;
    let mut shift = 0.0;
    match n {
        1 => {
            while y < ASYMPTOTIC_MIN {
                shift += 1.0 / (y * y);
                y += 1.0;
            }
            Ok(1.0 / y + 0.5 / (y * y) + trigamma_tail(y, 0, TERMS) + shift)
        }
        2 => {
            while y < ASYMPTOTIC_MIN {
                shift += 2.0 / (y * y * y);
                y += 1.0;
            }
            let inv = 1.0 / y;
            Ok(-inv * inv - inv * inv * inv - tetragamma_tail(y) - shift)
        }
        _ => Err(domain("polygamma", n as f64, "order n in {1, 2}")),
    }
}

/// ln Γ(x) minus its Stirling expansion through `order` Bernoulli terms:
/// ln Γ(x) − [(x−½)ln x − x + ½ln 2π + Σ_{k=1}^{order} B_{2k}/(2k(2k−1)x^{2k−1})].
pub fn ln_gamma_remainder(x: f64, order: usize) -> Result<f64> {
    check("ln_gamma_remainder", x)?;
    if x >= ASYMPTOTIC_MIN {
        return Ok(stirling_tail(x, order, TERMS));
    }
    let kept = stirling_tail(x, 0, order);
    Ok(ln_gamma(x)? - stirling_leading(x) - kept)
}

/// ln x − 1/(2x) − Σ_{k=1}^{order} B_{2k}/(2k x^{2k}) − ψ(x).
pub fn digamma_remainder(x: f64, order: usize) -> Result<f64> {
    check("digamma_remainder", x)?;
    if x >= ASYMPTOTIC_MIN {
        return Ok(digamma_tail(x, order, TERMS));
    }
    let kept = digamma_tail(x, 0, order);
    Ok(x.ln() - 0.5 / x - kept - digamma(x)?)
}

/// ψ′(x) − 1/x − 1/(2x²) − Σ_{k=1}^{order} B_{2k}/x^{2k+1}.
pub fn trigamma_remainder(x: f64, order: usize) -> Result<f64> {
    check("trigamma_remainder", x)?;
    if x >= ASYMPTOTIC_MIN {
        return Ok(trigamma_tail(x, order, TERMS));
    }
    let kept = trigamma_tail(x, 0, order);
    Ok(polygamma(1, x)? - 1.0 / x - 0.5 / (x * x) - kept)
}
