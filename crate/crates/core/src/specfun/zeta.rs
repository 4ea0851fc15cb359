//! Riemann and Hurwitz zeta values and the Hurwitz zeta s-derivatives at
//! s = 0 and s = −1.

use std::sync::OnceLock;

use super::bernoulli::b as bern;
use super::gamma::{ln_gamma, HALF_LN_2PI};
use super::{bernoulli_poly2, PrecisionConfig};
use crate::error::{domain, Result};
use crate::quadrature::{integrate_semi_infinite, QuadratureConfig};

/// Number of Borwein terms; the truncation error is below 3·(3+√8)^{-40} ≈ 1e-30.
const BORWEIN_TERMS: usize = 40;
/// Euler–Maclaurin correction terms for the Hurwitz zeta tail.
const EM_TERMS: usize = 12;

/// Riemann zeta ζ(n) for integer `n ≥ 2`, from Borwein's alternating-series
/// acceleration of the Dirichlet eta function.
pub fn riemann_zeta(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(domain("riemann_zeta", n as f64, "integer n >= 2"));
    }
    let s = n as f64;
    let m = BORWEIN_TERMS;
    let mf = m as f64;
    // d_k = m Σ_{i≤k} (m+i−1)! 4^i / ((m−i)! (2i)!)
    let mut d = Vec::with_capacity(m + 1);
    let mut term = 1.0 / mf;
    let mut acc = 0.0;
    for i in 0..=m {
        acc += term;
        d.push(mf * acc);
        let fi = i as f64;
        term *= 4.0 * (mf + fi) * (mf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
    }
    let dn = d[m];
    let mut sum = 0.0;
    for (k, dk) in d.iter().enumerate().take(m) {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (dk - dn) / ((k + 1) as f64).powf(s);
    }
    let eta = -sum / dn;
    Ok(eta / (1.0 - 2f64.powf(1.0 - s)))
}

/// ζ(k) − 1 for k = 0..=64 (entries 0 and 1 are unused and set to NaN).
pub(crate) fn zeta_minus_one_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![f64::NAN, f64::NAN];
        for k in 2..=64u32 {
            // ζ(k, 2) keeps full relative precision of the small difference.
            t.push(hurwitz_zeta(k as f64, 2.0).expect("k >= 2"));
        }
        t
    })
}

/// Hurwitz zeta ζ(s, h) = Σ_{n≥0} (n+h)^{−s} for `s > 1`, `h > 0`, by direct
/// summation up to an Euler–Maclaurin tail.
pub fn hurwitz_zeta(s: f64, h: f64) -> Result<f64> {
    if s.is_nan() || s <= 1.0 {
        return Err(domain("hurwitz_zeta", s, "s > 1"));
    }
    if h.is_nan() || h <= 0.0 {
        return Err(domain("hurwitz_zeta", h, "h > 0"));
    }
    let a_min = 12.0 + s.min(1e6);
    let mut sum = 0.0;
    let mut a = h;
    while a < a_min {
        sum += a.powf(-s);
        a += 1.0;
    }
    let a_s = a.powf(-s);
    let mut tail = a * a_s / (s - 1.0) + 0.5 * a_s;
    // f_j = s(s+1)…(s+2j−2) / (2j)!
    let mut f = s / 2.0;
    let mut pow = a_s / a;
    let inv2 = 1.0 / (a * a);
    for j in 1..=EM_TERMS {
        tail += bern(2 * j) * f * pow;
        let jf = j as f64;
        f *= (s + 2.0 * jf - 1.0) * (s + 2.0 * jf) / ((2.0 * jf + 1.0) * (2.0 * jf + 2.0));
        pow *= inv2;
    }
    Ok(sum + tail)
}

/// 1/12 − h²/4 + (ln h / 2)·B₂(h): the non-decaying part of the large-h
/// expansion of ζ′(−1, h).
pub fn zeta_deriv_minus1_asymptotic_base(h: f64) -> f64 {
    1.0 / 12.0 - 0.25 * h * h + 0.5 * h.ln() * bernoulli_poly2(h)
}

/// −Σ_{k=from+2}^{to+1} B_{2k} / (2k(2k−1)(2k−2)) h^{2−2k}.
fn zeta_deriv_tail(h: f64, from: usize, to: usize) -> f64 {
    let inv2 = 1.0 / (h * h);
    let mut pow = inv2.powi(from as i32 + 1);
    let mut sum = 0.0;
    for k in (from + 2)..=(to + 1) {
        let kk = 2 * k;
        sum -= bern(kk) / (kk * (kk - 1) * (kk - 2)) as f64 * pow;
        pow *= inv2;
    }
    sum
}

fn check_h(func: &'static str, h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(domain(func, h, "0 < h < inf"))
    }
}

/// ζ′(−1, h) with the default precision settings.
pub fn hurwitz_zeta_deriv_minus1(h: f64) -> Result<f64> {
    hurwitz_zeta_deriv_minus1_with(h, &PrecisionConfig::default())
}

/// ζ′(−1, h) = ∂_s ζ(s, h) at s = −1.
///
/// Below `recurrence_shift_threshold` the argument is moved up with
/// ζ′(−1, h+1) − ζ′(−1, h) = h ln h; at the shifted point the large-h
/// Bernoulli expansion is summed through `series_terms_max` terms.
pub fn hurwitz_zeta_deriv_minus1_with(h: f64, cfg: &PrecisionConfig) -> Result<f64> {
    check_h("hurwitz_zeta_deriv_minus1", h)?;
    let mut y = h;
    let mut shift = 0.0;
    while y < cfg.recurrence_shift_threshold {
        shift += y * y.ln();
        y += 1.0;
    }
    Ok(zeta_deriv_minus1_asymptotic_base(y) + zeta_deriv_tail(y, 0, cfg.series_terms_max) - shift)
}

/// ζ′(−1, h) minus the base expansion and its first `order` Bernoulli
/// corrections. `order = 1` leaves the error of the classic
/// `base + 1/(720 h²)` approximation.
pub fn zeta_deriv_minus1_remainder(h: f64, order: usize, cfg: &PrecisionConfig) -> Result<f64> {
    check_h("zeta_deriv_minus1_remainder", h)?;
    let terms = cfg.series_terms_max;
    if h >= cfg.recurrence_shift_threshold {
        return Ok(zeta_deriv_tail(h, order, terms));
    }
    let kept = zeta_deriv_tail(h, 0, order);
    Ok(hurwitz_zeta_deriv_minus1_with(h, cfg)? - zeta_deriv_minus1_asymptotic_base(h) - kept)
}

/// Radius below which the Bernoulli series replaces the closed integrand.
const INTEGRAND_SERIES_MAX: f64 = 2.0;

/// (1/(1−e^{−x}) − 1/x − ½ − x/12) / x², regular at x = 0.
pub(crate) fn binet_integrand(x: f64) -> f64 {
    if x < INTEGRAND_SERIES_MAX {
        // Σ_{k≥2} B_{2k} x^{2k−3} / (2k)!
        let x2 = x * x;
        let mut coef = 1.0 / 24.0; // 1/4!
        let mut pow = x;
        let mut sum = 0.0;
        for k in 2..=22usize {
            sum += bern(2 * k) * coef * pow;
            let kk = (2 * k) as f64;
            coef /= (kk + 1.0) * (kk + 2.0);
            pow *= x2;
        }
        sum
    } else {
        (-1.0 / (-x).exp_m1() - 1.0 / x - 0.5 - x / 12.0) / (x * x)
    }
}

/// ζ′(−1, h) from the integral representation
/// base(h) − ∫₀^∞ e^{−hx} (1/(1−e^{−x}) − 1/x − ½ − x/12) x^{−2} dx.
///
/// Independent of the asymptotic route apart from the Bernoulli table used
/// to evaluate the integrand near x = 0.
pub fn zeta_deriv_minus1_integral(h: f64, config: &QuadratureConfig) -> Result<f64> {
    check_h("zeta_deriv_minus1_integral", h)?;
    let integral =
        integrate_semi_infinite(|x| (-h * x).exp() * binet_integrand(x), 1.0 / h, config)?;
    Ok(zeta_deriv_minus1_asymptotic_base(h) - integral.value)
}

/// ζ′(0, h) = ln Γ(h) − ½ ln 2π (Lerch).
pub fn zeta_deriv_zero(h: f64) -> Result<f64> {
    check_h("zeta_deriv_zero", h)?;
    Ok(ln_gamma(h)? - HALF_LN_2PI)
}
