//! Adaptive Gauss–Kronrod quadrature on [0, ∞) for integrands damped like
//! exp(−t / scale).
//!
//! The half line is split at T = `tail_split · decay_scale`. The finite part
//! [0, T] and the mapped tail t = T − scale·ln u, u ∈ (0, 1], are bisected
//! adaptively from a single priority queue ordered by local error.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Settings for [`integrate_semi_infinite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// End of the finite panel, in units of the decay scale.
    pub tail_split: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            tail_split: 8.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::Config(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if !(self.tail_split > 0.0 && self.tail_split.is_finite()) {
            return Err(Error::Config("tail_split must be positive".into()));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::Config("max_subdivisions must be at least 1".into()));
        }
        Ok(())
    }
}

/// Integral estimate and its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

// 15-point Kronrod nodes on [0, 1] (symmetric), with the embedded 7-point
// Gauss rule on the odd-indexed nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    tail: bool,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One G7–K15 evaluation on [lo, hi]; returns (Kronrod value, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let eval = |x: f64| {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteIntegrand { at: x })
        }
    };
    let fc = eval(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = kronrod.abs();
    let mut fv = [(0.0, 0.0); 7];
    for (j, slot) in fv.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
        *slot = (f1, f2);
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for (j, (f1, f2)) in fv.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let abs_half = half.abs();
    let value = kronrod * half;
    res_abs *= abs_half;
    res_asc *= abs_half;
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((value, err))
}

/// ∫₀^∞ f(t) dt for integrands decaying like exp(−t/decay_scale) up to
/// polynomial factors, with at most a removable singularity at t = 0.
///
/// Returns [`Error::NoConvergence`] carrying the best estimate when
/// `max_subdivisions` bisections do not reach
/// `error ≤ max(abs_tol, rel_tol·|value|)`.
pub fn integrate_semi_infinite<F>(
    f: F,
    decay_scale: f64,
    config: &QuadratureConfig,
) -> Result<Integral>
where
    F: Fn(f64) -> f64,
{
    config.validate()?;
    if !(decay_scale > 0.0 && decay_scale.is_finite()) {
        return Err(Error::Config(format!(
            "decay_scale must be positive, got {decay_scale}"
        )));
    }
    let split = config.tail_split * decay_scale;
    let mapped = |u: f64| {
        let t = split - decay_scale * u.ln();
        let v = f(t);
        // e^{-t/scale} underflow times the 1/u Jacobian.
        if v == 0.0 {
            0.0
        } else {
            v * decay_scale / u
        }
    };
    let run = |p: &Panel| -> Result<(f64, f64)> {
        if p.tail {
            gk15(&mapped, p.lo, p.hi)
        } else {
            gk15(&f, p.lo, p.hi)
        }
    };

    let mut heap = BinaryHeap::new();
    for (lo, hi, tail) in [(0.0, split, false), (0.0, 1.0, true)] {
        let mut p = Panel {
            lo,
            hi,
            tail,
            value: 0.0,
            error: 0.0,
        };
        (p.value, p.error) = run(&p)?;
        heap.push(p);
    }

    let mut subdivisions = 0;
    loop {
        let (value, error) = heap
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        if error <= config.abs_tol.max(config.rel_tol * value.abs()) {
            return Ok(Integral {
                value,
                error_estimate: error,
                subdivisions,
            });
        }
        if subdivisions >= config.max_subdivisions {
            return Err(Error::NoConvergence {
                value,
                error,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        for (lo, hi) in [(worst.lo, mid), (mid, worst.hi)] {
            let mut p = Panel {
                lo,
                hi,
                tail: worst.tail,
                value: 0.0,
                error: 0.0,
            };
            (p.value, p.error) = run(&p)?;
            heap.push(p);
        }
        subdivisions += 1;
    }
}
