//! Riemann zeta on the strip the graph formulas probe.
//!
//! Three regimes:
//! * `|z - 1| < 0.1` — Laurent expansion around the pole in Stieltjes
//!   constants (no cancellation, exact near-pole behavior),
//! * `Re z > 0` — accelerated alternating series (Borwein's d_k scheme)
//!   through the eta function; where the eta prefactor `1 - 2^{1-z}`
//!   itself nearly vanishes (z near `1 + 2 pi i k / ln 2`) the division
//!   would amplify noise, so an Euler-Maclaurin evaluation takes over,
//! * `Re z <= 0` — functional equation off the `Re z > 0` evaluations.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma_complex;
use super::{ensure_finite, SpecFunError};

/// Stieltjes constants gamma_0 .. gamma_9 (gamma_0 is Euler-Mascheroni).
pub(crate) const STIELTJES: [f64; 10] = [
    0.57721566490153286,
    -0.072815845483676725,
    -0.0096903631928723185,
    0.0020538344203033459,
    0.0023253700654673001,
    0.00079332381730106270,
    -0.00023876934543019961,
    -0.00052728956705775105,
    -0.00035212335380303951,
    -3.4394774418088048e-5,
];

const BERNOULLI_2K: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const LN_ACCEL: f64 = 1.762747174039086; // ln(3 + sqrt 8)

/// Riemann zeta function.
///
/// Accurate to ~1e-13 relative on `|Im z| <= 40` away from `z = 1`; the
/// near-pole region `|z - 1| < 0.1` is served by the Laurent expansion and
/// stays accurate down to `|z - 1| = 1e-6` and beyond. Arguments within
/// 1e-12 of `z = 1` are rejected.
pub fn riemann_zeta_complex(z: Complex64) -> Result<Complex64, SpecFunError> {
    let w = z - 1.0;
    if w.norm() < 1e-12 {
        return Err(SpecFunError::ZetaPole);
    }
    if w.norm() < 0.1 {
        return ensure_finite(laurent_near_one(w), z);
    }
    if z.re > 0.0 {
        return ensure_finite(zeta_right_half(z), z);
    }
    // Functional equation: zeta(z) = 2^z pi^{z-1} sin(pi z/2) Gamma(1-z) zeta(1-z).
    let one_minus = Complex64::new(1.0, 0.0) - z;
    // Near z = 0 the sin zero meets the zeta(1-z) pole; the product
    // sin(pi z/2) zeta(1-z) -> -pi/2 there, handled through the Laurent
    // form so no 0 * inf appears.
    let sin_times_tail = if z.norm() < 0.1 {
        if z.norm() < 1e-14 {
            Complex64::new(-PI / 2.0, 0.0)
        } else {
            (z * PI / 2.0).sin() * laurent_near_one(-z)
        }
    } else {
        (z * PI / 2.0).sin() * zeta_right_half(one_minus)
    };
    let gamma = gamma_complex(one_minus)?;
    let prefactor = (z * 2.0_f64.ln()).exp() * ((z - 1.0) * PI.ln()).exp();
    ensure_finite(prefactor * gamma * sin_times_tail, z)
}

/// Laurent expansion `1/(z-1) + sum_n (-1)^n gamma_n (z-1)^n / n!`, valid on
/// the annulus `0 < |z - 1| < 0.25`.
pub fn zeta_near_one(z: Complex64) -> Result<Complex64, SpecFunError> {
    let w = z - 1.0;
    let r = w.norm();
    if r <= 0.0 || r >= 0.25 {
        return Err(SpecFunError::OutsideNearOneAnnulus(z));
    }
    ensure_finite(laurent_near_one(w), z)
}

pub(crate) fn laurent_near_one(w: Complex64) -> Complex64 {
    let mut acc = w.inv();
    let mut wn = Complex64::new(1.0, 0.0);
    let mut factorial = 1.0;
    let mut sign = 1.0;
    for (n, &g) in STIELTJES.iter().enumerate() {
        if n > 0 {
            wn *= w;
            factorial *= n as f64;
        }
        acc += sign * g / factorial * wn;
        sign = -sign;
    }
    acc
}

fn zeta_right_half(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    // 1 - 2^{1-z} vanishes on Re z = 1 at Im z = 2 pi k / ln 2; dividing by a
    // tiny eta prefactor would amplify the series error, so switch method.
    let eta_prefactor = -cexpm1((Complex64::new(1.0, 0.0) - z) * 2.0_f64.ln());
    if eta_prefactor.norm() < 0.01 {
        euler_maclaurin(z)
    } else {
        borwein(z, eta_prefactor)
    }
}

fn borwein_terms(im: f64) -> usize {
    let need = 16.0 * std::f64::consts::LN_10 + PI * im.abs() / 2.0 + (1.0 + 2.0 * im.abs()).ln();
    ((need / LN_ACCEL) as usize + 4).clamp(24, 160)
}

/// Borwein's algorithm 2 for eta(z)/(1 - 2^{1-z}).
#[allow(clippy::needless_range_loop)]
fn borwein(z: Complex64, eta_prefactor: Complex64) -> Complex64 {
    let n = borwein_terms(z.im);
    // d_k = n * sum_{j<=k} (n+j-1)! 4^j / ((n-j)! (2j)!), built by term ratios.
    let mut d = vec![0.0_f64; n + 1];
    let nf = n as f64;
    let mut term = 1.0 / nf;
    let mut acc = term;
    d[0] = nf * acc;
    for j in 1..=n {
        let jf = j as f64;
        term *= (nf + jf - 1.0) * 4.0 * (nf - jf + 1.0) / ((2.0 * jf - 1.0) * (2.0 * jf));
        acc += term;
        d[j] = nf * acc;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for (k, &dk) in d.iter().take(n).enumerate() {
        // (k+1)^{-z}
        let p = (-z * ((k + 1) as f64).ln()).exp();
        sum += sign * (dk - d[n]) * p;
        sign = -sign;
    }
    -sum / (d[n] * eta_prefactor)
}

/// Euler-Maclaurin with N >= 60 abscissae and ten Bernoulli corrections.
fn euler_maclaurin(z: Complex64) -> Complex64 {
    let n = 60.max((2.0 * z.im.abs()) as usize + 20);
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in (1..=n).rev() {
        sum += (-z * (k as f64).ln()).exp();
    }
    let npow = (-z * nf.ln()).exp(); // N^{-z}
    sum += npow * nf / (z - 1.0);
    sum -= 0.5 * npow;
    let mut pochhammer = z;
    let mut factorial = 2.0;
    let n2 = nf * nf;
    let mut scale = npow / nf;
    for (k, &b) in BERNOULLI_2K.iter().enumerate() {
        sum += b / factorial * pochhammer * scale;
        let k2 = 2.0 * (k + 1) as f64;
        pochhammer *= (z + (k2 - 1.0)) * (z + k2);
        factorial *= (k2 + 1.0) * (k2 + 2.0);
        scale /= n2;
    }
    sum
}

/// exp(z) - 1 without cancellation for small z.
pub(crate) fn cexpm1(z: Complex64) -> Complex64 {
    let em1 = z.re.exp_m1();
    let (sin_b, cos_b) = z.im.sin_cos();
    let half = (z.im / 2.0).sin();
    Complex64::new(em1 * cos_b - 2.0 * half * half, (em1 + 1.0) * sin_b)
}
