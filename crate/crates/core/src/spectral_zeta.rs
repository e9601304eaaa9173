//! Closed-form spectral zeta function of the diamond graph and its pole data.
//!
//! ```text
//! zeta(s) = 2 zeta_R(2s) pi^{-2s} (1 - l^{1-2s}) / (1 - l^{d_s - 2s})
//! ```
//!
//! with `l^{d_s} = 2l` exactly. The meromorphic continuation has a tower of
//! simple poles `s_n = d_s/2 + i pi n / ln(l)`; the residue data feed both
//! the heat-trace expansion and the entropy corrections:
//!
//! ```text
//! Delta_n = 2 [zeta_R(2 s_n) Gamma(s_n) pi^{-2 s_n}]
//!             / [zeta_R(2 s_0) Gamma(s_0) pi^{-2 s_0}]
//! ```
//!
//! The would-be pole of `zeta_R(2s)` at `s = 1/2` is removable (the bracket
//! numerator vanishes there); it is evaluated by a local series because the
//! direct product is a 0 * inf form.

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

use crate::graph::GraphSpec;
use crate::specfun::{self, riemann_zeta_complex, SpecFunError};

#[derive(Debug, Clone, Copy, Error)]
pub enum ZetaError {
    #[error("argument {s} is within 1e-10 of the pole s_{n}")]
    AtPole { s: Complex64, n: i64 },
    #[error("cancellation near a pole leaves no reliable digits at {s}")]
    PrecisionLoss { s: Complex64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Complex poles `s_n` up to `n_max` with their residue-derived
/// coefficients, plus the two constants of the trace expansion.
#[derive(Debug, Clone)]
pub struct PoleTower {
    s0: f64,
    poles: Vec<Complex64>,
    delta_re: Vec<f64>,
    delta_im: Vec<f64>,
    zeta0: f64,
    spectral_area: f64,
}

impl PoleTower {
    /// `d_s / 2`, the common real part of the tower.
    pub fn s0(&self) -> f64 {
        self.s0
    }

    /// Poles `s_0 .. s_{n_max}` (non-negative branch; `s_{-n}` is the
    /// conjugate).
    pub fn poles(&self) -> &[Complex64] {
        &self.poles
    }

    pub fn delta_re(&self) -> &[f64] {
        &self.delta_re
    }

    pub fn delta_im(&self) -> &[f64] {
        &self.delta_im
    }

    /// Constant trace term `zeta(0)`.
    pub fn zeta0(&self) -> f64 {
        self.zeta0
    }

    /// Spectral area `A_s`.
    pub fn spectral_area(&self) -> f64 {
        self.spectral_area
    }

    pub fn n_max(&self) -> usize {
        self.poles.len() - 1
    }
}

/// `s_n = d_s/2 + i pi n / ln(l)`.
pub fn pole(g: &GraphSpec, n: i64) -> Complex64 {
    Complex64::new(g.spectral_dim() / 2.0, PI * n as f64 / g.ln_l())
}

/// Closed-form spectral zeta at complex `s`.
///
/// Errors at the tower poles; near `s = 1/2` the removable singularity is
/// evaluated by a third-order local expansion.
pub fn zeta_closed(g: &GraphSpec, s: Complex64) -> Result<Complex64, ZetaError> {
    let ds = g.spectral_dim();
    let ln_l = g.ln_l();
    // Distance to the nearest pole s_n.
    let n_near = (s.im * ln_l / PI).round();
    let nearest = Complex64::new(ds / 2.0, PI * n_near / ln_l);
    if (s - nearest).norm() < 1e-10 {
        return Err(ZetaError::AtPole {
            s,
            n: n_near as i64,
        });
    }

    let w = s - 0.5;
    let two_l = 2.0 * g.decimation() as f64;
    // denominator 1 - l^{d_s - 2s} = 1 - 2l e^{-2 s ln l}, via expm1 so the
    // cancellation near the poles is the true analytic one.
    let denom = -cexpm1_shifted(two_l.ln() - 2.0 * s.re * ln_l, -2.0 * s.im * ln_l);
    if denom.norm() < 1e-6 {
        return Err(ZetaError::PrecisionLoss { s });
    }

    let pi_term = (-2.0 * s * PI.ln()).exp();
    if w.norm() < 1e-4 {
        // zeta_R(2s) (1 - l^{1-2s}) is 0 * inf at s = 1/2; its product
        // expands as P(w) below (gamma_k are Stieltjes constants).
        let g0 = specfun::STIELTJES[0];
        let g1 = specfun::STIELTJES[1];
        let g2 = specfun::STIELTJES[2];
        let p = Complex64::new(ln_l, 0.0)
            + w * (2.0 * g0 * ln_l - ln_l.powi(2))
            + w * w * (2.0 / 3.0 * ln_l.powi(3) - 2.0 * g0 * ln_l.powi(2) - 4.0 * g1 * ln_l)
            + w * w
                * w
                * (-ln_l.powi(4) / 3.0
                    + 4.0 / 3.0 * g0 * ln_l.powi(3)
                    + 4.0 * g1 * ln_l.powi(2)
                    + 4.0 * g2 * ln_l);
        return Ok(2.0 * pi_term * p / denom);
    }

    let zr = riemann_zeta_complex(2.0 * s)?;
    // numerator 1 - l^{1-2s}
    let num = -cexpm1_shifted((1.0 - 2.0 * s.re) * ln_l, -2.0 * s.im * ln_l);
    Ok(2.0 * zr * pi_term * num / denom)
}

/// exp(a + ib) - 1 without cancellation for small arguments.
fn cexpm1_shifted(a: f64, b: f64) -> Complex64 {
    let em1 = a.exp_m1();
    let (sin_b, cos_b) = b.sin_cos();
    let half = (b / 2.0).sin();
    Complex64::new(em1 * cos_b - 2.0 * half * half, (em1 + 1.0) * sin_b)
}

/// Constant term of the trace expansion,
/// `zeta_R(0) (2 - l^{d_s})/(1 - l^{d_s})` with `l^{d_s} = 2l` exact.
pub fn zeta_zero(g: &GraphSpec) -> f64 {
    let two_l = 2.0 * g.decimation() as f64;
    -0.5 * (2.0 - two_l) / (1.0 - two_l)
}

/// Spectral area
/// `A_s = zeta_R(d_s) Gamma(d_s/2) / (2 ln(l) pi^{d_s})`.
pub fn spectral_area(g: &GraphSpec) -> f64 {
    let ds = g.spectral_dim();
    let zr = specfun::zeta_real(ds).expect("d_s in (1,2) is regular for zeta");
    let ga = specfun::gamma_real(ds / 2.0).expect("d_s/2 in (0.5,1) is regular for gamma");
    zr * ga / (2.0 * g.ln_l() * PI.powf(ds))
}

/// Pole tower with residue coefficients for `n = 0 ..= n_max`.
///
/// `Delta_{Re,0} = 2` and `Delta_{Im,0} = 0` hold exactly; for `n >= 1` the
/// magnitudes fall off like `exp(-pi^2 n / (2 ln l))` through the Gamma
/// factor.
pub fn pole_tower(g: &GraphSpec, n_max: usize) -> Result<PoleTower, SpecFunError> {
    let s0 = g.spectral_dim() / 2.0;
    let base = reference_residue_factor(g)?;
    let mut poles = Vec::with_capacity(n_max + 1);
    let mut delta_re = Vec::with_capacity(n_max + 1);
    let mut delta_im = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let sn = pole(g, n as i64);
        poles.push(sn);
        if n == 0 {
            delta_re.push(2.0);
            delta_im.push(0.0);
            continue;
        }
        let d = residue_delta(sn, base)?;
        delta_re.push(d.re);
        delta_im.push(d.im);
    }
    Ok(PoleTower {
        s0,
        poles,
        delta_re,
        delta_im,
        zeta0: zeta_zero(g),
        spectral_area: spectral_area(g),
    })
}

/// `zeta_R(2 s_0) Gamma(s_0) pi^{-2 s_0}` — the n = 0 residue factor all
/// `Delta_n` are normalized by.
fn reference_residue_factor(g: &GraphSpec) -> Result<f64, SpecFunError> {
    let s0 = g.spectral_dim() / 2.0;
    Ok(specfun::zeta_real(2.0 * s0)? * specfun::gamma_real(s0)? * PI.powf(-2.0 * s0))
}

/// `Delta(s_n) = 2 zeta_R(2 s_n) Gamma(s_n) pi^{-2 s_n} / base`, usable for
/// either sign of `n` (conjugate poles give conjugate values).
pub(crate) fn residue_delta(sn: Complex64, base: f64) -> Result<Complex64, SpecFunError> {
    let zr = riemann_zeta_complex(2.0 * sn)?;
    let ga = specfun::gamma_complex(sn)?;
    let pi_ratio = (-2.0 * sn * PI.ln()).exp();
    Ok(2.0 * zr * ga * pi_ratio / base)
}

/// Residue coefficient for a signed order; `n < 0` addresses the conjugate
/// pole, so `Delta(-n) = conj(Delta(n))` up to evaluation noise.
pub fn residue_pair_delta(g: &GraphSpec, n: i64) -> Result<Complex64, SpecFunError> {
    let base = reference_residue_factor(g)?;
    residue_delta(pole(g, n), base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn g3() -> GraphSpec {
        GraphSpec::new(3).unwrap()
    }

    fn closed_real(g: &GraphSpec, s: f64) -> f64 {
        let v = zeta_closed(g, Complex64::new(s, 0.0)).unwrap();
        assert!(v.im.abs() < 1e-14 * v.re.abs().max(1.0));
        v.re
    }

    #[test]
    fn rational_values_at_integer_s() {
        assert_relative_eq!(closed_real(&g3(), 1.0), 2.0 / 3.0, max_relative = 1e-13);
        assert_relative_eq!(closed_real(&g3(), 2.0), 26.0 / 1125.0, max_relative = 1e-13);
    }

    #[test]
    fn smooth_limit_bracket_below_half() {
        // At s = 1/4 the bracket tends to 1/2 for large l, so zeta tends to
        // the segment value zeta_R(1/2)/sqrt(pi) (times 2 * 1/2).
        let g = GraphSpec::new(1_000_000).unwrap();
        let v = closed_real(&g, 0.25);
        assert_relative_eq!(v, -0.82350463767404863, max_relative = 1e-11);
        let bracket = v / (2.0 * (-1.4603545088095868) / PI.sqrt());
        assert!((bracket - 0.5).abs() < 1e-3, "bracket = {bracket}");
        assert_relative_eq!(bracket, 0.49974987493746873, max_relative = 1e-10);
    }

    #[test]
    fn removable_singularity_at_half() {
        let g = g3();
        // Continuity across s = 1/2.
        let lo = closed_real(&g, 0.5 - 1e-4);
        let hi = closed_real(&g, 0.5 + 1e-4);
        assert!(((hi - lo) / lo).abs() < 1e-3);
        assert_relative_eq!(hi, -0.69954948059961044, max_relative = 1e-10);
        assert_relative_eq!(lo, -0.69924722741825367, max_relative = 1e-10);
        // The local series and the direct route agree where they hand over.
        let series = closed_real(&g, 0.5 + 0.99e-4);
        let direct = closed_real(&g, 0.5 + 1.01e-4);
        assert!(((direct - series) / series).abs() < 1e-5);
    }

    #[test]
    fn pole_rejection_and_precision_guard() {
        let g = g3();
        let s1 = pole(&g, 1);
        assert!(matches!(
            zeta_closed(&g, s1),
            Err(ZetaError::AtPole { n: 1, .. })
        ));
        assert!(matches!(
            zeta_closed(&g, s1 + Complex64::new(5e-11, 0.0)),
            Err(ZetaError::AtPole { .. })
        ));
        // Slightly further out: no pole error, but cancellation guard.
        assert!(matches!(
            zeta_closed(&g, s1 + Complex64::new(1e-8, 0.0)),
            Err(ZetaError::PrecisionLoss { .. })
        ));
        // Well away from the pole everything is fine.
        assert!(zeta_closed(&g, s1 + Complex64::new(0.1, 0.0)).is_ok());
    }

    #[test]
    fn pole_locations_and_zero_order_deltas() {
        let g = g3();
        let tower = pole_tower(&g, 3).unwrap();
        assert_eq!(tower.n_max(), 3);
        let s1 = tower.poles()[1];
        assert_relative_eq!(s1.re, 0.81546487678572872, max_relative = 1e-14);
        assert_relative_eq!(s1.im, 2.8596008673801273, max_relative = 1e-14);
        assert_eq!(tower.delta_re()[0], 2.0);
        assert_eq!(tower.delta_im()[0], 0.0);
        assert_eq!(tower.s0(), g.spectral_dim() / 2.0);
        // every pole sits on Re = d_s/2
        for p in tower.poles() {
            assert_relative_eq!(p.re, g.spectral_dim() / 2.0);
        }
    }

    #[test]
    fn pinned_residue_coefficients() {
        // Reference values from a 25-digit independent evaluation.
        let tower = pole_tower(&g3(), 2).unwrap();
        assert_relative_eq!(
            tower.delta_re()[1],
            0.023377374939617970,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            tower.delta_im()[1],
            0.015042935679770921,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            tower.delta_re()[2],
            -0.00033577155414218633,
            max_relative = 1e-9
        );
        assert_relative_eq!(
            tower.delta_im()[2],
            -0.00034951256725938106,
            max_relative = 1e-9
        );
        let t5 = pole_tower(&GraphSpec::new(5).unwrap(), 1).unwrap();
        assert_relative_eq!(t5.delta_re()[1], 0.0016168889896293239, max_relative = 1e-9);
        assert_relative_eq!(t5.delta_im()[1], 0.052885492113417428, max_relative = 1e-9);
    }

    #[test]
    fn delta_magnitudes_decay_in_order() {
        for l in [3u32, 5, 10, 100] {
            let tower = pole_tower(&GraphSpec::new(l).unwrap(), 9).unwrap();
            let mags: Vec<f64> = (1..=9)
                .map(|n| tower.delta_re()[n].hypot(tower.delta_im()[n]))
                .collect();
            for pair in mags.windows(2) {
                assert!(pair[1] < pair[0], "l={l}: {mags:?}");
            }
        }
    }

    #[test]
    fn conjugate_poles_give_conjugate_deltas() {
        let g = g3();
        for n in 1..=4 {
            let plus = residue_pair_delta(&g, n).unwrap();
            let minus = residue_pair_delta(&g, -n).unwrap();
            assert_relative_eq!(plus.re, minus.re, max_relative = 1e-12);
            assert_relative_eq!(plus.im, -minus.im, max_relative = 1e-12);
        }
    }

    #[test]
    fn zeta_zero_rationals_and_limit() {
        assert_eq!(zeta_zero(&g3()), -0.4);
        assert_relative_eq!(
            zeta_zero(&GraphSpec::new(5).unwrap()),
            -4.0 / 9.0,
            max_relative = 1e-15
        );
        let far = zeta_zero(&GraphSpec::new(100_000_000).unwrap());
        assert!((far + 0.5).abs() < 1e-8);
    }

    #[test]
    fn spectral_area_pins_and_positivity() {
        assert_relative_eq!(
            spectral_area(&g3()),
            0.17807943126211614,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            spectral_area(&GraphSpec::new(100_000_000).unwrap()),
            0.38420734733133015,
            max_relative = 1e-10
        );
        for l in [3u32, 7, 19, 140, 9000] {
            assert!(spectral_area(&GraphSpec::new(l).unwrap()) > 0.0);
        }
    }
}
