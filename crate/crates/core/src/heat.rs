//! Heat-kernel trace on the diamond graph, two independent ways.
//!
//! Direct route (the oracle): the ladder structure gives
//!
//! ```text
//! K(t) = 2 theta(t) + sum_{k>=1} (2l)^k theta(t l^{2k}),
//! theta(t) = sum_{n>=1} exp(-pi^2 n^2 t),
//! ```
//!
//! zero mode excluded. Asymptotic route: the inverse Mellin transform over
//! the pole tower,
//!
//! ```text
//! K(t) ~ zeta_0 + A_s t^{-d_s/2} [ 1 + sum_{n>=1} Delta_{Re,n} cos(w_n ln t)
//!                                          + Delta_{Im,n} sin(w_n ln t) ],
//! ```
//!
//! with `w_n = n pi / ln(l)`. Because `zeta_R` vanishes at the negative even
//! integers there are no algebraic correction terms; for small `t` the two
//! routes differ only by exponentially small remainders.
//!
//! The diffusion-time symbol is `t` throughout; `s` is reserved for zeta
//! arguments.

use thiserror::Error;

use crate::graph::GraphSpec;
use crate::spectral_zeta::{pole_tower, PoleTower};
use crate::specfun::SpecFunError;

/// Smallest diffusion time the direct summation accepts; below this the
/// term count (which grows like `t^{-d_s/2}`) is better served by the
/// asymptotic route.
pub const MIN_DIRECT_TIME: f64 = 1e-8;

/// Hard ceiling on exponential evaluations in one direct-trace call.
const DIRECT_TERM_CAP: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, Error)]
pub enum HeatError {
    #[error("diffusion time must be positive, got {0}")]
    NonPositiveTime(f64),
    #[error("direct trace refuses t = {t} < {min}; use the asymptotic method there")]
    TimeTooSmall { t: f64, min: f64 },
    #[error("direct trace at t = {t} would need ~{terms} terms (cap {cap})")]
    ResourceExceeded { t: f64, terms: u64, cap: u64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceMethod {
    Direct,
    Asymptotic,
}

/// Trace value at one diffusion time, tagged with how it was obtained.
#[derive(Debug, Clone, Copy)]
pub struct HeatTraceResult {
    pub t: f64,
    pub value: f64,
    pub method: TraceMethod,
    /// Rigorous truncation bound for `Direct`; magnitude of the first
    /// omitted oscillatory order for `Asymptotic`.
    pub error_estimate: f64,
    /// Highest oscillatory order included (asymptotic method only).
    pub n_max_used: Option<usize>,
}

/// Dirichlet trace of the unit segment, `sum_{n>=1} exp(-pi^2 n^2 t)`,
/// to absolute accuracy `tol`. Summed smallest terms first.
pub fn theta_segment(t: f64, tol: f64) -> Result<f64, HeatError> {
    if t <= 0.0 {
        return Err(HeatError::NonPositiveTime(t));
    }
    Ok(theta_unchecked(t, tol.max(1e-300)))
}

fn theta_terms_needed(t: f64, tol: f64) -> u64 {
    let c = std::f64::consts::PI.powi(2) * t;
    // smallest N with the Gaussian tail e^{-c(N+1)^2}/(1 - e^{-c(2N+3)}) <= tol
    let mut n = ((-tol.ln()).max(0.0) / c).sqrt() as u64;
    loop {
        let n1 = (n + 1) as f64;
        let tail = (-c * n1 * n1).exp() / (-(-c * (2.0 * n1 + 1.0)).exp_m1());
        if tail <= tol {
            return n;
        }
        n += 1 + n / 10;
    }
}

fn theta_unchecked(t: f64, tol: f64) -> f64 {
    let c = std::f64::consts::PI.powi(2) * t;
    let n_max = theta_terms_needed(t, tol);
    let mut sum = 0.0;
    for n in (1..=n_max).rev() {
        sum += (-c * (n as f64) * (n as f64)).exp();
    }
    sum
}

/// Direct trace `2 theta(t) + sum_k (2l)^k theta(t l^{2k})` with total
/// absolute error at most `tol`. Levels are summed from the smallest scale
/// upward so the tiny terms accumulate first.
pub fn trace_direct(g: &GraphSpec, t: f64, tol: f64) -> Result<HeatTraceResult, HeatError> {
    if t <= 0.0 {
        return Err(HeatError::NonPositiveTime(t));
    }
    if t < MIN_DIRECT_TIME {
        return Err(HeatError::TimeTooSmall {
            t,
            min: MIN_DIRECT_TIME,
        });
    }
    let tol = tol.max(1e-300);
    let l = g.decimation() as f64;
    let pi2 = std::f64::consts::PI.powi(2);

    // Collect the levels that can contribute more than the tail budget.
    let mut levels: Vec<(f64, f64)> = Vec::new(); // (multiplicity, tau)
    let mut tail_bound = 0.0;
    let mut k = 0u32;
    loop {
        let tau = t * l.powi(2 * k as i32);
        let m = g.multiplicity(k);
        let theta_upper = (-pi2 * tau).exp() / (-(-3.0 * pi2 * tau).exp_m1());
        let cap = m * theta_upper;
        if cap < tol / 4.0 {
            // this level and all deeper ones are tail
            tail_bound += 2.0 * cap; // the level ratios fall off at least geometrically by 1/2 here
            break;
        }
        levels.push((m, tau));
        k += 1;
    }

    // Budget the per-level theta tolerance and check the term count.
    let n_levels = levels.len().max(1) as f64;
    let mut planned: u64 = 0;
    let mut per_level = Vec::with_capacity(levels.len());
    for &(m, tau) in &levels {
        let theta_tol = tol / (2.0 * n_levels * m);
        planned += theta_terms_needed(tau, theta_tol);
        per_level.push(theta_tol);
    }
    if planned > DIRECT_TERM_CAP {
        return Err(HeatError::ResourceExceeded {
            t,
            terms: planned,
            cap: DIRECT_TERM_CAP,
        });
    }

    let mut value = 0.0;
    let mut budget_used = tail_bound;
    for (i, &(m, tau)) in levels.iter().enumerate().rev() {
        value += m * theta_unchecked(tau, per_level[i]);
        budget_used += m * per_level[i];
    }
    Ok(HeatTraceResult {
        t,
        value,
        method: TraceMethod::Direct,
        error_estimate: budget_used,
        n_max_used: None,
    })
}

/// Pole-expansion trace through oscillatory order `n_max`.
pub fn trace_asymptotic(
    g: &GraphSpec,
    t: f64,
    n_max: usize,
) -> Result<HeatTraceResult, HeatError> {
    let tower = pole_tower(g, n_max + 1)?;
    trace_asymptotic_with(g, t, n_max, &tower)
}

/// Same as [`trace_asymptotic`] but reusing a precomputed tower (which must
/// hold at least `n_max + 1` orders for the error estimate).
pub fn trace_asymptotic_with(
    g: &GraphSpec,
    t: f64,
    n_max: usize,
    tower: &PoleTower,
) -> Result<HeatTraceResult, HeatError> {
    if t <= 0.0 {
        return Err(HeatError::NonPositiveTime(t));
    }
    let ln_t = t.ln();
    let w1 = std::f64::consts::PI / g.ln_l();
    let mut osc = 1.0;
    for n in 1..=n_max {
        let (sin_n, cos_n) = (w1 * n as f64 * ln_t).sin_cos();
        osc += tower.delta_re()[n] * cos_n + tower.delta_im()[n] * sin_n;
    }
    let scale = tower.spectral_area() * t.powf(-g.spectral_dim() / 2.0);
    let next = if tower.n_max() > n_max {
        tower.delta_re()[n_max + 1].hypot(tower.delta_im()[n_max + 1])
    } else {
        0.0
    };
    Ok(HeatTraceResult {
        t,
        value: tower.zeta0() + scale * osc,
        method: TraceMethod::Asymptotic,
        error_estimate: scale * next,
        n_max_used: Some(n_max),
    })
}

/// Trace of the infinitely dense (smooth segment) limit,
/// `-1/2 + t^{-1/2} / (2 sqrt(pi) ln 2)`.
pub fn smooth_limit_trace(t: f64) -> Result<f64, HeatError> {
    if t <= 0.0 {
        return Err(HeatError::NonPositiveTime(t));
    }
    Ok(-0.5 + limit_spectral_area() * t.powf(-0.5))
}

/// `l -> infinity` limit of the spectral area, `sqrt(pi)/(2 pi ln 2)`.
pub fn limit_spectral_area() -> f64 {
    std::f64::consts::PI.sqrt() / (2.0 * std::f64::consts::PI * std::f64::consts::LN_2)
}
