//! Small adaptive Simpson integrator for the smooth, exponentially damped
//! integrands of the entropy oracle.

#[derive(Debug, Clone, Copy)]
pub(crate) struct QuadFailure {
    pub at: f64,
    pub requested: f64,
    pub achieved: f64,
}

/// Integrates `f` over `[a, b]` to absolute accuracy `tol`.
pub(crate) fn adaptive_simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, QuadFailure> {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, QuadFailure> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(QuadFailure {
            at: m,
            requested: tol,
            achieved: delta.abs() / 15.0,
        });
    }
    let half_tol = 0.5 * tol;
    Ok(
        simpson_step(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?
            + simpson_step(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_damped_oscillation() {
        // int_0^inf e^{-x} cos(5x) dx = 1/26
        let f = |x: f64| (-x).exp() * (5.0 * x).cos();
        let mut total = 0.0;
        let mut a = 0.0;
        while a < 40.0 {
            total += adaptive_simpson(&f, a, a + 0.5, 1e-13).unwrap();
            a += 0.5;
        }
        assert!((total - 1.0 / 26.0).abs() < 1e-11);
    }
}
