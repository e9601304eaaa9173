//! Grid evaluation, parallel when the `parallel` feature is on.
//!
//! Every per-point computation in this crate is pure, so sweeps over `l`,
//! `t` or `epsilon` grids are embarrassingly parallel. `map_collect`
//! preserves input order, which keeps CSV output byte-identical across
//! thread schedules; `map_collect_seq` is the always-available sequential
//! path (also what the benches compare against).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Sequential reference path.
pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
