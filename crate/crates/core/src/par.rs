//! Data-parallel helpers. With the `parallel` feature these dispatch to rayon;
//! without it every [`Exec`] mode runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution mode for the batch loops of the crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this mode actually fans out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Ordered map over a slice.
pub fn map<T, U, F>(exec: Exec, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Ordered map over `0..n`.
pub fn map_range<U, F>(exec: Exec, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Map then fold with an associative `combine`. The result does not depend
/// on the split as long as `combine` is associative and commutative.
pub fn map_reduce<T, U, F, G>(exec: Exec, items: &[T], identity: fn() -> U, f: F, combine: G) -> U
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
    G: Fn(U, U) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).reduce(identity, combine);
    }
    let _ = exec;
    items.iter().map(f).fold(identity(), combine)
}
