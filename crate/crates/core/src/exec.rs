//! Execution strategy for the exhaustive scans: data-parallel via rayon when
//! the `parallel` feature is enabled, plain loops otherwise. `Parallel`
//! degrades to sequential when the feature is off, so callers can request it
//! unconditionally.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

pub fn map<T, R, F>(mode: Exec, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    match mode {
        Exec::Sequential => items.into_iter().map(f).collect(),
        Exec::Parallel => par_map(items, f),
    }
}

/// First Some(_) in iteration order over `range`; deterministic in both modes.
pub fn find_map_first<R, F>(mode: Exec, range: std::ops::Range<u64>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Send + Sync,
{
    match mode {
        Exec::Sequential => range.into_iter().find_map(f),
        Exec::Parallel => par_find_map_first(range, f),
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
fn par_find_map_first<R, F>(range: std::ops::Range<u64>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Send + Sync,
{
    use rayon::prelude::*;
    range.into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
fn par_find_map_first<R, F>(range: std::ops::Range<u64>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Send + Sync,
{
    range.into_iter().find_map(f)
}
