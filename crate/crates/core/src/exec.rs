//! Sequential or data-parallel execution of independent work items.
//!
//! Every parallel site in the crate goes through [`Exec::map`], which keeps
//! output order identical to input order in both modes. Without the
//! `parallel` feature, [`Exec::Parallel`] silently runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Ordered map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Sum of `f` over a slice, starting from `zero`.
    pub fn sum<T, R, F>(self, items: &[T], zero: R, f: F) -> R
    where
        T: Sync,
        R: Send + Sync + Clone + std::ops::Add<Output = R>,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items
                .par_iter()
                .map(f)
                .reduce(|| zero.clone(), |a, b| a + b);
        }
        items.iter().map(f).fold(zero, |a, b| a + b)
    }
}
