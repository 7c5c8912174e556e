//! Uniform access to every counted family, for dispatch from the command
//! line.

use std::fmt;

use crate::chebyshev::{t_coeff_closed, u_coeff_closed};
use crate::compositions::{
    count_exactly_k_large, count_marked, count_minpart, count_weak_with_zeros, enumerate_exactly_k_large,
    enumerate_marked, enumerate_minpart, Composition,
};
use crate::error::{Error, Result};
use crate::exactmath::ExactInt;
use crate::exec::Exec;
use crate::hessenberg::{sum_principal_minors, HessFSpec};
use crate::insets::{count_insets_direct, enumerate_insets, enumerate_usequences, Inset, USequence};
use crate::limits::EnumLimits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Compositions of `n` with every part `>= p`.
    MinPart { n: usize, p: usize },
    /// Compositions of `n` with exactly `k` parts `p - 1`, the rest `>= p`.
    Marked { n: usize, k: usize, p: usize },
    /// Compositions of `total` with exactly `k` parts `>= a`.
    ExactLarge { total: usize, k: usize, a: usize },
    /// Weak compositions of `n` with exactly `k` zeros.
    WeakZeros { n: usize, k: usize },
    /// `(n+k)`-insets over `n` main blocks and `m` extra elements.
    Insets { n: usize, k: usize, m: usize },
    /// u(n,k,x)-sequences.
    USequences { n: usize, k: usize },
}

/// One enumerated object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Composition(Composition),
    USequence(USequence),
    Inset(Inset),
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Composition(c) => c.fmt(f),
            Item::USequence(s) => s.fmt(f),
            Item::Inset(z) => z.fmt(f),
        }
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::Domain(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::MinPart { p, .. } | FamilySpec::Marked { p, .. } => positive("p", p),
            FamilySpec::ExactLarge { a, .. } => positive("a", a),
            FamilySpec::WeakZeros { .. } => Ok(()),
            FamilySpec::Insets { n, k, m } => {
                positive("n", n)?;
                if k > n + m {
                    return Err(Error::Domain(format!("k = {k} exceeds n + m = {}", n + m)));
                }
                Ok(())
            }
            FamilySpec::USequences { n, k } => {
                positive("n", n)?;
                if k > n {
                    return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
                }
                Ok(())
            }
        }
    }

    pub fn count(&self) -> Result<ExactInt> {
        self.validate()?;
        match *self {
            FamilySpec::MinPart { n, p } => count_minpart(n, p),
            FamilySpec::Marked { n, k, p } => count_marked(n, k, p),
            FamilySpec::ExactLarge { total, k, a } => count_exactly_k_large(total, k, a),
            FamilySpec::WeakZeros { n, k } => Ok(count_weak_with_zeros(n, k)),
            FamilySpec::Insets { n, k, m } => count_insets_direct(n, k, m),
            FamilySpec::USequences { n, k } => count_insets_direct(n - 1, k, 1),
        }
    }

    pub fn enumerate(&self, limits: &EnumLimits) -> Result<Vec<Item>> {
        self.validate()?;
        let comps = |v: Vec<Composition>| v.into_iter().map(Item::Composition).collect();
        Ok(match *self {
            FamilySpec::MinPart { n, p } => comps(enumerate_minpart(n, p, limits)?),
            FamilySpec::Marked { n, k, p } => comps(enumerate_marked(n, k, p, limits)?),
            FamilySpec::ExactLarge { total, k, a } => comps(enumerate_exactly_k_large(total, k, a, limits)?),
            FamilySpec::WeakZeros { n, k } => comps(enumerate_marked(n, k, 1, limits)?),
            FamilySpec::Insets { n, k, m } => enumerate_insets(n, k, m, limits)?
                .into_iter()
                .map(Item::Inset)
                .collect(),
            FamilySpec::USequences { n, k } => {
                Error::guard("n", n, limits.total)?;
                enumerate_usequences(n, k).into_iter().map(Item::USequence).collect()
            }
        })
    }
}

/// Families that can be tabulated with rows `n` and columns `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    Insets { m: usize },
    Marked { p: usize },
    WeakZeros,
    USequences,
    /// `t_{n,k}`.
    ChebFirst,
    /// Coefficient of `x^(n-k)` in `U_{n+k}`.
    ChebSecond,
    /// Sum of the principal minors of order `n - k` of `F(n, p)`.
    MinorSums { p: usize },
}

impl TableFamily {
    /// Value at row `n`, column `k`, or `None` outside the family's domain.
    pub fn cell(&self, n: usize, k: usize) -> Result<Option<ExactInt>> {
        let v = match *self {
            TableFamily::Insets { m } => {
                if n == 0 || k > n + m {
                    return Ok(None);
                }
                count_insets_direct(n, k, m)?
            }
            TableFamily::Marked { p } => count_marked(n, k, p)?,
            TableFamily::WeakZeros => count_weak_with_zeros(n, k),
            TableFamily::USequences => {
                if n == 0 || k > n {
                    return Ok(None);
                }
                count_insets_direct(n - 1, k, 1)?
            }
            TableFamily::ChebFirst => {
                if k > n + 1 {
                    return Ok(None);
                }
                t_coeff_closed(n, k)?
            }
            TableFamily::ChebSecond => {
                if k > n {
                    return Ok(None);
                }
                u_coeff_closed(n, k)?
            }
            TableFamily::MinorSums { p } => {
                if k > n {
                    return Ok(None);
                }
                sum_principal_minors(HessFSpec::new(n, p)?, n - k, Exec::Sequential)?
            }
        };
        Ok(Some(v))
    }

    /// Rows `0..=max_n`, columns `0..=max_k`.
    pub fn table(&self, max_n: usize, max_k: usize) -> Result<Vec<Vec<Option<ExactInt>>>> {
        (0..=max_n)
            .map(|n| (0..=max_k).map(|k| self.cell(n, k)).collect())
            .collect()
    }
}
