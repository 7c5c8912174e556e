//! Chebyshev polynomials with exact integer coefficients, and closed forms
//! for their coefficients in terms of inset counts.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, pow2, sign_pow, ExactInt, IntPoly};
use crate::insets::count_insets_ie;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebKind {
    /// `T_n`: `T_0 = 1`, `T_1 = x`.
    First,
    /// `U_n`: `U_0 = 1`, `U_1 = 2x`.
    Second,
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChebKind::First => "first",
            ChebKind::Second => "second",
        })
    }
}

/// `P_0, ..., P_n` of the given kind, via `P_{j+1} = 2x P_j - P_{j-1}`.
pub fn cheb_sequence(kind: ChebKind, n: usize) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(IntPoly::constant(1));
    if n == 0 {
        return out;
    }
    out.push(match kind {
        ChebKind::First => IntPoly::from_i64s(&[0, 1]),
        ChebKind::Second => IntPoly::from_i64s(&[0, 2]),
    });
    let two = ExactInt::from(2);
    for j in 1..n {
        let mut next = out[j].shift().scale(&two);
        next.sub_assign_ref(&out[j - 1]);
        out.push(next);
    }
    out
}

pub fn cheb_poly(kind: ChebKind, n: usize) -> IntPoly {
    cheb_sequence(kind, n).pop().expect("sequence is never empty")
}

/// `t_{n,k}`, the coefficient of `x^(n-k+1)` in `T_{n+k+1}`, for
/// `0 <= k <= n + 1`.
///
/// `(-1)^k t_{n,k}` is evaluated twice: as the alternating binomial sum
/// counting insets with `m = 1`, and as `2^(n-k) [C(n,k) + 2 C(n,k-1)]`.
/// The two must agree.
pub fn t_coeff_closed(n: usize, k: usize) -> Result<ExactInt> {
    if k > n + 1 {
        return Err(Error::Domain(format!("k = {k} exceeds n + 1 = {}", n + 1)));
    }
    let alternating = count_insets_ie(n, k, 1);
    // 2^(n-k) C(n,k) vanishes when k = n + 1, so only the second term needs
    // the shifted exponent there.
    let mut bracket = binomial(n as i64, k as i64 - 1) * pow2(n + 1 - k);
    if k <= n {
        bracket += binomial(n as i64, k as i64) * pow2(n - k);
    }
    if alternating != bracket {
        return Err(Error::Consistency(format!(
            "closed forms for t({n},{k}) disagree: {alternating} vs {bracket}"
        )));
    }
    Ok(sign_pow(k) * bracket)
}

/// Coefficient of `x^(n-k)` in `U_{n+k}`: `(-1)^k 2^(n-k) C(n,k)`.
pub fn u_coeff_closed(n: usize, k: usize) -> Result<ExactInt> {
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }
    Ok(sign_pow(k) * pow2(n - k) * binomial(n as i64, k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly_coeff;

    #[test]
    fn polynomials() {
        assert_eq!(cheb_poly(ChebKind::First, 3), IntPoly::from_i64s(&[0, -3, 0, 4]));
        assert_eq!(cheb_poly(ChebKind::Second, 2), IntPoly::from_i64s(&[-1, 0, 4]));
        assert_eq!(cheb_poly(ChebKind::First, 0), IntPoly::constant(1));
        assert_eq!(cheb_poly(ChebKind::First, 4), IntPoly::from_i64s(&[1, 0, -8, 0, 8]));
        assert_eq!(cheb_poly(ChebKind::Second, 3), IntPoly::from_i64s(&[0, -4, 0, 8]));
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_coeff_closed(1, 1).unwrap(), (-3).into());
        assert_eq!(t_coeff_closed(2, 0).unwrap(), 4.into());
        assert_eq!(t_coeff_closed(2, 1).unwrap(), (-8).into());
        assert_eq!(t_coeff_closed(0, 1).unwrap(), (-1).into());
        assert!(t_coeff_closed(2, 4).is_err());
    }

    #[test]
    fn u_examples() {
        assert_eq!(u_coeff_closed(2, 0).unwrap(), 4.into());
        assert_eq!(u_coeff_closed(1, 1).unwrap(), (-1).into());
        assert_eq!(u_coeff_closed(3, 0).unwrap(), 8.into());
        assert!(u_coeff_closed(1, 2).is_err());
    }

    #[test]
    fn closed_forms_match_recurrence() {
        let t = cheb_sequence(ChebKind::First, 42);
        let u = cheb_sequence(ChebKind::Second, 40);
        for n in 0..=20 {
            for k in 0..=n + 1 {
                assert_eq!(poly_coeff(&t[n + k + 1], n + 1 - k), t_coeff_closed(n, k).unwrap());
            }
            for k in 0..=n {
                assert_eq!(poly_coeff(&u[n + k], n - k), u_coeff_closed(n, k).unwrap());
            }
        }
    }

    #[test]
    fn parity() {
        for (m, t) in cheb_sequence(ChebKind::First, 30).iter().enumerate() {
            for (i, c) in t.coeffs().iter().enumerate() {
                if (i + m) % 2 == 1 {
                    assert_eq!(*c, ExactInt::from(0), "T_{m} has x^{i}");
                }
            }
        }
    }
}
