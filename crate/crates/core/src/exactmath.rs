//! Exact integers, binomial coefficients and dense integer polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer used for every count and determinant.
pub type ExactInt = BigInt;

/// `C(n, k)`, or zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if n < 0 || k < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `2^e` as an exact integer.
pub fn pow2(e: usize) -> ExactInt {
    ExactInt::one() << e
}

/// `(-1)^e`.
pub fn sign_pow(e: usize) -> ExactInt {
    if e.is_multiple_of(2) {
        ExactInt::one()
    } else {
        -ExactInt::one()
    }
}

/// Dense polynomial over the integers; `coeffs[i]` is the coefficient of
/// `x^i`. The highest stored coefficient is never zero, so the zero
/// polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<ExactInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<ExactInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<ExactInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactInt> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> ExactInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Multiplies by `x`.
    pub fn shift(&self) -> Self {
        if self.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &ExactInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add_assign_ref(&mut self, other: &IntPoly) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), ExactInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.trim();
    }

    pub fn sub_assign_ref(&mut self, other: &IntPoly) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), ExactInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

/// Exact product of two polynomials.
pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return IntPoly::default();
    }
    let mut out = vec![ExactInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    IntPoly::new(out)
}

/// Coefficient of `x^i` in `p`.
pub fn poly_coeff(p: &IntPoly, i: usize) -> ExactInt {
    p.coeff(i)
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        poly_mul(&self, &rhs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        poly_mul(self, rhs)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        IntPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        IntPoly::constant(1)
    }
}

impl From<ExactInt> for IntPoly {
    fn from(c: ExactInt) -> Self {
        IntPoly::constant(c)
    }
}

/// Descending powers, e.g. `x^4 + 3x^2 - 2x + 2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(5, 2), ExactInt::from(10));
        assert_eq!(binomial(3, -1), ExactInt::zero());
        assert_eq!(binomial(0, 0), ExactInt::one());
        assert_eq!(binomial(3, 4), ExactInt::zero());
        assert_eq!(binomial(-2, 1), ExactInt::zero());
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn pascal_identity() {
        for n in 1..=64 {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(poly_mul(&p(&[1, 1]), &p(&[-1, 1])), p(&[-1, 0, 1]));
        assert_eq!(poly_mul(&IntPoly::zero(), &p(&[3, 4, 5])), IntPoly::zero());
        assert_eq!(poly_mul(&p(&[0, 2]), &p(&[-1, 0, 2])), p(&[0, -2, 0, 4]));
    }

    #[test]
    fn coeff_examples() {
        let t3 = p(&[0, -3, 0, 4]);
        assert_eq!(poly_coeff(&t3, 1), ExactInt::from(-3));
        assert_eq!(poly_coeff(&t3, 2), ExactInt::zero());
        assert_eq!(poly_coeff(&IntPoly::zero(), 5), ExactInt::zero());
    }

    #[test]
    fn canonical_form_trims() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!((p(&[0, 1]) - p(&[0, 1])).coeffs().len(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, -2, 3, 0, 1]).to_string(), "x^4 + 3x^2 - 2x + 2");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, -1]).to_string(), "-x^2 + 1");
        assert_eq!(p(&[0, -3, 0, 4]).to_string(), "4x^3 - 3x");
    }
}
