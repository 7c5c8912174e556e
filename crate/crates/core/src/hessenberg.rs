//! Upper Hessenberg matrices with a `-1` subdiagonal.
//!
//! For such a matrix with upper entries `p[i][j]` (`i <= j`), the sequence
//! `a_1` given, `a_{m+1} = sum_{i <= m} p[i][m] a_i` ends in
//! `a_{n+1} = a_1 det P_n`. This works over any commutative ring, which is
//! how the characteristic polynomial of `F(n, p)` is computed over `Z[x]`.

use std::ops::{Add, Mul, Neg};

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::compositions::count_marked;
use crate::error::{Error, Result};
use crate::exactmath::{ExactInt, IntPoly};
use crate::exec::Exec;

/// Largest dimension for which matrices are materialized.
pub const MAX_DENSE_N: usize = 2000;

/// Largest dimension for which minor sums enumerate delete-sets.
pub const MAX_ENUM_MINOR_N: usize = 20;

/// Commutative ring with exact arithmetic.
pub trait Ring: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {}

impl<T> Ring for T where T: Clone + Zero + One + Add<Output = T> + Mul<Output = T> + Neg<Output = T> {}

/// Upper Hessenberg matrix with every subdiagonal entry `-1`. Only the
/// entries on and above the diagonal are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericHess<R> {
    // columns[j] holds p[0..=j][j], 0-based
    columns: Vec<Vec<R>>,
}

impl<R: Ring> GenericHess<R> {
    pub fn zeros(n: usize) -> Self {
        GenericHess {
            columns: (0..n).map(|j| vec![R::zero(); j + 1]).collect(),
        }
    }

    /// Builds the table from `f(i, j)` for 1-based `i <= j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> R) -> Self {
        GenericHess {
            columns: (1..=n).map(|j| (1..=j).map(|i| f(i, j)).collect()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    /// Entry `p[i][j]`, 1-based, `i <= j`.
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.columns[j - 1][i - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(1 <= i && i <= j && j <= self.dim(), "({i},{j}) is not an upper entry");
        self.columns[j - 1][i - 1] = v;
    }
}

/// Returns `(a_1, ..., a_{n+1})`. With `a1 = 1` the last element is the
/// determinant.
pub fn det_by_recurrence<R: Ring>(h: &GenericHess<R>, a1: R) -> Vec<R> {
    let mut a = Vec::with_capacity(h.dim() + 1);
    a.push(a1);
    for col in &h.columns {
        let next = col
            .iter()
            .zip(&a)
            .fold(R::zero(), |acc, (p, ai)| acc + p.clone() * ai.clone());
        a.push(next);
    }
    a
}

/// The `n x n` matrix `F(n, p)`: `-1` on the subdiagonal, `1` where the
/// column index exceeds the row index by at least `p - 1`, `0` elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HessFSpec {
    pub n: usize,
    pub p: usize,
}

impl HessFSpec {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::Domain("p must be positive".into()));
        }
        Ok(HessFSpec { n, p })
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j + 1 {
            -1
        } else if j + 1 >= i + self.p {
            1
        } else {
            0
        }
    }

    pub fn to_generic(&self) -> GenericHess<ExactInt> {
        GenericHess::from_fn(self.n, |i, j| ExactInt::from(self.entry(i, j)))
    }
}

pub type DenseMatrix = Vec<Vec<i64>>;

pub fn build_matrix(spec: HessFSpec) -> Result<DenseMatrix> {
    Error::guard("n", spec.n, MAX_DENSE_N)?;
    Ok((1..=spec.n)
        .map(|i| (1..=spec.n).map(|j| spec.entry(i, j)).collect())
        .collect())
}

/// `det F(0..=n, p)` by the two-term recurrence
/// `det F(m) = det F(m-1) + det F(m-p)` for `m > p`, with `det F(0) = 1`,
/// `det F(m) = 0` for `0 < m < p` and `det F(p) = 1`.
pub fn det_fnp_table(n: usize, p: usize) -> Result<Vec<ExactInt>> {
    if p == 0 {
        return Err(Error::Domain("p must be positive".into()));
    }
    let mut d: Vec<ExactInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let v = if m == 0 || m == p {
            ExactInt::one()
        } else if m < p {
            ExactInt::zero()
        } else {
            &d[m - 1] + &d[m - p]
        };
        d.push(v);
    }
    Ok(d)
}

pub fn det_fnp(n: usize, p: usize) -> Result<ExactInt> {
    Ok(det_fnp_table(n, p)?.pop().unwrap_or_default())
}

/// Exact determinant of a square integer matrix by fraction-free
/// (Bareiss) elimination.
pub fn bareiss_det(m: &[Vec<ExactInt>]) -> ExactInt {
    let n = m.len();
    if n == 0 {
        return ExactInt::one();
    }
    let mut a: Vec<Vec<ExactInt>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = ExactInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return ExactInt::zero();
            };
            a.swap(k, r);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Strictly increasing 1-based row/column indices to delete.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MinorIndexSet {
    deleted: Vec<usize>,
}

impl MinorIndexSet {
    pub fn new(deleted: Vec<usize>, n: usize) -> Result<Self> {
        if deleted.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invariant(format!("{deleted:?} is not strictly increasing")));
        }
        if deleted.first().is_some_and(|&i| i == 0) || deleted.last().is_some_and(|&i| i > n) {
            return Err(Error::Invariant(format!("{deleted:?} leaves the range 1..={n}")));
        }
        Ok(MinorIndexSet { deleted })
    }

    pub fn deleted(&self) -> &[usize] {
        &self.deleted
    }

    /// Sizes of the runs of kept indices, including empty runs at the ends
    /// and between adjacent deletions.
    pub fn gaps(&self, n: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.deleted.len() + 1);
        let mut prev = 0;
        for &i in &self.deleted {
            out.push(i - prev - 1);
            prev = i;
        }
        out.push(n - prev);
        out
    }
}

/// Determinant of the submatrix left after deleting `del`, computed by
/// elimination on the explicit submatrix.
pub fn principal_minor_direct(spec: HessFSpec, del: &MinorIndexSet) -> ExactInt {
    let kept: Vec<usize> = (1..=spec.n).filter(|i| del.deleted.binary_search(i).is_err()).collect();
    let sub: Vec<Vec<ExactInt>> = kept
        .iter()
        .map(|&i| kept.iter().map(|&j| ExactInt::from(spec.entry(i, j))).collect())
        .collect();
    bareiss_det(&sub)
}

/// The same minor as a product of `det F(gap, p)` over the kept runs:
/// deleting an index removes the subdiagonal `-1` that linked the runs on
/// either side, leaving a block upper-triangular matrix whose diagonal
/// blocks are copies of `F(gap, p)`.
pub fn principal_minor_factored(spec: HessFSpec, del: &MinorIndexSet, dets: &[ExactInt]) -> ExactInt {
    del.gaps(spec.n)
        .into_iter()
        .map(|g| dets[g].clone())
        .fold(ExactInt::one(), |acc, d| acc * d)
}

/// Principal minor by both methods; they must agree.
pub fn principal_minor(spec: HessFSpec, del: &MinorIndexSet) -> Result<ExactInt> {
    let dets = det_fnp_table(spec.n, spec.p)?;
    let direct = principal_minor_direct(spec, del);
    let factored = principal_minor_factored(spec, del, &dets);
    if direct != factored {
        return Err(Error::Consistency(format!(
            "minor {:?} of F({}, {}): elimination gives {direct}, block product gives {factored}",
            del.deleted, spec.n, spec.p
        )));
    }
    Ok(direct)
}

fn delete_sets(n: usize, k: usize) -> Vec<MinorIndexSet> {
    (1..=n)
        .combinations(k)
        .map(|deleted| MinorIndexSet { deleted })
        .collect()
}

fn check_order(spec: HessFSpec, order: usize) -> Result<usize> {
    if order > spec.n {
        return Err(Error::Domain(format!("order {order} exceeds n = {}", spec.n)));
    }
    Ok(spec.n - order)
}

/// Sum of all principal minors of the given order.
///
/// Up to [`MAX_ENUM_MINOR_N`] every delete-set is visited and its minor
/// taken as a block product. Larger matrices use the marked-composition
/// count `c(n + kp - 2k, k, p, p-1)` with `k = n - order` instead.
pub fn sum_principal_minors(spec: HessFSpec, order: usize, exec: Exec) -> Result<ExactInt> {
    let k = check_order(spec, order)?;
    if spec.n > MAX_ENUM_MINOR_N {
        return count_marked(spec.n + k * spec.p - 2 * k, k, spec.p);
    }
    let dets = det_fnp_table(spec.n, spec.p)?;
    let sets = delete_sets(spec.n, k);
    Ok(exec.sum(&sets, ExactInt::zero(), |d| principal_minor_factored(spec, d, &dets)))
}

/// Enumerated minor sum where every minor is computed by both methods.
pub fn sum_principal_minors_checked(spec: HessFSpec, order: usize, exec: Exec) -> Result<ExactInt> {
    let k = check_order(spec, order)?;
    Error::guard("n", spec.n, MAX_ENUM_MINOR_N)?;
    let dets = det_fnp_table(spec.n, spec.p)?;
    let sets = delete_sets(spec.n, k);
    let minors = exec.map(&sets, |d| {
        let direct = principal_minor_direct(spec, d);
        let factored = principal_minor_factored(spec, d, &dets);
        if direct == factored {
            Ok(direct)
        } else {
            Err(Error::Consistency(format!(
                "minor {:?} of F({}, {}): elimination gives {direct}, block product gives {factored}",
                d.deleted, spec.n, spec.p
            )))
        }
    });
    minors.into_iter().sum()
}

/// `F(n, p) - xI` over `Z[x]`; its subdiagonal is still `-1`.
pub fn shifted_generic(spec: HessFSpec) -> GenericHess<IntPoly> {
    GenericHess::from_fn(spec.n, |i, j| {
        let c = IntPoly::constant(spec.entry(i, j));
        if i == j {
            c - IntPoly::x()
        } else {
            c
        }
    })
}

fn charpoly_sign(n: usize, d: IntPoly) -> IntPoly {
    if n.is_multiple_of(2) {
        d
    } else {
        -d
    }
}

/// `det(xI - F(n, p))`, as `(-1)^n det(F - xI)` with the determinant taken
/// by [`det_by_recurrence`] on the full polynomial table.
pub fn charpoly_generic(spec: HessFSpec) -> Result<IntPoly> {
    Error::guard("n", spec.n, MAX_DENSE_N)?;
    let a = det_by_recurrence(&shifted_generic(spec), IntPoly::one());
    Ok(charpoly_sign(spec.n, a.into_iter().last().unwrap_or_else(IntPoly::one)))
}

/// `det(xI - F(n, p))`.
///
/// Same recurrence as [`charpoly_generic`], but column `m` of `F - xI` is
/// `1` in rows `1..=m-p+1` and `-x` added on the diagonal, so
/// `a_{m+1} = (a_1 + ... + a_{m-p+1}) - x a_m` and a running prefix sum
/// makes each step linear in the degree.
pub fn charpoly(spec: HessFSpec) -> Result<IntPoly> {
    Error::guard("n", spec.n, MAX_DENSE_N)?;
    let p = spec.p;
    let mut a: Vec<IntPoly> = vec![IntPoly::one()];
    // prefix[r] = a_1 + ... + a_r
    let mut prefix: Vec<IntPoly> = vec![IntPoly::zero(), IntPoly::one()];
    for m in 1..=spec.n {
        let mut next = if m + 1 > p {
            prefix[m + 1 - p].clone()
        } else {
            IntPoly::zero()
        };
        next.sub_assign_ref(&a[m - 1].shift());
        let mut s = prefix[m].clone();
        s.add_assign_ref(&next);
        prefix.push(s);
        a.push(next);
    }
    Ok(charpoly_sign(spec.n, a.pop().expect("a_1 is always present")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly_coeff;

    fn f(n: usize, p: usize) -> HessFSpec {
        HessFSpec::new(n, p).unwrap()
    }

    fn del(d: &[usize], n: usize) -> MinorIndexSet {
        MinorIndexSet::new(d.to_vec(), n).unwrap()
    }

    #[test]
    fn recurrence_small() {
        let mut h = GenericHess::zeros(1);
        h.set(1, 1, ExactInt::from(7));
        assert_eq!(det_by_recurrence(&h, ExactInt::one()), vec![1.into(), 7.into()]);

        let a = det_by_recurrence(&f(4, 2).to_generic(), ExactInt::one());
        assert_eq!(a.last().unwrap(), &ExactInt::from(2));
        for p in 1..8 {
            let a = det_by_recurrence(&f(p, p).to_generic(), ExactInt::one());
            assert_eq!(a.last().unwrap(), &ExactInt::one());
        }
    }

    #[test]
    fn recurrence_scales_with_a1() {
        let h = f(6, 2).to_generic();
        let a = det_by_recurrence(&h, ExactInt::from(5));
        assert_eq!(a[6], ExactInt::from(5) * det_fnp(6, 2).unwrap());
    }

    #[test]
    fn matrices() {
        assert_eq!(build_matrix(f(2, 1)).unwrap(), vec![vec![1, 1], vec![-1, 1]]);
        assert_eq!(
            build_matrix(f(3, 2)).unwrap(),
            vec![vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 0]]
        );
        assert!(build_matrix(f(0, 5)).unwrap().is_empty());
        assert!(build_matrix(f(2001, 1)).is_err());
        assert!(HessFSpec::new(3, 0).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(det_fnp(4, 2).unwrap(), 2.into());
        assert_eq!(det_fnp(0, 3).unwrap(), 1.into());
        for p in 1..10 {
            assert_eq!(det_fnp(p, p).unwrap(), 1.into());
        }
        for n in 1..40 {
            assert_eq!(det_fnp(n, 1).unwrap(), ExactInt::one() << (n - 1));
        }
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<ExactInt>> {
            rows.iter().map(|r| r.iter().map(|&v| v.into()).collect()).collect()
        };
        assert_eq!(bareiss_det(&m(&[&[0, 1], &[1, 0]])), (-1).into());
        assert_eq!(bareiss_det(&m(&[&[0, 1, 1], &[-1, 0, 1], &[0, -1, 0]])), 1.into());
        assert_eq!(bareiss_det(&m(&[&[1, 2], &[2, 4]])), 0.into());
        assert_eq!(bareiss_det(&[]), 1.into());
    }

    #[test]
    fn minor_examples() {
        let s = f(4, 2);
        assert_eq!(principal_minor(s, &del(&[1], 4)).unwrap(), 1.into());
        assert_eq!(principal_minor(s, &del(&[2], 4)).unwrap(), 0.into());
        assert_eq!(principal_minor(s, &del(&[], 4)).unwrap(), 2.into());
        assert_eq!(principal_minor(s, &del(&[1, 2, 3, 4], 4)).unwrap(), 1.into());
    }

    #[test]
    fn index_set_validation() {
        assert!(MinorIndexSet::new(vec![2, 2], 4).is_err());
        assert!(MinorIndexSet::new(vec![3, 1], 4).is_err());
        assert!(MinorIndexSet::new(vec![0], 4).is_err());
        assert!(MinorIndexSet::new(vec![5], 4).is_err());
        assert_eq!(del(&[2, 3], 5).gaps(5), vec![1, 0, 2]);
    }

    #[test]
    fn minor_sum_examples() {
        let s = f(4, 2);
        let sums: Vec<ExactInt> = (1..=4)
            .map(|o| sum_principal_minors_checked(s, o, Exec::Sequential).unwrap())
            .collect();
        assert_eq!(sums, vec![0.into(), 3.into(), 2.into(), 2.into()]);
        for o in 0..=4 {
            assert_eq!(
                sum_principal_minors(s, o, Exec::default()).unwrap(),
                sum_principal_minors_checked(s, o, Exec::default()).unwrap()
            );
        }
        assert!(sum_principal_minors(s, 5, Exec::Sequential).is_err());
    }

    #[test]
    fn minor_sum_large_n_uses_counting() {
        let s = f(24, 3);
        let sum = sum_principal_minors(s, 20, Exec::Sequential).unwrap();
        let cp = charpoly(s).unwrap();
        assert_eq!(poly_coeff(&cp, 4), sum);
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly(f(4, 2)).unwrap(), IntPoly::from_i64s(&[2, -2, 3, 0, 1]));
        assert_eq!(charpoly(f(1, 1)).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(charpoly(f(0, 2)).unwrap(), IntPoly::one());
        assert_eq!(charpoly(f(4, 2)).unwrap().to_string(), "x^4 + 3x^2 - 2x + 2");
    }

    #[test]
    fn charpoly_fast_matches_generic() {
        for n in 0..=30 {
            for p in 1..=5 {
                assert_eq!(charpoly(f(n, p)).unwrap(), charpoly_generic(f(n, p)).unwrap(), "n={n} p={p}");
            }
        }
    }
}
