//! Insets of a blocked ground set and their u-sequence labels.
//!
//! The ground set has `n` main blocks of two elements each and one
//! additional block `Y` of `m` elements. An `(n+k)`-inset is an
//! `(n+k)`-subset that meets every main block.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, pow2, ExactInt};
use crate::limits::EnumLimits;

/// Shape of the ground set: `n` two-element main blocks plus an additional
/// block of `m` elements. `n = 0` is accepted and leaves only `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSetSpec {
    pub n: usize,
    pub m: usize,
}

impl BlockSetSpec {
    pub fn ground_size(self) -> usize {
        2 * self.n + self.m
    }
}

/// What an inset takes from one main block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pick {
    First,
    Second,
    Both,
}

/// A subset meeting every main block, stored per block so that an empty
/// pick cannot be expressed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inset {
    main: Vec<Pick>,
    extra: Vec<bool>,
}

impl Inset {
    /// `extra[j]` says whether the `j`-th element of `Y` is taken; its
    /// length is `m`.
    pub fn new(main: Vec<Pick>, extra: Vec<bool>) -> Self {
        Inset { main, extra }
    }

    pub fn main(&self) -> &[Pick] {
        &self.main
    }

    pub fn extra(&self) -> &[bool] {
        &self.extra
    }

    /// Indices in `[0, m)` of the taken `Y` elements.
    pub fn extra_indices(&self) -> Vec<usize> {
        self.extra
            .iter()
            .enumerate()
            .filter_map(|(j, &b)| b.then_some(j))
            .collect()
    }

    pub fn spec(&self) -> BlockSetSpec {
        BlockSetSpec {
            n: self.main.len(),
            m: self.extra.len(),
        }
    }

    /// Surplus over one element per main block.
    pub fn k(&self) -> usize {
        self.main.iter().filter(|&&p| p == Pick::Both).count()
            + self.extra.iter().filter(|&&b| b).count()
    }

    pub fn size(&self) -> usize {
        self.main.len() + self.k()
    }

    /// Ground-set indices of the selected elements: block `i` owns `2i` and
    /// `2i + 1`, and `Y` starts at `2n`.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for (i, p) in self.main.iter().enumerate() {
            match p {
                Pick::First => out.push(2 * i),
                Pick::Second => out.push(2 * i + 1),
                Pick::Both => out.extend([2 * i, 2 * i + 1]),
            }
        }
        let base = 2 * self.main.len();
        out.extend(self.extra_indices().into_iter().map(|j| base + j));
        out
    }

    /// Inverse of [`Inset::elements`]; fails if some main block is missed.
    pub fn from_elements(spec: BlockSetSpec, elems: &[usize]) -> Result<Self> {
        let mut hit = vec![[false; 2]; spec.n];
        let mut extra = vec![false; spec.m];
        for &e in elems {
            if e < 2 * spec.n {
                hit[e / 2][e % 2] = true;
            } else if e < spec.ground_size() {
                extra[e - 2 * spec.n] = true;
            } else {
                return Err(Error::Invariant(format!(
                    "element {e} outside a ground set of size {}",
                    spec.ground_size()
                )));
            }
        }
        let main = hit
            .iter()
            .enumerate()
            .map(|(i, h)| match h {
                [true, true] => Ok(Pick::Both),
                [true, false] => Ok(Pick::First),
                [false, true] => Ok(Pick::Second),
                [false, false] => Err(Error::Invariant(format!("main block {} is missed", i + 1))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Inset { main, extra })
    }
}

/// Elements written as `1a`/`1b` for main block 1, `y1` for the first
/// element of `Y`, and so on.
impl fmt::Display for Inset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = Vec::new();
        for (i, p) in self.main.iter().enumerate() {
            let b = i + 1;
            match p {
                Pick::First => names.push(format!("{b}a")),
                Pick::Second => names.push(format!("{b}b")),
                Pick::Both => names.extend([format!("{b}a"), format!("{b}b")]),
            }
        }
        names.extend(self.extra_indices().iter().map(|j| format!("y{}", j + 1)));
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Number of `(n+k)`-insets by inclusion-exclusion over the missed blocks.
pub fn count_insets_ie(n: usize, k: usize, m: usize) -> ExactInt {
    let (n, k, m) = (n as i64, k as i64, m as i64);
    let mut total = ExactInt::zero();
    for i in 0..=n {
        let term = binomial(n, i) * binomial(2 * n - 2 * i + m, n + k);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Number of `(n+k)`-insets as `2^(n-k) * sum_i 2^i C(m,i) C(n,k-i)`.
///
/// Each surviving term has `k - i <= n`, so the power of two is taken per
/// term and stays integral when `k > n`.
pub fn count_insets_direct(n: usize, k: usize, m: usize) -> Result<ExactInt> {
    if k > n + m {
        return Err(Error::Domain(format!(
            "k = {k} exceeds n + m = {}: no inset has that many surplus elements",
            n + m
        )));
    }
    let mut total = ExactInt::zero();
    for i in 0..=m.min(k) {
        if k - i > n {
            continue;
        }
        total += pow2(n + i - k) * binomial(m as i64, i as i64) * binomial(n as i64, (k - i) as i64);
    }
    Ok(total)
}

/// `N(n, k, 0) = 2^(n-k) C(n, k)`: one element from each of `n - k` blocks,
/// both from the other `k`.
pub fn count_insets_no_extra(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    pow2(n - k) * binomial(n as i64, k as i64)
}

/// Counts insets by splitting on how many `Y` elements are taken:
/// `N(n,k,m) = sum_i C(m,i) N(n,k-i,0)`.
pub fn count_insets_split(n: usize, k: usize, m: usize) -> ExactInt {
    (0..=m.min(k))
        .map(|i| binomial(m as i64, i as i64) * count_insets_no_extra(n, k - i))
        .sum()
}

/// All `(n+k)`-insets, found by filtering every `(n+k)`-subset of the
/// ground set. Subsets are visited as sorted index lists in lexicographic
/// order.
pub fn enumerate_insets(n: usize, k: usize, m: usize, limits: &EnumLimits) -> Result<Vec<Inset>> {
    let spec = BlockSetSpec { n, m };
    Error::guard("2n+m", spec.ground_size(), limits.inset_ground)?;
    if n + k > spec.ground_size() {
        return Ok(Vec::new());
    }
    Ok((0..spec.ground_size())
        .combinations(n + k)
        .filter_map(|c| Inset::from_elements(spec, &c).ok())
        .collect())
}

/// One letter of a u-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// `1`
    One,
    /// `1|`
    OneBar,
    /// `x`
    X,
}

impl Symbol {
    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::One => "1",
            Symbol::OneBar => "1|",
            Symbol::X => "x",
        }
    }
}

/// A sequence over `{1, 1|, x}` that does not end in `1|`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct USequence {
    symbols: Vec<Symbol>,
}

impl USequence {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.last() == Some(&Symbol::OneBar) {
            return Err(Error::Invariant("a u-sequence cannot end in 1|".into()));
        }
        Ok(USequence { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn x_count(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == Symbol::X).count()
    }
}

impl fmt::Display for USequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| f.write_str(s.as_str()))
    }
}

impl FromStr for USequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut symbols = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '1' if chars.peek() == Some(&'|') => {
                    chars.next();
                    symbols.push(Symbol::OneBar);
                }
                '1' => symbols.push(Symbol::One),
                'x' => symbols.push(Symbol::X),
                other => {
                    return Err(Error::Invariant(format!(
                        "unexpected character {other:?} in u-sequence {s:?}"
                    )))
                }
            }
        }
        USequence::new(symbols)
    }
}

/// All u(n,k,x)-sequences in lexicographic order under `1 < 1| < x`.
pub fn enumerate_usequences(n: usize, k: usize) -> Vec<USequence> {
    fn walk(len: usize, xs_left: usize, cur: &mut Vec<Symbol>, out: &mut Vec<USequence>) {
        let left = len - cur.len();
        if left == 0 {
            if xs_left == 0 {
                out.push(USequence { symbols: cur.clone() });
            }
            return;
        }
        for s in [Symbol::One, Symbol::OneBar, Symbol::X] {
            let ok = match s {
                Symbol::X => xs_left > 0,
                Symbol::OneBar => left > 1 && xs_left < left,
                Symbol::One => xs_left < left,
            };
            if ok {
                cur.push(s);
                walk(len, xs_left - usize::from(s == Symbol::X), cur, out);
                cur.pop();
            }
        }
    }

    let mut out = Vec::new();
    if k <= n {
        walk(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Labels an `(n-1+k)`-inset over `n - 1` main blocks and a one-element
/// `Y` by a u(n,k,x)-sequence.
///
/// Position `i < n` carries `x` when block `i` is fully taken; otherwise
/// it carries a `1` paired with that block, barred when the block's second
/// element is the one taken. The last position is `x` exactly when the `Y`
/// element is taken, else `1`. Pairing the singly-hit blocks with the `1`s
/// left to right in block order puts each `1` at its own block's position.
pub fn inset_to_usequence(z: &Inset) -> Result<USequence> {
    if z.extra.len() != 1 {
        return Err(Error::Invariant(format!(
            "expected an additional block of size 1, found {}",
            z.extra.len()
        )));
    }
    let mut symbols: Vec<Symbol> = z
        .main
        .iter()
        .map(|p| match p {
            Pick::First => Symbol::One,
            Pick::Second => Symbol::OneBar,
            Pick::Both => Symbol::X,
        })
        .collect();
    symbols.push(if z.extra[0] { Symbol::X } else { Symbol::One });
    USequence::new(symbols)
}

/// Inverse of [`inset_to_usequence`].
pub fn usequence_to_inset(s: &USequence) -> Result<Inset> {
    let Some((last, body)) = s.symbols.split_last() else {
        return Err(Error::Invariant("a u-sequence labelling an inset has length >= 1".into()));
    };
    let y = match last {
        Symbol::X => true,
        Symbol::One => false,
        Symbol::OneBar => return Err(Error::Invariant("a u-sequence cannot end in 1|".into())),
    };
    let main = body
        .iter()
        .map(|s| match s {
            Symbol::One => Pick::First,
            Symbol::OneBar => Pick::Second,
            Symbol::X => Pick::Both,
        })
        .collect();
    Ok(Inset::new(main, vec![y]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn lim() -> EnumLimits {
        EnumLimits::default()
    }

    fn u(s: &str) -> USequence {
        s.parse().unwrap()
    }

    #[test]
    fn ie_examples() {
        assert_eq!(count_insets_ie(2, 0, 1), 4.into());
        assert_eq!(count_insets_ie(2, 1, 0), 4.into());
        assert_eq!(count_insets_ie(1, 1, 0), 1.into());
    }

    #[test]
    fn direct_examples() {
        assert_eq!(count_insets_direct(2, 1, 1).unwrap(), 8.into());
        assert_eq!(count_insets_direct(3, 1, 0).unwrap(), 12.into());
        assert_eq!(count_insets_direct(1, 0, 0).unwrap(), 2.into());
        assert!(matches!(count_insets_direct(1, 4, 2), Err(Error::Domain(_))));
        // k > n, still within n + m
        assert_eq!(count_insets_direct(1, 3, 2).unwrap(), 1.into());
        assert_eq!(count_insets_direct(0, 1, 1).unwrap(), 1.into());
    }

    #[test]
    fn enumerate_examples() {
        let one = enumerate_insets(1, 0, 0, &lim()).unwrap();
        assert_eq!(
            one,
            vec![
                Inset::new(vec![Pick::First], vec![]),
                Inset::new(vec![Pick::Second], vec![])
            ]
        );
        let both = enumerate_insets(1, 1, 0, &lim()).unwrap();
        assert_eq!(both, vec![Inset::new(vec![Pick::Both], vec![])]);
        let list = enumerate_insets(2, 1, 1, &lim()).unwrap();
        assert_eq!(list.len(), 8);
        assert!(list.iter().all(|z| z.k() == 1 && z.size() == 3));
    }

    #[test]
    fn enumerate_guard() {
        let err = enumerate_insets(12, 0, 3, &lim()).unwrap_err();
        assert_eq!(err, Error::Guard { what: "2n+m", value: 27, limit: 26 });
    }

    #[test]
    fn inset_elements_round_trip() {
        let z = Inset::new(vec![Pick::Second, Pick::Both], vec![false, true]);
        let spec = z.spec();
        assert_eq!(z.elements(), vec![1, 2, 3, 5]);
        assert_eq!(Inset::from_elements(spec, &z.elements()).unwrap(), z);
        assert_eq!(z.to_string(), "{1b,2a,2b,y2}");
        assert!(Inset::from_elements(spec, &[0, 4]).is_err());
    }

    #[test]
    fn usequence_examples() {
        let got: BTreeSet<String> = enumerate_usequences(3, 1).iter().map(|s| s.to_string()).collect();
        let want: BTreeSet<String> = ["x11", "x1|1", "1x1", "1|x1", "11x", "11|x", "1|1x", "1|1|x"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, want);
        assert_eq!(enumerate_usequences(1, 1), vec![u("x")]);
        assert_eq!(enumerate_usequences(2, 0), vec![u("11"), u("1|1")]);
        assert!(enumerate_usequences(2, 3).is_empty());
    }

    #[test]
    fn usequence_order_is_lexicographic() {
        let list = enumerate_usequences(5, 2);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(u("1|1|x").symbols(), &[Symbol::OneBar, Symbol::OneBar, Symbol::X]);
        assert_eq!(u("11|x").to_string(), "11|x");
        assert!("11|".parse::<USequence>().is_err());
        assert!("12".parse::<USequence>().is_err());
    }

    #[test]
    fn bijection_examples() {
        let z = Inset::new(vec![], vec![true]);
        assert_eq!(inset_to_usequence(&z).unwrap(), u("x"));
        let z = Inset::new(vec![Pick::First], vec![false]);
        assert_eq!(inset_to_usequence(&z).unwrap(), u("11"));
        let z = Inset::new(vec![Pick::Second], vec![false]);
        assert_eq!(inset_to_usequence(&z).unwrap(), u("1|1"));

        assert_eq!(usequence_to_inset(&u("x")).unwrap(), Inset::new(vec![], vec![true]));
        assert_eq!(
            usequence_to_inset(&u("1|1")).unwrap(),
            Inset::new(vec![Pick::Second], vec![false])
        );
        assert_eq!(
            usequence_to_inset(&u("11|x")).unwrap(),
            Inset::new(vec![Pick::First, Pick::Second], vec![true])
        );
    }

    #[test]
    fn bijection_errors() {
        let z = Inset::new(vec![Pick::First], vec![]);
        assert!(matches!(inset_to_usequence(&z), Err(Error::Invariant(_))));
        assert!(usequence_to_inset(&USequence::default()).is_err());
    }

    #[test]
    fn full_table_n3_k1() {
        let insets = enumerate_insets(2, 1, 1, &lim()).unwrap();
        let images: BTreeSet<USequence> =
            insets.iter().map(|z| inset_to_usequence(z).unwrap()).collect();
        let seqs: BTreeSet<USequence> = enumerate_usequences(3, 1).into_iter().collect();
        assert_eq!(images, seqs);
    }
}
