//! Restricted integer compositions: counting by dynamic programming,
//! brute-force enumeration, and the decode/encode maps between u-sequences
//! and compositions.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, ExactInt};
use crate::insets::{Symbol, USequence};
use crate::limits::EnumLimits;

/// An ordered list of parts. Parts may be zero only in weak compositions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn count_parts(&self, pred: impl Fn(usize) -> bool) -> usize {
        self.parts.iter().filter(|&&v| pred(v)).count()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::Domain(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

/// `c(0..=n, p)`: compositions of each total with every part `>= p`.
pub fn minpart_table(n: usize, p: usize) -> Result<Vec<ExactInt>> {
    require_positive("p", p)?;
    let mut c = Vec::with_capacity(n + 1);
    // prefix[u] = c(0) + ... + c(u - 1)
    let mut prefix = vec![ExactInt::zero()];
    for t in 0..=n {
        let v = if t == 0 {
            ExactInt::one()
        } else if t >= p {
            // first part j in p..=t leaves t - j in 0..=t-p
            prefix[t - p + 1].clone()
        } else {
            ExactInt::zero()
        };
        prefix.push(&prefix[t] + &v);
        c.push(v);
    }
    Ok(c)
}

/// `c(n, p)`, the number of compositions of `n` with all parts `>= p`;
/// `c(0, p) = 1`.
pub fn count_minpart(n: usize, p: usize) -> Result<ExactInt> {
    Ok(minpart_table(n, p)?.pop().unwrap_or_default())
}

/// All compositions of `n` with every part `>= p`, lexicographic.
pub fn enumerate_minpart(n: usize, p: usize, limits: &EnumLimits) -> Result<Vec<Composition>> {
    require_positive("p", p)?;
    Error::guard("n", n, limits.minpart_n)?;

    fn walk(left: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition::new(cur.clone()));
            return;
        }
        for v in p..=left {
            cur.push(v);
            walk(left - v, p, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    walk(n, p, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `c(n, k, p, p-1)`: compositions of `n` with exactly `k` parts equal to
/// `p - 1` and every other part `>= p`. For `p = 1` the marked parts are
/// zeros, so these are weak compositions with exactly `k` zeros.
pub fn count_marked(n: usize, k: usize, p: usize) -> Result<ExactInt> {
    require_positive("p", p)?;
    let mark = p - 1;
    // table[j][t]: compositions of t using exactly j marked parts, built by
    // appending the last part.
    let mut prev: Vec<ExactInt> = Vec::new();
    for j in 0..=k {
        let mut row = vec![ExactInt::zero(); n + 1];
        let mut prefix = vec![ExactInt::zero(); n + 2];
        for t in 0..=n {
            let mut v = if j == 0 && t == 0 {
                ExactInt::one()
            } else {
                ExactInt::zero()
            };
            if j > 0 && t >= mark {
                v += &prev[t - mark];
            }
            if t >= p {
                v += &prefix[t - p + 1];
            }
            prefix[t + 1] = &prefix[t] + &v;
            row[t] = v;
        }
        prev = row;
    }
    Ok(prev.swap_remove(n))
}

/// All compositions counted by [`count_marked`], lexicographic.
pub fn enumerate_marked(n: usize, k: usize, p: usize, limits: &EnumLimits) -> Result<Vec<Composition>> {
    require_positive("p", p)?;
    Error::guard("n", n, limits.marked_n)?;
    Error::guard("k", k, limits.marked_k)?;
    if limits.marked_items != usize::MAX {
        let size = count_marked(n, k, p)?;
        if size > ExactInt::from(limits.marked_items) {
            return Err(Error::Guard {
                what: "items",
                value: usize::try_from(&size).unwrap_or(usize::MAX),
                limit: limits.marked_items,
            });
        }
    }

    fn walk(left: usize, marks: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 && marks == 0 {
            out.push(Composition::new(cur.clone()));
            return;
        }
        // marked part first: p - 1 < p keeps the output lexicographic
        if marks > 0 && p - 1 <= left {
            cur.push(p - 1);
            walk(left - (p - 1), marks - 1, p, cur, out);
            cur.pop();
        }
        for v in p..=left {
            cur.push(v);
            walk(left - v, marks, p, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    walk(n, k, p, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Sum over tuples `(j_1, ..., j_{k+1})` with each `j_t >= -1` and total
/// `n` of `prod_t c(j_t + 1, p)`.
///
/// Substituting `i_t = j_t + 1` turns this into the coefficient of
/// `x^(n+k+1)` in `G(x)^(k+1)` where `G(x) = sum_i c(i, p) x^i`.
pub fn convolution_rhs(n: i64, k: usize, p: usize) -> Result<ExactInt> {
    require_positive("p", p)?;
    let target = n + k as i64 + 1;
    if target < 0 {
        return Err(Error::Domain(format!(
            "n = {n} is below -(k+1) = {}",
            -(k as i64) - 1
        )));
    }
    let target = target as usize;
    let g = minpart_table(target, p)?;
    let mut acc = g.clone();
    for _ in 0..k {
        let mut next = vec![ExactInt::zero(); target + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.iter().take(target + 1 - i).enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    Ok(acc.swap_remove(target))
}

/// Compositions of `total` (parts `>= 1`) with exactly `k` parts `>= a`.
pub fn count_exactly_k_large(total: usize, k: usize, a: usize) -> Result<ExactInt> {
    require_positive("a", a)?;
    let mut prev_prefix: Vec<ExactInt> = Vec::new();
    let mut last = ExactInt::zero();
    for j in 0..=k {
        let mut row = vec![ExactInt::zero(); total + 1];
        let mut prefix = vec![ExactInt::zero(); total + 2];
        for t in 0..=total {
            let mut v = if j == 0 && t == 0 {
                ExactInt::one()
            } else {
                ExactInt::zero()
            };
            // last part small: v in 1..a, previous total in max(0,t-a+1)..t
            if t >= 1 {
                let lo = t.saturating_sub(a - 1);
                v += &prefix[t] - &prefix[lo];
            }
            // last part large: v >= a, previous total in 0..=t-a
            if j > 0 && t >= a {
                v += &prev_prefix[t - a + 1];
            }
            prefix[t + 1] = &prefix[t] + &v;
            row[t] = v;
        }
        last = row.swap_remove(total);
        prev_prefix = prefix;
    }
    Ok(last)
}

/// All compositions of `total` (parts `>= 1`) with exactly `k` parts `>= a`,
/// lexicographic.
pub fn enumerate_exactly_k_large(
    total: usize,
    k: usize,
    a: usize,
    limits: &EnumLimits,
) -> Result<Vec<Composition>> {
    require_positive("a", a)?;
    Error::guard("total", total, limits.total)?;

    fn walk(left: usize, large: usize, a: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            if large == 0 {
                out.push(Composition::new(cur.clone()));
            }
            return;
        }
        if left < large * a {
            return;
        }
        for v in 1..=left {
            let is_large = v >= a;
            if is_large && large == 0 {
                break;
            }
            cur.push(v);
            walk(left - v, large - usize::from(is_large), a, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    walk(total, k, a, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Weak compositions of `n` with exactly `k` zero parts, counted by
/// inserting `k` zeros into each positive composition: a positive
/// composition of length `l` admits `C(l+k, k)` insertions, and there are
/// `C(n-1, l-1)` of them. The only composition of 0 is the empty one.
pub fn count_weak_with_zeros(n: usize, k: usize) -> ExactInt {
    let k = k as i64;
    if n == 0 {
        return binomial(k, k);
    }
    let n = n as i64;
    (1..=n)
        .map(|l| binomial(n - 1, l - 1) * binomial(l + k, k))
        .sum()
}

/// Reads a u-sequence as a composition: `1` adds one to the running part,
/// `1|` adds one and closes the part, `x` adds `a` and closes the part, and
/// the end of the sequence closes whatever is still open.
///
/// This is the raw map; it is injective only when `a` exceeds the number of
/// non-`x` symbols (see [`usequence_to_composition`]).
pub fn decode_usequence(s: &USequence, a: usize) -> Composition {
    let mut parts = Vec::new();
    let mut run = 0;
    for sym in s.symbols() {
        match sym {
            Symbol::One => run += 1,
            Symbol::OneBar => {
                parts.push(run + 1);
                run = 0;
            }
            Symbol::X => {
                parts.push(run + a);
                run = 0;
            }
        }
    }
    if run > 0 {
        parts.push(run);
    }
    Composition::new(parts)
}

/// Smallest `a` at which [`decode_usequence`] is injective on sequences of
/// this length and `x`-count.
pub fn injectivity_threshold(s: &USequence) -> usize {
    s.len() - s.x_count() + 1
}

/// [`decode_usequence`], refusing thresholds where distinct sequences can
/// collide.
pub fn usequence_to_composition(s: &USequence, a: usize) -> Result<Composition> {
    let threshold = injectivity_threshold(s);
    if a < threshold {
        return Err(Error::NotInjective { a, threshold });
    }
    Ok(decode_usequence(s, a))
}

/// Inverse of [`decode_usequence`]: a part `v >= a` becomes `v - a` ones
/// then `x`; a smaller part becomes `v - 1` ones then `1|`, except a small
/// final part, which becomes `v` plain ones.
pub fn composition_to_usequence(c: &Composition, a: usize) -> Result<USequence> {
    if a == 0 {
        return Err(Error::Encoding("threshold a must be positive".into()));
    }
    let mut symbols = Vec::with_capacity(c.total());
    let last = c.len().saturating_sub(1);
    for (i, &v) in c.parts().iter().enumerate() {
        if v == 0 {
            return Err(Error::Encoding(format!("zero part in {c} has no u-sequence preimage")));
        }
        if v >= a {
            symbols.extend(std::iter::repeat_n(Symbol::One, v - a));
            symbols.push(Symbol::X);
        } else if i == last {
            symbols.extend(std::iter::repeat_n(Symbol::One, v));
        } else {
            symbols.extend(std::iter::repeat_n(Symbol::One, v - 1));
            symbols.push(Symbol::OneBar);
        }
    }
    USequence::new(symbols)
}
