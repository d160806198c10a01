//! Brute-force partition enumeration.
//!
//! Everything here counts partitions directly and never touches the series
//! code, so the values can serve as independent checks of series
//! coefficients. Cost is exponential in `n`; the counting operations live on
//! [`Oracle`], which refuses `n` above a soft guard ([`DEFAULT_GUARD`])
//! unless constructed with a larger or no limit.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qfunc::{binomial, Sign};
use crate::weights::pair_weight;

/// Largest `n` an [`Oracle`] enumerates by default.
pub const DEFAULT_GUARD: usize = 40;

/// A partition as `(part, multiplicity)` pairs, ascending by part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionMultiset {
    parts: Vec<(u32, u32)>,
}

impl PartitionMultiset {
    /// From `(part, multiplicity)` pairs in any order; repeated parts merge.
    pub fn new(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (part, mult) in pairs {
            if part == 0 || mult == 0 {
                return Err(Error::InvalidArgument(format!(
                    "parts and multiplicities must be positive, got {part}^{mult}"
                )));
            }
            *map.entry(part).or_insert(0) += mult;
        }
        Ok(Self {
            parts: map.into_iter().collect(),
        })
    }

    /// From a list of parts such as `[1, 2, 3, 3, 5, 6]`.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        Self::new(parts.iter().map(|&p| (p, 1)))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&(p, t)| p as u64 * t as u64).sum()
    }

    pub fn distinct_sizes(&self) -> usize {
        self.parts.len()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.iter().map(|&(_, t)| t as usize).sum()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts
            .binary_search_by_key(&part, |&(p, _)| p)
            .map_or(0, |i| self.parts[i].1)
    }

    /// Number of part sizes occurring with exactly the given multiplicity.
    pub fn sizes_with_multiplicity(&self, mult: u32) -> usize {
        self.parts.iter().filter(|&&(_, t)| t == mult).count()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.last().map_or(0, |&(p, _)| p)
    }
}

impl fmt::Display for PartitionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for &(p, t) in &self.parts {
            for _ in 0..t {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// Restrictions applied during enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub max_part: Option<u32>,
    pub odd_only: bool,
    pub max_multiplicity: Option<u32>,
    /// Exact number of distinct part sizes.
    pub distinct_sizes: Option<usize>,
}

/// Calls `visit` once for every partition of `n` meeting `c`.
pub fn for_each_partition(n: usize, c: &Constraints, mut visit: impl FnMut(&PartitionMultiset)) {
    let top = c.max_part.map_or(n, |m| (m as usize).min(n));
    let mut stack = Vec::new();
    descend(n, top, c, &mut stack, &mut visit);
}

fn descend(
    remaining: usize,
    max_part: usize,
    c: &Constraints,
    stack: &mut Vec<(u32, u32)>,
    visit: &mut impl FnMut(&PartitionMultiset),
) {
    if remaining == 0 {
        if c.distinct_sizes.is_none_or(|d| d == stack.len()) {
            let parts = stack.iter().rev().copied().collect();
            visit(&PartitionMultiset { parts });
        }
        return;
    }
    if c.distinct_sizes.is_some_and(|d| stack.len() >= d) {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if c.odd_only && part % 2 == 0 {
            continue;
        }
        let mut mult = 1;
        while mult * part <= remaining && c.max_multiplicity.is_none_or(|mm| mult <= mm as usize) {
            stack.push((part as u32, mult as u32));
            descend(remaining - mult * part, part - 1, c, stack, visit);
            stack.pop();
            mult += 1;
        }
    }
}

/// Counts of `P_{2,m,l}(n)` for every `l` and of `Q_{2,m,s,t}(n)` for every
/// `(s, t)`, gathered from one enumeration of partitions of `n` with parts
/// at most `m` and multiplicities at most 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RestrictedTally {
    by_singles: BTreeMap<usize, u64>,
    by_size_and_doubles: BTreeMap<(usize, usize), u64>,
}

impl RestrictedTally {
    /// `#P_{2,m,l}(n)`: exactly `l` parts of multiplicity one.
    pub fn p(&self, l: usize) -> u64 {
        self.by_singles.get(&l).copied().unwrap_or(0)
    }

    /// `#Q_{2,m,s,t}(n)`: `s` parts in total, `t` sizes of multiplicity two.
    pub fn q(&self, s: usize, t: usize) -> u64 {
        self.by_size_and_doubles.get(&(s, t)).copied().unwrap_or(0)
    }
}

/// Enumeration-backed counting with a soft bound on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    limit: Option<usize>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            limit: Some(DEFAULT_GUARD),
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: usize) -> Self {
        Self { limit: Some(limit) }
    }

    pub fn unguarded() -> Self {
        Self { limit: None }
    }

    pub fn limit(&self) -> Option<usize> {
        self.limit
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.limit {
            Some(limit) if n > limit => Err(Error::GuardExceeded { n, limit }),
            _ => Ok(()),
        }
    }

    pub fn enumerate_partitions(
        &self,
        n: usize,
        c: &Constraints,
    ) -> Result<Vec<PartitionMultiset>> {
        self.check(n)?;
        let mut out = Vec::new();
        for_each_partition(n, c, |p| out.push(p.clone()));
        Ok(out)
    }

    fn signed_multiplicity_sum(
        &self,
        sign: Sign,
        k: usize,
        n: usize,
        odd_only: bool,
    ) -> Result<BigInt> {
        self.check(n)?;
        if k == 0 {
            return Ok(if n == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            });
        }
        let c = Constraints {
            odd_only,
            distinct_sizes: Some(k),
            ..Constraints::default()
        };
        let mut total = BigInt::zero();
        for_each_partition(n, &c, |p| {
            // (±1)^(t1+...+tk+k) t1...tk
            let mut w = BigInt::one();
            for &(_, t) in p.pairs() {
                w *= sign.power(t as i64 + 1) * t as i64;
            }
            total += w;
        });
        Ok(total)
    }

    /// `a_k^±(n)`: signed sum of multiplicity products over partitions of
    /// `n` with exactly `k` distinct part sizes.
    pub fn a_stat(&self, sign: Sign, k: usize, n: usize) -> Result<BigInt> {
        self.signed_multiplicity_sum(sign, k, n, false)
    }

    /// `c_k^±(n)`: as [`Oracle::a_stat`] with odd parts only.
    pub fn c_stat(&self, sign: Sign, k: usize, n: usize) -> Result<BigInt> {
        self.signed_multiplicity_sum(sign, k, n, true)
    }

    /// Number of 3-colored partitions of `n`: a part size of multiplicity
    /// `t` can be colored in `C(t+2, 2)` ways.
    pub fn p3(&self, n: usize) -> Result<BigInt> {
        self.check(n)?;
        let mut total = BigInt::zero();
        for_each_partition(n, &Constraints::default(), |p| {
            let mut w = BigInt::one();
            for &(_, t) in p.pairs() {
                w *= binomial(t as i64 + 2, 2);
            }
            total += w;
        });
        Ok(total)
    }

    /// Number of overpartitions of `n`: the first occurrence of each part
    /// size may be overlined or not.
    pub fn overpartition_count(&self, n: usize) -> Result<BigInt> {
        self.check(n)?;
        let mut total = BigInt::zero();
        for_each_partition(n, &Constraints::default(), |p| {
            total += BigInt::one() << p.distinct_sizes();
        });
        Ok(total)
    }

    pub fn restricted_tally(&self, m: usize, n: usize) -> Result<RestrictedTally> {
        self.check(n)?;
        let c = Constraints {
            max_part: Some(m as u32),
            max_multiplicity: Some(2),
            ..Constraints::default()
        };
        let mut tally = RestrictedTally::default();
        for_each_partition(n, &c, |p| {
            *tally
                .by_singles
                .entry(p.sizes_with_multiplicity(1))
                .or_default() += 1;
            let key = (p.num_parts(), p.sizes_with_multiplicity(2));
            *tally.by_size_and_doubles.entry(key).or_default() += 1;
        });
        Ok(tally)
    }

    /// `#P_{2,m,l}(n)`: parts at most `m`, multiplicities at most 2, exactly
    /// `l` part sizes of multiplicity one.
    pub fn p_count(&self, m: usize, l: usize, n: usize) -> Result<BigInt> {
        Ok(BigInt::from(self.restricted_tally(m, n)?.p(l)))
    }

    /// `#Q_{2,m,s,t}(n)`: parts at most `m`, multiplicities at most 2, `s`
    /// parts in total of which `t` sizes occur twice.
    pub fn q_count(&self, m: usize, s: usize, t: usize, n: usize) -> Result<BigInt> {
        Ok(BigInt::from(self.restricted_tally(m, n)?.q(s, t)))
    }
}

/// A representation `n = (λ1 + ... + λk) + (x1 α1 + ... + xj αj)` with
/// distinct `λ`s, distinct `α`s disjoint from them, and `x ∈ {1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DecompositionA {
    pub lambda: Vec<u32>,
    pub alpha: Vec<u32>,
    pub x: Vec<u8>,
}

impl DecompositionA {
    /// How many of the `x` are 1.
    pub fn ones(&self) -> usize {
        self.x.iter().filter(|&&x| x == 1).count()
    }

    pub fn weight(&self) -> u64 {
        let l: u64 = self.lambda.iter().map(|&p| p as u64).sum();
        let a: u64 = self
            .alpha
            .iter()
            .zip(&self.x)
            .map(|(&p, &x)| p as u64 * x as u64)
            .sum();
        l + a
    }

    /// The multiset `λ ∪ x·α`.
    pub fn multiset(&self) -> PartitionMultiset {
        let pairs = self
            .lambda
            .iter()
            .map(|&p| (p, 1))
            .chain(self.alpha.iter().zip(&self.x).map(|(&p, &x)| (p, x as u32)));
        PartitionMultiset::new(pairs).expect("positive parts")
    }
}

impl fmt::Display for DecompositionA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda: Vec<String> = self.lambda.iter().map(u32::to_string).collect();
        let alpha: Vec<String> = self
            .alpha
            .iter()
            .zip(&self.x)
            .map(|(p, x)| {
                if *x == 2 {
                    format!("2×{p}")
                } else {
                    p.to_string()
                }
            })
            .collect();
        write!(f, "({})+({})", lambda.join("+"), alpha.join("+"))
    }
}

/// Every representation of `p` as `λ ∪ x·α` with `|λ| = k`, parts at most
/// `m` and `|α| <= m - k`, found by searching all assignments of each value
/// `1..=m` to {unused, λ, α with x=1, α with x=2}. Sorted by `λ`.
pub fn decompositions_a(p: &PartitionMultiset, m: u32, k: usize) -> Vec<DecompositionA> {
    let n = p.weight();
    let mut out = Vec::new();
    let mut cur = DecompositionA {
        lambda: Vec::new(),
        alpha: Vec::new(),
        x: Vec::new(),
    };
    assign_a(1, m, k, n, 0, &mut cur, p, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn assign_a(
    v: u32,
    m: u32,
    k: usize,
    n: u64,
    sum: u64,
    cur: &mut DecompositionA,
    target: &PartitionMultiset,
    out: &mut Vec<DecompositionA>,
) {
    if sum > n || cur.lambda.len() > k {
        return;
    }
    if v > m {
        if sum == n
            && cur.lambda.len() == k
            && cur.alpha.len() <= m as usize - k.min(m as usize)
            && cur.multiset() == *target
        {
            out.push(cur.clone());
        }
        return;
    }
    assign_a(v + 1, m, k, n, sum, cur, target, out);

    cur.lambda.push(v);
    assign_a(v + 1, m, k, n, sum + v as u64, cur, target, out);
    cur.lambda.pop();

    for x in [1u8, 2] {
        cur.alpha.push(v);
        cur.x.push(x);
        assign_a(v + 1, m, k, n, sum + x as u64 * v as u64, cur, target, out);
        cur.alpha.pop();
        cur.x.pop();
    }
}

/// Every way to write `p` as the union of an `i`-set and a `j`-set of
/// distinct parts, as `(λ, α)` pairs sorted by `λ`. Searches all
/// assignments of each value up to the largest part to {neither, λ only,
/// α only, both}.
pub fn splittings_q(p: &PartitionMultiset, i: usize, j: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let n = p.weight();
    let top = p.largest_part();
    let mut out = Vec::new();
    let (mut lam, mut alp) = (Vec::new(), Vec::new());
    assign_q(1, top, i, j, n, 0, &mut lam, &mut alp, p, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn assign_q(
    v: u32,
    top: u32,
    i: usize,
    j: usize,
    n: u64,
    sum: u64,
    lam: &mut Vec<u32>,
    alp: &mut Vec<u32>,
    target: &PartitionMultiset,
    out: &mut Vec<(Vec<u32>, Vec<u32>)>,
) {
    if sum > n || lam.len() > i || alp.len() > j {
        return;
    }
    if v > top {
        if sum == n && lam.len() == i && alp.len() == j {
            let union = PartitionMultiset::new(lam.iter().chain(alp.iter()).map(|&p| (p, 1)))
                .expect("positive parts");
            if union == *target {
                out.push((lam.clone(), alp.clone()));
            }
        }
        return;
    }
    let v64 = v as u64;
    assign_q(v + 1, top, i, j, n, sum, lam, alp, target, out);
    lam.push(v);
    assign_q(v + 1, top, i, j, n, sum + v64, lam, alp, target, out);
    alp.push(v);
    assign_q(v + 1, top, i, j, n, sum + 2 * v64, lam, alp, target, out);
    lam.pop();
    assign_q(v + 1, top, i, j, n, sum + v64, lam, alp, target, out);
    alp.pop();
}

pub fn decompositions_q(p: &PartitionMultiset, i: usize, j: usize) -> usize {
    splittings_q(p, i, j).len()
}

/// Summand of the binomial lemma: `(2j-a)/k C(2j-a+k-1, 2k-1) C(a, j)`.
pub fn lemma_term(k: u32, a: u32, j: u32) -> Result<BigInt> {
    let (k, a, j) = (k as i64, a as i64, j as i64);
    Ok(pair_weight(2 * j - a, k)? * binomial(a, j))
}

/// `sum_{j=floor((k+a)/2)}^{a}` of [`lemma_term`].
pub fn lemma_lhs(k: u32, a: u32) -> Result<BigInt> {
    let lo = (k + a) / 2;
    (lo..=a).try_fold(BigInt::zero(), |acc, j| Ok(acc + lemma_term(k, a, j)?))
}

/// `2^(a-k) C(a, k)` (zero when `a < k`).
pub fn lemma_rhs(k: u32, a: u32) -> BigInt {
    if a < k {
        return BigInt::zero();
    }
    binomial(a as i64, k as i64) << (a - k)
}

/// `f_k(a)`: [`lemma_term`] summed over the full range `0 <= j <= a`.
pub fn lemma_full_lhs(k: u32, a: u32) -> Result<BigInt> {
    (0..=a).try_fold(BigInt::zero(), |acc, j| Ok(acc + lemma_term(k, a, j)?))
}

/// `g_k(a) = 2^(a-k+1) C(a, k)` (zero when `a < k`).
pub fn lemma_full_rhs(k: u32, a: u32) -> BigInt {
    lemma_rhs(k, a) << 1
}

/// `(a-k) f_k(a) - 2a f_k(a-1)` for `a >= 1`.
pub fn recurrence_residual(k: u32, a: u32) -> Result<BigInt> {
    assert!(a >= 1, "the recurrence relates f(a) to f(a-1), a >= 1");
    let lhs = BigInt::from(a as i64 - k as i64) * lemma_full_lhs(k, a)?;
    Ok(lhs - BigInt::from(2 * a as i64) * lemma_full_lhs(k, a - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(v: &[u32]) -> PartitionMultiset {
        PartitionMultiset::from_parts(v).unwrap()
    }

    #[test]
    fn multiset_basics() {
        let p = parts(&[3, 1, 3, 2]);
        assert_eq!(p.pairs(), &[(1, 1), (2, 1), (3, 2)]);
        assert_eq!(p.weight(), 9);
        assert_eq!(p.num_parts(), 4);
        assert_eq!(p.distinct_sizes(), 3);
        assert_eq!(p.multiplicity(3), 2);
        assert_eq!(p.multiplicity(4), 0);
        assert_eq!(p.to_string(), "1+2+3+3");
        assert!(PartitionMultiset::new([(0, 1)]).is_err());
        assert!(PartitionMultiset::new([(1, 0)]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let o = Oracle::new();
        assert_eq!(
            o.enumerate_partitions(4, &Constraints::default())
                .unwrap()
                .len(),
            5
        );
        let c = Constraints {
            max_part: Some(3),
            max_multiplicity: Some(2),
            ..Constraints::default()
        };
        let mut got: Vec<String> = o
            .enumerate_partitions(4, &c)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        got.sort();
        assert_eq!(got, vec!["1+1+2", "1+3", "2+2"]);
        let zero = o.enumerate_partitions(0, &Constraints::default()).unwrap();
        assert_eq!(zero, vec![PartitionMultiset::default()]);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_complete() {
        let known = [
            1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
        ];
        for (n, &count) in known.iter().enumerate() {
            let all = Oracle::new()
                .enumerate_partitions(n, &Constraints::default())
                .unwrap();
            assert_eq!(all.len(), count);
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), count);
            assert!(all.iter().all(|p| p.weight() == n as u64));
        }
    }

    #[test]
    fn statistics() {
        let o = Oracle::new();
        assert_eq!(o.a_stat(Sign::Plus, 1, 6).unwrap(), BigInt::from(12));
        assert_eq!(o.a_stat(Sign::Plus, 2, 5).unwrap(), BigInt::from(9));
        assert_eq!(o.c_stat(Sign::Plus, 1, 2).unwrap(), BigInt::from(2));
        // a_1^-(2): 2 -> +1, 1+1 -> (-1)^(2+1)*2 = -2
        assert_eq!(o.a_stat(Sign::Minus, 1, 2).unwrap(), BigInt::from(-1));
        assert_eq!(o.p3(0).unwrap(), BigInt::from(1));
        assert_eq!(o.p3(2).unwrap(), BigInt::from(9));
        assert_eq!(o.overpartition_count(1).unwrap(), BigInt::from(2));
        assert_eq!(o.overpartition_count(4).unwrap(), BigInt::from(14));
    }

    #[test]
    fn a_one_is_sigma() {
        let o = Oracle::new();
        for n in 1..=30usize {
            let sigma: usize = (1..=n).filter(|d| n % d == 0).sum();
            assert_eq!(o.a_stat(Sign::Plus, 1, n).unwrap(), BigInt::from(sigma));
        }
    }

    #[test]
    fn guard() {
        let o = Oracle::new();
        assert_eq!(
            o.p3(41).unwrap_err(),
            Error::GuardExceeded { n: 41, limit: 40 }
        );
        assert!(Oracle::with_limit(5).a_stat(Sign::Plus, 1, 6).is_err());
        assert!(Oracle::unguarded().check(1000).is_ok());
    }

    #[test]
    fn restricted_counts() {
        let o = Oracle::new();
        let target = parts(&[1, 2, 3, 3, 5, 6]);
        let c = Constraints {
            max_part: Some(6),
            max_multiplicity: Some(2),
            ..Constraints::default()
        };
        let members: Vec<_> = o
            .enumerate_partitions(20, &c)
            .unwrap()
            .into_iter()
            .filter(|p| p.sizes_with_multiplicity(1) == 4)
            .collect();
        assert!(members.contains(&target));
        assert_eq!(o.p_count(6, 4, 20).unwrap(), BigInt::from(members.len()));

        let target = parts(&[1, 1, 2, 3, 3, 4, 5, 6]);
        let members: Vec<_> = o
            .enumerate_partitions(25, &c)
            .unwrap()
            .into_iter()
            .filter(|p| p.num_parts() == 8 && p.sizes_with_multiplicity(2) == 2)
            .collect();
        assert!(members.contains(&target));
        assert_eq!(o.q_count(6, 8, 2, 25).unwrap(), BigInt::from(members.len()));

        for m in 0..4 {
            for l in 0..4 {
                let expected = if l == 0 { 1 } else { 0 };
                assert_eq!(o.p_count(m, l, 0).unwrap(), BigInt::from(expected));
            }
        }
    }

    #[test]
    fn lemma_small_values() {
        assert_eq!(lemma_lhs(1, 2).unwrap(), BigInt::from(4));
        assert_eq!(lemma_rhs(1, 2), BigInt::from(4));
        assert_eq!(lemma_full_lhs(1, 2).unwrap(), BigInt::from(8));
        for a in 0..3 {
            assert!(lemma_lhs(3, a).unwrap().is_zero());
            assert!(lemma_rhs(3, a).is_zero());
        }
        assert!(recurrence_residual(2, 7).unwrap().is_zero());
    }

    #[test]
    fn lemma_term_symmetry() {
        for k in 1..=6 {
            for a in 0..=30 {
                for j in 0..=a {
                    assert_eq!(
                        lemma_term(k, a, j).unwrap(),
                        lemma_term(k, a, a - j).unwrap()
                    );
                }
                for j in 0..=a {
                    let d = (2 * j as i64 - a as i64).abs();
                    if d < k as i64 {
                        assert!(lemma_term(k, a, j).unwrap().is_zero(), "k={k} a={a} j={j}");
                    }
                }
                // The window floor(a/2) <= j < floor((k+a)/2) lies inside
                // |2j - a| < k except at k = 1, odd a, j = floor(a/2), where
                // 2j - a = -1 and the term is the mirror of j = a - j.
                for j in a / 2..((k + a) / 2).min(a + 1) {
                    let t = lemma_term(k, a, j).unwrap();
                    if k == 1 && a % 2 == 1 && j == a / 2 {
                        assert_eq!(t, lemma_term(k, a, a - j).unwrap());
                        assert!(!t.is_zero());
                    } else {
                        assert!(t.is_zero(), "k={k} a={a} j={j}");
                    }
                }
            }
        }
    }
}
