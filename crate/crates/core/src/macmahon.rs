//! MacMahon's divisor-sum series `A_k^±`, `C_k^±` and their truncations
//! `A_{k,m}^±`, `C_{k,m}^±`.
//!
//! `A_{k,m}^±` sums `q^(λ1+...+λk) / prod (1 ∓ q^λi)^2` over `1 <= λ1 < ... < λk <= m`;
//! the `C` family does the same over the odd parts `2λi - 1`. Each chosen
//! part `p` contributes the factor
//!
//! ```text
//! q^p / (1 ∓ q^p)^2 = sum_{t>=1} (±1)^(t+1) t q^(p t)
//! ```
//!
//! so the coefficient of `q^n` is the signed sum of `t1 * ... * tk` over
//! partitions of `n` with exactly `k` distinct (odd) part sizes.
//!
//! [`Sign::Plus`] is the upper sign. In the double-sum expansions the upper
//! signs go together: `A^+` pairs with `(q;q)_m^2` and `(-1)^(j-i-k)`, `A^-`
//! with `(-q;q)_m^2` and no alternation. This was checked against the
//! opposite pairing at `k = m = 1` and across the identity suite.
//!
//! Series are built by a dynamic program over the allowed parts whose state
//! is "number of parts chosen so far"; no subset is enumerated.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qfunc::Sign;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// all parts
    A,
    /// odd parts only
    C,
}

impl Family {
    /// The `λ`-th allowed part size (`λ >= 1`).
    pub fn part(self, lambda: usize) -> usize {
        match self {
            Family::A => lambda,
            Family::C => 2 * lambda - 1,
        }
    }

    /// Number of allowed parts not exceeding `order`.
    pub fn parts_up_to(self, order: usize) -> usize {
        match self {
            Family::A => order,
            Family::C => order.div_ceil(2),
        }
    }

    /// Exponent of the lowest possible term of the `k`-part series:
    /// `1 + 2 + ... + k` for `A`, `1 + 3 + ... + (2k-1)` for `C`.
    pub fn min_weight(self, k: usize) -> usize {
        match self {
            Family::A => k * (k + 1) / 2,
            Family::C => k * k,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::C => "C",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

/// Upper bound `m` on the part index, or the untruncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Truncation {
    Finite(u32),
    Infinite,
}

impl Truncation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Truncation::Finite(m) => Some(m),
            Truncation::Infinite => None,
        }
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Finite(m) => write!(f, "{m}"),
            Truncation::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Truncation {
    type Err = Error;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Truncation::Infinite);
        }
        s.parse::<u32>().map(Truncation::Finite).map_err(|_| {
            Error::InvalidArgument(format!(
                "expected a non-negative integer or `inf`, got `{s}`"
            ))
        })
    }
}

impl Serialize for Truncation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Truncation::Finite(m) => serializer.serialize_u32(*m),
            Truncation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Descriptor of one named series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesSpec {
    pub family: Family,
    pub sign: Sign,
    pub k: u32,
    pub m: Truncation,
    pub order: usize,
}

impl SeriesSpec {
    pub fn new(family: Family, sign: Sign, k: u32, m: Truncation, order: usize) -> Self {
        Self {
            family,
            sign,
            k,
            m,
            order,
        }
    }

    /// Number of parts that can actually reach a coefficient `<= order`.
    /// For an infinite truncation every omitted part exceeds the order.
    pub fn effective_parts(&self) -> usize {
        let reachable = self.family.parts_up_to(self.order);
        match self.m {
            Truncation::Finite(m) => reachable.min(m as usize),
            Truncation::Infinite => reachable,
        }
    }

    pub fn build(&self) -> TruncatedSeries {
        let k = self.k as usize;
        if let Truncation::Finite(m) = self.m {
            if k > m as usize {
                return TruncatedSeries::zero(self.order);
            }
        }
        macmahon_all(self.family, self.sign, k, self.m, self.order).swap_remove(k)
    }
}

/// `q^p / (1 ∓ q^p)^2` truncated at `order`: `sum_{t>=1} (±1)^(t+1) t q^(p t)`.
pub fn part_factor(sign: Sign, part: usize, order: usize) -> TruncatedSeries {
    assert!(part >= 1, "parts are positive");
    let mut coeffs = TruncatedSeries::zero(order).into_coeffs();
    for t in 1..=order / part {
        coeffs[part * t] = BigInt::from(sign.power(t as i64 + 1) * t as i64);
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// All of `X_{0,m}, X_{1,m}, ..., X_{max_k,m}` for one family and sign
/// (index `j` of the result holds the `j`-part series).
pub fn macmahon_all(
    family: Family,
    sign: Sign,
    max_k: usize,
    m: Truncation,
    order: usize,
) -> Vec<TruncatedSeries> {
    let spec = SeriesSpec::new(family, sign, max_k as u32, m, order);
    let mut state = vec![TruncatedSeries::zero(order); max_k + 1];
    state[0] = TruncatedSeries::one(order);
    for lambda in 1..=spec.effective_parts() {
        let factor = part_factor(sign, family.part(lambda), order);
        // choose or skip part λ; descending so each part is used at most once
        for c in (1..=max_k.min(lambda)).rev() {
            let extra = state[c - 1].mul(&factor).expect("same order");
            state[c].add_assign(&extra).expect("same order");
        }
    }
    state
}

/// `A_{k,m}^±` (or `A_k^±` for an infinite truncation).
pub fn macmahon_a(spec: &SeriesSpec) -> Result<TruncatedSeries> {
    if spec.family != Family::A {
        return Err(Error::InvalidArgument(
            "macmahon_a needs an A-family spec".into(),
        ));
    }
    Ok(spec.build())
}

/// `C_{k,m}^±` (or `C_k^±` for an infinite truncation).
pub fn macmahon_c(spec: &SeriesSpec) -> Result<TruncatedSeries> {
    if spec.family != Family::C {
        return Err(Error::InvalidArgument(
            "macmahon_c needs a C-family spec".into(),
        ));
    }
    Ok(spec.build())
}
