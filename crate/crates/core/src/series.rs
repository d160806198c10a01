//! Truncated formal power series over the integers.
//!
//! A [`TruncatedSeries`] of order `N` is an element of `Z[[q]] / (q^(N+1))`,
//! stored densely: index `n` holds the coefficient of `q^n`. Binary
//! operations require both operands to carry the same order; mixing orders
//! is reported as [`Error::OrderMismatch`] rather than silently truncated.
//!
//! Multiplication is the schoolbook Cauchy product. The orders used by this
//! crate stay in the low hundreds, where that is the fastest exact option.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient type. Every coefficient in the crate is an
/// arbitrary-precision integer.
pub type Coefficient = BigInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    // invariant: coeffs.len() == order + 1
    coeffs: Vec<Coefficient>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `c * q^exponent`, or the zero series if the exponent exceeds `order`.
    pub fn monomial(c: impl Into<Coefficient>, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c.into();
        }
        s
    }

    /// Builds a series from its coefficient list; the order is `len - 1`.
    ///
    /// Panics on an empty list, which has no order.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients `0..=order` of an exact polynomial, padding with zeros
    /// and dropping every term above the order.
    pub fn from_polynomial(coeffs: &[Coefficient], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coefficient> {
        self.coeffs
    }

    /// Coefficient of `q^n`; zero above the order is *not* implied, so this
    /// panics for `n > order`.
    pub fn coeff(&self, n: usize) -> &Coefficient {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// In-place `self += other`.
    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Coefficient) -> Result<()> {
        self.check_order(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
        Ok(())
    }

    /// Truncated Cauchy product.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse. Requires a constant term of `+1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !a0.abs().is_one() {
            return Err(Error::InvalidInversion {
                constant: a0.clone(),
            });
        }
        // a0 is its own inverse
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = a0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &inv.coeffs[n - i];
                }
            }
            inv.coeffs[n] = -(a0 * acc);
        }
        Ok(inv)
    }

    /// `self(q^t)` truncated at `order`.
    pub fn substitute_power(&self, t: usize, order: usize) -> Self {
        assert!(t >= 1, "substitution power must be positive");
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let e = n * t;
            if e > order {
                break;
            }
            out.coeffs[e] = c.clone();
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    /// Multiplication by `q^s`.
    pub fn shift_up(&self, s: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        if s <= order {
            out.coeffs[s..].clone_from_slice(&self.coeffs[..=order - s]);
        }
        out
    }

    /// Exact division by `q^s`. The result has order `order - s`; fails if
    /// any of the first `s` coefficients is nonzero.
    pub fn shift_down(&self, s: usize) -> Result<Self> {
        if s > self.order() {
            return Err(Error::InvalidArgument(format!(
                "cannot divide a series of order {} by q^{s}",
                self.order()
            )));
        }
        if let Some(index) = self.coeffs[..s].iter().position(|c| !c.is_zero()) {
            return Err(Error::NonZeroLowTerm { shift: s, index });
        }
        Ok(Self {
            coeffs: self.coeffs[s..].to_vec(),
        })
    }

    /// The prefix up to and including `q^order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot raise the order");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Whether coefficients `0..=upto` agree. `upto` must not exceed either order.
    pub fn prefix_equal(&self, other: &Self, upto: usize) -> bool {
        assert!(
            upto <= self.order() && upto <= other.order(),
            "prefix_equal upto={upto} beyond orders {} / {}",
            self.order(),
            other.order()
        );
        self.coeffs[..=upto] == other.coeffs[..=upto]
    }

    /// Index of the first differing coefficient, comparing up to the smaller order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}*q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
