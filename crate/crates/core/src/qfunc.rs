//! q-Pochhammer products and Gaussian binomial coefficients.
//!
//! Products are restricted to the shape `prod_j (1 ∓ q^(start + j*step))`,
//! which covers `(q;q)_n`, `(-q;q)_n` and `(±q;q^2)_n`. Gaussian binomials
//! are exact polynomials built with the q-Pascal recurrence and memoized in
//! a process-wide table.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::series::{Coefficient, TruncatedSeries};

/// Choice of sign in a `±` / `∓` pair.
///
/// `Plus` always selects the upper sign and `Minus` the lower one. In the
/// MacMahon families the superscript sign is opposite to the sign inside
/// the denominator: `A^+` has `(1 - q^λ)^2` below the line. Likewise
/// [`pochhammer_finite`] with `Plus` multiplies factors `(1 - q^e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `value()^e` as a `±1`.
    pub fn power(self, e: i64) -> i64 {
        if self == Sign::Minus && e.rem_euclid(2) == 1 {
            -1
        } else {
            1
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidArgument(format!("unknown sign `{other}`"))),
        }
    }
}

/// `prod_{j=0}^{n-1} (1 ∓ q^(start + j*step))` truncated at `order`.
pub fn pochhammer_finite(
    sign: Sign,
    start: usize,
    step: usize,
    n: usize,
    order: usize,
) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    let c = -sign.value();
    for j in 0..n {
        let e = start + j * step;
        if e > order {
            break;
        }
        // multiply by (1 + c q^e) in place, high to low
        for idx in (e..=order).rev() {
            if !coeffs[idx - e].is_zero() {
                let t = &coeffs[idx - e] * c;
                coeffs[idx] += t;
            }
        }
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// The infinite product `prod_{j>=0} (1 ∓ q^(start + j*step))` truncated at
/// `order`. Factors with exponent above the order are `1` modulo
/// `q^(order+1)`, so the result is exact.
pub fn pochhammer_infinite(sign: Sign, start: usize, step: usize, order: usize) -> TruncatedSeries {
    assert!(
        start >= 1 && step >= 1,
        "infinite product needs start, step >= 1"
    );
    let n = if start > order {
        0
    } else {
        (order - start) / step + 1
    };
    pochhammer_finite(sign, start, step, n, order)
}

/// An exact polynomial in `q` with integer coefficients. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<Coefficient>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn new(mut coeffs: Vec<Coefficient>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Coefficient {
        self.coeffs.iter().sum()
    }

    /// `q^s * self`.
    pub fn shifted(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Self::new(coeffs)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// `self(q^base)` as a series truncated at `order`.
    pub fn to_series(&self, base: usize, order: usize) -> TruncatedSeries {
        assert!(base >= 1, "substitution base must be positive");
        let mut out = TruncatedSeries::zero(order).into_coeffs();
        for (n, c) in self.coeffs.iter().enumerate() {
            let e = n * base;
            if e > order {
                break;
            }
            out[e] = c.clone();
        }
        TruncatedSeries::from_coeffs(out)
    }
}

type QBinomialRows = Mutex<Vec<Arc<Vec<QPolynomial>>>>;

/// Rows `0..len` of the q-Pascal triangle, extended on demand.
fn qbinomial_rows() -> &'static QBinomialRows {
    static ROWS: OnceLock<QBinomialRows> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![Arc::new(vec![QPolynomial::one()])]))
}

/// The Gaussian binomial coefficient `[n, k]_q`; zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> QPolynomial {
    if n < 0 || k < 0 || k > n {
        return QPolynomial::zero();
    }
    q_binomial_row(n as usize)[k as usize].clone()
}

fn q_binomial_row(n: usize) -> Arc<Vec<QPolynomial>> {
    let mut rows = qbinomial_rows().lock().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is seeded");
        let r = prev.len();
        let mut next = Vec::with_capacity(r + 1);
        next.push(QPolynomial::one());
        for j in 1..r {
            // [r, j] = [r-1, j-1] + q^j [r-1, j]
            next.push(prev[j - 1].add(&prev[j].shifted(j)));
        }
        next.push(QPolynomial::one());
        rows.push(Arc::new(next));
    }
    Arc::clone(&rows[n])
}

/// `[n, k]_{q^base}` truncated at `order`.
pub fn q_binomial_series(n: i64, k: i64, base: usize, order: usize) -> TruncatedSeries {
    q_binomial(n, k).to_series(base, order)
}

/// Ordinary binomial coefficient; zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Coefficient {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    falling_binomial(n, k.min(n - k))
}

/// Binomial coefficient with an arbitrary integer upper index:
/// `x (x-1) ... (x-r+1) / r!`, zero for `r < 0`. Agrees with [`binomial`]
/// for `x >= 0`, but is nonzero for many negative `x`.
pub fn generalized_binomial(x: i64, r: i64) -> Coefficient {
    if r < 0 {
        return BigInt::zero();
    }
    if x >= 0 {
        return binomial(x, r);
    }
    // C(x, r) = (-1)^r C(r - x - 1, r)
    let v = binomial(r - x - 1, r);
    if r % 2 == 1 {
        -v
    } else {
        v
    }
}

fn falling_binomial(n: i64, k: i64) -> Coefficient {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    /// Pascal triangle over plain integers, independent of `falling_binomial`.
    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for r in 1..=n {
            let prev = &rows[r - 1];
            let mut row = vec![BigInt::one(); r + 1];
            for j in 1..r {
                row[j] = &prev[j - 1] + &prev[j];
            }
            rows.push(row);
        }
        rows
    }

    /// Sum of q^(inversions) over k-subsets of {1..n}: a subset S contributes
    /// q^(sum(S) - k(k+1)/2).
    fn q_binomial_by_subsets(n: u32, k: u32) -> QPolynomial {
        let mut coeffs = vec![0i64; (k * (n - k) + 1) as usize];
        for mask in 0u32..(1 << n) {
            if mask.count_ones() != k {
                continue;
            }
            let sum: u32 = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).sum();
            coeffs[(sum - k * (k + 1) / 2) as usize] += 1;
        }
        QPolynomial::from_i64s(&coeffs)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(
            pochhammer_finite(Sign::Plus, 1, 1, 2, 3),
            TruncatedSeries::from_i64s(&[1, -1, -1, 1])
        );
        assert_eq!(
            pochhammer_finite(Sign::Minus, 1, 1, 1, 2),
            TruncatedSeries::from_i64s(&[1, 1, 0])
        );
        assert_eq!(
            pochhammer_finite(Sign::Plus, 1, 2, 2, 4),
            TruncatedSeries::from_i64s(&[1, -1, 0, -1, 1])
        );
        assert_eq!(
            pochhammer_finite(Sign::Plus, 1, 1, 0, 3),
            TruncatedSeries::one(3)
        );
    }

    #[test]
    fn euler_product_prefix() {
        // oracle: multiply (1-q)...(1-q^7) as exact polynomials
        let mut p = QPolynomial::one();
        for e in 1..=7 {
            let mut f = vec![0i64; e + 1];
            f[0] = 1;
            f[e] = -1;
            p = p.mul(&poly(&f));
        }
        let expected = p.to_series(1, 7);
        assert_eq!(pochhammer_infinite(Sign::Plus, 1, 1, 7), expected);
        assert_eq!(
            expected,
            TruncatedSeries::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1])
        );
    }

    #[test]
    fn partition_and_overpartition_numbers() {
        let euler = pochhammer_infinite(Sign::Plus, 1, 1, 5);
        assert_eq!(
            euler.invert().unwrap(),
            TruncatedSeries::from_i64s(&[1, 1, 2, 3, 5, 7])
        );
        let over = pochhammer_infinite(Sign::Minus, 1, 1, 4)
            .mul(&pochhammer_infinite(Sign::Plus, 1, 1, 4).invert().unwrap())
            .unwrap();
        assert_eq!(over, TruncatedSeries::from_i64s(&[1, 2, 4, 8, 14]));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), poly(&[1, 1]));
        assert_eq!(q_binomial(4, 2), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(4, 2), q_binomial_by_subsets(4, 2));
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert_eq!(q_binomial(0, 0), QPolynomial::one());
    }

    #[test]
    fn q_binomial_matches_subset_enumeration() {
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n as i64, k as i64),
                    q_binomial_by_subsets(n, k),
                    "[{n},{k}]"
                );
            }
        }
    }

    #[test]
    fn q_binomial_shape_symmetry_and_pascal() {
        for n in 0..=30i64 {
            for k in 0..=n {
                let p = q_binomial(n, k);
                assert_eq!(p.degree(), Some((k * (n - k)) as usize));
                assert!(p.coeffs().iter().all(|c| c > &BigInt::zero()));
                assert_eq!(p, q_binomial(n, n - k));
                assert_eq!(p.eval_at_one(), binomial(n, k));
                if n >= 1 {
                    let a = q_binomial(n - 1, k - 1).add(&q_binomial(n - 1, k).shifted(k as usize));
                    let b = q_binomial(n - 1, k - 1)
                        .shifted((n - k) as usize)
                        .add(&q_binomial(n - 1, k));
                    assert_eq!(p, a, "first Pascal rule at [{n},{k}]");
                    assert_eq!(p, b, "second Pascal rule at [{n},{k}]");
                }
            }
        }
    }

    #[test]
    fn q_binomial_agrees_with_pochhammer_quotient() {
        for n in 0..=20usize {
            let order = n * n;
            let full = pochhammer_finite(Sign::Plus, 1, 1, n, order);
            for k in 0..=n {
                let lhs = q_binomial_series(n as i64, k as i64, 1, order)
                    .mul(&pochhammer_finite(Sign::Plus, 1, 1, k, order))
                    .unwrap()
                    .mul(&pochhammer_finite(Sign::Plus, 1, 1, n - k, order))
                    .unwrap();
                assert_eq!(lhs, full, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-2, 1), BigInt::zero());
        let rows = pascal(60);
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as i64, k as i64), v);
            }
        }
        assert_eq!(binomial(45, 23), rows[45][23]);
        assert_eq!(binomial(45, 23), "4116715363800".parse::<BigInt>().unwrap());
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(generalized_binomial(-2, 1), BigInt::from(-2));
        assert_eq!(generalized_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(generalized_binomial(-3, 2), BigInt::from(6));
        assert_eq!(generalized_binomial(2, 3), BigInt::zero());
        assert_eq!(generalized_binomial(5, -1), BigInt::zero());
        // direct falling-factorial evaluation
        for x in -12i64..=12 {
            for r in 0i64..=6 {
                let mut num = 1i64;
                let mut den = 1i64;
                for i in 0..r {
                    num *= x - i;
                    den *= i + 1;
                }
                assert_eq!(
                    generalized_binomial(x, r),
                    BigInt::from(num / den),
                    "C({x},{r})"
                );
            }
        }
    }

    #[test]
    fn sign_helpers() {
        assert_eq!(Sign::Plus.power(3), 1);
        assert_eq!(Sign::Minus.power(3), -1);
        assert_eq!(Sign::Minus.power(-2), 1);
        assert_eq!("minus".parse::<Sign>().unwrap(), Sign::Minus);
        assert!("x".parse::<Sign>().is_err());
    }
}
