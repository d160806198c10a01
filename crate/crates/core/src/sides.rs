//! Left- and right-hand sides of the series identities.
//!
//! Every series identity can be built in two forms:
//!
//! * [`Form::Quotient`]: both sides exactly as written, denominators
//!   expanded by series inversion;
//! * [`Form::Cleared`]: both sides multiplied through by the
//!   denominator of the right-hand side, so that the double sums and
//!   Gaussian binomials are compared without any inversion.
//!
//! The sign choices of each identity are captured by a [`SignPattern`]: the
//! sign inside the Pochhammer denominator and the base of the alternating
//! factor. [`printed_pattern`] returns the pattern as stated for a given
//! family sign. Tests lock the printed pattern: at small `k, m` no other
//! pattern verifies, except that `t3-c` also holds with the alternation
//! flipped, which is the same identity after `q -> -q`.
//!
//! Infinite sums over `n` (or `i, j`) stop at the first index whose lowest
//! power of `q` exceeds the truncation order; the truncation is exact.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identity::{IdentityId, Params};
use crate::macmahon::{macmahon_all, Family, SeriesSpec, Truncation};
use crate::qfunc::{binomial, pochhammer_finite, pochhammer_infinite, q_binomial_series, Sign};
use crate::series::TruncatedSeries;
use crate::weights::{pair_weight, theta_a_weight, theta_c_weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Lhs,
    Rhs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Quotient,
    Cleared,
}

/// Sign choices of one identity instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignPattern {
    /// `Plus` builds `(q; ·)` denominators, `Minus` builds `(-q; ·)`.
    pub denominator: Sign,
    /// Base of the alternating factor: `Plus` for `1^e`, `Minus` for `(-1)^e`.
    pub alternation: Sign,
}

impl SignPattern {
    pub const fn new(denominator: Sign, alternation: Sign) -> Self {
        Self {
            denominator,
            alternation,
        }
    }
}

/// The pattern written in each identity for family sign `sign`.
pub fn printed_pattern(id: IdentityId, sign: Sign) -> SignPattern {
    use IdentityId::*;
    use Sign::*;
    match id {
        Ar1 | Ar2 | A3 | T3A | T3C => SignPattern::new(Plus, Minus),
        Os1 | Os2 | A1 => SignPattern::new(Plus, Plus),
        // (±1)^(j-k) with (±q; q^2)_m
        A2 => SignPattern::new(sign, sign),
        // (∓1)^(...) with (±q; ·)
        A4 | M1 | M2 | M3 | M4 => SignPattern::new(sign, sign.flip()),
        C1 | C2 | C10 | C14 | ZeilRec => SignPattern::new(Plus, Plus),
    }
}

/// Validated arguments of a series identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesArgs {
    pub k: u32,
    pub m: Option<u32>,
    pub sign: Sign,
    pub order: usize,
}

/// Checks `params` against the domain of `id` and extracts the arguments.
pub fn series_args(id: IdentityId, params: &Params) -> Result<SeriesArgs> {
    let out_of_domain = |reason: String| Error::OutOfDomain {
        id: id.as_str().to_string(),
        reason,
    };
    if !id.is_series() {
        return Err(out_of_domain("not a series identity".into()));
    }
    let k = params
        .k
        .ok_or_else(|| out_of_domain("k is required".into()))?;
    let order = params
        .order
        .ok_or_else(|| out_of_domain("order is required".into()))?;
    let min_k = id.min_k();
    if k < min_k {
        return Err(out_of_domain(format!("k must be at least {min_k}")));
    }
    let m = if id.needs_m() {
        let m = params
            .m
            .ok_or_else(|| out_of_domain("m is required".into()))?;
        if m < k {
            return Err(out_of_domain(format!("m = {m} must be at least k = {k}")));
        }
        Some(m)
    } else {
        None
    };
    let sign = params.sign.unwrap_or(Sign::Plus);
    if sign == Sign::Minus && !id.has_both_signs() {
        return Err(out_of_domain("only the plus sign is stated".into()));
    }
    Ok(SeriesArgs { k, m, sign, order })
}

/// One side of a series identity, in the requested form.
pub fn build_side(
    id: IdentityId,
    side: Side,
    params: &Params,
    form: Form,
) -> Result<TruncatedSeries> {
    let (lhs, rhs) = build_sides(id, params, form)?;
    Ok(match side {
        Side::Lhs => lhs,
        Side::Rhs => rhs,
    })
}

/// Both sides with the printed sign pattern.
pub fn build_sides(
    id: IdentityId,
    params: &Params,
    form: Form,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let args = series_args(id, params)?;
    build_sides_with_pattern(id, &args, form, printed_pattern(id, args.sign))
}

/// Both sides with an explicit sign pattern. Patterns other than
/// [`printed_pattern`] describe statements that are not claimed to hold;
/// this entry point exists to check that they indeed fail.
pub fn build_sides_with_pattern(
    id: IdentityId,
    args: &SeriesArgs,
    form: Form,
    pattern: SignPattern,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let b = Builder {
        k: args.k as usize,
        m: args.m.map(|m| m as usize),
        sign: args.sign,
        order: args.order,
        pattern,
        form,
    };
    use IdentityId::*;
    match id {
        Ar1 => b.ar1(),
        Ar2 => b.ar2(),
        Os1 => b.os1(),
        Os2 => b.os2(),
        A1 => b.a1(),
        A2 => b.a2(),
        A3 => b.a3(),
        A4 => b.a4(),
        M1 => b.m12(Family::A),
        M2 => b.m12(Family::C),
        M3 => b.m34(Family::A),
        M4 => b.m34(Family::C),
        T3A => b.t3(Family::A),
        T3C => b.t3(Family::C),
        C1 | C2 | C10 | C14 | ZeilRec => Err(Error::OutOfDomain {
            id: id.as_str().to_string(),
            reason: "not a series identity".into(),
        }),
    }
}

fn signed(pattern_sign: Sign, e: i64, value: BigInt) -> BigInt {
    if pattern_sign.power(e) < 0 {
        -value
    } else {
        value
    }
}

fn triangular(n: usize) -> usize {
    n * (n + 1) / 2
}

struct Builder {
    k: usize,
    m: Option<usize>,
    sign: Sign,
    order: usize,
    pattern: SignPattern,
    form: Form,
}

type Pair = (TruncatedSeries, TruncatedSeries);

impl Builder {
    fn m(&self) -> usize {
        self.m.expect("finite-m identity validated")
    }

    fn alt(&self, e: usize, value: BigInt) -> BigInt {
        signed(self.pattern.alternation, e as i64, value)
    }

    fn series(
        &self,
        family: Family,
        sign: Sign,
        k: usize,
        m: Truncation,
        order: usize,
    ) -> TruncatedSeries {
        SeriesSpec::new(family, sign, k as u32, m, order).build()
    }

    /// Returns `(lhs, numerator / denominator)` or `(denominator * lhs, numerator)`.
    fn finish(
        &self,
        lhs: TruncatedSeries,
        numerator: TruncatedSeries,
        denominator: TruncatedSeries,
    ) -> Result<Pair> {
        match self.form {
            Form::Quotient => Ok((lhs, numerator.mul(&denominator.invert()?)?)),
            Form::Cleared => Ok((denominator.mul(&lhs)?, numerator)),
        }
    }

    /// `sum_{n>=k} alt^(n-k) w(n,k) q^(n(n+1)/2)` over the exponents `<= order`.
    fn theta_a(&self, order: usize) -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::zero(order).into_coeffs();
        let mut n = self.k;
        while triangular(n) <= order {
            s[triangular(n)] += self.alt(n - self.k, theta_a_weight(n as i64, self.k as i64)?);
            n += 1;
        }
        Ok(TruncatedSeries::from_coeffs(s))
    }

    /// `sum_{n>=k} alt^(n-k) 2n/(n+k) C(n+k,2k) q^(n^2)`.
    fn theta_c(&self, order: usize) -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::zero(order).into_coeffs();
        let mut n = self.k;
        while n * n <= order {
            s[n * n] += self.alt(n - self.k, theta_c_weight(n as i64, self.k as i64)?);
            n += 1;
        }
        Ok(TruncatedSeries::from_coeffs(s))
    }

    fn ar1(&self) -> Result<Pair> {
        let n = self.order;
        let lhs = self.series(Family::A, Sign::Plus, self.k, Truncation::Infinite, n);
        let den = pochhammer_infinite(self.pattern.denominator, 1, 1, n).pow(3);
        self.finish(lhs, self.theta_a(n)?, den)
    }

    fn ar2(&self) -> Result<Pair> {
        let n = self.order;
        let lhs = self.series(Family::C, Sign::Plus, self.k, Truncation::Infinite, n);
        let num = pochhammer_infinite(Sign::Minus, 1, 1, n).mul(&self.theta_c(n)?)?;
        let den = pochhammer_infinite(self.pattern.denominator, 1, 1, n);
        self.finish(lhs, num, den)
    }

    /// `1/(q;q)^3 = q^(-k(k+1)/2) sum_{j>=k} C(2j+1, j+k+1) A_j^+`.
    ///
    /// The quotient form divides the sum by `q^(k(k+1)/2)` exactly (the low
    /// coefficients must vanish); the cleared form compares `q^(k(k+1)/2)`
    /// with `(q;q)^3` times the sum.
    fn os1(&self) -> Result<Pair> {
        let shift = triangular(self.k);
        self.os(
            Family::A,
            shift,
            |j, k| binomial(2 * j + 1, j + k + 1),
            |d, o| pochhammer_infinite(d, 1, 1, o).pow(3),
            TruncatedSeries::one,
        )
    }

    /// `(-q;q)/(q;q) = q^(-k^2) sum_{j>=k} C(2j, j+k) C_j^+`.
    fn os2(&self) -> Result<Pair> {
        let shift = self.k * self.k;
        self.os(
            Family::C,
            shift,
            |j, k| binomial(2 * j, j + k),
            |d, o| pochhammer_infinite(d, 1, 1, o),
            |o| pochhammer_infinite(Sign::Minus, 1, 1, o),
        )
    }

    fn os(
        &self,
        family: Family,
        shift: usize,
        weight: impl Fn(i64, i64) -> BigInt,
        denominator: impl Fn(Sign, usize) -> TruncatedSeries,
        numerator: impl Fn(usize) -> TruncatedSeries,
    ) -> Result<Pair> {
        let ext = self.order + shift;
        let mut max_j = self.k;
        while family.min_weight(max_j + 1) <= ext {
            max_j += 1;
        }
        let all = macmahon_all(family, Sign::Plus, max_j, Truncation::Infinite, ext);
        let mut sum = TruncatedSeries::zero(ext);
        for (j, series) in all.iter().enumerate().skip(self.k) {
            let c = self.alt(j - self.k, weight(j as i64, self.k as i64));
            sum.add_scaled(series, &c)?;
        }
        match self.form {
            Form::Quotient => {
                let lhs = numerator(self.order)
                    .mul(&denominator(self.pattern.denominator, self.order).invert()?)?;
                Ok((lhs, sum.shift_down(shift)?))
            }
            Form::Cleared => {
                let lhs = numerator(ext).shift_up(shift);
                Ok((lhs, denominator(self.pattern.denominator, ext).mul(&sum)?))
            }
        }
    }

    /// `sum_{j=k}^m C(2j+1, j+k+1) A_{j,m}^+ = q^(k(k+1)/2) [2m+1, m+k+1]_q / (q;q)_m^2`.
    fn a1(&self) -> Result<Pair> {
        let (k, m, n) = (self.k, self.m(), self.order);
        let all = macmahon_all(Family::A, Sign::Plus, m, Truncation::Finite(m as u32), n);
        let mut lhs = TruncatedSeries::zero(n);
        for (j, series) in all.iter().enumerate().skip(k) {
            let c = self.alt(j - k, binomial(2 * j as i64 + 1, (j + k + 1) as i64));
            lhs.add_scaled(series, &c)?;
        }
        let num =
            q_binomial_series(2 * m as i64 + 1, (m + k + 1) as i64, 1, n).shift_up(triangular(k));
        let den = pochhammer_finite(self.pattern.denominator, 1, 1, m, n).pow(2);
        self.finish(lhs, num, den)
    }

    /// `sum_{j=k}^m (±1)^(j-k) C(2j, j+k) C_{j,m}^± = q^(k^2) [2m, m+k]_{q^2} / (±q;q^2)_m^2`.
    fn a2(&self) -> Result<Pair> {
        let (k, m, n) = (self.k, self.m(), self.order);
        let all = macmahon_all(Family::C, self.sign, m, Truncation::Finite(m as u32), n);
        let mut lhs = TruncatedSeries::zero(n);
        for (j, series) in all.iter().enumerate().skip(k) {
            let c = self.alt(j - k, binomial(2 * j as i64, (j + k) as i64));
            lhs.add_scaled(series, &c)?;
        }
        let num = q_binomial_series(2 * m as i64, (m + k) as i64, 2, n).shift_up(k * k);
        let den = pochhammer_finite(self.pattern.denominator, 1, 2, m, n).pow(2);
        self.finish(lhs, num, den)
    }

    /// `A_{k,m}^+ = (q;q)_m^-2 sum_{j=k}^m (-1)^(j-k) (2j+1)/(2k+1) C(j+k,2k) [2m+1, m+j+1]_q q^(j(j+1)/2)`.
    fn a3(&self) -> Result<Pair> {
        let (k, m, n) = (self.k, self.m(), self.order);
        let lhs = self.series(Family::A, Sign::Plus, k, Truncation::Finite(m as u32), n);
        let mut num = TruncatedSeries::zero(n);
        for j in k..=m {
            let w = self.alt(j - k, theta_a_weight(j as i64, k as i64)?);
            let term = q_binomial_series(2 * m as i64 + 1, (m + j + 1) as i64, 1, n)
                .shift_up(triangular(j));
            num.add_scaled(&term, &w)?;
        }
        let den = pochhammer_finite(self.pattern.denominator, 1, 1, m, n).pow(2);
        self.finish(lhs, num, den)
    }

    /// `C_{k,m}^± = (±q;q^2)_m^-2 sum_{j=k}^m (∓1)^(j-k) 2j/(j+k) C(j+k,2k) [2m, m+j]_{q^2} q^(j^2)`.
    fn a4(&self) -> Result<Pair> {
        let (k, m, n) = (self.k, self.m(), self.order);
        let lhs = self.series(Family::C, self.sign, k, Truncation::Finite(m as u32), n);
        let mut num = TruncatedSeries::zero(n);
        for j in k..=m {
            let w = self.alt(j - k, theta_c_weight(j as i64, k as i64)?);
            let term = q_binomial_series(2 * m as i64, (m + j) as i64, 2, n).shift_up(j * j);
            num.add_scaled(&term, &w)?;
        }
        let den = pochhammer_finite(self.pattern.denominator, 1, 2, m, n).pow(2);
        self.finish(lhs, num, den)
    }

    /// The truncated double-sum expansions:
    ///
    /// ```text
    /// A_{k,m}^± = (±q;q)_m^-2   sum_{i=0}^{m-k} sum_{j=i+k}^m (∓1)^(j-i-k) w(j-i) [m,i]_q [m,j]_q q^(i(i+1)/2 + j(j+1)/2)
    /// C_{k,m}^± = (±q;q^2)_m^-2 sum_{i=0}^{m-k} sum_{j=i+k}^m (∓1)^(j-i-k) w(j-i) [m,i]_{q^2} [m,j]_{q^2} q^(i^2 + j^2)
    /// ```
    ///
    /// with `w(d) = d/k C(d+k-1, 2k-1)`.
    fn m12(&self, family: Family) -> Result<Pair> {
        let (k, m, n) = (self.k, self.m(), self.order);
        let lhs = self.series(family, self.sign, k, Truncation::Finite(m as u32), n);
        let base = match family {
            Family::A => 1,
            Family::C => 2,
        };
        // [m, i] q^(min weight of i parts): i distinct allowed parts, each <= the m-th
        let blocks: Vec<TruncatedSeries> = (0..=m)
            .map(|i| q_binomial_series(m as i64, i as i64, base, n).shift_up(family.min_weight(i)))
            .collect();
        let mut num = TruncatedSeries::zero(n);
        for i in 0..=m - k {
            for j in i + k..=m {
                let w = self.alt(j - i - k, pair_weight((j - i) as i64, k as i64)?);
                if w.is_zero() {
                    continue;
                }
                num.add_scaled(&blocks[i].mul(&blocks[j])?, &w)?;
            }
        }
        let den = pochhammer_finite(self.pattern.denominator, 1, base, m, n).pow(2);
        self.finish(lhs, num, den)
    }

    /// `1/(q^b; q^b)_i` for `i = 0..=count`, with `b` the family's base.
    fn inverse_pochhammers(
        family: Family,
        count: usize,
        order: usize,
    ) -> Result<Vec<TruncatedSeries>> {
        let base = match family {
            Family::A => 1,
            Family::C => 2,
        };
        (0..=count)
            .map(|i| pochhammer_finite(Sign::Plus, base, base, i, order).invert())
            .collect()
    }

    /// `sum_{i>=0} sum_{j>=i+k} alt^(j-i-k) w(j-i) q^(e(i)+e(j)) / ((q^b;q^b)_i (q^b;q^b)_j)`
    /// where `e` is the family's minimal weight.
    fn infinite_double_sum(&self, family: Family) -> Result<TruncatedSeries> {
        let (k, n) = (self.k, self.order);
        let mut max = 0;
        while family.min_weight(max + 1) <= n {
            max += 1;
        }
        let inv = Self::inverse_pochhammers(family, max, n)?;
        let mut sum = TruncatedSeries::zero(n);
        for i in 0..=max {
            for j in i + k..=max {
                let e = family.min_weight(i) + family.min_weight(j);
                if e > n {
                    continue;
                }
                let w = self.alt(j - i - k, pair_weight((j - i) as i64, k as i64)?);
                if w.is_zero() {
                    continue;
                }
                let term = inv[i].mul(&inv[j])?.shift_up(e);
                sum.add_scaled(&term, &w)?;
            }
        }
        Ok(sum)
    }

    fn m34(&self, family: Family) -> Result<Pair> {
        let n = self.order;
        let lhs = self.series(family, self.sign, self.k, Truncation::Infinite, n);
        let step = match family {
            Family::A => 1,
            Family::C => 2,
        };
        let den = pochhammer_infinite(self.pattern.denominator, 1, step, n).pow(2);
        self.finish(lhs, self.infinite_double_sum(family)?, den)
    }

    /// `theta / (q;q)_inf = double sum` (A) and `theta / (q^2;q^2)_inf = double sum` (C).
    /// The cleared form multiplies the double sum by the product instead.
    fn t3(&self, family: Family) -> Result<Pair> {
        let n = self.order;
        let (theta, den) = match family {
            Family::A => (
                self.theta_a(n)?,
                pochhammer_infinite(self.pattern.denominator, 1, 1, n),
            ),
            Family::C => (
                self.theta_c(n)?,
                pochhammer_infinite(self.pattern.denominator, 2, 2, n),
            ),
        };
        let double = self.infinite_double_sum(family)?;
        match self.form {
            Form::Quotient => Ok((theta.mul(&den.invert()?)?, double)),
            Form::Cleared => Ok((theta, den.mul(&double)?)),
        }
    }
}
