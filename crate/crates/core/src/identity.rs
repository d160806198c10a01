//! Registry of identities and the verification runner.
//!
//! Series identities are checked coefficient by coefficient, first with
//! denominators cleared and then in quotient form. Combinatorial identities
//! compare exact integers over an `n` or `a` range; the recurrence check
//! requires the residual to vanish. A failing check never aborts a run: it
//! produces an [`IdentityReport`] with the first mismatch.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::macmahon::{Family, SeriesSpec, Truncation};
use crate::oracles::{self, Oracle};
use crate::qfunc::{binomial, Sign};
use crate::series::TruncatedSeries;
use crate::sides::{build_sides_with_pattern, printed_pattern, series_args, Form, SignPattern};
use crate::weights::pair_weight;

/// Default upper end of the `n` range for combinatorial identities.
pub const DEFAULT_N_MAX: usize = 25;
/// Default upper end of the `a` range for the binomial lemma.
pub const DEFAULT_A_MAX: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Ar1,
    Ar2,
    Os1,
    Os2,
    A1,
    A2,
    A3,
    A4,
    M1,
    M2,
    M3,
    M4,
    T3A,
    T3C,
    C1,
    C2,
    C10,
    C14,
    ZeilRec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    SeriesIdentity,
    CombinatorialIdentity,
    Recurrence,
}

impl IdentityId {
    pub const ALL: [IdentityId; 19] = [
        IdentityId::Ar1,
        IdentityId::Ar2,
        IdentityId::Os1,
        IdentityId::Os2,
        IdentityId::A1,
        IdentityId::A2,
        IdentityId::A3,
        IdentityId::A4,
        IdentityId::M1,
        IdentityId::M2,
        IdentityId::M3,
        IdentityId::M4,
        IdentityId::T3A,
        IdentityId::T3C,
        IdentityId::C1,
        IdentityId::C2,
        IdentityId::C10,
        IdentityId::C14,
        IdentityId::ZeilRec,
    ];

    pub fn as_str(self) -> &'static str {
        use IdentityId::*;
        match self {
            Ar1 => "ar-1",
            Ar2 => "ar-2",
            Os1 => "os-1",
            Os2 => "os-2",
            A1 => "a-1",
            A2 => "a-2",
            A3 => "a-3",
            A4 => "a-4",
            M1 => "m-1",
            M2 => "m-2",
            M3 => "m-3",
            M4 => "m-4",
            T3A => "t3-a",
            T3C => "t3-c",
            C1 => "c-1",
            C2 => "c-2",
            C10 => "c-10",
            C14 => "c-14",
            ZeilRec => "zeil-rec",
        }
    }

    pub fn description(self) -> &'static str {
        use IdentityId::*;
        match self {
            Ar1 => "A_k^+ = (q;q)^-3 * sum (-1)^(n-k) (2n+1)/(2k+1) C(n+k,2k) q^(n(n+1)/2)",
            Ar2 => "C_k^+ = (-q;q)/(q;q) * sum (-1)^(n-k) 2n/(n+k) C(n+k,2k) q^(n^2)",
            Os1 => "(q;q)^-3 = q^(-k(k+1)/2) sum_{m>=k} C(2m+1,m+k+1) A_m^+",
            Os2 => "(-q;q)/(q;q) = q^(-k^2) sum_{m>=k} C(2m,m+k) C_m^+",
            A1 => "sum_j C(2j+1,j+k+1) A_{j,m}^+ = q^(k(k+1)/2) [2m+1,m+k+1]_q / (q;q)_m^2",
            A2 => "sum_j (±1)^(j-k) C(2j,j+k) C_{j,m}^± = q^(k^2) [2m,m+k]_{q^2} / (±q;q^2)_m^2",
            A3 => "A_{k,m}^+ as a single sum of [2m+1,m+j+1]_q",
            A4 => "C_{k,m}^± as a single sum of [2m,m+j]_{q^2}",
            M1 => "A_{k,m}^± as a double sum of [m,i]_q [m,j]_q",
            M2 => "C_{k,m}^± as a double sum of [m,i]_{q^2} [m,j]_{q^2}",
            M3 => "A_k^± as a double sum over 1/((q;q)_i (q;q)_j)",
            M4 => "C_k^± as a double sum over 1/((q^2;q^2)_i (q^2;q^2)_j)",
            T3A => "single theta-type sum over (q;q) = double sum (A family)",
            T3C => "single theta-type sum over (q^2;q^2) = double sum (C family)",
            C1 => "sum_{j>=floor((k+a)/2)} (2j-a)/k C(2j-a+k-1,2k-1) C(a,j) = 2^(a-k) C(a,k)",
            C2 => "full-range lemma sum = 2^(a-k+1) C(a,k)",
            C10 => "signed P_{2,m,l}(n) sum = weighted Q_{2,m,s,t}(n) sum",
            C14 => "sum_t Q_{2,m,l+2t,t}(n) = P_{2,m,l}(n)",
            ZeilRec => "(a-k) f_k(a) - 2a f_k(a-1) = 0",
        }
    }

    pub fn kind(self) -> Kind {
        use IdentityId::*;
        match self {
            C1 | C2 | C10 | C14 => Kind::CombinatorialIdentity,
            ZeilRec => Kind::Recurrence,
            _ => Kind::SeriesIdentity,
        }
    }

    pub fn is_series(self) -> bool {
        self.kind() == Kind::SeriesIdentity
    }

    /// Series identity with a finite truncation `m`.
    pub fn needs_m(self) -> bool {
        use IdentityId::*;
        matches!(self, A1 | A2 | A3 | A4 | M1 | M2 | C10 | C14)
    }

    /// Stated for both the upper and lower sign.
    pub fn has_both_signs(self) -> bool {
        use IdentityId::*;
        matches!(self, A2 | A4 | M1 | M2 | M3 | M4)
    }

    pub fn uses_k(self) -> bool {
        self != IdentityId::C14
    }

    pub fn min_k(self) -> u32 {
        use IdentityId::*;
        match self {
            Ar1 | Os1 | Os2 | A1 | A2 | C14 => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Parameters of one verification. Which fields are required depends on
/// the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_max: Option<u32>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(s) = self.sign {
            parts.push(format!("sign={s}"));
        }
        if let Some(o) = self.order {
            parts.push(format!("order={o}"));
        }
        if let Some(n) = self.n_max {
            parts.push(format!("n<={n}"));
        }
        if let Some(a) = self.a_max {
            parts.push(format!("a<={a}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// What was compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Checked {
    /// Coefficients `0..=order`.
    Order(usize),
    /// Values for `n` in `from..=to`.
    NRange { from: usize, to: usize },
    /// Values for `a` in `from..=to`.
    ARange { from: u32, to: u32 },
}

impl fmt::Display for Checked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Checked::Order(o) => write!(f, "q^0..q^{o}"),
            Checked::NRange { from, to } => write!(f, "n={from}..={to}"),
            Checked::ARange { from, to } => write!(f, "a={from}..={to}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

fn as_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// First disagreement between the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Coefficient exponent, `n`, or `a`, depending on [`Checked`].
    pub index: usize,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub checked: Checked,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    /// Set when a side could not be built (e.g. a weight was not integral).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
    /// Wall time; left out of serialized reports so they are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn new(
        id: &str,
        params: Params,
        checked: Checked,
        outcome: Result<Option<Mismatch>>,
        start: Instant,
    ) -> Self {
        let (status, first_mismatch, diagnostic) = match outcome {
            Ok(None) => (Status::Pass, None, None),
            Ok(Some(m)) => (Status::Fail, Some(m), None),
            Err(e) => (Status::Fail, None, Some(e.to_string())),
        };
        Self {
            id: id.to_string(),
            params,
            checked,
            status,
            first_mismatch,
            diagnostic,
            elapsed: start.elapsed(),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "{status} {:<8} {:<28} {:<14} {:>9.3}ms",
            self.id,
            self.params.to_string(),
            self.checked.to_string(),
            self.elapsed.as_secs_f64() * 1e3
        )?;
        if let Some(m) = &self.first_mismatch {
            write!(
                f,
                "  first mismatch at {}: lhs={} rhs={}",
                m.index, m.lhs, m.rhs
            )?;
            if let Some(c) = &m.context {
                write!(f, " ({c})")?;
            }
        }
        if let Some(d) = &self.diagnostic {
            write!(f, "  error: {d}")?;
        }
        Ok(())
    }
}

fn series_mismatch(
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    context: &str,
) -> Option<Mismatch> {
    if lhs.order() != rhs.order() {
        let index = lhs.order().min(rhs.order()) + 1;
        return Some(Mismatch {
            index,
            lhs: BigInt::zero(),
            rhs: BigInt::zero(),
            context: Some(format!(
                "{context}: orders {} vs {}",
                lhs.order(),
                rhs.order()
            )),
        });
    }
    lhs.first_mismatch(rhs).map(|index| Mismatch {
        index,
        lhs: lhs.coeff(index).clone(),
        rhs: rhs.coeff(index).clone(),
        context: Some(context.to_string()),
    })
}

fn out_of_domain(id: IdentityId, reason: &str) -> Error {
    Error::OutOfDomain {
        id: id.as_str().to_string(),
        reason: reason.to_string(),
    }
}

/// Verifies one identity at one parameter point, with the default oracle guard.
pub fn verify(id: IdentityId, params: &Params) -> Result<IdentityReport> {
    verify_with(id, params, &Oracle::default())
}

/// Parses `id` first; unknown names are an error.
pub fn verify_by_name(id: &str, params: &Params) -> Result<IdentityReport> {
    verify(id.parse()?, params)
}

/// Like [`verify`], with an explicit enumeration guard.
///
/// Parameters outside the identity's domain are an `Err`; everything that
/// goes wrong while building or comparing the two sides is a failed report.
pub fn verify_with(id: IdentityId, params: &Params, oracle: &Oracle) -> Result<IdentityReport> {
    if id.is_series() {
        let args = series_args(id, params)?;
        return verify_series_with_pattern(id, params, printed_pattern(id, args.sign));
    }
    let start = Instant::now();
    match id {
        IdentityId::C1 | IdentityId::C2 | IdentityId::ZeilRec => {
            let k = params.k.ok_or_else(|| out_of_domain(id, "k is required"))?;
            if k < 1 {
                return Err(out_of_domain(id, "k must be at least 1"));
            }
            let a_max = params.a_max.unwrap_or(DEFAULT_A_MAX);
            let from = if id == IdentityId::ZeilRec { 1 } else { 0 };
            if a_max < from {
                return Err(out_of_domain(id, "a_max must be at least 1"));
            }
            let params = Params {
                a_max: Some(a_max),
                ..params.clone()
            };
            let outcome = check_lemma(id, k, from, a_max);
            Ok(IdentityReport::new(
                id.as_str(),
                params,
                Checked::ARange { from, to: a_max },
                outcome,
                start,
            ))
        }
        IdentityId::C10 | IdentityId::C14 => {
            let m = params.m.ok_or_else(|| out_of_domain(id, "m is required"))?;
            let n_max = params.n_max.unwrap_or(DEFAULT_N_MAX);
            oracle.check(n_max)?;
            let k = if id == IdentityId::C10 {
                let k = params.k.ok_or_else(|| out_of_domain(id, "k is required"))?;
                if k < 1 {
                    return Err(out_of_domain(id, "k must be at least 1"));
                }
                Some(k)
            } else {
                None
            };
            let params = Params {
                n_max: Some(n_max),
                ..params.clone()
            };
            let outcome = (0..=n_max).try_fold(None, |found, n| {
                if found.is_some() {
                    return Ok(found);
                }
                let tally = oracle.restricted_tally(m as usize, n)?;
                match k {
                    Some(k) => c10_at(&tally, m as usize, k as usize, n),
                    None => c14_at(&tally, m as usize, n),
                }
            });
            Ok(IdentityReport::new(
                id.as_str(),
                params,
                Checked::NRange { from: 0, to: n_max },
                outcome,
                start,
            ))
        }
        _ => unreachable!("series identities handled above"),
    }
}

/// Series identity with an explicit sign pattern; see
/// [`crate::sides::build_sides_with_pattern`].
pub fn verify_series_with_pattern(
    id: IdentityId,
    params: &Params,
    pattern: SignPattern,
) -> Result<IdentityReport> {
    let args = series_args(id, params)?;
    let start = Instant::now();
    let outcome = [
        (Form::Cleared, "cleared form"),
        (Form::Quotient, "quotient form"),
    ]
    .into_iter()
    .try_fold(None, |found, (form, label)| {
        if found.is_some() {
            return Ok(found);
        }
        let (lhs, rhs) = build_sides_with_pattern(id, &args, form, pattern)?;
        Ok(series_mismatch(&lhs, &rhs, label))
    });
    let params = Params {
        sign: Some(args.sign),
        ..params.clone()
    };
    Ok(IdentityReport::new(
        id.as_str(),
        params,
        Checked::Order(args.order),
        outcome,
        start,
    ))
}

fn check_lemma(id: IdentityId, k: u32, from: u32, to: u32) -> Result<Option<Mismatch>> {
    for a in from..=to {
        let (lhs, rhs) = match id {
            IdentityId::C1 => (oracles::lemma_lhs(k, a)?, oracles::lemma_rhs(k, a)),
            IdentityId::C2 => (
                oracles::lemma_full_lhs(k, a)?,
                oracles::lemma_full_rhs(k, a),
            ),
            _ => (oracles::recurrence_residual(k, a)?, BigInt::zero()),
        };
        if lhs != rhs {
            return Ok(Some(Mismatch {
                index: a as usize,
                lhs,
                rhs,
                context: None,
            }));
        }
    }
    Ok(None)
}

/// Both sides of the P/Q identity at one `n`:
/// `sum_l (-2)^(l-k) C(l,k) P(l)` against
/// `sum_{i,j,t} (-1)^(j-i-k) (j-i)/k C(j-i+k-1,2k-1) C(i+j-2t, j-t) Q(i+j, t)`.
fn c10_at(
    tally: &oracles::RestrictedTally,
    m: usize,
    k: usize,
    n: usize,
) -> Result<Option<Mismatch>> {
    let mut lhs = BigInt::zero();
    for l in k..=m {
        let term = (binomial(l as i64, k as i64) * BigInt::from(tally.p(l))) << (l - k);
        if (l - k) % 2 == 1 {
            lhs -= term;
        } else {
            lhs += term;
        }
    }
    let mut rhs = BigInt::zero();
    if k <= m {
        for i in 0..=m - k {
            for j in i + k..=m {
                let w = pair_weight((j - i) as i64, k as i64)?;
                let w = if (j - i - k) % 2 == 1 { -w } else { w };
                for t in 0..=m {
                    let q = tally.q(i + j, t);
                    if q == 0 {
                        continue;
                    }
                    let c = binomial(i as i64 + j as i64 - 2 * t as i64, j as i64 - t as i64);
                    rhs += &w * c * BigInt::from(q);
                }
            }
        }
    }
    Ok((lhs != rhs).then_some(Mismatch {
        index: n,
        lhs,
        rhs,
        context: None,
    }))
}

fn c14_at(tally: &oracles::RestrictedTally, m: usize, n: usize) -> Result<Option<Mismatch>> {
    for l in 0..=m {
        let lhs: u64 = (0..=m - l).map(|t| tally.q(l + 2 * t, t)).sum();
        let rhs = tally.p(l);
        if lhs != rhs {
            return Ok(Some(Mismatch {
                index: n,
                lhs: BigInt::from(lhs),
                rhs: BigInt::from(rhs),
                context: Some(format!("l={l}")),
            }));
        }
    }
    Ok(None)
}

/// A parameter grid. `k` / `m` pin a single value; otherwise `k` sweeps
/// from the identity's minimum to `max_k` and `m` from `max(k, 1)` to `max_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub order: usize,
    pub max_k: u32,
    pub max_m: u32,
    pub k: Option<u32>,
    pub m: Option<u32>,
    pub signs: Vec<Sign>,
    pub n_max: usize,
    pub a_max: u32,
}

impl GridSpec {
    pub fn new(order: usize, max_k: u32, max_m: u32) -> Self {
        Self {
            order,
            max_k,
            max_m,
            k: None,
            m: None,
            signs: Sign::BOTH.to_vec(),
            n_max: DEFAULT_N_MAX,
            a_max: DEFAULT_A_MAX,
        }
    }

    /// Parameter points for `id`, in ascending order.
    pub fn params_for(&self, id: IdentityId) -> Vec<Params> {
        let ks: Vec<Option<u32>> = if !id.uses_k() {
            vec![None]
        } else if let Some(k) = self.k {
            vec![Some(k)]
        } else {
            (id.min_k()..=self.max_k).map(Some).collect()
        };
        let signs: Vec<Option<Sign>> = if !id.is_series() {
            vec![None]
        } else if id.has_both_signs() {
            self.signs.iter().copied().map(Some).collect()
        } else if self.signs.contains(&Sign::Plus) {
            vec![Some(Sign::Plus)]
        } else {
            // a lone minus on a plus-only identity; verification reports the domain error
            vec![Some(Sign::Minus)]
        };
        let mut out = Vec::new();
        for &k in &ks {
            let ms: Vec<Option<u32>> = if !id.needs_m() {
                vec![None]
            } else if let Some(m) = self.m {
                vec![Some(m)]
            } else {
                let lo = k.unwrap_or(0).max(1);
                (lo..=self.max_m).map(Some).collect()
            };
            for &m in &ms {
                for &sign in &signs {
                    let mut p = Params {
                        k,
                        m,
                        sign,
                        ..Params::default()
                    };
                    match id.kind() {
                        Kind::SeriesIdentity => p.order = Some(self.order),
                        _ if id.needs_m() => p.n_max = Some(self.n_max),
                        _ => p.a_max = Some(self.a_max),
                    }
                    out.push(p);
                }
            }
        }
        out
    }
}

/// Verifies every point of `grid` for each of `ids`, in parallel. Reports
/// come back in the order of `ids`, then grid order.
pub fn verify_grid(
    ids: &[IdentityId],
    grid: &GridSpec,
    oracle: &Oracle,
) -> Result<Vec<IdentityReport>> {
    let jobs: Vec<(IdentityId, Params)> = ids
        .iter()
        .flat_map(|&id| grid.params_for(id).into_iter().map(move |p| (id, p)))
        .collect();
    jobs.par_iter()
        .map(|(id, p)| verify_with(*id, p, oracle))
        .collect()
}

/// Every registered identity over the default grid bounded by `order`,
/// `max_k` and `max_m`, both signs where stated.
pub fn verify_suite(order: usize, max_k: u32, max_m: u32) -> Vec<IdentityReport> {
    let grid = GridSpec::new(order, max_k, max_m);
    verify_grid(&IdentityId::ALL, &grid, &Oracle::default())
        .expect("default grid lies inside every domain")
}

/// `A_{k,m}^±` against `A_k^±` on coefficients `0..=m`, and `C_{k,m}^±`
/// against `C_k^±` on `0..=2m-1`, for `m = k, 2k, 4k, ...` up to `order`.
pub fn limit_consistency(k: u32, sign: Sign, order: usize) -> Result<IdentityReport> {
    let mut ladder = Vec::new();
    let mut m = k.max(1);
    loop {
        ladder.push(m);
        m *= 2;
        if m as usize > order {
            break;
        }
    }
    limit_consistency_over(k, sign, order, &ladder)
}

/// [`limit_consistency`] over an explicit list of truncations.
pub fn limit_consistency_over(
    k: u32,
    sign: Sign,
    order: usize,
    ladder: &[u32],
) -> Result<IdentityReport> {
    if k < 1 {
        return Err(Error::OutOfDomain {
            id: "limit".into(),
            reason: "k must be at least 1".into(),
        });
    }
    let start = Instant::now();
    let mut outcome = None;
    'families: for family in [Family::A, Family::C] {
        let full = SeriesSpec::new(family, sign, k, Truncation::Infinite, order).build();
        for &m in ladder {
            let truncated = SeriesSpec::new(family, sign, k, Truncation::Finite(m), order).build();
            let stable = match family {
                Family::A => m as usize,
                Family::C => (2 * m as usize).saturating_sub(1),
            }
            .min(order);
            if let Some(index) = truncated
                .truncate(stable)
                .first_mismatch(&full.truncate(stable))
            {
                outcome = Some(Mismatch {
                    index,
                    lhs: truncated.coeff(index).clone(),
                    rhs: full.coeff(index).clone(),
                    context: Some(format!("{family} m={m}")),
                });
                break 'families;
            }
        }
    }
    let params = Params {
        k: Some(k),
        sign: Some(sign),
        order: Some(order),
        ..Params::default()
    };
    Ok(IdentityReport::new(
        "limit",
        params,
        Checked::Order(order),
        Ok(outcome),
        start,
    ))
}

/// Number of passing reports.
pub fn count_passed(reports: &[IdentityReport]) -> usize {
    reports.iter().filter(|r| r.passed()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        let names: Vec<&str> = IdentityId::ALL.iter().map(|id| id.as_str()).collect();
        assert_eq!(names.len(), 19);
        let expected = [
            "ar-1", "ar-2", "os-1", "os-2", "a-1", "a-2", "a-3", "a-4", "m-1", "m-2", "m-3", "m-4",
            "t3-a", "t3-c", "c-1", "c-2", "c-10", "c-14", "zeil-rec",
        ];
        assert_eq!(names, expected);
        for name in expected {
            assert_eq!(name.parse::<IdentityId>().unwrap().as_str(), name);
        }
        assert_eq!(
            "bogus".parse::<IdentityId>().unwrap_err(),
            Error::UnknownIdentity("bogus".into())
        );
    }

    fn p(k: u32, m: Option<u32>, sign: Sign, order: usize) -> Params {
        Params {
            k: Some(k),
            m,
            sign: Some(sign),
            order: Some(order),
            ..Params::default()
        }
    }

    #[test]
    fn spec_examples() {
        assert!(verify(IdentityId::M1, &p(1, Some(1), Sign::Plus, 20))
            .unwrap()
            .passed());
        for k in 0..=4 {
            assert!(verify(IdentityId::A1, &p(k, Some(k), Sign::Plus, 30))
                .unwrap()
                .passed());
        }
        let lemma = Params {
            k: Some(3),
            a_max: Some(2),
            ..Params::default()
        };
        let r = verify(IdentityId::C1, &lemma).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, Checked::ARange { from: 0, to: 2 });
    }

    #[test]
    fn domain_errors_are_errors() {
        assert!(verify(IdentityId::M1, &p(0, Some(1), Sign::Plus, 5)).is_err());
        assert!(verify(IdentityId::Ar1, &p(1, None, Sign::Minus, 5)).is_err());
        assert!(verify(IdentityId::C10, &Params::default()).is_err());
        let big = Params {
            k: Some(1),
            m: Some(3),
            n_max: Some(41),
            ..Params::default()
        };
        assert!(matches!(
            verify(IdentityId::C10, &big),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(verify_by_name("nope", &Params::default()).is_err());
    }

    #[test]
    fn flipped_sign_is_caught() {
        let params = p(1, Some(3), Sign::Plus, 20);
        let printed = printed_pattern(IdentityId::M1, Sign::Plus);
        let corrupted = SignPattern::new(printed.denominator, printed.alternation.flip());
        let r = verify_series_with_pattern(IdentityId::M1, &params, corrupted).unwrap();
        assert_eq!(r.status, Status::Fail);
        let m = r.first_mismatch.expect("mismatch recorded");
        assert_ne!(m.lhs, m.rhs);
        assert_eq!(m.context.as_deref(), Some("cleared form"));
    }

    #[test]
    fn pass_at_order_implies_pass_below() {
        for order in [0, 1, 2, 7, 15] {
            for id in [
                IdentityId::M1,
                IdentityId::A3,
                IdentityId::Os1,
                IdentityId::T3C,
            ] {
                let m = id.needs_m().then_some(3);
                assert!(
                    verify(id, &p(1, m, Sign::Plus, order)).unwrap().passed(),
                    "{id} order {order}"
                );
            }
        }
    }

    #[test]
    fn grid_shapes() {
        let g = GridSpec::new(10, 2, 3);
        // k = 1..=2, m = k..=3, two signs
        assert_eq!(g.params_for(IdentityId::M1).len(), (3 + 2) * 2);
        // k = 0..=2, plus only
        assert_eq!(g.params_for(IdentityId::Ar1).len(), 3);
        assert_eq!(g.params_for(IdentityId::C14).len(), 3);
        assert_eq!(g.params_for(IdentityId::C1).len(), 2);
        let mut pinned = g.clone();
        pinned.k = Some(1);
        pinned.m = Some(2);
        pinned.signs = vec![Sign::Minus];
        assert_eq!(
            pinned.params_for(IdentityId::M2),
            vec![p(1, Some(2), Sign::Minus, 10)]
        );
    }

    #[test]
    fn degenerate_suite_passes() {
        let reports = verify_suite(1, 1, 1);
        assert!(reports.iter().all(IdentityReport::passed), "{reports:#?}");
        let ids: std::collections::BTreeSet<&str> = reports.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids.len(), 19);
    }

    #[test]
    fn limit_examples() {
        assert!(limit_consistency_over(1, Sign::Plus, 16, &[2, 4, 8])
            .unwrap()
            .passed());
        assert!(limit_consistency_over(2, Sign::Minus, 16, &[2])
            .unwrap()
            .passed());
        assert!(limit_consistency(1, Sign::Plus, 16).unwrap().passed());
        assert!(limit_consistency(0, Sign::Plus, 16).is_err());
    }

    #[test]
    fn report_json_has_no_timing() {
        let r = verify(IdentityId::M2, &p(2, Some(3), Sign::Minus, 12)).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"id":"m-2","params":{"k":2,"m":3,"sign":"minus","order":12},"checked":{"order":12},"status":"pass"}"#
        );
    }
}
