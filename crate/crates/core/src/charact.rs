//! Deciding balance of `m × n` rectangles from Ostrowski digits alone.
//!
//! With `m <= n`, the rectangles are balanced exactly when the digits of
//! `m` and `n` fall in one of four shapes:
//!
//! * (i) all digits of `m` sit strictly below all digits of `n`;
//! * (ii) `n = q_M + Σ_{k >= M+1+2t} b_k q_k` where `M` is the top index of `m`;
//! * (iii) `m = q_M` and the lowest digit of `n` at index `>= M` sits at `M + 2t`;
//! * (iv) `m = q_{M−1} + a q_M` with `1 <= a < a_{M+1}` and the lowest digit
//!   of `n` at index `>= M` sits at `M + 1 + 2t`.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalpha::ContinuedFraction;
use crate::ostrowski::{self, OstrowskiRep};
use crate::scalar::{self, Scalar};

/// Which shape matched, in the order the shapes are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    OneDim,
    SplitI,
    SplitII,
    ConvergentIII,
    SemiconvergentIV,
    None,
}

impl CaseTag {
    /// Short label used in JSON and TSV output.
    pub fn label(self) -> &'static str {
        match self {
            CaseTag::OneDim => "1d",
            CaseTag::SplitI => "i",
            CaseTag::SplitII => "ii",
            CaseTag::ConvergentIII => "iii",
            CaseTag::SemiconvergentIV => "iv",
            CaseTag::None => "none",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Result of [`decide`]. `m` and `n` are stored after swapping so `m <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceVerdict<T: Scalar = BigInt> {
    pub balanced: bool,
    pub case: CaseTag,
    pub m: T,
    pub n: T,
    pub m_digits: OstrowskiRep<T>,
    pub n_digits: OstrowskiRep<T>,
    /// The index `M` of the matched shape.
    pub big_m: Option<usize>,
    pub t: Option<usize>,
    /// The semi-convergent multiplier of shape (iv).
    pub a: Option<T>,
}

impl<T: Scalar> BalanceVerdict<T> {
    pub fn to_json(&self, alpha: &str) -> serde_json::Value {
        let digits = |r: &OstrowskiRep<T>| -> Vec<serde_json::Value> { r.digits().iter().map(json_int).collect() };
        serde_json::json!({
            "schema": 1,
            "alpha": alpha,
            "m": json_int(&self.m),
            "n": json_int(&self.n),
            "balanced": self.balanced,
            "case": self.case.label(),
            "M": self.big_m,
            "t": self.t,
            "a": self.a.as_ref().map(json_int),
            "m_digits": digits(&self.m_digits),
            "n_digits": digits(&self.n_digits),
        })
    }
}

/// A JSON number when the value fits in `i64`, a decimal string otherwise.
pub fn json_int<T: Scalar>(x: &T) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => v.into(),
        None => x.to_string().into(),
    }
}

struct Match<T> {
    case: CaseTag,
    big_m: Option<usize>,
    t: Option<usize>,
    a: Option<T>,
}

/// Decides whether the `m × n` rectangles are balanced.
///
/// Both values must be positive and below `q_K`; the order of `m` and `n`
/// does not matter.
pub fn decide<T: Scalar>(cf: &ContinuedFraction<T>, m: &T, n: &T) -> Result<BalanceVerdict<T>> {
    if !m.is_positive() || !n.is_positive() {
        return Err(Error::InvalidArgument(format!("m and n must be positive, got {m} and {n}")));
    }
    let (m, n) = if m <= n { (m.clone(), n.clone()) } else { (n.clone(), m.clone()) };
    let m_digits = ostrowski::encode(cf, &m)?;
    let n_digits = ostrowski::encode(cf, &n)?;
    let found = if m.is_one() {
        Some(Match { case: CaseTag::OneDim, big_m: None, t: None, a: None })
    } else {
        match_shape(cf, &m, &m_digits, &n_digits)?
    };
    let found = found.unwrap_or(Match { case: CaseTag::None, big_m: None, t: None, a: None });
    Ok(BalanceVerdict {
        balanced: found.case != CaseTag::None,
        case: found.case,
        m,
        n,
        m_digits,
        n_digits,
        big_m: found.big_m,
        t: found.t,
        a: found.a,
    })
}

fn match_shape<T: Scalar>(
    cf: &ContinuedFraction<T>,
    m: &T,
    m_digits: &OstrowskiRep<T>,
    n_digits: &OstrowskiRep<T>,
) -> Result<Option<Match<T>>> {
    let top = m_digits.top_index().expect("m >= 2 has digits");
    let k0 = n_digits.k0()?;

    if top < k0 {
        return Ok(Some(Match { case: CaseTag::SplitI, big_m: Some(top), t: None, a: None }));
    }
    if n_digits.is_unit_lead_shape(top) {
        let k = n_digits.k_geq(top + 1).expect("checked by the shape test");
        return Ok(Some(Match { case: CaseTag::SplitII, big_m: Some(top), t: Some((k - top - 1) / 2), a: None }));
    }

    // (iii): m = q_M. With m >= 2 this M is unique.
    for big_m in 1..cf.depth() {
        if cf.q(big_m)? == m {
            if let Some(k) = n_digits.k_geq(big_m) {
                if (k - big_m) % 2 == 0 {
                    let t = Some((k - big_m) / 2);
                    return Ok(Some(Match { case: CaseTag::ConvergentIII, big_m: Some(big_m), t, a: None }));
                }
            }
        }
    }

    // (iv): m = q_{M−1} + a q_M, detected numerically so that the
    // degenerate q_0 = q_1 case is not lost to the greedy encoding.
    for big_m in 1..cf.depth() {
        let q_m = cf.q(big_m)?;
        if q_m >= m {
            break;
        }
        let rest = scalar::sub(m, cf.q(big_m - 1)?)?;
        if !rest.is_positive() || !rest.is_multiple_of(q_m) {
            continue;
        }
        let a = rest / q_m.clone();
        let a_next = cf.quotient(big_m + 1)?;
        if a.is_zero() || &a >= a_next {
            continue;
        }
        if let Some(k) = n_digits.k_geq(big_m) {
            if (k - big_m) % 2 == 1 {
                let t = Some((k - big_m - 1) / 2);
                return Ok(Some(Match { case: CaseTag::SemiconvergentIV, big_m: Some(big_m), t, a: Some(a) }));
            }
        }
    }
    Ok(None)
}

/// The two digit shapes of `n` for which `n` minimizes the one-sided
/// distance over `[n−m+1, n+m−1]` on some side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum XStarShape {
    /// `k_0(n) >= M`, where `q_{M−1} < m <= q_M`.
    ShapeA,
    /// `n = q_{M−1} + Σ_{k >= M+2t} b_k q_k` with `b_{M+2t} > 0`.
    ShapeB,
    Neither,
}

/// Classifies `n` against the shapes of [`XStarShape`]; needs `2 <= m <= n < q_K`.
pub fn classify_xstar_shape<T: Scalar>(cf: &ContinuedFraction<T>, m: &T, n: &T) -> Result<XStarShape> {
    let two = scalar::from_u64::<T>(2)?;
    if m < &two || m > n {
        return Err(Error::InvalidArgument(format!("need 2 <= m <= n, got m = {m}, n = {n}")));
    }
    let n_digits = ostrowski::encode(cf, n)?;
    let big_m = (0..=cf.depth())
        .find(|&k| cf.denominators()[k] >= *m)
        .ok_or_else(|| Error::ValueTooLargeForDepth { value: m.to_string(), limit: cf.q(cf.depth()).map(|q| q.to_string()).unwrap_or_default() })?;
    if n_digits.k0()? >= big_m {
        Ok(XStarShape::ShapeA)
    } else if n_digits.is_unit_lead_shape(big_m - 1) {
        Ok(XStarShape::ShapeB)
    } else {
        Ok(XStarShape::Neither)
    }
}
