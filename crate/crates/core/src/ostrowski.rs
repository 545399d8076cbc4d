//! Ostrowski numeration: `n = Σ b_k q_k` with `0 <= b_0 <= a_1 − 1`,
//! `0 <= b_k <= a_{k+1}`, and `b_{k−1} = 0` whenever `b_k = a_{k+1}`.

use std::fmt;

use num_bigint::BigInt;


use crate::error::{Error, Result};
use crate::exactalpha::ContinuedFraction;
use crate::scalar::{self, Scalar};

/// Digits `b_0, ..., b_N` of an Ostrowski representation, lowest index
/// first, with `b_N > 0` (empty for zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OstrowskiRep<T = BigInt> {
    digits: Vec<T>,
}

/// The first digit rule broken by a raw digit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitViolation {
    pub index: usize,
    pub reason: String,
}

impl fmt::Display for DigitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b_{}: {}", self.index, self.reason)
    }
}

/// Checks the three digit rules. Trailing zeros are allowed in the raw input.
pub fn validate<T: Scalar>(cf: &ContinuedFraction<T>, digits: &[T]) -> Result<(), DigitViolation> {
    let violation = |index: usize, reason: String| Err(DigitViolation { index, reason });
    for (k, b) in digits.iter().enumerate() {
        if b.is_negative() {
            return violation(k, "negative digit".into());
        }
        if b.is_zero() {
            continue;
        }
        if k >= cf.depth() {
            return violation(k, format!("digit index beyond the {} stored quotients", cf.depth()));
        }
        let bound = &cf.quotients()[k];
        if k == 0 {
            if b >= bound {
                return violation(0, format!("b_0 must be at most a_1 - 1 = {}", bound.clone() - T::one()));
            }
        } else {
            if b > bound {
                return violation(k, format!("b_{k} must be at most a_{} = {bound}", k + 1));
            }
            if b == bound && !digits[k - 1].is_zero() {
                return violation(k - 1, format!("b_{} must be 0 because b_{k} = a_{}", k - 1, k + 1));
            }
        }
    }
    Ok(())
}

/// Greedy Ostrowski encoding of `0 <= n < q_K`.
pub fn encode<T: Scalar>(cf: &ContinuedFraction<T>, n: &T) -> Result<OstrowskiRep<T>> {
    if n.is_negative() {
        return Err(Error::InvalidArgument(format!("cannot encode negative value {n}")));
    }
    let k_max = cf.depth();
    let limit = cf.q(k_max)?;
    if n >= limit {
        return Err(Error::ValueTooLargeForDepth { value: n.to_string(), limit: limit.to_string() });
    }
    let mut digits = vec![T::zero(); k_max];
    let mut rest = n.clone();
    for k in (0..k_max).rev() {
        if rest.is_zero() {
            break;
        }
        let qk = &cf.denominators()[k];
        let (b, r) = rest.div_rem(qk);
        digits[k] = b;
        rest = r;
    }
    while digits.last().is_some_and(|d| d.is_zero()) {
        digits.pop();
    }
    debug_assert!(validate(cf, &digits).is_ok());
    Ok(OstrowskiRep { digits })
}

/// `Σ b_k q_k` after checking the digit rules against `cf`.
pub fn decode<T: Scalar>(cf: &ContinuedFraction<T>, rep: &OstrowskiRep<T>) -> Result<T> {
    validate(cf, &rep.digits).map_err(|v| Error::InvalidDigits { index: v.index, reason: v.reason })?;
    partial_sum(cf, &rep.digits, 0, rep.digits.len())
}

fn partial_sum<T: Scalar>(cf: &ContinuedFraction<T>, digits: &[T], from: usize, to: usize) -> Result<T> {
    let mut total = T::zero();
    for k in from..to.min(digits.len()) {
        if !digits[k].is_zero() {
            total = scalar::add(&total, &scalar::mul(&digits[k], cf.q(k)?)?)?;
        }
    }
    Ok(total)
}

impl<T: Scalar> OstrowskiRep<T> {
    /// Wraps a raw digit vector after validating it against `cf`.
    pub fn from_digits(cf: &ContinuedFraction<T>, mut digits: Vec<T>) -> Result<Self> {
        validate(cf, &digits).map_err(|v| Error::InvalidDigits { index: v.index, reason: v.reason })?;
        while digits.last().is_some_and(|d| d.is_zero()) {
            digits.pop();
        }
        Ok(OstrowskiRep { digits })
    }

    pub fn digits(&self) -> &[T] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// `b_k`, zero past the top digit.
    pub fn digit(&self, k: usize) -> T {
        self.digits.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Index `N` of the top nonzero digit.
    pub fn top_index(&self) -> Option<usize> {
        self.digits.len().checked_sub(1)
    }

    /// `k_0(n)`, the index of the lowest nonzero digit.
    pub fn k0(&self) -> Result<usize> {
        self.k_geq(0).ok_or(Error::ZeroHasNoDigits)
    }

    /// `k_{>=M}(n)`, the lowest nonzero digit index at or above `M`.
    pub fn k_geq(&self, m: usize) -> Option<usize> {
        self.digits.iter().enumerate().skip(m).find(|(_, d)| !d.is_zero()).map(|(k, _)| k)
    }

    /// `n^{[<=M]}`: the value of the digits with index at most `M`.
    pub fn low_part(&self, cf: &ContinuedFraction<T>, m: usize) -> Result<T> {
        partial_sum(cf, &self.digits, 0, m + 1)
    }

    /// `n^{[>=M]}`: the value of the digits with index at least `M`.
    pub fn high_part(&self, cf: &ContinuedFraction<T>, m: usize) -> Result<T> {
        partial_sum(cf, &self.digits, m, self.digits.len())
    }

    /// Matches the shape `q_L + Σ_{k >= L+1+2t} b_k q_k` with `b_{L+1+2t} > 0`:
    /// the lowest digit is `b_L = 1` and the next nonzero digit sits an odd
    /// number of places above it.
    pub fn is_unit_lead_shape(&self, lead: usize) -> bool {
        self.k_geq(0) == Some(lead)
            && self.digit(lead).is_one()
            && self.k_geq(lead + 1).is_some_and(|k| (k - lead - 1) % 2 == 0)
    }
}

impl<T: Scalar> fmt::Display for OstrowskiRep<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}
