//! Exact point counting on the torus `R/Z`.
//!
//! Points are linear forms in `[0, 1)`; intervals `[x, x + d)` wrap around 0.
//! The interval-balance oracle decides the balance of all intervals of a
//! given length exactly by visiting the finitely many left endpoints where
//! the count can change.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalpha::{ContinuedFraction, LinearForm, Side, Sign};
use crate::ostrowski;
use crate::scalar::{self, Scalar};

/// A set of distinct points `ξ_0, ..., ξ_{m−1}` in `[0, 1)` with their sorted order.
#[derive(Clone, Debug)]
pub struct TorusPointSet<T: Scalar = BigInt> {
    alpha: ContinuedFraction<T>,
    points: Vec<LinearForm<T>>,
    // indices into `points`, ascending by value
    order: Vec<usize>,
}

/// The generic point set `{ℓα mod 1 : 0 <= ℓ < m}`.
pub fn points_of_alpha<T: Scalar>(cf: &ContinuedFraction<T>, m: usize) -> Result<TorusPointSet<T>> {
    if m == 0 {
        return Err(Error::InvalidArgument("point sets need m >= 1".into()));
    }
    let points = (0..m as u64)
        .map(|l| cf.frac_mul(&scalar::from_u64(l)?))
        .collect::<Result<Vec<_>>>()?;
    TorusPointSet::new(cf.clone(), points)
}

impl<T: Scalar> TorusPointSet<T> {
    /// Validates that every point lies in `[0, 1)` and that the points are distinct.
    pub fn new(alpha: ContinuedFraction<T>, points: Vec<LinearForm<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("point sets need m >= 1".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if !in_unit_interval(&alpha, p)? {
                return Err(Error::InvalidArgument(format!("point {i} = {p} is outside [0, 1)")));
            }
        }
        let mut failure = None;
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| {
            alpha.cmp(&points[a], &points[b]).unwrap_or_else(|e| {
                failure.get_or_insert(e);
                Ordering::Equal
            })
        });
        if let Some(e) = failure {
            return Err(e);
        }
        for pair in order.windows(2) {
            if alpha.cmp(&points[pair[0]], &points[pair[1]])? != Ordering::Less {
                return Err(Error::InvalidArgument(format!(
                    "points {} and {} coincide",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(TorusPointSet { alpha, points, order })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn alpha(&self) -> &ContinuedFraction<T> {
        &self.alpha
    }

    pub fn point(&self, index: usize) -> &LinearForm<T> {
        &self.points[index]
    }

    /// Point indices in ascending order of value.
    pub fn sorted_indices(&self) -> &[usize] {
        &self.order
    }

    /// Number of points strictly below `y`, and the index of the point equal
    /// to `y` if there is one. `y` must lie in `[0, 1)`.
    fn locate(&self, y: &LinearForm<T>) -> Result<(usize, Option<usize>)> {
        let (mut lo, mut hi) = (0, self.order.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.alpha.cmp(&self.points[self.order[mid]], y)? {
                Ordering::Less => lo = mid + 1,
                Ordering::Equal => return Ok((mid, Some(self.order[mid]))),
                Ordering::Greater => hi = mid,
            }
        }
        Ok((lo, None))
    }

    /// `y mod 1` for `y` in `[−1, 2)`.
    fn wrap(&self, y: LinearForm<T>) -> Result<LinearForm<T>> {
        if self.alpha.sign(&y)? == Sign::Negative {
            return y.add_integer(&T::one());
        }
        let minus_one = y.add_integer(&scalar::neg(&T::one())?)?;
        if self.alpha.sign(&minus_one)? != Sign::Negative {
            return Ok(minus_one);
        }
        Ok(y)
    }

    fn check_length(&self, d: &LinearForm<T>) -> Result<()> {
        let positive = self.alpha.sign(d)? == Sign::Positive;
        let below_one = self.alpha.sign(&d.add_integer(&scalar::neg(&T::one())?)?)? == Sign::Negative;
        if positive && below_one {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("interval length {d} is not in (0, 1)")))
        }
    }

    /// `#([x, x + d) ∩ A)` with the interval taken modulo 1.
    pub fn count_in_interval(&self, x: &LinearForm<T>, d: &LinearForm<T>) -> Result<usize> {
        if !in_unit_interval(&self.alpha, x)? {
            return Err(Error::InvalidArgument(format!("left endpoint {x} is not in [0, 1)")));
        }
        self.check_length(d)?;
        self.count_unchecked(x, d)
    }

    fn count_unchecked(&self, x: &LinearForm<T>, d: &LinearForm<T>) -> Result<usize> {
        let (below_x, _) = self.locate(x)?;
        let end = x.add(d)?;
        let end_minus_one = end.add_integer(&scalar::neg(&T::one())?)?;
        if self.alpha.sign(&end_minus_one)? == Sign::Negative {
            let (below_end, _) = self.locate(&end)?;
            Ok(below_end - below_x)
        } else {
            let (below_end, _) = self.locate(&end_minus_one)?;
            Ok(self.len() - below_x + below_end)
        }
    }

    /// Decides whether every interval of length `d` holds `c` or `c + 1` points.
    ///
    /// The count is left-continuous and piecewise constant in the left
    /// endpoint `x`, changing only at `x ∈ A` and `x ∈ A − d`. Evaluating the
    /// count at each such `x` and just to its right covers every value.
    pub fn interval_balance_oracle(&self, d: &LinearForm<T>) -> Result<IntervalBalanceVerdict<T>> {
        self.check_length(d)?;
        let mut critical = Vec::with_capacity(2 * self.len());
        for p in &self.points {
            critical.push(p.clone());
            critical.push(self.wrap(p.sub(d)?)?);
        }
        let mut counts_seen = BTreeSet::new();
        let mut pending: Vec<(usize, LinearForm<T>, bool)> = Vec::new();
        for x in &critical {
            let at = self.count_unchecked(x, d)?;
            let (_, x_is_point) = self.locate(x)?;
            let (_, end_is_point) = self.locate(&self.wrap(x.add(d)?)?)?;
            let right = at - usize::from(x_is_point.is_some()) + usize::from(end_is_point.is_some());
            for (count, just_right) in [(at, false), (right, true)] {
                if counts_seen.insert(count) && pending.len() < 3 {
                    pending.push((count, x.clone(), just_right));
                }
            }
        }
        let mut witnesses = Vec::with_capacity(pending.len());
        for (count, x, just_right) in pending {
            let left = if just_right { self.point_right_of(&x, &critical)? } else { x };
            witnesses.push(IntervalWitness { left, count });
        }
        let min = *counts_seen.first().expect("at least one critical endpoint");
        let max = *counts_seen.last().expect("at least one critical endpoint");
        let balanced = max - min <= 1;
        Ok(IntervalBalanceVerdict {
            balanced,
            c: balanced.then_some(min),
            counts_seen,
            witnesses,
        })
    }

    /// A left endpoint strictly between `x` and the next critical value.
    fn point_right_of(&self, x: &LinearForm<T>, critical: &[LinearForm<T>]) -> Result<LinearForm<T>> {
        let mut next: Option<LinearForm<T>> = None;
        let mut lowest = &critical[0];
        for c in critical {
            if self.alpha.cmp(c, lowest)? == Ordering::Less {
                lowest = c;
            }
            if self.alpha.cmp(c, x)? == Ordering::Greater {
                let closer = match &next {
                    Some(n) => self.alpha.cmp(c, n)? == Ordering::Less,
                    None => true,
                };
                if closer {
                    next = Some(c.clone());
                }
            }
        }
        let next = match next {
            Some(n) => n,
            None => lowest.add_integer(&T::one())?,
        };
        self.wrap(LinearForm::midpoint(x, &next)?)
    }

    /// Whether `d` equals `ξ_i − ξ_j mod 1` for some `i`, `j`; returns `(i, j)`.
    pub fn distance_collision(&self, d: &LinearForm<T>) -> Result<Option<(usize, usize)>> {
        for j in 0..self.len() {
            let shifted = self.wrap(self.points[j].add(d)?)?;
            if let (_, Some(i)) = self.locate(&shifted)? {
                return Ok(Some((i, j)));
            }
        }
        Ok(None)
    }

    /// `f_left(ℓ)` / `f_right(ℓ)`: the index of the point closest to
    /// `ξ_ℓ + d` on the given side, distances measured modulo 1. A point
    /// exactly at `ξ_ℓ + d` has distance 0 and is chosen on both sides.
    pub fn f_map(&self, d: &LinearForm<T>, side: Side, l: usize) -> Result<usize> {
        if l >= self.len() {
            return Err(Error::IndexOutOfRange { index: l, max: self.len() - 1 });
        }
        self.check_length(d)?;
        let target = self.wrap(self.points[l].add(d)?)?;
        let (below, equal) = self.locate(&target)?;
        if let Some(j) = equal {
            return Ok(j);
        }
        let m = self.len();
        let rank = match side {
            Side::Left => (below + m - 1) % m,
            Side::Right => below % m,
        };
        Ok(self.order[rank])
    }

    /// Whether `ℓ ↦ f_side(ℓ)` is a permutation of `{0, ..., m−1}`.
    ///
    /// Fails with [`Error::DistanceCollision`] when `d` is a difference of
    /// two points; bijectivity no longer characterizes balance there.
    pub fn is_bijective_f(&self, d: &LinearForm<T>, side: Side) -> Result<bool> {
        self.check_length(d)?;
        if let Some((i, j)) = self.distance_collision(d)? {
            return Err(Error::DistanceCollision { i, j });
        }
        let mut hit = vec![false; self.len()];
        for l in 0..self.len() {
            let j = self.f_map(d, side, l)?;
            if std::mem::replace(&mut hit[j], true) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn in_unit_interval<T: Scalar>(cf: &ContinuedFraction<T>, x: &LinearForm<T>) -> Result<bool> {
    Ok(cf.sign(x)? != Sign::Negative
        && cf.sign(&x.add_integer(&scalar::neg(&T::one())?)?)? == Sign::Negative)
}

/// An exact left endpoint together with the count it realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalWitness<T: Scalar = BigInt> {
    pub left: LinearForm<T>,
    pub count: usize,
}

/// Outcome of [`TorusPointSet::interval_balance_oracle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalBalanceVerdict<T: Scalar = BigInt> {
    pub balanced: bool,
    /// Base count `c` when every interval holds `c` or `c + 1` points.
    pub c: Option<usize>,
    pub counts_seen: BTreeSet<usize>,
    /// Up to three left endpoints realizing distinct counts.
    pub witnesses: Vec<IntervalWitness<T>>,
}

#[derive(Serialize)]
struct WitnessJson {
    x_num: String,
    x_alpha_coeff: String,
    x_den: String,
    count: usize,
}

impl<T: Scalar> IntervalBalanceVerdict<T> {
    pub fn to_json(&self) -> serde_json::Value {
        let witnesses: Vec<WitnessJson> = self
            .witnesses
            .iter()
            .map(|w| WitnessJson {
                x_num: w.left.const_part().to_string(),
                x_alpha_coeff: w.left.alpha_coeff().to_string(),
                x_den: w.left.denominator().to_string(),
                count: w.count,
            })
            .collect();
        serde_json::json!({
            "balanced": self.balanced,
            "counts": self.counts_seen,
            "witnesses": witnesses,
        })
    }
}

fn check_m_le_n(m: u64, n: u64) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
    }
    Ok(())
}

/// Minimizer of `|xα|_side` over the integer range `lo..=hi`.
fn argmin_side<T: Scalar>(cf: &ContinuedFraction<T>, lo: u64, hi: u64, side: Side) -> Result<u64> {
    let mut best = lo;
    let mut best_val = cf.side_dist(&scalar::from_u64(lo)?, side)?;
    for x in lo + 1..=hi {
        let val = cf.side_dist(&scalar::from_u64(x)?, side)?;
        if cf.cmp(&val, &best_val)? == Ordering::Less {
            best = x;
            best_val = val;
        }
    }
    Ok(best)
}

/// `x_side(ℓ)`: the minimizer of `|xα|_side` over `X(ℓ) = [n+ℓ−m+1, n+ℓ]`.
pub fn x_func<T: Scalar>(cf: &ContinuedFraction<T>, m: u64, n: u64, side: Side, l: u64) -> Result<u64> {
    check_m_le_n(m, n)?;
    if l >= m {
        return Err(Error::IndexOutOfRange { index: l as usize, max: m as usize - 1 });
    }
    argmin_side(cf, n + l + 1 - m, n + l, side)
}

/// `n + ℓ − f_side(ℓ)` on the set `{ℓα}` with `d = {nα}`; agrees with [`x_func`].
pub fn x_func_via_f<T: Scalar>(set: &TorusPointSet<T>, n: u64, side: Side, l: u64) -> Result<u64> {
    let d = set.alpha().frac_mul(&scalar::from_u64(n)?)?;
    let f = set.f_map(&d, side, l as usize)? as u64;
    Ok(n + l - f)
}

/// `x*_side`: the minimizer of `|xα|_side` over `[n−m+1, n+m−1]`.
pub fn x_star<T: Scalar>(cf: &ContinuedFraction<T>, m: u64, n: u64, side: Side) -> Result<u64> {
    check_m_le_n(m, n)?;
    argmin_side(cf, n + 1 - m, n + m - 1, side)
}

/// Whether `|#{ℓ < N : {ℓα} ∈ [x, x+d)} − N·d| < 1`, decided exactly.
pub fn discrepancy_check<T: Scalar>(
    cf: &ContinuedFraction<T>,
    big_n: usize,
    x: &LinearForm<T>,
    d: &LinearForm<T>,
) -> Result<bool> {
    let set = points_of_alpha(cf, big_n)?;
    let count = set.count_in_interval(x, d)?;
    let excess = LinearForm::integer(scalar::from_u64(count as u64)?).sub(&d.scale(&scalar::from_u64(big_n as u64)?)?)?;
    let one = T::one();
    let below = cf.sign(&excess.add_integer(&scalar::neg(&one)?)?)? == Sign::Negative;
    let above = cf.sign(&excess.add_integer(&one)?)? == Sign::Positive;
    Ok(below && above)
}

/// Balance verdicts for `d = {nα}` and for `d = {(q_T − n)α}` with
/// `T = top_index(n) + 2`.
///
/// The shift only preserves balance for large enough `T`; the verdict at
/// `T + 1` must match the one at `T`, otherwise [`Error::AmbiguousShift`].
pub fn shifted_length_verdicts<T: Scalar>(set: &TorusPointSet<T>, n: &T) -> Result<(bool, bool)> {
    let cf = set.alpha();
    let rep = ostrowski::encode(cf, n)?;
    let top = rep.top_index().ok_or_else(|| Error::InvalidArgument("n must be positive".into()))?;
    let balanced_for = |k: &T| -> Result<bool> {
        Ok(set.interval_balance_oracle(&cf.frac_mul(k)?)?.balanced)
    };
    let direct = balanced_for(n)?;
    let t = top + 2;
    let shifted = balanced_for(&scalar::sub(cf.q(t)?, n)?)?;
    let next = balanced_for(&scalar::sub(cf.q(t + 1)?, n)?)?;
    if shifted != next {
        return Err(Error::AmbiguousShift);
    }
    Ok((direct, shifted))
}

impl<T: Scalar> TorusPointSet<T> {
    /// Convenience for rational point sets: `num / den` pairs.
    pub fn from_rationals(alpha: ContinuedFraction<T>, points: &[(i64, i64)]) -> Result<Self> {
        let forms = points
            .iter()
            .map(|&(a, b)| LinearForm::rational(scalar::from_i64(a)?, scalar::from_i64(b)?))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alpha, forms)
    }
}

#[allow(dead_code)]
fn is_zero_form<T: Scalar>(x: &LinearForm<T>) -> bool {
    x.const_part().is_zero() && x.alpha_coeff().is_zero()
}
