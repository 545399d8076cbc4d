//! Sturmian words of slope alpha and intercept 0, with factor weights and
//! the weights `T(i, m, n)` of the `m × n` Hankel rectangles.
//!
//! The intercept is fixed to 0: Sturmian words with the same slope share
//! their sets of factors, and each rectangle is determined by one factor.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalpha::{ContinuedFraction, LinearForm, Sign};
use crate::scalar::{self, Scalar};

/// Default scan bound for [`window_scan`].
pub const DEFAULT_I_MAX: u64 = 10_000;

/// An `m × n` rectangle shape for a fixed slope.
#[derive(Clone, Debug)]
pub struct RectangleQuery<'a, T: Scalar> {
    pub m: u64,
    pub n: u64,
    pub alpha: &'a ContinuedFraction<T>,
}

impl<'a, T: Scalar> RectangleQuery<'a, T> {
    pub fn new(alpha: &'a ContinuedFraction<T>, m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("rectangle sides must be at least 1".into()));
        }
        Ok(RectangleQuery { m, n, alpha })
    }

    pub fn weight(&self, i: u64) -> Result<u64> {
        rect_weight(self.alpha, i, self.m, self.n)
    }

    pub fn scan(&self, i_max: u64) -> Result<WeightScanReport> {
        window_scan(self.alpha, self.m, self.n, i_max)
    }
}

fn floor_at<T: Scalar>(cf: &ContinuedFraction<T>, k: u64) -> Result<u64> {
    scalar::to_u64(&cf.floor_mul(&scalar::from_u64(k)?)?)
}

/// `a_n = ⌊(n+1)α⌋ − ⌊nα⌋` for `n >= 1`.
pub fn symbol<T: Scalar>(cf: &ContinuedFraction<T>, n: u64) -> Result<u8> {
    if n == 0 {
        return Err(Error::InvalidArgument("word positions start at 1".into()));
    }
    Ok((floor_at(cf, n + 1)? - floor_at(cf, n)?) as u8)
}

/// The symbols `a_1 .. a_len`.
pub fn prefix<T: Scalar>(cf: &ContinuedFraction<T>, len: usize) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(len);
    let mut prev = 0u64;
    for k in 1..=len as u64 + 1 {
        let f = floor_at(cf, k)?;
        if k > 1 {
            out.push((f - prev) as u8);
        }
        prev = f;
    }
    Ok(out)
}

/// Weight of the factor `a_i .. a_{i+n-1}`, i.e. `⌊(i+n)α⌋ − ⌊iα⌋`.
pub fn factor_weight<T: Scalar>(cf: &ContinuedFraction<T>, i: u64, n: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::InvalidArgument("word positions start at 1".into()));
    }
    if n == 0 {
        return Ok(0);
    }
    Ok(floor_at(cf, i + n)? - floor_at(cf, i)?)
}

/// `T(i, m, n)`: the entry sum of the Hankel rectangle with corner `a_i`,
/// computed row by row.
pub fn rect_weight<T: Scalar>(cf: &ContinuedFraction<T>, i: u64, m: u64, n: u64) -> Result<u64> {
    if i == 0 || m == 0 || n == 0 {
        return Err(Error::InvalidArgument("i, m and n must be at least 1".into()));
    }
    (0..m).map(|row| factor_weight(cf, i + row, n)).sum()
}

/// `S(i, m, n)`: how many of `{(i+ℓ)α}`, `ℓ < m`, fall in `[1 − {nα}, 1)`.
pub fn indicator_sum<T: Scalar>(cf: &ContinuedFraction<T>, i: u64, m: u64, n: u64) -> Result<u64> {
    if i == 0 || m == 0 || n == 0 {
        return Err(Error::InvalidArgument("i, m and n must be at least 1".into()));
    }
    let d = cf.frac_mul(&scalar::from_u64(n)?)?;
    let threshold = LinearForm::integer(T::one()).sub(&d)?;
    let mut count = 0;
    for l in 0..m {
        let x = cf.frac_mul(&scalar::from_u64(i + l)?)?;
        if cf.sign(&x.sub(&threshold)?)? != Sign::Negative {
            count += 1;
        }
    }
    Ok(count)
}

/// Weights seen by [`window_scan`], each with the smallest `i` attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightScanReport {
    pub m: u64,
    pub n: u64,
    /// Requested bound on `i`.
    pub i_max: u64,
    /// Last `i` actually scanned. Below `i_max` when the scan stopped at a
    /// third weight or ran out of quotients.
    pub i_scanned: u64,
    /// The scan stopped early because `⌊kα⌋` was undecidable from the prefix.
    pub depth_limited: bool,
    pub witnesses: BTreeMap<u64, u64>,
}

impl WeightScanReport {
    pub fn weights_seen(&self) -> Vec<u64> {
        self.witnesses.keys().copied().collect()
    }

    /// Three or more weights prove the rectangles unbalanced. Fewer proves nothing.
    pub fn proves_unbalanced(&self) -> bool {
        self.witnesses.len() >= 3
    }

    /// Union of two scans over disjoint ranges of `i`.
    pub fn merge(mut self, other: &WeightScanReport) -> WeightScanReport {
        for (&w, &i) in &other.witnesses {
            self.witnesses.entry(w).and_modify(|e| *e = (*e).min(i)).or_insert(i);
        }
        self.i_max = self.i_max.max(other.i_max);
        self.i_scanned = self.i_scanned.max(other.i_scanned);
        self.depth_limited |= other.depth_limited;
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        let witnesses: serde_json::Map<String, serde_json::Value> =
            self.witnesses.iter().map(|(w, i)| (w.to_string(), (*i).into())).collect();
        serde_json::json!({
            "m": self.m,
            "n": self.n,
            "i_max": self.i_max,
            "i_scanned": self.i_scanned,
            "depth_limited": self.depth_limited,
            "weights": self.weights_seen(),
            "witnesses": witnesses,
        })
    }
}

/// Prefix sums of `⌊kα⌋`, so that any rectangle weight is an O(1) lookup.
///
/// Since `T(i, m, n) = Σ_{ℓ<m} (⌊(i+ℓ+n)α⌋ − ⌊(i+ℓ)α⌋)`, it telescopes into
/// four prefix-sum reads.
#[derive(Clone, Debug)]
pub struct FloorTable {
    // prefix[k] = Σ_{j<k} ⌊jα⌋
    prefix: Vec<u64>,
    // stopped short of the requested range for lack of quotients
    depth_limited: bool,
}

impl FloorTable {
    /// Table covering all `⌊kα⌋` with `k <= max_k`.
    pub fn new<T: Scalar>(cf: &ContinuedFraction<T>, max_k: u64) -> Result<Self> {
        let mut prefix = Vec::with_capacity(max_k as usize + 2);
        prefix.push(0);
        let mut acc = 0u64;
        for k in 0..=max_k {
            acc += floor_at(cf, k)?;
            prefix.push(acc);
        }
        Ok(FloorTable { prefix, depth_limited: false })
    }

    /// Like [`FloorTable::new`], but stops before the first `k` whose floor
    /// the quotient prefix cannot decide instead of failing.
    pub fn new_within_depth<T: Scalar>(cf: &ContinuedFraction<T>, max_k: u64) -> Result<Self> {
        let mut prefix = Vec::with_capacity(max_k as usize + 2);
        prefix.push(0);
        let mut acc = 0u64;
        for k in 0..=max_k {
            match floor_at(cf, k) {
                Ok(f) => acc += f,
                Err(Error::InsufficientDepth { .. }) => return Ok(FloorTable { prefix, depth_limited: true }),
                Err(e) => return Err(e),
            }
            prefix.push(acc);
        }
        Ok(FloorTable { prefix, depth_limited: false })
    }

    /// Whether construction stopped early for lack of quotients.
    pub fn is_depth_limited(&self) -> bool {
        self.depth_limited
    }

    /// Largest `k` covered; `None` when not even `⌊0·α⌋` is stored.
    pub fn max_k(&self) -> Option<u64> {
        (self.prefix.len() as u64).checked_sub(2)
    }

    fn range_sum(&self, from: u64, to: u64) -> u64 {
        self.prefix[to as usize] - self.prefix[from as usize]
    }

    /// Prefix-sum entries stored, i.e. one past the largest covered `k`.
    fn covered(&self) -> u64 {
        self.prefix.len() as u64 - 1
    }

    /// `T(i, m, n)`; needs `i + m + n − 1 <= max_k`.
    pub fn rect_weight(&self, i: u64, m: u64, n: u64) -> Result<u64> {
        if i + m + n > self.covered() {
            return Err(Error::IndexOutOfRange {
                index: (i + m + n - 1) as usize,
                max: self.covered() as usize - 1,
            });
        }
        Ok(self.range_sum(i + n, i + n + m) - self.range_sum(i, i + m))
    }

    /// Scans `1 <= i <= i_max`, or as far as the table reaches if it is
    /// depth-limited. With `stop_at_three`, stops as soon as the rectangles
    /// are proven unbalanced.
    pub fn scan(&self, m: u64, n: u64, i_max: u64, stop_at_three: bool) -> Result<WeightScanReport> {
        if m == 0 || n == 0 || i_max == 0 {
            return Err(Error::InvalidArgument("m, n and i_max must be at least 1".into()));
        }
        let reach = self.covered().saturating_sub(m + n);
        if reach < i_max && !self.depth_limited {
            self.rect_weight(i_max, m, n)?;
        }
        let last = i_max.min(reach);
        let mut witnesses = BTreeMap::new();
        let mut i_scanned = 0;
        let mut proven = false;
        for i in 1..=last {
            i_scanned = i;
            let w = self.range_sum(i + n, i + n + m) - self.range_sum(i, i + m);
            if !witnesses.contains_key(&w) {
                witnesses.insert(w, i);
                if stop_at_three && witnesses.len() >= 3 {
                    proven = true;
                    break;
                }
            }
        }
        let depth_limited = !proven && last < i_max;
        Ok(WeightScanReport { m, n, i_max, i_scanned, depth_limited, witnesses })
    }
}

/// All weights `T(i, m, n)` for `1 <= i <= i_max`, with witnesses.
///
/// One-sided: three weights prove the rectangles unbalanced, but two
/// weights on a finite window prove nothing about all `i`. If some
/// `⌊kα⌋` in range is undecidable from the quotient prefix, the scan stops
/// just before it and the report says so.
pub fn window_scan<T: Scalar>(cf: &ContinuedFraction<T>, m: u64, n: u64, i_max: u64) -> Result<WeightScanReport> {
    if m == 0 || n == 0 || i_max == 0 {
        return Err(Error::InvalidArgument("m, n and i_max must be at least 1".into()));
    }
    FloorTable::new_within_depth(cf, i_max + m + n)?.scan(m, n, i_max, false)
}
