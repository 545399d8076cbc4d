//! Batch cross-checks of the digit criterion against the torus oracle and
//! the rectangle weight scan.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::charact::{self, CaseTag};
use crate::error::{Error, Result};
use crate::exactalpha::ContinuedFraction;
use crate::scalar::{self, Scalar};
use crate::torus;
use crate::words::FloorTable;

/// Verdicts of the three deciders on one `(m, n)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub m: u64,
    pub n: u64,
    pub theorem: bool,
    pub case: CaseTag,
    pub oracle: bool,
    /// Distinct weights seen by the window scan (stops counting at 3).
    pub scan_weights: usize,
    /// The window scan ended before `i_max` for lack of quotients.
    pub scan_depth_limited: bool,
}

impl PairOutcome {
    pub fn is_mismatch(&self) -> bool {
        self.theorem != self.oracle
    }

    /// The scan proves the pair unbalanced, yet some decider says balanced.
    pub fn is_contradiction(&self) -> bool {
        self.scan_weights >= 3 && (self.theorem || self.oracle)
    }

    /// Called unbalanced, but the finite scan never saw a third weight.
    pub fn is_unwitnessed(&self) -> bool {
        !self.theorem && self.scan_weights < 3
    }
}

/// All outcomes of a sweep over `2 <= m <= n <= max_n`, sorted by `(m, n)`.
/// The JSON form leaves out `elapsed` so that it is reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub max_n: u64,
    pub i_max: u64,
    pub outcomes: Vec<PairOutcome>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &PairOutcome> {
        self.outcomes.iter().filter(|o| o.is_mismatch())
    }

    pub fn contradictions(&self) -> impl Iterator<Item = &PairOutcome> {
        self.outcomes.iter().filter(|o| o.is_contradiction())
    }

    pub fn unwitnessed(&self) -> impl Iterator<Item = &PairOutcome> {
        self.outcomes.iter().filter(|o| o.is_unwitnessed())
    }

    pub fn balanced_pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.outcomes.iter().filter(|o| o.theorem).map(|o| (o.m, o.n))
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches().next().is_none() && self.contradictions().next().is_none()
    }

    pub fn to_json(&self, alpha: &str) -> serde_json::Value {
        let pairs = |it: &mut dyn Iterator<Item = &PairOutcome>| -> Vec<[u64; 2]> { it.map(|o| [o.m, o.n]).collect() };
        serde_json::json!({
            "schema": 1,
            "alpha": alpha,
            "max_n": self.max_n,
            "i_max": self.i_max,
            "pairs": self.outcomes.len(),
            "mismatches": pairs(&mut self.mismatches()),
            "contradictions": pairs(&mut self.contradictions()),
            "unwitnessed": self.unwitnessed().count(),
            "scan_depth_limited": self.outcomes.iter().filter(|o| o.scan_depth_limited).count(),
            "balanced": self.balanced_pairs().map(|(m, n)| [m, n]).collect::<Vec<_>>(),
        })
    }
}

/// Runs the digit criterion, the exact interval oracle and the window scan
/// on every pair `2 <= m <= n <= max_n`.
pub fn verify_sweep<T: Scalar>(cf: &ContinuedFraction<T>, max_n: u64, i_max: u64) -> Result<SweepReport> {
    if max_n < 2 || i_max == 0 {
        return Err(Error::InvalidArgument("need max_n >= 2 and i_max >= 1".into()));
    }
    let start = Instant::now();
    let table = FloorTable::new_within_depth(cf, i_max + 2 * max_n)?;
    let mut outcomes = Vec::new();
    for m in 2..=max_n {
        let set = torus::points_of_alpha(cf, m as usize)?;
        for n in m..=max_n {
            let n_t = scalar::from_u64::<T>(n)?;
            let verdict = charact::decide(cf, &scalar::from_u64(m)?, &n_t)?;
            let oracle = set.interval_balance_oracle(&cf.frac_mul(&n_t)?)?;
            let scan = table.scan(m, n, i_max, true)?;
            outcomes.push(PairOutcome {
                m,
                n,
                theorem: verdict.balanced,
                case: verdict.case,
                oracle: oracle.balanced,
                scan_weights: scan.witnesses.len(),
                scan_depth_limited: scan.depth_limited,
            });
        }
    }
    Ok(SweepReport { max_n, i_max, outcomes, elapsed: start.elapsed() })
}

/// The digit-criterion verdict for every pair `2 <= m <= n <= max_n`.
pub fn theorem_table<T: Scalar>(cf: &ContinuedFraction<T>, max_n: u64) -> Result<Vec<charact::BalanceVerdict<T>>> {
    let mut rows = Vec::new();
    for m in 2..=max_n {
        for n in m..=max_n {
            rows.push(charact::decide(cf, &scalar::from_u64(m)?, &scalar::from_u64(n)?)?);
        }
    }
    Ok(rows)
}
