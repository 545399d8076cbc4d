//! Helpers shared by the integration tests.
//!
//! `FixedPoint` is an oracle that does not touch the library's comparison
//! code: it evaluates `u + vα` in 256-bit fixed point from the last
//! convergent, with an explicit error bound, and refuses to answer when the
//! bound does not separate the value from zero.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sturmian_balance::{parse_alpha, ContinuedFraction, FastAlpha, LinearForm, Sign};

pub const PRESETS: [&str; 4] = ["golden", "sqrt2m1", "pi4", "cf:4,1,2,1,7,3,1,1,2,5"];

pub fn fast(spec: &str) -> FastAlpha {
    parse_alpha(spec).expect("preset parses")
}

pub fn big(spec: &str) -> ContinuedFraction<BigInt> {
    parse_alpha(spec).expect("preset parses")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: i128, hi: i128) -> i128 {
    rng.gen_range(lo..=hi)
}

pub mod lemmas;

const BITS: u32 = 256;

/// α ≈ p_K / q_K scaled by 2^256, with |α − p_K/q_K| < 1/q_K².
pub struct FixedPoint {
    scaled: BigInt,
    // bound on |α·2^256 − scaled|, rounded up
    err: BigInt,
}

impl FixedPoint {
    pub fn new(quotients: &[u64]) -> Self {
        // convergents recomputed here rather than taken from the library
        let (mut p0, mut p1) = (BigInt::zero(), BigInt::one());
        let (mut q0, mut q1) = (BigInt::one(), BigInt::from(quotients[0]));
        for &a in &quotients[1..] {
            let a = BigInt::from(a);
            (p0, p1) = (p1.clone(), &a * &p1 + &p0);
            (q0, q1) = (q1.clone(), &a * &q1 + &q0);
        }
        let _ = (p0, q0);
        let one = BigInt::one() << BITS;
        let scaled = (&p1 * &one).div_floor(&q1);
        let err = (&one).div_ceil(&(&q1 * &q1)) + BigInt::one();
        FixedPoint { scaled, err }
    }

    pub fn of_spec(spec: &str) -> Self {
        let cf = big(spec);
        let quotients: Vec<u64> = cf.quotients().iter().map(|a| a.try_into().unwrap()).collect();
        Self::new(&quotients)
    }

    /// Sign of `(u + vα)/w` when the error bound decides it.
    pub fn sign(&self, u: &BigInt, v: &BigInt) -> Option<Sign> {
        let value = (u << BITS) + v * &self.scaled;
        let slack = v.abs() * &self.err;
        if value.abs() <= slack {
            if v.is_zero() && u.is_zero() {
                return Some(Sign::Zero);
            }
            return None;
        }
        Some(if value.is_positive() { Sign::Positive } else { Sign::Negative })
    }

    pub fn sign_form(&self, x: &LinearForm<BigInt>) -> Option<Sign> {
        self.sign(x.const_part(), x.alpha_coeff())
    }

    pub fn sign_i(&self, u: i128, v: i128) -> Option<Sign> {
        self.sign(&BigInt::from(u), &BigInt::from(v))
    }

    /// `⌊nα⌋` when decidable.
    pub fn floor_mul(&self, n: i128) -> Option<i128> {
        let approx: BigInt = (BigInt::from(n) * &self.scaled) >> BITS;
        let f: i128 = approx.try_into().ok()?;
        // f ≤ nα < f + 1 must be certain
        for cand in [f - 1, f, f + 1] {
            let low = self.sign_i(-cand, n)?;
            let high = self.sign_i(-(cand + 1), n)?;
            if low != Sign::Negative && high == Sign::Negative {
                return Some(cand);
            }
        }
        None
    }

    pub fn cmp_rational(&self, u: i128, v: i128) -> Option<Ordering> {
        // α vs u/v  ⇔  sign of vα − u
        Some(match self.sign_i(-u, v)? {
            Sign::Positive => Ordering::Greater,
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
        })
    }
}

/// `‖xα‖` as a form, via the library (used for lemma suites where the
/// library's own sign is the quantity under test only through comparisons).
pub fn dist(cf: &FastAlpha, x: i128) -> LinearForm<i128> {
    cf.dist_nearest(&x).expect("decidable").0
}

pub fn lt(cf: &FastAlpha, a: &LinearForm<i128>, b: &LinearForm<i128>) -> bool {
    cf.cmp(a, b).expect("decidable") == Ordering::Less
}

/// Every valid Ostrowski digit vector whose value is below `limit`,
/// found by exhaustive search over the digit bounds (no greedy step).
pub fn enumerate_representations(quotients: &[i128], dens: &[i128], limit: i128) -> Vec<(i128, Vec<i128>)> {
    fn go(
        k: usize,
        quotients: &[i128],
        dens: &[i128],
        limit: i128,
        digits: &mut Vec<i128>,
        value: i128,
        out: &mut Vec<(i128, Vec<i128>)>,
    ) {
        if k == 0 {
            // digits are collected from the top down; digits[j] is b_{top-j}
            let mut d: Vec<i128> = digits.iter().rev().copied().collect();
            while d.last() == Some(&0) {
                d.pop();
            }
            out.push((value, d));
            return;
        }
        let idx = k - 1;
        let bound = if idx == 0 { quotients[0] - 1 } else { quotients[idx] };
        let above = digits.last().copied();
        for b in 0..=bound {
            // b_{idx+1} = a_{idx+2} forces b_idx = 0
            if b > 0 && idx + 1 < dens.len() - 1 && above == Some(quotients[idx + 1]) {
                continue;
            }
            let v = value + b * dens[idx];
            if v >= limit {
                break;
            }
            digits.push(b);
            go(k - 1, quotients, dens, limit, digits, v, out);
            digits.pop();
        }
    }
    let top = dens.iter().position(|&q| q >= limit).unwrap_or(dens.len() - 1);
    let mut out = Vec::new();
    // a digit at q_k ≥ limit is necessarily zero
    go(top, quotients, dens, limit, &mut Vec::new(), 0, &mut out);
    out
}
