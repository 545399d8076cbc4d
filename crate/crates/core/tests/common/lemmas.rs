//! Randomized checks of the distance and digit facts for Ostrowski
//! representations. Each check records how many instances met its
//! hypotheses and the first few counterexamples.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sturmian_balance::{decode, encode, FastAlpha, LinearForm, OstrowskiRep, Side};

use super::FixedPoint;

#[derive(Default, Debug)]
pub struct Tally {
    pub checked: BTreeMap<&'static str, usize>,
    pub failures: Vec<String>,
}

impl Tally {
    fn hit(&mut self, item: &'static str) {
        *self.checked.entry(item).or_default() += 1;
    }

    fn expect(&mut self, item: &'static str, ok: bool, context: impl FnOnce() -> String) {
        self.hit(item);
        if !ok && self.failures.len() < 20 {
            self.failures.push(format!("{item}: {}", context()));
        }
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total(&self) -> usize {
        self.checked.values().sum()
    }

    pub fn merge(&mut self, other: Tally) {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
    }
}

pub struct Ctx {
    pub cf: FastAlpha,
    oracle: FixedPoint,
    // largest top digit index for sampled n, leaving room for q_{N+2}
    top_max: usize,
}

impl Ctx {
    pub fn new(spec: &str) -> Self {
        let cf = super::fast(spec);
        let oracle = FixedPoint::of_spec(spec);
        let q = cf.denominators();
        let mut top_max = 0;
        while top_max + 4 <= cf.depth() && q[top_max + 1] <= 1_000_000_000_000 {
            top_max += 1;
        }
        Ctx { cf, oracle, top_max: top_max.saturating_sub(1) }
    }

    pub fn q(&self, k: usize) -> i128 {
        *self.cf.q(k).unwrap()
    }

    /// `a_k`, one-based as usual.
    pub fn a(&self, k: usize) -> i128 {
        self.cf.quotients()[k - 1]
    }

    fn digit_bound(&self, k: usize) -> i128 {
        if k == 0 {
            self.a(1) - 1
        } else {
            self.a(k + 1)
        }
    }

    pub fn dist(&self, x: i128) -> LinearForm<i128> {
        self.cf.dist_nearest(&x).unwrap().0
    }

    pub fn side(&self, x: i128, side: Side) -> LinearForm<i128> {
        self.cf.side_dist(&x, side).unwrap()
    }

    /// Exact comparison, cross-checked with the fixed-point oracle when it decides.
    pub fn cmp(&self, a: &LinearForm<i128>, b: &LinearForm<i128>) -> Ordering {
        let got = self.cf.cmp(a, b).unwrap();
        let diff = a.sub(b).unwrap();
        if let Some(sign) = self.oracle.sign_i(*diff.const_part(), *diff.alpha_coeff()) {
            assert_eq!(sign.to_ordering(), got, "exact and fixed-point comparisons disagree");
        }
        got
    }

    pub fn lt(&self, a: &LinearForm<i128>, b: &LinearForm<i128>) -> bool {
        self.cmp(a, b) == Ordering::Less
    }

    fn add(&self, a: &LinearForm<i128>, b: &LinearForm<i128>) -> LinearForm<i128> {
        a.add(b).unwrap()
    }

    fn sub(&self, a: &LinearForm<i128>, b: &LinearForm<i128>) -> LinearForm<i128> {
        a.sub(b).unwrap()
    }

    /// Smallest `N` with `n <= q_N`.
    pub fn cover_index(&self, n: i128) -> usize {
        self.cf.denominators().iter().position(|&q| q >= n).unwrap()
    }

    /// A random valid digit vector with lowest nonzero index `low` (if given),
    /// top index at most `self.top_max`.
    pub fn random_rep(&self, rng: &mut ChaCha8Rng, low: Option<usize>) -> OstrowskiRep<i128> {
        loop {
            let floor = low.unwrap_or(0);
            if floor > self.top_max {
                panic!("low index {floor} beyond the sampling range");
            }
            let top = rng.gen_range(floor..=self.top_max);
            let mut digits = vec![0i128; top + 1];
            let mut ok = true;
            for k in (floor..=top).rev() {
                let bound = self.digit_bound(k);
                let blocked = k < top && digits[k + 1] == self.a(k + 2);
                let must = k == top || Some(k) == low;
                if blocked || bound == 0 {
                    if must {
                        ok = false;
                        break;
                    }
                    continue;
                }
                if must || rng.gen_bool(0.5) {
                    // small digits are the interesting ones; bias towards them
                    let hi = if rng.gen_bool(0.7) { bound.min(3) } else { bound };
                    digits[k] = rng.gen_range(1..=hi);
                }
            }
            if ok {
                return OstrowskiRep::from_digits(&self.cf, digits).unwrap();
            }
        }
    }

    pub fn value(&self, rep: &OstrowskiRep<i128>) -> i128 {
        decode(&self.cf, rep).unwrap()
    }

    pub fn min_regular(&self) -> usize {
        self.cf.min_regular_index()
    }
}

/// Items 1–8 of the distance estimates, the parity rule for the nearest
/// side, and the two facts about `q_T − n`, on one random `n`.
pub fn check_instance(ctx: &Ctx, rng: &mut ChaCha8Rng, tally: &mut Tally) {
    let lowest = if ctx.digit_bound(0) == 0 { 1 } else { 0 };
    let forced = if rng.gen_bool(0.5) { Some(rng.gen_range(lowest..=ctx.top_max)) } else { None };
    let rep = ctx.random_rep(rng, forced);
    let n = ctx.value(&rep);
    let l = rep.k0().unwrap();
    let b_l = rep.digit(l);
    let d = ctx.dist(n);
    let regular = l >= ctx.min_regular();
    let mut big_n = ctx.cover_index(n);
    if n == ctx.q(big_n) {
        // q_0 = q_1 when α > 1/2; use the index the representation carries
        big_n = l;
    }
    let far = ctx.dist(ctx.q(big_n + 2));
    let ctxs = || format!("n={n} digits={rep}");

    tally.expect("1 lower bound", ctx.lt(&ctx.dist(ctx.q(l + 1)), &d), ctxs);
    if regular {
        tally.expect("2 upper bound", ctx.lt(&d, &ctx.dist(ctx.q(l - 1))), ctxs);
    }
    // 3: strict below q_N; at n = q_N the gap is (a_{N+2} − 1)·‖q_{N+1}α‖
    let lower3 = ctx.add(&ctx.dist(ctx.q(l + 1)), &far);
    if n < ctx.q(big_n) {
        tally.expect("3 lower bound with N", ctx.lt(&lower3, &d), ctxs);
    } else {
        let want = if ctx.a(big_n + 2) == 1 { Ordering::Equal } else { Ordering::Greater };
        tally.expect("3 edge n = q_N", ctx.cmp(&d, &lower3) == want, ctxs);
    }
    if regular && b_l >= 2 {
        let lower4 = ctx.add(&ctx.dist(ctx.q(l)), &ctx.dist(ctx.q(l + 1)));
        tally.expect("4 two leading units", ctx.lt(&lower4, &d), ctxs);
    }
    if regular {
        let upper5 = ctx.sub(&ctx.dist(ctx.q(l - 1)), &far);
        tally.expect("5 upper bound with N", ctx.lt(&d, &upper5), ctxs);
    }
    if regular && b_l <= ctx.a(l + 1) - 1 {
        let upper6 = ctx.dist(ctx.q(l - 1) + ctx.q(l));
        tally.expect("6 semiconvergent upper bound", ctx.lt(&d, &upper6), ctxs);
    }
    if regular {
        let other = ctx.random_rep(rng, Some(l));
        if other.digit(l) != b_l {
            let (lo, hi) = if b_l < other.digit(l) { (n, ctx.value(&other)) } else { (ctx.value(&other), n) };
            tally.expect("7 leading digit order", ctx.lt(&ctx.dist(lo), &ctx.dist(hi)), || format!("{lo} vs {hi}"));
        }
    }
    let shape = rep.is_unit_lead_shape(l);
    tally.expect("8 closer than q_L", ctx.lt(&d, &ctx.dist(ctx.q(l))) == shape, ctxs);

    if regular {
        let (_, side) = ctx.cf.dist_nearest(&n).unwrap();
        tally.expect("nearest side parity", (side == Side::Left) == (l % 2 == 0), ctxs);
    }

    // n = q_L itself is excluded: q_{L+2} − q_L = q_{L+1} when a_{L+2} = 1
    if regular && n >= 2 && !shape && n != ctx.q(l) {
        for t in big_n + 2..=(big_n + 4).min(ctx.cf.depth()) {
            let flipped = encode(&ctx.cf, &(ctx.q(t) - n)).unwrap();
            tally.expect("flip keeps the unit lead shape", flipped.is_unit_lead_shape(l - 1), || {
                format!("n={n} digits={rep} T={t} q_T-n digits={flipped}")
            });
        }
    }

    let top = rep.top_index().unwrap();
    if top >= 1 {
        let m = rng.gen_range(1..=top);
        if rep.low_part(&ctx.cf, m - 1).unwrap() > 0 && rep.high_part(&ctx.cf, m).unwrap() > 0 {
            let first_t = (2..=ctx.cf.depth()).find(|&t| ctx.q(t - 2) >= n);
            if let Some(first_t) = first_t {
                for t in first_t..=(first_t + 2).min(ctx.cf.depth()) {
                    let flipped = encode(&ctx.cf, &(ctx.q(t) - n)).unwrap();
                    let same = rep.k_geq(m).map(|k| k % 2) == flipped.k_geq(m).map(|k| k % 2);
                    tally.expect("flip keeps the parity above M", same, || {
                        format!("n={n} digits={rep} M={m} T={t} q_T-n digits={flipped}")
                    });
                }
            }
        }
    }
}

/// One-sided best approximation by semi-convergents, for every admissible `L`.
/// The range `0 < q < q_L + (a+1)·q_{L+1}` is scanned in full up to `full`
/// and sampled beyond it.
pub fn check_semiconvergents(ctx: &Ctx, rng: &mut ChaCha8Rng, full: i128, samples: usize, tally: &mut Tally) {
    let start = ctx.min_regular() - 1;
    for l in start..=ctx.top_max {
        let side = if ctx.lt(&ctx.side(ctx.q(l), Side::Left), &LinearForm::rational(1, 2).unwrap()) {
            Side::Left
        } else {
            Side::Right
        };
        let a_next = ctx.a(l + 2);
        let chain: Vec<LinearForm<i128>> = (0..a_next).map(|a| ctx.side(ctx.q(l) + a * ctx.q(l + 1), side)).collect();
        for w in chain.windows(2) {
            tally.expect("semiconvergent chain", ctx.lt(&w[1], &w[0]), || format!("L={l}"));
        }
        let last = chain.last().unwrap();
        tally.expect("semiconvergent chain", ctx.lt(&ctx.side(ctx.q(l + 2), side), last), || format!("L={l} end"));

        for (a, target) in chain.iter().enumerate() {
            let bound = ctx.q(l) + (a as i128 + 1) * ctx.q(l + 1);
            let mut check = |q: i128| {
                tally.expect("semiconvergent best approximation", !ctx.lt(&ctx.side(q, side), target), || {
                    format!("L={l} a={a} q={q}")
                });
            };
            if bound - 1 <= full {
                (1..bound).for_each(&mut check);
            } else {
                (1..=full).for_each(&mut check);
                for _ in 0..samples {
                    check(rng.gen_range(1..bound));
                }
            }
        }
    }
}

pub fn run_suite(spec: &str, seed: u64, instances: usize, full: i128, samples: usize) -> Tally {
    let ctx = Ctx::new(spec);
    let mut rng = super::rng(seed);
    let mut tally = Tally::default();
    for _ in 0..instances {
        check_instance(&ctx, &mut rng, &mut tally);
    }
    check_semiconvergents(&ctx, &mut rng, full, samples, &mut tally);
    tally
}
