//! Exact arithmetic over `Z + Z·alpha` for an irrational slope `alpha ∈ (0,1)`.
//!
//! `alpha` is known only through a finite prefix `[0; a_1, ..., a_K]` of its
//! continued fraction. Every comparison is decided exactly from that prefix,
//! or fails with [`Error::InsufficientDepth`]. There is no floating point in
//! this module.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of<T: Scalar>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// One-sided distance to the integers: `Left` measures `{ξ}`, `Right` measures `{-ξ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// The exact value `(u + v·alpha) / w` with `w > 0` and `gcd(u, v, w) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm<T = BigInt> {
    u: T,
    v: T,
    w: T,
}

impl<T: Scalar> LinearForm<T> {
    pub fn new(u: T, v: T, w: T) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::InvalidArgument("linear form denominator is zero".into()));
        }
        let mut form = LinearForm { u, v, w };
        form.normalize()?;
        Ok(form)
    }

    pub fn zero() -> Self {
        LinearForm { u: T::zero(), v: T::zero(), w: T::one() }
    }

    pub fn integer(k: T) -> Self {
        LinearForm { u: k, v: T::zero(), w: T::one() }
    }

    /// The rational `num / den` (no alpha component).
    pub fn rational(num: T, den: T) -> Result<Self> {
        Self::new(num, T::zero(), den)
    }

    /// `v·alpha`.
    pub fn alpha_multiple(v: T) -> Self {
        LinearForm { u: T::zero(), v, w: T::one() }
    }

    pub fn const_part(&self) -> &T {
        &self.u
    }

    pub fn alpha_coeff(&self) -> &T {
        &self.v
    }

    pub fn denominator(&self) -> &T {
        &self.w
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn normalize(&mut self) -> Result<()> {
        if self.w.is_negative() {
            self.u = scalar::neg(&self.u)?;
            self.v = scalar::neg(&self.v)?;
            self.w = scalar::neg(&self.w)?;
        }
        if self.is_zero() {
            self.w = T::one();
            return Ok(());
        }
        let g = self.u.gcd(&self.v).gcd(&self.w);
        if !g.is_one() {
            self.u = self.u.div_floor(&g);
            self.v = self.v.div_floor(&g);
            self.w = self.w.div_floor(&g);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.w == other.w {
            return Self::new(
                scalar::add(&self.u, &other.u)?,
                scalar::add(&self.v, &other.v)?,
                self.w.clone(),
            );
        }
        Self::new(
            scalar::add(&scalar::mul(&self.u, &other.w)?, &scalar::mul(&other.u, &self.w)?)?,
            scalar::add(&scalar::mul(&self.v, &other.w)?, &scalar::mul(&other.v, &self.w)?)?,
            scalar::mul(&self.w, &other.w)?,
        )
    }

    pub fn neg(&self) -> Result<Self> {
        Ok(LinearForm {
            u: scalar::neg(&self.u)?,
            v: scalar::neg(&self.v)?,
            w: self.w.clone(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn add_integer(&self, k: &T) -> Result<Self> {
        Self::new(scalar::add(&self.u, &scalar::mul(k, &self.w)?)?, self.v.clone(), self.w.clone())
    }

    pub fn scale(&self, k: &T) -> Result<Self> {
        Self::new(scalar::mul(&self.u, k)?, scalar::mul(&self.v, k)?, self.w.clone())
    }

    pub fn halve(&self) -> Result<Self> {
        let two = T::one() + T::one();
        Self::new(self.u.clone(), self.v.clone(), scalar::mul(&self.w, &two)?)
    }

    pub fn midpoint(a: &Self, b: &Self) -> Result<Self> {
        a.add(b)?.halve()
    }
}

impl<T: Scalar> fmt::Display for LinearForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match (self.u.is_zero(), self.v.is_zero()) {
            (_, true) => format!("{}", self.u),
            (true, false) => format!("{}α", self.v),
            (false, false) if self.v.is_negative() => format!("{} - {}α", self.u, self.v.abs()),
            (false, false) => format!("{} + {}α", self.u, self.v),
        };
        if self.w.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{}", self.w)
        }
    }
}

/// A finite prefix `[0; a_1, ..., a_K]` of the continued fraction of alpha,
/// with its convergents `p_k / q_k` for `0 <= k <= K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction<T = BigInt> {
    quotients: Vec<T>,
    p: Vec<T>,
    q: Vec<T>,
    // alpha lies strictly between p_K/q_K and (p_K + p_{K-1})/(q_K + q_{K-1}).
    mediant: Option<(T, T)>,
}

impl<T: Scalar> ContinuedFraction<T> {
    /// Builds the convergent tables for `[0; a_1, ..., a_K]`.
    pub fn new(quotients: Vec<T>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::EmptyQuotients);
        }
        if let Some(i) = quotients.iter().position(|a| !a.is_positive()) {
            return Err(Error::NonPositiveQuotient { index: i + 1 });
        }
        let k_max = quotients.len();
        let mut p = Vec::with_capacity(k_max + 1);
        let mut q = Vec::with_capacity(k_max + 1);
        p.push(T::zero());
        q.push(T::one());
        p.push(T::one());
        q.push(quotients[0].clone());
        for k in 1..k_max {
            let a = &quotients[k];
            p.push(scalar::add(&scalar::mul(a, &p[k])?, &p[k - 1])?);
            q.push(scalar::add(&scalar::mul(a, &q[k])?, &q[k - 1])?);
        }
        let mediant = match (
            p[k_max].checked_add(&p[k_max - 1]),
            q[k_max].checked_add(&q[k_max - 1]),
        ) {
            (Some(pm), Some(qm)) => Some((pm, qm)),
            _ => None,
        };
        Ok(ContinuedFraction { quotients, p, q, mediant })
    }

    pub fn from_u64s(quotients: &[u64]) -> Result<Self> {
        let qs = quotients.iter().map(|&a| scalar::from_u64(a)).collect::<Result<Vec<T>>>()?;
        Self::new(qs)
    }

    /// `[0; 1, 1, 1, ...]` with 64 quotients: alpha = (√5 − 1)/2.
    pub fn golden() -> Result<Self> {
        Self::from_u64s(&[1; 64])
    }

    /// `[0; 2, 2, 2, ...]` with 64 quotients: alpha = √2 − 1.
    pub fn sqrt2m1() -> Result<Self> {
        Self::from_u64s(&[2; 64])
    }

    /// The eight quotients of pi/4 = `[0; 1, 3, 1, 1, 1, 15, 2, 72, ...]`.
    pub fn pi4() -> Result<Self> {
        Self::from_u64s(&[1, 3, 1, 1, 1, 15, 2, 72])
    }

    /// Number of stored partial quotients `K`.
    pub fn depth(&self) -> usize {
        self.quotients.len()
    }

    pub fn quotients(&self) -> &[T] {
        &self.quotients
    }

    pub fn numerators(&self) -> &[T] {
        &self.p
    }

    pub fn denominators(&self) -> &[T] {
        &self.q
    }

    /// Partial quotient `a_k` for `1 <= k <= K`.
    pub fn quotient(&self, k: usize) -> Result<&T> {
        if k == 0 || k > self.depth() {
            return Err(Error::IndexOutOfRange { index: k, max: self.depth() });
        }
        Ok(&self.quotients[k - 1])
    }

    pub fn p(&self, k: usize) -> Result<&T> {
        self.p.get(k).ok_or(Error::IndexOutOfRange { index: k, max: self.depth() })
    }

    pub fn q(&self, k: usize) -> Result<&T> {
        self.q.get(k).ok_or(Error::IndexOutOfRange { index: k, max: self.depth() })
    }

    /// `a_1 == 1`, equivalently alpha > 1/2 and `q_0 = q_1 = 1`.
    pub fn above_half(&self) -> bool {
        self.quotients[0].is_one()
    }

    /// Smallest index whose digit may carry the parity information of
    /// `k_0(n)`: 2 when alpha > 1/2, 1 otherwise.
    pub fn min_regular_index(&self) -> usize {
        if self.above_half() {
            2
        } else {
            1
        }
    }

    fn insufficient(&self) -> Error {
        Error::InsufficientDepth { depth: self.depth() }
    }

    /// Orders alpha against the rational `u / v` (`v >= 1`).
    ///
    /// Expands `u / v` as a continued fraction and compares it with the
    /// stored quotients lexicographically, reversing the order at odd depth.
    /// Never returns `Equal` since alpha is irrational.
    pub fn compare_rational(&self, u: &T, v: &T) -> Result<Ordering> {
        if !v.is_positive() {
            return Err(Error::InvalidArgument("rational denominator must be positive".into()));
        }
        let (c, rem) = u.div_mod_floor(v);
        if !c.is_zero() {
            return Ok(if c.is_negative() { Ordering::Greater } else { Ordering::Less });
        }
        if rem.is_zero() {
            return Ok(Ordering::Greater);
        }
        let mut num = v.clone();
        let mut den = rem;
        for (idx, a) in self.quotients.iter().enumerate() {
            let depth = idx + 1;
            let (c, rem) = num.div_mod_floor(&den);
            // Compare the tail alpha_k = [a_k; a_{k+1}, ...] with r_k = num/den.
            let tail_greater = if *a != c {
                *a > c
            } else if rem.is_zero() {
                true
            } else {
                num = den;
                den = rem;
                continue;
            };
            return Ok(if tail_greater == (depth % 2 == 0) {
                Ordering::Greater
            } else {
                Ordering::Less
            });
        }
        Err(self.insufficient())
    }

    /// Sign of `u + v·alpha`.
    pub(crate) fn sign_uv(&self, u: &T, v: &T) -> Result<Sign> {
        if v.is_zero() {
            return Ok(Sign::of(u));
        }
        if let Some(sign) = self.bracket_sign(u, v) {
            return Ok(sign);
        }
        self.sign_uv_by_expansion(u, v)
    }

    /// Sign of `u + v·alpha` through [`Self::compare_rational`] only.
    pub fn sign_uv_by_expansion(&self, u: &T, v: &T) -> Result<Sign> {
        if v.is_zero() {
            return Ok(Sign::of(u));
        }
        if v.is_positive() {
            // u + v·alpha > 0  <=>  alpha > -u/v
            let ord = self.compare_rational(&scalar::neg(u)?, v)?;
            Ok(if ord == Ordering::Greater { Sign::Positive } else { Sign::Negative })
        } else {
            // u + v·alpha > 0  <=>  alpha < u/|v|
            let ord = self.compare_rational(u, &scalar::neg(v)?)?;
            Ok(if ord == Ordering::Less { Sign::Positive } else { Sign::Negative })
        }
    }

    /// Decides the sign from the two rationals bracketing alpha, if they agree.
    /// Returns `None` when they disagree or the scalar type would overflow.
    pub fn bracket_sign(&self, u: &T, v: &T) -> Option<Sign> {
        let (pm, qm) = self.mediant.as_ref()?;
        let k = self.depth();
        let e1 = u.checked_mul(&self.q[k])?.checked_add(&v.checked_mul(&self.p[k])?)?;
        let e2 = u.checked_mul(qm)?.checked_add(&v.checked_mul(pm)?)?;
        let (s1, s2) = (Sign::of(&e1), Sign::of(&e2));
        (s1 == s2 && s1 != Sign::Zero).then_some(s1)
    }

    /// Exact sign of a linear form.
    pub fn sign(&self, x: &LinearForm<T>) -> Result<Sign> {
        self.sign_uv(&x.u, &x.v)
    }

    /// Exact order of two linear forms.
    pub fn cmp(&self, a: &LinearForm<T>, b: &LinearForm<T>) -> Result<Ordering> {
        let sign = if a.w == b.w {
            self.sign_uv(&scalar::sub(&a.u, &b.u)?, &scalar::sub(&a.v, &b.v)?)?
        } else {
            let u = scalar::sub(&scalar::mul(&a.u, &b.w)?, &scalar::mul(&b.u, &a.w)?)?;
            let v = scalar::sub(&scalar::mul(&a.v, &b.w)?, &scalar::mul(&b.v, &a.w)?)?;
            self.sign_uv(&u, &v)?
        };
        Ok(sign.to_ordering())
    }

    /// `⌊x⌋` for a linear form `x`.
    pub fn floor(&self, x: &LinearForm<T>) -> Result<T> {
        let k = self.depth();
        let seed_num = scalar::add(&scalar::mul(&x.u, &self.q[k])?, &scalar::mul(&x.v, &self.p[k])?)?;
        let mut f = seed_num.div_floor(&scalar::mul(&x.w, &self.q[k])?);
        loop {
            // sign of x - f, scaled by w
            let low = scalar::sub(&x.u, &scalar::mul(&f, &x.w)?)?;
            if self.sign_uv(&low, &x.v)? == Sign::Negative {
                f = f - T::one();
                continue;
            }
            let high = scalar::sub(&low, &x.w)?;
            if self.sign_uv(&high, &x.v)? != Sign::Negative {
                f = f + T::one();
                continue;
            }
            return Ok(f);
        }
    }

    /// `x - ⌊x⌋`, the representative of `x` in `[0, 1)`.
    pub fn frac(&self, x: &LinearForm<T>) -> Result<LinearForm<T>> {
        let f = self.floor(x)?;
        x.add_integer(&scalar::neg(&f)?)
    }

    /// `⌊n·alpha⌋`.
    pub fn floor_mul(&self, n: &T) -> Result<T> {
        self.floor(&LinearForm::alpha_multiple(n.clone()))
    }

    /// `{n·alpha}` as the form `n·alpha − ⌊n·alpha⌋`; negative `n` allowed.
    pub fn frac_mul(&self, n: &T) -> Result<LinearForm<T>> {
        let f = self.floor_mul(n)?;
        Ok(LinearForm { u: scalar::neg(&f)?, v: n.clone(), w: T::one() })
    }

    /// `δ_k = q_k·alpha − p_k`.
    pub fn delta(&self, k: usize) -> Result<LinearForm<T>> {
        Ok(LinearForm { u: scalar::neg(self.p(k)?)?, v: self.q(k)?.clone(), w: T::one() })
    }

    /// One-sided distance `|n·alpha|_side`: `{nα}` for `Left`, `{−nα}` for `Right`.
    pub fn side_dist(&self, n: &T, side: Side) -> Result<LinearForm<T>> {
        match side {
            Side::Left => self.frac_mul(n),
            Side::Right => self.frac_mul(&scalar::neg(n)?),
        }
    }

    /// `‖n·alpha‖` together with the side on which it is attained.
    pub fn dist_nearest(&self, n: &T) -> Result<(LinearForm<T>, Side)> {
        if !n.is_positive() {
            return Err(Error::InvalidArgument("dist_nearest needs n >= 1".into()));
        }
        let frac = self.frac_mul(n)?;
        let two = T::one() + T::one();
        let twice_minus_one = frac.scale(&two)?.add_integer(&scalar::neg(&T::one())?)?;
        if self.sign(&twice_minus_one)? == Sign::Negative {
            Ok((frac, Side::Left))
        } else {
            Ok((LinearForm::integer(T::one()).sub(&frac)?, Side::Right))
        }
    }

    /// Semi-convergent denominator `q_{M-1} + a·q_M` with `1 <= a <= a_{M+1} − 1`.
    pub fn semiconvergent_den(&self, big_m: usize, a: &T) -> Result<T> {
        if big_m == 0 || big_m + 1 > self.depth() {
            return Err(Error::IndexOutOfRange { index: big_m, max: self.depth().saturating_sub(1) });
        }
        let next = self.quotient(big_m + 1)?;
        if !a.is_positive() || *a >= *next {
            return Err(Error::InvalidA { a: a.to_string(), max: (next.clone() - T::one()).to_string() });
        }
        scalar::add(&self.q[big_m - 1], &scalar::mul(a, &self.q[big_m])?)
    }
}

/// Parses an alpha spec: `golden`, `sqrt2m1`, `pi4`, or `cf:a1,a2,...,aK`.
pub fn parse_alpha<T: Scalar>(spec: &str) -> Result<ContinuedFraction<T>> {
    match spec.trim() {
        "golden" => ContinuedFraction::golden(),
        "sqrt2m1" => ContinuedFraction::sqrt2m1(),
        "pi4" => ContinuedFraction::pi4(),
        other => {
            let body = other.strip_prefix("cf:").ok_or_else(|| Error::Parse {
                token: other.to_string(),
                reason: "expected golden, sqrt2m1, pi4 or cf:a1,a2,...".into(),
            })?;
            let mut quotients = Vec::new();
            for (idx, tok) in body.split(',').enumerate() {
                let tok = tok.trim();
                let a = T::from_str_radix(tok, 10).map_err(|_| Error::Parse {
                    token: tok.to_string(),
                    reason: format!("partial quotient a_{} is not a decimal integer", idx + 1),
                })?;
                if !a.is_positive() {
                    return Err(Error::NonPositiveQuotient { index: idx + 1 });
                }
                quotients.push(a);
            }
            ContinuedFraction::new(quotients)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Cf = ContinuedFraction<BigInt>;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(Cf::new(vec![]), Err(Error::EmptyQuotients));
        assert_eq!(Cf::new(vec![b(2), b(0)]), Err(Error::NonPositiveQuotient { index: 2 }));
        assert!(matches!(ContinuedFraction::<i64>::sqrt2m1(), Err(Error::Overflow)));
    }

    #[test]
    fn base_case() {
        let cf = Cf::from_u64s(&[2]).unwrap();
        assert_eq!(cf.denominators(), &[b(1), b(2)]);
        assert_eq!(cf.numerators(), &[b(0), b(1)]);
    }

    #[test]
    fn golden_denominators_are_fibonacci() {
        let cf = Cf::golden().unwrap();
        let (mut x, mut y) = (b(1), b(1));
        for k in 0..=64 {
            assert_eq!(cf.q(k).unwrap(), &x);
            let z = &x + &y;
            x = y;
            y = z;
        }
    }

    #[test]
    fn pi4_denominators() {
        let cf = Cf::pi4().unwrap();
        let want: Vec<BigInt> = [1, 1, 4, 5, 9, 14, 219, 452, 32763].iter().map(|&x| b(x)).collect();
        assert_eq!(cf.denominators(), want.as_slice());
    }

    #[test]
    fn determinant_identity() {
        for cf in [Cf::golden().unwrap(), Cf::sqrt2m1().unwrap(), Cf::pi4().unwrap()] {
            for k in 1..=cf.depth() {
                let det = cf.p(k).unwrap() * cf.q(k - 1).unwrap() - cf.p(k - 1).unwrap() * cf.q(k).unwrap();
                let want = if k % 2 == 1 { b(1) } else { b(-1) };
                assert_eq!(det, want, "k = {k}");
            }
        }
    }

    #[test]
    fn compare_trivial() {
        let cf = Cf::pi4().unwrap();
        assert_eq!(cf.compare_rational(&b(1), &b(1)).unwrap(), Ordering::Less);
        assert_eq!(cf.compare_rational(&b(0), &b(7)).unwrap(), Ordering::Greater);
        assert_eq!(cf.compare_rational(&b(-3), &b(7)).unwrap(), Ordering::Greater);
        assert!(cf.compare_rational(&b(1), &b(0)).is_err());
    }

    #[test]
    fn compare_needs_depth() {
        // p_K / q_K followed by more matching quotients cannot be separated.
        let cf = Cf::from_u64s(&[1, 1, 1]).unwrap();
        // [0; 1, 1, 1, 2] = 5/8 has tail 3/2 after the stored quotients, inside (1, 2).
        assert_eq!(cf.compare_rational(&b(5), &b(8)), Err(Error::InsufficientDepth { depth: 3 }));
        // 2/3 = [0; 1, 1, 1] and 3/5 = [0; 1, 1, 2] sit at the ends of the tail interval.
        assert_eq!(cf.compare_rational(&b(2), &b(3)).unwrap(), Ordering::Less);
        assert_eq!(cf.compare_rational(&b(3), &b(5)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn sign_trivial() {
        let cf = Cf::golden().unwrap();
        assert_eq!(cf.sign(&LinearForm::zero()).unwrap(), Sign::Zero);
        assert_eq!(cf.sign(&cf.delta(1).unwrap()).unwrap(), Sign::Negative);
        assert_eq!(cf.delta(0).unwrap(), LinearForm::alpha_multiple(b(1)));
        assert!(cf.delta(65).is_err());
    }

    #[test]
    fn frac_and_floor_trivial() {
        let cf = Cf::golden().unwrap();
        assert_eq!(cf.floor_mul(&b(0)).unwrap(), b(0));
        assert!(cf.frac_mul(&b(0)).unwrap().is_zero());
        assert_eq!(cf.frac_mul(&b(1)).unwrap(), LinearForm::alpha_multiple(b(1)));
    }

    #[test]
    fn linear_form_normalizes() {
        let x = LinearForm::new(b(2), b(4), b(-6)).unwrap();
        assert_eq!((x.const_part(), x.alpha_coeff(), x.denominator()), (&b(-1), &b(-2), &b(3)));
        assert_eq!(LinearForm::new(b(0), b(0), b(5)).unwrap(), LinearForm::zero());
        assert!(LinearForm::new(b(1), b(1), b(0)).is_err());
        let half = LinearForm::rational(b(1), b(2)).unwrap();
        assert_eq!(half.add(&half).unwrap(), LinearForm::integer(b(1)));
        assert_eq!(format!("{}", LinearForm::new(b(4), b(-5), b(1)).unwrap()), "4 - 5α");
    }

    #[test]
    fn semiconvergent_examples() {
        let cf = Cf::pi4().unwrap();
        assert_eq!(cf.semiconvergent_den(1, &b(1)).unwrap(), b(2));
        assert_eq!(cf.semiconvergent_den(1, &b(2)).unwrap(), b(3));
        assert_eq!(cf.semiconvergent_den(5, &b(7)).unwrap(), b(107));
        assert!(matches!(cf.semiconvergent_den(1, &b(3)), Err(Error::InvalidA { .. })));
        assert!(matches!(cf.semiconvergent_den(8, &b(1)), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(cf.semiconvergent_den(0, &b(1)), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn parse_specs() {
        assert_eq!(parse_alpha::<BigInt>("pi4").unwrap(), Cf::pi4().unwrap());
        assert_eq!(parse_alpha::<i64>("cf:4, 1,2").unwrap().quotients(), &[4, 1, 2]);
        assert_eq!(parse_alpha::<i64>("cf:0"), Err(Error::NonPositiveQuotient { index: 1 }));
        match parse_alpha::<i64>("cf:3,x") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_alpha::<i64>("e"), Err(Error::Parse { .. })));
    }
}
