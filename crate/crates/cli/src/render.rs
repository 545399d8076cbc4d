//! Text helpers: rational parsing, approximate decimals and tables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use sturmian_balance::{BigAlpha, Error, LinearForm, Result, Sign};

/// Parses `a/b` or a bare integer `a` into an exact rational form.
pub fn parse_rational(text: &str) -> Result<LinearForm<BigInt>> {
    let bad = |reason: &str| Error::Parse { token: text.to_string(), reason: reason.to_string() };
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("expected an integer or a/b"))?;
    let den: BigInt = den.parse().map_err(|_| bad("expected an integer or a/b"))?;
    if !den.is_positive() {
        return Err(bad("denominator must be positive"));
    }
    LinearForm::rational(num, den)
}

pub fn parse_int(text: &str) -> Result<BigInt> {
    text.trim().parse().map_err(|_| Error::Parse { token: text.to_string(), reason: "expected an integer".into() })
}

/// Digits written as `0,1,0,0,1` or `[0,1,0,0,1]`, lowest index first.
pub fn parse_digits(text: &str) -> Result<Vec<BigInt>> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(parse_int).collect()
}

/// `≈` followed by 50 significant digits of the form, with alpha replaced
/// by `p_K / q_K`. For display only.
pub fn approx(cf: &BigAlpha, x: &LinearForm<BigInt>) -> String {
    let k = cf.depth();
    let (p, q) = (cf.p(k).expect("k <= depth"), cf.q(k).expect("k <= depth"));
    let num = x.const_part() * q + x.alpha_coeff() * p;
    let den = x.denominator() * q;
    format!("≈{}", decimal(&num, &den, 50))
}

fn decimal(num: &BigInt, den: &BigInt, significant: usize) -> String {
    let negative = num.is_negative();
    let (int, mut rem) = num.abs().div_rem(den);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int.to_string());
    let mut count = if int.is_zero() { 0 } else { int.to_string().len() };
    if count >= significant {
        return out;
    }
    out.push('.');
    let ten = BigInt::from(10);
    let mut seen_nonzero = count > 0;
    while count < significant && !(rem.is_zero() && seen_nonzero) {
        rem *= &ten;
        let (digit, r) = rem.div_rem(den);
        rem = r;
        seen_nonzero |= !digit.is_zero();
        if seen_nonzero {
            count += 1;
        }
        out.push_str(&digit.to_string());
        if rem.is_zero() && seen_nonzero {
            break;
        }
    }
    out
}

pub fn sign_label(sign: Sign) -> &'static str {
    match sign {
        Sign::Positive => "+",
        Sign::Negative => "-",
        Sign::Zero => "0",
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n")
}

pub fn tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = vec![header.join("\t")];
    out.extend(rows.iter().map(|r| r.join("\t")));
    out.join("\n")
}
