//! Exact rational arithmetic helpers.
//!
//! Every score, margin and rate in this crate is a [`Rational`]. Ties
//! (`v_xy = v_yx`, zero margins) decide which relations hold, so equality
//! has to be exact; floats would silently corrupt the comparison relation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses a non-negative or signed rational literal: either `p/q` or a
/// decimal string such as `3`, `0.25` or `-1.5`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let valid = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    if !valid(int_part) || !valid(frac_part) {
        return None;
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().ok()?
    };
    let mut denom = BigInt::one();
    for c in frac_part.chars() {
        numer = numer * 10 + c.to_digit(10).unwrap();
        denom *= 10;
    }
    Some(Rational::new(numer * sign, denom))
}

/// Renders a rational as `p/q`, e.g. `23/44` or `2/1`.
pub fn format_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Renders a rational compactly: integers without a denominator,
/// everything else as `p/q`.
pub fn format_compact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational as a fixed-point decimal with `digits` fractional
/// digits, rounding half to even.
pub fn format_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.numer() * &scale;
    let denom = r.denom();
    let negative = scaled.is_negative();
    let abs = scaled.abs();
    let (mut quot, rem) = num::Integer::div_rem(&abs, denom);
    let twice = &rem * 2;
    if twice > *denom || (twice == *denom && num::Integer::is_odd(&quot)) {
        quot += 1;
    }
    let mut body = quot.to_string();
    if digits > 0 {
        if body.len() <= digits {
            body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
        }
        body.insert(body.len() - digits, '.');
    }
    if negative && !quot.is_zero() {
        body.insert(0, '-');
    }
    body
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_and_decimal_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational(" 22/44 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("3").unwrap(), rat_int(3));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("a/b").is_none());
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("").is_none());
        assert!(parse_rational(".").is_none());
    }

    #[test]
    fn decimal_rendering_rounds_half_to_even() {
        assert_eq!(format_decimal(&rat(1, 8), 2), "0.12");
        assert_eq!(format_decimal(&rat(3, 8), 2), "0.38");
        assert_eq!(format_decimal(&rat(1, 2), 0), "0");
        assert_eq!(format_decimal(&rat(3, 2), 0), "2");
        assert_eq!(format_decimal(&rat(-1, 8), 2), "-0.12");
    }

    #[test]
    fn decimal_rendering_matches_published_rates() {
        assert_eq!(format_decimal(&rat(37, 11), 4), "3.3636");
        assert_eq!(format_decimal(&rat(149, 44), 4), "3.3864");
        assert_eq!(format_decimal(&rat(75, 22), 4), "3.4091");
        assert_eq!(format_decimal(&rat(151, 44), 4), "3.4318");
        assert_eq!(format_decimal(&rat(157, 44), 4), "3.5682");
        assert_eq!(format_decimal(&rat(169, 44), 4), "3.8409");
    }

    #[test]
    fn exact_rendering_keeps_unit_denominators() {
        assert_eq!(format_exact(&rat_int(2)), "2/1");
        assert_eq!(format_compact(&rat_int(2)), "2");
        assert_eq!(format_compact(&rat(47, 2)), "47/2");
    }
}
