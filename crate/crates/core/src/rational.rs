//! Exact rational helpers shared by the polytope, halfspace and LP code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Default denominator bound when turning float inputs into rationals.
pub const DEFAULT_DENOMINATOR_BOUND: u64 = 1_000_000_000_000;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"1/3"`, `"-2"`, `"0.125"` or `"1.5e-3"` exactly.
pub fn parse_rational(text: &str) -> Result<Q> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Q::new(num, den));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("not a number: {s:?}"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Q::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Q::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if negative { -value } else { value })
}

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents plus the best semiconvergent).
pub fn rationalize(x: f64, max_den: u64) -> Result<Q> {
    if !x.is_finite() {
        return Err(Error::Parse(format!("non-finite value {x}")));
    }
    let max_den = BigInt::from(max_den.max(1));
    let exact = Q::from_float(x).ok_or_else(|| Error::Parse(format!("cannot represent {x}")))?;
    if exact.denom() <= &max_den {
        return Ok(exact);
    }
    let negative = exact.is_negative();
    let target = exact.abs();

    // Convergents p/q of the continued fraction of `target`.
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    loop {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > max_den {
            // Largest admissible semiconvergent versus the last convergent.
            let k = (&max_den - &q0).div_floor(&q1);
            let semi = Q::new(&k * &p1 + &p0, &k * &q1 + &q0);
            let conv = Q::new(p1.clone(), q1.clone());
            let best = if (&semi - &target).abs() < (&conv - &target).abs() {
                semi
            } else {
                conv
            };
            return Ok(if negative { -best } else { best });
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let remainder = &rest - Q::from_integer(a);
        if remainder.is_zero() {
            let best = Q::new(p1, q1);
            return Ok(if negative { -best } else { best });
        }
        rest = remainder.recip();
    }
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// Returns the positive factor that was applied.
pub fn primitive_scale(values: &[Q]) -> Q {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let gcd = values
        .iter()
        .map(|v| (v * Q::from_integer(lcm.clone())).to_integer())
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v));
    if gcd.is_zero() {
        Q::one()
    } else {
        Q::new(lcm, gcd)
    }
}
