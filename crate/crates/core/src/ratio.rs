//! Exact rational parameters (`α`, `t`, `ε`).

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// `⌊x⌋` clamped at zero.
pub fn floor_usize(x: Rational) -> usize {
    x.floor().to_integer().max(0) as usize
}

/// `⌈x⌉` clamped at zero.
pub fn ceil_usize(x: Rational) -> usize {
    x.ceil().to_integer().max(0) as usize
}

/// Parses `7`, `13/2` or a finite decimal such as `6.5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse { line: 0, msg: format!("not a rational number: {s:?}") };
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 12 {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let w: i64 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().map_err(|_| bad())? };
        let den = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().map_err(|_| bad())?;
        let mag = w.abs() * den + f;
        return Ok(Rational::new(if neg { -mag } else { mag }, den));
    }
    Ok(int(s.parse().map_err(|_| bad())?))
}

pub fn format_rational(x: Rational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("13/2").unwrap(), Rational::new(13, 2));
        assert_eq!(parse_rational("6.5").unwrap(), Rational::new(13, 2));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::new(1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(format_rational(Rational::new(26, 4)), "13/2");
    }

    #[test]
    fn rounding() {
        assert_eq!(floor_usize(Rational::new(13, 3)), 4);
        assert_eq!(ceil_usize(Rational::new(13, 6)), 3);
        assert_eq!(ceil_usize(int(2)), 2);
    }
}
