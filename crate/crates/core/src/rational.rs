//! Exact rational numbers for interval endpoints and fractional thresholds.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Always kept in lowest terms with a positive denominator by `Ratio`.
pub type Rational = Ratio<i64>;

/// Parses `p/q` or a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::invalid(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(Error::invalid(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A fraction `num/den` of a population of size `n`, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Share {
    frac: Rational,
}

impl Share {
    pub fn new(num: i64, den: i64) -> Self {
        Share {
            frac: Rational::new(num, den),
        }
    }

    pub fn of(self, n: usize) -> Rational {
        self.frac * Rational::from_integer(n as i64)
    }

    /// `count >= frac * n`
    pub fn reached_by(self, count: usize, n: usize) -> bool {
        Rational::from_integer(count as i64) >= self.of(n)
    }

    /// `count > frac * n`
    pub fn exceeded_by(self, count: usize, n: usize) -> bool {
        Rational::from_integer(count as i64) > self.of(n)
    }

    pub fn floor_of(self, n: usize) -> usize {
        self.of(n).floor().to_integer().max(0) as usize
    }

    pub fn ceil_of(self, n: usize) -> usize {
        self.of(n).ceil().to_integer().max(0) as usize
    }
}

/// Downward guard applied before flooring a float-evaluated threshold.
pub const FLOAT_GUARD: f64 = 1.0 / (1u64 << 40) as f64;

/// `floor(x - 2^-40)`, clamped at zero.
pub fn guarded_floor(x: f64) -> usize {
    let y = (x - FLOAT_GUARD).floor();
    if y <= 0.0 {
        0
    } else {
        y as usize
    }
}

/// `ceil(x - 2^-40)`, clamped at zero.
pub fn guarded_ceil(x: f64) -> usize {
    let y = (x - FLOAT_GUARD).ceil();
    if y <= 0.0 {
        0
    } else {
        y as usize
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3));
        assert_eq!(parse_rational("6/4").unwrap(), Rational::new(3, 2));
        assert_eq!(parse_rational("-1/3").unwrap(), Rational::new(-1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&Rational::new(6, 4)), "3/2");
        assert_eq!(format_rational(&Rational::new(8, 4)), "2");
    }

    #[test]
    fn share_thresholds_are_exact() {
        let four_ninths = Share::new(4, 9);
        assert!(four_ninths.reached_by(4, 9));
        assert!(!four_ninths.reached_by(3, 9));
        assert!(!four_ninths.exceeded_by(4, 9));
        assert_eq!(Share::new(2, 9).floor_of(120), 26);
        assert_eq!(Share::new(1, 3).ceil_of(4), 2);
    }

    #[test]
    fn guard_prevents_spurious_rounding() {
        assert_eq!(guarded_floor(12.0), 11);
        assert_eq!(guarded_floor(12.5), 12);
        assert_eq!(guarded_ceil(4.0), 4);
        assert_eq!(guarded_ceil(4.000001), 5);
        assert_eq!(guarded_floor(-3.0), 0);
    }
}
