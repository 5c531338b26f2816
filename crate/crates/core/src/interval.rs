//! Intervals with independently open or closed endpoints.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

pub type RealInterval = Interval<f64>;
pub type RatInterval = Interval<BigRational>;

impl<T: PartialOrd + fmt::Debug> Interval<T> {
    pub fn new(lo: T, hi: T, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::Parameter(format!("interval with lo {lo:?} > hi {hi:?}")));
        }
        Ok(Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn closed(lo: T, hi: T) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn open(lo: T, hi: T) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    /// `(lo, hi]`
    pub fn left_open(lo: T, hi: T) -> Result<Self> {
        Self::new(lo, hi, false, true)
    }
}

impl RatInterval {
    /// Closed interval with integer endpoints.
    pub fn closed_int(lo: i64, hi: i64) -> Self {
        Self::int(lo, hi, true, true)
    }

    pub fn int(lo: i64, hi: i64, lo_closed: bool, hi_closed: bool) -> Self {
        Interval::new(rat(lo), rat(hi), lo_closed, hi_closed).expect("lo <= hi")
    }

    pub fn to_real(&self) -> RealInterval {
        Interval {
            lo: self.lo.to_f64().unwrap_or(f64::NAN),
            hi: self.hi.to_f64().unwrap_or(f64::NAN),
            lo_closed: self.lo_closed,
            hi_closed: self.hi_closed,
        }
    }
}

pub fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl<T: fmt::Display> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Parses an exact rational such as `5`, `-3`, or `7/2`. Decimal points are
/// rejected so thresholds stay exact.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse {
        offset: 0,
        message: format!("expected an integer or p/q rational, found {s:?}"),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for RatInterval {
    type Err = Error;

    /// Accepts `[a,b]`, `(a,b]`, `[a,b)` and `(a,b)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |offset: usize, message: &str| Error::Parse {
            offset,
            message: message.to_string(),
        };
        let lo_closed = match s.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad(0, "interval must start with '[' or '('")),
        };
        let hi_closed = match s.chars().last() {
            Some(']') if s.len() > 1 => true,
            Some(')') if s.len() > 1 => false,
            _ => return Err(bad(s.len(), "interval must end with ']' or ')'")),
        };
        let inner = &s[1..s.len() - 1];
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| bad(1, "interval needs two comma-separated endpoints"))?;
        let lo = parse_rational(a).map_err(|_| bad(1, &format!("bad lower endpoint {a:?}")))?;
        let hi = parse_rational(b)
            .map_err(|_| bad(2 + a.len(), &format!("bad upper endpoint {b:?}")))?;
        Interval::new(lo, hi, lo_closed, hi_closed)
    }
}
