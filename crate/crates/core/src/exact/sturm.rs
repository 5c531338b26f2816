//! Square-free decomposition and Sturm-sequence root counting.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{IntPolynomial, RationalPolynomial};
use crate::error::{Error, Result};
use crate::interval::RatInterval;

/// Yun's decomposition `p = c * prod p_i^i`, with each `p_i` square-free,
/// primitive, positive-leading, and pairwise coprime. Only factors of positive
/// degree are returned, ordered by multiplicity.
pub fn square_free_parts(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::Parameter("square-free decomposition of the zero polynomial".into()));
    }
    let f = p.to_rational().monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut parts = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            parts.push((a.to_primitive_integer(), i));
        }
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(parts)
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Degree of `gcd(a, b)` over `GF(PRIME)`; inputs ascending, trimmed.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let inv = powmod(*b.last().unwrap(), PRIME - 2);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = mulmod(*a.last().unwrap(), inv);
            for (i, &c) in b.iter().enumerate() {
                let sub = mulmod(factor, c);
                a[shift + i] = (a[shift + i] + PRIME - sub) % PRIME;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Sufficient test: if `p` and `p'` are coprime modulo a prime not dividing
/// the leading coefficient, they are coprime over `Q`.
fn square_free_mod_prime(p: &IntPolynomial) -> bool {
    use num_traits::ToPrimitive;
    let modulus = num_bigint::BigInt::from(PRIME);
    let reduce = |c: &num_bigint::BigInt| {
        let r = ((c % &modulus) + &modulus) % &modulus;
        r.to_u64().expect("reduced below modulus")
    };
    let a: Vec<u64> = p.coeffs().iter().map(reduce).collect();
    if a.last().is_none_or(|&c| c == 0) {
        return false;
    }
    let da: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(c, i as u64 % PRIME))
        .collect();
    gcd_degree_mod(a, da) == 0
}

pub fn is_square_free(p: &IntPolynomial) -> bool {
    if p.degree().unwrap_or(0) > 0 && square_free_mod_prime(p) {
        return true;
    }
    let f: RationalPolynomial = p.to_rational();
    !p.is_zero() && f.gcd(&f.derivative()).degree() == Some(0)
}

/// Sturm sequence of a square-free integer polynomial, built from negated
/// primitive pseudo-remainders so the signs match the true remainder chain.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

enum Point<'a> {
    NegInf,
    PosInf,
    At(&'a BigRational),
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if !is_square_free(p) {
            return Err(Error::NotSquareFree);
        }
        let mut seq = vec![p.clone(), p.derivative().primitive_part()];
        loop {
            let k = seq.len();
            let (prev, cur) = (&seq[k - 2], &seq[k - 1]);
            if cur.degree().unwrap_or(0) == 0 {
                break;
            }
            let r = prev.pseudo_rem(cur);
            if r.is_zero() {
                break;
            }
            let delta = prev.degree().unwrap() - cur.degree().unwrap();
            // lc^(delta+1) < 0 flips the sign of the pseudo-remainder
            let flips = cur.leading().unwrap().is_negative() && delta % 2 == 0;
            let next = r.primitive_part();
            seq.push(if flips { next } else { -next });
        }
        Ok(SturmChain { seq })
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    fn variations(&self, at: Point<'_>) -> usize {
        let signs = self.seq.iter().map(|q| match at {
            Point::At(x) => q.sign_at(x),
            Point::PosInf => q.leading().map_or(Ordering::Equal, |c| c.sign_cmp()),
            Point::NegInf => {
                let s = q.leading().map_or(Ordering::Equal, |c| c.sign_cmp());
                if q.degree().unwrap_or(0) % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
        });
        let mut count = 0;
        let mut last = Ordering::Equal;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations(Point::NegInf) - self.variations(Point::PosInf)
    }

    /// Distinct roots in `interval`, honouring open/closed endpoints.
    pub fn count(&self, interval: &RatInterval) -> usize {
        let p = self.polynomial();
        let root_at = |x: &BigRational| usize::from(p.sign_at(x) == Ordering::Equal);
        if interval.lo == interval.hi {
            return if interval.lo_closed && interval.hi_closed {
                root_at(&interval.lo)
            } else {
                0
            };
        }
        // With zeros dropped, V(x) equals V(x+) for every x, so V(a) - V(b)
        // counts the roots in (a, b].
        let half_open =
            self.variations(Point::At(&interval.lo)) - self.variations(Point::At(&interval.hi));
        let mut count = half_open;
        if interval.lo_closed {
            count += root_at(&interval.lo);
        }
        if !interval.hi_closed {
            count -= root_at(&interval.hi);
        }
        count
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for num_bigint::BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Distinct real roots of a square-free polynomial inside `interval`.
pub fn sturm_count(p: &IntPolynomial, interval: &RatInterval) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(interval))
}

/// `p / (x - k)` by synthetic division; `k` must be a root.
fn deflate(p: &IntPolynomial, k: i64) -> IntPolynomial {
    let k = num_bigint::BigInt::from(k);
    let c = p.coeffs();
    let mut out = vec![num_bigint::BigInt::zero(); c.len() - 1];
    let mut carry = num_bigint::BigInt::zero();
    for i in (1..c.len()).rev() {
        carry = &c[i] + &carry * &k;
        out[i - 1] = carry.clone();
    }
    IntPolynomial::new(out)
}

/// Counts roots with multiplicity using one square-free decomposition and one
/// Sturm chain per factor; reused across interval queries.
#[derive(Debug, Clone)]
pub struct RootCounter {
    parts: Vec<(SturmChain, usize)>,
    degree: usize,
}

impl RootCounter {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        let parts = square_free_parts(p)?
            .into_iter()
            .map(|(q, m)| Ok((SturmChain::new(&q)?, m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootCounter {
            parts,
            degree: p.degree().unwrap_or(0),
        })
    }

    /// Like `new`, but first divides out `(x - k)` for each candidate integer
    /// root `k`, which is much cheaper than a full square-free decomposition
    /// when most repeated roots are integers.
    pub fn with_integer_candidates(p: &IntPolynomial, candidates: impl IntoIterator<Item = i64>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Parameter("root counter of the zero polynomial".into()));
        }
        let degree = p.degree().unwrap_or(0);
        let mut rest = p.clone();
        let mut parts = Vec::new();
        for k in candidates {
            let linear = IntPolynomial::linear_root(k);
            let mut m = 0;
            while rest.degree().unwrap_or(0) > 0 && rest.eval_i64(k).is_zero() {
                rest = deflate(&rest, k);
                m += 1;
            }
            if m > 0 {
                parts.push((SturmChain::new(&linear)?, m));
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            if is_square_free(&rest) {
                parts.push((SturmChain::new(&rest)?, 1));
            } else {
                parts.extend(RootCounter::new(&rest)?.parts);
            }
        }
        Ok(RootCounter { parts, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Roots in `interval`, counted with multiplicity.
    pub fn count(&self, interval: &RatInterval) -> usize {
        self.parts.iter().map(|(c, m)| m * c.count(interval)).sum()
    }

    /// Real roots counted with multiplicity.
    pub fn count_real(&self) -> usize {
        self.parts.iter().map(|(c, m)| m * c.count_real()).sum()
    }

    /// Multiplicity of `x` as a root (0 if it is not one).
    pub fn multiplicity(&self, x: &BigRational) -> usize {
        self.parts
            .iter()
            .find(|(c, _)| c.polynomial().sign_at(x) == Ordering::Equal)
            .map_or(0, |(_, m)| *m)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&IntPolynomial, usize)> {
        self.parts.iter().map(|(c, m)| (c.polynomial(), *m))
    }
}
