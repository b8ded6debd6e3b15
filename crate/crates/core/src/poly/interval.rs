//! Closed rational intervals and interval evaluation.

use super::{Poly, Rational};
use num_traits::{Signed, Zero};
use std::fmt;

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign when the interval excludes zero (or is the point zero).
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        if self.is_point() {
            return o.scale(&self.lo);
        }
        if o.is_point() {
            return self.scale(&o.lo);
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Encloses the range of `p` over the box `boxes[i]` for `y_{i+1}` (Horner form).
pub fn eval_interval(p: &Poly, boxes: &[Interval]) -> Interval {
    if let Some(c) = p.as_const() {
        return Interval::point(c.clone());
    }
    let x = &boxes[p.level() - 1];
    let mut acc = Interval::point(Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&eval_interval(c, boxes));
    }
    acc
}
