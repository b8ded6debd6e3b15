//! Exact multivariate polynomials over ℚ.
//!
//! Variables are numbered `1..=n`, with `y_1` the smallest. A non-constant
//! polynomial is stored recursively as its coefficient vector in the main
//! variable, each coefficient involving only smaller variables. This keeps
//! `mvar`, `init`, `rank` and pseudo-division cheap, and equal polynomials are
//! structurally equal.

mod arith;
mod division;
mod gcd;
mod interval;
mod order;
mod parse;
mod resultant;

pub use division::{div_exact, pquo, prem, pseudo_divide};
pub use gcd::{content_in, gcd, gcd_free_basis, primitive_part_in, squarefree_full, squarefree_part};
pub use interval::{eval_interval, Interval};
pub use order::VarOrder;
pub use parse::{parse_poly, parse_poly_line};
pub use resultant::{iterated_resultant, resultant, subresultant_chain};

pub(crate) use resultant::subresultants_up;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// A polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Const(Rational),
    /// `(v, c)` denotes `sum c[i] * y_v^i`; `c.len() >= 2`, last entry nonzero,
    /// every entry of level `< v`.
    Rec(usize, Vec<Poly>),
}

/// Builds a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Poly {
    pub fn zero() -> Poly {
        Poly(Repr::Const(Rational::zero()))
    }

    pub fn one() -> Poly {
        Poly(Repr::Const(Rational::one()))
    }

    pub fn constant(c: Rational) -> Poly {
        Poly(Repr::Const(c))
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(rat(n))
    }

    /// The variable `y_k` (`k >= 1`).
    pub fn var(k: usize) -> Poly {
        assert!(k >= 1, "variables are numbered from 1");
        Poly(Repr::Rec(k, vec![Poly::zero(), Poly::one()]))
    }

    /// `y_k^e`.
    pub fn var_pow(k: usize, e: usize) -> Poly {
        if e == 0 {
            return Poly::one();
        }
        let mut c = vec![Poly::zero(); e + 1];
        c[e] = Poly::one();
        Poly(Repr::Rec(k, c))
    }

    /// Polynomial `sum coeffs[i] * y_v^i`, where every coefficient has level below `v`.
    pub fn from_coeffs(v: usize, mut coeffs: Vec<Poly>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => Poly::zero(),
            1 => coeffs.pop().unwrap(),
            _ => {
                debug_assert!(coeffs.iter().all(|c| c.level() < v));
                Poly(Repr::Rec(v, coeffs))
            }
        }
    }

    /// Polynomial `sum coeffs[i] * y_v^i` for coefficients of any level.
    pub fn from_coeffs_in(v: usize, coeffs: Vec<Poly>) -> Poly {
        if coeffs.iter().all(|c| c.level() < v) {
            return Poly::from_coeffs(v, coeffs);
        }
        let y = Poly::var(v);
        let mut acc = Poly::zero();
        for c in coeffs.into_iter().rev() {
            acc = &(&acc * &y) + &c;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_one())
    }

    pub fn is_const(&self) -> bool {
        matches!(self.0, Repr::Const(_))
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Const(c) => Some(c),
            Repr::Rec(..) => None,
        }
    }

    /// Index of the main variable; 0 for constants.
    pub fn level(&self) -> usize {
        match &self.0 {
            Repr::Const(_) => 0,
            Repr::Rec(v, _) => *v,
        }
    }

    /// Main variable, as a level.
    pub fn mvar(&self) -> Result<usize> {
        match self.level() {
            0 => Err(Error::NoMainVariable),
            v => Ok(v),
        }
    }

    /// Degree in the main variable (0 for constants).
    pub fn mdeg(&self) -> usize {
        match &self.0 {
            Repr::Const(_) => 0,
            Repr::Rec(_, c) => c.len() - 1,
        }
    }

    /// Coefficients in the main variable, lowest degree first. A constant is
    /// its own single coefficient.
    pub fn coeffs(&self) -> &[Poly] {
        match &self.0 {
            Repr::Const(_) => std::slice::from_ref(self),
            Repr::Rec(_, c) => c,
        }
    }

    /// Leading coefficient in the main variable; a constant is its own initial.
    pub fn init(&self) -> &Poly {
        match &self.0 {
            Repr::Const(_) => self,
            Repr::Rec(_, c) => c.last().unwrap(),
        }
    }

    /// `init`, failing on constants.
    pub fn initial(&self) -> Result<Poly> {
        self.mvar().map(|_| self.init().clone())
    }

    /// Rank `(mvar, mdeg)`.
    pub fn rank(&self) -> Result<(usize, usize)> {
        self.mvar().map(|v| (v, self.mdeg()))
    }

    /// Separant: derivative in the main variable.
    pub fn sep(&self) -> Result<Poly> {
        self.mvar().map(|v| self.derivative(v))
    }

    /// `self - init * mvar^mdeg`.
    pub fn tail(&self) -> Poly {
        match &self.0 {
            Repr::Const(_) => Poly::zero(),
            Repr::Rec(v, c) => Poly::from_coeffs(*v, c[..c.len() - 1].to_vec()),
        }
    }

    /// Truncation to the terms of main-variable degree at most `d`.
    pub fn truncate(&self, d: usize) -> Poly {
        match &self.0 {
            Repr::Const(_) => self.clone(),
            Repr::Rec(v, c) => Poly::from_coeffs(*v, c[..(d + 1).min(c.len())].to_vec()),
        }
    }

    /// Degree in `y_v`.
    pub fn deg_in(&self, v: usize) -> usize {
        let l = self.level();
        if l < v {
            0
        } else if l == v {
            self.mdeg()
        } else {
            self.coeffs().iter().map(|c| c.deg_in(v)).max().unwrap_or(0)
        }
    }

    /// Whether `y_v` occurs.
    pub fn has_var(&self, v: usize) -> bool {
        let l = self.level();
        l == v || (l > v && self.coeffs().iter().any(|c| c.has_var(v)))
    }

    /// Set of variables occurring, ascending.
    pub fn vars(&self) -> Vec<usize> {
        let mut seen = Vec::new();
        self.collect_vars(&mut seen);
        seen.sort_unstable();
        seen.dedup();
        seen
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        if let Repr::Rec(v, c) = &self.0 {
            out.push(*v);
            for x in c {
                x.collect_vars(out);
            }
        }
    }

    /// Coefficients with respect to `y_v`, which need not be the main variable.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let l = self.level();
        if l < v {
            return vec![self.clone()];
        }
        if l == v {
            return self.coeffs().to_vec();
        }
        let parts: Vec<Vec<Poly>> = self.coeffs().iter().map(|c| c.coeffs_in(v)).collect();
        let d = parts.iter().map(|p| p.len()).max().unwrap_or(1);
        (0..d)
            .map(|i| {
                let cs = parts.iter().map(|p| p.get(i).cloned().unwrap_or_else(Poly::zero)).collect();
                Poly::from_coeffs(l, cs)
            })
            .collect()
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        match &self.0 {
            Repr::Const(c) => Poly::constant(c * k),
            Repr::Rec(v, c) => Poly(Repr::Rec(*v, c.iter().map(|x| x.scale(k)).collect())),
        }
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative in `y_v`.
    pub fn derivative(&self, v: usize) -> Poly {
        let l = self.level();
        if l < v {
            return Poly::zero();
        }
        let c = self.coeffs();
        if l == v {
            let d = c.iter().enumerate().skip(1).map(|(i, x)| x.scale(&rat(i as i64))).collect();
            return Poly::from_coeffs(v, d);
        }
        Poly::from_coeffs(l, c.iter().map(|x| x.derivative(v)).collect())
    }

    /// Substitutes the rational `x` for `y_v`.
    pub fn eval_var(&self, v: usize, x: &Rational) -> Poly {
        let l = self.level();
        if l < v {
            return self.clone();
        }
        let c = self.coeffs();
        if l == v {
            let mut acc = Poly::zero();
            for k in c.iter().rev() {
                acc = &acc.scale(x) + k;
            }
            return acc;
        }
        Poly::from_coeffs(l, c.iter().map(|k| k.eval_var(v, x)).collect())
    }

    /// Substitutes `point[i]` for `y_{i+1}`; the remaining variables stay symbolic.
    pub fn eval_prefix(&self, point: &[Rational]) -> Poly {
        match &self.0 {
            Repr::Const(_) => self.clone(),
            Repr::Rec(v, c) if *v <= point.len() => {
                let x = &point[*v - 1];
                let mut acc = Poly::zero();
                for k in c.iter().rev() {
                    acc = &acc.scale(x) + &k.eval_prefix(point);
                }
                acc
            }
            Repr::Rec(v, c) => Poly::from_coeffs(*v, c.iter().map(|k| k.eval_prefix(point)).collect()),
        }
    }

    /// Value at a point covering every variable of the polynomial.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        match &self.0 {
            Repr::Const(c) => c.clone(),
            Repr::Rec(v, c) => {
                let x = &point[*v - 1];
                let mut acc = Rational::zero();
                for k in c.iter().rev() {
                    acc = acc * x + k.eval(point);
                }
                acc
            }
        }
    }

    /// Exact substitution of rationals for the bound variables.
    pub fn specialize(&self, bindings: &[(usize, Rational)]) -> Poly {
        let mut b: Vec<&(usize, Rational)> = bindings.iter().collect();
        b.sort_by(|x, y| y.0.cmp(&x.0));
        let mut p = self.clone();
        for (v, x) in b {
            p = p.eval_var(*v, x);
        }
        p
    }

    /// The constant reached by repeatedly taking initials.
    pub fn leading_const(&self) -> &Rational {
        match &self.0 {
            Repr::Const(c) => c,
            Repr::Rec(_, c) => c.last().unwrap().leading_const(),
        }
    }

    fn for_each_const(&self, f: &mut impl FnMut(&Rational)) {
        match &self.0 {
            Repr::Const(c) => f(c),
            Repr::Rec(_, c) => c.iter().for_each(|x| x.for_each_const(f)),
        }
    }

    /// Rational `k` such that `k * self` is primitive over ℤ with positive
    /// leading coefficient.
    pub fn normalizing_factor(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        self.for_each_const(&mut |c| {
            if !c.is_zero() {
                den = den.lcm(c.denom());
                num = num.gcd(c.numer());
            }
        });
        let k = Rational::new(den, num);
        if self.leading_const().is_negative() {
            -k
        } else {
            k
        }
    }

    /// Canonical representative: primitive integer coefficients, positive
    /// leading coefficient in lexicographic order.
    pub fn normalize(&self) -> Poly {
        let k = self.normalizing_factor();
        if k.is_one() {
            self.clone()
        } else {
            self.scale(&k)
        }
    }

    /// Number of terms in expanded form.
    pub fn num_terms(&self) -> usize {
        match &self.0 {
            Repr::Const(c) => usize::from(!c.is_zero()),
            Repr::Rec(_, c) => c.iter().map(|x| x.num_terms()).sum(),
        }
    }

    /// Expanded terms `(exponents, coefficient)`; `exponents[i]` is the power
    /// of `y_{i+1}`. Sorted by decreasing lexicographic order, greatest variable first.
    pub fn terms(&self, nvars: usize) -> Vec<(Vec<u32>, Rational)> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; nvars.max(self.level())];
        self.collect_terms(&mut exps, &mut out);
        out
    }

    fn collect_terms(&self, exps: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Rational)>) {
        match &self.0 {
            Repr::Const(c) => {
                if !c.is_zero() {
                    out.push((exps.clone(), c.clone()));
                }
            }
            Repr::Rec(v, c) => {
                for (i, k) in c.iter().enumerate().rev() {
                    exps[*v - 1] = i as u32;
                    k.collect_terms(exps, out);
                }
                exps[*v - 1] = 0;
            }
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` terms.
    pub fn from_terms(terms: &[(Vec<u32>, Rational)]) -> Poly {
        let mut acc = Poly::zero();
        for (e, c) in terms {
            let mut m = Poly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = &m * &Poly::var_pow(i + 1, k as usize);
                }
            }
            acc = &acc + &m;
        }
        acc
    }

    /// Text form using the given variable names (`names[i]` names `y_{i+1}`).
    pub fn to_text(&self, names: &[String]) -> String {
        let terms = self.terms(names.len());
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for i in 0..e.len() {
                match e[i] {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    p => factors.push(format!("{}^{}", names[i], p)),
                }
            }
            if !a.is_one() || factors.is_empty() {
                factors.insert(0, a.to_string());
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    fn default_names(&self) -> Vec<String> {
        (1..=self.level()).map(|i| format!("y{i}")).collect()
    }
}

impl Ord for Poly {
    /// Canonical order: by rank, then coefficient-wise from the leading one.
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Const(a), Repr::Const(b)) => a.cmp(b),
            (Repr::Const(_), Repr::Rec(..)) => Ordering::Less,
            (Repr::Rec(..), Repr::Const(_)) => Ordering::Greater,
            (Repr::Rec(v, a), Repr::Rec(w, b)) => v
                .cmp(w)
                .then(a.len().cmp(&b.len()))
                .then_with(|| {
                    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                        let o = x.cmp(y);
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                    Ordering::Equal
                }),
        }
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&self.default_names()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `rank(p) < rank(q)`.
pub fn rank_less(p: &Poly, q: &Poly) -> Result<bool> {
    let (a, b) = (p.rank()?, q.rank()?);
    Ok(a < b)
}
