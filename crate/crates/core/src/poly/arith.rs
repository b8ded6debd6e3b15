use super::{Poly, Repr};
use std::ops::{Add, Mul, Neg, Sub};

fn add(a: &Poly, b: &Poly) -> Poly {
    if let (Repr::Const(x), Repr::Const(y)) = (&a.0, &b.0) {
        return Poly::constant(x + y);
    }
    let (la, lb) = (a.level(), b.level());
    if la > lb {
        let mut c = a.coeffs().to_vec();
        c[0] = &c[0] + b;
        return Poly(Repr::Rec(la, c));
    }
    if lb > la {
        let mut c = b.coeffs().to_vec();
        c[0] = a + &c[0];
        return Poly(Repr::Rec(lb, c));
    }
    let (ca, cb) = (a.coeffs(), b.coeffs());
    let n = ca.len().max(cb.len());
    let c = (0..n)
        .map(|i| match (ca.get(i), cb.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    Poly::from_coeffs(la, c)
}

fn neg(a: &Poly) -> Poly {
    match &a.0 {
        Repr::Const(c) => Poly::constant(-c),
        Repr::Rec(v, c) => Poly(Repr::Rec(*v, c.iter().map(neg).collect())),
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    match (&a.0, &b.0) {
        (Repr::Const(x), Repr::Const(y)) => return Poly::constant(x * y),
        (Repr::Const(x), _) => return b.scale(x),
        (_, Repr::Const(y)) => return a.scale(y),
        _ => {}
    }
    let (la, lb) = (a.level(), b.level());
    if la > lb {
        return Poly(Repr::Rec(la, a.coeffs().iter().map(|x| mul(x, b)).collect()));
    }
    if lb > la {
        return Poly(Repr::Rec(lb, b.coeffs().iter().map(|y| mul(a, y)).collect()));
    }
    let (ca, cb) = (a.coeffs(), b.coeffs());
    let mut c = vec![Poly::zero(); ca.len() + cb.len() - 1];
    for (i, x) in ca.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in cb.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = mul(x, y);
            c[i + j] = add(&c[i + j], &t);
        }
    }
    Poly(Repr::Rec(la, c))
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                $f(self, rhs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                $f(&self, &rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                $f(&self, rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                $f(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Mul, mul, mul);
binop!(Sub, sub, |a: &Poly, b: &Poly| add(a, &neg(b)));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        neg(self)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        neg(&self)
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| a * b)
    }
}
