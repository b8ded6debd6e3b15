use super::{Poly, Rational};
use num_traits::One;

/// Univariate view: `u[i]` is the coefficient of `v^i`; coefficients may
/// involve any variable other than `v`.
pub(crate) type UPoly = Vec<Poly>;

pub(crate) fn up_trim(u: &mut UPoly) {
    while u.len() > 1 && u.last().unwrap().is_zero() {
        u.pop();
    }
    if u.is_empty() {
        u.push(Poly::zero());
    }
}

pub(crate) fn up_is_zero(u: &[Poly]) -> bool {
    u.iter().all(|c| c.is_zero())
}

pub(crate) fn up_deg(u: &[Poly]) -> usize {
    u.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

pub(crate) fn up_scale(u: &[Poly], k: &Poly) -> UPoly {
    u.iter().map(|c| c * k).collect()
}

pub(crate) fn up_neg(u: &[Poly]) -> UPoly {
    u.iter().map(|c| -c).collect()
}

pub(crate) fn up_div_scalar(u: &[Poly], k: &Poly) -> UPoly {
    u.iter()
        .map(|c| div_exact(c, k).expect("inexact coefficient division"))
        .collect()
}

/// Pseudo-division with the exact multiplier `lc(b)^(deg a - deg b + 1)`.
/// Returns `(q, r)` with `lc(b)^e a = q b + r`, `deg r < deg b`.
pub(crate) fn up_pseudo_divide(a: &[Poly], b: &[Poly]) -> (UPoly, UPoly) {
    let db = up_deg(b);
    let mut r: UPoly = a.to_vec();
    up_trim(&mut r);
    let da = up_deg(&r);
    if up_is_zero(&r) || da < db {
        return (vec![Poly::zero()], r);
    }
    let lcb = &b[db];
    let e = da - db + 1;
    let mut q = vec![Poly::zero(); da - db + 1];
    let mut steps = 0;
    while !up_is_zero(&r) && up_deg(&r) >= db {
        let dr = up_deg(&r);
        let lcr = r[dr].clone();
        let k = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for c in q.iter_mut() {
            *c = &*c * lcb;
        }
        q[k] = &q[k] + &lcr;
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            r[i + k] = &r[i + k] - &(&lcr * bi);
        }
        debug_assert!(r[dr].is_zero());
        r.truncate(dr);
        up_trim(&mut r);
        steps += 1;
    }
    if steps < e {
        let m = lcb.pow(e - steps);
        r = up_scale(&r, &m);
        q = up_scale(&q, &m);
    }
    up_trim(&mut r);
    (q, r)
}

/// Pseudo-quotient and pseudo-remainder of `a` by `b` in `y_v`.
pub fn pseudo_divide(a: &Poly, b: &Poly, v: usize) -> (Poly, Poly) {
    let (q, r) = up_pseudo_divide(&a.coeffs_in(v), &b.coeffs_in(v));
    (Poly::from_coeffs_in(v, q), Poly::from_coeffs_in(v, r))
}

/// Pseudo-remainder of `a` by `b` in `y_v`.
pub fn prem(a: &Poly, b: &Poly, v: usize) -> Poly {
    if a.deg_in(v) < b.deg_in(v) {
        return a.clone();
    }
    pseudo_divide(a, b, v).1
}

/// Pseudo-quotient of `a` by `b` in `y_v`.
pub fn pquo(a: &Poly, b: &Poly, v: usize) -> Poly {
    pseudo_divide(a, b, v).0
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn div_exact(a: &Poly, b: &Poly) -> Option<Poly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(Poly::zero());
    }
    if let Some(c) = b.as_const() {
        return Some(a.scale(&(Rational::one() / c)));
    }
    let (la, lb) = (a.level(), b.level());
    if la < lb {
        return None;
    }
    if la > lb {
        let mut out = Vec::with_capacity(a.coeffs().len());
        for c in a.coeffs() {
            out.push(div_exact(c, b)?);
        }
        return Some(Poly::from_coeffs(la, out));
    }
    let v = la;
    let bc = b.coeffs();
    let db = bc.len() - 1;
    let lcb = &bc[db];
    let mut r: UPoly = a.coeffs().to_vec();
    if r.len() - 1 < db {
        return None;
    }
    let mut q = vec![Poly::zero(); r.len() - db];
    loop {
        up_trim(&mut r);
        if up_is_zero(&r) {
            break;
        }
        let dr = up_deg(&r);
        if dr < db {
            return None;
        }
        let k = dr - db;
        let t = div_exact(&r[dr], lcb)?;
        for (i, bi) in bc.iter().enumerate() {
            r[i + k] = &r[i + k] - &(&t * bi);
        }
        q[k] = t;
        r.truncate(dr);
    }
    Some(Poly::from_coeffs(v, q))
}

