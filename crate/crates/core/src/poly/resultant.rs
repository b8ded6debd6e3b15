//! Subresultant chains and resultants.
//!
//! Convention: for `deg a = d >= deg b = e`, the chain is `S_{d-1}, ..., S_0`
//! with `S_{d-1} = b`, `S_j = 0` for `e < j < d-1`, `S_e = lc(b)^(d-e-1) b`,
//! and the remaining entries given by the Sylvester submatrix determinants.
//! `S_0` is the Sylvester resultant `res(a, b)`, sign included. The chain is
//! computed with Lazard's form of the subresultant algorithm (as in Ducos).

use super::division::{up_deg, up_div_scalar, up_is_zero, up_neg, up_pseudo_divide, up_scale, UPoly};
use super::Poly;
use crate::error::{Error, Result};

/// Subresultants of `a`, `b` (univariate views, `deg a >= deg b`, `deg a >= 1`).
/// Entry `j` of the result is `S_j`, for `j < deg a`.
pub(crate) fn subresultants_up(a: &[Poly], b: &[Poly]) -> Vec<UPoly> {
    let da = up_deg(a);
    let db = up_deg(b);
    assert!(da >= 1 && da >= db, "subresultant degree precondition");
    let zero = || vec![Poly::zero()];
    let mut out: Vec<UPoly> = (0..da).map(|_| zero()).collect();
    if up_is_zero(b) {
        return out;
    }
    let b: UPoly = b[..=db].to_vec();
    let a: UPoly = a[..=da].to_vec();
    let (mut big_a, mut big_b, mut s);
    if da > db {
        out[da - 1] = b.clone();
        let delta = da - db;
        if delta > 1 {
            out[db] = up_scale(&b, &b[db].pow(delta - 1));
        }
        if db == 0 {
            return out;
        }
        s = b[db].pow(delta);
        big_b = up_pseudo_divide(&a, &up_neg(&b)).1;
        big_a = b;
    } else {
        s = Poly::one();
        big_b = up_pseudo_divide(&a, &up_neg(&b)).1;
        big_a = b;
    }
    loop {
        let d = up_deg(&big_a);
        if up_is_zero(&big_b) {
            return out;
        }
        let e = up_deg(&big_b);
        out[d - 1] = big_b.clone();
        let delta = d - e;
        let c = if delta > 1 {
            let lcb = &big_b[e];
            let num = up_scale(&big_b, &lcb.pow(delta - 1));
            let c = up_div_scalar(&num, &s.pow(delta - 1));
            out[e] = c.clone();
            c
        } else {
            big_b.clone()
        };
        if e == 0 {
            return out;
        }
        let r = up_pseudo_divide(&big_a, &up_neg(&big_b)).1;
        let den = &s.pow(delta) * &big_a[d];
        big_b = up_div_scalar(&r, &den);
        s = c[up_deg(&c)].clone();
        big_a = c;
    }
}

/// Subresultant chain `[S_{d-1}, ..., S_0]` of `p` and `q` in `y_v`.
pub fn subresultant_chain(p: &Poly, q: &Poly, v: usize) -> Result<Vec<Poly>> {
    let (a, b) = (p.coeffs_in(v), q.coeffs_in(v));
    let (da, db) = (up_deg(&a), up_deg(&b));
    if da == 0 || db > da {
        return Err(Error::Degree(format!(
            "need deg(p) >= deg(q) and deg(p) >= 1 in y{v}, got {da} and {db}"
        )));
    }
    let chain = subresultants_up(&a, &b);
    Ok(chain.into_iter().rev().map(|u| Poly::from_coeffs_in(v, u)).collect())
}

/// Sylvester resultant of `p` and `q` with respect to `y_v`.
pub fn resultant(p: &Poly, q: &Poly, v: usize) -> Result<Poly> {
    if !p.has_var(v) && !q.has_var(v) {
        return Err(Error::VariableAbsent(v));
    }
    if q.is_zero() || p.is_zero() {
        return Ok(Poly::zero());
    }
    let (a, b) = (p.coeffs_in(v), q.coeffs_in(v));
    let (da, db) = (up_deg(&a), up_deg(&b));
    if db == 0 {
        return Ok(q.pow(da));
    }
    if da == 0 {
        return Ok(p.pow(db));
    }
    if da >= db {
        Ok(Poly::from_coeffs_in(v, subresultants_up(&a, &b).swap_remove(0)))
    } else {
        let r = Poly::from_coeffs_in(v, subresultants_up(&b, &a).swap_remove(0));
        Ok(if (da * db) % 2 == 1 { -r } else { r })
    }
}

/// Iterated resultant of `h` with respect to the triangular set `chain`
/// (polynomials with pairwise distinct main variables, any order).
pub fn iterated_resultant(h: &Poly, chain: &[Poly]) -> Poly {
    let mut h = h.clone();
    loop {
        if h.is_const() {
            return h;
        }
        let v = h
            .vars()
            .into_iter()
            .rev()
            .find(|&v| chain.iter().any(|t| t.level() == v));
        let Some(v) = v else {
            return h;
        };
        let t = chain.iter().find(|t| t.level() == v).unwrap();
        h = resultant(&h, t, v).expect("variable present");
        if h.is_zero() {
            return h;
        }
    }
}
