//! Multivariate gcd, squarefree parts and gcd-free bases.

use super::division::{div_exact, up_deg, up_div_scalar, up_is_zero, up_neg, up_pseudo_divide, UPoly};
use super::Poly;
use crate::error::{Error, Result};

/// Gcd of the coefficients of `p` with respect to `y_v`.
pub fn content_in(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v) {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `p` divided by its content in `y_v`, normalized.
pub fn primitive_part_in(p: &Poly, v: usize) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let c = content_in(p, v);
    div_exact(p, &c).expect("content divides").normalize()
}

/// Normalized greatest common divisor over ℚ.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    if a.is_const() || b.is_const() {
        return Poly::one();
    }
    let (la, lb) = (a.level(), b.level());
    if la < lb {
        return gcd(a, &content_in(b, lb));
    }
    if lb < la {
        return gcd(&content_in(a, la), b);
    }
    let v = la;
    let (ca, cb) = (content_in(a, v), content_in(b, v));
    let pa = div_exact(a, &ca).expect("content divides");
    let pb = div_exact(b, &cb).expect("content divides");
    let g = gcd(&ca, &cb);
    let h = primitive_gcd(&pa, &pb, v);
    (&g * &h).normalize()
}

/// Gcd of two polynomials primitive in their common main variable `v`.
fn primitive_gcd(a: &Poly, b: &Poly, v: usize) -> Poly {
    let (mut x, mut y) = (a.coeffs().to_vec(), b.coeffs().to_vec());
    if up_deg(&x) < up_deg(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    let last = last_nonzero_remainder(&x, &y);
    if up_deg(&last) == 0 {
        return Poly::one();
    }
    primitive_part_in(&Poly::from_coeffs(v, last), v)
}

/// Last nonzero entry of the subresultant remainder sequence of `a`, `b`.
pub(crate) fn last_nonzero_remainder(a: &[Poly], b: &[Poly]) -> UPoly {
    if up_is_zero(b) {
        return a.to_vec();
    }
    let da = up_deg(a);
    let db = up_deg(b);
    if db == 0 {
        return b[..1].to_vec();
    }
    let mut big_a: UPoly = b[..=db].to_vec();
    let mut s = b[db].pow(da - db);
    let mut big_b = up_pseudo_divide(&a[..=da], &up_neg(&big_a)).1;
    loop {
        if up_is_zero(&big_b) {
            return big_a;
        }
        let d = up_deg(&big_a);
        let e = up_deg(&big_b);
        let delta = d - e;
        let c = if delta > 1 {
            let lcb = &big_b[e];
            let num: UPoly = big_b.iter().map(|x| x * &lcb.pow(delta - 1)).collect();
            up_div_scalar(&num, &s.pow(delta - 1))
        } else {
            big_b.clone()
        };
        if e == 0 {
            return c;
        }
        let r = up_pseudo_divide(&big_a, &up_neg(&big_b)).1;
        let den = &s.pow(delta) * &big_a[d];
        big_b = up_div_scalar(&r, &den);
        s = c[up_deg(&c)].clone();
        big_a = c;
    }
}

/// `p / gcd(p, dp/dv)` made primitive: the squarefree part with respect to `y_v`.
pub fn squarefree_part(p: &Poly, v: usize) -> Result<Poly> {
    if p.deg_in(v) == 0 {
        return Err(Error::Degree(format!("polynomial is constant in y{v}")));
    }
    let g = gcd(p, &p.derivative(v));
    Ok(div_exact(p, &g).expect("gcd divides").normalize())
}

/// Product of the distinct irreducible factors of `p`, up to a constant.
pub fn squarefree_full(p: &Poly) -> Poly {
    if p.is_const() {
        return if p.is_zero() { Poly::zero() } else { Poly::one() };
    }
    let v = p.level();
    let c = content_in(p, v);
    let pp = div_exact(p, &c).expect("content divides");
    let g = gcd(&pp, &pp.derivative(v));
    let s = div_exact(&pp, &g).expect("gcd divides");
    (&squarefree_full(&c) * &s).normalize()
}

/// Pairwise coprime squarefree polynomials whose products recover each
/// nonconstant input up to constants and multiplicities.
pub fn gcd_free_basis(inputs: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    for f in inputs {
        if f.is_const() {
            continue;
        }
        let mut pending = vec![squarefree_full(f)];
        while let Some(a) = pending.pop() {
            if a.is_const() {
                continue;
            }
            let mut absorbed = false;
            for i in 0..basis.len() {
                let g = gcd(&basis[i], &a);
                if g.is_const() {
                    continue;
                }
                let b = basis.swap_remove(i);
                pending.push(div_exact(&b, &g).unwrap().normalize());
                pending.push(div_exact(&a, &g).unwrap().normalize());
                pending.push(g);
                absorbed = true;
                break;
            }
            if !absorbed && !basis.contains(&a) {
                basis.push(a);
            }
        }
    }
    basis.sort();
    basis
}
