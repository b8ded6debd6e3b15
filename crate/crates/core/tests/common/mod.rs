//! Shared test helpers and small univariate oracles over ℚ.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tricad::chains::RegularSystem;
use tricad::poly::{parse_poly, Poly, Rational, VarOrder};
use tricad::real::{isolate_zeros, AlgebraicPoint};

pub fn order(names: &[&str]) -> VarOrder {
    VarOrder::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
}

pub fn p(text: &str, o: &VarOrder) -> Poly {
    parse_poly(text, o).unwrap()
}

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Every point of `{-k..k}^dim`.
pub fn grid(dim: usize, k: i64) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|pt: Vec<Rational>| {
                (-k..=k).map(move |x| {
                    let mut q = pt.clone();
                    q.push(r(x));
                    q
                })
            })
            .collect();
    }
    out
}

pub fn holds(eqs: &[Poly], ineqs: &[Poly], pt: &[Rational]) -> bool {
    eqs.iter().all(|e| e.eval(pt).is_zero()) && ineqs.iter().all(|q| !q.eval(pt).is_zero())
}

pub fn count_containing(sets: &[RegularSystem], pt: &[Rational]) -> usize {
    sets.iter().filter(|s| s.contains(pt)).count()
}

/// Euclid over ℚ on dense coefficient vectors (lowest first); monic result.
pub fn ugcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    let trim = |v: &mut Vec<Rational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        while a.len() >= b.len() {
            let k = a.len() - b.len();
            let f = a.last().unwrap() / b.last().unwrap();
            for (i, c) in b.iter().enumerate() {
                a[i + k] -= &f * c;
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let lc = a.last().cloned().unwrap_or_else(Rational::one);
    a.iter().map(|c| c / &lc).collect()
}

pub fn ucoeffs(f: &Poly, v: usize) -> Vec<Rational> {
    f.coeffs_in(v).iter().map(|c| c.as_const().unwrap().clone()).collect()
}

pub fn utrim(mut a: Vec<Rational>) -> Vec<Rational> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Degree of a dense vector; `None` for zero.
pub fn udeg(a: &[Rational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn umonic(a: Vec<Rational>) -> Vec<Rational> {
    let a = utrim(a);
    match a.last().cloned() {
        Some(lc) => a.iter().map(|c| c / &lc).collect(),
        None => a,
    }
}

pub fn uderiv(a: &[Rational]) -> Vec<Rational> {
    a.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer((i as i64).into())).collect()
}

pub fn umul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    utrim(out)
}

/// Schoolbook quotient `a / b`; the remainder is discarded.
pub fn udiv(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, b) = (utrim(a.to_vec()), utrim(b.to_vec()));
    if a.len() < b.len() {
        return Vec::new();
    }
    let mut q = vec![Rational::zero(); a.len() - b.len() + 1];
    while a.len() >= b.len() && !a.is_empty() {
        let k = a.len() - b.len();
        let f = a.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            a[i + k] -= &f * c;
        }
        q[k] = f;
        a.pop();
        a = utrim(a);
    }
    utrim(q)
}

/// Monic squarefree part.
pub fn usqf(a: &[Rational]) -> Vec<Rational> {
    let g = ugcd(a.to_vec(), uderiv(a));
    umonic(udiv(a, &g))
}

/// `f(alpha, y)` as a dense vector in the next variable.
pub fn fiber(f: &Poly, alpha: &[Rational]) -> Vec<Rational> {
    let s = f.eval_prefix(alpha);
    if let Some(c) = s.as_const() {
        return utrim(vec![c.clone()]);
    }
    utrim(ucoeffs(&s, alpha.len() + 1))
}

/// Determinant by Gaussian elimination over ℚ.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if r != c {
            m.swap(r, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d *= &piv;
        for r in c + 1..n {
            let f = &m[r][c] / &piv;
            if f.is_zero() {
                continue;
            }
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    d
}

/// Sylvester-style matrix whose determinant with the column of `x^k` gives the
/// coefficient of `x^k` in the j-th subresultant.
pub fn subres_coeff(a: &[Rational], b: &[Rational], j: usize, k: usize) -> Rational {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n - 2 * j;
    let width = m + n - j;
    let mut rows = Vec::new();
    for i in (0..n - j).rev() {
        let mut r = vec![Rational::zero(); width];
        for (e, c) in a.iter().enumerate() {
            r[e + i] = c.clone();
        }
        rows.push(r);
    }
    for i in (0..m - j).rev() {
        let mut r = vec![Rational::zero(); width];
        for (e, c) in b.iter().enumerate() {
            r[e + i] = c.clone();
        }
        rows.push(r);
    }
    // columns by decreasing power: x^{width-1} .. x^0; keep the first size-1 and x^k
    let mut cols: Vec<usize> = (0..size - 1).map(|t| width - 1 - t).collect();
    cols.push(k);
    let mat = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    det(mat)
}

pub fn sylvester_res(a: &[Rational], b: &[Rational]) -> Rational {
    subres_coeff(a, b, 0, 0)
}

pub fn random_bivariate(rng: &mut ChaCha8Rng, dx: usize) -> Poly {
    let mut coeffs = Vec::new();
    for i in 0..=dx {
        let mut c = Vec::new();
        for _ in 0..3 {
            c.push(Poly::int(rng.gen_range(-4..=4)));
        }
        let mut cy = Poly::from_coeffs(1, c);
        if i == dx && cy.is_zero() {
            cy = Poly::one();
        }
        coeffs.push(cy);
    }
    Poly::from_coeffs(2, coeffs)
}

pub fn urem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, b) = (utrim(a.to_vec()), utrim(b.to_vec()));
    while a.len() >= b.len() && !a.is_empty() {
        let k = a.len() - b.len();
        let f = a.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            a[i + k] -= &f * c;
        }
        a.pop();
        a = utrim(a);
    }
    a
}

pub fn ueval(a: &[Rational], x: &Rational) -> Rational {
    a.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn sturm(a: &[Rational]) -> Vec<Vec<Rational>> {
    let mut seq = vec![utrim(a.to_vec()), uderiv(a)];
    loop {
        let n = seq.len();
        let r: Vec<Rational> = urem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            return seq;
        }
        seq.push(r);
    }
}

pub fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let nz: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn sgn(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Distinct real roots in `(lo, hi]`; `None` stands for an infinite end.
pub fn sturm_count(a: &[Rational], lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
    let seq = sturm(a);
    let at = |x: Option<&Rational>, neg: bool| {
        variations(seq.iter().map(|q| match x {
            Some(x) => sgn(&ueval(q, x)),
            None => {
                let s = sgn(q.last().unwrap());
                if neg && (q.len() - 1) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }))
    };
    at(lo, true) - at(hi, false)
}

pub fn upoly(a: &[Rational]) -> Poly {
    let terms: Vec<(Vec<u32>, Rational)> = a.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())).collect();
    Poly::from_terms(&terms)
}

/// Isolation of a squarefree univariate polynomial checked against Sturm counts.
pub fn check_isolation(a: &[Rational]) -> Result<(), String> {
    let f = upoly(a);
    let (ivs, nu) = isolate_zeros(&mut AlgebraicPoint::origin(), &[f]).map_err(|e| e.to_string())?;
    if ivs.len() != sturm_count(a, None, None) || nu.iter().any(|&i| i != 0) {
        return Err(format!("root count of {a:?}"));
    }
    if let Some(w) = ivs.windows(2).find(|w| w[0].hi >= w[1].lo) {
        return Err(format!("{:?} overlaps {:?}", w[0], w[1]));
    }
    for iv in &ivs {
        let ok = if iv.is_point() {
            ueval(a, &iv.lo).is_zero()
        } else {
            sturm_count(a, Some(&iv.lo), Some(&iv.hi)) == 1 && sgn(&ueval(a, &iv.lo)) * sgn(&ueval(a, &iv.hi)) < 0
        };
        if !ok {
            return Err(format!("{iv:?} does not isolate a root of {a:?}"));
        }
    }
    Ok(())
}
