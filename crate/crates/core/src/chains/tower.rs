//! Pointwise towers: the splitting engine behind all set operations.
//!
//! A tower over `ℂ^k` has one entry per variable. `Eq(t)` at level `v` means
//! `t = 0`, where `t` has main variable `y_v`, an initial that vanishes at no
//! point of the lower tower, and is squarefree in `y_v` at every such point.
//! `Free(fs)` means every `f` in `fs` is nonzero; each `f` has main variable
//! `y_v` and an initial that vanishes nowhere on the lower tower. These
//! invariants make every tower nonempty, so emptiness of a list of towers is
//! decided by the list being empty.

use crate::poly::{div_exact, pquo, prem, primitive_part_in, subresultants_up, Poly, Rational};
use num_traits::Zero;

/// Condition on one coordinate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Level {
    Eq(Poly),
    Free(Vec<Poly>),
}

/// Conjunction of per-level conditions; see the module docs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tower {
    levels: Vec<Level>,
}

enum Gcd {
    One,
    Partial(Poly),
    Full,
}

impl Tower {
    /// All of `ℂ^k`.
    pub fn whole(k: usize) -> Tower {
        Tower { levels: vec![Level::Free(Vec::new()); k] }
    }

    pub fn dim(&self) -> usize {
        self.levels.len()
    }

    /// Condition at level `v` (1-based).
    pub fn level(&self, v: usize) -> &Level {
        &self.levels[v - 1]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Equation polynomials, ascending by level.
    pub fn eqs(&self) -> Vec<Poly> {
        self.levels
            .iter()
            .filter_map(|l| match l {
                Level::Eq(t) => Some(t.clone()),
                Level::Free(_) => None,
            })
            .collect()
    }

    /// Inequation factors, ascending by level.
    pub fn free_factors(&self) -> Vec<Poly> {
        self.levels
            .iter()
            .flat_map(|l| match l {
                Level::Free(fs) => fs.clone(),
                Level::Eq(_) => Vec::new(),
            })
            .collect()
    }

    /// The tower restricted to the first `k` levels (its projection).
    pub fn prefix(&self, k: usize) -> Tower {
        Tower { levels: self.levels[..k].to_vec() }
    }

    /// The tower times `ℂ`: one more unconstrained level.
    pub fn cylinder(&self) -> Tower {
        self.extend(Level::Free(Vec::new()), &[])
    }

    /// Whether level `v` is an equation.
    pub fn is_eq(&self, v: usize) -> bool {
        matches!(self.levels[v - 1], Level::Eq(_))
    }

    fn extend(&self, lvl: Level, upper: &[Level]) -> Tower {
        let mut levels = self.levels.clone();
        levels.push(lvl);
        levels.extend_from_slice(upper);
        Tower { levels }
    }

    /// Exact membership of a rational point.
    pub fn contains(&self, pt: &[Rational]) -> bool {
        self.levels.iter().all(|l| match l {
            Level::Eq(t) => t.eval(pt).is_zero(),
            Level::Free(fs) => fs.iter().all(|f| !f.eval(pt).is_zero()),
        })
    }

    /// Builds a tower from raw levels, trusting the caller for the invariants.
    pub(crate) fn from_levels(levels: Vec<Level>) -> Tower {
        Tower { levels }
    }

    /// Polynomials known to be nonzero everywhere on the tower.
    fn known_nonzero(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        for l in &self.levels {
            match l {
                Level::Eq(t) => {
                    if !t.init().is_const() {
                        out.push(t.init().clone())
                    }
                }
                Level::Free(fs) => out.extend(fs.iter().cloned()),
            }
        }
        out
    }

    /// Pseudo-remainder of `c` by the equations, top level first. Vanishing at
    /// each point of the tower is preserved.
    pub fn reduce(&self, c: &Poly) -> Poly {
        let mut c = c.clone();
        for (i, l) in self.levels.iter().enumerate().rev() {
            if c.is_const() {
                break;
            }
            if let Level::Eq(t) = l {
                let v = i + 1;
                if c.deg_in(v) >= t.mdeg() {
                    c = prem(&c, t, v);
                }
            }
        }
        c.normalize()
    }

    /// Removes factors known to be nonzero on the tower.
    fn strip_known(&self, mut c: Poly) -> Poly {
        if c.is_const() {
            return c;
        }
        let known = self.known_nonzero();
        'outer: loop {
            for k in &known {
                if k.level() <= c.level() {
                    if let Some(q) = div_exact(&c, k) {
                        c = q;
                        if c.is_const() {
                            return c;
                        }
                        continue 'outer;
                    }
                }
            }
            return c;
        }
    }

    /// Canonical form of a new polynomial with main variable `y_v` over this
    /// (lower) tower: reduced, primitive in `y_v`, normalized.
    fn normal(&self, p: &Poly, v: usize) -> Poly {
        let r = self.reduce(p);
        debug_assert_eq!(r.level(), v);
        primitive_part_in(&r, v)
    }
}

/// Splits `tw` into the parts where `c` vanishes and where it does not.
pub fn split(tw: &Tower, c: &Poly) -> (Vec<Tower>, Vec<Tower>) {
    let c = tw.strip_known(tw.reduce(c));
    if c.is_zero() {
        return (vec![tw.clone()], Vec::new());
    }
    if c.is_const() {
        return (Vec::new(), vec![tw.clone()]);
    }
    let v = c.level();
    let lower = tw.prefix(v - 1);
    let upper = &tw.levels[v..];
    match &tw.levels[v - 1] {
        Level::Eq(t) => split_eq(&lower, t, &c, v, upper),
        Level::Free(fs) => split_free(&lower, fs, &c, v, upper),
    }
}

/// `split` applied to every tower of a list.
pub fn split_all(tws: &[Tower], c: &Poly) -> (Vec<Tower>, Vec<Tower>) {
    let (mut z, mut n) = (Vec::new(), Vec::new());
    for tw in tws {
        let (a, b) = split(tw, c);
        z.extend(a);
        n.extend(b);
    }
    (z, n)
}

fn split_eq(lower: &Tower, t: &Poly, c: &Poly, v: usize, upper: &[Level]) -> (Vec<Tower>, Vec<Tower>) {
    let (mut z, mut n) = (Vec::new(), Vec::new());
    for (l, g) in gcd_branches(lower, t, c, v) {
        match g {
            Gcd::One => n.push(l.extend(Level::Eq(t.clone()), upper)),
            Gcd::Full => z.push(l.extend(Level::Eq(t.clone()), upper)),
            Gcd::Partial(s) => {
                let s = l.normal(&s, v);
                let q = l.normal(&pquo(t, &s, v), v);
                z.push(l.extend(Level::Eq(s), upper));
                n.push(l.extend(Level::Eq(q), upper));
            }
        }
    }
    (z, n)
}

fn split_free(lower: &Tower, fs: &[Poly], c: &Poly, v: usize, upper: &[Level]) -> (Vec<Tower>, Vec<Tower>) {
    let (mut z, mut n) = (Vec::new(), Vec::new());
    let coeffs = c.coeffs();
    let mut pending = vec![lower.clone()];
    for i in (0..coeffs.len()).rev() {
        let (zs, ns) = split_all(&pending, &coeffs[i]);
        if i == 0 {
            for l in zs {
                z.push(l.extend(Level::Free(fs.to_vec()), upper));
            }
            for l in ns {
                n.push(l.extend(Level::Free(fs.to_vec()), upper));
            }
            break;
        }
        for l in ns {
            let ct = l.normal(&c.truncate(i), v);
            let mut nfs = fs.to_vec();
            if !nfs.contains(&ct) {
                nfs.push(ct.clone());
                nfs.sort();
            }
            n.push(l.extend(Level::Free(nfs), upper));
            for piece in sqf_classes(&l, &ct, v) {
                let mut pieces = vec![piece];
                for f in fs {
                    pieces = split_all(&pieces, f).1;
                }
                for p in pieces {
                    let mut levels = p.levels;
                    levels.extend_from_slice(upper);
                    z.push(Tower { levels });
                }
            }
        }
        pending = zs;
        if pending.is_empty() {
            break;
        }
    }
    (z, n)
}

/// Pointwise gcd of `t` and `c` in `y_v` over the lower tower, by the
/// principal subresultant coefficients. `t` has an initial nonvanishing on
/// `lower`; `c` has smaller degree in `y_v`.
fn gcd_branches(lower: &Tower, t: &Poly, c: &Poly, v: usize) -> Vec<(Tower, Gcd)> {
    let mut out = Vec::new();
    let e = c.deg_in(v);
    if e == 0 {
        let (z, n) = split(lower, c);
        out.extend(n.into_iter().map(|l| (l, Gcd::One)));
        out.extend(z.into_iter().map(|l| (l, Gcd::Full)));
        return out;
    }
    let chain = subresultants_up(&t.coeffs_in(v), &c.coeffs_in(v));
    let mut pending = vec![lower.clone()];
    for (j, s) in chain.iter().enumerate().take(e + 1) {
        let psc = s.get(j).cloned().unwrap_or_else(Poly::zero);
        let (z, n) = split_all(&pending, &psc);
        for l in n {
            let g = if j == 0 { Gcd::One } else { Gcd::Partial(Poly::from_coeffs_in(v, s.clone())) };
            out.push((l, g));
        }
        pending = z;
        if pending.is_empty() {
            return out;
        }
    }
    out.extend(pending.into_iter().map(|l| (l, Gcd::Full)));
    out
}

/// Towers (of dimension `v`) with `Eq` at level `v` partitioning the roots of
/// `s` over `lower` by multiplicity. `s` has main variable `y_v` and an initial
/// nonvanishing on `lower`.
fn sqf_classes(lower: &Tower, s: &Poly, v: usize) -> Vec<Tower> {
    if s.mdeg() == 1 {
        return vec![lower.extend(Level::Eq(s.clone()), &[])];
    }
    let mut out = Vec::new();
    for (l, g) in gcd_branches(lower, s, &s.derivative(v), v) {
        match g {
            Gcd::One => out.push(l.extend(Level::Eq(s.clone()), &[])),
            Gcd::Partial(g) => {
                let g = l.normal(&g, v);
                let w = l.normal(&pquo(s, &g, v), v);
                let simple = l.extend(Level::Eq(w), &[]);
                out.extend(split(&simple, &g).1);
                out.extend(sqf_classes(&l, &g, v));
            }
            Gcd::Full => unreachable!("derivative cannot vanish identically"),
        }
    }
    out
}

/// Towers partitioning `{eqs = 0, ineqs != 0}` in `ℂ^k`.
pub fn decompose(k: usize, eqs: &[Poly], ineqs: &[Poly]) -> Vec<Tower> {
    let mut eqs: Vec<&Poly> = eqs.iter().filter(|p| !p.is_zero()).collect();
    eqs.sort();
    let mut ineqs: Vec<&Poly> = ineqs.iter().collect();
    ineqs.sort();
    if ineqs.iter().any(|p| p.is_zero()) || eqs.iter().any(|p| p.is_const()) {
        return Vec::new();
    }
    let mut tws = vec![Tower::whole(k)];
    for q in ineqs.iter().filter(|q| eqs.iter().any(|e| e.init() == **q)) {
        tws = split_all(&tws, q).1;
    }
    for e in &eqs {
        tws = split_all(&tws, e).0;
    }
    for q in &ineqs {
        tws = split_all(&tws, q).1;
    }
    tws
}

/// Towers partitioning the points of `a` outside every tower of `b`.
pub fn difference(a: &[Tower], b: &[Tower]) -> Vec<Tower> {
    let mut rest = a.to_vec();
    for tb in b {
        rest = rest.iter().flat_map(|ta| subtract(ta, tb)).collect();
        if rest.is_empty() {
            break;
        }
    }
    rest
}

/// Towers partitioning the points common to `a` and `b`.
pub fn intersection(a: &[Tower], b: &[Tower]) -> Vec<Tower> {
    let mut out = Vec::new();
    for ta in a {
        for tb in b {
            out.extend(meet(ta, tb));
        }
    }
    out
}

fn conditions(tb: &Tower) -> Vec<(bool, Poly)> {
    let mut out = Vec::new();
    for l in &tb.levels {
        match l {
            Level::Eq(t) => out.push((true, t.clone())),
            Level::Free(fs) => out.extend(fs.iter().map(|f| (false, f.clone()))),
        }
    }
    out
}

fn meet(ta: &Tower, tb: &Tower) -> Vec<Tower> {
    let mut rest = vec![ta.clone()];
    for (is_eq, p) in conditions(tb) {
        let (z, n) = split_all(&rest, &p);
        rest = if is_eq { z } else { n };
        if rest.is_empty() {
            break;
        }
    }
    rest
}

fn subtract(ta: &Tower, tb: &Tower) -> Vec<Tower> {
    let mut out = Vec::new();
    let mut rest = vec![ta.clone()];
    for (is_eq, p) in conditions(tb) {
        let (z, n) = split_all(&rest, &p);
        let (keep, fail) = if is_eq { (z, n) } else { (n, z) };
        out.extend(fail);
        rest = keep;
        if rest.is_empty() {
            break;
        }
    }
    out
}

/// Pointwise gcd in `y_v` of `t` and `c` over `lower`, where `t` has an
/// initial nonvanishing on `lower` and `deg c < deg t`. Each branch carries
/// the gcd as a polynomial whose initial is nonzero on the branch.
pub(crate) fn gcd_pointwise(lower: &Tower, t: &Poly, c: &Poly, v: usize) -> Vec<(Tower, Poly)> {
    gcd_branches(lower, t, c, v)
        .into_iter()
        .map(|(l, g)| {
            let g = match g {
                Gcd::One => Poly::one(),
                Gcd::Partial(s) => l.normal(&s, v),
                Gcd::Full => l.normal(t, v),
            };
            (l, g)
        })
        .collect()
}
