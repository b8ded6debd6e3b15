//! The real phase: sample points in regular-chain representation, exact sign
//! determination, real root isolation, stacks and the CAD of `ℝⁿ`.

use crate::chains::RegularChain;
use crate::cylindrical::{cylindrical_decompose, CellKind, CylindricalTree};
use crate::error::{Error, Result};
use crate::poly::{eval_interval, prem, subresultant_chain, Interval, Poly, Rational};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Refinement rounds before giving up on a sign; far beyond any legitimate need.
const MAX_ROUNDS: usize = 4000;

fn rat_sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A real algebraic point `(T, L)`: `T` has one polynomial per coordinate and
/// `L` is a box isolating one real zero of `T`.
///
/// Coordinate `k` is either exact (`L_k` a point) or an open interval with
/// rational endpoints that are not zeros of `t_k(α_{<k}, y_k)`, containing
/// exactly one zero of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicPoint {
    chain: Vec<Poly>,
    cube: Vec<Interval>,
    lo_signs: Vec<Option<i8>>,
}

impl AlgebraicPoint {
    /// The point of `ℝ⁰`.
    pub fn origin() -> AlgebraicPoint {
        AlgebraicPoint { chain: Vec::new(), cube: Vec::new(), lo_signs: Vec::new() }
    }

    /// A rational point, represented by the chain `y_i - x_i`.
    pub fn rational(coords: &[Rational]) -> AlgebraicPoint {
        coords.iter().fold(AlgebraicPoint::origin(), |p, x| p.extend_rational(x.clone()))
    }

    pub fn dim(&self) -> usize {
        self.chain.len()
    }

    pub fn chain(&self) -> &[Poly] {
        &self.chain
    }

    pub fn cube(&self) -> &[Interval] {
        &self.cube
    }

    /// The chain as a regular chain.
    pub fn regular_chain(&self) -> RegularChain {
        RegularChain::trusted(self.chain.clone())
    }

    /// Exact coordinates, when every coordinate is rational.
    pub fn as_rational(&self) -> Option<Vec<Rational>> {
        self.cube.iter().map(|iv| iv.is_point().then(|| iv.lo.clone())).collect()
    }

    /// The point extended by a rational last coordinate.
    pub fn extend_rational(&self, x: Rational) -> AlgebraicPoint {
        let k = self.dim() + 1;
        let t = &Poly::var(k) - &Poly::constant(x.clone());
        self.extend_unchecked(t, Interval::point(x), None)
    }

    fn extend_unchecked(&self, t: Poly, iv: Interval, lo_sign: Option<i8>) -> AlgebraicPoint {
        let mut p = self.clone();
        p.chain.push(t);
        p.cube.push(iv);
        p.lo_signs.push(lo_sign);
        p
    }

    /// The first `k` coordinates.
    pub fn prefix(&self, k: usize) -> AlgebraicPoint {
        AlgebraicPoint {
            chain: self.chain[..k].to_vec(),
            cube: self.cube[..k].to_vec(),
            lo_signs: self.lo_signs[..k].to_vec(),
        }
    }

    /// Exact sign of `f` at the point.
    pub fn sign_of(&mut self, f: &Poly) -> Result<i8> {
        if f.level() > self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: f.level() });
        }
        self.sign(f)
    }

    fn sign(&mut self, f: &Poly) -> Result<i8> {
        let k = f.level();
        if k == 0 {
            return Ok(rat_sign(f.as_const().expect("constant")));
        }
        if self.cube[k - 1].is_point() {
            let x = self.cube[k - 1].lo.clone();
            return self.sign(&f.eval_var(k, &x));
        }
        for round in 0..MAX_ROUNDS {
            if let Some(s) = eval_interval(f, &self.cube[..k]).sign() {
                return Ok(s);
            }
            if round == 2 && self.vanishes(f, k)? {
                return Ok(0);
            }
            self.refine_upto(k)?;
        }
        Err(Error::Internal("sign refinement did not terminate".into()))
    }

    /// Whether `f` (of level `k`) vanishes at the point, decided through the
    /// gcd of `f` and `t_k` above `α_{<k}`.
    fn vanishes(&mut self, f: &Poly, k: usize) -> Result<bool> {
        let t = self.chain[k - 1].clone();
        let r = prem(f, &t, k);
        if r.is_zero() {
            return Ok(true);
        }
        if r.level() < k {
            return Ok(self.sign(&r)? == 0);
        }
        let d = t.mdeg();
        let chain = subresultant_chain(&t, &r, k)?;
        let mut gcd = None;
        for j in 0..=r.deg_in(k) {
            let s = &chain[d - 1 - j];
            let psc = s.coeffs_in(k).get(j).cloned().unwrap_or_else(Poly::zero);
            if self.sign(&psc)? != 0 {
                gcd = Some((j, s.clone()));
                break;
            }
        }
        let Some((j, g)) = gcd else {
            return Ok(true);
        };
        if j == 0 {
            return Ok(false);
        }
        let (lo, hi) = (self.cube[k - 1].lo.clone(), self.cube[k - 1].hi.clone());
        let a = self.sign(&g.eval_var(k, &lo))?;
        let b = self.sign(&g.eval_var(k, &hi))?;
        Ok(a * b < 0)
    }

    fn lo_sign(&mut self, k: usize) -> Result<i8> {
        if let Some(s) = self.lo_signs[k - 1] {
            return Ok(s);
        }
        let lo = self.cube[k - 1].lo.clone();
        let t = self.chain[k - 1].eval_var(k, &lo);
        let s = self.sign(&t)?;
        self.lo_signs[k - 1] = Some(s);
        Ok(s)
    }

    /// Halves the isolating interval of coordinate `k` (1-based).
    pub fn refine(&mut self, k: usize) -> Result<()> {
        if self.cube[k - 1].is_point() {
            return Ok(());
        }
        let mid = self.cube[k - 1].mid();
        let s = self.sign(&self.chain[k - 1].eval_var(k, &mid))?;
        if s == 0 {
            self.cube[k - 1] = Interval::point(mid);
            self.lo_signs[k - 1] = None;
        } else if s == self.lo_sign(k)? {
            self.cube[k - 1].lo = mid;
        } else {
            self.cube[k - 1].hi = mid;
        }
        Ok(())
    }

    fn refine_upto(&mut self, k: usize) -> Result<()> {
        for i in 1..=k {
            self.refine(i)?;
        }
        Ok(())
    }

    /// Refines until every coordinate interval is at most `width` wide.
    pub fn refine_to(&mut self, width: &Rational) -> Result<()> {
        for k in 1..=self.dim() {
            while &self.cube[k - 1].width() > width {
                self.refine(k)?;
            }
        }
        Ok(())
    }

    /// JSON: `{chain: [text], cube: [[lo, hi]]}`.
    pub fn to_json(&self, names: &[String]) -> Value {
        let chain: Vec<String> = self.chain.iter().map(|p| p.to_text(names)).collect();
        let cube: Vec<[String; 2]> = self.cube.iter().map(|iv| [iv.lo.to_string(), iv.hi.to_string()]).collect();
        json!({ "chain": chain, "cube": cube })
    }
}

/// An isolated root of one polynomial above a point.
#[derive(Clone, Debug)]
struct RootBox {
    iv: Interval,
    owner: usize,
    lo_sign: i8,
}

fn binomials(n: usize) -> Vec<Vec<Rational>> {
    let mut rows = vec![vec![Rational::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![Rational::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// Sign variations of `(1+x)^d p((a + b x) / (1 + x))` at the point; bounds
/// the number of roots of `p(α, y)` in `(a, b)`, exactly when it is 0 or 1.
fn descartes(alpha: &mut AlgebraicPoint, p: &Poly, a: &Rational, b: &Rational) -> Result<usize> {
    let n = p.level();
    let c = p.coeffs_in(n);
    let d = c.len() - 1;
    let binom = binomials(d);
    let mut q = vec![Poly::zero(); d + 1];
    for (j, cj) in c.iter().enumerate() {
        if cj.is_zero() {
            continue;
        }
        // (a + b x)^j (1 + x)^(d - j)
        let left: Vec<Rational> = (0..=j).map(|i| &binom[j][i] * a.pow((j - i) as i32) * b.pow(i as i32)).collect();
        for (i, l) in left.iter().enumerate() {
            for (m, r) in binom[d - j].iter().enumerate() {
                q[i + m] = &q[i + m] + &cj.scale(&(l * r));
            }
        }
    }
    let mut last = 0;
    let mut changes = 0;
    for qk in &q {
        let s = alpha.sign(qk)?;
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    Ok(changes)
}

/// Strict bound on the absolute values of the roots of `p(α, y)`.
fn root_bound(alpha: &mut AlgebraicPoint, p: &Poly) -> Result<Rational> {
    let n = p.level();
    let lc = p.init().clone();
    if alpha.sign(&lc)? == 0 {
        return Err(Error::Precondition("initial vanishes at the point".into()));
    }
    let k = lc.level();
    let mut lc_iv = eval_interval(&lc, &alpha.cube);
    let mut rounds = 0;
    while lc_iv.contains_zero() {
        alpha.refine_upto(k)?;
        lc_iv = eval_interval(&lc, &alpha.cube);
        rounds += 1;
        if rounds > MAX_ROUNDS {
            return Err(Error::Internal("cannot bound the leading coefficient".into()));
        }
    }
    let low = lc_iv.lo.abs().min(lc_iv.hi.abs());
    let mut top = Rational::zero();
    for c in p.coeffs_in(n).iter().rev().skip(1) {
        let iv = eval_interval(c, &alpha.cube);
        top = top.max(iv.lo.abs().max(iv.hi.abs()));
    }
    Ok((top / low).ceil() + Rational::one())
}

fn sign_at_y(alpha: &mut AlgebraicPoint, p: &Poly, y: &Rational) -> Result<i8> {
    alpha.sign(&p.eval_var(p.level(), y))
}

fn isolate_one(alpha: &mut AlgebraicPoint, p: &Poly, owner: usize) -> Result<Vec<RootBox>> {
    let bound = root_bound(alpha, p)?;
    let mut work = vec![(-bound.clone(), bound)];
    let mut out = Vec::new();
    while let Some((a, b)) = work.pop() {
        match descartes(alpha, p, &a, &b)? {
            0 => {}
            1 => out.push(shrink_off_roots(alpha, p, a, b, owner)?),
            _ => {
                let m = (&a + &b) / int(2);
                if sign_at_y(alpha, p, &m)? == 0 {
                    out.push(RootBox { iv: Interval::point(m.clone()), owner, lo_sign: 0 });
                }
                work.push((m.clone(), b));
                work.push((a, m));
            }
        }
        if out.len() > p.mdeg() {
            return Err(Error::Internal("more roots than the degree".into()));
        }
    }
    Ok(out)
}

/// An isolating box for the single root in `(a, b)` whose endpoints are not
/// roots; an endpoint root is simple, so the derivative gives the sign beside it.
fn shrink_off_roots(alpha: &mut AlgebraicPoint, p: &Poly, mut a: Rational, mut b: Rational, owner: usize) -> Result<RootBox> {
    let n = p.level();
    let dp = p.derivative(n);
    if sign_at_y(alpha, p, &a)? == 0 {
        let right = sign_at_y(alpha, &dp, &a)?;
        loop {
            let m = (&a + &b) / int(2);
            let s = sign_at_y(alpha, p, &m)?;
            if s == 0 {
                return Ok(RootBox { iv: Interval::point(m), owner, lo_sign: 0 });
            }
            if s == right {
                a = m;
                break;
            }
            b = m;
        }
    }
    if sign_at_y(alpha, p, &b)? == 0 {
        let left = -sign_at_y(alpha, &dp, &b)?;
        loop {
            let m = (&a + &b) / int(2);
            let s = sign_at_y(alpha, p, &m)?;
            if s == 0 {
                return Ok(RootBox { iv: Interval::point(m), owner, lo_sign: 0 });
            }
            if s == left {
                b = m;
                break;
            }
            a = m;
        }
    }
    let lo_sign = sign_at_y(alpha, p, &a)?;
    Ok(RootBox { iv: Interval::new(a, b), owner, lo_sign })
}

fn refine_box(alpha: &mut AlgebraicPoint, p: &Poly, rb: &mut RootBox) -> Result<()> {
    if rb.iv.is_point() {
        return Ok(());
    }
    let m = rb.iv.mid();
    let s = sign_at_y(alpha, p, &m)?;
    if s == 0 {
        rb.iv = Interval::point(m);
    } else if s == rb.lo_sign {
        rb.iv.lo = m;
    } else {
        rb.iv.hi = m;
    }
    Ok(())
}

/// Isolates the real roots of `∏ f_i(α, y_n)`.
///
/// Returns sorted, pairwise disjoint intervals, each containing exactly one
/// root, and for each the index of the polynomial it is a root of. Requires
/// nonvanishing initials and squarefree, pairwise coprime specializations.
pub fn isolate_zeros(alpha: &mut AlgebraicPoint, f: &[Poly]) -> Result<(Vec<Interval>, Vec<usize>)> {
    let n = alpha.dim() + 1;
    let mut boxes = Vec::new();
    for (i, p) in f.iter().enumerate() {
        if p.level() != n {
            return Err(Error::Precondition(format!("polynomial of level {} above a point of ℝ^{}", p.level(), n - 1)));
        }
        boxes.extend(isolate_one(alpha, p, i)?);
    }
    loop {
        boxes.sort_by(|x, y| x.iv.lo.cmp(&y.iv.lo).then(x.iv.hi.cmp(&y.iv.hi)));
        let clash = (1..boxes.len()).find(|&i| boxes[i].iv.lo <= boxes[i - 1].iv.hi);
        let Some(i) = clash else { break };
        if boxes[i].iv.is_point() && boxes[i - 1].iv.is_point() {
            return Err(Error::Precondition("specializations share a root".into()));
        }
        for j in [i - 1, i] {
            let owner = boxes[j].owner;
            refine_box(alpha, &f[owner], &mut boxes[j])?;
        }
    }
    Ok((boxes.iter().map(|b| b.iv.clone()).collect(), boxes.iter().map(|b| b.owner).collect()))
}

/// Greatest integer strictly below `x`.
fn int_below(x: &Rational) -> Rational {
    let f = x.floor();
    if &f == x {
        f - Rational::one()
    } else {
        f
    }
}

/// Smallest integer strictly above `x`.
fn int_above(x: &Rational) -> Rational {
    let c = x.ceil();
    if &c == x {
        c + Rational::one()
    } else {
        c
    }
}

/// One element of a stack: its sample and, for sections, the owning polynomial.
#[derive(Clone, Debug)]
pub struct StackCell {
    pub sample: AlgebraicPoint,
    pub section_of: Option<usize>,
}

/// The stack over a region with sample `parent`, cut by the real roots of `f`.
pub fn generate_stack(parent: &mut AlgebraicPoint, f: &[Poly]) -> Result<Vec<StackCell>> {
    let (roots, nu) = if f.is_empty() { (Vec::new(), Vec::new()) } else { isolate_zeros(parent, f)? };
    if roots.is_empty() {
        return Ok(vec![StackCell { sample: parent.extend_rational(Rational::zero()), section_of: None }]);
    }
    let n = parent.dim() + 1;
    let m = roots.len();
    let mut out = Vec::with_capacity(2 * m + 1);
    out.push(StackCell { sample: parent.extend_rational(int_below(&roots[0].lo)), section_of: None });
    for i in 0..m {
        let p = &f[nu[i]];
        let iv = roots[i].clone();
        let lo_sign = if iv.is_point() { None } else { Some(sign_at_y(parent, p, &iv.lo)?) };
        out.push(StackCell { sample: parent.extend_unchecked(p.clone(), iv, lo_sign), section_of: Some(nu[i]) });
        let s = if i + 1 < m { (&roots[i].hi + &roots[i + 1].lo) / int(2) } else { int_above(&roots[m - 1].hi) };
        out.push(StackCell { sample: parent.extend_rational(s), section_of: None });
    }
    debug_assert!(out.iter().all(|c| c.sample.dim() == n));
    Ok(out)
}

/// A region of the CAD.
#[derive(Clone, Debug)]
pub struct CadCell {
    /// Position in the nested stacks; odd entries are sectors, even entries sections.
    pub index: Vec<usize>,
    pub sample: AlgebraicPoint,
    /// Position of the parent region in the previous level.
    pub parent: Option<usize>,
    /// The complex cell containing this region.
    pub complex: usize,
}

impl CadCell {
    /// Whether the region is open (every index entry odd).
    pub fn is_full_dimensional(&self) -> bool {
        self.index.iter().all(|i| i % 2 == 1)
    }
}

/// A cylindrical algebraic decomposition of `ℝⁿ` with all induced levels.
#[derive(Clone, Debug)]
pub struct Cad {
    tree: CylindricalTree,
    levels: Vec<Vec<CadCell>>,
}

/// Lifts a cylindrical decomposition of `ℂⁿ` to a CAD of `ℝⁿ` whose regions
/// refine the real traces of the complex cells.
pub fn make_semi_algebraic(tree: CylindricalTree) -> Result<Cad> {
    let root = CadCell { index: Vec::new(), sample: AlgebraicPoint::origin(), parent: None, complex: CylindricalTree::ROOT };
    let mut levels = vec![vec![root]];
    for k in 1..=tree.dim() {
        let mut next = Vec::new();
        for (pi, cell) in levels[k - 1].iter_mut().enumerate() {
            let node = tree.node(cell.complex);
            let mut sections = Vec::new();
            let mut rest = None;
            for &c in &node.children {
                match &tree.node(c).kind {
                    CellKind::Section(p) => sections.push((p.clone(), c)),
                    _ => rest = Some(c),
                }
            }
            let rest = rest.ok_or_else(|| Error::Internal("complex cell without a sector child".into()))?;
            let polys: Vec<Poly> = sections.iter().map(|(p, _)| p.clone()).collect();
            for (j, sc) in generate_stack(&mut cell.sample, &polys)?.into_iter().enumerate() {
                let mut index = cell.index.clone();
                index.push(j + 1);
                let complex = sc.section_of.map_or(rest, |i| sections[i].1);
                next.push(CadCell { index, sample: sc.sample, parent: Some(pi), complex });
            }
        }
        levels.push(next);
    }
    levels.remove(0);
    for c in levels.first_mut().into_iter().flatten() {
        c.parent = None;
    }
    Ok(Cad { tree, levels })
}

/// An `F`-invariant CAD of `ℝⁿ`.
pub fn cad(f: &[Poly], n: usize) -> Result<Cad> {
    make_semi_algebraic(cylindrical_decompose(f, n)?)
}

impl Cad {
    pub fn dim(&self) -> usize {
        self.tree.dim()
    }

    pub fn tree(&self) -> &CylindricalTree {
        &self.tree
    }

    /// Regions of `ℝᵏ` (1-based `k`), stack by stack.
    pub fn level(&self, k: usize) -> &[CadCell] {
        &self.levels[k - 1]
    }

    /// Regions of `ℝⁿ`.
    pub fn cells(&self) -> &[CadCell] {
        self.levels.last().map_or(&[], |v| v.as_slice())
    }

    pub fn len(&self) -> usize {
        self.cells().len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells().is_empty()
    }

    /// Regions of level `k` over the region `parent` of level `k - 1`.
    pub fn stack(&self, k: usize, parent: Option<usize>) -> Vec<usize> {
        (0..self.levels[k - 1].len()).filter(|&i| self.levels[k - 1][i].parent == parent).collect()
    }

    /// Signs of `f` at the sample of region `i` of level `n`.
    pub fn signs(&mut self, i: usize, f: &[Poly]) -> Result<Vec<i8>> {
        let n = self.levels.len();
        let sample = &mut self.levels[n - 1][i].sample;
        f.iter().map(|p| sample.sign_of(p)).collect()
    }

    fn section_polys(&self, k: usize, parent: Option<usize>) -> Vec<Poly> {
        let node = match parent {
            Some(pi) => self.levels[k - 2][pi].complex,
            None => CylindricalTree::ROOT,
        };
        self.tree.section_polys(node)
    }

    /// Sorted isolating intervals of the section roots above a rational point
    /// of the parent region.
    fn roots_above(&self, k: usize, parent: Option<usize>, prefix: &[Rational]) -> Result<Vec<(Interval, Poly)>> {
        let polys = self.section_polys(k, parent);
        if polys.is_empty() {
            return Ok(Vec::new());
        }
        let mut alpha = AlgebraicPoint::rational(prefix);
        let (ivs, nu) = isolate_zeros(&mut alpha, &polys)?;
        let stack = self.stack(k, parent).len();
        if 2 * ivs.len() + 1 != stack {
            return Err(Error::Internal(format!("{} roots above a point of a stack of {} regions", ivs.len(), stack)));
        }
        Ok(ivs.into_iter().zip(nu).map(|(iv, i)| (iv, polys[i].clone())).collect())
    }

    /// The region of `ℝⁿ` containing a rational point.
    pub fn locate(&self, pt: &[Rational]) -> Result<usize> {
        if pt.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: pt.len() });
        }
        let mut parent = None;
        for k in 1..=self.dim() {
            let x = &pt[k - 1];
            let mut j = 1;
            for (mut iv, p) in self.roots_above(k, parent, &pt[..k - 1])? {
                let q = p.eval_prefix(&pt[..k - 1]);
                if q.eval_var(k, x).is_zero() && iv.contains(x) {
                    j += 1;
                    break;
                }
                while !iv.is_point() && iv.lo < *x && *x < iv.hi {
                    let m = iv.mid();
                    let s = rat_sign(q.eval_var(k, &m).as_const().unwrap());
                    let lo = rat_sign(q.eval_var(k, &iv.lo).as_const().unwrap());
                    if s == 0 {
                        iv = Interval::point(m);
                    } else if s == lo {
                        iv.lo = m;
                    } else {
                        iv.hi = m;
                    }
                }
                if *x <= iv.lo {
                    break;
                }
                j += 2;
            }
            let stack = self.stack(k, parent);
            parent = Some(stack[j - 1]);
        }
        Ok(parent.expect("positive dimension"))
    }

    /// A rational point inside the open region `i` of level `n`; `pick(lo, hi)`
    /// must return a rational strictly inside the given (possibly unbounded) interval.
    pub fn interior_point(
        &self,
        i: usize,
        pick: &mut dyn FnMut(Option<&Rational>, Option<&Rational>) -> Rational,
    ) -> Result<Vec<Rational>> {
        let n = self.dim();
        let mut chain = vec![i];
        for k in (2..=n).rev() {
            let p = self.levels[k - 1][chain[0]].parent.expect("parent");
            chain.insert(0, p);
        }
        let mut pt = Vec::new();
        for k in 1..=n {
            let cell = &self.levels[k - 1][chain[k - 1]];
            if cell.index[k - 1] % 2 == 0 {
                return Err(Error::Precondition("region is not open".into()));
            }
            let parent = if k == 1 { None } else { Some(chain[k - 2]) };
            let roots = self.roots_above(k, parent, &pt)?;
            let slot = (cell.index[k - 1] - 1) / 2;
            let lo = if slot == 0 { None } else { Some(roots[slot - 1].0.hi.clone()) };
            let hi = roots.get(slot).map(|r| r.0.lo.clone());
            let x = pick(lo.as_ref(), hi.as_ref());
            let bad = lo.as_ref().is_some_and(|l| x <= *l) || hi.as_ref().is_some_and(|h| x >= *h);
            if bad {
                return Err(Error::Precondition("picked point outside the interval".into()));
            }
            pt.push(x);
        }
        Ok(pt)
    }

    /// JSON for region `i` of level `n`: `{index, sample, signs}`.
    pub fn cell_json(&mut self, i: usize, f: &[Poly], names: &[String]) -> Result<Value> {
        let signs = self.signs(i, f)?;
        let cell = &self.cells()[i];
        let signs: serde_json::Map<String, Value> =
            signs.iter().enumerate().map(|(j, s)| (format!("f{}", j + 1), json!(s))).collect();
        Ok(json!({ "index": cell.index, "sample": cell.sample.to_json(names), "signs": signs }))
    }
}
