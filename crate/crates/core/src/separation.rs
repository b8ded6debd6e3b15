//! Zero separation: splitting the parameter space `ℂ^{n-1}` so that above
//! each cell the roots in `y_n` of a regular system are cut out by
//! polynomials with nonvanishing initials that stay squarefree and coprime.

use crate::chains::tower::{self, Tower};
use crate::chains::{rank_compare, smpd_tagged, ConstructibleSet, RegularChain, RegularSystem};
use crate::error::{Error, Result};
use crate::poly::{resultant, Poly};
use std::cmp::Ordering;

/// A cell of the parameter space with the level-`n` polynomials separating above it.
#[derive(Clone, Debug)]
pub struct SeparationPair {
    pub cell: ConstructibleSet,
    pub polys: Vec<Poly>,
    /// `sources[i]` is the index of the input system `polys[i]` comes from.
    pub sources: Vec<usize>,
}

/// A family of pairs with pairwise disjoint cells.
#[derive(Clone, Debug, Default)]
pub struct SeparationFamily {
    pub pairs: Vec<SeparationPair>,
}

/// Result of splitting a system whose chain has a polynomial in `y_n`.
#[derive(Clone, Debug)]
pub struct Case3 {
    /// `[T_u, r]` in `ℂ^{n-1}`.
    pub rs_u: RegularSystem,
    /// The chain polynomial with main variable `y_n`.
    pub tn: Poly,
    /// Systems covering the rest of the zero set, each of lower rank.
    pub residual: Vec<RegularSystem>,
}

/// `res(sep(p), p)` in `y_n`; nonzero at a parameter value exactly when the
/// specialization of `p` is squarefree with a nonvanishing initial.
pub fn separant_resultant(p: &Poly, n: usize) -> Result<Poly> {
    if p.level() != n {
        return Err(Error::Precondition(format!("polynomial must have main variable y{n}")));
    }
    resultant(&p.sep()?, p, n)
}

fn lower_dim(rs: &RegularSystem) -> Result<usize> {
    match rs.dim() {
        0 | 1 => Err(Error::Precondition("projection needs n >= 2".into())),
        n => Ok(n - 1),
    }
}

/// Projection of a system in which `y_n` does not occur.
pub fn project_case1(rs: &RegularSystem) -> Result<ConstructibleSet> {
    let m = lower_dim(rs)?;
    if rs.chain().base().max_var() > m || rs.ineqs().iter().any(|f| f.level() > m) {
        return Err(Error::Precondition(format!("y{} occurs in the system", m + 1)));
    }
    if let Some(tw) = rs.as_tower() {
        return Ok(ConstructibleSet::from_towers(m, &[tw.prefix(m)]));
    }
    Ok(ConstructibleSet::from_system(RegularSystem::new(rs.chain().clone(), rs.ineqs().to_vec(), m)?))
}

/// Projection of a system with `y_n` only in the inequation:
/// `W_u(T) \ V_u(coeff(h))`.
pub fn project_case2(rs: &RegularSystem) -> Result<ConstructibleSet> {
    let m = lower_dim(rs)?;
    let n = m + 1;
    if rs.chain().base().max_var() > m || rs.h().level() != n {
        return Err(Error::Precondition(format!("need y{n} in h and not in T")));
    }
    let base = rs.chain().base();
    let quasi = tower::decompose(m, &base.polys(), &base.inits());
    let coeffs = rs.h().coeffs().to_vec();
    let common = tower::decompose(m, &coeffs, &[]);
    Ok(ConstructibleSet::from_towers(m, &tower::difference(&quasi, &common)))
}

/// Projection `π_u(Z(rs))` for a system of the first two kinds.
pub fn project(rs: &RegularSystem) -> Result<ConstructibleSet> {
    if rs.h().level() == rs.dim() {
        project_case2(rs)
    } else {
        project_case1(rs)
    }
}

/// Splits a squarefree system with `y_n` algebraic into `V(t_n) ∩ Z(rs_u)` and
/// residual systems of lower rank.
pub fn split_case3(rs: &RegularSystem) -> Result<Case3> {
    let n = rs.dim();
    let m = lower_dim(rs)?;
    if !rs.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let tn = rs
        .chain()
        .base()
        .get(n)
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("y{n} is not algebraic")))?;
    if let Some(tw) = rs.as_tower() {
        return Ok(Case3 { rs_u: RegularSystem::from_tower(&tw.prefix(m)), tn, residual: Vec::new() });
    }
    let mut factors = Vec::new();
    for f in rs.ineqs().iter().chain([&tn.sep()?]) {
        let r = resultant(f, &tn, n)?.normalize();
        if !r.is_const() && !factors.contains(&r) {
            factors.push(r);
        }
    }
    let t_u = RegularChain::new(rs.chain().base().lower(n))?;
    let rs_u = RegularSystem::new(t_u, factors.clone(), m)
        .map_err(|_| Error::Internal("separant resultant is not regular".into()))?;
    let mut rest: Vec<Tower> = rs.towers().to_vec();
    let mut hits = Vec::new();
    for f in &factors {
        let (z, nz) = tower::split_all(&rest, f);
        hits.extend(z);
        rest = nz;
    }
    let mut residual = Vec::new();
    for tw in &hits {
        let s = RegularSystem::from_tower(tw);
        if rank_compare(&s, rs) != Ordering::Less || !s.chain().base().is_algebraic(n) {
            return Err(Error::Internal(format!("rank descent violated: {s:?} from {rs:?}")));
        }
        residual.push(s);
    }
    Ok(Case3 { rs_u, tn, residual })
}

/// Separates the zero set of one squarefree system with `y_n` algebraic.
pub fn separate_zeros(rs: &RegularSystem) -> Result<SeparationFamily> {
    let mut work = vec![rs.clone()];
    let mut found: Vec<(ConstructibleSet, Poly)> = Vec::new();
    while !work.is_empty() {
        let i = (0..work.len())
            .min_by(|&a, &b| rank_compare(&work[a], &work[b]))
            .expect("nonempty");
        let cur = work.swap_remove(i);
        let c3 = split_case3(&cur)?;
        for s in &c3.residual {
            if rank_compare(s, &cur) != Ordering::Less {
                return Err(Error::Internal("worklist rank did not decrease".into()));
            }
        }
        found.push((ConstructibleSet::from_system(c3.rs_u), c3.tn));
        work.extend(c3.residual);
    }
    let cells: Vec<ConstructibleSet> = found.iter().map(|(c, _)| c.clone()).collect();
    let mut pairs = Vec::new();
    for (cell, tags) in smpd_tagged(&cells)? {
        let mut polys: Vec<Poly> = Vec::new();
        for &t in &tags {
            if !polys.contains(&found[t].1) {
                polys.push(found[t].1.clone());
            }
        }
        polys.sort();
        let sources = vec![0; polys.len()];
        pairs.push(SeparationPair { cell, polys, sources });
    }
    Ok(SeparationFamily { pairs })
}

/// Separates the union of systems with pairwise disjoint zero sets.
pub fn separate_zeros_family(systems: &[RegularSystem]) -> Result<SeparationFamily> {
    let mut cells = Vec::new();
    let mut attached: Vec<(Vec<Poly>, usize)> = Vec::new();
    for (i, rs) in systems.iter().enumerate() {
        for pair in separate_zeros(rs)?.pairs {
            cells.push(pair.cell);
            attached.push((pair.polys, i));
        }
    }
    let mut pairs = Vec::new();
    for (cell, tags) in smpd_tagged(&cells)? {
        let mut tagged: Vec<(Poly, usize)> = Vec::new();
        for &t in &tags {
            let (ps, src) = &attached[t];
            for p in ps {
                if !tagged.iter().any(|(q, _)| q == p) {
                    tagged.push((p.clone(), *src));
                }
            }
        }
        tagged.sort();
        let (polys, sources) = tagged.into_iter().unzip();
        pairs.push(SeparationPair { cell, polys, sources });
    }
    Ok(SeparationFamily { pairs })
}
