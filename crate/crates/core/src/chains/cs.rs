//! Constructible sets and the decomposition operations built on towers.

use super::tower::{self, Tower};
use super::{is_regular, rank_compare, RegularChain, RegularSystem};
use crate::error::{Error, Result};
use crate::poly::{prem, Poly, Rational};
use std::cmp::Ordering;

/// A finite disjoint union of regular-system zero sets in `ℂ^dim`.
#[derive(Clone, Debug)]
pub struct ConstructibleSet {
    dim: usize,
    parts: Vec<RegularSystem>,
}

impl ConstructibleSet {
    pub fn empty(dim: usize) -> ConstructibleSet {
        ConstructibleSet { dim, parts: Vec::new() }
    }

    pub fn whole(dim: usize) -> ConstructibleSet {
        ConstructibleSet::from_system(RegularSystem::whole(dim))
    }

    pub fn from_system(rs: RegularSystem) -> ConstructibleSet {
        ConstructibleSet { dim: rs.dim(), parts: vec![rs] }
    }

    /// The union of pairwise disjoint towers.
    pub fn from_towers(dim: usize, towers: &[Tower]) -> ConstructibleSet {
        ConstructibleSet { dim, parts: towers.iter().map(RegularSystem::from_tower).collect() }
    }

    /// `{eqs = 0, ineqs != 0}`.
    pub fn from_conditions(dim: usize, eqs: &[Poly], ineqs: &[Poly]) -> ConstructibleSet {
        ConstructibleSet::from_towers(dim, &tower::decompose(dim, eqs, ineqs))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parts(&self) -> &[RegularSystem] {
        &self.parts
    }

    /// Tower partition of the set.
    pub fn towers(&self) -> Vec<Tower> {
        self.parts.iter().flat_map(|p| p.towers().iter().cloned()).collect()
    }

    fn check(&self, other: &ConstructibleSet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension { expected: self.dim, got: other.dim });
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|p| p.towers().is_empty())
    }

    pub fn difference(&self, other: &ConstructibleSet) -> Result<ConstructibleSet> {
        self.check(other)?;
        Ok(ConstructibleSet::from_towers(self.dim, &tower::difference(&self.towers(), &other.towers())))
    }

    pub fn intersection(&self, other: &ConstructibleSet) -> Result<ConstructibleSet> {
        self.check(other)?;
        Ok(ConstructibleSet::from_towers(self.dim, &tower::intersection(&self.towers(), &other.towers())))
    }

    /// Union; the parts of `other` are made disjoint from `self`.
    pub fn union(&self, other: &ConstructibleSet) -> Result<ConstructibleSet> {
        self.check(other)?;
        let mine = self.towers();
        let mut all = mine.clone();
        all.extend(tower::difference(&other.towers(), &mine));
        Ok(ConstructibleSet::from_towers(self.dim, &all))
    }

    pub fn is_subset(&self, other: &ConstructibleSet) -> Result<bool> {
        self.check(other)?;
        Ok(tower::difference(&self.towers(), &other.towers()).is_empty())
    }

    /// Exact set equality.
    pub fn same_set(&self, other: &ConstructibleSet) -> Result<bool> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    /// Membership of a rational point.
    pub fn contains(&self, pt: &[Rational]) -> Result<bool> {
        if pt.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: pt.len() });
        }
        Ok(self.parts.iter().any(|p| p.contains(pt)))
    }
}

/// Squarefree regular systems covering `V(p) ∩ Z(rs)`, each of lower rank than `rs`.
pub fn intersect(p: &Poly, rs: &RegularSystem) -> Result<Vec<RegularSystem>> {
    if !rs.is_squarefree() {
        return Err(Error::Precondition("intersect needs a squarefree regular system".into()));
    }
    if p.is_zero() || !is_regular(p, rs.chain())? {
        return Err(Error::Zerodivisor);
    }
    let (zero, _) = tower::split_all(rs.towers(), p);
    let out: Vec<RegularSystem> = zero.iter().map(RegularSystem::from_tower).collect();
    for o in &out {
        if rank_compare(o, rs) != Ordering::Less {
            return Err(Error::Internal(format!("rank descent violated: {o:?} from {rs:?}")));
        }
    }
    Ok(out)
}

/// Regular systems with pairwise disjoint zero sets and the same union as the inputs.
pub fn mpd(systems: &[RegularSystem]) -> Vec<RegularSystem> {
    let mut done: Vec<Tower> = Vec::new();
    for s in systems {
        let fresh = tower::difference(s.towers(), &done);
        done.extend(fresh);
    }
    done.iter().map(RegularSystem::from_tower).collect()
}

/// Intersection-free basis of `sets`: pairwise disjoint nonempty sets, each
/// inside some input, every input a union of some of them.
pub fn smpd(sets: &[ConstructibleSet]) -> Result<Vec<ConstructibleSet>> {
    Ok(smpd_tagged(sets)?.into_iter().map(|(c, _)| c).collect())
}

/// [`smpd`], also returning for each output the indices of the inputs containing it.
pub fn smpd_tagged(sets: &[ConstructibleSet]) -> Result<Vec<(ConstructibleSet, Vec<usize>)>> {
    let Some(first) = sets.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    for s in sets {
        first.check(s)?;
    }
    let mut atoms: Vec<(Vec<Tower>, Vec<usize>)> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let mut rest = s.towers();
        let mut next = Vec::new();
        for (a, tags) in atoms {
            if rest.is_empty() {
                next.push((a, tags));
                continue;
            }
            let inside = tower::intersection(&a, &rest);
            if inside.is_empty() {
                next.push((a, tags));
                continue;
            }
            let outside = tower::difference(&a, &rest);
            rest = tower::difference(&rest, &a);
            if !outside.is_empty() {
                next.push((outside, tags.clone()));
            }
            let mut t = tags;
            t.push(i);
            next.push((inside, t));
        }
        if !rest.is_empty() {
            next.push((rest, vec![i]));
        }
        atoms = next;
    }
    Ok(atoms.into_iter().map(|(t, tags)| (ConstructibleSet::from_towers(dim, &t), tags)).collect())
}

/// Gcds of `p` and `q` in `y_v` modulo the branches of `rc`.
///
/// Each returned system is a piece of `Z(rc)` on which the initials of `p`
/// and `q` do not vanish, and the paired polynomial specializes to a gcd of
/// `p` and `q` at every point of that piece.
pub fn regular_gcd(p: &Poly, q: &Poly, v: usize, rc: &RegularChain) -> Result<Vec<(Poly, RegularSystem)>> {
    if p.level() != v || q.level() != v || rc.base().is_algebraic(v) {
        return Err(Error::Precondition("regular gcd needs mvar(p) = mvar(q) = v, v free in rc".into()));
    }
    if !is_regular(p.init(), rc)? || !is_regular(q.init(), rc)? {
        return Err(Error::Precondition("initials must be regular modulo sat(rc)".into()));
    }
    let dim = v.max(rc.base().max_var());
    let whole = RegularSystem::new(rc.clone(), Vec::new(), dim)?;
    let (t, c) = if p.mdeg() >= q.mdeg() { (p, q) } else { (q, p) };
    let c = if c.mdeg() == t.mdeg() { prem(c, t, v) } else { c.clone() };
    let mut out = Vec::new();
    for tw in whole.towers() {
        let upper = &tw.levels()[v - 1..];
        let lower = vec![tw.prefix(v - 1)];
        let lower = tower::split_all(&lower, p.init()).1;
        let lower = tower::split_all(&lower, q.init()).1;
        for l in lower {
            for (b, g) in tower::gcd_pointwise(&l, t, &c, v) {
                let mut levels = b.levels().to_vec();
                levels.extend_from_slice(upper);
                out.push((g, RegularSystem::from_tower(&Tower::from_levels(levels))));
            }
        }
    }
    Ok(out)
}
