//! Triangular sets, regular chains, regular systems and constructible sets.

mod cs;
pub mod tower;

pub use cs::{intersect, mpd, regular_gcd, smpd, smpd_tagged, ConstructibleSet};
pub use tower::{Level, Tower};

use crate::error::{Error, Result};
use crate::poly::{div_exact, iterated_resultant, Poly, Rational};
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// Polynomials with pairwise distinct main variables, keyed by main variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TriangularSet {
    polys: BTreeMap<usize, Poly>,
}

impl TriangularSet {
    pub fn new(polys: Vec<Poly>) -> Result<TriangularSet> {
        let mut map = BTreeMap::new();
        for p in polys {
            let v = p
                .mvar()
                .map_err(|_| Error::NotTriangular(format!("constant polynomial {p}")))?;
            if map.insert(v, p).is_some() {
                return Err(Error::NotTriangular(format!("two polynomials with main variable y{v}")));
            }
        }
        Ok(TriangularSet { polys: map })
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    /// Polynomials ascending by main variable.
    pub fn polys(&self) -> Vec<Poly> {
        self.polys.values().cloned().collect()
    }

    pub fn get(&self, v: usize) -> Option<&Poly> {
        self.polys.get(&v)
    }

    /// Main variables, ascending.
    pub fn mvars(&self) -> Vec<usize> {
        self.polys.keys().copied().collect()
    }

    pub fn is_algebraic(&self, v: usize) -> bool {
        self.polys.contains_key(&v)
    }

    /// `T_{<v}`.
    pub fn lower(&self, v: usize) -> TriangularSet {
        TriangularSet { polys: self.polys.range(..v).map(|(k, p)| (*k, p.clone())).collect() }
    }

    /// Initials, ascending by main variable.
    pub fn inits(&self) -> Vec<Poly> {
        self.polys.values().map(|p| p.init().clone()).collect()
    }

    /// `h_T`, the product of the initials.
    pub fn init_product(&self) -> Poly {
        self.polys.values().map(|p| p.init().clone()).product()
    }

    /// Product of the separants.
    pub fn sep_product(&self) -> Poly {
        self.polys.values().map(|p| p.sep().expect("nonconstant")).product()
    }

    /// Ranks `(mvar, mdeg)`, ascending.
    pub fn rank(&self) -> Vec<(usize, usize)> {
        self.polys.values().map(|p| (p.level(), p.mdeg())).collect()
    }

    /// Highest level of any variable occurring.
    pub fn max_var(&self) -> usize {
        self.polys.keys().next_back().copied().unwrap_or(0)
    }
}

/// A triangular set whose initials are regular modulo its saturated ideal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RegularChain {
    base: TriangularSet,
}

impl RegularChain {
    /// Checks `ires(h_T, T) != 0`.
    pub fn new(base: TriangularSet) -> Result<RegularChain> {
        if !base.is_empty() && iterated_resultant(&base.init_product(), &base.polys()).is_zero() {
            return Err(Error::NotRegularChain);
        }
        Ok(RegularChain { base })
    }

    pub fn from_polys(polys: Vec<Poly>) -> Result<RegularChain> {
        RegularChain::new(TriangularSet::new(polys)?)
    }

    pub fn empty() -> RegularChain {
        RegularChain::default()
    }

    pub(crate) fn trusted(polys: Vec<Poly>) -> RegularChain {
        RegularChain { base: TriangularSet::new(polys).expect("triangular") }
    }

    pub fn base(&self) -> &TriangularSet {
        &self.base
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.base.polys()
    }
}

/// Whether `p` is regular modulo `sat(rc)`, i.e. `ires(p, rc) != 0`.
pub fn is_regular(p: &Poly, rc: &RegularChain) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(!iterated_resultant(p, &rc.polys()).is_zero())
}

/// A regular system `[T, h]` in `ℂ^dim`, denoting `W(T) \ V(h)`.
/// The inequation `h` is kept as a list of factors.
#[derive(Clone)]
pub struct RegularSystem {
    chain: RegularChain,
    ineqs: Vec<Poly>,
    dim: usize,
    squarefree: bool,
    exact_tower: bool,
    towers: OnceLock<Vec<Tower>>,
}

impl RegularSystem {
    /// Checks `ires(h, T) != 0` for the product `h` of `ineqs`.
    pub fn new(chain: RegularChain, ineqs: Vec<Poly>, dim: usize) -> Result<RegularSystem> {
        let h: Poly = ineqs.iter().cloned().product();
        if h.is_zero() || iterated_resultant(&h, &chain.polys()).is_zero() {
            return Err(Error::NotRegularSystem);
        }
        let top = ineqs.iter().map(|p| p.level()).chain([chain.base.max_var()]).max().unwrap_or(0);
        if top > dim {
            return Err(Error::Dimension { expected: dim, got: top });
        }
        let ts = chain.polys();
        let squarefree = ts.is_empty() || !iterated_resultant(&chain.base.sep_product(), &ts).is_zero();
        let ineqs = ineqs.into_iter().filter(|p| !p.is_const()).map(|p| p.normalize()).collect();
        Ok(RegularSystem { chain, ineqs, dim, squarefree, exact_tower: false, towers: OnceLock::new() })
    }

    /// Builds `[T, h]` from polynomial lists.
    pub fn from_polys(chain: Vec<Poly>, ineqs: Vec<Poly>, dim: usize) -> Result<RegularSystem> {
        RegularSystem::new(RegularChain::from_polys(chain)?, ineqs, dim)
    }

    /// The system denoting exactly the points of a tower.
    pub fn from_tower(tw: &Tower) -> RegularSystem {
        let chain = RegularChain::trusted(tw.eqs());
        let inits = chain.base.inits();
        let ineqs: Vec<Poly> = tw
            .free_factors()
            .into_iter()
            .filter(|f| !inits.iter().any(|i| !i.is_const() && div_exact(i, f).is_some()))
            .collect();
        let towers = OnceLock::new();
        let _ = towers.set(vec![tw.clone()]);
        RegularSystem { chain, ineqs, dim: tw.dim(), squarefree: true, exact_tower: true, towers }
    }

    /// `[∅, 1]` in `ℂ^dim`.
    pub fn whole(dim: usize) -> RegularSystem {
        RegularSystem::from_tower(&Tower::whole(dim))
    }

    pub fn chain(&self) -> &RegularChain {
        &self.chain
    }

    pub fn ineqs(&self) -> &[Poly] {
        &self.ineqs
    }

    /// The inequation `h` as a single polynomial.
    pub fn h(&self) -> Poly {
        self.ineqs.iter().cloned().product()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    /// Rank: the ranks of the chain polynomials.
    pub fn rank(&self) -> Vec<(usize, usize)> {
        self.chain.base.rank()
    }

    /// The single tower this system was built from, if any.
    pub fn as_tower(&self) -> Option<&Tower> {
        if self.exact_tower {
            self.towers.get().map(|t| &t[0])
        } else {
            None
        }
    }

    /// Tower partition of the zero set.
    pub fn towers(&self) -> &[Tower] {
        self.towers.get_or_init(|| {
            let mut ineqs = self.chain.base.inits();
            ineqs.extend(self.ineqs.iter().cloned());
            tower::decompose(self.dim, &self.chain.polys(), &ineqs)
        })
    }

    /// Membership of a rational point: `T = 0`, `h_T != 0`, `h != 0`.
    pub fn contains(&self, pt: &[Rational]) -> bool {
        let b = &self.chain.base;
        b.polys.values().all(|t| t.eval(pt).is_zero())
            && b.inits().iter().all(|i| !i.eval(pt).is_zero())
            && self.ineqs.iter().all(|q| !q.eval(pt).is_zero())
    }

    /// `[T: p1, p2, ...; h: q]` with the given variable names.
    pub fn to_text(&self, names: &[String]) -> String {
        let t: Vec<String> = self.chain.polys().iter().map(|p| p.to_text(names)).collect();
        let h = self.h();
        format!("[T: {}; h: {}]", t.join(", "), h.to_text(names))
    }

    fn default_names(&self) -> Vec<String> {
        (1..=self.dim).map(|i| format!("y{i}")).collect()
    }
}

impl PartialEq for RegularSystem {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.chain == other.chain && self.ineqs == other.ineqs
    }
}

impl Eq for RegularSystem {}

impl fmt::Debug for RegularSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&self.default_names()))
    }
}

/// Order on regular systems by rank: `rs1 < rs2` when the least element of
/// the symmetric difference of the rank sets lies in the rank of `rs1`.
pub fn rank_compare(rs1: &RegularSystem, rs2: &RegularSystem) -> Ordering {
    rank_set_compare(&rs1.rank(), &rs2.rank())
}

/// [`rank_compare`] on rank sets.
pub fn rank_set_compare(a: &[(usize, usize)], b: &[(usize, usize)]) -> Ordering {
    let first = a.iter().filter(|x| !b.contains(x)).min();
    let second = b.iter().filter(|x| !a.contains(x)).min();
    match (first, second) {
        (None, None) => Ordering::Equal,
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (Some(x), Some(y)) => {
            if x < y {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
    }
}
