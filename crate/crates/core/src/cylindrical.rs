//! The complex phase: an `F`-invariant cylindrical decomposition of `ℂⁿ`,
//! stored as a tree whose level-`k` nodes are cells of `ℂᵏ`.

use crate::chains::tower::{self, Tower};
use crate::chains::{smpd, smpd_tagged, ConstructibleSet, RegularChain, RegularSystem};
use crate::error::{Error, Result};
use crate::poly::{gcd_free_basis, squarefree_full, Poly, Rational};
use crate::separation::{project_case1, project_case2, separate_zeros_family};
use num_traits::Zero;
use serde_json::{json, Value};

/// How a cell sits inside the cylinder over its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellKind {
    Root,
    /// `p = 0` above the parent.
    Section(Poly),
    /// All of the sibling section polynomials nonzero.
    Sector(Vec<Poly>),
    /// The whole fiber `ℂ`.
    WholeFiber,
}

#[derive(Clone, Debug)]
pub struct Node {
    pub level: usize,
    pub kind: CellKind,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// For leaves built by [`make_cylindrical`]: the input system containing the cell.
    pub source: Option<usize>,
}

/// A cylindrical decomposition of `ℂⁿ`; the leaves are the cells.
#[derive(Clone, Debug)]
pub struct CylindricalTree {
    dim: usize,
    nodes: Vec<Node>,
}

impl CylindricalTree {
    fn new() -> CylindricalTree {
        let root = Node { level: 0, kind: CellKind::Root, parent: None, children: Vec::new(), source: None };
        CylindricalTree { dim: 0, nodes: vec![root] }
    }

    fn push(&mut self, parent: usize, kind: CellKind, source: Option<usize>) -> usize {
        let level = self.nodes[parent].level + 1;
        let id = self.nodes.len();
        self.nodes.push(Node { level, kind, parent: Some(parent), children: Vec::new(), source });
        self.nodes[parent].children.push(id);
        self.dim = self.dim.max(level);
        id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub const ROOT: usize = 0;

    /// Nodes at level `k`, in tree order.
    pub fn level_nodes(&self, k: usize) -> Vec<usize> {
        let mut out = vec![Self::ROOT];
        for _ in 0..k {
            out = out.iter().flat_map(|&i| self.nodes[i].children.clone()).collect();
        }
        out
    }

    /// Cells of `ℂⁿ`, in tree order.
    pub fn leaves(&self) -> Vec<usize> {
        self.level_nodes(self.dim)
    }

    /// Section polynomials of the children of `id`.
    pub fn section_polys(&self, id: usize) -> Vec<Poly> {
        self.nodes[id]
            .children
            .iter()
            .filter_map(|&c| match &self.nodes[c].kind {
                CellKind::Section(p) => Some(p.clone()),
                _ => None,
            })
            .collect()
    }

    /// Path from the root to `id`, root excluded.
    pub fn ancestors(&self, id: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = Some(id);
        while let Some(i) = cur {
            if i != Self::ROOT {
                path.push(i);
            }
            cur = self.nodes[i].parent;
        }
        path.reverse();
        path
    }

    /// Children of `id` whose defining condition holds at `pt`.
    pub fn matching_children(&self, id: usize, pt: &[Rational]) -> Vec<usize> {
        self.nodes[id]
            .children
            .iter()
            .copied()
            .filter(|&c| {
                let node = &self.nodes[c];
                let x = &pt[..node.level];
                match &node.kind {
                    CellKind::Section(p) => p.eval(x).is_zero(),
                    CellKind::Sector(ps) => ps.iter().all(|p| !p.eval(x).is_zero()),
                    CellKind::WholeFiber | CellKind::Root => true,
                }
            })
            .collect()
    }

    /// The leaf containing a rational point.
    pub fn locate(&self, pt: &[Rational]) -> Result<usize> {
        if pt.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: pt.len() });
        }
        let mut cur = Self::ROOT;
        for _ in 0..self.dim {
            let m = self.matching_children(cur, pt);
            if m.len() != 1 {
                return Err(Error::Internal(format!("{} cells match at level {}", m.len(), self.nodes[cur].level + 1)));
            }
            cur = m[0];
        }
        Ok(cur)
    }

    /// The cell of node `id` as a constructible set of `ℂ^level`.
    pub fn extent(&self, id: usize) -> ConstructibleSet {
        let k = self.nodes[id].level;
        ConstructibleSet::from_towers(k, &self.extent_towers(id))
    }

    fn extent_towers(&self, id: usize) -> Vec<Tower> {
        let node = &self.nodes[id];
        let Some(parent) = node.parent else {
            return vec![Tower::whole(0)];
        };
        let cyl: Vec<Tower> = self.extent_towers(parent).iter().map(Tower::cylinder).collect();
        match &node.kind {
            CellKind::Section(p) => tower::split_all(&cyl, p).0,
            CellKind::Sector(ps) => ps.iter().fold(cyl, |acc, p| tower::split_all(&acc, p).1),
            CellKind::WholeFiber | CellKind::Root => cyl,
        }
    }

    /// Nested JSON: `{level, kind, polynomial, children}`.
    pub fn to_json(&self, names: &[String]) -> Value {
        self.node_json(Self::ROOT, names)
    }

    fn node_json(&self, id: usize, names: &[String]) -> Value {
        let node = &self.nodes[id];
        let (kind, poly) = match &node.kind {
            CellKind::Root => ("root", Value::Null),
            CellKind::Section(p) => ("section", Value::String(p.to_text(names))),
            CellKind::Sector(ps) => {
                let prod: Poly = ps.iter().cloned().product();
                ("sector", Value::String(prod.to_text(names)))
            }
            CellKind::WholeFiber => ("whole", Value::Null),
        };
        let children: Vec<Value> = node.children.iter().map(|&c| self.node_json(c, names)).collect();
        json!({ "level": node.level, "kind": kind, "polynomial": poly, "children": children })
    }
}

/// A merged cell of `ℂ^{n-1}` with the level-`n` data attached to it.
#[derive(Clone, Debug)]
pub struct AnnotatedCell {
    pub cell: ConstructibleSet,
    /// Separating polynomials, sorted.
    pub polys: Vec<Poly>,
    /// Index of the input system each polynomial comes from.
    pub poly_sources: Vec<usize>,
    /// Sorted subset of `{1, 2, 3}`.
    pub tags: Vec<u8>,
    /// The input system of kind 2 or 3 whose projection contains the cell.
    pub owner: Option<usize>,
}

/// 1: `y_n` algebraic; 2: `y_n` only in `h`; 3: `y_n` absent.
fn kind_of(rs: &RegularSystem) -> u8 {
    let n = rs.dim();
    if rs.chain().base().is_algebraic(n) {
        1
    } else if rs.ineqs().iter().any(|f| f.level() == n) {
        2
    } else {
        3
    }
}

/// Classification, separation, projections and the tagged merge over `ℂ^{n-1}`.
pub fn merge_step(systems: &[RegularSystem]) -> Result<Vec<AnnotatedCell>> {
    let n = systems.first().map_or(0, |s| s.dim());
    if n < 2 {
        return Err(Error::Precondition("merge step needs n >= 2".into()));
    }
    let kinds: Vec<u8> = systems.iter().map(kind_of).collect();
    let r1: Vec<usize> = (0..systems.len()).filter(|&i| kinds[i] == 1).collect();
    let r1_systems: Vec<RegularSystem> = r1.iter().map(|&i| systems[i].clone()).collect();
    let family = if r1.is_empty() { Default::default() } else { separate_zeros_family(&r1_systems)? };
    let mut cells = Vec::new();
    let mut origin: Vec<(u8, usize)> = Vec::new();
    for (j, pair) in family.pairs.iter().enumerate() {
        cells.push(pair.cell.clone());
        origin.push((1, j));
    }
    for (i, rs) in systems.iter().enumerate() {
        match kinds[i] {
            2 => cells.push(project_case2(rs)?),
            3 => cells.push(project_case1(rs)?),
            _ => continue,
        }
        origin.push((kinds[i], i));
    }
    let mut out = Vec::new();
    for (cell, idx) in smpd_tagged(&cells)? {
        let mut tags = Vec::new();
        let mut owner = None;
        let mut tagged: Vec<(Poly, usize)> = Vec::new();
        for &t in &idx {
            let (kind, j) = origin[t];
            if !tags.contains(&kind) {
                tags.push(kind);
            }
            if kind == 1 {
                let pair = &family.pairs[j];
                for (p, &s) in pair.polys.iter().zip(&pair.sources) {
                    if !tagged.iter().any(|(q, _)| q == p) {
                        tagged.push((p.clone(), r1[s]));
                    }
                }
            } else if owner.replace(j).is_some() {
                return Err(Error::Internal("cell lies in two projections of kind 2 or 3".into()));
            }
        }
        tags.sort();
        if !matches!(tags.as_slice(), [1, 2] | [2] | [3]) {
            return Err(Error::Internal(format!("illegal tag set {tags:?}")));
        }
        tagged.sort();
        let (polys, poly_sources) = tagged.into_iter().unzip();
        out.push(AnnotatedCell { cell, polys, poly_sources, tags, owner });
    }
    Ok(out)
}

/// Regular systems with pairwise disjoint zero sets whose union is the union
/// of `towers`; towers are merged greedily where one system covers several.
pub fn coarsen(dim: usize, towers: &[Tower]) -> Vec<RegularSystem> {
    let mut rest = towers.to_vec();
    rest.sort_by_cached_key(|t| (t.eqs().len(), t.clone()));
    let mut out = Vec::new();
    while !rest.is_empty() {
        let tw = rest.remove(0);
        let mut best = RegularSystem::from_tower(&tw);
        let mut covered: Vec<usize> = Vec::new();
        let mut i = 0;
        while i < best.ineqs().len() {
            let mut trial = best.ineqs().to_vec();
            trial.remove(i);
            match cover(best.chain(), trial, dim, &tw, &rest) {
                Some((rs, cov)) => {
                    best = rs;
                    covered = cov;
                }
                None => i += 1,
            }
        }
        for j in covered.into_iter().rev() {
            rest.remove(j);
        }
        out.push(best);
    }
    out
}

/// `Some` when `[chain, ineqs]` is a squarefree system whose zero set is
/// exactly `tw` plus some whole towers of `rest`.
fn cover(
    chain: &RegularChain,
    ineqs: Vec<Poly>,
    dim: usize,
    tw: &Tower,
    rest: &[Tower],
) -> Option<(RegularSystem, Vec<usize>)> {
    let rs = RegularSystem::new(chain.clone(), ineqs, dim).ok()?;
    if !rs.is_squarefree() {
        return None;
    }
    let z = rs.towers();
    let cov: Vec<usize> =
        (0..rest.len()).filter(|&j| tower::difference(std::slice::from_ref(&rest[j]), z).is_empty()).collect();
    let mut pieces = vec![tw.clone()];
    pieces.extend(cov.iter().map(|&j| rest[j].clone()));
    tower::difference(z, &pieces).is_empty().then_some((rs, cov))
}

/// A cylindrical decomposition of `ℂⁿ` in which the zero set of every input
/// system is a union of cells. The inputs must partition `ℂⁿ`.
pub fn make_cylindrical(systems: &[RegularSystem], n: usize) -> Result<CylindricalTree> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if let Some(s) = systems.iter().find(|s| s.dim() != n) {
        return Err(Error::Dimension { expected: n, got: s.dim() });
    }
    if systems.is_empty() {
        return Err(Error::Precondition("no systems".into()));
    }
    if n == 1 {
        return base_case(systems);
    }
    let atoms = merge_step(systems)?;
    let mut lower = Vec::new();
    let mut owner_atom = Vec::new();
    for (a, atom) in atoms.iter().enumerate() {
        for rs in coarsen(n - 1, &atom.cell.towers()) {
            lower.push(rs);
            owner_atom.push(a);
        }
    }
    let mut tree = make_cylindrical(&lower, n - 1)?;
    for leaf in tree.leaves() {
        let src = tree.nodes[leaf].source.take().expect("leaf source");
        let atom = &atoms[owner_atom[src]];
        if atom.tags == [1, 2] {
            for (p, &s) in atom.polys.iter().zip(&atom.poly_sources) {
                tree.push(leaf, CellKind::Section(p.clone()), Some(s));
            }
            tree.push(leaf, CellKind::Sector(atom.polys.clone()), atom.owner);
        } else {
            tree.push(leaf, CellKind::WholeFiber, atom.owner);
        }
    }
    Ok(tree)
}

/// Systems of `ℂ¹`: one section per equation system, then the sector.
fn base_case(systems: &[RegularSystem]) -> Result<CylindricalTree> {
    let mut tree = CylindricalTree::new();
    if systems.len() == 1 {
        tree.push(CylindricalTree::ROOT, CellKind::WholeFiber, Some(0));
        return Ok(tree);
    }
    let mut sections = Vec::new();
    let mut open = None;
    for (i, rs) in systems.iter().enumerate() {
        match rs.chain().base().get(1) {
            Some(p) => sections.push((p.normalize(), i)),
            None => {
                if open.replace(i).is_some() {
                    return Err(Error::Internal("two systems without equations in one variable".into()));
                }
            }
        }
    }
    let open = open.ok_or_else(|| Error::Internal("no system without equations in one variable".into()))?;
    sections.sort();
    let polys: Vec<Poly> = sections.iter().map(|(p, _)| p.clone()).collect();
    let prod: Poly = polys.iter().cloned().product();
    if squarefree_full(&systems[open].h()) != squarefree_full(&prod) {
        return Err(Error::Internal("inequation zeros differ from the section zeros".into()));
    }
    for (p, i) in sections {
        tree.push(CylindricalTree::ROOT, CellKind::Section(p), Some(i));
    }
    tree.push(CylindricalTree::ROOT, CellKind::Sector(polys), Some(open));
    Ok(tree)
}

fn check_family(f: &[Poly], n: usize) -> Result<()> {
    for p in f {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.level() > n {
            return Err(Error::Dimension { expected: n, got: p.level() });
        }
    }
    Ok(())
}

/// Squarefree regular systems partitioning `ℂⁿ` into an intersection-free
/// basis of the `V(f)` and the complement of their union.
pub fn initial_partition(f: &[Poly], n: usize) -> Result<Vec<RegularSystem>> {
    check_family(f, n)?;
    let nonconst: Vec<Poly> = f.iter().filter(|p| !p.is_const()).map(Poly::normalize).collect();
    let sets: Vec<ConstructibleSet> =
        nonconst.iter().map(|p| ConstructibleSet::from_conditions(n, std::slice::from_ref(p), &[])).collect();
    let mut out = Vec::new();
    for atom in smpd(&sets)? {
        out.extend(coarsen(n, &atom.towers()));
    }
    out.push(RegularSystem::new(RegularChain::empty(), nonconst, n)?);
    Ok(out)
}

/// An `F`-invariant cylindrical decomposition of `ℂⁿ`.
pub fn cylindrical_decompose(f: &[Poly], n: usize) -> Result<CylindricalTree> {
    check_family(f, n)?;
    if n == 1 {
        let basis = gcd_free_basis(f);
        let mut tree = CylindricalTree::new();
        if basis.is_empty() {
            tree.push(CylindricalTree::ROOT, CellKind::WholeFiber, None);
        } else {
            for p in &basis {
                tree.push(CylindricalTree::ROOT, CellKind::Section(p.clone()), None);
            }
            tree.push(CylindricalTree::ROOT, CellKind::Sector(basis), None);
        }
        return Ok(tree);
    }
    make_cylindrical(&initial_partition(f, n)?, n)
}
