//! Sampled end-to-end checks of a decomposition.

use crate::spec::SystemSpec;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use std::collections::HashMap;
use tricad::cylindrical::{CellKind, CylindricalTree};
use tricad::poly::{gcd, Poly, Rational};
use tricad::real::Cad;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Interior samples per full-dimensional cell.
    pub samples: usize,
    /// Random points for the partition and separation checks; every other one
    /// lies on a hypersurface of the input when a variable occurs linearly.
    pub points: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { samples: 20, points: 1000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub passed: bool,
    /// First violation found, with the offending point or cell.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub system: String,
    pub seed: u64,
    pub n_complex: usize,
    pub n_real: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Check {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check { name, checked: 0, failure: None }
    }

    /// Records one check; keeps only the first failure.
    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.record(false, || detail);
    }

    fn done(self) -> CheckResult {
        CheckResult { name: self.name.into(), checked: self.checked, passed: self.failure.is_none(), failure: self.failure }
    }
}

fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn signs_at(f: &[Poly], pt: &[Rational]) -> Vec<i8> {
    f.iter().map(|p| sign(&p.eval(pt))).collect()
}

fn show(pt: &[Rational]) -> String {
    let parts: Vec<String> = pt.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Small integers hit lower-dimensional cells; fractions land in open ones.
fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.3) {
                Rational::from_integer(rng.gen_range(-2i64..=2).into())
            } else {
                Rational::new(rng.gen_range(-60i64..=60).into(), rng.gen_range(1i64..=12).into())
            }
        })
        .collect()
}

/// A rational point on `V(f)` for a random `f` in which some variable occurs
/// linearly; the other coordinates are random.
fn variety_point(rng: &mut ChaCha8Rng, f: &[Poly], n: usize) -> Option<Vec<Rational>> {
    let linear: Vec<(usize, usize)> =
        f.iter().enumerate().flat_map(|(i, p)| (1..=n).filter(move |&v| p.deg_in(v) == 1).map(move |v| (i, v))).collect();
    if linear.is_empty() {
        return None;
    }
    let (i, v) = linear[rng.gen_range(0..linear.len())];
    let mut pt = random_point(rng, n);
    let c = f[i].coeffs_in(v);
    let lead = c[1].eval(&pt);
    if lead.is_zero() {
        return None;
    }
    pt[v - 1] = -c[0].eval(&pt) / lead;
    Some(pt)
}

fn pick(rng: &mut ChaCha8Rng, lo: Option<&Rational>, hi: Option<&Rational>) -> Rational {
    let t = Rational::new(rng.gen_range(1i64..=999).into(), 1000.into());
    let span = Rational::from_integer(4.into());
    match (lo, hi) {
        (Some(l), Some(h)) => l + (h - l) * t,
        (Some(l), None) => l + t * span,
        (None, Some(h)) => h - t * span,
        (None, None) => (t - Rational::new(1.into(), 2.into())) * span,
    }
}

/// Points at which the separation conditions are checked.
const SEPARATION_POINTS: usize = 20;

fn is_squarefree_univariate(p: &Poly, v: usize) -> bool {
    gcd(p, &p.derivative(v)).level() == 0
}

/// Separation above every visited complex cell: nonvanishing initials,
/// squarefree and pairwise coprime specializations of its section polynomials.
fn check_separation(tree: &CylindricalTree, pt: &[Rational], c: &mut Check) {
    let mut node = CylindricalTree::ROOT;
    for k in 1..=tree.dim() {
        let alpha = &pt[..k - 1];
        let secs: Vec<Poly> = tree.section_polys(node).iter().map(|s| s.eval_prefix(alpha)).collect();
        for (i, s) in secs.iter().enumerate() {
            let ok = s.level() == k
                && !tree.section_polys(node)[i].init().eval_prefix(alpha).is_zero()
                && is_squarefree_univariate(s, k)
                && secs[i + 1..].iter().all(|t| gcd(s, t).level() == 0);
            c.record(ok, || format!("sections of node {node} at {}", show(alpha)));
        }
        match tree.matching_children(node, pt).as_slice() {
            [one] => node = *one,
            _ => return,
        }
    }
}

/// Stack shape and the signs of section polynomials at the samples.
fn check_stacks(cad: &mut Cad, c: &mut Check) {
    let n = cad.dim();
    for k in 1..=n {
        let parents: Vec<Option<usize>> = if k == 1 { vec![None] } else { (0..cad.level(k - 1).len()).map(Some).collect() };
        for parent in parents {
            let stack = cad.stack(k, parent);
            c.record(stack.len() % 2 == 1, || format!("even stack of {} cells at level {k}", stack.len()));
            let node = parent.map_or(CylindricalTree::ROOT, |p| cad.level(k - 1)[p].complex);
            let secs = cad.tree().section_polys(node);
            for (j, &i) in stack.iter().enumerate() {
                let cell = cad.level(k)[i].clone();
                c.record(cell.index.last() == Some(&(j + 1)), || format!("cell {:?} out of order", cell.index));
                let mut sample = cell.sample.clone();
                let kind = cad.tree().node(cell.complex).kind.clone();
                let ok = match (&kind, (j + 1) % 2 == 0) {
                    (CellKind::Section(p), true) => sample.sign_of(p).ok() == Some(0),
                    (CellKind::Section(_), false) => false,
                    (_, false) => secs.iter().all(|p| matches!(sample.sign_of(p), Ok(1) | Ok(-1))),
                    (_, true) => false,
                };
                c.record(ok, || format!("sample of cell {:?}", cell.index));
            }
        }
    }
}

/// Runs every check on a finished decomposition.
pub fn verify(spec: &SystemSpec, tree: &CylindricalTree, cad: &mut Cad, opts: &VerifyOptions) -> VerifyReport {
    let n = spec.dim();
    let f = &spec.polys;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sample_signs = Vec::with_capacity(cad.len());
    for i in 0..cad.len() {
        sample_signs.push(cad.signs(i, f).unwrap_or_default());
    }
    let mut complex = Check::new("partition-complex");
    let mut real = Check::new("partition-real");
    let mut separation = Check::new("separation");
    let mut leaf_zeros: HashMap<usize, Vec<bool>> = HashMap::new();
    for k in 0..opts.points {
        let on_variety = if k % 2 == 1 { variety_point(&mut rng, f, n) } else { None };
        let pt = on_variety.unwrap_or_else(|| random_point(&mut rng, n));
        let zeros: Vec<bool> = f.iter().map(|p| p.eval(&pt).is_zero()).collect();
        let leaf = match tree.locate(&pt) {
            Ok(leaf) => {
                let seen = leaf_zeros.entry(leaf).or_insert_with(|| zeros.clone());
                complex.record(*seen == zeros, || format!("zero pattern changes on leaf {leaf} at {}", show(&pt)));
                Some(leaf)
            }
            Err(e) => {
                complex.fail(format!("{}: {e}", show(&pt)));
                None
            }
        };
        match cad.locate(&pt) {
            Ok(i) => {
                let got = signs_at(f, &pt);
                let cell = &cad.cells()[i];
                real.record(got == sample_signs[i] && leaf.map_or(true, |l| l == cell.complex), || {
                    format!("cell {:?}: signs {:?} at {} but {:?} at the sample", cell.index, got, show(&pt), sample_signs[i])
                });
            }
            Err(e) => real.fail(format!("{}: {e}", show(&pt))),
        }
        if k < SEPARATION_POINTS {
            check_separation(tree, &pt, &mut separation);
        }
    }
    let mut invariance = Check::new("sign-invariance");
    for i in 0..cad.len() {
        if !cad.cells()[i].is_full_dimensional() {
            continue;
        }
        for _ in 0..opts.samples {
            let index = cad.cells()[i].index.clone();
            match cad.interior_point(i, &mut |lo, hi| pick(&mut rng, lo, hi)) {
                Ok(pt) => {
                    let same_cell = cad.locate(&pt).ok() == Some(i);
                    let got = signs_at(f, &pt);
                    invariance.record(same_cell && got == sample_signs[i], || {
                        format!("cell {index:?}: signs {got:?} at {} but {:?} at the sample", show(&pt), sample_signs[i])
                    });
                }
                Err(e) => invariance.fail(format!("cell {index:?}: {e}")),
            }
        }
    }
    let mut stacks = Check::new("stack-shape");
    check_stacks(cad, &mut stacks);
    VerifyReport {
        system: spec.name.clone(),
        seed: opts.seed,
        n_complex: tree.leaves().len(),
        n_real: cad.len(),
        checks: vec![complex.done(), real.done(), invariance.done(), stacks.done(), separation.done()],
    }
}

/// Compares the signs recorded in a cell file with those recomputed at the
/// samples of the matching cells.
pub fn check_cell_file(spec: &SystemSpec, cad: &mut Cad, cells: &Value) -> CheckResult {
    let mut c = Check::new("cell-file");
    let by_index: HashMap<Vec<usize>, usize> = cad.cells().iter().enumerate().map(|(i, c)| (c.index.clone(), i)).collect();
    let Some(list) = cells.get("cells").and_then(Value::as_array) else {
        c.fail("no `cells` array".into());
        return c.done();
    };
    for cell in list {
        let index: Option<Vec<usize>> =
            cell.get("index").and_then(Value::as_array).map(|a| a.iter().filter_map(|v| v.as_u64().map(|x| x as usize)).collect());
        let Some(index) = index else {
            c.fail("cell without an index".into());
            continue;
        };
        let Some(&i) = by_index.get(&index) else {
            c.fail(format!("cell {index:?}: no such cell"));
            continue;
        };
        let want = cad.signs(i, &spec.polys).unwrap_or_default();
        let got: Vec<i8> = (1..=spec.polys.len())
            .map(|j| cell.pointer(&format!("/signs/f{j}")).and_then(Value::as_i64).unwrap_or(2) as i8)
            .collect();
        c.record(got == want, || format!("cell {index:?}: recorded signs {got:?}, recomputed {want:?}"));
    }
    c.record(list.len() == cad.len(), || format!("{} cells recorded, {} computed", list.len(), cad.len()));
    c.done()
}
