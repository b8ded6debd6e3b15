//! Regular chains, regular systems and constructible-set algebra.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use tricad::chains::{
    intersect, is_regular, mpd, rank_compare, rank_set_compare, regular_gcd, smpd, ConstructibleSet, RegularChain,
    RegularSystem,
};
use tricad::poly::{iterated_resultant, Poly, Rational, VarOrder};

mod common;
use common::*;

#[test]
fn example_one_iterated_resultants() {
    let o = order(&["y1", "y2", "y3"]);
    let t = RegularChain::from_polys(vec![p("y2^2+y1-1", &o), p("y1*y3^2-1", &o)]).unwrap();
    assert_eq!(iterated_resultant(&t.base().init_product(), &t.polys()), p("y1", &o));
    assert_eq!(iterated_resultant(&p("y2", &o), &t.polys()), p("y1-1", &o));
    assert!(is_regular(&p("y1", &o), &t).unwrap());
    assert!(is_regular(&p("y2", &o), &t).unwrap());
    let rs = RegularSystem::new(t.clone(), vec![p("y2", &o)], 3).unwrap();
    assert_eq!(rs.to_text(o.names()), "[T: y2^2 + y1 - 1, y1*y3^2 - 1; h: y2]");
    let p1 = RegularChain::from_polys(vec![p("y2^2+y1-1", &o)]).unwrap();
    assert!(!is_regular(&p("y2^2+y1-1", &o), &p1).unwrap());
    assert!(is_regular(&Poly::zero(), &p1).is_err());
}

#[test]
fn construction_guards() {
    let o = order(&["a", "x"]);
    assert!(RegularChain::from_polys(vec![p("a", &o), p("a*x-1", &o)]).is_err());
    assert!(RegularChain::from_polys(vec![p("x-a", &o), p("x^2", &o)]).is_err());
    assert!(RegularSystem::from_polys(vec![p("x^2-a", &o)], vec![p("x^2-a", &o)], 2).is_err());
    assert!(RegularSystem::from_polys(vec![p("x^2-a", &o)], vec![p("x-1", &o)], 2).is_ok());
}

#[test]
fn rank_order_follows_symmetric_difference() {
    let brute = |a: &[(usize, usize)], b: &[(usize, usize)]| {
        let mut sd: Vec<((usize, usize), bool)> = Vec::new();
        for x in a {
            if !b.contains(x) {
                sd.push((*x, true));
            }
        }
        for x in b {
            if !a.contains(x) {
                sd.push((*x, false));
            }
        }
        sd.sort();
        match sd.first() {
            None => Ordering::Equal,
            Some((_, true)) => Ordering::Less,
            Some((_, false)) => Ordering::Greater,
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let mk = |rng: &mut ChaCha8Rng| {
            let mut out = Vec::new();
            for v in 1..=4usize {
                if rng.gen_bool(0.5) {
                    out.push((v, rng.gen_range(1..=3)));
                }
            }
            out
        };
        let (a, b) = (mk(&mut rng), mk(&mut rng));
        assert_eq!(rank_set_compare(&a, &b), brute(&a, &b));
    }
    assert_eq!(rank_set_compare(&[(2, 2)], &[(3, 2)]), Ordering::Less);
    assert_eq!(rank_set_compare(&[(2, 2)], &[(2, 2)]), Ordering::Equal);
    // The least element of the symmetric difference lies in the nonempty set.
    assert_eq!(rank_set_compare(&[], &[(2, 2)]), Ordering::Greater);
}

#[test]
fn regular_gcd_matches_specialized_gcds() {
    let o = order(&["a", "x"]);
    let f = p("x^2-a", &o);
    let g = p("x-1", &o);
    let out = regular_gcd(&f, &g, 2, &RegularChain::empty()).unwrap();
    assert_eq!(out.len(), 2);
    for k in -25..25i64 {
        let pt = [r(k)];
        let want = ugcd(ucoeffs(&f.eval_prefix(&pt), 2), ucoeffs(&g.eval_prefix(&pt), 2));
        let branches: Vec<_> = out.iter().filter(|(_, rs)| rs.contains(&[r(k), r(0)]) || rs.contains(&[r(k), r(7)])).collect();
        assert_eq!(branches.len(), 1, "a = {k}");
        let got = ucoeffs(&branches[0].0.eval_prefix(&pt), 2);
        assert_eq!(ugcd(got.clone(), got), want, "a = {k}");
    }
    let h = p("x^2-1", &o);
    let out = regular_gcd(&h, &g, 2, &RegularChain::empty()).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].0, g);
    let out = regular_gcd(&f, &f, 2, &RegularChain::empty()).unwrap();
    assert!(out.iter().all(|(q, _)| *q == f));
}

#[test]
fn intersect_examples_and_soundness() {
    let o = order(&["y1"]);
    let out = intersect(&p("y1-1", &o), &RegularSystem::whole(1)).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].chain().polys(), vec![p("y1-1", &o)]);

    let o = order(&["a", "b", "x"]);
    let rs = RegularSystem::from_polys(vec![p("a*x^2-b", &o)], vec![p("a", &o)], 3).unwrap();
    let out = intersect(&p("b", &o), &rs).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].chain().polys(), vec![p("b", &o), p("x", &o)]);
    assert_eq!(out[0].h(), p("a", &o));
    for pt in grid(3, 3) {
        let want = rs.contains(&pt) && pt[1].is_zero();
        assert_eq!(count_containing(&out, &pt), usize::from(want));
    }
}

#[test]
fn intersect_rank_descent_randomized() {
    let o = order(&["a", "b", "x"]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut calls = 0;
    let pts = grid(3, 2);
    while calls < 100 {
        let lin = |rng: &mut ChaCha8Rng| {
            format!("{}*a + {}*b + {}", rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2))
        };
        let t = format!("({})*x^2 + ({})*x + ({})", lin(&mut rng), lin(&mut rng), lin(&mut rng));
        let q = format!("({})*x + ({})", lin(&mut rng), lin(&mut rng));
        let (t, q) = (p(&t, &o), p(&q, &o));
        if t.level() != 3 || q.is_zero() {
            continue;
        }
        let Ok(rs) = RegularSystem::from_polys(vec![t], vec![], 3) else { continue };
        if !rs.is_squarefree() {
            continue;
        }
        let Ok(out) = intersect(&q, &rs) else { continue };
        calls += 1;
        for s in &out {
            assert_eq!(rank_compare(s, &rs), Ordering::Less);
        }
        for pt in &pts {
            let want = rs.contains(pt) && q.eval(pt).is_zero();
            assert_eq!(count_containing(&out, pt), usize::from(want), "pt {pt:?}");
        }
    }
}

fn parabola_systems(o: &VarOrder) -> Vec<RegularSystem> {
    vec![
        RegularSystem::from_polys(vec![p("a*x^2+b*x+c", o)], vec![p("a*(4*a*c-b^2)", o)], 4).unwrap(),
        RegularSystem::from_polys(vec![p("4*a*c-b^2", o), p("2*a*x+b", o)], vec![p("a", o)], 4).unwrap(),
        RegularSystem::from_polys(vec![p("a", o), p("b*x+c", o)], vec![p("b", o)], 4).unwrap(),
        RegularSystem::from_polys(vec![], vec![p("a*x^2+b*x+c", o)], 4).unwrap(),
    ]
}

#[test]
fn mpd_disjoint_and_covering() {
    let o = order(&["a", "b", "c", "x"]);
    let sys = parabola_systems(&o);
    let out = mpd(&sys);
    let pts = grid(4, 2);
    for pt in &pts {
        let inside = sys.iter().any(|s| s.contains(pt));
        assert_eq!(count_containing(&out, pt), usize::from(inside));
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let a = ConstructibleSet::from_system(out[i].clone());
            let b = ConstructibleSet::from_system(out[j].clone());
            assert!(a.intersection(&b).unwrap().is_empty());
        }
    }
    let twice = mpd(&[sys[0].clone(), sys[0].clone()]);
    let once = ConstructibleSet::from_system(sys[0].clone());
    let u = twice.iter().fold(ConstructibleSet::empty(4), |acc, s| {
        acc.union(&ConstructibleSet::from_system(s.clone())).unwrap()
    });
    assert!(u.same_set(&once).unwrap());
    for pt in &pts {
        assert!(count_containing(&twice, pt) <= 1);
    }
}

fn check_basis(inputs: &[ConstructibleSet], basis: &[ConstructibleSet]) {
    for i in 0..basis.len() {
        assert!(!basis[i].is_empty());
        for j in i + 1..basis.len() {
            assert!(basis[i].intersection(&basis[j]).unwrap().is_empty());
        }
        assert!(inputs.iter().any(|s| basis[i].is_subset(s).unwrap()));
    }
    for s in inputs {
        let parts: Vec<&ConstructibleSet> = basis.iter().filter(|b| b.is_subset(s).unwrap()).collect();
        let u = parts.iter().fold(ConstructibleSet::empty(s.dim()), |acc, b| acc.union(b).unwrap());
        assert!(u.same_set(s).unwrap());
    }
}

#[test]
fn smpd_basis_laws() {
    let o = order(&["a", "b", "c"]);
    let c5 = ConstructibleSet::from_conditions(3, &[p("a", &o), p("b", &o), p("c", &o)], &[]);
    let big = ConstructibleSet::from_conditions(3, &[p("a", &o), p("b", &o)], &[]);
    let other = ConstructibleSet::from_conditions(3, &[], &[p("a", &o)]);
    let inputs = vec![c5.clone(), big.clone(), other];
    let basis = smpd(&inputs).unwrap();
    check_basis(&inputs, &basis);
    let c6 = ConstructibleSet::from_conditions(3, &[p("a", &o), p("b", &o)], &[p("c", &o)]);
    assert!(basis.iter().any(|b| b.same_set(&c6).unwrap()));
    assert!(c6.contains(&[r(0), r(0), r(3)]).unwrap());

    let single = smpd(std::slice::from_ref(&c5)).unwrap();
    assert_eq!(single.len(), 1);
    assert!(single[0].same_set(&c5).unwrap());
    let dup = smpd(&[big.clone(), big.clone()]).unwrap();
    assert_eq!(dup.len(), 1);
    assert!(dup[0].same_set(&big).unwrap());
}

#[test]
fn smpd_random_small_inputs() {
    let o = order(&["a", "b"]);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let atoms = ["a", "b", "a-b", "a+1", "b^2-a", "a*b-1"];
    for _ in 0..15 {
        let mut inputs = Vec::new();
        for _ in 0..3 {
            let eqs: Vec<Poly> = (0..rng.gen_range(0..=1)).map(|_| p(atoms[rng.gen_range(0..6)], &o)).collect();
            let ineqs: Vec<Poly> = (0..rng.gen_range(0..=1)).map(|_| p(atoms[rng.gen_range(0..6)], &o)).collect();
            let s = ConstructibleSet::from_conditions(2, &eqs, &ineqs);
            for pt in grid(2, 2) {
                assert_eq!(s.contains(&pt).unwrap(), holds(&eqs, &ineqs, &pt));
            }
            inputs.push(s);
        }
        let basis = smpd(&inputs).unwrap();
        check_basis(&inputs, &basis);
    }
}

#[test]
fn set_algebra() {
    let o = order(&["a", "b", "c"]);
    let a = ConstructibleSet::from_conditions(3, &[], &[p("a*b", &o)]);
    assert!(a.difference(&a).unwrap().is_empty());
    assert!(ConstructibleSet::whole(3).intersection(&a).unwrap().same_set(&a).unwrap());
    let b = ConstructibleSet::from_conditions(3, &[], &[p("a*(4*a*c-b^2)", &o)]);
    let d = a.difference(&b).unwrap();
    let disc = p("4*a*c-b^2", &o);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let (x, y) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let z = if rng.gen_bool(0.5) && x != 0 {
            Rational::new((y * y).into(), (4 * x).into())
        } else {
            r(rng.gen_range(-3..=3))
        };
        let pt = [r(x), r(y), z];
        let want = disc.eval(&pt).is_zero() && x != 0 && y != 0;
        assert_eq!(d.contains(&pt).unwrap(), want);
    }
    assert!(ConstructibleSet::whole(2).difference(&a).is_err());

    let o = order(&["y1"]);
    let s = ConstructibleSet::from_system(RegularSystem::from_polys(vec![p("y1-1", &o)], vec![], 1).unwrap());
    assert!(s.contains(&[r(1)]).unwrap());
    assert!(s.contains(&[r(1), r(2)]).is_err());
    let o = order(&["a", "b", "x"]);
    let s = ConstructibleSet::from_system(RegularSystem::from_polys(vec![p("a*x^2-b", &o)], vec![p("a", &o)], 3).unwrap());
    assert!(s.contains(&[r(1), r(4), r(2)]).unwrap());
    assert!(!s.contains(&[r(0), r(0), r(5)]).unwrap());
}

#[test]
fn decomposition_matches_conditions_on_grid() {
    let o = order(&["a", "b", "x"]);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let polys = ["a*x^2+b*x+1", "x^2-a", "b*x-a", "(x-a)^2*(x+b)", "a*b*x^3-x", "x^2+b"];
    let pts = grid(3, 2);
    for _ in 0..20 {
        let eqs: Vec<Poly> = (0..rng.gen_range(0..=2)).map(|_| p(polys[rng.gen_range(0..6)], &o)).collect();
        let ineqs: Vec<Poly> = (0..rng.gen_range(0..=2)).map(|_| p(polys[rng.gen_range(0..6)], &o)).collect();
        let s = ConstructibleSet::from_conditions(3, &eqs, &ineqs);
        for pt in &pts {
            let n = s.parts().iter().filter(|rs| rs.contains(pt)).count();
            assert_eq!(n, usize::from(holds(&eqs, &ineqs, pt)), "{eqs:?} {ineqs:?} at {pt:?}");
        }
        for part in s.parts() {
            assert!(part.is_squarefree());
        }
    }
}
