use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::exactla::{PrimeField, Rationals};
use crate::gradedring::{binomial, linearize_module, Polynomial, Presentation};
use crate::koszul::{betti_table, WindowShape};

fn alg(e: usize, gens: &[&[(i64, &[u32])]], d: u32) -> QuotientAlgebra<Rationals> {
    let mut a = QuotientAlgebra::from_i64(Rationals, e, gens).unwrap();
    a.precompute(d).unwrap();
    a
}

fn residue(a: &QuotientAlgebra<Rationals>) -> LinearizedModule<Rationals> {
    LinearizedModule::residue_field(Rationals, a.nvars())
}

#[test]
fn koszul_resolution_of_residue_field() {
    let s = alg(3, &[], 6);
    let res = minimal_resolution(&s, &residue(&s), 4, 6).unwrap();
    let p = res.profile(4);
    for i in 0..=4 {
        for j in 0..=6 {
            let expect = if j == i as i64 { binomial(3, i) } else { 0 };
            assert_eq!(p.get(i, j), Some(expect), "({i}, {j})");
        }
    }
    assert_eq!(p.get(0, 7), None);
    assert_eq!(res.complex_defect().unwrap(), None);
    assert_eq!(res.minimality_defect(&s).unwrap(), None);
}

#[test]
fn dual_numbers_are_linear() {
    let a = alg(1, &[&[(1, &[2])]], 8);
    let res = minimal_resolution(&a, &residue(&a), 6, 8).unwrap();
    assert_eq!(
        res.profile(6).records(),
        (0..=6).map(|i| (i, i as i64, 1)).collect::<Vec<_>>()
    );
    assert_eq!(res.complex_defect().unwrap(), None);
}

#[test]
fn cube_root_resolution_jumps() {
    // k ← R ← R(-1) ← R(-3) ← R(-4) ← R(-6) over k[x]/(x³).
    let a = alg(1, &[&[(1, &[3])]], 8);
    let res = minimal_resolution(&a, &residue(&a), 4, 8).unwrap();
    assert_eq!(
        res.profile(4).records(),
        vec![(0, 0, 1), (1, 1, 1), (2, 3, 1), (3, 4, 1), (4, 6, 1)]
    );
    assert_eq!(res.minimality_defect(&a).unwrap(), None);
    let mut a = a;
    let r = preg_residue_field(&mut a, 2, 5).unwrap();
    assert_eq!(r.value, Interval::exact(ExtInt::Fin(1)));
    assert_eq!(r.basis, PregBasis::LowDegree);
    assert_eq!(r.is_zero(), Some(false));
}

#[test]
fn preg_certificates() {
    let mut path = alg(3, &[&[(1, &[1, 1, 0])], &[(1, &[0, 1, 1])]], 4);
    let r = preg_residue_field(&mut path, 4, 6).unwrap();
    assert_eq!(
        (r.value, r.basis),
        (Interval::exact(ExtInt::Fin(0)), PregBasis::QuadraticGrobner)
    );
    assert!(r
        .observed
        .iter()
        .enumerate()
        .all(|(i, t)| *t == ExtInt::Fin(i as i64)));
    let mut s = alg(2, &[], 4);
    assert_eq!(
        preg_residue_field(&mut s, 3, 5).unwrap().is_zero(),
        Some(true)
    );
    // x² - y², xy has initial ideal (x², xy, y³), so only the window speaks at n = 3.
    let mut a = alg(2, &[&[(1, &[2, 0]), (-1, &[0, 2])], &[(1, &[1, 1])]], 4);
    let r = preg_residue_field(&mut a, 3, 6).unwrap();
    assert_eq!(r.basis, PregBasis::Window);
    assert!(r.truncated());
    assert_eq!(r.value.lo, ExtInt::Fin(0));
}

#[test]
fn low_degree_tops_match_resolution() {
    let cases: Vec<QuotientAlgebra<Rationals>> = vec![
        alg(2, &[&[(1, &[3, 0])], &[(1, &[1, 1])]], 6),
        alg(3, &[&[(1, &[1, 1, 1])]], 6),
        alg(2, &[&[(1, &[2, 0]), (1, &[0, 2])]], 6),
        alg(1, &[&[(1, &[4])]], 6),
    ];
    for a in cases {
        let res = minimal_resolution(&a, &residue(&a), 2, 6).unwrap();
        let p = res.profile(2);
        let low = low_residue_tops(&a).unwrap();
        for i in 0..=2 {
            assert_eq!(p.observed_top(i), low[i]);
        }
    }
}

fn cross_check(
    a: &QuotientAlgebra<Rationals>,
    m: &LinearizedModule<Rationals>,
    i_max: usize,
    d: i64,
) {
    let p = minimal_resolution(a, m, i_max, d).unwrap().profile(i_max);
    let t = betti_table(m, WindowShape::Rect { i_max, j_max: d }, &[]).unwrap();
    for i in 0..=i_max {
        for j in m.d_min()..=d {
            assert_eq!(p.get(i, j), t.get(i, j), "({i}, {j})");
        }
    }
}

#[test]
fn resolution_agrees_with_koszul_over_polynomial_ring() {
    let s = alg(3, &[], 9);
    let polys = |gens: &[&[(i64, &[u32])]]| -> Vec<Polynomial<Rationals>> {
        gens.iter()
            .map(|g| Polynomial::from_i64(Rationals, 3, g).unwrap())
            .collect()
    };
    let modules = [
        Presentation::residue_field(Rationals, 3),
        Presentation::cyclic(&polys(&[&[(1, &[2, 0, 0])], &[(1, &[0, 2, 0])]])).unwrap(),
        Presentation::cyclic(&polys(&[
            &[(1, &[1, 1, 0])],
            &[(1, &[0, 1, 1])],
            &[(1, &[1, 0, 1])],
        ]))
        .unwrap(),
        Presentation::cyclic(&polys(&[&[(1, &[3, 0, 0]), (-1, &[0, 1, 2])]])).unwrap(),
        Presentation {
            generator_degrees: vec![0, 1],
            relations: Vec::new(),
        },
    ];
    for p in &modules {
        let m = linearize_module(&s, p, 9).unwrap();
        cross_check(&s, &m, 3, 7);
    }
}

#[test]
fn tor_with_free_and_residue() {
    let a = alg(2, &[&[(1, &[2, 0])], &[(1, &[0, 2])]], 8);
    let r = LinearizedModule::algebra(&a, 8).unwrap();
    let k = residue(&a);
    let p = tor_between(&a, &r, &k, 3, 6).unwrap();
    assert_eq!(p.records(), vec![(0, 0, 1)]);
    let p = tor_between(&a, &r, &r, 2, 6).unwrap();
    assert_eq!(
        p.records(),
        (0..=2)
            .map(|j| (0, j, a.dim(j).unwrap()))
            .filter(|r| r.2 > 0)
            .collect::<Vec<_>>()
    );
    let d = alg(1, &[&[(1, &[2])]], 8);
    let kd = residue(&d);
    let p = tor_between(&d, &kd, &kd, 5, 7).unwrap();
    assert_eq!(
        p.records(),
        (0..=5).map(|i| (i, i as i64, 1)).collect::<Vec<_>>()
    );
}

#[test]
fn tor_top_is_bounded_by_module_top() {
    // top Tor_i(L, N) ≤ top L + t_i(N) over k[x,y]/(x², y²).
    let a = alg(2, &[&[(1, &[2, 0])], &[(1, &[0, 2])]], 10);
    let x = Polynomial::from_i64(Rationals, 2, &[(1, &[1, 0])]).unwrap();
    let xy = Polynomial::from_i64(Rationals, 2, &[(1, &[1, 1])]).unwrap();
    let l1 = linearize_module(
        &a,
        &Presentation::cyclic(core::slice::from_ref(&x)).unwrap(),
        10,
    )
    .unwrap();
    let l2 = linearize_module(&a, &Presentation::cyclic(&[xy]).unwrap(), 10).unwrap();
    let n1 = residue(&a);
    let n2 = linearize_module(&a, &Presentation::cyclic(&[x]).unwrap(), 10).unwrap();
    for l in [&l1, &l2, &n1] {
        for n in [&n1, &n2] {
            let tor = tor_between(&a, l, n, 3, 8).unwrap();
            let tn = minimal_resolution(&a, n, 3, 8).unwrap().profile(3);
            let top_l = l.top().unwrap();
            for i in 0..=3 {
                assert!(tor.observed_top(i) <= tn.observed_top(i) + top_l, "i = {i}");
            }
        }
    }
}

#[test]
fn serra_sequence_on_squares() {
    let mut a = alg(2, &[&[(1, &[2, 0])], &[(1, &[0, 2])]], 8);
    let r = LinearizedModule::algebra(&a, 8).unwrap();
    for c in check_serra_sequence(&mut a, &r, 1, 1, 6).unwrap() {
        assert!(c.holds(), "{c:?}");
    }
    let k = residue(&a);
    for (x, y) in [(1, 0), (2, 1), (1, 2)] {
        for c in check_serra_sequence(&mut a, &k, x, y, 5).unwrap() {
            assert!(c.holds(), "{c:?}");
        }
    }
}

#[test]
fn serra_sequence_over_polynomial_ring() {
    let mut s = alg(2, &[], 6);
    let k = residue(&s);
    let checks = check_serra_sequence(&mut s, &k, 2, 0, 4).unwrap();
    for c in &checks {
        assert!(c.holds(), "{c:?}");
        // B_1 = ∂(K_2) ≅ S(-2) is free.
        assert_eq!((c.tor1_boundaries, c.cycles_tensor - c.phi_rank), (0, 0));
    }
    let r = LinearizedModule::algebra(&s, 6).unwrap();
    for (x, y) in [(1, 0), (1, 1), (2, 0)] {
        for c in check_serra_sequence(&mut s, &r, x, y, 4).unwrap() {
            assert!(c.holds(), "{c:?}");
        }
    }
}

#[test]
fn prime_field_resolution() {
    let f = PrimeField::new(3).unwrap();
    let mut a = QuotientAlgebra::from_i64(f, 2, &[&[(1, &[3, 0])], &[(1, &[1, 1])]]).unwrap();
    a.precompute(7).unwrap();
    let k = LinearizedModule::residue_field(f, 2);
    let res = minimal_resolution(&a, &k, 3, 7).unwrap();
    assert_eq!(res.complex_defect().unwrap(), None);
    assert_eq!(res.minimality_defect(&a).unwrap(), None);
    assert_eq!(res.profile(3).observed_top(2), ExtInt::Fin(3));
}
