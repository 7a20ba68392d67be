use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::exactla::{PrimeField, Rationals};
use crate::gradedring::ExponentVector;
use crate::koszul::{betti_number, submodule_linearize, KoszulPiece};

fn squares<F: Field>(f: F, e: usize, d: u32) -> (QuotientAlgebra<F>, LinearizedModule<F>) {
    let gens = (0..e)
        .map(|v| {
            crate::gradedring::Polynomial::monomial(
                f.clone(),
                ExponentVector::var(e, v).mul(&ExponentVector::var(e, v)),
            )
        })
        .collect();
    let mut a = QuotientAlgebra::new(f, e, gens).unwrap();
    a.precompute(d).unwrap();
    let m = LinearizedModule::algebra(&a, d).unwrap();
    (a, m)
}

fn polynomial_ring(e: usize, d: u32) -> (QuotientAlgebra<Rationals>, LinearizedModule<Rationals>) {
    let mut a = QuotientAlgebra::new(Rationals, e, Vec::new()).unwrap();
    a.precompute(d).unwrap();
    let m = LinearizedModule::algebra(&a, d).unwrap();
    (a, m)
}

fn q(n: i64) -> <Rationals as Field>::Elem {
    Rationals.from_i64(n)
}

fn wedge(i: usize, j: i64, coords: Vec<(u32, i64)>) -> WedgeElement<<Rationals as Field>::Elem> {
    WedgeElement {
        i,
        j,
        coords: coords.into_iter().map(|(k, c)| (k, q(c))).collect(),
    }
}

#[test]
fn diagonal_of_two_wedge() {
    assert_eq!(
        diagonal(0b11),
        vec![
            (0b00, 0b11, 1),
            (0b01, 0b10, 1),
            (0b10, 0b01, -1),
            (0b11, 0b00, 1)
        ]
    );
    assert_eq!(diagonal(0b1), vec![(0, 1, 1), (1, 0, 1)]);
    for t in [0u32, 0b1011, 0b11111] {
        assert_eq!(diagonal(t).len(), 1 << t.count_ones());
    }
}

#[test]
fn diagonal_commutes_with_differentials() {
    for e in 0..=5 {
        assert_eq!(check_diagonal_commutes(e), None, "e = {e}");
    }
    for e in 0..=4 {
        assert_eq!(check_partials_anticommute(e), None, "e = {e}");
    }
}

#[test]
fn diagonal_is_multiplicative() {
    let e = 4;
    for t in 0u32..16 {
        for u in 0u32..16 {
            let lhs = match wedge_basis(t, u) {
                Some((s, tu)) => diagonal_of(&basis_wedge(e, tu))
                    .into_iter()
                    .map(|(k, c)| (k, s * c))
                    .collect(),
                None => TensorE::new(),
            };
            let rhs = tensor_product(
                &diagonal_of(&basis_wedge(e, t)),
                &diagonal_of(&basis_wedge(e, u)),
            );
            assert_eq!(lhs, rhs, "T = {t:b}, U = {u:b}");
        }
    }
}

#[test]
fn diagonal_is_coassociative() {
    for t in 0u32..32 {
        let mut left: BTreeMap<(u32, u32, u32), i64> = BTreeMap::new();
        let mut right: BTreeMap<(u32, u32, u32), i64> = BTreeMap::new();
        for (i, j, s) in diagonal(t) {
            for (i1, i2, s1) in diagonal(i) {
                *left.entry((i1, i2, j)).or_default() += s * s1;
            }
            for (j1, j2, s2) in diagonal(j) {
                *right.entry((i, j1, j2)).or_default() += s * s2;
            }
        }
        assert_eq!(left, right);
    }
}

#[test]
fn wedge_product_signs() {
    let (a, m) = polynomial_ring(2, 3);
    let e1 = wedge(1, 1, vec![(0, 1)]);
    let e2 = wedge(1, 1, vec![(1, 1)]);
    let e12 = wedge_multiply(&a, &m, &e1, &e2).unwrap();
    let e21 = wedge_multiply(&a, &m, &e2, &e1).unwrap();
    assert_eq!(e12.coords, vec![(0, q(1))]);
    assert_eq!(e21.coords, vec![(0, q(-1))]);
    assert!(wedge_multiply(&a, &m, &e1, &e1).unwrap().coords.is_empty());
    // (e_1 ⊗ x)(e_1 ⊗ y) vanishes on the overlap.
    let e1x = wedge(1, 2, vec![(0, 1)]);
    let e1y = wedge(1, 2, vec![(1, 1)]);
    assert!(wedge_multiply(&a, &m, &e1x, &e1y)
        .unwrap()
        .coords
        .is_empty());
    // (e_1 ⊗ x) · (e_2 ⊗ y) = e_12 ⊗ xy
    let e2y = wedge(1, 2, vec![(2 + 1, 1)]);
    let p = wedge_multiply(&a, &m, &e1x, &e2y).unwrap();
    assert_eq!((p.i, p.j), (2, 4));
    assert_eq!(p.coords, vec![(1, q(1))]);
}

fn random_element(
    k: &Koszul<'_, Rationals>,
    i: usize,
    j: i64,
    seed: &[i64],
) -> WedgeElement<<Rationals as Field>::Elem> {
    let dim = k.strand_dim(i, j).unwrap();
    let coords = (0..dim)
        .zip(seed.iter().cycle())
        .filter(|(_, c)| **c != 0)
        .map(|(x, c)| (x as u32, q(*c)))
        .collect();
    WedgeElement { i, j, coords }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn leibniz_rule(a in 0usize..=3, b in 0usize..=3, da in 0i64..=2, db in 0i64..=2, seed in prop::collection::vec(-2i64..=2, 1..8)) {
        let (alg, m) = squares(Rationals, 3, 8);
        let k = Koszul::new(&m).unwrap();
        let u = random_element(&k, a, a as i64 + da, &seed);
        let w = random_element(&k, b, b as i64 + db, &seed[1..].iter().chain(&seed[..1]).copied().collect::<Vec<_>>());
        let lhs = boundary_of(&m, &wedge_multiply(&alg, &m, &u, &w).unwrap()).unwrap();
        let left = wedge_multiply(&alg, &m, &boundary_of(&m, &u).unwrap(), &w).unwrap();
        let right = wedge_multiply(&alg, &m, &u, &boundary_of(&m, &w).unwrap()).unwrap();
        let sign = if a % 2 == 0 { q(1) } else { q(-1) };
        let rhs = sparse::add_scaled(&Rationals, &left.coords, &sign, &right.coords);
        prop_assert_eq!(lhs.coords, rhs);
    }
}

#[test]
fn beta_on_residue_field() {
    // Over k = S/(x, y) every element of K^k is a cycle; β_{1,1}(e_12) = e_1 ⊗ e_2 − e_2 ⊗ e_1.
    let k = LinearizedModule::residue_field(Rationals, 2);
    let split = Splitting::new(&k, 1, 1, 2).unwrap();
    let z = wedge(2, 2, vec![(0, 1)]);
    let t = split.beta(&z).unwrap();
    // Basis (e_I, ζ) with ζ in {e_1, e_2}: e_1 ⊗ e_2 is index 1, e_2 ⊗ e_1 is index 2.
    assert_eq!(t.coords, vec![(1, q(1)), (2, q(-1))]);
    assert_eq!(split.alpha(&t).unwrap().coords, vec![(0, q(2))]);
}

#[test]
fn beta_extreme_components() {
    let (_, m) = squares(Rationals, 2, 5);
    let z = Koszul::new(&m).unwrap().cycle_basis(1, 2).unwrap();
    let zero_first = Splitting::new(&m, 0, 1, 2).unwrap();
    let first_zero = Splitting::new(&m, 1, 0, 2).unwrap();
    for col in z.columns() {
        let w = WedgeElement {
            i: 1,
            j: 2,
            coords: col.clone(),
        };
        // b = 0: Z_0 = M with its monomial basis, so the coordinates are unchanged.
        assert_eq!(first_zero.beta(&w).unwrap().coords, *col);
        // a = 0: 1 ⊗ z, so α recovers z.
        let t = zero_first.beta(&w).unwrap();
        assert_eq!(zero_first.alpha(&t).unwrap().coords, *col);
    }
    let not_cycle = wedge(1, 1, vec![(0, 1)]);
    assert_eq!(zero_first.beta(&not_cycle), Err(Error::NotACycle));
}

#[test]
fn splitting_over_rationals_and_two() {
    let (_, m) = squares(Rationals, 2, 6);
    for j in 2..=4 {
        let r = verify_splitting(&m, 1, 1, j).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.binomial, 2);
    }
    let r = verify_splitting(&m, 1, 1, 4).unwrap();
    assert_eq!(r.cycles_checked, 1);
    for n in 0..=2 {
        for j in n as i64..=n as i64 + 2 {
            assert!(verify_splitting(&m, 0, n, j).unwrap().holds());
        }
    }
    let (_, m2) = squares(PrimeField::new(2).unwrap(), 2, 6);
    for j in 2..=4 {
        assert!(verify_splitting(&m2, 1, 1, j).unwrap().holds());
    }
    let split = Splitting::new(&m2, 1, 1, 4).unwrap();
    let z = Koszul::new(&m2).unwrap().cycle_basis(2, 4).unwrap();
    let w = WedgeElement {
        i: 2,
        j: 4,
        coords: z.column(0).clone(),
    };
    assert!(split
        .alpha(&split.beta(&w).unwrap())
        .unwrap()
        .coords
        .is_empty());
}

#[test]
fn splitting_two_one_on_three_squares() {
    let (_, m) = squares(Rationals, 3, 8);
    let mut checked = 0;
    for j in 3..=6 {
        let r = verify_splitting(&m, 2, 1, j).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.binomial, 3);
        checked += r.cycles_checked;
    }
    assert!(checked > 0);
    let k = LinearizedModule::residue_field(Rationals, 3);
    assert!(verify_splitting(&k, 2, 1, 3).unwrap().holds());
    assert!(verify_splitting(&k, 1, 2, 3).unwrap().holds());
}

#[test]
fn products_of_homology() {
    let (a, _) = squares(Rationals, 2, 8);
    assert_eq!(
        homology_product_dims(&a, 1, 1, 4).unwrap(),
        ProductDims {
            products: 1,
            homology: 1
        }
    );
    assert_eq!(
        homology_product_dims(&a, 0, 1, 2).unwrap(),
        ProductDims {
            products: 2,
            homology: 2
        }
    );
    assert_eq!(
        homology_product_dims(&a, 1, 1, 3).unwrap(),
        ProductDims {
            products: 0,
            homology: 0
        }
    );
    let (a3, m3) = squares(Rationals, 3, 8);
    for (x, y, j) in [(1, 1, 4), (1, 2, 6), (2, 1, 6), (1, 1, 3)] {
        let first = product_dims(&a3, &m3, x, y, j, RepChoice::First).unwrap();
        let shifted = product_dims(&a3, &m3, x, y, j, RepChoice::Shifted).unwrap();
        assert_eq!(first, shifted);
    }
    assert_eq!(
        homology_product_dims(&a3, 1, 2, 6).unwrap(),
        ProductDims {
            products: 1,
            homology: 1
        }
    );
}

#[test]
fn gamma_checks() {
    let (a, m) = squares(Rationals, 2, 8);
    for j in 2..=4 {
        assert_eq!(
            gamma_surjectivity_check(&a, &m, 1, 1, j).unwrap().verdict,
            Verdict::Verified
        );
        assert_eq!(
            gamma_surjectivity_check(&a, &m, 2, 0, j).unwrap().verdict,
            Verdict::Verified
        );
    }
    let (a2, m2) = squares(PrimeField::new(2).unwrap(), 2, 8);
    assert_eq!(
        gamma_surjectivity_check(&a2, &m2, 1, 1, 4).unwrap().verdict,
        Verdict::HypothesisNotMet
    );
    let k = LinearizedModule::residue_field(Rationals, 2);
    let r = gamma_surjectivity_check(&a, &k, 1, 1, 2).unwrap();
    assert_eq!(r.verdict, Verdict::Verified);
    assert_eq!((r.cokernel_dim, r.image_dim), (1, 1));
}

#[test]
fn cycle_betti_numbers_dominate() {
    // Σ_j β_{a,j}(Z_b(K^M)) ≥ Σ_j β_{a+b,j}(M) when C(a+b, a) is invertible.
    let (_, m) = squares(Rationals, 3, 8);
    let k = LinearizedModule::residue_field(Rationals, 3);
    for module in [&m, &k] {
        for (a, b) in [(1, 1), (1, 2), (2, 1), (0, 2)] {
            let z = submodule_linearize(module, KoszulPiece::Cycles, b, 12).unwrap();
            let top = z.top().unwrap();
            let lhs: usize = (0..=top + a as i64)
                .map(|j| betti_number(&z, a, j).unwrap())
                .sum();
            let rhs: usize = (0..=12)
                .map(|j| betti_number(module, a + b, j).unwrap())
                .sum();
            assert!(lhs >= rhs, "a = {a}, b = {b}: {lhs} < {rhs}");
        }
    }
}

#[test]
fn decomposability_on_small_algebras() {
    let mut path = QuotientAlgebra::from_i64(
        Rationals,
        4,
        &[
            &[(1, &[1, 1, 0, 0])],
            &[(1, &[0, 1, 1, 0])],
            &[(1, &[0, 0, 1, 1])],
        ],
    )
    .unwrap();
    let r = decomposability_report(&mut path, 4, 2).unwrap();
    assert_eq!(r.verdict(), Verdict::Verified, "{r:?}");
    assert_eq!(r.rows.len(), 5);
    // Two disjoint edges: H_2(K)_4 is the product of the two degree-2 classes.
    let mut pair = QuotientAlgebra::from_i64(
        Rationals,
        4,
        &[&[(1, &[1, 1, 0, 0])], &[(1, &[0, 0, 1, 1])]],
    )
    .unwrap();
    let r = decomposability_report(&mut pair, 4, 2).unwrap();
    assert_eq!(r.verdict(), Verdict::Verified);
    assert_eq!((r.rows[2].power_dim, r.rows[2].homology_dim), (1, 1));
    let (mut sq, _) = squares(Rationals, 3, 4);
    let r = decomposability_report(&mut sq, 3, 2).unwrap();
    assert_eq!(r.verdict(), Verdict::Verified);
    assert_eq!(
        r.rows
            .iter()
            .map(|row| row.homology_dim)
            .collect::<Vec<_>>(),
        vec![1, 3, 3, 1]
    );
    let mut s = QuotientAlgebra::new(Rationals, 3, Vec::new()).unwrap();
    let r = decomposability_report(&mut s, 3, 2).unwrap();
    assert_eq!(r.verdict(), Verdict::Verified);
    let mut cubic =
        QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[3, 0])], &[(1, &[1, 1])]]).unwrap();
    assert_eq!(
        decomposability_report(&mut cubic, 2, 2).unwrap().verdict(),
        Verdict::HypothesisNotMet
    );
}
