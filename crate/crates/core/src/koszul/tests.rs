use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::exactla::{Field, PrimeField, Rationals};
use crate::gradedring::{binomial, ExponentVector, Polynomial, QuotientAlgebra};

fn algebra_module<F: Field>(a: &mut QuotientAlgebra<F>, d: u32) -> LinearizedModule<F> {
    a.precompute(d).unwrap();
    LinearizedModule::algebra(a, d).unwrap()
}

fn xy_squares() -> QuotientAlgebra<Rationals> {
    QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[2, 0])], &[(1, &[0, 2])]]).unwrap()
}

#[test]
fn first_differential_is_multiplication() {
    let mut s = QuotientAlgebra::new(Rationals, 3, Vec::new()).unwrap();
    let m = algebra_module(&mut s, 3);
    let d = strand_differential(&m, 1, 1).unwrap();
    assert_eq!(d.to_dense(), Matrix::identity(Rationals, 3).to_dense());
    let top = strand_differential(&m, 3, 3).unwrap();
    assert_eq!(top.ncols(), 1);
    assert_eq!(cycle_basis(&m, 3, 3).unwrap().ncols(), 0);
}

#[test]
fn squares_strand_one_two() {
    let mut a = xy_squares();
    let m = algebra_module(&mut a, 5);
    let d = strand_differential(&m, 1, 2).unwrap();
    assert_eq!((d.nrows(), d.ncols()), (1, 4));
    assert_eq!(cycle_basis(&m, 1, 2).unwrap().ncols(), 3);
    assert_eq!(boundary_basis(&m, 1, 2).unwrap().ncols(), 1);
    assert_eq!(homology_reps(&m, 1, 2).unwrap().ncols(), 2);
}

#[test]
fn squares_betti_table() {
    let mut a = xy_squares();
    let m = algebra_module(&mut a, 5);
    let t = betti_table(&m, WindowShape::Rect { i_max: 2, j_max: 6 }, &[]).unwrap();
    assert_eq!(t.records(), vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
    assert!((0..=2).all(|i| t.column_complete(i)));
    assert_eq!(t.t(2), crate::Interval::exact(ExtInt::Fin(4)));
}

#[test]
fn regular_sequence_of_squares() {
    let f = PrimeField::new(32003).unwrap();
    let gens: Vec<Polynomial<_>> = (0..3)
        .map(|v| Polynomial::monomial(f, ExponentVector::var(4, v).mul(&ExponentVector::var(4, v))))
        .collect();
    let mut a = QuotientAlgebra::new(f, 4, gens).unwrap();
    let m = algebra_module(&mut a, 8);
    let t = betti_table(&m, WindowShape::Rect { i_max: 4, j_max: 8 }, &[]).unwrap();
    for i in 0..=3 {
        assert_eq!(t.get(i, 2 * i as i64), Some(binomial(3, i)));
    }
    assert_eq!(t.records().len(), 4);
}

#[test]
fn t_value_examples() {
    let mut h =
        QuotientAlgebra::from_i64(Rationals, 3, &[&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]]).unwrap();
    let m = algebra_module(&mut h, 4);
    assert_eq!(t_value(&m, 1, 4).unwrap(), (ExtInt::Fin(2), false));
    let mut s = QuotientAlgebra::new(Rationals, 2, Vec::new()).unwrap();
    let m = algebra_module(&mut s, 5);
    assert_eq!(t_value(&m, 1, 4).unwrap(), (ExtInt::NegInf, false));
    assert_eq!(t_value(&m, 2, 3).unwrap(), (ExtInt::NegInf, true));
}

#[test]
fn cycle_and_boundary_examples() {
    let mut a = xy_squares();
    let m = algebra_module(&mut a, 4);
    assert_eq!(cycle_basis(&m, 0, 0).unwrap().ncols(), 1);
    assert_eq!(boundary_basis(&m, 0, 0).unwrap().ncols(), 0);
    assert_eq!(boundary_basis(&m, 2, 3).unwrap().ncols(), 0);
}

#[test]
fn koszul_pieces_as_modules() {
    let mut s = QuotientAlgebra::new(Rationals, 2, Vec::new()).unwrap();
    let m = algebra_module(&mut s, 8);
    let z0 = submodule_linearize(&m, KoszulPiece::Cycles, 0, 6).unwrap();
    assert_eq!(z0.dims(), m.dims()[..7].to_vec().as_slice());
    // Z_1 of the Koszul complex on (x, y) is free of rank one on y⊗x - x⊗y, degree 2.
    let z1 = submodule_linearize(&m, KoszulPiece::Cycles, 1, 6).unwrap();
    assert_eq!(z1.dims(), &[0, 1, 2, 3, 4, 5]);
    assert!(z1.commutativity_defect().is_none());
    let b1 = submodule_linearize(&m, KoszulPiece::Boundaries, 1, 6).unwrap();
    assert_eq!(b1.dims(), z1.dims());
    let c1 = submodule_linearize(&m, KoszulPiece::Cokernel, 1, 6).unwrap();
    let k1 = submodule_linearize(&m, KoszulPiece::Term, 1, 6).unwrap();
    for d in 1..=6 {
        assert_eq!(c1.dim(d).unwrap() + b1.dim(d).unwrap(), k1.dim(d).unwrap());
    }
}

fn random_quadrics(seed: &[i64], e: usize) -> QuotientAlgebra<PrimeField> {
    let f = PrimeField::new(5).unwrap();
    let monos = crate::gradedring::monomial_basis(e, 2);
    let gens: Vec<Polynomial<_>> = seed
        .chunks(monos.len())
        .map(|c| {
            let terms = c
                .iter()
                .zip(&monos)
                .map(|(&x, m)| (f.from_i64(x), m.clone()))
                .collect();
            Polynomial::new(f, e, terms).unwrap()
        })
        .collect();
    QuotientAlgebra::new(f, e, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn differential_squares_to_zero(seed in proptest::collection::vec(-2i64..3, 12)) {
        let mut a = random_quadrics(&seed, 3);
        let m = algebra_module(&mut a, 6);
        for j in 0..=6i64 {
            for i in 1..3usize {
                let d1 = strand_differential(&m, i, j).unwrap();
                let d2 = strand_differential(&m, i + 1, j).unwrap();
                prop_assert!(d1.mul(&d2).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn euler_characteristic_and_hilbert_numerator(seed in proptest::collection::vec(-2i64..3, 12)) {
        let mut a = random_quadrics(&seed, 3);
        let m = algebra_module(&mut a, 7);
        let t = betti_table(&m, WindowShape::Rect { i_max: 3, j_max: 6 }, &[]).unwrap();
        for j in 0..=6i64 {
            let mut strands = 0i64;
            let mut homology = 0i64;
            for i in 0..=3usize {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                strands += sign * (binomial(3, i) * a.dim(j - i as i64).unwrap()) as i64;
                homology += sign * t.get(i, j).unwrap() as i64;
            }
            prop_assert_eq!(strands, homology);
        }
    }

    #[test]
    fn betti_numbers_ignore_variable_order(seed in proptest::collection::vec(-2i64..3, 12)) {
        let a0 = random_quadrics(&seed, 3);
        let f = *a0.field();
        let perm = [2usize, 0, 1];
        let gens: Vec<Polynomial<_>> = a0
            .generators()
            .iter()
            .map(|g| {
                let terms = g.terms().iter().map(|(c, m)| (*c, ExponentVector(perm.iter().map(|&p| m.0[p]).collect()))).collect();
                Polynomial::new(f, 3, terms).unwrap()
            })
            .collect();
        let mut a1 = QuotientAlgebra::new(f, 3, gens).unwrap();
        let mut a0 = a0;
        let m0 = algebra_module(&mut a0, 6);
        let m1 = algebra_module(&mut a1, 6);
        let shape = WindowShape::Rect { i_max: 3, j_max: 6 };
        prop_assert_eq!(betti_table(&m0, shape, &[]).unwrap().records(), betti_table(&m1, shape, &[]).unwrap().records());
    }
}
