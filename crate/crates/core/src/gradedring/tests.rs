use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::exactla::{Field, PrimeField, Rationals};
use crate::Error;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn xy_squares() -> QuotientAlgebra<Rationals> {
    QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[2, 0])], &[(1, &[0, 2])]]).unwrap()
}

#[test]
fn ideal_piece_examples() {
    let mut a = QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[2, 0])]]).unwrap();
    a.precompute(3).unwrap();
    assert_eq!(a.ideal_piece(3).unwrap().nrows(), 2);
    let b = xy_squares();
    assert_eq!(b.ideal_piece(2).unwrap().nrows(), 2);
}

#[test]
fn algebra_piece_examples() {
    let mut a = xy_squares();
    a.precompute(4).unwrap();
    assert_eq!(a.hilbert_function(4).unwrap(), vec![1, 2, 1, 0, 0]);
    let (basis, _) = a.algebra_piece(2).unwrap();
    assert_eq!(basis, vec![ExponentVector(vec![1, 1])]);

    let mut s = QuotientAlgebra::new(Rationals, 3, Vec::new()).unwrap();
    s.precompute(5).unwrap();
    for d in 0..=5 {
        assert_eq!(s.dim(d).unwrap(), monomial_count(3, d as usize));
    }
}

#[test]
fn dimension_identity() {
    let mut a = QuotientAlgebra::from_i64(
        PrimeField::new(101).unwrap(),
        3,
        &[
            &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])],
            &[(2, &[2, 0, 0]), (3, &[0, 1, 1])],
        ],
    )
    .unwrap();
    a.precompute(6).unwrap();
    for d in 0..=6u32 {
        assert_eq!(
            a.ideal_dim(d).unwrap() + a.dim(d as i64).unwrap(),
            monomial_count(3, d as usize)
        );
    }
}

#[test]
fn normal_form_examples() {
    let a = xy_squares();
    let x2 = Polynomial::from_i64(Rationals, 2, &[(1, &[2, 0])]).unwrap();
    assert!(a.normal_form(&x2).unwrap().is_empty());
    let xy = Polynomial::from_i64(Rationals, 2, &[(1, &[1, 1])]).unwrap();
    assert_eq!(a.normal_form(&xy).unwrap(), vec![(0, q(1))]);

    let b = QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[2, 0]), (-1, &[0, 2])]]).unwrap();
    let f = Polynomial::from_i64(Rationals, 2, &[(1, &[2, 0]), (1, &[1, 1])]).unwrap();
    // Standard basis of R_2 is (xy, y^2); x^2 + xy ≡ xy + y^2.
    assert_eq!(b.normal_form(&f).unwrap(), vec![(0, q(1)), (1, q(1))]);

    let mixed = Polynomial::from_i64(Rationals, 2, &[(1, &[2, 0]), (1, &[1, 0])]).unwrap();
    assert!(matches!(
        a.normal_form(&mixed),
        Err(Error::NotHomogeneous { .. })
    ));
}

#[test]
fn action_matrix_examples() {
    let mut a = xy_squares();
    a.precompute(3).unwrap();
    // x: R_0 → R_1 sends 1 to x.
    assert_eq!(a.action_matrix(0, 0).unwrap().column(0), &vec![(0, q(1))]);
    // x: R_1 → R_2 kills x and sends y to xy.
    let m = a.action_matrix(0, 1).unwrap();
    assert!(m.column(0).is_empty());
    assert_eq!(m.column(1), &vec![(0, q(1))]);
    // y: R_2 → R_3 = 0.
    assert_eq!(a.action_matrix(1, 2).unwrap().nrows(), 0);
}

#[test]
fn rejects_linear_and_inhomogeneous_generators() {
    let r = QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[1, 0])]]);
    assert!(matches!(r, Err(Error::LinearGenerator { index: 0 })));
    let r = QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[2, 0]), (1, &[1, 0])]]);
    assert!(matches!(r, Err(Error::NotHomogeneous { index: 0 })));
}

#[test]
fn linear_forms_are_eliminated() {
    let f = Rationals;
    // (x - y, x^2 - z^2) in k[x,y,z] becomes (y^2 - z^2) in k[y,z].
    let gens = vec![
        Polynomial::from_i64(f, 3, &[(1, &[1, 0, 0]), (-1, &[0, 1, 0])]).unwrap(),
        Polynomial::from_i64(f, 3, &[(1, &[2, 0, 0]), (-1, &[0, 0, 2])]).unwrap(),
    ];
    let el = eliminate_linear_forms(&f, 3, &gens).unwrap();
    assert_eq!(el.kept, vec![1, 2]);
    let expect = Polynomial::from_i64(f, 2, &[(1, &[2, 0]), (-1, &[0, 2])]).unwrap();
    assert_eq!(el.generators, vec![expect]);
}

#[test]
fn linearize_examples() {
    let mut s = QuotientAlgebra::new(Rationals, 2, Vec::new()).unwrap();
    s.precompute(6).unwrap();
    let free = LinearizedModule::free(&s, &[0, 1], 4).unwrap();
    assert_eq!(free.dims(), &[1, 3, 5, 7, 9]);

    let k = linearize_module(&s, &Presentation::residue_field(Rationals, 2), 4).unwrap();
    assert_eq!(
        (k.dim(0).unwrap(), k.dim(1).unwrap(), k.dim(7).unwrap()),
        (1, 0, 0)
    );
    assert_eq!(k.top(), Some(0));

    let x = Polynomial::from_i64(Rationals, 2, &[(1, &[1, 0])]).unwrap();
    let m = linearize_module(&s, &Presentation::cyclic(&[x]).unwrap(), 5).unwrap();
    assert_eq!(m.dims(), &[1, 1, 1, 1, 1, 1]);
    assert!(m.commutativity_defect().is_none());

    let mut a = xy_squares();
    a.precompute(4).unwrap();
    let trivial = Presentation {
        generator_degrees: vec![0],
        relations: Vec::new(),
    };
    let r = linearize_module(&a, &trivial, 4).unwrap();
    let direct = LinearizedModule::algebra(&a, 4).unwrap();
    assert_eq!(r.dim(2).unwrap(), direct.dim(2).unwrap());
    assert_eq!(r.top(), Some(2));
    for v in 0..2 {
        for d in 0..2 {
            assert_eq!(
                r.action_matrix(v, d).unwrap(),
                direct.action_matrix(v, d).unwrap()
            );
        }
    }
}

#[test]
fn inconsistent_presentation_is_rejected() {
    let s = QuotientAlgebra::new(Rationals, 2, Vec::new()).unwrap();
    let x = Polynomial::from_i64(Rationals, 2, &[(1, &[1, 0])]).unwrap();
    let p = Presentation {
        generator_degrees: vec![0],
        relations: vec![Relation {
            degree: 2,
            components: vec![x],
        }],
    };
    assert!(matches!(
        linearize_module(&s, &p, 3),
        Err(Error::InconsistentDegrees { relation: 0 })
    ));
}

#[test]
fn krull_dimension_examples() {
    let mut a = xy_squares();
    a.precompute(8).unwrap();
    assert_eq!(a.krull_dim_estimate(8).unwrap(), (0, true));
    let mut s = QuotientAlgebra::new(Rationals, 2, Vec::new()).unwrap();
    s.precompute(8).unwrap();
    assert_eq!(s.krull_dim_estimate(8).unwrap(), (2, true));
    let (_, stable) = s.krull_dim_estimate(2).unwrap();
    assert!(!stable);
}

#[test]
fn initial_ideal_certificate() {
    // (x^2 - y^2, xy) has lex-initial ideal (x^2, xy, y^3): not quadratic.
    let mut a = QuotientAlgebra::from_i64(
        Rationals,
        2,
        &[&[(1, &[2, 0]), (-1, &[0, 2])], &[(1, &[1, 1])]],
    )
    .unwrap();
    let c = a.certify_initial_ideal(10).unwrap().unwrap();
    assert!(!c.is_quadratic());
    assert_eq!(c.degree_bound, 3);
    assert!(c.generators.contains(&ExponentVector(vec![0, 3])));

    let mut b = xy_squares();
    let c = b.certify_initial_ideal(10).unwrap().unwrap();
    assert!(c.is_quadratic());
    assert_eq!(c.betti_column_bound(2, 2), crate::ExtInt::Fin(4));
    assert_eq!(c.betti_column_bound(2, 3), crate::ExtInt::NegInf);
}

/// Monomials of degree `d` divisible by none of `gens`: the combinatorial oracle for
/// standard monomials of a monomial ideal.
fn outside_monomial_ideal(e: usize, d: u32, gens: &[Vec<u32>]) -> Vec<ExponentVector> {
    monomial_basis(e, d)
        .into_iter()
        .filter(|m| !gens.iter().any(|g| ExponentVector(g.clone()).divides(m)))
        .collect()
}

proptest! {
    #[test]
    fn monomial_quotients_match_oracle(gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 3), 1..4)) {
        let gens: Vec<Vec<u32>> = gens.into_iter().filter(|g| g.iter().sum::<u32>() >= 2).collect();
        let f = PrimeField::new(3).unwrap();
        let ps = gens.iter().map(|g| Polynomial::monomial(f, ExponentVector(g.clone()))).collect();
        let mut a = QuotientAlgebra::new(f, 3, ps).unwrap();
        a.precompute(5).unwrap();
        for d in 0..=5u32 {
            let (basis, _) = a.algebra_piece(d).unwrap();
            prop_assert_eq!(basis, outside_monomial_ideal(3, d, &gens));
        }
    }

    #[test]
    fn actions_commute_and_normal_form_fixes_standard(seed in proptest::collection::vec(-4i64..5, 12)) {
        let f = PrimeField::new(7).unwrap();
        let q1: Vec<(i64, &[u32])> = vec![(seed[0], &[2, 0, 0]), (seed[1], &[1, 1, 0]), (seed[2], &[0, 1, 1]), (seed[3], &[0, 0, 2])];
        let q2: Vec<(i64, &[u32])> = vec![(seed[4], &[1, 0, 1]), (seed[5], &[0, 2, 0]), (seed[6], &[1, 1, 0]), (1, &[0, 0, 2])];
        let mut a = QuotientAlgebra::from_i64(f, 3, &[&q1, &q2]).unwrap();
        a.precompute(5).unwrap();
        let m = LinearizedModule::algebra(&a, 5).unwrap();
        prop_assert!(m.commutativity_defect().is_none());
        for d in 0..=5u32 {
            let (basis, n) = a.algebra_piece(d).unwrap();
            for (k, mono) in basis.into_iter().enumerate() {
                let nf = a.normal_form(&Polynomial::monomial(f, mono)).unwrap();
                prop_assert_eq!(nf, vec![(k as u32, f.one())]);
            }
            prop_assert_eq!(n + a.ideal_dim(d).unwrap(), monomial_count(3, d as usize));
        }
    }
}

#[test]
fn regularity_certificates() {
    assert_eq!(xy_squares().certify_regularity(4).unwrap(), Some(2));
    let mut conic =
        QuotientAlgebra::from_i64(Rationals, 3, &[&[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]]).unwrap();
    assert_eq!(conic.certify_regularity(4).unwrap(), Some(1));
    let mut poly = QuotientAlgebra::from_i64(Rationals, 3, &[]).unwrap();
    assert_eq!(poly.certify_regularity(2).unwrap(), Some(0));
    let mut cubic = QuotientAlgebra::from_i64(
        PrimeField::new(5).unwrap(),
        2,
        &[&[(1, &[3, 0]), (1, &[0, 3])]],
    )
    .unwrap();
    assert_eq!(cubic.certify_regularity(4).unwrap(), Some(2));
    // Two disjoint edges: regularity 2, so asking for at most 1 fails.
    let mut edges = QuotientAlgebra::from_i64(
        Rationals,
        4,
        &[&[(1, &[1, 1, 0, 0])], &[(1, &[0, 0, 1, 1])]],
    )
    .unwrap();
    assert_eq!(edges.certify_regularity(1).unwrap(), None);
    assert_eq!(edges.certify_regularity(3).unwrap(), Some(2));
}

#[test]
fn regularity_certificate_matches_betti_tables() {
    use crate::koszul::{betti_table, WindowShape};
    for entry in crate::corpus::builtin() {
        let gens = entry.ideal.polynomials(&Rationals).unwrap();
        let mut alg = QuotientAlgebra::new(Rationals, entry.nvars(), gens).unwrap();
        let r = alg
            .certify_regularity(5)
            .unwrap()
            .expect("small regularity");
        let e = entry.nvars();
        alg.precompute((e as u32) + r + 1).unwrap();
        let m = LinearizedModule::algebra(&alg, e as u32 + r + 1).unwrap();
        let t = betti_table(
            &m,
            WindowShape::Rows {
                i_max: e,
                row_max: r as i64 + 1,
            },
            &[],
        )
        .unwrap();
        let seen = t
            .records()
            .iter()
            .map(|&(i, j, _)| j - i as i64)
            .max()
            .unwrap();
        assert_eq!(seen, r as i64, "{}", entry.name);
    }
}
