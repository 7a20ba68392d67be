use proptest::prelude::*;
use syzygy_core::corpus::{edge_ideal, Graph};
use syzygy_core::exactla::{Field, PrimeField, Rationals};
use syzygy_core::gradedring::{
    binomial, linearize_module, ExponentVector, LinearizedModule, Polynomial, Presentation,
    QuotientAlgebra,
};
use syzygy_core::koszul::{betti_table, BettiTable, WindowShape};
use syzygy_core::resolve::minimal_resolution;

fn graph(v: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .collect();
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::new(v, &edges).unwrap()
}

/// `dim S_d` for `e` variables.
fn poly_dim(e: usize, d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        binomial(e + d as usize - 1, e - 1) as i64
    }
}

fn full_table<F: Field>(a: &mut QuotientAlgebra<F>, j_max: i64) -> BettiTable {
    a.precompute(j_max as u32 + 1).unwrap();
    let m = LinearizedModule::algebra(a, j_max as u32 + 1).unwrap();
    betti_table(
        &m,
        WindowShape::Rect {
            i_max: a.nvars(),
            j_max,
        },
        &[],
    )
    .unwrap()
}

/// `HF_R(d) = sum (-1)^i beta_ij dim S_{d-j}`, using every Betti number of degree `<= d`.
fn check_alternating_sum<F: Field>(a: &mut QuotientAlgebra<F>, j_max: i64) -> BettiTable {
    let table = full_table(a, j_max);
    let e = a.nvars();
    let hf = a.hilbert_function(j_max as u32).unwrap();
    for d in 0..=j_max {
        let sum: i64 = table
            .records()
            .iter()
            .filter(|&&(_, j, _)| j <= d)
            .map(|&(i, j, b)| if i % 2 == 0 { 1 } else { -1 } * b as i64 * poly_dim(e, d - j))
            .sum();
        assert_eq!(sum, hf[d as usize] as i64, "degree {d}");
    }
    table
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn edge_ideals_satisfy_the_hilbert_identity(v in 2usize..6, mask in any::<u32>(), p in prop::sample::select(vec![0u64, 2, 3])) {
        let g = graph(v, mask);
        let entry = edge_ideal(&g, p);
        let j_max = 2 * v as i64;
        let table = if p == 0 {
            check_alternating_sum(&mut entry.algebra(Rationals).unwrap(), j_max)
        } else {
            check_alternating_sum(&mut entry.algebra(PrimeField::new(p).unwrap()).unwrap(), j_max)
        };
        prop_assert_eq!(table.get(1, 2), Some(g.edges.len()));
        // The Taylor resolution bounds the degree of every i-th syzygy of squarefree quadrics by 2i.
        for (i, j, _) in table.records() {
            prop_assert!(j <= 2 * i as i64 && i <= v);
        }
    }

    #[test]
    fn random_quadrics_agree_with_resolution(
        e in 2usize..4,
        coeffs in prop::collection::vec(prop::collection::vec(0i64..7, 6), 1..4),
    ) {
        let f = PrimeField::new(7).unwrap();
        let quads: Vec<ExponentVector> = (0..e)
            .flat_map(|a| (a..e).map(move |b| {
                let mut x = vec![0u32; e];
                x[a] += 1;
                x[b] += 1;
                ExponentVector(x)
            }))
            .collect();
        let polys: Vec<Polynomial<PrimeField>> = coeffs
            .iter()
            .map(|cs| {
                let terms = quads.iter().zip(cs).filter(|(_, &c)| c != 0).map(|(m, &c)| (f.from_i64(c), m.clone())).collect();
                Polynomial::new(f, e, terms).unwrap()
            })
            .filter(|p| !p.is_zero())
            .collect();
        let mut a = QuotientAlgebra::new(f, e, polys.clone()).unwrap();
        check_alternating_sum(&mut a, 2 * e as i64 + 1);

        let mut s = QuotientAlgebra::new(f, e, Vec::new()).unwrap();
        s.precompute(8).unwrap();
        let m = linearize_module(&s, &Presentation::cyclic(&polys).unwrap(), 8).unwrap();
        let tor = minimal_resolution(&s, &m, e, 6).unwrap().profile(e);
        let koszul = betti_table(&m, WindowShape::Rect { i_max: e, j_max: 6 }, &[]).unwrap();
        for i in 0..=e {
            for j in 0..=6 {
                prop_assert_eq!(tor.get(i, j), koszul.get(i, j), "({}, {})", i, j);
            }
        }
    }
}
