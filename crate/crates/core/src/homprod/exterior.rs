use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::gradedring::ExponentVector;
use crate::koszul::elements;

/// `(-1)^{#{(t, u) ∈ T×U : t > u}}`: the sign with `e_T ∧ e_U = sign · e_{T∪U}` for
/// disjoint `T`, `U`.
pub fn wedge_sign(t: u32, u: u32) -> i64 {
    let inversions: u32 = elements(u).map(|x| (t >> (x + 1)).count_ones()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `e_T ∧ e_U` as `(sign, T ∪ U)`, or `None` when they overlap.
pub fn wedge_basis(t: u32, u: u32) -> Option<(i64, u32)> {
    (t & u == 0).then(|| (wedge_sign(t, u), t | u))
}

/// `Δ(e_T) = Σ_{I ⊆ T} sgn(I, T∖I) e_I ⊗ e_{T∖I}`, as `(I, T∖I, sign)`.
pub fn diagonal(t: u32) -> Vec<(u32, u32, i64)> {
    let mut out = Vec::with_capacity(1 << t.count_ones());
    let mut sub = t;
    loop {
        out.push((sub, t & !sub, wedge_sign(sub, t & !sub)));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & t;
    }
    out.sort_unstable();
    out
}

/// An element of `E ⊗_S E` over the polynomial ring with integer coefficients, keyed
/// by `(I, J, monomial)`.
pub type TensorE = BTreeMap<(u32, u32, ExponentVector), i64>;

/// An element of `E` over the polynomial ring, keyed by `(T, monomial)`.
pub type WedgeS = BTreeMap<(u32, ExponentVector), i64>;

fn add_term<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) {
    let v = map.entry(key).or_insert(0);
    *v += c;
}

fn prune<K: Ord + Clone>(map: BTreeMap<K, i64>) -> BTreeMap<K, i64> {
    map.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// Koszul differential on `E` over `S = k[x_1..x_e]`: `e_t ↦ x_t`.
pub fn koszul_d(w: &WedgeS) -> WedgeS {
    let mut out = BTreeMap::new();
    for ((t, m), c) in w {
        for (s, v) in elements(*t).enumerate() {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            add_term(&mut out, (t & !(1 << v), m.times_var(v)), sign * c);
        }
    }
    prune(out)
}

pub fn diagonal_of(w: &WedgeS) -> TensorE {
    let mut out = BTreeMap::new();
    for ((t, m), c) in w {
        for (i, j, s) in diagonal(*t) {
            add_term(&mut out, (i, j, m.clone()), s * c);
        }
    }
    prune(out)
}

/// `∂' = ∂ ⊗ E`.
pub fn d_left(x: &TensorE) -> TensorE {
    let mut out = BTreeMap::new();
    for ((i, j, m), c) in x {
        for (s, v) in elements(*i).enumerate() {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            add_term(&mut out, (i & !(1 << v), *j, m.times_var(v)), sign * c);
        }
    }
    prune(out)
}

/// `∂'' = E ⊗ ∂`, with the sign `(-1)^{|x|}` on `x ⊗ y`.
pub fn d_right(x: &TensorE) -> TensorE {
    let mut out = BTreeMap::new();
    for ((i, j, m), c) in x {
        let outer = if i.count_ones() % 2 == 0 { 1 } else { -1 };
        for (s, v) in elements(*j).enumerate() {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            add_term(
                &mut out,
                (*i, j & !(1 << v), m.times_var(v)),
                outer * sign * c,
            );
        }
    }
    prune(out)
}

/// The product on `E ⊗ E`: `(x_1 ⊗ x_2)(y_1 ⊗ y_2) = (-1)^{|x_2||y_1|} x_1 y_1 ⊗ x_2 y_2`.
pub fn tensor_product(x: &TensorE, y: &TensorE) -> TensorE {
    let mut out = BTreeMap::new();
    for ((x1, x2, m), c) in x {
        for ((y1, y2, n), d) in y {
            let (Some((s1, z1)), Some((s2, z2))) = (wedge_basis(*x1, *y1), wedge_basis(*x2, *y2))
            else {
                continue;
            };
            let koszul = if (x2.count_ones() * y1.count_ones()) % 2 == 0 {
                1
            } else {
                -1
            };
            add_term(&mut out, (z1, z2, m.mul(n)), koszul * s1 * s2 * c * d);
        }
    }
    prune(out)
}

/// `e_T` with coefficient one.
pub fn basis_wedge(nvars: usize, t: u32) -> WedgeS {
    let mut w = BTreeMap::new();
    w.insert((t, ExponentVector::one(nvars)), 1);
    w
}

/// First subset `T` (over `e` variables) where `∂'Δ = Δ∂ = ∂''Δ` fails.
pub fn check_diagonal_commutes(nvars: usize) -> Option<u32> {
    (0u32..1 << nvars).find(|&t| {
        let w = basis_wedge(nvars, t);
        let delta = diagonal_of(&w);
        let middle = diagonal_of(&koszul_d(&w));
        d_left(&delta) != middle || d_right(&delta) != middle
    })
}

/// First pair `(I, J)` where `∂'∂'' + ∂''∂' ≠ 0` on `e_I ⊗ e_J`.
pub fn check_partials_anticommute(nvars: usize) -> Option<(u32, u32)> {
    let n = 1u32 << nvars;
    for i in 0..n {
        for j in 0..n {
            let mut x = BTreeMap::new();
            x.insert((i, j, ExponentVector::one(nvars)), 1);
            let mut sum = d_left(&d_right(&x));
            for (k, c) in d_right(&d_left(&x)) {
                add_term(&mut sum, k, c);
            }
            if !prune(sum).is_empty() {
                return Some((i, j));
            }
        }
    }
    None
}
