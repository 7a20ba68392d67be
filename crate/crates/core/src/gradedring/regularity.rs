use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::QuotientAlgebra;
use crate::exactla::sparse::Accumulator;
use crate::exactla::{Echelon, Field, SparseVec};
use crate::Result;

const ATTEMPTS: u64 = 4;

impl<F: Field> QuotientAlgebra<F> {
    /// Smallest `r ≤ r_max` for which `reg^S(R) ≤ r` is certified, if any.
    ///
    /// The certificate is a sequence of linear forms `ℓ_1, …, ℓ_s` such that in degree
    /// `m = r + 1` each colon `(ℓ_1..ℓ_{i-1}) : ℓ_i` equals `(ℓ_1..ℓ_{i-1})` and
    /// `(ℓ_1..ℓ_s)` fills `R_m` (the Bayer–Stillman criterion). Only degrees `m` and
    /// `m + 1` are materialized. Forms are pseudo-random and deterministic.
    pub fn certify_regularity(&mut self, r_max: u32) -> Result<Option<u32>> {
        let r_min = self.max_generator_degree().saturating_sub(1);
        for r in r_min..=r_max {
            for attempt in 0..ATTEMPTS {
                if self.regularity_witness(r, attempt)? {
                    return Ok(Some(r));
                }
            }
        }
        Ok(None)
    }

    fn regularity_witness(&mut self, r: u32, seed: u64) -> Result<bool> {
        let m = r + 1;
        if self.max_generator_degree() > m {
            return Ok(false);
        }
        self.precompute(m + 1)?;
        let f = self.field().clone();
        let e = self.nvars();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let forms: Vec<Vec<F::Elem>> = (0..e)
            .map(|_| {
                (0..e)
                    .map(|_| f.from_i64(rng.gen_range(1..30_000)))
                    .collect()
            })
            .collect();
        let dims = [
            self.dim(m as i64 - 1)?,
            self.dim(m as i64)?,
            self.dim(m as i64 + 1)?,
        ];
        let mut acc = Accumulator::new(&f, dims.iter().copied().max().unwrap_or(0));
        let mut lo = Echelon::new(f.clone(), dims[1]);
        let mut hi = Echelon::new(f.clone(), dims[2]);
        for form in &forms {
            if lo.rank() == dims[1] {
                return Ok(true);
            }
            // Injectivity of ℓ_i on R_m / L_m modulo L_{m+1}.
            let mut test = hi.clone();
            for c in lo.free_columns() {
                let v = self.times_form(&mut acc, form, m, &[(c, f.one())])?;
                if test.insert_lead(v).is_none() {
                    return Ok(false);
                }
            }
            for k in 0..dims[0] as u32 {
                lo.insert_lead(self.times_form(&mut acc, form, m - 1, &[(k, f.one())])?);
            }
            for k in 0..dims[1] as u32 {
                hi.insert_lead(self.times_form(&mut acc, form, m, &[(k, f.one())])?);
            }
        }
        Ok(lo.rank() == dims[1])
    }

    fn times_form(
        &self,
        acc: &mut Accumulator<F>,
        form: &[F::Elem],
        d: u32,
        x: &[(u32, F::Elem)],
    ) -> Result<SparseVec<F::Elem>> {
        let f = self.field().clone();
        for (v, c) in form.iter().enumerate() {
            let y = self.act(v, d as i64, x)?;
            acc.add_scaled(&f, c, &y);
        }
        Ok(acc.take(&f))
    }
}
