use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::algebra::QuotientAlgebra;
use super::monomial::ExponentVector;
use super::polynomial::Polynomial;
use crate::exactla::{parse_fraction, Echelon, Field, FieldSpec};
use crate::{Error, Result};

/// An exact coefficient `numer/denom`, kept as written so descriptions round-trip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coefficient {
    pub numer: BigInt,
    pub denom: BigInt,
}

impl Coefficient {
    pub fn integer(n: i64) -> Self {
        Coefficient {
            numer: BigInt::from(n),
            denom: BigInt::one(),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (numer, denom) = parse_fraction(s)?;
        Some(Coefficient { numer, denom })
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exactla::format_fraction(&self.numer, &self.denom))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Coefficient,
    pub exponents: Vec<u32>,
}

/// A field-independent description of `S/J`: characteristic, variable names and
/// generators as lists of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDescription {
    pub characteristic: u64,
    pub variables: Vec<String>,
    pub generators: Vec<Vec<Term>>,
}

impl IdealDescription {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.characteristic)
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Generators as polynomials over `field`, whose characteristic must match.
    pub fn polynomials<F: Field>(&self, field: &F) -> Result<Vec<Polynomial<F>>> {
        if field.characteristic() != self.characteristic {
            return Err(Error::FieldMismatch {
                left: self.characteristic,
                right: field.characteristic(),
            });
        }
        let e = self.nvars();
        self.generators
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let terms = g
                    .iter()
                    .map(|t| {
                        if t.exponents.len() != e {
                            return Err(Error::Invalid(format!(
                                "generator {gi}: exponent list of length {} for {e} variables",
                                t.exponents.len()
                            )));
                        }
                        let c = field
                            .from_fraction(&t.coefficient.numer, &t.coefficient.denom)
                            .ok_or_else(|| {
                                Error::Invalid(format!(
                                    "generator {gi}: denominator vanishes in the field"
                                ))
                            })?;
                        Ok((c, ExponentVector(t.exponents.clone())))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Polynomial::new(field.clone(), e, terms)
            })
            .collect()
    }

    pub fn algebra<F: Field>(&self, field: F) -> Result<QuotientAlgebra<F>> {
        let polys = self.polynomials(&field)?;
        QuotientAlgebra::new(field, self.nvars(), polys)
    }

    pub fn from_polynomials<F: Field>(
        field: &F,
        variables: Vec<String>,
        gens: &[Polynomial<F>],
    ) -> Self {
        let generators = gens
            .iter()
            .map(|g| {
                g.terms()
                    .iter()
                    .map(|(c, m)| {
                        let (numer, denom) = field.to_fraction(c);
                        Term {
                            coefficient: Coefficient { numer, denom },
                            exponents: m.0.clone(),
                        }
                    })
                    .collect()
            })
            .collect();
        IdealDescription {
            characteristic: field.characteristic(),
            variables,
            generators,
        }
    }
}

/// Default names `x1, …, xe`.
pub fn default_variable_names(e: usize) -> Vec<String> {
    (1..=e).map(|i| format!("x{i}")).collect()
}

/// Result of removing the linear forms of an ideal.
#[derive(Debug, Clone)]
pub struct LinearElimination<F: Field> {
    /// Indices of the original variables that survive, in order.
    pub kept: Vec<usize>,
    /// The remaining generators, in the surviving variables.
    pub generators: Vec<Polynomial<F>>,
}

/// Eliminates the span of the linear generators: each pivot variable of the reduced
/// linear forms is substituted by minus the rest of its row, which lowers `e` by the
/// number of independent linear forms. Constant generators are rejected.
pub fn eliminate_linear_forms<F: Field>(
    field: &F,
    nvars: usize,
    gens: &[Polynomial<F>],
) -> Result<LinearElimination<F>> {
    let mut lin = Echelon::new(field.clone(), nvars);
    for (index, g) in gens.iter().enumerate() {
        match g.degree() {
            _ if g.is_zero() => {}
            None => return Err(Error::NotHomogeneous { index }),
            Some(0) => return Err(Error::UnitIdeal { index }),
            Some(1) => {
                lin.insert_lead(g.to_coordinates());
            }
            Some(_) => {}
        }
    }
    let rows = lin.rref_rows();
    let mut subst: BTreeMap<usize, Polynomial<F>> = BTreeMap::new();
    for r in &rows {
        let p = r[0].0 as usize;
        let terms = r[1..]
            .iter()
            .map(|(c, x)| (field.neg(x), ExponentVector::var(nvars, *c as usize)))
            .collect();
        subst.insert(p, Polynomial::new(field.clone(), nvars, terms)?);
    }
    let kept: Vec<usize> = (0..nvars).filter(|v| !subst.contains_key(v)).collect();
    let mut out = Vec::new();
    for g in gens {
        if g.degree().is_none_or(|d| d < 2) {
            continue;
        }
        let mut acc = Polynomial::zero(field.clone(), nvars);
        for (c, m) in g.terms() {
            let mut t = Polynomial::monomial(field.clone(), ExponentVector::one(nvars)).scale(c);
            for (v, &a) in m.0.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let base = match subst.get(&v) {
                    Some(s) => s.clone(),
                    None => Polynomial::monomial(field.clone(), ExponentVector::var(nvars, v)),
                };
                t = t.mul(&base.pow(a));
            }
            acc = acc.add(&t);
        }
        if acc.is_zero() {
            continue;
        }
        let terms = acc
            .terms()
            .iter()
            .map(|(c, m)| {
                (
                    c.clone(),
                    ExponentVector(kept.iter().map(|&v| m.0[v]).collect()),
                )
            })
            .collect();
        out.push(Polynomial::new(field.clone(), kept.len(), terms)?);
    }
    Ok(LinearElimination {
        kept,
        generators: out,
    })
}
