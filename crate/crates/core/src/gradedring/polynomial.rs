use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::monomial::{monomial_index, ExponentVector};
use crate::exactla::{Field, SparseVec};
use crate::{Error, Result};

/// A polynomial with terms sorted lexicographically descending, distinct monomials
/// and no zero coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<(F::Elem, ExponentVector)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn new(field: F, nvars: usize, terms: Vec<(F::Elem, ExponentVector)>) -> Result<Self> {
        let mut acc: BTreeMap<ExponentVector, F::Elem> = BTreeMap::new();
        for (c, m) in terms {
            if m.nvars() != nvars {
                return Err(Error::Shape(format!(
                    "exponent vector of length {} in {} variables",
                    m.nvars(),
                    nvars
                )));
            }
            match acc.get_mut(&m) {
                Some(x) => *x = field.add(x, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect();
        Ok(Polynomial {
            field,
            nvars,
            terms,
        })
    }

    /// Builds from integer coefficients.
    pub fn from_i64(field: F, nvars: usize, terms: &[(i64, &[u32])]) -> Result<Self> {
        let t = terms
            .iter()
            .map(|(c, e)| (field.from_i64(*c), ExponentVector(e.to_vec())))
            .collect();
        Polynomial::new(field, nvars, t)
    }

    pub fn monomial(field: F, m: ExponentVector) -> Self {
        let nvars = m.nvars();
        let one = field.one();
        Polynomial {
            field,
            nvars,
            terms: alloc::vec![(one, m)],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(F::Elem, ExponentVector)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.iter().map(|(_, m)| m.degree());
        match d.next() {
            Some(first) => d.all(|x| x == first),
            None => true,
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.terms.first().map(|(_, m)| m.degree())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        Polynomial::new(self.field.clone(), self.nvars, t).expect("same variable count")
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .map(|(a, m)| (f.mul(a, c), m.clone()))
            .filter(|(a, _)| !f.is_zero(a))
            .collect();
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut t = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                t.push((f.mul(a, b), m.mul(n)));
            }
        }
        Polynomial::new(f.clone(), self.nvars, t).expect("same variable count")
    }

    pub fn pow(&self, k: u32) -> Self {
        let one = Polynomial::monomial(self.field.clone(), ExponentVector::one(self.nvars));
        (0..k).fold(one, |acc, _| acc.mul(self))
    }

    /// Coordinates in the monomial basis of `S_d`.
    pub fn to_coordinates(&self) -> SparseVec<F::Elem> {
        let mut v: SparseVec<F::Elem> = self
            .terms
            .iter()
            .map(|(c, m)| (monomial_index(&m.0) as u32, c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let (n, d) = self.field.to_fraction(c);
            let coeff = crate::exactla::format_fraction(&n, &d);
            if k > 0 {
                s.push_str(" + ");
            }
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, &a)| {
                        let name = names
                            .get(i)
                            .cloned()
                            .unwrap_or_else(|| format!("x{}", i + 1));
                        if a == 1 {
                            name
                        } else {
                            format!("{name}^{a}")
                        }
                    })
                    .collect();
            if mono.is_empty() {
                s.push_str(&coeff);
            } else if coeff == "1" {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{coeff}*{}", mono.join("*")));
            }
        }
        s
    }
}
