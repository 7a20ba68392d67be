//! Monomials, polynomials, quotient algebras `R = S/J` and graded modules realized
//! by their pieces and variable actions.

mod algebra;
mod description;
mod module;
mod monomial;
mod polynomial;
mod regularity;

pub use algebra::{InitialIdeal, QuotientAlgebra, MAX_PIECE};
pub use description::{
    default_variable_names, eliminate_linear_forms, Coefficient, IdealDescription,
    LinearElimination, Term,
};
pub use module::{
    linearize_module, quotient_by_spans, submodule_from_spans, FreeLayout, FreeModule,
    LinearizedModule, Presentation, Relation,
};
pub use monomial::{binomial, monomial_basis, monomial_count, monomial_index, ExponentVector};
pub use polynomial::Polynomial;

#[cfg(test)]
mod tests;
