//! Exact symbolic machinery for the Rees algebra of the diagonal ideal of a
//! product of two determinantal rings: polynomial arithmetic under the
//! matrix-lex order, Buchberger's algorithm, the explicit Groebner families,
//! Alexander duality, Betti numbers and Cohen-Macaulay tests.

pub mod field;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod pipeline;
pub mod rees;
pub mod squarefree;
pub mod ring;
pub mod variable;

pub use field::{Field, FieldError, FieldKind, PrimeField, Rationals};
pub use matrix::{determinant, PolyMatrix};
pub use monomial::Monomial;
pub use ring::{AlgebraError, PolyRing, Polynomial, TermOrder};
pub use variable::{compare_variables, VarFamily, Variable};
