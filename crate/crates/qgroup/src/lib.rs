//! Quantum-group expressions for the built-in algebras: universal R-matrices,
//! antipode and iterated coproduct on expressions, and the Drinfeld elements
//! `T`, `U` and `C` evaluated in representations.

pub mod algebraic;
pub mod axioms;
pub mod drinfeld;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod poly;

pub use algebraic::{algebraic_rep, algebraic_source, AlgebraicSource, Convention};
pub use axioms::{check_hopf_axioms, HopfCheck};
pub use drinfeld::{
    drinfeld_c, drinfeld_c_hexagon, drinfeld_c_placed, drinfeld_t, drinfeld_u, sl2_coefficient, universal_r,
    universal_r_for, LegOrder, ROUTE_TOL,
};
pub use error::{QError, Result};
pub use expr::{eval_universal, eval_universal_multi, Term, UniversalExpr};
pub use hopf::{CoproductTerm, Factor, GenInfo, HopfPresentation, HopfRep, Word};
pub use poly::{Affine, CartanPoly, Var};
