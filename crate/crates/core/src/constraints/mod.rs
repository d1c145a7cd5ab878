//! Polynomial encodings of cardinality constraints, affine restrictions,
//! normalization, and formula equivalence. Coefficients are exact
//! rationals throughout; reduction to a prime field happens only in the
//! refutation machinery.

pub mod io;
mod poly;
mod restriction;
mod sat;
mod system;

pub use poly::{Monomial, Poly, SubstImage, VarKind, VariableId};
pub use restriction::{apply_restriction, Restriction};
pub use sat::sat_bruteforce;
pub use system::{
    canonical_poly_key, check_equiv, complement_instance, encode_card, encode_pm,
    ConstraintSystem, EquationTag, PolyEquation,
};
