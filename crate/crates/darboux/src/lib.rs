//! Exact computer algebra for polynomial derivations: monomial derivations,
//! weight gradings, diagonal automorphisms over the eighth cyclotomic field,
//! and certified searches for Darboux polynomials and polynomial constants.

pub mod autom;
pub mod certify;
pub mod context;
pub mod cyclotomic;
pub mod derivation;
pub mod error;
pub mod field;
pub mod grading;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod parser;
pub mod poly;
pub mod search;

pub use autom::{product_rule_check, DiagonalAutomorphism};
pub use certify::{
    certify_darboux_free, certify_darboux_free_with, Certificate, CertifyOptions, DegreeNullity,
    DegreeTiming, EliminationRecord, SymmetryRecord, Verdict, Witness,
};
pub use context::VarContext;
pub use cyclotomic::Cyc8;
pub use derivation::{is_darboux_pair, DarbouxPair, Derivation, ExponentMatrix};
pub use error::{Error, Result};
pub use field::{Field, Rational};
pub use grading::{
    derivation_homogeneity, find_symmetry_weights, homogeneous_components, homogeneous_degree,
    SymmetrySolution, WeightVector,
};
pub use io::{
    read_automorphism_spec, read_derivation_spec, AutomorphismSpec, DerivationSpec,
};
pub use linalg::{dense_nullspace, ExactMatrix};
pub use monomial::{monomials_of_degree, Monomial};
pub use parser::{parse_poly, parse_scalar};
pub use poly::Poly;
pub use search::{
    constants_basis, constants_basis_inhomogeneous, constants_system,
    darboux_basis_fixed_cofactor, eliminate_cofactors, standard_shift, AssembledSystem,
    EliminationEntry, EliminationReport,
};
