//! Exact combinatorics of eight Schur-like quasisymmetric functions.
//!
//! The crate expands dual immaculate, extended Schur, and their row-strict
//! and advanced variants over the monomial and fundamental bases, entirely in
//! integer arithmetic, and ships exhaustive finite checkers for their
//! symmetry classifications, closed forms, involution pairings, coproduct
//! consistency, and the chromatic description of the strict advanced extended
//! family.

pub mod chromatic;
pub mod composition;
pub mod error;
pub mod family;
pub mod qsym;
pub mod schur;
pub mod shape;
pub mod tableau;
pub mod verify;

pub use composition::{compositions_of, Composition, Partition};
pub use error::{Error, Result};
pub use family::{
    expand_f, expand_m, predicted_symmetric_form, symmetry_witness, Family, SymmetryWitness,
    ALL_FAMILIES,
};
pub use qsym::{
    coproduct_fundamental, Basis, QSymElement, TensorElement, TruncatedPolynomial,
};
pub use shape::{Cell, SkewShape};
pub use tableau::{
    bounded_tableaux, descent_set, f_expansion, m_expansion, packed_tableaux, satisfies,
    standard_tableaux, ColumnScope, ConstraintSpec, DescentKind, StandardTableau, Strictness,
    Tableau,
};
pub use verify::{
    admissible_shapes, check_all_skew_consistency, check_chromatic_identity, check_closed_forms,
    check_psi_pairings, check_skew_consistency, check_witness_inequalities, scan_shapes,
    scan_theorem, symmetry_predicate, Mismatch, ScanReport,
};
