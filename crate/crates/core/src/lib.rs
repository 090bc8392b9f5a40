//! Exact computations with commutative subalgebras of matrix rings
//! `M_n(D)` over a division ring `D`: centralizers, closures, radicals,
//! idempotents and the splitting of a maximal commutative subalgebra into
//! local factors.
//!
//! Supported `D`: the rationals, prime fields, and quaternion algebras over
//! the rationals. All arithmetic is exact.
//!
//! ```
//! use maxcomm_core::{algebra_closure, decompose, DMat, Domain};
//!
//! let d = Domain::Prime(2);
//! let n = DMat::jordan_nilpotent(&d, 2);
//! let s = algebra_closure(&d, 2, &[n]);
//! let report = decompose(&s).unwrap();
//! assert_eq!(report.factor_count(), 1);
//! assert!(report.maximal && report.j_equals_n);
//! ```

pub mod centralizer;
pub mod constructions;
pub mod dmat;
pub mod error;
pub mod field;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod subalgebra;

pub use centralizer::{bicommutant, centralizer_basis, centralizer_of_subspace, commutes, ZSubspace};
pub use dmat::{builder, mat_op, Builder, DMat, MatOp, RowReduction, RowSpace};
pub use error::{Error, Result};
pub use field::{BaseField, Scalar};
pub use poly::Poly;
pub use scalar::{make_domain, DElem, Domain, DomainKind, DomainSpec, Subset};
pub use subalgebra::{
    algebra_closure, decompose, fitting_split, idempotents_via_minpoly, is_commutative, is_local,
    is_maximal_commutative, jacobson_radical, nilradical, DecompositionReport, FittingSplit, LocalFactor,
    Subalgebra,
};
