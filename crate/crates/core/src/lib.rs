//! Finite-dimensional matching Hom-algebraic structures over exact fields.
//!
//! Structures are given by structure constants over the rationals or a prime
//! field. The crate checks their defining identities on basis tuples, runs
//! the standard constructions between them (Yau twists, Rota-Baxter
//! splittings, commutators, ...) with the output re-checked every time, and
//! enumerates Rota-Baxter families over small prime fields.
//!
//! ```
//! use halg::{axioms, constructions, search};
//!
//! let doc = search::catalog_fixture("N2-Pnil-w0").unwrap();
//! let dend = constructions::rb_to_dendriform(&doc).unwrap();
//! assert!(axioms::check_structure(&dend).passed());
//! ```

pub mod axioms;
pub mod constructions;
pub mod error;
pub mod linalg;
pub mod search;
pub mod structures;

pub use error::{Error, Result};
pub use linalg::{BilinearMap, FieldSpec, LinearMap, Scalar, Vector};
pub use structures::{
    parse_doc, serialize_doc, AlgebraDoc, BilinearFamily, CheckReport, Kind, OmegaSet, OperatorFamily, Role,
    Verdict, Violation,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/documents.md")]
    mod documents {}
    #[doc = include_str!("../../../book/src/checking.md")]
    mod checking {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
