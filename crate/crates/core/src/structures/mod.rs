//! The typed data model: index sets, product and operator families, tagged
//! documents, check reports, and the JSON document format.

mod doc;
mod json;
mod kind;
mod report;

pub use doc::{AlgebraDoc, BilinearFamily, OmegaSet, OperatorFamily, SINGLE_PRODUCT_KEY};
pub use json::{doc_to_value, matrix_to_value, parse_doc, parse_matrix, parse_square_matrix, serialize_doc, FORMAT_VERSION};
pub use kind::{Kind, Role};
pub use report::{CheckReport, Verdict, Violation};
