//! Transformations between structures. Each one checks its preconditions,
//! builds the new structure constants, and re-checks the output against the
//! identities of its declared kind.
//!
//! Failures of the final check surface as [`Error::TheoremCheckFailed`]; a
//! failing precondition as [`Error::PreconditionFailed`] carrying the report
//! of whatever check failed.

mod diagram;
mod lie;
mod splitting;
mod twist;

use crate::axioms::{check_side_conditions_for, check_structure_with, CheckOptions, Condition};
use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, LinearMap, Scalar};
use crate::structures::{AlgebraDoc, BilinearFamily, CheckReport, Kind, OmegaSet, OperatorFamily};

/// Scalars indexed by the labels of a document's index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientFamily {
    coeffs: Vec<(String, Scalar)>,
}

impl CoefficientFamily {
    pub fn new<S: Into<String>>(coeffs: impl IntoIterator<Item = (S, Scalar)>) -> Self {
        CoefficientFamily {
            coeffs: coeffs.into_iter().map(|(l, c)| (l.into(), c)).collect(),
        }
    }

    pub fn get(&self, label: &str) -> Option<&Scalar> {
        self.coeffs.iter().find(|(l, _)| l == label).map(|(_, c)| c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Scalar)> {
        self.coeffs.iter().map(|(l, c)| (l.as_str(), c))
    }

    /// Coefficients in `omega` order; rejects unknown and missing labels.
    fn aligned(&self, omega: &OmegaSet) -> Result<Vec<Scalar>> {
        if let Some((l, _)) = self.coeffs.iter().find(|(l, _)| omega.index_of(l).is_none()) {
            return Err(Error::UnknownLabel(l.clone()));
        }
        omega
            .labels()
            .iter()
            .map(|l| self.get(l).cloned().ok_or_else(|| Error::MissingCoefficient(l.clone())))
            .collect()
    }
}

/// Construction settings.
#[derive(Debug, Clone, Copy)]
pub struct Construct {
    /// Options for every structural check, inputs and outputs alike.
    pub options: CheckOptions,
    /// Largest accepted order for derived algebras.
    pub max_derived_n: u32,
}

impl Default for Construct {
    fn default() -> Self {
        Construct {
            options: CheckOptions::default(),
            max_derived_n: 16,
        }
    }
}

impl Construct {
    fn require_pass(&self, doc: &AlgebraDoc) -> Result<()> {
        let report = check_structure_with(doc, &self.options);
        if report.passed() {
            Ok(())
        } else {
            Err(Error::precondition(
                format!("input does not satisfy the {} identities", doc.kind()),
                Some(report),
            ))
        }
    }

    fn require_kind(&self, doc: &AlgebraDoc, allowed: &[Kind], what: &str) -> Result<()> {
        if allowed.contains(&doc.kind()) {
            Ok(())
        } else {
            Err(Error::precondition(
                format!("{what} does not apply to kind {}", doc.kind()),
                None,
            ))
        }
    }

    fn finish(&self, construction: &'static str, doc: AlgebraDoc) -> Result<AlgebraDoc> {
        let report = check_structure_with(&doc, &self.options);
        if report.passed() {
            Ok(doc)
        } else {
            Err(Error::TheoremCheckFailed { construction, report })
        }
    }
}

fn require_conditions(doc: &AlgebraDoc, p: &LinearMap, conditions: &[Condition]) -> Result<()> {
    let report = check_side_conditions_for(doc, p, conditions);
    if report.passed() {
        Ok(())
    } else {
        let names: Vec<&str> = conditions.iter().map(Condition::as_str).collect();
        Err(Error::precondition(
            format!("side conditions {} fail", names.join(", ")),
            Some(report),
        ))
    }
}

fn require_compatible_map(doc: &AlgebraDoc, p: &LinearMap) -> Result<()> {
    if p.field() != doc.field() {
        return Err(Error::FieldMismatch {
            left: doc.field().to_string(),
            right: p.field().to_string(),
        });
    }
    if p.dim() != doc.dim() {
        return Err(Error::DimensionMismatch {
            expected: doc.dim(),
            found: p.dim(),
        });
    }
    Ok(())
}

fn require_identity_twist(doc: &AlgebraDoc, what: &str) -> Result<()> {
    if doc.has_identity_twist() {
        Ok(())
    } else {
        Err(Error::precondition(
            format!("{what} needs an untwisted input (twist = identity)"),
            None,
        ))
    }
}

/// Applies `f` to every product of every role.
fn map_products(doc: &AlgebraDoc, f: impl Fn(&BilinearMap) -> BilinearMap) -> Vec<BilinearFamily> {
    doc.families()
        .iter()
        .map(|fam| BilinearFamily::new(fam.role, fam.maps.iter().map(&f).collect()))
        .collect()
}

fn assemble(
    template: &AlgebraDoc,
    kind: Kind,
    omega: OmegaSet,
    families: Vec<BilinearFamily>,
    operators: Option<OperatorFamily>,
    twist: Option<LinearMap>,
) -> Result<AlgebraDoc> {
    AlgebraDoc::new(template.field(), template.dim(), omega, kind, families, operators, twist)
}

macro_rules! free_fns {
    ($($(#[$m:meta])* $name:ident($($arg:ident: $ty:ty),*) -> $ret:ty;)*) => {
        $(
            $(#[$m])*
            pub fn $name($($arg: $ty),*) -> Result<$ret> {
                Construct::default().$name($($arg),*)
            }
        )*
    };
}

free_fns! {
    /// Products `p o m` and twist `p` on an untwisted Rota-Baxter structure.
    yau_twist(doc: &AlgebraDoc, p: &LinearMap) -> AlgebraDoc;
    /// Products `p^-1 o m` and identity twist.
    untwist(doc: &AlgebraDoc) -> AlgebraDoc;
    /// The `n`-th derived structure of type `variant` (1 or 2).
    derived_algebra(doc: &AlgebraDoc, n: u32, variant: u8) -> AlgebraDoc;
    /// `m(p x, y)` (variant 1) or `m(p x, p y)` (variant 2) with twist `p`.
    centroid_twist(doc: &AlgebraDoc, p: &LinearMap, variant: u8) -> AlgebraDoc;
    /// `[x, y] = x.y - y.x` for every label.
    commutator(doc: &AlgebraDoc) -> AlgebraDoc;
    /// `[x, y] = x*y - y*x` for every label.
    prelie_commutator(doc: &AlgebraDoc) -> AlgebraDoc;
    /// One product per role, `sum_w a_w m_w`, over the index set `{"*"}`.
    collapse_family(doc: &AlgebraDoc, coeffs: &CoefficientFamily) -> AlgebraDoc;
    /// Every role composed with a (tri)dendriform endomorphism `p`.
    dendriform_twist(doc: &AlgebraDoc, p: &LinearMap) -> AlgebraDoc;
    /// `x.y = x<y + x>y` (plus `x.y` of the middle role).
    dendriform_sum(doc: &AlgebraDoc) -> AlgebraDoc;
    /// `x*y = x>y - y<x`.
    dendriform_to_prelie(doc: &AlgebraDoc) -> AlgebraDoc;
    /// `x<y = x.P(y) + l x.y`, `x>y = P(x).y`.
    rb_to_dendriform(doc: &AlgebraDoc) -> AlgebraDoc;
    /// `x<y = x.P(y)`, `x>y = P(x).y`, middle `l x.y`.
    rb_to_tridendriform(doc: &AlgebraDoc) -> AlgebraDoc;
    /// `x*y = P(x).y - y.P(x) - l y.x`, or `[P(x), y]` for brackets.
    rb_to_prelie(doc: &AlgebraDoc) -> AlgebraDoc;
    /// Compares the two routes from a weight-zero Rota-Baxter structure to
    /// pre-Lie products.
    verify_diagram(doc: &AlgebraDoc) -> CheckReport;
}
