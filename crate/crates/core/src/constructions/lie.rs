use crate::error::{Error, Result};
use crate::linalg::BilinearMap;
use crate::structures::{AlgebraDoc, BilinearFamily, CheckReport, Kind, OmegaSet, Role, Violation};

use super::{assemble, CoefficientFamily, Construct};

/// Checks `l_a P_b(yx) = l_b P_a(yx)` on basis pairs: the condition under
/// which commutators of a weighted Rota-Baxter family stay Rota-Baxter.
fn weight_symmetry(doc: &AlgebraDoc) -> CheckReport {
    let ops = doc.operators().expect("rb kinds carry operators");
    let m = doc.rb_product().expect("rb kinds carry a product");
    let (n, w) = (doc.dim(), doc.omega().len());
    let mut violations = Vec::new();
    for a in 0..w {
        for b in 0..w {
            for i in 0..n {
                for j in 0..n {
                    let yx = m.product(j, i);
                    let lhs: Vec<_> = ops.ops[b].apply_unchecked(yx).iter().map(|s| &ops.weights[a] * s).collect();
                    let rhs: Vec<_> = ops.ops[a].apply_unchecked(yx).iter().map(|s| &ops.weights[b] * s).collect();
                    if lhs != rhs {
                        violations.push(Violation {
                            axiom_id: "weight-symmetry".into(),
                            omega_indices: vec![doc.omega().label(a).into(), doc.omega().label(b).into()],
                            basis_indices: vec![i + 1, j + 1],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    CheckReport::from_violations(violations)
}

impl Construct {
    pub fn commutator(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        let kind = match doc.kind() {
            Kind::MatchingHomAssoc | Kind::CompatibleHomAssoc => Kind::CompatibleHomLie,
            Kind::TotallyCompatibleHomAssoc => Kind::MatchingHomLie,
            Kind::HomAssocMatchingRb => Kind::MatchingHomLieRb,
            Kind::PlainAssocMatchingRb => Kind::PlainLieMatchingRb,
            k => {
                return Err(Error::precondition(
                    format!("commutator needs an associative kind, found {k}"),
                    None,
                ))
            }
        };
        self.require_pass(doc)?;
        if kind.is_rb() {
            let report = weight_symmetry(doc);
            if !report.passed() {
                return Err(Error::precondition(
                    "weights and operators are not symmetric on products",
                    Some(report),
                ));
            }
        }
        let fam = BilinearFamily::new(
            Role::Bracket,
            doc.families()[0].maps.iter().map(BilinearMap::antisymmetrize).collect(),
        );
        let out = assemble(doc, kind, doc.omega().clone(), vec![fam], doc.operators().cloned(), doc.twist().cloned())?;
        self.finish("commutator", out)
    }

    pub fn prelie_commutator(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        self.require_kind(doc, &[Kind::MatchingHomPrelie], "prelie-commutator")?;
        self.require_pass(doc)?;
        let fam = BilinearFamily::new(
            Role::Bracket,
            doc.families()[0].maps.iter().map(BilinearMap::antisymmetrize).collect(),
        );
        let out = assemble(
            doc,
            Kind::CompatibleHomLie,
            doc.omega().clone(),
            vec![fam],
            None,
            doc.twist().cloned(),
        )?;
        self.finish("prelie-commutator", out)
    }

    pub fn collapse_family(&self, doc: &AlgebraDoc, coeffs: &CoefficientFamily) -> Result<AlgebraDoc> {
        if doc.kind().is_rb() {
            return Err(Error::precondition(
                format!("collapse needs a family of products, found {}", doc.kind()),
                None,
            ));
        }
        let a = coeffs.aligned(doc.omega())?;
        self.require_pass(doc)?;
        let field = doc.field();
        let families = doc
            .families()
            .iter()
            .map(|fam| {
                let mut acc = BilinearMap::zero(field, doc.dim());
                for (m, c) in fam.maps.iter().zip(&a) {
                    acc = acc.add(&m.scale(c));
                }
                BilinearFamily::single(fam.role, acc)
            })
            .collect();
        let out = assemble(
            doc,
            doc.kind(),
            OmegaSet::singleton("*"),
            families,
            None,
            doc.twist().cloned(),
        )?;
        self.finish("collapse", out)
    }
}
