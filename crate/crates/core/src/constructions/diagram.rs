use crate::axioms::Condition;
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::structures::{AlgebraDoc, CheckReport, Kind, Role, Violation};

use super::{require_conditions, Construct};

/// First entry where two families of the same shape differ, as a violation.
fn first_difference(axiom: &str, a: &AlgebraDoc, ra: Role, b: &AlgebraDoc, rb: Role) -> Option<Violation> {
    let n = a.dim();
    for w in 0..a.omega().len() {
        let (x, y) = (a.product(ra, w), b.product(rb, w));
        for i in 0..n {
            for j in 0..n {
                if let Some(k) = (0..n).find(|&k| x.get(i, j, k) != y.get(i, j, k)) {
                    return Some(Violation {
                        axiom_id: axiom.to_string(),
                        omega_indices: vec![a.omega().label(w).to_string()],
                        basis_indices: vec![i + 1, j + 1, k + 1],
                        lhs: x.product(i, j).to_vec(),
                        rhs: y.product(i, j).to_vec(),
                    });
                }
            }
        }
    }
    None
}

/// Folds a construction failure into the diagram report.
fn absorb(result: Result<AlgebraDoc>, report: &mut CheckReport) -> Result<Option<AlgebraDoc>> {
    match result {
        Ok(doc) => Ok(Some(doc)),
        Err(Error::TheoremCheckFailed { construction, report: r }) => {
            report.notes.push(format!("{construction} produced an invalid structure"));
            *report = std::mem::replace(report, CheckReport::pass()).merge(r);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

impl Construct {
    pub fn verify_diagram(&self, doc: &AlgebraDoc) -> Result<CheckReport> {
        self.require_kind(
            doc,
            &[Kind::HomAssocMatchingRb, Kind::PlainAssocMatchingRb],
            "diagram",
        )?;
        let ops = doc.operators().expect("rb kinds carry operators");
        if let Some(w) = ops.weights.iter().position(|s| !s.is_zero()) {
            return Err(Error::NonzeroWeight(doc.omega().label(w).to_string()));
        }
        self.require_pass(doc)?;
        require_conditions(doc, &doc.twist_map(), &[Condition::Commutes])?;

        let mut report = CheckReport::pass();
        let dend = absorb(self.rb_to_dendriform(doc), &mut report)?;
        let path_a = match dend {
            Some(d) => absorb(self.dendriform_to_prelie(&d), &mut report)?,
            None => None,
        };
        let lie = absorb(self.commutator(doc), &mut report)?;
        let path_b = match &lie {
            Some(l) => absorb(self.rb_to_prelie(l), &mut report)?,
            None => None,
        };
        if let (Some(a), Some(b)) = (&path_a, &path_b) {
            report.violations.extend(first_difference("diagram", a, Role::Star, b, Role::Star));
        }
        if let (Some(a), Some(l)) = (&path_a, &lie) {
            // The bracket of the pre-Lie product must be [P x, y] + [x, P y].
            if let Some(bracket) = absorb(self.prelie_commutator(a), &mut report)? {
                let id = LinearMap::identity(doc.field(), doc.dim());
                let bracket_ops = l.operators().expect("rb kinds carry operators");
                let m = l.rb_product().expect("rb kinds carry a product");
                let expected: Vec<_> = bracket_ops
                    .ops
                    .iter()
                    .map(|p| m.precompose(p, &id).add(&m.precompose(&id, p)))
                    .collect();
                let expected_doc = AlgebraDoc::new(
                    doc.field(),
                    doc.dim(),
                    doc.omega().clone(),
                    Kind::CompatibleHomLie,
                    vec![crate::structures::BilinearFamily::new(Role::Bracket, expected)],
                    None,
                    bracket.twist().cloned(),
                )?;
                report
                    .violations
                    .extend(first_difference("diagram-bracket", &bracket, Role::Bracket, &expected_doc, Role::Bracket));
            }
        }
        let notes = std::mem::take(&mut report.notes);
        let mut out = CheckReport::from_violations(report.violations);
        out.notes = notes;
        Ok(out)
    }
}
