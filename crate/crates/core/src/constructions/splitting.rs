use crate::axioms::Condition;
use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, LinearMap};
use crate::structures::{AlgebraDoc, BilinearFamily, Kind, Role};

use super::{assemble, require_conditions, Construct};

const ASSOC_RB: [Kind; 2] = [Kind::HomAssocMatchingRb, Kind::PlainAssocMatchingRb];
const LIE_RB: [Kind; 2] = [Kind::MatchingHomLieRb, Kind::PlainLieMatchingRb];

/// Per-label maps built from the single product `m`, each operator and weight.
fn per_label(doc: &AlgebraDoc, f: impl Fn(&BilinearMap, &LinearMap, &crate::linalg::Scalar) -> BilinearMap) -> Vec<BilinearMap> {
    let m = doc.rb_product().expect("rb kinds carry a product");
    let ops = doc.operators().expect("rb kinds carry operators");
    ops.ops.iter().zip(&ops.weights).map(|(p, w)| f(m, p, w)).collect()
}

impl Construct {
    fn require_rb_input(&self, doc: &AlgebraDoc, kinds: &[Kind], what: &str) -> Result<()> {
        self.require_kind(doc, kinds, what)?;
        self.require_pass(doc)?;
        require_conditions(doc, &doc.twist_map(), &[Condition::Commutes])
    }

    /// Output over the input's carrier and labels, with an explicit twist.
    fn split_output(&self, doc: &AlgebraDoc, kind: Kind, families: Vec<BilinearFamily>) -> Result<AlgebraDoc> {
        assemble(
            doc,
            kind,
            doc.omega().clone(),
            families,
            None,
            Some(doc.twist_map().into_owned()),
        )
    }

    pub fn rb_to_dendriform(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        self.require_rb_input(doc, &ASSOC_RB, "rb-to-dendriform")?;
        let id = LinearMap::identity(doc.field(), doc.dim());
        let left = per_label(doc, |m, p, w| m.precompose(&id, p).add(&m.scale(w)));
        let right = per_label(doc, |m, p, _| m.precompose(p, &id));
        let out = self.split_output(
            doc,
            Kind::MatchingHomDendriform,
            vec![BilinearFamily::new(Role::Left, left), BilinearFamily::new(Role::Right, right)],
        )?;
        self.finish("rb-to-dendriform", out)
    }

    pub fn rb_to_tridendriform(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        self.require_rb_input(doc, &ASSOC_RB, "rb-to-tridendriform")?;
        let id = LinearMap::identity(doc.field(), doc.dim());
        let left = per_label(doc, |m, p, _| m.precompose(&id, p));
        let middle = per_label(doc, |m, _, w| m.scale(w));
        let right = per_label(doc, |m, p, _| m.precompose(p, &id));
        let out = self.split_output(
            doc,
            Kind::MatchingHomTridendriform,
            vec![
                BilinearFamily::new(Role::Left, left),
                BilinearFamily::new(Role::Middle, middle),
                BilinearFamily::new(Role::Right, right),
            ],
        )?;
        self.finish("rb-to-tridendriform", out)
    }

    pub fn rb_to_prelie(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        let id = LinearMap::identity(doc.field(), doc.dim());
        let star = if LIE_RB.contains(&doc.kind()) {
            let ops = doc.operators().expect("rb kinds carry operators");
            if let Some(w) = ops.weights.iter().position(|s| !s.is_zero()) {
                return Err(Error::NonzeroWeight(doc.omega().label(w).to_string()));
            }
            self.require_rb_input(doc, &LIE_RB, "rb-to-prelie")?;
            per_label(doc, |m, p, _| m.precompose(p, &id))
        } else {
            self.require_rb_input(doc, &ASSOC_RB, "rb-to-prelie")?;
            per_label(doc, |m, p, w| {
                let px_y = m.precompose(p, &id);
                let y_px = m.precompose(&id, p).opposite();
                px_y.sub(&y_px).sub(&m.opposite().scale(w))
            })
        };
        let out = self.split_output(doc, Kind::MatchingHomPrelie, vec![BilinearFamily::new(Role::Star, star)])?;
        self.finish("rb-to-prelie", out)
    }

    pub fn dendriform_sum(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        self.require_kind(
            doc,
            &[Kind::MatchingHomDendriform, Kind::MatchingHomTridendriform],
            "dendriform-sum",
        )?;
        self.require_pass(doc)?;
        let w = doc.omega().len();
        let dot = (0..w)
            .map(|l| {
                doc.families()
                    .iter()
                    .fold(BilinearMap::zero(doc.field(), doc.dim()), |acc, fam| acc.add(&fam.maps[l]))
            })
            .collect();
        let out = assemble(
            doc,
            Kind::CompatibleHomAssoc,
            doc.omega().clone(),
            vec![BilinearFamily::new(Role::Dot, dot)],
            None,
            doc.twist().cloned(),
        )?;
        self.finish("dendriform-sum", out)
    }

    pub fn dendriform_to_prelie(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        self.require_kind(doc, &[Kind::MatchingHomDendriform], "dendriform-to-prelie")?;
        self.require_pass(doc)?;
        let w = doc.omega().len();
        let star = (0..w)
            .map(|l| {
                doc.product(Role::Right, l)
                    .sub(&doc.product(Role::Left, l).opposite())
            })
            .collect();
        let out = assemble(
            doc,
            Kind::MatchingHomPrelie,
            doc.omega().clone(),
            vec![BilinearFamily::new(Role::Star, star)],
            None,
            doc.twist().cloned(),
        )?;
        self.finish("dendriform-to-prelie", out)
    }
}
