use crate::axioms::{check_morphism, Condition};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::structures::{AlgebraDoc, Kind};

use super::{
    assemble, map_products, require_compatible_map, require_conditions, require_identity_twist, Construct,
};

impl Construct {
    pub fn yau_twist(&self, doc: &AlgebraDoc, p: &LinearMap) -> Result<AlgebraDoc> {
        if !doc.kind().is_rb() {
            return Err(Error::precondition(
                format!("yau-twist needs a Rota-Baxter kind, found {}", doc.kind()),
                None,
            ));
        }
        require_identity_twist(doc, "yau-twist")?;
        require_compatible_map(doc, p)?;
        self.require_pass(doc)?;
        require_conditions(doc, p, &[Condition::Endomorphism, Condition::Commutes])?;
        let out = assemble(
            doc,
            doc.kind().hom_counterpart(),
            doc.omega().clone(),
            map_products(doc, |m| m.compose_left(p)),
            doc.operators().cloned(),
            Some(p.clone()),
        )?;
        self.finish("yau-twist", out)
    }

    pub fn untwist(&self, doc: &AlgebraDoc) -> Result<AlgebraDoc> {
        let plain = doc.kind().plain_counterpart().ok_or_else(|| {
            Error::precondition(format!("untwist needs a Rota-Baxter kind, found {}", doc.kind()), None)
        })?;
        if doc.kind().is_plain() {
            self.require_pass(doc)?;
            return Ok(doc.clone());
        }
        let p = doc.twist_map().into_owned();
        let inv = p.invert()?;
        self.require_pass(doc)?;
        require_conditions(doc, &p, &[Condition::Multiplicative, Condition::Commutes])?;
        let out = assemble(
            doc,
            plain,
            doc.omega().clone(),
            map_products(doc, |m| m.compose_left(&inv)),
            doc.operators().cloned(),
            None,
        )?;
        self.finish("untwist", out)
    }

    pub fn derived_algebra(&self, doc: &AlgebraDoc, n: u32, variant: u8) -> Result<AlgebraDoc> {
        if n > self.max_derived_n {
            return Err(Error::DerivedOrderTooLarge {
                n,
                max: self.max_derived_n,
            });
        }
        match variant {
            1 => {}
            2 if doc.kind().is_lie() => {
                return Err(Error::UnsupportedVariant(
                    "derived algebras of type 2 are not defined for brackets".into(),
                ))
            }
            2 => {}
            v => return Err(Error::UnsupportedVariant(format!("derived algebra type {v}"))),
        }
        self.require_pass(doc)?;
        let p = doc.twist_map().into_owned();
        require_conditions(doc, &p, &[Condition::Multiplicative, Condition::Commutes])?;
        let (prod_exp, twist_exp) = if variant == 1 {
            (u64::from(n), u64::from(n) + 1)
        } else {
            ((1u64 << n) - 1, 1u64 << n)
        };
        let q = p.pow(prod_exp);
        let out = assemble(
            doc,
            doc.kind().hom_counterpart(),
            doc.omega().clone(),
            map_products(doc, |m| m.compose_left(&q)),
            doc.operators().cloned(),
            Some(p.pow(twist_exp)),
        )?;
        self.finish("derived", out)
    }

    pub fn centroid_twist(&self, doc: &AlgebraDoc, p: &LinearMap, variant: u8) -> Result<AlgebraDoc> {
        if !doc.kind().is_rb() {
            return Err(Error::precondition(
                format!("centroid-twist needs a Rota-Baxter kind, found {}", doc.kind()),
                None,
            ));
        }
        if variant != 1 && variant != 2 {
            return Err(Error::UnsupportedVariant(format!("centroid twist variant {variant}")));
        }
        require_identity_twist(doc, "centroid-twist")?;
        require_compatible_map(doc, p)?;
        self.require_pass(doc)?;
        require_conditions(doc, p, &[Condition::Centroid, Condition::Commutes])?;
        let id = LinearMap::identity(doc.field(), doc.dim());
        let right = if variant == 1 { &id } else { p };
        let out = assemble(
            doc,
            doc.kind().hom_counterpart(),
            doc.omega().clone(),
            map_products(doc, |m| m.precompose(p, right)),
            doc.operators().cloned(),
            Some(p.clone()),
        )?;
        self.finish("centroid-twist", out)
    }

    pub fn dendriform_twist(&self, doc: &AlgebraDoc, p: &LinearMap) -> Result<AlgebraDoc> {
        self.require_kind(
            doc,
            &[Kind::MatchingHomDendriform, Kind::MatchingHomTridendriform],
            "dendriform-twist",
        )?;
        require_identity_twist(doc, "dendriform-twist")?;
        require_compatible_map(doc, p)?;
        self.require_pass(doc)?;
        let report = check_morphism(p, doc, doc)?;
        if !report.passed() {
            return Err(Error::precondition(
                "twist map is not an endomorphism of the splitting",
                Some(report),
            ));
        }
        let out = assemble(
            doc,
            doc.kind(),
            doc.omega().clone(),
            map_products(doc, |m| m.compose_left(p)),
            None,
            Some(p.clone()),
        )?;
        self.finish("dendriform-twist", out)
    }
}
