use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, FieldSpec, LinearMap, Scalar};

use super::{Kind, Role};

/// Key under which the single product of a Rota-Baxter kind is stored.
pub const SINGLE_PRODUCT_KEY: &str = "*";

/// The finite, ordered, nonempty index set of a family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaSet {
    labels: Vec<String>,
}

impl OmegaSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::shape("/omega", "index set must be nonempty"));
        }
        for (n, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::shape(format!("/omega/{n}"), "empty label"));
            }
            if labels[..n].contains(l) {
                return Err(Error::shape(format!("/omega/{n}"), format!("duplicate label {l:?}")));
            }
        }
        Ok(OmegaSet { labels })
    }

    pub fn singleton(label: &str) -> Self {
        OmegaSet {
            labels: vec![label.to_string()],
        }
    }

    /// `a, b, c, ...`
    pub fn alphabetic(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("w{i}")
                }
            })
            .collect();
        OmegaSet { labels }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// One product per label (or a single product for Rota-Baxter kinds).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearFamily {
    pub role: Role,
    pub maps: Vec<BilinearMap>,
}

impl BilinearFamily {
    pub fn new(role: Role, maps: Vec<BilinearMap>) -> Self {
        BilinearFamily { role, maps }
    }

    pub fn single(role: Role, map: BilinearMap) -> Self {
        BilinearFamily {
            role,
            maps: vec![map],
        }
    }
}

/// Operators `P_w` with weights `lambda_w`, aligned with the index set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorFamily {
    pub ops: Vec<LinearMap>,
    pub weights: Vec<Scalar>,
}

impl OperatorFamily {
    pub fn new(ops: Vec<LinearMap>, weights: Vec<Scalar>) -> Self {
        OperatorFamily { ops, weights }
    }

    pub fn is_weight_zero(&self) -> bool {
        self.weights.iter().all(Scalar::is_zero)
    }
}

/// A validated structure on `field^dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraDoc {
    field: FieldSpec,
    dim: usize,
    omega: OmegaSet,
    kind: Kind,
    families: Vec<BilinearFamily>,
    operators: Option<OperatorFamily>,
    twist: Option<LinearMap>,
}

impl AlgebraDoc {
    /// Validates every shape invariant. Families may be given in any order.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        omega: OmegaSet,
        kind: Kind,
        mut families: Vec<BilinearFamily>,
        operators: Option<OperatorFamily>,
        twist: Option<LinearMap>,
    ) -> Result<Self> {
        families.sort_by_key(|f| f.role);
        let doc = AlgebraDoc {
            field,
            dim,
            omega,
            kind,
            families,
            operators,
            twist,
        };
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::shape("/dim", "dimension must be positive"));
        }
        let roles: Vec<Role> = self.families.iter().map(|f| f.role).collect();
        if roles != self.kind.roles() {
            return Err(Error::shape(
                "/families",
                format!(
                    "kind {} requires roles {:?}, found {:?}",
                    self.kind,
                    self.kind.roles().iter().map(Role::as_str).collect::<Vec<_>>(),
                    roles.iter().map(Role::as_str).collect::<Vec<_>>()
                ),
            ));
        }
        let expected_maps = if self.kind.is_rb() { 1 } else { self.omega.len() };
        for fam in &self.families {
            let base = format!("/families/{}", fam.role);
            if fam.maps.len() != expected_maps {
                return Err(Error::shape(
                    base,
                    format!("expected {expected_maps} products, found {}", fam.maps.len()),
                ));
            }
            for (w, m) in fam.maps.iter().enumerate() {
                let path = format!("{base}/{}", self.family_key(w));
                self.check_bilinear(m, &path)?;
                if fam.role == Role::Bracket {
                    if let Some((i, j, k)) = m.alternating_defect() {
                        return Err(Error::shape(
                            format!("{path}/{i}/{j}/{k}"),
                            "bracket is not alternating",
                        ));
                    }
                }
            }
        }
        match (&self.operators, self.kind.is_rb()) {
            (None, true) => {
                return Err(Error::shape(
                    "/operators",
                    format!("kind {} requires an operator family", self.kind),
                ))
            }
            (Some(ops), _) => {
                if ops.ops.len() != self.omega.len() {
                    return Err(Error::shape("/operators/ops", "one operator per label required"));
                }
                if ops.weights.len() != self.omega.len() {
                    return Err(Error::shape("/operators/weights", "one weight per label required"));
                }
                for (w, op) in ops.ops.iter().enumerate() {
                    self.check_linear(op, &format!("/operators/ops/{}", self.omega.label(w)))?;
                }
                for (w, s) in ops.weights.iter().enumerate() {
                    if !self.field.contains(s) {
                        return Err(Error::shape(
                            format!("/operators/weights/{}", self.omega.label(w)),
                            "weight outside the declared field",
                        ));
                    }
                }
            }
            (None, false) => {}
        }
        match (&self.twist, self.kind.is_plain()) {
            (Some(_), true) => {
                return Err(Error::shape(
                    "/twist",
                    format!("plain kind {} carries no twist", self.kind),
                ))
            }
            (None, false) => {
                return Err(Error::shape(
                    "/twist",
                    format!("Hom kind {} requires a twist map", self.kind),
                ))
            }
            (Some(p), false) => self.check_linear(p, "/twist")?,
            (None, true) => {}
        }
        Ok(())
    }

    fn check_bilinear(&self, m: &BilinearMap, path: &str) -> Result<()> {
        if m.field() != self.field {
            return Err(Error::shape(path, format!("field {} differs from {}", m.field(), self.field)));
        }
        if m.dim() != self.dim {
            return Err(Error::shape(path, format!("dimension {} differs from {}", m.dim(), self.dim)));
        }
        Ok(())
    }

    fn check_linear(&self, m: &LinearMap, path: &str) -> Result<()> {
        if m.field() != self.field {
            return Err(Error::shape(path, format!("field {} differs from {}", m.field(), self.field)));
        }
        if m.dim() != self.dim {
            return Err(Error::shape(path, format!("dimension {} differs from {}", m.dim(), self.dim)));
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega(&self) -> &OmegaSet {
        &self.omega
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn families(&self) -> &[BilinearFamily] {
        &self.families
    }

    pub fn family(&self, role: Role) -> Option<&BilinearFamily> {
        self.families.iter().find(|f| f.role == role)
    }

    /// JSON key of the `w`-th map in a family.
    pub(crate) fn family_key(&self, w: usize) -> &str {
        if self.kind.is_rb() {
            SINGLE_PRODUCT_KEY
        } else {
            self.omega.label(w)
        }
    }

    /// The product of `role` at label index `w`; Rota-Baxter kinds ignore `w`.
    ///
    /// Panics when the kind lacks `role`.
    pub fn product(&self, role: Role, w: usize) -> &BilinearMap {
        let fam = self
            .family(role)
            .unwrap_or_else(|| panic!("kind {} has no {role} family", self.kind));
        if self.kind.is_rb() {
            &fam.maps[0]
        } else {
            &fam.maps[w]
        }
    }

    /// The single product of a Rota-Baxter kind.
    pub fn rb_product(&self) -> Option<&BilinearMap> {
        if self.kind.is_rb() {
            self.families.first().map(|f| &f.maps[0])
        } else {
            None
        }
    }

    pub fn operators(&self) -> Option<&OperatorFamily> {
        self.operators.as_ref()
    }

    pub fn twist(&self) -> Option<&LinearMap> {
        self.twist.as_ref()
    }

    /// The twist, or the identity for plain kinds.
    pub fn twist_map(&self) -> Cow<'_, LinearMap> {
        match &self.twist {
            Some(p) => Cow::Borrowed(p),
            None => Cow::Owned(LinearMap::identity(self.field, self.dim)),
        }
    }

    pub fn has_identity_twist(&self) -> bool {
        self.twist.as_ref().map_or(true, LinearMap::is_identity)
    }

    /// Same data under another tag. Moving to a plain kind drops an identity
    /// twist; moving from a plain kind to a Hom kind adds one.
    pub fn retag(&self, kind: Kind) -> Result<AlgebraDoc> {
        let twist = match (kind.is_plain(), &self.twist) {
            (true, Some(p)) if p.is_identity() => None,
            (false, None) => Some(LinearMap::identity(self.field, self.dim)),
            (_, t) => t.clone(),
        };
        let families = self
            .families
            .iter()
            .zip(kind.roles())
            .map(|(f, &role)| BilinearFamily::new(role, f.maps.clone()))
            .collect::<Vec<_>>();
        if families.len() != self.families.len() || self.kind.is_rb() != kind.is_rb() {
            return Err(Error::shape(
                "/kind",
                format!("cannot retag {} as {}", self.kind, kind),
            ));
        }
        AlgebraDoc::new(
            self.field,
            self.dim,
            self.omega.clone(),
            kind,
            families,
            self.operators.clone(),
            twist,
        )
    }

    /// Same structure with the twist replaced.
    pub fn with_twist(&self, twist: Option<LinearMap>) -> Result<AlgebraDoc> {
        AlgebraDoc::new(
            self.field,
            self.dim,
            self.omega.clone(),
            self.kind,
            self.families.clone(),
            self.operators.clone(),
            twist,
        )
    }

    pub fn with_operators(&self, operators: Option<OperatorFamily>) -> Result<AlgebraDoc> {
        AlgebraDoc::new(
            self.field,
            self.dim,
            self.omega.clone(),
            self.kind,
            self.families.clone(),
            operators,
            self.twist.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn omega_rejects_duplicates_and_empty() {
        assert!(OmegaSet::new(Vec::<String>::new()).is_err());
        assert!(OmegaSet::new(["a", "a"]).is_err());
        assert!(OmegaSet::new(["a", ""]).is_err());
        assert_eq!(OmegaSet::alphabetic(3).labels(), ["a", "b", "c"]);
    }

    #[test]
    fn hom_kind_needs_twist() {
        let err = AlgebraDoc::new(
            q(),
            2,
            OmegaSet::singleton("a"),
            Kind::MatchingHomAssoc,
            vec![BilinearFamily::single(Role::Dot, BilinearMap::zero(q(), 2))],
            None,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Shape { ref path, .. } if path == "/twist"));
    }

    #[test]
    fn rb_kind_needs_operators() {
        let err = AlgebraDoc::new(
            q(),
            2,
            OmegaSet::singleton("a"),
            Kind::PlainAssocMatchingRb,
            vec![BilinearFamily::single(Role::Dot, BilinearMap::zero(q(), 2))],
            None,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Shape { ref path, .. } if path == "/operators"));
    }

    #[test]
    fn dendriform_needs_both_roles() {
        let err = AlgebraDoc::new(
            q(),
            1,
            OmegaSet::singleton("a"),
            Kind::MatchingHomDendriform,
            vec![BilinearFamily::single(Role::Left, BilinearMap::zero(q(), 1))],
            None,
            Some(LinearMap::identity(q(), 1)),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Shape { ref path, .. } if path == "/families"));
    }

    #[test]
    fn bracket_must_alternate() {
        let bad = BilinearMap::from_entries(q(), 2, &[(0, 0, 1, 1)]);
        let err = AlgebraDoc::new(
            q(),
            2,
            OmegaSet::singleton("a"),
            Kind::MatchingHomLie,
            vec![BilinearFamily::single(Role::Bracket, bad)],
            None,
            Some(LinearMap::identity(q(), 2)),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Shape { ref path, .. } if path == "/families/bracket/a/0/0/1"));
    }
}
