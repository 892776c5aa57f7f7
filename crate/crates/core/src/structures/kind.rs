use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The role a product family plays in a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    /// An associative-type product `x ._w y`.
    Dot,
    /// A Lie bracket `[x, y]_w`.
    Bracket,
    /// A pre-Lie product `x *_w y`.
    Star,
    /// `x <_w y`
    Left,
    /// `x ._w y` in a tridendriform splitting (the bullet).
    Middle,
    /// `x >_w y`
    Right,
}

impl Role {
    pub const ALL: [Role; 6] = [
        Role::Dot,
        Role::Bracket,
        Role::Star,
        Role::Left,
        Role::Middle,
        Role::Right,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Role::Dot => "dot",
            Role::Bracket => "bracket",
            Role::Star => "star",
            Role::Left => "left",
            Role::Middle => "middle",
            Role::Right => "right",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Role::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::shape("/families", format!("unknown role {s:?}")))
    }
}

/// Structure tag of an [`AlgebraDoc`](super::AlgebraDoc).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    MatchingHomAssoc,
    TotallyCompatibleHomAssoc,
    CompatibleHomAssoc,
    MatchingHomLie,
    CompatibleHomLie,
    MatchingHomPrelie,
    MatchingHomDendriform,
    MatchingHomTridendriform,
    HomAssocMatchingRb,
    MatchingHomLieRb,
    PlainAssocMatchingRb,
    PlainLieMatchingRb,
}

impl Kind {
    pub const ALL: [Kind; 12] = [
        Kind::MatchingHomAssoc,
        Kind::TotallyCompatibleHomAssoc,
        Kind::CompatibleHomAssoc,
        Kind::MatchingHomLie,
        Kind::CompatibleHomLie,
        Kind::MatchingHomPrelie,
        Kind::MatchingHomDendriform,
        Kind::MatchingHomTridendriform,
        Kind::HomAssocMatchingRb,
        Kind::MatchingHomLieRb,
        Kind::PlainAssocMatchingRb,
        Kind::PlainLieMatchingRb,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::MatchingHomAssoc => "matching-hom-assoc",
            Kind::TotallyCompatibleHomAssoc => "totally-compatible-hom-assoc",
            Kind::CompatibleHomAssoc => "compatible-hom-assoc",
            Kind::MatchingHomLie => "matching-hom-lie",
            Kind::CompatibleHomLie => "compatible-hom-lie",
            Kind::MatchingHomPrelie => "matching-hom-prelie",
            Kind::MatchingHomDendriform => "matching-hom-dendriform",
            Kind::MatchingHomTridendriform => "matching-hom-tridendriform",
            Kind::HomAssocMatchingRb => "hom-assoc-matching-rb",
            Kind::MatchingHomLieRb => "matching-hom-lie-rb",
            Kind::PlainAssocMatchingRb => "plain-assoc-matching-rb",
            Kind::PlainLieMatchingRb => "plain-lie-matching-rb",
        }
    }

    /// Product roles the kind carries, in canonical order.
    pub fn roles(&self) -> &'static [Role] {
        match self {
            Kind::MatchingHomAssoc
            | Kind::TotallyCompatibleHomAssoc
            | Kind::CompatibleHomAssoc
            | Kind::HomAssocMatchingRb
            | Kind::PlainAssocMatchingRb => &[Role::Dot],
            Kind::MatchingHomLie
            | Kind::CompatibleHomLie
            | Kind::MatchingHomLieRb
            | Kind::PlainLieMatchingRb => &[Role::Bracket],
            Kind::MatchingHomPrelie => &[Role::Star],
            Kind::MatchingHomDendriform => &[Role::Left, Role::Right],
            Kind::MatchingHomTridendriform => &[Role::Left, Role::Middle, Role::Right],
        }
    }

    /// Rota-Baxter kinds: a single product plus an operator family.
    pub fn is_rb(&self) -> bool {
        matches!(
            self,
            Kind::HomAssocMatchingRb
                | Kind::MatchingHomLieRb
                | Kind::PlainAssocMatchingRb
                | Kind::PlainLieMatchingRb
        )
    }

    /// Plain kinds carry no twist; it is the identity.
    pub fn is_plain(&self) -> bool {
        matches!(self, Kind::PlainAssocMatchingRb | Kind::PlainLieMatchingRb)
    }

    pub fn is_lie(&self) -> bool {
        self.roles() == [Role::Bracket]
    }

    pub fn is_assoc(&self) -> bool {
        self.roles() == [Role::Dot]
    }

    /// The Hom kind a plain kind embeds into (identity on Hom kinds).
    pub fn hom_counterpart(&self) -> Kind {
        match self {
            Kind::PlainAssocMatchingRb => Kind::HomAssocMatchingRb,
            Kind::PlainLieMatchingRb => Kind::MatchingHomLieRb,
            k => *k,
        }
    }

    pub fn plain_counterpart(&self) -> Option<Kind> {
        match self {
            Kind::HomAssocMatchingRb | Kind::PlainAssocMatchingRb => Some(Kind::PlainAssocMatchingRb),
            Kind::MatchingHomLieRb | Kind::PlainLieMatchingRb => Some(Kind::PlainLieMatchingRb),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::shape("/kind", format!("unknown kind {s:?}")))
    }
}
