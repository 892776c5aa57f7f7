//! A small expression language for multilinear identities, and the tables
//! of identities each structure kind must satisfy.

use std::borrow::Cow;

use crate::linalg::{axpy, zero_vector, LinearMap, Vector};
use crate::structures::{AlgebraDoc, Kind, Role};

/// Which of the two label variables an operation is indexed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Slot {
    A,
    B,
}

#[derive(Debug, Clone)]
pub(crate) enum Expr {
    Var(usize),
    Twist(Box<Expr>),
    Rb(Slot, Box<Expr>),
    Op(Role, Slot, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone)]
pub(crate) struct Term {
    negate: bool,
    weight: Option<Slot>,
    expr: Expr,
}

#[derive(Debug, Clone)]
pub(crate) struct Identity {
    pub id: Cow<'static, str>,
    /// Number of vector arguments.
    pub arity: usize,
    /// Number of label variables quantified over (0, 1 or 2).
    pub slots: usize,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

pub(crate) fn x() -> Expr {
    Expr::Var(0)
}
pub(crate) fn y() -> Expr {
    Expr::Var(1)
}
pub(crate) fn z() -> Expr {
    Expr::Var(2)
}
pub(crate) fn tw(e: Expr) -> Expr {
    Expr::Twist(Box::new(e))
}
pub(crate) fn rb(s: Slot, e: Expr) -> Expr {
    Expr::Rb(s, Box::new(e))
}
pub(crate) fn op(role: Role, s: Slot, a: Expr, b: Expr) -> Expr {
    Expr::Op(role, s, Box::new(a), Box::new(b))
}
pub(crate) fn pos(expr: Expr) -> Term {
    Term {
        negate: false,
        weight: None,
        expr,
    }
}
pub(crate) fn neg(expr: Expr) -> Term {
    Term {
        negate: true,
        weight: None,
        expr,
    }
}
pub(crate) fn weighted(s: Slot, expr: Expr) -> Term {
    Term {
        negate: false,
        weight: Some(s),
        expr,
    }
}

impl Identity {
    pub(crate) fn new(id: impl Into<Cow<'static, str>>, arity: usize, slots: usize, lhs: Vec<Term>, rhs: Vec<Term>) -> Self {
        Identity {
            id: id.into(),
            arity,
            slots,
            lhs,
            rhs,
        }
    }
}

/// Evaluation of expressions against one document.
pub(crate) struct Env<'a> {
    doc: &'a AlgebraDoc,
    twist: Cow<'a, LinearMap>,
}

impl<'a> Env<'a> {
    pub(crate) fn new(doc: &'a AlgebraDoc) -> Self {
        Env {
            doc,
            twist: doc.twist_map(),
        }
    }

    pub(crate) fn with_twist(doc: &'a AlgebraDoc, twist: &'a LinearMap) -> Self {
        Env {
            doc,
            twist: Cow::Borrowed(twist),
        }
    }

    fn label(labels: [usize; 2], s: Slot) -> usize {
        match s {
            Slot::A => labels[0],
            Slot::B => labels[1],
        }
    }

    fn eval(&self, e: &Expr, args: &[Vector], labels: [usize; 2]) -> Vector {
        match e {
            Expr::Var(n) => args[*n].clone(),
            Expr::Twist(inner) => self.twist.apply_unchecked(&self.eval(inner, args, labels)),
            Expr::Rb(s, inner) => {
                let ops = self.doc.operators().expect("identity needs operators");
                ops.ops[Self::label(labels, *s)].apply_unchecked(&self.eval(inner, args, labels))
            }
            Expr::Op(role, s, a, b) => {
                let m = self.doc.product(*role, Self::label(labels, *s));
                m.apply_unchecked(&self.eval(a, args, labels), &self.eval(b, args, labels))
            }
        }
    }

    pub(crate) fn side(&self, terms: &[Term], args: &[Vector], labels: [usize; 2]) -> Vector {
        let field = self.doc.field();
        let mut acc = zero_vector(field, self.doc.dim());
        for t in terms {
            let v = self.eval(&t.expr, args, labels);
            let mut c = match t.weight {
                None => field.one(),
                Some(s) => {
                    let ops = self.doc.operators().expect("weighted term needs operators");
                    ops.weights[Self::label(labels, s)].clone()
                }
            };
            if t.negate {
                c = -c;
            }
            axpy(&mut acc, &c, &v);
        }
        acc
    }

    pub(crate) fn sides(&self, ident: &Identity, args: &[Vector], labels: [usize; 2]) -> (Vector, Vector) {
        (
            self.side(&ident.lhs, args, labels),
            self.side(&ident.rhs, args, labels),
        )
    }
}

/// Hom-associativity of a single product: (xy)p(z) = p(x)(yz).
fn hom_assoc() -> Identity {
    use Slot::A;
    let d = Role::Dot;
    Identity::new(
        "hom-assoc",
        3,
        0,
        vec![pos(op(d, A, op(d, A, x(), y()), tw(z())))],
        vec![pos(op(d, A, tw(x()), op(d, A, y(), z())))],
    )
}

/// Hom-Jacobi for a single bracket.
fn hom_jacobi() -> Identity {
    use Slot::A;
    let b = Role::Bracket;
    Identity::new(
        "hom-jacobi",
        3,
        0,
        vec![
            pos(op(b, A, tw(x()), op(b, A, y(), z()))),
            pos(op(b, A, tw(y()), op(b, A, z(), x()))),
            pos(op(b, A, tw(z()), op(b, A, x(), y()))),
        ],
        vec![],
    )
}

/// The matching Rota-Baxter equation for the single product of `role`.
fn rota_baxter(id: &'static str, role: Role) -> Identity {
    use Slot::{A, B};
    let m = |a, b| op(role, A, a, b);
    Identity::new(
        id,
        2,
        2,
        vec![pos(m(rb(A, x()), rb(B, y())))],
        vec![
            pos(rb(A, m(x(), rb(B, y())))),
            pos(rb(B, m(rb(A, x()), y()))),
            weighted(B, rb(A, m(x(), y()))),
        ],
    )
}

fn mha() -> Identity {
    use Slot::{A, B};
    let d = Role::Dot;
    Identity::new(
        "mha",
        3,
        2,
        vec![pos(op(d, B, op(d, A, x(), y()), tw(z())))],
        vec![pos(op(d, A, tw(x()), op(d, B, y(), z())))],
    )
}

fn tcha() -> Identity {
    use Slot::{A, B};
    let d = Role::Dot;
    Identity::new(
        "tcha",
        3,
        2,
        vec![pos(op(d, B, op(d, A, x(), y()), tw(z())))],
        vec![pos(op(d, B, tw(x()), op(d, A, y(), z())))],
    )
}

fn chaa() -> Identity {
    use Slot::{A, B};
    let d = Role::Dot;
    Identity::new(
        "chaa",
        3,
        2,
        vec![
            pos(op(d, B, op(d, A, x(), y()), tw(z()))),
            pos(op(d, A, op(d, B, x(), y()), tw(z()))),
        ],
        vec![
            pos(op(d, A, tw(x()), op(d, B, y(), z()))),
            pos(op(d, B, tw(x()), op(d, A, y(), z()))),
        ],
    )
}

fn mhla() -> Identity {
    use Slot::{A, B};
    let b = Role::Bracket;
    Identity::new(
        "mhla",
        3,
        2,
        vec![
            pos(op(b, A, tw(x()), op(b, B, y(), z()))),
            pos(op(b, B, tw(y()), op(b, A, z(), x()))),
            pos(op(b, B, tw(z()), op(b, A, x(), y()))),
        ],
        vec![],
    )
}

fn chla() -> Identity {
    use Slot::{A, B};
    let b = Role::Bracket;
    let mut lhs = Vec::new();
    for (s, t) in [(A, B), (B, A)] {
        lhs.push(pos(op(b, t, tw(x()), op(b, s, y(), z()))));
        lhs.push(pos(op(b, t, tw(y()), op(b, s, z(), x()))));
        lhs.push(pos(op(b, t, tw(z()), op(b, s, x(), y()))));
    }
    Identity::new("chla", 3, 2, lhs, vec![])
}

fn mhl_symmetry() -> Identity {
    use Slot::{A, B};
    let b = Role::Bracket;
    Identity::new(
        "mhl-symmetry",
        3,
        2,
        vec![pos(op(b, B, tw(x()), op(b, A, y(), z())))],
        vec![pos(op(b, A, tw(x()), op(b, B, y(), z())))],
    )
}

fn mhpa() -> Identity {
    use Slot::{A, B};
    let s = Role::Star;
    Identity::new(
        "mhpa",
        3,
        2,
        vec![
            pos(op(s, A, tw(x()), op(s, B, y(), z()))),
            neg(op(s, B, op(s, A, x(), y()), tw(z()))),
        ],
        vec![
            pos(op(s, B, tw(y()), op(s, A, x(), z()))),
            neg(op(s, A, op(s, B, y(), x()), tw(z()))),
        ],
    )
}

fn dendriform(axiom3_twist: bool) -> Vec<Identity> {
    use Slot::{A, B};
    let (l, r) = (Role::Left, Role::Right);
    let x3 = if axiom3_twist { tw(x()) } else { x() };
    vec![
        Identity::new(
            "dend1",
            3,
            2,
            vec![pos(op(l, B, op(l, A, x(), y()), tw(z())))],
            vec![
                pos(op(l, A, tw(x()), op(l, B, y(), z()))),
                pos(op(l, B, tw(x()), op(r, A, y(), z()))),
            ],
        ),
        Identity::new(
            "dend2",
            3,
            2,
            vec![pos(op(l, B, op(r, A, x(), y()), tw(z())))],
            vec![pos(op(r, A, tw(x()), op(l, B, y(), z())))],
        ),
        Identity::new(
            "dend3",
            3,
            2,
            vec![
                pos(op(r, A, op(l, B, x(), y()), tw(z()))),
                pos(op(r, B, op(r, A, x(), y()), tw(z()))),
            ],
            vec![pos(op(r, A, x3, op(r, B, y(), z())))],
        ),
    ]
}

fn mhta1(shift_middle: bool) -> Identity {
    use Slot::{A, B};
    let (l, m, r) = (Role::Left, Role::Middle, Role::Right);
    let third = if shift_middle { tw(x()) } else { x() };
    Identity::new(
        if shift_middle { "mhta1" } else { "mhta1-unshifted" },
        3,
        2,
        vec![pos(op(l, B, op(l, A, x(), y()), tw(z())))],
        vec![
            pos(op(l, A, tw(x()), op(l, B, y(), z()))),
            pos(op(l, B, tw(x()), op(r, A, y(), z()))),
            pos(op(l, A, third, op(m, B, y(), z()))),
        ],
    )
}

fn tridendriform() -> Vec<Identity> {
    use Slot::{A, B};
    let (l, m, r) = (Role::Left, Role::Middle, Role::Right);
    vec![
        mhta1(true),
        Identity::new(
            "mhta2",
            3,
            2,
            vec![pos(op(l, B, op(r, A, x(), y()), tw(z())))],
            vec![pos(op(r, A, tw(x()), op(l, B, y(), z())))],
        ),
        Identity::new(
            "mhta3",
            3,
            2,
            vec![pos(op(r, A, tw(x()), op(r, B, y(), z())))],
            vec![
                pos(op(r, A, op(l, B, x(), y()), tw(z()))),
                pos(op(r, B, op(r, A, x(), y()), tw(z()))),
                pos(op(r, A, op(m, B, x(), y()), tw(z()))),
            ],
        ),
        Identity::new(
            "mhta4",
            3,
            2,
            vec![pos(op(m, B, op(r, A, x(), y()), tw(z())))],
            vec![pos(op(r, A, tw(x()), op(m, B, y(), z())))],
        ),
        Identity::new(
            "mhta5",
            3,
            2,
            vec![pos(op(m, B, op(l, A, x(), y()), tw(z())))],
            vec![pos(op(m, B, tw(x()), op(r, A, y(), z())))],
        ),
        Identity::new(
            "mhta6",
            3,
            2,
            vec![pos(op(l, B, op(m, A, x(), y()), tw(z())))],
            vec![pos(op(m, A, tw(x()), op(l, B, y(), z())))],
        ),
        Identity::new(
            "mhta7",
            3,
            2,
            vec![pos(op(m, B, op(m, A, x(), y()), tw(z())))],
            vec![pos(op(m, A, tw(x()), op(m, B, y(), z())))],
        ),
    ]
}

/// The defining identities of `kind`.
pub(crate) fn identities(kind: Kind, dendriform_axiom3_twist: bool) -> Vec<Identity> {
    match kind {
        Kind::MatchingHomAssoc => vec![mha()],
        Kind::TotallyCompatibleHomAssoc => vec![mha(), tcha()],
        Kind::CompatibleHomAssoc => vec![chaa()],
        Kind::MatchingHomLie => vec![mhla()],
        Kind::CompatibleHomLie => vec![chla()],
        Kind::MatchingHomPrelie => vec![mhpa()],
        Kind::MatchingHomDendriform => dendriform(dendriform_axiom3_twist),
        Kind::MatchingHomTridendriform => tridendriform(),
        Kind::HomAssocMatchingRb | Kind::PlainAssocMatchingRb => {
            vec![hom_assoc(), rota_baxter("mrbe", Role::Dot)]
        }
        Kind::MatchingHomLieRb | Kind::PlainLieMatchingRb => {
            vec![hom_jacobi(), rota_baxter("lrbe", Role::Bracket)]
        }
    }
}

/// Consequences reported as violations in verbose mode.
pub(crate) fn derived_identities(kind: Kind) -> Vec<Identity> {
    match kind {
        Kind::MatchingHomLie => vec![mhl_symmetry()],
        _ => vec![],
    }
}

/// Alternative readings compared against the implemented ones in verbose
/// mode; disagreements become notes, not violations.
pub(crate) fn alternative_readings(kind: Kind, dendriform_axiom3_twist: bool) -> Vec<(Identity, Identity)> {
    match kind {
        Kind::MatchingHomTridendriform => vec![(mhta1(true), mhta1(false))],
        Kind::MatchingHomDendriform => {
            let current = dendriform(dendriform_axiom3_twist).pop().expect("three axioms");
            let other = dendriform(!dendriform_axiom3_twist).pop().expect("three axioms");
            vec![(current, other)]
        }
        _ => vec![],
    }
}

/// Side-condition identities on the twist, one per role of `kind`.
pub(crate) fn endomorphism(id: String, role: Role) -> Identity {
    use Slot::A;
    Identity::new(
        id,
        2,
        1,
        vec![pos(tw(op(role, A, x(), y())))],
        vec![pos(op(role, A, tw(x()), tw(y())))],
    )
}

pub(crate) fn commutes() -> Identity {
    use Slot::A;
    Identity::new("commutes", 1, 1, vec![pos(tw(rb(A, x())))], vec![pos(rb(A, tw(x())))])
}

pub(crate) fn centroid_left(id: String, role: Role) -> Identity {
    use Slot::A;
    Identity::new(
        id,
        2,
        1,
        vec![pos(tw(op(role, A, x(), y())))],
        vec![pos(op(role, A, tw(x()), y()))],
    )
}

pub(crate) fn centroid_right(id: String, role: Role) -> Identity {
    use Slot::A;
    Identity::new(
        id,
        2,
        1,
        vec![pos(tw(op(role, A, x(), y())))],
        vec![pos(op(role, A, x(), tw(y())))],
    )
}
