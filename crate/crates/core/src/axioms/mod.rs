//! Verification of defining identities on basis tuples.
//!
//! Every identity is multilinear in its vector arguments, so checking it on
//! all basis tuples and all label pairs proves it for the whole carrier.

mod identity;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{basis_vector, LinearMap, Vector};
use crate::structures::{AlgebraDoc, CheckReport, Role, Violation};

use identity::{Env, Identity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Also check derived consequences and compare alternative readings.
    pub verbose: bool,
    /// Apply the twist to `x` on the right of the third dendriform axiom.
    pub dendriform_axiom3_twist: bool,
    /// Return after the first violation.
    pub stop_at_first: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            verbose: false,
            dendriform_axiom3_twist: true,
            stop_at_first: false,
        }
    }
}

impl CheckOptions {
    pub fn verbose() -> Self {
        CheckOptions {
            verbose: true,
            ..Self::default()
        }
    }

    pub fn first_only() -> Self {
        CheckOptions {
            stop_at_first: true,
            ..Self::default()
        }
    }
}

/// Checks every defining identity of the document's kind.
///
/// ```
/// use halg::{axioms, search};
///
/// let n2 = search::catalog_fixture("N2").unwrap();
/// assert!(axioms::check_structure(&n2).passed());
/// ```
pub fn check_structure(doc: &AlgebraDoc) -> CheckReport {
    check_structure_with(doc, &CheckOptions::default())
}

pub fn check_structure_with(doc: &AlgebraDoc, options: &CheckOptions) -> CheckReport {
    let env = Env::new(doc);
    let mut identities = identity::identities(doc.kind(), options.dendriform_axiom3_twist);
    if options.verbose {
        identities.extend(identity::derived_identities(doc.kind()));
    }
    let mut report = CheckReport::from_violations(run(doc, &env, &identities, options.stop_at_first));
    if options.verbose {
        for (current, other) in identity::alternative_readings(doc.kind(), options.dendriform_axiom3_twist) {
            if let Some(note) = compare_readings(doc, &env, &current, &other) {
                report.notes.push(note);
            }
        }
    }
    report
}

/// `true` iff the document satisfies its kind's identities; stops early.
pub fn satisfies(doc: &AlgebraDoc) -> bool {
    check_structure_with(doc, &CheckOptions::first_only()).passed()
}

/// Calls `f(args, labels, omega_indices, basis_indices)` for every instance.
/// Returns early when `f` returns `false`.
fn for_each_instance(
    doc: &AlgebraDoc,
    ident: &Identity,
    mut f: impl FnMut(&[Vector], [usize; 2], Vec<String>, Vec<usize>) -> bool,
) {
    let n = doc.dim();
    let basis: Vec<Vector> = (0..n).map(|i| basis_vector(doc.field(), n, i)).collect();
    let w = doc.omega().len();
    let label_tuples: Vec<[usize; 2]> = match ident.slots {
        0 => vec![[0, 0]],
        1 => (0..w).map(|a| [a, a]).collect(),
        _ => (0..w).flat_map(|a| (0..w).map(move |b| [a, b])).collect(),
    };
    let tuples = n.pow(ident.arity as u32);
    for labels in label_tuples {
        let omega_indices: Vec<String> = labels[..ident.slots]
            .iter()
            .map(|&l| doc.omega().label(l).to_string())
            .collect();
        for t in 0..tuples {
            let mut idx = vec![0; ident.arity];
            let mut rest = t;
            for slot in idx.iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            let args: Vec<Vector> = idx.iter().map(|&i| basis[i].clone()).collect();
            let one_based = idx.iter().map(|i| i + 1).collect();
            if !f(&args, labels, omega_indices.clone(), one_based) {
                return;
            }
        }
    }
}

fn run(doc: &AlgebraDoc, env: &Env<'_>, identities: &[Identity], stop_at_first: bool) -> Vec<Violation> {
    let mut violations = Vec::new();
    for ident in identities {
        for_each_instance(doc, ident, |args, labels, omega_indices, basis_indices| {
            let (lhs, rhs) = env.sides(ident, args, labels);
            if lhs != rhs {
                violations.push(Violation {
                    axiom_id: ident.id.to_string(),
                    omega_indices,
                    basis_indices,
                    lhs,
                    rhs,
                });
                return !stop_at_first;
            }
            true
        });
        if stop_at_first && !violations.is_empty() {
            break;
        }
    }
    violations
}

fn compare_readings(doc: &AlgebraDoc, env: &Env<'_>, current: &Identity, other: &Identity) -> Option<String> {
    let mut note = None;
    for_each_instance(doc, current, |args, labels, omega, basis| {
        let (a, b) = env.sides(current, args, labels);
        let (c, d) = env.sides(other, args, labels);
        if (a == b) != (c == d) {
            note = Some(format!(
                "{} and {} disagree at labels {:?}, basis {:?}",
                current.id, other.id, omega, basis
            ));
            return false;
        }
        true
    });
    note
}

/// Side conditions on the twist map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `p(x o y) = p(x) o p(y)` for every product.
    Endomorphism,
    /// Same equation as `Endomorphism`, under the name used for Hom structures.
    Multiplicative,
    /// `p P_w = P_w p` for every operator.
    Commutes,
    /// `p(xy) = p(x)y = xp(y)`; for brackets `p[x,y] = [p(x),y]`.
    Centroid,
    Invertible,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::Endomorphism,
        Condition::Multiplicative,
        Condition::Commutes,
        Condition::Centroid,
        Condition::Invertible,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Condition::Endomorphism => "endomorphism",
            Condition::Multiplicative => "multiplicative",
            Condition::Commutes => "commutes",
            Condition::Centroid => "centroid",
            Condition::Invertible => "invertible",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Condition::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCondition(s.to_string()))
    }
}

pub fn parse_conditions<S: AsRef<str>>(tags: &[S]) -> Result<Vec<Condition>> {
    tags.iter().map(|t| t.as_ref().parse()).collect()
}

fn role_suffixed(doc: &AlgebraDoc, base: &str, role: Role) -> String {
    if doc.kind().roles().len() == 1 {
        base.to_string()
    } else {
        format!("{base}-{role}")
    }
}

fn condition_identities(doc: &AlgebraDoc, cond: Condition) -> Vec<Identity> {
    let roles = doc.kind().roles();
    match cond {
        Condition::Endomorphism | Condition::Multiplicative => roles
            .iter()
            .map(|&r| identity::endomorphism(role_suffixed(doc, cond.as_str(), r), r))
            .collect(),
        Condition::Commutes => {
            if doc.operators().is_some() {
                vec![identity::commutes()]
            } else {
                vec![]
            }
        }
        Condition::Centroid => roles
            .iter()
            .flat_map(|&r| {
                if r == Role::Bracket {
                    vec![identity::centroid_left(role_suffixed(doc, "centroid", r), r)]
                } else {
                    vec![
                        identity::centroid_left(role_suffixed(doc, "centroid-left", r), r),
                        identity::centroid_right(role_suffixed(doc, "centroid-right", r), r),
                    ]
                }
            })
            .collect(),
        Condition::Invertible => vec![],
    }
}

fn invertibility_violation(p: &LinearMap) -> Option<Violation> {
    p.kernel_vector().map(|v| {
        let image = p.apply_unchecked(&v);
        Violation {
            axiom_id: Condition::Invertible.as_str().to_string(),
            omega_indices: vec![],
            basis_indices: vec![],
            lhs: v,
            rhs: image,
        }
    })
}

/// Checks side conditions on the document's twist (identity for plain kinds).
///
/// Violations appear grouped by condition in the order given.
pub fn check_side_conditions(doc: &AlgebraDoc, conditions: &[Condition]) -> CheckReport {
    let twist = doc.twist_map();
    check_side_conditions_for(doc, &twist, conditions)
}

/// Checks side conditions for an arbitrary map `p` against the document's
/// products and operators.
pub fn check_side_conditions_for(doc: &AlgebraDoc, p: &LinearMap, conditions: &[Condition]) -> CheckReport {
    let env = Env::with_twist(doc, p);
    let mut violations = Vec::new();
    for &cond in conditions {
        if cond == Condition::Invertible {
            violations.extend(invertibility_violation(p));
        } else {
            violations.extend(run(doc, &env, &condition_identities(doc, cond), false));
        }
    }
    CheckReport::from_violations(violations)
}

/// Checks that `f` intertwines every product, operator and the twists.
pub fn check_morphism(f: &LinearMap, src: &AlgebraDoc, dst: &AlgebraDoc) -> Result<CheckReport> {
    if src.kind() != dst.kind() {
        return Err(Error::KindMismatch {
            left: src.kind().to_string(),
            right: dst.kind().to_string(),
        });
    }
    if src.field() != dst.field() || f.field() != src.field() {
        return Err(Error::FieldMismatch {
            left: src.field().to_string(),
            right: if f.field() != src.field() {
                f.field().to_string()
            } else {
                dst.field().to_string()
            },
        });
    }
    for d in [src.dim(), dst.dim()] {
        if f.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: f.dim(),
            });
        }
    }
    if src.omega() != dst.omega() {
        return Err(Error::OmegaMismatch);
    }
    let n = src.dim();
    let field = src.field();
    let basis: Vec<Vector> = (0..n).map(|i| basis_vector(field, n, i)).collect();
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    let labels = if src.kind().is_rb() { 1 } else { src.omega().len() };
    let mut violations = Vec::new();
    for &role in src.kind().roles() {
        for w in 0..labels {
            let (m, m2) = (src.product(role, w), dst.product(role, w));
            for i in 0..n {
                for j in 0..n {
                    let lhs = f.apply_unchecked(&m.apply_unchecked(&basis[i], &basis[j]));
                    let rhs = m2.apply_unchecked(&images[i], &images[j]);
                    if lhs != rhs {
                        violations.push(Violation {
                            axiom_id: format!("morphism-{role}"),
                            omega_indices: if src.kind().is_rb() {
                                vec![]
                            } else {
                                vec![src.omega().label(w).to_string()]
                            },
                            basis_indices: vec![i + 1, j + 1],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    if let (Some(a), Some(b)) = (src.operators(), dst.operators()) {
        for w in 0..src.omega().len() {
            for j in 0..n {
                let lhs = f.apply_unchecked(&a.ops[w].column(j));
                let rhs = b.ops[w].apply_unchecked(&images[j]);
                if lhs != rhs {
                    violations.push(Violation {
                        axiom_id: "morphism-operator".to_string(),
                        omega_indices: vec![src.omega().label(w).to_string()],
                        basis_indices: vec![j + 1],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    let (p, p2) = (src.twist_map(), dst.twist_map());
    for j in 0..n {
        let lhs = p2.apply_unchecked(&images[j]);
        let rhs = f.apply_unchecked(&p.column(j));
        if lhs != rhs {
            violations.push(Violation {
                axiom_id: "morphism-twist".to_string(),
                omega_indices: vec![],
                basis_indices: vec![j + 1],
                lhs,
                rhs,
            });
        }
    }
    Ok(CheckReport::from_violations(violations))
}

/// Re-evaluates a reported structural or side-condition violation.
///
/// Returns the freshly computed `(lhs, rhs)`, or `None` when the axiom id or
/// its indices do not fit the document.
pub fn replay(doc: &AlgebraDoc, violation: &Violation, options: &CheckOptions) -> Option<(Vector, Vector)> {
    if violation.axiom_id == Condition::Invertible.as_str() {
        let p = doc.twist_map();
        return (violation.lhs.len() == doc.dim()).then(|| (violation.lhs.clone(), p.apply_unchecked(&violation.lhs)));
    }
    let mut candidates = identity::identities(doc.kind(), options.dendriform_axiom3_twist);
    candidates.extend(identity::derived_identities(doc.kind()));
    for cond in Condition::ALL {
        candidates.extend(condition_identities(doc, cond));
    }
    let ident = candidates.into_iter().find(|i| i.id == violation.axiom_id.as_str())?;
    if violation.basis_indices.len() != ident.arity || violation.omega_indices.len() != ident.slots {
        return None;
    }
    let n = doc.dim();
    let args = violation
        .basis_indices
        .iter()
        .map(|&i| (1..=n).contains(&i).then(|| basis_vector(doc.field(), n, i - 1)))
        .collect::<Option<Vec<_>>>()?;
    let mut labels = [0; 2];
    for (slot, l) in violation.omega_indices.iter().enumerate() {
        labels[slot] = doc.omega().index_of(l)?;
    }
    if ident.slots == 1 {
        labels[1] = labels[0];
    }
    Some(Env::new(doc).sides(&ident, &args, labels))
}

#[cfg(test)]
mod tests;
