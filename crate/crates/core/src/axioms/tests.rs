use super::*;
use crate::linalg::{BilinearMap, FieldSpec, LinearMap, Scalar};
use crate::search::catalog_fixture;
use crate::structures::{BilinearFamily, Kind, OmegaSet, OperatorFamily};

const Q: FieldSpec = FieldSpec::Rationals;

fn q(n: i64) -> Scalar {
    Q.from_i64(n)
}

fn vq(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| q(n)).collect()
}

fn assoc(m: BilinearMap, p: LinearMap) -> AlgebraDoc {
    let n = m.dim();
    AlgebraDoc::new(
        Q,
        n,
        OmegaSet::singleton("a"),
        Kind::MatchingHomAssoc,
        vec![BilinearFamily::single(Role::Dot, m)],
        None,
        Some(p),
    )
    .unwrap()
}

fn n2_with_twist(p: LinearMap) -> AlgebraDoc {
    catalog_fixture("N2").unwrap().with_twist(Some(p)).unwrap()
}

fn n2_dendriform(p: LinearMap) -> AlgebraDoc {
    let n2 = catalog_fixture("N2").unwrap();
    AlgebraDoc::new(
        Q,
        2,
        OmegaSet::singleton("a"),
        Kind::MatchingHomDendriform,
        vec![
            BilinearFamily::single(Role::Left, BilinearMap::zero(Q, 2)),
            BilinearFamily::single(Role::Right, n2.product(Role::Dot, 0).clone()),
        ],
        None,
        Some(p),
    )
    .unwrap()
}

#[test]
fn zero_products_pass_every_kind() {
    let p = LinearMap::from_i64_rows(Q, &[&[1, 2], &[3, 4]]).unwrap();
    let omega = OmegaSet::alphabetic(2);
    for kind in Kind::ALL {
        let maps = if kind.is_rb() { 1 } else { 2 };
        let families = kind
            .roles()
            .iter()
            .map(|&r| BilinearFamily::new(r, vec![BilinearMap::zero(Q, 2); maps]))
            .collect();
        let ops = OperatorFamily::new(vec![p.clone(), LinearMap::identity(Q, 2)], vec![q(5), q(-1)]);
        let twist = (!kind.is_plain()).then(|| p.clone());
        let doc = AlgebraDoc::new(Q, 2, omega.clone(), kind, families, Some(ops), twist).unwrap();
        assert!(check_structure(&doc).passed(), "{kind}");
    }
}

#[test]
fn n2_is_associative() {
    let doc = catalog_fixture("N2").unwrap();
    assert!(check_structure(&doc).passed());
    assert!(satisfies(&doc));
}

#[test]
fn non_associative_product_reports_witnesses() {
    let m = BilinearMap::from_entries(Q, 2, &[(0, 0, 0, 1), (0, 1, 0, 1)]);
    let doc = assoc(m, LinearMap::identity(Q, 2));
    let report = check_structure(&doc);
    assert!(!report.passed());
    let first = report.first().unwrap();
    assert_eq!(first.axiom_id, "mha");
    assert_eq!(first.omega_indices, ["a", "a"]);
    assert_eq!(first.basis_indices, [1, 2, 1]);
    let w = report
        .violations
        .iter()
        .find(|v| v.basis_indices == [1, 2, 2])
        .expect("(1,2,2) is a witness");
    assert_eq!(w.lhs, vq(&[1, 0]));
    assert_eq!(w.rhs, vq(&[0, 0]));
    assert!(!satisfies(&doc));
    assert_eq!(check_structure_with(&doc, &CheckOptions::first_only()).violations.len(), 1);
}

#[test]
fn identity_family_at_weight_minus_one() {
    assert!(check_structure(&catalog_fixture("N2-id-wm1").unwrap()).passed());
    assert!(check_structure(&catalog_fixture("N2-Pnil-w0").unwrap()).passed());
}

#[test]
fn pnil_at_weight_one_is_not_rota_baxter() {
    let doc = catalog_fixture("N2-Pnil-w0").unwrap();
    let ops = OperatorFamily::new(doc.operators().unwrap().ops.clone(), vec![q(1)]);
    let report = check_structure(&doc.with_operators(Some(ops)).unwrap());
    let v = report.first().unwrap();
    assert_eq!(v.axiom_id, "mrbe");
    assert_eq!(v.basis_indices, [1, 1]);
    assert_eq!(v.lhs, vq(&[0, 0]));
    assert_eq!(v.rhs, vq(&[0, 1]));
}

#[test]
fn side_conditions_on_identity() {
    let doc = catalog_fixture("N2-Pnil-w0").unwrap();
    assert!(check_side_conditions(&doc, &Condition::ALL).passed());
}

#[test]
fn centroid_witness() {
    let p = LinearMap::diagonal(Q, vq(&[1, 2])).unwrap();
    let report = check_side_conditions(&n2_with_twist(p), &[Condition::Centroid]);
    let v = report.first().unwrap();
    assert_eq!(v.axiom_id, "centroid-left");
    assert_eq!(v.basis_indices, [1, 2]);
    assert_eq!(v.lhs, vq(&[0, 2]));
    assert_eq!(v.rhs, vq(&[0, 1]));
}

#[test]
fn scalar_maps_are_central() {
    let p = LinearMap::scalar(Q, 2, q(3));
    assert!(check_side_conditions(&n2_with_twist(p), &[Condition::Centroid]).passed());
}

#[test]
fn endomorphism_failure_and_invertibility() {
    let doc = n2_with_twist(LinearMap::from_i64_rows(Q, &[&[0, 0], &[1, 0]]).unwrap());
    let report = check_side_conditions(&doc, &[Condition::Endomorphism, Condition::Invertible]);
    let first = report.first().unwrap();
    assert_eq!((first.axiom_id.as_str(), first.basis_indices.as_slice()), ("endomorphism", &[1, 1][..]));
    assert_eq!(first.lhs, vq(&[0, 1]));
    assert_eq!(first.rhs, vq(&[0, 0]));
    let inv = report.violations.iter().find(|v| v.axiom_id == "invertible").unwrap();
    assert_ne!(inv.lhs, inv.rhs);
    assert_eq!(inv.rhs, vq(&[0, 0]));
}

#[test]
fn unknown_condition_tag() {
    assert!(matches!(parse_conditions(&["commutes", "nope"]), Err(Error::UnknownCondition(t)) if t == "nope"));
    assert_eq!(parse_conditions(&["centroid"]).unwrap(), [Condition::Centroid]);
}

#[test]
fn morphisms() {
    let doc = n2_dendriform(LinearMap::identity(Q, 2));
    assert!(check_morphism(&LinearMap::identity(Q, 2), &doc, &doc).unwrap().passed());
    assert!(check_morphism(&LinearMap::zero(Q, 2), &doc, &doc).unwrap().passed());
    let nil = LinearMap::from_i64_rows(Q, &[&[0, 0], &[1, 0]]).unwrap();
    let report = check_morphism(&nil, &doc, &doc).unwrap();
    let v = report.first().unwrap();
    assert_eq!(v.axiom_id, "morphism-right");
    assert_eq!(v.basis_indices, [1, 1]);
    assert_eq!(v.lhs, vq(&[0, 1]));
    assert_eq!(v.rhs, vq(&[0, 0]));
}

#[test]
fn morphism_errors() {
    let dend = n2_dendriform(LinearMap::identity(Q, 2));
    let n2 = catalog_fixture("N2").unwrap();
    let id2 = LinearMap::identity(Q, 2);
    assert!(matches!(check_morphism(&id2, &dend, &n2), Err(Error::KindMismatch { .. })));
    let d1 = catalog_fixture("D1").unwrap();
    assert!(matches!(check_morphism(&id2, &d1, &d1), Err(Error::DimensionMismatch { .. })));
    let f2 = catalog_fixture("N2-F2").unwrap();
    assert!(matches!(check_morphism(&id2, &n2, &f2), Err(Error::FieldMismatch { .. })));
}

#[test]
fn twist_intertwining_is_checked() {
    let src = n2_dendriform(LinearMap::identity(Q, 2));
    let dst = n2_dendriform(LinearMap::scalar(Q, 2, q(0)));
    let report = check_morphism(&LinearMap::identity(Q, 2), &src, &dst).unwrap();
    assert!(report.violations.iter().all(|v| v.axiom_id == "morphism-twist"));
    assert_eq!(report.violations.len(), 2);
}

#[test]
fn witnesses_replay() {
    let m = BilinearMap::from_entries(Q, 2, &[(0, 0, 0, 1), (0, 1, 0, 1), (1, 1, 1, 3)]);
    let doc = assoc(m, LinearMap::from_i64_rows(Q, &[&[1, 1], &[0, 2]]).unwrap());
    let opts = CheckOptions::default();
    let report = check_structure(&doc);
    assert!(!report.violations.is_empty());
    for v in &report.violations {
        let (lhs, rhs) = replay(&doc, v, &opts).unwrap();
        assert_eq!((&lhs, &rhs), (&v.lhs, &v.rhs));
        assert_ne!(lhs, rhs);
    }
    let side = check_side_conditions(&doc, &Condition::ALL);
    for v in &side.violations {
        let (lhs, rhs) = replay(&doc, v, &opts).unwrap();
        assert_ne!(lhs, rhs, "{}", v.axiom_id);
    }
}

#[test]
fn verbose_adds_symmetry_for_matching_lie() {
    let aff = catalog_fixture("aff2").unwrap();
    let report = check_structure_with(&aff, &CheckOptions::verbose());
    assert!(report.passed());
    assert!(report.notes.is_empty());
}

#[test]
fn dendriform_axiom_three_toggle() {
    // p = 0 kills every term with p(z); only the right side of axiom 3 keeps x unshifted.
    let doc = n2_dendriform(LinearMap::zero(Q, 2));
    assert!(check_structure(&doc).passed());
    let literal = CheckOptions {
        dendriform_axiom3_twist: false,
        ..CheckOptions::default()
    };
    let report = check_structure_with(&doc, &literal);
    assert_eq!(report.first().unwrap().axiom_id, "dend3");
    let verbose = check_structure_with(&doc, &CheckOptions::verbose());
    assert_eq!(verbose.notes.len(), 1);
}

#[test]
fn scaled_copies_of_n2_are_totally_compatible() {
    let n2 = catalog_fixture("N2").unwrap();
    let m = n2.product(Role::Dot, 0);
    let doc = |kind| {
        AlgebraDoc::new(
            Q,
            2,
            OmegaSet::alphabetic(2),
            kind,
            vec![BilinearFamily::new(Role::Dot, vec![m.clone(), m.scale(&q(2))])],
            None,
            Some(LinearMap::identity(Q, 2)),
        )
        .unwrap()
    };
    assert!(check_structure(&doc(Kind::MatchingHomAssoc)).passed());
    assert!(check_structure(&doc(Kind::TotallyCompatibleHomAssoc)).passed());
    assert!(check_structure(&doc(Kind::CompatibleHomAssoc)).passed());
}
