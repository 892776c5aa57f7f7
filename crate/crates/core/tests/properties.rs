use proptest::prelude::*;

use halg::axioms::{check_structure, check_structure_with, replay, CheckOptions};
use halg::linalg::{vadd, vscale};
use halg::{
    parse_doc, serialize_doc, AlgebraDoc, BilinearFamily, BilinearMap, FieldSpec, Kind, LinearMap, OmegaSet, Role,
    Scalar,
};

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
    ]
}

fn scalars(field: FieldSpec, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((-4i64..=4, 1i64..=3), n).prop_map(move |v| {
        v.into_iter()
            .map(|(a, b)| field.fraction(a, b).unwrap_or_else(|| field.from_i64(a)))
            .collect()
    })
}

fn tensor(field: FieldSpec, dim: usize) -> impl Strategy<Value = BilinearMap> {
    scalars(field, dim * dim * dim).prop_map(move |c| BilinearMap::new(field, dim, c).unwrap())
}

fn matrix(field: FieldSpec, dim: usize) -> impl Strategy<Value = LinearMap> {
    scalars(field, dim * dim).prop_map(move |c| LinearMap::new(field, dim, c).unwrap())
}

fn hom_assoc(m: BilinearMap, p: LinearMap) -> AlgebraDoc {
    AlgebraDoc::new(
        m.field(),
        m.dim(),
        OmegaSet::singleton("a"),
        Kind::MatchingHomAssoc,
        vec![BilinearFamily::single(Role::Dot, m)],
        None,
        Some(p),
    )
    .unwrap()
}

/// Residue vectors of `F_3^2` as scalars.
fn f3_elements() -> Vec<Vec<Scalar>> {
    let f = FieldSpec::prime(3).unwrap();
    (0..9).map(|v| vec![f.residue(v % 3), f.residue(v / 3)]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn products_are_bilinear(
        (m, x, y, z, c) in field_strategy().prop_flat_map(|f| {
            (tensor(f, 3), scalars(f, 3), scalars(f, 3), scalars(f, 3), scalars(f, 1))
        })
    ) {
        let c = &c[0];
        let left = m.apply(&vadd(&x, &vscale(c, &y)), &z).unwrap();
        let split = vadd(&m.apply(&x, &z).unwrap(), &vscale(c, &m.apply(&y, &z).unwrap()));
        prop_assert_eq!(left, split);
        let right = m.apply(&z, &vadd(&x, &y)).unwrap();
        prop_assert_eq!(right, vadd(&m.apply(&z, &x).unwrap(), &m.apply(&z, &y).unwrap()));
    }

    #[test]
    fn inversion_or_kernel(p in field_strategy().prop_flat_map(|f| matrix(f, 3))) {
        let id = LinearMap::identity(p.field(), 3);
        match p.invert() {
            Ok(q) => {
                prop_assert_eq!(p.compose(&q).unwrap(), id.clone());
                prop_assert_eq!(q.compose(&p).unwrap(), id);
                prop_assert!(p.kernel_vector().is_none());
            }
            Err(_) => {
                let v = p.kernel_vector().expect("singular maps have a kernel");
                prop_assert!(v.iter().any(|s| !s.is_zero()));
                prop_assert!(p.apply(&v).unwrap().iter().all(Scalar::is_zero));
            }
        }
    }

    #[test]
    fn documents_round_trip(
        (m, p) in field_strategy().prop_flat_map(|f| (tensor(f, 2), matrix(f, 2)))
    ) {
        let doc = hom_assoc(m, p);
        let text = serialize_doc(&doc);
        let back = parse_doc(text.as_bytes()).unwrap();
        prop_assert_eq!(serialize_doc(&back), text);
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn witnesses_replay(
        (m, p) in field_strategy().prop_flat_map(|f| (tensor(f, 2), matrix(f, 2)))
    ) {
        let doc = hom_assoc(m, p);
        let options = CheckOptions::default();
        for v in check_structure(&doc).violations {
            let (lhs, rhs) = replay(&doc, &v, &options).expect("replayable");
            prop_assert_ne!(&lhs, &rhs);
            prop_assert_eq!(lhs, v.lhs.clone());
            prop_assert_eq!(rhs, v.rhs.clone());
        }
    }

    /// Checking basis triples decides the identity on every element triple.
    #[test]
    fn basis_checks_are_complete(
        (m, p) in (tensor(FieldSpec::prime(3).unwrap(), 2), matrix(FieldSpec::prime(3).unwrap(), 2))
    ) {
        let elements = f3_elements();
        let holds = elements.iter().all(|x| elements.iter().all(|y| elements.iter().all(|z| {
            let lhs = m.apply(&m.apply(x, y).unwrap(), &p.apply(z).unwrap()).unwrap();
            let rhs = m.apply(&p.apply(x).unwrap(), &m.apply(y, z).unwrap()).unwrap();
            lhs == rhs
        })));
        prop_assert_eq!(check_structure(&hom_assoc(m, p)).passed(), holds);
    }

    /// Relabelling the basis does not change the verdict.
    #[test]
    fn verdict_is_basis_order_independent(
        (m, p) in field_strategy().prop_flat_map(|f| (tensor(f, 3), matrix(f, 3)))
    ) {
        let f = m.field();
        let perm = LinearMap::from_i64_rows(f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]).unwrap();
        let inv = perm.invert().unwrap();
        let m2 = m.precompose(&inv, &inv).compose_left(&perm);
        let p2 = perm.compose(&p).unwrap().compose(&inv).unwrap();
        let a = check_structure(&hom_assoc(m, p));
        let b = check_structure(&hom_assoc(m2, p2));
        prop_assert_eq!(a.passed(), b.passed());
        prop_assert_eq!(a.violations.len(), b.violations.len());
    }

    #[test]
    fn first_violation_matches_full_scan(
        (m, p) in field_strategy().prop_flat_map(|f| (tensor(f, 2), matrix(f, 2)))
    ) {
        let doc = hom_assoc(m, p);
        let full = check_structure(&doc);
        let first = check_structure_with(&doc, &CheckOptions::first_only());
        prop_assert_eq!(full.passed(), first.passed());
        prop_assert_eq!(full.first(), first.first());
        prop_assert!(first.violations.len() <= 1);
    }
}
