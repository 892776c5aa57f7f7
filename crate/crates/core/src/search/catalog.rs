use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, FieldSpec, LinearMap};
use crate::structures::{AlgebraDoc, BilinearFamily, Kind, OmegaSet, OperatorFamily, Role};

const BASE_NAMES: [&str; 6] = ["Z2", "D1", "N2", "N2-Pnil-w0", "N2-id-wm1", "aff2"];
const REDUCTIONS: [(&str, u64); 2] = [("F2", 2), ("F3", 3)];

/// Names of the built-in fixtures, in catalog order.
pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = BASE_NAMES.iter().map(|s| s.to_string()).collect();
    for (suffix, _) in REDUCTIONS {
        names.extend(BASE_NAMES.iter().map(|s| format!("{s}-{suffix}")));
    }
    names
}

/// With no name, every fixture in catalog order; otherwise the named one.
pub fn catalog(name: Option<&str>) -> Result<Vec<AlgebraDoc>> {
    match name {
        Some(n) => Ok(vec![catalog_fixture(n)?]),
        None => catalog_names().iter().map(|n| catalog_fixture(n)).collect(),
    }
}

/// A single fixture by name, e.g. `"N2"` or `"aff2-F3"`.
pub fn catalog_fixture(name: &str) -> Result<AlgebraDoc> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let (base, field) = match REDUCTIONS
        .iter()
        .find_map(|(suffix, p)| name.strip_suffix(&format!("-{suffix}")).map(|b| (b, *p)))
    {
        Some((b, p)) => (b, FieldSpec::Prime(p)),
        None => (name, FieldSpec::Rationals),
    };
    if !BASE_NAMES.contains(&base) {
        return Err(unknown());
    }
    Ok(build(base, field))
}

/// `u.u = u`, `u.t = t.u = t`, `t.t = 0`.
pub(crate) fn n2_product(field: FieldSpec) -> BilinearMap {
    BilinearMap::from_entries(field, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

/// `u -> t`, `t -> 0`.
pub(crate) fn p_nil(field: FieldSpec) -> LinearMap {
    LinearMap::from_i64_rows(field, &[&[0, 0], &[1, 0]]).expect("2x2")
}

fn build(base: &str, field: FieldSpec) -> AlgebraDoc {
    let a = OmegaSet::singleton("a");
    let id = |n| Some(LinearMap::identity(field, n));
    let dot = |m| vec![BilinearFamily::single(Role::Dot, m)];
    let rb = |op: LinearMap, w: i64| {
        AlgebraDoc::new(
            field,
            2,
            a.clone(),
            Kind::HomAssocMatchingRb,
            dot(n2_product(field)),
            Some(OperatorFamily::new(vec![op], vec![field.from_i64(w)])),
            id(2),
        )
    };
    let doc = match base {
        "Z2" => AlgebraDoc::new(field, 2, a.clone(), Kind::MatchingHomAssoc, dot(BilinearMap::zero(field, 2)), None, id(2)),
        "D1" => AlgebraDoc::new(
            field,
            1,
            a.clone(),
            Kind::MatchingHomAssoc,
            dot(BilinearMap::from_entries(field, 1, &[(0, 0, 0, 1)])),
            None,
            id(1),
        ),
        "N2" => AlgebraDoc::new(field, 2, a.clone(), Kind::MatchingHomAssoc, dot(n2_product(field)), None, id(2)),
        "N2-Pnil-w0" => rb(p_nil(field), 0),
        "N2-id-wm1" => rb(LinearMap::identity(field, 2), -1),
        "aff2" => AlgebraDoc::new(
            field,
            2,
            a.clone(),
            Kind::MatchingHomLie,
            vec![BilinearFamily::single(
                Role::Bracket,
                BilinearMap::from_entries(field, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)]),
            )],
            None,
            id(2),
        ),
        _ => unreachable!("checked by caller"),
    };
    doc.expect("catalog fixtures are well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_structure;

    #[test]
    fn every_fixture_passes_its_check() {
        for name in catalog_names() {
            let doc = catalog_fixture(&name).unwrap();
            assert!(check_structure(&doc).passed(), "{name}");
        }
    }

    #[test]
    fn reductions_live_over_prime_fields() {
        assert_eq!(catalog_fixture("N2-F3").unwrap().field(), FieldSpec::Prime(3));
        assert_eq!(catalog_fixture("aff2").unwrap().field(), FieldSpec::Rationals);
        assert_eq!(catalog(None).unwrap().len(), 18);
    }

    #[test]
    fn unknown_names() {
        for bad in ["no-such", "N2-F5", "-F2", ""] {
            assert!(matches!(catalog_fixture(bad), Err(Error::UnknownFixture(_))), "{bad}");
        }
    }
}
