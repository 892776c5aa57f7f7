//! The JSON document format.
//!
//! ```text
//! {"format-version":"1","field":{"kind":"prime-field","p":3},"dim":2,
//!  "omega":["a"],"kind":"hom-assoc-matching-rb",
//!  "families":{"dot":{"*":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]]}},
//!  "operators":{"ops":{"a":[["0","0"],["1","0"]]},"weights":{"a":"0"}},
//!  "twist":[["1","0"],["0","1"]]}
//! ```
//!
//! Tensors are nested as `c[i][j][k]`, matrices as rows (`m[r][c]` is the
//! `e_r` coefficient of the image of `e_c`). Scalars are strings `"n"` or
//! `"a/b"`; bare JSON integers are accepted on input. The canonical form is a
//! single line with keys in the order above, labels in index-set order, and a
//! trailing newline.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, FieldSpec, LinearMap, Scalar};

use super::doc::SINGLE_PRODUCT_KEY;
use super::{AlgebraDoc, BilinearFamily, Kind, OmegaSet, OperatorFamily, Role};

pub const FORMAT_VERSION: &str = "1";

const TOP_KEYS: [&str; 8] = [
    "format-version",
    "field",
    "dim",
    "omega",
    "kind",
    "families",
    "operators",
    "twist",
];

pub fn parse_doc(text: &[u8]) -> Result<AlgebraDoc> {
    let value: Value = serde_json::from_slice(text).map_err(|e| Error::Syntax(e.to_string()))?;
    doc_from_value(&value)
}

pub fn serialize_doc(doc: &AlgebraDoc) -> String {
    let mut s = serde_json::to_string(&doc_to_value(doc)).expect("document serializes");
    s.push('\n');
    s
}

pub fn doc_to_value(doc: &AlgebraDoc) -> Value {
    let mut top = Map::new();
    top.insert("format-version".into(), FORMAT_VERSION.into());
    top.insert("field".into(), field_to_value(doc.field()));
    top.insert("dim".into(), doc.dim().into());
    top.insert(
        "omega".into(),
        Value::Array(doc.omega().labels().iter().map(|l| Value::from(l.as_str())).collect()),
    );
    top.insert("kind".into(), doc.kind().as_str().into());
    let mut fams = Map::new();
    for fam in doc.families() {
        let mut by_label = Map::new();
        for (w, m) in fam.maps.iter().enumerate() {
            by_label.insert(doc.family_key(w).to_string(), tensor_to_value(m));
        }
        fams.insert(fam.role.as_str().into(), Value::Object(by_label));
    }
    top.insert("families".into(), Value::Object(fams));
    if let Some(ops) = doc.operators() {
        let mut op_map = Map::new();
        let mut weights = Map::new();
        for (w, label) in doc.omega().labels().iter().enumerate() {
            op_map.insert(label.clone(), matrix_to_value(&ops.ops[w]));
            weights.insert(label.clone(), scalar_to_value(&ops.weights[w]));
        }
        let mut o = Map::new();
        o.insert("ops".into(), Value::Object(op_map));
        o.insert("weights".into(), Value::Object(weights));
        top.insert("operators".into(), Value::Object(o));
    }
    if let Some(p) = doc.twist() {
        top.insert("twist".into(), matrix_to_value(p));
    }
    Value::Object(top)
}

fn field_to_value(field: FieldSpec) -> Value {
    let mut m = Map::new();
    match field {
        FieldSpec::Rationals => {
            m.insert("kind".into(), "rationals".into());
        }
        FieldSpec::Prime(p) => {
            m.insert("kind".into(), "prime-field".into());
            m.insert("p".into(), p.into());
        }
    }
    Value::Object(m)
}

pub(crate) fn scalar_to_value(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn matrix_to_value(m: &LinearMap) -> Value {
    Value::Array(
        m.rows()
            .map(|r| Value::Array(r.iter().map(scalar_to_value).collect()))
            .collect(),
    )
}

fn tensor_to_value(m: &BilinearMap) -> Value {
    let n = m.dim();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| Value::Array(m.product(i, j).iter().map(scalar_to_value).collect()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn doc_from_value(value: &Value) -> Result<AlgebraDoc> {
    let top = value
        .as_object()
        .ok_or_else(|| Error::shape("", "document must be a JSON object"))?;
    if let Some(k) = top.keys().find(|k| !TOP_KEYS.contains(&k.as_str())) {
        return Err(Error::shape(format!("/{k}"), "unknown key"));
    }
    match top.get("format-version") {
        Some(Value::String(v)) if v == FORMAT_VERSION => {}
        Some(_) => return Err(Error::shape("/format-version", "unsupported format version")),
        None => return Err(Error::shape("/format-version", "missing")),
    }
    let field = parse_field(required(top, "field")?)?;
    let dim = required(top, "dim")?
        .as_u64()
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::shape("/dim", "expected a positive integer"))? as usize;
    let omega_vals = required(top, "omega")?
        .as_array()
        .ok_or_else(|| Error::shape("/omega", "expected an array of labels"))?;
    let labels = omega_vals
        .iter()
        .enumerate()
        .map(|(n, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::shape(format!("/omega/{n}"), "label must be a string"))
        })
        .collect::<Result<Vec<_>>>()?;
    let omega = OmegaSet::new(labels)?;
    let kind: Kind = required(top, "kind")?
        .as_str()
        .ok_or_else(|| Error::shape("/kind", "expected a string"))?
        .parse()?;

    let fam_obj = required(top, "families")?
        .as_object()
        .ok_or_else(|| Error::shape("/families", "expected an object"))?;
    let keys: Vec<String> = if kind.is_rb() {
        vec![SINGLE_PRODUCT_KEY.to_string()]
    } else {
        omega.labels().to_vec()
    };
    let mut families = Vec::new();
    for (role_name, body) in fam_obj {
        let role: Role = role_name
            .parse()
            .map_err(|_| Error::shape(format!("/families/{role_name}"), "unknown role"))?;
        let path = format!("/families/{role_name}");
        let entries = labelled(body, &keys, &path)?;
        let maps = entries
            .into_iter()
            .map(|(key, v)| parse_tensor(v, field, dim, &format!("{path}/{key}")))
            .collect::<Result<Vec<_>>>()?;
        families.push(BilinearFamily::new(role, maps));
    }

    let operators = match top.get("operators") {
        None => None,
        Some(v) => {
            let o = v
                .as_object()
                .ok_or_else(|| Error::shape("/operators", "expected an object"))?;
            if let Some(k) = o.keys().find(|k| *k != "ops" && *k != "weights") {
                return Err(Error::shape(format!("/operators/{k}"), "unknown key"));
            }
            let ops_v = o
                .get("ops")
                .ok_or_else(|| Error::shape("/operators/ops", "missing"))?;
            let weights_v = o
                .get("weights")
                .ok_or_else(|| Error::shape("/operators/weights", "missing"))?;
            let ops = labelled(ops_v, omega.labels(), "/operators/ops")?
                .into_iter()
                .map(|(l, v)| parse_matrix(v, field, dim, &format!("/operators/ops/{l}")))
                .collect::<Result<Vec<_>>>()?;
            let weights = labelled(weights_v, omega.labels(), "/operators/weights")?
                .into_iter()
                .map(|(l, v)| parse_scalar(v, field, &format!("/operators/weights/{l}")))
                .collect::<Result<Vec<_>>>()?;
            Some(OperatorFamily::new(ops, weights))
        }
    };
    let twist = top
        .get("twist")
        .map(|v| parse_matrix(v, field, dim, "/twist"))
        .transpose()?;
    AlgebraDoc::new(field, dim, omega, kind, families, operators, twist)
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::shape(format!("/{key}"), "missing"))
}

/// Entries of an object keyed exactly by `keys`, returned in `keys` order.
fn labelled<'a>(value: &'a Value, keys: &'a [String], path: &str) -> Result<Vec<(&'a str, &'a Value)>> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::shape(path, "expected an object keyed by label"))?;
    if let Some(k) = obj.keys().find(|k| !keys.contains(k)) {
        return Err(Error::shape(format!("{path}/{k}"), "unexpected label"));
    }
    keys.iter()
        .map(|k| {
            obj.get(k)
                .map(|v| (k.as_str(), v))
                .ok_or_else(|| Error::shape(format!("{path}/{k}"), "missing label"))
        })
        .collect()
}

fn parse_field(v: &Value) -> Result<FieldSpec> {
    let o = v
        .as_object()
        .ok_or_else(|| Error::shape("/field", "expected an object"))?;
    match o.get("kind").and_then(Value::as_str) {
        Some("rationals") => {
            if o.len() != 1 {
                return Err(Error::shape("/field", "rationals take no parameters"));
            }
            Ok(FieldSpec::Rationals)
        }
        Some("prime-field") => {
            let p = o
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::shape("/field/p", "expected a prime modulus"))?;
            if o.len() != 2 {
                return Err(Error::shape("/field", "unexpected field parameters"));
            }
            FieldSpec::prime(p).map_err(|e| Error::shape("/field/p", e.to_string()))
        }
        _ => Err(Error::shape("/field/kind", "expected \"rationals\" or \"prime-field\"")),
    }
}

fn parse_scalar(v: &Value, field: FieldSpec, path: &str) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(Error::shape(path, "scalar must be a string or an integer")),
    };
    field
        .parse_scalar(&text)
        .map_err(|e| Error::shape(path, e.to_string()))
}

fn array_of_len<'a>(v: &'a Value, len: usize, path: &str) -> Result<&'a Vec<Value>> {
    let a = v
        .as_array()
        .ok_or_else(|| Error::shape(path, "expected an array"))?;
    if a.len() != len {
        return Err(Error::shape(
            path,
            format!("expected length {len}, found {}", a.len()),
        ));
    }
    Ok(a)
}

pub fn parse_matrix(v: &Value, field: FieldSpec, dim: usize, path: &str) -> Result<LinearMap> {
    let rows = array_of_len(v, dim, path)?;
    let mut entries = Vec::with_capacity(dim * dim);
    for (r, row) in rows.iter().enumerate() {
        let rp = format!("{path}/{r}");
        for (c, x) in array_of_len(row, dim, &rp)?.iter().enumerate() {
            entries.push(parse_scalar(x, field, &format!("{rp}/{c}"))?);
        }
    }
    LinearMap::new(field, dim, entries)
}

/// Parses a square matrix whose size is taken from the data.
pub fn parse_square_matrix(v: &Value, field: FieldSpec, path: &str) -> Result<LinearMap> {
    let dim = v
        .as_array()
        .map(Vec::len)
        .ok_or_else(|| Error::shape(path, "expected an array of rows"))?;
    parse_matrix(v, field, dim, path)
}

fn parse_tensor(v: &Value, field: FieldSpec, dim: usize, path: &str) -> Result<BilinearMap> {
    let mut c = Vec::with_capacity(dim * dim * dim);
    for (i, slab) in array_of_len(v, dim, path)?.iter().enumerate() {
        let ip = format!("{path}/{i}");
        for (j, row) in array_of_len(slab, dim, &ip)?.iter().enumerate() {
            let jp = format!("{ip}/{j}");
            for (k, x) in array_of_len(row, dim, &jp)?.iter().enumerate() {
                c.push(parse_scalar(x, field, &format!("{jp}/{k}"))?);
            }
        }
    }
    BilinearMap::new(field, dim, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = r#"{"format-version":"1","field":{"kind":"rationals"},"dim":2,"omega":["a"],"kind":"matching-hom-assoc","families":{"dot":{"a":[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}},"twist":[["1","0"],["0","1"]]}
"#;

    #[test]
    fn canonical_text_round_trips_bytewise() {
        let doc = parse_doc(Z2.as_bytes()).unwrap();
        assert_eq!(serialize_doc(&doc), Z2);
    }

    #[test]
    fn wrong_tensor_shape() {
        let text = r#"{"format-version":"1","field":{"kind":"rationals"},"dim":2,"omega":["a"],"kind":"matching-hom-assoc","families":{"dot":{"a":[[[0,0],[0,0]],[[0,0],[0,0]],[[0,0],[0,0]]]}},"twist":[[1,0],[0,1]]}"#;
        match parse_doc(text.as_bytes()) {
            Err(Error::Shape { path, .. }) => assert_eq!(path, "/families/dot/a"),
            other => panic!("expected shape error, got {other:?}"),
        }
    }

    #[test]
    fn non_alternating_bracket() {
        let text = r#"{"format-version":"1","field":{"kind":"rationals"},"dim":2,"omega":["a"],"kind":"matching-hom-lie","families":{"bracket":{"a":[[[0,1],[0,0]],[[0,0],[0,0]]]}},"twist":[[1,0],[0,1]]}"#;
        match parse_doc(text.as_bytes()) {
            Err(Error::Shape { path, message }) => {
                assert_eq!(path, "/families/bracket/a/0/0/1");
                assert!(message.contains("alternating"));
            }
            other => panic!("expected shape error, got {other:?}"),
        }
    }

    #[test]
    fn residues_are_reduced_on_output() {
        let text = r#"{"format-version":"1","field":{"kind":"prime-field","p":3},"dim":1,"omega":["a"],"kind":"matching-hom-assoc","families":{"dot":{"a":[[[5]]]}},"twist":[["-1"]]}"#;
        let out = serialize_doc(&parse_doc(text.as_bytes()).unwrap());
        assert!(out.contains(r#"[[["2"]]]"#));
        assert!(out.contains(r#""twist":[["2"]]"#));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_doc(&Z2.as_bytes()[..40]), Err(Error::Syntax(_))));
        assert!(matches!(parse_doc(b"\xff\xfe"), Err(Error::Syntax(_))));
    }

    #[test]
    fn shape_errors_on_bad_fields() {
        let cases = [
            (Z2.replace("\"1\",\"field\"", "\"2\",\"field\""), "/format-version"),
            (Z2.replace(r#"{"kind":"rationals"}"#, r#"{"kind":"prime-field","p":4}"#), "/field/p"),
            (Z2.replace("\"omega\":[\"a\"]", "\"omega\":[]"), "/omega"),
            (Z2.replace("\"dim\":2", "\"dim\":0"), "/dim"),
            (Z2.replace("matching-hom-assoc", "no-such-kind"), "/kind"),
            (Z2.replace(",\"twist\":[[\"1\",\"0\"],[\"0\",\"1\"]]", ""), "/twist"),
        ];
        for (text, want) in cases {
            match parse_doc(text.as_bytes()) {
                Err(Error::Shape { path, .. }) => assert_eq!(path, want, "{text}"),
                other => panic!("expected shape error at {want}, got {other:?}"),
            }
        }
    }
}
