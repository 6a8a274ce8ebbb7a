//! JSON definition files and the built-in algebra and module names.
//!
//! Scalars are strings (`"a/b"` or an integer). A module action is an array
//! indexed by algebra basis element; each entry lists the image column of
//! every module basis vector.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Parity, Scalar};
use crate::report::Report;
use crate::supermodule::{free_module, regular_bimodule, zero_module, Action, Side, SuperModule};
use crate::superring::{dual_numbers, ground_field, matrix_superalgebra, super_skew_field, SuperAlgebra};
use crate::supervec::{Matrix, SuperSpace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub label: String,
    pub parity: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub field: FieldJson,
    pub basis: Vec<BasisJson>,
    pub unit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraRefs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub name: String,
    #[serde(default)]
    pub algebra_refs: AlgebraRefs,
    /// Only consulted when no algebra is referenced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub basis: Vec<BasisJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Vec<Vec<String>>>>,
}

impl FieldJson {
    pub fn to_field(&self) -> Result<Field> {
        match (self.kind.as_str(), self.p) {
            ("Q", _) => Ok(Field::Rationals),
            ("Fp", Some(p)) => Field::prime(p),
            ("Fp", None) => Err(Error::Parse("field kind Fp needs a modulus p".into())),
            (other, _) => Err(Error::Parse(format!("unknown field kind '{other}' (expected Q or Fp)"))),
        }
    }

    pub fn from_field(field: Field) -> FieldJson {
        match field {
            Field::Rationals => FieldJson { kind: "Q".into(), p: None },
            Field::Prime(p) => FieldJson {
                kind: "Fp".into(),
                p: Some(p),
            },
        }
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn scalars(field: Field, xs: &[String]) -> Result<Vec<Scalar>> {
    xs.iter().map(|s| field.parse_scalar(s)).collect()
}

fn strings(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(Scalar::to_canonical_string).collect()
}

fn space_of(field: Field, basis: &[BasisJson]) -> Result<SuperSpace> {
    let tagged: Vec<(String, Parity)> = basis.iter().map(|b| (b.label.clone(), b.parity)).collect();
    SuperSpace::from_tagged(field, &tagged)
}

fn basis_of(space: &SuperSpace) -> Vec<BasisJson> {
    (0..space.dim())
        .map(|i| BasisJson {
            label: space.label(i).to_string(),
            parity: space.parity(i),
        })
        .collect()
}

/// Builds an algebra; `field_override` reinterprets every scalar string.
pub fn algebra_from_json(json: &AlgebraJson, field_override: Option<Field>) -> Result<SuperAlgebra> {
    let field = match field_override {
        Some(f) => f,
        None => json.field.to_field()?,
    };
    let space = space_of(field, &json.basis)?;
    let unit = scalars(field, &json.unit)?;
    let table = json
        .mult
        .iter()
        .map(|row| row.iter().map(|v| scalars(field, v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SuperAlgebra::new(json.name.clone(), space, unit, table)
}

pub fn algebra_to_json(a: &SuperAlgebra) -> AlgebraJson {
    AlgebraJson {
        name: a.name().to_string(),
        field: FieldJson::from_field(a.field()),
        basis: basis_of(a.space()),
        unit: strings(a.unit()),
        mult: a
            .table()
            .iter()
            .map(|row| row.iter().map(|v| strings(v)).collect())
            .collect(),
    }
}

pub fn parse_algebra(text: &str, field_override: Option<Field>) -> Result<SuperAlgebra> {
    algebra_from_json(&parse_json(text)?, field_override)
}

pub fn algebra_to_string(a: &SuperAlgebra) -> String {
    serde_json::to_string_pretty(&algebra_to_json(a)).expect("algebra JSON serialises")
}

fn action_from_json(
    algebra: &Arc<SuperAlgebra>,
    dim: usize,
    data: &[Vec<Vec<String>>],
    name: &str,
) -> Result<Action> {
    let bad = |reason: String| Error::InvalidModule {
        name: name.to_string(),
        reason,
    };
    if data.len() != algebra.dim() {
        return Err(bad(format!(
            "action lists {} operators, algebra {} has dimension {}",
            data.len(),
            algebra.name(),
            algebra.dim()
        )));
    }
    let field = algebra.field();
    let mats = data
        .iter()
        .map(|cols| {
            if cols.len() != dim || cols.iter().any(|c| c.len() != dim) {
                return Err(bad(format!("each operator must list {dim} columns of length {dim}")));
            }
            let cols = cols.iter().map(|c| scalars(field, c)).collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(field, dim, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Action {
        algebra: algebra.clone(),
        mats,
    })
}

fn action_to_json(action: &Action) -> Vec<Vec<Vec<String>>> {
    action
        .mats
        .iter()
        .map(|m| m.columns().iter().map(|c| strings(c)).collect())
        .collect()
}

/// Builds a module, resolving algebra references through `resolve`.
pub fn module_from_json(
    json: &ModuleJson,
    mut resolve: impl FnMut(&str) -> Result<Arc<SuperAlgebra>>,
    default_field: Field,
) -> Result<SuperModule> {
    let left = json.algebra_refs.left.as_deref().map(&mut resolve).transpose()?;
    let right = json.algebra_refs.right.as_deref().map(&mut resolve).transpose()?;
    let field = match (&left, &right, &json.field) {
        (Some(a), _, _) | (None, Some(a), _) => a.field(),
        (None, None, Some(f)) => f.to_field()?,
        (None, None, None) => default_field,
    };
    let space = space_of(field, &json.basis)?;
    let dim = space.dim();
    let build = |alg: &Option<Arc<SuperAlgebra>>, data: &Option<Vec<Vec<Vec<String>>>>, side: &str| match (alg, data) {
        (Some(a), Some(d)) => action_from_json(a, dim, d, &json.name).map(Some),
        (None, None) => Ok(None),
        (Some(_), None) => Err(Error::Parse(format!("{side} algebra referenced but {side}_action missing"))),
        (None, Some(_)) => Err(Error::Parse(format!("{side}_action given without a {side} algebra reference"))),
    };
    let l = build(&left, &json.left_action, "left")?;
    let r = build(&right, &json.right_action, "right")?;
    SuperModule::new(json.name.clone(), space, l, r)
}

pub fn module_to_json(m: &SuperModule) -> ModuleJson {
    ModuleJson {
        name: m.name().to_string(),
        algebra_refs: AlgebraRefs {
            left: m.left().map(|a| a.algebra.name().to_string()),
            right: m.right().map(|a| a.algebra.name().to_string()),
        },
        field: (m.left().is_none() && m.right().is_none()).then(|| FieldJson::from_field(m.field())),
        basis: basis_of(m.space()),
        left_action: m.left().map(action_to_json),
        right_action: m.right().map(action_to_json),
    }
}

pub fn module_to_string(m: &SuperModule) -> String {
    serde_json::to_string_pretty(&module_to_json(m)).expect("module JSON serialises")
}

pub fn report_to_json(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("report JSON serialises")
}

const BUILTIN: &str = "builtin:";

fn query(spec: &str) -> (&str, HashMap<&str, &str>) {
    match spec.split_once('?') {
        Some((head, q)) => (
            head,
            q.split('&').filter_map(|kv| kv.split_once('=')).collect(),
        ),
        None => (spec, HashMap::new()),
    }
}

fn param(params: &HashMap<&str, &str>, key: &str, default: usize) -> Result<usize> {
    match params.get(key) {
        Some(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("parameter {key}='{v}' is not a natural number"))),
        None => Ok(default),
    }
}

/// `builtin:D`, `builtin:M11`, `builtin:Mmn?m=..&n=..`, `builtin:dual-numbers`, `builtin:k`.
pub fn builtin_algebra(spec: &str, field: Field) -> Result<SuperAlgebra> {
    let body = spec.strip_prefix(BUILTIN).unwrap_or(spec);
    let (head, params) = query(body);
    match head {
        "D" => Ok(super_skew_field(field)),
        "M11" => Ok(matrix_superalgebra(1, 1, field)),
        "Mmn" => {
            let m = param(&params, "m", 1)?;
            let n = param(&params, "n", 1)?;
            if m + n == 0 {
                return Err(Error::Parse("Mmn needs m + n > 0".into()));
            }
            Ok(matrix_superalgebra(m, n, field))
        }
        "dual-numbers" => Ok(dual_numbers(field)),
        "k" => Ok(ground_field(field)),
        other => Err(Error::Parse(format!(
            "unknown builtin algebra '{other}' (known: D, M11, Mmn, dual-numbers, k)"
        ))),
    }
}

fn side_param(params: &HashMap<&str, &str>) -> Result<Side> {
    match params.get("side").copied().unwrap_or("right") {
        "right" => Ok(Side::Right),
        "left" => Ok(Side::Left),
        other => Err(Error::Parse(format!("side must be left or right, got '{other}'"))),
    }
}

/// Modules over `r`: `free?m=..&n=..&side=..`, `zero`, `regular` (the
/// bimodule) and `residue` (`k` with the augmentation action, on the right).
pub fn builtin_module(spec: &str, r: &Arc<SuperAlgebra>) -> Result<SuperModule> {
    let body = spec.strip_prefix(BUILTIN).unwrap_or(spec);
    let (head, params) = query(body);
    match head {
        "free" => Ok(free_module(r, param(&params, "m", 1)?, param(&params, "n", 0)?, side_param(&params)?)),
        "zero" => Ok(zero_module(r, side_param(&params)?)),
        "regular" => Ok(regular_bimodule(r)),
        "residue" => residue_module(r),
        other => Err(Error::Parse(format!(
            "unknown builtin module '{other}' (known: free, zero, regular, residue)"
        ))),
    }
}

/// `k` as a right module through the projection onto the first basis vector,
/// which must be a ring map `R → k` (true for the dual numbers).
pub fn residue_module(r: &Arc<SuperAlgebra>) -> Result<SuperModule> {
    let field = r.field();
    let mats = (0..r.dim())
        .map(|i| Matrix::from_columns(field, 1, &[vec![if i == 0 { field.one() } else { field.zero() }]]))
        .collect();
    let action = Action {
        algebra: r.clone(),
        mats,
    };
    let m = SuperModule::new("k", SuperSpace::with_dims(field, 1, 0), None, Some(action))?;
    if !crate::supermodule::is_valid_module(&m) {
        return Err(Error::PreconditionFailed(format!("{} has no augmentation onto k", r.name())));
    }
    Ok(m)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Loads `builtin:..` or a JSON file; the field override applies to both.
pub fn load_algebra(spec: &str, field_override: Option<Field>) -> Result<SuperAlgebra> {
    if spec.starts_with(BUILTIN) {
        return builtin_algebra(spec, field_override.unwrap_or(Field::Rationals));
    }
    parse_algebra(&read(Path::new(spec))?, field_override)
}

/// Loads a module over `r`; file references must name `r`.
pub fn load_module(spec: &str, r: &Arc<SuperAlgebra>) -> Result<SuperModule> {
    if spec.starts_with(BUILTIN) {
        return builtin_module(spec, r);
    }
    let json: ModuleJson = parse_json(&read(Path::new(spec))?)?;
    module_from_json(
        &json,
        |name| {
            if name == r.name() {
                Ok(r.clone())
            } else {
                Err(Error::Parse(format!("module refers to algebra '{name}', expected '{}'", r.name())))
            }
        },
        r.field(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supermodule::parity_reverse;

    const Q: Field = Field::Rationals;

    #[test]
    fn algebra_round_trip() {
        let d = super_skew_field(Q);
        let text = algebra_to_string(&d);
        let back = parse_algebra(&text, None).unwrap();
        assert_eq!(back, d);
        let f5 = parse_algebra(&text, Some(Field::Prime(5))).unwrap();
        assert_eq!(f5, super_skew_field(Field::Prime(5)));
    }

    #[test]
    fn odd_before_even_is_rejected() {
        let text = r#"{"name":"bad","field":{"kind":"Q"},
            "basis":[{"label":"t","parity":"odd"},{"label":"1","parity":"even"}],
            "unit":["0","1"],
            "mult":[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
        let err = parse_algebra(text, None).unwrap_err();
        assert!(err.to_string().contains("even basis vectors first"), "{err}");
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(parse_algebra("{ not json", None), Err(Error::Parse(_))));
        assert!(matches!(
            parse_algebra(r#"{"name":"x","field":{"kind":"Fp","p":4},"basis":[],"unit":[],"mult":[]}"#, None),
            Err(Error::InvalidField(_))
        ));
    }

    #[test]
    fn module_round_trip() {
        let d = Arc::new(super_skew_field(Q));
        let m = parity_reverse(&regular_bimodule(&d));
        let json = module_to_json(&m);
        assert_eq!(json.algebra_refs.left.as_deref(), Some(d.name()));
        let back = module_from_json(&json, |_| Ok(d.clone()), Q).unwrap();
        assert_eq!(back, m);
        let err = module_from_json(&json, |n| Err(Error::Parse(format!("no {n}"))), Q).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn builtins_resolve() {
        assert_eq!(builtin_algebra("builtin:Mmn?m=2&n=1", Q).unwrap().graded_dim().total(), 9);
        assert!(builtin_algebra("builtin:nope", Q).is_err());
        let dn = Arc::new(dual_numbers(Q));
        let k = builtin_module("builtin:residue", &dn).unwrap();
        assert_eq!(k.dim(), 1);
        let d = Arc::new(super_skew_field(Q));
        assert!(residue_module(&d).is_err());
        let f = builtin_module("builtin:free?m=1&n=1", &d).unwrap();
        assert_eq!(f.dim(), 4);
        assert!(f.right().is_some() && f.left().is_none());
    }
}
