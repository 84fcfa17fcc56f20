//! Structural JSON schemas of the command-line reports.

use serde_json::Value;

pub enum Ty {
    Str,
    Int,
    Bool,
    /// `[lo, hi]` with `hi` an integer or null.
    Interval,
    Nullable(Box<Ty>),
    Arr(Box<Ty>),
    Obj(Vec<(&'static str, Ty)>),
}

use Ty::*;

fn nullable(t: Ty) -> Ty {
    Nullable(Box::new(t))
}

fn arr(t: Ty) -> Ty {
    Arr(Box::new(t))
}

pub fn check(v: &Value, t: &Ty, path: &str) -> Result<(), String> {
    let bad = |what: &str| Err(format!("{path}: expected {what}, found {v}"));
    match t {
        Str if v.is_string() => Ok(()),
        Int if v.is_u64() || v.is_i64() => Ok(()),
        Bool if v.is_boolean() => Ok(()),
        Interval => match v.as_array().map(Vec::as_slice) {
            Some([lo, hi]) if lo.is_u64() && (hi.is_u64() || hi.is_null()) => Ok(()),
            _ => bad("an interval"),
        },
        Nullable(_) if v.is_null() => Ok(()),
        Nullable(inner) => check(v, inner, path),
        Arr(inner) => match v.as_array() {
            Some(items) => items.iter().enumerate().try_for_each(|(i, x)| check(x, inner, &format!("{path}[{i}]"))),
            None => bad("an array"),
        },
        Obj(fields) => {
            let Some(map) = v.as_object() else { return bad("an object") };
            for (k, ft) in fields {
                let x = map.get(*k).ok_or_else(|| format!("{path}: missing key {k}"))?;
                check(x, ft, &format!("{path}.{k}"))?;
            }
            Ok(())
        }
        Str => bad("a string"),
        Int => bad("an integer"),
        Bool => bad("a boolean"),
    }
}

pub fn analyze() -> Ty {
    Obj(vec![
        ("group", Str),
        ("order", Int),
        ("center", Obj(vec![("order", Int), ("rank", Int), ("cyclic", Bool)])),
        ("faithful", nullable(Bool)),
        ("abelian", Bool),
        ("covdim", Interval),
        ("edim", Interval),
        (
            "universe",
            arr(Obj(vec![("id", Str), ("description", Str), ("order", Int), ("covdim", Interval), ("edim", Interval)])),
        ),
        ("certificates", arr(Obj(vec![("rule", Str), ("cite", Str), ("conclusion", Str), ("premises", arr(Str))]))),
    ])
}

pub fn faithful() -> Ty {
    Obj(vec![
        ("group", Str),
        ("order", Int),
        ("gaschutz", nullable(Bool)),
        ("character_table", Bool),
        ("agree", Bool),
        ("faithful", nullable(Bool)),
    ])
}

pub fn table() -> Ty {
    Obj(vec![
        ("order", Int),
        ("conductor", Int),
        ("classes", arr(Obj(vec![("representative", Str), ("size", Int), ("order", Int)]))),
        ("characters", arr(Obj(vec![("degree", Int), ("faithful", Bool), ("values", arr(Str))]))),
    ])
}

fn degree_matrix() -> Ty {
    Obj(vec![("matrix", arr(arr(Int))), ("rank", Int), ("det", nullable(Str)), ("rational", Bool)])
}

fn covariant_file() -> Ty {
    let matrices = || arr(arr(arr(arr(Str))));
    let monomials = arr(Obj(vec![("coeff", Str), ("exponents", arr(Int))]));
    Obj(vec![
        ("spaces", Obj(vec![("domain", arr(Int)), ("codomain", arr(Int))])),
        ("group", Str),
        ("conductor", Int),
        ("rep_matrices", Obj(vec![("domain", matrices()), ("codomain", matrices())])),
        ("map", arr(arr(monomials))),
    ])
}

pub fn covariant(op: &str) -> Ty {
    match op {
        "check" => Obj(vec![
            ("file", Str),
            ("group", Str),
            ("domain", arr(Int)),
            ("codomain", arr(Int)),
            ("rational", Bool),
            ("equivariant", Bool),
            ("multihomogeneous", Bool),
            ("degree_matrix", nullable(degree_matrix())),
        ]),
        "degrees" => Obj(vec![("file", Str), ("degree_matrix", degree_matrix())]),
        "phimax" => Obj(vec![("file", Str), ("beta", arr(Int)), ("seed", Int), ("covariant", covariant_file())]),
        "dim" => Obj(vec![("file", Str), ("seed", Int), ("dim", Int), ("projective_dim", nullable(Int))]),
        "faithful" => Obj(vec![("file", Str), ("seed", Int), ("faithful", Bool)]),
        _ => unreachable!(),
    }
}

pub fn catalog() -> Ty {
    Obj(vec![
        (
            "entries",
            arr(Obj(vec![
                ("name", Str),
                ("group", Str),
                ("expected", Obj(vec![("covdim", Int), ("edim", nullable(Int))])),
                ("covdim", nullable(Interval)),
                ("edim", nullable(Interval)),
                ("certificates", Int),
                ("pass", Bool),
                ("error", nullable(Str)),
            ])),
        ),
        ("passed", Int),
        ("total", Int),
    ])
}

pub fn error() -> Ty {
    Obj(vec![("error", Obj(vec![("code", Str), ("message", Str)]))])
}
