//! Code-spec files and builtin code names.
//!
//! A code-spec file holds a field descriptor line (`5`, `3^2`, `3^2:1,0,1`)
//! followed by one generator row per line as comma-separated element
//! encodings. `#` starts a comment.

use std::path::Path;
use std::sync::Arc;

use crate::code::{default_glynn_w, glynn_code, prs_code, rs_code, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldDescriptor};
use crate::matrix::Matrix;
use crate::poly::parse_elems;

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => Error::Parse {
            line,
            msg: other.to_string(),
        },
    }
}

pub fn parse_code_spec(text: &str) -> Result<LinearCode> {
    let mut field: Option<Arc<Field>> = None;
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        last_line = line;
        let Some(f) = &field else {
            let desc: FieldDescriptor = content.parse().map_err(|e| at_line(line, e))?;
            field = Some(Arc::new(desc.build().map_err(|e| at_line(line, e))?));
            continue;
        };
        let row = parse_elems(content, f).map_err(|e| at_line(line, e))?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line,
                    msg: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
        let rank = Matrix::from_rows(rows.clone())
            .map_err(|e| at_line(line, e))?
            .rank(f);
        if rank < rows.len() {
            return Err(Error::Parse {
                line,
                msg: "row is a linear combination of the rows above".into(),
            });
        }
    }
    let field = field.ok_or(Error::Parse {
        line: 1,
        msg: "missing field descriptor".into(),
    })?;
    if rows.is_empty() {
        return Err(Error::Parse {
            line: last_line.max(1),
            msg: "no generator rows".into(),
        });
    }
    LinearCode::from_matrix(field, rows, None).map_err(|e| at_line(last_line, e))
}

/// Text accepted by [`parse_code_spec`] describing the same code.
pub fn export_code_spec(code: &LinearCode) -> String {
    let mut out = format!("# {}\n{}\n", code.label(), code.field().descriptor());
    let g = code.generator();
    for r in 0..code.k() {
        let row: Vec<String> = g.row(r).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: msg.into() }
}

/// Builtin codes: `rs --q Q --k K [--eval a,b,…]`, `prs --q Q --k K`,
/// `glynn [--w W]`.
///
/// The compact forms `rs:Q:K`, `prs:Q:K` and `glynn:W` are also accepted.
pub fn parse_builtin(spec: &str) -> Result<LinearCode> {
    let spec = spec.trim();
    if !spec.contains(char::is_whitespace) && spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let expanded = match parts.as_slice() {
            [kind @ ("rs" | "prs"), q, k] => format!("{kind} --q {q} --k {k}"),
            ["glynn", w] => format!("glynn --w {w}"),
            _ => return Err(usage(format!("unknown builtin code {spec:?}"))),
        };
        return parse_builtin(&expanded);
    }
    let mut tokens = spec.split_whitespace();
    let kind = tokens.next().ok_or_else(|| usage("empty code name"))?;
    let mut q: Option<u32> = None;
    let mut k: Option<usize> = None;
    let mut w: Option<u32> = None;
    let mut eval: Option<String> = None;
    while let Some(flag) = tokens.next() {
        let value = tokens.next().ok_or_else(|| usage(format!("{flag} needs a value")))?;
        let num = || value.parse::<u64>().map_err(|_| usage(format!("bad value {value:?} for {flag}")));
        match flag {
            "--q" => q = Some(num()? as u32),
            "--k" => k = Some(num()? as usize),
            "--w" => w = Some(num()? as u32),
            "--eval" => eval = Some(value.to_string()),
            other => return Err(usage(format!("unknown option {other}"))),
        }
    }
    let need_q = || q.ok_or_else(|| usage(format!("{kind} needs --q")));
    let need_k = || k.ok_or_else(|| usage(format!("{kind} needs --k")));
    match kind {
        "rs" => {
            let field = Arc::new(Field::of_order(need_q()?)?);
            let points = eval.map(|e| parse_elems(&e, &field)).transpose()?;
            rs_code(field, points.as_deref(), need_k()?)
        }
        "prs" => prs_code(Arc::new(Field::of_order(need_q()?)?), need_k()?),
        "glynn" => {
            let field = Arc::new(Field::of_order(q.unwrap_or(9))?);
            let w = match w {
                Some(w) => field.elem(w as u64)?,
                None => default_glynn_w(&field),
            };
            glynn_code(field, w)
        }
        other => Err(usage(format!("unknown builtin code {other:?}"))),
    }
}

/// A path to a code-spec file, or a builtin name.
pub fn load_code(spec: &str) -> Result<LinearCode> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{spec}: {e}")))?;
        parse_code_spec(&text)
    } else {
        parse_builtin(spec)
    }
}
