//! LP text files, as read by common MILP solvers.
//!
//! ```text
//! Maximize
//!  obj: c_0_0 + c_0_1 + 2 c_1_0
//! Subject To
//!  assign_0: b_0_0 + b_1_0 = 1
//!  cover_0_0: b_0_1 - c_0_0 >= 0
//! Binary
//!  b_0_0 b_1_0 b_0_1 c_0_0 c_0_1 c_1_0
//! End
//! ```
//!
//! Expressions longer than [`LINE_WIDTH`] continue on lines indented by three spaces.

use crate::error::{Error, Result};

use super::ilp::{Cmp, IlpModel};

pub const LINE_WIDTH: usize = 100;

fn push_wrapped(out: &mut String, head: &str, tokens: &[String]) {
    let mut line = format!(" {head}");
    for t in tokens {
        if line.len() + 1 + t.len() > LINE_WIDTH && line.trim_start().len() > head.len() {
            out.push_str(&line);
            out.push('\n');
            line = "  ".to_string();
        }
        if line.len() > 1 {
            line.push(' ');
        }
        line.push_str(t);
    }
    out.push_str(&line);
    out.push('\n');
}

fn term_tokens(model: &IlpModel, terms: &[(usize, i64)]) -> Vec<String> {
    let mut toks = Vec::with_capacity(terms.len());
    for (k, &(v, a)) in terms.iter().enumerate() {
        let name = model.var_name(v);
        let sign = if a < 0 { "-" } else { "+" };
        let mag = a.unsigned_abs();
        let body = if mag == 1 { name.to_string() } else { format!("{mag} {name}") };
        toks.push(match (k, a < 0) {
            (0, false) => body,
            (0, true) => format!("-{body}"),
            _ => format!("{sign} {body}"),
        });
    }
    toks
}

/// Deterministic: the same model always renders to the same bytes.
pub fn export_lp(model: &IlpModel) -> String {
    let mut out = String::from("Maximize\n");
    push_wrapped(&mut out, "obj:", &term_tokens(model, model.objective()));
    out.push_str("Subject To\n");
    for c in model.constraints() {
        let mut toks = term_tokens(model, &c.terms);
        if toks.is_empty() {
            toks.push("0".into());
        }
        toks.push(format!("{} {}", c.cmp, c.rhs));
        push_wrapped(&mut out, &format!("{}:", c.name), &toks);
    }
    out.push_str("Binary\n");
    if model.num_vars() > 0 {
        push_wrapped(&mut out, "", model.names());
    }
    out.push_str("End\n");
    out
}

#[derive(PartialEq)]
enum Section {
    None,
    Objective,
    Constraints,
    Binary,
    End,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::parse("lp", line, msg)
}

struct Expr {
    terms: Vec<(String, i64)>,
    cmp: Option<(Cmp, i64)>,
}

fn parse_expr(text: &str, line: usize) -> Result<Expr> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut coef: Option<i64> = None;
    let mut toks = text.split_whitespace().peekable();
    let mut cmp = None;
    while let Some(t) = toks.next() {
        let (c, rest) = match t {
            "<=" | "=<" => (Some(Cmp::Le), ""),
            ">=" | "=>" => (Some(Cmp::Ge), ""),
            "=" => (Some(Cmp::Eq), ""),
            _ => (None, t),
        };
        if let Some(c) = c {
            let rhs = toks.next().ok_or_else(|| parse_err(line, "missing right-hand side"))?;
            let rhs: i64 = rhs.parse().map_err(|_| parse_err(line, format!("bad right-hand side {rhs:?}")))?;
            if toks.next().is_some() {
                return Err(parse_err(line, "trailing tokens after right-hand side"));
            }
            cmp = Some((c, rhs));
            break;
        }
        let mut rest = rest;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        if rest.is_empty() {
            continue;
        }
        if let Ok(n) = rest.parse::<i64>() {
            coef = Some(coef.unwrap_or(1) * n);
            if toks.peek().is_none_or(|t| matches!(*t, "<=" | "=<" | ">=" | "=>" | "=" | "+" | "-")) {
                // A bare constant term: only 0 placeholders are written.
                if n != 0 {
                    return Err(Error::Model(format!("line {line}: constant terms are not supported")));
                }
                coef = None;
                sign = 1;
            }
            continue;
        }
        terms.push((rest.to_string(), sign * coef.take().unwrap_or(1)));
        sign = 1;
    }
    Ok(Expr { terms, cmp })
}

/// Reads files written by [`export_lp`]; variables are declared in `Binary` order.
pub fn parse_lp(text: &str) -> Result<IlpModel> {
    let mut section = Section::None;
    let mut obj: Option<(usize, String)> = None;
    let mut cons: Vec<(usize, String, String)> = Vec::new();
    let mut binaries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('\\').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lower = line.to_ascii_lowercase();
        let next = match lower.as_str() {
            "maximize" | "maximise" | "max" => Some(Section::Objective),
            "subject to" | "such that" | "st" | "s.t." => Some(Section::Constraints),
            "binary" | "binaries" | "bin" => Some(Section::Binary),
            "end" => Some(Section::End),
            "minimize" | "minimise" | "min" => return Err(parse_err(ln, "only maximisation models are supported")),
            _ => None,
        };
        if let Some(s) = next {
            section = s;
            continue;
        }
        let continuation = raw.starts_with("  ") || !line.contains(':');
        match section {
            Section::Objective => match &mut obj {
                Some((_, body)) if continuation => {
                    body.push(' ');
                    body.push_str(line);
                }
                None => {
                    let body = line.split_once(':').map_or(line, |(_, b)| b);
                    obj = Some((ln, body.to_string()));
                }
                Some(_) => return Err(parse_err(ln, "second objective")),
            },
            Section::Constraints => match (continuation, cons.last_mut()) {
                (true, Some((_, _, body))) => {
                    body.push(' ');
                    body.push_str(line);
                }
                _ => {
                    let (name, body) = line.split_once(':').ok_or_else(|| parse_err(ln, "unnamed constraint"))?;
                    cons.push((ln, name.trim().to_string(), body.to_string()));
                }
            },
            Section::Binary => binaries.extend(line.split_whitespace().map(str::to_string)),
            Section::None => return Err(parse_err(ln, "content before the objective section")),
            Section::End => return Err(parse_err(ln, "content after End")),
        }
    }
    if section != Section::End {
        return Err(parse_err(text.lines().count(), "missing End"));
    }
    let mut model = IlpModel::new();
    for b in binaries {
        model.add_var(b)?;
    }
    let resolve = |model: &IlpModel, terms: Vec<(String, i64)>, ln: usize| -> Result<Vec<(usize, i64)>> {
        terms
            .into_iter()
            .map(|(n, a)| model.var(&n).map(|v| (v, a)).ok_or_else(|| parse_err(ln, format!("variable {n} is not declared binary"))))
            .collect()
    };
    if let Some((ln, body)) = obj {
        let e = parse_expr(&body, ln)?;
        let terms = resolve(&model, e.terms, ln)?;
        model.set_objective(terms)?;
    }
    for (ln, name, body) in cons {
        let e = parse_expr(&body, ln)?;
        let (cmp, rhs) = e.cmp.ok_or_else(|| parse_err(ln, "constraint without comparator"))?;
        let terms = resolve(&model, e.terms, ln)?;
        model.add_constraint(name, terms, cmp, rhs)?;
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_model_is_header_and_footer() {
        assert_eq!(export_lp(&IlpModel::new()), "Maximize\n obj:\nSubject To\nBinary\nEnd\n");
        assert_eq!(parse_lp(&export_lp(&IlpModel::new())).unwrap(), IlpModel::new());
    }

    #[test]
    fn comparators_and_signs() {
        let mut m = IlpModel::new();
        let x = m.add_var("x").unwrap();
        let y = m.add_var("y").unwrap();
        m.add_constraint("a", vec![(x, 1), (y, -3)], Cmp::Le, 2).unwrap();
        m.add_constraint("b", vec![(x, -1)], Cmp::Eq, -1).unwrap();
        m.add_constraint("c", vec![(y, 2)], Cmp::Ge, 0).unwrap();
        m.set_objective(vec![(x, 2), (y, 1)]).unwrap();
        let text = export_lp(&m);
        assert_eq!(
            text,
            "Maximize\n obj: 2 x + y\nSubject To\n a: x - 3 y <= 2\n b: -x = -1\n c: 2 y >= 0\nBinary\n x y\nEnd\n"
        );
        assert_eq!(parse_lp(&text).unwrap(), m);
    }

    #[test]
    fn long_rows_wrap_and_reparse() {
        let mut m = IlpModel::new();
        let vs: Vec<_> = (0..200).map(|i| m.add_var(format!("variable_{i}")).unwrap()).collect();
        m.add_constraint("wide", vs.iter().map(|&v| (v, 7)).collect(), Cmp::Le, 30).unwrap();
        m.set_objective(vs.iter().map(|&v| (v, 1)).collect()).unwrap();
        let text = export_lp(&m);
        assert!(text.lines().all(|l| l.len() <= LINE_WIDTH + 20));
        assert_eq!(parse_lp(&text).unwrap(), m);
    }
}
