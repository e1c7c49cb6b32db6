//! Plain-text formats for codes, gates and QRM codes.
//!
//! ```text
//! d=5 n=4
//! 1 2 3 4
//! ```
//!
//! Gates are a single line `d=5 m=1 lambda=3,1,-1,-2,-1`. A QRM code is a
//! `d=<d> m=<m>` header followed by `[X]` and `[Z]` sections, each holding a
//! code in the format above.

use std::fmt::Write as _;

use qudit_magic_core::field::GFVector;
use qudit_magic_core::qrm::QrmCode;
use qudit_magic_core::{LinearCode, MagicGate};

use crate::FormatError;

fn field<'a>(token: Option<&'a str>, key: &str, line: usize) -> Result<&'a str, FormatError> {
    token
        .and_then(|t| t.strip_prefix(key)?.strip_prefix('='))
        .ok_or_else(|| FormatError::Syntax {
            line,
            message: format!("expected `{key}=`"),
        })
}

fn number<T: std::str::FromStr>(s: &str, line: usize) -> Result<T, FormatError> {
    s.parse().map_err(|_| FormatError::Syntax {
        line,
        message: format!("bad number `{s}`"),
    })
}

pub fn write_code(code: &LinearCode) -> String {
    let mut out = format!("d={} n={}\n", code.modulus(), code.length());
    for row in code.rows() {
        let digits: Vec<String> = row.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", digits.join(" "));
    }
    out
}

fn parse_code_lines<'a, I>(lines: &mut std::iter::Peekable<I>) -> Result<LinearCode, FormatError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (no, header) = lines.next().ok_or(FormatError::Syntax {
        line: 0,
        message: "empty input".into(),
    })?;
    let mut tokens = header.split_whitespace();
    let d: u32 = number(field(tokens.next(), "d", no)?, no)?;
    let n: usize = number(field(tokens.next(), "n", no)?, no)?;
    if tokens.next().is_some() {
        return Err(FormatError::Syntax {
            line: no,
            message: "trailing tokens in header".into(),
        });
    }
    let mut gens = Vec::new();
    while let Some(&(no, line)) = lines.peek() {
        if line.starts_with('[') {
            break;
        }
        lines.next();
        let entries = line
            .split_whitespace()
            .map(|t| number(t, no))
            .collect::<Result<Vec<u32>, _>>()?;
        if entries.len() != n {
            return Err(FormatError::Syntax {
                line: no,
                message: format!("expected {n} digits"),
            });
        }
        gens.push(GFVector::new(d, entries)?);
    }
    Ok(LinearCode::from_generators(d, n, &gens)?)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_code(text: &str) -> Result<LinearCode, FormatError> {
    let mut lines = content_lines(text).peekable();
    let code = parse_code_lines(&mut lines)?;
    match lines.next() {
        Some((line, _)) => Err(FormatError::Syntax {
            line,
            message: "unexpected section".into(),
        }),
        None => Ok(code),
    }
}

pub fn write_gate(gate: &MagicGate) -> String {
    let lambda: Vec<String> = gate.lambda().iter().map(i64::to_string).collect();
    format!(
        "d={} m={} lambda={}\n",
        gate.d(),
        gate.m(),
        lambda.join(",")
    )
}

pub fn parse_gate(text: &str) -> Result<MagicGate, FormatError> {
    let mut lines = content_lines(text);
    let (no, line) = lines.next().ok_or(FormatError::Syntax {
        line: 0,
        message: "empty input".into(),
    })?;
    let mut tokens = line.split_whitespace();
    let d: u32 = number(field(tokens.next(), "d", no)?, no)?;
    let m: u32 = number(field(tokens.next(), "m", no)?, no)?;
    let lambda = field(tokens.next(), "lambda", no)?
        .split(',')
        .map(|t| number(t, no))
        .collect::<Result<Vec<i64>, _>>()?;
    if tokens.next().is_some() || lines.next().is_some() {
        return Err(FormatError::Syntax {
            line: no,
            message: "trailing input".into(),
        });
    }
    Ok(MagicGate::new(d, m, lambda)?)
}

pub fn write_qrm(code: &QrmCode) -> String {
    format!(
        "d={} m={}\n[X]\n{}[Z]\n{}",
        code.d(),
        code.m(),
        write_code(code.lx()),
        write_code(code.lz())
    )
}

pub fn parse_qrm(text: &str) -> Result<QrmCode, FormatError> {
    let mut lines = content_lines(text).peekable();
    let (no, header) = lines.next().ok_or(FormatError::Syntax {
        line: 0,
        message: "empty input".into(),
    })?;
    let mut tokens = header.split_whitespace();
    let d: u32 = number(field(tokens.next(), "d", no)?, no)?;
    let m: u32 = number(field(tokens.next(), "m", no)?, no)?;
    let mut section = |name: &str| -> Result<LinearCode, FormatError> {
        match lines.next() {
            Some((_, l)) if l == name => parse_code_lines(&mut lines),
            Some((line, _)) => Err(FormatError::Syntax {
                line,
                message: format!("expected {name}"),
            }),
            None => Err(FormatError::Syntax {
                line: 0,
                message: format!("missing {name}"),
            }),
        }
    };
    let lx = section("[X]")?;
    let lz = section("[Z]")?;
    if lx.modulus() != d || lz.modulus() != d || lx.length() != lz.length() {
        return Err(FormatError::Syntax {
            line: no,
            message: "sections disagree with header".into(),
        });
    }
    Ok(QrmCode::from_parts(d, m, lx, lz))
}
