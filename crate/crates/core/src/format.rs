//! Plain-text formats shared by the CLI.
//!
//! All formats are whitespace-separated columns, one record per line, LF or
//! CRLF line ends, `#` comments and blank lines ignored:
//!
//! * expansion: `n m coeff`, written in Noll order
//! * polynomial: `p q coeff`, written by total degree, then descending `p`
//! * samples: `x y f` (see [`crate::fitting::load_samples`])

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polynomials::{Monomial2, Polynomial2};
use crate::zernike::{is_valid_order, ZernikeExpansion, ZernikeTerm};

/// Significant digits of every real written by this module.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits and prints the shortest decimal that
/// reads back as that rounded value. Negative zero prints as `0`.
pub fn format_real(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v)
        .parse()
        .expect("exponent notation parses");
    format!("{rounded}")
}

/// Non-empty lines with comments stripped, as `(1-based line number, fields)`.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

pub(crate) fn parse_field<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("cannot parse {what} from `{token}`"),
    })
}

fn expect_arity(line: usize, fields: &[&str], layout: &str) -> Result<()> {
    if fields.len() == 3 {
        Ok(())
    } else {
        Err(Error::Parse {
            line,
            message: format!("expected 3 fields `{layout}`, found {}", fields.len()),
        })
    }
}

pub fn parse_expansion(text: &str) -> Result<ZernikeExpansion> {
    let mut terms = Vec::new();
    for (line, fields) in data_lines(text) {
        expect_arity(line, &fields, "n m coeff")?;
        let n: u32 = parse_field(line, fields[0], "n")?;
        let m: i32 = parse_field(line, fields[1], "m")?;
        let c: f64 = parse_field(line, fields[2], "coeff")?;
        if !is_valid_order(n, m) {
            return Err(Error::Parse {
                line,
                message: Error::InvalidOrder { n, m }.to_string(),
            });
        }
        if !c.is_finite() {
            return Err(Error::NonFinite { line });
        }
        terms.push(ZernikeTerm::new(n, m, c));
    }
    Ok(ZernikeExpansion::new(terms))
}

pub fn write_expansion(e: &ZernikeExpansion) -> String {
    let mut out = String::new();
    for t in e.terms() {
        writeln!(out, "{} {} {}", t.n(), t.m(), format_real(t.coeff())).unwrap();
    }
    out
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial2> {
    let mut terms = Vec::new();
    for (line, fields) in data_lines(text) {
        expect_arity(line, &fields, "p q coeff")?;
        let p: u32 = parse_field(line, fields[0], "p")?;
        let q: u32 = parse_field(line, fields[1], "q")?;
        let c: f64 = parse_field(line, fields[2], "coeff")?;
        if !c.is_finite() {
            return Err(Error::NonFinite { line });
        }
        terms.push(Monomial2::new(c, p, q));
    }
    Ok(Polynomial2::new(terms))
}

pub fn write_polynomial(p: &Polynomial2) -> String {
    let mut out = String::new();
    for t in p.terms() {
        writeln!(out, "{} {} {}", t.x_exp, t.y_exp, format_real(t.coeff)).unwrap();
    }
    out
}
