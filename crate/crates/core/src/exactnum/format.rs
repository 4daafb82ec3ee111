//! Text forms of [`LaurentPoly`].
//!
//! Human form: terms in descending exponent order joined by ` + `, each
//! `C * u^A * v^B * g^C` with zero exponents dropped. Rational coefficients
//! print as plain rationals; others as `(r0 + r1*z + ...)` with `z = ζ_d`.
//! The zero polynomial prints as `0`.

use super::{euler_phi, LaurentPoly, Ring};
use crate::error::{Error, Result};
use crate::{Cyclo, LPoly, Rat};
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

const VARS: [&str; 3] = ["u", "v", "g"];

impl<C: Ring + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num_terms() == 0 {
            return f.write_str("0");
        }
        for (i, (exp, coeff)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{coeff}")?;
            for (name, &k) in VARS.iter().zip(exp) {
                if k != 0 {
                    write!(f, " * {name}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// One line per term: `e_u e_v e_g c_0 … c_{φ(d)-1}`, the `c_k` being the
/// coordinates of the coefficient in the power basis of `Q(ζ_d)`.
pub fn machine_lines(p: &LPoly, d: u32) -> Vec<String> {
    p.terms()
        .rev()
        .map(|(e, c)| {
            let mut line = format!("{} {} {}", e[0], e[1], e[2]);
            for r in c.coeffs_at_order(d) {
                line.push(' ');
                line.push_str(&r.to_string());
            }
            line
        })
        .collect()
}

/// Splits at `sep` occurrences outside parentheses.
fn split_top_level<'a>(text: &'a str, sep: &str) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if depth == 0 && text[i..].starts_with(sep) => {
                parts.push(&text[start..i]);
                i += sep.len();
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(&text[start..]);
    parts
}

fn parse_rat(text: &str) -> Result<Rat> {
    Rat::from_str(text.trim()).map_err(|_| Error::Parse(format!("bad rational `{text}`")))
}

fn parse_cyclo(text: &str, d: u32) -> Result<Cyclo> {
    let text = text.trim();
    let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else {
        return parse_rat(text).map(Cyclo::from_scalar);
    };
    let mut coeffs = vec![Rat::from_integer(0.into()); euler_phi(d).max(1)];
    for piece in inner.split(" + ") {
        let (c, k) = match piece.split_once("*z") {
            None => (piece, 0usize),
            Some((c, "")) => (c, 1),
            Some((c, rest)) => {
                let k = rest
                    .strip_prefix('^')
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad power of z in `{piece}`")))?;
                (c, k)
            }
        };
        if k >= coeffs.len() {
            coeffs.resize(k + 1, Rat::from_integer(0.into()));
        }
        coeffs[k] += parse_rat(c)?;
    }
    Ok(Cyclo::from_coeffs(d, coeffs))
}

/// Parses the human text form back into a polynomial over `Q(ζ_d)`.
pub fn parse_lpoly(text: &str, d: u32) -> Result<LPoly> {
    let text = text.trim();
    if text == "0" {
        return Ok(LPoly::zero());
    }
    let mut out = LPoly::zero();
    for term in split_top_level(text, " + ") {
        let mut factors = split_top_level(term.trim(), " * ").into_iter();
        let coeff = parse_cyclo(factors.next().unwrap_or(""), d)?;
        let mut exp = [0i32; 3];
        for factor in factors {
            let (name, k) = factor
                .trim()
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?;
            let slot = VARS
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exp[slot] += k
                .parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad exponent `{k}`")))?;
        }
        out.add_term(exp, &coeff);
    }
    Ok(out)
}
