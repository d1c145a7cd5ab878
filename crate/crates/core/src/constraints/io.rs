//! Constraint system text format.
//!
//! ```text
//! #vars x_0_1 x_0_2 xb_0_1
//! #source pm n=3
//! 1*x_0_1.x_0_1 + -1*x_0_1 = 0
//! 1*x_0_1 + 1*x_0_2 + -1*1 = 0
//! ```
//!
//! One equation per line, terms `coeff*monomial` joined by `+`, rational
//! coefficients as `num/den`, monomials as dot-joined variable names with
//! repetition (`1` for the constant term). Tags are re-derived from the
//! equation shape on parse.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::constraints::poly::{Monomial, Poly, VariableId};
use crate::constraints::system::{ConstraintSystem, EquationTag, PolyEquation};
use crate::error::{Error, Result};

pub fn format_system(cs: &ConstraintSystem) -> String {
    let mut out = String::new();
    out.push_str("#vars");
    for v in &cs.vars {
        out.push(' ');
        out.push_str(&v.to_string());
    }
    out.push('\n');
    out.push_str(&format!("#source {}\n", cs.source));
    for eq in &cs.equations {
        out.push_str(&format_equation(&eq.poly));
        out.push('\n');
    }
    out
}

fn format_equation(poly: &Poly) -> String {
    if poly.is_zero() {
        return "0*1 = 0".to_string();
    }
    let terms: Vec<String> = poly
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(m, c)| format!("{c}*{m}"))
        .collect();
    format!("{} = 0", terms.join(" + "))
}

pub fn parse_system(text: &str) -> Result<ConstraintSystem> {
    let mut vars: BTreeSet<VariableId> = BTreeSet::new();
    let mut source = String::new();
    let mut equations = Vec::new();
    let mut saw_vars = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#vars") {
            saw_vars = true;
            for tok in rest.split_whitespace() {
                vars.insert(tok.parse()?);
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("#source") {
            source = rest.trim().to_string();
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let poly = parse_equation(line)
            .map_err(|e| Error::parse(format!("constraints line {}", lineno + 1), e.to_string()))?;
        let tag = derive_tag(&poly);
        for v in poly.vars() {
            if !vars.contains(&v) {
                if saw_vars {
                    return Err(Error::parse(
                        format!("constraints line {}", lineno + 1),
                        format!("undeclared variable {v}"),
                    ));
                }
                vars.insert(v);
            }
        }
        equations.push(PolyEquation::new(poly, tag));
    }
    if equations.is_empty() && vars.is_empty() {
        return Err(Error::parse("constraints", "empty input"));
    }
    Ok(ConstraintSystem {
        vars,
        equations,
        source,
    })
}

fn parse_equation(line: &str) -> Result<Poly> {
    let body = line
        .strip_suffix("= 0")
        .or_else(|| line.strip_suffix("=0"))
        .ok_or_else(|| Error::parse("equation", "missing '= 0'"))?;
    let mut poly = Poly::zero();
    // '+' separates terms; negative coefficients carry their own sign
    for term in body.split('+') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        let (coeff_str, mono_str) = term
            .split_once('*')
            .ok_or_else(|| Error::parse("equation", format!("term {term:?} lacks '*'")))?;
        let coeff = BigRational::from_str(coeff_str.trim())
            .map_err(|e| Error::parse("equation", format!("bad coefficient {coeff_str:?}: {e}")))?;
        let mono = parse_monomial(mono_str.trim())?;
        if !coeff.is_zero() {
            poly.add_term(mono, coeff);
        }
    }
    Ok(poly)
}

fn parse_monomial(s: &str) -> Result<Monomial> {
    if s == "1" {
        return Ok(Monomial::unit());
    }
    let vars: Result<Vec<VariableId>> = s.split('.').map(|tok| tok.trim().parse()).collect();
    Ok(Monomial::from_vars(vars?))
}

pub fn derive_tag(poly: &Poly) -> EquationTag {
    if ConstraintSystem::booleanity_shape(poly).is_some() {
        return EquationTag::Booleanity;
    }
    if is_twin_link(poly) {
        return EquationTag::TwinLink;
    }
    EquationTag::Other
}

/// `c·(1 - x - x̄)` for some edge/twin pair.
fn is_twin_link(poly: &Poly) -> bool {
    if poly.term_count() != 3 {
        return false;
    }
    let monic = poly.monic();
    let mut edge = None;
    let mut twin = None;
    let mut unit_ok = false;
    for (m, c) in monic.terms() {
        match m.factors() {
            [] => unit_ok = true, // sign checked below via monic scale
            [(v, 1)] => {
                if v.is_twin() {
                    twin = Some((*v, c.clone()));
                } else {
                    edge = Some((*v, c.clone()));
                }
            }
            _ => return false,
        }
        let _ = c;
    }
    match (edge, twin, unit_ok) {
        (Some((e, ce)), Some((t, ct)), true) => t.partner() == e && ce == ct,
        _ => false,
    }
}

pub fn read_system(path: impl AsRef<Path>) -> Result<ConstraintSystem> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_system(&text)
}

pub fn write_system(cs: &ConstraintSystem, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, format_system(cs)).map_err(|e| Error::io(path.display().to_string(), e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::system::{encode_card, encode_pm};
    use crate::graph::named_graph;

    #[test]
    fn round_trips_pm_with_twins() {
        let g = named_graph("C3").unwrap();
        let cs = encode_pm(&g, true);
        let text = format_system(&cs);
        let back = parse_system(&text).unwrap();
        assert_eq!(back.vars, cs.vars);
        assert_eq!(back.equations.len(), cs.equations.len());
        for (a, b) in back.equations.iter().zip(cs.equations.iter()) {
            assert_eq!(a.poly, b.poly);
        }
    }

    #[test]
    fn tags_rederived_from_shape() {
        let g = named_graph("K2").unwrap();
        let cs = encode_pm(&g, true);
        let back = parse_system(&format_system(&cs)).unwrap();
        let bools = back
            .equations
            .iter()
            .filter(|e| e.tag == EquationTag::Booleanity)
            .count();
        let links = back
            .equations
            .iter()
            .filter(|e| e.tag == EquationTag::TwinLink)
            .count();
        assert_eq!((bools, links), (2, 1));
    }

    #[test]
    fn rational_coefficients_round_trip() {
        let text = "#vars x_0_1\n1/2*x_0_1 + -3/4*1 = 0\n";
        let cs = parse_system(text).unwrap();
        let back = parse_system(&format_system(&cs)).unwrap();
        assert_eq!(cs.equations[0].poly, back.equations[0].poly);
    }

    #[test]
    fn undeclared_variable_is_rejected_when_vars_given() {
        let text = "#vars x_0_1\n1*x_0_2 = 0\n";
        assert!(parse_system(text).is_err());
    }

    #[test]
    fn card_header_mentions_b_vector() {
        let g = named_graph("K2").unwrap();
        let cs = encode_card(&g, &[1, 1], false);
        assert!(format_system(&cs).contains("#source card n=2 b=1,1"));
    }
}
