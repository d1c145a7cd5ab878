//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials carry explicit exponents so that booleanity axioms
//! `x² - x = 0` can be kept in raw form; multilinear reduction is an
//! explicit operation, not an implicit invariant.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the paired variables an identifier names: the edge variable
/// itself or its bit-complement twin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VarKind {
    Edge,
    Twin,
}

/// A variable named by a graph edge, written `x_u_v` (edge variable) or
/// `xb_u_v` (twin).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VariableId {
    pub kind: VarKind,
    pub edge: (u32, u32),
}

impl VariableId {
    pub fn edge_var(u: usize, v: usize) -> Self {
        let (a, b) = (u.min(v) as u32, u.max(v) as u32);
        VariableId {
            kind: VarKind::Edge,
            edge: (a, b),
        }
    }

    pub fn twin_var(u: usize, v: usize) -> Self {
        let (a, b) = (u.min(v) as u32, u.max(v) as u32);
        VariableId {
            kind: VarKind::Twin,
            edge: (a, b),
        }
    }

    /// The other member of the pair.
    pub fn partner(&self) -> VariableId {
        VariableId {
            kind: match self.kind {
                VarKind::Edge => VarKind::Twin,
                VarKind::Twin => VarKind::Edge,
            },
            edge: self.edge,
        }
    }

    pub fn is_twin(&self) -> bool {
        self.kind == VarKind::Twin
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::Edge => write!(f, "x_{}_{}", self.edge.0, self.edge.1),
            VarKind::Twin => write!(f, "xb_{}_{}", self.edge.0, self.edge.1),
        }
    }
}

impl FromStr for VariableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = if let Some(r) = s.strip_prefix("xb_") {
            (VarKind::Twin, r)
        } else if let Some(r) = s.strip_prefix("x_") {
            (VarKind::Edge, r)
        } else {
            return Err(Error::parse("variable", format!("bad name {s:?}")));
        };
        let mut it = rest.split('_');
        let u: u32 = it
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::parse("variable", format!("bad name {s:?}")))?;
        let v: u32 = it
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::parse("variable", format!("bad name {s:?}")))?;
        if it.next().is_some() || u >= v {
            return Err(Error::parse("variable", format!("bad name {s:?}")));
        }
        Ok(VariableId {
            kind,
            edge: (u, v),
        })
    }
}

/// A power product of variables, kept sorted with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<(VariableId, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VariableId) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from factors with repetition.
    pub fn from_vars(vars: impl IntoIterator<Item = VariableId>) -> Self {
        let mut m = BTreeMap::new();
        for v in vars {
            *m.entry(v).or_insert(0u32) += 1;
        }
        Monomial(m.into_iter().collect())
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_multilinear(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.0
    }

    pub fn vars(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m: BTreeMap<VariableId, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m.into_iter().collect())
    }

    /// Collapses every exponent to one.
    pub fn multilinear(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, _)| (v, 1)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.0 {
            for _ in 0..e {
                if !first {
                    write!(f, ".")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// The image of a variable under an affine restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubstImage {
    Zero,
    One,
    Lit(VariableId),
    NegLit(VariableId),
}

impl SubstImage {
    pub fn complement(&self) -> SubstImage {
        match *self {
            SubstImage::Zero => SubstImage::One,
            SubstImage::One => SubstImage::Zero,
            SubstImage::Lit(v) => SubstImage::NegLit(v),
            SubstImage::NegLit(v) => SubstImage::Lit(v),
        }
    }

    pub fn target(&self) -> Option<VariableId> {
        match *self {
            SubstImage::Lit(v) | SubstImage::NegLit(v) => Some(v),
            _ => None,
        }
    }

    fn as_poly(&self) -> Poly {
        match *self {
            SubstImage::Zero => Poly::zero(),
            SubstImage::One => Poly::one(),
            SubstImage::Lit(v) => Poly::var(v),
            SubstImage::NegLit(v) => Poly::one().sub(&Poly::var(v)),
        }
    }
}

/// Sparse polynomial: monomial → nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    pub fn constant_i64(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: VariableId) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), BigRational::one());
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant polynomial, i.e. an unsatisfiable `c = 0`.
    pub fn is_constant_false(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.terms.keys().flat_map(|m| m.vars())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Full polynomial product with exponent accumulation (no reduction).
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Reduces modulo `v² - v` for every variable.
    pub fn multilinear_reduce(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.multilinear(), c.clone());
        }
        out
    }

    /// Simultaneous substitution of every variable.
    pub fn substitute(&self, image: &impl Fn(&VariableId) -> SubstImage) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                let img = image(&v).as_poly();
                for _ in 0..e {
                    prod = prod.mul(&img);
                    if prod.is_zero() {
                        break;
                    }
                }
                if prod.is_zero() {
                    break;
                }
            }
            out = out.add(&prod);
        }
        out
    }

    /// Evaluates over a 0/1 point; twins are the caller's concern (pass
    /// a closure that resolves them).
    pub fn eval_bool(&self, value: &impl Fn(&VariableId) -> bool) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            if m.vars().all(|v| value(&v)) {
                acc += c;
            }
        }
        acc
    }

    /// Scales so the leading (largest) monomial has coefficient one.
    pub fn monic(&self) -> Poly {
        match self.terms.iter().next_back() {
            None => Poly::zero(),
            Some((_, lead)) => {
                let inv = BigRational::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }

    /// Leading coefficient, if any.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest monomial first
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                write!(f, "{c}*{m}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*{m}", -c.clone())?;
            } else {
                write!(f, " + {c}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(u: usize, v: usize) -> VariableId {
        VariableId::edge_var(u, v)
    }

    #[test]
    fn variable_names_round_trip() {
        for v in [x(0, 1), VariableId::twin_var(3, 7)] {
            let s = v.to_string();
            assert_eq!(s.parse::<VariableId>().unwrap(), v);
        }
        assert!("y_0_1".parse::<VariableId>().is_err());
        assert!("x_2_1".parse::<VariableId>().is_err());
    }

    #[test]
    fn booleanity_raw_form_has_degree_two() {
        // x(1-x) = x - x²
        let v = x(0, 1);
        let p = Poly::var(v).sub(&Poly::var(v).mul(&Poly::var(v)));
        assert_eq!(p.degree(), 2);
        assert!(p.multilinear_reduce().is_zero());
    }

    #[test]
    fn substitution_of_neg_literal_expands() {
        // x ↦ 1 - y turns x - x² into y - y²
        let v = x(0, 1);
        let y = x(2, 3);
        let p = Poly::var(v).sub(&Poly::var(v).mul(&Poly::var(v)));
        let q = p.substitute(&|_| SubstImage::NegLit(y));
        let expected = Poly::var(y).sub(&Poly::var(y).mul(&Poly::var(y)));
        assert_eq!(q, expected);
    }

    #[test]
    fn monic_normalizes_scalar_multiples() {
        let v = x(0, 1);
        let p = Poly::var(v).scale(&BigRational::from_integer(2.into())).sub(&Poly::one());
        let q = Poly::var(v).scale(&BigRational::from_integer(4.into()))
            .sub(&Poly::constant_i64(2));
        assert_eq!(p.monic(), q.monic());
    }

    #[test]
    fn eval_counts_satisfied_monomials() {
        let (a, b) = (x(0, 1), x(1, 2));
        // a + b - 1 at a=1, b=0 is 0
        let p = Poly::var(a).add(&Poly::var(b)).sub(&Poly::one());
        let val = p.eval_bool(&|v| *v == a);
        assert!(val.is_zero());
    }
}
