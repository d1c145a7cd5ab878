//! Constraint systems: cardinality encodings, normalization, and
//! equivalence checking.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::constraints::poly::{Monomial, Poly, SubstImage, VariableId};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EquationTag {
    Booleanity,
    Vertex,
    TwinLink,
    Other,
}

/// One polynomial equation `poly = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyEquation {
    pub poly: Poly,
    pub tag: EquationTag,
}

impl PolyEquation {
    pub fn new(poly: Poly, tag: EquationTag) -> Self {
        PolyEquation { poly, tag }
    }
}

/// A set of polynomial equations over edge variables and their optional
/// twins, together with the variable table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub vars: BTreeSet<VariableId>,
    pub equations: Vec<PolyEquation>,
    /// Free-text provenance, e.g. "card n=4 b=1,1,1,1".
    pub source: String,
}

impl ConstraintSystem {
    pub fn edge_vars(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.vars.iter().copied().filter(|v| !v.is_twin())
    }

    pub fn has_twins(&self) -> bool {
        self.vars.iter().any(|v| v.is_twin())
    }

    pub fn axioms(&self) -> impl Iterator<Item = &Poly> {
        self.equations.iter().map(|e| &e.poly)
    }

    pub fn has_constant_false(&self) -> bool {
        self.equations.iter().any(|e| e.poly.is_constant_false())
    }

    /// Booleanity in raw form: `v² - v`.
    pub fn booleanity(v: VariableId) -> Poly {
        let xv = Poly::var(v);
        xv.mul(&xv).sub(&xv)
    }

    /// Detects `c·(v² - v)` for some variable `v`.
    pub fn booleanity_shape(poly: &Poly) -> Option<VariableId> {
        if poly.term_count() != 2 {
            return None;
        }
        let monic = poly.monic();
        let mut it = monic.terms();
        let (m_low, c_low) = it.next()?;
        let (m_high, c_high) = it.next()?;
        let v = {
            let f = m_high.factors();
            if f.len() != 1 || f[0].1 != 2 {
                return None;
            }
            f[0].0
        };
        let lin = m_low.factors();
        if lin.len() == 1
            && lin[0] == (v, 1)
            && c_high.is_one()
            && (-c_low.clone()).is_one()
        {
            Some(v)
        } else {
            None
        }
    }

    /// Canonical form of one equation: booleanity stays raw (monic
    /// `v² - v`), everything else is multilinear-reduced and scaled
    /// monic. `None` when the equation normalizes away.
    pub fn canonical_equation(eq: &PolyEquation) -> Option<PolyEquation> {
        if let Some(v) = Self::booleanity_shape(&eq.poly) {
            return Some(PolyEquation::new(
                ConstraintSystem::booleanity(v).monic(),
                EquationTag::Booleanity,
            ));
        }
        let reduced = eq.poly.multilinear_reduce();
        if reduced.is_zero() {
            return None;
        }
        Some(PolyEquation::new(reduced.monic(), eq.tag))
    }

    /// Reduces every equation to canonical form, drops `0 = 0`, and
    /// collapses duplicates. Constant-false equations are kept.
    pub fn normalize(&self) -> ConstraintSystem {
        let mut canon: BTreeMap<Poly, EquationTag> = BTreeMap::new();
        for eq in &self.equations {
            if let Some(c) = Self::canonical_equation(eq) {
                canon.entry(c.poly).or_insert(c.tag);
            }
        }
        let equations: Vec<PolyEquation> = canon
            .into_iter()
            .map(|(poly, tag)| PolyEquation::new(poly, tag))
            .collect();
        let vars: BTreeSet<VariableId> = equations
            .iter()
            .flat_map(|e| e.poly.vars().collect::<Vec<_>>())
            .collect();
        ConstraintSystem {
            vars,
            equations,
            source: self.source.clone(),
        }
    }

    fn canonical_set(&self) -> BTreeSet<Poly> {
        self.normalize()
            .equations
            .into_iter()
            .map(|e| e.poly)
            .collect()
    }
}

/// Encodes `Card(G, b)`: booleanity per variable, one incidence-sum
/// equation per vertex, and twin links when `twins` is on.
pub fn encode_card(g: &Graph, b: &[i64], twins: bool) -> ConstraintSystem {
    assert_eq!(b.len(), g.vertex_count(), "one target degree per vertex");
    let mut vars = BTreeSet::new();
    let mut equations = Vec::new();
    for (u, v) in g.edges() {
        let xe = VariableId::edge_var(u, v);
        vars.insert(xe);
        equations.push(PolyEquation::new(
            ConstraintSystem::booleanity(xe).neg(),
            EquationTag::Booleanity,
        ));
        if twins {
            let xt = xe.partner();
            vars.insert(xt);
            equations.push(PolyEquation::new(
                ConstraintSystem::booleanity(xt).neg(),
                EquationTag::Booleanity,
            ));
            // 1 - x - x̄ = 0
            let link = Poly::one().sub(&Poly::var(xe)).sub(&Poly::var(xt));
            equations.push(PolyEquation::new(link, EquationTag::TwinLink));
        }
    }
    for v in 0..g.vertex_count() {
        let mut p = Poly::constant_i64(-b[v]);
        for &u in g.neighbors(v) {
            p = p.add(&Poly::var(VariableId::edge_var(v, u)));
        }
        equations.push(PolyEquation::new(p, EquationTag::Vertex));
    }
    let b_desc = b
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    ConstraintSystem {
        vars,
        equations,
        source: format!("card n={} b={}", g.vertex_count(), b_desc),
    }
}

/// `PM(G) = Card(G, all-ones)`.
pub fn encode_pm(g: &Graph, twins: bool) -> ConstraintSystem {
    let b = vec![1i64; g.vertex_count()];
    let mut cs = encode_card(g, &b, twins);
    cs.source = format!("pm n={}", g.vertex_count());
    cs
}

/// Element-wise equality of the normalized systems under a variable
/// bijection, ignoring equations that normalize to `0 = 0`.
pub fn check_equiv(
    cs1: &ConstraintSystem,
    cs2: &ConstraintSystem,
    var_map: &BTreeMap<VariableId, VariableId>,
) -> Result<bool> {
    // twin variables may be left implicit; they follow their partner
    let mut effective: BTreeMap<VariableId, VariableId> = BTreeMap::new();
    for &v in &cs1.vars {
        let img = match var_map.get(&v) {
            Some(&img) => img,
            None if v.is_twin() => var_map
                .get(&v.partner())
                .map(|m| m.partner())
                .ok_or_else(|| Error::MapMismatch(format!("{v} has no image")))?,
            None => return Err(Error::MapMismatch(format!("{v} has no image"))),
        };
        effective.insert(v, img);
    }
    for k in var_map.keys() {
        if !cs1.vars.contains(k) {
            return Err(Error::MapMismatch(format!(
                "{k} is not a variable of the left system"
            )));
        }
    }
    let mut image_set = BTreeSet::new();
    for img in effective.values() {
        if !image_set.insert(*img) {
            return Err(Error::MapMismatch(format!("{img} is hit twice")));
        }
        if !cs2.vars.contains(img) {
            return Err(Error::MapMismatch(format!(
                "{img} is not a variable of the right system"
            )));
        }
    }
    if image_set.len() != cs2.vars.len() {
        return Err(Error::MapMismatch(format!(
            "map covers {} of {} right-hand variables",
            image_set.len(),
            cs2.vars.len()
        )));
    }

    let renamed: BTreeSet<Poly> = cs1
        .canonical_set()
        .into_iter()
        .map(|p| rename_poly(&p, &effective))
        .collect();
    Ok(renamed == cs2.canonical_set())
}

fn rename_poly(p: &Poly, var_map: &BTreeMap<VariableId, VariableId>) -> Poly {
    let rename = |v: &VariableId| -> VariableId {
        match var_map.get(v) {
            Some(&img) => img,
            None => *v,
        }
    };
    Poly::from_terms(p.terms().map(|(m, c)| {
        let factors: Vec<VariableId> = m
            .factors()
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat(rename(&v)).take(e as usize))
            .collect();
        (Monomial::from_vars(factors), c.clone())
    }))
}

/// For a `d`-regular graph, the restriction `x_e ↦ 1 - x_e` together
/// with the complementary system `Card(G, d - t)`.
pub fn complement_instance(
    g: &Graph,
    t: i64,
    twins: bool,
) -> Result<(crate::constraints::Restriction, ConstraintSystem)> {
    let d = g
        .regular_degree()
        .ok_or_else(|| Error::Parameter("complement reduction needs a regular graph".into()))?;
    let mut map = BTreeMap::new();
    let mut targets = BTreeSet::new();
    for (u, v) in g.edges() {
        let xe = VariableId::edge_var(u, v);
        map.insert(xe, SubstImage::NegLit(xe));
        targets.insert(xe);
        if twins {
            targets.insert(xe.partner());
        }
    }
    let rho = crate::constraints::Restriction::new(map, targets)?;
    let b = vec![d as i64 - t; g.vertex_count()];
    Ok((rho, encode_card(g, &b, twins)))
}

/// Scale-invariant canonical key used when comparing equations directly.
pub fn canonical_poly_key(p: &Poly) -> Poly {
    match ConstraintSystem::booleanity_shape(p) {
        Some(v) => ConstraintSystem::booleanity(v).monic(),
        None => p.multilinear_reduce().monic(),
    }
}

/// Convenience: rational one.
pub fn rat_one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::sat::sat_bruteforce;
    use crate::graph::named_graph;

    #[test]
    fn k3_pm_has_three_vars_and_six_equations() {
        let g = named_graph("K3").unwrap();
        let cs = encode_card(&g, &[1, 1, 1], false);
        assert_eq!(cs.vars.len(), 3);
        let bools = cs
            .equations
            .iter()
            .filter(|e| e.tag == EquationTag::Booleanity)
            .count();
        let verts = cs
            .equations
            .iter()
            .filter(|e| e.tag == EquationTag::Vertex)
            .count();
        assert_eq!((bools, verts), (3, 3));
    }

    #[test]
    fn twin_encoding_adds_links_and_twin_booleanity() {
        let g = named_graph("K2").unwrap();
        let cs = encode_pm(&g, true);
        assert_eq!(cs.vars.len(), 2);
        assert_eq!(
            cs.equations
                .iter()
                .filter(|e| e.tag == EquationTag::TwinLink)
                .count(),
            1
        );
        assert_eq!(
            cs.equations
                .iter()
                .filter(|e| e.tag == EquationTag::Booleanity)
                .count(),
            2
        );
    }

    #[test]
    fn pm_k2_satisfiable_pm_c3_not() {
        let g2 = named_graph("K2").unwrap();
        let sol = sat_bruteforce(&encode_pm(&g2, false), 24).unwrap();
        assert!(sol.is_some());

        let g3 = named_graph("C3").unwrap();
        let sol = sat_bruteforce(&encode_pm(&g3, false), 24).unwrap();
        assert!(sol.is_none());
    }

    #[test]
    fn pm_c5_unsatisfiable_card2_c4_all_ones() {
        let c5 = named_graph("C5").unwrap();
        assert!(sat_bruteforce(&encode_pm(&c5, false), 24)
            .unwrap()
            .is_none());

        let c4 = named_graph("C4").unwrap();
        let cs = encode_card(&c4, &[2, 2, 2, 2], false);
        let sol = sat_bruteforce(&cs, 24).unwrap().unwrap();
        assert!(sol.values().all(|&b| b));
    }

    #[test]
    fn normalize_drops_true_and_dedups() {
        let g = named_graph("K2").unwrap();
        let mut cs = encode_pm(&g, false);
        cs.equations.push(PolyEquation::new(Poly::zero(), EquationTag::Other));
        // y + (1 - y) - 1 cancels
        let y = VariableId::edge_var(0, 1);
        let cancels = Poly::var(y)
            .add(&Poly::one().sub(&Poly::var(y)))
            .sub(&Poly::one());
        cs.equations.push(PolyEquation::new(cancels, EquationTag::Other));
        // duplicate vertex equation, scaled by 2
        let dup = Poly::var(y).sub(&Poly::one()).scale(&BigRational::from_integer(2.into()));
        cs.equations.push(PolyEquation::new(dup.clone(), EquationTag::Other));
        cs.equations.push(PolyEquation::new(dup, EquationTag::Other));

        let norm = cs.normalize();
        // booleanity + single vertex equation
        assert_eq!(norm.equations.len(), 2);
        let norm2 = norm.normalize();
        assert_eq!(norm.canonical_set(), norm2.canonical_set());
    }

    #[test]
    fn equivalence_ignores_true_axioms() {
        let g = named_graph("K3").unwrap();
        let cs = encode_pm(&g, false);
        let mut padded = cs.clone();
        padded
            .equations
            .push(PolyEquation::new(Poly::zero(), EquationTag::Other));
        let id: BTreeMap<VariableId, VariableId> =
            cs.vars.iter().map(|&v| (v, v)).collect();
        assert!(check_equiv(&padded, &cs, &id).unwrap());
        assert!(check_equiv(&cs, &cs, &id).unwrap());
    }

    #[test]
    fn equivalence_detects_difference() {
        let g = named_graph("C4").unwrap();
        let pm = encode_pm(&g, false);
        let card2 = encode_card(&g, &[2, 2, 2, 2], false);
        let id: BTreeMap<VariableId, VariableId> =
            pm.vars.iter().map(|&v| (v, v)).collect();
        assert!(!check_equiv(&pm, &card2, &id).unwrap());
    }

    #[test]
    fn map_mismatch_is_an_error() {
        let g = named_graph("K3").unwrap();
        let cs = encode_pm(&g, false);
        let empty = BTreeMap::new();
        assert!(matches!(
            check_equiv(&cs, &cs, &empty),
            Err(Error::MapMismatch(_))
        ));
    }

    #[test]
    fn complement_of_c4_t1_is_fixed_point() {
        let c4 = named_graph("C4").unwrap();
        let (rho, cs_compl) = complement_instance(&c4, 1, false).unwrap();
        let cs = encode_pm(&c4, false);
        let restricted = crate::constraints::apply_restriction(&cs, &rho).unwrap();
        let id: BTreeMap<VariableId, VariableId> =
            restricted.vars.iter().map(|&v| (v, v)).collect();
        assert!(check_equiv(&restricted, &cs_compl, &id).unwrap());
        // d - t = 1: complement of PM(C4) is PM(C4) again
        assert!(check_equiv(&restricted, &cs, &id).unwrap());
    }

    #[test]
    fn complement_of_k4_t1_is_card2() {
        let k4 = named_graph("K4").unwrap();
        let (rho, cs_compl) = complement_instance(&k4, 1, false).unwrap();
        let cs_t1 = encode_card(&k4, &[1; 4], false);
        let restricted = crate::constraints::apply_restriction(&cs_t1, &rho).unwrap();
        let id: BTreeMap<VariableId, VariableId> =
            restricted.vars.iter().map(|&v| (v, v)).collect();
        assert!(check_equiv(&restricted, &cs_compl, &id).unwrap());
        let card2 = encode_card(&k4, &[2; 4], false);
        assert!(check_equiv(&restricted, &card2, &id).unwrap());
    }

    #[test]
    fn complement_of_k4_t3_is_card0_satisfiable_by_zeros() {
        let k4 = named_graph("K4").unwrap();
        let (_, cs0) = complement_instance(&k4, 3, false).unwrap();
        let sol = sat_bruteforce(&cs0, 24).unwrap().unwrap();
        assert!(sol.values().all(|&b| !b));
    }

    #[test]
    fn complement_round_trips() {
        let k4 = named_graph("K4").unwrap();
        let cs_t1 = encode_card(&k4, &[1; 4], false);
        let (rho1, _) = complement_instance(&k4, 1, false).unwrap();
        let (rho2, _) = complement_instance(&k4, 2, false).unwrap();
        let once = crate::constraints::apply_restriction(&cs_t1, &rho1).unwrap();
        let twice = crate::constraints::apply_restriction(&once, &rho2).unwrap();
        let id: BTreeMap<VariableId, VariableId> =
            twice.vars.iter().map(|&v| (v, v)).collect();
        assert!(check_equiv(&twice, &cs_t1, &id).unwrap());
    }

    #[test]
    fn irregular_complement_is_an_error() {
        let p3 = named_graph("P3").unwrap();
        assert!(complement_instance(&p3, 1, false).is_err());
    }
}
