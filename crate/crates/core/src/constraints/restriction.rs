//! Affine restrictions: total maps from edge variables to constants or
//! (possibly negated) literals of a target system.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::constraints::poly::{SubstImage, VariableId};
use crate::constraints::system::ConstraintSystem;
use crate::error::{Error, Result};

/// A restriction over edge variables. Twin variables are always sent to
/// the complement of their partner's image, so only edge variables are
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    pub map: BTreeMap<VariableId, SubstImage>,
    /// Variable table of the restricted system. Collected from the
    /// images when not given explicitly.
    pub targets: BTreeSet<VariableId>,
}

impl Restriction {
    pub fn new(map: BTreeMap<VariableId, SubstImage>, targets: BTreeSet<VariableId>) -> Result<Self> {
        for v in map.keys() {
            if v.is_twin() {
                return Err(Error::Parameter(format!(
                    "restriction keys must be edge variables, got {v}"
                )));
            }
        }
        let mut targets = targets;
        if targets.is_empty() {
            targets = map.values().filter_map(|img| img.target()).collect();
        }
        for img in map.values() {
            if let Some(t) = img.target() {
                if !targets.contains(&t) {
                    return Err(Error::Parameter(format!(
                        "image variable {t} is missing from the target table"
                    )));
                }
            }
        }
        Ok(Restriction { map, targets })
    }

    /// Identity restriction over the given variables.
    pub fn identity(vars: impl IntoIterator<Item = VariableId>) -> Result<Self> {
        let map: BTreeMap<VariableId, SubstImage> = vars
            .into_iter()
            .filter(|v| !v.is_twin())
            .map(|v| (v, SubstImage::Lit(v)))
            .collect();
        Restriction::new(map, BTreeSet::new())
    }

    /// Image of any source variable, twins resolved to complements.
    pub fn image(&self, v: &VariableId) -> Option<SubstImage> {
        if v.is_twin() {
            self.map.get(&v.partner()).map(|img| img.complement())
        } else {
            self.map.get(v).copied()
        }
    }

    /// Pointwise logical negation of every image.
    pub fn negated(&self) -> Restriction {
        Restriction {
            map: self
                .map
                .iter()
                .map(|(&v, img)| (v, img.complement()))
                .collect(),
            targets: self.targets.clone(),
        }
    }
}

/// Substitutes `rho` into every equation of `cs` and normalizes the
/// result. Negated literals expand as `1 - y`.
pub fn apply_restriction(cs: &ConstraintSystem, rho: &Restriction) -> Result<ConstraintSystem> {
    for v in cs.edge_vars() {
        if rho.image(&v).is_none() {
            return Err(Error::DanglingVariable(v.to_string()));
        }
    }
    let image = |v: &VariableId| -> SubstImage {
        rho.image(v).expect("totality checked above")
    };
    let mut equations = Vec::with_capacity(cs.equations.len());
    for eq in &cs.equations {
        let substituted = eq.poly.substitute(&image);
        equations.push(crate::constraints::PolyEquation::new(substituted, eq.tag));
    }
    let raw = ConstraintSystem {
        vars: rho.targets.clone(),
        equations,
        source: format!("{} | restricted", cs.source),
    };
    let mut normalized = raw.normalize();
    // keep declared targets even when some never occur in an equation
    normalized.vars = rho.targets.clone();
    Ok(normalized)
}
