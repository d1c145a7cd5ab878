//! Exhaustive 0/1 satisfiability over edge variables; the semantic
//! oracle the refutation machinery is tested against.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::constraints::poly::VariableId;
use crate::constraints::system::ConstraintSystem;
use crate::error::{Error, Result};

/// Finds a 0/1 assignment of the edge variables satisfying every
/// equation (twins forced to complements), or `None`. Backtracking over
/// variables in sorted order: an equation is checked as soon as all of
/// its variables are assigned, so unsatisfiable branches prune early.
pub fn sat_bruteforce(
    cs: &ConstraintSystem,
    max_vars: usize,
) -> Result<Option<BTreeMap<VariableId, bool>>> {
    let vars: Vec<VariableId> = cs.edge_vars().collect();
    if vars.len() > max_vars {
        return Err(Error::SizeGuard {
            what: "sat_bruteforce edge variables".into(),
            limit: max_vars,
            actual: vars.len(),
        });
    }
    let index: BTreeMap<VariableId, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // when is each equation fully assigned?
    let mut ready_at: Vec<Vec<usize>> = vec![Vec::new(); vars.len() + 1];
    for (ei, eq) in cs.equations.iter().enumerate() {
        let mut last = 0usize;
        let mut constant = true;
        for v in eq.poly.vars() {
            let base = if v.is_twin() { v.partner() } else { v };
            match index.get(&base) {
                Some(&i) => {
                    last = last.max(i + 1);
                    constant = false;
                }
                None => {
                    return Err(Error::Parameter(format!(
                        "equation {ei} references undeclared variable {v}"
                    )))
                }
            }
        }
        if constant {
            last = 0;
        }
        ready_at[last].push(ei);
    }

    // constant equations must hold outright
    for &ei in &ready_at[0] {
        if !cs.equations[ei].poly.eval_bool(&|_| false).is_zero() {
            return Ok(None);
        }
    }

    let mut assignment = vec![false; vars.len()];
    if search(cs, &vars, &index, &ready_at, &mut assignment, 0) {
        Ok(Some(
            vars.iter()
                .enumerate()
                .map(|(i, &v)| (v, assignment[i]))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

fn search(
    cs: &ConstraintSystem,
    vars: &[VariableId],
    index: &BTreeMap<VariableId, usize>,
    ready_at: &[Vec<usize>],
    assignment: &mut Vec<bool>,
    depth: usize,
) -> bool {
    if depth == vars.len() {
        return true;
    }
    for bit in [false, true] {
        assignment[depth] = bit;
        let ok = ready_at[depth + 1].iter().all(|&ei| {
            cs.equations[ei]
                .poly
                .eval_bool(&|v| {
                    let base = if v.is_twin() { v.partner() } else { v };
                    let val = assignment[index[&base]];
                    if v.is_twin() {
                        !val
                    } else {
                        val
                    }
                })
                .is_zero()
        });
        if ok && search(cs, vars, index, ready_at, assignment, depth + 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::system::{encode_card, encode_pm};
    use crate::graph::named_graph;

    #[test]
    fn pm_k2_yields_the_single_edge() {
        let g = named_graph("K2").unwrap();
        let sol = sat_bruteforce(&encode_pm(&g, false), 24).unwrap().unwrap();
        assert_eq!(sol.len(), 1);
        assert!(sol.values().all(|&b| b));
    }

    #[test]
    fn twins_are_forced_complements() {
        let g = named_graph("K2").unwrap();
        let sol = sat_bruteforce(&encode_pm(&g, true), 24).unwrap().unwrap();
        assert!(sol.values().all(|&b| b));
    }

    #[test]
    fn infeasible_b_vector_is_unsat_not_an_error() {
        let g = named_graph("K2").unwrap();
        let cs = encode_card(&g, &[5, 5], false);
        assert!(sat_bruteforce(&cs, 24).unwrap().is_none());
    }

    #[test]
    fn size_guard_fires() {
        let g = crate::graph::gen_random_regular(26, 2, 1).unwrap();
        let cs = encode_pm(&g, false);
        assert!(matches!(
            sat_bruteforce(&cs, 24),
            Err(Error::SizeGuard { .. })
        ));
    }
}
