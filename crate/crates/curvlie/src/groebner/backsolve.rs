//! Triangular back-substitution for lexicographic Groebner bases.
//!
//! The solver deliberately handles only the shapes that occur in the
//! assembled Einstein systems: linear steps, univariate quadratics whose
//! roots lie in Q(sqrt(3)), and identically-satisfied equations (which leave
//! variables free). Anything else is reported as a residual, never guessed.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::exact::{QSqrt3, Sign};
use crate::poly::{Polynomial, QuadPolynomial, VariableTable};

use super::buchberger::GroebnerBasis;

/// One solution branch: exact values for solved variables, names for free
/// ones, and any constraints the solver could not process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub assignment: BTreeMap<usize, QSqrt3>,
    pub free: Vec<usize>,
    pub residual: Vec<QuadPolynomial<3>>,
}

impl Branch {
    pub fn is_complete(&self) -> bool {
        self.residual.is_empty()
    }

    /// Evaluate a rational polynomial under this branch's assignment,
    /// leaving free variables symbolic.
    pub fn substitute(&self, f: &Polynomial) -> QuadPolynomial<3> {
        let n = f.table().len();
        let mut values: Vec<Option<QSqrt3>> = vec![None; n];
        for (&v, q) in &self.assignment {
            values[v] = Some(q.clone());
        }
        f.eval_partial(&values)
    }

    /// True when every given polynomial vanishes identically under the
    /// assignment (free variables are universally quantified).
    pub fn satisfies(&self, polys: &[Polynomial]) -> bool {
        polys.iter().all(|f| self.substitute(f).is_zero())
    }
}

#[derive(Debug, Clone)]
pub struct BackSolveResult {
    pub table: Arc<VariableTable>,
    pub branches: Vec<Branch>,
}

impl BackSolveResult {
    pub fn complete_branches(&self) -> impl Iterator<Item = &Branch> {
        self.branches.iter().filter(|b| b.is_complete())
    }

    pub fn has_residuals(&self) -> bool {
        self.branches.iter().any(|b| !b.is_complete())
    }
}

/// Solve a lexicographic basis bottom-up.
pub fn back_solve(basis: &GroebnerBasis) -> BackSolveResult {
    let polys = basis.polys();
    let table = polys
        .first()
        .map(|p| p.table().clone())
        .unwrap_or_else(VariableTable::master);
    let mut vars_in_system: Vec<usize> = Vec::new();
    for p in polys {
        for v in p.support() {
            if !vars_in_system.contains(&v) {
                vars_in_system.push(v);
            }
        }
    }
    vars_in_system.sort_unstable();

    let mut finished: Vec<Branch> = Vec::new();
    // worklist of partial assignments
    let mut stack: Vec<BTreeMap<usize, QSqrt3>> = vec![BTreeMap::new()];

    'outer: while let Some(assignment) = stack.pop() {
        // substitute and classify the remaining constraints
        let mut remaining: Vec<QuadPolynomial<3>> = Vec::new();
        for p in polys {
            let n = table.len();
            let mut values: Vec<Option<QSqrt3>> = vec![None; n];
            for (&v, q) in &assignment {
                values[v] = Some(q.clone());
            }
            let s = p.eval_partial(&values);
            if s.is_zero() {
                continue;
            }
            if let Some(c) = s.as_constant() {
                if !c.is_zero() {
                    // inconsistent branch
                    continue 'outer;
                }
            }
            remaining.push(s);
        }

        if remaining.is_empty() {
            let free: Vec<usize> = vars_in_system
                .iter()
                .copied()
                .filter(|v| !assignment.contains_key(v))
                .collect();
            let b = Branch { assignment, free, residual: Vec::new() };
            if !finished.contains(&b) {
                finished.push(b);
            }
            continue;
        }

        // pick the first univariate constraint, fewest variables first
        let mut order_idx: Vec<usize> = (0..remaining.len()).collect();
        order_idx.sort_by_key(|&i| remaining[i].support().len());
        let target = order_idx
            .into_iter()
            .find(|&i| remaining[i].support().len() == 1);

        let Some(ti) = target else {
            // nothing univariate: record the residuals
            let free: Vec<usize> = vars_in_system
                .iter()
                .copied()
                .filter(|v| {
                    !assignment.contains_key(v)
                        && !remaining.iter().any(|r| r.support().contains(v))
                })
                .collect();
            finished.push(Branch { assignment, free, residual: remaining });
            continue;
        };

        let poly = &remaining[ti];
        let var = poly.support()[0];
        let coeffs: Vec<QSqrt3> = poly
            .coefficients_in(var)
            .into_iter()
            .map(|c| c.as_constant().expect("univariate after substitution"))
            .collect();

        let roots: Vec<QSqrt3> = match coeffs.len() {
            2 => {
                // a1 v + a0 = 0
                let root = -coeffs[0].clone() / coeffs[1].clone();
                vec![root]
            }
            3 => {
                // a2 v^2 + a1 v + a0 = 0
                let a = &coeffs[2];
                let b = &coeffs[1];
                let c = &coeffs[0];
                let four_ac = (a * c).mul_int(4);
                let disc = (b * b).clone() - four_ac;
                match disc.signum() {
                    Sign::Negative => Vec::new(), // no real roots: prune
                    Sign::Zero => {
                        vec![-b.clone() / a.mul_int(2)]
                    }
                    Sign::Positive => match disc.sqrt() {
                        Some(s) => {
                            let two_a = a.mul_int(2);
                            let mut rs = vec![
                                (-b.clone() + s.clone()) / two_a.clone(),
                                (-b.clone() - s) / two_a,
                            ];
                            rs.sort();
                            rs
                        }
                        None => {
                            // real roots outside Q(sqrt 3): residual branch
                            let free = Vec::new();
                            finished.push(Branch {
                                assignment,
                                free,
                                residual: remaining.clone(),
                            });
                            continue 'outer;
                        }
                    },
                }
            }
            _ => {
                // cubic and beyond are out of scope: residual branch
                finished.push(Branch {
                    assignment,
                    free: Vec::new(),
                    residual: remaining.clone(),
                });
                continue 'outer;
            }
        };

        // explore roots in reverse so the stack pops them in sorted order
        for root in roots.into_iter().rev() {
            let mut next = assignment.clone();
            next.insert(var, root);
            stack.push(next);
        }
    }

    BackSolveResult { table, branches: finished }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, GroebnerBudget};
    use crate::poly::{parse_polynomial, MonomialOrder};

    fn solve(gens: &[&str], vars: &[&str]) -> BackSolveResult {
        let t = VariableTable::new(vars).unwrap();
        let polys: Vec<Polynomial> =
            gens.iter().map(|s| parse_polynomial(s, &t).unwrap()).collect();
        let b = buchberger(&polys, MonomialOrder::Lex, GroebnerBudget::default()).unwrap();
        back_solve(&b)
    }

    #[test]
    fn single_linear_equation() {
        let r = solve(&["x - 2"], &["x", "y"]);
        assert_eq!(r.branches.len(), 1);
        let b = &r.branches[0];
        assert!(b.is_complete());
        assert_eq!(b.assignment[&0], QSqrt3::from_int(2));
        assert!(b.free.is_empty()); // y never occurs in the system
    }

    #[test]
    fn quadratic_with_sqrt3_roots() {
        let r = solve(&["x^2 - 3"], &["x"]);
        assert_eq!(r.branches.len(), 2);
        let values: Vec<QSqrt3> =
            r.branches.iter().map(|b| b.assignment[&0].clone()).collect();
        assert!(values.contains(&QSqrt3::radical()));
        assert!(values.contains(&-QSqrt3::radical()));
    }

    #[test]
    fn triangular_system_with_branching() {
        // y^2 = 1, x = y + 1
        let r = solve(&["y^2 - 1", "x - y - 1"], &["x", "y"]);
        assert_eq!(r.branches.len(), 2);
        for b in &r.branches {
            assert!(b.is_complete());
            let x = &b.assignment[&0];
            let y = &b.assignment[&1];
            assert_eq!(x.clone(), y.clone() + QSqrt3::from_int(1));
        }
    }

    #[test]
    fn inconsistent_branch_is_pruned() {
        // x^2 = 1 and x = 2 simultaneously: unit ideal, no solutions
        let r = solve(&["x^2 - 1", "x - 2"], &["x"]);
        assert!(r.branches.is_empty());
    }

    #[test]
    fn negative_discriminant_prunes() {
        let r = solve(&["x^2 + 1"], &["x"]);
        assert!(r.branches.is_empty());
    }

    #[test]
    fn roots_outside_field_become_residuals() {
        let r = solve(&["x^2 - 2"], &["x"]);
        assert_eq!(r.branches.len(), 1);
        assert!(!r.branches[0].is_complete());
        assert_eq!(r.branches[0].residual.len(), 1);
    }

    #[test]
    fn free_variables_are_reported() {
        // x = 0 makes x*y vanish identically; y stays free
        let r = solve(&["x^2", "x*y"], &["x", "y"]);
        assert_eq!(r.branches.len(), 1);
        let b = &r.branches[0];
        assert!(b.is_complete());
        assert_eq!(b.assignment[&0], QSqrt3::zero());
        assert_eq!(b.free, vec![1]);
    }

    #[test]
    fn branch_satisfaction_oracle() {
        let t = VariableTable::new(&["x", "y"]).unwrap();
        let gens = [
            parse_polynomial("x^2 - 3", &t).unwrap(),
            parse_polynomial("y - x - 1", &t).unwrap(),
        ];
        let b = buchberger(&gens, MonomialOrder::Lex, GroebnerBudget::default()).unwrap();
        let r = back_solve(&b);
        assert_eq!(r.branches.len(), 2);
        for branch in &r.branches {
            assert!(branch.satisfies(&gens));
            assert!(branch.satisfies(b.polys()));
        }
    }
}
