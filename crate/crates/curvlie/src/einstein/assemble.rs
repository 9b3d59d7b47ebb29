//! Assembly of the Einstein equations as a polynomial system.
//!
//! For an ansatz `g` the entries of `Ric - lambda g` are rational functions
//! with denominator `4 det(g)^2`. The system consists of the 21 numerators
//! of the upper triangle plus the volume normalization `det(g) = +-1`, all
//! polynomials in `lambda` and the metric parameters under the master
//! variable order (with `lambda` most significant).

use std::sync::Arc;

use num_traits::Zero;

use crate::curvature::{MetricAnsatz, SymbolicCurvature};
use crate::exact::Rational;
use crate::poly::{try_exact_div, Polynomial, VariableTable};

use super::EinsteinError;

/// The polynomial system of one case.
#[derive(Debug, Clone)]
pub struct EinsteinSystem {
    pub table: Arc<VariableTable>,
    /// Numerators of `(Ric - lambda g)_{ij}` for `i <= j`, row-major over
    /// the upper triangle; identically-zero entries are kept so the list
    /// always has 21 members.
    pub numerators: Vec<Polynomial>,
    /// `det(g) - det_sign`.
    pub det_constraint: Polynomial,
    pub det_sign: i32,
    /// Defining relations of adjoined symbols (`2 s^2 - 1` for Q5).
    pub relations: Vec<Polynomial>,
}

impl EinsteinSystem {
    /// All 22 equations (plus any symbol relations), zeros filtered out:
    /// the generator list for the Groebner step.
    pub fn generators(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> =
            self.numerators.iter().filter(|p| !p.is_zero()).cloned().collect();
        out.push(self.det_constraint.clone());
        out.extend(self.relations.iter().cloned());
        out
    }

    /// The full 22-polynomial system (21 numerators + determinant
    /// constraint), including identically-zero numerators.
    pub fn all_equations(&self) -> Vec<Polynomial> {
        let mut out = self.numerators.clone();
        out.push(self.det_constraint.clone());
        out
    }
}

/// Strip factors of `det` and the rational content from a numerator; both
/// are units on the solution set (the determinant constraint forces
/// `det = +-1`).
fn strip(numerator: Polynomial, det: &Polynomial) -> Polynomial {
    let mut p = numerator;
    loop {
        if p.is_zero() {
            return p;
        }
        match try_exact_div(&p, det) {
            Some(q) => p = q,
            None => break,
        }
    }
    p.primitive_part()
}

/// Build the system for `ansatz` with the volume sign `det_sign` and the
/// given symbol relations.
pub fn assemble_einstein_system(
    ansatz: &MetricAnsatz,
    det_sign: i32,
    relations: &[Polynomial],
) -> Result<EinsteinSystem, EinsteinError> {
    assert!(det_sign == 1 || det_sign == -1, "det sign must be +1 or -1");
    let cur = SymbolicCurvature::new(ansatz.clone())?;
    let table = ansatz.table().clone();
    let lambda = Polynomial::var_named(&table, "l")?;
    let det2 = cur.det.try_mul(&cur.det)?;
    let four = Rational::new(4.into(), 1.into());

    let mut numerators = Vec::with_capacity(21);
    for i in 0..6 {
        for j in i..6 {
            // numerator of Ric_ij - lambda g_ij over the denominator 4 det^2
            let p = cur.ricci_numerator(i, j);
            let lg = lambda
                .try_mul(ansatz.entries.get(i, j))?
                .try_mul(&det2)?
                .mul_scalar(&four);
            let num = p.try_sub(&lg)?;
            numerators.push(strip(num, &cur.det));
        }
    }

    let sign = Polynomial::constant(
        table.clone(),
        Rational::new(det_sign.into(), 1.into()),
    );
    let det_constraint = cur.det.try_sub(&sign)?;

    Ok(EinsteinSystem {
        table,
        numerators,
        det_constraint,
        det_sign,
        relations: relations.to_vec(),
    })
}
