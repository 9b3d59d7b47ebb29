//! Invariant metric ansatz per generator.
//!
//! `invariant_tensor_space` solves `ad_A^T g + g ad_A = 0` over the
//! 21-dimensional space of symmetric 6x6 matrices and returns a basis;
//! `case_ansatz` returns the classification's parameterization of that
//! space for each of the eleven patterns, with the second diagonal block
//! replaced by one of the five canonical forms `Q1..Q5` where the pattern
//! only pins it up to the action of SO(2,1).

use std::sync::Arc;

use num_traits::Zero;

use crate::curvature::MetricAnsatz;
use crate::exact::Rational;
use crate::liealg::{AlgebraElement, LieAlgebra};
use crate::matrix::{nullspace, SqMatrix};
use crate::poly::{parse_polynomial, Polynomial, VariableTable};

use super::cases::AnsatzPattern;
use super::EinsteinError;

/// Positions of the 21 entry variables in the general symmetric form, in
/// master-table order `x1, y1, z1, x2, y2, z2, u1, v1, w1, u2, v2, w2, a1,
/// b1, c1, a2, b2, c2, a3, b3, c3`.
const ENTRY_POSITIONS: [(&str, usize, usize); 21] = [
    ("x1", 0, 0),
    ("y1", 1, 1),
    ("z1", 2, 2),
    ("x2", 3, 3),
    ("y2", 4, 4),
    ("z2", 5, 5),
    ("u1", 0, 1),
    ("v1", 1, 2),
    ("w1", 0, 2),
    ("u2", 3, 4),
    ("v2", 4, 5),
    ("w2", 3, 5),
    ("a1", 0, 3),
    ("b1", 0, 4),
    ("c1", 0, 5),
    ("a2", 1, 3),
    ("b2", 1, 4),
    ("c2", 1, 5),
    ("a3", 2, 3),
    ("b3", 2, 4),
    ("c3", 2, 5),
];

/// Basis of the space of symmetric 6x6 matrices `g` with
/// `ad_A^T g + g ad_A = 0`, as coordinate vectors over the 21 entry
/// variables (same order as `ENTRY_POSITIONS`).
pub fn invariant_tensor_space(alg: &LieAlgebra, a: &AlgebraElement) -> Vec<SqMatrix<Rational>> {
    assert_eq!(alg.dim(), 6);
    let ad = alg.ad_matrix(a);
    // rows: the 21 upper-triangle entries of ad^T g + g ad; cols: 21 unknowns
    let mut rows = Vec::new();
    for p in 0..6 {
        for q in p..6 {
            let mut row = vec![Rational::zero(); 21];
            for (col, &(_, i, j)) in ENTRY_POSITIONS.iter().enumerate() {
                // contribution of unknown g_{ij} (and g_{ji}) to
                // (ad^T g + g ad)_{pq} = sum_m ad_{mp} g_{mq} + g_{pm} ad_{mq}
                let mut coeff = Rational::zero();
                for m in 0..6 {
                    if (m, q) == (i, j) || (m, q) == (j, i) {
                        coeff += ad.get(m, p);
                    }
                    if (p, m) == (i, j) || (p, m) == (j, i) {
                        coeff += ad.get(m, q);
                    }
                }
                row[col] = coeff;
            }
            rows.push(row);
        }
    }
    nullspace(&rows, 21)
        .into_iter()
        .map(|v| {
            let mut m = SqMatrix::<Rational>::zeros(6);
            for (col, &(_, i, j)) in ENTRY_POSITIONS.iter().enumerate() {
                m.set(i, j, v[col].clone());
                if i != j {
                    m.set(j, i, v[col].clone());
                }
            }
            m
        })
        .collect()
}

/// Whether a symmetric matrix lies in the span of a basis (exact rank test).
pub fn in_span(basis: &[SqMatrix<Rational>], m: &SqMatrix<Rational>) -> bool {
    let flatten = |g: &SqMatrix<Rational>| -> Vec<Rational> {
        ENTRY_POSITIONS.iter().map(|&(_, i, j)| g.get(i, j).clone()).collect()
    };
    let mut rows: Vec<Vec<Rational>> = basis.iter().map(|b| flatten(b)).collect();
    let rank_basis = crate::matrix::rref(&mut rows.clone()).len();
    rows.push(flatten(m));
    let rank_aug = crate::matrix::rref(&mut rows).len();
    rank_basis == rank_aug
}

/// One of the five canonical symmetric forms modulo SO(2,1).
#[derive(Debug, Clone)]
pub struct QRepresentative {
    pub index: usize,
    /// 3x3 symmetric matrix over the table `x, y, z, s`.
    pub matrix: SqMatrix<Polynomial>,
    /// Defining relation of the auxiliary symbol, if one occurs
    /// (`2 s^2 - 1 = 0` for the off-diagonal entries of `Q5`).
    pub relation: Option<Polynomial>,
}

/// The canonical forms:
///
/// ```text
/// Q1 = diag(x, y, z)            Q2 = [-x y 0; y x 0; 0 0 z]
/// Q3 = [-1/2-x -1/2 0; -1/2 -1/2+x 0; 0 0 y]
/// Q4 = [ 1/2-x  1/2 0;  1/2  1/2+x 0; 0 0 y]
/// Q5 = [-x 0 s; 0 x s; s s x],  2 s^2 = 1
/// ```
pub fn q_block_ansatz(index: usize) -> QRepresentative {
    assert!((1..=5).contains(&index), "Q index must be 1..5");
    let table = VariableTable::new(&["x", "y", "z", "s"]).unwrap();
    let rows: [[&str; 3]; 3] = match index {
        1 => [["x", "0", "0"], ["0", "y", "0"], ["0", "0", "z"]],
        2 => [["-x", "y", "0"], ["y", "x", "0"], ["0", "0", "z"]],
        3 => [
            ["-1/2 - x", "-1/2", "0"],
            ["-1/2", "-1/2 + x", "0"],
            ["0", "0", "y"],
        ],
        4 => [
            ["1/2 - x", "1/2", "0"],
            ["1/2", "1/2 + x", "0"],
            ["0", "0", "y"],
        ],
        _ => [["-x", "0", "s"], ["0", "x", "s"], ["s", "s", "x"]],
    };
    let matrix = SqMatrix::from_fn(3, |i, j| parse_polynomial(rows[i][j], &table).unwrap());
    let relation = (index == 5).then(|| parse_polynomial("2*s^2 - 1", &table).unwrap());
    QRepresentative { index, matrix, relation }
}

/// How the `Q` parameters land in the master variable table when the block
/// is the second factor's diagonal block: positions `(3,3), (3,4), (4,4),
/// (5,5), (3,5), (4,5)` of the 6x6 ansatz.
fn q_block_entries(index: usize) -> (Vec<(usize, usize, &'static str)>, bool) {
    match index {
        1 => (vec![(3, 3, "x2"), (4, 4, "y2"), (5, 5, "z2")], false),
        2 => (vec![(3, 3, "-x2"), (3, 4, "u2"), (4, 4, "x2"), (5, 5, "z2")], false),
        3 => (
            vec![
                (3, 3, "-1/2 - x2"),
                (3, 4, "-1/2"),
                (4, 4, "-1/2 + x2"),
                (5, 5, "z2"),
            ],
            false,
        ),
        4 => (
            vec![
                (3, 3, "1/2 - x2"),
                (3, 4, "1/2"),
                (4, 4, "1/2 + x2"),
                (5, 5, "z2"),
            ],
            false,
        ),
        5 => (
            vec![(3, 3, "-x2"), (4, 4, "x2"), (5, 5, "x2"), (3, 5, "s"), (4, 5, "s")],
            true,
        ),
        _ => panic!("Q index must be 1..5"),
    }
}

fn pattern_entries(pattern: AnsatzPattern) -> Vec<(usize, usize, &'static str)> {
    use AnsatzPattern::*;
    match pattern {
        E1RE1Generic => vec![
            (0, 0, "x1"),
            (1, 1, "y1"),
            (2, 2, "y1"),
            (3, 3, "x2"),
            (4, 4, "y2"),
            (5, 5, "y2"),
            (0, 3, "a1"),
        ],
        E1E1 => vec![
            (0, 0, "x1"),
            (1, 1, "y1"),
            (2, 2, "y1"),
            (3, 3, "x2"),
            (4, 4, "y2"),
            (5, 5, "y2"),
            (0, 3, "a1"),
            (1, 4, "b2"),
            (1, 5, "c2"),
            (2, 4, "-c2"),
            (2, 5, "b2"),
        ],
        E1Zero => vec![
            (0, 0, "x1"),
            (1, 1, "y1"),
            (2, 2, "y1"),
            (0, 3, "a1"),
            (0, 4, "b1"),
            (0, 5, "c1"),
        ],
        E1RE3Generic => vec![
            (0, 0, "x1"),
            (1, 1, "y1"),
            (2, 2, "y1"),
            (3, 3, "x2"),
            (4, 4, "-x2"),
            (5, 5, "z2"),
            (0, 5, "c1"),
        ],
        E1N => vec![
            (0, 0, "x1"),
            (1, 1, "y1"),
            (2, 2, "y1"),
            (0, 3, "a1"),
            (0, 4, "a1"),
            (3, 3, "x2"),
            (3, 4, "1/2*x2 + 1/2*y2"),
            (4, 4, "y2"),
            (5, 5, "-1/2*x2 + 1/2*y2"),
        ],
        E3RE3Generic => vec![
            (0, 0, "x1"),
            (1, 1, "-x1"),
            (2, 2, "z1"),
            (3, 3, "x2"),
            (4, 4, "-x2"),
            (5, 5, "z2"),
            (2, 5, "c3"),
        ],
        E3E3 => vec![
            (0, 0, "x1"),
            (1, 1, "-x1"),
            (2, 2, "z1"),
            (3, 3, "x2"),
            (4, 4, "-x2"),
            (5, 5, "z2"),
            (2, 5, "c3"),
            (0, 3, "a1"),
            (0, 4, "b1"),
            (1, 3, "-b1"),
            (1, 4, "-a1"),
        ],
        E3Zero => vec![
            (0, 0, "x1"),
            (1, 1, "-x1"),
            (2, 2, "z1"),
            (2, 3, "a3"),
            (2, 4, "b3"),
            (2, 5, "c3"),
        ],
        E3N => vec![
            (0, 0, "x1"),
            (1, 1, "-x1"),
            (2, 2, "z1"),
            (2, 3, "a3"),
            (2, 4, "a3"),
            (3, 3, "x2"),
            (3, 4, "1/2*x2 + 1/2*y2"),
            (4, 4, "y2"),
            (5, 5, "-1/2*x2 + 1/2*y2"),
        ],
        NZero => vec![
            (0, 0, "x1"),
            (0, 1, "1/2*x1 + 1/2*y1"),
            (1, 1, "y1"),
            (2, 2, "-1/2*x1 + 1/2*y1"),
            (0, 3, "a1"),
            (0, 4, "b1"),
            (0, 5, "c1"),
            (1, 3, "a1"),
            (1, 4, "b1"),
            (1, 5, "c1"),
        ],
        NN => vec![
            (0, 0, "x1"),
            (0, 1, "1/2*x1 + 1/2*y1"),
            (1, 1, "y1"),
            (2, 2, "-1/2*x1 + 1/2*y1"),
            (0, 3, "a1"),
            (0, 4, "b1"),
            (0, 5, "c1"),
            (1, 3, "b1"),
            (1, 4, "-a1 + 2*b1"),
            (1, 5, "c1"),
            (2, 3, "-c1"),
            (2, 4, "-c1"),
            (2, 5, "-a1 + b1"),
            (3, 3, "x2"),
            (3, 4, "1/2*x2 + 1/2*y2"),
            (4, 4, "y2"),
            (5, 5, "-1/2*x2 + 1/2*y2"),
        ],
    }
}

/// The invariant metric ansatz of a pattern, over the master variable table.
/// Patterns with a free second block take a `Q` index 1..5; the `Q5` symbol
/// `s` is adjoined to the table together with its relation `2 s^2 - 1`.
/// Returns the ansatz and the list of defining relations.
pub fn case_ansatz(
    pattern: AnsatzPattern,
    q_index: Option<usize>,
) -> Result<(MetricAnsatz, Vec<Polynomial>), EinsteinError> {
    let mut entries = pattern_entries(pattern);
    let mut relations = Vec::new();
    let needs_s = pattern.has_q_block() && q_index == Some(5);
    let table = if needs_s {
        VariableTable::master().extended(&["s"])?
    } else {
        VariableTable::master()
    };
    if pattern.has_q_block() {
        let q = q_index.ok_or_else(|| {
            EinsteinError::BadParameter(format!(
                "pattern {} needs a Q block index 1..5",
                pattern.label()
            ))
        })?;
        if !(1..=5).contains(&q) {
            return Err(EinsteinError::BadParameter(format!("Q index out of range: {q}")));
        }
        let (block, has_relation) = q_block_entries(q);
        entries.extend(block);
        if has_relation {
            relations.push(parse_polynomial("2*s^2 - 1", &table)?);
        }
    } else if q_index.is_some() {
        return Err(EinsteinError::BadParameter(format!(
            "pattern {} has no Q sub-cases",
            pattern.label()
        )));
    }

    let mut m = SqMatrix::from_fn(6, |_, _| Polynomial::zero(table.clone()));
    for (i, j, expr) in entries {
        let p = parse_polynomial(expr, &table)?;
        m.set(i, j, p.clone());
        if i != j {
            m.set(j, i, p);
        }
    }
    let ansatz = MetricAnsatz::new(LieAlgebra::sl2_sl2(), m)?;
    Ok((ansatz, relations))
}

/// Parameter-count of each pattern's full invariant space (before any `Q`
/// reduction); used as the expected nullspace dimension.
pub fn expected_invariant_dimension(pattern: AnsatzPattern) -> usize {
    use AnsatzPattern::*;
    match pattern {
        E1RE1Generic | E1RE3Generic | E1N | E3RE3Generic | E3N => 5,
        E1E1 | E3E3 | NN => 7,
        E1Zero | E3Zero | NZero => 11,
    }
}

/// Random-looking but fixed rational values for instantiating templates.
pub fn sample_values(seed: u64, count: usize) -> Vec<Rational> {
    // a small linear congruential walk; exactness matters, randomness no
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let num = ((state >> 33) % 19) as i64 - 9;
        let den = ((state >> 20) % 7) as i64 + 1;
        out.push(Rational::new(num.into(), den.into()));
    }
    out
}

/// Instantiate an ansatz at rational parameter values (in `parameters()`
/// order), producing a rational symmetric matrix.
pub fn instantiate_rational(
    ansatz: &MetricAnsatz,
    values: &[Rational],
) -> Result<SqMatrix<Rational>, EinsteinError> {
    let table = ansatz.table().clone();
    let params = ansatz.parameters();
    assert_eq!(params.len(), values.len());
    let mut assignment: Vec<Option<Rational>> = vec![None; table.len()];
    for (&v, value) in params.iter().zip(values) {
        assignment[v] = Some(value.clone());
    }
    Ok(ansatz.instantiate(&assignment)?)
}
