//! Curvature of a parametric metric ansatz, computed over polynomials.
//!
//! With `adj` the adjugate of `g` and `det = det(g)`, the inverse metric is
//! `adj/det`, so every curvature quantity is a polynomial divided by a power
//! of `det`:
//!
//! ```text
//! omega^k_{ij} = W^k_{ij} / (2 det)
//! R^l_{ijk}    = S^l_{ijk} / (4 det^2)
//! Ric_{ij}     = P_{ij}   / (4 det^2)
//! ```
//!
//! Only the numerators `W`, `S`, `P` are stored; no polynomial gcds are
//! needed along the way.

use std::sync::Arc;

use num_traits::Zero;

use crate::exact::Rational;
use crate::liealg::LieAlgebra;
use crate::matrix::{SqMatrix, Tensor3, Tensor4};
use crate::poly::{Polynomial, RationalFunction, VariableTable};

use super::CurvatureError;

/// A symmetric matrix of polynomials in the metric parameters, over a fixed
/// variable table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricAnsatz {
    pub algebra: LieAlgebra,
    pub entries: SqMatrix<Polynomial>,
}

impl MetricAnsatz {
    pub fn new(algebra: LieAlgebra, entries: SqMatrix<Polynomial>) -> Result<Self, CurvatureError> {
        if entries.n() != algebra.dim() {
            return Err(CurvatureError::Dimension {
                metric: entries.n(),
                algebra: algebra.dim(),
            });
        }
        if !entries.is_symmetric() {
            return Err(CurvatureError::NotSymmetric);
        }
        Ok(MetricAnsatz { algebra, entries })
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.entries.get(0, 0).table()
    }

    pub fn n(&self) -> usize {
        self.entries.n()
    }

    /// Variable indices that occur in some entry.
    pub fn parameters(&self) -> Vec<usize> {
        let mut used = Vec::new();
        for row in self.entries.rows() {
            for e in row {
                for v in e.support() {
                    if !used.contains(&v) {
                        used.push(v);
                    }
                }
            }
        }
        used.sort_unstable();
        used
    }

    /// Substitute exact values for the parameters, producing a scalar matrix.
    pub fn instantiate<S>(&self, values: &[Option<S>]) -> Result<SqMatrix<S>, crate::poly::PolyError>
    where
        S: crate::poly::Coeff,
        Rational: crate::poly::ToScalar<S>,
    {
        let n = self.n();
        let mut out = SqMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.entries.get(i, j).eval(values)?);
            }
        }
        Ok(out)
    }
}

/// Numerator-level curvature data of an ansatz.
#[derive(Debug, Clone)]
pub struct SymbolicCurvature {
    pub ansatz: MetricAnsatz,
    pub det: Polynomial,
    pub adjugate: SqMatrix<Polynomial>,
    /// `omega^k_{ij} = omega_num[k][i][j] / (2 det)`
    pub omega_num: Tensor3<Polynomial>,
}

impl SymbolicCurvature {
    /// Precompute determinant, adjugate and connection numerators.
    /// Errors when the ansatz is identically singular.
    pub fn new(ansatz: MetricAnsatz) -> Result<Self, CurvatureError> {
        let n = ansatz.n();
        let g = &ansatz.entries;
        let det = poly_det(g);
        if det.is_zero() {
            return Err(CurvatureError::SingularMetric);
        }
        // adjugate via signed cofactors: adj[i][j] = (-1)^{i+j} minor(j, i)
        let adjugate = SqMatrix::from_fn(n, |i, j| {
            let minor = minor_det(g, j, i);
            if (i + j) % 2 == 0 {
                minor
            } else {
                -&minor
            }
        });
        let table = ansatz.table().clone();
        let c = |k: usize, i: usize, j: usize| ansatz.algebra.c(k, i, j);
        // W^k_{ij} = -sum_{l,m} (g_{il} c^l_{jm} + g_{jl} c^l_{im}) adj_{mk} + det c^k_{ij}
        let omega_num = Tensor3::from_fn(n, |k, i, j| {
            let mut acc = det.mul_scalar(c(k, i, j));
            for l in 0..n {
                for m in 0..n {
                    let coeff = c(l, j, m);
                    if !coeff.is_zero() {
                        let t = g.get(i, l).try_mul(adjugate.get(m, k)).unwrap().mul_scalar(coeff);
                        acc = acc.try_sub(&t).unwrap();
                    }
                    let coeff = c(l, i, m);
                    if !coeff.is_zero() {
                        let t = g.get(j, l).try_mul(adjugate.get(m, k)).unwrap().mul_scalar(coeff);
                        acc = acc.try_sub(&t).unwrap();
                    }
                }
            }
            let _ = &table;
            acc
        });
        Ok(SymbolicCurvature { ansatz, det, adjugate, omega_num })
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.ansatz.table()
    }

    /// Inverse metric entries `adj_{ij}/det` as normalized rational functions.
    pub fn inverse_metric(&self) -> Result<SqMatrix<RationalFunction>, crate::poly::PolyError> {
        let n = self.ansatz.n();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(RationalFunction::new(
                    self.adjugate.get(i, j).clone(),
                    self.det.clone(),
                )?);
            }
            rows.push(row);
        }
        Ok(SqMatrix::from_rows(rows))
    }

    /// One connection coefficient as a normalized rational function.
    pub fn connection(&self, k: usize, i: usize, j: usize) -> RationalFunction {
        let two_det = self.det.mul_scalar(&Rational::new(2.into(), 1.into()));
        RationalFunction::new(self.omega_num.get(k, i, j).clone(), two_det)
            .expect("det is nonzero")
    }

    /// Riemann numerator `S^l_{ijk}` with `R^l_{ijk} = S / (4 det^2)`.
    pub fn riemann_numerator(&self, l: usize, i: usize, j: usize, k: usize) -> Polynomial {
        let n = self.ansatz.n();
        let table = self.table().clone();
        let w = &self.omega_num;
        let mut acc = Polynomial::zero(table);
        for m in 0..n {
            let a = w.get(m, j, k).try_mul(w.get(l, i, m)).unwrap();
            let b = w.get(m, i, k).try_mul(w.get(l, j, m)).unwrap();
            acc = acc.try_add(&a).unwrap().try_sub(&b).unwrap();
            let cm = self.ansatz.algebra.c(m, i, j);
            if !cm.is_zero() {
                let t = self
                    .det
                    .try_mul(w.get(l, m, k))
                    .unwrap()
                    .mul_scalar(&(cm * &Rational::new(2.into(), 1.into())));
                acc = acc.try_sub(&t).unwrap();
            }
        }
        acc
    }

    /// All Riemann numerators. Quartic in the dimension; meant for small
    /// ansatz tables.
    pub fn riemann_numerators(&self) -> Tensor4<Polynomial> {
        let n = self.ansatz.n();
        Tensor4::from_fn(n, |l, i, j, k| self.riemann_numerator(l, i, j, k))
    }

    /// One Riemann component as a normalized rational function.
    pub fn riemann(&self, l: usize, i: usize, j: usize, k: usize) -> RationalFunction {
        let den = self
            .det
            .try_mul(&self.det)
            .unwrap()
            .mul_scalar(&Rational::new(4.into(), 1.into()));
        RationalFunction::new(self.riemann_numerator(l, i, j, k), den).expect("det is nonzero")
    }

    /// Ricci numerator `P_{ij}` with `Ric_{ij} = P / (4 det^2)`, computed by
    /// contracting without materializing the full Riemann tensor.
    pub fn ricci_numerator(&self, i: usize, j: usize) -> Polynomial {
        let n = self.ansatz.n();
        let table = self.table().clone();
        let w = &self.omega_num;
        let mut acc = Polynomial::zero(table);
        for l in 0..n {
            for m in 0..n {
                let a = w.get(m, i, j).try_mul(w.get(l, l, m)).unwrap();
                let b = w.get(m, l, j).try_mul(w.get(l, i, m)).unwrap();
                acc = acc.try_add(&a).unwrap().try_sub(&b).unwrap();
                let cm = self.ansatz.algebra.c(m, l, i);
                if !cm.is_zero() {
                    let t = self
                        .det
                        .try_mul(w.get(l, m, j))
                        .unwrap()
                        .mul_scalar(&(cm * &Rational::new(2.into(), 1.into())));
                    acc = acc.try_sub(&t).unwrap();
                }
            }
        }
        acc
    }

    /// Ricci entry as a normalized rational function.
    pub fn ricci(&self, i: usize, j: usize) -> RationalFunction {
        let den = self
            .det
            .try_mul(&self.det)
            .unwrap()
            .mul_scalar(&Rational::new(4.into(), 1.into()));
        RationalFunction::new(self.ricci_numerator(i, j), den).expect("det is nonzero")
    }
}

/// Determinant of a polynomial matrix by Laplace expansion with subset
/// memoization (polynomials are not a `Coeff` scalar, so the generic
/// `det_ring` does not apply).
fn poly_det(g: &SqMatrix<Polynomial>) -> Polynomial {
    let n = g.n();
    let table = g.get(0, 0).table().clone();
    let one = Polynomial::one_poly(table.clone());
    if n == 0 {
        return one;
    }
    let full = 1usize << n;
    let mut minor: Vec<Option<Polynomial>> = vec![None; full];
    minor[0] = Some(one);
    for mask in 1..full {
        let row = (mask as u32).count_ones() as usize - 1;
        let mut acc = Polynomial::zero(table.clone());
        let mut sign_pos = row % 2 == 0;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let sub = mask & !(1 << j);
            let m = minor[sub].as_ref().expect("filled in mask order");
            let term = g.get(row, j).try_mul(m).unwrap();
            acc = if sign_pos {
                acc.try_add(&term).unwrap()
            } else {
                acc.try_sub(&term).unwrap()
            };
            sign_pos = !sign_pos;
        }
        minor[mask] = Some(acc);
    }
    minor[full - 1].take().unwrap()
}

/// Determinant of the submatrix with row `skip_row` and column `skip_col`
/// removed.
fn minor_det(g: &SqMatrix<Polynomial>, skip_row: usize, skip_col: usize) -> Polynomial {
    let n = g.n();
    let rows: Vec<usize> = (0..n).filter(|&r| r != skip_row).collect();
    let cols: Vec<usize> = (0..n).filter(|&c| c != skip_col).collect();
    let sub = SqMatrix::from_fn(n - 1, |i, j| g.get(rows[i], cols[j]).clone());
    poly_det(&sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn rq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn const_poly(t: &Arc<VariableTable>, v: Rational) -> Polynomial {
        Polynomial::constant(t.clone(), v)
    }

    /// The general diagonal ansatz diag(x1, y1, z1, x2, y2, z2).
    fn diag_ansatz() -> MetricAnsatz {
        let t = VariableTable::master();
        let names = ["x1", "y1", "z1", "x2", "y2", "z2"];
        let entries = SqMatrix::from_fn(6, |i, j| {
            if i == j {
                Polynomial::var_named(&t, names[i]).unwrap()
            } else {
                Polynomial::zero(t.clone())
            }
        });
        MetricAnsatz::new(LieAlgebra::sl2_sl2(), entries).unwrap()
    }

    /// The full 21-parameter symmetric ansatz in the master variable order.
    fn full_ansatz() -> MetricAnsatz {
        let t = VariableTable::master();
        let names = [
            ["x1", "u1", "w1", "a1", "b1", "c1"],
            ["u1", "y1", "v1", "a2", "b2", "c2"],
            ["w1", "v1", "z1", "a3", "b3", "c3"],
            ["a1", "a2", "a3", "x2", "u2", "w2"],
            ["b1", "b2", "b3", "u2", "y2", "v2"],
            ["c1", "c2", "c3", "w2", "v2", "z2"],
        ];
        let entries =
            SqMatrix::from_fn(6, |i, j| Polynomial::var_named(&t, names[i][j]).unwrap());
        MetricAnsatz::new(LieAlgebra::sl2_sl2(), entries).unwrap()
    }

    #[test]
    fn identity_metric_inverts_to_identity() {
        let t = VariableTable::master();
        let entries = SqMatrix::from_fn(6, |i, j| {
            const_poly(&t, if i == j { rq(1, 1) } else { rq(0, 1) })
        });
        let ansatz = MetricAnsatz::new(LieAlgebra::sl2_sl2(), entries).unwrap();
        let cur = SymbolicCurvature::new(ansatz).unwrap();
        let inv = cur.inverse_metric().unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expect = const_poly(&t, if i == j { rq(1, 1) } else { rq(0, 1) });
                assert_eq!(inv.get(i, j), &RationalFunction::from_poly(expect));
            }
        }
    }

    #[test]
    fn diagonal_symbolic_inverse() {
        let cur = SymbolicCurvature::new(diag_ansatz()).unwrap();
        let inv = cur.inverse_metric().unwrap();
        let t = VariableTable::master();
        let names = ["x1", "y1", "z1", "x2", "y2", "z2"];
        for i in 0..6 {
            for j in 0..6 {
                if i == j {
                    let one = Polynomial::one_poly(t.clone());
                    let d = Polynomial::var_named(&t, names[i]).unwrap();
                    assert_eq!(inv.get(i, j), &RationalFunction::new(one, d).unwrap());
                } else {
                    assert!(inv.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn killing_constant_ansatz_matches_numeric() {
        // (1/8)B as a constant ansatz
        let t = VariableTable::master();
        let entries = SqMatrix::from_fn(6, |i, j| {
            let v = if i != j {
                rq(0, 1)
            } else if i % 3 == 0 {
                rq(-1, 1)
            } else {
                rq(1, 1)
            };
            const_poly(&t, v)
        });
        let alg = LieAlgebra::sl2_sl2();
        let ansatz = MetricAnsatz::new(alg.clone(), entries).unwrap();
        let cur = SymbolicCurvature::new(ansatz).unwrap();
        // Ric = -2 g: the (i,i) Ricci entries are constants
        for i in 0..6 {
            let ric = cur.ricci(i, i);
            let expect = if i % 3 == 0 { rq(2, 1) } else { rq(-2, 1) };
            assert_eq!(ric, RationalFunction::from_poly(const_poly(&t, expect)));
        }
        // off-diagonal Ricci vanishes
        assert!(cur.ricci(0, 3).is_zero());
        assert!(cur.ricci(1, 2).is_zero());
    }

    #[test]
    fn torsion_relation_on_the_full_ansatz() {
        // omega^k_{ij} - omega^k_{ji} = c^k_{ij}, as numerators:
        // W^k_{ij} - W^k_{ji} = 2 det c^k_{ij}
        let cur = SymbolicCurvature::new(full_ansatz()).unwrap();
        let two_det = cur.det.mul_scalar(&rq(2, 1));
        let alg = LieAlgebra::sl2_sl2();
        for k in 0..6 {
            for i in 0..6 {
                for j in 0..6 {
                    let lhs = cur
                        .omega_num
                        .get(k, i, j)
                        .try_sub(cur.omega_num.get(k, j, i))
                        .unwrap();
                    assert_eq!(lhs, two_det.mul_scalar(alg.c(k, i, j)));
                }
            }
        }
    }

    #[test]
    fn symbolic_specializes_to_numeric() {
        use crate::curvature::numeric;
        let cur = SymbolicCurvature::new(diag_ansatz()).unwrap();
        let t = VariableTable::master();
        // sample point: diag(3, 1, 2, -1, 1, 5)
        let mut values: Vec<Option<Rational>> = vec![None; t.len()];
        let sample = [("x1", 3), ("y1", 1), ("z1", 2), ("x2", -1), ("y2", 1), ("z2", 5)];
        for (name, v) in sample {
            values[t.index_of(name).unwrap()] = Some(rq(v, 1));
        }
        let g = cur.ansatz.instantiate(&values).unwrap();
        let num = numeric::curvature(&LieAlgebra::sl2_sl2(), &g).unwrap();
        // spot-check a batch of components through both routes
        for (l, i, j, k) in [(0, 1, 2, 0), (3, 4, 5, 3), (1, 0, 2, 2), (5, 3, 4, 4)] {
            let symbolic = cur.riemann(l, i, j, k).eval(&values).unwrap();
            assert_eq!(&symbolic, num.riemann.get(l, i, j, k));
        }
        for i in 0..6 {
            for j in 0..6 {
                let symbolic = cur.ricci(i, j).eval(&values).unwrap();
                assert_eq!(&symbolic, num.ricci.get(i, j));
            }
        }
    }

    #[test]
    fn riemann_antisymmetry_numerators() {
        let cur = SymbolicCurvature::new(diag_ansatz()).unwrap();
        for l in 0..6 {
            for i in 0..6 {
                for j in 0..=i {
                    for k in 0..6 {
                        let a = cur.riemann_numerator(l, i, j, k);
                        let b = cur.riemann_numerator(l, j, i, k);
                        assert!(a.try_add(&b).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn singular_ansatz_is_an_error() {
        let t = VariableTable::master();
        let entries = SqMatrix::from_fn(6, |_, _| Polynomial::var_named(&t, "x1").unwrap());
        let ansatz = MetricAnsatz::new(LieAlgebra::sl2_sl2(), entries).unwrap();
        assert_eq!(
            SymbolicCurvature::new(ansatz).unwrap_err(),
            CurvatureError::SingularMetric
        );
    }

    #[test]
    fn parameters_listed_in_table_order() {
        let a = diag_ansatz();
        let t = VariableTable::master();
        let expect: Vec<usize> = ["x1", "y1", "z1", "x2", "y2", "z2"]
            .iter()
            .map(|n| t.index_of(n).unwrap())
            .collect();
        let mut sorted = expect.clone();
        sorted.sort_unstable();
        assert_eq!(a.parameters(), sorted);
        let _ = parse_polynomial("x1", &t).unwrap();
    }
}
