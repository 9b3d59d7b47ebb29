//! Curvature over an exact field: rationals or a quadratic extension.

use num_traits::Zero;

use crate::exact::Rational;
use crate::liealg::LieAlgebra;
use crate::matrix::{FieldScalar, SqMatrix, Tensor3, Tensor4, Tensor5};
use crate::poly::Coeff;

use super::CurvatureError;

/// Connection, Riemann and Ricci data of one exact metric.
#[derive(Debug, Clone)]
pub struct Curvature<S> {
    pub metric: SqMatrix<S>,
    pub inverse: SqMatrix<S>,
    /// `omega[k][i][j] = omega^k_{ij}`
    pub connection: Tensor3<S>,
    /// `riemann[l][i][j][k] = R^l_{ijk}`
    pub riemann: Tensor4<S>,
    pub ricci: SqMatrix<S>,
}

fn structure_constants<S: Coeff>(alg: &LieAlgebra) -> Tensor3<S> {
    Tensor3::from_fn(alg.dim(), |k, i, j| S::from_rational(alg.c(k, i, j)))
}

/// Compute all curvature data of `g` on `alg`.
pub fn curvature<S: FieldScalar>(
    alg: &LieAlgebra,
    g: &SqMatrix<S>,
) -> Result<Curvature<S>, CurvatureError> {
    let n = alg.dim();
    if g.n() != n {
        return Err(CurvatureError::Dimension { metric: g.n(), algebra: n });
    }
    if !g.is_symmetric() {
        return Err(CurvatureError::NotSymmetric);
    }
    let inverse = g.inverse().ok_or(CurvatureError::SingularMetric)?;
    let c = structure_constants::<S>(alg);
    let half = S::from_rational(&Rational::new(1.into(), 2.into()));

    let connection = Tensor3::from_fn(n, |k, i, j| {
        let mut acc = c.get(k, i, j).clone();
        for l in 0..n {
            for m in 0..n {
                let gi = g.get(i, l).clone() * inverse.get(m, k).clone() * c.get(l, j, m).clone();
                let gj = g.get(j, l).clone() * inverse.get(m, k).clone() * c.get(l, i, m).clone();
                acc = acc - gi - gj;
            }
        }
        acc * half.clone()
    });

    let riemann = Tensor4::from_fn(n, |l, i, j, k| {
        let mut acc = S::zero();
        for m in 0..n {
            acc = acc + connection.get(m, j, k).clone() * connection.get(l, i, m).clone()
                - connection.get(m, i, k).clone() * connection.get(l, j, m).clone()
                - c.get(m, i, j).clone() * connection.get(l, m, k).clone();
        }
        acc
    });

    let ricci = SqMatrix::from_fn(n, |i, j| {
        let mut acc = S::zero();
        for l in 0..n {
            acc = acc + riemann.get(l, l, i, j).clone();
        }
        acc
    });

    Ok(Curvature { metric: g.clone(), inverse, connection, riemann, ricci })
}

/// Covariant derivative of the curvature tensor in the left-invariant frame:
///
/// ```text
/// (nabla R)_m{}^l_{ijk} = omega^l_{mn} R^n_{ijk} - omega^n_{mi} R^l_{njk}
///                       - omega^n_{mj} R^l_{ink} - omega^n_{mk} R^l_{ijn}
/// ```
///
/// Indexed `[m][l][i][j][k]`.
pub fn cov_deriv_riemann<S: FieldScalar>(cur: &Curvature<S>) -> Tensor5<S> {
    let n = cur.metric.n();
    let omega = &cur.connection;
    let r = &cur.riemann;
    let mut out = Tensor5::zeros(n);
    for m in 0..n {
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut acc = S::zero();
                        for x in 0..n {
                            acc = acc + omega.get(l, m, x).clone() * r.get(x, i, j, k).clone()
                                - omega.get(x, m, i).clone() * r.get(l, x, j, k).clone()
                                - omega.get(x, m, j).clone() * r.get(l, i, x, k).clone()
                                - omega.get(x, m, k).clone() * r.get(l, i, j, x).clone();
                        }
                        out.set(m, l, i, j, k, acc);
                    }
                }
            }
        }
    }
    out
}

/// Pullback of a symmetric bilinear form along `m`: `m^T t m`.
pub fn pullback_symmetric<S: Coeff>(t: &SqMatrix<S>, m: &SqMatrix<S>) -> SqMatrix<S> {
    m.congruence(t)
}

/// Pullback of a (1,3)-tensor along an invertible `m`: the three lower slots
/// contract with `m`, the upper slot with `m^{-1}`.
pub fn pullback_curvature<S: FieldScalar>(
    r: &Tensor4<S>,
    m: &SqMatrix<S>,
) -> Result<Tensor4<S>, CurvatureError> {
    let n = r.n();
    assert_eq!(m.n(), n);
    let minv = m.inverse().ok_or(CurvatureError::SingularMatrix)?;
    let out = Tensor4::from_fn(n, |l, i, j, k| {
        let mut acc = S::zero();
        for lp in 0..n {
            for ip in 0..n {
                for jp in 0..n {
                    for kp in 0..n {
                        let term = minv.get(l, lp).clone()
                            * r.get(lp, ip, jp, kp).clone()
                            * m.get(ip, i).clone()
                            * m.get(jp, j).clone()
                            * m.get(kp, k).clone();
                        acc = acc + term;
                    }
                }
            }
        }
        acc
    });
    Ok(out)
}

/// `Ric == lambda g`, exactly.
pub fn is_einstein<S: FieldScalar>(cur: &Curvature<S>, lambda: &S) -> bool {
    let n = cur.metric.n();
    (0..n).all(|i| {
        (0..n).all(|j| {
            cur.ricci.get(i, j).clone() == cur.metric.get(i, j).clone() * lambda.clone()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QSqrt3;

    fn rq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn eighth_killing() -> SqMatrix<Rational> {
        SqMatrix::from_fn(6, |i, j| {
            if i != j {
                Rational::zero()
            } else if i % 3 == 0 {
                rq(-1, 1)
            } else {
                rq(1, 1)
            }
        })
    }

    #[test]
    fn abelian_is_flat() {
        let alg = LieAlgebra::abelian(4);
        let g = SqMatrix::from_fn(4, |i, j| if i == j { rq((i + 1) as i64, 1) } else { rq(0, 1) });
        let cur = curvature(&alg, &g).unwrap();
        assert!(cur.connection.is_zero_tensor());
        assert!(cur.riemann.is_zero_tensor());
        assert!(cur.ricci.is_zero_matrix());
    }

    #[test]
    fn bi_invariant_connection_is_half_bracket() {
        let alg = LieAlgebra::sl2_sl2();
        let g = eighth_killing();
        let cur = curvature(&alg, &g).unwrap();
        let half = rq(1, 2);
        for k in 0..6 {
            for i in 0..6 {
                for j in 0..6 {
                    assert_eq!(cur.connection.get(k, i, j), &(alg.c(k, i, j) * &half));
                }
            }
        }
    }

    #[test]
    fn killing_form_metric_is_einstein() {
        let alg = LieAlgebra::sl2_sl2();
        let g = eighth_killing();
        let cur = curvature(&alg, &g).unwrap();
        // (1/8)B is its own inverse
        assert_eq!(cur.inverse, g);
        // Ric = -2 g
        assert!(is_einstein(&cur, &rq(-2, 1)));
        assert!(!is_einstein(&cur, &rq(-3, 1)));
        // nonzero curvature
        assert!(!cur.riemann.is_zero_tensor());
    }

    #[test]
    fn bianchi_and_symmetry_at_samples() {
        let alg = LieAlgebra::sl2_sl2();
        // a nondegenerate non-Einstein sample metric
        let g = SqMatrix::from_fn(6, |i, j| {
            if i == j {
                rq([3, 1, 2, -1, 1, 5][i], 1)
            } else if (i, j) == (0, 3) || (j, i) == (0, 3) {
                rq(1, 2)
            } else {
                rq(0, 1)
            }
        });
        let cur = curvature(&alg, &g).unwrap();
        let n = 6;
        // first Bianchi identity
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let s = cur.riemann.get(l, i, j, k).clone()
                            + cur.riemann.get(l, j, k, i).clone()
                            + cur.riemann.get(l, k, i, j).clone();
                        assert!(s.is_zero());
                    }
                }
            }
        }
        // antisymmetry in the first two lower slots
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let s = cur.riemann.get(l, i, j, k).clone()
                            + cur.riemann.get(l, j, i, k).clone();
                        assert!(s.is_zero());
                    }
                }
            }
        }
        // Ricci symmetry
        assert!(cur.ricci.is_symmetric());
        // metric compatibility: g_{lk} omega^l_{ij} + g_{jl} omega^l_{ik} = 0
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = Rational::zero();
                    for l in 0..n {
                        acc += g.get(l, k) * cur.connection.get(l, i, j)
                            + g.get(j, l) * cur.connection.get(l, i, k);
                    }
                    assert!(acc.is_zero());
                }
            }
        }
    }

    #[test]
    fn scaling_leaves_connection_and_ricci_unchanged() {
        let alg = LieAlgebra::sl2_sl2();
        let g = eighth_killing();
        let cur = curvature(&alg, &g).unwrap();
        for c in [rq(2, 1), rq(1, 3)] {
            let scaled = g.scale(&c);
            let cur2 = curvature(&alg, &scaled).unwrap();
            assert_eq!(cur.connection, cur2.connection);
            assert_eq!(cur.ricci, cur2.ricci);
            // hence the Einstein constant scales as lambda / c
            assert!(is_einstein(&cur2, &(rq(-2, 1) / c)));
        }
    }

    #[test]
    fn killing_metric_is_locally_symmetric() {
        let alg = LieAlgebra::sl2_sl2();
        let cur = curvature(&alg, &eighth_killing()).unwrap();
        let nabla = cov_deriv_riemann(&cur);
        assert!(nabla.is_zero_tensor());
    }

    #[test]
    fn pullback_conventions() {
        let alg = LieAlgebra::sl2_sl2();
        let g = eighth_killing();
        let cur = curvature(&alg, &g).unwrap();
        let id = SqMatrix::<Rational>::identity(6);
        assert_eq!(pullback_symmetric(&g, &id), g);
        assert_eq!(pullback_curvature(&cur.riemann, &id).unwrap(), cur.riemann);
        // scalar matrix c*I scales R by c^2
        let c = rq(3, 1);
        let m = id.scale(&c);
        let scaled = pullback_curvature(&cur.riemann, &m).unwrap();
        let c2 = &c * &c;
        let expect = Tensor4::from_fn(6, |l, i, j, k| cur.riemann.get(l, i, j, k) * &c2);
        assert_eq!(scaled, expect);
        // singular matrix is an error
        let z = SqMatrix::<Rational>::zeros(6);
        assert_eq!(
            pullback_curvature(&cur.riemann, &z).unwrap_err(),
            CurvatureError::SingularMatrix
        );
    }

    #[test]
    fn quad_scalars_work_end_to_end() {
        // scale (1/8)B by 1/sqrt(3): lambda scales by sqrt(3)
        let alg = LieAlgebra::sl2_sl2();
        let s = QSqrt3::new(Rational::zero(), rq(1, 3)); // 1/sqrt(3) = (1/3) sqrt(3)
        let g = eighth_killing().map(|q| QSqrt3::from_rational(q.clone())).scale(&s);
        let cur = curvature(&alg, &g).unwrap();
        let lambda = QSqrt3::from_int(-2) / s;
        assert!(is_einstein(&cur, &lambda));
    }
}
