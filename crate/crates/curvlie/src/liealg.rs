//! Lie algebras presented by structure constants.
//!
//! `sl(2,R)` comes with the basis
//!
//! ```text
//! E1 = [0 -1; 1 0],  E2 = [0 1; 1 0],  E3 = [1 0; 0 -1],
//! ```
//!
//! so `[E1,E2] = -2 E3`, `[E1,E3] = 2 E2`, `[E2,E3] = 2 E1`, and the
//! distinguished nilpotent element is `N = (E2 - E1)/2`. The direct sum
//! `sl(2,R) + sl(2,R)` uses the basis `F1..F6` (first factor, then second).

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{format_rational, parse_rational, rational_sqrt, QSqrt3, Rational};
use crate::matrix::SqMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("structure constants violate antisymmetry at ({0}, {1}, {2})")]
    Antisymmetry(usize, usize, usize),
    #[error("structure constants violate the Jacobi identity at ({0}, {1}, {2}, {3})")]
    Jacobi(usize, usize, usize, usize),
    #[error("element has {got} coordinates, algebra has dimension {want}")]
    Dimension { got: usize, want: usize },
    #[error("bad structure-constant data: {0}")]
    BadData(String),
}

/// A finite-dimensional Lie algebra over Q given by structure constants
/// `c^k_{ij}` with `[F_i, F_j] = c^k_{ij} F_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    /// Flattened `c[k][i][j]`.
    c: Vec<Rational>,
}

/// Coordinates of an element in the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub coords: Vec<Rational>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Rational>) -> Self {
        AlgebraElement { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        AlgebraElement {
            coords: coords.iter().map(|&n| Rational::from_integer(n.into())).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement { coords: vec![Rational::zero(); dim] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        AlgebraElement { coords: self.coords.iter().map(|c| c * q).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        AlgebraElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl LieAlgebra {
    /// Build from a full structure-constant array and validate antisymmetry
    /// and the Jacobi identity.
    pub fn new(names: Vec<String>, c: Vec<Rational>) -> Result<Self, LieError> {
        let dim = names.len();
        if c.len() != dim * dim * dim {
            return Err(LieError::BadData(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                c.len()
            )));
        }
        let alg = LieAlgebra { dim, names, c };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), LieError> {
        let n = self.dim;
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if !(self.c(k, i, j) + self.c(k, j, i)).is_zero() {
                        return Err(LieError::Antisymmetry(k, i, j));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut acc = Rational::zero();
                        for m in 0..n {
                            acc += self.c(m, i, j) * self.c(l, m, k)
                                + self.c(m, j, k) * self.c(l, m, i)
                                + self.c(m, k, i) * self.c(l, m, j);
                        }
                        if !acc.is_zero() {
                            return Err(LieError::Jacobi(i, j, k, l));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn c(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.c[(k * self.dim + i) * self.dim + j]
    }

    /// `sl(2,R)` in the `E1, E2, E3` basis.
    pub fn sl2() -> Self {
        let names = vec!["E1".into(), "E2".into(), "E3".into()];
        let mut c = vec![Rational::zero(); 27];
        let mut set = |k: usize, i: usize, j: usize, v: i64| {
            c[(k * 3 + i) * 3 + j] = Rational::from_integer(v.into());
            c[(k * 3 + j) * 3 + i] = Rational::from_integer((-v).into());
        };
        // [E1,E2] = -2 E3, [E1,E3] = 2 E2, [E2,E3] = 2 E1
        set(2, 0, 1, -2);
        set(1, 0, 2, 2);
        set(0, 1, 2, 2);
        LieAlgebra { dim: 3, names, c }
    }

    /// The abelian algebra of a given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            names: (1..=dim).map(|i| format!("A{i}")).collect(),
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Direct sum; brackets across factors vanish. Names are concatenated,
    /// with a `'` appended to second-factor names that would collide.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n1 = self.dim;
        let n = n1 + other.dim;
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut c = vec![Rational::zero(); n * n * n];
        for k in 0..n1 {
            for i in 0..n1 {
                for j in 0..n1 {
                    c[(k * n + i) * n + j] = self.c(k, i, j).clone();
                }
            }
        }
        for k in 0..other.dim {
            for i in 0..other.dim {
                for j in 0..other.dim {
                    c[((k + n1) * n + (i + n1)) * n + (j + n1)] = other.c(k, i, j).clone();
                }
            }
        }
        LieAlgebra { dim: n, names, c }
    }

    /// `sl(2,R) + sl(2,R)` in the basis `F1 = (E1,0), ..., F6 = (0,E3)`.
    pub fn sl2_sl2() -> Self {
        let mut alg = Self::sl2().direct_sum(&Self::sl2());
        alg.names = (1..=6).map(|i| format!("F{i}")).collect();
        alg
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        assert_eq!(x.coords.len(), self.dim);
        assert_eq!(y.coords.len(), self.dim);
        let mut out = AlgebraElement::zero(self.dim);
        for k in 0..self.dim {
            let mut acc = Rational::zero();
            for i in 0..self.dim {
                if x.coords[i].is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    if y.coords[j].is_zero() {
                        continue;
                    }
                    acc += &x.coords[i] * &y.coords[j] * self.c(k, i, j);
                }
            }
            out.coords[k] = acc;
        }
        out
    }

    /// Matrix of `ad_X` in the basis: column `j` holds `[X, F_j]`.
    pub fn ad_matrix(&self, x: &AlgebraElement) -> SqMatrix<Rational> {
        assert_eq!(x.coords.len(), self.dim);
        SqMatrix::from_fn(self.dim, |k, j| {
            let mut acc = Rational::zero();
            for i in 0..self.dim {
                acc += &x.coords[i] * self.c(k, i, j);
            }
            acc
        })
    }

    /// Killing form `B_ij = tr(ad_i ad_j)`. On `sl2()` this equals the
    /// matrix-trace normalization `B(X,Y) = 4 tr(XY)`, giving
    /// `8 diag(-1, 1, 1)`; on direct sums it is block diagonal.
    pub fn killing_form(&self) -> SqMatrix<Rational> {
        SqMatrix::from_fn(self.dim, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.dim {
                for m in 0..self.dim {
                    acc += self.c(k, i, m) * self.c(m, j, k);
                }
            }
            acc
        })
    }
}

/// `E1` of `sl2()`.
pub fn e1() -> AlgebraElement {
    AlgebraElement::from_ints(&[1, 0, 0])
}

/// `E2` of `sl2()`.
pub fn e2() -> AlgebraElement {
    AlgebraElement::from_ints(&[0, 1, 0])
}

/// `E3` of `sl2()`.
pub fn e3() -> AlgebraElement {
    AlgebraElement::from_ints(&[0, 0, 1])
}

/// `N = (E2 - E1)/2`, the nilpotent direction.
pub fn nilpotent_n() -> AlgebraElement {
    AlgebraElement::new(vec![
        Rational::new((-1).into(), 2.into()),
        Rational::new(1.into(), 2.into()),
        Rational::zero(),
    ])
}

/// The element of `sl2 + sl2` with the given factor components.
pub fn pair_element(first: &AlgebraElement, second: &AlgebraElement) -> AlgebraElement {
    let mut coords = first.coords.clone();
    coords.extend(second.coords.iter().cloned());
    AlgebraElement::new(coords)
}

/// The 2x2 trace-free matrix of an `sl2()` element.
pub fn sl2_matrix(x: &AlgebraElement) -> SqMatrix<Rational> {
    let (a, b, c) = (&x.coords[0], &x.coords[1], &x.coords[2]);
    SqMatrix::from_rows(vec![
        vec![c.clone(), b - a],
        vec![a + b, -c.clone()],
    ])
}

/// Coordinates of a trace-free 2x2 matrix in the `E1, E2, E3` basis.
pub fn sl2_from_matrix(m: &SqMatrix<Rational>) -> AlgebraElement {
    assert_eq!(m.n(), 2);
    let half = Rational::new(1.into(), 2.into());
    let a = (m.get(1, 0) - m.get(0, 1)) * &half;
    let b = (m.get(1, 0) + m.get(0, 1)) * &half;
    let c = m.get(0, 0).clone();
    AlgebraElement::new(vec![a, b, c])
}

/// Orbit type of a nonzero `sl2()` element under inner automorphisms,
/// decided by the eigenvalues of its 2x2 matrix: purely imaginary pairs are
/// elliptic, real pairs hyperbolic, double zero nilpotent. `r` is reported
/// exactly when `r^2` is a rational square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalForm {
    Zero,
    /// Conjugate to `r E1`, eigenvalues `+- i r`, `r > 0`.
    Elliptic { r_squared: Rational, r: Option<Rational> },
    /// Conjugate to `r E3`, eigenvalues `+- r`, `r > 0`.
    Hyperbolic { r_squared: Rational, r: Option<Rational> },
    /// Conjugate to `N`.
    Nilpotent,
}

pub fn sl2_canonical_form(x: &AlgebraElement) -> CanonicalForm {
    assert_eq!(x.coords.len(), 3);
    if x.is_zero() {
        return CanonicalForm::Zero;
    }
    // char. polynomial of the 2x2 matrix is t^2 - (b^2 + c^2 - a^2)
    let (a, b, c) = (&x.coords[0], &x.coords[1], &x.coords[2]);
    let disc = b * b + c * c - a * a;
    if disc.is_zero() {
        return CanonicalForm::Nilpotent;
    }
    if disc.is_positive() {
        CanonicalForm::Hyperbolic { r: rational_sqrt(&disc), r_squared: disc }
    } else {
        let r2 = -disc;
        CanonicalForm::Elliptic { r: rational_sqrt(&r2), r_squared: r2 }
    }
}

/// A bare antisymmetric structure-constant array, not validated as a Lie
/// algebra. Produced by constructions whose output need not satisfy the
/// Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub dim: usize,
    /// Flattened `c[k][i][j]`.
    pub c: Vec<Rational>,
}

impl StructureConstants {
    pub fn c(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.c[(k * self.dim + i) * self.dim + j]
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|k| {
            (0..n).all(|i| (0..n).all(|j| (self.c(k, i, j) + self.c(k, j, i)).is_zero()))
        })
    }

    /// Left-hand side of the Jacobi identity, summed over the bracket index.
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        let mut acc = Rational::zero();
        for m in 0..self.dim {
            acc += self.c(m, i, j) * self.c(l, m, k)
                + self.c(m, j, k) * self.c(l, m, i)
                + self.c(m, k, i) * self.c(l, m, j);
        }
        acc
    }

    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| (0..n).all(|l| self.jacobi_defect(i, j, k, l).is_zero()))
            })
        })
    }
}

/// Structure constants induced on the sum of two copies of a 3-dimensional
/// algebra by the diagonal-quotient presentation (a Killing-orthonormal
/// basis taken per factor). Fixing the bracket-component index `k`, the
/// 6x6 array in the lower indices has the block pattern
///
/// ```text
/// k <= 3:  [ (1/3) c   -(1/3) c ]      k >= 4:  [ -(2/3) c  -(1/3) c ]
///          [ (1/3) c   -(2/3) c ]               [  (1/3) c   (1/3) c ]
/// ```
///
/// where the lower-left blocks carry the transposed `c` so the whole array
/// is antisymmetric in the lower index pair. The output is returned as a
/// bare array: it is antisymmetric by construction but does not satisfy the
/// Jacobi identity for nonabelian input (the diagonal complement is not
/// closed under brackets), so it does not define a `LieAlgebra`.
pub fn induced_diagonal_structure_constants(base: &LieAlgebra) -> StructureConstants {
    assert_eq!(base.dim(), 3, "diagonal embedding defined for 3-dimensional factors");
    let third = Rational::new(1.into(), 3.into());
    let two_thirds = Rational::new(2.into(), 3.into());
    let n = 6usize;
    let mut c = vec![Rational::zero(); n * n * n];
    {
        let mut put = |k: usize, i: usize, j: usize, v: Rational| {
            c[(k * n + i) * n + j] = v;
        };
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    let v = base.c(k, i, j);
                    put(k, i, j, v * &third);
                    put(k, i, j + 3, -(v * &third));
                    put(k, i + 3, j, base.c(k, j, i) * &third);
                    put(k, i + 3, j + 3, -(v * &two_thirds));
                    put(k + 3, i, j, -(v * &two_thirds));
                    put(k + 3, i, j + 3, -(v * &third));
                    put(k + 3, i + 3, j, base.c(k, j, i) * &third);
                    put(k + 3, i + 3, j + 3, v * &third);
                }
            }
        }
    }
    StructureConstants { dim: n, c }
}

/// The pullback of the product metric `B x B x B` to the diagonal quotient:
/// `[[2B, B], [B, 2B]]`.
pub fn diagonal_pullback_metric(b: &SqMatrix<Rational>) -> SqMatrix<Rational> {
    let n = b.n();
    SqMatrix::from_fn(2 * n, |i, j| {
        let (bi, bj) = (i % n, j % n);
        let v = b.get(bi, bj);
        if i / n == j / n {
            v * &Rational::from_integer(2.into())
        } else {
            v.clone()
        }
    })
}

/// `M^T eta M = eta` with `eta = diag(-1, 1, 1)`: membership in `O(2,1)` in
/// the Killing-orthonormal basis of `sl2()`.
pub fn preserves_eta(m: &SqMatrix<QSqrt3>) -> bool {
    assert_eq!(m.n(), 3);
    let eta = eta3();
    m.congruence(&eta) == eta
}

/// `O(2,1)` membership plus `det = 1`.
pub fn in_so21(m: &SqMatrix<QSqrt3>) -> bool {
    preserves_eta(m) && m.det() == QSqrt3::one()
}

/// `eta = diag(-1, 1, 1)` over Q(sqrt 3).
pub fn eta3() -> SqMatrix<QSqrt3> {
    let mut m = SqMatrix::identity(3);
    m.set(0, 0, -QSqrt3::one());
    m
}

/// An automorphism of `sl2 + sl2` presented as one matrix per factor (each
/// acting in the `E` basis and preserving the Killing form) plus an optional
/// factor swap. The swap is applied first.
#[derive(Debug, Clone)]
pub struct Automorphism {
    pub first: SqMatrix<QSqrt3>,
    pub second: SqMatrix<QSqrt3>,
    pub swap: bool,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism {
            first: SqMatrix::identity(3),
            second: SqMatrix::identity(3),
            swap: false,
        }
    }

    /// Each factor matrix must preserve `eta`; proper rotations when
    /// `require_special` is set.
    pub fn is_valid(&self, require_special: bool) -> bool {
        let ok = |m: &SqMatrix<QSqrt3>| {
            preserves_eta(m) && (!require_special || m.det() == QSqrt3::one())
        };
        ok(&self.first) && ok(&self.second)
    }

    /// The 6x6 matrix acting on coordinate vectors.
    pub fn matrix(&self) -> SqMatrix<QSqrt3> {
        let blk = SqMatrix::from_fn(6, |i, j| {
            if i < 3 && j < 3 {
                self.first.get(i, j).clone()
            } else if i >= 3 && j >= 3 {
                self.second.get(i - 3, j - 3).clone()
            } else {
                QSqrt3::zero()
            }
        });
        if self.swap {
            let p = SqMatrix::from_fn(6, |i, j| {
                if (i + 3) % 6 == j {
                    QSqrt3::one()
                } else {
                    QSqrt3::zero()
                }
            });
            blk.mul(&p)
        } else {
            blk
        }
    }

    /// Pullback of a symmetric bilinear form: `A^T g A`.
    pub fn pullback(&self, g: &SqMatrix<QSqrt3>) -> SqMatrix<QSqrt3> {
        self.matrix().congruence(g)
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    basis: Vec<String>,
    /// Nonzero `c^k_{ij}` with `i < j`, 1-based, value as `"p/q"`.
    c: Vec<(usize, usize, usize, String)>,
}

/// Serialize per the structure-constants schema: only nonzero entries with
/// `i < j`, 1-based indices.
pub fn algebra_to_json(alg: &LieAlgebra) -> serde_json::Value {
    let mut entries = Vec::new();
    for i in 0..alg.dim() {
        for j in (i + 1)..alg.dim() {
            for k in 0..alg.dim() {
                let v = alg.c(k, i, j);
                if !v.is_zero() {
                    entries.push((i + 1, j + 1, k + 1, format_rational(v)));
                }
            }
        }
    }
    serde_json::to_value(AlgebraJson {
        dim: alg.dim(),
        basis: alg.basis_names().to_vec(),
        c: entries,
    })
    .expect("serializable")
}

/// Load and validate an algebra from the JSON schema.
pub fn algebra_from_json(v: &serde_json::Value) -> Result<LieAlgebra, LieError> {
    let raw: AlgebraJson =
        serde_json::from_value(v.clone()).map_err(|e| LieError::BadData(e.to_string()))?;
    if raw.basis.len() != raw.dim {
        return Err(LieError::BadData(format!(
            "dim {} does not match {} basis names",
            raw.dim,
            raw.basis.len()
        )));
    }
    let n = raw.dim;
    let mut c = vec![Rational::zero(); n * n * n];
    for (i, j, k, val) in &raw.c {
        if *i == 0 || *j == 0 || *k == 0 || *i > n || *j > n || *k > n {
            return Err(LieError::BadData(format!("index out of range: ({i},{j},{k})")));
        }
        if i >= j {
            return Err(LieError::BadData(format!(
                "entries must have i < j, got ({i},{j},{k})"
            )));
        }
        let q = parse_rational(val).map_err(|e| LieError::BadData(e.to_string()))?;
        let (i, j, k) = (i - 1, j - 1, k - 1);
        c[(k * n + i) * n + j] = q.clone();
        c[(k * n + j) * n + i] = -q;
    }
    LieAlgebra::new(raw.basis, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sl2_brackets_match_the_relations() {
        let alg = LieAlgebra::sl2();
        // [E1, E2] = -2 E3
        assert_eq!(alg.bracket(&e1(), &e2()), AlgebraElement::from_ints(&[0, 0, -2]));
        // [E2, E3] = 2 E1
        assert_eq!(alg.bracket(&e2(), &e3()), AlgebraElement::from_ints(&[2, 0, 0]));
        // [E1, E3] = 2 E2
        assert_eq!(alg.bracket(&e1(), &e3()), AlgebraElement::from_ints(&[0, 2, 0]));
        // antisymmetry: [X, X] = 0
        let x = AlgebraElement::from_ints(&[3, -5, 7]);
        assert!(alg.bracket(&x, &x).is_zero());
    }

    #[test]
    fn ad_matrices_have_the_documented_form() {
        let alg = LieAlgebra::sl2();
        let ad_e1 = alg.ad_matrix(&e1());
        let expect = SqMatrix::from_rows(vec![
            vec![rq(0, 1), rq(0, 1), rq(0, 1)],
            vec![rq(0, 1), rq(0, 1), rq(2, 1)],
            vec![rq(0, 1), rq(-2, 1), rq(0, 1)],
        ]);
        assert_eq!(ad_e1, expect);
        let ad_n = alg.ad_matrix(&nilpotent_n());
        let expect = SqMatrix::from_rows(vec![
            vec![rq(0, 1), rq(0, 1), rq(1, 1)],
            vec![rq(0, 1), rq(0, 1), rq(-1, 1)],
            vec![rq(1, 1), rq(1, 1), rq(0, 1)],
        ]);
        assert_eq!(ad_n, expect);
        // ad of zero
        assert!(alg.ad_matrix(&AlgebraElement::zero(3)).is_zero_matrix());
    }

    #[test]
    fn killing_form_normalizations_agree_on_sl2() {
        let alg = LieAlgebra::sl2();
        let b = alg.killing_form();
        let mut expect = SqMatrix::zeros(3);
        expect.set(0, 0, rq(-8, 1));
        expect.set(1, 1, rq(8, 1));
        expect.set(2, 2, rq(8, 1));
        assert_eq!(b, expect);
        // the matrix-trace normalization 4 tr(E_i E_j) gives the same values
        let four = rq(4, 1);
        let via_trace = SqMatrix::from_fn(3, |i, j| {
            let mut x = AlgebraElement::zero(3);
            x.coords[i] = Rational::one();
            let mut y = AlgebraElement::zero(3);
            y.coords[j] = Rational::one();
            let prod = sl2_matrix(&x).mul(&sl2_matrix(&y));
            (prod.get(0, 0) + prod.get(1, 1)) * &four
        });
        assert_eq!(b, via_trace);
        // abelian algebras have vanishing Killing form
        assert!(LieAlgebra::abelian(4).killing_form().is_zero_matrix());
    }

    #[test]
    fn direct_sum_structure() {
        let alg = LieAlgebra::sl2_sl2();
        assert_eq!(alg.dim(), 6);
        alg.validate().unwrap();
        let f1 = AlgebraElement::from_ints(&[1, 0, 0, 0, 0, 0]);
        let f2 = AlgebraElement::from_ints(&[0, 1, 0, 0, 0, 0]);
        let f4 = AlgebraElement::from_ints(&[0, 0, 0, 1, 0, 0]);
        // cross-factor brackets vanish
        assert!(alg.bracket(&f1, &f4).is_zero());
        // first factor matches sl2: [F1, F2] = -2 F3
        assert_eq!(
            alg.bracket(&f1, &f2),
            AlgebraElement::from_ints(&[0, 0, -2, 0, 0, 0])
        );
        // Killing form is block diagonal 8 diag(-1,1,1, -1,1,1)
        let b = alg.killing_form();
        let expect = SqMatrix::from_fn(6, |i, j| {
            if i != j {
                Rational::zero()
            } else if i % 3 == 0 {
                rq(-8, 1)
            } else {
                rq(8, 1)
            }
        });
        assert_eq!(b, expect);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(sl2_canonical_form(&nilpotent_n()), CanonicalForm::Nilpotent);
        assert_eq!(sl2_canonical_form(&AlgebraElement::zero(3)), CanonicalForm::Zero);
        // 2 E1 is elliptic with r = 2
        assert_eq!(
            sl2_canonical_form(&e1().scale(&rq(2, 1))),
            CanonicalForm::Elliptic { r_squared: rq(4, 1), r: Some(rq(2, 1)) }
        );
        // E2 is hyperbolic with r = 1
        assert_eq!(
            sl2_canonical_form(&e2()),
            CanonicalForm::Hyperbolic { r_squared: rq(1, 1), r: Some(rq(1, 1)) }
        );
        // E1 + E2 is nilpotent (lightlike)
        assert_eq!(
            sl2_canonical_form(&e1().add(&e2())),
            CanonicalForm::Nilpotent
        );
    }

    #[test]
    fn canonical_form_is_conjugation_invariant() {
        // conjugate by a handful of invertible rational 2x2 matrices
        let samples = [
            (rq(1, 1), rq(2, 1), rq(0, 1), rq(1, 1)),
            (rq(3, 1), rq(1, 2), rq(-1, 1), rq(1, 1)),
            (rq(0, 1), rq(1, 1), rq(-1, 1), rq(5, 1)),
        ];
        let elements = [
            e1().scale(&rq(3, 2)),
            e2(),
            nilpotent_n(),
            AlgebraElement::new(vec![rq(1, 1), rq(2, 1), rq(2, 1)]),
        ];
        for (a, b, c, d) in &samples {
            let g = SqMatrix::from_rows(vec![
                vec![a.clone(), b.clone()],
                vec![c.clone(), d.clone()],
            ]);
            let ginv = g.inverse().expect("invertible sample");
            for x in &elements {
                let m = g.mul(&sl2_matrix(x)).mul(&ginv);
                let y = sl2_from_matrix(&m);
                assert_eq!(sl2_canonical_form(x), sl2_canonical_form(&y));
            }
        }
    }

    #[test]
    fn induced_diagonal_constants() {
        let base = LieAlgebra::sl2();
        let induced = induced_diagonal_structure_constants(&base);
        // spot-check a block entry: c-bar^1_{23} = (1/3) c^1_{23} = 2/3
        assert_eq!(induced.c(0, 1, 2), &rq(2, 3));
        // lower-right block for k <= 3 carries -(2/3)
        assert_eq!(induced.c(0, 4, 5), &rq(-4, 3));
        // upper-right block for k <= 3 carries -(1/3)
        assert_eq!(induced.c(0, 1, 5), &rq(-2, 3));
        assert!(induced.is_antisymmetric());
        // the diagonal complement is not closed under brackets, so the
        // projected constants are not a Lie bracket for nonabelian input
        assert!(!induced.satisfies_jacobi());
        // zero input gives zero output (trivially Jacobi)
        let z = induced_diagonal_structure_constants(&LieAlgebra::abelian(3));
        assert!(z.c.iter().all(|v| v.is_zero()));
        assert!(z.satisfies_jacobi());
    }

    #[test]
    fn diagonal_pullback_blocks() {
        let b = LieAlgebra::sl2().killing_form();
        let g = diagonal_pullback_metric(&b);
        assert_eq!(g.n(), 6);
        assert!(g.is_symmetric());
        // diagonal blocks 16 diag(-1,1,1), off-diagonal 8 diag(-1,1,1)
        assert_eq!(g.get(0, 0), &rq(-16, 1));
        assert_eq!(g.get(1, 1), &rq(16, 1));
        assert_eq!(g.get(0, 3), &rq(-8, 1));
        assert_eq!(g.get(4, 1), &rq(8, 1));
        assert_eq!(g.get(0, 1), &rq(0, 1));
        // zero input gives zero
        let z = diagonal_pullback_metric(&SqMatrix::zeros(3));
        assert!(z.is_zero_matrix());
    }

    #[test]
    fn killing_form_is_ad_invariant() {
        let alg = LieAlgebra::sl2();
        let b = alg.killing_form();
        let samples = [e1(), e2(), e3(), nilpotent_n()];
        for x in &samples {
            let ad = alg.ad_matrix(x).map(|q| q.clone());
            // B(ad_X Y, Z) + B(Y, ad_X Z) = 0 <=> ad^T B + B ad = 0
            let skew = ad.transpose().mul(&b).add(&b.mul(&ad));
            assert!(skew.is_zero_matrix());
        }
    }

    #[test]
    fn json_round_trip() {
        let alg = LieAlgebra::sl2_sl2();
        let v = algebra_to_json(&alg);
        let back = algebra_from_json(&v).unwrap();
        assert_eq!(alg, back);
        // malformed data errors cleanly
        let bad = serde_json::json!({"dim": 2, "basis": ["X"], "c": []});
        assert!(algebra_from_json(&bad).is_err());
        let bad = serde_json::json!({
            "dim": 2, "basis": ["X", "Y"], "c": [[2, 1, 1, "1"]]
        });
        assert!(algebra_from_json(&bad).is_err());
    }

    #[test]
    fn invalid_jacobi_rejected() {
        // antisymmetric but non-Jacobi constants: [X,Y] = Z, [X,Z] = X
        let names: Vec<String> = vec!["X".into(), "Y".into(), "Z".into()];
        let mut c = vec![Rational::zero(); 27];
        let mut set = |k: usize, i: usize, j: usize, v: i64| {
            c[(k * 3 + i) * 3 + j] = Rational::from_integer(v.into());
            c[(k * 3 + j) * 3 + i] = Rational::from_integer((-v).into());
        };
        set(2, 0, 1, 1);
        set(0, 0, 2, 1);
        assert!(matches!(
            LieAlgebra::new(names, c),
            Err(LieError::Jacobi(..))
        ));
    }
}
