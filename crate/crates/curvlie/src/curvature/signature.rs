//! Exact signature of a symmetric bilinear form by congruence
//! diagonalization (Sylvester's law of inertia).

use num_traits::Zero;

use crate::exact::{Quad, Sign};
use crate::matrix::SqMatrix;

use super::CurvatureError;

/// Counts of (negative, positive, zero) diagonal entries after symmetric
/// congruence elimination. Every pivot decision uses the exact sign in
/// Q(sqrt(D)).
pub fn signature_index<const D: u64>(
    g: &SqMatrix<Quad<D>>,
) -> Result<(usize, usize, usize), CurvatureError> {
    if !g.is_symmetric() {
        return Err(CurvatureError::NotSymmetric);
    }
    let n = g.n();
    let mut a = g.clone();
    let mut negatives = 0;
    let mut positives = 0;
    let mut zeros = 0;

    // symmetric row+column operations preserve the congruence class
    let add_row_col = |a: &mut SqMatrix<Quad<D>>, dst: usize, src: usize, factor: &Quad<D>| {
        for j in 0..n {
            let v = a.get(dst, j).clone() + a.get(src, j).clone() * factor.clone();
            a.set(dst, j, v);
        }
        for i in 0..n {
            let v = a.get(i, dst).clone() + a.get(i, src).clone() * factor.clone();
            a.set(i, dst, v);
        }
    };

    for k in 0..n {
        if a.get(k, k).is_zero() {
            // bring a nonzero entry onto the diagonal if the row has one
            if let Some(j) = ((k + 1)..n).find(|&j| !a.get(k, j).is_zero()) {
                // (row_k += row_j, col_k += col_j) makes the corner
                // 2 a_kj + a_jj; if that vanishes, subtracting works instead
                let plus = a.get(k, j).mul_int(2) + a.get(j, j).clone();
                let factor = if plus.is_zero() {
                    Quad::from_int(-1)
                } else {
                    Quad::from_int(1)
                };
                add_row_col(&mut a, k, j, &factor);
            }
        }
        let pivot = a.get(k, k).clone();
        match pivot.signum() {
            Sign::Zero => {
                zeros += 1;
                continue;
            }
            Sign::Positive => positives += 1,
            Sign::Negative => negatives += 1,
        }
        for r in (k + 1)..n {
            if a.get(r, k).is_zero() {
                continue;
            }
            let factor = -(a.get(r, k).clone() / pivot.clone());
            add_row_col(&mut a, r, k, &factor);
        }
    }
    Ok((negatives, positives, zeros))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{QSqrt3, Rational};

    fn from_ints(rows: &[&[i64]]) -> SqMatrix<QSqrt3> {
        SqMatrix::from_fn(rows.len(), |i, j| QSqrt3::from_int(rows[i][j]))
    }

    #[test]
    fn diagonal_forms() {
        let g = from_ints(&[
            &[-1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]);
        assert_eq!(signature_index(&g).unwrap(), (2, 4, 0));
        let id = SqMatrix::<QSqrt3>::identity(5);
        assert_eq!(signature_index(&id).unwrap(), (0, 5, 0));
        let z = SqMatrix::<QSqrt3>::zeros(3);
        assert_eq!(signature_index(&z).unwrap(), (0, 0, 3));
    }

    #[test]
    fn hyperbolic_plane_needs_the_zero_diagonal_path() {
        // [[0,1],[1,0]] has signature (1,1)
        let g = from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature_index(&g).unwrap(), (1, 1, 0));
        // [[0,1],[1,-2]]: the 2a+d corner vanishes, the subtract path runs
        let g = from_ints(&[&[0, 1], &[1, -2]]);
        assert_eq!(signature_index(&g).unwrap(), (1, 1, 0));
    }

    #[test]
    fn irrational_entries_get_exact_signs() {
        // diag(sqrt(3) - 2, sqrt(3) - 1): one negative, one positive
        let s = QSqrt3::radical();
        let mut g = SqMatrix::<QSqrt3>::zeros(2);
        g.set(0, 0, s.clone() - QSqrt3::from_int(2));
        g.set(1, 1, s - QSqrt3::from_int(1));
        assert_eq!(signature_index(&g).unwrap(), (1, 1, 0));
    }

    #[test]
    fn congruence_invariance() {
        // signature is invariant under M^T g M for invertible M
        let g = from_ints(&[&[2, 1, 0], &[1, -1, 3], &[0, 3, 1]]);
        let m = from_ints(&[&[1, 2, 0], &[0, 1, 5], &[-1, 0, 2]]);
        assert!(!m.det().is_zero());
        let h = m.congruence(&g);
        assert_eq!(signature_index(&g).unwrap(), signature_index(&h).unwrap());
    }

    #[test]
    fn rejects_asymmetric_input() {
        let mut g = SqMatrix::<QSqrt3>::identity(2);
        g.set(0, 1, QSqrt3::from_rational(Rational::new(1.into(), 2.into())));
        assert_eq!(signature_index(&g).unwrap_err(), CurvatureError::NotSymmetric);
    }
}
