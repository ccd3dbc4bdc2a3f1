//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.

use ndarray::Array2;

use crate::error::{validation, Error, Result};
use crate::tolerances::TOLERANCES;
use crate::C64;

/// Largest dimension accepted by the eigensolver.
pub const MAX_EIGEN_DIMENSION: usize = 4096;

const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm, relative to the full norm, that ends the sweeps.
const CONVERGENCE: f64 = 1e-13;

/// Relative off-diagonal norm below which a stalled iteration is accepted.
const STALL: f64 = 1e-11;

/// Eigenvalues in ascending order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    /// Eigenvalues sorted ascending.
    pub values: Vec<f64>,
    /// Column `i` is the normalized eigenvector for `values[i]`.
    pub vectors: Array2<C64>,
}

/// Largest entrywise deviation of a matrix from its conjugate transpose.
pub fn hermiticity_deviation(matrix: &Array2<C64>) -> f64 {
    let n = matrix.nrows();
    let mut worst: f64 = 0.0;
    for r in 0..n {
        for c in r..n {
            worst = worst.max((matrix[[r, c]] - matrix[[c, r]].conj()).norm());
        }
    }
    worst
}

/// Diagonalizes a Hermitian matrix, returning eigenvalues and eigenvectors.
pub fn hermitian_eigensystem(matrix: &Array2<C64>) -> Result<Eigensystem> {
    let (values, vectors) = jacobi(matrix, true)?;
    let vectors = vectors.expect("vectors requested");
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let n = values.len();
    let sorted_vectors = Array2::from_shape_fn((n, n), |(r, c)| vectors[r * n + order[c]]);
    Ok(Eigensystem {
        values: order.iter().map(|&i| values[i]).collect(),
        vectors: sorted_vectors,
    })
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(matrix: &Array2<C64>) -> Result<Vec<f64>> {
    let (mut values, _) = jacobi(matrix, false)?;
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Runs cyclic Jacobi sweeps on a row-major copy of `matrix`.
///
/// Each rotation first removes the phase of the pivot `a_pq` with a diagonal
/// unitary and then applies the real symmetric Jacobi rotation, so the
/// combined two-by-two block is
/// `[[c, s], [-s e^{-iφ}, c e^{-iφ}]]` acting on columns `p` and `q`.
fn jacobi(matrix: &Array2<C64>, want_vectors: bool) -> Result<(Vec<f64>, Option<Vec<C64>>)> {
    let (n, cols) = matrix.dim();
    if n != cols {
        return Err(Error::Argument(format!("matrix is {n}x{cols}, not square")));
    }
    if n > MAX_EIGEN_DIMENSION {
        return Err(Error::Capacity(format!(
            "eigensolver supports dimension up to {MAX_EIGEN_DIMENSION}, got {n}"
        )));
    }
    let deviation = hermiticity_deviation(matrix);
    if deviation > TOLERANCES.hermiticity {
        return Err(validation(format!(
            "matrix is not Hermitian: max |A - A†| = {deviation:e}"
        )));
    }
    let mut a: Vec<C64> = matrix.iter().copied().collect();
    for i in 0..n {
        a[i * n + i] = C64::new(a[i * n + i].re, 0.0);
    }
    let mut v = want_vectors.then(|| {
        let mut v = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            v[i * n + i] = C64::new(1.0, 0.0);
        }
        v
    });

    let scale = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    let target = (CONVERGENCE * scale).powi(2);
    let stalled = (STALL * scale).powi(2);
    let mut previous = f64::INFINITY;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|r| (0..n).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| a[r * n + c].norm_sqr())
            .sum();
        // Rounding noise can keep large matrices just above the target; a
        // sweep that no longer halves an already tiny residual ends as well.
        if off <= target || (off <= stalled && off > 0.25 * previous) {
            let values = (0..n).map(|i| a[i * n + i].re).collect();
            return Ok((values, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_deref_mut(), n, p, q, scale);
            }
        }
        previous = off;
    }
    Err(Error::Numeric(format!(
        "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
    )))
}

fn rotate(a: &mut [C64], v: Option<&mut [C64]>, n: usize, p: usize, q: usize, scale: f64) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r <= f64::EPSILON * 1e-3 * scale {
        return;
    }
    let phase = apq / r; // e^{iφ}
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let conj_phase = phase.conj();
    // Block entries of the unitary acting on columns p and q.
    let upp = C64::new(c, 0.0);
    let upq = C64::new(s, 0.0);
    let uqp = -conj_phase * s;
    let uqq = conj_phase * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * upp + akq * uqp;
        a[k * n + q] = akp * upq + akq * uqq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = upp.conj() * apk + uqp.conj() * aqk;
        a[q * n + k] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a[p * n + q] = C64::new(0.0, 0.0);
    a[q * n + p] = C64::new(0.0, 0.0);
    a[p * n + p] = C64::new(a[p * n + p].re, 0.0);
    a[q * n + q] = C64::new(a[q * n + q].re, 0.0);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = vkp * upp + vkq * uqp;
            v[k * n + q] = vkp * upq + vkq * uqq;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> Array2<C64> {
        let mut m = Array2::from_elem((n, n), c(0.0, 0.0));
        for r in 0..n {
            m[[r, r]] = c(rng.gen_range(-1.0..1.0), 0.0);
            for col in r + 1..n {
                let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[[r, col]] = z;
                m[[col, r]] = z.conj();
            }
        }
        m
    }

    #[test]
    fn diagonal_matrix_gives_sorted_diagonal() {
        let m = Array2::from_diag(&ndarray::arr1(&[c(3.0, 0.0), c(-1.0, 0.0), c(2.0, 0.0)]));
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![-1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_x_spectrum() {
        let m = ndarray::arr2(&[[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        let values = hermitian_eigenvalues(&m).unwrap();
        assert!((values[0] + 1.0).abs() < 1e-15 && (values[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_by_two_matches_closed_form_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_hermitian(2, &mut rng);
            let (a, d, b) = (m[[0, 0]].re, m[[1, 1]].re, m[[0, 1]]);
            let mean = 0.5 * (a + d);
            let radius = (0.25 * (a - d).powi(2) + b.norm_sqr()).sqrt();
            let values = hermitian_eigenvalues(&m).unwrap();
            assert!((values[0] - (mean - radius)).abs() < 1e-12);
            assert!((values[1] - (mean + radius)).abs() < 1e-12);
        }
    }

    #[test]
    fn residuals_are_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1, 3, 8, 17] {
            let m = random_hermitian(n, &mut rng);
            let sys = hermitian_eigensystem(&m).unwrap();
            for (i, &lambda) in sys.values.iter().enumerate() {
                let v = sys.vectors.column(i);
                let av = m.dot(&v);
                let residual = av
                    .iter()
                    .zip(v.iter())
                    .map(|(x, y)| (x - y * lambda).norm())
                    .fold(0.0, f64::max);
                assert!(residual < 1e-9, "n={n} residual {residual}");
            }
            assert!(sys.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ndarray::arr2(&[[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]);
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::Validation(_))));
    }
}
