use alloc::vec::Vec;


use super::{ComplexMatrix, C64};
use crate::error::{Error, Result};
use crate::tol::{MAX_JACOBI_SWEEPS, TOL};

/// Eigendecomposition `h = V diag(values) V†` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Real eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub vectors: ComplexMatrix,
}

fn off_diagonal_norm(a: &[C64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic complex Jacobi eigensolver.
///
/// Each rotation `G = [[c, s·e], [-s·ē, c]]` on the `(p, q)` plane, with
/// `e = h_pq / |h_pq|`, annihilates `h_pq` in `G† h G`. Sweeps continue until
/// the off-diagonal Frobenius norm drops below `TOL.jacobi_off_diag` (relative
/// to `‖h‖_F` once that exceeds one).
pub fn hermitian_eigh(h: &ComplexMatrix) -> Result<HermitianEigen> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch {
            op: "hermitian_eigh",
            expected: h.rows(),
            found: h.cols(),
        });
    }
    let deviation = h.hermitian_deviation();
    if deviation > TOL.hermitian_input {
        return Err(Error::NotHermitian { deviation });
    }

    let n = h.rows();
    let sym = h.hermitian_part();
    let mut a: Vec<C64> = sym.as_slice().to_vec();
    for i in 0..n {
        a[i * n + i].im = 0.0;
    }
    let mut v: Vec<C64> = ComplexMatrix::identity(n).as_slice().to_vec();
    let threshold = TOL.jacobi_off_diag * sym.frobenius_norm().max(1.0);

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if off_diagonal_norm(&a, n) < threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let z = a[p * n + q];
                let mag = z.norm();
                if mag == 0.0 {
                    continue;
                }
                let e = z / mag;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let se = e * s;
                let se_conj = se.conj();

                // a <- a G
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c - akq * se_conj;
                    a[k * n + q] = akp * se + akq * c;
                }
                // a <- G† a
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c - aqk * se;
                    a[q * n + k] = apk * se_conj + aqk * c;
                }
                a[p * n + q] = C64::new(0.0, 0.0);
                a[q * n + p] = C64::new(0.0, 0.0);
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;
                // v <- v G
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * c - vkq * se_conj;
                    v[k * n + q] = vkp * se + vkq * c;
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a, n) >= threshold {
        return Err(Error::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].re.total_cmp(&a[i * n + i].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, col| v[r * n + order[col]]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues of a Hermitian matrix, in descending order.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    hermitian_eigh(h).map(|e| e.values)
}

/// Hermitian positive-semidefinite square root via eigendecomposition.
///
/// Eigenvalues in `[-TOL.eigen_clamp, 0)` are treated as zero; anything more
/// negative is reported as [`Error::NegativeEigenvalue`].
pub fn psd_sqrt(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigh(rho)?;
    let n = rho.rows();
    let mut roots = Vec::with_capacity(n);
    for &lambda in &eig.values {
        if lambda < -TOL.eigen_clamp {
            return Err(Error::NegativeEigenvalue { value: lambda });
        }
        roots.push(lambda.max(0.0).sqrt());
    }
    let v = &eig.vectors;
    let s = ComplexMatrix::from_fn(n, n, |i, j| {
        (0..n)
            .filter(|&k| roots[k] != 0.0)
            .map(|k| v[(i, k)] * v[(j, k)].conj() * roots[k])
            .sum()
    });
    Ok(s.hermitian_part())
}
