//! Cyclic Jacobi eigendecomposition of dense symmetric matrices.

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-10;

/// Eigenvalues in ascending order and the matching unit eigenvectors.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[j]` belongs to `values[j]`.
    pub vectors: Vec<Vec<f64>>,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += a[p * n + q] * a[p * n + q];
            }
        }
    }
    sum.sqrt()
}

/// Full decomposition of the row-major symmetric `n × n` matrix `matrix`.
///
/// Rotations sweep the strict upper triangle row by row. The iteration stops
/// once the off-diagonal Frobenius norm falls below
/// `OFF_DIAGONAL_TOLERANCE * max(1, ‖A‖_F)`. Eigenvectors are sign-normalized
/// so that their first non-negligible component is positive, and ties between
/// equal eigenvalues keep the order in which they sit on the diagonal.
pub fn symmetric_eigen(matrix: &[f64], n: usize) -> Result<SymmetricEigen> {
    assert_eq!(matrix.len(), n * n, "matrix is not {n}x{n}");
    let mut a = matrix.to_vec();
    // rows of `vt` are the eigenvectors
    let mut vt = vec![0.0; n * n];
    for i in 0..n {
        vt[i * n + i] = 1.0;
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let tol = OFF_DIAGONAL_TOLERANCE * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                rotate(&mut a, &mut vt, n, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&i| {
            let mut v = vt[i * n..(i + 1) * n].to_vec();
            if let Some(&lead) = v.iter().find(|x| x.abs() > 1e-12) {
                if lead < 0.0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
            }
            v
        })
        .collect();
    Ok(SymmetricEigen { values, vectors })
}

/// Annihilate `a[p][q]` with a plane rotation and accumulate it into `vt`.
fn rotate(a: &mut [f64], vt: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta.is_infinite() { 0.0 } else { t };
    if t == 0.0 {
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        return;
    }
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[p * n + k];
        let akq = a[q * n + k];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[p * n + k] = new_p;
        a[k * n + p] = new_p;
        a[q * n + k] = new_q;
        a[k * n + q] = new_q;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    let (head, tail) = vt.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for (vp, vq) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let (x, y) = (*vp, *vq);
        *vp = c * x - s * y;
        *vq = s * x + c * y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rngdet::RngStream;

    fn residual_inf(m: &[f64], n: usize, lambda: f64, v: &[f64]) -> f64 {
        (0..n)
            .map(|i| {
                let mv: f64 = (0..n).map(|j| m[i * n + j] * v[j]).sum();
                (mv - lambda * v[i]).abs()
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn one_by_one() {
        let e = symmetric_eigen(&[0.0], 1).unwrap();
        assert_eq!(e.values, vec![0.0]);
        assert_eq!(e.vectors, vec![vec![1.0]]);
    }

    #[test]
    fn diagonal_is_sorted() {
        let m = [2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0];
        let e = symmetric_eigen(&m, 3).unwrap();
        assert_eq!(e.values, vec![0.0, 1.0, 2.0]);
        assert_eq!(e.vectors[0], vec![0.0, 1.0, 0.0]);
        assert_eq!(e.vectors[1], vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn two_by_two_by_hand() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3 with vectors (1,-1)/√2 and (1,1)/√2
        let e = symmetric_eigen(&[2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
        let h = 0.5f64.sqrt();
        assert!((e.vectors[0][0] - h).abs() < 1e-14 && (e.vectors[0][1] + h).abs() < 1e-14);
    }

    #[test]
    fn random_symmetric_residuals() {
        let mut rng = RngStream::new(20);
        let n = 20;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = rng.next_f64() * 2.0 - 1.0;
                m[i * n + j] = x;
                m[j * n + i] = x;
            }
        }
        let e = symmetric_eigen(&m, n).unwrap();
        for (lambda, v) in e.values.iter().zip(&e.vectors) {
            assert!(residual_inf(&m, n, *lambda, v) <= 1e-7 * n as f64);
        }
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }
}
