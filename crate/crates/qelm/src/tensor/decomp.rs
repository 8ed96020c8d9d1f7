//! Matrix factorizations behind the tensor API: thin QR/LQ, truncated SVD,
//! Hermitian eigendecompositions. LAPACK does the heavy lifting; this module
//! owns the truncation bookkeeping and the deterministic sign/phase fixes.

use ndarray::prelude::*;
use ndarray_linalg::{Eigh, JobSvd, SVDDCInto, SVDInto, UPLO, QR};
use num_complex::Complex64 as C64;

use super::TensorError;

/// Truncated singular value decomposition of a tensor split into a
/// (left axes) × (right axes) matrix.
///
/// `u` has the left shape plus a trailing bond axis, `vt` a leading bond axis
/// plus the right shape. Singular values are non-increasing.
/// `discarded_weight` is Σ σ²(dropped) / Σ σ²(all), zero when nothing is
/// dropped or when the input is identically zero.
#[derive(Debug, Clone)]
pub struct SvdResult {
    pub u: ArrayD<C64>,
    pub s: Array1<f64>,
    pub vt: ArrayD<C64>,
    pub discarded_weight: f64,
}

impl SvdResult {
    /// Bond dimension kept by the truncation.
    pub fn rank(&self) -> usize {
        self.s.len()
    }
}

/// SVD with the paper-grade truncation rule: keep at most `chi_max` values,
/// dropping those with σ²/Σσ² below `cutoff` (at least one value is always
/// kept, so an all-zero input yields a single zero singular value).
pub fn truncated_svd(
    t: &ArrayD<C64>,
    left_axes: usize,
    chi_max: usize,
    cutoff: f64,
) -> Result<SvdResult, TensorError> {
    if left_axes == 0 || left_axes >= t.ndim() {
        return Err(TensorError::EmptySplit);
    }
    if chi_max == 0 {
        return Err(TensorError::ZeroChiMax);
    }
    let left_shape: Vec<usize> = t.shape()[..left_axes].to_vec();
    let right_shape: Vec<usize> = t.shape()[left_axes..].to_vec();
    let m: usize = left_shape.iter().product();
    let n: usize = right_shape.iter().product();
    let mat = t
        .to_owned()
        .into_shape_with_order((m, n))
        .expect("split shape is consistent");

    let (u, s, vt) = svd_matrix(mat)?;

    let total: f64 = s.iter().map(|x| x * x).sum();
    let keep = if total == 0.0 {
        1
    } else {
        let mut keep = 0;
        for (i, &sv) in s.iter().enumerate() {
            if i >= chi_max || sv * sv / total < cutoff {
                break;
            }
            keep += 1;
        }
        keep.max(1)
    };
    let discarded: f64 = s.iter().skip(keep).map(|x| x * x).sum();
    let discarded_weight = if total == 0.0 { 0.0 } else { discarded / total };

    let mut u_shape = left_shape;
    u_shape.push(keep);
    let mut vt_shape = vec![keep];
    vt_shape.extend(right_shape);

    Ok(SvdResult {
        u: u.slice(s![.., ..keep])
            .to_owned()
            .into_shape_with_order(IxDyn(&u_shape))
            .expect("u shape consistent"),
        s: s.slice(s![..keep]).to_owned(),
        vt: vt
            .slice(s![..keep, ..])
            .to_owned()
            .into_shape_with_order(IxDyn(&vt_shape))
            .expect("vt shape consistent"),
        discarded_weight,
    })
}

/// Thin SVD of a matrix with the full (untruncated) spectrum.
///
/// Uses the divide-and-conquer driver and falls back to the standard one on
/// the rare convergence failures.
pub fn svd_matrix(mat: Array2<C64>) -> Result<(Array2<C64>, Array1<f64>, Array2<C64>), TensorError> {
    match mat.clone().svddc_into(JobSvd::Some) {
        Ok((Some(u), s, Some(vt))) => Ok((u, s, vt)),
        Ok(_) => Err(TensorError::Backend("SVD driver returned no factors".into())),
        Err(_) => match mat.svd_into(true, true) {
            Ok((Some(u), s, Some(vt))) => Ok((u, s, vt)),
            Ok(_) => Err(TensorError::Backend("SVD driver returned no factors".into())),
            Err(e) => Err(TensorError::Backend(format!("SVD failed: {e}"))),
        },
    }
}

/// Thin QR with the R diagonal made real and non-negative, so the
/// factorization (and everything canonicalized through it) is deterministic.
pub fn qr_thin(mat: &Array2<C64>) -> Result<(Array2<C64>, Array2<C64>), TensorError> {
    let (mut q, mut r) = mat
        .qr()
        .map_err(|e| TensorError::Backend(format!("QR failed: {e}")))?;
    let k = r.nrows();
    for i in 0..k {
        let d = r[[i, i]];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            let inv = phase.conj();
            r.row_mut(i).mapv_inplace(|z| z * inv);
            q.column_mut(i).mapv_inplace(|z| z * phase);
        }
    }
    Ok((q, r))
}

/// Thin LQ (lower-triangular times row-isometry), via QR of the adjoint.
pub fn lq_thin(mat: &Array2<C64>) -> Result<(Array2<C64>, Array2<C64>), TensorError> {
    let adj = mat.t().mapv(|z| z.conj());
    let (q, r) = qr_thin(&adj)?;
    let l = r.t().mapv(|z| z.conj());
    let qh = q.t().mapv(|z| z.conj());
    Ok((l, qh))
}

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending,
/// eigenvectors in the columns.
pub fn eigh_complex(mat: &Array2<C64>) -> Result<(Array1<f64>, Array2<C64>), TensorError> {
    mat.eigh(UPLO::Lower)
        .map_err(|e| TensorError::Backend(format!("eigh failed: {e}")))
}

/// Eigendecomposition of a real symmetric matrix; eigenvalues ascending.
pub fn eigh_real(mat: &Array2<f64>) -> Result<(Array1<f64>, Array2<f64>), TensorError> {
    mat.eigh(UPLO::Lower)
        .map_err(|e| TensorError::Backend(format!("eigh failed: {e}")))
}
