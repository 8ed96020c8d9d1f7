//! Lanczos-based Krylov propagator: applies `exp(prefactor · H)` to a vector
//! given only the action of a Hermitian linear map `H`.

use ndarray::prelude::*;
use num_complex::Complex64 as C64;

use super::{eigh_real, TensorError};

#[derive(Debug, Clone, Copy)]
pub struct KrylovOptions {
    /// Maximum Krylov subspace dimension.
    pub max_dim: usize,
    /// Target on the a-posteriori residual estimate.
    pub tol: f64,
}

impl Default for KrylovOptions {
    fn default() -> Self {
        Self { max_dim: 25, tol: 1e-10 }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct KrylovReport {
    /// Whether the residual estimate dropped below tolerance (or the
    /// subspace became exact) before `max_dim` was reached.
    pub converged: bool,
    pub dim_used: usize,
    /// Last residual estimate, relative to the input norm.
    pub est_error: f64,
}

/// Compute `exp(prefactor · H) · v` in a Krylov subspace.
///
/// `apply` must implement a Hermitian linear map (the Lanczos recurrence
/// relies on it). Non-convergence at `max_dim` is reported through
/// [`KrylovReport::converged`], never silently.
pub fn krylov_expm_apply(
    mut apply: impl FnMut(&Array1<C64>) -> Array1<C64>,
    v: &Array1<C64>,
    prefactor: C64,
    opts: &KrylovOptions,
) -> Result<(Array1<C64>, KrylovReport), TensorError> {
    let v_norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if v_norm == 0.0 {
        return Err(TensorError::ZeroKrylovVector);
    }
    let max_dim = opts.max_dim.max(1).min(v.len());

    let mut basis: Vec<Array1<C64>> = vec![v.mapv(|z| z / v_norm)];
    let mut alphas: Vec<f64> = Vec::with_capacity(max_dim);
    let mut betas: Vec<f64> = Vec::new();

    let mut converged = false;
    let mut est = f64::INFINITY;
    // magnitude scale of H restricted to the subspace, for breakdown detection
    let mut h_scale: f64 = 0.0;

    loop {
        let vj = basis.last().expect("basis nonempty");
        let mut w = apply(vj);
        let alpha = dot_conj(vj, &w).re;
        alphas.push(alpha);
        w.zip_mut_with(vj, |wz, vz| *wz -= alpha * vz);
        if basis.len() >= 2 {
            let beta_prev = betas[basis.len() - 2];
            let v_prev = &basis[basis.len() - 2];
            w.zip_mut_with(v_prev, |wz, vz| *wz -= beta_prev * vz);
        }
        // full re-orthogonalization; subspaces stay tiny so this is cheap
        for u in &basis {
            let overlap = dot_conj(u, &w);
            if overlap.norm() > 0.0 {
                w.zip_mut_with(u, |wz, uz| *wz -= overlap * uz);
            }
        }
        let beta = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        h_scale = h_scale.max(alpha.abs()).max(beta);

        let y = expm_tridiag(&alphas, &betas, prefactor)?;
        if beta <= h_scale.max(1.0) * 1e-14 {
            // happy breakdown: the subspace is exactly invariant
            converged = true;
            est = 0.0;
            return Ok((assemble(&basis, &y, v_norm), report(converged, basis.len(), est)));
        }
        // Saad-style a-posteriori estimate: the next-order correction enters
        // through β_m |e_mᵀ exp(τ T_m) e_1|.
        est = beta * prefactor.norm() * y[y.len() - 1].norm();
        if est <= opts.tol {
            converged = true;
            return Ok((assemble(&basis, &y, v_norm), report(converged, basis.len(), est)));
        }
        if basis.len() == max_dim {
            return Ok((assemble(&basis, &y, v_norm), report(converged, basis.len(), est)));
        }
        betas.push(beta);
        basis.push(w.mapv(|z| z / beta));
    }
}

fn report(converged: bool, dim_used: usize, est_error: f64) -> KrylovReport {
    KrylovReport { converged, dim_used, est_error }
}

fn dot_conj(a: &Array1<C64>, b: &Array1<C64>) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// `exp(prefactor · T) e_1` for the real symmetric tridiagonal `T` defined by
/// the Lanczos coefficients.
fn expm_tridiag(alphas: &[f64], betas: &[f64], prefactor: C64) -> Result<Array1<C64>, TensorError> {
    let m = alphas.len();
    let mut t = Array2::<f64>::zeros((m, m));
    for (i, &a) in alphas.iter().enumerate() {
        t[[i, i]] = a;
    }
    for (i, &b) in betas.iter().enumerate().take(m.saturating_sub(1)) {
        t[[i, i + 1]] = b;
        t[[i + 1, i]] = b;
    }
    let (evals, evecs) = eigh_real(&t)?;
    // y = Q exp(prefactor·Λ) Qᵀ e₁
    let mut y = Array1::<C64>::zeros(m);
    for k in 0..m {
        let phase = (prefactor * evals[k]).exp();
        let q0k = evecs[[0, k]];
        for i in 0..m {
            y[i] += phase * q0k * evecs[[i, k]];
        }
    }
    Ok(y)
}

fn assemble(basis: &[Array1<C64>], y: &Array1<C64>, v_norm: f64) -> Array1<C64> {
    let n = basis[0].len();
    let mut out = Array1::<C64>::zeros(n);
    for (vec, &coeff) in basis.iter().zip(y.iter()) {
        out.zip_mut_with(vec, |oz, vz| *oz += coeff * vz);
    }
    out.mapv_inplace(|z| z * v_norm);
    out
}
