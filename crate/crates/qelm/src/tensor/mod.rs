//! Dense complex tensor kernels.
//!
//! Everything here operates on [`ndarray::ArrayD<C64>`] in row-major layout.
//! These are value-to-value functions with no shared state; they are safe to
//! call from any number of threads.

mod decomp;
mod krylov;

pub use decomp::{eigh_complex, eigh_real, lq_thin, qr_thin, svd_matrix, truncated_svd, SvdResult};
pub use krylov::{krylov_expm_apply, KrylovOptions, KrylovReport};

use ndarray::prelude::*;
use num_complex::Complex64 as C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("axis {axis} out of range for rank-{rank} tensor")]
    AxisOutOfRange { axis: usize, rank: usize },

    #[error("duplicate contraction axis {0}")]
    DuplicateAxis(usize),

    #[error("contraction axis lists have different lengths ({0} vs {1})")]
    AxisCountMismatch(usize, usize),

    #[error("contracted axes have mismatched extents ({left} vs {right})")]
    ExtentMismatch { left: usize, right: usize },

    #[error("tensor split must keep at least one axis on each side")]
    EmptySplit,

    #[error("chi_max must be at least 1")]
    ZeroChiMax,

    #[error("zero vector passed to the Krylov propagator")]
    ZeroKrylovVector,

    #[error("linear algebra backend failure: {0}")]
    Backend(String),
}

/// Pairwise tensor contraction over the given axes.
///
/// `axes_a[i]` of `a` is contracted against `axes_b[i]` of `b`; the result
/// carries the free axes of `a` (in order) followed by the free axes of `b`.
pub fn contract(
    a: &ArrayD<C64>,
    axes_a: &[usize],
    b: &ArrayD<C64>,
    axes_b: &[usize],
) -> Result<ArrayD<C64>, TensorError> {
    if axes_a.len() != axes_b.len() {
        return Err(TensorError::AxisCountMismatch(axes_a.len(), axes_b.len()));
    }
    check_axes(a.ndim(), axes_a)?;
    check_axes(b.ndim(), axes_b)?;
    for (&ax_a, &ax_b) in axes_a.iter().zip(axes_b) {
        let (la, lb) = (a.shape()[ax_a], b.shape()[ax_b]);
        if la != lb {
            return Err(TensorError::ExtentMismatch { left: la, right: lb });
        }
    }

    let free_a: Vec<usize> = (0..a.ndim()).filter(|i| !axes_a.contains(i)).collect();
    let free_b: Vec<usize> = (0..b.ndim()).filter(|i| !axes_b.contains(i)).collect();

    let a_mat = matricize(a, &free_a, axes_a);
    let b_mat = matricize(b, axes_b, &free_b);
    let c = a_mat.dot(&b_mat);

    let mut out_shape: Vec<usize> = free_a.iter().map(|&i| a.shape()[i]).collect();
    out_shape.extend(free_b.iter().map(|&i| b.shape()[i]));
    Ok(c.into_shape_with_order(IxDyn(&out_shape))
        .expect("contraction output shape is consistent by construction"))
}

/// Permute `t` so `rows` axes come first, then reshape to a matrix.
fn matricize(t: &ArrayD<C64>, rows: &[usize], cols: &[usize]) -> Array2<C64> {
    let perm: Vec<usize> = rows.iter().chain(cols).copied().collect();
    let m: usize = rows.iter().map(|&i| t.shape()[i]).product();
    let n: usize = cols.iter().map(|&i| t.shape()[i]).product();
    let permuted = t.view().permuted_axes(IxDyn(&perm));
    let standard = permuted.as_standard_layout();
    standard
        .into_owned()
        .into_shape_with_order((m, n))
        .expect("matricize shape is consistent by construction")
}

fn check_axes(rank: usize, axes: &[usize]) -> Result<(), TensorError> {
    for (i, &ax) in axes.iter().enumerate() {
        if ax >= rank {
            return Err(TensorError::AxisOutOfRange { axis: ax, rank });
        }
        if axes[..i].contains(&ax) {
            return Err(TensorError::DuplicateAxis(ax));
        }
    }
    Ok(())
}

/// Extract the single element of a rank-0 (or one-element) tensor.
pub fn scalar(t: &ArrayD<C64>) -> C64 {
    debug_assert_eq!(t.len(), 1, "scalar() called on tensor with {} elements", t.len());
    *t.iter().next().expect("scalar tensor is nonempty")
}

/// Squared Frobenius norm.
pub fn norm_sq(t: &ArrayD<C64>) -> f64 {
    t.iter().map(|z| z.norm_sqr()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn identity_contraction_passes_vector_through() {
        let eye = array![[c(1., 0.), c(0., 0.)], [c(0., 0.), c(1., 0.)]].into_dyn();
        let v = array![c(1., 0.), c(2., 0.)].into_dyn();
        let out = contract(&eye, &[1], &v, &[0]).unwrap();
        assert_eq!(out.shape(), &[2]);
        assert_eq!(out[[0]], c(1., 0.));
        assert_eq!(out[[1]], c(2., 0.));
    }

    #[test]
    fn pauli_x_flips_basis_vector() {
        let x = array![[c(0., 0.), c(1., 0.)], [c(1., 0.), c(0., 0.)]].into_dyn();
        let b = array![[c(1., 0.)], [c(0., 0.)]].into_dyn();
        let out = contract(&x, &[1], &b, &[0]).unwrap();
        assert_eq!(out.shape(), &[2, 1]);
        assert_eq!(out[[0, 0]], c(0., 0.));
        assert_eq!(out[[1, 0]], c(1., 0.));
    }

    #[test]
    fn contraction_matches_triple_loop_reference() {
        // random 3x4x5 against 5x2 over the last/first axes
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut rnd = || {
            // xorshift64*, deterministic fixture data
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            let bits = state.wrapping_mul(0x2545F4914F6CDD1D);
            (bits >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let a = ArrayD::from_shape_fn(IxDyn(&[3, 4, 5]), |_| c(rnd(), rnd()));
        let b = ArrayD::from_shape_fn(IxDyn(&[5, 2]), |_| c(rnd(), rnd()));
        let got = contract(&a, &[2], &b, &[0]).unwrap();
        assert_eq!(got.shape(), &[3, 4, 2]);
        for i in 0..3 {
            for j in 0..4 {
                for k in 0..2 {
                    let mut expect = c(0., 0.);
                    for m in 0..5 {
                        expect += a[[i, j, m]] * b[[m, k]];
                    }
                    assert!((got[[i, j, k]] - expect).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn mismatched_extents_are_rejected() {
        let a = ArrayD::<C64>::zeros(IxDyn(&[2, 3]));
        let b = ArrayD::<C64>::zeros(IxDyn(&[4, 2]));
        assert!(matches!(
            contract(&a, &[1], &b, &[0]),
            Err(TensorError::ExtentMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn full_contraction_yields_scalar() {
        let a = array![c(1., 1.), c(2., 0.)].into_dyn();
        let b = array![c(3., 0.), c(0., 1.)].into_dyn();
        let out = contract(&a, &[0], &b, &[0]).unwrap();
        assert_eq!(out.ndim(), 0);
        // plain bilinear product, no conjugation
        assert!((scalar(&out) - (c(1., 1.) * c(3., 0.) + c(2., 0.) * c(0., 1.))).norm() < 1e-15);
    }
}
