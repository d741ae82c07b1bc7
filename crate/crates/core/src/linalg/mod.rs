//! Exact linear algebra over the rationals and prime fields.

pub mod echelon;
pub mod enumerate;
pub mod matrix;
pub mod operators;
pub mod poly;
pub mod subspace;

pub use echelon::{inverse, rank, rank_fraction_free, rank_plain, solve, solve_many, Rref};
pub use matrix::{Matrix, SparseVec};
pub use operators::{common_eigenvector, common_kernel, commutant_dim, sum_of_images, Search};
pub use subspace::{unit, RelativeQuotient, Subspace};

use crate::field::Scalar;

/// Rank, kernel and image of a matrix in one call.
#[derive(Clone, Debug)]
pub struct RankKernelImage<K> {
    pub rank: usize,
    pub kernel: Subspace<K>,
    pub image: Subspace<K>,
}

pub fn rank_kernel_image<K: Scalar>(m: &Matrix<K>) -> RankKernelImage<K> {
    let kernel = Subspace::kernel(m);
    let image = Subspace::image(m);
    debug_assert_eq!(image.dim() + kernel.dim(), m.cols());
    RankKernelImage { rank: image.dim(), kernel, image }
}
