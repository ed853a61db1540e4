//! Determinantal point process machinery: the quality/similarity kernel,
//! its eigendecomposition, and subset selection.

mod eigen;
mod kernel;
mod layers;
mod select;

pub use eigen::{eigendecompose, eigendecompose_with, EigenMethod, EigenSystem, SYMMETRY_TOL};
pub use layers::{layered_spectrum, LayeredSpectrum, MAX_LEVELS, NULL_REL_EPS};
pub use kernel::{build_kernel, kernel_from_parts, qualities, quality, KernelMatrix, SimilarityMode};
pub use select::{
    dpp_select_greedy, dpp_select_greedy_with, elementary_symmetric, greedy_from_eigen,
    kdpp_sample, kdpp_sample_layered, kdpp_sample_with, uniform_sample, SelectionStrategy,
    SUPPORT_EPS,
};
