//! Chart ideals and symbolic matrices attached to an instance `(n, l, i0)`.
//!
//! Coordinates follow the reordered basis in which the first `2l` indices
//! form the `V1`/`Z1` block and the last `n - 2l` the `V2`/`Z2` block.

mod constants;
mod forge;
mod matrix;
mod spec;

pub use constants::{build_constants, build_j, Constants};
pub use forge::{
    bilinear, blocks, build_blowup_patch, build_chart, build_parametrization, build_raw_chart,
    build_raw_chart_with, build_rees_presentation, build_simplified_chart, chart_ring, chart_variables,
    entry_name, patch_pivot, q_form, raw_matrices, t_column, t_name, v_name, z2_column, z_name, Blocks,
    Parametrization, RawMatrices, Y4X4Scalar,
};
pub use matrix::{subsets, MatrixExpr};
pub use spec::{is_strongly_non_special, ChartKind, ChartSpec};

#[cfg(test)]
mod tests;
