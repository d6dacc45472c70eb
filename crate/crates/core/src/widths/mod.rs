//! Directed pathwidth, weak separator number, and how they bound cycle rank.

mod bounds;
mod path_decomposition;
mod pathwidth;
mod separator;

pub use bounds::{check_bounds, closed_form_bound, rk, BoundsReport};
pub use path_decomposition::{
    normalize, parse_path_decomposition, validate_path_decomposition, DecompositionCondition,
    DecompositionValidation, PathDecomposition,
};
pub use pathwidth::{
    dpw_exact, dpw_exact_with_limit, layout_to_decomposition, DpwResult, DEFAULT_DPW_LIMIT,
};
pub use separator::{
    is_weak_balanced_separator, min_weak_separator, min_weak_separator_with_limit, snum_exact,
    snum_exact_with_limit, SeparatorCertificate, SnumResult, DEFAULT_SNUM_LIMIT,
};
