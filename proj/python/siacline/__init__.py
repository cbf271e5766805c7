"""SIAC line and tensor filtering for 2D discontinuous Galerkin fields."""

from ._core import (
    Counters,
    FilterConfig,
    FilterKind,
    ModalField2D,
    SiacKernel,
    UniformMesh2D,
    __version__,
    bspline_derivative,
    bspline_eval,
    filter_field_uniform,
    filter_point,
    filter_point_counted,
    filtered_l2_error_vs_ic,
    kernel_coefficients,
    l2_error,
    l2_error_vs_ic,
    load_field,
    project,
    project_ic,
    save_field,
    solve_advection,
)

__all__ = [
    "Counters",
    "FilterConfig",
    "FilterKind",
    "ModalField2D",
    "SiacKernel",
    "UniformMesh2D",
    "__version__",
    "bspline_derivative",
    "bspline_eval",
    "filter_field_uniform",
    "filter_point",
    "filter_point_counted",
    "filtered_l2_error_vs_ic",
    "kernel_coefficients",
    "l2_error",
    "l2_error_vs_ic",
    "load_field",
    "project",
    "project_ic",
    "save_field",
    "solve_advection",
]
