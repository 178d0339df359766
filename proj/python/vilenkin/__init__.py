"""Harmonic analysis on bounded Vilenkin groups at finite resolution."""

from ._core import (
    Error,
    RangeError,
    SizeError,
    SpecMismatch,
    GroupSpec,
    WeightSequence,
    abel_kernel_residual,
    block_residual,
    character,
    classify,
    convolve,
    digits,
    dirichlet,
    domination_constant,
    fejer,
    forward,
    index_of,
    inverse,
    lebesgue_modulus,
    make_group,
    named_mean,
    norlund_kernel,
    norlund_mean,
    norm,
    partial_sum,
    psi,
    rademacher,
    reflection_residual,
    run_cli,
    t_kernel,
    t_mean,
    w_modulus,
    weak_norm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
