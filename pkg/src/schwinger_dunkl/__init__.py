"""Finite-dimensional representations of the Schwinger-Dunkl algebra sd(2)."""

__version__ = "0.1.0"

from .numerics import (  # noqa: E402
    EigenFailure,
    SingularParameterError,
    Tolerances,
    anticommutator,
    commutator,
    dense_eigen,
    matmul,
)
from .params import OscParams  # noqa: E402
from .repmat import (  # noqa: E402
    BasisOrdering,
    GeneratorSet,
    build_cartesian,
    build_circular,
    build_q,
    spectrum_closed_form,
)
from .interbasis import build_transition, transition_coeff  # noqa: E402
from .qdiag import assemble_q_eigvecs, q_to_j2  # noqa: E402
from .j2rep import build_j2_eigen, build_j3_j2basis  # noqa: E402
from .verify import run_suite  # noqa: E402

__all__ = [
    "EigenFailure",
    "SingularParameterError",
    "Tolerances",
    "anticommutator",
    "commutator",
    "dense_eigen",
    "matmul",
    "OscParams",
    "BasisOrdering",
    "GeneratorSet",
    "build_cartesian",
    "build_circular",
    "build_q",
    "spectrum_closed_form",
    "build_transition",
    "transition_coeff",
    "assemble_q_eigvecs",
    "q_to_j2",
    "build_j2_eigen",
    "build_j3_j2basis",
    "run_suite",
]
