"""Truncation of the PCA expansion.

Keeping the first d basis components defines a d x D isometry-row map
(the first d rows of the basis adjoint). States pushed through it are
renormalized by hand; Hermitian operators are conjugated by it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import BadDimension, DimMismatch, DomainError, NonRealExpectation, ZeroNorm
from .numerics import DEFAULT_TOL, Tolerances, check_hermitian
from .pca import PcaModel

__all__ = [
    "CoarseGrainMap",
    "CoarseState",
    "SelectionRule",
    "build_map",
    "decimate_state",
    "select_dimension",
    "coarse_grain_operator",
    "expectation",
]


class SelectionRule(enum.Enum):
    """Scope of the epsilon rule for choosing the coarse dimension."""

    PER_STATE = "per-state"
    SET_MAX = "set-max"


@dataclass(frozen=True)
class CoarseGrainMap:
    """d x D map g: basis change plus truncation, with g @ g^dag = I_d."""

    d: int
    g: np.ndarray
    source: PcaModel


@dataclass(frozen=True)
class CoarseState:
    """Unit-norm truncated weight vector plus its pre-normalization norm.

    outside_span flags inputs with support beyond the fitted basis; for
    such states the map alters structure non-systematically.
    """

    d: int
    weights: np.ndarray
    norm_before: float
    outside_span: bool = False


def build_map(model: PcaModel, d: int) -> CoarseGrainMap:
    """First d rows of the basis adjoint as a coarse-graining map."""
    if not 2 <= d <= model.count + 1:
        raise BadDimension(f"coarse dimension must lie in [2, {model.count + 1}], got {d}")
    g = model.basis[:, :d].conj().T.copy()
    g.setflags(write=False)
    return CoarseGrainMap(d=d, g=g, source=model)


def decimate_state(
    cg: CoarseGrainMap, v: np.ndarray, tol: Tolerances = DEFAULT_TOL
) -> CoarseState:
    """Truncate a D-vector to d weight components and renormalize."""
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (cg.source.dim,):
        raise DimMismatch(f"expected a vector of length {cg.source.dim}, got shape {v.shape}")
    w = cg.g @ v
    norm_before = float(np.linalg.norm(w))
    if norm_before <= tol.zero_norm:
        raise ZeroNorm(
            f"state is orthogonal to the retained subspace (norm {norm_before:.3e})"
        )
    full = cg.source.basis.conj().T @ v
    residual = float(np.real(np.vdot(v, v)) - np.real(np.vdot(full, full)))
    outside = residual > tol.base * max(float(np.real(np.vdot(v, v))), 1.0)
    weights = w / norm_before
    weights.setflags(write=False)
    return CoarseState(d=cg.d, weights=weights, norm_before=norm_before, outside_span=outside)


def _minimal_dimension(weight_column: np.ndarray, eps: float) -> int:
    powers = np.real(weight_column) ** 2 + np.imag(weight_column) ** 2
    cumulative = np.cumsum(powers)
    target = 1.0 - eps
    for idx in range(cumulative.size):
        if cumulative[idx] >= target:
            return max(idx + 1, 2)
    return max(cumulative.size, 2)


def select_dimension(
    model: PcaModel,
    eps: float,
    rule: SelectionRule = SelectionRule.SET_MAX,
    state: int | None = None,
) -> int:
    """Smallest d whose retained weight power reaches 1 - eps, clamped to >= 2.

    PER_STATE applies the rule to one 1-based state index; SET_MAX takes
    the maximum of the per-state answers.
    """
    if not 0.0 <= eps < 1.0:
        raise DomainError(f"eps must lie in [0, 1), got {eps}")
    if rule is SelectionRule.PER_STATE:
        if state is None or not 1 <= state <= model.count:
            raise DimMismatch(f"PER_STATE needs a state index in 1..{model.count}, got {state}")
        return _minimal_dimension(model.weights[:, state - 1], eps)
    return max(
        _minimal_dimension(model.weights[:, mu], eps) for mu in range(model.count)
    )


def coarse_grain_operator(
    cg: CoarseGrainMap, op: np.ndarray, tol: Tolerances = DEFAULT_TOL
) -> np.ndarray:
    """Conjugate a D x D Hermitian operator down to d x d."""
    op = np.asarray(op, dtype=np.complex128)
    if op.shape != (cg.source.dim, cg.source.dim):
        raise DimMismatch(
            f"expected a {cg.source.dim} x {cg.source.dim} operator, got shape {op.shape}"
        )
    check_hermitian(op, tol, "operator")
    return cg.g @ op @ cg.g.conj().T


def expectation(
    state_weights: np.ndarray, op_matrix: np.ndarray, tol: Tolerances = DEFAULT_TOL
) -> float:
    """Quadratic form x^dag O x, verified real within tolerance."""
    x = np.asarray(state_weights, dtype=np.complex128)
    op = np.asarray(op_matrix, dtype=np.complex128)
    if op.ndim != 2 or op.shape[0] != op.shape[1] or x.shape != (op.shape[0],):
        raise DimMismatch(f"shape mismatch: state {x.shape} against operator {op.shape}")
    value = complex(np.vdot(x, op @ x))
    if abs(value.imag) > tol.expectation_imag:
        raise NonRealExpectation(f"imaginary residue {value.imag:.3e} beyond tolerance")
    return value.real
