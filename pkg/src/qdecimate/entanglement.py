"""Single-qubit entanglement diagnostics.

Viewing the D = 2**n space as n qubits (big-endian: qubit 1 is the most
significant bit of the basis index), these routines compute one-qubit
reduced density matrices, their von Neumann entropy in nats, and the
entropy of a state rebuilt from its first d basis components as d grows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadQubitIndex,
    DimMismatch,
    NotDensityMatrix,
    NotPowerOfTwo,
    ZeroNorm,
)
from .numerics import DEFAULT_TOL, Tolerances
from .pca import PcaModel
from .stateset import StateSet

__all__ = [
    "QubitFactorization",
    "EntropyCurve",
    "reduced_density_matrix",
    "von_neumann_entropy",
    "entropy_vs_dimension_curve",
    "saturation_dimension",
]

LN2 = float(np.log(2.0))


@dataclass(frozen=True)
class QubitFactorization:
    """n-qubit view of a 2**n dimensional space, big-endian bit order."""

    n: int

    @property
    def dim(self) -> int:
        return 2**self.n

    @classmethod
    def from_dim(cls, dim: int) -> "QubitFactorization":
        n = int(dim).bit_length() - 1
        if dim <= 0 or 2**n != dim:
            raise NotPowerOfTwo(f"dimension {dim} is not a power of two")
        return cls(n=n)


@dataclass(frozen=True)
class EntropyCurve:
    """Entropy (nats) of the d-component reconstruction, for d = 1..M+1."""

    state_index: int
    qubit: int
    points: tuple[tuple[int, float], ...]

    @property
    def entropies(self) -> np.ndarray:
        return np.array([s for _, s in self.points])


def reduced_density_matrix(
    v: np.ndarray, f: QubitFactorization, q: int
) -> np.ndarray:
    """Partial trace of |v><v| onto qubit q, by index arithmetic in O(D)."""
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (f.dim,):
        raise DimMismatch(f"expected a vector of length {f.dim}, got shape {v.shape}")
    if not 1 <= q <= f.n:
        raise BadQubitIndex(f"qubit index must lie in 1..{f.n}, got {q}")
    psi = np.moveaxis(v.reshape([2] * f.n), q - 1, 0).reshape(2, -1)
    return psi @ psi.conj().T


def von_neumann_entropy(rho: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> float:
    """-sum(lam * ln(lam)) over eigenvalues, with 0 ln 0 = 0."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotDensityMatrix(f"expected a square matrix, got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > tol.base:
        raise NotDensityMatrix("matrix is not Hermitian within tolerance")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > tol.base:
        raise NotDensityMatrix(f"trace is {trace:.12g}, not 1 within tolerance")
    lam = np.linalg.eigvalsh(rho)
    if lam.min() < -tol.psd_slack:
        raise NotDensityMatrix(f"negative eigenvalue {lam.min():.3e} beyond tolerance")
    lam = np.clip(lam, 0.0, 1.0)
    positive = lam[lam > 0.0]
    # + 0.0 turns the -0.0 of a pure state into plain 0.0
    return float(-np.sum(positive * np.log(positive))) + 0.0


def entropy_vs_dimension_curve(
    s: StateSet,
    model: PcaModel,
    mu: int,
    q: int,
    tol: Tolerances = DEFAULT_TOL,
) -> EntropyCurve:
    """Entropy of the renormalized d-component reconstruction of state mu.

    d runs from 1 (mean component only) to M+1 (full expansion, which
    matches the original state's entropy).
    """
    if s.dim != model.dim or s.count != model.count:
        raise DimMismatch("state set and model disagree on dimensions")
    if not 1 <= mu <= model.count:
        raise DimMismatch(f"state index must lie in 1..{model.count}, got {mu}")
    f = QubitFactorization.from_dim(model.dim)
    if not 1 <= q <= f.n:
        raise BadQubitIndex(f"qubit index must lie in 1..{f.n}, got {q}")
    w = model.weights[:, mu - 1]
    points = []
    for d in range(1, model.count + 2):
        vec = model.basis[:, :d] @ w[:d]
        nrm = float(np.linalg.norm(vec))
        if nrm <= tol.zero_norm:
            raise ZeroNorm(f"reconstruction at d={d} has norm {nrm:.3e}")
        rho = reduced_density_matrix(vec / nrm, f, q)
        points.append((d, von_neumann_entropy(rho, tol)))
    return EntropyCurve(state_index=mu, qubit=q, points=tuple(points))


def saturation_dimension(curve: EntropyCurve, fraction: float = 0.05) -> int:
    """Smallest d whose entropy is within `fraction` of the endpoint value."""
    final = curve.points[-1][1]
    band = fraction * max(final, 1e-6)
    for d, entropy in curve.points:
        if abs(entropy - final) <= band:
            return d
    return curve.points[-1][0]
