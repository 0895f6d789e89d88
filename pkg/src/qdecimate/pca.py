"""Principal-component model of a state set.

The model holds an isometric basis of M+1 columns: column 0 is the
normalized uniform superposition carrying each state's mean, columns
1..M are the left singular vectors of the deviation matrix ordered by
descending singular value. Weights are the exact expansion coefficients
of every input state in that basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AllZeroDeviations, DimMismatch
from .numerics import DEFAULT_TOL, Tolerances, svd
from .stateset import StateSet, column_means, deviation_matrix

__all__ = ["PcaModel", "fit_pca", "weights_of", "importance", "importances", "reconstruct"]


@dataclass(frozen=True)
class PcaModel:
    """Fitted basis, singular values, and per-state weights.

    basis:           D x (M+1) isometry; column 0 is ones(D)/sqrt(D)
    singular_values: M deviation singular values, descending
    weights:         (M+1) x M; column mu expands state mu in the basis
    rank:            singular values above rank_rel * e_1 (the rest count
                     as zero; their basis columns are deterministic
                     orthonormal fill and their weight rows are zero)
    """

    dim: int
    count: int
    basis: np.ndarray
    singular_values: np.ndarray
    weights: np.ndarray
    rank: int


def _fill_deficient_columns(phi: np.ndarray, filled: int) -> None:
    """Complete phi[:, filled:] to an orthonormal set, deterministically.

    Candidates are the canonical basis vectors in index order; each is
    orthogonalized (two passes) against the columns accepted so far and
    taken if enough of it survives. If a full scan never clears the
    acceptance bar, the best candidate seen is used instead.
    """
    dim, total = phi.shape
    for j in range(filled, total):
        best_vec = None
        best_norm = -1.0
        chosen = None
        for i in range(dim):
            v = np.zeros(dim, dtype=np.complex128)
            v[i] = 1.0
            for _ in range(2):
                v -= phi[:, :j] @ (phi[:, :j].conj().T @ v)
            nrm = float(np.linalg.norm(v))
            if nrm > 0.5:
                chosen = v / nrm
                break
            if nrm > best_norm:
                best_norm = nrm
                best_vec = v
        if chosen is None:
            if best_vec is None or best_norm <= 0.0:
                raise RuntimeError("orthonormal completion impossible; D > M+1 violated?")
            chosen = best_vec / best_norm
        phi[:, j] = chosen


def _mgs_sweep(phi: np.ndarray) -> np.ndarray:
    """One modified Gram-Schmidt pass preserving column 0 and column order."""
    out = phi.copy()
    for j in range(1, out.shape[1]):
        for _ in range(2):
            out[:, j] -= out[:, :j] @ (out[:, :j].conj().T @ out[:, j])
        out[:, j] /= np.linalg.norm(out[:, j])
    return out


def fit_pca(s: StateSet, tol: Tolerances = DEFAULT_TOL) -> PcaModel:
    """Fit the mean-plus-deviations PCA model of a state set."""
    dim, count = s.dim, s.count
    means = column_means(s)
    delta = deviation_matrix(s, means)
    dec = svd(delta, tol)
    sv = dec.singular_values
    rank_tol = tol.rank_rel * (float(sv[0]) if sv.size else 0.0)
    rank = int(np.sum(sv > rank_tol))

    phi = np.empty((dim, count + 1), dtype=np.complex128)
    phi[:, 0] = 1.0 / math.sqrt(dim)
    phi[:, 1 : rank + 1] = dec.left_vectors[:, :rank]
    if rank < count:
        _fill_deficient_columns(phi, filled=rank + 1)

    weights = np.zeros((count + 1, count), dtype=np.complex128)
    weights[0, :] = math.sqrt(dim) * means
    weights[1 : rank + 1, :] = sv[:rank, np.newaxis] * dec.right_vectors_h[:rank, :]

    gram_dev = np.abs(phi.conj().T @ phi - np.eye(count + 1)).max()
    if gram_dev > tol.base:
        phi = _mgs_sweep(phi)
        weights = phi.conj().T @ s.matrix
        weights[0, :] = math.sqrt(dim) * means

    phi.setflags(write=False)
    weights.setflags(write=False)
    return PcaModel(
        dim=dim,
        count=count,
        basis=phi,
        singular_values=sv,
        weights=weights,
        rank=rank,
    )


def weights_of(model: PcaModel, v: np.ndarray) -> np.ndarray:
    """Expansion coefficients of a D-vector in the model basis."""
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (model.dim,):
        raise DimMismatch(f"expected a vector of length {model.dim}, got shape {v.shape}")
    return model.basis.conj().T @ v


def importance(model: PcaModel, k: int) -> float:
    """Fractional contribution of deviation component k (1-based)."""
    if not 1 <= k <= model.count:
        raise DimMismatch(f"component index must lie in 1..{model.count}, got {k}")
    return float(importances(model)[k - 1])


def importances(model: PcaModel) -> np.ndarray:
    """All M fractional contributions; they sum to 1."""
    total = float(np.sum(model.singular_values))
    if total <= 0.0:
        raise AllZeroDeviations("every deviation singular value is zero")
    return model.singular_values / total


def reconstruct(model: PcaModel, w: np.ndarray) -> np.ndarray:
    """Map a weight vector of length M+1 back to a D-vector (no renormalization)."""
    w = np.asarray(w, dtype=np.complex128)
    if w.shape != (model.count + 1,):
        raise DimMismatch(f"expected {model.count + 1} weights, got shape {w.shape}")
    return model.basis @ w
