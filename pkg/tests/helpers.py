"""Oracle implementations shared by the test modules.

Everything here is written independently of the package internals so the
tests compare two routes to the same quantity. Keep it that way: no
imports from qdecimate beyond plain data types.
"""

from __future__ import annotations

import math

import numpy as np


def random_unitary(dim: int, seed: int) -> np.ndarray:
    """Haar-ish unitary from QR of a complex Gaussian, phase-fixed."""
    rng = np.random.Generator(np.random.PCG64(seed))
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def random_columns(dim: int, count: int, seed: int) -> np.ndarray:
    """Unit-norm random complex columns, same draw scheme as the package docs."""
    rng = np.random.Generator(np.random.PCG64(seed))
    raw = rng.uniform(-1.0, 1.0, size=(dim, count)) + 1j * rng.uniform(
        -1.0, 1.0, size=(dim, count)
    )
    return raw / np.linalg.norm(raw, axis=0, keepdims=True)


def random_hermitian_oracle(dim: int, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2.0


def qubit_bit(index: int, q: int, n: int) -> int:
    """Bit of qubit q (1-based, q=1 most significant) in basis index."""
    return (index >> (n - q)) & 1


def dense_reduced_density_matrix(v: np.ndarray, n: int, q: int) -> np.ndarray:
    """Partial trace via the full D x D outer product and explicit index sums."""
    dim = 2**n
    assert v.shape == (dim,)
    rho_full = np.outer(v, v.conj())
    rho = np.zeros((2, 2), dtype=np.complex128)
    stride = 1 << (n - q)
    for i in range(dim):
        a = qubit_bit(i, q, n)
        for b in (0, 1):
            j = (i & ~stride) | (b * stride)
            rho[a, b] += rho_full[i, j]
    return rho


def entropy_2x2_analytic(rho: np.ndarray) -> float:
    """Closed-form eigenvalues of a 2x2 Hermitian matrix, then -sum(lam ln lam)."""
    t = float(np.real(rho[0, 0] + rho[1, 1]))
    det = float(np.real(rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0]))
    disc = max(t * t - 4.0 * det, 0.0)
    lams = ((t + math.sqrt(disc)) / 2.0, (t - math.sqrt(disc)) / 2.0)
    total = 0.0
    for lam in lams:
        lam = min(max(lam, 0.0), 1.0)
        if lam > 0.0:
            total -= lam * math.log(lam)
    return total + 0.0


def brute_force_minimal_d(weights: np.ndarray, eps: float) -> int:
    """Exhaustive scan for the smallest d with cumulative power >= 1 - eps.

    Uses the same elementwise arithmetic (re^2 + im^2, sequential partial
    sums) so agreement with the library must be exact, not approximate.
    """
    target = 1.0 - eps
    running = 0.0
    for k in range(weights.shape[0]):
        running += weights[k].real ** 2 + weights[k].imag ** 2
        if running >= target:
            return max(k + 1, 2)
    return max(weights.shape[0], 2)


def naive_triple_product(g: np.ndarray, h: np.ndarray) -> np.ndarray:
    """g @ h @ g^dag by explicit summation loops."""
    d, dim = g.shape
    out = np.zeros((d, d), dtype=np.complex128)
    for a in range(d):
        for b in range(d):
            acc = 0.0 + 0.0j
            for i in range(dim):
                for j in range(dim):
                    acc += g[a, i] * h[i, j] * np.conj(g[b, j])
            out[a, b] = acc
    return out


def naive_expectation(x: np.ndarray, op: np.ndarray) -> complex:
    """Double-loop sum_ij conj(x_i) O_ij x_j."""
    acc = 0.0 + 0.0j
    for i in range(x.shape[0]):
        for j in range(x.shape[0]):
            acc += np.conj(x[i]) * op[i, j] * x[j]
    return acc
