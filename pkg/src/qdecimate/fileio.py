"""On-disk formats: JSON for states/models/operators, CSV for curves.

Complex numbers are stored as [re, im] pairs. Floats go through Python's
shortest round-trip repr, so double precision survives a write/read
cycle bit-exactly and identical inputs produce byte-identical files.
All writes are atomic (temp file + rename).
"""

from __future__ import annotations

import csv
import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .errors import DomainError
from .numerics import DEFAULT_TOL, Tolerances
from .pca import PcaModel

FORMAT_VERSION = 1


def _atomic_write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump_json(path: str | Path, doc: dict) -> None:
    _atomic_write_text(path, json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _load_json(path: str | Path) -> dict:
    with open(path) as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise DomainError(f"{path}: expected a JSON object at top level")
    return doc


def _matrix_to_pairs(m: np.ndarray) -> list:
    stacked = np.stack([m.real, m.imag], axis=-1)
    return stacked.tolist()


def _pairs_to_matrix(pairs, shape_hint: str, path: str | Path) -> np.ndarray:
    try:
        arr = np.asarray(pairs, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{path}: {shape_hint} is not a numeric array") from exc
    if arr.ndim < 1 or arr.shape[-1] != 2:
        raise DomainError(f"{path}: {shape_hint} entries must be [re, im] pairs")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{path}: {shape_hint} contains non-finite numbers")
    return arr[..., 0] + 1j * arr[..., 1]


def write_state_set(
    path: str | Path, matrix: np.ndarray, labels: tuple[str, ...] | None = None
) -> None:
    """Write a D x M complex matrix; entry mu of "states" is column mu."""
    doc = {
        "dimension": int(matrix.shape[0]),
        "states": _matrix_to_pairs(np.asarray(matrix, dtype=np.complex128).T),
    }
    if labels is not None:
        doc["labels"] = list(labels)
    _dump_json(path, doc)


def read_state_set(path: str | Path) -> tuple[np.ndarray, tuple[str, ...] | None]:
    """Read back a D x M matrix plus optional labels (no policy applied here)."""
    doc = _load_json(path)
    for key in ("dimension", "states"):
        if key not in doc:
            raise DomainError(f"{path}: missing key '{key}'")
    states = _pairs_to_matrix(doc["states"], "states", path)
    if states.ndim != 2:
        raise DomainError(f"{path}: states must be a list of equal-length vectors")
    matrix = np.ascontiguousarray(states.T)
    if matrix.shape[0] != int(doc["dimension"]):
        raise DomainError(
            f"{path}: dimension field {doc['dimension']} does not match "
            f"state length {matrix.shape[0]}"
        )
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != matrix.shape[1]:
            raise DomainError(f"{path}: labels must list one string per state")
        labels = tuple(str(item) for item in labels)
    return matrix, labels


def write_model(path: str | Path, model: PcaModel) -> None:
    doc = {
        "format_version": FORMAT_VERSION,
        "dimension": model.dim,
        "count": model.count,
        "singular_values": model.singular_values.tolist(),
        "basis": _matrix_to_pairs(model.basis),
        "weights": _matrix_to_pairs(model.weights),
    }
    _dump_json(path, doc)


def read_model(path: str | Path, tol: Tolerances = DEFAULT_TOL) -> PcaModel:
    """Load and re-validate a fitted model."""
    doc = _load_json(path)
    for key in ("format_version", "dimension", "count", "singular_values", "basis", "weights"):
        if key not in doc:
            raise DomainError(f"{path}: missing key '{key}'")
    if int(doc["format_version"]) != FORMAT_VERSION:
        raise DomainError(f"{path}: unsupported format_version {doc['format_version']}")
    dim = int(doc["dimension"])
    count = int(doc["count"])
    basis = _pairs_to_matrix(doc["basis"], "basis", path)
    weights = _pairs_to_matrix(doc["weights"], "weights", path)
    sv = np.asarray(doc["singular_values"], dtype=np.float64)
    if basis.shape != (dim, count + 1):
        raise DomainError(f"{path}: basis shape {basis.shape} != ({dim}, {count + 1})")
    if weights.shape != (count + 1, count):
        raise DomainError(f"{path}: weights shape {weights.shape} != ({count + 1}, {count})")
    if sv.shape != (count,) or not np.all(np.isfinite(sv)):
        raise DomainError(f"{path}: expected {count} finite singular values")
    if np.any(np.diff(sv) > 0) or np.any(sv < 0):
        raise DomainError(f"{path}: singular values must be non-negative and descending")
    if np.abs(basis[:, 0] - 1.0 / math.sqrt(dim)).max() > tol.base:
        raise DomainError(f"{path}: basis column 0 is not the uniform superposition")
    gram_dev = np.abs(basis.conj().T @ basis - np.eye(count + 1)).max()
    if gram_dev > tol.base:
        raise DomainError(f"{path}: basis columns not orthonormal (deviation {gram_dev:.3e})")
    rank_tol = tol.rank_rel * (float(sv[0]) if sv.size else 0.0)
    rank = int(np.sum(sv > rank_tol))
    basis.setflags(write=False)
    weights.setflags(write=False)
    sv.setflags(write=False)
    return PcaModel(
        dim=dim, count=count, basis=basis, singular_values=sv, weights=weights, rank=rank
    )


def write_operator(path: str | Path, matrix: np.ndarray) -> None:
    matrix = np.asarray(matrix, dtype=np.complex128)
    doc = {
        "format_version": FORMAT_VERSION,
        "dimension": int(matrix.shape[0]),
        "matrix": _matrix_to_pairs(matrix),
    }
    _dump_json(path, doc)


def read_operator(path: str | Path) -> np.ndarray:
    doc = _load_json(path)
    for key in ("dimension", "matrix"):
        if key not in doc:
            raise DomainError(f"{path}: missing key '{key}'")
    matrix = _pairs_to_matrix(doc["matrix"], "matrix", path)
    dim = int(doc["dimension"])
    if matrix.shape != (dim, dim):
        raise DomainError(f"{path}: matrix shape {matrix.shape} != ({dim}, {dim})")
    return matrix


def write_curve(path: str | Path, rows: list[tuple[int, float]]) -> None:
    """CSV with header d,value; one row per (strictly increasing) d."""
    lines = ["d,value"]
    for d, value in rows:
        lines.append(f"{int(d)},{float(value)!r}")
    _atomic_write_text(path, "\n".join(lines) + "\n")


def read_curve(path: str | Path) -> list[tuple[int, float]]:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != ["d", "value"]:
            raise DomainError(f"{path}: expected header 'd,value', got {header}")
        rows = []
        for line in reader:
            if len(line) != 2:
                raise DomainError(f"{path}: malformed row {line}")
            rows.append((int(line[0]), float(line[1])))
    return rows
