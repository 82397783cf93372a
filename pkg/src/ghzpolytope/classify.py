"""Membership tests for GHZ-diagonal states.

Three closed-form criteria (biseparability, genuinely-multipartite
concurrence, full biseparability) plus the brute-force all-bipartitions
partial-transpose oracle that the full-biseparability test must agree with.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .indices import (
    DENSE_MAX_QUBITS,
    Bipartition,
    all_bipartitions,
    check_qubit_count,
    to_bits,
)
from .states import EPS_PSD, GhzDiagonalState, az_from_prob, density_from_prob

# strict-inequality decisions; the criteria are exact linear forms of the
# input, so the only error is input rounding
EPS_CLASS = 1e-12
# margin below which a decision is flagged as sitting on the boundary
EPS_BOUNDARY = 1e-9


@dataclass(frozen=True)
class ClassificationResult:
    is_biseparable: bool
    is_fully_biseparable: bool
    gm_concurrence: float
    witness: tuple | None
    boundary: bool
    region: str  # "genuine" | "bisep_not_fbi" | "fully_biseparable"

    def to_json_dict(self, n: int) -> dict:
        witness = None
        if self.witness is not None:
            witness = [to_bits(i, n) for i in self.witness]
        return {
            "biseparable": self.is_biseparable,
            "fully_biseparable": self.is_fully_biseparable,
            "gm_concurrence": self.gm_concurrence,
            "witness": witness,
            "boundary": self.boundary,
            "region": self.region,
        }


def is_biseparable(state: GhzDiagonalState, eps: float = EPS_CLASS) -> tuple[bool, int | None]:
    """True iff p_i <= 1/2 for every i; witness is the first index above 1/2."""
    over = np.flatnonzero(state.p > 0.5 + eps)
    if over.size:
        return False, int(over[0])
    return True, None


def gm_concurrence(state: GhzDiagonalState) -> float:
    """max{0, 2 max_i p_i - 1}: zero exactly on the biseparable polytope."""
    return max(0.0, 2.0 * float(state.p.max()) - 1.0)


def is_fully_biseparable(
    state: GhzDiagonalState, eps: float = EPS_CLASS
) -> tuple[bool, tuple[int, int] | None]:
    """True iff |z_j| <= a_i for all i, j; witness is the first violating (i, j)."""
    a, z = az_from_prob(state)
    absz = np.abs(z)
    if absz.max() <= a.min() + eps:
        return True, None
    # lexicographically first violating pair (i from a, j from z)
    for i in range(state.d):
        bad = np.flatnonzero(absz > a[i] + eps)
        if bad.size:
            return False, (i, int(bad[0]))
    raise AssertionError("unreachable: max |z| exceeded min a but no pair found")


def partial_transpose(mat: np.ndarray, n: int, bipartition: Bipartition) -> np.ndarray:
    """Partial transpose over the S side: swap S-subsystem row/column bits."""
    d = 1 << n
    if mat.shape != (d, d):
        raise InvalidArgumentError(f"matrix shape {mat.shape} does not match n={n}")
    m = bipartition.mask
    idx = np.arange(d)
    rows = (idx & ~m)[:, None] | (idx & m)[None, :]
    cols = (idx & m)[:, None] | (idx & ~m)[None, :]
    return mat[rows, cols]


def is_ppt_bipartition(state: GhzDiagonalState, bipartition: Bipartition) -> bool:
    mat = density_from_prob(state)
    pt = partial_transpose(mat, state.n, bipartition)
    return float(np.linalg.eigvalsh(pt).min()) >= -EPS_PSD


def is_ppt_all_bipartitions(state: GhzDiagonalState) -> bool:
    """Brute-force oracle: min eigenvalue of every canonical partial transpose."""
    check_qubit_count(state.n, DENSE_MAX_QUBITS)
    if state.n == 1:
        return True
    mat = density_from_prob(state)
    for bp in all_bipartitions(state.n):
        pt = partial_transpose(mat, state.n, bp)
        if float(np.linalg.eigvalsh(pt).min()) < -EPS_PSD:
            return False
    return True


def classify(
    state: GhzDiagonalState,
    eps: float = EPS_CLASS,
    boundary_eps: float = EPS_BOUNDARY,
) -> ClassificationResult:
    """Place the state in exactly one of the three regions of the simplex."""
    bisep, wit_b = is_biseparable(state, eps)
    fbi, wit_f = is_fully_biseparable(state, eps)
    conc = gm_concurrence(state)

    a, z = az_from_prob(state)
    margin_b = abs(float(state.p.max()) - 0.5)
    margin_f = abs(float(np.abs(z).max()) - float(a.min()))
    boundary = margin_b <= boundary_eps or margin_f <= boundary_eps

    if not bisep:
        region = "genuine"
        witness = (wit_b,)
    elif not fbi:
        region = "bisep_not_fbi"
        witness = wit_f
    else:
        region = "fully_biseparable"
        witness = None
    return ClassificationResult(
        is_biseparable=bisep,
        is_fully_biseparable=fbi,
        gm_concurrence=conc,
        witness=witness,
        boundary=boundary,
        region=region,
    )
