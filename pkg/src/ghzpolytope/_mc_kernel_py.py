"""Pure-NumPy fallback for the Monte-Carlo hit-counting kernel.

Decision-for-decision identical to the compiled ``_mc_kernel``: both
evaluate the same float comparisons on the same per-row reductions, so hit
counts match bit-for-bit between backends.
"""

from __future__ import annotations

import numpy as np

FAMILY_GENUINE = 0
FAMILY_BISEP_MINUS_FBI = 1
FAMILY_FBI = 2
FAMILY_MERMIN = 3

BACKEND = "python"


def count_hits(p: np.ndarray, family: int, nu: float) -> int:
    """Count rows of the (m, d) probability matrix falling in the region."""
    d = p.shape[1]
    if family == FAMILY_MERMIN:
        return int(np.count_nonzero(p[:, 0] - p[:, d - 1] > nu))
    flipped = p[:, ::-1]
    maxp = p.max(axis=1)
    maxdiff = np.abs(p - flipped).max(axis=1)
    minsum = (p + flipped).min(axis=1)
    if family == FAMILY_GENUINE:
        return int(np.count_nonzero(maxp > 0.5))
    if family == FAMILY_FBI:
        return int(np.count_nonzero(maxdiff <= minsum))
    if family == FAMILY_BISEP_MINUS_FBI:
        return int(np.count_nonzero((maxp <= 0.5) & (maxdiff > minsum)))
    raise ValueError(f"unknown family code {family}")
