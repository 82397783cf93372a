"""Exact combinatorial descriptions of the three polytope families.

``GHZ`` is the ambient regular simplex of all GHZ-diagonal states,
``BISEP`` the biseparable polytope (half-scale hypersimplex) and ``FBI``
the fully-biseparable polytope (hull of a simplex and a cube).  Everything
here works in p-coordinates; the normalization sum(p) = 1 is treated as an
ambient constraint, not a facet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import InvalidArgumentError, UnsupportedSizeError
from .indices import check_qubit_count, dimension, to_bits
from .states import GhzDiagonalState, density_from_prob

FAMILIES = ("GHZ", "BISEP", "FBI")

# full-list enumeration caps; streaming iterators work above them
BISEP_VERTEX_CAP = 8
FBI_VERTEX_CAP = 5
FBI_FACET_CAP = 8


@dataclass(frozen=True)
class Facet:
    """Affine condition coeffs . p >= offset in the ambient simplex."""

    family: str
    label: str
    coeffs: np.ndarray = field()
    offset: float = 0.0

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    def value(self, state: GhzDiagonalState) -> float:
        """Slack coeffs . p - offset; nonnegative on the polytope."""
        return float(self.coeffs @ state.p) - self.offset

    def satisfies(self, state: GhzDiagonalState, eps: float = 1e-12) -> bool:
        return self.value(state) >= -eps

    def saturates(self, state: GhzDiagonalState, eps: float = 1e-9) -> bool:
        return abs(self.value(state)) <= eps


@dataclass(frozen=True)
class Ball:
    center: GhzDiagonalState
    radius: float


def _unit(d: int, i: int) -> np.ndarray:
    e = np.zeros(d)
    e[i] = 1.0
    return e


def facets_ghz(n: int) -> list[Facet]:
    """d facets p_i >= 0."""
    check_qubit_count(n)
    d = dimension(n)
    return [Facet("GHZ", f"p_{to_bits(i, n)}>=0", _unit(d, i)) for i in range(d)]


def facets_bisep(n: int) -> list[Facet]:
    """2d facets: p_i <= 1/2 (truncation) and p_i >= 0 (inherited)."""
    check_qubit_count(n)
    d = dimension(n)
    out = []
    for i in range(d):
        out.append(Facet("BISEP", f"p_{to_bits(i, n)}<=1/2", -_unit(d, i), -0.5))
    for i in range(d):
        out.append(Facet("BISEP", f"p_{to_bits(i, n)}>=0", _unit(d, i)))
    return out


def iter_facets_fbi(n: int) -> Iterator[Facet]:
    """d^2/2 facets p_i + p_~i - p_j + p_~j >= 0 over (pair {i,~i}, index j)."""
    check_qubit_count(n)
    d = dimension(n)
    for i in range(d // 2):
        for j in range(d):
            c = _unit(d, i) + _unit(d, d - 1 - i) - _unit(d, j) + _unit(d, d - 1 - j)
            label = f"p_{to_bits(i, n)}+p_{to_bits(d - 1 - i, n)}>=p_{to_bits(j, n)}-p_{to_bits(d - 1 - j, n)}"
            yield Facet("FBI", label, c)


def facets_fbi(n: int) -> list[Facet]:
    check_qubit_count(n, FBI_FACET_CAP)
    return list(iter_facets_fbi(n))


def extreme_points_ghz(n: int) -> list[GhzDiagonalState]:
    """The d vertices: pure GHZ projectors."""
    check_qubit_count(n)
    d = dimension(n)
    if n > BISEP_VERTEX_CAP:
        raise UnsupportedSizeError(f"n={n} exceeds the vertex enumeration cap")
    return [GhzDiagonalState.vertex(n, i) for i in range(d)]


def midpoint(n: int, i: int, j: int) -> GhzDiagonalState:
    """m_{i,j} = (v_i + v_j)/2, the midpoint of a simplex edge."""
    if i == j:
        raise InvalidArgumentError("midpoint needs two distinct indices")
    d = dimension(n)
    p = np.zeros(d)
    p[i] = 0.5
    p[j] = 0.5
    return GhzDiagonalState(n, p)


def iter_extreme_points_bisep(n: int) -> Iterator[GhzDiagonalState]:
    check_qubit_count(n)
    d = dimension(n)
    for i, j in combinations(range(d), 2):
        yield midpoint(n, i, j)


def extreme_points_bisep(n: int) -> list[GhzDiagonalState]:
    """All d(d-1)/2 edge midpoints, lexicographic pair order."""
    check_qubit_count(n, BISEP_VERTEX_CAP)
    return list(iter_extreme_points_bisep(n))


def cube_vertex(n: int, sigma) -> GhzDiagonalState:
    """v_sigma = (2/d) sum_{i in sigma} v_i for a selection of one index per pair."""
    d = dimension(n)
    sigma = sorted(set(sigma))
    if len(sigma) != d // 2:
        raise InvalidArgumentError(
            f"selection has {len(sigma)} indices, expected {d // 2}"
        )
    taken = set(sigma)
    for i in sigma:
        if d - 1 - i in taken and i != d - 1 - i:
            raise InvalidArgumentError(
                f"selection contains both {to_bits(i, n)} and its flip"
            )
    p = np.zeros(d)
    p[sigma] = 2.0 / d
    return GhzDiagonalState(n, p)


def iter_selections(n: int) -> Iterator[tuple[int, ...]]:
    """The 2^(d/2) selections sigma, one index from each pair {i, ~i}."""
    d = dimension(n)
    for bits in range(1 << (d // 2)):
        yield tuple(
            (d - 1 - i) if (bits >> i) & 1 else i for i in range(d // 2)
        )


def iter_extreme_points_fbi(n: int) -> Iterator[GhzDiagonalState]:
    check_qubit_count(n)
    d = dimension(n)
    for i in range(d // 2):
        yield midpoint(n, i, d - 1 - i)
    for sigma in iter_selections(n):
        yield cube_vertex(n, sigma)


def extreme_points_fbi(n: int) -> list[GhzDiagonalState]:
    """d/2 diagonal midpoints followed by the 2^(d/2) cube vertices."""
    check_qubit_count(n, FBI_VERTEX_CAP)
    return list(iter_extreme_points_fbi(n))


def vertex_count(family: str, n: int) -> int:
    d = dimension(n)
    if family == "GHZ":
        return d
    if family == "BISEP":
        return d * (d - 1) // 2
    if family == "FBI":
        return d // 2 + (1 << (d // 2))
    raise InvalidArgumentError(f"unknown family {family!r}")


def facet_count(family: str, n: int) -> int:
    d = dimension(n)
    if family == "GHZ":
        return d
    if family == "BISEP":
        return 2 * d
    if family == "FBI":
        return d * d // 2
    raise InvalidArgumentError(f"unknown family {family!r}")


def simplex_height(n: int) -> float:
    """Distance from a vertex to the opposite facet's center: sqrt(d/(d-1))."""
    d = dimension(n)
    return float(np.sqrt(d / (d - 1)))


_HS_CONSTANT: float | None = None


def _hs_proportionality_constant() -> float:
    """Fit ||rho_p - rho_q||_HS / ||p - q||_2 on random pairs and pin it.

    The GHZ eigenbasis is orthonormal, so some exact constant exists; we
    measure it instead of deriving it, and assert it is stable.
    """
    global _HS_CONSTANT
    if _HS_CONSTANT is None:
        rng = np.random.default_rng(20260825)
        ratios = []
        for _ in range(16):
            n = int(rng.integers(1, 4))
            d = dimension(n)
            p = rng.dirichlet(np.ones(d))
            q = rng.dirichlet(np.ones(d))
            frob = np.linalg.norm(
                density_from_prob(GhzDiagonalState(n, p))
                - density_from_prob(GhzDiagonalState(n, q))
            )
            ratios.append(frob / np.linalg.norm(p - q))
        ratios = np.asarray(ratios)
        if np.ptp(ratios) > 1e-12:
            raise AssertionError(f"HS/p-space ratio not constant: {ratios}")
        const = float(np.round(ratios.mean()))
        if abs(const - ratios.mean()) > 1e-12:
            raise AssertionError(f"HS/p-space ratio not a round constant: {ratios.mean()}")
        _HS_CONSTANT = const
    return _HS_CONSTANT


def hs_distance(s1: GhzDiagonalState, s2: GhzDiagonalState) -> float:
    """Hilbert-Schmidt (Frobenius) distance, computed in p-coordinates."""
    if s1.n != s2.n:
        raise InvalidArgumentError("states have different qubit counts")
    return _hs_proportionality_constant() * float(np.linalg.norm(s1.p - s2.p))


def facet_distance(state: GhzDiagonalState, facet: Facet) -> float:
    """HS distance from the state to the facet's hyperplane within sum(p)=1.

    Distance to the affine set {sum(q) = 1, coeffs . q = offset}: project
    the facet normal onto the sum(q) = 0 hyperplane and divide.
    """
    c = facet.coeffs
    if c.size != state.d:
        raise InvalidArgumentError("facet dimension does not match the state")
    t = c - c.mean()
    norm = np.linalg.norm(t)
    if norm == 0.0:
        raise InvalidArgumentError("facet normal is parallel to the simplex")
    return _hs_proportionality_constant() * abs(facet.value(state)) / float(norm)


def inscribed_ball(family: str, n: int) -> Ball:
    """The largest ball: centered at the maximally mixed state for all three
    families, radius sqrt(1/(d(d-1)))."""
    if family not in FAMILIES:
        raise InvalidArgumentError(f"unknown family {family!r}")
    check_qubit_count(n)
    d = dimension(n)
    return Ball(GhzDiagonalState.uniform(n), float(np.sqrt(1.0 / (d * (d - 1)))))


def min_center_facet_distance(family: str, n: int) -> float:
    """Minimum distance from the maximally mixed state to the family's facets.

    Verification companion to :func:`inscribed_ball`.
    """
    center = GhzDiagonalState.uniform(n)
    if family == "GHZ":
        facets = facets_ghz(n)
    elif family == "BISEP":
        facets = facets_bisep(n)
    elif family == "FBI":
        facets = iter_facets_fbi(n)
    else:
        raise InvalidArgumentError(f"unknown family {family!r}")
    return min(facet_distance(center, f) for f in facets)
