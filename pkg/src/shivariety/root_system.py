"""Irreducible crystallographic root systems in exact integer coordinates.

Roots are integer vectors in the basis of simple roots.  Every pairing is
routed through the Cartan matrix, with the convention

    cartan[i][j] = <alpha_j, alpha_i^vee>

(row index = coroot).  Squared lengths are normalized so that short roots
have length 1; long roots then have squared length 2 or 3.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Dict, List, Sequence, Tuple

import sympy

Vector = Tuple[int, ...]

VALID_RANKS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootSystemError(ValueError):
    """Invalid Cartan type or a value that is not a root."""


def _dynkin(family: str, n: int) -> Tuple[List[Fraction], List[Tuple[int, int]]]:
    """Simple-root squared lengths and the edges of the Dynkin graph (0-based)."""
    if family == "A":
        norms = [1] * n
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "B":
        if n == 2:
            # B2 is labelled with the short simple root first, so that
            # positive roots read (alpha, beta, alpha+beta, 2alpha+beta).
            norms = [1, 2]
        else:
            norms = [2] * (n - 1) + [1]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "C":
        norms = [1] * (n - 1) + [2]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "D":
        norms = [1] * n
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif family == "E":
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
        norms = [1] * n
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    elif family == "F":
        norms = [2, 2, 1, 1]
        edges = [(0, 1), (1, 2), (2, 3)]
    elif family == "G":
        norms = [1, 3]
        edges = [(0, 1)]
    else:  # pragma: no cover - guarded by validate_type
        raise RootSystemError(f"unknown family {family!r}")
    return [Fraction(x) for x in norms], edges


def validate_type(family: str, rank: int) -> None:
    if family not in VALID_RANKS:
        raise RootSystemError(f"unknown family {family!r}; expected one of ABCDEFG")
    lo, hi = VALID_RANKS[family]
    if not isinstance(rank, int) or rank < lo or (hi is not None and rank > hi):
        raise RootSystemError(f"invalid rank {rank!r} for family {family}")


def parse_type(label: str) -> Tuple[str, int]:
    """Parse a label such as ``"B3"`` or ``"e6"`` into ``("B", 3)``."""
    label = label.strip()
    if len(label) < 2 or not label[1:].isdigit():
        raise RootSystemError(f"malformed type label {label!r}")
    family, rank = label[0].upper(), int(label[1:])
    validate_type(family, rank)
    return family, rank


def _root_key(coords: Vector) -> Tuple[int, Tuple[int, ...]]:
    # height first; within a height, larger leading coordinates come first
    return (sum(coords), tuple(-c for c in coords))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Cartan data and the ordered positive roots of one type.

    Use :func:`build_root_system` rather than the constructor.
    """

    family: str
    rank: int
    cartan: Tuple[Vector, ...]
    simple_norms: Tuple[Fraction, ...]
    positive_roots: Tuple[Vector, ...]
    coroot_coords: Tuple[Vector, ...]
    norms_sq: Tuple[Fraction, ...]
    index_of_connection: int
    _index: Dict[Vector, int] = field(repr=False, default_factory=dict)

    # -- identity -----------------------------------------------------------

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self) -> int:
        return hash((self.family, self.rank))

    # -- sizes --------------------------------------------------------------

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_indices(self) -> Tuple[int, ...]:
        """Positions of the simple roots in the canonical order."""
        return tuple(self._index[self.simple_root(i)] for i in range(1, self.rank + 1))

    def simple_root(self, i: int) -> Vector:
        """The simple root ``alpha_i`` for ``1 <= i <= rank``."""
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple root index {i} out of range 1..{self.rank}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    # -- lookup -------------------------------------------------------------

    def index(self, root: Sequence[int]) -> int:
        """Position of a positive root in the canonical order."""
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise RootSystemError(f"{tuple(root)} is not a positive root of {self.label}") from None

    def signed_index(self, root: Sequence[int]) -> Tuple[int, int]:
        """Return ``(sign, index)`` with ``root == sign * positive_roots[index]``."""
        root = tuple(root)
        idx = self._index.get(root)
        if idx is not None:
            return 1, idx
        idx = self._index.get(tuple(-c for c in root))
        if idx is not None:
            return -1, idx
        raise RootSystemError(f"{root} is not a root of {self.label}")

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self._index or tuple(-c for c in v) in self._index

    # -- pairings -----------------------------------------------------------

    def simple_pairings(self, x: Sequence[int]) -> Vector:
        """``((x, alpha_i^vee))_i`` for a lattice vector ``x``."""
        return tuple(sum(c * xj for c, xj in zip(row, x)) for row in self.cartan)

    def pairing(self, x: Sequence[int], theta: Sequence[int]) -> int:
        """``(x, theta^vee)`` for an integer vector ``x`` and a root ``theta``."""
        sign, idx = self.signed_index(theta)
        d = self.coroot_coords[idx]
        return sign * sum(di * pi for di, pi in zip(d, self.simple_pairings(x)))

    def reflect(self, theta: Sequence[int], gamma: Sequence[int]) -> Vector:
        """``s_theta(gamma)``."""
        p = self.pairing(gamma, theta)
        return tuple(g - p * t for g, t in zip(gamma, theta))

    def coroot_coordinates(self, theta: Sequence[int]) -> Vector:
        """Coordinates of ``theta^vee`` in the simple coroots."""
        return self.coroot_coords[self.index(theta)]

    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """Exact inner product ``(x, y)``; short roots have ``(a, a) = 1``."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                half = self.simple_norms[i] / 2
                for j, yj in enumerate(y):
                    if yj:
                        total += xi * yj * half * self.cartan[i][j]
        return total

    def norm_sq(self, root: Sequence[int]) -> Fraction:
        _, idx = self.signed_index(root)
        return self.norms_sq[idx]

    # -- heights, special roots ---------------------------------------------

    def heights(self, theta: Sequence[int]) -> Tuple[int, int]:
        """``(h(theta), h(theta^vee))``."""
        idx = self.index(theta)
        return sum(self.positive_roots[idx]), sum(self.coroot_coords[idx])

    @property
    def coheights(self) -> Vector:
        return tuple(sum(d) for d in self.coroot_coords)

    @property
    def highest_root(self) -> Vector:
        return self.positive_roots[-1]

    @property
    def highest_short_root(self) -> Vector:
        """The highest short root; its negative is the root of the affine wall."""
        short = min(self.norms_sq)
        return max(
            (r for r, q in zip(self.positive_roots, self.norms_sq) if q == short),
            key=_root_key,
        )

    def fundamental_weights(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Weights ``omega_j`` in simple-root coordinates, ``(omega_j, alpha_i^vee) = delta_ij``."""
        inv = sympy.Matrix(self.cartan).inv()
        return tuple(
            tuple(Fraction(int(inv[k, j].p), int(inv[k, j].q)) for k in range(self.rank))
            for j in range(self.rank)
        )

    @property
    def weyl_group_order(self) -> int:
        return factorial(self.rank) * prod(self.highest_root) * self.index_of_connection

    def component_count(self) -> int:
        """Number of irreducible components, ``n! * prod c_i``."""
        return factorial(self.rank) * prod(self.highest_root)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
            "coroot_coords": [list(d) for d in self.coroot_coords],
            "norms_sq": [str(q) for q in self.norms_sq],
            "heights": [sum(r) for r in self.positive_roots],
            "coheights": list(self.coheights),
            "highest_root": list(self.highest_root),
            "highest_short_root": list(self.highest_short_root),
            "index_of_connection": self.index_of_connection,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RootSystem":
        rs = build_root_system(data["family"], int(data["rank"]))
        if [list(r) for r in rs.positive_roots] != data["positive_roots"]:
            raise RootSystemError("positive root order does not match this build")
        return rs


def _cartan(norms: Sequence[Fraction], edges: Sequence[Tuple[int, int]]) -> Tuple[Vector, ...]:
    n = len(norms)
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        ip = -max(norms[i], norms[j]) / 2  # (alpha_i, alpha_j)
        c[i][j] = int(2 * ip / norms[i])
        c[j][i] = int(2 * ip / norms[j])
    return tuple(tuple(r) for r in c)


def _positive_roots(cartan: Sequence[Vector]) -> List[Vector]:
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                p = sum(cartan[i][j] * r[j] for j in range(n))
                if p == 0:
                    continue
                s = tuple(rj - (p if j == i else 0) for j, rj in enumerate(r))
                if all(c >= 0 for c in s) and any(s) and s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen, key=_root_key)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Build the root system of type ``family``/``rank`` (cached, deterministic)."""
    family = family.upper()
    validate_type(family, rank)
    norms, edges = _dynkin(family, rank)
    cartan = _cartan(norms, edges)
    roots = _positive_roots(cartan)

    gram = [[norms[i] / 2 * cartan[i][j] for j in range(rank)] for i in range(rank)]
    norms_sq = []
    coroots = []
    for r in roots:
        q = sum(r[i] * r[j] * gram[i][j] for i in range(rank) for j in range(rank))
        norms_sq.append(q)
        d = [r[i] * norms[i] / q for i in range(rank)]
        if any(x.denominator != 1 for x in d):
            raise AssertionError(f"non-integral coroot coordinates for {r} in {family}{rank}")
        coroots.append(tuple(int(x) for x in d))

    det = int(sympy.Matrix(cartan).det())
    return RootSystem(
        family=family,
        rank=rank,
        cartan=cartan,
        simple_norms=tuple(norms),
        positive_roots=tuple(roots),
        coroot_coords=tuple(coroots),
        norms_sq=tuple(norms_sq),
        index_of_connection=det,
        _index={r: k for k, r in enumerate(roots)},
    )


def root_system(label: str) -> RootSystem:
    """Shorthand: ``root_system("G2")``."""
    return build_root_system(*parse_type(label))
