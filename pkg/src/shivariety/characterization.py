"""Deciding whether an integer tuple over the positive roots is an alcove.

Two criteria are implemented separately and share nothing but the root
system:

* the coroot form: ``k_a + k_b <= k_c <= k_a + k_b + 1`` whenever
  ``c^vee = a^vee + b^vee``;
* the norm form: ``|a|^2 k_a + |b|^2 k_b + 1 <= |a+b|^2 (k_{a+b} + 1)
  <= |a|^2 k_a + |b|^2 k_b + |a|^2 + |b|^2 + |a+b|^2 - 1`` whenever
  ``a + b`` is a root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .root_system import RootSystem

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class Violation:
    """The first failing inequality for a tuple."""

    criterion: str
    triple: Triple
    roots: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]
    values: Tuple[int, int, int]
    lower: Fraction
    middle: Fraction
    upper: Fraction

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "triple": list(self.triple),
            "roots": [list(r) for r in self.roots],
            "values": list(self.values),
            "bounds": [str(self.lower), str(self.middle), str(self.upper)],
        }

    def __str__(self) -> str:
        a, b, c = (str(list(r)) for r in self.roots)
        return (
            f"{self.criterion} inequality fails at ({a}, {b}) -> {c}: "
            f"need {self.lower} <= {self.middle} <= {self.upper}"
        )


@lru_cache(maxsize=None)
def coroot_triples(rs: RootSystem) -> Tuple[Triple, ...]:
    """Index triples ``(a, b, c)``, ``a < b``, with ``c^vee = a^vee + b^vee``."""
    where = {d: k for k, d in enumerate(rs.coroot_coords)}
    out = []
    for a, da in enumerate(rs.coroot_coords):
        for b in range(a + 1, rs.num_positive):
            s = tuple(x + y for x, y in zip(da, rs.coroot_coords[b]))
            c = where.get(s)
            if c is not None:
                out.append((a, b, c))
    return tuple(out)


@lru_cache(maxsize=None)
def norm_triples(rs: RootSystem) -> Tuple[Triple, ...]:
    """Index triples ``(a, b, c)``, ``a < b``, with ``roots[c] = roots[a] + roots[b]``."""
    out = []
    roots = rs.positive_roots
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            if rs.is_root(s):
                out.append((a, b, rs.index(s)))
    return tuple(out)


def alcove_triples(rs: RootSystem) -> dict:
    return {"coroot": coroot_triples(rs), "norm": norm_triples(rs)}


def _check_length(rs: RootSystem, t: Sequence[int]) -> None:
    if len(t) != rs.num_positive:
        raise ValueError(f"expected {rs.num_positive} entries for {rs.label}, got {len(t)}")


def first_coroot_violation(rs: RootSystem, t: Sequence[int]) -> Optional[Violation]:
    _check_length(rs, t)
    for a, b, c in coroot_triples(rs):
        lo = t[a] + t[b]
        if not lo <= t[c] <= lo + 1:
            roots = rs.positive_roots
            return Violation(
                "coroot", (a, b, c), (roots[a], roots[b], roots[c]),
                (t[a], t[b], t[c]), Fraction(lo), Fraction(t[c]), Fraction(lo + 1),
            )
    return None


def first_norm_violation(rs: RootSystem, t: Sequence[int]) -> Optional[Violation]:
    _check_length(rs, t)
    q = rs.norms_sq
    for a, b, c in norm_triples(rs):
        base = q[a] * t[a] + q[b] * t[b]
        mid = q[c] * (t[c] + 1)
        lo = base + 1
        hi = base + q[a] + q[b] + q[c] - 1
        if not lo <= mid <= hi:
            roots = rs.positive_roots
            return Violation(
                "norm", (a, b, c), (roots[a], roots[b], roots[c]),
                (t[a], t[b], t[c]), Fraction(lo), Fraction(mid), Fraction(hi),
            )
    return None


def is_alcove_coroot_form(rs: RootSystem, t: Sequence[int]) -> bool:
    return first_coroot_violation(rs, t) is None


def is_alcove_norm_form(rs: RootSystem, t: Sequence[int]) -> bool:
    return first_norm_violation(rs, t) is None


def is_alcove(rs: RootSystem, t: Sequence[int], criterion: str = "coroot") -> bool:
    if criterion == "coroot":
        return is_alcove_coroot_form(rs, t)
    if criterion == "norm":
        return is_alcove_norm_form(rs, t)
    if criterion == "both":
        c, n = is_alcove_coroot_form(rs, t), is_alcove_norm_form(rs, t)
        if c != n:
            raise AssertionError(f"criteria disagree on {tuple(t)}")
        return c
    raise ValueError(f"unknown criterion {criterion!r}")


def coroot_form_batch(rs: RootSystem, tuples) -> np.ndarray:
    """Index of the first violated coroot triple per row, ``-1`` for alcoves."""
    arr = np.ascontiguousarray(tuples, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != rs.num_positive:
        raise ValueError(f"expected an (N, {rs.num_positive}) array")
    triples = np.array(coroot_triples(rs), dtype=np.int64).reshape(-1, 3)
    return kernels.coroot_first_violation(arr, triples)


def norm_form_batch(rs: RootSystem, tuples: Iterable[Sequence[int]]) -> List[bool]:
    """Norm-form verdicts in exact arithmetic, one per tuple."""
    q = rs.norms_sq
    if all(x.denominator == 1 for x in q):
        q = tuple(int(x) for x in q)
    checks = [
        (a, b, c, q[a], q[b], q[c], q[a] + q[b] + q[c] - 1) for a, b, c in norm_triples(rs)
    ]
    out = []
    for t in tuples:
        ok = True
        for a, b, c, qa, qb, qc, slack in checks:
            base = qa * t[a] + qb * t[b]
            mid = qc * (t[c] + 1)
            if mid < base + 1 or mid > base + slack:
                ok = False
                break
        out.append(ok)
    return out


def box(m: int, radius: int) -> np.ndarray:
    """Every integer vector in ``[-radius, radius]^m`` as rows."""
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * m), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def equivalence_sweep(rs: RootSystem, radius: int = 3) -> dict:
    """Compare both criteria on the full box; returns counts and disagreements."""
    tuples = box(rs.num_positive, radius)
    coroot = kernels.coroot_first_violation(
        tuples, np.array(coroot_triples(rs), dtype=np.int64).reshape(-1, 3)
    ) < 0
    norm = np.array(norm_form_batch(rs, tuples.tolist()), dtype=bool)
    bad = np.nonzero(coroot != norm)[0]
    return {
        "type": rs.label,
        "tuples": int(len(tuples)),
        "alcoves": int(coroot.sum()),
        "disagreements": [tuple(int(v) for v in tuples[i]) for i in bad[:20]],
        "num_disagreements": int(len(bad)),
    }
