"""Irreducible components of the Shi variety.

Every Shi coefficient splits as ``k(w, theta) = P_theta(w) + lambda_theta(w)``
where ``P_theta`` is the linear form whose coefficients are the coroot
coordinates of ``theta`` and ``0 <= lambda_theta(w) <= h(theta^vee) - 1``.
Components are indexed by *admitted* vectors ``lambda``; they are never
materialized as point sets.  An integer point lies in the component of
``lambda`` exactly when its lambda-vector is ``lambda``.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .affine_weyl import AffineElement, AffineWeylGroup, affine_weyl_group
from .characterization import first_coroot_violation
from .phi_rep import apply, phi_representation
from .root_system import RootSystem, Vector, build_root_system

HUGE_FAMILIES = {("E", 7), ("E", 8)}
FINITE_LIMIT = 10**6


class ResourceGuardError(RuntimeError):
    """A computation was refused because it needs an explicit opt-in."""


class NotAdmissibleError(ValueError):
    pass


class NotAdmittedError(ValueError):
    pass


# -- linear parts and lambda vectors -------------------------------------------


def linear_part(rs: RootSystem) -> Tuple[Vector, ...]:
    """Coefficients of ``P_theta`` over ``X_{alpha_1..alpha_n}`` for each positive root."""
    return rs.coroot_coords


def lambda_of_shi(rs: RootSystem, k: Sequence[int]) -> Vector:
    """``lambda_theta = k_theta - sum_i d_i k_{alpha_i}`` with ``d = theta^vee`` coordinates."""
    simple = [k[i] for i in rs.simple_indices]
    return tuple(
        kt - sum(d * s for d, s in zip(coroot, simple))
        for kt, coroot in zip(k, rs.coroot_coords)
    )


def lambda_array(rs: RootSystem, shi: np.ndarray) -> np.ndarray:
    """Row-wise :func:`lambda_of_shi` for an ``(N, m)`` array."""
    shi = np.asarray(shi, dtype=np.int64)
    d = np.array(rs.coroot_coords, dtype=np.int64)
    return shi - shi[:, list(rs.simple_indices)] @ d.T


def is_admissible(rs: RootSystem, values: Sequence[int]) -> bool:
    return len(values) == rs.num_positive and all(
        0 <= v < h for v, h in zip(values, rs.coheights)
    )


@dataclass(frozen=True)
class AdmissibleVector:
    """Naturals ``lambda_theta`` in ``[0, h(theta^vee) - 1]`` for each positive root."""

    rs: RootSystem = field(compare=True)
    values: Vector = field(compare=True)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not is_admissible(self.rs, self.values):
            raise NotAdmissibleError(
                f"{self.values} violates the bounds 0 <= lambda < h(theta^vee) "
                f"{self.rs.coheights} for {self.rs.label}"
            )

    @cached_property
    def admitted(self) -> bool:
        return first_coroot_violation(self.rs, self.values) is None

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __lt__(self, other: "AdmissibleVector") -> bool:
        return self.values < other.values


def lambda_vector(group: AffineWeylGroup, w: AffineElement) -> AdmissibleVector:
    """The admitted vector of the component containing ``iota(w)``."""
    lam = lambda_of_shi(group.rs, group.shi_vector(w))
    if not is_admissible(group.rs, lam):
        raise AssertionError(f"lambda-vector {lam} out of bounds for {group.rs.label}")
    return AdmissibleVector(group.rs, lam)


def is_admitted(rs: RootSystem, v) -> bool:
    """Whether an admissible vector satisfies the coroot inequalities of an alcove."""
    if isinstance(v, AdmissibleVector):
        return v.admitted
    return AdmissibleVector(rs, tuple(v)).admitted


def admissible_vectors(rs: RootSystem, limit: int = 10**6):
    """Every admissible vector (brute force; refuses above ``limit`` candidates)."""
    total = prod(rs.coheights)
    if total > limit:
        raise ResourceGuardError(
            f"{rs.label} has {total} admissible vectors; pass a larger limit to enumerate them"
        )
    for values in itertools.product(*(range(h) for h in rs.coheights)):
        yield AdmissibleVector(rs, values)


def admitted_by_filter(rs: RootSystem, limit: int = 10**6) -> List[Vector]:
    """Admitted vectors found by filtering all admissible ones (the brute-force route)."""
    return sorted(v.values for v in admissible_vectors(rs, limit) if v.admitted)


# -- component table ---------------------------------------------------------------


@dataclass
class Component:
    vector: Vector
    alcove_word: List[int]
    finite_representatives: List[List[int]] = field(default_factory=list)

    @property
    def orbit_count(self) -> int:
        return len(self.finite_representatives)

    def to_dict(self) -> dict:
        return {
            "vector": list(self.vector),
            "alcove_word": list(self.alcove_word),
            "finite_representatives": [list(w) for w in self.finite_representatives],
            "orbit_count": self.orbit_count,
        }


@dataclass
class ComponentTable:
    """Admitted vectors of one type, sorted, with their parallelepiped alcoves."""

    rs: RootSystem
    components: List[Component]
    formula_count: int

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def vectors(self) -> List[Vector]:
        return [c.vector for c in self.components]

    def by_vector(self) -> Dict[Vector, Component]:
        return {c.vector: c for c in self.components}

    def to_dict(self) -> dict:
        return {
            "family": self.rs.family,
            "rank": self.rs.rank,
            "positive_roots": [list(r) for r in self.rs.positive_roots],
            "count": self.count,
            "formula_count": self.formula_count,
            "index_of_connection": self.rs.index_of_connection,
            "components": [c.to_dict() for c in self.components],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "ComponentTable":
        rs = build_root_system(data["family"], int(data["rank"]))
        if [list(r) for r in rs.positive_roots] != data["positive_roots"]:
            raise ValueError("root order in file does not match this build")
        comps = [
            Component(
                tuple(c["vector"]),
                list(c["alcove_word"]),
                [list(w) for w in c.get("finite_representatives", [])],
            )
            for c in data["components"]
        ]
        return cls(rs, comps, int(data["formula_count"]))

    @classmethod
    def from_json(cls, text: str) -> "ComponentTable":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        """One row per admitted vector; words are space-separated, ``e`` is the empty word."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "vector", "alcove_word", "finite_representatives", "orbit_count"])
        for i, c in enumerate(self.components):
            writer.writerow([
                i,
                " ".join(map(str, c.vector)),
                _word_text(c.alcove_word),
                ";".join(_word_text(w) for w in c.finite_representatives),
                c.orbit_count,
            ])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, rs: RootSystem, text: str) -> "ComponentTable":
        comps = []
        for row in csv.DictReader(io.StringIO(text)):
            reps = row["finite_representatives"]
            comps.append(Component(
                tuple(int(t) for t in row["vector"].split()),
                _parse_word_text(row["alcove_word"]),
                [_parse_word_text(w) for w in reps.split(";")] if reps else [],
            ))
        return cls(rs, comps, rs.component_count())


def _word_text(word: Sequence[int]) -> str:
    return " ".join(map(str, word)) if word else "e"


def _parse_word_text(text: str) -> List[int]:
    text = text.strip()
    return [] if text == "e" else [int(t) for t in text.split()]


def _guard_huge(rs: RootSystem, allow_huge: bool) -> None:
    if (rs.family, rs.rank) in HUGE_FAMILIES and not allow_huge:
        raise ResourceGuardError(
            f"enumerating components of {rs.label} ({rs.component_count()} of them) "
            "requires allow_huge=True (--allow-huge)"
        )


def enumerate_admitted(
    rs: RootSystem,
    allow_huge: bool = False,
    with_representatives: bool = False,
    finite_limit: int = FINITE_LIMIT,
) -> ComponentTable:
    """Admitted vectors via BFS over the alcoves of the fundamental parallelepiped.

    Inside the parallelepiped the simple-root coefficients vanish, so each
    alcove's Shi vector is its own lambda-vector.
    """
    _guard_huge(rs, allow_huge)
    group = affine_weyl_group(rs)
    found = group.search(parallelepiped=True)
    rows = sorted(range(len(found)), key=lambda i: tuple(found.shi[i]))
    comps = [
        Component(tuple(int(v) for v in found.shi[i]), found.word(i)) for i in rows
    ]
    table = ComponentTable(rs, comps, rs.component_count())
    if with_representatives:
        reps = finite_partition(group, finite_limit)
        for c in table.components:
            c.finite_representatives = [group.finite_word(u) for u in reps.get(c.vector, [])]
    return table


# -- action on components and orbit structure ---------------------------------------


def finite_partition(
    group: AffineWeylGroup, limit: int = FINITE_LIMIT
) -> Dict[Vector, List[AffineElement]]:
    """Group the finite Weyl group by lambda-vector (each list sorted by reduced word)."""
    found = group.finite_search(limit)
    lams = lambda_array(group.rs, found.shi)
    parts: Dict[Vector, List[Tuple[Tuple[int, List[int]], AffineElement]]] = defaultdict(list)
    for i, lam in enumerate(lams):
        w = found.element(i)
        word = group.finite_word(w)
        parts[tuple(int(v) for v in lam)].append(((len(word), word), w))
    return {k: [w for _, w in sorted(v, key=lambda t: t[0])] for k, v in parts.items()}


def _admitted(rs: RootSystem, lam) -> Vector:
    v = lam if isinstance(lam, AdmissibleVector) else AdmissibleVector(rs, tuple(lam))
    if not v.admitted:
        raise NotAdmittedError(f"{v.values} is admissible but not admitted for {rs.label}")
    return v.values


def act_on_component(group: AffineWeylGroup, w: AffineElement, lam) -> AdmissibleVector:
    """``w <> lambda``: push the parallelepiped alcove of ``lambda`` by ``F(w_bar)``."""
    rs = group.rs
    values = _admitted(rs, lam)
    f = phi_representation(group).isometry_of(group.finite(w))
    image = apply(f, values)
    return lambda_vector(group, group.element_from_shi_vector(image, check=False))


def finite_elements_in_component(
    group: AffineWeylGroup, lam, limit: int = FINITE_LIMIT
) -> List[AffineElement]:
    values = _admitted(group.rs, lam)
    return finite_partition(group, limit).get(values, [])


@dataclass
class OrbitSummary:
    """Z-Phi orbits met by a component inside ``W`` plus a ball of alcoves."""

    vector: Vector
    orbit_count: int
    finite_per_orbit: List[int]  # elements of W met in each orbit
    points_seen: int


def lattice_orbit_table(
    group: AffineWeylGroup, radius: int = 6, limit: int = FINITE_LIMIT
) -> Dict[Vector, OrbitSummary]:
    """Translation orbits met by every component, from one pass over the sample.

    ``tau_y (tau_x u) = tau_{x+y} u`` so the orbit of a point is labelled by its
    finite part ``u``.  Points are drawn from ``W`` and from every element of
    length at most ``radius``.
    """
    orbits: Dict[Vector, Dict[bytes, set]] = defaultdict(lambda: defaultdict(set))
    for found in (group.finite_search(limit), group.ball(radius)):
        lams = lambda_array(group.rs, found.shi)
        for lam, perm, x in zip(lams, found.perm, found.translation):
            orbits[tuple(int(v) for v in lam)][perm.tobytes()].add(tuple(int(c) for c in x))
    zero = (0,) * group.rank
    out = {}
    for lam, by_part in orbits.items():
        per_orbit = [sum(1 for x in xs if x == zero) for xs in by_part.values()]
        seen = sum(len(xs) for xs in by_part.values())
        out[lam] = OrbitSummary(lam, len(by_part), per_orbit, seen)
    return out


def lattice_orbits_in_component(
    group: AffineWeylGroup, lam, radius: int = 6, limit: int = FINITE_LIMIT
) -> OrbitSummary:
    """Translation orbits in the component of ``lam`` (see :func:`lattice_orbit_table`)."""
    values = _admitted(group.rs, lam)
    return lattice_orbit_table(group, radius, limit)[values]


def generator_components(group: AffineWeylGroup) -> Dict[int, Vector]:
    """``i -> lambda(s_i)`` for every generator ``s_0, ..., s_n``."""
    return {
        i: lambda_vector(group, group.generator(i)).values for i in range(group.rank + 1)
    }


def find_translation(
    group: AffineWeylGroup, target: Sequence[int], radius: int = 4
) -> Optional[Tuple[int, ...]]:
    """A lattice vector ``x`` with ``iota(tau_x) = target``, searched in ``[-radius, radius]^n``."""
    target = tuple(int(t) for t in target)
    rng = range(-radius, radius + 1)
    for x in itertools.product(rng, repeat=group.rank):
        if group.shi_vector(group.translation(x)) == target:
            return x
    return None
