"""Elements of the affine Weyl group ``W_a = ZPhi x| W`` and their Shi coefficients.

An element is stored in normal form ``tau_x w`` where ``x`` is an integer
vector in simple-root coordinates and ``w`` is a finite Weyl group element
given by its integer matrix on those coordinates.  Left multiplication acts
on alcoves by the isometry; right multiplication by a generator crosses a
wall of the alcove, so words act on alcoves from the right.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import sympy

from .root_system import RootSystem, RootSystemError, Vector, build_root_system

Matrix = Tuple[Vector, ...]


class InvalidShiVector(ValueError):
    """A tuple that is not the Shi vector of any alcove."""


class GeneratorIndexError(IndexError):
    pass


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _matvec(a: Matrix, x: Sequence[int]) -> Vector:
    return tuple(sum(r * xi for r, xi in zip(row, x)) for row in a)


@dataclass(frozen=True)
class FiniteWeylElement:
    """Element of the finite Weyl group as an integer matrix on root coordinates."""

    matrix: Matrix

    def __call__(self, x: Sequence[int]) -> Vector:
        return _matvec(self.matrix, x)

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return FiniteWeylElement(_matmul(self.matrix, other.matrix))

    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))


@dataclass(frozen=True)
class AffineElement:
    """``tau_translation * finite``; equality is equality of both fields."""

    translation: Vector
    finite: FiniteWeylElement

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return AffineElement(
            tuple(a + b for a, b in zip(self.translation, self.finite(other.translation))),
            self.finite * other.finite,
        )

    @property
    def is_finite(self) -> bool:
        return not any(self.translation)


def sign_of(k: int) -> int:
    return (k > 0) - (k < 0)


def format_signs(signs: Iterable[int]) -> str:
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in signs)


class AffineWeylGroup:
    """The affine Weyl group of a root system, with its Shi coordinates.

    Generator ``0`` is ``s_0 = tau_theta s_theta`` for the highest short root
    ``theta``; generators ``1..n`` are the simple reflections.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n, m = rs.rank, rs.num_positive
        self.rank = n
        self.m = m
        self.identity = AffineElement((0,) * n, FiniteWeylElement(_identity(n)))

        self._cartan = np.array(rs.cartan, dtype=np.int64)
        self._roots = np.array(rs.positive_roots, dtype=np.int64)
        self._coroots = np.array(rs.coroot_coords, dtype=np.int64)
        # 2 * Gram matrix, integral and symmetric
        sym = sympy.Matrix(n, n, lambda i, j: int(rs.simple_norms[i] * rs.cartan[i][j]))
        self._gram2 = np.array(sym.tolist(), dtype=np.int64)
        # strictly dominant: (alpha_i, z) > 0 for every simple root
        adj = sym.adjugate()
        self._gram2_adj = np.array(adj.tolist(), dtype=np.int64)
        self._gram2_det = int(sym.det())
        self._dominant = np.array(adj * sympy.ones(n, 1), dtype=np.int64).ravel()

        theta = rs.highest_short_root
        self.theta_short = theta
        self._gen_roots = (theta,) + tuple(rs.simple_root(i) for i in range(1, n + 1))
        gens = [AffineElement(theta, self.reflection_matrix(theta))]
        gens += [
            AffineElement((0,) * n, self.reflection_matrix(rs.simple_root(i)))
            for i in range(1, n + 1)
        ]
        self._generators = tuple(gens)

        # left action of each generator's finite part on positive roots
        self._left_perm: List[Tuple[Tuple[int, int], ...]] = []
        for root in self._gen_roots:
            self._left_perm.append(
                tuple(rs.signed_index(rs.reflect(root, beta)) for beta in rs.positive_roots)
            )
        self._gen_shi = tuple(self.shi_vector(g) for g in self._generators)

    def __repr__(self) -> str:
        return f"AffineWeylGroup({self.rs.label})"

    # -- construction -------------------------------------------------------

    def reflection_matrix(self, root: Sequence[int]) -> FiniteWeylElement:
        """Matrix of ``s_root`` on simple-root coordinates."""
        n = self.rank
        cols = [self.rs.reflect(root, self.rs.simple_root(j + 1)) for j in range(n)]
        return FiniteWeylElement(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    def generator(self, i: int) -> AffineElement:
        if not 0 <= i <= self.rank:
            raise GeneratorIndexError(f"generator index {i} out of range 0..{self.rank}")
        return self._generators[i]

    @property
    def generators(self) -> Tuple[AffineElement, ...]:
        return self._generators

    def translation(self, x: Sequence[int]) -> AffineElement:
        if len(x) != self.rank:
            raise ValueError(f"translation must have length {self.rank}")
        return AffineElement(tuple(int(c) for c in x), self.identity.finite)

    def finite(self, w: AffineElement) -> AffineElement:
        """The finite part ``w_bar`` of ``w = tau_x w_bar`` as an element of ``W_a``."""
        return AffineElement((0,) * self.rank, w.finite)

    def reflection(self, root: Sequence[int], k: int = 0) -> AffineElement:
        """``s_{root,k} = tau_{k root} s_root``."""
        return AffineElement(tuple(k * c for c in root), self.reflection_matrix(root))

    def multiply(self, a: AffineElement, b: AffineElement) -> AffineElement:
        return a * b

    def inverse(self, a: AffineElement) -> AffineElement:
        inv = self._finite_inverse(a.finite)
        return AffineElement(tuple(-c for c in inv(a.translation)), inv)

    def _finite_inverse(self, u: FiniteWeylElement) -> FiniteWeylElement:
        # u preserves the form: u^T G u = G, so u^-1 = G^-1 u^T G
        um = np.array(u.matrix, dtype=np.int64)
        num = self._gram2_adj @ um.T @ self._gram2
        det = self._gram2_det
        if np.any(num % det):
            raise AssertionError("finite part is not an isometry")
        return FiniteWeylElement(tuple(tuple(int(v) for v in row) for row in num // det))

    def from_word(self, word: Iterable[int]) -> AffineElement:
        w = self.identity
        for i in word:
            w = w * self.generator(i)
        return w

    # -- Shi coefficients ---------------------------------------------------

    def shi_vector(self, w: AffineElement) -> Vector:
        """``(k(w, alpha))`` over the positive roots in canonical order."""
        x = np.array(w.translation, dtype=np.int64)
        u = np.array(w.finite.matrix, dtype=np.int64)
        shift = self._coroots @ (self._cartan @ x)
        # alpha -> (alpha, u z) has the sign of u^-1(alpha)
        side = self._roots @ (self._gram2 @ (u @ self._dominant))
        return tuple(int(v) for v in shift - (side < 0))

    def left_mul_shi(self, i: int, v: Sequence[int]) -> Vector:
        """Shi vector of ``s_i w`` from the Shi vector ``v`` of ``w``."""
        if not 0 <= i <= self.rank:
            raise GeneratorIndexError(f"generator index {i} out of range 0..{self.rank}")
        if len(v) != self.m:
            raise InvalidShiVector(f"expected {self.m} entries, got {len(v)}")
        perm = self._left_perm[i]
        ks = self._gen_shi[i]
        return tuple(sign * v[q] + ks[r] for r, (sign, q) in enumerate(perm))

    def length(self, w: AffineElement) -> int:
        return sum(abs(k) for k in self.shi_vector(w))

    def sign_vector(self, w: AffineElement) -> Tuple[int, ...]:
        return tuple(sign_of(k) for k in self.shi_vector(w))

    def element_from_shi_vector(self, v: Sequence[int], check: bool = True) -> AffineElement:
        """Recover ``w`` from its Shi vector by repeated left descents."""
        from .characterization import first_coroot_violation

        v = tuple(int(c) for c in v)
        if len(v) != self.m:
            raise InvalidShiVector(f"expected {self.m} entries, got {len(v)}")
        if check and first_coroot_violation(self.rs, v) is not None:
            raise InvalidShiVector(f"{v} is not an alcove of {self.rs.label}")
        return self.from_word(self.element_word(v))

    # -- finite group -------------------------------------------------------

    def finite_word(self, w: AffineElement) -> List[int]:
        """A reduced word (in ``1..n``) for the finite part of ``w``."""
        u = w.finite
        word: List[int] = []
        simple = [self.rs.simple_root(i) for i in range(1, self.rank + 1)]
        while not u.is_identity():
            for i, a in enumerate(simple, start=1):
                if sum(u(a)) < 0:
                    u = u * self._generators[i].finite
                    word.append(i)
                    break
            else:  # pragma: no cover
                raise AssertionError("non-identity element without descent")
        return word[::-1]

    def word(self, w: AffineElement) -> List[int]:
        """A reduced word for ``w`` in ``0..n``."""
        return self.element_word(self.shi_vector(w))

    def element_word(self, v: Sequence[int]) -> List[int]:
        """Word ``i_1 ... i_k`` with ``s_{i_1} ... s_{i_k}`` having Shi vector ``v``.

        At each step the smallest generator index giving a left descent is taken.
        """
        v = tuple(v)
        word = []
        size = sum(abs(c) for c in v)
        while size:
            for i in range(self.rank + 1):
                cand = self.left_mul_shi(i, v)
                if sum(abs(c) for c in cand) < size:
                    word.append(i)
                    v, size = cand, size - 1
                    break
            else:
                raise AssertionError(f"no left descent for {v}")
        return word

    def search(
        self, max_length: int = -1, parallelepiped: bool = False, finite_only: bool = False
    ) -> "AlcoveSearch":
        """Breadth-first search from the identity by right multiplication.

        ``max_length`` bounds the word length (``-1``: unbounded, only sensible
        with ``parallelepiped`` or ``finite_only``).
        """
        from . import kernels

        perms, wall, step, roots, simple = self.kernel_tables()
        offset = 0
        if finite_only:
            perms, wall, step, offset = perms[1:], wall[1:], step[1:], 1
        out = kernels.bfs_alcoves(perms, wall, step, roots, simple, max_length, parallelepiped)
        return AlcoveSearch(self, *out, gen_offset=offset)

    def finite_elements(self, limit: int = 10**6) -> List[AffineElement]:
        """All elements of the finite Weyl group ``W``."""
        return self.finite_search(limit).elements()

    def finite_search(self, limit: int = 10**6) -> "AlcoveSearch":
        order = self.rs.weyl_group_order
        if order > limit:
            from .variety import ResourceGuardError

            raise ResourceGuardError(
                f"|W({self.rs.label})| = {order} exceeds the limit {limit}; "
                "raise finite_limit to proceed"
            )
        return self.search(finite_only=True)

    def ball(self, max_length: int) -> "AlcoveSearch":
        """All elements of length at most ``max_length``."""
        return self.search(max_length=max_length)

    # -- bridges for the compiled kernels -----------------------------------

    def signed_root_coords(self, s: int) -> Vector:
        r = self.rs.positive_roots[s % self.m]
        return r if s < self.m else tuple(-c for c in r)

    def kernel_tables(self):
        """Arrays describing right multiplication on (Shi vector, root permutation)."""
        m, rs = self.m, self.rs
        perms = np.empty((self.rank + 1, 2 * m), dtype=np.int64)
        for g, root in enumerate(self._gen_roots):
            for r, beta in enumerate(rs.positive_roots):
                sign, q = rs.signed_index(rs.reflect(root, beta))
                perms[g, r] = q if sign > 0 else q + m
                perms[g, r + m] = q + m if sign > 0 else q
        wall = np.array([rs.index(root) for root in self._gen_roots], dtype=np.int64)
        step = np.array([1] + [-1] * self.rank, dtype=np.int64)
        return perms, wall, step, self._roots.copy(), np.array(rs.simple_indices, dtype=np.int64)

    def element_from_kernel(self, x: Sequence[int], perm: Sequence[int]) -> AffineElement:
        """Rebuild ``tau_x u`` from a translation and a signed root permutation."""
        cols = [self.signed_root_coords(int(perm[r])) for r in self.rs.simple_indices]
        n = self.rank
        mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return AffineElement(tuple(int(c) for c in x), FiniteWeylElement(mat))


_GROUPS: dict = {}


def affine_weyl_group(family_or_rs, rank: int | None = None) -> AffineWeylGroup:
    """Cached group for a root system or a ``(family, rank)`` pair."""
    rs = family_or_rs if isinstance(family_or_rs, RootSystem) else build_root_system(family_or_rs, rank)
    grp = _GROUPS.get(rs.label)
    if grp is None:
        grp = _GROUPS[rs.label] = AffineWeylGroup(rs)
    return grp


@dataclass
class AlcoveSearch:
    """Arrays produced by :meth:`AffineWeylGroup.search`, one row per element."""

    group: AffineWeylGroup
    shi: np.ndarray
    translation: np.ndarray
    perm: np.ndarray
    parent: np.ndarray
    gen: np.ndarray
    depth: np.ndarray
    gen_offset: int = 0

    def __len__(self) -> int:
        return len(self.shi)

    def element(self, i: int) -> AffineElement:
        return self.group.element_from_kernel(self.translation[i], self.perm[i])

    def elements(self) -> List[AffineElement]:
        return [self.element(i) for i in range(len(self))]

    def word(self, i: int) -> List[int]:
        """The BFS word reaching row ``i`` (shortest within the searched region)."""
        out = []
        while self.parent[i] >= 0:
            out.append(int(self.gen[i]) + self.gen_offset)
            i = int(self.parent[i])
        return out[::-1]

    def shi_tuples(self) -> List[Vector]:
        return [tuple(int(v) for v in row) for row in self.shi]


def shi_document(rs: RootSystem, entries: Sequence[int]) -> dict:
    """JSON-ready Shi vector with a header naming the type and the root order."""
    if len(entries) != rs.num_positive:
        raise InvalidShiVector(f"expected {rs.num_positive} entries, got {len(entries)}")
    return {
        "family": rs.family,
        "rank": rs.rank,
        "order": [list(r) for r in rs.positive_roots],
        "entries": [int(k) for k in entries],
    }


def parse_shi_document(data: dict) -> Tuple[RootSystem, Vector]:
    rs = build_root_system(data["family"], int(data["rank"]))
    if [list(r) for r in rs.positive_roots] != data["order"]:
        raise RootSystemError("positive root order in document does not match this build")
    entries = tuple(int(k) for k in data["entries"])
    if len(entries) != rs.num_positive:
        raise InvalidShiVector(f"expected {rs.num_positive} entries, got {len(entries)}")
    return rs, entries
