"""Independent reference computations used by the tests.

Nothing here calls the Shi-vector machinery of the package.  Root data are
rebuilt from explicit orthonormal models, alcoves are located by exact
geometry, and lengths come from a Cayley-graph search on group elements.
"""
from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction
from math import factorial, floor
from typing import Dict, List, Sequence, Tuple

import sympy

# -- published table of types ----------------------------------------------------------
# (highest root coefficients, index of connection, |W|, number of components)


def table_row(family: str, n: int):
    if family == "A":
        return [1] * n, n + 1, factorial(n + 1), factorial(n)
    if family == "B":
        return [1] + [2] * (n - 1), 2, 2**n * factorial(n), 2 ** (n - 1) * factorial(n)
    if family == "C":
        return [2] * (n - 1) + [1], 2, 2**n * factorial(n), 2 ** (n - 1) * factorial(n)
    if family == "D":
        return [1] + [2] * (n - 3) + [1, 1], 4, 2 ** (n - 1) * factorial(n), 2 ** (n - 3) * factorial(n)
    return {
        ("E", 6): ([1, 2, 2, 3, 2, 1], 3, 2**7 * 3**4 * 5, 2**7 * 3**3 * 5),
        ("E", 7): ([2, 2, 3, 4, 3, 2, 1], 2, 2**10 * 3**4 * 5 * 7, 2**9 * 3**4 * 5 * 7),
        ("E", 8): ([2, 3, 4, 6, 5, 4, 3, 2], 1, 2**14 * 3**5 * 5**2 * 7, 2**14 * 3**5 * 5**2 * 7),
        ("F", 4): ([2, 3, 4, 2], 1, 2**7 * 3**2, 2**7 * 3**2),
        ("G", 2): ([3, 2], 1, 2**2 * 3, 2**2 * 3),
    }[(family, n)]


# -- orthonormal models ----------------------------------------------------------------


def _e(n: int, *pairs) -> Tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def simple_roots_orthonormal(family: str, n: int) -> List[Tuple[Fraction, ...]]:
    """Textbook simple roots; B2 has the short root first."""
    if family == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if family == "B" and n == 2:
        return [_e(2, (1, 1)), _e(2, (0, 1), (1, -1))]
    if family == "B":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 1))]
    if family == "C":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 2))]
    if family == "D":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 2, 1), (n - 1, 1))]
    if family == "F":
        h = Fraction(1, 2)
        return [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                _e(4, (0, h), (1, -h), (2, -h), (3, -h))]
    if family == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    raise KeyError(family)


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def reflect_vec(a, v):
    c = 2 * dot(a, v) / dot(a, a)
    return tuple(x - c * y for x, y in zip(v, a))


def orthonormal_data(family: str, n: int):
    """(cartan, positive roots in simple coordinates, squared norms with short = 1)."""
    simple = simple_roots_orthonormal(family, n)
    cartan = tuple(
        tuple(int(2 * dot(simple[j], simple[i]) / dot(simple[i], simple[i])) for j in range(n))
        for i in range(n)
    )
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                r = reflect_vec(a, v)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    # coordinates in the simple basis
    basis = sympy.Matrix([[x for x in s] for s in simple]).T
    normal = (basis.T * basis).inv() * basis.T
    short = min(dot(r, r) for r in roots)
    out = {}
    for r in roots:
        sol = normal * sympy.Matrix(list(r))
        assert all(c.is_integer for c in sol)
        coords = tuple(int(c) for c in sol)
        if all(c >= 0 for c in coords):
            out[coords] = dot(r, r) / short
    return cartan, out


# -- exact geometry of alcoves -----------------------------------------------------------


class Geometry:
    """Affine reflections on ``V`` in simple-root coordinates, exact rationals."""

    def __init__(self, cartan, simple_norms, positive_roots, norms):
        n = len(cartan)
        self.n = n
        self.gram = [[Fraction(simple_norms[i]) / 2 * cartan[i][j] for j in range(n)] for i in range(n)]
        self.roots = [tuple(r) for r in positive_roots]
        self.norms = [Fraction(q) for q in norms]
        short = min(self.norms)
        cand = [r for r, q in zip(self.roots, self.norms) if q == short]
        self.theta_s = max(cand, key=lambda r: (sum(r), r))
        self._c0 = None

    def inner(self, x, y) -> Fraction:
        return sum((x[i] * self.gram[i][j] * y[j] for i in range(self.n) for j in range(self.n)), Fraction(0))

    def co(self, x, a) -> Fraction:
        return 2 * self.inner(x, a) / self.inner(a, a)

    def affine_reflect(self, x, a, k):
        c = self.co(x, a) - k
        return tuple(xi - c * ai for xi, ai in zip(x, a))

    def generator(self, i, x):
        if i == 0:
            return self.affine_reflect(x, self.theta_s, 1)
        a = tuple(1 if j == i - 1 else 0 for j in range(self.n))
        return self.affine_reflect(x, a, 0)

    def interior_point(self):
        """A point with ``0 < (c, a^vee) < 1`` for every positive root ``a``."""
        if self._c0 is not None:
            return self._c0
        # (c, alpha_i^vee) = eps for every simple root
        eps = Fraction(1, 2 * (max(sum(self.coroot(r)) for r in self.roots) + 1))
        m = sympy.Matrix([[2 * self.gram[i][j] / self.gram[i][i] for j in range(self.n)] for i in range(self.n)])
        sol = m.solve(sympy.Matrix([sympy.Rational(eps.numerator, eps.denominator)] * self.n))
        self._c0 = tuple(Fraction(int(s.p), int(s.q)) for s in sol)
        return self._c0

    def coroot(self, r):
        """Coordinates ``d`` of ``r^vee`` in the simple coroots: ``d_i = r_i |a_i|^2 / |r|^2``."""
        return tuple(Fraction(r[i]) * self.gram[i][i] / self.inner(r, r) for i in range(self.n))

    def shi_of_word(self, word: Sequence[int]) -> Tuple[int, ...]:
        """``k(w, a) = floor((w(c), a^vee))`` with ``w = s_{i1} ... s_{ik}`` applied right to left."""
        x = self.interior_point()
        for i in reversed(list(word)):
            x = self.generator(i, x)
        return tuple(floor(self.co(x, r)) for r in self.roots)


def geometry_of(rs) -> Geometry:
    return Geometry(rs.cartan, rs.simple_norms, rs.positive_roots, rs.norms_sq)


# -- Cayley-graph lengths -----------------------------------------------------------


def cayley_ball(group, max_length: int) -> Dict[object, Tuple[int, List[int]]]:
    """Element -> (word length, a reduced word), by BFS with right multiplication."""
    e = group.identity
    out = {e: (0, [])}
    queue = deque([e])
    gens = group.generators
    while queue:
        w = queue.popleft()
        d, word = out[w]
        if d == max_length:
            continue
        for i, s in enumerate(gens):
            v = group.multiply(w, s)
            if v not in out:
                out[v] = (d + 1, word + [i])
                queue.append(v)
    return out


# -- closed forms ---------------------------------------------------------------------


def reflection_shi_closed_form(rs, k_of, alpha, p, beta) -> int:
    """``k(s_{alpha,p} w, beta)`` from ``k(w, .)`` by the case split on the sign of ``s_alpha(beta)``."""
    image = rs.reflect(alpha, beta)
    positive = all(c >= 0 for c in image)
    root = image if positive else tuple(-c for c in image)
    k = k_of(root) if positive else -k_of(root)
    value = k - p * rs.pairing(alpha, image)
    return value if positive else value - 1


def type_b_linear_parts(n: int) -> Dict[Tuple[int, ...], Tuple[Tuple[int, ...], int]]:
    """Root -> (coefficients of its linear part, coheight) for ``B_n``, n >= 3."""
    out = {}

    def vec(pairs):
        v = [0] * n
        for t, c in pairs:
            v[t] += c
        return tuple(v)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            root = vec((t - 1, 1) for t in range(i, j))
            out[root] = (vec((t - 1, 1) for t in range(i, j)), j - i)
        root = vec((t - 1, 1) for t in range(i, n + 1))
        coeff = vec([(t - 1, 2) for t in range(i, n)] + [(n - 1, 1)])
        out[root] = (coeff, 2 * (n - i) + 1)
        for j in range(i + 1, n + 1):
            root = vec([(t - 1, 1) for t in range(i, j)] + [(t - 1, 2) for t in range(j, n + 1)])
            if j < n:
                coeff = vec([(t - 1, 1) for t in range(i, j)] + [(t - 1, 2) for t in range(j, n)] + [(n - 1, 1)])
            else:
                coeff = vec((t - 1, 1) for t in range(i, n + 1))
            out[root] = (coeff, 2 * n - (i + j) + 1)
    return out


def box(m: int, radius: int):
    return itertools.product(range(-radius, radius + 1), repeat=m)
