"""The Phi+-representation: ``W_a`` acting by affine isometries on ``Z^m``.

``F(s_{a,p})(k) = L_a k + v_{p,a}`` where ``L_a`` is the signed permutation
induced by ``s_a`` on the positive roots.  ``F`` is a morphism and
``F(w)(iota(x)) = iota(w x)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .affine_weyl import AffineElement, AffineWeylGroup
from .root_system import RootSystem


class AffineIsometry:
    """``k -> linear @ k + translation`` with ``linear`` a signed permutation matrix."""

    __slots__ = ("linear", "translation")

    def __init__(self, linear, translation):
        self.linear = np.asarray(linear, dtype=np.int64)
        self.translation = np.asarray(translation, dtype=np.int64)
        m = self.translation.shape[0]
        if self.linear.shape != (m, m):
            raise ValueError(f"linear part must be {m}x{m}, got {self.linear.shape}")

    @classmethod
    def identity(cls, m: int) -> "AffineIsometry":
        return cls(np.eye(m, dtype=np.int64), np.zeros(m, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.translation.shape[0]

    def __call__(self, point: Sequence[int]) -> tuple:
        return apply(self, point)

    def __matmul__(self, other: "AffineIsometry") -> "AffineIsometry":
        """Composition: ``(self @ other)(k) = self(other(k))``."""
        return AffineIsometry(
            self.linear @ other.linear, self.linear @ other.translation + self.translation
        )

    def inverse(self) -> "AffineIsometry":
        lt = self.linear.T
        return AffineIsometry(lt, -(lt @ self.translation))

    def is_signed_permutation(self) -> bool:
        a = np.abs(self.linear)
        return bool(
            np.all((self.linear >= -1) & (self.linear <= 1))
            and np.all(a.sum(axis=0) == 1)
            and np.all(a.sum(axis=1) == 1)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineIsometry):
            return NotImplemented
        return bool(
            np.array_equal(self.linear, other.linear)
            and np.array_equal(self.translation, other.translation)
        )

    def __hash__(self) -> int:
        return hash((self.linear.tobytes(), self.translation.tobytes()))

    def __repr__(self) -> str:
        return f"AffineIsometry(dim={self.dim}, translation={self.translation.tolist()})"

    def to_dict(self) -> dict:
        return {"linear": self.linear.tolist(), "translation": self.translation.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "AffineIsometry":
        return cls(data["linear"], data["translation"])


def apply(f: AffineIsometry, point: Sequence[int]) -> tuple:
    """``F(point)``, linear part first, then translation."""
    v = np.asarray(point, dtype=np.int64)
    if v.shape != (f.dim,):
        raise ValueError(f"point must have length {f.dim}, got {v.shape}")
    return tuple(int(c) for c in f.linear @ v + f.translation)


@lru_cache(maxsize=None)
def _matrix_L(rs: RootSystem, idx: int) -> np.ndarray:
    alpha = rs.positive_roots[idx]
    m = rs.num_positive
    mat = np.zeros((m, m), dtype=np.int64)
    for i, beta in enumerate(rs.positive_roots):
        sign, j = rs.signed_index(rs.reflect(alpha, beta))
        mat[j, i] = sign
    mat.setflags(write=False)
    return mat


def matrix_L(rs: RootSystem, alpha: Sequence[int]) -> np.ndarray:
    """Entry ``(j, i)`` is ``+-1`` when ``s_alpha(beta_i) = +-beta_j``."""
    return _matrix_L(rs, rs.index(alpha)).copy()


def vector_v(rs: RootSystem, p: int, alpha: Sequence[int]) -> np.ndarray:
    """Translation part of ``F(s_{alpha,p})``."""
    out = np.empty(rs.num_positive, dtype=np.int64)
    for g, gamma in enumerate(rs.positive_roots):
        image = rs.reflect(alpha, gamma)
        sign, _ = rs.signed_index(image)
        out[g] = -p * rs.pairing(alpha, image) - (1 if sign < 0 else 0)
    return out


def reflection_isometry(rs: RootSystem, alpha: Sequence[int], p: int) -> AffineIsometry:
    """``F(s_{alpha,p})``."""
    return AffineIsometry(_matrix_L(rs, rs.index(alpha)), vector_v(rs, p, alpha))


class PhiRepresentation:
    """``F : W_a -> Isom(R^m)`` for one group, with generator images cached."""

    def __init__(self, group: AffineWeylGroup):
        self.group = group
        rs = self.rs = group.rs
        self.m = rs.num_positive
        theta = group.theta_short
        self._gens = [reflection_isometry(rs, theta, 1)] + [
            reflection_isometry(rs, rs.simple_root(i), 0) for i in range(1, rs.rank + 1)
        ]
        # tau_{alpha_i} = s_{alpha_i,1} s_{alpha_i,0}
        self._unit_translations = []
        for i in range(1, rs.rank + 1):
            a = rs.simple_root(i)
            t = reflection_isometry(rs, a, 1) @ reflection_isometry(rs, a, 0)
            self._unit_translations.append((t, t.inverse()))

    def generator(self, i: int) -> AffineIsometry:
        return self._gens[i]

    def of_word(self, word: Iterable[int]) -> AffineIsometry:
        f = AffineIsometry.identity(self.m)
        for i in word:
            f = f @ self._gens[i]
        return f

    def of_reflections(self, pairs: Iterable[tuple]) -> AffineIsometry:
        """``F(s_{a1,p1} ... s_{aq,pq})`` for ``pairs = [(a1, p1), ...]``."""
        f = AffineIsometry.identity(self.m)
        for alpha, p in pairs:
            f = f @ reflection_isometry(self.rs, alpha, p)
        return f

    def __call__(self, w: AffineElement) -> AffineIsometry:
        return self.isometry_of(w)

    def isometry_of(self, w: AffineElement) -> AffineIsometry:
        """``F(w)`` through ``w = tau_x w_bar``: translations, then a word for ``w_bar``."""
        f = AffineIsometry.identity(self.m)
        for c, (t, tinv) in zip(w.translation, self._unit_translations):
            step = t if c > 0 else tinv
            for _ in range(abs(c)):
                f = f @ step
        return f @ self.of_word(self.group.finite_word(w))


_REPS: dict = {}


def phi_representation(group: AffineWeylGroup) -> PhiRepresentation:
    rep = _REPS.get(group.rs.label)
    if rep is None:
        rep = _REPS[group.rs.label] = PhiRepresentation(group)
    return rep


def isometry_of(group: AffineWeylGroup, w: AffineElement) -> AffineIsometry:
    return phi_representation(group).isometry_of(w)
