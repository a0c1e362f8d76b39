"""Automorphisms and antiautomorphisms of sl(4,C) given by defining matrices.

Inner(A) acts as X -> A^-1 X A, Outer(C) as X -> -(C^-1 X C)^T.  Both are
defined up to a nonzero scalar on the matrix, so equality is projective.
Antiautomorphisms are complex conjugation composed with one of these:
ConjInner(F) needs F conj(F) = +-I, ConjOuter(E) needs E hermitian.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence

from .errors import InvalidAntiautomorphism, NotEigensubspace, SingularMatrix
from .exact import GaussianRational
from .mat import I4, Mat4


class AutKind(enum.Enum):
    INNER = "Inner"
    OUTER = "Outer"


Inner = AutKind.INNER
Outer = AutKind.OUTER


@dataclass(frozen=True)
class Automorphism:
    kind: AutKind
    matrix: Mat4

    def __post_init__(self):
        if not self.matrix.is_invertible():
            raise SingularMatrix(f"{self.kind.value} automorphism needs an invertible matrix")

    @classmethod
    def inner(cls, a: Mat4) -> "Automorphism":
        return cls(AutKind.INNER, a)

    @classmethod
    def outer(cls, c: Mat4) -> "Automorphism":
        return cls(AutKind.OUTER, c)

    @cached_property
    def _inv(self) -> Mat4:
        return self.matrix.inverse()

    def apply(self, x: Mat4) -> Mat4:
        y = self._inv @ x @ self.matrix
        if self.kind is AutKind.INNER:
            return y
        return -y.transpose()

    __call__ = apply

    def key(self):
        """Hashable projective class."""
        return (self.kind, self.matrix.normalized())

    def inverse(self) -> "Automorphism":
        if self.kind is AutKind.INNER:
            return Automorphism(AutKind.INNER, self.matrix.inverse())
        return Automorphism(AutKind.OUTER, self.matrix.transpose())

    def __repr__(self):
        from .mat import format_matrix
        return f"{self.kind.value}({format_matrix(self.matrix)})"


def compose(g: Automorphism, h: Automorphism) -> Automorphism:
    """g after h."""
    a, b = g.matrix, h.matrix
    if g.kind is AutKind.INNER and h.kind is AutKind.INNER:
        return Automorphism(AutKind.INNER, b @ a)
    if g.kind is AutKind.OUTER and h.kind is AutKind.INNER:
        return Automorphism(AutKind.OUTER, b @ a)
    if g.kind is AutKind.INNER:
        return Automorphism(AutKind.OUTER, b @ a.inverse().transpose())
    return Automorphism(AutKind.INNER, b @ a.inverse().transpose())


def apply_aut(g: Automorphism, x: Mat4) -> Mat4:
    return g.apply(x)


def aut_equal_projective(g: Automorphism, h: Automorphism) -> bool:
    return g.kind is h.kind and g.matrix.proportional_to(h.matrix) is not None


def conjugate_aut(g: Automorphism, f: Automorphism) -> Automorphism:
    """f o g o f^-1, normalized projectively."""
    c = compose(f, compose(g, f.inverse()))
    return Automorphism(c.kind, c.matrix.normalized())


def _parts_of(eigenbasis) -> list:
    return list(eigenbasis.parts) if hasattr(eigenbasis, "parts") else list(eigenbasis)


def eigenvalue_on(g: Automorphism, s) -> GaussianRational:
    """The scalar by which g acts on every vector of s."""
    lam = None
    for b in s.basis:
        c = g.apply(b).proportional_to(b)
        if c is None:
            raise NotEigensubspace(f"{g!r} does not map a basis vector to a multiple of itself")
        if lam is not None and c != lam:
            raise NotEigensubspace(f"{g!r} acts with different eigenvalues on one subspace")
        lam = c
    if lam is None:
        raise NotEigensubspace("empty subspace has no eigenvalue")
    return lam


def eigenvalues_on(g: Automorphism, eigenbasis) -> List[GaussianRational]:
    return [eigenvalue_on(g, p) for p in _parts_of(eigenbasis)]


def has_real_spectrum(g: Automorphism, eigenbasis) -> bool:
    return all(lam.is_real() for lam in eigenvalues_on(g, eigenbasis))


def acts_as_scalar_on_parts(g: Automorphism, eigenbasis) -> bool:
    try:
        eigenvalues_on(g, eigenbasis)
    except NotEigensubspace:
        return False
    return True


def generate_group(generators: Sequence[Automorphism], limit: int = 1024) -> List[Automorphism]:
    """All products of the generators, up to projective equality.

    Only for finite groups; raises ValueError once ``limit`` elements are found.
    """
    identity = Automorphism(AutKind.INNER, I4)
    seen = {identity.key(): identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = compose(g, x)
            k = y.key()
            if k not in seen:
                y = Automorphism(k[0], k[1])
                seen[k] = y
                queue.append(y)
                if len(seen) > limit:
                    raise ValueError(f"group exceeds {limit} elements")
    return list(seen.values())


def contains_projective(group: Iterable[Automorphism], g: Automorphism) -> bool:
    k = g.key()
    return any(h.key() == k for h in group)


# antiautomorphisms -----------------------------------------------------------

class AntiKind(enum.Enum):
    CONJ_INNER = "ConjInner"
    CONJ_OUTER = "ConjOuter"


ConjInner = AntiKind.CONJ_INNER
ConjOuter = AntiKind.CONJ_OUTER


@dataclass(frozen=True)
class Antiautomorphism:
    kind: AntiKind
    matrix: Mat4

    def __post_init__(self):
        m = self.matrix
        if not m.is_invertible():
            raise InvalidAntiautomorphism("defining matrix is singular")
        if self.kind is AntiKind.CONJ_INNER:
            p = m @ m.conj()
            if p != I4 and p != -I4:
                raise InvalidAntiautomorphism("F conj(F) must be +I (circular) or -I (anticircular)")
        elif not m.is_hermitian():
            raise InvalidAntiautomorphism("E must be hermitian")

    @classmethod
    def conj_inner(cls, f: Mat4) -> "Antiautomorphism":
        return cls(AntiKind.CONJ_INNER, f)

    @classmethod
    def conj_outer(cls, e: Mat4) -> "Antiautomorphism":
        return cls(AntiKind.CONJ_OUTER, e)

    @classmethod
    def from_automorphism(cls, h: Automorphism) -> "Antiautomorphism":
        """Complex conjugation composed with h."""
        kind = AntiKind.CONJ_INNER if h.kind is AutKind.INNER else AntiKind.CONJ_OUTER
        return cls(kind, h.matrix)

    @property
    def sign(self) -> int:
        """+1 circular, -1 anticircular; 0 for the hermitian kind."""
        if self.kind is AntiKind.CONJ_OUTER:
            return 0
        return 1 if self.matrix @ self.matrix.conj() == I4 else -1

    @cached_property
    def automorphism(self) -> Automorphism:
        kind = AutKind.INNER if self.kind is AntiKind.CONJ_INNER else AutKind.OUTER
        return Automorphism(kind, self.matrix)

    def apply(self, x: Mat4) -> Mat4:
        return self.automorphism.apply(x).conj()

    __call__ = apply

    def fixes(self, x: Mat4) -> bool:
        return fixed_condition(self, x)


def fixed_condition(j: Antiautomorphism, x: Mat4) -> bool:
    """XF = F conj(X) for ConjInner(F); XE = -E X^dagger for ConjOuter(E)."""
    m = j.matrix
    if j.kind is AntiKind.CONJ_INNER:
        return x @ m == m @ x.conj()
    return x @ m == -(m @ x.dagger())
