"""Finitely generated abelian groups in invariant-factor form.

``Z^n / <relations>`` is computed from the Smith normal form U R V = D of
the relation matrix R (relations as rows).  In the coordinates x -> x V
the relation lattice becomes the row space of D, so generator e_j maps
to row j of V, read modulo the diagonal entries.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (u, d, v) with u*m*v = d, u and v unimodular, d diagonal and
    d[0][0] | d[1][1] | ... with non-negative entries."""
    a = [list(map(int, r)) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    dirty = dirty or bool(a[i][t])
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    dirty = dirty or bool(a[t][j])
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if t < rows and t < cols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, v


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def _prime_powers(n: int) -> List[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return out


def invariant_factors(orders: Sequence[int]) -> Tuple[int, ...]:
    """Invariant factors of a product of finite cyclic groups of the given orders."""
    by_prime = {}
    for n in orders:
        if n < 1:
            raise ValueError("cyclic orders must be positive")
        for q in _prime_powers(n):
            p = next(d for d in range(2, q + 1) if q % d == 0)
            by_prime.setdefault(p, []).append(q)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for powers in by_prime.values():
        powers = sorted(powers)
        for k, q in enumerate(reversed(powers)):
            factors[length - 1 - k] *= q
    return tuple(f for f in factors if f > 1)


@dataclass(frozen=True)
class AbelianGroup:
    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if self.rank < 0 or any(d < 2 for d in t):
            raise ValueError("invariant factors must be >= 2 and rank >= 0")
        if any(t[k + 1] % t[k] for k in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_cyclic(cls, rank: int, orders: Sequence[int]) -> "AbelianGroup":
        """Normalize any product Z^rank x Z_{n1} x ... (e.g. a primary decomposition)."""
        return cls(rank, invariant_factors(orders))

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        """Parse ``Z^2 x Z_2`` / ``Z4xZ2^2`` / ``Z_2^5`` style descriptions."""
        rank, orders = 0, []
        s = text.replace(" ", "").replace("×", "x").replace("*", "x")
        for term in filter(None, s.split("x")):
            m = re.fullmatch(r"Z(?:_?\{?(\d+)\}?)?(?:\^(\d+))?", term)
            if not m:
                raise ValueError(f"cannot parse group term {term!r}")
            count = int(m.group(2) or 1)
            if m.group(1) is None:
                rank += count
            else:
                orders += [int(m.group(1))] * count
        return cls.from_cyclic(rank, orders)

    @property
    def order(self):
        """Group order, or None when infinite."""
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self):
        terms = []
        if self.rank:
            terms.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        k = 0
        while k < len(self.torsion):
            d = self.torsion[k]
            n = self.torsion.count(d)
            terms.append(f"Z_{d}" if n == 1 else f"Z_{d}^{n}")
            k += n
        return " x ".join(terms) or "0"


def isomorphic(a, b) -> bool:
    """Compare groups given as AbelianGroup values or textual descriptions."""
    if isinstance(a, str):
        a = AbelianGroup.parse(a)
    if isinstance(b, str):
        b = AbelianGroup.parse(b)
    return a.rank == b.rank and a.torsion == b.torsion


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup = field(compare=False, repr=False)
    free_part: Tuple[int, ...]
    torsion_part: Tuple[int, ...]

    def __post_init__(self):
        t = tuple(x % d for x, d in zip(self.torsion_part, self.group.torsion))
        object.__setattr__(self, "torsion_part", t)
        object.__setattr__(self, "free_part", tuple(self.free_part))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.group,
            tuple(x + y for x, y in zip(self.free_part, other.free_part)),
            tuple(x + y for x, y in zip(self.torsion_part, other.torsion_part)),
        )

    def __neg__(self):
        return GroupElement(self.group, tuple(-x for x in self.free_part), tuple(-x for x in self.torsion_part))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def __str__(self):
        return "(" + ", ".join(map(str, self.free_part + self.torsion_part)) + ")"


def quotient_by_relations(n_generators: int, relations: Sequence[Sequence[int]]):
    """Z^n / <relations> and the images of the standard generators."""
    rels = [list(r) for r in relations]
    if any(len(r) != n_generators for r in rels):
        raise ValueError("relation length does not match the number of generators")
    if not rels:
        rels = [[0] * n_generators]
    _, d, v = smith_normal_form(rels)
    diag = [d[i][i] if i < len(d) else 0 for i in range(n_generators)]
    torsion_idx = [i for i, x in enumerate(diag) if x > 1]
    free_idx = [i for i, x in enumerate(diag) if x == 0]
    group = AbelianGroup(len(free_idx), tuple(diag[i] for i in torsion_idx))
    images = [
        GroupElement(group, tuple(v[j][i] for i in free_idx), tuple(v[j][i] for i in torsion_idx))
        for j in range(n_generators)
    ]
    return group, images
