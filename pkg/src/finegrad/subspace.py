"""Exact linear algebra on spans of 4x4 matrices over Q(i) or over Q.

A matrix is a vector of 16 Gaussian rationals (complex field) or of 32
rationals, real and imaginary parts interleaved row-major (real field).
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence

from .errors import DimensionMismatch
from .exact import GQ, ONE, ZERO, GaussianRational
from .mat import E, Mat4


class Field(enum.Enum):
    COMPLEX = "ComplexSpan"
    REAL = "RealSpan"


ComplexSpan = Field.COMPLEX
RealSpan = Field.REAL

_QZERO = Fraction(0)
_QONE = Fraction(1)


def vec_complex(x: Mat4) -> list:
    return list(x.entries)


def vec_real(x: Mat4) -> list:
    out = []
    for z in x.entries:
        out.append(z.re)
        out.append(z.im)
    return out


def unvec_real(v: Sequence[Fraction]) -> Mat4:
    return Mat4._raw(tuple(GQ(v[2 * k], v[2 * k + 1]) for k in range(16)))


def _vec(x: Mat4, field: Field) -> list:
    return vec_real(x) if field is Field.REAL else vec_complex(x)


def _unit(field: Field):
    return (_QZERO, _QONE) if field is Field.REAL else (ZERO, ONE)


# elimination ---------------------------------------------------------------

def rref(rows: List[list], zero, one, track: bool = False):
    """Reduced row echelon form.

    Returns ``(reduced, pivots, combo)`` where ``reduced`` holds only the
    nonzero rows and ``combo[r]`` expresses reduced row r in terms of the
    input rows (when ``track`` is set).
    """
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    t = [[one if i == j else zero for j in range(n_rows)] for i in range(n_rows)] if track else None
    pivots = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            if track:
                t[r], t[p] = t[p], t[r]
        inv = one / m[r][c]
        if inv != one:
            m[r] = [x * inv if x else x for x in m[r]]
            if track:
                t[r] = [x * inv if x else x for x in t[r]]
        for i in range(n_rows):
            f = m[i][c]
            if i != r and f:
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
                if track:
                    t[i] = [x - f * y if y else x for x, y in zip(t[i], t[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m[:r], pivots, (t[:r] if track else None)


def nullspace(columns: List[list], zero, one) -> List[list]:
    """Basis of {c : sum_j c_j * columns[j] = 0}."""
    n = len(columns)
    if n == 0:
        return []
    length = len(columns[0])
    rows = [[columns[j][i] for j in range(n)] for i in range(length)]
    reduced, pivots, _ = rref(rows, zero, one)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for row, p in zip(reduced, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


# subspaces -------------------------------------------------------------------

class Subspace:
    """Span of linearly independent 4x4 matrices over Q(i) or Q."""

    __slots__ = ("_basis", "_field", "_reduced", "_pivots", "_combo")

    def __init__(self, basis: Iterable[Mat4], field: Field = Field.COMPLEX):
        basis = tuple(basis)
        zero, one = _unit(field)
        vecs = [_vec(b, field) for b in basis]
        if vecs:
            reduced, pivots, combo = rref(vecs, zero, one, track=True)
        else:
            reduced, pivots, combo = [], [], []
        if len(reduced) != len(basis):
            raise DimensionMismatch("basis vectors are linearly dependent")
        self._basis = basis
        self._field = field
        self._reduced = reduced
        self._pivots = pivots
        self._combo = combo

    @classmethod
    def spanned_by(cls, vectors: Iterable[Mat4], field: Field = Field.COMPLEX) -> "Subspace":
        """Subspace spanned by possibly dependent vectors (keeps a maximal independent prefix set)."""
        kept: List[Mat4] = []
        zero, one = _unit(field)
        reduced: List[list] = []
        pivots: List[int] = []
        for v in vectors:
            vec = _vec(v, field)
            for row, p in zip(reduced, pivots):
                f = vec[p]
                if f:
                    vec = [x - f * y for x, y in zip(vec, row)]
            lead = next((i for i, x in enumerate(vec) if x), None)
            if lead is None:
                continue
            kept.append(v)
            inv = one / vec[lead]
            vec = [x * inv for x in vec]
            # keep earlier rows reduced at the new pivot
            reduced = [[x - r[lead] * y for x, y in zip(r, vec)] if r[lead] else r for r in reduced]
            reduced.append(vec)
            pivots.append(lead)
        return cls(kept, field)

    @property
    def basis(self) -> tuple:
        return self._basis

    @property
    def field(self) -> Field:
        return self._field

    @property
    def dim(self) -> int:
        return len(self._basis)

    def __len__(self):
        return len(self._basis)

    def __iter__(self):
        return iter(self._basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, field={self._field.value})"

    def coordinates(self, x: Mat4) -> Optional[List[GaussianRational]]:
        """Coefficients of x in the basis, or None when x is outside the span."""
        zero, _ = _unit(self._field)
        vec = _vec(x, self._field)
        c = [vec[p] for p in self._pivots]
        residual = list(vec)
        for cr, row in zip(c, self._reduced):
            if cr:
                residual = [a - cr * b if b else a for a, b in zip(residual, row)]
        if any(residual):
            return None
        coeffs = [zero] * self.dim
        for cr, t in zip(c, self._combo):
            if cr:
                coeffs = [a + cr * b if b else a for a, b in zip(coeffs, t)]
        if self._field is Field.REAL:
            return [GQ(a, 0) for a in coeffs]
        return coeffs

    def contains(self, x: Mat4) -> bool:
        return self.coordinates(x) is not None

    def __contains__(self, x: Mat4) -> bool:
        return self.contains(x)

    def contains_space(self, other: "Subspace") -> bool:
        if other.field is Field.COMPLEX and self._field is Field.REAL:
            return all(self.contains(b) and self.contains(b * GQ(0, 1)) for b in other.basis)
        return all(self.contains(b) for b in other.basis)

    def equals(self, other: "Subspace") -> bool:
        return (
            self._field is other.field
            and self.dim == other.dim
            and self.contains_space(other)
        )

    def real_generators(self) -> List[Mat4]:
        """A basis over Q of the same set of matrices."""
        if self._field is Field.REAL:
            return list(self._basis)
        i = GQ(0, 1)
        out = []
        for b in self._basis:
            out.append(b)
            out.append(b * i)
        return out

    def as_real(self) -> "Subspace":
        return Subspace(self.real_generators(), Field.REAL)

    def complexification(self) -> "Subspace":
        return Subspace.spanned_by(self._basis, Field.COMPLEX)

    def combine(self, coeffs: Sequence) -> Mat4:
        out = Mat4.zero()
        for c, b in zip(coeffs, self._basis):
            if c:
                out = out + b * c
        return out


def direct_sum(parts: Sequence[Subspace]) -> Subspace:
    """Union of the part bases; raises DimensionMismatch if they overlap."""
    if not parts:
        raise ValueError("no parts given")
    field = parts[0].field
    return Subspace([b for p in parts for b in p.basis], field)


# kernels ---------------------------------------------------------------------

def _flatten_value(value, field: Field) -> list:
    if isinstance(value, Mat4):
        return _vec(value, field)
    if isinstance(value, (GaussianRational, int, Fraction)):
        z = GQ.coerce(value)
        return [z.re, z.im] if field is Field.REAL else [z]
    out = []
    for v in value:
        out.extend(_flatten_value(v, field))
    return out


def restricted_real_kernel(span: Subspace, fn: Callable[[Mat4], object]) -> Subspace:
    """Real subspace of ``span`` on which the R-linear map ``fn`` vanishes.

    ``fn`` may return a matrix, a scalar, or a sequence of those.
    """
    gens = span.real_generators()
    if not gens:
        return Subspace([], Field.REAL)
    columns = [_flatten_value(fn(g), Field.REAL) for g in gens]
    out = []
    for c in nullspace(columns, _QZERO, _QONE):
        x = Mat4.zero()
        for cj, g in zip(c, gens):
            if cj:
                x = x + g * cj
        out.append(x)
    return Subspace(out, Field.REAL)


def restricted_complex_kernel(span: Subspace, fn: Callable[[Mat4], object]) -> Subspace:
    """Complex subspace of ``span`` on which the C-linear map ``fn`` vanishes."""
    if span.field is not Field.COMPLEX:
        raise ValueError("complex kernel needs a complex span")
    gens = list(span.basis)
    if not gens:
        return Subspace([], Field.COMPLEX)
    columns = [_flatten_value(fn(g), Field.COMPLEX) for g in gens]
    out = []
    for c in nullspace(columns, ZERO, ONE):
        x = Mat4.zero()
        for cj, g in zip(c, gens):
            if cj:
                x = x + g * cj
        out.append(x)
    return Subspace(out, Field.COMPLEX)


def gl4(field: Field = Field.COMPLEX) -> Subspace:
    s = Subspace([E(j, k) for j in range(1, 5) for k in range(1, 5)], Field.COMPLEX)
    return s.as_real() if field is Field.REAL else s


def sl4() -> Subspace:
    """sl(4,C): off-diagonal units and E_jj - E_{j+1,j+1}."""
    basis = [E(j, k) for j in range(1, 5) for k in range(1, 5) if j != k]
    basis += [E(j, j) - E(j + 1, j + 1) for j in range(1, 4)]
    return Subspace(basis, Field.COMPLEX)


def real_solution_space(constraints: Sequence[Callable[[Mat4], object]], parent: Optional[Subspace] = None) -> Subspace:
    """Real solutions of homogeneous R-linear conditions on a 4x4 matrix.

    Each constraint maps X to something that must vanish; the unknown
    ranges over ``parent`` (default: all of gl(4,C) as a 32-dim real space).
    """
    domain = parent if parent is not None else gl4(Field.COMPLEX)
    return restricted_real_kernel(domain, lambda x: [c(x) for c in constraints])


def intersect_real(s: Subspace, fixedset) -> Subspace:
    """{x in s : J(x) = x}, for J given as a callable or an object with ``apply``."""
    j = fixedset.apply if hasattr(fixedset, "apply") else fixedset
    return restricted_real_kernel(s, lambda x: j(x) - x)
