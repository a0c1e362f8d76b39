"""Dense 2x2 and 4x4 matrices over Q(i).

Matrix literals are row-major scalar literals; rows are separated by
newlines or ``;`` and entries by whitespace or commas::

    0 1 0 0; 0 0 1 0; 0 0 0 1; 1 0 0 0
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotHermitian, SingularMatrix
from .exact import GQ, ONE, ZERO, GaussianRational, format_scalar, parse_scalar


class _Square:
    __slots__ = ("_e",)
    N = 0

    def __init__(self, entries: Iterable):
        e = tuple(GQ.coerce(x) for x in entries)
        if len(e) != self.N * self.N:
            raise ValueError(f"{type(self).__name__} needs {self.N * self.N} entries, got {len(e)}")
        object.__setattr__(self, "_e", e)

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @classmethod
    def _raw(cls, entries: tuple):
        m = object.__new__(cls)
        object.__setattr__(m, "_e", entries)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]):
        if len(rows) != cls.N or any(len(r) != cls.N for r in rows):
            raise ValueError(f"expected {cls.N} rows of {cls.N} entries")
        return cls(x for r in rows for x in r)

    @classmethod
    def zero(cls):
        return cls._raw((ZERO,) * (cls.N * cls.N))

    @classmethod
    def identity(cls):
        n = cls.N
        return cls._raw(tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, *values):
        if len(values) != cls.N:
            raise ValueError(f"diag needs {cls.N} values")
        n = cls.N
        vals = [GQ.coerce(v) for v in values]
        return cls._raw(tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @property
    def entries(self) -> tuple:
        return self._e

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i * self.N + j]

    def rows(self):
        n = self.N
        return [self._e[i * n:(i + 1) * n] for i in range(n)]

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._raw(tuple(a + b for a, b in zip(self._e, other._e)))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._raw(tuple(a - b for a, b in zip(self._e, other._e)))

    def __neg__(self):
        return self._raw(tuple(-a for a in self._e))

    def __mul__(self, scalar):
        if isinstance(scalar, _Square):
            return NotImplemented
        s = GQ.coerce(scalar)
        if not s:
            return self.zero()
        return self._raw(tuple(a * s if a else ZERO for a in self._e))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        n = self.N
        a, b = self._e, other._e
        out = [ZERO] * (n * n)
        for i in range(n):
            for k in range(n):
                aik = a[i * n + k]
                if not aik:
                    continue
                row = k * n
                for j in range(n):
                    bkj = b[row + j]
                    if bkj:
                        out[i * n + j] = out[i * n + j] + aik * bkj
        return self._raw(tuple(out))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.identity(), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self):
        n = self.N
        return self._raw(tuple(self._e[j * n + i] for i in range(n) for j in range(n)))

    @property
    def T(self):
        return self.transpose()

    def conj(self):
        return self._raw(tuple(a.conj() for a in self._e))

    def dagger(self):
        return self.transpose().conj()

    def trace(self) -> GaussianRational:
        n = self.N
        t = ZERO
        for i in range(n):
            t = t + self._e[i * n + i]
        return t

    def is_zero(self) -> bool:
        return not any(self._e)

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return all(a.is_real() for a in self._e)

    def is_hermitian(self) -> bool:
        return self == self.dagger()

    def det(self) -> GaussianRational:
        rows = [list(r) for r in self.rows()]
        n = self.N
        det = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if rows[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            piv = rows[c][c]
            det = det * piv
            inv = piv.inverse()
            for r in range(c + 1, n):
                f = rows[r][c]
                if f:
                    f = f * inv
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return det

    def inverse(self):
        n = self.N
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows())]
        for c in range(n):
            p = next((r for r in range(c, n) if aug[r][c]), None)
            if p is None:
                raise SingularMatrix("matrix is not invertible")
            aug[c], aug[p] = aug[p], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                f = aug[r][c]
                if r != c and f:
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return type(self)(x for r in aug for x in r[n:])

    def is_invertible(self) -> bool:
        return bool(self.det())

    def proportional_to(self, other):
        """The scalar c with self == c*other, or None."""
        if type(other) is not type(self):
            return None
        c = None
        for a, b in zip(self._e, other._e):
            if not b:
                if a:
                    return None
                continue
            if c is None:
                c = a / b
            elif a != c * b:
                return None
        if c is None or not c:
            return None
        return c

    def normalized(self):
        """Scale so that the first nonzero entry is 1 (projective key)."""
        lead = next((a for a in self._e if a), None)
        if lead is None:
            return self
        return self * lead.inverse()

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash((type(self).__name__, self._e))

    def __repr__(self):
        return f"{type(self).__name__}({format_matrix(self)!r})"


class Mat2(_Square):
    __slots__ = ()
    N = 2


class Mat4(_Square):
    __slots__ = ()
    N = 4


def E(j: int, k: int) -> Mat4:
    """Matrix unit E_jk (1-based indices)."""
    e = [ZERO] * 16
    e[(j - 1) * 4 + (k - 1)] = ONE
    return Mat4._raw(tuple(e))


I2 = Mat2.identity()
I4 = Mat4.identity()

# Real Pauli matrices; sigma2 = sigma1 @ sigma3 keeps every entry rational.
SIGMA = (
    Mat2.from_rows([[1, 0], [0, 1]]),
    Mat2.from_rows([[0, 1], [1, 0]]),
    Mat2.from_rows([[0, -1], [1, 0]]),
    Mat2.from_rows([[1, 0], [0, -1]]),
)


def bracket(x: Mat4, y: Mat4) -> Mat4:
    return x @ y - y @ x


def tensor(a: Mat2, b: Mat2) -> Mat4:
    """(a (x) b)[2*i1 + j1, 2*i2 + j2] = a[i1, i2] * b[j1, j2]."""
    out = [ZERO] * 16
    for i1 in range(2):
        for i2 in range(2):
            x = a[i1, i2]
            if not x:
                continue
            for j1 in range(2):
                for j2 in range(2):
                    y = b[j1, j2]
                    if y:
                        out[(2 * i1 + j1) * 4 + 2 * i2 + j2] = x * y
    return Mat4._raw(tuple(out))


def pauli_tensor(j: int, k: int) -> Mat4:
    return tensor(SIGMA[j], SIGMA[k])


def dagger(x):
    return x.dagger()


@dataclass(frozen=True)
class Signature:
    n_plus: int
    n_zero: int
    n_minus: int

    def __post_init__(self):
        if min(self) < 0:
            raise ValueError("signature counts must be non-negative")

    def __iter__(self):
        return iter((self.n_plus, self.n_zero, self.n_minus))

    def flipped(self) -> "Signature":
        return Signature(self.n_minus, self.n_zero, self.n_plus)

    def __str__(self):
        return f"({self.n_plus},{self.n_zero},{self.n_minus})"


def signature(e) -> Signature:
    """Inertia of a hermitian matrix by congruence diagonalization.

    A nonzero diagonal pivot contributes its sign; when the whole diagonal
    vanishes an off-diagonal entry h gives the hyperbolic block
    [[0, h], [conj(h), 0]], which contributes one +1 and one -1.
    """
    if not e.is_hermitian():
        raise NotHermitian("signature needs a hermitian matrix")
    h = [list(r) for r in e.rows()]
    plus = minus = 0
    while h:
        n = len(h)
        p = next((i for i in range(n) if h[i][i]), None)
        if p is not None:
            d = h[p][p]
            if d.re > 0:
                plus += 1
            else:
                minus += 1
            inv = d.inverse()
            rest = [i for i in range(n) if i != p]
            h = [[h[i][j] - h[i][p] * inv * h[p][j] for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if h[i][j]), None)
        if pair is None:
            break
        a, b = pair
        plus += 1
        minus += 1
        # block inverse of [[0, x], [conj(x), 0]] is [[0, 1/conj(x)], [1/x, 0]]
        x = h[a][b]
        m_ab = x.conj().inverse()
        m_ba = x.inverse()
        rest = [i for i in range(n) if i not in pair]
        h = [
            [h[i][j] - (h[i][a] * m_ab * h[b][j] + h[i][b] * m_ba * h[a][j]) for j in rest]
            for i in rest
        ]
    zero = e.N - plus - minus
    return Signature(plus, zero, minus)


# literals -------------------------------------------------------------------

_ROW_SPLIT = re.compile(r"[;\n]")
_ENTRY_SPLIT = re.compile(r"[\s,]+")


def parse_matrix(text: str, size: int = 4):
    rows = [r.strip() for r in _ROW_SPLIT.split(text) if r.strip()]
    parsed = [[parse_scalar(t) for t in _ENTRY_SPLIT.split(r) if t] for r in rows]
    cls = {2: Mat2, 4: Mat4}[size]
    if len(parsed) != size or any(len(r) != size for r in parsed):
        raise ValueError(f"matrix literal must have {size} rows of {size} entries: {text!r}")
    return cls.from_rows(parsed)


def format_matrix(m, row_sep: str = "; ") -> str:
    return row_sep.join(" ".join(format_scalar(x) for x in r) for r in m.rows())
