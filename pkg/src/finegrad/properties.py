"""Algebraic laws checked on randomized exact instances.

Each law is a predicate on concrete objects; ``run_properties`` feeds
them seeded random instances.  The test suite feeds the same predicates
through hypothesis strategies.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .abelian import smith_normal_form
from .exact import GQ
from .maps import Antiautomorphism, Automorphism
from .mat import Mat2, Mat4, bracket, signature, tensor


# predicates ----------------------------------------------------------------

def jacobi(x: Mat4, y: Mat4, z: Mat4) -> bool:
    return (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero()


def preserves_bracket(h: Automorphism, x: Mat4, y: Mat4) -> bool:
    return h.apply(bracket(x, y)) == bracket(h.apply(x), h.apply(y))


def anti_laws(j: Antiautomorphism, x: Mat4, y: Mat4, c: GQ) -> bool:
    """Involutive, additive, conjugate-linear and bracket-preserving."""
    return (
        j.apply(j.apply(x)) == x
        and j.apply(x + y) == j.apply(x) + j.apply(y)
        and j.apply(x * c) == j.apply(x) * c.conj()
        and j.apply(bracket(x, y)) == bracket(j.apply(x), j.apply(y))
    )


def congruence_invariant(e: Mat4, a: Mat4) -> bool:
    """signature(A E A^dagger) = signature(E) for invertible A."""
    return signature(a @ e @ a.dagger()) == signature(e)


def field_axioms(a: GQ, b: GQ, c: GQ) -> bool:
    ok = (a + b) * c == a * c + b * c and (a * b) * c == a * (b * c) and a * b == b * a
    if a:
        ok = ok and a * a.inverse() == GQ(1)
    return ok and (a - b) + b == a and (a * b).conj() == a.conj() * b.conj()


def mixed_product(a: Mat2, b: Mat2, c: Mat2, d: Mat2) -> bool:
    return tensor(a, b) @ tensor(c, d) == tensor(a @ c, b @ d)


def snf_certificate(m: List[List[int]]) -> bool:
    u, d, v = smith_normal_form(m)

    def mul(p, q):
        return [[sum(p[i][k] * q[k][j] for k in range(len(q))) for j in range(len(q[0]))] for i in range(len(p))]

    if mul(mul(u, m), v) != d:
        return False
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    off = all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    chain = all(x >= 0 for x in diag) and all(
        diag[k + 1] % diag[k] == 0 if diag[k] else diag[k + 1] == 0 for k in range(len(diag) - 1))
    return off and chain


# random instances ------------------------------------------------------------

def rand_q(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def rand_gq(rng: random.Random) -> GQ:
    return GQ(rand_q(rng), rand_q(rng) if rng.random() < 0.7 else 0)


def rand_mat(rng: random.Random, cls=Mat4, density: float = 0.6):
    n = cls.N
    return cls.from_rows([[rand_gq(rng) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)])


def rand_invertible(rng: random.Random, cls=Mat4, small: bool = False):
    while True:
        if small:  # Gaussian integers keep inverses cheap
            m = cls.from_rows([[GQ(rng.randint(-1, 1), rng.randint(-1, 1)) for _ in range(cls.N)]
                               for _ in range(cls.N)])
        else:
            m = rand_mat(rng, cls, 0.7)
        if m.is_invertible():
            return m


def rand_sl(rng: random.Random) -> Mat4:
    m = rand_mat(rng)
    return m - Mat4.diag(m.trace(), 0, 0, 0)


_J0 = Mat4.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])


def rand_antiautomorphism(rng: random.Random) -> Antiautomorphism:
    a = rand_invertible(rng, small=True)
    kind = rng.randrange(3)
    if kind == 0:  # F conj(F) = I
        return Antiautomorphism.conj_inner(a @ a.conj().inverse())
    if kind == 1:  # F conj(F) = -I
        return Antiautomorphism.conj_inner(a @ _J0 @ a.conj().inverse())
    d = Mat4.diag(*[rng.choice((1, -1)) for _ in range(4)])
    return Antiautomorphism.conj_outer(a @ d @ a.dagger())


def rand_hermitian(rng: random.Random) -> Mat4:
    m = rand_mat(rng, Mat4, 0.5)
    return m + m.dagger()


def rand_int_matrix(rng: random.Random) -> List[List[int]]:
    r, c = rng.randint(1, 5), rng.randint(1, 5)
    return [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]


LAWS: Dict[str, Callable[[random.Random], bool]] = {
    "jacobi": lambda r: jacobi(rand_sl(r), rand_sl(r), rand_sl(r)),
    "automorphism_bracket": lambda r: preserves_bracket(
        (Automorphism.inner if r.random() < 0.5 else Automorphism.outer)(rand_invertible(r)), rand_sl(r), rand_sl(r)),
    "antiautomorphism_laws": lambda r: anti_laws(rand_antiautomorphism(r), rand_sl(r), rand_sl(r), rand_gq(r)),
    "signature_congruence": lambda r: congruence_invariant(rand_hermitian(r), rand_invertible(r)),
    "field_axioms": lambda r: field_axioms(rand_gq(r), rand_gq(r), rand_gq(r)),
    "tensor_mixed_product": lambda r: mixed_product(*(rand_mat(r, Mat2) for _ in range(4))),
    "smith_normal_form": lambda r: snf_certificate(rand_int_matrix(r)),
}


def run_properties(n: int = 100, seed: int = 0) -> Dict[str, Tuple[int, int]]:
    """name -> (instances, failures)."""
    out = {}
    for name, law in LAWS.items():
        rng = random.Random(f"{seed}:{name}")
        failures = sum(1 for _ in range(n) if not law(rng))
        out[name] = (n, failures)
    return out
