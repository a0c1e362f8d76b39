from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from finegrad import properties as law
from finegrad.exact import GQ
from finegrad.maps import Antiautomorphism, Automorphism
from finegrad.mat import Mat2, Mat4

PROFILE = settings(max_examples=100, deadline=None)

scalars = st.builds(lambda a, b, d: GQ(Fraction(a, d), Fraction(b, d)),
                    st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 3))
small = st.builds(GQ, st.integers(-1, 1), st.integers(-1, 1))


def matrices(cls=Mat4, entries=scalars):
    n = cls.N
    flat = st.lists(entries, min_size=n * n, max_size=n * n)
    return flat.map(lambda v: cls.from_rows([v[k * n:(k + 1) * n] for k in range(n)]))


traceless = matrices().map(lambda m: m - Mat4.diag(m.trace(), 0, 0, 0))
invertible = matrices(entries=small).filter(lambda m: m.is_invertible())
_J0 = Mat4.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])


@st.composite
def antiautomorphisms(draw):
    a = draw(invertible)
    kind = draw(st.sampled_from(["circular", "anticircular", "hermitian"]))
    if kind == "circular":
        return Antiautomorphism.conj_inner(a @ a.conj().inverse())
    if kind == "anticircular":
        return Antiautomorphism.conj_inner(a @ _J0 @ a.conj().inverse())
    d = Mat4.diag(*draw(st.lists(st.sampled_from([1, -1]), min_size=4, max_size=4)))
    return Antiautomorphism.conj_outer(a @ d @ a.dagger())


@PROFILE
@given(traceless, traceless, traceless)
def test_jacobi(x, y, z):
    assert law.jacobi(x, y, z)


@PROFILE
@given(invertible, st.booleans(), traceless, traceless)
def test_automorphisms_preserve_bracket(a, inner, x, y):
    h = Automorphism.inner(a) if inner else Automorphism.outer(a)
    assert law.preserves_bracket(h, x, y)


@PROFILE
@given(antiautomorphisms(), matrices(entries=small), matrices(entries=small), scalars)
def test_antiautomorphism_laws(j, x, y, c):
    assert law.anti_laws(j, x, y, c)


@PROFILE
@given(matrices(entries=small), invertible)
def test_signature_congruence(m, a):
    assert law.congruence_invariant(m + m.dagger(), a)


@PROFILE
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert law.field_axioms(a, b, c)


@PROFILE
@given(matrices(Mat2), matrices(Mat2), matrices(Mat2), matrices(Mat2))
def test_tensor_mixed_product(a, b, c, d):
    assert law.mixed_product(a, b, c, d)


@PROFILE
@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_smith_normal_form(m):
    assert law.snf_certificate(m)


def test_seeded_runner():
    results = law.run_properties(n=20, seed=1)
    assert all(fails == 0 for _, fails in results.values())
