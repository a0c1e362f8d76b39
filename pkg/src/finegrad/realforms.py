"""Real forms and the gradings they inherit from complex gradings.

Three routes to a fine group grading of a real form L_J:

* intersect each complex part with L_J and require full real dimension
  (``determine_real_grading``);
* for real-basis gradings, rescale each part by alpha_k with
  conj(alpha_k)/alpha_k equal to the eigenvalue of h, where J = J0 o h
  (``real_basis_witness``);
* split L_J into joint real eigenspaces of a MAD-group of the real form
  (``mad_eigendecompose``).

``gamma2_obstruction`` replays the finite case analysis showing which
real forms the Pauli grading can determine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    InvalidAntiautomorphism,
    MultiplierInvalid,
    NonUnitEigenvalue,
    NotEigensubspace,
    NotInvariant,
    NotRealSpectrum,
)
from .exact import GQ, I, ONE, ZERO, GaussianRational, unit_root
from .gradings import Grading, product_table
from .maps import (
    Antiautomorphism,
    Automorphism,
    acts_as_scalar_on_parts,
    conjugate_aut,
    contains_projective,
    eigenvalue_on,
    fixed_condition,
    generate_group,
    has_real_spectrum,
)
from .mat import Mat4, Signature, bracket, signature
from .report import Report
from .subspace import Field, Subspace, gl4, intersect_real, restricted_complex_kernel, restricted_real_kernel, sl4

MU4 = (ONE, I, -ONE, -I)
EIGHT_DIRECTIONS = (ONE, ONE + I, I, -ONE + I, -ONE, -ONE - I, -I, ONE - I)


@dataclass
class RealForm:
    name: str
    antiaut: Antiautomorphism
    basis: Subspace  # real span
    complex_parent: Subspace

    @property
    def dim(self) -> int:
        return self.basis.dim


def fixed_points(j: Antiautomorphism, parent: Optional[Subspace] = None, name: str = "") -> RealForm:
    """L_J = {X in parent : J(X) = X}; its real dimension must equal dim_C(parent)."""
    parent = parent if parent is not None else sl4()
    basis = intersect_real(parent, j)
    if basis.dim != parent.dim:
        raise DimensionMismatch(f"fixed set has real dimension {basis.dim}, expected {parent.dim}")
    return RealForm(name, j, basis, parent)


def verify_real_form(rf: RealForm) -> Report:
    """Realness (L = L_J + i L_J, direct) and closure with rational constants."""
    rep = Report(True, {"form": rf.name, "dim": rf.dim})
    cplx = Subspace.spanned_by(rf.basis.basis, Field.COMPLEX)
    if cplx.dim != rf.dim or not cplx.equals(rf.complex_parent):
        rep.fail("real basis does not complexify to the parent algebra")
    for a, x in enumerate(rf.basis.basis):
        for y in rf.basis.basis[a + 1:]:
            if rf.basis.coordinates(bracket(x, y)) is None:
                rep.fail("real form is not closed under the bracket")
                return rep
    return rep


# catalog-backed constructors -------------------------------------------------

_FORM_CACHE: Dict[tuple, RealForm] = {}


def sl_real_form(catalog, rep: str) -> RealForm:
    key = ("sl", id(catalog), rep)
    if key not in _FORM_CACHE:
        _FORM_CACHE[key] = fixed_points(catalog.antiautomorphism(rep), sl4(), f"{catalog.form_of_rep(rep)}[{rep}]")
    return _FORM_CACHE[key]


def subalgebra_real_form(catalog, k_name: str, rep: str, name: str = "") -> RealForm:
    """(sp_K or o_K) intersected with the sl real form of representation ``rep``."""
    from .displayed import form_subalgebra

    key = ("sub", id(catalog), k_name, rep)
    if key not in _FORM_CACHE:
        parent = form_subalgebra(catalog.matrices[k_name])
        _FORM_CACHE[key] = fixed_points(catalog.antiautomorphism(rep), parent, name or f"{k_name}[{rep}]")
    return _FORM_CACHE[key]


# 'Fundamental' method ------------------------------------------------------

def determine_real_grading(g: Grading, rf: RealForm) -> Optional[Grading]:
    parts = []
    for p in g.parts:
        inter = intersect_real(p, rf.antiaut)
        if inter.dim != p.dim:
            return None
        parts.append(inter)
    return Grading(rf.basis, parts, f"{g.name}^{rf.name}", list(g.labels))


def same_partition(a: Grading, b: Grading) -> bool:
    """Equal sets of parts, ignoring order."""
    if len(a.parts) != len(b.parts):
        return False
    unused = list(range(len(b.parts)))
    for p in a.parts:
        hit = next((k for k in unused if b.parts[k].equals(p)), None)
        if hit is None:
            return False
        unused.remove(hit)
    return True


def multiplied_grading(g: Grading, alphas: Sequence[GaussianRational], rf: RealForm) -> Grading:
    parts = [Subspace([b * a for b in p.basis], Field.REAL) for p, a in zip(g.parts, alphas)]
    return Grading(rf.basis, parts, f"{g.name}^{rf.name}", list(g.labels))


def verify_multipliers(g: Grading, rf: RealForm, alphas: Sequence[GaussianRational]) -> Report:
    """alpha_k X_k is fixed by J and spans exactly L_k cap L_J; raises MultiplierInvalid."""
    if len(alphas) != len(g.parts):
        raise ValueError("one multiplier per part is required")
    for label, p, a in zip(g.labels, g.parts, alphas):
        for b in p.basis:
            if not fixed_condition(rf.antiaut, b * a):
                raise MultiplierInvalid(label)
        inter = intersect_real(p, rf.antiaut)
        if not inter.equals(Subspace([b * a for b in p.basis], Field.REAL)):
            raise MultiplierInvalid(label, f"multiplier of {label} does not span the whole intersection")
    real = multiplied_grading(g, alphas, rf)
    table = product_table(real)
    return Report(True, {
        "grading": g.name,
        "form": rf.name,
        "parts": len(g.parts),
        "real_structure_constants": table.has_real_constants(),
    })


def verify_coefficient_table(t, catalog) -> Report:
    g = catalog.grading(t.grading).grading()
    rf = sl_real_form(catalog, t.rep)
    rep = verify_multipliers(g, rf, t.alphas)
    if not rep.details["real_structure_constants"]:
        rep.fail("structure constants are not real")
    return rep


def restricted_multipliers(catalog, grading: str, k_name: str, rep: str,
                           corrected: bool = True) -> Tuple[Grading, List[GaussianRational]]:
    """The displayed grading and the sl multipliers of its parts."""
    from .displayed import displayed_subgrading

    src = catalog.grading(grading).grading()
    sub = displayed_subgrading(src, catalog.matrices[k_name], f"{grading}/{k_name}")
    form = catalog.form_of_rep(rep)
    table = catalog.coefficient_table(grading, form)
    if corrected:
        table = catalog.corrected_table(table)
    alphas = [table.alphas[src.label_index(lab)] for lab in sub.labels]
    return sub, alphas


# 'Real Basis' method -------------------------------------------------------

def in_mad_group(h: Automorphism, g: Grading) -> bool:
    """h belongs to the MAD-group generating the fine grading g exactly when it
    acts as a scalar on every part (the MAD-group is the diagonal group of g)."""
    return acts_as_scalar_on_parts(h, g)


def real_basis_witness(g: Grading, h: Automorphism, mad=None) -> Optional[Grading]:
    for p in g.parts:
        if not all(b.is_real() for b in p.basis):
            raise ValueError("the real basis method needs real basis matrices")
    member = in_mad_group(h, g)
    if mad is not None:
        try:
            group = generate_group(mad.generators(), limit=256)
        except ValueError:
            group = None
        if group is not None and contains_projective(group, h) != member:
            raise NotEigensubspace("membership tests disagree")
    if not member:
        return None
    alphas = []
    for label, p in zip(g.labels, g.parts):
        lam = eigenvalue_on(h, p)
        if lam.norm() != 1:
            raise NonUnitEigenvalue(f"eigenvalue {lam} on {label} is not of modulus one")
        alphas.append(unit_root(lam))
    j = Antiautomorphism.from_automorphism(h)
    rf = fixed_points(j, g.parent, f"J0{h!r}")
    real = multiplied_grading(g, alphas, rf)
    for p, a in zip(g.parts, alphas):
        for b in p.basis:
            if not fixed_condition(j, b * a):
                raise MultiplierInvalid(g.labels[g.parts.index(p)])
    return real


# 'MAD-group' method --------------------------------------------------------

def mad_eigendecompose(rf: RealForm, generators: Sequence[Automorphism], source: Grading) -> Grading:
    """Joint real eigenspaces of the generators inside rf.

    Candidate eigenvalues come from the action of each generator on the
    parts of ``source``, a complex grading on which they act diagonally.
    """
    for h in generators:
        for b in rf.basis.basis:
            if rf.basis.coordinates(h.apply(b)) is None:
                raise NotInvariant(f"{h!r} does not preserve {rf.name}")
    pieces = [rf.basis]
    for h in generators:
        lams = []
        for p in source.parts:
            lam = eigenvalue_on(h, p)
            if not lam.is_real():
                raise NotRealSpectrum(f"{h!r} has eigenvalue {lam}")
            if lam not in lams:
                lams.append(lam)
        split = []
        for v in pieces:
            found = []
            for lam in lams:
                w = restricted_real_kernel(v, lambda x, h=h, lam=lam: h.apply(x) - x * lam)
                if w.dim:
                    found.append(w)
            if sum(w.dim for w in found) != v.dim:
                raise NotRealSpectrum(f"{h!r} is not diagonalizable over R on {rf.name}")
            split += found
        pieces = split
    return Grading(rf.basis, pieces, f"mad^{rf.name}", [f"M{k + 1}" for k in range(len(pieces))])


# Gamma2 obstruction ----------------------------------------------------------

@dataclass(frozen=True)
class FormKind:
    name: str


Circular = FormKind("circular")
Anticircular = FormKind("anticircular")


@dataclass(frozen=True)
class HermitianWithSignature:
    signature: Tuple[int, int, int]

    @property
    def name(self) -> str:
        return "hermitian" + str(tuple(self.signature))


@dataclass
class Gamma2Witness:
    kind: str
    matrix: Mat4
    eta: GaussianRational  # phase for X4 = P
    mu: GaussianRational  # phase for X3 = Q
    alphas: List[GaussianRational]
    signature: Optional[Signature] = None


def _pauli_pair(catalog):
    spec = catalog.grading("gamma2")
    return spec.basis["X4"], spec.basis["X3"], spec


def _hermitian_family(p, eta):
    """E with P E = -eta E P^dagger (from alpha4 P E = -conj(alpha4) E P^dagger)."""
    return restricted_complex_kernel(gl4(), lambda e: p @ e + e @ p.dagger() * eta)


def _circular_family(p, nu):
    """F with P F = nu F conj(P)."""
    return restricted_complex_kernel(gl4(), lambda f: p @ f - f @ p.conj() * nu)


def _support(m: Mat4):
    return [(r, c) for r in range(4) for c in range(4) if m[r, c]]


def gamma2_analysis(catalog=None) -> Report:
    """Certificate of the finite case analysis for the Pauli grading.

    * P^4 = I forces eta^4 = 1 (the map E -> P E P is of order four), so four
      phases suffice, and each X4-family is four dimensional.
    * Q is diagonal, so the X3-condition acts entrywise: entry (r, c) of E
      survives only for alpha with alpha q_r + conj(alpha) conj(q_c) = 0
      (hermitian case) or alpha q_r - conj(alpha) conj(q_c) = 0 (circular).
    * Hermitian: the four free parameters need pairwise incompatible
      directions, so at most one is nonzero.  Circular: every parameter
      meets two contradictory conditions, so F = 0.
    """
    from .catalog import load_catalog

    cat = catalog or load_catalog()
    p, q, _ = _pauli_pair(cat)
    rep = Report(True, {})
    if p ** 4 != Mat4.identity():
        rep.fail("P^4 is not the identity")
    qd = [q[r, r] for r in range(4)]
    if any(q[r, c] for r in range(4) for c in range(4) if r != c):
        rep.fail("Q is not diagonal")

    def directions(support, sign):
        ok = []
        for a in EIGHT_DIRECTIONS:
            if all(a * qd[r] + sign * a.conj() * qd[c].conj() == 0 for r, c in support):
                ok.append(a)
        return ok

    for kind, family, sign in (("hermitian", _hermitian_family, 1), ("circular", _circular_family, -1)):
        info = {}
        for eta in MU4:
            fam = family(p, eta)
            if fam.dim != 4:
                rep.fail(f"{kind} family for eta={eta} has dimension {fam.dim}")
            allowed = [directions(_support(b), sign) for b in fam.basis]
            for a in range(len(allowed)):
                for b in range(a + 1, len(allowed)):
                    if set(allowed[a]) & set(allowed[b]):
                        rep.fail(f"{kind} parameters {a + 1} and {b + 1} are compatible for eta={eta}")
            if kind == "circular" and any(allowed):
                rep.fail(f"circular parameter survives for eta={eta}")
            if kind == "hermitian" and not all(allowed):
                rep.fail(f"hermitian parameter without a direction for eta={eta}")
            info[str(eta)] = [[str(a) for a in d] for d in allowed]
        rep.details[kind] = info
    return rep


def _unit_phases(xs, e, hermitian: bool):
    """phase rho_k with X_k E = -rho_k E X_k^dagger (or X F = rho F conj(X))."""
    out = []
    for x in xs:
        lhs = x @ e
        rhs = -(e @ x.dagger()) if hermitian else e @ x.conj()
        rho = lhs.proportional_to(rhs)
        if rho is None or rho.norm() != 1:
            return None
        out.append(rho)
    return out


def gamma2_obstruction(form_kind, catalog=None) -> List[Gamma2Witness]:
    """All defining matrices (with the sign of the free scalar) for which the
    Pauli grading determines a real grading of the requested kind.

    An empty list is the negative result.
    """
    from .catalog import load_catalog

    cat = catalog or load_catalog()
    p, q, spec = _pauli_pair(cat)
    xs = [spec.basis[f"X{k}"] for k in range(1, 16)]
    hermitian = isinstance(form_kind, HermitianWithSignature)
    witnesses: List[Gamma2Witness] = []
    for eta in MU4:
        for mu in MU4:
            if hermitian:
                fam = restricted_complex_kernel(gl4(), lambda e: [
                    p @ e + e @ p.dagger() * eta,
                    q @ e + e @ q.dagger() * mu,
                ])
                if not fam.dim:
                    continue
                candidates = restricted_real_kernel(fam, lambda e: e - e.dagger()).basis
            else:
                fam = restricted_complex_kernel(gl4(), lambda f: [
                    p @ f - f @ p.conj() * eta,
                    q @ f - f @ q.conj() * mu,
                ])
                candidates = fam.basis
            for base in candidates:
                for s in (ONE, -ONE):
                    m = base * s
                    if not m.is_invertible():
                        continue
                    if hermitian:
                        sig = signature(m)
                        if tuple(sig) != tuple(form_kind.signature):
                            continue
                        j = Antiautomorphism.conj_outer(m)
                    else:
                        try:
                            j = Antiautomorphism.conj_inner(m)
                        except InvalidAntiautomorphism:
                            continue
                        if j.sign != (1 if form_kind == Circular else -1):
                            continue
                        sig = None
                    rhos = _unit_phases(xs, m, hermitian)
                    if rhos is None:
                        continue
                    alphas = [unit_root(r) for r in rhos]
                    if not all(fixed_condition(j, x * a) for x, a in zip(xs, alphas)):
                        continue
                    witnesses.append(Gamma2Witness(form_kind.name, m, eta, mu, alphas, sig))
    return witnesses


# real parts ------------------------------------------------------------------

def real_part(group: Sequence[Automorphism], eigenbasis) -> List[Automorphism]:
    return [h for h in group if has_real_spectrum(h, eigenbasis)]


def _keys(group):
    return {h.key() for h in group}


def verify_realpart_relations(catalog=None) -> Report:
    from .catalog import load_catalog

    cat = catalog or load_catalog()
    rep = Report(True, {})
    g7 = generate_group(cat.mad("g7").generators())
    g7_keys = _keys(g7)
    rep.details["g7_order"] = len(g7)

    # (a) real part of G2 inside G7
    gamma2 = cat.grading("gamma2").grading()
    g2 = generate_group(cat.mad("g2").generators())
    g2r = real_part(g2, gamma2)
    listed = generate_group(cat.mad("g2r").generators())
    rep.details["g2_order"] = len(g2)
    rep.details["g2r_order"] = len(g2r)
    if _keys(g2r) != _keys(listed):
        rep.fail("computed real part of G2 differs from the listed one")
    if not (_keys(g2r) < g7_keys):
        rep.fail("real part of G2 is not a proper subset of G7")
    q = Automorphism.inner(cat.matrices["Q"])
    rep.details["inner_Q_real_spectrum"] = has_real_spectrum(q, gamma2)
    if rep.details["inner_Q_real_spectrum"]:
        rep.fail("Inner(Q) should not have real spectrum")

    # (b) conjugated real part of G8 inside G7
    gamma8 = cat.grading("gamma8").grading()
    g8 = generate_group(cat.mad("g8").generators())
    g8r = real_part(g8, gamma8)
    f = Automorphism.inner(cat.matrices["S"])
    conj = [conjugate_aut(h, f) for h in g8r]
    listed8 = generate_group(cat.mad("g8r_conj").generators())
    rep.details["g8_order"] = len(g8)
    rep.details["g8r_order"] = len(g8r)
    if _keys(conj) != _keys(listed8):
        rep.fail("Ad_S-conjugated real part of G8 differs from the listed one")
    if not (_keys(conj) < g7_keys):
        rep.fail("conjugated real part of G8 is not a proper subset of G7")

    # (c) listed real-part generators have real spectrum on their eigenbasis
    pairs = [("g1r", "gamma1"), ("g3r", "gamma3"), ("g4r", "gamma4"), ("g5r", "gamma5"),
             ("g6r", "gamma6"), ("g7r", "gamma7"), ("g2r", "gamma2"), ("g8r_conj", "gamma7")]
    bad = []
    for name, gname in pairs:
        grading = cat.grading(gname).grading()
        for h in cat.mad(name).generators():
            if not has_real_spectrum(h, grading):
                bad.append(name)
    if bad:
        rep.fail(f"generators without real spectrum: {sorted(set(bad))}")
    return rep


# counting --------------------------------------------------------------------

@dataclass
class RealGradingCount:
    total: int
    subtotals: Dict[str, int]
    pairs: List[Tuple[str, str, str]] = field(default_factory=list)  # (form, grading, representation)


def count_real_gradings(catalog=None) -> RealGradingCount:
    """Exhaustive search over the cataloged representations: a (real form,
    grading) pair counts when some representation lets the grading determine
    a real grading of that form."""
    from .catalog import load_catalog
    from .displayed import displayed_subgrading

    cat = catalog or load_catalog()
    pairs: List[Tuple[str, str, str]] = []
    complex_gradings = {n: s.grading() for n, s in cat.gradings.items()}
    for form in cat.real_forms.values():
        if form.algebra != "sl":
            continue
        for gname, g in complex_gradings.items():
            for rep in form.reps:
                if determine_real_grading(g, sl_real_form(cat, rep)) is not None:
                    pairs.append((form.name, gname, rep))
                    break
    for form in cat.real_forms.values():
        if form.algebra == "sl":
            continue
        source = cat.real_form(form.source)
        for d in cat.displayed:
            if d.algebra != form.algebra:
                continue
            sub = displayed_subgrading(complex_gradings[d.grading], d.k, f"{d.grading}/{d.k_name}")
            for rep in source.reps:
                try:
                    rf = subalgebra_real_form(cat, d.k_name, rep)
                except DimensionMismatch:
                    continue
                if determine_real_grading(sub, rf) is not None:
                    pairs.append((form.name, d.grading, rep))
                    break
    algebra = {f.name: f.algebra for f in cat.real_forms.values()}
    subtotals = {a: sum(1 for f, _, _ in pairs if algebra[f] == a) for a in ("sl", "sp", "o")}
    return RealGradingCount(len(pairs), subtotals, pairs)
