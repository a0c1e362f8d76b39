"""Loading the transcribed data: MAD-groups, gradings, displayed subalgebras,
real-form representations and real coefficient tables.

The data lives in ``data/catalog.yaml`` next to a ``.sha256`` checksum.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from .abelian import AbelianGroup
from .errors import CatalogCorrupt, FinegradError, UnknownName
from .exact import GQ, I, ONE, parse_scalar
from .gradings import Grading
from .maps import Antiautomorphism, Automorphism
from .mat import E, I2, I4, SIGMA, Mat2, Mat4, Signature, parse_matrix, signature, tensor
from .subspace import Field, Subspace, sl4

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_CATALOG = DATA_DIR / "catalog.yaml"

# expressions ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        elif op is not None and not op.isspace():
            out.append(("op", op))
        pos = m.end()
    out.append(("end", ""))
    return out


def _mul(a, b):
    if isinstance(a, (Mat2, Mat4)) and isinstance(b, (Mat2, Mat4)):
        return a @ b
    if isinstance(a, (Mat2, Mat4)):
        return a * b
    return b * a if isinstance(b, (Mat2, Mat4)) else a * b


class _Parser:
    """Recursive descent over: expr := term (+|- term)*; term := unary (* unary)*;
    unary := -unary | power; power := atom (^ int)?"""

    def __init__(self, text: str, names: Dict[str, Mat4]):
        self.tokens = _tokenize(text)
        self.k = 0
        self.names = names
        self.text = text

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.k]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise ValueError(f"unexpected {tok[1]!r} in expression {self.text!r}")
        self.k += 1
        return tok

    def parse(self):
        v = self.expr()
        self.take("end")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() == ("op", "*"):
            self.take()
            v = _mul(v, self.unary())
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            n = int(self.take("num")[1])
            v = v ** (-n if neg else n)
        return v

    def args(self):
        self.take("op", "(")
        out = [self.expr()]
        while self.peek() == ("op", ","):
            self.take()
            out.append(self.expr())
        self.take("op", ")")
        return out

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return parse_scalar(val)
        if kind == "op" and val == "(":
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        if kind != "name":
            raise ValueError(f"unexpected {val!r} in expression {self.text!r}")
        self.take()
        if val == "i":
            return I
        if val in ("diag", "kron", "dsum"):
            args = self.args()
            if val == "diag":
                return (Mat4 if len(args) == 4 else Mat2).diag(*args)
            if val == "kron":
                return tensor(*args)
            a, b = args
            z = GQ(0)
            return Mat4.from_rows([
                [a[0, 0], a[0, 1], z, z],
                [a[1, 0], a[1, 1], z, z],
                [z, z, b[0, 0], b[0, 1]],
                [z, z, b[1, 0], b[1, 1]],
            ])
        m = re.fullmatch(r"E([1-4])([1-4])", val)
        if m:
            return E(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"s([0-3])", val)
        if m:
            return SIGMA[int(m.group(1))]
        if val == "I2":
            return I2
        if val == "I4":
            return I4
        if val in self.names:
            return self.names[val]
        raise UnknownName(f"unknown symbol {val!r} in expression {self.text!r}")


def parse_expression(text, names: Optional[Dict[str, Mat4]] = None):
    """Evaluate a catalog expression to a scalar or matrix."""
    return _Parser(str(text), names or {}).parse()


def parse_mat4(text, names: Optional[Dict[str, Mat4]] = None) -> Mat4:
    v = parse_expression(text, names)
    if isinstance(v, Mat4):
        return v
    if isinstance(v, GQ):
        return I4 * v
    raise ValueError(f"expression {text!r} is not a 4x4 matrix")


# specs ---------------------------------------------------------------------

@dataclass
class MadGroupSpec:
    name: str
    inner_generators: List[Mat4]
    outer_generator: Optional[Mat4] = None
    samples: str = ""

    def generators(self) -> List[Automorphism]:
        gens = [Automorphism.inner(a) for a in self.inner_generators]
        if self.outer_generator is not None:
            gens.append(Automorphism.outer(self.outer_generator))
        return gens


@dataclass
class GradingSpec:
    name: str
    mad: str
    basis: Dict[str, Mat4]
    parts: List[List[str]]
    claimed_group: AbelianGroup
    claimed_group_text: str = ""

    def grading(self) -> Grading:
        subspaces = [Subspace([self.basis[x] for x in p], Field.COMPLEX) for p in self.parts]
        return Grading(sl4(), subspaces, self.name)

    @property
    def part_labels(self) -> List[str]:
        return [f"L{k + 1}" for k in range(len(self.parts))]


@dataclass
class DisplayedSpec:
    algebra: str  # "sp" or "o"
    grading: str
    k_name: str
    k: Mat4
    selected_parts: List[str]
    split: Optional[str] = None

    @property
    def symmetry(self) -> str:
        return "Skew" if self.algebra == "sp" else "Symmetric"


@dataclass
class RealFormSpec:
    name: str
    algebra: str  # sl, sp, o
    kind: str = ""
    reps: Dict[str, Antiautomorphism] = field(default_factory=dict)
    signature: Optional[Signature] = None
    source: Optional[str] = None


@dataclass
class CoefficientTable:
    grading: str
    form: str
    rep: str
    alphas: List[GQ]


@dataclass
class Erratum:
    """A printed multiplier that fails verification, with the value that passes."""
    grading: str
    form: str
    part: str
    printed: GQ
    corrected: GQ
    note: str = ""


@dataclass
class SubalgebraRealSpec:
    form: str
    grading: str
    k_name: str
    rep: str


@dataclass
class MadOnRealForm:
    form: str
    rep: str
    real_part: str
    grading: str


@dataclass
class Catalog:
    matrices: Dict[str, Mat4]
    mad_groups: Dict[str, MadGroupSpec]
    real_parts: Dict[str, MadGroupSpec]
    gradings: Dict[str, GradingSpec]
    displayed: List[DisplayedSpec]
    real_forms: Dict[str, RealFormSpec]
    coefficients: List[CoefficientTable]
    subalgebra_real_forms: List[SubalgebraRealSpec]
    mad_on_real_forms: List[MadOnRealForm]
    path: str = ""
    errata: List[Erratum] = field(default_factory=list)

    def grading(self, name: str) -> GradingSpec:
        try:
            return self.gradings[name]
        except KeyError:
            raise UnknownName(f"unknown grading {name!r}") from None

    def mad(self, name: str) -> MadGroupSpec:
        if name in self.mad_groups:
            return self.mad_groups[name]
        if name in self.real_parts:
            return self.real_parts[name]
        raise UnknownName(f"unknown MAD-group {name!r}")

    def real_form(self, name: str) -> RealFormSpec:
        try:
            return self.real_forms[name]
        except KeyError:
            raise UnknownName(f"unknown real form {name!r}") from None

    def antiautomorphism(self, rep: str) -> Antiautomorphism:
        for rf in self.real_forms.values():
            if rep in rf.reps:
                return rf.reps[rep]
        raise UnknownName(f"unknown representation {rep!r}")

    def form_of_rep(self, rep: str) -> str:
        for rf in self.real_forms.values():
            if rep in rf.reps:
                return rf.name
        raise UnknownName(f"unknown representation {rep!r}")

    def displayed_for(self, grading: str, k_name: str) -> DisplayedSpec:
        for d in self.displayed:
            if d.grading == grading and d.k_name == k_name:
                return d
        raise UnknownName(f"no displayed subalgebra for {grading} with {k_name}")

    def coefficient_table(self, grading: str, form: str) -> CoefficientTable:
        for t in self.coefficients:
            if t.grading == grading and t.form == form:
                return t
        raise UnknownName(f"no coefficient table for {grading} on {form}")

    def corrected_table(self, t: CoefficientTable) -> CoefficientTable:
        """The table with the recorded errata applied."""
        labels = self.grading(t.grading).part_labels
        alphas = list(t.alphas)
        for e in self.errata:
            if (e.grading, e.form) == (t.grading, t.form):
                alphas[labels.index(e.part)] = e.corrected
        return CoefficientTable(t.grading, t.form, t.rep, alphas)


# loading -------------------------------------------------------------------

def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _checksum(path: Path) -> None:
    sidecar = path.with_name(path.name + ".sha256")
    if not sidecar.exists():
        raise CatalogCorrupt(f"missing checksum file {sidecar}")
    expected = sidecar.read_text().split()[0].strip().lower()
    if file_digest(path) != expected:
        raise CatalogCorrupt(f"checksum mismatch for {path}")


def _mad_spec(name, raw, names) -> MadGroupSpec:
    inner = [parse_mat4(x, names) for x in raw.get("inner", [])]
    outer = raw.get("outer")
    return MadGroupSpec(name, inner, parse_mat4(outer, names) if outer else None, raw.get("samples", ""))


def _build(raw: dict, path: str) -> Catalog:
    if raw.get("format") != "finegrad-catalog":
        raise CatalogCorrupt("not a finegrad catalog file")
    entry = "matrices"
    try:
        names = {k: parse_matrix(v) for k, v in raw["matrices"].items()}
        entry = "mad_groups"
        mads = {k: _mad_spec(k, v, names) for k, v in raw["mad_groups"].items()}
        entry = "real_parts"
        parts_r = {k: _mad_spec(k, v, names) for k, v in raw.get("real_parts", {}).items()}

        gradings = {}
        for gname, g in raw["gradings"].items():
            entry = f"gradings.{gname}"
            basis = {x: parse_mat4(e, names) for x, e in g["basis"].items()}
            for x, m in basis.items():
                if m.trace():
                    raise CatalogCorrupt(f"{gname}: basis matrix {x} is not traceless")
            listed = [x for p in g["parts"] for x in p]
            if sorted(listed) != sorted(basis):
                raise CatalogCorrupt(f"{gname}: parts do not use every basis matrix exactly once")
            if g["mad"] not in mads:
                raise CatalogCorrupt(f"{gname}: unknown MAD-group {g['mad']}")
            gradings[gname] = GradingSpec(
                gname, g["mad"], basis, [list(p) for p in g["parts"]],
                AbelianGroup.parse(g["group"]), g["group"],
            )

        displayed = []
        for d in raw["displayed"]:
            entry = f"displayed.{d['grading']}.{d['K']}"
            k = names[d["K"]]
            sym = k.transpose()
            if not k.is_invertible():
                raise CatalogCorrupt(f"{entry}: K is singular")
            if d["algebra"] == "sp" and sym != -k or d["algebra"] == "o" and sym != k:
                raise CatalogCorrupt(f"{entry}: K has the wrong symmetry")
            displayed.append(DisplayedSpec(d["algebra"], d["grading"], d["K"], k, list(d["parts"]), d.get("split")))

        forms = {}
        for fname, f in raw["real_forms"].items():
            entry = f"real_forms.{fname}"
            reps = {}
            for rname, r in f.get("reps", {}).items():
                m = names[r["matrix"]]
                if r["type"] == "ConjInner":
                    reps[rname] = Antiautomorphism.conj_inner(m)
                else:
                    reps[rname] = Antiautomorphism.conj_outer(m)
            sig = Signature(*f["signature"]) if "signature" in f else None
            for rname, j in reps.items():
                if f.get("kind") == "circular" and j.sign != 1:
                    raise CatalogCorrupt(f"{entry}: {rname} is not circular")
                if f.get("kind") == "anticircular" and j.sign != -1:
                    raise CatalogCorrupt(f"{entry}: {rname} is not anticircular")
                if sig is not None:
                    s = signature(j.matrix)
                    if s != sig and s.flipped() != sig:
                        raise CatalogCorrupt(f"{entry}: {rname} has signature {s}, expected {sig}")
            forms[fname] = RealFormSpec(fname, f["algebra"], f.get("kind", ""), reps, sig, f.get("source"))

        coeffs = []
        for t in raw["coefficients"]:
            entry = f"coefficients.{t['grading']}.{t['form']}"
            alphas = [parse_scalar(a) for a in str(t["alphas"]).split()]
            if len(alphas) != len(gradings[t["grading"]].parts):
                raise CatalogCorrupt(f"{entry}: wrong number of multipliers")
            if any(not a for a in alphas):
                raise CatalogCorrupt(f"{entry}: zero multiplier")
            if t["rep"] not in forms[t["form"]].reps:
                raise CatalogCorrupt(f"{entry}: representation {t['rep']} not listed for {t['form']}")
            coeffs.append(CoefficientTable(t["grading"], t["form"], t["rep"], alphas))

        entry = "subalgebra_real_forms"
        subs = [SubalgebraRealSpec(s["form"], s["grading"], s["K"], s["rep"]) for s in raw["subalgebra_real_forms"]]
        entry = "mad_on_real_forms"
        mors = [MadOnRealForm(m["form"], m["rep"], m["real_part"], m["grading"]) for m in raw["mad_on_real_forms"]]
        entry = "errata"
        errata = []
        for e in raw.get("errata", []):
            table = next((t for t in coeffs if (t.grading, t.form) == (e["grading"], e["form"])), None)
            if table is None:
                raise CatalogCorrupt(f"errata: no table for {e['grading']}/{e['form']}")
            printed = parse_scalar(str(e["printed"]))
            k = gradings[e["grading"]].part_labels.index(e["part"])
            if table.alphas[k] != printed:
                raise CatalogCorrupt(f"errata: printed value for {e['grading']}/{e['form']}/{e['part']} does not match the table")
            errata.append(Erratum(e["grading"], e["form"], e["part"], printed,
                                  parse_scalar(str(e["corrected"])), e.get("note", "")))
    except CatalogCorrupt:
        raise
    except (KeyError, TypeError, ValueError, FinegradError) as exc:
        raise CatalogCorrupt(f"{entry}: {exc}") from exc
    return Catalog(names, mads, parts_r, gradings, displayed, forms, coeffs, subs, mors, path, errata)


def load_catalog(path=None) -> Catalog:
    """Read, checksum and validate a catalog file (default: the bundled one)."""
    if path is None:
        return _default_catalog()
    return _load(Path(path))


def _load(path: Path) -> Catalog:
    try:
        _checksum(path)
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError:
        raise
    except yaml.YAMLError as exc:
        raise CatalogCorrupt(f"cannot parse {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise CatalogCorrupt(f"{path} does not hold a mapping")
    return _build(raw, str(path))


@lru_cache(maxsize=1)
def _default_catalog() -> Catalog:
    return _load(DEFAULT_CATALOG)
