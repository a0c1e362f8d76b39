"""Named verification checks and their reports.

Every check yields a ``CheckResult`` with a stable identifier, the catalog
entry it exercises, a pass/fail status and JSON-ready details.  A check
whose expected outcome is a negative (a grading that must *not* be
determined) passes when the negative is observed.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Callable, Dict, Iterator, List, Optional

from .displayed import certify_nongroup_refinement, displayed_subgrading, form_condition
from .errors import DimensionMismatch, FinegradError, MultiplierInvalid, UnknownName
from .exact import format_scalar
from .gradings import eigenlabel_certificate, product_table, universal_group_of, verify_direct_sum
from .realforms import (
    Anticircular,
    Circular,
    HermitianWithSignature,
    count_real_gradings,
    determine_real_grading,
    gamma2_analysis,
    gamma2_obstruction,
    mad_eigendecompose,
    real_basis_witness,
    restricted_multipliers,
    same_partition,
    sl_real_form,
    subalgebra_real_form,
    verify_coefficient_table,
    verify_multipliers,
    verify_real_form,
    verify_realpart_relations,
)

PASS = "pass"
FAIL = "fail"
SCOPES = ("all", "grading", "realform", "displayed", "realparts", "count")
FORM_DIMS = {"sl": 15, "sp": 10, "o": 6}

# which obstruction kind each sl real form corresponds to
GAMMA2_KIND = {
    "sl4r": Circular,
    "sus4": Anticircular,
    "su40": HermitianWithSignature((4, 0, 0)),
    "su31": HermitianWithSignature((3, 0, 1)),
    "su22": HermitianWithSignature((2, 0, 2)),
}
GAMMA2_REFERENCE = {"su31": "E31_3", "su22": "E22_4"}


@dataclass
class CheckResult:
    check_id: str
    source: str
    status: str
    details: Dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class SuiteReport:
    checks: List[CheckResult]
    generated_at: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> Dict[str, int]:
        n = sum(1 for c in self.checks if c.passed)
        return {"checks": len(self.checks), "passed": n, "failed": len(self.checks) - n}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def render_json(report: SuiteReport) -> str:
    body = {
        "generated_at": report.generated_at,
        "summary": report.summary(),
        "checks": [asdict(c) for c in sorted(report.checks, key=lambda c: c.check_id)],
    }
    return json.dumps(_jsonable(body), indent=2, sort_keys=True)


def parse_json(text: str) -> SuiteReport:
    body = json.loads(text)
    checks = [CheckResult(c["check_id"], c["source"], c["status"], c["details"]) for c in body["checks"]]
    return SuiteReport(checks, body.get("generated_at", ""))


def render_md(report: SuiteReport) -> str:
    s = report.summary()
    lines = [
        "# Verification report",
        "",
        f"{s['passed']} of {s['checks']} checks passed. Generated {report.generated_at}.",
        "",
        "| check | source | status |",
        "|---|---|---|",
    ]
    for c in sorted(report.checks, key=lambda c: c.check_id):
        lines.append(f"| {c.check_id} | {c.source} | {c.status.upper()} |")
    failed = [c for c in report.checks if not c.passed]
    if failed:
        lines += ["", "## Failures", ""]
        for c in sorted(failed, key=lambda c: c.check_id):
            lines.append(f"* **{c.check_id}**: {'; '.join(c.details.get('problems', [])) or 'failed'}")
    return "\n".join(lines) + "\n"


def _result(check_id, source, ok, details) -> CheckResult:
    return CheckResult(check_id, source, PASS if ok else FAIL, _jsonable(details))


def _guard(check_id: str, source: str, fn: Callable[[], CheckResult]) -> CheckResult:
    try:
        return fn()
    except FinegradError as exc:
        return _result(check_id, source, False, {"problems": [f"{type(exc).__name__}: {exc}"]})


# gradings ------------------------------------------------------------------

def check_grading(cat, name: str) -> CheckResult:
    spec = cat.grading(name)
    g = spec.grading()
    problems = []
    ds = verify_direct_sum(g)
    problems += ds.problems
    table = product_table(g)
    eigenlabel_certificate(g, cat.mad(spec.mad).generators())
    u = universal_group_of(g, table)
    if str(u.group) != str(spec.claimed_group):
        problems.append(f"universal group {u.group}, claimed {spec.claimed_group}")
    if not u.is_group_grading:
        problems.append("not a group grading")
    details = {
        "dims": g.dims,
        "parts": len(g.parts),
        "universal_group": str(u.group),
        "claimed_group": str(spec.claimed_group),
        "closure": True,
        "eigenlabels_distinct": True,
        "problems": problems,
    }
    return _result(f"grading.{name}", f"gradings.{name}", not problems, details)


# displayed subalgebras -----------------------------------------------------

def check_displayed(cat, d) -> CheckResult:
    src = cat.grading(d.grading).grading()
    sub = displayed_subgrading(src, d.k, f"{d.grading}/{d.k_name}")
    problems = []
    if set(sub.labels) != set(d.selected_parts) or len(sub.labels) != len(d.selected_parts):
        problems.append(f"selected {sub.labels}, listed {list(d.selected_parts)}")
    for label, p in zip(src.labels, src.parts):
        inside = label in sub.labels
        if any(form_condition(b, d.k) != inside for b in p.basis):
            problems.append(f"part {label} violates the selection rule")
    dim = sum(p.dim for p in sub.parts)
    if dim != FORM_DIMS[d.algebra]:
        problems.append(f"dimension {dim}")
    u = universal_group_of(sub)
    details = {"selected": sub.labels, "dim": dim, "K": d.k_name, "universal_group": str(u.group),
               "problems": problems}
    cid = f"displayed.{d.algebra}.{d.grading}.{d.k_name}"
    return _result(cid, f"displayed.{d.algebra}.{d.grading}", not problems, details)


def check_nongroup(cat) -> CheckResult:
    rep = certify_nongroup_refinement(cat)
    return _result("displayed.o.gamma5.split", "displayed.o.gamma5.split", rep.ok,
                   dict(rep.details, problems=rep.problems))


# real forms ------------------------------------------------------------------

def check_real_form_rep(cat, form, rep: str, k_name: Optional[str] = None) -> CheckResult:
    rf = sl_real_form(cat, rep) if k_name is None else subalgebra_real_form(cat, k_name, rep)
    r = verify_real_form(rf)
    want = FORM_DIMS[form.algebra]
    if rf.dim != want:
        r.fail(f"dimension {rf.dim}, expected {want}")
    cid = f"realform.{form.name}.valid.{rep}" + (f".{k_name}" if k_name else "")
    return _result(cid, f"real_forms.{form.name}", r.ok, dict(r.details, problems=r.problems))


def _erratum_details(cat, grading, form):
    errs = [e for e in cat.errata if (e.grading, e.form) == (grading, form)]
    return [{"part": e.part, "printed": format_scalar(e.printed), "corrected": format_scalar(e.corrected),
             "note": e.note} for e in errs]


def check_sl_pair(cat, form, grading: str) -> CheckResult:
    """Positive pair: printed multipliers verify and agree with the intersection
    method (and with the real-basis method when it applies).  Negative pair:
    no cataloged representation yields a real grading."""
    g = cat.grading(grading).grading()
    cid = f"realform.{form.name}.{grading}"
    src = f"coefficients.{grading}.{form.name}"
    real_basis = all(b.is_real() for p in g.parts for b in p.basis)
    try:
        table = cat.coefficient_table(grading, form.name)
    except UnknownName:
        table = None
    if table is None:
        found = [rep for rep in form.reps if determine_real_grading(g, sl_real_form(cat, rep)) is not None]
        witnesses = []
        if real_basis:
            witnesses = [rep for rep, j in form.reps.items() if real_basis_witness(g, j.automorphism) is not None]
        details = {"expected": "not determined", "result": "determined" if found else "not determined",
                   "representations": sorted(form.reps), "problems": []}
        if found or witnesses:
            details["problems"].append(f"unexpectedly determined via {sorted(set(found + witnesses))}")
        return _result(cid, f"real_forms.{form.name}", not (found or witnesses), details)

    problems = []
    details = {"expected": "determined", "representation": table.rep}
    rf = sl_real_form(cat, table.rep)
    real = determine_real_grading(g, rf)
    details["result"] = "determined" if real is not None else "not determined"
    if real is None:
        problems.append("intersection method does not determine a real grading")
    try:
        rep = verify_coefficient_table(table, cat)
        details["real_structure_constants"] = rep.details["real_structure_constants"]
        problems += rep.problems
    except MultiplierInvalid as exc:
        problems.append(f"printed multiplier fails: {exc}")
        details["failing_part"] = exc.part
        errata = _erratum_details(cat, grading, form.name)
        if errata:
            details["errata"] = errata
            try:
                verify_coefficient_table(cat.corrected_table(table), cat)
                details["corrected_table_verifies"] = True
            except MultiplierInvalid:
                details["corrected_table_verifies"] = False
    if real_basis:
        h = form.reps[table.rep].automorphism
        w = real_basis_witness(g, h)
        agrees = w is not None and real is not None and same_partition(w, real)
        details["real_basis_method"] = "agrees" if agrees else "disagrees"
        if not agrees:
            problems.append("real basis method does not reproduce the grading")
    details["problems"] = problems
    return _result(cid, src, not problems, details)


def check_subalgebra_pair(cat, form, grading: str) -> CheckResult:
    cid = f"realform.{form.name}.{grading}"
    row = next((s for s in cat.subalgebra_real_forms if s.form == form.name and s.grading == grading), None)
    source = cat.real_form(form.source)
    if row is None:
        found = []
        for d in cat.displayed:
            if d.algebra != form.algebra or d.grading != grading:
                continue
            sub = displayed_subgrading(cat.grading(grading).grading(), d.k, f"{grading}/{d.k_name}")
            for rep in source.reps:
                try:
                    rf = subalgebra_real_form(cat, d.k_name, rep)
                except DimensionMismatch:
                    continue
                if determine_real_grading(sub, rf) is not None:
                    found.append(f"{d.k_name}/{rep}")
        details = {"expected": "not determined", "result": "determined" if found else "not determined",
                   "problems": [f"unexpectedly determined via {found}"] if found else []}
        return _result(cid, f"real_forms.{form.name}", not found, details)

    sub, alphas = restricted_multipliers(cat, grading, row.k_name, row.rep)
    rf = subalgebra_real_form(cat, row.k_name, row.rep)
    problems = []
    real = determine_real_grading(sub, rf)
    if real is None:
        problems.append("intersection method does not determine a real grading")
    rep = verify_multipliers(sub, rf, alphas)
    if not rep.details["real_structure_constants"]:
        problems.append("structure constants are not real")
    details = {"expected": "determined", "result": "determined" if real is not None else "not determined",
               "K": row.k_name, "representation": row.rep, "parts": sub.labels,
               "multipliers": [format_scalar(a) for a in alphas], "problems": problems}
    return _result(cid, f"subalgebra_real_forms.{form.name}.{grading}", not problems, details)


def check_mad_agreement(cat, row) -> CheckResult:
    rf = sl_real_form(cat, row.rep)
    src = cat.grading(row.grading).grading()
    split = mad_eigendecompose(rf, cat.mad(row.real_part).generators(), src)
    real = determine_real_grading(src, rf)
    ok = real is not None and same_partition(split, real)
    details = {"parts": len(split.parts), "dims": split.dims, "agrees": ok,
               "problems": [] if ok else ["MAD-group split differs from the intersection method"]}
    return _result(f"realform.{row.form}.mad.{row.real_part}", f"mad_on_real_forms.{row.form}.{row.real_part}",
                   ok, details)


def check_gamma2(cat, form_name: str) -> CheckResult:
    kind = GAMMA2_KIND[form_name]
    witnesses = gamma2_obstruction(kind, cat)
    ref = GAMMA2_REFERENCE.get(form_name)
    problems = []
    details = {"kind": kind.name, "witnesses": len(witnesses)}
    if ref is None:
        details["expected"] = "absent"
        if witnesses:
            problems.append("found a witness where none should exist")
    else:
        details["expected"] = f"witness proportional to {ref}"
        e = cat.matrices[ref]
        match = [w for w in witnesses if w.matrix.proportional_to(e) is not None]
        if not match:
            problems.append(f"no witness proportional to {ref}")
        else:
            w = match[0]
            details["reference_match"] = {"eta": str(w.eta), "mu": str(w.mu), "signature": str(w.signature),
                                          "scalar": str(w.matrix.proportional_to(e))}
    details["problems"] = problems
    return _result(f"realform.{form_name}.gamma2_obstruction", f"real_forms.{form_name}", not problems, details)


def check_gamma2_analysis(cat) -> CheckResult:
    rep = gamma2_analysis(cat)
    return _result("realform.gamma2_analysis", "gradings.gamma2", rep.ok, {"problems": rep.problems})


# real parts and count ----------------------------------------------------------

def check_realparts(cat) -> CheckResult:
    rep = verify_realpart_relations(cat)
    return _result("realparts.relations", "real_parts", rep.ok, dict(rep.details, problems=rep.problems))


def check_count(cat) -> CheckResult:
    res = count_real_gradings(cat)
    problems = []
    expected = {"sl": 23, "sp": 7, "o": 14}
    if res.total != 44 or res.subtotals != expected:
        problems.append(f"count {res.total} {res.subtotals}")
    listed = {(t.form, t.grading) for t in cat.coefficients}
    listed |= {(s.form, s.grading) for s in cat.subalgebra_real_forms}
    got = {(f, g) for f, g, _ in res.pairs}
    if got != listed:
        problems.append(f"pairs differ from the catalog: extra {sorted(got - listed)}, missing {sorted(listed - got)}")
    details = {"total": res.total, "subtotals": res.subtotals,
               "pairs": [f"{f}/{g}" for f, g, _ in res.pairs], "problems": problems}
    return _result("count.total", "coefficients+subalgebra_real_forms", not problems, details)


# driver --------------------------------------------------------------------

def iter_checks(cat, scope: str = "all", name: Optional[str] = None,
                grading: Optional[str] = None) -> Iterator[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    if scope in ("all", "grading"):
        names = [name] if scope == "grading" and name else list(cat.gradings)
        for n in names:
            cat.grading(n)
            yield _guard(f"grading.{n}", f"gradings.{n}", lambda n=n: check_grading(cat, n))
    if scope in ("all", "displayed"):
        for d in cat.displayed:
            if scope == "displayed" and name and d.grading != name:
                continue
            yield _guard(f"displayed.{d.algebra}.{d.grading}.{d.k_name}", "displayed",
                         lambda d=d: check_displayed(cat, d))
        if not (scope == "displayed" and name and name != "gamma5"):
            yield _guard("displayed.o.gamma5.split", "displayed", lambda: check_nongroup(cat))
    if scope in ("all", "realform"):
        forms = [cat.real_form(name)] if scope == "realform" and name else list(cat.real_forms.values())
        gradings = [grading] if grading else list(cat.gradings)
        for g in gradings:
            cat.grading(g)
        for form in forms:
            if not grading:
                if form.algebra == "sl":
                    for rep in form.reps:
                        yield _guard(f"realform.{form.name}.valid.{rep}", "real_forms",
                                     lambda form=form, rep=rep: check_real_form_rep(cat, form, rep))
                else:
                    for s in cat.subalgebra_real_forms:
                        if s.form == form.name:
                            yield _guard(f"realform.{form.name}.valid.{s.rep}.{s.k_name}", "real_forms",
                                         lambda form=form, s=s: check_real_form_rep(cat, form, s.rep, s.k_name))
            for g in gradings:
                if form.algebra == "sl":
                    yield _guard(f"realform.{form.name}.{g}", "real_forms",
                                 lambda form=form, g=g: check_sl_pair(cat, form, g))
                elif any(d.algebra == form.algebra and d.grading == g for d in cat.displayed):
                    yield _guard(f"realform.{form.name}.{g}", "real_forms",
                                 lambda form=form, g=g: check_subalgebra_pair(cat, form, g))
            if form.algebra == "sl" and grading in (None, "gamma2"):
                yield _guard(f"realform.{form.name}.gamma2_obstruction", "real_forms",
                             lambda form=form: check_gamma2(cat, form.name))
            for row in cat.mad_on_real_forms:
                if row.form == form.name and grading in (None, row.grading):
                    yield _guard(f"realform.{row.form}.mad.{row.real_part}", "mad_on_real_forms",
                                 lambda row=row: check_mad_agreement(cat, row))
        if not name and grading in (None, "gamma2"):
            yield _guard("realform.gamma2_analysis", "gradings.gamma2", lambda: check_gamma2_analysis(cat))
    if scope in ("all", "realparts"):
        yield _guard("realparts.relations", "real_parts", lambda: check_realparts(cat))
    if scope in ("all", "count"):
        yield _guard("count.total", "coefficients", lambda: check_count(cat))


def run_checks(cat, scope: str = "all", name: Optional[str] = None, grading: Optional[str] = None,
               timestamp: Optional[str] = None) -> SuiteReport:
    checks = sorted(iter_checks(cat, scope, name, grading), key=lambda c: c.check_id)
    stamp = timestamp if timestamp is not None else datetime.now(timezone.utc).isoformat(timespec="seconds")
    return SuiteReport(checks, stamp)
