"""Command line front end: ``finegrad verify`` and ``finegrad show``."""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .catalog import load_catalog
from .checks import SCOPES, render_json, render_md, run_checks
from .errors import CatalogCorrupt, UnknownName
from .exact import format_scalar
from .gradings import Into, product_table, universal_group_of
from .mat import format_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finegrad", description="Exact verification of fine gradings of sl(4,C), "
                                "sp(4,C), o(4,C) and their real forms.")
    p.add_argument("--catalog", help="catalog YAML file (default: bundled catalog)")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--scope", choices=SCOPES, default="all")
    v.add_argument("--name", help="grading or real form name, depending on the scope")
    v.add_argument("--grading", help="restrict real-form checks to one complex grading")
    v.add_argument("--format", choices=("json", "md"), default="json")
    v.add_argument("--catalog", dest="catalog_sub", help=argparse.SUPPRESS)

    s = sub.add_parser("show", help="print a cataloged object")
    s.add_argument("kind", choices=("grading", "madgroup", "realform"))
    s.add_argument("name")
    s.add_argument("--catalog", dest="catalog_sub", help=argparse.SUPPRESS)
    return p


def _indent(text: str, pad: str = "    ") -> str:
    return "\n".join(pad + line for line in text.splitlines())


def show_grading(cat, name: str) -> str:
    spec = cat.grading(name)
    g = spec.grading()
    out = [f"grading {name}: {len(g.parts)} parts, generated by {spec.mad}"]
    for label, p in zip(g.labels, g.parts):
        out.append(f"  {label} (dim {p.dim})")
        for b in p.basis:
            out.append(_indent(format_matrix(b, row_sep="\n")))
    table = product_table(g)
    out.append("product table ([L_j, L_k] lands in):")
    for j, lj in enumerate(g.labels):
        row = [g.labels[e.m] if isinstance(e, Into) else "0" for e in (table[j, k] for k in range(len(g.labels)))]
        out.append(f"  {lj:>4}: " + " ".join(f"{r:>4}" for r in row))
    u = universal_group_of(g, table)
    out.append(f"universal group: {u.group}")
    for label, img in zip(g.labels, u.images):
        out.append(f"  {label} -> {img}")
    return "\n".join(out)


def show_madgroup(cat, name: str) -> str:
    spec = cat.mad(name)
    out = [f"MAD-group {name}: {len(spec.inner_generators)} inner generator(s)"
           + (", 1 outer generator" if spec.outer_generator is not None else "")]
    for k, a in enumerate(spec.inner_generators, 1):
        out.append(f"  Inner #{k}:")
        out.append(_indent(format_matrix(a, row_sep="\n")))
    if spec.outer_generator is not None:
        out.append("  Outer:")
        out.append(_indent(format_matrix(spec.outer_generator, row_sep="\n")))
    return "\n".join(out)


def show_realform(cat, name: str) -> str:
    from .realforms import sl_real_form, subalgebra_real_form

    form = cat.real_form(name)
    out = [f"real form {name} of {form.algebra}(4,C)" + (f", kind {form.kind}" if form.kind else "")]
    if form.signature is not None:
        out.append(f"  signature {form.signature}")
    if form.algebra == "sl":
        for rep, j in form.reps.items():
            rf = sl_real_form(cat, rep)
            out.append(f"  {rep}: {j.kind.value}, real dimension {rf.dim}")
            out.append(_indent(format_matrix(j.matrix, row_sep="\n")))
    else:
        out.append(f"  intersection of the displayed subalgebra with {form.source}")
        seen = set()
        for s in cat.subalgebra_real_forms:
            if s.form != name or (s.k_name, s.rep) in seen:
                continue
            seen.add((s.k_name, s.rep))
            rf = subalgebra_real_form(cat, s.k_name, s.rep)
            out.append(f"  K = {s.k_name}, J from {s.rep}: real dimension {rf.dim}")
            out.append(f"    K ({s.k_name}):")
            out.append(_indent(format_matrix(cat.matrices[s.k_name], row_sep="\n"), "      "))
            out.append(f"    defining matrix ({s.rep}):")
            out.append(_indent(format_matrix(cat.antiautomorphism(s.rep).matrix, row_sep="\n"), "      "))
    rows = [t for t in cat.coefficients if t.form == name]
    for t in rows:
        out.append(f"  {t.grading} multipliers: " + " ".join(format_scalar(a) for a in t.alphas))
    return "\n".join(out)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    path = getattr(args, "catalog_sub", None) or args.catalog
    try:
        cat = load_catalog(path)
    except (OSError, CatalogCorrupt) as exc:
        print(f"error: cannot load catalog: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "show":
            fn = {"grading": show_grading, "madgroup": show_madgroup, "realform": show_realform}[args.kind]
            print(fn(cat, args.name))
            return EXIT_OK
        report = run_checks(cat, args.scope, args.name, args.grading)
    except UnknownName as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render_json(report) if args.format == "json" else render_md(report), end="" if args.format == "md" else "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
