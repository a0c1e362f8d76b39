"""Subalgebras sp_K / o_K = {X : XK = -K X^T} displayed by sl(4,C) gradings.

A grading displays the subalgebra when every part lies in the +1 or the
-1 eigenspace of Out_K; the displayed grading consists of the +1 parts.
"""
from __future__ import annotations

from typing import Optional

from .errors import DimensionMismatch, NotInvariant, PartSplitByForm, SingularMatrix
from .gradings import Grading, is_refinement, product_table, shared_images, universal_group_of, verify_direct_sum
from .maps import Automorphism
from .mat import Mat4
from .report import Report
from .subspace import Field, Subspace, gl4, restricted_complex_kernel


def form_condition(x: Mat4, k: Mat4) -> bool:
    return x @ k == -(k @ x.transpose())


def form_subalgebra(k: Mat4) -> Subspace:
    """{X in gl(4,C) : XK = -K X^T}, solved directly."""
    return restricted_complex_kernel(gl4(), lambda x: x @ k + k @ x.transpose())


def _check_k(k: Mat4) -> None:
    if not k.is_invertible():
        raise SingularMatrix("K must be invertible")
    if k.transpose() != k and k.transpose() != -k:
        raise ValueError("K must be symmetric or skew-symmetric")


def out_k_sign(part: Subspace, k: Mat4, index: int = 0) -> int:
    """+1 or -1 when Out_K acts on the part as that scalar."""
    out = Automorphism.outer(k)
    signs = set()
    for b in part.basis:
        y = out.apply(b)
        if not part.contains(y):
            raise NotInvariant(f"Out_K does not preserve part {index + 1}")
        if y == b:
            signs.add(1)
        elif y == -b:
            signs.add(-1)
        else:
            raise PartSplitByForm(index + 1)
    if len(signs) != 1:
        raise PartSplitByForm(index + 1)
    return signs.pop()


def displayed_subgrading(g: Grading, k: Mat4, name: Optional[str] = None) -> Grading:
    _check_k(k)
    keep = [j for j, p in enumerate(g.parts) if out_k_sign(p, k, j) == 1]
    parent = form_subalgebra(k)
    parts = [g.parts[j] for j in keep]
    total = sum(p.dim for p in parts)
    if total != parent.dim or not all(parent.contains_space(p) for p in parts):
        raise DimensionMismatch(f"selected parts span dimension {total}, subalgebra has {parent.dim}")
    return Grading(parent, parts, name or f"{g.name}/K", [g.labels[j] for j in keep])


def split_part(g: Grading, label: str) -> Grading:
    """Replace one part by the lines through its basis vectors."""
    j = g.label_index(label)
    part = g.parts[j]
    parts = list(g.parts[:j])
    labels = list(g.labels[:j])
    for n, b in enumerate(part.basis, start=1):
        parts.append(Subspace([b], g.field))
        labels.append(f"{label}^{n}")
    parts += g.parts[j + 1:]
    labels += g.labels[j + 1:]
    return Grading(g.parent, parts, g.name + "/split", labels)


def certify_nongroup_refinement(catalog=None) -> Report:
    """The Gamma5-displayed o_K3 grading and its refinement that is no group grading."""
    from .catalog import load_catalog

    cat = catalog or load_catalog()
    spec = next(d for d in cat.displayed if d.split)
    source = cat.grading(spec.grading).grading()
    coarse = displayed_subgrading(source, spec.k, f"{spec.grading}/{spec.k_name}")
    fine = split_part(coarse, spec.split)

    rep = Report(True, {"grading": coarse.name, "split": spec.split})
    rep.details["coarse_parts"] = coarse.labels
    rep.details["fine_parts"] = fine.labels
    coarse_u = universal_group_of(coarse)
    rep.details["coarse_group"] = str(coarse_u.group)
    rep.details["coarse_is_group_grading"] = coarse_u.is_group_grading
    if not coarse_u.is_group_grading:
        rep.fail("unsplit displayed grading should be a group grading")

    if not verify_direct_sum(fine):
        rep.fail("split decomposition is not a direct sum")
    table = product_table(fine)  # raises NotAGrading if closure fails
    rep.details["fine_closes"] = True
    refines = is_refinement(fine, coarse)
    rep.details["is_refinement"] = refines
    if not refines:
        rep.fail("split grading is not a refinement")
    fine_u = universal_group_of(fine, table)
    pairs = [(fine.labels[a], fine.labels[b]) for a, b in shared_images(fine_u.images)]
    rep.details["fine_group"] = str(fine_u.group)
    rep.details["fine_is_group_grading"] = fine_u.is_group_grading
    rep.details["shared_images"] = pairs
    if fine_u.is_group_grading or not pairs:
        rep.fail("split grading should force two parts onto one group element")
    return rep
