"""Gradings of a Lie algebra of 4x4 matrices and their verification.

A grading is an ordered list of subspaces (parts) of a parent algebra.
Verification covers the direct sum, bracket closure (the product table),
the universal grading group, joint eigenvalue labels and refinement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .abelian import AbelianGroup, GroupElement, quotient_by_relations
from .errors import CollidingLabels, DimensionMismatch, NotAGrading
from .exact import GaussianRational
from .maps import Automorphism, eigenvalue_on
from .mat import Mat4, bracket
from .report import Report
from .subspace import Field, Subspace


@dataclass
class Grading:
    parent: Subspace
    parts: List[Subspace]
    name: str = ""
    labels: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.parts = list(self.parts)
        if not self.labels:
            self.labels = [f"L{k + 1}" for k in range(len(self.parts))]
        if len(self.labels) != len(self.parts):
            raise ValueError("one label per part is required")

    @property
    def field(self) -> Field:
        return self.parent.field

    @property
    def dims(self) -> List[int]:
        return [p.dim for p in self.parts]

    def __len__(self):
        return len(self.parts)

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    def part(self, label: str) -> Subspace:
        return self.parts[self.label_index(label)]

    def total_basis(self) -> Subspace:
        return Subspace([b for p in self.parts for b in p.basis], self.field)

    def reordered(self, order: Sequence[int]) -> "Grading":
        return Grading(self.parent, [self.parts[k] for k in order], self.name,
                       [self.labels[k] for k in order])


# direct sum ----------------------------------------------------------------

def verify_direct_sum(g: Grading) -> Report:
    rep = Report(True, {"grading": g.name, "dims": g.dims, "total": sum(g.dims), "parent_dim": g.parent.dim})
    for label, p in zip(g.labels, g.parts):
        if p.dim == 0:
            rep.fail(f"part {label} is zero")
        if p.field is not g.field:
            rep.fail(f"part {label} is over the wrong field")
        for b in p.basis:
            if not g.parent.contains(b):
                rep.fail(f"a basis vector of {label} is outside the parent")
                break
    seen: List[Mat4] = []
    for label, p in zip(g.labels, g.parts):
        for k, b in enumerate(p.basis):
            if seen and Subspace.spanned_by(seen, g.field).contains(b):
                rep.fail(f"basis vector {k + 1} of {label} depends on earlier vectors")
            else:
                seen.append(b)
    if sum(g.dims) != g.parent.dim:
        rep.fail(f"dimensions sum to {sum(g.dims)}, parent has dimension {g.parent.dim}")
    return rep


# product table -------------------------------------------------------------

class Zero:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Zero"


@dataclass(frozen=True)
class Into:
    m: int

    def __repr__(self):
        return f"Into({self.m})"


@dataclass
class ProductTable:
    entries: Dict[Tuple[int, int], object]
    # (j, a, k, b) -> coordinates of [X_{j,a}, X_{k,b}] in the basis of the target part
    constants: Dict[Tuple[int, int, int, int], List[GaussianRational]]

    def __getitem__(self, jk):
        return self.entries[jk]

    def has_real_constants(self) -> bool:
        return all(c.is_real() for cs in self.constants.values() for c in cs)

    def nonzero(self):
        return [(jk, e) for jk, e in self.entries.items() if isinstance(e, Into)]


def product_table(g: Grading) -> ProductTable:
    """Closure check: each [L_j, L_k] must be zero or inside one part."""
    total = g.total_basis()
    owner = []
    for k, p in enumerate(g.parts):
        owner += [k] * p.dim
    offsets = [sum(g.dims[:k]) for k in range(len(g.parts))]
    entries: Dict[Tuple[int, int], object] = {}
    constants = {}
    n = len(g.parts)
    for j in range(n):
        for k in range(j, n):
            target: Optional[int] = None
            for a, x in enumerate(g.parts[j].basis):
                for b, y in enumerate(g.parts[k].basis):
                    if j == k and b < a:
                        continue
                    z = bracket(x, y)
                    if z.is_zero():
                        continue
                    coords = total.coordinates(z)
                    if coords is None:
                        raise NotAGrading(j, k, f"[{g.labels[j]},{g.labels[k]}] leaves the algebra")
                    hit = {owner[i] for i, c in enumerate(coords) if c}
                    if len(hit) != 1 or (target is not None and hit != {target}):
                        raise NotAGrading(j, k, f"[{g.labels[j]},{g.labels[k]}] meets two parts")
                    target = hit.pop()
                    o = offsets[target]
                    cs = coords[o:o + g.dims[target]]
                    constants[(j, a, k, b)] = cs
                    constants[(k, b, j, a)] = [-c for c in cs]
            entries[(j, k)] = entries[(k, j)] = Zero() if target is None else Into(target)
    return ProductTable(entries, constants)


# universal group -----------------------------------------------------------

class UniversalGroup(NamedTuple):
    group: AbelianGroup
    images: List[GroupElement]
    is_group_grading: bool


def grading_relations(g: Grading, table: Optional[ProductTable] = None) -> List[List[int]]:
    table = table or product_table(g)
    n = len(g.parts)
    rels = []
    for (j, k), e in sorted(table.nonzero(), key=lambda t: t[0]):
        if j > k:
            continue
        r = [0] * n
        r[j] += 1
        r[k] += 1
        r[e.m] -= 1
        rels.append(r)
    return rels


def universal_group_of(g: Grading, table: Optional[ProductTable] = None) -> UniversalGroup:
    rels = grading_relations(g, table)
    group, images = quotient_by_relations(len(g.parts), rels)
    distinct = len(set(images)) == len(images)
    return UniversalGroup(group, images, distinct)


def shared_images(images: Sequence[GroupElement]) -> List[Tuple[int, int]]:
    """Pairs of part indices whose generators have the same image."""
    return [(j, k) for j, k in combinations(range(len(images)), 2) if images[j] == images[k]]


# eigenlabels ---------------------------------------------------------------

def eigenlabels(g: Grading, generators: Sequence[Automorphism]) -> List[Tuple[GaussianRational, ...]]:
    return [tuple(eigenvalue_on(h, p) for h in generators) for p in g.parts]


def eigenlabel_certificate(g: Grading, generators: Sequence[Automorphism]) -> Report:
    """Each part is a joint eigenspace, with pairwise distinct eigenvalue tuples."""
    labels = eigenlabels(g, generators)
    first: Dict[tuple, int] = {}
    for k, t in enumerate(labels):
        if t in first:
            raise CollidingLabels(g.labels[first[t]], g.labels[k])
        first[t] = k
    return Report(True, {
        "grading": g.name,
        "labels": {lab: [str(x) for x in t] for lab, t in zip(g.labels, labels)},
    })


# refinement ----------------------------------------------------------------

def is_refinement(fine: Grading, coarse: Grading) -> bool:
    if fine.field is not coarse.field:
        return False
    pieces: Dict[int, List[int]] = {}
    for f, part in enumerate(fine.parts):
        homes = [c for c, cp in enumerate(coarse.parts) if cp.contains_space(part)]
        if len(homes) != 1:
            return False
        pieces.setdefault(homes[0], []).append(f)
    for c, cp in enumerate(coarse.parts):
        members = pieces.get(c, [])
        if sum(fine.parts[f].dim for f in members) != cp.dim:
            return False
        try:
            Subspace([b for f in members for b in fine.parts[f].basis], fine.field)
        except DimensionMismatch:
            return False
    return True
