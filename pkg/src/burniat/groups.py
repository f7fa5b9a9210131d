"""Relabeling symmetries of the twelve branch curves.

A group element is a permutation of the labels ``R0..R3, G0..G3, B0..B3``.
Elements of the order-48 group generated by the color rotation, the three
interior swaps and the Cremona involution also carry their integer matrices
on the six-dimensional cocharacter lattice and on its rank-4 quotient.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Iterable, NamedTuple, Sequence

from .lattice import (
    QUOTIENT_MATRIX,
    LatticeError,
    Matrix,
    Sublattice,
    Vector,
    identity,
    matmul,
    matvec,
)

COLORS = ("R", "G", "B")


class CurveLabel(NamedTuple):
    color: str
    index: int

    def __str__(self):
        return f"{self.color}{self.index}"

    @property
    def is_boundary(self) -> bool:
        return self.index in (0, 3)


#: fixed serialization order R0, R1, R2, R3, G0, ..., B3
LABELS: tuple[CurveLabel, ...] = tuple(CurveLabel(c, i) for c in COLORS for i in range(4))
_LABEL_INDEX = {str(lab): k for k, lab in enumerate(LABELS)}

#: positions of r1, r2, g1, g2, b1, b2 inside LABELS
_INTERIOR = tuple(_LABEL_INDEX[f"{c}{i}"] for c in COLORS for i in (1, 2))


class GroupError(ValueError):
    pass


class NotPartitionPreserving(GroupError):
    pass


class DoesNotPreserve(GroupError):
    pass


class MissingMatrix(GroupError):
    pass


def label_index(label) -> int:
    return _LABEL_INDEX[str(label)]


@dataclass(frozen=True)
class GroupElement:
    """Permutation of the labels, ``perm[i]`` being the image of ``LABELS[i]``.

    Equality and hashing use ``perm`` only.
    """

    perm: tuple[int, ...]
    matrix_NY: Matrix | None = field(default=None, compare=False, repr=False)
    matrix_N6: Matrix | None = field(default=None, compare=False, repr=False)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (g * h)(x) = g(h(x))
        perm = tuple(self.perm[i] for i in other.perm)
        if self.matrix_N6 is not None and other.matrix_N6 is not None:
            return GroupElement(
                perm,
                matmul(self.matrix_NY, other.matrix_NY),
                matmul(self.matrix_N6, other.matrix_N6),
            )
        return GroupElement(perm)

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        if self.matrix_N6 is None:
            return GroupElement(tuple(inv))
        # signed permutation matrices: inverse is the transpose
        return GroupElement(
            tuple(inv), tuple(zip(*self.matrix_NY)), _inverse_int(self.matrix_N6)
        )

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def order(self) -> int:
        g, n = self, 1
        while not g.is_identity:
            g, n = self * g, n + 1
        return n

    def __call__(self, label) -> CurveLabel:
        return LABELS[self.perm[label_index(label)]]

    def act(self, v: Sequence[int]) -> Vector:
        """Action on the rank-4 quotient lattice."""
        if self.matrix_N6 is None:
            raise MissingMatrix(f"{self.cycles()} has no lattice action")
        return matvec(self.matrix_N6, v)

    def act_NY(self, v: Sequence[int]) -> Vector:
        if self.matrix_NY is None:
            raise MissingMatrix(f"{self.cycles()} has no lattice action")
        return matvec(self.matrix_NY, v)

    def cycles(self) -> str:
        seen, out = set(), []
        for i in range(len(self.perm)):
            if i in seen or self.perm[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(str(LABELS[j]))
                j = self.perm[j]
            out.append("(" + " ".join(cyc) + ")")
        return "".join(out) or "()"

    def __repr__(self):
        return f"GroupElement({self.cycles()})"


def _inverse_int(m: Matrix) -> Matrix:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    out = []
    for row in a:
        vals = row[n:]
        if any(x.denominator != 1 for x in vals):
            raise GroupError("matrix is not unimodular")
        out.append(tuple(int(x) for x in vals))
    return tuple(out)


def perm_from_mapping(mapping: dict) -> tuple[int, ...]:
    perm = list(range(len(LABELS)))
    for src, dst in mapping.items():
        perm[label_index(src)] = label_index(dst)
    if sorted(perm) != list(range(len(LABELS))):
        raise GroupError("mapping is not a permutation")
    return tuple(perm)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_LABEL_RE = re.compile(r"[RGB][0-3]")


def perm_from_cycles(text: str) -> tuple[int, ...]:
    """Parse cycle notation such as ``"(R0R1)(G0B1)"`` or ``"(R0 R1)(G0 B1)"``."""
    mapping = {}
    for body in _CYCLE_RE.findall(text):
        labels = _LABEL_RE.findall(body)
        for a, b in zip(labels, labels[1:] + labels[:1]):
            if a in mapping:
                raise GroupError(f"label {a} appears twice")
            mapping[a] = b
    return perm_from_mapping(mapping)


# ---------------------------------------------------------------------------
# induced matrices


def _quotient_section() -> tuple[tuple[Fraction, ...], ...]:
    # rational right inverse of the quotient map (6 x 4)
    third = Fraction(1, 6)
    half = Fraction(1, 2)
    cols = [
        (third,) * 6,
        (half, -half, 0, 0, 0, 0),
        (0, 0, half, -half, 0, 0),
        (0, 0, 0, 0, half, -half),
    ]
    return tuple(tuple(Fraction(c[i]) for c in cols) for i in range(6))


_SECTION = _quotient_section()


def induced_matrices(perm: Sequence[int]) -> tuple[Matrix, Matrix]:
    """Matrices on the cocharacter lattices induced by a relabeling.

    Interior curves are permuted among themselves; the sign is -1 exactly
    when the boundary labels 0 and 3 are exchanged (the Cremona part).
    """
    images = [perm[i] for i in _INTERIOR]
    if sorted(images) != sorted(_INTERIOR):
        raise GroupError("relabeling moves an interior curve to the boundary")
    flips = {LABELS[perm[label_index(f"{c}0")]].index for c in COLORS}
    if flips == {0}:
        sign = 1
    elif flips == {3}:
        sign = -1
    else:
        raise GroupError("relabeling flips some but not all boundary pairs")
    pos = {lab: k for k, lab in enumerate(_INTERIOR)}
    ny = [[0] * 6 for _ in range(6)]
    for k, lab in enumerate(_INTERIOR):
        ny[pos[perm[lab]]][k] = sign
    ny = tuple(tuple(r) for r in ny)
    n6 = [
        [sum(Fraction(x) * y for x, y in zip(row, col)) for col in zip(*_SECTION)]
        for row in matmul(QUOTIENT_MATRIX, ny)
    ]
    if any(x.denominator != 1 for row in n6 for x in row):
        raise GroupError("relabeling does not descend to the quotient lattice")
    return ny, tuple(tuple(int(x) for x in row) for row in n6)


def element(perm: Sequence[int], with_matrices: bool = True) -> GroupElement:
    perm = tuple(perm)
    if with_matrices:
        ny, n6 = induced_matrices(perm)
        return GroupElement(perm, ny, n6)
    return GroupElement(perm)


IDENTITY = element(tuple(range(12)))
COLOR_CYCLE = element(perm_from_mapping({f"{a}{i}": f"{b}{i}" for a, b in zip("RGB", "GBR") for i in range(4)}))
S_R = element(perm_from_cycles("(R1 R2)"))
S_G = element(perm_from_cycles("(G1 G2)"))
S_B = element(perm_from_cycles("(B1 B2)"))
CREMONA = element(perm_from_cycles("(R0 R3)(G0 G3)(B0 B3)"))
#: swaps the boundary and interior curve sets; lies outside the order-48 group
SIGMA = GroupElement(perm_from_cycles("(R0R1)(R3R2)(G0B1)(G3B2)(B0G1)(B3G2)"))


# ---------------------------------------------------------------------------
# groups


def _closure(gens: Iterable[GroupElement]) -> list[GroupElement]:
    gens = list(gens)
    els = {IDENTITY.perm: IDENTITY if all(g.matrix_N6 is not None for g in gens) else GroupElement(IDENTITY.perm)}
    for g in gens:
        els.setdefault(g.perm, g)
    frontier = list(els.values())
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = a * b
                if c.perm not in els:
                    els[c.perm] = c
                    new.append(c)
        frontier = new
    return sorted(els.values(), key=lambda g: g.perm)


@dataclass(frozen=True)
class PermGroup:
    """A finite group of relabelings, fully enumerated.

    Equality compares element sets.
    """

    generators: tuple[GroupElement, ...] = field(compare=False)
    elements: tuple[GroupElement, ...]

    @classmethod
    def generate(cls, generators: Iterable[GroupElement]) -> "PermGroup":
        gens = tuple(generators)
        return cls(gens, tuple(_closure(gens)))

    @classmethod
    def from_elements(cls, elements: Iterable[GroupElement]) -> "PermGroup":
        els = {g.perm: g for g in elements}
        els.setdefault(IDENTITY.perm, IDENTITY)
        elements = tuple(sorted(els.values(), key=lambda g: g.perm))
        group = cls(elements, elements)
        for a in elements:
            for b in elements:
                if (a * b).perm not in els:
                    raise GroupError("element set is not closed under composition")
        return group

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g.perm in self._perms

    @property
    def _perms(self) -> frozenset:
        return frozenset(g.perm for g in self.elements)

    def is_abelian(self) -> bool:
        return all((a * b).perm == (b * a).perm for a in self.elements for b in self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self._perms <= other._perms

    def has_matrices(self) -> bool:
        return all(g.matrix_N6 is not None for g in self.elements)


@cache
def gamma6() -> PermGroup:
    """The order-48 relabeling group of the primary configuration."""
    return PermGroup.generate([COLOR_CYCLE, S_R, S_G, S_B, CREMONA])


def _gamma6_lookup() -> dict:
    return {g.perm: g for g in gamma6()}


def orbit_vectors(group: PermGroup, v: Sequence[int]) -> set[Vector]:
    return {g.act(v) for g in group}


def vector_stabilizer(group: PermGroup, v: Sequence[int]) -> PermGroup:
    v = tuple(v)
    return PermGroup.from_elements(g for g in group if g.act(v) == v)


def _normalize_triples(triples) -> frozenset:
    out = set()
    for t in triples:
        idx = frozenset(label_index(x) for x in t)
        colors = sorted(LABELS[i].color for i in idx)
        if len(idx) != 3 or colors != sorted(COLORS):
            raise GroupError(f"triple {t} must contain one label of each color")
        out.add(idx)
    return frozenset(out)


def stabilizer_of_triple_set(group: PermGroup, triples) -> PermGroup:
    """Elements mapping the set of unordered triples onto itself."""
    target = _normalize_triples(triples)

    def image(g):
        return frozenset(frozenset(g.perm[i] for i in t) for t in target)

    return PermGroup.from_elements(g for g in group if image(g) == target)


def _color_classes_preserved(g: GroupElement) -> bool:
    images = set()
    for c in COLORS:
        cls = {LABELS[g.perm[label_index(f"{c}{i}")]].color for i in range(4)}
        if len(cls) != 1:
            return False
        images |= cls
    return len(images) == 3


def extend_group(group: PermGroup, extra: GroupElement) -> PermGroup:
    """The group generated by ``group`` and ``extra``.

    Elements that fall outside the order-48 group carry no matrices.
    """
    if not _color_classes_preserved(extra):
        raise NotPartitionPreserving(f"{extra.cycles()} mixes the color classes")
    bare = [GroupElement(g.perm) for g in group.generators] + [GroupElement(extra.perm)]
    lookup = _gamma6_lookup()
    elements = tuple(lookup.get(g.perm, g) for g in _closure(bare))
    gens = tuple(lookup.get(g.perm, g) for g in bare)
    return PermGroup(gens, elements)


def center(group: PermGroup) -> PermGroup:
    return PermGroup.from_elements(
        a for a in group if all((a * b).perm == (b * a).perm for b in group)
    )


def maps_sublattice_to_itself(g: GroupElement, sub: Sublattice) -> bool:
    return Sublattice.from_generators(sub.ambient_rank, [g.act(b) for b in sub.basis]) == sub


def setwise_lattice_stabilizer(group: PermGroup, sub: Sublattice) -> PermGroup:
    return PermGroup.from_elements(g for g in group if maps_sublattice_to_itself(g, sub))


def kernel_of_lattice_action(group: PermGroup, sub: Sublattice) -> PermGroup:
    """Elements acting as the identity on ``sub``."""
    for g in group:
        if not maps_sublattice_to_itself(g, sub):
            raise DoesNotPreserve(f"{g.cycles()} does not preserve the lattice")
    return PermGroup.from_elements(
        g for g in group if all(g.act(b) == tuple(b) for b in sub.basis)
    )


def restricted_matrix(g: GroupElement, sub: Sublattice) -> Matrix:
    """Matrix of ``g`` on ``sub`` in basis coordinates (columns are images)."""
    cols = [sub.coordinates(g.act(b)) for b in sub.basis]
    return tuple(zip(*cols)) if cols else ()


# ---------------------------------------------------------------------------
# small group recognition

# (order, abelian, sorted element orders) -> label
_KNOWN = {
    (1, True, (1,)): "trivial",
    (2, True, (1, 2)): "C2",
    (3, True, (1, 3, 3)): "C3",
    (4, True, (1, 2, 2, 2)): "C2×C2",
    (4, True, (1, 2, 4, 4)): "C4",
    (6, True, (1, 2, 3, 3, 6, 6)): "C3×S2",
    (6, False, (1, 2, 2, 2, 3, 3)): "S3",
    (8, True, (1, 2, 2, 2, 2, 2, 2, 2)): "C2×C2×C2",
    (12, True, (1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6)): "C3×C2×C2",
}


def group_signature(group: PermGroup) -> tuple[int, bool, tuple[int, ...]]:
    return (group.order, group.is_abelian(), tuple(sorted(g.order() for g in group)))


def identify_small_group(group: PermGroup) -> str:
    sig = group_signature(group)
    return _KNOWN.get(sig, f"unrecognized({group.order})")


def element_order_counts(group: PermGroup) -> Counter:
    return Counter(g.order() for g in group)
