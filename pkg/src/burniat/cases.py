"""The four secondary/tertiary cases: subtori, fans, symmetry groups, boundary.

Each case is cut out of the four-dimensional torus by monomial conditions
``r_i g_j b_k = 1``. Everything toric is computed from those conditions;
divisor counts of non-toric type (E, F, G, H) are stored as recorded facts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cache

from . import fans as F
from .groups import (
    SIGMA,
    PermGroup,
    center,
    extend_group,
    gamma6,
    kernel_of_lattice_action,
    stabilizer_of_triple_set,
)
from .lattice import (
    N_6,
    QUOTIENT_MATRIX,
    Sublattice,
    Vector,
    annihilator_sublattice,
    character_pushforward,
    torus_exponents,
)


class CaseId(Enum):
    DEG3 = "3"
    DEG4A = "4a"
    DEG4B = "4b"
    DEG5 = "5"

    @classmethod
    def parse(cls, text) -> "CaseId":
        if isinstance(text, cls):
            return text
        t = str(text).lower().removeprefix("deg")
        for c in cls:
            if c.value == t:
                return c
        raise ValueError(f"unknown case {text!r}; expected one of 3, 4a, 4b, 5")

    @property
    def label(self) -> str:
        return "deg" + self.value


def monomial(i: int, j: int, k: int) -> tuple[int, ...]:
    """Exponent vector of ``r_i g_j b_k`` in the order r1, r2, g1, g2, b1, b2."""
    e = [0] * 6
    e[i - 1] = 1
    e[2 + j - 1] = 1
    e[4 + k - 1] = 1
    return tuple(e)


def triple_of(exponent) -> tuple[str, str, str]:
    """``r_i g_j b_k`` -> ``("Ri", "Gj", "Bk")``."""
    out = []
    for c, base in zip("RGB", (0, 2, 4)):
        idx = [n + 1 for n in range(2) if exponent[base + n]]
        if len(idx) != 1 or exponent[base + idx[0] - 1] != 1:
            raise ValueError(f"{exponent} is not of the form r_i g_j b_k")
        out.append(f"{c}{idx[0]}")
    return tuple(out)


@dataclass(frozen=True)
class CaseSpec:
    id: CaseId
    conditions: tuple[tuple[int, ...], ...]
    sublattice: Sublattice
    triples: tuple[tuple[str, str, str], ...]
    expected: dict = field(compare=False)
    nontoric_divisors: dict = field(compare=False)
    nontoric_points: dict = field(compare=False)
    fcurve_count: int = 0

    @property
    def degree(self) -> int:
        return 6 - len(self.conditions)


_CONDITIONS = {
    CaseId.DEG3: ((2, 1, 1), (1, 2, 1), (1, 1, 2)),
    CaseId.DEG4A: ((1, 1, 1), (2, 2, 2)),
    CaseId.DEG4B: ((1, 1, 1), (1, 2, 2)),
    CaseId.DEG5: ((1, 1, 1),),
}

# closed forms of the case lattices, used as independent comparanda
CLOSED_FORM_LATTICES = {
    CaseId.DEG3: Sublattice.from_generators(4, [(-1, 1, 1, 1)]),
    CaseId.DEG4A: annihilator_sublattice(N_6, [(1, 0, 0, 0), (0, 1, 1, 1)]),
    CaseId.DEG4B: Sublattice.from_generators(4, [(1, -1, 0, 0), (0, 0, 1, -1)]),
    CaseId.DEG5: annihilator_sublattice(N_6, [(1, 1, 1, 1)]),
}

# Rank-3 case: three C rays and the B, D rays built from them
E1, E2, E3 = (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1)


def _half(u, v, sign=1) -> Vector:
    return tuple((a + sign * b) // 2 for a, b in zip(u, v))


DEG5_SEED_CONES = {
    "BBB": (_half(E1, E2), _half(E2, E3), _half(E3, E1)),
    "BBC": (E1, _half(E1, E2), _half(E1, E3)),
    "BCD": (E1, _half(E1, E2), _half(E1, E3, -1)),
    "BDD": (_half(E1, E2), _half(E1, E3, -1), _half(E2, E3, -1)),
    "CDD": (E1, _half(E1, E2, -1), _half(E1, E3, -1)),
}

_EXPECTED = {
    CaseId.DEG3: {
        "rays": {"C": [(-1, 1, 1, 1), (1, -1, -1, -1)]},
        "ray_count": 2,
        "cone_census": {"C": 2},
        "target_fan": "P1",
        "group_order": 6,
        "group_label": "C3×S2",
        "kernel_order": 3,
        "quotient_order": 2,
        "fcurves": [],
        "boundary_total": 2,
        "boundary": {"C": 1, "E": 1},
        "generic_component": "#0_3(3)",
    },
    CaseId.DEG4A: {
        "rays": {"D": [(0, 1, -1, 0), (0, -1, 1, 0), (0, 0, 1, -1), (0, 0, -1, 1), (0, -1, 0, 1), (0, 1, 0, -1)]},
        "ray_count": 6,
        "cone_census": {"DD": 6},
        "target_fan": "hexagon",
        "group_order": 12,
        "group_label": "C3×C2×C2",
        "extended_group_order": 24,
        "center_order": 2,
        "kernel_order": 2,
        "quotient_order": 6,
        "fcurves": [],
        "boundary_total": 1,
        "boundary": {"D": 1},
        "boundary_points": {"E": 1},
        "generic_component": "#0_2(4)",
    },
    CaseId.DEG4B: {
        "rays": {
            "B": [(1, -1, 0, 0), (-1, 1, 0, 0)],
            "C": [(1, -1, 1, -1), (-1, 1, -1, 1), (1, -1, -1, 1), (-1, 1, 1, -1)],
            "D": [(0, 0, 1, -1), (0, 0, -1, 1)],
        },
        "ray_count": 8,
        "cone_census": {"BC": 4, "CD": 4},
        "target_fan": "octagon",
        "group_order": 4,
        "group_label": "C2×C2",
        "kernel_order": 1,
        "quotient_order": 4,
        "fcurves": [(1, -1, 0, 0)],
        "boundary_total": 5,
        "boundary": {"B": 1, "C": 1, "D": 1, "E": 1, "G": 1},
        "generic_component": "#0_2(4)",
    },
    CaseId.DEG5: {
        "ray_count": 18,
        "rays_per_type": {"B": 6, "C": 6, "D": 6},
        "seed_cones": 26,
        "cone_count": 32,
        "cone_census": {"BBB": 2, "BBC": 6, "BCD": 12, "BDD": 6, "CDD": 6},
        "euler": (18, 48, 32),
        "group_order": 6,
        "group_label": "C3×S2",
        "kernel_order": 1,
        "quotient_order": 6,
        "fcurves": [(1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1)],
        "boundary_total": 7,
        "boundary": {"B": 1, "C": 1, "D": 1, "E": 1, "G": 1, "H": 2},
        "generic_component": "#0_1(5)",
    },
}

# divisor counts that come from non-toric geometry, with where they are stated
_NONTORIC = {
    CaseId.DEG3: ({"E": 1}, {}, "deg3 boundary enumeration: one C and one E divisor"),
    CaseId.DEG4A: ({}, {"E": 1}, "deg4a boundary: E divisor contracted to a point; G surfaces canonical"),
    CaseId.DEG4B: ({"E": 1, "G": 1}, {}, "deg4b boundary enumeration: one each of B, C, D, E, G; F not boundary"),
    CaseId.DEG5: ({"E": 1, "G": 1, "H": 2}, {}, "deg5 boundary enumeration: one each of B, C, D, G, E and two H; F not boundary"),
}

NONTORIC_SOURCE = {c: v[2] for c, v in _NONTORIC.items()}


@cache
def case_spec(case) -> CaseSpec:
    case = CaseId.parse(case)
    conditions = tuple(monomial(*t) for t in _CONDITIONS[case])
    covectors = [character_pushforward(e) for e in conditions]
    sub = annihilator_sublattice(N_6, covectors)
    exp = _EXPECTED[case]
    divs, points, _ = _NONTORIC[case]
    return CaseSpec(
        id=case,
        conditions=conditions,
        sublattice=sub,
        triples=tuple(triple_of(e) for e in conditions),
        expected=exp,
        nontoric_divisors=dict(divs),
        nontoric_points=dict(points),
        fcurve_count=len(exp["fcurves"]),
    )


@dataclass(frozen=True)
class RelabelingGroups:
    group: PermGroup
    kernel: PermGroup

    @property
    def faithful_quotient_order(self) -> int:
        return self.group.order // self.kernel.order


@cache
def relabeling_group(case) -> RelabelingGroups:
    spec = case_spec(case)
    group = stabilizer_of_triple_set(gamma6(), spec.triples)
    return RelabelingGroups(group, kernel_of_lattice_action(group, spec.sublattice))


@cache
def extended_group_4a() -> PermGroup:
    """Relabeling group of the non-nodal degree-4 case enlarged by the
    boundary/interior swap."""
    return extend_group(relabeling_group(CaseId.DEG4A).group, SIGMA)


def center_4a() -> PermGroup:
    return center(extended_group_4a())


@cache
def build_case_fan(case) -> F.Fan:
    spec = case_spec(case)
    sub = spec.sublattice
    rays = F.restrict_rays(F.all_rays(), sub)
    if sub.rank == 1:
        fan = F.Fan.from_cones(sub, rays, [(r.vector,) for r in rays])
    elif sub.rank == 2:
        fan = F.cyclic_fan(sub, rays)
    else:
        group = relabeling_group(spec.id).group
        fan = F.complete_from_seed(sub, rays, DEG5_SEED_CONES.values(), group)
    F.check_fan(fan)
    return fan


def seed_orbit_cones(case=CaseId.DEG5) -> set[tuple[Vector, ...]]:
    """Cones generated by the seed representatives under the case group."""
    group = relabeling_group(case).group
    out = set()
    for gens in DEG5_SEED_CONES.values():
        for g in group:
            out.add(tuple(sorted(g.act(v) for v in gens)))
    return out


TARGET_FANS = {"P1": F.P1_FAN, "hexagon": F.HEXAGON_FAN, "octagon": F.OCTAGON_FAN}


@dataclass(frozen=True)
class FCurve:
    """One-parameter subgroup through the origin, image of a basis vector."""

    name: str
    cocharacter: Vector

    @property
    def torus_exponents(self) -> Vector:
        return torus_exponents(self.cocharacter)


def six_fcurves() -> list[FCurve]:
    names = ("r1", "r2", "g1", "g2", "b1", "b2")
    cols = list(zip(*QUOTIENT_MATRIX))
    return [FCurve(n, tuple(c)) for n, c in zip(names, cols)]


def f_curves_in_case(case) -> list[FCurve]:
    sub = case_spec(case).sublattice
    return [c for c in six_fcurves() if c.cocharacter in sub]


def transversal_fcurves(case) -> list[FCurve]:
    """F-curves whose cocharacter is outside the rational span of the case lattice."""
    sub = case_spec(case).sublattice
    return [c for c in six_fcurves() if not sub.in_rational_span(c.cocharacter)]


@dataclass(frozen=True)
class BoundaryCount:
    computed: dict
    recorded: dict
    points: dict

    @property
    def divisors(self) -> dict:
        out = Counter(self.computed)
        out.update(self.recorded)
        return dict(sorted(out.items()))

    @property
    def total(self) -> int:
        return sum(self.divisors.values())


def boundary_divisors(case) -> BoundaryCount:
    spec = case_spec(case)
    fan = build_case_fan(spec.id)
    orbits = F.orbits_of_rays(fan, relabeling_group(spec.id).group)
    computed = dict(sorted(Counter(o.kind for o in orbits).items()))
    return BoundaryCount(computed, dict(spec.nontoric_divisors), dict(spec.nontoric_points))
