"""Simplicial fans in a sublattice of the rank-4 quotient lattice.

Rays are stored in ambient coordinates; geometric tests run in the basis
coordinates of the fan's lattice, where the fan is full dimensional.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cmp_to_key
from itertools import combinations
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .groups import PermGroup, gamma6, orbit_vectors
from .lattice import N_6, Sublattice, Vector, det, invariant_factors

#: generators of the four ray orbits of the big fan
BASIC_VECTORS = {
    "A": (2, 0, 0, 0),
    "B": (1, 1, 0, 0),
    "C": (1, 1, 1, 1),
    "D": (0, 1, 0, 1),
}


class FanError(ValueError):
    pass


class InvalidFan(FanError):
    pass


class CompletionFailed(FanError):
    pass


class NotARay(FanError):
    pass


class TypedRay(NamedTuple):
    vector: Vector
    kind: str


# ---------------------------------------------------------------------------
# ray orbits of the big fan


@cache
def ray_orbits() -> dict[str, frozenset]:
    """Orbits of the basic vectors under the order-48 group, keyed by type."""
    return {k: frozenset(orbit_vectors(gamma6(), v)) for k, v in BASIC_VECTORS.items()}


def all_rays() -> list[Vector]:
    return sorted(set().union(*ray_orbits().values()))


def classify_ray(v: Sequence[int]) -> str:
    v = tuple(v)
    kinds = [k for k, orb in ray_orbits().items() if v in orb]
    if not kinds:
        raise NotARay(f"{v} is not a ray generator of the big fan")
    if len(kinds) > 1:
        raise FanError(f"{v} lies in several orbits: {kinds}")
    return kinds[0]


def restrict_rays(orbit_rays: Iterable[Sequence[int]], sub: Sublattice) -> list[TypedRay]:
    """Rays of ``orbit_rays`` lying in ``sub``, made primitive in ``sub``."""
    out = {}
    for v in orbit_rays:
        v = tuple(v)
        if v in sub:
            out[sub.primitive_generator(v)] = classify_ray(v)
    return [TypedRay(v, out[v]) for v in sorted(out)]


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class Cone:
    """A simplicial cone with explicit generators (ambient coordinates)."""

    lattice: Sublattice
    generators: tuple[Vector, ...]

    def coordinates(self) -> list[Vector]:
        return [self.lattice.coordinates(g) for g in self.generators]


def is_smooth_cone(cone: Cone) -> bool:
    """Generators extend to a basis of the cone's lattice."""
    coords = cone.coordinates()
    if not coords:
        return True
    if len(coords) == cone.lattice.rank:
        return abs(det(coords)) == 1
    factors = invariant_factors(coords)
    return len(factors) == len(coords) and all(f == 1 for f in factors)


def _cross(vectors: Sequence[Sequence[int]], dim: int) -> Vector:
    """Generalized cross product of ``dim - 1`` vectors in ``Z^dim``."""
    out = []
    for i in range(dim):
        minor = [[v[j] for j in range(dim) if j != i] for v in vectors]
        out.append((-1) ** i * det(minor))
    return tuple(out)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _separating_normal(c1: Sequence[Vector], c2: Sequence[Vector], dim: int):
    """A normal ``n`` vanishing on shared rays, positive on the rest of ``c1``
    and negative on the rest of ``c2``; ``None`` if there is none.

    Such ``n`` exists iff the two simplicial cones meet in their common face.
    """
    shared = set(c1) & set(c2)
    only1 = [r for r in c1 if r not in shared]
    only2 = [r for r in c2 if r not in shared]

    def weakly_ok(n):
        return (
            all(_dot(n, s) == 0 for s in shared)
            and all(_dot(n, a) >= 0 for a in only1)
            and all(_dot(n, b) <= 0 for b in only2)
        )

    # extreme rays of the feasible cone are cut out by dim - 1 tight constraints
    rays = sorted(set(c1) | set(c2))
    total = [0] * dim
    for combo in combinations(rays, dim - 1):
        n = _cross(combo, dim)
        if not any(n):
            continue
        for cand in (n, tuple(-x for x in n)):
            if weakly_ok(cand):
                total = [t + x for t, x in zip(total, cand)]
    n = tuple(total)
    if (
        all(_dot(n, s) == 0 for s in shared)
        and all(_dot(n, a) > 0 for a in only1)
        and all(_dot(n, b) < 0 for b in only2)
    ):
        return n
    return None


def _in_cone(v: Vector, gens: Sequence[Vector]) -> bool:
    """``v`` in the cone over linearly independent, full-rank ``gens``."""
    d = det(gens)
    if d == 0:
        raise FanError("degenerate cone")
    n = len(gens)
    for i in range(n):
        m = [list(g) for g in gens]
        m[i] = list(v)
        if Fraction(det(m), d) < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# fans


@dataclass(frozen=True)
class Fan:
    """Rays (ambient coordinates) and maximal cones as sorted index tuples.

    Construction canonicalizes: rays sorted lexicographically, cones sorted.
    """

    lattice: Sublattice
    rays: tuple[Vector, ...]
    max_cones: tuple[tuple[int, ...], ...]
    ray_types: tuple[str, ...] | None = None
    _coords: tuple[Vector, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rays = [tuple(r) for r in self.rays]
        order = sorted(range(len(rays)), key=lambda i: rays[i])
        new_index = {old: new for new, old in enumerate(order)}
        object.__setattr__(self, "rays", tuple(rays[i] for i in order))
        if self.ray_types is not None:
            object.__setattr__(self, "ray_types", tuple(self.ray_types[i] for i in order))
        cones = sorted({tuple(sorted(new_index[i] for i in c)) for c in self.max_cones})
        object.__setattr__(self, "max_cones", tuple(cones))
        object.__setattr__(self, "_coords", tuple(self.lattice.coordinates(r) for r in self.rays))

    @classmethod
    def from_cones(cls, lattice, typed_rays: Sequence[TypedRay], cones: Iterable[Iterable[Sequence[int]]]):
        """Build from typed rays and cones given by generator vectors."""
        index = {r.vector: i for i, r in enumerate(typed_rays)}
        return cls(
            lattice,
            tuple(r.vector for r in typed_rays),
            tuple(tuple(index[tuple(g)] for g in c) for c in cones),
            tuple(r.kind for r in typed_rays),
        )

    @property
    def dim(self) -> int:
        return self.lattice.rank

    def coords(self, i: int) -> Vector:
        return self._coords[i]

    def cone(self, k: int) -> Cone:
        return Cone(self.lattice, tuple(self.rays[i] for i in self.max_cones[k]))

    def cone_types(self, k: int) -> str:
        if self.ray_types is None:
            raise FanError("fan has no ray types")
        return "".join(sorted(self.ray_types[i] for i in self.max_cones[k]))

    def typed_rays(self) -> list[TypedRay]:
        kinds = self.ray_types or ("",) * len(self.rays)
        return [TypedRay(r, k) for r, k in zip(self.rays, kinds)]

    # serialization
    def to_json(self) -> dict:
        data = {
            "lattice": self.lattice.to_json(),
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }
        if self.ray_types is not None:
            data["ray_types"] = list(self.ray_types)
        return data

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "Fan":
        types = data.get("ray_types")
        return cls(
            Sublattice.from_json(data["lattice"]),
            tuple(tuple(r) for r in data["rays"]),
            tuple(tuple(c) for c in data["max_cones"]),
            tuple(types) if types is not None else None,
        )

    @classmethod
    def loads(cls, text: str) -> "Fan":
        return cls.from_json(json.loads(text))


def check_fan(fan: Fan) -> None:
    """Raise :class:`InvalidFan` naming the first violated fan axiom."""
    d = fan.dim
    if len(set(fan.rays)) != len(fan.rays):
        raise InvalidFan("repeated ray")
    for i, c in enumerate(fan._coords):
        if not any(c):
            raise InvalidFan(f"ray {i} is zero")
        g = 0
        for x in c:
            g = gcd(g, x)
        if g != 1:
            raise InvalidFan(f"ray {fan.rays[i]} is not primitive in the lattice")
    for k, cone in enumerate(fan.max_cones):
        if any(i >= len(fan.rays) for i in cone):
            raise InvalidFan(f"cone {cone} refers to a missing ray")
        gens = [fan._coords[i] for i in cone]
        if len(gens) > d or len(invariant_factors(gens)) != len(gens):
            raise InvalidFan(f"cone {cone} is not simplicial")
    for a, b in combinations(fan.max_cones, 2):
        c1 = [fan._coords[i] for i in a]
        c2 = [fan._coords[i] for i in b]
        if _separating_normal(c1, c2, d) is None:
            raise InvalidFan(f"cones {a} and {b} do not meet in a common face")


def validate_fan(fan: Fan) -> bool:
    try:
        check_fan(fan)
    except InvalidFan:
        return False
    return True


def _ridges(fan_cones, d):
    counts = Counter()
    for c in fan_cones:
        if len(c) == d:
            for r in combinations(c, d - 1):
                counts[r] += 1
    return counts


def angular_order(vectors: Sequence[Sequence[int]]) -> list[int]:
    """Indices of planar integer vectors sorted counterclockwise from +x."""

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(i, j):
        u, v = vectors[i], vectors[j]
        if half(u) != half(v):
            return half(u) - half(v)
        cr = u[0] * v[1] - u[1] * v[0]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return sorted(range(len(vectors)), key=cmp_to_key(cmp))


def euler_characteristic(fan: Fan) -> tuple[int, int, int]:
    """``(V, E, F)`` for a full-dimensional rank-3 fan."""
    used = {i for c in fan.max_cones for i in c}
    return len(used), len(_ridges(fan.max_cones, 3)), len(fan.max_cones)


def is_complete(fan: Fan) -> bool:
    d = fan.dim
    if d == 0:
        return True
    if any(len(c) != d for c in fan.max_cones) or not fan.max_cones:
        return False
    if d == 1:
        signs = sorted(c[0] for c in fan._coords)
        return len(fan.rays) == 2 and signs == [-1, 1] and len(fan.max_cones) == 2
    if d == 2:
        order = angular_order(fan._coords)
        n = len(order)
        if n < 3:
            return False
        expected = set()
        for k in range(n):
            i, j = order[k], order[(k + 1) % n]
            u, v = fan._coords[i], fan._coords[j]
            if u[0] * v[1] - u[1] * v[0] <= 0:
                return False
            expected.add(tuple(sorted((i, j))))
        return expected == set(fan.max_cones)
    if d == 3:
        ridges = _ridges(fan.max_cones, 3)
        if any(n != 2 for n in ridges.values()):
            return False
        adj = {c: set() for c in fan.max_cones}
        owner = {}
        for c in fan.max_cones:
            for r in combinations(c, 2):
                owner.setdefault(r, []).append(c)
        for a, b in owner.values():
            adj[a].add(b)
            adj[b].add(a)
        seen, stack = {fan.max_cones[0]}, [fan.max_cones[0]]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if len(seen) != len(fan.max_cones):
            return False
        v, e, f = euler_characteristic(fan)
        return v - e + f == 2
    raise FanError("completeness is only decided up to rank 3")


def cyclic_fan(lattice: Sublattice, typed_rays: Sequence[TypedRay]) -> Fan:
    """Rank-2 fan whose cones join angularly consecutive rays."""
    coords = [lattice.coordinates(r.vector) for r in typed_rays]
    order = angular_order(coords)
    cones = [
        (typed_rays[order[k]].vector, typed_rays[order[(k + 1) % len(order)]].vector)
        for k in range(len(order))
    ]
    return Fan.from_cones(lattice, typed_rays, cones)


def complete_from_seed(
    lattice: Sublattice,
    typed_rays: Sequence[TypedRay],
    seed_cones: Iterable[Iterable[Sequence[int]]],
    group: PermGroup | None = None,
    max_steps: int = 10_000,
) -> Fan:
    """Close ``seed_cones`` under ``group`` and fill in the missing cones.

    A ridge lying in exactly one maximal cone is resolved by adjoining the
    lowest-index ray that gives a smooth cone containing no other ray and
    meeting every existing cone in a common face.
    """
    d = lattice.rank
    rays = sorted((r for r in typed_rays), key=lambda r: r.vector)
    index = {r.vector: i for i, r in enumerate(rays)}
    coords = [lattice.coordinates(r.vector) for r in rays]
    cones = set()
    for c in seed_cones:
        gens = [tuple(g) for g in c]
        images = [gens] if group is None else [[g.act(v) for v in gens] for g in group]
        for img in images:
            try:
                cones.add(tuple(sorted(index[v] for v in img)))
            except KeyError as exc:
                raise CompletionFailed(f"group image {exc} is not a ray of the fan") from None
    for c in cones:
        if len(c) != d or abs(det([coords[i] for i in c])) != 1:
            raise CompletionFailed(f"seed cone {c} is not smooth and full dimensional")

    def compatible(new):
        gens = [coords[i] for i in new]
        for old in cones:
            if _separating_normal(gens, [coords[i] for i in old], d) is None:
                return False
        return True

    for _ in range(max_steps):
        ridges = _ridges(cones, d)
        if any(n > 2 for n in ridges.values()):
            raise CompletionFailed("a ridge lies in more than two cones")
        open_ridges = sorted(r for r, n in ridges.items() if n == 1)
        if not open_ridges:
            break
        ridge = open_ridges[0]
        chosen = None
        for i in range(len(rays)):
            if i in ridge:
                continue
            new = tuple(sorted(ridge + (i,)))
            if new in cones:
                continue
            gens = [coords[j] for j in new]
            if abs(det(gens)) != 1:
                continue
            if any(j not in new and _in_cone(coords[j], gens) for j in range(len(rays))):
                continue
            if compatible(new):
                chosen = new
                break
        if chosen is None:
            raise CompletionFailed(f"no ray resolves the ridge {tuple(rays[i].vector for i in ridge)}")
        cones.add(chosen)
    else:
        raise CompletionFailed("completion did not terminate")
    fan = Fan(lattice, tuple(r.vector for r in rays), tuple(cones), tuple(r.kind for r in rays))
    try:
        check_fan(fan)
    except InvalidFan as exc:
        raise CompletionFailed(str(exc)) from None
    return fan


def cone_type_census(fan: Fan) -> dict[str, int]:
    return dict(sorted(Counter(fan.cone_types(k) for k in range(len(fan.max_cones))).items()))


def fan_isomorphic_2d(f1: Fan, f2: Fan):
    """A unimodular matrix (basis coordinates) carrying ``f1`` onto ``f2``, or ``None``."""
    if f1.dim != 2 or f2.dim != 2:
        raise FanError("both fans must have rank 2")
    if len(f1.rays) != len(f2.rays) or len(f1.max_cones) != len(f2.max_cones):
        return None
    a, b = f1.max_cones[0]
    u = (f1.coords(a), f1.coords(b))
    du = u[0][0] * u[1][1] - u[0][1] * u[1][0]
    if abs(du) != 1:
        return None
    # inverse of the matrix with columns u0, u1
    uinv = ((u[1][1] * du, -u[1][0] * du), (-u[0][1] * du, u[0][0] * du))
    rays2 = {f2.coords(i): i for i in range(len(f2.rays))}
    cones2 = set(f2.max_cones)
    for c in f2.max_cones:
        for w0, w1 in ((c[0], c[1]), (c[1], c[0])):
            w = (f2.coords(w0), f2.coords(w1))
            # M = W U^-1 with W, U having the vectors as columns
            m = tuple(
                tuple(w[0][r] * uinv[0][col] + w[1][r] * uinv[1][col] for col in range(2))
                for r in range(2)
            )
            if abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 1:
                continue
            image = {}
            for i in range(len(f1.rays)):
                v = f1.coords(i)
                mv = (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])
                if mv not in rays2:
                    break
                image[i] = rays2[mv]
            else:
                if all(tuple(sorted(image[i] for i in c1)) in cones2 for c1 in f1.max_cones):
                    return m
    return None


class RayOrbit(NamedTuple):
    kind: str
    rays: tuple[int, ...]


def orbits_of_rays(fan: Fan, group: PermGroup) -> list[RayOrbit]:
    index = {r: i for i, r in enumerate(fan.rays)}
    seen, out = set(), []
    for i, r in enumerate(fan.rays):
        if i in seen:
            continue
        orb = set()
        for g in group:
            img = g.act(r)
            if img not in index:
                raise FanError(f"{g.cycles()} does not preserve the fan")
            orb.add(index[img])
        seen |= orb
        kind = fan.ray_types[i] if fan.ray_types is not None else ""
        out.append(RayOrbit(kind, tuple(sorted(orb))))
    return out


def standard_fan(lattice_rank: int, rays: Sequence[Sequence[int]]) -> Fan:
    """Complete rank-1 or rank-2 fan on ``Z^n`` through the given rays."""
    lat = Sublattice.full(lattice_rank)
    typed = [TypedRay(tuple(r), "") for r in rays]
    if lattice_rank == 1:
        return Fan(lat, tuple(r.vector for r in typed), ((0,), (1,)))
    if lattice_rank == 2:
        return cyclic_fan(lat, typed)
    raise FanError("only rank 1 and 2 standard fans are provided")


P1_FAN = standard_fan(1, [(1,), (-1,)])
HEXAGON_FAN = standard_fan(2, [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])
OCTAGON_FAN = standard_fan(
    2, [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)]
)
