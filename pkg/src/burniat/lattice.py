"""Exact integer lattices.

Vectors are plain tuples of Python ints, so arithmetic never overflows.
Sublattices are stored by a row-style Hermite normal form basis, which makes
structural equality the same as equality of subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class LatticeError(ValueError):
    pass


class NotMember(LatticeError):
    pass


class NotInvariant(LatticeError):
    pass


class Inconsistent(LatticeError):
    pass


# ---------------------------------------------------------------------------
# small matrix helpers


def _mat(rows: Iterable[Iterable[int]]) -> list[list[int]]:
    return [[int(x) for x in r] for r in rows]


def _freeze(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a, b) -> Matrix:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a) -> Matrix:
    return tuple(zip(*a))


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def det(a) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    m = _mat(a)
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def primitive(v: Sequence[int]) -> Vector:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise LatticeError("zero vector has no primitive generator")
    return tuple(x // g for x in v)


# ---------------------------------------------------------------------------
# normal forms


def hermite_normal_form(rows: Iterable[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped, so the result is a basis. Pivots are positive and
    entries above each pivot lie in ``[0, pivot)``.
    """
    m = _mat(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    r = 0
    pivots = []
    for c in range(ncols):
        # gcd-reduce column c among rows r.. to a single nonzero entry
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[p] = m[p], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            pivots.append((r, c))
            r += 1
            if r == len(m):
                break
    for r_i, c in pivots:
        for i in range(r_i):
            q = m[i][c] // m[r_i][c]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r_i])]
    return _freeze(m[:r])


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ a @ V == D`` and ``U``, ``V`` unimodular.

    ``D`` is diagonal with nonnegative entries ``d1 | d2 | ...``.
    """
    d = _mat(a)
    nr = len(d)
    nc = len(d[0]) if nr else 0
    u = [list(r) for r in identity(nr)]
    v = [list(r) for r in identity(nc)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        d[dst] = [x - q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(nr, nc):
        entries = [(abs(d[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if d[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, nr):
                if d[i][t]:
                    add_row(i, t, d[i][t] // d[t][t])
                    if d[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, nc):
                if d[t][j]:
                    add_col(j, t, d[t][j] // d[t][t])
                    if d[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # enforce divisibility of the rest of the block
            bad = [
                i for i in range(t + 1, nr)
                if any(d[i][j] % d[t][t] for j in range(t + 1, nc))
            ]
            if bad:
                add_row(t, bad[0], -1)
                continue
            break
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return _freeze(u), _freeze(d), _freeze(v)


def invariant_factors(a) -> tuple[int, ...]:
    _, d, _ = smith_normal_form(a)
    return tuple(d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i])


def integer_kernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis (as rows) of ``{x in Z^n : a x = 0}``; always saturated."""
    rows = _mat(a)
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    if not rows:
        return identity(n)
    _, d, v = smith_normal_form(rows)
    rank = sum(1 for i in range(min(len(d), n)) if d[i][i])
    vt = transpose(v)
    return hermite_normal_form(vt[rank:], n) if rank < n else ()


# ---------------------------------------------------------------------------
# covectors


@dataclass(frozen=True)
class Covector:
    """Element of a dual lattice, stored as ``numerators / denominator``."""

    numerators: Vector
    denominator: int = 1

    def __post_init__(self):
        nums = tuple(int(x) for x in self.numerators)
        den = int(self.denominator)
        if den <= 0:
            raise LatticeError("denominator must be positive")
        g = den
        for x in nums:
            g = gcd(g, x)
        object.__setattr__(self, "numerators", tuple(x // g for x in nums))
        object.__setattr__(self, "denominator", den // g)

    @classmethod
    def from_fractions(cls, values: Iterable) -> "Covector":
        fr = [Fraction(x) for x in values]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls(tuple(int(f * den) for f in fr), den)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.denominator) for x in self.numerators)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def pair(self, v: Sequence[int]) -> int:
        """Integer pairing with ``v``; raises if the value is not an integer."""
        num = dot(self.numerators, v)
        q, r = divmod(num, self.denominator)
        if r:
            raise LatticeError(f"pairing {self} with {tuple(v)} is not integral")
        return q

    def to_json(self):
        if self.denominator == 1:
            return list(self.numerators)
        return {"num": list(self.numerators), "den": self.denominator}

    @classmethod
    def from_json(cls, data) -> "Covector":
        if isinstance(data, dict):
            return cls(tuple(data["num"]), data["den"])
        return cls(tuple(data))

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.values) + ")"


def _as_covector(c) -> Covector:
    return c if isinstance(c, Covector) else Covector(tuple(c))


# ---------------------------------------------------------------------------
# sublattices


@dataclass(frozen=True)
class Sublattice:
    """A subgroup of ``Z^ambient_rank`` given by its Hermite basis.

    ``congruences`` records how the lattice was defined, when it was defined
    that way; it does not take part in equality.
    """

    ambient_rank: int
    basis: Matrix
    congruences: tuple[tuple[Covector, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        for b in self.basis:
            if len(b) != self.ambient_rank:
                raise LatticeError("basis vector has the wrong length")

    # constructors
    @classmethod
    def from_generators(cls, ambient_rank: int, generators: Iterable[Sequence[int]]) -> "Sublattice":
        return cls(ambient_rank, hermite_normal_form(list(generators), ambient_rank))

    @classmethod
    def full(cls, ambient_rank: int) -> "Sublattice":
        return cls(ambient_rank, identity(ambient_rank))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Integer coordinates of ``v`` over the stored basis."""
        v = tuple(v)
        if len(v) != self.ambient_rank:
            raise LatticeError(f"vector {v} does not have length {self.ambient_rank}")
        x = []
        for i, row in enumerate(self.basis):
            c = next(k for k, e in enumerate(row) if e)
            num = v[c] - sum(x[j] * self.basis[j][c] for j in range(i))
            q, r = divmod(num, row[c])
            if r:
                raise NotMember(f"{v} is not in the lattice")
            x.append(q)
        if self.from_coordinates(x) != v:
            raise NotMember(f"{v} is not in the lattice")
        return tuple(x)

    def from_coordinates(self, x: Sequence[int]) -> Vector:
        out = [0] * self.ambient_rank
        for xi, row in zip(x, self.basis):
            if xi:
                for k, e in enumerate(row):
                    out[k] += xi * e
        return tuple(out)

    def __contains__(self, v) -> bool:
        try:
            self.coordinates(v)
        except NotMember:
            return False
        return True

    def contains_sublattice(self, other: "Sublattice") -> bool:
        return all(b in self for b in other.basis)

    def in_rational_span(self, v: Sequence[int]) -> bool:
        return Sublattice.from_generators(self.ambient_rank, list(self.basis) + [tuple(v)]).rank == self.rank

    def index_in(self, ambient: "Sublattice") -> int | None:
        """Index ``[ambient : self]``; ``None`` when the ranks differ."""
        if not ambient.contains_sublattice(self):
            raise LatticeError("not a sublattice of the given ambient lattice")
        if self.rank != ambient.rank:
            return None
        return abs(det([ambient.coordinates(b) for b in self.basis]))

    def is_saturated_in(self, ambient: "Sublattice") -> bool:
        if self.rank == 0:
            return True
        coords = [ambient.coordinates(b) for b in self.basis]
        return all(f == 1 for f in invariant_factors(coords))

    def is_primitive(self, v: Sequence[int]) -> bool:
        x = self.coordinates(v)
        g = 0
        for c in x:
            g = gcd(g, c)
        return g == 1

    def primitive_generator(self, v: Sequence[int]) -> Vector:
        """Primitive lattice vector on the ray through ``v`` (``v`` in the rational span)."""
        fr = _rational_coordinates(self, v)
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return self.from_coordinates(primitive([int(f * den) for f in fr]))

    def to_json(self):
        data = {"ambient_rank": self.ambient_rank, "basis": [list(b) for b in self.basis]}
        if self.congruences:
            data["congruences"] = [
                {"covector": c.to_json(), "modulus": m} for c, m in self.congruences
            ]
        return data

    @classmethod
    def from_json(cls, data) -> "Sublattice":
        cong = tuple(
            (Covector.from_json(c["covector"]), c["modulus"]) for c in data.get("congruences", ())
        )
        return cls(data["ambient_rank"], _freeze(data["basis"]), cong)


def _rational_coordinates(sub: Sublattice, v) -> tuple[Fraction, ...]:
    # solve x B = v over Q using the echelon shape of the basis
    x: list[Fraction] = []
    for i, row in enumerate(sub.basis):
        c = next(k for k, e in enumerate(row) if e)
        x.append((v[c] - sum(x[j] * sub.basis[j][c] for j in range(i))) / Fraction(row[c]))
    check = [sum(xi * row[k] for xi, row in zip(x, sub.basis)) for k in range(sub.ambient_rank)]
    if tuple(check) != tuple(v):
        raise NotMember(f"{tuple(v)} is not in the rational span")
    return tuple(x)


def sublattice_from_congruences(ambient_rank: int, congruences: Iterable) -> Sublattice:
    """The subgroup of ``Z^n`` where every ``<c, v> = 0 (mod m)``."""
    cong = tuple((_as_covector(c), int(m)) for c, m in congruences)
    for c, m in cong:
        if not c.is_integral:
            raise LatticeError("congruence covectors must be integral")
        if m < 2:
            raise LatticeError("moduli must be at least 2")
    if not cong:
        return Sublattice(ambient_rank, identity(ambient_rank))
    k = len(cong)
    # C v - diag(m) t = 0, then project away t
    rows = [
        list(c.numerators) + [(-m if j == i else 0) for j in range(k)]
        for i, (c, m) in enumerate(cong)
    ]
    ker = integer_kernel(rows, ambient_rank + k)
    gens = [row[:ambient_rank] for row in ker]
    return Sublattice(ambient_rank, hermite_normal_form(gens, ambient_rank), cong)


def annihilator_sublattice(ambient: Sublattice, conditions: Iterable) -> Sublattice:
    """``{v in ambient : <m, v> = 0 for every m in conditions}``."""
    conds = [_as_covector(c) for c in conditions]
    if not conds:
        return Sublattice(ambient.ambient_rank, ambient.basis)
    rows = []
    for c in conds:
        row = [c.pair(b) for b in ambient.basis]  # raises if c is not dual to ambient
        rows.append(row)
    ker = integer_kernel(rows, ambient.rank)
    return Sublattice.from_generators(
        ambient.ambient_rank, [ambient.from_coordinates(x) for x in ker]
    )


def coordinates_in_basis(sub: Sublattice, v: Sequence[int]) -> Vector:
    return sub.coordinates(v)


def membership(sub: Sublattice, v: Sequence[int]) -> bool:
    return tuple(v) in sub


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True)
class LatticeMap:
    """Integer matrix ``matrix`` (codomain rank x domain rank) between lattices."""

    matrix: Matrix
    domain: Sublattice
    codomain: Sublattice

    def __post_init__(self):
        object.__setattr__(self, "matrix", _freeze(self.matrix))
        for b in self.domain.basis:
            if self(b) not in self.codomain:
                raise LatticeError(f"image of {b} is not in the codomain")

    def __call__(self, v) -> Vector:
        return matvec(self.matrix, v)


def image_and_kernel(f: LatticeMap) -> tuple[Sublattice, Sublattice]:
    n_out = len(f.matrix)
    images = [f(b) for b in f.domain.basis]
    image = Sublattice.from_generators(n_out, images)
    # coordinates x with sum x_i f(b_i) = 0
    coeff = transpose(images) if images else ()
    ker = integer_kernel(coeff, f.domain.rank) if images else ()
    kernel = Sublattice.from_generators(
        f.domain.ambient_rank, [f.domain.from_coordinates(x) for x in ker]
    )
    return image, kernel


# ---------------------------------------------------------------------------
# the six-dimensional torus and its quotient

#: exponent order used for characters of the six-dimensional torus
COORDINATE_NAMES = ("r1", "r2", "g1", "g2", "b1", "b2")

#: (r1, r2, g1, g2, b1, b2) -> (sum, r1 - r2, g1 - g2, b1 - b2)
QUOTIENT_MATRIX: Matrix = (
    (1, 1, 1, 1, 1, 1),
    (1, -1, 0, 0, 0, 0),
    (0, 0, 1, -1, 0, 0),
    (0, 0, 0, 0, 1, -1),
)

N_Y = Sublattice.full(6)
N_6 = sublattice_from_congruences(4, [((1, 1, 1, 1), 2)])
N_SIGMA = Sublattice.from_generators(6, [(1, 1, -1, -1, 0, 0), (0, 0, 1, 1, -1, -1)])
QUOTIENT_MAP = LatticeMap(QUOTIENT_MATRIX, N_Y, N_6)

#: coordinate characters of the quotient torus: r1g1b1, r1/r2, g1/g2, b1/b2
TORUS_COORDINATES: tuple[Covector, ...] = (
    Covector((1, 1, 1, 1), 2),
    Covector((0, 1, 0, 0)),
    Covector((0, 0, 1, 0)),
    Covector((0, 0, 0, 1)),
)


def character_pullback(m: Covector) -> tuple[Fraction, ...]:
    """Pull a character of the quotient torus back to an exponent vector."""
    return tuple(sum(Fraction(QUOTIENT_MATRIX[i][j]) * m.values[i] for i in range(4)) for j in range(6))


def character_pushforward(exponent: Sequence[int]) -> Covector:
    """Express a monomial in ``r1, r2, g1, g2, b1, b2`` as a character of the quotient.

    The monomial must be invariant under the two-dimensional torus acting
    diagonally on each color pair.
    """
    e = tuple(int(x) for x in exponent)
    if len(e) != 6:
        raise LatticeError("exponent must have length 6")
    for s in N_SIGMA.basis:
        if dot(e, s):
            raise NotInvariant(f"{e} is not invariant under the diagonal torus")
    # a+b = r1, a-b = r2, a+c = g1, a-c = g2, a+d = b1, a-d = b2
    a = Fraction(e[0] + e[1], 2)
    if Fraction(e[2] + e[3], 2) != a or Fraction(e[4] + e[5], 2) != a:
        raise Inconsistent(f"no character of the quotient pulls back to {e}")
    m = Covector.from_fractions(
        (a, Fraction(e[0] - e[1], 2), Fraction(e[2] - e[3], 2), Fraction(e[4] - e[5], 2))
    )
    if character_pullback(m) != tuple(Fraction(x) for x in e):
        raise Inconsistent(f"no character of the quotient pulls back to {e}")
    for b in N_6.basis:
        m.pair(b)
    return m


def torus_exponents(cocharacter: Sequence[int]) -> Vector:
    """Exponents of ``x`` in the four coordinates along the one-parameter subgroup."""
    return tuple(m.pair(cocharacter) for m in TORUS_COORDINATES)
