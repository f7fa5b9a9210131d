"""Irreducible components of degenerate surfaces and their volumes.

A component is written ``#m_n(v)``: catalog family ``m`` after ``n`` blowups,
with volume ``v = base_volume(m) - n``. Volume 0 means the component is
contracted to a curve; volume -1 means a flip is needed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

# family -> volume of the degree-6 component
BASE_VOLUMES = (6, 2, 2, 3, 1, 2, 4, 5, 1, 3)

CONTRACT_TO_CURVE = "contract-to-curve"
FLIP = "flip"


class UnknownFamily(ValueError):
    pass


class BadComponent(ValueError):
    pass


def base_volume(family: int) -> int:
    if not 0 <= family < len(BASE_VOLUMES):
        raise UnknownFamily(f"no catalog family #{family}")
    return BASE_VOLUMES[family]


@dataclass(frozen=True, order=True)
class ComponentType:
    family: int
    blowups: int = 0
    volume: int | None = None

    def __post_init__(self):
        expected = base_volume(self.family) - self.blowups
        if self.blowups < 0:
            raise BadComponent("blowup count must be nonnegative")
        if self.volume is None:
            object.__setattr__(self, "volume", expected)
        elif self.volume != expected:
            raise BadComponent(f"#{self.family}_{self.blowups} has volume {expected}, not {self.volume}")
        if self.volume < -1:
            raise BadComponent(f"volume {self.volume} is below -1")

    @property
    def marker(self) -> str | None:
        if self.volume == 0:
            return CONTRACT_TO_CURVE
        if self.volume == -1:
            return FLIP
        return None

    @property
    def name(self) -> str:
        sub = f"_{self.blowups}" if self.blowups else ""
        return f"#{self.family}{sub}({self.volume})"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Identification:
    source: ComponentType
    target: ComponentType

    def __post_init__(self):
        if self.source.volume != self.target.volume:
            raise BadComponent("identified components must have equal volume")


IDENTIFICATIONS = (
    Identification(ComponentType(2, 1), ComponentType(4)),
    # only the first kind of #6_2 is identified; no second kind is modeled
    Identification(ComponentType(6, 2), ComponentType(5)),
)
_IDENT = {i.source: i.target for i in IDENTIFICATIONS}

#: known components: all degree-6 families and the children that occur
CATALOG = frozenset(
    [ComponentType(m) for m in range(10)]
    + [ComponentType(m, n) for m, n in [(3, 1), (6, 1), (6, 2), (6, 3), (9, 1), (0, 1), (0, 2), (0, 3)]]
)

# written name -> the component it denotes, with a reason
ALIASES = {
    "#9_2(2)": (ComponentType(9, 1), "#9_2(2) read as #9_1(2): same P(1,1,2) component"),
}


def normalize(c: ComponentType) -> ComponentType:
    return _IDENT.get(c, c)


def child(c: ComponentType, extra_blowups: int) -> ComponentType:
    if extra_blowups < 1:
        raise ValueError("extra_blowups must be at least 1")
    volume = c.volume - extra_blowups
    if volume < -1:
        raise BadComponent(f"{c} blown up {extra_blowups} times has volume {volume}")
    return normalize(ComponentType(c.family, c.blowups + extra_blowups))


_NAME_RE = re.compile(r"^(#?)(\d)(?:_(\d+))?\((-?\d+)\)(.*)$")


def parse_component(text: str) -> tuple[ComponentType, list[str]]:
    """Parse a written component name; return it with any normalization notes."""
    notes = []
    raw = text.strip()
    if raw in ALIASES:
        comp, why = ALIASES[raw]
        return comp, [why]
    m = _NAME_RE.match(raw)
    if not m:
        raise BadComponent(f"cannot parse component {text!r}")
    hash_, fam, sub, vol, rest = m.groups()
    if not hash_:
        notes.append(f"{raw!r}: missing '#' added")
    if rest:
        if rest == ")" or rest == f"({vol})":
            notes.append(f"{raw!r}: trailing {rest!r} dropped")
        else:
            raise BadComponent(f"cannot parse component {text!r}")
    comp = ComponentType(int(fam), int(sub or 0), int(vol))
    return comp, notes


def derive_generic_component(case) -> ComponentType:
    from .cases import case_spec

    n = len(case_spec(case).conditions)
    return child(ComponentType(0), n)


# ---------------------------------------------------------------------------
# table validation


@dataclass
class RowResult:
    table: str
    case: str
    degree: int
    components: list[str]
    volume_sum: int | None
    passed: bool
    notes: list[str] = field(default_factory=list)

    def to_json(self):
        return {
            "table": self.table,
            "case": self.case,
            "degree": self.degree,
            "components": self.components,
            "volume_sum": self.volume_sum,
            "passed": self.passed,
            "notes": self.notes,
        }


@dataclass
class TablesReport:
    version: int
    rows: list[RowResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def failures(self) -> list[RowResult]:
        return [r for r in self.rows if not r.passed]


def default_tables_path():
    return resources.files("burniat") / "data" / "tables.json"


def load_tables(path=None) -> dict:
    if path is None:
        return json.loads(default_tables_path().read_text(encoding="utf-8"))
    return json.loads(Path(path).read_text(encoding="utf-8"))


def validate_row(table: str, degree: int, case: str, names: list[str]) -> RowResult:
    notes: list[str] = []
    comps = []
    try:
        for name in names:
            comp, n = parse_component(name)
            comps.append(comp)
            notes.extend(n)
    except (BadComponent, UnknownFamily) as exc:
        return RowResult(table, case, degree, list(names), None, False, notes + [str(exc)])
    total = sum(c.volume for c in comps)
    ok = total == degree
    if not ok:
        notes.append(f"volumes sum to {total}, expected {degree}")
    for c in comps:
        if c not in CATALOG:
            ok = False
            notes.append(f"{c} is not in the component catalog")
        if c.blowups > 6 - degree:
            ok = False
            notes.append(f"{c} needs more than {6 - degree} blowups")
    return RowResult(table, case, degree, [c.name for c in comps], total, ok, notes)


def validate_tables(path=None) -> TablesReport:
    data = load_tables(path)
    rows = []
    for table in data["tables"]:
        for row in table["rows"]:
            rows.append(validate_row(table["id"], table["degree"], row["case"], row["components"]))
    return TablesReport(data.get("version", 0), rows)
