"""Verification runs: every check as a ``CheckResult``, grouped per case."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import cases as C
from . import degenerations as Dg
from . import fans as F
from . import groups as G
from . import lattice as L

REPORT_VERSION = "1"

PASS, FAIL, RECORDED = "pass", "fail", "recorded"
MARKERS = {PASS: "✓", FAIL: "✗", RECORDED: "◇"}


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, L.Covector):
        return x.to_json()
    if isinstance(x, Dg.ComponentType):
        return x.name
    return x


@dataclass
class CheckResult:
    check_id: str
    status: str
    computed: object
    expected: object
    source: str
    description: str = ""

    def to_json(self):
        return {
            "check_id": self.check_id,
            "status": self.status,
            "computed": _plain(self.computed),
            "expected": _plain(self.expected),
            "source": self.source,
            "description": self.description,
        }


@dataclass
class CaseReport:
    case: str
    checks: list[CheckResult] = field(default_factory=list)
    fan: dict | None = None
    provenance: dict | None = None

    def check(self, check_id, computed, expected, source, description=""):
        status = PASS if computed == expected else FAIL
        self.checks.append(CheckResult(check_id, status, computed, expected, source, description))
        return status == PASS

    def record(self, check_id, value, source, description=""):
        self.checks.append(CheckResult(check_id, RECORDED, value, value, source, description))

    def to_json(self):
        data = {"case": self.case, "checks": [c.to_json() for c in self.checks]}
        if self.fan is not None:
            data["fan"] = self.fan
        if self.provenance is not None:
            data["provenance"] = self.provenance
        return data


# ---------------------------------------------------------------------------
# global checks


def global_report(tables_path=None) -> CaseReport:
    rep = CaseReport("global")
    image, kernel = L.image_and_kernel(L.QUOTIENT_MAP)
    rep.check("lattice.sequence.kernel", kernel.basis, L.N_SIGMA.basis,
              "exact sequence of cocharacter lattices", "kernel of the quotient map is the diagonal torus lattice")
    rep.check("lattice.sequence.image", image.basis, L.N_6.basis,
              "exact sequence of cocharacter lattices", "image is the even-sum lattice")
    rep.check("lattice.sequence.index", image.index_in(L.Sublattice.full(4)), 2,
              "even-sum condition", "index of the quotient lattice in Z^4")
    rep.check("lattice.quotient_map.snf", L.invariant_factors(L.QUOTIENT_MATRIX), (1, 1, 1, 2),
              "derived", "invariant factors of the quotient map")

    g6 = G.gamma6()
    rep.check("group.gamma6.order", g6.order, 48, "relabeling group of order 48")
    hom_ok = all(
        G.matmul(a.matrix_N6, b.matrix_N6) == (a * b).matrix_N6
        and G.matmul(a.matrix_NY, b.matrix_NY) == (a * b).matrix_NY
        for a in g6 for b in g6
    ) and all(
        G.matmul(g.matrix_N6, L.QUOTIENT_MATRIX) == G.matmul(L.QUOTIENT_MATRIX, g.matrix_NY)
        for g in g6
    )
    rep.check("group.gamma6.representation", hom_ok, True, "derived",
              "matrix actions compose and commute with the quotient map")
    rep.check("group.gamma6.s_r", G.S_R.matrix_N6, ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
              "action of the interior swap on the quotient lattice")
    rep.check("group.gamma6.cremona", G.CREMONA.matrix_N6, tuple(tuple(-x for x in r) for r in L.identity(4)),
              "action of the Cremona involution on the quotient lattice")

    sizes = {k: len(v) for k, v in F.ray_orbits().items()}
    rep.check("rays.orbit_sizes", sizes, {"A": 2, "B": 12, "C": 16, "D": 12}, "derived by enumeration",
              "orbit sizes of the basic vectors")
    rep.check("rays.total", len(F.all_rays()), 42, "big fan has 42 rays", "42 rays")

    rep.check("degenerations.child.2_1", Dg.child(Dg.ComponentType(2), 1).name, "#4(1)",
              "identification #2_1(1) = #4(1)")
    c81 = Dg.child(Dg.ComponentType(8), 1)
    rep.check("degenerations.child.8_1", (c81.volume, c81.marker), (0, Dg.CONTRACT_TO_CURVE),
              "P2 blown up once is contracted to P1")
    c82 = Dg.child(Dg.ComponentType(8), 2)
    rep.check("degenerations.child.8_2", (c82.volume, c82.marker), (-1, Dg.FLIP),
              "P2 blown up twice triggers a flip")

    tables = Dg.validate_tables(tables_path)
    for row in tables.rows:
        rep.checks.append(CheckResult(
            f"tables.{row.table}.{row.case.replace(', ', '+')}",
            PASS if row.passed else FAIL,
            row.volume_sum,
            row.degree,
            "table of surfaces with volumes",
            "; ".join([" + ".join(row.components)] + row.notes),
        ))
    return rep


# ---------------------------------------------------------------------------
# per-case checks


def _ray_sets(fan: F.Fan) -> dict:
    out = {}
    for r in fan.typed_rays():
        out.setdefault(r.kind, set()).add(r.vector)
    return {k: frozenset(v) for k, v in sorted(out.items())}


def case_report(case) -> CaseReport:
    spec = C.case_spec(case)
    exp = spec.expected
    cid = spec.id
    rep = CaseReport(cid.label)
    src = f"{cid.label} data"

    sub = spec.sublattice
    rep.check("sublattice.rank", sub.rank, spec.degree - 2, src, "rank of the case lattice")
    rep.check("sublattice.closed_form", sub.basis, C.CLOSED_FORM_LATTICES[cid].basis, src,
              "lattice from monomial conditions equals the closed form")
    rep.check("sublattice.saturated", sub.is_saturated_in(L.N_6), True, "derived")

    fan = C.build_case_fan(cid)
    rep.fan = fan.to_json()
    rep.check("rays.count", len(fan.rays), exp["ray_count"], src, f"{exp['ray_count']} rays")
    if "rays" in exp:
        rep.check("rays.generators", _ray_sets(fan),
                  {k: frozenset(v) for k, v in sorted(exp["rays"].items())}, src, "ray generators by type")
    if "rays_per_type" in exp:
        per = {k: len(v) for k, v in _ray_sets(fan).items()}
        rep.check("rays.per_type", per, exp["rays_per_type"], src, "rays per type")
    rep.check("rays.no_type_A", "A" in (fan.ray_types or ()), False, "derived")

    rep.check("fan.valid", F.validate_fan(fan), True, "derived", "fan axioms")
    smooth = all(F.is_smooth_cone(fan.cone(k)) for k in range(len(fan.max_cones)))
    rep.check("fan.smooth", smooth, True, src, "every maximal cone is unimodular")
    rep.check("fan.complete", F.is_complete(fan), True, "derived", "fan is complete")
    rep.check("fan.census", F.cone_type_census(fan), exp["cone_census"], src, "maximal cones by type")
    if cid is C.CaseId.DEG5:
        rep.check("fan.seed_cones", len(C.seed_orbit_cones()), exp["seed_cones"], "derived",
                  "cones in the group orbits of the seed representatives")
        rep.check("fan.cone_count", len(fan.max_cones), exp["cone_count"], src, "32 maximal cones")
        rep.check("fan.euler", F.euler_characteristic(fan), exp["euler"], "derived", "V - E + F = 2")
    if "target_fan" in exp:
        target = C.TARGET_FANS[exp["target_fan"]]
        if fan.dim == 1:
            found = sorted(fan.coords(i) for i in range(len(fan.rays))) == [(-1,), (1,)]
            rep.check("fan.isomorphism", found, True, src, f"fan is the {exp['target_fan']} fan")
        else:
            m = F.fan_isomorphic_2d(fan, target)
            rep.check("fan.isomorphism", m is not None, True, src,
                      f"unimodular map onto the {exp['target_fan']} fan: {m}")

    rg = C.relabeling_group(cid)
    rep.check("group.order", rg.group.order, exp["group_order"], src, "relabeling group order")
    rep.check("group.label", G.identify_small_group(rg.group), exp["group_label"], src)
    rep.check("group.kernel_order", rg.kernel.order, exp["kernel_order"], src,
              "elements acting trivially on the case lattice")
    rep.check("group.quotient_order", rg.faithful_quotient_order, exp["quotient_order"], src,
              "order of the faithfully acting quotient")
    if cid is C.CaseId.DEG4A:
        ext = C.extended_group_4a()
        z = C.center_4a()
        rep.check("group.extended_order", ext.order, exp["extended_group_order"], src)
        rep.check("group.center_order", z.order, exp["center_order"], src)
        rep.check("group.center_generator", sorted(g.cycles() for g in z),
                  sorted(g.cycles() for g in [G.IDENTITY, G.S_R * G.S_G * G.S_B * G.CREMONA]), src)
        rep.check("group.kernel_is_center", rg.kernel == z, True, src)
    if cid is C.CaseId.DEG5:
        stab = G.setwise_lattice_stabilizer(G.gamma6(), sub)
        rep.check("group.lattice_stabilizer", stab == rg.group, True, src,
                  "triple stabilizer equals the stabilizer of the lattice")

    inside = [c.cocharacter for c in C.f_curves_in_case(cid)]
    rep.check("fcurves.inside", inside, [tuple(v) for v in exp["fcurves"]], src, "F-curves inside the subtorus")
    rep.check("fcurves.transversal", len(C.transversal_fcurves(cid)), 6 - len(exp["fcurves"]), src,
              "remaining F-curves are transversal")

    bd = C.boundary_divisors(cid)
    expected_toric = {k: v for k, v in exp["boundary"].items() if k in "ABCD"}
    rep.check("boundary.toric", bd.computed, expected_toric, src, "toric boundary divisors (ray orbits)")
    for kind, n in sorted(bd.recorded.items()):
        rep.record(f"boundary.{kind}", n, C.NONTORIC_SOURCE[cid], f"{n} divisor(s) of type {kind}")
    for kind, n in sorted(bd.points.items()):
        rep.record(f"boundary.point.{kind}", n, C.NONTORIC_SOURCE[cid], f"type {kind} contracted to a point")
    rep.check("boundary.total", bd.total, exp["boundary_total"], src, "number of boundary divisors")

    rep.check("degenerations.generic", Dg.derive_generic_component(cid).name, exp["generic_component"], src,
              "generic fiber component")
    rep.provenance = provenance(rep)
    return rep


def provenance(rep: CaseReport) -> dict:
    return {
        c.check_id: ("computed" if c.status != RECORDED else f"recorded({c.source})")
        for c in rep.checks
    }


# ---------------------------------------------------------------------------
# assembly and rendering


def build_report(case_filter=None, tables_path=None) -> dict:
    ids = [C.CaseId.parse(case_filter)] if case_filter else list(C.CaseId)
    reports = [global_report(tables_path)] + [case_report(c) for c in ids]
    summary = {PASS: 0, FAIL: 0, RECORDED: 0}
    for r in reports:
        for c in r.checks:
            summary[c.status] += 1
    return {
        "version": REPORT_VERSION,
        "cases": [r.to_json() for r in reports],
        "summary": summary,
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _cell(x) -> str:
    s = json.dumps(x, ensure_ascii=False) if not isinstance(x, str) else x
    return s.replace("|", "\\|")


def render_markdown(report: dict) -> str:
    s = report["summary"]
    lines = [
        "# Verification report",
        "",
        f"pass: {s[PASS]}, fail: {s[FAIL]}, recorded: {s[RECORDED]} "
        f"({MARKERS[RECORDED]} marks recorded facts that are not computed here)",
    ]
    for case in report["cases"]:
        lines += ["", f"## {case['case']}", "", "| | check | description | computed | expected |",
                  "|---|---|---|---|---|"]
        for c in case["checks"]:
            lines.append(
                f"| {MARKERS[c['status']]} {c['status']} | {c['check_id']} | {_cell(c['description'])} "
                f"| {_cell(c['computed'])} | {_cell(c['expected'])} |"
            )
    return "\n".join(lines) + "\n"


def run_verify(case_filter=None, output_format="json", out=None, tables_path=None, stream=None) -> int:
    """Run all checks and write the report; return the process exit code."""
    import sys

    stream = stream or sys.stdout
    try:
        report = build_report(case_filter, tables_path)
        text = render_json(report) if output_format == "json" else render_markdown(report)
    except Exception as exc:  # noqa: BLE001 - any crash is an internal error
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        stream.write(text)
    return 0 if report["summary"][FAIL] == 0 else 1


def dump_fan(case, path) -> Path:
    path = Path(path)
    text = C.build_case_fan(case).dumps()
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write fan to {path}: {exc.strerror or exc}") from exc
    return path


def load_fan(path) -> F.Fan:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read fan from {path}: {exc.strerror or exc}") from exc
    fan = F.Fan.loads(text)
    F.check_fan(fan)
    return fan
