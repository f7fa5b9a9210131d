import json

import pytest

from burniat import degenerations as D


def test_volume_rule():
    assert D.ComponentType(0, 3).volume == 3
    with pytest.raises(D.BadComponent):
        D.ComponentType(9, 2, 2)
    with pytest.raises(D.UnknownFamily):
        D.ComponentType(10)


def test_child_rules():
    assert D.child(D.ComponentType(2), 1) == D.ComponentType(4)
    assert D.child(D.ComponentType(8), 1).marker == D.CONTRACT_TO_CURVE
    assert D.child(D.ComponentType(8), 2).marker == D.FLIP
    with pytest.raises(D.BadComponent):
        D.child(D.ComponentType(8), 3)
    with pytest.raises(ValueError):
        D.child(D.ComponentType(8), 0)


def test_identification_preserves_volume():
    for ident in D.IDENTIFICATIONS:
        assert ident.source.volume == ident.target.volume


def test_parse_normalizations():
    comp, notes = D.parse_component("0_2(4)")
    assert comp == D.ComponentType(0, 2) and notes
    comp, notes = D.parse_component("#4(1))")
    assert comp == D.ComponentType(4) and notes
    assert D.parse_component("#9_2(2)")[0] == D.ComponentType(9, 1)
    with pytest.raises(D.BadComponent):
        D.parse_component("#4(1)xyz")


def test_generic_components():
    names = [D.derive_generic_component(c).name for c in ("3", "4a", "4b", "5")]
    assert names == ["#0_3(3)", "#0_2(4)", "#0_2(4)", "#0_1(5)"]


def test_bundled_tables_pass():
    report = D.validate_tables()
    assert report.passed
    sums = {}
    for row in report.rows:
        sums.setdefault(row.table, set()).add(row.volume_sum)
    assert sums == {"deg6": {6}, "deg3": {3}, "deg4a": {4}, "deg4b": {4}, "deg5": {5}}


def test_corrupted_row_fails(tmp_path):
    data = D.load_tables()
    data["tables"][0]["rows"][1]["components"][0] = "#1(3)"
    path = tmp_path / "t.json"
    path.write_text(json.dumps(data))
    report = D.validate_tables(path)
    assert not report.passed
    assert [(r.table, r.case) for r in report.failures()] == [("deg6", "A")]
