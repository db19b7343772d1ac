import json

import pytest

from quadpoint.catalog import (
    VarietyRecord,
    classify_surfaces,
    classify_threefolds,
    load_builtin_catalog,
    multidegree_of_verdict,
    parse_catalog,
    save_catalog,
    scan_exclusion,
)
from quadpoint.formulas import (
    ThreefoldInvariants,
    foursecant_constraint_residual,
    quadruple_points,
)

HEADER = "name\tn\tdim\td\tpi\tchi_S\tchi_X\tK2\tscroll\ttags"


def test_builtin_catalog_loads():
    records = load_builtin_catalog()
    assert len(records) == 8
    by_dim = {}
    for r in records:
        by_dim.setdefault(r.dim, []).append(r.name)
    assert len(by_dim[3]) == 4
    assert len(by_dim[2]) == 3
    assert by_dim[1] == ["twisted_cubic"]
    non_examples = [r.name for r in records if "non-example" in r.tags]
    assert non_examples == ["ci_2_3_threefold", "ci_2_2_surface"]


def test_record_validation():
    with pytest.raises(ValueError, match="dim"):
        VarietyRecord("bad", 5, 2, 7, 4, chi_section=1, chi=1)
    with pytest.raises(ValueError, match="missing field k_squared"):
        VarietyRecord("bad", 4, 2, 6, 3, chi=1, scroll=False)
    with pytest.raises(ValueError, match="degree"):
        VarietyRecord("bad", 3, 1, 0, 0)
    with pytest.raises(ValueError, match="missing field chi"):
        VarietyRecord("bad", 5, 3, 7, 4, chi_section=1)


def test_parse_diagnostics():
    with pytest.raises(ValueError, match="header"):
        parse_catalog("name\tn\n")
    row = "x\t5\t3\t7\t4\t1\t1\t\t\t"
    with pytest.raises(ValueError, match="line 2: expected 10 columns"):
        parse_catalog(HEADER + "\n" + "x\t5\t3\n")
    with pytest.raises(ValueError, match="line 2, column d"):
        parse_catalog(HEADER + "\n" + row.replace("7", "seven") + "\n")
    with pytest.raises(ValueError, match="column scroll"):
        parse_catalog(HEADER + "\n" + "x\t4\t2\t6\t3\t\t1\t-1\tyes\t\n")
    with pytest.raises(ValueError, match="line 2, column pi: required"):
        parse_catalog(HEADER + "\n" + "x\t5\t3\t7\t\t1\t1\t\t\t\n")
    with pytest.raises(ValueError, match="line 2: .*dim"):
        parse_catalog(HEADER + "\n" + "x\t5\t2\t7\t4\t1\t1\t\t\t\n")


def test_header_only_catalog_is_empty():
    assert parse_catalog(HEADER + "\n") == ()


def test_save_load_roundtrip():
    records = load_builtin_catalog()
    assert parse_catalog(save_catalog(records)) == records


def test_classify_threefolds_builtin():
    records = [r for r in load_builtin_catalog() if r.dim == 3]
    report = classify_threefolds(records)
    passing = {e.name for e in report.entries if e.passed}
    assert passing == {"palatini_scroll", "k3_scroll", "degree_ten_determinantal"}
    assert multidegree_of_verdict(report.entry("palatini_scroll")) == (1, 3, 2)
    assert multidegree_of_verdict(report.entry("k3_scroll")) == (1, 7, 13)
    assert multidegree_of_verdict(report.entry("degree_ten_determinantal")) == (
        1,
        15,
        20,
    )
    ci = report.entry("ci_2_3_threefold")
    assert not ci.passed
    assert ci.computed["q"] == 0
    assert not ci.verdicts["quadruple_point_one"]
    assert not report.all_pass


def test_classify_threefolds_rejects_wrong_shape():
    surface = VarietyRecord(
        "s", 4, 2, 6, 3, chi=1, k_squared=-1, scroll=False
    )
    with pytest.raises(ValueError, match="dim 3"):
        classify_threefolds([surface])


def test_classify_surfaces_builtin():
    records = [r for r in load_builtin_catalog() if r.dim == 2]
    report = classify_surfaces(records)
    passing = {e.name for e in report.entries if e.passed}
    assert passing == {"veronese_projected", "bordiga"}
    ci = report.entry("ci_2_2_surface")
    assert ci.computed["triple"] == 0
    assert not ci.verdicts["triple_point_one"]


def test_scroll_flag_blocks_surface():
    scroll = VarietyRecord(
        "scrolly", 4, 2, 6, 3, chi=1, k_squared=-1, scroll=True
    )
    report = classify_surfaces([scroll])
    entry = report.entries[0]
    assert entry.verdicts["triple_point_one"]
    assert not entry.verdicts["not_scroll"]
    assert not entry.passed


def test_multiplicity_widens_degree_bound():
    low = VarietyRecord("low", 5, 3, 4, 0, chi_section=1, chi=1)
    assert not classify_threefolds([low]).entries[0].verdicts["degree_bound"]
    assert classify_threefolds([low], multiplicity=2).entries[0].verdicts[
        "degree_bound"
    ]


def test_scan_exclusion_frozen_lists():
    assert scan_exclusion(7, (0, 10), (-5, 5)) == ((0, -1, -3), (4, 1, 1))
    assert scan_exclusion(9, (0, 20), (-10, 10)) == ((8, 2, 2),)
    assert scan_exclusion(10, (0, 20), (-10, 10)) == ((8, -4, 8), (11, 5, 1))


def test_scan_exclusion_survivors_verify():
    for d, pis, chis in ((7, (0, 10), (-5, 5)), (10, (0, 20), (-10, 10))):
        for pi, chi_s, chi_x in scan_exclusion(d, pis, chis):
            assert quadruple_points(ThreefoldInvariants(d, pi, chi_s, chi_x)) == 1
            assert foursecant_constraint_residual(d, pi, chi_s) == 0


def test_scan_excludes_degrees_13_to_15():
    for d in (13, 14, 15):
        assert scan_exclusion(d, (0, 40), (-10, 10)) == ()


def test_scan_validation():
    with pytest.raises(ValueError):
        scan_exclusion(0, (0, 5), (-5, 5))
    with pytest.raises(ValueError, match="empty"):
        scan_exclusion(7, (5, 0), (-5, 5))
    with pytest.raises(ValueError, match="empty"):
        scan_exclusion(7, (0, 5), (5, -5))


def test_report_json_schema():
    records = [r for r in load_builtin_catalog() if r.dim == 3]
    report = classify_threefolds(records)
    payload = report.jsonable()
    text = json.dumps(payload)
    parsed = json.loads(text)
    assert isinstance(parsed, list)
    for item in parsed:
        assert set(item) == {"name", "verdicts", "computed", "pass"}
        assert set(item["computed"]) == {"q", "a1", "a2", "residual"}
        for value in item["computed"].values():
            assert set(value) == {"num", "den"}
            int(value["num"]), int(value["den"])
    with pytest.raises(KeyError):
        report.entry("missing")
