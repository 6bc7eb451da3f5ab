import pytest

from rough_biheyting.fixtures import (
    check_fixture,
    fixture_cells,
    fixture_names,
    fixtures_for,
    load_fixture,
    split_errata,
)
from rough_biheyting.space import space_s4, space_s6

SPACES = {"S4": space_s4(), "S6": space_s6()}


def test_all_tables_present():
    tables = sorted(load_fixture(n)["table"] for n in fixture_names())
    assert tables == ["1", "2", "3", "4.1+4.2", "6", "7", "8", "9.1+9.2"]
    assert len(fixtures_for("S4")) == len(fixtures_for("S6")) == 4


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_matches_or_is_documented_erratum(name):
    fx = load_fixture(name)
    sp = SPACES[fx["space"]]
    rep = check_fixture(sp, fx)
    n = sp.size_T if "groups" in fx else sp.size_T**2
    assert rep.checked == n
    known, other = split_errata(sp, fx, rep)
    assert other == []
    assert len(known) == len(fx.get("errata", []))
    for f in known:
        assert f.note == "oracle agrees with implementation: fixture cell is wrong"


def test_erratum_cells():
    s6 = SPACES["S6"]
    impl = check_fixture(s6, load_fixture("table4_impl_s6.json"))
    assert [(f.inputs, f.expected, f.actual) for f in impl.failures] == [
        (("{x1,x2,x3,x5}", "{x1,x2,x5}"), "{x1,x2,x5}", "{x1,x2,x4,x5,x6}")]
    co = check_fixture(s6, load_fixture("table9_coimpl_s6.json"))
    assert [(f.inputs, f.expected, f.actual) for f in co.failures] == [
        (("{x1,x2,x3,x4,x5,x6}", "{x1,x2}"), "{x1,x2,x3,x5}", "{x1,x2,x3,x4,x5,x6}")]


def test_tampered_fixture_is_flagged_with_verdict():
    fx = load_fixture("table1_pseudo_s4.json")
    fx["groups"][0]["output"] = "∅" if fx["groups"][0]["output"] != "∅" else "U"
    rep = check_fixture(SPACES["S4"], fx)
    assert not rep.passed
    assert all(f.note.endswith("fixture cell is wrong") for f in rep.failures)


def test_coverage_gaps_are_reported():
    fx = load_fixture("table3_impl_s4.json")
    fx["rows"] = fx["rows"][:-1]
    rep = check_fixture(SPACES["S4"], fx)
    assert sum(f.prop == "coverage" for f in rep.failures) == 9


def test_cells_parse():
    fx = load_fixture("table2_pseudo_s6.json")
    cells = list(fixture_cells(SPACES["S6"], fx))
    assert len(cells) == 18
