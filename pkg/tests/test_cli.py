import csv
import io
import json
from pathlib import Path

import pytest

from rough_biheyting import biheyting as bh
from rough_biheyting.cli import main, parse_shard
from rough_biheyting.space import canonicalize, enumerate_T, parse_set, space_s4, space_s6

SPACES_DIR = Path(__file__).resolve().parent.parent / "spaces"
KRIPKE_ARGS = ["--formula", "([x1,x3,x2] -> [x2,x4,x6]) -> ([x1,x3,x5] <- [x5])",
        "--formula", "[x2,x4,x6,x5] /\\ [x1,x2,x5]"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("space, rows", [("S4", 9), ("S6", 18), (str(SPACES_DIR / "s6.json"), 18)])
def test_enumerate(capsys, space, rows):
    code, out, _ = run(capsys, "enumerate", "--space", space, "--format", "json")
    assert code == 0
    assert len(json.loads(out)["elements"]) == rows


def test_enumerate_single_atom(capsys, tmp_path):
    p = tmp_path / "one.json"
    p.write_text('{"universe": ["x1"], "classes": [["x1"]]}')
    code, out, _ = run(capsys, "enumerate", "--space", str(p), "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 3


@pytest.mark.parametrize("op, kind", [("impl", "rel"), ("coimpl", "dual_rel")])
@pytest.mark.parametrize("space", [space_s4(), space_s6()], ids=["S4", "S6"])
def test_table_json_round_trips(capsys, op, kind, space):
    code, out, _ = run(capsys, "table", "--space", space.name, "--op", op, "--format", "json")
    assert code == 0
    data = json.loads(out)
    T = enumerate_T(space)
    assert len(data["rows"]) == len(T) and sum(len(r["cells"]) for r in data["rows"]) == len(T) ** 2
    for a, row in zip(T, data["rows"]):
        assert canonicalize(space, parse_set(space, row["row"])) == a
        for b, cell in zip(T, row["cells"]):
            assert canonicalize(space, parse_set(space, cell)) == bh.CLOSED_FORMS[kind](space, a, b)


def test_table_csv_and_unary(capsys):
    code, out, _ = run(capsys, "table", "--space", "S4", "--op", "pseudo", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["input", "output"] and len(rows) == 10
    s4 = space_s4()
    assert rows[1] == ["{}", "{x1,x2,x3,x4}"]
    for inp, outp in rows[1:]:
        a = canonicalize(s4, parse_set(s4, inp))
        assert canonicalize(s4, parse_set(s4, outp)) == bh.pseudocomplement(s4, a)


def test_table_markdown_has_class_note(capsys):
    code, out, _ = run(capsys, "table", "--space", "S6", "--op", "join")
    assert code == 0
    assert "X2 = {x2,x4,x6}" in out
    assert out.count("\n| ") == 19


def test_output_is_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"t{i}.md"
        assert main(["table", "--space", "S6", "--op", "coimpl", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--space", "S6", "--world", "x1,x3,x2,x5",
                       "--formula", "[x1,x3,x5] <- [x1]", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "world": "{x1,x2,x3,x5}", "world_classes": "X1 ∪ {x2} ∪ X3",
        "formula": "[x1,x3,x5] <- [x1]", "value": "{x1,x3,x5}", "value_classes": "X1 ∪ X3",
        "pair": "(1,1)", "class": "Satisfiable",
    }


@pytest.mark.parametrize("world, formula, pair", [("U", "UNIV", "(1,1)"), ("", "EMPTY", "(0,0)")])
def test_eval_trivial(capsys, world, formula, pair):
    for space in ("S4", "S6"):
        code, out, _ = run(capsys, "eval", "--space", space, "--world", world,
                           "--formula", formula, "--format", "json")
        assert code == 0 and json.loads(out)["pair"] == pair


@pytest.mark.parametrize("argv", [
    ["eval", "--space", "S6", "--world", "x1", "--formula", "x1 ->"],
    ["eval", "--space", "S6", "--world", "x9", "--formula", "x1"],
    ["eval", "--space", "S6", "--world", "x1", "--formula", "x7"],
    ["eval", "--space", "S6", "--formula", "x1"],
    ["enumerate", "--space", "missing.json"],
    ["enumerate"],
    ["check", "--space", "S6", "--suite", "formal", "--formula", "x1"],
    ["check", "--suite", "fixtures", "--random", "2"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_space_file_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "enumerate", "--space", str(p))[0] == 2
    p.write_text('{"universe": ["x1", "x2"], "classes": [["x1"]]}')
    assert run(capsys, "enumerate", "--space", str(p))[0] == 2


@pytest.mark.parametrize("argv", [
    ["enumerate", "--space", "S6", "--cap", "10"],
    ["table", "--space", "S6", "--op", "impl", "--cap", "17"],
    ["check", "--space", "S6", "--suite", "algebraic", "--cap", "5"],
])
def test_cap_exceeded_exit_3(capsys, argv):
    assert run(capsys, *argv)[0] == 3


@pytest.mark.parametrize("suite, count", [("stone", 18), ("algebraic", 5832), ("oracle", 684),
                                          ("remark4", 324), ("lattice", 5832), ("praba", 4096)])
def test_check_suites(capsys, suite, count):
    code, out, _ = run(capsys, "check", "--space", "S6", "--suite", suite, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert data["reports"][0]["checked"] == count


def test_check_random(capsys):
    code, out, _ = run(capsys, "check", "--suite", "dualstone", "--random", "5", "--seed", "7")
    assert code == 0 and out.count("PASS dualstone on random-") == 5


def test_check_shard(capsys):
    counts = []
    for k in (1, 2, 3):
        code, out, err = run(capsys, "check", "--space", "S4", "--suite", "residuation",
                             "--shard", f"{k}/3", "--format", "json")
        assert code == 0 and "shard" in err
        counts.append(json.loads(out)["reports"][0]["checked"])
    assert sum(counts) == 729
    with pytest.raises(Exception):
        parse_shard("0/3")


def test_check_fixtures_lists_errata(capsys):
    code, out, _ = run(capsys, "check", "--space", "S6", "--suite", "fixtures", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["known errata"] == 2
    assert all(r["passed"] for r in data["reports"])
    code, out, _ = run(capsys, "check", "--space", "S4", "--suite", "fixtures")
    assert code == 0 and out.count("PASS") == 4 and "errata" not in out


def test_check_fails_with_exit_1(capsys, monkeypatch):
    import rough_biheyting.cli as cli
    broken = bh.PropertyReport("stone", "S4")
    broken.fail("x", ["{}"], "a", "b")
    monkeypatch.setitem(cli._PLAIN, "stone", lambda sp, cap: broken)
    code, out, _ = run(capsys, "check", "--space", "S4", "--suite", "stone", "--format", "csv")
    assert code == 1 and "stone,S4,x,{},a,b," in out


def test_kripke_all_worlds_is_diagnostic(capsys):
    code, out, _ = run(capsys, "check", "--space", "S6", "--suite", "kripke", *KRIPKE_ARGS, "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["reports"]) == 18
    assert any(not r["passed"] for r in data["reports"])


def test_kripke_single_world(capsys):
    code, out, _ = run(capsys, "check", "--space", "S6", "--suite", "kripke", "--world", "x1,x5", *KRIPKE_ARGS)
    assert code == 0
    assert "clause 7 [phi*]: VIOLATED" in out and "clause 5 [phi -> psi]: holds" in out


def test_formal_csv(capsys):
    code, out, _ = run(capsys, "check", "--space", "S6", "--suite", "formal", "--world", "x1,x2,x3,x5",
                       "--formula", "[x1,x3,x5] <- [x1]", "--formula", "[x1,x3,x2] /\\ [x2,x4,x6,x5]",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert all(r["holds"] == "True" for r in rows if r["clause"] != "2")
