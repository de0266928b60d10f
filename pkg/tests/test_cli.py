import json

import pytest

from floorparts import cli
from floorparts.dsl import ParseError

from .cli_cases import CASES, GOLDEN
from .make_golden import capture


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden_text(name, argv, code):
    text, got = capture(argv)
    assert got == code
    assert text == (GOLDEN / f"{name}.txt").read_text()


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden_json(name, argv, code):
    doc, got = capture(argv + ["--json", "-"])
    assert got == code
    assert doc == (GOLDEN / f"{name}.json").read_text()
    json.loads(doc)


def test_json_to_file(tmp_path):
    out = tmp_path / "r.json"
    text, code = capture(["check", "decomposer", "linear(1/2)", "--json", str(out)])
    assert code == 1 and "witness" in text
    doc = json.loads(out.read_text())
    assert doc["verdict"] == "refuted" and doc["witness"]["vars"] == {"x": "-4", "y": "-63/16"}
    assert set(doc) >= {"equation", "function", "grid", "verdict", "witness", "points_checked"}


def test_identical_argv_identical_json():
    argv = ["check", "associative", "shifted_floor(1/3)", "--samples", "200", "--seed", "9", "--json", "-"]
    assert capture(argv) == capture(argv)


def test_parse_args_commands():
    inv = cli.parse_args(["eval", "shifted_floor(1/2)", "7/10"])
    assert isinstance(inv.command, cli.Eval)
    text, doc, code = cli.run(inv.command)
    assert text == "shifted_floor(1/2)(7/10) = 1/2" and code == 0
    inv = cli.parse_args(["classify", "interval[0,1)"])
    text, doc, code = cli.run(inv.command)
    assert doc["is_factor"] and doc["complement"] == "lattice(0,1)"
    inv = cli.parse_args(["gdiv", "7", "--b", "2"])
    assert inv.command == cli.Gdiv(7, 2)
    assert cli.run(inv.command)[0] == "7 = 6 + 1"
    inv = cli.parse_args(["dsum", "finite{0,1}", "finite{0,1}"])
    text, _, code = cli.run(inv.command)
    assert code == 1 and "witness: 1 = 1+0 = 0+1" in text


@pytest.mark.parametrize("argv", [
    ["eval", "floor"], [], ["frobnicate"], ["check", "nope", "floor"], ["gdiv", "7"], ["gdiv", "7", "--b", "0"],
    ["scan"], ["lemma34", "interval[0,1)", "--ns", "0"], ["check", "decomposer", "floor", "--grid-denom", "0"],
    ["scan", "floor", "--cond", "bogus"], ["eisenberg", "floor", "--ks", "a,b"],
])
def test_usage_errors(argv):
    with pytest.raises(cli.UsageError):
        cli.parse_args(argv)
    assert cli.main(argv) == 64


@pytest.mark.parametrize("argv", [["eval", "floor(", "1"], ["eval", "floor", "1/0"], ["dsum", "finite{0", "finite{}"],
                                  ["classify", "interval[1,0)"]])
def test_parse_errors_exit_64(argv, capsys):
    with pytest.raises(ParseError):
        cli.parse_args(argv)
    assert cli.main(argv) == 64
    assert "position" in capsys.readouterr().err


def test_library_errors_exit_2(capsys):
    assert cli.main(["eval", "mu_periodic{1/2:1}", "0"]) == 2
    assert "MuUndefined" in capsys.readouterr().out
    assert cli.main(["lemma34", "interval[0,1]"]) == 2


def test_negative_rational_arguments():
    inv = cli.parse_args(["gdiv", "-7/2", "--b", "-2"])
    assert inv.command == cli.Gdiv(cli.Fraction(-7, 2), cli.Fraction(-2))


def test_range_alias():
    a = cli.parse_args(["check", "decomposer", "floor", "--range", "2", "--denom", "5"])
    b = cli.parse_args(["check", "decomposer", "floor", "--grid-range", "2", "--grid-denom", "5"])
    assert a == b
