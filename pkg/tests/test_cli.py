"""End-to-end tests of the command line surface: flag parsing, JSON output,
exit codes, and determinism of repeated runs."""

import argparse
import json

import pytest

from gitkit import polytopes
from gitkit.cli import REGISTRY, build_parser, main
from gitkit.localization import vertex_sum


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def _subcommands(parser):
    for act in parser._actions:
        if isinstance(act, argparse._SubParsersAction):
            return act.choices
    return {}


def test_registry_matches_parser_tree():
    top = build_parser()
    tree = {name: set(_subcommands(sub)) for name, sub in _subcommands(top).items()}
    for func_name, (group, op) in REGISTRY.items():
        assert group in tree, func_name
        if op is not None:
            assert op in tree[group], func_name


def test_weyl_character_output(capsys):
    code, out, err = run(["char", "weyl", "--lambda", "2,1,0"], capsys)
    assert code == 0 and err == ""
    obj = json.loads(out)
    assert obj["dim"] == 8
    support = {(tuple(t["w"]), t["c"]) for t in obj["character"]}
    assert ((1, 1, 1), 2) in support
    assert len(support) == 7


def test_repeated_runs_are_byte_identical(capsys):
    _, out1, _ = run(["char", "weyl", "--lambda", "2,1,0"], capsys)
    _, out2, _ = run(["char", "weyl", "--lambda", "2,1,0"], capsys)
    assert out1 == out2
    _, out3, _ = run(["polytope", "bg", "--points", "0,0;2,0;0,2", "--seed", "3"],
                     capsys)
    _, out4, _ = run(["polytope", "bg", "--points", "0,0;2,0;0,2", "--seed", "3"],
                     capsys)
    assert out3 == out4


def test_horn_check_exact_stdout(capsys):
    code, out, err = run(["horn", "check", "--a", "3,1", "--b", "2,1", "--c", "4,3"],
                         capsys)
    assert code == 0
    assert out == '{"feasible": true}\n'
    code, out, _ = run(["horn", "check", "--a", "1,0", "--b", "1,0", "--c", "3,-1"],
                       capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["feasible"] is False
    assert obj["violated"] == {"I": [2], "J": [2], "K": [2]}
    code, out, _ = run(["horn", "check", "--a", "1,0", "--b", "1,0", "--c", "1,0"],
                       capsys)
    assert json.loads(out)["violated"] == "trace"


def test_puzzle_count_and_listing(capsys):
    code, out, _ = run(["puzzles", "count", "--r", "4", "--I", "2,4",
                        "--J", "2,4", "--K", "2,3"], capsys)
    assert code == 0
    assert json.loads(out) == {"count": 1}
    code, out, _ = run(["puzzles", "count", "--r", "4", "--I", "2,4",
                        "--J", "2,4", "--K", "2,3", "--list"], capsys)
    obj = json.loads(out)
    assert obj["count"] == 1 and len(obj["fillings"]) == 1


def test_stability_classify_and_flow(capsys):
    code, out, _ = run(["stability", "classify", "--weights", "1,1;-1,0;0,-1"],
                       capsys)
    assert code == 0
    assert json.loads(out)["verdict"] == "Stable"
    code, out, _ = run(["stability", "flow", "--weights", "1,0;1,1"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["outcome"] == "Escaped"
    assert abs(obj["direction"][0] + 1.0) < 1e-6
    assert abs(obj["direction"][1]) < 1e-6
    assert obj["slope"] < 0


def test_localize_p1(capsys):
    code, out, _ = run(["localize", "p1", "--d", "3"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["d"] == 3 and obj["passed"] is True
    assert obj["box"] == [[-9, 9]]


def test_localize_toric_inline(capsys):
    code, out, _ = run(["localize", "toric", "--points", "0,0;1,0;0,1",
                        "--eval", "2,3", "--box", "-1:2,-1:2"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["value"] == "6"
    assert len(obj["expansion"]) == 3


def test_polytope_cut_kinds(capsys):
    code, out, _ = run(["polytope", "cut", "--points", "0,0;1,0;1,1;0,1",
                        "--normal", "1,1", "--level", "3/2"], capsys)
    assert code == 0
    assert json.loads(out)["kind"] == "cut"
    _, out, _ = run(["polytope", "cut", "--points", "0,0;1,0;1,1;0,1",
                     "--normal", "1,1", "--level", "-1"], capsys)
    assert json.loads(out)["kind"] == "noop"
    _, out, _ = run(["polytope", "cut", "--points", "0,0;1,0;1,1;0,1",
                     "--normal", "1,1", "--level", "5"], capsys)
    assert json.loads(out)["kind"] == "empty"


def test_infile_polytope(tmp_path, capsys):
    p = polytopes.hull([(0, 0), (1, 0), (0, 1)])
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps(p.to_json()))
    code, out, _ = run(["polytope", "lattice", "--in", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["count"] == 3


def test_infile_series(tmp_path, capsys):
    series = vertex_sum(polytopes.hull([(0,), (2,)]))
    bare = tmp_path / "series.json"
    bare.write_text(json.dumps(series.to_json()))
    code, out, _ = run(["localize", "eval", "--in", str(bare), "--point", "2"],
                       capsys)
    assert code == 0
    assert json.loads(out)["value"] == "7"
    # a wrapper object with a "series" key works too
    wrapped = tmp_path / "wrapped.json"
    wrapped.write_text(json.dumps({"series": series.to_json()}))
    code, out, _ = run(["localize", "eval", "--in", str(wrapped), "--point", "2"],
                       capsys)
    assert code == 0 and json.loads(out)["value"] == "7"


def test_domain_error_exits_one_with_json_stderr(capsys):
    code, out, err = run(["char", "weyl", "--lambda", "1,2"], capsys)
    assert code == 1 and out == ""
    obj = json.loads(err)
    assert set(obj) == {"code", "context", "message"}
    assert obj["code"] == "not_dominant"


def test_missing_infile_exits_one(tmp_path, capsys):
    code, _, err = run(["polytope", "lattice", "--in", str(tmp_path / "no.json")],
                       capsys)
    assert code == 1
    assert json.loads(err)["code"] == "bad_file"


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["char", "weyl", "--lambda", "2,x"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["char", "weyl"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["nosuchgroup"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_negative_weight_values_parse(capsys):
    code, out, _ = run(["lie", "dominantize", "--mu", "-1,3"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["dominant"] == ["3", "-1"]


def test_seed_env_overrides_flag(capsys, monkeypatch):
    monkeypatch.delenv("GITKIT_SEED", raising=False)
    _, base9, _ = run(["horn", "sample", "--r", "2", "--trials", "5",
                       "--seed", "9"], capsys)
    _, base0, _ = run(["horn", "sample", "--r", "2", "--trials", "5",
                       "--seed", "0"], capsys)
    monkeypatch.setenv("GITKIT_SEED", "9")
    _, env9, _ = run(["horn", "sample", "--r", "2", "--trials", "5",
                      "--seed", "0"], capsys)
    assert env9 == base9
    assert base9 != base0
    monkeypatch.setenv("GITKIT_SEED", "abc")
    code, _, err = run(["horn", "sample", "--r", "2", "--trials", "5"], capsys)
    assert code == 1
    assert json.loads(err)["code"] == "bad_seed"


def test_examples_report(capsys):
    code, out, err = run(["examples"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "total 17 cases, all passed"
    assert all("FAIL" not in line for line in lines)
    assert len(lines) == 18


def test_installed_entry_point():
    import subprocess

    res = subprocess.run(["gitkit", "horn", "check", "--a", "3,1", "--b", "2,1",
                          "--c", "4,3"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == '{"feasible": true}\n'
