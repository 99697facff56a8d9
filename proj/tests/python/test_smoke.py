import json

import pytest

import wqg


def test_pair_groupoid_passes_every_check():
    pg2 = wqg.pair_groupoid_algebra(2)
    assert pg2.kind == "weak-bialgebra"
    assert pg2.dim == 4
    assert pg2.has_antipode
    report = wqg.check(pg2)
    assert report["overall"] is True
    assert all(item["status"] == "pass" for item in report["items"])


def test_serialization_round_trips(tmp_path):
    pg3 = wqg.pair_groupoid_algebra(3, field="F_5")
    text = pg3.serialize()
    assert wqg.parse(text).serialize() == text
    path = str(tmp_path / "pg3.json")
    wqg.save(pg3, path)
    assert wqg.load(path) == pg3
    with open(path) as f:
        assert f.read() == text


def test_errors_map_to_python_exceptions():
    head = '{"format": "wqg", "version": 1, "kind": "pairing", "field": "Q", "rows": 1, "cols": 1, '
    with pytest.raises(wqg.ParseError):
        wqg.parse(head + '"tau": [[[0, 0], "1/0"]]}')
    with pytest.raises(wqg.SchemaError):
        wqg.parse(head + '"tau": [[[1, 0], "1"]]}')
    assert issubclass(wqg.ParseError, wqg.WqgError)


def test_antipode_solver():
    mx = wqg.monoid_bialgebra([[0, 1], [1, 1]])
    assert not mx.has_antipode
    assert wqg.solve_antipode(mx) == {"domain": 4, "codomain": 4, "rank": 3}
    pg2 = wqg.pair_groupoid_algebra(2)
    solved = wqg.solve_antipode(pg2)
    assert solved.has_antipode
    assert wqg.check(solved)["overall"]


def test_conversions_agree_with_the_cli():
    pg2 = wqg.pair_groupoid_algebra(2)
    l = wqg.to_bialgebroid(pg2)
    assert l.kind == "bialgebroid"
    back = wqg.from_bialgebroid(l)
    code, out, _ = wqg.run_cli(["from-bialgebroid", "-", "--ifs", "canonical"], l.serialize())
    assert code == 0
    assert out == back.serialize()
    assert wqg.dual(pg2).serialize() == wqg.pair_groupoid_function_algebra(2).serialize()


def test_cli_exit_codes():
    code, out, _ = wqg.run_cli(["gen", "pair-groupoid", "--objects", "2"])
    assert code == 0
    assert wqg.run_cli(["check", "-"], out)[0] == 0
    assert wqg.run_cli(["check", "-"], "{")[0] == 2
    code, out, _ = wqg.run_cli(["antipode", "-"], wqg.monoid_bialgebra([[0, 1], [1, 1]]).serialize())
    assert code == 1
    assert json.loads(out)["rank"] == 3
