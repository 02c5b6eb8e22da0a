from fractions import Fraction

import pytest
from click.testing import CliRunner

from g6census import census
from g6census.cli import main
from g6census.records import make_record, read_jsonl, write_jsonl


def _rec(stratum, model, counts, aut, fp="C2"):
    return make_record(stratum, model, counts, aut, fp)


# genus-6 count vectors of products of elliptic curves (valid Weil data)
P1 = (3, 5, 9, 17, 33, 65)


def _sample():
    return [
        _rec("hyp", "hyp:3:1", P1, 2),
        _rec("hyp", "hyp:1:1", P1, 4, "C4"),
        _rec("bn", "bn:0:5", P1, 1, "C1"),
    ]


def test_mass_polynomial():
    assert census.mass_polynomial(2) == 68615
    assert sum(v[0] for v in census.TABLE1.values()) == census.TOTAL[0]
    assert sum(v[1] for v in census.TABLE1.values()) == census.TOTAL[1]


def test_summary_counts():
    s = census.summarize(_sample())
    assert s.rows["hyp"] == (2, Fraction(3, 4))
    assert s.rows["bn"] == (1, Fraction(1))
    assert s.total == (3, Fraction(7, 4))
    # N_1 = 3, N_2 = 5: C(3,2) + 1 = 4 unordered pairs, 6 ordered pairs
    assert s.marked["M_6,1"] == 3 * Fraction(7, 4)
    assert s.marked["M_6,2/S_2"] == 4 * Fraction(7, 4)
    assert s.marked["M_6,2"] == 6 * Fraction(7, 4)
    assert s.distinct_lpolys == 1 and s.max_multiplicity == 3
    assert s.supersingular == 3


def test_empty_census():
    s = census.summarize([])
    assert s.total == (0, 0)
    assert all(v == (0, 0) for v in s.rows.values())
    text = census.report([])
    assert "total" in text


def test_verify_reports_missing_strata():
    checks = {c.name: c for c in census.verify(_sample())}
    assert not checks["strata present"].ok
    assert not checks["hyp classes"].ok
    assert "delta" in checks["total classes"].line()


def test_fault_injection_delta():
    # one quintic short of the expected count
    recs = [_rec("quintic", f"quintic:{i:x}", P1, 168, None) for i in range(4203)]
    c = {c.name: c for c in census.verify(recs)}["quintic classes"]
    assert not c.ok and c.actual - c.expected == -1


def test_jsonl_sorted_roundtrip(tmp_path):
    path = tmp_path / "x.jsonl"
    write_jsonl(_sample()[::-1], path)
    back = read_jsonl(path)
    assert [r.stratum for r in back] == ["hyp", "hyp", "bn"]
    assert [r.canonical_id for r in back[:2]] == ["hyp:1:1", "hyp:3:1"]
    assert back[0] == _sample()[1]


def test_unknown_stratum():
    with pytest.raises(ValueError):
        make_record("foo", "x", P1, 1, None)


def test_cli_mass_formula():
    r = CliRunner().invoke(main, ["mass-formula", "--g", "6", "--q", "2", "--oracle"])
    assert r.exit_code == 0 and "742" in r.output
    r = CliRunner().invoke(main, ["mass-formula", "--g", "7", "--q", "5", "--oracle"])
    assert r.exit_code == 0 and "PASS" in r.output
    r = CliRunner().invoke(main, ["mass-formula", "--g", "4", "--q", "2"])
    assert r.exit_code == 2


def test_cli_run_shards_and_report(tmp_path):
    # shards are round-robin over work units: 1/20 = 1/40 + 21/40
    runner = CliRunner()
    parts = []
    for shard in ("1/40", "21/40", "1/20"):
        out = tmp_path / f"b{shard.replace('/', '_')}.jsonl"
        r = runner.invoke(main, ["run", "--stratum", "biell", "--shard", shard, "--out", str(out)])
        assert r.exit_code == 0, r.output
        parts.append(out)
    merged = census.merge(parts[:2])
    whole = read_jsonl(parts[2])
    assert merged == whole and len(whole) > 0
    r = runner.invoke(main, ["report", "--in", str(parts[2])])
    assert r.exit_code == 0 and "bielliptic" in r.output
    r = runner.invoke(main, ["verify", "--in", str(parts[0]), "--in", str(parts[1])])
    assert r.exit_code == 1 and "FAIL strata present" in r.output
    r = runner.invoke(main, ["run", "--stratum", "hyp", "--shard", "3/2", "--out",
                             str(tmp_path / "bad.jsonl")])
    assert r.exit_code != 0
