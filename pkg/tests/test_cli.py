import json
from fractions import Fraction

import pytest

from periodic_hall import cli
from periodic_hall.cache import Cache
from periodic_hall.quiverrep import Quiver


def run(argv, capsys, inject=None):
    code = cli.main(argv, inject=inject)
    return code, capsys.readouterr()


def test_catalog_a1(tmp_path, capsys):
    code, out = run(["catalog", "--type", "A1", "--q", "3", "--out", str(tmp_path)], capsys)
    assert code == 0
    data = json.loads((tmp_path / "catalog.json").read_text())
    assert [o["aut"] for o in data["objects"]] == [2, 2]
    assert [o["d"] for o in data["objects"]] == [1, 1]
    assert data["hom_dims"] == [[1, 0], [0, 1]]


@pytest.mark.parametrize("argv,needle", [
    (["catalog", "--type", "B2"], "Dynkin"),
    (["catalog", "--type", "A2", "--q", "6"], "q must be"),
    (["catalog", "--type", "A2", "--guard", "0"], "guard"),
    (["verify", "--type", "A2", "--jobs", "0"], "jobs"),
])
def test_config_errors(argv, needle, capsys):
    code, out = run(argv, capsys)
    assert code == 2
    assert needle in out.err


def test_quiver_file(tmp_path, capsys):
    f = tmp_path / "q.txt"
    f.write_text("vertices 2\narrow 2 1\n")
    code, out = run(["catalog", "--quiver-file", str(f), "--q", "2"], capsys)
    assert code == 0 and "6 indecomposable" in out.out
    f.write_text("vertices 3\narrow 1 2\narrow 2 3\narrow 3 1\n")
    code, out = run(["catalog", "--quiver-file", str(f)], capsys)
    assert code == 2 and ("Dynkin" in out.err or "tree" in out.err)


def test_hall_tables(tmp_path, capsys):
    code, out = run(["hall", "--type", "A2", "--q", "2", "--out", str(tmp_path)], capsys)
    assert code == 0
    for name in ("g.csv", "gbar.csv", "F.csv", "cones.csv", "hall.json"):
        assert (tmp_path / name).exists()
    assert (tmp_path / "g.csv").read_text().splitlines()[0] == "U,V,W,num,den"


def test_hall_guard_skips_are_reported(tmp_path, capsys):
    code, out = run(["hall", "--type", "A2", "--q", "3", "--guard", "5", "--out", str(tmp_path)], capsys)
    data = json.loads((tmp_path / "hall.json").read_text())
    assert data["skipped"]
    assert "skipped" in out.out


@pytest.mark.parametrize("verb", ["catalog", "hall", "verify", "lie"])
def test_byte_identical(verb, tmp_path, capsys):
    outs = []
    for k in range(2):
        d = tmp_path / str(k)
        extra = ["--suite", "associativity"] if verb == "verify" else []
        code, _ = run([verb, "--type", "A2", "--q", "4", "--out", str(d)] + extra, capsys)
        assert code == 0
        outs.append({p.name: p.read_bytes() for p in sorted(d.iterdir())})
    assert outs[0] == outs[1]


def test_timings_opt_in(tmp_path, capsys):
    run(["verify", "--type", "A1", "--q", "3", "--suite", "jacobi", "--out", str(tmp_path)], capsys)
    assert "seconds" not in (tmp_path / "verify.json").read_text()
    run(["verify", "--type", "A1", "--q", "3", "--suite", "jacobi", "--timings", "--out", str(tmp_path)], capsys)
    assert "seconds" in (tmp_path / "verify.json").read_text()


def test_fault_injection_exits_1(tmp_path, capsys):
    def corrupt(hall):
        rc = hall.rc
        S, S1 = rc.indecomposables[0], rc.indecomposables[1]
        P = rc.indecomposables[4]
        hall.g_override[(S, S1, P)] = Fraction(1, 2)
    code, out = run(["verify", "--type", "A2", "--q", "3", "--suite", "associativity"], capsys, inject=corrupt)
    assert code == 1
    assert "violation" in out.out


def test_literal_theta_flag_fails(capsys):
    code, out = run(["verify", "--type", "A2", "--q", "4", "--suite", "theta-associativity", "--literal-theta"],
                    capsys)
    assert code == 1


def test_jobs_match_serial(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    run(["verify", "--type", "A2", "--q", "3", "--suite", "associativity", "--out", str(a)], capsys)
    run(["verify", "--type", "A2", "--q", "3", "--suite", "associativity", "--jobs", "2", "--out", str(b)], capsys)
    ja, jb = (json.loads((d / "verify.json").read_text()) for d in (a, b))
    ra, rb = ja["reports"][0], jb["reports"][0]
    assert ra["checks"] == rb["checks"] and ra["ok"] and rb["ok"]
    assert sorted(map(json.dumps, ra["skipped"])) == sorted(map(json.dumps, rb["skipped"]))


def test_chevalley_skipped_below_4(tmp_path, capsys):
    code, out = run(["lie", "--type", "A2", "--q", "3", "--out", str(tmp_path)], capsys)
    assert code == 0 and "skipped" in out.out
    code, out = run(["lie", "--type", "A2", "--q", "4", "--out", str(tmp_path)], capsys)
    assert code == 0 and "certified" in out.out


def test_cache_hit_and_corruption(tmp_path, capsys):
    cache_dir = tmp_path / "cache"
    args = ["hall", "--type", "A2", "--q", "2", "--cache-dir", str(cache_dir), "--out", str(tmp_path / "o")]
    assert run(args, capsys)[0] == 0
    first = (tmp_path / "o" / "g.csv").read_bytes()
    entries = list(cache_dir.glob("*.json"))
    assert len(entries) == 1
    entries[0].write_text("{not json")
    assert run(args, capsys)[0] == 0
    assert (tmp_path / "o" / "g.csv").read_bytes() == first
    assert json.loads(entries[0].read_text())["data"]


def test_cache_unit(tmp_path):
    Q = Quiver.from_type("A2")
    c = Cache(tmp_path)
    calls = []
    compute = lambda: calls.append(1) or {"x": 1}
    assert c.get_or_compute(Q, 3, "t", compute) == {"x": 1}
    assert c.get_or_compute(Q, 3, "t", compute) == {"x": 1}
    assert len(calls) == 1 and c.hits == 1
    # different q or extra parameters miss
    c.get_or_compute(Q, 4, "t", compute)
    c.get_or_compute(Q, 3, "t", compute, extra={"guard": 5})
    assert len(calls) == 3
    # a blob written by another code version is ignored
    p = c.path(c.key(Q, 3, "t"))
    blob = json.loads(p.read_text())
    blob["version"] = "old"
    p.write_text(json.dumps(blob))
    c.get_or_compute(Q, 3, "t", compute)
    assert len(calls) == 4
    assert not list(tmp_path.glob("*.tmp"))
