import io
import json

from cyclesets.classify import build_pq, cyclic_cycle_set
from cyclesets.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


def test_verify_ok(tmp_path, capsys):
    f = write(tmp_path, "z4.json", cyclic_cycle_set(4).to_dict())
    code, out, _ = run(capsys, "verify", f)
    assert code == 0 and out["status"] == "pass"


def test_verify_fail(tmp_path, capsys):
    f = write(tmp_path, "bad.json", {"table": [[0, 1], [1, 0]]})
    code, out, _ = run(capsys, "verify", f)
    assert code == 2 and out["status"] == "fail" and out["witnesses"]


def test_malformed(tmp_path, capsys):
    f = tmp_path / "junk.json"
    f.write_text("{")
    assert main(["verify", str(f)]) == 1
    g = write(tmp_path, "shape.json", {"table": [[0, 1], [0]]})
    assert main(["verify", g]) == 1
    assert main(["verify", str(tmp_path / "missing.json")]) == 1


def test_unknown_flag(tmp_path, capsys):
    f = write(tmp_path, "z4.json", cyclic_cycle_set(4).to_dict())
    assert main(["verify", f, "--bogus"]) == 1
    assert main(["nosuchverb"]) == 1


def test_info(tmp_path, capsys):
    f = write(tmp_path, "x.json", build_pq(2, 3, (0, 1)).to_dict())
    code, out, _ = run(capsys, "info", f)
    assert code == 0
    assert out["mpl"] == 2 and out["group_order"] == 18 and out["socle_order"] == 9
    assert out["uniconnected"] is False and out["indecomposable"] is True
    assert out["additive_invariants"] == [3, 6]


def test_info_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(cyclic_cycle_set(3).to_dict())))
    code, out, _ = run(capsys, "info", "-")
    assert code == 0 and out["uniconnected"] is True and out["mpl"] == 1


def test_info_limit(tmp_path, capsys):
    f = write(tmp_path, "x.json", build_pq(2, 3, (0, 1)).to_dict())
    assert main(["info", f, "--limit", "5"]) == 4


def test_retract(tmp_path, capsys):
    f = write(tmp_path, "x.json", build_pq(2, 3, (0, 1)).to_dict())
    code, out, _ = run(capsys, "retract", f)
    assert code == 0 and out["projection"] == [0, 0, 0, 1, 1, 1] and out["retraction"]["n"] == 2


def test_iso(tmp_path, capsys):
    a = write(tmp_path, "a.json", build_pq(2, 3, (0, 1)).to_dict())
    b = write(tmp_path, "b.json", build_pq(2, 3, (1, 2)).to_dict())
    c = write(tmp_path, "c.json", build_pq(2, 3, (0, 2)).to_dict())
    code, out, _ = run(capsys, "iso", a, b)
    assert code == 3 and out["isomorphic"] is False
    code, out, _ = run(capsys, "iso", a, c)
    assert code == 0 and out["isomorphic"] is True and len(out["bijection"]) == 6


def test_output_file(tmp_path, capsys):
    f = write(tmp_path, "z4.json", cyclic_cycle_set(4).to_dict())
    dest = tmp_path / "out.json"
    assert main(["info", f, "-o", str(dest)]) == 0
    assert json.loads(dest.read_text())["group_order"] == 4


def _spec(phi):
    return {"base": cyclic_cycle_set(2).to_dict(), "components": [[3], [3]], "phi": phi}


def test_extend(tmp_path, capsys):
    f = write(tmp_path, "ext.json", _spec([[[0], [1]], [[1], [0]]]))
    code, out, _ = run(capsys, "extend", f)
    assert code == 0
    assert out["extension"]["table"] == [list(r) for r in build_pq(2, 3, (0, 1)).table]
    assert out["semidirect"]["status"] == "pass"
    assert out["semidirect"]["metrics"]["group_order"] == 18


def test_extend_not_equivariant(tmp_path, capsys):
    f = write(tmp_path, "ext.json", _spec([[[1], [0]], [[0], [0]]]))
    code, out, _ = run(capsys, "extend", f)
    assert code == 2 and out["status"] == "fail"


def test_extend_bad_module(tmp_path, capsys):
    spec = _spec([[[0], [0]], [[0], [0]]])
    spec["action_gens"] = {"0": [[[0]], [[1]]]}
    f = write(tmp_path, "ext.json", spec)
    assert main(["extend", f]) == 2


def test_lvcheck(tmp_path, capsys):
    spec = _spec([[[0], [1]], [[1], [0]]])
    spec["other"] = [[[1], [1]], [[2], [2]]]
    f = write(tmp_path, "lv.json", spec)
    code, out, _ = run(capsys, "lvcheck", f)
    assert out["twisted_cocycle"] and out["equivariant"]
    assert out["representative"] == [[[0], [1]], [[1], [0]]]
    assert code in (0, 3)
    assert (code == 0) == out["cohomologous"]


def test_lvcheck_parallel(tmp_path, capsys):
    spec = {"base": cyclic_cycle_set(3).to_dict(), "orders": [2], "gamma": [[1, 1, 1], [0, 0, 0], [0, 0, 0]]}
    f = write(tmp_path, "lv.json", spec)
    code, out, _ = run(capsys, "lvcheck", f)
    assert code == 2 and out["lv_cocycle"] is False


def test_classify_pq(capsys):
    code, out, _ = run(capsys, "classify", "pq", "--p", "2", "--q", "3")
    assert code == 0 and out
    assert all(e["metadata"]["mpl"] == 2 and e["n"] == 6 for e in out)


def test_classify_pqr_budget(capsys):
    code, out, raw = run(capsys, "classify", "pqr", "--p", "2", "--q", "3", "--r", "5", "--budget", "6")
    assert code == 4 and out
    code2, _, raw2 = run(capsys, "classify", "pqr", "--p", "2", "--q", "3", "--r", "5", "--budget", "6")
    assert code2 == 4 and raw == raw2


def test_classify_pqr_needs_r(capsys):
    assert main(["classify", "pqr", "--p", "2", "--q", "3"]) == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--list")
    assert code == 0 and out["count"] == 12 and len(out["cycle_sets"]) == 12
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--indecomposable", "--upto-iso")
    assert code == 0 and out["count"] == 1
    assert main(["enumerate", "--n", "12"]) == 4


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "crosscheck", "--p", "2", "--q", "3")
    assert code == 0 and out["status"] == "pass"
    code, out, _ = run(capsys, "oracle", "enumerate", "--n", "4", "--upto-iso")
    assert code == 0 and out["count"] == 23


def test_deterministic_bytes(tmp_path, capsys):
    f = write(tmp_path, "x.json", build_pq(2, 3, (0, 1)).to_dict())
    _, _, a = run(capsys, "info", f)
    _, _, b = run(capsys, "info", f)
    assert a == b and a.endswith("\n")


def test_lvcheck_parallel_valid(tmp_path, capsys):
    spec = {"base": cyclic_cycle_set(2).to_dict(), "orders": [3], "gamma": [[0, 1], [1, 0]]}
    f = write(tmp_path, "lv.json", spec)
    code, out, _ = run(capsys, "lvcheck", f)
    assert code == 0 and out["lv_cocycle"] and out["invariant"] and out["abelian_extension"]
