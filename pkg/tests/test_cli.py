import json
import math
import subprocess
import sys
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsym.catalog import Tag, build, verify
from torsym.cli import main
from torsym.serialize import ReportDocument, decode, encode

PROPS = settings(max_examples=100, deadline=None)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    rows = out.strip().splitlines()[1:]
    assert code == 0 and len(rows) == 9
    assert any(r.startswith("SRS27") and "3∤n" in r for r in rows)
    assert any(r.startswith("HEX") and "genus m+1" in r for r in rows)


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "PCU", "--n", "1", "--form", "n3")
    assert code == 0
    assert "genus            3" in out and "order            24" in out


def test_verify_constraint_exit_code(capsys):
    code, _, err = run(capsys, "verify", "DIA_C", "--n", "2")
    assert code == 2 and "requires odd n" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "SRS27", "--n", "1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["computed"]["knotted"] is True and doc["computed"]["lift_components"] == 27
    assert doc["passed"] is True and doc["family"] == "SRS27"


def test_verify_hex_json_uses_infinite_marker(capsys):
    _, out, _ = run(capsys, "verify", "HEX", "--json")
    assert json.loads(out)["computed"]["lift_components"] == "INFINITE"


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "NOPE")[0] == 2
    assert run(capsys, "verify", "PCU_C", "--form", "2n3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_verify_supergroups(capsys):
    code, out, _ = run(capsys, "verify", "PCU", "--supergroups", "--json")
    sg = json.loads(out)["supergroups"]
    assert code == 0 and [c["order"] for c in sg["chain"][:3]] == [24, 48, 96]
    assert sg["center"] == ["0/1", "0/1", "0/1"]
    assert run(capsys, "verify", "HEX", "--supergroups")[0] == 2


def test_verify_all(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-all", "--max-n", "2", "--report-dir", str(tmp_path))
    assert code == 0
    pcu = [line.split() for line in out.splitlines() if line.startswith("PCU ")]
    assert {int(r[3]) for r in pcu} == {3, 5, 9, 17, 33, 65}
    tsv = (tmp_path / "summary.tsv").read_text().splitlines()
    assert tsv[0].split("\t")[0] == "family" and len(tsv) == 1 + 34
    assert (tmp_path / "bound_saturation.png").stat().st_size > 0


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-n", "1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert {r["family"] for r in doc["reports"]} == {t.value for t in Tag}


def test_bounds(capsys):
    assert run(capsys, "bounds", "--g", "3")[1].strip().endswith("24/48/48/96")
    assert run(capsys, "bounds", "--g", "2")[1].strip().endswith("12/24/24/48")
    assert run(capsys, "bounds", "--g", "4", "--surface", "nonorientable")[1].strip().endswith("24/48")
    assert run(capsys, "bounds", "--g", "1")[0] == 2


def test_signatures(capsys):
    assert "multiplier 6, (0; 2,2,2,3)" in run(capsys, "signatures")[1]
    assert "multiplier 2, (1; 2)" in run(capsys, "signatures", "--mode", "genus-one")[1]
    assert "multiplier 42, (0; 2,3,7)" in run(capsys, "signatures", "--mode", "hyperbolic")[1]
    doc = json.loads(run(capsys, "signatures", "--json")[1])
    assert doc["multiplier"] == "6/1" and doc["signatures"] == [{"g_prime": 0, "indices": [2, 2, 2, 3]}]


def _obj(text):
    vs = [tuple(float(x) for x in line.split()[1:]) for line in text.splitlines() if line.startswith("v ")]
    ls = [tuple(int(x) - 1 for x in line.split()[1:]) for line in text.splitlines() if line.startswith("l ")]
    return vs, ls


def _segment_set(vs, ls):
    return {frozenset((tuple(round(c, 9) for c in vs[i]), tuple(round(c, 9) for c in vs[j]))) for i, j in ls}


def test_export_pcu_cube(capsys):
    code, out, _ = run(capsys, "export", "PCU", "--box", "1", "1", "1", "--format", "obj")
    vs, ls = _obj(out)
    assert code == 0 and len(vs) == 8 and len(ls) == 12
    corners = list(product((0.0, 1.0), repeat=3))
    want = {frozenset((a, b)) for a in corners for b in corners
            if sum(abs(x - y) for x, y in zip(a, b)) == 1}
    assert _segment_set(vs, ls) == want
    assert "display-only" in out


def test_export_dia_region(capsys):
    _, out, _ = run(capsys, "export", "DIA", "--box", "2", "1", "1")
    vs, ls = _obj(out)
    c = (0.5, 0.5, 0.5)
    star = [(c, e) for e in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]]
    want = set()
    for t in product(range(-3, 4), repeat=3):
        if sum(t) % 2:
            continue
        for a, b in star:
            p = tuple(x + y for x, y in zip(a, t))
            q = tuple(x + y for x, y in zip(b, t))
            if all(0 <= x <= m for x, m in zip(p + q, (2, 1, 1) * 2)):
                want.add(frozenset((tuple(float(x) for x in p), tuple(float(x) for x in q))))
    assert _segment_set(vs, ls) == want


def test_export_hex_json_is_exact(capsys):
    code, out, _ = run(capsys, "export", "HEX", "--box", "1", "1", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["basis"].startswith("hexagonal")
    pts = [tuple(F(c) for c in v) for v in doc["vertices"]]
    assert (F(1, 3), F(2, 3), F(0)) in pts
    assert all(0 <= i < len(pts) and 0 <= j < len(pts) for i, j in doc["segments"])


def test_export_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.obj", tmp_path / "b.obj"
    for path in (a, b):
        assert run(capsys, "export", "SRS", "--box", "2", "2", "1", "--output", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_export_plot_and_unwritable(tmp_path, capsys):
    out = tmp_path / "p.obj"
    assert run(capsys, "export", "PCU", "--output", str(out), "--plot")[0] == 0
    assert out.with_suffix(".png").exists()
    code, _, err = run(capsys, "export", "PCU", "--output", str(tmp_path / "missing" / "x.obj"))
    assert code == 2 and "cannot write" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "torsym", "verify", "SRS27", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "3∤n" in proc.stderr


def test_report_document_round_trip():
    r = verify(build(Tag.HEX, 1))
    doc = ReportDocument.from_report(r)
    assert ReportDocument.from_json(doc.to_json()) == doc
    assert doc.to_json() == ReportDocument.from_json(doc.to_json()).to_json()


leaf = st.one_of(
    st.integers(-10**6, 10**6), st.booleans(), st.none(), st.just(math.inf),
    st.fractions(max_denominator=50), st.text(alphabet="abcKNOTED_ ", max_size=8),
)
tree = st.recursive(leaf, lambda kids: st.one_of(
    st.lists(kids, max_size=4), st.dictionaries(st.text(alphabet="xyz", min_size=1, max_size=3), kids, max_size=4)
), max_leaves=12)


@PROPS
@given(tree)
def test_encode_decode_round_trip(value):
    # plain integers decode as integers; a Fraction always comes back as a Fraction
    assert decode(json.loads(json.dumps(encode(value)))) == value
