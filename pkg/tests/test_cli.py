"""CLI contract: document round trips, streaming output, exit codes."""

import json

import pytest

from skewtwist.cli import main
from skewtwist.serialize import (
    brace_to_doc,
    canonical_dumps,
    doc_to_brace,
    doc_to_solution,
    doc_to_twist,
    parse_document,
    solution_to_doc,
    twist_to_doc,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_and_verify_roundtrip(tmp_path, capsys):
    path = tmp_path / "s4.json"
    code, out, err = run(capsys, "gen", "s4-solution", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.endswith("\n")
    doc = parse_document(text)
    sol = doc_to_solution(doc)
    # canonical serialization round-trips byte-identically
    assert canonical_dumps(solution_to_doc(sol)) == text
    code, out, err = run(capsys, "verify", "--in", str(path))
    assert code == 0
    assert "ok" in err


def test_gen_unknown_generator(capsys):
    code, out, err = run(capsys, "gen", "no-such-thing")
    assert code == 2
    assert "unknown generator" in err


def test_gen_bad_params(capsys):
    code, out, err = run(capsys, "gen", "flip")
    assert code == 2


def test_verify_rejects_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out, err = run(capsys, "verify", "--in", str(path))
    assert code == 2


def test_verify_rejects_axiom_violation(tmp_path, capsys):
    # bijective pair table that is not a braiding: 3-cycle on encoded pairs
    doc = {"kind": "solution", "n": 2, "r": [[0, 1], [1, 0], [0, 0], [1, 1]]}
    path = tmp_path / "notbraid.json"
    path.write_text(canonical_dumps(doc))
    code, out, err = run(capsys, "verify", "--in", str(path))
    assert code == 1


def test_verify_missing_file(capsys):
    code, out, err = run(capsys, "verify", "--in", "/nonexistent/file.json")
    assert code == 2


def test_twist_apply_and_invert(tmp_path, capsys):
    base = tmp_path / "z4.json"
    run(capsys, "gen", "z4-brace", "--out", str(base))
    # produce the canonical twist via theta-apply on the brace's own pair
    import skewtwist as st

    b = st.z4_brace()
    t = st.theta_canonical_twist(b)
    twist_path = tmp_path / "twist.json"
    twist_path.write_text(canonical_dumps(twist_to_doc(t)))

    out_path = tmp_path / "trivial.json"
    code, out, err = run(
        capsys, "twist", "--base", str(base), "--twist", str(twist_path), "--out", str(out_path)
    )
    assert code == 0
    twisted = doc_to_brace(parse_document(out_path.read_text()))
    assert twisted.is_trivial()

    inv_path = tmp_path / "inv.json"
    code, out, err = run(
        capsys, "invert", "--twist", str(twist_path), "--base", str(base), "--out", str(inv_path)
    )
    assert code == 0
    inv = doc_to_twist(parse_document(inv_path.read_text()))
    assert inv == st.invert_brace_twist(t, b)

    # compose the inverse (outer) with the twist (inner): identity
    comp_path = tmp_path / "comp.json"
    code, out, err = run(
        capsys,
        "compose",
        "--outer", str(inv_path),
        "--inner", str(twist_path),
        "--base", str(base),
        "--out", str(comp_path),
    )
    assert code == 0
    comp = doc_to_twist(parse_document(comp_path.read_text()))
    assert comp == st.TwistTriple.identity(4)


def test_verify_twist_against_base(tmp_path, capsys):
    import skewtwist as st

    base = tmp_path / "z4.json"
    run(capsys, "gen", "z4-brace", "--out", str(base))
    b = st.z4_brace()
    good = tmp_path / "good.json"
    good.write_text(canonical_dumps(twist_to_doc(st.theta_canonical_twist(b))))
    code, out, err = run(capsys, "verify", "--in", str(good), "--base", str(base))
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text(
        canonical_dumps(twist_to_doc(st.kappa_twist(st.flip_solution(4), (1, 0, 3, 2))))
    )
    code, out, err = run(capsys, "verify", "--in", str(bad), "--base", str(base))
    assert code == 1


def test_enumerate_twists_stream(tmp_path, capsys):
    b1 = tmp_path / "z4brace.json"
    b2 = tmp_path / "trivial.json"
    run(capsys, "gen", "z4-brace", "--out", str(b1))
    run(capsys, "gen", "cyclic-trivial-brace", "4", "--out", str(b2))
    code, out, err = run(capsys, "enumerate", "twists", "--b1", str(b1), "--b2", str(b2))
    assert code == 0
    lines = out.strip().split("\n")
    summary = json.loads(lines[-1])
    assert summary == {"count": 4, "kind": "report"}
    assert len(lines) == 5
    for line in lines[:-1]:
        doc = json.loads(line)
        assert doc["kind"] == "twist"
        doc_to_twist(doc)  # parses and validates shape


def test_enumerate_families_stream(tmp_path, capsys):
    import skewtwist as st
    from skewtwist.serialize import group_to_doc

    g = tmp_path / "klein.json"
    g.write_text(canonical_dumps(group_to_doc(st.klein())))
    code, out, err = run(capsys, "enumerate", "families", "--src", str(g), "--tgt", str(g))
    assert code == 0
    lines = out.strip().split("\n")
    assert json.loads(lines[-1])["count"] == 48


def test_enumerate_thetas_budget_exit_code(tmp_path, capsys):
    import skewtwist as st
    from skewtwist.matched import pair_from_brace
    from skewtwist.serialize import matched_pair_to_doc

    p = pair_from_brace(st.trivial_brace(st.cyclic(4)))
    pair = tmp_path / "pair.json"
    pair.write_text(canonical_dumps(matched_pair_to_doc(p)))
    code, out, err = run(capsys, "enumerate", "thetas", "--pair", str(pair), "--budget", "10")
    assert code == 3
    code, out, err = run(capsys, "enumerate", "thetas", "--pair", str(pair))
    assert code == 0
    lines = out.strip().split("\n")
    assert json.loads(lines[-1])["count"] == 256


def test_classify_report(tmp_path, capsys):
    b1 = tmp_path / "z4brace.json"
    b2 = tmp_path / "trivial.json"
    run(capsys, "gen", "z4-brace", "--out", str(b1))
    run(capsys, "gen", "cyclic-trivial-brace", "4", "--out", str(b2))
    code, out, err = run(capsys, "classify", "--b1", str(b1), "--b2", str(b2))
    assert code == 0
    report = json.loads(out)
    assert report["related"] is True
    assert report["count"] == 4
    assert all(entry["anytwist_f_ok"] for entry in report["twists"])
    # unrelated pair
    b3 = tmp_path / "klein.json"
    run(capsys, "gen", "klein-trivial-brace", "--out", str(b3))
    code, out, err = run(capsys, "classify", "--b1", str(b2), "--b2", str(b3))
    assert code == 0
    report = json.loads(out)
    assert report["related"] is False
    assert report["count"] == 0


def test_matched_check_and_theta_apply(tmp_path, capsys):
    import skewtwist as st
    from skewtwist.matched import ThetaMap, pair_from_brace
    from skewtwist.serialize import matched_pair_to_doc, theta_to_doc

    b = st.z4_brace()
    p = pair_from_brace(b)
    pair = tmp_path / "pair.json"
    pair.write_text(canonical_dumps(matched_pair_to_doc(p)))
    code, out, err = run(capsys, "matched-check", "--in", str(pair))
    assert code == 0
    assert "ok" in err

    base = tmp_path / "z4.json"
    base.write_text(canonical_dumps(brace_to_doc(b)))
    theta = tmp_path / "theta.json"
    theta.write_text(canonical_dumps(theta_to_doc(ThetaMap.canonical(p))))
    out_path = tmp_path / "twist.json"
    code, out, err = run(
        capsys, "theta-apply", "--pair", str(pair), "--theta", str(theta),
        "--base", str(base), "--out", str(out_path),
    )
    assert code == 0
    t = doc_to_twist(parse_document(out_path.read_text()))
    assert t == st.theta_canonical_twist(b)

    code, out, err = run(
        capsys, "theta-apply", "--pair", str(pair), "--theta", str(theta),
        "--base", str(base), "--apply",
    )
    assert code == 0
    twisted = doc_to_brace(parse_document(out))
    assert twisted.is_trivial()


def test_stdin_stdout(tmp_path, capsys, monkeypatch):
    import io

    doc = canonical_dumps({"kind": "solution", "n": 2, "r": [[0, 0], [1, 0], [0, 1], [1, 1]]})
    monkeypatch.setattr("sys.stdin", io.StringIO(doc))
    code, out, err = run(capsys, "verify", "--in", "-")
    assert code == 0


def test_all_generators_roundtrip(tmp_path, capsys):
    cases = [
        ("s4-solution",),
        ("flip", "3"),
        ("lyubashenko", "3", "(0 1 2)", "(0 2 1)"),
        ("cyclic-trivial-brace", "5"),
        ("klein-trivial-brace",),
        ("sym-trivial-brace", "3"),
        ("z4-brace",),
    ]
    for case in cases:
        code, out, err = run(capsys, "gen", *case)
        assert code == 0
        doc = parse_document(out)
        from skewtwist.serialize import load_document

        obj = load_document(doc)
        # re-serializing is byte-identical
        if doc["kind"] == "solution":
            assert canonical_dumps(solution_to_doc(obj)) == out
        else:
            assert canonical_dumps(brace_to_doc(obj)) == out
