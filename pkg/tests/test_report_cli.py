import json

import pytest

from hitchin3 import cli, report
from hitchin3.errors import MalformedInput, ParseError
from hitchin3.report import JobSpec, load_jobs, run_batch, run_job


def job(**kw):
    return JobSpec.from_dict(kw)


def test_affine_square():
    rep = run_job(job(surface="affine_line", f=[[2, "1"]]))
    v = rep.body["verdict"]
    assert v["exists"] == "Yes" and v["region"] == "(2, 5/2]"
    assert v["degrees"]["E2"] == "-1/2"
    assert rep.exit_code == 0


def test_affine_constant():
    rep = run_job(job(surface="affine_line", f=[[0, "1"]]))
    assert rep.body["verdict"]["exists"] == "No"
    assert rep.body["verdict"]["reason"] == "NilpotentSummand"
    assert rep.exit_code == 1


def test_q_pair_input():
    rep = run_job(job(surface="punctured_line", q2=[[4, "3/4*c2"]], q3=[[6, "1"]]))
    assert rep.body["classification"]["sheets"] == 2
    assert rep.body["classification"]["f"] == "(1)*z^2"
    assert rep.body["verdict"]["construction"] == "SpecialConstruction(2)"
    assert rep.body["verdict"]["exists"] == "Yes"


def test_orthogonalization_always_logged():
    rep = run_job(job(surface="affine_line", f=[[1, "1"], [0, "2"]]))
    log = {c["name"]: c for c in rep.body["log"]}
    solved = log["isotropy: C(v3,v3) = 0 [solved coefficient C(s3,s3)/(2C(s2,s3))]"]
    shown = log["isotropy: C(v3,v3) = 0 [displayed coefficient 2C(s3,s3)/C(s2,s3)]"]
    assert solved["status"] == "pass"
    assert shown["status"] == "fail (expected)" and shown["residual"] == "(-3)"


def test_verify_identities_and_samples():
    rep = run_job(
        job(
            surface="punctured_line",
            f=[[1, "1"], [0, "-1"]],
            options={"verify_identities": True, "region_samples": 5, "seed": 99},
        )
    )
    names = [c["name"] for c in rep.body["log"]]
    assert "global degree of omega = -2" in names
    assert sum(n.startswith("region sample") for n in names) == 5
    assert all(c["status"] != "fail" for c in rep.body["log"])


def test_determinism():
    spec = {"surface": "affine_line", "f": [[3, "c2"], [0, "i"]], "options": {"region_samples": 4, "seed": 2**63}}
    a = run_job(JobSpec.from_dict(spec)).dumps()
    b = run_job(JobSpec.from_dict(json.loads(json.dumps(spec)))).dumps()
    assert a == b


@pytest.mark.parametrize(
    "doc",
    [
        {"surface": "sphere", "f": [[0, "1"]]},
        {"surface": "affine_line"},
        {"surface": "affine_line", "f": [[-1, "1"]]},
        {"surface": "affine_line", "f": [["1", "1"]]},
        {"surface": "affine_line", "f": [[1, 1]]},
        {"surface": "affine_line", "f": [[1, "1"]], "options": {"seed": -1}},
        {"surface": "affine_line", "f": [[1, "1"]], "options": {"seed": 2**64}},
        {"surface": "affine_line", "f": [[1, "1"]], "colour": "red"},
    ],
)
def test_malformed(doc):
    with pytest.raises(MalformedInput):
        JobSpec.from_dict(doc).higgs_input()


def test_parse_error_propagates():
    with pytest.raises(ParseError):
        run_job(job(surface="affine_line", f=[[1, "1 +"]]))


def test_batch_order_and_exit_code():
    jobs, is_array = load_jobs(
        json.dumps(
            [
                {"surface": "affine_line", "f": [[2, "1"]]},
                {"surface": "affine_line", "f": [[1, "2 *"]]},
                {"surface": "affine_line", "f": [[0, "1"]]},
            ]
        )
    )
    bodies, code = run_batch(jobs)
    assert is_array and code == 2
    assert bodies[0]["verdict"]["exists"] == "Yes"
    assert bodies[1]["error"]["kind"] == "ParseError"
    assert bodies[2]["verdict"]["exists"] == "No"


def test_field_too_small_is_input_error():
    # f = (1 + c2) z given through (q2, q3): the cube root is outside the search class
    from hitchin3.laurent import z
    from hitchin3.field import ALPHA
    from hitchin3.spectral import q2_q3_from_f

    q2, q3 = q2_q3_from_f(z.scale(1 + ALPHA))
    bodies, code = run_batch([job(surface="affine_line", q2=_terms(q2), q3=_terms(q3))])
    assert code == 2 and bodies[0]["error"]["kind"] == "FieldTooSmall"


def _terms(p):
    return [[k, text] for k, text in p.term_list()]


def test_identity_violation_exit_code(monkeypatch):
    from hitchin3.verification import VerificationLog

    def broken(f):
        log = VerificationLog()
        log.condition("deliberately broken", False)
        return type("O", (), {"log": log})()

    monkeypatch.setattr(report, "orthogonalize", broken)
    rep = run_job(job(surface="affine_line", f=[[2, "1"]]))
    assert rep.exit_code == 3


def test_cli_analyze(tmp_path, capsys):
    src = tmp_path / "jobs.json"
    src.write_text(json.dumps({"surface": "punctured_line", "f": [[-2, "3"]]}))
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert cli.main(["analyze", "--input", str(src), "--report", str(out1), "--seed", "5"]) == 0
    assert cli.main(["analyze", "--input", str(src), "--report", str(out2), "--seed", "5"]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    body = json.loads(out1.read_text())
    assert body["verdict"]["route"] == "Symmetry(SpecialConstruction(2))"
    assert body["provenance"]["seed"] == 5


def test_cli_stdout_and_overrides(tmp_path, capsys):
    src = tmp_path / "jobs.json"
    src.write_text(json.dumps([{"surface": "affine_line", "f": [[4, "1"]]}]))
    code = cli.main(["analyze", "--input", str(src), "--verify-identities", "--region-samples", "2"])
    body = json.loads(capsys.readouterr().out)
    assert code == 0 and isinstance(body, list)
    assert body[0]["provenance"]["input"]["options"]["verify_identities"] is True


def test_cli_input_errors(tmp_path, capsys):
    assert cli.main(["analyze", "--input", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["analyze", "--input", str(bad)]) == 2
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"surface": "affine_line", "f": [[2, "1"]]}))
    assert cli.main(["analyze", "--input", str(good), "--region-samples", "-1"]) == 2


def test_selfcheck(capsys):
    assert cli.main(["selfcheck"]) == 0
    assert "checks passed" in capsys.readouterr().out
