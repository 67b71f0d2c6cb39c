"""Problem-file parsing, validation diagnostics, and the CLI contract."""

import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout

import pytest

from tqdha.cli import run_command
from tqdha.problems import ProblemValidationError, load_problem, parse_problem_file

PROBLEMS = os.path.join(os.path.dirname(__file__), os.pardir, "problems")


def problem_path(name):
    return os.path.join(PROBLEMS, name)


def run(argv):
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run_command(argv)
    return code, out.getvalue(), err.getvalue()


def test_load_weyl_problem():
    prob = parse_problem_file(problem_path("weyl2.json"))
    assert prob.n == 2 and prob.group.size == 1


def test_load_s5_problem_materializes_group():
    prob = parse_problem_file(problem_path("s5_twisted.json"))
    assert prob.group.size == 120
    assert prob.alpha.name == "spin(5)"


def test_validation_failure_names_location():
    data = {
        "n": 2,
        "q": "all:1",
        "group": {"cyclic_product": [2]},
        "action": {"diagonal": [["1/1", "1/1"], ["-1/1", "2/1"]]},
        "cocycle": "trivial",
    }
    with pytest.raises(ProblemValidationError) as exc:
        load_problem(data)
    assert exc.value.location == "action"


def test_bad_cocycle_rejected_with_triple():
    data = {
        "n": 1,
        "q": "all:1",
        "group": {"cyclic_product": [3]},
        "action": {"diagonal": [["1/1"], ["1/1"], ["1/1"]]},
        "cocycle": {"table": [["1/1"] * 3, ["1/1"] * 3, ["1/1", "2/1", "1/1"]]},
    }
    with pytest.raises(ProblemValidationError) as exc:
        load_problem(data)
    assert "cocycle" in str(exc.value)


def test_bad_scalar_string_located():
    data = {"n": 2, "q": [["1/1", "oops"], ["1/1", "1/1"]], "group": "trivial",
            "action": {"diagonal": [["1/1", "1/1"]]}, "cocycle": "trivial"}
    with pytest.raises(ProblemValidationError) as exc:
        load_problem(data)
    assert "q[0][1]" in str(exc.value)


def test_spin_requires_matching_group():
    data = {
        "n": 4,
        "q": "all:-1",
        "group": {"cyclic_product": [2, 2]},
        "action": {"diagonal": [["1/1"] * 4] * 4},
        "cocycle": "spin(4)",
    }
    with pytest.raises(ProblemValidationError) as exc:
        load_problem(data)
    assert exc.value.location == "cocycle"


def test_cli_unknown_subcommand_exits_2():
    code, _, _ = run(["frobnicate"])
    assert code == 2


def test_cli_validation_failure_exits_3(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 0}))
    code, out, _ = run(["parameter-space", str(bad)])
    assert code == 3
    assert json.loads(out)["error"] == "validation"


def test_cli_parameter_space_weyl():
    code, out, _ = run(["parameter-space", problem_path("weyl2.json")])
    assert code == 0
    rep = json.loads(out)
    assert rep["dimension"] == 1
    assert rep["basis"][0][0] == {"coefficients": {"0": "1/1"}, "i": 1, "j": 2}


def test_cli_method_both_cross_checks():
    code, out, _ = run(
        ["parameter-space", problem_path("klein_bicharacter_diag.json"), "--method", "both"]
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["spans_agree"] is True and rep["dimension"] == 1


def test_cli_reports_deterministic():
    args = ["parameter-space", problem_path("z2_negation.json"), "--method", "both"]
    _, out1, _ = run(args)
    _, out2, _ = run(args)
    assert out1 == out2


def test_cli_emitted_kappa_feeds_back_into_pbw_check(tmp_path):
    code, out, _ = run(["parameter-space", problem_path("s3_natural_qminus.json")])
    assert code == 0
    rep = json.loads(out)
    assert rep["dimension"] >= 1
    for records in rep["basis"]:
        kfile = tmp_path / "kappa.json"
        kfile.write_text(json.dumps({"kappa": records}))
        code2, out2, _ = run(
            ["pbw-check", problem_path("s3_natural_qminus.json"), "--kappa", str(kfile), "--oracle"]
        )
        assert code2 == 0
        rep2 = json.loads(out2)
        assert rep2["passed"] and rep2["ambiguities_resolvable"]


def test_generator_matrix_action_in_problem_file(tmp_path):
    # S3 acting through sign characters of its generators: matrices on the
    # two generators extend over the whole group
    prob = {
        "n": 2,
        "q": "all:1",
        "group": {"permutation_generators": [[2, 1, 3], [2, 3, 1]], "degree": 3},
        "action": {"generator_matrices": [
            [["-1/1", "0/1"], ["0/1", "-1/1"]],   # the transposition acts by -1
            [["1/1", "0/1"], ["0/1", "1/1"]],     # the 3-cycle acts trivially
        ]},
        "cocycle": "trivial",
    }
    f = tmp_path / "sign_action.json"
    f.write_text(json.dumps(prob))
    spec = parse_problem_file(str(f))
    assert spec.action.is_diagonal()
    code, out, _ = run(["parameter-space", str(f), "--method", "both"])
    assert code == 0
    rep = json.loads(out)
    assert rep["spans_agree"]


def test_cli_check_extension():
    code, out, _ = run(["check-extension", problem_path("s4_twisted.json")])
    assert code == 0
    rep = json.loads(out)
    assert rep["symmetric"] and rep["exterior"]


def test_cli_constant_cocycles():
    code, out, _ = run(["constant-cocycles", problem_path("z2_negation.json")])
    assert code == 0
    rep = json.loads(out)
    assert rep["dimension"] == 2


def test_cli_classify_diagonal_crosscheck():
    code, out, _ = run(
        ["classify-diagonal", problem_path("klein_bicharacter_diag.json"), "--crosscheck"]
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["dimension"] == 1 and rep["spans_agree"]


def test_cli_classify_diagonal_rejects_permutation_action():
    code, out, _ = run(["classify-diagonal", problem_path("s3_natural_qminus.json")])
    assert code == 3


def test_cli_alpha_table():
    code, out, _ = run(["alpha-table", "--n", "4"])
    assert code == 0
    rep = json.loads(out)
    assert rep["n"] == 4
    assert len(rep["permutations"]) == 24
    assert rep["permutations"][0] == [1, 2, 3, 4]
    assert all(v in ("1/1", "-1/1") for row in rep["values"] for v in row)
    assert all(v == "1/1" for v in rep["values"][0])


def test_cli_verify_cover_n4():
    code, out, _ = run(["verify-cover", "--n", "4"])
    assert code == 0
    rep = json.loads(out)
    assert rep["all_passed"]


def test_cli_classify_symmetric_n4():
    code, out, _ = run(["classify-symmetric", "--n", "4", "--twisted"])
    assert code == 0
    rep = json.loads(out)
    assert rep["dimension"] == 3
    assert rep["matches_expected"] is None
    assert rep["eta_counts"] == {"1": 6, "2": 6, "3": 12, "4": 3, "5": 8}
