"""The cyclotome command line: parsing, output shape, determinism, exit codes.

Core claims:
    - describe/enumerate/lift/forms/verify/serre-dims run and exit 0 on good input
    - JSON output carries the schema version and passes
    - identical invocations produce byte-identical output
    - the documented literal grammar (numeric and named tokens) round-trips
"""

import json

import pytest

from cyclotome.cli import main, parse_pair, parse_sparse
from cyclotome import build_index, orient, iota


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# == 1. subcommands ==================================================================

class TestSubcommands:
    def test_describe_a1(self, capsys):
        code, out = run(capsys, "describe", "--type", "A1")
        assert code == 0
        assert "h = 2" in out
        assert "|sigma-I-hat| = 2" in out
        for name in ("E1", "K1", "K'1", "F1"):
            assert name in out

    def test_describe_json(self, capsys):
        code, out = run(capsys, "describe", "--type", "A2", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["schema"] == 1
        assert payload["coxeter_number"] == 3
        assert payload["sigma_i_hat_size"] == 6

    def test_ar_quiver_dot(self, capsys):
        code, out = run(capsys, "ar-quiver", "--type", "A3", "--dot")
        assert code == 0
        assert out.startswith("digraph")
        assert "style=dashed" in out

    def test_rep_space_dot(self, capsys):
        code, out = run(capsys, "rep-space", "--type", "A2")
        assert code == 0
        assert out.startswith("digraph")
        assert "alpha1" in out and "beta1" in out

    def test_enumerate(self, capsys):
        code, out = run(
            capsys, "enumerate", "--type", "A2", "--w", "sigma(S1)=1,sigma(S2)=1",
            "--verify", "--json",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["count"] == 2

    def test_lift_example(self, capsys):
        code, out = run(capsys, "lift", "--type", "A2", "--wtilde", "sigma(P2)=1")
        assert code == 0
        assert out.strip() == "(e[S1], e[sigma(S1)] + e[sigma(S2)])"

    def test_forms(self, capsys):
        code, out = run(
            capsys,
            "forms",
            "--type",
            "A2",
            "--pair", "v=0;w=sigma(S1)=1",
            "--pair", "v=S1=1,P2=1;w=sigma(S1)=1,sigma(SigmaS1)=1",
            "--json",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["d(m2,m1)"] == "1"

    def test_verify_all_exit_zero(self, capsys):
        code, out = run(capsys, "verify", "all", "--type", "A2")
        assert code == 0
        assert "overall: pass" in out

    def test_verify_json(self, capsys):
        code, out = run(capsys, "verify", "ek", "--type", "A2", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["pass"] is True
        assert payload["schema"] == 1
        assert len(payload["reports"]) == 4

    @pytest.mark.parametrize(
        "relation", ["ef", "kk", "same-form", "same-n", "exponent-table"]
    )
    def test_verify_each_relation_path(self, relation, capsys):
        code, out = run(capsys, "verify", relation, "--type", "A2")
        assert code == 0
        assert "overall: pass" in out

    def test_verify_markdown(self, capsys):
        code, out = run(capsys, "verify", "serre", "--type", "A2", "--markdown")
        assert code == 0
        assert out.startswith("# relation suite")
        assert "| serre |" in out

    def test_serre_dims(self, capsys):
        code, out = run(capsys, "serre-dims", "--type", "A2", "--maxdeg", "3")
        assert code == 0
        assert "overall: pass" in out

    def test_file_orientation(self, tmp_path, capsys):
        spec = tmp_path / "quiver.txt"
        spec.write_text("vertices: 3\narrow: 3 2\narrow: 2 1\n")
        code, out = run(
            capsys, "describe", "--orientation", f"file:{spec}", "--json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["type"] == "A3"

    def test_usage_error_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "bogus", "--type", "A2"])
        assert exc.value.code == 2

    def test_bad_literal_exits_two(self, capsys):
        assert main(["enumerate", "--type", "A2", "--w", "Q9=1"]) == 2
        assert "error" in capsys.readouterr().err

    def test_weight_outside_cone_exits_two(self, capsys):
        # sigma(P2) is not a W^S + W^SigmaS vertex
        assert main(["enumerate", "--type", "A2", "--w", "sigma(P2)=1"]) == 2
        capsys.readouterr()

    def test_missing_quiver_file_exits_two(self, capsys):
        assert main(["describe", "--orientation", "file:/nonexistent.txt"]) == 2
        capsys.readouterr()


# == 2. determinism ====================================================================

def test_byte_identical_output(capsys):
    _, first = run(capsys, "verify", "all", "--type", "A2", "--json")
    _, second = run(capsys, "verify", "all", "--type", "A2", "--json")
    assert first == second


# == 3. literals =======================================================================

class TestLiterals:
    def test_numeric_and_named_agree(self):
        idx = build_index(orient("A2", "linear"))
        named = parse_sparse(idx, "sigma(S1)=2,sigma(SigmaS2)=1")
        numeric = parse_sparse(idx, "1:0=2,2:5=1")
        assert named == numeric

    def test_pair_literal(self):
        idx = build_index(orient("A2", "linear"))
        pair = parse_pair(idx, "v=S1=1;w=sigma(S1)=1,sigma(S2)=1")
        assert pair == iota(idx, idx.ar.projective[2])

    def test_empty_vector(self):
        idx = build_index(orient("A2", "linear"))
        assert parse_sparse(idx, "0") == {}
