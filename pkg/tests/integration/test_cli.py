"""Integration tests for the starjoin command line."""

import json

import pytest

from starjoin.main import (
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_PREMISE_FAILS,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    build_parser,
    main,
)


@pytest.fixture
def nk4_file(tmp_path):
    path = tmp_path / "nk4.complex"
    assert main(["ncomplex", "K4", "--out", str(path)]) == EXIT_OK
    return path


class TestGraphCommands:
    """Test cases for construction and coloring commands."""

    def test_construct_writes_dimacs(self, capsys) -> None:
        """Test that construct prints DIMACS and a summary on stderr."""
        assert main(["construct", "--n", "2", "--c", "3", "--r", "1"]) == EXIT_OK
        captured = capsys.readouterr()
        assert captured.out.startswith("p edge 24 ")
        assert "c vertices=24" in captured.err

    def test_construct_to_file(self, tmp_path) -> None:
        """Test that construct writes the file and its label sidecar."""
        out = tmp_path / "g2.dimacs"
        assert main(["construct", "--n", "2", "--c", "3", "--r", "1", "--out", str(out)]) == EXIT_OK
        assert out.read_text().startswith("p edge 24 ")
        assert (tmp_path / "g2.dimacs.labels").exists()

    def test_star_join_direct_equals_quotient(self, capsys) -> None:
        """Test that both star-join constructions print the same graph."""
        assert main(["star-join", "--g1", "K3", "--g2", "K3", "--s", "2"]) == EXIT_OK
        quotient = capsys.readouterr().out
        assert main(["star-join", "--g1", "K3", "--g2", "K3", "--s", "2", "--direct"]) == EXIT_OK
        assert capsys.readouterr().out == quotient

    def test_chi(self, capsys) -> None:
        """Test the exact chromatic number of K4."""
        assert main(["chi", "K4"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "status: exact" in out
        assert "bounds: 4 <= chi <= 4" in out

    def test_chi_budget_exhaustion(self, capsys) -> None:
        """Test that an exhausted budget exits as unknown."""
        assert main(["chi", "C7", "--max-nodes", "1"]) == EXIT_UNKNOWN
        assert "status: exhausted" in capsys.readouterr().out

    def test_lchi(self, capsys) -> None:
        """Test the local chromatic number of C7."""
        assert main(["lchi", "C7", "--r", "1"]) == EXIT_OK
        assert "bounds: 2 <= lchi_1 <= 2" in capsys.readouterr().out

    @pytest.mark.parametrize(("k", "code", "answer"), [(3, EXIT_NEGATIVE, "no"), (4, EXIT_OK, "yes")])
    def test_kcolor(self, capsys, k: int, code: int, answer: str) -> None:
        """Test the exit code and answer of kcolor on K4."""
        assert main(["kcolor", "K4", "--k", str(k)]) == code
        assert capsys.readouterr().out.startswith(f"{k}-colorable: {answer}")

    def test_kcolor_with_k_far_above_the_order(self, capsys) -> None:
        """Test that a huge k is answered without allocating k colors per vertex."""
        assert main(["kcolor", "K3", "--k", str(10**9)]) == EXIT_OK
        assert capsys.readouterr().out.startswith(f"{10**9}-colorable: yes")

    @pytest.mark.parametrize("text", ["p edge x 1\ne 1 2\n", "p edge 2 1\ne a b\n"])
    def test_non_integer_dimacs_is_usage_error(self, tmp_path, text: str) -> None:
        """Test that a DIMACS file with non-integer fields exits with a usage error."""
        path = tmp_path / "bad.dimacs"
        path.write_text(text)
        assert main(["chi", str(path)]) == EXIT_USAGE

    def test_kst_consistent(self, capsys) -> None:
        """Test a consistent KST check."""
        assert main(["kst", "K3", "--r", "6", "--n", "1", "--c", "3"]) == EXIT_OK
        assert "verdict: consistent" in capsys.readouterr().out

    def test_kst_premise_fails(self) -> None:
        """Test the dedicated exit code for a failed KST premise."""
        assert main(["kst", "C5", "--r", "2", "--n", "1", "--c", "3"]) == EXIT_PREMISE_FAILS


class TestComplexCommands:
    """Test cases for complex and homology commands."""

    def test_ncomplex(self, capsys) -> None:
        """Test the text of N(K3) on stdout."""
        assert main(["ncomplex", "K3"]) == EXIT_OK
        assert capsys.readouterr().out == "universe: 0 1 2\n0 1\n0 2\n1 2\n"

    def test_fvector(self, nk4_file, capsys) -> None:
        """Test the f-vector report of N(K4)."""
        assert main(["fvector", str(nk4_file)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "dim: 2" in out
        assert "f: 4 6 4" in out
        assert "euler: 2" in out

    def test_fvector_face_cap(self, nk4_file) -> None:
        """Test that a reached face cap exits as unknown."""
        assert main(["fvector", str(nk4_file), "--face-cap", "2"]) == EXIT_UNKNOWN

    def test_join_complex(self, tmp_path, capsys) -> None:
        """Test that N(K2) * N(K2) is a square."""
        nk2 = tmp_path / "nk2.complex"
        assert main(["ncomplex", "K2", "--out", str(nk2)]) == EXIT_OK
        square = tmp_path / "square.complex"
        assert main(["join-complex", str(nk2), str(nk2), "--out", str(square)]) == EXIT_OK
        capsys.readouterr()
        assert main(["fvector", str(square)]) == EXIT_OK
        assert "f: 4 4" in capsys.readouterr().out

    @pytest.mark.parametrize("field", ["gf2", "gfp:3", "rat"])
    def test_homology(self, nk4_file, capsys, field: str) -> None:
        """Test the sphere verdict for N(K4) over each field."""
        assert main(["homology", str(nk4_file), "--field", field]) == EXIT_OK
        assert "verdict: homology sphere S^2" in capsys.readouterr().out

    def test_sphere_check(self, nk4_file, capsys) -> None:
        """Test sphere evidence for the right and the wrong dimension."""
        assert main(["sphere-check", str(nk4_file), "--dim", "2", "--field", "gf2", "--field", "rat"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "homology evidence for S^2 over GF(2), Q: yes"
        assert main(["sphere-check", str(nk4_file), "--dim", "1"]) == EXIT_NEGATIVE

    def test_bad_field(self, nk4_file) -> None:
        """Test that an unknown field is a usage error."""
        assert main(["homology", str(nk4_file), "--field", "gf4"]) == EXIT_USAGE


class TestVerifyCommands:
    """Test cases for certificate-producing commands."""

    def test_eq1_prints_and_writes_certificate(self, tmp_path, capsys) -> None:
        """Test that a certificate is printed and written to --out."""
        out = tmp_path / "eq1.json"
        assert main(["verify", "eq1", "--n", "2", "--c", "3", "--r", "1", "--out", str(out)]) == EXIT_OK
        printed = json.loads(capsys.readouterr().out)
        assert printed["verdict"] == "pass"
        assert printed["claim_id"] == "eq1_count"
        assert json.loads(out.read_text())["params"] == printed["params"]

    def test_theorem2_deep(self, capsys) -> None:
        """Test that deep theorem2 runs all five checks."""
        assert main(["verify", "theorem2", "--n", "1", "--c", "3", "--r", "1", "--deep"]) == EXIT_OK
        assert len(json.loads(capsys.readouterr().out)["checks"]) == 5

    def test_theorem2_face_cap_is_unknown(self) -> None:
        """Test that a tiny face cap makes theorem2 unknown."""
        args = ["verify", "theorem2", "--n", "1", "--c", "4", "--r", "1", "--deep", "--face-cap", "3"]
        assert main(args) == EXIT_UNKNOWN

    def test_remark(self) -> None:
        """Test the s = 0 control from the command line."""
        assert main(["verify", "remark"]) == EXIT_OK

    def test_kst_certificate_passes_on_premise_failure(self) -> None:
        """Test that a failed KST premise still gives a passing certificate."""
        assert main(["verify", "kst", "--graph", "C5", "--r", "2", "--n", "1", "--c", "3"]) == EXIT_OK

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "locjoin", "--g1", "K2", "--g2", "K2", "--r", "0"],
            ["verify", "eq2", "--g1", "K2", "--g2", "K2", "--s", "1"],
            ["verify", "joinhom", "--g1", "K2", "--g2", "Q7", "--s", "2"],
            ["construct", "--n", "1", "--c", "2", "--r", "1"],
        ],
    )
    def test_invalid_input_is_usage_error(self, argv: list[str]) -> None:
        """Test that invalid parameters exit with a usage error."""
        assert main(argv) == EXIT_USAGE

    def test_suite(self, tmp_path, capsys) -> None:
        """Test a suite run printing one verdict per item."""
        config = tmp_path / "suite.toml"
        config.write_text('[[eq1]]\nn = 1\nc = 3\nr = 1\n\n[[eq2]]\ng1 = "K2"\ng2 = "K3"\ns = 3\n')
        out_dir = tmp_path / "out"
        assert main(["verify", "suite", str(config), "--out-dir", str(out_dir), "--workers", "1"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert [line.split() for line in lines] == [["eq1_count", "pass"], ["eq2_adjacency", "pass"]]
        assert (out_dir / "summary.txt").exists()

    def test_suite_with_unknown_item(self, tmp_path) -> None:
        """Test that an unknown item makes the suite exit as unknown."""
        config = tmp_path / "suite.toml"
        config.write_text('[[locjoin]]\ng1 = "missing-file"\ng2 = "K2"\nr = 1\n')
        assert main(["verify", "suite", str(config), "--out-dir", str(tmp_path / "out"), "--workers", "1"]) == EXIT_UNKNOWN


    def test_compare_certificates(self, tmp_path, capsys) -> None:
        """Test that reruns compare equal and different claims do not."""
        first, second, other = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"
        assert main(["verify", "eq1", "--n", "2", "--c", "3", "--r", "1", "--out", str(first)]) == EXIT_OK
        assert main(["verify", "eq1", "--n", "2", "--c", "3", "--r", "1", "--out", str(second)]) == EXIT_OK
        assert main(["verify", "eq1", "--n", "1", "--c", "3", "--r", "1", "--out", str(other)]) == EXIT_OK
        capsys.readouterr()
        assert main(["verify", "compare", str(first), str(second)]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1] == "same content"
        assert main(["verify", "compare", str(first), str(other)]) == EXIT_NEGATIVE
        assert capsys.readouterr().out.splitlines()[-1] == "content differs"

    def test_compare_rejects_non_certificates(self, tmp_path) -> None:
        """Test that unreadable or malformed certificate files are usage errors."""
        bogus = tmp_path / "bogus.json"
        bogus.write_text("{\"claim_id\": 3}")
        assert main(["verify", "compare", str(bogus), str(bogus)]) == EXIT_USAGE
        assert main(["verify", "compare", str(tmp_path / "absent.json"), str(bogus)]) == EXIT_USAGE


class TestParser:
    """Test cases for argument parsing."""

    def test_missing_command(self) -> None:
        """Test that a missing command exits with status 2."""
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_missing_required_option(self) -> None:
        """Test that a missing required option exits."""
        with pytest.raises(SystemExit):
            main(["kcolor", "K4"])

    def test_verify_needs_a_claim(self) -> None:
        """Test that verify without a claim exits."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify"])
