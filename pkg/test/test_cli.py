"""
End-to-end tests for the command-line tool, driven through main().
"""
import json

import pytest

from semicovers.cli import main
from semicovers.covers.tree import cover_tree_from_json
from semicovers.hilbert import HilbertBasis
from semicovers.schema import dumps


def _write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def star_file(tmp_path, sstar):
    return _write(tmp_path / "sstar.json", sstar.canonical())


@pytest.fixture
def cone_file(tmp_path):
    return _write(tmp_path / "cone.json", {"rays": [[4, 1], [9, 5]]})


@pytest.fixture
def modular_file(tmp_path):
    return _write(tmp_path / "modular.json", {"A": [[3]], "G": [[1]], "b": [7]})


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestSemigroupCommands:
    """Basic invariants of the running example."""

    def test_frobenius(self, capsys, star_file):
        assert run_json(capsys, "frobenius", "--semigroup", star_file) == {"frobenius": [3, 1]}

    def test_genus_and_pf(self, capsys, star_file):
        assert run_json(capsys, "genus", "--semigroup", star_file) == {"genus": 2}
        assert run_json(capsys, "pf", "--semigroup", star_file) == {"pseudo_frobenius": [[2, 1], [3, 1]]}

    def test_generators_in_order(self, capsys, star_file):
        out = run_json(capsys, "generators", "--semigroup", star_file)
        assert out["generators"] == [[4, 1], [4, 2], [5, 2], [6, 2], [7, 2], [6, 3], [7, 3], [9, 5], [11, 6]]

    def test_apery(self, capsys, star_file):
        out = run_json(capsys, "apery", "--semigroup", star_file, "--m", "4,1")
        assert out["apery"] == [[6, 2], [7, 2]]

    def test_member_verified(self, capsys, star_file):
        assert run_json(capsys, "member", "--semigroup", star_file, "--point", "13,7", "--verify")["member"]
        assert not run_json(capsys, "member", "--semigroup", star_file, "--point", "3,1", "--verify")["member"]

    def test_validate(self, capsys, star_file):
        assert run_json(capsys, "validate", "--semigroup", star_file)["valid"]

    def test_quotient_by_one(self, capsys, star_file, sstar):
        _, out, _ = run(capsys, "quotient", "--semigroup", star_file, "--d", "1")
        assert out == dumps(sstar.canonical()) + "\n"

    def test_quotient_routes_agree(self, capsys, tmp_path, numerical):
        path = _write(tmp_path / "s35.json", numerical([1, 2, 4, 7]).canonical())
        out = run_json(capsys, "quotient", "--semigroup", path, "--d", "2", "--via", "algorithm1", "--verify")
        assert out["gaps"] == [[1], [2]]


class TestCoverCommands:
    """ddset and tree output."""

    def test_ddset_count(self, capsys, star_file):
        code, out, _ = run(capsys, "ddset", "--semigroup", star_file, "--d", "3", "--f", "9,3", "--count-only")
        assert (code, out) == (0, "152\n")

    def test_tree_dot_file(self, capsys, tmp_path, cone_file):
        target = tmp_path / "tree.dot"
        out = run_json(capsys, "tree", "--cone", cone_file, "--d", "2", "--f", "4,2", "--dot", str(target))
        assert out == {"vertices": 12, "edges": 11, "output": str(target)}
        text = target.read_text()
        assert text.startswith("digraph covers {")
        assert '"S1" -> "S11";' in text

    def test_tree_json_stdout(self, capsys, cone_file):
        _, out, _ = run(capsys, "tree", "--cone", cone_file, "--d", "2", "--f", "4,2", "--json", "-")
        tree = cover_tree_from_json(out)
        assert tree.path_to_root(11) == [11, 1, 0]

    def test_arf_tree_needs_window(self, capsys, tmp_path):
        cone = _write(tmp_path / "line.json", {"rays": [[1]]})
        code, _, err = run(capsys, "tree", "--cone", cone, "--d", "2", "--f", "3", "--variety", "arf")
        assert code == 2
        assert json.loads(err.strip().splitlines()[-1])["error_code"] == "schema_violation"


class TestIrreducibleCommands:
    """Constructions round-trip through generator documents."""

    def test_double_then_generators(self, capsys, tmp_path, star_file):
        target = tmp_path / "double.json"
        target.write_text(json.dumps(run_json(capsys, "double", "--semigroup", star_file, "--f", "13,5")))
        out = run_json(capsys, "generators", "--semigroup", str(target))
        assert len(out["generators"]) == 22
        assert [13, 7] in out["generators"] and [6, 3] in out["generators"]

    def test_classify_symmetric(self, capsys, tmp_path, numerical):
        path = _write(tmp_path / "s35.json", numerical([1, 2, 4, 7]).canonical())
        assert run_json(capsys, "classify", "--semigroup", path)["classification"] == "symmetric"

    def test_cover(self, capsys, tmp_path, numerical):
        path = _write(tmp_path / "s35.json", numerical([1, 2, 4, 7]).canonical())
        out = run_json(capsys, "cover", "--semigroup", path)
        assert out["gaps"] == [[1], [2], [3], [4], [5], [7], [8], [14]]


class TestVarietyCommands:
    """Modular systems, checks, convex bodies and Hilbert bases."""

    def test_pm_member(self, capsys, modular_file):
        assert run_json(capsys, "pm", "--system", modular_file, "--member", "3")["member"]
        assert not run_json(capsys, "pm", "--system", modular_file, "--member", "4")["member"]

    def test_pm_quotient(self, capsys, modular_file):
        out = run_json(capsys, "pm", "--system", modular_file, "--quotient", "2")
        assert out["A"] == [[6]]

    def test_arf_of_system(self, capsys, modular_file):
        out = run_json(capsys, "arf", "--system", modular_file, "--window", "15")
        assert out == {"counterexample": None, "holds_in_window": True}

    def test_arf_counterexample(self, capsys, tmp_path, numerical):
        path = _write(tmp_path / "s35.json", numerical([1, 2, 4, 7]).canonical())
        out = run_json(capsys, "arf", "--semigroup", path, "--window", "15")
        assert out["counterexample"]["result"] == [7]

    def test_convex(self, capsys, tmp_path):
        path = _write(tmp_path / "interval.json", {"vertices": [["3/2"], [2]]})
        assert not run_json(capsys, "convex", "--polytope", path, "--member", "1")["member"]
        out = run_json(capsys, "convex", "--polytope", path, "--quotient-d", "2", "--window", "12")
        assert out == {"equal_in_window": True, "mismatch": None}

    def test_hilbert_verified(self, capsys, tmp_path):
        path = _write(tmp_path / "system.json", {"matrix": [[1, -1]]})
        assert run_json(capsys, "hilbert", "--system", path, "--verify") == {"solutions": [[1, 1]]}

    def test_hilbert_verification_failure(self, capsys, tmp_path, mocker):
        """Test that a basis missing (1,1,1) is caught inside the box spanned by the extremal rays"""
        mocker.patch("semicovers.cli.hilbert_basis", return_value=HilbertBasis(solutions=((0, 2, 1), (2, 0, 1))))
        path = _write(tmp_path / "system.json", {"matrix": [[1, 1, -2]]})
        code, out, err = run(capsys, "hilbert", "--system", path, "--verify")
        assert (code, out) == (3, "")
        assert json.loads(err.strip().splitlines()[-1])["details"] == {"box": [2, 2, 2]}


class TestExitCodes:
    """Errors become a JSON payload on stderr and a family exit code."""

    @staticmethod
    def _payload(err):
        return json.loads(err.strip().splitlines()[-1])

    def test_invalid_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{oops")
        code, out, err = run(capsys, "gaps", "--semigroup", str(path))
        assert (code, out) == (2, "")
        assert self._payload(err)["error"] == "SchemaError"

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_bound_below_scaled_frobenius(self, capsys, star_file):
        code, _, err = run(capsys, "ddset", "--semigroup", star_file, "--d", "3", "--f", "8,3")
        assert code == 3
        assert self._payload(err)["error_code"] == "precondition_failed"

    def test_coordinate_overflow(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("SEMICOVERS_COORD_LIMIT", "5")
        path = _write(tmp_path / "s.json", {"cone": {"rays": [[1, 0], [0, 1]]}, "gaps": []})
        code, _, err = run(capsys, "member", "--semigroup", path, "--point", "9,3")
        assert code == 4
        assert self._payload(err)["error_code"] == "coordinate_overflow"

    def test_degree_guard(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("SEMICOVERS_DEGREE_CEILING", "20")
        path = _write(tmp_path / "g.json", {"generators": [[2, 0], [0, 2]]})
        code, _, err = run(capsys, "gaps", "--semigroup", path)
        assert code == 5
        assert self._payload(err)["error_code"] == "guard_ceiling"
