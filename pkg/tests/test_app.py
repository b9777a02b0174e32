import pytest
from click.testing import CliRunner

from app import cli
from tests.conftest import golden


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(cli, [str(a) for a in args])


class TestInfo:
    def test_ac4(self, runner, data_dir):
        result = run(runner, "info", data_dir / "ac4.poset")
        assert result.exit_code == 0
        assert result.output == golden("ac4_info.txt")

    def test_m_atoms(self, runner, data_dir):
        result = run(runner, "info", data_dir / "m_atoms3.poset")
        assert result.exit_code == 0
        assert "boolean: no (distributivity witness a,b,c)\n" in result.output

    def test_empty_file(self, runner, data_dir):
        result = run(runner, "info", data_dir / "empty.poset")
        assert result.exit_code == 2
        assert "line 1" in result.output

    def test_missing_file(self, runner, tmp_path):
        assert run(runner, "info", tmp_path / "nope.poset").exit_code == 2

    def test_invalid_utf8(self, runner, tmp_path):
        path = tmp_path / "bad.poset"
        path.write_bytes(b"poset v1\nelem \xff\xfe\n")
        result = run(runner, "info", path)
        assert result.exit_code == 2
        assert "line 2" in result.output
        assert "UTF-8" in result.output


class TestZdg:
    def test_ac4_dot(self, runner, data_dir):
        result = run(runner, "zdg", data_dir / "ac4.poset", "--dot")
        assert result.exit_code == 0
        assert result.output == golden("ac4.dot")

    def test_chain_dot_is_empty(self, runner, data_dir):
        result = run(runner, "zdg", data_dir / "chain3.poset", "--dot")
        assert result.output == "graph zdg {\n}\n"

    def test_triangle_edge_list(self, runner, data_dir):
        result = run(runner, "zdg", data_dir / "m_atoms3.poset")
        assert result.output == "vertices: 3\nedges: 3\na -- b\na -- c\nb -- c\n"

    def test_output_file(self, runner, data_dir, tmp_path):
        target = tmp_path / "ac4.dot"
        result = run(runner, "zdg", data_dir / "ac4.poset", "--dot", "-o", target)
        assert result.exit_code == 0
        assert target.read_text() == golden("ac4.dot")


class TestCheck:
    def test_ac4(self, runner, data_dir):
        result = run(runner, "check", data_dir / "ac4.poset")
        assert result.exit_code == 0
        assert result.output == golden("ac4_check.txt")

    def test_ac4_certificate(self, runner, data_dir):
        result = run(runner, "check", data_dir / "ac4.poset", "--certificate")
        assert result.exit_code == 0
        assert '"passed": true' in result.output

    def test_triangle(self, runner, data_dir):
        result = run(runner, "check", data_dir / "m_atoms3.poset")
        assert result.exit_code == 0
        assert result.output == (
            "well-covered: yes\n"
            "very-well-covered: no\n"
            "CM(MY): yes [reisner]\n"
            "CM(Reisner): yes\n"
        )

    def test_three_3_chains(self, runner, tmp_path):
        path = tmp_path / "p333.poset"
        assert run(runner, "gen", "chain_product", 3, 3, 3, "-o", path).exit_code == 0
        result = run(runner, "check", path)
        assert result.exit_code == 0
        assert "well-covered: no\n" in result.output
        assert "CM(MY): no [not-unmixed]\n" in result.output
        assert "CM(Reisner): no" in result.output

    def test_verbose_lists_every_link(self, runner, data_dir):
        result = run(runner, "--verbose", "check", data_dir / "m_atoms3.poset")
        assert result.exit_code == 0
        assert result.stdout == golden("m_atoms3_verbose_check.txt")

    def test_certificate_without_one(self, runner, data_dir):
        result = run(runner, "check", data_dir / "m_atoms3.poset", "--certificate")
        assert result.exit_code == 0
        assert "passed" not in result.output

    def test_homology_cap_is_reported(self, runner, data_dir):
        result = run(runner, "--max-homology-vertices", 4, "check", data_dir / "ac4.poset")
        assert result.exit_code == 0
        assert "CM(Reisner): skipped (8 vertices > cap 4)\n" in result.output

    def test_empty_graph(self, runner, data_dir):
        result = run(runner, "check", data_dir / "chain3.poset")
        assert result.exit_code == 2


class TestExport:
    def test_ac4_m2(self, runner, data_dir):
        result = run(runner, "export", data_dir / "ac4.poset")
        assert result.exit_code == 0
        assert result.output == golden("ac4_m2.txt")

    def test_boolean3_has_six_generators(self, runner, tmp_path):
        path = tmp_path / "b3.poset"
        run(runner, "gen", "boolean_lattice", 3, "-o", path)
        result = run(runner, "export", path, "--dialect", "m2")
        assert result.output.splitlines()[-1].count("*") == 6

    def test_boolean2_singular(self, runner, tmp_path):
        path = tmp_path / "b2.poset"
        run(runner, "gen", "boolean_lattice", 2, "-o", path)
        result = run(runner, "export", path, "--dialect", "singular")
        assert result.output.splitlines()[-1] == "ideal I = v0*v1;"

    def test_empty_graph(self, runner, data_dir):
        result = run(runner, "export", data_dir / "chain3.poset")
        assert result.exit_code == 2
        assert "no vertices" in result.output

    def test_unknown_dialect(self, runner, data_dir):
        assert run(runner, "export", data_dir / "ac4.poset", "--dialect", "maple").exit_code == 2


class TestSweep:
    def test_golden(self, runner, data_dir):
        result = run(runner, "sweep", data_dir / "sizes.txt")
        assert result.exit_code == 0
        assert result.output == golden("sweep.tsv")

    def test_workers_do_not_change_output(self, runner, data_dir):
        result = run(runner, "--workers", 2, "sweep", data_dir / "sizes.txt")
        assert result.exit_code == 0
        assert result.output == golden("sweep.tsv")

    def test_malformed_line(self, runner, tmp_path):
        path = tmp_path / "sizes.txt"
        path.write_text("2,2,2\n2,x\n")
        result = run(runner, "sweep", path)
        assert result.exit_code == 2
        assert "line 2" in result.output

    def test_invalid_utf8(self, runner, tmp_path):
        path = tmp_path / "sizes.txt"
        path.write_bytes(b"2,2,\xff")
        result = run(runner, "sweep", path)
        assert result.exit_code == 2
        assert "line 1" in result.output

    def test_single_size(self, runner, tmp_path):
        path = tmp_path / "sizes.txt"
        path.write_text("2\n")
        assert run(runner, "sweep", path).exit_code == 2


class TestGen:
    def test_unwritable_output(self, runner, tmp_path):
        result = run(runner, "gen", "chain", 3, "-o", tmp_path / "missing" / "chain.poset")
        assert result.exit_code == 2
        assert "cannot write" in result.output

    def test_chain(self, runner):
        result = run(runner, "gen", "chain", 3)
        assert result.exit_code == 0
        assert result.output == "poset v1\n# chain 3\nelem 0\nelem c1\nelem 1\nle 0 c1\nle c1 1\n"

    def test_ac4_round_trip(self, runner, tmp_path):
        path = tmp_path / "f1.poset"
        run(runner, "gen", "atom_coatom", 4, "-o", path)
        assert run(runner, "zdg", path, "--dot").output == golden("ac4.dot")

    def test_unknown_entry(self, runner):
        assert run(runner, "gen", "nope", 3).exit_code == 2

    def test_bad_param(self, runner):
        assert run(runner, "gen", "chain", 0).exit_code == 2


def test_invalid_cap(runner, data_dir):
    assert run(runner, "--max-vertices", 0, "info", data_dir / "ac4.poset").exit_code == 2
