"""CLI surface: subcommands, formats, exit codes."""

import pytest

import netelast as ne
from netelast.cli import main
from netelast.graph import save_edge_list

from conftest import star_graph


@pytest.fixture
def star_file(tmp_path):
    p = tmp_path / "star10.edges"
    save_edge_list(star_graph(10), p)
    return p


class TestGenerate:
    def test_writes_edge_list_to_stdout(self, capsys):
        assert main(["generate", "--family", "mesh", "-n", "4"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("# nodes 4\n")
        assert ne.load_edge_list(out).number_of_edges == 6

    def test_seeded_output_is_stable(self, capsys):
        args = ["generate", "--family", "gilbert", "-n", "30", "-p", "0.2", "--seed", "5"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        assert capsys.readouterr().out == first

    def test_out_file(self, tmp_path):
        target = tmp_path / "g.edges"
        assert main(["generate", "--family", "mesh", "-n", "5", "--out", str(target)]) == 0
        assert ne.load_edge_list(target).number_of_edges == 10


class TestMetrics:
    def test_prints_header_and_row(self, star_file, capsys):
        assert main(["metrics", "--input", str(star_file), "--name", "star"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "name,nodes,links,density,diameter,asp,heterogeneity"
        cells = lines[1].split(",")
        assert cells[0] == "star"
        assert cells[1] == "10"
        assert cells[2] == "9"
        assert float(cells[3]) == pytest.approx(0.2)


class TestAttack:
    def test_degree_attack_prints_center_first(self, star_file, capsys):
        assert main(["attack", "--input", str(star_file), "--attack", "highest_degree"]) == 0
        order = [int(x) for x in capsys.readouterr().out.split()]
        assert order[0] == 0
        assert sorted(order) == list(range(10))

    def test_random_needs_seed(self, star_file, capsys):
        assert main(["attack", "--input", str(star_file), "--attack", "random"]) == 3


class TestElasticity:
    def test_curve_to_stdout(self, star_file, capsys):
        rc = main(["elasticity", "--input", str(star_file), "--attack", "highest_degree"])
        assert rc == 0
        out = capsys.readouterr().out
        assert out.startswith("fraction_removed,normalized_throughput\n0,1\n0.1,0\n")
        assert "# elasticity = 0.05" in out

    def test_curve_to_file(self, star_file, tmp_path):
        target = tmp_path / "curve.csv"
        rc = main(
            ["elasticity", "--input", str(star_file), "--attack", "random",
             "--seed", "3", "--stop-fraction", "0.5", "--out", str(target)]
        )
        assert rc == 0
        body = [l for l in target.read_text().splitlines() if not l.startswith("#")]
        assert len(body) == 1 + 6  # header + samples at k = 0..5


class TestBound:
    def test_discrete_value(self, capsys):
        assert main(["bound", "--n", "10", "--mode", "discrete", "--zeta", "10"]) == 0
        assert capsys.readouterr().out.strip() == "0.3166667"

    def test_continuous_limit(self, capsys):
        assert main(["bound", "--n", "1e9", "--mode", "continuous"]) == 0
        assert capsys.readouterr().out.strip() == "0.3333333"

    def test_partial_zeta(self, capsys):
        assert main(["bound", "--n", "20", "--mode", "discrete", "--zeta", "5"]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(
            ne.mesh_elasticity_discrete(20, 5), rel=1e-6
        )


class TestTradeoff:
    def test_benchmark_row(self, capsys):
        rc = main(
            ["tradeoff", "--a", "0.1623", "--b", "0.0095", "--c", "0.0048",
             "--n", "1000", "--m", "1049"]
        )
        assert rc == 0
        assert float(capsys.readouterr().out) == pytest.approx(0.1519, abs=5e-5)


class TestRun:
    def test_end_to_end(self, tmp_path, capsys):
        (tmp_path / "grid.ini").write_text(
            "[experiment]\noutput_dir = out\nglobal_seed = 1\n"
            "attacks = random, highest_degree, highest_betweenness\n"
            "[topology:m]\nfamily = mesh\nn = 8\n"
        )
        assert main(["run", "--config", str(tmp_path / "grid.ini")]) == 0
        assert (tmp_path / "out" / "ranking.csv").exists()


class TestExitCodes:
    def test_parse_error_is_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.edges"
        bad.write_text("0 0\n")
        assert main(["metrics", "--input", str(bad)]) == 2

    def test_parameter_error_is_3(self, capsys):
        assert main(["bound", "--n", "1", "--mode", "discrete"]) == 3

    def test_compute_error_is_4(self, tmp_path, capsys):
        big = tmp_path / "big.edges"
        save_edge_list(ne.gen_gilbert(40, 0.3, seed=1), big)
        rc = main(
            ["elasticity", "--input", str(big), "--attack", "random", "--seed", "1",
             "--model", "lp_optimization"]
        )
        assert rc == 4

    def test_io_error_is_5(self, capsys):
        assert main(["metrics", "--input", "no-such-file.edges"]) == 5

    def test_unknown_flag_is_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bound", "--n", "10", "--mode", "sideways"])
        assert exc.value.code == 2
