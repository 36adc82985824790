import io
import json

import pytest

from hyperchrome import cli
from hyperchrome import constructions as cons
from hyperchrome.fileio import parse_hypergraph, serialize_hypergraph


class TestHypergraphFile:
    def test_roundtrip_fixed_point(self):
        G = cons.loose_cycle(3)
        text = serialize_hypergraph(G)
        assert serialize_hypergraph(parse_hypergraph(text)) == text

    def test_one_based(self):
        text = "p h 3 6 3\ne 1 2 3\ne 3 4 5\ne 5 6 1\n"
        G = parse_hypergraph(text)
        assert G.edge_set() == cons.loose_cycle(3).edge_set()

    def test_comments_ignored(self):
        text = "c a remark\np h 3 3 1\nc another\ne 1 2 3\n"
        assert parse_hypergraph(text).edges == ((0, 1, 2),)

    def test_normalization(self):
        messy = "p h 3 4 2\ne 3 2 1\ne 1 2 3\n"
        G = parse_hypergraph(messy)
        assert serialize_hypergraph(G) == "p h 3 4 1\ne 1 2 3\n"

    def test_missing_header(self):
        with pytest.raises(ValueError):
            parse_hypergraph("e 1 2 3\n")

    def test_count_mismatch(self):
        with pytest.raises(ValueError):
            parse_hypergraph("p h 3 4 2\ne 1 2 3\n")

    def test_zero_based_rejected(self):
        with pytest.raises(ValueError):
            parse_hypergraph("p h 3 4 1\ne 0 1 2\n")

    def test_unknown_line(self):
        with pytest.raises(ValueError):
            parse_hypergraph("p h 3 3 1\nx 1 2 3\n")


def run_cli(argv, stdin_text="", monkeypatch=None, capsys=None):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


class TestCli:
    def test_gen_fano_chi(self, monkeypatch, capsys):
        code, out = run_cli(["gen", "fano"], monkeypatch=monkeypatch,
                            capsys=capsys)
        assert code == 0
        code, out = run_cli(["chi"], stdin_text=out, monkeypatch=monkeypatch,
                            capsys=capsys)
        assert code == 0
        report = json.loads(out)
        assert report["result"]["chi"] == 3
        assert report["certificate"]["type"] == "coloring"

    def test_gen_complete_greedy(self, monkeypatch, capsys):
        code, graph = run_cli(["gen", "complete", "--n", "7"],
                              monkeypatch=monkeypatch, capsys=capsys)
        code, out = run_cli(["color", "--algo", "greedy", "--order",
                             "identity"], stdin_text=graph,
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        report = json.loads(out)
        assert report["result"]["colors_used"] == 4

    def test_balance_loose_cycle(self, monkeypatch, capsys):
        _, graph = run_cli(["gen", "loose-cycle", "--l", "3"],
                           monkeypatch=monkeypatch, capsys=capsys)
        code, out = run_cli(["balance", "--quiet"], stdin_text=graph,
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and out.strip() == "2/3"

    def test_alpha(self, monkeypatch, capsys):
        _, graph = run_cli(["gen", "fano"], monkeypatch=monkeypatch,
                           capsys=capsys)
        code, out = run_cli(["alpha"], stdin_text=graph,
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert json.loads(out)["result"]["alpha"] == 4

    def test_kcolor_negative_exit(self, monkeypatch, capsys):
        _, graph = run_cli(["gen", "fano"], monkeypatch=monkeypatch,
                           capsys=capsys)
        code, out = run_cli(["kcolor", "--k", "2"], stdin_text=graph,
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 1
        assert json.loads(out)["result"] == {"colorable": False}

    def test_contains_and_free(self, tmp_path, monkeypatch, capsys):
        _, pattern = run_cli(["gen", "linear-pair"], monkeypatch=monkeypatch,
                             capsys=capsys)
        hpath = tmp_path / "h.hg"
        hpath.write_text(pattern)
        _, graph = run_cli(["gen", "fano"], monkeypatch=monkeypatch,
                           capsys=capsys)
        code, out = run_cli(["free", "--h", str(hpath)], stdin_text=graph,
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and json.loads(out)["result"]["free"] is True
        code, out = run_cli(["contains", "--h", str(hpath)], stdin_text=graph,
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 1

    def test_chain(self, monkeypatch, capsys):
        _, graph = run_cli(["gen", "complete", "--n", "5"],
                           monkeypatch=monkeypatch, capsys=capsys)
        code, out = run_cli(["chain", "--order", "identity"],
                            stdin_text=graph, monkeypatch=monkeypatch,
                            capsys=capsys)
        assert code == 0
        report = json.loads(out)
        assert report["result"]["greedy_colors"] == 3
        assert report["result"]["chain_length"] == 2

    def test_ex_with_cache(self, tmp_path, monkeypatch, capsys):
        _, pattern = run_cli(["gen", "linear-pair"], monkeypatch=monkeypatch,
                             capsys=capsys)
        hpath = tmp_path / "h.hg"
        hpath.write_text(pattern)
        cpath = tmp_path / "cache.txt"
        code, out = run_cli(["ex", "--h", str(hpath), "--n", "6",
                             "--cache", str(cpath)],
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert json.loads(out)["result"]["ex"] == 4
        assert cpath.exists()
        # second run hits the cache
        code, out = run_cli(["ex", "--h", str(hpath), "--n", "6",
                             "--cache", str(cpath)],
                            monkeypatch=monkeypatch, capsys=capsys)
        assert json.loads(out)["result"]["ex"] == 4

    def test_cache_env_var(self, tmp_path, monkeypatch, capsys):
        _, pattern = run_cli(["gen", "linear-pair"], monkeypatch=monkeypatch,
                             capsys=capsys)
        hpath = tmp_path / "h.hg"
        hpath.write_text(pattern)
        cpath = tmp_path / "env-cache.txt"
        monkeypatch.setenv("HYPERCHROME_CACHE", str(cpath))
        code, _ = run_cli(["ex", "--h", str(hpath), "--n", "4"],
                          monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and cpath.exists()

    def test_ramsey(self, tmp_path, monkeypatch, capsys):
        _, pattern = run_cli(["gen", "linear-pair"], monkeypatch=monkeypatch,
                             capsys=capsys)
        hpath = tmp_path / "h.hg"
        hpath.write_text(pattern)
        code, out = run_cli(["ramsey", "--h", str(hpath), "--t", "3"],
                            monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert json.loads(out)["result"]["ramsey"] == 4

    def test_witness(self, tmp_path, monkeypatch, capsys):
        _, pattern = run_cli(["gen", "linear-pair"], monkeypatch=monkeypatch,
                             capsys=capsys)
        hpath = tmp_path / "h.hg"
        hpath.write_text(pattern)
        _, graph = run_cli(["gen", "fano"], monkeypatch=monkeypatch,
                           capsys=capsys)
        code, out = run_cli(["witness", "--h", str(hpath), "--r", "2"],
                            stdin_text=graph, monkeypatch=monkeypatch,
                            capsys=capsys)
        assert code == 0
        assert json.loads(out)["result"]["implied_bound"] == 7

    def test_embed_order(self, tmp_path, monkeypatch, capsys):
        _, pattern = run_cli(["gen", "linear-pair"], monkeypatch=monkeypatch,
                             capsys=capsys)
        hpath = tmp_path / "h.hg"
        hpath.write_text(pattern)
        _, graph = run_cli(["gen", "complete", "--n", "6"],
                           monkeypatch=monkeypatch, capsys=capsys)
        code, out = run_cli(["embed-order", "--h", str(hpath)],
                            stdin_text=graph, monkeypatch=monkeypatch,
                            capsys=capsys)
        assert code == 0
        assert json.loads(out)["result"]["embedding"] is True

    def test_hyperforest_exit_codes(self, monkeypatch, capsys):
        _, path_graph = run_cli(["gen", "loose-path", "--l", "2"],
                                monkeypatch=monkeypatch, capsys=capsys)
        code, _ = run_cli(["hyperforest"], stdin_text=path_graph,
                          monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        _, cyc = run_cli(["gen", "loose-cycle", "--l", "3"],
                         monkeypatch=monkeypatch, capsys=capsys)
        code, _ = run_cli(["hyperforest"], stdin_text=cyc,
                          monkeypatch=monkeypatch, capsys=capsys)
        assert code == 1

    def test_color_lll_seeded_deterministic(self, monkeypatch, capsys):
        _, graph = run_cli(["gen", "random", "--n", "12", "--m", "4",
                            "--seed", "3"], monkeypatch=monkeypatch,
                           capsys=capsys)
        reports = []
        for _ in range(2):
            code, out = run_cli(["color", "--algo", "lll", "--r", "5",
                                 "--seed", "7"], stdin_text=graph,
                                monkeypatch=monkeypatch, capsys=capsys)
            assert code == 0
            rep = json.loads(out)
            rep.pop("wall_ms")
            reports.append(rep)
        assert reports[0] == reports[1]

    def test_seed_env_fallback_and_flag_wins(self, monkeypatch, capsys):
        _, graph = run_cli(["gen", "random", "--n", "12", "--m", "4",
                            "--seed", "3"], monkeypatch=monkeypatch,
                           capsys=capsys)
        monkeypatch.setenv("HYPERCHROME_SEED", "7")
        _, out_env = run_cli(["color", "--algo", "lll", "--r", "5"],
                             stdin_text=graph, monkeypatch=monkeypatch,
                             capsys=capsys)
        _, out_flag = run_cli(["color", "--algo", "lll", "--r", "5",
                               "--seed", "7"], stdin_text=graph,
                              monkeypatch=monkeypatch, capsys=capsys)
        a, b = json.loads(out_env), json.loads(out_flag)
        a.pop("wall_ms"), b.pop("wall_ms")
        assert a == b

    def test_dyadic_failure_exit(self, monkeypatch, capsys):
        _, graph = run_cli(["gen", "complete", "--n", "5"],
                           monkeypatch=monkeypatch, capsys=capsys)
        code, out = run_cli(["color", "--algo", "dyadic", "--r", "2"],
                            stdin_text=graph, monkeypatch=monkeypatch,
                            capsys=capsys)
        assert code == 1
        assert json.loads(out)["result"]["failure"] == "palette-exhausted"

    def test_malformed_file_exit2(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", io.StringIO("not a graph"))
        assert cli.main(["chi"]) == 2

    def test_gen_bad_params_exit(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", io.StringIO(""))
        assert cli.main(["gen", "complete", "--n", "1"]) == 1
