"""End-to-end runs of the command line front end, in process."""

import pytest

from matchforge import cli, game, graph, heuristics


def run_cli(args):
    return cli.main(args)


# ---------------------------------------------------------------------------
# gen


def test_gen_writes_parseable_file(tmp_path):
    out = tmp_path / "t.mg"
    assert run_cli(["gen", "trap", "--delta", "4", "--k", "3",
                    "-o", str(out)]) == 0
    text = out.read_text()
    assert text.splitlines()[0] == "# expect alg=14 opt=20"
    g = graph.loads(text)
    assert g.node_count == 41


def test_gen_to_stdout(capsys):
    assert run_cli(["gen", "mds", "--delta", "3"]) == 0
    captured = capsys.readouterr().out
    assert captured.startswith("# expect alg=3 opt=4\nmg 1 bip ")


def test_gen_is_deterministic(tmp_path):
    a, b = tmp_path / "a.mg", tmp_path / "b.mg"
    argv = ["gen", "random", "--left", "5", "--right", "5",
            "--delta", "3", "--seed", "1"]
    run_cli(argv + ["-o", str(a)])
    run_cli(argv + ["-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_gen_missing_param_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        run_cli(["gen", "trap", "--delta", "4"])
    assert err.value.code == 2
    assert "needs --k" in capsys.readouterr().err


def test_gen_bad_params_are_reported(capsys):
    with pytest.raises(SystemExit) as err:
        run_cli(["gen", "trap", "--delta", "3", "--k", "1"])
    assert err.value.code == 2
    assert "delta >= 4" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# run / exact / check-trace


@pytest.fixture()
def trap_file(tmp_path):
    out = tmp_path / "trap.mg"
    run_cli(["gen", "trap", "--delta", "4", "--k", "10", "-o", str(out)])
    return out


def test_run_reports_ratio(trap_file, capsys):
    assert run_cli(["run", "karpsipser", str(trap_file)]) == 0
    out = capsys.readouterr().out
    assert out == "alg=42 opt=62 ratio=21/31 delta=4 bound=2/3 holds=yes\n"


def test_run_assert_bound_passes_on_trap(trap_file):
    assert run_cli(["run", "karpsipser", str(trap_file),
                    "--assert-bound"]) == 0


def test_run_assert_bound_fails_on_chorded_square(tmp_path, capsys):
    out = tmp_path / "c4.mg"
    run_cli(["gen", "chordedc4", "-o", str(out)])
    assert run_cli(["run", "greedy", str(out)]) == 0
    assert "holds=no" in capsys.readouterr().out
    assert run_cli(["run", "greedy", str(out), "--assert-bound"]) == 1


def test_run_trace_then_check(trap_file, tmp_path, capsys):
    trace = tmp_path / "run.trace"
    run_cli(["run", "karpsipser", str(trap_file), "--trace", str(trace)])
    capsys.readouterr()
    assert run_cli(["check-trace", str(trap_file), str(trace),
                    "--ref"]) == 0
    assert capsys.readouterr().out == "clean (42 picks)\n"


def test_check_trace_catches_tampering(trap_file, tmp_path, capsys):
    trace_path = tmp_path / "run.trace"
    run_cli(["run", "karpsipser", str(trap_file), "--trace", str(trace_path)])
    trace = heuristics.trace_load(trace_path)
    p = trace[0]
    trace[0] = heuristics.TracePick(p.u, p.v, p.deg_u + 1, p.deg_v,
                                    p.min_deg, p.min_sum)
    heuristics.trace_dump(trace, trace_path)
    capsys.readouterr()
    assert run_cli(["check-trace", str(trap_file), str(trace_path)]) == 1
    assert "violation" in capsys.readouterr().out


def test_exact_reports_and_writes_pairs(trap_file, tmp_path, capsys):
    pairs_file = tmp_path / "opt.pairs"
    assert run_cli(["exact", str(trap_file), "-o", str(pairs_file)]) == 0
    assert capsys.readouterr().out == "opt=62\n"
    rows = [line.split() for line in pairs_file.read_text().splitlines()]
    assert len(rows) == 62
    g = graph.load(trap_file)
    for u, v in rows:
        assert g.has_alive_edge(int(u), int(v))


def test_run_without_oracle_cannot_assert(tmp_path, capsys):
    # 3-regular general graph with too many edges for the brute oracle
    n = 20
    edges = sorted({tuple(sorted((i, (i + d) % n))) for i in range(n)
                    for d in (1, n // 2)})
    g = graph.build(n, edges)
    path = tmp_path / "big.mg"
    graph.dump(g, path)
    assert run_cli(["run", "greedy", str(path)]) == 0
    assert "opt=?" in capsys.readouterr().out
    with pytest.raises(SystemExit) as err:
        run_cli(["run", "greedy", str(path), "--assert-bound"])
    assert err.value.code == 2


def test_missing_graph_file_is_reported(capsys):
    with pytest.raises(SystemExit) as err:
        run_cli(["run", "greedy", "/nonexistent/x.mg"])
    assert err.value.code == 2


# ---------------------------------------------------------------------------
# game


def test_game_trap_line(capsys, tmp_path):
    out = tmp_path / "g.mgt"
    assert run_cli(["game", "--adv", "trap", "--policy", "karpsipser",
                    "--delta", "4", "--k", "25", "-o", str(out)]) == 0
    assert capsys.readouterr().out == \
        "alg=102 opt=152 rounds=102 consistent=yes\n"
    t = game.transcript_load(out)
    assert len(t.rounds) == 102


def test_game_general_two_sided_line(capsys):
    assert run_cli(["game", "--adv", "general2s", "--policy", "mindegpair",
                    "--delta", "5"]) == 0
    assert capsys.readouterr().out == "alg=6 opt=8 rounds=6 consistent=yes\n"


def test_game_random_policy(capsys):
    assert run_cli(["game", "--adv", "twosided3", "--policy", "random",
                    "--seed", "3", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert "opt=16" in out and "consistent=yes" in out


def test_game_requires_adversary_params(capsys):
    with pytest.raises(SystemExit) as err:
        run_cli(["game", "--adv", "trap", "--policy", "karpsipser"])
    assert err.value.code == 2
    assert "--delta" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# sweep


def test_sweep_rows_are_sorted_with_header(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run_cli(["sweep", "--family", "trap", "--deltas", "4,5",
                    "--ks", "1,2", "--algs", "karpsipser,mds",
                    "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("instance,algorithm,policy,")
    rows = lines[1:]
    assert rows == sorted(rows) and len(rows) == 8
    assert all(row.endswith(",1") or row.endswith(",0") for row in rows)


def test_sweep_is_thread_count_invariant(tmp_path, monkeypatch):
    argv = ["sweep", "--family", "twosided3", "--ns", "1,2,3",
            "--algs", "mds,karpsipser"]
    serial = tmp_path / "serial.csv"
    monkeypatch.delenv("MATCHFORGE_THREADS", raising=False)
    run_cli(argv + ["-o", str(serial)])
    threaded = tmp_path / "threaded.csv"
    monkeypatch.setenv("MATCHFORGE_THREADS", "3")
    run_cli(argv + ["-o", str(threaded)])
    assert serial.read_bytes() == threaded.read_bytes()


def test_sweep_rejects_unknown_algorithm(capsys):
    with pytest.raises(SystemExit) as err:
        run_cli(["sweep", "--family", "mds", "--algs", "munkres"])
    assert err.value.code == 2


def test_sweep_rejects_empty_algorithm_list():
    with pytest.raises(SystemExit) as err:
        run_cli(["sweep", "--family", "mds", "--algs", ""])
    assert err.value.code == 2


def test_sweep_defaults_cover_all_runners(tmp_path, capsys):
    assert run_cli(["sweep", "--family", "chordedc4"]) == 0
    out = capsys.readouterr().out
    rows = out.splitlines()[1:]
    assert len(rows) == len(heuristics.RUNNERS)
