from cfhyper import load_coloring, load_factor, load_hypergraph
from cfhyper.cli import main
from cfhyper.constructions import build_g_tr


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_and_stats(tmp_path, capsys):
    out = tmp_path / "g.hg"
    code, _, _ = run(capsys, "gen", "--construction", "g_tr",
                     "--t", "1", "--r", "7", "-o", str(out))
    assert code == 0
    assert load_hypergraph(out.read_text()) == build_g_tr(1, 7)[0]

    code, text, _ = run(capsys, "stats", str(out))
    assert code == 0
    assert "n 54" in text and "m 189" in text
    assert "regular 7" in text and "connected yes" in text


def test_gen_roles(tmp_path, capsys):
    out = tmp_path / "h.hg"
    code, _, _ = run(capsys, "gen", "--construction", "h_block",
                     "--t", "1", "--r", "7", "-o", str(out), "--roles")
    assert code == 0
    text = out.read_text()
    assert "# role 14 u 1" in text
    assert load_hypergraph(text).n == 14


def test_gen_missing_param(tmp_path, capsys):
    code, _, err = run(capsys, "gen", "--construction", "odd_cycle",
                       "-o", str(tmp_path / "x.hg"))
    assert code == 64
    assert "requires --n" in err


def test_gen_invalid_param(tmp_path, capsys):
    code, _, err = run(capsys, "gen", "--construction", "odd_cycle",
                       "--n", "4", "-o", str(tmp_path / "x.hg"))
    assert code == 65
    assert "odd" in err


def test_factor_pipeline_g17(tmp_path, capsys):
    g = tmp_path / "g.hg"
    assert run(capsys, "gen", "--construction", "g_tr",
               "--t", "1", "--r", "7", "-o", str(g))[0] == 0
    code, out, _ = run(capsys, "factor", "--a", "1", "--b", "6", str(g))
    assert code == 1
    assert out.strip() == "NONE"


def test_factor_parity_certificate(tmp_path, capsys):
    k5 = tmp_path / "k5.hg"
    run(capsys, "gen", "--construction", "complete_graph", "--n", "5",
        "-o", str(k5))
    code, out, err = run(capsys, "factor", "--a", "1", "--b", "3", str(k5))
    assert code == 1
    assert out.strip() == "NONE"
    assert "parity" in err


def test_factor_witness_output(tmp_path, capsys):
    k4 = tmp_path / "k4.hg"
    run(capsys, "gen", "--construction", "complete_graph", "--n", "4",
        "-o", str(k4))
    code, out, _ = run(capsys, "factor", "--a", "1", "--b", "1", str(k4))
    assert code == 0
    m, selected = load_factor(out)
    assert m == 6 and len(selected) == 2


def test_factor_budget(tmp_path, capsys):
    g = tmp_path / "g.hg"
    run(capsys, "gen", "--construction", "g_tr", "--t", "1", "--r", "7",
        "-o", str(g))
    code, out, _ = run(capsys, "factor", "--a", "1", "--b", "6",
                       "--budget", "3", str(g))
    assert code == 2
    assert out.strip() == "BUDGET"


def test_chi_cf_c5(tmp_path, capsys):
    c5 = tmp_path / "c5.hg"
    run(capsys, "gen", "--construction", "odd_cycle", "--n", "5", "-o", str(c5))
    code, out, _ = run(capsys, "chi-cf", str(c5))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3"
    witness = load_coloring("\n".join(lines[1:]))
    assert witness.palette == 3


def test_chi_cf_above_max_k(tmp_path, capsys):
    k4 = tmp_path / "k4.hg"
    run(capsys, "gen", "--construction", "complete_graph", "--n", "4",
        "-o", str(k4))
    code, out, _ = run(capsys, "chi-cf", "--max-k", "3", str(k4))
    assert code == 1
    assert out.strip() == "above 3"


def test_chi_cf_characterize_mode(tmp_path, capsys):
    k5 = tmp_path / "k5.hg"
    run(capsys, "gen", "--construction", "complete_graph", "--n", "5",
        "-o", str(k5))
    d = tmp_path / "dk5.hg"
    assert run(capsys, "dual", str(k5), "-o", str(d))[0] == 0
    code, out, _ = run(capsys, "chi-cf", "--mode", "characterize-4u", str(d))
    assert code == 0
    assert out.splitlines()[0] == "3"


def test_color_verify_loop(tmp_path, capsys):
    hg = tmp_path / "x.hg"
    col = tmp_path / "x.col"
    run(capsys, "gen", "--construction", "two_cliques", "--delta", "3",
        "-o", str(hg))
    for algo in ("greedy", "exact"):
        code, _, _ = run(capsys, "color", "--algo", algo, str(hg),
                         "-o", str(col))
        assert code == 0
        code, out, _ = run(capsys, "verify", str(hg), str(col))
        assert code == 0 and out == ""


def test_color_four(tmp_path, capsys):
    hg = tmp_path / "g.hg"
    col = tmp_path / "g.col"
    run(capsys, "gen", "--construction", "k4e_gadget", "--r", "4", "-o", str(hg))
    # 2-uniform/4-edge mix is not 4-uniform, so use the dual of K5 instead
    k5 = tmp_path / "k5.hg"
    run(capsys, "gen", "--construction", "complete_graph", "--n", "5",
        "-o", str(k5))
    run(capsys, "dual", str(k5), "-o", str(hg))
    code, _, _ = run(capsys, "color", "--algo", "four", str(hg), "-o", str(col))
    assert code == 0
    assert run(capsys, "verify", str(hg), str(col))[0] == 0


def test_color_lll_deterministic(tmp_path, capsys):
    hg = tmp_path / "r.hg"
    edges = ["%d %d %d %d %d" % (i, i + 1, i + 2, i + 3, i + 4)
             for i in range(1, 16)]
    hg.write_text("hypergraph 20 15\n" + "\n".join(edges) + "\n")
    c1 = tmp_path / "c1.col"
    c2 = tmp_path / "c2.col"
    for target in (c1, c2):
        code, _, _ = run(capsys, "color", "--algo", "lll", "--colors", "8",
                         "--seed", "42", str(hg), "-o", str(target))
        assert code == 0
    assert c1.read_text() == c2.read_text()
    assert run(capsys, "verify", str(hg), str(c1))[0] == 0


def test_color_lll_exhausted(tmp_path, capsys):
    hg = tmp_path / "e.hg"
    hg.write_text("hypergraph 4 1\n1 2 3 4\n")
    code, _, err = run(capsys, "color", "--algo", "lll", "--colors", "1",
                       "--max-resamples", "5", str(hg),
                       "-o", str(tmp_path / "e.col"))
    assert code == 2
    assert "cap" in err


def test_verify_reports_bad_edges(tmp_path, capsys):
    hg = tmp_path / "c5.hg"
    col = tmp_path / "bad.col"
    run(capsys, "gen", "--construction", "odd_cycle", "--n", "5", "-o", str(hg))
    col.write_text("coloring 5\n1 2 1 2 1\n")
    code, out, _ = run(capsys, "verify", str(hg), str(col))
    assert code == 1
    assert out.splitlines() == ["5"]


def test_dual_roundtrip(tmp_path, capsys):
    hg = tmp_path / "g.hg"
    d = tmp_path / "d.hg"
    dd = tmp_path / "dd.hg"
    run(capsys, "gen", "--construction", "g_tr", "--t", "1", "--r", "7",
        "-o", str(hg))
    assert run(capsys, "dual", str(hg), "-o", str(d))[0] == 0
    assert run(capsys, "dual", str(d), "-o", str(dd))[0] == 0
    assert hg.read_text() == dd.read_text()


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.hg"
    bad.write_text("hypergraph 2 1\n1 1\n")
    code, _, err = run(capsys, "stats", str(bad))
    assert code == 65
    assert "repeated" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "gen", "--construction", "nope", "-o", "x")
    assert code == 64


def test_missing_file_exit_code(capsys):
    code, _, _ = run(capsys, "stats", "/nonexistent/file.hg")
    assert code == 64  # click validates the path before the command runs
