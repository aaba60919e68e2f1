from pwdp.cli import main

P4 = "graph 4 3\ne 1 2\ne 2 3\ne 3 4\n"
K3 = "graph 3 3\ne 1 2\ne 1 3\ne 2 3\n"
STAR4 = "graph 4 3\ne 1 2\ne 1 3\ne 1 4\n"
GRID23 = "grid 2 3\n...\n...\n"
P3_AVG = "graph 3 2\ne 1 2\ne 2 3\nvw 1 1\nvw 2 10\nvw 3 1\n"
P4_PD = "pd 3\nbag 1 2\nbag 2 3\nbag 3 4\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_path_cover_auto(tmp_path, capsys):
    g = write(tmp_path, "p4.g", P4)
    code, out, _ = run(capsys, "solve", "path-cover", "--graph", g,
                       "--decomp", "auto")
    assert code == 0
    assert "objective 1" in out.splitlines()[0]
    assert any(line.startswith("stats ") for line in out.splitlines())
    assert any(line.startswith("time ") for line in out.splitlines())


def test_solve_infeasible_exit_2(tmp_path, capsys):
    g = write(tmp_path, "k3.g", K3)
    code, out, _ = run(capsys, "solve", "coloring", "--graph", g, "-C", "2")
    assert code == 2
    assert out.splitlines()[0] == "infeasible"


def test_oracle_star(tmp_path, capsys):
    g = write(tmp_path, "star4.g", STAR4)
    code, out, _ = run(capsys, "oracle", "path-cover", "--graph", g)
    assert code == 0
    assert out.splitlines()[0] == "objective 2"


def test_certificate_block(tmp_path, capsys):
    g = write(tmp_path, "k3.g", K3)
    code, out, _ = run(capsys, "solve", "coloring", "--graph", g,
                       "-C", "3", "--reconstruct")
    assert code == 0
    lines = out.splitlines()
    assert "certificate" in lines
    colors = [l for l in lines if l.startswith("color ")]
    assert len(colors) == 3
    for line in colors:
        _, v, c = line.split()
        assert 1 <= int(v) <= 3 and 1 <= int(c) <= 3


def test_avg_path_rational_output(tmp_path, capsys):
    g = write(tmp_path, "p3.g", P3_AVG)
    code, out, _ = run(capsys, "solve", "avg-path", "--graph", g,
                       "-L", "2", "-U", "2")
    assert code == 0
    assert out.splitlines()[0].startswith("objective 11/2 (~5.5")


def test_grid_instance_with_pruning(tmp_path, capsys):
    g = write(tmp_path, "g23.grid", GRID23)
    code, out, _ = run(capsys, "solve", "path-cover", "--grid", g,
                       "--prune-catalan", "--reconstruct")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "objective 1"
    assert len([l for l in lines if l.startswith("edge ")]) == 5


def test_rect_cover_on_grid(tmp_path, capsys):
    g = write(tmp_path, "g23.grid", GRID23)
    code, out, _ = run(capsys, "solve", "rect-cover", "--grid", g,
                       "--piece", "2x2", "--piece", "1x1", "--reconstruct")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "objective 6"
    assert len([l for l in lines if l.startswith("place ")]) == 6


def test_threads_agree(tmp_path, capsys):
    g = write(tmp_path, "g23.grid", GRID23)
    _, out1, _ = run(capsys, "solve", "cycle-cover", "--grid", g,
                     "--threads", "1")
    _, out4, _ = run(capsys, "solve", "cycle-cover", "--grid", g,
                     "--threads", "4")
    assert out1.splitlines()[0] == out4.splitlines()[0] == "objective 1"


def test_states_canonical_count(capsys):
    code, out, _ = run(capsys, "states", "coloring-canonical",
                       "-C", "7", "--nv", "9")
    assert code == 0
    assert "nv 9 states 21110" in out.splitlines()


def test_states_naive_count(capsys):
    code, out, _ = run(capsys, "states", "coloring", "-C", "3", "--nv", "4")
    assert code == 0
    assert "nv 4 states 81" in out.splitlines()


def test_validate_decomp(tmp_path, capsys):
    g = write(tmp_path, "p4.g", P4)
    d = write(tmp_path, "p4.pd", P4_PD)
    code, out, _ = run(capsys, "validate-decomp", "--graph", g, "--decomp", d)
    assert code == 0
    assert out.splitlines()[0] == "valid width 1"


def test_validate_decomp_rejects(tmp_path, capsys):
    g = write(tmp_path, "p4.g", P4)
    d = write(tmp_path, "bad.pd", "pd 2\nbag 1 2\nbag 3 4\n")
    code, _, err = run(capsys, "validate-decomp", "--graph", g, "--decomp", d)
    assert code == 1
    assert "error:" in err


def test_nicify_round_trip(tmp_path, capsys):
    g = write(tmp_path, "p4.g", P4)
    d = write(tmp_path, "p4.pd", P4_PD)
    code, out, _ = run(capsys, "nicify", "--graph", g, "--decomp", d)
    assert code == 0
    # feeding the refined file back in solves identically
    d2 = write(tmp_path, "nice.pd", out)
    code, out, _ = run(capsys, "solve", "mwis", "--graph", g, "--decomp", d2)
    assert code == 0
    assert out.splitlines()[0] == "objective 2"


def test_missing_file_is_error(capsys):
    code, _, err = run(capsys, "solve", "coloring", "--graph",
                       "/nonexistent.g", "-C", "2")
    assert code == 1
    assert "error:" in err


def test_missing_param_is_error(tmp_path, capsys):
    g = write(tmp_path, "k3.g", K3)
    code, _, err = run(capsys, "solve", "coloring", "--graph", g)
    assert code == 1
    assert "C" in err


def test_auto_needs_file_beyond_tiny(tmp_path, capsys):
    n = 13
    edges = [(i, i + 1) for i in range(1, n)]
    text = f"graph {n} {len(edges)}\n" + "".join(f"e {u} {v}\n" for u, v in edges)
    g = write(tmp_path, "p13.g", text)
    code, _, err = run(capsys, "solve", "mwis", "--graph", g)
    assert code == 1
    assert "--decomp" in err


def test_dump_tables(tmp_path, capsys):
    g = write(tmp_path, "k3.g", K3)
    code, out, _ = run(capsys, "solve", "coloring", "--graph", g,
                       "-C", "3", "--dump-tables")
    assert code == 0
    lines = out.splitlines()
    assert any(l.startswith("node 1 introduce") for l in lines)
    assert any(l.startswith("state ") and "value" in l for l in lines)
