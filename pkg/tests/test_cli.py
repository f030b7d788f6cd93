"""Command-line interface: reports, tables, cache, determinism, exit codes."""

import io
import sys

from starspline import cli


def run_cli(argv):
    out = io.StringIO()
    old = sys.stdout
    sys.stdout = out
    try:
        code = cli.main(argv)
    finally:
        sys.stdout = old
    return code, out.getvalue()


def test_dim_report_alfeld():
    code, out = run_cli([
        "dim", "--catalog", "alfeld-split", "--r", "1", "--d", "0..2",
        "--trials", "2",
    ])
    assert code == 0
    rows = [ln.split() for ln in out.strip().splitlines()[2:]]
    assert [(r[0], r[1], r[4]) for r in rows] == [
        ("1", "0", "1"), ("1", "1", "3"), ("1", "2", "6")]
    assert all(r[4] == r[2] for r in rows)          # all cells trivial
    assert all(r[5] == "certified" for r in rows)


def test_dim_rejects_bad_star():
    code, _ = run_cli(["dim", "--catalog", "alfeld-split", "--r", "1",
                       "--d", "3..2"])
    assert code == 2


def test_table_generic_csv():
    code, out = run_cli([
        "table", "--catalog", "pentagonal-bipyramid", "--r", "1",
        "--d", "2..4", "--trials", "2",
    ])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,d,binom,lbcs,gendim"
    assert lines[1] == "1,2,6,6,6"
    assert lines[2] == "1,3,10,16,16"
    assert lines[3] == "1,4,15,36,36"


def test_table_distinct_csv():
    code, out = run_cli([
        "table", "--catalog", "pentagonal-bipyramid-planar-base",
        "--r", "1", "--d", "2..3", "--mode", "distinct",
    ])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,d,f,lbcs1,symdim"
    assert lines[1] == "1,2,7,6,7"
    assert lines[2] == "1,3,13,16,16"


def test_table_byte_identical(tmp_path):
    args = ["table", "--catalog", "regular-octahedron", "--r", "1",
            "--d", "2..4", "--trials", "2", "--seed", "1"]
    _, first = run_cli(args)
    _, second = run_cli(args)
    assert first == second


def test_dual_dump():
    code, out = run_cli(["dual", "--catalog", "regular-octahedron"])
    assert code == 0
    lines = out.strip().splitlines()
    assert sum(1 for ln in lines if ln.startswith("p ")) == 3
    assert sum(1 for ln in lines if ln.startswith("l ")) == 3


def test_reduce_octahedron():
    code, out = run_cli(["reduce", "--catalog", "regular-octahedron",
                         "--m", "2", "--d", "3"])
    assert code == 0
    assert "entries 4 3 2" in out
    assert "residuals 0 0 0" in out
    assert "full true" in out
    assert "dim_bounds d=3 1 1" in out
    assert "alpha_bounds 3 3" in out


def test_reduce_explicit_sequence():
    code, out = run_cli(["reduce", "--catalog", "regular-octahedron",
                         "--m", "2", "--sequence", "0,1,2"])
    assert code == 0
    assert "full true" in out


def test_waldschmidt_pentagonal():
    code, out = run_cli(["waldschmidt", "--catalog", "pentagonal-bipyramid",
                         "--star-seed", "1", "--star-scale", "16",
                         "--smax", "1"])
    assert code == 0
    assert "waldschmidt_lower 7/2" in out


def test_waldschmidt_planar_base():
    code, out = run_cli(["waldschmidt", "--catalog",
                         "pentagonal-bipyramid-planar-base", "--smax", "5"])
    assert code == 0
    assert "alpha_ratio s=5 13/5" in out
    assert "chudnovsky_lower 2" in out


def test_check_passes_alfeld():
    code, _ = run_cli(["check", "--catalog", "alfeld-split", "--r", "1..2"])
    assert code == 0


def test_check_expectation_mismatch(tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("1 2 6\n", encoding="utf-8")
    code, _ = run_cli(["check", "--catalog", "alfeld-split", "--r", "1",
                       "--expect", str(good)])
    assert code == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 7\n", encoding="utf-8")
    code, out = run_cli(["check", "--catalog", "alfeld-split", "--r", "1",
                         "--expect", str(bad)])
    assert code == 1
    assert "FAIL expect r=1 d=2" in out


def test_cache_roundtrip_and_mismatch(tmp_path):
    cache_path = tmp_path / "cache.txt"
    args = ["dim", "--catalog", "alfeld-split", "--r", "1", "--d", "2",
            "--trials", "2", "--cache", str(cache_path)]
    code, first = run_cli(args)
    assert code == 0
    assert cache_path.exists()
    code, second = run_cli(args)
    assert code == 0 and first == second

    # corrupt the recorded value: recompute must hard-error, never overwrite
    line = cache_path.read_text(encoding="utf-8").strip().splitlines()[0]
    key, _, _ = line.partition(" ")
    cache_path.write_text(f"{key} 999\n", encoding="utf-8")
    code, _ = run_cli(args)
    assert code == 2
    assert cache_path.read_text(encoding="utf-8") == f"{key} 999\n"


def test_star_file_source(tmp_path):
    from starspline import starmesh as sm

    path = tmp_path / "oct.star"
    path.write_text(sm.star_to_text(sm.catalog("regular-octahedron")),
                    encoding="utf-8")
    code, out = run_cli(["dual", "--star-file", str(path)])
    assert code == 0
    assert sum(1 for ln in out.splitlines() if ln.startswith("p ")) == 3
