import subprocess
import sys

from toptree.cli import main, run_script
from toptree.workload import WorkloadConfig, generate


def run(text, **kw):
    return run_script(text.strip().splitlines(), **kw)


def test_distance_script():
    out, err, code = run("profile metric\nvertices 3\nlink 0 1 5\nlink 1 2 7\ndist 0 2")
    assert out == ["edge 0", "edge 1", "12"]
    assert code == 0 and err == []


def test_treemax_script():
    out, _, code = run("profile pathweights\nvertices 2\nlink 0 1 4\ntreemax 0")
    assert out[-1] == "4" and code == 0


def test_query_formats():
    script = """
profile metric
vertices 5
link 0 1 2
link 1 2 3
connected 0 2
connected 0 4
nearest 0
mark 2
nearest 0
jump 0 2 1
meet 0 2 1
center 0
median 0
diam 1
expose 0 2
deexpose
"""
    out, _, code = run(script)
    assert code == 0
    assert out[2:] == ["true", "false", "none", "5 2", "1", "1", "1", "1", "5"]


def test_composite_block():
    script = """
profile pathweights
vertices 4
link 0 1 3
link 1 2 4
composite 3
cut 0
link 0 2 9
expose 0 2
pathmax 0 2
"""
    out, _, code = run(script)
    assert code == 0
    assert out == ["edge 0", "edge 1", "edge 2", "9"]
    out, _, _ = run(script.replace("pathmax 0 2", "connected 0 3"))
    assert out[-1] == "false"


def test_errors_name_the_line():
    _, err, code = run("profile metric\nvertices 2\nlink 0 1 1\nlink 1 0 1")
    assert code != 0 and err == ["ERROR line 4: SameTree"]
    _, err, _ = run("profile metric\nvertices 2\nfrobnicate 1")
    assert err == ["ERROR line 3: ParseError"]
    _, err, _ = run("vertices 2")
    assert err == ["ERROR line 1: ParseError"]
    _, err, _ = run("profile metric\nvertices 2\nlink 0 x 1")
    assert err == ["ERROR line 3: ParseError"]
    _, err, _ = run("profile metric\nvertices 2\npathmax 0 1")
    assert err == ["ERROR line 3: WrongProfile"]
    _, err, _ = run("profile pathweights\nvertices 2\ncut 5")
    assert err == ["ERROR line 3: UnknownEdge"]
    _, err, _ = run("profile metric\nvertices 2\ncomposite 2\nlink 0 1 1")
    assert err == ["ERROR line 3: ParseError"]
    _, err, _ = run("profile metric\nvertices 2\ncomposite 1\ndist 0 1")
    assert err == ["ERROR line 4: ParseError"]


def test_output_stops_at_first_error():
    out, _, code = run("profile metric\nvertices 2\nlink 0 1 1\ncut 7\ndist 0 1")
    assert out == ["edge 0"] and code == 1


def test_check_and_stats():
    lines = generate(WorkloadConfig(profile="metric", n=24, ops=400, seed=5))
    out, err, code = run_script(lines, check=True, stats=True)
    assert code == 0, err
    sep = out.index("---")
    assert out[sep - 1].startswith("checked ") and out[sep - 1].endswith(" 0 mismatches")
    keys = dict(line.split("=") for line in out[sep + 1:])
    assert keys["profile"] == "metric"
    assert int(keys["joins"]) > 0 and int(keys["max_height"]) >= 0


def test_check_reports_mismatch():
    from toptree.cli import Runner
    r = Runner(check=True)
    r.run(["profile metric", "vertices 2", "link 0 1 3"])
    r.oracle.edges[0][2] = 4
    code = r.run(["dist 0 1"])
    assert code == 1
    assert any(e.startswith("MISMATCH line 1") for e in r.errors)


def test_trace_goes_to_stderr():
    out, err, _ = run("profile metric\nvertices 2\nlink 0 1 1", trace=True)
    assert out == ["edge 0"]
    assert err and all(line.startswith("trace ") for line in err)


def test_replay_is_byte_identical():
    for profile in ("metric", "pathweights"):
        lines = generate(WorkloadConfig(profile=profile, n=32, ops=500, seed=9))
        assert run_script(lines, stats=True) == run_script(lines, stats=True)


def test_generator_is_seeded():
    cfg = WorkloadConfig(n=16, ops=200, seed=1)
    assert generate(cfg) == generate(cfg)
    assert generate(cfg) != generate(WorkloadConfig(n=16, ops=200, seed=2))


def test_main_entry_points(tmp_path, capsys):
    path = tmp_path / "s.txt"
    path.write_text("profile metric\nvertices 3\nlink 0 1 5\nlink 1 2 7\ndist 0 2\n")
    assert main(["run", str(path)]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "12"
    assert main(["gen", "--n", "8", "--ops", "5"]) == 0
    assert capsys.readouterr().out.startswith("profile metric\nvertices 8\n")
    assert main(["bench", "--n", "64", "--ops", "30", "--no-timing"]) == 0
    first = capsys.readouterr().out
    main(["bench", "--n", "64", "--ops", "30", "--no-timing"])
    assert capsys.readouterr().out == first
    assert "within_bounds=true" in first
    assert main(["bench", "--n", "1"]) == 2


def test_module_runs_from_stdin():
    p = subprocess.run([sys.executable, "-m", "toptree", "run", "--stats"],
                       input="profile metric\nvertices 2\nlink 0 1 4\ndiam 0\n",
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert p.stdout.splitlines()[:3] == ["edge 0", "4", "---"]
