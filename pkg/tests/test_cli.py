import json
import subprocess
import sys

import pytest

from setpentagon.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


NULL3 = "3\n0 0 0\n0 0 0\n0 0 0\n"
SWAP = "3\n0 1 2\n0 2 1\n0 2 1\n"
EXAMPLE = "3 0\n0 1 2\n1 1 1\n2 1 0\n"


def test_verify_null_swap(files, capsys):
    code, out, _ = run(["verify", "--table", files("m.cay", NULL3),
                        "--theta", files("t.tab", SWAP)], capsys)
    assert code == 0
    assert out.startswith("solution: yes; idempotent: yes; non-degenerate: yes")


def test_verify_failure_lists_witnesses(files, capsys):
    code, out, _ = run(["verify", "--table", files("z2.cay", "2 0\n0 1\n1 0\n"),
                        "--theta", files("t.tab", "2\n0 1\n1 0\n")], capsys)
    assert code == 1
    assert "P1 fails at (x, y, z) = (0, 1, 0)" in out


def test_verify_non_associative(files, capsys):
    code, _, err = run(["verify", "--table", files("bad.cay", "2\n1 0\n0 0\n"),
                        "--theta", files("t.tab", "2\n0 0\n0 0\n")], capsys)
    assert code == 2 and "(0, 0, 1)" in err


def test_parse_error_exit(files, capsys):
    code, _, err = run(["verify", "--table", files("r.cay", "2\n0 0\n0\n"),
                        "--theta", files("t.tab", "2\n0 0\n0 0\n")], capsys)
    assert code == 2 and "r.cay:3" in err


def test_usage_errors(capsys):
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["verify"], capsys)[0] == 2
    assert run(["census", "--workers", "0"], capsys)[0] == 2
    assert run(["census", "--order", "4"], capsys)[0] == 2


def test_classify_json(files, capsys):
    code, out, _ = run(["classify", "--json", "--table", files("m.cay", NULL3),
                        "--theta", files("t.tab", SWAP)], capsys)
    assert code == 0
    assert json.loads(out)["flags"]["nondegenerate"] is True


def test_classify_rejects_non_solution(files, capsys):
    code, _, _ = run(["classify", "--table", files("z2.cay", "2 0\n0 1\n1 0\n"),
                      "--theta", files("t.tab", "2\n0 1\n1 0\n")], capsys)
    assert code == 1


def test_enumerate(files, capsys):
    code, out, _ = run(["enumerate", "--table", files("m.cay", EXAMPLE),
                        "--filter", "idempotent", "--up-to-iso"], capsys)
    assert code == 0 and out.rstrip().endswith("# COUNT=3")


def test_enumerate_parallel_bytes_identical(files, capsys, tmp_path):
    table = files("m.cay", NULL3)
    run(["enumerate", "--table", table, "--format", "solution", "-o", str(tmp_path / "a")], capsys)
    run(["enumerate", "--table", table, "--format", "solution", "--workers", "2",
         "-o", str(tmp_path / "b")], capsys)
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()


def test_enumerate_output_reingests(files, capsys, tmp_path):
    from setpentagon.formats import format_solution, parse_solution
    out = tmp_path / "sols"
    run(["enumerate", "--table", files("m.cay", EXAMPLE), "--format", "solution",
         "-o", str(out)], capsys)
    blocks = out.read_text().split("# COUNT")[0].strip().split("\n\n")
    for b in blocks:
        assert format_solution(parse_solution(b)) == b + "\n"


def test_census(capsys):
    code, out, _ = run(["census"], capsys)
    assert code == 0
    assert out.rstrip().splitlines()[-1].startswith("TOTAL_ISO_CLASSES=")
    assert "RAW_SOLUTIONS=266" in out


def test_construct_group(files, capsys):
    data = files("g.txt", "kind group\nK: 0 2\nR: 0 1\n")
    code, out, _ = run(["construct", "--table", files("z4.cay", "4 0\n0 1 2 3\n1 2 3 0\n"
                                                      "2 3 0 1\n3 0 1 2\n"), "--data", data], capsys)
    assert code == 0 and "theta" in out


def test_construct_monoid(files, capsys):
    data = files("m.txt", "kind monoid\nmu:\n0 -> 0\n1 -> 1\n2 -> 0\n"
                          "theta 1:\n0 -> 0\n1 -> 1\n2 -> 2\n")
    code, out, _ = run(["construct", "--json", "--table", files("m.cay", EXAMPLE),
                        "--data", data], capsys)
    assert code == 0
    assert json.loads(out)["theta"] == [[0, 1, 0], [0, 1, 2], [0, 1, 0]]


def test_construct_hypothesis_failure(files, capsys):
    data = files("v.txt", "kind variety\n")
    code, out, _ = run(["construct", "--table", files("z2.cay", "2 0\n0 1\n1 0\n"),
                        "--data", data], capsys)
    assert code == 1 and "abc=bc" in out


def test_construct_militaru(files, capsys):
    data = files("mi.txt", "kind militaru\nn 2\nf:\n0 -> 0\n1 -> 1\ng:\n0 -> 0\n1 -> 0\n")
    assert run(["construct", "--data", data], capsys)[0] == 0


def test_iso(files, capsys):
    a = files("a.sol", "n 3\nmul\n0 0 0\n0 0 0\n0 0 0\ntheta\n0 1 2\n0 2 1\n0 2 1\n")
    b = files("b.sol", "n 3\nmul\n0 0 0\n0 0 0\n0 0 0\ntheta\n0 1 2\n0 1 2\n0 1 2\n")
    assert run(["iso", a, a], capsys)[0] == 0
    code, out, _ = run(["iso", a, b], capsys)
    assert code == 1 and "no" in out


def test_lab_summary(capsys):
    code, out, _ = run(["lab", "--summary"], capsys)
    assert code == 0
    assert all("fails=0" in ln for ln in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "setpentagon", "census", "--order", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "TOTAL_ISO_CLASSES=" in proc.stdout
