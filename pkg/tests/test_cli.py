import io
import random
import subprocess
import sys

import pytest

from bdcut.cli import ParseError, main, parse_instance, render_instance
from bdcut.generate import random_instance, synthetic_instance

PATH = "c path a-x-b\np bdc 3 2\ne 1 2\ne 2 3\na 1\nb 3\nk 1\n"
DOUBLE = "p bdc 2 2\ne 1 2\ne 1 2\na 1\nb 2\nk 1\n"
SQUARE = "p bdc 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\na 1\nb 3\nk 2\n"


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("path", PATH), ("double", DOUBLE), ("square", SQUARE)]:
        p = tmp_path / f"{name}.bdc"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_parse_minimal():
    inst = parse_instance("p bdc 2 1\ne 1 2\na 1\nb 2\nk 0\n")
    assert inst.g.n == 2 and inst.g.edges == ((0, 1),)
    assert inst.u_a == (1, 1) and inst.k == 0


def test_parse_caps_default_to_m():
    inst = parse_instance(PATH.replace("k 1", "ua 2 0\nk 1"))
    assert inst.u_a == (2, 0, 2) and inst.u_b == (2, 2, 2)


@pytest.mark.parametrize(
    "text,line",
    [
        ("p bdc 2 1\ne 1 1\na 1\nb 2\nk 0\n", 2),
        ("e 1 2\n", 1),
        ("p bdc 2 1\ne 1 3\n", 2),
        ("p bdc 2 1\ne 1 2\na 1\nb 1\nk 0\n", 5),
        ("p bdc 2 1\ne 1 x\n", 2),
        ("p bdc 2 1\ne 1 2\na 1\nb 2\n", 4),
        ("p bdc 2 2\ne 1 2\na 1\nb 2\nk 0\n", 5),
        ("p bdc 2 1\ne 1 2\nq 1\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert exc.value.lineno == line


def test_round_trip():
    rng = random.Random(1)
    for _ in range(200):
        inst = random_instance(rng)
        assert parse_instance(render_instance(inst)) == inst
    inst = synthetic_instance(rng, bridges=2)
    assert parse_instance(render_instance(inst)) == inst


def test_solve_yes(files):
    code, out = run(["solve", files["path"]])
    assert code == 0
    assert out == "YES\nV1: 1 2\nV2: 3\ncutsize: 1\n"


def test_solve_no(files):
    assert run(["solve", files["double"]]) == (1, "NO\n")


def test_solve_verify_and_stats(files):
    code, out = run(["solve", files["path"], "--verify", "--stats"])
    lines = out.splitlines()
    assert code == 0 and "verify: ok" in lines
    stage1 = next(l for l in lines if l.startswith("stage1:"))
    assert int(stage1.split()[1]) <= 4096 and "bound 4096" in stage1


def test_oracle_matches_solver(files):
    for name in files:
        code_s, out_s = run(["solve", files[name]])
        code_o, out_o = run(["oracle", files[name]])
        assert code_s == code_o
        assert out_s.splitlines()[0] == out_o.splitlines()[0]


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.bdc"
    bad.write_text("p bdc 2 1\ne 1 1\n")
    assert run(["solve", str(bad)])[0] == 2
    assert run(["solve", str(tmp_path / "missing.bdc")])[0] == 2
    assert run(["nonsense"])[0] == 2


def test_oracle_oversize(tmp_path):
    n = 30
    text = f"p bdc {n} {n - 1}\n" + "".join(f"e {i} {i + 1}\n" for i in range(1, n)) + f"a 1\nb {n}\nk 1\n"
    p = tmp_path / "long.bdc"
    p.write_text(text)
    assert run(["oracle", str(p)])[0] == 2


def test_fuzz_zero_trials():
    code, out = run(["fuzz", "--trials", "0"])
    assert code == 0 and "trials: 0" in out


def test_fuzz_is_reproducible():
    first = run(["fuzz", "--trials", "60", "--seed", "9"])
    assert first == run(["fuzz", "--trials", "60", "--seed", "9"])
    assert first[0] == 0


def test_gen_stream_is_reproducible():
    a = run(["gen", "--seed", "4", "--count", "5"])
    assert a == run(["gen", "--seed", "4", "--count", "5"])
    assert a[1] != run(["gen", "--seed", "5", "--count", "5"])[1]


def test_important_cuts(files):
    code, out = run(["important-cuts", files["square"]])
    assert code == 0
    assert out == "cut 1: size 2 V1: 1 2 4\ncount: 1 (bound 16)\n"
    code, out = run(["important-cuts", files["path"], "--s", "1", "--t", "3", "--k", "0"])
    assert out.endswith("count: 0 (bound 1)\n")


def test_bench(tmp_path, files):
    empty = tmp_path / "empty"
    empty.mkdir()
    code, out = run(["bench", str(empty)])
    assert code == 0 and len(out.splitlines()) == 1
    corpus = tmp_path / "corpus"
    assert run(["gen", "--seed", "2", "--count", "4", "--out", str(corpus)])[0] == 0
    first = run(["bench", str(corpus), "--no-times"])
    assert first == run(["bench", str(corpus), "--no-times"])
    assert len(first[1].splitlines()) == 5
    assert run(["bench", str(tmp_path / "nope")])[0] == 2


def test_verify_command(files):
    assert run(["verify", files["path"], "--v1", "1"]) == (0, "valid cutsize: 1\n")
    assert run(["verify", files["double"], "--v1", "1"])[0] == 1


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "bdcut", "solve", files["double"]], capture_output=True, text=True
    )
    assert proc.returncode == 1 and proc.stdout == "NO\n"
