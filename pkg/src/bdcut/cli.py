"""Command-line front end.

Instance files are line oriented (vertices 1-indexed)::

    c comment
    p bdc <n> <m>
    e <u> <v>            one line per edge, repeat for parallel edges
    a <v> [<v> ...]      A terminals (repeatable)
    b <v> [<v> ...]      B terminals (repeatable)
    ua <v> <cap>         optional, default m
    ub <v> <cap>         optional, default m
    k <k>

Exit codes: 0 feasible / success, 1 infeasible / disagreement, 2 error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from .flow import Cut
from .generate import random_instance, synthetic_instance
from .impcut import enumerate_important_cuts
from .multigraph import GraphError, MultiGraph, cut_size
from .oracle import brute_force_solve
from .solver import Instance, InstanceError, SolveStats, guess_counts, solve, verify_solution

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _ints(lineno, tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> Instance:
    n = m = k = None
    edges, a, b, u_a, u_b = [], [], [], {}, {}

    def vertex(lineno, v):
        if n is None:
            raise ParseError(lineno, "missing 'p bdc' header")
        if not 1 <= v <= n:
            raise ParseError(lineno, f"vertex {v} out of range 1..{n}")
        return v - 1

    last = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        last = lineno
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        kind, args = tok[0], tok[1:]
        if kind == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(args) != 3 or args[0] != "bdc":
                raise ParseError(lineno, "header must be 'p bdc <n> <m>'")
            n, m = _ints(lineno, args[1:])
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative size in header")
        elif kind == "e":
            vals = _ints(lineno, args)
            if len(vals) != 2:
                raise ParseError(lineno, "edge line needs two vertices")
            u, v = (vertex(lineno, x) for x in vals)
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u + 1}")
            edges.append((u, v))
        elif kind in ("a", "b"):
            vals = _ints(lineno, args)
            if not vals:
                raise ParseError(lineno, "terminal line needs at least one vertex")
            (a if kind == "a" else b).extend(vertex(lineno, x) for x in vals)
        elif kind in ("ua", "ub"):
            vals = _ints(lineno, args)
            if len(vals) != 2:
                raise ParseError(lineno, f"'{kind}' line needs a vertex and a cap")
            v = vertex(lineno, vals[0])
            if not 0 <= vals[1] <= m:
                raise ParseError(lineno, f"cap {vals[1]} outside 0..{m}")
            (u_a if kind == "ua" else u_b)[v] = vals[1]
        elif kind == "k":
            vals = _ints(lineno, args)
            if len(vals) != 1 or vals[0] < 0:
                raise ParseError(lineno, "'k' line needs one nonnegative integer")
            if k is not None:
                raise ParseError(lineno, "duplicate 'k' line")
            k = vals[0]
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if n is None:
        raise ParseError(last, "missing 'p bdc' header")
    if len(edges) != m:
        raise ParseError(last, f"header declares {m} edges, found {len(edges)}")
    if k is None:
        raise ParseError(last, "missing 'k' line")
    if not a or not b:
        raise ParseError(last, "both 'a' and 'b' terminal sets are required")
    if set(a) & set(b):
        raise ParseError(last, "terminal sets A and B overlap")
    return Instance.build(MultiGraph(n, edges), a, b, k, u_a, u_b)


def render_instance(inst: Instance) -> str:
    g = inst.g
    lines = [f"p bdc {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    lines.append("a " + " ".join(str(v + 1) for v in inst.a))
    lines.append("b " + " ".join(str(v + 1) for v in inst.b))
    lines += [f"ua {v + 1} {c}" for v, c in enumerate(inst.u_a) if c != g.m]
    lines += [f"ub {v + 1} {c}" for v, c in enumerate(inst.u_b) if c != g.m]
    lines.append(f"k {inst.k}")
    return "\n".join(lines) + "\n"


def _side(vs):
    return " ".join(str(v + 1) for v in vs)


def format_verdict(inst: Instance, verdict) -> list[str]:
    if not verdict.feasible:
        return ["NO"]
    w = verdict.witness
    return ["YES", f"V1: {_side(w.v1)}", f"V2: {_side(w.v2)}", f"cutsize: {w.size(inst.g)}"]


def _load(path):
    return parse_instance(Path(path).read_text())


def cmd_solve(args, out):
    inst = _load(args.file)
    verdict = solve(inst)
    lines = format_verdict(inst, verdict)
    code = EXIT_YES if verdict.feasible else EXIT_NO
    if args.verify and verdict.feasible:
        ok = verify_solution(inst, verdict.witness)
        lines.append("verify: ok" if ok else "verify: FAILED")
        if not ok:
            code = EXIT_ERROR
    if args.stats:
        st = guess_counts(inst)
        k = inst.k
        lines.append(f"stage1: {st.stage1} (bound {2 ** (12 * k)})")
        lines.append(f"stage2_max: {st.stage2_max} (bound {2 ** (6 * k)})")
        lines.append(f"easy_total: {st.easy_total} (bound {2 ** (18 * k)})")
    out.write("\n".join(lines) + "\n")
    return code


def cmd_oracle(args, out):
    inst = _load(args.file)
    verdict = brute_force_solve(inst)
    out.write("\n".join(format_verdict(inst, verdict)) + "\n")
    return EXIT_YES if verdict.feasible else EXIT_NO


def _gen_kwargs(args):
    return dict(max_n=args.max_n, max_m=args.max_m, max_k=args.max_k, tight=args.tight)


def run_fuzz(seed: int, trials: int, out, **caps) -> int:
    rng = random.Random(seed)
    feasible = 0
    for i in range(trials):
        inst = random_instance(rng, **caps)
        expect = brute_force_solve(inst)
        got = solve(inst)
        if got.feasible != expect.feasible:
            out.write(f"c disagreement at trial {i}: solver={got.feasible} oracle={expect.feasible}\n")
            out.write(render_instance(inst))
            return EXIT_NO
        feasible += expect.feasible
    out.write(f"trials: {trials}\nagree: {trials}\ndisagree: 0\nfeasible: {feasible}\n")
    return EXIT_YES


def cmd_fuzz(args, out):
    return run_fuzz(args.seed, args.trials, out, **_gen_kwargs(args))


def cmd_important_cuts(args, out):
    inst = _load(args.file)
    s = [v - 1 for v in args.s] if args.s else list(inst.a)
    t = [v - 1 for v in args.t] if args.t else list(inst.b)
    k = inst.k if args.k is None else args.k
    cuts = enumerate_important_cuts(inst.g, s, t, k)
    for i, c in enumerate(cuts, 1):
        out.write(f"cut {i}: size {c.size(inst.g)} V1: {_side(c.v1)}\n")
    out.write(f"count: {len(cuts)} (bound {4 ** k})\n")
    return EXIT_YES


BENCH_HEADER = f"{'file':<28} {'n':>4} {'m':>5} {'k':>2} {'verdict':>7} {'stage1':>7} {'easy':>7} {'seconds':>9}"


def run_bench(directory, out, times: bool = True) -> int:
    files = sorted(Path(directory).iterdir())
    out.write(BENCH_HEADER + "\n")
    for path in files:
        if not path.is_file():
            continue
        inst = _load(path)
        stats = SolveStats()
        start = time.perf_counter()
        verdict = solve(inst, stats)
        elapsed = time.perf_counter() - start
        secs = f"{elapsed:9.4f}" if times else f"{'-':>9}"
        out.write(
            f"{path.name:<28} {inst.g.n:>4} {inst.g.m:>5} {inst.k:>2} "
            f"{'YES' if verdict.feasible else 'NO':>7} {stats.stage1:>7} {stats.easy_solved:>7} {secs}\n"
        )
    return EXIT_YES


def cmd_bench(args, out):
    if not Path(args.dir).is_dir():
        raise FileNotFoundError(f"not a directory: {args.dir}")
    return run_bench(args.dir, out, times=not args.no_times)


def cmd_gen(args, out):
    rng = random.Random(args.seed)

    def make():
        if args.n is not None:
            return synthetic_instance(
                rng, n=args.n, m=args.m or 2 * args.n, terminals=args.terminals,
                k=rng.randint(0, args.max_k), tight=args.tight, bridges=args.bridges,
            )
        return random_instance(rng, **_gen_kwargs(args))

    if args.out is None:
        for _ in range(args.count):
            out.write(render_instance(make()))
        return EXIT_YES
    dest = Path(args.out)
    dest.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        (dest / f"inst{i:04d}.bdc").write_text(render_instance(make()))
    return EXIT_YES


def cmd_verify(args, out):
    inst = _load(args.file)
    v1 = [v - 1 for v in args.v1]
    cut = Cut.from_side(inst.g, v1)
    ok = verify_solution(inst, cut)
    out.write(f"{'valid' if ok else 'invalid'} cutsize: {cut_size(inst.g, v1)}\n")
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bdcut", description="Bounded-degree cut solver")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="run the FPT solver on an instance file")
    sp.add_argument("file")
    sp.add_argument("--verify", action="store_true", help="re-check the witness")
    sp.add_argument("--stats", action="store_true", help="print guess counts and bounds")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", help="run the exhaustive solver")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_oracle)

    def caps(sp, trials=False):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-n", type=int, default=10)
        sp.add_argument("--max-m", type=int, default=20)
        sp.add_argument("--max-k", type=int, default=4)
        sp.add_argument("--tight", type=float, default=1.0, help="probability a cap is drawn from {0,1,2,m}")
        if trials:
            sp.add_argument("--trials", type=int, default=2000)

    sp = sub.add_parser("fuzz", help="compare solver and oracle on random instances")
    caps(sp, trials=True)
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("important-cuts", help="list important cuts")
    sp.add_argument("file")
    sp.add_argument("--s", type=int, nargs="+", help="source vertices (default: A)")
    sp.add_argument("--t", type=int, nargs="+", help="sink vertices (default: B)")
    sp.add_argument("--k", type=int, help="size bound (default: the instance's k)")
    sp.set_defaults(func=cmd_important_cuts)

    sp = sub.add_parser("bench", help="time the solver on every file in a directory")
    sp.add_argument("dir")
    sp.add_argument("--no-times", action="store_true", help="omit the timing column")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("gen", help="write random instances")
    caps(sp)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--out", help="directory for inst####.bdc files (default: stdout)")
    sp.add_argument("--n", type=int, help="fixed vertex count: connected synthetic instances")
    sp.add_argument("--m", type=int, help="edge count for --n (default 2n)")
    sp.add_argument("--terminals", type=int, default=3)
    sp.add_argument("--bridges", type=int, help="join two halves by this many edges")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check a proposed cut")
    sp.add_argument("file")
    sp.add_argument("--v1", type=int, nargs="+", required=True, help="source side, 1-indexed")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args, out)
    except (ParseError, GraphError, InstanceError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
