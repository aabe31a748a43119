"""
Fuzzing the solver against the oracle
=====================================

Same check as ``bdcut fuzz``: seeded random instances, solver and oracle
must agree on every one.
"""

import io
import random
import time

from bdcut.cli import run_fuzz
from bdcut.generate import synthetic_instance
from bdcut.solver import solve

out = io.StringIO()
run_fuzz(seed=1, trials=500, out=out, tight=0.2)
print(out.getvalue())

# larger synthetic instances: two halves joined by a few bridge edges
rng = random.Random(0)
for k in range(5):
    inst = synthetic_instance(rng, n=60, m=120, k=k, tight=0.05, bridges=max(k, 1))
    start = time.perf_counter()
    verdict = solve(inst)
    print(f"k={k} feasible={verdict.feasible} {time.perf_counter() - start:.3f}s")
