"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--pairs N] [--length L] [--seed S]

Times the two hot kernels (canonical form and crossing enumeration) on the
same seeded inputs, checks that both backends agree, and then times a full
bracket workload end to end in a subprocess per backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from surfbracket import _pykernels, validate_surface
from surfbracket.words import random_word

try:
    from surfbracket import _speedups
except ImportError:
    _speedups = None

SURFACES = [(2, "abAB"), (2, "aAbB"), (3, "abAcBC"), (3, "aAbBcC")]

WORKLOAD = """
import time
from surfbracket import bracket, enumerate_classes, one_holed_torus
from surfbracket._kernels import BACKEND
t = one_holed_torus()
cs = enumerate_classes(2, 5)
t0 = time.perf_counter()
n = sum(1 for x in cs for y in cs if bracket(t, x, y))
print(BACKEND, len(cs) ** 2, n, time.perf_counter() - t0)
"""


def make_inputs(n, length, seed):
    rng = random.Random(seed)
    words, pairs = [], []
    for _ in range(n):
        rank, order = rng.choice(SURFACES)
        s = validate_surface(rank, order)
        x = _pykernels.canonical(random_word(rng, rank, length).letters)
        y = _pykernels.canonical(random_word(rng, rank, length).letters)
        words.append(tuple(random_word(rng, rank, length).letters))
        if x and y:
            pairs.append((s.pos, x, y, _pykernels.parallel_relation(x, y)))
    return words, pairs


def bench(mod, words, pairs, repeat):
    t_canon = min(timeit.repeat(lambda: [mod.canonical(w) for w in words], number=1, repeat=repeat))
    t_cross = min(timeit.repeat(lambda: [mod.crossings(*p) for p in pairs], number=1, repeat=repeat))
    return t_canon, t_cross


def end_to_end():
    for pure in ("1", "0"):
        env = dict(os.environ, SURFBRACKET_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        backend, pairs, nonzero, secs = out.stdout.split()
        print(f"  {backend:7s} {pairs} brackets ({nonzero} nonzero) in {float(secs):.3f}s")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--pairs", type=int, default=2000)
    p.add_argument("--length", type=int, default=12)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    words, pairs = make_inputs(args.pairs, args.length, args.seed)
    print(f"{len(words)} words, {len(pairs)} crossing pairs, length {args.length}")
    py = bench(_pykernels, words, pairs, args.repeat)
    print(f"  python  canonical {py[0]:.4f}s  crossings {py[1]:.4f}s")
    if _speedups is None:
        print("  compiled extension not built; nothing to compare")
        return
    agree = all(_speedups.canonical(w) == _pykernels.canonical(w) for w in words) and all(
        _speedups.crossings(*q) == _pykernels.crossings(*q) for q in pairs)
    cy = bench(_speedups, words, pairs, args.repeat)
    print(f"  cython  canonical {cy[0]:.4f}s  crossings {cy[1]:.4f}s")
    print(f"  speedup canonical x{py[0] / cy[0]:.1f}  crossings x{py[1] / cy[1]:.1f}  outputs agree: {agree}")
    print("end to end, all pairs of torus classes up to length 5:")
    end_to_end()


if __name__ == "__main__":
    main()
