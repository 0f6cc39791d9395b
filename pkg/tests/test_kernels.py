"""The compiled kernels must agree with the pure-Python ones exactly."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surfbracket import _kernels, _pykernels as py

speedups = pytest.importorskip("surfbracket._speedups")


def test_backend_selected():
    assert _kernels.BACKEND in ("cython", "python")


@given(st.lists(st.integers(0, 7), max_size=16))
def test_word_kernels_agree(t):
    t = tuple(t)
    assert speedups.free_reduce(t) == py.free_reduce(t)
    assert speedups.canonical(t) == py.canonical(t)
    assert speedups.least_rotation(t) == py.least_rotation(t)
    c = py.canonical(t)
    assert speedups.smallest_period(c) == py.smallest_period(c)


def test_crossings_agree():
    rng = random.Random(2024)
    for _ in range(2000):
        rank = rng.randint(1, 4)
        order = list(range(2 * rank))
        rng.shuffle(order)
        pos = [0] * (2 * rank)
        for q, d in enumerate(order):
            pos[d] = q
        x = py.canonical(tuple(rng.randrange(2 * rank) for _ in range(rng.randint(1, 10))))
        y = py.canonical(tuple(rng.randrange(2 * rank) for _ in range(rng.randint(1, 10))))
        roll = rng.random()
        if roll < 0.15:
            y = py.canonical(x * rng.randint(1, 3))
        elif roll < 0.3:
            y = py.canonical(tuple(l ^ 1 for l in reversed(x)) * rng.randint(1, 2))
        if not x or not y:
            continue
        rel = py.parallel_relation(x, y)
        assert rel == speedups.parallel_relation(x, y)
        assert py.crossings(pos, x, y, rel) == speedups.crossings(pos, x, y, rel)


def test_least_rotation_brute_force():
    rng = random.Random(3)
    for _ in range(500):
        t = tuple(rng.randrange(3) for _ in range(rng.randint(1, 12)))
        k = py.least_rotation(t)
        assert t[k:] + t[:k] == min(t[i:] + t[:i] for i in range(len(t)))


def test_environment_forces_pure_python():
    import os
    import subprocess
    import sys

    code = "from surfbracket._kernels import BACKEND; print(BACKEND)"
    env = dict(os.environ, SURFBRACKET_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_benchmark_smoke():
    import subprocess
    import sys
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--pairs", "40", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    assert "python  canonical" in out.stdout
    assert "outputs agree: False" not in out.stdout
