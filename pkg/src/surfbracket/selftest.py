"""Seeded property suites behind ``surfbracket selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from surfbracket.bracket import band_consistent, bracket, build_strand_pair, jacobi_sum
from surfbracket.surface import RibbonSurface, validate_surface
from surfbracket.words import (
    concat,
    cyclic_canonical,
    enumerate_classes,
    invert,
    random_class,
    random_word,
    rotate,
    spell,
)

STANDARD_ORDERS = {
    1: ["aA"],
    2: ["abAB", "aAbB"],
    3: ["abAcBC", "aAbBcC"],
}


def standard_surfaces(rank_max: int) -> list[RibbonSurface]:
    return [validate_surface(r, o) for r in sorted(STANDARD_ORDERS) if r <= rank_max
            for o in STANDARD_ORDERS[r]]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail() if callable(detail) else str(detail)

    def line(self) -> str:
        s = f"{self.name}: {self.cases} cases, {self.failures} failures"
        if self.first_failure:
            s += f" (first: {self.first_failure})"
        return s


@dataclass
class SelftestReport:
    seed: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.failures == 0 for s in self.suites)


def _label(s: RibbonSurface) -> str:
    return "".join(spell([d]) for d in s.dart_order)


def run_selftest(rank_max: int = 3, len_max: int = 5, trials: int = 200, seed: int = 0) -> SelftestReport:
    rng = random.Random(seed)
    surfaces = standard_surfaces(rank_max)
    if not surfaces:
        raise ValueError("rank-max must be at least 1")
    report = SelftestReport(seed)

    skew = SuiteResult("skew-symmetry")
    for _ in range(trials):
        s = rng.choice(surfaces)
        x, y = random_class(rng, s.rank, len_max), random_class(rng, s.rank, len_max)
        skew.record(bracket(s, x, y) == -bracket(s, y, x), lambda: f"{_label(s)} [{x},{y}]")
    report.suites.append(skew)

    jac = SuiteResult("jacobi")
    for _ in range(trials):
        s = rng.choice(surfaces)
        x, y, z = (random_class(rng, s.rank, len_max) for _ in range(3))
        jac.record(not jacobi_sum(s, x, y, z), lambda: f"{_label(s)} ({x},{y},{z})")
    report.suites.append(jac)

    peri = SuiteResult("peripheral-annihilation")
    for s in surfaces:
        for y in enumerate_classes(s.rank, len_max):
            for w in s.boundary:
                peri.record(not bracket(s, w, y), lambda: f"{_label(s)} [{w},{y}]")
    report.suites.append(peri)

    band = SuiteResult("band-consistency")
    for _ in range(trials):
        s = rng.choice(surfaces)
        x, y = random_class(rng, s.rank, len_max), random_class(rng, s.rank, len_max)
        sx, sy = build_strand_pair(s, x, y)
        band.record(band_consistent(sx, sy), lambda: f"{_label(s)} ({x},{y})")
    report.suites.append(band)

    conj = SuiteResult("conjugation-invariance")
    for _ in range(trials):
        s = rng.choice(surfaces)
        x, y = random_class(rng, s.rank, len_max), random_class(rng, s.rank, len_max)
        c = random_word(rng, s.rank, rng.randint(0, 3))
        spelled = concat(concat(c, x.word()), invert(c))
        # keep a cyclically reduced spelling but start at a random letter
        letters = cyclic_canonical(spelled).letters
        letters = rotate(letters, rng.randrange(len(letters)))
        ok = bracket(s, letters, y) == bracket(s, x, y) and bracket(s, y, spelled) == bracket(s, y, x)
        conj.record(ok, lambda: f"{_label(s)} {spell(letters)} ~ {x}")
    report.suites.append(conj)
    return report
