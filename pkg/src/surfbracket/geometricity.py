"""Is a homotopy equivalence of surfaces with boundary homotopic to a homeomorphism?

The decision follows the peripheral structure: the map must be a
pi_1-isomorphism, and it must carry the boundary classes of the source
bijectively onto the boundary classes of the target, up to orientation.
Bracket commutation is checked on sampled pairs, both to read the
orientation sign and to produce explicit witnesses when the answer is no.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from surfbracket.maps import (
    Homomorphism,
    MapError,
    Verdict,
    apply_class,
    commutes_on,
    is_isomorphism,
)
from surfbracket.surface import RibbonSurface, is_peripheral
from surfbracket.words import CyclicWord, enumerate_classes

ORIENTATION_MAX_LEN = 3
ORIENTATION_BUDGET = 2000


class GeometricityError(ValueError):
    """Raised for discs and annuli, where every homotopy equivalence is
    already homotopic to a homeomorphism and the bracket test does not apply."""


@dataclass(frozen=True)
class DecisionReport:
    geometric: bool
    orientation_sign: int | None
    reason: str
    reason_index: int | None = None
    boundary_matching: tuple[tuple[int, int, int], ...] | None = None

    @property
    def reason_text(self) -> str:
        if self.reason_index is None:
            return self.reason
        return f"{self.reason}({self.reason_index})"

    def render(self) -> str:
        sign = {1: "+1", -1: "-1"}.get(self.orientation_sign, "undetermined")
        lines = [
            f"geometric: {'yes' if self.geometric else 'no'}",
            f"orientation: {sign}",
            f"reason: {self.reason_text}",
        ]
        for src, tgt, e in self.boundary_matching or ():
            lines.append(f"C{src} -> C'{tgt} (exponent {e})")
        return "\n".join(lines)


def _require_hyperbolic(surface: RibbonSurface, role: str) -> None:
    if surface.euler_characteristic >= 0:
        raise GeometricityError(
            f"{role} surface has Euler characteristic {surface.euler_characteristic}: "
            "on a disc or annulus every homotopy equivalence is homotopic to a homeomorphism"
        )


def peripheral_structure(surface: RibbonSurface) -> list[CyclicWord]:
    """Primitive boundary classes, one per component, in traced orientation."""
    _require_hyperbolic(surface, "the")
    return list(surface.boundary)


def class_pairs(rank: int, max_len: int) -> Iterator[tuple[CyclicWord, CyclicWord]]:
    """Unordered pairs of distinct classes of length <= max_len, ordered by
    total length, then by the shortlex order of the first and second entry."""
    classes = enumerate_classes(rank, max_len)
    pairs = [(x, y) for a, x in enumerate(classes) for y in classes[a + 1:]]
    pairs.sort(key=lambda p: (len(p[0]) + len(p[1]), p[0].sort_key(), p[1].sort_key()))
    return iter(pairs)


def _check_ranks(f: Homomorphism, s1: RibbonSurface, s2: RibbonSurface) -> None:
    if f.source_rank != s1.rank or f.target_rank != s2.rank:
        raise MapError(
            f"map is rank {f.source_rank}->{f.target_rank} but surfaces have ranks {s1.rank}, {s2.rank}"
        )


def orientation_sign(
    f: Homomorphism,
    s1: RibbonSurface,
    s2: RibbonSurface,
    max_len: int = ORIENTATION_MAX_LEN,
    budget: int = ORIENTATION_BUDGET,
) -> int | None:
    """+1 if f commutes with the bracket on the first informative pair,
    -1 if it anticommutes, None if every pair within budget is degenerate."""
    spent = 0
    for x, y in class_pairs(s1.rank, max_len):
        if spent + 2 > budget:
            break
        spent += 2
        v = commutes_on(s1, s2, f, x, y)
        if v is Verdict.COMMUTES:
            return 1
        if v is Verdict.ANTICOMMUTES:
            return -1
        if v is Verdict.NEITHER:
            return None
    return None


def is_geometric(
    f: Homomorphism,
    s1: RibbonSurface,
    s2: RibbonSurface,
    max_len: int = ORIENTATION_MAX_LEN,
    budget: int = ORIENTATION_BUDGET,
) -> DecisionReport:
    _require_hyperbolic(s1, "source")
    _require_hyperbolic(s2, "target")
    _check_ranks(f, s1, s2)
    if not is_isomorphism(f):
        return DecisionReport(False, None, "not-isomorphism")

    matching = []
    for i, w in enumerate(s1.boundary):
        info = is_peripheral(s2, apply_class(f, w))
        if not info.peripheral:
            return DecisionReport(False, None, "boundary-class-not-peripheral", i)
        if info.exponent not in (1, -1):
            return DecisionReport(False, None, "boundary-map-not-bijective")
        matching.append((i, info.component_index, info.exponent))

    targets = [t for _, t, _ in matching]
    if len(set(targets)) != len(targets) or len(targets) != len(s2.boundary):
        return DecisionReport(False, None, "boundary-map-not-bijective")

    sign = orientation_sign(f, s1, s2, max_len, budget)
    return DecisionReport(True, sign, "ok", None, tuple(matching))


def find_witness(
    f: Homomorphism,
    s1: RibbonSurface,
    s2: RibbonSurface,
    max_len: int,
    budget: int = 100_000,
    strict: bool = False,
) -> tuple[CyclicWord, CyclicWord] | None:
    """First pair (in `class_pairs` order) on which f fails to commute
    with the bracket.

    Without ``strict`` only a ``neither`` verdict counts; with it, an
    anticommuting pair counts as well.  Each pair costs two bracket
    evaluations against ``budget``.
    """
    _check_ranks(f, s1, s2)
    if max_len <= 0:
        return None
    bad = {Verdict.NEITHER, Verdict.ANTICOMMUTES} if strict else {Verdict.NEITHER}
    spent = 0
    for x, y in class_pairs(s1.rank, max_len):
        if spent + 2 > budget:
            return None
        spent += 2
        if commutes_on(s1, s2, f, x, y) in bad:
            return x, y
    return None
