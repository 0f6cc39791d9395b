"""Surfaces with boundary as one-vertex ribbon graphs.

A rank-n surface has one vertex disk and n bands.  The 2n darts (signed
generators) sit on the disk boundary in counterclockwise order.  Leaving
the disk through dart ``d`` spells the letter ``d`` and re-enters through
``inverse(d)``.  A boundary component follows the face permutation
``d -> next_ccw(inverse(d))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from surfbracket.words import (
    MAX_RANK,
    CyclicWord,
    WordError,
    parse_letters,
    primitive_root,
    spell,
)


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class PeripheralInfo:
    peripheral: bool
    component_index: int | None = None
    exponent: int | None = None

    def __str__(self) -> str:
        if not self.peripheral:
            return "not peripheral"
        return f"peripheral component {self.component_index} exponent {self.exponent}"


class RibbonSurface:
    """A validated one-vertex ribbon surface; build with `validate_surface`."""

    __slots__ = ("rank", "dart_order", "pos", "faces", "boundary")

    def __init__(self, rank: int, dart_order: tuple[int, ...]):
        self.rank = rank
        self.dart_order = dart_order
        pos = [0] * (2 * rank)
        for q, d in enumerate(dart_order):
            pos[d] = q
        # position of each dart in ccw order, indexed by letter code
        self.pos = tuple(pos)
        self.faces = _trace_faces(dart_order, self.pos)
        self.boundary = tuple(CyclicWord(f) for f in self.faces)

    @property
    def euler_characteristic(self) -> int:
        return 1 - self.rank

    @property
    def genus(self) -> int:
        return (1 + self.rank - len(self.faces)) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RibbonSurface) and self.dart_order == other.dart_order

    def __hash__(self) -> int:
        return hash(self.dart_order)

    def __repr__(self) -> str:
        return f"RibbonSurface(rank={self.rank}, order={' '.join(spell([d]) for d in self.dart_order)!r})"


def _trace_faces(order: tuple[int, ...], pos: tuple[int, ...]) -> list[tuple[int, ...]]:
    nd = len(order)
    seen = [False] * nd
    faces = []
    for d in order:
        if seen[d]:
            continue
        face = []
        e = d
        while not seen[e]:
            seen[e] = True
            face.append(e)
            e = order[(pos[e ^ 1] + 1) % nd]
        faces.append(tuple(face))
    return faces


def validate_surface(rank: int, order: Sequence[int | str]) -> RibbonSurface:
    """Check a dart order and build the surface with its boundary words.

    ``order`` holds letter codes or one-character strings such as ``"A"``.
    """
    if not isinstance(rank, int) or rank < 1:
        raise SurfaceError(f"rank must be a positive integer (disc not supported), got {rank!r}")
    if rank > MAX_RANK:
        raise SurfaceError(f"rank {rank} exceeds {MAX_RANK}")
    darts = []
    for d in order:
        if isinstance(d, str):
            if len(d) != 1:
                raise SurfaceError(f"dart {d!r} is not a single letter")
            try:
                d = parse_letters(d, rank)[0]
            except WordError as exc:
                raise SurfaceError(str(exc)) from None
        if not 0 <= d < 2 * rank:
            raise SurfaceError(f"dart {d!r} outside rank {rank}")
        darts.append(d)
    if len(set(darts)) != len(darts):
        dup = sorted({d for d in darts if darts.count(d) > 1})
        raise SurfaceError(f"duplicate dart(s) {spell(dup)}")
    missing = sorted(set(range(2 * rank)) - set(darts))
    if missing:
        raise SurfaceError(f"missing dart(s) {spell(missing)}")

    surface = RibbonSurface(rank, tuple(darts))
    b = len(surface.faces)
    twice_genus = 1 + rank - b
    if twice_genus < 0 or twice_genus % 2:
        raise SurfaceError(f"dart order gives non-integral genus (chi={1 - rank}, b={b})")
    assert sum(len(f) for f in surface.faces) == 2 * rank
    assert all(len(w) == len(f) for w, f in zip(surface.boundary, surface.faces))
    if surface.euler_characteristic < 0:
        # distinct components carry distinct primitive classes up to inversion
        seen = set()
        for w in surface.boundary:
            if w in seen or w.inverse() in seen:
                raise SurfaceError("boundary components share a peripheral class")
            seen.add(w)
    return surface


def boundary_words(surface: RibbonSurface) -> list[CyclicWord]:
    return list(surface.boundary)


def topology_summary(surface: RibbonSurface) -> tuple[int, int, int]:
    """``(euler characteristic, genus, number of boundary components)``."""
    return surface.euler_characteristic, surface.genus, len(surface.boundary)


def is_peripheral(surface: RibbonSurface, x: CyclicWord) -> PeripheralInfo:
    """Decide whether ``x`` is a power of a boundary class.

    Exact matches with a traced boundary word win over matches with its
    inverse; this only matters on the annulus, where the two boundary
    classes are inverse to each other.
    """
    if not x:
        raise WordError("peripherality of the trivial class is undefined")
    root, k = primitive_root(x)
    for i, w in enumerate(surface.boundary):
        if root == w:
            return PeripheralInfo(True, i, k)
    for i, w in enumerate(surface.boundary):
        if root == w.inverse():
            return PeripheralInfo(True, i, -k)
    return PeripheralInfo(False)


def parse_surface(text: str) -> RibbonSurface:
    """Parse the two-line surface format (``rank <n>`` / ``order <darts>``)."""
    rank = None
    order = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key == "rank" and rank is None:
            try:
                rank = int(rest.strip())
            except ValueError:
                raise SurfaceError(f"bad rank line {raw!r}") from None
        elif key == "order" and rank is not None and order is None:
            order = rest.split()
        else:
            raise SurfaceError(f"unexpected line {raw!r}")
    if rank is None or order is None:
        raise SurfaceError("surface needs a 'rank' line followed by an 'order' line")
    return validate_surface(rank, order)


def load_surface(path: str | Path) -> RibbonSurface:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise SurfaceError(f"cannot read {path}: {exc}") from None
    return parse_surface(text)


def format_surface(surface: RibbonSurface) -> str:
    return f"rank {surface.rank}\norder {' '.join(spell([d]) for d in surface.dart_order)}\n"


def one_holed_torus() -> RibbonSurface:
    return validate_surface(2, "abAB")


def pair_of_pants() -> RibbonSurface:
    return validate_surface(2, "aAbB")
