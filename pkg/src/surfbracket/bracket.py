"""The Goldman bracket on a one-vertex ribbon surface.

Each class is drawn as a taut strand system.  Inside a band, strands run
parallel.  Inside the vertex disk, every junction of a curve is a straight
chord from the arc it arrives on to the arc it leaves by.  Two chords
cross exactly when their endpoints alternate around the disk boundary.
The bracket sums the signed loop products over x/y chord crossings.

Strands in a band are ordered once, on the band's positive-dart arc, by
their outward itineraries.  The opposite arc gets the reversed order, so
bands never contain crossings.  Parallel strands (powers of one primitive
class) are pushed off consistently to one side.  Such a pushoff meets the
original only near its self-crossings, twice at each, so [x, x^k] is zero
for simple x but in general not for curves that cross themselves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from surfbracket._kernels import kernels, pure
from surfbracket.surface import RibbonSurface
from surfbracket.words import CyclicWord, Word, WordError, parse_letters, spell

ClassLike = Union[CyclicWord, Word, str, tuple]


class Chain:
    """An integer combination of free homotopy classes.

    Zero coefficients are never stored.  Supports ``+``, ``-``, unary
    minus, and multiplication by ``int``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[CyclicWord, int] | Iterable[tuple[CyclicWord, int]] = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, v in items:
            if not isinstance(k, CyclicWord):
                raise TypeError(f"chain keys must be CyclicWord, got {type(k).__name__}")
            acc[k] += int(v)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def of(cls, *classes: CyclicWord) -> Chain:
        return cls((c, 1) for c in classes)

    @property
    def terms(self) -> dict[CyclicWord, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, x: CyclicWord) -> int:
        return self._terms.get(x, 0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, Chain) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Chain) -> Chain:
        return chain_add(self, other)

    def __sub__(self, other: Chain) -> Chain:
        return chain_add(self, chain_negate(other))

    def __neg__(self) -> Chain:
        return chain_negate(self)

    def __mul__(self, k: int) -> Chain:
        return chain_scale(self, k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return render_chain(self)

    def __repr__(self) -> str:
        return f"Chain({render_chain(self)!r})"


def chain_add(u: Chain, v: Chain) -> Chain:
    acc = Counter(u._terms)
    acc.update(v._terms)
    return Chain(acc)


def chain_negate(u: Chain) -> Chain:
    return Chain({k: -v for k, v in u._terms.items()})


def chain_scale(u: Chain, k: int) -> Chain:
    return Chain({w: k * v for w, v in u._terms.items()})


def render_chain(u: Chain) -> str:
    """``+1*(ab) -2*(aab)``; terms in shortlex order, ``0`` when empty."""
    if not u:
        return "0"
    return " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*({w})" for w, c in u.items())


@dataclass(frozen=True)
class Crossing:
    i: int
    j: int
    sign: int


@dataclass(frozen=True)
class StrandSystem:
    """One curve drawn on the ribbon surface, jointly with a partner curve.

    ``junctions[i] = (in_dart, out_dart)``; ``end_slots[i]`` gives the
    (arc, slot) of the chord's arrival and departure ends.  ``arc_counts``
    holds the number of strand ends on each arc, indexed by dart.
    """

    curve_id: int
    word: tuple[int, ...]
    junctions: tuple[tuple[int, int], ...]
    end_slots: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    surface: RibbonSurface
    arc_counts: tuple[int, ...]

    def circle_position(self, arc: int, slot: int) -> int:
        order = self.surface.dart_order
        return sum(self.arc_counts[d] for d in order[: self.surface.pos[arc]]) + slot


def _spelling(surface: RibbonSurface, x: ClassLike) -> tuple[int, ...]:
    """Cyclically reduced letters of ``x``, keeping the given rotation."""
    if isinstance(x, CyclicWord):
        letters = x.letters
    elif isinstance(x, Word):
        letters = x.letters
    elif isinstance(x, str):
        letters = parse_letters(x, surface.rank)
    else:
        letters = tuple(x)
    if any(not 0 <= l < 2 * surface.rank for l in letters):
        raise WordError(f"{spell(letters)} is not over the rank-{surface.rank} alphabet")
    t = kernels.free_reduce(tuple(letters))
    i, j = 0, len(t) - 1
    while i < j and t[i] == t[j] ^ 1:
        i += 1
        j -= 1
    return t[i:j + 1]


def build_strand_pair(surface: RibbonSurface, x: ClassLike, y: ClassLike) -> tuple[StrandSystem, StrandSystem]:
    xs = _spelling(surface, x)
    ys = _spelling(surface, y)
    if not xs or not ys:
        raise WordError("strand systems need non-trivial classes")
    rel = kernels.parallel_relation(kernels.canonical(xs), kernels.canonical(ys))
    slots, counts = pure.strand_slots(surface.pos, xs, ys, rel)
    arc_counts = tuple(counts.get(d >> 1, 0) for d in range(2 * surface.rank))
    systems = []
    for c, w in enumerate((xs, ys)):
        junctions = []
        ends = []
        for i in range(len(w)):
            a, d = w[i - 1] ^ 1, w[i]
            junctions.append((a, d))
            ends.append(((a, slots[c][i - 1][1]), (d, slots[c][i][0])))
        systems.append(StrandSystem(c, w, tuple(junctions), tuple(ends), surface, arc_counts))
    return systems[0], systems[1]


def crossings(sys_x: StrandSystem, sys_y: StrandSystem) -> list[Crossing]:
    """Alternating chord pairs with their signs.

    Reading counterclockwise from x's arrival end, the order
    ``x_in, y_in, x_out, y_out`` is +1 and ``x_in, y_out, x_out, y_in`` is -1.
    """
    total = sum(sys_x.arc_counts)

    def chord(s, e):
        (ai, si), (ao, so) = e
        return s.circle_position(ai, si), s.circle_position(ao, so)

    out = []
    cy = [chord(sys_y, e) for e in sys_y.end_slots]
    for i, e in enumerate(sys_x.end_slots):
        xi, xo = chord(sys_x, e)
        ro = (xo - xi) % total
        for j, (yi, yo) in enumerate(cy):
            ryi, ryo = (yi - xi) % total, (yo - xi) % total
            if (ryi < ro) != (ryo < ro):
                out.append(Crossing(i, j, 1 if ryi < ro else -1))
    return out


def splice(x: ClassLike, i: int, y: ClassLike, j: int) -> CyclicWord:
    """Class of the loop x based at junction i followed by y based at j."""
    xs = _letters(x)
    ys = _letters(y)
    if not 0 <= i < len(xs) or not 0 <= j < len(ys):
        raise IndexError(f"junction ({i}, {j}) out of range for lengths ({len(xs)}, {len(ys)})")
    return CyclicWord(xs[i:] + xs[:i] + ys[j:] + ys[:j])


def _letters(x: ClassLike) -> tuple[int, ...]:
    if isinstance(x, (CyclicWord, Word)):
        return x.letters
    if isinstance(x, str):
        return parse_letters(x)
    return tuple(x)


@lru_cache(maxsize=1 << 16)
def _bracket_terms(pos: tuple[int, ...], xs: tuple[int, ...], ys: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    canonical = kernels.canonical
    rel = kernels.parallel_relation(canonical(xs), canonical(ys))
    acc: Counter = Counter()
    for i, j, s in kernels.crossings(pos, xs, ys, rel):
        acc[canonical(xs[i:] + xs[:i] + ys[j:] + ys[:j])] += s
    return tuple((k, v) for k, v in acc.items() if v)


def bracket(surface: RibbonSurface, x: ClassLike, y: ClassLike) -> Chain:
    """Goldman bracket ``[x, y]`` as a Chain.

    Inputs may be classes, words or spellings; words are only cyclically
    reduced, not rotated, so different spellings exercise different strand
    drawings.  A trivial input gives 0.
    """
    xs = _spelling(surface, x)
    ys = _spelling(surface, y)
    if not xs or not ys:
        return Chain()
    terms = _bracket_terms(surface.pos, xs, ys)
    return Chain((CyclicWord._canonical(k), v) for k, v in terms)


def bracket_chain(surface: RibbonSurface, u: Chain, v: Chain) -> Chain:
    acc: Counter = Counter()
    for x, a in u._terms.items():
        for y, b in v._terms.items():
            for w, c in bracket(surface, x, y)._terms.items():
                acc[w] += a * b * c
    return Chain(acc)


def jacobi_sum(surface: RibbonSurface, x: CyclicWord, y: CyclicWord, z: CyclicWord) -> Chain:
    """``[[x,y],z] + [[y,z],x] + [[z,x],y]``; zero on every surface."""
    X, Y, Z = Chain.of(x), Chain.of(y), Chain.of(z)
    return (bracket_chain(surface, bracket_chain(surface, X, Y), Z)
            + bracket_chain(surface, bracket_chain(surface, Y, Z), X)
            + bracket_chain(surface, bracket_chain(surface, Z, X), Y))


def band_consistent(sys_x: StrandSystem, sys_y: StrandSystem) -> bool:
    """Every band's end order on one arc is the reverse of the other's."""
    ends: dict[int, list[tuple[int, tuple[int, int]]]] = {}
    for s in (sys_x, sys_y):
        L = len(s.word)
        for t in range(L):
            dep = s.end_slots[t][1]
            arr = s.end_slots[(t + 1) % L][0]
            ends.setdefault(s.word[t] >> 1, []).append((s.curve_id, t, dep, arr))
    for g, passages in ends.items():
        at_pos = {}
        at_neg = {}
        for c, t, dep, arr in passages:
            for arc, slot in (dep, arr):
                (at_pos if arc == 2 * g else at_neg)[(c, t)] = slot
        m = len(passages)
        if sorted(at_pos.values()) != list(range(m)) or sorted(at_neg.values()) != list(range(m)):
            return False
        if any(at_pos[k] != m - 1 - at_neg[k] for k in at_pos):
            return False
    return True
