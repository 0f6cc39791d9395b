"""Homomorphisms between free groups, given by generator images."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Sequence

from surfbracket.bracket import Chain, bracket
from surfbracket.surface import RibbonSurface
from surfbracket.words import (
    MAX_RANK,
    CyclicWord,
    Word,
    WordError,
    letter_char,
    parse_letters,
)


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class Homomorphism:
    source_rank: int
    target_rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.source_rank:
            raise MapError(f"{len(self.images)} images for source rank {self.source_rank}")
        if not 0 < self.target_rank <= MAX_RANK:
            raise MapError(f"bad target rank {self.target_rank}")
        for w in self.images:
            if any(l >= 2 * self.target_rank for l in w.letters):
                raise MapError(f"image {w} not over the rank-{self.target_rank} alphabet")

    def __str__(self) -> str:
        return ",".join(f"{letter_char(2 * i)}->{w}" for i, w in enumerate(self.images))


def homomorphism(images: Sequence[str | Word], target_rank: int | None = None) -> Homomorphism:
    """Build from image spellings, e.g. ``homomorphism(["a", "ba"])``."""
    words = [w if isinstance(w, Word) else Word(parse_letters(w)) for w in images]
    if target_rank is None:
        target_rank = max([1] + [(l >> 1) + 1 for w in words for l in w.letters])
    return Homomorphism(len(words), target_rank, tuple(words))


def identity(rank: int) -> Homomorphism:
    return Homomorphism(rank, rank, tuple(Word((2 * i,)) for i in range(rank)))


def parse_map(text: str, source_rank: int | None = None, target_rank: int | None = None) -> Homomorphism:
    """Parse ``a->ab,b->b``; the left sides must be exactly the first n generators."""
    images: dict[int, Word] = {}
    for part in text.split(","):
        lhs, sep, rhs = part.strip().partition("->")
        lhs, rhs = lhs.strip(), rhs.strip()
        if not sep or len(lhs) != 1 or not ("a" <= lhs <= "z"):
            raise MapError(f"bad assignment {part.strip()!r}")
        idx = ord(lhs) - ord("a")
        if idx in images:
            raise MapError(f"generator {lhs!r} assigned twice")
        if rhs in ("", "1", "e"):
            rhs = ""
        try:
            images[idx] = Word(parse_letters(rhs, target_rank))
        except WordError as exc:
            raise MapError(str(exc)) from None
    n = len(images)
    if sorted(images) != list(range(n)):
        raise MapError("left sides must enumerate the source generators a, b, ... exactly once")
    if source_rank is not None and n != source_rank:
        raise MapError(f"map has {n} generators, source surface has rank {source_rank}")
    return homomorphism([images[i] for i in range(n)], target_rank)


def apply_word(f: Homomorphism, u: Word) -> Word:
    out: list[int] = []
    for l in u.letters:
        if (l >> 1) >= f.source_rank:
            raise MapError(f"letter {letter_char(l)} outside the source alphabet")
        img = f.images[l >> 1].letters
        if l & 1:
            img = tuple(m ^ 1 for m in reversed(img))
        out.extend(img)
    return Word(out)


def apply_class(f: Homomorphism, x: CyclicWord) -> CyclicWord:
    return CyclicWord(apply_word(f, x.word()).letters)


def apply_chain(f: Homomorphism, u: Chain) -> Chain:
    return Chain((apply_class(f, x), c) for x, c in u.terms.items())


def compose(g: Homomorphism, f: Homomorphism) -> Homomorphism:
    """``g o f``: first f, then g."""
    if f.target_rank != g.source_rank:
        raise MapError(f"cannot compose: f lands in rank {f.target_rank}, g starts at rank {g.source_rank}")
    return Homomorphism(f.source_rank, g.target_rank, tuple(apply_word(g, w) for w in f.images))


def _fold(images: Sequence[Word]) -> tuple[list[dict[int, int]], list[int]]:
    """Stallings-fold the wedge of image loops at vertex 0."""
    adj: list[dict[int, int]] = [{}]
    parent = [0]

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    pending = []

    def link(u, l, v):
        w = adj[u].get(l)
        if w is None:
            adj[u][l] = v
        elif find(w) != find(v):
            pending.append((w, v))

    for w in images:
        v = 0
        for k, l in enumerate(w.letters):
            if k == len(w.letters) - 1:
                nxt = 0
            else:
                nxt = len(adj)
                adj.append({})
                parent.append(nxt)
            link(v, l, nxt)
            link(nxt, l ^ 1, v)
            v = nxt

    while pending:
        a, b = pending.pop()
        a, b = find(a), find(b)
        if a == b:
            continue
        if len(adj[a]) < len(adj[b]):
            a, b = b, a
        parent[b] = a
        moved, adj[b] = adj[b], {}
        for l, w in moved.items():
            link(a, l, w)
    return adj, parent


def generates_everything(images: Sequence[Word], rank: int) -> bool:
    """Do the words generate the whole free group of the given rank?"""
    adj, parent = _fold(images)

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    root = find(0)
    for g in range(rank):
        w = adj[root].get(2 * g)
        if w is None or find(w) != root:
            return False
    return True


def is_isomorphism(f: Homomorphism) -> bool:
    # equal finite rank + onto is enough: free groups are Hopfian
    return f.source_rank == f.target_rank and generates_everything(f.images, f.target_rank)


class Verdict(str, enum.Enum):
    COMMUTES = "commutes"
    ANTICOMMUTES = "anticommutes"
    NEITHER = "neither"
    DEGENERATE = "degenerate"

    def __str__(self) -> str:
        return self.value


def commutes_on(s1: RibbonSurface, s2: RibbonSurface, f: Homomorphism, x: CyclicWord, y: CyclicWord) -> Verdict:
    """Compare ``[f x, f y]`` in s2 with ``f [x, y]`` for one pair."""
    if f.source_rank != s1.rank or f.target_rank != s2.rank:
        raise MapError(f"map is rank {f.source_rank}->{f.target_rank}, surfaces are {s1.rank}->{s2.rank}")
    lhs = bracket(s2, apply_class(f, x), apply_class(f, y))
    rhs = apply_chain(f, bracket(s1, x, y))
    if not lhs and not rhs:
        return Verdict.DEGENERATE
    if lhs == rhs:
        return Verdict.COMMUTES
    if lhs == -rhs:
        return Verdict.ANTICOMMUTES
    return Verdict.NEITHER


# elementary Nielsen automorphisms

def nielsen_swap(rank: int, i: int, j: int) -> Homomorphism:
    imgs = [Word((2 * k,)) for k in range(rank)]
    imgs[i], imgs[j] = imgs[j], imgs[i]
    return Homomorphism(rank, rank, tuple(imgs))


def nielsen_invert(rank: int, i: int) -> Homomorphism:
    imgs = [Word((2 * k,)) for k in range(rank)]
    imgs[i] = Word((2 * i + 1,))
    return Homomorphism(rank, rank, tuple(imgs))


def nielsen_multiply(rank: int, i: int, j: int, left: bool = False) -> Homomorphism:
    """``g_i -> g_i g_j`` (or ``g_j g_i`` when ``left``); needs ``i != j``."""
    if i == j:
        raise MapError("Nielsen multiplication needs distinct generators")
    imgs = [Word((2 * k,)) for k in range(rank)]
    imgs[i] = Word((2 * j, 2 * i) if left else (2 * i, 2 * j))
    return Homomorphism(rank, rank, tuple(imgs))


def random_nielsen_move(rng: random.Random, rank: int) -> Homomorphism:
    kind = rng.randrange(3 if rank > 1 else 1)
    if kind == 0:
        return nielsen_invert(rank, rng.randrange(rank))
    i, j = rng.sample(range(rank), 2)
    if kind == 1:
        return nielsen_swap(rank, i, j)
    return nielsen_multiply(rank, i, j, left=rng.random() < 0.5)


def random_automorphism(rng: random.Random, rank: int, moves: int) -> Homomorphism:
    f = identity(rank)
    for _ in range(moves):
        f = compose(random_nielsen_move(rng, rank), f)
    return f
