"""Words and conjugacy classes in a free group of rank at most 26.

A letter is an ``int``: generator ``i`` is ``2*i`` and its inverse is
``2*i + 1``.  In text, ``a..z`` are generators and ``A..Z`` their inverses.
The canonical letter order (generator index first, positive before
negative) is then plain integer order.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from surfbracket._kernels import kernels

MAX_RANK = 26


class WordError(ValueError):
    pass


def make_letter(index: int, sign: int = 1) -> int:
    if not 0 <= index < MAX_RANK or sign not in (1, -1):
        raise WordError(f"bad letter ({index}, {sign})")
    return 2 * index + (sign < 0)


def letter_index(l: int) -> int:
    return l >> 1


def letter_sign(l: int) -> int:
    return -1 if l & 1 else 1


def inverse_letter(l: int) -> int:
    return l ^ 1


def letter_char(l: int) -> str:
    c = chr(ord("a") + (l >> 1))
    return c.upper() if l & 1 else c


def spell(letters: Iterable[int]) -> str:
    return "".join(letter_char(l) for l in letters)


def parse_letters(text: str, rank: int | None = None) -> tuple[int, ...]:
    """Letter codes spelled by ``text``, unreduced."""
    out = []
    for ch in text:
        if not ("a" <= ch.lower() <= "z") or not ch.isascii():
            raise WordError(f"unknown character {ch!r} in {text!r}")
        idx = ord(ch.lower()) - ord("a")
        if rank is not None and idx >= rank:
            raise WordError(f"letter {ch!r} beyond rank {rank}")
        out.append(2 * idx + ch.isupper())
    return tuple(out)


class Word:
    """A freely reduced element of a free group."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self.letters = kernels.free_reduce(tuple(letters))

    @classmethod
    def _reduced(cls, letters: tuple[int, ...]) -> Word:
        w = object.__new__(cls)
        w.letters = letters
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(("Word", self.letters))

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __str__(self) -> str:
        return spell(self.letters)

    def __repr__(self) -> str:
        return f"Word({spell(self.letters)!r})"


class CyclicWord:
    """A conjugacy class, stored as its canonical cyclic word.

    The constructor accepts any spelling and canonicalizes it; the empty
    word is the trivial class.  Instances sort in shortlex order.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self.letters = kernels.canonical(tuple(letters))

    @classmethod
    def _canonical(cls, letters: tuple[int, ...]) -> CyclicWord:
        w = object.__new__(cls)
        w.letters = letters
        return w

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> CyclicWord:
        return cls(parse_letters(text, rank))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CyclicWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.letters), self.letters)

    def __lt__(self, other: CyclicWord) -> bool:
        return self.sort_key() < other.sort_key()

    def inverse(self) -> CyclicWord:
        return CyclicWord(l ^ 1 for l in reversed(self.letters))

    def word(self) -> Word:
        return Word._reduced(self.letters)

    def __str__(self) -> str:
        return spell(self.letters)

    def __repr__(self) -> str:
        return f"CyclicWord({spell(self.letters)!r})"


def parse_word(text: str, rank: int) -> Word:
    """Parse and freely reduce ``text``; whitespace is not allowed."""
    if not 0 < rank <= MAX_RANK:
        raise WordError(f"rank must be in 1..{MAX_RANK}, got {rank}")
    return Word(parse_letters(text, rank))


def concat(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def invert(u: Word) -> Word:
    return Word._reduced(tuple(l ^ 1 for l in reversed(u.letters)))


def cyclic_canonical(u: Word | Iterable[int]) -> CyclicWord:
    letters = u.letters if isinstance(u, (Word, CyclicWord)) else tuple(u)
    return CyclicWord(letters)


def are_conjugate(u: Word, v: Word) -> bool:
    return cyclic_canonical(u) == cyclic_canonical(v)


def primitive_root(x: CyclicWord) -> tuple[CyclicWord, int]:
    """Return ``(root, k)`` with ``x == root**k`` and ``root`` primitive.

    The trivial class has no root and raises ``WordError``.
    """
    if not x.letters:
        raise WordError("the trivial class has no primitive root")
    p = kernels.smallest_period(x.letters)
    # a prefix of a least rotation of r**k is the least rotation of r
    return CyclicWord._canonical(x.letters[:p]), len(x.letters) // p


def power_class(x: CyclicWord, n: int) -> CyclicWord:
    if n == 0 or not x.letters:
        return CyclicWord._canonical(())
    base = x if n > 0 else x.inverse()
    return CyclicWord._canonical(base.letters * abs(n))


def rotate(letters: tuple[int, ...], k: int) -> tuple[int, ...]:
    if not letters:
        return letters
    k %= len(letters)
    return letters[k:] + letters[:k]


def enumerate_classes(rank: int, max_len: int) -> list[CyclicWord]:
    """All non-trivial classes of length <= max_len in shortlex order."""
    out = []
    for n in range(1, max_len + 1):
        found = set()
        for t in _cyclically_reduced(rank, n):
            c = kernels.canonical(t)
            found.add(c)
        out.extend(CyclicWord._canonical(c) for c in sorted(found))
    return out


def _cyclically_reduced(rank: int, n: int) -> Iterator[tuple[int, ...]]:
    # depth-first over reduced words; only least rotations are kept by the caller
    def extend(prefix: list[int]):
        if len(prefix) == n:
            if n == 1 or prefix[0] != prefix[-1] ^ 1:
                yield tuple(prefix)
            return
        for l in range(2 * rank):
            if prefix and l == prefix[-1] ^ 1:
                continue
            # the least rotation starts with the smallest letter it contains
            if prefix and l < prefix[0]:
                continue
            prefix.append(l)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def random_word(rng, rank: int, length: int) -> Word:
    """A uniformly random freely reduced word of the given length."""
    letters: list[int] = []
    while len(letters) < length:
        l = rng.randrange(2 * rank)
        if letters and l == letters[-1] ^ 1:
            continue
        letters.append(l)
    return Word._reduced(tuple(letters))


def random_class(rng, rank: int, max_len: int) -> CyclicWord:
    """A random non-trivial class of length <= max_len."""
    while True:
        c = cyclic_canonical(random_word(rng, rank, rng.randint(1, max_len)))
        if c.letters:
            return c


__all__ = [
    "MAX_RANK", "WordError", "Word", "CyclicWord", "make_letter", "letter_index",
    "letter_sign", "inverse_letter", "letter_char", "spell", "parse_letters",
    "parse_word", "concat", "invert", "cyclic_canonical", "are_conjugate",
    "primitive_root", "power_class", "rotate", "enumerate_classes",
    "random_word", "random_class",
]
