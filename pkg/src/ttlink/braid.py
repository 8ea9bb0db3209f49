"""
Braid words on n strands, their permutations, and equality of positive braids.

Generators are 1-based signed integers: ``i`` is sigma_i and ``-i`` its
inverse. Equality of positive words is decided by the left normal form

    Delta^d * x_1 * ... * x_k

where each x_j is a permutation braid (a positive braid in which every pair
of strands crosses at most once), none is trivial or Delta, and every
adjacent pair is left-weighted.

Internally a permutation braid is stored as a tuple ``a`` of length n where
``a[pos]`` is the (0-based) strand sitting at position ``pos`` after the
braid is applied. Right-multiplying by sigma_i swaps positions i-1 and i;
left-multiplying relabels strands i-1 and i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidArgument, Unsupported

__all__ = [
    "BraidWord",
    "Permutation",
    "NormalForm",
    "permutation_of",
    "full_twist",
    "half_twist",
    "delta",
    "delta_bar",
    "left_normal_form",
    "words_equal",
    "parse_word",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise InvalidArgument(f"strand count must be positive, got {self.strands}")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise InvalidArgument(
                    f"letter {x} out of range for {self.strands} strands"
                )

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise InvalidArgument("cannot multiply braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def reversed(self) -> "BraidWord":
        """The word read backwards (the diagram turned upside down)."""
        return BraidWord(self.strands, self.letters[::-1])

    def on(self, strands: int) -> "BraidWord":
        """Embed on the first strands of a wider braid."""
        if strands < self.strands:
            raise InvalidArgument(f"cannot embed {self.strands} strands into {strands}")
        return BraidWord(strands, self.letters)

    def compact(self) -> str:
        """Digit-string form, as in ``"4321"``; only defined for n <= 10."""
        if self.strands > 10 or not self.is_positive:
            raise InvalidArgument("compact form needs a positive word on at most 10 strands")
        return "".join(str(x) for x in self.letters)

    def __str__(self):
        return f"{self.strands}: " + " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidArgument(f"{self.images} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        return Permutation(tuple(other(self(k)) for k in range(1, self.n + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))


def permutation_of(w: BraidWord) -> Permutation:
    """Send each strand's starting position to its final position.

    Letters act as the transpositions (i, i+1) composed left to right, so
    ``[2, 1, 4, 3]`` on 5 strands gives 1->2, 2->4, 3->1, 4->5, 5->3.
    """
    pos = list(range(w.strands))  # pos[strand] = current position
    at = list(range(w.strands))   # at[position] = strand
    for x in w.letters:
        i = abs(x)
        a, b = at[i - 1], at[i]
        at[i - 1], at[i] = b, a
        pos[a], pos[b] = i, i - 1
    return Permutation(tuple(p + 1 for p in pos))


def delta(n: int) -> BraidWord:
    """sigma_1 sigma_2 ... sigma_{n-1}."""
    return BraidWord(n, tuple(range(1, n)))


def delta_bar(n: int) -> BraidWord:
    """sigma_{n-1} ... sigma_1."""
    return BraidWord(n, tuple(range(n - 1, 0, -1)))


def full_twist(n: int) -> BraidWord:
    if n < 2:
        raise InvalidArgument(f"full twist needs n >= 2, got {n}")
    return delta(n) ** n


def half_twist(n: int) -> BraidWord:
    """A positive word for Delta_n, the positive half twist."""
    if n < 1:
        raise InvalidArgument(f"half twist needs n >= 1, got {n}")
    letters: list[int] = []
    for k in range(n - 1, 0, -1):
        letters.extend(range(1, k + 1))
    return BraidWord(n, tuple(letters))


# -- permutation braids -------------------------------------------------------

def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _right_descents(a: Sequence[int]) -> set[int]:
    return {i for i in range(1, len(a)) if a[i - 1] > a[i]}


def _left_descents(a: Sequence[int]) -> set[int]:
    inv = [0] * len(a)
    for p, strand in enumerate(a):
        inv[strand] = p
    return {i for i in range(1, len(a)) if inv[i - 1] > inv[i]}


def _times_gen(a: Sequence[int], i: int) -> tuple[int, ...]:
    b = list(a)
    b[i - 1], b[i] = b[i], b[i - 1]
    return tuple(b)


def _gen_times(i: int, a: Sequence[int]) -> tuple[int, ...]:
    lo, hi = i - 1, i
    return tuple(hi if x == lo else lo if x == hi else x for x in a)


def _simple_word(a: Sequence[int]) -> list[int]:
    """A reduced positive word for a permutation braid."""
    a = tuple(a)
    word: list[int] = []
    # peel generators off the right end until the identity is reached
    while True:
        desc = _right_descents(a)
        if not desc:
            return word[::-1]
        i = min(desc)
        a = _times_gen(a, i)
        word.append(i)


def _left_weight(x: tuple[int, ...], y: tuple[int, ...]):
    """Move letters from the head of y onto x until (x, y) is left-weighted."""
    changed = False
    while True:
        movable = _left_descents(y) - _right_descents(x)
        if not movable:
            return x, y, changed
        i = min(movable)
        x = _times_gen(x, i)
        y = _gen_times(i, y)
        changed = True


def _to_permutation(a: Sequence[int]) -> Permutation:
    n = len(a)
    inv = [0] * n
    for p, strand in enumerate(a):
        inv[strand] = p
    return Permutation(tuple(p + 1 for p in inv))


@dataclass(frozen=True)
class NormalForm:
    strands: int
    infimum: int
    factors: tuple[Permutation, ...] = field(default_factory=tuple)

    def to_word(self) -> BraidWord:
        """Flatten back to a positive word: Delta^infimum then each factor."""
        letters: list[int] = list(half_twist(self.strands).letters) * self.infimum
        for f in self.factors:
            # images[k] is where strand k ends up; rebuild position -> strand
            at = [0] * self.strands
            for strand, p in enumerate(f.images):
                at[p - 1] = strand
            letters.extend(_simple_word(at))
        return BraidWord(self.strands, tuple(letters))

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


def left_normal_form(w: BraidWord) -> NormalForm:
    if not w.is_positive:
        raise Unsupported("normal form is only implemented for positive braids",
                          reason="negative-letters")
    n = w.strands
    ident = _identity(n)
    factors: list[tuple[int, ...]] = []
    for i in w.letters:
        if factors and i not in _right_descents(factors[-1]):
            factors[-1] = _times_gen(factors[-1], i)
        else:
            factors.append(_times_gen(ident, i))

    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 2, -1, -1):
            x, y, moved = _left_weight(factors[j], factors[j + 1])
            if moved:
                factors[j], factors[j + 1] = x, y
                changed = True
        factors = [f for f in factors if f != ident]

    top = tuple(reversed(range(n)))
    infimum = 0
    while infimum < len(factors) and factors[infimum] == top:
        infimum += 1
    return NormalForm(n, infimum, tuple(_to_permutation(f) for f in factors[infimum:]))


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise InvalidArgument(
            f"strand counts differ: {a.strands} vs {b.strands}"
        )
    # positive braid relations preserve length, so a cheap exit is safe
    if a.is_positive and b.is_positive and len(a) != len(b):
        return False
    return left_normal_form(a) == left_normal_form(b)


# -- text format --------------------------------------------------------------

_FULL_RE = re.compile(r"^\s*(\d+)\s*:\s*(.*?)\s*$")


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"n: i1 i2 ... ik"`` or a compact digit string such as ``"4321"``.

    In compact form the strand count defaults to the largest index plus one.
    """
    m = _FULL_RE.match(text)
    if m:
        n = int(m.group(1))
        body = m.group(2).replace(",", " ").split()
        letters = [int(tok) for tok in body]
        if strands is not None and strands != n:
            raise InvalidArgument(f"word declares {n} strands, expected {strands}")
        return BraidWord(n, tuple(letters))
    s = text.strip()
    if re.fullmatch(r"[1-9]+", s):
        letters = [int(ch) for ch in s]
        n = strands if strands is not None else max(letters) + 1
        if n > 10:
            raise InvalidArgument("compact words are only accepted for n <= 10")
        return BraidWord(n, tuple(letters))
    if re.fullmatch(r"-?\d+(\s+-?\d+)*", s):
        letters = [int(tok) for tok in s.split()]
        n = strands if strands is not None else max(abs(x) for x in letters) + 1
        return BraidWord(n, tuple(letters))
    raise InvalidArgument(f"cannot parse braid word {text!r}")


def word_from(letters: Iterable[int], strands: int) -> BraidWord:
    return BraidWord(strands, tuple(letters))
