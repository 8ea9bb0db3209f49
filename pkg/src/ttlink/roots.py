"""
Positive n-th roots of the full twist.

A positive root on n strands is a positive word using each of
sigma_1, ..., sigma_{n-1} exactly once whose n-th power is Delta^2. Up to the
far-commutation relation every such word can be written as a concatenation
of decreasing runs

    j_1, ..., 1;  j_2, ..., j_1 + 1;  ...;  n-1, ..., j_r + 1

and the set J = {j_1 < ... < j_r}, a subset of {1, ..., n-2}, names the
braid. There are 2^(n-2) of them, all distinct.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .braid import (
    BraidWord,
    full_twist,
    half_twist,
    parse_word,
    permutation_of,
    words_equal,
)
from .errors import InvalidArgument, NotARootCandidate

__all__ = [
    "RootSubset",
    "ChainDecomposition",
    "PeripheralProfile",
    "subset_to_word",
    "word_to_subset",
    "enumerate_roots",
    "enumerate_subsets",
    "is_positive_root",
    "chain_decomposition",
    "peripheral_profile",
    "chain_profile",
    "delta_bar_is_conjugate",
    "distinct_permutations",
    "conjugacy_witness",
    "parse_root",
    "standard_root",
    "standard_bar_root",
]


@dataclass(frozen=True, order=True)
class RootSubset:
    strands: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        members = tuple(sorted(set(int(j) for j in self.members)))
        object.__setattr__(self, "members", members)
        if self.strands < 2:
            raise InvalidArgument(f"roots need at least 2 strands, got {self.strands}")
        for j in members:
            if not 1 <= j <= self.strands - 2:
                raise InvalidArgument(
                    f"subset member {j} outside 1..{self.strands - 2}"
                )

    @property
    def bitmask(self) -> int:
        return sum(1 << (j - 1) for j in self.members)

    @property
    def is_delta_bar(self) -> bool:
        """sigma_{n-1} ... sigma_1, the empty subset."""
        return not self.members

    @property
    def is_delta(self) -> bool:
        """sigma_1 ... sigma_{n-1}, the full subset."""
        return self.members == tuple(range(1, self.strands - 1))

    @property
    def is_standard(self) -> bool:
        return self.is_delta or self.is_delta_bar

    def word(self) -> BraidWord:
        return subset_to_word(self)

    def __str__(self):
        inner = ",".join(str(j) for j in self.members)
        return f"n={self.strands};J={{{inner}}}"


def standard_root(n: int) -> RootSubset:
    return RootSubset(n, tuple(range(1, n - 1)))


def standard_bar_root(n: int) -> RootSubset:
    return RootSubset(n, ())


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple[tuple[int, ...], ...]

    def flatten(self) -> tuple[int, ...]:
        return tuple(x for chain in self.chains for x in chain)


@dataclass(frozen=True)
class PeripheralProfile:
    bigons_top: int
    bigons_bottom: int
    quads_top: int
    quads_bottom: int

    @property
    def bigons(self) -> int:
        return self.bigons_top + self.bigons_bottom

    @property
    def quads(self) -> int:
        return self.quads_top + self.quads_bottom

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.bigons_top, self.bigons_bottom, self.quads_top, self.quads_bottom)


def chain_decomposition(J: RootSubset) -> ChainDecomposition:
    n = J.strands
    bounds = (0,) + J.members + (n - 1,)
    chains = tuple(
        tuple(range(hi, lo, -1)) for lo, hi in zip(bounds, bounds[1:])
    )
    return ChainDecomposition(chains)


def subset_to_word(J: RootSubset) -> BraidWord:
    return BraidWord(J.strands, chain_decomposition(J).flatten())


def _check_candidate(w: BraidWord) -> None:
    n = w.strands
    if not w.is_positive:
        raise NotARootCandidate("root candidates must be positive words")
    if sorted(w.letters) != list(range(1, n)):
        raise NotARootCandidate(
            f"letters {list(w.letters)} are not a permutation of 1..{n - 1}"
        )


def _commute_to_chains(letters: Iterable[int]) -> list[int]:
    # Move a letter left past its predecessor whenever it is smaller by at
    # least two; what is left is a run of step-one decreasing chains.
    word = list(letters)
    moved = True
    while moved:
        moved = False
        for k in range(1, len(word)):
            if word[k] < word[k - 1] - 1:
                word[k - 1], word[k] = word[k], word[k - 1]
                moved = True
    return word


def word_to_subset(w: BraidWord) -> RootSubset:
    _check_candidate(w)
    word = _commute_to_chains(w.letters)
    starts = [word[0]] + [word[k] for k in range(1, len(word)) if word[k] != word[k - 1] - 1]
    return RootSubset(w.strands, tuple(j for j in starts if j != w.strands - 1))


def enumerate_subsets(n: int) -> list[RootSubset]:
    """All subsets of {1, ..., n-2}, ordered by bitmask."""
    if n < 2:
        raise InvalidArgument(f"n must be at least 2, got {n}")
    out = []
    for mask in range(1 << (n - 2)):
        out.append(RootSubset(n, tuple(j for j in range(1, n - 1) if mask >> (j - 1) & 1)))
    return out


def enumerate_roots(n: int) -> list[BraidWord]:
    return [subset_to_word(J) for J in enumerate_subsets(n)]


def is_positive_root(w: BraidWord) -> bool:
    n = w.strands
    if not w.is_positive or len(w) != n - 1:
        return False
    if sorted(w.letters) != list(range(1, n)):
        return False
    if n < 2:
        return False
    return words_equal(w ** n, full_twist(n))


# -- peripheral faces ---------------------------------------------------------

def _first_positions(letters) -> dict[int, int]:
    first: dict[int, int] = {}
    for k, x in enumerate(letters):
        first.setdefault(x, k)
    return first


def _start_profile(letters: tuple[int, ...], n: int) -> tuple[int, int]:
    """(bigons, quadrilaterals) at the start of a braid whose word begins ``letters``.

    The face in gap j at the start closes at the first sigma_j; its sides are
    the pinch vertex, the closing crossing, and one vertex for each neighbour
    sigma_{j-1}, sigma_{j+1} that fires first.
    """
    first = _first_positions(letters)
    bigons = quads = 0
    for j in range(1, n):
        neighbours = [i for i in (j - 1, j + 1) if 1 <= i <= n - 1]
        before = sum(1 for i in neighbours if first[i] < first[j])
        sides = 2 + before
        if sides == 2:
            bigons += 1
        elif sides == 4:
            quads += 1
    return bigons, quads


def peripheral_profile(J: RootSubset) -> PeripheralProfile:
    n = J.strands
    if n < 3:
        raise InvalidArgument("peripheral profile needs at least 3 strands")
    w = subset_to_word(J).letters
    bt, qt = _start_profile(w, n)
    bb, qb = _start_profile(w[::-1], n)
    return PeripheralProfile(bt, bb, qt, qb)


def chain_profile(J: RootSubset) -> PeripheralProfile:
    """Peripheral counts read off the chain decomposition alone.

    At each end: one bigon for the first chain plus one for every further
    chain of length at least two, and one quadrilateral for each of those
    further chains. The bottom end uses the chains of the reversed word
    brought back into chain form by commutation.
    """
    def count(chains):
        longer = sum(1 for c in chains[1:] if len(c) >= 2)
        return 1 + longer, longer

    top = chain_decomposition(J).chains
    rev = word_to_subset(subset_to_word(J).reversed())
    bottom = chain_decomposition(rev).chains
    bt, qt = count(top)
    bb, qb = count(bottom)
    return PeripheralProfile(bt, bb, qt, qb)


# -- conjugacy ----------------------------------------------------------------

def _moves(word: tuple[int, ...]):
    yield "cycle", word[1:] + word[:1]
    for k in range(len(word) - 1):
        if abs(word[k] - word[k + 1]) >= 2:
            yield f"commute@{k}", word[:k] + (word[k + 1], word[k]) + word[k + 2:]


def conjugacy_witness(J: RootSubset, max_depth: int | None = None):
    """Find a chain of cyclic shifts and far commutations linking the root to
    delta_n or delta-bar_n.

    Returns ``(start, moves)`` where start is ``"delta"`` or ``"delta_bar"``
    and moves lists the rewriting steps from the start word, or None if the
    search exhausts the depth bound (default 2 n^2).
    """
    n = J.strands
    target = subset_to_word(J).letters
    if max_depth is None:
        max_depth = 2 * n * n
    starts = {
        tuple(range(1, n)): "delta",
        tuple(range(n - 1, 0, -1)): "delta_bar",
    }
    parent: dict[tuple[int, ...], tuple] = {w: (None, None) for w in starts}
    queue = deque((w, 0) for w in starts)
    while queue:
        w, depth = queue.popleft()
        if w == target:
            path = []
            while parent[w][0] is not None:
                prev, move = parent[w]
                path.append(move)
                w = prev
            return starts[w], path[::-1]
        if depth >= max_depth:
            continue
        for move, nxt in _moves(w):
            if nxt not in parent:
                parent[nxt] = (w, move)
                queue.append((nxt, depth + 1))
    return None


def delta_bar_is_conjugate(n: int) -> bool:
    """Check Delta * delta_n == delta-bar_n * Delta as positive words."""
    D = half_twist(n)
    d = BraidWord(n, tuple(range(1, n)))
    db = BraidWord(n, tuple(range(n - 1, 0, -1)))
    return words_equal(D * d, db * D)


def distinct_permutations(n: int) -> bool:
    images = {permutation_of(w).images for w in enumerate_roots(n)}
    return len(images) == 1 << (n - 2)


# -- parsing ------------------------------------------------------------------

_SUBSET_RE = re.compile(r"^\s*\{\s*(.*?)\s*\}\s*$")
_NJ_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*J\s*=\s*(\{.*\})\s*$")


def _parse_members(text: str) -> tuple[int, ...]:
    m = _SUBSET_RE.match(text)
    if not m:
        raise InvalidArgument(f"cannot parse subset {text!r}")
    body = m.group(1).replace("∅", "")
    return tuple(int(tok) for tok in body.replace(",", " ").split())


def parse_root(text, strands: int | None = None) -> RootSubset:
    """Parse any accepted root notation.

    Accepted: ``delta`` / ``delta-bar`` (needs ``strands``), a subset
    ``{1,3}`` (needs ``strands``), ``n=5;J={1,3}``, a compact word ``1432``,
    a full braid text ``5: 1 4 3 2``, or a list of subset members.
    """
    if isinstance(text, RootSubset):
        root = text
    elif isinstance(text, (list, tuple)):
        if strands is None:
            raise InvalidArgument("a member list needs an explicit strand count")
        root = RootSubset(strands, tuple(text))
    else:
        s = str(text).strip()
        key = s.lower().replace("_", "-")
        if key in ("delta", "d", "standard"):
            if strands is None:
                raise InvalidArgument("'delta' needs a strand count")
            root = standard_root(strands)
        elif key in ("delta-bar", "deltabar", "dbar", "bar", "lorenz"):
            if strands is None:
                raise InvalidArgument("'delta-bar' needs a strand count")
            root = standard_bar_root(strands)
        elif _NJ_RE.match(s):
            m = _NJ_RE.match(s)
            root = RootSubset(int(m.group(1)), _parse_members(m.group(2)))
        elif _SUBSET_RE.match(s):
            if strands is None:
                raise InvalidArgument("a bare subset needs a strand count")
            root = RootSubset(strands, _parse_members(s))
        else:
            root = word_to_subset(parse_word(s, strands))
    if strands is not None and root.strands != strands:
        raise InvalidArgument(f"root is on {root.strands} strands, expected {strands}")
    return root
