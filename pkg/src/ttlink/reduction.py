"""
Reduce the slope of the torus link in M(p, q, r, s) by a truncated Euclidean
algorithm.

Starting from the pair (p, q) the larger entry is repeatedly replaced by the
difference, and the process stops at the first pair with both entries below
r. Each run of subtractions against the same entry is one continued-fraction
coefficient, so that

    p/q = a_0 + 1/(a_1 + 1/( ... 1/(a_k + m/n)))

with a_1, ..., a_k >= 1. The twist parameter is reduced to s mod r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InvalidArgument, ReducibleToSatellite

__all__ = ["ReducedModel", "reduce", "reconstruct"]


@dataclass(frozen=True)
class ReducedModel:
    n: int
    m: int
    r: int
    s_prime: int
    cf: tuple[int, ...]
    swapped: bool
    mirrored: bool = False

    def __post_init__(self):
        object.__setattr__(self, "cf", tuple(self.cf))
        errs = []
        if not (0 < self.n < self.r and 0 < self.m < self.r):
            errs.append(f"need 0 < n, m < r, got n={self.n}, m={self.m}, r={self.r}")
        if self.n + self.m < self.r:
            errs.append(f"need n + m >= r, got {self.n} + {self.m} < {self.r}")
        if not 0 <= self.s_prime < self.r:
            errs.append(f"need 0 <= s' < r, got {self.s_prime}")
        if any(a < 1 for a in self.cf[1:]) or (self.cf and self.cf[0] < 0):
            errs.append(f"continued fraction coefficients out of range: {self.cf}")
        if errs:
            raise InvalidArgument("; ".join(errs))

    @property
    def slot_pair(self) -> tuple[int, int]:
        """The reduced pair in the (p, q) slot order: M(slot_pair[0], slot_pair[1], r, s')."""
        return (self.m, self.n) if self.swapped else (self.n, self.m)

    def ratio(self) -> Fraction:
        return reconstruct(self.cf, self.m, self.n)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "s_prime": self.s_prime,
            "cf": list(self.cf),
            "swapped": self.swapped,
            "mirrored": self.mirrored,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReducedModel":
        return cls(
            n=d["n"], m=d["m"], r=d["r"], s_prime=d["s_prime"], cf=tuple(d["cf"]),
            swapped=d.get("swapped", False), mirrored=d.get("mirrored", False),
        )


def reduce(p: int, q: int, r: int, s: int = 0) -> ReducedModel:
    if p <= 0:
        raise InvalidArgument(f"p must be positive, got {p}")
    if q == 0:
        raise InvalidArgument("q must be nonzero")
    mirrored = q < 0
    if mirrored:
        # the mirror image negates both twists: M(p,-q,r,s) mirrors M(p,q,r,-s)
        q, s = -q, -s
    if r <= 1:
        raise InvalidArgument(f"r must exceed 1, got {r}")
    if r > p + q:
        raise InvalidArgument(f"r = {r} exceeds p + |q| = {p + q}")
    d = gcd(p, q)
    if r <= d:
        raise ReducibleToSatellite(
            f"r = {r} <= gcd(p, q) = {d}: satellite with companion T({p // d}, {q // d})",
            details={"gcd": d, "companion": [p // d, q // d]},
        )

    num, den = p, q  # the current level works on num/den
    cf: list[int] = []
    level = 0
    while not (num < r and den < r):
        if den >= r:
            k = num // den
        else:
            # smallest k with num - k*den < r; stays positive since r > den
            k = -(-(num - r + 1) // den)
        num -= k * den
        cf.append(k)
        if num < r and den < r:
            break
        num, den = den, num
        level += 1

    # num/den is m/n; at even levels num sits in the p slot
    return ReducedModel(n=den, m=num, r=r, s_prime=s % r, cf=tuple(cf),
                        swapped=level % 2 == 0, mirrored=mirrored)


def reconstruct(cf: Sequence[int], m: int, n: int) -> Fraction:
    """Evaluate a_0 + 1/(a_1 + ... 1/(a_k + m/n)) exactly."""
    x = Fraction(m, n)
    if not cf:
        return x
    x += cf[-1]
    for a in reversed(cf[:-1]):
        x = a + 1 / x
    return x
