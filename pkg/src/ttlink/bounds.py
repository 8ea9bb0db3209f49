"""
Tetrahedron counts for the surgery parents of twisted torus links and
T-links, and the volume upper bounds they imply.

Every bound is kept as an exact rational multiple of v3, the volume of the
regular ideal tetrahedron. The primary value is always the count for the
reduced parameters; the coarser closed form that only depends on r (or r_1)
is carried alongside as ``theorem_units``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .errors import InvalidArgument, NotApplicable, WrongCase
from .reduction import reduce
from .roots import RootSubset
from .tlink import TLinkSpec, TwistedTorusParams, validate

__all__ = [
    "V3",
    "VolumeBound",
    "tetra_count_torus",
    "tetra_count_twisted",
    "tetra_count_tlink0",
    "tetra_count_tlink",
    "theorem_units_ttl",
    "theorem_units_tlink",
    "volume_bound_ttl",
    "volume_bound_dual",
    "volume_bound_tlink",
    "best_bound",
]

V3 = 1.0149416064096536


@dataclass(frozen=True)
class VolumeBound:
    v3_units: Fraction
    case_tag: str
    rule: str
    tetrahedra: int | None = None
    theorem_units: Fraction | None = None

    @property
    def v3(self) -> float:
        return V3

    @property
    def decimal(self) -> float:
        return float(self.v3_units) * V3

    @property
    def theorem_decimal(self) -> float | None:
        return None if self.theorem_units is None else float(self.theorem_units) * V3

    def to_dict(self) -> dict:
        return {
            "tetrahedra": self.tetrahedra,
            "v3_units": str(self.v3_units),
            "volume_upper": self.decimal,
            "theorem_v3_units": None if self.theorem_units is None else str(self.theorem_units),
            "theorem_volume_upper": self.theorem_decimal,
            "case": self.case_tag,
            "rule": self.rule,
            "v3": V3,
        }


def _check_reduced(n: int, m: int, r: int) -> None:
    if not (0 < n < r and 0 < m < r and n + m >= r):
        raise InvalidArgument(f"need 0 < n, m < r and n + m >= r; got n={n}, m={m}, r={r}")


def tetra_count_torus(n: int, m: int, r: int) -> int:
    _check_reduced(n, m, r)
    if r == 2:
        return 10
    if n + m == r:
        return 2 * r + 8
    return 2 * r + 10


def tetra_count_twisted(n: int, m: int, r: int, s_prime: int, root: RootSubset) -> int:
    _check_reduced(n, m, r)
    if s_prime == 0:
        raise WrongCase("s' = 0: use tetra_count_torus")
    if not 0 < s_prime < r:
        raise InvalidArgument(f"need 0 < s' < r, got s'={s_prime}, r={r}")
    if root.strands != r:
        raise InvalidArgument(f"root is on {root.strands} strands, expected {r}")
    if r == 2:
        # a half twist in a twice-punctured disk does not change the volume
        return 10
    if root.is_standard:
        return r * s_prime + 3 * r - s_prime + 9
    return r * s_prime + 6 * r - s_prime + 3


def theorem_units_ttl(r: int, s: int, root: RootSubset) -> tuple[Fraction, str]:
    if r == 2:
        return Fraction(10), "r=2"
    if s % r == 0:
        return Fraction(2 * r + 10), "s=0 mod r"
    if root.is_standard:
        return Fraction(r * r + r + 10), "standard root"
    return Fraction(r * r + 4 * r + 4), "generic root"


def volume_bound_ttl(params: TwistedTorusParams) -> VolumeBound:
    validate(params)
    p, q, r, s = params.p, abs(params.q), params.r, params.s
    d = gcd(p, q)
    if r <= d:
        return VolumeBound(Fraction(0), "satellite-zero", f"r <= gcd(p,q) = {d}: volume is zero",
                           tetrahedra=0, theorem_units=Fraction(0))
    model = reduce(p, params.q, r, s)  # a negative q is mirrored inside reduce
    n, m, sp = model.n, model.m, model.s_prime
    theorem, theorem_case = theorem_units_ttl(r, sp, params.root)
    if sp == 0:
        count = tetra_count_torus(n, m, r)
        if r == 2:
            case = "r=2"
        elif n + m == r:
            case = "s=0 mod r, n+m=r"
        else:
            case = "s=0 mod r"
        rule = "torus count: 10 if r=2, 2r+8 if n+m=r, else 2r+10"
    else:
        count = tetra_count_twisted(n, m, r, sp, params.root)
        if r == 2:
            case = "r=2"
            rule = "twice-punctured disk: same count as s'=0"
        elif params.root.is_standard:
            case = "standard root"
            rule = "twisted count: rs'+3r-s'+9"
        else:
            case = "generic root"
            rule = "twisted count: rs'+6r-s'+3"
    return VolumeBound(Fraction(count), case, f"{rule} (theorem case: {theorem_case})",
                       tetrahedra=count, theorem_units=theorem)


def volume_bound_dual(params: TwistedTorusParams) -> VolumeBound:
    validate(params)
    p, q, r, s = params.p, params.q, params.r, params.s
    problems = []
    if not params.root.is_standard:
        problems.append("root delta_r or delta-bar_r")
    if q * s <= 0:
        problems.append("q*s > 0")
    if not p > r:
        problems.append("p > r")
    if problems:
        raise NotApplicable("duality bound needs " + ", ".join(problems) + f"; got {params}",
                            reason="duality-bound-not-applicable")
    aq = abs(q)
    if aq == 2:
        units, case = 10, "|q|=2"
    elif p % aq == r:
        units, case = 2 * aq + 10, "p mod q = r"
    else:
        units, case = q * q + aq + 10, "generic q"
    return VolumeBound(Fraction(units), f"dual: {case}", "Lorenz duality exchanges q and r",
                       theorem_units=Fraction(units))


def best_bound(params: TwistedTorusParams) -> VolumeBound:
    """The smaller of the count bound and, where it applies, the duality bound."""
    bound = volume_bound_ttl(params)
    try:
        dual = volume_bound_dual(params)
    except NotApplicable:
        return bound
    return dual if dual.v3_units < bound.v3_units else bound


# -- T-links ------------------------------------------------------------------

def _residues(spec: TLinkSpec) -> list[int]:
    return [st.s % st.r for st in spec.stages]


def tetra_count_tlink0(spec: TLinkSpec) -> int:
    if not spec.stages:
        raise InvalidArgument("T-link counts need at least one stage")
    if any(_residues(spec)):
        raise WrongCase("some s_i is not a multiple of r_i: use tetra_count_tlink")
    k = spec.k
    return sum(2 * (st.r + 1) for st in spec.stages) + 6 * k + 2


def tetra_count_tlink(spec: TLinkSpec) -> int:
    if not spec.stages:
        raise InvalidArgument("T-link counts need at least one stage")
    res = _residues(spec)
    if not any(res):
        raise WrongCase("all s_i are multiples of r_i: use tetra_count_tlink0")
    total = 0
    for st, sp in zip(spec.stages, res):
        r = st.r
        total += 2 * (r + 1)  # half-disk pair
        if sp:
            total += (r - 3) * (sp - 1) + (r - 2)  # medial tetrahedra
            total += 4 * (r - 2)  # coned peripheral faces
    return total + 6 * spec.k + 2 + 2 * sum(res)


def theorem_units_tlink(r1: int, all_zero: bool) -> Fraction:
    if all_zero:
        return Fraction(r1 * r1 + 9 * r1 - 8)
    return Fraction(r1 ** 3, 3) + Fraction(5 * r1 * r1, 2) + 5 * r1 - 5


def volume_bound_tlink(spec: TLinkSpec) -> VolumeBound:
    validate(spec)
    if not spec.stages:
        return VolumeBound(Fraction(0), "torus link", "torus links are not hyperbolic",
                           tetrahedra=0, theorem_units=Fraction(0))
    if spec.k == 1:
        return volume_bound_ttl(TwistedTorusParams.from_spec(spec))
    if spec.q < 0:
        # pass to the mirror so that q > 0; every twist changes sign with it
        spec = TLinkSpec(spec.p, -spec.q, tuple(replace(st, s=-st.s) for st in spec.stages))
    d = gcd(spec.p, abs(spec.q))
    stages = spec.stages
    case = "T-link"
    if stages[0].r <= d:
        # only the pattern inside the companion solid torus carries volume
        stages = stages[1:]
        case = f"satellite (r_1 <= gcd = {d}), r_1 replaced by r_2"
    inner = TLinkSpec(spec.p, spec.q, stages)
    all_zero = not any(_residues(inner))
    if all_zero:
        count = tetra_count_tlink0(inner)
        rule = "sum 2(r_i+1) + 6k + 2"
    else:
        count = tetra_count_tlink(inner)
        rule = "half-disks + medial + coned peripheral faces + 6k + 2 + 2 sum s_i'"
    theorem = theorem_units_tlink(stages[0].r, all_zero)
    tag = f"{case}, {'all s_i = 0 mod r_i' if all_zero else 'some s_i != 0 mod r_i'}"
    return VolumeBound(Fraction(count), tag, rule, tetrahedra=count, theorem_units=theorem)
