"""
Twisted torus links T(p, q, r, s, beta) and T-links
T((p, q), (r_1, s_1, beta_1), ..., (r_k, s_k, beta_k)).

A twisted torus link is the single-stage T-link. Roots default to the
standard root delta_r = sigma_1 ... sigma_{r-1}.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Sequence

from .braid import BraidWord, delta, permutation_of
from .errors import InternalError, InvalidArgument, InvalidParams, NotApplicable, Unsupported
from .roots import RootSubset, parse_root, standard_bar_root, standard_root, subset_to_word

__all__ = [
    "Stage",
    "TLinkSpec",
    "TwistedTorusParams",
    "violations",
    "validate",
    "sign_normalize",
    "to_braid_word",
    "component_count",
    "is_satellite",
    "is_lorenz",
    "lorenz_dual",
    "braid_index",
    "parse_spec",
    "spec_from_json",
]


def _default_root(r: int, root) -> RootSubset | None:
    if root is None:
        return standard_root(r) if r >= 2 else None
    if isinstance(root, RootSubset):
        return root
    return parse_root(root, r if r >= 2 else None)


@dataclass(frozen=True)
class Stage:
    r: int
    s: int
    root: RootSubset | None = None

    def __post_init__(self):
        object.__setattr__(self, "root", _default_root(self.r, self.root))


@dataclass(frozen=True)
class TLinkSpec:
    p: int
    q: int
    stages: tuple[Stage, ...] = field(default_factory=tuple)

    def __post_init__(self):
        stages = tuple(
            st if isinstance(st, Stage) else Stage(*st) for st in self.stages
        )
        object.__setattr__(self, "stages", stages)

    @property
    def k(self) -> int:
        return len(self.stages)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "stages": [
                {"r": st.r, "s": st.s, "root": list(st.root.members) if st.root else None}
                for st in self.stages
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        parts = [f"{self.p},{self.q}"]
        for st in self.stages:
            members = ",".join(str(j) for j in st.root.members) if st.root else ""
            parts.append(f"({st.r},{st.s},{{{members}}})")
        return "T(" + ",".join(parts) + ")"


@dataclass(frozen=True)
class TwistedTorusParams:
    p: int
    q: int
    r: int
    s: int
    root: RootSubset | None = None

    def __post_init__(self):
        object.__setattr__(self, "root", _default_root(self.r, self.root))

    def as_spec(self) -> TLinkSpec:
        return TLinkSpec(self.p, self.q, (Stage(self.r, self.s, self.root),))

    @classmethod
    def from_spec(cls, spec: TLinkSpec) -> "TwistedTorusParams":
        if spec.k != 1:
            raise InvalidArgument(f"a twisted torus link has exactly one stage, got {spec.k}")
        st = spec.stages[0]
        return cls(spec.p, spec.q, st.r, st.s, st.root)

    def __str__(self):
        return f"T({self.p},{self.q},{self.r},{self.s})"


def _as_spec(obj) -> TLinkSpec:
    if isinstance(obj, TwistedTorusParams):
        return obj.as_spec()
    if isinstance(obj, TLinkSpec):
        return obj
    raise InvalidArgument(f"expected link parameters, got {type(obj).__name__}")


# -- validation ---------------------------------------------------------------

def violations(obj) -> list[str]:
    """Every violated inequality, one message each; empty when valid."""
    spec = _as_spec(obj)
    out = []
    if spec.p <= 0:
        out.append(f"p > 0 violated: p = {spec.p}")
    if spec.q == 0:
        out.append("q != 0 violated")
    if isinstance(obj, TwistedTorusParams) and not spec.stages:
        out.append("a twisted torus link needs r and s")
    for idx, st in enumerate(spec.stages, 1):
        tag = "r" if isinstance(obj, TwistedTorusParams) else f"r_{idx}"
        stag = "s" if isinstance(obj, TwistedTorusParams) else f"s_{idx}"
        if st.s == 0:
            out.append(f"{stag} != 0 violated")
        if st.r <= 1:
            out.append(f"{tag} > 1 violated: {tag} = {st.r}")
        if st.root is not None and st.root.strands != st.r:
            out.append(f"root on {st.root.strands} strands but {tag} = {st.r}")
    if spec.stages:
        r1 = spec.stages[0].r
        tag = "r" if isinstance(obj, TwistedTorusParams) else "r_1"
        if r1 > spec.p + abs(spec.q):
            out.append(f"{tag} <= p + |q| violated: {r1} > {spec.p + abs(spec.q)}")
        for a, b in zip(spec.stages, spec.stages[1:]):
            if not a.r > b.r:
                out.append(f"strictly decreasing r violated: {a.r} then {b.r}")
    return out


def validate(obj):
    errs = violations(obj)
    if errs:
        raise InvalidParams(errs)
    return obj


# -- realization as a closed braid --------------------------------------------

def sign_normalize(spec: TLinkSpec) -> tuple[TLinkSpec, bool]:
    """Return a spec with q > 0 and all s_i > 0, and whether it is the mirror.

    All-negative twisting is the mirror of the all-positive one; mixed signs
    have no positive realization and are rejected.
    """
    spec = _as_spec(spec)
    signs = {spec.q > 0} | {st.s > 0 for st in spec.stages}
    if signs == {True}:
        return spec, False
    if signs == {False}:
        mirror = TLinkSpec(spec.p, -spec.q, tuple(replace(st, s=-st.s) for st in spec.stages))
        return mirror, True
    raise Unsupported(
        f"{spec} mixes positive and negative twisting; no positive braid realization",
        reason="mixed-signs",
    )


def to_braid_word(obj) -> BraidWord:
    spec = validate(_as_spec(obj))
    if spec.q < 0 or any(st.s < 0 for st in spec.stages):
        try:
            mirror = str(sign_normalize(spec)[0])
        except Unsupported:
            mirror = None
        hint = f"; its mirror is {mirror}" if mirror else ""
        raise Unsupported(
            f"negative twisting in {spec} has no positive braid word{hint}",
            reason="negative-twist",
            details={"mirror": mirror},
        )
    p, q = spec.p, spec.q
    if spec.stages and spec.stages[0].r > p:
        st = spec.stages[0]
        # full twists are central, so p and q may be exchanged when s = 0 mod r
        if spec.k == 1 and st.s % st.r == 0 and st.r <= q:
            p, q = q, p
        else:
            raise Unsupported(
                f"r_1 = {st.r} > p = {p}: no closed-braid description available",
                reason="unsupported-realization",
            )
    letters = list(delta(p).letters) * q
    for st in spec.stages:
        letters.extend(subset_to_word(st.root).letters * st.s)
    return BraidWord(p, tuple(letters))


def component_count(obj) -> int:
    return len(permutation_of(to_braid_word(obj)).cycles())


def is_satellite(obj) -> tuple[bool, tuple[int, int] | None]:
    spec = validate(_as_spec(obj))
    d = gcd(spec.p, abs(spec.q))
    if spec.stages and spec.stages[0].r <= d:
        return True, (spec.p // d, spec.q // d)
    return False, None


def is_lorenz(obj) -> bool:
    """Certificate check: positive twisting with delta-bar roots throughout.

    False means the criterion does not apply, not that the link is not Lorenz.
    """
    spec = validate(_as_spec(obj))
    return (
        spec.q > 0
        and all(st.s > 0 for st in spec.stages)
        and all(st.root.is_delta_bar for st in spec.stages)
    )


def _require_standard_positive(params: TwistedTorusParams, what: str, exc=NotApplicable):
    validate(params)
    problems = []
    if params.q <= 0:
        problems.append("q > 0")
    if params.s <= 0:
        problems.append("s > 0")
    if not params.p > params.r:
        problems.append("p > r")
    if not params.root.is_standard:
        problems.append("root is delta_r or delta-bar_r")
    if problems:
        raise exc(f"{what} needs " + ", ".join(problems) + f"; got {params}")


def lorenz_dual(params: TwistedTorusParams) -> TwistedTorusParams:
    """T(p, q, r, s) = T(q + s, r, q, p - r) for positive standard-root links."""
    _require_standard_positive(params, "Lorenz duality")
    p, q, r, s = params.p, params.q, params.r, params.s
    if q < 2:
        raise NotApplicable(f"the dual would twist {q} strand; need q >= 2")
    family = standard_root if params.root.is_delta else standard_bar_root
    return TwistedTorusParams(q + s, r, q, p - r, family(q))


def braid_index(params: TwistedTorusParams) -> int:
    _require_standard_positive(params, "the braid index formula")
    p, q, r, s = params.p, params.q, params.r, params.s
    values = []
    if r <= q:
        values.append(min(p, q))
    if r >= q:
        values.append(min(s + q, r))
    if len(set(values)) != 1:
        raise InternalError(f"braid index cases disagree at r = q: {values}")
    return values[0]


# -- text and JSON forms ------------------------------------------------------

def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [x for x in parts if x]


def _stage_from_fields(fields: Sequence[str]) -> Stage:
    if len(fields) not in (2, 3):
        raise InvalidArgument(f"a stage is (r, s) or (r, s, root), got {fields}")
    r, s = int(fields[0]), int(fields[1])
    root = parse_root(fields[2], r) if len(fields) == 3 else None
    return Stage(r, s, root)


def parse_spec(text: str):
    """Parse ``T(p,q)``, ``T(p,q,r,s)``, ``T(p,q,(r1,s1,J1),...)`` or ``T((p,q),(r1,s1),...)``.

    Returns TwistedTorusParams for the flat four-argument form and TLinkSpec
    otherwise. Roots are any form accepted by :func:`parse_root`, e.g.
    ``{1,3}``, ``delta``, ``1432``.
    """
    s = text.strip()
    m = re.fullmatch(r"T\s*\((.*)\)", s, flags=re.S)
    if not m:
        raise InvalidArgument(f"cannot parse link spec {text!r}")
    parts = _split_top(m.group(1))
    if parts and parts[0].startswith("("):
        head = _split_top(parts[0][1:-1])
        p, q = int(head[0]), int(head[1])
        rest = parts[1:]
    else:
        if len(parts) < 2:
            raise InvalidArgument(f"cannot parse link spec {text!r}")
        p, q = int(parts[0]), int(parts[1])
        rest = parts[2:]
    if rest and all(not x.startswith("(") for x in rest):
        if len(rest) not in (2, 3):
            raise InvalidArgument(f"expected T(p,q,r,s[,root]), got {text!r}")
        st = _stage_from_fields(rest)
        return TwistedTorusParams(p, q, st.r, st.s, st.root)
    stages = []
    for x in rest:
        if not (x.startswith("(") and x.endswith(")")):
            raise InvalidArgument(f"bad stage {x!r} in {text!r}")
        stages.append(_stage_from_fields(_split_top(x[1:-1])))
    return TLinkSpec(p, q, tuple(stages))


def spec_from_json(data) -> TLinkSpec:
    if isinstance(data, str):
        data = json.loads(data)
    stages = []
    for st in data.get("stages", []):
        r = int(st["r"])
        root = st.get("root")
        if root is not None and not isinstance(root, RootSubset):
            root = parse_root(root, r)
        stages.append(Stage(r, int(st["s"]), root))
    return TLinkSpec(int(data["p"]), int(data["q"]), tuple(stages))
