"""Command-line front end: ``ttlink <command> ... [--json]``.

On success ``--json`` prints the command payload; on a domain error it
prints ``{"status": "error", "reason": ..., "diagnostics": [...]}`` and the
process exits 1. Usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Any, Callable, Sequence

from . import bounds, diagram, reduction, roots, tlink
from .errors import TTLinkError

__all__ = ["CommandResult", "UsageError", "dispatch", "main"]


@dataclass
class CommandResult:
    status: str
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)
    text: str = ""
    reason: str | None = None
    json_mode: bool = False

    @property
    def exit_code(self) -> int:
        if self.status == "ok":
            return 0
        return 2 if self.reason == "usage" else 1

    def to_json(self) -> str:
        if self.status == "ok":
            return json.dumps(self.payload)
        return json.dumps({"status": self.status, "reason": self.reason,
                           "diagnostics": self.diagnostics, "payload": self.payload})


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- helpers ------------------------------------------------------------------

def _root_payload(J: roots.RootSubset) -> dict:
    w = roots.subset_to_word(J)
    return {
        "strands": J.strands,
        "subset": list(J.members),
        "bitmask": J.bitmask,
        "word": w.compact() if J.strands <= 10 else " ".join(map(str, w.letters)),
        "letters": list(w.letters),
    }


def _load_spec(arg: str):
    """A spec from a file (JSON or text form), '-' for stdin, or inline text."""
    if arg == "-":
        text = sys.stdin.read()
    elif Path(arg).is_file():
        text = Path(arg).read_text()
    else:
        text = arg
    text = text.strip()
    if text.startswith("{"):
        return tlink.spec_from_json(text)
    return tlink.parse_spec(text)


def _params(a) -> tlink.TwistedTorusParams:
    root = roots.parse_root(a.root, a.r) if a.root is not None else None
    return tlink.TwistedTorusParams(a.p, a.q, a.r, a.s, root)


def _threads() -> int:
    env = os.environ.get("TTLINK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def _fan_out(fn: Callable, items: Sequence) -> list:
    # results come back in input order regardless of worker scheduling
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        return list(pool.map(fn, items))


# -- commands -----------------------------------------------------------------

def cmd_roots(a) -> CommandResult:
    entries = []
    for J in roots.enumerate_subsets(a.n):
        e = _root_payload(J)
        if a.verify:
            e["verified"] = roots.is_positive_root(roots.subset_to_word(J))
        entries.append(e)
    lines = [f"{len(entries)} positive {a.n}-th roots of the full twist"]
    for e in entries:
        mark = "" if "verified" not in e else ("  ok" if e["verified"] else "  FAILED")
        lines.append(f"  {e['word']:<12} {{{','.join(map(str, e['subset']))}}}{mark}")
    status = "ok" if all(e.get("verified", True) for e in entries) else "error"
    return CommandResult(status, {"n": a.n, "count": len(entries), "roots": entries},
                         [] if status == "ok" else ["a root failed verification"],
                         "\n".join(lines), None if status == "ok" else "verification-failed")


def cmd_root_classify(a) -> CommandResult:
    J = roots.parse_root(a.word, a.n)
    w = roots.subset_to_word(J)
    payload = _root_payload(J)
    payload["chains"] = [list(c) for c in roots.chain_decomposition(J).chains]
    payload["is_root"] = roots.is_positive_root(w)
    payload["standard"] = "delta" if J.is_delta else "delta_bar" if J.is_delta_bar else None
    if J.strands >= 3:
        prof = roots.peripheral_profile(J)
        payload["profile"] = dict(zip(("bigons_top", "bigons_bottom", "quads_top", "quads_bottom"),
                                      prof.as_tuple()))
    text = (f"{a.word} -> normal form {payload['word']}, subset {{{','.join(map(str, J.members))}}}"
            f" ({J}), positive root: {payload['is_root']}")
    return CommandResult("ok", payload, text=text)


def cmd_reduce(a) -> CommandResult:
    model = reduction.reduce(a.p, a.q, a.r, a.s)
    payload = model.to_dict()
    payload["slot_pair"] = list(model.slot_pair)
    payload["ratio"] = str(model.ratio())
    form = "M(m,n)" if model.swapped else "M(n,m)"
    text = (f"M({a.p},{abs(a.q)},{a.r},{a.s}) ~ M({model.slot_pair[0]},{model.slot_pair[1]},"
            f"{a.r},{model.s_prime})  n={model.n} m={model.m} s'={model.s_prime}"
            f" cf={list(model.cf)} [{form}]")
    return CommandResult("ok", payload, text=text)


def cmd_faces(a) -> CommandResult:
    J = roots.parse_root(a.root, a.r)
    payload: dict = {"root": _root_payload(J), "s": a.s}
    lines = []
    methods = []
    if a.brute or not a.closed:
        methods.append(("brute", diagram.face_census_bruteforce))
    if a.closed or not a.brute:
        methods.append(("closed", diagram.face_census_closed))
    for name, fn in methods:
        census = fn(J, a.s)
        payload[name] = census.to_dict()
        lines.append(f"{name:>6}: " + " ".join(f"{k}={v}" for k, v in census.to_dict().items()))
    if "brute" in payload and "closed" in payload:
        payload["agree"] = payload["brute"] == payload["closed"]
        lines.append(f"agree: {payload['agree']}")
    if a.dump:
        dump = diagram.build_projection(J, a.s).dump()
        payload["dump"] = dump
        lines.append(dump.rstrip())
    return CommandResult("ok", payload, text="\n".join(lines))


def _bound_text(bound: bounds.VolumeBound, label: str) -> str:
    tet = "" if bound.tetrahedra is None else f"{bound.tetrahedra} tetrahedra, "
    out = f"{label}: {tet}Vol < {bound.v3_units} v3 = {bound.decimal:.6f}  [{bound.case_tag}]"
    if bound.theorem_units is not None and bound.theorem_units != bound.v3_units:
        out += f"\n  closed form: {bound.theorem_units} v3 = {bound.theorem_decimal:.6f}"
    return out


def cmd_bound(a) -> CommandResult:
    if a.kind == "tlink":
        spec = _load_spec(a.spec)
        if isinstance(spec, tlink.TwistedTorusParams):
            spec = spec.as_spec()
        b = bounds.volume_bound_tlink(spec)
        return CommandResult("ok", b.to_dict(), text=_bound_text(b, str(spec)))
    params = _params(a)
    if a.kind == "dual":
        b = bounds.volume_bound_dual(params)
    elif a.best:
        b = bounds.best_bound(params)
    else:
        b = bounds.volume_bound_ttl(params)
    return CommandResult("ok", b.to_dict(), text=_bound_text(b, str(params)))


def cmd_braid_word(a) -> CommandResult:
    spec = _load_spec(a.spec)
    w = tlink.to_braid_word(spec)
    sat, companion = tlink.is_satellite(spec)
    payload = {
        "spec": tlink._as_spec(spec).to_dict(),
        "strands": w.strands,
        "letters": list(w.letters),
        "length": len(w),
        "components": tlink.component_count(spec),
        "satellite": sat,
        "companion": list(companion) if companion else None,
        "lorenz": tlink.is_lorenz(spec),
    }
    text = (f"{w}\nlength {len(w)}, {payload['components']} component(s), "
            f"satellite: {sat}, Lorenz certificate: {payload['lorenz']}")
    return CommandResult("ok", payload, text=text)


def cmd_braid_index(a) -> CommandResult:
    params = _params(a)
    idx = tlink.braid_index(params)
    return CommandResult("ok", {"braid_index": idx}, text=f"braid index of {params}: {idx}")


def cmd_dual(a) -> CommandResult:
    params = _params(a)
    d = tlink.lorenz_dual(params)
    payload = {"p": d.p, "q": d.q, "r": d.r, "s": d.s,
               "root": "delta" if d.root.is_delta else "delta_bar"}
    return CommandResult("ok", payload, text=f"{params} = {d}")


# -- sweeps -------------------------------------------------------------------

def _sweep_roots(a):
    cases = [(n, J) for n in range(2, a.n_max + 1) for J in roots.enumerate_subsets(n)]

    def check(case):
        n, J = case
        w = roots.subset_to_word(J)
        errs = []
        if roots.word_to_subset(w) != J:
            errs.append("round trip")
        if n <= a.verify_max and not roots.is_positive_root(w):
            errs.append("not a root")
        return f"n={n} {J}: " + ", ".join(errs) if errs else None

    fails = [x for x in _fan_out(check, cases) if x]
    for n in range(2, a.n_max + 1):
        if len(roots.enumerate_roots(n)) != 1 << (n - 2):
            fails.append(f"n={n}: wrong count")
        if not roots.distinct_permutations(n):
            fails.append(f"n={n}: permutations not distinct")
    return len(cases), fails


def _sweep_faces(a):
    cases = [(J, s) for r in range(3, a.r_max + 1) for J in roots.enumerate_subsets(r)
             for s in range(1, a.s_max + 1)]

    def check(case):
        J, s = case
        b = diagram.face_census_bruteforce(J, s)
        c = diagram.face_census_closed(J, s)
        errs = diagram.census_violations(b, J.strands, s)
        if b != c:
            errs.append(f"brute {b.to_dict()} != closed {c.to_dict()}")
        return f"{J} s={s}: " + "; ".join(errs) if errs else None

    return len(cases), [x for x in _fan_out(check, cases) if x]


def _sweep_reduce(a):
    rng = random.Random(a.seed)
    cases = []
    while len(cases) < a.count:
        p, q = rng.randint(1, a.max), rng.randint(1, a.max)
        d = gcd(p, q)
        if d + 1 > p + q:
            continue
        cases.append((p, q, rng.randint(d + 1, min(p + q, d + 1 + rng.choice([10, 1000, p + q]))),
                      rng.randint(-10 ** 6, 10 ** 6)))

    def check(case):
        p, q, r, s = case
        m = reduction.reduce(p, q, r, s)
        errs = []
        if m.ratio() != Fraction(p, q):
            errs.append("reconstruction")
        if m.s_prime != s % r:
            errs.append("s'")
        key = (sorted((m.n, m.m)), m.s_prime)
        t = reduction.reduce(p, q + p, r, s)
        if (sorted((t.n, t.m)), t.s_prime) != key:
            errs.append("twist invariance")
        t = reduction.reduce(q, p, r, s)
        if (sorted((t.n, t.m)), t.s_prime) != key:
            errs.append("swap invariance")
        return f"{case}: " + ", ".join(errs) if errs else None

    return len(cases), [x for x in _fan_out(check, cases) if x]


def _sweep_theorem(a):
    fails = []
    for r in range(3, a.r_max + 1):
        std = max(bounds.tetra_count_twisted(r - 1, r - 1, r, sp, roots.standard_root(r))
                  for sp in range(1, r))
        if std != r * r + r + 10:
            fails.append(f"r={r}: standard max {std}")
        if r >= 4:
            gen = max(bounds.tetra_count_twisted(r - 1, r - 1, r, sp, roots.RootSubset(r, (1,)))
                      for sp in range(1, r))
            if gen != r * r + 4 * r + 4:
                fails.append(f"r={r}: generic max {gen}")
    return a.r_max - 2, fails


def _stage_structures(r1: int):
    others = list(range(2, r1))
    for mask in range(1 << len(others)):
        lower = [x for i, x in enumerate(sorted(others, reverse=True)) if mask >> i & 1]
        yield [r1] + lower


def _residue_choices(rs):
    if not rs:
        yield []
        return
    for sp in range(rs[0]):
        for rest in _residue_choices(rs[1:]):
            yield [sp] + rest


def _sweep_tlink(a):
    count = 0
    fails = []
    for r1 in range(2, a.r1_max + 1):
        for rs in _stage_structures(r1):
            for res in _residue_choices(rs):
                count += 1
                spec = tlink.TLinkSpec(r1 + 1, 1, tuple(tlink.Stage(r, sp or r) for r, sp in zip(rs, res)))
                if any(res):
                    t = bounds.tetra_count_tlink(spec)
                else:
                    t = bounds.tetra_count_tlink0(spec)
                limit = bounds.theorem_units_tlink(r1, not any(res))
                if not t <= limit:
                    fails.append(f"stages {rs} residues {res}: {t} > {limit}")
    return count, fails


SWEEPS = {
    "roots": _sweep_roots,
    "faces": _sweep_faces,
    "reduce": _sweep_reduce,
    "theorem": _sweep_theorem,
    "tlink": _sweep_tlink,
}


def cmd_sweep(a) -> CommandResult:
    n, fails = SWEEPS[a.which](a)
    payload = {"sweep": a.which, "cases": n, "failures": fails, "ok": not fails}
    text = f"sweep {a.which}: {n} cases, {len(fails)} failures" + "".join(f"\n  {x}" for x in fails[:20])
    if fails:
        return CommandResult("error", payload, [f"{len(fails)} failures"], text, "sweep-failed")
    return CommandResult("ok", payload, text=text)


# -- parser -------------------------------------------------------------------

def _add_pqrs(p):
    for name in ("p", "q", "r", "s"):
        p.add_argument(name, type=int)
    p.add_argument("--root", default=None,
                   help="delta (default), delta-bar, {j,...}, n=R;J={...} or a word such as 1432")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ttlink", description="Twisted torus links: roots, censuses, bounds.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("roots", cmd_roots, help="enumerate positive n-th roots of the full twist")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check beta^n = Delta^2 by normal form")

    p = add("root-classify", cmd_root_classify, help="normal form and subset of a root word")
    p.add_argument("word")
    p.add_argument("--n", type=int, default=None, help="strand count (default: max index + 1)")

    p = add("reduce", cmd_reduce, help="reduce M(p,q,r,s) by the truncated Euclidean algorithm")
    for name in ("p", "q", "r", "s"):
        p.add_argument(name, type=int)

    p = add("faces", cmd_faces, help="face census of the projection of beta^s")
    p.add_argument("--root", required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--brute", action="store_true")
    g.add_argument("--closed", action="store_true")
    p.add_argument("--dump", action="store_true", help="print the face list of the complex")

    p = add("bound", cmd_bound, help="volume upper bounds")
    bsub = p.add_subparsers(dest="kind", parser_class=_Parser)
    bsub.required = True
    for kind in ("ttl", "dual"):
        bp = bsub.add_parser(kind)
        bp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        _add_pqrs(bp)
        if kind == "ttl":
            bp.add_argument("--best", action="store_true", help="also try the duality bound")
    bp = bsub.add_parser("tlink")
    bp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    bp.add_argument("spec", help="file with a JSON or text spec, '-' for stdin, or inline text")

    p = add("braid-word", cmd_braid_word, help="closed-braid word of a twisted torus link or T-link")
    p.add_argument("spec")

    p = add("braid-index", cmd_braid_index, help="braid index of a positive standard-root T(p,q,r,s)")
    _add_pqrs(p)

    p = add("dual", cmd_dual, help="Lorenz dual T(q+s, r, q, p-r)")
    _add_pqrs(p)

    p = add("sweep", cmd_sweep, help="invariant sweeps")
    ssub = p.add_subparsers(dest="which", parser_class=_Parser)
    ssub.required = True
    sp = ssub.add_parser("roots")
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--verify-max", type=int, default=8)
    sp = ssub.add_parser("faces")
    sp.add_argument("--r-max", type=int, default=7)
    sp.add_argument("--s-max", type=int, default=6)
    sp = ssub.add_parser("reduce")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--max", type=int, default=10 ** 6)
    sp.add_argument("--seed", type=int, default=0)
    sp = ssub.add_parser("theorem")
    sp.add_argument("--r-max", type=int, default=50)
    sp = ssub.add_parser("tlink")
    sp.add_argument("--r1-max", type=int, default=8)
    for sp in ssub.choices.values():
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return parser


def dispatch(argv: Sequence[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return CommandResult("error", None, [str(exc)], reason="usage")
    try:
        result = args.func(args)
    except TTLinkError as exc:
        diags = [str(exc)]
        if getattr(exc, "details", None):
            diags.append(json.dumps(exc.details, default=str))
        result = CommandResult("error", {"details": exc.details}, diags, reason=exc.reason)
    result.json_mode = args.json
    return result


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    result = dispatch(argv)
    if result.reason == "usage":
        print(result.diagnostics[0], file=sys.stderr)
        print("run 'ttlink --help' for usage", file=sys.stderr)
        return 2
    if result.json_mode:
        print(result.to_json())
    elif result.status == "ok" or result.text:
        print(result.text)
    if result.status != "ok" and not result.json_mode:
        for d in result.diagnostics:
            print(f"error ({result.reason}): {d}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
