"""Command-line entry point.

Exit status: 0 for success or a true verdict, 1 for a false verdict,
2 for usage and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .constructions import (
    SpreadAssignment,
    classify_profile,
    dillon_full_spread,
    generate_profiles,
    parse_profile,
    partial_spread_gbent,
    profile_condition_holds,
    psap_explicit,
    psap_trace_pair,
    realize_profile,
)
from .cyclotomic import MAX_T
from .errors import GbentError, NotGbent, RegularityViolation
from .gbfunc import (
    distribution_pattern,
    dual,
    dump_table,
    inversion_identity_holds,
    is_gbent,
    parse_table,
    regular_exponents,
    value_distribution,
    walsh_transform,
)
from .gf2m import FieldCtx, FieldError
from .rds import GraphSet, rds_report, vectorial_params
from .space import MAX_N, DotForm, SpaceError, TraceForm, desarguesian_spread, dump_spread, parse_spread
from .vectorial import (
    digits_bijection,
    dump_vectorial,
    is_vectorial_gbent,
    nyberg_bound,
    parse_bijection,
    parse_vectorial,
    random_bijection,
    spread_bijection_vectorial,
)

DEFAULT_SEED = 20150601


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    t: int | None = None
    m: int | None = None
    json: bool = False
    workers: int = 1

    def validate(self) -> None:
        if self.n is not None and not 1 <= self.n <= MAX_N:
            raise UsageError(f"n must be in 1..{MAX_N}")
        if self.t is not None and not 1 <= self.t <= MAX_T:
            raise UsageError(f"t must be in 1..{MAX_T}")


def _ints(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _field(m: int, modulus: str | None) -> FieldCtx:
    return FieldCtx(m, int(modulus, 16)) if modulus else FieldCtx.default(m)


def _spread(args):
    if args.spread:
        return parse_spread(Path(args.spread).read_text())
    if args.desarguesian:
        return desarguesian_spread(_field(args.desarguesian, args.modulus))
    raise UsageError("give a spread file (--spread) or a half-dimension (--desarguesian M)")


def _form(args, n: int):
    if getattr(args, "form", "dot") == "trace":
        if n % 2:
            raise UsageError("the trace form needs even n")
        return TraceForm(_field(n // 2, args.modulus))
    return DotForm(n)


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _report(args, fields: dict, lines: list[str] | None = None) -> None:
    if args.json:
        print(json.dumps(fields, sort_keys=True))
        return
    if lines is None:
        lines = [f"{k}: {_txt(v)}" for k, v in fields.items()]
    print("\n".join(lines))


def _txt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "n/a"
    return str(v)


# -- subcommands -------------------------------------------------------------------


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "dillon":
        spread = _spread(args)
        f = dillon_full_spread(spread, _ints(args.k), args.r, args.t, _form(args, spread.n))
    elif kind == "psap":
        if not args.g:
            raise UsageError("psap needs one --g bit string per component function")
        ctx = _field(args.m, args.modulus)
        f = psap_explicit(ctx, [[int(ch) for ch in g] for g in args.g])
    elif kind == "trace-pair":
        ctx = _field(args.m, args.modulus)
        f = psap_trace_pair(ctx, int(args.a, 16), int(args.b, 16))
    elif kind == "partial-spread":
        spread = _spread(args)
        form = _form(args, spread.n)
        if args.profile:
            assign = realize_profile(parse_profile(args.profile, args.t), spread)
        else:
            if args.k is None:
                raise UsageError("partial-spread needs --k values or a --profile")
            values = _ints(args.k)
            members = _ints(args.members) if args.members else list(range(len(values)))
            assign = SpreadAssignment(spread.subset(members), tuple(values), args.rho, args.t)
        f = partial_spread_gbent(assign, form)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    _emit(args, dump_table(f))
    return 0


def cmd_spread(args) -> int:
    _emit(args, dump_spread(desarguesian_spread(_field(args.m, args.modulus))))
    return 0


def _load(path: str):
    return parse_table(Path(path).read_text())


def cmd_verify(args) -> int:
    f = _load(args.file)
    gbent = is_gbent(f)
    regular = None
    pattern = None
    if f.n % 2 == 0:
        regular = all(j is not None for j in regular_exponents(walsh_transform(f)))
        if gbent:
            pattern = distribution_pattern(value_distribution(f), f.t, f.n // 2) is not None
    fields = {
        "n": f.n,
        "t": f.t,
        "form": f.form.name,
        "gbent": gbent,
        "regular": regular,
        "inversion_identity": inversion_identity_holds(f),
        "distribution_pattern": pattern,
    }
    if gbent and regular is False:
        raise RegularityViolation("gbent function with a non-regular Walsh value")
    _report(args, fields, [f"gbent: {_txt(gbent)}, regular: {_txt(regular)}"] + [
        f"{k}: {_txt(v)}" for k, v in fields.items() if k not in ("gbent", "regular")
    ])
    return 0 if gbent else 1


def cmd_spectrum(args) -> int:
    f = _load(args.file)
    spec = walsh_transform(f)
    if args.json:
        print(json.dumps({"n": f.n, "t": f.t, "values": spec.values.tolist()}))
    else:
        for u in range(len(spec)):
            print(f"{u:x}: {' '.join(str(int(c)) for c in spec.values[u])}")
    return 0


def cmd_dual(args) -> int:
    f = _load(args.file)
    try:
        fstar = dual(f)
    except NotGbent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, dump_table(fstar))
    return 0


def cmd_distribution(args) -> int:
    f = _load(args.file)
    counts = value_distribution(f)
    k = distribution_pattern(counts, f.t, f.n // 2) if f.n % 2 == 0 else None
    _report(args, {"counts": counts, "pattern_index": k},
            [f"b_{j}: {b}" for j, b in enumerate(counts)] + [f"pattern_index: {_txt(k)}"])
    return 0


def _q_to_t(q: int) -> int:
    t = q.bit_length() - 1
    if q < 2 or 1 << t != q:
        raise UsageError(f"q must be a power of two, got {q}")
    return t


def cmd_classify(args) -> int:
    t = _q_to_t(args.q)
    p = parse_profile(args.profile, t)
    cond = classify_profile(p, args.m)
    holds = profile_condition_holds(p, args.m)
    if (cond is not None) != holds:
        raise AssertionError("classification and the root-of-unity condition disagree")
    _report(args, {"profile": str(p), "condition": cond, "sum_condition": holds},
            [f"condition {cond}" if cond else "no condition (not a partial spread gbent profile)"])
    return 0 if cond else 1


def cmd_enumerate(args) -> int:
    _q_to_t(args.q)
    profiles = generate_profiles(args.q, args.m, args.amin, args.amax)
    if args.json:
        print(json.dumps([
            {"rho": p.rho, "A": p.A, "counts": list(p.counts), "condition": classify_profile(p, args.m)}
            for p in profiles
        ]))
    else:
        for p in profiles:
            print(f"{p.rho},{p.A},{','.join(map(str, p.counts))}  {classify_profile(p, args.m)}")
    return 0


def cmd_vectorial(args) -> int:
    n, t = args.n, args.t
    bound = nyberg_bound(n, t)
    m = args.m if args.m is not None else bound
    q = 1 << t
    if args.spread:
        spread = parse_spread(Path(args.spread).read_text())
    else:
        spread = desarguesian_spread(_field(n // 2, args.modulus))
    if args.bijection:
        phi = parse_bijection(Path(args.bijection).read_text())
    elif args.seed is not None:
        phi = random_bijection(q, m, random.Random(args.seed))
    else:
        phi = digits_bijection(q, m)
    F = spread_bijection_vectorial(spread, phi, t, _form(args, n))
    ok = is_vectorial_gbent(F, workers=args.workers)
    if args.output:
        Path(args.output).write_text(dump_vectorial(F))
    else:
        sys.stdout.write(dump_vectorial(F))
    print(f"vectorial gbent: {_txt(ok)} (n={n}, t={t}, m={m}, bound={bound})", file=sys.stderr)
    return 0 if ok else 1


def cmd_rds(args) -> int:
    F = parse_vectorial(Path(args.file).read_text())
    R = GraphSet.from_vectorial(F)
    report = rds_report(R, vectorial_params(F.n))
    ok = report["characters"] and report["counting"] is not False
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        p = report["params"]
        print(f"params: ({p['mu']},{p['nu']},{p['k']},{p['lambda']})")
        print(f"counting: {_txt(report['counting'])}")
        print(f"characters: {_txt(report['characters'])}")
        for fl in report["failing_characters"]:
            print(f"  failing chi(u={fl['u']:x}, c={tuple(fl['c'])}): |chi|^2={_txt(fl['squared'])}, "
                  f"required {fl['expected']}")
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    results = run_all(args.seed)
    if args.json:
        print(json.dumps([r.__dict__ for r in results]))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON report instead of text")
    common.add_argument("--modulus", help="hex irreducible polynomial overriding the default field modulus")
    common.add_argument("--workers", type=int, default=int(os.environ.get("GBENT_WORKERS", "1")),
                        help="worker threads for component checks (env GBENT_WORKERS)")

    p = argparse.ArgumentParser(prog="gbent", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a gbent function table")
    c.add_argument("kind", choices=["dillon", "psap", "trace-pair", "partial-spread"])
    c.add_argument("--spread", help="spread file")
    c.add_argument("--desarguesian", type=int, metavar="M", help="use the Desarguesian spread of V_2M")
    c.add_argument("--t", type=int, default=2, help="q = 2^t (default 2)")
    c.add_argument("--k", help="comma-separated member values")
    c.add_argument("--r", type=int, default=0, help="value at 0 (dillon)")
    c.add_argument("--rho", type=int, default=0, help="value at 0 (partial-spread)")
    c.add_argument("--members", help="comma-separated member indices (partial-spread)")
    c.add_argument("--profile", help="realize a profile 'rho=..,A=..,c=..' on the first A members")
    c.add_argument("--m", type=int, default=2, help="field degree (psap, trace-pair)")
    c.add_argument("--g", action="append", help="bit string G_j(s), s = 0..2^m-1 (psap; repeat per j)")
    c.add_argument("--a", default="1", help="hex field element a (trace-pair)")
    c.add_argument("--b", default="2", help="hex field element b (trace-pair)")
    c.add_argument("--form", choices=["dot", "trace"], default="dot")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("spread", parents=[common], help="write the Desarguesian spread of V_2m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_spread)

    for name, func, helptext in [
        ("verify", cmd_verify, "gbent / regular / inversion checks on a table file"),
        ("spectrum", cmd_spectrum, "exact Walsh spectrum of a table file"),
        ("dual", cmd_dual, "dual of a gbent table file"),
        ("distribution", cmd_distribution, "value distribution b_j of a table file"),
    ]:
        v = sub.add_parser(name, parents=[common], help=helptext)
        v.add_argument("file")
        if name == "dual":
            v.add_argument("-o", "--output")
        v.set_defaults(func=func)

    k = sub.add_parser("classify", parents=[common], help="classify a profile rho,A,c1,...,c_(q-1)")
    k.add_argument("profile")
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--q", type=int, required=True)
    k.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate-profiles", parents=[common], help="all admissible profiles")
    e.add_argument("q", type=int)
    e.add_argument("m", type=int)
    e.add_argument("amin", type=int)
    e.add_argument("amax", type=int)
    e.set_defaults(func=cmd_enumerate)

    w = sub.add_parser("vectorial", parents=[common],
                       help="spread-bijection vectorial gbent function (U_0 = first spread member)")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--t", type=int, required=True)
    w.add_argument("--m", type=int, help="target dimension (default n/(2t))")
    w.add_argument("--spread", help="complete spread file (default Desarguesian)")
    w.add_argument("--bijection", help="bijection file with lines 's -> (a_1,...,a_m)'")
    w.add_argument("--seed", type=int, help="random bijection seed (default: base-q digit map)")
    w.add_argument("--form", choices=["dot", "trace"], default="dot")
    w.add_argument("-o", "--output")
    w.set_defaults(func=cmd_vectorial)

    r = sub.add_parser("rds-check", parents=[common], help="relative difference set report")
    r.add_argument("file")
    r.set_defaults(func=cmd_rds)

    t = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    t.add_argument("--seed", type=int, default=DEFAULT_SEED)
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.command, getattr(args, "n", None), getattr(args, "t", None),
                    getattr(args, "m", None), args.json, args.workers)
    try:
        cfg.validate()
        return args.func(args)
    except (UsageError, GbentError, FieldError, SpaceError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
