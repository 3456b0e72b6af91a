"""Command-line interface.

Exit codes: 0 success, 1 axiom violation, 2 format or I/O error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import errors
from .braces import (
    BraidedGroup,
    apply_brace_twist,
    compose_brace_twists,
    invert_brace_twist,
    verify_brace_twist,
)
from .classification import (
    anytwist_f_matches,
    are_twist_related,
    enumerate_brace_twists,
    enumerate_families,
    family_from_twist,
    theta_canonical_twist,
)
from .matched import DEFAULT_THETA_BUDGET, enumerate_thetas, triple_from_theta
from .generators import gen
from .serialize import (
    brace_to_doc,
    canonical_dumps,
    family_to_doc,
    load_document,
    matched_pair_to_doc,
    parse_document,
    solution_to_doc,
    theta_to_doc,
    twist_to_doc,
)
from .solutions import (
    YbeSolution,
    apply_twist,
    brute_force_twists,
    compose_twists,
    invert_twist,
    verify_twist,
)

AXIOM_ERRORS = (
    errors.AxiomFails,
    errors.BraidFails,
    errors.InvalidTwist,
    errors.NotBijective,
    errors.Degenerate,
    errors.ShapeMismatch,
    errors.NonCommuting,
    errors.NotABrace,
    errors.InvalidFamily,
    errors.NotClassifiable,
    errors.InvalidTheta,
)
FORMAT_ERRORS = (
    errors.DocumentError,
    errors.UnknownGenerator,
    errors.BadParams,
    errors.SizeMismatch,
)


def _read_doc(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_document(text)


def _load(path: str):
    return load_document(_read_doc(path))


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _to_doc(obj) -> dict:
    from .groups import FiniteGroup
    from .serialize import group_to_doc

    if isinstance(obj, YbeSolution):
        return solution_to_doc(obj)
    if isinstance(obj, BraidedGroup):
        return brace_to_doc(obj)
    if isinstance(obj, FiniteGroup):
        return group_to_doc(obj)
    raise errors.DocumentError(f"cannot serialize {type(obj).__name__}")


def _require(obj, cls, what: str):
    if not isinstance(obj, cls):
        raise errors.DocumentError(f"{what} must be a {cls.__name__} document")
    return obj


def cmd_gen(args) -> int:
    obj = gen(args.name, args.params)
    _write(canonical_dumps(_to_doc(obj)), args.out)
    return 0


def cmd_verify(args) -> int:
    doc = _read_doc(args.infile)
    obj = load_document(doc)  # raises on invalid payload
    kind = doc.get("kind")
    if kind == "twist":
        if args.base is None:
            raise errors.DocumentError("verifying a twist requires --base")
        base = _load(args.base)
        if isinstance(base, BraidedGroup):
            report = verify_brace_twist(base, obj)
        elif isinstance(base, YbeSolution):
            report = verify_twist(base, obj)
        else:
            raise errors.DocumentError("--base must be a solution or brace document")
        if not report:
            print(f"FAIL {report.axiom} at {report.witness}", file=sys.stderr)
            return 1
    print(f"ok: valid {kind}", file=sys.stderr)
    return 0


def cmd_twist(args) -> int:
    base = _load(args.base)
    twist = _load(args.twist)
    if isinstance(base, BraidedGroup):
        result = apply_brace_twist(base, twist)
    elif isinstance(base, YbeSolution):
        result = apply_twist(base, twist)
    else:
        raise errors.DocumentError("--base must be a solution or brace document")
    _write(canonical_dumps(_to_doc(result)), args.out)
    print("ok: twist applied", file=sys.stderr)
    return 0


def cmd_compose(args) -> int:
    outer = _load(args.outer)
    inner = _load(args.inner)
    base = _load(args.base)
    if isinstance(base, BraidedGroup):
        result = compose_brace_twists(outer, inner, base)
    elif isinstance(base, YbeSolution):
        result = compose_twists(outer, inner, base)
    else:
        raise errors.DocumentError("--base must be a solution or brace document")
    _write(canonical_dumps(twist_to_doc(result)), args.out)
    return 0


def cmd_invert(args) -> int:
    twist = _load(args.twist)
    base = _load(args.base)
    if isinstance(base, BraidedGroup):
        result = invert_brace_twist(twist, base)
    elif isinstance(base, YbeSolution):
        result = invert_twist(twist, base)
    else:
        raise errors.DocumentError("--base must be a solution or brace document")
    _write(canonical_dumps(twist_to_doc(result)), args.out)
    return 0


def _emit_stream(items, out: str | None) -> int:
    lines = []
    count = 0
    for doc in items:
        lines.append(canonical_dumps(doc))
        count += 1
    lines.append(canonical_dumps({"kind": "report", "count": count}))
    _write("".join(lines), out)
    return 0


def cmd_enumerate(args) -> int:
    budget = args.budget
    if args.what == "twists":
        b1 = _require(_load(args.b1), BraidedGroup, "--b1")
        b2 = _require(_load(args.b2), BraidedGroup, "--b2")
        return _emit_stream(
            (twist_to_doc(t) for t in enumerate_brace_twists(b1, b2)), args.out
        )
    if args.what == "families":
        from .groups import FiniteGroup

        src = _require(_load(args.src), FiniteGroup, "--src")
        tgt = _require(_load(args.tgt), FiniteGroup, "--tgt")
        return _emit_stream(
            (family_to_doc(f) for f in enumerate_families(src, tgt)), args.out
        )
    if args.what == "thetas":
        from .matched import MatchedPair

        pair = _require(_load(args.pair), MatchedPair, "--pair")
        return _emit_stream(
            (theta_to_doc(t) for t in enumerate_thetas(pair, budget=budget)), args.out
        )
    if args.what == "brute":
        sol = _require(_load(args.solution), YbeSolution, "--solution")
        return _emit_stream(
            (twist_to_doc(t) for t in brute_force_twists(sol)), args.out
        )
    raise errors.DocumentError(f"unknown enumeration target: {args.what}")


def cmd_classify(args) -> int:
    b1 = _require(_load(args.b1), BraidedGroup, "--b1")
    b2 = _require(_load(args.b2), BraidedGroup, "--b2")
    related = are_twist_related(b1, b2)
    twists = []
    if related:
        theta1 = theta_canonical_twist(b1)
        theta2 = theta_canonical_twist(b2)
        for fam, twist in zip(
            enumerate_families(b1.star, b2.star), enumerate_brace_twists(b1, b2)
        ):
            twists.append(
                {
                    "family_maps": [list(m) for m in fam.maps],
                    "anytwist_f_ok": anytwist_f_matches(b1, b2, fam, twist),
                    "twist": twist_to_doc(twist),
                    "decomposition": {
                        "theta1": twist_to_doc(theta1),
                        "theta2": twist_to_doc(theta2),
                    },
                }
            )
    report = {
        "kind": "report",
        "related": related,
        "count": len(twists),
        "twists": twists,
    }
    _write(canonical_dumps(report), args.out)
    return 0


def cmd_matched_check(args) -> int:
    pair = _load(args.infile)
    from .matched import MatchedPair

    _require(pair, MatchedPair, "--in")
    print("ok: valid matched pair", file=sys.stderr)
    _write(canonical_dumps(matched_pair_to_doc(pair)), args.out)
    return 0


def cmd_theta_apply(args) -> int:
    from .matched import MatchedPair, ThetaMap

    pair = _require(_load(args.pair), MatchedPair, "--pair")
    theta = _require(_load(args.theta), ThetaMap, "--theta")
    base = _require(_load(args.base), BraidedGroup, "--base")
    triple = triple_from_theta(pair, theta, base)
    if args.apply:
        _write(canonical_dumps(brace_to_doc(apply_brace_twist(base, triple))), args.out)
    else:
        _write(canonical_dumps(twist_to_doc(triple)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    default_budget = int(os.environ.get("SKEWTWIST_BUDGET", DEFAULT_THETA_BUDGET))
    parser = argparse.ArgumentParser(
        prog="skewtwist",
        description="Verify, twist, enumerate and classify finite YBE solutions and skew braces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named structure")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="validate a document")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--base", default=None, help="base solution/brace when verifying a twist")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("twist", help="apply a twist to a solution or brace")
    p.add_argument("--base", required=True)
    p.add_argument("--twist", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_twist)

    p = sub.add_parser("compose", help="compose two twists over a base")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("invert", help="invert a twist over its base")
    p.add_argument("--twist", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_invert)

    p = sub.add_parser("enumerate", help="stream twists, families or thetas")
    p.add_argument("what", choices=["twists", "families", "thetas", "brute"])
    p.add_argument("--b1")
    p.add_argument("--b2")
    p.add_argument("--src")
    p.add_argument("--tgt")
    p.add_argument("--pair")
    p.add_argument("--solution")
    p.add_argument("--budget", type=int, default=default_budget)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("classify", help="twist-relatedness report for two braces")
    p.add_argument("--b1", required=True)
    p.add_argument("--b2", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("matched-check", help="validate a matched pair")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_matched_check)

    p = sub.add_parser("theta-apply", help="build (and optionally apply) the twist of a theta map")
    p.add_argument("--pair", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--apply", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_theta_apply)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=["json"], default="json")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except errors.TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AXIOM_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FORMAT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
