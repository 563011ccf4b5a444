"""Command line front end.

Verbs: check, props, gradings, aut-count, normalizer, verify-paper,
export.  Every invocation writes exactly one JSON document to stdout;
usage problems go to stderr with exit code 2, failed checks exit 1.
Output is deterministic: result lists are canonically sorted before
emission and worker-pool scheduling never affects report order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebras import (
    Algebra,
    center,
    check_leibniz,
    is_antisymmetric,
    lower_central_series,
    make_family,
    nilpotency_profile,
    right_annihilator,
)
from .catalog import default_group_menu, enumerate_h1_gradings
from .errors import GradedLeibnizError
from .fields import Field, QQ
from .groups import AbelianGroup
from .torus import DEFAULT_BUDGET, brute_force_aut, normalizer_equals_torus
from .verification import run_all, summarize

_FAMILY_FLAGS = {"nf": "nf", "f1": "f1", "f2": "f2", "lie-l": "lie_l", "lie-q": "lie_q"}
_HYPOTHESIS = {"nf": "e1_homog", "f2": "e1_homog", "f1": "e1_e2_homog"}

#: assumed throughput for converting a --budget-ms time budget into the
#: library's search-space budget (matrices/states examined per ms)
OPS_PER_MS = 50_000


class UsageError(Exception):
    pass


def _parse_field(text: str) -> Field:
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        body = text[3:]
    elif text.startswith("F"):
        body = text[1:]
    else:
        raise UsageError(f"cannot parse field {text!r} (expected Q, F<p>, or Fp:<p>)")
    try:
        return Field(int(body))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load_algebra(args) -> Algebra:
    if args.input:
        if args.family or args.dim:
            raise UsageError("--input replaces --family/--dim")
        with open(args.input, encoding="utf-8") as handle:
            doc = json.load(handle)
        try:
            return Algebra.from_json(doc)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed algebra document {args.input}: {exc}") from exc
    if not args.family or not args.dim:
        raise UsageError("need --family and --dim (or --input)")
    return make_family(_FAMILY_FLAGS[args.family], args.dim, _parse_field(args.field))


def _algebra_header(alg: Algebra) -> dict:
    return {"family": alg.label, "dim": alg.dim}


def _budget(args) -> int:
    if args.budget_ms is not None:
        return max(1, args.budget_ms) * OPS_PER_MS
    return DEFAULT_BUDGET


def _cmd_check(args):
    alg = _load_algebra(args)
    profile = nilpotency_profile(alg)
    doc = {
        "leibniz": check_leibniz(alg).ok,
        "null_filiform": profile.null_filiform,
        "nilpotency_index": profile.index,
    }
    return doc, 0 if doc["leibniz"] else 1


def _cmd_props(args):
    alg = _load_algebra(args)
    profile = nilpotency_profile(alg)
    doc = {
        "algebra": _algebra_header(alg),
        "field": alg.field.to_json(),
        "leibniz": check_leibniz(alg).ok,
        "antisymmetric": is_antisymmetric(alg),
        "lcs_dims": [space.dim for space in lower_central_series(alg)],
        "nilpotent": profile.nilpotent,
        "nilpotency_index": profile.index,
        "null_filiform": profile.null_filiform,
        "filiform": profile.filiform,
        "center": [[s.to_json() for s in row] for row in center(alg).rows],
        "right_annihilator": [
            [s.to_json() for s in row] for row in right_annihilator(alg).rows
        ],
    }
    return doc, 0


def _cmd_gradings(args):
    alg = _load_algebra(args)
    if args.group:
        try:
            menu = [AbelianGroup.parse(args.group)]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        menu = default_group_menu(alg.dim)
    hypothesis = _HYPOTHESIS.get(alg.label)
    if hypothesis is None:
        raise UsageError(f"grading enumeration is not available for {alg.label!r}")
    found = enumerate_h1_gradings(alg, hypothesis, menu)
    return [g.to_json() for g in found], 0


def _cmd_aut_count(args):
    alg = _load_algebra(args)
    p = alg.field.p
    if args.brute_force:
        report = brute_force_aut(alg, budget=_budget(args))
        doc = {
            "check": "aut-bruteforce",
            "algebra": _algebra_header(alg),
            "field": alg.field.to_json(),
            "count": report.count,
            "matches_family": report.all_in_family,
            "elapsed_ms": report.elapsed_ms,
        }
        return doc, 1 if report.all_in_family is False else 0
    if p is None:
        raise UsageError("the family count formula needs a prime field")
    if alg.label == "nf":
        count = (p - 1) * p ** (alg.dim - 1)
    elif alg.label == "f1":
        count = (p - 1) ** 2 * p ** (alg.dim - 1)
    else:
        raise UsageError(f"no automorphism count formula for {alg.label!r}")
    doc = {
        "check": "aut-family-count",
        "algebra": _algebra_header(alg),
        "field": alg.field.to_json(),
        "count": count,
        "matches_family": None,
        "elapsed_ms": 0,
    }
    return doc, 0


def _cmd_normalizer(args):
    alg = _load_algebra(args)
    report = normalizer_equals_torus(alg, budget=_budget(args))
    doc = {
        "check": "normalizer",
        "algebra": _algebra_header(alg),
        "field": alg.field.to_json(),
        "count": report.normalizer_size,
        "matches_family": report.holds,
        "torus_size": report.torus_size,
        "elapsed_ms": report.elapsed_ms,
        "note": report.note,
    }
    return doc, 0 if report.holds else 1


def _cmd_verify_paper(args):
    threads = args.threads
    if threads is None:
        env = os.environ.get("GRADED_LEIBNIZ_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    claims = run_all(max_dim=args.max_dim, threads=threads)
    doc = summarize(claims)
    return doc, 0 if doc["failed"] == 0 else 1


def _cmd_export(args):
    alg = _load_algebra(args)
    return alg.to_json(), 0


def _add_algebra_flags(sub):
    sub.add_argument("--family", choices=sorted(_FAMILY_FLAGS))
    sub.add_argument("--dim", type=int)
    sub.add_argument("--field", default="Q", help="Q (default), F<p>, or Fp:<p>")
    sub.add_argument("--input", help="path to an algebra JSON document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graded-leibniz",
        description="Exact checks and grading classifications for nilpotent Leibniz algebra families.",
    )
    parser.add_argument("--json-indent", type=int, default=None)
    verbs = parser.add_subparsers(dest="verb", required=True)

    for name, helptext in (
        ("check", "Leibniz identity and nilpotency summary"),
        ("props", "structural invariants of one algebra"),
        ("export", "emit the algebra as a JSON document"),
    ):
        sub = verbs.add_parser(name, help=helptext)
        _add_algebra_flags(sub)

    sub = verbs.add_parser("gradings", help="enumerate gradings up to equivalence")
    _add_algebra_flags(sub)
    sub.add_argument("--group", help='target group: "trivial", "Z", "Z<i>", "ZxZ<i>"')

    sub = verbs.add_parser("aut-count", help="automorphism count over a prime field")
    _add_algebra_flags(sub)
    sub.add_argument("--brute-force", action="store_true",
                     help="exhaust all matrices instead of using the family formula")
    sub.add_argument("--budget-ms", type=int, default=None)

    sub = verbs.add_parser("normalizer", help="check that the torus is self-normalizing")
    _add_algebra_flags(sub)
    sub.add_argument("--budget-ms", type=int, default=None)

    sub = verbs.add_parser("verify-paper", help="run the full verification suite")
    sub.add_argument("--max-dim", type=int, default=None)
    sub.add_argument("--threads", type=int, default=None,
                     help="worker pool size (default: GRADED_LEIBNIZ_THREADS or cpu count)")

    return parser


_DISPATCH = {
    "check": _cmd_check,
    "props": _cmd_props,
    "gradings": _cmd_gradings,
    "aut-count": _cmd_aut_count,
    "normalizer": _cmd_normalizer,
    "verify-paper": _cmd_verify_paper,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = _DISPATCH[args.verb](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GradedLeibnizError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(doc, indent=args.json_indent))
    return code


if __name__ == "__main__":
    sys.exit(main())
