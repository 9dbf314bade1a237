"""Command-line interface.

Subcommands: poly, diagrams, split, egls, talpha, expand, verify.  Exit
codes: 0 on success, 1 when a verification case fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, bases, diagrams, harness, perms, tableaux
from .poly import Polynomial


def _parse_alpha(text: str):
    try:
        return perms.parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_perm(text: str):
    try:
        return perms.parse_permutation(text)
    except ValueError as exc:
        raise UsageError(str(exc))


class UsageError(Exception):
    pass


def _cmd_poly(args) -> int:
    if (args.alpha is None) == (args.perm is None):
        raise UsageError("provide exactly one of --alpha or --perm")
    if args.basis in ("key", "omega"):
        if args.alpha is None:
            raise UsageError(f"--alpha is required for {args.basis}")
        alpha = _parse_alpha(args.alpha)
        poly = (
            bases.key_polynomial(alpha)
            if args.basis == "key"
            else bases.omega_polynomial(alpha)
        )
    else:
        if args.perm is None:
            raise UsageError(f"--perm is required for {args.basis}")
        w = _parse_perm(args.perm)
        poly = bases.schubert(w) if args.basis == "schubert" else bases.grothendieck(w)
    if args.beta is not None:
        poly = poly.substitute_beta(args.beta)
    if args.format == "json":
        print(json.dumps(poly.to_json_obj()))
    else:
        print(poly)
    return 0


def _cmd_diagrams(args) -> int:
    if (args.alpha is None) == (args.perm is None):
        raise UsageError("provide exactly one of --alpha or --perm")
    if args.alpha is not None:
        alpha = _parse_alpha(args.alpha)
        start = diagrams.skyline(alpha)
        cols = len(alpha)
        rows = max(alpha, default=0)
    else:
        w = _parse_perm(args.perm)
        start = diagrams.rothe(w)
        cols = rows = len(w)
    mode = diagrams.KOHNERT if args.mode == "kohnert" else diagrams.K_KOHNERT
    try:
        found = diagrams.closure(start, mode, args.cap)
    except diagrams.ClosureCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    ordered = sorted(found, key=lambda d: d.key())
    by_ghosts: dict[int, int] = {}
    for d in ordered:
        by_ghosts[d.ghost_count()] = by_ghosts.get(d.ghost_count(), 0) + 1
    poly = diagrams.ghost_weighted_sum(ordered)
    print(f"diagrams: {len(ordered)}")
    print(
        "by ghost count: "
        + ", ".join(f"{g}: {n}" for g, n in sorted(by_ghosts.items()))
    )
    print(f"generating polynomial: {poly}")
    if args.list:
        for d in ordered:
            print()
            print(d.render(cols, rows))
    return 0


def _cmd_split(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if args.descents:
        try:
            d = tuple(int(p) for p in args.descents.split(","))
        except ValueError:
            raise UsageError(f"bad descent list {args.descents!r}")
    else:
        d = bases.minimal_blocks(alpha)
    try:
        expansion = bases.key_split_expansion(alpha, d)
    except ValueError as exc:
        raise UsageError(str(exc))
    extracted = bases.split_extract(bases.key_polynomial(alpha), d)
    counts = {k: v[0] for k, v in expansion.items()}
    agree = extracted == counts
    print(f"alpha: {perms.format_composition(alpha)}")
    print(f"blocks: {','.join(map(str, d))}")
    for lams in sorted(expansion):
        count, witnesses = expansion[lams]
        label = " | ".join("(" + ",".join(map(str, l)) + ")" for l in lams)
        print(f"E[{label}] = {count}")
        for tup in witnesses:
            rendered = " | ".join(
                "[" + "; ".join(" ".join(map(str, row)) for row in t.rows) + "]"
                for t in tup
            )
            print(f"  witness: {rendered}")
    if not agree:
        print("error: tableau count disagrees with Schur extraction", file=sys.stderr)
        return 1
    return 0


def _parse_letters(text: str, what: str) -> list[int]:
    t = text.strip()
    try:
        if "," in t or " " in t:
            return [int(p) for p in t.replace(",", " ").split()]
        if t.isdigit():
            return [int(ch) for ch in t]
    except ValueError:
        pass
    raise UsageError(f"bad {what} {text!r}")


def _cmd_egls(args) -> int:
    word = _parse_letters(args.word, "word")
    marks = _parse_letters(args.marks, "marks") if args.marks else None
    try:
        p, q = tableaux.egls_insert(word, marks)
    except (tableaux.NonReducedWordError, ValueError) as exc:
        raise UsageError(str(exc))
    print("insertion tableau:")
    print(p.render() or "(empty)")
    print("recording tableau:")
    print(q.render() or "(empty)")
    return 0


def _cmd_talpha(args) -> int:
    alpha = _parse_alpha(args.alpha)
    t = tableaux.peeling_tableau(alpha)
    w = perms.perm_from_code(alpha)
    print(f"permutation: {perms.format_permutation(w)}")
    print(t.render() or "(empty)")
    nk = tableaux.nil_left_key(t)
    print("nil left key:")
    print(nk.render() or "(empty)")
    print(f"content: {perms.format_composition(tableaux.content(nk))}")
    return 0


def _cmd_expand(args) -> int:
    try:
        with open(args.input) as fh:
            poly = Polynomial.from_json_obj(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}")
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad polynomial file {args.input}: {exc}")
    try:
        coeffs = bases.expand_in_basis(poly, args.basis)
    except (bases.ExpansionCapError, diagrams.ClosureCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc))
    print(json.dumps(bases.expansion_to_json_obj(coeffs)))
    return 0


def _cmd_verify(args) -> int:
    cache_dir = args.cache or os.environ.get(harness.CACHE_ENV) or None
    kwargs_by_family = {
        "conj1": lambda: harness.verify_conjecture1(
            args.max_weight if args.max_weight is not None else 7,
            args.max_parts if args.max_parts is not None else 4,
            jobs=args.jobs,
            cache_dir=cache_dir,
            cap=args.cap,
        ),
        "conj2": lambda: harness.verify_conjecture2(
            args.n if args.n is not None else 5,
            jobs=args.jobs,
            cache_dir=cache_dir,
            cap=args.cap,
        ),
        "kohnert": lambda: harness.verify_kohnert(
            args.max_weight if args.max_weight is not None else 7,
            args.max_parts if args.max_parts is not None else 4,
            args.n if args.n is not None else 5,
            jobs=args.jobs,
            cache_dir=cache_dir,
            cap=args.cap,
        ),
        "theorem1": lambda: harness.verify_theorem1(
            args.max_weight if args.max_weight is not None else 6,
            args.max_parts if args.max_parts is not None else 4,
            jobs=args.jobs,
        ),
        "bjs": lambda: harness.verify_bjs(
            args.n if args.n is not None else 5, jobs=args.jobs
        ),
        "theorem4": lambda: harness.verify_theorem4(
            args.max_weight if args.max_weight is not None else 6,
            args.max_parts if args.max_parts is not None else 4,
            jobs=args.jobs,
        ),
    }
    report = kwargs_by_family[args.family]()
    for case in report.cases:
        if case.status != "pass":
            print(f"{case.status.upper()}: {case.family} {case.param}")
    t = report.totals
    print(
        f"{report.config['family']}: {t['pass']} passed, {t['fail']} failed, "
        f"{t['skipped']} skipped (of {t['total']}) "
        f"in {report.meta['wall_time_s']}s"
    )
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report.to_json_obj(), fh, indent=1)
        print(f"report written to {args.report}")
    return 1 if report.failed() else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kohnert",
        description="Exact key/Omega/Schubert/Grothendieck polynomial toolkit "
        "with diagram-move enumeration and verification sweeps.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print a basis polynomial")
    p.add_argument("basis", choices=["key", "omega", "schubert", "grothendieck"])
    p.add_argument("--alpha", help="composition, e.g. 1,3,0,2,2,1")
    p.add_argument("--perm", help="permutation, e.g. 3142 or 3,1,4,2")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--beta", type=int, help="evaluate the b parameter")
    p.set_defaults(run=_cmd_poly)

    p = sub.add_parser("diagrams", help="enumerate move closures")
    p.add_argument("mode", choices=["kohnert", "kkohnert"])
    p.add_argument("--alpha", help="start from the skyline of this composition")
    p.add_argument("--perm", help="start from the Rothe diagram of this permutation")
    p.add_argument("--list", action="store_true", help="print every diagram")
    p.add_argument("--cap", type=int, default=diagrams.DEFAULT_CLOSURE_CAP)
    p.set_defaults(run=_cmd_diagrams)

    p = sub.add_parser("split", help="block-Schur expansion of a key polynomial")
    p.add_argument("--alpha", required=True)
    p.add_argument("--descents", help="block bounds, e.g. 2,5,6 (default: strict descents)")
    p.set_defaults(run=_cmd_split)

    p = sub.add_parser("egls", help="column-insert a reduced word")
    p.add_argument("--word", required=True, help="e.g. 431526456 or 4,3,1,5,2,6,4,5,6")
    p.add_argument("--marks", help="recording marks (default 1..m)")
    p.set_defaults(run=_cmd_egls)

    p = sub.add_parser("talpha", help="peeling tableau of a composition")
    p.add_argument("--alpha", required=True)
    p.set_defaults(run=_cmd_talpha)

    p = sub.add_parser("expand", help="expand a polynomial over a basis")
    p.add_argument("--basis", choices=["key", "J", "omega"], required=True)
    p.add_argument("--input", required=True, help="polynomial JSON file")
    p.set_defaults(run=_cmd_expand)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "family",
        choices=["conj1", "conj2", "kohnert", "theorem1", "bjs", "theorem4"],
    )
    p.add_argument("--max-weight", type=int, dest="max_weight")
    p.add_argument("--max-parts", type=int, dest="max_parts")
    p.add_argument("--n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--cache", help=f"cache directory (default ${harness.CACHE_ENV})")
    p.add_argument("--cap", type=int, default=diagrams.DEFAULT_CLOSURE_CAP)
    p.set_defaults(run=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
