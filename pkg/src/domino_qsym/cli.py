"""Command-line entry point. Records go to stdout as one JSON object per line;
human-readable summaries go to stderr."""

from __future__ import annotations

import argparse
import json
import sys

from .arc import arc_to_domino, classify, domino_to_arc, enumerate_signed_arc, phi1, phi2
from .core import (BiTableau, DomainError, DominoTableau, YoungTableau,
                   enumerate_semistandard_tableaux, enumerate_signed_permutations,
                   enumerate_standard_tableaux, parse_shape, parse_signed_permutation,
                   two_quotient)
from .correspondences import LemmaViolation, bi_rs, littlewood, littlewood_inverse, phi3, rs_insert
from .descents import des_a, des_b, des_r, des_r_bitableau, des_tableau, neg_count, sdes, sdes_bitableau
from .qsym import g_in_sb
from .render import render, tableau_from_json
from .verify import IDENTITIES, BoundError, check_bounds, resolve_mode, run_many

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _perm_stats(pi) -> dict:
    return {"des": sorted(des_b(pi)), "des_r": sorted(des_r(pi)),
            "sdes": sdes(pi).to_json(), "neg": neg_count(pi)}


def _tableau_stats(t) -> dict:
    out: dict = {}
    if isinstance(t, BiTableau):
        out["shape"] = [list(t.t1.shape), list(t.t2.shape)]
        if t.standard:
            out["des"] = sorted(des_r_bitableau(t))
            out["sdes"] = sdes_bitableau(t).to_json()
        return out
    out["shape"] = list(t.shape)
    if isinstance(t, DominoTableau):
        out["two_quotient"] = [list(p) for p in two_quotient(t.shape)]
    if getattr(t, "standard", True) and (not isinstance(t, YoungTableau) or t.is_standard()):
        out["des"] = sorted(des_tableau(t))
    return out


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required here")
    return value


def _read_tableau(text: str | None):
    text = _need(text, "--tableau")
    if text == "-":
        text = sys.stdin.read()
    try:
        return tableau_from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DomainError(f"cannot parse tableau json: {exc}") from None


def cmd_enumerate(args) -> int:
    count = 0
    if args.kind == "perms":
        for pi in enumerate_signed_permutations(_need(args.n, "--n")):
            _emit({"perm": str(pi), **_perm_stats(pi)})
            count += 1
    elif args.kind == "arc":
        for pi in enumerate_signed_arc(_need(args.n, "--n")):
            _emit({"perm": str(pi), "class": classify(pi).to_json(), "des": sorted(des_b(pi))})
            count += 1
    else:
        shape = parse_shape(_need(args.shape, "--shape"))
        if args.max_label is None:
            items = enumerate_standard_tableaux(shape, args.family)
        else:
            low = 0 if args.family == "domino" else 1
            items = enumerate_semistandard_tableaux(shape, args.family, args.max_label, low)
        for t in items:
            _emit({"tableau": t.to_json(), **_tableau_stats(t)})
            count += 1
    print(f"{count} records", file=sys.stderr)
    return EXIT_PASS


def cmd_map(args) -> int:
    name = args.name
    record: dict = {"map": name}
    if name in ("arc2domino", "phi1", "phi2", "birs", "rs"):
        pi = parse_signed_permutation(_need(args.perm, "--perm"))
        record["input"] = {"perm": str(pi), **_perm_stats(pi)}
        if name == "arc2domino":
            t = arc_to_domino(pi)
            record["input"]["class"] = classify(pi).to_json()
            record["output"] = {"tableau": t.to_json(), **_tableau_stats(t)}
        elif name == "phi1":
            image = phi1(pi)
            record["output"] = {"perm": str(image), **_perm_stats(image)}
        elif name == "phi2":
            b = phi2(pi)
            record["output"] = {"tableau": b.to_json(), **_tableau_stats(b)}
        elif name == "birs":
            p, q = bi_rs(pi)
            record["output"] = {"P": p.to_json(), "Q": {"tableau": q.to_json(), **_tableau_stats(q)}}
        else:
            if not pi.is_positive():
                raise DomainError("rs needs an unsigned permutation")
            p, q = rs_insert(pi.window)
            record["input"] = {"perm": str(pi), "des": sorted(des_a(pi.window))}
            record["output"] = {"P": p.to_json(), "Q": {"tableau": q.to_json(), **_tableau_stats(q)}}
    else:
        t = _read_tableau(args.tableau)
        record["input"] = {"tableau": t.to_json(), **_tableau_stats(t)}
        if name == "domino2arc":
            if not isinstance(t, DominoTableau):
                raise DomainError("domino2arc needs a domino tableau")
            pi = domino_to_arc(t, args.which)
            record["output"] = {"perm": str(pi), "class": classify(pi).to_json(), **_perm_stats(pi)}
        elif name == "phi3":
            if not isinstance(t, BiTableau):
                raise DomainError("phi3 needs a bi-tableau")
            image = phi3(t)
            record["output"] = {"tableau": image.to_json(), **_tableau_stats(image)}
        else:
            image = littlewood(t) if isinstance(t, DominoTableau) else littlewood_inverse(t)
            record["output"] = {"tableau": image.to_json(), **_tableau_stats(image)}
    _emit(record)
    return EXIT_PASS


def cmd_expand(args) -> int:
    shape = parse_shape(_need(args.shape, "--shape"))
    expansion = g_in_sb(shape)
    _emit({"shape": list(shape), "two_quotient": [list(p) for p in two_quotient(shape)],
           **expansion.to_json()})
    return EXIT_PASS


def cmd_verify(args) -> int:
    n = _need(args.n, "--n")
    if args.all:
        tags = [t for t in IDENTITIES if IDENTITIES[t].min_n <= n]
    else:
        tags = [_need(args.identity, "--identity or --all")]
    tasks = []
    for tag in tags:
        if tag not in IDENTITIES:
            raise UsageError(f"unknown identity {tag!r}; choose from {', '.join(IDENTITIES)}")
        mode = resolve_mode(tag, args.mode)
        check_bounds(tag, n, mode, args.force)
        tasks.append((tag, n, mode, args.force))
    reports = run_many(tasks, args.jobs)
    failed = 0
    for report in reports:
        _emit(report)
        failed += report["status"] != "pass"
        print(f"{report['identity']:>14} n={n} {report['mode']:<10} {report['status']} "
              f"({report['elapsed']:.2f}s)", file=sys.stderr)
    print(f"{len(reports) - failed} passed, {failed} failed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_PASS


def cmd_render(args) -> int:
    t = _read_tableau(args.tableau)
    text = render(t, args.format)
    sys.stdout.write(text + ("\n" if text else ""))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domino-qsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream permutations, arc permutations or tableaux")
    p.add_argument("--kind", choices=("perms", "arc", "tableaux"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--shape")
    p.add_argument("--family", choices=("young", "domino"), default="young")
    p.add_argument("--max-label", type=int, help="enumerate semistandard tableaux instead")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply one of the bijections")
    p.add_argument("--name", required=True, choices=("arc2domino", "domino2arc", "phi1", "phi2",
                                                     "phi3", "littlewood", "birs", "rs"))
    p.add_argument("--perm")
    p.add_argument("--tableau", help="tableau json, or - to read stdin")
    p.add_argument("--which", choices=("T5", "T6"),
                   help="domino2arc: which of the two arc types sharing a two-row shape")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("expand", help="s^B expansion of the domino function of a shape")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check identities exhaustively")
    p.add_argument("--identity", help=", ".join(IDENTITIES))
    p.add_argument("--all", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("multiset", "polynomial"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true", help="lift the desk-scale bound on n")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a tableau given as json")
    p.add_argument("--tableau", required=True, help="tableau json, or - to read stdin")
    p.add_argument("--format", choices=("ascii", "json", "latex"), default="ascii")
    p.set_defaults(func=cmd_render)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    # "--perm -3,1,2" would otherwise read the window as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--perm", "--shape"):
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except (UsageError, BoundError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, LemmaViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
