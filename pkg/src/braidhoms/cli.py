"""Command-line front end.

Exit status: 0 success or no counterexample, 1 counterexample or failed
verification, 2 undecided (fuel exhausted), 3 malformed input.
``BRAIDHOMS_FUEL`` and ``BRAIDHOMS_JOBS`` override the fuel and worker defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .braid import DEFAULT_FUEL, BraidWord, UndecidedError, commutes, is_trivial, parse_word, words_equal
from .cabling import CablingError, classify_cabling
from .curves import enumerate_curves, parse_curve, rotation_intersection_report, rotation_multicurve_report
from .handle import handle_reduce
from .homs import (
    Homomorphism,
    RelationError,
    StandardKind,
    apply_hom,
    compose_hom,
    fingerprint,
    hom_from_json,
    hom_to_json,
    match_standard,
    relation_failures,
    standard_hom,
    transvect,
)
from .screens import corollary_range_check, screen_table, sym_hom_enumerate
from .suites import SUITES, run_suite

OK, COUNTEREXAMPLE, UNDECIDED, MALFORMED = 0, 1, 2, 3


class Malformed(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise Malformed(f"{name}={raw!r} is not an integer") from None


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _read_hom(source: str) -> Homomorphism:
    """A homomorphism from a JSON file path, ``-`` for stdin, or inline JSON."""
    if source == "-":
        raw = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        raw = source
    else:
        path = Path(source)
        if not path.exists():
            raise Malformed(f"no such file: {source}")
        raw = path.read_text()
    try:
        return hom_from_json(raw)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise Malformed(f"bad homomorphism JSON: {exc}") from None


def _images(text: str, target: int) -> tuple[BraidWord, ...]:
    """``"1 1 2; 3 -2"``: images separated by semicolons."""
    return tuple(parse_word(part, target) for part in text.split(";"))


# -- subcommands ------------------------------------------------------------

def cmd_word(args) -> int:
    u = parse_word(args.word, args.strands)
    if args.action == "reduce":
        red = BraidWord(u.strands, handle_reduce(u.letters, u.strands, args.fuel))
        _emit(args, {"input": list(u.letters), "reduced": list(red.letters), "strands": u.strands},
              str(red))
        return OK
    if args.action == "trivial":
        t = is_trivial(u, args.fuel)
        _emit(args, {"trivial": t, "word": list(u.letters)}, str(t).lower())
        return OK
    if args.other is None:
        raise Malformed(f"'{args.action}' needs a second word")
    v = parse_word(args.other, u.strands)
    ok = words_equal(u, v, args.fuel) if args.action == "compare" else commutes(u, v, args.fuel)
    _emit(args, {args.action: ok}, str(ok).lower())
    return OK if ok else COUNTEREXAMPLE


def cmd_hom(args) -> int:
    a = args.action
    if a == "make":
        if args.source is None or args.target is None or args.images is None:
            raise Malformed("make needs --source, --target and --images")
        h = Homomorphism(args.source, args.target, _images(args.images, args.target))
        print(hom_to_json(h))
        return OK
    if not args.hom:
        raise Malformed(f"'{a}' needs a homomorphism argument")
    h = _read_hom(args.hom[0])
    if a == "verify":
        bad = relation_failures(h, args.fuel)
        _emit(args, {"failures": [list(p) for p in bad], "verified": not bad},
              "verified" if not bad else "\n".join(f"relation fails between sigma_{i} and sigma_{j}"
                                                   for i, j in bad))
        return OK if not bad else COUNTEREXAMPLE
    if a == "apply":
        if args.word is None:
            raise Malformed("apply needs --word")
        img = apply_hom(h, parse_word(args.word, h.source_strands))
        _emit(args, {"image": list(img.letters), "strands": img.strands}, str(img))
        return OK
    if a == "transvect":
        if args.by is None:
            raise Malformed("transvect needs --by")
        try:
            print(hom_to_json(transvect(h, parse_word(args.by, h.target_strands), args.fuel)))
        except RelationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return COUNTEREXAMPLE
        return OK
    if a == "compose":
        if len(args.hom) != 2:
            raise Malformed("compose needs OUTER and INNER")
        print(hom_to_json(compose_hom(h, _read_hom(args.hom[1]))))
        return OK
    fp = fingerprint(h, args.fuel)
    payload = fp.to_json()
    if h.target_strands == 2 * h.source_strands:
        payload["matches"] = match_standard(h, fuel=args.fuel)
    _emit(args, payload, json.dumps(payload, sort_keys=True, indent=1))
    return OK


def cmd_standard(args) -> int:
    conj = parse_word(args.conjugator, args.n if args.target is None else args.target) if args.conjugator else None
    h = standard_hom(StandardKind.of(args.kind, args.k, conj), args.n, args.target)
    print(hom_to_json(h))
    return OK


def cmd_classify(args) -> int:
    h = _read_hom(args.hom)
    try:
        c = classify_cabling(h, args.fuel)
    except CablingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return COUNTEREXAMPLE
    _emit(args, c.to_json(), c.to_text())
    return OK if c.certified else COUNTEREXAMPLE


def cmd_screen(args) -> int:
    if args.corollary:
        rows = [(n, m, corollary_range_check(n, m))
                for n in range(max(args.n or 5, 5), args.n_max + 1) for m in range(n + 1, 2 * n + 1)]
        bad = [r for r in rows if not r[2]]
        _emit(args, {"checked": len(rows), "failures": [[n, m] for n, m, _ in bad]},
              f"{len(rows)} pairs checked\n" + "\n".join(f"{n} {m} divisible" for n, m, _ in bad))
        return OK if not bad else COUNTEREXAMPLE
    lo = hi = args.n if args.n else None
    if lo is None:
        lo, hi = 1, args.n_max
    rows = screen_table(lo, hi, args.m_max)
    _emit(args, {"rows": [[n, m, v] for n, m, v in rows]},
          "\n".join(f"{n} {m} {str(v).lower()}" for n, m, v in rows))
    return OK


def cmd_rotation(args) -> int:
    curves = [parse_curve(c) for c in args.curve] if args.curve else \
        enumerate_curves(args.n, args.max_conj, dedupe=not args.all)
    reports = [rotation_intersection_report(args.n, k, curves, args.fuel, args.jobs)
               for k in (args.k if args.k else (1, 2))]
    _emit(args, {"reports": [r.to_json() for r in reports]}, "\n".join(r.to_text() for r in reports))
    if any(r.counterexamples for r in reports):
        return COUNTEREXAMPLE
    return UNDECIDED if any(r.undecided for r in reports) else OK


def cmd_multicurve(args) -> int:
    curves = [parse_curve(c) for c in args.curve] if args.curve else \
        enumerate_curves(args.n, args.max_conj, dedupe=not args.all)
    rep = rotation_multicurve_report(args.n, args.hypothesis, curves, args.fuel)
    _emit(args, rep.to_json(), rep.to_text())
    return COUNTEREXAMPLE if rep.counterexamples else OK


def cmd_round_trip(args) -> int:
    res = run_suite("lemma61", fuel=args.fuel, seed=args.seed, samples=args.samples)
    _emit(args, res.to_json(), res.to_text())
    return res.exit_code


def cmd_sym(args) -> int:
    rep = sym_hom_enumerate(args.n, args.k, workers=args.jobs)
    _emit(args, rep.to_json(), rep.to_text())
    return OK


def cmd_suite(args) -> int:
    opts = {"fuel": args.fuel, "workers": args.jobs, "max_conj": args.max_conj}
    if args.n is not None:
        opts["n"] = args.n
    res = run_suite(args.name, **opts)
    _emit(args, res.to_json(), res.to_text())
    return res.exit_code


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fuel", type=int, default=None, help="handle-reduction step budget")
    common.add_argument("--jobs", type=int, default=None, help="worker processes")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="braidhoms", description="Braid group homomorphism toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("word", parents=[common], help="reduce, compare or commute braid words")
    s.add_argument("action", choices=("reduce", "trivial", "compare", "commute"))
    s.add_argument("word", help='e.g. "B4: 1 2 -3"')
    s.add_argument("other", nargs="?")
    s.add_argument("--strands", type=int)
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("hom", parents=[common], help="make, verify, apply, transvect, compose, fingerprint")
    s.add_argument("action", choices=("make", "verify", "apply", "transvect", "compose", "fingerprint"))
    s.add_argument("hom", nargs="*", help="JSON file, inline JSON or '-'")
    s.add_argument("--source", type=int)
    s.add_argument("--target", type=int)
    s.add_argument("--images", help='"1 2; 3" (one image per generator)')
    s.add_argument("--word")
    s.add_argument("--by")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("standard", parents=[common], help="emit a standard homomorphism")
    s.add_argument("--kind", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--target", type=int)
    s.add_argument("--conjugator")
    s.set_defaults(func=cmd_standard)

    s = sub.add_parser("classify-cabling", parents=[common], help="normalize a cabling map")
    s.add_argument("hom")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("screen", parents=[common], help="divisibility tables")
    s.add_argument("--n", type=int)
    s.add_argument("--m-max", type=int)
    s.add_argument("--n-max", type=int, default=50)
    s.add_argument("--corollary", action="store_true", help="check n < m <= 2n for 5 <= n <= n-max")
    s.set_defaults(func=cmd_screen)

    for name, func, help_ in (("verify-prop31", cmd_rotation, "curves meet their rotated images"),
                              ("verify-prop32", cmd_multicurve, "multicurves under rotation powers")):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--n", type=int, default=5)
        s.add_argument("--max-conj", type=int, default=4)
        s.add_argument("--curve", action="append", help='e.g. "C5: 1 | 4 3"; repeatable')
        s.add_argument("--all", action="store_true", help="keep every conjugator, not one per curve")
        if name == "verify-prop31":
            s.add_argument("--k", type=int, action="append", choices=(1, 2))
        else:
            s.add_argument("--hypothesis", choices=("alpha1", "alpha2"), default="alpha1")
        s.set_defaults(func=func)

    s = sub.add_parser("verify-lemma61", parents=[common], help="semidirect round trip")
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--seed", type=int, default=61)
    s.set_defaults(func=cmd_round_trip)

    s = sub.add_parser("enumerate-sym", parents=[common], help="maps B_n -> S_k")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_sym)

    s = sub.add_parser("suite", parents=[common], help="run a named acceptance suite")
    s.add_argument("name", choices=sorted(SUITES))
    s.add_argument("--n", type=int)
    s.add_argument("--max-conj", type=int, default=4)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code else OK
    try:
        if args.fuel is None:
            args.fuel = _env_int("BRAIDHOMS_FUEL", DEFAULT_FUEL)
        if args.jobs is None:
            args.jobs = _env_int("BRAIDHOMS_JOBS", os.cpu_count() or 1)
        if args.fuel < 10 ** 4:
            raise Malformed("fuel must be at least 10^4")
        if args.jobs < 1:
            raise Malformed("jobs must be positive")
        if getattr(args, "max_conj", 1) < 1:
            raise Malformed("--max-conj must be positive")
        return args.func(args)
    except UndecidedError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return UNDECIDED
    except (Malformed, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
