"""Command-line front end.

Exit status: 0 success / verified, 1 verification failure, 2 bad usage or
parameters.  Every error is a single stderr line ``error: <kind>: <detail>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import constructions as C
from . import oracle
from .field import FieldError
from .fixtures import FieldRegistry, FixtureError, load_fixture
from .numtheory import is_prime_power
from .sequences import (
    AlphabetError,
    Sequence,
    from_text,
    is_complementary,
    is_legendre_pair,
    is_symmetric,
    pair_sums,
    summed_spectrum,
    to_json,
    to_text,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, kind: str, detail: str):
        super().__init__(detail)
        self.kind = kind
        self.detail = detail


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("usage", message)


# -- sequence files -------------------------------------------------------------

def parse_sequence_text(text: str, source: str = "<input>") -> list[tuple[Sequence, Sequence]]:
    """Pairs from glyph lines; blank lines and ``#`` comments are skipped."""
    seqs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            seqs.append(from_text(body))
        except AlphabetError as exc:
            raise UsageError("parse", f"{source}:{lineno}: {exc}") from None
    if len(seqs) % 2:
        raise UsageError("parse", f"{source}: odd number of sequence lines ({len(seqs)})")
    return list(zip(seqs[::2], seqs[1::2]))


def parse_sequence_file(path) -> list[tuple[Sequence, Sequence]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError("io", f"cannot read {path}: {exc.strerror}") from None
    return parse_sequence_text(text, str(path))


def render_pair(a: Sequence, b: Sequence) -> str:
    return f"({to_text(a)})\n({to_text(b)})"


# -- subcommands ----------------------------------------------------------------

def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _spectrum_json(spec):
    return [[v.re, v.im] for v in spec]


def _legendre_block(a, b):
    rep = is_legendre_pair(a, b)
    sa, sb = pair_sums(a, b)
    info = {
        "legendre": rep.ok,
        "violations": [[u, [v.re, v.im]] for u, v in rep.violations],
        "sums": [[sa.re, sa.im], [sb.re, sb.im]],
    }
    lines = [f"# legendre pair: {'verified' if rep.ok else 'FAILED'}"]
    lines += [f"# violation u={u}: {v}" for u, v in rep.violations]
    return rep.ok, info, lines


def cmd_generate(args, fields: FieldRegistry) -> int:
    kind, n = args.construction, args.param
    header = {"construction": kind, "param": n}
    if kind == "thm1":
        F = fields(n) if is_prime_power(n) else None
        a, b = C.theorem1_pair(n, F)
        ok, info, notes = _legendre_block(a, b)
        field_desc = F.describe()
    elif kind == "thm2":
        F = fields(C.check_partner(n) ** 2)
        a, b = C.theorem2_pair(n, F)
        ok, info, notes = _legendre_block(a, b)
        comp = C.compression_check(a, n)
        ok = ok and comp
        info["compression"] = comp
        notes.append(f"# compression: {'ok' if comp else 'FAILED'}")
        field_desc = F.describe()
    elif kind == "gs":
        C.check_gs_order(n)
        F = fields(n * n)
        a, b = C.gs_pair(n, F)
        comp = is_complementary(a, b)
        sym = is_symmetric(a) and is_symmetric(b)
        ok = comp and sym
        info = {"complementary": comp, "symmetric": sym}
        notes = [f"# complementary: {comp}; symmetric: {sym}"]
        field_desc = F.describe()
    elif kind == "w1":
        F = fields(C.check_partner(n) ** 2)
        a, b = C.w1_pair(n, F)
        spec = summed_spectrum(a, b)
        ok = all(v == (4 - 4 * n if u == n else 0) for u, v in enumerate(spec) if u)
        ok = ok and is_symmetric(a) and is_symmetric(b)
        info = {"summed_spectrum": _spectrum_json(spec), "law": ok}
        notes = [f"# summed spectrum: {' '.join(map(str, spec))}", f"# law 4-4p at p, 0 elsewhere: {ok}"]
        field_desc = F.describe()
    else:  # w2
        y = C.w2_sequence(n)
        spec = summed_spectrum(y)
        ok = all(v == (2 * n - 4 if u == n else -2) for u, v in enumerate(spec) if u)
        info = {"spectrum": _spectrum_json(spec), "law": ok}
        payload = dict(header, sequences=[to_json(y)], **info)
        text = "\n".join([f"# w2 {n} length={2 * n}", f"({to_text(y)})",
                          f"# spectrum: {' '.join(map(str, spec))}", f"# law 2p-4 at p, -2 elsewhere: {ok}"])
        _emit(args, payload, text)
        return EXIT_OK if ok else EXIT_FAIL
    payload = dict(header, field=field_desc, sequences=[to_json(a), to_json(b)], **info)
    text = "\n".join([f"# {kind} {n} length={len(a)} field={field_desc}", render_pair(a, b)] + notes)
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, fields) -> int:
    pairs = parse_sequence_file(args.path)
    results, lines, all_ok = [], [], True
    for idx, (a, b) in enumerate(pairs, 1):
        if len(a) != len(b):
            raise UsageError("parse", f"pair {idx}: lengths {len(a)} and {len(b)} differ")
        if args.property == "complementary":
            ok = is_complementary(a, b)
            entry = {"pair": idx, "length": len(a), "ok": ok}
            lines.append(f"pair {idx} N={len(a)}: {'ok' if ok else 'FAIL'}")
        else:
            try:
                rep = is_legendre_pair(a, b)
            except AlphabetError as exc:
                raise UsageError("alphabet", f"pair {idx}: {exc}") from None
            ok = rep.ok
            entry = {"pair": idx, "length": len(a), "ok": ok,
                     "violations": [[u, [v.re, v.im]] for u, v in rep.violations]}
            detail = "" if ok else " violations " + ", ".join(f"u={u}:{v}" for u, v in rep.violations)
            lines.append(f"pair {idx} N={len(a)}: {'ok' if ok else 'FAIL'}{detail}")
        all_ok &= ok
        results.append(entry)
    lines.append(f"{sum(r['ok'] for r in results)}/{len(results)} pairs verified")
    _emit(args, {"property": args.property, "pairs": results, "ok": all_ok}, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_brute(args, fields) -> int:
    try:
        res = oracle.brute_force_legendre(args.length, args.alphabet, args.workers, args.max_exemplars)
    except ValueError as exc:
        raise UsageError("parameter", str(exc)) from None
    ex = res.exemplars
    payload = {"length": res.length, "alphabet": res.alphabet, "count": res.count,
               "candidates": res.candidates, "exemplars": [[to_json(a), to_json(b)] for a, b in ex]}
    text = [f"# brute force {res.alphabet} N={res.length}: {res.count} pairs of {res.candidates} candidates"]
    text += [render_pair(a, b) for a, b in ex]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_coverage(args, fields) -> int:
    try:
        rep = oracle.coverage_report(args.limit)
    except ValueError as exc:
        raise UsageError("parameter", str(exc)) from None
    _emit(args, rep.to_json(), rep.render())
    return EXIT_OK


def cmd_census(args, fields) -> int:
    try:
        count = oracle.count_partner_primes(args.limit)
    except ValueError as exc:
        raise UsageError("parameter", str(exc)) from None
    _emit(args, {"limit": args.limit, "count": count}, f"primes p <= {args.limit} with 2p-1 a prime power: {count}")
    return EXIT_OK


CATALOGS = {1: "char_pairs.txt", 2: "lift_pairs.txt"}


def table_lengths(which: int, limit: int = 40) -> list[int]:
    rep = oracle.coverage_report(limit)
    if which == 1:
        return rep.lengths("thm1")
    return [n for n in rep.lengths("thm2") if (n // 2) % 2 == 1]


def cmd_tables(args, fields) -> int:
    out_json, lines, all_ok = [], [], True
    for which in args.which:
        if args.verbatim:
            text = resources.files("legendre_pairs").joinpath("data", CATALOGS[which]).read_text()
            pairs = parse_sequence_text(text, f"table{which}")
        else:
            pairs = []
            for n in table_lengths(which, args.limit):
                if which == 1:
                    q = 2 * n + 1
                    pairs.append(C.theorem1_pair(q, fields(q)))
                else:
                    p = n // 2
                    pairs.append(C.theorem2_pair(p, fields((2 * p - 1) ** 2)))
        lines.append(f"# table {which}")
        for a, b in pairs:
            ok = is_legendre_pair(a, b).ok
            all_ok &= ok
            lines.append(f"# N = {len(a)}{'' if ok else ' (FAILED)'}")
            lines.append(render_pair(a, b))
            out_json.append({"table": which, "length": len(a), "ok": ok, "pair": [to_json(a), to_json(b)]})
    _emit(args, {"rows": out_json, "ok": all_ok}, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="legendre-pairs", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--fixture", help="field fixture file pinning (p, n, modulus, g); 'pinned' for the bundled one")
    # same options after the subcommand; SUPPRESS keeps the top-level values otherwise
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--fixture", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", parents=[common], help="run one construction")
    g.add_argument("construction", choices=["thm1", "thm2", "gs", "w1", "w2"])
    g.add_argument("param", type=int, help="q for thm1/gs, p for thm2/w1/w2")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", parents=[common], help="verify sequence pairs in a glyph file")
    v.add_argument("path")
    v.add_argument("--property", choices=["legendre", "complementary"], default="legendre")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("brute", parents=[common], help="exhaustive Legendre pair search")
    b.add_argument("length", type=int)
    b.add_argument("alphabet", choices=["binary", "quaternary"])
    b.add_argument("--workers", type=int, default=None)
    b.add_argument("--max-exemplars", type=int, default=20)
    b.set_defaults(func=cmd_brute)

    c = sub.add_parser("coverage", parents=[common], help="which even lengths are covered")
    c.add_argument("limit", type=int)
    c.set_defaults(func=cmd_coverage)

    s = sub.add_parser("census", parents=[common], help="count primes p with 2p-1 a prime power")
    s.add_argument("limit", type=int)
    s.set_defaults(func=cmd_census)

    t = sub.add_parser("tables", parents=[common], help="emit catalogs of pairs: 1 theorem1_pair, 2 theorem2_pair")
    t.add_argument("which", nargs="*", type=int, choices=[1, 2], default=[1, 2])
    t.add_argument("--verbatim", action="store_true", help="print the transcribed published rows")
    t.add_argument("--limit", type=int, default=40)
    t.set_defaults(func=cmd_tables)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        fields = load_fixture(args.fixture)
        return args.func(args, fields)
    except UsageError as exc:
        print(f"error: {exc.kind}: {exc.detail}", file=sys.stderr)
    except (C.ConstructionError, FieldError, FixtureError) as exc:
        print(f"error: parameter: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
