"""Command-line front end.

Exit codes: 0 when the check holds (or the construction succeeded), 1 when the
input is well formed but the check fails, 2 on any error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import errors
from .adjunction import (
    Setting,
    adjunction_report,
    roundtrip_phi_psi,
    roundtrip_psi_phi,
    serialize_report,
    setting,
)
from .en_functor import en
from .enriched import enriched_violations
from .inter_functor import inter
from .internal import (
    CANON_MODES,
    canonical_violations,
    internal_violations,
    make_split,
    split_violations,
)
from .lawsuite import LAWS, check_sample, family_sample, run_suite
from .plaincat import category_violations, karoubi
from .search import DEFAULT_BUDGET
from .textio import (
    Document,
    enriched_document,
    internal_document,
    parse,
    plain_document,
    serialize,
)


class UsageError(Exception):
    pass


def _load(path, *kinds) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    doc = parse(text)
    if kinds and doc.kind not in kinds:
        raise UsageError(f"{path} is a {doc.kind}, expected {' or '.join(kinds)}")
    return doc


def _split_of(doc):
    P = doc.payload
    if P.R is None:
        raise UsageError("the internal category has no split block")
    try:
        return make_split(P.category, P.R, P.S)
    except KeyError as exc:
        raise UsageError(f"split block misses idempotent {exc.args[0]!r}") from None


def _lawful_enriched(doc):
    bad = enriched_violations(doc.payload, limit=3)
    if bad:
        raise errors.NotACategory("; ".join(bad))
    return doc.payload


def _lawful_internal(doc):
    bad = internal_violations(doc.payload.category, limit=3)
    if bad:
        raise errors.NotACategory("; ".join(bad))
    return doc.payload.category


def cmd_check(args):
    doc = _load(args.file)
    if doc.kind == "plain-category":
        bad = category_violations(doc.payload)
    elif doc.kind == "enriched-category":
        bad = enriched_violations(doc.payload)
    elif doc.kind == "internal-category":
        bad = internal_violations(doc.payload.category)
        if not bad and doc.payload.R is not None:
            bad = split_violations(doc.payload.category, *_rs(_split_of(doc)))
    else:
        bad = []
    lines = [f"{doc.kind}: {'lawful' if not bad else 'unlawful'}"] + [f"  {b}" for b in bad]
    return (0 if not bad else 1), lines


def _rs(split):
    return split.R, split.S


def cmd_karoubi(args):
    doc = _load(args.file, "plain-category")
    name = f"{doc.meta.get('name') or 'C'}-karoubi"
    return 0, serialize(plain_document(karoubi(doc.payload), name=name))


def cmd_inter(args):
    doc = _load(args.file, "enriched-category")
    IB = inter(_lawful_enriched(doc))
    name = f"{doc.meta.get('name') or 'M'}-inter"
    return 0, serialize(internal_document(IB.category, IB.split, name=name))


def cmd_en(args):
    doc = _load(args.file, "internal-category")
    name = f"{doc.meta.get('name') or 'A'}-en"
    return 0, serialize(enriched_document(en(_lawful_internal(doc)), name=name))


def cmd_split_check(args):
    doc = _load(args.file, "internal-category")
    A = _lawful_internal(doc)
    bad = split_violations(A, *_rs(_split_of(doc)))
    return (0 if not bad else 1), [f"split: {'yes' if not bad else 'no'}"] + [f"  {b}" for b in bad]


def cmd_canonical_check(args):
    doc = _load(args.file, "internal-category")
    A = _lawful_internal(doc)
    split = _split_of(doc)
    bad = split_violations(A, *_rs(split))
    if bad:
        return 1, ["split: no"] + [f"  {b}" for b in bad]
    bad = canonical_violations(A, split.R, split.S, args.mode)
    lines = [f"canonical ({args.mode}): {'yes' if not bad else 'no'}"] + [f"  {b}" for b in bad]
    return (0 if not bad else 1), lines


def _setting(args) -> Setting:
    doc = _load(args.file, "enriched-category")
    M = _lawful_enriched(doc)
    if args.target == "self":
        return setting(M, mode=args.mode)
    tdoc = _load(args.target, "internal-category")
    A = _lawful_internal(tdoc)
    return setting(M, A, _split_of(tdoc), mode=args.mode)


def _require_canonical(st):
    bad = st.canonical_problems()
    if bad:
        raise errors.NotCanonicalSplit("; ".join(bad))


def cmd_adjoint_check(args):
    st = _setting(args)
    _require_canonical(st)
    rep = adjunction_report(st, args.budget)
    return (0 if rep.bijective else 1), serialize_report(rep, st)


def cmd_roundtrip(args):
    st = _setting(args)
    _require_canonical(st)
    a = roundtrip_psi_phi(st, args.budget)
    b = roundtrip_phi_psi(st, args.budget)
    lines = [f"psi(phi(F)) == F: {'yes' if a else 'no'}",
             f"phi(psi(F)) == F: {'yes' if b else 'no'}"]
    return (0 if a and b else 1), lines


def cmd_extensivity_selftest(args):
    if args.file:
        doc = _load(args.file, "finset-map-family")
        results = {law: (int(ok), 1) for law, ok in
                   check_sample(family_sample(doc.payload.sets, doc.payload.maps)).items()}
    else:
        results = run_suite(args.seed, args.count)
    lines = [f"seed {args.seed}" if not args.file else f"family {doc.meta.get('name') or args.file}"]
    ok = True
    for law in LAWS:
        passed, total = results[law]
        ok &= passed == total
        lines.append(f"{law}: {passed}/{total}")
    return (0 if ok else 1), lines


COMMANDS = {
    "check": cmd_check,
    "karoubi": cmd_karoubi,
    "inter": cmd_inter,
    "en": cmd_en,
    "split-check": cmd_split_check,
    "canonical-check": cmd_canonical_check,
    "adjoint-check": cmd_adjoint_check,
    "roundtrip": cmd_roundtrip,
    "extensivity-selftest": cmd_extensivity_selftest,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="splitcat", description="Idempotent splittings of finite categories.")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="cap on candidate assignments during enumeration")
    p.add_argument("--mode", choices=CANON_MODES, default="canon-a",
                   help="reading of the canonicity condition")
    p.add_argument("--out", help="write the report here instead of standard output")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("check", "karoubi", "inter", "en", "split-check", "canonical-check"):
        sub.add_parser(name).add_argument("file")
    for name in ("adjoint-check", "roundtrip"):
        s = sub.add_parser(name)
        s.add_argument("file")
        s.add_argument("--target", default="self",
                       help="'self' for inter(M) with its own split, or an internal-category file")
    s = sub.add_parser("extensivity-selftest")
    s.add_argument("file", nargs="?")
    s.add_argument("--count", type=int, default=200)
    # global options are also accepted after the subcommand
    for s in sub.choices.values():
        s.add_argument("--budget", type=int, default=argparse.SUPPRESS)
        s.add_argument("--mode", choices=CANON_MODES, default=argparse.SUPPRESS)
        s.add_argument("--out", default=argparse.SUPPRESS)
        s.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return p


def _error_line(exc) -> str:
    kind = type(exc).__name__
    if isinstance(exc, errors.ParseError):
        return f"error: {kind} at line {exc.line}, column {exc.column}: {exc.message}"
    if isinstance(exc, errors.SizeBudgetExceeded):
        return (f"error: {kind}: budget {exc.budget} exceeded after {exc.explored} "
                f"candidates ({exc.context})")
    return f"error: {kind}: {exc}"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code, report = COMMANDS[args.command](args)
    except (UsageError, errors.CategoryError, ValueError) as exc:
        if isinstance(exc, UsageError):
            stderr.write(f"error: usage: {exc}\n")
        else:
            stderr.write(_error_line(exc) + "\n")
        return 2
    text = report if isinstance(report, str) else "\n".join(report) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
