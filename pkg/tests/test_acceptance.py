"""Acceptance gate: one PASS/FAIL line per criterion, each within its time bound.

Run under pytest (lines are printed past output capture) or directly with
``python3 tests/test_acceptance.py``.
"""

import itertools
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import karoubi_arrows  # noqa: E402
from splitcat.adjunction import (  # noqa: E402
    adjunction_report,
    check_naturality,
    left_homset,
    roundtrip_phi_psi,
    roundtrip_psi_phi,
    setting,
)
from splitcat.ambient import FinMap, Pair, triple  # noqa: E402
from splitcat.en_functor import en  # noqa: E402
from splitcat.enriched import check_enriched, enumerate_enriched_functors  # noqa: E402
from splitcat.errors import SizeBudgetExceeded  # noqa: E402
from splitcat.fixtures import ADJUNCTION_SET, ENRICHED, idem_monoid, idem_monoid_plain  # noqa: E402
from splitcat.generators import GenConfig, stream  # noqa: E402
from splitcat.inter_functor import inter, verify_triple_equalizer_iso  # noqa: E402
from splitcat.internal import (  # noqa: E402
    InternalCat,
    canonical_violations,
    check_canonical,
    check_internal,
    check_split,
    enumerate_split_preserving_functors,
    internal_violations,
)
from splitcat.lawsuite import run_suite  # noqa: E402
from splitcat.plaincat import (  # noqa: E402
    idempotents,
    karoubi,
    karoubi_split,
    underlying_category,
    verify_split_equalizer,
)
from splitcat.setcats import finord_internal, permuted_identity_split, twisted_clifford  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]


def report(number, title, bound, check):
    """Run ``check`` (returning ``(ok, detail)``), print the verdict line, return ok."""
    start = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failure, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    timely = elapsed < bound
    verdict = "PASS" if ok and timely else "FAIL"
    extra = "" if timely else f", over the {bound:g}s bound"
    line = f"criterion {number} [{verdict}] {title}: {detail} ({elapsed:.2f}s{extra})"
    _emit(line)
    return ok and timely


_capture = None


def _emit(line):
    if _capture is not None:
        with _capture.disabled():
            print("\n" + line)
    else:
        print(line)


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


# -- the checks ------------------------------------------------------------------

def extensivity():
    results = run_suite(seed=0, count=200, max_total=12)
    bad = {law: r for law, r in results.items() if r[0] != r[1]}
    return not bad, "all laws 200/200" if not bad else f"failures {bad}"


def karoubi_oracle():
    K = karoubi(idem_monoid_plain())
    one, e = K.objects
    breakdown = {(a.name, b.name): sorted(f.right.left.name for f in K.hom(a, b))
                 for a in K.objects for b in K.objects}
    want = {("1", "1"): ["1", "e"], ("1", "e"): ["e"], ("e", "1"): ["e"], ("e", "e"): ["e"]}
    ok = len(K.objects) == 2 and len(K.arrows) == 5 and breakdown == want
    checked = 0
    for C in stream("plain", GenConfig(0, maxObjects=3, maxHomSize=3), 50):
        S = karoubi(C)
        for u in idempotents(S):
            w = karoubi_split(S, u)
            ok &= verify_split_equalizer(S, w, u)
            checked += 1
    return ok, f"2 objects, 5 arrows; {checked} idempotents split in 50 splitting categories"


def inter_vs_karoubi():
    ok = True
    for M in stream("enriched", GenConfig(1000, maxObjects=1, maxHomSize=4, maxArrows=4), 50):
        a = M.objs[0]
        IB = inter(M)
        K = karoubi(underlying_category(M))
        # explicit bijection: (q, m, p) of inter(M) to the Karoubi arrow m: p -> q
        bij = {}
        for y in IB.arrowObj:
            _, _, q, m, p = IB.decode_arrow(y)
            bij[y] = triple(q, m, p)
        ok &= len(set(bij.values())) == len(bij) and set(bij.values()) == set(K.arrows)
        mul = (lambda g, f, M=M, a=a: M.compose(a, a, a, g, f))
        ok &= len(bij) == len(karoubi_arrows(list(M.hom[(a, a)]), mul))
        # and the bijection respects composition
        A = IB.category
        for e in A.A2:
            ok &= bij[A.comp(e)] == K.comp[(bij[e.left], bij[e.right])]
        if not ok:
            return False, f"mismatch on {M.hom[(a, a)]!r}"
    return ok, "50 instances, bijection preserves composition"


def inter_lawful():
    ok, skipped = True, 0
    for M in stream("enriched", GenConfig(2000, maxObjects=3, maxHomSize=3), 100):
        IB = inter(M)
        A, R, S = IB.category, IB.split.R, IB.split.S
        ok &= check_internal(A) and check_split(A, R, S) and check_canonical(A, R, S)
        try:
            ok &= verify_triple_equalizer_iso(M, budget=5000)
        except SizeBudgetExceeded:
            skipped += 1
    return ok, f"100 instances lawful, split, canonical; equalizer iso on {100 - skipped}"


def en_lawful():
    ok = True
    for A in stream("internal", GenConfig(3000, maxObjects=3, maxHomSize=3), 100):
        E = en(A)
        ok &= check_enriched(E) and sum(len(h) for h in E.hom.values()) == len(A.A1)
    return ok, "100 instances"


def round_trips():
    ok = True
    sizes = []
    for name in ADJUNCTION_SET:
        st = setting(ENRICHED[name]())
        ok &= roundtrip_psi_phi(st) and roundtrip_phi_psi(st)
        sizes.append(f"{name}={len(left_homset(st))}")
    return ok, ", ".join(sizes)


def adjunction_bijection():
    ok = True
    pairs = [(name, None) for name in ADJUNCTION_SET] + [("two-object", "idem-monoid")]
    sizes = []
    for src, tgt in pairs:
        M = ENRICHED[src]()
        if tgt is None:
            st = setting(M)
        else:
            IB = inter(ENRICHED[tgt]())
            st = setting(M, IB.category, IB.split)
        rep = adjunction_report(st)
        ok &= rep.bijective
        sizes.append(f"{src}->{tgt or 'self'} {len(rep.left)}/{len(rep.right)}")
    # naturality over every (u, v) on the two smallest fixtures
    small = {name: ENRICHED[name]() for name in ("trivial", "idem-monoid")}
    inters = {name: inter(M) for name, M in small.items()}
    squares = 0
    for m2, m1, a1, a2 in itertools.product(small, repeat=4):
        st = setting(small[m1], inters[a1].category, inters[a1].split)
        st2 = setting(small[m2], inters[a2].category, inters[a2].split)
        us = enumerate_enriched_functors(small[m2], small[m1])
        vs = enumerate_split_preserving_functors(inters[a1].category, inters[a2].category,
                                                 inters[a1].split, inters[a2].split)
        left = left_homset(st)
        for u, v in itertools.product(us, vs):
            ok &= check_naturality(st, st2, u, v, left=left)
            squares += 1
    return ok, "; ".join(sizes) + f"; {squares} naturality squares"


def negative_controls():
    notes = []
    A, split = finord_internal()
    R = {s.inner: split.R(s) for s in split.idemObj.obj}
    S = {s.inner: split.S(s) for s in split.idemObj.obj}
    bad = permuted_identity_split(A, R, S)
    ok = check_split(A, bad.R, bad.S) and check_canonical(A, split.R, split.S)
    problems = canonical_violations(A, bad.R, bad.S)
    ok &= bool(problems) and "ident(3)" in problems[0]
    notes.append(problems[0] if problems else "none")
    C, _, twisted = twisted_clifford()
    problems = canonical_violations(C, twisted.R, twisted.S)
    ok &= bool(problems) and check_split(C, twisted.R, twisted.S)
    # corrupt a single composite of inter({1,e})
    IB = inter(idem_monoid())
    X = IB.category
    x = IB.M.objs[0]
    one, e = IB.M.hom[(x, x)]
    outer, inner = IB.arrow_elem(x, x, e, e, one), IB.arrow_elem(x, x, one, e, one)
    table = list(X.comp.table)
    table[X.A2.index(Pair(outer, inner))] = inner
    broken = InternalCat(X.A0, X.A1, X.dom, X.cod, X.ident, FinMap(X.A2, X.A1, table))
    problems = internal_violations(broken)
    ok &= bool(problems) and repr(outer) in problems[0] and repr(inner) in problems[0]
    notes.append(problems[0] if problems else "none")
    return ok, " | ".join(notes)


_DUMP = (
    "from splitcat.fixtures import corpus\n"
    "from splitcat.textio import serialize\n"
    "import sys\n"
    "for k, d in sorted(corpus().items()):\n"
    "    sys.stdout.write(k + '\\n' + serialize(d))\n"
)


def determinism():
    outs = []
    for seed in ("0", "4242"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        run = subprocess.run([sys.executable, "-c", _DUMP], capture_output=True, text=True,
                             env=env, cwd=ROOT, check=True)
        outs.append(run.stdout)
    golden = "".join(f"{p.name}\n{p.read_text(encoding='utf-8')}"
                     for p in sorted((ROOT / "fixtures").iterdir()))
    ok = outs[0] == outs[1] == golden
    return ok, f"{len(outs[0])} bytes identical across hash seeds and golden files"


CRITERIA = [
    (1, "extensivity law suite", 10, extensivity),
    (2, "Karoubi oracle", 5, karoubi_oracle),
    (3, "inter matches Karoubi on one-object instances", 30, inter_vs_karoubi),
    (4, "inter lawful and canonical", 60, inter_lawful),
    (5, "en' lawful", 30, en_lawful),
    (6, "round trips", 60, round_trips),
    (7, "hom-set bijection and naturality", 120, adjunction_bijection),
    (8, "negative controls", 5, negative_controls),
    (9, "determinism", 5, determinism),
]


@pytest.mark.parametrize("number,title,bound,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, bound, check):
    assert report(number, title, bound, check)


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
