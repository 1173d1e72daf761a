"""Small concrete categories with hand-made splits, used as negative controls."""

from __future__ import annotations

import itertools

from .ambient import Atom
from .internal import InternalCat, SplitData, internalize, make_split
from .plaincat import FinCat, idempotents, karoubi, monoid_category


def _fun_label(m, n, values):
    return Atom(f"{m}.{n}." + "".join(str(v) for v in values))


def finord(sizes=(1, 2, 3)) -> FinCat:
    """Finite cardinals and all functions between them.

    The arrow ``m.n.v0v1..`` sends ``i`` to ``v_i``.
    """
    objs = tuple(Atom(str(k)) for k in sizes)
    funs = {}
    arrows, dom, cod = [], {}, {}
    for m in sizes:
        for n in sizes:
            for values in itertools.product(range(n), repeat=m):
                f = _fun_label(m, n, values)
                funs[f] = (m, n, values)
                arrows.append(f)
                dom[f], cod[f] = Atom(str(m)), Atom(str(n))
    comp = {}
    for g in arrows:
        for f in arrows:
            mg, ng, vg = funs[g]
            mf, nf, vf = funs[f]
            if nf == mg:
                comp[(g, f)] = _fun_label(mf, ng, tuple(vg[v] for v in vf))
    idents = {Atom(str(k)): _fun_label(k, k, tuple(range(k))) for k in sizes}
    return FinCat(objs, tuple(arrows), dom, cod, comp, idents)


def monotone_split(C: FinCat):
    """Image factorisation of each idempotent with the increasing section.

    Returns ``(R, S)`` keyed by idempotent arrow of ``finord()``.
    """
    R, S = {}, {}
    for e in idempotents(C):
        m, _, values = _parse(e)
        image = sorted(set(values))
        k = len(image)
        R[e] = _fun_label(m, k, tuple(image.index(v) for v in values))
        S[e] = _fun_label(k, m, tuple(image))
    return R, S


def _parse(f):
    m, n, digits = f.name.split(".")
    return int(m), int(n), tuple(int(d) for d in digits)


def finord_internal():
    """``FinOrd{1,2,3}`` internalized, with the monotone split."""
    C = finord()
    A = internalize(C)
    R, S = monotone_split(C)
    return A, make_split(A, R, S)


def permuted_identity_split(A: InternalCat, R: dict, S: dict, obj=Atom("3")) -> SplitData:
    """Split the identity of ``obj`` through a 3-cycle and its inverse instead of itself."""
    n = int(obj.name)
    cycle = tuple((i + 1) % n for i in range(n))
    inverse = tuple((i - 1) % n for i in range(n))
    ident = A.ident(obj)
    R, S = dict(R), dict(S)
    R[ident] = _fun_label(n, n, cycle)
    S[ident] = _fun_label(n, n, inverse)
    return make_split(A, R, S)


CLIFFORD = ("1", "f", "g", "t")
_CLIFFORD_TABLE = {
    ("f", "f"): "f", ("f", "g"): "g", ("g", "f"): "g", ("f", "t"): "t", ("t", "f"): "t",
    ("g", "g"): "g", ("g", "t"): "t", ("t", "g"): "t", ("t", "t"): "g",
}


def clifford_monoid() -> FinCat:
    """``{1, f, g, t}``: ``f`` a unit-like idempotent over the group ``{g, t}``."""
    els = tuple(Atom(x) for x in CLIFFORD)
    table = {}
    for x, y in itertools.product(CLIFFORD, repeat=2):
        if x == "1":
            z = y
        elif y == "1":
            z = x
        else:
            z = _CLIFFORD_TABLE[(x, y)]
        table[(Atom(x), Atom(y))] = Atom(z)
    return monoid_category(els, table, Atom("1"), obj=Atom("*"))


def twisted_clifford():
    """The Karoubi envelope of the Clifford monoid with one split twisted by ``t``.

    ``h = (f, g, f)`` splits as ``(f, t, g) . (g, t, f)`` instead of through
    ``g, g``.  It is still a split, but not a canonical one.  Returns
    ``(A, canonical split, twisted split)``.
    """
    from .ambient import triple
    K = karoubi(clifford_monoid())
    A = internalize(K)
    R = {u: w.retraction for u, w in K.split.items()}
    S = {u: w.section for u, w in K.split.items()}
    f, g, t = Atom("f"), Atom("g"), Atom("t")
    h = triple(f, g, f)
    canonical = make_split(A, R, S)
    R[h] = triple(g, t, f)
    S[h] = triple(f, t, g)
    return A, canonical, make_split(A, R, S)
