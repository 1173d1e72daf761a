"""Brute-force reference computations, written without the library's constructions.

Everything here works on plain python data: dicts, tuples and itertools.
"""

import itertools


def monoid_idempotents(elements, mul):
    return [e for e in elements if mul(e, e) == e]


def karoubi_arrows(elements, mul):
    """Triples ``(d, f, e)`` of a one-object category with ``d f e == f``."""
    idem = monoid_idempotents(elements, mul)
    return [(d, f, e) for d in idem for e in idem for f in elements
            if mul(d, mul(f, e)) == f]


def inter_triples(elements, mul):
    """All ``(q, m, p)`` with ``q, p`` idempotent and ``q m p == m``, scanning every triple."""
    return [(q, m, p) for q, m, p in itertools.product(elements, repeat=3)
            if mul(q, q) == q and mul(p, p) == p and mul(q, mul(m, p)) == m]


def plain_functors(objs1, arrows1, dom1, cod1, comp1, id1, objs2, arrows2, dom2, cod2, comp2, id2):
    """Every functor between two finite categories given as dicts, by filtering all maps."""
    out = []
    for images in itertools.product(objs2, repeat=len(objs1)):
        F0 = dict(zip(objs1, images))
        for arrow_images in itertools.product(arrows2, repeat=len(arrows1)):
            F1 = dict(zip(arrows1, arrow_images))
            if any(dom2[F1[f]] != F0[dom1[f]] or cod2[F1[f]] != F0[cod1[f]] for f in arrows1):
                continue
            if any(F1[id1[a]] != id2[F0[a]] for a in objs1):
                continue
            if all(comp2[(F1[g], F1[f])] == F1[h] for (g, f), h in comp1.items()):
                out.append((F0, F1))
    return out


def internal_as_dicts(A):
    """Read an internal category into dicts (only table lookups)."""
    objs = list(A.A0)
    arrows = list(A.A1)
    dom = dict(A.dom.items())
    cod = dict(A.cod.items())
    ident = dict(A.ident.items())
    comp = {(e.left, e.right): y for e, y in A.comp.items()}
    return objs, arrows, dom, cod, comp, ident


def enriched_as_dicts(M):
    """The underlying category of an enriched one, arrows labelled ``(a, b, m)``."""
    objs = list(M.objs)
    arrows, dom, cod = [], {}, {}
    for a, b in itertools.product(objs, repeat=2):
        for m in M.hom[(a, b)]:
            arrows.append((a, b, m))
            dom[(a, b, m)], cod[(a, b, m)] = a, b
    comp = {}
    for a, b, c in itertools.product(objs, repeat=3):
        for n in M.hom[(b, c)]:
            for m in M.hom[(a, b)]:
                comp[((b, c, n), (a, b, m))] = (a, c, M.comp[(a, b, c)](_pair(n, m)))
    ident = {a: (a, a, M.ident[a]) for a in objs}
    return objs, arrows, dom, cod, comp, ident


def _pair(n, m):
    from splitcat.ambient import Pair
    return Pair(n, m)


def count_functors(src, tgt):
    return len(plain_functors(*src, *tgt))
