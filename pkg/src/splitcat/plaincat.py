"""Ordinary finite categories, idempotents and the Karoubi envelope."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ambient import Pair, triple, untriple
from .errors import NotACategory, NotIdempotent


@dataclass(frozen=True)
class SplitWitness:
    mid: object
    retraction: object
    section: object


@dataclass(frozen=True, eq=False)
class FinCat:
    """A finite category with uniquely labelled arrows.

    ``comp[(g, f)]`` is ``g . f`` and is present exactly for composable pairs
    (``cod f == dom g``).  ``split`` optionally records a chosen split for
    idempotents, keyed by the idempotent arrow.
    """

    objects: tuple
    arrows: tuple
    dom: dict
    cod: dict
    comp: dict
    idents: dict
    split: dict = field(default_factory=dict)

    def hom(self, a, b) -> list:
        return [f for f in self.arrows if self.dom[f] == a and self.cod[f] == b]

    def then(self, f, g):
        return self.comp[(g, f)]

    def composable_pairs(self):
        return [(g, f) for g in self.arrows for f in self.arrows
                if self.dom[g] == self.cod[f]]

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (self.objects == other.objects and self.arrows == other.arrows
                and self.dom == other.dom and self.cod == other.cod
                and self.comp == other.comp and self.idents == other.idents
                and self.split == other.split)


def category_violations(C: FinCat, limit: int = 10) -> list[str]:
    """Human-readable list of broken category laws (empty when lawful)."""
    out = []

    def note(msg):
        out.append(msg)
        return len(out) >= limit

    objs = set(C.objects)
    if len(set(C.arrows)) != len(C.arrows):
        if note("arrow labels are not unique"):
            return out
    for f in C.arrows:
        if C.dom.get(f) not in objs or C.cod.get(f) not in objs:
            if note(f"arrow {f!r} has an unknown endpoint"):
                return out
    if out:
        return out
    for a in C.objects:
        i = C.idents.get(a)
        if i is None or C.dom.get(i) != a or C.cod.get(i) != a:
            if note(f"identity of {a!r} missing or has wrong endpoints"):
                return out
    if out:
        return out
    arrows = set(C.arrows)
    for g, f in C.composable_pairs():
        h = C.comp.get((g, f))
        if h not in arrows:
            if note(f"composite {g!r}.{f!r} missing"):
                return out
        elif C.dom[h] != C.dom[f] or C.cod[h] != C.cod[g]:
            if note(f"composite {g!r}.{f!r} = {h!r} has wrong endpoints"):
                return out
    extra = [k for k in C.comp if C.dom.get(k[0]) != C.cod.get(k[1])]
    if extra:
        note(f"composite given for non-composable pair {extra[0]!r}")
    if out:
        return out
    for f in C.arrows:
        if C.comp[(f, C.idents[C.dom[f]])] != f:
            if note(f"right unit law fails at {f!r}"):
                return out
        if C.comp[(C.idents[C.cod[f]], f)] != f:
            if note(f"left unit law fails at {f!r}"):
                return out
    for g, f in C.composable_pairs():
        gf = C.comp[(g, f)]
        for h in C.arrows:
            if C.dom[h] == C.cod[g]:
                if C.comp[(h, gf)] != C.comp[(C.comp[(h, g)], f)]:
                    if note(f"associativity fails at ({h!r}, {g!r}, {f!r})"):
                        return out
    return out


def check_category(C: FinCat) -> bool:
    return not category_violations(C, limit=1)


def idempotents(C: FinCat) -> list:
    """All ``e`` with ``dom e == cod e`` and ``e . e == e``, identities included."""
    return [e for e in C.arrows
            if C.dom[e] == C.cod[e] and C.comp[(e, e)] == e]


def karoubi(C: FinCat) -> FinCat:
    """The splitting category of ``C``.

    Objects are the idempotents of ``C``.  An arrow ``e -> d`` is an arrow
    ``f`` of ``C`` with ``d f e == f``, labelled ``triple(d, f, e)``; the
    identity of ``e`` is ``triple(e, e, e)``.  The canonical split (through
    the idempotent itself) is stored in ``split``.
    """
    if not check_category(C):
        raise NotACategory("; ".join(category_violations(C, limit=3)))
    objs = tuple(idempotents(C))
    arrows, dom, cod = [], {}, {}
    for e in objs:
        for d in objs:
            for f in C.hom(C.dom[e], C.dom[d]):
                if C.comp[(d, C.comp[(f, e)])] == f:
                    label = triple(d, f, e)
                    arrows.append(label)
                    dom[label] = e
                    cod[label] = d
    comp = {}
    for g in arrows:
        for f in arrows:
            if dom[g] == cod[f]:
                d, gg, _ = untriple(g)
                _, ff, e = untriple(f)
                comp[(g, f)] = triple(d, C.comp[(gg, ff)], e)
    idents = {e: triple(e, e, e) for e in objs}
    split = {}
    for f in arrows:
        d, u, e = untriple(f)
        if d == e and C.comp[(u, u)] == u:
            # f: e -> e idempotent; it splits through the object u
            split[f] = SplitWitness(u, triple(u, u, e), triple(e, u, u))
    return FinCat(objs, tuple(arrows), dom, cod, comp, idents, split)


def is_idempotent(C: FinCat, f) -> bool:
    return C.dom[f] == C.cod[f] and C.comp[(f, f)] == f


def karoubi_split(SplitC: FinCat, f) -> SplitWitness:
    """The stored canonical split of an idempotent of a splitting category."""
    if f not in SplitC.dom or not is_idempotent(SplitC, f):
        raise NotIdempotent(f"{f!r} is not an idempotent")
    w = SplitC.split.get(f)
    if w is None:
        raise NotIdempotent(f"no split recorded for {f!r}")
    return w


def splits(C: FinCat, w: SplitWitness, e) -> bool:
    """Do ``r . s == id_mid`` and ``s . r == e`` hold (with matching endpoints)?"""
    r, s = w.retraction, w.section
    x = C.dom[e]
    if r not in C.dom or s not in C.dom or w.mid not in C.idents:
        return False
    if (C.dom[r], C.cod[r], C.dom[s], C.cod[s]) != (x, w.mid, w.mid, x):
        return False
    return C.comp[(r, s)] == C.idents[w.mid] and C.comp[(s, r)] == e


def verify_split_equalizer(C: FinCat, w: SplitWitness, e) -> bool:
    """The section equalizes ``(e, id)`` universally and the retraction coequalizes it."""
    if not splits(C, w, e):
        return False
    r, s, y = w.retraction, w.section, w.mid
    x = C.dom[e]
    if C.comp[(e, s)] != s or C.comp[(r, e)] != r:
        return False
    for z in C.objects:
        # cones into x equalizing e and id factor uniquely through s
        for h in C.hom(z, x):
            if C.comp[(e, h)] != h:
                continue
            factors = [k for k in C.hom(z, y) if C.comp[(s, k)] == h]
            if len(factors) != 1:
                return False
        # cocones out of x coequalizing e and id factor uniquely through r
        for h in C.hom(x, z):
            if C.comp[(h, e)] != h:
                continue
            factors = [k for k in C.hom(y, z) if C.comp[(k, r)] == h]
            if len(factors) != 1:
                return False
    return True


def all_splits(C: FinCat, e) -> list[SplitWitness]:
    """Every split of the idempotent ``e`` in ``C``, by exhaustive search."""
    x = C.dom[e]
    out = []
    for y in C.objects:
        for r in C.hom(x, y):
            for s in C.hom(y, x):
                w = SplitWitness(y, r, s)
                if splits(C, w, e):
                    out.append(w)
    return out


def split_comparison(C: FinCat, w1: SplitWitness, w2: SplitWitness):
    """An isomorphism ``phi: mid1 -> mid2`` with ``phi . r1 == r2`` and ``s2 . phi == s1``."""
    for phi in C.hom(w1.mid, w2.mid):
        inverses = [psi for psi in C.hom(w2.mid, w1.mid)
                    if C.comp[(psi, phi)] == C.idents[w1.mid]
                    and C.comp[(phi, psi)] == C.idents[w2.mid]]
        if not inverses:
            continue
        if (C.comp[(phi, w1.retraction)] == w2.retraction
                and C.comp[(w2.section, phi)] == w1.section):
            return phi
    return None


def monoid_category(elements, table, unit, obj="*") -> FinCat:
    """One-object category from a multiplication table ``table[(g, f)] = g f``."""
    elements = tuple(elements)
    dom = {m: obj for m in elements}
    comp = {(g, f): table[(g, f)] for g, f in itertools.product(elements, repeat=2)}
    return FinCat((obj,), elements, dom, dict(dom), comp, {obj: unit})


def underlying_category(M) -> FinCat:
    """The ordinary category of an enriched category, arrows labelled ``Pair(Pair(a, b), m)``.

    For a one-object ``M`` the labels are the hom elements themselves.
    """
    objs = tuple(M.objs)
    single = len(objs) == 1

    def lab(a, b, m):
        return m if single else Pair(Pair(a, b), m)

    arrows, dom, cod = [], {}, {}
    for a in objs:
        for b in objs:
            for m in M.hom[(a, b)]:
                label = lab(a, b, m)
                arrows.append(label)
                dom[label] = a
                cod[label] = b
    comp = {}
    for a in objs:
        for b in objs:
            for c in objs:
                for n in M.hom[(b, c)]:
                    for m in M.hom[(a, b)]:
                        comp[(lab(b, c, n), lab(a, b, m))] = lab(a, c, M.compose(a, b, c, n, m))
    idents = {a: lab(a, a, M.ident[a]) for a in objs}
    return FinCat(objs, tuple(arrows), dom, cod, comp, idents)
