"""Internal categories in finite sets, their splits and split-preserving functors.

Composition consumes ``Pair(outer, inner)`` with ``dom(outer) == cod(inner)``,
so ``dom . c == dom . Pi2`` and ``cod . c == cod . Pi1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .ambient import (
    FinMap,
    FinObj,
    Pair,
    Sub,
    compose,
    equalizer,
    factor_through_mono,
    identity,
    pullback,
)
from .errors import InvalidMap, NotComposable, NotFactorable
from .plaincat import FinCat
from .search import Budget, DEFAULT_BUDGET, solve


class InternalCat:
    """``(A0, A1, dom, cod, ident, comp)`` with ``comp: A2 -> A1``.

    ``A2`` is the pullback of ``dom`` against ``cod``; its elements are
    ``Pair(outer, inner)``; ``Pi1`` and ``Pi2`` project to outer and inner.
    """

    __slots__ = ("A0", "A1", "dom", "cod", "ident", "comp", "A2", "Pi1", "Pi2")

    def __init__(self, A0, A1, dom, cod, ident, comp):
        for name, f, d, c in (("dom", dom, A1, A0), ("cod", cod, A1, A0),
                              ("ident", ident, A0, A1)):
            if f.dom != d or f.cod != c:
                raise InvalidMap(f"structure map {name} has the wrong type")
        A2, Pi1, Pi2 = composable_pairs_of(dom, cod)
        if comp.dom != A2 or comp.cod != A1:
            raise InvalidMap("composition is not a map A2 -> A1")
        self.A0, self.A1 = A0, A1
        self.dom, self.cod, self.ident, self.comp = dom, cod, ident, comp
        self.A2, self.Pi1, self.Pi2 = A2, Pi1, Pi2

    def compose(self, g, f):
        """``g . f`` as elements of ``A1``."""
        e = Pair(g, f)
        if e not in self.A2:
            raise NotComposable(f"{g!r} and {f!r} are not composable")
        return self.comp(e)

    def composable(self, g, f):
        return Pair(g, f) in self.A2

    def triples(self):
        """Composable triples ``(h, g, f)``: the object ``A3``."""
        into = {}
        for e in self.A2:
            into.setdefault(e.right, []).append(e.left)
        for e in self.A2:
            g, f = e.left, e.right
            for h in into.get(g, ()):
                yield h, g, f

    def __eq__(self, other):
        if not isinstance(other, InternalCat):
            return NotImplemented
        return (self.A0 == other.A0 and self.A1 == other.A1 and self.dom == other.dom
                and self.cod == other.cod and self.ident == other.ident
                and self.comp == other.comp)

    def __repr__(self):
        return f"InternalCat(|A0|={len(self.A0)}, |A1|={len(self.A1)})"


@dataclass(frozen=True, eq=False)
class InternalFunctor:
    F0: FinMap
    F1: FinMap

    def __eq__(self, other):
        if not isinstance(other, InternalFunctor):
            return NotImplemented
        return self.F0 == other.F0 and self.F1 == other.F1


class IdemObject(NamedTuple):
    obj: FinObj
    I: FinMap       # idem(A) -> endo(A)
    EI: FinMap      # idem(A) -> A1


@dataclass(frozen=True, eq=False)
class SplitData:
    endoObj: tuple
    idemObj: IdemObject
    R: FinMap
    S: FinMap
    iotaStar: FinMap


def composable_pairs_of(dom: FinMap, cod: FinMap):
    pb = pullback(dom, cod)
    return pb.obj, pb.p1, pb.p2


def composable_pairs(A: InternalCat):
    return A.A2, A.Pi1, A.Pi2


def make_internal(A0, A1, dom, cod, ident, mult) -> InternalCat:
    """Build with ``mult(g, f)`` giving ``g . f`` on composable pairs."""
    A0 = A0 if isinstance(A0, FinObj) else FinObj(A0)
    A1 = A1 if isinstance(A1, FinObj) else FinObj(A1)
    dom = dom if isinstance(dom, FinMap) else FinMap.from_dict(A1, A0, dom)
    cod = cod if isinstance(cod, FinMap) else FinMap.from_dict(A1, A0, cod)
    ident = ident if isinstance(ident, FinMap) else FinMap.from_dict(A0, A1, ident)
    A2 = composable_pairs_of(dom, cod)[0]
    comp = FinMap(A2, A1, [mult(e.left, e.right) for e in A2])
    return InternalCat(A0, A1, dom, cod, ident, comp)


def internalize(C: FinCat) -> InternalCat:
    """``A0`` = objects, ``A1`` = arrows of a finite category."""
    return make_internal(C.objects, C.arrows, C.dom, C.cod, C.idents,
                         lambda g, f: C.comp[(g, f)])


def as_plain(A: InternalCat) -> FinCat:
    dom, cod = A.dom.as_dict(), A.cod.as_dict()
    comp = {(e.left, e.right): y for e, y in A.comp.items()}
    return FinCat(A.A0.elems, A.A1.elems, dom, cod, comp, A.ident.as_dict())


def internal_violations(A: InternalCat, limit=10) -> list[str]:
    out = []

    def note(msg):
        out.append(msg)
        return len(out) >= limit

    for x in A.A0:
        i = A.ident(x)
        if A.dom(i) != x or A.cod(i) != x:
            if note(f"ident({x!r}) = {i!r} does not run from {x!r} to {x!r}"):
                return out
    for e in A.A2:
        g, f = e.left, e.right
        h = A.comp(e)
        if A.dom(h) != A.dom(f):
            if note(f"dom(c({g!r},{f!r})) != dom({f!r})"):
                return out
        if A.cod(h) != A.cod(g):
            if note(f"cod(c({g!r},{f!r})) != cod({g!r})"):
                return out
    if out:
        return out
    for f in A.A1:
        left = Pair(A.ident(A.cod(f)), f)
        right = Pair(f, A.ident(A.dom(f)))
        if A.comp(left) != f:
            if note(f"left unit fails: c(ident(cod {f!r}), {f!r}) = {A.comp(left)!r}"):
                return out
        if A.comp(right) != f:
            if note(f"right unit fails: c({f!r}, ident(dom {f!r})) = {A.comp(right)!r}"):
                return out
    for h, g, f in A.triples():
        lhs = A.compose(h, A.compose(g, f))
        rhs = A.compose(A.compose(h, g), f)
        if lhs != rhs:
            if note(f"associativity fails at ({h!r}, {g!r}, {f!r}): {lhs!r} != {rhs!r}"):
                return out
    return out


def check_internal(A: InternalCat) -> bool:
    return not internal_violations(A, limit=1)


def endo_object(A: InternalCat):
    """Equalizer of ``dom`` and ``cod``: elements ``Sub(f)``."""
    eq = equalizer(A.dom, A.cod)
    return eq.obj, eq.incl


def idem_object(A: InternalCat) -> IdemObject:
    """Idempotent arrows, labelled ``Sub(u)`` with ``u`` in ``A1``."""
    endo, E = endo_object(A)
    square = FinMap(endo, endo, [Sub(A.compose(s.inner, s.inner)) for s in endo])
    eq = equalizer(square, identity(endo))
    obj = FinObj(Sub(s.inner.inner) for s in eq.obj)
    I = FinMap(obj, endo, [Sub(s.inner) for s in obj])
    return IdemObject(obj, I, compose(E, I))


def iota_star(A: InternalCat, idem: IdemObject | None = None) -> FinMap:
    idem = idem or idem_object(A)
    return factor_through_mono(A.ident, idem.EI)


def make_split(A: InternalCat, R, S) -> SplitData:
    """``R`` and ``S`` as maps ``idem(A) -> A1`` or dicts keyed by idempotent arrows."""
    idem = idem_object(A)
    if not isinstance(R, FinMap):
        R = FinMap(idem.obj, A.A1, [R[s.inner] for s in idem.obj])
    if not isinstance(S, FinMap):
        S = FinMap(idem.obj, A.A1, [S[s.inner] for s in idem.obj])
    return SplitData(endo_object(A), idem, R, S, iota_star(A, idem))


def split_violations(A: InternalCat, R: FinMap, S: FinMap, limit=10) -> list[str]:
    out = []
    idem = idem_object(A)
    if R.dom != idem.obj or S.dom != idem.obj or R.cod != A.A1 or S.cod != A.A1:
        return ["R and S must be maps idem(A) -> A1"]
    for s in idem.obj:
        u = s.inner
        r, sec = R(s), S(s)
        if not (A.dom(r) == A.dom(u) == A.cod(sec)):
            out.append(f"dom R({u!r}), dom {u!r} and cod S({u!r}) disagree")
        if A.cod(r) != A.dom(sec):
            out.append(f"cod R({u!r}) != dom S({u!r})")
        elif A.compose(sec, r) != u:
            out.append(f"c(S({u!r}), R({u!r})) = {A.compose(sec, r)!r}, expected {u!r}")
        if A.cod(r) == A.dom(sec) and A.dom(r) == A.cod(sec):
            if A.compose(r, sec) != A.ident(A.dom(sec)):
                out.append(f"c(R({u!r}), S({u!r})) is not an identity")
        if len(out) >= limit:
            return out[:limit]
    return out


def check_split(A: InternalCat, R: FinMap, S: FinMap) -> bool:
    return not split_violations(A, R, S, limit=1)


CANON_MODES = ("canon-a", "canon-b")


def canonical_violations(A: InternalCat, R: FinMap, S: FinMap, mode="canon-a",
                         limit=10) -> list[str]:
    """Failures of the two canonicity conditions.

    ``canon-a`` quantifies over idempotents ``f, g`` on a common object with
    ``f g f == g``; ``canon-b`` uses ``f g f == f`` instead.  For each such
    pair, with ``h = R(f) g S(f)``, one needs ``R(h) == R(g) S(f)`` and
    ``S(h) == R(f) S(g)``.
    """
    if mode not in CANON_MODES:
        raise ValueError(f"unknown canonicity mode {mode!r}")
    out = []
    idem = idem_object(A)
    for x in A.A0:
        i = A.ident(x)
        if R(Sub(i)) != i:
            out.append(f"R(ident({x!r})) = {R(Sub(i))!r}, expected ident({x!r}) = {i!r}")
        if S(Sub(i)) != i:
            out.append(f"S(ident({x!r})) = {S(Sub(i))!r}, expected ident({x!r}) = {i!r}")
        if len(out) >= limit:
            return out
    ids = [s.inner for s in idem.obj]
    for f, g in itertools.product(ids, repeat=2):
        if A.dom(f) != A.dom(g):
            continue
        fgf = A.compose(f, A.compose(g, f))
        if fgf != (g if mode == "canon-a" else f):
            continue
        rf, sf = R(Sub(f)), S(Sub(f))
        h = A.compose(rf, A.compose(g, sf))
        if Sub(h) not in idem.obj:
            out.append(f"for f={f!r}, g={g!r}: R(f) g S(f) = {h!r} is not idempotent")
        else:
            rg, sg = R(Sub(g)), S(Sub(g))
            want_r = A.compose(rg, sf) if A.composable(rg, sf) else None
            want_s = A.compose(rf, sg) if A.composable(rf, sg) else None
            if R(Sub(h)) != want_r:
                out.append(f"for f={f!r}, g={g!r}: R(h) = {R(Sub(h))!r} but "
                           f"c(R(g), S(f)) = {want_r!r} (h={h!r})")
            if S(Sub(h)) != want_s:
                out.append(f"for f={f!r}, g={g!r}: S(h) = {S(Sub(h))!r} but "
                           f"c(R(f), S(g)) = {want_s!r} (h={h!r})")
        if len(out) >= limit:
            return out[:limit]
    return out


def check_canonical(A: InternalCat, R: FinMap, S: FinMap, mode="canon-a") -> bool:
    return not canonical_violations(A, R, S, mode, limit=1)


# -- functors -----------------------------------------------------------------

def functor_violations(F: InternalFunctor, A: InternalCat, B: InternalCat, limit=10):
    if F.F0.dom != A.A0 or F.F0.cod != B.A0 or F.F1.dom != A.A1 or F.F1.cod != B.A1:
        return ["functor components have the wrong type"]
    out = []
    for f in A.A1:
        y = F.F1(f)
        if B.dom(y) != F.F0(A.dom(f)) or B.cod(y) != F.F0(A.cod(f)):
            out.append(f"F1({f!r}) has the wrong endpoints")
    for x in A.A0:
        if F.F1(A.ident(x)) != B.ident(F.F0(x)):
            out.append(f"identity at {x!r} not preserved")
    if out:
        return out[:limit]
    for e in A.A2:
        lhs = F.F1(A.comp(e))
        g, f = F.F1(e.left), F.F1(e.right)
        if lhs != B.compose(g, f):
            out.append(f"composition {e.left!r}.{e.right!r} not preserved")
            if len(out) >= limit:
                break
    return out


def check_functor(F: InternalFunctor, A: InternalCat, B: InternalCat) -> bool:
    return not functor_violations(F, A, B, limit=1)


def identity_functor(A: InternalCat) -> InternalFunctor:
    return InternalFunctor(identity(A.A0), identity(A.A1))


def compose_functors(G: InternalFunctor, F: InternalFunctor) -> InternalFunctor:
    """``G . F``."""
    return InternalFunctor(compose(G.F0, F.F0), compose(G.F1, F.F1))


def functor_idem_restriction(F: InternalFunctor, A: InternalCat, B: InternalCat) -> FinMap:
    """``F1*: idem(A) -> idem(B)`` with ``EI_B . F1* == F1 . EI_A``."""
    return factor_through_mono(compose(F.F1, idem_object(A).EI), idem_object(B).EI)


def check_split_preserving(F: InternalFunctor, A: InternalCat, B: InternalCat,
                           splitA: SplitData, splitB: SplitData) -> bool:
    try:
        star = functor_idem_restriction(F, A, B)
    except NotFactorable:
        return False
    return (compose(F.F1, splitA.R) == compose(splitB.R, star)
            and compose(F.F1, splitA.S) == compose(splitB.S, star))


def enumerate_internal_functors(A: InternalCat, B: InternalCat, splitA=None, splitB=None,
                                budget=DEFAULT_BUDGET) -> list[InternalFunctor]:
    """All internal functors ``A -> B``; split-preserving ones when both splits are given.

    Ordered by the table of ``F0`` and then the table of ``F1``.
    """
    tracker = budget if isinstance(budget, Budget) else Budget(budget, "internal functors")
    arrows = A.A1.elems
    where = {f: i for i, f in enumerate(arrows)}
    hom_b = {}
    for y in B.A1:
        hom_b.setdefault((B.dom(y), B.cod(y)), []).append(y)
    idem_b = idem_object(B).obj if splitB is not None else None
    results = []
    for images in itertools.product(B.A0.elems, repeat=len(A.A0)):
        tracker.spend()
        F0 = FinMap(A.A0, B.A0, images)
        domains = []
        for f in arrows:
            cands = hom_b.get((F0(A.dom(f)), F0(A.cod(f))), [])
            domains.append(cands)
        for x in A.A0:
            i = where[A.ident(x)]
            forced = B.ident(F0(x))
            domains[i] = [forced] if forced in domains[i] else []
        constraints = []
        for e in A.A2:
            vs = (where[e.left], where[e.right], where[A.comp(e)])
            constraints.append((vs, lambda v: B.composable(v[0], v[1])
                                and B.compose(v[0], v[1]) == v[2]))
        if splitA is not None and splitB is not None:
            for s in splitA.idemObj.obj:
                u = s.inner
                for side in (splitA.R, splitA.S):
                    target = splitB.R if side is splitA.R else splitB.S
                    vs = (where[u], where[side(s)])

                    def pred(v, target=target):
                        su = Sub(v[0])
                        return su in idem_b and target(su) == v[1]
                    constraints.append((vs, pred))
        for values in solve(domains, constraints, tracker):
            results.append(InternalFunctor(F0, FinMap(A.A1, B.A1, values)))
    return results


def enumerate_split_preserving_functors(A, B, splitA, splitB, budget=DEFAULT_BUDGET):
    return enumerate_internal_functors(A, B, splitA, splitB, budget)


def split_from_plain(A: InternalCat, C: FinCat) -> SplitData:
    """Turn the split recorded on a finite category into internal ``R``, ``S``."""
    R = {u: w.retraction for u, w in C.split.items()}
    S = {u: w.section for u, w in C.split.items()}
    return make_split(A, R, S)
