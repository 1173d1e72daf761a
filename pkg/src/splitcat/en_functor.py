"""From internal categories to enriched ones: the construction en'."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ambient import FinMap, FinObj, Sub, compose, elements, factor_through_mono, product
from .enriched import EnrichedCat, EnrichedFunctor
from .internal import InternalCat, InternalFunctor


@dataclass(frozen=True)
class GammaHom:
    """The arrows ``alpha -> beta`` of ``A`` as a subobject of ``A1``."""

    source: object
    target: object
    homObj: FinObj
    up: FinMap


def en_objects(A: InternalCat) -> list:
    """Objects of en'(A): the global elements of ``A0``, named by the element picked."""
    return [pt.table[0] for pt in elements(A.A0)]


def en_hom(A: InternalCat, alpha, beta) -> GammaHom:
    obj = FinObj(Sub(f) for f in A.A1 if A.dom(f) == alpha and A.cod(f) == beta)
    up = FinMap(obj, A.A1, [s.inner for s in obj])
    return GammaHom(alpha, beta, obj, up)


def en_comp(A: InternalCat, alpha, beta, gamma) -> FinMap:
    """The unique map ``Gamma(b,c) x Gamma(a,b) -> Gamma(a,c)`` lifting ``c``."""
    return _lift_comp(A, en_hom(A, alpha, beta), en_hom(A, beta, gamma),
                      en_hom(A, alpha, gamma))


def _lift_comp(A, ab, bc, ac):
    src = product(bc.homObj, ab.homObj).obj
    raw = FinMap(src, A.A1, [A.compose(bc.up(e.left), ab.up(e.right)) for e in src])
    return factor_through_mono(raw, ac.up)


def en_identity(A: InternalCat, alpha, hom: GammaHom | None = None):
    hom = hom or en_hom(A, alpha, alpha)
    pt = FinMap(FinObj([Sub(alpha)]), A.A1, [A.ident(alpha)])
    return factor_through_mono(pt, hom.up).table[0]


def en_homs(A: InternalCat) -> dict:
    objs = en_objects(A)
    return {(a, b): en_hom(A, a, b) for a in objs for b in objs}


def en(A: InternalCat) -> EnrichedCat:
    objs = tuple(en_objects(A))
    homs = en_homs(A)
    comp = {(a, b, c): _lift_comp(A, homs[(a, b)], homs[(b, c)], homs[(a, c)])
            for a, b, c in itertools.product(objs, repeat=3)}
    ident = {a: en_identity(A, a, homs[(a, a)]) for a in objs}
    return EnrichedCat(objs, {k: h.homObj for k, h in homs.items()}, comp, ident)


def en_of_functor(F: InternalFunctor, A: InternalCat, B: InternalCat) -> EnrichedFunctor:
    homs_a = en_homs(A)
    objs = en_objects(A)
    obj = {a: F.F0(a) for a in objs}
    hom_maps = {}
    for (a, b), h in homs_a.items():
        target = en_hom(B, obj[a], obj[b])
        hom_maps[(a, b)] = factor_through_mono(compose(F.F1, h.up), target.up)
    return EnrichedFunctor(obj, hom_maps)
