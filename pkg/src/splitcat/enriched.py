"""Categories enriched over finite sets (with the cartesian product)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ambient import FinMap, FinObj, Pair, compose, identity, product
from .search import Budget, DEFAULT_BUDGET, solve


@dataclass(frozen=True, eq=False)
class EnrichedCat:
    """``hom[(a, b)]`` is the hom-object; ``comp[(a, b, c)]`` maps
    ``hom[(b, c)] x hom[(a, b)] -> hom[(a, c)]``; ``ident[a]`` is an element of
    ``hom[(a, a)]``."""

    objs: tuple
    hom: dict
    comp: dict
    ident: dict

    def compose(self, a, b, c, n, m):
        """``n . m`` for ``m: a -> b`` and ``n: b -> c``."""
        return self.comp[(a, b, c)](Pair(n, m))

    def __eq__(self, other):
        if not isinstance(other, EnrichedCat):
            return NotImplemented
        return (self.objs == other.objs and self.hom == other.hom
                and self.comp == other.comp and self.ident == other.ident)

    def size(self):
        return sum(len(h) for h in self.hom.values())


@dataclass(frozen=True, eq=False)
class EnrichedFunctor:
    obj: dict
    homMaps: dict

    def __eq__(self, other):
        if not isinstance(other, EnrichedFunctor):
            return NotImplemented
        return self.obj == other.obj and self.homMaps == other.homMaps

    def __call__(self, a, b, m):
        return self.homMaps[(a, b)](m)


def make_enriched(objs, hom, mult, ident) -> EnrichedCat:
    """Build from plain python data; ``mult(a, b, c, n, m)`` gives ``n . m``."""
    objs = tuple(objs)
    hom = {k: v if isinstance(v, FinObj) else FinObj(v) for k, v in hom.items()}
    comp = {}
    for a, b, c in itertools.product(objs, repeat=3):
        src = product(hom[(b, c)], hom[(a, b)]).obj
        comp[(a, b, c)] = FinMap(src, hom[(a, c)],
                                 [mult(a, b, c, e.left, e.right) for e in src])
    return EnrichedCat(objs, hom, comp, dict(ident))


def enriched_violations(M: EnrichedCat, limit=10) -> list[str]:
    out = []
    objs = M.objs
    for a, b in itertools.product(objs, repeat=2):
        if (a, b) not in M.hom:
            out.append(f"hom({a!r},{b!r}) missing")
    if out:
        return out[:limit]
    for a, b, c in itertools.product(objs, repeat=3):
        f = M.comp.get((a, b, c))
        if f is None:
            out.append(f"composition {a!r},{b!r},{c!r} missing")
        elif f.dom != product(M.hom[(b, c)], M.hom[(a, b)]).obj or f.cod != M.hom[(a, c)]:
            out.append(f"composition {a!r},{b!r},{c!r} has the wrong type")
    for a in objs:
        if M.ident.get(a) not in M.hom[(a, a)]:
            out.append(f"identity of {a!r} is not in hom({a!r},{a!r})")
    if out:
        return out[:limit]
    for a, b in itertools.product(objs, repeat=2):
        for m in M.hom[(a, b)]:
            if M.compose(a, a, b, m, M.ident[a]) != m:
                out.append(f"right unit fails at {m!r} in hom({a!r},{b!r})")
            if M.compose(a, b, b, M.ident[b], m) != m:
                out.append(f"left unit fails at {m!r} in hom({a!r},{b!r})")
            if len(out) >= limit:
                return out
    for a, b, c, d in itertools.product(objs, repeat=4):
        for f in M.hom[(a, b)]:
            for g in M.hom[(b, c)]:
                gf = M.compose(a, b, c, g, f)
                for h in M.hom[(c, d)]:
                    if M.compose(a, c, d, h, gf) != M.compose(a, b, d, M.compose(b, c, d, h, g), f):
                        out.append(f"associativity fails at ({h!r},{g!r},{f!r})")
                        if len(out) >= limit:
                            return out
    return out


def check_enriched(M: EnrichedCat) -> bool:
    return not enriched_violations(M, limit=1)


def functor_violations(F: EnrichedFunctor, M: EnrichedCat, N: EnrichedCat, limit=10):
    out = []
    for a in M.objs:
        if F.obj.get(a) not in N.objs:
            return [f"object {a!r} is not sent to an object"]
    for a, b in itertools.product(M.objs, repeat=2):
        f = F.homMaps.get((a, b))
        if f is None or f.dom != M.hom[(a, b)] or f.cod != N.hom[(F.obj[a], F.obj[b])]:
            return [f"hom map for ({a!r},{b!r}) missing or mistyped"]
    for a in M.objs:
        if F(a, a, M.ident[a]) != N.ident[F.obj[a]]:
            out.append(f"identity of {a!r} not preserved")
    for a, b, c in itertools.product(M.objs, repeat=3):
        fa, fb, fc = F.obj[a], F.obj[b], F.obj[c]
        for n in M.hom[(b, c)]:
            for m in M.hom[(a, b)]:
                lhs = F(a, c, M.compose(a, b, c, n, m))
                rhs = N.compose(fa, fb, fc, F(b, c, n), F(a, b, m))
                if lhs != rhs:
                    out.append(f"composition {n!r}.{m!r} not preserved")
                    if len(out) >= limit:
                        return out
    return out


def check_enriched_functor(F: EnrichedFunctor, M: EnrichedCat, N: EnrichedCat) -> bool:
    return not functor_violations(F, M, N, limit=1)


def identity_functor(M: EnrichedCat) -> EnrichedFunctor:
    return EnrichedFunctor({a: a for a in M.objs},
                           {k: identity(h) for k, h in M.hom.items()})


def compose_functors(G: EnrichedFunctor, F: EnrichedFunctor) -> EnrichedFunctor:
    """``G . F``."""
    obj = {a: G.obj[F.obj[a]] for a in F.obj}
    homs = {(a, b): compose(G.homMaps[(F.obj[a], F.obj[b])], f)
            for (a, b), f in F.homMaps.items()}
    return EnrichedFunctor(obj, homs)


def enumerate_enriched_functors(M: EnrichedCat, N: EnrichedCat, budget=DEFAULT_BUDGET):
    """All enriched functors ``M -> N``, ordered by object part then hom tables."""
    tracker = budget if isinstance(budget, Budget) else Budget(budget, "enriched functors")
    results = []
    for images in itertools.product(N.objs, repeat=len(M.objs)):
        tracker.spend()
        F0 = dict(zip(M.objs, images))
        variables = []
        where = {}
        for a, b in itertools.product(M.objs, repeat=2):
            for m in M.hom[(a, b)]:
                where[(a, b, m)] = len(variables)
                variables.append((a, b, m))
        domains = []
        for a, b, m in variables:
            target = N.hom[(F0[a], F0[b])].elems
            if a == b and m == M.ident[a]:
                target = (N.ident[F0[a]],)
            domains.append(target)
        constraints = []
        for a, b, c in itertools.product(M.objs, repeat=3):
            fa, fb, fc = F0[a], F0[b], F0[c]
            for n in M.hom[(b, c)]:
                for m in M.hom[(a, b)]:
                    k = M.compose(a, b, c, n, m)
                    vs = (where[(b, c, n)], where[(a, b, m)], where[(a, c, k)])

                    def pred(vals, fa=fa, fb=fb, fc=fc):
                        return N.compose(fa, fb, fc, vals[0], vals[1]) == vals[2]
                    constraints.append((vs, pred))
        for values in solve(domains, constraints, tracker):
            homs = {}
            for a, b in itertools.product(M.objs, repeat=2):
                src = M.hom[(a, b)]
                homs[(a, b)] = FinMap(src, N.hom[(F0[a], F0[b])],
                                      [values[where[(a, b, m)]] for m in src])
            results.append(EnrichedFunctor(F0, homs))
    return results


def enriched_from_plain(C) -> EnrichedCat:
    """View a finite category as enriched: ``hom[(a, b)]`` lists arrows in arrow order."""
    objs = tuple(C.objects)
    hom = {(a, b): FinObj(C.hom(a, b)) for a in objs for b in objs}
    return make_enriched(objs, hom, lambda a, b, c, n, m: C.comp[(n, m)],
                         {a: C.idents[a] for a in objs})
