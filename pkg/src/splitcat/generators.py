"""Seeded generators and shrinkers for small lawful categories.

Categories are produced concretely: every object gets a small carrier set,
a few random functions between carriers are drawn, and the result is closed
under composition.  Composition of functions is associative and unital, so
every sample is lawful by construction; samples whose homs outgrow the
configured bounds are rejected and redrawn.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .ambient import Atom, Pair
from .enriched import EnrichedCat, enriched_from_plain, enumerate_enriched_functors, make_enriched
from .errors import GenerationExhausted
from .internal import InternalCat, as_plain, internalize
from .plaincat import FinCat, underlying_category

MAX_TRIES = 500
MAX_CARRIER = 3


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    maxObjects: int = 2
    maxHomSize: int = 3
    maxArrows: int = 12

    def __post_init__(self):
        for name in ("seed", "maxObjects", "maxHomSize", "maxArrows"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


def _closure(gens, idents, limit):
    """Close a set of ``(a, b, table)`` functions under composition; None past ``limit``."""
    found = list(dict.fromkeys(list(idents) + list(gens)))
    seen = set(found)
    frontier = list(found)
    while frontier:
        new = []
        for f in frontier:
            for g in list(found):
                for h, k in ((g, f), (f, g)):
                    if k[1] == h[0]:     # h after k
                        c = (k[0], h[1], tuple(h[2][v] for v in k[2]))
                        if c not in seen:
                            seen.add(c)
                            found.append(c)
                            new.append(c)
                            if len(found) > limit:
                                return None
        frontier = new
    return found


def _labelled(n, arrows) -> FinCat:
    objs = tuple(Atom(f"o{i}") for i in range(n))
    by_hom = {}
    for a, b, t in arrows:
        by_hom.setdefault((a, b), []).append(t)
    label, dom, cod, order = {}, {}, {}, []
    for a, b in itertools.product(range(n), repeat=2):
        tables = by_hom.get((a, b), [])
        ident = tuple(range(len(tables[0]))) if a == b and tables else None
        rest = sorted(t for t in tables if t != ident)
        if a == b:
            name = Atom(f"i{a}")
            label[(a, b, ident)] = name
            order.append(name)
            dom[name] = cod[name] = objs[a]
        for j, t in enumerate(rest, 1):
            name = Atom(f"m{a}{b}_{j}")
            label[(a, b, t)] = name
            order.append(name)
            dom[name], cod[name] = objs[a], objs[b]
    comp = {}
    for (a, b, t), f in label.items():
        for (b2, c, u), g in label.items():
            if b2 == b:
                comp[(g, f)] = label[(a, c, tuple(u[v] for v in t))]
    idents = {objs[a]: Atom(f"i{a}") for a in range(n)}
    return FinCat(objs, tuple(order), dom, cod, comp, idents)


def _attempt(rng, cfg):
    n = rng.randint(1, max(1, min(cfg.maxObjects, cfg.maxArrows)))
    cap = max(1, min(MAX_CARRIER, cfg.maxHomSize))
    sizes = [min(cap, rng.choice((1, 2, 2, 3, 3))) for _ in range(n)]
    idents = [(a, a, tuple(range(sizes[a]))) for a in range(n)]
    room = cfg.maxArrows - n
    # mostly at least one generator; identity-only samples are rare
    k = min(max(room, 0), rng.choice((0, 1, 1, 2, 2, 3)))
    gens = []
    for _ in range(k):
        a, b = rng.randrange(n), rng.randrange(n)
        gens.append((a, b, tuple(rng.randrange(sizes[b]) for _ in range(sizes[a]))))
    arrows = _closure(gens, idents, cfg.maxArrows)
    if arrows is None:
        return None
    homs = {}
    for a, b, _ in arrows:
        homs[(a, b)] = homs.get((a, b), 0) + 1
    if max(homs.values()) > cfg.maxHomSize:
        return None
    return _labelled(n, arrows)


def gen_plain(cfg: GenConfig) -> FinCat:
    if cfg.maxObjects < 1 or cfg.maxHomSize < 1 or cfg.maxArrows < 1:
        raise GenerationExhausted("bounds leave no room for a category")
    rng = random.Random(cfg.seed)
    for _ in range(MAX_TRIES):
        C = _attempt(rng, cfg)
        if C is not None:
            return C
    raise GenerationExhausted(f"no sample within bounds after {MAX_TRIES} tries")


def gen_enriched(cfg: GenConfig) -> EnrichedCat:
    return enriched_from_plain(gen_plain(cfg))


def gen_internal(cfg: GenConfig) -> InternalCat:
    return internalize(gen_plain(cfg))


def stream(kind, cfg: GenConfig, count):
    """``count`` samples with seeds ``cfg.seed, cfg.seed + 1, ...``."""
    make = {"plain": gen_plain, "enriched": gen_enriched, "internal": gen_internal}[kind]
    for i in range(count):
        yield make(GenConfig(cfg.seed + i, cfg.maxObjects, cfg.maxHomSize, cfg.maxArrows))


def gen_enriched_functor(seed, M: EnrichedCat, N: EnrichedCat, budget=10 ** 5):
    """A functor ``M -> N`` picked by seed among all of them, or None if there are none."""
    fs = enumerate_enriched_functors(M, N, budget)
    if not fs:
        return None
    return fs[random.Random(seed).randrange(len(fs))]


# -- shrinking ----------------------------------------------------------------

def _sub_plain(C: FinCat, objs, gens) -> FinCat:
    objs = [a for a in C.objects if a in objs]
    keep = {C.idents[a] for a in objs} | set(gens)
    frontier = list(keep)
    while frontier:
        new = []
        for f in frontier:
            for g in list(keep):
                for h, k in ((g, f), (f, g)):
                    c = C.comp.get((h, k))
                    if c is not None and c not in keep:
                        keep.add(c)
                        new.append(c)
        frontier = new
    arrows = tuple(f for f in C.arrows if f in keep)
    dom = {f: C.dom[f] for f in arrows}
    cod = {f: C.cod[f] for f in arrows}
    comp = {(g, f): h for (g, f), h in C.comp.items() if g in keep and f in keep}
    idents = {a: C.idents[a] for a in objs}
    return FinCat(tuple(objs), arrows, dom, cod, comp, idents)


def shrink_plain(C: FinCat) -> list[FinCat]:
    out = []
    if len(C.objects) > 1:
        for a in C.objects:
            rest = [b for b in C.objects if b != a]
            gens = [f for f in C.arrows if C.dom[f] != a and C.cod[f] != a]
            out.append(_sub_plain(C, rest, gens))
    idents = set(C.idents.values())
    for x in C.arrows:
        if x in idents:
            continue
        D = _sub_plain(C, C.objects, [f for f in C.arrows if f != x and f not in idents])
        if x not in D.arrows:
            out.append(D)
    unique = []
    for D in out:
        if not any(D == E for E in unique):
            unique.append(D)
    return unique


def _sub_enriched(M: EnrichedCat, C: FinCat) -> EnrichedCat:
    """Restrict ``M`` to the objects and arrows of a subcategory of its underlying category."""
    single = len(M.objs) == 1
    kept = set(C.arrows)

    def lab(a, b, m):
        return m if single else Pair(Pair(a, b), m)
    objs = [a for a in M.objs if a in C.objects]
    hom = {(a, b): [m for m in M.hom[(a, b)] if lab(a, b, m) in kept]
           for a in objs for b in objs}
    return make_enriched(objs, hom, M.compose, {a: M.ident[a] for a in objs})


def shrink(instance):
    """Strictly smaller lawful instances of the same type.

    Candidates drop one object (never the last) or leave out one non-identity
    arrow together with everything only reachable through it.
    """
    if isinstance(instance, FinCat):
        return shrink_plain(instance)
    if isinstance(instance, InternalCat):
        return [internalize(D) for D in shrink_plain(as_plain(instance))]
    if isinstance(instance, EnrichedCat):
        return [_sub_enriched(instance, D) for D in shrink_plain(underlying_category(instance))]
    raise TypeError(f"cannot shrink {type(instance).__name__}")


def minimize(instance, predicate, max_steps=1000):
    """Greedily shrink while ``predicate`` keeps holding."""
    current = instance
    for _ in range(max_steps):
        for cand in shrink(current):
            if predicate(cand):
                current = cand
                break
        else:
            return current
    return current

