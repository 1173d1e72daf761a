"""Extensivity laws of finite sets, checked on seeded random families."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ambient import (
    Atom,
    FinMap,
    FinObj,
    Tag,
    check_coproduct_of_equalizers,
    check_distributive,
    check_e1,
    check_e2_universal,
    check_e3_disjoint,
    check_strict_initial,
    check_subcoproduct_intersection,
    coproduct,
)

LAWS = ("e1", "e2-universal", "e3-disjoint", "distributive", "strict-initial",
        "coproduct-of-equalizers", "subcoproduct-intersection")


@dataclass
class Sample:
    family: list          # FinObj summands x_i
    ys: list              # FinMap y_i -> x_i
    f: FinMap             # X -> coprod x_i
    Y: FinObj
    pairs: list           # parallel pairs x_i -> Y
    J1: list
    J2: list
    X0: FinObj


def _set(prefix, n):
    return FinObj(Atom(f"{prefix}{j}") for j in range(n))


def _fun(rng, X, Y):
    return FinMap(X, Y, [Y[rng.randrange(len(Y))] for _ in X])


def random_sample(rng: random.Random, max_total=12) -> Sample:
    k = rng.randint(0, 4)
    budget = max_total
    family = []
    for i in range(k):
        n = rng.randint(0, min(4, budget))
        budget -= n
        family.append(_set(f"x{i}.", n))
    ys = []
    for i, x in enumerate(family):
        n = rng.randint(0, 3) if len(x) else 0
        ys.append(_fun(rng, _set(f"y{i}.", n), x))
    total = coproduct(family).obj
    nx = rng.randint(0, 4) if len(total) else 0
    f = _fun(rng, _set("d", nx), total)
    Y = _set("t", rng.randint(1, 3))
    pairs = [(_fun(rng, x, Y), _fun(rng, x, Y)) for x in family]
    J1 = [i for i in range(k) if rng.random() < 0.5]
    J2 = [i for i in range(k) if rng.random() < 0.5]
    X0 = _set("z", rng.choice((0, 0, 1, 2)))
    return Sample(family, ys, f, Y, pairs, J1, J2, X0)


def check_sample(s: Sample) -> dict:
    return {
        "e1": check_e1(s.ys),
        "e2-universal": check_e2_universal(s.f, s.family),
        "e3-disjoint": check_e3_disjoint(s.family),
        "distributive": check_distributive(s.Y, s.family),
        "strict-initial": check_strict_initial(s.X0),
        "coproduct-of-equalizers": check_coproduct_of_equalizers(s.pairs, s.Y),
        "subcoproduct-intersection": check_subcoproduct_intersection(s.family, s.J1, s.J2),
    }


def run_suite(seed=0, count=200, max_total=12) -> dict:
    """law -> (passed, total) over ``count`` samples."""
    rng = random.Random(seed)
    score = {law: [0, 0] for law in LAWS}
    for _ in range(count):
        for law, ok in check_sample(random_sample(rng, max_total)).items():
            score[law][0] += bool(ok)
            score[law][1] += 1
    return {law: tuple(v) for law, v in score.items()}


def family_sample(sets: dict, maps: dict) -> Sample:
    """Read a sample from a parsed map family: the sets are the summands.

    ``f`` sends each element of the first map's domain to its image, tagged by
    the summand holding it; the maps themselves serve as the ``y_i -> x_i``
    family where their codomain is a summand.
    """
    family = list(sets.values())
    names = list(sets)
    ys = [m for (_, tgt, m) in maps.values() if tgt in names]
    where = {}
    for i, X in enumerate(family):
        for x in X:
            where.setdefault(x, i)
    total = coproduct(family).obj
    if maps:
        _, _, m = next(iter(maps.values()))
        f = FinMap(m.dom, total, [Tag(where[y], y) for y in m.table])
    else:
        f = FinMap(FinObj(), total, [])
    Y = family[0] if family and len(family[0]) else FinObj([Atom("*")])
    pairs = [(FinMap(X, Y, [Y[0]] * len(X)), FinMap(X, Y, [Y[-1]] * len(X))) for X in family]
    idx = list(range(len(family)))
    return Sample(family, ys, f, Y, pairs, idx[::2], idx[:2], FinObj())
