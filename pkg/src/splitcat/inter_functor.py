"""From enriched categories to internal ones, mimicking the Karoubi envelope.

For an enriched ``M`` the internal category ``inter(M)`` has

* objects: ``Tag(a, Sub(p))`` for ``p`` an idempotent of ``M(a, a)``;
* arrows: ``Tag(k, Sub(Pair(Sub(q), Pair(m, Sub(p)))))`` for ``m: a -> b``
  with ``q m p == m``, where ``k`` is the position of ``(a, b)`` in
  ``objs x objs``.  The arrow runs from ``p`` to ``q``.

The arrow blocks are built per ``(a, b)`` and tagged afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ambient import (
    FinMap,
    FinObj,
    Pair,
    Sub,
    Tag,
    coproduct,
    equalizer,
    equalizer3,
    factor_through_mono,
    find_iso,
    mediate_equalizer,
    identity,
    product,
    untriple,
)
from .enriched import EnrichedCat, EnrichedFunctor
from .errors import NotComposable, NotFactorable, SizeBudgetExceeded
from .internal import InternalCat, InternalFunctor, SplitData, idem_object, make_split
from .search import DEFAULT_BUDGET


@dataclass(frozen=True, eq=False)
class Block:
    """The ``(a, b)`` component: ``Mb x M(a,b) x Ma``, ``alpha`` and the fixed points."""

    triples: FinObj
    alpha: FinMap
    arrows: FinObj
    incl: FinMap


@dataclass(frozen=True, eq=False)
class InterBuild:
    M: EnrichedCat
    carriers: dict          # a -> Equalizer (idempotents of M(a, a), eps_a)
    objectObj: FinObj
    blocks: dict            # (a, b) -> Block
    arrowObj: FinObj
    category: InternalCat
    omega: dict             # a -> FinMap idem_a -> carrier_a
    split: SplitData

    def obj_index(self, a):
        return self.M.objs.index(a)

    def block_index(self, a, b):
        n = len(self.M.objs)
        return self.M.objs.index(a) * n + self.M.objs.index(b)

    def object_elem(self, a, p):
        return Tag(self.obj_index(a), Sub(p))

    def arrow_elem(self, a, b, q, m, p):
        return Tag(self.block_index(a, b), Sub(Pair(Sub(q), Pair(m, Sub(p)))))

    def decode_arrow(self, x):
        """``(a, b, q, m, p)`` for an arrow element."""
        n = len(self.M.objs)
        a, b = self.M.objs[x.index // n], self.M.objs[x.index % n]
        q, m, p = untriple(x.inner.inner)
        return a, b, q.inner, m, p.inner

    def decode_object(self, x):
        return self.M.objs[x.index], x.inner.inner


def idem_carrier(M: EnrichedCat, a):
    """Idempotents of ``M(a, a)``: the equalizer of ``id`` and ``m -> m . m``."""
    h = M.hom[(a, a)]
    square = FinMap(h, h, [M.compose(a, a, a, m, m) for m in h])
    return equalizer(identity(h), square)


def inter_objects(M: EnrichedCat) -> FinObj:
    return coproduct([idem_carrier(M, a).obj for a in M.objs]).obj


def alpha(M: EnrichedCat, a, b, carriers=None) -> FinMap:
    """``(q, m, p) -> q . m . p`` on ``Mb x M(a,b) x Ma``."""
    carriers = carriers or {x: idem_carrier(M, x) for x in (a, b)}
    cb, ca = carriers[b], carriers[a]
    dom = product(cb.obj, product(M.hom[(a, b)], ca.obj).obj).obj
    table = []
    for t in dom:
        q, m, p = untriple(t)
        table.append(M.compose(a, b, b, cb.incl(q), M.compose(a, a, b, m, ca.incl(p))))
    return FinMap(dom, M.hom[(a, b)], table)


def _block(M, a, b, carriers) -> Block:
    al = alpha(M, a, b, carriers)
    dom = al.dom
    bar = FinMap(dom, dom, [Pair(t.left, Pair(al(t), t.right.right)) for t in dom])
    eq = equalizer(bar, identity(dom))
    return Block(dom, al, eq.obj, eq.incl)


def inter_arrows(M: EnrichedCat, carriers=None):
    """The arrow object with ``dom``, ``cod`` and ``ident``."""
    carriers = carriers or {a: idem_carrier(M, a) for a in M.objs}
    objs = M.objs
    A0 = coproduct([carriers[a].obj for a in objs]).obj
    pairs = list(itertools.product(objs, repeat=2))
    blocks = {(a, b): _block(M, a, b, carriers) for a, b in pairs}
    A1 = coproduct([blocks[k].arrows for k in pairs]).obj
    oi = {a: i for i, a in enumerate(objs)}
    dom_t, cod_t = [], []
    for x in A1:
        a, b = pairs[x.index]
        q, _, p = untriple(x.inner.inner)
        dom_t.append(Tag(oi[a], p))
        cod_t.append(Tag(oi[b], q))
    dom = FinMap(A1, A0, dom_t)
    cod = FinMap(A1, A0, cod_t)
    # ident is induced by <id, eps_a, id>; it must land in the fixed points
    ident_t = []
    for y in A0:
        a = objs[y.index]
        k = pairs.index((a, a))
        p = y.inner
        t = Pair(p, Pair(carriers[a].incl(p), p))
        blk = blocks[(a, a)]
        raw = FinMap(FinObj([y]), blk.triples, [t])
        ident_t.append(Tag(k, factor_through_mono(raw, blk.incl).table[0]))
    ident = FinMap(A0, A1, ident_t)
    return A0, A1, dom, cod, ident, blocks


def _comp(M, A0, A1, dom, cod, blocks):
    from .internal import composable_pairs_of
    objs = M.objs
    pairs = list(itertools.product(objs, repeat=2))
    A2 = composable_pairs_of(dom, cod)[0]
    table = []
    for e in A2:
        x, y = e.left, e.right
        b, c = pairs[x.index]
        a, b2 = pairs[y.index]
        r, n, q = untriple(x.inner.inner)
        q2, m, p = untriple(y.inner.inner)
        if b != b2 or q != q2:
            raise NotComposable(f"middle carriers disagree in {e!r}")
        t = Pair(r, Pair(M.compose(a, b, c, n, m), p))
        blk = blocks[(a, c)]
        if t not in blk.triples or Sub(t) not in blk.arrows:
            raise NotFactorable(f"composite {t!r} is not fixed by alpha")
        table.append(Tag(pairs.index((a, c)), Sub(t)))
    return FinMap(A2, A1, table)


def inter_comp(M: EnrichedCat) -> FinMap:
    A0, A1, dom, cod, _, blocks = inter_arrows(M)
    return _comp(M, A0, A1, dom, cod, blocks)


def _omega(build_parts, M, idem):
    carriers, blocks, pairs = build_parts
    omega = {}
    for a in M.objs:
        k = pairs.index((a, a))
        comp_a = FinObj(s for s in idem.obj if s.inner.index == k)
        mids = FinMap(comp_a, M.hom[(a, a)],
                      [untriple(s.inner.inner.inner)[1] for s in comp_a])
        omega[a] = mediate_equalizer(carriers[a], mids)
    return omega


def inter(M: EnrichedCat) -> InterBuild:
    carriers = {a: idem_carrier(M, a) for a in M.objs}
    A0, A1, dom, cod, ident, blocks = inter_arrows(M, carriers)
    comp = _comp(M, A0, A1, dom, cod, blocks)
    A = InternalCat(A0, A1, dom, cod, ident, comp)
    pairs = list(itertools.product(M.objs, repeat=2))
    idem = idem_object(A)
    omega = _omega((carriers, blocks, pairs), M, idem)
    R, S = {}, {}
    for s in idem.obj:
        u = s.inner
        k = u.index
        a = pairs[k][0]
        q, _, p = untriple(u.inner.inner)
        w = omega[a](s)                       # the idempotent m, as Sub(m)
        m = carriers[a].incl(w)
        S[u] = Tag(k, Sub(Pair(q, Pair(m, w))))
        R[u] = Tag(k, Sub(Pair(w, Pair(m, p))))
    for table in (R, S):
        for u, v in table.items():
            if v not in A1:
                raise NotFactorable(f"split arrow {v!r} for {u!r} is not an arrow")
    split = make_split(A, R, S)
    return InterBuild(M, carriers, A0, blocks, A1, A, omega, split)


def inter_split(M: EnrichedCat) -> SplitData:
    return inter(M).split


def inter_of_functor(F: EnrichedFunctor, M: EnrichedCat, N: EnrichedCat,
                     IM: InterBuild | None = None, IN: InterBuild | None = None) -> InternalFunctor:
    IM = IM or inter(M)
    IN = IN or inter(N)
    t0 = []
    for x in IM.objectObj:
        a, p = IM.decode_object(x)
        fa = F.obj[a]
        img = F(a, a, p)
        if Sub(img) not in IN.carriers[fa].obj:
            raise NotFactorable(f"image of idempotent {p!r} is not idempotent")
        t0.append(IN.object_elem(fa, img))
    t1 = []
    for x in IM.arrowObj:
        a, b, q, m, p = IM.decode_arrow(x)
        fa, fb = F.obj[a], F.obj[b]
        y = IN.arrow_elem(fa, fb, F(b, b, q), F(a, b, m), F(a, a, p))
        if y not in IN.arrowObj:
            raise NotFactorable(f"image of arrow {x!r} is not fixed by alpha")
        t1.append(y)
    return InternalFunctor(FinMap(IM.objectObj, IN.objectObj, t0),
                           FinMap(IM.arrowObj, IN.arrowObj, t1))


# -- the literal object of objects and the auxiliary maps ----------------------

def triple_equalizer(M: EnrichedCat, budget=DEFAULT_BUDGET):
    """Equalizer of the two projections and composition
    ``coprod_{a,b,c} M(b,c) x M(a,b) -> coprod_{a,b} M(a,b)``."""
    objs = M.objs
    triples3 = list(itertools.product(objs, repeat=3))
    pairs = list(itertools.product(objs, repeat=2))
    size = sum(len(M.hom[(b, c)]) * len(M.hom[(a, b)]) for a, b, c in triples3)
    if budget is not None and size > budget:
        raise SizeBudgetExceeded(budget, size, "triple equalizer")
    src = coproduct([product(M.hom[(b, c)], M.hom[(a, b)]).obj for a, b, c in triples3]).obj
    tgt = coproduct([M.hom[k] for k in pairs])
    pi1, pi2, cmp = [], [], []
    for t in src:
        a, b, c = triples3[t.index]
        n, m = t.inner.left, t.inner.right
        pi1.append(Tag(pairs.index((b, c)), n))
        pi2.append(Tag(pairs.index((a, b)), m))
        cmp.append(Tag(pairs.index((a, c)), M.compose(a, b, c, n, m)))
    maps = [FinMap(src, tgt.obj, t) for t in (pi1, pi2, cmp)]
    return equalizer3(*maps), maps, tgt


def verify_triple_equalizer_iso(M: EnrichedCat, budget=DEFAULT_BUDGET) -> bool:
    """The literal triple equalizer is isomorphic to ``coprod_a Ma`` over ``coprod M(a,b)``."""
    eq, (pi1, pi2, _), tgt = triple_equalizer(M, budget)
    pairs = list(itertools.product(M.objs, repeat=2))
    reduced = inter_objects(M)
    carriers = [idem_carrier(M, a) for a in M.objs]
    leg = FinMap(reduced, tgt.obj,
                 [Tag(pairs.index((M.objs[x.index],) * 2), carriers[x.index].incl(x.inner))
                  for x in reduced])
    from .ambient import compose
    return find_iso(reduced, eq.obj, [(leg, compose(pi2, eq.incl))]) is not None


def triple_equalizer_blocks(M: EnrichedCat, budget=DEFAULT_BUDGET) -> dict:
    """``(a, b) -> |pullback of the equalizer along the injection of M(a,b)|``."""
    from .ambient import compose, pullback
    eq, (_, pi2, _), tgt = triple_equalizer(M, budget)
    pairs = list(itertools.product(M.objs, repeat=2))
    down = compose(pi2, eq.incl)
    return {k: len(pullback(down, tgt.injections[i]).obj) for i, k in enumerate(pairs)}


def iota_star_a(IB: InterBuild, a) -> FinMap:
    """``Ma -> idem``: ``p -> ident(p)``."""
    c = IB.carriers[a].obj
    idem = IB.split.idemObj.obj
    return FinMap(c, idem, [Sub(IB.arrow_elem(a, a, p.inner, p.inner, p.inner)) for p in c])


def bracket_iota_star(IB: InterBuild, a) -> FinMap:
    """``[iota*]_a: Ma -> idem``: ``p -> (i_a, p, i_a)``."""
    c = IB.carriers[a].obj
    i = IB.M.ident[a]
    idem = IB.split.idemObj.obj
    return FinMap(c, idem, [Sub(IB.arrow_elem(a, a, i, p.inner, i)) for p in c])


def nu(IB: InterBuild, a, b) -> FinMap:
    """``M(a,b) -> inter(M)_1``: ``m -> (i_b, m, i_a)``."""
    M = IB.M
    return FinMap(M.hom[(a, b)], IB.arrowObj,
                  [IB.arrow_elem(a, b, M.ident[b], m, M.ident[a]) for m in M.hom[(a, b)]])


def invariant_violations(IB: InterBuild) -> list[str]:
    """Elementwise checks of the identities the construction is known to satisfy."""
    M, A = IB.M, IB.category
    out = []
    R, S = IB.split.R, IB.split.S
    for x in IB.arrowObj:
        a, b, q, m, p = IB.decode_arrow(x)
        if M.compose(a, a, b, m, p) != m or M.compose(a, b, b, q, m) != m:
            out.append(f"arrow {x!r} is not normalized by its endpoints")
        # c(nu(m), S[iota*](p)) == (i_b, m, p)
        i_b = M.ident[b]
        lhs = A.compose(nu(IB, a, b)(m), S(bracket_iota_star(IB, a)(Sub(p))))
        if lhs != IB.arrow_elem(a, b, i_b, m, p):
            out.append(f"c(nu, S[iota*]) fails at {x!r}")
        # c(R[iota*](q), (i_b, m, p)) == (q, m, p)
        lhs = A.compose(R(bracket_iota_star(IB, b)(Sub(q))), IB.arrow_elem(a, b, i_b, m, p))
        if lhs != x:
            out.append(f"c(R[iota*], -) fails at {x!r}")
    for a in M.objs:
        br = bracket_iota_star(IB, a)
        for p in IB.carriers[a].obj:
            u = br(p)
            if A.cod(R(u)) != IB.object_elem(a, p.inner) or A.dom(S(u)) != IB.object_elem(a, p.inner):
                out.append(f"R/S of [iota*]({p!r}) have the wrong middle object")
            # nu_aa . eps_a == <i_a!, eps_a, i_a!>*
            if nu(IB, a, a)(p.inner) != u.inner:
                out.append(f"nu . eps differs from [iota*] at {p!r}")
    endo = set(s.inner for s in idem_object(A).I.cod)
    diag = {IB.block_index(a, a) for a in M.objs}
    for x in IB.arrowObj:
        if (x in endo) != (x.index in diag and A.dom(x) == A.cod(x)):
            out.append(f"endo decomposition fails at {x!r}")
    return out
