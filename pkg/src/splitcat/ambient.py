"""The ambient category of finite sets.

Objects are :class:`FinObj` (an ordered tuple of distinct elements) and arrows
are :class:`FinMap` (a total function stored as a table).  Every universal
construction returns one canonical representative together with its structure
maps, and the element order of that representative is fixed:

* ``product``      -- ``Pair(x, y)`` in X-major lexicographic order;
* ``coproduct``    -- ``Tag(i, x)`` by summand index, then summand order;
* ``equalizer``    -- ``Sub(x)`` in domain order;
* ``pullback``     -- ``Pair(x, y)`` with ``f(x) == g(y)``, lexicographic.

Two objects are equal exactly when their element tuples are equal.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import (
    ArityMismatch,
    CodomainNotCoproduct,
    CompositionMismatch,
    CospanMismatch,
    DuplicateElement,
    IndexOutOfRange,
    InvalidMap,
    NotFactorable,
    ParallelPairMismatch,
)


# Elements print in the notation of the text format: ``x``, ``(x,y)``,
# ``#i:x`` and ``{x}``.

@dataclass(frozen=True, slots=True, repr=False)
class Atom:
    name: str

    def __repr__(self):
        return format_elem(self)


@dataclass(frozen=True, slots=True, repr=False)
class Pair:
    left: "Element"
    right: "Element"

    def __repr__(self):
        return format_elem(self)


@dataclass(frozen=True, slots=True, repr=False)
class Tag:
    index: int
    inner: "Element"

    def __repr__(self):
        return format_elem(self)


@dataclass(frozen=True, slots=True, repr=False)
class Sub:
    inner: "Element"

    def __repr__(self):
        return format_elem(self)


Element = Union[Atom, Pair, Tag, Sub]

_BARE = re.compile(r"[A-Za-z0-9_.'+-]+\Z")


def format_elem(x) -> str:
    if isinstance(x, Atom):
        return x.name if _BARE.match(x.name) else json.dumps(x.name)
    if isinstance(x, Pair):
        return f"({format_elem(x.left)},{format_elem(x.right)})"
    if isinstance(x, Tag):
        return f"#{x.index}:{format_elem(x.inner)}"
    if isinstance(x, Sub):
        return "{" + format_elem(x.inner) + "}"
    if isinstance(x, str):
        return format_elem(Atom(x))
    raise TypeError(f"cannot format {x!r}")


def triple(q, m, p) -> Pair:
    """Encode the triple ``(q, m, p)`` as ``Pair(q, Pair(m, p))``."""
    return Pair(q, Pair(m, p))


def untriple(t: Pair):
    return t.left, t.right.left, t.right.right


class FinObj:
    """A finite set with a fixed element order."""

    __slots__ = ("elems", "_index")

    def __init__(self, elems: Iterable[Element] = ()):
        elems = tuple(elems)
        index = {}
        for i, x in enumerate(elems):
            if x in index:
                raise DuplicateElement(f"duplicate element {x!r}")
            index[x] = i
        self.elems = elems
        self._index = index

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, x):
        return x in self._index

    def __getitem__(self, i):
        return self.elems[i]

    def index(self, x) -> int:
        return self._index[x]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinObj):
            return NotImplemented
        return self.elems == other.elems

    def __hash__(self):
        return hash(self.elems)

    def __repr__(self):
        return f"FinObj({list(self.elems)!r})"


class FinMap:
    """A total function ``dom -> cod``; ``table[i]`` is the image of ``dom[i]``."""

    __slots__ = ("dom", "cod", "table")

    def __init__(self, dom: FinObj, cod: FinObj, table: Iterable[Element]):
        table = tuple(table)
        if len(table) != len(dom):
            raise InvalidMap(
                f"table has {len(table)} entries for a domain of size {len(dom)}")
        for y in table:
            if y not in cod:
                raise InvalidMap(f"image {y!r} is not an element of the codomain")
        self.dom = dom
        self.cod = cod
        self.table = table

    @classmethod
    def from_function(cls, dom, cod, fn) -> "FinMap":
        return cls(dom, cod, [fn(x) for x in dom])

    @classmethod
    def from_dict(cls, dom, cod, mapping) -> "FinMap":
        missing = [x for x in dom if x not in mapping]
        if missing:
            raise InvalidMap(f"no image given for {missing[0]!r}")
        return cls(dom, cod, [mapping[x] for x in dom])

    def __call__(self, x):
        return self.table[self.dom.index(x)]

    def items(self):
        return zip(self.dom.elems, self.table)

    def as_dict(self) -> dict:
        return dict(zip(self.dom.elems, self.table))

    def is_injective(self):
        return len(set(self.table)) == len(self.table)

    def is_surjective(self):
        return set(self.table) == set(self.cod.elems)

    def is_iso(self):
        return len(self.dom) == len(self.cod) and self.is_injective()

    def __eq__(self, other):
        if not isinstance(other, FinMap):
            return NotImplemented
        return (self.table == other.table and self.dom == other.dom
                and self.cod == other.cod)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        pairs = ", ".join(f"{x!r}->{y!r}" for x, y in self.items())
        return f"FinMap({pairs})"


TERMINAL = FinObj([Atom("*")])
INITIAL = FinObj()


class Product(NamedTuple):
    obj: FinObj
    p1: FinMap
    p2: FinMap


class Coproduct(NamedTuple):
    obj: FinObj
    injections: list


class Equalizer(NamedTuple):
    obj: FinObj
    incl: FinMap


class Pullback(NamedTuple):
    obj: FinObj
    p1: FinMap
    p2: FinMap


@dataclass(frozen=True)
class ConeLeg:
    """A cone: an apex together with legs out of it."""

    apex: FinObj
    legs: tuple

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        for leg in self.legs:
            if leg.dom != self.apex:
                raise InvalidMap("cone leg does not start at the apex")


def identity(X: FinObj) -> FinMap:
    return FinMap(X, X, X.elems)


def compose(g: FinMap, f: FinMap) -> FinMap:
    """``g . f``: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise CompositionMismatch("codomain of f differs from domain of g")
    gi = g.dom._index
    gt = g.table
    return FinMap(f.dom, g.cod, [gt[gi[y]] for y in f.table])


def compose_all(*maps: FinMap) -> FinMap:
    """``compose_all(h, g, f) == h . g . f``."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def constant(X: FinObj, Y: FinObj, y) -> FinMap:
    return FinMap(X, Y, [y] * len(X))


def terminal_map(X: FinObj) -> FinMap:
    """The unique map ``X -> 1``."""
    return constant(X, TERMINAL, TERMINAL[0])


def point(X: FinObj, x) -> FinMap:
    """The global element ``1 -> X`` picking ``x``."""
    return FinMap(TERMINAL, X, [x])


def elements(X: FinObj) -> list:
    """All maps ``1 -> X``, in the order of ``X``."""
    return [point(X, x) for x in X]


def all_maps(X: FinObj, Y: FinObj) -> Iterator[FinMap]:
    """Every map ``X -> Y``, tables in lexicographic order of ``Y``."""
    for table in itertools.product(Y.elems, repeat=len(X)):
        yield FinMap(X, Y, table)


# -- products ---------------------------------------------------------------

def product(X: FinObj, Y: FinObj) -> Product:
    obj = FinObj(Pair(x, y) for x in X for y in Y)
    p1 = FinMap(obj, X, [e.left for e in obj])
    p2 = FinMap(obj, Y, [e.right for e in obj])
    return Product(obj, p1, p2)


def mediate_product(prod: Product, cone: ConeLeg) -> FinMap:
    f, g = cone.legs
    if f.cod != prod.p1.cod or g.cod != prod.p2.cod:
        raise CompositionMismatch("cone legs do not land in the factors")
    return FinMap(cone.apex, prod.obj,
                  [Pair(a, b) for a, b in zip(f.table, g.table)])


def product_map(f: FinMap, g: FinMap) -> FinMap:
    """``f x g`` between canonical products."""
    src = product(f.dom, g.dom).obj
    tgt = product(f.cod, g.cod).obj
    return FinMap(src, tgt, [Pair(f(e.left), g(e.right)) for e in src])


# -- coproducts -------------------------------------------------------------

def coproduct(family: Sequence[FinObj]) -> Coproduct:
    obj = FinObj(Tag(i, x) for i, X in enumerate(family) for x in X)
    injections = [FinMap(X, obj, [Tag(i, x) for x in X])
                  for i, X in enumerate(family)]
    return Coproduct(obj, injections)


def coproduct_map(family: Sequence[FinMap], targetInjections: Sequence[FinMap]) -> FinMap:
    """The map out of the coproduct of domains acting as ``inj_i . f_i`` on summand ``i``."""
    if len(family) != len(targetInjections):
        raise ArityMismatch(
            f"{len(family)} maps but {len(targetInjections)} injections")
    for f, j in zip(family, targetInjections):
        if f.cod != j.dom:
            raise CompositionMismatch("map codomain differs from injection domain")
    src = coproduct([f.dom for f in family]).obj
    if targetInjections:
        cod = targetInjections[0].cod
    else:
        cod = INITIAL
    table = [j(f.table[f.dom.index(t.inner)])
             for t in src
             for f, j in [(family[t.index], targetInjections[t.index])]]
    return FinMap(src, cod, table)


def copair(maps: Sequence[FinMap], cod: FinObj | None = None) -> FinMap:
    """``[f_0, ..., f_n]``: the map out of the coproduct restricting to ``f_i``."""
    if cod is None:
        if not maps:
            raise ArityMismatch("cannot infer the codomain of an empty copairing")
        cod = maps[0].cod
    for f in maps:
        if f.cod != cod:
            raise CompositionMismatch("copairing maps must share a codomain")
    src = coproduct([f.dom for f in maps]).obj
    return FinMap(src, cod, [maps[t.index](t.inner) for t in src])


def subcoproduct_map(family: Sequence[FinObj], indices: Sequence[int]) -> FinMap:
    """The canonical map from the coproduct over ``indices`` into the full coproduct."""
    for i in indices:
        if not 0 <= i < len(family):
            raise IndexOutOfRange(f"index {i} outside family of size {len(family)}")
    src = coproduct([family[i] for i in indices]).obj
    tgt = coproduct(family).obj
    return FinMap(src, tgt, [Tag(indices[t.index], t.inner) for t in src])


# -- equalizers and pullbacks -----------------------------------------------

def _check_parallel(*maps):
    f = maps[0]
    for g in maps[1:]:
        if g.dom != f.dom or g.cod != f.cod:
            raise ParallelPairMismatch("maps are not parallel")


def equalizer(f: FinMap, g: FinMap) -> Equalizer:
    _check_parallel(f, g)
    obj = FinObj(Sub(x) for x, a, b in zip(f.dom, f.table, g.table) if a == b)
    return Equalizer(obj, FinMap(obj, f.dom, [s.inner for s in obj]))


def equalizer3(f: FinMap, g: FinMap, h: FinMap) -> Equalizer:
    _check_parallel(f, g, h)
    obj = FinObj(Sub(x) for x, a, b, c in zip(f.dom, f.table, g.table, h.table)
                 if a == b == c)
    return Equalizer(obj, FinMap(obj, f.dom, [s.inner for s in obj]))


def pullback(f: FinMap, g: FinMap) -> Pullback:
    if f.cod != g.cod:
        raise CospanMismatch("the two maps have different codomains")
    by_image = {}
    for y, b in g.items():
        by_image.setdefault(b, []).append(y)
    obj = FinObj(Pair(x, y) for x, a in f.items() for y in by_image.get(a, ()))
    p1 = FinMap(obj, f.dom, [e.left for e in obj])
    p2 = FinMap(obj, g.dom, [e.right for e in obj])
    return Pullback(obj, p1, p2)


def factor_through_mono(h: FinMap, mono: FinMap) -> FinMap:
    """The unique ``k`` with ``mono . k == h``; ``mono`` must be injective."""
    if h.cod != mono.cod:
        raise CompositionMismatch("h and the mono have different codomains")
    preimage = {}
    for x, y in mono.items():
        if y in preimage:
            raise NotFactorable("the map factored through is not monic")
        preimage[y] = x
    table = []
    for x, y in h.items():
        if y not in preimage:
            raise NotFactorable(f"{x!r} maps to {y!r}, outside the subobject")
        table.append(preimage[y])
    return FinMap(h.dom, mono.dom, table)


def mediate_equalizer(eq: Equalizer, h: FinMap) -> FinMap:
    """The unique ``h*`` with ``incl . h* == h``."""
    return factor_through_mono(h, eq.incl)


def mediate_pullback(pb: Pullback, cone: ConeLeg) -> FinMap:
    u, v = cone.legs
    table = []
    for a, b in zip(u.table, v.table):
        e = Pair(a, b)
        if e not in pb.obj:
            raise NotFactorable(f"cone does not commute at {e!r}")
        table.append(e)
    return FinMap(cone.apex, pb.obj, table)


def find_iso(X: FinObj, Y: FinObj, legs=()) -> FinMap | None:
    """Search for a bijection ``phi: X -> Y`` with ``v . phi == u`` for each ``(u, v)`` in legs."""
    if len(X) != len(Y):
        return None
    legs = list(legs)
    sig_x = [tuple(u(x) for u, _ in legs) for x in X]
    sig_y = [tuple(v(y) for _, v in legs) for y in Y]
    used = [False] * len(Y)
    chosen = [None] * len(X)

    def search(i):
        if i == len(X):
            return True
        for j, y in enumerate(Y):
            if not used[j] and sig_y[j] == sig_x[i]:
                used[j] = True
                chosen[i] = y
                if search(i + 1):
                    return True
                used[j] = False
        return False

    if not search(0):
        return None
    return FinMap(X, Y, chosen)


# -- extensivity law checkers -----------------------------------------------

def check_e1(family: Sequence[FinMap]) -> bool:
    """Each square ``y_i -> x_i`` over ``coprod f_i`` is a pullback."""
    ys = coproduct([f.dom for f in family])
    xs = coproduct([f.cod for f in family])
    total = coproduct_map(list(family), xs.injections)
    for i, f in enumerate(family):
        pb = pullback(xs.injections[i], total)
        # the square's comparison map y_i -> pb must be invertible
        cmp = mediate_pullback(pb, ConeLeg(f.dom, (f, ys.injections[i])))
        if not cmp.is_iso():
            return False
        if find_iso(f.dom, pb.obj, [(f, pb.p1), (ys.injections[i], pb.p2)]) is None:
            return False
    return True


def _e2_parts(f: FinMap, family, pullback_fn):
    cop = coproduct(family)
    if f.cod != cop.obj:
        raise CodomainNotCoproduct("codomain of f is not the coproduct of the family")
    pbs = [pullback_fn(j, f) for j in cop.injections]
    canonical = copair([pb.p2 for pb in pbs], f.dom)
    return pbs, canonical


def check_e2_universal(f: FinMap, family: Sequence[FinObj], pullback_fn=pullback) -> bool:
    """Pulling ``f`` back along every injection and summing recovers ``dom(f)``."""
    _, canonical = _e2_parts(f, family, pullback_fn)
    return canonical.is_iso()


def e2_witness(f: FinMap, family: Sequence[FinObj], pullback_fn=pullback):
    """An iso ``coprod y_i -> dom(f)`` commuting with the map down to ``coprod x_i``, or None."""
    pbs, canonical = _e2_parts(f, family, pullback_fn)
    cop = coproduct(family)
    down = copair([compose(j, pb.p1) for j, pb in zip(cop.injections, pbs)], cop.obj)
    return find_iso(canonical.dom, f.dom, [(down, f)])


def check_e3_disjoint(family: Sequence[FinObj]) -> bool:
    inj = coproduct(family).injections
    if not all(j.is_injective() for j in inj):
        return False
    for i, j in itertools.combinations(range(len(family)), 2):
        if len(pullback(inj[i], inj[j]).obj) != 0:
            return False
    return True


def check_subcoproduct_intersection(family: Sequence[FinObj], J1, J2) -> bool:
    J1, J2 = sorted(set(J1)), sorted(set(J2))
    both = [i for i in J1 if i in J2]
    m1 = subcoproduct_map(family, J1)
    m2 = subcoproduct_map(family, J2)
    m12 = subcoproduct_map(family, both)
    pb = pullback(m1, m2)
    # legs of the intersection into the J1- and J2-coproducts
    to1 = factor_through_mono(m12, m1)
    to2 = factor_through_mono(m12, m2)
    return find_iso(m12.dom, pb.obj, [(to1, pb.p1), (to2, pb.p2)]) is not None


def distributivity_map(Y: FinObj, family: Sequence[FinObj]) -> FinMap:
    """The canonical ``coprod (Y x x_i) -> Y x coprod x_i``."""
    src = coproduct([product(Y, X).obj for X in family]).obj
    tgt = product(Y, coproduct(family).obj).obj
    return FinMap(src, tgt,
                  [Pair(t.inner.left, Tag(t.index, t.inner.right)) for t in src])


def check_distributive(Y: FinObj, family: Sequence[FinObj]) -> bool:
    return distributivity_map(Y, family).is_iso()


def check_strict_initial(X: FinObj) -> bool:
    """Every map ``X -> 0`` is an isomorphism."""
    return all(f.is_iso() for f in all_maps(X, INITIAL))


def check_coproduct_of_equalizers(pairs: Sequence, Y: FinObj) -> bool:
    """Given parallel pairs ``f_i, g_i: x_i -> Y``, the sum of their equalizers
    equalizes the copaired pair ``[f_i], [g_i]: coprod x_i -> Y``."""
    pairs = list(pairs)
    eqs = [equalizer(f, g) for f, g in pairs]
    xs = coproduct([f.dom for f, _ in pairs])
    summed = coproduct_map([e.incl for e in eqs], xs.injections) if pairs else \
        FinMap(INITIAL, xs.obj, [])
    F = copair([f for f, _ in pairs], Y)
    G = copair([g for _, g in pairs], Y)
    whole = equalizer(F, G)
    return find_iso(summed.dom, whole.obj, [(summed, whole.incl)]) is not None
