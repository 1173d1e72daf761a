"""Named small instances and the golden-file corpus built from them."""

from __future__ import annotations

from pathlib import Path

from .ambient import Atom, FinMap, FinObj
from .enriched import EnrichedCat, make_enriched
from .inter_functor import inter
from .internal import internalize
from .plaincat import karoubi, monoid_category, underlying_category
from .setcats import twisted_clifford
from .textio import (
    Document,
    enriched_document,
    family_document,
    internal_document,
    plain_document,
    serialize,
)

X = Atom("x")


def _monoid(elements, mult, unit="1", obj=X) -> EnrichedCat:
    els = [Atom(e) for e in elements]
    table = {(Atom(g), Atom(f)): Atom(mult(g, f)) for g in elements for f in elements}
    return make_enriched([obj], {(obj, obj): els},
                         lambda a, b, c, n, m: table[(n, m)], {obj: Atom(unit)})


def trivial() -> EnrichedCat:
    return _monoid(["1"], lambda g, f: "1")


def idem_monoid() -> EnrichedCat:
    """``{1, e}`` with ``e e = e``."""
    return _monoid(["1", "e"], lambda g, f: "e" if "e" in (g, f) else "1")


def z2() -> EnrichedCat:
    """``{1, s}`` with ``s s = 1``."""
    return _monoid(["1", "s"], lambda g, f: "s" if (g == "s") != (f == "s") else "1")


def two_object() -> EnrichedCat:
    """Two objects, every hom a singleton (the codiscrete category on two objects)."""
    x, y = Atom("x"), Atom("y")
    name = {(x, x): "1x", (y, y): "1y", (x, y): "f", (y, x): "g"}
    hom = {k: [Atom(v)] for k, v in name.items()}
    return make_enriched([x, y], hom, lambda a, b, c, n, m: Atom(name[(a, c)]),
                         {x: Atom("1x"), y: Atom("1y")})


def interval() -> EnrichedCat:
    """``0 -> 1`` with nothing back."""
    z, o = Atom("0"), Atom("1")
    hom = {(z, z): [Atom("i0")], (o, o): [Atom("i1")], (z, o): [Atom("f")], (o, z): []}
    name = {(z, z): "i0", (o, o): "i1", (z, o): "f"}
    return make_enriched([z, o], hom, lambda a, b, c, n, m: Atom(name[(a, c)]),
                         {z: Atom("i0"), o: Atom("i1")})


ENRICHED = {
    "trivial": trivial,
    "idem-monoid": idem_monoid,
    "two-object": two_object,
    "interval": interval,
    "z2": z2,
}

# the instances the hom-set bijection is checked on, smallest first
ADJUNCTION_SET = ("trivial", "interval", "two-object", "idem-monoid")


def idem_monoid_plain():
    e, one = Atom("e"), Atom("1")
    table = {(g, f): e if e in (g, f) else one for g in (one, e) for f in (one, e)}
    return monoid_category((one, e), table, one, obj=X)


def corpus() -> dict[str, Document]:
    """File name -> document, for every golden file."""
    out = {}
    for name, build in ENRICHED.items():
        M = build()
        out[f"{name}.ecat"] = enriched_document(M, name=name)
        IB = inter(M)
        out[f"{name}-inter.icat"] = internal_document(IB.category, IB.split, name=f"{name}-inter")
    out["trivial.icat"] = internal_document(internalize(underlying_category(trivial())),
                                            name="trivial")
    out["interval.icat"] = internal_document(internalize(underlying_category(interval())),
                                             name="interval")
    C = idem_monoid_plain()
    out["idem-monoid.fcat"] = plain_document(C, name="idem-monoid")
    out["idem-monoid-karoubi.fcat"] = plain_document(karoubi(C), name="idem-monoid-karoubi")
    A, _, twisted = twisted_clifford()
    out["clifford-twisted.icat"] = internal_document(
        A, twisted, name="clifford-twisted",
        comments=["a split that is not canonical: (f,g,f) splits through t"])
    out["one-two.fset"] = one_two_family()
    return out


def one_two_family() -> Document:
    A = FinObj([Atom("a")])
    B = FinObj([Atom("b0"), Atom("b1")])
    f = FinMap(B, A, [Atom("a"), Atom("a")])
    return family_document({"A": A, "B": B}, {"f": ("B", "A", f)}, name="one-two")


def write_corpus(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for fname, doc in corpus().items():
        path = directory / fname
        path.write_text(serialize(doc), encoding="utf-8")
        written.append(path)
    return written
