"""Line-oriented text format for finite sets, maps and categories.

Elements are written as

* bare atoms ``[A-Za-z0-9_.'+-]+`` (any other atom name is JSON-quoted),
* ``(x,y)`` for pairs, ``#i:x`` for tags and ``{x}`` for subobject elements.

Every file starts with ``kind <k>`` and an optional ``name <n>``; lines
starting with ``#`` are comments (kept, and written back after the header).  Parsing only
checks shape and totality of tables; the category laws are left to ``check``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .ambient import Atom, FinMap, FinObj, Pair, Sub, Tag, format_elem, product
from .enriched import EnrichedCat
from .errors import DuplicateLabel, ParseError
from .internal import InternalCat, composable_pairs_of
from .plaincat import FinCat, SplitWitness

KINDS = ("finset-map-family", "plain-category", "enriched-category", "internal-category")
EXTENSIONS = {".fcat": "plain-category", ".ecat": "enriched-category",
              ".icat": "internal-category", ".fset": "finset-map-family"}

_BARE_CHAR = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_.'+-")


@dataclass
class Document:
    kind: str
    payload: object
    meta: dict = field(default_factory=dict)


@dataclass
class InternalPayload:
    category: InternalCat
    R: dict | None = None       # idempotent arrow -> retraction
    S: dict | None = None


@dataclass
class MapFamily:
    sets: dict                  # name -> FinObj, in file order
    maps: dict                  # name -> (source name, target name, FinMap)


# -- elements -----------------------------------------------------------------

class _Cursor:
    def __init__(self, text, line):
        self.s = text
        self.i = 0
        self.line = line

    def fail(self, msg):
        raise ParseError(msg, self.line, self.i + 1)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i] in " \t":
            self.i += 1

    def at_end(self):
        self.ws()
        return self.i >= len(self.s)

    def peek(self, lit):
        self.ws()
        return self.s.startswith(lit, self.i)

    def lit(self, lit):
        self.ws()
        if not self.s.startswith(lit, self.i):
            self.fail(f"expected {lit!r}")
        self.i += len(lit)

    def word(self):
        self.ws()
        j = self.i
        while j < len(self.s) and self.s[j] in _BARE_CHAR and not self.s.startswith("->", j):
            j += 1
        if j == self.i:
            self.fail("expected a name")
        out, self.i = self.s[self.i:j], j
        return out

    def elem(self):
        self.ws()
        if self.i >= len(self.s):
            self.fail("expected an element")
        ch = self.s[self.i]
        if ch == "(":
            self.i += 1
            left = self.elem()
            self.lit(",")
            right = self.elem()
            self.lit(")")
            return Pair(left, right)
        if ch == "{":
            self.i += 1
            inner = self.elem()
            self.lit("}")
            return Sub(inner)
        if ch == "#":
            self.i += 1
            j = self.i
            while j < len(self.s) and self.s[j].isdigit():
                j += 1
            if j == self.i:
                self.fail("expected a tag index")
            idx = int(self.s[self.i:j])
            self.i = j
            if not self.s.startswith(":", self.i):
                self.fail("expected ':' after tag index")
            self.i += 1
            return Tag(idx, self.elem())
        if ch == '"':
            try:
                name, end = json.JSONDecoder().raw_decode(self.s, self.i)
            except json.JSONDecodeError:
                self.fail("malformed quoted atom")
            if not isinstance(name, str):
                self.fail("quoted atom must be a string")
            self.i = end
            return Atom(name)
        return Atom(self.word())

    def elems(self):
        out = []
        while not self.at_end():
            out.append(self.elem())
        return out

    def done(self):
        if not self.at_end():
            self.fail("unexpected trailing text")


def parse_elem(text: str):
    c = _Cursor(text, 1)
    x = c.elem()
    c.done()
    return x


# -- parsing ------------------------------------------------------------------

def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        if not line.strip():
            continue
        yield n, line


def parse(text: str) -> Document:
    meta = {"name": None, "comments": []}
    body = []
    kind = None
    for n, line in _lines(text):
        stripped = line.strip()
        if stripped.startswith("#"):
            meta["comments"].append(stripped[1:].strip())
            continue
        c = _Cursor(line, n)
        head = c.word()
        if head == "kind":
            if kind is not None:
                c.fail("kind given twice")
            kind = c.word()
            c.done()
            if kind not in KINDS:
                raise ParseError(f"unknown kind {kind!r}", n, 1)
            continue
        if head == "name":
            c.ws()
            meta["name"] = line[c.i:].strip()
            continue
        if kind is None:
            raise ParseError("file must start with 'kind'", n, 1)
        body.append((n, head, c))
    if kind is None:
        raise ParseError("missing 'kind' line", 1, 1)
    reader = {"plain-category": _parse_plain, "enriched-category": _parse_enriched,
              "internal-category": _parse_internal, "finset-map-family": _parse_family}[kind]
    return Document(kind, reader(body), meta)


def _add_unique(seq, seen, x, c, what):
    if x in seen:
        raise DuplicateLabel(f"duplicate {what} {format_elem(x)}", c.line, 1)
    seen.add(x)
    seq.append(x)


def _last_line(body):
    return body[-1][0] if body else 1


def _parse_plain(body):
    objects, seen_o = [], set()
    arrows, seen_a = [], set()
    dom, cod, idents, comp, split = {}, {}, {}, {}, {}
    for n, head, c in body:
        if head == "object":
            _add_unique(objects, seen_o, c.elem(), c, "object")
        elif head == "arrow":
            f = c.elem()
            c.lit(":")
            a = c.elem()
            c.lit("->")
            b = c.elem()
            _add_unique(arrows, seen_a, f, c, "arrow")
            dom[f], cod[f] = a, b
        elif head == "ident":
            a = c.elem()
            c.lit("=")
            e = c.elem()
            if a in idents:
                raise DuplicateLabel(f"identity of {format_elem(a)} given twice", n, 1)
            idents[a] = e
        elif head == "comp":
            g = c.elem()
            c.lit("*")
            f = c.elem()
            c.lit("=")
            h = c.elem()
            if (g, f) in comp:
                raise DuplicateLabel(f"composite {format_elem(g)}*{format_elem(f)} given twice", n, 1)
            comp[(g, f)] = h
        elif head == "split":
            e = c.elem()
            c.lit(":")
            mid, r, s = c.elem(), c.elem(), c.elem()
            if e in split:
                raise DuplicateLabel(f"split of {format_elem(e)} given twice", n, 1)
            split[e] = SplitWitness(mid, r, s)
        else:
            c.fail(f"unknown directive {head!r}")
        c.done()
    end = _last_line(body)
    for f in arrows:
        for x in (dom[f], cod[f]):
            if x not in seen_o:
                raise ParseError(f"arrow {format_elem(f)} uses unknown object {format_elem(x)}", end, 1)
    for a in objects:
        if a not in idents:
            raise ParseError(f"no identity for object {format_elem(a)}", end, 1)
    for g in arrows:
        for f in arrows:
            if dom[g] == cod[f] and (g, f) not in comp:
                raise ParseError(f"missing composite {format_elem(g)}*{format_elem(f)}", end, 1)
    return FinCat(tuple(objects), tuple(arrows), dom, cod, comp, idents, split)


def _parse_enriched(body):
    objs, seen = [], set()
    hom, rows, ident = {}, {}, {}
    for n, head, c in body:
        if head == "object":
            _add_unique(objs, seen, c.elem(), c, "object")
        elif head == "hom":
            a, b = c.elem(), c.elem()
            c.lit(":")
            if (a, b) in hom:
                raise DuplicateLabel(f"hom {format_elem(a)} {format_elem(b)} given twice", n, 1)
            try:
                hom[(a, b)] = FinObj(c.elems())
            except Exception as exc:
                raise DuplicateLabel(str(exc), n, 1) from None
        elif head == "comp":
            a, b, k = c.elem(), c.elem(), c.elem()
            c.lit(":")
            nn = c.elem()
            c.lit("*")
            m = c.elem()
            c.lit("=")
            r = c.elem()
            key = (a, b, k, nn, m)
            if key in rows:
                raise DuplicateLabel("composition row given twice", n, 1)
            rows[key] = r
        elif head == "ident":
            a = c.elem()
            c.lit("=")
            if a in ident:
                raise DuplicateLabel(f"identity of {format_elem(a)} given twice", n, 1)
            ident[a] = c.elem()
        else:
            c.fail(f"unknown directive {head!r}")
        c.done()
    end = _last_line(body)
    for a, b in itertools.product(objs, repeat=2):
        if (a, b) not in hom:
            raise ParseError(f"missing hom {format_elem(a)} {format_elem(b)}", end, 1)
    for a in objs:
        if a not in ident:
            raise ParseError(f"missing identity of {format_elem(a)}", end, 1)
    comp = {}
    for a, b, k in itertools.product(objs, repeat=3):
        src = product(hom[(b, k)], hom[(a, b)]).obj
        table = []
        for e in src:
            key = (a, b, k, e.left, e.right)
            if key not in rows:
                raise ParseError(f"missing composition {format_elem(e.left)}*"
                                 f"{format_elem(e.right)} for {format_elem(a)} "
                                 f"{format_elem(b)} {format_elem(k)}", end, 1)
            if rows[key] not in hom[(a, k)]:
                raise ParseError(f"composite {format_elem(rows[key])} is not in hom "
                                 f"{format_elem(a)} {format_elem(k)}", end, 1)
            table.append(rows[key])
        comp[(a, b, k)] = FinMap(src, hom[(a, k)], table)
    if len(rows) != sum(len(f.dom) for f in comp.values()):
        raise ParseError("composition row for a pair outside the hom-objects", end, 1)
    return EnrichedCat(tuple(objs), hom, comp, ident)


def _read_rows(c, n, table, name):
    x = c.elem()
    c.lit("->")
    y = c.elem()
    if x in table:
        raise DuplicateLabel(f"{name} row for {format_elem(x)} given twice", n, 1)
    table[x] = y


def _total(dom, cod, rows, name, line):
    table = []
    for x in dom:
        if x not in rows:
            raise ParseError(f"map {name} has no row for {format_elem(x)}", line, 1)
        if rows[x] not in cod:
            raise ParseError(f"map {name} sends {format_elem(x)} outside its codomain", line, 1)
        table.append(rows[x])
    if len(rows) != len(dom):
        raise ParseError(f"map {name} has rows outside its domain", line, 1)
    return FinMap(dom, cod, table)


def _parse_set(c, n, sets):
    name = c.word()
    c.lit(":")
    if name in sets:
        raise DuplicateLabel(f"set {name} given twice", n, 1)
    try:
        sets[name] = FinObj(c.elems())
    except Exception as exc:
        raise DuplicateLabel(str(exc), n, 1) from None


def _parse_internal(body):
    sets, maps, splits = {}, {k: {} for k in ("dom", "cod", "ident", "comp")}, {}
    for n, head, c in body:
        if head == "set":
            _parse_set(c, n, sets)
            if list(sets)[-1] not in ("A0", "A1"):
                c.fail("internal categories only have sets A0 and A1")
        elif head == "map":
            name = c.word()
            if name not in maps:
                c.fail(f"unknown structure map {name!r}")
            c.lit(":")
            _read_rows(c, n, maps[name], name)
        elif head == "split":
            name = c.word()
            if name not in ("R", "S"):
                c.fail("split maps are R and S")
            c.lit(":")
            _read_rows(c, n, splits.setdefault(name, {}), name)
        else:
            c.fail(f"unknown directive {head!r}")
        c.done()
    end = _last_line(body)
    A0, A1 = sets.get("A0", FinObj()), sets.get("A1", FinObj())
    dom = _total(A1, A0, maps["dom"], "dom", end)
    cod = _total(A1, A0, maps["cod"], "cod", end)
    ident = _total(A0, A1, maps["ident"], "ident", end)
    A2 = composable_pairs_of(dom, cod)[0]
    comp = _total(A2, A1, maps["comp"], "comp", end)
    A = InternalCat(A0, A1, dom, cod, ident, comp)
    R, S = splits.get("R"), splits.get("S")
    if (R is None) != (S is None):
        raise ParseError("a split needs both R and S", end, 1)
    return InternalPayload(A, R, S)


def _parse_family(body):
    sets, funs, rows = {}, {}, {}
    for n, head, c in body:
        if head == "set":
            _parse_set(c, n, sets)
        elif head == "fun":
            name = c.word()
            c.lit(":")
            x = c.word()
            c.lit("->")
            y = c.word()
            if name in funs:
                raise DuplicateLabel(f"function {name} given twice", n, 1)
            for s in (x, y):
                if s not in sets:
                    c.fail(f"unknown set {s!r}")
            funs[name] = (x, y)
            rows[name] = {}
        elif head == "map":
            name = c.word()
            if name not in funs:
                c.fail(f"unknown function {name!r}")
            c.lit(":")
            _read_rows(c, n, rows[name], name)
        else:
            c.fail(f"unknown directive {head!r}")
        c.done()
    end = _last_line(body)
    maps = {name: (x, y, _total(sets[x], sets[y], rows[name], name, end))
            for name, (x, y) in funs.items()}
    return MapFamily(sets, maps)


# -- serialization ------------------------------------------------------------

def _header(doc):
    out = [f"kind {doc.kind}"]
    if doc.meta.get("name"):
        out.append(f"name {doc.meta['name']}")
    for line in doc.meta.get("comments", []):
        out.append(f"# {line}".rstrip())
    return out


def serialize(doc: Document) -> str:
    writer = {"plain-category": _write_plain, "enriched-category": _write_enriched,
              "internal-category": _write_internal, "finset-map-family": _write_family}[doc.kind]
    return "\n".join(_header(doc) + writer(doc.payload)) + "\n"


def _write_plain(C: FinCat):
    f = format_elem
    out = [f"object {f(a)}" for a in C.objects]
    out += [f"arrow {f(x)} : {f(C.dom[x])} -> {f(C.cod[x])}" for x in C.arrows]
    out += [f"ident {f(a)} = {f(C.idents[a])}" for a in C.objects]
    for g in C.arrows:
        for h in C.arrows:
            if (g, h) in C.comp:
                out.append(f"comp {f(g)}*{f(h)} = {f(C.comp[(g, h)])}")
    for e in C.arrows:
        if e in C.split:
            w = C.split[e]
            out.append(f"split {f(e)} : {f(w.mid)} {f(w.retraction)} {f(w.section)}")
    return out


def _write_enriched(M: EnrichedCat):
    f = format_elem
    out = [f"object {f(a)}" for a in M.objs]
    for a, b in itertools.product(M.objs, repeat=2):
        elems = " ".join(f(x) for x in M.hom[(a, b)])
        out.append(f"hom {f(a)} {f(b)} :" + (f" {elems}" if elems else ""))
    for a in M.objs:
        out.append(f"ident {f(a)} = {f(M.ident[a])}")
    for a, b, c in itertools.product(M.objs, repeat=3):
        for e, y in M.comp[(a, b, c)].items():
            out.append(f"comp {f(a)} {f(b)} {f(c)} : {f(e.left)}*{f(e.right)} = {f(y)}")
    return out


def _set_line(name, X):
    elems = " ".join(format_elem(x) for x in X)
    return f"set {name}:" + (f" {elems}" if elems else "")


def _write_internal(P: InternalPayload):
    A = P.category
    f = format_elem
    out = [_set_line("A0", A.A0), _set_line("A1", A.A1)]
    for name, m in (("dom", A.dom), ("cod", A.cod), ("ident", A.ident), ("comp", A.comp)):
        out += [f"map {name}: {f(x)} -> {f(y)}" for x, y in m.items()]
    if P.R is not None:
        for name, table in (("R", P.R), ("S", P.S)):
            for u in A.A1:
                if u in table:
                    out.append(f"split {name}: {f(u)} -> {f(table[u])}")
    return out


def _write_family(F: MapFamily):
    out = [_set_line(name, X) for name, X in F.sets.items()]
    f = format_elem
    for name, (x, y, m) in F.maps.items():
        out.append(f"fun {name} : {x} -> {y}")
        out += [f"map {name}: {f(a)} -> {f(b)}" for a, b in m.items()]
    return out


# -- conveniences -------------------------------------------------------------

def internal_document(A: InternalCat, split=None, name=None, comments=()) -> Document:
    """``split`` may be a SplitData; its tables are stored keyed by idempotent arrow."""
    R = S = None
    if split is not None:
        R = {s.inner: split.R(s) for s in split.idemObj.obj}
        S = {s.inner: split.S(s) for s in split.idemObj.obj}
    return Document("internal-category", InternalPayload(A, R, S),
                    {"name": name, "comments": list(comments)})


def enriched_document(M: EnrichedCat, name=None, comments=()) -> Document:
    return Document("enriched-category", M, {"name": name, "comments": list(comments)})


def plain_document(C: FinCat, name=None, comments=()) -> Document:
    return Document("plain-category", C, {"name": name, "comments": list(comments)})


def family_document(sets: dict, maps: dict, name=None, comments=()) -> Document:
    """``maps`` is name -> (source name, target name, FinMap)."""
    payload = MapFamily(dict(sets), dict(maps))
    return Document("finset-map-family", payload, {"name": name, "comments": list(comments)})
