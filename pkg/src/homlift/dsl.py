"""Text format for workspaces: objects, maps, cylinders and generator sets.

Grammar (whitespace separates entries, ';' separates sections, '#' starts
a comment running to end of line):

    document   := decl*
    decl       := relobj | catobj | mapdecl | cyldecl | gensetdecl
    relobj     := ("graph"|"eqrel"|"set") NAME "{" "vertices" ":" NAME*
                  [";" "edges" ":" edge*] "}"
                | ("preord"|"ord") NAME "{" "elements" ":" NAME*
                  [";" "le" ":" lepair*] "}"
    edge       := NAME "-" NAME
    lepair     := NAME "<=" NAME
    catobj     := "cat" NAME "{" "objects" ":" NAME*
                  [";" "arrows" ":" arrow*] [";" "compose" ":" comp*] "}"
    arrow      := NAME ":" NAME "->" NAME
    comp       := NAME "." NAME "=" rhs        # left arrow first, then right
    rhs        := NAME | "id" "(" NAME ")"
    mapdecl    := "map" NAME ":" NAME "->" NAME "{" assign* "}"
    assign     := NAME "->" rhs
    cyldecl    := "cylinder" NAME ":" FLAVOR "{" "interval" ":" NAME ";"
                  "e0" ":" NAME ";" "e1" ":" NAME "}"
    gensetdecl := "genset" NAME "{" "maps" ":" NAME* "}"

The flavor of a cylinder is one of graph, eqrel, preord, ord, set, cat.
Vertex and arrow names are symbolic; canonical indices follow declaration
order, so emitted documents reparse to equal workspaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from . import fincat, finrel, homotopy
from .errors import HomliftError

REL_KEYWORDS = ("graph", "eqrel", "set", "preord", "ord")


class ParseError(HomliftError, ValueError):
    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # 'name', 'punct', 'eof'
    text: str
    line: int
    col: int


_PUNCT = ("->", "<=", "{", "}", ":", ";", "-", "=", "(", ")", ".")


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        matched = None
        for p in _PUNCT:
            if text.startswith(p, i):
                matched = p
                break
        if matched:
            tokens.append(Token("punct", matched, line, col))
            i += len(matched)
            col += len(matched)
            continue
        if ch.isalnum() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass
class RelEntry:
    obj: finrel.RelObject
    elems: tuple[str, ...]

    def elem_index(self, name: str) -> Optional[int]:
        try:
            return self.elems.index(name)
        except ValueError:
            return None


@dataclass
class CatEntry:
    obj: fincat.FinCategory
    objects: tuple[str, ...]
    arrows: tuple[str, ...]  # names for non-identity arrows, in arrow order

    def obj_index(self, name: str) -> Optional[int]:
        try:
            return self.objects.index(name)
        except ValueError:
            return None

    def arrow_index(self, name: str) -> Optional[int]:
        # identities are addressed as id(obj); names cover the rest
        n = self.obj.n_obj
        try:
            return n + self.arrows.index(name)
        except ValueError:
            return None


Entry = Union[RelEntry, CatEntry]


@dataclass
class Workspace:
    objects: dict[str, Entry] = field(default_factory=dict)
    maps: dict[str, object] = field(default_factory=dict)
    map_decl: dict[str, tuple[str, str, tuple]] = field(default_factory=dict)
    cylinders: dict[str, homotopy.IntervalCylinder] = field(default_factory=dict)
    cyl_decl: dict[str, tuple[str, str, str, str]] = field(default_factory=dict)
    gensets: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def genset_arrows(self, name: str):
        return tuple(self.maps[m] for m in self.gensets[name])


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ws = Workspace()

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text:
            self.fail(f"expected {text!r}, found {t.text!r}", t)
        return t

    def name(self, what: str = "a name") -> Token:
        t = self.next()
        if t.kind != "name":
            self.fail(f"expected {what}, found {t.text!r}", t)
        return t

    def fresh(self, tok: Token):
        n = tok.text
        if n in self.ws.objects or n in self.ws.maps or n in self.ws.cylinders or n in self.ws.gensets:
            self.fail(f"name {n!r} is already defined", tok)

    # -- declarations

    def parse(self) -> Workspace:
        while self.peek().kind != "eof":
            t = self.peek()
            if t.text in REL_KEYWORDS:
                self.rel_object()
            elif t.text == "cat":
                self.cat_object()
            elif t.text == "map":
                self.map_decl()
            elif t.text == "cylinder":
                self.cylinder_decl()
            elif t.text == "genset":
                self.genset_decl()
            else:
                self.fail(f"unknown declaration {t.text!r}", t)
        return self.ws

    def _section(self, keyword: str) -> None:
        self.expect(keyword)
        self.expect(":")

    def rel_object(self):
        flavor = self.next().text
        name_tok = self.name("an object name")
        self.fresh(name_tok)
        self.expect("{")
        elem_kw = "elements" if flavor in ("preord", "ord", "set") else "vertices"
        first = self.name("a section keyword")
        if first.text not in ("vertices", "elements"):
            self.fail(f"expected {elem_kw!r}", first)
        self.expect(":")
        elems = []
        while self.peek().kind == "name" and self.peek().text not in ("edges", "le"):
            tok = self.name()
            if tok.text in elems:
                self.fail(f"duplicate element {tok.text!r}", tok)
            elems.append(tok.text)
        pairs = []
        if self.peek().text == ";":
            self.next()
            if self.peek().text != "}":
                section = self.name("a section keyword")
                self.expect(":")
                if section.text == "edges":
                    while self.peek().kind == "name":
                        a = self.name()
                        self.expect("-")
                        b = self.name()
                        pairs.append((self._elem(elems, a), self._elem(elems, b)))
                        pairs.append((self._elem(elems, b), self._elem(elems, a)))
                elif section.text == "le":
                    while self.peek().kind == "name":
                        a = self.name()
                        self.expect("<=")
                        b = self.name()
                        pairs.append((self._elem(elems, a), self._elem(elems, b)))
                else:
                    self.fail(f"unknown section {section.text!r}", section)
                if self.peek().text == ";":
                    self.next()
        self.expect("}")
        try:
            obj = finrel.make_object(flavor, len(elems), pairs)
        except HomliftError as e:
            raise ParseError(str(e), name_tok.line, name_tok.col) from e
        self.ws.objects[name_tok.text] = RelEntry(obj, tuple(elems))

    @staticmethod
    def _elem_index(elems, tok):
        return elems.index(tok.text)

    def _elem(self, elems, tok) -> int:
        if tok.text not in elems:
            self.fail(f"unknown element {tok.text!r}", tok)
        return elems.index(tok.text)

    def cat_object(self):
        self.next()
        name_tok = self.name("a category name")
        self.fresh(name_tok)
        self.expect("{")
        self._section("objects")
        objs = []
        while self.peek().kind == "name" and self.peek().text not in ("arrows", "compose"):
            tok = self.name()
            if tok.text in objs:
                self.fail(f"duplicate object {tok.text!r}", tok)
            objs.append(tok.text)
        arrow_names: list[str] = []
        arrow_ends: list[tuple[int, int]] = []
        comp_entries: dict[tuple[int, int], int] = {}
        n = len(objs)

        def arrow_ref(tok) -> int:
            if tok.text == "id":
                self.expect("(")
                o = self.name()
                self.expect(")")
                if o.text not in objs:
                    self.fail(f"unknown object {o.text!r}", o)
                return objs.index(o.text)
            if tok.text not in arrow_names:
                self.fail(f"unknown arrow {tok.text!r}", tok)
            return n + arrow_names.index(tok.text)

        while self.peek().text == ";":
            self.next()
            if self.peek().text == "}":
                break
            section = self.name("a section keyword")
            self.expect(":")
            if section.text == "arrows":
                while self.peek().kind == "name" and self.tokens[self.pos + 1].text == ":":
                    a = self.name()
                    if a.text in arrow_names or a.text in objs:
                        self.fail(f"duplicate name {a.text!r}", a)
                    self.expect(":")
                    src = self.name()
                    self.expect("->")
                    tgt = self.name()
                    if src.text not in objs:
                        self.fail(f"unknown object {src.text!r}", src)
                    if tgt.text not in objs:
                        self.fail(f"unknown object {tgt.text!r}", tgt)
                    arrow_names.append(a.text)
                    arrow_ends.append((objs.index(src.text), objs.index(tgt.text)))
            elif section.text == "compose":
                while self.peek().kind == "name" and self.tokens[self.pos + 1].text == ".":
                    a = self.name()
                    ia = arrow_ref(a)
                    self.expect(".")
                    b = self.name()
                    ib = arrow_ref(b)
                    self.expect("=")
                    c = self.name()
                    ic = arrow_ref(c)
                    comp_entries[(ia, ib)] = ic
            else:
                self.fail(f"unknown section {section.text!r}", section)
        self.expect("}")
        arrows = [(i, i) for i in range(n)] + arrow_ends
        try:
            obj = fincat.make_category(n, arrows, comp_entries, list(range(n)))
        except HomliftError as e:
            raise ParseError(str(e), name_tok.line, name_tok.col) from e
        self.ws.objects[name_tok.text] = CatEntry(obj, tuple(objs), tuple(arrow_names))

    def map_decl(self):
        self.next()
        name_tok = self.name("a map name")
        self.fresh(name_tok)
        self.expect(":")
        src_tok = self.name("the source object")
        self.expect("->")
        tgt_tok = self.name("the target object")
        src = self.ws.objects.get(src_tok.text)
        tgt = self.ws.objects.get(tgt_tok.text)
        if src is None:
            self.fail(f"unknown object {src_tok.text!r}", src_tok)
        if tgt is None:
            self.fail(f"unknown object {tgt_tok.text!r}", tgt_tok)
        if isinstance(src, RelEntry) != isinstance(tgt, RelEntry):
            self.fail("map endpoints mix relational and category objects", src_tok)
        self.expect("{")
        decl_pairs = []
        if isinstance(src, RelEntry):
            assign = [None] * src.obj.size
            while self.peek().kind == "name":
                a = self.name()
                self.expect("->")
                b = self.name()
                ia = self._elem(list(src.elems), a)
                ib = self._elem(list(tgt.elems), b)
                assign[ia] = ib
                decl_pairs.append((a.text, b.text))
            missing = [src.elems[i] for i, v in enumerate(assign) if v is None]
            if missing:
                self.fail(f"map leaves {missing[0]!r} unassigned", name_tok)
            self.expect("}")
            try:
                m = finrel.make_map(src.obj, tgt.obj, assign)
            except HomliftError as e:
                raise ParseError(str(e), name_tok.line, name_tok.col) from e
        else:
            obj_map = [None] * src.obj.n_obj
            arr_map = [None] * src.obj.n_arr
            while self.peek().kind == "name":
                a = self.name()
                self.expect("->")
                b = self.next()
                decl_pairs.append((a.text, b.text if b.text != "id" else "id"))
                if a.text in src.objects:
                    if b.kind != "name" or b.text not in tgt.objects:
                        self.fail(f"unknown target object {b.text!r}", b)
                    obj_map[src.objects.index(a.text)] = tgt.objects.index(b.text)
                elif a.text in src.arrows:
                    ia = src.arrow_index(a.text)
                    if b.text == "id":
                        self.expect("(")
                        o = self.name()
                        self.expect(")")
                        if o.text not in tgt.objects:
                            self.fail(f"unknown object {o.text!r}", o)
                        arr_map[ia] = tgt.obj.ident[tgt.objects.index(o.text)]
                        decl_pairs[-1] = (a.text, f"id({o.text})")
                    else:
                        ib = tgt.arrow_index(b.text)
                        if ib is None:
                            self.fail(f"unknown arrow {b.text!r}", b)
                        arr_map[ia] = ib
                else:
                    self.fail(f"unknown source name {a.text!r}", a)
            self.expect("}")
            for x, v in enumerate(obj_map):
                if v is None:
                    self.fail(f"functor leaves object {src.objects[x]!r} unassigned", name_tok)
            for x in range(src.obj.n_obj):
                arr_map[src.obj.ident[x]] = tgt.obj.ident[obj_map[x]]
            for a, v in enumerate(arr_map):
                if v is None:
                    self.fail(
                        f"functor leaves arrow {src.arrows[a - src.obj.n_obj]!r} unassigned",
                        name_tok,
                    )
            try:
                m = fincat.CatFunctor(src.obj, tgt.obj, tuple(obj_map), tuple(arr_map))
            except HomliftError as e:
                raise ParseError(str(e), name_tok.line, name_tok.col) from e
        self.ws.maps[name_tok.text] = m
        self.ws.map_decl[name_tok.text] = (src_tok.text, tgt_tok.text, tuple(decl_pairs))

    def cylinder_decl(self):
        self.next()
        name_tok = self.name("a cylinder name")
        self.fresh(name_tok)
        self.expect(":")
        flavor = self.name("a flavor").text
        self.expect("{")
        self._section("interval")
        v_tok = self.name("the interval object")
        entry = self.ws.objects.get(v_tok.text)
        if entry is None:
            self.fail(f"unknown object {v_tok.text!r}", v_tok)
        self.expect(";")
        self._section("e0")
        e0 = self.name()
        self.expect(";")
        self._section("e1")
        e1 = self.name()
        if self.peek().text == ";":
            self.next()
        self.expect("}")
        try:
            if flavor == "cat":
                if not isinstance(entry, CatEntry):
                    self.fail("cat cylinder needs a category interval", v_tok)
                c = homotopy.cat_interval_cylinder(
                    entry.obj, self._cat_obj(entry, e0), self._cat_obj(entry, e1)
                )
            else:
                if not isinstance(entry, RelEntry):
                    self.fail("relational cylinder needs a relational interval", v_tok)
                if entry.obj.flavor != flavor:
                    self.fail(f"interval flavor is {entry.obj.flavor}, not {flavor}", v_tok)
                cof = "all" if flavor == "ord" else "mono"
                c = homotopy.rel_interval_cylinder(
                    entry.obj,
                    self._elem(list(entry.elems), e0),
                    self._elem(list(entry.elems), e1),
                    cof=cof,
                )
        except HomliftError as e:
            raise ParseError(str(e), name_tok.line, name_tok.col) from e
        self.ws.cylinders[name_tok.text] = c
        self.ws.cyl_decl[name_tok.text] = (flavor, v_tok.text, e0.text, e1.text)

    def _cat_obj(self, entry: CatEntry, tok: Token) -> int:
        idx = entry.obj_index(tok.text)
        if idx is None:
            self.fail(f"unknown object {tok.text!r}", tok)
        return idx

    def genset_decl(self):
        self.next()
        name_tok = self.name("a generator-set name")
        self.fresh(name_tok)
        self.expect("{")
        self._section("maps")
        members = []
        while self.peek().kind == "name":
            tok = self.name()
            if tok.text not in self.ws.maps:
                self.fail(f"unknown map {tok.text!r}", tok)
            members.append(tok.text)
        if self.peek().text == ";":
            self.next()
        self.expect("}")
        self.ws.gensets[name_tok.text] = tuple(members)


def parse_document(text: str) -> Workspace:
    return _Parser(text).parse()


def emit(ws: Workspace) -> str:
    """Canonical text for a workspace; reparsing gives an equal workspace."""
    out = []
    for name, entry in ws.objects.items():
        if isinstance(entry, RelEntry):
            obj = entry.obj
            flavor = obj.flavor
            kw = "elements" if flavor in ("preord", "ord", "set") else "vertices"
            head = f"{flavor} {name} {{ {kw}: {' '.join(entry.elems)}"
            body = ""
            if flavor in ("graph", "eqrel"):
                edges = [
                    f"{entry.elems[i]}-{entry.elems[j]}"
                    for i, j in obj.pairs()
                    if i < j
                ]
                if edges:
                    body = f"; edges: {' '.join(edges)}"
            elif flavor in ("preord", "ord"):
                les = [
                    f"{entry.elems[i]}<={entry.elems[j]}"
                    for i, j in obj.pairs()
                    if i != j
                ]
                if les:
                    body = f"; le: {' '.join(les)}"
            out.append(head + body + " }")
        else:
            obj = entry.obj
            head = f"cat {name} {{ objects: {' '.join(entry.objects)}"
            parts = [head]
            if entry.arrows:
                decls = []
                for k, a in enumerate(entry.arrows):
                    idx = obj.n_obj + k
                    decls.append(
                        f"{a}: {entry.objects[obj.arr_src[idx]]}->{entry.objects[obj.arr_tgt[idx]]}"
                    )
                parts.append(f"; arrows: {' '.join(decls)}")
                comps = []

                def ref(i):
                    if obj.is_identity_arrow(i):
                        return f"id({entry.objects[obj.arr_src[i]]})"
                    return entry.arrows[i - obj.n_obj]

                for a in range(obj.n_obj, obj.n_arr):
                    for b in range(obj.n_obj, obj.n_arr):
                        if obj.arr_tgt[a] == obj.arr_src[b]:
                            comps.append(f"{ref(a)}.{ref(b)} = {ref(obj.comp[a][b])}")
                if comps:
                    parts.append(f"; compose: {' '.join(comps)}")
            out.append("".join(parts) + " }")
    for name, (src, tgt, pairs) in ws.map_decl.items():
        entries = " ".join(f"{a}->{b}" for a, b in pairs)
        out.append(f"map {name} : {src} -> {tgt} {{ {entries} }}")
    for name, (flavor, v, e0, e1) in ws.cyl_decl.items():
        out.append(f"cylinder {name} : {flavor} {{ interval: {v}; e0: {e0}; e1: {e1} }}")
    for name, members in ws.gensets.items():
        out.append(f"genset {name} {{ maps: {' '.join(members)} }}")
    return "\n".join(out) + "\n"
