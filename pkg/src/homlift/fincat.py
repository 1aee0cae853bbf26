"""Finite categories, functors and natural transformations.

A category is stored concretely: numbered objects, numbered arrows with
source/target, an identity arrow per object and a total composition table
over composable pairs.  Composition is written in application order:
``comp(a, b)`` is "a then b".

Pushouts of categories are computed on presentations by a bounded
congruence closure over path words; the bound makes a non-stabilizing
(potentially infinite) pushout an explicit error, never a truncation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import (
    EnumerationCapExceeded,
    PushoutUnstable,
    ValidationError,
)


@dataclass(frozen=True)
class FinCategory:
    n_obj: int
    arr_src: tuple[int, ...]
    arr_tgt: tuple[int, ...]
    ident: tuple[int, ...]  # arrow index of each identity
    comp: tuple[tuple[int, ...], ...]  # comp[a][b] = a-then-b, -1 if not composable

    def __post_init__(self):
        m = len(self.arr_src)
        if len(self.arr_tgt) != m or len(self.comp) != m:
            raise ValidationError("arrow tables have inconsistent lengths")
        if len(self.ident) != self.n_obj:
            raise ValidationError("one identity arrow per object is required")
        for x, a in enumerate(self.ident):
            if self.arr_src[a] != x or self.arr_tgt[a] != x:
                raise ValidationError(f"identity of object {x} has wrong endpoints")
        for a in range(m):
            row = self.comp[a]
            if len(row) != m:
                raise ValidationError("composition table is not square")
            for b in range(m):
                c = row[b]
                composable = self.arr_tgt[a] == self.arr_src[b]
                if composable:
                    if c < 0 or self.arr_src[c] != self.arr_src[a] or self.arr_tgt[c] != self.arr_tgt[b]:
                        raise ValidationError(f"composite of {a} and {b} is missing or misplaced")
                elif c != -1:
                    raise ValidationError(f"composition defined on non-composable pair ({a},{b})")
        for a in range(m):
            if self.comp[self.ident[self.arr_src[a]]][a] != a:
                raise ValidationError(f"left identity law fails at arrow {a}")
            if self.comp[a][self.ident[self.arr_tgt[a]]] != a:
                raise ValidationError(f"right identity law fails at arrow {a}")
        for a in range(m):
            for b in range(m):
                if self.arr_tgt[a] != self.arr_src[b]:
                    continue
                ab = self.comp[a][b]
                for c in range(m):
                    if self.arr_tgt[b] != self.arr_src[c]:
                        continue
                    if self.comp[ab][c] != self.comp[a][self.comp[b][c]]:
                        raise ValidationError(
                            f"composition is not associative at ({a},{b},{c})"
                        )

    @property
    def n_arr(self) -> int:
        return len(self.arr_src)

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return _hom_table(self)[x][y]

    def compose(self, a: int, b: int) -> int:
        c = self.comp[a][b]
        if c < 0:
            raise ValidationError("arrows are not composable")
        return c

    def is_identity_arrow(self, a: int) -> bool:
        return self.ident[self.arr_src[a]] == a

    def is_invertible(self, a: int) -> bool:
        return _invertible_table(self)[a]

    def inverse_arrow(self, a: int) -> int:
        x, y = self.arr_src[a], self.arr_tgt[a]
        for b in self.hom(y, x):
            if self.comp[a][b] == self.ident[x] and self.comp[b][a] == self.ident[y]:
                return b
        raise ValidationError("arrow is not invertible")

    def iso_related(self, x: int, y: int) -> bool:
        return any(self.is_invertible(a) for a in self.hom(x, y))

    def __repr__(self):
        return f"FinCategory({self.n_obj} obj, {self.n_arr} arr)"


@lru_cache(maxsize=4096)
def _hom_table(c: FinCategory):
    table = [[[] for _ in range(c.n_obj)] for _ in range(c.n_obj)]
    for a in range(c.n_arr):
        table[c.arr_src[a]][c.arr_tgt[a]].append(a)
    return tuple(tuple(tuple(cell) for cell in row) for row in table)


@lru_cache(maxsize=4096)
def _invertible_table(c: FinCategory):
    out = []
    for a in range(c.n_arr):
        x, y = c.arr_src[a], c.arr_tgt[a]
        out.append(
            any(
                c.comp[a][b] == c.ident[x] and c.comp[b][a] == c.ident[y]
                for b in c.hom(y, x)
            )
        )
    return tuple(out)


def make_category(n_obj, arrows, compose_entries, identities) -> FinCategory:
    """Assemble and validate a category from explicit data.

    arrows: list of (src, tgt) for every arrow including identities.
    compose_entries: dict (a, b) -> c for every composable non-trivial pair;
    pairs involving identities may be omitted.
    """
    m = len(arrows)
    src = tuple(a for a, _ in arrows)
    tgt = tuple(b for _, b in arrows)
    comp = [[-1] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if tgt[a] != src[b]:
                continue
            if a == identities[src[a]]:
                comp[a][b] = b
            elif b == identities[tgt[b]]:
                comp[a][b] = a
            else:
                c = compose_entries.get((a, b))
                if c is None:
                    raise ValidationError(f"missing composite for pair ({a},{b})")
                comp[a][b] = c
    return FinCategory(n_obj, src, tgt, tuple(identities), tuple(tuple(r) for r in comp))


# ---------------------------------------------------------------------------
# standard categories


def discrete_cat(n: int) -> FinCategory:
    arrows = [(i, i) for i in range(n)]
    return make_category(n, arrows, {}, list(range(n)))


def zero_cat() -> FinCategory:
    return discrete_cat(0)


def one_cat() -> FinCategory:
    return discrete_cat(1)


def chain2() -> FinCategory:
    """The linear order with two elements: objects 0,1 and one arrow 0->1."""
    arrows = [(0, 0), (1, 1), (0, 1)]
    return make_category(2, arrows, {}, [0, 1])


def parallel_pair() -> FinCategory:
    """Two objects with two parallel non-trivial arrows."""
    arrows = [(0, 0), (1, 1), (0, 1), (0, 1)]
    return make_category(2, arrows, {}, [0, 1])


def indiscrete_cat(n: int) -> FinCategory:
    """Exactly one arrow between any ordered pair of objects."""
    arrows = [(i, j) for i in range(n) for j in range(n)]
    compose_entries = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                compose_entries[(i * n + j, j * n + k)] = i * n + k
    return make_category(n, arrows, compose_entries, [i * n + i for i in range(n)])


def standard_cats() -> dict:
    return {
        "zero": zero_cat(),
        "one": one_cat(),
        "two_discrete": discrete_cat(2),
        "chain2": chain2(),
        "parallel_pair": parallel_pair(),
        "indiscrete2": indiscrete_cat(2),
    }


# ---------------------------------------------------------------------------
# functors


@dataclass(frozen=True)
class CatFunctor:
    src: FinCategory
    tgt: FinCategory
    obj_map: tuple[int, ...]
    arr_map: tuple[int, ...]

    def __post_init__(self):
        if len(self.obj_map) != self.src.n_obj or len(self.arr_map) != self.src.n_arr:
            raise ValidationError("functor tables have wrong lengths")
        for x in range(self.src.n_obj):
            if not (0 <= self.obj_map[x] < self.tgt.n_obj):
                raise ValidationError("object map leaves the codomain")
        for a in range(self.src.n_arr):
            fa = self.arr_map[a]
            if not (0 <= fa < self.tgt.n_arr):
                raise ValidationError("arrow map leaves the codomain")
            if self.tgt.arr_src[fa] != self.obj_map[self.src.arr_src[a]]:
                raise ValidationError(f"functor breaks sources at arrow {a}")
            if self.tgt.arr_tgt[fa] != self.obj_map[self.src.arr_tgt[a]]:
                raise ValidationError(f"functor breaks targets at arrow {a}")
        for x in range(self.src.n_obj):
            if self.arr_map[self.src.ident[x]] != self.tgt.ident[self.obj_map[x]]:
                raise ValidationError(f"functor breaks the identity of object {x}")
        for a in range(self.src.n_arr):
            for b in range(self.src.n_arr):
                if self.src.arr_tgt[a] != self.src.arr_src[b]:
                    continue
                lhs = self.arr_map[self.src.comp[a][b]]
                rhs = self.tgt.comp[self.arr_map[a]][self.arr_map[b]]
                if lhs != rhs:
                    raise ValidationError(f"functor breaks composition at ({a},{b})")

    def on_obj(self, x: int) -> int:
        return self.obj_map[x]

    def on_arr(self, a: int) -> int:
        return self.arr_map[a]

    def __repr__(self):
        return f"CatFunctor({self.src!r}->{self.tgt!r})"


def cat_identity(c: FinCategory) -> CatFunctor:
    return CatFunctor(c, c, tuple(range(c.n_obj)), tuple(range(c.n_arr)))


def cat_compose(f: CatFunctor, g: CatFunctor) -> CatFunctor:
    """f then g."""
    if f.tgt != g.src:
        raise ValidationError("functors are not composable")
    return CatFunctor(
        f.src,
        g.tgt,
        tuple(g.obj_map[x] for x in f.obj_map),
        tuple(g.arr_map[a] for a in f.arr_map),
    )


def cat_is_iso(f: CatFunctor) -> bool:
    if f.src.n_obj != f.tgt.n_obj or f.src.n_arr != f.tgt.n_arr:
        return False
    if len(set(f.obj_map)) != f.src.n_obj or len(set(f.arr_map)) != f.src.n_arr:
        return False
    obj_inv = [0] * f.tgt.n_obj
    for x, v in enumerate(f.obj_map):
        obj_inv[v] = x
    arr_inv = [0] * f.tgt.n_arr
    for a, v in enumerate(f.arr_map):
        arr_inv[v] = a
    try:
        CatFunctor(f.tgt, f.src, tuple(obj_inv), tuple(arr_inv))
    except ValidationError:
        return False
    return True


def cat_inverse(f: CatFunctor) -> CatFunctor:
    if not cat_is_iso(f):
        raise ValidationError("functor is not invertible")
    obj_inv = [0] * f.tgt.n_obj
    for x, v in enumerate(f.obj_map):
        obj_inv[v] = x
    arr_inv = [0] * f.tgt.n_arr
    for a, v in enumerate(f.arr_map):
        arr_inv[v] = a
    return CatFunctor(f.tgt, f.src, tuple(obj_inv), tuple(arr_inv))


def ob(c: FinCategory) -> int:
    """The underlying object set, reported by its size."""
    return c.n_obj


def terminal_functor(c: FinCategory) -> CatFunctor:
    one = one_cat()
    return CatFunctor(c, one, (0,) * c.n_obj, (0,) * c.n_arr)


def initial_functor(c: FinCategory) -> CatFunctor:
    return CatFunctor(zero_cat(), c, (), ())


# ---------------------------------------------------------------------------
# products and coproducts


@dataclass(frozen=True)
class CatProductResult:
    obj: FinCategory
    proj1: CatFunctor
    proj2: CatFunctor

    def pair(self, f: CatFunctor, g: CatFunctor) -> CatFunctor:
        if f.src != g.src:
            raise ValidationError("pairing needs a common domain")
        d = self.proj2.src  # the product category
        n2o = self.proj2.tgt.n_obj
        n2a = self.proj2.tgt.n_arr
        obj_map = tuple(
            f.obj_map[x] * n2o + g.obj_map[x] for x in range(f.src.n_obj)
        )
        arr_map = tuple(
            f.arr_map[a] * n2a + g.arr_map[a] for a in range(f.src.n_arr)
        )
        return CatFunctor(f.src, d, obj_map, arr_map)


@lru_cache(maxsize=20000)
def product_cat(c: FinCategory, d: FinCategory) -> CatProductResult:
    no, na = d.n_obj, d.n_arr
    arrows = [
        (c.arr_src[a] * no + d.arr_src[b], c.arr_tgt[a] * no + d.arr_tgt[b])
        for a in range(c.n_arr)
        for b in range(d.n_arr)
    ]
    identities = [c.ident[x] * na + d.ident[y] for x in range(c.n_obj) for y in range(d.n_obj)]
    compose_entries = {}
    for a1 in range(c.n_arr):
        for b1 in range(d.n_arr):
            for a2 in range(c.n_arr):
                if c.arr_tgt[a1] != c.arr_src[a2]:
                    continue
                for b2 in range(d.n_arr):
                    if d.arr_tgt[b1] != d.arr_src[b2]:
                        continue
                    compose_entries[(a1 * na + b1, a2 * na + b2)] = (
                        c.comp[a1][a2] * na + d.comp[b1][b2]
                    )
    obj = make_category(c.n_obj * no, arrows, compose_entries, identities)
    p1 = CatFunctor(
        obj,
        c,
        tuple(k // no for k in range(obj.n_obj)),
        tuple(k // na for k in range(obj.n_arr)),
    )
    p2 = CatFunctor(
        obj,
        d,
        tuple(k % no for k in range(obj.n_obj)),
        tuple(k % na for k in range(obj.n_arr)),
    )
    return CatProductResult(obj, p1, p2)


def product_functor(f: CatFunctor, g: CatFunctor) -> CatFunctor:
    ps = product_cat(f.src, g.src)
    pt = product_cat(f.tgt, g.tgt)
    no_s, na_s = g.src.n_obj, g.src.n_arr
    no_t, na_t = g.tgt.n_obj, g.tgt.n_arr
    obj_map = tuple(
        f.obj_map[k // no_s] * no_t + g.obj_map[k % no_s] for k in range(ps.obj.n_obj)
    )
    arr_map = tuple(
        f.arr_map[k // na_s] * na_t + g.arr_map[k % na_s] for k in range(ps.obj.n_arr)
    )
    return CatFunctor(ps.obj, pt.obj, obj_map, arr_map)


@dataclass(frozen=True)
class CatCoproductResult:
    obj: FinCategory
    inj1: CatFunctor
    inj2: CatFunctor

    def copair(self, f: CatFunctor, g: CatFunctor) -> CatFunctor:
        if f.tgt != g.tgt:
            raise ValidationError("copairing needs a common codomain")
        return CatFunctor(
            self.obj,
            f.tgt,
            tuple(f.obj_map) + tuple(g.obj_map),
            tuple(f.arr_map) + tuple(g.arr_map),
        )


@lru_cache(maxsize=20000)
def coproduct_cat(c: FinCategory, d: FinCategory) -> CatCoproductResult:
    no, na = c.n_obj, c.n_arr
    arrows = [(c.arr_src[a], c.arr_tgt[a]) for a in range(na)] + [
        (d.arr_src[b] + no, d.arr_tgt[b] + no) for b in range(d.n_arr)
    ]
    identities = list(c.ident) + [i + na for i in d.ident]
    compose_entries = {}
    for a in range(na):
        for b in range(na):
            if c.arr_tgt[a] == c.arr_src[b]:
                compose_entries[(a, b)] = c.comp[a][b]
    for a in range(d.n_arr):
        for b in range(d.n_arr):
            if d.arr_tgt[a] == d.arr_src[b]:
                compose_entries[(a + na, b + na)] = d.comp[a][b] + na
    obj = make_category(no + d.n_obj, arrows, compose_entries, identities)
    i1 = CatFunctor(c, obj, tuple(range(no)), tuple(range(na)))
    i2 = CatFunctor(
        d, obj, tuple(range(no, no + d.n_obj)), tuple(range(na, na + d.n_arr))
    )
    return CatCoproductResult(obj, i1, i2)


def coproduct_functor(f: CatFunctor, g: CatFunctor) -> CatFunctor:
    cs = coproduct_cat(f.src, g.src)
    ct = coproduct_cat(f.tgt, g.tgt)
    obj_map = tuple(f.obj_map) + tuple(v + f.tgt.n_obj for v in g.obj_map)
    arr_map = tuple(f.arr_map) + tuple(v + f.tgt.n_arr for v in g.arr_map)
    return CatFunctor(cs.obj, ct.obj, obj_map, arr_map)


# ---------------------------------------------------------------------------
# enumeration


def search_functors(
    src: FinCategory,
    tgt: FinCategory,
    pins=None,
    fibers=None,
    cap: int = 10**6,
) -> Iterator[CatFunctor]:
    """Functors src -> tgt under pin/fiber constraints, canonical order.

    pins:   (p: P -> src, q: P -> tgt) forces d(p(-)) = q(-).
    fibers: (r: tgt -> T, s: src -> T) forces r(d(-)) = s(-).
    Order: object map lexicographic, then arrow map lexicographic.
    """
    obj_pin: dict[int, int] = {}
    arr_pin: dict[int, int] = {}
    if pins:
        for p, q in pins:
            for x in range(p.src.n_obj):
                want = q.obj_map[x]
                if obj_pin.setdefault(p.obj_map[x], want) != want:
                    return
            for a in range(p.src.n_arr):
                want = q.arr_map[a]
                if arr_pin.setdefault(p.arr_map[a], want) != want:
                    return
    fiber_list = list(fibers) if fibers else []

    n = src.n_obj
    m = src.n_arr
    obj_assign = [0] * n
    arr_assign = [-1] * m
    nontrivial = [a for a in range(m) if not src.is_identity_arrow(a)]
    counter = itertools.count()

    def obj_candidates(x: int) -> list[int]:
        if x in obj_pin:
            cands = [obj_pin[x]]
        else:
            cands = list(range(tgt.n_obj))
        out = []
        for v in cands:
            ok = True
            for r, s in fiber_list:
                if r.obj_map[v] != s.obj_map[x]:
                    ok = False
                    break
            if ok:
                out.append(v)
        return out

    def arr_candidates(a: int) -> list[int]:
        sx = obj_assign[src.arr_src[a]]
        tx = obj_assign[src.arr_tgt[a]]
        if a in arr_pin:
            base = [arr_pin[a]] if arr_pin[a] in tgt.hom(sx, tx) else []
        else:
            base = list(tgt.hom(sx, tx))
        out = []
        for v in base:
            ok = True
            for r, s in fiber_list:
                if r.arr_map[v] != s.arr_map[a]:
                    ok = False
                    break
            if ok:
                out.append(v)
        return out

    triples_of = [[] for _ in range(m)]
    for a1 in range(m):
        for b1 in range(m):
            if src.arr_tgt[a1] != src.arr_src[b1]:
                continue
            c1 = src.comp[a1][b1]
            for member in {a1, b1, c1}:
                triples_of[member].append((a1, b1, c1))

    def check_partial(a: int) -> bool:
        for (x, y, z) in triples_of[a]:
            vx, vy, vz = arr_assign[x], arr_assign[y], arr_assign[z]
            if vx >= 0 and vy >= 0 and vz >= 0 and tgt.comp[vx][vy] != vz:
                return False
        return True

    def assign_arrows(k: int) -> Iterator[CatFunctor]:
        if next(counter) > cap:
            raise EnumerationCapExceeded("functor_cap", cap, "functor enumeration")
        if k == len(nontrivial):
            yield CatFunctor(src, tgt, tuple(obj_assign), tuple(arr_assign))
            return
        a = nontrivial[k]
        for v in arr_candidates(a):
            arr_assign[a] = v
            if check_partial(a):
                yield from assign_arrows(k + 1)
            arr_assign[a] = -1

    def assign_objects(x: int) -> Iterator[CatFunctor]:
        if x == n:
            for i in range(n):
                arr_assign[src.ident[i]] = tgt.ident[obj_assign[i]]
            ok = True
            for a in range(m):
                if a in arr_pin and src.is_identity_arrow(a):
                    if arr_assign[a] != arr_pin[a]:
                        ok = False
                        break
            if ok:
                yield from assign_arrows(0)
            for a in range(m):
                if src.is_identity_arrow(a):
                    arr_assign[a] = -1
            return
        for v in obj_candidates(x):
            obj_assign[x] = v
            yield from assign_objects(x + 1)

    yield from assign_objects(0)


@lru_cache(maxsize=20000)
def enumerate_functors(src: FinCategory, tgt: FinCategory, cap: int = 10**6):
    return tuple(search_functors(src, tgt, cap=cap))


@dataclass(frozen=True)
class NatTransformation:
    src: CatFunctor
    tgt: CatFunctor
    components: tuple[int, ...]

    def __post_init__(self):
        f, g = self.src, self.tgt
        if f.src != g.src or f.tgt != g.tgt:
            raise ValidationError("transformation endpoints are not parallel")
        d = f.tgt
        for x in range(f.src.n_obj):
            c = self.components[x]
            if d.arr_src[c] != f.obj_map[x] or d.arr_tgt[c] != g.obj_map[x]:
                raise ValidationError(f"component at {x} has wrong endpoints")
        for a in range(f.src.n_arr):
            x, y = f.src.arr_src[a], f.src.arr_tgt[a]
            if d.comp[f.arr_map[a]][self.components[y]] != d.comp[self.components[x]][g.arr_map[a]]:
                raise ValidationError(f"naturality fails at arrow {a}")

    @property
    def is_iso(self) -> bool:
        return all(self.src.tgt.is_invertible(c) for c in self.components)


def enumerate_nat_transformations(f: CatFunctor, g: CatFunctor, cap: int = 10**6):
    """All natural transformations f -> g in component-lexicographic order."""
    d = f.tgt
    n = f.src.n_obj
    out = []
    counter = 0
    comps = [0] * n

    def backtrack(x: int):
        nonlocal counter
        counter += 1
        if counter > cap:
            raise EnumerationCapExceeded("nat_cap", cap, "transformation enumeration")
        if x == n:
            out.append(NatTransformation(f, g, tuple(comps)))
            return
        for c in d.hom(f.obj_map[x], g.obj_map[x]):
            comps[x] = c
            ok = True
            for a in range(f.src.n_arr):
                sx, tx = f.src.arr_src[a], f.src.arr_tgt[a]
                if sx > x or tx > x:
                    continue
                if d.comp[f.arr_map[a]][comps[tx]] != d.comp[comps[sx]][g.arr_map[a]]:
                    ok = False
                    break
            if ok:
                backtrack(x + 1)

    backtrack(0)
    return tuple(out)


def naturally_isomorphic(f: CatFunctor, g: CatFunctor) -> bool:
    return any(t.is_iso for t in enumerate_nat_transformations(f, g))


# ---------------------------------------------------------------------------
# equivalences


def is_full_functor(f: CatFunctor) -> bool:
    for x in range(f.src.n_obj):
        for y in range(f.src.n_obj):
            image = {f.arr_map[a] for a in f.src.hom(x, y)}
            if not set(f.tgt.hom(f.obj_map[x], f.obj_map[y])) <= image:
                return False
    return True


def is_faithful_functor(f: CatFunctor) -> bool:
    for x in range(f.src.n_obj):
        for y in range(f.src.n_obj):
            arrows = f.src.hom(x, y)
            if len({f.arr_map[a] for a in arrows}) != len(arrows):
                return False
    return True


def is_essentially_surjective(f: CatFunctor) -> bool:
    return all(
        any(f.tgt.iso_related(f.obj_map[x], d) for x in range(f.src.n_obj))
        for d in range(f.tgt.n_obj)
    )


def is_equivalence(f: CatFunctor) -> bool:
    return is_full_functor(f) and is_faithful_functor(f) and is_essentially_surjective(f)


# ---------------------------------------------------------------------------
# isomorphism search between categories


def _cat_iso_iter(c: FinCategory, d: FinCategory) -> Iterator[CatFunctor]:
    if c.n_obj != d.n_obj or c.n_arr != d.n_arr:
        return
    for f in search_functors(c, d):
        if cat_is_iso(f):
            yield f


def cat_arrow_iso(f: CatFunctor, g: CatFunctor) -> Optional[tuple[CatFunctor, CatFunctor]]:
    """Category isos (phi, psi) with f;psi = phi;g, or None."""
    for phi in _cat_iso_iter(f.src, g.src):
        want = cat_compose(phi, g)
        for psi in search_functors(
            f.tgt, g.tgt, pins=[(f, want)]
        ):
            if cat_is_iso(psi):
                return phi, psi
    return None


# ---------------------------------------------------------------------------
# pushouts via bounded congruence closure on path words


@dataclass(frozen=True)
class CatPushoutResult:
    obj: FinCategory
    inj_left: CatFunctor
    inj_right: CatFunctor
    _letters: tuple  # (side, arrow, src_cls, tgt_cls) per generator
    _obj_cls: tuple[tuple[int, ...], tuple[int, ...]]  # object class per side
    _arrow_words: tuple[tuple[int, ...], ...]  # representative word per arrow class

    def mediate(self, t_left: CatFunctor, t_right: CatFunctor) -> CatFunctor:
        if t_left.tgt != t_right.tgt:
            raise ValidationError("cocone legs need a common apex")
        t = t_left.tgt
        obj_map = [-1] * self.obj.n_obj
        for b, c in enumerate(self.inj_left.obj_map):
            if obj_map[c] not in (-1, t_left.obj_map[b]):
                raise ValidationError("cocone does not commute with the gluing")
            obj_map[c] = t_left.obj_map[b]
        for b, c in enumerate(self.inj_right.obj_map):
            if obj_map[c] not in (-1, t_right.obj_map[b]):
                raise ValidationError("cocone does not commute with the gluing")
            obj_map[c] = t_right.obj_map[b]
        arr_map = []
        for k, word in enumerate(self._arrow_words):
            x = obj_map[self.obj.arr_src[k]]
            acc = t.ident[x]
            for letter in word:
                side, arrow, _, _ = self._letters[letter]
                img = t_left.arr_map[arrow] if side == 0 else t_right.arr_map[arrow]
                acc = t.comp[acc][img]
            arr_map.append(acc)
        return CatFunctor(self.obj, t, tuple(obj_map), tuple(arr_map))


def cat_pushout(
    f: CatFunctor,
    g: CatFunctor,
    max_word_len: int = 8,
    max_classes: int = 512,
    max_words: int = 400000,
) -> CatPushoutResult:
    """Pushout of B <- A -> C in the category of finite categories.

    Works on the presentation whose generators are the non-identity arrows
    of B and C, with relations from both composition tables plus the
    identifications f(a) = g(a).  Path words are closed under the induced
    congruence while every word length stays below a bound L.  The result
    is certified complete when every class has a representative of length
    at most m with max(2m, m+2) <= L; otherwise L is increased, and a
    ``PushoutUnstable`` error is raised when the configured maximum is hit.
    """
    if f.src != g.src:
        raise ValidationError("pushout legs need a common domain")
    b, c = f.tgt, g.tgt

    # object classes
    uf = _SimpleUF(b.n_obj + c.n_obj)
    for x in range(f.src.n_obj):
        uf.union(f.obj_map[x], b.n_obj + g.obj_map[x])
    reps = sorted({uf.find(k) for k in range(b.n_obj + c.n_obj)})
    rep_index = {r: i for i, r in enumerate(reps)}
    cls_b = tuple(rep_index[uf.find(x)] for x in range(b.n_obj))
    cls_c = tuple(rep_index[uf.find(b.n_obj + x)] for x in range(c.n_obj))
    n_cls = len(reps)

    letters = []
    letter_of = {}
    for a in range(b.n_arr):
        if not b.is_identity_arrow(a):
            letter_of[(0, a)] = len(letters)
            letters.append((0, a, cls_b[b.arr_src[a]], cls_b[b.arr_tgt[a]]))
    for a in range(c.n_arr):
        if not c.is_identity_arrow(a):
            letter_of[(1, a)] = len(letters)
            letters.append((1, a, cls_c[c.arr_src[a]], cls_c[c.arr_tgt[a]]))

    def word_of(side: int, cat: FinCategory, cls: tuple[int, ...], a: int):
        if cat.is_identity_arrow(a):
            return (cls[cat.arr_src[a]], cls[cat.arr_src[a]], ())
        le = letter_of[(side, a)]
        return (letters[le][2], letters[le][3], (le,))

    seeds = []
    for side, cat, cls in ((0, b, cls_b), (1, c, cls_c)):
        for a1 in range(cat.n_arr):
            if cat.is_identity_arrow(a1):
                continue
            for a2 in range(cat.n_arr):
                if cat.is_identity_arrow(a2) or cat.arr_tgt[a1] != cat.arr_src[a2]:
                    continue
                w12 = (
                    cls[cat.arr_src[a1]],
                    cls[cat.arr_tgt[a2]],
                    (letter_of[(side, a1)], letter_of[(side, a2)]),
                )
                seeds.append((w12, word_of(side, cat, cls, cat.comp[a1][a2])))
    for a in range(f.src.n_arr):
        seeds.append((word_of(0, b, cls_b, f.arr_map[a]), word_of(1, c, cls_c, g.arr_map[a])))

    for bound in range(4, max_word_len + 1, 2):
        result = _congruence_quotient(
            n_cls, letters, seeds, bound, max_classes, max_words
        )
        if result is not None:
            classes, class_of = result
            m_star = max((len(w[2]) for w in classes), default=0)
            if max(2 * m_star, m_star + 2) <= bound:
                return _assemble_pushout(
                    f, g, n_cls, cls_b, cls_c, letters, classes, class_of, bound
                )
    raise PushoutUnstable(
        "max_word_len",
        max_word_len,
        "category pushout did not stabilize; it may be infinite",
    )


class _SimpleUF:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _congruence_quotient(n_cls, letters, seeds, bound, max_classes, max_words):
    """Words up to the length bound modulo the generated congruence.

    Returns (classes, class_of) with classes listed by minimal
    representative, or None when the word count blows past max_words.
    """
    words = []
    index = {}

    def add(w):
        if w not in index:
            index[w] = len(words)
            words.append(w)
        return index[w]

    for o in range(n_cls):
        add((o, o, ()))
    frontier = list(words)
    for _ in range(bound):
        nxt = []
        for (s, t, ls) in frontier:
            for le, (_, _, lsrc, ltgt) in enumerate(letters):
                if lsrc == t:
                    w = (s, ltgt, ls + (le,))
                    if w not in index:
                        add(w)
                        nxt.append(w)
        frontier = nxt
        if len(words) > max_words:
            return None

    uf = _SimpleUF(len(words))
    for wa, wb in seeds:
        if wa in index and wb in index:
            uf.union(index[wa], index[wb])

    changed = True
    while changed:
        changed = False
        table = {}
        for i, (s, t, ls) in enumerate(words):
            if not ls:
                continue
            head, rest = ls[0], ls[1:]
            key = (head, uf.find(index[(letters[head][3], t, rest)]))
            j = table.get(key)
            if j is None:
                table[key] = i
            elif uf.union(i, j):
                changed = True
        table = {}
        for i, (s, t, ls) in enumerate(words):
            if not ls:
                continue
            init, last = ls[:-1], ls[-1]
            key = (uf.find(index[(s, letters[last][2], init)]), last)
            j = table.get(key)
            if j is None:
                table[key] = i
            elif uf.union(i, j):
                changed = True

    rep_words = {}
    for i, w in enumerate(words):
        r = uf.find(i)
        cur = rep_words.get(r)
        if cur is None or (len(w[2]), w[2]) < (len(cur[2]), cur[2]):
            rep_words[r] = w
    if len(rep_words) > max_classes:
        return None
    classes = sorted(rep_words.values(), key=lambda w: (w[0], w[1], len(w[2]), w[2]))
    class_index = {}
    for k, w in enumerate(classes):
        class_index[w] = k
    class_of = {}
    for i, w in enumerate(words):
        class_of[w] = class_index[rep_words[uf.find(i)]]
    return classes, class_of


def _assemble_pushout(f, g, n_cls, cls_b, cls_c, letters, classes, class_of, bound):
    b, c = f.tgt, g.tgt
    n_arr = len(classes)
    arr_src = tuple(w[0] for w in classes)
    arr_tgt = tuple(w[1] for w in classes)
    ident = [class_of[(o, o, ())] for o in range(n_cls)]
    comp = [[-1] * n_arr for _ in range(n_arr)]
    for a, wa in enumerate(classes):
        for bb, wb in enumerate(classes):
            if wa[1] != wb[0]:
                continue
            joined = (wa[0], wb[1], wa[2] + wb[2])
            if joined not in class_of:
                raise PushoutUnstable(
                    "max_word_len", bound, "composite left the certified word table"
                )
            comp[a][bb] = class_of[joined]
    q = FinCategory(n_cls, arr_src, arr_tgt, tuple(ident), tuple(tuple(r) for r in comp))

    def leg(side, cat, cls):
        arr_map = []
        for a in range(cat.n_arr):
            if cat.is_identity_arrow(a):
                arr_map.append(q.ident[cls[cat.arr_src[a]]])
            else:
                le = next(
                    i
                    for i, (sd, ar, _, _) in enumerate(letters)
                    if sd == side and ar == a
                )
                w = (letters[le][2], letters[le][3], (le,))
                arr_map.append(class_of[w])
        return CatFunctor(cat, q, tuple(cls), tuple(arr_map))

    inj_b = leg(0, b, cls_b)
    inj_c = leg(1, c, cls_c)
    return CatPushoutResult(
        q, inj_b, inj_c, tuple(letters), (cls_b, cls_c), tuple(w[2] for w in classes)
    )
