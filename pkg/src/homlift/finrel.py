"""Finite relational categories.

Objects are finite carriers 0..size-1 with a binary relation stored as a
dense boolean matrix (one bitmask row per element).  Five flavors share the
representation:

  set     relation is exactly the diagonal
  graph   reflexive and symmetric
  preord  reflexive and transitive
  ord     reflexive, transitive and antisymmetric
  eqrel   reflexive, symmetric and transitive

Maps are relation-preserving functions.  All (co)limits used elsewhere in
the package are built here: products, coproducts, exponentials, pushouts,
pullbacks, path components and the reflections between flavors.  Every
value is immutable; every operation is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import (
    FlavorError,
    OrdAntisymmetryError,
    SizeGuardExceeded,
    UnsupportedReflection,
    ValidationError,
)

FLAVORS = ("set", "graph", "preord", "ord", "eqrel")

_SYMMETRIC = {"graph", "eqrel"}
_TRANSITIVE = {"preord", "ord", "eqrel"}


# ---------------------------------------------------------------------------
# objects


@dataclass(frozen=True)
class RelObject:
    flavor: str
    size: int
    rel: tuple[int, ...]  # rel[i] bit j set iff i related to j

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise FlavorError(f"unknown flavor {self.flavor!r}")
        if len(self.rel) != self.size:
            raise ValidationError("relation matrix does not match carrier size")
        full = (1 << self.size) - 1
        for i, row in enumerate(self.rel):
            if row & ~full:
                raise ValidationError("relation mentions elements outside the carrier")
            if not (row >> i) & 1:
                raise FlavorError("relation must be reflexive")
        if self.flavor == "set":
            for i, row in enumerate(self.rel):
                if row != 1 << i:
                    raise FlavorError("set flavor requires the diagonal relation")
        if self.flavor in _SYMMETRIC and not _is_symmetric(self.rel):
            raise FlavorError(f"{self.flavor} relation must be symmetric")
        if self.flavor in _TRANSITIVE and not _is_transitive_rows(self.rel):
            raise FlavorError(f"{self.flavor} relation must be transitive")
        if self.flavor == "ord":
            _check_antisymmetric(self.rel)

    def related(self, i: int, j: int) -> bool:
        return bool((self.rel[i] >> j) & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for i in range(self.size):
            row = self.rel[i]
            while row:
                j = (row & -row).bit_length() - 1
                yield (i, j)
                row &= row - 1

    def edge_count(self) -> int:
        """Number of related unordered pairs of distinct elements."""
        seen = 0
        for i, j in self.pairs():
            if i < j:
                seen += 1
        return seen

    def is_discrete(self) -> bool:
        return all(row == 1 << i for i, row in enumerate(self.rel))

    def is_indiscrete(self) -> bool:
        full = (1 << self.size) - 1
        return all(row == full for row in self.rel)

    def __repr__(self):
        es = ",".join(f"{i}-{j}" for i, j in self.pairs() if i != j)
        return f"RelObject({self.flavor},{self.size},[{es}])"


def _is_symmetric(rows: Sequence[int]) -> bool:
    n = len(rows)
    return all((rows[i] >> j) & 1 == (rows[j] >> i) & 1 for i in range(n) for j in range(i))


def _is_transitive_rows(rows: Sequence[int]) -> bool:
    for i, row in enumerate(rows):
        acc = row
        r = row
        while r:
            k = (r & -r).bit_length() - 1
            acc |= rows[k]
            r &= r - 1
        if acc != row:
            return False
    return True


def _check_antisymmetric(rows: Sequence[int]) -> None:
    n = len(rows)
    for i in range(n):
        for j in range(i):
            if (rows[i] >> j) & 1 and (rows[j] >> i) & 1:
                raise OrdAntisymmetryError(
                    f"elements {j} and {i} are related in both directions"
                )


def _close(flavor: str, size: int, rows: list[int]) -> tuple[int, ...]:
    for i in range(size):
        rows[i] |= 1 << i
    if flavor in _SYMMETRIC:
        for i in range(size):
            r = rows[i]
            while r:
                j = (r & -r).bit_length() - 1
                rows[j] |= 1 << i
                r &= r - 1
    if flavor in _TRANSITIVE:
        changed = True
        while changed:
            changed = False
            for i in range(size):
                acc = rows[i]
                r = rows[i]
                while r:
                    k = (r & -r).bit_length() - 1
                    acc |= rows[k]
                    r &= r - 1
                if acc != rows[i]:
                    rows[i] = acc
                    changed = True
    return tuple(rows)


def make_object(flavor: str, size: int, pairs) -> RelObject:
    """Build an object from generating pairs, closed under the flavor axioms.

    ``ord`` raises when the generated preorder relates two distinct
    elements both ways instead of silently collapsing them.
    """
    if flavor not in FLAVORS:
        raise FlavorError(f"unknown flavor {flavor!r}")
    rows = [0] * size
    for (i, j) in pairs:
        if not (0 <= i < size and 0 <= j < size):
            raise ValidationError(f"pair ({i},{j}) outside carrier 0..{size - 1}")
        if flavor == "set" and i != j:
            raise FlavorError("set flavor admits no pairs off the diagonal")
        rows[i] |= 1 << j
    return RelObject(flavor, size, _close(flavor, size, rows))


@lru_cache(maxsize=4096)
def discrete(flavor: str, size: int) -> RelObject:
    return make_object(flavor, size, ())


def indiscrete(flavor: str, size: int) -> RelObject:
    if flavor == "set" and size > 1:
        raise FlavorError("set flavor admits no pairs off the diagonal")
    if flavor == "ord" and size > 1:
        raise OrdAntisymmetryError("indiscrete relation is not antisymmetric")
    return make_object(flavor, size, [(i, j) for i in range(size) for j in range(size)])


def complete_graph(size: int) -> RelObject:
    return indiscrete("graph", size)


def complete_graph_minus_edge(size: int) -> RelObject:
    """K_n with the edge between the last two vertices removed."""
    if size < 2:
        raise ValidationError("need at least two vertices to remove an edge")
    pairs = [
        (i, j)
        for i in range(size)
        for j in range(size)
        if {i, j} != {size - 2, size - 1}
    ]
    return make_object("graph", size, pairs)


@lru_cache(maxsize=16)
def terminal(flavor: str) -> RelObject:
    return make_object(flavor, 1, ())


def initial(flavor: str) -> RelObject:
    return make_object(flavor, 0, ())


def convert_flavor(x: RelObject, flavor: str) -> RelObject:
    """Retag an object whose relation already satisfies the target axioms."""
    return RelObject(flavor, x.size, x.rel)


def is_transitive(x: RelObject) -> bool:
    return _is_transitive_rows(x.rel)


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True)
class RelMap:
    src: RelObject
    tgt: RelObject
    assign: tuple[int, ...]

    def __post_init__(self):
        if self.src.flavor != self.tgt.flavor:
            raise ValidationError("map endpoints have different flavors")
        if len(self.assign) != self.src.size:
            raise ValidationError("assignment length does not match the domain")
        for v in self.assign:
            if not (0 <= v < self.tgt.size):
                raise ValidationError("assignment leaves the codomain carrier")
        for i in range(self.src.size):
            row = self.src.rel[i]
            while row:
                j = (row & -row).bit_length() - 1
                if not self.tgt.related(self.assign[i], self.assign[j]):
                    raise ValidationError(
                        f"map does not preserve the relation at ({i},{j})"
                    )
                row &= row - 1

    def __call__(self, i: int) -> int:
        return self.assign[i]

    def __repr__(self):
        return f"RelMap({self.src!r}->{self.tgt!r},{list(self.assign)})"


def make_map(src: RelObject, tgt: RelObject, assign) -> RelMap:
    return RelMap(src, tgt, tuple(assign))


def identity(x: RelObject) -> RelMap:
    return RelMap(x, x, tuple(range(x.size)))


def _unchecked_map(src: RelObject, tgt: RelObject, assign: tuple[int, ...]) -> RelMap:
    m = object.__new__(RelMap)
    object.__setattr__(m, "src", src)
    object.__setattr__(m, "tgt", tgt)
    object.__setattr__(m, "assign", assign)
    return m


def compose(f: RelMap, g: RelMap) -> RelMap:
    """f then g.  Composites of validated maps are valid by construction."""
    if f.tgt != g.src:
        raise ValidationError("maps are not composable")
    return _unchecked_map(f.src, g.tgt, tuple(g.assign[v] for v in f.assign))


def is_mono(f: RelMap) -> bool:
    return len(set(f.assign)) == f.src.size


def is_surjective(f: RelMap) -> bool:
    return len(set(f.assign)) == f.tgt.size


def is_epi(f: RelMap) -> bool:
    return is_surjective(f)


def is_full(f: RelMap) -> bool:
    """Relation-reflecting: f(x) ~ f(x') forces x ~ x'."""
    for i in range(f.src.size):
        for j in range(f.src.size):
            if f.tgt.related(f.assign[i], f.assign[j]) and not f.src.related(i, j):
                return False
    return True


def is_iso(f: RelMap) -> bool:
    if f.src.size != f.tgt.size or not is_mono(f):
        return False
    inv = [0] * f.tgt.size
    for i, v in enumerate(f.assign):
        inv[v] = i
    try:
        RelMap(f.tgt, f.src, tuple(inv))
    except ValidationError:
        return False
    return True


def inverse(f: RelMap) -> RelMap:
    if not is_iso(f):
        raise ValidationError("map is not invertible")
    inv = [0] * f.tgt.size
    for i, v in enumerate(f.assign):
        inv[v] = i
    return RelMap(f.tgt, f.src, tuple(inv))


def terminal_map(x: RelObject) -> RelMap:
    return RelMap(x, terminal(x.flavor), (0,) * x.size)


def initial_map(x: RelObject) -> RelMap:
    return RelMap(initial(x.flavor), x, ())


# ---------------------------------------------------------------------------
# map search and enumeration

PinList = Sequence[tuple[RelMap, RelMap]]
FiberList = Sequence[tuple[RelMap, RelMap]]


def _candidate_masks(
    src: RelObject,
    tgt: RelObject,
    pins: Optional[PinList],
    fibers: Optional[FiberList],
) -> Optional[list[int]]:
    """Per-element candidate bitmasks, or None when constraints clash."""
    full = (1 << tgt.size) - 1
    cand = [full] * src.size
    if pins:
        for p, q in pins:
            if p.tgt != src or q.tgt != tgt or p.src != q.src:
                raise ValidationError("pin constraint endpoints do not line up")
            for a in range(p.src.size):
                mask = 1 << q.assign[a]
                cand[p.assign[a]] &= mask
    if fibers:
        for r, s in fibers:
            if r.src != tgt or s.src != src or r.tgt != s.tgt:
                raise ValidationError("fiber constraint endpoints do not line up")
            fiber_mask = {}
            for j in range(tgt.size):
                fiber_mask.setdefault(r.assign[j], 0)
                fiber_mask[r.assign[j]] |= 1 << j
            for i in range(src.size):
                cand[i] &= fiber_mask.get(s.assign[i], 0)
    if any(c == 0 for c in cand) and src.size > 0:
        return None
    return cand


def search_maps(
    src: RelObject,
    tgt: RelObject,
    pins: Optional[PinList] = None,
    fibers: Optional[FiberList] = None,
) -> Iterator[RelMap]:
    """All maps src -> tgt satisfying the constraints, lexicographic order.

    pins:    (p: P -> src, q: P -> tgt) forces d(p(a)) = q(a).
    fibers:  (r: tgt -> T, s: src -> T) forces r(d(i)) = s(i).
    """
    cand = _candidate_masks(src, tgt, pins, fibers)
    if cand is None:
        return
    n = src.size
    assign = [0] * n

    def backtrack(i: int) -> Iterator[RelMap]:
        if i == n:
            yield RelMap(src, tgt, tuple(assign))
            return
        mask = cand[i]
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            ok = True
            for j in range(i):
                if src.related(i, j) and not tgt.related(v, assign[j]):
                    ok = False
                    break
                if src.related(j, i) and not tgt.related(assign[j], v):
                    ok = False
                    break
            if ok:
                assign[i] = v
                yield from backtrack(i + 1)
        return

    yield from backtrack(0)


@lru_cache(maxsize=200000)
def hom_maps(src: RelObject, tgt: RelObject) -> tuple[RelMap, ...]:
    return tuple(search_maps(src, tgt))


def hom_count(src: RelObject, tgt: RelObject) -> int:
    return len(hom_maps(src, tgt))


def find_violating_map(
    weak: RelObject,
    strong: RelObject,
    tgt: RelObject,
    transport: Optional[tuple[RelObject, tuple[int, ...]]] = None,
) -> Optional[tuple[int, ...]]:
    """An assignment that is a map (weak -> tgt) but not (strong -> tgt).

    ``weak`` and ``strong`` share a carrier with rel(weak) a subset of
    rel(strong).  When ``transport`` = (Y, t) is given, the assignment must
    additionally push forward to a valid map strong -> Y along v -> t[v].
    Returns the first witness found, or None.
    """
    if weak.size != strong.size:
        raise ValidationError("carrier sizes differ")
    n = weak.size
    extra = [
        (p, q)
        for p in range(n)
        for q in range(n)
        if p != q and strong.related(p, q) and not weak.related(p, q)
    ]
    t_obj, t_assign = transport if transport else (None, None)

    for (wp, wq) in extra:
        # assign the witness pair first, then grow along adjacency
        order = [wp, wq]
        placed = {wp, wq}
        frontier = [wp, wq]
        while frontier:
            nxt = []
            for u in frontier:
                for v in range(n):
                    if v not in placed and (
                        strong.related(u, v) or strong.related(v, u)
                    ):
                        placed.add(v)
                        order.append(v)
                        nxt.append(v)
            frontier = nxt
        order.extend(v for v in range(n) if v not in placed)
        assign = [-1] * n

        def ok_against(a: int, b: int) -> bool:
            va, vb = assign[a], assign[b]
            if weak.related(a, b) and not tgt.related(va, vb):
                return False
            if weak.related(b, a) and not tgt.related(vb, va):
                return False
            if t_obj is not None:
                if strong.related(a, b) and not t_obj.related(t_assign[va], t_assign[vb]):
                    return False
                if strong.related(b, a) and not t_obj.related(t_assign[vb], t_assign[va]):
                    return False
            return True

        def backtrack(k: int) -> bool:
            if k == n:
                return True
            u = order[k]
            for v in range(tgt.size):
                assign[u] = v
                good = True
                for m in range(k):
                    if not ok_against(u, order[m]):
                        good = False
                        break
                if good and u == wq:
                    if tgt.related(assign[wp], assign[wq]):
                        good = False
                if good and backtrack(k + 1):
                    return True
            assign[u] = -1
            return False

        if backtrack(0):
            return tuple(assign)
    return None


# ---------------------------------------------------------------------------
# limits and colimits


@dataclass(frozen=True)
class ProductResult:
    obj: RelObject
    proj1: RelMap
    proj2: RelMap

    def index(self, i: int, j: int) -> int:
        return i * self.proj2.tgt.size + j

    def pair(self, f: RelMap, g: RelMap) -> RelMap:
        if f.src != g.src:
            raise ValidationError("pairing needs a common domain")
        assign = tuple(
            f.assign[i] * self.proj2.tgt.size + g.assign[i] for i in range(f.src.size)
        )
        return RelMap(f.src, self.obj, assign)


@lru_cache(maxsize=100000)
def product(x: RelObject, y: RelObject) -> ProductResult:
    if x.flavor != y.flavor:
        raise FlavorError("product needs matching flavors")
    n, m = x.size, y.size
    rows = [0] * (n * m)
    for i in range(n):
        for j in range(m):
            acc = 0
            xr = x.rel[i]
            while xr:
                i2 = (xr & -xr).bit_length() - 1
                xr &= xr - 1
                yr = y.rel[j]
                while yr:
                    j2 = (yr & -yr).bit_length() - 1
                    yr &= yr - 1
                    acc |= 1 << (i2 * m + j2)
            rows[i * m + j] = acc
    obj = RelObject(x.flavor, n * m, tuple(rows))
    p1 = RelMap(obj, x, tuple(k // m for k in range(n * m)))
    p2 = RelMap(obj, y, tuple(k % m for k in range(n * m)))
    return ProductResult(obj, p1, p2)


def product_map(f: RelMap, g: RelMap) -> RelMap:
    """f x g between the canonical product objects."""
    ps = product(f.src, g.src)
    pt = product(f.tgt, g.tgt)
    m_s, m_t = g.src.size, g.tgt.size
    assign = tuple(
        f.assign[k // m_s] * m_t + g.assign[k % m_s] for k in range(ps.obj.size)
    )
    return RelMap(ps.obj, pt.obj, assign)


@dataclass(frozen=True)
class CoproductResult:
    obj: RelObject
    inj1: RelMap
    inj2: RelMap

    def copair(self, f: RelMap, g: RelMap) -> RelMap:
        if f.tgt != g.tgt:
            raise ValidationError("copairing needs a common codomain")
        return RelMap(self.obj, f.tgt, tuple(f.assign) + tuple(g.assign))


@lru_cache(maxsize=100000)
def coproduct(x: RelObject, y: RelObject) -> CoproductResult:
    if x.flavor != y.flavor:
        raise FlavorError("coproduct needs matching flavors")
    n = x.size
    rows = [x.rel[i] for i in range(n)] + [y.rel[j] << n for j in range(y.size)]
    obj = RelObject(x.flavor, n + y.size, tuple(rows))
    i1 = RelMap(x, obj, tuple(range(n)))
    i2 = RelMap(y, obj, tuple(range(n, n + y.size)))
    return CoproductResult(obj, i1, i2)


def coproduct_map(f: RelMap, g: RelMap) -> RelMap:
    cs = coproduct(f.src, g.src)
    ct = coproduct(f.tgt, g.tgt)
    n_t = f.tgt.size
    assign = tuple(f.assign) + tuple(v + n_t for v in g.assign)
    return RelMap(cs.obj, ct.obj, assign)


@dataclass(frozen=True)
class ExponentialResult:
    obj: RelObject
    ev: RelMap  # from product(obj, base).obj to target
    carrier: tuple[tuple[int, ...], ...]  # assignments base -> target, sorted

    def index_of(self, assign: tuple[int, ...]) -> int:
        return self.carrier.index(assign)


def exponential(base: RelObject, target: RelObject, size_guard: int = 1 << 20) -> ExponentialResult:
    """target^base: carrier is every map base -> target.

    Two maps are related when related arguments go to related values; the
    relation is already closed for every flavor (antisymmetry holds for
    ord because the relation refines the pointwise order).
    """
    if base.flavor != target.flavor:
        raise FlavorError("exponential needs matching flavors")
    maps = [m.assign for m in hom_maps(base, target)]
    if len(maps) > size_guard:
        raise SizeGuardExceeded("size_guard", size_guard, "exponential carrier")
    k = len(maps)
    rows = [0] * k
    for a in range(k):
        for b in range(k):
            fa, gb = maps[a], maps[b]
            good = True
            for i in range(base.size):
                r = base.rel[i]
                while r:
                    j = (r & -r).bit_length() - 1
                    r &= r - 1
                    if not target.related(fa[i], gb[j]):
                        good = False
                        break
                if not good:
                    break
            if good:
                rows[a] |= 1 << b
    if target.flavor == "ord":
        _check_antisymmetric(rows)  # cannot happen; guards internal errors
    obj = RelObject(base.flavor, k, tuple(rows))
    pr = product(obj, base)
    ev_assign = tuple(
        maps[t // base.size][t % base.size] for t in range(obj.size * base.size)
    )
    ev = RelMap(pr.obj, target, ev_assign)
    return ExponentialResult(obj, ev, tuple(maps))


def curry(f: RelMap, x: RelObject, y: RelObject, exp: ExponentialResult) -> RelMap:
    """Transpose X x Y -> Z into X -> Z^Y (exp must be exponential(y, f.tgt))."""
    m = y.size
    assign = []
    for i in range(x.size):
        a = tuple(f.assign[i * m + j] for j in range(m))
        assign.append(exp.index_of(a))
    return RelMap(x, exp.obj, tuple(assign))


def uncurry(g: RelMap, x: RelObject, y: RelObject, exp: ExponentialResult) -> RelMap:
    pr = product(x, y)
    assign = tuple(
        exp.carrier[g.assign[k // y.size]][k % y.size] for k in range(pr.obj.size)
    )
    return RelMap(pr.obj, exp.ev.tgt, assign)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class PushoutResult:
    obj: RelObject
    inj_left: RelMap  # from cod f
    inj_right: RelMap  # from cod g

    def mediate(self, t_left: RelMap, t_right: RelMap) -> RelMap:
        """Unique map out of the pushout induced by a commuting cocone."""
        if t_left.tgt != t_right.tgt:
            raise ValidationError("cocone legs need a common apex")
        assign = [None] * self.obj.size
        for b, c in enumerate(self.inj_left.assign):
            if assign[c] is None:
                assign[c] = t_left.assign[b]
            elif assign[c] != t_left.assign[b]:
                raise ValidationError("cocone does not commute with the gluing")
        for b, c in enumerate(self.inj_right.assign):
            if assign[c] is None:
                assign[c] = t_right.assign[b]
            elif assign[c] != t_right.assign[b]:
                raise ValidationError("cocone does not commute with the gluing")
        return RelMap(self.obj, t_left.tgt, tuple(assign))


def pushout(f: RelMap, g: RelMap) -> PushoutResult:
    """Pushout of B <- A -> C along f: A -> B and g: A -> C.

    Carrier: (B + C) / (f(a) ~ g(a)), classes indexed by their minimal
    member in the B-before-C numbering.  Relation: the image relation,
    then the flavor closure; ord raises when antisymmetry would break.
    """
    if f.src != g.src:
        raise ValidationError("pushout legs need a common domain")
    if f.tgt.flavor != g.tgt.flavor:
        raise FlavorError("pushout needs matching flavors")
    nb, nc = f.tgt.size, g.tgt.size
    uf = _UnionFind(nb + nc)
    for a in range(f.src.size):
        uf.union(f.assign[a], nb + g.assign[a])
    reps = sorted({uf.find(k) for k in range(nb + nc)})
    rep_index = {r: i for i, r in enumerate(reps)}
    cls = [rep_index[uf.find(k)] for k in range(nb + nc)]
    size = len(reps)
    rows = [0] * size
    for i in range(nb):
        r = f.tgt.rel[i]
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            rows[cls[i]] |= 1 << cls[j]
    for i in range(nc):
        r = g.tgt.rel[i]
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            rows[cls[nb + i]] |= 1 << cls[nb + j]
    flavor = f.tgt.flavor
    obj = RelObject(flavor, size, _close(flavor, size, rows))
    inj_b = RelMap(f.tgt, obj, tuple(cls[:nb]))
    inj_c = RelMap(g.tgt, obj, tuple(cls[nb:]))
    return PushoutResult(obj, inj_b, inj_c)


@dataclass(frozen=True)
class PullbackResult:
    obj: RelObject
    proj_left: RelMap  # to dom f
    proj_right: RelMap  # to dom g
    carrier: tuple[tuple[int, int], ...]

    def mediate(self, u_left: RelMap, u_right: RelMap) -> RelMap:
        if u_left.src != u_right.src:
            raise ValidationError("cone legs need a common domain")
        index = {p: k for k, p in enumerate(self.carrier)}
        assign = []
        for i in range(u_left.src.size):
            key = (u_left.assign[i], u_right.assign[i])
            if key not in index:
                raise ValidationError("cone does not land in the pullback")
            assign.append(index[key])
        return RelMap(u_left.src, self.obj, tuple(assign))


def pullback(f: RelMap, g: RelMap) -> PullbackResult:
    """Pullback of f: B -> Z and g: C -> Z: pairs agreeing in Z."""
    if f.tgt != g.tgt:
        raise ValidationError("pullback legs need a common codomain")
    carrier = [
        (b, c)
        for b in range(f.src.size)
        for c in range(g.src.size)
        if f.assign[b] == g.assign[c]
    ]
    size = len(carrier)
    rows = [0] * size
    for a, (b1, c1) in enumerate(carrier):
        for b2, (b3, c3) in enumerate(carrier):
            if f.src.related(b1, b3) and g.src.related(c1, c3):
                rows[a] |= 1 << b2
    obj = RelObject(f.src.flavor, size, tuple(rows))
    pl = RelMap(obj, f.src, tuple(b for b, _ in carrier))
    pr = RelMap(obj, g.src, tuple(c for _, c in carrier))
    return PullbackResult(obj, pl, pr, tuple(carrier))


# ---------------------------------------------------------------------------
# path components and reflections


def pi0(x: RelObject) -> tuple[RelObject, RelMap]:
    """Discrete object of components of the symmetric-transitive closure."""
    rows = list(x.rel)
    rows = _close("eqrel", x.size, rows)
    uf = _UnionFind(x.size)
    for i in range(x.size):
        r = rows[i]
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            uf.union(i, j)
    reps = sorted({uf.find(i) for i in range(x.size)})
    rep_index = {r: k for k, r in enumerate(reps)}
    comp = discrete(x.flavor, len(reps))
    q = RelMap(x, comp, tuple(rep_index[uf.find(i)] for i in range(x.size)))
    return comp, q


def pi0_bijective(f: RelMap) -> bool:
    """Closed form: does f induce a bijection on path components?"""
    cx, qx = pi0(f.src)
    cy, qy = pi0(f.tgt)
    if cx.size != cy.size:
        return False
    image = {}
    for i in range(f.src.size):
        a, b = qx.assign[i], qy.assign[f.assign[i]]
        if image.setdefault(a, b) != b:
            raise AssertionError("component map is not well defined")
    return len(set(image.values())) == cy.size


_REFLECTIONS = {
    ("graph", "eqrel"): "closure",
    ("preord", "ord"): "quotient",
    ("preord", "set"): "indiscrete",
}


def reflect(x: RelObject, target_flavor: str) -> tuple[RelObject, RelMap]:
    """Reflect into a full subcategory; the result keeps the ambient flavor.

    graph -> eqrel     transitive closure on the same carrier
    preord -> ord      quotient identifying x <= y <= x
    preord -> set      indiscrete relation on the same carrier
    """
    kind = _REFLECTIONS.get((x.flavor, target_flavor))
    if kind is None:
        raise UnsupportedReflection(f"no reflection {x.flavor} -> {target_flavor}")
    if kind == "closure":
        rows = _close("eqrel", x.size, list(x.rel))
        obj = RelObject(x.flavor, x.size, rows)
        return obj, RelMap(x, obj, tuple(range(x.size)))
    if kind == "indiscrete":
        full = (1 << x.size) - 1
        obj = RelObject(x.flavor, x.size, tuple(full for _ in range(x.size)))
        return obj, RelMap(x, obj, tuple(range(x.size)))
    # antisymmetric quotient
    uf = _UnionFind(x.size)
    for i in range(x.size):
        for j in range(x.size):
            if i != j and x.related(i, j) and x.related(j, i):
                uf.union(i, j)
    reps = sorted({uf.find(i) for i in range(x.size)})
    rep_index = {r: k for k, r in enumerate(reps)}
    cls = [rep_index[uf.find(i)] for i in range(x.size)]
    rows = [0] * len(reps)
    for i in range(x.size):
        r = x.rel[i]
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            rows[cls[i]] |= 1 << cls[j]
    obj = RelObject(x.flavor, len(reps), _close("preord", len(reps), rows))
    return obj, RelMap(x, obj, tuple(cls))


def in_subcategory(x: RelObject, target_flavor: str) -> bool:
    kind = _REFLECTIONS.get((x.flavor, target_flavor))
    if kind is None:
        raise UnsupportedReflection(f"no reflection {x.flavor} -> {target_flavor}")
    if kind == "closure":
        return _is_transitive_rows(x.rel)
    if kind == "indiscrete":
        return x.is_indiscrete()
    try:
        _check_antisymmetric(x.rel)
    except OrdAntisymmetryError:
        return False
    return True


# ---------------------------------------------------------------------------
# isomorphism search


def _degree_key(x: RelObject, i: int) -> tuple[int, int]:
    out_deg = bin(x.rel[i]).count("1")
    in_deg = sum(1 for j in range(x.size) if x.related(j, i))
    return (out_deg, in_deg)


def iso_search(x: RelObject, y: RelObject) -> Optional[RelMap]:
    """A relation-preserving bijection with preserving inverse, or None.

    Backtracking over the carrier with degree-sequence pruning.
    """
    if x.flavor != y.flavor or x.size != y.size:
        return None
    dx = sorted(_degree_key(x, i) for i in range(x.size))
    dy = sorted(_degree_key(y, j) for j in range(y.size))
    if dx != dy:
        return None
    deg_y = {j: _degree_key(y, j) for j in range(y.size)}
    n = x.size
    assign = [0] * n
    used = [False] * (n + 1)

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        ki = _degree_key(x, i)
        for v in range(n):
            if used[v] or deg_y[v] != ki:
                continue
            ok = True
            for j in range(i):
                if x.related(i, j) != y.related(v, assign[j]):
                    ok = False
                    break
                if x.related(j, i) != y.related(assign[j], v):
                    ok = False
                    break
            if ok:
                assign[i] = v
                used[v] = True
                if backtrack(i + 1):
                    return True
                used[v] = False
        return False

    if backtrack(0):
        return RelMap(x, y, tuple(assign))
    return None


def _iso_iter(x: RelObject, y: RelObject) -> Iterator[RelMap]:
    if x.flavor != y.flavor or x.size != y.size:
        return
    deg_y = {j: _degree_key(y, j) for j in range(y.size)}
    n = x.size
    assign = [0] * n
    used = [False] * (n + 1)

    def backtrack(i: int) -> Iterator[RelMap]:
        if i == n:
            yield RelMap(x, y, tuple(assign))
            return
        ki = _degree_key(x, i)
        for v in range(n):
            if used[v] or deg_y[v] != ki:
                continue
            ok = True
            for j in range(i):
                if x.related(i, j) != y.related(v, assign[j]):
                    ok = False
                    break
                if x.related(j, i) != y.related(assign[j], v):
                    ok = False
                    break
            if ok:
                assign[i] = v
                used[v] = True
                yield from backtrack(i + 1)
                used[v] = False

    yield from backtrack(0)


def arrow_iso(f: RelMap, g: RelMap) -> Optional[tuple[RelMap, RelMap]]:
    """Isos (phi, psi) with f;psi = phi;g, or None."""
    for phi in _iso_iter(f.src, g.src):
        # psi is pinned on the image of f
        pinned = {}
        clash = False
        for a in range(f.src.size):
            want = g.assign[phi.assign[a]]
            got = pinned.setdefault(f.assign[a], want)
            if got != want:
                clash = True
                break
        if clash:
            continue
        for psi in _iso_iter(f.tgt, g.tgt):
            if all(psi.assign[k] == v for k, v in pinned.items()):
                return phi, psi
    return None
