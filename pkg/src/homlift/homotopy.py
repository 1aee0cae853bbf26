"""Interval cylinders, pushout-products, generator levels and the
homotopy / fibrancy / weak-equivalence deciders.

Every cylinder here has interval form: the functor X -> X x V for an
interval object V with two endpoint inclusions and a collapse to the
point, obtained by factoring the fold map 1+1 -> 1.  That covers every
ambient this package supports (five relational flavors and finite
categories); arbitrary functorial cylinders are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import fincat, finrel, lifting
from .config import DEFAULT_BOUNDS, Bounds
from .errors import SizeGuardExceeded, UnsupportedReflection, ValidationError
from .lifting import Arrow, compose, dom, cod, identity_arrow, is_rel, terminal_arrow


# ---------------------------------------------------------------------------
# cylinders


def _cof_mono(f: Arrow) -> bool:
    return finrel.is_mono(f) if is_rel(f) else len(set(f.obj_map)) == f.src.n_obj


def _cof_all(f: Arrow) -> bool:
    return True


COF_CLASSES = {
    "mono": _cof_mono,
    "inj_obj": _cof_mono,
    "all": _cof_all,
}


@dataclass(frozen=True)
class IntervalCylinder:
    """Interval object V with endpoints g0, g1: 1 -> V and collapse s: V -> 1.

    cof names the ambient cofibration class; construction checks that both
    endpoints are retracted by s and that the induced map 1+1 -> V lies in
    the class.
    """

    interval: object
    g0: Arrow
    g1: Arrow
    s: Arrow
    cof: str = "mono"

    def __post_init__(self):
        if self.cof not in COF_CLASSES:
            raise ValidationError(f"unknown cofibration class {self.cof!r}")
        one = dom(self.g0)
        if dom(self.g1) != one or cod(self.g0) != self.interval or cod(self.g1) != self.interval:
            raise ValidationError("endpoint arrows must share the interval as codomain")
        if cod(self.s) != one or dom(self.s) != self.interval:
            raise ValidationError("collapse must go from the interval to the point")
        ident = identity_arrow(one)
        if compose(self.g0, self.s) != ident or compose(self.g1, self.s) != ident:
            raise ValidationError("collapse must retract both endpoints")
        folded = self._fold()
        if not COF_CLASSES[self.cof](folded):
            raise ValidationError(
                "the induced map from the endpoint pair into the interval "
                f"is not in the {self.cof!r} class"
            )

    @property
    def is_cat(self) -> bool:
        return isinstance(self.interval, fincat.FinCategory)

    def _fold(self) -> Arrow:
        if self.is_cat:
            cop = fincat.coproduct_cat(dom(self.g0), dom(self.g1))
            return cop.copair(self.g0, self.g1)
        cop = finrel.coproduct(dom(self.g0), dom(self.g1))
        return cop.copair(self.g0, self.g1)

    def in_cof(self, f: Arrow) -> bool:
        return COF_CLASSES[self.cof](f)


def rel_interval_cylinder(v: finrel.RelObject, e0: int, e1: int, cof: str = "mono") -> IntervalCylinder:
    one = finrel.terminal(v.flavor)
    return IntervalCylinder(
        v,
        finrel.RelMap(one, v, (e0,)),
        finrel.RelMap(one, v, (e1,)),
        finrel.terminal_map(v),
        cof,
    )


def cat_interval_cylinder(v: fincat.FinCategory, o0: int, o1: int) -> IntervalCylinder:
    one = fincat.one_cat()
    g0 = fincat.CatFunctor(one, v, (o0,), (v.ident[o0],))
    g1 = fincat.CatFunctor(one, v, (o1,), (v.ident[o1],))
    return IntervalCylinder(v, g0, g1, fincat.terminal_functor(v), "inj_obj")


def cyl(c: IntervalCylinder, x) -> object:
    """The cylinder object X x V."""
    if c.is_cat:
        return fincat.product_cat(x, c.interval).obj
    return finrel.product(x, c.interval).obj


def cyl_map(c: IntervalCylinder, f: Arrow) -> Arrow:
    """f x V between the canonical cylinder objects."""
    if c.is_cat:
        return fincat.product_functor(f, fincat.cat_identity(c.interval))
    return finrel.product_map(f, finrel.identity(c.interval))


def gamma_k(c: IntervalCylinder, x, k: int) -> Arrow:
    """Endpoint inclusion X -> X x V at endpoint k."""
    e = c.g0 if k == 0 else c.g1
    if c.is_cat:
        pr = fincat.product_cat(x, c.interval)
        o = e.obj_map[0]
        na = c.interval.n_arr
        return fincat.CatFunctor(
            x,
            pr.obj,
            tuple(i * c.interval.n_obj + o for i in range(x.n_obj)),
            tuple(a * na + c.interval.ident[o] for a in range(x.n_arr)),
        )
    pr = finrel.product(x, c.interval)
    e0 = e.assign[0]
    return finrel.RelMap(
        x, pr.obj, tuple(i * c.interval.size + e0 for i in range(x.size))
    )


def gamma0(c: IntervalCylinder, x) -> Arrow:
    return gamma_k(c, x, 0)


def gamma1(c: IntervalCylinder, x) -> Arrow:
    return gamma_k(c, x, 1)


def gamma(c: IntervalCylinder, x) -> Arrow:
    """The pair inclusion X + X -> X x V."""
    if c.is_cat:
        cop = fincat.coproduct_cat(x, x)
        return cop.copair(gamma0(c, x), gamma1(c, x))
    cop = finrel.coproduct(x, x)
    return cop.copair(gamma0(c, x), gamma1(c, x))


def sigma(c: IntervalCylinder, x) -> Arrow:
    """The collapse X x V -> X."""
    if c.is_cat:
        return fincat.product_cat(x, c.interval).proj1
    return finrel.product(x, c.interval).proj1


def codiagonal(c: IntervalCylinder, x) -> Arrow:
    if c.is_cat:
        cop = fincat.coproduct_cat(x, x)
        ident = fincat.cat_identity(x)
        return cop.copair(ident, ident)
    cop = finrel.coproduct(x, x)
    ident = finrel.identity(x)
    return cop.copair(ident, ident)


# ---------------------------------------------------------------------------
# pushout-products


def star_gamma(c: IntervalCylinder, f: Arrow) -> Arrow:
    """Connecting map of the pushout of (f+f, gamma_X) into Cyl(cod f)."""
    x, y = dom(f), cod(f)
    if c.is_cat:
        fpf = fincat.coproduct_functor(f, f)
        po = fincat.cat_pushout(fpf, gamma(c, x))
    else:
        fpf = finrel.coproduct_map(f, f)
        po = finrel.pushout(fpf, gamma(c, x))
    return po.mediate(gamma(c, y), cyl_map(c, f))


def star_gamma_k(c: IntervalCylinder, f: Arrow, k: int) -> Arrow:
    """Connecting map of the pushout of (f, gamma^k_X) into Cyl(cod f)."""
    x, y = dom(f), cod(f)
    if c.is_cat:
        po = fincat.cat_pushout(f, gamma_k(c, x, k))
    else:
        po = finrel.pushout(f, gamma_k(c, x, k))
    return po.mediate(gamma_k(c, y, k), cyl_map(c, f))


def costar(c: IntervalCylinder, g: Arrow) -> finrel.RelMap:
    """Conjugate pushout-product: the map A^V -> B^V x_(BxB) (AxA).

    Uses the cartesian closed structure, so only relational ambients with
    exponentials are supported.
    """
    if c.is_cat:
        raise ValidationError("the conjugate product is only computed for relational ambients")
    a, b = g.src, g.tgt
    v = c.interval
    e0, e1 = c.g0.assign[0], c.g1.assign[0]
    expa = finrel.exponential(v, a)
    expb = finrel.exponential(v, b)
    proda = finrel.product(a, a)
    prodb = finrel.product(b, b)
    index_b = {m: i for i, m in enumerate(expb.carrier)}
    post = finrel.RelMap(
        expa.obj,
        expb.obj,
        tuple(index_b[tuple(g.assign[t] for t in m)] for m in expa.carrier),
    )
    beta_a = finrel.RelMap(
        expa.obj, proda.obj, tuple(m[e0] * a.size + m[e1] for m in expa.carrier)
    )
    beta_b = finrel.RelMap(
        expb.obj, prodb.obj, tuple(m[e0] * b.size + m[e1] for m in expb.carrier)
    )
    gxg = finrel.product_map(g, g)
    pb = finrel.pullback(beta_b, gxg)
    return pb.mediate(post, beta_a)


# ---------------------------------------------------------------------------
# generator levels


@dataclass(frozen=True)
class GeneratorLevels:
    levels: tuple[tuple[Arrow, ...], ...]
    provenance: tuple[tuple[str, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def flatten(self) -> tuple[Arrow, ...]:
        out = []
        for level in self.levels:
            for a in level:
                if a not in out:
                    out.append(a)
        return tuple(out)


def _object_size(x) -> int:
    return x.n_arr if isinstance(x, fincat.FinCategory) else x.size


def lambda_levels(
    c: IntervalCylinder,
    extra: Sequence[Arrow],
    gens: Sequence[Arrow],
    depth: int,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> GeneratorLevels:
    """The stratified generator set of the cylinder.

    Level 0 is the extra set joined with both endpoint products of the
    generators; each next level applies the pair product.  Isomorphisms
    are dropped everywhere.  Level 0 keeps distinct literal maps; deeper
    levels also drop duplicates up to arrow isomorphism.
    """
    level0: list[Arrow] = []
    prov0: list[str] = []

    def push0(a: Arrow, tag: str):
        if lifting.is_iso_arrow(a):
            return
        if a in level0:
            return
        level0.append(a)
        prov0.append(tag)

    for i, s in enumerate(extra):
        push0(s, f"extra[{i}]")
    for k in (0, 1):
        for i, g in enumerate(gens):
            push0(star_gamma_k(c, g, k), f"gens[{i}]*end{k}")

    levels = [tuple(level0)]
    provenances = [tuple(prov0)]
    for n in range(depth):
        nxt: list[Arrow] = []
        prov: list[str] = []
        for i, a in enumerate(levels[-1]):
            b = star_gamma(c, a)
            if _object_size(dom(b)) > bounds.size_guard or _object_size(cod(b)) > bounds.size_guard:
                raise SizeGuardExceeded(
                    "size_guard", bounds.size_guard, f"generator level {n + 1}"
                )
            if lifting.is_iso_arrow(b):
                continue
            if any(lifting.arrows_isomorphic(b, o) for o in nxt):
                continue
            nxt.append(b)
            prov.append(f"level{n}[{i}]*pair")
        levels.append(tuple(nxt))
        provenances.append(tuple(prov))
    return GeneratorLevels(tuple(levels), tuple(provenances))


# ---------------------------------------------------------------------------
# fibrancy, homotopy, equivalences


def is_fibrant(x, gens: Sequence[Arrow], bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    return lifting.has_rlp(terminal_arrow(x), gens, bounds)


@dataclass(frozen=True)
class HomotopyWitness:
    h: Arrow  # Cyl(dom) -> cod
    cylinder: IntervalCylinder

    def check(self, f: Arrow, g: Arrow) -> bool:
        x = dom(f)
        gx = gamma(self.cylinder, x)
        if lifting.is_rel(f):
            cop = finrel.coproduct(x, x)
        else:
            cop = fincat.coproduct_cat(x, x)
        return compose(gx, self.h) == cop.copair(f, g)


def are_homotopic(c: IntervalCylinder, f: Arrow, g: Arrow) -> bool:
    """Existence-only homotopy test; equals ``homotopic(...) is not None``.

    For a two-element relational interval the extension along the pair
    inclusion is pinned everywhere, so only the cross conditions between
    the two slices need checking.
    """
    e0 = c.g0.assign[0] if not c.is_cat else None
    e1 = c.g1.assign[0] if not c.is_cat else None
    if lifting.is_rel(f) and c.interval.size == 2 and e0 != e1:
        if dom(f) != dom(g) or cod(f) != cod(g):
            raise ValidationError("homotopy needs parallel arrows")
        x, y = f.src, f.tgt
        v = c.interval
        picks = (f.assign, g.assign) if e0 == 0 else (g.assign, f.assign)
        # slice-internal pairs hold automatically since f and g are maps
        vpairs = [
            (a, b)
            for a in range(2)
            for b in range(2)
            if a != b and v.related(a, b)
        ]
        for i in range(x.size):
            row = x.rel[i]
            while row:
                j = (row & -row).bit_length() - 1
                row &= row - 1
                for a, b in vpairs:
                    if not y.related(picks[a][i], picks[b][j]):
                        return False
        return True
    return homotopic(c, f, g) is not None


def homotopy_matrix(c: IntervalCylinder, x, y):
    """(homs, rows) where bit j of rows[i] says homs[i] and homs[j] are
    homotopic.

    Bulk variant of ``are_homotopic`` over a whole hom-set: for a
    two-element relational interval the cross conditions per direction
    reduce to mask inclusions that are precomputed per map.
    """
    homs = lifting.hom_iter(x, y)
    homs = tuple(homs)
    k = len(homs)
    fast = (
        isinstance(x, finrel.RelObject)
        and c.interval.size == 2
        and c.g0.assign[0] != c.g1.assign[0]
    )
    if not fast:
        rows = [0] * k
        for i, f in enumerate(homs):
            for j, g in enumerate(homs):
                if are_homotopic(c, f, g):
                    rows[i] |= 1 << j
        return homs, tuple(rows)
    v = c.interval
    e0 = c.g0.assign[0]
    directions = [
        (u, w) for u in range(2) for w in range(2) if u != w and v.related(u, w)
    ]
    # row_mask[h][i]: targets hit by h over the relation row of i
    row_mask = []
    for h in homs:
        masks = []
        for i in range(x.size):
            acc = 0
            r = x.rel[i]
            while r:
                j = (r & -r).bit_length() - 1
                r &= r - 1
                acc |= 1 << h.assign[j]
            masks.append(acc)
        row_mask.append(masks)
    rows = [0] * k
    yrel = y.rel
    n = x.size
    for i, f in enumerate(homs):
        for j, g in enumerate(homs):
            ok = True
            for (u, w) in directions:
                first = f if u == e0 else g
                second_masks = row_mask[j] if w != e0 else row_mask[i]
                for a in range(n):
                    if second_masks[a] & ~yrel[first.assign[a]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                rows[i] |= 1 << j
    return homs, tuple(rows)


def homotopic(c: IntervalCylinder, f: Arrow, g: Arrow) -> Optional[HomotopyWitness]:
    """Extend (f|g) along the pair inclusion of the domain cylinder."""
    if dom(f) != dom(g) or cod(f) != cod(g):
        raise ValidationError("homotopy needs parallel arrows")
    x = dom(f)
    if (
        lifting.is_rel(f)
        and c.interval.size == 2
        and c.g0.assign[0] != c.g1.assign[0]
    ):
        # the pair inclusion is bijective on carriers: the extension is
        # pinned everywhere and only needs validation
        e0, e1 = c.g0.assign[0], c.g1.assign[0]
        pr = finrel.product(x, c.interval)
        assign = [0] * pr.obj.size
        for i in range(x.size):
            assign[i * 2 + e0] = f.assign[i]
            assign[i * 2 + e1] = g.assign[i]
        try:
            h = finrel.RelMap(pr.obj, cod(f), tuple(assign))
        except ValidationError:
            return None
        return HomotopyWitness(h, c)
    gx = gamma(c, x)
    if lifting.is_rel(f):
        cop = finrel.coproduct(x, x)
    else:
        cop = fincat.coproduct_cat(x, x)
    fg = cop.copair(f, g)
    for h in lifting.search_arrows(cod(gx), cod(f), pins=[(gx, fg)]):
        return HomotopyWitness(h, c)
    return None


def homotopy_equivalence(
    c: IntervalCylinder, f: Arrow
) -> Optional[tuple[Arrow, HomotopyWitness, HomotopyWitness]]:
    """A quasi-inverse with both composite homotopies, if one exists.

    Correct as a weak-equivalence test only when both endpoints are
    fibrant, where the single-step homotopy relation is already an
    equivalence relation; callers check fibrancy.
    """
    x, y = dom(f), cod(f)
    idx, idy = identity_arrow(x), identity_arrow(y)
    for g in lifting.hom_iter(y, x):
        fg = compose(f, g)
        if not are_homotopic(c, idx, fg):
            continue
        gf = compose(g, f)
        if are_homotopic(c, idy, gf):
            return g, homotopic(c, idx, fg), homotopic(c, idy, gf)
    return None


def is_dual_sdr(c: IntervalCylinder, f: Arrow) -> Optional[tuple[Arrow, Arrow]]:
    """Section g and homotopy h exhibiting f as a dual strong deformation
    retract: g;f = id, gamma;h = (id|f;g) and h;f = sigma;f."""
    x, y = dom(f), cod(f)
    idy = identity_arrow(y)
    gx = gamma(c, x)
    sx = sigma(c, x)
    if lifting.is_rel(f):
        cop = finrel.coproduct(x, x)
    else:
        cop = fincat.coproduct_cat(x, x)
    for g in lifting.search_arrows(y, x, fibers=[(f, idy)]):
        want = cop.copair(identity_arrow(x), compose(f, g))
        for h in lifting.search_arrows(
            cod(gx), x, pins=[(gx, want)], fibers=[(f, compose(sx, f))]
        ):
            return g, h
    return None


# ---------------------------------------------------------------------------
# standard ambients and the weak-equivalence decider


@dataclass(frozen=True)
class ModelSetup:
    """A cylinder with generating cofibrations and fibrancy augmentation."""

    ambient: str
    cylinder: IntervalCylinder
    generators: tuple[Arrow, ...]
    extras: tuple[Arrow, ...] = ()
    depth: int = 2


@lru_cache(maxsize=64)
def standard_setup(ambient: str, depth: int = 2) -> ModelSetup:
    """The per-ambient cylinder and generating data used by the deciders.

    graph:  interval = complete pair, generators point and edge inclusion,
            augmented with the triangle-completion inclusion.
    eqrel:  same interval and generators inside transitive objects.
    preord: interval = indiscrete pair, generators point and chain.
    ord:    interval collapses to the point; every map is a cofibration.
    set:    interval = two-point set, generator = point inclusion.
    cat:    interval = indiscrete pair of objects; generators are the
            point, the chain inclusion and the parallel-pair collapse.
    """
    if ambient in ("graph", "rsrel"):
        k2 = finrel.complete_graph(2)
        cyl_ = rel_interval_cylinder(k2, 0, 1)
        two = finrel.discrete("graph", 2)
        gens = (
            finrel.initial_map(finrel.terminal("graph")),
            finrel.make_map(two, k2, (0, 1)),
        )
        k3m = finrel.complete_graph_minus_edge(3)
        k3 = finrel.complete_graph(3)
        extras = (finrel.make_map(k3m, k3, (0, 1, 2)),)
        return ModelSetup("graph", cyl_, gens, extras, depth)
    if ambient == "eqrel":
        k2 = finrel.indiscrete("eqrel", 2)
        cyl_ = rel_interval_cylinder(k2, 0, 1)
        two = finrel.discrete("eqrel", 2)
        gens = (
            finrel.initial_map(finrel.terminal("eqrel")),
            finrel.make_map(two, k2, (0, 1)),
        )
        return ModelSetup("eqrel", cyl_, gens, (), depth)
    if ambient == "preord":
        v = finrel.indiscrete("preord", 2)
        cyl_ = rel_interval_cylinder(v, 0, 1)
        two = finrel.discrete("preord", 2)
        chain = finrel.make_object("preord", 2, [(0, 1)])
        gens = (
            finrel.initial_map(finrel.terminal("preord")),
            finrel.make_map(two, chain, (0, 1)),
        )
        return ModelSetup("preord", cyl_, gens, (), depth)
    if ambient == "ord":
        v = finrel.terminal("ord")
        cyl_ = rel_interval_cylinder(v, 0, 0, cof="all")
        two = finrel.discrete("ord", 2)
        chain = finrel.make_object("ord", 2, [(0, 1)])
        gens = (
            finrel.initial_map(finrel.terminal("ord")),
            finrel.make_map(two, chain, (0, 1)),
        )
        return ModelSetup("ord", cyl_, gens, (), depth)
    if ambient == "set":
        v = finrel.discrete("set", 2)
        cyl_ = rel_interval_cylinder(v, 0, 1)
        gens = (finrel.initial_map(finrel.terminal("set")),)
        return ModelSetup("set", cyl_, gens, (), depth)
    if ambient == "cat":
        v = fincat.indiscrete_cat(2)
        cyl_ = cat_interval_cylinder(v, 0, 1)
        d2 = fincat.discrete_cat(2)
        ch2 = fincat.chain2()
        pp = fincat.parallel_pair()
        gens = (
            fincat.initial_functor(fincat.one_cat()),
            fincat.CatFunctor(d2, ch2, (0, 1), (0, 1)),
            fincat.CatFunctor(pp, ch2, (0, 1), (0, 1, 2, 2)),
        )
        return ModelSetup("cat", cyl_, gens, (), depth)
    raise ValidationError(f"unknown ambient {ambient!r}")


def setup_for(x) -> ModelSetup:
    if isinstance(x, fincat.FinCategory):
        return standard_setup("cat")
    return standard_setup(x.flavor)


@lru_cache(maxsize=64)
def fibrancy_generators(setup: ModelSetup, bounds: Bounds = DEFAULT_BOUNDS) -> tuple[Arrow, ...]:
    levels = lambda_levels(
        setup.cylinder, (), setup.generators, setup.depth, bounds
    )
    return levels.flatten() + tuple(setup.extras)


@lru_cache(maxsize=100000)
def fibrant_replacement(
    x, setup: ModelSetup, bounds: Bounds = DEFAULT_BOUNDS
) -> Arrow:
    """A cell map x -> Lx whose codomain has the lifting property."""
    gens = fibrancy_generators(setup, bounds)
    fact = lifting.soa_factorize(terminal_arrow(x), gens, bounds=bounds)
    return fact.left_part


def weq(f: Arrow, setup: Optional[ModelSetup] = None, bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    """Decide the weak-equivalence class of f.

    Both endpoints are replaced by fibrant objects by cell attachment, f
    is transported along the replacements, and the transported map is
    tested for a homotopy quasi-inverse.  Exceeded bounds raise; the
    answer is never silently approximated.
    """
    if setup is None:
        setup = setup_for(dom(f))
    gens = fibrancy_generators(setup, bounds)
    if lifting.is_rel(f):
        lx = fibrant_replacement(dom(f), setup, bounds)
        ly = fibrant_replacement(cod(f), setup, bounds)
    else:
        if not is_fibrant(dom(f), gens, bounds) or not is_fibrant(cod(f), gens, bounds):
            raise ValidationError("functor endpoints are expected to be fibrant")
        lx = identity_arrow(dom(f))
        ly = identity_arrow(cod(f))
    problem = lifting.LiftingProblem(
        lx, terminal_arrow(cod(ly)), compose(f, ly), terminal_arrow(cod(lx))
    )
    lf = lifting.find_filler(problem)
    if lf is None:
        raise ValidationError("transport along the fibrant replacement failed")
    return homotopy_equivalence(setup.cylinder, lf) is not None


# ---------------------------------------------------------------------------
# induced cylinders on reflective subcategories


def induced_cylinder(c: IntervalCylinder, target_flavor: str) -> IntervalCylinder:
    """Reflect an interval cylinder onto a reflective subcategory.

    Supported reflections mirror finrel.reflect; the interval is replaced
    by its reflection with reflected endpoints and collapse, and the
    result lives in the subcategory's own flavor encoding.
    """
    if c.is_cat:
        raise UnsupportedReflection("cylinder reflection is only for relational ambients")
    v = c.interval
    rv, unit = finrel.reflect(v, target_flavor)
    cof = "all" if target_flavor == "ord" else "mono"
    if target_flavor == "set":
        # indiscrete objects over the ambient are plain sets on the carrier
        converted = finrel.discrete("set", rv.size)
    else:
        converted = finrel.convert_flavor(rv, target_flavor)
    e0 = unit.assign[c.g0.assign[0]]
    e1 = unit.assign[c.g1.assign[0]]
    return rel_interval_cylinder(converted, e0, e1, cof=cof)


# ---------------------------------------------------------------------------
# cartesian cylinder check


@dataclass(frozen=True)
class CartesianEntry:
    generator: str
    kind: str
    in_class: bool


@dataclass(frozen=True)
class CartesianReport:
    entries: tuple[CartesianEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.in_class for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.in_class]


def check_cartesian(c: IntervalCylinder, gens: Sequence[Arrow]) -> CartesianReport:
    """Check the generator-level pushout-product stability conditions.

    For a cofibrantly generated class it is enough that the pair product
    and both endpoint products of every generator stay in the class.
    """
    entries = []
    for i, g in enumerate(gens):
        name = lifting.describe_arrow(g)
        entries.append(
            CartesianEntry(f"gens[{i}] {name}", "pair", c.in_cof(star_gamma(c, g)))
        )
        for k in (0, 1):
            entries.append(
                CartesianEntry(
                    f"gens[{i}] {name}", f"end{k}", c.in_cof(star_gamma_k(c, g, k))
                )
            )
    return CartesianReport(tuple(entries))
