"""Example suites: the per-category acceptance batteries behind
``homlift check-example``.

Each suite returns a list of Claim records carrying a pass flag, details
and an undecided count; expected constants live in data/expected.json.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from importlib import resources

from . import corpora, fincat, finrel, homotopy, lifting
from .errors import BoundExceeded


@dataclass
class Claim:
    name: str
    passed: bool
    detail: str
    elapsed_ms: float
    undecided: int = 0


def _expected() -> dict:
    with resources.files("homlift.data").joinpath("expected.json").open() as fh:
        return json.load(fh)


def _claim(name, fn):
    t0 = time.perf_counter()
    undecided = 0
    try:
        passed, detail = fn()
    except BoundExceeded as e:
        passed, detail = False, f"UNDECIDED: {e}"
        undecided = 1
    return Claim(name, passed, detail, (time.perf_counter() - t0) * 1000.0, undecided)


def _rsrel_small_corpus():
    return list(corpora.graphs_up_to(3))


def _sampled_pairs_4v(seed: int, count: int):
    gs4 = [g for g in corpora.graphs_up_to(4) if g.size == 4]
    rng = random.Random(seed)
    return [(rng.choice(gs4), rng.choice(gs4)) for _ in range(count)]


def _full_and_surjective(f):
    return finrel.is_full(f) and finrel.is_surjective(f)


# ---------------------------------------------------------------------------
# rsRel


def suite_rsrel(seed: int = 0) -> list[Claim]:
    exp = _expected()["rsrel"]
    setup = homotopy.standard_setup("graph")
    gens = list(setup.generators)
    claims = []

    def lifting_characterization():
        checked = 0
        small = _rsrel_small_corpus()
        for x in small:
            for y in small:
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    if lifting.has_rlp(f, gens) != _full_and_surjective(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        for x, y in _sampled_pairs_4v(seed, exp["sample_pairs_4v"]):
            for f in finrel.hom_maps(x, y):
                checked += 1
                if lifting.has_rlp(f, gens) != _full_and_surjective(f):
                    return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, f"right lifting class is full+surjective on {checked} maps"

    claims.append(_claim("rlp-iff-full-and-surjective", lifting_characterization))

    def cofibrations_are_monos():
        checked = 0
        small = _rsrel_small_corpus()
        for x in small:
            for y in small:
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    if lifting.in_lbox_rbox(f, gens) != finrel.is_mono(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        for x, y in _sampled_pairs_4v(seed, exp["sample_pairs_4v"]):
            for f in finrel.hom_maps(x, y):
                checked += 1
                if lifting.in_lbox_rbox(f, gens) != finrel.is_mono(f):
                    return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, f"saturated left class is the monomorphisms on {checked} maps"

    claims.append(_claim("saturation-gives-monos", cofibrations_are_monos))

    def pushout_product_values():
        k4m = finrel.make_object("graph", 4, exp["k4_minus_edges"])
        k4 = finrel.complete_graph(4)
        k4m_incl = finrel.make_map(k4m, k4, (0, 1, 2, 3))
        two = finrel.discrete("graph", 2)
        k2 = finrel.complete_graph(2)
        i1 = finrel.make_map(two, k2, (0, 1))
        s0 = homotopy.star_gamma_k(setup.cylinder, i1, 0)
        s1 = homotopy.star_gamma_k(setup.cylinder, i1, 1)
        messages = []
        ok = True
        if finrel.arrow_iso(s0, k4m_incl) is None:
            ok = False
            messages.append(
                "endpoint product of the edge generator is "
                f"[{s0.src.size}v/{s0.src.edge_count()}e -> K4], "
                "not the 5-edge inclusion"
            )
        if finrel.arrow_iso(s1, s0) is None:
            ok = False
            messages.append("the two endpoint products disagree up to permutation")
        k3m = finrel.make_object("graph", 3, exp["k3_minus_edges"])
        k3 = finrel.complete_graph(3)
        collapse = finrel.make_map(k4m, k3m, (2, 2, 0, 1))
        po = finrel.pushout(k4m_incl, collapse)
        k3m_incl = finrel.make_map(k3m, k3, (0, 1, 2))
        if finrel.arrow_iso(po.inj_right, k3m_incl) is None:
            ok = False
            messages.append("degree-3 collapse pushout is not the 3-vertex analogue")
        return ok, "; ".join(messages) if messages else "all three values match"

    claims.append(_claim("pushout-product-values", pushout_product_values))

    def fibrancy():
        fib_gens = homotopy.fibrancy_generators(setup)
        for x in corpora.graphs_up_to(4):
            if homotopy.is_fibrant(x, fib_gens) != finrel.is_transitive(x):
                return False, f"counterexample {x!r}"
        return True, "fibrant = transitive on all graphs up to 4 vertices"

    claims.append(_claim("fibrant-iff-transitive", fibrancy))

    def homotopy_closed_form():
        checked = 0
        small = _rsrel_small_corpus()
        for x in small:
            for y in small:
                homs = finrel.hom_maps(x, y)
                for f in homs:
                    for g in homs:
                        checked += 1
                        expect = all(
                            y.related(f.assign[i], g.assign[j])
                            for i in range(x.size)
                            for j in range(x.size)
                            if x.related(i, j)
                        )
                        w = homotopy.homotopic(setup.cylinder, f, g)
                        if (w is not None) != expect:
                            return False, "closed form disagrees"
                        if w is not None and not w.check(f, g):
                            return False, "witness fails re-validation"
        return True, f"agrees with the edge condition on {checked} pairs"

    claims.append(_claim("homotopy-closed-form", homotopy_closed_form))

    def weq_vs_components():
        checked = 0
        trans = list(corpora.transitive_graphs_up_to(4))
        for x in trans:
            for y in trans:
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    if homotopy.weq(f, setup) != finrel.pi0_bijective(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        gs4 = list(corpora.graphs_up_to(4))
        rng = random.Random(seed)
        sampled = 0
        while sampled < 500:
            x = rng.choice(gs4)
            y = rng.choice(gs4)
            homs = finrel.hom_maps(x, y)
            if not homs:
                continue
            f = rng.choice(homs)
            sampled += 1
            checked += 1
            if homotopy.weq(f, setup) != finrel.pi0_bijective(f):
                return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, f"weak equivalence = bijective components on {checked} maps"

    claims.append(_claim("weq-iff-bijective-components", weq_vs_components))

    def homotopy_is_equivalence_on_fibrant():
        trans = list(corpora.transitive_graphs_up_to(4))
        for x in trans:
            for t in trans:
                homs, rows = homotopy.homotopy_matrix(setup.cylinder, x, t)
                k = len(homs)
                for a in range(k):
                    if not (rows[a] >> a) & 1:
                        return False, "not reflexive"
                    r = rows[a]
                    while r:
                        b = (r & -r).bit_length() - 1
                        r &= r - 1
                        if not (rows[b] >> a) & 1:
                            return False, "not symmetric"
                        if rows[b] & ~rows[a]:
                            return False, "not transitive"
        return True, "equivalence relation on every hom-set into a transitive graph"

    claims.append(_claim("homotopy-equivalence-relation-on-fibrant", homotopy_is_equivalence_on_fibrant))

    def level_shape():
        levels = homotopy.lambda_levels(setup.cylinder, (), setup.generators, 2)
        if len(levels.levels[0]) != exp["lambda_level0_size"]:
            return False, f"level 0 has {len(levels.levels[0])} members"
        for member in levels.flatten():
            if not corpora.is_inclusion_into_complete(member):
                return False, "a member is not a connected subgraph inclusion"
        return True, "every member includes a nonempty connected subgraph of a complete graph"

    claims.append(_claim("generator-level-shape", level_shape))
    return claims


# ---------------------------------------------------------------------------
# eqRel


def suite_eqrel(seed: int = 0) -> list[Claim]:
    setup = homotopy.standard_setup("eqrel")
    graph_setup = homotopy.standard_setup("graph")
    claims = []

    def generators_fixed():
        for g in setup.generators:
            for obj in (g.src, g.tgt):
                as_graph = finrel.convert_flavor(obj, "graph")
                refl, unit = finrel.reflect(as_graph, "eqrel")
                if refl != as_graph or not finrel.is_iso(unit):
                    return False, "a generator object moves under the reflection"
        return True, "the generating cofibrations already live in the subcategory"

    claims.append(_claim("generators-fixed-by-reflection", generators_fixed))

    def weq_vs_classes():
        checked = 0
        for x in corpora.eqrels_up_to(4):
            for y in corpora.eqrels_up_to(4):
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    if homotopy.weq(f, setup) != finrel.pi0_bijective(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, f"weak equivalence = bijection on classes for {checked} maps"

    claims.append(_claim("weq-iff-bijective-classes", weq_vs_classes))

    def induced_agreement():
        induced = homotopy.induced_cylinder(graph_setup.cylinder, "eqrel")
        checked = 0
        trans = list(corpora.transitive_graphs_up_to(4))
        for x in trans:
            xe = finrel.convert_flavor(x, "eqrel")
            for y in trans:
                ye = finrel.convert_flavor(y, "eqrel")
                homs, ambient_rows = homotopy.homotopy_matrix(
                    graph_setup.cylinder, x, y
                )
                homs_e, induced_rows = homotopy.homotopy_matrix(induced, xe, ye)
                checked += len(homs) * len(homs)
                if tuple(m.assign for m in homs) != tuple(m.assign for m in homs_e):
                    return False, "hom-set enumerations diverge between encodings"
                if ambient_rows != induced_rows:
                    return False, "ambient and induced homotopy disagree"
        return True, f"ambient and induced cylinders agree on {checked} pairs"

    claims.append(_claim("induced-cylinder-homotopy-agreement", induced_agreement))
    return claims


# ---------------------------------------------------------------------------
# Cat


def suite_cat_folk(seed: int = 0) -> list[Claim]:
    exp = _expected()["cat"]
    setup = homotopy.standard_setup("cat")
    cylinder = setup.cylinder
    claims = []

    def level_zero():
        levels = homotopy.lambda_levels(cylinder, (), setup.generators, 2)
        l0 = levels.levels[0]
        if len(l0) != exp["lambda_level0_size"]:
            return False, f"level 0 has {len(l0)} members"
        point = fincat.one_cat()
        for k, member in enumerate(l0):
            if member.src != point or member.tgt != cylinder.interval:
                return False, "level 0 member is not an endpoint inclusion"
        if {l0[0].obj_map, l0[1].obj_map} != {(0,), (1,)}:
            return False, "level 0 members hit the same endpoint"
        if any(levels.levels[i] for i in range(1, len(levels.levels))):
            return False, "higher levels are not all isomorphisms"
        return True, "level 0 is exactly the two endpoint inclusions"

    claims.append(_claim("level-zero-is-two-inclusions", level_zero))

    def pushout_squares():
        probes = [
            fincat.one_cat(),
            fincat.discrete_cat(2),
            fincat.chain2(),
            fincat.parallel_pair(),
            fincat.indiscrete_cat(2),
        ]
        d2 = fincat.discrete_cat(2)
        ch2 = fincat.chain2()
        pp = fincat.parallel_pair()
        one = fincat.one_cat()
        ind2 = cylinder.interval
        checks = []
        # chain generator against both endpoints
        for k in (0, 1):
            f = fincat.CatFunctor(d2, ch2, (0, 1), (0, 1))
            g = homotopy.gamma_k(cylinder, d2, k)
            po = fincat.cat_pushout(f, g)
            conn = po.mediate(
                homotopy.gamma_k(cylinder, ch2, k), homotopy.cyl_map(cylinder, f)
            )
            checks.append(
                corpora.cat_square_is_pushout(
                    f,
                    g,
                    fincat.cat_compose(po.inj_left, conn),
                    fincat.cat_compose(po.inj_right, conn),
                    probes,
                )
                and fincat.cat_is_iso(conn)
            )
        # parallel-pair collapse against both endpoints
        for k in (0, 1):
            p = fincat.CatFunctor(pp, ch2, (0, 1), (0, 1, 2, 2))
            g = homotopy.gamma_k(cylinder, pp, k)
            po = fincat.cat_pushout(p, g)
            conn = po.mediate(
                homotopy.gamma_k(cylinder, ch2, k), homotopy.cyl_map(cylinder, p)
            )
            checks.append(
                corpora.cat_square_is_pushout(
                    p,
                    g,
                    fincat.cat_compose(po.inj_left, conn),
                    fincat.cat_compose(po.inj_right, conn),
                    probes,
                )
                and fincat.cat_is_iso(conn)
            )
        # endpoint inclusion of the point against the pair inclusion
        for k in (0, 1):
            gk1 = homotopy.gamma_k(cylinder, one, k)
            y = gk1.tgt
            left = fincat.coproduct_functor(gk1, gk1)
            gam = homotopy.gamma(cylinder, one)
            po = fincat.cat_pushout(left, gam)
            conn = po.mediate(
                homotopy.gamma(cylinder, y), homotopy.cyl_map(cylinder, gk1)
            )
            if conn.tgt.n_arr != exp["interval_square_arrows"]:
                checks.append(False)
                continue
            checks.append(
                corpora.cat_square_is_pushout(
                    left,
                    gam,
                    fincat.cat_compose(po.inj_left, conn),
                    fincat.cat_compose(po.inj_right, conn),
                    probes,
                )
                and fincat.cat_is_iso(conn)
            )
        if not all(checks):
            return False, f"oracle results: {checks}"
        return True, "all generator pushout squares verified and connect by isomorphisms"

    claims.append(_claim("generator-pushout-squares", pushout_squares))

    def homotopic_vs_natiso():
        checked = 0
        corpus = corpora.cat_corpus()
        for c in corpus:
            for d in corpus:
                fs = fincat.enumerate_functors(c, d)
                for f in fs:
                    for g in fs:
                        checked += 1
                        a = homotopy.are_homotopic(cylinder, f, g)
                        b = fincat.naturally_isomorphic(f, g)
                        if a != b:
                            return False, "homotopy and natural isomorphism disagree"
        return True, f"homotopic = naturally isomorphic on {checked} functor pairs"

    claims.append(_claim("homotopic-iff-naturally-isomorphic", homotopic_vs_natiso))

    def heq_vs_equivalence():
        checked = 0
        corpus = corpora.cat_corpus()
        for c in corpus:
            for d in corpus:
                for f in fincat.enumerate_functors(c, d):
                    checked += 1
                    a = homotopy.homotopy_equivalence(cylinder, f) is not None
                    if a != fincat.is_equivalence(f):
                        return False, "homotopy equivalence and equivalence disagree"
        return True, f"homotopy equivalences = equivalences on {checked} functors"

    claims.append(_claim("heq-iff-equivalence", heq_vs_equivalence))

    def all_fibrant():
        gens = homotopy.fibrancy_generators(setup)
        for c in corpora.cat_corpus():
            if not homotopy.is_fibrant(c, gens):
                return False, f"{c!r} is not fibrant"
        return True, "every corpus category is fibrant"

    claims.append(_claim("every-object-fibrant", all_fibrant))
    return claims


# ---------------------------------------------------------------------------
# PrOrd / Ord / Set


def _preorder_equivalence(f: finrel.RelMap) -> bool:
    x, y = f.src, f.tgt
    fully_faithful = all(
        x.related(i, j) == y.related(f.assign[i], f.assign[j])
        for i in range(x.size)
        for j in range(x.size)
    )
    ess_surjective = all(
        any(
            y.related(f.assign[i], t) and y.related(t, f.assign[i])
            for i in range(x.size)
        )
        for t in range(y.size)
    )
    return fully_faithful and ess_surjective


def suite_prord(seed: int = 0) -> list[Claim]:
    exp = _expected()["preord"]
    setup = homotopy.standard_setup("preord")
    claims = []

    def count_check():
        count = sum(1 for p in corpora.preords_up_to(3) if p.size == 3)
        if count != exp["labeled_preorders_on_3"]:
            return False, f"found {count}"
        return True, f"{count} labeled preorders on 3 elements"

    claims.append(_claim("preorder-count", count_check))

    def all_fibrant():
        gens = homotopy.fibrancy_generators(setup)
        for x in corpora.preords_up_to(3):
            if not homotopy.is_fibrant(x, gens):
                return False, f"{x!r} not fibrant"
        return True, "every preorder up to 3 elements is fibrant"

    claims.append(_claim("every-object-fibrant", all_fibrant))

    def weq_vs_equivalence():
        checked = 0
        objs = list(corpora.preords_up_to(3))
        for x in objs:
            for y in objs:
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    if homotopy.weq(f, setup) != _preorder_equivalence(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, f"weak equivalences = preorder equivalences on {checked} maps"

    claims.append(_claim("weq-iff-equivalence", weq_vs_equivalence))

    def cofibrations_are_monos():
        objs = [p for p in corpora.preords_up_to(2)]
        gens = list(setup.generators)
        for x in objs:
            for y in objs:
                for f in finrel.hom_maps(x, y):
                    if lifting.in_lbox_rbox(f, gens) != finrel.is_mono(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, "saturated left class is the monomorphisms on the small corpus"

    claims.append(_claim("saturation-gives-monos", cofibrations_are_monos))
    return claims


def suite_ord(seed: int = 0) -> list[Claim]:
    exp = _expected()["ord"]
    setup = homotopy.standard_setup("ord")
    claims = []

    def count_check():
        count = sum(1 for p in corpora.posets_up_to(3) if p.size == 3)
        if count != exp["labeled_posets_on_3"]:
            return False, f"found {count}"
        return True, f"{count} labeled posets on 3 elements"

    claims.append(_claim("poset-count", count_check))

    def rbox_is_isos():
        gens = list(setup.generators)
        objs = list(corpora.posets_up_to(3))
        for x in objs:
            for y in objs:
                for f in finrel.hom_maps(x, y):
                    if lifting.has_rlp(f, gens) != finrel.is_iso(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, "right lifting class is the isomorphisms"

    claims.append(_claim("rlp-iff-iso", rbox_is_isos))

    def weq_vs_iso():
        checked = 0
        objs = list(corpora.posets_up_to(3))
        for x in objs:
            for y in objs:
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    if homotopy.weq(f, setup) != finrel.is_iso(f):
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, f"weak equivalences = isomorphisms on {checked} maps"

    claims.append(_claim("weq-iff-iso", weq_vs_iso))
    return claims


def suite_set(seed: int = 0) -> list[Claim]:
    setup = homotopy.standard_setup("set")
    claims = []

    def rbox_is_surjections():
        gens = list(setup.generators)
        objs = list(corpora.sets_up_to(4))
        for x in objs:
            for y in objs:
                for f in finrel.hom_maps(x, y):
                    if lifting.has_rlp(f, gens) != finrel.is_surjective(f):
                        return False, "mismatch"
        return True, "right lifting class is the surjections"

    claims.append(_claim("rlp-iff-surjective", rbox_is_surjections))

    def weq_characterization():
        checked = 0
        objs = list(corpora.sets_up_to(4))
        for x in objs:
            for y in objs:
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    expect = (x.size > 0 and y.size > 0) or (x.size == 0 and y.size == 0)
                    if homotopy.weq(f, setup) != expect:
                        return False, f"counterexample {lifting.describe_arrow(f)}"
        return True, f"nonempty maps and the empty identity on {checked} maps"

    claims.append(_claim("weq-iff-nonempty-or-empty-identity", weq_characterization))

    def induced_from_preorders():
        preord_setup = homotopy.standard_setup("preord")
        induced = homotopy.induced_cylinder(preord_setup.cylinder, "set")
        ok = (
            induced.interval.flavor == "set"
            and induced.interval.size == 2
            and induced.g0.assign != induced.g1.assign
        )
        return ok, "interval reflects to the two-point set"

    claims.append(_claim("induced-interval", induced_from_preorders))
    return claims


# ---------------------------------------------------------------------------
# conjugation and cell factorization


def suite_conjugation(seed: int = 0) -> list[Claim]:
    exp = _expected()["conjugation"]
    setup = homotopy.standard_setup("graph")
    claims = []

    def conjugation():
        objs = _rsrel_small_corpus()
        maps = [f for x in objs for y in objs for f in finrel.hom_maps(x, y)]
        rng = random.Random(seed)
        pairs = exp["sample_pairs"]
        for _ in range(pairs):
            f = rng.choice(maps)
            g = rng.choice(maps)
            lhs = lifting.box_rel(homotopy.star_gamma(setup.cylinder, f), g)
            rhs = lifting.box_rel(f, homotopy.costar(setup.cylinder, g))
            if lhs != rhs:
                return False, "adjoint transposition changes the box relation"
        return True, f"box relation transposes across the adjunction on {pairs} pairs"

    claims.append(_claim("conjugate-box-transposition", conjugation))
    return claims


def suite_soa(seed: int = 0) -> list[Claim]:
    setup = homotopy.standard_setup("graph")
    gens = list(setup.generators)
    claims = []

    def factorization():
        checked = 0
        small = _rsrel_small_corpus()
        for x in small:
            for y in small:
                for f in finrel.hom_maps(x, y):
                    checked += 1
                    fact = lifting.soa_factorize(f, gens)
                    if lifting.compose(fact.left_part, fact.right_part) != f:
                        return False, "factorization does not compose to the map"
                    if not lifting.has_rlp(fact.right_part, gens):
                        return False, "right part lacks the lifting property"
                    fact.validate()
        return True, f"factored and re-validated {checked} maps"

    claims.append(_claim("cell-factorization", factorization))

    def box_route_agreement():
        small = list(corpora.graphs_up_to(2))
        for x in small:
            for y in small:
                for f in finrel.hom_maps(x, y):
                    fact = lifting.soa_factorize(f, gens)
                    direct = lifting.in_lbox_rbox(f, gens)
                    full = lifting.box_rel(f, fact.right_part)
                    if direct != full:
                        return False, "retract square disagrees with the full box relation"
        return True, "retract-square decision matches the exhaustive box relation"

    claims.append(_claim("retract-square-route", box_route_agreement))
    return claims


SUITES = {
    "rsrel": suite_rsrel,
    "eqrel": suite_eqrel,
    "cat-folk": suite_cat_folk,
    "prord": suite_prord,
    "ord": suite_ord,
    "set-indiscrete": suite_set,
    "conjugation": suite_conjugation,
    "soa": suite_soa,
}


def run_suite(name: str, seed: int = 0) -> list[Claim]:
    if name not in SUITES:
        raise KeyError(f"unknown example suite {name!r}")
    return SUITES[name](seed)
