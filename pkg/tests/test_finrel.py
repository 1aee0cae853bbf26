import itertools

import pytest
from hypothesis import given, settings, strategies as st

from homlift import finrel as fr
from homlift.corpora import graphs_up_to, posets_up_to, preords_up_to
from homlift.errors import FlavorError, OrdAntisymmetryError, ValidationError


def brute_preorders_on(n):
    """Oracle: reflexive transitive relations on n labeled points."""
    found = []
    idx = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in itertools.product((0, 1), repeat=len(idx)):
        rows = [1 << i for i in range(n)]
        for (i, j), b in zip(idx, bits):
            if b:
                rows[i] |= 1 << j
        transitive = all(
            not ((rows[i] >> j) & 1 and (rows[j] >> k) & 1 and not (rows[i] >> k) & 1)
            for i in range(n)
            for j in range(n)
            for k in range(n)
        )
        if transitive:
            found.append(tuple(rows))
    return found


class TestMakeObject:
    def test_empty_graph_is_initial(self):
        e = fr.make_object("graph", 0, ())
        assert e.size == 0 and e.rel == ()

    def test_k4_minus_edge(self):
        pairs = [(i, j) for i in range(4) for j in range(4) if {i, j} != {2, 3} and i != j]
        k4m = fr.make_object("graph", 4, pairs)
        assert k4m.size == 4
        assert k4m.edge_count() == 5
        assert k4m == fr.complete_graph_minus_edge(4)

    def test_preorders_on_three_points(self):
        # frozen from the brute-force enumeration oracle
        oracle = brute_preorders_on(3)
        assert len(oracle) == 29
        built = {p.rel for p in preords_up_to(3) if p.size == 3}
        assert built == set(oracle)

    def test_posets_on_three_points(self):
        assert sum(1 for p in posets_up_to(3) if p.size == 3) == 19

    def test_graph_closure_symmetrizes(self):
        g = fr.make_object("graph", 2, [(0, 1)])
        assert g.related(1, 0)

    def test_ord_cycle_raises(self):
        with pytest.raises(OrdAntisymmetryError):
            fr.make_object("ord", 2, [(0, 1), (1, 0)])

    def test_ord_cycle_via_transitivity_raises(self):
        with pytest.raises(OrdAntisymmetryError):
            fr.make_object("ord", 3, [(0, 1), (1, 2), (2, 0)])

    def test_set_off_diagonal_raises(self):
        with pytest.raises(FlavorError):
            fr.make_object("set", 2, [(0, 1)])

    @given(
        st.integers(0, 4),
        st.sampled_from(["graph", "preord", "eqrel"]),
        st.data(),
    )
    @settings(max_examples=120, deadline=None)
    def test_closure_idempotent(self, size, flavor, data):
        pairs = data.draw(
            st.lists(
                st.tuples(st.integers(0, max(size - 1, 0)), st.integers(0, max(size - 1, 0))),
                max_size=8,
            )
        ) if size else []
        obj = fr.make_object(flavor, size, pairs)
        again = fr.make_object(flavor, size, [(i, j) for i, j in obj.pairs()])
        assert again == obj


class TestMakeMap:
    def test_identity(self):
        k2 = fr.complete_graph(2)
        f = fr.make_map(k2, k2, (0, 1))
        assert fr.is_iso(f) and fr.is_mono(f) and fr.is_epi(f) and fr.is_full(f)

    def test_degree_three_collapse_validates(self):
        k4m = fr.complete_graph_minus_edge(4)
        k3m = fr.make_object("graph", 3, [(0, 2), (1, 2)])
        # vertices 0,1 of k4m have degree 3; send them to the apex of k3m
        f = fr.make_map(k4m, k3m, (2, 2, 0, 1))
        assert fr.is_surjective(f)

    def test_non_preserving_raises(self):
        k2 = fr.complete_graph(2)
        two = fr.discrete("graph", 2)
        with pytest.raises(ValidationError):
            fr.make_map(k2, two, (0, 1))

    def test_everything_maps_into_indiscrete(self):
        # oracle: every assignment into an indiscrete target validates
        ind = fr.indiscrete("graph", 3)
        for x in graphs_up_to(3):
            for assign in itertools.product(range(3), repeat=x.size):
                fr.make_map(x, ind, assign)


class TestProductCoproduct:
    def test_discrete_times_complete(self):
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        pr = fr.product(two, k2)
        assert pr.obj.size == 4 and pr.obj.edge_count() == 2

    def test_k2_squared_is_k4(self):
        k2 = fr.complete_graph(2)
        pr = fr.product(k2, k2)
        assert pr.obj == fr.complete_graph(4)

    def test_product_universal_property(self):
        objs = list(graphs_up_to(2)) + [fr.make_object("preord", 2, [(0, 1)])]
        for x in objs:
            for y in objs:
                if x.flavor != y.flavor:
                    continue
                pr = fr.product(x, y)
                for t in objs:
                    if t.flavor != x.flavor:
                        continue
                    for f in fr.hom_maps(t, x):
                        for g in fr.hom_maps(t, y):
                            m = pr.pair(f, g)
                            assert fr.compose(m, pr.proj1) == f
                            assert fr.compose(m, pr.proj2) == g
                            others = [
                                h
                                for h in fr.hom_maps(t, pr.obj)
                                if fr.compose(h, pr.proj1) == f
                                and fr.compose(h, pr.proj2) == g
                            ]
                            assert others == [m]

    def test_coproduct_with_empty(self):
        x = fr.complete_graph_minus_edge(3)
        cp = fr.coproduct(x, fr.initial("graph"))
        assert fr.is_iso(cp.inj1)

    def test_hom_counting_product(self):
        # |hom(T, XxY)| = |hom(T,X)| * |hom(T,Y)|
        objs = list(graphs_up_to(2))
        for x in objs:
            for y in objs:
                pr = fr.product(x, y)
                for t in objs:
                    assert fr.hom_count(t, pr.obj) == fr.hom_count(t, x) * fr.hom_count(t, y)


class TestExponential:
    def test_power_of_point(self):
        one = fr.terminal("graph")
        y = fr.complete_graph_minus_edge(3)
        ex = fr.exponential(one, y)
        assert ex.obj.size == y.size
        assert fr.iso_search(ex.obj, y) is not None

    def test_two_to_k2_full(self):
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        ex = fr.exponential(two, k2)
        assert ex.obj.size == 4
        assert ex.obj.is_indiscrete()

    def test_transitive_target_gives_transitive_relation(self):
        base = fr.make_object("graph", 2, [(0, 1)])
        for y in graphs_up_to(3):
            if fr.is_transitive(y):
                assert fr.is_transitive(fr.exponential(base, y).obj)

    def test_adjunction_bijection(self):
        import random

        objs = list(graphs_up_to(3))
        rng = random.Random(17)
        for _ in range(140):
            x, y, z = rng.choice(objs), rng.choice(objs), rng.choice(objs)
            ex = fr.exponential(y, z)
            pr = fr.product(x, y)
            lhs = fr.hom_maps(pr.obj, z)
            transposed = {fr.curry(f, x, y, ex) for f in lhs}
            assert len(transposed) == len(lhs)
            assert transposed == set(fr.hom_maps(x, ex.obj))

    def test_adjunction_round_trip(self):
        objs = list(graphs_up_to(2)) + [
            fr.make_object("eqrel", 2, [(0, 1)]),
            fr.make_object("preord", 2, [(0, 1)]),
        ]
        for x in objs:
            for y in objs:
                if y.flavor != x.flavor:
                    continue
                for z in objs:
                    if z.flavor != x.flavor:
                        continue
                    pr = fr.product(x, y)
                    ex = fr.exponential(y, z)
                    for f in fr.hom_maps(pr.obj, z):
                        assert fr.uncurry(fr.curry(f, x, y, ex), x, y, ex) == f

    def test_eval_universal(self):
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        ex = fr.exponential(two, k2)
        pr = fr.product(ex.obj, two)
        for idx, carrier in enumerate(ex.carrier):
            for j in range(two.size):
                assert ex.ev.assign[idx * two.size + j] == carrier[j]


class TestPushoutPullback:
    def test_pushout_along_identity(self):
        k2 = fr.complete_graph(2)
        two = fr.discrete("graph", 2)
        f = fr.make_map(two, k2, (0, 1))
        po = fr.pushout(f, fr.identity(two))
        assert fr.is_iso(po.inj_left)

    def test_k4_minus_collapse_gives_k3_pair(self):
        k4m = fr.complete_graph_minus_edge(4)
        k4 = fr.complete_graph(4)
        incl = fr.make_map(k4m, k4, (0, 1, 2, 3))
        k3m = fr.make_object("graph", 3, [(0, 2), (1, 2)])
        collapse = fr.make_map(k4m, k3m, (2, 2, 0, 1))
        po = fr.pushout(incl, collapse)
        assert po.obj == fr.complete_graph(3)
        k3 = fr.complete_graph(3)
        expected = fr.make_map(k3m, k3, (0, 1, 2))
        assert fr.arrow_iso(po.inj_right, expected) is not None

    def test_edge_attachment_oracle(self):
        # pushing out the edge generator along 2 -> z inserts one edge
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        gen = fr.make_map(two, k2, (0, 1))
        for z in graphs_up_to(3):
            for u in fr.hom_maps(two, z):
                po = fr.pushout(gen, u)
                direct = fr.make_object(
                    "graph",
                    z.size,
                    list(z.pairs()) + [(u.assign[0], u.assign[1])],
                )
                relabel = fr.make_map(direct, po.obj, po.inj_right.assign)
                assert fr.is_iso(relabel)

    def test_pushout_universal_property(self):
        objs = list(graphs_up_to(2))
        probes = list(graphs_up_to(3))
        for a in objs:
            for b in objs:
                for c in objs:
                    for f in fr.hom_maps(a, b):
                        for g in fr.hom_maps(a, c):
                            po = fr.pushout(f, g)
                            for t in probes[:12]:
                                for tb in fr.hom_maps(b, t):
                                    for tc in fr.hom_maps(c, t):
                                        if fr.compose(f, tb) != fr.compose(g, tc):
                                            continue
                                        m = po.mediate(tb, tc)
                                        assert fr.compose(po.inj_left, m) == tb
                                        assert fr.compose(po.inj_right, m) == tc

    def test_ord_pushout_antisymmetry_error(self):
        chain = fr.make_object("ord", 2, [(0, 1)])
        two = fr.discrete("ord", 2)
        up = fr.make_map(two, chain, (0, 1))
        down = fr.make_map(two, chain, (1, 0))
        with pytest.raises(OrdAntisymmetryError):
            fr.pushout(up, down)

    def test_pullback(self):
        k2 = fr.complete_graph(2)
        one = fr.terminal("graph")
        f = fr.terminal_map(k2)
        pb = fr.pullback(f, f)
        assert pb.obj == fr.complete_graph(4)
        for t in graphs_up_to(2):
            for u in fr.hom_maps(t, k2):
                for v in fr.hom_maps(t, k2):
                    m = pb.mediate(u, v)
                    assert fr.compose(m, pb.proj_left) == u
                    assert fr.compose(m, pb.proj_right) == v


class TestPi0Reflect:
    def test_discrete_unchanged(self):
        x = fr.discrete("graph", 3)
        comp, q = fr.pi0(x)
        assert comp.size == 3 and fr.is_iso(q)

    def test_complete_collapses(self):
        comp, _ = fr.pi0(fr.complete_graph(4))
        assert comp.size == 1

    def test_path_collapses(self):
        p4 = fr.make_object("graph", 4, [(0, 1), (1, 2), (2, 3)])
        comp, _ = fr.pi0(p4)
        assert comp.size == 1

    def test_pi0_idempotent(self):
        for x in graphs_up_to(3):
            comp, q = fr.pi0(x)
            comp2, q2 = fr.pi0(comp)
            assert comp2.size == comp.size and fr.is_iso(q2)

    def test_pi0_of_quotient_map_is_iso(self):
        for x in graphs_up_to(3):
            _, q = fr.pi0(x)
            assert fr.pi0_bijective(q)

    def test_reflect_transitive_graph_fixed(self):
        k3 = fr.complete_graph(3)
        refl, unit = fr.reflect(k3, "eqrel")
        assert refl == k3 and fr.is_iso(unit)

    def test_reflect_path_one_class(self):
        path = fr.make_object("graph", 3, [(0, 1), (1, 2)])
        refl, unit = fr.reflect(path, "eqrel")
        assert refl.is_indiscrete()

    def test_reflect_preord_to_ord_quotient(self):
        # chain 0<=1<=2 with 1<=0 identifies 0 and 1
        p = fr.make_object("preord", 3, [(0, 1), (1, 0), (1, 2)])
        refl, unit = fr.reflect(p, "ord")
        assert refl.size == 2
        assert fr.in_subcategory(refl, "ord")

    def test_reflect_universal(self):
        # every map into the subcategory factors uniquely through the unit
        for x in graphs_up_to(3):
            refl, unit = fr.reflect(x, "eqrel")
            targets = [t for t in graphs_up_to(2) if fr.is_transitive(t)]
            for t in targets:
                for f in fr.hom_maps(x, t):
                    mediators = [
                        m for m in fr.hom_maps(refl, t) if fr.compose(unit, m) == f
                    ]
                    assert len(mediators) == 1

    def test_reflect_idempotent(self):
        for x in graphs_up_to(3):
            refl, _ = fr.reflect(x, "eqrel")
            again, unit = fr.reflect(refl, "eqrel")
            assert again == refl and fr.is_iso(unit)

    def test_unsupported_reflection(self):
        with pytest.raises(fr.UnsupportedReflection):
            fr.reflect(fr.complete_graph(2), "ord")


class TestPredicates:
    def test_mono_count_into_triangle(self):
        two = fr.discrete("graph", 2)
        k3 = fr.complete_graph(3)
        monos = [f for f in fr.hom_maps(two, k3) if fr.is_mono(f)]
        assert len(monos) == 6

    def test_k2_to_point_full_surjective(self):
        f = fr.terminal_map(fr.complete_graph(2))
        assert fr.is_surjective(f) and fr.is_full(f)

    def test_path_to_point_not_full(self):
        path = fr.make_object("graph", 3, [(0, 1), (1, 2)])
        assert not fr.is_full(fr.terminal_map(path))

    def test_iso_search_finds_relabeling(self):
        a = fr.make_object("graph", 3, [(0, 1)])
        b = fr.make_object("graph", 3, [(1, 2)])
        iso = fr.iso_search(a, b)
        assert iso is not None and fr.is_iso(iso)

    def test_iso_search_distinguishes(self):
        a = fr.make_object("graph", 3, [(0, 1)])
        b = fr.make_object("graph", 3, [(0, 1), (1, 2)])
        assert fr.iso_search(a, b) is None

    def test_arrow_iso(self):
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        f = fr.make_map(two, k2, (0, 1))
        g = fr.make_map(two, k2, (1, 0))
        assert fr.arrow_iso(f, g) is not None
        h = fr.make_map(two, k2, (0, 0))
        assert fr.arrow_iso(f, h) is None

    def test_empty_identity(self):
        e = fr.initial("graph")
        f = fr.identity(e)
        assert fr.is_iso(f) and fr.is_mono(f) and fr.is_epi(f) and fr.is_full(f)
