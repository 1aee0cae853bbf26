import random

import pytest

from homlift import fincat as fc
from homlift import finrel as fr
from homlift import homotopy as ht
from homlift import lifting as lf
from homlift.corpora import (
    cat_corpus,
    graphs_up_to,
    is_inclusion_into_complete,
    transitive_graphs_up_to,
)
from homlift.errors import ValidationError


@pytest.fixture(scope="module")
def rs():
    return ht.standard_setup("graph")


class TestCylinder:
    def test_factorization_law(self, rs):
        for x in graphs_up_to(3):
            gx = ht.gamma(rs.cylinder, x)
            sx = ht.sigma(rs.cylinder, x)
            assert lf.compose(gx, sx) == ht.codiagonal(rs.cylinder, x)

    def test_gamma_is_mono(self, rs):
        for x in graphs_up_to(3):
            assert fr.is_mono(ht.gamma(rs.cylinder, x))

    def test_collapse_of_point(self, rs):
        one = fr.terminal("graph")
        s1 = ht.sigma(rs.cylinder, one)
        assert s1.src.size == 2 and s1.tgt.size == 1

    def test_degenerate_interval_rejected_for_monos(self):
        with pytest.raises(ValidationError):
            ht.rel_interval_cylinder(fr.terminal("graph"), 0, 0, cof="mono")

    def test_degenerate_interval_fine_for_all(self):
        c = ht.rel_interval_cylinder(fr.terminal("ord"), 0, 0, cof="all")
        assert c.interval.size == 1

    def test_cyl_is_product_with_interval(self, rs):
        k3 = fr.complete_graph(3)
        assert ht.cyl(rs.cylinder, k3) == fr.product(k3, rs.cylinder.interval).obj


class TestStar:
    def test_star_of_iso_is_iso(self, rs):
        k2 = fr.complete_graph(2)
        swap = fr.make_map(k2, k2, (1, 0))
        assert fr.is_iso(ht.star_gamma(rs.cylinder, swap))
        assert fr.is_iso(ht.star_gamma_k(rs.cylinder, swap, 0))

    def test_point_inclusion_star_is_endpoint(self, rs):
        i0 = fr.initial_map(fr.terminal("graph"))
        for k in (0, 1):
            s = ht.star_gamma_k(rs.cylinder, i0, k)
            expected = ht.gamma_k(rs.cylinder, fr.terminal("graph"), k)
            assert fr.arrow_iso(s, expected) is not None

    def test_edge_generator_endpoint_product(self, rs):
        # the endpoint product of (2 -> K2) is a wide connected 4-vertex
        # inclusion into K4; verified to be the pushout by the oracle in
        # the suites
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        i1 = fr.make_map(two, k2, (0, 1))
        s = ht.star_gamma_k(rs.cylinder, i1, 0)
        assert s.src.size == 4 and s.tgt == fr.complete_graph(4)
        assert fr.is_mono(s)
        assert is_inclusion_into_complete(s)
        assert s.src.edge_count() == 3

    def test_pair_product_is_carrier_bijective(self, rs):
        objs = list(graphs_up_to(2))
        for x in objs:
            for y in objs:
                for f in fr.hom_maps(x, y)[:4]:
                    s = ht.star_gamma(rs.cylinder, f)
                    assert s.src.size == s.tgt.size


class TestCostar:
    def test_costar_of_identity_is_iso(self, rs):
        k2 = fr.complete_graph(2)
        assert fr.is_iso(ht.costar(rs.cylinder, fr.identity(k2)))

    def test_path_object_map(self, rs):
        for x in graphs_up_to(3):
            c = ht.costar(rs.cylinder, fr.terminal_map(x))
            assert c.src.size == fr.hom_count(rs.cylinder.interval, x)
            assert c.tgt.size == x.size * x.size

    def test_conjugation_sampled(self, rs):
        objs = list(graphs_up_to(2))
        maps = [f for x in objs for y in objs for f in fr.hom_maps(x, y)]
        rng = random.Random(5)
        for _ in range(120):
            f = rng.choice(maps)
            g = rng.choice(maps)
            assert lf.box_rel(ht.star_gamma(rs.cylinder, f), g) == lf.box_rel(
                f, ht.costar(rs.cylinder, g)
            )

    def test_conjugation_in_preorders(self):
        from homlift.corpora import preords_up_to

        sp = ht.standard_setup("preord")
        objs = list(preords_up_to(2))
        maps = [f for x in objs for y in objs for f in fr.hom_maps(x, y)]
        rng = random.Random(6)
        for _ in range(80):
            f = rng.choice(maps)
            g = rng.choice(maps)
            assert lf.box_rel(ht.star_gamma(sp.cylinder, f), g) == lf.box_rel(
                f, ht.costar(sp.cylinder, g)
            )


class TestLevels:
    def test_empty_generators(self, rs):
        levels = ht.lambda_levels(rs.cylinder, (), (), 3)
        assert all(not level for level in levels.levels)

    def test_cat_levels(self):
        s = ht.standard_setup("cat")
        levels = ht.lambda_levels(s.cylinder, (), s.generators, 2)
        assert len(levels.levels[0]) == 2
        assert not levels.levels[1] and not levels.levels[2]

    def test_rsrel_level_shape(self, rs):
        levels = ht.lambda_levels(rs.cylinder, (), rs.generators, 2)
        for member in levels.flatten():
            assert is_inclusion_into_complete(member)

    def test_provenance_recorded(self, rs):
        levels = ht.lambda_levels(rs.cylinder, (), rs.generators, 1)
        assert all(p for p in levels.provenance[0])

    def test_iso_pruning_shrinks(self, rs):
        levels = ht.lambda_levels(rs.cylinder, (), rs.generators, 2)
        for n in range(1, len(levels.levels)):
            assert len(levels.levels[n]) <= max(len(levels.levels[n - 1]), 1)


class TestFibrant:
    def test_terminal_fibrant(self, rs):
        gens = ht.fibrancy_generators(rs)
        assert ht.is_fibrant(fr.terminal("graph"), gens)

    def test_empty_fibrant(self, rs):
        gens = ht.fibrancy_generators(rs)
        assert ht.is_fibrant(fr.initial("graph"), gens)

    def test_iff_transitive(self, rs):
        gens = ht.fibrancy_generators(rs)
        for x in graphs_up_to(4):
            assert ht.is_fibrant(x, gens) == fr.is_transitive(x)

    def test_generating_set_independence(self, rs):
        # adding the triangle generator to the base set leaves fibrancy
        # unchanged at matched depth and augmentation
        base = rs.generators
        k3m = fr.complete_graph_minus_edge(3)
        k3 = fr.complete_graph(3)
        widened = base + (fr.make_map(k3m, k3, (0, 1, 2)),)
        lv1 = ht.lambda_levels(rs.cylinder, (), base, 2)
        lv2 = ht.lambda_levels(rs.cylinder, (), widened, 2)
        extra = rs.extras
        g1 = lv1.flatten() + extra
        g2 = lv2.flatten() + extra
        for x in graphs_up_to(4):
            assert ht.is_fibrant(x, g1) == ht.is_fibrant(x, g2)


class TestHomotopy:
    def test_reflexive(self, rs):
        for x in graphs_up_to(2):
            for y in graphs_up_to(2):
                for f in fr.hom_maps(x, y):
                    w = ht.homotopic(rs.cylinder, f, f)
                    assert w is not None and w.check(f, f)

    def test_closed_form(self, rs):
        objs = list(graphs_up_to(2))
        for x in objs:
            for y in objs:
                homs = fr.hom_maps(x, y)
                for f in homs:
                    for g in homs:
                        expect = all(
                            y.related(f.assign[i], g.assign[j])
                            for i in range(x.size)
                            for j in range(x.size)
                            if x.related(i, j)
                        )
                        assert ht.are_homotopic(rs.cylinder, f, g) == expect

    def test_compatible_with_composition(self, rs):
        objs = list(graphs_up_to(2))
        rng = random.Random(2)
        maps = [f for x in objs for y in objs for f in fr.hom_maps(x, y)]
        for _ in range(200):
            f = rng.choice(maps)
            gs = [g for g in maps if g.src == f.src and g.tgt == f.tgt]
            g = rng.choice(gs)
            if not ht.are_homotopic(rs.cylinder, f, g):
                continue
            posts = [h for h in maps if h.src == f.tgt]
            if posts:
                h = rng.choice(posts)
                assert ht.are_homotopic(rs.cylinder, fr.compose(f, h), fr.compose(g, h))
            pres = [h for h in maps if h.tgt == f.src]
            if pres:
                h = rng.choice(pres)
                assert ht.are_homotopic(rs.cylinder, fr.compose(h, f), fr.compose(h, g))

    def test_cat_homotopy_is_natural_iso(self):
        s = ht.standard_setup("cat")
        ch2 = fc.chain2()
        ind2 = fc.indiscrete_cat(2)
        fs = fc.enumerate_functors(ch2, ind2)
        for f in fs:
            for g in fs:
                assert ht.are_homotopic(s.cylinder, f, g) == fc.naturally_isomorphic(f, g)

    def test_matrix_agrees_with_pairwise(self, rs):
        import random

        objs = list(graphs_up_to(3))
        rng = random.Random(21)
        for _ in range(25):
            x, y = rng.choice(objs), rng.choice(objs)
            homs, rows = ht.homotopy_matrix(rs.cylinder, x, y)
            for i, f in enumerate(homs):
                for j, g in enumerate(homs):
                    assert bool((rows[i] >> j) & 1) == ht.are_homotopic(
                        rs.cylinder, f, g
                    )
        # and across a non-symmetric flavor
        sp = ht.standard_setup("preord")
        chain = fr.make_object("preord", 2, [(0, 1)])
        homs, rows = ht.homotopy_matrix(sp.cylinder, chain, chain)
        for i, f in enumerate(homs):
            for j, g in enumerate(homs):
                assert bool((rows[i] >> j) & 1) == ht.are_homotopic(sp.cylinder, f, g)


class TestHomotopyEquivalence:
    def test_identity(self, rs):
        k3 = fr.complete_graph(3)
        res = ht.homotopy_equivalence(rs.cylinder, fr.identity(k3))
        assert res is not None
        g, w1, w2 = res
        assert w1.check(fr.identity(k3), fr.compose(fr.identity(k3), g))

    def test_transitive_graphs_iff_components(self, rs):
        trans = list(transitive_graphs_up_to(3))
        for x in trans:
            for y in trans:
                for f in fr.hom_maps(x, y):
                    a = ht.homotopy_equivalence(rs.cylinder, f) is not None
                    assert a == fr.pi0_bijective(f)

    def test_cat_equivalences(self):
        s = ht.standard_setup("cat")
        for c in cat_corpus()[:8]:
            for d in cat_corpus()[:8]:
                for f in fc.enumerate_functors(c, d):
                    a = ht.homotopy_equivalence(s.cylinder, f) is not None
                    assert a == fc.is_equivalence(f)


class TestWeq:
    def test_identity_weq(self, rs):
        for x in graphs_up_to(2):
            assert ht.weq(fr.identity(x), rs)

    def test_set_characterization(self):
        s = ht.standard_setup("set")
        for n in range(3):
            for m in range(3):
                x, y = fr.discrete("set", n), fr.discrete("set", m)
                for f in fr.hom_maps(x, y):
                    expect = (n > 0 and m > 0) or (n == 0 and m == 0)
                    assert ht.weq(f, s) == expect

    def test_two_out_of_three_sampled(self, rs):
        objs = list(transitive_graphs_up_to(3))
        rng = random.Random(9)
        for _ in range(120):
            x = rng.choice(objs)
            y = rng.choice(objs)
            z = rng.choice(objs)
            fs = fr.hom_maps(x, y)
            gs = fr.hom_maps(y, z)
            if not fs or not gs:
                continue
            f = rng.choice(fs)
            g = rng.choice(gs)
            wf, wg = ht.weq(f, rs), ht.weq(g, rs)
            wfg = ht.weq(fr.compose(f, g), rs)
            votes = int(wf) + int(wg) + int(wfg)
            assert votes != 2

    def test_undecidable_reported_not_guessed(self, rs):
        from homlift.config import Bounds
        from homlift.errors import BoundExceeded

        tight = Bounds(max_cells=0)
        path = fr.make_object("graph", 3, [(0, 1), (1, 2)])
        with pytest.raises(BoundExceeded):
            ht.weq(fr.terminal_map(path), rs, tight)


class TestDualSdr:
    def test_identity(self, rs):
        k2 = fr.complete_graph(2)
        res = ht.is_dual_sdr(rs.cylinder, fr.identity(k2))
        assert res is not None

    def test_members_of_right_class_are_dsdr(self, rs):
        gens = list(rs.generators)
        objs = list(graphs_up_to(3))
        for x in objs:
            for y in objs:
                for f in fr.hom_maps(x, y):
                    if lf.has_rlp(f, gens):
                        assert ht.is_dual_sdr(rs.cylinder, f) is not None

    def test_dsdr_iff_rlp_for_level_fibrations(self, rs):
        fib_gens = ht.fibrancy_generators(rs)
        gens = list(rs.generators)
        objs = list(graphs_up_to(3))
        for x in objs:
            for y in objs:
                for f in fr.hom_maps(x, y):
                    if lf.has_rlp(f, fib_gens):
                        dsdr = ht.is_dual_sdr(rs.cylinder, f) is not None
                        assert dsdr == lf.has_rlp(f, gens)

    def test_witness_equations(self, rs):
        k2 = fr.complete_graph(2)
        f = fr.terminal_map(k2)
        g, h = ht.is_dual_sdr(rs.cylinder, f)
        assert fr.compose(g, f) == fr.identity(f.tgt)
        gx = ht.gamma(rs.cylinder, k2)
        cop = fr.coproduct(k2, k2)
        want = cop.copair(fr.identity(k2), fr.compose(f, g))
        assert fr.compose(gx, h) == want
        sx = ht.sigma(rs.cylinder, k2)
        assert fr.compose(h, f) == fr.compose(sx, f)


class TestInducedCylinder:
    def test_graph_to_eqrel(self, rs):
        induced = ht.induced_cylinder(rs.cylinder, "eqrel")
        assert induced.interval.flavor == "eqrel"
        assert induced.interval.size == 2 and induced.interval.is_indiscrete()

    def test_preord_to_set(self):
        s = ht.standard_setup("preord")
        induced = ht.induced_cylinder(s.cylinder, "set")
        assert induced.interval.flavor == "set" and induced.interval.size == 2

    def test_preord_to_ord_degenerate(self):
        s = ht.standard_setup("preord")
        induced = ht.induced_cylinder(s.cylinder, "ord")
        assert induced.interval.size == 1 and induced.cof == "all"

    def test_homotopy_agreement_small(self, rs):
        induced = ht.induced_cylinder(rs.cylinder, "eqrel")
        trans = list(transitive_graphs_up_to(3))
        for x in trans:
            xe = fr.convert_flavor(x, "eqrel")
            for y in trans:
                ye = fr.convert_flavor(y, "eqrel")
                homs = fr.hom_maps(x, y)
                for f in homs:
                    for g in homs:
                        fe = fr.make_map(xe, ye, f.assign)
                        ge = fr.make_map(xe, ye, g.assign)
                        assert ht.are_homotopic(rs.cylinder, f, g) == ht.are_homotopic(
                            induced, fe, ge
                        )


class TestCartesian:
    def test_rsrel_passes(self, rs):
        assert ht.check_cartesian(rs.cylinder, rs.generators).passed

    def test_cat_passes(self):
        s = ht.standard_setup("cat")
        assert ht.check_cartesian(s.cylinder, s.generators).passed

    def test_ord_degenerate_passes(self):
        s = ht.standard_setup("ord")
        assert ht.check_cartesian(s.cylinder, s.generators).passed

    def test_report_lists_failures(self, rs):
        # a non-mono against the mono class shows up in the report
        k2 = fr.complete_graph(2)
        bad = fr.make_map(k2, fr.terminal("graph"), (0, 0))
        report = ht.check_cartesian(rs.cylinder, [bad])
        assert not report.passed and report.failures()
