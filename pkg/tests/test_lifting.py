import random

import pytest

from homlift import fincat as fc
from homlift import finrel as fr
from homlift import lifting as lf
from homlift.corpora import graphs_up_to
from homlift.errors import ValidationError


def rsrel_generators():
    two = fr.discrete("graph", 2)
    k2 = fr.complete_graph(2)
    return [fr.initial_map(fr.terminal("graph")), fr.make_map(two, k2, (0, 1))]


class TestFindFiller:
    def test_iso_left_always_fills(self):
        k2 = fr.complete_graph(2)
        swap = fr.make_map(k2, k2, (1, 0))
        for y in graphs_up_to(2):
            for g in fr.hom_maps(k2, y):
                for u in fr.hom_maps(k2, k2):
                    problem = lf.LiftingProblem(swap, g, u, fr.compose(fr.compose(fr.inverse(swap), u), g))
                    d = lf.find_filler(problem)
                    assert d is not None and problem.check_filler(d)

    def test_edge_extension_square(self):
        # (2 -> K2) against (K3 minus edge -> 1): every square fills
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        i1 = fr.make_map(two, k2, (0, 1))
        k3m = fr.make_object("graph", 3, [(0, 2), (1, 2)])
        g = fr.terminal_map(k3m)
        for u in fr.hom_maps(two, k3m):
            if not k3m.related(u.assign[0], u.assign[1]):
                continue
            v = fr.terminal_map(k2)
            problem = lf.LiftingProblem(i1, g, u, v)
            assert lf.find_filler(problem) is not None

    def test_triangle_completion_can_fail(self):
        # against a non-transitive target some square has no filler
        k3m = fr.make_object("graph", 3, [(0, 2), (1, 2)])
        k3 = fr.complete_graph(3)
        incl = fr.make_map(k3m, k3, (0, 1, 2))
        path = fr.make_object("graph", 3, [(0, 1), (1, 2)])
        g = fr.terminal_map(path)
        found_unfilled = False
        for u in fr.hom_maps(k3m, path):
            problem = lf.LiftingProblem(incl, g, u, fr.terminal_map(k3))
            if lf.find_filler(problem) is None:
                found_unfilled = True
        assert found_unfilled

    def test_commutation_validated(self):
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        i1 = fr.make_map(two, k2, (0, 1))
        with pytest.raises(ValidationError):
            lf.LiftingProblem(
                i1,
                fr.identity(k2),
                fr.make_map(two, k2, (0, 0)),
                fr.make_map(k2, k2, (1, 0)),
            )


class TestBoxRel:
    def test_iso_boxes_everything(self):
        k2 = fr.complete_graph(2)
        swap = fr.make_map(k2, k2, (1, 0))
        for y in graphs_up_to(2):
            for g in fr.hom_maps(k2, y):
                assert lf.box_rel(swap, g)
                assert lf.box_rel(g, swap)

    def test_point_inclusion_vs_surjectivity(self):
        i0 = fr.initial_map(fr.terminal("graph"))
        objs = list(graphs_up_to(3))
        for x in objs:
            for y in objs:
                for g in fr.hom_maps(x, y):
                    assert lf.box_rel(i0, g) == fr.is_surjective(g)

    def test_edge_inclusion_vs_fullness(self):
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        i1 = fr.make_map(two, k2, (0, 1))
        objs = list(graphs_up_to(3))
        for x in objs:
            for y in objs:
                for g in fr.hom_maps(x, y):
                    assert lf.box_rel(i1, g) == fr.is_full(g)

    def test_agrees_with_bruteforce(self):
        objs = list(graphs_up_to(2))
        maps = [f for x in objs for y in objs for f in fr.hom_maps(x, y)]
        rng = random.Random(3)
        for _ in range(150):
            f = rng.choice(maps)
            g = rng.choice(maps)
            assert lf.box_rel(f, g) == lf.box_rel_bruteforce(f, g)

    def test_invariant_under_arrow_iso(self):
        two = fr.discrete("graph", 2)
        k2 = fr.complete_graph(2)
        f = fr.make_map(two, k2, (0, 1))
        f2 = fr.make_map(two, k2, (1, 0))
        objs = list(graphs_up_to(2))
        for x in objs:
            for y in objs:
                perm = tuple(reversed(range(y.size)))
                y2 = fr.make_object(
                    "graph", y.size, [(perm[i], perm[j]) for i, j in y.pairs()]
                )
                relabel = fr.make_map(y, y2, perm)
                for g in fr.hom_maps(x, y):
                    assert lf.box_rel(f, g) == lf.box_rel(f2, g)
                    # and on the right side, against a relabeled copy of g
                    assert lf.box_rel(f, g) == lf.box_rel(f, fr.compose(g, relabel))


class TestCaps:
    def test_square_cap_raises(self):
        from homlift.config import Bounds
        from homlift.errors import SquareCapExceeded

        one = fr.terminal("graph")
        two = fr.discrete("graph", 2)
        point = fr.make_map(one, two, (0,))
        g = fr.terminal_map(fr.make_object("graph", 3, [(0, 1), (1, 2)]))
        with pytest.raises(SquareCapExceeded):
            lf.box_rel(point, g, Bounds(max_squares=1))

    def test_cell_cap_raises(self):
        from homlift.config import Bounds
        from homlift.errors import CellLimitExceeded

        gens = rsrel_generators()
        f = fr.initial_map(fr.complete_graph(2))
        with pytest.raises(CellLimitExceeded):
            lf.soa_factorize(f, gens, bounds=Bounds(max_cells=1))


class TestRlp:
    def test_identity_always(self):
        gens = rsrel_generators()
        for x in graphs_up_to(3):
            assert lf.has_rlp(fr.identity(x), gens)

    def test_cat_objects_fibrant_against_endpoints(self):
        one = fc.one_cat()
        ind2 = fc.indiscrete_cat(2)
        g0 = fc.CatFunctor(one, ind2, (0,), (0,))
        g1 = fc.CatFunctor(one, ind2, (1,), (3,))
        for c in fc.standard_cats().values():
            assert lf.has_rlp(fc.terminal_functor(c), [g0, g1])

    def test_rlp_iff_full_and_surjective(self):
        gens = rsrel_generators()
        objs = list(graphs_up_to(3))
        for x in objs:
            for y in objs:
                for f in fr.hom_maps(x, y):
                    assert lf.has_rlp(f, gens) == (fr.is_full(f) and fr.is_surjective(f))


class TestFactorization:
    def test_zero_steps_when_already_right(self):
        gens = rsrel_generators()
        f = fr.terminal_map(fr.complete_graph(2))
        fact = lf.soa_factorize(f, gens)
        assert fact.steps == ()
        assert lf.is_iso_arrow(fact.left_part)

    def test_empty_to_edge_trace(self):
        gens = rsrel_generators()
        f = fr.initial_map(fr.complete_graph(2))
        fact = lf.soa_factorize(f, gens)
        assert [s.gen_index for s in fact.steps] == [0, 0, 1]
        fact.validate()

    def test_right_part_has_rlp(self):
        gens = rsrel_generators()
        objs = list(graphs_up_to(2))
        for x in objs:
            for y in objs:
                for f in fr.hom_maps(x, y):
                    fact = lf.soa_factorize(f, gens)
                    assert lf.compose(fact.left_part, fact.right_part) == f
                    assert lf.has_rlp(fact.right_part, gens)
                    fact.validate()

    def test_cat_not_supported(self):
        one = fc.one_cat()
        with pytest.raises(ValidationError):
            lf.soa_factorize(fc.cat_identity(one), [fc.cat_identity(one)])


class TestLboxRbox:
    def test_isos_always_in(self):
        gens = rsrel_generators()
        k2 = fr.complete_graph(2)
        assert lf.in_lbox_rbox(fr.make_map(k2, k2, (1, 0)), gens)

    def test_iff_mono_small(self):
        gens = rsrel_generators()
        objs = list(graphs_up_to(3))
        for x in objs:
            for y in objs:
                for f in fr.hom_maps(x, y):
                    assert lf.in_lbox_rbox(f, gens) == fr.is_mono(f)

    def test_matches_full_box_relation(self):
        gens = rsrel_generators()
        objs = list(graphs_up_to(2))
        for x in objs:
            for y in objs:
                for f in fr.hom_maps(x, y):
                    fact = lf.soa_factorize(f, gens)
                    assert lf.in_lbox_rbox(f, gens) == lf.box_rel(f, fact.right_part)

    def test_closed_under_composition_sampled(self):
        gens = rsrel_generators()
        objs = list(graphs_up_to(2))
        rng = random.Random(11)
        maps = [f for x in objs for y in objs for f in fr.hom_maps(x, y)]
        members = [f for f in maps if lf.in_lbox_rbox(f, gens)]
        for _ in range(100):
            f = rng.choice(members)
            gs = [g for g in members if g.src == f.tgt]
            if not gs:
                continue
            g = rng.choice(gs)
            assert lf.in_lbox_rbox(fr.compose(f, g), gens)
