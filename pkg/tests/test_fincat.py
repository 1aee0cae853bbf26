import pytest

from homlift import fincat as fc
from homlift.corpora import cat_corpus, cat_square_is_pushout
from homlift.errors import PushoutUnstable, ValidationError


@pytest.fixture(scope="module")
def cats():
    return fc.standard_cats()


class TestConstruction:
    def test_standard_counts(self, cats):
        assert cats["indiscrete2"].n_arr == 4
        assert cats["chain2"].n_arr == 3
        assert cats["parallel_pair"].n_arr == 4
        assert cats["zero"].n_obj == 0
        assert cats["one"].n_arr == 1

    def test_rejects_nonassociative_table(self):
        # one object, arrows {id, a, b}; ((a.a).b) = b.b = a but
        # (a.(a.b)) = a.a = b
        with pytest.raises(ValidationError):
            fc.make_category(
                1,
                [(0, 0), (0, 0), (0, 0)],
                {(1, 1): 2, (1, 2): 1, (2, 1): 1, (2, 2): 1},
                [0],
            )

    def test_rejects_missing_composite(self):
        with pytest.raises(ValidationError):
            fc.make_category(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)], {}, [0, 1, 2])

    def test_invertibility(self, cats):
        ind2 = cats["indiscrete2"]
        assert all(ind2.is_invertible(a) for a in range(ind2.n_arr))
        ch2 = cats["chain2"]
        assert not ch2.is_invertible(2)


class TestProducts:
    def test_product_with_point(self, cats):
        pr = fc.product_cat(cats["chain2"], cats["one"])
        assert fc.cat_is_iso(pr.proj1)

    def test_point_times_indiscrete(self, cats):
        pr = fc.product_cat(cats["one"], cats["indiscrete2"])
        assert fc.cat_is_iso(pr.proj2)

    def test_chain_times_indiscrete_count(self, cats):
        pr = fc.product_cat(cats["chain2"], cats["indiscrete2"])
        assert pr.obj.n_arr == 12

    def test_pairing(self, cats):
        ch2 = cats["chain2"]
        pr = fc.product_cat(ch2, ch2)
        d = pr.pair(fc.cat_identity(ch2), fc.cat_identity(ch2))
        assert fc.cat_compose(d, pr.proj1) == fc.cat_identity(ch2)

    def test_coproduct_copair(self, cats):
        ch2 = cats["chain2"]
        cp = fc.coproduct_cat(ch2, ch2)
        folded = cp.copair(fc.cat_identity(ch2), fc.cat_identity(ch2))
        assert folded.obj_map == (0, 1, 0, 1)


class TestEnumeration:
    def test_functors_from_point(self, cats):
        for c in cats.values():
            assert len(fc.enumerate_functors(cats["one"], c)) == c.n_obj

    def test_functors_from_interval_are_isos(self, cats):
        # maps out of the indiscrete pair pick an invertible arrow
        for c in cat_corpus():
            fs = fc.enumerate_functors(cats["indiscrete2"], c)
            invertible = [a for a in range(c.n_arr) if c.is_invertible(a)]
            assert len(fs) == len(invertible)

    def test_monotone_count(self, cats):
        assert len(fc.enumerate_functors(cats["chain2"], cats["chain2"])) == 3

    def test_deterministic_order(self, cats):
        fs = fc.enumerate_functors(cats["chain2"], cats["chain2"])
        assert [f.obj_map for f in fs] == sorted(f.obj_map for f in fs)

    def test_nat_transformations(self, cats):
        ch2 = cats["chain2"]
        fs = fc.enumerate_functors(ch2, ch2)
        const0 = next(f for f in fs if f.obj_map == (0, 0))
        ident = next(f for f in fs if f.obj_map == (0, 1))
        nats = fc.enumerate_nat_transformations(const0, ident)
        assert len(nats) == 1 and not nats[0].is_iso

    def test_naturality_rejected(self, cats):
        pp = cats["parallel_pair"]
        ch2 = cats["chain2"]
        f = fc.CatFunctor(pp, ch2, (0, 1), (0, 1, 2, 2))
        nats = fc.enumerate_nat_transformations(f, f)
        assert all(
            t.components[0] == ch2.ident[0] and t.components[1] == ch2.ident[1]
            for t in nats
        )


class TestEquivalence:
    def test_identity(self, cats):
        for c in cats.values():
            assert fc.is_equivalence(fc.cat_identity(c))

    def test_interval_to_point(self, cats):
        assert fc.is_equivalence(fc.terminal_functor(cats["indiscrete2"]))

    def test_chain_to_point_not(self, cats):
        assert not fc.is_equivalence(fc.terminal_functor(cats["chain2"]))

    def test_skeleton_vs_homset_oracle(self, cats):
        # no functor backwards from the point inverts the chain collapse
        ch2 = cats["chain2"]
        t = fc.terminal_functor(ch2)
        assert fc.is_full_functor(fc.cat_identity(ch2))
        assert not fc.is_full_functor(t)


class TestPushout:
    def test_along_identity(self, cats):
        ch2 = cats["chain2"]
        d2 = cats["two_discrete"]
        f = fc.CatFunctor(d2, ch2, (0, 1), (0, 1))
        po = fc.cat_pushout(f, fc.cat_identity(d2))
        assert fc.cat_is_iso(po.inj_left)

    def test_parallel_pair_from_chains(self, cats):
        d2 = cats["two_discrete"]
        ch2 = cats["chain2"]
        f = fc.CatFunctor(d2, ch2, (0, 1), (0, 1))
        po = fc.cat_pushout(f, f)
        assert po.obj.n_obj == 2 and po.obj.n_arr == 4
        assert fc.cat_arrow_iso(
            fc.cat_identity(po.obj), fc.cat_identity(cats["parallel_pair"])
        ) is not None
        probes = [cats["one"], cats["two_discrete"], cats["chain2"], cats["parallel_pair"], cats["indiscrete2"]]
        assert cat_square_is_pushout(f, f, po.inj_left, po.inj_right, probes)

    def test_mediate_functoriality(self, cats):
        d2 = cats["two_discrete"]
        ch2 = cats["chain2"]
        f = fc.CatFunctor(d2, ch2, (0, 1), (0, 1))
        po = fc.cat_pushout(f, f)
        m = po.mediate(fc.cat_identity(ch2), fc.cat_identity(ch2))
        assert fc.cat_compose(po.inj_left, m) == fc.cat_identity(ch2)
        assert fc.cat_compose(po.inj_right, m) == fc.cat_identity(ch2)

    def test_object_part_is_set_pushout(self, cats):
        d2 = cats["two_discrete"]
        ch2 = cats["chain2"]
        d3 = fc.discrete_cat(3)
        f = fc.CatFunctor(d2, ch2, (0, 1), (0, 1))
        g = fc.CatFunctor(d2, d3, (0, 2), (0, 2))
        po = fc.cat_pushout(f, g)
        # object classes come from the set-level quotient
        assert po.obj.n_obj == 3
        assert po.obj.n_arr == 4

    def test_unstable_pushout_raises(self, cats):
        # gluing both objects of the chain to the single object of the
        # free monoid on one generator is already infinite; the loop
        # presentation below never stabilizes: N as a category
        loop = fc.make_category(1, [(0, 0)], {}, [0])
        d2 = cats["two_discrete"]
        ch2 = cats["chain2"]
        f = fc.CatFunctor(d2, ch2, (0, 1), (0, 1))
        g = fc.CatFunctor(d2, loop, (0, 0), (0, 0))
        with pytest.raises(PushoutUnstable):
            fc.cat_pushout(f, g)


class TestIsoSearch:
    def test_cat_is_iso(self, cats):
        ind2 = cats["indiscrete2"]
        swap = fc.CatFunctor(ind2, ind2, (1, 0), (3, 2, 1, 0))
        assert fc.cat_is_iso(swap)

    def test_arrow_iso_endpoints(self, cats):
        one = cats["one"]
        ind2 = cats["indiscrete2"]
        g0 = fc.CatFunctor(one, ind2, (0,), (0,))
        g1 = fc.CatFunctor(one, ind2, (1,), (3,))
        assert fc.cat_arrow_iso(g0, g1) is not None
