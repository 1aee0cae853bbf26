"""Exhaustive small corpora and brute-force universal-property oracles.

The example suites and the test suite both draw on these: every labeled
object of a given flavor up to a size bound, and pushout verification by
testing all cocones into a family of probe objects.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from . import fincat, finrel


def graphs_up_to(n: int) -> Iterator[finrel.RelObject]:
    for size in range(n + 1):
        idx = [(i, j) for i in range(size) for j in range(i + 1, size)]
        for bits in itertools.product((0, 1), repeat=len(idx)):
            pairs = [p for p, b in zip(idx, bits) if b]
            yield finrel.make_object("graph", size, pairs)


def transitive_graphs_up_to(n: int) -> Iterator[finrel.RelObject]:
    for g in graphs_up_to(n):
        if finrel.is_transitive(g):
            yield g


def eqrels_up_to(n: int) -> Iterator[finrel.RelObject]:
    seen = set()
    for size in range(n + 1):
        idx = [(i, j) for i in range(size) for j in range(i + 1, size)]
        for bits in itertools.product((0, 1), repeat=len(idx)):
            pairs = [p for p, b in zip(idx, bits) if b]
            o = finrel.make_object("eqrel", size, pairs)
            if o not in seen:
                seen.add(o)
                yield o


def preords_up_to(n: int) -> Iterator[finrel.RelObject]:
    seen = set()
    for size in range(n + 1):
        idx = [(i, j) for i in range(size) for j in range(size) if i != j]
        for bits in itertools.product((0, 1), repeat=len(idx)):
            pairs = [p for p, b in zip(idx, bits) if b]
            o = finrel.make_object("preord", size, pairs)
            if o not in seen:
                seen.add(o)
                yield o


def posets_up_to(n: int) -> Iterator[finrel.RelObject]:
    seen = set()
    for size in range(n + 1):
        idx = [(i, j) for i in range(size) for j in range(size) if i != j]
        for bits in itertools.product((0, 1), repeat=len(idx)):
            pairs = [p for p, b in zip(idx, bits) if b]
            try:
                o = finrel.make_object("ord", size, pairs)
            except finrel.OrdAntisymmetryError:
                continue
            if o not in seen:
                seen.add(o)
                yield o


def sets_up_to(n: int) -> Iterator[finrel.RelObject]:
    for size in range(n + 1):
        yield finrel.discrete("set", size)


def all_maps_between(objs: Sequence[finrel.RelObject]) -> Iterator[finrel.RelMap]:
    for x in objs:
        for y in objs:
            yield from finrel.hom_maps(x, y)


def cat_corpus() -> list[fincat.FinCategory]:
    """Categories with at most 3 objects and 8 arrows used by the suites."""
    ind2 = fincat.indiscrete_cat(2)
    ch2 = fincat.chain2()
    # chain of length two: 0 <= 1 <= 2
    chain3 = fincat.make_category(
        3,
        [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)],
        {(3, 4): 5},
        [0, 1, 2],
    )
    # the two-element group as a one-object category
    z2 = fincat.make_category(1, [(0, 0), (0, 0)], {(1, 1): 0}, [0])
    # the idempotent monoid {1, e} with e.e = e
    idem = fincat.make_category(1, [(0, 0), (0, 0)], {(1, 1): 1}, [0])
    one_plus_ind2 = fincat.coproduct_cat(fincat.one_cat(), ind2).obj
    one_plus_ch2 = fincat.coproduct_cat(fincat.one_cat(), ch2).obj
    return [
        fincat.zero_cat(),
        fincat.one_cat(),
        fincat.discrete_cat(2),
        fincat.discrete_cat(3),
        ch2,
        fincat.parallel_pair(),
        ind2,
        chain3,
        z2,
        idem,
        one_plus_ind2,
        one_plus_ch2,
    ]


# ---------------------------------------------------------------------------
# pushout oracles


def rel_square_is_pushout(
    f: finrel.RelMap,
    g: finrel.RelMap,
    p: finrel.RelMap,
    q: finrel.RelMap,
    probes: Sequence[finrel.RelObject],
) -> bool:
    """Does the commuting square (f; p) = (g; q) satisfy the pushout
    property against every cocone into the probe objects?"""
    if finrel.compose(f, p) != finrel.compose(g, q):
        return False
    for t in probes:
        for tb in finrel.hom_maps(f.tgt, t):
            for tc in finrel.hom_maps(g.tgt, t):
                if finrel.compose(f, tb) != finrel.compose(g, tc):
                    continue
                mediators = [
                    m
                    for m in finrel.hom_maps(p.tgt, t)
                    if finrel.compose(p, m) == tb and finrel.compose(q, m) == tc
                ]
                if len(mediators) != 1:
                    return False
    return True


def cat_square_is_pushout(
    f: fincat.CatFunctor,
    g: fincat.CatFunctor,
    p: fincat.CatFunctor,
    q: fincat.CatFunctor,
    probes: Sequence[fincat.FinCategory],
) -> bool:
    if fincat.cat_compose(f, p) != fincat.cat_compose(g, q):
        return False
    for t in probes:
        for tb in fincat.enumerate_functors(f.tgt, t):
            for tc in fincat.enumerate_functors(g.tgt, t):
                if fincat.cat_compose(f, tb) != fincat.cat_compose(g, tc):
                    continue
                mediators = [
                    m
                    for m in fincat.enumerate_functors(p.tgt, t)
                    if fincat.cat_compose(p, m) == tb and fincat.cat_compose(q, m) == tc
                ]
                if len(mediators) != 1:
                    return False
    return True


def connected(x: finrel.RelObject) -> bool:
    if x.size == 0:
        return False
    comp, _ = finrel.pi0(x)
    return comp.size == 1


def is_inclusion_into_complete(f: finrel.RelMap) -> bool:
    """Is f a mono into a complete graph from a nonempty connected domain?"""
    return (
        finrel.is_mono(f)
        and f.tgt.is_indiscrete()
        and connected(f.src)
    )
