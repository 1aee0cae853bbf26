"""The box relation, lifting classes and cell factorizations.

An Arrow is either a relational map or a functor; the module dispatches on
the type so the box relation, right/left lifting class membership and the
finite-scale cell factorization work uniformly over both backends.

Square orientation, with composition written "first;then":

        A --u--> X
      f |        | g          f boxes g  iff  every commuting square
        B --v--> Y            admits d: B -> X with f;d = u and d;g = v
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from . import fincat, finrel
from .config import DEFAULT_BOUNDS, Bounds
from .errors import CellLimitExceeded, SquareCapExceeded, ValidationError

Arrow = Union[finrel.RelMap, fincat.CatFunctor]


# ---------------------------------------------------------------------------
# uniform arrow interface


def is_rel(f: Arrow) -> bool:
    return isinstance(f, finrel.RelMap)


def dom(f: Arrow):
    return f.src


def cod(f: Arrow):
    return f.tgt


def compose(f: Arrow, g: Arrow) -> Arrow:
    if is_rel(f):
        return finrel.compose(f, g)
    return fincat.cat_compose(f, g)


def identity_arrow(x) -> Arrow:
    if isinstance(x, finrel.RelObject):
        return finrel.identity(x)
    return fincat.cat_identity(x)


def is_iso_arrow(f: Arrow) -> bool:
    return finrel.is_iso(f) if is_rel(f) else fincat.cat_is_iso(f)


def terminal_arrow(x) -> Arrow:
    if isinstance(x, finrel.RelObject):
        return finrel.terminal_map(x)
    return fincat.terminal_functor(x)


def hom_iter(x, y) -> Iterator[Arrow]:
    if isinstance(x, finrel.RelObject):
        yield from finrel.hom_maps(x, y)
    else:
        yield from fincat.enumerate_functors(x, y)


def search_arrows(x, y, pins=None, fibers=None) -> Iterator[Arrow]:
    if isinstance(x, finrel.RelObject):
        yield from finrel.search_maps(x, y, pins=pins, fibers=fibers)
    else:
        yield from fincat.search_functors(x, y, pins=pins, fibers=fibers)


def arrows_isomorphic(f: Arrow, g: Arrow) -> bool:
    if is_rel(f) != is_rel(g):
        return False
    if is_rel(f):
        return finrel.arrow_iso(f, g) is not None
    return fincat.cat_arrow_iso(f, g) is not None


def describe_arrow(f: Arrow) -> str:
    if is_rel(f):
        return f"{f.src.flavor}[{f.src.size}->{f.tgt.size}]{list(f.assign)}"
    return f"cat[{f.src.n_obj}/{f.src.n_arr}->{f.tgt.n_obj}/{f.tgt.n_arr}]"


# ---------------------------------------------------------------------------
# lifting problems


@dataclass(frozen=True)
class LiftingProblem:
    left: Arrow  # f: A -> B
    right: Arrow  # g: X -> Y
    top: Arrow  # u: A -> X
    bottom: Arrow  # v: B -> Y

    def __post_init__(self):
        if compose(self.left, self.bottom) != compose(self.top, self.right):
            raise ValidationError("lifting square does not commute")

    def check_filler(self, d: Arrow) -> bool:
        return (
            compose(self.left, d) == self.top
            and compose(d, self.right) == self.bottom
        )


def find_filler(problem: LiftingProblem) -> Optional[Arrow]:
    """First diagonal in canonical order, or None after exhaustive search."""
    for d in search_arrows(
        cod(problem.left),
        dom(problem.right),
        pins=[(problem.left, problem.top)],
        fibers=[(problem.right, problem.bottom)],
    ):
        return d
    return None


def has_filler(problem: LiftingProblem) -> bool:
    return find_filler(problem) is not None


def _rel_carrier_bijective(f: finrel.RelMap) -> bool:
    return f.src.size == f.tgt.size and len(set(f.assign)) == f.src.size


def _transported_domain(f: finrel.RelMap) -> finrel.RelObject:
    """dom f relabeled onto the carrier of cod f along the bijection f."""
    n = f.tgt.size
    rows = [0] * n
    for i in range(f.src.size):
        r = f.src.rel[i]
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            rows[f.assign[i]] |= 1 << f.assign[j]
    return finrel.RelObject(f.src.flavor, n, tuple(rows))


from functools import lru_cache


@lru_cache(maxsize=200000)
def _no_violating_map(weak, strong, tgt, t_obj, t_assign) -> bool:
    return (
        finrel.find_violating_map(weak, strong, tgt, transport=(t_obj, t_assign))
        is None
    )


def _box_rel_carrier_bijective(f: finrel.RelMap, g: finrel.RelMap) -> bool:
    """Box test when f is bijective on carriers.

    The only filler candidate for a square (u, v) is u transported along
    the carrier bijection; the squares without fillers are exactly the
    maps that respect dom(f) but break cod(f) while their g-image still
    respects cod(f).
    """
    weak = _transported_domain(f)
    return _no_violating_map(weak, f.tgt, g.src, g.tgt, tuple(g.assign))


def iter_squares(
    f: Arrow, g: Arrow, bounds: Bounds = DEFAULT_BOUNDS
) -> Iterator[LiftingProblem]:
    """All commuting squares with f on the left and g on the right."""
    count = 0
    for u in hom_iter(dom(f), dom(g)):
        ug = compose(u, g)
        for v in search_arrows(cod(f), cod(g), pins=[(f, ug)]):
            count += 1
            if count > bounds.max_squares:
                raise SquareCapExceeded(
                    "max_squares", bounds.max_squares, "square enumeration"
                )
            yield LiftingProblem(f, g, u, v)


def box_rel(f: Arrow, g: Arrow, bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    """f boxes g: every commuting square has a diagonal filler."""
    if is_rel(f) and is_rel(g) and _rel_carrier_bijective(f):
        return _box_rel_carrier_bijective(f, g)
    for problem in iter_squares(f, g, bounds):
        if find_filler(problem) is None:
            return False
    return True


def box_rel_bruteforce(f: Arrow, g: Arrow) -> bool:
    """Oracle variant: enumerate all squares and all diagonals directly."""
    for u in hom_iter(dom(f), dom(g)):
        for v in hom_iter(cod(f), cod(g)):
            if compose(f, v) != compose(u, g):
                continue
            if not any(
                compose(f, d) == u and compose(d, g) == v
                for d in hom_iter(cod(f), dom(g))
            ):
                return False
    return True


def has_rlp(g: Arrow, gens: Sequence[Arrow], bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    return all(box_rel(i, g, bounds) for i in gens)


def has_llp(f: Arrow, gens: Sequence[Arrow], bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    return all(box_rel(f, g, bounds) for g in gens)


# ---------------------------------------------------------------------------
# cell factorization (finite-scale small object argument)


@dataclass(frozen=True)
class CellStep:
    gen_index: int
    generator: Arrow
    attach: Arrow  # dom(generator) -> current object
    include: Arrow  # current object -> next object
    cell: Arrow  # cod(generator) -> next object


@dataclass(frozen=True)
class CellFactorization:
    original: Arrow
    steps: tuple[CellStep, ...]
    left_part: Arrow
    right_part: Arrow

    def validate(self) -> None:
        """Re-check the recorded data: composites and one pushout per step."""
        if compose(self.left_part, self.right_part) != self.original:
            raise ValidationError("left;right differs from the factored map")
        acc = identity_arrow(dom(self.original))
        for step in self.steps:
            po = finrel.pushout(step.generator, step.attach)
            comparison = po.mediate(step.cell, step.include)
            if not is_iso_arrow(comparison):
                raise ValidationError("recorded step is not a pushout of its generator")
            acc = compose(acc, step.include)
        if acc != self.left_part:
            raise ValidationError("left part is not the composite of the steps")


def _unfilled_squares(
    gen: finrel.RelMap, right: finrel.RelMap, bounds: Bounds
) -> Iterator[LiftingProblem]:
    """Squares of gen against right with no filler, one at a time.

    For carrier-bijective generators a violating assignment is searched
    directly (re-run after each attachment upstream); otherwise squares
    are enumerated and tested.
    """
    if _rel_carrier_bijective(gen):
        weak = _transported_domain(gen)
        witness = finrel.find_violating_map(
            weak, gen.tgt, right.src, transport=(right.tgt, tuple(right.assign))
        )
        if witness is not None:
            u = finrel.RelMap(
                gen.src, right.src, tuple(witness[gen.assign[i]] for i in range(gen.src.size))
            )
            v_assign = tuple(right.assign[witness[k]] for k in range(gen.tgt.size))
            v = finrel.RelMap(gen.tgt, right.tgt, v_assign)
            yield LiftingProblem(gen, right, u, v)
        return
    for problem in iter_squares(gen, right, bounds):
        if find_filler(problem) is None:
            yield problem


def soa_factorize(
    f: Arrow,
    gens: Sequence[Arrow],
    max_steps: Optional[int] = None,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> CellFactorization:
    """Factor f as (composite of generator-cell pushouts); (map with RLP).

    Each saturation pass sweeps every generator; unfilled squares found
    during the pass are filled by attaching the generator along its top
    map, re-checking before each attachment.  Relational flavors only.
    """
    if not is_rel(f):
        raise ValidationError("cell factorization is only supported for relational maps")
    max_steps = bounds.max_steps if max_steps is None else max_steps
    left = identity_arrow(dom(f))
    right = f
    steps: list[CellStep] = []
    for _ in range(max_steps):
        if has_rlp(right, gens, bounds):
            return CellFactorization(f, tuple(steps), left, right)
        for gi, gen in enumerate(gens):
            while True:
                if len(steps) >= bounds.max_cells:
                    raise CellLimitExceeded(
                        "max_cells", bounds.max_cells, "cell factorization"
                    )
                found = None
                for problem in _unfilled_squares(gen, right, bounds):
                    found = problem
                    break
                if found is None:
                    break
                po = finrel.pushout(gen, found.top)
                steps.append(
                    CellStep(gi, gen, found.top, po.inj_right, po.inj_left)
                )
                left = compose(left, po.inj_right)
                right = po.mediate(found.bottom, right)
    if has_rlp(right, gens, bounds):
        return CellFactorization(f, tuple(steps), left, right)
    raise CellLimitExceeded("max_steps", max_steps, "saturation did not reach the lifting property")


def in_lbox_rbox(
    f: Arrow,
    gens: Sequence[Arrow],
    max_steps: Optional[int] = None,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> bool:
    """Membership in the left box of the right box of the generators.

    Factor f = x;y with y in the right class; f lies in lbox(rbox gens)
    exactly when the retract square of the factorization has a filler,
    which is the single square deciding f box y.
    """
    fact = soa_factorize(f, gens, max_steps, bounds)
    problem = LiftingProblem(
        f, fact.right_part, fact.left_part, identity_arrow(cod(f))
    )
    return find_filler(problem) is not None
