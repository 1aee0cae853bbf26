"""Command-line front end.

Every subcommand prints one Report: the echoed query, the result (a
boolean, witness, object description or UNDECIDED), the bounds in force
and the elapsed time.  ``--format json`` emits the stable schema

    {"query": {...}, "result": ..., "witness": ...,
     "bounds": {...}, "elapsed_ms": ...}

Exit codes: 0 decided (or suite fully passed), 1 input error,
2 suite failures, 3 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import dsl, fincat, finrel, homotopy, lifting, suites
from .config import DEFAULT_BOUNDS, Bounds, bounds_dict
from .errors import BoundExceeded, HomliftError


@dataclass
class Report:
    query: dict
    result: object = None
    witness: object = None
    bounds: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    undecided_reason: Optional[str] = None

    def to_dict(self) -> dict:
        out = {
            "query": self.query,
            "result": "UNDECIDED" if self.undecided_reason else self.result,
            "bounds": self.bounds,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.undecided_reason:
            out["undecided_reason"] = self.undecided_reason
        return out

    def render_text(self) -> str:
        lines = [f"query: {self.query}"]
        if self.undecided_reason:
            lines.append(f"result: UNDECIDED ({self.undecided_reason})")
        else:
            lines.append(f"result: {self.result}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness}")
        lines.append(f"elapsed: {self.elapsed_ms:.1f} ms")
        return "\n".join(lines)


def _arrow_witness(a) -> dict:
    if isinstance(a, finrel.RelMap):
        return {"kind": "relmap", "assign": list(a.assign)}
    return {"kind": "functor", "obj_map": list(a.obj_map), "arr_map": list(a.arr_map)}


def _describe_object(x) -> dict:
    if isinstance(x, finrel.RelObject):
        return {
            "kind": "relobject",
            "flavor": x.flavor,
            "size": x.size,
            "pairs": [[i, j] for i, j in x.pairs() if i != j],
        }
    return {
        "kind": "category",
        "objects": x.n_obj,
        "arrows": [[x.arr_src[a], x.arr_tgt[a]] for a in range(x.n_arr)],
    }


def _load_workspace(args) -> dsl.Workspace:
    if not args.workspace:
        raise HomliftError("this command needs --workspace FILE")
    with open(args.workspace, "r", encoding="utf-8") as fh:
        return dsl.parse_document(fh.read())


def _get_map(ws, name):
    if name not in ws.maps:
        raise HomliftError(f"unknown map {name!r}")
    return ws.maps[name]


def _get_object(ws, name):
    if name not in ws.objects:
        raise HomliftError(f"unknown object {name!r}")
    return ws.objects[name].obj


def _get_genset(ws, args):
    if args.genset:
        if args.genset not in ws.gensets:
            raise HomliftError(f"unknown generator set {args.genset!r}")
        return ws.genset_arrows(args.genset)
    if args.standard:
        return homotopy.standard_setup(args.standard, args.depth).generators
    raise HomliftError("need --genset NAME or --standard AMBIENT")


def _get_cylinder(ws, args, fallback_from=None):
    if args.cylinder:
        if args.cylinder not in ws.cylinders:
            raise HomliftError(f"unknown cylinder {args.cylinder!r}")
        return ws.cylinders[args.cylinder]
    if len(ws.cylinders) == 1:
        return next(iter(ws.cylinders.values()))
    if args.standard:
        return homotopy.standard_setup(args.standard, args.depth).cylinder
    if fallback_from is not None:
        return homotopy.setup_for(fallback_from).cylinder
    raise HomliftError("need --cylinder NAME or --standard AMBIENT")


def _bounds(args) -> Bounds:
    b = DEFAULT_BOUNDS
    overrides = {}
    if args.max_cells is not None:
        overrides["max_cells"] = args.max_cells
    if args.depth is not None:
        overrides["depth"] = args.depth
    if args.max_squares is not None:
        overrides["max_squares"] = args.max_squares
    if not overrides:
        return b
    return Bounds(
        max_squares=overrides.get("max_squares", b.max_squares),
        max_steps=b.max_steps,
        max_cells=overrides.get("max_cells", b.max_cells),
        depth=overrides.get("depth", b.depth),
        max_word_len=b.max_word_len,
        max_classes=b.max_classes,
        size_guard=b.size_guard,
    )


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (result, witness)


def cmd_lift(ws, args, bounds):
    problem = lifting.LiftingProblem(
        _get_map(ws, args.left),
        _get_map(ws, args.right),
        _get_map(ws, args.top),
        _get_map(ws, args.bottom),
    )
    if args.check_witness:
        data = json.loads(args.check_witness)
        left = _get_map(ws, args.left)
        right = _get_map(ws, args.right)
        d = finrel.make_map(left.tgt, right.src, data["assign"])
        return problem.check_filler(d), None
    d = lifting.find_filler(problem)
    return d is not None, None if d is None else _arrow_witness(d)


def cmd_rlp(ws, args, bounds):
    return lifting.has_rlp(_get_map(ws, args.map), _get_genset(ws, args), bounds), None


def cmd_llp(ws, args, bounds):
    return lifting.has_llp(_get_map(ws, args.map), _get_genset(ws, args), bounds), None


def cmd_factor(ws, args, bounds):
    fact = lifting.soa_factorize(
        _get_map(ws, args.map), _get_genset(ws, args), bounds=bounds
    )
    fact.validate()
    return (
        {
            "cells": len(fact.steps),
            "middle": _describe_object(lifting.cod(fact.left_part)),
            "generators_used": [s.gen_index for s in fact.steps],
        },
        {
            "left": _arrow_witness(fact.left_part),
            "right": _arrow_witness(fact.right_part),
        },
    )


def cmd_star(ws, args, bounds):
    f = _get_map(ws, args.map)
    c = _get_cylinder(ws, args, fallback_from=lifting.dom(f))
    if args.k is None:
        res = homotopy.star_gamma(c, f)
    else:
        res = homotopy.star_gamma_k(c, f, args.k)
    return (
        {
            "dom": _describe_object(lifting.dom(res)),
            "cod": _describe_object(lifting.cod(res)),
        },
        _arrow_witness(res),
    )


def cmd_costar(ws, args, bounds):
    g = _get_map(ws, args.map)
    c = _get_cylinder(ws, args, fallback_from=lifting.dom(g))
    res = homotopy.costar(c, g)
    return (
        {
            "dom": _describe_object(res.src),
            "cod": _describe_object(res.tgt),
        },
        _arrow_witness(res),
    )


def cmd_lambda(ws, args, bounds):
    gens = _get_genset(ws, args)
    fallback = lifting.dom(gens[0]) if gens else None
    c = _get_cylinder(ws, args, fallback_from=fallback)
    levels = homotopy.lambda_levels(c, (), gens, bounds.depth, bounds)
    return (
        {
            "sizes": [len(l) for l in levels.levels],
            "provenance": [list(p) for p in levels.provenance],
        },
        None,
    )


def cmd_fibrant(ws, args, bounds):
    x = _get_object(ws, args.object)
    if args.genset:
        gens = ws.genset_arrows(args.genset)
    else:
        setup = homotopy.standard_setup(
            args.standard or _infer_ambient(x), bounds.depth
        )
        gens = homotopy.fibrancy_generators(setup, bounds)
    return homotopy.is_fibrant(x, gens, bounds), None


def cmd_homotopic(ws, args, bounds):
    f = _get_map(ws, args.f)
    g = _get_map(ws, args.g)
    c = _get_cylinder(ws, args, fallback_from=lifting.dom(f))
    w = homotopy.homotopic(c, f, g)
    return w is not None, None if w is None else _arrow_witness(w.h)


def cmd_heq(ws, args, bounds):
    f = _get_map(ws, args.map)
    c = _get_cylinder(ws, args, fallback_from=lifting.dom(f))
    res = homotopy.homotopy_equivalence(c, f)
    if res is None:
        return False, None
    g, w1, w2 = res
    return True, {
        "inverse": _arrow_witness(g),
        "unit": _arrow_witness(w1.h),
        "counit": _arrow_witness(w2.h),
    }


def _infer_ambient(x) -> str:
    return "cat" if isinstance(x, fincat.FinCategory) else x.flavor


def cmd_weq(ws, args, bounds):
    f = _get_map(ws, args.map)
    ambient = args.standard or _infer_ambient(lifting.dom(f))
    setup = homotopy.standard_setup(ambient, bounds.depth)
    return homotopy.weq(f, setup, bounds), None


def cmd_pi0(ws, args, bounds):
    x = _get_object(ws, args.object)
    comp, q = finrel.pi0(x)
    return {"components": comp.size}, _arrow_witness(q)


def cmd_pushout(ws, args, bounds):
    f = _get_map(ws, args.left)
    g = _get_map(ws, args.right)
    if isinstance(f, finrel.RelMap):
        po = finrel.pushout(f, g)
    else:
        po = fincat.cat_pushout(f, g, bounds.max_word_len, bounds.max_classes)
    return (
        _describe_object(po.obj),
        {
            "inj_left": _arrow_witness(po.inj_left),
            "inj_right": _arrow_witness(po.inj_right),
        },
    )


def cmd_check_cartesian(ws, args, bounds):
    gens = _get_genset(ws, args)
    c = _get_cylinder(ws, args, fallback_from=lifting.dom(gens[0]))
    report = homotopy.check_cartesian(c, gens)
    return (
        {
            "passed": report.passed,
            "entries": [
                {"generator": e.generator, "kind": e.kind, "in_class": e.in_class}
                for e in report.entries
            ],
        },
        None,
    )


def cmd_check_example(ws, args, bounds):
    claims = suites.run_suite(args.name, seed=args.seed)
    return (
        {
            "suite": args.name,
            "passed": all(c.passed for c in claims),
            "undecided": sum(c.undecided for c in claims),
            "claims": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                    "elapsed_ms": round(c.elapsed_ms, 1),
                }
                for c in claims
            ],
        },
        None,
    )


HANDLERS = {
    "lift": cmd_lift,
    "rlp": cmd_rlp,
    "llp": cmd_llp,
    "factor": cmd_factor,
    "star": cmd_star,
    "costar": cmd_costar,
    "lambda": cmd_lambda,
    "fibrant": cmd_fibrant,
    "homotopic": cmd_homotopic,
    "heq": cmd_heq,
    "weq": cmd_weq,
    "pi0": cmd_pi0,
    "pushout": cmd_pushout,
    "check-cartesian": cmd_check_cartesian,
    "check-example": cmd_check_example,
}

WORKSPACE_FREE = {"check-example"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="homlift",
        description="lifting properties, cylinders and homotopy on finite categories",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, workspace=True):
        if workspace:
            sp.add_argument("--workspace", "-w", help="DSL document to load")
        sp.add_argument("--format", choices=("json", "text"), default="text")
        sp.add_argument("--depth", type=int, default=None, help="generator level depth")
        sp.add_argument("--max-cells", type=int, default=None)
        sp.add_argument("--max-squares", type=int, default=None)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--cylinder", default=None)
        sp.add_argument("--genset", default=None)
        sp.add_argument(
            "--standard",
            choices=("graph", "eqrel", "preord", "ord", "set", "cat"),
            default=None,
            help="use the built-in cylinder/generators of this ambient",
        )

    sp = sub.add_parser("lift", help="search a diagonal for a lifting square")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--top", required=True)
    sp.add_argument("--bottom", required=True)
    sp.add_argument("--check-witness", default=None, help="JSON witness to re-validate")
    common(sp)

    for name, help_ in (
        ("rlp", "right lifting property against a generator set"),
        ("llp", "left lifting property against a set of maps"),
        ("factor", "cell factorization through the generator set"),
        ("weq", "weak equivalence decision"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--map", required=True)
        common(sp)

    sp = sub.add_parser("star", help="pushout-product with the cylinder")
    sp.add_argument("--map", required=True)
    sp.add_argument("--k", type=int, choices=(0, 1), default=None)
    common(sp)

    sp = sub.add_parser("costar", help="conjugate product against the cylinder")
    sp.add_argument("--map", required=True)
    common(sp)

    sp = sub.add_parser("lambda", help="stratified generator levels")
    common(sp)

    sp = sub.add_parser("fibrant", help="fibrancy of an object")
    sp.add_argument("--object", required=True)
    common(sp)

    sp = sub.add_parser("homotopic", help="homotopy between parallel maps")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    common(sp)

    sp = sub.add_parser("heq", help="homotopy equivalence search")
    sp.add_argument("--map", required=True)
    common(sp)

    sp = sub.add_parser("pi0", help="path components")
    sp.add_argument("--object", required=True)
    common(sp)

    sp = sub.add_parser("pushout", help="pushout of two maps with common domain")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    common(sp)

    sp = sub.add_parser("check-cartesian", help="pushout-product stability report")
    common(sp)

    sp = sub.add_parser("check-example", help="run a built-in example suite")
    sp.add_argument(
        "name",
        choices=sorted(suites.SUITES.keys()),
    )
    common(sp, workspace=False)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    bounds = _bounds(args)
    query = {
        "command": args.command,
        "args": {
            k: v
            for k, v in vars(args).items()
            if k not in ("command", "format") and v is not None
        },
    }
    report = Report(query=query, bounds=bounds_dict(bounds))
    t0 = time.perf_counter()
    code = 0
    try:
        ws = None
        if args.command not in WORKSPACE_FREE:
            if getattr(args, "workspace", None):
                ws = _load_workspace(args)
            else:
                ws = dsl.Workspace()
        result, witness = HANDLERS[args.command](ws, args, bounds)
        report.result = result
        report.witness = witness
        if args.command == "check-example":
            if result["undecided"]:
                code = 3
            elif not result["passed"]:
                code = 2
    except BoundExceeded as e:
        report.undecided_reason = str(e)
        code = 3
    except HomliftError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
