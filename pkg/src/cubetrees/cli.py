"""Command line interface.

Exit status: 0 on success, 1 when a checked identity fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .builders import cross_polytope, hypercube, pile_of_cubes
from .chain import ComplexFormatError, complex_from_file, complex_to_dict, skeleton
from .comb import (
    KDependenceError,
    comb_from_sets,
    detect_k_dependence,
    parse_sets,
    random_generic_comb,
    verify_comb_theorem,
)
from .formulas import (
    bw_betti,
    equinumerous_quantities,
    pile_chi_identity,
    resolution_added_cell_dim,
    tree_size_closed_form,
)
from .homology import betti_vector, homology
from .trees import TreeError, build_tree, check_tree, dual_tree, tree_labels
from .verify import reports_to_csv, reports_to_json, sweep, verify_theorem1

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _flatten(obj, prefix=""):
    out = {}
    for key, val in obj.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            out.update(_flatten(val, name + "."))
        elif isinstance(val, list):
            out[name] = ";".join(str(v) for v in val)
        else:
            out[name] = "" if val is None else val
    return out


def _to_csv(data) -> str:
    rows = data if isinstance(data, list) else [data]
    rows = [_flatten(r) for r in rows]
    fields = list(rows[0]) if rows else []
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(args, data, text: str | None = None) -> None:
    if text is None:
        if args.format == "csv":
            text = _to_csv(data)
        else:
            text = json.dumps(data, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"expected comma separated integers, got {text!r}") from None


def _parse_facets(values) -> list[str]:
    out = []
    for text in values or ():
        text = text.strip()
        if text.startswith("["):
            items = json.loads(text)
            if not all(isinstance(x, str) for x in items):
                raise InputError("facet list must hold strings")
            out.extend(items)
        else:
            out.extend(t for t in text.replace(";", " ").split() if t)
    return out


def _facets_from_args(args) -> list[str]:
    facets = _parse_facets(args.facets)
    if getattr(args, "facets_file", None):
        facets.extend(_parse_facets([Path(args.facets_file).read_text(encoding="utf-8")]))
    return facets


def _load(args):
    c = complex_from_file(args.complex)
    if getattr(args, "skeleton", None) is not None:
        c = skeleton(c, args.skeleton)
    return c


# -- subcommands ----------------------------------------------------------------


def cmd_build(args) -> int:
    if args.shape == "pile":
        if not args.sizes:
            raise InputError("pile needs --sizes")
        c = pile_of_cubes(_int_list(args.sizes))
    else:
        if args.n is None:
            raise InputError(f"{args.shape} needs --n")
        c = hypercube(args.n) if args.shape == "cube" else cross_polytope(args.n)
    if args.skeleton is not None:
        c = skeleton(c, args.skeleton)
    _emit(args, None, json.dumps(complex_to_dict(c), indent=1) + "\n")
    return EXIT_OK


def cmd_homology(args) -> int:
    c = _load(args)
    if args.dim is None:
        results = betti_vector(c, reduced=args.reduced)
    else:
        results = [homology(c, args.dim, reduced=args.reduced)]
    _emit(
        args,
        [{"dim": h.dim, "betti": h.betti, "torsion": list(h.torsion)} for h in results],
    )
    return EXIT_OK


def cmd_tree_build(args) -> int:
    c = _load(args)
    tree = build_tree(c, order=args.order, seed=args.seed)
    _emit(args, tree_labels(c, tree))
    return EXIT_OK


def cmd_tree_check(args) -> int:
    c = _load(args)
    ids = [c.resolve(tok) for tok in _facets_from_args(args)]
    cert = check_tree(c, ids)
    _emit(args, cert.to_dict(c))
    return EXIT_OK if cert.valid else EXIT_FAIL


def cmd_tree_dual(args) -> int:
    tree = _facets_from_args(args)
    out = dual_tree(args.n, args.i, tree, side=args.side)
    other = cross_polytope(args.n) if args.side == "cube" else hypercube(args.n)
    _emit(args, tree_labels(other, out))
    return EXIT_OK


_FORMULA_ARGS = {
    "bw": ("n", "k"),
    "tree-size": ("n", "k"),
    "equinumerous": ("n", "k"),
    "pile-chi": ("sizes", "k"),
    "resolution": ("n", "k", "l"),
}


def cmd_formula(args) -> int:
    kind = args.kind
    if kind == "bw":
        data = {"n": args.n, "k": args.k, "value": bw_betti(args.n, args.k)}
    elif kind == "tree-size":
        data = {"n": args.n, "k": args.k, "value": tree_size_closed_form(args.n, args.k)}
    elif kind == "equinumerous":
        r = equinumerous_quantities(args.n, args.k)
        data = {
            "n": r.n,
            "k": r.k,
            "q1": r.q1,
            "q2": r.q2,
            "q3": r.q3,
            "q4": r.q4,
            "cube_faces_below": r.cube_faces_below,
            "cross_faces_below": r.cross_faces_below,
            "cube_relation": r.cube_relation,
            "printed_cross_count": r.printed_cross_count,
            "all_equal": r.all_equal,
        }
        _emit(args, data)
        return EXIT_OK if r.all_equal and r.cube_relation else EXIT_FAIL
    elif kind == "pile-chi":
        r = pile_chi_identity(_int_list(args.sizes), args.k)
        data = {
            "sizes": list(_int_list(args.sizes)),
            "k": args.k,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "beta": r.beta,
            "homology_beta": r.homology_beta,
            "complement_betti": r.complement_betti,
            "holds": r.holds,
        }
        _emit(args, data)
        return EXIT_OK if r.holds else EXIT_FAIL
    elif kind == "resolution":
        r = resolution_added_cell_dim(args.n, args.k, args.l)
        data = {
            "n": r.n,
            "k": r.k,
            "l": r.l,
            "dim": r.dim,
            "max_multiplicity": r.max_multiplicity,
            "vacuous": r.vacuous,
            "claimed_bound": r.claimed_bound,
            "within_claimed_bound": r.within_claimed_bound,
            "homology_bound": r.homology_bound,
            "within_homology_bound": r.within_homology_bound,
            "hyperplane_dim": r.hyperplane_dim,
        }
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(kind)
    _emit(args, data)
    return EXIT_OK


def _comb_config(args):
    if args.sets:
        return comb_from_sets(parse_sets(args.sets), args.k)
    if args.sizes:
        return random_generic_comb(_int_list(args.sizes), args.k, seed=args.seed)
    raise InputError("give --sets, or --sizes with --seed")


def cmd_comb_check(args) -> int:
    cfg = _comb_config(args)
    w = detect_k_dependence(cfg)
    _emit(
        args,
        {"config": cfg.to_dict(), "generic": w is None, "witness": w.to_dict() if w else None},
    )
    return EXIT_OK


def cmd_comb_verify(args) -> int:
    cfg = _comb_config(args)
    try:
        report = verify_comb_theorem(cfg)
    except KDependenceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        _emit(args, {"config": cfg.to_dict(), "error": str(exc), "witness": exc.witness.to_dict()})
        return EXIT_INPUT
    data = report.to_dict()
    data["config"] = cfg.to_dict()
    _emit(args, data)
    return EXIT_OK if report.all_equal else EXIT_FAIL


def cmd_verify_theorem1(args) -> int:
    r = verify_theorem1(args.n, args.k, cell_cap=args.cell_cap, time_cap=args.time_cap)
    _write_reports(args, [r])
    return EXIT_OK if r.all_equal else EXIT_FAIL


def cmd_verify_sweep(args) -> int:
    reports = sweep(
        args.n_max,
        k_min=args.k_min,
        workers=args.workers,
        cell_cap=args.cell_cap,
        time_cap=args.time_cap,
    )
    _write_reports(args, reports)
    return EXIT_OK if all(r.all_equal for r in reports) else EXIT_FAIL


def _write_reports(args, reports):
    if args.format == "csv":
        text = reports_to_csv(reports, timings=args.timings)
    else:
        text = reports_to_json(reports, timings=args.timings) + "\n"
    _emit(args, None, text)


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write output to this path instead of stdout")

    p = argparse.ArgumentParser(
        prog="cubetrees",
        description="Cellular spanning trees of cubes and no-k-equal Betti numbers.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="emit a complex as JSON")
    b.add_argument("shape", choices=("cube", "cross", "pile"))
    b.add_argument("--n", type=int)
    b.add_argument("--sizes", help="pile sizes, e.g. 2,2,1")
    b.add_argument("--skeleton", type=int)
    b.set_defaults(func=cmd_build)

    h = sub.add_parser("homology", parents=[common], help="integer homology of a complex file")
    h.add_argument("--complex", required=True)
    h.add_argument("--dim", type=int)
    h.add_argument("--reduced", action="store_true")
    h.add_argument("--skeleton", type=int)
    h.set_defaults(func=cmd_homology)

    t = sub.add_parser("tree", help="spanning trees")
    tsub = t.add_subparsers(dest="tree_command", required=True)
    tb = tsub.add_parser("build", parents=[common])
    tb.add_argument("--complex", required=True)
    tb.add_argument("--skeleton", type=int)
    tb.add_argument("--order", choices=("lex", "random"), default="lex")
    tb.add_argument("--seed", type=int, default=0)
    tb.set_defaults(func=cmd_tree_build)

    facet_help = "cell ids or labels, whitespace/semicolon separated or a JSON array"
    tc = tsub.add_parser("check", parents=[common])
    tc.add_argument("--complex", required=True)
    tc.add_argument("--skeleton", type=int)
    tc.add_argument("--facets", action="append", help=facet_help)
    tc.add_argument("--facets-file")
    tc.set_defaults(func=cmd_tree_check)

    td = tsub.add_parser("dual", parents=[common])
    td.add_argument("--n", type=int, required=True)
    td.add_argument("--i", type=int, required=True)
    td.add_argument("--side", choices=("cube", "cross"), default="cube")
    td.add_argument("--facets", action="append", help=facet_help)
    td.add_argument("--facets-file")
    td.set_defaults(func=cmd_tree_dual)

    f = sub.add_parser("formula", parents=[common], help="closed-form quantities")
    f.add_argument("kind", choices=("bw", "tree-size", "equinumerous", "pile-chi", "resolution"))
    f.add_argument("--n", type=int)
    f.add_argument("--k", type=int)
    f.add_argument("--l", type=int)
    f.add_argument("--sizes")
    f.set_defaults(func=cmd_formula)

    c = sub.add_parser("comb", help="comb arrangements")
    csub = c.add_subparsers(dest="comb_command", required=True)
    for name, func in (("check", cmd_comb_check), ("verify", cmd_comb_verify)):
        cp = csub.add_parser(name, parents=[common])
        cp.add_argument("--sets", help='e.g. "0,1;0,1/2;3"')
        cp.add_argument("--sizes", help="random generic sets of these sizes")
        cp.add_argument("--seed", type=int, default=0)
        cp.add_argument("--k", type=int, default=3)
        cp.set_defaults(func=func)

    v = sub.add_parser("verify", help="identity checks")
    vsub = v.add_subparsers(dest="verify_command", required=True)
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--cell-cap", type=int, default=200_000)
    caps.add_argument("--time-cap", type=float, default=600.0)
    caps.add_argument("--timings", action="store_true", help="include wall-clock times")
    v1 = vsub.add_parser("theorem1", parents=[common, caps])
    v1.add_argument("--n", type=int, required=True)
    v1.add_argument("--k", type=int, required=True)
    v1.set_defaults(func=cmd_verify_theorem1)
    vs = vsub.add_parser("sweep", parents=[common, caps])
    vs.add_argument("--n-max", type=int, required=True)
    vs.add_argument("--k-min", type=int, default=3)
    vs.add_argument("--workers", type=int)
    vs.set_defaults(func=cmd_verify_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.func is cmd_formula:
        for name in _FORMULA_ARGS[args.kind]:
            if getattr(args, name) is None:
                parser.error(f"formula {args.kind} needs --{name}")
    try:
        return args.func(args)
    except (InputError, ComplexFormatError, TreeError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"error: {msg}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
