"""Command-line front end.

Exit codes: 0 pass, 1 validation failure, 2 unusable input, 3 closure bound hit.
Results go to stdout (deterministic); timings go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import acceptance
from .chains import cell_name, chain_from_json, complex_from_json, parse_cell_name
from .coalgebra import CoalgebraMap, validate_cosymmetric
from .errors import BoundExceeded, ContractError, StructuralError
from .globular import GlobularSet, globular_coalgebra, reconstruct_map, representable, validate_globular
from .omega import DEFAULT_BOUNDS, Bounds, compare_atoms, oriental, validate_sadc, xi
from .report import Report
from .rings import ZZ, ring_by_name
from .simplicial import (
    SimplicialComplex, cohomology_f2, cup_i, simplex, standard_simplex, steenrod_coalgebra, steenrod_square,
)

PASS, FAIL, USAGE, BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- input loading -------------------------------------------------------------

def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_globular(args) -> GlobularSet:
    if args.globular:
        return GlobularSet.from_json(_read_json(args.globular))
    if args.n is not None:
        return representable(args.n)
    raise UsageError("need --globular or --n")


def _load_simplicial(args) -> SimplicialComplex:
    if args.complex:
        return SimplicialComplex.from_json(_read_json(args.complex))
    if args.n is not None:
        return simplex(args.n)
    raise UsageError("need --complex or --n")


def _ring(args):
    return ring_by_name(args.ring)


# -- output -----------------------------------------------------------------------

def _emit(args, doc: dict, text: str):
    if args.format == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(text)


def _emit_report(args, rep: Report, extra: dict | None = None) -> int:
    doc = {"input": _echo(args), **rep.to_json(), **(extra or {})}
    _emit(args, doc, str(rep))
    return PASS if rep.passed else FAIL


def _echo(args) -> dict:
    keys = ("n", "ring", "k", "seed", "complex", "globular", "map", "cell")
    out = {"verb": args.verb, **{k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}}
    out["bounds"] = f"{args.bounds.max_elements},{args.bounds.max_coefficient}"
    return out


def _aligned(rows: list[tuple[str, str]]) -> str:
    width = max((len(a) for a, _ in rows), default=0)
    return "\n".join(f"{a.ljust(width)}  {b}" for a, b in rows)


# -- verbs ---------------------------------------------------------------------------

def cmd_validate_globular(args) -> int:
    X = _load_globular(args)
    rep = validate_globular(X)
    if rep.passed:
        rep.extend(validate_cosymmetric(globular_coalgebra(X, _ring(args))))
    rep.stats.update(truncation=X.truncation, nondegenerate=[len(X.nondegenerate(n)) for n in range(X.truncation + 1)])
    return _emit_report(args, rep)


def cmd_validate_coalgebra(args) -> int:
    if args.globular:
        C = globular_coalgebra(GlobularSet.from_json(_read_json(args.globular)), _ring(args))
    else:
        C = steenrod_coalgebra(_load_simplicial(args))
    rep = validate_cosymmetric(C, kmax=args.k)
    return _emit_report(args, rep)


def cmd_validate_sadc(args) -> int:
    if args.complex:
        data = _read_json(args.complex)
        K = complex_from_json(data) if "basis" in data else SimplicialComplex.from_json(data).chain_complex(ZZ)
    elif args.globular:
        K = globular_coalgebra(GlobularSet.from_json(_read_json(args.globular)), ZZ).complex
    elif args.n is not None:
        K = standard_simplex(args.n, ZZ)
    else:
        raise UsageError("need --complex, --globular or --n")
    return _emit_report(args, validate_sadc(K))


def _omega_text(O) -> str:
    lines = [f"{len(O)} elements"]
    for m in O:
        tag = "*" if m in O.generators else " "
        lines.append(f"{tag} {m!r}")
    return "\n".join(lines)


def cmd_orientals(args) -> int:
    if args.n is None:
        raise UsageError("orientals needs --n")
    O = oriental(args.n, args.bounds)
    _emit(args, {"input": _echo(args), **O.to_json()}, _omega_text(O))
    return PASS


def cmd_xi(args) -> int:
    if args.globular:
        O = xi(globular_coalgebra(GlobularSet.from_json(_read_json(args.globular)), _ring(args)), args.bounds)
    else:
        K = _load_simplicial(args)
        O = xi(steenrod_coalgebra(K), args.bounds, lift=K.chain_complex(ZZ))
    _emit(args, {"input": _echo(args), **O.to_json()}, _omega_text(O))
    return PASS


def cmd_compare_atoms(args) -> int:
    if args.n is None:
        raise UsageError("compare-atoms needs --n")
    return _emit_report(args, compare_atoms(args.n))


def cmd_reconstruct(args) -> int:
    """--globular X, --map {"target": Y, "assignment": {cell: chain}} -> the globular map X → Y."""
    if not args.globular or not args.map:
        raise UsageError("reconstruct needs --globular and --map")
    ring = _ring(args)
    X = GlobularSet.from_json(_read_json(args.globular))
    doc = _read_json(args.map)
    try:
        Y = GlobularSet.from_json(doc["target"])
        raw = doc["assignment"]
    except (KeyError, TypeError):
        raise UsageError("map document needs 'target' and 'assignment'") from None
    src, tgt = globular_coalgebra(X, ring), globular_coalgebra(Y, ring)
    assignment = {cell: chain_from_json(c, ring, tgt.complex) for cell, c in raw.items()}
    F = reconstruct_map(CoalgebraMap(src, tgt, assignment), X, Y)
    rows = [(x, F(x)) for x in X.all_cells()]
    _emit(args, {"input": _echo(args), "pass": True, **F.to_json()}, _aligned([(a, "↦ " + b) for a, b in rows]))
    return PASS


def cmd_cup_i(args) -> int:
    K = _load_simplicial(args)
    if args.k is None:
        raise UsageError("cup-i needs --k")
    cells = [parse_cell_name(args.cell)] if args.cell else K.cells()
    out = []
    for x in cells:
        if x not in K.simplices.get(len(x) - 1, ()):
            raise UsageError(f"{args.cell} is not a simplex of the complex")
        out.append((x, cup_i(x, args.k)))
    doc = {
        "input": _echo(args),
        "coproducts": [
            {"cell": cell_name(x), "terms": [{"left": cell_name(a), "right": cell_name(b), "coeff": v}
                                             for (a, b), v in t.sorted_items()]}
            for x, t in out
        ],
    }
    _emit(args, doc, _aligned([(cell_name(x), repr(t) if t else "0") for x, t in out]))
    return PASS


def cmd_sq(args) -> int:
    K = _load_simplicial(args)
    if args.k is None:
        raise UsageError("sq needs --k")
    H = cohomology_f2(K)
    results = []
    for p in range(K.dimension + 1):
        for alpha in H.generators(p):
            sq = steenrod_square(args.k, alpha, K)
            coords = H.coordinates(sq) if sq.degree <= K.dimension else ()
            results.append({
                "degree": p,
                "generator": alpha.to_json(),
                "square": sq.to_json(),
                "class": list(coords),
                "nonzero": any(coords),
            })
    doc = {"input": _echo(args), "ranks": list(H.ranks()), "k": args.k, "squares": results}
    rows = [(f"Sq^{args.k} of H^{r['degree']} generator {r['generator']['support']}",
             f"{r['square']['support']}  class {r['class']}  {'nonzero' if r['nonzero'] else 'zero'}")
            for r in results]
    _emit(args, doc, f"ranks {list(H.ranks())}\n" + _aligned(rows))
    return PASS


def cmd_selftest(args) -> int:
    only = None
    if args.only:
        try:
            only = [int(x) for x in args.only.split(",")]
        except ValueError:
            raise UsageError(f"--only expects comma-separated criterion numbers, got {args.only!r}") from None
        if not set(only) <= set(acceptance.CRITERIA):
            raise UsageError(f"criteria are numbered 1-10, got {args.only!r}")
    outcomes = []
    for n in sorted(only or acceptance.CRITERIA):
        o = acceptance.CRITERIA[n](args.seed)
        print(acceptance.format_line(o), file=sys.stderr)
        outcomes.append(o)
    all_ok = all(o.ok for o in outcomes)
    doc = {"input": _echo(args), "pass": all_ok, "criteria": [
        {k: v for k, v in o.to_json().items() if k not in ("seconds", "stats")} for o in outcomes
    ]}
    _emit(args, doc, "\n".join(acceptance.format_line(o, timing=False) for o in outcomes))
    return PASS if all_ok else FAIL


VERBS = {
    "validate-globular": cmd_validate_globular,
    "validate-coalgebra": cmd_validate_coalgebra,
    "validate-sadc": cmd_validate_sadc,
    "orientals": cmd_orientals,
    "xi": cmd_xi,
    "compare-atoms": cmd_compare_atoms,
    "reconstruct": cmd_reconstruct,
    "cup-i": cmd_cup_i,
    "sq": cmd_sq,
    "selftest": cmd_selftest,
}


def _bounds(text: str) -> Bounds:
    try:
        return Bounds.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <elems>,<coeff>, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="globcoalg", description="Globular and cup-i coalgebras, atoms and orientals.")
    parser.add_argument("verb", choices=sorted(VERBS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--ring", choices=("z", "f2"), default="z")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--bounds", type=_bounds, default=DEFAULT_BOUNDS)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--complex")
    parser.add_argument("--globular")
    parser.add_argument("--map")
    parser.add_argument("--cell", help="restrict cup-i to one simplex, e.g. [0,1,2]")
    parser.add_argument("--only", help="selftest: comma-separated criterion numbers")
    return parser


def run(argv: list[str] | None = None) -> int:
    t0 = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        if args.seed < 0 or args.seed >= 2 ** 64:
            raise UsageError("--seed must be an unsigned 64-bit integer")
        if args.n is not None and args.n < 0:
            raise UsageError("--n must be non-negative")
        code = VERBS[args.verb](args)
    except UsageError as exc:
        print(f"globcoalg: error: {exc}", file=sys.stderr)
        return USAGE
    except StructuralError as exc:
        print(f"globcoalg: malformed input: {exc}", file=sys.stderr)
        return USAGE
    except BoundExceeded as exc:
        print(f"globcoalg: {exc}", file=sys.stderr)
        return BOUND
    except ContractError as exc:
        print(f"globcoalg: validation failed: {exc}", file=sys.stderr)
        return FAIL
    print(f"[{time.perf_counter() - t0:.3f}s]", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
