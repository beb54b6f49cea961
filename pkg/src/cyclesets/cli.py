"""Command-line interface.

Exit codes: 0 success, 1 malformed input or usage, 2 a mathematical check
failed, 3 a negative decision (not isomorphic, not cohomologous, no
representative), 4 a budget or size limit was hit.  All output is JSON with
sorted keys; ``-`` stands for stdin or stdout.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Sequence


from . import brace, classify, extension, oracle, structure
from .core import CycleSet, CycleSetError, MalformedTable, to_solution, validate_cycle_set, verify_ybe
from .report import Report, jsonable

EXIT_OK, EXIT_MALFORMED, EXIT_FAILED, EXIT_NEGATIVE, EXIT_LIMIT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- I/O

def _plain(value: Any) -> Any:
    """JSON-ready copy with infinite levels spelled "Infinity"."""
    if isinstance(value, float) and math.isinf(value):
        return "Infinity"
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return _plain(jsonable(value))


def dumps(obj: Any) -> str:
    return json.dumps(_plain(obj), sort_keys=True, separators=(",", ":")) + "\n"


def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise MalformedTable(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedTable(f"{path}: invalid JSON: {exc}") from exc


def _write(path: str, obj: Any) -> None:
    text = dumps(obj)
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_cycle_set(path: str, validate: bool = True) -> CycleSet:
    x = CycleSet.from_dict(_read_json(path))
    return validate_cycle_set(x.table) if validate else x


def _load_module_spec(data: Any) -> tuple[extension.GradedModule, Any]:
    """Module and raw phi from {"base", "components", "action_gens"?, "phi"}."""
    if not isinstance(data, dict) or "base" not in data or "components" not in data:
        raise MalformedTable("expected an object with 'base' and 'components'")
    base = validate_cycle_set(CycleSet.from_dict(data["base"]).table)
    comps = data["components"]
    if not isinstance(comps, list) or len(comps) != base.n or not all(isinstance(c, list) for c in comps):
        raise MalformedTable("'components' needs one list of cyclic orders per base point")
    gens = data.get("action_gens")
    try:
        if gens is None:
            if len({tuple(c) for c in comps}) != 1:
                raise MalformedTable("'action_gens' is required unless all components agree")
            module = extension.permutation_module(base, comps[0])
        else:
            if not isinstance(gens, dict):
                raise MalformedTable("'action_gens' must map generator indices to matrices")
            module = extension.GradedModule(base, tuple(tuple(c) for c in comps),
                                            {int(k): v for k, v in gens.items()})
    except (ValueError, TypeError) as exc:
        raise MalformedTable(str(exc)) from exc
    return module, data.get("phi")


def _load_cocycle(module: extension.GradedModule, raw: Any, name: str = "phi") -> extension.CocycleMap:
    n = module.base.n
    if not isinstance(raw, list) or len(raw) != n or any(not isinstance(r, list) or len(r) != n for r in raw):
        raise MalformedTable(f"'{name}' must be an n x n array of residue lists")
    try:
        return extension.CocycleMap.from_residues(module, raw)
    except (ValueError, TypeError, IndexError) as exc:
        raise MalformedTable(f"'{name}': {exc}") from exc


def _require_valid_module(module: extension.GradedModule) -> Report:
    rep = extension.validate_graded_module(module)
    if not rep.ok:
        raise _CheckFailed({"module": rep.to_dict()})
    return rep


class _CheckFailed(Exception):
    def __init__(self, payload):
        self.payload = payload


# ---------------------------------------------------------------- commands

def cmd_verify(args) -> int:
    x = CycleSet.from_dict(_read_json(args.input))
    try:
        validate_cycle_set(x.table)
    except CycleSetError as exc:
        _write(args.output, {"status": "fail", "witnesses": [{"check": "axioms", "witness": str(exc)}],
                             "metrics": {"n": x.n}})
        return EXIT_FAILED
    rep = verify_ybe(to_solution(x))
    rep.check("axioms", True)
    _write(args.output, rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_info(args) -> int:
    x = _load_cycle_set(args.input)
    g = brace.permutation_group(x, args.limit)
    b = brace.brace_structure(g, verify=args.exhaustive)
    soc = brace.socle(b)
    out = {
        "additive_invariants": [int(v) for v in b.invariant_factors],
        "group_order": g.order,
        "indecomposable": structure.is_indecomposable(x),
        "mpl": structure.mpl(x),
        "n": x.n,
        "socle_order": int(len(soc)),
        "uniconnected": structure.is_indecomposable(x) and g.order == x.n,
    }
    _write(args.output, out)
    return EXIT_OK


def cmd_retract(args) -> int:
    x = _load_cycle_set(args.input)
    quotient, proj = structure.retraction(x)
    _write(args.output, {"projection": list(proj.map), "retraction": quotient.to_dict()})
    return EXIT_OK


def cmd_iso(args) -> int:
    x = _load_cycle_set(args.first)
    y = _load_cycle_set(args.second)
    f = structure.is_isomorphic(x, y)
    _write(args.output, {"bijection": list(f) if f is not None else None, "isomorphic": f is not None})
    return EXIT_OK if f is not None else EXIT_NEGATIVE


def cmd_extend(args) -> int:
    module, raw = _load_module_spec(_read_json(args.input))
    phi = _load_cocycle(module, raw)
    _require_valid_module(module)
    witness = extension.equivariance_witness(phi, full=args.exhaustive)
    if witness is not None:
        _write(args.output, {"status": "fail", "witnesses": [{"check": "equivariance", "witness": list(witness)}],
                             "metrics": {}})
        return EXIT_FAILED
    y, pr = extension.twisted_extension(phi)
    out: dict[str, Any] = {"extension": y.to_dict(), "projection": list(pr.map)}
    try:
        rep = extension.semidirect_check(phi, limit=args.limit)
        out["semidirect"] = rep.to_dict()
        code = EXIT_OK if rep.ok else EXIT_FAILED
    except extension.NotApplicable as exc:
        out["semidirect"] = {"status": "not_applicable", "reason": str(exc)}
        code = EXIT_OK
    _write(args.output, out)
    return code


def _pqr_entry(x: CycleSet, family: str, params: dict) -> dict:
    d = x.to_dict()
    d["metadata"] = classify.describe(x, family, params)
    return d


def cmd_classify(args) -> int:
    if args.family == "pq":
        members = classify.enumerate_pq_detailed(args.p, args.q)
        out = [_pqr_entry(x, fam, par) for x, fam, par in members]
        _write(args.output, out)
        return EXIT_OK
    if args.r is None:
        raise UsageError("classify pqr needs --r")
    try:
        members = classify.enumerate_pqr(args.p, args.q, args.r, budget=args.budget, detailed=True)
        complete = True
    except classify.BudgetExceeded as exc:
        members = exc.partial
        complete = False
    out = [_pqr_entry(x, fam, par) for x, fam, par in members]
    _write(args.output, out)
    if not complete:
        sys.stderr.write(f"budget of {args.budget} raw candidates reached; the list is partial\n")
        return EXIT_LIMIT
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        found = oracle.enumerate_all(args.n, indecomposable=args.indecomposable, upto_iso=args.upto_iso,
                                     limit=args.max_n)
    except oracle.LimitExceeded as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_LIMIT
    out: dict[str, Any] = {"count": len(found), "indecomposable": args.indecomposable, "n": args.n,
                           "upto_iso": args.upto_iso}
    if args.list:
        out["cycle_sets"] = [x.to_dict() for x in found]
    _write(args.output, out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.action == "enumerate":
        if args.n is None:
            raise UsageError("oracle enumerate needs --n")
        return cmd_enumerate(args)
    if args.p is None or args.q is None:
        raise UsageError("oracle crosscheck needs --p and --q")
    rep = oracle.crosscheck_pq(args.p, args.q)
    _write(args.output, rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_lvcheck(args) -> int:
    data = _read_json(args.input)
    if isinstance(data, dict) and "gamma" in data and "components" not in data:
        return _lvcheck_parallel(args, data)
    module, raw = _load_module_spec(data)
    phi = _load_cocycle(module, raw)
    other = _load_cocycle(module, data["other"], "other") if isinstance(data, dict) and "other" in data else None
    _require_valid_module(module)
    witness = extension.twisted_cocycle_witness(phi)
    out: dict[str, Any] = {
        "equivariant": extension.equivariance_witness(phi, full=args.exhaustive) is None,
        "twisted_cocycle": witness is None,
        "witness": list(witness) if witness else None,
    }
    code = EXIT_OK
    if witness is None:
        try:
            rep = extension.equivariant_representative(phi)
            out["representative"] = rep.residues()
        except extension.NoRepresentativeFound as exc:
            out["representative"] = None
            out["finding"] = str(exc)
            code = EXIT_NEGATIVE
        except (extension.CoprimalityViolation, brace.SizeLimitExceeded) as exc:
            out["representative"] = None
            out["representative_skipped"] = str(exc)
    if other is not None:
        c = extension.cohomologous(phi, other)
        out["cohomologous"] = c is not None
        out["coboundary_witness"] = [list(module.fibers[x].elements[v]) for x, v in enumerate(c)] if c else None
        if c is None:
            code = EXIT_NEGATIVE
    _write(args.output, out)
    return code if witness is None else EXIT_FAILED


def _lvcheck_parallel(args, data) -> int:
    base = validate_cycle_set(CycleSet.from_dict(data.get("base")).table)
    orders = data.get("orders")
    if not isinstance(orders, list) or not orders:
        raise MalformedTable("'orders' must list the cyclic orders of B")
    try:
        gamma = extension.GammaMap.from_residues(base, orders, data["gamma"])
    except (ValueError, TypeError, IndexError, KeyError) as exc:
        raise MalformedTable(f"'gamma': {exc}") from exc
    w = extension.lv_cocycle_witness(gamma)
    inv = extension.invariance_witness(gamma)
    out = {"invariant": inv is None, "lv_cocycle": w is None, "witness": list(w) if w else None}
    if w is None:
        y = extension.general_extension(extension.gamma_to_cocycle(gamma))
        out["abelian_extension"] = extension.is_abelian_extension(y, gamma.orders)
    _write(args.output, out)
    return EXIT_OK if w is None else EXIT_FAILED


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclesets", description="Finite cycle sets and involutive Yang-Baxter solutions.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, limit=True):
        p.add_argument("-o", "--output", default="-")
        p.add_argument("--exhaustive", action="store_true", help="full-domain checks instead of generator checks")
        p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; work is single-threaded")
        if limit:
            p.add_argument("--limit", type=int, default=4 * 10 ** 6, help="largest group to list element by element")
        return p

    p = common(sub.add_parser("verify", help="check the axioms and the braid relation"), limit=False)
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("info", help="invariants of a cycle set"))
    p.add_argument("input")
    p.set_defaults(func=cmd_info)

    p = common(sub.add_parser("retract", help="retraction and projection"), limit=False)
    p.add_argument("input")
    p.set_defaults(func=cmd_retract)

    p = common(sub.add_parser("iso", help="isomorphism search"), limit=False)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = common(sub.add_parser("extend", help="twisted extension and semidirect report"))
    p.add_argument("input")
    p.set_defaults(func=cmd_extend)

    p = common(sub.add_parser("classify", help="closed-form families"), limit=False)
    p.add_argument("family", choices=["pq", "pqr"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--budget", type=int, default=200, help="raw pqr candidates to try")
    p.set_defaults(func=cmd_classify)

    def enum_flags(p):
        p.add_argument("--indecomposable", action="store_true")
        p.add_argument("--upto-iso", action="store_true")
        p.add_argument("--list", action="store_true", help="include the cycle sets")
        p.add_argument("--max-n", type=int, default=None, help="size limit for the search")

    p = common(sub.add_parser("enumerate", help="oracle enumeration"), limit=False)
    p.add_argument("--n", type=int, required=True)
    enum_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("oracle", help="oracle runs"), limit=False)
    p.add_argument("action", choices=["enumerate", "crosscheck"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    enum_flags(p)
    p.set_defaults(func=cmd_oracle)

    p = common(sub.add_parser("lvcheck", help="cocycle and cohomology checks"), limit=False)
    p.add_argument("input")
    p.set_defaults(func=cmd_lvcheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_MALFORMED
    except _CheckFailed as exc:
        _write(getattr(args, "output", "-"), exc.payload)
        return EXIT_FAILED
    except (brace.SizeLimitExceeded, classify.BudgetExceeded, oracle.LimitExceeded) as exc:
        sys.stderr.write(f"limit: {exc}\n")
        return EXIT_LIMIT
    except (MalformedTable, extension.InvalidModule) as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return EXIT_MALFORMED
    except CycleSetError as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return EXIT_FAILED
    except ValueError as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
