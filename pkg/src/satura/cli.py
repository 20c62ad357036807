"""Command line front end.

Exit codes: 0 success, 2 validation problems, 3 when a run finished
but a cell failed (timeout or error), mirroring unfinished-cell
dashes in printed tables; a single g_i query that hits --timeout-s
reports {"timeout": true} and exits 3 the same way.
"""

import argparse
import json
import sys
from fractions import Fraction

from .arith import prime_field
from .bounds import BoundsInput, bezout_bound, bounds_report
from .groebner import buchberger, ideal_degree, is_zero_dimensional, NotZeroDimensional
from .harness import (CellTable, _TrialTimeout, _alarm, default_threads,
                      gi_table, hilbert_table, run_trials)
from .hilbert import emit_certification_system, jde_dimension
from .poly import order_from_name, polys_from_json, polys_to_json
from .problems import PROBLEMS, ProblemInstance, conics_pstar_system, get_problem
from .saturate import compute_gi


def _load_system(path, order):
    with open(path) as fh:
        obj = json.load(fh)
    ring, polys = polys_from_json(obj, order)
    return ring, polys


def _resolve_problem(spec: str, order_name: str = "grevlex") -> ProblemInstance:
    order = order_from_name(order_name)
    if spec.startswith("file:"):
        path = spec[5:]
        ring, polys = _load_system(path, order)
        return ProblemInstance(path, ring, tuple(polys))
    if spec == "conics-pstar":
        polys = conics_pstar_system()
        return ProblemInstance("conics-pstar", polys[0].ring, tuple(polys))
    return get_problem(spec)


def _emit(text: str, out_path: str = None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _int_list(text: str):
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _table_exit(table: CellTable) -> int:
    return 3 if table.failures else 0


def _cmd_gb(args) -> int:
    ring, polys = _load_system(args.file, order_from_name(args.order))
    basis = buchberger(polys)
    payload = polys_to_json(list(basis.generators), basis.ring)
    payload["unit"] = basis.is_unit
    payload["degree"] = ideal_degree(basis) if is_zero_dimensional(basis) else None
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _cmd_gi(args) -> int:
    problem = _resolve_problem(args.problem)
    i_list = _int_list(args.i)
    p_list = _int_list(args.prime)
    if args.trials and args.trials > 1:
        report = run_trials(problem, i_list[0], p_list[0], args.trials,
                            args.seed, threads=args.threads,
                            timeout_s=args.timeout_s if args.timeout_s else "auto")
        _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
        return 0
    if len(i_list) > 1 or len(p_list) > 1:
        table = gi_table(problem, i_list, p_list, args.seed,
                         timeout_s=args.timeout_s if args.timeout_s else "auto",
                         checkpoint=args.checkpoint)
        _emit(table.to_csv() if args.format == "csv" else table.to_json(), args.out)
        return _table_exit(table)
    i, p = i_list[0], p_list[0]
    payload = {"value": None, "i": i, "prime": p, "seed": args.seed,
               "elapsed_ms": None, "degenerate": False, "unit": False,
               "timeout": False}
    code = 0
    try:
        with _alarm(args.timeout_s):
            res = compute_gi(problem, i, prime_field(p), args.seed)
        payload.update(value=res.value, unit=res.unit,
                       elapsed_ms=round(res.elapsed * 1000, 3))
    except _TrialTimeout:
        payload["timeout"] = True
        code = 3
    except NotZeroDimensional:
        payload["degenerate"] = True
    _emit(json.dumps(payload, indent=2), args.out)
    return code


def _cmd_hilbert(args) -> int:
    problem = _resolve_problem(args.problem)
    table = hilbert_table(problem, _int_list(args.i), args.prime, args.dmax,
                          args.seed,
                          timeout_s=args.timeout_s if args.timeout_s else "auto")
    _emit(table.to_csv() if args.format == "csv" else table.to_json(), args.out)
    return _table_exit(table)


def _cmd_jde(args) -> int:
    if args.file:
        _, polys = _load_system(args.file, order_from_name(args.order))
    else:
        polys = list(_resolve_problem(args.problem).polys)
    dim, bound = jde_dimension(polys, args.d, args.e)
    _emit(json.dumps({"d": args.d, "e": args.e, "dim": dim, "bound": bound},
                     indent=2), args.out)
    return 0


def _cmd_trials(args) -> int:
    problem = _resolve_problem(args.problem)
    report = run_trials(problem, args.i, args.prime, args.trials, args.seed,
                        threads=args.threads, reference=args.reference,
                        timeout_s=args.timeout_s if args.timeout_s else "auto")
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    return 0


def _cmd_bounds(args) -> int:
    if args.degrees:
        degrees = _int_list(args.degrees)
        n = args.n or len(degrees)
        inp = BoundsInput.from_system(degrees, n, args.g_upper,
                                      p=(1 << args.prime_exp) + 1 if args.prime_exp else None,
                                      nu=args.nu)
    else:
        for name in ("n", "r", "dmin", "dmax", "deg_v"):
            if getattr(args, name) is None:
                raise ValueError(f"--{name.replace('_', '-')} is required without --degrees")
        inp = BoundsInput(args.n, args.r, args.dmin, args.dmax, args.deg_v,
                          args.g_upper,
                          p=(1 << args.prime_exp) + 1 if args.prime_exp else None,
                          nu=args.nu)
    target = Fraction(args.target) if args.target else None
    _emit(json.dumps(bounds_report(inp, target).to_dict(), indent=2), args.out)
    return 0


def _cmd_problems(args) -> int:
    if args.action == "list":
        rows = []
        for name in sorted(PROBLEMS) + ["conics-pstar"]:
            inst = _resolve_problem(name)
            rows.append({"name": name, "n": inst.n, "r": inst.r,
                         "degrees": list(inst.degrees()),
                         "base_locus_spaces": len(inst.base_locus)})
        if args.format == "json":
            _emit(json.dumps({"problems": rows}, indent=2), args.out)
        else:
            lines = [f"{r['name']}: r={r['r']} polynomials, n={r['n']} variables, "
                     f"degrees {r['degrees']}, {r['base_locus_spaces']} base locus spaces"
                     for r in rows]
            _emit("\n".join(lines), args.out)
        return 0
    if not args.name:
        raise ValueError("export needs --name")
    inst = _resolve_problem(args.name)
    _emit(json.dumps(polys_to_json(list(inst.polys), inst.ring), indent=2),
          args.out)
    return 0


def _cmd_emit_cert(args) -> int:
    _, polys = _load_system(args.file, order_from_name(args.order))
    with open(args.points) as fh:
        raw_pts = json.load(fh)
    field = polys[0].ring.field
    points = [tuple(field.from_str(str(x)) for x in pt) for pt in raw_pts]
    with open(args.columns) as fh:
        columns = [tuple(m) for m in json.load(fh)]
    cert = emit_certification_system(polys, points, args.d, columns)
    _emit(cert.to_json(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=2024, help="64-bit master seed")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: SATURA_THREADS or CPU count)")
    common.add_argument("--timeout-s", type=float, default=None, dest="timeout_s",
                        help="per-trial/cell wall clock cap in seconds")
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")

    ap = argparse.ArgumentParser(
        prog="satura",
        description="Exact counting of polynomial-system solutions outside "
                    "a base locus, with luckiness bounds and Hilbert tooling.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of a JSON system")
    g.add_argument("--file", required=True)
    g.set_defaults(fn=_cmd_gb)

    g = sub.add_parser("gi", parents=[common], help="randomized g_i count(s)")
    g.add_argument("--problem", required=True,
                   help="monomial-example | conics-affine | alt | conics-pstar | file:<path>")
    g.add_argument("--i", required=True, help="index or comma list")
    g.add_argument("--prime", required=True, help="prime or comma list")
    g.add_argument("--trials", type=int, default=None)
    g.add_argument("--checkpoint", default=None, help="resumable cell store (JSON path)")
    g.set_defaults(fn=_cmd_gi)

    g = sub.add_parser("hilbert", parents=[common], help="affine Hilbert function rows")
    g.add_argument("--problem", required=True)
    g.add_argument("--i", required=True, help="index or comma list")
    g.add_argument("--prime", type=int, required=True)
    g.add_argument("--dmax", type=int, default=8)
    g.set_defaults(fn=_cmd_hilbert)

    g = sub.add_parser("jde", parents=[common],
                       help="dimension of the degree-(d+e) reduction space J_d^e")
    g.add_argument("--file", default=None)
    g.add_argument("--problem", default=None)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--e", type=int, required=True)
    g.set_defaults(fn=_cmd_jde)

    g = sub.add_parser("trials", parents=[common], help="batched trials with histogram")
    g.add_argument("--problem", required=True)
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--prime", type=int, required=True)
    g.add_argument("--trials", type=int, required=True)
    g.add_argument("--reference", type=int, default=None,
                   help="success value (default: built-in table, else modal)")
    g.set_defaults(fn=_cmd_trials)

    g = sub.add_parser("bounds", parents=[common], help="probability and degree bounds")
    g.add_argument("--n", type=int, default=None)
    g.add_argument("--r", type=int, default=None)
    g.add_argument("--dmin", type=int, default=None)
    g.add_argument("--dmax", type=int, default=None)
    g.add_argument("--deg-v", type=int, default=None, dest="deg_v")
    g.add_argument("--degrees", default=None, help="comma list; implies r, dmin, dmax, deg_v")
    g.add_argument("--g-upper", type=int, required=True, dest="g_upper")
    g.add_argument("--prime-exp", type=int, default=None, dest="prime_exp",
                   help="evaluate at p = 2^k + 1")
    g.add_argument("--nu", type=int, default=None)
    g.add_argument("--target", default=None, help="success target, e.g. 0.99")
    g.set_defaults(fn=_cmd_bounds)

    g = sub.add_parser("problems", parents=[common], help="list or export built-in systems")
    g.add_argument("action", choices=("list", "export"))
    g.add_argument("--name", default=None)
    g.set_defaults(fn=_cmd_problems)

    g = sub.add_parser("emit-cert", parents=[common],
                       help="write the well-constrained certification system")
    g.add_argument("--file", required=True, help="specialized square system (JSON)")
    g.add_argument("--points", required=True, help="JSON list of points")
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--columns", required=True, help="JSON list of exponent vectors")
    g.set_defaults(fn=_cmd_emit_cert)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
