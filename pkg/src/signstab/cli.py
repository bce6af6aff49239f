"""Command-line interface: ``signstab <group> <command> [options]``.

Exit codes: 0 stable (or success), 1 malformed input, 2 inconclusive or
budget exhausted, 3 certified not sign-stable.
"""

from __future__ import annotations

import argparse
import sys

from . import io as sio
from ._poly import TermBudgetExceeded
from .seed import SeedError, mutate_exchange_matrix

EXIT_OK, EXIT_MALFORMED, EXIT_INCONCLUSIVE, EXIT_NOT_STABLE = 0, 1, 2, 3


def _ints(s):
    try:
        return [int(x) for x in s.replace(" ", "").split(",") if x]
    except ValueError:
        raise sio.MalformedInput(f"expected comma-separated integers, got {s!r}") from None


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verdict_code(report):
    from .stability import NOT_STABLE
    if report.stable:
        return EXIT_OK
    return EXIT_NOT_STABLE if report.verdict == NOT_STABLE else EXIT_INCONCLUSIVE


def _report_text(r):
    from .tropical import sign_string
    lines = [f"verdict: {r.verdict} ({r.method})"]
    if r.stable_sign is not None:
        lines.append(f"stable sign: {sign_string(r.stable_sign)}")
    if r.stable_sign_minus is not None:
        lines.append(f"stable sign (negative side): {sign_string(r.stable_sign_minus)}")
    if r.e_stable is not None:
        lines.append(f"E_phi: {[list(x) for x in r.e_stable]}")
        lines.append(f"char poly: {r.char_e}")
        lines.append(f"stretch factor: {r.stretch_factor:.15g}")
        lines.append(f"entropy bounds: [{r.entropy_lower_x:.15g}, {r.entropy_upper:.15g}]")
    for k in ("failed", "obstruction", "route"):
        if k in r.diagnostics:
            lines.append(f"{k}: {r.diagnostics[k]}")
    return "\n".join(lines) + "\n"


def _output_report(args, report):
    if args.format == "text":
        _emit(args, _report_text(report))
    else:
        _emit(args, sio.dumps(sio.report_to_json(report)))
    return _verdict_code(report)


def cmd_seed_mutate(args):
    b = sio.load_seed(args.seed)
    if not 1 <= args.k <= b.n:
        raise sio.MalformedInput(f"--k must lie in 1..{b.n}")
    _emit(args, sio.dumps(sio.seed_to_json(mutate_exchange_matrix(b, args.k - 1))))
    return EXIT_OK


def cmd_loop_validate(args):
    loop = sio.load_loop(args.loop)
    r = loop.closure
    out = {"valid": r["valid"], "fully_mutating": loop.fully_mutating}
    if not r["valid"]:
        out.update({"entry": [r["entry"][0] + 1, r["entry"][1] + 1],
                    "got": r["got"], "expected": r["expected"]})
    _emit(args, sio.dumps(out))
    return EXIT_OK if r["valid"] else EXIT_MALFORMED


def _valid_loop(path):
    loop = sio.load_loop(path)
    try:
        loop.require_valid()
    except SeedError as exc:
        raise sio.MalformedInput(str(exc)) from None
    return loop


def cmd_loop_orbit(args):
    from .tropical import apply_loop_trop, basepoints
    loop = _valid_loop(args.loop)
    w = basepoints(loop.n)[0] if args.point is None else _ints(args.point)
    if len(w) != loop.n:
        raise sio.MalformedInput(f"--point needs {loop.n} coordinates")
    steps = args.steps if args.steps is not None else args.orbit_cap
    pts, signs = apply_loop_trop(loop, w, steps)
    if args.format == "csv":
        _emit(args, sio.orbit_to_csv(pts, signs))
    else:
        _emit(args, sio.dumps(sio.orbit_to_json(pts, signs)))
    return EXIT_OK


def cmd_loop_check(args):
    from .stability import check
    loop = _valid_loop(args.loop)
    cand = sio.load_cone(args.cone) if args.cone else None
    if args.method == "heuristic" and cand is None:
        raise sio.MalformedInput("--method heuristic needs --cone")
    if cand is not None and cand.n != loop.n:
        raise sio.MalformedInput("cone dimension does not match the loop")
    report = check(loop, args.method, cand=cand, n_max=args.n_max,
                   orbit_cap=args.orbit_cap)
    return _output_report(args, report)


def cmd_loop_stable(args):
    from .stability import StabilityReport, _fill_stable
    from .tropical import parse_sign, is_strict
    loop = _valid_loop(args.loop)
    try:
        sign = parse_sign(args.sign)
    except ValueError as exc:
        raise sio.MalformedInput(str(exc)) from None
    if len(sign) != loop.h or not is_strict(sign):
        raise sio.MalformedInput(f"--sign must be a strict sign of length {loop.h}")
    report = StabilityReport("inconclusive", "stable-data")
    _fill_stable(report, loop, sign)
    _emit(args, sio.dumps(sio.report_to_json(report)))
    return EXIT_OK


def cmd_loop_entropy(args):
    from .entropy import degree_growth_slope, entropy_bounds
    from .stability import check
    loop = _valid_loop(args.loop)
    n_max = args.n_max if args.n_max is not None else 10
    ratios, slope = degree_growth_slope(loop, (0, n_max), args.source, args.term_budget)
    report = check(loop, "auto", orbit_cap=args.orbit_cap)
    if args.format == "csv":
        rows = [[n, "" if r is None else r] for n, r in enumerate(ratios)]
        _emit(args, sio.rows_to_csv(["n", f"log_ratio_{args.source}"], rows))
        return EXIT_OK
    out = {"source": args.source, "log_ratios": ratios, "tail_slope": slope,
           "verdict": report.verdict}
    if report.stable:
        est = entropy_bounds(report)
        est.empirical_slopes[args.source] = ratios
        out["bounds"] = est
    _emit(args, sio.dumps(out))
    return EXIT_OK if report.stable else EXIT_INCONCLUSIVE


def cmd_loop_cgf(args):
    from .cgf import cgf_along_loop
    loop = _valid_loop(args.loop)
    n = args.n_max if args.n_max is not None else 3
    _emit(args, sio.dumps(sio.snapshots_to_json(cgf_along_loop(loop, n))))
    return EXIT_OK


def cmd_fm_build(args):
    from .fm import fm_build
    try:
        loop = fm_build(_ints(args.a))
    except SeedError as exc:
        raise sio.MalformedInput(str(exc)) from None
    _emit(args, sio.dumps(sio.loop_to_json(loop)))
    return EXIT_OK


def cmd_fm_check(args):
    from .fm import fm_stability
    try:
        a = _ints(args.a)
        report = fm_stability(a, n_max=args.n_max, orbit_cap=args.orbit_cap)
    except SeedError as exc:
        raise sio.MalformedInput(str(exc)) from None
    return _output_report(args, report)


def cmd_cones_export(args):
    from .polyhedra import sign_cone_decomposition, stereographic_arcs
    from .tropical import sign_string
    loop = _valid_loop(args.loop)
    n = args.n if args.n is not None else 1
    decomp = sign_cone_decomposition(loop, n)
    if args.project == "stereographic":
        if loop.n != 3:
            raise sio.MalformedInput("stereographic projection needs N = 3")
        rows = []
        for eps, cone in decomp:
            for arc, t, u, v in stereographic_arcs(cone):
                rows.append([sign_string(eps), arc, t, u, v])
        _emit(args, sio.rows_to_csv(["sign", "arc", "t", "u", "v"], rows))
        return EXIT_OK
    if args.format == "csv":
        rows = [[sign_string(eps), ";".join(" ".join(map(str, r)) for r in c.rays)]
                for eps, c in decomp]
        _emit(args, sio.rows_to_csv(["sign", "rays"], rows))
    else:
        _emit(args, sio.dumps([{"sign": sign_string(eps), "cone": c.to_json()}
                               for eps, c in decomp]))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--n-max", type=int, default=None)
    common.add_argument("--orbit-cap", type=int, default=64)
    common.add_argument("--term-budget", type=int, default=None)

    p = argparse.ArgumentParser(prog="signstab", description=__doc__.splitlines()[0])
    groups = p.add_subparsers(dest="group", required=True)

    seed = groups.add_parser("seed").add_subparsers(dest="cmd", required=True)
    s = seed.add_parser("mutate", parents=[common])
    s.add_argument("--seed", required=True)
    s.add_argument("--k", type=int, required=True, help="1-based index")
    s.set_defaults(func=cmd_seed_mutate)

    loop = groups.add_parser("loop").add_subparsers(dest="cmd", required=True)
    s = loop.add_parser("validate", parents=[common])
    s.add_argument("--loop", required=True)
    s.set_defaults(func=cmd_loop_validate)
    s = loop.add_parser("orbit", parents=[common])
    s.add_argument("--loop", required=True)
    s.add_argument("--point", help="comma-separated integers (default l+)")
    s.add_argument("--steps", type=int)
    s.set_defaults(func=cmd_loop_orbit)
    s = loop.add_parser("check", parents=[common])
    s.add_argument("--loop", required=True)
    s.add_argument("--method", default="auto",
                   choices=("inductive", "heuristic", "two-sided", "auto"))
    s.add_argument("--cone")
    s.set_defaults(func=cmd_loop_check)
    s = loop.add_parser("stable", parents=[common])
    s.add_argument("--loop", required=True)
    s.add_argument("--sign", required=True)
    s.set_defaults(func=cmd_loop_stable)
    s = loop.add_parser("entropy", parents=[common])
    s.add_argument("--loop", required=True)
    s.add_argument("--source", choices=("C", "G", "F", "A"), default="C")
    s.set_defaults(func=cmd_loop_entropy)
    s = loop.add_parser("cgf", parents=[common])
    s.add_argument("--loop", required=True)
    s.set_defaults(func=cmd_loop_cgf)

    fm = groups.add_parser("fm").add_subparsers(dest="cmd", required=True)
    s = fm.add_parser("build", parents=[common])
    s.add_argument("--a", required=True)
    s.set_defaults(func=cmd_fm_build)
    s = fm.add_parser("check", parents=[common])
    s.add_argument("--a", required=True)
    s.set_defaults(func=cmd_fm_check)

    cones = groups.add_parser("cones").add_subparsers(dest="cmd", required=True)
    s = cones.add_parser("export", parents=[common])
    s.add_argument("--loop", required=True)
    s.add_argument("--n", type=int, help="power of the loop (default 1)")
    s.add_argument("--project", choices=("stereographic",))
    s.set_defaults(func=cmd_cones_export)
    return p


def _merge_negative_values(argv):
    # "--a -2,2" would otherwise be read as an option
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--a", "--point") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_negative_values(argv))
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    if args.n_max is None and args.func in (cmd_loop_check, cmd_fm_check):
        args.n_max = 3 if args.func is cmd_loop_check else 2
    for name in ("n_max", "orbit_cap", "term_budget"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            sys.stderr.write(f"error: --{name.replace('_', '-')} must be positive\n")
            return EXIT_MALFORMED
    try:
        return args.func(args)
    except sio.MalformedInput as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except TermBudgetExceeded as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
