"""Command-line entry point: ``marypoly <command> [options]``.

Exit status is 0 when every enabled check passes, 1 on a failed check and
2 on an invalid invocation.  Output is deterministic: JSON keys are sorted
and floats are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from contextlib import contextmanager

from . import checks
from . import congruence as cg
from . import mahler as mh
from . import partitions as pt
from . import roots as rt
from .errors import NoConvergence
from .mseq import MSeq

log = logging.getLogger("marypoly")

DEFAULT_SEED = 20240101


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _jsonable(obj):
    if isinstance(obj, float):
        return float(fmt_float(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ":"))


@contextmanager
def _output(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _csv_writer(fh):
    return csv.writer(fh, lineterminator="\n")


def _mseq(text: str) -> MSeq:
    try:
        return MSeq.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def _base(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("base must be at least 2")
    return v


# ---------------------------------------------------------------------------
# commands


def cmd_poly(args) -> int:
    p = pt.p_poly(args.mseq, args.n)
    if args.format == "plain":
        print(str(p))
    else:
        print(p.to_json())
    return 0


def cmd_table(args) -> int:
    table = pt.oracle_series(args.mseq, args.max_n)
    with _output(args.out) as fh:
        if args.format == "json":
            rows = [{"n": n, "j": j, "a": a} for n, j, a in table.to_csv_rows()]
            fh.write(dump_json(rows) + "\n")
        else:
            w = _csv_writer(fh)
            w.writerow(["n", "j", "a"])
            w.writerows(table.to_csv_rows())
    return 0


def cmd_spartitions(args) -> int:
    s = pt.s_partitions(args.mseq, args.max_n)
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(dump_json([{"n": n, "s": v} for n, v in enumerate(s)]) + "\n")
        else:
            w = _csv_writer(fh)
            w.writerow(["n", "s"])
            w.writerows(enumerate(s))
    return 0


def cmd_roots(args) -> int:
    bound = rt.radius_bound(args.m)
    rows, failures = [], []
    counts = {"inside": 0, "on": 0, "outside": 0}
    worst, min_nonzero = 0.0, None
    for n in range(args.n_min, args.n_max + 1):
        try:
            rep = rt.root_report(args.m, n, tol=args.tol)
        except NoConvergence as exc:
            rep = exc.report
            failures.append({"n": n, "reason": "no convergence"})
        for z, res in zip(rep.roots, rep.residuals):
            rows.append((n, z.real, z.imag, abs(z), res))
        worst = max(worst, rep.max_modulus)
        rng = rep.nonzero_modulus_range()
        if rng:
            min_nonzero = rng[0] if min_nonzero is None else min(min_nonzero, rng[0])
        for key, v in rep.unit_circle_counts().items():
            counts[key] += v
        if rep.max_modulus >= bound + checks.ROOT_SLACK:
            failures.append({"n": n, "max_modulus": rep.max_modulus})
        if rep.residuals and max(rep.residuals) >= checks.ROOT_RESIDUAL:
            failures.append({"n": n, "max_residual": max(rep.residuals)})
    with _output(args.out) as fh:
        if args.format == "json":
            keys = ("n", "re", "im", "modulus", "residual")
            fh.write(dump_json([dict(zip(keys, r)) for r in rows]) + "\n")
        else:
            w = _csv_writer(fh)
            w.writerow(["n", "re", "im", "modulus", "residual"])
            for n, re, im, mod, res in rows:
                w.writerow([n, fmt_float(re), fmt_float(im), fmt_float(mod), fmt_float(res)])
    summary = {
        "m": args.m, "n_min": args.n_min, "n_max": args.n_max,
        "bound": bound, "max_modulus": worst, "strict_bound_held": worst < bound,
        "min_nonzero_modulus": min_nonzero, **counts,
        "failures": failures,
    }
    print(dump_json(summary), file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return 1 if failures else 0


def cmd_congruence(args) -> int:
    M = args.mseq
    failures = []
    rows = []
    checks_run = [("theorem", lambda n: cg.check_theorem(M, n).holds),
                  ("lemma", lambda n: cg.check_lemma(M, n)),
                  ("scalar", lambda n: cg.check_scalar(M, n).holds)]
    if args.quantum:
        if not M.is_constant:
            log.error("--quantum needs a constant sequence")
            return 2
        m = M.m_at(1)
        checks_run.append(("quantum", lambda n: cg.quantum_check(m, n)))
    for name, fn in checks_run:
        first = next((n for n in range(args.n_max + 1) if not fn(n)), None)
        rows.append((name, f"M={M};n<={args.n_max}", first is None))
        if first is not None:
            failures.append(_counterexample(name, M, first))
    _emit_verification(rows, args.format, args.out)
    for f in failures:
        print("counterexample: " + dump_json(f), file=sys.stderr)
    return 1 if failures else 0


def _counterexample(name: str, M: MSeq, n: int) -> dict:
    out = {"check": name, "mseq": str(M), "n": n}
    if name == "theorem":
        case = cg.check_theorem(M, n)
        out.update(digits=list(case.digits), modulus=list(case.modulus),
                   lhs=list(case.lhs), rhs=list(case.rhs))
    return out


def cmd_mahler(args) -> int:
    system = mh.mahler_system(args.m, args.k)
    ok = mh.verify_mahler(args.m, args.k, args.trunc, system)
    payload = {
        "m": args.m, "k": args.k, "trunc": args.trunc,
        "P": [list(p) for p in system.coeff_polys],
        "Q": list(system.inhom),
        "verified": ok,
        "q_closed_form": system.inhom == system.q_closed_form(),
    }
    if args.format == "plain":
        for j, p in enumerate(system.coeff_polys):
            print(f"P[{args.k},{j}] = {p}")
        print(f"Q[{args.k}] = {system.inhom}")
        print(f"verified through x^{args.trunc}: {ok}")
    else:
        print(dump_json(payload))
    return 0 if ok else 1


def cmd_kernel(args) -> int:
    if args.seq == "sign":
        if args.m % 2:
            log.warning("sign sequence for odd m is unbounded; class count will grow with depth")
        res = mh.kernel(args.m, args.len, args.depth)
    else:
        res = mh.kernel(args.m, args.len, args.depth,
                        lambda N: mh.coeff_mod_sequence(args.m, args.k, N))
    shown = args.show
    payload = {
        "m": args.m, "depth": args.depth, "len": args.len, "sequence": args.seq,
        "classes_distinguishable_at_this_resolution": len(res),
        "classes": [
            {"members": [list(x) for x in members[:8]], "size": len(members),
             "prefix": list(rep[:shown])}
            for members, rep in zip(res.classes, res.representatives)
        ],
    }
    if args.seq == "coeff":
        payload["k"] = args.k
    print(dump_json(payload))
    return 0


def cmd_verify_all(args) -> int:
    M = args.mseq or MSeq.constant(args.m)
    results = checks.verify_all(args.m, args.n_max, M=M, seed=args.seed,
                                root_limit=args.root_limit)
    rows = [(r.check, r.params, r.passed) for r in results]
    _emit_verification(rows, args.format, args.out, details=[r.detail for r in results])
    for r in results:
        if not r.passed:
            print(f"FAILED {r.check} [{r.params}]: " + dump_json(r.detail), file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


def _emit_verification(rows, fmt: str, out: str | None, details=None) -> None:
    with _output(out) as fh:
        if fmt == "json":
            recs = [{"check": c, "params": p, "pass": ok} for c, p, ok in rows]
            if details:
                for rec, d in zip(recs, details):
                    rec["detail"] = d
            fh.write(dump_json(recs) + "\n")
        elif fmt == "plain":
            width = max(len(c) for c, _, _ in rows)
            for c, p, ok in rows:
                fh.write(f"{'PASS' if ok else 'FAIL'}  {c.ljust(width)}  {p}\n")
        else:
            w = _csv_writer(fh)
            w.writerow(["check", "params", "pass"])
            for c, p, ok in rows:
                w.writerow([c, p, "true" if ok else "false"])


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="marypoly", description="M-ary partition polynomials: compute and verify.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, formats=("json", "csv", "plain"), default="csv"):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--format", choices=formats, default=default)
        return p

    p = add("poly", cmd_poly, "print p_M(n, t) as an ascending coefficient list",
            formats=("json", "plain"), default="json")
    p.add_argument("--mseq", type=_mseq, default=MSeq.constant(2))
    p.add_argument("--n", type=_nonneg, required=True)

    p = add("table", cmd_table, "a_M(j, n) table from the product expansion", ("json", "csv"))
    p.add_argument("--mseq", type=_mseq, default=MSeq.constant(2))
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--out")

    p = add("spartitions", cmd_spartitions, "partitions into parts M_i - 1", ("json", "csv"))
    p.add_argument("--mseq", type=_mseq, default=MSeq.constant(2))
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--out")

    p = add("roots", cmd_roots, "complex roots of p_m(n, t) for a range of n", ("json", "csv"))
    p.add_argument("--m", type=_base, required=True)
    p.add_argument("--n-min", type=_nonneg, default=1)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out")

    p = add("congruence", cmd_congruence, "check the polynomial congruences",
            default="plain")
    p.add_argument("--mseq", type=_mseq, default=MSeq.constant(2))
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--quantum", action="store_true")
    p.add_argument("--out")

    p = add("mahler", cmd_mahler, "Mahler equation coefficients and verification",
            formats=("json", "plain"), default="json")
    p.add_argument("--m", type=_base, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--trunc", type=_nonneg, default=400)

    p = add("kernel", cmd_kernel, "prefix-distinguishable m-kernel classes",
            formats=("json",), default="json")
    p.add_argument("--m", type=_base, required=True)
    p.add_argument("--depth", type=_nonneg, default=6)
    p.add_argument("--len", type=_nonneg, default=512)
    p.add_argument("--seq", choices=("sign", "coeff"), default="sign",
                   help="sign: p_m(n,-1); coeff: a_m(k,n) mod m")
    p.add_argument("--k", type=_nonneg, default=1)
    p.add_argument("--show", type=_nonneg, default=16, help="prefix terms printed per class")

    p = add("verify-all", cmd_verify_all, "run every check")
    p.add_argument("--m", type=_base, required=True)
    p.add_argument("--n-max", type=_nonneg, default=300)
    p.add_argument("--mseq", type=_mseq, default=None,
                   help="sequence for the general-M checks (default: constant m)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--root-limit", type=_nonneg, default=400,
                   help="sample this many n for the root check when n-max is larger")
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
