"""Command line front end: ``qacs verify|series|basis|all``.

Exit status is 0 when every comparison came out as expected, 1 on a mismatch
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import repeat

from .acslimits.basis import BasisError, BasisVerificationError, candidate_monomials, express_in_divisor_basis
from .acslimits.catalog import EULER_ARGUMENTS, Entry, catalog, run_entry
from .acslimits.closed_forms import t_j_series
from .acslimits.recurrence import Exponential, Periodic, Polynomial, limit_series
from .acslimits.verify import VerificationReport
from .numbertheory import s_k_series
from .series import to_json

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

VERIFY_TARGETS = (
    "poly", "exp", "periodic", "ceiling", "cor-alt", "cor-theta",
    "lemma-euler", "lemma-s0", "lemma-qgauss", "lemma-rootid",
)
COR_ALT_EXPRESSIONS = ("theta", "odd_pochhammer_sum", "half_product", "periodic_case",
                       "ceiling_form", "exponential_case")
COR_THETA_EXPRESSIONS = ("limit_a_n", "limit_via_beta", "exponential_case", "theta")
# flags whose values may legitimately start with "-"
_VALUE_FLAGS = ("--coeffs", "--values", "--b", "--c", "--x")


@dataclass
class RunConfig:
    command: str
    target: str | None = None
    order: int = 40
    coeffs: tuple | None = None
    b: Fraction | None = None
    c: Fraction | None = None
    x: object = None
    values: tuple | None = None
    j: int | None = None
    k: int | None = None
    N: int | None = None
    fit: int | None = None
    check: int | None = None
    expression: str = "corrected"
    fmt: str = "text"
    output: str | None = None
    jobs: int = 1
    timing: bool = True
    name: str | None = None


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not an exact rational (use an integer or p/q)"
        ) from None


def parse_rational_list(text: str) -> tuple:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list such as 1,-2,3/4")
    return tuple(parse_rational(t) for t in items)


def parse_euler_arg(text: str):
    if text.strip() in ("q", "-q"):
        return text.strip()
    return parse_rational(text)


def non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def positive(text: str) -> int:
    v = non_negative(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qacs",
        description="Exact verification of limit identities for the q-polynomials "
        "a_n(q) = f(n) + (1 - q^(n-1)) a_{n-1}(q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_default=40):
        p.add_argument("--order", type=non_negative, default=order_default,
                       help="truncation order M: series are compared modulo q^(M+1)")
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write the report here instead of standard output")
        p.add_argument("--no-timing", dest="timing", action="store_false",
                       help="report 0 ms everywhere so output is byte-for-byte reproducible")

    v = sub.add_parser("verify", help="check one identity")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--coeffs", type=parse_rational_list, help="polynomial f: c_0,c_1,...")
    v.add_argument("--b", type=parse_rational, help="exponential base b (b != 1); q-Gauss b")
    v.add_argument("--c", type=parse_rational, help="q-Gauss parameter c")
    v.add_argument("--x", type=parse_euler_arg, help="Euler-sum argument: rational, q or -q")
    v.add_argument("--values", type=parse_rational_list, help="one period f(1),...,f(N)")
    v.add_argument("--j", type=int, help="index j (roots-of-unity lemma)")
    v.add_argument("--N", type=positive, help="root-of-unity order")
    v.add_argument("--expression", choices=("corrected", "printed", "all"), default="corrected",
                   help="cor-alt: which sign of the half-product expression to check")
    common(v)

    s = sub.add_parser("series", help="print a series")
    s.add_argument("--name", required=True, choices=("Sk", "T", "limit"))
    s.add_argument("--k", type=non_negative, help="S_k index")
    s.add_argument("--j", type=positive, help="T_j index")
    s.add_argument("--coeffs", type=parse_rational_list)
    s.add_argument("--b", type=parse_rational)
    s.add_argument("--values", type=parse_rational_list)
    common(s)

    bs = sub.add_parser("basis", help="express T_j in S_0, ..., S_j")
    bs.add_argument("--j", type=positive, required=True)
    bs.add_argument("--fit", type=non_negative)
    bs.add_argument("--check", type=non_negative, default=80)
    bs.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    bs.add_argument("--output")

    a = sub.add_parser("all", help="run the whole catalog")
    common(a)
    a.add_argument("--jobs", type=positive, default=1, help="worker processes")
    parser.set_defaults(_subparsers={"verify": v, "series": s, "basis": bs, "all": a})
    return parser


def _fix_negative_values(argv: list[str]) -> list[str]:
    """Glue ``--values -1,1`` into ``--values=-1,1`` so argparse does not read -1,1 as a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    known = {f for f in RunConfig.__dataclass_fields__}
    kwargs = {k: v for k, v in vars(ns).items() if k in known and v is not None}
    return RunConfig(**kwargs)


def _fmt_values(values) -> str:
    return ",".join(str(v) for v in values)


def verify_entries(cfg: RunConfig, error) -> list[Entry]:
    """Catalog-style entries for ``qacs verify TARGET``; ``error`` reports usage problems."""
    t = cfg.target

    def need(name):
        if getattr(cfg, name) is None:
            error(f"verify {t} requires --{name}")
        return getattr(cfg, name)

    if t == "poly":
        c = need("coeffs")
        return [Entry(f"poly[{_fmt_values(c)}] rhs=limit", "poly", (c,))]
    if t == "exp":
        b = need("b")
        if b == 1:
            error("argument --b: b = 1 is the polynomial case f(n) = 1; "
                  "use `qacs verify poly --coeffs 1`")
        return [Entry(f"exp[b={b}] rhs=limit", "exp", (b,)),
                Entry(f"exp[b={b}] iterated=limit", "exp-iterated", (b,))]
    if t in ("periodic", "ceiling"):
        vals = need("values")
        tag = _fmt_values(vals)
        if t == "ceiling":
            return [Entry(f"ceiling[{tag}] ceiling=limit", "ceiling", (vals,))]
        return [Entry(f"periodic[{tag}] rhs=limit", "periodic", (vals,)),
                Entry(f"periodic[{tag}] iterated=limit", "periodic-iterated", (vals,))]
    if t == "cor-alt":
        names = []
        if cfg.expression in ("corrected", "all"):
            names += list(COR_ALT_EXPRESSIONS)
        if cfg.expression in ("printed", "all"):
            names.append("half_product_printed")
        # the printed sign is a documented mismatch: tagged XFAIL, still exit status 1
        return [Entry(f"cor-alt limit={n}", "cor-alt", (n,), n != "half_product_printed")
                for n in names]
    if t == "cor-theta":
        return [Entry(f"cor-theta product={n}", "cor-theta", (n,)) for n in COR_THETA_EXPRESSIONS]
    if t == "lemma-euler":
        xs = [cfg.x] if cfg.x is not None else list(EULER_ARGUMENTS)
        for x in xs:
            if x == 1:
                error("argument --x: x = 1 is a pole of the Euler sum")
        return [Entry(f"lemma-euler[x={x}] sum*(x;q)_inf=1", "lemma-euler", (x,)) for x in xs]
    if t == "lemma-s0":
        return [Entry(f"lemma-s0 {n}=divisor_sum", "lemma-s0", (n,))
                for n in ("pochhammer_weighted", "alternating_triangular")]
    if t == "lemma-qgauss":
        b = cfg.b if cfg.b is not None else Fraction(1, 2)
        c = cfg.c if cfg.c is not None else Fraction(1, 3)
        if b == 0:
            error("argument --b: the q-Gauss limit needs b != 0")
        if c == 1:
            error("argument --c: c = 1 makes (c;q)_n vanish")
        return [Entry(f"lemma-qgauss[b={b},c={c}] lhs=rhs", "lemma-qgauss", (b, c))]
    if t == "lemma-rootid":
        N = need("N")
        if cfg.j is not None:
            return [Entry(f"lemma-rootid[N={N},j={cfg.j}]", "lemma-rootid", (N, cfg.j))]
        return [Entry(f"lemma-rootid[N={N}] -N<j<=2N", "lemma-rootid", (N,))]
    raise AssertionError(t)


def _run_entries(entries, M, jobs):
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_entry, entries, repeat(M), chunksize=1))
    return [run_entry(e, M) for e in entries]


def _report_line(r: VerificationReport, timing: bool) -> str:
    if r.match:
        tag = "PASS" if r.expect_match else "UPASS"
    else:
        tag = "XFAIL" if not r.expect_match else "FAIL"
    line = f"{tag:<6}{r.case}"
    if r.mismatch is not None:
        m = r.mismatch
        line += f"  first mismatch at q^{m.power}: lhs {m.lhs}, rhs {m.rhs}"
    if timing:
        line += f"  [{r.millis} ms]"
    return line


def _emit_reports(reports, cfg: RunConfig, out, summary: bool):
    if not cfg.timing:
        reports = [replace(r, millis=0) for r in reports]
    if cfg.fmt == "json":
        for r in reports:
            out.write(json.dumps(r.to_json(), sort_keys=False) + "\n")
        return
    for r in reports:
        out.write(_report_line(r, cfg.timing) + "\n")
        if r.note:
            out.write(f"      {r.note}\n")
    if summary:
        passed = sum(r.passed for r in reports)
        xfail = sum((not r.match) and (not r.expect_match) for r in reports)
        line = (f"TOTAL {len(reports)} cases at order {cfg.order}: {passed} as expected, "
                f"{len(reports) - passed} unexpected ({xfail} documented expected mismatches)")
        if cfg.timing:
            line += f"  [{sum(r.millis for r in reports)} ms]"
        out.write(line + "\n")


def _series_for(cfg: RunConfig, error):
    M = cfg.order
    if cfg.name == "Sk":
        if cfg.k is None:
            error("series --name Sk requires --k")
        return s_k_series(cfg.k, M)
    if cfg.name == "T":
        if cfg.j is None:
            error("series --name T requires --j")
        return t_j_series(cfg.j, M)
    given = [n for n in ("coeffs", "b", "values") if getattr(cfg, n) is not None]
    if len(given) != 1:
        error("series --name limit requires exactly one of --coeffs, --b, --values")
    if cfg.coeffs is not None:
        spec = Polynomial(cfg.coeffs)
    elif cfg.values is not None:
        spec = Periodic(cfg.values)
    else:
        if cfg.b == 1:
            error("argument --b: b = 1 is the polynomial case; use --coeffs 1")
        spec = Exponential(cfg.b)
    return limit_series(spec, M)


class _UsageError(Exception):
    pass


def _raise_usage(msg):
    raise _UsageError(msg)


def run(cfg: RunConfig, out=None, error=None) -> int:
    """Execute one configuration, writing the report to ``out``; returns the exit status."""
    out = out if out is not None else sys.stdout
    if error is None:
        try:
            return run(cfg, out, _raise_usage)
        except _UsageError as exc:
            sys.stderr.write(f"qacs: error: {exc}\n")
            return EXIT_USAGE

    if cfg.command == "verify":
        entries = verify_entries(cfg, error)
        reports = _run_entries(entries, cfg.order, 1)
        _emit_reports(reports, cfg, out, summary=False)
        return EXIT_OK if all(r.match for r in reports) else EXIT_MISMATCH

    if cfg.command == "all":
        return run_all(cfg, out)

    if cfg.command == "series":
        s = _series_for(cfg, error)
        if cfg.fmt == "json":
            out.write(json.dumps(to_json(s)) + "\n")
        else:
            out.write(str(s) + "\n")
        return EXIT_OK

    if cfg.command == "basis":
        j = cfg.j
        fit = cfg.fit if cfg.fit is not None else max(len(candidate_monomials(j)), 20)
        check = cfg.check
        if not check > fit >= len(candidate_monomials(j)):
            error(f"argument --fit/--check: need check > fit >= {len(candidate_monomials(j))}")
        try:
            poly = express_in_divisor_basis(j, fit, check)
            status, text = "ok", str(poly)
        except BasisVerificationError as exc:
            status, text = "verification-failure", str(exc)
        except BasisError as exc:
            status, text = "no-solution", str(exc)
        if cfg.fmt == "json":
            out.write(json.dumps({"j": j, "fit": fit, "check": check, "status": status,
                                  "polynomial": text if status == "ok" else None,
                                  "detail": None if status == "ok" else text}) + "\n")
        else:
            out.write(f"T_{j} = {text}\n" if status == "ok" else f"{status}: {text}\n")
        return EXIT_OK if status == "ok" else EXIT_MISMATCH

    raise AssertionError(cfg.command)


def run_all(cfg: RunConfig, out=None) -> int:
    """Run the full catalog; one line per case plus a total. Exit 0 iff every case is as expected."""
    out = out if out is not None else sys.stdout
    reports = _run_entries(catalog(), cfg.order, cfg.jobs)
    _emit_reports(reports, cfg, out, summary=cfg.fmt == "text")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    argv = _fix_negative_values(list(sys.argv[1:] if argv is None else argv))
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)

    def error(msg):
        # usage errors show the grammar of the subcommand that was invoked
        ns._subparsers[ns.command].error(msg)

    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            return run(cfg, fh, error)
    return run(cfg, sys.stdout, error)


if __name__ == "__main__":
    sys.exit(main())
