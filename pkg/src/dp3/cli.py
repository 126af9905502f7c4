"""Command line front end: verification suites, cluster variable computation
by any route, diamond export, and calibration management.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage, configuration
or I/O error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .laurent import ALL_ONES, SIGMA, LaurentPoly
from .quiver import (
    MUTATION_CYCLE,
    initial_b_matrix,
    initial_seed,
    mutate_matrix,
    mutate_seed,
    recurrence_y,
)
from .tiling import BlockScheme, quiver_from_tiling
from . import calibration as cal
from .diamonds import (
    build_diamond,
    boundary_vector,
    boundary_vector_closed,
    covering_monomial,
    covering_monomial_closed,
    face_vector,
    face_vector_closed,
    graph_to_dot,
    graph_to_json,
    graph_to_svg,
)
from .matchings import (
    aggregate_enumeration,
    condensation_instance,
    count_pm,
    matchings_route_y,
    verify_condensation,
    weighted_pm_sum,
)

SUITES = ("theorem", "counts", "recursions", "quiver", "oracle")


@dataclass
class Config:
    max_half_order: int = 8
    calibration: Path | None = None
    fmt: str = "text"

    def __post_init__(self):
        if self.max_half_order < 1:
            raise ValueError("max_half_order must be >= 1")


def pm_count_closed(n: int) -> int:
    """|PM(D_{N/2})|: 2^(m(m+1)) at integer order, 2^((m+1/2)^2) at half."""
    return 2 ** ((n // 2) * (n // 2 + 1)) if n % 2 == 0 else 2 ** (((n + 1) // 2) ** 2)


def _digest(value) -> str:
    text = str(value)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


@dataclass
class CheckResult:
    check_id: str
    ok: bool
    lhs_digest: str
    rhs_digest: str
    seconds: float


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, check_id: str, lhs, rhs, started: float) -> bool:
        ok = lhs == rhs
        self.checks.append(CheckResult(check_id, ok, _digest(lhs), _digest(rhs),
                                       time.monotonic() - started))
        return ok

    def to_doc(self) -> dict:
        return {
            "suite": self.suite,
            "overall": "pass" if self.ok else "fail",
            "checks": [
                {"id": c.check_id, "status": "pass" if c.ok else "fail",
                 "lhs": c.lhs_digest, "rhs": c.rhs_digest,
                 "seconds": round(c.seconds, 3)}
                for c in self.checks
            ],
        }


def suite_counts(cfg: Config, scheme: BlockScheme) -> SuiteReport:
    rep = SuiteReport("counts")
    for n in range(1, cfg.max_half_order + 1):
        t = time.monotonic()
        got = count_pm(build_diamond(n, False, scheme))
        rep.check(f"counts/pm/N={n}", got, pm_count_closed(n), t)
        t = time.monotonic()
        spec = recurrence_y(n)[0].evaluate(ALL_ONES)
        rep.check(f"counts/specialize/N={n}", spec, pm_count_closed(n), t)
    return rep


def suite_theorem(cfg: Config, scheme: BlockScheme) -> SuiteReport:
    rep = SuiteReport("theorem")
    for n in range(1, cfg.max_half_order + 1):
        y, yp = recurrence_y(n)
        t = time.monotonic()
        rep.check(f"theorem/y/N={n}", matchings_route_y(n, False, scheme), y, t)
        t = time.monotonic()
        rep.check(f"theorem/yprime/N={n}", matchings_route_y(n, True, scheme), yp, t)
    return rep


def _monomial(*labels: int) -> LaurentPoly:
    exps = [0] * 6
    for l in labels:
        exps[l - 1] += 1
    return LaurentPoly.monomial(1, exps)


def suite_recursions(cfg: Config, scheme: BlockScheme) -> SuiteReport:
    rep = SuiteReport("recursions")
    for n in range(2, cfg.max_half_order // 2 + 1):
        t = time.monotonic()
        res = verify_condensation(condensation_instance(n, 1, scheme))
        rep.check(f"recursions/weights/kind1/n={n}", res.lhs, res.rhs, t)
    for n in range(1, (cfg.max_half_order + 1) // 2 + 1):
        t = time.monotonic()
        res = verify_condensation(condensation_instance(n, 2, scheme))
        rep.check(f"recursions/weights/kind2/n={n}", res.lhs, res.rhs, t)

    # the closed-form checks are monomial arithmetic; always cover n <= 5
    top = max(5, (cfg.max_half_order + 1) // 2)
    for n in range(2, 2 * top + 2):
        t = time.monotonic()
        rep.check(f"recursions/faces/N={n}", face_vector(n, False, scheme),
                  face_vector_closed(n), t)
        t = time.monotonic()
        rep.check(f"recursions/boundary/N={n}", boundary_vector(n, False, scheme),
                  boundary_vector_closed(n), t)
        t = time.monotonic()
        rep.check(f"recursions/cover/N={n}", covering_monomial(n, False, scheme),
                  covering_monomial_closed(n), t)
    t = time.monotonic()
    rep.check("recursions/cover/N=1", covering_monomial(1, False, scheme),
              _monomial(1, 2, 3, 5, 6), t)
    t = time.monotonic()
    rep.check("recursions/cover/N=0", covering_monomial(0, False, scheme),
              _monomial(3), t)

    def m(n: int, primed: bool = False) -> LaurentPoly:
        return covering_monomial(n, primed, scheme)

    for n in range(2, top + 1):
        lhs = m(2 * n) * m(2 * n - 3)
        prod = LaurentPoly.monomial(1, (
            2 * n * n - 3 * n + 3, 2 * n * n - 3 * n + 3, 2 * n * n - n + 2,
            2 * n * n - 3 * n + 2, 2 * n * n - 3 * n + 3, 2 * n * n - n + 1))
        t = time.monotonic()
        rep.check(f"recursions/cover-rec1/unprimed/n={n}",
                  m(2 * n - 1) * m(2 * n - 2) * _monomial(1, 2, 3, 4, 5, 6), lhs, t)
        t = time.monotonic()
        rep.check(f"recursions/cover-rec1/primed/n={n}",
                  m(2 * n - 1, True) * m(2 * n - 2, True) * _monomial(1, 2, 2, 3, 3, 5), lhs, t)
        t = time.monotonic()
        rep.check(f"recursions/cover-rec1/product/n={n}", lhs, prod, t)
    for n in range(1, top + 1):
        lhs = m(2 * n + 1) * m(2 * n - 2)
        prod = LaurentPoly.monomial(1, (
            2 * n * n - n + 2, 2 * n * n - n + 2, 2 * n * n + n + 2,
            2 * n * n - n + 1, 2 * n * n - n + 2, 2 * n * n + n + 1))
        t = time.monotonic()
        rep.check(f"recursions/cover-rec2/unprimed/n={n}",
                  m(2 * n) * m(2 * n - 1) * _monomial(1, 3, 2, 6, 4, 5), lhs, t)
        t = time.monotonic()
        rep.check(f"recursions/cover-rec2/primed/n={n}",
                  m(2 * n, True) * m(2 * n - 1, True) * _monomial(1, 3, 2, 3, 2, 5), lhs, t)
        t = time.monotonic()
        rep.check(f"recursions/cover-rec2/product/n={n}", lhs, prod, t)
    return rep


def suite_quiver(cfg: Config, scheme: BlockScheme) -> SuiteReport:
    rep = SuiteReport("quiver")
    b0 = initial_b_matrix()

    t = time.monotonic()
    rep.check("quiver/skew", all(b0[i][j] == -b0[j][i] for i in range(6) for j in range(6)),
              True, t)
    t = time.monotonic()
    sig = [SIGMA(i) for i in range(1, 7)]
    rep.check("quiver/sigma-invariant",
              all(b0[sig[i] - 1][sig[j] - 1] == b0[i][j] for i in range(6) for j in range(6)),
              True, t)
    t = time.monotonic()
    rep.check("quiver/antipodal-zero", [b0[i][sig[i] - 1] for i in range(6)], [0] * 6, t)

    t = time.monotonic()
    b = b0
    for k in MUTATION_CYCLE:
        b = mutate_matrix(b, k)
    rep.check("quiver/period-6", b, b0, t)

    t = time.monotonic()
    rep.check("quiver/involution",
              all(mutate_matrix(mutate_matrix(b0, k), k) == b0 for k in range(1, 7)), True, t)

    for a in (1, 2, 3):
        t = time.monotonic()
        pair = {a, SIGMA(a)}
        got = mutate_matrix(mutate_matrix(b0, a), SIGMA(a))
        want = tuple(tuple(-b0[i][j] if (i + 1 in pair) != (j + 1 in pair) else b0[i][j]
                           for j in range(6)) for i in range(6))
        rep.check(f"quiver/pair-negation/a={a}", got, want, t)

    t = time.monotonic()
    dual = quiver_from_tiling(scheme.labeling)
    neg = tuple(tuple(-v for v in row) for row in dual)
    rep.check("quiver/tiling-duality", dual == b0 or neg == b0, True, t)

    t = time.monotonic()
    seed = initial_seed()
    ok = True
    for s in range(2 * cfg.max_half_order):
        seed = mutate_seed(seed, MUTATION_CYCLE[s % 6])
        n = s // 2 + 1
        want = recurrence_y(n)[s % 2]
        ok = ok and seed.cluster[MUTATION_CYCLE[s % 6] - 1] == want
    rep.check(f"quiver/seed-vs-recurrence/N<={cfg.max_half_order}", ok, True, t)

    for n in range(1, cfg.max_half_order + 1):
        y, yp = recurrence_y(n)
        t = time.monotonic()
        rep.check(f"quiver/sigma-pair/N={n}", y.permute(SIGMA), yp, t)
        t = time.monotonic()
        rep.check(f"quiver/positivity/N={n}", y.min_coefficient() > 0, True, t)
    return rep


def suite_oracle(cfg: Config, scheme: BlockScheme) -> SuiteReport:
    rep = SuiteReport("oracle")
    for n in range(1, min(4, cfg.max_half_order) + 1):
        for primed in (False, True):
            tag = f"N={n}/{'primed' if primed else 'unprimed'}"
            g = build_diamond(n, primed, scheme)
            t = time.monotonic()
            dp = weighted_pm_sum(g, "yx")
            rep.check(f"oracle/enumeration/{tag}", dp, aggregate_enumeration(g), t)
            t = time.monotonic()
            rep.check(f"oracle/sweep-order/{tag}", weighted_pm_sum(g, "xy"), dp, t)
            t = time.monotonic()
            rep.check(f"oracle/count-order/{tag}", count_pm(g, "xy"), count_pm(g, "yx"), t)
    return rep


_SUITE_FUNCS = {
    "theorem": suite_theorem,
    "counts": suite_counts,
    "recursions": suite_recursions,
    "quiver": suite_quiver,
    "oracle": suite_oracle,
}


def _get_scheme(cfg: Config, recalibrate: bool = False) -> BlockScheme:
    if cfg.calibration is not None:
        path = cfg.calibration
        if path.exists() and not recalibrate:
            return cal.load_calibration(path)
        scheme = cal.calibrate()
        cal.save_calibration(scheme, path)
        return scheme
    return cal.default_scheme()


def cmd_verify(args) -> int:
    try:
        cfg = Config(max_half_order=args.max_half_order,
                     calibration=args.calibration, fmt=args.format)
        scheme = _get_scheme(cfg)
    except (ValueError, OSError, cal.CalibrationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [_SUITE_FUNCS[name](cfg, scheme) for name in names]
    if cfg.fmt == "json":
        print(json.dumps([r.to_doc() for r in reports], indent=1))
    else:
        for rep in reports:
            for c in rep.checks:
                status = "PASS" if c.ok else "FAIL"
                print(f"{status}  {c.check_id}  lhs={c.lhs_digest} rhs={c.rhs_digest}"
                      f"  ({c.seconds:.3f}s)")
            print(f"suite {rep.suite}: {'pass' if rep.ok else 'FAIL'} "
                  f"({len(rep.checks)} checks)")
    return 0 if all(r.ok for r in reports) else 1


def seed_route_y(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(y_N, y'_N) computed purely by seed mutation, no recurrence cross-check."""
    seed = initial_seed()
    y = yp = None
    for s in range(2 * n):
        k = MUTATION_CYCLE[s % 6]
        seed = mutate_seed(seed, k)
        if s == 2 * n - 2:
            y = seed.cluster[k - 1]
        elif s == 2 * n - 1:
            yp = seed.cluster[k - 1]
    return y, yp


def cmd_compute(args) -> int:
    n = args.n
    prime = args.target == "yp"
    try:
        cfg = Config(calibration=args.calibration, fmt=args.format)
        if args.via == "matchings":
            if n < 1:
                raise ValueError("the matching route needs N >= 1")
            poly = matchings_route_y(n, prime, _get_scheme(cfg))
        elif args.via == "seed":
            if n < 1:
                raise ValueError("the seed route needs N >= 1")
            y, yp = seed_route_y(n)
            poly = yp if prime else y
        else:
            if n < -2:
                raise ValueError("the recurrence needs N >= -2")
            poly = recurrence_y(n)[1 if prime else 0]
    except (ValueError, OSError, cal.CalibrationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    name = f"y'_{n}" if prime else f"y_{n}"
    if args.format == "json":
        print(json.dumps({
            "target": name, "n": n, "via": args.via, "poly": str(poly),
            "term_count": poly.term_count(),
            "eval_at_ones": int(poly.evaluate(ALL_ONES)),
        }, indent=1))
    else:
        print(str(poly))
        print(f"# {name} via {args.via}: {poly.term_count()} terms, "
              f"value {poly.evaluate(ALL_ONES)} at x_i = 1")
    return 0


def cmd_export(args) -> int:
    try:
        cfg = Config(calibration=args.calibration)
        graph = build_diamond(args.half_order, args.primed, _get_scheme(cfg))
        render = {"json": graph_to_json, "dot": graph_to_dot, "svg": graph_to_svg}[args.format]
        text = render(graph)
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    except (ValueError, OSError, cal.CalibrationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


def cmd_calibrate(args) -> int:
    try:
        if args.out is not None and Path(args.out).exists() and not args.recalibrate:
            scheme = cal.load_calibration(args.out)
            source = "loaded"
        else:
            scheme = cal.calibrate()
            source = "computed"
            if args.out is not None:
                cal.save_calibration(scheme, args.out)
    except (cal.CalibrationFailed, cal.CalibrationAmbiguous) as e:
        print(f"calibration failed: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError, cal.CalibrationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    lab = scheme.labeling
    print(f"{source}: up={lab.up} down={lab.down} rho_center={lab.rho_center}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dp3", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-half-order", type=int, default=8, metavar="N")
    v.add_argument("--calibration", type=Path, default=None, metavar="PATH")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", help="compute y_N or y'_N")
    c.add_argument("--target", choices=("y", "yp"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--via", choices=("recurrence", "seed", "matchings"),
                   default="recurrence")
    c.add_argument("--calibration", type=Path, default=None, metavar="PATH")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("export", help="export a diamond graph")
    e.add_argument("--half-order", type=int, required=True, metavar="N")
    e.add_argument("--primed", action="store_true")
    e.add_argument("--format", choices=("json", "dot", "svg"), default="json")
    e.add_argument("--out", required=True, metavar="PATH")
    e.add_argument("--calibration", type=Path, default=None, metavar="PATH")
    e.set_defaults(func=cmd_export)

    k = sub.add_parser("calibrate", help="run or load the calibration search")
    k.add_argument("--recalibrate", action="store_true")
    k.add_argument("--out", type=Path, default=None, metavar="PATH")
    k.set_defaults(func=cmd_calibrate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
