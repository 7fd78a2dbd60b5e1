"""Command-line entry point: verification suites, point evaluation, tables.

Reports are deterministic: checks are generated and emitted in a fixed
order, parameters are rendered as exact rational text, and the only
non-reproducible field is the wall-time summary entry.  Exit codes:
0 all checks pass, 1 any check failed or errored, 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .errors import QAskeyError
from .families import (
    AWParams,
    HahnParams,
    JacobiParams,
    KrawtchoukParams,
    QParams,
    QRacahParams,
    RacahParams,
    WilsonParams,
    askey_wilson_r,
    askey_wilson_r_at,
    cqu_r,
    cqu_r_alt,
    dual_hahn,
    hahn,
    hahn_weight,
    jacobi_r,
    krawtchouk,
    krawtchouk_weight,
    qracah,
    qracah_norms,
    qracah_weight,
    racah,
    racah_norms,
    racah_weight,
    ultraspherical_r,
    wilson_dual_phi,
)
from .identities import (
    ADDITION_POINTS_U,
    ADDITION_POINTS_V,
    ADDITION_QPARAMS,
    DEFAULT_ALPHAS,
    DEFAULT_QPARAMS,
    PYTHAGOREAN_PAIRS,
    LinearizationLattice,
    ParamGrid,
    check_addition,
    check_backward_shift,
    check_cqu_representations,
    check_difference_formula,
    check_dual_addition,
    check_dual_addition_a_form,
    check_duality_cqu,
    check_duality_discrete,
    check_linearization,
    check_orthogonality_discrete,
    check_product_formula_classical,
    check_restriction_equivalence,
    check_theorem_5_1,
    check_weight_ratio,
    linearization_racah_params,
)
from .numerics import (
    bessel_script_j,
    float_family_consistency,
    limit_check,
    numeric_orthogonality,
    numeric_weight,
)
from .series import format_rat, parse_rat

SUITE_NAMES = (
    "duality",
    "orthogonality",
    "weight-recurrence",
    "difference",
    "backward-shift",
    "linearization",
    "theorem-5-1",
    "dual-addition",
    "addition",
    "restriction",
    "product-formula",
    "limits",
    "numeric-orthogonality",
    "all",
)


# ---------------------------------------------------------------------------
# suite construction
# ---------------------------------------------------------------------------


def _record_from_report(report) -> dict:
    return report.to_dict()


def _limit_record(kind: str, params: dict) -> dict:
    r = limit_check(kind, params)
    rec = {
        "id": f"limit-{kind}",
        "params": {k: str(v) for k, v in sorted(params.items())},
        "verdict": r.verdict,
        "schedule": [str(v) for v in r.schedule],
        "errors": [repr(e) for e in r.errors],
        "ratios": [repr(e) for e in r.ratios],
    }
    return rec


def _threshold_record(check_id: str, params: dict, value: float, threshold: float) -> dict:
    return {
        "id": check_id,
        "params": {k: str(v) for k, v in sorted(params.items())},
        "verdict": "pass" if value < threshold else "fail",
        "residual": repr(value),
        "threshold": repr(threshold),
    }


def _suite_jobs(suite: str, grid: ParamGrid):
    """Ordered list of (job id, thunk) pairs for one suite."""
    grid = grid.with_defaults()
    qps = grid.qparams
    jobs = []

    def add(job):
        jobs.append(job)

    if suite in ("duality", "all"):
        for qp in qps:
            add(lambda qp=qp: _record_from_report(check_duality_cqu(qp, 6)))
        for N in range(1, 6):
            add(lambda N=N: _record_from_report(
                check_duality_discrete("krawtchouk", KrawtchoukParams(Fraction(1, 3), N))))
        for N in (3, 5):
            add(lambda N=N: _record_from_report(
                check_duality_discrete("krawtchouk", KrawtchoukParams(Fraction(1, 2), N))))
        for alpha, beta in ((Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(1))):
            for N in range(1, 6):
                add(lambda a=alpha, b=beta, N=N: _record_from_report(
                    check_duality_discrete("hahn-dual-hahn", HahnParams(a, b, N))))
        for N in range(1, 5):
            add(lambda N=N: _record_from_report(check_duality_discrete(
                "racah", RacahParams(Fraction(1, 2), Fraction(1, 3), N, Fraction(1, 5)))))
        add(lambda: _record_from_report(check_duality_discrete(
            "wilson", WilsonParams(1, Fraction(3, 2), 2, Fraction(5, 2)), nmax=4)))

    if suite in ("orthogonality", "all"):
        add(lambda: _record_from_report(
            check_orthogonality_discrete("krawtchouk", KrawtchoukParams(Fraction(1, 3), 5))))
        add(lambda: _record_from_report(
            check_orthogonality_discrete("krawtchouk", KrawtchoukParams(Fraction(1, 2), 4))))
        add(lambda: _record_from_report(
            check_orthogonality_discrete("hahn", HahnParams(Fraction(1, 2), Fraction(1, 3), 4))))
        add(lambda: _record_from_report(
            check_orthogonality_discrete("hahn", HahnParams(Fraction(1), Fraction(0), 5))))
        add(lambda: _record_from_report(
            check_orthogonality_discrete("racah", linearization_racah_params(Fraction(1, 2), 5, 3))))
        add(lambda: _record_from_report(
            check_orthogonality_discrete("racah", linearization_racah_params(Fraction(1), 4, 4))))
        add(lambda: _record_from_report(check_orthogonality_discrete(
            "q-racah", LinearizationLattice(qps[0], 5, 4).qrp)))
        add(lambda: _record_from_report(check_orthogonality_discrete(
            "q-racah", LinearizationLattice(qps[-1], 4, 3).qrp)))

    if suite in ("weight-recurrence", "all"):
        for qp in qps:
            add(lambda qp=qp: _record_from_report(check_weight_ratio(qp)))
            add(lambda qp=qp: _record_from_report(check_cqu_representations(qp, 8)))

    if suite in ("difference", "all"):
        for qp in qps:
            add(lambda qp=qp: _record_from_report(check_difference_formula(qp, 8)))

    if suite in ("backward-shift", "all"):
        add(lambda: _record_from_report(
            check_backward_shift(LinearizationLattice(qps[0], 4, 3).qrp, 3)))
        add(lambda: _record_from_report(
            check_backward_shift(LinearizationLattice(qps[1], 5, 4).qrp, 4)))

    if suite in ("linearization", "all"):
        for qp in qps:
            for l, m in grid.lm_pairs():
                add(lambda qp=qp, l=l, m=m: _record_from_report(
                    check_linearization("q", l, m, qp=qp)))
        for alpha in grid.alphas:
            for l in range(7):
                for m in range(l + 1):
                    add(lambda a=alpha, l=l, m=m: _record_from_report(
                        check_linearization("classical", l, m, alpha=a)))
        for l in range(7):
            for m in range(l + 1):
                add(lambda l=l, m=m: _record_from_report(check_linearization("legendre", l, m)))

    if suite in ("theorem-5-1", "all"):
        for qp in qps:
            sub = ParamGrid(grid.lmax, grid.mmax, grid.nmax, (qp,), grid.alphas)
            add(lambda sub=sub: _record_from_report(check_theorem_5_1(sub)))

    if suite in ("dual-addition", "all"):
        for qp in qps:
            for l, m in grid.lm_pairs():
                add(lambda qp=qp, l=l, m=m: _record_from_report(
                    check_dual_addition("q", l, m, mode="inversion", qp=qp)))
                for j in range(m + 1):
                    add(lambda qp=qp, l=l, m=m, j=j: _record_from_report(
                        check_dual_addition("q", l, m, j, "direct", qp=qp)))
        for alpha in (Fraction(1, 2), Fraction(1)):
            for l in range(5):
                for m in range(l + 1):
                    for j in range(m + 1):
                        add(lambda a=alpha, l=l, m=m, j=j: _record_from_report(
                            check_dual_addition("classical", l, m, j, alpha=a)))
        for l in range(4):
            for m in range(l + 1):
                for j in range(m + 1):
                    add(lambda l=l, m=m, j=j: _record_from_report(
                        check_dual_addition_a_form(qps[0], l, m, j)))

    if suite in ("addition", "all"):
        for qp in ADDITION_QPARAMS:
            for u in ADDITION_POINTS_U:
                for v in ADDITION_POINTS_V:
                    for n in range(6):
                        add(lambda qp=qp, u=u, v=v, n=n: _record_from_report(
                            check_addition("q", n, qp=qp, u=u, v=v)))
        combos = (
            (PYTHAGOREAN_PAIRS[0], PYTHAGOREAN_PAIRS[1], PYTHAGOREAN_PAIRS[2]),
            (PYTHAGOREAN_PAIRS[1], PYTHAGOREAN_PAIRS[2], PYTHAGOREAN_PAIRS[0]),
            (PYTHAGOREAN_PAIRS[2], PYTHAGOREAN_PAIRS[0], PYTHAGOREAN_PAIRS[1]),
        )
        for alpha in (Fraction(0), Fraction(1, 2), Fraction(1)):
            for xp, yp, tp in combos:
                for n in range(6):
                    add(lambda a=alpha, xp=xp, yp=yp, tp=tp, n=n: _record_from_report(
                        check_addition("classical", n, alpha=a, xpair=xp, ypair=yp, tpoint=tp[0])))
        for xp, yp, pp in combos:
            for n in range(6):
                add(lambda xp=xp, yp=yp, pp=pp, n=n: _record_from_report(
                    check_addition("legendre", n, xpair=xp, ypair=yp, phipair=pp)))

    if suite in ("restriction", "all"):
        qp = qps[0]
        for l in range(4):
            for m in range(l + 1):
                for j in range(m + 1):
                    for n in range(m, 5):
                        add(lambda l=l, m=m, j=j, n=n: _record_from_report(
                            check_restriction_equivalence(qp, l, m, j, n)))

    if suite in ("product-formula", "all"):
        pairs = ((PYTHAGOREAN_PAIRS[0], PYTHAGOREAN_PAIRS[1]),
                 (PYTHAGOREAN_PAIRS[1], PYTHAGOREAN_PAIRS[2]))
        for alpha in (Fraction(0), Fraction(1, 2), Fraction(1)):
            for xp, yp in pairs:
                for n in range(7):
                    add(lambda a=alpha, xp=xp, yp=yp, n=n: _record_from_report(
                        check_product_formula_classical(a, n, xp, yp)))

    if suite in ("limits", "all"):
        add(lambda: _limit_record("cqu-to-ultra", {"alpha": 0.5, "n": 3}))
        add(lambda: _limit_record("hahn-to-jacobi", {"alpha": 0.0, "beta": 0.0, "n": 2}))
        add(lambda: _limit_record("jacobi-to-bessel", {"alpha": 0.5, "beta": 1.0 / 3.0, "lam": 1.0}))
        add(lambda: _limit_record("jacobi-to-bessel", {"alpha": 0.5, "beta": 1.0 / 3.0, "lam": 2.0}))
        add(lambda: _limit_record("dual-addition-q-to-1", {"alpha": 0.5, "l": 3, "m": 2}))
        add(lambda: _bessel_special_cases_record())
        add(lambda: _float_consistency_record())

    if suite in ("numeric-orthogonality", "all"):
        qp = qps[0]
        for m in range(5):
            for n in range(m + 1, 5):
                add(lambda m=m, n=n: _threshold_record(
                    "numeric-orthogonality-cqu",
                    {"m": m, "n": n, "t": qp.t, "s": qp.s},
                    numeric_orthogonality("cqu", {"qp": qp}, m, n),
                    1e-8,
                ))
        add(lambda: _aw_h0_record(qp))
        add(lambda: _weight_ratio_probe(qp))
        add(lambda: _weight_symmetry_probe(qp))
        add(lambda: _weight_aw_vs_cqu_probe(qp))

    if not jobs:
        raise QAskeyError(f"unknown suite {suite!r}")
    return jobs


def _aw_params_floats(qp: QParams) -> dict:
    a = float(qp.a)
    qh = float(qp.qhalf)
    return {"q": float(qp.q), "a": a, "b": qh * a, "c": -a, "d": -qh * a}


def _aw_h0_record(qp: QParams) -> dict:
    value = numeric_orthogonality("aw-h0", _aw_params_floats(qp), 0, 0)
    return _threshold_record("numeric-aw-h0", {"t": qp.t, "s": qp.s}, value, 1e-8)


_PROBE_THETAS = (0.4, 1.0, 1.7, 2.3, 2.8)


def _weight_ratio_probe(qp: QParams) -> dict:
    """Beta-promoted over base weight against its exact quadratic value."""
    import math

    q, beta = float(qp.q), float(qp.beta)
    worst = 0.0
    for theta in _PROBE_THETAS:
        w = numeric_weight("cqu", {"q": q, "beta": beta}, theta)
        w_promoted = numeric_weight("cqu", {"q": q, "beta": beta * q}, theta)
        x = math.cos(theta)
        exact = (1 + q ** 0.5 * beta) ** 2 - 4 * q ** 0.5 * beta * x * x
        worst = max(worst, abs(w_promoted / w - exact))
    return _threshold_record("numeric-weight-ratio", {"t": qp.t, "s": qp.s}, worst, 1e-10)


def _weight_symmetry_probe(qp: QParams) -> dict:
    """The weight is even in x: values at theta and pi - theta agree."""
    import math

    q, beta = float(qp.q), float(qp.beta)
    worst = 0.0
    for theta in _PROBE_THETAS:
        w = numeric_weight("cqu", {"q": q, "beta": beta}, theta)
        w_mirror = numeric_weight("cqu", {"q": q, "beta": beta}, math.pi - theta)
        worst = max(worst, abs(w_mirror - w) / abs(w))
    return _threshold_record("numeric-weight-symmetry", {"t": qp.t, "s": qp.s}, worst, 1e-12)


def _weight_aw_vs_cqu_probe(qp: QParams) -> dict:
    """The specialized circle weight equals the one-parameter weight as a
    theta-density up to a theta-independent factor (spread of the ratio)."""
    import math

    q, beta = float(qp.q), float(qp.beta)
    ratios = []
    for theta in _PROBE_THETAS:
        w = numeric_weight("cqu", {"q": q, "beta": beta}, theta)
        waw = numeric_weight("aw", _aw_params_floats(qp), theta)
        ratios.append(waw / (w * math.sin(theta)))
    spread = max(ratios) - min(ratios)
    return _threshold_record("numeric-weight-aw-vs-cqu", {"t": qp.t, "s": qp.s}, spread, 1e-10)


def _bessel_special_cases_record() -> dict:
    import math

    worst = 0.0
    for x in (0.5, 1.0, 2.0, 5.0, 10.0):
        worst = max(worst, abs(bessel_script_j(-0.5, x) - math.cos(x)))
        worst = max(worst, abs(bessel_script_j(0.5, x) - math.sin(x) / x))
    return _threshold_record("bessel-special-cases", {}, worst, 1e-12)


def _float_consistency_record() -> dict:
    qp = QParams(Fraction(19, 20), Fraction(1, 2))
    gap = float_family_consistency(qp, 8, Fraction(7, 5))
    return _threshold_record(
        "float-exact-consistency", {"t": qp.t, "s": qp.s, "nmax": 8}, gap, 1e-12
    )


def run_suite(suite: str, grid: ParamGrid, jobs: int = 1) -> dict:
    """Run one suite and assemble the deterministic report document."""
    thunks = _suite_jobs(suite, grid)
    started = time.monotonic()

    def run_one(thunk):
        try:
            return thunk()
        except Exception as exc:  # errors become records; the suite keeps going
            return {"id": "error", "params": {}, "verdict": "error",
                    "message": f"{type(exc).__name__}: {exc}"}

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_one, thunks))
    else:
        records = [run_one(t) for t in thunks]
    wall_ms = int((time.monotonic() - started) * 1000)
    summary = {"pass": 0, "fail": 0, "error": 0}
    for rec in records:
        summary[rec["verdict"]] += 1
    grid = grid.with_defaults()
    doc = {
        "version": __version__,
        "suite": suite,
        "grid": {
            "lmax": grid.lmax,
            "mmax": grid.mmax,
            "nmax": grid.nmax,
            "qparams": [f"{qp.t},{qp.s}" for qp in grid.qparams],
            "alphas": [str(a) for a in grid.alphas],
        },
        "checks": records,
        "summary": summary,
        "wallTimeMs": wall_ms,
    }
    return doc


def exit_code_for(doc: dict) -> int:
    s = doc["summary"]
    return 0 if s["fail"] == 0 and s["error"] == 0 else 1


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_text(doc: dict) -> str:
    out = [f"qaskey {doc['version']} suite={doc['suite']}"]
    for rec in doc["checks"]:
        params = " ".join(f"{k}={v}" for k, v in rec.get("params", {}).items())
        line = f"{rec['verdict'].upper():5s} {rec['id']} {params}".rstrip()
        if rec["verdict"] == "fail" and "witness" in rec:
            w = rec["witness"]
            line += f"  [at {w['location']}: lhs={w['lhs']} rhs={w['rhs']}]"
        if rec["verdict"] == "error":
            line += f"  [{rec.get('message', '')}]"
        out.append(line)
    s = doc["summary"]
    out.append(f"summary: pass={s['pass']} fail={s['fail']} error={s['error']} "
               f"wallTimeMs={doc['wallTimeMs']}")
    return "\n".join(out) + "\n"


def render_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "verdict", "params", "witness_location", "lhs", "rhs"])
    for rec in doc["checks"]:
        w = rec.get("witness", {})
        params = ";".join(f"{k}={v}" for k, v in rec.get("params", {}).items())
        writer.writerow([
            rec["id"], rec["verdict"], params,
            w.get("location", ""), w.get("lhs", ""), w.get("rhs", ""),
        ])
    return buf.getvalue()


RENDERERS = {"json": render_json, "text": render_text, "csv": render_csv}


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _parse_qparams(text: str) -> QParams:
    parts = text.split(",")
    if len(parts) != 2:
        raise QAskeyError(f"--qparams expects 't,s', got {text!r}")
    return QParams(parse_rat(parts[0]), parse_rat(parts[1]))


def _read_config(path: str) -> dict:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise QAskeyError(f"bad config line {line!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _grid_from_args(args) -> ParamGrid:
    config = _read_config(args.config) if args.config else {}
    qparams = tuple(_parse_qparams(s) for s in args.qparams) if args.qparams else None
    if qparams is None and "qparams" in config:
        qparams = tuple(_parse_qparams(s) for s in config["qparams"].split(";") if s)
    alphas = tuple(parse_rat(a) for a in args.alpha) if args.alpha else None
    if alphas is None and "alphas" in config:
        alphas = tuple(parse_rat(a) for a in config["alphas"].split(",") if a)
    lmax = args.grid_lmax if args.grid_lmax is not None else int(config.get("lmax", 5))
    mmax = args.grid_mmax if args.grid_mmax is not None else (
        int(config["mmax"]) if "mmax" in config else None)
    return ParamGrid(
        lmax=lmax,
        mmax=mmax,
        qparams=qparams or DEFAULT_QPARAMS,
        alphas=alphas or DEFAULT_ALPHAS,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qaskey", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITE_NAMES)
    v.add_argument("--format", default="json", choices=("json", "text", "csv"))
    v.add_argument("--out", default=None, help="write the report to this path")
    v.add_argument("--qparams", action="append", help="t,s pair (repeatable)")
    v.add_argument("--alpha", action="append", help="classical alpha (repeatable)")
    v.add_argument("--grid-lmax", type=int, default=None)
    v.add_argument("--grid-mmax", type=int, default=None)
    v.add_argument("--config", default=None, help="key=value configuration file")
    v.add_argument("--jobs", type=int, default=1)

    e = sub.add_parser("eval", help="evaluate one family member")
    e.add_argument("--family", required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, default=None)
    e.add_argument("--x", type=int, default=None)
    e.add_argument("--alpha", default=None)
    e.add_argument("--beta", default=None)
    e.add_argument("--delta", default=None)
    e.add_argument("--p", default=None)
    e.add_argument("--N", type=int, default=None)
    e.add_argument("--a", default=None)
    e.add_argument("--b", default=None)
    e.add_argument("--c", default=None)
    e.add_argument("--d", default=None)
    e.add_argument("--qbase", default=None)
    e.add_argument("--qparams", default=None, help="t,s pair")
    e.add_argument("--at", default=None, help="evaluation point x")
    e.add_argument("--at-z", default=None, help="evaluation point z")

    t = sub.add_parser("table", help="emit a CSV table of values, weights or norms")
    t.add_argument("--family", required=True)
    t.add_argument("--alpha", default=None)
    t.add_argument("--beta", default=None)
    t.add_argument("--delta", default=None)
    t.add_argument("--p", default=None)
    t.add_argument("--N", type=int, default=None)
    t.add_argument("--qparams", default=None)
    t.add_argument("--at", default=None)
    t.add_argument("--at-z", default=None)
    t.add_argument("--range", dest="index_range", default=None, help="lo:hi inclusive")
    return parser


def _laurent_float_text(poly) -> str:
    parts = [f"{float(c):.17g} z^{k}" for k, c in sorted(poly.items(), reverse=True)]
    return " + ".join(parts) if parts else "0"


def _cmd_eval(args) -> int:
    fam = args.family
    need = lambda name, value: _require_flag(fam, name, value)
    if fam == "jacobi":
        value = jacobi_r(args.n, JacobiParams(need("--alpha", args.alpha), need("--beta", args.beta)),
                         parse_rat(need("--at", args.at)))
    elif fam == "ultraspherical":
        value = ultraspherical_r(args.n, parse_rat(need("--alpha", args.alpha)),
                                 parse_rat(need("--at", args.at)))
    elif fam == "krawtchouk":
        kp = KrawtchoukParams(parse_rat(need("--p", args.p)), need("--N", args.N))
        value = krawtchouk(args.n, need("--x", args.x), kp)
    elif fam in ("hahn", "dual-hahn"):
        hp = HahnParams(parse_rat(need("--alpha", args.alpha)), parse_rat(need("--beta", args.beta)),
                        need("--N", args.N))
        fn = hahn if fam == "hahn" else dual_hahn
        value = fn(args.n, need("--x", args.x), hp)
    elif fam == "racah":
        rp = RacahParams(parse_rat(need("--alpha", args.alpha)), parse_rat(need("--beta", args.beta)),
                         need("--N", args.N), parse_rat(need("--delta", args.delta)))
        value = racah(args.n, need("--x", args.x), rp)
    elif fam == "wilson-dual":
        wp = WilsonParams(parse_rat(need("--a", args.a)), parse_rat(need("--b", args.b)),
                          parse_rat(need("--c", args.c)), parse_rat(need("--d", args.d)))
        value = wilson_dual_phi(args.n, need("--m", args.m), wp)
    elif fam == "askey-wilson":
        awp = AWParams(parse_rat(need("--a", args.a)), parse_rat(need("--b", args.b)),
                       parse_rat(need("--c", args.c)), parse_rat(need("--d", args.d)),
                       parse_rat(need("--qbase", args.qbase)))
        if args.at_z is not None:
            value = askey_wilson_r_at(args.n, awp, parse_rat(args.at_z))
        else:
            value = askey_wilson_r(args.n, awp)
    elif fam in ("cqu", "cqu-alt"):
        qp = _parse_qparams(need("--qparams", args.qparams))
        poly = cqu_r(args.n, qp) if fam == "cqu" else cqu_r_alt(args.n, qp)
        value = poly.eval_at(parse_rat(args.at_z)) if args.at_z is not None else poly
    elif fam == "q-racah":
        qp = _parse_qparams(need("--qparams", args.qparams))
        qrp = QRacahParams(parse_rat(need("--alpha", args.alpha)),
                           parse_rat(need("--beta", args.beta)),
                           parse_rat(need("--delta", args.delta)), need("--N", args.N), qp)
        value = qracah(args.n, need("--x", args.x), qrp)
    else:
        raise QAskeyError(f"unknown family {fam!r}")
    if isinstance(value, Fraction):
        print(f"exact: {format_rat(value)}")
        print(f"float: {float(value):.17g}")
    else:
        print(f"exact: {value}")
        print(f"float: {_laurent_float_text(value)}")
    return 0


def _require_flag(family: str, flag: str, value):
    if value is None:
        raise QAskeyError(f"family {family!r} requires {flag}")
    return value


def _cmd_table(args) -> int:
    fam = args.family
    need = lambda name, value: _require_flag(fam, name, value)
    rows = []
    if fam in ("krawtchouk-weights", "hahn-weights", "racah-weights", "q-racah-weights",
               "racah-norms", "q-racah-norms"):
        N = need("--N", args.N)
        default_range = (0, N)
    else:
        default_range = None
    if args.index_range:
        lo_s, _, hi_s = args.index_range.partition(":")
        lo, hi = int(lo_s), int(hi_s)
    elif default_range:
        lo, hi = default_range
    else:
        raise QAskeyError(f"family {fam!r} requires --range lo:hi")

    def emit(i, value):
        rows.append((i, format_rat(value), repr(float(value))))

    if fam == "krawtchouk-weights":
        kp = KrawtchoukParams(parse_rat(need("--p", args.p)), args.N)
        for x in range(lo, hi + 1):
            emit(x, krawtchouk_weight(x, kp))
    elif fam == "hahn-weights":
        hp = HahnParams(parse_rat(need("--alpha", args.alpha)),
                        parse_rat(need("--beta", args.beta)), args.N)
        for x in range(lo, hi + 1):
            emit(x, hahn_weight(x, hp))
    elif fam == "racah-weights":
        rp = RacahParams(parse_rat(need("--alpha", args.alpha)),
                         parse_rat(need("--beta", args.beta)), args.N,
                         parse_rat(need("--delta", args.delta)))
        for x in range(lo, hi + 1):
            emit(x, racah_weight(x, rp))
    elif fam == "racah-norms":
        rp = RacahParams(parse_rat(need("--alpha", args.alpha)),
                         parse_rat(need("--beta", args.beta)), args.N,
                         parse_rat(need("--delta", args.delta)))
        for n in range(lo, hi + 1):
            ratio, h0 = racah_norms(n, rp)
            emit(n, ratio * h0)
    elif fam == "q-racah-weights":
        qp = _parse_qparams(need("--qparams", args.qparams))
        qrp = QRacahParams(parse_rat(need("--alpha", args.alpha)),
                           parse_rat(need("--beta", args.beta)),
                           parse_rat(need("--delta", args.delta)), args.N, qp)
        for x in range(lo, hi + 1):
            emit(x, qracah_weight(x, qrp))
    elif fam == "q-racah-norms":
        qp = _parse_qparams(need("--qparams", args.qparams))
        qrp = QRacahParams(parse_rat(need("--alpha", args.alpha)),
                           parse_rat(need("--beta", args.beta)),
                           parse_rat(need("--delta", args.delta)), args.N, qp)
        for n in range(lo, hi + 1):
            ratio, h0 = qracah_norms(n, qrp)
            emit(n, ratio * h0)
    elif fam == "ultraspherical-values":
        alpha = parse_rat(need("--alpha", args.alpha))
        x = parse_rat(need("--at", args.at))
        for n in range(lo, hi + 1):
            emit(n, ultraspherical_r(n, alpha, x))
    elif fam == "cqu-values":
        qp = _parse_qparams(need("--qparams", args.qparams))
        z = parse_rat(need("--at-z", args.at_z))
        for n in range(lo, hi + 1):
            emit(n, cqu_r(n, qp).eval_at(z))
    else:
        raise QAskeyError(f"unknown table family {fam!r}")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["index", "exact", "float"])
    writer.writerows(rows)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            grid = _grid_from_args(args)
            doc = run_suite(args.suite, grid, jobs=max(1, args.jobs))
            text = RENDERERS[args.format](doc)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return exit_code_for(doc)
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "table":
            return _cmd_table(args)
    except QAskeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
