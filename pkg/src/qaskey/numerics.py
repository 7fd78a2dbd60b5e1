"""Floating-point companion: Bessel-type series, truncated infinite
products for the continuous weights, quadrature orthogonality spot checks,
and convergence verification of the limit claims.

Limit claims carry no rates in their source statements, so acceptance is
empirical: errors must decrease along the schedule and, for the
first-order limits (halving 1-q or doubling N), the final successive
ratio must sit in a band around 1/2.  That band is an artifact-level
numerical property, not a theorem.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import NonConvergence, NonFinite, ParameterError
from .families import (
    QParams,
    cqu_r,
    cqu_r_at,
    cqu_r_float,
    hahn_float,
    jacobi_r_float,
    qracah_phi_float,
    racah_phi_float,
    ultraspherical_r_float,
)
from .series import hyper_sum, pochhammer, qpochhammer

# Expected final error ratios under halving of (1-q) or doubling of N.
# Hahn -> Jacobi converges at first order (ratio 1/2).  The q -> 1 limits of
# the one-parameter subfamily converge at SECOND order: in the self-dual
# normalization the polynomials are exactly invariant under q -> 1/q (an
# exact-arithmetic fact, tested), so their error is an even function of
# ln(q) and quarters when 1-q halves.  Each band is +-30% of its center.
FIRST_ORDER_BAND = (0.35, 0.65)
SECOND_ORDER_BAND = (0.175, 0.325)
RATIO_BANDS = {
    "hahn-to-jacobi": FIRST_ORDER_BAND,
    "cqu-to-ultra": SECOND_ORDER_BAND,
    "dual-addition-q-to-1": SECOND_ORDER_BAND,
}
PRODUCT_TRUNCATION = 1e-18


def _require_finite(x: float) -> float:
    if isinstance(x, complex):
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise NonFinite(f"non-finite value {x}")
        return x
    if not math.isfinite(x):
        raise NonFinite(f"non-finite value {x}")
    return x


def bessel_script_j(alpha: float, x: float, tol: float = 1e-16) -> float:
    """Normalized Bessel-type series 0F1(-; alpha+1; -x^2/4), summed until
    the term magnitude falls below tol relative to the partial sum."""
    if tol <= 0:
        raise ParameterError("tol must be positive")
    if alpha <= -1:
        raise ParameterError("alpha must exceed -1")
    arg = -0.25 * x * x
    term = 1.0
    total = 1.0
    for k in range(1000):
        term *= arg / ((alpha + 1 + k) * (k + 1))
        if not math.isfinite(term):
            raise NonConvergence(f"series terms overflowed at k={k}")
        total += term
        if abs(term) <= tol * max(1.0, abs(total)):
            return _require_finite(total)
    raise NonConvergence("Bessel series did not converge within 1000 terms")


# ---------------------------------------------------------------------------
# limit schedules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LimitReport:
    kind: str
    schedule: tuple
    errors: tuple
    ratios: tuple
    verdict: str  # "pass" | "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self):
        return {
            "kind": self.kind,
            "schedule": [str(v) for v in self.schedule],
            "errors": list(self.errors),
            "ratios": list(self.ratios),
            "verdict": self.verdict,
        }


def _limit_verdict(kind: str, errors: Sequence[float]) -> str:
    if all(e == 0.0 for e in errors):
        return "pass"  # degenerate: both sides coincide identically
    tail = errors[-4:]
    if len(tail) < 4 or any(not (a > b) for a, b in zip(tail, tail[1:])):
        return "fail"
    band = RATIO_BANDS.get(kind)
    if band is not None:
        ratio = errors[-1] / errors[-2]
        if not band[0] <= ratio <= band[1]:
            return "fail"
    return "pass"


def _make_report(kind: str, schedule, errors, mutation_bump: float = 0.0) -> LimitReport:
    errors = [(_require_finite(e) + (mutation_bump if i == len(errors) - 1 else 0.0))
              for i, e in enumerate(errors)]
    if any(e < 0 for e in errors):
        raise NonFinite("negative error value")
    ratios = tuple(b / a if a else 0.0 for a, b in zip(errors, errors[1:]))
    return LimitReport(kind, tuple(schedule), tuple(errors), ratios, _limit_verdict(kind, errors))


def limit_check(kind: str, params: Optional[dict] = None, schedule: Optional[Sequence] = None,
                mutation_bump: float = 0.0) -> LimitReport:
    """Convergence check of one limit transition along a dyadic schedule.

    Kinds: 'cqu-to-ultra' (q up to 1), 'hahn-to-jacobi' (N doubling),
    'jacobi-to-bessel' (degree doubling; monotone decrease only), and
    'dual-addition-q-to-1' (q up to 1, expansion compared term by term).
    `mutation_bump` adds a spurious amount to the final error for the
    fail-negative suite.
    """
    params = dict(params or {})
    if kind == "cqu-to-ultra":
        alpha = float(params.get("alpha", 0.5))
        n = int(params.get("n", 3))
        xs = params.get("points", (0.0, 0.3, -0.3, 0.7, -0.7))
        js = schedule if schedule is not None else range(4, 11)
        qs = [1.0 - 2.0 ** (-j) for j in js]
        errors = []
        for q in qs:
            beta = q ** alpha
            err = max(
                abs(cqu_r_float(n, q, beta, x) - ultraspherical_r_float(n, alpha, x)) for x in xs
            )
            errors.append(err)
        return _make_report(kind, qs, errors, mutation_bump=mutation_bump)
    if kind == "hahn-to-jacobi":
        alpha = float(params.get("alpha", 0.0))
        beta = float(params.get("beta", 0.0))
        n = int(params.get("n", 2))
        xs = params.get("points", (0.1, 0.5, 0.9))
        js = schedule if schedule is not None else range(4, 11)
        Ns = [2 ** j for j in js]
        errors = []
        for N in Ns:
            err = max(
                abs(
                    hahn_float(n, N * x, alpha, beta, N)
                    - hyper_sum((-n, n + alpha + beta + 1), (alpha + 1,), x, n)
                )
                for x in xs
            )
            errors.append(err)
        return _make_report(kind, Ns, errors, mutation_bump=mutation_bump)
    if kind == "jacobi-to-bessel":
        alpha = float(params.get("alpha", 0.5))
        beta = float(params.get("beta", 1.0 / 3.0))
        lam = float(params.get("lam", 1.0))
        xs = params.get("points", (0.5, 1.0, 2.0))
        js = schedule if schedule is not None else range(4, 11)
        nus = [2 ** j for j in js]
        errors = []
        for nu in nus:
            n = int(round(nu * lam))
            err = max(
                abs(jacobi_r_float(n, alpha, beta, math.cos(x / nu)) - bessel_script_j(alpha, lam * x))
                for x in xs
            )
            errors.append(err)
        return _make_report(kind, nus, errors, mutation_bump=mutation_bump)
    if kind == "dual-addition-q-to-1":
        return _limit_dual_addition(params, schedule, mutation_bump)
    raise ParameterError(f"unknown limit kind {kind!r}")


def _limit_dual_addition(params: dict, schedule, mutation_bump: float) -> LimitReport:
    """Term-by-term convergence of the q-side dual addition expansion to
    its classical counterpart, with beta = q^alpha."""
    alpha = float(params.get("alpha", 0.5))
    l = int(params.get("l", 3))
    m = int(params.get("m", 2))
    js_lattice = params.get("js", tuple(range(m + 1)))
    xs = params.get("points", (0.15, 0.45, 0.8))
    js = schedule if schedule is not None else range(4, 11)
    qs = [1.0 - 2.0 ** (-j) for j in js]
    errors = []
    for q in qs:
        beta = q ** alpha
        err = 0.0
        for k in range(m + 1):
            for j in js_lattice:
                for x in xs:
                    err = max(err, abs(_dual_addition_term_q(k, l, m, j, q, beta, x)
                                       - _dual_addition_term_classical(k, l, m, j, alpha, x)))
        errors.append(err)
    return _make_report("dual-addition-q-to-1", qs, errors, mutation_bump=mutation_bump)


def _dual_addition_term_q(k, l, m, j, q, beta, x) -> float:
    qh = q ** 0.5
    c = q ** (0.5 * k * (k + l + m + 2)) * beta ** k
    c *= (1 - beta * beta * q ** (2 * k)) / (1 - beta * beta * q ** k)
    for base in (q ** (-l), q ** (-m), q * beta * beta):
        c *= qpochhammer(base, q, k)
    c /= qpochhammer(q * beta, q, k) ** 2 * qpochhammer(q, q, k)
    c /= qpochhammer(-qh * beta, qh, 2 * k) ** 2
    for i in range(k):
        w = q ** i * qh * beta
        c *= 4 * w * x * x - (1 + w) ** 2
    c *= cqu_r_float(l - k, q, q ** k * beta, x) * cqu_r_float(m - k, q, q ** k * beta, x)
    c *= qracah_phi_float(
        k, j, beta / qh, beta / qh, q ** (-m - 1), q ** (-l - 0.5) / beta, q
    )
    return c


def _dual_addition_term_classical(k, l, m, j, alpha, x) -> float:
    c = 1.0 if k == 0 else (alpha + k) / (alpha + 0.5 * k)
    c *= pochhammer(float(-l), k) * pochhammer(float(-m), k) * pochhammer(2 * alpha + 1, k)
    c /= 4.0 ** k * pochhammer(alpha + 1.0, k) ** 2 * math.factorial(k)
    c *= (x * x - 1) ** k
    c *= ultraspherical_r_float(l - k, alpha + k, x) * ultraspherical_r_float(m - k, alpha + k, x)
    c *= racah_phi_float(k, float(j), alpha - 0.5, alpha - 0.5, -m - 1.0, -l - alpha - 0.5)
    return c


# ---------------------------------------------------------------------------
# continuous weights and quadrature
# ---------------------------------------------------------------------------


def qpoch_infinite(b, qbase: float):
    """(b; q)_infinity with the product truncated at the first index K
    where q^K drops below the relative truncation threshold."""
    if not 0 < qbase < 1:
        raise ParameterError("base must lie in (0, 1)")
    out = 1.0 + 0.0j if isinstance(b, complex) else 1.0
    qpow = 1.0
    while qpow >= PRODUCT_TRUNCATION:
        out *= 1 - qpow * b
        qpow *= qbase
    return out


def numeric_weight(kind: str, params: dict, theta: float) -> float:
    """Continuous weight values at x = cos(theta), theta in (0, pi).

    'cqu': the even one-parameter weight including its (1-x^2)^(-1/2)
    factor.  'aw': the circle weight of the four-parameter family.
    """
    if not 0 < theta < math.pi:
        raise ParameterError("theta must lie strictly inside (0, pi)")
    if kind == "cqu":
        q = float(params["q"])
        beta = float(params["beta"])
        e2 = cmath.exp(2j * theta)
        f = qpoch_infinite(e2, q) / qpoch_infinite(q ** 0.5 * beta * e2, q)
        fc = qpoch_infinite(e2.conjugate(), q) / qpoch_infinite(q ** 0.5 * beta * e2.conjugate(), q)
        value = (f * fc).real / math.sin(theta)
        return _require_finite(value)
    if kind == "aw":
        q = float(params["q"])
        abcd = [float(params[name]) for name in ("a", "b", "c", "d")]
        z = cmath.exp(1j * theta)

        def g(w):
            out = qpoch_infinite(w * w, q)
            for p in abcd:
                out /= qpoch_infinite(p * w, q)
            return out

        value = (g(z) * g(1 / z)).real
        return _require_finite(value)
    raise ParameterError(f"unknown weight kind {kind!r}")


def aw_h0_closed(params: dict) -> float:
    """Closed form of the 0-th circle norm: 4 pi (abcd; q)_inf over the
    product of (q; q)_inf and the six pairwise-product factors."""
    q = float(params["q"])
    a, b, c, d = (float(params[name]) for name in ("a", "b", "c", "d"))
    num = 4 * math.pi * qpoch_infinite(a * b * c * d, q)
    den = qpoch_infinite(q, q)
    for pair in (a * b, a * c, a * d, b * c, b * d, c * d):
        den *= qpoch_infinite(pair, q)
    return num / den


def refine_integral(f: Callable[[float], float], lo: float, hi: float,
                    start_points: int = 64, tol: float = 1e-9,
                    max_points: int = 2 ** 20) -> float:
    """Midpoint rule with dyadic node doubling until two successive
    refinements agree to tol (relative to the magnitude of the result)."""
    if start_points < 64:
        raise ParameterError("need at least 64 quadrature points")
    n = start_points
    prev = None
    while n <= max_points:
        h = (hi - lo) / n
        total = 0.0
        for i in range(n):
            total += f(lo + (i + 0.5) * h)
        total *= h
        _require_finite(total)
        if prev is not None and abs(total - prev) <= tol * max(1.0, abs(total)):
            return total
        prev = total
        n *= 2
    raise NonConvergence(f"quadrature did not stabilize within {max_points} points")


def numeric_orthogonality(kind: str, params: dict, m: int, n: int,
                          quad_points: int = 64) -> float:
    """Quadrature orthogonality checks on the unit circle.

    'cqu': normalized off-diagonal residual |I_mn| / sqrt(I_mm I_nn) of the
    one-parameter family (m != n).  'aw-h0': relative deviation of the
    integrated four-parameter weight from its closed-form total mass.
    """
    if kind == "cqu":
        qp: QParams = params["qp"]
        q, beta = float(qp.q), float(qp.beta)
        polys = {}
        for deg in {m, n}:
            coeffs = [(k, float(c)) for k, c in cqu_r(deg, qp).items()]
            polys[deg] = coeffs

        def inner(d1, d2):
            def f(theta):
                z = cmath.exp(1j * theta)
                p1 = sum(c * z ** k for k, c in polys[d1]).real
                p2 = sum(c * z ** k for k, c in polys[d2]).real
                e2 = z * z
                g = qpoch_infinite(e2, q) / qpoch_infinite(q ** 0.5 * beta * e2, q)
                gc = qpoch_infinite(e2.conjugate(), q) / qpoch_infinite(
                    q ** 0.5 * beta * e2.conjugate(), q
                )
                return p1 * p2 * (g * gc).real

            return refine_integral(f, 0.0, 2 * math.pi, quad_points)

        if m == n:
            return inner(m, m)
        off = inner(m, n)
        return abs(off) / math.sqrt(inner(m, m) * inner(n, n))
    if kind == "aw-h0":
        integral = refine_integral(lambda th: _aw_weight_circle(params, th), 0.0, 2 * math.pi,
                                   quad_points)
        h0 = aw_h0_closed(params)
        return abs(integral - h0) / abs(h0)
    raise ParameterError(f"unknown orthogonality kind {kind!r}")


def _aw_weight_circle(params: dict, theta: float) -> float:
    q = float(params["q"])
    abcd = [float(params[name]) for name in ("a", "b", "c", "d")]
    z = cmath.exp(1j * theta)

    def g(w):
        out = qpoch_infinite(w * w, q)
        for p in abcd:
            out /= qpoch_infinite(p * w, q)
        return out

    return (g(z) * g(1 / z)).real


def float_family_consistency(qp: QParams, nmax: int, z0: Fraction) -> float:
    """Largest relative gap between exact evaluation (converted to float)
    and direct float evaluation of the one-parameter family, reusing the
    same series kernel with float scalars."""
    from .series import qhyper_sum

    z0 = Fraction(z0)
    q, beta = float(qp.q), float(qp.beta)
    a = float(qp.a)
    zf = float(z0)
    worst = 0.0
    for n in range(nmax + 1):
        exact = float(cqu_r_at(n, qp, z0))
        nums = (q ** (-n), beta * beta * q ** (n + 1), a * zf, a / zf)
        dens = (beta * q, -beta * q ** 0.5, -beta * q)
        approx = qhyper_sum(nums, dens, q, q, n)
        scale = max(1.0, abs(exact))
        worst = max(worst, abs(exact - approx) / scale)
    return worst
