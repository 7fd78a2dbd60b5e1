"""The verification heart: each check computes both sides of one identity
in exact arithmetic and reports a verdict with an exact failure witness.

Checks never use tolerances.  A comparison item is a (location, lhs, rhs)
triple; the first mismatching item becomes the witness, with Laurent
mismatches further localized to the first differing exponent.  Every check
accepts an optional Mutation that perturbs one computed item, which the
fail-negative suite uses to prove the comparisons are not vacuous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .errors import InadmissiblePoint, NonPositiveWeight, ParameterError
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
    cqu_duality_point,
    cqu_r,
    cqu_r_alt,
    dual_hahn,
    hahn,
    hahn_weight,
    jacobi_r,
    krawtchouk,
    krawtchouk_weight,
    qracah,
    qracah_h0,
    qracah_norms,
    qracah_phi,
    qracah_weight,
    qracah_weight_raw,
    racah,
    racah_h0,
    racah_phi,
    racah_weight,
    racah_norms,
    ultraspherical_coeffs,
    ultraspherical_r,
    wilson_dual_params,
    wilson_dual_phi,
)
from .laurent import LaurentPoly, SymmetricLaurent, qpoch_laurent_pow, x_embed
from .series import pochhammer, qpochhammer

F = Fraction


# ---------------------------------------------------------------------------
# reports, mutations, comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    location: str
    lhs: str
    rhs: str

    def to_dict(self):
        return {"location": self.location, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    params: dict
    verdict: str  # "pass" | "fail"
    witness: Optional[Witness] = None
    residual: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self):
        out = {
            "id": self.check_id,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.residual is not None:
            out["residual"] = self.residual
        return out


@dataclass(frozen=True)
class Mutation:
    """Perturb comparison item `index` (mod the item count) by `delta`."""

    index: int = 0
    delta: Fraction = Fraction(1)


@dataclass(frozen=True)
class ParamGrid:
    """Index ranges and parameter lists for suite runs."""

    lmax: int = 5
    mmax: Optional[int] = None  # defaults to lmax, capped by l in iteration
    nmax: int = 4
    qparams: tuple = ()
    alphas: tuple = ()

    def with_defaults(self) -> "ParamGrid":
        qps = self.qparams or DEFAULT_QPARAMS
        alphas = self.alphas or DEFAULT_ALPHAS
        mmax = self.lmax if self.mmax is None else self.mmax
        return ParamGrid(self.lmax, mmax, self.nmax, tuple(qps), tuple(alphas))

    def lm_pairs(self):
        g = self.with_defaults()
        for l in range(g.lmax + 1):
            for m in range(min(l, g.mmax) + 1):
                yield l, m


DEFAULT_QPARAMS = (
    QParams(F(1, 2), F(2, 3)),
    QParams(F(2, 3), F(1, 2)),
    QParams(F(1, 2), F(1, 3)),
)
DEFAULT_ALPHAS = (F(0), F(1, 2), F(1), F(3, 2), F(1, 4))

# Pythagorean pairs (c, s) with c^2 + s^2 = 1 keep the classical
# trigonometric checks inside exact rational arithmetic.
PYTHAGOREAN_PAIRS = (
    (F(3, 5), F(4, 5)),
    (F(5, 13), F(12, 13)),
    (F(8, 17), F(15, 17)),
)

# The addition-formula kernel family is inadmissible when a*u or a*v = 1,
# so its default carriers are chosen with a = ts avoiding 1/u, 1/v for the
# standard evaluation points u in {2, 3/2}, v in {3, 5/4}.
ADDITION_QPARAMS = (QParams(F(1, 2), F(1, 3)), QParams(F(3, 5), F(1, 2)))
ADDITION_POINTS_U = (F(2), F(3, 2))
ADDITION_POINTS_V = (F(3), F(5, 4))


def _fmt(value) -> str:
    return str(value)


def _render_xpoly(coeffs) -> str:
    parts = [f"{c} x^{i}" for i, c in enumerate(coeffs) if c]
    return " + ".join(parts) if parts else "0"


def _mutate_value(value, delta):
    if isinstance(value, tuple):
        return (value[0] + delta,) + value[1:] if value else (delta,)
    return value + delta  # Fraction, or LaurentPoly shifted in its constant term


def _compare(check_id: str, params: dict, items, mutation: Optional[Mutation] = None) -> CheckReport:
    """Exact comparison of (location, lhs, rhs) items in order.

    Values may be Fractions, Laurent polynomials, or coefficient-vector
    tuples (polynomials in x, lowest degree first)."""
    items = list(items)
    if not items:
        raise ParameterError(f"check {check_id} produced no comparison items")
    if mutation is not None:
        i = mutation.index % len(items)
        loc, lhs, rhs = items[i]
        items[i] = (loc, _mutate_value(lhs, mutation.delta), rhs)
    for loc, lhs, rhs in items:
        if lhs == rhs:
            continue
        if isinstance(lhs, tuple) or isinstance(rhs, tuple):
            left = list(lhs) if isinstance(lhs, tuple) else [Fraction(lhs)]
            right = list(rhs) if isinstance(rhs, tuple) else [Fraction(rhs)]
            size = max(len(left), len(right))
            left += [F(0)] * (size - len(left))
            right += [F(0)] * (size - len(right))
            diff = [a - b for a, b in zip(left, right)]
            exp = next(i for i, v in enumerate(diff) if v)
            witness = Witness(f"{loc}, x^{exp}", _fmt(left[exp]), _fmt(right[exp]))
            return CheckReport(check_id, params, "fail", witness, _render_xpoly(diff))
        residual = lhs - rhs
        if isinstance(lhs, LaurentPoly) or isinstance(rhs, LaurentPoly):
            diff = residual if isinstance(residual, LaurentPoly) else LaurentPoly.constant(residual)
            exp = min(k for k, v in diff.items() if v)
            lv = lhs.coeff(exp) if isinstance(lhs, LaurentPoly) else Fraction(lhs)
            rv = rhs.coeff(exp) if isinstance(rhs, LaurentPoly) else Fraction(rhs)
            witness = Witness(f"{loc}, z^{exp}", _fmt(lv), _fmt(rv))
        else:
            witness = Witness(loc, _fmt(lhs), _fmt(rhs))
        return CheckReport(check_id, params, "fail", witness, _fmt(residual))
    return CheckReport(check_id, params, "pass")


# ---------------------------------------------------------------------------
# dense polynomials in x over Fraction (classical-side helpers)
# ---------------------------------------------------------------------------


def _padd(p, r):
    out = [F(0)] * max(len(p), len(r))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(r):
        out[i] += c
    return out


def _pmul(p, r):
    out = [F(0)] * (len(p) + len(r) - 1)
    for i, c in enumerate(p):
        if c:
            for j, d in enumerate(r):
                out[i + j] += c * d
    return out


def _pscale(p, s):
    return [c * s for c in p]


def _ptrim(p):
    n = len(p)
    while n > 1 and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def _upoly(n, alpha):
    return list(ultraspherical_coeffs(n, alpha))


def _pairs_str(pair) -> str:
    return f"({pair[0]},{pair[1]})"


def _check_pythagorean(pair):
    c, s = Fraction(pair[0]), Fraction(pair[1])
    if c * c + s * s != 1:
        raise InadmissiblePoint(f"({c}, {s}) is not a point on the unit circle")
    return c, s


# ---------------------------------------------------------------------------
# the linearization lattice (the q-Racah family behind the product formula)
# ---------------------------------------------------------------------------


class LinearizationLattice:
    """Weights, polynomials and norms of the q-Racah family whose weights
    are the linearization coefficients of the degree-(l, m) product.

    The m = 0 lattice is a single point with unit weight and trivial norm,
    below the smallest admissible q-Racah family, so it is special-cased.
    """

    def __init__(self, qp: QParams, l: int, m: int):
        if m > l:
            raise ParameterError("linearization lattice requires l >= m")
        self.qp, self.l, self.m = qp, l, m
        self.qrp = None
        if m >= 1:
            alpha = qp.beta / qp.qhalf
            delta = 1 / (qp.beta * qp.qhalf * qp.q ** l)
            self.qrp = QRacahParams(alpha, alpha, delta, m, qp)

    def weight(self, j: int) -> Fraction:
        if self.m == 0:
            return F(1)
        w = qracah_weight(j, self.qrp)
        if w <= 0:
            raise NonPositiveWeight(j, w)
        return w

    def poly(self, k: int, j: int) -> Fraction:
        return F(1) if self.m == 0 else qracah(k, j, self.qrp)

    def h0(self) -> Fraction:
        return F(1) if self.m == 0 else qracah_h0(self.qrp)

    def norm(self, k: int) -> Fraction:
        if self.m == 0:
            return F(1)
        ratio, h0 = qracah_norms(k, self.qrp)
        return ratio * h0


def linearization_racah_params(alpha, l: int, m: int) -> RacahParams:
    """The Racah family whose weights are the classical linearization
    coefficients of the degree-(l, m) ultraspherical product (m >= 1)."""
    alpha = Fraction(alpha)
    return RacahParams(alpha - F(1, 2), alpha - F(1, 2), m, -l - alpha - F(1, 2))


# ---------------------------------------------------------------------------
# dualities
# ---------------------------------------------------------------------------


def check_duality_cqu(qp: QParams, mmax: int, mutation=None) -> CheckReport:
    """Self-duality of the continuous q-ultraspherical values on the
    lattice z = q^(-m/2 - 1/4) beta^(-1/2)."""
    items = []
    for m in range(mmax + 1):
        for n in range(m, mmax + 1):
            zm, zn = cqu_duality_point(m, qp), cqu_duality_point(n, qp)
            items.append(
                (f"m={m}, n={n}", cqu_r(n, qp).eval_at(zm), cqu_r(m, qp).eval_at(zn))
            )
    params = {"t": qp.t, "s": qp.s, "mmax": mmax}
    return _compare("duality-cqu", params, items, mutation)


def check_duality_discrete(family: str, params_obj, nmax: Optional[int] = None, mutation=None) -> CheckReport:
    """Dualities of the discrete families over their full lattices."""
    items = []
    if family == "krawtchouk":
        kp: KrawtchoukParams = params_obj
        for n in range(kp.N + 1):
            for x in range(n, kp.N + 1):
                items.append((f"n={n}, x={x}", krawtchouk(n, x, kp), krawtchouk(x, n, kp)))
        params = {"family": family, "p": kp.p, "N": kp.N}
    elif family == "hahn-dual-hahn":
        hp: HahnParams = params_obj
        for n in range(hp.N + 1):
            for x in range(hp.N + 1):
                items.append((f"n={n}, x={x}", hahn(n, x, hp), dual_hahn(x, n, hp)))
        params = {"family": family, "alpha": hp.alpha, "beta": hp.beta, "N": hp.N}
    elif family == "racah":
        rp: RacahParams = params_obj
        for n in range(rp.N + 1):
            for x in range(rp.N + 1):
                lhs = racah(n, x, rp)
                rhs = racah_phi(x, n, rp.gamma, rp.delta, rp.alpha, rp.beta)
                items.append((f"n={n}, x={x}", lhs, rhs))
        params = {
            "family": family,
            "alpha": rp.alpha,
            "beta": rp.beta,
            "delta": rp.delta,
            "N": rp.N,
        }
    elif family == "wilson":
        wp: WilsonParams = params_obj
        wpd = wilson_dual_params(wp)
        top = 4 if nmax is None else nmax
        for n in range(top + 1):
            for m in range(top + 1):
                items.append((f"n={n}, m={m}", wilson_dual_phi(n, m, wp), wilson_dual_phi(m, n, wpd)))
        params = {"family": family, "a": wp.a, "b": wp.b, "c": wp.c, "d": wp.d, "nmax": top}
    else:
        raise ParameterError(f"unknown duality family {family!r}")
    return _compare(f"duality-{family}", params, items, mutation)


# ---------------------------------------------------------------------------
# discrete orthogonality
# ---------------------------------------------------------------------------


def check_orthogonality_discrete(family: str, params_obj, mutation=None) -> CheckReport:
    """Full Gram matrix against the closed-form norms (off-diagonal only
    for Hahn, whose diagonal norm is not in scope)."""
    items = []
    if family == "krawtchouk":
        kp: KrawtchoukParams = params_obj
        N = kp.N
        weights = [krawtchouk_weight(x, kp) for x in range(N + 1)]
        _require_positive(weights)
        values = [[krawtchouk(n, x, kp) for x in range(N + 1)] for n in range(N + 1)]
        for m in range(N + 1):
            for n in range(m, N + 1):
                g = sum(values[m][x] * values[n][x] * weights[x] for x in range(N + 1))
                expected = (1 - kp.p) ** N / weights[n] if m == n else F(0)
                items.append((f"m={m}, n={n}", g, expected))
        params = {"family": family, "p": kp.p, "N": N}
    elif family == "hahn":
        hp: HahnParams = params_obj
        N = hp.N
        weights = [hahn_weight(x, hp) for x in range(N + 1)]
        _require_positive(weights)
        values = [[hahn(n, x, hp) for x in range(N + 1)] for n in range(N + 1)]
        for m in range(N + 1):
            for n in range(m + 1, N + 1):
                g = sum(values[m][x] * values[n][x] * weights[x] for x in range(N + 1))
                items.append((f"m={m}, n={n}", g, F(0)))
        params = {"family": family, "alpha": hp.alpha, "beta": hp.beta, "N": N}
    elif family == "racah":
        rp: RacahParams = params_obj
        N = rp.N
        weights = [racah_weight(x, rp) for x in range(N + 1)]
        _require_positive(weights)
        values = [[racah(n, x, rp) for x in range(N + 1)] for n in range(N + 1)]
        items.append(("sum-of-weights", sum(weights), racah_h0(rp)))
        for m in range(N + 1):
            for n in range(m, N + 1):
                g = sum(values[m][x] * values[n][x] * weights[x] for x in range(N + 1))
                if m == n:
                    ratio, h0 = racah_norms(n, rp)
                    expected = ratio * h0
                else:
                    expected = F(0)
                items.append((f"m={m}, n={n}", g, expected))
        params = {"family": family, "alpha": rp.alpha, "beta": rp.beta, "delta": rp.delta, "N": N}
    elif family == "q-racah":
        qrp: QRacahParams = params_obj
        N = qrp.N
        weights = [qracah_weight(x, qrp) for x in range(N + 1)]
        _require_positive(weights)
        values = [[qracah(n, x, qrp) for x in range(N + 1)] for n in range(N + 1)]
        items.append(("sum-of-weights", sum(weights), qracah_h0(qrp)))
        for m in range(N + 1):
            for n in range(m, N + 1):
                g = sum(values[m][x] * values[n][x] * weights[x] for x in range(N + 1))
                if m == n:
                    ratio, h0 = qracah_norms(n, qrp)
                    expected = ratio * h0
                else:
                    expected = F(0)
                items.append((f"m={m}, n={n}", g, expected))
        params = {
            "family": family,
            "alpha": qrp.alpha,
            "beta": qrp.beta,
            "delta": qrp.delta,
            "N": N,
            "t": qrp.qp.t,
            "s": qrp.qp.s,
        }
    else:
        raise ParameterError(f"unknown orthogonality family {family!r}")
    return _compare(f"orthogonality-{family}", params, items, mutation)


def _require_positive(weights):
    for x, w in enumerate(weights):
        if w <= 0:
            raise NonPositiveWeight(x, w)


# ---------------------------------------------------------------------------
# structural identities of the continuous q-ultraspherical family
# ---------------------------------------------------------------------------


def check_weight_ratio(qp: QParams, mutation=None) -> CheckReport:
    """One-step weight recurrence in its finite telescoped Laurent form:
    (1 - q^(1/2) b z^2)(1 - q^(1/2) b z^-2) = (1 + q^(1/2) b)^2 - 4 q^(1/2) b x^2."""
    w = qp.qhalf * qp.beta
    lhs = (LaurentPoly.constant(1) - LaurentPoly.monomial(2, w)) * (
        LaurentPoly.constant(1) - LaurentPoly.monomial(-2, w)
    )
    rhs = x_embed([(1 + w) ** 2, 0, -4 * w])
    items = [("weight-ratio", lhs, rhs)]
    return _compare("weight-recurrence", {"t": qp.t, "s": qp.s}, items, mutation)


def check_difference_formula(qp: QParams, nmax: int, mutation=None) -> CheckReport:
    """Two-step difference relation lowering the degree while promoting
    beta to q*beta, as an exact Laurent identity."""
    if nmax < 2:
        raise ParameterError("difference formula needs nmax >= 2")
    t, q, qh, b = qp.t, qp.q, qp.qhalf, qp.beta
    a = (qp.a + 1 / qp.a) / 2
    x2_minus_a2 = x_embed([-(a ** 2), 0, 1])
    promoted = qp.beta_shift(1)
    items = []
    for n in range(2, nmax + 1):
        lhs = cqu_r(n, qp) - cqu_r(n - 2, qp)
        pref = 4 * t ** (2 * (3 - n)) * b * (1 - t ** (4 * n - 2) * b)
        pref /= (1 + qh * b) * (1 + q * b) * (1 - q * b)
        rhs = x2_minus_a2 * cqu_r(n - 2, promoted) * pref
        items.append((f"n={n}", lhs, rhs))
    params = {"t": qp.t, "s": qp.s, "nmax": nmax}
    return _compare("difference-formula", params, items, mutation)


def check_backward_shift(qrp: QRacahParams, nmax: int, mutation=None) -> CheckReport:
    """Backward shift relation pointwise on the lattice (with the edge
    conventions at x = 0 and x = N), plus its summed-by-parts form for
    f(x) = x and f(x) = q^x."""
    N = qrp.N
    if not 1 <= nmax <= N:
        raise ParameterError("backward shift needs 1 <= nmax <= N")
    q = qrp.qp.q
    a, b, g, d = qrp.alpha, qrp.beta, qrp.gamma, qrp.delta
    shifted = dict(alpha=q * a, beta=q * b, gamma=q * g, delta=d, qbase=q)
    lead = 1 - q * q * g * d
    items = []

    def shifted_term(n, x):
        w = qracah_weight_raw(x, **shifted)
        if not w:
            return F(0)
        return lead / (q ** (-x) - g * d * q ** (x + 2)) * w * qracah_phi(n - 1, x, **shifted)

    for n in range(1, nmax + 1):
        for x in range(N + 1):
            lhs = qracah_weight(x, qrp) * qracah(n, x, qrp)
            rhs = shifted_term(n, x)
            if x >= 1:
                w2 = qracah_weight_raw(x - 1, **shifted)
                rhs -= lead / (q ** (-x + 1) - g * d * q ** (x + 1)) * w2 * qracah_phi(
                    n - 1, x - 1, **shifted
                )
            items.append((f"pointwise n={n}, x={x}", lhs, rhs))
    for n in range(1, nmax + 1):
        for fname, fval in (("x", lambda x: F(x)), ("q^x", lambda x: q ** x)):
            lhs = sum(qracah_weight(x, qrp) * qracah(n, x, qrp) * fval(x) for x in range(N + 1))
            rhs = sum(shifted_term(n, x) * (fval(x) - fval(x + 1)) for x in range(N))
            items.append((f"summed n={n}, f={fname}", lhs, rhs))
    params = {
        "alpha": qrp.alpha,
        "beta": qrp.beta,
        "delta": qrp.delta,
        "N": N,
        "t": qrp.qp.t,
        "s": qrp.qp.s,
        "nmax": nmax,
    }
    return _compare("backward-shift", params, items, mutation)


# ---------------------------------------------------------------------------
# the kernel-weighted projection sum and its closed product form
# ---------------------------------------------------------------------------


def _pm_qpoch_laurent(a, qbase, k: int) -> LaurentPoly:
    """(+-a z; q)_k (+-a z^-1; q)_k as a Laurent polynomial."""
    out = LaurentPoly.constant(1)
    for sign in (1, -1):
        out = out * qpoch_laurent_pow(sign * a, 1, qbase, k)
        out = out * qpoch_laurent_pow(sign * a, -1, qbase, k)
    return out


def dual_projection_sum(k: int, l: int, m: int, qp: QParams, mode: str) -> SymmetricLaurent:
    """Projection of the product R_l R_m onto the k-th element of the
    linearization lattice basis.

    "brute" sums the lattice directly; "closed" evaluates the factored
    product form (an iterated one-step reduction in degree and a beta
    promotion by q^k).
    """
    if not 0 <= k <= m <= l:
        raise ParameterError("need 0 <= k <= m <= l")
    if mode == "brute":
        lat = LinearizationLattice(qp, l, m)
        total = LaurentPoly()
        for j in range(m + 1):
            total = total + cqu_r(l + m - 2 * j, qp) * (lat.weight(j) * lat.poly(k, j))
        return SymmetricLaurent.from_poly(total)
    if mode != "closed":
        raise ParameterError(f"unknown mode {mode!r}")
    q, b, qh, t, s = qp.q, qp.beta, qp.qhalf, qp.t, qp.s
    pref = (t ** (2 * (l + m + 1)) * s * s) ** k
    pref *= qpochhammer(t ** (2 - 4 * (l + m)) / b, q, k)
    pref /= qpochhammer(-qh * b, q, k) * qpochhammer(q * b, q, k) * qpochhammer(-q * b, q, k)
    b2 = q ** (2 * k + 1) * b * b
    bh = t ** (4 * k + 2) * b
    pref *= qpochhammer(b2, q, l - k) * qpochhammer(b2, q, m - k) / qpochhammer(b2, q, l + m - 2 * k)
    pref *= qpochhammer(bh, q, l + m - 2 * k) / (
        qpochhammer(bh, q, l - k) * qpochhammer(bh, q, m - k)
    )
    promoted = qp.beta_shift(k)
    poly = _pm_qpoch_laurent(qp.a, qh, k) * cqu_r(l - k, promoted) * cqu_r(m - k, promoted) * pref
    return SymmetricLaurent.from_poly(poly)


def check_theorem_5_1(grid: ParamGrid, mutation=None) -> CheckReport:
    """Brute and closed projection sums agree coefficient-wise over the
    whole (k, m, l, qp) grid."""
    grid = grid.with_defaults()
    items = []
    for qp in grid.qparams:
        for l, m in grid.lm_pairs():
            for k in range(m + 1):
                items.append(
                    (
                        f"t={qp.t}, s={qp.s}, l={l}, m={m}, k={k}",
                        dual_projection_sum(k, l, m, qp, "brute"),
                        dual_projection_sum(k, l, m, qp, "closed"),
                    )
                )
    params = {"lmax": grid.lmax, "qparams": ";".join(f"{qp.t},{qp.s}" for qp in grid.qparams)}
    return _compare("theorem-5-1", params, items, mutation)


# ---------------------------------------------------------------------------
# linearization
# ---------------------------------------------------------------------------


def check_linearization(target: str, l: int, m: int, qp: Optional[QParams] = None,
                        alpha=None, mutation=None) -> CheckReport:
    """Product of two family members expanded back into the family.

    q target: the explicit-coefficient and weight-quotient forms of the
    expansion, their termwise agreement, and nonnegativity of the weights.
    classical/legendre targets: the same statements with exact coefficient
    vectors in x.
    """
    if m > l:
        raise ParameterError("linearization requires l >= m")
    items = []
    nonneg_failures = []
    if target == "q":
        if qp is None:
            raise ParameterError("q linearization needs qp")
        q, b, qh = qp.q, qp.beta, qp.qhalf
        qb = qh * b
        product = cqu_r(l, qp) * cqu_r(m, qp)
        pref = qpochhammer(q, q, l) * qpochhammer(q, q, m) / (
            qpochhammer(q * b * b, q, l) * qpochhammer(q * b * b, q, m)
        )
        explicit = []
        for j in range(m + 1):
            c = (1 - q ** (l + m - 2 * j) * qb) / (1 - qb)
            c *= qpochhammer(qb, q, j) / qpochhammer(q, q, j)
            c *= qpochhammer(qb, q, l - j) / qpochhammer(q, q, l - j)
            c *= qpochhammer(qb, q, m - j) / qpochhammer(q, q, m - j)
            c *= qpochhammer(q * b * b, q, l + m - j) / qpochhammer(q * qb, q, l + m - j)
            c *= qb ** j
            explicit.append(pref * c)
        lat = LinearizationLattice(qp, l, m)
        h0 = lat.h0()
        quotient = [lat.weight(j) / h0 for j in range(m + 1)]
        sum_explicit = LaurentPoly()
        sum_quotient = LaurentPoly()
        for j in range(m + 1):
            items.append((f"coefficient j={j}", explicit[j], quotient[j]))
            if quotient[j] < 0:
                nonneg_failures.append((f"nonnegative j={j}", quotient[j]))
            sum_explicit = sum_explicit + cqu_r(l + m - 2 * j, qp) * explicit[j]
            sum_quotient = sum_quotient + cqu_r(l + m - 2 * j, qp) * quotient[j]
        items.append(("explicit-form sum", sum_explicit, product))
        items.append(("weight-quotient sum", sum_quotient, product))
        params = {"target": target, "l": l, "m": m, "t": qp.t, "s": qp.s}
    elif target in ("classical", "legendre"):
        alpha = F(0) if target == "legendre" else Fraction(alpha)
        product = _ptrim(_pmul(_upoly(l, alpha), _upoly(m, alpha)))
        if target == "legendre":
            explicit = []
            for j in range(m + 1):
                c = pochhammer(F(1, 2), j) * pochhammer(F(1, 2), l - j) * pochhammer(F(1, 2), m - j)
                c *= factorial(l + m - j) * (2 * (l + m - 2 * j) + 1)
                c /= factorial(j) * factorial(l - j) * factorial(m - j) * pochhammer(F(3, 2), l + m - j)
                explicit.append(c)
        else:
            pref = F(factorial(l) * factorial(m)) / (
                pochhammer(2 * alpha + 1, l) * pochhammer(2 * alpha + 1, m)
            )
            explicit = []
            for j in range(m + 1):
                c = (l + m + alpha + F(1, 2) - 2 * j) / (alpha + F(1, 2))
                c *= pochhammer(alpha + F(1, 2), j) * pochhammer(alpha + F(1, 2), l - j)
                c *= pochhammer(alpha + F(1, 2), m - j) * pochhammer(2 * alpha + 1, l + m - j)
                c /= factorial(j) * factorial(l - j) * factorial(m - j)
                c /= pochhammer(alpha + F(3, 2), l + m - j)
                explicit.append(pref * c)
        total = [F(0)]
        for j in range(m + 1):
            if explicit[j] < 0:
                nonneg_failures.append((f"nonnegative j={j}", explicit[j]))
            total = _padd(total, _pscale(_upoly(l + m - 2 * j, alpha), explicit[j]))
        items.append(("explicit-form sum", _ptrim(total), product))
        if m >= 1:
            rp = linearization_racah_params(alpha, l, m)
            h0 = racah_h0(rp)
            total_w = [F(0)]
            for j in range(m + 1):
                w = racah_weight(j, rp) / h0
                items.append((f"coefficient j={j}", explicit[j], w))
                total_w = _padd(total_w, _pscale(_upoly(l + m - 2 * j, alpha), w))
            items.append(("weight-quotient sum", _ptrim(total_w), product))
        params = {"target": target, "l": l, "m": m, "alpha": alpha}
    else:
        raise ParameterError(f"unknown linearization target {target!r}")
    report = _compare(f"linearization-{target}", params, items, mutation)
    if report.passed and nonneg_failures:
        loc, value = nonneg_failures[0]
        return CheckReport(
            report.check_id,
            params,
            "fail",
            Witness(loc, _fmt(value), ">= 0"),
            _fmt(value),
        )
    return report


# ---------------------------------------------------------------------------
# dual addition formula
# ---------------------------------------------------------------------------


def _dual_addition_coeff_q(k: int, l: int, m: int, qp: QParams) -> LaurentPoly:
    """The z-dependent closed coefficient multiplying the k-th lattice
    polynomial in the dual addition expansion (shifted product included)."""
    q, b, qh, t = qp.q, qp.beta, qp.qhalf, qp.t
    c = t ** (2 * k * (k + l + m + 2)) * b ** k
    c *= (1 - b * b * q ** (2 * k)) / (1 - b * b * q ** k)
    c *= qpochhammer(q ** (-l), q, k) * qpochhammer(q ** (-m), q, k) * qpochhammer(q * b * b, q, k)
    c /= qpochhammer(q * b, q, k) ** 2 * qpochhammer(q, q, k)
    c /= qpochhammer(-qh * b, qh, 2 * k) ** 2
    square_factor = LaurentPoly.constant(1)
    for i in range(k):
        w = q ** i * qh * b
        square_factor = square_factor * x_embed([-((1 + w) ** 2), 0, 4 * w])
    promoted = qp.beta_shift(k)
    return square_factor * cqu_r(l - k, promoted) * cqu_r(m - k, promoted) * c


def check_dual_addition(target: str, l: int, m: int, j: int = 0, mode: str = "direct",
                        qp: Optional[QParams] = None, alpha=None, mutation=None) -> CheckReport:
    """Expansion of a single family member R_{l+m-2j} over the
    linearization lattice basis.

    q target, direct mode: build the closed right-hand side and compare
    with R_{l+m-2j} as Laurent polynomials.  q target, inversion mode:
    reconstruct every basis coefficient independently as (projection sum,
    brute) / norm and compare with the closed coefficient.  classical
    target: the analogous statement with exact coefficient vectors.
    """
    if not (0 <= j <= m <= l):
        raise ParameterError("need 0 <= j <= m <= l")
    items = []
    if target == "q":
        if qp is None:
            raise ParameterError("q dual addition needs qp")
        lat = LinearizationLattice(qp, l, m)
        closed = [_dual_addition_coeff_q(k, l, m, qp) for k in range(m + 1)]
        if mode == "inversion":
            for k in range(m + 1):
                inv = dual_projection_sum(k, l, m, qp, "brute") * (1 / lat.norm(k))
                items.append((f"coefficient k={k}", inv, closed[k]))
        elif mode == "direct":
            rhs = LaurentPoly()
            for k in range(m + 1):
                rhs = rhs + closed[k] * lat.poly(k, j)
            items.append((f"l={l}, m={m}, j={j}", rhs, cqu_r(l + m - 2 * j, qp)))
        else:
            raise ParameterError(f"unknown mode {mode!r}")
        params = {"target": target, "mode": mode, "l": l, "m": m, "j": j, "t": qp.t, "s": qp.s}
        return _compare(f"dual-addition-q-{mode}", params, items, mutation)
    if target == "classical":
        alpha = Fraction(alpha)
        lhs = _ptrim(_upoly(l + m - 2 * j, alpha))
        rhs = [F(0)]
        for k in range(m + 1):
            c = F(1) if k == 0 else (alpha + k) / (alpha + F(k, 2))
            c *= pochhammer(F(-l), k) * pochhammer(F(-m), k) * pochhammer(2 * alpha + 1, k)
            c /= F(2) ** (2 * k) * pochhammer(alpha + 1, k) ** 2 * factorial(k)
            c *= racah_phi(k, j, alpha - F(1, 2), alpha - F(1, 2), F(-m - 1), -l - alpha - F(1, 2))
            term = [F(1)]
            for _ in range(k):
                term = _pmul(term, [F(-1), F(0), F(1)])
            term = _pmul(term, _upoly(l - k, alpha + k))
            term = _pmul(term, _upoly(m - k, alpha + k))
            rhs = _padd(rhs, _pscale(term, c))
        items.append((f"l={l}, m={m}, j={j}", _ptrim(rhs), lhs))
        params = {"target": target, "l": l, "m": m, "j": j, "alpha": alpha}
        return _compare("dual-addition-classical", params, items, mutation)
    raise ParameterError(f"unknown dual addition target {target!r}")


def check_dual_addition_a_form(qp: QParams, l: int, m: int, j: int, mutation=None) -> CheckReport:
    """The dual addition expansion rewritten in the alternative parameter
    a = q^(1/4) beta^(1/2), as an exact Laurent identity.

    Note the even-product denominator enters squared; the unsquared variant
    is inconsistent with both the original expansion and the restricted
    form derived from the addition formula.
    """
    if not (0 <= j <= m <= l):
        raise ParameterError("need 0 <= j <= m <= l")
    a, q, qh, t = qp.a, qp.q, qp.qhalf, qp.t
    a2, a4 = a * a, a ** 4
    rhs = LaurentPoly()
    for k in range(m + 1):
        c = F(-1) ** k * t ** (2 * k * (k + l + m + 1)) * a2 ** k
        c *= (1 - a4 * q ** (2 * k) / q) / (1 - a4 * q ** k / q)
        c *= qpochhammer(q ** (-l), q, k) * qpochhammer(q ** (-m), q, k) * qpochhammer(a4, q, k)
        c /= qpochhammer(qh * a2, q, k) ** 2 * qpochhammer(q, q, k)
        c /= qpochhammer(-a2, qh, 2 * k) ** 2
        if not c:
            continue
        c *= qracah_phi(k, j, a2 / q, a2 / q, q ** (-m - 1), q ** (-l) / a2, q)
        lpart = qpoch_laurent_pow(a2, 2, q, k) * qpoch_laurent_pow(a2, -2, q, k)
        shifted = _rv_aw_params(qp, k)
        rhs = rhs + lpart * askey_wilson_r(l - k, shifted) * askey_wilson_r(m - k, shifted) * c
    items = [(f"l={l}, m={m}, j={j}", rhs, cqu_r(l + m - 2 * j, qp))]
    params = {"l": l, "m": m, "j": j, "t": qp.t, "s": qp.s}
    return _compare("dual-addition-a-form", params, items, mutation)


# ---------------------------------------------------------------------------
# addition formulas
# ---------------------------------------------------------------------------


def _rv_aw_params(qp: QParams, k: int = 0) -> AWParams:
    """The degree-k shifted quadruple (q^(k/2)a, q^((k+1)/2)a, and their
    negatives) of the a-parameterized subfamily."""
    a = qp.a * qp.t ** (2 * k)
    return AWParams(a, qp.qhalf * a, -a, -qp.qhalf * a, qp.q)


def _addition_kernel_params(qp: QParams, u: Fraction, v: Fraction) -> AWParams:
    a = qp.a
    return AWParams(a * u * v, a / (u * v), a * u / v, a * v / u, qp.q)


def _addition_coeff_q(k: int, n: int, qp: QParams, u: Fraction, v: Fraction) -> Fraction:
    """Scalar coefficient of the k-th kernel polynomial in the addition
    expansion at fixed evaluation parameters u, v."""
    a, q, qh = qp.a, qp.q, qp.qhalf
    a2, a4 = a * a, a ** 4
    c = F(-1) ** k * qh ** (k * (k + 1))
    for base in (q ** (-n), a2, q ** n * a4, a4 / q):
        c *= qpochhammer(base, q, k)
    for base in (qh * a2, -qh * a2, -a2):
        c /= qpochhammer(base, q, k)
    c /= qpochhammer(q, q, k) * qpochhammer(a4 / q, q, 2 * k)
    c *= u ** (-k) * qpochhammer(a2 * u * u, q, k)
    c *= v ** (-k) * qpochhammer(a2 * v * v, q, k)
    return c


def check_addition(target: str, n: int, qp: Optional[QParams] = None,
                   u: Optional[Fraction] = None, v: Optional[Fraction] = None,
                   alpha=None, xpair=None, ypair=None, tpoint=None, phipair=None,
                   mutation=None) -> CheckReport:
    """Addition formulas.

    q target: expansion of R_n[z] over the four-parameter kernel family at
    fixed rational u, v, checked as an exact Laurent identity in z.
    classical target: the kernel-argument expansion at Pythagorean points
    (equivalently its z-form: substituting z = xy + rx ry t turns one into
    the other).  legendre target: the classical composite-argument formula
    with cos(k phi) realized by Chebyshev polynomials.
    """
    items = []
    if target == "q":
        if qp is None or u is None or v is None:
            raise ParameterError("q addition needs qp, u, v")
        u, v = Fraction(u), Fraction(v)
        if u == 0 or v == 0:
            raise InadmissiblePoint("u and v must be nonzero")
        kernel = _addition_kernel_params(qp, u, v)
        rhs = LaurentPoly()
        for k in range(n + 1):
            c = _addition_coeff_q(k, n, qp, u, v)
            if not c:
                continue
            shifted = _rv_aw_params(qp, k)
            c *= askey_wilson_r_at(n - k, shifted, u) * askey_wilson_r_at(n - k, shifted, v)
            rhs = rhs + askey_wilson_r(k, kernel) * c
        items.append((f"n={n}, u={u}, v={v}", rhs, cqu_r(n, qp)))
        params = {"target": target, "n": n, "u": u, "v": v, "t": qp.t, "s": qp.s}
    elif target == "classical":
        alpha = Fraction(alpha)
        x, rx = _check_pythagorean(xpair)
        y, ry = _check_pythagorean(ypair)
        tv = Fraction(tpoint)
        lhs = ultraspherical_r(n, alpha, x * y + rx * ry * tv)
        rhs = F(0)
        for k in range(n + 1):
            c = F(1) if k == 0 else (alpha + k) / (alpha + F(k, 2))
            c *= comb(n, k) * pochhammer(n + 2 * alpha + 1, k) * pochhammer(2 * alpha + 1, k)
            c /= F(2) ** (2 * k) * pochhammer(alpha + 1, k) ** 2
            c *= rx ** k * ultraspherical_r(n - k, alpha + k, x)
            c *= ry ** k * ultraspherical_r(n - k, alpha + k, y)
            c *= ultraspherical_r(k, alpha - F(1, 2), tv)
            rhs += c
        items.append((f"n={n}, x={x}, y={y}, t={tv}", lhs, rhs))
        params = {
            "target": target,
            "n": n,
            "alpha": alpha,
            "x": _pairs_str(xpair),
            "y": _pairs_str(ypair),
            "tpoint": tv,
        }
    elif target == "legendre":
        c1, s1 = _check_pythagorean(xpair)
        c2, s2 = _check_pythagorean(ypair)
        cphi, _sphi = _check_pythagorean(phipair)
        lhs = ultraspherical_r(n, F(0), c1 * c2 + s1 * s2 * cphi)
        rhs = ultraspherical_r(n, F(0), c1) * ultraspherical_r(n, F(0), c2)
        for k in range(1, n + 1):
            c = 2 * F(factorial(n - k) * factorial(n + k), 2 ** (2 * k) * factorial(n) ** 2)
            scale = pochhammer(F(k + 1), n - k) / factorial(n - k)  # value at 1 of the shifted family
            p1 = jacobi_r(n - k, JacobiParams(k, k), c1) * scale
            p2 = jacobi_r(n - k, JacobiParams(k, k), c2) * scale
            rhs += c * s1 ** k * p1 * s2 ** k * p2 * _chebyshev_t(k, cphi)
        items.append((f"n={n}", lhs, rhs))
        params = {
            "target": target,
            "n": n,
            "x": _pairs_str(xpair),
            "y": _pairs_str(ypair),
            "phi": _pairs_str(phipair),
        }
    else:
        raise ParameterError(f"unknown addition target {target!r}")
    return _compare(f"addition-{target}", params, items, mutation)


def _chebyshev_t(k: int, c: Fraction) -> Fraction:
    prev, cur = F(1), Fraction(c)
    for _ in range(k):
        prev, cur = cur, 2 * c * cur - prev
    return prev


# ---------------------------------------------------------------------------
# restriction equivalence of the two dual addition routes
# ---------------------------------------------------------------------------


def _restriction_kernel_params(qp: QParams, l: int, m: int) -> AWParams:
    a, t = qp.a, qp.t
    return AWParams(
        t ** (-2 * (l + m)) / a,
        t ** (2 * (l + m)) * a ** 3,
        t ** (2 * (l - m)) * a,
        t ** (2 * (m - l)) * a,
        qp.q,
    )


def check_restriction_equivalence(qp: QParams, l: int, m: int, j: int, n: int,
                                  mutation=None) -> CheckReport:
    """On the restriction lattice z = q^(-n/2) a^(-1) the dual addition
    expansion and the addition expansion coincide term by term, and both
    totals agree with the self-duality transport of the left-hand side.

    Terms whose scalar prefactor vanishes (k beyond the smaller degree)
    are skipped without building the inadmissible series behind them.
    """
    if not (0 <= j <= m <= l and m <= n):
        raise ParameterError("need 0 <= j <= m <= l and m <= n")
    a, q, qh, t = qp.a, qp.q, qp.qhalf, qp.t
    a2, a4 = a * a, a ** 4
    zpt = t ** (-2 * (l + m - 2 * j)) / a
    zu, zv = t ** (-2 * l) / a, t ** (-2 * m) / a
    base = _rv_aw_params(qp)
    kernel = _restriction_kernel_params(qp, l, m) if m >= 1 else None

    def coeff_restricted(k):
        # restricted dual-addition coefficient
        c = F(-1) ** k * t ** (2 * k * (k + l + m + 1)) * a2 ** k
        c *= (1 - a4 * q ** (2 * k) / q) / (1 - a4 * q ** k / q)
        c *= qpochhammer(q ** (-l), q, k) * qpochhammer(q ** (-m), q, k) * qpochhammer(a4, q, k)
        c /= qpochhammer(qh * a2, q, k) ** 2 * qpochhammer(q, q, k)
        c /= qpochhammer(-a2, qh, 2 * k) ** 2
        c *= qpochhammer(q ** (-n), q, k) * qpochhammer(q ** n * a4, q, k)
        return c

    def coeff_addition(k):
        # addition coefficient specialized to the lattice points
        c = F(-1) ** k * t ** (2 * k * (k + l + m + 1)) * a2 ** k
        for b in (q ** (-n), q ** (-l), q ** (-m), a2, q ** n * a4, a4 / q):
            c *= qpochhammer(b, q, k)
        for b in (qh * a2, -qh * a2, -a2):
            c /= qpochhammer(b, q, k)
        c /= qpochhammer(q, q, k) * qpochhammer(a4 / q, q, 2 * k)
        return c

    items = []
    total_r, total_a = F(0), F(0)
    for k in range(n + 1):
        cr, ca = coeff_restricted(k), coeff_addition(k)
        if cr == 0 and ca == 0:
            items.append((f"term k={k}", F(0), F(0)))
            continue
        shifted = _rv_aw_params(qp, k)
        shared = askey_wilson_r_at(n - k, shifted, zu) * askey_wilson_r_at(n - k, shifted, zv)
        shared *= askey_wilson_r_at(k, kernel, zpt) if k >= 1 else F(1)
        term_r, term_a = cr * shared, ca * shared
        items.append((f"term k={k}", term_r, term_a))
        total_r += term_r
        total_a += term_a
    lhs = askey_wilson_r_at(n, base, zpt)
    transported = askey_wilson_r_at(l + m - 2 * j, base, t ** (-2 * n) / a)
    items.append(("duality transport", lhs, transported))
    items.append(("restricted total", total_r, lhs))
    items.append(("addition total", total_a, lhs))
    params = {"l": l, "m": m, "j": j, "n": n, "t": qp.t, "s": qp.s}
    return _compare("restriction-equivalence", params, items, mutation)


# ---------------------------------------------------------------------------
# classical product formula via the moment functional
# ---------------------------------------------------------------------------


def weight_moments(alpha, top: int) -> list:
    """Normalized moments of (1-t^2)^(alpha-1/2) on [-1, 1]: mu_0 = 1,
    odd moments 0, mu_2k = mu_(2k-2) (2k-1)/(2k+2 alpha)."""
    alpha = Fraction(alpha)
    mu = [F(0)] * (top + 1)
    mu[0] = F(1)
    for k in range(1, top // 2 + 1):
        mu[2 * k] = mu[2 * k - 2] * F(2 * k - 1) / (2 * k + 2 * alpha)
    return mu


def check_product_formula_classical(alpha, n: int, xpair, ypair, mutation=None) -> CheckReport:
    """Averaging the composite argument against the kernel weight
    reproduces the product of values; the integral reduces to finitely
    many exact moments because the integrand has degree n."""
    alpha = Fraction(alpha)
    if alpha <= F(-1, 2):
        raise ParameterError("product formula needs alpha > -1/2")
    x, rx = _check_pythagorean(xpair)
    y, ry = _check_pythagorean(ypair)
    cs = ultraspherical_coeffs(n, alpha)
    w = rx * ry
    tpoly = [F(0)] * (n + 1)
    for i, ci in enumerate(cs):
        if ci:
            for r in range(i + 1):
                tpoly[r] += ci * comb(i, r) * (x * y) ** (i - r) * w ** r
    mu = weight_moments(alpha, n)
    lhs = sum(tpoly[r] * mu[r] for r in range(n + 1))
    rhs = ultraspherical_r(n, alpha, x) * ultraspherical_r(n, alpha, y)
    items = [(f"n={n}, x={x}, y={y}", lhs, rhs)]
    params = {"alpha": alpha, "n": n, "x": _pairs_str(xpair), "y": _pairs_str(ypair)}
    return _compare("product-formula-classical", params, items, mutation)


# ---------------------------------------------------------------------------
# representation / family-level cross checks exposed as reports
# ---------------------------------------------------------------------------


def check_cqu_representations(qp: QParams, nmax: int, mutation=None) -> CheckReport:
    """The two series representations of the continuous q-ultraspherical
    polynomial agree coefficient-wise."""
    items = [(f"n={n}", cqu_r(n, qp), cqu_r_alt(n, qp)) for n in range(nmax + 1)]
    return _compare("cqu-representations", {"t": qp.t, "s": qp.s, "nmax": nmax}, items, mutation)
