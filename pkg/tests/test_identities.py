"""Identity checks: verdicts, witnesses, oracles, fail-negative behavior."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qaskey.errors import ParameterError
from qaskey.families import (
    HahnParams,
    KrawtchoukParams,
    QParams,
    RacahParams,
    WilsonParams,
    cqu_r,
)
from qaskey.identities import (
    PYTHAGOREAN_PAIRS,
    CheckReport,
    LinearizationLattice,
    Mutation,
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
    dual_projection_sum,
    linearization_racah_params,
    weight_moments,
)
from qaskey.laurent import LaurentPoly
from qaskey.series import qpochhammer

QP = QParams(F(1, 2), F(2, 3))
QPA = QParams(F(1, 2), F(1, 3))
P = PYTHAGOREAN_PAIRS


def assert_report_invariant(report: CheckReport):
    if report.verdict == "pass":
        assert report.witness is None and report.residual is None
    else:
        assert report.witness is not None and report.residual is not None


# ---------------------------------------------------------------------------
# pass verdicts on representative parameters
# ---------------------------------------------------------------------------


def test_duality_cqu():
    r = check_duality_cqu(QP, 6)
    assert r.passed
    assert_report_invariant(r)


@pytest.mark.parametrize("family,params", [
    ("krawtchouk", KrawtchoukParams(F(1, 3), 3)),
    ("hahn-dual-hahn", HahnParams(F(1, 2), F(1, 3), 4)),
    ("racah", RacahParams(F(1, 2), F(1, 3), 3, F(1, 5))),
    ("wilson", WilsonParams(F(1), F(3, 2), F(2), F(5, 2))),
])
def test_duality_discrete(family, params):
    assert check_duality_discrete(family, params).passed


@pytest.mark.parametrize("family,params", [
    ("krawtchouk", KrawtchoukParams(F(1, 3), 4)),
    ("hahn", HahnParams(F(1, 2), F(1, 3), 4)),
    ("racah", linearization_racah_params(F(1, 2), 5, 3)),
    ("q-racah", LinearizationLattice(QP, 5, 4).qrp),
])
def test_orthogonality_discrete(family, params):
    assert check_orthogonality_discrete(family, params).passed


def test_weight_ratio_and_difference():
    assert check_weight_ratio(QP).passed
    assert check_difference_formula(QP, 8).passed
    with pytest.raises(ParameterError):
        check_difference_formula(QP, 1)


def test_difference_formula_vanishing_device():
    # the left side vanishes at the normalization points z = ts and 1/(ts),
    # which is what makes the quadratic factor split off exactly
    a = QP.a
    for n in (2, 3, 5):
        diff = cqu_r(n, QP) - cqu_r(n - 2, QP)
        assert diff.eval_at(a) == 0
        assert diff.eval_at(1 / a) == 0


def test_difference_formula_leading_coefficient_route():
    # the prefactor is forced by the top-degree coefficients of the two
    # families: extract and compare them directly
    from qaskey.families import cqu_leading_z_coeff

    q, b, qh, t = QP.q, QP.beta, QP.qhalf, QP.t
    promoted = QP.beta_shift(1)
    for n in range(2, 7):
        pref = 4 * t ** (2 * (3 - n)) * b * (1 - t ** (4 * n - 2) * b)
        pref /= (1 + qh * b) * (1 + q * b) * (1 - q * b)
        # top z-coefficient of (x^2 - a^2) * R_(n-2) with promoted beta is
        # (1/4) times the promoted leading coefficient
        lhs_top = cqu_leading_z_coeff(n, QP)
        rhs_top = pref * cqu_leading_z_coeff(n - 2, promoted) / 4
        assert lhs_top == rhs_top


def test_backward_shift():
    qrp = LinearizationLattice(QP, 4, 3).qrp
    assert check_backward_shift(qrp, 3).passed


def test_backward_shift_constant_function_annihilates():
    # summing the degree-1 member against a constant is an orthogonality
    # statement: both sides of the summed relation are exactly 0
    from qaskey.families import qracah, qracah_weight

    qrp = LinearizationLattice(QP, 4, 3).qrp
    lhs = sum(qracah_weight(x, qrp) * qracah(1, x, qrp) for x in range(qrp.N + 1))
    assert lhs == 0  # and the telescoped side is 0 termwise since f(x) - f(x+1) = 0


def test_theorem_5_1_small_grid():
    assert check_theorem_5_1(ParamGrid(lmax=3, qparams=(QP,))).passed


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=F(1, 5), max_value=F(4, 5), max_denominator=6),
       st.fractions(min_value=F(1, 5), max_value=F(6, 5), max_denominator=6),
       st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3),
       st.integers(min_value=0, max_value=3))
def test_projection_sum_closed_form_random_carriers(t, s, l_, m_, k_):
    # brute = closed beyond the default carriers: random admissible (t, s)
    if not s * t < 1:
        s = 1 / (2 * t)
    qp = QParams(t, s)
    l = max(l_, m_, k_)
    m = max(m_, k_)
    k = min(k_, m)
    assert dual_projection_sum(k, l, m, qp, "brute") == dual_projection_sum(k, l, m, qp, "closed")


def test_projection_sum_base_case_factors():
    # k = 0 reduces to the lattice mass times the plain product
    for (l, m) in [(2, 1), (3, 3), (4, 0)]:
        lat = LinearizationLattice(QP, l, m)
        s0 = dual_projection_sum(0, l, m, QP, "closed")
        assert s0 == cqu_r(l, QP) * cqu_r(m, QP) * lat.h0()
    assert dual_projection_sum(0, 0, 0, QP, "closed") == LaurentPoly.constant(1)
    assert dual_projection_sum(0, 0, 0, QP, "brute") == LaurentPoly.constant(1)


def test_projection_sum_one_step_reduction():
    # the single-step recurrence behind the closed form, with both sides
    # computed by brute lattice sums
    q, b, qh, t, s = QP.q, QP.beta, QP.qhalf, QP.t, QP.s
    for (k, l, m) in [(1, 2, 1), (2, 3, 2), (3, 4, 3)]:
        lhs = dual_projection_sum(k, l, m, QP, "brute")
        fac = (t ** (2 * (l + m + 1)) * s * s) * qpochhammer(t ** (2 - 4 * (l + m)) / b, q, 1)
        fac /= qpochhammer(-qh * b, q, 1) * qpochhammer(q * b, q, 1) * qpochhammer(-q * b, q, 1)
        lkz = LaurentPoly.constant(1)
        from qaskey.laurent import qpoch_laurent_pow
        for sign in (1, -1):
            lkz = lkz * qpoch_laurent_pow(sign * QP.a, 1, qh, 1)
            lkz = lkz * qpoch_laurent_pow(sign * QP.a, -1, qh, 1)
        rhs = lkz * dual_projection_sum(k - 1, l - 1, m - 1, QP.beta_shift(1), "brute") * fac
        assert lhs == rhs


def test_projection_sum_input_validation():
    with pytest.raises(ParameterError):
        dual_projection_sum(2, 3, 1, QP, "brute")
    with pytest.raises(ParameterError):
        dual_projection_sum(0, 1, 1, QP, "sideways")


def test_linearization_q():
    for (l, m) in [(5, 3), (4, 4), (3, 0)]:
        assert check_linearization("q", l, m, qp=QP).passed


def test_linearization_lattice_closed_displays():
    # the specialized weight and total mass collapse to products of
    # one-parameter q-shifted factorials; pin those closed displays
    q, b, qb = QP.q, QP.beta, QP.qhalf * QP.beta
    for (l, m) in [(3, 2), (4, 4), (5, 1)]:
        lat = LinearizationLattice(QP, l, m)

        def qp_(base, k):
            return qpochhammer(base, q, k)

        h0_display = (qp_(q * b * b, l) * qp_(q * b * b, m) / qp_(q * b * b, l + m)) * (
            qp_(qb, l + m) / (qp_(qb, l) * qp_(qb, m)))
        assert lat.h0() == h0_display
        for j in range(m + 1):
            w_display = (qp_(qb, l + m) / qp_(q * b * b, l + m))
            w_display *= qp_(q, l) / qp_(qb, l) * qp_(q, m) / qp_(qb, m)
            w_display *= (1 - q ** (l + m - 2 * j) * qb) / (1 - qb)
            w_display *= qp_(qb, j) / qp_(q, j)
            w_display *= qp_(qb, l - j) / qp_(q, l - j) * qp_(qb, m - j) / qp_(q, m - j)
            w_display *= qp_(q * b * b, l + m - j) / qp_(q * qb, l + m - j) * qb ** j
            assert lat.weight(j) == w_display


def test_linearization_q_top_coefficient_is_inverse_mass():
    # coefficient of the top-degree member is w(0)/h0 with w(0) = 1
    l, m = 4, 2
    lat = LinearizationLattice(QP, l, m)
    assert lat.weight(0) == 1
    prod = cqu_r(l, QP) * cqu_r(m, QP)
    residual = prod - cqu_r(l + m, QP) * (1 / lat.h0())
    assert residual.max_degree() < l + m


def test_linearization_classical_and_legendre():
    for alpha in (F(0), F(1, 2), F(1), F(1, 4)):
        assert check_linearization("classical", 5, 4, alpha=alpha).passed
    assert check_linearization("legendre", 4, 3).passed
    assert check_linearization("legendre", 1, 1).passed


def test_dual_addition_q_both_modes():
    for (l, m, j) in [(2, 1, 1), (3, 2, 0), (4, 4, 2), (3, 0, 0)]:
        assert check_dual_addition("q", l, m, j, "direct", qp=QP).passed
    for (l, m) in [(2, 1), (3, 3), (5, 2)]:
        assert check_dual_addition("q", l, m, mode="inversion", qp=QP).passed


def test_dual_addition_modes_are_mutually_consistent():
    # inversion coefficients times the norms reproduce the brute sums
    l, m = 3, 2
    lat = LinearizationLattice(QP, l, m)
    from qaskey.identities import _dual_addition_coeff_q

    for k in range(m + 1):
        closed = _dual_addition_coeff_q(k, l, m, QP)
        assert closed * lat.norm(k) == dual_projection_sum(k, l, m, QP, "brute")


def test_dual_addition_classical_and_a_form():
    assert check_dual_addition("classical", 2, 2, 1, alpha=F(1, 2)).passed
    assert check_dual_addition("classical", 4, 3, 2, alpha=F(1)).passed
    assert check_dual_addition_a_form(QP, 3, 2, 1).passed


def test_addition_q():
    for n in range(5):
        assert check_addition("q", n, qp=QPA, u=F(2), v=F(3)).passed
    assert check_addition("q", 3, qp=QPA, u=F(3, 2), v=F(5, 4)).passed


def test_addition_classical_and_legendre():
    assert check_addition("classical", 4, alpha=F(1, 2), xpair=P[0], ypair=P[1],
                          tpoint=P[2][0]).passed
    assert check_addition("classical", 3, alpha=F(0), xpair=P[1], ypair=P[2],
                          tpoint=P[0][0]).passed
    assert check_addition("legendre", 2, xpair=P[0], ypair=P[1], phipair=P[2]).passed
    assert check_addition("legendre", 5, xpair=P[2], ypair=P[0], phipair=P[1]).passed


def test_addition_rejects_off_circle_points():
    from qaskey.errors import InadmissiblePoint

    with pytest.raises(InadmissiblePoint):
        check_addition("classical", 2, alpha=F(1, 2), xpair=(F(1, 2), F(1, 2)),
                       ypair=P[0], tpoint=F(1, 3))


def test_restriction_equivalence():
    assert check_restriction_equivalence(QP, 0, 0, 0, 0).passed
    assert check_restriction_equivalence(QP, 2, 1, 0, 1).passed
    assert check_restriction_equivalence(QP, 3, 2, 1, 2).passed
    assert check_restriction_equivalence(QP, 3, 3, 3, 4).passed


def test_product_formula_classical():
    assert check_product_formula_classical(F(0), 2, P[0], P[1]).passed
    assert check_product_formula_classical(F(1, 2), 6, P[1], P[2]).passed
    assert check_product_formula_classical(F(1), 5, P[0], P[2]).passed
    # degree-1 case reduces to the plain product of linear values
    assert check_product_formula_classical(F(3, 4), 1, P[0], P[1]).passed


def test_weight_moments_recurrence_matches_beta_ratio():
    import math

    for alpha in (F(0), F(1, 2), F(1), F(1, 4)):
        mu = weight_moments(alpha, 10)
        for k in range(1, 5):
            assert mu[2 * k] / mu[2 * k - 2] == F(2 * k - 1) / (2 * k + 2 * alpha)
            lhs = float(mu[2 * k] / mu[2 * k - 2])
            a = float(alpha)
            rhs = math.gamma(k + 0.5) * math.gamma(k + a) / (
                math.gamma(k - 0.5) * math.gamma(k + a + 1))
            assert abs(lhs - rhs) < 1e-12
        assert all(mu[2 * k + 1] == 0 for k in range(5))


def test_cqu_representation_check():
    assert check_cqu_representations(QP, 8).passed


# ---------------------------------------------------------------------------
# fail-negative: every check detects a single mutated item
# ---------------------------------------------------------------------------

MUTATION_TARGETS = [
    lambda mut: check_duality_cqu(QP, 4, mutation=mut),
    lambda mut: check_duality_discrete("krawtchouk", KrawtchoukParams(F(1, 3), 3), mutation=mut),
    lambda mut: check_duality_discrete("hahn-dual-hahn", HahnParams(F(1, 2), F(1, 3), 3), mutation=mut),
    lambda mut: check_duality_discrete("racah", RacahParams(F(1, 2), F(1, 3), 3, F(1, 5)), mutation=mut),
    lambda mut: check_duality_discrete("wilson", WilsonParams(F(1), F(3, 2), F(2), F(5, 2)), mutation=mut),
    lambda mut: check_orthogonality_discrete("krawtchouk", KrawtchoukParams(F(1, 3), 3), mutation=mut),
    lambda mut: check_orthogonality_discrete("hahn", HahnParams(F(1, 2), F(1, 3), 3), mutation=mut),
    lambda mut: check_orthogonality_discrete("racah", linearization_racah_params(F(1, 2), 4, 3), mutation=mut),
    lambda mut: check_orthogonality_discrete("q-racah", LinearizationLattice(QP, 4, 3).qrp, mutation=mut),
    lambda mut: check_weight_ratio(QP, mutation=mut),
    lambda mut: check_difference_formula(QP, 4, mutation=mut),
    lambda mut: check_backward_shift(LinearizationLattice(QP, 4, 3).qrp, 3, mutation=mut),
    lambda mut: check_theorem_5_1(ParamGrid(lmax=2, qparams=(QP,)), mutation=mut),
    lambda mut: check_linearization("q", 3, 2, qp=QP, mutation=mut),
    lambda mut: check_linearization("classical", 3, 2, alpha=F(1, 2), mutation=mut),
    lambda mut: check_linearization("legendre", 2, 2, mutation=mut),
    lambda mut: check_dual_addition("q", 3, 2, 1, "direct", qp=QP, mutation=mut),
    lambda mut: check_dual_addition("q", 3, 2, mode="inversion", qp=QP, mutation=mut),
    lambda mut: check_dual_addition("classical", 3, 2, 1, alpha=F(1, 2), mutation=mut),
    lambda mut: check_dual_addition_a_form(QP, 2, 1, 0, mutation=mut),
    lambda mut: check_addition("q", 2, qp=QPA, u=F(2), v=F(3), mutation=mut),
    lambda mut: check_addition("classical", 2, alpha=F(1, 2), xpair=P[0], ypair=P[1],
                               tpoint=P[2][0], mutation=mut),
    lambda mut: check_addition("legendre", 2, xpair=P[0], ypair=P[1], phipair=P[2], mutation=mut),
    lambda mut: check_restriction_equivalence(QP, 2, 1, 0, 1, mutation=mut),
    lambda mut: check_product_formula_classical(F(1, 2), 3, P[0], P[1], mutation=mut),
    lambda mut: check_cqu_representations(QP, 4, mutation=mut),
]


@pytest.mark.parametrize("target", range(len(MUTATION_TARGETS)))
def test_mutation_is_detected(target):
    thunk = MUTATION_TARGETS[target]
    clean = thunk(None)
    assert clean.passed, f"target {target} should pass unmutated"
    for index in (0, 1, 7):
        mutated = thunk(Mutation(index=index))
        assert not mutated.passed, f"target {target} missed mutation at {index}"
        assert mutated.witness is not None and mutated.residual is not None


def test_mutation_witness_localizes():
    r = check_duality_cqu(QP, 3, mutation=Mutation(index=0))
    assert r.witness.location.startswith("m=0, n=0")
    r = check_difference_formula(QP, 5, mutation=Mutation(index=2))
    assert r.witness.location.startswith("n=4")
    r = check_linearization("classical", 3, 2, alpha=F(1, 2), mutation=Mutation(index=3))
    assert "sum" in r.witness.location or "j=" in r.witness.location


def test_report_serialization_shape():
    r = check_weight_ratio(QP)
    d = r.to_dict()
    assert d == {"id": "weight-recurrence", "params": {"s": "2/3", "t": "1/2"}, "verdict": "pass"}
    r = check_weight_ratio(QP, mutation=Mutation(index=0, delta=F(1, 7)))
    d = r.to_dict()
    assert d["verdict"] == "fail"
    assert d["witness"]["location"] == "weight-ratio, z^0"
    assert d["witness"]["lhs"] != d["witness"]["rhs"]
    assert d["residual"] == "1/7"
