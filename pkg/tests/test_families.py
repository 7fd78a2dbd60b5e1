"""Family evaluators: values, weights, norms, dualities, cross-checks."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qaskey.errors import ParameterError, VanishingDenominator
from qaskey.families import (
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
    cqu_aw_params,
    cqu_duality_point,
    cqu_leading_z_coeff,
    cqu_r,
    cqu_r_alt,
    cqu_r_at,
    dual_hahn,
    hahn,
    hahn_weight,
    jacobi_r,
    krawtchouk,
    krawtchouk_weight,
    qracah,
    qracah_at_top,
    qracah_h0,
    qracah_norms,
    qracah_weight,
    racah,
    racah_h0,
    racah_norms,
    racah_phi,
    racah_weight,
    ultraspherical_coeffs,
    ultraspherical_r,
    wilson_dual_params,
    wilson_dual_phi,
)

QP = QParams(F(1, 2), F(2, 3))


def lin_qracah(qp, l, m):
    alpha = qp.beta / qp.qhalf
    delta = 1 / (qp.beta * qp.qhalf * qp.q ** l)
    return QRacahParams(alpha, alpha, delta, m, qp)


def test_qparams_accessors_and_validation():
    qp = QParams(F(1, 2), F(2, 3))
    assert qp.q == F(1, 16) and qp.qhalf == F(1, 4) and qp.qquarter == F(1, 2)
    assert qp.beta == F(4, 9) and qp.betahalf == F(2, 3) and qp.a == F(1, 3)
    assert qp.beta_shift(1) == QParams(F(1, 2), F(1, 6))
    with pytest.raises(ParameterError):
        QParams(F(3, 2), F(1))
    with pytest.raises(ParameterError):
        QParams(F(1, 2), F(-1))
    with pytest.raises(ParameterError):
        QParams(F(1, 2), F(5, 2))  # s*t >= 1


def test_jacobi_normalization():
    for n in range(7):
        assert jacobi_r(n, JacobiParams(F(1, 2), F(1, 3)), F(1)) == 1
    assert jacobi_r(0, JacobiParams(2, 3), F(-5, 7)) == 1
    x = F(2, 9)
    assert jacobi_r(1, JacobiParams(0, 0), x) == x


def test_ultraspherical_values_and_coeffs():
    assert ultraspherical_coeffs(2, F(0)) == (F(-1, 2), F(0), F(3, 2))
    assert ultraspherical_r(2, F(0), F(1, 2)) == F(-1, 8)
    for n in range(7):
        assert ultraspherical_r(n, F(1, 4), F(1)) == 1
    # parity, brute force on both sides
    for n in range(7):
        for x in (F(1, 3), F(-2, 7), F(4, 5)):
            assert ultraspherical_r(n, F(1, 2), -x) == F(-1) ** n * ultraspherical_r(n, F(1, 2), x)


@given(st.integers(min_value=0, max_value=6),
       st.fractions(min_value=-1, max_value=1, max_denominator=9))
def test_ultraspherical_coeffs_match_values(n, x):
    alpha = F(1, 3)
    poly_value = sum(c * x ** k for k, c in enumerate(ultraspherical_coeffs(n, alpha)))
    assert poly_value == ultraspherical_r(n, alpha, x)


def test_krawtchouk_values():
    kp = KrawtchoukParams(F(1, 2), 2)
    assert krawtchouk(0, 2, kp) == 1
    assert krawtchouk(1, 1, kp) == 0
    kp3 = KrawtchoukParams(F(1, 3), 3)
    assert krawtchouk(1, 2, kp3) == -1
    assert krawtchouk(2, 1, kp3) == -1
    assert sum(krawtchouk_weight(x, kp3) for x in range(4)) == 1


def test_hahn_and_dual_hahn():
    hp = HahnParams(F(0), F(0), 2)
    assert hahn(0, 1, hp) == 1
    assert hahn(2, 0, hp) == 1
    assert hahn(1, 1, hp) == 0
    hp4 = HahnParams(F(1, 2), F(1, 3), 4)
    for n in range(5):
        for x in range(5):
            assert dual_hahn(n, x, hp4) == hahn(x, n, hp4)


def test_racah_values_and_duality():
    rp = RacahParams(F(1, 2), F(1, 3), 3, F(1, 5))
    for n in range(4):
        assert racah(n, 0, rp) == 1
        assert racah(0, n, rp) == 1
    for n in range(4):
        for x in range(4):
            assert racah(n, x, rp) == racah_phi(x, n, rp.gamma, rp.delta, rp.alpha, rp.beta)


def test_racah_weights_and_norms():
    rp = RacahParams(F(0), F(0), 3, F(-5))  # positive-weight lattice
    assert racah_weight(0, rp) == 1
    assert sum(racah_weight(x, rp) for x in range(4)) == racah_h0(rp)
    assert racah_norms(0, rp).ratio == 1
    for params in [RacahParams(F(1, 2), F(1, 2), 3, F(-6)),
                   RacahParams(F(3, 2), F(3, 2), 3, F(-7)),
                   RacahParams(F(1), F(1), 3, F(-13, 2))]:
        assert sum(racah_weight(x, params) for x in range(4)) == racah_h0(params)


def test_wilson_duality():
    wp = WilsonParams(F(1), F(3, 2), F(2), F(5, 2))
    assert wilson_dual_phi(0, 3, wp) == 1
    assert wilson_dual_phi(3, 0, wp) == 1
    wpd = wilson_dual_params(wp)
    assert wpd.a == F(3)
    for n in range(5):
        for m in range(5):
            assert wilson_dual_phi(n, m, wp) == wilson_dual_phi(m, n, wpd)


def test_askey_wilson_basic():
    awp = AWParams(F(1, 3), F(1, 12), F(-1, 3), F(-1, 12), F(1, 16))
    assert askey_wilson_r(0, awp) == askey_wilson_r_at(0, awp, F(7, 5)) == 1
    for n in range(7):
        poly = askey_wilson_r(n, awp)
        assert poly.eval_at(awp.a) == 1  # value 1 at z = a
        assert poly.is_symmetric()
        assert poly.max_degree() == n and poly.coeff(n) != 0
        assert poly.eval_at(F(7, 5)) == askey_wilson_r_at(n, awp, F(7, 5))
    with pytest.raises(ParameterError):
        AWParams(F(2), F(1, 2), F(1, 3), F(1, 5), F(1, 4))  # ab = 1


def test_cqu_representations_agree():
    for qp in (QP, QParams(F(2, 3), F(1, 2)), QParams(F(1, 2), F(1, 3))):
        for n in range(9):
            assert cqu_r(n, qp) == cqu_r_alt(n, qp)


def test_cqu_special_value_and_leading_coefficient():
    for n in range(9):
        assert cqu_r(n, QP).eval_at(QP.a) == 1
        assert cqu_r(n, QP).coeff(n) == cqu_leading_z_coeff(n, QP)


def test_cqu_parity():
    for n in range(9):
        poly = cqu_r(n, QP)
        assert poly.negate_variable() == poly * F(-1) ** n


def test_cqu_duality_points():
    for m in range(7):
        for n in range(7):
            zm, zn = cqu_duality_point(m, QP), cqu_duality_point(n, QP)
            assert cqu_r(n, QP).eval_at(zm) == cqu_r(m, QP).eval_at(zn)
    assert cqu_duality_point(2, QP) == QP.t ** (-5) / QP.s


def test_cqu_is_the_alternative_parameter_specialization():
    # same quadruple in both parameterizations: (a, q^(1/2)a, -a, -q^(1/2)a)
    awp = cqu_aw_params(QP)
    assert (awp.a, awp.b, awp.c, awp.d) == (QP.a, QP.qhalf * QP.a, -QP.a, -QP.qhalf * QP.a)
    for n in range(5):
        assert cqu_r_at(n, QP, F(9, 4)) == askey_wilson_r_at(n, awp, F(9, 4))


def test_qracah_values():
    qrp = lin_qracah(QP, 3, 2)
    for n in range(3):
        assert qracah(n, 0, qrp) == 1
        assert qracah(0, n, qrp) == 1
        assert qracah(n, qrp.N, qrp) == qracah_at_top(n, qrp)


def test_qracah_weights_and_norms():
    for (l, m) in [(3, 2), (4, 3)]:
        qrp = lin_qracah(QP, l, m)
        assert qracah_weight(0, qrp) == 1
        assert sum(qracah_weight(x, qrp) for x in range(m + 1)) == qracah_h0(qrp)
        assert qracah_norms(0, qrp).ratio == 1


def test_qracah_matches_askey_wilson_on_the_lattice():
    # the q-quadratic substitution carries the discrete family into the
    # continuous one: A^2 = q*gamma*delta, z_x = q^(-x)/A
    for (l, m) in [(3, 2), (4, 3)]:
        qrp = lin_qracah(QP, l, m)
        q = QP.q
        A = 1 / QP.s / QP.t ** (2 * (l + m) + 1)
        awp = AWParams(A, q * qrp.alpha / A, q * qrp.beta * qrp.delta / A,
                       q * qrp.gamma / A, q)
        for n in range(min(4, m) + 1):
            for x in range(m + 1):
                zx = q ** (-x) / A
                assert qracah(n, x, qrp) == askey_wilson_r_at(n, awp, zx)


def test_qracah_admissibility_validation():
    # delta q = 1 makes a weight denominator factor vanish at x = 1
    with pytest.raises(VanishingDenominator) as err:
        QRacahParams(F(1, 2), F(1, 2), 1 / QP.q, 2, QP)
    assert err.value.index == 1


def test_hahn_weight_positive():
    hp = HahnParams(F(1, 2), F(1, 3), 4)
    assert all(hahn_weight(x, hp) > 0 for x in range(5))


def test_lattice_bounds_enforced():
    kp = KrawtchoukParams(F(1, 3), 3)
    with pytest.raises(ParameterError):
        krawtchouk(4, 0, kp)
    with pytest.raises(ParameterError):
        krawtchouk(0, 4, kp)
