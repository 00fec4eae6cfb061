import random

import pytest

from skeindilog.dilog import (
    adjoint,
    ad_property_check,
    dilog_exponent,
    dilog_inverse,
    identity_2_2_check,
    identity_2_2_sides,
    pentagon_check,
    pentagon_sides,
    skein_dilog,
    unimodular_pairs,
)
from skeindilog.graded import inverse_series, log_series
from skeindilog.lattice import LatticeVector as V, det2
from skeindilog.quantum_torus import X
from skeindilog.sampling import random_skein_element
from skeindilog.scalars import ONE, Scalar, parse_scalar, quantum_integer as qi
from skeindilog.torus_skein import P, SkeinElement, normal_order


def test_low_degree_parts_of_q():
    q = skein_dilog((1, 0), 4)
    assert q.constant_term() == ONE
    parts = q.parts_by_bidegree()
    assert parts[V(1, 0)] == P(1, 0).scale(ONE / qi(1))
    want = (P(1, 0) * P(1, 0)).scale(ONE / (2 * qi(1) ** 2)) - P(2, 0).scale(ONE / (2 * qi(2)))
    assert parts[V(2, 0)] == want


def test_exponent_coefficients():
    e = dilog_exponent((1, 1), 6)
    assert e.bidegrees() == {V(1, 1), V(2, 2), V(3, 3)}
    assert e.coefficient(((3, 3),)) == ONE / (3 * qi(3))
    assert e.coefficient(((2, 2),)) == -ONE / (2 * qi(2))


def test_log_recovers_exponent():
    for l in ((1, 0), (2, 1)):
        assert log_series(skein_dilog(l, 6)) == dilog_exponent(l, 6)


def test_inverse():
    for l in ((1, 0), (0, 1), (1, 1)):
        q, qinv = skein_dilog(l, 6), dilog_inverse(l, 6)
        assert (q * qinv).truncate(6) == SkeinElement.one(6)
        assert inverse_series(q) == qinv


def test_direction_validation():
    for bad in ((0, 0), (-1, 1)):
        with pytest.raises(ValueError):
            skein_dilog(bad, 4)
    with pytest.raises(ValueError):
        skein_dilog((1, 0), 4, algebra="cubic")


# -- adjoint --------------------------------------------------------------------

def test_adjoint_examples():
    q = skein_dilog((1, 0), 6)
    assert adjoint(q, P(1, 0), 6) == P(1, 0)
    assert adjoint(q, P(0, 1), 6) == P(0, 1) + P(1, 1)
    # Ad of the inverse acts as (1 + T)^-1, an alternating series
    alternating = SkeinElement.zero()
    for m in range(6):
        alternating = alternating + P(m, 1).scale((-1) ** m)
    assert adjoint(dilog_inverse((1, 0), 6), P(0, 1), 6) == alternating
    qt = skein_dilog((1, 0), 6, "quantum-torus")
    assert adjoint(qt, X(0, 1), 6) == X(0, 1) + X(1, 1)


def test_adjoint_is_an_automorphism():
    rng = random.Random(21)
    q = skein_dilog((1, 1), 6)
    for _ in range(5):
        f, g = random_skein_element(rng, 3), random_skein_element(rng, 3)
        assert adjoint(q, f * g, 6) == (adjoint(q, f, 6) * adjoint(q, g, 6)).truncate(6)


def test_ad_property_examples():
    assert ad_property_check(6, samples=10).passed
    assert ad_property_check(6, samples=10, algebra="quantum-torus").passed
    assert ad_property_check(5, samples=4, seed=3).passed


def test_ad_property_vacuous_below_two():
    r = ad_property_check(0)
    assert r.passed and r.bidegrees_checked == 0


def test_unimodular_pairs():
    pairs = unimodular_pairs(6, 1)
    assert (V(1, 0), V(0, 1)) in pairs
    assert all(det2(x, y) == 1 and (x + y).delta <= 6 for x, y in pairs)
    assert len(pairs) >= 10


# -- pentagon ---------------------------------------------------------------------

def test_pentagon_bidegree_one_one_by_hand():
    lhs, rhs = pentagon_sides(2)
    c = ONE / qi(1) ** 2
    want = normal_order([(1, 0), (0, 1)]).scale(c)
    assert lhs.coefficient(((1, 0), (0, 1))) == c
    # Q_y Q_(x+y) Q_x contributes P01 P10 / {1}^2 + P11 / {1}
    assert rhs.parts_by_bidegree()[V(1, 1)] == want
    assert lhs.parts_by_bidegree()[V(1, 1)] == want


def test_pentagon_pure_y_parts_are_q_y():
    lhs, rhs = pentagon_sides(5)
    qy = skein_dilog((0, 1), 5).parts_by_bidegree()
    for k in range(1, 6):
        assert lhs.parts_by_bidegree()[V(0, k)] == qy[V(0, k)]
        assert rhs.parts_by_bidegree()[V(0, k)] == qy[V(0, k)]


def test_pentagon_n8():
    r = pentagon_check(8)
    assert r.passed and r.bidegrees_checked == 45


@pytest.mark.parametrize("n", [0, 1, 3])
def test_pentagon_small_cutoffs(n):
    r = pentagon_check(n, "quantum-torus")
    assert r.passed and r.bidegrees_checked == (n + 1) * (n + 2) // 2


def test_pentagon_rejects_negative_cutoff():
    with pytest.raises(ValueError):
        pentagon_check(-1)


def test_dilog_supports():
    n = 6
    assert all(b[1] == 0 for b in skein_dilog((1, 0), n).bidegrees())
    assert all(b[0] == 0 for b in skein_dilog((0, 1), n).bidegrees())
    assert all(b[0] == b[1] for b in skein_dilog((1, 1), n).bidegrees())
    assert len(skein_dilog((1, 0), n).bidegrees()) == n + 1


# -- the (2,2) identity ----------------------------------------------------------

def test_identity_2_2_values():
    lhs, rhs = identity_2_2_sides()
    c = parse_scalar("(s^2 + s^-2)/(s^2 - s^-2)")
    assert c == qi(4) / qi(2) ** 2
    assert lhs == P(2, 2).scale(c)
    assert rhs == P(2, 2).scale(c)
    assert lhs.to_text() == "(s^4 + 1)/(s^4 - 1)*P[2,2]"
    r = identity_2_2_check()
    assert r.passed and r.bidegrees_checked == 1
