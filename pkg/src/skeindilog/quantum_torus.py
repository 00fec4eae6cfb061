"""Weyl-normalised quantum torus on Z^2 and the quantum dilogarithm.

Basis ``X[i,j]`` with ``X_x * X_y = s^det(x,y) * X_(x+y)``, so that
``X_x X_y = q^det(x,y) X_y X_x`` and ``X_x^k = X_kx``.
"""

from __future__ import annotations

from math import atan2

from .graded import GradedElement, exp_series
from .lattice import LatticeVector, det2, in_first_quadrant, vec
from .report import Stopwatch, VerificationReport, bidegree_grid
from .scalars import (
    ONE,
    FractionAccumulator,
    LaurentPoly,
    Scalar,
    qint,
)

ORIGIN = LatticeVector(0, 0)


class QTSeries(GradedElement):
    """Finite or delta-truncated sum of ``coeff * X[i,j]``."""

    __slots__ = ()
    symbol = "X"

    @staticmethod
    def key_bidegree(key):
        return key

    @classmethod
    def unit_key(cls):
        return ORIGIN

    @staticmethod
    def key_sort(key):
        return (key[0] + key[1], atan2(key[1], key[0]) if key != ORIGIN else 0.0)

    @classmethod
    def format_key(cls, key) -> str:
        return f"X[{key[0]},{key[1]}]"

    @classmethod
    def key_json(cls, key) -> dict:
        return {"vector": [key[0], key[1]]}

    @classmethod
    def generator(cls, x, cutoff: int | None = None, coeff=ONE) -> "QTSeries":
        x = vec(x)
        if cutoff is not None:
            _check_support(x, cutoff)
            if x.delta > cutoff:
                return cls({}, cutoff)
        coeff = Scalar.coerce(coeff)
        return cls({x: coeff} if coeff else {}, cutoff)

    @classmethod
    def from_terms(cls, terms: dict, cutoff: int | None = None) -> "QTSeries":
        clean = {}
        for x, c in terms.items():
            x = vec(x)
            c = Scalar.coerce(c)
            if cutoff is not None:
                _check_support(x, cutoff)
                if x.delta > cutoff:
                    continue
            if c:
                clean[x] = c
        return cls(clean, cutoff)

    def _mul_terms(self, other: "QTSeries", cutoff: int | None) -> dict:
        acc = FractionAccumulator()
        for x, a in self.terms.items():
            dx = x[0] + x[1]
            for y, b in other.terms.items():
                if cutoff is not None and dx + y[0] + y[1] > cutoff:
                    continue
                z = LatticeVector(x[0] + y[0], x[1] + y[1])
                d = x[0] * y[1] - x[1] * y[0]
                acc.add(z, (a.numerator * b.numerator).shift(d), a.denominator * b.denominator)
        return acc.result()


def _check_support(x, cutoff) -> None:
    if x != ORIGIN and not in_first_quadrant(x):
        raise ValueError(
            f"truncated series (cutoff {cutoff}) only admit first-quadrant support, got {tuple(x)}")


def qt_mul(f: QTSeries, g: QTSeries) -> QTSeries:
    return f * g


def X(i: int, j: int, cutoff: int | None = None) -> QTSeries:
    return QTSeries.generator((i, j), cutoff)


def _check_direction(x) -> LatticeVector:
    x = vec(x)
    if x.delta < 1 or not in_first_quadrant(x):
        raise ValueError(
            f"dilogarithm direction {tuple(x)} must lie in the first quadrant with delta-degree >= 1")
    return x


def dilog_exponent_coefficient(k: int) -> Scalar:
    """``(-1)^(k+1) / (k {k})``, the k-th exponent coefficient of the dilogarithm."""
    c = (Scalar.coerce(k) * qint(k)).inv()
    return c if k % 2 else -c


def phi_series(x, cutoff: int) -> QTSeries:
    """``Phi(X_x) = exp(sum_k (-1)^(k+1) X_kx / (k {k}))`` to delta-degree ``cutoff``."""
    x = _check_direction(x)
    exponent = QTSeries.from_terms(
        {k * x: dilog_exponent_coefficient(k) for k in range(1, cutoff // x.delta + 1)},
        cutoff)
    return exp_series(exponent)


def phi(arg: QTSeries, cutoff: int) -> QTSeries:
    """``Phi`` of an arbitrary series without constant term, using true powers of ``arg``."""
    arg = arg.truncate(cutoff)
    exponent = QTSeries.zero(cutoff)
    power = QTSeries.one(cutoff)
    k = 0
    while True:
        k += 1
        power = power * arg
        if not power:
            break
        exponent = exponent + power.scale(dilog_exponent_coefficient(k))
    return exp_series(exponent)


def product_form_coefficient(k: int) -> Scalar:
    """Coefficient of ``X^k`` in ``prod_{n>=0} (1 + s^(1+2n) X)``.

    The product ``F`` obeys ``F(X) = (1 + sX) F(s^2 X)``, which gives
    ``c_k (1 - s^2k) = s^(2k-1) c_(k-1)``, i.e. ``c_k = s^(k^2) / prod_{i<=k} (1 - s^2i)``.
    """
    c = ONE
    for i in range(1, k + 1):
        den = LaurentPoly({0: 1, 2 * i: -1})
        c = c * Scalar.fraction(LaurentPoly.monomial(2 * i - 1), den)
    return c


def phi_product_series(x, cutoff: int) -> QTSeries:
    """``prod_{n>=0} (1 + s^(1+2n) X_x)`` to delta-degree ``cutoff``.

    Each coefficient is the exact rational function of the infinite product
    (expanded around ``s = 0``).  This series equals ``Phi(X_x)^-1``, not
    ``Phi(X_x)``: its logarithm is ``sum_k (-1)^k X_kx / (k {k})``.
    """
    x = _check_direction(x)
    terms = {ORIGIN: ONE}
    for k in range(1, cutoff // x.delta + 1):
        terms[k * x] = product_form_coefficient(k)
    return QTSeries(terms, cutoff)


def phi_pentagon_sides(cutoff: int) -> tuple[QTSeries, QTSeries]:
    """``Phi(V) Phi(U)`` and ``Phi(U) Phi(q^-1/2 V U) Phi(V)`` with ``V = X[1,0]``, ``U = X[0,1]``."""
    u = X(0, 1)
    v = X(1, 0)
    middle = (v * u).scale(Scalar.s_power(-1))
    assert middle.terms == {LatticeVector(1, 1): ONE}
    phi_u = phi(u, cutoff)
    phi_v = phi(v, cutoff)
    lhs = phi_v * phi_u
    rhs = phi_u * phi(middle, cutoff) * phi_v
    return lhs, rhs


def compare_by_bidegree(report: VerificationReport, lhs: GradedElement, rhs: GradedElement,
                        max_degree: int) -> None:
    parts = (lhs - rhs).parts_by_bidegree()
    for b in bidegree_grid(max_degree):
        diff = parts.get(b)
        report.record(b, diff.to_text() if diff else None)


def verify_phi_pentagon(cutoff: int) -> VerificationReport:
    if cutoff < 0:
        raise ValueError("max degree must be nonnegative")
    report = VerificationReport("phi-pentagon", "quantum-torus", cutoff)
    with Stopwatch(report):
        lhs, rhs = phi_pentagon_sides(cutoff)
        compare_by_bidegree(report, lhs, rhs, cutoff)
    return report
