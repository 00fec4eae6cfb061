"""Skein dilogarithms, adjoint actions and the pentagon verifiers.

``Q_l = exp(sum_k (-1)^(k+1) P_kl / (k {k}))`` in either the torus skein
algebra or the quantum torus (``P`` replaced by ``X``).  Every series is
truncated at a delta-degree cutoff; all comparisons are exact.
"""

from __future__ import annotations

import random

from .graded import GradedElement, exp_series, inverse_series
from .lattice import LatticeVector, det2, in_first_quadrant, vec
from .quantum_torus import QTSeries, compare_by_bidegree, dilog_exponent_coefficient
from .report import Stopwatch, VerificationReport
from .scalars import Scalar, qint
from .torus_skein import SkeinElement, commutator, normalized_generator

ALGEBRAS: dict[str, type[GradedElement]] = {
    "torus-skein": SkeinElement,
    "quantum-torus": QTSeries,
}

X_LOOP = LatticeVector(1, 0)
Y_LOOP = LatticeVector(0, 1)


def algebra_class(algebra: str) -> type[GradedElement]:
    try:
        return ALGEBRAS[algebra]
    except KeyError:
        raise ValueError(f"unknown algebra {algebra!r}; expected one of {sorted(ALGEBRAS)}") from None


def _direction(l) -> LatticeVector:
    l = vec(l)
    if l.delta < 1 or not in_first_quadrant(l):
        raise ValueError(f"Q{list(l)}: direction must be first-quadrant with delta-degree >= 1")
    return l


def dilog_exponent(l, cutoff: int, algebra: str = "torus-skein", sign: int = 1) -> GradedElement:
    """``sign * sum_{k <= cutoff/delta(l)} (-1)^(k+1) G_kl / (k {k})``."""
    l = _direction(l)
    cls = algebra_class(algebra)
    out = cls.zero(cutoff)
    for k in range(1, cutoff // l.delta + 1):
        c = dilog_exponent_coefficient(k)
        out = out + cls.generator(k * l, cutoff, c if sign > 0 else -c)
    return out


def skein_dilog(l, cutoff: int, algebra: str = "torus-skein") -> GradedElement:
    return exp_series(dilog_exponent(l, cutoff, algebra))


def dilog_inverse(l, cutoff: int, algebra: str = "torus-skein") -> GradedElement:
    return exp_series(dilog_exponent(l, cutoff, algebra, sign=-1))


def adjoint(q: GradedElement, f: GradedElement, cutoff: int,
            q_inverse: GradedElement | None = None) -> GradedElement:
    """``q f q^-1`` to delta-degree ``cutoff``; ``q`` needs constant term 1."""
    q = q.truncate(cutoff)
    if q_inverse is None:
        q_inverse = inverse_series(q)
    return (q * f.truncate(cutoff) * q_inverse.truncate(cutoff)).truncate(cutoff)


def pentagon_sides(cutoff: int, algebra: str = "torus-skein"):
    """``Q_x Q_y`` and ``Q_y Q_(x+y) Q_x`` for the (1,0) and (0,1) loops."""
    qx = skein_dilog(X_LOOP, cutoff, algebra)
    qy = skein_dilog(Y_LOOP, cutoff, algebra)
    qxy = skein_dilog(X_LOOP + Y_LOOP, cutoff, algebra)
    return qx * qy, qy * qxy * qx


def pentagon_check(cutoff: int, algebra: str = "torus-skein") -> VerificationReport:
    """Compare both pentagon sides in every bidegree (i, j) with i + j <= cutoff.

    Weighting ``Q_x(v)``, ``Q_y(w)``, ``Q_(x+y)(vw)`` multiplies the bidegree
    (i, j) part by ``v^i w^j``, so the per-bidegree comparison at ``v = w = 1``
    is the weighted identity.
    """
    if cutoff < 0:
        raise ValueError("max degree must be nonnegative")
    algebra_class(algebra)
    report = VerificationReport("pentagon", algebra, cutoff)
    with Stopwatch(report):
        lhs, rhs = pentagon_sides(cutoff, algebra)
        compare_by_bidegree(report, lhs, rhs, cutoff)
    return report


def identity_2_2_sides() -> tuple[SkeinElement, SkeinElement]:
    """``[P'_2x, P'_2y]`` and ``[P'_x, P'_(x+2y)] - 2 P'_(2x+2y)``."""
    x, y = X_LOOP, Y_LOOP
    lhs = commutator(normalized_generator(2 * x), normalized_generator(2 * y))
    rhs = (commutator(normalized_generator(x), normalized_generator(x + 2 * y))
           - normalized_generator(2 * x + 2 * y).scale(2))
    return lhs, rhs


def identity_2_2_check() -> VerificationReport:
    report = VerificationReport("identity-2-2", "torus-skein", 4)
    with Stopwatch(report):
        lhs, rhs = identity_2_2_sides()
        diff = lhs - rhs
        report.record((2, 2), diff.to_text() if diff else None)
    return report


def unimodular_pairs(max_degree: int, det: int) -> list[tuple[LatticeVector, LatticeVector]]:
    """First-quadrant pairs ``(x, y)`` with ``det(x, y) = det`` and ``delta(x + y) <= max_degree``."""
    pairs = []
    for dx in range(1, max_degree):
        for xi in range(dx + 1):
            x = LatticeVector(xi, dx - xi)
            for dy in range(1, max_degree - dx + 1):
                for yi in range(dy + 1):
                    y = LatticeVector(yi, dy - yi)
                    if det2(x, y) == det:
                        pairs.append((x, y))
    pairs.sort(key=lambda p: ((p[0] + p[1]).delta, p[0].delta, tuple(p[0]), tuple(p[1])))
    return pairs


def ad_property_check(cutoff: int, samples: int = 10, algebra: str = "torus-skein",
                      seed: int | None = None) -> VerificationReport:
    """``Ad_(Q_x) P_y = P_y + P_(x+y)`` for ``det(x,y) = 1`` and the ``Q_x^-1`` version for -1.

    ``samples`` pairs of each sign are taken, lowest degree first, or drawn at
    random from the admissible pool when ``seed`` is given.  One comparison
    is recorded per pair, labelled by the bidegree of ``x + y``.
    """
    cls = algebra_class(algebra)
    report = VerificationReport("ad-check", algebra, cutoff)
    with Stopwatch(report):
        if cutoff < 2:
            return report
        for sign in (1, -1):
            pool = unimodular_pairs(cutoff, sign)
            if seed is not None:
                pool = random.Random(seed).sample(pool, min(samples, len(pool)))
            dilogs: dict[LatticeVector, tuple[GradedElement, GradedElement]] = {}
            for x, y in pool[:samples]:
                if x not in dilogs:
                    dilogs[x] = (skein_dilog(x, cutoff, algebra), dilog_inverse(x, cutoff, algebra))
                q, q_inv = dilogs[x]
                if sign < 0:
                    q, q_inv = q_inv, q
                got = adjoint(q, cls.generator(y, cutoff), cutoff, q_inverse=q_inv)
                want = cls.generator(y, cutoff) + cls.generator(x + y, cutoff)
                diff = got - want
                report.record(x + y, diff.to_text() if diff else None)
    return report


def quantum_bracket_coefficient(k: int, d: int) -> Scalar:
    """``{k d}``; the coefficient of ``P_(k x0 + y)`` in ``[P_(k x0), P_y]`` when ``det(x0, y) = d``."""
    return qint(k * d)
