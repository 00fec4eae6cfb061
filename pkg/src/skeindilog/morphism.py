"""The quotient map ``Sk(T) -> quantum torus``, ``P_x -> X_x``."""

from __future__ import annotations

import random

from .dilog import skein_dilog
from .lattice import LatticeVector
from .quantum_torus import QTSeries, compare_by_bidegree, phi_series
from .report import Stopwatch, VerificationReport
from .sampling import random_skein_element
from .scalars import FractionAccumulator
from .torus_skein import SkeinElement

DILOG_DIRECTIONS = (LatticeVector(1, 0), LatticeVector(0, 1), LatticeVector(1, 1))


def word_image(word) -> tuple[int, LatticeVector]:
    """``X_w1 ... X_wm = s^e X_(w1+...+wm)``; returns ``(e, sum)``."""
    e = 0
    i = j = 0
    for v in word:
        e += i * v[1] - j * v[0]
        i += v[0]
        j += v[1]
    return e, LatticeVector(i, j)


def project(f: SkeinElement) -> QTSeries:
    acc = FractionAccumulator()
    for word, c in f.terms.items():
        e, total = word_image(word)
        acc.add(total, c.numerator.shift(e), c.denominator)
    return QTSeries(acc.result(), f.cutoff)


def homomorphism_check(max_degree: int = 5, samples: int = 50, seed: int = 0) -> VerificationReport:
    """``project(f g) == project(f) project(g)`` on random pairs of degree <= ``max_degree``.

    Every bidegree occurring on either side of each pair counts as one comparison.
    """
    rng = random.Random(seed)
    report = VerificationReport("homomorphism", "torus-skein", max_degree)
    with Stopwatch(report):
        for _ in range(samples):
            f = random_skein_element(rng, max_degree)
            g = random_skein_element(rng, max_degree)
            via_skein = project(f * g)
            via_torus = project(f) * project(g)
            parts = (via_skein - via_torus).parts_by_bidegree()
            for b in sorted(via_skein.bidegrees() | via_torus.bidegrees()):
                diff = parts.get(b)
                report.record(b, diff.to_text() if diff else None)
    return report


def dilog_compatibility_check(cutoff: int) -> VerificationReport:
    """``project(Q_l) == Phi(X_l)`` for l in (1,0), (0,1), (1,1), bidegree by bidegree."""
    report = VerificationReport("dilog-image", "torus-skein", cutoff)
    with Stopwatch(report):
        for l in DILOG_DIRECTIONS:
            image = project(skein_dilog(l, cutoff, "torus-skein"))
            compare_by_bidegree(report, image, phi_series(l, cutoff), cutoff)
    return report
