"""Seeded random inputs for the property checks."""

from __future__ import annotations

import random

from .lattice import LatticeVector
from .scalars import LaurentPoly, Scalar, qint
from .torus_skein import SkeinElement, normal_order


def random_vector(rng: random.Random, max_delta: int = 3) -> LatticeVector:
    """Nonzero first-quadrant vector with delta-degree at most ``max_delta``."""
    d = rng.randint(1, max_delta)
    i = rng.randint(0, d)
    return LatticeVector(i, d - i)


def random_lattice_vector(rng: random.Random, bound: int = 5) -> LatticeVector:
    """Arbitrary vector of Z^2 with entries in ``[-bound, bound]``."""
    return LatticeVector(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_word(rng: random.Random, max_length: int = 5, max_delta: int = 3) -> list[LatticeVector]:
    return [random_vector(rng, max_delta) for _ in range(rng.randint(0, max_length))]


def random_laurent(rng: random.Random, max_terms: int = 3, span: int = 3, bound: int = 4) -> LaurentPoly:
    return LaurentPoly({rng.randint(-span, span): rng.randint(-bound, bound)
                        for _ in range(rng.randint(1, max_terms))})


def random_scalar(rng: random.Random, allow_zero: bool = True) -> Scalar:
    """Small rational function, sometimes with a quantum-integer denominator."""
    while True:
        x = Scalar(random_laurent(rng))
        if rng.random() < 0.5:
            x = x / qint(rng.randint(1, 4))
        if rng.random() < 0.3:
            x = x / rng.randint(1, 5)
        if x or allow_zero:
            return x


def random_skein_element(rng: random.Random, max_degree: int = 5, max_terms: int = 3) -> SkeinElement:
    """Sum of a few scalar multiples of (normal-ordered) random words of degree <= max_degree."""
    out = SkeinElement.zero()
    for _ in range(rng.randint(1, max_terms)):
        word = []
        budget = rng.randint(0, max_degree)
        while budget > 0:
            v = random_vector(rng, min(budget, 3))
            word.append(v)
            budget -= v.delta
        out = out + normal_order(word).scale(random_scalar(rng))
    return out
