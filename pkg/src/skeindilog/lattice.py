"""Z^2 labels: determinant pairing, grading, positive cone, PBW order."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple


class LatticeVector(NamedTuple):
    i: int
    j: int

    def __add__(self, other):
        return LatticeVector(self.i + other[0], self.j + other[1])

    def __sub__(self, other):
        return LatticeVector(self.i - other[0], self.j - other[1])

    def __neg__(self):
        return LatticeVector(-self.i, -self.j)

    def __mul__(self, k: int):
        return LatticeVector(k * self.i, k * self.j)

    __rmul__ = __mul__

    def __str__(self):
        return f"[{self.i},{self.j}]"

    @property
    def delta(self) -> int:
        return self.i + self.j


def vec(v) -> LatticeVector:
    if isinstance(v, LatticeVector):
        return v
    i, j = v
    return LatticeVector(int(i), int(j))


def det2(x, y) -> int:
    return x[0] * y[1] - x[1] * y[0]


def delta_degree(x) -> int:
    return x[0] + x[1]


def in_positive_cone(x) -> bool:
    """Membership in {(a, b) : a > 0, or a = 0 and b >= 0}."""
    a, b = x
    return a > 0 or (a == 0 and b >= 0)


def in_first_quadrant(x) -> bool:
    """Closed first quadrant minus the origin: the admissible generator labels."""
    return x[0] >= 0 and x[1] >= 0 and (x[0] or x[1])


def primitive_decompose(x) -> tuple[int, LatticeVector]:
    """Return ``(k, x0)`` with ``x = k * x0`` and ``x0`` primitive."""
    a, b = x
    k = gcd(a, b)
    if k == 0:
        raise ValueError("the zero vector has no primitive decomposition")
    return k, LatticeVector(a // k, b // k)


def _check_admissible(x) -> None:
    if not in_first_quadrant(x):
        raise ValueError(f"{tuple(x)} is not a nonzero first-quadrant vector")


def pbw_key(x) -> tuple[Fraction, int]:
    """Sort key realising :func:`pbw_compare` (angle from the i-axis, then degree)."""
    _check_admissible(x)
    d = x[0] + x[1]
    return Fraction(x[1], d), d


def pbw_less(u, v) -> bool:
    """Strict PBW order; inputs are assumed admissible."""
    d = u[0] * v[1] - u[1] * v[0]
    if d:
        return d > 0
    return u[0] + u[1] < v[0] + v[1]


def pbw_compare(u, v) -> int:
    """-1, 0 or 1 as ``u`` is below, equal to or above ``v`` in the PBW order."""
    _check_admissible(u)
    _check_admissible(v)
    if u == v:
        return 0
    return -1 if pbw_less(u, v) else 1
