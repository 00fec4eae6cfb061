"""Sparse Z^2-graded elements with delta-degree truncation.

:class:`GradedElement` carries the linear structure shared by quantum-torus
series and skein elements: a ``key -> Scalar`` map plus an optional cutoff.
Subclasses supply the product and the key conventions.  The truncated
``exp``/``log``/inverse series live here because they only need the ring
operations.
"""

from __future__ import annotations

from typing import Iterator

from .lattice import LatticeVector
from .scalars import ONE, Scalar


def min_cutoff(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class GradedElement:
    """Base class; ``cutoff=None`` means an ordinary (untruncated) element."""

    __slots__ = ("terms", "cutoff")

    #: prefix used in serialized generators, e.g. ``"P"`` or ``"X"``
    symbol = "?"

    def __init__(self, terms: dict | None = None, cutoff: int | None = None):
        if cutoff is not None and cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        self.terms = terms if terms is not None else {}
        self.cutoff = cutoff

    # -- hooks --------------------------------------------------------------

    @staticmethod
    def key_bidegree(key) -> LatticeVector:
        raise NotImplementedError

    @classmethod
    def unit_key(cls):
        raise NotImplementedError

    @staticmethod
    def key_sort(key):
        raise NotImplementedError

    @classmethod
    def format_key(cls, key) -> str:
        raise NotImplementedError

    @classmethod
    def key_json(cls, key) -> dict:
        raise NotImplementedError

    def _mul_terms(self, other: "GradedElement", cutoff: int | None) -> dict:
        raise NotImplementedError

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, cutoff: int | None = None):
        return cls({}, cutoff)

    @classmethod
    def one(cls, cutoff: int | None = None):
        return cls({cls.unit_key(): ONE}, cutoff)

    @classmethod
    def constant(cls, c, cutoff: int | None = None):
        c = Scalar.coerce(c)
        return cls({cls.unit_key(): c} if c else {}, cutoff)

    def _new(self, terms: dict, cutoff: int | None):
        return type(self)(terms, cutoff)

    # -- inspection ---------------------------------------------------------

    def degree_of(self, key) -> int:
        b = self.key_bidegree(key)
        return b[0] + b[1]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, key) -> Scalar:
        from .scalars import ZERO

        return self.terms.get(key, ZERO)

    def constant_term(self) -> Scalar:
        return self.coefficient(self.unit_key())

    def items(self) -> Iterator:
        return iter(sorted(self.terms.items(), key=lambda kv: self.key_sort(kv[0])))

    def bidegrees(self) -> set[LatticeVector]:
        return {self.key_bidegree(k) for k in self.terms}

    def homogeneous_part(self, bidegree) -> "GradedElement":
        b = tuple(bidegree)
        return self._new({k: c for k, c in self.terms.items() if self.key_bidegree(k) == b},
                         self.cutoff)

    def parts_by_bidegree(self) -> dict[LatticeVector, "GradedElement"]:
        groups: dict[LatticeVector, dict] = {}
        for k, c in self.terms.items():
            groups.setdefault(self.key_bidegree(k), {})[k] = c
        return {b: self._new(t, self.cutoff) for b, t in groups.items()}

    def truncate(self, cutoff: int | None) -> "GradedElement":
        cutoff = min_cutoff(self.cutoff, cutoff)
        if cutoff is None:
            return self
        return self._new({k: c for k, c in self.terms.items() if self.degree_of(k) <= cutoff},
                         cutoff)

    # -- linear structure ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GradedElement):
            if type(other) is not type(self):
                raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
            return other
        try:
            c = Scalar.coerce(other)
        except TypeError:
            return None
        return self.constant(c, self.cutoff)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cutoff = min_cutoff(self.cutoff, other.cutoff)
        a = self.truncate(cutoff).terms
        b = other.truncate(cutoff).terms
        out = dict(a)
        for k, c in b.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                total = prev + c
                if total:
                    out[k] = total
                else:
                    del out[k]
        return self._new(out, cutoff)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()}, self.cutoff)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "GradedElement":
        c = Scalar.coerce(c)
        if not c:
            return self.zero(self.cutoff)
        return self._new({k: v * c for k, v in self.terms.items()}, self.cutoff)

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            if type(other) is not type(self):
                raise TypeError(f"cannot multiply {type(self).__name__} by {type(other).__name__}")
            cutoff = min_cutoff(self.cutoff, other.cutoff)
            return self._new(self._mul_terms(other, cutoff), cutoff)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(Scalar.coerce(other).inv())

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of algebra elements are not supported")
        result = self.one(self.cutoff)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, GradedElement) else other
        if other is None or type(other) is not type(self):
            return NotImplemented
        cutoff = min_cutoff(self.cutoff, other.cutoff)
        return self.truncate(cutoff).terms == other.truncate(cutoff).terms

    __hash__ = None

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, c in self.items():
            negative = c.numerator.coeffs[-1] < 0
            mag = -c if negative else c
            mono = "" if key == self.unit_key() else self.format_key(key)
            if not mono:
                body = str(mag)
            elif mag == ONE:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        cut = "" if self.cutoff is None else f", cutoff={self.cutoff}"
        return f"{type(self).__name__}({self.to_text()!r}{cut})"

    def to_json(self) -> list[dict]:
        return [{**self.key_json(k), "coefficient": str(c)} for k, c in self.items()]


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

def _require_nilpotent(a: GradedElement, what: str) -> None:
    if a.cutoff is None:
        raise ValueError(f"{what} needs a finite cutoff")
    if a.constant_term():
        raise ValueError(f"{what} needs an argument without constant term")
    if any(a.degree_of(k) < 1 for k in a.terms):
        raise ValueError(f"{what} diverges: argument has terms of delta-degree < 1")


def exp_series(a: GradedElement) -> GradedElement:
    """``sum a^n / n!`` truncated at ``a.cutoff``; ``a`` must have degrees >= 1."""
    _require_nilpotent(a, "exp")
    result = a.one(a.cutoff)
    power = a.one(a.cutoff)
    n = 0
    while True:
        n += 1
        power = (power * a).scale(Scalar.coerce(n).inv())
        if not power:
            return result
        result = result + power


def log_series(b: GradedElement) -> GradedElement:
    """``log(1 + r)`` for ``b = 1 + r`` truncated at ``b.cutoff``."""
    if b.constant_term() != ONE:
        raise ValueError("log needs constant term 1")
    r = b - b.one(b.cutoff)
    _require_nilpotent(r, "log")
    result = b.zero(b.cutoff)
    power = b.one(b.cutoff)
    n = 0
    while True:
        n += 1
        power = power * r
        if not power:
            return result
        term = power.scale(Scalar.coerce(n).inv())
        result = result + term if n % 2 else result - term


def inverse_series(b: GradedElement) -> GradedElement:
    """Two-sided inverse of ``b = 1 + r`` as the geometric series in ``-r``."""
    if b.constant_term() != ONE:
        raise ValueError("series inverse needs constant term 1")
    r = b.one(b.cutoff) - b
    _require_nilpotent(r, "inverse")
    result = b.one(b.cutoff)
    power = b.one(b.cutoff)
    while True:
        power = power * r
        if not power:
            return result
        result = result + power
