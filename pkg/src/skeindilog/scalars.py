"""Exact coefficient field: rational functions in ``s = q^(1/2)`` over Q.

Polynomials are stored densely as integer tuples with an exponent offset,
which is the trimmed form of a sparse exponent -> coefficient map.  A
:class:`Scalar` is a canonical fraction of two :class:`LaurentPoly` values,
so equality of scalars is equality of their stored components.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Mapping


# ---------------------------------------------------------------------------
# Raw integer polynomial kernels.  Coefficient lists run low -> high degree.
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(f, g) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] += b
    return out


def _pmul(f, g) -> list[int]:
    if not f or not g:
        return []
    if len(f) < len(g):
        f, g = g, f
    if len(g) == 1:
        b = g[0]
        return [a * b for a in f]
    if len(g) > 24:
        return _kronecker_mul(f, g)
    out = [0] * (len(f) + len(g) - 1)
    for j, b in enumerate(g):
        if b:
            for i, a in enumerate(f, j):
                out[i] += a * b
    return out


def _kronecker_mul(f, g) -> list[int]:
    # Pack both polynomials into integers at 2**bits, multiply once, unpack.
    bound = min(len(f), len(g)) * max(map(abs, f)) * max(map(abs, g))
    bits = bound.bit_length() + 2
    prod = _peval(f, 1 << bits) * _peval(g, 1 << bits)
    return _unpack(prod, bits, len(f) + len(g) - 1)


def _unpack(value: int, bits: int, length: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(length):
        c = value & mask
        if c >= half:
            c -= 1 << bits
        out.append(c)
        value = (value - c) >> bits
    return out


def _peval(f, x: int) -> int:
    acc = 0
    for a in reversed(f):
        acc = acc * x + a
    return acc


def _content(f) -> int:
    c = 0
    for a in f:
        c = gcd(c, a)
        if c == 1:
            break
    return c


def _divexact(f, g) -> list[int] | None:
    """Quotient f / g in Z[s], or None when g does not divide f."""
    n, m = len(f), len(g)
    if m > n:
        return None
    r = list(f)
    lead = g[-1]
    q = [0] * (n - m + 1)
    for k in range(n - m, -1, -1):
        top = r[k + m - 1]
        if top:
            c, rem = divmod(top, lead)
            if rem:
                return None
            q[k] = c
            for i, b in enumerate(g):
                r[k + i] -= c * b
    if any(r[: m - 1]):
        return None
    return q


def _interpolate(h: int, x: int) -> list[int]:
    out = []
    half = x // 2
    while h:
        c = h % x
        if c > half:
            c -= x
        out.append(c)
        h = (h - c) // x
    return out


def _primitive(f) -> list[int]:
    c = _content(f)
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def _heuristic_gcd(f, g) -> list[int] | None:
    # Char-Geddes-Gonnet: gcd of integer images, lifted back and verified.
    fn = max(map(abs, f))
    gn = max(map(abs, g))
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        ff = _peval(f, x)
        gg = _peval(g, x)
        if ff and gg:
            h = _primitive(_trim(_interpolate(gcd(ff, gg), x)))
            if _divexact(f, h) is not None and _divexact(g, h) is not None:
                return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _prs_gcd(f, g) -> list[int]:
    # Primitive polynomial remainder sequence; slow but always terminates.
    f, g = _primitive(f), _primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while len(g) > 1:
        r = list(f)
        lead = g[-1]
        while len(r) >= len(g):
            c = r[-1]
            shift = len(r) - len(g)
            r = [a * lead for a in r]
            for i, b in enumerate(g):
                r[shift + i] -= c * b
            _trim(r)
            if not r:
                break
        if not r:
            return g
        f, g = g, _primitive(r)
    return [1]


def _pgcd(f, g) -> list[int]:
    """Greatest common divisor in Z[s] with positive leading coefficient."""
    cf, cg = _content(f), _content(g)
    c = gcd(cf, cg)
    if len(f) == 1 or len(g) == 1:
        return [c]
    fp = [a // cf for a in f]
    gp = [a // cg for a in g]
    h = _heuristic_gcd(fp, gp) or _prs_gcd(fp, gp)
    if h[-1] < 0:
        h = [-a for a in h]
    return [c * a for a in h] if c != 1 else h


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Integer Laurent polynomial ``sum c_e s^e`` in trimmed dense form.

    ``coeffs[0]`` is the coefficient of ``s**low``; the first and last stored
    coefficients are nonzero, and zero is the empty tuple.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] | Mapping[int, int] = (), low: int = 0):
        if isinstance(coeffs, Mapping):
            items = {e: int(c) for e, c in coeffs.items() if c}
            if not items:
                coeffs, low = (), 0
            else:
                low = min(items)
                dense = [0] * (max(items) - low + 1)
                for e, c in items.items():
                    dense[e - low] = c
                coeffs = dense
        c = _trim(list(coeffs))
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        self.coeffs = tuple(c[k:])
        self.low = low + k if self.coeffs else 0
        self._hash = None

    @classmethod
    def _raw(cls, low: int, coeffs) -> "LaurentPoly":
        # Caller guarantees coeffs is a trimmed tuple.
        p = object.__new__(cls)
        p.low = low if coeffs else 0
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw(exponent, (coeff,)) if coeff else ZERO_POLY

    @property
    def coefficients(self) -> dict[int, int]:
        """Sparse view: exponent -> nonzero coefficient."""
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.coefficients!r})"

    def __str__(self):
        return format_laurent(self)

    @staticmethod
    def constant(c: int) -> "LaurentPoly":
        return LaurentPoly._raw(0, (c,)) if c else ZERO_POLY

    def __neg__(self):
        return LaurentPoly._raw(self.low, tuple(-a for a in self.coeffs))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        low = min(self.low, other.low)
        f = [0] * (self.low - low) + list(self.coeffs)
        g = [0] * (other.low - low) + list(other.coeffs)
        return LaurentPoly(_padd(f, g), low)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO_POLY
            return LaurentPoly._raw(self.low, tuple(a * other for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return ZERO_POLY
        return LaurentPoly._raw(self.low + other.low, tuple(_pmul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``s**k``."""
        return LaurentPoly._raw(self.low + k, self.coeffs) if self.coeffs else self

    def substitute_power(self, k: int) -> "LaurentPoly":
        """The polynomial in ``s**k`` (k may be negative)."""
        return LaurentPoly({k * e: c for e, c in self.coefficients.items()})


ZERO_POLY = LaurentPoly._raw(0, ())
ONE_POLY = LaurentPoly._raw(0, (1,))


def format_laurent(p: LaurentPoly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(p.high, p.low - 1, -1):
        c = p.coeffs[e - p.low]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "s" if e == 1 else f"s^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(s) as a reduced fraction ``numerator / denominator``.

    Canonical form: the denominator is an ordinary polynomial with nonzero
    constant term and positive leading coefficient, and shares no factor
    (integer content included) with the numerator.  Construct through
    :meth:`fraction` or the arithmetic operators; ``Scalar(n, d)`` trusts its
    arguments to already be canonical.
    """

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly = ONE_POLY):
        self.numerator = numerator
        self.denominator = denominator
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def fraction(cls, num: LaurentPoly, den: LaurentPoly = ONE_POLY) -> "Scalar":
        if not den.coeffs:
            raise ZeroDivisionError("zero denominator")
        if not num.coeffs:
            return ZERO
        shift = num.low - den.low
        n = num.coeffs
        d = den.coeffs
        if len(d) > 1 or d[0] != 1:
            g = _pgcd(n, d)
            if len(g) > 1 or g[0] != 1:
                n = tuple(_divexact(n, g))
                d = tuple(_divexact(d, g))
            if d[-1] < 0:
                n = tuple(-a for a in n)
                d = tuple(-a for a in d)
        return cls(LaurentPoly._raw(shift, n), LaurentPoly._raw(0, d))

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return cls(LaurentPoly.constant(value)) if value else ZERO
        if isinstance(value, Fraction):
            return cls.fraction(LaurentPoly.constant(value.numerator),
                                LaurentPoly.constant(value.denominator))
        if isinstance(value, LaurentPoly):
            return cls(value)
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @classmethod
    def s_power(cls, k: int) -> "Scalar":
        return cls(LaurentPoly.monomial(k))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.numerator.coeffs

    def __bool__(self) -> bool:
        return bool(self.numerator.coeffs)

    def is_laurent(self) -> bool:
        d = self.denominator.coeffs
        return len(d) == 1 and d[0] == 1

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return Scalar(-self.numerator, self.denominator)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.numerator.coeffs:
            return self
        if not self.numerator.coeffs:
            return other
        if self.denominator == other.denominator:
            if self.is_laurent():
                return Scalar(self.numerator + other.numerator)
            return Scalar.fraction(self.numerator + other.numerator, self.denominator)
        return Scalar.fraction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.numerator.coeffs or not other.numerator.coeffs:
            return ZERO
        if self.is_laurent() and other.is_laurent():
            return Scalar(self.numerator * other.numerator)
        # cross-cancel so the product is canonical without a full reduction
        a = Scalar.fraction(self.numerator, other.denominator)
        b = Scalar.fraction(other.numerator, self.denominator)
        num = a.numerator * b.numerator
        den = a.denominator * b.denominator
        if den.coeffs[-1] < 0:
            num, den = -num, -den
        return Scalar(num, den)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self.numerator.coeffs:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar.fraction(self.denominator, self.numerator)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inv() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def bar(self) -> "Scalar":
        """Image under the involution ``s -> 1/s``."""
        return Scalar.fraction(self.numerator.substitute_power(-1),
                               self.denominator.substitute_power(-1))

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar(ZERO_POLY)
ONE = Scalar(ONE_POLY)


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def inv(a: Scalar) -> Scalar:
    return a.inv()


def quantum_integer(k: int) -> Scalar:
    """``{k} = s^k - s^-k``."""
    if k == 0:
        return ZERO
    n = abs(k)
    coeffs = [0] * (2 * n + 1)
    coeffs[0], coeffs[-1] = -1, 1
    p = LaurentPoly._raw(-n, tuple(coeffs))
    return Scalar(p if k > 0 else -p)


_QINT_CACHE: dict[int, Scalar] = {}


def qint(k: int) -> Scalar:
    """Cached :func:`quantum_integer`."""
    try:
        return _QINT_CACHE[k]
    except KeyError:
        return _QINT_CACHE.setdefault(k, quantum_integer(k))


def sum_fractions(pairs: Iterable[tuple[LaurentPoly, LaurentPoly]]) -> Scalar:
    """Sum of ``num / den`` pairs, reducing once per distinct denominator."""
    buckets: dict[LaurentPoly, LaurentPoly] = {}
    for num, den in pairs:
        prev = buckets.get(den)
        buckets[den] = num if prev is None else prev + num
    total = ZERO
    for den, num in buckets.items():
        if num.coeffs:
            total = total + Scalar.fraction(num, den)
    return total


def format_scalar(x: Scalar) -> str:
    """Canonical text; multi-term polynomials are parenthesised."""
    num = _wrap(x.numerator)
    if x.is_laurent():
        return num
    return f"{num}/{_wrap(x.denominator)}"


def _wrap(p: LaurentPoly) -> str:
    text = format_laurent(p)
    return f"({text})" if sum(1 for c in p.coeffs if c) > 1 else text


def parse_scalar(text: str) -> Scalar:
    from .parsing import parse_expression

    return Scalar.coerce(parse_expression(text))


class FractionAccumulator:
    """Collects ``key -> sum(num / den)`` lazily, reducing once per bucket.

    Products of canonical scalars are added as raw numerator/denominator
    pairs; the gcd work is deferred to :meth:`result`.
    """

    __slots__ = ("buckets",)

    def __init__(self):
        self.buckets: dict[object, dict[LaurentPoly, LaurentPoly]] = {}

    def add(self, key, num: LaurentPoly, den: LaurentPoly = ONE_POLY) -> None:
        if not num.coeffs:
            return
        slot = self.buckets.get(key)
        if slot is None:
            self.buckets[key] = {den: num}
            return
        prev = slot.get(den)
        slot[den] = num if prev is None else prev + num

    def add_scalar(self, key, value: Scalar) -> None:
        self.add(key, value.numerator, value.denominator)

    def result(self) -> dict:
        out = {}
        for key, slot in self.buckets.items():
            total = sum_fractions((num, den) for den, num in slot.items())
            if total.numerator.coeffs:
                out[key] = total
        return out
