"""Torus skein algebra ``Sk(T)`` (the q = t elliptic Hall algebra).

Generators ``P[i,j]`` for nonzero first-quadrant labels, subject to
``[P_x, P_y] = {det(x,y)} P_(x+y)``.  Elements are expanded in the PBW basis
of words sorted by :func:`~skeindilog.lattice.pbw_less`; products are brought
to normal form by rewriting ``P_u P_v -> P_v P_u + {det(u,v)} P_(u+v)``.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .graded import GradedElement
from .lattice import (
    LatticeVector,
    det2,
    in_first_quadrant,
    pbw_key,
    pbw_less,
    vec,
)
from .scalars import ONE, ONE_POLY, FractionAccumulator, LaurentPoly, Scalar, qint

Word = tuple  # tuple[LatticeVector, ...]


def _check_generator(x) -> LatticeVector:
    x = vec(x)
    if not in_first_quadrant(x):
        raise ValueError(f"P{list(x)} is not a generator: labels must be nonzero and first-quadrant")
    return x


def word_bidegree(word: Sequence) -> LatticeVector:
    return LatticeVector(sum(v[0] for v in word), sum(v[1] for v in word))


def is_pbw_sorted(word: Sequence) -> bool:
    return all(not pbw_less(b, a) for a, b in zip(word, word[1:]))


class PBWMonomial(tuple):
    """A PBW-sorted word of generator labels (the empty word is the unit)."""

    __slots__ = ()

    def __new__(cls, factors: Iterable = ()):
        word = tuple(_check_generator(v) for v in factors)
        if not is_pbw_sorted(word):
            raise ValueError(f"{[list(v) for v in word]} is not PBW-sorted")
        return super().__new__(cls, word)

    @property
    def bidegree(self) -> LatticeVector:
        return word_bidegree(self)

    @property
    def degree(self) -> int:
        return sum(v[0] + v[1] for v in self)

    def __str__(self):
        return format_word(self)


def format_word(word) -> str:
    return "*".join(f"P[{v[0]},{v[1]}]" for v in word) or "1"


class SkeinElement(GradedElement):
    """Sparse ``Scalar`` combination of PBW words, optionally truncated."""

    __slots__ = ()
    symbol = "P"

    @staticmethod
    def key_bidegree(key):
        return word_bidegree(key)

    @classmethod
    def unit_key(cls):
        return ()

    @staticmethod
    def key_sort(key):
        return (sum(v[0] + v[1] for v in key), tuple(pbw_key(v) for v in key))

    @classmethod
    def format_key(cls, key) -> str:
        return format_word(key)

    @classmethod
    def key_json(cls, key) -> dict:
        return {"monomial": [[v[0], v[1]] for v in key]}

    def degree_of(self, key) -> int:
        return sum(v[0] + v[1] for v in key)

    @classmethod
    def generator(cls, x, cutoff: int | None = None, coeff=ONE) -> "SkeinElement":
        x = _check_generator(x)
        coeff = Scalar.coerce(coeff)
        if not coeff or (cutoff is not None and x.delta > cutoff):
            return cls({}, cutoff)
        return cls({(x,): coeff}, cutoff)

    @classmethod
    def from_word(cls, word: Iterable, cutoff: int | None = None, coeff=ONE) -> "SkeinElement":
        """The product ``coeff * P_w1 ... P_wm`` in normal form."""
        return normal_order(list(word), cutoff).scale(coeff)

    def _mul_terms(self, other: "SkeinElement", cutoff: int | None) -> dict:
        acc = FractionAccumulator()
        for a, ca in self.terms.items():
            da = sum(v[0] + v[1] for v in a)
            for b, cb in other.terms.items():
                if cutoff is not None and da + sum(v[0] + v[1] for v in b) > cutoff:
                    continue
                num = ca.numerator * cb.numerator
                den = ca.denominator * cb.denominator
                for w, lp in word_product(a, b).items():
                    acc.add(w, num * lp, den)
        return acc.result()


def P(i: int, j: int, cutoff: int | None = None) -> SkeinElement:
    return SkeinElement.generator((i, j), cutoff)


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------

class _RewriteCache:
    """Memo tables for the rewriting kernels.

    Entries are pure functions of their keys; concurrent workers may share an
    instance, the lock only guards against duplicate work on inserts.
    """

    def __init__(self):
        self.insert: dict[tuple, dict] = {}
        self.product: dict[tuple, dict] = {}
        self.lock = threading.Lock()

    def clear(self) -> None:
        with self.lock:
            self.insert.clear()
            self.product.clear()

    def stats(self) -> dict[str, int]:
        return {"insert": len(self.insert), "product": len(self.product)}


CACHE = _RewriteCache()

_QPOLY: dict[int, LaurentPoly] = {}


def _qpoly(d: int) -> LaurentPoly:
    p = _QPOLY.get(d)
    if p is None:
        p = _QPOLY[d] = qint(d).numerator
    return p


def _accumulate(out: dict, word, coeff: LaurentPoly) -> None:
    prev = out.get(word)
    out[word] = coeff if prev is None else prev + coeff


def _drop_zeros(out: dict) -> dict:
    return {w: c for w, c in out.items() if c.coeffs}


def insert_generator(word: Word, g) -> dict:
    """Normal form of ``word * P_g`` for a sorted ``word``: ``{sorted word: Z[s^+-1] coeff}``."""
    key = (word, g)
    hit = CACHE.insert.get(key)
    if hit is not None:
        return hit
    if not word or not pbw_less(g, word[-1]):
        result = {word + (g,): ONE_POLY}
    else:
        last = word[-1]
        prefix = word[:-1]
        result: dict = {}
        # prefix * P_last * P_g = prefix * P_g * P_last + {det(last, g)} prefix * P_(last+g)
        for t, c in insert_generator(prefix, g).items():
            for t2, c2 in insert_generator(t, last).items():
                _accumulate(result, t2, c * c2)
        d = last[0] * g[1] - last[1] * g[0]
        if d:
            qd = _qpoly(d)
            merged = LatticeVector(last[0] + g[0], last[1] + g[1])
            for t, c in insert_generator(prefix, merged).items():
                _accumulate(result, t, qd * c)
        result = _drop_zeros(result)
    CACHE.insert[key] = result
    return result


def word_product(a: Word, b: Word) -> dict:
    """Normal form of the concatenation of two sorted words."""
    if not b:
        return {a: ONE_POLY}
    if not a:
        return {b: ONE_POLY}
    key = (a, b)
    hit = CACHE.product.get(key)
    if hit is not None:
        return hit
    current = {a: ONE_POLY}
    for g in b:
        nxt: dict = {}
        for t, c in current.items():
            for t2, c2 in insert_generator(t, g).items():
                _accumulate(nxt, t2, c * c2)
        current = _drop_zeros(nxt)
    CACHE.product[key] = current
    return current


def _normal_form_insertion(word: Sequence) -> dict:
    current = {(): ONE_POLY}
    for g in word:
        nxt: dict = {}
        for t, c in current.items():
            for t2, c2 in insert_generator(t, g).items():
                _accumulate(nxt, t2, c * c2)
        current = _drop_zeros(nxt)
    return current


def _normal_form_rewriting(word: Sequence, strategy: str) -> dict:
    # Plain rewriting in the free algebra: repeatedly fix one descent.
    pending = {tuple(word): ONE_POLY}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        if not c.coeffs:
            continue
        positions = [i for i in range(len(w) - 1) if pbw_less(w[i + 1], w[i])]
        if not positions:
            _accumulate(done, w, c)
            continue
        i = positions[0] if strategy == "leftmost" else positions[-1]
        u, v = w[i], w[i + 1]
        swapped = w[:i] + (v, u) + w[i + 2:]
        _accumulate(pending, swapped, c)
        d = u[0] * v[1] - u[1] * v[0]
        if d:
            merged = w[:i] + (LatticeVector(u[0] + v[0], u[1] + v[1]),) + w[i + 2:]
            _accumulate(pending, merged, _qpoly(d) * c)
    return _drop_zeros(done)


def normal_order(word: Sequence, cutoff: int | None = None, strategy: str = "insertion") -> SkeinElement:
    """PBW normal form of ``P_w1 ... P_wm``.

    ``strategy`` is ``"insertion"`` (memoised, the default), ``"leftmost"`` or
    ``"rightmost"`` (naive rewriting of the leftmost / rightmost descent).
    All three give the same answer.
    """
    word = [_check_generator(v) for v in word]
    if cutoff is not None and sum(v.delta for v in word) > cutoff:
        return SkeinElement({}, cutoff)
    if strategy == "insertion":
        raw = _normal_form_insertion(word)
    elif strategy in ("leftmost", "rightmost"):
        raw = _normal_form_rewriting(word, strategy)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return SkeinElement({w: Scalar(c) for w, c in raw.items()}, cutoff)


def bracket(x, y) -> SkeinElement:
    """``[P_x, P_y] = {det(x,y)} P_(x+y)``."""
    x, y = vec(x), vec(y)
    if x == (0, 0) or y == (0, 0):
        raise ValueError("bracket arguments must be nonzero")
    d = det2(x, y)
    if d == 0 or x + y == (0, 0):
        return SkeinElement.zero()
    return SkeinElement.generator(x + y, coeff=qint(d))


def multiply(f: SkeinElement, g: SkeinElement) -> SkeinElement:
    return f * g


def commutator(f: SkeinElement, g: SkeinElement) -> SkeinElement:
    return f * g - g * f


def jacobi_check(x, y, z) -> bool:
    """Jacobi identity of the bracket on ``P_x, P_y, P_z`` as a Scalar identity.

    With ``a = det(x,y)``, ``b = det(y,z)``, ``c = det(z,x)`` the cyclic sum of
    ``[[P_x,P_y],P_z]`` is ``({a}{b-c} + {b}{c-a} + {c}{a-b}) P_(x+y+z)``.
    """
    a, b, c = det2(x, y), det2(y, z), det2(z, x)
    total = qint(a) * qint(b - c) + qint(b) * qint(c - a) + qint(c) * qint(a - b)
    return total.is_zero()


def normalized_generator(x, cutoff: int | None = None) -> SkeinElement:
    """``P'_(k x0) = P_(k x0) / {k}`` for ``x = k x0`` with ``x0`` primitive."""
    from .lattice import primitive_decompose

    k, _ = primitive_decompose(x)
    return SkeinElement.generator(x, cutoff, coeff=qint(k).inv())


def jacobi_suite(samples: int = 100, seed: int = 0, bound: int = 5):
    """:func:`jacobi_check` on random triples from ``[-bound, bound]^2``.

    Failures are labelled by ``x + y + z``, the bidegree of the cyclic sum.
    """
    import random

    from .report import Stopwatch, VerificationReport
    from .sampling import random_lattice_vector

    rng = random.Random(seed)
    report = VerificationReport("jacobi", "torus-skein", 0)
    with Stopwatch(report):
        for _ in range(samples):
            x, y, z = (random_lattice_vector(rng, bound) for _ in range(3))
            a, b, c = det2(x, y), det2(y, z), det2(z, x)
            total = qint(a) * qint(b - c) + qint(b) * qint(c - a) + qint(c) * qint(a - b)
            report.record(x + y + z, None if total.is_zero() else str(total))
    return report


def confluence_suite(samples: int = 200, seed: int = 0, max_length: int = 5):
    """Leftmost-first vs rightmost-first rewriting (and the memoised insertion) on random words."""
    import random

    from .report import Stopwatch, VerificationReport
    from .sampling import random_word

    rng = random.Random(seed)
    report = VerificationReport("confluence", "torus-skein", 0)
    with Stopwatch(report):
        for _ in range(samples):
            word = random_word(rng, max_length)
            left = normal_order(word, strategy="leftmost")
            right = normal_order(word, strategy="rightmost")
            fast = normal_order(word)
            bad = left - right if left != right else (left - fast if left != fast else None)
            report.record(word_bidegree(word), bad.to_text() if bad is not None else None)
    return report
