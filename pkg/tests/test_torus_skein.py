import random

import pytest

from skeindilog.lattice import LatticeVector as V, det2, primitive_decompose
from skeindilog.sampling import random_skein_element, random_vector, random_word
from skeindilog.scalars import ONE, Scalar, quantum_integer as qi
from skeindilog.torus_skein import (
    CACHE,
    P,
    PBWMonomial,
    SkeinElement,
    bracket,
    commutator,
    confluence_suite,
    jacobi_check,
    jacobi_suite,
    multiply,
    normal_order,
    normalized_generator,
    word_bidegree,
)


def word(*vs):
    return tuple(V(*v) for v in vs)


def element(terms):
    return SkeinElement({word(*w): c for w, c in terms.items()})


# -- bracket ------------------------------------------------------------------

def test_bracket_examples():
    assert bracket((1, 0), (0, 1)) == P(1, 1).scale(qi(1))
    assert bracket((2, 0), (0, 2)) == P(2, 2).scale(qi(4))
    assert bracket((1, 2), (2, 4)).is_zero()


def test_bracket_rejects_zero():
    with pytest.raises(ValueError):
        bracket((0, 0), (1, 0))


# -- normal order ------------------------------------------------------------

def test_normal_order_single_swap():
    got = normal_order([(0, 1), (1, 0)])
    assert got == element({((1, 0), (0, 1)): ONE, ((1, 1),): -qi(1)})
    assert got.to_text() == "P[1,0]*P[0,1] - (s - s^-1)*P[1,1]"


def test_normal_order_sorted_word_unchanged():
    assert normal_order([(1, 0), (0, 1)]) == element({((1, 0), (0, 1)): ONE})


def test_normal_order_two_stage_frozen():
    # worked by hand with rightmost-first rewriting
    expected = element({
        ((1, 0), (1, 1), (0, 1)): ONE,
        ((1, 0), (1, 2)): -qi(1),
        ((1, 1), (1, 1)): -qi(1),
        ((2, 1), (0, 1)): -qi(1),
        ((2, 2),): qi(1) * qi(2),
    })
    w = [(0, 1), (1, 1), (1, 0)]
    for strategy in ("insertion", "leftmost", "rightmost"):
        assert normal_order(w, strategy=strategy) == expected


def test_normal_order_rejects_bad_factor():
    with pytest.raises(ValueError):
        normal_order([(1, 0), (0, 0)])
    with pytest.raises(ValueError):
        normal_order([(1, -1)])


def test_normal_order_truncates():
    assert normal_order([(0, 1), (1, 0)], cutoff=1).is_zero()
    assert normal_order([(0, 1), (1, 0)], cutoff=2) == normal_order([(0, 1), (1, 0)])


def test_confluence_random_words():
    report = confluence_suite(samples=200, seed=4)
    assert report.passed and report.bidegrees_checked == 200


def test_normal_order_preserves_bidegree():
    rng = random.Random(9)
    for _ in range(100):
        w = random_word(rng, 5)
        b = word_bidegree(w)
        assert all(word_bidegree(k) == b for k in normal_order(w).terms)


def test_rewrite_cache_is_a_pure_table():
    w = [(0, 2), (1, 1), (2, 0), (0, 1)]
    before = normal_order(w)
    CACHE.clear()
    assert normal_order(w) == before
    assert CACHE.stats()["insert"] > 0


# -- multiply / commutator --------------------------------------------------

def test_multiply_examples():
    f = P(2, 1) * 3 + 1
    assert multiply(SkeinElement.one(), f) == f
    assert multiply(P(0, 1), P(1, 0)) == normal_order([(0, 1), (1, 0)])
    a, b = normalized_generator((2, 0)), normalized_generator((0, 2))
    assert a * b - b * a == P(2, 2).scale(qi(4) / qi(2) ** 2)


def test_commutator_examples():
    x = P(2, 1)
    assert commutator(x, x).is_zero()
    assert commutator(P(1, 0), P(0, 1)) == P(1, 1).scale(qi(1))
    assert commutator(P(1, 0), P(1, 2)) == P(2, 2).scale(qi(2))


def test_associativity_random_triples():
    rng = random.Random(12)
    for _ in range(25):
        f, g, h = (random_skein_element(rng, 3) for _ in range(3))
        assert (f * g) * h == f * (g * h)


def test_multiply_adds_bidegrees():
    rng = random.Random(13)
    for _ in range(40):
        f = normal_order(random_word(rng, 3))
        g = normal_order(random_word(rng, 3))
        (bf,), (bg,) = f.bidegrees() or {V(0, 0)}, g.bidegrees() or {V(0, 0)}
        assert (f * g).bidegrees() <= {bf + bg}


def test_bracket_of_multiples_unconditional():
    rng = random.Random(14)
    for _ in range(100):
        x, y = random_vector(rng, 4), random_vector(rng, 4)
        k, x0 = primitive_decompose(x)
        want = SkeinElement.zero() if x + y == (0, 0) else P(*(x + y)).scale(qi(k * det2(x0, y)))
        assert commutator(P(*x), P(*y)) == want


def test_truncated_product():
    f = P(1, 0, cutoff=3) + P(0, 1, cutoff=3)
    assert (f * f * f * f).is_zero()


# -- jacobi --------------------------------------------------------------------

def test_jacobi_examples():
    assert jacobi_check((1, 0), (0, 1), (1, 1))
    assert jacobi_check((2, 3), (2, 3), (1, 5))
    assert jacobi_suite(samples=100, seed=1).passed


def test_jacobi_three_generators_in_algebra():
    # the cyclic sum of double brackets vanishes in the algebra too
    rng = random.Random(15)
    for _ in range(30):
        x, y, z = (P(*random_vector(rng, 2)) for _ in range(3))
        total = (commutator(commutator(x, y), z) + commutator(commutator(y, z), x)
                 + commutator(commutator(z, x), y))
        assert total.is_zero()


# -- monomials and serialisation --------------------------------------------

def test_pbw_monomial_validation():
    m = PBWMonomial([(1, 0), (1, 1), (0, 1)])
    assert m.bidegree == (2, 2) and m.degree == 4
    assert str(m) == "P[1,0]*P[1,1]*P[0,1]"
    with pytest.raises(ValueError):
        PBWMonomial([(0, 1), (1, 0)])


def test_serialisation_order_and_json():
    f = normal_order([(0, 1), (1, 1), (1, 0)])
    assert f.to_text() == ("P[1,0]*P[1,1]*P[0,1] - (s - s^-1)*P[1,0]*P[1,2]"
                           " - (s - s^-1)*P[2,1]*P[0,1] - (s - s^-1)*P[1,1]*P[1,1]"
                           " + (s^3 - s - s^-1 + s^-3)*P[2,2]")
    assert P(1, 0).to_json() == [{"monomial": [[1, 0]], "coefficient": "1"}]
