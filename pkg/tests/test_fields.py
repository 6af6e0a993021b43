import random

from rigmat._fields import (
    IRREDUCIBLE_TABLE,
    irreducible_poly,
    is_irreducible,
    is_prime,
    min_extension_degree,
    random_prime,
)


def test_is_prime():
    assert is_prime(2) and is_prime(3) and is_prime((1 << 61) - 1)
    assert not is_prime(1) and not is_prime(561) and not is_prime(2**62)


def test_random_prime_bits():
    rng = random.Random(0)
    for _ in range(5):
        p = random_prime(rng, 62)
        assert p.bit_length() == 62 and is_prime(p)


def test_min_extension_degree():
    assert min_extension_degree(2) == 40
    assert min_extension_degree(3) == 26
    assert min_extension_degree(5) == 18
    assert min_extension_degree((1 << 20) + 7) == 2
    assert min_extension_degree((1 << 41) + 1) == 1


def test_table_entries_are_irreducible():
    for (p, k), coeffs in IRREDUCIBLE_TABLE.items():
        assert len(coeffs) == k
        assert is_irreducible(coeffs, p, k)


def test_untabled_search():
    k = min_extension_degree(17)
    coeffs = irreducible_poly(17, k)
    assert is_irreducible(coeffs, 17, k)


def test_reducible_detected():
    # x^2 over F_2 factors; x^2 + x + 1 does not
    assert not is_irreducible([0, 0], 2, 2)
    assert is_irreducible([1, 1], 2, 2)
