import pytest
from hypothesis import given, strategies as st

import oracles
from unitcodes.ring import classify, euler_phi, factorize, is_prime


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(9) == 6
    assert euler_phi(360) == oracles.phi(360) == 96


@given(st.integers(min_value=1, max_value=5000))
def test_factorization_multiplies_back(n):
    f = factorize(n)
    prod = 1
    for p, a in f.factors:
        assert is_prime(p)
        prod *= p**a
    assert prod == n
    assert list(f.primes) == sorted(f.primes)


@given(st.integers(min_value=1, max_value=2000))
def test_phi_matches_gcd_count(n):
    assert euler_phi(factorize(n)) == oracles.phi(n)


def test_classify_examples():
    c = classify(2)
    assert c.units == {1} and c.nonunits == {0}
    c = classify(6)
    assert c.units == {1, 5} and c.nonunits == {0, 2, 3, 4}
    assert len(classify(9).units) == 6 == euler_phi(9)


@given(st.integers(min_value=2, max_value=600))
def test_classify_partitions(n):
    c = classify(n)
    assert c.units | c.nonunits == set(range(n))
    assert not (c.units & c.nonunits)
    assert c.units == oracles.units(n)


def test_classify_rejects_one():
    with pytest.raises(ValueError):
        classify(1)


def test_two_is_unit_iff_odd():
    assert factorize(15).two_is_unit
    assert not factorize(12).two_is_unit
    assert str(factorize(360)) == "2^3 * 3^2 * 5"
