import itertools
import random

import pytest
from hypothesis import given, strategies as st

from fqsieve.finitefield import FieldElement, FiniteField, field_from_order


def naive_least_irreducible(p, m):
    """Oracle: exhaustive factor search over all candidate moduli, in the
    low-to-high-degree coefficient order."""

    def divides(div, poly):
        rem = list(poly)
        inv = pow(div[-1], p - 2, p)
        while len(rem) >= len(div):
            c = (rem[-1] * inv) % p
            off = len(rem) - len(div)
            for i, d in enumerate(div):
                rem[off + i] = (rem[off + i] - c * d) % p
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                return True
        return not rem

    def irreducible(poly):
        deg = len(poly) - 1
        for d in range(1, deg // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                if divides(list(tail) + [1], poly):
                    return False
        return True

    for tail in itertools.product(range(p), repeat=m):
        cand = list(tail) + [1]
        if irreducible(cand):
            return tuple(cand)
    raise AssertionError


class TestConstruction:
    def test_prime_field(self):
        F = FiniteField(2)
        assert (F.p, F.m, F.q) == (2, 1, 2)
        assert F.modulus is None

    def test_default_modulus_f4(self):
        F = FiniteField(2, 2)
        assert F.modulus == (1, 1, 1)  # u^2 + u + 1
        assert F.modulus == naive_least_irreducible(2, 2)

    @pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (5, 2), (2, 4)])
    def test_default_modulus_is_least(self, p, m):
        assert FiniteField(p, m).modulus == naive_least_irreducible(p, m)

    def test_nonprime_p_rejected(self):
        with pytest.raises(ValueError):
            FiniteField(4)
        with pytest.raises(ValueError):
            FiniteField(1)

    def test_reducible_modulus_rejected(self):
        # u^2 + 1 = (u+1)^2 over F_2
        with pytest.raises(ValueError):
            FiniteField(2, 2, modulus=[1, 0, 1])

    def test_wrong_degree_modulus_rejected(self):
        with pytest.raises(ValueError):
            FiniteField(2, 2, modulus=[1, 1])

    def test_modulus_for_prime_field_rejected(self):
        with pytest.raises(ValueError):
            FiniteField(3, 1, modulus=[1, 1])

    def test_size_guard(self):
        with pytest.raises(ValueError):
            FiniteField(2, 17)

    def test_from_order(self):
        assert field_from_order(9).q == 9
        assert field_from_order(9, "u^2+1").modulus == (1, 0, 1)
        with pytest.raises(ValueError):
            field_from_order(6)

    def test_descriptor_equality(self):
        assert FiniteField(2, 2) == FiniteField(2, 2, modulus=[1, 1, 1])
        # default for F_9 is u^2+1; u^2+u+2 is a different valid choice
        assert FiniteField(3, 2) == FiniteField(3, 2, modulus=[1, 0, 1])
        assert FiniteField(3, 2) != FiniteField(3, 2, modulus=[2, 1, 1])


class TestArithmeticExamples:
    def test_f2_add(self, F2):
        assert (F2.one + F2.one).is_zero()

    def test_f3_inverse(self, F3):
        two = F3.element(2)
        assert two.inverse() == two
        assert two * two == F3.one

    def test_f4_mul(self, F4):
        u = F4.generator_u
        assert u * (u + F4.one) == F4.one

    def test_zero_inversion(self, F3):
        with pytest.raises(ZeroDivisionError):
            F3.zero.inverse()

    def test_descriptor_mismatch(self, F2, F3):
        with pytest.raises(ValueError):
            F2.one + F3.one


class TestFrobeniusRoot:
    def test_f2(self, F2):
        assert F2.one.frobenius_root() == F2.one

    def test_f4(self, F4):
        u = F4.generator_u
        r = u.frobenius_root()
        assert r == u + F4.one
        assert r * r == u

    def test_f3(self, F3):
        assert F3.element(2).frobenius_root() == F3.element(2)


SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (2, 6)]


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_exhaustive_field_properties(p, m):
    F = FiniteField(p, m)
    assert F.q <= 64
    for a in F.elements():
        assert a.coords == tuple(F.decode(a.code))
        assert len(a.coords) == m
        assert all(0 <= c < p for c in a.coords)
        # Fermat
        assert a ** F.q == a
        # Frobenius root inverts the p-th power map
        assert a.frobenius_root() ** p == a
        if not a.is_zero():
            inv = a.inverse()
            assert a * inv == F.one
            # exponent-based inversion oracle
            assert inv == a ** (F.q - 2)


def test_randomized_inverse_large_field():
    F = FiniteField(101)
    G = FiniteField(2, 8)  # beyond exhaustive range, table-backed
    rng = random.Random(7)
    for field in (F, G):
        for _ in range(10_000):
            a = field.from_code(rng.randrange(1, field.q))
            assert a * a.inverse() == field.one


def test_untabled_field_matches_small_field():
    # q = 3^6 = 729 exceeds the table limit; cross-check against a subfield
    big = FiniteField(3, 6)
    assert big.mul_table is None
    rng = random.Random(3)
    for _ in range(500):
        a = rng.randrange(729)
        b = rng.randrange(729)
        ab = big.mul(a, b)
        assert big.mul(b, a) == ab
        if a:
            assert big.mul(a, big.inv(a)) == 1
    # Frobenius root still inverts cubing
    for _ in range(200):
        a = rng.randrange(729)
        assert big.pow_code(big.frob_root(a), 3) == a


fields_strategy = st.sampled_from(
    [FiniteField(2), FiniteField(3), FiniteField(5), FiniteField(2, 2),
     FiniteField(3, 2), FiniteField(2, 4)]
)


@given(field=fields_strategy, data=st.data())
def test_field_axioms(field, data):
    codes = st.integers(min_value=0, max_value=field.q - 1)
    a = field.from_code(data.draw(codes))
    b = field.from_code(data.draw(codes))
    c = field.from_code(data.draw(codes))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + field.zero == a
    assert a * field.one == a
    assert a - a == field.zero


def test_element_text_roundtrip(F4, F9):
    for F in (F4, F9):
        seen = {str(a) for a in F.elements()}
        assert len(seen) == F.q
