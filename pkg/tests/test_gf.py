import pytest
from hypothesis import given
from hypothesis import strategies as st

from sparse_duals import (
    DivisionByZero,
    Field,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
    make_field,
)

SMALL_ORDERS = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4)]  # q <= 16
LARGE_ORDERS = [(5, 2), (3, 3), (2, 5), (7, 2), (2, 6), (3, 4), (11, 2), (5, 3), (2, 7), (13, 2), (3, 5), (2, 8)]


def test_gf4_is_the_expected_field():
    F = make_field(2, 2)
    assert F.q == 4
    assert F.modulus == (1, 1, 1)  # x^2 + x + 1
    assert make_field(2, 2, [1, 1, 1]) == F  # explicit modulus, same field
    a = F.element(2)  # class of x
    one = F.one
    assert a * a == F.element(3)  # a^2 = a + 1
    assert a * F.element(3) == one
    assert a.inverse() == F.element(3)
    assert a + a == F.zero
    assert F.header() == {"p": 2, "m": 2, "modulus": [1, 1, 1]}


def test_gf2_is_xor_and():
    F = make_field(2)
    for x in range(2):
        for y in range(2):
            assert F.add(x, y) == x ^ y
            assert F.mul(x, y) == x & y


def test_gf9_generator_has_order_eight():
    F = make_field(3, 2)
    assert F.q == 9
    g = F.generator
    assert F.pow(g, 8) == 1
    assert all(F.pow(g, k) != 1 for k in range(1, 8))


def test_element_counts():
    assert [e.value for e in make_field(2).all_elements()] == [0, 1]
    assert len(make_field(2, 2).all_elements()) == 4
    assert len(make_field(3, 2).nonzero_elements()) == 8


def test_not_prime():
    with pytest.raises(NotPrime):
        make_field(4)
    with pytest.raises(NotPrime):
        make_field(1)


def test_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])  # x^2 + 1 = (x+1)^2
    with pytest.raises(ValueError):
        make_field(2, 2, [1, 1])  # wrong degree
    with pytest.raises(ValueError):
        make_field(3, 2, [1, 1, 2])  # not monic


def test_custom_modulus_with_non_primitive_x():
    # x^2 + 1 is irreducible over GF(3) but x has order 4; the field must
    # still pick a genuine generator for its tables.
    F = Field(3, 2, [1, 0, 1])
    g = F.generator
    assert F.pow(g, 8) == 1
    assert all(F.pow(g, k) != 1 for k in range(1, 8))
    x_class = 3  # encoding of the class of x
    assert F.pow(x_class, 4) == 1
    assert g != x_class


def test_division_by_zero():
    F = make_field(2, 2)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(DivisionByZero):
        F.pow(0, -1)
    with pytest.raises(DivisionByZero):
        F.one / F.zero


def test_field_mismatch():
    a = make_field(2, 2).element(1)
    b = make_field(3, 2).element(1)
    with pytest.raises(FieldMismatch):
        a + b
    with pytest.raises(FieldMismatch):
        a * b


def test_same_parameters_are_interoperable():
    F1, F2 = make_field(2, 2), make_field(2, 2)
    assert F1 == F2
    assert F1.element(2) + F2.element(3) == F1.one


def test_element_dunders_match_value_ops():
    F = make_field(2, 2)
    for a in F.all_elements():
        for b in F.all_elements():
            assert (a + b).value == F.add(a.value, b.value)
            assert (a * b).value == F.mul(a.value, b.value)
            assert (a - b).value == F.sub(a.value, b.value)
            assert (-a).value == F.neg(a.value)
            if b.value:
                assert ((a / b) * b) == a
    assert (F.element(2) ** 3).value == 1
    assert int(F.element(3)) == 3


@pytest.mark.parametrize("p,m", SMALL_ORDERS)
def test_field_axioms_exhaustive(p, m):
    F = make_field(p, m)
    q = F.q
    values = range(q)
    for a in values:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in values:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in values:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,m", SMALL_ORDERS)
def test_frobenius_is_additive(p, m):
    F = make_field(p, m)
    for a in range(F.q):
        for b in range(F.q):
            assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


@pytest.mark.parametrize("p,m", SMALL_ORDERS + LARGE_ORDERS)
def test_multiplicative_order_divides_q_minus_one(p, m):
    F = make_field(p, m)
    for a in range(1, F.q):
        assert F.pow(a, F.q - 1) == 1


@pytest.mark.parametrize("p,m", LARGE_ORDERS)
def test_axioms_sampled_on_larger_fields(p, m):
    F = make_field(p, m)
    q = F.q
    sample = list(range(0, q, max(1, q // 11))) + [1, q - 1]
    for a in sample:
        for b in sample:
            assert F.mul(a, b) == F.mul(b, a)
            for c in sample[::3]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@given(st.sampled_from(SMALL_ORDERS + LARGE_ORDERS), st.data())
def test_random_inverse_pairs(order, data):
    p, m = order
    F = make_field(p, m)
    a = data.draw(st.integers(min_value=1, max_value=F.q - 1))
    assert F.mul(a, F.inv(a)) == 1
    assert F.pow(a, -1) == F.inv(a)


def test_too_large_field():
    from sparse_duals import FieldTooLarge

    with pytest.raises(FieldTooLarge):
        make_field(2, 9)
    with pytest.raises(FieldTooLarge):
        make_field(257)
