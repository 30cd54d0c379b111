from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cyhopf.cyclotomic import (
    CycloNumber,
    cyclotomic_coeffs,
    euler_phi,
    one,
    root_of_unity,
    zero,
)
from cyhopf.errors import InputError

ORDERS = st.integers(min_value=1, max_value=12)


def sympy_poly(num: CycloNumber, z):
    return sympy.Poly(list(reversed([sympy.Rational(c) for c in num.coeffs])), z, domain="QQ")


def sympy_reduce(poly, m: int, z):
    phi = sympy.Poly(sympy.cyclotomic_poly(m, z), z, domain="QQ")
    return poly.rem(phi)


@st.composite
def cyclo_numbers(draw, max_order=12):
    m = draw(st.integers(min_value=1, max_value=max_order))
    phi = euler_phi(m)
    coeffs = draw(
        st.lists(
            st.fractions(min_value=-4, max_value=4, max_denominator=6),
            min_size=phi,
            max_size=phi,
        )
    )
    return CycloNumber(m, coeffs)


def test_phi_values():
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_polynomials_match_sympy():
    z = sympy.Symbol("z")
    for m in range(1, 31):
        ours = sympy.Poly(list(reversed(cyclotomic_coeffs(m))), z)
        assert ours == sympy.Poly(sympy.cyclotomic_poly(m, z), z)


def test_root_identity_cases():
    assert root_of_unity(0, 4).is_one()
    assert root_of_unity(2, 4) == CycloNumber.from_rational(-1, 4)


def test_primitive_cube_root_reduction():
    # zeta_3 satisfies zeta^2 + zeta + 1 = 0 in reduced form
    z3 = root_of_unity(1, 3)
    assert (z3 * z3 + z3 + one(3)).is_zero()
    assert (root_of_unity(2, 3) + z3 + one(3)).is_zero()


def test_root_power_wraps_modulo_order():
    for m in (1, 2, 3, 4, 6, 8, 12):
        for k in range(-2 * m, 2 * m + 1):
            assert root_of_unity(k, m) == root_of_unity(k % m, m)


def test_exponent_to_multiplication_homomorphism_exhaustive():
    for m in range(1, 25):
        for a in range(m):
            for b in range(m):
                assert root_of_unity(a, m) * root_of_unity(b, m) == root_of_unity(a + b, m)


def test_inverse_pairs():
    assert one(5).inverse().is_one()
    minus_one = CycloNumber.from_rational(-1, 4)
    assert minus_one.inverse() == minus_one
    for n in (3, 4, 5, 8):
        z = root_of_unity(1, n)
        assert z.inverse() == root_of_unity(n - 1, n)
        assert (z * z.inverse()).is_one()


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        zero(4).inverse()


def test_power_of_root_is_one_at_order():
    for m in range(1, 16):
        for k in range(m):
            assert (root_of_unity(k, m) ** m).is_one()


def test_mixed_order_coercion_lcm():
    a = root_of_unity(1, 4)  # i
    b = root_of_unity(1, 3)
    c = a * b
    assert c.order == 12
    assert c == root_of_unity(3, 12) * root_of_unity(4, 12)
    assert root_of_unity(1, 2) == CycloNumber.from_rational(-1, 6)


def test_lift_requires_divisibility():
    with pytest.raises(InputError):
        root_of_unity(1, 4).lift(6)


@given(cyclo_numbers(), cyclo_numbers())
def test_mul_matches_sympy_polynomial_arithmetic(a, b):
    m = a.order * b.order // __import__("math").gcd(a.order, b.order)
    z = sympy.Symbol("z")
    ours = a * b
    theirs = sympy_reduce(sympy_poly(a.lift(m), z) * sympy_poly(b.lift(m), z), m, z)
    assert sympy_poly(ours.lift(m), z) == theirs


@given(cyclo_numbers(), cyclo_numbers(), cyclo_numbers())
def test_field_axioms(a, b, c):
    assert a * b == b * a
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(cyclo_numbers())
def test_additive_inverse_and_units(a):
    assert (a - a).is_zero()
    assert a * one(a.order) == a
    if not a.is_zero():
        assert (a * a.inverse()).is_one()


@given(cyclo_numbers(max_order=8), st.integers(min_value=0, max_value=6))
def test_pow_repeated_multiplication(a, n):
    expected = one(a.order)
    for _ in range(n):
        expected = expected * a
    assert a**n == expected


def test_negated_roots_stay_exact():
    # -zeta_3^2 is not itself a power of zeta_3; arithmetic must stay exact
    z = root_of_unity(1, 3)
    w = -(z * z)
    assert w * w == z * z * z * z
    assert w**3 == CycloNumber.from_rational(-1, 3)
    assert w == one(3) + z  # -zeta^2 = 1 + zeta mod Phi_3


def test_json_round_trip():
    a = CycloNumber(8, [Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(7, 5)])
    assert CycloNumber.from_json(a.to_json()) == a
    blob = a.to_json()
    assert blob["coeffs"][0] == ["1", "2"]
    with pytest.raises(InputError):
        CycloNumber.from_json({"order": 8})


def test_rendering():
    assert str(zero(4)) == "0"
    assert str(one(1)) == "1"
    assert str(root_of_unity(3, 8) - root_of_unity(1, 8)) == "z8^3 - z8"
