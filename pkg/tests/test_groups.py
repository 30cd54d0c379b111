import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyhopf.cyclotomic import root_of_unity
from cyhopf.errors import GroupMismatch, GroupTooLarge, InputError
from cyhopf.groups import AbelianGroup, parse_element

invariant_factors = st.lists(st.integers(min_value=1, max_value=6), min_size=0, max_size=3)


@st.composite
def group_with_data(draw):
    group = AbelianGroup(tuple(draw(invariant_factors)))
    exps = st.tuples(*[st.integers(min_value=0, max_value=n - 1) for n in group.invariant_factors])
    g = group.element(draw(exps))
    h = group.element(draw(exps))
    chi = group.character(draw(exps))
    psi = group.character(draw(exps))
    return group, g, h, chi, psi


def test_order_and_exponent():
    group = AbelianGroup((2, 2))
    assert group.order == 4 and group.exponent == 2
    assert AbelianGroup((3, 2)).exponent == 6
    assert AbelianGroup(()).order == 1 and AbelianGroup(()).exponent == 1


def test_invalid_factor_rejected():
    with pytest.raises(InputError):
        AbelianGroup((0, 2))


def test_z2z2_character_table_values():
    # chi_1 = (-1, 1) and chi_2 = (-1, -1) on (y1, y2)
    group = AbelianGroup((2, 2))
    y1, y2 = group.generator(0), group.generator(1)
    chi1, chi2 = group.character((1, 0)), group.character((1, 1))
    minus_one = root_of_unity(1, 2)
    assert chi1(y1) == minus_one
    assert chi1(y2).is_one()
    assert chi2(y1) == minus_one
    assert chi2(y2) == minus_one
    # multiplicativity against the table: chi1(y1*y2) = chi1(y1) chi1(y2)
    assert chi1(y1 * y2) == minus_one


def test_trivial_character_everywhere_one():
    group = AbelianGroup((3, 4))
    eps = group.trivial_character()
    assert eps.is_trivial()
    assert all(eps(g).is_one() for g in group.elements())


def test_triviality_detection():
    group = AbelianGroup((2, 2))
    assert not group.character((1, 0)).is_trivial()
    # chi1 * chi2 in the Zn x Zn data is trivial: values q and q^{-1} cancel
    n = 5
    gn = AbelianGroup((n, n))
    chi1, chi2 = gn.character((1, 1)), gn.character((n - 1, n - 1))
    assert (chi1 * chi2).is_trivial()


def test_char_ops_against_identity():
    group = AbelianGroup((2, 2))
    chi = group.character((1, 1))
    assert chi * group.trivial_character() == chi
    assert (chi * chi.inverse()).is_trivial()
    assert (group.character((1, 0)) ** 2 * group.character((1, 1)) ** 2).is_trivial()


def test_mismatched_groups_raise():
    a = AbelianGroup((2,))
    b = AbelianGroup((3,))
    with pytest.raises(GroupMismatch):
        a.character((1,))(b.element((1,)))
    with pytest.raises(GroupMismatch):
        a.element((1,)) * b.element((1,))


def test_elements_enumeration():
    assert len(list(AbelianGroup((2, 2)).elements())) == 4
    assert len(list(AbelianGroup((1,)).elements())) == 1
    seq = [g.exp for g in AbelianGroup((3, 2)).elements()]
    assert seq == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    with pytest.raises(GroupTooLarge):
        list(AbelianGroup((100, 100, 200)).elements())


def test_character_group_has_group_order():
    for factors in ((2, 2), (3,), (4, 2), (2, 3)):
        group = AbelianGroup(factors)
        chars = {c.exp for c in group.characters()}
        assert len(chars) == group.order


def test_bicharacter_pairing_exhaustive_small():
    # fully exhaustive in both slots for |Gamma| <= 8
    for factors in ((2, 2), (6,), (4, 2), (2, 2, 2)):
        group = AbelianGroup(factors)
        elements = list(group.elements())
        characters = list(group.characters())
        for chi in characters:
            for g in elements:
                for h in elements:
                    assert chi(g * h) == chi(g) * chi(h)
            for psi in characters:
                for g in elements:
                    assert (chi * psi)(g) == chi(g) * psi(g)
    # spot checks at the |Gamma| <= 64 scale
    group = AbelianGroup((8, 4))
    assert group.order <= 64
    elements = list(group.elements())
    characters = list(group.characters())
    for chi in characters[:6] + characters[-2:]:
        for g in elements:
            for h in elements:
                assert chi(g * h) == chi(g) * chi(h)


@given(group_with_data())
def test_char_inverse_is_value_at_inverse(data):
    _group, g, _h, chi, _psi = data
    assert chi.inverse()(g) == chi(g.inverse())
    assert chi.inverse()(g) == chi(g).inverse()


@given(group_with_data())
def test_eval_multiplicative_both_slots(data):
    _group, g, h, chi, psi = data
    assert chi(g * h) == chi(g) * chi(h)
    assert (chi * psi)(g) == chi(g) * psi(g)


@given(group_with_data(), st.integers(min_value=-6, max_value=6))
def test_element_power_matches_repeated_product(data, n):
    group, g, _h, _chi, _psi = data
    expected = group.identity()
    step = g if n >= 0 else g.inverse()
    for _ in range(abs(n)):
        expected = expected * step
    assert g**n == expected


def test_element_string_round_trip():
    group = AbelianGroup((4, 3, 2))
    g = group.element((2, 0, 1))
    assert str(g) == "y1^2*y3"
    assert parse_element(group, str(g)) == g
    assert parse_element(group, "e") == group.identity()
    assert str(group.identity()) == "e"
    with pytest.raises(InputError):
        parse_element(group, "z1^2")


def test_json_round_trip():
    group = AbelianGroup((2, 4))
    assert AbelianGroup.from_json(group.to_json()) == group
    g = group.element((1, 3))
    assert g.to_json() == {"exp": [1, 3]}
    chi = group.character((0, 2))
    assert chi.to_json() == {"exp": [0, 2]}
