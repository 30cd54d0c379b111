import random

import pytest

from cyhopf.cartan import CartanMatrix, Root
from cyhopf.cyclotomic import one, root_of_unity
from cyhopf.datum import (
    CartanDatum,
    braided_nakayama_diag,
    check_cy,
    check_cy_braided,
    check_cy_smash,
    chi_beta,
    hdet_quantum_affine,
    inner_witness_search,
    integral_character,
    quantum_affine_balance,
    quantum_affine_report,
    squared_antipode_diag,
)
from cyhopf.errors import InvalidDatum, NegativeRoot, WrongCartanType
from cyhopf.groups import AbelianGroup
from cyhopf.sampling import random_a1t_datum, random_cartan_datum
from conftest import a1a1_znzn_datum, a2_z2z2_datum


def test_braiding_matrix_of_the_bundled_examples(example_a2, example_a1a1):
    minus_one = root_of_unity(1, 2)
    q = example_a2.braiding_matrix()
    assert q[0][0] == minus_one  # chi_1(y_1)
    assert q[0][1] == minus_one and q[1][0].is_one() and q[1][1] == minus_one
    qq = example_a1a1.braiding_matrix()
    z = root_of_unity(1, 3)
    assert qq[0][1] == z.inverse() and qq[1][0] == z  # q_12 = q^{-1}, q_21 = q


def test_datum_validation():
    group = AbelianGroup((2, 2))
    g = (group.element((1, 0)), group.element((0, 1)))
    with pytest.raises(InvalidDatum):
        # trivial chi_1 gives q_11 = 1
        CartanDatum(group, g, (group.character((0, 0)), group.character((1, 1))),
                    CartanMatrix(((2, 0), (0, 2))))
    with pytest.raises(InvalidDatum):
        # the A2 character table has q_12 q_21 = -1, but a_12 = 0 demands 1
        CartanDatum(group, g, (group.character((1, 0)), group.character((1, 1))),
                    CartanMatrix(((2, 0), (0, 2))))


def test_linking_shape_validation(example_a1a1):
    from cyhopf.datum import LinkingParameter

    group = example_a1a1.group
    with pytest.raises(InvalidDatum):
        CartanDatum(
            group,
            example_a1a1.g,
            example_a1a1.chi,
            CartanMatrix(((2, -1), (-1, 2))),
            (LinkingParameter(0, 1, one(1)),),
        )  # a_12 != 0 cannot be linked; note this chi fails A2 compatibility too


def test_chi_beta_simple_and_composite(example_a2):
    assert chi_beta(example_a2, Root((1, 0))) == example_a2.chi[0]
    composite = chi_beta(example_a2, Root((1, 1)))
    y1 = example_a2.group.element((1, 0))
    assert composite(y1).is_one()  # (-1) * (-1)
    assert chi_beta(example_a2, Root((0, 0))).is_trivial()
    with pytest.raises(NegativeRoot):
        chi_beta(example_a2, Root((-1, 1)))


def test_integral_character_examples(example_a2, example_a1a1):
    assert integral_character(example_a2).is_trivial()
    assert integral_character(example_a1a1).is_trivial()
    # t=1, A1, nontrivial chi: the integral character is chi itself
    group = AbelianGroup((2,))
    datum = CartanDatum(
        group, (group.generator(0),), (group.character((1,)),), CartanMatrix(((2,),))
    )
    assert integral_character(datum) == group.character((1,))


def test_hdet_quantum_affine(example_a1a1):
    assert hdet_quantum_affine(example_a1a1).is_trivial()
    group = AbelianGroup((5,))
    datum = CartanDatum(
        group, (group.generator(0),), (group.character((1,)),), CartanMatrix(((2,),))
    )
    hdet = hdet_quantum_affine(datum)
    assert hdet(group.generator(0)) == root_of_unity(4, 5)  # q^{-1}
    with pytest.raises(WrongCartanType):
        hdet_quantum_affine(a2_z2z2_datum())


def test_balance_criterion(example_a1a1):
    # t=1 is trivially balanced
    group = AbelianGroup((3,))
    datum = CartanDatum(
        group, (group.generator(0),), (group.character((1,)),), CartanMatrix(((2,),))
    )
    ok, residuals = quantum_affine_balance(datum)
    assert ok and residuals[0].is_one()
    # the Zn x Zn example fails balance: residual q at index 1
    ok2, res2 = quantum_affine_balance(example_a1a1)
    assert not ok2
    assert res2[0] == root_of_unity(1, 3)
    # cross-terms all 1 gives balance
    g22 = AbelianGroup((2, 2))
    datum3 = CartanDatum(
        g22,
        (g22.element((1, 0)), g22.element((0, 1))),
        (g22.character((1, 0)), g22.character((0, 1))),
        CartanMatrix(((2, 0), (0, 2))),
    )
    assert quantum_affine_balance(datum3)[0]


def test_braided_diag_of_examples(example_a2, example_a1a1):
    minus_one = root_of_unity(1, 2)
    ok, diag = check_cy_braided(example_a2)
    assert not ok and diag == (minus_one, minus_one)
    ok2, diag2 = check_cy_braided(example_a1a1)
    q = root_of_unity(1, 3)
    assert not ok2 and diag2 == (q.inverse(), q)
    # all cross q = 1 makes the braided factor CY
    g22 = AbelianGroup((2, 2))
    datum3 = CartanDatum(
        g22,
        (g22.element((1, 0)), g22.element((0, 1))),
        (g22.character((1, 0)), g22.character((0, 1))),
        CartanMatrix(((2, 0), (0, 2))),
    )
    ok3, diag3 = check_cy_braided(datum3)
    assert ok3 and all(c.is_one() for c in diag3)


def test_witness_search(example_a2):
    group = example_a2.group
    # all-ones diagonal is realized by the identity
    found = inner_witness_search(example_a2, (one(2), one(2)))
    assert found is not None and found[1].is_identity()
    # the squared-antipode diagonal (-1, -1) is realized by y1 (first in lex order)
    found2 = inner_witness_search(example_a2, squared_antipode_diag(example_a2))
    assert found2 is not None and found2[1] == group.element((1, 0))
    assert found2[0].is_one()
    # unreachable diagonal: chi values are +-1, so zeta_4 is never attained
    g4 = AbelianGroup((4,))
    datum4 = CartanDatum(
        g4, (g4.generator(0),), (g4.character((2,)),), CartanMatrix(((2,),))
    )
    assert inner_witness_search(datum4, (root_of_unity(1, 4),)) is None


def test_check_cy_smash_examples(example_a2):
    ok, xi, witness, p = check_cy_smash(example_a2)
    assert ok and xi.is_trivial() and p == 3
    assert witness[1] == example_a2.group.element((1, 0))
    for n in (3, 4, 5):
        datum = a1a1_znzn_datum(n)
        ok, xi, witness, p = check_cy_smash(datum)
        assert ok and p == 2
        # post hoc: the witness realizes chi_i(g) = chi_i(g_i)^{-1}
        for i in range(2):
            assert datum.chi[i](witness[1]) == datum.chi[i](datum.g[i]).inverse()
    # A1 with nontrivial character: integral character nontrivial, not CY
    group = AbelianGroup((2,))
    datum1 = CartanDatum(
        group, (group.generator(0),), (group.character((1,)),), CartanMatrix(((2,),))
    )
    ok1, xi1, _w, _p = check_cy_smash(datum1)
    assert not ok1 and not xi1.is_trivial()


def test_check_cy_full_reports(example_a2, example_a1a1):
    rep = check_cy(example_a2)
    assert rep.cy_smash and not rep.cy_R and rep.cy_dimension == 3
    assert rep.hdet is None  # undefined beyond A1 x ... x A1
    rep2 = check_cy(example_a1a1)
    assert rep2.cy_smash and not rep2.cy_R and rep2.cy_dimension == 2
    assert rep2.hdet is not None and rep2.hdet.is_trivial()
    assert any("shift" in note for note in rep2.notes)
    assert any("unit group" in note or "group-like" in note for note in rep2.notes)


def test_quantum_affine_report_casework(example_a1a1):
    rep = quantum_affine_report(example_a1a1)
    assert not rep.cy_R and not rep.cy_smash
    assert rep.hdet.is_trivial()  # (ii) holds, (i) fails: still not both CY
    with pytest.raises(WrongCartanType):
        quantum_affine_report(a2_z2z2_datum())


def test_balanced_data_with_nontrivial_qjj_never_both_cy():
    rng = random.Random(20240817)
    for _ in range(120):
        datum = random_a1t_datum(rng, balanced=True)
        rep = quantum_affine_report(datum)
        assert rep.cy_R  # balance holds by construction
        assert not rep.cy_smash  # hdet(g_j) = chi_j(g_j)^{-1} != 1
        hdet = hdet_quantum_affine(datum)
        for j in range(datum.rank):
            assert hdet(datum.g[j]) == datum.chi[j](datum.g[j]).inverse()


def test_mutual_exclusion_on_random_valid_data():
    rng = random.Random(99)
    for _ in range(1000):
        datum = random_a1t_datum(rng)
        balanced, _res = quantum_affine_balance(datum)
        hdet_trivial = hdet_quantum_affine(datum).is_trivial()
        assert not (balanced and hdet_trivial)


def test_braided_criterion_agrees_with_balance_on_random_data():
    rng = random.Random(7)
    for _ in range(200):
        datum = random_a1t_datum(rng)
        assert check_cy_braided(datum)[0] == quantum_affine_balance(datum)[0]


def test_integral_character_independent_of_tie_break():
    rng = random.Random(4242)
    for _ in range(60):
        datum = random_cartan_datum(rng)
        assert integral_character(datum, "min") == integral_character(datum, "max")
        assert braided_nakayama_diag(datum, "min") == braided_nakayama_diag(datum, "max")
