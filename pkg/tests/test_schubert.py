from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bnlimits.numerology import RamificationSeq, SeriesType, pointed_exists
from bnlimits.schubert import (
    CohomologyClass,
    bn_condition,
    cusp_class_power,
    identity_class,
    index_to_partition,
    lr_product,
    multiply_by_column,
    rect_for,
    schubert_class,
    zero_class,
)
from schur_oracle import oracle_product, rect_partitions


def test_index_to_partition():
    assert index_to_partition(RamificationSeq((0, 1, 1, 1), 3, 10)) == (1, 1, 1)
    assert index_to_partition(RamificationSeq((4, 8, 11), 2, 17)) == (11, 8, 4)
    assert index_to_partition(RamificationSeq((0, 0, 0), 2, 9)) == ()


def test_pieri_golden():
    rect = (2, 2)
    s1 = schubert_class((1,), rect)
    prod = lr_product(s1, s1)
    assert prod.terms == {(2,): 1, (1, 1): 1}


def test_four_lines():
    rect = (2, 2)
    s1 = schubert_class((1,), rect)
    p = s1
    for _ in range(3):
        p = lr_product(p, s1)
    assert p.coefficient((2, 2)) == 2


def test_zero_and_identity():
    rect = (3, 4)
    x = schubert_class((2, 1), rect)
    assert lr_product(x, zero_class(rect)).is_zero()
    assert lr_product(x, identity_class(rect)).terms == x.terms


def test_rectangle_mismatch():
    with pytest.raises(ValueError):
        lr_product(identity_class((2, 2)), identity_class((2, 3)))


def test_partition_validation():
    with pytest.raises(ValueError):
        schubert_class((3,), (2, 2))
    with pytest.raises(ValueError):
        schubert_class((1, 2), (2, 2))


def test_cusp_power_identity():
    assert cusp_class_power(0, (3, 5)).terms == {(): 1}


def test_cusp_power_pencils():
    rect = rect_for(1, 12)  # (2, 11)
    assert cusp_class_power(23, rect).is_zero()
    top = cusp_class_power(22, rect)
    # the full-rectangle coefficient counts standard tableaux of shape (11, 11)
    catalan11 = comb(22, 11) // 12
    assert top.terms == {(11, 11): catalan11}


def test_poincare_duality_spot():
    for rect in [(2, 2), (2, 3), (3, 3)]:
        k, m = rect
        for lam in rect_partitions(rect):
            padded = tuple(lam) + (0,) * (k - len(lam))
            comp = tuple(sorted((m - x for x in padded), reverse=True))
            prod = lr_product(schubert_class(lam, rect), schubert_class(comp, rect))
            assert prod.coefficient((m,) * k) == 1


def test_degree_additivity():
    rect = (3, 4)
    x = schubert_class((2, 1), rect)
    y = schubert_class((3, 1), rect)
    for nu, c in lr_product(x, y).terms.items():
        assert sum(nu) == 3 + 4
        assert c > 0


@given(st.data())
def test_lr_commutative_and_associative(data):
    rect = (3, 3)
    parts = rect_partitions(rect)
    a = schubert_class(data.draw(st.sampled_from(parts)), rect)
    b = schubert_class(data.draw(st.sampled_from(parts)), rect)
    c = schubert_class(data.draw(st.sampled_from(parts)), rect)
    assert lr_product(a, b).terms == lr_product(b, a).terms
    assert lr_product(lr_product(a, b), c).terms == lr_product(a, lr_product(b, c)).terms


def test_column_rule_matches_lr():
    rect = (3, 4)
    col = schubert_class((1, 1), rect)
    for lam in rect_partitions(rect):
        x = schubert_class(lam, rect)
        assert multiply_by_column(x, 2).terms == lr_product(x, col).terms


def test_against_oracle_spot():
    rect = (2, 3)
    for lam in rect_partitions(rect):
        for mu in rect_partitions(rect):
            got = lr_product(schubert_class(lam, rect), schubert_class(mu, rect)).terms
            assert got == oracle_product(lam, mu, rect)


def test_bn_condition_goldens():
    assert bn_condition(SeriesType(11, 2, 17), [RamificationSeq((4, 8, 11), 2, 17)])
    assert not bn_condition(SeriesType(23, 1, 12), [])
    # triple product: two prescribed points plus ten cusps on a genus-10 curve
    assert bn_condition(SeriesType(10, 2, 17),
                        [RamificationSeq((4, 8, 11), 2, 17), RamificationSeq((0, 1, 1), 2, 17)])


def test_bn_condition_matches_clamp_small_grid():
    # one-point specialization on a spot grid; the full grid runs in acceptance
    for g in range(0, 6):
        for d in range(1, 7):
            for r in range(0, min(2, d) + 1):
                t = SeriesType(g, r, d)
                for alpha in combinations_with_replacement(range(d - r + 1), r + 1):
                    ram = RamificationSeq(alpha, r, d)
                    assert bn_condition(t, [ram]) == pointed_exists(t, ram)


def test_class_str():
    rect = (2, 2)
    s1 = schubert_class((1,), rect)
    assert str(lr_product(s1, s1)) == "s[1,1] + s[2]"
    assert str(zero_class(rect)) == "0"
