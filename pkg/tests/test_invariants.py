import random

import pytest

from planar_fillings.invariants import InvariantTable, invariant_table, reference_table, table_from_subsets
from planar_fillings.mcg import hurwitz_move
from planar_fillings.page import Factorization, Page, canonical_monodromy


def test_k2_examples():
    t = invariant_table(canonical_monodromy(2))
    assert t.M == (2, 2, 2, 2, 2)
    assert t.J[0][3] == 1
    assert t.J[1][4] == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_reference_matches_canonical(k):
    assert reference_table(k) == invariant_table(canonical_monodromy(k))


def test_rule_three_vacuous_for_k1():
    t = reference_table(1)
    # Only odd-even pair is (1, 2) and it is adjacent.
    assert t.J[1][2] == 1
    assert all(x == 1 for i, row in enumerate(t.J) for j, x in enumerate(row) if i != j)


def test_reference_k3_odd_pair():
    assert reference_table(3).J[1][5] == 1
    assert reference_table(3).J[1][4] == 0


def test_reference_bad_k():
    with pytest.raises(ValueError):
        reference_table(0)


def test_empty_factorization_table():
    t = invariant_table(Factorization(Page(2)))
    assert t.M == (0,) * 5 and all(x == 0 for row in t.J for x in row)


def test_outer_curve_counts_every_hole():
    t = table_from_subsets(1, [(0, 1, 2)])
    assert t.M == (1, 1, 1) and t.J[0][2] == 1


def test_order_independence():
    rng = random.Random(3)
    f = canonical_monodromy(4)
    for _ in range(10):
        curves = list(f.curves)
        rng.shuffle(curves)
        assert invariant_table(Factorization(f.page, tuple(curves))) == invariant_table(f)


def test_hurwitz_invariance():
    f = canonical_monodromy(3)
    for i in range(len(f) - 1):
        assert invariant_table(hurwitz_move(f, i)) == invariant_table(f)


def test_table_validation():
    with pytest.raises(ValueError):
        InvariantTable(1, (1, 1, 1), ((0, 2, 0), (2, 0, 0), (0, 0, 0)))
    with pytest.raises(ValueError):
        InvariantTable(1, (1, 1, 1), ((0, 1, 0), (0, 0, 0), (0, 0, 0)))
    with pytest.raises(ValueError):
        InvariantTable(1, (1, 1), ((0, 0), (0, 0)))


def test_json_and_text():
    t = reference_table(2)
    assert InvariantTable.from_dict(t.to_dict()) == t
    text = t.format_text()
    assert text.splitlines()[0] == "k = 2"
    assert "M:" in text and text.count("\n") == 3 + 5
