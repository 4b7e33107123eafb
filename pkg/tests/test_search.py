import pytest

from planar_fillings.invariants import InvariantTable, reference_table
from planar_fillings.page import canonical_hole_sets
from planar_fillings.search import (
    REALIZED,
    UNKNOWN,
    Configuration,
    ResourceLimitError,
    check_configuration,
    classify,
    enumerate_configurations,
    search_configurations,
)

from oracles import brute_force_configurations, table_of

ALT_K2 = Configuration(2, [(0, 1, 2), (0, 3, 4), (1, 3), (2, 4)])


def canonical(k):
    return Configuration(k, canonical_hole_sets(k))


def test_k1_two_configurations():
    assert enumerate_configurations(reference_table(1)) == [
        Configuration(1, [(0, 1), (1, 2), (0, 2)]),
        Configuration(1, [(0,), (1,), (2,), (0, 1, 2)]),
    ]


def test_k1_matches_brute_force():
    target = reference_table(1)
    expected = set()
    for combo in brute_force_configurations(1, max_curves=6):
        M, J = table_of(1, combo)
        if tuple(M) == target.M and tuple(map(tuple, J)) == target.J:
            expected.add(Configuration(1, combo))
    assert set(enumerate_configurations(target)) == expected
    assert len(expected) == 2


def test_k2_canonical_and_alternative():
    assert set(enumerate_configurations(reference_table(2))) == {canonical(2), ALT_K2}


@pytest.mark.parametrize("k", [3, 4, 5])
def test_unique_for_k_at_least_3(k):
    assert enumerate_configurations(reference_table(k)) == [canonical(k)]


def test_check_configuration():
    for k in range(1, 7):
        assert check_configuration(canonical(k), reference_table(k))
    assert not check_configuration(Configuration(1, []), reference_table(1))
    assert not check_configuration(
        Configuration(1, [(0,), (0,), (1,), (1,), (2,), (2,)]), reference_table(1))
    with pytest.raises(ValueError):
        check_configuration(canonical(2), reference_table(1))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_soundness_and_no_boundary_parallel(k):
    for c in enumerate_configurations(reference_table(k)):
        assert check_configuration(c, reference_table(k))
        if k >= 2:
            assert not c.has_boundary_parallel()


def test_other_targets():
    # Two disjoint singletons twice each.
    target = InvariantTable(1, (2, 2, 0), ((0, 0, 0), (0, 0, 0), (0, 0, 0)))
    assert enumerate_configurations(target) == [Configuration(1, [(0,), (0,), (1,), (1,)])]
    # Zero table has only the empty configuration.
    zero = InvariantTable(1, (0, 0, 0), ((0,) * 3,) * 3)
    assert enumerate_configurations(zero) == [Configuration(1, [])]
    # M=1 everywhere with J=1 forces the single full curve.
    full = InvariantTable(1, (1, 1, 1), ((0, 1, 1), (1, 0, 1), (1, 1, 0)))
    assert enumerate_configurations(full) == [Configuration(1, [(0, 1, 2)])]


def test_duplicate_subsets_are_found():
    target = InvariantTable(1, (2, 2, 0), ((0, 2, 0), (2, 0, 0), (0, 0, 0)))
    assert enumerate_configurations(target) == [Configuration(1, [(0, 1), (0, 1)])]


def test_bad_target():
    with pytest.raises(ValueError):
        enumerate_configurations({"k": 1})


def test_determinism_and_workers():
    for k in (1, 2, 4):
        first = search_configurations(reference_table(k))
        assert search_configurations(reference_table(k)) == first
        assert search_configurations(reference_table(k), workers=3) == first


def test_node_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_configurations(reference_table(3), node_limit=5)
    with pytest.raises(ResourceLimitError):
        enumerate_configurations(reference_table(3), node_limit=5, workers=2)


def test_configuration_canonical_form():
    c = Configuration(1, [(2, 0), (1,), (0, 1)])
    assert c.subsets == ((1,), (0, 1), (0, 2))
    with pytest.raises(ValueError):
        Configuration(1, [()])
    with pytest.raises(ValueError):
        Configuration(1, [(3,)])


def test_classify_k3():
    report = classify(3)
    assert report.count == 1
    entry = report.configurations[0]
    assert entry.canonical and entry.realizability == REALIZED
    assert str(entry.h1) == "Z^2 ⊕ Z/2" and entry.h2.is_trivial()


def test_classify_k2_homology_agrees():
    report = classify(2)
    assert report.count == 2
    groups = {(c.h1, c.h2) for c in report.configurations}
    assert len(groups) == 1
    alt = next(c for c in report.configurations if not c.canonical)
    assert alt.configuration == ALT_K2
    assert alt.realizability == UNKNOWN


def test_classify_k1_differs():
    report = classify(1)
    assert report.count == 2
    ranks = sorted(c.h2.free_rank for c in report.configurations)
    assert ranks == [0, 1]
    # The boundary-parallel factorization is the lantern relation.
    assert all(c.realizability == REALIZED for c in report.configurations)
    data = report.to_dict()
    assert data["count"] == 2 and "witness" in data["configurations"][1]
