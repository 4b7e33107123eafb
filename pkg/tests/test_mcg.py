import random

import pytest

from planar_fillings.invariants import invariant_table
from planar_fillings.mcg import (
    MappingClassRep,
    compose,
    equal,
    hurwitz_move,
    inverse_twist,
    realize,
    twist,
)
from planar_fillings.page import (
    CurveClass,
    Factorization,
    Page,
    boundary_factorization,
    boundary_parallel_curve,
    canonical_monodromy,
)
from planar_fillings.words import FreeWord, WordLengthError, cyclic_reduce


def word(text):
    return FreeWord.parse(text)


def test_inner_parallel_twist_is_framing_only():
    rep = twist(CurveClass.standard((1,)), 1)
    assert rep.images == MappingClassRep.identity(1).images
    assert rep.framing == (0, 1, 0)
    assert not equal(twist(CurveClass.standard((0,)), 1), MappingClassRep.identity(1))


def test_interval_twist_formula():
    rep = twist(CurveClass((1, 2), word("x1.x2")), 1)
    assert rep.images[0] == word("x0")
    assert rep.images[1] == word("x1.x2.x1.X2.X1")
    assert rep.images[2] == word("x1.x2.X1")
    assert rep.framing == (0, 1, 1)


def test_outer_twist_conjugates_everything():
    rep = twist(boundary_parallel_curve(Page(1), 3), 1)
    w = word("x0.x1.x2")
    for i in range(3):
        assert rep.images[i] == w * FreeWord((i + 1,)) * w.inverse()
    assert rep.framing == (1, 1, 1)


def test_skipping_curve_moves_skipped_generator():
    # x0.x2 passes between the basepoint and hole 1, so x1 is not fixed.
    rep = twist(CurveClass.standard((0, 2)), 1)
    assert rep.images[1] != word("x1")
    assert rep(word("x0.x2")) == word("x0.x2")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_twists_fix_their_own_curve_and_the_boundary(k):
    for curve in canonical_monodromy(k).curves:
        rep = twist(curve, k)
        assert rep(curve.word) == curve.word
        assert rep.fixes_boundary()
        assert equal(compose(rep, inverse_twist(curve, k)), MappingClassRep.identity(k))


def test_compose_identity_and_framing():
    m = twist(CurveClass.standard((0, 1)), 1)
    assert equal(compose(MappingClassRep.identity(1), m), m)
    assert equal(compose(m, MappingClassRep.identity(1)), m)
    assert compose(m, m).framing == (2, 2, 0)
    with pytest.raises(ValueError):
        compose(m, MappingClassRep.identity(2))
    with pytest.raises(ValueError):
        equal(m, MappingClassRep.identity(2))


def test_realize_basics():
    assert equal(realize(Factorization(Page(2))), MappingClassRep.identity(2))
    assert realize(canonical_monodromy(1)).framing == (2, 2, 2)
    assert realize(canonical_monodromy(2)).framing == (2,) * 5


def test_lantern_relation():
    lhs = realize(canonical_monodromy(1))
    rhs = realize(boundary_factorization(Page(1)))
    assert equal(lhs, rhs)
    # Cyclic rotations of the lantern product agree as well.
    curves = canonical_monodromy(1).curves
    rotated = Factorization(Page(1), curves[1:] + curves[:1])
    assert equal(realize(rotated), rhs)
    # Dropping a factor breaks it.
    assert not equal(realize(Factorization(Page(1), curves[:2])), rhs)


def test_disjoint_curves_commute():
    f = canonical_monodromy(3)
    a, b = twist(f.curves[1], 3), twist(f.curves[2], 3)
    assert equal(compose(a, b), compose(b, a))
    v0, v4 = twist(f.curves[0], 3), twist(f.curves[4], 3)
    assert not equal(compose(v0, v4), compose(v4, v0))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_monodromy_fixes_boundary(k):
    assert realize(canonical_monodromy(k)).fixes_boundary()


def test_hurwitz_on_disjoint_pair_swaps():
    f = canonical_monodromy(2)
    g = hurwitz_move(f, 1)
    assert g.curves[1] == f.curves[2]
    assert g.curves[2].holes == f.curves[1].holes
    assert g.curves[2].word == f.curves[1].word


def test_hurwitz_preserves_product():
    f = canonical_monodromy(2)
    assert equal(realize(hurwitz_move(f, 1)), realize(f))
    for i in range(len(f) - 1):
        for inverse in (False, True):
            g = hurwitz_move(f, i, inverse=inverse)
            assert equal(realize(g), realize(f))
            assert sorted(g.hole_sets()) == sorted(f.hole_sets())


def test_hurwitz_inverse_undoes_move():
    f = canonical_monodromy(3)
    g = hurwitz_move(hurwitz_move(f, 0), 0, inverse=True)
    assert g.hole_sets() == f.hole_sets()
    assert [cyclic_reduce(c.word.letters) for c in g.curves] == \
        [cyclic_reduce(c.word.letters) for c in f.curves]


def test_hurwitz_index_errors():
    f = canonical_monodromy(1)
    for i in (-1, 2, 5):
        with pytest.raises(ValueError):
            hurwitz_move(f, i)


def test_words_survive_json_roundtrip():
    # Curves are rebuilt from their words alone, without the cached action.
    rng = random.Random(7)
    for k in (2, 3):
        f = canonical_monodromy(k)
        base = realize(f)
        for _ in range(6):
            g = f
            for _ in range(3):
                g = hurwitz_move(g, rng.randrange(len(g) - 1), inverse=rng.random() < 0.5)
            reloaded = Factorization.from_json(g.to_json())
            assert all(c.action is None for c in reloaded.curves)
            assert equal(realize(reloaded), base)


def test_realize_is_a_homomorphism():
    f = canonical_monodromy(2)
    g = boundary_factorization(Page(2))
    assert equal(realize(f + g), compose(realize(f), realize(g)))


@pytest.mark.parametrize("k", range(1, 5))
def test_framing_matches_multiplicities(k):
    f = hurwitz_move(canonical_monodromy(k), 0)
    assert realize(f).framing == invariant_table(f).M


def test_word_length_cap():
    with pytest.raises(WordLengthError):
        realize(canonical_monodromy(2), max_length=3)


def test_rep_json_roundtrip():
    rep = realize(canonical_monodromy(1))
    data = rep.to_dict()
    assert data["images"][0].startswith("x0") and data["framing"] == [2, 2, 2]
    assert equal(MappingClassRep.from_dict(data), rep)
