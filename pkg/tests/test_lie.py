"""Structural data and adjoint-action tests, pinned to the worked examples."""

import random

import pytest

from orbit_atlas.arith import Fp, LaurentPoly, parse_poly
from orbit_atlas.errors import ShapeError, UnsupportedRankError
from orbit_atlas.lie import (BorelWord, NilElement, RootGroupFactor,
                             TorusElement, adjoint, conjugate_nil,
                             coordinate_letters, fixing_root_groups,
                             generic_unipotent, mat_mul, nil_dim, pos_roots,
                             root_height, torus_weight, unipotent_inverse)

V = LaurentPoly.var


def test_pos_roots_examples():
    assert pos_roots(1) == [(1, 1)]
    assert pos_roots(2) == [(1, 1), (2, 2), (1, 2)]
    r4 = pos_roots(4)
    assert len(r4) == 10
    assert r4[-3:] == [(1, 3), (2, 4), (1, 4)]
    with pytest.raises(UnsupportedRankError):
        pos_roots(5)
    with pytest.raises(UnsupportedRankError):
        pos_roots(0)


def test_coordinate_letters():
    assert coordinate_letters(1) == ["z"]
    assert coordinate_letters(2) == ["x", "y", "z"]
    assert coordinate_letters(4) == list("qrstuvwxyz")


def test_torus_weights_match_worked_examples():
    t2 = TorusElement(2, (V("r"), V("s")))
    assert torus_weight(t2, (1, 1)) == V("r") * V("s") ** -1
    assert torus_weight(t2, (1, 2)) == V("r") ** 2 * V("s")
    t4 = TorusElement(4, (LaurentPoly.const(1),) * 3 + (V("z"),))
    assert torus_weight(t4, (1, 4)) == V("z")


def test_adjoint_single_root_group_on_simple_root():
    x1 = NilElement(2, {(1, 1): 1})
    word = BorelWord(2, None, (RootGroupFactor((2, 2), V("t")),))
    moved = adjoint(word, x1)
    assert moved.coord((1, 1)) == 1
    assert moved.coord((1, 2)) == -V("t")


def test_adjoint_empty_word_is_identity():
    for n in (1, 2, 3, 4):
        x = NilElement(n, {r: i + 1 for i, r in enumerate(pos_roots(n))})
        assert adjoint(BorelWord(n), x).coords == x.coords


def test_adjoint_rank_mismatch():
    with pytest.raises(ShapeError):
        adjoint(BorelWord(2), NilElement(3, {}))


def test_adjoint_matches_rank3_conjugation_display():
    x2 = NilElement(3, {(2, 2): 1})
    word = BorelWord(3, TorusElement(3, (V("r"), V("s"), V("t"))),
                     (RootGroupFactor((1, 1), V("a")),
                      RootGroupFactor((3, 3), V("c"))))
    moved = adjoint(word, x2)
    r, s, t, a, c = (V(x) for x in "rstac")
    assert moved.coord((2, 2)) == s * t ** -1
    assert moved.coord((1, 2)) == a * r * t ** -1
    assert moved.coord((2, 3)) == -(c * r * s ** 2 * t)
    assert moved.coord((1, 3)) == -(a * c * r ** 2 * s * t)


def test_adjoint_generic_unipotent_on_x2():
    u, names = generic_unipotent(4)
    ui = unipotent_inverse(u, 5)
    moved = conjugate_nil(u, ui, NilElement(4, {(2, 2): 1}))
    f = {k: V(k) for k in names}
    assert moved.coord((2, 2)) == 1
    assert moved.coord((1, 2)) == f["f1"]
    assert moved.coord((2, 3)) == -f["f3"]
    assert moved.coord((1, 3)) == -f["f1"] * f["f3"]
    assert moved.coord((2, 4)) == f["f3"] * f["f4"] - f["f7"]
    assert moved.coord((1, 4)) == (f["f1"] * f["f3"] * f["f4"]
                                   - f["f1"] * f["f7"])


def test_fixing_root_groups_examples():
    assert fixing_root_groups(NilElement(2, {(1, 2): 1})) == set(pos_roots(2))
    assert fixing_root_groups(NilElement(2, {(1, 1): 1})) == {(1, 1), (1, 2)}
    for n in (1, 2, 3, 4):
        assert fixing_root_groups(NilElement(n, {})) == set(pos_roots(n))


def _random_word(n, p, rng, length=3):
    torus = TorusElement(n, tuple(Fp(rng.randrange(1, p), p) for _ in range(n)))
    factors = tuple(
        RootGroupFactor(rng.choice(pos_roots(n)), Fp(rng.randrange(p), p))
        for _ in range(length))
    return BorelWord(n, torus, factors)


def _random_nil(n, p, rng):
    return NilElement.from_vector(
        n, [Fp(rng.randrange(p), p) for _ in pos_roots(n)])


def _coords_equal(a, b, n, p):
    for root in pos_roots(n):
        x, y = a.coord(root), b.coord(root)
        x = x if isinstance(x, Fp) else Fp(int(x), p)
        y = y if isinstance(y, Fp) else Fp(int(y), p)
        if x != y:
            return False
    return True


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_action_composition_and_inverse(n):
    p = 101
    rng = random.Random(n)
    for _ in range(50):
        b1 = _random_word(n, p, rng)
        b2 = _random_word(n, p, rng)
        x = _random_nil(n, p, rng)
        g = mat_mul(b1.to_matrix(), b2.to_matrix())
        gi = mat_mul(b2.inverse_matrix(), b1.inverse_matrix())
        composed = conjugate_nil(g, gi, x)
        nested = adjoint(b1, adjoint(b2, x))
        assert _coords_equal(composed, nested, n, p)
        back = conjugate_nil(b1.inverse_matrix(), b1.to_matrix(), adjoint(b1, x))
        assert _coords_equal(back, x, n, p)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_torus_action_is_diagonal(n):
    p = 101
    rng = random.Random(10 + n)
    for _ in range(25):
        t = TorusElement(n, tuple(Fp(rng.randrange(1, p), p) for _ in range(n)))
        x = _random_nil(n, p, rng)
        moved = adjoint(BorelWord(n, t), x)
        for root in pos_roots(n):
            expect = torus_weight(t, root) * x.coord(root)
            got = moved.coord(root)
            got = got if isinstance(got, Fp) else Fp(int(got), p)
            expect = expect if isinstance(expect, Fp) else Fp(int(expect), p)
            assert got == expect


@pytest.mark.parametrize("n", [2, 3, 4])
def test_unipotent_action_raises_height(n):
    p = 101
    rng = random.Random(20 + n)
    for _ in range(25):
        gamma = rng.choice(pos_roots(n))
        x = _random_nil(n, p, rng)
        word = BorelWord(n, None,
                         (RootGroupFactor(gamma, Fp(rng.randrange(p), p)),))
        moved = adjoint(word, x)
        for root in pos_roots(n):
            diff = moved.coord(root) - x.coord(root)
            diff = diff if isinstance(diff, Fp) else Fp(int(diff), p)
            if not diff.is_zero():
                assert root_height(root) > root_height(gamma)


def test_determinant_one():
    from fractions import Fraction
    t = TorusElement(3, (Fraction(2), Fraction(3), Fraction(5)))
    full = t.full_diag()
    prod = Fraction(1)
    for x in full:
        prod *= x
    assert prod == 1
    g = BorelWord(3, t, (RootGroupFactor((1, 2), Fraction(7)),)).to_matrix()
    # upper-triangular determinant = product of the diagonal
    prod = Fraction(1)
    for i in range(4):
        prod *= g[i][i]
    assert prod == 1


def test_nil_element_round_trip_and_dims():
    for n in (1, 2, 3, 4):
        assert nil_dim(n) == len(pos_roots(n))
        x = NilElement(n, {r: i + 1 for i, r in enumerate(pos_roots(n))})
        back = NilElement.from_matrix(n, x.to_matrix())
        assert back.coords == x.coords
        vec = x.as_vector()
        assert NilElement.from_vector(n, vec).coords == x.coords
