from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polydeg.autmap import (
    Affine,
    AutWord,
    CaseA,
    CaseB,
    Elementary,
    Permutation,
    compose,
    covering_index,
    elementary,
    in_E_w,
    invert,
    jacobian_is_unit_constant,
    nonempty_subsets,
    random_tame,
    thm11_dichotomy,
    thm11_sets,
)
from polydeg.coeff import QQ, mod_ring, prime_field
from polydeg.errors import PreconditionFailed
from polydeg.poly import Polynomial, identity_tuple
from polydeg.worder import Weight, mdeg_w


def P(text, n=3, ring=QQ):
    return Polynomial.parse(text, n, ring)


def word(n, *gens, ring=QQ):
    return AutWord(n, ring, gens)


def test_compose_identity_and_inverse_pair():
    F = random_tame(3, QQ, 4, seed=3)
    assert compose(F, AutWord.identity(3, QQ)).tuple == F.tuple
    pair = word(2, elementary(2, 1, "x1^2", 2), elementary(2, 1, "-x1^2", 2))
    assert pair.tuple == identity_tuple(2)


def test_generator_semantics():
    E = elementary(2, 1, "x1^2", 3)
    assert word(3, E).tuple == (P("x1"), P("x2 + x1^2"), P("x3"))
    S = Permutation((2, 3, 1), QQ)
    assert word(3, S).tuple == (P("x2"), P("x3"), P("x1"))
    A = Affine([[1, 1, 0], [0, 1, 0], [0, 0, 2]], [1, 0, 0], QQ)
    assert word(3, A).tuple == (P("x1 + x2 + 1"), P("x2"), P("2*x3"))


def test_invert_examples():
    assert invert(AutWord.identity(3, QQ)).tuple == identity_tuple(3)
    inv = Elementary(1, 2, P("x2", 2)).inverse()
    assert inv.a == Fraction(1, 2) and inv.p == P("-1/2*x2", 2)
    F = random_tame(3, QQ, 5, seed=11)
    assert compose(F, invert(F)).is_identity()
    assert compose(invert(F), F).is_identity()


def test_generator_preconditions():
    with pytest.raises(ValueError):
        Elementary(1, 1, P("x1 + x2"))
    with pytest.raises(PreconditionFailed):
        Elementary(1, 2, P("x2", 3, mod_ring(4)))
    with pytest.raises(ValueError):
        Permutation((1, 1, 2), QQ)
    with pytest.raises(PreconditionFailed):
        Affine([[1, 1], [1, 1]], [0, 0], QQ)


def test_json_round_trip():
    F = random_tame(3, QQ, 6, seed=5)
    G = AutWord.from_json(F.to_json(), 3, QQ)
    assert G.tuple == F.tuple


def test_in_E_w():
    w = Weight([1, 1, 1])
    assert in_E_w(AutWord.identity(3, QQ), w)
    Z4 = mod_ring(4)
    # f_1 = x1 + 2*x2^2 has initial form 2*x2^2, killed by 2
    bad = word(3, elementary(1, 1, P("2*x2^2", 3, Z4)), ring=Z4)
    assert not in_E_w(bad, w)
    good = word(3, elementary(1, 1, P("x2^2", 3, Z4)), ring=Z4)
    assert in_E_w(good, w)


def test_thm11_identity_sets():
    # 7 = 2*2 + 3, so the third index lies in I0 for w = (2,3,7)
    J, I0 = thm11_sets(identity_tuple(3), (1, 2, 3), Weight([2, 3, 7]))
    assert J == [1, 2, 3] and I0 == [3]
    J, I0 = thm11_sets(identity_tuple(3), (1, 2, 3), Weight([3, 4, 5]))
    assert I0 == []


def test_thm11_empty_J():
    F = (P("x1 + x3"), P("x2 + x3"), P("x3 + x1*x2"))
    J, I0 = thm11_sets(F, (1, 2), Weight([1, 1, 1]))
    assert J == [] and I0 == [1, 2]


def test_thm11_examples():
    w = Weight([2, 3, 7])
    assert thm11_dichotomy(identity_tuple(3), (1, 2), w) == CaseA({1: 1, 2: 2})
    F = (P("x1"), P("x2 + x1^2"), P("x3"))
    assert thm11_dichotomy(F, (1, 2, 3), Weight([1, 1, 1])) == CaseB(2)
    G = (P("x1 + x2", 2), P("x2", 2))
    assert thm11_dichotomy(G, (1, 2), Weight([1, 1])) == CaseA({1: 1, 2: 2})


def test_covering_index():
    F = (P("x1"), P("x2 + x1^2"), P("x3"))
    assert covering_index(F, Weight([1, 1, 1])) == 1
    assert covering_index(identity_tuple(3), Weight([2, 3, 7])) == 3


def test_random_tame_determinism():
    a = random_tame(3, QQ, 6, seed=42)
    b = random_tame(3, QQ, 6, seed=42)
    assert a.to_json() == b.to_json() and a.tuple == b.tuple
    assert random_tame(3, QQ, 0).is_identity()


@pytest.mark.parametrize("ring", [QQ, prime_field(5)])
def test_random_words_are_automorphisms(ring):
    for seed in range(10):
        F = random_tame(3, ring, 6, seed=seed)
        assert F.verify()
        assert jacobian_is_unit_constant(F)


def test_nonempty_subsets():
    assert len(list(nonempty_subsets(3))) == 7


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6),
       st.lists(st.integers(1, 6), min_size=3, max_size=3))
def test_dichotomy_property(seed, length, w):
    F = random_tame(3, QQ, length, seed=seed, verify=False)
    w = Weight(w)
    for I in nonempty_subsets(3):
        assert isinstance(thm11_dichotomy(F.tuple, I, w), (CaseA, CaseB))
    if mdeg_w(F.tuple, w).total > w.total():
        assert covering_index(F.tuple, w) is not None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 5))
def test_inverse_property(seed, length):
    F = random_tame(3, QQ, length, seed=seed, verify=False)
    assert compose(F, F.invert()).is_identity()
