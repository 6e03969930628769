import random

import pytest

from polydeg.harness import (
    SUITES,
    brute_positive_vector,
    minimal_word,
    planted_expression,
    random_S_element,
    run_suite,
    su_candidate,
)
from polydeg.poly import Polynomial
from polydeg.sured import SUWitness, s_shape, su_check
from polydeg.worder import Weight, mdeg_w


def test_box_search():
    assert brute_positive_vector([(1, 0), (0, 1)]) is not None
    assert brute_positive_vector([(1, 0), (-1, 0)]) is None


def test_samplers_meet_their_contracts():
    rng = random.Random(0)
    for _ in range(20):
        w = Weight([rng.randint(1, 4) for _ in range(3)])
        F = minimal_word(rng, w)
        assert mdeg_w(F.tuple, w).total == w.total()
        S = random_S_element(rng, w)
        if S is not None:
            assert s_shape(S.tuple, w) is not None


def test_su_candidate_meets_su1():
    x = lambda s: Polynomial.parse(s, 3)
    F = (x("x1 + x2^2"), x("x2"), x("x3 + x1"))
    Q = Polynomial.parse("x1*x2", 2)
    G = su_candidate(F, (1, 2, 3), 1, -1, 1, Q)
    rep = su_check(SUWitness(F, G, Q, 1, -1, 1), Weight([1, 1, 1]))
    assert rep.conditions["SU1"]


def test_planted_expressions_reconstruct():
    rng = random.Random(4)
    for _ in range(10):
        wit = planted_expression(rng, Weight([1, 2]))
        assert wit.reconstruct() == wit.p


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_small_and_deterministic(name):
    a = run_suite(name, 4, seed=5)
    b = run_suite(name, 4, seed=5)
    assert a.ok, a.failures
    assert a.to_json() == b.to_json()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nosuch", 1)
