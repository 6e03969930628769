import pytest
from hypothesis import given, settings, strategies as st

from polydeg.autmap import Affine, AutWord, Elementary, random_tame
from polydeg.coeff import QQ, mod_ring, prime_field
from polydeg.errors import NotAField, PreconditionFailed
from polydeg.poly import Polynomial, identity_tuple
from polydeg.tamecert import (
    analyze,
    chain_realize,
    cw_witness,
    factor_min_degree,
    in_cw,
    lem73_conditions,
    proportional_power,
    realize,
    realize_2var,
    realize_final3,
    realize_ascending,
    realize_lem73,
    realize_sc,
    realize_small,
    realize_thm72,
    realize_vdk3,
    small_degree_window,
    thm72_conditions,
)
from polydeg.worder import Weight, deg_w, mdeg_w

RINGS = [QQ, prime_field(5), mod_ring(4), mod_ring(6)]
W111 = Weight([1, 1, 1])


def P(text, n=3, ring=QQ):
    return Polynomial.parse(text, n, ring)


def assert_cross_ring(cert):
    for R in RINGS:
        other = cert.over(R)
        assert other.ok, (R, other.checks)
        assert mdeg_w(other.word.tuple, cert.w) == cert.target


def test_cw_examples():
    c = cw_witness(6, Weight([2, 3]))
    assert c.coordinate == P("x2 + x1^3", 2) and deg_w(c.coordinate, Weight([2, 3])) == (6,)
    assert cw_witness(2, Weight([2, 3])).coordinate == P("x1", 2)
    assert cw_witness(1, Weight([2, 3])) is None
    # the witness word really has the coordinate as a component
    assert c.coordinate in c.word.tuple


def test_factor_examples():
    F = [P("x1"), P("x3 + x1^2"), P("x2 + x1^3")]
    cert = factor_min_degree(F, Weight([1, 3, 2]))
    assert cert.word.tuple == tuple(F) and cert.ok
    assert len(factor_min_degree(identity_tuple(3), W111).word) == 0
    A = [P("2*x1 + x2"), P("x2 + 1"), P("x3 - x1")]
    word = factor_min_degree(A, Weight([2, 2, 2])).word
    assert len(word) == 1 and isinstance(word.generators[0], Affine)


def test_factor_preconditions():
    F = [P("x1"), P("x2 + x1^2"), P("x3")]
    with pytest.raises(PreconditionFailed):
        factor_min_degree(F, W111)
    with pytest.raises(NotAField):
        factor_min_degree(identity_tuple(3, mod_ring(4)), W111)
    # the Nagata map is not a composition of affine and elementary maps of minimal degree
    with pytest.raises(PreconditionFailed):
        factor_min_degree([P("x1 - 2*x2*(x2^2 + x1*x3) - x3*(x2^2 + x1*x3)^2"),
                           P("x2 + x3*(x2^2 + x1*x3)"), P("x3")], W111)


def test_two_variable_examples():
    w = Weight([1, 1])
    assert realize_2var([1, 1], w).word.tuple == identity_tuple(2)
    assert realize_2var([1, 2], w).word.tuple == (P("x1", 2), P("x2 + x1^2", 2))
    cert = realize_2var([2, 4], Weight([1, 2]))
    assert cert.ok and mdeg_w(cert.word.tuple, Weight([1, 2])) == [2, 4]
    # neither entry divides the other: no automorphism of the plane has this multidegree
    assert realize_2var([2, 3], w) is None


def test_realize_vdk3_matches_two_variable():
    a = realize_vdk3(Weight([1, 1]), [1, 2]).word.tuple
    assert a == realize_2var([1, 2], Weight([1, 1])).word.tuple
    cert = realize_vdk3(Weight([1, 1, 2]), [1, 3, 2])
    assert cert.ok and cert.word.tuple[2] == P("x3")
    with pytest.raises(PreconditionFailed):
        realize_vdk3(Weight([1, 1, 2]), [1, 3, 3])


def test_proportional_power_and_analyze():
    w = Weight([1, 1])
    assert proportional_power(P("3*x1^4", 2), P("x1^2", 2), w) == 2
    assert proportional_power(P("x1^4 + x2", 2), P("x1^2", 2), w) is None
    info = analyze([P("x1"), P("x2 + x1^2"), P("x3")], W111)
    assert info["proportional"] == {"i": 2, "u": 2}
    assert info["mdeg"] == [[1], [2], [1]]


def test_chain_examples():
    cert = chain_realize(None, (1, 2, 3), (1, 2, 3), 3, [1, 2, 3], [1, 1, 1], W111)
    assert cert.ok and mdeg_w(cert.word.tuple, W111) == [1, 2, 3]
    assert_cross_ring(cert)
    same = chain_realize(None, (1, 2, 3), (1, 2, 3), 0, [1, 1, 1], [1, 1, 1], W111)
    assert same.word.tuple == identity_tuple(3)
    perm = chain_realize(None, (2, 3, 1), (1, 2, 3), 3, [1, 1, 1], [1, 1, 1], W111)
    assert len(perm.info["steps"]) == 3 and all(s["alpha"] == 0 for s in perm.info["steps"])


def test_chain_preconditions():
    # with r = 2 the third entries 3 and 1 must agree
    with pytest.raises(PreconditionFailed):
        chain_realize(None, (1, 2, 3), (1, 2, 3), 2, [1, 2, 3], [1, 1, 1], W111)
    with pytest.raises(PreconditionFailed):
        chain_realize(None, (1, 2, 3), (1, 2, 3), 3, [1, 2, 3], [1, 1, 2], W111)


def test_thm72_example():
    cert = realize_thm72([2, 3, 5], W111)
    assert thm72_conditions([2, 3, 5], W111)["a"]
    assert cert.ok and mdeg_w(cert.word.tuple, W111) == [2, 3, 5]
    assert_cross_ring(cert)
    assert realize_thm72([1, 1, 1], W111).word.tuple == identity_tuple(3)


def test_lem73_example():
    w = Weight([1, 2, 3])
    assert all(lem73_conditions([2, 4, 6], w, 2, 2, 2).values())
    cert = realize_lem73([2, 4, 6], w, 2, 2, 2)
    assert mdeg_w(cert.word.tuple, w) == [2, 4, 6]
    assert_cross_ring(cert)
    assert mdeg_w(realize_final3([2, 4, 6], w).word.tuple, w) == [2, 4, 6]


def test_realize_sc_examples():
    cert = realize_sc([1, 2, 1], W111)
    assert cert.word.tuple == (P("x1"), P("x2 + x1^2"), P("x3"))
    perm = realize_sc([2, 1, 3], Weight([1, 2, 3]))
    assert perm.word.tuple == (P("x2"), P("x1"), P("x3"))
    assert perm.fixed == (3,) and perm.ok


def test_small_and_window():
    assert small_degree_window([1, 1, 5], W111)
    assert not small_degree_window([2, 2, 3], W111)
    cert = realize_small([2, 2, 3], W111)
    assert mdeg_w(cert.word.tuple, W111) == [2, 2, 3]


@pytest.mark.parametrize("d", [[1, 2, 3], [1, 2, 3, 4], [1, 1, 2, 3, 5], [2, 3, 5, 8, 13]])
def test_ascending_chains(d):
    cert = realize_ascending(d)
    assert mdeg_w(cert.word.tuple, Weight([1] * len(d))) == d
    assert_cross_ring(cert)


def test_ascending_precondition():
    with pytest.raises(PreconditionFailed):
        realize_ascending([2, 3])


def test_dispatcher():
    assert realize([2, 3, 5], W111).kind == "realize_thm72"
    assert realize([1, 2], Weight([1, 1])).kind == "realize_2var"
    assert realize([1, 2, 1], W111, fix_last=True).kind == "realize_sc"
    assert realize([2, 3, 5], W111, method="small").kind == "realize_small"


def test_certificate_json():
    data = realize_thm72([2, 3, 5], W111).to_json()
    assert data["checks"]["mdeg"] and data["target"] == [[2], [3], [5]]
    word = AutWord.from_json(data["word"], 3, QQ)
    assert [str(f) for f in word.tuple] == data["tuple"]


def test_certificate_detects_tampering():
    cert = realize_thm72([2, 3, 5], W111)
    cert.target = ((2,), (3,), (6,))
    assert not cert.verify()["mdeg"]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), st.lists(st.integers(1, 5), min_size=3, max_size=3))
def test_component_degrees_are_coordinate_degrees(seed, length, w):
    # every coordinate of a tame map has degree in C(w) or equal to some w_i
    F = random_tame(3, QQ, length, seed=seed, verify=False,
                    kinds={"elem": 5, "perm": 1})
    w = Weight(w)
    for f in F.tuple:
        assert in_cw(deg_w(f, w), w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.lists(st.integers(1, 4), min_size=3, max_size=3))
def test_factor_recomposes(seed, w):
    from polydeg.harness import minimal_word
    import random

    w = Weight(w)
    F = minimal_word(random.Random(seed), w)
    cert = factor_min_degree(F.tuple, w)
    assert cert.word.tuple == F.tuple
    assert all(isinstance(g, (Affine, Elementary)) for g in cert.word.generators)
