from hypothesis import given, settings, strategies as st

from polydeg.coeff import QQ
from polydeg.poly import Polynomial, identity_tuple
from polydeg.worder import (
    NEG_INF,
    Gamma,
    Weight,
    deg_w,
    homogeneous_parts,
    initial_form,
    initial_injective,
    initial_tuple,
    is_homogeneous,
    is_permutation_of,
    mdeg_w,
    wedge_deg,
)

W11 = Weight([1, 1])
NAGATA = [
    "x1 - 2*x2*(x2^2 + x1*x3) - x3*(x2^2 + x1*x3)^2",
    "x2 + x3*(x2^2 + x1*x3)",
    "x3",
]


def test_gamma_lex_order():
    assert Gamma((0, 1)) < Gamma((1, -5))
    assert Gamma((1, -5)).is_pos() and not Gamma((0, -1)).is_nonneg()
    assert NEG_INF < Gamma((-100,))
    assert Gamma((2, 3)) + NEG_INF is NEG_INF


def test_degree_examples(P):
    w = Weight([2, 3, 7])
    for i in (1, 2, 3):
        assert deg_w(Polynomial.var(i, 3), w) == w[i - 1]
    assert deg_w(Polynomial.zero(3), w) is NEG_INF
    assert deg_w(P("x1 + x2^3"), Weight([2, 1])) == (3,)


def test_rank_two_degree(P):
    w = Weight([(1, 0), (0, 1)])
    assert deg_w(P("x1 + x2^5"), w) == (1, 0)
    assert initial_form(P("x1 + x2^5"), w) == P("x1", 2)


def test_initial_form_examples(P):
    f = P("x1 + x2^2")
    assert initial_form(f, Weight([2, 1])) == f
    assert initial_form(f, W11) == P("x2^2", 2)
    g = P("x1^3 + x2 + 1")
    h = initial_form(g, W11)
    assert initial_form(h, W11) == h and is_homogeneous(h, W11)


def test_homogeneous_parts_sum(P):
    f = P("x1^3 + x1*x2 + x2 - 4")
    parts = homogeneous_parts(f, W11)
    assert sum(parts.values(), Polynomial.zero(2)) == f
    assert set(parts) == {(3,), (2,), (1,), (0,)}


def test_mdeg_examples(P):
    w = Weight([2, 3, 5])
    md = mdeg_w(identity_tuple(3), w)
    assert md == [2, 3, 5] and md.total == (10,)
    F = [P("x1", 3), P("x2 + x1^2", 3), P("x3 + x1^3", 3)]
    assert mdeg_w(F, Weight([1, 1, 1])) == [1, 2, 3]


def test_nagata_multidegree():
    F = [Polynomial.parse(s, 3) for s in NAGATA]
    assert mdeg_w(F, Weight([1, 1, 1])) == [5, 3, 1]


def test_wedge_examples(P):
    w = Weight([2, 5])
    assert wedge_deg([P("x1", 2), P("x2", 2)], w) == (7,)
    assert wedge_deg([P("x1", 2), P("x1^2", 2)], w) is NEG_INF
    assert wedge_deg([P("x1 + x2^2"), P("x2", 2)], Weight([3, 1])) == (4,)


def test_initial_tuple_examples(P):
    assert initial_tuple(identity_tuple(2), W11) == identity_tuple(2)
    assert initial_tuple([P("x1 + 1", 2), P("x2", 2)], W11) == (P("x1", 2), P("x2", 2))
    got = initial_tuple([P("x1 + x2"), P("x2 + x1^2")], Weight([1, 2]))
    assert got == (P("x2", 2), P("x2 + x1^2"))


def test_initial_injective_examples(P):
    assert initial_injective(identity_tuple(3), Weight([1, 2, 3]))
    assert not initial_injective([P("x1*x2"), P("x1*x2 + 1")], W11)
    assert initial_injective([P("x1 + 2*x2 + 1"), P("x1 - x2")], Weight([3, 3]))


def test_permutation_of():
    assert is_permutation_of([(3,), (1,), (2,)], [(1,), (2,), (3,)])
    assert not is_permutation_of([(1,), (1,)], [(1,), (2,)])


# properties

monos = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(monos, st.integers(-3, 3), min_size=1, max_size=4))
    return Polynomial(2, QQ, terms)


weights = st.lists(st.integers(-3, 5), min_size=2, max_size=2).map(Weight)


@given(polys(), polys(), weights)
def test_degree_of_product(f, g, w):
    # over Q the initial forms are nonzero divisors, so degrees add
    if f.is_zero() or g.is_zero():
        return
    assert deg_w(f * g, w) == deg_w(f, w) + deg_w(g, w)
    assert initial_form(f * g, w) == initial_form(f, w) * initial_form(g, w)


@given(polys(), polys(), weights)
def test_degree_of_sum(f, g, w):
    assert deg_w(f + g, w) <= max(deg_w(f, w), deg_w(g, w))


@settings(max_examples=60)
@given(polys(), polys(), st.lists(st.integers(1, 5), min_size=2, max_size=2).map(Weight))
def test_wedge_bounded_by_degree_sum(f, g, w):
    wd = wedge_deg([f, g], w)
    if wd is not NEG_INF:
        assert wd <= deg_w(f, w) + deg_w(g, w)
