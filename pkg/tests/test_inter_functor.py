import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import inter_triples, karoubi_arrows
from splitcat.ambient import Atom, Sub, untriple
from splitcat.enriched import compose_functors, enumerate_enriched_functors
from splitcat.fixtures import ENRICHED, idem_monoid, trivial, two_object, z2
from splitcat.generators import GenConfig, gen_enriched
from splitcat.inter_functor import (
    alpha,
    idem_carrier,
    inter,
    inter_objects,
    inter_of_functor,
    invariant_violations,
    triple_equalizer_blocks,
    verify_triple_equalizer_iso,
)
from splitcat.internal import (
    canonical_violations,
    check_functor,
    check_internal,
    compose_functors as compose_internal,
    identity_functor,
    split_violations,
)
from splitcat.plaincat import karoubi, underlying_category

one, e, x = Atom("1"), Atom("e"), Atom("x")


def carrier(M, a):
    return [s.inner for s in idem_carrier(M, a).obj]


def test_idempotent_carriers():
    assert carrier(trivial(), x) == [one]
    assert carrier(idem_monoid(), x) == [one, e]
    assert carrier(z2(), x) == [one]


def test_object_counts():
    assert len(inter_objects(trivial())) == 1
    assert len(inter_objects(idem_monoid())) == 2
    assert len(inter_objects(two_object())) == 2


def _triples(IB):
    return [IB.decode_arrow(a)[2:] for a in IB.arrowObj]


def test_idem_monoid_arrows():
    IB = inter(idem_monoid())
    got = sorted((q.name, m.name, p.name) for q, m, p in _triples(IB))
    assert got == [("1", "1", "1"), ("1", "e", "1"), ("1", "e", "e"),
                   ("e", "e", "1"), ("e", "e", "e")]


def _monoid_mul(M):
    a = M.objs[0]
    return list(M.hom[(a, a)]), (lambda g, f: M.compose(a, a, a, g, f))


@pytest.mark.parametrize("name", ["trivial", "idem-monoid", "z2"])
def test_arrows_match_brute_force_filter(name):
    M = ENRICHED[name]()
    els, mul = _monoid_mul(M)
    assert sorted(map(repr, _triples(inter(M)))) == sorted(
        repr(t) for t in inter_triples(els, mul))


def test_alpha_values():
    M = idem_monoid()
    al = alpha(M, x, x)
    from splitcat.ambient import triple
    for m in M.hom[(x, x)]:
        assert al(triple(Sub(one), m, Sub(one))) == m
    assert al(triple(Sub(e), one, Sub(e))) == e
    # alpha is idempotent when fed back through its middle slot
    for t in al.dom:
        q, _, p = untriple(t)
        assert al(triple(q, al(t), p)) == al(t)


def test_composition_example():
    IB = inter(idem_monoid())
    A = IB.category
    outer = IB.arrow_elem(x, x, e, e, one)
    inner = IB.arrow_elem(x, x, one, e, one)
    assert A.compose(outer, inner) == outer
    ident_1 = IB.arrow_elem(x, x, one, one, one)
    assert A.compose(ident_1, ident_1) == ident_1


def test_split_example():
    IB = inter(idem_monoid())
    A, R, S = IB.category, IB.split.R, IB.split.S
    u = Sub(IB.arrow_elem(x, x, one, e, one))
    assert S(u) == IB.arrow_elem(x, x, one, e, e)
    assert R(u) == IB.arrow_elem(x, x, e, e, one)
    assert A.compose(S(u), R(u)) == u.inner
    assert A.compose(R(u), S(u)) == IB.arrow_elem(x, x, e, e, e) == A.ident(IB.object_elem(x, e))


@pytest.mark.parametrize("name", sorted(ENRICHED))
def test_fixture_inter_lawful(name):
    IB = inter(ENRICHED[name]())
    A = IB.category
    assert check_internal(A)
    assert not split_violations(A, IB.split.R, IB.split.S)
    assert not canonical_violations(A, IB.split.R, IB.split.S)
    assert not invariant_violations(IB)
    assert verify_triple_equalizer_iso(IB.M)


@given(st.integers(0, 10 ** 6))
def test_generated_inter_lawful(seed):
    M = gen_enriched(GenConfig(seed, maxObjects=3, maxHomSize=3))
    IB = inter(M)
    A = IB.category
    assert check_internal(A)
    assert not split_violations(A, IB.split.R, IB.split.S)
    assert not canonical_violations(A, IB.split.R, IB.split.S)
    assert not invariant_violations(IB)


def test_canon_b_reading_fails_on_idem_monoid():
    IB = inter(idem_monoid())
    assert canonical_violations(IB.category, IB.split.R, IB.split.S, mode="canon-b")


def test_cross_blocks_of_the_literal_equalizer_vanish():
    blocks = triple_equalizer_blocks(two_object())
    xx, yy = Atom("x"), Atom("y")
    assert blocks[(xx, yy)] == 0 and blocks[(yy, xx)] == 0
    assert blocks[(xx, xx)] == 1 and blocks[(yy, yy)] == 1


def test_triple_equalizer_budget():
    from splitcat.errors import SizeBudgetExceeded
    with pytest.raises(SizeBudgetExceeded):
        verify_triple_equalizer_iso(idem_monoid(), budget=2)


@given(st.integers(0, 10 ** 6))
def test_one_object_arrow_count_matches_karoubi(seed):
    M = gen_enriched(GenConfig(seed, maxObjects=1, maxHomSize=4, maxArrows=4))
    els, mul = _monoid_mul(M)
    assert len(inter(M).arrowObj) == len(karoubi(underlying_category(M)).arrows)
    assert len(inter(M).arrowObj) == len(karoubi_arrows(els, mul))


# -- on functors -----------------------------------------------------------------

def test_identity_goes_to_identity():
    M = idem_monoid()
    IM = inter(M)
    I = enumerate_enriched_functors(M, M)
    ident = next(F for F in I if all(F(x, x, m) == m for m in M.hom[(x, x)]))
    assert inter_of_functor(ident, M, M, IM, IM) == identity_functor(IM.category)


def test_collapse_to_trivial():
    M, T = idem_monoid(), trivial()
    (F,) = enumerate_enriched_functors(M, T)
    G = inter_of_functor(F, M, T)
    assert len(G.F1.dom) == 5 and len(set(G.F1.table)) == 1
    assert check_functor(G, inter(M).category, inter(T).category)


@pytest.mark.parametrize("a,b,c", [
    ("idem-monoid", "idem-monoid", "trivial"),
    ("interval", "two-object", "idem-monoid"),
    ("z2", "idem-monoid", "idem-monoid"),
    ("two-object", "two-object", "interval"),
])
def test_inter_preserves_composition(a, b, c):
    L, M, N = ENRICHED[a](), ENRICHED[b](), ENRICHED[c]()
    IL, IM, IN = inter(L), inter(M), inter(N)
    for F, G in itertools.product(enumerate_enriched_functors(L, M),
                                  enumerate_enriched_functors(M, N)):
        lhs = inter_of_functor(compose_functors(G, F), L, N, IL, IN)
        rhs = compose_internal(inter_of_functor(G, M, N, IM, IN),
                               inter_of_functor(F, L, M, IL, IM))
        assert lhs == rhs
