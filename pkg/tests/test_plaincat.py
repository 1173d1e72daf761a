from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import karoubi_arrows, monoid_idempotents
from splitcat import errors
from splitcat.ambient import Atom, untriple
from splitcat.fixtures import idem_monoid_plain
from splitcat.generators import GenConfig, gen_plain
from splitcat.plaincat import (
    FinCat,
    SplitWitness,
    all_splits,
    category_violations,
    check_category,
    idempotents,
    karoubi,
    karoubi_split,
    monoid_category,
    split_comparison,
    splits,
    verify_split_equalizer,
)
from splitcat.setcats import clifford_monoid, finord

one, e, s = Atom("1"), Atom("e"), Atom("s")


def z2():
    table = {(x, y): (s if (x == s) != (y == s) else one) for x in (one, s) for y in (one, s)}
    return monoid_category((one, s), table, one)


def test_one_arrow_category_lawful():
    C = monoid_category((one,), {(one, one): one}, one)
    assert check_category(C)


def test_corrupted_table_rejected():
    C = idem_monoid_plain()
    comp = dict(C.comp)
    comp[(one, e)] = one
    bad = FinCat(C.objects, C.arrows, C.dom, C.cod, comp, C.idents)
    problems = category_violations(bad)
    assert problems and not check_category(bad)
    assert any("e" in p for p in problems)


def test_idempotents_of_small_monoids():
    assert idempotents(idem_monoid_plain()) == [one, e]
    assert idempotents(z2()) == [one]


def test_karoubi_of_idem_monoid():
    K = karoubi(idem_monoid_plain())
    assert K.objects == (one, e)
    assert len(K.arrows) == 5
    breakdown = {(a, b): sorted(untriple(f)[1].name for f in K.hom(a, b))
                 for a in K.objects for b in K.objects}
    assert breakdown == {(one, one): ["1", "e"], (one, e): ["e"], (e, one): ["e"], (e, e): ["e"]}
    assert check_category(K)


def _monoid_data(C):
    return list(C.arrows), (lambda g, f: C.comp[(g, f)])


@pytest.mark.parametrize("build", [idem_monoid_plain, z2, clifford_monoid])
def test_karoubi_matches_brute_force(build):
    C = build()
    els, mul = _monoid_data(C)
    assert list(karoubi(C).objects) == monoid_idempotents(els, mul)
    got = sorted(map(repr, (untriple(f) for f in karoubi(C).arrows)))
    assert got == sorted(map(repr, karoubi_arrows(els, mul)))


@given(st.integers(0, 10 ** 6))
def test_karoubi_count_is_sum_over_idempotent_pairs(seed):
    C = gen_plain(GenConfig(seed, maxObjects=3, maxHomSize=3))
    K = karoubi(C)
    want = sum(1 for d in idempotents(C) for x in idempotents(C)
               for f in C.hom(C.dom[x], C.dom[d]) if C.comp[(d, C.comp[(f, x)])] == f)
    assert len(K.arrows) == want
    assert check_category(K)


def test_karoubi_rejects_unlawful():
    C = idem_monoid_plain()
    comp = dict(C.comp)
    comp[(one, e)] = one
    with pytest.raises(errors.NotACategory):
        karoubi(FinCat(C.objects, C.arrows, C.dom, C.cod, comp, C.idents))


def test_split_of_e_goes_through_object_e():
    K = karoubi(idem_monoid_plain())
    f = next(x for x in K.hom(one, one) if untriple(x)[1] == e)
    w = karoubi_split(K, f)
    assert w.mid == e
    assert splits(K, w, f) and verify_split_equalizer(K, w, f)


def test_identity_splits_through_itself():
    K = karoubi(idem_monoid_plain())
    for x in K.objects:
        i = K.idents[x]
        w = karoubi_split(K, i)
        assert w == SplitWitness(x, i, i)
        assert verify_split_equalizer(K, w, i)


@given(st.integers(0, 10 ** 6))
def test_every_idempotent_of_a_splitting_category_splits(seed):
    K = karoubi(gen_plain(GenConfig(seed, maxObjects=2, maxHomSize=3)))
    for u in idempotents(K):
        w = karoubi_split(K, u)
        assert splits(K, w, u)
        assert verify_split_equalizer(K, w, u)


def test_karoubi_split_rejects_non_idempotent():
    K = karoubi(z2())
    g = next(x for x in K.arrows if untriple(x)[1] == s)
    with pytest.raises(errors.NotIdempotent):
        karoubi_split(K, g)


def test_swapped_retraction_and_section_fail():
    # in FinOrd, the idempotent 2 -> 2 that is constant at 0 splits through 1;
    # swapping r and s does not even typecheck as a split
    C = finord((1, 2))
    u = Atom("2.2.00")
    w = all_splits(C, u)[0]
    assert verify_split_equalizer(C, w, u)
    swapped = SplitWitness(w.mid, w.section, w.retraction)
    assert not splits(C, swapped, u)
    assert not verify_split_equalizer(C, swapped, u)


def test_splits_are_unique_up_to_unique_iso():
    C = karoubi(clifford_monoid())
    for u in idempotents(C):
        found = all_splits(C, u)
        assert found
        for w1 in found:
            for w2 in found:
                assert split_comparison(C, w1, w2) is not None


def test_all_splits_counts_automorphisms():
    # the idempotent g of the Clifford monoid splits through g in two ways (g and t)
    K = karoubi(clifford_monoid())
    h = next(x for x in K.arrows if untriple(x) == (Atom("f"), Atom("g"), Atom("f")))
    mids = Counter(w.mid for w in all_splits(K, h))
    assert mids[Atom("g")] == 2
