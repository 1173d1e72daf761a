import pytest

from splitcat import errors
from splitcat.adjunction import (
    adjunction_report,
    check_naturality,
    check_psi_lawful,
    i_star,
    identity_restriction_violations,
    left_homset,
    phi,
    psi,
    psi_restriction_violations,
    right_homset,
    roundtrip_phi_psi,
    roundtrip_psi_phi,
    serialize_report,
    setting,
)
from splitcat.ambient import Atom, Sub
from splitcat.enriched import enumerate_enriched_functors
from splitcat.fixtures import ADJUNCTION_SET, ENRICHED, idem_monoid, trivial, two_object
from splitcat.inter_functor import inter, inter_of_functor
from splitcat.internal import identity_functor
from splitcat.setcats import twisted_clifford

one, e, x = Atom("1"), Atom("e"), Atom("x")

# hom-set sizes, counted independently in test_counts_match_plain_enumeration
SIZES = {"trivial": 1, "interval": 3, "two-object": 4, "idem-monoid": 3, "z2": 2}


@pytest.fixture(scope="module")
def settings_by_name():
    return {name: setting(ENRICHED[name]()) for name in ENRICHED}


def test_psi_of_identity():
    st = setting(idem_monoid())
    G = psi(identity_functor(st.A), st)
    assert G.obj[x] == st.IB.object_elem(x, one) == i_star(st.IB, x)
    for m in (one, e):
        assert G(x, x, m) == Sub(st.IB.arrow_elem(x, x, one, m, one))


@pytest.mark.parametrize("name", sorted(ENRICHED))
def test_hom_set_sizes(name, settings_by_name):
    st = settings_by_name[name]
    rep = adjunction_report(st)
    assert len(rep.left) == len(rep.right) == SIZES[name]
    assert rep.bijective


@pytest.mark.parametrize("name", sorted(ENRICHED))
def test_counts_match_plain_enumeration(name, settings_by_name):
    # left side: every internal functor, filtered for split preservation by hand;
    # right side: enumerated against the underlying dict oracle
    from oracles import count_functors, enriched_as_dicts
    from splitcat.internal import check_split_preserving, enumerate_internal_functors
    st = settings_by_name[name]
    every = enumerate_internal_functors(st.IB.category, st.A)
    keep = [F for F in every
            if check_split_preserving(F, st.IB.category, st.A, st.IB.split, st.splitA)]
    assert len(keep) == SIZES[name]
    assert count_functors(enriched_as_dicts(st.M), enriched_as_dicts(st.enA)) == SIZES[name]


@pytest.mark.parametrize("name", sorted(ENRICHED))
def test_psi_injective_and_lawful(name, settings_by_name):
    st = settings_by_name[name]
    left = left_homset(st)
    images = [psi(F, st) for F in left]
    assert all(check_psi_lawful(F, st) for F in left)
    assert all(not (images[i] == images[j])
               for i in range(len(images)) for j in range(i))


@pytest.mark.parametrize("name", ADJUNCTION_SET)
def test_round_trips(name, settings_by_name):
    st = settings_by_name[name]
    assert roundtrip_psi_phi(st)
    assert roundtrip_phi_psi(st)


def test_phi_of_the_evident_functor():
    st = setting(idem_monoid())
    A, R, S = st.A, st.splitA.R, st.splitA.S
    F = psi(identity_functor(st.A), st)
    G = phi(F, st)
    # for the arrow (e, e, 1), as the composite R(F e) . F e . S(F 1)
    x_e = st.IB.arrow_elem(x, x, e, e, one)
    Fe, F1 = F(x, x, e).inner, F(x, x, one).inner
    assert G.F1(x_e) == A.compose(R(Sub(Fe)), A.compose(Fe, S(Sub(F1))))
    assert G == identity_functor(st.A)


@pytest.mark.parametrize("name", sorted(ENRICHED))
def test_identity_restriction(name, settings_by_name):
    st = settings_by_name[name]
    for F in right_homset(st):
        assert identity_restriction_violations(F, st) == []
    for F in left_homset(st):
        assert psi_restriction_violations(F, st) == []


def test_two_object_into_idem_monoid_inter():
    M = two_object()
    IB = inter(idem_monoid())
    st = setting(M, IB.category, IB.split)
    rep = adjunction_report(st)
    # the only isomorphisms in the splitting category of {1,e} are identities
    assert len(rep.left) == len(rep.right) == 2
    assert rep.bijective
    assert roundtrip_psi_phi(st) and roundtrip_phi_psi(st)


def test_naturality_identities():
    st = setting(idem_monoid())
    u = next(F for F in enumerate_enriched_functors(st.M, st.M)
             if all(F(x, x, m) == m for m in (one, e)))
    assert check_naturality(st, st, u, identity_functor(st.A))


def test_naturality_collapse():
    M2, M = idem_monoid(), trivial()
    (u,) = enumerate_enriched_functors(M2, M)
    IM2, IM = inter(M2), inter(M)
    v = inter_of_functor(u, M2, M, IM2, IM)
    st = setting(M, IM2.category, IM2.split)       # inter(trivial) -> inter({1,e})
    st2 = setting(M2, IM.category, IM.split)       # inter({1,e}) -> inter(trivial)
    assert check_naturality(st, st2, u, v)


def test_non_canonical_target_rejected():
    A, _, twisted = twisted_clifford()
    st = setting(idem_monoid(), A, twisted)
    assert st.canonical_problems()
    F = right_homset(st)[0]
    with pytest.raises(errors.NotCanonicalSplit):
        phi(F, st)
    # the diagnostic route still runs
    phi(F, st, require_canonical=False)


def test_setting_needs_split():
    with pytest.raises(ValueError):
        setting(idem_monoid(), inter(trivial()).category)


def test_report_text():
    st = setting(trivial())
    text = serialize_report(adjunction_report(st), st)
    assert text.splitlines()[0] == "adjunction-report"
    assert "psi L0->R0" in text and "phi R0->L0" in text
    assert text.endswith("bijection yes\n")


def test_diagnosis_on_canonical_split_is_clean():
    from splitcat.adjunction import diagnose_split
    d = diagnose_split(setting(idem_monoid()))
    assert d.bijective and d.canonicalProblems == []


def test_diagnosis_twisted_split_keeps_bijection():
    # failing only the interaction condition does not break these hom-sets
    from splitcat.adjunction import diagnose_split
    A, _, twisted = twisted_clifford()
    for name in ("trivial", "idem-monoid", "two-object"):
        d = diagnose_split(setting(ENRICHED[name](), A, twisted))
        assert d.canonicalProblems and d.bijective


def test_diagnosis_permuted_identity_split_breaks_bijection():
    from splitcat.adjunction import diagnose_split
    from splitcat.setcats import finord_internal, permuted_identity_split
    A, split = finord_internal()
    R = {s.inner: split.R(s) for s in split.idemObj.obj}
    S = {s.inner: split.S(s) for s in split.idemObj.obj}
    bad = permuted_identity_split(A, R, S)
    # right: a functor from the one-arrow category picks one of 3 objects;
    # left: the object 3 is excluded since its identity no longer splits through itself
    d = diagnose_split(setting(trivial(), A, bad))
    assert (d.leftSize, d.rightSize) == (2, 3)
    assert d.failures["phi-not-split-preserving"] == 1
    assert not d.bijective
    # right: an object n and an idempotent of n -> n, so 1 + 3 + 10 choices
    d = diagnose_split(setting(idem_monoid(), A, bad))
    assert (d.leftSize, d.rightSize) == (4, 14)
    assert d.failures["psi-phi-not-identity"] == 9
