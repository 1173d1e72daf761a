"""The hom-set bijection between internal functors ``inter(M) -> A`` and
enriched functors ``M -> en'(A)``.

``A`` always travels with a chosen split; nothing here re-splits it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ambient import FinMap, FinObj, Sub, factor_through_mono
from .en_functor import en, en_of_functor
from .enriched import (
    EnrichedCat,
    EnrichedFunctor,
    check_enriched_functor,
    compose_functors as compose_enriched,
    enumerate_enriched_functors,
)
from .errors import NotCanonicalSplit, NotComposable, NotFactorable
from .inter_functor import InterBuild, bracket_iota_star, inter, inter_of_functor, nu
from .internal import (
    InternalCat,
    InternalFunctor,
    SplitData,
    canonical_violations,
    check_functor,
    check_split_preserving,
    compose_functors as compose_internal,
    enumerate_split_preserving_functors,
    functor_idem_restriction,
)
from .search import Budget, DEFAULT_BUDGET
from .ambient import format_elem


@dataclass
class Setting:
    """``M`` with ``inter(M)`` on one side, ``A`` with its split and ``en'(A)`` on the other."""

    M: EnrichedCat
    A: InternalCat
    splitA: SplitData
    IB: InterBuild = None
    enA: EnrichedCat = None
    mode: str = "canon-a"
    _canonical: list = field(default=None, repr=False)

    def __post_init__(self):
        if self.IB is None:
            self.IB = inter(self.M)
        if self.enA is None:
            self.enA = en(self.A)

    def canonical_problems(self):
        if self._canonical is None:
            self._canonical = canonical_violations(self.A, self.splitA.R, self.splitA.S,
                                                   self.mode, limit=3)
        return self._canonical


def setting(M, A=None, splitA=None, mode="canon-a") -> Setting:
    """With ``A`` omitted the target is ``inter(M)`` with its own split."""
    IB = inter(M)
    if A is None:
        return Setting(M, IB.category, IB.split, IB, mode=mode)
    if splitA is None:
        raise ValueError("a target internal category needs an explicit split")
    return Setting(M, A, splitA, IB, mode=mode)


def i_star(IB: InterBuild, a):
    """The object of ``inter(M)`` picked out by the identity of ``a``."""
    return IB.object_elem(a, IB.M.ident[a])


# -- Psi ----------------------------------------------------------------------

def psi(F: InternalFunctor, st: Setting) -> EnrichedFunctor:
    M, IB, A, enA = st.M, st.IB, st.A, st.enA
    obj = {a: F.F0(i_star(IB, a)) for a in M.objs}
    homs = {}
    for a in M.objs:
        for b in M.objs:
            up = FinMap(M.hom[(a, b)], A.A1,
                        [F.F1(x) for x in nu(IB, a, b).table])
            target = enA.hom[(obj[a], obj[b])]
            lifted = []
            for m, y in up.items():
                if Sub(y) not in target:
                    raise NotFactorable(f"F1 sends the arrow of {m!r} outside "
                                        f"Gamma({obj[a]!r},{obj[b]!r})")
                lifted.append(Sub(y))
            homs[(a, b)] = FinMap(M.hom[(a, b)], target, lifted)
    return EnrichedFunctor(obj, homs)


# -- Phi ----------------------------------------------------------------------

def enriched_idem_restriction(F: EnrichedFunctor, st: Setting, a) -> FinMap:
    """``F*_aa``: idempotents of ``inter(M)`` on objects over ``a`` to ``idem(A)``.

    The middle component of ``(q, m, p)`` is sent along ``F_aa`` and factored
    through ``idem(A) -> A1``.
    """
    IB = st.IB
    k = IB.block_index(a, a)
    src = FinObj(s for s in IB.split.idemObj.obj if s.inner.index == k)
    upped = FinMap(src, st.A.A1,
                   [F(a, a, IB.decode_arrow(s.inner)[3]).inner for s in src])
    return factor_through_mono(upped, st.splitA.idemObj.EI)


def _star_on_object(F, st, a, p):
    """``F*_aa iota*_a (p)``, the idempotent ``up F_aa(p)`` of ``A``."""
    star = enriched_idem_restriction(F, st, a)
    u = Sub(st.IB.arrow_elem(a, a, p, p, p))
    return star(u)


def phi(F: EnrichedFunctor, st: Setting, require_canonical=True) -> InternalFunctor:
    """``Phi(F)`` for ``F: M -> en'(A)``.

    With ``require_canonical=False`` the construction runs on any split, which
    is only useful for diagnosing what goes wrong without canonicity.
    """
    if require_canonical and st.canonical_problems():
        raise NotCanonicalSplit("; ".join(st.canonical_problems()))
    M, IB, A = st.M, st.IB, st.A
    R, S = st.splitA.R, st.splitA.S
    stars = {a: enriched_idem_restriction(F, st, a) for a in M.objs}

    def star(a, p):
        return stars[a](Sub(IB.arrow_elem(a, a, p, p, p)))

    t0 = []
    for x in IB.objectObj:
        a, p = IB.decode_object(x)
        t0.append(A.cod(R(star(a, p))))
    t1 = []
    for x in IB.arrowObj:
        a, b, q, m, p = IB.decode_arrow(x)
        left, mid, right = R(star(b, q)), F(a, b, m).inner, S(star(a, p))
        if not (A.composable(mid, right) and A.composable(left, mid)):
            raise NotComposable(f"the three arrows for {x!r} do not compose")
        t1.append(A.compose(left, A.compose(mid, right)))
    return InternalFunctor(FinMap(IB.objectObj, A.A0, t0), FinMap(IB.arrowObj, A.A1, t1))


# -- checks -------------------------------------------------------------------

def identity_restriction_violations(F: EnrichedFunctor, st: Setting) -> list[str]:
    """``F*_aa iota*_a i*_a == iota* F_0 a`` for every object ``a``."""
    out = []
    for a in st.M.objs:
        lhs = _star_on_object(F, st, a, st.M.ident[a])
        rhs = st.splitA.iotaStar(F.obj[a])
        if lhs != rhs:
            out.append(f"at {a!r}: {lhs!r} != {rhs!r}")
    return out


def psi_restriction_violations(F: InternalFunctor, st: Setting) -> list[str]:
    """``(Psi(F)_aa)* iota*_a == F1* [iota*]_a`` elementwise."""
    G = psi(F, st)
    f1star = functor_idem_restriction(F, st.IB.category, st.A)
    out = []
    for a in st.M.objs:
        for p in st.IB.carriers[a].obj:
            lhs = _star_on_object(G, st, a, p.inner)
            rhs = f1star(bracket_iota_star(st.IB, a)(p))
            if lhs != rhs:
                out.append(f"at {a!r}, {p!r}: {lhs!r} != {rhs!r}")
    return out


def left_homset(st: Setting, budget=DEFAULT_BUDGET):
    return enumerate_split_preserving_functors(st.IB.category, st.A, st.IB.split, st.splitA,
                                               budget)


def right_homset(st: Setting, budget=DEFAULT_BUDGET):
    return enumerate_enriched_functors(st.M, st.enA, budget)


def _tracker(budget, context):
    return budget if isinstance(budget, Budget) else Budget(budget, context)


def roundtrip_psi_phi(st: Setting, budget=DEFAULT_BUDGET, right=None) -> bool:
    """``Psi(Phi(F)) == F`` on every enriched functor ``M -> en'(A)``."""
    right = right if right is not None else right_homset(st, _tracker(budget, "right hom-set"))
    for F in right:
        G = phi(F, st)
        if not check_split_preserving(G, st.IB.category, st.A, st.IB.split, st.splitA):
            return False
        if psi(G, st) != F:
            return False
    return True


def roundtrip_phi_psi(st: Setting, budget=DEFAULT_BUDGET, left=None) -> bool:
    """``Phi(Psi(F)) == F`` on every split-preserving ``inter(M) -> A``."""
    left = left if left is not None else left_homset(st, _tracker(budget, "left hom-set"))
    for F in left:
        G = psi(F, st)
        if not check_enriched_functor(G, st.M, st.enA):
            return False
        if phi(G, st) != F:
            return False
    return True


def check_naturality(st: Setting, st2: Setting, u: EnrichedFunctor, v: InternalFunctor,
                     budget=DEFAULT_BUDGET, left=None) -> bool:
    """For ``u: M' -> M`` and split-preserving ``v: A -> A'``, with ``st`` over
    ``(M, A)`` and ``st2`` over ``(M', A')``:
    ``Psi(v F inter(u)) == en'(v) Psi(F) u`` for every ``F``."""
    inter_u = inter_of_functor(u, st2.M, st.M, st2.IB, st.IB)
    en_v = en_of_functor(v, st.A, st2.A)
    left = left if left is not None else left_homset(st, _tracker(budget, "naturality"))
    for F in left:
        lhs = psi(compose_internal(v, compose_internal(F, inter_u)), st2)
        rhs = compose_enriched(en_v, compose_enriched(psi(F, st), u))
        if lhs != rhs:
            return False
    return True


# -- report -------------------------------------------------------------------

@dataclass
class HomSetReport:
    left: list
    right: list
    psiTable: list
    phiTable: list

    @property
    def bijective(self):
        n = len(self.left)
        return (n == len(self.right)
                and all(self.phiTable[j] == i for i, j in enumerate(self.psiTable))
                and all(self.psiTable[i] == j for j, i in enumerate(self.phiTable)))


def _index(items, x):
    for i, y in enumerate(items):
        if y == x:
            return i
    return None


def adjunction_report(st: Setting, budget=DEFAULT_BUDGET) -> HomSetReport:
    tracker = _tracker(budget, "adjunction report")
    left = left_homset(st, tracker)
    right = right_homset(st, tracker)
    psi_table = [_index(right, psi(F, st)) for F in left]
    phi_table = [_index(left, phi(G, st)) for G in right]
    return HomSetReport(left, right, psi_table, phi_table)


def _render_map(f: FinMap, fmt) -> str:
    return ", ".join(f"{fmt(x)}->{fmt(y)}" for x, y in f.items())


def serialize_report(rep: HomSetReport, st: Setting) -> str:
    fmt = format_elem
    lines = ["adjunction-report",
             f"left {len(rep.left)}"]
    for i, F in enumerate(rep.left):
        lines.append(f"  L{i} F0: {_render_map(F.F0, fmt)}")
        lines.append(f"  L{i} F1: {_render_map(F.F1, fmt)}")
    lines.append(f"right {len(rep.right)}")
    for j, G in enumerate(rep.right):
        objs = ", ".join(f"{fmt(a)}->{fmt(G.obj[a])}" for a in st.M.objs)
        lines.append(f"  R{j} obj: {objs}")
        for a in st.M.objs:
            for b in st.M.objs:
                if len(st.M.hom[(a, b)]):
                    lines.append(f"  R{j} hom {fmt(a)} {fmt(b)}: "
                                 f"{_render_map(G.homMaps[(a, b)], fmt)}")

    def show(t):
        return "-" if t is None else str(t)
    lines.append("psi " + " ".join(f"L{i}->R{show(j)}" for i, j in enumerate(rep.psiTable)))
    lines.append("phi " + " ".join(f"R{j}->L{show(i)}" for j, i in enumerate(rep.phiTable)))
    lines.append(f"bijection {'yes' if rep.bijective else 'no'}")
    return "\n".join(lines) + "\n"


def check_psi_lawful(F: InternalFunctor, st: Setting) -> bool:
    return check_functor(F, st.IB.category, st.A) and check_enriched_functor(psi(F, st), st.M, st.enA)


@dataclass
class SplitDiagnosis:
    """What survives of the hom-set bijection on a possibly non-canonical split."""

    canonicalProblems: list
    leftSize: int
    rightSize: int
    failures: dict       # step -> count over the right hom-set

    @property
    def bijective(self):
        return self.leftSize == self.rightSize and not any(self.failures.values())


DIAGNOSIS_STEPS = ("phi-raises", "phi-not-functor", "phi-not-split-preserving",
                   "psi-phi-not-identity")


def diagnose_split(st: Setting, budget=DEFAULT_BUDGET) -> SplitDiagnosis:
    """Run Phi without the canonicity guard and count which step breaks, per functor."""
    tracker = _tracker(budget, "split diagnosis")
    left = left_homset(st, tracker)
    right = right_homset(st, tracker)
    failures = dict.fromkeys(DIAGNOSIS_STEPS, 0)
    for F in right:
        try:
            G = phi(F, st, require_canonical=False)
        except (NotComposable, NotFactorable):
            failures["phi-raises"] += 1
            continue
        if not check_functor(G, st.IB.category, st.A):
            failures["phi-not-functor"] += 1
        elif not check_split_preserving(G, st.IB.category, st.A, st.IB.split, st.splitA):
            failures["phi-not-split-preserving"] += 1
        if psi(G, st) != F:
            failures["psi-phi-not-identity"] += 1
    return SplitDiagnosis(list(st.canonical_problems()), len(left), len(right), failures)
