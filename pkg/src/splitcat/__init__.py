"""Idempotent splittings, internal and enriched categories over finite sets."""

from .ambient import Atom, FinMap, FinObj, Pair, Sub, Tag
from .adjunction import Setting, adjunction_report, phi, psi, setting
from .en_functor import en
from .enriched import EnrichedCat, EnrichedFunctor, check_enriched, make_enriched
from .inter_functor import inter
from .internal import InternalCat, InternalFunctor, check_canonical, check_internal, check_split
from .plaincat import FinCat, karoubi

__all__ = [
    "Atom", "FinMap", "FinObj", "Pair", "Sub", "Tag",
    "Setting", "adjunction_report", "phi", "psi", "setting",
    "en", "EnrichedCat", "EnrichedFunctor", "check_enriched", "make_enriched",
    "inter", "InternalCat", "InternalFunctor", "check_canonical", "check_internal",
    "check_split", "FinCat", "karoubi",
]
