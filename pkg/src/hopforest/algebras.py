"""Name registry: every Hopf algebra of the package with a parser for its basis."""

from __future__ import annotations

from typing import Callable, Hashable, NamedTuple

from .contraction import CONTRACTION_FAMILIES, contraction_hopf, quotient_normal_form
from .cuts import CUT_FAMILIES, cut_hopf
from .forests import parse
from .linear import GradedBialgebra
from .words import fqsym, fqsym_d, parse_decorated, parse_dword, parse_word, quasi_shuffle_algebra, shuffle_algebra, wqsym, wqsym_d, wqsym_star


class Entry(NamedTuple):
    build: Callable[[], GradedBialgebra]
    parse: Callable[[str], Hashable]


def _forest_entry(factory: Callable, name: str, family, quotient: bool = False) -> Entry:
    if quotient:
        # a contraction algebra only knows normal forms: isolated vertices are the unit
        return Entry(lambda: factory(name), lambda text: quotient_normal_form(parse(text, family)))
    return Entry(lambda: factory(name), lambda text: parse(text, family))


REGISTRY: dict[str, Entry] = {}
for _name, _family in CUT_FAMILIES.items():
    REGISTRY[_name] = _forest_entry(cut_hopf, _name, _family)
for _name, _family in CONTRACTION_FAMILIES.items():
    REGISTRY[_name] = _forest_entry(contraction_hopf, _name, _family, quotient=True)
REGISTRY.update(
    {
        "fqsym": Entry(fqsym, parse_word),
        "wqsym-star": Entry(wqsym_star, parse_word),
        "wqsym": Entry(wqsym, parse_word),
        "sh": Entry(shuffle_algebra, parse_dword),
        "csh": Entry(quasi_shuffle_algebra, parse_dword),
        "fqsym-d": Entry(fqsym_d, parse_decorated),
        "wqsym-d": Entry(wqsym_d, parse_decorated),
    }
)

_CACHE: dict[str, GradedBialgebra] = {}


def algebra(name: str) -> GradedBialgebra:
    if name not in REGISTRY:
        raise ValueError(f"unknown algebra {name!r}; known: {', '.join(sorted(REGISTRY))}")
    if name not in _CACHE:
        _CACHE[name] = REGISTRY[name].build()
    return _CACHE[name]


def parse_element(name: str, text: str) -> Hashable:
    if name not in REGISTRY:
        raise ValueError(f"unknown algebra {name!r}; known: {', '.join(sorted(REGISTRY))}")
    return REGISTRY[name].parse(text)
