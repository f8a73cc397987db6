"""Exhaustive scans over the structured families at small orders.

Every candidate is realized as a graph and its characteristic polynomial is
computed directly, so nothing here relies on the closed forms the classifier
uses.  The scan covers only the families that can be cospectral with a
pineapple at all; general graphs on ``n`` vertices are out of reach.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from ..classifier import enumerate_mates
from ..closed_forms import P4_TABLE_ROWS, Family, FamilySpec
from ..graph import (
    MixedExtension,
    PineappleParams,
    disjoint_union,
    make_complete,
    make_mixed_extension,
    make_pineapple,
)
from ..poly import IntPoly, X
from ..spectra import char_poly

__all__ = ["DEFAULT_CAP", "P4_IMPOSSIBLE", "ScanCapExceeded", "ScanReport",
           "assert_impossible", "exhaustive_family_scan", "family_specs_of_order",
           "pineapples_of_order"]

DEFAULT_CAP = 24

# Types (l, m, n, s) of P4 mixed extensions with only cliques that can never
# be cospectral with a pineapple.
P4_IMPOSSIBLE = ((2, 2, 2, 7), (2, 2, 3, 4), (2, 2, 6, 3), (2, 3, 2, 5),
                 (2, 3, 4, 3), (2, 5, 2, 4), (2, 5, 3, 3), (3, 2, 2, 3))


class ScanCapExceeded(ValueError):
    pass


@dataclass
class ScanReport:
    params_range: str
    found: list[tuple[PineappleParams, FamilySpec]] = field(default_factory=list)
    missed_by_classifier: list[tuple[PineappleParams, FamilySpec]] = field(default_factory=list)
    spurious_in_classifier: list[tuple[PineappleParams, FamilySpec]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.missed_by_classifier and not self.spurious_in_classifier

    def merge(self, other: ScanReport) -> ScanReport:
        return ScanReport(
            f"{self.params_range}; {other.params_range}",
            self.found + other.found,
            self.missed_by_classifier + other.missed_by_classifier,
            self.spurious_in_classifier + other.spurious_in_classifier,
        )

    def to_dict(self) -> dict:
        def rows(pairs):
            return [{"p": p.p, "k": p.k, "q": p.q, "mate": s.to_dict()} for p, s in pairs]

        return {"params_range": self.params_range, "passed": self.passed,
                "found": rows(self.found),
                "missed_by_classifier": rows(self.missed_by_classifier),
                "spurious_in_classifier": rows(self.spurious_in_classifier)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_cap(order: int, cap: int):
    if order > cap:
        raise ScanCapExceeded(f"order {order} exceeds the scan cap {cap}")


def pineapples_of_order(n: int) -> list[PineappleParams]:
    return [PineappleParams(p, k, n - p) for p in range(3, n) for k in range(1, p - 1)]


def _main_specs(budget: int):
    """(family, params) for every main component with at most ``budget`` vertices."""
    for t, m, n in product(range(2, budget + 1), range(1, budget + 1), range(1, budget + 1)):
        if t + m + n <= budget:
            yield Family.TWO_COMPONENT, (t, m, n)
    for fam in (Family.P3_CC, Family.P3_MIXED, Family.P3_CM, Family.P3_CCC):
        for l, m, n in product(range(1, budget + 1), range(1, budget + 1), range(2, budget + 1)):
            if l + m + n <= budget:
                yield fam, (l, m, n)
    for l in range(1, budget - 6):
        yield Family.P4_A, (l,)
    for m, n in product(range(1, budget + 1), repeat=2):
        if m + n + 4 <= budget:
            yield Family.P4_B, (m, n)
        if m + n + 5 <= budget:
            yield Family.P4_C, (m, n)
    for (l, m, s) in P4_TABLE_ROWS:
        for n in range(1, budget - l - m - s + 1):
            yield Family.P4_TABLE, (l, m, n, s)
    for l, m, n in product(range(1, budget + 1), repeat=3):
        if l + m + n + 2 <= budget:
            yield Family.P5, (l, m, n)


def family_specs_of_order(n: int) -> list[FamilySpec]:
    out = []
    for fam, params in _main_specs(n):
        spec = FamilySpec(fam, params, 0)
        out.append(FamilySpec(fam, params, n - spec.main_order))
    return out


@lru_cache(maxsize=None)
def _main_poly(family: Family, params: tuple[int, ...]) -> IntPoly:
    return char_poly(FamilySpec(family, params, 0).realize_main())


@lru_cache(maxsize=None)
def _pineapple_char_poly(params: PineappleParams) -> IntPoly:
    return char_poly(make_pineapple(params))


def _own_key(params: PineappleParams) -> tuple:
    return ("path", params.as_mixed_extension().normal_form(), 0)


def exhaustive_family_scan(order: int, cap: int = DEFAULT_CAP) -> ScanReport:
    """Every family spec of this order against every pineapple of this order."""
    _check_cap(order, cap)
    targets: dict[IntPoly, list[PineappleParams]] = {}
    for params in pineapples_of_order(order):
        targets.setdefault(_pineapple_char_poly(params), []).append(params)

    hits: dict[PineappleParams, dict[tuple, FamilySpec]] = {p: {} for p in pineapples_of_order(order)}
    for spec in family_specs_of_order(order):
        f = _main_poly(spec.family, spec.params) * X ** spec.isolated
        for params in targets.get(f, ()):
            key = spec.iso_key()
            if key != _own_key(params):
                hits[params].setdefault(key, spec)

    report = ScanReport(f"order {order}")
    for params, by_key in hits.items():
        classified = {m.spec.iso_key(): m.spec for m in enumerate_mates(params, verify=False).mates}
        for key, spec in sorted(by_key.items(), key=lambda kv: repr(kv[0])):
            report.found.append((params, spec))
            if key not in classified:
                report.missed_by_classifier.append((params, spec))
        for key, spec in classified.items():
            if key not in by_key:
                report.spurious_in_classifier.append((params, spec))
    return report


def assert_impossible(case: str, cap: int = DEFAULT_CAP) -> bool:
    """True when no graph of the given impossible shape matches any pineapple up to ``cap``."""
    if case == "KcKde":
        candidates = []
        for c, d, e in product(range(2, cap + 1), repeat=3):
            if d <= e and c + d + e <= cap:
                main = disjoint_union([make_complete(c), make_mixed_extension(MixedExtension((-d, -e)))])
                candidates.append((main.order, char_poly(main)))
    elif case == "P4_lmns":
        candidates = []
        for types in P4_IMPOSSIBLE:
            main = make_mixed_extension(MixedExtension(types))
            if main.order <= cap:
                candidates.append((main.order, char_poly(main)))
    else:
        raise ValueError(f"unknown impossibility case {case!r}")

    for main_order, f in candidates:
        for n in range(main_order, cap + 1):
            full = f * X ** (n - main_order)
            for params in pineapples_of_order(n):
                if _pineapple_char_poly(params) == full:
                    return False
    return True
