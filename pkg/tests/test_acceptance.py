"""Acceptance criteria, checked literally against the published claims.

Each criterion prints one PASS/FAIL line (collected in the pytest terminal
summary, or printed directly when run as a script).  Criteria 1, 2, 3 and 8
quote published census counts and tables; where those are wrong the
criterion fails and the line says what was computed instead.
"""
from __future__ import annotations

import random
import sys
import time

import pytest

from pineapple_spectra.classifier import corollary_family, enumerate_mates
from pineapple_spectra.closed_forms import (
    P4_TABLE_ROWS, Family, FamilySpec, family_poly, pineapple_poly)
from pineapple_spectra.graph import PineappleParams, make_pineapple
from pineapple_spectra.oracle import assert_impossible, census, exhaustive_family_scan, verify_mate
from pineapple_spectra.spectra import char_poly, poly_divides, quotient_matrix, rank_over_rationals

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

P = PineappleParams
TC = Family.TWO_COMPONENT


def report(number: int, ok: bool, detail: str):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def mate_key(spec: FamilySpec):
    return spec.iso_key()


# (p, k, q) -> listed mate, as published for the two census grids
CENSUS_8 = {
    (8, 2, 84): FamilySpec(Family.P3_CC, (28, 5, 7), 52),
    (8, 3, 42): FamilySpec(Family.P3_CC, (12, 7, 7), 24),
    (8, 3, 91): FamilySpec(Family.P3_CC, (13, 14, 7), 65),
    (8, 4, 21): FamilySpec(Family.P3_CC, (6, 7, 7), 9),
    (8, 1, 16): FamilySpec(Family.P3_MIXED, (4, 4, 4), 12),
    (8, 3, 4): FamilySpec(Family.P3_MIXED, (2, 3, 6), 1),
    (8, 3, 11): FamilySpec(Family.P3_MIXED, (3, 6, 5), 5),
    (8, 3, 16): FamilySpec(Family.P3_MIXED, (4, 8, 4), 8),
    (8, 2, 6): FamilySpec(Family.P4_C, (2, 5), 2),
    (8, 2, 9): FamilySpec(Family.P5, (2, 4, 5), 4),
    (8, 3, 31): FamilySpec(Family.P5, (3, 15, 4), 15),
}
CENSUS_11 = {
    (11, 1, 56): FamilySpec(TC, (8, 3, 36), 20),
    (11, 2, 45): FamilySpec(Family.P3_CC, (40, 2, 10), 4),
    (11, 3, 60): FamilySpec(Family.P3_CC, (28, 5, 10), 28),
    (11, 3, 90): FamilySpec(Family.P3_CC, (30, 7, 10), 54),
    (11, 4, 30): FamilySpec(Family.P3_CC, (16, 5, 10), 10),
    (11, 5, 18): FamilySpec(Family.P3_CC, (10, 5, 10), 4),
    (11, 6, 21): FamilySpec(Family.P3_CC, (7, 8, 10), 7),
    (11, 4, 15): FamilySpec(Family.P3_MIXED, (4, 8, 7), 7),
    (11, 5, 3): FamilySpec(Family.P3_MIXED, (2, 3, 9), 0),
    (11, 5, 49): FamilySpec(Family.P3_MIXED, (5, 25, 6), 24),
    (11, 2, 7): FamilySpec(Family.P5, (2, 3, 8), 3),
    (11, 3, 13): FamilySpec(Family.P5, (3, 6, 7), 6),
    (11, 3, 25): FamilySpec(Family.P5, (5, 10, 5), 14),
    (11, 4, 6): FamilySpec(Family.P5, (2, 4, 8), 1),
    (11, 4, 29): FamilySpec(Family.P5, (4, 14, 6), 14),
    (11, 6, 14): FamilySpec(Family.P5, (2, 10, 8), 3),
}


def census_criterion(number, p, das_expected, listed):
    start = time.perf_counter()
    table = census(p, range(1, p - 1), range(1, 101), jobs=4)
    elapsed = time.perf_counter() - start
    computed = {(c.params.p, c.params.k, c.params.q): {mate_key(m.spec) for m in c.mates}
                for c in table.non_das}
    expected = {pkq: {mate_key(spec)} for pkq, spec in listed.items()}
    counts_ok = (table.das_count, len(table.non_das)) == (das_expected, len(listed))
    lists_ok = computed == expected
    missing = sorted(pkq for pkq, spec in listed.items() if mate_key(spec) not in computed.get(pkq, set()))
    extra = sorted(pkq for pkq in computed if pkq not in listed or computed[pkq] != expected[pkq])
    report(number, counts_ok and lists_ok,
           f"p={p}: computed {table.summary()} vs published DAS={das_expected} non-DAS={len(listed)}; "
           f"listed mates not reproduced {missing}; pineapples with other or extra mates {extra}; "
           f"{elapsed:.1f}s")


def test_criterion_1_census_p8():
    census_criterion(1, 8, 589, CENSUS_8)


def test_criterion_2_census_p11():
    census_criterion(2, 11, 884, CENSUS_11)


def cs_entry(t, clique, indep, a):
    return FamilySpec(TC, (t, clique, indep), a)


def me(family, params, a):
    return FamilySpec(family, params, a)


# Published small-k mate tables, k <= 5, every non-empty cell: (p, k, q) -> claimed mate
SMALL_K_TABLE = [
    ((11, 1, 56), cs_entry(8, 3, 36, 20)),
    ((17, 2, 32), cs_entry(8, 9, 16, 16)),
    ((15, 3, 15), cs_entry(6, 9, 11, 4)),
    ((17, 4, 30), cs_entry(9, 8, 27, 3)),
    ((25, 5, 63), cs_entry(15, 10, 57, 6)),
    ((184, 1, 111), me(Family.P3_CC, (111, 1, 183), 0)),
    ((6, 2, 20), me(Family.P3_CC, (10, 3, 5), 8)),
    ((7, 3, 10), me(Family.P3_CC, (6, 3, 6), 2)),
    ((8, 4, 21), me(Family.P3_CC, (6, 7, 7), 9)),
    ((11, 5, 18), me(Family.P3_CC, (10, 5, 10), 4)),
    ((4, 1, 4), me(Family.P3_MIXED, (2, 2, 2), 2)),
    ((5, 2, 7), me(Family.P3_MIXED, (2, 4, 3), 3)),
    ((8, 3, 4), me(Family.P3_MIXED, (2, 3, 6), 1)),
    ((9, 4, 31), me(Family.P3_MIXED, (4, 16, 5), 15)),
    ((11, 5, 3), me(Family.P3_MIXED, (2, 3, 9), 0)),
    ((10, 1, 4), me(Family.P3_CCC, (2, 6, 3), 3)),
    ((14, 2, 3), me(Family.P3_CCC, (2, 9, 4), 2)),
    ((33, 3, 5), me(Family.P3_CCC, (3, 25, 6), 4)),
    ((56, 4, 6), me(Family.P3_CCC, (2, 39, 16), 5)),
    ((95, 5, 9), me(Family.P3_CCC, (5, 81, 10), 8)),
    ((5, 1, 12), me(Family.P4_A, (3,), 7)),
    ((5, 1, 4), me(Family.P4_B, (3, 1), 1)),
    ((9, 2, 4), me(Family.P4_B, (6, 2), 1)),
    ((13, 3, 4), me(Family.P4_B, (9, 3), 1)),
    ((17, 4, 4), me(Family.P4_B, (12, 4), 1)),
    ((21, 5, 4), me(Family.P4_B, (15, 5), 1)),
    ((8, 2, 6), me(Family.P4_C, (2, 5), 2)),
    ((19, 3, 6), me(Family.P4_C, (3, 15), 2)),
    ((5, 1, 12), me(Family.P5, (2, 4, 2), 7)),
    ((6, 2, 17), me(Family.P5, (2, 8, 3), 8)),
    ((8, 3, 31), me(Family.P5, (3, 15, 4), 15)),
    ((10, 4, 49), me(Family.P5, (4, 24, 5), 24)),
    ((12, 5, 71), me(Family.P5, (5, 35, 6), 35)),
]


def test_criterion_3_small_k_tables():
    failures = []
    for pkq, spec in SMALL_K_TABLE:
        params = P(*pkq)
        produced = {mate_key(m.spec) for m in enumerate_mates(params).mates}
        try:
            verified = spec.order == params.order and verify_mate(params, spec)
        except AssertionError:  # the entry is the pineapple itself
            verified = False
        if mate_key(spec) not in produced or not verified:
            failures.append(f"{spec.describe()} ~ K_{{{pkq[0]},{pkq[1]}}}^{{{pkq[2]}}}")
    report(3, not failures, f"{len(SMALL_K_TABLE) - len(failures)}/{len(SMALL_K_TABLE)} entries "
                            f"reproduced and verified; failing: {failures}")


def test_criterion_4_corollary_family():
    start = time.perf_counter()
    bad = []
    for a in (3, 5, 7, 9, 11, 13, 15):
        params, mate = corollary_family(a)
        result = enumerate_mates(params)
        if not (mate.verified and not result.das and mate.spec.iso_key() in
                {m.spec.iso_key() for m in result.mates}):
            bad.append(a)
    report(4, not bad, f"a in 3..15 odd, failing {bad}; {time.perf_counter() - start:.1f}s")


def random_params(rng, max_order):
    while True:
        p = rng.randint(3, max_order - 1)
        k = rng.randint(1, p - 2)
        q = rng.randint(1, max_order - p)
        return P(p, k, q)


def test_criterion_5_closed_form_soundness():
    rng = random.Random(5)
    bad = []
    for _ in range(500):
        params = random_params(rng, 60)
        g = make_pineapple(params)
        f = char_poly(g)
        a = g.integer_matrix()
        shifted = [[v + (i == j) for j, v in enumerate(r)] for i, r in enumerate(a)]
        parts = [list(range(params.k)), list(range(params.k, params.p)),
                 list(range(params.p, params.order))]
        ok = (pineapple_poly(params).expand() == f
              and rank_over_rationals(a) == params.p + 1
              and rank_over_rationals(shifted) == params.q + 2
              and poly_divides(quotient_matrix(g, parts).char_poly(), f))
        if not ok:
            bad.append(params)
    report(5, not bad, f"500 random pineapples with p+q <= 60, failing {bad}")


def random_spec(family, rng, max_order=60):
    while True:
        a = rng.randint(0, 10)
        if family is TC:
            v = (rng.randint(2, 25), rng.randint(1, 25), rng.randint(1, 25))
        elif family in (Family.P3_CC, Family.P3_MIXED, Family.P3_CM, Family.P3_CCC):
            v = (rng.randint(1, 25), rng.randint(1, 25), rng.randint(2, 25))
        elif family is Family.P4_A:
            v = (rng.randint(1, 50),)
        elif family in (Family.P4_B, Family.P4_C):
            v = (rng.randint(1, 30), rng.randint(1, 30))
        elif family is Family.P4_TABLE:
            l, m, s = rng.choice(sorted(P4_TABLE_ROWS))
            v = (l, m, rng.randint(1, 45), s)
        else:
            v = (rng.randint(1, 25), rng.randint(1, 25), rng.randint(1, 25))
        spec = FamilySpec(family, v, a)
        if spec.order <= max_order:
            return spec


def test_criterion_6_family_polynomials():
    rng = random.Random(6)
    bad = []
    for family in Family:
        for _ in range(200):
            spec = random_spec(family, rng)
            if family_poly(spec).expand() != char_poly(spec.realize()):
                bad.append(spec)
    report(6, not bad, f"200 random specs for each of {len(Family)} families, failing {bad[:5]}")


def test_criterion_7_completeness():
    start = time.perf_counter()
    failing = [n for n in range(5, 23) if not exhaustive_family_scan(n).passed]
    impossible = {case: assert_impossible(case, cap=24) for case in ("KcKde", "P4_lmns")}
    report(7, not failing and all(impossible.values()),
           f"scans 5..22 failing {failing}; impossibility up to 24 {impossible}; "
           f"{time.perf_counter() - start:.1f}s")


# Published P4 (l, m, -n, s) solutions: (p, k, q) -> ((l, m, n, s), a)
P4_PRINTED = {
    (11, 1, 84): ((3, 6, 20, 3), 63),
    (9, 1, 36): ((4, 3, 8, 3), 27),
    (10, 2, 45): ((3, 4, 18, 4), 26),
    (11, 2, 112): ((3, 6, 48, 3), 63),
    (9, 2, 36): ((4, 3, 14, 3), 21),
    (11, 2, 63): ((4, 6, 27, 2), 35),
    (10, 2, 27): ((5, 2, 9, 4), 17),
    (10, 2, 20): ((5, 4, 8, 2), 11),
    (10, 3, 120): ((3, 4, 63, 4), 56),
}
P4_PRINTED_NO_ROWS = ((3, 3, 6), (4, 2, 6), (7, 2, 3), (7, 3, 2))


def p4_row_matches(row, max_order):
    """Every (p, k, q) with p+q <= max_order matched by some (l, m, -n, s) + aK1 of this row."""
    l, m, s = row
    hits = []
    for n in range(1, max_order - l - m - s + 1):
        main = l + m + s + n
        for a in range(0, max_order - main + 1):
            f = family_poly(FamilySpec(Family.P4_TABLE, (l, m, n, s), a))
            p, q = f.x1_mult + 2, f.x_mult + 1
            if p < 3 or p + q != main + a:
                continue
            for k in range(1, p - 1):
                if f == pineapple_poly(P(p, k, q)):
                    hits.append(((p, k, q), n, a))
    return hits


def test_criterion_8_p4_table():
    unverified = []
    for pkq, (params, a) in P4_PRINTED.items():
        spec = FamilySpec(Family.P4_TABLE, params, a)
        if spec.order != sum(pkq[::2]) or not verify_mate(P(*pkq), spec):
            unverified.append(spec.describe())
    no_row_hits = {row: p4_row_matches(row, 150) for row in P4_PRINTED_NO_ROWS}
    no_row_hits = {row: hits for row, hits in no_row_hits.items() if hits}
    report(8, not unverified and not no_row_hits,
           f"printed tuples not cospectral: {unverified}; printed 'No' rows with solutions: {no_row_hits}")


def test_criterion_9_trace_and_edges():
    rng = random.Random(9)
    graphs = [make_pineapple(random_params(rng, 60)) for _ in range(100)]
    for family in Family:
        graphs += [random_spec(family, rng).realize() for _ in range(20)]
    bad = 0
    for g in graphs:
        f = char_poly(g)
        n = g.order
        if not (f.coeff(n) == 1 and f.coeff(n - 1) == 0 and f.coeff(n - 2) == -g.edge_count):
            bad += 1
    report(9, bad == 0, f"{len(graphs)} graphs, {bad} violating tr A = 0 or c_2 = -|E|")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
