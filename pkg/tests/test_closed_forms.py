import random

import pytest

from pineapple_spectra.closed_forms import (
    P4_TABLE_ROWS, FactoredPoly, Family, FamilySpec, cs_poly, cubic_root_pattern, family_poly,
    pineapple_poly, quotient_family_poly)
from pineapple_spectra.graph import InvalidParams, PineappleParams, make_complete_split, make_pineapple
from pineapple_spectra.poly import IntPoly, X
from pineapple_spectra.spectra import char_poly


def test_cs_poly():
    assert str(cs_poly(2, 2)) == "x(x+1)(x^2-x-4)"
    assert cs_poly(2, 2).expand() == char_poly(make_complete_split(indep=2, clique=2))
    k2 = cs_poly(1, 1)
    assert k2.expand() == X * X - 1
    # the coprime factor may not vanish at -1, so K_2 keeps one (x+1)
    assert (k2.x_mult, k2.x1_mult, k2.cubic) == (0, 1, X - 1)
    big = cs_poly(36, 3)
    assert big == FactoredPoly(35, 2, IntPoly([-108, -2, 1]))
    assert cs_poly(3, 36) == FactoredPoly(2, 35, IntPoly([-108, -35, 1]))


def test_pineapple_poly():
    f = pineapple_poly(PineappleParams(4, 1, 2))
    assert str(f) == "x(x+1)^2(x^3-2x^2-5x+4)"
    assert f.expand() == char_poly(make_pineapple(PineappleParams(4, 1, 2)))
    c = pineapple_poly(PineappleParams(5, 2, 3)).cubic
    assert c(-1) == 18 and c(0) == 12


def test_factored_poly_invariants():
    with pytest.raises(ValueError):
        FactoredPoly(0, 0, X)
    with pytest.raises(ValueError):
        FactoredPoly(0, 0, X + 1)
    f = FactoredPoly.build(1, 0, X * (X + 1) ** 2 * (X - 3))
    assert (f.x_mult, f.x1_mult, f.cubic) == (2, 2, X - 3)
    assert FactoredPoly.from_dict(f.to_dict()) == f
    assert f.degree == f.expand().degree


def test_cubic_root_pattern():
    for _ in range(300):
        p = random.randint(3, 60)
        params = PineappleParams(p, random.randint(1, p - 2), random.randint(1, 200))
        assert cubic_root_pattern(pineapple_poly(params).cubic) == (1, 0, 2)


FAMILY_EXAMPLES = [
    (FamilySpec(Family.P3_CC, (28, 5, 7), 52), (8, 2, 84)),
    (FamilySpec(Family.P4_A, (3,), 7), (5, 1, 12)),
]


@pytest.mark.parametrize("spec, pkq", FAMILY_EXAMPLES)
def test_family_examples(spec, pkq):
    assert family_poly(spec) == pineapple_poly(PineappleParams(*pkq))


def test_p3_cc_example_cubic():
    f = family_poly(FamilySpec(Family.P3_CC, (28, 5, 7), 52))
    assert (f.x_mult, f.x1_mult) == (83, 6)
    assert f.cubic == IntPoly.from_high([1, -6, -175, 840])


def test_p4_a_example_cubic():
    f = family_poly(FamilySpec(Family.P4_A, (3,), 7))
    assert (f.x_mult, f.x1_mult, f.cubic) == (11, 3, IntPoly.from_high([1, -3, -16, 36]))


def test_no_row_never_matches():
    # row (3,3,6) forces (5-k)kq = 100 with no integral n
    for n in range(1, 120):
        for a in range(0, 40):
            spec = FamilySpec(Family.P4_TABLE, (3, 3, n, 6), a)
            f = family_poly(spec)
            p = f.x1_mult + 2
            q = f.x_mult + 1
            for k in range(1, p - 1):
                if p + q == spec.order:
                    assert f != pineapple_poly(PineappleParams(p, k, q))


def random_spec(family, rng, max_order=60):
    while True:
        a = rng.randint(0, 6)
        if family is Family.TWO_COMPONENT:
            v = (rng.randint(2, 20), rng.randint(1, 20), rng.randint(1, 20))
        elif family in (Family.P3_CC, Family.P3_MIXED, Family.P3_CM, Family.P3_CCC):
            v = (rng.randint(1, 20), rng.randint(1, 20), rng.randint(2, 20))
        elif family is Family.P4_A:
            v = (rng.randint(1, 40),)
        elif family in (Family.P4_B, Family.P4_C):
            v = (rng.randint(1, 25), rng.randint(1, 25))
        elif family is Family.P4_TABLE:
            l, m, s = rng.choice(sorted(P4_TABLE_ROWS))
            v = (l, m, rng.randint(1, 40), s)
        else:
            v = (rng.randint(1, 18), rng.randint(1, 18), rng.randint(1, 18))
        spec = FamilySpec(family, v, a)
        if spec.order <= max_order:
            return spec


@pytest.mark.parametrize("family", list(Family))
def test_family_poly_matches_graph(family):
    rng = random.Random(str(family))
    for _ in range(25):
        spec = random_spec(family, rng)
        expected = char_poly(spec.realize())
        assert family_poly(spec).expand() == expected
        assert quotient_family_poly(spec).expand() == expected


def test_spec_bounds():
    with pytest.raises(InvalidParams):
        FamilySpec(Family.P3_CC, (1, 1, 1), 0)
    with pytest.raises(InvalidParams):
        FamilySpec(Family.P4_TABLE, (1, 1, 1, 1), 0)
    with pytest.raises(InvalidParams):
        FamilySpec(Family.P5, (1, 1), 0)
    with pytest.raises(InvalidParams):
        FamilySpec(Family.P5, (1, 1, 1), -1)


def test_spec_round_trip_and_keys():
    spec = FamilySpec.of("P3_mixed", 1, l=2, m=3, n=6)
    assert FamilySpec.from_dict(spec.to_dict()) == spec
    assert spec.describe() == "P3 (2,-3,6) ∪ 1K_1"
    assert spec.iso_key() == FamilySpec(Family.P3_MIXED, (6, 3, 2), 1).iso_key()
    # CS with one independent vertex is a clique
    a = FamilySpec(Family.TWO_COMPONENT, (3, 4, 1), 0)
    b = FamilySpec(Family.TWO_COMPONENT, (5, 2, 1), 0)
    assert a.iso_key() == ("union", (("K", 3), ("K", 5)), 0)
    assert b.iso_key() == a.iso_key()
    assert FamilySpec(Family.TWO_COMPONENT, (3, 4, 2), 0).iso_key() != a.iso_key()
