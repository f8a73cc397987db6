from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pineapple_spectra.poly import IntPoly, X, count_real_roots

coeffs = st.lists(st.integers(-10**30, 10**30), max_size=8)
polys = coeffs.map(IntPoly)
small_roots = st.lists(st.integers(-6, 6), min_size=1, max_size=6)


def test_zero_polynomial_is_empty():
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly().degree == -1
    assert IntPoly([3, 0, 0]) == 3


def test_string_form():
    assert str(IntPoly.from_high([1, -2, -5, 4])) == "x^3-2x^2-5x+4"
    assert str(-X) == "-x"
    assert str(IntPoly()) == "0"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPoly()


@given(polys, polys.filter(lambda d: not d.is_zero()))
def test_rational_division_reconstructs(f, d):
    quot, rem = f.divmod_rational(d)
    back = [Fraction(0)] * (len(quot) + len(d.coeffs))
    for i, qc in enumerate(quot):
        for j, dc in enumerate(d.coeffs):
            back[i + j] += qc * dc
    for i, rc in enumerate(rem):
        back[i] += rc
    while back and back[-1] == 0:
        back.pop()
    assert back == [Fraction(c) for c in f.coeffs]
    assert len(rem) < len(d.coeffs)


@given(polys, st.integers(-50, 50))
def test_synthetic_division(f, r):
    quot, value = f.synthetic_division(r)
    assert value == f(r)
    assert quot * IntPoly([-r, 1]) + value == f


@given(polys)
def test_json_round_trip(f):
    assert IntPoly.from_json(f.to_json()) == f


def test_json_rejects_numbers():
    with pytest.raises(ValueError):
        IntPoly.from_json("[1, 2]")


def test_integral_divmod_refuses_fractions():
    with pytest.raises(ValueError):
        divmod(X, IntPoly([1, 2]))
    assert divmod(X * X - 1, X + 1) == (X - 1, IntPoly())


@settings(max_examples=60)
@given(small_roots)
def test_sturm_counts_distinct_roots(roots):
    f = IntPoly.from_roots(roots)
    assert count_real_roots(f) == len(set(roots))
    assert count_real_roots(f, 0, "+inf") == len({r for r in roots if r > 0})


def test_sturm_no_real_roots():
    assert count_real_roots(X * X + 1) == 0
