"""Cospectral mates of generalized pineapple graphs.

Every family is solved by a bounded integer scan over its small parameter
system, using the linear relations forced by the multiplicities of the
eigenvalues 0 and -1.  Each scan hit is then confirmed by comparing factored
characteristic polynomials, and the closed-form expressions for the family are
evaluated independently and required to agree with the scan.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import isqrt

from .closed_forms import (
    P4_TABLE_ROWS,
    FactoredPoly,
    Family,
    FamilySpec,
    family_poly,
    pineapple_poly,
)
from .graph import InvalidParams, PineappleParams
from .poly import IntPoly

__all__ = [
    "Classification",
    "ClosedFormMismatch",
    "Mate",
    "VerificationError",
    "corollary_family",
    "enumerate_mates",
    "p3_coclique_clique_witness",
    "solve_p3_clique_coclique",
    "solve_p3_cliques",
    "solve_p3_coclique_clique",
    "solve_p3_cocliques",
    "solve_p4_a",
    "solve_p4_b",
    "solve_p4_c",
    "solve_p4_table",
    "solve_p5",
    "solve_two_component",
    "two_component_cubic",
    "two_component_rejected_roots",
]

FAMILY_ORDER = list(Family)


class ClosedFormMismatch(AssertionError):
    """The bounded scan and a closed-form solution disagree."""


class VerificationError(RuntimeError):
    """A candidate mate failed spectral verification."""


@dataclass(frozen=True)
class Mate:
    spec: FamilySpec
    realized_order: int
    verified: bool = field(default=False, compare=False)

    @property
    def family(self) -> Family:
        return self.spec.family

    def sort_key(self) -> tuple:
        return (FAMILY_ORDER.index(self.spec.family), self.spec.params, self.spec.isolated)

    def to_dict(self) -> dict:
        return self.spec.to_dict()

    def __str__(self) -> str:
        return self.spec.describe()


@dataclass(frozen=True)
class Classification:
    params: PineappleParams
    mates: tuple[Mate, ...] = ()
    rejected_roots: tuple[int, ...] = field(default=(), compare=False)

    @property
    def das(self) -> bool:
        return not self.mates

    def to_dict(self) -> dict:
        return {"p": self.params.p, "k": self.params.k, "q": self.params.q,
                "das": self.das, "mates": [m.to_dict() for m in self.mates]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Classification:
        params = PineappleParams(int(data["p"]), int(data["k"]), int(data["q"]))
        mates = []
        for m in data["mates"]:
            spec = FamilySpec.from_dict(m)
            if spec.order != int(m["order"]):
                raise ValueError(f"order {m['order']} does not match {spec}")
            mates.append(Mate(spec, spec.order))
        out = cls(params, tuple(mates))
        if out.das != bool(data["das"]):
            raise ValueError("das flag disagrees with the mate list")
        return out


def _sqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def _as_int(x: Fraction) -> int | None:
    return int(x) if x.denominator == 1 else None


def _accept(params: PineappleParams, spec: FamilySpec, target: FactoredPoly) -> bool:
    """Final word on a scan hit: equal order and equal factored polynomial."""
    return spec.order == params.order and family_poly(spec) == target


def _cross_check(family: Family, params: PineappleParams,
                 found: list[FamilySpec], closed: tuple[tuple[int, ...], int] | None):
    scanned = {(s.params, s.isolated) for s in found}
    if closed is None:
        if scanned:
            raise ClosedFormMismatch(f"{family} {params}: scan found {scanned}, closed form none")
        return
    if scanned != {closed}:
        raise ClosedFormMismatch(f"{family} {params}: scan {scanned} vs closed form {closed}")


def _pineapple_key(params: PineappleParams) -> tuple:
    return ("path", params.as_mixed_extension().normal_form(), 0)


def _mates(params: PineappleParams, specs: list[FamilySpec]) -> list[Mate]:
    """Sorted mates, dropping any solution that is the pineapple itself."""
    own = _pineapple_key(params)
    keep = [s for s in specs if s.iso_key() != own]
    return [Mate(s, s.order) for s in sorted(keep, key=lambda s: (s.params, s.isolated))]


# --- two main components -------------------------------------------------------

def two_component_cubic(params: PineappleParams) -> IntPoly:
    """Cubic in ``a`` whose nonnegative integer roots give the two-component mates.

    Obtained by substituting ``n = q - a``, ``t = (q-a)(p-k)/D`` and
    ``m = p - t`` (``D = p + q - a - k - 1``) into ``m(n - t) = kq``; its
    roots are exactly the ``a`` with ``m (q-a)(q-a-1) = kq D^2``.
    """
    p, k, q = params.p, params.k, params.q
    a = IntPoly([0, 1])
    d = IntPoly([p + q - k - 1, -1])
    m_num = IntPoly([p * p - (k + 1) * p + k * q, -k])
    return m_num * (q - a) * (q - 1 - a) - k * q * d * d


def _two_component_candidates(params: PineappleParams):
    p, k, q = params.p, params.k, params.q
    for a in range(0, q + 1):
        den = p + q - a - k - 1
        num = (q - a) * (p - k)
        if den <= 0 or num % den:
            continue
        t = num // den
        m = p - t
        assert m * den == p * p - (k + 1) * p + k * q - k * a
        yield a, t, m, q - a


def solve_two_component(params: PineappleParams) -> list[Mate]:
    """Mates of the form ``K_t ∪ CS(clique=m, indep=n) ∪ aK1``."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    cubic = two_component_cubic(params)
    found = []
    for a, t, m, n in _two_component_candidates(params):
        if a >= q - 1 or t < 2 or m < 2:
            continue
        if m * (n - t) != k * q:
            continue
        spec = FamilySpec(Family.TWO_COMPONENT, (t, m, n), a)
        if not _accept(params, spec, target):
            raise ClosedFormMismatch(f"two-component system accepted {spec} for {params}")
        if cubic(a) != 0:
            raise ClosedFormMismatch(f"a={a} is not a root of the two-component cubic for {params}")
        found.append(spec)
    return _mates(params, found)


def two_component_rejected_roots(params: PineappleParams) -> list[int]:
    """Roots ``a >= 0`` of the cubic that pass divisibility but break ``a < q-1``, ``t, m >= 2``."""
    cubic = two_component_cubic(params)
    rejected = []
    for a, t, m, n in _two_component_candidates(params):
        if cubic(a) == 0 and (a >= params.q - 1 or t < 2 or m < 2):
            rejected.append(a)
    return rejected


# --- one main component: mixed extensions of P3 ------------------------------------

def solve_p3_cocliques(params: PineappleParams) -> list[Mate]:
    """Type ``(-l, -m, n)``: ``n = p-1``, ``l+m+a = q+1``, ``m(l+n) = p+kq-1``."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    n = p - 1
    found = []
    for l in range(1, q + 1):
        m, r = divmod(p + k * q - 1, l + n)
        if r or m < 1:
            continue
        a = q + 1 - l - m
        if a < 0:
            continue
        spec = FamilySpec(Family.P3_CC, (l, m, n), a)
        if _accept(params, spec, target):
            found.append(spec)

    closed = None
    l_cf = Fraction(k * q * (p - 1) * (p - k - 1), k * (k - 1) * q + (p - 1) * (p - 2))
    m_cf = Fraction(k * (k - 1) * q, (p - 1) * (p - 2)) + 1
    a_cf = q - Fraction(k * (k - 1) * q, (p - 1) * (p - 2)) - l_cf
    vals = [_as_int(v) for v in (l_cf, m_cf, a_cf)]
    if None not in vals and vals[0] >= 1 and vals[1] >= 1 and vals[2] >= 0 and n >= 2:
        closed = ((vals[0], vals[1], n), vals[2])
    _cross_check(Family.P3_CC, params, found, closed)
    return _mates(params, found)


def solve_p3_clique_coclique(params: PineappleParams) -> list[Mate]:
    """Type ``(l, -m, n)``: ``l+n = p``, ``m+a = q``, ``mp = kq + ln``; emitted with ``l <= n``."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    found = []
    for l in range(1, p // 2 + 1):
        n = p - l
        if n < 2:
            continue
        m, r = divmod(k * q + l * n, p)
        if r or m < 1 or m > q:
            continue
        spec = FamilySpec(Family.P3_MIXED, (l, m, n), q - m)
        if _accept(params, spec, target):
            found.append(spec)

    closed = None
    outer = _sqrt((p + 2 * k * q) ** 2 + 8 * k * p * q * (p - k - 1))
    if outer is not None:
        m_cf = Fraction(p + 2 * k * q + outer, 4 * p)
        a_cf = Fraction(4 * p * q - p - 2 * k * q - outer, 4 * p)
        inner = _sqrt(p * p - p + 2 * k * q - outer)
        if inner is not None:
            vals = [_as_int(v) for v in (Fraction(p - inner, 2), m_cf, Fraction(p + inner, 2), a_cf)]
            if None not in vals:
                l, m, n, a = vals
                if l >= 1 and m >= 1 and n >= 2 and a >= 0:
                    closed = ((l, m, n), a)
    _cross_check(Family.P3_MIXED, params, found, closed)
    return _mates(params, found)


def p3_coclique_clique_witness(params: PineappleParams) -> list[FamilySpec]:
    """All solutions of type ``(-l, m, n)``; the only one is the pineapple itself."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    found = []
    for m in range(1, p - 1):
        l, r = divmod(k * q, m)
        if r or l < 1 or l > q:
            continue
        spec = FamilySpec(Family.P3_CM, (l, m, p - m), q - l)
        if _accept(params, spec, target):
            found.append(spec)
    return found


def solve_p3_coclique_clique(params: PineappleParams) -> list[Mate]:
    """Type ``(-l, m, n)``.  Always empty: the unique solution is the pineapple."""
    witness = p3_coclique_clique_witness(params)
    expected = FamilySpec(Family.P3_CM, (params.q, params.k, params.p - params.k), 0)
    if witness != [expected]:
        raise ClosedFormMismatch(f"(-l,m,n) solutions for {params}: {witness}")
    return []


def solve_p3_cliques(params: PineappleParams) -> list[Mate]:
    """Type ``(l, m, n)``: ``a = q-1``, ``l+m+n = p+1``, ``ln = p-kq``; emitted with ``l <= n``."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    prod = p - k * q
    found = []
    if prod >= 2:
        for l in range(1, isqrt(prod) + 1):
            n, r = divmod(prod, l)
            if r or n < 2:
                continue
            m = p + 1 - l - n
            if m < 1:
                continue
            spec = FamilySpec(Family.P3_CCC, (l, m, n), q - 1)
            if _accept(params, spec, target):
                found.append(spec)

    closed = None
    if prod > 0:
        m_cf = _as_int(Fraction(k * q * (p - k), prod))
        if m_cf is not None and m_cf >= 1:
            root = _sqrt((p - m_cf + 1) ** 2 - 4 * prod)
            if root is not None:
                l2, n2 = p - m_cf + 1 - root, p - m_cf + 1 + root
                if l2 % 2 == 0 and l2 >= 2 and n2 >= 4:
                    closed = ((l2 // 2, m_cf, n2 // 2), q - 1)
    _cross_check(Family.P3_CCC, params, found, closed)
    return _mates(params, found)


# --- one main component: mixed extensions of P4 ------------------------------------

def solve_p4_a(params: PineappleParams) -> list[Mate]:
    """Type ``(l, -3, -2, -2)`` with ``l = p-2``, ``a = q-5``."""
    p, k, q = params.p, params.k, params.q
    found = []
    if q >= 5:
        spec = FamilySpec(Family.P4_A, (p - 2,), q - 5)
        if _accept(params, spec, pineapple_poly(params)):
            found.append(spec)
    holds = k * q == p + 7 and p * p - (k + 6) * p - 7 * k + 17 == 0 and q >= 5
    _cross_check(Family.P4_A, params, found, ((p - 2,), q - 5) if holds else None)
    return _mates(params, found)


def solve_p4_b(params: PineappleParams) -> list[Mate]:
    """Type ``(-2, m, n, -2)``: ``m+n = p-1``, ``a = q-3``; emitted with ``m >= n``."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    found = []
    if q >= 3:
        for n in range(1, (p - 1) // 2 + 1):
            m = p - 1 - n
            spec = FamilySpec(Family.P4_B, (m, n), q - 3)
            if _accept(params, spec, target):
                found.append(spec)

    closed = None
    b = _sqrt(q)
    if k * q == p - 1 and b is not None and b >= 2:
        m2, n2 = k * (q + b), k * (q - b)
        if m2 % 2 == 0 and n2 % 2 == 0 and n2 >= 2:
            closed = ((m2 // 2, n2 // 2), q - 3)
    _cross_check(Family.P4_B, params, found, closed)
    return _mates(params, found)


def p4_c_quartic(params: PineappleParams) -> int:
    """Consistency condition for type ``(l, -2, n, -3)``.

    Eliminating ``l`` and ``n`` from ``l + n = p - 1``, ``3n - ln = kq - p + 1``
    and ``6ln = kq(p-k-1)``.  The constant part is ``144(p-1)^2``.
    """
    p, k, q = params.p, params.k, params.q
    return (k ** 4 * q ** 2 - (2 * p + 10) * q ** 2 * k ** 3
            + ((p * p + 10 * p + 25) * q ** 2 + (30 * p - 84) * q) * k ** 2
            - (30 * p * p + 66 * p - 96) * k * q + 144 * (p - 1) ** 2)


def solve_p4_c(params: PineappleParams) -> list[Mate]:
    """Type ``(l, -2, n, -3)``: ``l+n = p-1``, ``a = q-4``."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    found = []
    if q >= 4:
        for l in range(1, p - 1):
            spec = FamilySpec(Family.P4_C, (l, p - 1 - l), q - 4)
            if _accept(params, spec, target):
                found.append(spec)

    closed = None
    if q >= 4 and p4_c_quartic(params) == 0:
        n_cf = Fraction(k * q * (p - k - 1) + 6 * (k * q - p + 1), 18)
        den = k * q * (p - k + 5) - 6 * (p - 1)
        l_cf = Fraction(3 * k * q * (p - k - 1), den) if den else None
        if l_cf is not None:
            l, n = _as_int(l_cf), _as_int(n_cf)
            if l is not None and n is not None and l >= 1 and n >= 1:
                closed = ((l, n), q - 4)
    _cross_check(Family.P4_C, params, found, closed)
    return _mates(params, found)


def _solve_p4_table_rows() -> dict[tuple[int, int, int], list[FamilySpec]]:
    """Every solution of the ten ``(l, m, -n, s)`` systems, solved exactly.

    For a row the ``-1`` multiplicity fixes ``p``; for each ``k`` the
    remaining two coefficient equations are linear in ``n``.
    """
    out: dict[tuple[int, int, int], list[FamilySpec]] = {}
    for (l, m, s), (e, alpha, beta, gamma, delta) in P4_TABLE_ROWS.items():
        p = e + 2
        for k in range(1, p - 1):
            # kq = alpha n + beta - p + 1 and gamma n + delta = kq (p - k - 1)
            den = alpha * (p - k - 1) - gamma
            num = delta - (beta - p + 1) * (p - k - 1)
            if den == 0:
                if num == 0:
                    raise ClosedFormMismatch(f"row {(l, m, s)} is degenerate for k={k}")
                continue
            if num % den:
                continue
            n = num // den
            kq = alpha * n + beta - p + 1
            if n < 1 or kq <= 0 or kq % k:
                continue
            q = kq // k
            a = q - 1 - n
            if a < 0:
                continue
            out.setdefault((p, k, q), []).append(FamilySpec(Family.P4_TABLE, (l, m, n, s), a))
    return out


# Solutions of the ten-row P4 family, as (p, k, q) -> (l, m, n, s, a).
P4_TABLE_SOLUTIONS: dict[tuple[int, int, int], tuple[int, int, int, int, int]] = {
    (11, 1, 84): (7, 2, 20, 3, 63),
    (9, 1, 36): (4, 3, 8, 3, 27),
    (10, 2, 45): (5, 2, 18, 4, 26),
    (11, 2, 112): (7, 2, 48, 3, 63),
    (9, 2, 36): (4, 3, 14, 3, 21),
    (11, 2, 63): (7, 3, 27, 2, 35),
    (10, 2, 27): (3, 4, 9, 4, 17),
    (10, 2, 20): (5, 4, 8, 2, 11),
    (10, 3, 120): (5, 2, 63, 4, 56),
}


def _validate_p4_table():
    solved = _solve_p4_table_rows()
    literal = {pkq: [FamilySpec(Family.P4_TABLE, v[:4], v[4])]
               for pkq, v in P4_TABLE_SOLUTIONS.items()}
    if solved != literal:
        raise ClosedFormMismatch(f"P4 table {literal} disagrees with the row systems {solved}")


_validate_p4_table()


def solve_p4_table(params: PineappleParams) -> list[Mate]:
    """Type ``(l, m, -n, s)``: lookup in the finite solution table."""
    hit = P4_TABLE_SOLUTIONS.get((params.p, params.k, params.q))
    if hit is None:
        return []
    spec = FamilySpec(Family.P4_TABLE, hit[:4], hit[4])
    if not _accept(params, spec, pineapple_poly(params)):
        raise ClosedFormMismatch(f"P4 table entry {spec} does not match {params}")
    return _mates(params, [spec])


# --- one main component: mixed extension of P5 -------------------------------------

# The published bound is l, n >= 2, but l = 1 mates exist (e.g. K_{5,1}^5).
P5_MIN_END = 1


def solve_p5(params: PineappleParams) -> list[Mate]:
    """Type ``(1, l, -m, n, 1)``: ``l+n = p-1``, ``m(p-1) = kq + ln``, ``a = q-1-m``; ``l <= n``."""
    p, k, q = params.p, params.k, params.q
    target = pineapple_poly(params)
    found = []
    for l in range(P5_MIN_END, (p - 1) // 2 + 1):
        n = p - 1 - l
        if n < P5_MIN_END:
            continue
        m, r = divmod(k * q + l * n, p - 1)
        if r or m < 1 or m > q - 1:
            continue
        spec = FamilySpec(Family.P5, (l, m, n), q - 1 - m)
        if _accept(params, spec, target):
            found.append(spec)

    closed = None
    s = _sqrt((2 * k * q - p + 1) ** 2 + 8 * k * q * (p - 1) * (p - k))
    if s is not None:
        inner = _sqrt((p - 1) ** 2 + 2 * k * q + p - 1 - s)
        if inner is not None:
            vals = [_as_int(v) for v in (
                Fraction(p - 1 - inner, 2),
                Fraction(2 * k * q - p + 1 + s, 4 * (p - 1)),
                Fraction(p - 1 + inner, 2),
                Fraction(4 * p * q - 2 * (k + 2) * q - 3 * (p - 1) - s, 4 * (p - 1)),
            )]
            if None not in vals:
                l, m, n, a = vals
                if l >= P5_MIN_END and n >= P5_MIN_END and m >= 1 and a >= 0:
                    closed = ((l, m, n), a)
    _cross_check(Family.P5, params, found, closed)
    return _mates(params, found)


SOLVERS = (
    solve_two_component,
    solve_p3_cocliques,
    solve_p3_clique_coclique,
    solve_p3_coclique_clique,
    solve_p3_cliques,
    solve_p4_a,
    solve_p4_b,
    solve_p4_c,
    solve_p4_table,
    solve_p5,
)


def candidate_mates(params: PineappleParams) -> list[Mate]:
    """All solver hits, deduplicated up to isomorphism, pineapple excluded, unverified."""
    seen = {_pineapple_key(params)}
    out = []
    for solver in SOLVERS:
        for mate in solver(params):
            key = mate.spec.iso_key()
            if key in seen:
                continue
            seen.add(key)
            out.append(mate)
    return sorted(out, key=Mate.sort_key)


def enumerate_mates(params: PineappleParams, verify: bool = True) -> Classification:
    """Classify ``K_{p,k}^q``: every cospectral mate, spectrally verified."""
    mates = candidate_mates(params)
    if verify:
        from .oracle.verify import verify_mate

        checked = []
        for mate in mates:
            if not verify_mate(params, mate.spec):
                raise VerificationError(f"{mate} is not cospectral with {params}")
            checked.append(replace(mate, verified=True))
        mates = checked
    return Classification(params, tuple(mates), tuple(two_component_rejected_roots(params)))


def corollary_family(a_odd: int) -> tuple[PineappleParams, Mate]:
    """Infinite non-DAS family: ``K_t ∪ CS ∪ aK1`` with ``t = a`` for odd ``a >= 3``."""
    if a_odd < 3 or a_odd % 2 == 0:
        raise InvalidParams(f"need an odd integer >= 3, got {a_odd}")
    a = a_odd
    params = PineappleParams((7 * a - 1) // 2, (a - 1) // 2, (5 * a - 1) // 2)
    spec = FamilySpec(Family.TWO_COMPONENT, (a, (5 * a - 1) // 2, (3 * a - 1) // 2), a)
    from .oracle.verify import verify_mate

    if not verify_mate(params, spec):
        raise VerificationError(f"{spec.describe()} is not cospectral with {params}")
    return params, Mate(spec, spec.order, verified=True)
