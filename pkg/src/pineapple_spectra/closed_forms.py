"""Factored characteristic polynomials of the structured graph families.

Each polynomial is kept as ``x^a (x+1)^b g(x)`` with ``g`` coprime to
``x(x+1)``.  That normal form turns cospectrality with a pineapple graph into
a comparison of two integers and one low-degree polynomial.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .graph import (
    Graph,
    InvalidParams,
    MixedExtension,
    PineappleParams,
    disjoint_union,
    make_complete,
    make_complete_split,
    make_mixed_extension,
)
from .poly import IntPoly, X, count_real_roots
from .spectra import berkowitz

__all__ = [
    "FactoredPoly",
    "Family",
    "FamilySpec",
    "P4_TABLE_ROWS",
    "cubic_root_pattern",
    "cs_poly",
    "family_poly",
    "pineapple_poly",
    "quotient_family_poly",
]

_X1 = IntPoly([1, 1])


@dataclass(frozen=True)
class FactoredPoly:
    """``x**x_mult * (x+1)**x1_mult * cubic`` with ``cubic(0) != 0 != cubic(-1)``."""

    x_mult: int
    x1_mult: int
    cubic: IntPoly

    def __post_init__(self):
        if self.x_mult < 0 or self.x1_mult < 0:
            raise ValueError("multiplicities must be nonnegative")
        if self.cubic.is_zero():
            raise ValueError("the coprime factor must be nonzero")
        if self.cubic(0) == 0 or self.cubic(-1) == 0:
            raise ValueError(f"{self.cubic} is not coprime to x(x+1); use FactoredPoly.build")

    @classmethod
    def build(cls, x_mult: int, x1_mult: int, factor: IntPoly) -> FactoredPoly:
        """Normalize by moving any roots 0 and -1 of ``factor`` into the multiplicities."""
        while factor.degree > 0 and factor(0) == 0:
            factor = IntPoly(factor.coeffs[1:])
            x_mult += 1
        while factor.degree > 0:
            quot, rem = factor.synthetic_division(-1)
            if rem:
                break
            factor = quot
            x1_mult += 1
        return cls(x_mult, x1_mult, factor)

    @property
    def degree(self) -> int:
        return self.x_mult + self.x1_mult + self.cubic.degree

    def expand(self) -> IntPoly:
        return X ** self.x_mult * _X1 ** self.x1_mult * self.cubic

    def times_x(self, a: int) -> FactoredPoly:
        return FactoredPoly(self.x_mult + a, self.x1_mult, self.cubic)

    def __mul__(self, other: FactoredPoly) -> FactoredPoly:
        return FactoredPoly.build(self.x_mult + other.x_mult, self.x1_mult + other.x1_mult,
                                  self.cubic * other.cubic)

    def __str__(self) -> str:
        parts = []
        if self.x_mult:
            parts.append("x" if self.x_mult == 1 else f"x^{self.x_mult}")
        if self.x1_mult:
            parts.append("(x+1)" if self.x1_mult == 1 else f"(x+1)^{self.x1_mult}")
        if self.cubic != IntPoly([1]):
            body = str(self.cubic)
            parts.append(f"({body})" if parts else body)
        return "".join(parts) or "1"

    def to_dict(self) -> dict:
        return {
            "x_mult": self.x_mult,
            "x1_mult": self.x1_mult,
            "cubic": [str(c) for c in self.cubic.coeffs],
            "expanded": [str(c) for c in self.expand().coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> FactoredPoly:
        return cls(int(data["x_mult"]), int(data["x1_mult"]),
                   IntPoly(int(c) for c in data["cubic"]))


def _cubic(c2: int, c1: int, c0: int) -> IntPoly:
    """``x^3 + c2 x^2 + c1 x + c0``."""
    return IntPoly([c0, c1, c2, 1])


def cs_poly(indep: int, clique: int) -> FactoredPoly:
    """Complete split graph: ``x^(i-1) (x+1)^(c-1) (x^2 - (c-1)x - ic)``."""
    if indep < 1 or clique < 1:
        raise InvalidParams(f"need indep, clique >= 1, got {indep}, {clique}")
    return FactoredPoly.build(indep - 1, clique - 1,
                              IntPoly([-indep * clique, -(clique - 1), 1]))


def pineapple_poly(params: PineappleParams) -> FactoredPoly:
    p, k, q = params.p, params.k, params.q
    return FactoredPoly(q - 1, p - 2, _cubic(-(p - 2), -(p + k * q - 1), k * q * (p - k - 1)))


def cubic_root_pattern(cubic: IntPoly) -> tuple[int, int, int]:
    """Distinct real roots below -1, in [-1, 0] and above 0, by Sturm counting."""
    return (count_real_roots(cubic, "-inf", -1) - (cubic(-1) == 0),
            count_real_roots(cubic, -1, 0) + (cubic(-1) == 0),
            count_real_roots(cubic, 0, "+inf"))


class Family(str, enum.Enum):
    TWO_COMPONENT = "TwoComponent"
    P3_CC = "P3_cc"        # (-l, -m, n)
    P3_MIXED = "P3_mixed"  # (l, -m, n)
    P3_CM = "P3_cm"        # (-l, m, n)
    P3_CCC = "P3_ccc"      # (l, m, n)
    P4_A = "P4_a"          # (l, -3, -2, -2)
    P4_B = "P4_b"          # (-2, m, n, -2)
    P4_C = "P4_c"          # (l, -2, n, -3)
    P4_TABLE = "P4_table"  # (l, m, -n, s)
    P5 = "P5"              # (1, l, -m, n, 1)

    def __str__(self) -> str:
        return self.value


PARAM_NAMES: dict[Family, tuple[str, ...]] = {
    Family.TWO_COMPONENT: ("t", "m", "n"),
    Family.P3_CC: ("l", "m", "n"),
    Family.P3_MIXED: ("l", "m", "n"),
    Family.P3_CM: ("l", "m", "n"),
    Family.P3_CCC: ("l", "m", "n"),
    Family.P4_A: ("l",),
    Family.P4_B: ("m", "n"),
    Family.P4_C: ("l", "n"),
    Family.P4_TABLE: ("l", "m", "n", "s"),
    Family.P5: ("l", "m", "n"),
}

# (l, m, s) -> (e, alpha, beta, gamma, delta) where the factored polynomial of
# (l, m, -n, s) + aK1 is x^(a+n) (x+1)^e [x^3 - e x^2 - (alpha n + beta) x + gamma n + delta].
P4_TABLE_ROWS: dict[tuple[int, int, int], tuple[int, int, int, int, int]] = {
    (3, 3, 6): (9, 9, -15, 45, 25),
    (3, 4, 4): (8, 8, -9, 40, 18),
    (3, 6, 3): (9, 9, -6, 45, 16),
    (4, 2, 6): (9, 8, -15, 40, 25),
    (4, 3, 3): (7, 6, -4, 30, 12),
    (4, 6, 2): (9, 8, 1, 40, 9),
    (5, 2, 4): (8, 6, -9, 34, 18),
    (5, 4, 2): (8, 6, 1, 34, 8),
    (7, 2, 3): (9, 5, -6, 37, 16),
    (7, 3, 2): (9, 5, 1, 37, 9),
}

# Order of the main component minus the free parameters, per P4/P5 family.
_FIXED_ORDER = {Family.P4_A: 7, Family.P4_B: 4, Family.P4_C: 5, Family.P5: 2}


@dataclass(frozen=True)
class FamilySpec:
    """One candidate graph: a family, its integer parameters and ``a`` isolated vertices."""

    family: Family
    params: tuple[int, ...]
    isolated: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", tuple(int(v) for v in self.params))
        names = PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise InvalidParams(f"{self.family} takes parameters {names}, got {self.params}")
        if self.isolated < 0:
            raise InvalidParams(f"isolated must be >= 0, got {self.isolated}")
        self._check_bounds()

    def _check_bounds(self):
        f, v = self.family, self.params
        if f is Family.TWO_COMPONENT:
            t, m, n = v
            ok = t >= 2 and m >= 1 and n >= 1
        elif f in (Family.P3_CC, Family.P3_MIXED, Family.P3_CM, Family.P3_CCC):
            l, m, n = v
            ok = l >= 1 and m >= 1 and n >= 2
        elif f is Family.P4_TABLE:
            l, m, n, s = v
            ok = n >= 1 and (l, m, s) in P4_TABLE_ROWS
        else:
            ok = all(x >= 1 for x in v)
        if not ok:
            raise InvalidParams(f"parameters {self.params_dict()} out of range for {f}")

    @classmethod
    def of(cls, family: Family | str, isolated: int = 0, **params: int) -> FamilySpec:
        names = PARAM_NAMES[Family(family)]
        return cls(Family(family), tuple(params[n] for n in names), isolated)

    def params_dict(self) -> dict[str, int]:
        return dict(zip(PARAM_NAMES[self.family], self.params))

    def mixed_extension(self) -> MixedExtension | None:
        """The main component as a mixed extension of a path (None for two components)."""
        f, v = self.family, self.params
        types = {
            Family.P3_CC: lambda l, m, n: (-l, -m, n),
            Family.P3_MIXED: lambda l, m, n: (l, -m, n),
            Family.P3_CM: lambda l, m, n: (-l, m, n),
            Family.P3_CCC: lambda l, m, n: (l, m, n),
            Family.P4_A: lambda l: (l, -3, -2, -2),
            Family.P4_B: lambda m, n: (-2, m, n, -2),
            Family.P4_C: lambda l, n: (l, -2, n, -3),
            Family.P4_TABLE: lambda l, m, n, s: (l, m, -n, s),
            Family.P5: lambda l, m, n: (1, l, -m, n, 1),
        }
        if f is Family.TWO_COMPONENT:
            return None
        return MixedExtension(types[f](*v))

    @property
    def main_order(self) -> int:
        if self.family is Family.TWO_COMPONENT:
            return sum(self.params)
        return self.mixed_extension().order

    @property
    def order(self) -> int:
        return self.main_order + self.isolated

    def realize_main(self) -> Graph:
        if self.family is Family.TWO_COMPONENT:
            t, m, n = self.params
            return disjoint_union([make_complete(t), make_complete_split(indep=n, clique=m)])
        return make_mixed_extension(self.mixed_extension())

    def realize(self) -> Graph:
        return disjoint_union([self.realize_main()], self.isolated)

    def iso_key(self) -> tuple:
        """Isomorphism invariant that is complete for these families."""
        if self.family is Family.TWO_COMPONENT:
            t, m, n = self.params
            comps = [("K", t), ("K", m + 1) if n == 1 else ("CS", m, n)]
            return ("union", tuple(sorted(comps)), self.isolated)
        return ("path", self.mixed_extension().normal_form(), self.isolated)

    def describe(self) -> str:
        if self.family is Family.TWO_COMPONENT:
            t, m, n = self.params
            main = f"K_{t} ∪ CS(clique={m}, indep={n})"
        else:
            me = self.mixed_extension()
            main = f"P{me.base_len} {me}"
        return main + (f" ∪ {self.isolated}K_1" if self.isolated else "")

    def to_dict(self) -> dict:
        return {"family": self.family.value, "params": self.params_dict(),
                "isolated": self.isolated, "order": self.order}

    @classmethod
    def from_dict(cls, data: dict) -> FamilySpec:
        return cls.of(data["family"], int(data["isolated"]),
                      **{k: int(v) for k, v in data["params"].items()})


def family_poly(spec: FamilySpec) -> FactoredPoly:
    """Factored characteristic polynomial of the realized graph, from closed forms."""
    f, a = spec.family, spec.isolated
    if f is Family.TWO_COMPONENT:
        t, m, n = spec.params
        if n == 1:
            return FactoredPoly.build(a, m + t - 1, IntPoly([(t - 1) * m, -(m + t - 1), 1]))
        quad = IntPoly([-m * n, -(m - 1), 1])
        return FactoredPoly.build(a + n - 1, m + t - 2, IntPoly([-(t - 1), 1]) * quad)
    if f is Family.P3_CC:
        l, m, n = spec.params
        return FactoredPoly.build(a + l + m - 2, n - 1,
                                  _cubic(-(n - 1), -(l * m + m * n), l * m * n - l * m))
    if f is Family.P3_MIXED:
        l, m, n = spec.params
        return FactoredPoly.build(a + m - 1, l + n - 2,
                                  _cubic(-(l + n - 2), -(l * m + m * n - l * n + l + n - 1),
                                         2 * l * m * n - l * m - m * n))
    if f is Family.P3_CM:
        l, m, n = spec.params
        return FactoredPoly.build(a + l - 1, m + n - 2,
                                  _cubic(-(m + n - 2), -(l * m + m + n - 1), l * m * n - l * m))
    if f is Family.P3_CCC:
        l, m, n = spec.params
        return FactoredPoly.build(a, l + m + n - 3,
                                  _cubic(-(l + m + n - 3), -(2 * m + 2 * n + 2 * l - l * n - 3),
                                         l * m * n + l * n - l - m - n + 1))
    if f is Family.P4_A:
        (l,) = spec.params
        return FactoredPoly.build(a + 4, l, _cubic(-l, -(2 * l + 10), 12 * l))
    if f is Family.P4_B:
        m, n = spec.params
        return FactoredPoly.build(a + 2, m + n - 1,
                                  _cubic(-(m + n - 1), -(2 * m + 2 * n), 4 * m * n))
    if f is Family.P4_C:
        l, n = spec.params
        return FactoredPoly.build(a + 3, l + n - 1,
                                  _cubic(-(l + n - 1), -(5 * n + 2 * l - l * n), 6 * l * n))
    if f is Family.P4_TABLE:
        l, m, n, s = spec.params
        e, alpha, beta, gamma, delta = P4_TABLE_ROWS[(l, m, s)]
        return FactoredPoly.build(a + n, e, _cubic(-e, -(alpha * n + beta), gamma * n + delta))
    if f is Family.P5:
        l, m, n = spec.params
        return FactoredPoly.build(a + m, l + n - 1,
                                  _cubic(-(l + n - 1), -(m * n - l * n + l * m + l + n),
                                         2 * l * m * n + l * n))
    raise InvalidParams(f"unknown family {f!r}")


def _path_quotient(types: tuple[int, ...]) -> list[list[int]]:
    size = len(types)
    q = [[0] * size for _ in range(size)]
    for i, t in enumerate(types):
        if t > 0:
            q[i][i] = t - 1
        for j in (i - 1, i + 1):
            if 0 <= j < size:
                q[i][j] = abs(types[j])
    return q


def mixed_extension_poly(me: MixedExtension, isolated: int = 0) -> FactoredPoly:
    """Factored polynomial of a mixed extension from its quotient matrix.

    Each coclique of size ``s`` carries ``s - 1`` extra zero eigenvalues and
    each clique of size ``s`` carries ``s - 1`` extra ``-1`` eigenvalues; the
    rest of the spectrum is that of the quotient matrix.
    """
    x_mult = isolated + sum(-t - 1 for t in me.types if t < 0)
    x1_mult = sum(t - 1 for t in me.types if t > 0)
    return FactoredPoly.build(x_mult, x1_mult, berkowitz(_path_quotient(me.types)))


def quotient_family_poly(spec: FamilySpec) -> FactoredPoly:
    """Same as :func:`family_poly`, derived from quotient matrices instead of closed forms."""
    if spec.family is Family.TWO_COMPONENT:
        t, m, n = spec.params
        clique = FactoredPoly.build(0, t - 1, IntPoly([-(t - 1), 1]))
        split = mixed_extension_poly(MixedExtension((m, -n)))
        return (clique * split).times_x(spec.isolated)
    return mixed_extension_poly(spec.mixed_extension(), spec.isolated)
