"""Exact characteristic polynomials, ranks and quotient matrices.

Everything here runs on Python integers; no floating point is involved.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

from .graph import Graph
from .poly import IntPoly, X

__all__ = [
    "NonEquitablePartition",
    "QuotientMatrix",
    "bareiss_det",
    "berkowitz",
    "char_poly",
    "char_poly_interpolation",
    "integer_root_multiplicity",
    "is_cospectral",
    "poly_divides",
    "quotient_matrix",
    "rank_over_rationals",
]

IntMatrix = Sequence[Sequence[int]]


def berkowitz(m: IntMatrix) -> IntPoly:
    """``det(xI - m)`` for any square integer matrix, division free."""
    n = len(m)
    vect = [1]
    for r in range(n):
        col = [m[i][r] for i in range(r)]
        row = [m[r][j] for j in range(r)]
        toep = [1, -m[r][r]]
        v = col
        for i in range(r):
            toep.append(-sum(a * b for a, b in zip(row, v)))
            if i < r - 1:
                v = [sum(a * b for a, b in zip(m[k][:r], v)) for k in range(r)]
        vect = _toeplitz_times(toep, vect)
    return IntPoly.from_high(vect)


def _toeplitz_times(toep: list[int], vect: list[int]) -> list[int]:
    out = []
    for i in range(len(vect) + 1):
        lo = max(0, i - len(toep) + 1)
        out.append(sum(toep[i - j] * vect[j] for j in range(lo, min(i, len(vect) - 1) + 1)))
    return out


def _berkowitz_symmetric01(adj: np.ndarray) -> list[int]:
    """Berkowitz for a symmetric 0/1 matrix with zero diagonal.

    Uses ``R A^i C = (A^a C).(A^b C)`` with ``a + b = i`` to halve the Krylov
    work, and sums over non-neighbours when a row is denser than half.
    """
    n = adj.shape[0]
    nbrs = [np.flatnonzero(adj[i]).tolist() for i in range(n)]
    non = [np.flatnonzero(~adj[i]).tolist() for i in range(n)]
    for i in range(n):
        non[i].remove(i)
    vect = [1]
    for r in range(n):
        lists = []
        for i in range(r):
            cut_n = bisect_left(nbrs[i], r)
            cut_c = bisect_left(non[i], r)
            if cut_n <= cut_c:
                lists.append((False, nbrs[i][:cut_n]))
            else:
                lists.append((True, non[i][:cut_c]))
        col = [1 if adj[i, r] else 0 for i in range(r)]
        krylov = [col]
        half = r // 2
        for _ in range(half):
            w = krylov[-1]
            total = sum(w)
            get = w.__getitem__
            krylov.append([
                total - w[i] - sum(map(get, lst)) if dense else sum(map(get, lst))
                for i, (dense, lst) in enumerate(lists)
            ])
        toep = [1, 0]
        for i in range(r):
            a = i // 2
            b = i - a
            toep.append(-sum(x * y for x, y in zip(krylov[a], krylov[b])))
        vect = _toeplitz_times(toep, vect)
    return vect


def char_poly(g: Graph, split_components: bool = True) -> IntPoly:
    """Characteristic polynomial ``det(xI - A(g))``, exact.

    With ``split_components`` the polynomial is assembled as the product over
    connected components, isolated vertices contributing a factor ``x`` each.
    """
    adj = g.adjacency
    if not split_components:
        return IntPoly.from_high(_berkowitz_symmetric01(adj))
    ncomp, labels = connected_components(adj, directed=False)
    result = IntPoly([1])
    isolated = 0
    for c in range(ncomp):
        idx = np.flatnonzero(labels == c)
        if len(idx) == 1:
            isolated += 1
            continue
        sub = adj[np.ix_(idx, idx)]
        result = result * IntPoly.from_high(_berkowitz_symmetric01(sub))
    return result * X ** isolated


def bareiss_det(m: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank_over_rationals(m: IntMatrix) -> int:
    """Rank via fraction-free row echelon form."""
    a = [list(map(int, row)) for row in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][c]
        for i in range(rank + 1, nrows):
            aic = a[i][c]
            row_i, row_r = a[i], a[rank]
            for j in range(c + 1, ncols):
                num = pivot * row_i[j] - aic * row_r[j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division must be exact"
                row_i[j] = q
            row_i[c] = 0
        prev = pivot
        rank += 1
    return rank


def char_poly_interpolation(m: Graph | IntMatrix) -> IntPoly:
    """``det(xI - m)`` from exact determinants at ``x = 0..n`` and Newton interpolation.

    Independent of :func:`berkowitz`; used to cross-check it.
    """
    if isinstance(m, Graph):
        m = m.integer_matrix()
    n = len(m)
    nodes = list(range(n + 1))
    values = []
    for x in nodes:
        shifted = [[(x if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
        values.append(Fraction(bareiss_det(shifted)))
    # divided differences
    coef = values[:]
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (nodes[i] - nodes[i - level])
    # expand Newton form into monomial coefficients, low degree first
    poly = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]
    for i in range(n + 1):
        for d, b in enumerate(basis):
            poly[d] += coef[i] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for d, b in enumerate(basis):
            nxt[d + 1] += b
            nxt[d] -= nodes[i] * b
        basis = nxt
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("interpolated characteristic polynomial is not integral")
    return IntPoly(int(c) for c in poly)


def is_cospectral(a: Graph, b: Graph) -> bool:
    return a.order == b.order and char_poly(a) == char_poly(b)


def integer_root_multiplicity(f: IntPoly, r: int) -> int:
    """Largest ``m`` such that ``(x - r)**m`` divides ``f``."""
    if f.is_zero():
        raise ValueError("root multiplicity is undefined for the zero polynomial")
    mult = 0
    while f.degree > 0:
        quot, rem = f.synthetic_division(r)
        if rem != 0:
            break
        f = quot
        mult += 1
    return mult


def poly_divides(d: IntPoly, f: IntPoly) -> bool:
    """True when ``d`` divides ``f`` in Q[x]."""
    if d.is_zero():
        raise ZeroDivisionError("the zero polynomial divides nothing")
    _, rem = f.divmod_rational(d)
    return not rem


class NonEquitablePartition(ValueError):
    """A partition in which two vertices of one part see a part differently."""

    def __init__(self, witness: tuple[int, int], part: int, counts: tuple[int, int]):
        self.witness = witness
        self.part = part
        self.counts = counts
        u, v = witness
        super().__init__(
            f"vertices {u} and {v} have {counts[0]} and {counts[1]} "
            f"neighbours in part {part}"
        )


@dataclass(frozen=True)
class QuotientMatrix:
    """Neighbour counts between the parts of an equitable partition."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def char_poly(self) -> IntPoly:
        return berkowitz(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def quotient_matrix(g: Graph, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Quotient matrix of an equitable partition, checked vertex by vertex.

    Within-part counts are checked as well, so the diagonal is well defined.
    """
    n = g.order
    owner = np.full(n, -1)
    for i, part in enumerate(partition):
        if len(part) == 0:
            raise ValueError(f"part {i} is empty")
        for v in part:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
            if owner[v] != -1:
                raise ValueError(f"vertex {v} appears in more than one part")
            owner[v] = i
    if (owner == -1).any():
        raise ValueError(f"vertices {np.flatnonzero(owner == -1).tolist()} are not covered")
    indicator = np.zeros((n, len(partition)), dtype=np.int64)
    indicator[np.arange(n), owner] = 1
    counts = g.adjacency.astype(np.int64) @ indicator
    rows = []
    for i, part in enumerate(partition):
        ref = part[0]
        for v in part[1:]:
            diff = np.flatnonzero(counts[v] != counts[ref])
            if len(diff):
                j = int(diff[0])
                raise NonEquitablePartition((ref, v), j, (int(counts[ref, j]), int(counts[v, j])))
        rows.append(tuple(int(c) for c in counts[ref]))
    return QuotientMatrix(tuple(rows))
