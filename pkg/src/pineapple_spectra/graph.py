"""Dense simple graphs and the structured families built from them.

Every graph here is stored as a read-only boolean adjacency matrix.  The
constructors cover complete graphs, complete split graphs, generalized
pineapple graphs, mixed extensions of paths and disjoint unions padded with
isolated vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "InvalidParams",
    "MixedExtension",
    "PineappleParams",
    "disjoint_union",
    "make_complete",
    "make_complete_split",
    "make_mixed_extension",
    "make_pineapple",
    "mixed_ext_isomorphic",
]


class InvalidParams(ValueError):
    """Raised when graph parameters violate a constructor's preconditions."""


class Graph:
    """Finite simple undirected graph with a dense adjacency matrix."""

    __slots__ = ("_adj", "_hash")

    def __init__(self, adjacency: np.ndarray | Sequence[Sequence[int]]):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidParams(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] < 1:
            raise InvalidParams("a graph needs at least one vertex")
        if not np.array_equal(adj, adj.T):
            raise InvalidParams("adjacency must be symmetric")
        if adj.diagonal().any():
            raise InvalidParams("adjacency must have a zero diagonal")
        adj.flags.writeable = False
        self._adj = adj
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = np.zeros((order, order), dtype=bool)
        for u, v in edges:
            if u == v:
                raise InvalidParams(f"loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    @property
    def order(self) -> int:
        return self._adj.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted lexicographically."""
        rows, cols = np.nonzero(np.triu(self._adj, k=1))
        return list(zip(rows.tolist(), cols.tolist()))

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self._adj[v]).tolist()

    def degrees(self) -> list[int]:
        return self._adj.sum(axis=1).astype(int).tolist()

    def integer_matrix(self) -> list[list[int]]:
        """Adjacency as nested lists of Python ints (for exact arithmetic)."""
        return self._adj.astype(int).tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, np.packbits(self._adj).tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"


@dataclass(frozen=True)
class PineappleParams:
    """Parameters ``(p, k, q)`` of the generalized pineapple graph.

    ``p`` is the clique size, ``k`` the number of clique vertices that carry
    the pendant independent set and ``q`` the size of that independent set.
    """

    p: int
    k: int
    q: int

    def __post_init__(self):
        for name in ("p", "k", "q"):
            if not isinstance(getattr(self, name), (int, np.integer)):
                raise InvalidParams(f"{name} must be an integer")
        if not (self.p - 2 >= self.k >= 1):
            raise InvalidParams(
                f"need p - 2 >= k >= 1, got p={self.p}, k={self.k}"
            )
        if self.q < 1:
            raise InvalidParams(f"need q >= 1, got q={self.q}")

    @property
    def order(self) -> int:
        return self.p + self.q

    def as_mixed_extension(self) -> MixedExtension:
        """The same graph as a mixed extension of P3, type ``(p-k, k, -q)``."""
        return MixedExtension((self.p - self.k, self.k, -self.q))

    def __str__(self) -> str:
        return f"K_{{{self.p},{self.k}}}^{{{self.q}}}"


@dataclass(frozen=True)
class MixedExtension:
    """Mixed extension of the path on ``len(types)`` vertices.

    Entry ``t`` replaces a path vertex by a clique of size ``t`` when positive
    and by a coclique of size ``-t`` when negative.
    """

    types: tuple[int, ...]

    def __post_init__(self):
        types = tuple(int(t) for t in self.types)
        object.__setattr__(self, "types", types)
        if len(types) < 2:
            raise InvalidParams("a mixed extension needs a path on at least 2 vertices")
        if any(t == 0 for t in types):
            raise InvalidParams(f"type entries must be nonzero, got {types}")

    @property
    def base_len(self) -> int:
        return len(self.types)

    @property
    def order(self) -> int:
        return sum(abs(t) for t in self.types)

    def normal_form(self) -> tuple[int, ...]:
        """Canonical type up to path reversal; a single vertex counts as a clique."""
        norm = tuple(1 if t == -1 else t for t in self.types)
        return min(norm, norm[::-1])

    def __str__(self) -> str:
        return "(" + ",".join(str(t) for t in self.types) + ")"


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParams(f"K_n needs n >= 1, got {n}")
    return Graph(~np.eye(n, dtype=bool))


def make_complete_split(indep: int, clique: int) -> Graph:
    """CS with a clique of ``clique`` vertices joined to ``indep`` independent ones.

    The clique occupies vertices ``0..clique-1``.
    """
    if indep < 1 or clique < 1:
        raise InvalidParams(f"need indep, clique >= 1, got {indep}, {clique}")
    return make_mixed_extension(MixedExtension((clique, -indep)))


def make_pineapple(params: PineappleParams) -> Graph:
    """Generalized pineapple graph.

    Clique vertices are ``0..p-1``; the ``k`` attachment vertices are
    ``0..k-1`` and the independent vertices are ``p..p+q-1``.
    """
    p, k, q = params.p, params.k, params.q
    adj = np.zeros((p + q, p + q), dtype=bool)
    adj[:p, :p] = True
    adj[:k, p:] = True
    adj[p:, :k] = True
    np.fill_diagonal(adj, False)
    return Graph(adj)


def _part_slices(sizes: Sequence[int]) -> list[slice]:
    bounds = np.concatenate([[0], np.cumsum(sizes)]).tolist()
    return [slice(a, b) for a, b in zip(bounds[:-1], bounds[1:])]


def make_mixed_extension(spec: MixedExtension) -> Graph:
    """Realize a mixed extension of a path; part ``i`` gets consecutive labels."""
    sizes = [abs(t) for t in spec.types]
    parts = _part_slices(sizes)
    n = sum(sizes)
    adj = np.zeros((n, n), dtype=bool)
    for i, t in enumerate(spec.types):
        if t > 0:
            adj[parts[i], parts[i]] = True
        if i + 1 < len(parts):
            adj[parts[i], parts[i + 1]] = True
            adj[parts[i + 1], parts[i]] = True
    np.fill_diagonal(adj, False)
    return Graph(adj)


def disjoint_union(parts: Sequence[Graph], isolated: int = 0) -> Graph:
    """Block-diagonal union of ``parts`` followed by ``isolated`` extra vertices."""
    if isolated < 0:
        raise InvalidParams(f"isolated must be >= 0, got {isolated}")
    sizes = [g.order for g in parts] + [isolated]
    n = sum(sizes)
    if n < 1:
        raise InvalidParams("the union must have at least one vertex")
    adj = np.zeros((n, n), dtype=bool)
    for g, sl in zip(parts, _part_slices(sizes)):
        adj[sl, sl] = g.adjacency
    return Graph(adj)


def mixed_ext_isomorphic(a: MixedExtension, b: MixedExtension) -> bool:
    """Isomorphism test valid for mixed extensions in reduced form.

    Compares type tuples up to reversal, treating ``1`` and ``-1`` alike.
    Not a general graph isomorphism test.
    """
    return a.normal_form() == b.normal_form()
