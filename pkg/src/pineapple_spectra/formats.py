"""graph6 and edge-list serialization."""
from __future__ import annotations

import numpy as np

from .graph import Graph

__all__ = ["FormatError", "export", "parse", "to_graph6", "from_graph6",
           "to_edge_list", "from_edge_list"]

GRAPH6_MAX_ORDER = 258047


class FormatError(ValueError):
    pass


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= GRAPH6_MAX_ORDER:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise FormatError(f"graph6 supports at most {GRAPH6_MAX_ORDER} vertices, got {n}")


def to_graph6(g: Graph) -> bytes:
    n = g.order
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    cols, rows = np.triu_indices(n, k=1)[::-1]
    order = np.lexsort((rows, cols))
    bits = g.adjacency[rows[order], cols[order]].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1))
    return _encode_order(n) + bytes((groups + 63).astype(np.uint8).tolist())


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data or any(c < 63 or c > 126 for c in data):
        raise FormatError("not a graph6 string")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise FormatError("unsupported graph6 order prefix")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = n * (n - 1) // 2
    if len(body) != -(-need // 6):
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {-(-need // 6)}")
    vals = np.frombuffer(body, dtype=np.uint8).astype(np.int64) - 63
    bits = ((vals[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:need]
    cols, rows = np.triu_indices(n, k=1)[::-1]
    order = np.lexsort((rows, cols))
    adj = np.zeros((n, n), dtype=bool)
    adj[rows[order], cols[order]] = bits.astype(bool)
    return Graph(adj | adj.T)


def to_edge_list(g: Graph) -> bytes:
    return "\n".join(f"{u} {v}" for u, v in g.edges()).encode("utf-8")


def from_edge_list(data: bytes | str, order: int) -> Graph:
    """Parse ``"u v"`` lines; ``order`` is needed because isolated vertices leave no trace."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    edges = []
    for lineno, line in enumerate(data.splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if not (0 <= u < order and 0 <= v < order):
            raise FormatError(f"line {lineno}: vertex out of range for order {order}")
        edges.append((u, v))
    return Graph.from_edges(order, edges)


def export(g: Graph, format: str) -> bytes:
    if format == "graph6":
        return to_graph6(g)
    if format in ("edge-list", "edgelist"):
        return to_edge_list(g)
    raise FormatError(f"unknown format {format!r}")


def parse(data: bytes | str, format: str, order: int | None = None) -> Graph:
    if format == "graph6":
        return from_graph6(data)
    if format in ("edge-list", "edgelist"):
        if order is None:
            raise FormatError("edge-list parsing needs the graph order")
        return from_edge_list(data, order)
    raise FormatError(f"unknown format {format!r}")
