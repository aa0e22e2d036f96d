"""Simple undirected graphs, commuting and super commuting graphs, and exports.

A :class:`Graph` wraps a read-only symmetric boolean adjacency matrix with an
empty diagonal.  Vertex ``i`` of a graph built from a group is element ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArityMismatch, PartitionMismatch


@dataclass(frozen=True, eq=False)
class Graph:
    adjacency: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        A = np.array(self.adjacency, dtype=bool)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if not np.array_equal(A, A.T):
            raise ValueError("adjacency must be symmetric")
        if A.diagonal().any():
            raise ValueError("simple graphs have no loops")
        if self.labels is not None and len(self.labels) != A.shape[0]:
            raise ValueError("one label per vertex required")
        A.setflags(write=False)
        object.__setattr__(self, "adjacency", A)

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        A = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            A[u, v] = A[v, u] = True
        return cls(A, labels)

    @property
    def n_vertices(self):
        return self.adjacency.shape[0]

    def __len__(self):
        return self.n_vertices

    @property
    def degrees(self):
        return self.adjacency.sum(axis=1)

    @property
    def n_edges(self):
        return int(self.adjacency.sum()) // 2

    def has_edge(self, u, v):
        return bool(self.adjacency[u, v])

    def neighbors(self, v):
        return np.nonzero(self.adjacency[v])[0]

    def edges(self):
        """Edges ``(u, v)`` with ``u < v`` in ascending order."""
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def same_as(self, other):
        """Identical vertex sets and adjacency (not isomorphism)."""
        return np.array_equal(self.adjacency, other.adjacency)

    def is_subgraph_of(self, other):
        """Edge-set containment on the same vertex set."""
        return self.n_vertices == other.n_vertices and not (self.adjacency & ~other.adjacency).any()

    def __repr__(self):
        return f"Graph(n_vertices={self.n_vertices}, n_edges={self.n_edges})"


def empty_graph(n=0):
    return Graph(np.zeros((n, n), dtype=bool))


def complete(k):
    return Graph(~np.eye(k, dtype=bool))


def disjoint_union(g1, g2):
    n1, n2 = g1.n_vertices, g2.n_vertices
    A = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    A[:n1, :n1] = g1.adjacency
    A[n1:, n1:] = g2.adjacency
    return Graph(A)


def join(g1, g2):
    n1 = g1.n_vertices
    A = disjoint_union(g1, g2).adjacency.copy()
    A[:n1, n1:] = True
    A[n1:, :n1] = True
    return Graph(A)


def induced_subgraph(g, vertices):
    """Subgraph on ``vertices`` (kept in the given order), labels inherited."""
    idx = np.asarray(list(vertices), dtype=np.int64)
    A = g.adjacency[np.ix_(idx, idx)]
    if g.labels is None:
        labels = tuple(idx.tolist())
    else:
        labels = tuple(g.labels[i] for i in idx.tolist())
    return Graph(A, labels)


def generalized_composition(h, parts):
    """Blow up ``h``: vertex i becomes ``parts[i]``; h-adjacent parts are fully joined."""
    if len(parts) != h.n_vertices:
        raise ArityMismatch(f"{h.n_vertices} vertices in the outer graph but {len(parts)} parts")
    sizes = [p.n_vertices for p in parts]
    owner = np.repeat(np.arange(len(parts)), sizes)
    A = h.adjacency[np.ix_(owner, owner)].copy()
    start = 0
    for p, size in zip(parts, sizes):
        A[start:start + size, start:start + size] = p.adjacency
        start += size
    return Graph(A)


def commuting_graph(G):
    A = G.commutes().copy()
    np.fill_diagonal(A, False)
    return Graph(A)


def super_commuting_graph(G, partition):
    """The super commuting graph of G for the equivalence given by ``partition``.

    Distinct g, h are adjacent when they share a block or some members of
    their blocks commute, so adjacency is decided once per block pair.
    """
    if partition.size != G.size:
        raise PartitionMismatch(f"partition covers {partition.size} elements, group has {G.size}")
    nb = len(partition)
    # float64 matmul goes through BLAS; pair counts stay far below 2**53 so it is exact
    indicator = np.zeros((G.size, nb))
    indicator[np.arange(G.size), partition.block_of] = 1.0
    commuting_pairs = indicator.T @ G.commutes().astype(np.float64) @ indicator
    block_adj = commuting_pairs > 0
    np.fill_diagonal(block_adj, True)
    bo = partition.block_of
    A = block_adj[np.ix_(bo, bo)]
    np.fill_diagonal(A, False)
    return Graph(A)


def to_dot(g, name="G"):
    lines = [f"graph {name} {{"]
    labels = g.labels if g.labels is not None else range(g.n_vertices)
    for v, lab in enumerate(labels):
        lines.append(f'  {v} [label="{lab}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g):
    lines = [f"# vertices {g.n_vertices}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    """Read the ``# vertices N`` + ``u v`` format written by :func:`to_edge_list`.

    Other ``#`` lines and blank lines are ignored.  Raises ValueError on
    malformed input.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "vertices":
                if n is not None:
                    raise ValueError(f"line {lineno}: duplicate vertices header")
                n = _nonneg(fields[1], lineno)
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = (_nonneg(f, lineno) for f in fields)
        if u == v:
            raise ValueError(f"line {lineno}: loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise ValueError("missing '# vertices N' header")
    for u, v in edges:
        if max(u, v) >= n:
            raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
    return Graph.from_edges(n, edges)


def _nonneg(text, lineno):
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"line {lineno}: {text!r} is not an integer") from None
    if value < 0:
        raise ValueError(f"line {lineno}: negative vertex {value}")
    return value
