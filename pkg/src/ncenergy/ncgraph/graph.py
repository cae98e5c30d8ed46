from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..groups.table import GroupTable, center


class GraphError(ValueError):
    pass


class SimpleGraph:
    """Undirected simple graph over labelled vertices, stored as a boolean matrix."""

    def __init__(self, adjacency, labels: Sequence[str] | None = None):
        adj = np.array(adjacency, dtype=bool)
        n = adj.shape[0] if adj.ndim == 2 else 0
        if adj.size == 0:
            adj = np.zeros((0, 0), dtype=bool)
            n = 0
        if adj.shape != (n, n):
            raise GraphError("adjacency must be square")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise GraphError("self-loops are not allowed")
        adj.setflags(write=False)
        self.adjacency = adj
        labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(labels) != n:
            raise GraphError("one label per vertex required")
        self.labels = tuple(labels)

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "SimpleGraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise GraphError("self-loops are not allowed")
            adj[u, v] = adj[v, u] = True
        return cls(adj, labels)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(~np.eye(n, dtype=bool))

    @property
    def vertex_count(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        u, v = np.nonzero(np.triu(self.adjacency))
        return list(zip(u.tolist(), v.tolist()))

    def laplacian(self) -> np.ndarray:
        """Integer Laplacian D - A."""
        a = self.adjacency.astype(np.int64)
        return np.diag(a.sum(axis=1)) - a

    def permuted(self, perm: Sequence[int]) -> "SimpleGraph":
        """Vertex i of self becomes vertex perm[i]."""
        perm = np.asarray(perm)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        return SimpleGraph(self.adjacency[np.ix_(inv, inv)], [self.labels[i] for i in inv])

    def components(self) -> list[list[int]]:
        n = self.vertex_count
        comp = [-1] * n
        out = []
        for s in range(n):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            members = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for v in np.flatnonzero(self.adjacency[u]).tolist():
                    if comp[v] < 0:
                        comp[v] = len(out)
                        members.append(v)
                        stack.append(v)
            out.append(sorted(members))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.labels == other.labels
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def __repr__(self) -> str:
        return f"<SimpleGraph V={self.vertex_count} E={self.edge_count}>"


@dataclass(frozen=True)
class CliqueDecomposition:
    """Sizes of the disjoint cliques, largest first."""

    clique_sizes: tuple[int, ...]

    def __post_init__(self):
        if any(a < 1 for a in self.clique_sizes):
            raise GraphError("clique sizes must be positive")
        object.__setattr__(self, "clique_sizes", tuple(sorted(self.clique_sizes, reverse=True)))

    @property
    def vertex_count(self) -> int:
        return sum(self.clique_sizes)

    def describe(self) -> str:
        """Compact notation such as ``K_4 + 5K_3``."""
        parts = []
        for size, mult in sorted(Counter(self.clique_sizes).items(), reverse=True):
            parts.append(f"K_{size}" if mult == 1 else f"{mult}K_{size}")
        return " + ".join(parts)


def non_commuting_graph(g: GroupTable) -> SimpleGraph:
    """Vertices are the non-central elements in table order; xy != yx is an edge."""
    z = center(g)
    verts = [x for x in range(g.order) if x not in z]
    if not verts:
        raise GraphError("non-commuting graph of an abelian group has no vertices")
    idx = np.array(verts)
    adj = ~g.commute_matrix()[np.ix_(idx, idx)]
    return SimpleGraph(adj, [g.labels[x] for x in verts])


def complement(graph: SimpleGraph) -> SimpleGraph:
    n = graph.vertex_count
    adj = ~graph.adjacency & ~np.eye(n, dtype=bool)
    return SimpleGraph(adj, graph.labels)


def commuting_graph(g: GroupTable) -> SimpleGraph:
    return complement(non_commuting_graph(g))


def clique_decomposition(graph: SimpleGraph) -> CliqueDecomposition | None:
    """Component sizes if every connected component is complete, else None."""
    sizes = []
    adj = graph.adjacency
    for comp in graph.components():
        k = len(comp)
        block = adj[np.ix_(comp, comp)]
        if int(block.sum()) != k * (k - 1):
            return None
        sizes.append(k)
    return CliqueDecomposition(tuple(sizes))
