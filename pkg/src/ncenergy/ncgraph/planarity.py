"""Planarity testing with certificates on both sides.

``is_planar`` applies the Euler bound |E| <= 3|V| - 6 first, then runs the
Demoucron-Malgrange-Pertuiset face-embedding algorithm on every biconnected
block. A non-planar verdict is confirmed by extracting an explicit K5 or
K3,3 minor (``kuratowski_minor``): edges are deleted or contracted one at a
time for as long as the result stays non-planar, and Wagner's theorem says
the process can only stop at K5 or K3,3.
"""

from __future__ import annotations

from itertools import combinations

from .graph import GraphError, SimpleGraph

MAX_PLANARITY_VERTICES = 24


def _adjacency(edges) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def _edge_set(adj) -> set[frozenset]:
    return {frozenset((u, w)) for u, nb in adj.items() for w in nb}


def biconnected_blocks(adj: dict[int, set[int]]) -> list[set[frozenset]]:
    """Edge sets of the biconnected components (Hopcroft-Tarjan)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[set[frozenset]] = []
    stack: list[frozenset] = []
    counter = 0
    for root in sorted(adj):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        # iterative DFS: (vertex, parent, neighbour iterator)
        work = [(root, None, iter(sorted(adj[root])))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                e = frozenset((v, w))
                if w not in index:
                    stack.append(e)
                    index[w] = low[w] = counter
                    counter += 1
                    work.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    stack.append(e)
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if low[v] >= index[parent]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.add(e)
                        if e == frozenset((parent, v)):
                            break
                    blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    depth = {start: 0}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in sorted(adj[v]):
            if w == parent[v]:
                continue
            if w in parent:
                # back edge v-w closes a cycle through their common ancestor
                pv, pw = [v], [w]
                while depth[pv[-1]] > depth[pw[-1]]:
                    pv.append(parent[pv[-1]])
                while depth[pw[-1]] > depth[pv[-1]]:
                    pw.append(parent[pw[-1]])
                while pv[-1] != pw[-1]:
                    pv.append(parent[pv[-1]])
                    pw.append(parent[pw[-1]])
                return pv + pw[-2::-1]
            parent[w] = v
            depth[w] = depth[v] + 1
            stack.append(w)
    raise GraphError("graph is acyclic")


def _block_is_planar(adj: dict[int, set[int]]) -> bool:
    """DMP on a biconnected graph with at least three vertices."""
    all_edges = _edge_set(adj)
    cycle = _find_cycle(adj)
    placed_v = set(cycle)
    placed_e = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    faces = [list(cycle), list(cycle)]
    while len(placed_e) < len(all_edges):
        fragments = []  # (attachments, path-builder data)
        for e in sorted(all_edges - placed_e, key=sorted):
            u, v = sorted(e)
            if u in placed_v and v in placed_v:
                fragments.append(({u, v}, ("edge", u, v)))
        seen: set[int] = set()
        for s in sorted(adj):
            if s in placed_v or s in seen:
                continue
            comp = {s}
            todo = [s]
            while todo:
                x = todo.pop()
                for y in adj[x]:
                    if y not in placed_v and y not in comp:
                        comp.add(y)
                        todo.append(y)
            seen |= comp
            attach = {y for x in comp for y in adj[x] if y in placed_v}
            fragments.append((attach, ("comp", comp)))
        choice = None
        for attach, data in fragments:
            ok = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not ok:
                return False
            if choice is None or len(ok) == 1 and len(choice[2]) > 1:
                choice = (attach, data, ok)
        attach, data, ok = choice
        face = faces[ok[0]]
        if data[0] == "edge":
            path = [data[1], data[2]]
        else:
            path = _fragment_path(adj, data[1], attach)
        a, b = path[0], path[-1]
        i, j = face.index(a), face.index(b)
        k = len(face)
        a_to_b = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        b_to_a = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        inner = path[1:-1]
        faces[ok[0]] = a_to_b + inner[::-1]
        faces.append(b_to_a + inner)
        placed_v.update(path)
        placed_e.update(frozenset((path[t], path[t + 1])) for t in range(len(path) - 1))
    return True


def _fragment_path(adj, comp: set[int], attach: set[int]) -> list[int]:
    # path from one attachment through the component to a different attachment
    a = min(attach)
    start = min(y for y in adj[a] if y in comp)
    prev = {start: a}
    todo = [start]
    while todo:
        x = todo.pop(0)
        for y in sorted(adj[x]):
            if y in attach and y != a:
                path = [y, x]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            if y in comp and y not in prev:
                prev[y] = x
                todo.append(y)
    raise GraphError("fragment has a single attachment; block is not biconnected")


def _planar_edges(edges) -> bool:
    adj = _adjacency(edges)
    nv = len(adj)
    ne = len(_edge_set(adj))
    if nv >= 3 and ne > 3 * nv - 6:
        return False
    for block in biconnected_blocks(adj):
        if len(block) < 9:
            # fewer than 9 edges cannot hold a K5 or K3,3 subdivision
            continue
        if not _block_is_planar(_adjacency(tuple(e) for e in block)):
            return False
    return True


def _contract(edges: set[frozenset], keep: int, drop: int) -> set[frozenset]:
    out = set()
    for e in edges:
        a, b = tuple(e)
        a = keep if a == drop else a
        b = keep if b == drop else b
        if a != b:
            out.add(frozenset((a, b)))
    return out


def _is_k5_or_k33(edges: set[frozenset]) -> str | None:
    adj = _adjacency(tuple(e) for e in edges)
    verts = sorted(adj)
    if len(verts) == 5 and len(edges) == 10:
        return "K5"
    if len(verts) == 6 and len(edges) == 9:
        for side in combinations(verts, 3):
            other = [v for v in verts if v not in side]
            if all(w in adj[u] for u in side for w in other):
                return "K3,3"
    return None


def kuratowski_minor(graph: SimpleGraph) -> tuple[str, list[tuple[int, int]]] | None:
    """A K5 or K3,3 minor of ``graph`` as (name, edges on surviving vertices), or None if planar."""
    edges = {frozenset(e) for e in graph.edges()}
    if _planar_edges(tuple(e) for e in edges):
        return None
    while True:
        name = _is_k5_or_k33(edges)
        if name:
            return name, sorted(tuple(sorted(e)) for e in edges)
        for e in sorted(edges, key=sorted):
            u, v = sorted(e)
            rest = edges - {e}
            smaller = None
            for cand in (rest, _contract(rest, u, v)):
                if not _planar_edges(tuple(x) for x in cand):
                    smaller = cand
                    break
            if smaller is not None:
                edges = smaller
                break
        else:
            raise GraphError("minor descent stalled; planarity test is inconsistent")


def is_planar(graph: SimpleGraph) -> bool:
    n = graph.vertex_count
    if n > MAX_PLANARITY_VERTICES:
        raise GraphError(f"planarity test limited to {MAX_PLANARITY_VERTICES} vertices")
    if n >= 3 and graph.edge_count > 3 * n - 6:
        return False
    if _planar_edges(graph.edges()):
        return True
    if kuratowski_minor(graph) is None:
        raise GraphError("no Kuratowski minor found for a graph judged non-planar")
    return False
