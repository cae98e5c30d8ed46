"""Brute-force isomorphism test for small groups.

Generators of ``g`` are sent to candidate images in ``h`` of matching order;
each assignment is extended along a spanning tree of the Cayley graph and
accepted only if it is a bijective homomorphism.
"""

from __future__ import annotations

from collections import Counter

from .table import GroupError, GroupTable, element_orders, generating_set

MAX_ISO_ORDER = 64


def _spanning_words(g: GroupTable, gens: list[int]) -> list[tuple[int, int, int]]:
    # (element, parent, generator position) in BFS order from the identity
    seen = {g.identity}
    steps = []
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for k, s in enumerate(gens):
                y = int(g.mul[x, s])
                if y not in seen:
                    seen.add(y)
                    steps.append((y, x, k))
                    nxt.append(y)
        frontier = nxt
    return steps


def iso_check_small(g: GroupTable, h: GroupTable) -> bool:
    if g.order != h.order:
        return False
    if g.order > MAX_ISO_ORDER:
        raise GroupError(f"isomorphism check limited to order <= {MAX_ISO_ORDER}")
    og, oh = element_orders(g), element_orders(h)
    if Counter(og) != Counter(oh):
        return False
    if g.is_abelian() != h.is_abelian():
        return False
    gens = generating_set(g)
    steps = _spanning_words(g, gens)
    candidates = [[y for y in range(h.order) if oh[y] == og[s]] for s in gens]
    n = g.order

    def try_images(images: list[int]) -> bool:
        phi = [-1] * n
        phi[g.identity] = h.identity
        for y, x, k in steps:
            phi[y] = int(h.mul[phi[x], images[k]])
        if len(set(phi)) != n:
            return False
        for x in range(n):
            for k, s in enumerate(gens):
                if phi[int(g.mul[x, s])] != int(h.mul[phi[x], images[k]]):
                    return False
        return True

    def search(k: int, images: list[int]) -> bool:
        if k == len(gens):
            return try_images(images)
        for y in candidates[k]:
            if search(k + 1, images + [y]):
                return True
        return False

    return search(0, [])
