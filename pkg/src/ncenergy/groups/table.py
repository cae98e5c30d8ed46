"""Finite groups as Cayley tables, and the queries the energy workbench needs.

Everything here works on element indices. ``GroupTable.mul[i, j]`` is the
index of the product of elements ``i`` and ``j``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 5000


class GroupError(ValueError):
    pass


class GroupTable:
    """An immutable multiplication table with labelled elements.

    The group axioms are verified at construction: two-sided identity,
    inverses, and associativity (Light's test over a generating set, which is
    a complete check).
    """

    def __init__(self, mul, labels: Sequence[str], spec=None, *, check: bool = True):
        mul = np.ascontiguousarray(mul, dtype=np.int64)
        n = mul.shape[0]
        if mul.shape != (n, n) or n < 1:
            raise GroupError("multiplication table must be square and nonempty")
        if n > MAX_ORDER:
            raise GroupError(f"group order {n} exceeds {MAX_ORDER}")
        if len(labels) != n:
            raise GroupError("one label per element required")
        if len(set(labels)) != n:
            raise GroupError("element labels must be unique")
        if mul.min() < 0 or mul.max() >= n:
            raise GroupError("table entries out of range")
        mul.setflags(write=False)
        self.mul = mul
        self.labels = tuple(labels)
        self.spec = spec
        ident = [i for i in range(n) if np.array_equal(mul[i], np.arange(n)) and np.array_equal(mul[:, i], np.arange(n))]
        if not ident:
            raise GroupError("no two-sided identity")
        self.identity = ident[0]
        rows, cols = np.nonzero(mul == self.identity)
        inv = np.full(n, -1, dtype=np.int64)
        inv[rows] = cols
        if (inv < 0).any() or len(rows) != n or not np.array_equal(mul[inv, np.arange(n)], np.full(n, self.identity)):
            raise GroupError("some element lacks a two-sided inverse")
        inv.setflags(write=False)
        self.inv = inv
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if check:
            _check_associative(self)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = str(self.spec) if self.spec is not None else "group"
        return f"<GroupTable {name} order={self.order}>"

    def index(self, label: str) -> int:
        return self._index[label]

    def op(self, *xs: int) -> int:
        out = self.identity
        for x in xs:
            out = int(self.mul[out, x])
        return out

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = int(self.inv[x]), -e
        out = self.identity
        for _ in range(e):
            out = int(self.mul[out, x])
        return out

    def commute_matrix(self) -> np.ndarray:
        """Boolean matrix C with C[x, y] true iff xy = yx."""
        cached = getattr(self, "_commute", None)
        if cached is None:
            cached = self.mul == self.mul.T
            cached.setflags(write=False)
            self._commute = cached
        return cached

    def is_abelian(self) -> bool:
        return bool(self.commute_matrix().all())


def closure(g: GroupTable, gens: Iterable[int]) -> set[int]:
    """Subgroup generated by ``gens`` (finite, so closure under products suffices)."""
    gens = list(gens)
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(g.mul[x, s])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def generating_set(g: GroupTable) -> list[int]:
    """Greedy generating set; prefers elements of large order."""
    orders = element_orders(g)
    candidates = sorted(range(g.order), key=lambda x: (-orders[x], x))
    gens: list[int] = []
    span = {g.identity}
    for x in candidates:
        if len(span) == g.order:
            break
        if x not in span:
            gens.append(x)
            span = closure(g, gens)
    return gens


def _magma_generators(mul: np.ndarray, identity: int) -> list[int]:
    # closure under the binary operation only, so no associativity is assumed
    n = mul.shape[0]
    gens: list[int] = []
    span = np.zeros(n, dtype=bool)
    span[identity] = True
    for x in range(n):
        if span.all():
            break
        if span[x]:
            continue
        gens.append(x)
        span[x] = True
        while True:
            members = np.flatnonzero(span)
            prods = mul[np.ix_(members, members)].ravel()
            new = np.zeros(n, dtype=bool)
            new[prods] = True
            if not (new & ~span).any():
                break
            span |= new
    return gens


def _check_associative(g: GroupTable) -> None:
    mul = g.mul
    for s in _magma_generators(mul, g.identity):
        # (x s) y == x (s y) for all x, y
        left = mul[mul[:, s]]            # row x: (x s) * y
        right = mul[:, mul[s]]           # row x: x * (s y)
        if not np.array_equal(left, right):
            raise GroupError("operation is not associative")


def element_orders(g: GroupTable) -> list[int]:
    cached = getattr(g, "_orders", None)
    if cached is not None:
        return cached
    out = []
    for x in range(g.order):
        k, y = 1, x
        while y != g.identity:
            y = int(g.mul[y, x])
            k += 1
        out.append(k)
    g._orders = out
    return out


def center(g: GroupTable) -> frozenset[int]:
    return frozenset(int(i) for i in np.flatnonzero(g.commute_matrix().all(axis=1)))


def centralizer(g: GroupTable, x: int) -> frozenset[int]:
    return frozenset(int(i) for i in np.flatnonzero(g.commute_matrix()[x]))


def centralizer_count(g: GroupTable) -> int:
    """Number of distinct sets C_G(x), including G = C_G(e)."""
    rows = np.packbits(g.commute_matrix(), axis=1)
    return len({r.tobytes() for r in rows})


def conjugacy_classes(g: GroupTable) -> list[frozenset[int]]:
    seen = np.zeros(g.order, dtype=bool)
    classes = []
    for x in range(g.order):
        if seen[x]:
            continue
        # g x g^-1 for every g
        orbit = g.mul[g.mul[:, x], g.inv]
        cls = frozenset(int(i) for i in np.unique(orbit))
        seen[list(cls)] = True
        classes.append(cls)
    return classes


def conjugacy_class_count(g: GroupTable) -> int:
    return len(conjugacy_classes(g))


def commuting_pairs(g: GroupTable) -> int:
    return int(g.commute_matrix().sum())


def commutativity_degree(g: GroupTable) -> Fraction:
    """Pr(G) from the commuting-pair count, cross-checked against k(G)/|G|."""
    by_pairs = Fraction(commuting_pairs(g), g.order**2)
    by_classes = Fraction(conjugacy_class_count(g), g.order)
    if by_pairs != by_classes:
        raise GroupError(f"commutativity degree disagrees: {by_pairs} vs {by_classes}")
    return by_pairs


def is_subgroup(g: GroupTable, sub: Iterable[int]) -> bool:
    s = set(sub)
    if g.identity not in s:
        return False
    idx = np.array(sorted(s))
    prods = g.mul[np.ix_(idx, g.inv[idx])]
    return set(int(v) for v in np.unique(prods)) <= s


def is_normal(g: GroupTable, sub: Iterable[int]) -> bool:
    s = set(sub)
    idx = np.array(sorted(s))
    conj = g.mul[g.mul[:, idx], g.inv[:, None]]  # conj[h, k] = h s_k h^-1
    return set(int(v) for v in np.unique(conj)) <= s


def quotient_by_normal(g: GroupTable, sub: Iterable[int]) -> GroupTable:
    """G/N with cosets labelled by their smallest-index representative."""
    s = sorted(set(sub))
    if not is_subgroup(g, s):
        raise GroupError("quotient requires a subgroup")
    if not is_normal(g, s):
        raise GroupError("quotient requires a normal subgroup")
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    sub_idx = np.array(s)
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        coset_of[g.mul[x, sub_idx]] = len(reps)
        reps.append(x)
    reps_arr = np.array(reps)
    mul = coset_of[g.mul[np.ix_(reps_arr, reps_arr)]]
    labels = [g.labels[r] for r in reps]
    return GroupTable(mul, labels, spec=None)


def quotient_by_center(g: GroupTable) -> GroupTable:
    return quotient_by_normal(g, center(g))


def direct_product(g: GroupTable, h: GroupTable, spec=None) -> GroupTable:
    """Componentwise product; element (x, y) sits at index x*|h| + y."""
    a, b = g.order, h.order
    mul = (g.mul[:, None, :, None] * b + h.mul[None, :, None, :]).reshape(a * b, a * b)
    labels = [f"({gx},{hy})" for gx in g.labels for hy in h.labels]
    return GroupTable(mul, labels, spec=spec)


def relabel(g: GroupTable, perm: Sequence[int]) -> GroupTable:
    """Same group with element ``i`` moved to position ``perm[i]``."""
    perm = np.asarray(perm, dtype=np.int64)
    n = g.order
    inv_perm = np.empty(n, dtype=np.int64)
    inv_perm[perm] = np.arange(n)
    mul = perm[g.mul[np.ix_(inv_perm, inv_perm)]]
    labels = [g.labels[i] for i in inv_perm]
    return GroupTable(mul, labels, spec=g.spec)


def exponent(g: GroupTable) -> int:
    from math import lcm

    out = 1
    for k in element_orders(g):
        out = lcm(out, k)
    return out
