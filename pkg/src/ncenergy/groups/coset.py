"""Todd-Coxeter coset enumeration (HLT strategy) over the trivial subgroup.

For a finite presentation this yields the regular representation, from which
the Cayley table is read off. Coincidences are processed with the usual
union-find queue.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .table import GroupTable

__all__ = ["Presentation", "CosetEnumerationError", "todd_coxeter", "parse_presentation"]


class CosetEnumerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Presentation:
    """Relators are tuples of signed 1-based generator indices (-2 is b^-1)."""

    generator_count: int
    relators: tuple[tuple[int, ...], ...]
    coset_bound: int = 10_000
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.generator_count < 1:
            raise ValueError("need at least one generator")
        if not self.relators:
            raise ValueError("relators must be nonempty")
        if self.coset_bound < 1:
            raise ValueError("coset bound must be positive")
        for r in self.relators:
            if any(x == 0 or abs(x) > self.generator_count for x in r):
                raise ValueError(f"relator {r} uses an unknown generator")
        if not self.names:
            object.__setattr__(self, "names", tuple("abcdefghijklmnopqrstuvw"[: self.generator_count]))


_TOKEN = re.compile(r"([A-Za-z])(?:\^(-?\d+))?")


_POWER = re.compile(r"\^(-?\d+)")


def _invert(word: list[int]) -> list[int]:
    return [-x for x in reversed(word)]


def parse_word(text: str, names: str) -> tuple[int, ...]:
    """Parse ``"a^2 b^-1 (ab)^3"`` into signed 1-based generator indices."""
    text = text.replace(" ", "").replace("*", "")
    word, pos = _parse_seq(text, 0, names)
    if pos != len(text):
        raise ValueError(f"cannot parse word {text!r} at position {pos}")
    return tuple(word)


def _parse_seq(text: str, pos: int, names: str) -> tuple[list[int], int]:
    word: list[int] = []
    while pos < len(text) and text[pos] != ")":
        if text[pos] == "(":
            inner, pos = _parse_seq(text, pos + 1, names)
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            pos += 1
            m = _POWER.match(text, pos)
            e = 1
            if m:
                e = int(m.group(1))
                pos = m.end()
            word.extend((inner if e > 0 else _invert(inner)) * abs(e))
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.group(1) not in names:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        g = names.index(m.group(1)) + 1
        e = int(m.group(2)) if m.group(2) else 1
        word.extend([g if e > 0 else -g] * abs(e))
        pos = m.end()
    return word, pos


def parse_presentation(text: str, coset_bound: int = 10_000) -> Presentation:
    """Parse ``"a,b | a^5, b^4, b^-1 a b a^-2"``.

    A relation ``u = v`` is turned into the relator ``u v^-1``.
    """
    gens_part, _, rels_part = text.partition("|")
    names = "".join(s.strip() for s in gens_part.split(",") if s.strip())
    relators = []
    for item in rels_part.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" in item:
            lhs, rhs = item.split("=", 1)
            u, v = parse_word(lhs, names), parse_word(rhs, names)
            relators.append(u + tuple(-x for x in reversed(v)))
        else:
            relators.append(parse_word(item, names))
    return Presentation(len(names), tuple(relators), coset_bound, tuple(names))


def _col(x: int) -> int:
    # generator g (1-based) -> column 2(g-1); its inverse -> 2(g-1)+1
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class _CosetTable:
    def __init__(self, ngens: int, bound: int):
        self.ncols = 2 * ngens
        self.bound = bound
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]

    def inv_col(self, c: int) -> int:
        return c ^ 1

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.bound:
            raise CosetEnumerationError(
                f"enumeration did not close within {self.bound} cosets "
                "(group infinite or bound too small)"
            )
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][self.inv_col(x)] = c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        lo, hi = min(k, l), max(k, l)
        self.parent[hi] = lo
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                xi = self.inv_col(x)
                if self.table[f][xi] == e:
                    self.table[f][xi] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self.merge(f1, self.table[e1][x], queue)
                elif self.table[f1][xi] is not None:
                    self.merge(e1, self.table[f1][xi], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][xi] = e1

    def scan_and_fill(self, c: int, word: list[int]) -> None:
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][self.inv_col(word[j])] is not None:
                b = t[b][self.inv_col(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][self.inv_col(word[i])] = f
                return
            self.define(f, word[i])


def _format_word(word: list[int], names) -> str:
    if not word:
        return "1"
    out = []
    k = 0
    while k < len(word):
        g = word[k]
        run = 1
        while k + run < len(word) and word[k + run] == g:
            run += 1
        out.append(names[g] if run == 1 else f"{names[g]}^{run}")
        k += run
    return "".join(out)


def todd_coxeter(pres: Presentation, spec=None) -> GroupTable:
    """Enumerate cosets of the trivial subgroup and return the Cayley table.

    Elements are numbered in breadth-first order over the generators and
    labelled by the shortest positive word reaching them (``a^2b`` style).
    """
    ct = _CosetTable(pres.generator_count, pres.coset_bound)
    relators = [[_col(x) for x in r] for r in pres.relators]
    c = 0
    while c < len(ct.table):
        if ct.alive(c):
            for r in relators:
                ct.scan_and_fill(c, r)
                if not ct.alive(c):
                    break
            if ct.alive(c):
                for x in range(ct.ncols):
                    if ct.table[c][x] is None:
                        ct.define(c, x)
        c += 1

    live = [k for k in range(len(ct.table)) if ct.alive(k)]
    pos = {k: i for i, k in enumerate(live)}
    ngens = pres.generator_count
    # action of each generator on the live cosets
    perms = np.array([[pos[ct.rep(ct.table[k][2 * g])] for k in live] for g in range(ngens)], dtype=np.int64)

    # breadth-first numbering with shortest positive words
    start = pos[0]
    order = [start]
    words = {start: []}
    parent: dict[int, tuple[int, int]] = {}
    frontier = [start]
    while frontier:
        nxt = []
        for k in frontier:
            for g in range(ngens):
                m = int(perms[g][k])
                if m not in words:
                    words[m] = words[k] + [g]
                    parent[m] = (k, g)
                    order.append(m)
                    nxt.append(m)
        frontier = nxt
    if len(order) != len(live):
        raise CosetEnumerationError("coset table is not connected")
    n = len(order)
    new = np.empty(n, dtype=np.int64)
    new[order] = np.arange(n)
    gen_perm = np.array([new[perms[g][order]] for g in range(ngens)])  # in new numbering

    # right-regular action: column j of mul is the permutation of word w_j
    mul = np.empty((n, n), dtype=np.int64)
    mul[:, 0] = np.arange(n)
    for j_old in order[1:]:
        k_old, g = parent[j_old]
        mul[:, new[j_old]] = gen_perm[g][mul[:, new[k_old]]]
    labels = [_format_word(words[k], pres.names) for k in order]
    return GroupTable(mul, labels, spec=spec)
