"""Laplacian spectra computed two independent ways, and Laplacian energy.

The structural route reads the spectrum of a complete multipartite graph off
its clique decomposition. The numeric route diagonalises the Laplacian with
Jacobi rotations, snaps eigenvalues to integers, and certifies every claimed
multiplicity exactly as the nullity of L - lambda*I over the integers.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from .graph import CliqueDecomposition, SimpleGraph
from .linalg import bareiss_rank, jacobi_eigenvalues

MAX_NUMERIC_VERTICES = 2000


class SpectrumError(ValueError):
    pass


class UncertifiedSpectrumWarning(UserWarning):
    pass


@dataclass(frozen=True)
class LaplacianSpectrum:
    """Distinct eigenvalues with multiplicities, ascending.

    ``certified`` is False only for numeric spectra whose multiplicities could
    not be confirmed exactly; such a spectrum must not be treated as exact.
    """

    entries: tuple[tuple[Fraction, int], ...]
    certified: bool = True
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        merged: Counter = Counter()
        for mu, mult in self.entries:
            if mult <= 0:
                raise SpectrumError("multiplicities must be positive")
            merged[Fraction(mu)] += int(mult)
        object.__setattr__(self, "entries", tuple(sorted(merged.items())))

    @classmethod
    def from_eigenvalues(cls, values: Iterable, **kw) -> "LaplacianSpectrum":
        return cls(tuple(Counter(Fraction(v) for v in values).items()), **kw)

    @property
    def vertex_count(self) -> int:
        return sum(m for _, m in self.entries)

    def trace(self) -> Fraction:
        return sum((mu * m for mu, m in self.entries), Fraction(0))

    def multiplicity(self, mu) -> int:
        return dict(self.entries).get(Fraction(mu), 0)

    def eigenvalues(self) -> list[Fraction]:
        return [mu for mu, m in self.entries for _ in range(m)]

    def as_pairs(self) -> list[list[str | int]]:
        return [[format_rational(mu), m] for mu, m in self.entries]

    def __str__(self) -> str:
        parts = [f"{format_rational(mu, short=True)}^{m}" if m > 1 else format_rational(mu, short=True) for mu, m in self.entries]
        return "{" + ", ".join(parts) + "}"


def format_rational(x: Fraction, short: bool = False) -> str:
    """``num/den``; integers as ``n/1`` unless ``short``."""
    x = Fraction(x)
    if short and x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def spectrum_from_cliques(d: CliqueDecomposition, n: int) -> LaplacianSpectrum:
    """Spectrum of the complement of a disjoint union of cliques on n vertices.

    The complement is complete multipartite with parts of sizes a_i, whose
    Laplacian eigenvalues are 0, n with multiplicity c-1 (c parts), and
    n - a_i with multiplicity a_i - 1 for each part.
    """
    if d.vertex_count != n:
        raise SpectrumError(f"cliques cover {d.vertex_count} vertices, expected {n}")
    c = len(d.clique_sizes)
    entries = [(Fraction(0), 1)]
    if c > 1:
        entries.append((Fraction(n), c - 1))
    for a in d.clique_sizes:
        if a > 1:
            entries.append((Fraction(n - a), a - 1))
    return LaplacianSpectrum(tuple(entries))


def _cluster(values: np.ndarray, window: float) -> list[list[float]]:
    groups: list[list[float]] = []
    for v in values:
        if groups and v - groups[-1][-1] <= window:
            groups[-1].append(float(v))
        else:
            groups.append([float(v)])
    return groups


def spectrum_numeric(graph: SimpleGraph, tol: float = 1e-9, snap: float = 1e-6) -> LaplacianSpectrum:
    """Jacobi eigenvalues, snapped to integers and certified by exact rank.

    When certification fails the spectrum is returned with ``certified=False``
    and an :class:`UncertifiedSpectrumWarning` is issued.
    """
    n = graph.vertex_count
    if n > MAX_NUMERIC_VERTICES:
        raise SpectrumError(f"numeric spectrum limited to {MAX_NUMERIC_VERTICES} vertices")
    if n == 0:
        return LaplacianSpectrum(())
    lap = graph.laplacian()
    values = jacobi_eigenvalues(lap, tol=tol)
    entries: list[tuple[Fraction, int]] = []
    notes: list[str] = []
    certified = True
    for grp in _cluster(values, snap):
        mean = sum(grp) / len(grp)
        nearest = round(mean)
        if abs(mean - nearest) <= snap and all(abs(v - nearest) <= snap for v in grp):
            entries.append((Fraction(nearest), len(grp)))
        else:
            certified = False
            notes.append(f"eigenvalue cluster near {mean:.9g} is not integral")
            entries.append((Fraction(mean).limit_denominator(10**9), len(grp)))
    if certified:
        lap_rows = lap.tolist()
        for mu, mult in entries:
            lam = int(mu)
            shifted = [[v - (lam if i == j else 0) for j, v in enumerate(row)] for i, row in enumerate(lap_rows)]
            nullity = n - bareiss_rank(shifted)
            if nullity != mult:
                certified = False
                notes.append(f"eigenvalue {lam}: numeric multiplicity {mult}, exact nullity {nullity}")
    if not certified:
        warnings.warn("; ".join(notes), UncertifiedSpectrumWarning, stacklevel=2)
    return LaplacianSpectrum(tuple(entries), certified=certified, notes=tuple(notes))


def check_spectrum(s: LaplacianSpectrum, edges: int, vertices: int) -> None:
    """Raise SpectrumError unless s is a plausible Laplacian spectrum for (V, E)."""
    if not s.certified:
        raise SpectrumError("spectrum is numeric-only (uncertified)")
    if s.vertex_count != vertices:
        raise SpectrumError(f"multiplicities sum to {s.vertex_count}, expected {vertices}")
    if s.trace() != 2 * edges:
        raise SpectrumError(f"trace {s.trace()} != 2|E| = {2 * edges}")
    if vertices and (s.entries[0][0] != 0):
        raise SpectrumError("smallest Laplacian eigenvalue must be 0")


def laplacian_energy(s: LaplacianSpectrum, edges: int, vertices: int) -> Fraction:
    """Sum over the spectrum of |mu - 2E/V|, exactly."""
    check_spectrum(s, edges, vertices)
    if vertices == 0:
        return Fraction(0)
    mean = Fraction(2 * edges, vertices)
    return sum((m * abs(mu - mean) for mu, m in s.entries), Fraction(0))


def is_l_integral(s: LaplacianSpectrum) -> bool:
    return all(Fraction(mu).denominator == 1 for mu, _ in s.entries)
