"""Constructors for every group family in the catalog.

Elements are ordered lexicographically in each family's natural coordinates
(exponent tuples, or matrix entries under field enumeration order), so the
same spec always produces the same table.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from ..gf import field_tables
from .coset import Presentation, parse_presentation, todd_coxeter
from .spec import GroupSpec, SpecError, prime_power
from .table import GroupTable, direct_product, quotient_by_normal

__all__ = ["build", "presentation_for", "semidirect_cyclic", "dihedral_table", "frobenius_exponent"]


def _power_label(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _word_label(*parts: tuple[str, int]) -> str:
    s = "".join(_power_label(n, e) for n, e in parts)
    return s or "1"


def semidirect_cyclic(m: int, k: int, r: int, names=("a", "b"), spec=None) -> GroupTable:
    """Z_m x| Z_k with b a b^-1 = a^r; element a^i b^j at index i*k + j."""
    if pow(r, k, m) != 1 % m:
        raise SpecError(f"r={r} does not define an action of Z_{k} on Z_{m}")
    i = np.arange(m).repeat(k)
    j = np.tile(np.arange(k), m)
    rpow = np.array([pow(r, t, m) for t in range(k)], dtype=np.int64)
    # (a^i b^j)(a^i' b^j') = a^(i + r^j i') b^(j + j')
    ni = (i[:, None] + rpow[j][:, None] * i[None, :]) % m
    nj = (j[:, None] + j[None, :]) % k
    mul = ni * k + nj
    labels = [_word_label((names[0], a), (names[1], b)) for a, b in zip(i, j)]
    return GroupTable(mul, labels, spec=spec)


def cyclic_table(k: int, name: str = "a", spec=None) -> GroupTable:
    idx = np.arange(k)
    mul = (idx[:, None] + idx[None, :]) % k
    return GroupTable(mul, [_word_label((name, e)) for e in range(k)], spec=spec)


def dihedral_table(m: int, spec=None) -> GroupTable:
    """Dihedral group of order 2m (m >= 2; m = 2 gives the Klein four-group)."""
    return semidirect_cyclic(m, 2, m - 1, spec=spec)


def quaternion_table(m: int, spec=None) -> GroupTable:
    """Q_4m = <x, y | y^2m = 1, x^2 = y^m, x y x^-1 = y^-1>; element y^i x^j at i*2 + j."""
    n2 = 2 * m
    i = np.arange(n2).repeat(2)
    j = np.tile(np.arange(2), n2)
    sign = np.where(j == 1, -1, 1)
    # (y^i x^j)(y^i' x^j') = y^(i + (-1)^j i') x^(j + j'), and x^2 = y^m
    ni = i[:, None] + sign[:, None] * i[None, :] + m * (j[:, None] & j[None, :])
    ni %= n2
    nj = (j[:, None] + j[None, :]) % 2
    mul = ni * 2 + nj
    labels = [_word_label(("y", a), ("x", b)) for a, b in zip(i, j)]
    return GroupTable(mul, labels, spec=spec)


def frobenius_exponent(p: int, q: int) -> int:
    """Smallest r > 1 with r^p = 1 mod q."""
    return next(r for r in range(2, q) if pow(r, p, q) == 1)


def _from_elements(elements, op, fmt, spec) -> GroupTable:
    index = {e: i for i, e in enumerate(elements)}
    mul = np.array([[index[op(a, b)] for b in elements] for a in elements], dtype=np.int64)
    return GroupTable(mul, [fmt(e) for e in elements], spec=spec)


def _matrix_group(q: int, predicate, spec) -> GroupTable:
    p, n = prime_power(q)
    F = field_tables(p, n)
    A, M = F.add, F.mul

    def det(m):
        a, b, c, d = m
        return A[M[a][d]][F.neg[M[b][c]]]

    elements = [m for m in product(range(q), repeat=4) if predicate(det(m), F)]

    def op(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            A[M[a][e]][M[b][g]],
            A[M[a][f]][M[b][h]],
            A[M[c][e]][M[d][g]],
            A[M[c][f]][M[d][h]],
        )

    def fmt(m):
        a, b, c, d = (F.label(v) for v in m)
        return f"[{a} {b}; {c} {d}]"

    return _from_elements(elements, op, fmt, spec)


def _hanaki_u(n: int, spec) -> GroupTable:
    F = field_tables(2, n)
    A, M = F.add, F.mul
    elements = list(product(range(F.q), repeat=2))

    # U(a,b) U(a',b') = U(a + a', b + b' + a' frob(a))
    def op(x, y):
        a, b = x
        a2, b2 = y
        return (A[a][a2], A[A[b][b2]][M[a2][F.frob[a]]])

    return _from_elements(elements, op, lambda e: f"U({F.label(e[0])},{F.label(e[1])})", spec)


def _hanaki_v(p: int, n: int, spec, name="V") -> GroupTable:
    F = field_tables(p, n)
    A, M = F.add, F.mul
    elements = list(product(range(F.q), repeat=3))

    # V(a,b,c) V(a',b',c') = V(a + a', b + b' + c a', c + c')
    def op(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return (A[a][a2], A[A[b][b2]][M[c][a2]], A[c][c2])

    return _from_elements(
        elements, op, lambda e: f"{name}({F.label(e[0])},{F.label(e[1])},{F.label(e[2])})", spec
    )


# Presentations exactly as printed for the families that have one.
PRESENTATIONS = {
    "SuzukiSz2": "a,b | a^5, b^4, b^-1 a b = a^2",
    "M16": "a,b | a^8, b^2, b a b = a^5",
    "Z4SemidirectZ4": "a,b | a^4, b^4, b a b^-1 = a^-1",
    "D8StarZ4": "a,b,c | a^4, b^2, c^2, ab = ba, ac = ca, bc = a^2 c b",
    "SG16_3": "a,b | a^4, b^4, ab = b^-1 a^-1, a b^-1 = b a^-1",
}


def presentation_for(spec: GroupSpec, coset_bound: int | None = None) -> Presentation | None:
    """Standard presentation of ``spec``'s family, if it has one."""
    f = spec.family
    text = PRESENTATIONS.get(f)
    if f == "Dihedral":
        text = f"a,b | a^{spec['m']}, b^2, b a b^-1 = a^-1"
    elif f == "Metacyclic":
        text = f"a,b | a^{spec['m']}, b^{2 * spec['n']}, b a b^-1 = a^-1"
    elif f == "Quasidihedral":
        n = spec["n"]
        text = f"a,b | a^{2 ** (n - 1)}, b^2, b a b^-1 = a^{2 ** (n - 2) - 1}"
    elif f == "GeneralizedQuaternion":
        m = spec["m"]
        # the printed "y x y^-1 = y^-1" collapses to a cyclic group; x inverts y
        text = f"x,y | y^{2 * m}, x^2 = y^{m}, x y x^-1 = y^-1"
    elif f == "Presentation":
        return parse_presentation(spec["text"], spec["bound"])
    if text is None:
        return None
    order = spec.expected_order() or 1000
    return parse_presentation(text, coset_bound or max(4 * order, 1000))


def _build(spec: GroupSpec) -> GroupTable:
    f = spec.family
    if f == "Cyclic":
        return cyclic_table(spec["k"], spec=spec)
    if f == "Dihedral":
        return dihedral_table(spec["m"], spec=spec)
    if f == "GeneralizedQuaternion":
        return quaternion_table(spec["m"], spec=spec)
    if f == "Quasidihedral":
        n = spec["n"]
        return semidirect_cyclic(2 ** (n - 1), 2, 2 ** (n - 2) - 1, spec=spec)
    if f == "Metacyclic":
        m, n = spec["m"], spec["n"]
        return semidirect_cyclic(m, 2 * n, m - 1, spec=spec)
    if f == "SuzukiSz2":
        # b^-1 a b = a^2 is b a b^-1 = a^3 in Z_5
        return semidirect_cyclic(5, 4, 3, spec=spec)
    if f == "FrobeniusPQ":
        p, q = spec["p"], spec["q"]
        return semidirect_cyclic(q, p, frobenius_exponent(p, q), spec=spec)
    if f == "M16":
        return semidirect_cyclic(8, 2, 5, spec=spec)
    if f == "Z4SemidirectZ4":
        return semidirect_cyclic(4, 4, 3, spec=spec)
    if f == "ExtraspecialP3":
        p, e = spec["p"], spec["exponent"]
        if e == p * p:
            return semidirect_cyclic(p * p, p, 1 + p, spec=spec)
        return _hanaki_v(p, 1, spec, name="H")
    if f == "PSL2":
        # PSL(2, 2^k) = SL(2, 2^k) in characteristic 2
        return _matrix_group(2 ** spec["k"], lambda d, F: d == F.one, spec)
    if f == "GL2":
        return _matrix_group(spec["q"], lambda d, F: d != 0, spec)
    if f == "HanakiU":
        return _hanaki_u(spec["n"], spec)
    if f == "HanakiV":
        return _hanaki_v(spec["p"], spec["n"], spec)
    if f == "D8StarZ4":
        d8, z4 = dihedral_table(4), cyclic_table(4, name="c")
        prod = direct_product(d8, z4)
        a2, c2 = d8.index("a^2"), z4.index("c^2")
        # (D8 x Z4) / <(a^2, c^2)>
        gen = a2 * z4.order + c2
        sub = {prod.identity, gen}
        q = quotient_by_normal(prod, sub)
        return GroupTable(q.mul, q.labels, spec=spec)
    if f == "SG16_3":
        return todd_coxeter(presentation_for(spec), spec=spec)
    if f == "Presentation":
        return todd_coxeter(presentation_for(spec), spec=spec)
    if f == "DirectProduct":
        return direct_product(build(spec["left"]), build(spec["right"]), spec=spec)
    raise SpecError(f"no constructor for {f}")


@lru_cache(maxsize=256)
def build(spec: GroupSpec) -> GroupTable:
    """Build (and cache) the Cayley table for ``spec``."""
    g = _build(spec)
    expected = spec.expected_order()
    if expected is not None and g.order != expected:
        raise SpecError(f"{spec}: built order {g.order}, expected {expected}")
    return g
