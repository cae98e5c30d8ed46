"""Arithmetic in finite fields GF(p^n).

Elements are fixed-length coefficient tuples (constant term first) reduced
modulo a monic irreducible polynomial. The modulus is always the
lexicographically smallest irreducible of the requested degree, so every
field built here (and every matrix group built on top of it) is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

__all__ = [
    "FieldError",
    "FieldSpec",
    "FieldElement",
    "is_prime",
    "find_irreducible",
    "is_irreducible",
    "enumerate_field",
    "add",
    "neg",
    "sub",
    "mul",
    "inv",
    "power",
    "frobenius",
]

MAX_ORDER = 2**16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _trim(c: Sequence[int]) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo m over GF(p); m need not be monic."""
    a = _trim([x % p for x in a])
    m = _trim(m)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        a = _trim(a)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial factorisation: no monic factor of degree 1..deg/2 divides poly."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) defined by a monic irreducible ``modulus`` (constant term first)."""

    p: int
    n: int
    modulus: tuple[int, ...]
    _check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.n < 1:
            raise FieldError("extension degree must be positive")
        if self.p**self.n > MAX_ORDER:
            raise FieldError(f"field order {self.p}^{self.n} exceeds {MAX_ORDER}")
        mod = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.n + 1 or mod[-1] != 1:
            raise FieldError("modulus must be monic of degree n")
        if any(not 0 <= c < self.p for c in mod):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if self._check and not is_irreducible(mod, self.p):
            raise FieldError(f"modulus {mod} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p**self.n

    def zero(self) -> "FieldElement":
        return FieldElement((0,) * self.n)

    def one(self) -> "FieldElement":
        return FieldElement((1,) + (0,) * (self.n - 1))

    def element(self, value) -> "FieldElement":
        """Coerce an int (prime-field value) or coefficient sequence."""
        if isinstance(value, FieldElement):
            coeffs = value.coeffs
        elif isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.n - 1)
        else:
            coeffs = tuple(value)
        if len(coeffs) != self.n:
            raise FieldError(f"expected {self.n} coefficients, got {len(coeffs)}")
        return FieldElement(tuple(c % self.p for c in coeffs))

    def index(self, a: "FieldElement") -> int:
        """Position of ``a`` in :func:`enumerate_field` order (sum of c_i p^i)."""
        idx = 0
        for c in reversed(a.coeffs):
            idx = idx * self.p + c
        return idx

    def from_index(self, idx: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.n):
            idx, r = divmod(idx, self.p)
            coeffs.append(r)
        return FieldElement(tuple(coeffs))

    def format(self, a: "FieldElement") -> str:
        if self.n == 1:
            return str(a.coeffs[0])
        terms = []
        for i in range(self.n - 1, -1, -1):
            c = a.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@lru_cache(maxsize=None)
def find_irreducible(p: int, n: int) -> FieldSpec:
    """Lexicographically smallest monic irreducible of degree n over GF(p).

    Candidates are compared coefficient by coefficient starting from the
    constant term.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if n < 1:
        raise FieldError("degree must be positive")
    for low in product(range(p), repeat=n):
        cand = low + (1,)
        if is_irreducible(cand, p):
            return FieldSpec(p, n, cand, _check=False)
    raise FieldError(f"no irreducible polynomial of degree {n} over GF({p})")


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    """All p^n elements, constant coefficient varying fastest; index 0 is zero.

    GF(4) comes out as [0, 1, x, x+1].
    """
    return [spec.from_index(i) for i in range(spec.order)]


def _check(a: FieldElement, spec: FieldSpec) -> None:
    if len(a.coeffs) != spec.n:
        raise FieldError("element does not belong to this field")


def add(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    _check(a, spec)
    _check(b, spec)
    p = spec.p
    return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: FieldElement, spec: FieldSpec) -> FieldElement:
    _check(a, spec)
    return FieldElement(tuple((-x) % spec.p for x in a.coeffs))


def sub(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    return add(a, neg(b, spec), spec)


def mul(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    _check(a, spec)
    _check(b, spec)
    p, n = spec.p, spec.n
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    rem = _poly_mod(prod, spec.modulus, p)
    return FieldElement(tuple(rem + [0] * (n - len(rem))))


def power(a: FieldElement, e: int, spec: FieldSpec) -> FieldElement:
    if e < 0:
        return power(inv(a, spec), -e, spec)
    result = spec.one()
    base = a
    while e:
        if e & 1:
            result = mul(result, base, spec)
        base = mul(base, base, spec)
        e >>= 1
    return result


def inv(a: FieldElement, spec: FieldSpec) -> FieldElement:
    _check(a, spec)
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in a finite field")
    # a^(q-2) = a^-1 in the multiplicative group of order q-1
    return power(a, spec.order - 2, spec)


def frobenius(a: FieldElement, spec: FieldSpec) -> FieldElement:
    """The map a -> a^p."""
    return power(a, spec.p, spec)


class FieldTables:
    """Index-level add/mul/inv tables for a small field.

    Matrix-group constructors multiply thousands of entries; looking them up
    by element index is much cheaper than polynomial arithmetic each time.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        q = spec.order
        elems = enumerate_field(spec)
        self.elements = elems
        self.add = [[spec.index(add(a, b, spec)) for b in elems] for a in elems]
        self.mul = [[spec.index(mul(a, b, spec)) for b in elems] for a in elems]
        self.neg = [spec.index(neg(a, spec)) for a in elems]
        self.inv = [None] + [spec.index(inv(a, spec)) for a in elems[1:]]
        self.frob = [spec.index(frobenius(a, spec)) for a in elems]
        self.one = spec.index(spec.one())
        self.q = q

    def label(self, idx: int) -> str:
        return self.spec.format(self.elements[idx])

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.q))


@lru_cache(maxsize=None)
def field_tables(p: int, n: int) -> FieldTables:
    return FieldTables(find_irreducible(p, n))
