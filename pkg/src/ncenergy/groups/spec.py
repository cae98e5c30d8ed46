"""Descriptions of the group families the workbench can build."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any

from ..gf import is_prime

FAMILIES = (
    "Cyclic",
    "Dihedral",
    "GeneralizedQuaternion",
    "Quasidihedral",
    "Metacyclic",
    "SuzukiSz2",
    "FrobeniusPQ",
    "PSL2",
    "GL2",
    "HanakiU",
    "HanakiV",
    "M16",
    "Z4SemidirectZ4",
    "D8StarZ4",
    "SG16_3",
    "ExtraspecialP3",
    "DirectProduct",
    "Presentation",
)

# parameters each family accepts, in canonical order
FAMILY_PARAMS = {
    "Cyclic": ("k",),
    "Dihedral": ("m",),
    "GeneralizedQuaternion": ("m",),
    "Quasidihedral": ("n",),
    "Metacyclic": ("m", "n"),
    "SuzukiSz2": (),
    "FrobeniusPQ": ("p", "q"),
    "PSL2": ("k",),
    "GL2": ("q",),
    "HanakiU": ("n",),
    "HanakiV": ("p", "n"),
    "M16": (),
    "Z4SemidirectZ4": (),
    "D8StarZ4": (),
    "SG16_3": (),
    "ExtraspecialP3": ("p", "exponent"),
    "DirectProduct": ("left", "right"),
    "Presentation": ("text", "bound"),
}


class SpecError(ValueError):
    """Raised for parameter values outside a family's hypotheses."""


def prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n = 0
    while q % p == 0:
        q //= p
        n += 1
    return (p, n) if q == 1 else None


@dataclass(frozen=True)
class GroupSpec:
    """A family name plus its parameters, stored as a sorted tuple of pairs.

    >>> GroupSpec.of("Dihedral", m=4)
    GroupSpec('Dihedral(m=4)')
    """

    family: str
    params: tuple[tuple[str, Any], ...] = ()

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise SpecError(f"unknown group family {self.family!r}")
        allowed = FAMILY_PARAMS[self.family]
        given = dict(self.params)
        extra = set(given) - set(allowed)
        if extra:
            raise SpecError(f"{self.family} does not take {sorted(extra)}")
        missing = [k for k in allowed if k not in given]
        if missing:
            raise SpecError(f"{self.family} requires {missing}")
        ordered = tuple((k, given[k]) for k in allowed)
        object.__setattr__(self, "params", ordered)
        self._validate()

    @classmethod
    def of(cls, family: str, **params) -> "GroupSpec":
        if family == "ExtraspecialP3" and "exponent" not in params and "p" in params:
            params["exponent"] = params["p"] ** 2
        if family == "Presentation":
            params.setdefault("bound", 10_000)
        return cls(family, tuple(params.items()))

    def __getitem__(self, key: str):
        return dict(self.params)[key]

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def _validate(self) -> None:
        f, g = self.family, dict(self.params)

        def need(cond, msg):
            if not cond:
                raise SpecError(f"{self}: {msg}")

        for k, v in g.items():
            if k in ("left", "right"):
                need(isinstance(v, GroupSpec), "direct product factors must be GroupSpecs")
            elif k == "text":
                need(isinstance(v, str), "presentation text must be a string")
            else:
                need(isinstance(v, int) and not isinstance(v, bool), f"{k} must be an integer")
        if f == "Cyclic":
            need(g["k"] >= 1, "k >= 1")
        elif f == "Dihedral":
            need(g["m"] >= 3, "m >= 3")
        elif f == "GeneralizedQuaternion":
            need(g["m"] >= 2, "m >= 2")
        elif f == "Quasidihedral":
            need(g["n"] >= 4, "n >= 4")
        elif f == "Metacyclic":
            need(g["m"] > 2 and g["n"] >= 1, "m > 2 and n >= 1")
        elif f == "FrobeniusPQ":
            p, q = g["p"], g["q"]
            need(is_prime(p) and is_prime(q), "p and q must be prime")
            need((q - 1) % p == 0, "p must divide q - 1")
        elif f == "PSL2":
            need(g["k"] >= 2, "k >= 2")
        elif f == "GL2":
            need(g["q"] > 2 and prime_power(g["q"]) is not None, "q must be a prime power > 2")
        elif f == "HanakiU":
            need(g["n"] >= 2, "n >= 2")
        elif f == "HanakiV":
            need(is_prime(g["p"]) and g["n"] >= 1, "p prime, n >= 1")
        elif f == "ExtraspecialP3":
            p, e = g["p"], g["exponent"]
            need(is_prime(p), "p must be prime")
            need(e in (p, p * p), "exponent must be p or p^2")
            need(not (p == 2 and e == 2), "no non-abelian group of order 8 has exponent 2")
        elif f == "Presentation":
            need(g["bound"] >= 1, "coset bound must be positive")

    def expected_order(self) -> int | None:
        """Group order implied by the parameters (None for presentations)."""
        f, g = self.family, dict(self.params)
        if f == "Cyclic":
            return g["k"]
        if f in ("Dihedral",):
            return 2 * g["m"]
        if f == "GeneralizedQuaternion":
            return 4 * g["m"]
        if f == "Quasidihedral":
            return 2 ** g["n"]
        if f == "Metacyclic":
            return 2 * g["m"] * g["n"]
        if f == "SuzukiSz2":
            return 20
        if f == "FrobeniusPQ":
            return g["p"] * g["q"]
        if f == "PSL2":
            t = 2 ** g["k"]
            return t * (t * t - 1)
        if f == "GL2":
            q = g["q"]
            return (q * q - 1) * (q * q - q)
        if f == "HanakiU":
            return 2 ** (2 * g["n"])
        if f == "HanakiV":
            return g["p"] ** (3 * g["n"])
        if f in ("M16", "Z4SemidirectZ4", "D8StarZ4", "SG16_3"):
            return 16
        if f == "ExtraspecialP3":
            return g["p"] ** 3
        if f == "DirectProduct":
            a, b = g["left"].expected_order(), g["right"].expected_order()
            return None if a is None or b is None else a * b
        return None

    def __str__(self) -> str:
        if self.family == "DirectProduct":
            return f"{self['left']} x {self['right']}"
        if self.family == "Presentation":
            return f"Presentation<{self['text']}>"
        if not self.params:
            return self.family
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"

    def __repr__(self) -> str:
        return f"GroupSpec({str(self)!r})"

    def sort_key(self) -> tuple:
        def key(v):
            if isinstance(v, GroupSpec):
                return (1, v.sort_key())
            if isinstance(v, str):
                return (2, v)
            return (0, v)

        return (self.family, tuple(key(v) for _, v in self.params))

    def to_json(self) -> dict:
        out: dict[str, Any] = {"family": self.family}
        for k, v in self.params:
            out[k] = v.to_json() if isinstance(v, GroupSpec) else v
        return out

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``"Dihedral(m=4)"``, ``"SuzukiSz2"`` or ``"Cyclic(k=2) x Dihedral(m=4)"``."""
        parts = [t.strip() for t in re.split(r"\s+x\s+", text.strip())]
        specs = [cls._parse_one(t) for t in parts]
        out = specs[0]
        for s in specs[1:]:
            out = cls.of("DirectProduct", left=out, right=s)
        return out

    @classmethod
    def _parse_one(cls, text: str) -> "GroupSpec":
        m = re.fullmatch(r"([A-Za-z0-9_]+)\s*(?:\((.*)\))?", text)
        if not m:
            raise SpecError(f"cannot parse group spec {text!r}")
        name, body = m.group(1), m.group(2)
        aliases = {"Z2xD8": "Cyclic(k=2) x Dihedral(m=4)", "Z2xQ8": "Cyclic(k=2) x GeneralizedQuaternion(m=2)"}
        if name in aliases and not body:
            return cls.parse(aliases[name])
        params = {}
        if body:
            for item in body.split(","):
                if not item.strip():
                    continue
                k, _, v = item.partition("=")
                params[k.strip()] = int(v)
        return cls.of(name, **params)
