"""Sweep configuration, concurrent case execution and the planarity survey."""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from ..formulas import RESULT_IDS
from ..groups import GroupSpec, build, iso_check_small
from ..groups.spec import FAMILY_PARAMS, SpecError
from ..ncgraph.graph import non_commuting_graph
from ..ncgraph.planarity import is_planar
from .cases import ORACLES, CaseResult, ORDER16_SPECS, run_case

MAX_GROUP_ORDER = 5000
ORACLE_ALIASES = {"cliqueOnly": "clique", "numericOnly": "numeric", "both": "both"}
FORMATS = ("json", "csv", "table")

DEFAULT_SWEEP = {
    "maxGroupOrder": 600,
    "oracle": "both",
    "format": "json",
    "entries": [
        {"family": "SuzukiSz2", "results": ["Thm2.1"]},
        {"family": "Dihedral", "params": {"m": {"from": 3, "to": 12}}, "results": ["Cor2.6"]},
        {"family": "GeneralizedQuaternion", "params": {"m": {"from": 2, "to": 8}}, "results": ["Cor2.7"]},
        {"family": "Quasidihedral", "params": {"n": [4, 5]}, "results": ["Prop3.2"]},
        {
            "family": "FrobeniusPQ",
            "params": [{"p": 2, "q": 3}, {"p": 3, "q": 7}, {"p": 2, "q": 5}, {"p": 5, "q": 11}],
            "results": ["Prop3.1"],
        },
        {"family": "PSL2", "params": {"k": 2}, "results": ["Prop3.3"]},
        {"family": "GL2", "params": {"q": 3}, "results": ["Prop3.4"]},
        {"family": "HanakiU", "params": {"n": [2, 3]}, "results": ["Prop3.5"]},
        {"family": "HanakiV", "params": [{"p": 2, "n": 1}, {"p": 3, "n": 1}], "results": ["Prop3.6"]},
        {"groups": list(ORDER16_SPECS), "results": ["Prop4.4"]},
        {"groups": ["Dihedral(m=4)", "GeneralizedQuaternion(m=2)"], "results": ["Thm2.2", "Prop4.1"]},
        {"family": "ExtraspecialP3", "params": {"p": 3, "exponent": [3, 9]}, "results": ["Cor2.3", "Cor4.2"]},
        {"groups": ["Dihedral(m=3)", "Dihedral(m=4)", "GeneralizedQuaternion(m=2)"], "results": ["ThmPlanar"]},
    ],
}


class ConfigError(ValueError):
    pass


def _values(v) -> list[int]:
    if isinstance(v, bool):
        raise ConfigError("boolean is not a parameter value")
    if isinstance(v, int):
        return [v]
    if isinstance(v, list):
        if not v:
            raise ConfigError("empty parameter list")
        return [int(x) for x in v]
    if isinstance(v, dict) and {"from", "to"} <= v.keys():
        out = list(range(int(v["from"]), int(v["to"]) + 1, int(v.get("step", 1))))
        if not out:
            raise ConfigError(f"empty range {v}")
        return out
    raise ConfigError(f"bad parameter value {v!r}")


def _expand_entry(entry: dict) -> list[GroupSpec]:
    if "groups" in entry:
        return [GroupSpec.parse(s) for s in entry["groups"]]
    family = entry.get("family")
    if family not in FAMILY_PARAMS:
        raise ConfigError(f"unknown family {family!r}")
    params = entry.get("params", {})
    if isinstance(params, list):
        return [GroupSpec.of(family, **p) for p in params]
    keys = sorted(params)
    combos = product(*(_values(params[k]) for k in keys))
    return [GroupSpec.of(family, **dict(zip(keys, c))) for c in combos]


@dataclass
class SweepConfig:
    entries: list[dict] = field(default_factory=list)
    max_group_order: int = 600
    oracle: str = "both"
    format: str = "json"

    def __post_init__(self):
        self.oracle = ORACLE_ALIASES.get(self.oracle, self.oracle)
        if self.oracle not in ORACLES:
            raise ConfigError(f"oracle must be one of {sorted(ORACLE_ALIASES)}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if not 1 <= self.max_group_order <= MAX_GROUP_ORDER:
            raise ConfigError(f"maxGroupOrder must lie in [1, {MAX_GROUP_ORDER}]")
        for e in self.entries:
            for r in e.get("results", []):
                if r not in RESULT_IDS:
                    raise ConfigError(f"unknown result {r!r}")

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        return cls(
            entries=list(d.get("entries", [])),
            max_group_order=int(d.get("maxGroupOrder", 600)),
            oracle=d.get("oracle", "both"),
            format=d.get("format", "json"),
        )

    @classmethod
    def load(cls, source: str) -> "SweepConfig":
        if source == "defaults":
            return cls.from_dict(DEFAULT_SWEEP)
        return cls.from_dict(json.loads(Path(source).read_text()))

    def cases(self) -> list[tuple[GroupSpec, str | None]]:
        """Deduplicated (spec, result) pairs, sorted by family then parameters."""
        seen = set()
        for entry in self.entries:
            try:
                specs = _expand_entry(entry)
            except SpecError as exc:
                raise ConfigError(str(exc)) from exc
            results = entry.get("results") or [None]
            for s in specs:
                if s.expected_order() is not None and s.expected_order() > self.max_group_order:
                    continue
                for r in results:
                    seen.add((s, r))
        return sorted(seen, key=lambda c: (c[0].sort_key(), c[1] or ""))


def thread_count() -> int:
    raw = os.environ.get("NCG_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, min(n, 32))


def run_sweep(cfg: SweepConfig) -> list[CaseResult]:
    cases = cfg.cases()
    if not cases:
        return []
    # build each group once up front so worker threads only read cached tables
    for spec in {s for s, _ in cases}:
        try:
            build(spec)
        except Exception:
            pass  # the failure is reported again, per case, by run_case
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        results = list(pool.map(lambda c: run_case(c[0], c[1], cfg.oracle), cases))
    return results


# -- planarity survey -----------------------------------------------------------

SURVEY_PLANAR = ("Dihedral(m=3)", "Dihedral(m=4)", "GeneralizedQuaternion(m=2)")


def catalog(max_order: int) -> list[GroupSpec]:
    """Non-abelian catalog groups of order at most ``max_order`` (small families only)."""
    specs: list[GroupSpec] = []
    for m in range(3, max_order // 2 + 1):
        specs.append(GroupSpec.of("Dihedral", m=m))
    for m in range(2, max_order // 4 + 1):
        specs.append(GroupSpec.of("GeneralizedQuaternion", m=m))
    for n in range(4, max_order.bit_length()):
        specs.append(GroupSpec.of("Quasidihedral", n=n))
    for p, q in ((2, 3), (2, 5), (2, 7), (3, 7), (2, 11), (2, 13), (3, 13), (5, 11)):
        if p * q <= max_order:
            specs.append(GroupSpec.of("FrobeniusPQ", p=p, q=q))
    for m in range(3, max_order):
        for n in range(1, max_order):
            if 2 * m * n <= max_order and n > 1:
                specs.append(GroupSpec.of("Metacyclic", m=m, n=n))
    if max_order >= 20:
        specs.append(GroupSpec.of("SuzukiSz2"))
    if max_order >= 16:
        specs += [GroupSpec.parse(s) for s in ORDER16_SPECS]
        specs += [GroupSpec.of("HanakiU", n=2), GroupSpec.of("HanakiV", p=2, n=1)]
    if max_order >= 12:
        specs.append(GroupSpec.parse("Cyclic(k=2) x Dihedral(m=3)"))
    if max_order >= 16:
        specs.append(GroupSpec.parse("Cyclic(k=2) x Dihedral(m=4)"))
    out = sorted(set(specs), key=GroupSpec.sort_key)
    return [s for s in out if (s.expected_order() or 0) <= max_order]


@dataclass
class SurveyRow:
    spec: GroupSpec
    order: int
    vertices: int
    edges: int
    planar: bool
    le: object  # Fraction


@dataclass
class SurveyReport:
    rows: list[SurveyRow]
    planar_matches_expected: bool
    unexpected: list[str]


def planarity_survey(max_order: int = 16) -> SurveyReport:
    """Planarity of every catalog group's non-commuting graph up to ``max_order``."""
    if max_order > 16:
        raise ConfigError("planarity survey is limited to order 16")
    expected = [build(GroupSpec.parse(s)) for s in SURVEY_PLANAR if (GroupSpec.parse(s).expected_order() or 0) <= max_order]
    rows: list[SurveyRow] = []
    unexpected: list[str] = []
    found = [False] * len(expected)
    for spec in catalog(max_order):
        g = build(spec)
        graph = non_commuting_graph(g)
        planar = is_planar(graph)
        res = run_case(spec, None, "both")
        rows.append(SurveyRow(spec, g.order, graph.vertex_count, graph.edge_count, planar, res.le_computed))
        hits = [i for i, h in enumerate(expected) if h.order == g.order and iso_check_small(g, h)]
        if planar and not hits:
            unexpected.append(f"{spec} is planar")
        for i in hits:
            if not planar:
                unexpected.append(f"{spec} is not planar")
            found[i] = True
    unexpected += [f"{SURVEY_PLANAR[i]} missing from catalog" for i, f in enumerate(found) if not f]
    return SurveyReport(rows, not unexpected, unexpected)
