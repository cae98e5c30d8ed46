"""Deterministic JSON / CSV / table rendering of case results."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .. import __version__
from ..ncgraph.spectrum import format_rational
from .cases import CaseResult

REPORT_VERSION = "1"
CSV_COLUMNS = ("caseId", "family", "params", "vertices", "edges", "leComputed", "lePaper", "verdict", "deltaAbs")


def _rat(x) -> str | None:
    return None if x is None else format_rational(Fraction(x))


def _paper(v) -> str | list[str]:
    if v is None:
        return "n/a"
    if isinstance(v, frozenset):
        return [format_rational(x) for x in sorted(v)]
    return format_rational(v)


def case_to_json(r: CaseResult, timing: bool = False) -> dict:
    out = {
        "caseId": r.case_id,
        "resultId": r.result_id,
        "groupSpec": r.spec.to_json(),
        "order": r.order,
        "centerSize": r.center_size,
        "params": dict(sorted(r.params.items())),
        "vertices": r.vertices,
        "edges": r.edges,
        "cliqueSizes": list(r.cliques) if r.cliques is not None else None,
        "spectrum": r.spectrum.as_pairs() if r.spectrum is not None else None,
        "lIntegral": r.l_integral,
        "leComputed": _rat(r.le_computed),
        "lePaper": _paper(r.le_paper),
        "verdict": r.verdict,
        "delta": _rat(r.delta),
        "reason": r.reason or None,
        "commutativityDegree": {
            "pairs": _rat(r.pr_pairs),
            "classes": _rat(r.pr_classes),
            "agree": r.pr_pairs is not None and r.pr_pairs == r.pr_classes,
        },
        "oracle": {"mode": r.oracle, "agree": r.oracle_agree},
    }
    if timing:
        out["wallTimeMs"] = r.wall_time_ms
    return out


def _csv_paper(v) -> str:
    p = _paper(v)
    return "{" + ";".join(p) + "}" if isinstance(p, list) else p


def _params_text(r: CaseResult) -> str:
    return ";".join(f"{k}={v}" for k, v in r.spec.params) if r.spec.family != "DirectProduct" else str(r.spec)


def _row(r: CaseResult) -> list[str]:
    return [
        r.case_id,
        r.family,
        _params_text(r),
        "" if r.vertices is None else str(r.vertices),
        "" if r.edges is None else str(r.edges),
        _rat(r.le_computed) or "",
        _csv_paper(r.le_paper),
        r.verdict,
        _rat(abs(r.delta)) if r.delta is not None else "",
    ]


def emit_report(results: list[CaseResult], fmt: str = "json", timing: bool = False) -> bytes:
    """Render ``results``; identical inputs give identical bytes unless ``timing`` is set."""
    if fmt == "json":
        doc = {
            "version": REPORT_VERSION,
            "generatedBy": f"ncenergy {__version__}",
            "cases": [case_to_json(r, timing) for r in results],
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in results:
            w.writerow(_row(r))
        return buf.getvalue().encode()
    if fmt == "table":
        rows = [list(CSV_COLUMNS)] + [_row(r) for r in results]
        widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def exit_code(results: list[CaseResult]) -> int:
    """0 when every verdict is Match or NotApplicable, 1 on any Error, otherwise 2."""
    verdicts = {r.verdict for r in results}
    if "Error" in verdicts:
        return 1
    if verdicts <= {"Match", "NotApplicable"}:
        return 0
    return 2
