"""Command-line interface: ``ncenergy <subcommand> ...``.

Exit status: 0 when every verdict is Match or NotApplicable, 2 when some case
mismatches (or fails its hypothesis), 1 on an internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..formulas import RESULT_IDS
from ..groups import GroupSpec, build, center, centralizer_count, commutativity_degree
from ..groups.spec import FAMILY_PARAMS
from ..ncgraph.spectrum import format_rational
from .cases import ORACLES, compute_spectrum, run_case
from .report import emit_report, exit_code
from .sweep import SweepConfig, planarity_survey, run_sweep

PARAM_FLAGS = ("p", "q", "m", "n", "k", "exponent")


def spec_from_args(args) -> GroupSpec:
    """Group spec from --group / --presentation / --family plus parameter flags.

    ``--z`` wraps the group as a direct product with Cyclic(z), which multiplies
    the center by z.
    """
    if args.group:
        spec = GroupSpec.parse(args.group)
    elif args.presentation:
        spec = GroupSpec.of("Presentation", text=args.presentation)
    elif args.family:
        wanted = FAMILY_PARAMS.get(args.family)
        if wanted is None:
            raise SystemExit(f"unknown family {args.family!r}; choose from {', '.join(sorted(FAMILY_PARAMS))}")
        params = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k) is not None and k in wanted}
        spec = GroupSpec.of(args.family, **params)
    else:
        raise SystemExit("one of --family, --group or --presentation is required")
    if args.z and args.z > 1:
        spec = GroupSpec.of("DirectProduct", left=GroupSpec.of("Cyclic", k=args.z), right=spec)
    return spec


def _add_group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="group family name, e.g. Dihedral")
    p.add_argument("--group", help='full spec text, e.g. "Cyclic(k=2) x Dihedral(m=4)"')
    p.add_argument("--presentation", help='e.g. "a,b | a^4, b^2, b a b^-1 = a^-1"')
    for flag in PARAM_FLAGS:
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--z", type=int, help="take the direct product with Cyclic(z)")


def cmd_build(args) -> int:
    g = build(spec_from_args(args))
    print(f"group     {g.spec}")
    print(f"order     {g.order}")
    print(f"|Z(G)|    {len(center(g))}")
    print(f"|Cent(G)| {centralizer_count(g)}")
    print(f"Pr(G)     {format_rational(commutativity_degree(g))}")
    return 0


def cmd_graph(args) -> int:
    spec = spec_from_args(args)
    graph, decomp, _, _ = compute_spectrum(spec, "clique" if args.oracle == "clique" else "numeric")
    print(f"V {graph.vertex_count}")
    print(f"E {graph.edge_count}")
    print(f"commuting graph {decomp.describe() if decomp else 'not a union of cliques'}")
    return 0


def cmd_spectrum(args) -> int:
    _, _, s, agree = compute_spectrum(spec_from_args(args), args.oracle)
    print(s)
    if agree is False:
        print("oracles disagree", file=sys.stderr)
        return 1
    return 0


def cmd_energy(args) -> int:
    res = run_case(spec_from_args(args), None, args.oracle)
    if res.verdict == "Error":
        print(f"error: {res.reason}", file=sys.stderr)
        return 1
    print(format_rational(res.le_computed) if res.le_computed is not None else "n/a")
    return 0


def cmd_verify(args) -> int:
    res = run_case(spec_from_args(args), args.result, args.oracle)
    sys.stdout.write(emit_report([res], args.format).decode())
    return exit_code([res])


def _load_errata(path: str) -> set[str]:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return {ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")}
    return set(data)


def cmd_sweep(args) -> int:
    cfg = SweepConfig.load(args.config)
    if args.max_order is not None:
        cfg.max_group_order = args.max_order
    fmt = args.format or cfg.format
    if args.oracle:
        cfg.oracle = args.oracle
    results = run_sweep(cfg)
    payload = emit_report(results, fmt, timing=args.timing)
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.write(payload.decode())
    code = exit_code(results)
    if args.expect_errata and code != 1:
        expected = _load_errata(args.expect_errata)
        actual = {r.case_id for r in results if r.verdict != "Match" and r.verdict != "NotApplicable"}
        if actual == expected:
            return 0
        for cid in sorted(actual - expected):
            print(f"unexpected mismatch: {cid}", file=sys.stderr)
        for cid in sorted(expected - actual):
            print(f"expected mismatch not seen: {cid}", file=sys.stderr)
        return 2
    return code


def cmd_planarity(args) -> int:
    rep = planarity_survey(args.max_order)
    for row in rep.rows:
        le = format_rational(row.le, short=True)
        print(f"{str(row.spec):45s} order {row.order:3d}  V {row.vertices:3d}  E {row.edges:4d}  "
              f"{'planar' if row.planar else 'non-planar':10s}  LE {le}")
    for msg in rep.unexpected:
        print(msg, file=sys.stderr)
    return 0 if rep.planar_matches_expected else 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncenergy", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, hint in (
        ("build", cmd_build, "order, center, centralizer count and Pr(G)"),
        ("graph", cmd_graph, "non-commuting graph size and clique decomposition"),
        ("spectrum", cmd_spectrum, "Laplacian spectrum"),
        ("energy", cmd_energy, "exact Laplacian energy"),
        ("verify", cmd_verify, "check one published result on one group"),
    ):
        p = sub.add_parser(name, help=hint)
        _add_group_args(p)
        p.add_argument("--oracle", choices=ORACLES, default="both")
        p.set_defaults(func=fn)
        if name == "verify":
            p.add_argument("--result", required=True, choices=RESULT_IDS)
            p.add_argument("--format", choices=("json", "csv", "table"), default="table")

    p = sub.add_parser("sweep", help="run a configured batch of cases")
    p.add_argument("--config", default="defaults", help='JSON config path, or "defaults"')
    p.add_argument("--format", choices=("json", "csv", "table"))
    p.add_argument("--oracle", choices=ORACLES)
    p.add_argument("--out")
    p.add_argument("--max-order", type=int)
    p.add_argument("--expect-errata", help="file listing the case ids expected not to match")
    p.add_argument("--timing", action="store_true", help="include wallTimeMs (breaks byte-identical output)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("planarity", help="planarity survey of small catalog groups")
    p.add_argument("--max-order", type=int, default=16)
    p.set_defaults(func=cmd_planarity)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
