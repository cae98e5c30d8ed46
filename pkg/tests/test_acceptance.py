"""Acceptance criteria 1-10, each printing one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import time
from fractions import Fraction

import pytest

from ncenergy.groups import (
    GroupSpec,
    build,
    center,
    centralizer_count,
    commutativity_degree,
    iso_check_small,
    presentation_for,
    quotient_by_center,
    todd_coxeter,
)
from ncenergy.groups.families import build as cached_build
from ncenergy.groups.table import conjugacy_class_count
from ncenergy.harness import SweepConfig, planarity_survey, run_case, run_sweep
from ncenergy.harness.cases import _graph_data, is_dihedral_quotient, is_elementary_abelian_square
from ncenergy.ncgraph import clique_decomposition, commuting_graph, non_commuting_graph

F = Fraction


def report(n: int, ok: bool, detail: str) -> None:
    print(f"\n[criterion {n:2d}] {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="module")
def sweep():
    return run_sweep(SweepConfig.load("defaults"))


def test_criterion_01_suzuki():
    cached_build.cache_clear()
    _graph_data.cache_clear()
    t0 = time.perf_counter()
    r = run_case(GroupSpec.of("SuzukiSz2"), "Thm2.1")
    elapsed = time.perf_counter() - t0
    g = build(GroupSpec.of("SuzukiSz2"))
    sizes = clique_decomposition(commuting_graph(g)).clique_sizes
    ok = (
        g.order == 20
        and len(center(g)) == 1
        and sizes == (4, 3, 3, 3, 3, 3)
        and r.le_computed == F(690, 19)
        and r.verdict == "Match"
        and elapsed < 0.1
    )
    report(1, ok, f"Sz(2) order {g.order}, cliques {sizes}, LE {r.le_computed}, {elapsed * 1000:.1f} ms")
    assert ok


def test_criterion_02_thm22_family():
    checks = {}
    for text in ("Dihedral(m=4)", "GeneralizedQuaternion(m=2)"):
        g = build(GroupSpec.parse(text))
        q = quotient_by_center(g)
        klein = build(GroupSpec.parse("Cyclic(k=2) x Cyclic(k=2)"))
        r = run_case(GroupSpec.parse(text), "Thm2.2")
        checks[text] = iso_check_small(q, klein) and r.le_computed == 8 and r.verdict == "Match"
    for e in (3, 9):
        r = run_case(GroupSpec.of("ExtraspecialP3", p=3, exponent=e), "Cor2.3")
        checks[f"extraspecial 27 exp {e}"] = r.le_computed == 36 and r.verdict == "Match"
    for text in (
        "Cyclic(k=2) x Dihedral(m=4)",
        "Cyclic(k=2) x GeneralizedQuaternion(m=2)",
        "M16",
        "Z4SemidirectZ4",
        "D8StarZ4",
        "SG16_3",
    ):
        r = run_case(GroupSpec.parse(text), "Prop4.4")
        checks[text] = r.le_computed == 16 and r.verdict == "Match"
    ok = all(checks.values())
    report(2, ok, f"{sum(checks.values())}/{len(checks)} groups match (D8/Q8 -> 8, order 27 -> 36, order 16 -> 16)")
    assert ok


def test_criterion_03_quasidihedral():
    r16 = run_case(GroupSpec.of("Quasidihedral", n=4), "Prop3.2")
    r32 = run_case(GroupSpec.of("Quasidihedral", n=5), "Prop3.2")
    target32 = F(2**12 - 2**10 + 3 * 2**5, 15)
    ok = r16.le_computed == F(304, 7) and r32.le_computed == target32 == r32.le_paper
    report(3, ok, f"QD16 LE {r16.le_computed}, QD32 LE {r32.le_computed} (printed {r32.le_paper})")
    assert ok


def test_criterion_04_psl24():
    g = build(GroupSpec.of("PSL2", k=2))
    d = clique_decomposition(commuting_graph(g))
    r = run_case(GroupSpec.of("PSL2", k=2), "Prop3.3")
    pattern = sorted(d.clique_sizes) == sorted([3] * 5 + [2] * 10 + [4] * 6)
    ok = g.order == 60 and pattern and r.le_computed == F(8580, 59) and r.verdict == "Match"
    report(4, ok, f"PSL(2,4) order {g.order}, commuting graph {d.describe()}, LE {r.le_computed}")
    assert ok


def test_criterion_05_hanaki():
    cases = [
        ("HanakiU(n=2)", "Prop3.5", 16),
        ("HanakiU(n=3)", "Prop3.5", 96),
        ("HanakiV(p=2,n=1)", "Prop3.6", 8),
        ("HanakiV(p=3,n=1)", "Prop3.6", 36),
    ]
    got = []
    for text, rid, want in cases:
        r = run_case(GroupSpec.parse(text), rid, "both")
        got.append(r.le_computed == want and r.oracle_agree is True and r.verdict == "Match")
    ok = all(got)
    report(5, ok, f"{sum(got)}/4 Hanaki cases match with both oracles agreeing")
    assert ok


EXPECTED_ERRATA = {
    "Cor2.6:Dihedral(m=3)": (F(42, 5), F(9)),
    "Cor2.6:Dihedral(m=5)": (F(70, 3), F(25)),
    "Cor2.7:GeneralizedQuaternion(m=2)": (F(8), F(28, 3)),
    "Prop3.1:FrobeniusPQ(p=2,q=3)": (F(42, 5), F(36, 5)),
    "Prop3.1:FrobeniusPQ(p=3,q=7)": (F(308, 5), F(168, 5)),
    "Prop3.4:GL2(q=3)": (F(3120, 23), F(3156, 23)),
    "ThmPlanar:Dihedral(m=3)": (F(42, 5), None),
    "ThmPlanar:Dihedral(m=4)": (F(8), None),
    "ThmPlanar:GeneralizedQuaternion(m=2)": (F(8), None),
}


def test_criterion_06_errata_detection(sweep):
    by_id = {r.case_id: r for r in sweep}
    flagged = []
    for cid, (computed, printed) in EXPECTED_ERRATA.items():
        r = by_id.get(cid)
        good = r is not None and r.verdict == "Mismatch" and r.le_computed == computed
        if printed is not None:
            good = good and r.le_paper == printed
        flagged.append(good)
    others = [r for r in sweep if r.case_id not in EXPECTED_ERRATA and r.verdict != "Match"]
    part_a, part_b = all(flagged), not others
    report(
        6,
        part_a and part_b,
        f"listed errata flagged {sum(flagged)}/{len(flagged)}; "
        f"other non-Match cases {len(others)}: {', '.join(r.case_id for r in others)}",
    )
    assert part_a, "a listed erratum was not flagged"
    assert part_b, "sweep cases outside the listed errata do not match their printed values"


def test_criterion_07_oracle_equivalence():
    cfg = SweepConfig.load("defaults")
    bad = []
    for spec in sorted({s for s, _ in cfg.cases()}, key=GroupSpec.sort_key):
        _, graph, _, by_cliques, by_numeric = _graph_data(spec, "both")
        if not (
            by_cliques is not None
            and by_numeric.certified
            and by_cliques == by_numeric
            and by_numeric.trace() == 2 * graph.edge_count
            and by_numeric.multiplicity(0) == 1
        ):
            bad.append(str(spec))
    ok = not bad
    report(7, ok, f"oracle/trace/connectivity failures: {bad or 'none'}")
    assert ok


def test_criterion_08_structural_hypotheses(sweep):
    checks = {
        "|Z(GL2(3))| = 2": len(center(build(GroupSpec.of("GL2", q=3)))) == 2,
        "Z(PSL2(4)) trivial": len(center(build(GroupSpec.of("PSL2", k=2)))) == 1,
        "|Z(HanakiU(n))| = 2^n": all(len(center(build(GroupSpec.of("HanakiU", n=n)))) == 2**n for n in (2, 3)),
        "Pr(D8) = 5/8": commutativity_degree(build(GroupSpec.of("Dihedral", m=4))) == F(5, 8),
        "|Cent(D8)| = 4": centralizer_count(build(GroupSpec.of("Dihedral", m=4))) == 4,
        "|Cent(S3)| = 5": centralizer_count(build(GroupSpec.of("Dihedral", m=3))) == 5,
    }
    quotient_ok = True
    for text, rid in (("Dihedral(m=4)", "Thm2.2"), ("GeneralizedQuaternion(m=2)", "Thm2.2"),
                      ("Dihedral(m=6)", "Thm2.4"), ("GeneralizedQuaternion(m=3)", "Thm2.4")):
        q = quotient_by_center(build(GroupSpec.parse(text)))
        if rid == "Thm2.2":
            quotient_ok &= is_elementary_abelian_square(q) is not None
        else:
            m = is_dihedral_quotient(q)
            quotient_ok &= m is not None and iso_check_small(q, build(GroupSpec.of("Dihedral", m=m)))
    checks["quotient isomorphism checks"] = quotient_ok
    checks["sweep cases pass their hypotheses"] = all(r.verdict != "HypothesisFailed" for r in sweep)
    checks["Pr two-way equality"] = all(r.pr_pairs == r.pr_classes for r in sweep)
    for r in sweep:
        g = build(r.spec)
        checks["Pr two-way equality"] &= F(conjugacy_class_count(g), g.order) == commutativity_degree(g)
    ok = all(checks.values())
    report(8, ok, "; ".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in checks.items()))
    assert ok


def test_criterion_09_planarity_survey():
    rep = planarity_survey(16)
    planar = [str(r.spec) for r in rep.rows if r.planar]
    d12 = next(r for r in rep.rows if str(r.spec) == "Dihedral(m=6)")
    ok = rep.planar_matches_expected and not d12.planar
    report(9, ok, f"{len(rep.rows)} groups surveyed; planar: {', '.join(planar)}")
    assert ok


def test_criterion_10_coset_enumeration():
    names = ["SuzukiSz2", "Quasidihedral(n=4)", "M16", "SG16_3"] + [
        f"GeneralizedQuaternion(m={m})" for m in (2, 3, 4)
    ]
    results = {}
    for text in names:
        spec = GroupSpec.parse(text)
        enumerated = todd_coxeter(presentation_for(spec))
        structural = build(spec)
        results[text] = enumerated.order == spec.expected_order() and iso_check_small(enumerated, structural)
    ok = all(results.values())
    report(10, ok, ", ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in results.items()))
    assert ok
