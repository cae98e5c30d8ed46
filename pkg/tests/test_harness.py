import csv
import io
import json
from fractions import Fraction

import pytest

from ncenergy.groups import GroupSpec
from ncenergy.harness import ConfigError, SweepConfig, emit_report, exit_code, run_case, run_sweep
from ncenergy.harness.cli import main
from ncenergy.harness.report import CSV_COLUMNS

SMALL_CONFIG = {
    "entries": [
        {"family": "SuzukiSz2", "results": ["Thm2.1"]},
        {"family": "Dihedral", "params": {"m": {"from": 3, "to": 5}}, "results": ["Cor2.6"]},
        {"groups": ["Dihedral(m=4)"], "results": ["Thm2.2"]},
    ]
}


@pytest.mark.parametrize(
    "text,rid,verdict,le",
    [
        ("SuzukiSz2", "Thm2.1", "Match", Fraction(690, 19)),
        ("Dihedral(m=3)", "Cor2.6", "Mismatch", Fraction(42, 5)),
        ("HanakiU(n=2)", "Prop3.5", "Match", Fraction(16)),
        ("Cyclic(k=3) x Dihedral(m=4)", "Thm2.2", "Match", Fraction(24)),
        ("Dihedral(m=6)", "Thm2.2", "HypothesisFailed", Fraction(108, 5)),
        ("Dihedral(m=6)", "Thm2.4", "Mismatch", Fraction(108, 5)),
        ("Dihedral(m=5)", "ThmPlanar", "HypothesisFailed", Fraction(70, 3)),
        ("SuzukiSz2", None, "NotApplicable", Fraction(690, 19)),
    ],
)
def test_run_case(text, rid, verdict, le):
    r = run_case(GroupSpec.parse(text), rid)
    assert r.verdict == verdict
    assert r.le_computed == le
    assert r.pr_pairs == r.pr_classes
    assert r.oracle_agree is True


def test_mismatch_delta_is_printed_minus_computed():
    r = run_case(GroupSpec.of("Dihedral", m=3), "Cor2.6")
    assert r.delta == Fraction(3, 5)


def test_abelian_input_fails_hypothesis():
    r = run_case(GroupSpec.of("Cyclic", k=5), "Thm2.2")
    assert r.verdict == "HypothesisFailed"
    assert "abelian" in r.reason


def test_errors_are_captured_not_raised():
    bad = GroupSpec.of("Presentation", text="a,b | a^2, b^3", bound=100)
    r = run_case(bad, "Thm2.1")
    assert r.verdict == "Error"
    assert "CosetEnumerationError" in r.reason


@pytest.mark.parametrize("oracle", ["clique", "numeric", "both"])
def test_oracle_modes_give_identical_energy(oracle):
    r = run_case(GroupSpec.of("Quasidihedral", n=4), "Prop3.2", oracle)
    assert r.le_computed == Fraction(304, 7)


def test_sweep_sorted_and_deterministic():
    cfg = SweepConfig.from_dict(SMALL_CONFIG)
    a = run_sweep(cfg)
    b = run_sweep(cfg)
    assert [r.case_id for r in a] == [
        "Cor2.6:Dihedral(m=3)",
        "Cor2.6:Dihedral(m=4)",
        "Thm2.2:Dihedral(m=4)",
        "Cor2.6:Dihedral(m=5)",
        "Thm2.1:SuzukiSz2",
    ]
    for fmt in ("json", "csv", "table"):
        assert emit_report(a, fmt) == emit_report(b, fmt)


def test_empty_sweep():
    cfg = SweepConfig.from_dict({"entries": []})
    assert run_sweep(cfg) == []
    doc = json.loads(emit_report([], "json"))
    assert doc["cases"] == [] and "version" in doc and "generatedBy" in doc


def test_max_order_filters_cases():
    cfg = SweepConfig.from_dict({**SMALL_CONFIG, "maxGroupOrder": 8})
    assert {str(s) for s, _ in cfg.cases()} == {"Dihedral(m=3)", "Dihedral(m=4)"}


@pytest.mark.parametrize(
    "cfg",
    [
        {"maxGroupOrder": 6000},
        {"oracle": "maybe"},
        {"format": "xml"},
        {"entries": [{"family": "Dihedral", "params": {"m": []}}]},
        {"entries": [{"family": "Dihedral", "params": {"m": {"from": 5, "to": 3}}}]},
        {"entries": [{"family": "Nope"}]},
        {"entries": [{"family": "Dihedral", "params": {"m": 3}, "results": ["Thm9.9"]}]},
    ],
)
def test_config_validation(cfg):
    with pytest.raises(ConfigError):
        SweepConfig.from_dict(cfg).cases()


def test_oracle_aliases():
    assert SweepConfig.from_dict({"oracle": "cliqueOnly"}).oracle == "clique"
    assert SweepConfig.from_dict({"oracle": "numericOnly"}).oracle == "numeric"


def test_json_schema_and_serialisation():
    r = run_case(GroupSpec.of("SuzukiSz2"), "Thm2.1")
    doc = json.loads(emit_report([r], "json"))
    case = doc["cases"][0]
    assert case["verdict"] == "Match"
    assert case["leComputed"] == "690/19"
    assert case["spectrum"][0] == ["0/1", 1]
    assert case["commutativityDegree"] == {"pairs": "1/4", "classes": "1/4", "agree": True}
    assert "wallTimeMs" not in case
    assert "wallTimeMs" in json.loads(emit_report([r], "json", timing=True))["cases"][0]


def test_csv_columns():
    r = run_case(GroupSpec.of("Dihedral", m=3), "ThmPlanar")
    rows = list(csv.reader(io.StringIO(emit_report([r], "csv").decode())))
    assert tuple(rows[0]) == CSV_COLUMNS
    row = dict(zip(rows[0], rows[1]))
    assert row["lePaper"] == "{9/1;28/3}"
    assert row["deltaAbs"] == "3/5"


def test_exit_codes():
    ok = run_case(GroupSpec.of("SuzukiSz2"), "Thm2.1")
    bad = run_case(GroupSpec.of("Dihedral", m=3), "Cor2.6")
    na = run_case(GroupSpec.of("SuzukiSz2"), None)
    assert exit_code([ok, na]) == 0
    assert exit_code([ok, bad]) == 2
    err = run_case(GroupSpec.of("Presentation", text="a,b | a^2, b^3", bound=50), None)
    assert exit_code([ok, bad, err]) == 1


# -- CLI ------------------------------------------------------------------------


def test_cli_build(capsys):
    assert main(["build", "--family", "Dihedral", "--m", "4"]) == 0
    out = capsys.readouterr().out
    assert "order     8" in out and "|Cent(G)| 4" in out and "5/8" in out


def test_cli_graph_and_spectrum(capsys):
    assert main(["graph", "--family", "PSL2", "--k", "2"]) == 0
    assert "6K_4 + 5K_3 + 10K_2" in capsys.readouterr().out
    assert main(["spectrum", "--family", "SuzukiSz2", "--oracle", "clique"]) == 0
    assert capsys.readouterr().out.strip() == "{0, 15^3, 16^10, 19^5}"


def test_cli_energy_with_center_factor(capsys):
    assert main(["energy", "--family", "Dihedral", "--m", "4", "--z", "3"]) == 0
    assert capsys.readouterr().out.strip() == "24/1"


def test_cli_verify_exit_codes(capsys):
    assert main(["verify", "--result", "Thm2.1", "--family", "SuzukiSz2"]) == 0
    assert main(["verify", "--result", "Cor2.6", "--family", "Dihedral", "--m", "3"]) == 2
    capsys.readouterr()


def test_cli_internal_error(capsys):
    assert main(["energy", "--presentation", "a,b | a^2, b^3"]) == 1
    assert "error" in capsys.readouterr().err


def test_cli_sweep_with_errata(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(SMALL_CONFIG))
    out = tmp_path / "report.json"
    assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 2
    cases = json.loads(out.read_text())["cases"]
    mismatched = sorted(c["caseId"] for c in cases if c["verdict"] == "Mismatch")
    assert mismatched == ["Cor2.6:Dihedral(m=3)", "Cor2.6:Dihedral(m=4)", "Cor2.6:Dihedral(m=5)"]
    errata = tmp_path / "errata.txt"
    errata.write_text("\n".join(mismatched) + "\n")
    assert main(["sweep", "--config", str(cfg), "--out", str(out), "--expect-errata", str(errata)]) == 0
    errata.write_text("\n".join(mismatched[:2]) + "\n")
    assert main(["sweep", "--config", str(cfg), "--out", str(out), "--expect-errata", str(errata)]) == 2
    assert "unexpected mismatch: Cor2.6:Dihedral(m=5)" in capsys.readouterr().err


def test_cli_planarity(capsys):
    assert main(["planarity", "--max-order", "12"]) == 0
    out = capsys.readouterr().out
    assert "Dihedral(m=3)" in out and "non-planar" in out
