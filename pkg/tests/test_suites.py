"""Suite execution, report mechanics, reproducibility, and the explorer."""

import json
from pathlib import Path

import pytest

from circshell import checkers
from circshell.complexes import independence_complex
from circshell.graphs import circulant, CirculantSpec
from circshell.suites import (
    RECORD_CAP,
    RunConfig,
    SUITES,
    explore_family,
    labeled_graphs,
    run_suite,
    suite_main_a,
    suite_paper_milestones,
    suite_topp_volkmann,
)


def test_labeled_graphs_counts():
    # 2^C(n,2) labeled graphs
    assert len(labeled_graphs(1)) == 1
    assert len(labeled_graphs(2)) == 2
    assert len(labeled_graphs(3)) == 8
    assert len(labeled_graphs(4)) == 64
    assert len(labeled_graphs(5)) == 1024


def test_registry_names():
    assert set(SUITES) == {
        "topp-volkmann", "alpha-product", "main-a", "main-bc",
        "nonshellable", "expansion", "circulant-product",
        "paper-milestones", "chain",
    }
    with pytest.raises(KeyError):
        run_suite("no-such-suite", RunConfig())


def test_report_shape_and_config_embedding():
    report = suite_main_a(RunConfig(seed=17))
    assert report.suite == "main-a"
    assert report.passed and not report.failures and not report.unknowns
    assert report.config["seed"] == 17
    obj = report.to_obj()
    assert obj["counts"] == {"failures": 0, "unknowns": 0, "skipped": 0}
    json.dumps(obj)  # must be serialisable as-is


def test_records_sorted_by_instance():
    report = suite_main_a(RunConfig())
    instances = [r["instance"] for r in report.records]
    assert instances == sorted(instances)


def test_aggregation_drops_records_past_cap():
    report = run_suite("chain", RunConfig())
    assert report.total > RECORD_CAP
    assert report.aggregated and report.records == []
    assert report.passed


def test_seeded_samples_reproducible():
    from circshell.suites import topp_volkmann_samples

    a = topp_volkmann_samples(5)
    b = topp_volkmann_samples(5)
    assert [i for i, _, _ in a] == [i for i, _, _ in b]
    assert [(g, h) for _, g, h in a] == [(g, h) for _, g, h in b]
    c = topp_volkmann_samples(6)
    assert [(g, h) for _, g, h in a] != [(g, h) for _, g, h in c]


def test_seeded_suite_reports_embed_seed():
    report = suite_topp_volkmann(RunConfig(seed=5))
    assert report.passed
    assert report.config["seed"] == 5
    assert any("seed=5" in note for note in report.notes)


def test_milestones_without_blessed_file_fails(tmp_path, monkeypatch):
    import circshell.suites as suites_mod
    monkeypatch.setattr(
        suites_mod, "_regressions_path",
        lambda: tmp_path / "regressions.json")
    report = suite_paper_milestones(RunConfig())
    assert not report.passed
    assert any("bless" in (r.get("note") or "") for r in report.failures)


def test_milestones_bless_then_compare(tmp_path, monkeypatch):
    import circshell.suites as suites_mod
    monkeypatch.setattr(
        suites_mod, "_regressions_path",
        lambda: tmp_path / "regressions.json")
    blessed = suite_paper_milestones(RunConfig(bless=True))
    assert blessed.passed
    again = suite_paper_milestones(RunConfig())
    assert again.passed
    stored = json.loads((tmp_path / "regressions.json").read_text())
    assert stored["C16(1,4,8)"] == {
        "alpha": 4, "edge_count": 40, "facet_count": 80}
    # a corrupted constant must be caught
    stored["C16(1,4,8)"]["alpha"] = 5
    (tmp_path / "regressions.json").write_text(json.dumps(stored))
    broken = suite_paper_milestones(RunConfig())
    assert not broken.passed


def test_milestones_skip_deep_visibly():
    report = suite_paper_milestones(RunConfig())
    skipped = {r["instance"] for r in report.skipped}
    assert skipped == {"C20(1,5,10) vd", "C24(1,6,12) vd", "C24(1,6,12) cm"}
    assert report.passed  # skips never fail the fast run


def test_milestones_c16_verdicts():
    report = suite_paper_milestones(RunConfig())
    by_instance = {r["instance"]: r for r in report.records}
    assert by_instance["C16(1,4,8) shellable"]["verdicts"]["shellable"] == "yes"
    assert by_instance["C16(1,4,8) vd"]["verdicts"]["vd"] == "no"
    assert by_instance["C16(1,4,8) pure"]["verdicts"]["pure"] == "yes"


def test_family_rejects_small_s():
    with pytest.raises(ValueError):
        explore_family(3, 5, RunConfig())
    with pytest.raises(ValueError):
        explore_family(5, 4, RunConfig())


def test_family_records_and_certificates(tmp_path):
    cfg = RunConfig(timeout_s=120, out_dir=str(tmp_path))
    report = explore_family(4, 4, cfg)
    assert report.budgeted
    rec = report.records[0]
    assert rec["instance"] == "C16(1,4,8)"
    assert rec["verdicts"] == {
        "pure": "yes", "shellable": "yes", "vd": "no", "cm": "yes"}
    cert_path = Path(rec["stats"]["shellable"]["certificate"])
    assert cert_path.exists()
    # the written certificate replays through the independent verifier
    cert = checkers.certificate_from_json(cert_path.read_text())
    d = independence_complex(circulant(CirculantSpec.parse("C16(1,4,8)")))
    assert checkers.verify_shelling(d, cert)


def test_family_budget_exhaustion_is_unknown_not_failure():
    report = explore_family(6, 6, RunConfig(timeout_s=0.05))
    rec = report.records[0]
    assert rec["status"] in ("unknown", "ok")
    assert report.passed  # budgeted suites pass despite unknowns
    verdicts = rec["verdicts"]
    assert verdicts["pure"] == "yes"
    assert all(v in ("yes", "no", "unknown") for v in verdicts.values())
    assert "unknown" in verdicts.values()
