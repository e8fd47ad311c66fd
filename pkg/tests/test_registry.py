"""Every registered problem must run with sane defaults and stay
deterministic under its seed."""

import pytest

from combench import registry

FAST_OVERRIDES = {
    "sec7.verstraete.percolation": {"sizes": "32", "trials": 60},
    "sec8.mckay.half-cycles": {"n": 10},
    "sec5.thomassen.smith": {"n_max": 8},
    "sec5.thomassen.bipartite-even": {"n_max": 8},
    "sec5.thomassen.lollipop": {"n": 8},
    "sec7.markstrom.gl2-greedy": {"n": 32, "trials": 10},
    "sec10.markstrom.latin": {"n": 3},
}


@pytest.mark.parametrize("entry", registry.list_problems(),
                         ids=lambda e: e.id)
def test_problem_runs(entry):
    params = FAST_OVERRIDES.get(entry.id, {})
    report = registry.run(entry.id, params, seed=3)
    assert isinstance(report.payload, dict) and report.payload
    assert report.wall_time >= 0
    assert report.version == registry.ARTIFACT_VERSION


def test_known_payload_values():
    rep = registry.run("sec8.mckay.half-cycles", {"n": 12})
    assert rep.payload["max"] == 20
    rep = registry.run("sec11.families.katona", {"n": 4, "k": 2})
    assert rep.payload["max_k_intersecting"] == 5
    rep = registry.run("sec2.kelly.small", {"n_max": 5})
    assert rep.payload["all_ok"]
    rep = registry.run("sec10.bang-jensen.xy-paths", {})
    assert rep.payload["failures"] == 0 and rep.payload["pairs_checked"] > 0
    rep = registry.run("sec9.aas-mckay.cycle-space", {"n_max": 5})
    assert rep.payload["gf2_violations"] == rep.payload["gf3_violations"] == 0


def test_checker_entries_report_zero_failures():
    for pid, field in [
        ("sec2.bjy.k2-decomp", "failures"),
        ("sec2.bermond-thomassen.tournaments", "failures"),
        ("sec8.kostochka.jk-coloring", "failures"),
        ("sec6.lo.overfull", "class1_despite_overfull"),
    ]:
        rep = registry.run(pid, {})
        assert rep.payload[field] == 0, pid
