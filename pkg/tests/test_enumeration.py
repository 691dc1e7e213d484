"""Exhaustive enumeration engine: counts, reports, persistence, fusenes.

Expected shape counts for h <= 10 were recomputed independently with
tests/oracle_polyhex.py (naive fixed-shape growth in cube coordinates
plus exact orbit counting); h = 11 and 12 were confirmed by running the
compiled kernel and the pure-Python kernel against each other.
"""

import json

import pytest

from bechex.codes import convexity_deficit, parse_code
from bechex.enumeration import (
    SearchConfig,
    _grow,
    check_unimodal,
    count_benzenoids,
    enumerate_benzenoids,
    enumerate_unbranched_fusenes,
    max_cd_unbranched_benzenoids,
    report,
    run_search,
)
from bechex.errors import NotClosed, ResourceLimit, SelfIntersecting
from bechex.lattice import (
    Condensation,
    condensation_class,
    embed,
    is_simply_connected,
    trace,
)

EXPECTED_COUNTS = {
    1: 1,
    2: 1,
    3: 3,
    4: 7,
    5: 22,
    6: 81,
    7: 331,
    8: 1435,
    9: 6505,
    10: 30086,
    11: 141229,
    12: 669584,
}

EXPECTED_MCD = {2: 0, 3: 1, 4: 2, 5: 3, 6: 4, 7: 6, 8: 8, 9: 10, 10: 12, 11: 14, 12: 16}
EXPECTED_EX = {2: 1, 3: 1, 4: 2, 5: 6, 6: 16, 7: 3, 8: 2, 9: 3, 10: 6, 11: 16, 12: 37}

# chains of h hexagons = ternary kink strings of length h-2 up to
# reversal and mirroring; Burnside over that four-element group
def _free_chain_count(h: int) -> int:
    n = h - 2
    return (3**n + 3 ** ((n + 1) // 2) + 3 ** (n // 2) + 1) // 4


class TestCounts:
    def test_session_counts(self, enumeration_session):
        assert enumeration_session.counts == EXPECTED_COUNTS

    def test_count_benzenoids_small(self):
        assert count_benzenoids(1) == 1
        assert count_benzenoids(5) == 22

    def test_enumerate_yields_valid_cell_sets(self):
        shapes = list(enumerate_benzenoids(5))
        assert len(shapes) == 22
        for cells in shapes:
            assert len(cells) == 5
            assert is_simply_connected(cells)
        # distinct shapes have distinct codes
        codes = {str(trace(cells)) for cells in shapes}
        assert len(codes) == 22

    def test_resource_limit(self):
        with pytest.raises(ResourceLimit):
            count_benzenoids(15)
        with pytest.raises(ResourceLimit):
            count_benzenoids(3, max_h=2)


class TestReports:
    def test_invariants(self, enumeration_session):
        for h, rep in enumeration_session.reports.items():
            assert rep.count == EXPECTED_COUNTS[h]
            assert sum(rep.distribution.values()) == rep.count
            assert rep.distribution[rep.mcd] == rep.ex
            assert max(rep.distribution) == rep.mcd
            assert len(rep.extremal_codes) == rep.ex
            assert list(rep.extremal_codes) == sorted(rep.extremal_codes)
            assert sum(rep.extremal_breakdown.values()) == rep.ex

    def test_extremal_tables(self, enumeration_session):
        got_mcd = {h: r.mcd for h, r in enumeration_session.reports.items()}
        got_ex = {h: r.ex for h, r in enumeration_session.reports.items()}
        assert got_mcd == EXPECTED_MCD
        assert got_ex == EXPECTED_EX

    def test_extremal_codes_check_out(self, enumeration_session):
        rep = enumeration_session.reports[7]
        for raw in rep.extremal_codes:
            code = parse_code(raw)
            assert convexity_deficit(code) == rep.mcd
            assert embed(code).hexagons == 7

    def test_report_single_level(self):
        rep = report(4)
        assert (rep.count, rep.mcd, rep.ex) == (7, 2, 2)
        assert rep.extremal_codes == ("532521", "533511")

    def test_to_json_is_stable(self):
        rep = report(3)
        data = json.loads(rep.to_json())
        assert data["schema_version"] == 1
        assert data["count"] == 3
        assert rep.to_json() == report(3).to_json()


class TestGrowth:
    def test_worker_count_does_not_change_results(self, enumeration_session):
        level4 = enumeration_session.keys[4]
        assert _grow(level4, workers=1) == _grow(level4, workers=3)

    def test_every_parent_extends(self, enumeration_session):
        grown = _grow(enumeration_session.keys[3], workers=1)
        assert len(grown) >= len(enumeration_session.keys[4])


class TestPersistence:
    def test_run_search_writes_levels(self, tmp_path):
        reports = run_search(SearchConfig(h_max=4, out_dir=tmp_path))
        assert [r.h for r in reports] == [2, 3, 4]
        codes = (tmp_path / "benzenoids_h4.txt").read_text().split()
        assert len(codes) == 7
        assert codes == sorted(codes)
        data = json.loads((tmp_path / "report_h4.json").read_text())
        assert data["count"] == 7 and data["mcd"] == 2
        extremal = (tmp_path / "extremal_h4.txt").read_text().split()
        assert extremal == ["532521", "533511"]

    def test_resume_reuses_level_files(self, tmp_path):
        run_search(SearchConfig(h_max=4, out_dir=tmp_path))
        (tmp_path / "benzenoids_h4.txt").unlink()
        reports = run_search(SearchConfig(h_max=5, out_dir=tmp_path, resume=True))
        assert reports[-1].count == 22
        assert (tmp_path / "benzenoids_h5.txt").exists()

    def test_fresh_run_matches_resumed_run(self, tmp_path):
        a = run_search(SearchConfig(h_max=5, out_dir=tmp_path / "a"))
        run_search(SearchConfig(h_max=3, out_dir=tmp_path / "b"))
        b = run_search(SearchConfig(h_max=5, out_dir=tmp_path / "b", resume=True))
        assert [r.to_dict() for r in a] == [r.to_dict() for r in b]


class TestUnbranchedFusenes:
    def test_counts_match_burnside(self):
        for h in range(2, 9):
            assert len(enumerate_unbranched_fusenes(h)) == _free_chain_count(h)

    def test_codes_are_canonical_and_distinct(self):
        codes = enumerate_unbranched_fusenes(6)
        assert len({str(c) for c in codes}) == len(codes)
        for c in codes:
            assert str(c.canonical()) == str(c)

    def test_embeddable_subset_matches_growth_enumeration(self, enumeration_session):
        # chains that embed are exactly the unbranched benzenoids
        for h in (5, 6, 7):
            embeddable = 0
            for code in enumerate_unbranched_fusenes(h):
                try:
                    shape = embed(code)
                except (NotClosed, SelfIntersecting):
                    continue
                assert shape.condensation is Condensation.CATACONDENSED_UNBRANCHED
                embeddable += 1
            from bechex._kernel import unpack_cells

            grown = sum(
                1
                for key in enumeration_session.keys[h]
                if condensation_class(unpack_cells(key))
                is Condensation.CATACONDENSED_UNBRANCHED
            )
            assert embeddable == grown

    def test_first_self_touching_chain_is_the_six_coil(self):
        # all chains embed through h = 5; at h = 6 exactly one fails
        for h in (2, 3, 4, 5):
            for code in enumerate_unbranched_fusenes(h):
                embed(code)
        failures = []
        for code in enumerate_unbranched_fusenes(6):
            try:
                embed(code)
            except SelfIntersecting:
                failures.append(str(code))
        assert failures == ["5333351111"]  # the six-hexagon helicene coil


class TestUnbranchedMax:
    def test_small_values(self):
        assert max_cd_unbranched_benzenoids(2)[0] == 0
        assert max_cd_unbranched_benzenoids(5)[0] == 3
        assert max_cd_unbranched_benzenoids(6)[0] == 4

    def test_witnesses_are_unbranched_extremal(self):
        value, witnesses = max_cd_unbranched_benzenoids(6)
        assert witnesses
        for code in witnesses:
            assert convexity_deficit(code) == value
            assert embed(code).condensation is Condensation.CATACONDENSED_UNBRANCHED


class TestUnimodal:
    def test_examples(self):
        assert check_unimodal([1, 2, 3, 2, 1])
        assert check_unimodal([5])
        assert check_unimodal([1, 1, 2, 2])
        assert not check_unimodal([1, 2, 1, 2])
        with pytest.raises(ValueError):
            check_unimodal([])

    def test_deficit_distributions_are_unimodal(self, enumeration_session):
        for h in range(2, 12):
            rep = enumeration_session.reports[h]
            values = [rep.distribution.get(k, 0) for k in range(rep.mcd + 1)]
            assert check_unimodal(values), (h, values)
