"""The exhaustive check suites and their reporting."""

import math

from kostka import Report, SkewShape, iter_semistandard, partitions_of, verify_positivity
from kostka.verify import (
    STANDARD_SUITES,
    bounded_content_family,
    brute_force_covers,
    content_census,
    run_standard_suites,
    verify_adjacent_transfer,
    verify_bounded_counts,
    verify_covers,
    verify_oracle_equivalence,
    verify_permutation_invariance,
    verify_transfer_chains,
)


class TestBruteForceCovers:
    def test_n4_is_a_chain(self):
        assert brute_force_covers(4) == {
            (4,): {(3, 1)},
            (3, 1): {(2, 2)},
            (2, 2): {(2, 1, 1)},
            (2, 1, 1): {(1, 1, 1, 1)},
            (1, 1, 1, 1): set(),
        }

    def test_n6_spot_values(self):
        bfc = brute_force_covers(6)
        assert bfc[(4, 1, 1)] == {(3, 2, 1)}
        assert bfc[(3, 3)] == {(3, 2, 1)}
        assert bfc[(2, 2, 1, 1)] == {(2, 1, 1, 1, 1)}
        assert bfc[(1, 1, 1, 1, 1, 1)] == set()

    def test_composites_excluded(self):
        # (4,2) dominates (2,2,2) but only through (3,3) or (4,1,1)... via (3,2,1)
        bfc = brute_force_covers(6)
        assert (2, 2, 2) not in bfc[(4, 2)]
        assert bfc[(4, 2)] == {(4, 1, 1), (3, 3)}


class TestSuitesClean:
    def test_covers(self):
        report = verify_covers(6)
        assert report.ok
        assert report.checked == sum(len(partitions_of(n)) for n in range(7))

    def test_bounded_counts(self):
        assert verify_bounded_counts(3, 3).ok

    def test_adjacent_transfer(self):
        assert verify_adjacent_transfer(4).ok

    def test_adjacent_transfer_with_skew(self):
        assert verify_adjacent_transfer(4, include_skew=True).ok

    def test_transfer_chains(self):
        report = verify_transfer_chains(5)
        assert report.ok
        assert report.checked == 4  # column covers with n <= 5: one at n=3,4 and two at n=5

    def test_oracle_equivalence(self):
        assert verify_oracle_equivalence(5).ok

    def test_permutation_invariance(self):
        assert verify_permutation_invariance(5).ok


class TestBoundedContentFamily:
    def test_m2_frozen(self):
        assert bounded_content_family(2) == [
            (0, 0, 2),
            (0, 1, 1),
            (0, 2),
            (1, 0, 1),
            (1, 1),
            (2,),
        ]

    def test_counts_are_central_binomials(self):
        # compositions of m into m+1 slots, modulo trailing zeros
        for m in range(7):
            assert len(bounded_content_family(m)) == math.comb(2 * m, m)

    def test_sorted_and_unique(self):
        fam = bounded_content_family(4)
        assert fam == sorted(set(fam))
        assert all(sum(c) == 4 and (not c or c[-1] > 0) for c in fam)


class TestContentCensus:
    def test_totals_match_full_enumeration(self):
        shape = SkewShape((3, 2), (1,))
        census = content_census(shape, 4)
        total = sum(len(v) for v in census.values())
        assert total == sum(1 for _ in iter_semistandard(shape, 4))

    def test_keys_are_observed_contents(self):
        census = content_census(SkewShape((2, 1)), 3)
        assert (1, 1, 1) in census and len(census[(1, 1, 1)]) == 2
        assert (2, 1) in census and (1, 2) in census
        assert (3,) not in census  # three equal entries cannot fill (2, 1)


class TestReporting:
    def test_text_truncates_long_violation_lists(self):
        violations = [{"k": i} for i in range(55)]
        text = Report(name="demo", checked=55, violations=violations, elapsed=1.0).to_text()
        assert text.splitlines()[0] == "demo: checked=55 violations=55 FAIL (1.00s)"
        assert text.splitlines()[-1] == "  ... and 5 more"
        assert len(text.splitlines()) == 52

    def test_json_dict(self):
        report = verify_positivity(3)
        data = report.to_json_dict()
        assert data == {
            "name": "positivity-iff-dominance",
            "checked": report.checked,
            "violations": [],
            "elapsed": round(report.elapsed, 3),
        }


class TestStandardSuites:
    def test_five_suites_registered(self):
        assert len(STANDARD_SUITES) == 5

    def test_serial_run(self):
        reports = run_standard_suites(3)
        assert [r.name for r in reports] == [
            "positivity-iff-dominance",
            "dominance-monotonicity",
            "bounded-counts",
            "adjacent-transfer",
            "covers-vs-hasse",
        ]
        assert all(r.ok for r in reports)

    def test_parallel_matches_serial(self):
        serial = run_standard_suites(3)
        parallel = run_standard_suites(3, parallelism=2)
        assert [(r.name, r.checked, r.violations) for r in serial] == [
            (r.name, r.checked, r.violations) for r in parallel
        ]
