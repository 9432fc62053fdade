import pytest

from sumways.golden import (
    GOLDEN_TABLE_IDS,
    load_golden,
    verify_against_paper,
)
from sumways.homogeneous import binomial


def test_ids_and_unknown():
    assert GOLDEN_TABLE_IDS == ("table1", "s22")
    with pytest.raises(ValueError):
        load_golden("nope")
    with pytest.raises(ValueError):
        verify_against_paper("nope")


def test_table1_shape_and_flagged_misprint():
    data = load_golden("table1")
    assert (data["m"], data["n_max"], data["N_max"]) == (6, 8, 36)
    assert [row["N"] for row in data["rows"]] == list(range(1, 37))
    assert all(len(row["counts"]) == 8 for row in data["rows"])
    # the shipped digits keep the misprint; the annotation carries the fix
    row26 = data["rows"][25]
    assert row26["counts"][7] == "12588"
    assert data["errata"] == [
        {"N": 26, "n": 8, "erratum": {"printed": "12588", "corrected": "125588"}}
    ]


def test_table1_cited_column_values():
    data = load_golden("table1")
    col6 = {row["N"]: int(row["counts"][5]) for row in data["rows"]}
    assert col6[18] == col6[24] == 3431
    assert col6[19] == col6[23] == 3906
    assert col6[20] == col6[22] == 4221
    assert col6[14] == col6[28] == 1161


def test_table1_verification_finds_exactly_the_misprint():
    report = verify_against_paper("table1")
    assert report.total_entries == 288
    assert report.matching == 287
    assert len(report.mismatches) == 1
    m = report.mismatches[0]
    assert m.label == "(N=26,n=8)"
    assert m.printed == 12588
    assert m.computed == 125588
    assert m.corrected == 125588
    assert m.is_confirmed_erratum
    assert report.clean


def test_s22_verification_is_exact():
    report = verify_against_paper("s22")
    assert report.total_entries == 24
    assert report.matching == 24
    assert report.mismatches == ()
    assert report.printed_total == report.computed_total == 576
    assert report.clean


def test_corrected_table_satisfies_structure():
    data = load_golden("table1")
    corrections = {
        (e["N"], e["n"]): int(e["erratum"]["corrected"]) for e in data["errata"]
    }
    value = {}
    for row in data["rows"]:
        for n, printed in enumerate(row["counts"], start=1):
            value[(row["N"], n)] = corrections.get((row["N"], n), int(printed))
    # column sums reach 6^n for every column the table fully contains
    for n in range(1, 7):
        assert sum(value[(N, n)] for N in range(1, 37)) == 6**n
    # symmetry about the column midpoint wherever both mates are printed
    for n in range(1, 9):
        for N in range(1, 37):
            mate = 7 * n - N
            if 1 <= mate <= 36:
                assert value[(N, n)] == value[(mate, n)], (N, n)
    # below the first wraparound the counts are plain compositions
    for n in range(1, 9):
        for lam in range(0, 6):
            if n + lam <= 36:
                assert value[(n + lam, n)] == binomial(n + lam - 1, lam)
