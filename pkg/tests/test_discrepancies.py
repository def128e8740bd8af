import pytest

from conftest import SIZE10_COUNTEREXAMPLES
from gausslint.pipelines import find_discrepancies
from gausslint.schemas import Criterion
from gausslint.tools.lintel import canonical_lintel, parse_lintel


@pytest.mark.parametrize("n", [3, 5, 8])
def test_b_and_oracle_agree_below_nine(n):
    assert find_discrepancies(n, Criterion.B, Criterion.CA) == []


def test_equivalent_criteria_never_disagree():
    assert find_discrepancies(7, Criterion.STZ, Criterion.CA) == []
    assert find_discrepancies(7, Criterion.R, Criterion.STZ) == []
    assert find_discrepancies(7, Criterion.B, Criterion.GL) == []


def test_c2_against_oracle_finds_records():
    records = find_discrepancies(6, Criterion.C2, Criterion.CA)
    lintels = [tuple(map(tuple, record.lintel)) for record in records]
    assert lintels == sorted(lintels)
    for record in records:
        assert record.a == "C2" and record.b == "CA"
        assert record.report.c2 and not record.report.realizable
        assert canonical_lintel(record.report.lintel) == tuple(map(tuple, record.lintel))


def test_accepts_criterion_strings():
    assert find_discrepancies(5, "B", "CA") == []


@pytest.mark.slow
def test_size_nine_counterexample(size9):
    records = find_discrepancies(9, Criterion.B, Criterion.CA)
    assert len(records) == 1
    record = records[0]
    assert tuple(map(tuple, record.lintel)) == canonical_lintel(size9)
    report = record.report
    assert report.prime and report.b and report.gl
    assert not (report.stz or report.r or report.realizable)


@pytest.mark.slow
def test_size_ten_counterexamples():
    records = find_discrepancies(10, Criterion.B, Criterion.CA)
    found = {tuple(map(tuple, record.lintel)) for record in records}
    expected = {canonical_lintel(parse_lintel(text)) for text in SIZE10_COUNTEREXAMPLES}
    assert len(records) == 6
    assert found == expected
