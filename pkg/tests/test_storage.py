import pytest

from gausslint.errors import C1Violation, GaussLintError
from gausslint.pipelines import enumerate_diagrams
from gausslint.schemas import FilterSpec
from gausslint.tools.storage import dump_lintels, load, loads, persist


@pytest.fixture
def realizable_five():
    return enumerate_diagrams(5, FilterSpec.parse("prime,ca"))


def test_persist_then_load(tmp_path, realizable_five):
    report, lintels = realizable_five
    path = tmp_path / "size5.txt"
    persist(report, lintels, path)

    stored = load(path)
    assert stored.lintels == lintels
    assert stored.size == 5
    assert stored.filter == "prime+CA"
    assert stored.count == 2
    assert stored.elapsed is not None


def test_dump_without_elapsed_is_deterministic(realizable_five):
    report, lintels = realizable_five
    text = dump_lintels(report, lintels, include_elapsed=False)
    lines = text.splitlines()
    assert lines[0] == "# gauss-lintel v1 size=5 filter=prime+CA"
    assert lines[-1] == "# count=2"
    assert text == dump_lintels(report.model_copy(update={"elapsed": 99.0}), lintels, include_elapsed=False)


def test_loads_tolerates_comments_whitespace_and_periods():
    text = "# hand-written\n\n  [[0, 3],[1,4],[2,5]].  \n# trailing comment\n"
    assert loads(text).lintels == [((0, 3), (1, 4), (2, 5))]


def test_loads_sorts_lintels():
    assert loads("[[5,2],[0,3],[4,1]]\n").lintels == [((0, 3), (1, 4), (2, 5))]


def test_corrupted_chord_reports_line():
    text = "# gauss-lintel v1 size=2 filter=all\n[[0,1],[2,3]]\n[[0,2],[1,3]]\n"
    with pytest.raises(C1Violation) as info:
        loads(text)
    assert info.value.line == 3
    assert "line 3" in str(info.value)


def test_wrong_size_reports_line():
    text = "# gauss-lintel v1 size=2 filter=all\n[[0,1]]\n"
    with pytest.raises(GaussLintError) as info:
        loads(text)
    assert info.value.line == 2


def test_load_missing_file_names_path(tmp_path):
    path = tmp_path / "missing.txt"
    with pytest.raises(OSError) as info:
        load(path)
    assert "missing.txt" in str(info.value)
