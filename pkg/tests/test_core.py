import pytest
from hypothesis import given

from farsight.core import (
    UNMATCHED,
    DuplicateEntry,
    IncompleteWithoutFlag,
    Instance,
    Matching,
    OutOfRange,
    ShapeMismatch,
    complete_partial_lists,
    format_instance,
    parse_instance,
    rank_in_boy_list,
)

from conftest import instances


def test_parse_complete_n2():
    inst = parse_instance("2\n0 1\n1 0\n1 0\n0 1\n")
    assert inst.n == 2
    assert inst.boy_prefs == ((0, 1), (1, 0))
    assert inst.girl_prefs == ((1, 0), (0, 1))


def test_parse_skips_comments_and_blank_lines():
    inst = parse_instance("# c\n\n1\n# boys\n0\n\n0\n")
    assert inst.n == 1


def test_duplicate_entry_reports_line():
    with pytest.raises(DuplicateEntry) as e:
        parse_instance("3\n0 0 1\n0 1 2\n0 1 2\n0 1 2\n0 1 2\n0 1 2\n")
    assert e.value.line == 2 and e.value.column == 2


def test_out_of_range():
    with pytest.raises(OutOfRange):
        parse_instance("2\n0 2\n0 1\n0 1\n0 1\n")


@pytest.mark.parametrize("text", ["0\n", "", "2\n0 1\n1 0\n0 1\n"])
def test_shape_mismatch(text):
    with pytest.raises(ShapeMismatch):
        parse_instance(text)


def test_partial_row_needs_flag():
    text = "2\n1\n0 1\n0 1\n-\n"
    with pytest.raises(IncompleteWithoutFlag):
        parse_instance(text)
    inst = parse_instance(text, allow_partial=True)
    assert inst.boy_prefs[0] == (1, 0)
    assert inst.girl_prefs[1] == (0, 1)


@pytest.mark.parametrize(
    "row,n,expected",
    [([2], 3, [2, 0, 1]), ([4, 2], 7, [4, 2, 0, 1, 3, 5, 6]), ([], 2, [0, 1]), ([1, 0], 2, [1, 0])],
)
def test_complete_partial_lists(row, n, expected):
    assert complete_partial_lists([row], n) == [expected]


def test_complete_partial_lists_errors():
    with pytest.raises(DuplicateEntry):
        complete_partial_lists([[1, 1]], 3)
    with pytest.raises(OutOfRange):
        complete_partial_lists([[3]], 3)


def test_rank_in_boy_list():
    inst = Instance(4, [[3, 1, 0, 2]] * 4, [[0, 1, 2, 3]] * 4)
    assert rank_in_boy_list(inst, 0, 3) == 0
    assert rank_in_boy_list(inst, 0, 2) == 3


def test_rank_in_example1(ex1):
    # Pb6 = g3, g6
    assert rank_in_boy_list(ex1, 5, 2) == 0
    assert ex1.boy_prefs[2] == (4, 2, 0, 1, 3, 5, 6)


def test_instance_rejects_bad_rows():
    with pytest.raises(ShapeMismatch):
        Instance(2, [[0, 1]], [[0, 1], [1, 0]])
    with pytest.raises(DuplicateEntry):
        Instance(2, [[0, 0], [0, 1]], [[0, 1], [1, 0]])


def test_matching_sentinel_and_json():
    m = Matching((1, UNMATCHED))
    assert not m.is_perfect()
    assert m.to_json() == {"n": 2, "match_of_boy": [1, None]}
    with pytest.raises(ValueError):
        Matching((0, 0))


@given(instances())
def test_round_trip(inst):
    text = format_instance(inst)
    back = parse_instance(text)
    assert back == inst
    assert format_instance(back) == text


@given(instances())
def test_girl_rank_inverts_prefs(inst):
    for g in range(inst.n):
        for k, b in enumerate(inst.girl_prefs[g]):
            assert inst.girl_rank_of_boy[g][b] == k


@given(instances())
def test_completion_idempotent_on_complete_rows(inst):
    rows = [list(r) for r in inst.boy_prefs]
    assert complete_partial_lists(rows, inst.n) == rows
