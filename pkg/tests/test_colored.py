import pytest
from hypothesis import given, strategies as st

from siladic.colored import (
    FORBIDDEN_PARTS,
    GAP_MATRIX,
    Color,
    ColoredInt,
    ci,
    colored_ints,
    format_partition,
    is_admissible,
    min_gap,
    parse_partition,
    rank,
    weights,
)
from siladic.dilation import REFDILAT, part_image

CHAIN_START = ["1_ab", "1_a", "1_b2", "1_b", "2_ab", "2_a", "3_a2", "2_b",
               "3_ab", "3_a", "3_b2", "3_b", "4_ab", "4_a", "5_a2", "4_b", "5_ab"]


def test_chain_order_matches_block_pattern():
    assert [str(x) for x in colored_ints(5)][:len(CHAIN_START)] == CHAIN_START


@pytest.mark.parametrize("text,r", [("1_ab", 0), ("3_a2", 6), ("2_b", 7), ("3_ab", 8), ("5_b", 19), ("3_b", 11), ("12_b", 47)])
def test_rank_examples(text, r):
    assert rank(ci(text)) == r
    assert ColoredInt.from_rank(r) == ci(text)


def test_rank_is_bijective_on_first_blocks():
    xs = [ColoredInt.from_rank(r) for r in range(400)]
    assert [rank(x) for x in xs] == list(range(400))
    assert len(set(xs)) == 400


@pytest.mark.parametrize("bad", ["2_a2", "4_b2", "1_a2", "0_a", "3_c", "a_3", ""])
def test_invalid_colored_integers_rejected(bad):
    with pytest.raises(ValueError):
        ColoredInt.parse(bad)


def test_pred_and_succ():
    assert ci("1_ab").pred() is None
    assert ci("2_b").pred() == ci("3_a2")
    assert ci("3_a2").succ() == ci("2_b")
    assert ci("2_b").succ() == ci("3_ab")


def test_ordering_follows_rank():
    assert ci("3_a2") < ci("2_b") < ci("3_ab")
    assert ci("5_a") >= ci("5_a")
    assert sorted([ci("3_ab"), ci("1_a"), ci("3_a2")]) == [ci("1_a"), ci("3_a2"), ci("3_ab")]


def test_gap_matrix_examples():
    assert min_gap(Color.a, 1, Color.ab) == 1
    assert min_gap(Color.b2, 1, Color.b2) == 4
    assert min_gap(Color.b, 0, Color.a) == 1
    assert min_gap(Color.a2, 1, Color.a2) == 4
    assert len(GAP_MATRIX) == 8


@pytest.mark.parametrize("color", [Color.a2, Color.b2])
def test_gap_matrix_has_no_even_squared_rows(color):
    with pytest.raises(ValueError):
        min_gap(color, 0, Color.a)


def test_admissibility():
    assert is_admissible([])
    assert is_admissible([ci("3_a2")])
    assert is_admissible([ci("3_ab"), ci("1_a")])
    # 2_ab then 1_a needs a gap of 2 under the even-ab row
    assert not is_admissible([ci("2_ab"), ci("1_a")])
    assert not is_admissible([ci("1_ab")])
    assert not is_admissible([ci("1_b2")])
    assert not is_admissible([ci("1_a"), ci("3_a")])
    assert not is_admissible([ci("3_a"), ci("3_a")])
    assert not is_admissible(["nonsense"])


def test_weights():
    assert weights([]) == (0, 0)
    assert weights([ci("3_a2"), ci("1_b")]) == (2, 1)
    assert weights([ci("2_ab"), ci("1_a")]) == (2, 1)
    assert weights([ci("3_b2")]) == (0, 2)


def test_partition_text_round_trip():
    p = (ci("5_ab"), ci("3_a2"), ci("1_a"))
    assert parse_partition(format_partition(p)) == p
    assert parse_partition("()") == ()
    assert format_partition(()) == "()"


def test_forbidden_parts():
    assert FORBIDDEN_PARTS == {ci("1_ab"), ci("1_b2")}


@given(st.integers(0, 399), st.integers(0, 399))
def test_order_agrees_with_dilated_values(r, s):
    x, y = ColoredInt.from_rank(r), ColoredInt.from_rank(s)
    assert (r < s) == (part_image(x, REFDILAT) < part_image(y, REFDILAT))


def test_dilated_values_are_the_ranks_exhaustively():
    for x in colored_ints(50):
        assert part_image(x, REFDILAT) == rank(x)
