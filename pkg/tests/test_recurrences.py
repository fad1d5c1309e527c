import pytest

from siladic.colored import ColoredInt, ci, rank
from siladic.enumerator import enumerate_dk
from siladic.qseries import TriSeries
from siladic.recurrences import INITIAL_CONDITIONS, build_ladder, initial_series, step_equation

CAPS = (12, 12, 12)


def test_initial_series_are_the_printed_polynomials():
    init = initial_series(CAPS)
    assert init["1_ab"] == TriSeries.one(CAPS)
    assert init["1_a"].terms == {(0, 0, 0): 1, (1, 0, 1): 1}
    assert init["3_a2"] == TriSeries.parse_poly(CAPS, "1+a*q+b*q+a*b*q^2+a*q^2+a^2*q^3")
    assert init["2_b"].coeff(2, 0, 3) == 1
    assert len(init) == 8


@pytest.mark.parametrize("name", sorted(INITIAL_CONDITIONS))
def test_initial_series_match_enumeration(name):
    x = ci(name)
    assert initial_series(CAPS)[name] == enumerate_dk(x, CAPS).to_series()


def test_G3ab_from_eq1():
    ladder = build_ladder(ci("3_ab"), CAPS)
    g = ladder["3_ab"]
    # G_{2_b} + abq^3 (1 + aq)
    expected = ladder["2_b"] + TriSeries.parse_poly(CAPS, "a*b*q^3 + a^2*b*q^4")
    assert g == expected
    # frozen from enumerate_dk(3_ab)
    assert g == TriSeries.parse_poly(CAPS, "1 + a*q + b*q + a*q^2 + b*q^2 + a*b*q^2 + 2*a*b*q^3 + a^2*q^3 + a^2*b*q^4")


@pytest.mark.parametrize("text,eq,k", [
    ("3_ab", "eq1", 1), ("3_a", "eq2", 1), ("3_b2", "eq3", 1), ("3_b", "eq4", 1),
    ("4_ab", "eq5", 1), ("4_a", "eq6", 1), ("5_a2", "eq7", 1), ("4_b", "eq8", 1),
    ("9_a2", "eq7", 3), ("10_ab", "eq5", 4),
])
def test_step_equation_selection(text, eq, k):
    got, kk, _ = step_equation(ci(text))
    assert (got, kk) == (eq, k)


def test_each_rung_uses_earlier_series_only():
    for r in range(8, 120):
        x = ColoredInt.from_rank(r)
        _, _, corrections = step_equation(x)
        assert all(rank(y) < r - 1 or rank(y) == r - 1 for _, y in corrections)
        assert all(rank(y) < r for _, y in corrections)


def test_ladder_bookkeeping():
    ladder = build_ladder(ci("6_b"), CAPS)
    assert ladder.top == ci("6_b")
    assert "5_a2" in ladder and "7_ab" not in ladder
    assert ladder.produced_by[rank(ci("2_b"))] == "initial"
    assert ladder.produced_by[rank(ci("5_a2"))] == "eq7"
    with pytest.raises(KeyError, match="not in the ladder"):
        ladder["7_ab"]


def test_ladder_matches_enumeration_to_8_b():
    caps = (20, 20, 20)
    ladder = build_ladder(ci("8_b"), caps)
    for x, g in ladder.items():
        assert g == enumerate_dk(x, caps).to_series(), x


def test_ladder_is_monotone_in_rank():
    ladder = build_ladder(ci("8_b"), (16, 16, 16))
    prev = None
    for _, g in ladder.items():
        if prev is not None:
            assert all(c >= prev.terms.get(k, 0) for k, c in g.items())
            assert set(prev.terms) <= set(g.terms)
        prev = g


def test_ladder_horizon_is_full():
    ladder = build_ladder(ci("6_b"), CAPS)
    assert all(g.horizon == CAPS[2] for _, g in ladder.items())
