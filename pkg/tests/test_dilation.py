import pytest
from hypothesis import given, settings, strategies as st

from siladic.colored import ColoredInt, ci, colored_ints, weights
from siladic.dilation import (
    CLASSICAL,
    COMP,
    REFDILAT,
    SCHUR,
    THEOREMS,
    dilate_partition,
    horizon_soundness,
    iter_dilated,
    offset,
    part_image,
    theorem_rules,
    transported_D,
    verify_classical,
    verify_dilated_theorem,
    verify_partition_map,
)
from siladic.enumerator import enumerate_two_residue_distinct, iter_colored_partitions
from siladic.qseries import DilationSpec
from siladic.rules import Part


def test_partition_examples():
    assert dilate_partition([ci("3_a2")], REFDILAT) == (Part(6),)
    assert dilate_partition([ci("3_a2")], SCHUR, overline_squares=True) == (Part(5, True),)
    assert dilate_partition([ci("2_ab"), ci("1_a")], REFDILAT) == (Part(4), Part(1))


def test_offsets_for_squared_colors_are_doubled():
    assert [offset(c, REFDILAT) for c in (ci("1_a").color, ci("1_b").color, ci("2_ab").color, ci("3_a2").color, ci("3_b2").color)] == [3, 1, 4, 6, 2]


def test_forbidden_part_has_no_image():
    with pytest.raises(ValueError, match="1_ab"):
        dilate_partition([ci("1_ab")], REFDILAT)


def test_refdilat_images_are_consecutive():
    assert [part_image(ColoredInt.from_rank(r), REFDILAT) for r in range(200)] == list(range(200))


@pytest.mark.parametrize("spec", [REFDILAT, COMP, SCHUR])
def test_horizon_soundness(spec):
    assert horizon_soundness(spec, 50) == []


def test_horizon_soundness_detects_bad_specs():
    assert horizon_soundness(DilationSpec(2, 3, 1), 10)


# newschur C-side example: C_3 = D_3 up to n = 6
def test_newschur_small_n():
    assert verify_dilated_theorem("newschur", 6).ok


def test_refdilat_small_example():
    rules = theorem_rules("refdilat")
    from siladic.enumerator import enumerate_residue_rule

    assert enumerate_two_residue_distinct(4, 1, 3, 8)[(1, 1, 4)] == 1
    assert enumerate_residue_rule(rules, 8)[(1, 1, 4)] == 1


def test_comp_empty_partition():
    assert transported_D(COMP, 5)[(0, 0, 0)] == 1


@pytest.mark.parametrize("which", ["refdilat", "comp", "newschur", "refinement"])
def test_dilated_theorems_moderate_scale(which):
    r = verify_dilated_theorem(which, 30)
    assert r.ok, r.line()
    assert r.note == "C = D = transport"


@pytest.mark.parametrize("which", sorted(THEOREMS))
def test_partition_level_transport(which):
    r = verify_partition_map(which)
    assert r.ok, r.line()


def test_unknown_theorem():
    with pytest.raises(KeyError):
        verify_dilated_theorem("nope", 10)
    with pytest.raises(KeyError):
        verify_classical("nope", 10)


@pytest.mark.parametrize("which", CLASSICAL)
def test_classical_references(which):
    assert verify_classical(which, 30).ok


def test_schur_product_coefficient():
    from siladic.enumerator import enumerate_D

    d = enumerate_D(6).to_series().dilate(SCHUR, horizon=6)
    assert d.coeff(1, 1, 3) == 1


def test_weight_preservation_under_each_theorem():
    for name, th in THEOREMS.items():
        rules = theorem_rules(name)
        for p, image in iter_dilated(th.spec, 40, th.overline_squares):
            assert rules.partition_weight(image) == weights(p), (name, p)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 18), st.sampled_from(sorted(THEOREMS)))
def test_dilated_size_matches_series_exponent(n, name):
    th = THEOREMS[name]
    for p in iter_colored_partitions(n):
        if sum(x.value for x in p) != n:
            continue
        u, v = weights(p)
        image = dilate_partition(p, th.spec, th.overline_squares)
        assert sum(x.value for x in image) == th.spec.M * n - th.spec.m_a * u - th.spec.m_b * v
