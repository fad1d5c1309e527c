"""Dilations of colored partitions and the theorems they produce.

A dilation (M, m_a, m_b) sends a part of value k to M*k minus an offset
depending on its color: m_a for a, m_b for b, their sum for ab, and twice
them for the squared colors.  On generating functions this is the
substitution q -> q^M, a -> a q^-m_a, b -> b q^-m_b.

Each dilated theorem is checked three ways:

* C-side: distinct parts in two residue classes, counted directly;
* D-side: the theorem's difference conditions, counted by the rule enumerator;
* transport: the colored count table D pushed through the dilation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .colored import FORBIDDEN_PARTS, Color, ColoredInt, can_follow, colored_ints, weights
from .enumerator import (
    enumerate_D,
    enumerate_distinct_odd,
    enumerate_residue_rule,
    enumerate_rr,
    enumerate_schur,
    enumerate_two_residue_distinct,
)
from .qseries import CountTable, DilationSpec, schur_product
from .replay import FAIL, PASS, ReplayReport, compare_series
from .rules import Part, ResidueRuleSet, load_rules, siladic_rules

REFDILAT = DilationSpec(4, 3, 1)
COMP = DilationSpec(4, 1, 3)
SCHUR = DilationSpec(3, 2, 1)


def offset(color: Color, spec: DilationSpec) -> int:
    i, j = color.weight
    return i * spec.m_a + j * spec.m_b


def part_image(x: ColoredInt, spec: DilationSpec) -> int:
    return spec.M * x.value - offset(x.color, spec)


def dilate_partition(p: Sequence[ColoredInt], spec: DilationSpec, overline_squares: bool = False) -> tuple[Part, ...]:
    """Image of a colored partition, as parts sorted in decreasing order.

    With overline_squares, parts colored a^2 or b^2 come out overlined.
    """
    out = []
    for x in p:
        value = part_image(x, spec)
        if value < 1:
            raise ValueError(f"part {x} maps to {value} under ({spec}); forbidden part in input?")
        out.append(Part(value, overline_squares and x.color in (Color.a2, Color.b2)))
    out.sort(reverse=True)
    return tuple(out)


def horizon_soundness(spec: DilationSpec, max_value: int = 50) -> list[ColoredInt]:
    """Allowed parts whose image is smaller than their value (should be none)."""
    return [x for x in colored_ints(max_value) if x not in FORBIDDEN_PARTS and part_image(x, spec) < x.value]


def iter_dilated(spec: DilationSpec, n_max: int, overline_squares: bool = False) -> Iterator[tuple[tuple, tuple]]:
    """Admissible colored partitions whose image has size at most n_max, with the image."""
    # image >= value for allowed parts, so no part above n_max can occur
    chain = [x for x in colored_ints(n_max) if x not in FORBIDDEN_PARTS]
    cost = {x: part_image(x, spec) for x in chain}

    def rec(prefix, budget, candidates):
        yield tuple(prefix)
        for i, x in enumerate(candidates):
            c = cost[x]
            if c > budget or (prefix and not can_follow(prefix[-1], x)):
                continue
            prefix.append(x)
            yield from rec(prefix, budget - c, candidates[:i])
            prefix.pop()

    for p in rec([], n_max, chain):
        yield p, dilate_partition(p, spec, overline_squares)


@dataclass(frozen=True)
class DilatedTheorem:
    name: str
    spec: DilationSpec
    rules: str
    residues: tuple[int, int, int]  # (modulus, residue for a, residue for b) on the C-side
    overline_squares: bool = False
    default_N: int = 60


THEOREMS = {
    "refdilat": DilatedTheorem("refdilat", REFDILAT, "refdilat", (4, 1, 3)),
    "comp": DilatedTheorem("comp", COMP, "comp", (4, 3, 1)),
    "newschur": DilatedTheorem("newschur", SCHUR, "newschur", (3, 1, 2), overline_squares=True, default_N=40),
}


def theorem_rules(name: str) -> ResidueRuleSet:
    return load_rules(THEOREMS[name].rules)


def transported_D(spec: DilationSpec, N: int) -> CountTable:
    """enumerate_D pushed through the dilation, exact for n <= N."""
    caps = (N, N, N)
    return CountTable.from_series(enumerate_D(caps).to_series().dilate(spec, horizon=N))


def _first_mismatch(tables: dict) -> tuple | None:
    names = list(tables)
    keys = set()
    for t in tables.values():
        keys |= set(t)
    bad = [k for k in keys if len({tables[n].get(k, 0) for n in names}) > 1]
    if not bad:
        return None
    return min(bad, key=lambda t: (t[2], t[0], t[1]))


def _three_way(ident: str, N: int, tables: dict) -> ReplayReport:
    w = _first_mismatch(tables)
    caps = (N, N, N)
    if w is None:
        return ReplayReport(ident, None, caps, PASS, note=" = ".join(tables))
    values = ", ".join(f"{n}={t.get(w, 0)}" for n, t in tables.items())
    return ReplayReport(ident, None, caps, FAIL, w, values)


def _by_k(table: CountTable) -> dict:
    return {(k, 0, n): c for (k, n), c in table.by_k().items()}


def verify_dilated_theorem(which: str, N: int | None = None) -> ReplayReport:
    if which == "refinement":
        N = 60 if N is None else N
        th = THEOREMS["refdilat"]
        d_side = enumerate_residue_rule(theorem_rules("refdilat"), N)
        return _three_way(which, N, {
            "C": enumerate_distinct_odd(N).entries,
            "D": _by_k(d_side),
            "transport": _by_k(transported_D(th.spec, N)),
        })
    try:
        th = THEOREMS[which]
    except KeyError:
        raise KeyError(f"unknown dilated theorem {which!r}; choose from {sorted(THEOREMS) + ['refinement']}") from None
    N = th.default_N if N is None else N
    m, ra, rb = th.residues
    return _three_way(which, N, {
        "C": enumerate_two_residue_distinct(m, ra, rb, N).entries,
        "D": enumerate_residue_rule(theorem_rules(which), N).entries,
        "transport": transported_D(th.spec, N).entries,
    })


def verify_partition_map(which: str, n_max: int | None = None) -> ReplayReport:
    """Partition-level transport: images are distinct, satisfy the rules,
    keep their weights, and account for every rule-side partition."""
    th = THEOREMS[which]
    n_max = th.default_N if n_max is None else n_max
    rules = theorem_rules(which)
    seen: set = set()
    images: Counter = Counter()
    caps = (n_max, n_max, n_max)
    for p, image in iter_dilated(th.spec, n_max, th.overline_squares):
        n = sum(x.value for x in image)
        u, v = weights(p)
        if image in seen:
            return ReplayReport(f"{which}-map", None, caps, FAIL, (u, v, n), f"two partitions map to {image}")
        seen.add(image)
        if not rules.accepts(image):
            return ReplayReport(f"{which}-map", None, caps, FAIL, (u, v, n), f"image {image} of {p} breaks the rules")
        if rules.partition_weight(image) != (u, v):
            return ReplayReport(f"{which}-map", None, caps, FAIL, (u, v, n), f"weight of {image} differs from {p}")
        images[(u, v, n)] += 1
    direct = enumerate_residue_rule(rules, caps).entries
    return _three_way(f"{which}-map", n_max, {"images": dict(images), "D": direct})


CLASSICAL = ("rr0", "rr1", "schur", "schur-product", "siladic")


def _sequences(ident: str, N: int, left: list[int], right: list[int], names=("lhs", "rhs")) -> ReplayReport:
    caps = (0, 0, N)
    for n, (x, y) in enumerate(zip(left, right)):
        if x != y:
            return ReplayReport(ident, None, caps, FAIL, (0, 0, n), f"{names[0]}={x} {names[1]}={y}")
    return ReplayReport(ident, None, caps, PASS)


def verify_classical(which: str, N: int = 40) -> ReplayReport:
    which = which.replace("_", "-")
    if which in ("rr0", "rr1"):
        diff, cong = enumerate_rr(int(which[-1]), N)
        return _sequences(which, N, diff, cong, ("gap-side", "congruence-side"))
    if which == "schur":
        a, b = enumerate_schur(N)
        return _sequences(which, N, a, b, ("distinct-1,2-mod-3", "gap-side"))
    if which == "schur-product":
        caps = (N, N, N)
        dilated = enumerate_D(caps).to_series().dilate(SCHUR, horizon=N)
        return compare_series(which, None, dilated, schur_product(caps))
    if which == "siladic":
        totals = enumerate_residue_rule(siladic_rules(), N).totals()
        odd = enumerate_distinct_odd(N).totals()
        return _sequences(which, N, totals, odd, ("siladic-side", "distinct-odd"))
    raise KeyError(f"unknown classical check {which!r}; choose from {list(CLASSICAL)}")
