"""Generating functions G_k rebuilt from the q-difference equations.

G_k(a, b, q) counts admissible colored partitions with largest part at most
k in the colored order.  The ladder starts from the eight series for
1_ab, ..., 2_b and climbs the chain one colored integer at a time; each step
is one of the eight equations below, chosen by the color and parity of the
new top part, and always adds correction terms to the predecessor's series.

Every correction is a monomial times an earlier G, so truncation at q^N is
exact and the horizon never shrinks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .colored import Color, ColoredInt, rank
from .qseries import TriSeries

INITIAL_CONDITIONS = {
    "1_ab": "1",
    "1_a": "1 + a*q",
    "1_b2": "1 + a*q",
    "1_b": "1 + a*q + b*q",
    "2_ab": "1 + a*q + b*q + a*b*q^2",
    "2_a": "1 + a*q + b*q + a*b*q^2 + a*q^2",
    "3_a2": "1 + a*q + b*q + a*b*q^2 + a*q^2 + a^2*q^3",
    "2_b": "1 + a*q + b*q + a*b*q^2 + a*q^2 + a^2*q^3 + b*q^2 + a*b*q^3",
}


def C(value: int, color: str) -> ColoredInt:
    return ColoredInt(value, Color(color))


def step_equation(x: ColoredInt) -> tuple[str, int, list[tuple[tuple[int, int, int], ColoredInt]]]:
    """The equation producing G_x from earlier G's.

    Returns (equation id, k, corrections) with G_x = G_pred(x) + sum of
    a^i b^j q^n G_y over the corrections ((i, j, n), y).
    """
    v, c = x.value, x.color
    if c is Color.a2:
        k = (v - 3) // 2
        return "eq7", k, [((2, 0, 2 * k + 3), C(2 * k, "a")), ((2, 1, 4 * k + 3), C(2 * k - 1, "a"))]
    if v % 2:
        k = (v - 1) // 2
        if c is Color.ab:
            return "eq1", k, [((1, 1, 2 * k + 1), C(2 * k - 1, "a"))]
        if c is Color.a:
            return "eq2", k, [((1, 0, 2 * k + 1), C(2 * k, "ab"))]
        if c is Color.b2:
            return "eq3", k, [((0, 2, 2 * k + 1), C(2 * k - 1, "a"))]
        return "eq4", k, [((0, 1, 2 * k + 1), C(2 * k, "a"))]
    k = (v - 2) // 2
    if c is Color.ab:
        return "eq5", k, [((1, 1, 2 * k + 2), C(2 * k, "a")), ((1, 2, 4 * k + 2), C(2 * k - 1, "a"))]
    if c is Color.a:
        return "eq6", k, [((1, 0, 2 * k + 2), C(2 * k, "a")), ((1, 1, 4 * k + 2), C(2 * k - 1, "a"))]
    return "eq8", k, [((0, 1, 2 * k + 2), C(2 * k + 1, "a"))]


@dataclass
class GLadder:
    caps: tuple[int, int, int]
    series: dict[int, TriSeries] = field(default_factory=dict)
    produced_by: dict[int, str] = field(default_factory=dict)

    def __getitem__(self, x) -> TriSeries:
        if isinstance(x, str):
            x = ColoredInt.parse(x)
        try:
            return self.series[rank(x)]
        except KeyError:
            raise KeyError(f"G_{x} is not in the ladder (top is {self.top})") from None

    def __contains__(self, x) -> bool:
        if isinstance(x, str):
            x = ColoredInt.parse(x)
        return rank(x) in self.series

    @property
    def top(self) -> ColoredInt:
        return ColoredInt.from_rank(max(self.series))

    def items(self):
        for r in sorted(self.series):
            yield ColoredInt.from_rank(r), self.series[r]


def initial_series(caps) -> dict[str, TriSeries]:
    return {name: TriSeries.parse_poly(caps, text) for name, text in INITIAL_CONDITIONS.items()}


def build_ladder(k_max: ColoredInt, caps) -> GLadder:
    """G_x for every colored integer x up to k_max in the chain."""
    if isinstance(k_max, str):
        k_max = ColoredInt.parse(k_max)
    caps = tuple(caps)
    ladder = GLadder(caps)
    for name, s in initial_series(caps).items():
        r = rank(ColoredInt.parse(name))
        ladder.series[r] = s
        ladder.produced_by[r] = "initial"
    for r in range(8, rank(k_max) + 1):
        x = ColoredInt.from_rank(r)
        eq, _, corrections = step_equation(x)
        prev = r - 1
        if prev not in ladder.series:
            raise RuntimeError(f"ladder gap below {x}")
        g = ladder.series[prev]
        for (i, j, n), y in corrections:
            g = g + ladder.series[rank(y)].shift(i, j, n)
        ladder.series[r] = g
        ladder.produced_by[r] = eq
    return ladder
