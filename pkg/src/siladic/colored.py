"""Colored integers in the five colors a, b, ab, a2, b2.

The colored integers form a single chain

    1_ab < 1_a < 1_b2 < 1_b < 2_ab < 2_a < 3_a2 < 2_b < 3_ab < 3_a < ...

which repeats with period 8 (two integer values per block).  The squared
colors only occur on odd integers, and ``1_a2`` never occurs at all: the
chain starts its a2 entries at 3.

Partitions are sequences of colored integers, largest first, in which two
consecutive parts differ by at least the matrix entry selected by the
larger part's color and parity and the smaller part's color.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class Color(enum.Enum):
    a = "a"
    b = "b"
    ab = "ab"
    a2 = "a2"
    b2 = "b2"

    @property
    def odd_only(self) -> bool:
        return self in (Color.a2, Color.b2)

    @property
    def weight(self) -> tuple[int, int]:
        """Contribution of one part of this color to (u, v)."""
        return _COLOR_WEIGHT[self]


_COLOR_WEIGHT = {
    Color.a: (1, 0),
    Color.b: (0, 1),
    Color.ab: (1, 1),
    Color.a2: (2, 0),
    Color.b2: (0, 2),
}

COLORS = tuple(Color)

# Position inside a block of 8 for block j (values 2j-1, 2j and 2j+1 for a2).
_ODD_SLOT = {Color.ab: 0, Color.a: 1, Color.b2: 2, Color.b: 3}
_EVEN_SLOT = {Color.ab: 4, Color.a: 5, Color.b: 7}
_A2_SLOT = 6

_TEXT_RE = re.compile(r"^\s*(\d+)\s*_\s*(ab|a2|b2|a|b)\s*$")


@dataclass(frozen=True)
class ColoredInt:
    value: int
    color: Color

    def __post_init__(self):
        if not isinstance(self.color, Color):
            object.__setattr__(self, "color", Color(self.color))
        if not isinstance(self.value, int) or self.value < 1:
            raise ValueError(f"colored integer needs a positive value, got {self.value!r}")
        if self.color.odd_only and self.value % 2 == 0:
            raise ValueError(f"{self.value}_{self.color.value}: squared colors only occur on odd integers")
        if self.color is Color.a2 and self.value == 1:
            raise ValueError("1_a2 is not part of the colored chain")

    @classmethod
    def parse(cls, text: str) -> "ColoredInt":
        m = _TEXT_RE.match(text)
        if m is None:
            raise ValueError(f"cannot parse colored integer {text!r}; expected e.g. '3_a2'")
        return cls(int(m.group(1)), Color(m.group(2)))

    @classmethod
    def from_rank(cls, r: int) -> "ColoredInt":
        if r < 0:
            raise ValueError("rank must be non-negative")
        j, slot = divmod(r, 8)
        j += 1
        if slot < 4:
            color = next(c for c, s in _ODD_SLOT.items() if s == slot)
            return cls(2 * j - 1, color)
        if slot == _A2_SLOT:
            return cls(2 * j + 1, Color.a2)
        color = next(c for c, s in _EVEN_SLOT.items() if s == slot)
        return cls(2 * j, color)

    @property
    def parity(self) -> int:
        return self.value % 2

    @property
    def rank(self) -> int:
        return rank(self)

    def pred(self) -> "ColoredInt | None":
        """The colored integer immediately below in the chain (None for 1_ab)."""
        r = rank(self)
        return None if r == 0 else ColoredInt.from_rank(r - 1)

    def succ(self) -> "ColoredInt":
        return ColoredInt.from_rank(rank(self) + 1)

    def __lt__(self, other):
        if not isinstance(other, ColoredInt):
            return NotImplemented
        return rank(self) < rank(other)

    def __le__(self, other):
        if not isinstance(other, ColoredInt):
            return NotImplemented
        return rank(self) <= rank(other)

    def __gt__(self, other):
        if not isinstance(other, ColoredInt):
            return NotImplemented
        return rank(self) > rank(other)

    def __ge__(self, other):
        if not isinstance(other, ColoredInt):
            return NotImplemented
        return rank(self) >= rank(other)

    def __str__(self):
        return f"{self.value}_{self.color.value}"

    def __repr__(self):
        return f"ColoredInt({self})"


def ci(text: str) -> ColoredInt:
    """Shorthand for ``ColoredInt.parse``."""
    return ColoredInt.parse(text)


def rank(x: ColoredInt) -> int:
    """Position of ``x`` in the colored chain, starting at 0 for 1_ab."""
    if x.color is Color.a2:
        j = (x.value - 1) // 2
        return 8 * (j - 1) + _A2_SLOT
    if x.value % 2:
        j = (x.value + 1) // 2
        return 8 * (j - 1) + _ODD_SLOT[x.color]
    j = x.value // 2
    return 8 * (j - 1) + _EVEN_SLOT[x.color]


def colored_ints(max_value: int) -> list[ColoredInt]:
    """All colored integers of value <= max_value, in chain order."""
    out = []
    r = 0
    while True:
        x = ColoredInt.from_rank(r)
        # values inside a block never drop by more than 1 (3_a2 sits before 2_b)
        if x.value > max_value + 1:
            break
        if x.value <= max_value:
            out.append(x)
        r += 1
    return out


# Rows are keyed by (color of the larger part, its parity); a2 and b2 rows
# only exist for odd parts.  Columns are the smaller part's color.
_COLS = (Color.a, Color.b, Color.ab, Color.a2, Color.b2)
_ROWS = {
    (Color.a, 1): (2, 2, 1, 2, 2),
    (Color.b2, 1): (2, 3, 2, 2, 4),
    (Color.b, 1): (1, 2, 1, 2, 2),
    (Color.ab, 0): (2, 2, 2, 3, 3),
    (Color.a, 0): (2, 2, 2, 3, 3),
    (Color.a2, 1): (3, 3, 3, 4, 4),
    (Color.b, 0): (1, 2, 1, 1, 3),
    (Color.ab, 1): (2, 3, 2, 2, 3),
}

GAP_MATRIX: dict[tuple[Color, int], dict[Color, int]] = {
    row: dict(zip(_COLS, entries)) for row, entries in _ROWS.items()
}


def min_gap(larger_color: Color, larger_parity: int, smaller_color: Color) -> int:
    """Minimal difference between a part and the next (smaller) part."""
    row = GAP_MATRIX.get((Color(larger_color), larger_parity % 2))
    if row is None:
        raise ValueError(f"no colored integers of color {Color(larger_color).value} with even value")
    return row[Color(smaller_color)]


FORBIDDEN_PARTS = frozenset({ColoredInt(1, Color.ab), ColoredInt(1, Color.b2)})


def can_follow(larger: ColoredInt, smaller: ColoredInt) -> bool:
    return larger.value - smaller.value >= min_gap(larger.color, larger.parity, smaller.color)


def is_admissible(parts: Iterable) -> bool:
    """True iff ``parts`` (largest first) is a partition counted by D(u, v, n)."""
    try:
        seq = [p if isinstance(p, ColoredInt) else ColoredInt.parse(str(p)) for p in parts]
    except (ValueError, TypeError):
        return False
    for p in seq:
        if p in FORBIDDEN_PARTS:
            return False
    for big, small in zip(seq, seq[1:]):
        if not rank(big) > rank(small):
            return False
        if not can_follow(big, small):
            return False
    return True


def weights(parts: Sequence[ColoredInt]) -> tuple[int, int]:
    u = v = 0
    for p in parts:
        du, dv = p.color.weight
        u += du
        v += dv
    return u, v


def format_partition(parts: Sequence[ColoredInt]) -> str:
    return " + ".join(str(p) for p in parts) if parts else "()"


def parse_partition(text: str) -> tuple[ColoredInt, ...]:
    text = text.strip()
    if text in ("", "()"):
        return ()
    return tuple(ColoredInt.parse(t) for t in re.split(r"[+,\s]+", text) if t)
