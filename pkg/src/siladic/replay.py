"""Replays of every identity used in the proof, on truncated series and on
enumerated count tables.

Series identities are written once, as functions of k and a source of G's.
The source is either the ladder (built from the q-difference equations) or
the enumerator (G_x read off the brute-force d_x table), so the same
identity can be checked against the combinatorics rather than against the
construction it came from.

Count identities relate d and e tables at shifted arguments.  A term
``(coeff, table, (i, j, s))`` stands for coeff * table(u - i, v - j, n - s),
with the convention that negative arguments count zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .colored import Color, ColoredInt, rank
from .enumerator import enumerate_D, enumerate_dk, enumerate_ek
from .qseries import CountTable, TriSeries, first_difference, two_color_product
from .recurrences import INITIAL_CONDITIONS, GLadder, build_ladder, initial_series

REPORT_SCHEMA = "siladic.replay/1"

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class ReplayReport:
    id: str
    k: int | None
    caps: tuple[int, int, int]
    status: str
    witness: tuple[int, int, int] | None = None
    note: str = ""

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"failed check {self.id} must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "id": self.id,
            "k": self.k,
            "caps": list(self.caps),
            "status": self.status,
            "witness": list(self.witness) if self.witness else None,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def line(self) -> str:
        k = "-" if self.k is None else str(self.k)
        w = "" if self.witness is None else f" witness={self.witness}"
        note = f"  {self.note}" if self.note else ""
        return f"{self.id:<22} k={k:<3} {self.status.upper():<12}{w}{note}"


def summarize(reports: list[ReplayReport]) -> str:
    counts = {s: sum(r.status == s for r in reports) for s in (PASS, FAIL, INCONCLUSIVE)}
    lines = [r.line() for r in reports]
    lines.append(f"-- {len(reports)} checks: {counts[PASS]} pass, {counts[FAIL]} fail, {counts[INCONCLUSIVE]} inconclusive")
    return "\n".join(lines)


def exit_status(reports: list[ReplayReport]) -> int:
    if any(r.status == FAIL for r in reports):
        return 1
    if any(r.status == INCONCLUSIVE for r in reports):
        return 2
    return 0


def compare_series(ident: str, k, lhs: TriSeries, rhs: TriSeries, note: str = "") -> ReplayReport:
    if lhs.caps[:2] != rhs.caps[:2]:
        raise ValueError(f"{ident}: sides have different caps {lhs.caps} / {rhs.caps}")
    caps = lhs.caps
    h = min(lhs.horizon, rhs.horizon, caps[2], rhs.caps[2])
    if h < 0:
        return ReplayReport(ident, k, caps, INCONCLUSIVE, note="empty completeness horizon")
    w = first_difference(lhs, rhs, h)
    if w is None:
        extra = "" if h == caps[2] else f"compared to q^{h} only"
        return ReplayReport(ident, k, caps, PASS, note=" ".join(x for x in (note, extra) if x))
    u, v, n = w
    detail = f"lhs={lhs.coeff(u, v, n)} rhs={rhs.coeff(u, v, n)}"
    return ReplayReport(ident, k, caps, FAIL, w, " ".join(x for x in (note, detail) if x))


# -- sources of G ------------------------------------------------------------


class _Source:
    """G's, swapped G's, monomials and d/e tables at fixed caps."""

    def __init__(self, caps, ladder: GLadder | None = None):
        self.caps = tuple(caps)
        self.ladder = ladder
        self._swap: dict = {}

    def _x(self, value: int, color: str) -> ColoredInt:
        if value < 1:
            raise ValueError(f"G at non-positive value {value}_{color}")
        return ColoredInt(value, Color(color))

    def G(self, value: int, color: str) -> TriSeries:
        x = self._x(value, color)
        if self.ladder is not None:
            return self.ladder[x]
        return enumerate_dk(x, self.caps).to_series()

    def S(self, value: int, color: str) -> TriSeries:
        key = (value, color)
        if key not in self._swap:
            self._swap[key] = self.G(value, color).swap_sub()
        return self._swap[key]

    def m(self, *monos) -> TriSeries:
        """Sum of monomials given as (i, j, n) or (i, j, n, coeff)."""
        terms = {}
        for mono in monos:
            i, j, n, *c = mono
            terms[(i, j, n)] = terms.get((i, j, n), 0) + (c[0] if c else 1)
        return TriSeries(self.caps, terms)

    def d(self, value: int, color: str) -> CountTable:
        return enumerate_dk(self._x(value, color), self.caps)

    def e(self, value: int, color: str) -> CountTable:
        return enumerate_ek(self._x(value, color), self.caps)


@dataclass(frozen=True)
class SeriesIdentity:
    id: str
    min_k: int
    sides: Callable[[int, _Source], tuple[TriSeries, TriSeries]]


def _one_plus_aq(X: _Source) -> TriSeries:
    return X.m((0, 0, 0), (1, 0, 1))


# The q-difference equations.
QDIFF = [
    SeriesIdentity("eq1", 1, lambda k, X: (X.G(2*k+1, "ab"), X.G(2*k, "b") + X.m((1, 1, 2*k+1)) * X.G(2*k-1, "a"))),
    SeriesIdentity("eq2", 1, lambda k, X: (X.G(2*k+1, "a"), X.G(2*k+1, "ab") + X.m((1, 0, 2*k+1)) * X.G(2*k, "ab"))),
    SeriesIdentity("eq3", 1, lambda k, X: (X.G(2*k+1, "b2"), X.G(2*k+1, "a") + X.m((0, 2, 2*k+1)) * X.G(2*k-1, "a"))),
    SeriesIdentity("eq4", 1, lambda k, X: (X.G(2*k+1, "b"), X.G(2*k+1, "b2") + X.m((0, 1, 2*k+1)) * X.G(2*k, "a"))),
    SeriesIdentity("eq5", 1, lambda k, X: (
        X.G(2*k+2, "ab"),
        X.G(2*k+1, "b") + X.m((1, 1, 2*k+2)) * X.G(2*k, "a") + X.m((1, 2, 4*k+2)) * X.G(2*k-1, "a"))),
    SeriesIdentity("eq6", 1, lambda k, X: (
        X.G(2*k+2, "a"),
        X.G(2*k+2, "ab") + X.m((1, 0, 2*k+2)) * X.G(2*k, "a") + X.m((1, 1, 4*k+2)) * X.G(2*k-1, "a"))),
    SeriesIdentity("eq7", 1, lambda k, X: (
        X.G(2*k+3, "a2"),
        X.G(2*k+2, "a") + X.m((2, 0, 2*k+3)) * X.G(2*k, "a") + X.m((2, 1, 4*k+3)) * X.G(2*k-1, "a"))),
    SeriesIdentity("eq8", 1, lambda k, X: (X.G(2*k+2, "b"), X.G(2*k+3, "a2") + X.m((0, 1, 2*k+2)) * X.G(2*k+1, "a"))),
]

# The four equations of the key proposition: G(a, b, q) = (1 + aq) G'(b, aq, q).
KEYPROP = [
    SeriesIdentity("key1", 1, lambda k, X: (X.G(2*k+1, "ab"), _one_plus_aq(X) * X.S(2*k, "a"))),
    SeriesIdentity("key2", 1, lambda k, X: (X.G(2*k+1, "b2"), _one_plus_aq(X) * X.S(2*k, "b"))),
    SeriesIdentity("key3", 1, lambda k, X: (X.G(2*k+2, "ab"), _one_plus_aq(X) * X.S(2*k+1, "a"))),
    SeriesIdentity("key4", 1, lambda k, X: (X.G(2*k+1, "a2"), _one_plus_aq(X) * X.S(2*k-1, "b"))),
]


def _ploc(k, X):
    inner = (
        X.S(2*k-1, "b")
        + X.m((0, 1, 2*k), (1, 1, 2*k+1)) * X.S(2*k-2, "a")
        + X.m((1, 1, 4*k-1), (2, 1, 4*k)) * X.S(2*k-3, "a")
    )
    return X.G(2*k+1, "ab"), _one_plus_aq(X) * inner


def _cas2eq3(k, X):
    inner = (
        X.S(2*k, "a")
        + X.m((1, 0, 2*k+1)) * X.S(2*k-1, "a")
        + X.m((0, 2, 2*k+1)) * X.S(2*k-2, "a")
        + X.m((1, 2, 4*k)) * X.S(2*k-3, "a")
    )
    return X.G(2*k+1, "b2"), _one_plus_aq(X) * inner


def _star_expanded(k, X):
    rhs = (
        X.G(2*k+1, "b2")
        + X.m((0, 1, 2*k+1)) * (
            X.G(2*k+1, "a2") - X.m((2, 0, 2*k+1)) * X.G(2*k-2, "a") - X.m((2, 1, 4*k-1)) * X.G(2*k-3, "a"))
        + X.m((1, 2, 4*k+2)) * (X.G(2*k-1, "ab") + X.m((1, 0, 2*k-1)) * X.G(2*k-2, "ab"))
        + X.m((1, 1, 2*k+2)) * (
            X.G(2*k, "ab") + X.m((1, 0, 2*k)) * X.G(2*k-2, "a") + X.m((1, 1, 4*k-2)) * X.G(2*k-3, "a"))
    )
    return X.G(2*k+2, "ab"), rhs


# Intermediate identities of the induction, in the order they appear.
PROOF_SERIES = [
    # key1
    SeriesIdentity("plic", 1, lambda k, X: (
        X.G(2*k+1, "ab"), X.G(2*k+1, "a2") + X.m((0, 1, 2*k), (1, 1, 2*k+1)) * X.G(2*k-1, "a"))),
    SeriesIdentity("plic-expanded", 2, lambda k, X: (
        X.G(2*k+1, "ab"),
        X.G(2*k+1, "a2")
        + X.m((0, 1, 2*k), (1, 1, 2*k+1)) * X.G(2*k-1, "ab")
        + X.m((1, 1, 4*k-1), (2, 1, 4*k)) * X.G(2*k-2, "ab"))),
    SeriesIdentity("ploc", 2, _ploc),
    SeriesIdentity("eq1*", 2, lambda k, X: (
        X.G(2*k, "ab"),
        X.G(2*k-1, "b") + X.m((1, 1, 2*k)) * X.G(2*k-2, "a") + X.m((1, 2, 4*k-2)) * X.G(2*k-3, "a"))),
    SeriesIdentity("eq2*", 2, lambda k, X: (
        X.G(2*k, "a"),
        X.G(2*k, "ab") + X.m((1, 0, 2*k)) * X.G(2*k-2, "a") + X.m((1, 1, 4*k-2)) * X.G(2*k-3, "a"))),
    SeriesIdentity("eq1*+eq2*-swapped", 2, lambda k, X: (
        X.S(2*k, "a"),
        X.S(2*k-1, "b")
        + X.m((0, 1, 2*k), (1, 1, 2*k+1)) * X.S(2*k-2, "a")
        + X.m((1, 1, 4*k-1), (2, 1, 4*k)) * X.S(2*k-3, "a"))),
    # key2
    SeriesIdentity("cas2eq1", 1, lambda k, X: (
        X.G(2*k+1, "b2"),
        X.G(2*k+1, "ab") + X.m((1, 0, 2*k+1)) * X.G(2*k, "ab") + X.m((0, 2, 2*k+1)) * X.G(2*k-1, "a"))),
    SeriesIdentity("cas2eq2", 2, lambda k, X: (
        X.G(2*k+1, "b2"),
        X.G(2*k+1, "ab") + X.m((1, 0, 2*k+1)) * X.G(2*k, "ab")
        + X.m((0, 2, 2*k+1)) * X.G(2*k-1, "ab") + X.m((1, 2, 4*k)) * X.G(2*k-2, "ab"))),
    SeriesIdentity("cas2eq3", 2, _cas2eq3),
    SeriesIdentity("eq7+eq8", 2, lambda k, X: (
        X.G(2*k, "b"),
        X.G(2*k, "a") + X.m((0, 1, 2*k)) * X.G(2*k-1, "a")
        + X.m((2, 0, 2*k+1)) * X.G(2*k-2, "a") + X.m((2, 1, 4*k-1)) * X.G(2*k-3, "a"))),
    SeriesIdentity("eq7+eq8-swapped", 2, lambda k, X: (
        X.S(2*k, "b"),
        X.S(2*k, "a") + X.m((1, 0, 2*k+1)) * X.S(2*k-1, "a")
        + X.m((0, 2, 2*k+1)) * X.S(2*k-2, "a") + X.m((1, 2, 4*k)) * X.S(2*k-3, "a"))),
    # key3
    SeriesIdentity("plouf", 1, lambda k, X: (
        X.G(2*k+1, "a"),
        X.G(2*k, "b") + X.m((1, 0, 2*k+1)) * X.G(2*k, "ab") + X.m((1, 1, 2*k+1)) * X.G(2*k-1, "a"))),
    SeriesIdentity("plouf3", 2, lambda k, X: (
        X.G(2*k+1, "a"),
        X.G(2*k, "b") + X.m((1, 0, 2*k+1)) * X.G(2*k-1, "b") + X.m((2, 1, 4*k+1)) * X.G(2*k-2, "a")
        + X.m((2, 2, 6*k-1)) * X.G(2*k-3, "a") + X.m((1, 1, 2*k+1)) * X.G(2*k-1, "a"))),
    SeriesIdentity("etoile", 2, lambda k, X: (
        X.S(2*k+1, "a"),
        X.S(2*k, "b") + X.m((0, 1, 2*k+1)) * X.S(2*k-1, "b") + X.m((1, 2, 4*k+2)) * X.S(2*k-2, "a")
        + X.m((2, 2, 6*k+1)) * X.S(2*k-3, "a") + X.m((1, 1, 2*k+2)) * X.S(2*k-1, "a"))),
    SeriesIdentity("paf", 2, lambda k, X: (
        X.G(2*k+2, "ab"),
        X.G(2*k+1, "b2") + X.m((0, 1, 2*k+1)) * X.G(2*k+1, "a2") + X.m((1, 2, 4*k+2)) * X.G(2*k-1, "ab")
        + X.m((2, 2, 6*k+1)) * X.G(2*k-2, "ab") + X.m((1, 1, 2*k+2)) * X.G(2*k, "ab"))),
    SeriesIdentity("star", 1, lambda k, X: (
        X.G(2*k+2, "ab"),
        X.G(2*k+1, "b2") + X.m((0, 1, 2*k+1)) * X.G(2*k, "a") + X.m((1, 2, 4*k+2)) * X.G(2*k-1, "a")
        + X.m((1, 1, 2*k+2)) * X.G(2*k, "a"))),
    SeriesIdentity("star-expanded", 2, _star_expanded),
    # key4
    SeriesIdentity("eq34", 1, lambda k, X: (
        X.S(2*k+1, "b"),
        X.S(2*k+1, "a") + X.m((1, 0, 2*k+2)) * X.S(2*k, "a") + X.m((2, 0, 2*k+3)) * X.S(2*k-1, "a"))),
    SeriesIdentity("goal", 1, lambda k, X: (
        X.G(2*k+3, "a2"),
        X.G(2*k+2, "ab") + X.m((1, 0, 2*k+2)) * X.G(2*k+1, "ab") + X.m((2, 0, 2*k+3)) * X.G(2*k, "ab"))),
]


# -- count-table identities --------------------------------------------------

Term = tuple  # (coeff, CountTable, (i, j, s))


def evaluate_terms(terms: list, caps) -> dict:
    U, V, N = caps
    acc: dict = {}
    for coeff, table, (i, j, s) in terms:
        for (u, v, n), c in table.entries.items():
            key = (u + i, v + j, n + s)
            if key[0] <= U and key[1] <= V and key[2] <= N:
                acc[key] = acc.get(key, 0) + coeff * c
    return {k: c for k, c in acc.items() if c}


def compare_counts(ident: str, k, lhs: list, rhs: list, caps, note: str = "") -> ReplayReport:
    left, right = evaluate_terms(lhs, caps), evaluate_terms(rhs, caps)
    bad = [key for key in set(left) | set(right) if left.get(key, 0) != right.get(key, 0)]
    if not bad:
        return ReplayReport(ident, k, tuple(caps), PASS, note=note)
    w = min(bad, key=lambda t: (t[2], t[0], t[1]))
    detail = f"lhs={left.get(w, 0)} rhs={right.get(w, 0)}"
    return ReplayReport(ident, k, tuple(caps), FAIL, w, " ".join(x for x in (note, detail) if x))


@dataclass(frozen=True)
class CountIdentity:
    id: str
    min_k: int
    sides: Callable[[int, _Source], tuple[list, list]]


def _t(table, i=0, j=0, s=0, coeff=1):
    return (coeff, table, (i, j, s))


EQD = [
    CountIdentity("eqd1", 1, lambda k, X: (
        [_t(X.d(2*k+1, "ab"))], [_t(X.d(2*k, "b")), _t(X.d(2*k-1, "a"), 1, 1, 2*k+1)])),
    CountIdentity("eqd2", 1, lambda k, X: (
        [_t(X.d(2*k+1, "a"))], [_t(X.d(2*k+1, "ab")), _t(X.d(2*k, "ab"), 1, 0, 2*k+1)])),
    CountIdentity("eqd3", 1, lambda k, X: (
        [_t(X.d(2*k+1, "b2"))], [_t(X.d(2*k+1, "a")), _t(X.d(2*k-1, "a"), 0, 2, 2*k+1)])),
    CountIdentity("eqd4", 1, lambda k, X: (
        [_t(X.d(2*k+1, "b"))], [_t(X.d(2*k+1, "b2")), _t(X.d(2*k, "a"), 0, 1, 2*k+1)])),
    CountIdentity("eqd5", 1, lambda k, X: (
        [_t(X.d(2*k+2, "ab"))],
        [_t(X.d(2*k+1, "b")), _t(X.d(2*k, "a"), 1, 1, 2*k+2), _t(X.d(2*k-1, "a"), 1, 2, 4*k+2)])),
    CountIdentity("eqd6", 1, lambda k, X: (
        [_t(X.d(2*k+2, "a"))],
        [_t(X.d(2*k+2, "ab")), _t(X.d(2*k, "a"), 1, 0, 2*k+2), _t(X.d(2*k-1, "a"), 1, 1, 4*k+2)])),
    CountIdentity("eqd7", 1, lambda k, X: (
        [_t(X.d(2*k+3, "a2"))],
        [_t(X.d(2*k+2, "a")), _t(X.d(2*k, "a"), 2, 0, 2*k+3), _t(X.d(2*k-1, "a"), 2, 1, 4*k+3)])),
    CountIdentity("eqd8", 1, lambda k, X: (
        [_t(X.d(2*k+2, "b"))], [_t(X.d(2*k+3, "a2")), _t(X.d(2*k+1, "a"), 0, 1, 2*k+2)])),
    # the largest-part splittings behind eqd1 and eqd5
    CountIdentity("eqd1-split", 1, lambda k, X: (
        [_t(X.d(2*k+1, "ab"))], [_t(X.d(2*k, "b")), _t(X.e(2*k+1, "ab"))])),
    CountIdentity("eqd1-remove", 1, lambda k, X: (
        [_t(X.e(2*k+1, "ab"))], [_t(X.d(2*k-1, "a"), 1, 1, 2*k+1)])),
    CountIdentity("eqd5-split", 1, lambda k, X: (
        [_t(X.d(2*k+2, "ab"))], [_t(X.d(2*k+1, "b")), _t(X.e(2*k+2, "ab"))])),
    CountIdentity("eqd5-remove", 1, lambda k, X: (
        [_t(X.e(2*k+2, "ab"))], [_t(X.e(2*k, "b"), 1, 1, 2*k+2), _t(X.d(2*k, "a"), 1, 1, 2*k+2)])),
    CountIdentity("eqd5-remove-b", 1, lambda k, X: (
        [_t(X.e(2*k, "b"), 1, 1, 2*k+2)], [_t(X.d(2*k-1, "a"), 1, 2, 4*k+2)])),
]

PROOF_COUNTS = [
    CountIdentity("pif3", 1, lambda k, X: (
        [_t(X.d(2*k+3, "a2"))], [_t(X.d(2*k+2, "ab")), _t(X.e(2*k+2, "a")), _t(X.e(2*k+3, "a2"))])),
    CountIdentity("pif1", 1, lambda k, X: (
        [_t(X.e(2*k+2, "a"))],
        [_t(X.d(2*k+1, "ab"), 1, 0, 2*k+2), _t(X.e(2*k+1, "a2"), 1, 0, 2*k+2, -1), _t(X.e(2*k+1, "ab"), 1, 0, 2*k+2, -1)])),
    CountIdentity("pif2", 1, lambda k, X: (
        [_t(X.e(2*k+3, "a2"))],
        [_t(X.d(2*k, "ab"), 2, 0, 2*k+3), _t(X.e(2*k, "a"), 2, 0, 2*k+3), _t(X.e(2*k, "b"), 2, 0, 2*k+3)])),
    CountIdentity("e-ab", 1, lambda k, X: (
        [_t(X.e(2*k+1, "ab"), 1, 0, 2*k+2)], [_t(X.d(2*k-1, "a"), 2, 1, 4*k+3)])),
    CountIdentity("e-b", 1, lambda k, X: (
        [_t(X.e(2*k, "b"), 2, 0, 2*k+3)], [_t(X.d(2*k-1, "a"), 2, 1, 4*k+3)])),
    CountIdentity("e-ab=e-b", 1, lambda k, X: (
        [_t(X.e(2*k+1, "ab"), 1, 0, 2*k+2)], [_t(X.e(2*k, "b"), 2, 0, 2*k+3)])),
    CountIdentity("e-a2", 2, lambda k, X: (
        [_t(X.e(2*k+1, "a2"), 1, 0, 2*k+2)], [_t(X.e(2*k-2, "b"), 3, 0, 4*k+3), _t(X.d(2*k-2, "a"), 3, 0, 4*k+3)])),
    CountIdentity("pif-combined", 1, lambda k, X: (
        [_t(X.d(2*k+3, "a2"))],
        [_t(X.d(2*k+2, "ab")), _t(X.d(2*k+1, "ab"), 1, 0, 2*k+2), _t(X.d(2*k, "ab"), 2, 0, 2*k+3)])),
]

# Two displays disagree on the q-offset attached to e_{2k_a}: the printed
# n-(2k+2) next to n-(2k+3) used in pif2.  Both candidates are replayed and
# the report records which one holds.
AMBIGUOUS_OFFSETS = {
    "e-a": (
        2,
        lambda k, X, off: (
            [_t(X.e(2*k, "a"), 2, 0, off)], [_t(X.e(2*k-2, "b"), 3, 0, 4*k+3), _t(X.d(2*k-2, "a"), 3, 0, 4*k+3)]),
    ),
    "e-a2=e-a": (
        2,
        lambda k, X, off: ([_t(X.e(2*k+1, "a2"), 1, 0, 2*k+2)], [_t(X.e(2*k, "a"), 2, 0, off)]),
    ),
}


def resolve_offset(ident: str, k: int, X: _Source) -> ReplayReport:
    _, sides = AMBIGUOUS_OFFSETS[ident]
    results = {}
    for label, off in (("2k+2", 2*k+2), ("2k+3", 2*k+3)):
        lhs, rhs = sides(k, X, off)
        results[label] = compare_counts(ident, k, lhs, rhs, X.caps)
    holding = [label for label, r in results.items() if r.ok]
    parts = []
    for label, r in results.items():
        parts.append(f"n-({label}) " + ("holds" if r.ok else f"fails at {r.witness}"))
    note = "; ".join(parts)
    if len(holding) == 1:
        return ReplayReport(ident, k, X.caps, PASS, note=f"offset resolved to n-({holding[0]}): {note}")
    if not holding:
        return ReplayReport(ident, k, X.caps, FAIL, results["2k+3"].witness, note)
    return ReplayReport(ident, k, X.caps, INCONCLUSIVE, note="both offsets hold at these caps; raise N to separate them")


# -- public checks -------------------------------------------------------


def _square_caps(caps):
    caps = tuple(int(c) for c in caps)
    if caps[0] != caps[1]:
        U, V, N = caps
        m = min(U, V)
        raise ValueError(f"swap (a, b) -> (b, aq) needs equal a- and b-caps; rerun with caps ({m}, {m}, {N})")
    return caps


def _run_series(idents, k, X: _Source, source: str) -> list[ReplayReport]:
    out = []
    for ident in idents:
        if k < ident.min_k:
            continue
        lhs, rhs = ident.sides(k, X)
        out.append(compare_series(ident.id, k, lhs, rhs, note=f"source={source}"))
    return out


def _run_counts(idents, k, X: _Source) -> list[ReplayReport]:
    out = []
    for ident in idents:
        if k < ident.min_k:
            continue
        lhs, rhs = ident.sides(k, X)
        out.append(compare_counts(ident.id, k, lhs, rhs, X.caps))
    return out


def verify_initials(caps) -> list[ReplayReport]:
    """The eight starting series against the enumerated d tables."""
    caps = tuple(caps)
    out = []
    for name, s in initial_series(caps).items():
        x = ColoredInt.parse(name)
        oracle = enumerate_dk(x, caps).to_series()
        out.append(compare_series(f"initial:G_{name}", None, s, oracle, note=INITIAL_CONDITIONS[name]))
    return out


def verify_ladder(k_max: ColoredInt, caps) -> list[ReplayReport]:
    """Ladder G_x against enumerate_dk(x) for every x up to k_max."""
    caps = tuple(caps)
    ladder = build_ladder(k_max, caps)
    out = []
    for x, g in ladder.items():
        oracle = enumerate_dk(x, caps).to_series()
        r = ladder.produced_by[rank(x)]
        out.append(compare_series(f"ladder:G_{x}", None, g, oracle, note=f"via {r}"))
    return out


def verify_qdiff(k: int, caps) -> list[ReplayReport]:
    """eq1-eq8 at k with every G taken from the enumerator."""
    return _run_series(QDIFF, k, _Source(caps), "enum")


def verify_eqd(k: int, caps) -> list[ReplayReport]:
    """The d-recurrences and the largest-part splittings, on count tables."""
    return _run_counts(EQD, k, _Source(caps))


def verify_keyprop(k: int, caps, source: str = "ladder", ladder: GLadder | None = None) -> list[ReplayReport]:
    caps = _square_caps(caps)
    if source == "ladder":
        if ladder is None or ColoredInt(2*k+2, Color.ab) not in ladder:
            ladder = build_ladder(ColoredInt(2*k+2, Color.ab), caps)
        X = _Source(caps, ladder)
    elif source == "enum":
        X = _Source(caps)
    else:
        raise ValueError(f"unknown source {source!r}")
    return _run_series(KEYPROP, k, X, source)


def verify_proof_steps(k: int, caps) -> list[ReplayReport]:
    """Every intermediate identity of the induction at k, on enumerated data."""
    caps = _square_caps(caps)
    X = _Source(caps)
    out = _run_series(PROOF_SERIES, k, X, "enum")
    out += _run_counts(PROOF_COUNTS, k, X)
    for ident, (min_k, _) in AMBIGUOUS_OFFSETS.items():
        if k >= min_k:
            out.append(resolve_offset(ident, k, X))
    return out


def verify_product_limit(caps) -> ReplayReport:
    """D(u, v, n) against prod (1 + a q^k)(1 + b q^k), entrywise."""
    caps = tuple(caps)
    D = enumerate_D(caps).to_series()
    P = two_color_product(caps)
    return compare_series("product-limit", None, D, P)
