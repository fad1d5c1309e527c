"""Brute-force counting of colored partitions, residue-rule partitions and
the classical reference identities.

Every count here comes straight from the combinatorial definitions: the
gap matrix for colored partitions, a rule set for the dilated theorems,
and explicit part lists for the product sides.  Nothing is derived from
generating-function identities, so these tables can serve as oracles for
the recurrence engine.

Counting is a memoized depth-first search: the state is the previous part
together with the remaining sum.  For each remaining sum r we sweep the
candidate next parts by value and hand each previous part the running
total at its threshold, which keeps the work polynomial.  The plain
generators (``iter_colored_partitions``, ``iter_rule_partitions``) walk the
same search tree one partition at a time; the tests check that both give
identical tables.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterator, Sequence

from .colored import (
    COLORS,
    FORBIDDEN_PARTS,
    Color,
    ColoredInt,
    can_follow,
    colored_ints,
    min_gap,
    rank,
)
from .qseries import CountTable
from .rules import Part, ResidueRuleSet


def _caps(caps) -> tuple[int, int, int]:
    if isinstance(caps, int):
        return (caps, caps, caps)
    U, V, N = caps
    return (int(U), int(V), int(N))


def _add_into(acc: dict, src: dict, offset: int):
    for k, c in src.items():
        k += offset
        acc[k] = acc.get(k, 0) + c


# -- colored partitions --------------------------------------------------


class _ColoredSearch:
    """Memo tables for all admissible colored partitions of size <= N.

    ``cont[x][r]`` maps an encoded weight u*W + v to the number of ways to
    continue a partition whose current smallest part is x with further
    parts summing to exactly r.
    """

    def __init__(self, N: int):
        self.N = N
        self.W = W = 2 * N + 2
        self.parts = [x for x in colored_ints(N) if x not in FORBIDDEN_PARTS]
        self.index = {x: i for i, x in enumerate(self.parts)}
        self.wkey = {x: x.color.weight[0] * W + x.color.weight[1] for x in self.parts}
        by_color = {c: sorted((x for x in self.parts if x.color is c), key=lambda x: x.value) for c in COLORS}
        thresholds = {
            c: sorted((x.value - min_gap(x.color, x.parity, c), i) for i, x in enumerate(self.parts))
            for c in COLORS
        }
        cont = [[None] * (N + 1) for _ in self.parts]
        for r in range(N + 1):
            acc = [dict() for _ in self.parts]
            for c in COLORS:
                items = [y for y in by_color[c] if y.value <= r]
                running: dict[int, int] = {}
                i = 0
                for t, xi in thresholds[c]:
                    if t < 1:
                        continue
                    while i < len(items) and items[i].value <= t:
                        y = items[i]
                        _add_into(running, cont[self.index[y]][r - y.value], self.wkey[y])
                        i += 1
                    if running:
                        _add_into(acc[xi], running, 0)
            for xi in range(len(self.parts)):
                if r == 0:
                    acc[xi][0] = acc[xi].get(0, 0) + 1
                cont[xi][r] = acc[xi]
        self.cont = cont

    def largest_equal(self, x: ColoredInt) -> dict[tuple[int, int, int], int]:
        """Counts of admissible partitions whose largest part is exactly x."""
        i = self.index.get(x)
        if i is None:
            return {}
        out = {}
        W = self.W
        for n in range(x.value, self.N + 1):
            for k, c in self.cont[i][n - x.value].items():
                k += self.wkey[x]
                out[(k // W, k % W, n)] = c
        return out


@lru_cache(maxsize=8)
def _colored_search(N: int) -> _ColoredSearch:
    return _ColoredSearch(N)


@lru_cache(maxsize=4096)
def _e_entries(x: ColoredInt, N: int) -> tuple:
    return tuple(sorted(_colored_search(N).largest_equal(x).items()))


def enumerate_ek(k: ColoredInt, caps) -> CountTable:
    """e_k(u, v, n): admissible partitions with largest part exactly k."""
    caps = _caps(caps)
    if k in FORBIDDEN_PARTS or k.value > caps[2]:
        return CountTable(caps, {})
    return CountTable(caps, dict(_e_entries(k, caps[2])))


def enumerate_dk(k: ColoredInt, caps) -> CountTable:
    """d_k(u, v, n): admissible partitions with largest part at most k (by rank)."""
    caps = _caps(caps)
    N = caps[2]
    search = _colored_search(N)
    top = rank(k)
    acc: dict = defaultdict(int)
    acc[(0, 0, 0)] = 1
    for x in search.parts:
        if rank(x) <= top:
            for key, c in _e_entries(x, N):
                acc[key] += c
    return CountTable(caps, acc)


def enumerate_D(caps) -> CountTable:
    """D(u, v, n) for all n <= N."""
    caps = _caps(caps)
    N = caps[2]
    return enumerate_dk(ColoredInt(N + 1, Color.b), caps)


def iter_colored_partitions(n_max: int, top: ColoredInt | None = None) -> Iterator[tuple[ColoredInt, ...]]:
    """Every admissible colored partition of size <= n_max, empty one first.

    Parts are generated in decreasing rank with gap-matrix pruning; with
    ``top`` the largest part is restricted to rank <= rank(top).
    """
    parts = sorted((x for x in colored_ints(n_max) if x not in FORBIDDEN_PARTS), key=rank, reverse=True)
    if top is not None:
        parts = [x for x in parts if rank(x) <= rank(top)]

    def rec(prefix, remaining, candidates):
        yield prefix
        last = prefix[-1] if prefix else None
        for y in candidates:
            if y.value > remaining:
                continue
            if last is not None and not (rank(y) < rank(last) and can_follow(last, y)):
                continue
            yield from rec(prefix + (y,), remaining - y.value, candidates)

    yield from rec((), n_max, parts)


def count_colored_bruteforce(caps, top: ColoredInt | None = None, exact_top: bool = False) -> CountTable:
    from .colored import weights

    caps = _caps(caps)
    acc: dict = defaultdict(int)
    for p in iter_colored_partitions(caps[2], top):
        if exact_top and (not p or p[0] != top):
            continue
        u, v = weights(p)
        acc[(u, v, sum(x.value for x in p))] += 1
    return CountTable(caps, acc)


# -- residue rule partitions ----------------------------------------------


class _RuleSearch:
    def __init__(self, rules: ResidueRuleSet, N: int):
        self.rules = rules
        self.N = N
        self.W = W = 4 * N + 2
        flags = (False, True) if rules.overlinable else (False,)
        self.parts = [Part(v, o) for v in range(1, N + 1) for o in flags if rules.part_allowed(Part(v, o))]
        self.index = {p: i for i, p in enumerate(self.parts)}
        wk = []
        for p in self.parts:
            du, dv = rules.weight(p)
            if du < 0 or dv < 0 or du > 2 or dv > 2:
                raise ValueError(f"weight of part {p} must lie in 0..2, got {(du, dv)}")
            wk.append(du * W + dv)
        self.wkey = wk
        by_flag = {s: [p for p in self.parts if p.overlined == s] for s in flags}
        # tail thresholds and finite extras per (part, successor flag)
        tails = {s: [] for s in flags}
        extras = [[] for _ in self.parts]
        for i, p in enumerate(self.parts):
            for s in flags:
                rule = rules.gaps[(p.value % rules.modulus, p.overlined, s)]
                if rule.at_least is not None and p.value - rule.at_least >= 1:
                    tails[s].append((p.value - rule.at_least, i))
                for g in rule.allowed:
                    if rule.at_least is not None and g >= rule.at_least:
                        continue
                    q = Part(p.value - g, s)
                    if q in self.index:
                        extras[i].append(self.index[q])
        for s in flags:
            tails[s].sort()
        cont = [[None] * (N + 1) for _ in self.parts]
        for r in range(N + 1):
            acc = [dict() for _ in self.parts]
            for s in flags:
                items = [self.index[q] for q in by_flag[s] if q.value <= r]
                running: dict[int, int] = {}
                j = 0
                for t, i in tails[s]:
                    while j < len(items) and self.parts[items[j]].value <= t:
                        qi = items[j]
                        _add_into(running, cont[qi][r - self.parts[qi].value], wk[qi])
                        j += 1
                    if running:
                        _add_into(acc[i], running, 0)
            for i in range(len(self.parts)):
                for qi in extras[i]:
                    qv = self.parts[qi].value
                    if qv <= r:
                        _add_into(acc[i], cont[qi][r - qv], wk[qi])
                if r == 0:
                    acc[i][0] = acc[i].get(0, 0) + 1
                cont[i][r] = acc[i]
        self.cont = cont

    def table(self) -> dict:
        W = self.W
        out: dict = defaultdict(int)
        out[(0, 0, 0)] = 1
        for i, p in enumerate(self.parts):
            for n in range(p.value, self.N + 1):
                for k, c in self.cont[i][n - p.value].items():
                    k += self.wkey[i]
                    out[(k // W, k % W, n)] += c
        return out


def enumerate_residue_rule(rules: ResidueRuleSet, caps) -> CountTable:
    """Counts of (over)partitions obeying ``rules``, weighted by its weight rules."""
    caps = _caps(caps)
    return CountTable(caps, _RuleSearch(rules, caps[2]).table())


def iter_rule_partitions(rules: ResidueRuleSet, n_max: int) -> Iterator[tuple[Part, ...]]:
    flags = (False, True) if rules.overlinable else (False,)
    parts = [Part(v, o) for v in range(n_max, 0, -1) for o in flags if rules.part_allowed(Part(v, o))]

    def rec(prefix, remaining):
        yield prefix
        last = prefix[-1] if prefix else None
        for q in parts:
            if q.value > remaining:
                continue
            if last is not None and not (q.value < last.value and rules.allows(last, q)):
                continue
            yield from rec(prefix + (q,), remaining - q.value)

    yield from rec((), n_max)


def count_rule_bruteforce(rules: ResidueRuleSet, caps) -> CountTable:
    caps = _caps(caps)
    acc: dict = defaultdict(int)
    for p in iter_rule_partitions(rules, caps[2]):
        u, v = rules.partition_weight(p)
        acc[(u, v, sum(q.value for q in p))] += 1
    return CountTable(caps, acc)


# -- distinct parts in residue classes ------------------------------------


def enumerate_two_residue_distinct(m: int, r_a: int, r_b: int, caps) -> CountTable:
    """C(u, v, n): u distinct parts = r_a (mod m) and v distinct parts = r_b (mod m).

    A value in both classes may be used once as an a-part and once as a
    b-part.
    """
    if not (0 <= r_a < m and 0 <= r_b < m):
        raise ValueError("residues must lie in [0, m)")
    U, V, N = caps = _caps(caps)
    # subset-sum over the candidate parts, one 0/1 choice per candidate
    table: dict = {(0, 0, 0): 1}
    candidates = [(p, 1, 0) for p in range(1, N + 1) if p % m == r_a]
    candidates += [(p, 0, 1) for p in range(1, N + 1) if p % m == r_b]
    for p, du, dv in candidates:
        for (u, v, n), c in list(table.items()):
            if n + p <= N and u + du <= U and v + dv <= V:
                key = (u + du, v + dv, n + p)
                table[key] = table.get(key, 0) + c
        # the list() snapshot above keeps each candidate used at most once
    return CountTable(caps, table)


def iter_two_residue_distinct(m: int, r_a: int, r_b: int, n_max: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    a_parts = [p for p in range(1, n_max + 1) if p % m == r_a]
    b_parts = [p for p in range(1, n_max + 1) if p % m == r_b]

    def subsets(pool, budget, start=0):
        yield ()
        for i in range(start, len(pool)):
            p = pool[i]
            if p > budget:
                break
            for rest in subsets(pool, budget - p, i + 1):
                yield (p,) + rest

    for sa in subsets(a_parts, n_max):
        for sb in subsets(b_parts, n_max - sum(sa)):
            yield sa, sb


def enumerate_distinct_odd(caps) -> CountTable:
    """Partitions into distinct odd parts, indexed (number of parts, 0, n)."""
    U, V, N = caps = _caps(caps)
    table: dict = {(0, 0, 0): 1}
    for p in range(1, N + 1, 2):
        for (k, _, n), c in list(table.items()):
            if n + p <= N and k + 1 <= U:
                key = (k + 1, 0, n + p)
                table[key] = table.get(key, 0) + c
    return CountTable(caps, table)


# -- classical identities --------------------------------------------------


def count_chains(n_max: int, parts: Sequence[int], ok, repeat: bool = False) -> list[int]:
    """Number of partitions of each n <= n_max into ``parts``.

    Parts are listed in non-increasing order; ``ok(larger, smaller)`` must
    hold for consecutive parts.  With ``repeat`` equal consecutive parts are
    offered to ``ok`` as well.
    """
    parts = sorted(set(parts), reverse=True)

    @lru_cache(maxsize=None)
    def ways(last: int, remaining: int) -> int:
        total = 1 if remaining == 0 else 0
        for p in parts:
            if p > remaining:
                continue
            if p > last or (p == last and not repeat):
                continue
            if ok(last, p):
                total += ways(p, remaining - p)
        return total

    out = []
    for n in range(n_max + 1):
        if n == 0:
            out.append(1)
            continue
        total = 0
        for p in parts:
            if p <= n:
                total += ways(p, n - p)
        out.append(total)
    ways.cache_clear()
    return out


def enumerate_rr(a_param: int, n_max: int) -> tuple[list[int], list[int]]:
    """Both sides of the Rogers-Ramanujan identities as counts for n <= n_max.

    Difference side: consecutive parts differ by at least 2 and the part 1
    appears at most 1 - a times.  Congruence side: parts = +-(1 + a) mod 5.
    """
    if a_param not in (0, 1):
        raise ValueError("a must be 0 or 1")
    smallest = 1 + a_param
    diff_side = count_chains(n_max, range(smallest, n_max + 1), lambda x, y: x - y >= 2)
    residues = {(1 + a_param) % 5, (-(1 + a_param)) % 5}
    cong_side = count_chains(n_max, [p for p in range(1, n_max + 1) if p % 5 in residues], lambda x, y: True, repeat=True)
    return diff_side, cong_side


def enumerate_schur(n_max: int) -> tuple[list[int], list[int]]:
    """Schur's theorem: A(n) distinct parts = 1, 2 mod 3; B(n) gaps >= 3, no two
    consecutive multiples of 3."""
    a_side = count_chains(n_max, [p for p in range(1, n_max + 1) if p % 3], lambda x, y: x > y)

    def b_ok(x, y):
        d = x - y
        if d < 3:
            return False
        return not (d == 3 and x % 3 == 0)

    b_side = count_chains(n_max, range(1, n_max + 1), b_ok)
    return a_side, b_side
