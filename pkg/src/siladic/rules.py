"""Residue-conditioned gap rules for ordinary partitions and overpartitions.

A rule set says, for a part lambda_i with a given residue mod m and
overline flag, which differences lambda_i - lambda_{i+1} are allowed; the
answer may also depend on whether lambda_{i+1} is overlined.  Each gap
predicate is a finite set of allowed values together with a tail
"at least g".  Rule sets also carry the weight statistic (how a part
contributes to u and v), so every dilated theorem runs through the same
enumerator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import NamedTuple, Sequence


class Part(NamedTuple):
    value: int
    overlined: bool = False

    def __str__(self):
        return f"~{self.value}" if self.overlined else str(self.value)


@dataclass(frozen=True)
class GapRule:
    allowed: frozenset[int] = frozenset()
    at_least: int | None = None

    def ok(self, gap: int) -> bool:
        return gap in self.allowed or (self.at_least is not None and gap >= self.at_least)

    def describe(self) -> str:
        bits = [str(g) for g in sorted(self.allowed)]
        if self.at_least is not None:
            bits.append(f">={self.at_least}")
        return ",".join(bits) or "none"


@dataclass(frozen=True)
class WeightRule:
    modulus: int
    residues: frozenset[int]
    overlined: bool | None  # None matches both
    u: int = 0
    v: int = 0

    def matches(self, part: Part) -> bool:
        if self.overlined is not None and part.overlined != self.overlined:
            return False
        return part.value % self.modulus in self.residues


@dataclass(frozen=True)
class ResidueRuleSet:
    name: str
    modulus: int
    gaps: dict  # (residue, overlined, successor_overlined) -> GapRule
    forbidden: frozenset[Part] = frozenset()
    overlinable: frozenset[int] = frozenset()
    weights: tuple[WeightRule, ...] = ()
    version: int = 1
    description: str = field(default="", compare=False)

    def __post_init__(self):
        missing = [key for key in self.required_keys() if key not in self.gaps]
        if missing:
            shown = ", ".join(f"r={r} over={o} next_over={s}" for r, o, s in missing[:4])
            raise ValueError(f"rule set {self.name!r} is not total over residues; missing {shown}")
        extra = set(self.gaps) - set(self.required_keys())
        if extra:
            raise ValueError(f"rule set {self.name!r} has rules for impossible parts: {sorted(extra)}")

    def required_keys(self):
        succ_flags = (False, True) if self.overlinable else (False,)
        for r in range(self.modulus):
            own = (False, True) if r in self.overlinable else (False,)
            for o in own:
                for s in succ_flags:
                    yield (r, o, s)

    def part_allowed(self, part: Part) -> bool:
        if part.value < 1 or part in self.forbidden:
            return False
        return not part.overlined or part.value % self.modulus in self.overlinable

    def allows(self, larger: Part, smaller: Part) -> bool:
        rule = self.gaps[(larger.value % self.modulus, larger.overlined, smaller.overlined)]
        return rule.ok(larger.value - smaller.value)

    def accepts(self, parts: Sequence[Part]) -> bool:
        parts = [p if isinstance(p, Part) else Part(p) for p in parts]
        if not all(self.part_allowed(p) for p in parts):
            return False
        return all(self.allows(x, y) for x, y in zip(parts, parts[1:]))

    def weight(self, part: Part) -> tuple[int, int]:
        u = v = 0
        for w in self.weights:
            if w.matches(part):
                u += w.u
                v += w.v
        return u, v

    def partition_weight(self, parts: Sequence[Part]) -> tuple[int, int]:
        u = v = 0
        for p in parts:
            du, dv = self.weight(p)
            u += du
            v += dv
        return u, v

    # -- json ---------------------------------------------------------
    @classmethod
    def from_dict(cls, obj: dict) -> "ResidueRuleSet":
        m = int(obj["modulus"])
        overlinable = frozenset(int(r) % m for r in obj.get("overlinable", []))
        gaps = {}
        for entry in obj["gaps"]:
            rule = GapRule(frozenset(entry.get("allowed", [])), entry.get("at_least"))
            residues = entry["residues"] if "residues" in entry else [entry["residue"]]
            own = entry.get("overlined", False)
            own_flags = (False, True) if own is None else (bool(own),)
            succ = entry.get("successor_overlined")
            succ_flags = (False, True) if succ is None else (bool(succ),)
            for r in residues:
                for o in own_flags:
                    if o and r % m not in overlinable:
                        continue
                    for s in succ_flags:
                        if s and not overlinable:
                            continue
                        key = (r % m, o, s)
                        if key in gaps:
                            raise ValueError(f"duplicate gap rule for residue {r} (overlined={o}, successor={s})")
                        gaps[key] = rule
        forbidden = frozenset(Part(int(f["value"]), bool(f.get("overlined", False))) for f in obj.get("forbidden", []))
        weights = tuple(
            WeightRule(int(w["modulus"]), frozenset(w["residues"]), w.get("overlined"), w.get("u", 0), w.get("v", 0))
            for w in obj.get("weights", [])
        )
        return cls(obj["name"], m, gaps, forbidden, overlinable, weights, obj.get("version", 1), obj.get("description", ""))

    def to_dict(self) -> dict:
        gaps = []
        for (r, o, s), rule in sorted(self.gaps.items()):
            entry = {"residue": r, "overlined": o, "successor_overlined": s, "allowed": sorted(rule.allowed)}
            if rule.at_least is not None:
                entry["at_least"] = rule.at_least
            gaps.append(entry)
        return {
            "name": self.name,
            "version": self.version,
            "description": self.description,
            "modulus": self.modulus,
            "overlinable": sorted(self.overlinable),
            "forbidden": [{"value": p.value, "overlined": p.overlined} for p in sorted(self.forbidden)],
            "gaps": gaps,
            "weights": [
                {"modulus": w.modulus, "residues": sorted(w.residues), "overlined": w.overlined, "u": w.u, "v": w.v}
                for w in self.weights
            ],
        }

    @classmethod
    def from_json(cls, text: str) -> "ResidueRuleSet":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def same_conditions(self, other: "ResidueRuleSet", max_gap: int = 64) -> bool:
        """Pointwise comparison of the gap predicates (weights ignored)."""
        if self.forbidden != other.forbidden:
            return False
        m = _lcm(self.modulus, other.modulus)
        for r in range(m):
            for o in (False, True):
                for s in (False, True):
                    a = self.gaps.get((r % self.modulus, o, s))
                    b = other.gaps.get((r % other.modulus, o, s))
                    if a is None or b is None:
                        if (a is None) != (b is None):
                            return False
                        continue
                    if any(a.ok(g) != b.ok(g) for g in range(1, max_gap + 1)):
                        return False
        return True


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def load_rules(name: str) -> ResidueRuleSet:
    """Load one of the shipped rule sets (refdilat, comp, newschur)."""
    path = resources.files("siladic") / "data" / "rules" / f"{name}.json"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise KeyError(f"no shipped rule set named {name!r}") from None
    return ResidueRuleSet.from_json(text)


# Siladic's original conditions constrain lambda_i + lambda_{i+1} mod 16 for
# gaps 5..8; since the sum equals 2*lambda_i - gap, they reduce to a rule on
# lambda_i mod 8.
SILADIC_SUM_EXCLUSIONS = {
    5: (1, 5, 7),
    6: (2, 6),
    7: (3,),
    8: (4,),
}


def siladic_rules() -> ResidueRuleSet:
    """Siladic's theorem: parts != 2, gaps >= 5, pair-sum exclusions mod 16."""
    gaps = {}
    for r in range(8):
        allowed = set()
        for g, excl in SILADIC_SUM_EXCLUSIONS.items():
            bad = {e % 16 for e in excl} | {-e % 16 for e in excl}
            # 2*lambda mod 16 is determined by lambda mod 8
            if (2 * r - g) % 16 not in bad:
                allowed.add(g)
        gaps[(r, False, False)] = GapRule(frozenset(allowed), 9)
    return ResidueRuleSet(
        "siladic",
        8,
        gaps,
        forbidden=frozenset({Part(2)}),
        description="parts different from 2, gaps at least 5, pair-sum exclusions mod 16",
    )
