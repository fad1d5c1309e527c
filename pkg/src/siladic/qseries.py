"""Truncated formal series in a, b, q with exact integer coefficients.

A :class:`TriSeries` keeps every monomial a^u b^v q^n with u <= U, v <= V
and n <= N, where (U, V, N) are its caps.  Alongside the caps it carries a
completeness horizon: the largest q-exponent up to which every retained
coefficient is known to be exact.  Products and monomial shifts keep the
horizon of their inputs; substitutions that lower q-exponents (dilations)
can shrink it, and comparisons beyond it are refused.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

Key = tuple[int, int, int]
Caps = tuple[int, int, int]


def _check_caps(caps) -> Caps:
    caps = tuple(int(c) for c in caps)
    if len(caps) != 3 or min(caps) < 0:
        raise ValueError(f"caps must be three non-negative integers, got {caps!r}")
    return caps


class TriSeries:
    """Immutable truncated series; see module docstring."""

    __slots__ = ("caps", "_terms", "horizon")

    def __init__(self, caps, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = (), horizon: int | None = None):
        caps = _check_caps(caps)
        U, V, N = caps
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, int] = defaultdict(int)
        for (u, v, n), c in items:
            if u < 0 or v < 0 or n < 0:
                raise ValueError(f"negative exponent in monomial a^{u} b^{v} q^{n}")
            if u <= U and v <= V and n <= N:
                acc[(u, v, n)] += int(c)
        self.caps = caps
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self.horizon = N if horizon is None else min(int(horizon), N)

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, caps) -> "TriSeries":
        return cls(caps)

    @classmethod
    def one(cls, caps) -> "TriSeries":
        return cls(caps, {(0, 0, 0): 1})

    @classmethod
    def monomial(cls, caps, u: int, v: int, n: int, coeff: int = 1) -> "TriSeries":
        return cls(caps, {(u, v, n): coeff})

    @classmethod
    def parse_poly(cls, caps, text: str) -> "TriSeries":
        """Read a sum like ``1 + a*q + 2*a^2*b*q^3 - b*q``."""
        terms: dict[Key, int] = defaultdict(int)
        text = text.replace(" ", "").replace("-", "+-")
        for chunk in text.split("+"):
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            coeff, exps = 1, {"a": 0, "b": 0, "q": 0}
            for factor in chunk.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                base, _, power = factor.partition("^")
                if base not in exps:
                    raise ValueError(f"unknown factor {factor!r} in {text!r}")
                exps[base] += int(power) if power else 1
            terms[(exps["a"], exps["b"], exps["q"])] += sign * coeff
        return cls(caps, terms)

    # -- access -------------------------------------------------------
    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def coeff(self, u: int, v: int, n: int) -> int:
        U, V, N = self.caps
        if not (0 <= u <= U and 0 <= v <= V and 0 <= n <= N):
            raise ValueError(f"exponent ({u}, {v}, {n}) outside caps {self.caps}")
        return self._terms.get((u, v, n), 0)

    def q_coeff(self, n: int) -> dict[tuple[int, int], int]:
        return {(u, v): c for (u, v, m), c in self._terms.items() if m == n}

    def at_ab_one(self) -> list[int]:
        """Coefficients of q^0..q^N after setting a = b = 1."""
        out = [0] * (self.caps[2] + 1)
        for (_, _, n), c in self._terms.items():
            out[n] += c
        return out

    # -- arithmetic ---------------------------------------------------
    def _same_caps(self, other: "TriSeries"):
        if not isinstance(other, TriSeries):
            raise TypeError(f"expected TriSeries, got {type(other).__name__}")
        if other.caps != self.caps:
            raise ValueError(f"cap mismatch: {self.caps} vs {other.caps}")

    def __add__(self, other):
        if isinstance(other, int):
            other = TriSeries.monomial(self.caps, 0, 0, 0, other)
        self._same_caps(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return TriSeries(self.caps, acc, min(self.horizon, other.horizon))

    __radd__ = __add__

    def __neg__(self):
        return TriSeries(self.caps, {k: -c for k, c in self._terms.items()}, self.horizon)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TriSeries(self.caps, {k: c * other for k, c in self._terms.items()}, self.horizon)
        self._same_caps(other)
        U, V, N = self.caps
        acc: dict[Key, int] = defaultdict(int)
        # bucket the right factor by q-exponent so the inner loop stops early
        right = sorted(other._terms.items(), key=lambda kv: kv[0][2])
        for (u1, v1, n1), c1 in self._terms.items():
            room = N - n1
            for (u2, v2, n2), c2 in right:
                if n2 > room:
                    break
                u, v = u1 + u2, v1 + v2
                if u <= U and v <= V:
                    acc[(u, v, n1 + n2)] += c1 * c2
        return TriSeries(self.caps, acc, min(self.horizon, other.horizon))

    __rmul__ = __mul__

    def shift(self, du: int, dv: int, dn: int, coeff: int = 1) -> "TriSeries":
        """Multiply by the monomial coeff * a^du b^dv q^dn."""
        if min(du, dv, dn) < 0:
            raise ValueError("shift exponents must be non-negative")
        terms = {(u + du, v + dv, n + dn): c * coeff for (u, v, n), c in self._terms.items()}
        return TriSeries(self.caps, terms, self.horizon + dn)

    def __eq__(self, other):
        if not isinstance(other, TriSeries):
            return NotImplemented
        return self.caps == other.caps and self._terms == other._terms

    def __hash__(self):
        return hash((self.caps, tuple(self._terms.items())))

    def eq_up_to(self, other: "TriSeries", n_max: int) -> bool:
        return first_difference(self, other, n_max) is None

    # -- substitutions ------------------------------------------------
    def swap_sub(self) -> "TriSeries":
        """Substitute (a, b) -> (b, a q).

        a^u b^v q^n becomes a^v b^u q^(n+v).  With U != V the result is
        given square caps min(U, V) so that every retained coefficient has
        all of its sources inside the input caps.
        """
        U, V, N = self.caps
        m = min(U, V)
        terms = {(v, u, n + v): c for (u, v, n), c in self._terms.items()}
        return TriSeries((m, m, N), terms, self.horizon)

    def dilate(self, spec: "DilationSpec", horizon: int | None = None) -> "TriSeries":
        """Substitute q -> q^M, a -> a q^-m_a, b -> b q^-m_b.

        Without ``horizon`` the result's completeness horizon is the generic
        bound M*H - m_a*U - m_b*V, which may be empty.  A caller that knows
        more about the series (for example that every part's image is at
        least its preimage) may pass the horizon it has established.
        """
        U, V, N = self.caps
        terms = {}
        for (u, v, n), c in self._terms.items():
            m = spec.M * n - spec.m_a * u - spec.m_b * v
            if m < 0:
                raise ValueError(f"dilation {spec} sends a^{u} b^{v} q^{n} to a negative q-exponent {m}")
            terms[(u, v, m)] = terms.get((u, v, m), 0) + c
        if horizon is None:
            horizon = spec.M * self.horizon - spec.m_a * U - spec.m_b * V
        return TriSeries(self.caps, terms, max(-1, horizon))

    def truncate(self, n_max: int) -> "TriSeries":
        U, V, _ = self.caps
        return TriSeries((U, V, n_max), self._terms, min(self.horizon, n_max))

    # -- io -----------------------------------------------------------
    def to_lines(self) -> str:
        return "".join(f"{u} {v} {n} {c}\n" for (u, v, n), c in self._terms.items())

    @classmethod
    def from_lines(cls, caps, text: str) -> "TriSeries":
        terms = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v, n, c = (int(t) for t in line.split())
            terms[(u, v, n)] = c
        return cls(caps, terms)

    def to_json(self) -> str:
        return json.dumps({
            "caps": list(self.caps),
            "horizon": self.horizon,
            "terms": [[u, v, n, c] for (u, v, n), c in self._terms.items()],
        })

    @classmethod
    def from_json(cls, text: str) -> "TriSeries":
        obj = json.loads(text)
        return cls(obj["caps"], {(u, v, n): c for u, v, n, c in obj["terms"]}, obj.get("horizon"))

    def to_poly(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (u, v, n), c in sorted(self._terms.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1])):
            factors = [f"{name}^{e}" if e > 1 else name for name, e in (("a", u), ("b", v), ("q", n)) if e]
            mono = "*".join(factors)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        poly = self.to_poly()
        if len(poly) > 120:
            poly = poly[:117] + "..."
        return f"TriSeries(caps={self.caps}, horizon={self.horizon}, {poly})"


def first_difference(s: TriSeries, t: TriSeries, n_max: int) -> Key | None:
    """Smallest (n, u, v)-ordered monomial below n_max where s and t differ.

    Raises if n_max lies beyond either completeness horizon, so that a
    truncated comparison can never pass vacuously.
    """
    if s.caps[:2] != t.caps[:2]:
        raise ValueError(f"cap mismatch: {s.caps} vs {t.caps}")
    limit = min(s.horizon, t.horizon)
    if n_max > limit:
        raise ValueError(f"cannot compare to q^{n_max}: completeness horizon is q^{limit}")
    keys = {k for k in s._terms if k[2] <= n_max} | {k for k in t._terms if k[2] <= n_max}
    bad = [k for k in keys if s._terms.get(k, 0) != t._terms.get(k, 0)]
    if not bad:
        return None
    return min(bad, key=lambda k: (k[2], k[0], k[1]))


@dataclass(frozen=True)
class DilationSpec:
    """q -> q^M, a -> a q^-m_a, b -> b q^-m_b."""

    M: int
    m_a: int
    m_b: int

    def __post_init__(self):
        if self.M < 1 or self.m_a < 0 or self.m_b < 0:
            raise ValueError(f"invalid dilation ({self.M}, {self.m_a}, {self.m_b})")

    @classmethod
    def parse(cls, text: str) -> "DilationSpec":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"dilation must look like 'M,m_a,m_b', got {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self):
        return f"{self.M},{self.m_a},{self.m_b}"


def distinct_parts_product(caps, a_parts: Iterable[int], b_parts: Iterable[int]) -> TriSeries:
    """prod over p in a_parts of (1 + a q^p) times prod over b_parts of (1 + b q^p).

    Factors whose q-exponent exceeds N contribute only their constant term.
    """
    U, V, N = caps
    # fold factors in place on a dense dict; each factor is 1 + x q^p
    acc: dict[Key, int] = {(0, 0, 0): 1}
    factors = [(p, 1, 0) for p in a_parts] + [(p, 0, 1) for p in b_parts]
    for p, du, dv in sorted(factors):
        if p > N or p < 0:
            continue
        new = dict(acc)
        for (u, v, n), c in acc.items():
            k = (u + du, v + dv, n + p)
            if k[0] <= U and k[1] <= V and k[2] <= N:
                new[k] = new.get(k, 0) + c
        acc = new
    return TriSeries(caps, acc)


def two_color_product(caps) -> TriSeries:
    """prod_{k>=1} (1 + a q^k)(1 + b q^k), truncated to caps."""
    N = caps[2]
    ks = range(1, N + 1)
    return distinct_parts_product(caps, ks, ks)


def schur_product(caps) -> TriSeries:
    """prod_{k>=0} (1 + a q^(3k+1))(1 + b q^(3k+2)), truncated to caps."""
    N = caps[2]
    return distinct_parts_product(caps, range(1, N + 1, 3), range(2, N + 1, 3))


@dataclass(frozen=True)
class CountTable:
    """Exact non-negative counts indexed by (u, v, n) within caps."""

    caps: Caps
    entries: Mapping[Key, int]

    def __post_init__(self):
        caps = _check_caps(self.caps)
        U, V, N = caps
        clean = {}
        for (u, v, n), c in self.entries.items():
            if c < 0:
                raise ValueError(f"negative count {c} at {(u, v, n)}")
            if c and u <= U and v <= V and n <= N:
                clean[(u, v, n)] = int(c)
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "entries", {k: clean[k] for k in sorted(clean)})

    def __getitem__(self, key: Key) -> int:
        return self.entries.get(tuple(key), 0)

    def at(self, u: int, v: int, n: int) -> int:
        """Count at (u, v, n); zero for negative arguments."""
        if u < 0 or v < 0 or n < 0:
            return 0
        return self.entries.get((u, v, n), 0)

    def total(self, n: int) -> int:
        return sum(c for (_, _, m), c in self.entries.items() if m == n)

    def totals(self) -> list[int]:
        out = [0] * (self.caps[2] + 1)
        for (_, _, n), c in self.entries.items():
            out[n] += c
        return out

    def by_k(self) -> dict[tuple[int, int], int]:
        """Aggregate to (k, n) with k = u + v."""
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (u, v, n), c in self.entries.items():
            out[(u + v, n)] += c
        return dict(sorted(out.items()))

    def to_series(self) -> TriSeries:
        return TriSeries(self.caps, self.entries)

    @classmethod
    def from_series(cls, s: TriSeries) -> "CountTable":
        return cls(s.caps, s.terms)

    def to_lines(self) -> str:
        return "".join(f"{u} {v} {n} {c}\n" for (u, v, n), c in self.entries.items())

    def to_csv(self) -> str:
        return "u,v,n,count\n" + "".join(f"{u},{v},{n},{c}\n" for (u, v, n), c in self.entries.items())

    def to_json(self) -> str:
        return json.dumps({"caps": list(self.caps), "terms": [[u, v, n, c] for (u, v, n), c in self.entries.items()]})

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        obj = json.loads(text)
        return cls(tuple(obj["caps"]), {(u, v, n): c for u, v, n, c in obj["terms"]})

    @classmethod
    def from_lines(cls, caps, text: str) -> "CountTable":
        entries = {}
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                u, v, n, c = (int(t) for t in line.split())
                entries[(u, v, n)] = c
        return cls(tuple(caps), entries)
