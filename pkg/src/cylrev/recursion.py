"""Collections of positions and the linear recurrence they induce.

A collection ``(x1, ..., xr)`` with shifts ``s_l = x_l - x1`` defines the
recurrence ``T(i) = sum_{l>=2} T(i - s_l) (mod 2)`` of order ``delta = s_r``.
Every window of ``delta`` consecutive symbols determines the next one, so
the recurrence is a linear map on ``delta``-bit windows (the companion
map).  Because the oldest tap ``s_r = delta`` always contributes, that map
is invertible and every orbit is purely periodic.

Windows are packed into integers with bit ``i`` holding ``T(t + i)``.
Words are plain ``str`` objects over ``"01"``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, PreconditionError

#: largest span enumerated by seed-by-seed orbit decomposition
DEFAULT_DELTA_CAP = 15

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_RUN = re.compile(r"([01])(?:\^(\d+)|([⁰¹²³⁴⁵⁶⁷⁸⁹]+))?")


# ---------- words

def parse_word(text: str) -> str:
    """Parse a 01-word, optionally in run-length form.

    ``"0^4 1 0^2 111"`` and ``"0⁴10²111"`` both expand to ``"0000100111"``.
    Whitespace only separates tokens.
    """
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        mo = _RUN.match(text, pos)
        if mo is None:
            raise ValueError(f"bad word syntax at {pos}: {text!r}")
        exponent = mo.group(2) or (mo.group(3) or "").translate(_SUPERSCRIPTS)
        out.append(mo.group(1) * int(exponent or 1))
        pos = mo.end()
    return "".join(out)


def format_word(word: str, run_length: bool = False) -> str:
    """Render a word; ``run_length`` groups runs longer than 3 as ``a^k``."""
    if not run_length:
        return word
    parts = []
    for mo in re.finditer(r"0+|1+", word):
        run = mo.group(0)
        parts.append(run if len(run) <= 3 else f"{run[0]}^{len(run)}")
    return " ".join(parts)


def constituent(m: int, g: int) -> str:
    """The word ``0^(m-1) 1 0^(g-m)``; ``m`` counts from 1."""
    if not 1 <= m <= g:
        raise PreconditionError(f"need 1 <= m <= g, got m={m}, g={g}")
    return "0" * (m - 1) + "1" + "0" * (g - m)


def add_words(w: str, v: str) -> str:
    if len(w) != len(v):
        raise PreconditionError("words must have equal length")
    return "".join("1" if a != b else "0" for a, b in zip(w, v))


def is_primitive(word: str) -> bool:
    """True when ``word`` is not a proper power of a shorter word."""
    return bool(word) and (word + word).find(word, 1) == len(word)


def minimal_period(word: str) -> int:
    """Length of the shortest word whose powers give ``word`` (cyclically)."""
    return (word + word).find(word, 1)


# ---------- collections

@dataclass(frozen=True)
class ShiftCollection:
    shifts: tuple[int, ...]

    def __post_init__(self):
        s = self.shifts
        if any(a <= 0 for a in s) or any(a >= b for a, b in zip(s, s[1:])):
            raise PreconditionError(f"shifts must be increasing positive integers: {s}")

    @property
    def delta(self) -> int:
        return self.shifts[-1] if self.shifts else 0


@dataclass(frozen=True)
class PositionCollection:
    """Strictly increasing non-negative unit positions ``x1 < ... < xr``."""

    positions: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.positions)
        object.__setattr__(self, "positions", p)
        if not p:
            raise PreconditionError("a collection needs at least one position")
        if p[0] < 0:
            raise PreconditionError(f"negative position in {p}")
        if any(a >= b for a, b in zip(p, p[1:])):
            raise PreconditionError(f"positions must be strictly increasing: {p}")

    @classmethod
    def of(cls, *positions: int) -> "PositionCollection":
        return cls(tuple(positions))

    @classmethod
    def parse(cls, text: str) -> "PositionCollection":
        """Parse ``"1,2,4"`` (commas and/or spaces)."""
        items = [t for t in re.split(r"[,\s]+", text.strip()) if t]
        try:
            values = tuple(int(t) for t in items)
        except ValueError as exc:
            raise PreconditionError(f"bad position list {text!r}") from exc
        return cls(values)

    @classmethod
    def from_rule(cls, rule: str) -> "PositionCollection":
        """Unit positions of a rule word, position 0 leftmost."""
        if not rule or any(c not in "01" for c in rule):
            raise PreconditionError(f"not a 01-word: {rule!r}")
        return cls(tuple(i for i, c in enumerate(rule) if c == "1"))

    @property
    def r(self) -> int:
        return len(self.positions)

    @property
    def delta(self) -> int:
        return self.positions[-1] - self.positions[0]

    @property
    def first(self) -> int:
        return self.positions[0]

    @property
    def last(self) -> int:
        return self.positions[-1]

    def __iter__(self):
        return iter(self.positions)

    def __len__(self) -> int:
        return len(self.positions)

    def __str__(self) -> str:
        return ",".join(map(str, self.positions))


def as_collection(c) -> PositionCollection:
    if isinstance(c, PositionCollection):
        return c
    return PositionCollection(tuple(c))


def derive(c: PositionCollection) -> ShiftCollection:
    """Derivative collection ``(x2 - x1, ..., xr - x1)``."""
    c = as_collection(c)
    return ShiftCollection(tuple(x - c.first for x in c.positions[1:]))


@dataclass(frozen=True)
class Constituent:
    m: int
    g: int

    def __post_init__(self):
        if not 1 <= self.m <= self.g:
            raise PreconditionError(f"need 1 <= m <= g, got {self.m}, {self.g}")

    @property
    def word(self) -> str:
        return constituent(self.m, self.g)


@dataclass(frozen=True)
class OrbitResult:
    preperiod_len: int
    period_len: int
    period_word: str


# ---------- the recurrence

def _require_shifts(c: PositionCollection) -> ShiftCollection:
    d = derive(c)
    if not d.shifts:
        raise PreconditionError("the recurrence needs at least two positions")
    return d


def apply_operator(c, m: int, w: str) -> str:
    """Extend ``w`` by ``m`` symbols of the recurrence of ``c``."""
    c = as_collection(c)
    shifts = _require_shifts(c).shifts
    if m < 0:
        raise PreconditionError("m must be non-negative")
    if len(w) < shifts[-1]:
        raise PreconditionError(f"word length {len(w)} is shorter than delta={shifts[-1]}")
    t = [1 if ch == "1" else 0 for ch in w]
    for i in range(len(w), len(w) + m):
        b = 0
        for s in shifts:
            b ^= t[i - s]
        t.append(b)
    return "".join("1" if b else "0" for b in t)


def operator_linearity_check(c, m: int, w: str, v: str) -> bool:
    """Whether ``C[m]{W + V} == C[m]{W} + C[m]{V}``."""
    lhs = apply_operator(c, m, add_words(w, v))
    rhs = add_words(apply_operator(c, m, w), apply_operator(c, m, v))
    return lhs == rhs


def tap_mask(shifts: Sequence[int]) -> int:
    """Window bits read by the next symbol: bit ``delta - s`` per shift."""
    delta = shifts[-1]
    mask = 0
    for s in shifts:
        mask |= 1 << (delta - s)
    return mask


def _word_to_window(word: str) -> int:
    v = 0
    for i, ch in enumerate(word):
        if ch == "1":
            v |= 1 << i
    return v


def _window_to_word(v: int, delta: int) -> str:
    return "".join("1" if v >> i & 1 else "0" for i in range(delta))


def companion_step(c, state: str) -> str:
    """Slide a ``delta``-window one symbol forward."""
    c = as_collection(c)
    shifts = _require_shifts(c).shifts
    delta = shifts[-1]
    if len(state) != delta:
        raise PreconditionError(f"state must have length delta={delta}")
    v = _word_to_window(state)
    b = (v & tap_mask(shifts)).bit_count() & 1
    return _window_to_word((v >> 1) | (b << (delta - 1)), delta)


def companion_step_inverse(c, state: str) -> str:
    """Slide a ``delta``-window one symbol backward.

    From ``T(t+delta) = T(t) + sum_{l<r} T(t+delta-s_l)`` the dropped
    symbol is recovered from the newer window.
    """
    c = as_collection(c)
    shifts = _require_shifts(c).shifts
    delta = shifts[-1]
    if len(state) != delta:
        raise PreconditionError(f"state must have length delta={delta}")
    v = _word_to_window(state)
    b = v >> (delta - 1) & 1
    for s in shifts[:-1]:
        b ^= v >> (delta - s - 1) & 1
    return _window_to_word(((v << 1) | b) & ((1 << delta) - 1), delta)


def orbit_of_seed(c, omega: str) -> OrbitResult:
    """Pre-period, period and period word of the solution seeded by ``omega``."""
    c = as_collection(c)
    shifts = _require_shifts(c).shifts
    delta = shifts[-1]
    if len(omega) != delta:
        raise PreconditionError(f"seed must have length delta={delta}")
    mask = tap_mask(shifts)
    top = delta - 1
    state = _word_to_window(omega)
    seq = [int(ch) for ch in omega]
    seen: dict[int, int] = {}
    t = 0
    while state not in seen:
        seen[state] = t
        b = (state & mask).bit_count() & 1
        seq.append(b)
        state = (state >> 1) | (b << top)
        t += 1
    pre = seen[state]
    period = t - pre
    word = "".join(map(str, seq[pre:pre + period]))
    # windows determine the sequence, so the window cycle is the symbol period
    assert minimal_period(word) == period, (word, period)
    return OrbitResult(pre, period, word)


def cycle_lengths(c, cap: int = DEFAULT_DELTA_CAP) -> Counter:
    """Multiset of cycle lengths of the companion map over nonzero windows.

    Walks all ``2**delta - 1`` nonzero windows once.  Every window lies on
    a cycle since the map is a bijection.
    """
    c = as_collection(c)
    shifts = _require_shifts(c).shifts
    delta = shifts[-1]
    if delta > cap:
        raise CapacityError(
            f"delta={delta} exceeds the orbit-enumeration cap {cap}; "
            "use the polynomial method")
    mask = tap_mask(shifts)
    top = delta - 1
    visited = bytearray(1 << delta)
    visited[0] = 1
    counts: Counter = Counter()
    for start in range(1, 1 << delta):
        if visited[start]:
            continue
        x = start
        length = 0
        symbols = []
        while not visited[x]:
            visited[x] = 1
            symbols.append(x & 1)
            b = (x & mask).bit_count() & 1
            x = (x >> 1) | (b << top)
            length += 1
        if x != start:
            raise AssertionError("companion map is not a permutation")
        assert is_primitive("".join(map(str, symbols))), (start, length)
        counts[length] += 1
    return counts


def iter_seeds(delta: int) -> Iterable[str]:
    for v in range(1 << delta):
        yield _window_to_word(v, delta)
