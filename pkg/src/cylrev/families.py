"""Closed forms and transforms for structured collections.

Covers block collections ``(a, ..., a + h)``, exponential collections
``(1, 2, 4, ..., 2**n)``, the translation / scaling / reflection
transforms, the reversibility index, and the experiment on the
``(x1, x1 + 1, x1 + 2**m)`` family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from sympy import divisors

from .errors import PreconditionError
from .gf2 import _gcd, _powmod
from .recursion import (
    DEFAULT_DELTA_CAP,
    PositionCollection,
    as_collection,
    constituent,
)
from .spectrum import (
    DEFAULT_TMAX_DELTA,
    Spectrum,
    char_poly,
    kernel,
    spectrum,
)


# ---------- block collections

def block_collection(h: int, a: int = 0) -> PositionCollection:
    if h < 1 or a < 0:
        raise PreconditionError("need h >= 1 and a >= 0")
    return PositionCollection(tuple(range(a, a + h + 1)))


def block_spectrum(h: int) -> frozenset[int]:
    """Exact periods of ``(0, 1, ..., h)`` in closed form.

    All divisors of ``h + 1``, except 1 when ``h + 1`` is odd and except 2
    when ``h + 1`` is twice an odd number.
    """
    if h < 1:
        raise PreconditionError("h must be >= 1")
    out = set(divisors(h + 1))
    if (h + 1) % 2 == 1:
        out.discard(1)
    if (h + 1) % 4 == 2:
        out.discard(2)
    return frozenset(out)


# ---------- exponential collections

def exponential_collection(n: int) -> PositionCollection:
    """``(1, 2, 4, ..., 2**n)``; its shifts are ``2**i - 1``."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    return PositionCollection(tuple(1 << i for i in range(n + 1)))


def power_sum_split(value: int) -> Optional[tuple[int, int]]:
    """Exponents ``(y, z)``, ``y >= z``, with ``value == 2**y + 2**z``, if any.

    For a power of two ``2**x`` the only split is ``(x - 1, x - 1)``.
    """
    if value < 2:
        return None
    if value & (value - 1) == 0:
        e = value.bit_length() - 1
        return e - 1, e - 1
    if bin(value).count("1") == 2:
        return value.bit_length() - 1, (value & -value).bit_length() - 1
    return None


def exp_k_eta(n: int, m: int) -> tuple[int, int]:
    """``k`` = least ``z`` with ``2**z - 1 >= 2**n - m``; ``eta = m - (2**n - 2**k)``."""
    if n < 1 or not 1 <= m <= (1 << n) - 1:
        raise PreconditionError(f"need 1 <= m <= 2**n - 1, got n={n}, m={m}")
    target = (1 << n) - m
    k = next(z for z in range(1, n + 1) if (1 << z) - 1 >= target)
    return k, m - ((1 << n) - (1 << k))


def exp_closed_word(n: int, m: int) -> str:
    """Closed form of ``E_n`` applied ``2**(n+1) - 1`` times to ``K(m, 2**n - 1)``."""
    if n < 2:
        raise PreconditionError("n must be >= 2")
    k, eta = exp_k_eta(n, m)
    g = (1 << n) - 1
    parts = [constituent(m, g), constituent(eta, eta)]
    head = "".join(constituent(1, 1 << i) for i in range(k - 1))
    for j in range(k, n + 1):
        tail = (1 << j) - (1 << (k - 1)) + 1 - (m if j == n else 0)
        parts.append(head + constituent(1, tail))
    parts.append(constituent(m, g))
    return "".join(parts)


def exp_closed_word_units(n: int, m: int) -> int:
    """Unit count ``3 + k(n - k + 1)`` noted for the closed word (not asserted)."""
    k, _ = exp_k_eta(n, m)
    return 3 + k * (n - k + 1)


@dataclass(frozen=True)
class ExpBoundReport:
    n: int
    collection: tuple[int, ...]
    modulus_exponent: int
    divisible: bool
    exact_periods: frozenset[int] = field(default=frozenset())

    @property
    def kernel(self) -> frozenset[int]:
        return kernel(self.exact_periods)

    def to_dict(self) -> dict:
        return {
            "collection": list(self.collection),
            "delta": self.collection[-1] - self.collection[0],
            "exact_periods": sorted(self.exact_periods, reverse=True),
            "kernel": sorted(self.kernel, reverse=True),
            "complete_up_to": self.modulus_exponent if self.divisible else 0,
            "divisible": self.divisible,
        }


def exp_bound_check(n: int) -> ExpBoundReport:
    """Spectrum of ``E_n`` restricted to divisors of ``2**(n+1) - 1``.

    First checks that ``p(x)`` divides ``x**N + 1`` with ``N = 2**(n+1) - 1``,
    which makes every period a divisor of ``N``; then applies the
    divisor-lattice rule over the divisors of ``N`` only.
    """
    if n < 2:
        raise PreconditionError("n must be >= 2")
    c = exponential_collection(n)
    p = char_poly(c).p.value
    big_n = (1 << (n + 1)) - 1
    if _powmod(2, big_n, p) != 1:
        return ExpBoundReport(n, c.positions, big_n, False)
    divs = divisors(big_n)
    deg = {d: _gcd(p, _powmod(2, d, p) ^ 1).bit_length() - 1 for d in divs}
    exact = [d for d in divs
             if deg[d] > 0 and all(deg[e] < deg[d] for e in divs if e < d and d % e == 0)]
    return ExpBoundReport(n, c.positions, big_n, True, frozenset(exact))


# ---------- transforms

def translate(c, a: int) -> PositionCollection:
    c = as_collection(c)
    if c.first + a < 0:
        raise PreconditionError(f"translation by {a} makes a position negative")
    return PositionCollection(tuple(x + a for x in c.positions))


def scale(c, a: int) -> PositionCollection:
    c = as_collection(c)
    if a < 1:
        raise PreconditionError("scale factor must be >= 1")
    return PositionCollection(tuple(a * x for x in c.positions))


def reflect(c) -> PositionCollection:
    """``(a - xr, ..., a - x1)`` with ``a = x1 + xr``."""
    c = as_collection(c)
    a = c.first + c.last
    return PositionCollection(tuple(a - x for x in reversed(c.positions)))


def eta(n: int, m: int) -> int:
    """Largest divisor of ``n`` whose prime factors all divide ``m``."""
    if n < 1 or m < 1:
        raise PreconditionError("eta needs positive arguments")
    out = 1
    g = gcd(n, m)
    while g > 1:
        n //= g
        out *= g
        g = gcd(n, g)
    return out


def scaled_kernel_prediction(kern, a: int) -> frozenset[int]:
    return frozenset(b * eta(a, b) for b in kern)


# ---------- reversibility index

@dataclass(frozen=True)
class ReversibilityIndex:
    kappa: Fraction
    witness: tuple[int, ...] = ()
    unbounded: bool = False  # kappa == 0: every prime is a period

    def to_dict(self) -> dict:
        return {"kappa": str(self.kappa), "witness": list(self.witness),
                "unbounded": self.unbounded}


def max_coprime_subset(values) -> tuple[int, ...]:
    """A largest pairwise-coprime subset; ties broken by the smallest sorted tuple."""
    vals = sorted(set(values))
    for size in range(len(vals), 0, -1):
        for combo in combinations(vals, size):
            if all(gcd(x, y) == 1 for x, y in combinations(combo, 2)):
                return combo
    return ()


def reversibility_index(c, cap: int = DEFAULT_DELTA_CAP) -> ReversibilityIndex:
    """``1 / (1 + |P|)`` for ``P`` a largest set of pairwise coprime periods.

    Distinct multiples of one kernel element share it as a factor, so ``P``
    can be taken inside the kernel.
    """
    c = as_collection(c)
    if c.r == 1:
        return ReversibilityIndex(Fraction(1))
    if c.r % 2 == 0:
        return ReversibilityIndex(Fraction(0), unbounded=True)
    witness = max_coprime_subset(spectrum(c, cap=cap).kernel)
    return ReversibilityIndex(Fraction(1, 1 + len(witness)), witness)


def index_witness_collection(primes) -> PositionCollection:
    """Block collection ``(0, ..., a - 1)`` with ``a`` the product of odd primes.

    Its index is ``1 / (1 + len(primes))``.
    """
    primes = sorted(primes)
    if any(p < 3 for p in primes) or len(set(primes)) != len(primes):
        raise PreconditionError("need distinct odd primes")
    a = 1
    for p in primes:
        a *= p
    if a < 3:
        raise PreconditionError("need at least one prime")
    return block_collection(a - 1)


# ---------- reports

@dataclass(frozen=True)
class FamilyReport:
    family: str
    spectrum: Spectrum
    predicted: frozenset[int]
    computed: frozenset[int]

    @property
    def match(self) -> bool:
        return self.predicted == self.computed

    def to_dict(self) -> dict:
        d = self.spectrum.to_dict()
        d.update(family=self.family,
                 predicted=sorted(self.predicted, reverse=True),
                 computed=sorted(self.computed, reverse=True),
                 match=self.match)
        return d


def block_report(h: int, cap: int = DEFAULT_DELTA_CAP) -> FamilyReport:
    s = spectrum(block_collection(h), cap=cap)
    return FamilyReport("block", s, block_spectrum(h), s.exact_periods)


def exp_report(n: int, cap: int = DEFAULT_DELTA_CAP) -> FamilyReport:
    """Divisor-restricted spectrum against the general method when it fits."""
    check = exp_bound_check(n)
    c = exponential_collection(n)
    if c.delta <= DEFAULT_TMAX_DELTA:
        s = spectrum(c, cap=cap)
    else:
        s = Spectrum(c.positions, c.delta, check.exact_periods, check.kernel,
                     check.modulus_exponent if check.divisible else 0, "divisors")
    predicted = check.exact_periods if check.divisible else frozenset()
    return FamilyReport("exponential", s, predicted, s.exact_periods)


@dataclass(frozen=True)
class ConjectureRow:
    m: int
    collection: tuple[int, ...]
    max_period: int
    bound: int
    complete_up_to: int
    complete: bool

    @property
    def status(self) -> str:
        return "CONSISTENT" if self.max_period <= self.bound else "COUNTEREXAMPLE"

    def to_dict(self) -> dict:
        return {"m": self.m, "collection": list(self.collection),
                "max_period": self.max_period, "bound": self.bound,
                "status": self.status, "complete_up_to": self.complete_up_to,
                "complete": self.complete}


def conjecture_experiment(m_max: int, cap: int = DEFAULT_DELTA_CAP) -> list[ConjectureRow]:
    """Largest exact period of ``(0, 1, 2**m)`` against ``(2**m)**2 - 1``."""
    if m_max < 1:
        raise PreconditionError("m_max must be >= 1")
    rows = []
    for m in range(1, m_max + 1):
        span = 1 << m
        bound = span * span - 1
        c = PositionCollection((0, 1, span))
        if span <= DEFAULT_TMAX_DELTA:
            s = spectrum(c, cap=cap)
        else:
            # beyond exhaustive reach: search well past the conjectured bound
            s = spectrum(c, method="poly", t_max=4 * bound)
        rows.append(ConjectureRow(m, c.positions, max(s.exact_periods, default=0),
                                  bound, s.complete_up_to, s.complete))
    return rows
