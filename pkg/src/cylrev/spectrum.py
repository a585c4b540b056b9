"""Exact period spectra and reversibility verdicts.

Two independent routes compute the set of exact (minimal) period lengths
of nonzero periodic solutions of a collection's recurrence:

* ``spectrum_bruteforce`` decomposes all ``2**delta`` windows of the
  companion map into cycles;
* ``spectrum_poly`` works with the characteristic polynomial ``p`` only.

For the polynomial route let ``g(t) = gcd(p, x**t + 1)``.  Solutions of
period dividing ``t`` form a space of dimension ``deg g(t)``, and the
solution space of the recurrence is a cyclic module isomorphic to
``GF(2)[x]/(p)``, so the minimal periods that occur are exactly the
orders of the nontrivial divisors of ``p``.  ``t`` is such an order iff
``deg g(t)`` exceeds ``deg g(t')`` for every proper divisor ``t'`` of ``t``
(then ``g(t)`` itself has order ``t``; otherwise ``g(t) = g(t/q)`` for a
prime ``q`` and no divisor has order ``t``).  Only gcd degrees are
compared; nothing is factored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .errors import CapacityError, PreconditionError, TheoremViolation
from .gf2 import (
    BitString,
    Gf2Poly,
    _gcd,
    bitstring_from_poly,
    circulant_nullspace,
    convolve,
)
from .recursion import (
    DEFAULT_DELTA_CAP,
    PositionCollection,
    as_collection,
    cycle_lengths,
    derive,
)

#: largest span for which the polynomial route picks ``2**delta - 1`` itself
DEFAULT_TMAX_DELTA = 20


@dataclass(frozen=True)
class Spectrum:
    collection: tuple[int, ...]
    delta: int
    exact_periods: frozenset[int]
    kernel: frozenset[int] = field(default=frozenset())
    complete_up_to: int = 0
    method: str = ""

    @property
    def complete(self) -> bool:
        """Whether every exact period is known (search reached ``2**delta - 1``)."""
        return self.complete_up_to >= (1 << self.delta) - 1

    def to_dict(self) -> dict:
        return {
            "collection": list(self.collection),
            "delta": self.delta,
            "exact_periods": sorted(self.exact_periods, reverse=True),
            "kernel": sorted(self.kernel, reverse=True),
            "complete_up_to": self.complete_up_to,
        }


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial ``x**delta + sum_{l<r} x**(delta - s_l) + 1``."""

    p: Gf2Poly
    delta: int


def kernel(values: Iterable[int]) -> frozenset[int]:
    """Elements not divisible by any other element of the set."""
    vals = sorted(set(values))
    if vals and vals[0] < 1:
        raise PreconditionError("periods must be positive")
    kept: list[int] = []
    for y in vals:
        if not any(y % x == 0 for x in kept):
            kept.append(y)
    return frozenset(kept)


def char_poly(c) -> CharPoly:
    c = as_collection(c)
    shifts = derive(c).shifts
    if not shifts:
        raise PreconditionError("a single position has no recurrence")
    delta = shifts[-1]
    v = 0
    for s in shifts:
        v |= 1 << (delta - s)
    return CharPoly(Gf2Poly(v | (1 << delta)), delta)


def _make(c: PositionCollection, periods, complete_up_to: int, method: str) -> Spectrum:
    periods = frozenset(periods)
    bound = (1 << c.delta) - 1
    if periods and max(periods) > bound:
        raise TheoremViolation(f"period {max(periods)} exceeds 2**delta - 1 = {bound}")
    if (1 in periods) != (c.r % 2 == 0) and complete_up_to >= 1:
        raise TheoremViolation(f"length-1 period present={1 in periods} but r={c.r}")
    return Spectrum(c.positions, c.delta, periods, kernel(periods), complete_up_to, method)


@lru_cache(maxsize=4096)
def _brute_periods(shifts: tuple[int, ...], cap: int) -> frozenset[int]:
    return frozenset(cycle_lengths((0,) + shifts, cap=cap))


def spectrum_bruteforce(c, cap: int = DEFAULT_DELTA_CAP) -> Spectrum:
    """Spectrum from the full cycle decomposition of the window space."""
    c = as_collection(c)
    if c.r == 1:
        return _make(c, (), 0, "brute")
    shifts = derive(c).shifts
    if c.delta > cap:
        raise CapacityError(
            f"delta={c.delta} exceeds the brute-force cap {cap}; "
            "use the polynomial method (method='poly')")
    return _make(c, _brute_periods(shifts, cap), (1 << c.delta) - 1, "brute")


def gcd_degrees(p: int, t_max: int) -> list[int]:
    """``deg gcd(p, x**t + 1)`` for ``t = 0 .. t_max`` (entry 0 unused).

    ``x**t mod p`` is advanced one multiplication by ``x`` at a time.
    """
    d = p.bit_length() - 1
    degs = [0] * (t_max + 1)
    r = 1
    for t in range(1, t_max + 1):
        r <<= 1
        if r >> d:
            r ^= p
        degs[t] = _gcd(p, r ^ 1).bit_length() - 1
    return degs


def exact_periods_from_degrees(degs: list[int]) -> list[int]:
    """Apply the divisor-lattice rule to a table of gcd degrees."""
    t_max = len(degs) - 1
    below = [0] * (t_max + 1)  # max degree over proper divisors
    out = []
    for t in range(1, t_max + 1):
        dt = degs[t]
        if dt == 0:
            continue
        if dt > below[t]:
            out.append(t)
        for k in range(2 * t, t_max + 1, t):
            if dt > below[k]:
                below[k] = dt
    return out


@lru_cache(maxsize=65536)
def _poly_periods(shifts: tuple[int, ...], t_max: int) -> frozenset[int]:
    p = char_poly((0,) + shifts).p.value
    return frozenset(exact_periods_from_degrees(gcd_degrees(p, t_max)))


def default_t_max(delta: int) -> int:
    if delta > DEFAULT_TMAX_DELTA:
        raise CapacityError(
            f"delta={delta} exceeds {DEFAULT_TMAX_DELTA}; pass an explicit t_max")
    return (1 << delta) - 1


def spectrum_poly(c, t_max: Optional[int] = None) -> Spectrum:
    """Exact periods up to ``t_max`` from gcd degrees of the characteristic polynomial."""
    c = as_collection(c)
    if c.r == 1:
        return _make(c, (), 0, "poly")
    if t_max is None:
        t_max = default_t_max(c.delta)
    if t_max < 1:
        raise PreconditionError("t_max must be >= 1")
    # no exact period can exceed 2**delta - 1
    search = min(t_max, (1 << c.delta) - 1)
    return _make(c, _poly_periods(derive(c).shifts, search), t_max, "poly")


def spectrum(c, method: str = "auto", t_max: Optional[int] = None,
             cap: int = DEFAULT_DELTA_CAP) -> Spectrum:
    """Dispatch to a spectrum method.

    ``auto`` enumerates orbits when ``delta <= cap`` and no ``t_max`` was
    requested, and otherwise uses the polynomial route.  ``both`` runs the
    two routes and raises ``TheoremViolation`` when they disagree.
    """
    c = as_collection(c)
    if method == "brute":
        return spectrum_bruteforce(c, cap=cap)
    if method == "poly":
        return spectrum_poly(c, t_max)
    if method == "both":
        a = spectrum_bruteforce(c, cap=cap)
        b = spectrum_poly(c, t_max)
        bound = min(b.complete_up_to, a.complete_up_to)
        if {t for t in a.exact_periods if t <= bound} != {t for t in b.exact_periods if t <= bound}:
            raise TheoremViolation(
                f"methods disagree on {c}: brute={sorted(a.exact_periods)} "
                f"poly={sorted(b.exact_periods)}")
        return a if a.complete_up_to >= b.complete_up_to else b
    if method == "auto":
        if t_max is None and c.delta <= cap:
            return spectrum_bruteforce(c, cap=cap)
        return spectrum_poly(c, t_max)
    raise ValueError(f"unknown method {method!r}")


def rule_bitstring(c, n: int) -> BitString:
    """The rule ``V[x1, ..., xr; n]``: the collection's units on a cylinder of size n."""
    c = as_collection(c)
    _check_fits(c, n)
    return BitString.from_positions(c.positions, n)


def _check_fits(c: PositionCollection, n: int) -> None:
    if n <= c.last:
        raise PreconditionError(f"cylinder size {n} must exceed the last position {c.last}")


def is_reversible(c, n: int) -> bool:
    """Reversibility of ``V[x1, ..., xr; n]`` from the spectrum kernel."""
    c = as_collection(c)
    _check_fits(c, n)
    if c.r == 1:
        return True
    if c.r % 2 == 0:
        return False
    ker = spectrum_poly(c, t_max=n).kernel
    return not any(n % k == 0 for k in ker)


def reversible_sizes(c, n_lo: int, n_hi: int) -> list[tuple[int, bool]]:
    """Verdicts for every cylinder size in ``[n_lo, n_hi]`` from one spectrum."""
    c = as_collection(c)
    _check_fits(c, n_lo)
    if n_hi < n_lo:
        return []
    if c.r == 1:
        return [(n, True) for n in range(n_lo, n_hi + 1)]
    ker = spectrum_poly(c, t_max=n_hi).kernel
    return [(n, not any(n % k == 0 for k in ker)) for n in range(n_lo, n_hi + 1)]


def irreversibility_witness(c, n: int) -> Optional[BitString]:
    """A nonzero ``L`` with ``V * L == 0`` on the cylinder of size n, or ``None``.

    Uses the smallest kernel element ``k`` dividing ``n``: every nonzero
    solution on the cylinder of size ``k`` has exact period ``k``, and its
    ``n/k``-fold repetition solves the size-``n`` system.
    """
    c = as_collection(c)
    v = rule_bitstring(c, n)
    if c.r == 1:
        return None
    ker = spectrum_poly(c, t_max=n).kernel
    ks = sorted(k for k in ker if n % k == 0)
    if not ks:
        return None
    k = ks[0]
    small = circulant_nullspace(bitstring_from_poly(v.to_poly(), k))[0]
    bits = 0
    for i in range(n // k):
        bits |= small.bits << (i * k)
    witness = BitString(n, bits)
    if not convolve(v, witness).is_zero():
        raise TheoremViolation(f"witness for {c} on n={n} does not annihilate the rule")
    return witness
