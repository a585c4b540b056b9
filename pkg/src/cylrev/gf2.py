"""Bit-exact GF(2) primitives.

Strings on a cylinder and polynomials over GF(2) are both packed into
Python integers: bit ``j`` of the integer is position ``j`` of the string,
or the coefficient of ``x**j`` of the polynomial.  Convolution on a
cylinder of size ``n`` is polynomial multiplication folded modulo
``x**n + 1``, so a single carry-less multiply serves both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DomainError, SizeMismatchError

#: degree of the zero polynomial
ZERO_DEGREE = -math.inf


# ---------- integer kernels

def _mul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    la = a.bit_length()
    while la >= db:
        s = la - db
        q ^= 1 << s
        a ^= b << s
        la = a.bit_length()
    return q, a


def _mod(a: int, b: int) -> int:
    db = b.bit_length()
    la = a.bit_length()
    while la >= db:
        a ^= b << (la - db)
        la = a.bit_length()
    return a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g``."""
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while b:
        q, r = _divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 ^ _mul(q, s1)
        t0, t1 = t1, t0 ^ _mul(q, t1)
    return a, s0, t0


def _powmod(base: int, e: int, m: int) -> int:
    result = 1 if m.bit_length() > 1 else 0
    base = _mod(base, m)
    while e:
        if e & 1:
            result = _mod(_mul(result, base), m)
        e >>= 1
        if e:
            base = _mod(_mul(base, base), m)
    return result


def _fold(v: int, n: int) -> int:
    """Reduce a polynomial modulo ``x**n + 1``."""
    mask = (1 << n) - 1
    while v >> n:
        v = (v & mask) ^ (v >> n)
    return v


def _parity(v: int) -> int:
    return bin(v).count("1") & 1


# ---------- polynomials

@dataclass(frozen=True, order=False)
class Gf2Poly:
    """Polynomial over GF(2); ``value`` bit i is the coefficient of x**i."""

    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("coefficient vector must be non-negative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Gf2Poly":
        v = 0
        for e in exponents:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def parse(cls, text: str) -> "Gf2Poly":
        """Parse the 01 text form, leftmost character is the constant term."""
        return cls(_parse_bits(text))

    @property
    def degree(self):
        return self.value.bit_length() - 1 if self.value else ZERO_DEGREE

    def is_zero(self) -> bool:
        return self.value == 0

    def exponents(self) -> list[int]:
        return [i for i in range(self.value.bit_length()) if self.value >> i & 1]

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_mul(self.value, other.value))

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        q, r = _divmod(self.value, other.value)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_mod(self.value, other.value))

    def to_text(self) -> str:
        if not self.value:
            return "0"
        return format(self.value, "b")[::-1]

    def __str__(self) -> str:
        if not self.value:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)


def x_pow_plus_one(n: int) -> Gf2Poly:
    """The cylinder modulus ``x**n + 1``."""
    return Gf2Poly((1 << n) | 1)


def poly_gcd(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    if p.is_zero() and q.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    # over GF(2) every nonzero polynomial is already monic
    return Gf2Poly(_gcd(p.value, q.value))


def poly_xgcd(p: Gf2Poly, q: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly, Gf2Poly]:
    """Extended Euclid: ``(g, s, t)`` with ``s*p + t*q = g = gcd(p, q)``."""
    if p.is_zero() and q.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    g, s, t = _xgcd(p.value, q.value)
    return Gf2Poly(g), Gf2Poly(s), Gf2Poly(t)


def poly_powmod(base: Gf2Poly, e: int, modulus: Gf2Poly) -> Gf2Poly:
    """``base**e mod modulus`` by square-and-multiply."""
    if e < 0:
        raise DomainError("negative exponent")
    if modulus.degree == ZERO_DEGREE or modulus.degree < 1:
        raise DomainError("modulus must have degree >= 1")
    return Gf2Poly(_powmod(base.value, e, modulus.value))


def poly_inverse_mod(p: Gf2Poly, n: int) -> Optional[Gf2Poly]:
    """Inverse of ``p`` modulo ``x**n + 1``, or ``None`` when none exists.

    ``p`` is reduced modulo ``x**n + 1`` first.  The result, read as a
    rule on the cylinder of size n, convolves with ``p`` to the identity.
    """
    if n < 1:
        raise DomainError("cylinder size must be >= 1")
    m = x_pow_plus_one(n).value
    a = _fold(p.value, n)
    if a == 0:
        return None
    g, s, _ = _xgcd(a, m)
    if g != 1:
        return None
    return Gf2Poly(_mod(s, m))


# ---------- cyclic bit strings

def _parse_bits(text: str) -> int:
    text = text.strip()
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"not a 01-word: {text!r}")
    v = 0
    for i, c in enumerate(text):
        if c == "1":
            v |= 1 << i
    return v


@dataclass(frozen=True)
class BitString:
    """A 0/1 vector of fixed length ``n`` with cyclic index semantics."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("length must be positive")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits do not fit in length {self.n}")

    @classmethod
    def parse(cls, text: str) -> "BitString":
        text = text.strip()
        return cls(len(text), _parse_bits(text))

    @classmethod
    def from_positions(cls, positions: Iterable[int], n: int) -> "BitString":
        v = 0
        for x in positions:
            if not 0 <= x < n:
                raise ValueError(f"position {x} outside cylinder of size {n}")
            v |= 1 << x
        return cls(n, v)

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "BitString":
        values = list(values)
        return cls.parse("".join("1" if v else "0" for v in values))

    @classmethod
    def zero(cls, n: int) -> "BitString":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitString":
        return cls(n, (1 << n) - 1)

    @classmethod
    def identity(cls, n: int) -> "BitString":
        """The unit of convolution, a single 1 at position 0."""
        return cls(n, 1)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return self.bits >> j & 1

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return (self.bits >> j & 1 for j in range(self.n))

    def __add__(self, other: "BitString") -> "BitString":
        _check_sizes(self, other)
        return BitString(self.n, self.bits ^ other.bits)

    def positions(self) -> list[int]:
        return [j for j in range(self.n) if self.bits >> j & 1]

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_poly(self) -> Gf2Poly:
        return Gf2Poly(self.bits)

    def to_text(self) -> str:
        return "".join(str(b) for b in self)

    def __str__(self) -> str:
        return self.to_text()


def bitstring_from_poly(p: Gf2Poly, n: int) -> BitString:
    """The cylinder string of ``p mod (x**n + 1)``."""
    return BitString(n, _fold(p.value, n))


def _check_sizes(v: BitString, w: BitString) -> None:
    if v.n != w.n:
        raise SizeMismatchError(f"lengths differ: {v.n} != {w.n}")


def convolve(v: BitString, w: BitString) -> BitString:
    """Cyclic convolution ``[v * w](j) = sum_s v(s) w(j - s) mod 2``."""
    _check_sizes(v, w)
    return BitString(v.n, _fold(_mul(v.bits, w.bits), v.n))


def cyclic_shift(v: BitString, j: int) -> BitString:
    """Rotate right by ``j``: ``result(i) = v((i - j) mod n)``."""
    n = v.n
    j %= n
    if j == 0:
        return v
    mask = (1 << n) - 1
    return BitString(n, ((v.bits << j) | (v.bits >> (n - j))) & mask)


def parity(word: str) -> int:
    """Number of ones in a 01-word, mod 2."""
    return word.count("1") & 1


def circulant_nullspace(v: BitString) -> list[BitString]:
    """Basis of ``{L : convolve(v, L) == 0}``.

    Row ``j`` of the circulant is ``cyclic_shift(v, j)``; a combination of
    rows with coefficients ``L`` vanishes exactly when ``v * L == 0``.  The
    basis is found by Gauss-Jordan elimination on the columns of the
    system, pivoting on the first set bit in row order.
    """
    n = v.n
    # equation i reads sum_j L(j) v(i - j) = 0; pack it as a row over j
    rows = []
    for i in range(n):
        r = 0
        for x in v.positions():
            r |= 1 << ((i - x) % n)
        rows.append(r)

    pivots: dict[int, int] = {}  # pivot column -> reduced row
    for r in rows:
        for col, pr in pivots.items():
            if r >> col & 1:
                r ^= pr
        if not r:
            continue
        col = (r & -r).bit_length() - 1
        for c in pivots:
            if pivots[c] >> col & 1:
                pivots[c] ^= r
        pivots[col] = r

    basis = []
    for free in range(n):
        if free in pivots:
            continue
        vec = 1 << free
        for col, pr in pivots.items():
            if pr >> free & 1:
                vec |= 1 << col
        basis.append(BitString(n, vec))
    return basis


def is_reversible_rule(v: BitString) -> bool:
    """Algebraic reversibility test: ``gcd(v(x), x**n + 1) == 1``."""
    if v.is_zero():
        return False
    return _gcd(x_pow_plus_one(v.n).value, v.bits) == 1


def inverse_rule(v: BitString) -> Optional[BitString]:
    """The rule ``w`` with ``convolve(v, w)`` the identity, if it exists."""
    w = poly_inverse_mod(v.to_poly(), v.n)
    return None if w is None else bitstring_from_poly(w, v.n)
