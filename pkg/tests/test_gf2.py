import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylrev.errors import DomainError, SizeMismatchError
from cylrev.gf2 import (
    _fold,
    _mul,
    ZERO_DEGREE,
    BitString,
    Gf2Poly,
    bitstring_from_poly,
    circulant_nullspace,
    convolve,
    cyclic_shift,
    inverse_rule,
    is_reversible_rule,
    parity,
    poly_gcd,
    poly_inverse_mod,
    poly_powmod,
    poly_xgcd,
    x_pow_plus_one,
)


def naive_convolve(v, w):
    n = len(v)
    return [sum(v[s] * w[(j - s) % n] for s in range(n)) % 2 for j in range(n)]


def long_division_remainder(a, b):
    """Schoolbook division on coefficient lists (index = exponent)."""
    a = list(a)
    while len(a) >= len(b):
        if a[-1]:
            off = len(a) - len(b)
            for i, c in enumerate(b):
                a[off + i] ^= c
        a.pop()
    return a


def bitstrings(max_n=32):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(0, (1 << n) - 1).map(lambda b: BitString(n, b)))


def triples(max_n=32):
    return st.integers(1, max_n).flatmap(lambda n: st.tuples(
        *[st.integers(0, (1 << n) - 1).map(lambda b, n=n: BitString(n, b))] * 3))


# ---------- convolution and shifts

def test_convolve_identity():
    assert convolve(BitString.parse("100"), BitString.parse("011")) == BitString.parse("011")


def test_convolve_derived_example():
    v = [1, 1, 0]
    expected = naive_convolve(v, v)
    assert expected == [1, 0, 1]
    assert convolve(BitString.parse("110"), BitString.parse("110")).to_text() == "101"


def test_convolve_zero_annihilates():
    w = BitString.parse("10111")
    assert convolve(BitString.zero(5), w).is_zero()


def test_convolve_size_mismatch():
    with pytest.raises(SizeMismatchError):
        convolve(BitString.parse("10"), BitString.parse("100"))


@settings(max_examples=300)
@given(bitstrings(), st.data())
def test_convolve_matches_direct_sum(v, data):
    w = BitString(v.n, data.draw(st.integers(0, (1 << v.n) - 1)))
    assert list(convolve(v, w)) == naive_convolve(list(v), list(w))


@settings(max_examples=1000)
@given(triples())
def test_convolution_commutative_associative_distributive(t):
    a, b, c = t
    assert convolve(a, b) == convolve(b, a)
    assert convolve(convolve(a, b), c) == convolve(a, convolve(b, c))
    assert convolve(a, b + c) == convolve(a, b) + convolve(a, c)


def test_cyclic_shift_examples():
    assert cyclic_shift(BitString.parse("100"), 1).to_text() == "010"
    v = [1, 1, 0, 0, 1]
    expected = "".join(str(v[(i - 2) % 5]) for i in range(5))
    assert expected == "01110"
    assert cyclic_shift(BitString.parse("11001"), 2).to_text() == expected


@given(bitstrings(), st.integers(-100, 100), st.integers(-100, 100))
def test_cyclic_shift_group_action(v, a, b):
    assert cyclic_shift(v, v.n) == v
    assert cyclic_shift(cyclic_shift(v, a), b) == cyclic_shift(v, a + b)


def test_parity():
    assert parity("") == 0
    assert parity("1110") == 1
    assert parity("0001000") == 1


def test_bitstring_text_roundtrip():
    v = BitString.parse("11001")
    assert v.positions() == [0, 1, 4]
    assert BitString.parse(v.to_text()) == v
    with pytest.raises(ValueError):
        BitString.parse("1021")


# ---------- polynomials

def test_poly_text_and_degree():
    p = Gf2Poly.parse("1101")
    assert p.exponents() == [0, 1, 3]
    assert p.degree == 3
    assert Gf2Poly(0).degree == ZERO_DEGREE
    assert Gf2Poly.parse(p.to_text()) == p
    assert str(p) == "x^3 + x + 1"


@given(st.integers(0, 1 << 40))
def test_poly_bitstring_roundtrip(v):
    p = Gf2Poly(v)
    n = max(1, v.bit_length())
    assert bitstring_from_poly(p, n).to_poly() == p


def test_poly_gcd_examples():
    one = Gf2Poly(1)
    assert poly_gcd(Gf2Poly.parse("1011"), one) == one
    x2_1 = Gf2Poly.from_exponents([0, 2])
    x_1 = Gf2Poly.from_exponents([0, 1])
    assert poly_gcd(x2_1, x_1) == x_1
    p = Gf2Poly.from_exponents([0, 1, 3])
    # long division oracle: x^3 + x + 1 divides x^7 + 1
    assert not any(long_division_remainder([1, 0, 0, 0, 0, 0, 0, 1], [1, 1, 0, 1]))
    assert poly_gcd(p, x_pow_plus_one(7)) == p


def test_poly_gcd_zero_zero():
    with pytest.raises(DomainError):
        poly_gcd(Gf2Poly(0), Gf2Poly(0))


@settings(max_examples=300)
@given(st.integers(1, 1 << 30), st.integers(1, 1 << 30))
def test_xgcd_bezout(a, b):
    p, q = Gf2Poly(a), Gf2Poly(b)
    g, s, t = poly_xgcd(p, q)
    assert s * p + t * q == g
    assert (p % g).is_zero() and (q % g).is_zero()


def test_poly_powmod_examples():
    x = Gf2Poly(2)
    assert poly_powmod(x, 0, Gf2Poly.parse("111")) == Gf2Poly(1)
    assert poly_powmod(x, 3, Gf2Poly.parse("111")) == Gf2Poly(1)
    assert poly_powmod(x, 7, Gf2Poly.parse("1101")) == Gf2Poly(1)


@settings(max_examples=200)
@given(st.integers(0, 1 << 20), st.integers(0, 200), st.integers(2, 1 << 12))
def test_powmod_matches_repeated_multiplication(b, e, m):
    base, mod = Gf2Poly(b), Gf2Poly(m)
    acc = Gf2Poly(1) % mod
    for _ in range(e):
        acc = (acc * base) % mod
    assert poly_powmod(base, e, mod) == acc


def test_poly_inverse_examples():
    assert poly_inverse_mod(Gf2Poly(1), 6) == Gf2Poly(1)
    assert poly_inverse_mod(Gf2Poly(2), 5) == Gf2Poly.from_exponents([4])
    # (1 + x) divides x^4 + 1 = (x + 1)^4
    assert poly_inverse_mod(Gf2Poly.parse("11"), 4) is None


def test_inverse_round_trip_random():
    rng = random.Random(7)
    found = 0
    while found < 300:
        n = rng.randint(1, 64)
        v = BitString(n, rng.getrandbits(n))
        w = inverse_rule(v)
        if w is None:
            assert not is_reversible_rule(v)
            continue
        assert convolve(v, w) == BitString.identity(n)
        found += 1


# ---------- circulant nullspace

def brute_nullspace_dim(v):
    n = v.n
    count = sum(1 for b in range(1 << n) if convolve(v, BitString(n, b)).is_zero())
    return count.bit_length() - 1


def test_nullspace_identity_empty():
    assert circulant_nullspace(BitString.identity(7)) == []


def test_nullspace_pair_contains_ones():
    basis = circulant_nullspace(BitString.from_positions([0, 1], 4))
    assert BitString.ones(4) in basis


def test_nullspace_dimension_derived():
    v = BitString.from_positions([0, 1, 2], 6)
    assert brute_nullspace_dim(v) == 2
    assert len(circulant_nullspace(v)) == 2


def test_nullspace_deterministic():
    v = BitString.parse("110010")
    assert circulant_nullspace(v) == circulant_nullspace(BitString.parse("110010"))


@pytest.mark.parametrize("n", range(1, 9))
def test_nullspace_is_exact_solution_space(n):
    for b in range(1 << n):
        v = BitString(n, b)
        basis = circulant_nullspace(v)
        assert len(basis) == brute_nullspace_dim(v)
        for L in basis:
            assert convolve(v, L).is_zero()


@pytest.mark.parametrize("n", range(1, 13))
def test_nullspace_empty_iff_gcd_one(n):
    for b in range(1 << n):
        v = BitString(n, b)
        assert (not circulant_nullspace(v)) == is_reversible_rule(v)


def test_nullspace_empty_iff_gcd_one_random_large():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(13, 64)
        v = BitString(n, rng.getrandbits(n))
        assert (not circulant_nullspace(v)) == is_reversible_rule(v)


def _annihilator_forms(v, L):
    xs = v.positions()
    leg1 = convolve(v, L).is_zero()
    dv = BitString.from_positions([x - xs[0] for x in xs[1:]], v.n) if len(xs) > 1 \
        else BitString.zero(v.n)
    leg2 = convolve(dv, L) == L
    acc = BitString.zero(v.n)
    for x in xs[1:]:
        acc = acc + cyclic_shift(L, x - xs[0])
    leg3 = acc == L
    return leg1, leg2, leg3


@pytest.mark.parametrize("n", range(1, 11))
def test_annihilator_forms_agree_exhaustive(n):
    # same three legs on packed integers, so all 2^(2n) pairs stay cheap
    mask = (1 << n) - 1

    def rot(x, j):
        j %= n
        return ((x << j) | (x >> (n - j))) & mask if j else x

    for vb in range(1, 1 << n):
        xs = [i for i in range(n) if vb >> i & 1]
        shifts = [x - xs[0] for x in xs[1:]]
        dvb = 0
        for s in shifts:
            dvb |= 1 << s
        for lb in range(1, 1 << n):
            leg1 = _fold(_mul(vb, lb), n) == 0
            leg2 = _fold(_mul(dvb, lb), n) == lb
            acc = 0
            for s in shifts:
                acc ^= rot(lb, s)
            assert leg1 == leg2 == (acc == lb)


def test_annihilator_forms_agree_random():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(9, 40)
        v = BitString(n, rng.getrandbits(n) | 1)
        # bias towards solutions: half the time take L from the nullspace
        basis = circulant_nullspace(v)
        if basis and rng.random() < 0.5:
            L = BitString.zero(n)
            for b in basis:
                if rng.random() < 0.5:
                    L = L + b
            if L.is_zero():
                L = basis[0]
        else:
            L = BitString(n, rng.getrandbits(n) or 1)
        legs = _annihilator_forms(v, L)
        assert legs[0] == legs[1] == legs[2]


def test_annihilator_forms_on_nullspace_basis():
    for n in (9, 10):
        for xs in itertools.combinations(range(n), 3):
            v = BitString.from_positions(xs, n)
            for L in circulant_nullspace(v):
                assert all(_annihilator_forms(v, L))
