"""Polynomials over GF(2) packed into Python integers.

Bit k of the integer holds the coefficient of t^k, so addition is XOR and
multiplication is carry-less.  Everything else in the package (finite
fields, the rational function field, fraction gcds) bottoms out in these
routines, which is why they stay plain functions on ints: Python big-int
shifts and xors run in C and keep degree-several-hundred operands cheap.
"""

from __future__ import annotations


def deg(a: int) -> int:
    """Degree of a, with deg(0) = -1."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b << (low.bit_length() - 1)
        a ^= low
    return r


def divmod_(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of schoolbook long division (b != 0)."""
    if b == 0:
        raise ZeroDivisionError("gf2x division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        sh = a.bit_length() - db
        a ^= b << sh
        q |= 1 << sh
    return q, a


def mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("gf2x division by zero")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def pow_mod(a: int, e: int, m: int) -> int:
    r = 1
    a = mod(a, m)
    while e:
        if e & 1:
            r = mod(mul(r, a), m)
        a = mod(mul(a, a), m)
        e >>= 1
    return r


def is_irreducible(f: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(f)/2."""
    d = deg(f)
    if d < 1:
        return False
    for g in range(2, 1 << (d // 2 + 1)):
        if deg(g) >= 1 and mod(f, g) == 0:
            return False
    return True


def first_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible of degree m (m >= 1)."""
    for f in range(1 << m, 1 << (m + 1)):
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible of degree {m}")  # unreachable


def is_square(a: int) -> bool:
    """True iff only even exponents occur (char 2: squares = even support)."""
    return a & _odd_mask(a.bit_length()) == 0


def sqrt(a: int) -> int:
    """Square root of an even-support polynomial (bit decimation)."""
    if not is_square(a):
        raise ValueError("not a square in GF(2)[t]")
    r = 0
    k = 0
    while a:
        if a & 1:
            r |= 1 << k
        a >>= 2
        k += 1
    return r


def square(a: int) -> int:
    """a^2 = bit spreading (char-2 Frobenius)."""
    r = 0
    k = 0
    while a:
        if a & 1:
            r |= 1 << (2 * k)
        a >>= 1
        k += 1
    return r


_ODD_MASKS: dict[int, int] = {}


def _odd_mask(nbits: int) -> int:
    mask = _ODD_MASKS.get(nbits)
    if mask is None:
        mask = sum(1 << k for k in range(1, nbits, 2))
        _ODD_MASKS[nbits] = mask
    return mask
