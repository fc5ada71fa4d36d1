"""Univariate polynomials over GF(2^m), bit-sliced.

A polynomial sum_k c_k t^k is stored as m integers ("slices"), one per
basis coordinate of GF(2^m): bit k of slice j is the j-th coordinate of
c_k.  Addition is m xors regardless of degree; multiplication is m^2
carry-less integer products plus the modulus reduction row; gcds run a
schoolbook Euclid whose inner step is again shift/xor.  For m = 1 this
degenerates to single-integer arithmetic, which is the hot case for the
rational function field F2(t).
"""

from __future__ import annotations

from . import gf2x
from .finitefield import GF


class UPoly:
    __slots__ = ("gf", "slices")

    def __init__(self, gf: GF, slices: tuple[int, ...]):
        self.gf = gf
        self.slices = slices

    # ----- constructors ------------------------------------------------

    @classmethod
    def zero(cls, gf: GF) -> "UPoly":
        return cls(gf, (0,) * gf.m)

    @classmethod
    def one(cls, gf: GF) -> "UPoly":
        return cls(gf, (1,) + (0,) * (gf.m - 1))

    @classmethod
    def t(cls, gf: GF) -> "UPoly":
        return cls(gf, (2,) + (0,) * (gf.m - 1))

    @classmethod
    def const(cls, gf: GF, c: int) -> "UPoly":
        return cls(gf, tuple((c >> j) & 1 for j in range(gf.m)))

    @classmethod
    def from_coeffs(cls, gf: GF, coeffs) -> "UPoly":
        """Build from field elements (ints) listed by ascending degree."""
        slices = [0] * gf.m
        for k, c in enumerate(coeffs):
            for j in range(gf.m):
                if (c >> j) & 1:
                    slices[j] |= 1 << k
        return cls(gf, tuple(slices))

    # ----- structure ---------------------------------------------------

    def deg(self) -> int:
        return max(s.bit_length() for s in self.slices) - 1

    def is_zero(self) -> bool:
        return not any(self.slices)

    def __bool__(self):
        return any(self.slices)

    def coeff(self, k: int) -> int:
        c = 0
        for j, s in enumerate(self.slices):
            if (s >> k) & 1:
                c |= 1 << j
        return c

    def lc(self) -> int:
        d = self.deg()
        return 0 if d < 0 else self.coeff(d)

    def to_coeffs(self) -> list[int]:
        return [self.coeff(k) for k in range(self.deg() + 1)]

    def is_constant(self) -> bool:
        return self.deg() <= 0

    # ----- arithmetic ----------------------------------------------------

    def __add__(self, other: "UPoly") -> "UPoly":
        return UPoly(self.gf, tuple(a ^ b for a, b in zip(self.slices, other.slices)))

    __sub__ = __add__  # char 2

    def __mul__(self, other: "UPoly") -> "UPoly":
        gf = self.gf
        m = gf.m
        if m == 1:
            return UPoly(gf, (gf2x.mul(self.slices[0], other.slices[0]),))
        A, B = self.slices, other.slices
        out = [0] * m
        upow = gf.upow
        for i in range(m):
            ai = A[i]
            if not ai:
                continue
            for j in range(m):
                bj = B[j]
                if not bj:
                    continue
                p = gf2x.mul(ai, bj)
                w = upow[i + j]
                while w:
                    low = w & -w
                    out[low.bit_length() - 1] ^= p
                    w ^= low
        return UPoly(gf, tuple(out))

    def scalar_mul(self, c: int) -> "UPoly":
        """Multiply by a field element."""
        gf = self.gf
        if c == 0:
            return UPoly.zero(gf)
        if c == 1:
            return self
        m = gf.m
        out = [0] * m
        for l, sl in enumerate(self.slices):
            if not sl:
                continue
            w = gf.mul(c, gf.upow[l])
            while w:
                low = w & -w
                out[low.bit_length() - 1] ^= sl
                w ^= low
        return UPoly(gf, tuple(out))

    def shift(self, k: int) -> "UPoly":
        """Multiply by t^k."""
        return UPoly(self.gf, tuple(s << k for s in self.slices))

    def square(self) -> "UPoly":
        gf = self.gf
        m = gf.m
        if m == 1:
            return UPoly(gf, (gf2x.square(self.slices[0]),))
        out = [0] * m
        for l, sl in enumerate(self.slices):
            if not sl:
                continue
            sp = gf2x.square(sl)
            w = gf.upow[2 * l]
            while w:
                low = w & -w
                out[low.bit_length() - 1] ^= sp
                w ^= low
        return UPoly(gf, tuple(out))

    def divmod(self, b: "UPoly") -> tuple["UPoly", "UPoly"]:
        gf = self.gf
        m = gf.m
        db = b.deg()
        if db < 0:
            raise ZeroDivisionError("UPoly division by zero")
        if m == 1:
            q, r = gf2x.divmod_(self.slices[0], b.slices[0])
            return UPoly(gf, (q,)), UPoly(gf, (r,))
        da = self.deg()
        if da < db:
            return UPoly.zero(gf), self
        blc = b.coeff(db)
        binv = gf.inv(blc)
        R = list(self.slices)
        Q = [0] * m
        bsl = b.slices
        for d in range(da, db - 1, -1):
            cd = 0
            for j in range(m):
                if (R[j] >> d) & 1:
                    cd |= 1 << j
            if not cd:
                continue
            qc = gf.mul(cd, binv)
            sh = d - db
            for j in range(m):
                if (qc >> j) & 1:
                    Q[j] |= 1 << sh
            for l in range(m):
                bl = bsl[l]
                if not bl:
                    continue
                w = gf.mul(qc, gf.upow[l])
                while w:
                    low = w & -w
                    R[low.bit_length() - 1] ^= bl << sh
                    w ^= low
        return UPoly(gf, tuple(Q)), UPoly(gf, tuple(R))

    def mod(self, b: "UPoly") -> "UPoly":
        return self.divmod(b)[1]

    def exact_div(self, b: "UPoly") -> "UPoly":
        q, r = self.divmod(b)
        if r:
            raise ValueError("inexact UPoly division")
        return q

    def gcd(self, other: "UPoly") -> "UPoly":
        """Monic gcd."""
        gf = self.gf
        if gf.m == 1:
            return UPoly(gf, (gf2x.gcd(self.slices[0], other.slices[0]),))
        a, b = self, other
        while b:
            a, b = b, a.mod(b)
        lc = a.lc()
        if lc not in (0, 1):
            a = a.scalar_mul(gf.inv(lc))
        return a

    def pow(self, e: int) -> "UPoly":
        if e < 0:
            raise ValueError("negative power of a UPoly")
        r = UPoly.one(self.gf)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b.square()
            e >>= 1
        return r

    def eval(self, x: int) -> int:
        """Horner evaluation at a field element."""
        gf = self.gf
        acc = 0
        for k in range(self.deg(), -1, -1):
            acc = gf.mul(acc, x) ^ self.coeff(k)
        return acc

    # ----- char-2 squares -----------------------------------------------

    def is_square(self) -> bool:
        """Even-support test: over a perfect coefficient field this is exact."""
        return all(s & gf2x._odd_mask(s.bit_length()) == 0 for s in self.slices)

    def sqrt(self) -> "UPoly":
        gf = self.gf
        m = gf.m
        if m == 1:
            return UPoly(gf, (gf2x.sqrt(self.slices[0]),))
        out = [0] * m
        for l, sl in enumerate(self.slices):
            if not sl:
                continue
            comp = gf2x.sqrt(sl)  # raises if odd support
            w = gf._sqrt_basis[l]
            while w:
                low = w & -w
                out[low.bit_length() - 1] ^= comp
                w ^= low
        return UPoly(gf, tuple(out))

    # ----- equality / printing -------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, UPoly) and self.gf is other.gf
                and self.slices == other.slices)

    def __hash__(self):
        return hash((id(self.gf), self.slices))

    def __str__(self):
        if self.is_zero():
            return "0"
        gf = self.gf
        parts = []
        for k in range(self.deg(), -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            if k == 0:
                parts.append(gf.elem_str(c))
                continue
            tk = "t" if k == 1 else f"t^{k}"
            if c == 1:
                parts.append(tk)
            else:
                cs = gf.elem_str(c)
                parts.append(f"({cs})*{tk}" if "+" in cs else f"{cs}*{tk}")
        return "+".join(parts)

    def __repr__(self):
        return f"UPoly({self})"
