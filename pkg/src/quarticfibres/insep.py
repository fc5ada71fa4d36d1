"""The degree-4 purely inseparable extension of K = F_q(t).

In characteristic 2 the field K(t^(1/4)) is spanned over K by the powers
s^0..s^3 of s = t^(1/4), with s^4 = t.  Elements are stored as coordinate
vectors in that basis; every fourth root that exists over the algebraic
closure of K already lives here, which is what makes singular points of
the quartic models computable without any factorization.
"""

from __future__ import annotations

from .scalars import ScalarK
from .upoly import UPoly


class InsepElem:
    """An element c0 + c1*t^(1/4) + c2*t^(1/2) + c3*t^(3/4), ci in K."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        assert len(coords) == 4
        self.coords = coords

    # ----- constructors ---------------------------------------------------

    @classmethod
    def from_scalar(cls, s: ScalarK) -> "InsepElem":
        z = ScalarK.zero(s.gf)
        return cls((s, z, z, z))

    @classmethod
    def zero(cls, gf) -> "InsepElem":
        z = ScalarK.zero(gf)
        return cls((z, z, z, z))

    @classmethod
    def one(cls, gf) -> "InsepElem":
        z = ScalarK.zero(gf)
        return cls((ScalarK.one(gf), z, z, z))

    @property
    def gf(self):
        return self.coords[0].gf

    # ----- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def in_base_field(self) -> bool:
        return not any(self.coords[1:])

    def as_scalar(self) -> ScalarK:
        if not self.in_base_field():
            raise ValueError("element has nontrivial inseparable part")
        return self.coords[0]

    # ----- arithmetic ----------------------------------------------------------

    def __add__(self, other: "InsepElem") -> "InsepElem":
        return InsepElem(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __sub__ = __add__

    def __mul__(self, other: "InsepElem") -> "InsepElem":
        t = ScalarK.t(self.gf)
        z = ScalarK.zero(self.gf)
        out = [z, z, z, z]
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                p = a * b
                k = i + j
                if k >= 4:
                    p = p * t
                    k -= 4
                out[k] = out[k] + p
        return InsepElem(tuple(out))

    def scalar_mul(self, s: ScalarK) -> "InsepElem":
        return InsepElem(tuple(c * s for c in self.coords))

    def square(self) -> "InsepElem":
        t = ScalarK.t(self.gf)
        z = ScalarK.zero(self.gf)
        c0, c1, c2, c3 = self.coords
        # (sum ci s^i)^2 = c0^2 + c2^2 t + (c1^2 + c3^2 t) s^2
        return InsepElem((c0.square() + c2.square() * t, z,
                          c1.square() + c3.square() * t, z))

    def pow(self, n: int) -> "InsepElem":
        if n < 0:
            raise ValueError("negative power in K^(1/4)")
        r = InsepElem.one(self.gf)
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b.square()
        return r

    def __eq__(self, other):
        return isinstance(other, InsepElem) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    # ----- printing ----------------------------------------------------------------

    _POWERS = ("", "t^(1/4)", "t^(1/2)", "t^(3/4)")

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            elif cs == "1":
                parts.append(self._POWERS[i])
            else:
                if _needs_parens(cs):
                    cs = f"({cs})"
                parts.append(f"{cs}*{self._POWERS[i]}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"InsepElem({self})"


def _needs_parens(s: str) -> bool:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+/" and depth == 0:
            return True
    return False


def fourth_root(x: ScalarK) -> InsepElem:
    """The fourth root of an element of K, inside K(t^(1/4)).

    With x = n/d in lowest terms, x = n d^3 / d^4, so it suffices to take
    the fourth root of the polynomial n d^3 coefficient-by-coefficient:
    the monomial c t^k contributes c^(1/4) t^(k//4) to coordinate k mod 4.
    """
    gf = x.gf
    e = x.num * x.den.pow(3)
    deg = e.deg()
    buckets: list[list] = [[], [], [], []]
    for k in range(deg + 1):
        c = e.coeff(k)
        if c:
            r, m = divmod(k, 4)
            lst = buckets[m]
            while len(lst) <= r:
                lst.append(0)
            lst[r] = gf.fourth_root(c)
    den = x.den
    coords = []
    for lst in buckets:
        num = UPoly.from_coeffs(gf, lst)
        coords.append(ScalarK(num, den))
    return InsepElem(tuple(coords))


def sqrt_in_quarter(x: ScalarK) -> InsepElem:
    """The square root of an element of K, as an element of K(t^(1/4))."""
    return fourth_root(x.square())


def is_fourth_power(x: ScalarK) -> bool:
    r = fourth_root(x)
    return r.in_base_field()


def subalgebra_dimension(gens) -> int:
    """Dimension over K of the subfield K(g1,...,gn) of K(t^(1/4)).

    Multiplicative closure of the K-span; the lattice of intermediate
    fields only allows dimensions 1, 2, 4.
    """
    gens = list(gens)
    if not gens:
        return 1
    gf = gens[0].gf
    basis: list[tuple] = []  # echelon rows as coordinate tuples

    def insert(vec) -> bool:
        vec = list(vec)
        for piv, row in basis:
            if vec[piv]:
                f = vec[piv] / row[piv]
                for i in range(4):
                    vec[i] = vec[i] + row[i] * f
        for i in range(4):
            if vec[i]:
                basis.append((i, tuple(vec)))
                return True
        return False

    reps = [InsepElem.one(gf)]
    insert(reps[0].coords)
    frontier = list(reps)
    while frontier and len(basis) < 4:
        nxt = []
        for r in frontier:
            for g in gens:
                p = r * g
                if insert(p.coords):
                    reps.append(p)
                    nxt.append(p)
        frontier = nxt
    return len(basis)
