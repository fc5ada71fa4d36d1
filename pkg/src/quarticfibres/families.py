"""The five families of plane quartic normal forms over K = F_q(t).

Every regular non-hyperelliptic geometrically rational curve of arithmetic
genus 3 in characteristic 2 lands in exactly one of the families I-V.  A
family is a quartic form in x, y, z whose coefficients are polynomial
expressions in up to four parameters a, b, c, d of K, subject to a
non-square/non-zero constraint list.  This module builds the forms,
validates the constraints, locates the singular point in the inseparable
closure, and computes the residue-degree profile of the chain of primes
sitting over the singularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (ConstraintViolation, InternalCheckFailed, NoSuchRow,
                     NotHomogeneous, UnsupportedFamily)
from .insep import InsepElem, fourth_root, sqrt_in_quarter, subalgebra_dimension
from .mpoly import MPoly, triform
from .scalars import KDomain, ScalarK


class FamilyTag(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FamilyParams:
    tag: FamilyTag
    a: ScalarK
    b: ScalarK
    c: ScalarK
    d: ScalarK

    @property
    def gf(self):
        return self.a.gf


def make_params(tag: FamilyTag, gf, a=None, b=None, c=None, d=None) -> FamilyParams:
    z = ScalarK.zero(gf)
    return FamilyParams(tag, a if a is not None else z,
                        b if b is not None else z,
                        c if c is not None else z,
                        d if d is not None else z)


@dataclass(frozen=True)
class QuarticModel:
    params: FamilyParams
    form: MPoly

    @property
    def tag(self) -> FamilyTag:
        return self.params.tag


@dataclass(frozen=True)
class SingularPointSpec:
    coords: tuple[InsepElem, InsepElem, InsepElem]

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ResidueProfile:
    deg_p: int
    deg_p1: int
    deg_p2: int
    deg_p3: int | None
    e: int
    e1: int


def _require(cond: bool, message: str):
    if not cond:
        raise ConstraintViolation(message)


def build_family(params: FamilyParams) -> QuarticModel:
    """Validate the parameter constraints and emit the quartic form."""
    tag = params.tag
    a, b, c, d = params.a, params.b, params.c, params.d
    gf = params.gf
    one = ScalarK.one(gf)
    if tag is FamilyTag.I:
        _require(not c.is_square(), "c ∈ K² for family I")
        _require(not d, "family I does not use d")
        terms = [((0, 4, 0), one), ((0, 0, 4), a), ((1, 0, 3), one),
                 ((2, 0, 2), b), ((4, 0, 0), c)]
    elif tag is FamilyTag.II:
        _require(not a.is_square(), "a ∈ K² for family II")
        _require(bool(b), "b = 0 for family II")
        terms = [((0, 4, 0), one), ((0, 0, 4), a), ((2, 2, 0), b),
                 ((2, 0, 2), c), ((3, 0, 1), b), ((4, 0, 0), d)]
    elif tag is FamilyTag.III:
        _require(not a.is_square(), "a ∈ K² for family III")
        _require(bool(b), "b = 0 for family III")
        _require(bool(c), "c = 0 for family III")
        bc3 = b * c ** 3
        terms = [((0, 4, 0), b), ((0, 0, 4), d), ((0, 2, 2), one),
                 ((1, 0, 3), one), ((2, 0, 2), b + b * bc3),
                 ((2, 2, 0), a), ((3, 0, 1), a),
                 ((4, 0, 0), a * b * bc3 + a.square() * d)]
    elif tag is FamilyTag.IV:
        _require(not b.is_square(), "b ∈ K² for family IV")
        _require(not d, "family IV does not use d")
        terms = [((0, 4, 0), one), ((0, 0, 4), a), ((1, 0, 3), one),
                 ((3, 0, 1), b), ((4, 0, 0), c)]
    elif tag is FamilyTag.V:
        _require(not a.is_square(), "a ∈ K² for family V")
        _require(not b.is_square(), "b ∈ K² for family V")
        _require(bool(d), "d = 0 for family V")
        bd = b * d
        terms = [((0, 4, 0), one), ((0, 2, 2), d), ((0, 0, 4), c + a),
                 ((1, 0, 3), d), ((2, 2, 0), bd), ((2, 0, 2), one),
                 ((3, 0, 1), bd), ((4, 0, 0), b.square() * c)]
    else:  # pragma: no cover
        raise UnsupportedFamily(f"unknown tag {tag}")
    return QuarticModel(params, triform(KDomain.get(gf), terms))


def singular_point(m: QuarticModel) -> SingularPointSpec:
    """The unique singular point, with coordinates in K(t^(1/4)).

    The curves are strange (no y in the partials), so the singular locus is
    cut out by F = F_x = F_z = 0; for each family the system collapses to
    explicit fourth/square roots of parameter expressions.
    """
    p = m.params
    a, b, c = p.a, p.b, p.c
    gf = p.gf
    one = InsepElem.one(gf)
    zero = InsepElem.zero(gf)
    if p.tag is FamilyTag.I:
        # F_x = z^3 and F_z = x z^2 force z = 0, leaving y^4 = c x^4.
        coords = (one, fourth_root(c), zero)
    elif p.tag is FamilyTag.II:
        # F_x = b x^2 z, F_z = b x^3 with b != 0 force x = 0: y^4 = a z^4.
        coords = (zero, fourth_root(a), one)
    elif p.tag is FamilyTag.III:
        coords = (one, fourth_root(a), sqrt_in_quarter(a))
    elif p.tag is FamilyTag.IV:
        coords = (one, fourth_root(a * b.square() + c), sqrt_in_quarter(b))
    else:
        coords = (one, fourth_root(a * b.square() + b), sqrt_in_quarter(b))
    point = {"x": coords[0], "y": coords[1], "z": coords[2]}
    for f in (m.form, m.form.partial("x"), m.form.partial("y"), m.form.partial("z")):
        v = f.eval_point(point, lift=InsepElem.from_scalar)
        if v:
            raise InternalCheckFailed(
                f"claimed singular point of family {p.tag} does not verify")
    return SingularPointSpec(coords)


def residue_profile(m: QuarticModel) -> ResidueProfile:
    """Residue degrees of the singular prime and its Frobenius pushdowns."""
    p = m.params
    a, b, c = p.a, p.b, p.c
    if p.tag is FamilyTag.III:
        deg_p = subalgebra_dimension([fourth_root(a)])
        deg_p1 = subalgebra_dimension([sqrt_in_quarter(a)])
        return ResidueProfile(deg_p, deg_p1, 1, None, 1, 1)
    if p.tag is FamilyTag.IV:
        u = a * b.square() + c
        rb = sqrt_in_quarter(b)
        deg_p = subalgebra_dimension([rb, fourth_root(u)])
        deg_p1 = subalgebra_dimension([rb, sqrt_in_quarter(u)])
        deg_p2 = subalgebra_dimension([rb])
    elif p.tag is FamilyTag.V:
        u = a * b.square() + b
        ra = sqrt_in_quarter(a)
        rb = sqrt_in_quarter(b)
        deg_p = subalgebra_dimension([ra, rb, fourth_root(u)])
        deg_p1 = subalgebra_dimension([ra, rb])
        deg_p2 = subalgebra_dimension([ra])
    else:
        raise UnsupportedFamily(
            f"no residue profile for family {p.tag} (singular prime is canonical)")
    e1 = 4 // deg_p1
    e = 8 // (deg_p * e1)
    return ResidueProfile(deg_p, deg_p1, deg_p2, 1, e, e1)


def invariant(m: QuarticModel) -> ScalarK | None:
    """Isomorphism invariant of the family, where one exists."""
    p = m.params
    a, b, c, d = p.a, p.b, p.c, p.d
    if p.tag is FamilyTag.II:
        return a * b.square() + c.square() + ScalarK.one(p.gf)
    if p.tag is FamilyTag.III:
        return b * c ** 3
    if p.tag is FamilyTag.V:
        return a * b.square() * d.square()
    return None


_TABLE = {
    (True, True, True): FamilyTag.I,
    (False, True, False): FamilyTag.II,
    (True, False, False): FamilyTag.III,
    (False, False, True): FamilyTag.IV,
    (False, False, False): FamilyTag.V,
}


def classify_by_table(p2_rational: bool, p_canonical: bool,
                      E_equals_F2: bool) -> FamilyTag:
    """Recover the family from the three intrinsic yes/no properties."""
    key = (bool(p2_rational), bool(p_canonical), bool(E_equals_F2))
    tag = _TABLE.get(key)
    if tag is None:
        raise NoSuchRow(f"no family with (p2 rational, p canonical, E=F2) = {key}")
    return tag


def is_strange(f: MPoly) -> bool:
    """All tangent lines through one point: equivalent to dF/dy = 0."""
    if not f.is_homogeneous():
        raise NotHomogeneous("strangeness is defined for homogeneous forms")
    return f.partial("y").is_zero()
