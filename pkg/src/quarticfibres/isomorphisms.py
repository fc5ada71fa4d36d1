"""Explicit K-isomorphisms between quartic models of the same family.

Two models of a family (III, IV or V) are isomorphic over K exactly when
a witness tuple of constants transforms one parameter vector into the
other; the same witness determines a fractional-linear substitution in
the curve generators.  `apply_iso` computes the target parameters,
`iso_maps` the substitution, and `verify_iso` replays the substitution
inside the target quartic and checks — after clearing denominators —
that the source quartic is reproduced up to a nonzero scalar.  That last
computation is the sole correctness oracle and is fully symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (ConstraintViolation, EpsilonZero, SubstitutionMismatch,
                     UnsupportedFamily)
from .families import (FamilyParams, FamilyTag, QuarticModel, build_family,
                       make_params)
from .mpoly import FORM_VARS, MPoly
from .scalars import KDomain, ScalarK

MU_NAMES = {
    FamilyTag.III: ("mu2", "mu3", "mu4", "mu5"),
    FamilyTag.IV: ("mu1", "mu2", "mu4", "mu5"),
    FamilyTag.V: ("mu2", "mu3", "mu4", "mu5"),
}


@dataclass(frozen=True)
class IsoWitness:
    tag: FamilyTag
    mus: tuple[ScalarK, ...]  # named per MU_NAMES[tag]

    def __post_init__(self):
        if self.tag not in MU_NAMES:
            raise UnsupportedFamily(f"no isomorphism data for family {self.tag}")
        if len(self.mus) != 4:
            raise ValueError("a witness carries four constants")

    @property
    def gf(self):
        return self.mus[0].gf

    def mu(self, name: str) -> ScalarK:
        return self.mus[MU_NAMES[self.tag].index(name)]

    def as_dict(self) -> dict:
        d = {"tag": self.tag.value}
        for name, v in zip(MU_NAMES[self.tag], self.mus):
            d[name] = str(v)
        return d


def make_witness(tag: FamilyTag, gf, **by_name) -> IsoWitness:
    z = ScalarK.zero(gf)
    return IsoWitness(tag, tuple(by_name.get(n, z) for n in MU_NAMES[tag]))


def identity_witness(tag: FamilyTag, gf) -> IsoWitness:
    return make_witness(tag, gf, mu4=ScalarK.one(gf))


def epsilon_gamma(w: IsoWitness, params: FamilyParams) -> tuple[ScalarK, ScalarK]:
    """The two derived constants; EpsilonZero iff mu4 = mu5 = 0.

    (For valid parameters the other root of epsilon would force a or b
    into K-squares, so the degenerate witness is the only zero locus.)
    """
    if w.tag is not params.tag:
        raise ConstraintViolation(
            f"witness is for family {w.tag}, model is family {params.tag}")
    m4, m5 = w.mus[2], w.mus[3]
    lever = params.a if w.tag is FamilyTag.III else params.b
    eps = m4.square() + m5.square() * lever
    if not eps:
        raise EpsilonZero("mu4 = mu5 = 0 gives no fractional-linear map")
    gamma = (w.mus[0].square() + w.mus[1].square() * lever) / eps
    return eps, gamma


def apply_iso(m: QuarticModel, w: IsoWitness) -> QuarticModel:
    """Transform the model parameters by the witness; validates the target."""
    p = m.params
    a, b, c, d = p.a, p.b, p.c, p.d
    eps, gamma = epsilon_gamma(w, p)
    gf = p.gf
    if w.tag is FamilyTag.III:
        mu3, mu4, mu5 = w.mu("mu3"), w.mu("mu4"), w.mu("mu5")
        k = mu4 * mu5 + mu3.square()
        target = make_params(
            FamilyTag.III, gf,
            a=(a + gamma.square()) / eps ** 6,
            b=b / eps ** 3,
            c=eps * c,
            d=(eps * k.square() * b + eps.square() * k
               + eps.square() * (mu5.square() * b.square() * c ** 3 + eps * d)))
    elif w.tag is FamilyTag.IV:
        mu2, mu4, mu5 = w.mu("mu2"), w.mu("mu4"), w.mu("mu5")
        cross = eps * mu4 * mu5 + mu2 ** 4
        hull = c + a * b.square()
        target = make_params(
            FamilyTag.IV, gf,
            a=eps.square() * a + cross + mu5 ** 4 * hull,
            b=b / eps ** 4,
            c=(c + gamma.square() + cross * b.square() / eps.square()
               + mu5 ** 4 * hull * b.square() / eps.square()) / eps ** 6)
    else:
        mu3, mu4, mu5 = w.mu("mu3"), w.mu("mu4"), w.mu("mu5")
        big = b + gamma.square()
        k = mu3.square() + mu4 * mu5
        # the k*(k + eps*d) term is forced: any other multiplier leaves a
        # k^2 + k residue in the substitution identity that verify_iso checks
        target = make_params(
            FamilyTag.V, gf,
            a=eps.square() * a * b.square() / big.square(),
            b=big / eps.square(),
            c=(eps.square() * (c + a) + (k + eps * d) * k
               + a * b.square() * (mu5 ** 4 + eps.square() / big.square())),
            d=eps * d)
    return build_family(target)


@dataclass(frozen=True)
class RationalMap:
    """num/den with num, den polynomials in the curve generators y, z."""
    num: MPoly
    den: MPoly

    def equals_poly(self, p: MPoly) -> bool:
        return self.num == p * self.den

    def __str__(self):
        return f"({self.num})/({self.den})"


@dataclass(frozen=True)
class IsoMaps:
    zmap: RationalMap
    ymap: RationalMap

    def is_identity(self) -> bool:
        dom = self.zmap.num.domain
        return (self.zmap.equals_poly(MPoly.var(FORM_VARS, dom, "z"))
                and self.ymap.equals_poly(MPoly.var(FORM_VARS, dom, "y")))


# denominator bookkeeping per family: z' and y' carry 1/(eps^ez D) and
# 1/(eps^ey D); clearing the affine quartic needs eps^L with L = max over
# the quartic monomials y^i z^j of ey*i + ez*j.
_EPS_POWERS = {FamilyTag.III: (3, 2, 12), FamilyTag.IV: (2, 2, 8),
               FamilyTag.V: (1, 1, 4)}


def iso_maps(w: IsoWitness, source: FamilyParams) -> IsoMaps:
    """The fractional-linear substitution (z', y') -> expressions in (z, y)."""
    eps, gamma = epsilon_gamma(w, source)
    gf = source.gf
    dom = KDomain.get(gf)
    y = MPoly.var(FORM_VARS, dom, "y")
    z = MPoly.var(FORM_VARS, dom, "z")
    k = lambda s: MPoly.const(FORM_VARS, dom, s)
    m4, m5 = w.mus[2], w.mus[3]
    lever = source.a if w.tag is FamilyTag.III else source.b
    dd = k(m4) + z.scale(m5)                 # mu4 + mu5 z
    pp = k(m5 * lever) + z.scale(m4)         # mu5*lever + mu4 z
    ez, ey, _ = _EPS_POWERS[w.tag]
    if w.tag is FamilyTag.IV:
        zn = pp
        yn = dd.scale(w.mu("mu1")) + pp.scale(w.mu("mu2")) + y.scale(eps)
    else:
        zn = dd.scale(gamma) + pp
        yn = dd.scale(w.mu("mu2")) + pp.scale(w.mu("mu3")) + y.scale(eps)
    den_z = dd.scale(eps ** ez)
    den_y = dd.scale(eps ** ey)
    return IsoMaps(RationalMap(zn, den_z), RationalMap(yn, den_y))


def verify_iso(source: QuarticModel, target: QuarticModel, w: IsoWitness) -> ScalarK:
    """Replay the substitution in the target quartic; return the scalar.

    Substituting the maps into the target's affine chart (x = 1) and
    multiplying through by eps^L (mu4 + mu5 z)^4 must reproduce the
    source affine quartic up to a nonzero constant, which is returned.
    Raises SubstitutionMismatch otherwise.
    """
    maps = iso_maps(w, source.params)
    eps, _ = epsilon_gamma(w, source.params)
    gf = source.params.gf
    dom = KDomain.get(gf)
    ez, ey, lcd = _EPS_POWERS[w.tag]
    zn, yn = maps.zmap.num, maps.ymap.num
    dd_num = MPoly.const(FORM_VARS, dom, w.mus[2]) \
        + MPoly.var(FORM_VARS, dom, "z").scale(w.mus[3])
    ypow = [MPoly.const(FORM_VARS, dom, ScalarK.one(gf))]
    zpow = [ypow[0]]
    dpow = [ypow[0]]
    for _ in range(4):
        ypow.append(ypow[-1] * yn)
        zpow.append(zpow[-1] * zn)
        dpow.append(dpow[-1] * dd_num)
    eps_pow = [ScalarK.one(gf)]
    for _ in range(lcd):
        eps_pow.append(eps_pow[-1] * eps)
    lifted = MPoly.zero(FORM_VARS, dom)
    for e, coeff in target.form.dehomogenize("x").terms.items():
        i, j = e[1], e[2]  # y-, z-exponents
        term = (ypow[i] * zpow[j] * dpow[4 - i - j]).scale(
            coeff * eps_pow[lcd - ey * i - ez * j])
        lifted = lifted + term
    src = source.form.dehomogenize("x")
    y4 = (0, 4, 0)
    s = lifted.coeff(y4) / src.coeff(y4)
    if not s or lifted != src.scale(s):
        raise SubstitutionMismatch(
            f"substituted target quartic is not a scalar multiple of the source "
            f"(family {w.tag})", residual=str(lifted + src.scale(s)))
    return s


def search_automorphisms(m: QuarticModel, sample, n: int) -> list[IsoWitness]:
    """Hunt for nontrivial self-maps: witnesses fixing the parameters whose
    substitution is not the identity.  Expected empty (the automorphism
    group of a non-hyperelliptic model is trivial)."""
    violations = []
    for _ in range(n):
        w = sample()
        try:
            target = apply_iso(m, w)
        except (EpsilonZero, ConstraintViolation):
            continue
        if target.params == m.params:
            if not iso_maps(w, m.params).is_identity():
                violations.append(w)
    return violations
