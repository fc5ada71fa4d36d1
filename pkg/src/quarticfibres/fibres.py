"""Geometric fibres of the quartic fibrations over finite fields of char 2.

Five fibrations are exposed by name.  Three come from the universal
families (their defining forms read verbatim from ``families``, with the
parameters specialised to field elements); two are pencils of plane
curves.  A fibre is a ternary form over GF(2^m), wrapped in
`PlaneCurveFq`, and the routines here measure it:

* ``singular_locus`` brute-forces the projective plane over the base
  field and its small extensions (the scans run through ``kernels``);
* ``multiplicity_at`` translates the point into an affine chart and
  reads off the lowest total degree;
* ``delta_invariant`` iterates blowups, summing m(m-1)/2 over the
  infinitely near points;
* ``tangent_contact_type`` restricts the quartic to the tangent line at
  a smooth point and factors the resulting binary quartic;
* ``classify_fibre`` runs the cascade square-root / linear-split /
  integral and returns a `FibreClass`.

Extension scans are capped: no enumeration touches a field beyond
2^12 elements, and locus searches stop at ``m * ext <= 8``.
"""

from dataclasses import dataclass

from . import kernels
from .errors import (BranchSplit, ConstraintViolation, NotSingular,
                     NotSmoothPoint, NotHomogeneous, PointNotOnCurve,
                     UnsupportedFamily, ZeroForm)
from .finitefield import GF, GFElem, FieldSpec
from .mpoly import MPoly, FORM_VARS

_CAP_BITS = 12      # largest enumerated field: GF(2^12)
_LOCUS_CAP = 8      # singular-locus scans stop at GF(2^8)


@dataclass(frozen=True)
class PlaneCurveFq:
    """A nonzero homogeneous ternary cubic or quartic over GF(2^m)."""

    form: MPoly
    field: FieldSpec

    def __post_init__(self):
        if self.form.is_zero():
            raise ZeroForm("the zero form does not cut out a curve")
        if not self.form.is_homogeneous():
            raise NotHomogeneous("fibres are cut out by homogeneous forms")
        if self.form.total_degree() not in (3, 4):
            raise ConstraintViolation(
                f"expected a cubic or quartic, got degree "
                f"{self.form.total_degree()}")

    @property
    def gf(self) -> GF:
        return self.field.field()

    def degree(self) -> int:
        return self.form.total_degree()


@dataclass(frozen=True)
class TangentType:
    """Contact profile of the tangent line with the curve.

    `profile` lists the intersection multiplicities of the distinct
    geometric contact points (conjugates listed separately), summing to
    the curve degree.
    """

    kind: str          # "Hyperflex4" | "Bitangent22" | "Other"
    profile: tuple


@dataclass(frozen=True)
class FibreClass:
    kind: str          # "IntegralQuartic" | "ConicPlusDoubleLine" |
                       # "DoubleConic" | "LinePlusTripleLine" | "Other"
    sing_point: tuple | None = None
    ext: int = 1
    multiplicity: int | None = None
    delta: int | None = None
    tangent: TangentType | None = None
    components: tuple = ()


# ----- fibration catalogue ------------------------------------------------


def _form(gf, items) -> MPoly:
    terms = {}
    for e, c in items:
        if not isinstance(c, GFElem):
            c = gf.elem(c)
        if c:
            terms[e] = terms.get(e, gf.zero_elem()) + c
    return MPoly(FORM_VARS, gf, {e: c for e, c in terms.items() if c})


def _pi3(gf, a, b, c, d):
    c3 = c * c * c
    return _form(gf, [
        ((0, 4, 0), b), ((0, 0, 4), d), ((0, 2, 2), gf.one_elem()),
        ((1, 0, 3), gf.one_elem()), ((2, 0, 2), b + b * b * c3),
        ((2, 2, 0), a), ((3, 0, 1), a), ((4, 0, 0), a * b * b * c3 + a * a * d),
    ])


def _pi4(gf, a, b, c):
    return _form(gf, [
        ((0, 4, 0), gf.one_elem()), ((0, 0, 4), a), ((1, 0, 3), gf.one_elem()),
        ((3, 0, 1), b), ((4, 0, 0), c),
    ])


def _pi5(gf, a, b, c, d):
    bd = b * d
    return _form(gf, [
        ((0, 4, 0), gf.one_elem()), ((0, 2, 2), d), ((0, 0, 4), c + a),
        ((1, 0, 3), d), ((2, 2, 0), bd), ((2, 0, 2), gf.one_elem()),
        ((3, 0, 1), bd), ((4, 0, 0), b * b * c),
    ])


def _pencil_quartic(gf, t0, t1):
    return _form(gf, [
        ((0, 4, 0), t0), ((1, 0, 3), t0), ((3, 0, 1), t1),
    ])


def _pencil_cubic(gf, t0, t1):
    # the cubic pencil's coordinates (u, v, w) are written (x, y, z) here
    return _form(gf, [
        ((1, 2, 0), t0), ((0, 0, 3), t0), ((2, 0, 1), t1),
    ])


FIBRATIONS = {
    "pi3": (4, _pi3),
    "pi4": (3, _pi4),
    "pi5": (4, _pi5),
    "pencil-quartic": (2, _pencil_quartic),
    "pencil-cubic": (2, _pencil_cubic),
}


def specialize_fibre(fibration: str, point, spec: FieldSpec) -> PlaneCurveFq:
    """The fibre of a named fibration over a parameter point."""
    if fibration not in FIBRATIONS:
        raise UnsupportedFamily(
            f"unknown fibration {fibration!r}; "
            f"choose from {sorted(FIBRATIONS)}")
    arity, builder = FIBRATIONS[fibration]
    if len(point) != arity:
        raise ConstraintViolation(
            f"{fibration} takes {arity} parameters, got {len(point)}")
    gf = spec.field()
    coords = [c if isinstance(c, GFElem) else gf.elem(c) for c in point]
    form = builder(gf, *coords)
    if form.is_zero():
        raise ZeroForm(f"fibre of {fibration} at this point is the zero form")
    return PlaneCurveFq(form, spec)


def predicted_singular_point(fibration: str, point, spec: FieldSpec):
    """Closed-form singular point of the generic integral fibres."""
    gf = spec.field()
    coords = [c if isinstance(c, GFElem) else gf.elem(c) for c in point]
    one = gf.one_elem()
    if fibration == "pi3":
        a = coords[0]
        return (one, a.fourth_root(), a.sqrt())
    if fibration == "pi4":
        a, b, c = coords
        return (one, (a * b * b + c).fourth_root(), b.sqrt())
    if fibration == "pi5":
        a, b, _, _ = coords
        return (one, (a * b * b + b).fourth_root(), b.sqrt())
    if fibration == "pencil-quartic":
        t0, t1 = coords
        if not t0:
            raise ConstraintViolation("the (0:1) member is not integral")
        return (one, gf.zero_elem(), (t1 / t0).sqrt())
    raise UnsupportedFamily(f"no closed-form location for {fibration!r}")


# ----- field plumbing -----------------------------------------------------


def _embed_form(f: MPoly, small: GF, big: GF) -> MPoly:
    if small.m == big.m:
        return f
    table = small.embedding_into(big)
    return MPoly(f.vars, big,
                 {e: GFElem(big, table[c.v]) for e, c in f.terms.items()})


def _coerce_point(curve: "PlaneCurveFq", point):
    """Raw-int coordinates are read in the curve's base field."""
    return tuple(c if isinstance(c, GFElem) else GFElem(curve.gf, c)
                 for c in point)


def _normalize_point(point):
    gf = point[0].gf
    for i, c in enumerate(point):
        if c:
            s = gf.one_elem() / c
            return tuple(x * s for x in point), i
    raise ConstraintViolation("(0:0:0) is not a projective point")


# ----- local charts -------------------------------------------------------


def _chart_local(form: MPoly, point) -> tuple[MPoly, int]:
    """Dehomogenize at the point's pivot and translate it to the origin."""
    p, i = _normalize_point(point)
    gf = p[0].gf
    f = _embed_form(form, form.domain, gf).dehomogenize(form.vars[i])
    mapping = {}
    for j, name in enumerate(form.vars):
        if j != i and p[j]:
            mapping[name] = (MPoly.var(form.vars, gf, name)
                             + MPoly.const(form.vars, gf, p[j]))
    if mapping:
        f = f.substitute(mapping)
    return f, i


def _mult_origin(f: MPoly) -> int:
    return min(sum(e) for e in f.terms)


def multiplicity_at(curve: PlaneCurveFq, point) -> int:
    """Multiplicity of the curve at a projective point (1 = smooth)."""
    local, _ = _chart_local(curve.form, _coerce_point(curve, point))
    if local.is_zero() or min(sum(e) for e in local.terms) == 0:
        raise PointNotOnCurve("the point does not lie on the curve")
    return _mult_origin(local)


# ----- singular locus -----------------------------------------------------


def singular_locus(curve: PlaneCurveFq, max_ext: int = 2) -> list:
    """Points where the form and its three partials vanish.

    Scans P^2 over GF(2^{m r}) for r = 1..max_ext (within the size cap),
    deduplicating points already seen over a subfield.  Returns a list
    of (point, r) with each point a GFElem triple over its own field.
    """
    base = curve.gf
    found = []          # (raw coords, r, gf)
    out = []
    for r in range(1, max_ext + 1):
        if base.m * r > _LOCUS_CAP:
            break
        gfr = GF.get(base.m * r)
        f = _embed_form(curve.form, base, gfr)
        seen = set()
        for coords, s, gfs in found:
            if r % s == 0:
                table = gfs.embedding_into(gfr)
                seen.add(tuple(table[v] for v in coords))
        for raw in kernels.scan_singular_points(f, gfr):
            if raw in seen:
                continue
            found.append((raw, r, gfr))
            out.append((tuple(GFElem(gfr, v) for v in raw), r))
    return out


def smooth_points(curve: PlaneCurveFq, limit: int | None = None,
                  ext: int = 1) -> list:
    """Points of the curve with multiplicity 1, rational over the base
    field (or its degree-`ext` extension), in scan order."""
    gf = curve.gf if ext == 1 else GF.get(curve.gf.m * ext)
    f = _embed_form(curve.form, curve.gf, gf)
    singular = set(kernels.scan_singular_points(f, gf))
    pts = []
    for raw in kernels.scan_zero_points(f, gf):
        if raw in singular:
            continue
        pts.append(tuple(GFElem(gf, v) for v in raw))
        if limit is not None and len(pts) >= limit:
            break
    return pts


# ----- univariate scratchpad ----------------------------------------------
# Coefficient lists (ascending, raw ints) over a GF; just enough division
# to count roots and test quadratic factors.


def _utrim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _ueval(cs, gf, x):
    acc = 0
    for c in reversed(cs):
        acc = gf.mul(acc, x) ^ c
    return acc


def _udivmod(cs, ds, gf):
    r = list(cs)
    q = [0] * max(len(r) - len(ds) + 1, 0)
    dl = gf.inv(ds[-1])
    while len(r) >= len(ds) and _utrim(r):
        k = len(r) - len(ds)
        c = gf.mul(r[-1], dl)
        q[k] = c
        for i, d in enumerate(ds):
            r[k + i] ^= gf.mul(c, d)
        _utrim(r)
    return _utrim(q), _utrim(r)


def _uroot_mult(cs, gf, alpha):
    """Multiplicity of alpha as a root, and the deflated polynomial."""
    n = 0
    while cs and _ueval(cs, gf, alpha) == 0:
        cs, _ = _udivmod(cs, [alpha, 1], gf)
        n += 1
    return n, cs


# ----- tangent contact ----------------------------------------------------


def _binary_profile(g: MPoly, gf) -> tuple:
    """Contact profile of a nonzero binary quartic: root multiplicities
    over the algebraic closure, conjugates counted separately."""
    d = g.total_degree()
    k0 = min(e[1] for e in g.terms)          # multiplicity of the root (1:0)
    profile = [k0] if k0 else []
    cs = [0] * (d - k0 + 1)
    for e, c in g.terms.items():
        cs[e[0]] = c.v
    prof_rest = []
    for alpha in range(gf.q):
        n, cs = _uroot_mult(cs, gf, alpha)
        if n:
            prof_rest.append(n)
    rest = len(cs) - 1 if cs else 0
    if rest == 2:
        prof_rest += [1, 1]
    elif rest == 3:
        prof_rest += [1, 1, 1]
    elif rest == 4:
        split = None
        for b in range(gf.q):
            for c in range(gf.q):
                q1, r1 = _udivmod(cs, [c, b, 1], gf)
                if not r1:
                    _, r2 = _udivmod(q1, [c, b, 1], gf)
                    split = [2, 2] if not r2 else [1, 1, 1, 1]
                    break
            if split:
                break
        prof_rest += split if split else [1, 1, 1, 1]
    return tuple(sorted(profile + prof_rest, reverse=True))


def tangent_contact_type(curve: PlaneCurveFq, point) -> TangentType:
    """Factor the restriction of the curve to its tangent line at a
    smooth point."""
    point = _coerce_point(curve, point)
    if multiplicity_at(curve, point) != 1:
        raise NotSmoothPoint("tangent contact is measured at smooth points")
    p, _ = _normalize_point(point)
    gf = p[0].gf
    f = _embed_form(curve.form, curve.gf, gf)
    vals = {name: c for name, c in zip(f.vars, p)}
    grad = [f.partial(name).eval_point(vals) for name in f.vars]
    j = next(i for i, c in enumerate(grad) if c)
    # two independent points spanning the tangent line
    spans = []
    for i in range(3):
        if i == j:
            continue
        v = [gf.zero_elem()] * 3
        v[i] = gf.one_elem()
        v[j] = grad[i] / grad[j]
        spans.append(v)
    s1, s2 = spans
    mapping = {
        name: MPoly.from_terms(f.vars, gf,
                               [((1, 0, 0), s1[i]), ((0, 1, 0), s2[i])])
        for i, name in enumerate(f.vars)
    }
    g = f.substitute(mapping)
    if g.is_zero():
        raise ConstraintViolation("the tangent line is a component")
    if g.total_degree() != curve.degree():
        raise ConstraintViolation(
            "tangent restriction degenerated")  # pragma: no cover
    profile = _binary_profile(g, gf)
    if profile == (4,):
        kind = "Hyperflex4"
    elif profile == (2, 2):
        kind = "Bitangent22"
    else:
        kind = "Other"
    return TangentType(kind, profile)


# ----- delta invariant ----------------------------------------------------


def _leading_coeffs(f: MPoly, m: int, iu: int, iv: int):
    """Binary leading form c_k u^k v^(m-k) as a list indexed by k."""
    cs = [0] * (m + 1)
    for e, c in f.terms.items():
        if sum(e) == m:
            cs[e[iu]] = c.v
    return cs


def _directions(f: MPoly, m: int, iu: int, iv: int, gf):
    """Roots of the leading binary form: (eta, mult, gf) per finite
    direction plus the multiplicity of the vertical direction (0:1)."""
    cs = _leading_coeffs(f, m, iu, iv)
    # L(1, eta) has coefficient c_{m-j} on eta^j
    h = _utrim([cs[m - j] for j in range(m + 1)])
    vertical = m - (len(h) - 1 if h else 0)
    roots = []
    remaining = len(h) - 1 if h else 0
    images = []
    r = 1
    while remaining > 0:
        if gf.m * r > _CAP_BITS:
            raise ConstraintViolation(
                "blowup direction lies beyond the enumeration cap")
        gfr = GF.get(gf.m * r)
        table = gf.embedding_into(gfr)
        hr = [table[c] for c in h]
        skip = set()
        for alpha, s, gfs in images:
            if r % s == 0:
                t2 = gfs.embedding_into(gfr)
                skip.add(t2[alpha])
        for alpha in range(gfr.q):
            if remaining == 0:
                break
            if alpha in skip or not hr:
                continue
            n, hr2 = _uroot_mult(list(hr), gfr, alpha)
            if n:
                roots.append((alpha, n, gfr))
                images.append((alpha, r, gfr))
                remaining -= n
                hr = hr2
        r += 1
    return roots, vertical


def _shift_out(f: MPoly, idx: int, k: int) -> MPoly:
    terms = {}
    for e, c in f.terms.items():
        e2 = list(e)
        e2[idx] -= k
        terms[tuple(e2)] = c
    return MPoly(f.vars, f.domain, terms)


def delta_invariant(curve: PlaneCurveFq, point) -> tuple[int, tuple]:
    """Delta invariant at a singular point and the multiplicity sequence
    of the infinitely near points (depth-first when branches split)."""
    local, pivot = _chart_local(curve.form, _coerce_point(curve, point))
    if _mult_origin(local) < 2:
        raise NotSingular("the delta invariant needs a singular point")
    iu, iv = [i for i in range(3) if i != pivot]
    nu, nv = local.vars[iu], local.vars[iv]
    delta = 0
    seq = []
    stack = [local]
    while stack:
        f = stack.pop()
        gf = f.domain
        m = _mult_origin(f)
        seq.append(m)
        if m < 2:
            continue
        delta += m * (m - 1) // 2
        roots, vertical = _directions(f, m, iu, iv, gf)
        nxt = []
        if vertical:
            u_var = MPoly.var(f.vars, gf, nu)
            v_var = MPoly.var(f.vars, gf, nv)
            g = f.substitute({nu: u_var * v_var})
            nxt.append(_shift_out(g, iv, m))
        for alpha, _, gfr in sorted(roots, key=lambda t: (t[2].m, t[0])):
            fr = _embed_form(f, gf, gfr)
            u_var = MPoly.var(f.vars, gfr, nu)
            v_var = MPoly.var(f.vars, gfr, nv)
            eta = MPoly.const(f.vars, gfr, GFElem(gfr, alpha))
            g = fr.substitute({nv: u_var * (eta + v_var)})
            nxt.append(_shift_out(g, iu, m))
        stack.extend(reversed(nxt))
    return delta, tuple(seq)


# ----- classification -----------------------------------------------------


def _line_poly(gf, triple):
    return MPoly.from_terms(
        FORM_VARS, gf,
        [(tuple(1 if k == i else 0 for k in range(3)), GFElem(gf, v))
         for i, v in enumerate(triple) if v])


def _split_lines(form: MPoly, gf, max_ext: int):
    """Peel off linear factors by trial division; returns the factors
    grouped with multiplicities, the cofactor, and the working field."""
    rem = form
    cur = gf
    factors = {}
    rounds = (1,) if max_ext <= 1 else (1, max_ext)
    for r in rounds:
        if gf.m * r > _LOCUS_CAP:
            break
        if gf.m * r > cur.m:
            big = GF.get(gf.m * r)
            table = cur.embedding_into(big)
            rem = _embed_form(rem, cur, big)
            factors = {tuple(table[v] for v in t): (mult, big)
                       for t, (mult, _) in factors.items()}
            cur = big
        progress = True
        while rem.total_degree() > 0 and progress:
            progress = False
            for triple in kernels.plane_points(cur.q):
                t = tuple(int(v) for v in triple)
                q = rem.divide(_line_poly(cur, t))
                if q is not None:
                    mult, _ = factors.get(t, (0, cur))
                    factors[t] = (mult + 1, cur)
                    rem = q
                    progress = True
                    break
        if rem.total_degree() == 0:
            break
    return factors, rem, cur


def _is_smooth_conic(conic: MPoly, gf) -> bool:
    if conic.total_degree() != 2 or not conic.is_homogeneous():
        return False
    if conic.square_root() is not None:
        return False
    # a singular conic's vertex is cut out by linear forms, hence rational
    return not kernels.scan_singular_points(conic, gf)


def _even_y_monic(form: MPoly) -> bool:
    return bool(form.coeff((0, 4, 0))) and all(e[1] % 2 == 0
                                               for e in form.terms)


def _quad_roots(a, b, gf):
    """Roots of X^2 + aX + b in gf (raw ints)."""
    return [x for x in range(gf.q)
            if gf.mul(x, x) ^ gf.mul(a, x) ^ b == 0]


def _biconic_split(form: MPoly, gf, max_ext: int = 2):
    """Try to write a quartic with only even y-exponents as a product
    (y^2+v)(y^2+w) of distinct strange conics, over the base field or
    its quadratic extension (conjugate pairs).  For such quartics this
    is the only factorization shape left once squares and rational
    linear factors are ruled out: an odd-y conic factor would force its
    cofactor to share the odd part, making the product a square."""
    lead = form.coeff((0, 4, 0))
    f = form if lead.v == 1 else form.scale(lead.gf.one_elem() / lead)
    acs = [f.coeff((2, 2, 0)).v, f.coeff((1, 2, 1)).v, f.coeff((0, 2, 2)).v]
    bcs = [f.coeff((4, 0, 0)).v, f.coeff((3, 0, 1)).v, f.coeff((2, 0, 2)).v,
           f.coeff((1, 0, 3)).v, f.coeff((0, 0, 4)).v]
    for r in (1, 2):
        if r > max_ext or gf.m * r > _LOCUS_CAP:
            break
        gfr = gf if r == 1 else GF.get(gf.m * r)
        table = None if r == 1 else gf.embedding_into(gfr)
        a2, a1, a0 = acs if r == 1 else [table[v] for v in acs]
        b4, b3, b2, b1, b0 = bcs if r == 1 else [table[v] for v in bcs]
        mul = gfr.mul
        for p in _quad_roots(a2, b4, gfr):
            for s in _quad_roots(a0, b0, gfr):
                for q in range(gfr.q):
                    if (mul(p, a1) ^ mul(q, a2)) != b3:
                        continue
                    if (mul(q, a0) ^ mul(s, a1)) != b1:
                        continue
                    if (mul(p, a0) ^ mul(q, a1) ^ mul(s, a2)
                            ^ mul(q, q)) != b2:
                        continue
                    v = (p, q, s)
                    w = (a2 ^ p, a1 ^ q, a0 ^ s)
                    if v == w:
                        continue  # a perfect square, handled earlier
                    one = gfr.one_elem()
                    pair = tuple(MPoly.from_terms(FORM_VARS, gfr, [
                        ((0, 2, 0), one),
                        ((2, 0, 0), GFElem(gfr, t[0])),
                        ((1, 0, 1), GFElem(gfr, t[1])),
                        ((0, 0, 2), GFElem(gfr, t[2]))]) for t in (v, w))
                    return pair[0], pair[1], gfr
    return None


def classify_fibre(curve: PlaneCurveFq, max_ext: int = 2) -> FibreClass:
    """Coarse classification used for the degenerate-fibre tables."""
    if curve.degree() != 4:
        raise ConstraintViolation("the classification taxonomy is quartic")
    gf = curve.gf
    root = curve.form.square_root()
    if root is not None and _is_smooth_conic(root, gf):
        return FibreClass(kind="DoubleConic",
                          components=((str(root), 2),))
    # with only even powers of y and a y^4 term, every linear factor is
    # rational over the base field, so line peeling need not extend
    even_y = _even_y_monic(curve.form)
    factors, rem, cur = _split_lines(curve.form, gf,
                                     1 if even_y else max_ext)
    if factors:
        comps = tuple(sorted(
            (str(_line_poly(fgf, t)), mult)
            for t, (mult, fgf) in factors.items()))
        if rem.total_degree() == 0:
            mults = sorted(m for _, m in comps)
            if mults == [1, 3]:
                return FibreClass(kind="LinePlusTripleLine", components=comps)
            return FibreClass(kind="Other", components=comps)
        if (rem.total_degree() == 2 and len(factors) == 1
                and next(iter(factors.values()))[0] == 2
                and _is_smooth_conic(rem, cur)):
            return FibreClass(kind="ConicPlusDoubleLine",
                              components=comps + ((str(rem), 1),))
        return FibreClass(kind="Other",
                          components=comps + ((str(rem), 1),))
    if even_y:
        split = _biconic_split(curve.form, gf, max_ext)
        if split is not None:
            c0, c1, sgf = split
            return FibreClass(kind="Other", ext=sgf.m // gf.m,
                              components=tuple(sorted(
                                  ((str(c0), 1), (str(c1), 1)))))
    sing = singular_locus(curve, max_ext=max_ext)
    if not sing:
        return FibreClass(kind="IntegralQuartic")  # smooth: nothing to report
    point, ext = sing[0]
    mult = multiplicity_at(curve, point)
    delta, _ = delta_invariant(curve, point)
    tangent = None
    sample = smooth_points(curve, limit=1)
    if sample:
        tangent = tangent_contact_type(curve, sample[0])
    return FibreClass(kind="IntegralQuartic",
                      sing_point=point, ext=ext, multiplicity=mult,
                      delta=delta, tangent=tangent)
