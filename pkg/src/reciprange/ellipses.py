"""Elliptical decomposition of the curve for n = 4, 5, 6.

Criteria on the xi-parameters decide when the boundary generating curve is a
union of ellipses (all origin-centered, or one central plus a displaced pair);
every positive verdict is confirmed by explicit polynomial division before it
is reported.  A brute-force decomposition search over candidate foci
(from the exact spectrum) and minor half-axes (from Im A) serves as an
independent oracle for the criteria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import concentric6
from .bipoly import ZetaPoly, displaced_pair_factor, linear_factor
from .errors import InvalidInputError, UnsupportedDimensionError
from .kippenhahn import KippenhahnPolynomial, build_poly_from_scalars, closed_form_poly
from .matrices import as_xi, exact_spectrum
from .numberfield import COS7, PHI, ROOT3, SQRT3, SQRT5, TWO_COS_PI7

ALL_CONCENTRIC = "ALL_CONCENTRIC"
DISPLACED_PAIR = "DISPLACED_PAIR"
MIXED_NONE = "MIXED_NONE"
DEGENERATE_SPECTRUM = "DEGENERATE_SPECTRUM"

ABS_FLOOR = 1e-12
DEFAULT_TOL = 1e-9

PHI_F = (math.sqrt(5) + 1) / 2
COS_PI7 = math.cos(math.pi / 7)
COS_2PI7 = math.cos(2 * math.pi / 7)
COS_3PI7 = math.cos(3 * math.pi / 7)

#: the six positive solutions (X0, X, p) of the displaced-configuration system
XP_TABLE = {
    "i": (2 * COS_PI7, COS_2PI7 - COS_3PI7, COS_2PI7 + COS_3PI7),
    "ii": (2 * COS_PI7, COS_2PI7 + COS_3PI7, COS_2PI7 - COS_3PI7),
    "iii": (2 * COS_2PI7, COS_PI7 - COS_3PI7, COS_PI7 + COS_3PI7),
    "iv": (2 * COS_2PI7, COS_PI7 + COS_3PI7, COS_PI7 - COS_3PI7),
    "v": (2 * COS_3PI7, COS_PI7 - COS_2PI7, COS_PI7 + COS_2PI7),
    "vi": (2 * COS_3PI7, COS_PI7 + COS_2PI7, COS_PI7 - COS_2PI7),
}


def solve_Xp_table():
    """Rows (i)..(vi) of the displaced-configuration solution table."""
    return [XP_TABLE[k] for k in ("i", "ii", "iii", "iv", "v", "vi")]


@dataclass(frozen=True)
class EllipseComponent:
    """One elliptical component: real center, half focal distance, minor half-axis."""

    center: float
    half_focal: float
    minor_half_axis: float
    degenerate: bool = False

    @property
    def foci(self):
        return (self.center - self.half_focal, self.center + self.half_focal)

    @property
    def major_half_axis(self):
        return math.sqrt(self.minor_half_axis**2 + self.half_focal**2)

    def to_json_dict(self):
        return {
            "p": self.center,
            "X": self.half_focal,
            "c": self.minor_half_axis,
            "foci": list(self.foci),
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class PEllipseCoefficients:
    """Coefficients of the quadratic Kippenhahn factor of a 2x2 matrix."""

    p: float
    q: float
    x: float
    y: float
    z: float

    @property
    def c_sq(self):
        return self.z - math.hypot(self.x, self.y)


def ellipse_of_2x2(zeta1, zeta2, frobenius_norm_sq, tol=DEFAULT_TOL):
    """Elliptical range data of a 2x2 matrix: foci at its eigenvalues, minor
    axis length sqrt(||A||_F^2 - |zeta1|^2 - |zeta2|^2)."""
    zeta1, zeta2 = complex(zeta1), complex(zeta2)
    deficit = frobenius_norm_sq - abs(zeta1) ** 2 - abs(zeta2) ** 2
    if deficit < -max(ABS_FLOOR, tol * max(1.0, abs(frobenius_norm_sq))):
        raise InvalidInputError(
            f"Frobenius norm too small: ||A||_F^2 - |z1|^2 - |z2|^2 = {deficit}"
        )
    c = math.sqrt(max(0.0, deficit)) / 2
    s, d = zeta1 + zeta2, zeta1 - zeta2
    coeffs = PEllipseCoefficients(
        p=s.real / 2,
        q=s.imag / 2,
        x=(d * d).real / 8,
        y=d.real * d.imag / 4,
        z=abs(d) ** 2 / 8 + c * c,
    )
    comp = EllipseComponent(
        center=coeffs.p,
        half_focal=abs(d) / 2,
        minor_half_axis=c,
        degenerate=c <= math.sqrt(ABS_FLOOR),
    )
    return coeffs, comp


def _as_zeta_poly(P):
    return P.poly if isinstance(P, KippenhahnPolynomial) else P


def _remainder_small(rem: ZetaPoly, scale, tol):
    exact = any(
        isinstance(c, Fraction) or type(c).__name__ == "FieldElement"
        for cs in rem.coeffs
        for c in cs
    )
    if exact:
        return all(not c for cs in rem.coeffs for c in cs)
    m = max((abs(float(c)) for cs in rem.coeffs for c in cs), default=0.0)
    return m <= tol * max(1.0, float(scale))


def divides_linear(P, x_sq, c_sq, tol=DEFAULT_TOL, scale=None):
    """Divide by zeta - (X^2 rho + c^2); quotient on success, None otherwise.

    ``scale`` sets the remainder threshold reference (defaults to the
    dividend's own coefficient norm); chained divisions should pass the
    original polynomial's norm.
    """
    poly = _as_zeta_poly(P)
    one = poly.coeffs[-1][0]
    q, r = poly.divmod_monic(linear_factor(x_sq, c_sq, one=one))
    return q if _remainder_small(r, scale or poly.max_abs_coeff(), tol) else None


def divides_quadratic(P, p, x_half, c, tol=DEFAULT_TOL, scale=None):
    """Divide by the displaced-pair quadratic; quotient on success, None otherwise."""
    poly = _as_zeta_poly(P)
    one = poly.coeffs[-1][0]
    q, r = poly.divmod_monic(displaced_pair_factor(p, x_half, c, one=one))
    return q if _remainder_small(r, scale or poly.max_abs_coeff(), tol) else None


def divides_quadratic_from_squares(P, sum_sq, diff_sq, c_sq, tol=DEFAULT_TOL, scale=None):
    """Like divides_quadratic but parameterized by X^2+p^2, X^2-p^2, c^2, so
    exact backends can stay inside their number field."""
    poly = _as_zeta_poly(P)
    one = poly.coeffs[-1][0]
    zero = one * 0
    m = [c_sq, sum_sq]
    nn = [c_sq, diff_sq]
    const = [nn[0] * nn[0], 2 * nn[0] * nn[1], nn[1] * nn[1]]
    divisor = ZetaPoly([const, [m[0] * -2, m[1] * -2], [one, zero, zero]])
    q, r = poly.divmod_monic(divisor)
    return q if _remainder_small(r, scale or poly.max_abs_coeff(), tol) else None


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    xi: tuple
    verdict: str
    criterion: str | None = None
    k: object = None  # branch index (concentric families) or the de-family ratio
    table_row: str | None = None
    ellipses: tuple = field(default_factory=tuple)
    origin_component: bool = False
    mode: str = "float"
    #: the criterion-exact parameters the confirming division ran on (None for
    #: negative verdicts); equals xi up to the match tolerance
    snapped_xi: tuple | None = None

    def to_json_dict(self):
        return {
            "verdict": self.verdict,
            "criterion": self.criterion,
            "k": self.k,
            "table_row": self.table_row,
            "ellipses": [e.to_json_dict() for e in self.ellipses],
            "origin_component": self.origin_component,
        }

    def central(self):
        return next((e for e in self.ellipses if e.center == 0), None)

    def displaced(self):
        return tuple(e for e in self.ellipses if e.center != 0)


class _FloatCtx:
    mode = "float"

    def __init__(self, tol):
        self.tol = tol
        self.phi = PHI_F
        self.sqrt3 = math.sqrt(3)
        self.cosp = (COS_PI7, COS_2PI7, COS_3PI7)
        self.k_values = (2 * COS_PI7, 2 * COS_3PI7)

    def convert(self, v):
        return float(v)

    def eq(self, a, b, scale=1.0):
        a, b = float(a), float(b)
        return abs(a - b) <= max(ABS_FLOOR, self.tol * max(scale, abs(a), abs(b)))

    def is_zero(self, a, scale=1.0):
        return self.eq(a, 0.0, scale)


class _ExtendedCtx:
    mode = "extended"

    def __init__(self, tol, dps=50):
        import mpmath

        self.mp = mpmath.mp
        self.mp.dps = dps
        self.mpm = mpmath
        # 50-digit arithmetic; the tolerance stays caller-controlled so exact
        # (Fraction) inputs can be pushed to ~1e-45 while double-rounded inputs
        # still verify at 1e-9.
        self.tol = tol
        self.phi = (self.mpm.sqrt(5) + 1) / 2
        self.sqrt3 = self.mpm.sqrt(3)
        self.cosp = tuple(self.mpm.cos(j * self.mpm.pi / 7) for j in (1, 2, 3))
        self.k_values = (2 * self.cosp[0], 2 * self.cosp[2])

    def convert(self, v):
        if hasattr(v, "_mpf_"):
            return v
        if isinstance(v, Fraction):
            return self.mpm.mpf(v.numerator) / self.mpm.mpf(v.denominator)
        return self.mpm.mpf(v)

    def eq(self, a, b, scale=1.0):
        a, b = self.convert(a), self.convert(b)
        m = max(self.convert(scale), abs(a), abs(b), self.convert(1))
        return abs(a - b) <= self.tol * m

    def is_zero(self, a, scale=1.0):
        return self.eq(a, 0, scale)


class _ExactCtx:
    mode = "exact"
    tol = 0

    def __init__(self):
        self.phi = PHI
        self.sqrt3 = ROOT3
        self.cosp = tuple(TWO_COS_PI7[j] / 2 for j in (1, 2, 3))
        self.k_values = (TWO_COS_PI7[1], TWO_COS_PI7[3])

    def convert(self, v):
        return Fraction(v) if not isinstance(v, Fraction) else v

    def eq(self, a, b, scale=None):
        return a == b

    def is_zero(self, a, scale=None):
        return not a


def _make_ctx(mode, tol):
    if mode == "float":
        return _FloatCtx(tol)
    if mode == "extended":
        return _ExtendedCtx(tol)
    if mode == "exact":
        return _ExactCtx()
    raise InvalidInputError(f"unknown mode {mode!r}")


def _poly_for_ctx(xi, ctx):
    if ctx.mode == "exact":
        return closed_form_poly([Fraction(v) for v in xi], exact=True)
    if ctx.mode == "float":
        return closed_form_poly(xi)
    # extended: exact rational coefficients re-expressed as 50-digit floats
    P = closed_form_poly([Fraction(v) for v in xi], exact=True)
    mpf = ctx.mpm.mpf
    P.poly.coeffs = [[mpf(c.numerator) / mpf(c.denominator) for c in cs] for cs in P.poly.coeffs]
    return P


def classify(xi, mode="float", tol=DEFAULT_TOL):
    """Classify the curve of a reciprocal matrix with n in {4, 5, 6}.

    Verdicts: ALL_CONCENTRIC, DISPLACED_PAIR, MIXED_NONE (not a pure union of
    ellipses), DEGENERATE_SPECTRUM (all xi vanish; the curve is the spectrum).
    Positive verdicts are only reported after the corresponding polynomial
    division succeeds at the same tolerance.
    """
    xi = as_xi(xi)
    n = xi.n
    if n not in (4, 5, 6):
        raise UnsupportedDimensionError(f"classification covers n in 4..6, got {n}")
    ctx = _make_ctx(mode, tol)
    x = [ctx.convert(v) for v in xi]
    scale = max([1.0] + [abs(float(v)) for v in x])
    odd = n % 2 == 1

    def report(**kw):
        return ClassificationReport(n=n, xi=tuple(float(v) for v in xi), mode=mode,
                                    origin_component=odd, **kw)

    if all(ctx.is_zero(v, scale) for v in x):
        return report(verdict=DEGENERATE_SPECTRUM)

    P = _poly_for_ctx(xi, ctx)
    dtol = getattr(ctx, "tol", 0) or tol

    if n == 4:
        return _classify4(x, P, ctx, dtol, scale, report)
    if n == 5:
        return _classify5(x, P, ctx, dtol, scale, report)
    return _classify6(x, P, ctx, dtol, scale, report)


def _sqrt_float(v):
    return math.sqrt(max(0.0, float(v)))


def _snap_poly(ctx, x_snapped, original_P):
    """Kippenhahn polynomial of the criterion-exact (snapped) parameters.

    In exact mode detection already required exact equality, so the original
    polynomial is reused; the scalar modes rebuild from the snapped values so
    the confirming division measures only roundoff, not the match distance.
    """
    if ctx.mode == "exact":
        return original_P
    one = ctx.convert(1)
    return KippenhahnPolynomial(len(x_snapped) + 1, build_poly_from_scalars(list(x_snapped), one))


def _classify4(x, P, ctx, dtol, scale, report):
    phi = ctx.phi
    inv_phi = 1 / phi
    branches = []
    if ctx.eq(x[1], phi * x[0] - inv_phi * x[2], scale):
        branches.append(1)
    if ctx.eq(x[1], phi * x[2] - inv_phi * x[0], scale):
        branches.append(2)
    for br in branches:
        big, small = (x[0], x[2]) if br == 1 else (x[2], x[0])
        snapped = [x[0], phi * big - inv_phi * small, x[2]]
        Ps = _snap_poly(ctx, snapped, P)
        q = divides_linear(Ps, phi * phi, phi * phi * big, tol=dtol)
        if q is None:
            continue
        q2 = divides_linear(q, inv_phi * inv_phi, inv_phi * inv_phi * small, tol=dtol,
                            scale=None if ctx.mode == "exact" else float(Ps.poly.max_abs_coeff()))
        if q2 is None:
            continue
        c1 = _sqrt_float(big) * float(phi)
        c2 = _sqrt_float(small) / float(phi)
        ells = (
            EllipseComponent(0.0, PHI_F, c1, degenerate=c1 <= 1e-9),
            EllipseComponent(0.0, 1 / PHI_F, c2, degenerate=c2 <= 1e-9),
        )
        k = branches if len(branches) == 2 else branches[0]
        return report(verdict=ALL_CONCENTRIC, criterion="con4", k=k, ellipses=ells,
                      snapped_xi=tuple(float(v) for v in snapped))
    if ctx.is_zero(x[1], scale) and ctx.eq(x[0], x[2], scale) and not ctx.is_zero(x[0], scale):
        c_sq = (x[0] + x[2]) / 2
        Ps = _snap_poly(ctx, [c_sq, x[1] * 0, c_sq], P)
        sum_sq = ctx.convert(Fraction(3, 2)) if ctx.mode != "float" else 1.5
        diff_sq = ctx.convert(1) if ctx.mode != "float" else 1.0
        q = divides_quadratic_from_squares(Ps, sum_sq, diff_sq, c_sq, tol=dtol)
        if q is not None:
            c = _sqrt_float(c_sq)
            ells = (
                EllipseComponent(0.5, math.sqrt(5) / 2, c),
                EllipseComponent(-0.5, math.sqrt(5) / 2, c),
            )
            return report(verdict=DISPLACED_PAIR, criterion="noncon4", ellipses=ells,
                          snapped_xi=(float(c_sq), 0.0, float(c_sq)))
    return report(verdict=MIXED_NONE)


def _classify5(x, P, ctx, dtol, scale, report):
    branches = []
    if ctx.eq(x[0], x[3], scale):
        branches.append(1)
    if ctx.eq(x[0] - x[3], 2 * (x[2] - x[1]), scale):
        branches.append(2)
    for br in branches:
        if br == 1:
            m = (x[0] + x[3]) / 2
            snapped = [m, x[1], x[2], m]
        else:
            snapped = [x[0], x[1], x[1] + (x[0] - x[3]) / 2, x[3]]
        c_in_sq = (snapped[0] + snapped[3]) / 2
        c_out_sq = snapped[1] + snapped[2] + c_in_sq
        Ps = _snap_poly(ctx, snapped, P)
        pn = None if ctx.mode == "exact" else float(Ps.poly.max_abs_coeff())
        q = divides_linear(Ps, ctx.convert(3), c_out_sq, tol=dtol)
        if q is None:
            continue
        q2 = divides_linear(q, ctx.convert(1), c_in_sq, tol=dtol, scale=pn)
        if q2 is None:
            continue
        c_in, c_out = _sqrt_float(c_in_sq), _sqrt_float(c_out_sq)
        ells = (
            EllipseComponent(0.0, math.sqrt(3), c_out, degenerate=c_out <= 1e-9),
            EllipseComponent(0.0, 1.0, c_in, degenerate=c_in <= 1e-9),
        )
        k = branches if len(branches) == 2 else branches[0]
        return report(verdict=ALL_CONCENTRIC, criterion="con5", k=k, ellipses=ells,
                      snapped_xi=tuple(float(v) for v in snapped))
    s3 = ctx.sqrt3
    pair_sum = x[1] + x[2]
    if (
        ctx.is_zero(x[1] * x[2], scale * scale)
        and not ctx.is_zero(pair_sum, scale)
        and ctx.eq(x[0], s3 / 2 * pair_sum + x[2], scale)
        and ctx.eq(x[3], s3 / 2 * pair_sum + x[1], scale)
    ):
        # snap the smaller of xi2, xi3 to zero and rebuild xi1, xi4
        zero2 = abs(float(x[1])) <= abs(float(x[2]))
        xi2 = x[1] * 0 if zero2 else x[1]
        xi3 = x[2] if zero2 else x[2] * 0
        s = xi2 + xi3
        snapped = [s3 / 2 * s + xi3, xi2, xi3, s3 / 2 * s + xi2]
        c_sq = (2 + s3) / 2 * s
        Ps = _snap_poly(ctx, snapped, P)
        q = divides_quadratic_from_squares(Ps, ctx.convert(2), s3, c_sq, tol=dtol)
        if q is not None:
            c = _sqrt_float(c_sq)
            p = (math.sqrt(3) - 1) / 2
            X = (math.sqrt(3) + 1) / 2
            ells = (
                EllipseComponent(p, X, c),
                EllipseComponent(-p, X, c),
            )
            return report(verdict=DISPLACED_PAIR, criterion="noncon5", ellipses=ells,
                          snapped_xi=tuple(float(v) for v in snapped))
    return report(verdict=MIXED_NONE)


def _classify6(x, P, ctx, dtol, scale, report):
    exact = ctx.mode == "exact"
    # three concentric ellipses: solve the linear system for the axes
    t, residuals = concentric6.candidate_axes(
        x, exact=exact, mpm=getattr(ctx, "mpm", None)
    )
    res_ok = all(ctx.is_zero(r, scale**3 + scale) for r in residuals)
    sign_slack = 0.0 if exact else dtol * scale
    if res_ok and all(float(v) >= -sign_slack for v in t):
        if exact:
            tc = list(t)
        elif ctx.mode == "extended":
            tc = [v if v > 0 else v * 0 for v in t]
        else:
            tc = [max(0.0, float(v)) for v in t]
        q = P
        ok = True
        # the division remainder re-expresses the matching residuals, amplified
        # by coefficient magnitudes; keep its threshold consistent with res_ok
        conf_scale = None if exact else 4 * (scale**3 + scale)
        s_vals = [4 * c * c for c in ctx.cosp]
        for sj, tj in zip(s_vals, tc):
            q = divides_linear(q, sj, tj, tol=dtol, scale=conf_scale)
            if q is None:
                ok = False
                break
        if ok:
            ells = tuple(
                EllipseComponent(0.0, 2 * math.cos((j + 1) * math.pi / 7), _sqrt_float(tj),
                                 degenerate=_sqrt_float(tj) <= 1e-9)
                for j, tj in enumerate(tc)
            )
            return report(verdict=ALL_CONCENTRIC, criterion="3conel", ellipses=ells,
                          snapped_xi=tuple(float(v) for v in x))

    # displaced families
    cand = _match_de_family(x, ctx, scale)
    if cand is not None:
        crit, kval, row, snapped = cand
        X0, X, p = XP_TABLE[row]
        # rows (ii)/(vi): X, p = cos(a pi/7) +- cos(b pi/7) with (a,b) below
        a, b = (1, 2) if row == "ii" else (0, 1)
        ca, cb = ctx.cosp[a], ctx.cosp[b]
        c0x = ctx.cosp[0 if row == "ii" else 2]
        x0_sq = 4 * c0x * c0x
        sum_sq = 2 * (ca * ca + cb * cb)
        diff_sq = 4 * ca * cb
        if crit == "de1":
            c_sq = (snapped[0] + snapped[1] + snapped[3] + snapped[4]) / 2
            c0_sq = snapped[0] * 0
        elif crit == "de2":
            c_sq = snapped[0]
            c0_sq = kval * kval * snapped[0]
        else:
            c_sq = snapped[4]
            c0_sq = kval * kval * snapped[4]
        Ps = _snap_poly(ctx, snapped, P)
        pnorm = None if exact else float(Ps.poly.max_abs_coeff())
        q = divides_linear(Ps, x0_sq, c0_sq, tol=dtol, scale=pnorm)
        if q is not None:
            q2 = divides_quadratic_from_squares(q, sum_sq, diff_sq, c_sq, tol=dtol, scale=pnorm)
            if q2 is not None:
                c = _sqrt_float(c_sq)
                c0 = _sqrt_float(c0_sq)
                ells = (
                    EllipseComponent(0.0, X0, c0, degenerate=c0 <= 1e-9),
                    EllipseComponent(p, X, c),
                    EllipseComponent(-p, X, c),
                )
                return report(verdict=DISPLACED_PAIR, criterion=crit,
                              k=None if crit == "de1" else float(kval), table_row=row,
                              ellipses=ells, snapped_xi=tuple(float(v) for v in snapped))
    return report(verdict=MIXED_NONE)


def _match_de_family(x, ctx, scale):
    """Try de1/de2/de3; returns (criterion, k, table_row, snapped_xi) or None."""
    two_c2 = 2 * ctx.cosp[1]
    # de1: xi3 = 0, xi5 = xi1 != 0, xi2 = xi4 = 2 xi1 cos(2pi/7)
    if (
        ctx.is_zero(x[2], scale)
        and ctx.eq(x[0], x[4], scale)
        and not ctx.is_zero(x[0], scale)
        and ctx.eq(x[1], two_c2 * x[0], scale)
        and ctx.eq(x[3], two_c2 * x[4], scale)
    ):
        b = (x[0] + x[4]) / 2
        snapped = [b, two_c2 * b, b * 0, two_c2 * b, b]
        return "de1", None, "vi", snapped
    for kv in ctx.k_values:
        row = "ii" if kv == ctx.k_values[0] else "vi"
        km1_sq = (kv - 1) * (kv - 1)
        # de2: xi2 = 0, xi3 = xi5 = k xi1, xi4 = (k-1)^2 xi1
        if (
            ctx.is_zero(x[1], scale)
            and not ctx.is_zero(x[0], scale)
            and ctx.eq(x[2], kv * x[0], scale)
            and ctx.eq(x[4], kv * x[0], scale)
            and ctx.eq(x[3], km1_sq * x[0], scale)
        ):
            snapped = [x[0], x[0] * 0, kv * x[0], km1_sq * x[0], kv * x[0]]
            return "de2", kv, row, snapped
        # de3: xi4 = 0, xi1 = xi3 = k xi5, xi2 = (k-1)^2 xi5
        if (
            ctx.is_zero(x[3], scale)
            and not ctx.is_zero(x[4], scale)
            and ctx.eq(x[0], kv * x[4], scale)
            and ctx.eq(x[2], kv * x[4], scale)
            and ctx.eq(x[1], km1_sq * x[4], scale)
        ):
            snapped = [kv * x[4], km1_sq * x[4], kv * x[4], x[4] * 0, x[4]]
            return "de3", kv, row, snapped
    return None


# ---------------------------------------------------------------------------
# brute-force decomposition oracle
# ---------------------------------------------------------------------------

def minor_axis_candidates(xi, tol=1e-9):
    """Nonnegative squared eigenvalues of Im A (the horizontal-tangent ordinates).

    These are the only possible squared minor half-axes of elliptical
    components.  Computed from the symmetric tridiagonal with off-diagonals
    sqrt(xi_j), which is well conditioned even at repeated eigenvalues.
    """
    xi = as_xi(xi)
    n = xi.n
    T = np.zeros((n, n))
    off = np.sqrt(np.asarray(list(xi), dtype=float))
    idx = np.arange(n - 1)
    T[idx, idx + 1] = off
    T[idx + 1, idx] = off
    evals = np.linalg.eigvalsh(T)
    out = {0.0}
    for v in evals:
        if v >= -tol:
            out.add(float(max(0.0, v)) ** 2)
    # dedupe near-identical candidates
    uniq = []
    for v in sorted(out):
        if not uniq or v - uniq[-1] > 1e-12 * max(1.0, v):
            uniq.append(v)
    return uniq


def brute_force_decompositions(xi, tol=DEFAULT_TOL):
    """Search full elliptical decompositions of P_n by divisibility alone.

    Candidate foci come from the exact spectrum, candidate minor half-axes from
    the eigenvalues of Im A.  Returns a set of decomposition types found:
    "concentric" (all factors origin-centered) and/or "displaced".
    """
    xi = as_xi(xi)
    n = xi.n
    if n not in (4, 5, 6):
        raise UnsupportedDimensionError(f"oracle covers n in 4..6, got {n}")
    P = closed_form_poly(xi)
    spec = exact_spectrum(n)
    pos = sorted(set(round(v, 12) for v in spec.positive()), reverse=True)
    c2_cands = minor_axis_candidates(xi, tol)
    found = set()

    pnorm = float(P.poly.max_abs_coeff())

    def linear_chain(poly, xs):
        if not xs:
            return poly.degree == 0
        head, rest = xs[0], xs[1:]
        for c2 in c2_cands:
            q = divides_linear(poly, head * head, c2, tol=tol, scale=pnorm)
            if q is not None and linear_chain(q, rest):
                return True
        return False

    if linear_chain(P, pos):
        found.add("concentric")

    pairs = set()
    vals = sorted(set(round(v, 12) for v in spec.eigenvalues), reverse=True)
    for i, zi in enumerate(vals):
        for zj in vals[i + 1 :]:
            p = (zi + zj) / 2
            X = (zi - zj) / 2
            if abs(p) > 1e-12 and X > 1e-12:
                pairs.add((abs(p), X))
    for p, X in sorted(pairs):
        for c2 in c2_cands:
            q = divides_quadratic_from_squares(P, X * X + p * p, X * X - p * p, c2, tol=tol, scale=pnorm)
            if q is None:
                continue
            if q.degree == 0:
                found.add("displaced")
            else:
                rest = [v for v in pos]  # remaining foci for the central factors
                for c02 in c2_cands:
                    for x0 in rest:
                        q2 = divides_linear(q, x0 * x0, c02, tol=tol, scale=pnorm)
                        if q2 is not None and q2.degree == 0:
                            found.add("displaced")
    return found


def verdict_matches_oracle(rep: ClassificationReport, found: set) -> bool:
    if rep.verdict == ALL_CONCENTRIC:
        return "concentric" in found
    if rep.verdict == DISPLACED_PAIR:
        return "displaced" in found
    if rep.verdict == DEGENERATE_SPECTRUM:
        return "concentric" in found  # all factors degenerate to foci
    return not found
