"""Three concentric ellipses for n = 6: exact criterion, audit, instances.

A 6x6 reciprocal matrix has curve components consisting of three origin-centered
ellipses iff P_6 factors as prod_j (zeta - (s_j rho + t_j)) with
s_j = 4 cos^2(j pi/7).  Matching coefficients gives three equations linear in
the t_j (solved here by Cramer's rule, in floats or exactly over
Q(2 cos(2 pi/7))) and three polynomial consistency conditions on xi.
Eliminating t turns those conditions into polynomials in xi alone with rational
coefficients; ``audit_concentric_criterion`` compares them with the commonly
quoted integer form of the criterion, whose xi1*xi3*xi5 coefficient (-41) looks
suspicious and is re-derived here from scratch.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .matrices import as_xi
from .numberfield import COS7, TWO_COS_PI7

S_FLOAT = tuple(4 * math.cos(j * math.pi / 7) ** 2 for j in (1, 2, 3))
_SX = [TWO_COS_PI7[j] * TWO_COS_PI7[j] for j in (1, 2, 3)]  # s_j in Q(alpha)


def _cramer3(M, b, one):
    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    D = det3(M)
    out = []
    for k in range(3):
        Mk = [row[:] for row in M]
        for i in range(3):
            Mk[i][k] = b[i]
        out.append(det3(Mk) / D)
    return out


def candidate_axes(xi, exact=False, mpm=None):
    """Solve the linear coefficient-matching system for t = (c_1^2, c_2^2, c_3^2).

    Returns (t, residuals) where residuals are the three remaining polynomial
    matching conditions (all must vanish for the factorization to exist):
    elementary-symmetric e2, the weighted pair sum, and the product.  Backends:
    floats (default), exact over Q(2cos(2pi/7)) with ``exact``, or mpmath
    arbitrary precision by passing the mpmath module as ``mpm``.
    """
    vals = list(xi.xi) if hasattr(xi, "xi") else list(xi)
    if len(vals) != 5:
        raise ValueError("candidate_axes needs n = 6")
    if exact:
        x = [Fraction(v) for v in vals]
        s = _SX
        one = COS7(1)
        conv = lambda v: COS7(v) if isinstance(v, (int, Fraction)) else v
    elif mpm is not None:
        conv = lambda v: v if hasattr(v, "_mpf_") else mpm.mpf(v)
        x = [conv(v) for v in vals]
        s = [4 * mpm.cos(j * mpm.pi / 7) ** 2 for j in (1, 2, 3)]
        one = mpm.mpf(1)
    else:
        x = [float(v) for v in vals]
        s = S_FLOAT
        one = 1.0
        conv = float

    total = sum(x)
    q1 = 3 * (x[0] + x[4]) + 2 * (x[1] + x[2] + x[3])
    odd = x[0] + x[2] + x[4]
    M = [[one, one, one],
         [one * 5 - s[0], one * 5 - s[1], one * 5 - s[2]],
         [one / s[0], one / s[1], one / s[2]]]
    b = [conv(total), conv(q1), conv(odd)]
    t = _cramer3(M, b, one)

    e2xi = x[0] * x[2] + x[0] * x[3] + x[0] * x[4] + x[1] * x[3] + x[1] * x[4] + x[2] * x[4]
    oddpair = x[0] * x[2] + x[0] * x[4] + x[2] * x[4]
    oddprod = x[0] * x[2] * x[4]
    residuals = (
        t[0] * t[1] + t[0] * t[2] + t[1] * t[2] - conv(e2xi),
        s[2] * t[0] * t[1] + s[1] * t[0] * t[2] + s[0] * t[1] * t[2] - conv(oddpair),
        t[0] * t[1] * t[2] - conv(oddprod),
    )
    return t, residuals


# ---------------------------------------------------------------------------
# exact elimination of t: the criterion as rational polynomials in xi
# ---------------------------------------------------------------------------

def _padd(p, q):
    r = dict(p)
    for m, c in q.items():
        nc = r.get(m, COS7(0)) + c
        if nc == COS7(0):
            r.pop(m, None)
        else:
            r[m] = nc
    return r


def _pneg(p):
    return {m: -c for m, c in p.items()}


def _pmul(p, q):
    r = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            nc = r.get(m, COS7(0)) + c1 * c2
            if nc == COS7(0):
                r.pop(m, None)
            else:
                r[m] = nc
    return r


def _pscale(p, c):
    return {m: cc * c for m, cc in p.items() if cc * c != COS7(0)}


def _pvar(i):
    m = [0] * 5
    m[i] = 1
    return {tuple(m): COS7(1)}


def derive_rational_criterion():
    """Eliminate t exactly; returns three monomial->Fraction dicts (G2a, G2b, G3).

    The first two are quadratic, the third cubic in xi; each has rational
    coefficients because the construction is stable under permuting the s_j.
    """
    X = [_pvar(i) for i in range(5)]
    s = _SX
    total = X[0]
    for i in range(1, 5):
        total = _padd(total, X[i])
    q1 = _padd(_pscale(_padd(X[0], X[4]), COS7(3)), _pscale(_padd(_padd(X[1], X[2]), X[3]), COS7(2)))
    odd = _padd(_padd(X[0], X[2]), X[4])
    b = [total, q1, odd]
    M = [[COS7(1), COS7(1), COS7(1)],
         [COS7(5) - s[0], COS7(5) - s[1], COS7(5) - s[2]],
         [s[0].inverse(), s[1].inverse(), s[2].inverse()]]

    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    D = det3(M)
    Dinv = D.inverse()
    T = []
    for k in range(3):
        tk = {}
        for i in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != k]
            minor = M[rows[0]][cols[0]] * M[rows[1]][cols[1]] - M[rows[0]][cols[1]] * M[rows[1]][cols[0]]
            sign = COS7(1 if (i + k) % 2 == 0 else -1)
            tk = _padd(tk, _pscale(b[i], minor * sign))
        T.append(_pscale(tk, Dinv))

    e2xi = {}
    for (i, j) in [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]:
        e2xi = _padd(e2xi, _pmul(X[i], X[j]))
    oddpair = _padd(_padd(_pmul(X[0], X[2]), _pmul(X[0], X[4])), _pmul(X[2], X[4]))
    oddprod = _pmul(_pmul(X[0], X[2]), X[4])

    G2a = _padd(_padd(_padd(_pmul(T[0], T[1]), _pmul(T[0], T[2])), _pmul(T[1], T[2])), _pneg(e2xi))
    G2b = _padd(
        _padd(
            _padd(_pscale(_pmul(T[0], T[1]), s[2]), _pscale(_pmul(T[0], T[2]), s[1])),
            _pscale(_pmul(T[1], T[2]), s[0]),
        ),
        _pneg(oddpair),
    )
    G3 = _padd(_pmul(_pmul(T[0], T[1]), T[2]), _pneg(oddprod))

    def rationalize(p, name):
        out = {}
        for m, c in p.items():
            if not c.is_rational():
                raise ArithmeticError(f"{name}: non-rational coefficient {c} at {m}")
            q = c.rational_part()
            if q:
                out[m] = q
        return out

    return rationalize(G2a, "G2a"), rationalize(G2b, "G2b"), rationalize(G3, "G3")


def _mono(*exps):
    return tuple(exps)


def quoted_criterion(third_eq_coefficient=Fraction(-41)):
    """The commonly quoted integer form of the criterion, as monomial dicts.

    ``third_eq_coefficient`` is the disputed coefficient of xi1*xi3*xi5 in the
    cubic equation.
    """
    f = Fraction
    eq1 = {
        _mono(2, 0, 0, 0, 0): f(2), _mono(1, 1, 0, 0, 0): f(4), _mono(1, 0, 1, 0, 0): f(-2),
        _mono(1, 0, 0, 1, 0): f(-3), _mono(1, 0, 0, 0, 1): f(-3), _mono(0, 2, 0, 0, 0): f(1),
        _mono(0, 0, 0, 2, 0): f(1), _mono(0, 0, 0, 0, 2): f(2), _mono(0, 1, 1, 0, 0): f(2),
        _mono(0, 1, 0, 1, 0): f(-5), _mono(0, 0, 1, 1, 0): f(2), _mono(0, 1, 0, 0, 1): f(-3),
        _mono(0, 0, 1, 0, 1): f(-2), _mono(0, 0, 0, 1, 1): f(4),
    }
    eq2 = {
        _mono(2, 0, 0, 0, 0): f(2), _mono(1, 1, 0, 0, 0): f(1), _mono(1, 0, 1, 0, 0): f(-3),
        _mono(1, 0, 0, 1, 0): f(1), _mono(1, 0, 0, 0, 1): f(-3), _mono(0, 2, 0, 0, 0): f(-1),
        _mono(0, 0, 2, 0, 0): f(1), _mono(0, 0, 0, 2, 0): f(-1), _mono(0, 0, 0, 0, 2): f(2),
        _mono(0, 1, 1, 0, 0): f(2), _mono(0, 1, 0, 1, 0): f(-2), _mono(0, 0, 1, 1, 0): f(2),
        _mono(0, 1, 0, 0, 1): f(1), _mono(0, 0, 1, 0, 1): f(-3), _mono(0, 0, 0, 1, 1): f(1),
    }
    eq3 = {
        _mono(3, 0, 0, 0, 0): f(1), _mono(2, 1, 0, 0, 0): f(2), _mono(2, 0, 1, 0, 0): f(4),
        _mono(2, 0, 0, 1, 0): f(2), _mono(2, 0, 0, 0, 1): f(3), _mono(1, 2, 0, 0, 0): f(-1),
        _mono(1, 0, 2, 0, 0): f(3), _mono(1, 0, 0, 2, 0): f(-1), _mono(1, 0, 0, 0, 2): f(3),
        _mono(1, 1, 1, 0, 0): f(3), _mono(1, 1, 0, 1, 0): f(-2), _mono(1, 0, 1, 1, 0): f(3),
        _mono(1, 1, 0, 0, 1): f(4), _mono(1, 0, 1, 0, 1): Fraction(third_eq_coefficient),
        _mono(1, 0, 0, 1, 1): f(4), _mono(0, 3, 0, 0, 0): f(-1), _mono(0, 0, 3, 0, 0): f(-1),
        _mono(0, 0, 0, 3, 0): f(-1), _mono(0, 0, 0, 0, 3): f(1), _mono(0, 1, 2, 0, 0): f(2),
        _mono(0, 1, 0, 2, 0): f(-3), _mono(0, 0, 1, 2, 0): f(1), _mono(0, 1, 0, 0, 2): f(2),
        _mono(0, 0, 1, 0, 2): f(4), _mono(0, 0, 0, 1, 2): f(2), _mono(0, 2, 1, 0, 0): f(1),
        _mono(0, 2, 0, 1, 0): f(-3), _mono(0, 0, 2, 1, 0): f(2), _mono(0, 1, 1, 1, 0): f(2),
        _mono(0, 2, 0, 0, 1): f(-1), _mono(0, 0, 2, 0, 1): f(3), _mono(0, 0, 0, 2, 1): f(-1),
        _mono(0, 1, 1, 0, 1): f(3), _mono(0, 1, 0, 1, 1): f(-2), _mono(0, 0, 1, 1, 1): f(3),
    }
    return eq1, eq2, eq3


def audit_concentric_criterion():
    """Re-derive the criterion and compare with the quoted integer form.

    Returns a dict with the derived scale factors, the reconstructed
    xi1*xi3*xi5 coefficient of the cubic equation, and whether the quoted
    value -41 is confirmed.
    """
    G2a, G2b, G3 = derive_rational_criterion()
    q1, q2, q3 = quoted_criterion()

    def proportional(quoted, derived):
        """quoted == factor * derived for one rational factor, or None."""
        if set(quoted) != set(derived):
            return None
        items = iter(quoted.items())
        m0, c0 = next(items)
        factor = c0 / derived[m0]
        for m, c in quoted.items():
            if derived[m] * factor != c:
                return None
        return factor

    f1 = proportional(q1, G2a)
    f2 = proportional(q2, G2b)
    # the cubic: compare all monomials except the disputed one, then read it off
    key = _mono(1, 0, 1, 0, 1)
    q3_rest = {m: c for m, c in q3.items() if m != key}
    g3_rest = {m: c for m, c in G3.items() if m != key}
    f3 = proportional(q3_rest, g3_rest)
    reconstructed = None
    if f3 is not None and key in G3:
        reconstructed = G3[key] * f3
    confirmed = reconstructed == Fraction(-41)
    return {
        "quadratic_scale_factors": (f1, f2),
        "cubic_scale_factor": f3,
        "printed_coefficient": -41,
        "reconstructed_coefficient": reconstructed,
        "confirmed": bool(confirmed),
        "derived_system": (G2a, G2b, G3),
    }


def evaluate_criterion(xi, third_eq_coefficient=Fraction(-41)):
    """Evaluate the three quoted criterion polynomials at xi (floats)."""
    x = [float(v) for v in as_xi(xi)]
    vals = []
    for eq in quoted_criterion(third_eq_coefficient):
        acc = 0.0
        for m, c in eq.items():
            term = float(c)
            for v, e in zip(x, m):
                term *= v**e
            acc += term
        vals.append(acc)
    return tuple(vals)


# ---------------------------------------------------------------------------
# numeric instances on the criterion variety
# ---------------------------------------------------------------------------

def _consistency(t1, t2, t3):
    s = np.asarray(S_FLOAT)
    t = np.array([t1, t2, t3])
    xi3 = float(np.sum(t * (s - 1) * (s - 3)))
    u = float(np.sum((3 - s) * t))
    rhs5 = s[2] * t[0] * t[1] + s[1] * t[0] * t[2] + s[0] * t[1] * t[2]
    v = rhs5 - xi3 * u
    return v * xi3 - t[0] * t[1] * t[2]


def _xi_candidates_from_t(t):
    s = np.asarray(S_FLOAT)
    t = np.asarray(t, float)
    xi3 = float(np.sum(t * (s - 1) * (s - 3)))
    u = float(np.sum((3 - s) * t))
    w = float(np.sum((s - 2) * t)) - xi3
    rhs5 = s[2] * t[0] * t[1] + s[1] * t[0] * t[2] + s[0] * t[1] * t[2]
    v = rhs5 - xi3 * u
    if xi3 <= 0 or u < 0 or w < 0:
        return []
    disc = u * u - 4 * v
    if disc < 0:
        return []
    out = []
    for xi1 in ((u + math.sqrt(disc)) / 2, (u - math.sqrt(disc)) / 2):
        xi5 = u - xi1
        if xi1 < -1e-12 or xi5 < -1e-12:
            continue
        e2t = t[0] * t[1] + t[0] * t[2] + t[1] * t[2]
        r3 = e2t - xi3 * u - xi1 * xi5
        # xi2 from xi1*xi4 + xi2*xi5 + xi2*xi4 = r3 with xi4 = w - xi2
        aq, bq, cq = -1.0, (xi5 - xi1 + w), xi1 * w - r3
        d2 = bq * bq - 4 * aq * cq
        if d2 < 0:
            continue
        for xi2 in ((-bq + math.sqrt(d2)) / (2 * aq), (-bq - math.sqrt(d2)) / (2 * aq)):
            xi4 = w - xi2
            if xi2 >= -1e-12 and xi4 >= -1e-12:
                out.append(tuple(max(0.0, z) for z in (xi1, xi2, xi3, xi4, xi5)))
    return out


def find_concentric_instance(seed=0, require_positive=True, max_tries=5000):
    """Find xi > 0 with three concentric elliptical components by root-finding.

    Draws (t1, t2), solves the scalar consistency condition for t3 by bisection,
    and reconstructs xi.  Returns (xi, t) with t the squared minor half-axes.
    """
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        t1, t2 = rng.uniform(0.1, 4.0, 2)
        grid = np.linspace(1e-4, 6.0, 200)
        vals = [_consistency(t1, t2, g) for g in grid]
        for i in range(len(grid) - 1):
            if vals[i] * vals[i + 1] > 0:
                continue
            a, b = grid[i], grid[i + 1]
            fa = _consistency(t1, t2, a)
            for _ in range(200):
                m = (a + b) / 2
                fm = _consistency(t1, t2, m)
                if fa * fm <= 0:
                    b = m
                else:
                    a, fa = m, fm
            t3 = (a + b) / 2
            for xi in _xi_candidates_from_t((t1, t2, t3)):
                if require_positive and min(xi) < 1e-3:
                    continue
                return xi, tuple(sorted((t1, t2, t3), reverse=True))
    raise RuntimeError("no instance found; widen the search")
