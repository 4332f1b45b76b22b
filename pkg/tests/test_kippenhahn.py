import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from reciprange.errors import UnsupportedDimensionError
from reciprange.kippenhahn import (
    closed_form_poly,
    curve_components,
    detect_multiple_tangents,
    determinant_poly_eval,
    eigencurves,
    envelope_points,
    samples_to_json,
)
from reciprange.matrices import build_from_superdiagonal, exact_spectrum, matrix_from_xi

PHI = (math.sqrt(5) + 1) / 2


def poly_xi(n):
    return st.lists(st.floats(0.0, 3.0), min_size=n - 1, max_size=n - 1)


def test_closed_form_n4_example():
    # xi = (1,0,1): zeta^2 - (2+3rho) zeta + (1+rho)^2
    P = closed_form_poly([1.0, 0.0, 1.0])
    assert P.poly.coeffs[2] == [1.0]
    assert P.poly.coeffs[1] == [-2.0, -3.0]
    assert P.poly.coeffs[0] == [1.0, 2.0, 1.0]


def test_closed_form_n5_all_zero():
    # zeta^2 - 4 rho zeta + 3 rho^2
    P = closed_form_poly([0.0] * 4)
    assert P.poly.coeffs[1] == [0.0, -4.0]
    assert P.poly.coeffs[0] == [0.0, 0.0, 3.0]
    assert P.odd_flag


def test_closed_form_n6_value_check():
    P = closed_form_poly([0.0] * 5)
    assert P(1.0, 0.0) == 1.0


def test_closed_form_unsupported_dimension():
    with pytest.raises(UnsupportedDimensionError):
        closed_form_poly([1.0] * 6)  # n = 7


def test_rho_degree_bound_exact():
    for n in (2, 3, 4, 5, 6):
        P = closed_form_poly([Fraction(j + 1, 3) for j in range(n - 1)], exact=True)
        k = P.k
        for j in range(k + 1):
            assert P.poly.rho_degree_of(j) <= k - j
        assert P.poly.coeffs[-1] == [Fraction(1)]


def test_exact_poly_json_fractions():
    P = closed_form_poly([Fraction(1), Fraction(1, 2), Fraction(1)], exact=True)
    d = P.to_json_dict(exact=True)
    assert d["n"] == 4
    assert all(isinstance(c, str) and "/" in c for row in d["coeffs"] for c in row)


def test_determinant_example_n2():
    m = build_from_superdiagonal([2])
    assert abs(determinant_poly_eval(m, 0.0, 0.0) + 25 / 16) < 1e-15


def test_determinant_zero_at_unit_eigenvalue():
    m = matrix_from_xi([1.0, 0.0, 1.0])
    assert abs(determinant_poly_eval(m, math.pi / 2, 1.0)) < 1e-12


@given(st.sampled_from([4, 5, 6]), st.data())
def test_closed_form_matches_determinant(n, data):
    xi = data.draw(poly_xi(n))
    theta = data.draw(st.floats(0, 2 * math.pi))
    lam = data.draw(st.floats(-3, 3))
    m = matrix_from_xi(xi)
    P = closed_form_poly(xi)
    d = determinant_poly_eval(m, theta, lam)
    v = P.char_value(lam, theta)
    assert abs(d - v) <= 1e-9 * max(1.0, abs(d), abs(v))


def test_eigencurves_n2():
    m = build_from_superdiagonal([2])
    _, lam = eigencurves(m, np.array([0.0]))
    assert_allclose(lam[0], [1.25, -1.25])


def test_eigencurves_all_zero_scaled_spectrum(rng):
    for n in (3, 4, 5):
        m = matrix_from_xi([0.0] * (n - 1))
        thetas = rng.uniform(0, 2 * np.pi, 8)
        _, lam = eigencurves(m, thetas)
        spec = np.sort(exact_spectrum(n).eigenvalues)[::-1]
        for t, row in zip(thetas, lam):
            assert_allclose(row, np.sort(np.cos(t) * spec)[::-1], atol=1e-12)


def test_eigencurves_n4_quadruple():
    m = matrix_from_xi([1.0, 0.0, 1.0])
    _, lam = eigencurves(m, np.array([math.pi / 2]))
    assert_allclose(lam[0], [1, 1, -1, -1], atol=1e-12)


@given(st.sampled_from([2, 3, 4, 5, 6]), st.data())
def test_eigencurve_antisymmetry(n, data):
    xi = data.draw(poly_xi(n))
    m = matrix_from_xi(xi)
    thetas = np.linspace(0, 2 * np.pi, 16, endpoint=False)
    _, lam = eigencurves(m, thetas)
    _, lam_pi = eigencurves(m, thetas + np.pi)
    assert_allclose(lam_pi, -lam[:, ::-1], atol=1e-9)


def test_envelope_tangency_invariant(rng):
    for n in (4, 5, 6):
        xi = rng.uniform(0.05, 2.0, n - 1)
        m = matrix_from_xi(xi)
        for s in envelope_points(m, 64):
            assert abs((np.exp(1j * s.theta) * s.point).real - s.eigenvalue) < 1e-9


def test_envelope_middle_branch_origin(rng):
    m = matrix_from_xi(rng.uniform(0.05, 2.0, 4))
    for s in envelope_points(m, 64):
        if s.branch == 3:
            assert s.point == 0


def test_envelope_all_zero_collapses_to_spectrum():
    m = matrix_from_xi([0.0, 0.0, 0.0])
    spec = np.array(exact_spectrum(4).eigenvalues)
    for s in envelope_points(m, 32):
        assert np.min(np.abs(spec - s.point)) < 1e-9


def test_envelope_symmetry_both_axes(rng):
    for n in (4, 5, 6):
        xi = rng.uniform(0.05, 2.0, n - 1)
        pts = np.array([s.point for s in envelope_points(matrix_from_xi(xi), 64)])
        for transformed in (np.conj(pts), -pts):
            d = np.abs(pts[:, None] - transformed[None, :])
            assert max(d.min(axis=0).max(), d.min(axis=1).max()) < 1e-8


def test_envelope_outer_branch_fits_displaced_ellipses():
    m = matrix_from_xi([1.0, 0.0, 1.0])
    samples = [s for s in envelope_points(m, 512) if s.branch == 1]
    # predicted: congruent ellipses, centers +-1/2, foci {phi, -1/phi}, c = 1
    a = 1.5  # sqrt(c^2 + X^2) = sqrt(1 + 5/4)
    for s in samples:
        r1 = ((s.point.real - 0.5) / a) ** 2 + s.point.imag**2 - 1
        r2 = ((s.point.real + 0.5) / a) ** 2 + s.point.imag**2 - 1
        assert min(abs(r1), abs(r2)) < 1e-8


def test_envelope_degenerate_samples_flagged():
    samples = envelope_points(matrix_from_xi([0.5, 0.0, 0.5, 0.0]), 64)
    degen = [s for s in samples if s.degenerate]
    assert degen, "multiple tangents at theta = pi/2 must flag samples"
    assert all(abs(s.theta % math.pi - math.pi / 2) < 1e-12 for s in degen)


def test_multiple_tangents_drop_case():
    events = detect_multiple_tangents((0.5, 0.0, 0.5, 0.0))
    assert sorted(e.ordinate for e in events) == pytest.approx(
        [-math.sqrt(0.5), math.sqrt(0.5)]
    )
    for e in events:
        assert e.multiplicity >= 2


def test_multiple_tangents_absent_when_all_xi_positive():
    assert detect_multiple_tangents((1.0, 1.0, 1.0, 1.0)) == []


def test_multiple_tangents_fig4_case():
    xi = (1.44504, 1.0, 1.44504, 0.0, 3.24698)
    events = detect_multiple_tangents(xi, tol=1e-5)
    ords = sorted(e.ordinate for e in events)
    assert ords == pytest.approx([-math.sqrt(3.24698), math.sqrt(3.24698)], abs=1e-9)


def test_multiple_tangents_n6_cases():
    # (i): some odd-index xi vanishes -> the real axis
    ev = detect_multiple_tangents((0.0, 1.0, 1.0, 1.0, 1.0))
    assert [e.ordinate for e in ev] == [0.0]
    # (ii): xi2 = xi4 = 0 with equal pair
    ev = detect_multiple_tangents((1.5, 0.0, 1.5, 0.0, 0.7))
    assert sorted(e.ordinate for e in ev) == pytest.approx([-math.sqrt(1.5), math.sqrt(1.5)])
    # (iii): xi2 = 0 with xi1 xi4 = (xi1-xi5)(xi1-xi3)
    x1, x3, x5 = 2.0, 1.0, 0.5
    x4 = (x1 - x5) * (x1 - x3) / x1
    ev = detect_multiple_tangents((x1, 0.0, x3, x4, x5))
    assert sorted(e.ordinate for e in ev) == pytest.approx([-math.sqrt(x1), math.sqrt(x1)])


def test_multiple_tangent_equivalence_n5(rng):
    """Closed-form criterion iff Im A has a repeated nonzero eigenvalue."""
    draws = []
    for _ in range(200):
        draws.append(rng.uniform(0, 2, 4))
    for _ in range(150):
        xi = rng.uniform(0, 2, 4)
        xi[1] = 0.0
        draws.append(xi)
    for _ in range(150):
        x3, x4 = rng.uniform(0.05, 2, 2)
        draws.append(np.array([x3 + x4, 0.0, x3, x4]))  # criterion holds
    for xi in draws:
        closed = detect_multiple_tangents(tuple(xi), method="closed_form")
        numeric = detect_multiple_tangents(tuple(xi), method="numeric")
        assert bool(closed) == bool(numeric), xi
        if closed:
            assert_allclose(
                sorted(e.ordinate for e in closed),
                sorted(e.ordinate for e in numeric),
                atol=1e-8,
            )


def test_multiple_tangent_equivalence_n6(rng):
    for _ in range(200):
        xi = rng.uniform(0, 2, 5)
        if rng.uniform() < 0.5:
            xi[rng.integers(0, 5)] = 0.0
        closed = detect_multiple_tangents(tuple(xi), method="closed_form")
        numeric = detect_multiple_tangents(tuple(xi), method="numeric")
        assert bool(closed) == bool(numeric), xi


def test_components_counts():
    cases = [
        ([1.0, 0.0, 1.0], 2, 0),          # two displaced ellipses
        ([0.5, 0.0, 0.5, 0.0], 2, 1),     # two drops + origin
        ([1 + math.sqrt(3) / 2, 0.0, 1.0, math.sqrt(3) / 2], 2, 1),
        ([0.801938, 1.0, 0.0, 1.0, 0.801938], 2, 2),    # degenerate central pair
        ([2.80194, 1.0, 2.80194, 0.0, 1.55496], 3, 0),  # three ellipses
        ([1.0] * 5, 3, 0),                               # three concentric
        ([0.0, 0.0, 0.0], 0, 4),                         # spectrum points
    ]
    for xi, loops, points in cases:
        comps = curve_components(envelope_points(matrix_from_xi(xi), 1024))
        got_loops = sum(1 for c in comps if c["kind"] == "loop")
        got_points = sum(1 for c in comps if c["kind"] == "point")
        assert (got_loops, got_points) == (loops, points), (xi, got_loops, got_points)


def test_samples_json_schema():
    m = matrix_from_xi([1.0, 0.0, 1.0])
    out = samples_to_json(envelope_points(m, 16))
    assert len(out) == 16 * 4
    assert set(out[0]) == {"theta", "branch", "re", "im"}
