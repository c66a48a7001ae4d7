import math

import numpy as np
import pytest

from harmonicdisk import (
    ClassParams,
    DomainError,
    HarmonicMap,
    TruncatedSeries,
    convex_radius_poly,
    convexity_threshold_lambda,
    identity_map,
    make_extremal_full,
    make_extremal_single,
    numeric_radius_oracle,
    radius_fully_convex,
    radius_fully_starlike,
    starlike_radius_exact,
    starlike_radius_poly,
)
from harmonicdisk import radii as radii_mod

from helpers import random_params

P110 = ClassParams(1, 1, 0)


class TestPolynomials:
    def test_convex_poly_values(self):
        # pc = -3r^3 + 9r^2 - 10r + 2 at (1, 1, 0)
        assert convex_radius_poly(P110, 0.0) == 2.0
        assert convex_radius_poly(P110, 0.5) == pytest.approx(-1.125)
        assert convex_radius_poly(P110, 1.0) == pytest.approx(-2.0)

    def test_starlike_poly_values(self):
        # ps = 3r^2 - 6r + 2 at (1, 1, 0)
        assert starlike_radius_poly(P110, 0.0) == 2.0
        assert starlike_radius_poly(P110, 0.5) == pytest.approx(-0.25)
        assert starlike_radius_poly(P110, 1.0) == pytest.approx(-1.0)

    def test_endpoint_values_random_params(self):
        rng = np.random.default_rng(79)
        for _ in range(100):
            p = random_params(rng)
            assert convex_radius_poly(p, 0.0) == p.delta + p.gamma > 0
            assert convex_radius_poly(p, 1.0) < 0
            assert abs(convex_radius_poly(p, 1.0) - 2 * (p.lam - p.gamma)) <= 1e-12
            assert starlike_radius_poly(p, 0.0) == p.delta + p.gamma > 0
            assert starlike_radius_poly(p, 1.0) < 0
            assert abs(starlike_radius_poly(p, 1.0) - (p.lam - p.gamma)) <= 1e-12

    def test_strictly_decreasing_on_unit_interval(self):
        rng = np.random.default_rng(83)
        rs = np.linspace(0.005, 0.995, 100)
        for _ in range(20):
            p = random_params(rng)
            g, d, lm = p.gamma, p.delta, p.lam
            for r in rs:
                pc_prime = (
                    3 * (-d - 2 * g + lm) * r * r
                    + 2 * (3 * d + 6 * g - 3 * lm) * r
                    + (-3 * d - 7 * g + 4 * lm)
                )
                ps_prime = 2 * (d + 2 * g - lm) * (r - 1)
                assert pc_prime < 0
                assert ps_prime < 0


class TestRadiusSolvers:
    def test_starlike_closed_forms(self):
        assert radius_fully_starlike(P110, 1e-9).radius == pytest.approx(
            1 - 1 / math.sqrt(3), abs=1e-9
        )
        assert radius_fully_starlike(ClassParams(1, 2, 0), 1e-9).radius == pytest.approx(
            0.5, abs=1e-9
        )

    def test_starlike_matches_quadratic_formula(self):
        rng = np.random.default_rng(89)
        for _ in range(20):
            p = random_params(rng)
            rep = radius_fully_starlike(p, 1e-12)
            assert abs(rep.radius - starlike_radius_exact(p)) <= 1e-12

    def test_convex_radius_bracket(self):
        rep = radius_fully_convex(P110, 1e-9)
        assert 0.25 < rep.radius < 0.26
        assert rep.residual <= 1e-9
        assert rep.bracket[0] < rep.radius < rep.bracket[1]
        assert rep.bracket[1] - rep.bracket[0] <= 1e-9
        assert rep.method == "bisection"

    def test_residuals_over_random_params(self):
        rng = np.random.default_rng(97)
        for _ in range(100):
            p = random_params(rng)
            rc = radius_fully_convex(p, 1e-9)
            rs = radius_fully_starlike(p, 1e-9)
            assert rc.residual <= 1e-9
            assert rs.residual <= 1e-9
            assert 0 < rc.radius < 1 and 0 < rs.radius < 1
            # convexity is the stronger property, so its radius is smaller
            assert rc.radius < rs.radius

    def test_monotone_in_lambda(self):
        r0 = radius_fully_convex(P110, 1e-9).radius
        r5 = radius_fully_convex(ClassParams(1, 1, 0.5), 1e-9).radius
        assert r5 > r0

    def test_rejects_bad_tolerance(self):
        with pytest.raises(DomainError):
            radius_fully_convex(P110, 0.0)


class TestConvexityThreshold:
    def test_delta_three_converges(self):
        rep = convexity_threshold_lambda(3, 10000)
        assert not rep.diverged
        # independent recomputation of the partial sum and linear solve
        s = math.fsum(
            (2 * m * (3 - 3) + (3 - 5)) / ((m + 1) * (m * (3 - 1) + 2))
            for m in range(1, 10001)
        )
        assert rep.partial_sum == pytest.approx(s, abs=1e-12)
        assert rep.lam == pytest.approx((7 - 9 - 4 * s) / (4 - 4 * s), abs=1e-12)
        # at delta = 3 the terms are -1/(m+1)^2, so the infinite sum is
        # 1 - zeta(2) and the solved lambda has a closed form
        s_inf = 1.0 - math.pi**2 / 6
        lam_inf = (7 - 9 - 4 * s_inf) / (4 - 4 * s_inf)
        assert rep.lam == pytest.approx(lam_inf, abs=1e-4)
        assert rep.lam_error_estimate is not None and rep.lam_error_estimate < 1e-6

    @pytest.mark.parametrize("delta", [1, 2, 5])
    def test_divergent_deltas_reported(self, delta):
        rep = convexity_threshold_lambda(delta, 10000)
        assert rep.diverged and rep.lam is None
        assert rep.min_scaled_term > radii_mod.DIVERGENCE_THRESHOLD

    def test_delta_three_stable_under_window(self):
        assert not convexity_threshold_lambda(3, 2000).diverged

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            convexity_threshold_lambda(0.5, 10000)
        with pytest.raises(DomainError):
            convexity_threshold_lambda(3, 5)


class TestNumericOracle:
    def test_identity_caps_at_probe_maximum(self):
        rep = numeric_radius_oracle(identity_map(), "starlike", n_theta=256)
        assert rep.radius == 0.999
        assert rep.method == "oracle"
        assert "capped" in rep.note

    def test_single_extremal_beats_class_radius(self):
        f = make_extremal_single(P110, 2)
        rep = numeric_radius_oracle(f, "starlike", tol=1e-3, n_theta=512)
        assert rep.radius >= radius_fully_starlike(P110, 1e-9).radius - 1e-3

    def test_full_extremal_convex_beats_class_radius(self):
        f = make_extremal_full(P110, 64)
        rep = numeric_radius_oracle(f, "convex", tol=1e-3, n_theta=512)
        assert rep.radius >= radius_fully_convex(P110, 1e-9).radius - 1e-3

    def test_bracket_endpoints_certify_transition(self):
        # z + 0.4 conj(z)^2 loses circle convexity around r ~ 0.63
        from harmonicdisk import convex_on_circle

        f = HarmonicMap(TruncatedSeries([0, 1, 0]), TruncatedSeries([0, 0, 0.4]))
        rep = numeric_radius_oracle(f, "convex", tol=1e-3, n_theta=512)
        lo, hi = rep.bracket
        assert lo < rep.radius < hi and hi - lo <= 1e-3
        assert convex_on_circle(f, lo, 512).holds
        assert not convex_on_circle(f, hi, 512).holds

    def test_degenerate_report(self, monkeypatch):
        # starlikeness cannot fail near 0 for a normalized map, so drive the
        # degenerate branch by stubbing the circle test
        from harmonicdisk import geometry
        from harmonicdisk.sampling import MembershipVerdict

        def always_fails(f, r, n):
            return MembershipVerdict(holds=False, margin=-1.0, witness=0j, samples=n)

        monkeypatch.setattr(geometry, "starlike_on_circle", always_fails)
        rep = numeric_radius_oracle(identity_map(), "starlike")
        assert "degenerate" in rep.note
        assert rep.bracket == (0.0, 1e-3)

    def test_rejects_unknown_property(self):
        with pytest.raises(DomainError):
            numeric_radius_oracle(identity_map(), "roundish")
