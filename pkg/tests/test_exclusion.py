import math

import pytest

from plateforces import (
    DomainError,
    ExclusionCurve,
    InvalidParameterError,
    PriorBounds,
    ResolutionSpec,
    YukawaParams,
    alpha_bound,
    exclusion_scan,
    improvement_factor,
    plate_yukawa,
)

GOLD = 19.3e3


def gold_spec(thickness=1e-5, resolution=1e-12):
    return ResolutionSpec(
        force_resolution=resolution,
        gap=5e-6,
        density_a=GOLD,
        density_b=GOLD,
        thickness_a=thickness,
        thickness_b=thickness,
        area=0.012,
    )


class TestAlphaBound:
    def test_gold_baseline(self):
        # 1 pN resolution, 10 um films, 5 um gap, probed at lam = 10 um
        assert alpha_bound(1e-5, gold_spec()) == pytest.approx(
            22.013316383214352, rel=1e-12
        )
        assert alpha_bound(1e-5, gold_spec()) == pytest.approx(22.0, rel=1e-2)

    def test_round_trip_through_force(self):
        spec = gold_spec()
        for lam in (1e-6, 3.7e-6, 1e-5, 2.9e-4, 1e-2):
            alpha = alpha_bound(lam, spec)
            force = plate_yukawa(
                spec.density_a,
                spec.density_b,
                spec.area,
                spec.thickness_a,
                spec.thickness_b,
                spec.gap,
                YukawaParams(alpha=alpha, lam=lam),
            )
            assert force == pytest.approx(spec.force_resolution, rel=1e-12), lam

    def test_linear_in_resolution(self):
        assert alpha_bound(1e-5, gold_spec(resolution=2e-12)) == pytest.approx(
            2 * alpha_bound(1e-5, gold_spec(resolution=1e-12)), rel=1e-12
        )

    def test_thicker_films_see_smaller_couplings(self):
        bounds = [alpha_bound(1e-5, gold_spec(thickness=t)) for t in (0.3e-6, 1e-6, 3e-6, 1e-5)]
        assert all(b < a for a, b in zip(bounds, bounds[1:]))

    def test_approaches_thick_plate_floor_from_above(self):
        spec = gold_spec()
        floor = spec.force_resolution / (
            2
            * math.pi
            * 6.674e-11
            * GOLD**2
            * spec.area
            * spec.thickness_a
            * spec.thickness_b
        )
        far = alpha_bound(1e4 * spec.thickness_a, spec)
        assert far > floor
        assert far == pytest.approx(floor, rel=1e-3)

    def test_rejects_nonpositive_lam(self):
        with pytest.raises(InvalidParameterError):
            alpha_bound(0.0, gold_spec())

    def test_with_thickness_replaces_both(self):
        spec = gold_spec().with_thickness(3e-6)
        assert spec.thickness_a == 3e-6
        assert spec.thickness_b == 3e-6
        assert spec.gap == 5e-6


class TestExclusionScan:
    def test_grid_shape_and_endpoints(self):
        curves = exclusion_scan(gold_spec(), 1e-6, 1e-2, 2, (1e-5,))
        (curve,) = curves
        assert len(curve.lambdas) == 2
        assert curve.alphas[0] == alpha_bound(curve.lambdas[0], curve.spec)
        assert curve.alphas[1] == alpha_bound(curve.lambdas[1], curve.spec)

    def test_monotone_decreasing_over_micron_to_centimeter(self):
        (curve,) = exclusion_scan(gold_spec(), 1e-6, 1e-2, 1000, (1e-5,))
        assert all(b < a for a, b in zip(curve.alphas, curve.alphas[1:]))

    def test_thickness_ordering_pointwise(self):
        thicknesses = (0.3e-6, 1e-6, 3e-6, 1e-5)
        curves = exclusion_scan(gold_spec(), 1e-6, 1e-2, 200, thicknesses)
        for thin, thick in zip(curves, curves[1:]):
            assert all(
                lo < hi for hi, lo in zip(thin.alphas, thick.alphas)
            ), "curves must not touch or cross"

    def test_deterministic(self):
        a = exclusion_scan(gold_spec(), 1e-6, 1e-2, 500, (1e-6, 1e-5))
        b = exclusion_scan(gold_spec(), 1e-6, 1e-2, 500, (1e-6, 1e-5))
        for ca, cb in zip(a, b):
            assert ca.lambdas == cb.lambdas
            assert ca.alphas == cb.alphas

    def test_rejects_degenerate_grids(self):
        with pytest.raises(DomainError):
            exclusion_scan(gold_spec(), 1e-6, 1e-6, 10, (1e-5,))
        with pytest.raises(DomainError):
            exclusion_scan(gold_spec(), 1e-2, 1e-6, 10, (1e-5,))
        with pytest.raises(DomainError):
            exclusion_scan(gold_spec(), 1e-6, 1e-2, 1, (1e-5,))

    def test_rejects_bad_thicknesses(self):
        with pytest.raises(InvalidParameterError):
            exclusion_scan(gold_spec(), 1e-6, 1e-2, 10, ())
        with pytest.raises(InvalidParameterError):
            exclusion_scan(gold_spec(), 1e-6, 1e-2, 10, (-1e-6,))


class TestCurveInterpolation:
    def test_power_law_is_exact(self):
        lambdas = tuple(1e-6 * 10 ** (i / 4) for i in range(17))
        alphas = tuple(2.5 * (lam / 1e-6) ** -1.7 for lam in lambdas)
        curve = ExclusionCurve(lambdas=lambdas, alphas=alphas, spec=gold_spec())
        for i in range(len(lambdas) - 1):
            lam = math.sqrt(lambdas[i] * lambdas[i + 1])
            assert curve.alpha_at(lam) == pytest.approx(
                2.5 * (lam / 1e-6) ** -1.7, rel=1e-12
            )

    def test_nodes_reproduce(self):
        (curve,) = exclusion_scan(gold_spec(), 1e-6, 1e-2, 50, (1e-5,))
        for lam, alpha in zip(curve.lambdas, curve.alphas):
            assert curve.alpha_at(lam) == pytest.approx(alpha, rel=1e-14)

    def test_extrapolation_refused(self):
        (curve,) = exclusion_scan(gold_spec(), 1e-6, 1e-2, 50, (1e-5,))
        with pytest.raises(DomainError):
            curve.alpha_at(9.9e-7)
        with pytest.raises(DomainError):
            curve.alpha_at(1.1e-2)

    def test_curve_validation(self):
        with pytest.raises(InvalidParameterError):
            ExclusionCurve(lambdas=(1e-6, 1e-6), alphas=(1.0, 2.0), spec=gold_spec())
        with pytest.raises(InvalidParameterError):
            ExclusionCurve(lambdas=(1e-6, 1e-5), alphas=(1.0,), spec=gold_spec())
        with pytest.raises(InvalidParameterError):
            ExclusionCurve(lambdas=(1e-6, 1e-5), alphas=(1.0, -2.0), spec=gold_spec())
        with pytest.raises(InvalidParameterError):
            ExclusionCurve(lambdas=(1e-6,), alphas=(1.0,), spec=gold_spec())


class TestImprovementFactor:
    def test_identical_curves_give_exactly_one(self):
        (curve,) = exclusion_scan(gold_spec(), 1e-6, 1e-2, 100, (1e-5,))
        prior = PriorBounds(lambdas=curve.lambdas, alphas=curve.alphas, source="self")
        for lam in (1e-6, 1e-4, 1e-2, 3.3e-5):
            assert improvement_factor(curve, prior, lam) == 1.0

    def test_hundredfold_prior(self):
        (curve,) = exclusion_scan(gold_spec(), 1e-6, 1e-2, 100, (1e-5,))
        prior = PriorBounds(
            lambdas=curve.lambdas,
            alphas=tuple(100.0 * a for a in curve.alphas),
            source="synthetic",
        )
        for lam in (1e-6, 7.7e-5, 1e-2):
            assert improvement_factor(curve, prior, lam) == pytest.approx(
                100.0, rel=1e-12
            )

    def test_outside_either_domain_refused(self):
        (curve,) = exclusion_scan(gold_spec(), 1e-6, 1e-2, 100, (1e-5,))
        prior = PriorBounds(lambdas=(1e-5, 1e-4), alphas=(1e3, 1e2), source="narrow")
        with pytest.raises(DomainError) as err:
            improvement_factor(curve, prior, 1e-6)
        # the message should report both domains so the caller can fix the query
        assert "prior" in str(err.value)

    def test_prior_bounds_validation(self):
        with pytest.raises(InvalidParameterError):
            PriorBounds(lambdas=(1e-5, 1e-6), alphas=(1.0, 2.0))
        with pytest.raises(InvalidParameterError):
            PriorBounds(lambdas=(1e-6, 1e-5), alphas=(0.0, 2.0))
