"""Registry shape, spec construction, and closed-form evaluation."""

import math

import pytest

from confluent import catalog
from confluent.errors import DomainError, UnknownIdentityError

ALL_KEYS = [
    "eq12", "eq13", "eq14", "eq15", "eq17", "eq18", "laplace_cosine_lemma",
    "eq24", "eq25", "eq26", "eq27", "eq28", "eq29", "eq31", "eq33", "eq34",
    "eq42", "eq43", "eq44", "eq45", "eq46", "eq47", "eq48", "eq49", "eq50",
]


class TestRegistry:
    def test_contains_expected_keys(self):
        keys = catalog.registry()
        assert "eq18" in keys
        assert "eq44" in keys
        assert len(keys) >= 20
        assert keys == ALL_KEYS

    def test_every_key_has_specs(self):
        for key in catalog.registry():
            assert catalog.identity_params(key)
            assert catalog.variant_tags(key)

    def test_multi_variant_set(self):
        assert set(
            k for k in catalog.registry() if len(catalog.variant_tags(k)) > 1
        ) == {"eq33", "eq42", "eq46"}

    def test_adopted_variants_constant(self):
        assert catalog.ADOPTED_VARIANTS == {"eq33": 1, "eq42": 1, "eq46": 1}


class TestLhsSpec:
    def test_eq18_kind(self):
        spec = catalog.lhs_spec("eq18", {"x": 1.0})
        assert spec.kind == "semi_infinite"
        assert spec.integrand(1.0) == pytest.approx(math.exp(-2.0), rel=1e-14)

    def test_eq29_kind(self):
        spec = catalog.lhs_spec("eq29", {"alpha": 1.0, "x": 1.0})
        assert spec.kind == "tan_oscillatory"
        assert spec.tan_coeff == 1.0

    def test_eq12_negative_alpha_annotations(self):
        spec = catalog.lhs_spec("eq12", {"alpha": -0.5, "x": 1.0})
        assert spec.endpoint_exponent == -1.5
        assert spec.inverse_arg == 1.0

    def test_unknown_id(self):
        with pytest.raises(UnknownIdentityError):
            catalog.lhs_spec("eq99", {"x": 1.0})

    def test_domain_violation_names_predicate(self):
        with pytest.raises(DomainError, match="x > 0"):
            catalog.lhs_spec("eq18", {"x": -1.0})
        with pytest.raises(DomainError, match="integer"):
            catalog.lhs_spec("eq12", {"alpha": 1.0, "x": 1.0})

    def test_missing_parameter_reported(self):
        with pytest.raises(DomainError, match="missing"):
            catalog.lhs_spec("eq12", {"x": 1.0})


class TestRhsEval:
    def test_eq18_value(self):
        r = catalog.rhs_eval("eq18", {"x": 1.0})
        assert r.value == pytest.approx(0.11993777196806145, rel=1e-12)
        assert r.method == "closed_form"

    def test_eq26_zero(self):
        assert catalog.rhs_eval("eq26", {"alpha": 1.4, "x": 2.0}).value == 0.0

    def test_eq45_half_pi(self):
        r = catalog.rhs_eval("eq45", {"beta": 0.7, "x": 1.3})
        assert r.value == pytest.approx(0.5 * math.pi, rel=1e-15)

    def test_mirror_rhs_uses_oracle(self):
        assert catalog.has_mirror_rhs("eq14")
        assert catalog.has_mirror_rhs("eq43")
        r = catalog.rhs_eval("eq14", {"alpha": 0.5, "beta": 1.25, "x": 2.0})
        assert r.method == "quadrature"

    def test_variant_changes_eq42_value(self):
        params = {"alpha": 0.8, "beta": 0.45, "x": 0.5}
        v1 = catalog.rhs_eval("eq42", params, variant=1).value
        v2 = catalog.rhs_eval("eq42", params, variant=2).value
        assert v1 != pytest.approx(v2, rel=1e-3)

    def test_pole_propagates(self):
        # eq12 needs non-integer alpha; the domain gate reports it
        with pytest.raises(DomainError):
            catalog.rhs_eval("eq12", {"alpha": 2.0, "x": 1.0})


class TestTripleAgreement:
    def test_eq12_eq17_eq31_pairwise(self):
        """Three integral representations of the same function agree."""
        from confluent.quadrature import (
            integrate_semi_infinite,
            integrate_tan_oscillatory,
        )

        for alpha in (0.25, 0.75):
            for x in (0.5, 1.0, 4.0):
                p = {"alpha": alpha, "x": x}
                v12 = integrate_semi_infinite(catalog.lhs_spec("eq12", p), 1e-12, 1e-11)
                v17 = integrate_semi_infinite(catalog.lhs_spec("eq17", p), 1e-12, 1e-11)
                v31 = integrate_tan_oscillatory(catalog.lhs_spec("eq31", p), 1e-12, 1e-11)
                vals = [v12.value, v17.value, v31.value]
                for i in range(3):
                    for j in range(i + 1, 3):
                        assert vals[i] == pytest.approx(vals[j], rel=1e-8)


class TestGeneralSinCosSpec:
    def test_shape(self):
        spec = catalog.general_sin_cos_spec(1.5, 0.5, 2.0, 1.0)
        assert spec.kind == "tan_oscillatory"
        assert spec.v_coeff == 2.0
        v = 0.7
        want = (
            math.sin(v) ** 0.5
            * math.cos(v) ** -0.5
            * math.cos(math.tan(v) + 2.0 * v)
        )
        assert spec.integrand(v) == pytest.approx(want, rel=1e-14)
