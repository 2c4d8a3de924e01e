import json

import numpy as np
import pytest

from qruscheweyh.classcheck import extremal_fk
from qruscheweyh.exceptions import MarginPoleError, PoleError, SpecValidationError
from qruscheweyh.janowski import (
    QClassSpec,
    janowski_map,
    omega_domain,
    p_functional,
    subordination_margin,
)
from qruscheweyh.series import TruncatedSeries
from qruscheweyh.verify import random_member


class TestSpecValidation:
    def test_valid_spec_builds(self):
        QClassSpec(q=0.5, m=2, l=1, alpha=0.0, A=1.0, B=-1.0)

    @pytest.mark.parametrize(
        "kwargs,needle",
        [
            (dict(q=1.5, m=2, l=1, alpha=0.0, A=0.5, B=-0.5), "q"),
            (dict(q=0.5, m=1, l=1, alpha=0.0, A=0.5, B=-0.5), "m > l"),
            (dict(q=0.5, m=0, l=0, alpha=0.0, A=0.5, B=-0.5), "m must be >= 1"),
            (dict(q=0.5, m=2, l=-1, alpha=0.0, A=0.5, B=-0.5), "l must be >= 0"),
            (dict(q=0.5, m=2, l=1, alpha=-0.5, A=0.5, B=-0.5), "alpha"),
            (dict(q=0.5, m=2, l=1, alpha=0.0, A=-0.5, B=0.5), "B < A"),
            (dict(q=0.5, m=2, l=1, alpha=0.0, A=0.5, B=-1.5), "B < A"),
        ],
    )
    def test_single_violations(self, kwargs, needle):
        with pytest.raises(SpecValidationError) as err:
            QClassSpec(**kwargs)
        assert needle in str(err.value)

    def test_all_violations_reported_together(self):
        with pytest.raises(SpecValidationError) as err:
            QClassSpec(q=2.0, m=1, l=3, alpha=-1.0, A=0.2, B=0.4)
        assert len(err.value.violations) == 4

    def test_json_roundtrip(self, ref_spec):
        payload = json.loads(json.dumps(ref_spec.to_json_dict()))
        assert QClassSpec.from_json_dict(payload) == ref_spec

    def test_from_json_rejects_fractional_order(self):
        from qruscheweyh.exceptions import InputFormatError

        with pytest.raises(InputFormatError):
            QClassSpec.from_json_dict(
                {"q": 0.5, "m": 1.5, "l": 0, "alpha": 0.0, "A": 0.5, "B": -0.5}
            )

    def test_from_json_reports_missing_keys(self):
        from qruscheweyh.exceptions import InputFormatError

        with pytest.raises(InputFormatError, match="missing"):
            QClassSpec.from_json_dict({"q": 0.5})


class TestOmegaDomain:
    def test_worked_disk(self, ref_spec):
        dom = omega_domain(ref_spec)
        assert dom.kind == "disk"
        assert dom.center == pytest.approx(5.0 / 3.0, abs=1e-15)
        assert dom.radius == pytest.approx(4.0 / 3.0, abs=1e-15)

    def test_worked_endpoints(self, ref_spec):
        dom = omega_domain(ref_spec)
        assert dom.center - dom.radius == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert dom.center + dom.radius == pytest.approx(3.0, abs=1e-12)

    def test_endpoints_formula(self, rng):
        for _ in range(50):
            B = rng.uniform(-0.99, 0.9)
            A = rng.uniform(B + 0.01, 1.0)
            spec = QClassSpec(q=0.5, m=1, l=0, alpha=0.0, A=A, B=B)
            dom = omega_domain(spec)
            assert dom.center - dom.radius == pytest.approx((1 - A) / (1 - B), abs=1e-12)
            assert dom.center + dom.radius == pytest.approx((1 + A) / (1 + B), abs=1e-12)

    def test_half_plane_limit(self):
        spec = QClassSpec(q=0.5, m=1, l=0, alpha=0.0, A=1.0, B=-1.0)
        dom = omega_domain(spec)
        assert dom.kind == "half-plane"
        assert dom.boundary_real_part == 0.0
        spec2 = QClassSpec(q=0.5, m=1, l=0, alpha=0.0, A=0.4, B=-1.0)
        assert omega_domain(spec2).boundary_real_part == pytest.approx(0.3)


class TestJanowskiMap:
    def test_fixes_one(self):
        assert janowski_map(0.0, 0.5, -0.5) == 1.0

    def test_worked_value(self):
        assert janowski_map(0.5, 0.5, -0.5) == pytest.approx(5.0 / 3.0)

    def test_real_axis_stays_real_and_inside(self, ref_spec):
        dom = omega_domain(ref_spec)
        for r in np.linspace(-0.95, 0.95, 21):
            w = janowski_map(r, ref_spec.A, ref_spec.B)
            assert abs(w.imag) < 1e-15
            assert dom.interior_margin(w) > 0

    def test_image_inside_domain_disk_case(self, ref_spec, rng):
        dom = omega_domain(ref_spec)
        zs = rng.uniform(0, 0.999, 10_000) * np.exp(1j * rng.uniform(0, 2 * np.pi, 10_000))
        ws = janowski_map(zs, ref_spec.A, ref_spec.B)
        margins = dom.radius - np.abs(ws - dom.center)
        assert margins.min() > 0

    def test_image_inside_domain_half_plane_case(self, rng):
        spec = QClassSpec(q=0.5, m=1, l=0, alpha=0.0, A=1.0, B=-1.0)
        dom = omega_domain(spec)
        zs = rng.uniform(0, 0.999, 10_000) * np.exp(1j * rng.uniform(0, 2 * np.pi, 10_000))
        ws = janowski_map(zs, spec.A, spec.B)
        assert ws.real.min() > dom.boundary_real_part

    def test_pole_raises(self):
        with pytest.raises(PoleError):
            janowski_map(1.0, 1.0, -1.0)


class TestPFunctional:
    def test_at_zero(self, ref_spec, rng):
        f = random_member(ref_spec, 8, rng)
        assert p_functional(f, 0.0, ref_spec) == 1.0 + 0j

    def test_identity_series_everywhere_one(self, ref_spec):
        f = TruncatedSeries.identity(6)
        for z in (0.3, 0.5j, -0.7 + 0.1j):
            assert p_functional(f, z, ref_spec) == pytest.approx(1.0)

    def test_worked_value(self, ref_spec):
        f = TruncatedSeries.from_tail([-0.1])
        w = (0.5 - 0.1 * 1.75 * 0.25) / (0.5 - 0.1 * 1.5 * 0.25)
        assert p_functional(f, 0.5, ref_spec) == pytest.approx(w - abs(w - 1), abs=1e-15)

    def test_imaginary_part_comes_from_ratio_only(self, ref_spec, rng):
        from qruscheweyh.series import apply_ruscheweyh

        f = random_member(ref_spec, 10, rng)
        z = 0.4 + 0.3j
        w = apply_ruscheweyh(f, ref_spec.m, ref_spec.q).evaluate(z) / apply_ruscheweyh(
            f, ref_spec.l, ref_spec.q
        ).evaluate(z)
        assert p_functional(f, z, ref_spec).imag == pytest.approx(w.imag, abs=1e-15)

    def test_ratio_pole_raises(self):
        # l = 0 keeps the denominator equal to f itself; f = z - 2 z^2 vanishes at 0.5
        spec = QClassSpec(q=0.5, m=1, l=0, alpha=0.0, A=0.5, B=-0.5)
        f = TruncatedSeries.from_tail([-2.0])
        with pytest.raises(PoleError):
            p_functional(f, 0.5, spec)


class TestSubordinationMargin:
    def test_zero_at_origin(self, ref_spec, rng):
        f = random_member(ref_spec, 8, rng)
        assert subordination_margin(f, 0.0, ref_spec) == 0.0

    def test_identity_series_zero_everywhere(self, ref_spec):
        f = TruncatedSeries.identity(4)
        for z in (0.2, -0.5, 0.3 + 0.6j):
            assert subordination_margin(f, z, ref_spec) == pytest.approx(0.0, abs=1e-15)

    def test_extremal_tight_near_boundary(self, ref_spec):
        f2 = extremal_fk(2, ref_spec).to_series()
        margin = subordination_margin(f2, 0.999, ref_spec)
        assert margin <= 1.0 + 1e-6
        assert margin > 0.99

    def test_margin_below_one_iff_inside_domain(self, ref_spec, rng):
        # pointwise equivalence of the two membership formulations for B > -1
        dom = omega_domain(ref_spec)
        f = random_member(ref_spec, 10, rng)
        zs = rng.uniform(0.05, 0.99, 400) * np.exp(1j * rng.uniform(0, 2 * np.pi, 400))
        for z in zs:
            margin = subordination_margin(f, complex(z), ref_spec)
            inside = dom.interior_margin(p_functional(f, complex(z), ref_spec)) > 0
            assert (margin < 1) == inside

    def test_margin_pole_distinct(self):
        # arranged so A - B p(z) is exactly zero: w = 2 at z = 0.5 for f = z - 4 z^2
        spec = QClassSpec(q=0.5, m=1, l=0, alpha=0.0, A=0.5, B=0.25)
        f = TruncatedSeries.from_tail([-4.0])
        assert p_functional(f, 0.5, spec) == 2.0
        with pytest.raises(MarginPoleError):
            subordination_margin(f, 0.5, spec)
