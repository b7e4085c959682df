"""Certificates, the full h0/h1/h2 pipeline, and both closed forms."""

from __future__ import annotations

import itertools

import pytest

from conftest import box_classes, gdp2_surface, k3_like_surface, sampled_effective_classes
from surfcoh import (
    CertificateRule,
    ConsistencyError,
    DivisorClass,
    IntersectionForm,
    NotEffectiveError,
    NotNefError,
    Regime,
    SurfaceModel,
    certify_vanishing,
    cohomology,
    del_pezzo_h0,
    euler_characteristic,
    hirzebruch_h0,
    is_effective,
    is_nef,
    iterate_to_nef,
    make_del_pezzo,
    make_hirzebruch,
    oracle_h0,
    serre_dual,
    toric_model,
)

D = DivisorClass


class TestCertifyVanishing:
    def test_del_pezzo_always_certified(self):
        cert = certify_vanishing(make_del_pezzo(1), D([2, 0]))
        assert cert.certified
        assert cert.rule is CertificateRule.KAWAMATA_VIEHWEG

    def test_toric_uses_demazure(self):
        cert = certify_vanishing(make_hirzebruch(2), D([0, 1]))
        assert cert.rule is CertificateRule.DEMAZURE

    def test_trivial_canonical_square_zero_uncertified(self):
        surface = k3_like_surface()
        d = D([1, 0])
        assert is_nef(surface, d)
        cert = certify_vanishing(surface, d)
        assert not cert.certified
        assert cert.rule is CertificateRule.NONE
        assert cert.status == "uncertified"

    def test_trivial_canonical_positive_square_certified(self):
        cert = certify_vanishing(k3_like_surface(), D([1, 1]))
        assert cert.certified

    def test_general_regime_kawamata_viehweg(self):
        cert = certify_vanishing(gdp2_surface(), D([2, 0, 0]))
        assert cert.rule is CertificateRule.KAWAMATA_VIEHWEG

    def test_non_nef_rejected(self):
        with pytest.raises(NotNefError):
            certify_vanishing(make_hirzebruch(2), D([1, 0]))

    def test_json_keys(self):
        cert = certify_vanishing(make_del_pezzo(2), D.zero(3))
        data = cert.to_json()
        assert set(data) == {"status", "rule", "detail"}
        assert data["status"] == "certified"


class TestCohomology:
    def test_dp1_conic_pullback(self):
        result = cohomology(make_del_pezzo(1), D([2, 1]))
        assert (result.h0, result.h1, result.h2, result.chi) == (6, 0, 0, 6)
        assert result.certificate.rule is CertificateRule.KAWAMATA_VIEHWEG
        assert result.trace is not None and result.trace.limit == D([2, 0])

    def test_f2_negative_section_has_h1(self):
        result = cohomology(make_hirzebruch(2), D([1, 0]))
        assert (result.h0, result.h1, result.h2, result.chi) == (1, 1, 0, 0)
        toric, _ = toric_model("f2")
        assert oracle_h0(toric, D([1, 0])) == 1

    @pytest.mark.parametrize(
        "surface",
        [make_del_pezzo(k) for k in range(4)] + [make_hirzebruch(n) for n in range(5)],
        ids=lambda s: s.name,
    )
    def test_zero_class(self, surface):
        result = cohomology(surface, D.zero(surface.rank))
        assert (result.h0, result.h1, result.h2, result.chi) == (1, 0, 0, 1)
        assert result.trace is not None and result.trace.step_count == 0

    def test_non_effective_class_h0_zero(self):
        result = cohomology(make_del_pezzo(1), D([1, -2]))
        assert result.h0 == 0
        assert result.trace is None
        assert not result.certificate.certified

    def test_uncertified_square_zero_on_k3_slice(self):
        result = cohomology(k3_like_surface(), D([1, 0]))
        assert result.h0 is None
        assert result.h1 is None
        assert result.h2 == 0
        assert result.chi == 2
        assert result.trace is not None

    def test_consistency_error_on_phantom_curve(self):
        # An honest dP1 lattice with a phantom negative class listed as a
        # curve: the transform overshoots and h1 would come out negative.
        phantom = SurfaceModel(
            name="phantom",
            rank=2,
            form=IntersectionForm([[1, 0], [0, -1]]),
            canonical_class=D([-3, 1]),
            chi_structure_sheaf=1,
            negative_curves=(D([1, -2]),),
            mori_generators=(D([0, 1]), D([1, -1])),
            effective_generators=(D([0, 1]), D([1, -1])),
            regime=Regime.GENERAL,
        )
        with pytest.raises(ConsistencyError):
            cohomology(phantom, D([3, -2]))

    def test_json_shape(self):
        data = cohomology(make_del_pezzo(1), D([2, 1])).to_json()
        assert set(data) == {"h0", "h1", "h2", "chi", "certificate", "trace"}
        assert data["trace"]["limit"] == [2, 0]

    def test_summary_line(self):
        line = cohomology(make_del_pezzo(1), D([2, 1])).summary_line()
        assert line == "h0=6 h1=0 h2=0 chi=6, certificate kawamata_viehweg"


class TestDelPezzoClosedForm:
    def test_dp2_line_through_both_points(self):
        assert del_pezzo_h0(make_del_pezzo(2), D([1, 1, 1])) == 3

    def test_dp1_conic_pullback(self):
        assert del_pezzo_h0(make_del_pezzo(1), D([2, 1])) == 6

    def test_dp3_anticanonical(self):
        dp3 = make_del_pezzo(3)
        assert del_pezzo_h0(dp3, -dp3.canonical_class) == 7

    def test_wrong_regime_rejected(self):
        with pytest.raises(ValueError):
            del_pezzo_h0(make_hirzebruch(2), D([1, 1]))

    def test_non_effective_rejected(self):
        with pytest.raises(NotEffectiveError):
            del_pezzo_h0(make_del_pezzo(1), D([1, -2]))

    @pytest.mark.parametrize("k", range(4))
    def test_agrees_with_pipeline_small_box(self, k):
        surface = make_del_pezzo(k)
        for d in box_classes(surface.rank, -4, 4):
            if is_effective(surface, d):
                assert del_pezzo_h0(surface, d) == cohomology(surface, d).h0


class TestHirzebruchClosedForm:
    def test_f2_section_plus_fiber(self):
        assert hirzebruch_h0(make_hirzebruch(2), D([1, 1])) == 2

    def test_f2_nef_class_needs_no_correction(self):
        f2 = make_hirzebruch(2)
        toric, _ = toric_model("f2")
        d = D([1, 2])
        assert hirzebruch_h0(f2, d) == oracle_h0(toric, d) == 4

    def test_f0_bidegree_count(self):
        f0 = make_hirzebruch(0)
        for a, b in itertools.product(range(4), repeat=2):
            monomials = (a + 1) * (b + 1)
            assert hirzebruch_h0(f0, D([a, b])) == monomials

    def test_wrong_surface_rejected(self):
        with pytest.raises(ValueError):
            hirzebruch_h0(make_del_pezzo(1), D([1, 1]))
        with pytest.raises(ValueError):
            hirzebruch_h0(gdp2_surface(), D([1, 1, 0]))

    def test_non_effective_rejected(self):
        with pytest.raises(NotEffectiveError):
            hirzebruch_h0(make_hirzebruch(2), D([-1, 0]))

    @pytest.mark.parametrize("n", range(5))
    def test_agrees_with_pipeline_small_box(self, n):
        surface = make_hirzebruch(n)
        for d in box_classes(surface.rank, -4, 4):
            if is_effective(surface, d):
                assert hirzebruch_h0(surface, d) == cohomology(surface, d).h0


class TestPipelineIdentities:
    SURFACES = [make_del_pezzo(k) for k in range(3)] + [
        make_hirzebruch(n) for n in range(3)
    ]

    @pytest.mark.parametrize("surface", SURFACES, ids=lambda s: s.name)
    def test_index_identity_and_duality(self, surface):
        for d in box_classes(surface.rank, -4, 4):
            result = cohomology(surface, d)
            dual = cohomology(surface, serre_dual(surface, d))
            assert result.h2 == dual.h0
            if None not in (result.h0, result.h1, result.h2):
                assert result.h0 - result.h1 + result.h2 == result.chi
                assert result.h1 >= 0

    @pytest.mark.parametrize("surface", SURFACES, ids=lambda s: s.name)
    def test_non_effective_classes_have_no_sections(self, surface):
        for d in box_classes(surface.rank, -4, 4):
            if not is_effective(surface, d):
                assert cohomology(surface, d).h0 == 0

    def test_transform_preserves_oracle_count(self):
        # The oracle knows nothing about the transform: counting sections
        # before and after must agree for arbitrary effective classes.
        for name in ("f0", "f1", "f2", "f3", "f4", "dp1", "dp2", "dp3"):
            toric, surface = toric_model(name)
            for d in box_classes(surface.rank, -3, 3):
                if is_effective(surface, d):
                    limit = iterate_to_nef(surface, d).limit
                    assert oracle_h0(toric, d) == oracle_h0(toric, limit)

    @pytest.mark.parametrize("k", [5, 8])
    def test_sampled_high_rank_del_pezzo(self, k):
        surface = make_del_pezzo(k)
        for d in sampled_effective_classes(surface, 60, f"coh:{k}"):
            result = cohomology(surface, d)
            assert result.h0 == del_pezzo_h0(surface, d)
            assert result.h0 == euler_characteristic(surface, iterate_to_nef(surface, d).limit)
            assert result.h1 is not None and result.h1 >= 0
