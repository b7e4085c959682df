"""Picard-lattice arithmetic: pairing, Euler characteristic, Serre duality."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_catalog_surfaces, gdp2_surface, k3_like_surface
from surfcoh import (
    DivisorClass,
    IntegralityError,
    IntersectionForm,
    RankMismatchError,
    Regime,
    SpecValidationError,
    SurfaceModel,
    euler_characteristic,
    intersect,
    make_del_pezzo,
    make_hirzebruch,
    serre_dual,
)

D = DivisorClass

ALL_SURFACES = all_catalog_surfaces() + [gdp2_surface(), k3_like_surface()]


def coeff_vectors(rank: int, bound: int = 8):
    return st.lists(
        st.integers(-bound, bound), min_size=rank, max_size=rank
    ).map(DivisorClass)


class TestDivisorClass:
    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            D([1.5, 2])

    def test_immutable(self):
        d = D([1, 2])
        with pytest.raises(AttributeError):
            d.coefficients = (0, 0)

    def test_arithmetic(self):
        assert D([1, 2]) + D([3, -1]) == D([4, 1])
        assert D([1, 2]) - D([3, -1]) == D([-2, 3])
        assert 3 * D([1, -2]) == D([3, -6])
        assert -D([1, -2]) == D([-1, 2])
        assert D.zero(3) == D([0, 0, 0])

    def test_mixed_rank_rejected(self):
        with pytest.raises(RankMismatchError):
            D([1, 2]) + D([1, 2, 3])

    def test_hashable(self):
        assert len({D([1, 0]), D([1, 0]), D([0, 1])}) == 2


class TestIntersectionForm:
    def test_asymmetric_rejected(self):
        with pytest.raises(SpecValidationError) as err:
            IntersectionForm([[1, 2], [3, 4]])
        assert err.value.field == "intersection_matrix"

    def test_non_square_rejected(self):
        with pytest.raises(SpecValidationError):
            IntersectionForm([[1, 0, 0], [0, 1, 0]])


class TestIntersect:
    def test_dp1_hyperplane_squares(self):
        dp1 = make_del_pezzo(1)
        assert intersect(dp1, D([1, 0]), D([1, 0])) == 1

    def test_dp1_mixed(self):
        dp1 = make_del_pezzo(1)
        assert intersect(dp1, D([2, 1]), D([0, 1])) == -1

    def test_f2_section(self):
        f2 = make_hirzebruch(2)
        assert intersect(f2, D([1, 1]), D([1, 0])) == -1

    def test_rank_mismatch(self):
        dp1 = make_del_pezzo(1)
        with pytest.raises(RankMismatchError):
            intersect(dp1, D([1, 0, 0]), D([1, 0]))

    @pytest.mark.parametrize("surface", ALL_SURFACES, ids=lambda s: s.name)
    @given(data=st.data())
    def test_symmetry(self, surface, data):
        d = data.draw(coeff_vectors(surface.rank))
        e = data.draw(coeff_vectors(surface.rank))
        assert intersect(surface, d, e) == intersect(surface, e, d)


class TestEulerCharacteristic:
    def test_p2_conics(self):
        # Independent count: monomials of degree 2 in 3 variables.
        monomials = list(itertools.combinations_with_replacement(range(3), 2))
        dp0 = make_del_pezzo(0)
        assert euler_characteristic(dp0, D([2])) == len(monomials) == 6

    @pytest.mark.parametrize("surface", all_catalog_surfaces(), ids=lambda s: s.name)
    def test_chi_of_zero_class(self, surface):
        assert euler_characteristic(surface, D.zero(surface.rank)) == 1

    def test_f2_against_lattice_point_count(self):
        from surfcoh import oracle_h0, toric_model

        toric, f2 = toric_model("f2")
        assert f2.canonical_class == D([-2, -4])
        d = D([1, 2])
        assert euler_characteristic(f2, d) == oracle_h0(toric, d) == 4

    def test_odd_pairing_reported(self):
        bad = SurfaceModel(
            name="bad_parity",
            rank=1,
            form=IntersectionForm([[1]]),
            canonical_class=D([0]),
            chi_structure_sheaf=1,
            negative_curves=(),
            mori_generators=(D([1]),),
            effective_generators=(D([1]),),
            regime=Regime.GENERAL,
        )
        with pytest.raises(IntegralityError):
            euler_characteristic(bad, D([1]))

    @pytest.mark.parametrize("surface", ALL_SURFACES, ids=lambda s: s.name)
    @given(data=st.data())
    def test_riemann_roch_parity(self, surface, data):
        d = data.draw(coeff_vectors(surface.rank))
        assert intersect(surface, d, d - surface.canonical_class) % 2 == 0

    @pytest.mark.parametrize("surface", ALL_SURFACES, ids=lambda s: s.name)
    @given(data=st.data())
    def test_chi_serre_symmetry(self, surface, data):
        d = data.draw(coeff_vectors(surface.rank))
        assert euler_characteristic(surface, d) == euler_characteristic(
            surface, serre_dual(surface, d)
        )


class TestSerreDual:
    def test_dual_of_zero_is_canonical(self):
        dp1 = make_del_pezzo(1)
        assert serre_dual(dp1, D.zero(2)) == D([-3, 1])

    def test_dual_of_canonical_is_zero(self):
        dp2 = make_del_pezzo(2)
        assert serre_dual(dp2, dp2.canonical_class) == D.zero(3)

    def test_f2_example(self):
        f2 = make_hirzebruch(2)
        assert serre_dual(f2, D([1, 0])) == D([-3, -4])

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            serre_dual(make_del_pezzo(1), D([1]))

    @pytest.mark.parametrize("surface", ALL_SURFACES, ids=lambda s: s.name)
    @given(data=st.data())
    def test_involution(self, surface, data):
        d = data.draw(coeff_vectors(surface.rank))
        assert serre_dual(surface, serre_dual(surface, d)) == d
