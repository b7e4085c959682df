"""Shared surfaces, class samplers and hypothesis settings for the test suite."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from hypothesis import HealthCheck, settings

from surfcoh import (
    DivisorClass,
    IntersectionForm,
    Regime,
    SurfaceModel,
    SurfaceSpec,
    fixture_path,
    load_surface,
    make_del_pezzo,
    make_hirzebruch,
)

settings.register_profile(
    "surfcoh",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("surfcoh")

DEL_PEZZO_RANGE = range(9)
HIRZEBRUCH_RANGE = range(5)


@lru_cache(maxsize=None)
def gdp2_surface() -> SurfaceModel:
    return load_surface(SurfaceSpec.from_file(fixture_path("gdp2")))


@lru_cache(maxsize=None)
def k3_like_surface() -> SurfaceModel:
    """Rank-2 hyperbolic slice of a K3 lattice: trivial canonical class, chi(O) = 2."""
    d1, d2 = DivisorClass([1, 0]), DivisorClass([0, 1])
    return SurfaceModel(
        name="k3_slice",
        rank=2,
        form=IntersectionForm([[0, 1], [1, 0]]),
        canonical_class=DivisorClass.zero(2),
        chi_structure_sheaf=2,
        negative_curves=(),
        mori_generators=(d1, d2),
        effective_generators=(d1, d2),
        regime=Regime.TRIVIAL_CANONICAL,
    )


def all_catalog_surfaces() -> list[SurfaceModel]:
    return [make_del_pezzo(k) for k in DEL_PEZZO_RANGE] + [
        make_hirzebruch(n) for n in HIRZEBRUCH_RANGE
    ]


def small_rank_surfaces() -> list[SurfaceModel]:
    """Surfaces whose [-6, 6] coefficient box is exhaustively sweepable."""
    return [make_del_pezzo(k) for k in range(4)] + [
        make_hirzebruch(n) for n in HIRZEBRUCH_RANGE
    ] + [gdp2_surface()]


# Deterministic sample sizes for surfaces whose boxes are astronomically large.
SAMPLED_DEL_PEZZO = {4: 1000, 5: 800, 6: 500, 7: 300, 8: 150}


def box_classes(rank: int, lo: int = -6, hi: int = 6):
    for coeffs in itertools.product(range(lo, hi + 1), repeat=rank):
        yield DivisorClass(coeffs)


def sampled_box_classes(rank: int, count: int, seed: str, lo: int = -6, hi: int = 6):
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    out: list[DivisorClass] = []
    while len(out) < count:
        coeffs = tuple(rng.randint(lo, hi) for _ in range(rank))
        if coeffs not in seen:
            seen.add(coeffs)
            out.append(DivisorClass(coeffs))
    return out


def sampled_effective_classes(surface: SurfaceModel, count: int, seed: str):
    """Random non-negative combinations of Mori generators; effective by construction."""
    rng = random.Random(seed)
    gens = surface.mori_generators
    seen: set[tuple[int, ...]] = set()
    out: list[DivisorClass] = []
    while len(out) < count:
        d = DivisorClass.zero(surface.rank)
        for _ in range(rng.randint(1, 4)):
            d = d + rng.randint(0, 3) * gens[rng.randrange(len(gens))]
        if d.coefficients not in seen:
            seen.add(d.coefficients)
            out.append(d)
    return out


def corrupt_f2_spec(tmp_path):
    """F2 fixture with lattice data transcribed from the wrong surface.

    The file is internally consistent (it is a genuine surface), so the
    pipeline runs without tripping its own sanity checks; only comparison
    against the true lattice-point counts can expose the mistake.
    """
    import json

    data = json.loads(fixture_path("f2").read_text())
    data["intersection_matrix"] = [[-4, 1], [1, 0]]
    data["canonical_class"] = [-2, -6]
    data["name"] = "f2_corrupt"
    path = tmp_path / "f2_corrupt.json"
    path.write_text(json.dumps(data))
    return path
