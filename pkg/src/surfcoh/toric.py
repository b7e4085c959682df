"""Independent section-counting oracle for the shipped toric models.

Counts lattice points of divisor polytopes directly, which gives the
dimension of the space of sections of any torus-invariant divisor on a
complete toric surface, nef or not. It shares nothing with the transform
and index machinery, so agreement between the two is a genuine
differential test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .catalog import make_del_pezzo, make_hirzebruch
from .errors import RankMismatchError, UnboundedPolytopeError, UnknownSurfaceError
from .lattice import DivisorClass, SurfaceModel


@dataclass(frozen=True)
class HalfplaneSet:
    """Constraints <u, normal> >= -offset, one per (normal, offset) pair."""

    constraints: tuple[tuple[tuple[int, int], int], ...]


@dataclass(frozen=True)
class ToricSurface:
    """Complete smooth fan paired with a Picard-coordinate dictionary.

    ``class_map`` (rank x nrays) sends ray-divisor coefficient vectors to
    Picard classes of the paired surface; ``lift_map`` (nrays x rank) is a
    chosen right inverse. The lift is only defined up to principal
    divisors, which translate the polytope without changing its count.
    """

    name: str
    rays: tuple[tuple[int, int], ...]
    class_map: tuple[tuple[int, ...], ...]
    lift_map: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rays = self.rays
        if len(rays) < 3:
            raise ValueError("a complete fan needs at least three rays")
        for v in rays:
            if math.gcd(v[0], v[1]) != 1:
                raise ValueError(f"ray {v} is not primitive")
        for i, v in enumerate(rays):
            w = rays[(i + 1) % len(rays)]
            det = v[0] * w[1] - v[1] * w[0]
            if det != 1:
                raise ValueError(
                    f"rays {v}, {w} span a cone of determinant {det}; the fan "
                    f"must be smooth, complete and ordered counterclockwise"
                )
        rank = len(self.class_map)
        for k in range(rank):
            for l in range(rank):
                acc = sum(
                    self.class_map[k][r] * self.lift_map[r][l]
                    for r in range(len(rays))
                )
                if acc != (1 if k == l else 0):
                    raise ValueError("class_map o lift_map is not the identity")

    @property
    def rank(self) -> int:
        return len(self.class_map)


def _hirzebruch_model(n: int) -> ToricSurface:
    return ToricSurface(
        name=f"f{n}",
        rays=((1, 0), (0, 1), (-1, n), (0, -1)),
        # Ray divisors in the (C0, f) basis: f, C0, f, C0 + n f.
        class_map=((0, 1, 0, 1), (1, 0, 1, n)),
        lift_map=((0, 1), (1, 0), (0, 0), (0, 0)),
    )


# Blowups of the plane at torus-fixed points; ray divisors written in the
# (H, E_1, ..., E_k) basis of the paired del Pezzo surface.
_DEL_PEZZO_MODELS = {
    1: ToricSurface(
        name="dp1",
        rays=((1, 0), (0, 1), (-1, -1), (0, -1)),
        class_map=((1, 1, 1, 0), (-1, 0, -1, 1)),
        lift_map=((0, 0), (1, 0), (0, 0), (0, 1)),
    ),
    2: ToricSurface(
        name="dp2",
        rays=((1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1)),
        class_map=((1, 1, 0, 1, 0), (0, -1, 1, -1, 0), (-1, 0, 0, -1, 1)),
        lift_map=((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 0, 0), (0, 0, 1)),
    ),
    3: ToricSurface(
        name="dp3",
        rays=((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)),
        class_map=(
            (1, 0, 1, 0, 1, 0),
            (0, 0, -1, 1, -1, 0),
            (-1, 0, 0, 0, -1, 1),
            (-1, 1, -1, 0, 0, 0),
        ),
        lift_map=(
            (0, 0, 0, 0),
            (0, 0, 0, 1),
            (0, 0, 0, 0),
            (1, 1, 0, 0),
            (1, 0, 0, 0),
            (1, 0, 1, 0),
        ),
    ),
}

ORACLE_NAMES = ("f0", "f1", "f2", "f3", "f4", "dp1", "dp2", "dp3")


def toric_model(name: str) -> tuple[ToricSurface, SurfaceModel]:
    """Fan and paired Picard model for one of the supported catalog names."""
    key = name.strip().lower()
    if key in ("f0", "f1", "f2", "f3", "f4"):
        n = int(key[1])
        return _hirzebruch_model(n), make_hirzebruch(n)
    if key in ("dp1", "dp2", "dp3"):
        k = int(key[2])
        return _DEL_PEZZO_MODELS[k], make_del_pezzo(k)
    raise UnknownSurfaceError(
        f"no toric model named {name!r}; available: {', '.join(ORACLE_NAMES)}"
    )


def polytope_from_ray_coefficients(
    t: ToricSurface, coefficients: tuple[int, ...]
) -> HalfplaneSet:
    if len(coefficients) != len(t.rays):
        raise RankMismatchError(
            f"{len(coefficients)} coefficients for {len(t.rays)} rays"
        )
    return HalfplaneSet(tuple(zip(t.rays, coefficients)))


def polytope_of_divisor(t: ToricSurface, d: DivisorClass) -> HalfplaneSet:
    """Section polytope of the lift of d to ray coordinates."""
    if len(d) != t.rank:
        raise RankMismatchError(
            f"class {d} has length {len(d)} but the model has rank {t.rank}"
        )
    coeffs = tuple(
        sum(row[k] * d[k] for k in range(t.rank)) for row in t.lift_map
    )
    return polytope_from_ray_coefficients(t, coeffs)


def count_lattice_points(p: HalfplaneSet) -> int:
    """Exact number of integer points satisfying every halfplane constraint.

    Vertices of the feasible region are enumerated exactly over rationals
    from constraint pairs; they bound a scan box that is then checked
    pointwise in integer arithmetic.
    """
    constraints = p.constraints
    if not constraints:
        raise UnboundedPolytopeError("no constraints: the whole plane is feasible")
    normals = [c[0] for c in constraints]
    for vx, vy in normals:
        for u in ((-vy, vx), (vy, -vx)):
            if u != (0, 0) and all(u[0] * wx + u[1] * wy >= 0 for wx, wy in normals):
                raise UnboundedPolytopeError(
                    f"feasible region is unbounded along direction {u}; "
                    f"the fan is not complete"
                )
    vertices: list[tuple[Fraction, Fraction]] = []
    for i in range(len(constraints)):
        (ax, ay), a_off = constraints[i]
        for j in range(i + 1, len(constraints)):
            (bx, by), b_off = constraints[j]
            det = ax * by - ay * bx
            if det == 0:
                continue
            # Solve <u, a> = -a_off, <u, b> = -b_off by Cramer's rule.
            ux = Fraction(-a_off * by + b_off * ay, det)
            uy = Fraction(-ax * b_off + bx * a_off, det)
            if all(ux * wx + uy * wy >= -off for (wx, wy), off in constraints):
                vertices.append((ux, uy))
    if not vertices:
        return 0
    x_lo = math.ceil(min(v[0] for v in vertices))
    x_hi = math.floor(max(v[0] for v in vertices))
    y_lo = math.ceil(min(v[1] for v in vertices))
    y_hi = math.floor(max(v[1] for v in vertices))
    count = 0
    for x in range(x_lo, x_hi + 1):
        for y in range(y_lo, y_hi + 1):
            if all(x * wx + y * wy >= -off for (wx, wy), off in constraints):
                count += 1
    return count


def oracle_h0(t: ToricSurface, d: DivisorClass) -> int:
    """Sections of O(d) on the toric model, by direct lattice-point count."""
    return count_lattice_points(polytope_of_divisor(t, d))
