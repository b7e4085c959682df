"""Rational polyhedral cones with exact membership testing.

Membership in the non-negative span of a generator list is decided by a
phase-1 simplex over exact rationals with Bland's rule, so answers on the
cone boundary are exact. Problem sizes here are tiny (rank <= 9, at most a
few hundred generators), which keeps the dense tableau cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import RankMismatchError
from .lattice import DivisorClass


class Cone:
    """V-representation of a rational polyhedral cone."""

    __slots__ = ("generators",)

    generators: tuple[DivisorClass, ...]

    def __init__(self, generators: Iterable[DivisorClass]):
        gens = tuple(
            g if isinstance(g, DivisorClass) else DivisorClass(g) for g in generators
        )
        if gens:
            n = len(gens[0])
            for g in gens:
                if len(g) != n:
                    raise RankMismatchError("cone generators have mixed lengths")
                if g.is_zero:
                    raise ValueError("cone generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Cone is immutable")

    @property
    def ambient_rank(self) -> int | None:
        return len(self.generators[0]) if self.generators else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cone):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"Cone({list(self.generators)})"


def cone_contains(cone: Cone, d: DivisorClass) -> bool:
    """True iff d is a non-negative rational combination of the generators."""
    if cone.generators and cone.ambient_rank != len(d):
        raise RankMismatchError(
            f"cone lives in rank {cone.ambient_rank} but class has length {len(d)}"
        )
    if d.is_zero:
        return True
    return _nonnegative_combination_exists(
        tuple(g.coefficients for g in cone.generators), d.coefficients
    )


@lru_cache(maxsize=None)
def _nonnegative_combination_exists(
    generators: tuple[tuple[int, ...], ...], target: tuple[int, ...]
) -> bool:
    """Exact feasibility of  sum_i x_i * g_i = target,  x_i >= 0.

    Phase-1 simplex: minimise the sum of one artificial variable per
    coordinate; feasible iff the optimum is zero. Pivots follow Dantzig's
    rule for speed, falling back to Bland's rule permanently once the
    objective stalls, which rules out cycling.
    """
    n = len(target)
    m = len(generators)
    if m == 0:
        return all(t == 0 for t in target)

    zero = Fraction(0)
    one = Fraction(1)
    ncols = m + n
    tableau: list[list[Fraction]] = []
    for j in range(n):
        sign = -1 if target[j] < 0 else 1
        row = [Fraction(sign * g[j]) for g in generators]
        row.extend(one if k == j else zero for k in range(n))
        row.append(Fraction(sign * target[j]))
        tableau.append(row)
    basis = [m + j for j in range(n)]

    # Reduced costs for minimising the artificial sum; artificials start basic.
    # cost[ncols] tracks minus the current objective value.
    cost = [zero] * (ncols + 1)
    for q in range(ncols + 1):
        acc = zero
        for j in range(n):
            acc -= tableau[j][q]
        if m <= q < ncols:
            acc += one
        cost[q] = acc

    use_bland = False
    stalled = 0
    stall_limit = 2 * (m + n) + 10
    while True:
        entering = -1
        if use_bland:
            for q in range(ncols):
                if cost[q] < 0:
                    entering = q
                    break
        else:
            worst = zero
            for q in range(ncols):
                if cost[q] < worst:
                    worst = cost[q]
                    entering = q
        if entering < 0:
            return cost[ncols] == 0
        leaving = -1
        best: Fraction | None = None
        for j in range(n):
            a = tableau[j][entering]
            if a > 0:
                ratio = tableau[j][ncols] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[j] < basis[leaving])
                ):
                    best = ratio
                    leaving = j
        if leaving < 0:
            raise ArithmeticError("phase-1 simplex unbounded; tableau corrupt")
        pivot_row = tableau[leaving]
        pivot = pivot_row[entering]
        if pivot != 1:
            for idx in range(ncols + 1):
                if pivot_row[idx]:
                    pivot_row[idx] /= pivot
        nonzero = [(idx, y) for idx, y in enumerate(pivot_row) if y]
        for j in range(n):
            if j == leaving:
                continue
            row = tableau[j]
            f = row[entering]
            if f:
                for idx, y in nonzero:
                    row[idx] -= f * y
        f = cost[entering]
        previous_objective = cost[ncols]
        if f:
            for idx, y in nonzero:
                cost[idx] -= f * y
        basis[leaving] = entering
        if not use_bland:
            if cost[ncols] == previous_objective:
                stalled += 1
                if stalled > stall_limit:
                    use_bland = True
            else:
                stalled = 0
