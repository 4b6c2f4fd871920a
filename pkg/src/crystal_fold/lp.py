"""Exact feasibility LP: revised simplex over the rationals with Bland's rule.

Only feasibility of ``A c = b, c >= 0`` is needed (convex-hull membership),
so this is a Phase I solver.  Columns are scaled to integers up front.  The
basis inverse is kept fraction-free as ``adj / det``: every pivot divides
exactly by the previous determinant, so all arithmetic stays in Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from operator import mul
from typing import Sequence


def _integer_column(col: Sequence) -> list[int]:
    fr = [Fraction(x) for x in col]
    d = lcm(*(x.denominator for x in fr)) if fr else 1
    return [int(x * d) for x in fr]


def _solve(cols: list[list[int]], b: list[int]) -> bool:
    m, n = len(b), len(cols)
    signs = [(-1 if x < 0 else 1) for x in b]
    b = [abs(x) for x in b]
    if signs.count(-1):
        cols = [[c * s for c, s in zip(col, signs)] for col in cols]
    if not any(b):
        return True
    basis = list(range(n, n + m))  # artificials n..n+m-1
    adj = [[int(i == j) for j in range(m)] for i in range(m)]
    den = 1
    xb = list(b)  # x_B = xb / den

    while True:
        art_rows = [r for r in range(m) if basis[r] >= n]
        if not any(xb[r] for r in art_rows):
            return True
        # y = c_B B^{-1} = Y / den
        y = [sum(adj[r][i] for r in art_rows) for i in range(m)]
        in_basis = set(basis)
        entering = -1
        for j in range(n):
            # reduced cost -y.A_j < 0  <=>  Y.A_j > 0
            if j not in in_basis and sum(map(mul, y, cols[j])) > 0:
                entering = j
                break
        else:
            for i in range(m):
                # reduced cost 1 - y_i < 0
                if n + i not in in_basis and y[i] > den:
                    entering = n + i
                    break
        if entering < 0:
            return False
        if entering < n:
            col = cols[entering]
            u = [sum(map(mul, row, col)) for row in adj]
        else:
            u = [row[entering - n] for row in adj]
        leave = -1
        for r in range(m):
            if u[r] > 0:
                if leave < 0:
                    leave = r
                    continue
                # compare xb[r]/u[r] with xb[leave]/u[leave]
                lhs, rhs = xb[r] * u[leave], xb[leave] * u[r]
                if lhs < rhs or (lhs == rhs and basis[r] < basis[leave]):
                    leave = r
        if leave < 0:
            return False  # cannot happen: phase I is bounded below
        piv = u[leave]
        row_l, x_l = adj[leave], xb[leave]
        for r in range(m):
            if r != leave:
                ur = u[r]
                adj[r] = [(a * piv - ur * c) // den for a, c in zip(adj[r], row_l)]
                xb[r] = (xb[r] * piv - ur * x_l) // den
        den = piv
        basis[leave] = entering


class HullOracle:
    """Reusable membership test for the convex hull of fixed generators."""

    def __init__(self, generators: Sequence[Sequence]):
        self.cols = [_integer_column(list(g) + [1]) for g in generators]

    def __contains__(self, point: Sequence) -> bool:
        return self.contains(point)

    def contains(self, point: Sequence) -> bool:
        return _solve(self.cols, _integer_column(list(point) + [1]))


def feasible(columns: Sequence[Sequence], rhs: Sequence) -> bool:
    """Whether ``sum_j c_j columns[j] = rhs`` has a solution with ``c >= 0``."""
    return _solve([_integer_column(c) for c in columns], _integer_column(rhs))


def in_convex_hull(point: Sequence, generators: Sequence[Sequence]) -> bool:
    return HullOracle(generators).contains(point)
