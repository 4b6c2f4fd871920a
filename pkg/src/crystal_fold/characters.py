"""Character oracles that share no code with the crystal engine."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cartan import CartanDatum
from .errors import DomainError, ShapeError
from .weyl import positive_roots


def _check_dominant(cartan: CartanDatum, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != cartan.rank:
        raise ShapeError(f"weight has {len(lam)} coordinates, expected {cartan.rank}")
    if any(x < 0 for x in lam):
        raise DomainError(f"weight {lam} is not dominant")
    return lam


class _Form:
    """Invariant form with ``(alpha_i, alpha_i) = 2 s_i``."""

    def __init__(self, cartan: CartanDatum):
        self.cartan = cartan
        self.s = cartan.symmetrizer()
        self.inverse = _inverse(cartan.matrix)

    def to_roots(self, mu: Sequence[int]) -> list[Fraction]:
        return [sum(row[k] * mu[k] for k in range(len(mu))) for row in self.inverse]

    def weight_root(self, mu: Sequence[int], beta: Sequence[int]) -> Fraction:
        # (mu, alpha_j) = mu_j s_j
        return sum(Fraction(mu[j] * beta[j]) * self.s[j] for j in range(len(mu)))

    def weight_weight(self, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
        return self.weight_root(mu, self.to_roots(nu))


def _inverse(m) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def weyl_dim(cartan: CartanDatum, lam: Sequence[int]) -> int:
    lam = _check_dominant(cartan, lam)
    form = _Form(cartan)
    rho = (1,) * cartan.rank
    shifted = tuple(x + 1 for x in lam)
    num, den = Fraction(1), Fraction(1)
    for beta in positive_roots(cartan):
        num *= form.weight_root(shifted, beta)
        den *= form.weight_root(rho, beta)
    value = num / den
    assert value.denominator == 1
    return int(value)


def _root_in_weights(cartan: CartanDatum, beta: Sequence[int]) -> tuple[int, ...]:
    return tuple(
        sum(cartan.matrix[i][j] * beta[j] for j in range(cartan.rank))
        for i in range(cartan.rank)
    )


def freudenthal(cartan: CartanDatum, lam: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Weight multiplicities of the irreducible module of highest weight ``lam``."""
    lam = _check_dominant(cartan, lam)
    form = _Form(cartan)
    n = cartan.rank
    roots = positive_roots(cartan)
    root_w = [_root_in_weights(cartan, b) for b in roots]
    norms = [form.weight_root(rw, b) for rw, b in zip(root_w, roots)]

    # Weight support: saturate under root strings.
    support = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for beta, rw, nb in zip(roots, root_w, norms):
                top = 2 * form.weight_root(mu, beta) / nb
                for k in range(1, int(top) + 1):
                    nu = tuple(mu[t] - k * rw[t] for t in range(n))
                    if nu not in support:
                        support.add(nu)
                        nxt.append(nu)
        frontier = nxt

    lam_roots = form.to_roots(lam)

    def depth(mu) -> Fraction:
        return sum(a - b for a, b in zip(lam_roots, form.to_roots(mu)))

    rho = (1,) * n
    lr = tuple(x + 1 for x in lam)
    top_norm = form.weight_weight(lr, lr)
    mult: dict[tuple[int, ...], int] = {}
    for mu in sorted(support, key=depth):
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for beta, rw in zip(roots, root_w):
            k = 1
            while True:
                nu = tuple(mu[t] + k * rw[t] for t in range(n))
                if nu not in support:
                    break
                total += mult.get(nu, 0) * form.weight_root(nu, beta)
                k += 1
        mr = tuple(mu[t] + rho[t] for t in range(n))
        value = 2 * total / (top_norm - form.weight_weight(mr, mr))
        assert value.denominator == 1
        if value:
            mult[mu] = int(value)
    return mult
