"""Cartan matrices and diagram automorphisms with their folded matrices.

Matrices follow the convention ``c[i][j] = <alpha_j, h_i>`` and Bourbaki node
labels.  Weights are integer tuples in fundamental-weight coordinates, so the
simple root ``alpha_j`` is column ``j`` of the Cartan matrix.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    AutomorphismError,
    ConfigurationError,
    InvarianceError,
    OrthogonalityError,
    ShapeError,
)

Matrix = tuple[tuple[int, ...], ...]
Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _zero(n: int) -> list[list[int]]:
    return [[2 if i == j else 0 for j in range(n)] for i in range(n)]


def _join(c: list[list[int]], i: int, j: int, cij: int = -1, cji: int = -1) -> None:
    # 1-based node labels
    c[i - 1][j - 1] = cij
    c[j - 1][i - 1] = cji


def _bourbaki(family: str, n: int) -> list[list[int]]:
    c = _zero(n)
    if family == "A":
        for i in range(1, n):
            _join(c, i, i + 1)
    elif family in "BC":
        for i in range(1, n - 1):
            _join(c, i, i + 1)
        if family == "B":
            _join(c, n - 1, n, -1, -2)
        else:
            _join(c, n - 1, n, -2, -1)
    elif family == "D":
        for i in range(1, n - 1):
            _join(c, i, i + 1)
        _join(c, n - 2, n)
    elif family == "E":
        _join(c, 1, 3)
        _join(c, 2, 4)
        for i in range(3, n):
            _join(c, i, i + 1)
    elif family == "F":
        _join(c, 1, 2)
        _join(c, 2, 3, -1, -2)
        _join(c, 3, 4)
    elif family == "G":
        _join(c, 1, 2, -1, -3)
    return c


def parse_type(tag: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", str(tag))
    if not m:
        raise ConfigurationError(f"cannot parse Cartan type {tag!r}")
    family, rank = m.group(1).upper(), int(m.group(2))
    if family in _EXCEPTIONAL:
        if rank not in _EXCEPTIONAL[family]:
            raise ConfigurationError(f"type {family} has no rank {rank}")
    elif rank < _MIN_RANK[family]:
        raise ConfigurationError(
            f"type {family} needs rank >= {_MIN_RANK[family]}, got {rank}"
        )
    return family, rank


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _connected(matrix: Matrix) -> bool:
    n = len(matrix)
    seen, stack = {0}, [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j not in seen and matrix[i][j] != 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def check_cartan_matrix(matrix: Matrix) -> None:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ShapeError("Cartan matrix must be square")
    for i in range(n):
        if matrix[i][i] != 2:
            raise ConfigurationError("Cartan diagonal entries must equal 2")
        for j in range(n):
            if i == j:
                continue
            if matrix[i][j] > 0:
                raise ConfigurationError("off-diagonal Cartan entries must be <= 0")
            if (matrix[i][j] == 0) != (matrix[j][i] == 0):
                raise ConfigurationError("c_ij = 0 must imply c_ji = 0")
    if not _connected(matrix):
        raise ConfigurationError("Cartan matrix is decomposable")
    for k in range(1, n + 1):
        if determinant([row[:k] for row in matrix[:k]]) <= 0:
            raise ConfigurationError("Cartan matrix is not of finite type")


def _find_relabeling(source: Matrix, target: Matrix) -> tuple[int, ...] | None:
    """Permutation ``p`` with ``source[p[i]][p[j]] == target[i][j]``, if any."""
    n = len(target)
    if len(source) != n:
        return None
    assignment: list[int] = []
    used = [False] * n

    def extend() -> bool:
        k = len(assignment)
        if k == n:
            return True
        for cand in range(n):
            if used[cand]:
                continue
            if all(
                source[cand][assignment[t]] == target[k][t]
                and source[assignment[t]][cand] == target[t][k]
                for t in range(k)
            ):
                assignment.append(cand)
                used[cand] = True
                if extend():
                    return True
                assignment.pop()
                used[cand] = False
        return False

    return tuple(assignment) if extend() else None


def identify_type(matrix: Matrix) -> str | None:
    """Finite type tag (e.g. ``"B2"``) of ``matrix`` up to relabeling of nodes."""
    n = len(matrix)
    candidates = [f for f, r in _MIN_RANK.items() if n >= r]
    candidates += [f for f, ranks in _EXCEPTIONAL.items() if n in ranks]
    for family in candidates:
        # B2 and C2 differ only by labeling; prefer the exact match.
        target = tuple(map(tuple, _bourbaki(family, n)))
        if target == matrix:
            return f"{family}{n}"
    for family in candidates:
        target = tuple(map(tuple, _bourbaki(family, n)))
        if _find_relabeling(matrix, target) is not None:
            return f"{family}{n}"
    return None


@dataclass(frozen=True)
class CartanDatum:
    labels: tuple[int, ...]
    matrix: Matrix
    type_tag: str

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.matrix):
            raise ShapeError("labels and matrix size differ")
        if len(set(self.labels)) != len(self.labels):
            raise ConfigurationError("duplicate node labels")
        check_cartan_matrix(self.matrix)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ConfigurationError(
                f"{label!r} is not a node of {self.type_tag}"
            ) from None

    def entry(self, i: int, j: int) -> int:
        """``c_{i,j}`` addressed by node labels."""
        return self.matrix[self.index(i)][self.index(j)]

    def simple_root(self, label: int) -> Weight:
        j = self.index(label)
        return tuple(row[j] for row in self.matrix)

    def transpose(self, type_tag: str | None = None) -> CartanDatum:
        t = tuple(zip(*self.matrix))
        return CartanDatum(self.labels, t, type_tag or identify_type(t) or "?")

    def symmetrizer(self) -> tuple[Fraction, ...]:
        """Positive ``s_i`` with ``s_i c_ij = s_j c_ji``, normalized to min 1."""
        n = self.rank
        s: list[Fraction | None] = [None] * n
        s[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and self.matrix[i][j] != 0 and s[j] is None:
                    s[j] = s[i] * self.matrix[i][j] / self.matrix[j][i]
                    stack.append(j)
        low = min(s)  # type: ignore[type-var]
        return tuple(x / low for x in s)  # type: ignore[operator]

    def __str__(self) -> str:
        return self.type_tag


def build_cartan(type_tag: str) -> CartanDatum:
    family, rank = parse_type(type_tag)
    matrix = tuple(map(tuple, _bourbaki(family, rank)))
    return CartanDatum(tuple(range(1, rank + 1)), matrix, f"{family}{rank}")


def cartan_from_matrix(
    matrix: Sequence[Sequence[int]], labels: Iterable[int] | None = None
) -> CartanDatum:
    m = tuple(tuple(int(x) for x in row) for row in matrix)
    labs = tuple(labels) if labels is not None else tuple(range(1, len(m) + 1))
    return CartanDatum(labs, m, identify_type(m) or "?")


# ---------------------------------------------------------------------------
# diagram automorphisms


def parse_cycles(text: str | Sequence[Sequence[int]] | Mapping[int, int] | None,
                 labels: Sequence[int]) -> dict[int, int]:
    """Permutation of ``labels`` given in any of the forms below.

    ``"(1 3)"``, ``"(1,3)(2)"``, ``[[1, 3]]`` and ``{1: 3, 3: 1}`` all work;
    unmentioned labels are fixed.  ``None`` or ``""`` is the identity.
    """
    perm = {lab: lab for lab in labels}
    if text is None:
        return perm
    if isinstance(text, Mapping):
        perm.update({int(k): int(v) for k, v in text.items()})
        cycles: list[list[int]] = []
    elif isinstance(text, str):
        cycles = [
            [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
            for body in re.findall(r"\(([^()]*)\)", text)
        ]
        if text.strip() and not cycles:
            raise AutomorphismError(f"cannot parse cycle notation {text!r}")
    else:
        cycles = [list(map(int, cyc)) for cyc in text]
    seen: set[int] = set()
    for cyc in cycles:
        for a in cyc:
            if a not in perm:
                raise AutomorphismError(f"{a} is not a node label")
            if a in seen:
                raise AutomorphismError(f"{a} appears in two cycles")
            seen.add(a)
        for k, a in enumerate(cyc):
            perm[a] = cyc[(k + 1) % len(cyc)]
    if sorted(perm.values()) != sorted(labels):
        raise AutomorphismError("not a permutation of the node labels")
    return perm


def format_cycles(perm: Mapping[int, int]) -> str:
    out, seen = [], set()
    for a in sorted(perm):
        if a in seen or perm[a] == a:
            seen.add(a)
            continue
        cyc = [a]
        seen.add(a)
        b = perm[a]
        while b != a:
            cyc.append(b)
            seen.add(b)
            b = perm[b]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


@dataclass(frozen=True)
class FoldingDatum:
    source: CartanDatum
    omega: tuple[tuple[int, int], ...]
    orbits: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    orbit_sizes: tuple[int, ...]
    orbit_cartan: CartanDatum
    fixed_cartan: CartanDatum
    order: int = field(default=1)

    @property
    def perm(self) -> dict[int, int]:
        return dict(self.omega)

    def m(self, rep: int) -> int:
        return self.orbit_sizes[self.reps.index(rep)]

    def orbit_of(self, rep: int) -> tuple[int, ...]:
        """``(i, omega(i), omega^2(i), ...)`` for a representative ``i``."""
        return self.orbits[self.reps.index(rep)]

    def rep_of(self, label: int) -> int:
        for rep, orb in zip(self.reps, self.orbits):
            if label in orb:
                return rep
        raise AutomorphismError(f"{label} is not a node label")

    @property
    def is_identity(self) -> bool:
        return all(a == b for a, b in self.omega)

    def cycles(self) -> str:
        return format_cycles(self.perm)


def validate_automorphism(cartan: CartanDatum, omega) -> FoldingDatum:
    """Check ``omega`` and build the folding datum.

    Representatives are the smallest label of each orbit; every orbit is
    stored in the order ``(i, omega(i), ...)`` starting from its
    representative.
    """
    perm = parse_cycles(omega, cartan.labels)
    for i in cartan.labels:
        for j in cartan.labels:
            if cartan.entry(perm[i], perm[j]) != cartan.entry(i, j):
                raise AutomorphismError(
                    f"omega={format_cycles(perm)} is not a diagram automorphism "
                    f"of {cartan.type_tag}: c({perm[i]},{perm[j]}) != c({i},{j})"
                )
    orbits = []
    seen: set[int] = set()
    for i in sorted(cartan.labels):
        if i in seen:
            continue
        orb = [i]
        j = perm[i]
        while j != i:
            orb.append(j)
            j = perm[j]
        seen.update(orb)
        orbits.append(tuple(orb))
    for orb in orbits:
        for a in orb:
            for b in orb:
                if a != b and cartan.entry(a, b) != 0:
                    raise OrthogonalityError(
                        f"orthogonality condition fails for omega="
                        f"{format_cycles(perm)} on {cartan.type_tag}: nodes {a} "
                        f"and {b} lie in one orbit but c({a},{b}) = "
                        f"{cartan.entry(a, b)}"
                    )
    reps = tuple(orb[0] for orb in orbits)
    sizes = tuple(len(orb) for orb in orbits)
    breve = tuple(
        tuple(sum(cartan.entry(i, k) for k in orb_j) for orb_j in orbits)
        for i in reps
    )
    # Langlands dual roles: orbit algebra matrix and its transpose
    orbit_cartan = cartan_from_matrix(breve, reps)
    if all(s == 1 for s in sizes):
        orbit_cartan = CartanDatum(reps, breve, cartan.type_tag)
        fixed_cartan = orbit_cartan
    else:
        fixed_cartan = orbit_cartan.transpose()
    return FoldingDatum(
        source=cartan,
        omega=tuple(sorted(perm.items())),
        orbits=tuple(orbits),
        reps=reps,
        orbit_sizes=sizes,
        orbit_cartan=orbit_cartan,
        fixed_cartan=fixed_cartan,
        order=math.lcm(*sizes),
    )


def identity_fold(cartan: CartanDatum) -> FoldingDatum:
    return validate_automorphism(cartan, None)


def fixed_cartan_direct(fold: FoldingDatum) -> Matrix:
    """``<alpha'_j, h'_i>`` computed from its definition, without transposing.

    ``h'_i`` is the orbit sum of coroots and ``alpha'_j`` the orbit average of
    simple roots; used as an independent check on ``fixed_cartan``.
    """
    c = fold.source
    rows = []
    for i in fold.reps:
        row = []
        for j in fold.reps:
            orb_i, orb_j = fold.orbit_of(i), fold.orbit_of(j)
            val = Fraction(sum(c.entry(a, b) for a in orb_i for b in orb_j), len(orb_j))
            if val.denominator != 1:
                raise ConfigurationError("non-integral fixed-point Cartan entry")
            row.append(int(val))
        rows.append(tuple(row))
    return tuple(rows)


def is_invariant(fold: FoldingDatum, lam: Sequence[int]) -> bool:
    src = fold.source
    if len(lam) != src.rank:
        raise ShapeError(f"weight has {len(lam)} coordinates, expected {src.rank}")
    perm = fold.perm
    return all(lam[src.index(perm[i])] == lam[src.index(i)] for i in src.labels)


def omega_weight(fold: FoldingDatum, lam: Sequence[int]) -> Weight:
    """``omega^*`` on fundamental-weight coordinates: coordinate ``i`` moves to ``omega(i)``."""
    src = fold.source
    out = [0] * src.rank
    for i in src.labels:
        out[src.index(fold.perm[i])] = lam[src.index(i)]
    return tuple(out)


def project_weight(fold: FoldingDatum, lam: Sequence[int], mode: str = "hat") -> Weight:
    """Weight of the fixed-point algebra (``"hat"``) or orbit algebra (``"breve"``).

    ``hat`` gives ``<lam_hat, h'_i> = m_i * lam_i``; ``breve`` gives ``lam_i``.
    Both are indexed by the representatives.
    """
    if mode not in ("hat", "breve"):
        raise ConfigurationError(f"unknown projection mode {mode!r}")
    if not is_invariant(fold, lam):
        raise InvarianceError(
            f"weight {tuple(lam)} is not invariant under omega={fold.cycles()}"
        )
    src = fold.source
    if mode == "breve":
        return tuple(lam[src.index(i)] for i in fold.reps)
    return tuple(m * lam[src.index(i)] for i, m in zip(fold.reps, fold.orbit_sizes))
