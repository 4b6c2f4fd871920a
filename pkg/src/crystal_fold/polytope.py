"""Lattice point sets and rational polytopes for the folding verifier.

Everything here is exact: points are integer or ``Fraction`` tuples, and hull
membership is decided by the rational simplex in :mod:`crystal_fold.lp`.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

from .cartan import FoldingDatum, is_invariant, project_weight
from .catalog import FoldingPair
from .crystal import CrystalEngine
from .errors import ConfigurationError, EmptinessError, InvarianceError, ShapeError
from .folding import omega_map
from .lp import HullOracle
from .reports import Report
from .weyl import as_reduced, theta_word

QVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class LatticePointSet:
    dim: int
    points: frozenset[tuple[int, ...]]
    dilation: int = 1

    def __post_init__(self) -> None:
        if any(len(p) != self.dim for p in self.points):
            raise ShapeError(f"every point must have length {self.dim}")
        if self.dilation < 1:
            raise ConfigurationError("dilation must be positive")

    @classmethod
    def of(cls, dim: int, points: Iterable[Sequence[int]], dilation: int = 1) -> LatticePointSet:
        return cls(dim, frozenset(tuple(int(x) for x in p) for p in points), dilation)

    def sorted_points(self) -> list[tuple[int, ...]]:
        return sorted(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def polytope(self) -> RationalPolytope:
        """Hull of the points scaled by ``1/dilation``."""
        k = self.dilation
        return RationalPolytope.of(self.dim, [[Fraction(x, k) for x in p] for p in self.points])

    def to_json(self) -> dict:
        return {"dim": self.dim, "k": self.dilation,
                "points": [list(p) for p in self.sorted_points()]}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"a{i + 1}" for i in range(self.dim)])
        writer.writerows(self.sorted_points())
        return buf.getvalue()


@dataclass(frozen=True)
class RationalPolytope:
    """Convex hull of finitely many rational generators (not necessarily vertices)."""

    dim: int
    vrep: tuple[QVec, ...]
    _index: frozenset = field(default=frozenset(), repr=False, compare=False)

    @classmethod
    def of(cls, dim: int, generators: Iterable[Sequence]) -> RationalPolytope:
        gens = sorted({tuple(Fraction(x) for x in g) for g in generators})
        if any(len(g) != dim for g in gens):
            raise ShapeError(f"every generator must have length {dim}")
        return cls(dim, tuple(gens), frozenset(gens))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalPolytope) and self.dim == other.dim and self.vrep == other.vrep

    def __hash__(self) -> int:
        return hash((self.dim, self.vrep))

    @cached_property
    def oracle(self) -> HullOracle:
        return HullOracle(self.vrep)

    def contains(self, p: Sequence) -> bool:
        return hull_contains(p, self)

    def scaled(self, factor) -> RationalPolytope:
        f = Fraction(factor)
        return RationalPolytope.of(self.dim, [[x * f for x in g] for g in self.vrep])

    def to_json(self) -> dict:
        return {"dim": self.dim, "vrep": [[str(x) for x in g] for g in self.vrep]}


def hull_contains(p: Sequence, poly: RationalPolytope) -> bool:
    if not poly.vrep:
        raise EmptinessError("polytope has no generators")
    q = tuple(Fraction(x) for x in p)
    if len(q) != poly.dim:
        raise ShapeError(f"point of length {len(q)} in a polytope of dim {poly.dim}")
    if q in poly._index:
        return True
    return poly.oracle.contains(q)


def subset_witness(s1: RationalPolytope, s2: RationalPolytope) -> QVec | None:
    """A generator of ``s1`` outside ``s2``, or ``None`` when ``s1`` lies in ``s2``."""
    if s1.dim != s2.dim:
        raise ShapeError("polytopes of different dimension")
    if not s1.vrep or not s2.vrep:
        raise EmptinessError("polytope has no generators")
    for g in s1.vrep:
        if g in s2._index:
            continue
        if not s2.oracle.contains(g):
            return g
    return None


def polytopes_equal(s1: RationalPolytope, s2: RationalPolytope) -> bool:
    return subset_witness(s1, s2) is None and subset_witness(s2, s1) is None


def linear_image(matrix: Sequence[Sequence[int]], s):
    """Image of a point set or polytope under an integer matrix."""
    cols = len(matrix[0]) if matrix else 0
    if s.dim != cols:
        raise ShapeError(f"matrix has {cols} columns, set has dim {s.dim}")

    def apply(p):
        return tuple(sum(row[j] * p[j] for j in range(cols)) for row in matrix)

    if isinstance(s, LatticePointSet):
        return LatticePointSet.of(len(matrix), [apply(p) for p in s.points], s.dilation)
    return RationalPolytope.of(len(matrix), [apply(g) for g in s.vrep])


# ---------------------------------------------------------------------------
# inequality systems


@dataclass(frozen=True)
class HRepSystem:
    """Rows ``(r, bound)`` meaning ``r . a <= bound``."""

    dim: int
    inequalities: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    @classmethod
    def of(cls, dim: int, rows: Iterable[tuple[Sequence, object]]) -> HRepSystem:
        ineqs = []
        for r, bound in rows:
            if len(r) != dim:
                raise ShapeError(f"inequality row of length {len(r)}, expected {dim}")
            ineqs.append((tuple(Fraction(x) for x in r), Fraction(bound)))
        return cls(dim, tuple(ineqs))

    def satisfied(self, a: Sequence) -> bool:
        return all(sum(r[i] * a[i] for i in range(self.dim)) <= b for r, b in self.inequalities)

    def with_nonnegativity(self) -> HRepSystem:
        rows = list(self.inequalities)
        for i in range(self.dim):
            rows.append((tuple(Fraction(-int(i == j)) for j in range(self.dim)), Fraction(0)))
        return HRepSystem(self.dim, tuple(rows))


def hrep_lattice_points(h: HRepSystem, box: Sequence[tuple[int, int]] | int) -> LatticePointSet:
    if isinstance(box, int):
        box = [(0, box)] * h.dim
    if len(box) != h.dim:
        raise ShapeError("box must give one range per coordinate")
    ranges = [range(lo, hi + 1) for lo, hi in box]
    return LatticePointSet.of(h.dim, [p for p in itertools.product(*ranges) if h.satisfied(p)])


def _row(dim: int, coeffs: dict[int, int]) -> tuple[int, ...]:
    return tuple(coeffs.get(i + 1, 0) for i in range(dim))


def _system(dim: int, rows: list[tuple[dict[int, int], int]]) -> HRepSystem:
    return HRepSystem.of(dim, [(_row(dim, c), b) for c, b in rows]).with_nonnegativity()


# Golden systems for the rank-2 example (word (1,2,1) over the representatives).
# Cone rows carry no lambda; coefficient maps are {coordinate: coefficient}.

def golden_cone(kind: str) -> HRepSystem:
    """String cones for A3 (Theta word), B2, C2 and D3 (Theta' word)."""
    systems = {
        "A3": (5, [({4: 1, 3: -1}, 0), ({5: 1, 3: -1}, 0)]),
        "B2": (3, [({3: 1, 2: -1}, 0)]),
        "C2": (3, [({3: 1, 2: -2}, 0)]),
        "D3": (4, [({4: 1, 2: -1, 3: -1}, 0)]),
    }
    if kind not in systems:
        raise ConfigurationError(f"no golden cone for {kind!r}")
    dim, rows = systems[kind]
    return _system(dim, rows)


def golden_polytope(kind: str, lam1: int, lam2: int) -> HRepSystem:
    """String polytopes for A3 with ``lambda = (lam1, lam2, lam1)`` and C2 with ``(2 lam1, lam2)``."""
    if kind == "A3":
        return _system(5, [
            ({4: 1, 3: -1}, 0), ({5: 1, 3: -1}, 0),
            ({5: 1}, lam1), ({4: 1}, lam1),
            ({3: 1, 4: -1, 5: -1}, lam2),
            ({2: 1, 3: -1, 5: 2}, lam1),
            ({1: 1, 3: -1, 4: 2}, lam1),
        ])
    if kind == "C2":
        return _system(3, [
            ({3: 1, 2: -2}, 0),
            ({3: 1}, 2 * lam1),
            ({2: 1, 3: -1}, lam2),
            ({1: 1, 2: -2, 3: 2}, 2 * lam1),
        ])
    raise ConfigurationError(f"no golden polytope for {kind!r}")


# ---------------------------------------------------------------------------
# string and Nakashima-Zelevinsky point sets


def string_polytope_points(engine: CrystalEngine, kind: str, lam: Sequence[int], word,
                           k: int = 1) -> LatticePointSet:
    """``{param(b) : b in B_w(k lambda)}`` for ``kind`` in ``string`` or ``nz``."""
    if k < 1:
        raise ConfigurationError("dilation k must be at least 1")
    word = as_reduced(engine.cartan, word)
    lam_k = tuple(k * int(x) for x in lam)
    elements = engine.enumerate_demazure(lam_k, word)
    if kind == "string":
        pts = [engine.string_param(b.lift, word) for b in elements]
    elif kind == "nz":
        pts = [engine.kashiwara_param(b.lift, word) for b in elements]
    else:
        raise ConfigurationError(f"unknown polytope kind {kind!r}")
    return LatticePointSet.of(len(word), pts, k)


def infinity_points(engine: CrystalEngine, kind: str, word, bound: int) -> LatticePointSet:
    """Parametrizations of ``B_w(infinity)`` with every coordinate at most ``bound``.

    A coordinate vector ``a`` of the string image has depth ``sum(a)``, so
    enumerating depth up to ``len(word) * bound`` covers the box.
    """
    word = as_reduced(engine.cartan, word)
    param = engine.string_param if kind == "string" else engine.kashiwara_param
    pts = []
    for b in engine.enumerate_infty(word, bound * len(word)):
        a = param(b, word)
        if max(a, default=0) <= bound:
            pts.append(a)
    return LatticePointSet.of(len(word), pts)


def string_box_points(engine: CrystalEngine, word, bound: int) -> LatticePointSet:
    """``{a in [0, bound]^N : a in Phi(B_w(infinity))}`` by testing every box point."""
    word = as_reduced(engine.cartan, word)
    box = itertools.product(range(bound + 1), repeat=len(word))
    return LatticePointSet.of(len(word), [a for a in box if engine.in_string_image(a, word)])


# ---------------------------------------------------------------------------
# folding verifier


def _fold_instance(fold: FoldingDatum, lam: Sequence[int], word: Sequence[int]):
    lam = tuple(int(x) for x in lam)
    if not is_invariant(fold, lam):
        raise InvarianceError(f"weight {lam} is not invariant under omega={fold.cycles()}")
    if any(x < 0 for x in lam):
        from .errors import DomainError
        raise DomainError(f"weight {lam} is not dominant")
    word = tuple(int(x) for x in word)
    theta = theta_word(fold, word)
    as_reduced(fold.fixed_cartan, word)
    return lam, project_weight(fold, lam, "hat"), word, theta


def folded_point_sets(fold: FoldingDatum, lam, word, kind: str, k: int,
                      big: CrystalEngine | None = None, small: CrystalEngine | None = None):
    """``(Omega(source points), fixed-point-algebra points)`` at level ``k``."""
    lam, lam_hat, word, theta = _fold_instance(fold, lam, word)
    big = big or CrystalEngine(fold.source)
    small = small or CrystalEngine(fold.fixed_cartan)
    src = string_polytope_points(big, kind, lam, theta, k)
    image = LatticePointSet.of(len(word), [omega_map(fold, word, p) for p in src.points], k)
    tgt = string_polytope_points(small, kind, lam_hat, word, k)
    return image, tgt


def verify_folding_theorem(target, lam: Sequence[int], word: Sequence[int],
                           kinds: Sequence[str] = ("string", "nz"), k_max: int = 2,
                           lam_right: Sequence[int] | None = None) -> list[Report]:
    """Compare ``hull(Omega(level-k source points))/k`` with ``hull(level-k points)/k``.

    ``target`` is a fold or a catalog pair; for a pair both sides are checked,
    the right side with ``lam_right`` (default: ``lam``) and the word carried
    through the identification.
    """
    if isinstance(target, FoldingPair):
        word_r = [target.to_right(i) for i in word]
        lam_r = lam if lam_right is None else lam_right
        return (verify_folding_theorem(target.left, lam, word, kinds, k_max)
                + verify_folding_theorem(target.right, lam_r, word_r, kinds, k_max))
    fold: FoldingDatum = target
    if k_max < 1:
        raise ConfigurationError("k_max must be at least 1")
    lam, lam_hat, word, theta = _fold_instance(fold, lam, word)
    big = CrystalEngine(fold.source)
    small = CrystalEngine(fold.fixed_cartan)
    reports = []
    for kind in kinds:
        inst = {"fold": f"{fold.source.type_tag}{fold.cycles()}",
                "fixed": fold.fixed_cartan.type_tag, "kind": kind, "lambda": list(lam),
                "lambda_hat": list(lam_hat), "word": list(word), "theta": list(theta.letters),
                "k_max": k_max}
        inclusion = Report("folding-inclusion", dict(inst))
        equality = Report("folding-equality", dict(inst))
        stable = Report("folding-stabilization", dict(inst))
        prev = None
        for k in range(1, k_max + 1):
            image, tgt = folded_point_sets(fold, lam, word, kind, k, big, small)
            p_k, q_k = image.polytope(), tgt.polytope()
            w1 = subset_witness(p_k, q_k)
            if w1 is not None:
                inclusion.fail({"k": k, "point": list(w1)})
            w2 = subset_witness(q_k, p_k)
            if w1 is not None or w2 is not None:
                equality.fail({"k": k, "point": list(w1 if w1 is not None else w2),
                               "side": "source" if w1 is not None else "fixed"})
            if prev is not None and not polytopes_equal(prev, p_k):
                stable.fail({"k": k})
            prev = p_k
            equality.details[f"k{k}"] = {"source_points": len(image), "fixed_points": len(tgt)}
        reports.extend([inclusion, equality, stable])
    return reports


def verify_saturation(engine: CrystalEngine, kind: str, lam, word, samples: int = 50,
                      k_max: int = 2, seed: int = 0) -> Report:
    """Sums of attained points at levels ``k1, k2`` are attained at ``k1 + k2``."""
    word = as_reduced(engine.cartan, word)
    levels = {k: string_polytope_points(engine, kind, lam, word, k)
              for k in range(1, 2 * k_max + 1)}
    rng = random.Random(seed)
    report = Report("saturation", {"type": engine.cartan.type_tag, "kind": kind,
                                   "lambda": list(lam), "word": list(word.letters),
                                   "samples": samples})
    pools = {k: levels[k].sorted_points() for k in levels}
    for _ in range(samples):
        k1, k2 = rng.randint(1, k_max), rng.randint(1, k_max)
        a, b = rng.choice(pools[k1]), rng.choice(pools[k2])
        s = tuple(x + y for x, y in zip(a, b))
        if s not in levels[k1 + k2].points:
            return report.fail({"k1": k1, "k2": k2, "a": list(a), "b": list(b)})
    return report
