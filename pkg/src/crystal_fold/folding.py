"""Diagram automorphisms acting on crystals, and the maps built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cartan import (
    CartanDatum,
    FoldingDatum,
    build_cartan,
    cartan_from_matrix,
    check_cartan_matrix,
    is_invariant,
    project_weight,
)
from .catalog import FoldingPair, lookup_pair
from .crystal import CrystalElt, CrystalEngine
from .errors import (
    ConfigurationError,
    FixednessError,
    InvarianceError,
    ShapeError,
)
from .reports import Report
from .weyl import ReducedWord, as_reduced, theta_word


# ---------------------------------------------------------------------------
# omega on B(infinity)


def omega_act(fold: FoldingDatum, b: CrystalElt) -> CrystalElt:
    perm = fold.perm
    return b.engine.from_fstring([perm[j] for j in b.fstring])


def is_fixed(fold: FoldingDatum, b: CrystalElt) -> bool:
    return omega_act(fold, b) == b


def omega_kashiwara(fold: FoldingDatum, b: CrystalElt, i: int, which: str = "f",
                    power: int = 1, check: bool = True) -> CrystalElt | None:
    """``(X_i^omega)^power b`` where ``X_i^omega`` runs ``X`` over the orbit of ``i``."""
    if which not in ("e", "f"):
        raise ConfigurationError(f"omega-Kashiwara operator must be 'e' or 'f', got {which!r}")
    if check and not is_fixed(fold, b):
        raise FixednessError(f"element {b.coords} is not fixed by omega={fold.cycles()}")
    if i not in fold.reps:
        raise ConfigurationError(f"{i} is not an orbit representative {fold.reps}")
    cur: CrystalElt | None = b
    for _ in range(power):
        for j in fold.orbit_of(i):
            cur = cur.f(j) if which == "f" else cur.e(j)
            if cur is None:
                return None
    return cur


def eps_omega(fold: FoldingDatum, b: CrystalElt, i: int) -> int:
    k = 0
    cur = omega_kashiwara(fold, b, i, "e", check=True)
    while cur is not None:
        k += 1
        cur = omega_kashiwara(fold, cur, i, "e", check=False)
    return k


# ---------------------------------------------------------------------------
# context for one fold and one word


class FoldedPairContext:
    """Crystal engines attached to a fold, with an optional word over the representatives."""

    def __init__(self, fold: FoldingDatum, word: Sequence[int] | ReducedWord | None = None,
                 iota_period: Sequence[int] | None = None):
        self.fold = fold
        self.big = CrystalEngine(fold.source, iota_period)
        self.small_orbit = CrystalEngine(fold.orbit_cartan)
        self.small_fixed = CrystalEngine(fold.fixed_cartan)
        self.word: ReducedWord | None = None
        self.theta_word: ReducedWord | None = None
        if word is not None:
            letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
            self.word = as_reduced(fold.orbit_cartan, letters)
            self.theta_word = theta_word(fold, letters)

    def require_word(self) -> ReducedWord:
        if self.word is None:
            raise ConfigurationError("this operation needs a reduced word")
        return self.word

    # -- P_infinity --------------------------------------------------------

    def p_infty(self, b: CrystalElt) -> CrystalElt:
        fold = self.fold
        if not is_fixed(fold, b):
            raise FixednessError(f"element {b.coords} is not fixed by omega={fold.cycles()}")
        letters = []
        cur = b
        while not cur.is_highest:
            for i in fold.reps:
                if cur.eps(i) > 0:
                    nxt = omega_kashiwara(fold, cur, i, "e", check=False)
                    break
            else:
                nxt = None
            if nxt is None:
                raise FixednessError(f"omega-string extraction stuck at {cur.coords}")
            letters.append(i)
            cur = nxt
        return self.small_orbit.from_fstring(letters)

    def p_infty_inv(self, bb: CrystalElt) -> CrystalElt:
        cur = self.big.highest
        for i in reversed(bb.fstring):
            cur = omega_kashiwara(self.fold, cur, i, "f", check=False)
        return cur

    def fixed_elements(self, depth: int, word=None) -> list[CrystalElt]:
        """omega-fixed elements of ``B_{Theta(w)}(infinity)`` (or all of B(infinity)) up to ``depth``."""
        if word is None:
            pool = self.big.enumerate_depth(depth)
        else:
            pool = self.big.enumerate_infty(theta_word(self.fold, word), depth)
        return [b for b in pool if is_fixed(self.fold, b)]


# ---------------------------------------------------------------------------
# Upsilon and Omega


def _orbit_sizes_along(fold: FoldingDatum, word: Sequence[int]) -> list[int]:
    try:
        return [fold.m(i) for i in word]
    except ValueError:
        raise ShapeError(f"word {tuple(word)} has letters outside {fold.reps}") from None


def upsilon(fold: FoldingDatum, word: Sequence[int], a: Sequence) -> tuple:
    sizes = _orbit_sizes_along(fold, word)
    if len(a) != len(sizes):
        raise ShapeError(f"vector of length {len(a)} for a word of length {len(sizes)}")
    return tuple(x for x, m in zip(a, sizes) for _ in range(m))


def omega_map(fold: FoldingDatum, word: Sequence[int], v: Sequence) -> tuple:
    sizes = _orbit_sizes_along(fold, word)
    if len(v) != sum(sizes):
        raise ShapeError(f"vector of length {len(v)}, expected {sum(sizes)}")
    out, pos = [], 0
    for m in sizes:
        out.append(sum(v[pos:pos + m]))
        pos += m
    return tuple(out)


def upsilon_matrix(fold: FoldingDatum, word: Sequence[int]) -> list[list[int]]:
    r = len(word)
    return [list(col) for col in zip(*[upsilon(fold, word, [int(k == j) for k in range(r)])
                                        for j in range(r)])]


def omega_matrix_map(fold: FoldingDatum, word: Sequence[int]) -> list[list[int]]:
    big = sum(_orbit_sizes_along(fold, word))
    return [list(col) for col in zip(*[omega_map(fold, word, [int(k == j) for k in range(big)])
                                        for j in range(big)])]


def composite(pair: FoldingPair, word: Sequence[int], a: Sequence, order: str = "left") -> tuple:
    """``Omega Upsilon Omega' Upsilon'`` (``order='left'``) or the other composite.

    The right-hand maps see the word relabeled through the identification.
    """
    word_r = [pair.to_right(i) for i in word]
    if order == "left":
        v = omega_map(pair.right, word_r, upsilon(pair.right, word_r, a))
        return omega_map(pair.left, word, upsilon(pair.left, word, v))
    if order == "right":
        v = omega_map(pair.left, word, upsilon(pair.left, word, a))
        return omega_map(pair.right, word_r, upsilon(pair.right, word_r, v))
    raise ConfigurationError(f"unknown composite order {order!r}")


def verify_composite(pair: FoldingPair, word: Sequence[int]) -> Report:
    report = Report("composite-identity", {"pair": pair.name, "word": list(word), "L": pair.L})
    r = len(word)
    for order in ("left", "right"):
        for j in range(r):
            e = tuple(Fraction(int(k == j)) for k in range(r))
            got = composite(pair, word, e, order)
            if got != tuple(pair.L * x for x in e):
                return report.fail({"order": order, "basis": j, "image": list(got)})
    return report


# ---------------------------------------------------------------------------
# similarity of crystals


@dataclass(frozen=True)
class SimilarityDatum:
    """Target algebra ``g`` and multipliers ``m``; the source algebra ``g'`` is derived."""

    target: CartanDatum
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.m) != self.target.rank or any(x <= 0 for x in self.m):
            raise ConfigurationError("similarity multipliers must be positive, one per node")
        c = self.target.matrix
        n = self.target.rank
        for i in range(n):
            for j in range(n):
                if (self.m[j] * c[i][j]) % self.m[i]:
                    raise ConfigurationError(
                        f"m_{j + 1} alpha_{j + 1} is not integral against h_{i + 1}/m_{i + 1}"
                    )
        try:
            check_cartan_matrix(self._matrix())
        except ConfigurationError as exc:
            raise ConfigurationError(f"invalid similarity datum: {exc}") from None

    def _matrix(self):
        c, m, n = self.target.matrix, self.m, self.target.rank
        return tuple(tuple(m[j] * c[i][j] // m[i] for j in range(n)) for i in range(n))

    @cached_property
    def source(self) -> CartanDatum:
        return cartan_from_matrix(self._matrix(), self.target.labels)

    def is_trivial(self) -> bool:
        return all(x == 1 for x in self.m)


def similarity_datum(source: str, target: str) -> SimilarityDatum:
    """Built-in data relating ``B_n`` and ``C_n``, or the trivial datum on one type."""
    src, tgt = build_cartan(source), build_cartan(target)
    n = tgt.rank
    if src.type_tag == tgt.type_tag:
        datum = SimilarityDatum(tgt, (1,) * n)
    elif src.type_tag[0] == "B" and tgt.type_tag[0] == "C" and src.rank == n:
        datum = SimilarityDatum(tgt, (2,) * (n - 1) + (1,))
    elif src.type_tag[0] == "C" and tgt.type_tag[0] == "B" and src.rank == n:
        datum = SimilarityDatum(tgt, (1,) * (n - 1) + (2,))
    else:
        raise ConfigurationError(f"no built-in similarity datum {source} -> {target}")
    if datum.source.matrix != src.matrix:
        raise ConfigurationError(f"similarity datum does not produce {source}")
    return datum


def similarity(datum: SimilarityDatum, b: CrystalElt, target: CrystalEngine | None = None,
               fstring: Sequence[int] | None = None) -> CrystalElt:
    """Replay an fstring of ``b`` with letter ``j`` repeated ``m_j`` times."""
    if b.engine.cartan.matrix != datum.source.matrix:
        raise ConfigurationError("element does not live on the similarity source algebra")
    target = target or CrystalEngine(datum.target)
    fs = b.fstring if fstring is None else tuple(fstring)
    labels = datum.target.labels
    out = [j for j in fs for _ in range(datum.m[labels.index(j)])]
    return target.from_fstring(out)


def _fold_for_similarity(datum: SimilarityDatum) -> FoldingDatum:
    """The fold whose ``Omega o Upsilon`` matches the datum (A for B->C, D for C->B)."""
    n = datum.target.rank
    fam = datum.target.type_tag[0]
    if datum.is_trivial():
        from .cartan import identity_fold
        return identity_fold(datum.target)
    if fam == "C":
        return lookup_pair(f"A{2 * n - 1}", f"D{n + 1}").left
    if fam == "B":
        return lookup_pair(f"A{2 * n - 1}", f"D{n + 1}").right
    raise ConfigurationError(f"no fold for similarity onto {datum.target.type_tag}")


def verify_similarity_param(datum: SimilarityDatum, word: Sequence[int], depth: int,
                            iota_period=None) -> list[Report]:
    """Check both parametrization identities on ``B_w(infinity)`` up to ``depth``."""
    if depth < 1:
        raise ConfigurationError("depth must be at least 1")
    fold = _fold_for_similarity(datum)
    src = CrystalEngine(datum.source, iota_period)
    tgt = CrystalEngine(datum.target)
    w = as_reduced(datum.source, word)
    letters = list(w.letters)
    as_reduced(datum.target, letters)
    name = f"{datum.source.type_tag}->{datum.target.type_tag}"
    reports = {k: Report(f"similarity-{k}", {"datum": name, "word": letters, "depth": depth,
                                              "m": list(datum.m), "fold": fold.source.type_tag})
               for k in ("string", "nz", "weight")}
    elements = src.enumerate_infty(w, depth)
    for b in elements:
        sb = similarity(datum, b, tgt)
        lhs = tgt.string_param(sb, w)
        rhs = omega_map(fold, letters, upsilon(fold, letters, src.string_param(b, w)))
        if lhs != rhs:
            reports["string"].fail({"coords": list(b.coords), "lhs": list(lhs), "rhs": list(rhs)})
        lhs = tgt.kashiwara_param(sb, w)
        rhs = omega_map(fold, letters, upsilon(fold, letters, src.kashiwara_param(b, w)))
        if lhs != rhs:
            reports["nz"].fail({"coords": list(b.coords), "lhs": list(lhs), "rhs": list(rhs)})
        # S multiplies the alpha_j-content by m_j
        rc_b, rc_s = src.root_content(b.coords), tgt.root_content(sb.coords)
        if rc_s != tuple(x * mj for x, mj in zip(rc_b, datum.m)):
            reports["weight"].fail({"coords": list(b.coords)})
    for r in reports.values():
        r.details["elements"] = len(elements)
    return list(reports.values())


def verify_doubling(n: int, word: Sequence[int], depth: int, family: str = "B") -> Report:
    """``S^{C,B} o S^{B,C}`` (or the reverse) doubles the statistics and every Kashiwara step."""
    other = "C" if family == "B" else "B"
    there = similarity_datum(f"{family}{n}", f"{other}{n}")
    back = similarity_datum(f"{other}{n}", f"{family}{n}")
    home = CrystalEngine(build_cartan(f"{family}{n}"))
    away = CrystalEngine(there.target)
    report = Report("similarity-doubling", {"type": f"{family}{n}", "word": list(word),
                                            "depth": depth})

    def s2(b: CrystalElt) -> CrystalElt:
        return similarity(back, similarity(there, b, away), home)

    elements = home.enumerate_infty(as_reduced(home.cartan, word), depth)
    for b in elements:
        sb = s2(b)
        for i in home.cartan.labels:
            if sb.eps(i) != 2 * b.eps(i) or sb.phi(i) != 2 * b.phi(i):
                return report.fail({"coords": list(b.coords), "label": i, "kind": "eps/phi"})
            if s2(b.f(i)) != sb.f(i).f(i):
                return report.fail({"coords": list(b.coords), "label": i, "kind": "f"})
            eb = b.e(i)
            if eb is not None:
                e2 = sb.e(i)
                e2 = e2.e(i) if e2 is not None else None
                if e2 != s2(eb):
                    return report.fail({"coords": list(b.coords), "label": i, "kind": "e"})
    report.details["elements"] = len(elements)
    return report


# ---------------------------------------------------------------------------
# slice identities


def _slice_condition(fold: FoldingDatum, word: Sequence[int], v: Sequence[int]) -> bool:
    pos = 0
    for m in _orbit_sizes_along(fold, word):
        block = v[pos:pos + m]
        if any(x != block[0] for x in block):
            return False
        pos += m
    return True


def verify_slice(ctx: FoldedPairContext, lam: Sequence[int]) -> list[Report]:
    """Orbit-algebra Demazure parametrizations versus the omega-slice of the source ones."""
    fold = ctx.fold
    word = ctx.require_word()
    theta = ctx.theta_word
    lam = tuple(int(x) for x in lam)
    if not is_invariant(fold, lam):
        raise InvarianceError(f"weight {lam} is not invariant under omega={fold.cycles()}")
    lam_b = project_weight(fold, lam, "breve")
    letters = list(word.letters)
    inst = {"fold": f"{fold.source.type_tag}{fold.cycles()}", "word": letters,
            "theta": list(theta.letters), "lambda": list(lam)}
    big = ctx.big.enumerate_demazure(lam, theta)
    small = ctx.small_orbit.enumerate_demazure(lam_b, word)
    reports = []
    for kind in ("string", "nz"):
        par_big = ctx.big.string_param if kind == "string" else ctx.big.kashiwara_param
        par_small = (ctx.small_orbit.string_param if kind == "string"
                     else ctx.small_orbit.kashiwara_param)
        rep = Report(f"slice-{kind}", dict(inst))
        big_pts = {par_big(b.lift, theta) for b in big}
        sliced = {a for a in big_pts if _slice_condition(fold, letters, a)}
        lifted = {upsilon(fold, letters, par_small(b.lift, word)) for b in small}
        if sliced != lifted:
            diff = sorted(sliced ^ lifted)
            rep.fail(list(diff[0]))
        rep.details.update(slice_points=len(sliced), orbit_points=len(lifted),
                           source_points=len(big_pts))
        reports.append(rep)
        # element-wise: Upsilon(param(b)) == param(P_inf^{-1}(b)) and the lift stays in B(lambda)
        elem = Report(f"slice-elementwise-{kind}", dict(inst))
        big_coords = {b.coords for b in big}
        for b in small:
            lifted_b = ctx.p_infty_inv(b.lift)
            if (upsilon(fold, letters, par_small(b.lift, word)) != par_big(lifted_b, theta)
                    or lifted_b.coords not in big_coords):
                elem.fail(list(b.coords))
                break
        elem.details["elements"] = len(small)
        reports.append(elem)
    return reports
