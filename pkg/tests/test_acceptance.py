"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line to the terminal.
Run ``python tests/test_acceptance.py`` to get only those lines.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from collections import Counter

import pytest

from crystal_fold.cartan import build_cartan, project_weight, validate_automorphism
from crystal_fold.catalog import catalog_pairs, lookup_pair
from crystal_fold.characters import freudenthal, weyl_dim
from crystal_fold.crystal import CrystalEngine
from crystal_fold.folding import (
    FoldedPairContext,
    eps_omega,
    omega_map,
    similarity_datum,
    upsilon,
    verify_composite,
    verify_doubling,
    verify_similarity_param,
    verify_slice,
)
from crystal_fold.polytope import (
    golden_cone,
    hrep_lattice_points,
    string_box_points,
    verify_folding_theorem,
    verify_saturation,
)
from crystal_fold.weyl import (
    is_reduced,
    longest_word,
    reduced_words,
    theta_word,
    word_to_element,
)

A3_FOLD = lookup_pair("A3:D3").left
D3_FOLD = lookup_pair("A3:D3").right
WORD = (1, 2, 1)

# (fold, lambda on the source, word over the representatives)
THEOREM_INSTANCES = [
    (A3_FOLD, (1, 1, 1), WORD),
    (A3_FOLD, (2, 1, 2), WORD),
    (D3_FOLD, (1, 1, 1), WORD),
    # (2,1,2) on A3 labels is (1,2,2) on D3 labels
    (D3_FOLD, (1, 2, 2), WORD),
    (lookup_pair("A5:D4").left, (1, 1, 1, 1, 1), (1, 2, 3, 2)),
    (lookup_pair("A5:D4").right, (1, 1, 1, 1), (1, 2, 3, 2)),
]


def _report(number: int, ok: bool, detail: str, started: float) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail}; {time.time() - started:.1f}s)"
    capman = _CAPTURE.get("manager")
    if capman is not None:
        with capman.global_and_fixture_disabled():
            sys.stdout.write("\n" + line + "\n")
    else:
        print(line)


_CAPTURE: dict = {}


@pytest.fixture(autouse=True)
def _terminal(request):
    _CAPTURE["manager"] = request.config.pluginmanager.getplugin("capturemanager")
    yield
    _CAPTURE.pop("manager", None)


def _short_reduced_words(cartan, max_len):
    out, frontier = [], [()]
    for _ in range(max_len):
        frontier = [w + (i,) for w in frontier for i in cartan.labels if is_reduced(cartan, w + (i,))]
        out.extend(frontier)
    return out


# ---------------------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    checks = []
    checks.append(theta_word(A3_FOLD, WORD).letters == (1, 3, 2, 1, 3))
    checks.append(theta_word(D3_FOLD, WORD).letters == (1, 2, 3, 1))
    rng = random.Random(59)
    formulas = [
        (lambda a: upsilon(A3_FOLD, WORD, a), lambda a: (a[0], a[0], a[1], a[2], a[2]), 3),
        (lambda a: omega_map(A3_FOLD, WORD, a), lambda a: (a[0] + a[1], a[2], a[3] + a[4]), 5),
        (lambda a: upsilon(D3_FOLD, WORD, a), lambda a: (a[0], a[1], a[1], a[2]), 3),
        (lambda a: omega_map(D3_FOLD, WORD, a), lambda a: (a[0], a[1] + a[2], a[3]), 4),
    ]
    for impl, ref, dim in formulas:
        for _ in range(100):
            a = tuple(rng.randint(-50, 50) for _ in range(dim))
            checks.append(impl(a) == ref(a))
    bound = 4
    cones = [("A3", (1, 3, 2, 1, 3)), ("B2", WORD), ("C2", WORD), ("D3", (1, 2, 3, 1))]
    sizes = []
    for tag, word in cones:
        got = string_box_points(CrystalEngine(tag), word, bound)
        want = hrep_lattice_points(golden_cone(tag), bound)
        checks.append(got.points == want.points)
        sizes.append(f"{tag}:{len(got)}")
    # the A3 system is a3 >= a4, a3 >= a5 on the nonnegative box
    box = itertools.product(range(bound + 1), repeat=5)
    explicit = {a for a in box if a[2] >= a[3] and a[2] >= a[4]}
    checks.append(string_box_points(CrystalEngine("A3"), (1, 3, 2, 1, 3), bound).points == explicit)
    return all(checks), f"{len(checks)} checks, box points {' '.join(sizes)}"


def criterion_2() -> tuple[bool, str]:
    reports = []
    for lam, lam_r in (((1, 1, 1), (1, 1, 1)), ((2, 1, 2), (1, 2, 2))):
        reports += verify_folding_theorem(lookup_pair("A3:D3"), lam, WORD, ("string", "nz"), 2,
                                          lam_right=lam_r)
    reports += verify_folding_theorem(lookup_pair("A5:D4"), (1, 1, 1, 1, 1), (1, 2, 3, 2),
                                      ("string", "nz"), 2, lam_right=(1, 1, 1, 1))
    eq = [r for r in reports if r.check == "folding-equality"]
    bad = [r.to_json() for r in reports if not r.passed]
    return not bad, f"{len(reports)} reports, {len(eq)} equality instances, failures {bad[:1]}"


def criterion_3() -> tuple[bool, str]:
    pairs = catalog_pairs(include_affine=False)
    results = []
    for pair in pairs:
        word = longest_word(pair.left.orbit_cartan).letters
        results.append(verify_composite(pair, word))
    ok = all(r.passed for r in results)
    ls = ",".join(f"{p.name}=L{p.L}" for p in pairs)
    return ok and {p.L for p in pairs} == {2, 3}, ls


def criterion_4() -> tuple[bool, str]:
    reports = []
    for fold, lams in ((A3_FOLD, [(1, 1, 1), (2, 1, 2)]), (D3_FOLD, [(1, 1, 1), (1, 2, 2)])):
        ctx = FoldedPairContext(fold, WORD)
        for lam in lams:
            reports += verify_slice(ctx, lam)
    # slice conditions: blocks of equal coordinates along Theta(word), 1-based
    blocks = {}
    for fold in (A3_FOLD, D3_FOLD):
        pos, eq = 1, []
        for i in WORD:
            m = fold.m(i)
            if m > 1:
                eq.append(tuple(range(pos, pos + m)))
            pos += m
        blocks[fold.source.type_tag] = eq
    shape_ok = blocks == {"A3": [(1, 2), (4, 5)], "D3": [(2, 3)]}
    ok = shape_ok and all(r.passed for r in reports)
    return ok, f"{len(reports)} reports, equal blocks {blocks}"


def criterion_5() -> tuple[bool, str]:
    count = 0
    failures = []
    grid = [(tag, lam) for tag in ("A1", "A2", "A3", "B2", "C2", "G2")
            for lam in itertools.product(range(3), repeat=build_cartan(tag).rank)]
    grid += [("D4", tuple(int(i == k) for i in range(4))) for k in range(4)]
    for tag, lam in grid:
        c = build_cartan(tag)
        elements = CrystalEngine(c).enumerate_demazure(lam, longest_word(c))
        if len(elements) != weyl_dim(c, lam):
            failures.append((tag, lam, "dim"))
        elif Counter(b.weight for b in elements) != Counter(freudenthal(c, lam)):
            failures.append((tag, lam, "mult"))
        count += 1
    return not failures, f"{count} weights, failures {failures[:3]}"


def criterion_6() -> tuple[bool, str]:
    checked = 0
    for tag in ("A2", "A3", "B2", "C2"):
        eng = CrystalEngine(tag)
        for b in eng.enumerate_depth(6):
            s = eng.star(b)
            if eng.star(s) != b or s.weight != b.weight:
                return False, f"star fails on {tag} {b.coords}"
            checked += 1
    fixed = 0
    for fold in (A3_FOLD, D3_FOLD):
        ctx = FoldedPairContext(fold)
        for b in ctx.fixed_elements(6):
            for i in fold.reps:
                e = eps_omega(fold, b, i)
                if any(b.eps(j) != e for j in fold.orbit_of(i)):
                    return False, f"eps_omega fails on {fold.source.type_tag} {b.coords}"
            if ctx.p_infty(ctx.big.star(b)) != ctx.small_orbit.star(ctx.p_infty(b)):
                return False, f"p_infty/star fails on {fold.source.type_tag} {b.coords}"
            fixed += 1
    return True, f"{checked} elements for star, {fixed} fixed elements"


def criterion_7() -> tuple[bool, str]:
    runs = 0
    for n in (2, 3):
        for source, target in ((f"B{n}", f"C{n}"), (f"C{n}", f"B{n}")):
            datum = similarity_datum(source, target)
            for word in _short_reduced_words(build_cartan(source), 4):
                reports = verify_similarity_param(datum, word, 5)
                reports.append(verify_doubling(n, word, 5, source[0]))
                bad = [r.to_json() for r in reports if not r.passed]
                if bad:
                    return False, f"{source}->{target} word {word}: {bad[0]}"
                runs += 1
    return True, f"{runs} (datum, word) runs at depth 5"


def criterion_8() -> tuple[bool, str]:
    runs = 0
    for fold, lam, word in THEOREM_INSTANCES:
        theta = theta_word(fold, word)
        lam_hat = project_weight(fold, lam, "hat")
        sides = [(CrystalEngine(fold.source), lam, theta),
                 (CrystalEngine(fold.fixed_cartan), lam_hat, word)]
        for eng, lam_side, w in sides:
            for kind in ("string", "nz"):
                report = verify_saturation(eng, kind, lam_side, w, samples=50, k_max=2, seed=runs)
                if not report.passed:
                    return False, str(report.to_json())
                runs += 1
    return True, f"{runs} instances x 50 samples"


def _elements(cartan):
    seen = {}
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            el = word_to_element(cartan, w)
            if el in seen:
                continue
            seen[el] = w
            nxt.extend(w + (i,) for i in cartan.labels if is_reduced(cartan, w + (i,)))
        frontier = nxt
    return list(seen)


def criterion_9() -> tuple[bool, str]:
    tested = 0
    for tag, lams in (("A3", [(1, 1, 1), (2, 0, 1)]), ("C2", [(1, 1), (0, 2)])):
        c = build_cartan(tag)
        eng = CrystalEngine(c)
        for el in _elements(c):
            words = reduced_words(el)
            if len(words) < 2:
                continue
            for lam in lams:
                sets = {tuple(b.coords for b in eng.enumerate_demazure(lam, w)) for w in words}
                if len(sets) != 1:
                    return False, f"{tag} element with words {words[:2]} at {lam}"
            tested += 1
    return True, f"{tested} Weyl elements with several reduced words"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("number", range(1, 10))
def test_criterion(number):
    started = time.time()
    ok, detail = CRITERIA[number - 1]()
    _report(number, ok, detail, started)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, crit in enumerate(CRITERIA, 1):
        t0 = time.time()
        ok, detail = crit()
        _report(n, ok, detail, t0)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
