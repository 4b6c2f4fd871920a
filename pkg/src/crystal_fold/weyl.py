"""Root systems and reduced words in the Weyl group.

Roots are kept in root-lattice coordinates; Weyl elements carry both their
action on weights (fundamental-weight coordinates) and on roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cartan import CartanDatum, FoldingDatum
from .errors import WordError

Vec = tuple[int, ...]
Mat = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def positive_roots(cartan: CartanDatum) -> tuple[Vec, ...]:
    """Closure of the simple roots under simple reflections, sorted by height."""
    n = cartan.rank
    simple = [tuple(int(a == b) for b in range(n)) for a in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(n):
                pairing = sum(cartan.matrix[j][k] * beta[k] for k in range(n))
                if pairing == 0:
                    continue
                gamma = tuple(b - pairing * (k == j) for k, b in enumerate(beta))
                if all(g >= 0 for g in gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), tuple(-x for x in r))))


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _apply(m: Mat, v: Sequence[int]) -> Vec:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


@lru_cache(maxsize=None)
def _reflections(cartan: CartanDatum) -> tuple[tuple[Mat, ...], tuple[Mat, ...]]:
    n, c = cartan.rank, cartan.matrix
    on_weights, on_roots = [], []
    for i in range(n):
        # lambda -> lambda - lambda_i * alpha_i, alpha_i = column i of C
        on_weights.append(tuple(
            tuple(int(r == k) - (c[r][i] if k == i else 0) for k in range(n))
            for r in range(n)
        ))
        # beta -> beta - <beta, h_i> e_i
        on_roots.append(tuple(
            tuple(int(r == k) - (c[i][k] if r == i else 0) for k in range(n))
            for r in range(n)
        ))
    return tuple(on_weights), tuple(on_roots)


@dataclass(frozen=True)
class WeylElement:
    cartan: CartanDatum
    matrix: Mat
    root_matrix: Mat
    length: int

    def act(self, weight: Sequence[int]) -> Vec:
        return _apply(self.matrix, weight)

    def act_root(self, root: Sequence[int]) -> Vec:
        return _apply(self.root_matrix, root)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeylElement)
            and self.cartan == other.cartan
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __mul__(self, other: WeylElement) -> WeylElement:
        root_matrix = _matmul(self.root_matrix, other.root_matrix)
        return WeylElement(
            self.cartan,
            _matmul(self.matrix, other.matrix),
            root_matrix,
            _length(self.cartan, root_matrix),
        )


def _length(cartan: CartanDatum, root_matrix: Mat) -> int:
    return sum(
        1 for beta in positive_roots(cartan)
        if any(x < 0 for x in _apply(root_matrix, beta))
    )


def identity_element(cartan: CartanDatum) -> WeylElement:
    eye = tuple(tuple(int(i == j) for j in range(cartan.rank)) for i in range(cartan.rank))
    return WeylElement(cartan, eye, eye, 0)


def _indices(cartan: CartanDatum, word: Iterable[int]) -> list[int]:
    try:
        return [cartan.index(letter) for letter in word]
    except Exception:
        raise WordError(f"word {tuple(word)} has letters outside {cartan.labels}") from None


def word_to_element(cartan: CartanDatum, word: Sequence[int]) -> WeylElement:
    on_w, on_r = _reflections(cartan)
    w = identity_element(cartan)
    m, r = w.matrix, w.root_matrix
    for i in _indices(cartan, word):
        m, r = _matmul(m, on_w[i]), _matmul(r, on_r[i])
    return WeylElement(cartan, m, r, _length(cartan, r))


def is_reduced(cartan: CartanDatum, word: Sequence[int]) -> bool:
    # l(w s_i) = l(w) + 1 iff w(alpha_i) > 0
    _, on_r = _reflections(cartan)
    r = identity_element(cartan).root_matrix
    for i in _indices(cartan, word):
        if any(row[i] < 0 for row in r):
            return False
        r = _matmul(r, on_r[i])
    return True


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple[int, ...]
    element: WeylElement

    def __post_init__(self) -> None:
        if self.element.length != len(self.letters):
            raise WordError(f"word {self.letters} is not reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def cartan(self) -> CartanDatum:
        return self.element.cartan

    def reversed(self) -> ReducedWord:
        return reduced_word(self.cartan, self.letters[::-1])


def reduced_word(cartan: CartanDatum, word: Sequence[int]) -> ReducedWord:
    return _reduced_word(cartan, tuple(int(x) for x in word))


@lru_cache(maxsize=4096)
def _reduced_word(cartan: CartanDatum, letters: tuple[int, ...]) -> ReducedWord:
    if not is_reduced(cartan, letters):
        raise WordError(f"word {letters} is not reduced for {cartan.type_tag}")
    return ReducedWord(letters, word_to_element(cartan, letters))


def as_reduced(cartan: CartanDatum, word) -> ReducedWord:
    if isinstance(word, ReducedWord):
        if word.cartan == cartan:
            return word
        word = word.letters
    return reduced_word(cartan, word)


@lru_cache(maxsize=None)
def longest_word(cartan: CartanDatum) -> ReducedWord:
    _, on_r = _reflections(cartan)
    r = identity_element(cartan).root_matrix
    letters: list[int] = []
    while True:
        for i in range(cartan.rank):
            if all(row[i] >= 0 for row in r):
                letters.append(cartan.labels[i])
                r = _matmul(r, on_r[i])
                break
        else:
            break
    return reduced_word(cartan, letters)


def reduced_words(element: WeylElement) -> list[tuple[int, ...]]:
    """All reduced words of ``element``, sorted."""
    cartan = element.cartan
    _, on_r = _reflections(cartan)
    memo: dict[Mat, list[tuple[int, ...]]] = {}

    def words(r: Mat) -> list[tuple[int, ...]]:
        if r in memo:
            return memo[r]
        out: list[tuple[int, ...]] = []
        # right descents: w(alpha_i) < 0
        for i in range(cartan.rank):
            if any(row[i] < 0 for row in r):
                shorter = _matmul(r, on_r[i])
                out.extend(u + (cartan.labels[i],) for u in words(shorter))
        memo[r] = out if out else [()]
        return memo[r]

    return sorted(words(element.root_matrix))


def theta_word(fold: FoldingDatum, word: Sequence[int]) -> ReducedWord:
    """Expand each letter ``i`` of a word over the representatives into its orbit."""
    letters = tuple(int(x) for x in word)
    if not is_reduced(fold.orbit_cartan, letters):
        raise WordError(
            f"word {letters} is not reduced for the orbit algebra "
            f"{fold.orbit_cartan.type_tag}"
        )
    expanded = tuple(j for i in letters for j in fold.orbit_of(i))
    result = reduced_word(fold.source, expanded)
    return result


def omega_matrix(fold: FoldingDatum) -> Mat:
    """Action of ``omega`` on weights as a permutation matrix."""
    src = fold.source
    n = src.rank
    rows = [[0] * n for _ in range(n)]
    for i in src.labels:
        rows[src.index(fold.perm[i])][src.index(i)] = 1
    return tuple(map(tuple, rows))
