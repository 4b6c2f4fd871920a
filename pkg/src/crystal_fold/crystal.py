"""B(infinity) and B(lambda) in the coordinate-sequence model.

An element of B(infinity) is a finitely supported sequence of non-negative
integers over a periodic index sequence ``iota``; Kashiwara operators act by
the signature rule implemented in the kernel.  ``None`` plays the role of
the crystal zero throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .cartan import CartanDatum, build_cartan
from .errors import ConfigurationError, DomainError, MembershipError, ShapeError
from .kernel import Kernel
from .weyl import ReducedWord, as_reduced, longest_word

Coords = tuple[int, ...]


class CrystalEngine:
    """Crystal operations for one Cartan datum and one choice of ``iota``."""

    def __init__(self, cartan: CartanDatum | str, iota_period: Sequence[int] | None = None,
                 kernel_cls=None):
        if isinstance(cartan, str):
            cartan = build_cartan(cartan)
        self.cartan = cartan
        period = tuple(iota_period) if iota_period is not None else cartan.labels
        if set(period) != set(cartan.labels):
            raise ConfigurationError(
                f"iota period {period} must contain every label of {cartan.type_tag}"
            )
        self.iota_period = period
        self._period_idx = [cartan.index(i) for i in period]
        self.kernel = (kernel_cls or Kernel)(cartan.matrix, self._period_idx)
        self.highest = CrystalElt(self, ())

    # -- plumbing --------------------------------------------------------

    def _i(self, label: int) -> int:
        return self.cartan.index(label)

    def _word(self, word: Iterable[int]) -> list[int]:
        return [self.cartan.index(x) for x in word]

    def elt(self, coords: Sequence[int], check: bool = True) -> CrystalElt:
        x = tuple(int(c) for c in coords)
        end = len(x)
        while end and x[end - 1] == 0:
            end -= 1
        x = x[:end]
        if check:
            if any(c < 0 for c in x):
                raise MembershipError("coordinates must be non-negative")
            fs = self.kernel.extract_fstring(x) if sum(x) else []
            if self.kernel.replay(fs) != x:
                raise MembershipError(f"{x} is not in the image of B(infinity)")
        return CrystalElt(self, x)

    def from_fstring(self, fstring: Sequence[int]) -> CrystalElt:
        """``f_{j_1} ... f_{j_m} b_inf`` for labels ``(j_1, ..., j_m)``."""
        return CrystalElt(self, self.kernel.replay(self._word(fstring)))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CrystalEngine) and self.cartan == other.cartan
                and self.iota_period == other.iota_period)

    def __hash__(self) -> int:
        return hash((self.cartan, self.iota_period))

    def __repr__(self) -> str:
        return f"CrystalEngine({self.cartan.type_tag}, iota={self.iota_period})"

    # -- Kashiwara data --------------------------------------------------

    def f(self, b: CrystalElt, i: int) -> CrystalElt:
        return CrystalElt(self, self.kernel.f(b.coords, self._i(i)))

    def e(self, b: CrystalElt, i: int) -> CrystalElt | None:
        y = self.kernel.e(b.coords, self._i(i))
        return None if y is None else CrystalElt(self, y)

    def eps(self, b: CrystalElt, i: int) -> int:
        return self.kernel.signature(b.coords, self._i(i))[0]

    def phi(self, b: CrystalElt, i: int) -> int:
        return self.kernel.signature(b.coords, self._i(i))[1]

    def kashiwara(self, b: CrystalElt, i: int, which: str):
        ops = {"e": self.e, "f": self.f, "eps": self.eps, "phi": self.phi}
        if which not in ops:
            raise ConfigurationError(f"unknown operator {which!r}")
        return ops[which](b, i)

    def root_content(self, coords: Coords) -> Coords:
        """``-wt`` in simple-root coordinates."""
        out = [0] * self.cartan.rank
        plen = len(self._period_idx)
        for p, x in enumerate(coords):
            out[self._period_idx[p % plen]] += x
        return tuple(out)

    def weight(self, coords: Coords) -> Coords:
        r = self.root_content(coords)
        c = self.cartan.matrix
        n = self.cartan.rank
        return tuple(-sum(c[i][j] * r[j] for j in range(n)) for i in range(n))

    def fstring(self, coords: Coords) -> tuple[int, ...]:
        labels = self.cartan.labels
        return tuple(labels[i] for i in self.kernel.extract_fstring(coords))

    # -- star and parametrizations --------------------------------------

    def _eps_star_idx(self, fs: list[int], i: int):
        return self.kernel.eps_star(fs, i)

    def eps_star(self, b: CrystalElt, i: int) -> tuple[int, CrystalElt]:
        """``(eps_i(b*), (e_i*)^max b)``."""
        m, u, _ = self._eps_star_idx(b._fs_idx, self._i(i))
        return m, CrystalElt(self, u)

    def _star_data(self, b: CrystalElt, word: Sequence[int]) -> tuple[list[int], Coords]:
        fs = b._fs_idx
        u: Coords = b.coords
        a = []
        for i in self._word(word):
            m, u, fs = self._eps_star_idx(fs, i)
            a.append(m)
        return a, u

    def star(self, b: CrystalElt) -> CrystalElt:
        word = longest_word(self.cartan).letters
        a, rest = self._star_data(b, word)
        assert rest == (), "longest word must exhaust B(infinity)"
        fs: list[int] = []
        for i, k in zip(self._word(word), a):
            fs.extend([i] * k)
        return CrystalElt(self, self.kernel.replay(fs))

    def string_param(self, b: CrystalElt, word) -> tuple[int, ...]:
        """Littelmann string parametrization along a reduced word."""
        word = as_reduced(self.cartan, word)
        a, rest = self.kernel.string_extract(b.coords, self._word(word.letters))
        if rest != ():
            raise MembershipError(
                f"element {b.coords} is not in the Demazure crystal of word {word.letters}"
            )
        return tuple(a)

    def kashiwara_param(self, b: CrystalElt, word) -> tuple[int, ...]:
        """Kashiwara embedding coordinates: reversed string data of ``b*`` along the reversed word."""
        word = as_reduced(self.cartan, word)
        a, rest = self._star_data(b, word.letters[::-1])
        if rest != ():
            raise MembershipError(
                f"element {b.coords} is not in the Demazure crystal of word {word.letters}"
            )
        return tuple(a[::-1])

    def from_string_param(self, a: Sequence[int], word: Sequence[int]) -> CrystalElt:
        fs: list[int] = []
        for i, k in zip(word, a):
            fs.extend([i] * int(k))
        return self.from_fstring(fs)

    def in_string_image(self, a: Sequence[int], word) -> bool:
        """Whether ``a`` is the string parametrization of some element."""
        word = as_reduced(self.cartan, word)
        if len(a) != len(word):
            raise ShapeError("vector length differs from word length")
        if any(x < 0 for x in a):
            return False
        b = self.from_string_param(a, word.letters)
        return self.string_param(b, word) == tuple(a)

    # -- B(lambda) -------------------------------------------------------

    def _check_lambda(self, lam: Sequence[int]) -> tuple[int, ...]:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.cartan.rank:
            raise ShapeError(f"weight has {len(lam)} coordinates, expected {self.cartan.rank}")
        if any(x < 0 for x in lam):
            raise DomainError(f"weight {lam} is not dominant")
        return lam

    def pi_lambda(self, b: CrystalElt, lam: Sequence[int]) -> LambdaElt | None:
        lam = self._check_lambda(lam)
        for i, li in zip(self.cartan.labels, lam):
            if self.eps_star(b, i)[0] > li:
                return None
        return LambdaElt(b, lam)

    def enumerate_demazure(self, lam: Sequence[int], word) -> list[LambdaElt]:
        """Demazure crystal ``B_w(lambda)`` built right to left along ``word``."""
        lam = self._check_lambda(lam)
        word = as_reduced(self.cartan, word)
        layer: list[Coords] = [()]
        for i in reversed(self._word(word.letters)):
            layer = self.kernel.demazure_step(layer, i, lam[i])
        return [LambdaElt(CrystalElt(self, x), lam) for x in sorted(layer)]

    def enumerate_infty(self, word, depth: int) -> list[CrystalElt]:
        """Elements of ``B_w(infinity)`` of depth at most ``depth``."""
        word = as_reduced(self.cartan, word)
        layer: list[Coords] = [()]
        for i in reversed(self._word(word.letters)):
            layer = self.kernel.depth_step(layer, i, int(depth))
        return [CrystalElt(self, x) for x in sorted(layer)]

    def enumerate_depth(self, depth: int) -> list[CrystalElt]:
        """All elements of ``B(infinity)`` of depth at most ``depth``."""
        return self.enumerate_infty(longest_word(self.cartan), depth)

    def highest_lambda(self, lam: Sequence[int]) -> LambdaElt:
        return LambdaElt(self.highest, self._check_lambda(lam))


@dataclass(frozen=True, eq=False)
class CrystalElt:
    engine: CrystalEngine = field(repr=False)
    coords: Coords

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CrystalElt) and self.coords == other.coords
                and self.engine == other.engine)

    def __hash__(self) -> int:
        return hash(self.coords)

    @property
    def cartan(self) -> CartanDatum:
        return self.engine.cartan

    @cached_property
    def _fs_idx(self) -> list[int]:
        return self.engine.kernel.extract_fstring(self.coords)

    @cached_property
    def fstring(self) -> tuple[int, ...]:
        labels = self.engine.cartan.labels
        return tuple(labels[i] for i in self._fs_idx)

    @cached_property
    def weight(self) -> Coords:
        return self.engine.weight(self.coords)

    @property
    def depth(self) -> int:
        return sum(self.coords)

    @property
    def is_highest(self) -> bool:
        return self.coords == ()

    def f(self, i: int) -> CrystalElt:
        return self.engine.f(self, i)

    def e(self, i: int) -> CrystalElt | None:
        return self.engine.e(self, i)

    def eps(self, i: int) -> int:
        return self.engine.eps(self, i)

    def phi(self, i: int) -> int:
        return self.engine.phi(self, i)

    def to_json(self) -> dict:
        return {
            "cartan": self.engine.cartan.type_tag,
            "iota_period": list(self.engine.iota_period),
            "coords": list(self.coords),
            "fstring": list(self.fstring),
        }


def elt_from_json(data: dict, engine: CrystalEngine | None = None) -> CrystalElt:
    if engine is None:
        engine = CrystalEngine(build_cartan(data["cartan"]), data.get("iota_period"))
    b = engine.elt(data["coords"])
    if "fstring" in data and engine.from_fstring(data["fstring"]) != b:
        raise MembershipError("fstring does not reproduce coords")
    return b


@dataclass(frozen=True)
class LambdaElt:
    """Element of B(lambda), represented by its lift in B(infinity)."""

    lift: CrystalElt
    lam: tuple[int, ...]

    @property
    def engine(self) -> CrystalEngine:
        return self.lift.engine

    @property
    def coords(self) -> Coords:
        return self.lift.coords

    @property
    def weight(self) -> Coords:
        return tuple(a + b for a, b in zip(self.lam, self.lift.weight))

    def eps(self, i: int) -> int:
        return self.lift.eps(i)

    def phi(self, i: int) -> int:
        return self.lift.phi(i) + self.lam[self.engine.cartan.index(i)]

    def f(self, i: int) -> LambdaElt | None:
        if self.phi(i) <= 0:
            return None
        return LambdaElt(self.lift.f(i), self.lam)

    def e(self, i: int) -> LambdaElt | None:
        y = self.lift.e(i)
        return None if y is None else LambdaElt(y, self.lam)

    def to_json(self) -> dict:
        out = self.lift.to_json()
        out["lambda"] = list(self.lam)
        return out
