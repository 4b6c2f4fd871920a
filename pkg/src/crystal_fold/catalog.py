"""Built-in catalog of paired automorphisms.

A pair ``((g, omega), (g', omega'))`` is stored when the orbit algebra of the
left side is the fixed-point algebra of the right side under an
identification of representatives, and ``m_i * m'_i`` is a constant ``L``.
Both conditions are re-checked whenever the catalog is loaded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .cartan import FoldingDatum, build_cartan, validate_automorphism
from .errors import ConfigurationError, UnsupportedTypeError


@dataclass(frozen=True)
class FoldingPair:
    name: str
    left: FoldingDatum
    right: FoldingDatum
    identification: tuple[tuple[int, int], ...]
    L: int

    def __post_init__(self) -> None:
        check_pair(self.left, self.right, self.identification, self.L)

    def to_right(self, i: int) -> int:
        return dict(self.identification)[i]

    def to_left(self, j: int) -> int:
        return {b: a for a, b in self.identification}[j]

    def swapped(self) -> FoldingPair:
        ident = tuple(sorted((b, a) for a, b in self.identification))
        a, b = self.name.split(":") if ":" in self.name else (self.name, self.name)
        return FoldingPair(f"{b}:{a}", self.right, self.left, ident, self.L)

    @property
    def computable(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "left": {"type": self.left.source.type_tag, "omega_cycles": self.left.cycles()},
            "right": {"type": self.right.source.type_tag, "omega_cycles": self.right.cycles()},
            "identification": [list(p) for p in self.identification],
            "L": self.L,
            "computable": True,
        }


@dataclass(frozen=True)
class AffinePairRecord:
    """Reference-only entry; nothing can be computed from it."""

    left: str
    orbit: str
    fixed: str
    right: str

    @property
    def computable(self) -> bool:
        return False

    @property
    def name(self) -> str:
        return f"{self.left}:{self.right}"

    def require_computable(self) -> None:
        raise UnsupportedTypeError(
            f"affine pair {self.name} is catalog metadata only; "
            "affine crystals are not supported"
        )

    # any attempt to use the record as a FoldingPair lands here
    def __getattr__(self, item: str):
        if item in ("identification", "L", "swapped", "to_right", "to_left"):
            self.require_computable()
        raise AttributeError(item)

    def to_json(self) -> dict:
        return {"left": self.left, "orbit": self.orbit, "fixed": self.fixed,
                "right": self.right, "computable": False}


def check_pair(left: FoldingDatum, right: FoldingDatum,
               identification, L: int) -> None:
    ident = dict(identification)
    if sorted(ident) != sorted(left.reps) or sorted(ident.values()) != sorted(right.reps):
        raise ConfigurationError("identification is not a bijection of representatives")
    for i in left.reps:
        for j in left.reps:
            a = left.orbit_cartan.entry(i, j)
            b = right.fixed_cartan.entry(ident[i], ident[j])
            c = right.orbit_cartan.entry(ident[i], ident[j])
            d = left.fixed_cartan.entry(i, j)
            if a != b or c != d:
                raise ConfigurationError(
                    f"condition (C)1 fails at ({i},{j}): orbit {a} vs fixed {b}"
                )
    for i in left.reps:
        prod = left.m(i) * right.m(ident[i])
        if prod != L:
            raise ConfigurationError(
                f"condition (C)2 fails at {i}: m*m' = {prod}, expected {L}"
            )


def _side(entry: dict) -> FoldingDatum:
    return validate_automorphism(build_cartan(entry["type"]), entry["omega_cycles"])


@lru_cache(maxsize=None)
def _load() -> tuple[tuple[FoldingPair, ...], tuple[AffinePairRecord, ...]]:
    raw = json.loads(
        resources.files("crystal_fold").joinpath("data/catalog.json").read_text("utf-8")
    )
    pairs = tuple(
        FoldingPair(
            name=p["name"],
            left=_side(p["left"]),
            right=_side(p["right"]),
            identification=tuple(tuple(x) for x in p["identification"]),
            L=int(p["L"]),
        )
        for p in raw["pairs"]
    )
    affine = tuple(AffinePairRecord(**a) for a in raw["affine"])
    return pairs, affine


def catalog_pairs(include_affine: bool = True) -> list:
    pairs, affine = _load()
    return list(pairs) + (list(affine) if include_affine else [])


def lookup_pair(left: str, right: str | None = None) -> FoldingPair:
    """Find a finite pair by ``"A3:D3"`` or by its two type tags.

    The reversed orientation (``"D3:A3"``) is served by swapping sides.
    """
    if right is None:
        if ":" not in left:
            raise ConfigurationError(f"pair must look like 'A3:D3', got {left!r}")
        left, right = left.split(":", 1)
    key = (left.strip().upper(), right.strip().upper())
    for pair in _load()[0]:
        names = (pair.left.source.type_tag, pair.right.source.type_tag)
        if names == key:
            return pair
        if names[::-1] == key:
            return pair.swapped()
    for rec in _load()[1]:
        if (rec.left.upper(), rec.right.upper()) == key:
            rec.require_computable()
    raise ConfigurationError(f"no catalog pair {key[0]}:{key[1]}")
