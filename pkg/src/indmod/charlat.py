"""Rational characters of the maximal torus and their Weyl-group stabilizers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootsys import RootDatum, Weight, reflect_weight
from .weyl import WeylGroup, weyl_group

__all__ = [
    "RationalCharacter",
    "StabilizerData",
    "act",
    "i_theta",
    "is_antidominant",
    "is_strongly_antidominant",
    "parse_theta",
    "stabilizer",
]


@dataclass(frozen=True)
class RationalCharacter:
    """``theta`` given by its pairings ``<theta, alpha_i^vee>``."""

    weight: Weight

    @classmethod
    def of(cls, coords: Iterable[int]) -> "RationalCharacter":
        return cls(Weight(tuple(coords)))

    @property
    def coords(self) -> tuple[int, ...]:
        return self.weight.coords

    @property
    def rank(self) -> int:
        return len(self.weight.coords)

    def __str__(self) -> str:
        return str(self.weight)


def parse_theta(text: str) -> RationalCharacter:
    return RationalCharacter.of(int(x) for x in text.replace(" ", "").split(",") if x)


def _coords(theta: RationalCharacter | Weight | Sequence[int]) -> tuple[int, ...]:
    if isinstance(theta, RationalCharacter):
        return theta.coords
    if isinstance(theta, Weight):
        return theta.coords
    return tuple(int(x) for x in theta)


def i_theta(theta: RationalCharacter | Weight | Sequence[int]) -> frozenset[int]:
    """Simple indices on which ``theta`` restricts trivially to the rank-one torus.

    For a rational character ``t -> t^m`` is trivial on the multiplicative
    group of an algebraically closed field exactly when ``m = 0``.
    """
    return frozenset(i for i, c in enumerate(_coords(theta), 1) if c == 0)


def is_antidominant(theta: RationalCharacter | Weight | Sequence[int]) -> bool:
    return all(c <= 0 for c in _coords(theta))


def is_strongly_antidominant(theta: RationalCharacter | Weight | Sequence[int]) -> bool:
    return all(c < 0 for c in _coords(theta))


def act(W: WeylGroup, w: int, theta: RationalCharacter | Weight | Sequence[int]) -> Weight:
    """``w . theta`` (linear action), applying the letters of ``w`` right to left."""
    out = Weight(_coords(theta))
    for i in reversed(W.words[W.index(w)]):
        out = reflect_weight(W.datum, i, out)
    return out


@dataclass(frozen=True)
class StabilizerData:
    elements: frozenset[int]
    is_parabolic: bool
    J_theta: frozenset[int]
    itheta: frozenset[int]

    def __len__(self) -> int:
        return len(self.elements)


def stabilizer(datum: RootDatum | WeylGroup, theta: RationalCharacter | Weight | Sequence[int]) -> StabilizerData:
    """Exhaustive stabilizer of ``theta`` in ``W``.

    ``J_theta`` is the union of supports of stabilizing elements, which is the
    smallest ``K`` with ``W_theta`` inside ``W_K``.
    """
    W = datum if isinstance(datum, WeylGroup) else weyl_group(datum)
    coords = _coords(theta)
    if len(coords) != W.rank:
        raise ValueError(f"theta has {len(coords)} coordinates, rank is {W.rank}")
    target = Weight(coords)
    elems = frozenset(k for k in range(len(W)) if act(W, k, target) == target)
    J = frozenset(i for k in elems for i in W.words[k])
    it = i_theta(coords)
    parabolic = elems == frozenset(W.parabolic(J))
    if not frozenset(W.parabolic(it)) <= elems:
        raise AssertionError("W_{I(theta)} is not contained in the stabilizer")
    if parabolic and J != it:
        raise AssertionError(f"parabolic stabilizer W_{sorted(J)} differs from W_{{I(theta)}}")
    return StabilizerData(elems, parabolic, J, it)
