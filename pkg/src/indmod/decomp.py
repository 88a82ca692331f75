"""Composition-factor descriptors for the induced modules ``M(theta)``.

Two regimes are supported.  In cross characteristic every character has a
composition series with one factor ``E(theta)_J`` per subset ``J`` of
``I(theta)``.  In the natural characteristic a series exists exactly when
``theta`` is antidominant; otherwise the module has infinite length and the
report names a simple root with positive pairing.

Factors are never materialized.  Each is described by its label, the index
set ``Z_J`` and the generating function of the basis sizes of its finite
truncations, in the formal variable ``t = q^a``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .charlat import RationalCharacter, i_theta, is_antidominant, is_strongly_antidominant
from .poly import IntPolynomial
from .rootsys import RootDatum
from .weyl import WeylGroup, subsets, weyl_group

__all__ = [
    "CROSS",
    "NATURAL",
    "DecompositionReport",
    "FactorDescriptor",
    "decompose",
    "dimension_identity_check",
    "finite_level_dimensions",
]

CROSS = "cross"
NATURAL = "natural"
SCHEMA = "indmod/1"

NOTE_END = "each factor is indecomposable with End = k (recorded, not computed)"
NOTE_DIRECT = ("I(theta) supplied directly: the character itself is not known, "
               "so stabilizer assertions were not evaluated")


@dataclass(frozen=True)
class FactorDescriptor:
    theta: tuple[int, ...] | None
    J: frozenset[int]
    z_set: tuple[tuple[int, ...], ...]
    dim_poly: IntPolynomial
    multiplicity: int = 1

    @property
    def label(self) -> tuple[tuple[int, ...] | None, tuple[int, ...]]:
        return (self.theta, tuple(sorted(self.J)))

    @property
    def has_b_stable_line(self) -> bool:
        # only E(theta)_empty contains the B-eigenvector 1_theta
        return not self.J

    def to_dict(self, t_value: int | None = None) -> dict:
        out = {
            "J": sorted(self.J),
            "zset": [list(w) for w in self.z_set],
            "dim_poly": list(self.dim_poly.coeffs),
            "multiplicity": self.multiplicity,
        }
        if t_value is not None:
            out["dim_at_qa"] = self.dim_poly(t_value)
        return out


@dataclass
class DecompositionReport:
    type_name: str | None
    theta: tuple[int, ...] | None
    itheta: frozenset[int]
    mode: str
    series_exists: bool
    witness: int | None
    factors: list[FactorDescriptor]
    irreducible: bool | None
    notes: list[str] = field(default_factory=list)

    @property
    def head_label(self) -> tuple[tuple[int, ...] | None, tuple[int, ...]] | None:
        return (self.theta, ()) if self.series_exists else None

    def labels(self) -> list[tuple]:
        return [f.label for f in self.factors]

    def to_dict(self, q: int | None = None, a: int = 1) -> dict:
        t_value = q ** a if q is not None else None
        head = self.head_label
        return {
            "schema": SCHEMA,
            "type": self.type_name,
            "theta": self.to_list(self.theta),
            "itheta": sorted(self.itheta),
            "mode": self.mode,
            "series_exists": self.series_exists,
            "witness": self.witness,
            "factors": [f.to_dict(t_value) for f in self.factors],
            "head": None if head is None else {"theta": self.to_list(head[0]), "J": []},
            "irreducible": self.irreducible,
            "notes": list(self.notes),
        }

    @staticmethod
    def to_list(theta: tuple[int, ...] | None) -> list[int] | None:
        return None if theta is None else list(theta)

    def to_json(self, q: int | None = None, a: int = 1) -> str:
        return json.dumps(self.to_dict(q, a), sort_keys=True)


def _factor(W: WeylGroup, theta: tuple[int, ...] | None, J: frozenset[int],
            itheta: frozenset[int]) -> FactorDescriptor:
    zs = W.z_set(J, itheta)
    lj = W.lengths[W.longest_in(J)]
    poly = IntPolynomial.from_exponents((W.lengths[w] + lj for w in zs), var="t")
    return FactorDescriptor(theta, J, tuple(W.words[w] for w in zs), poly)


def decompose(datum: RootDatum, theta: RationalCharacter | Sequence[int] | None = None,
              mode: str = CROSS, itheta: Iterable[int] | None = None) -> DecompositionReport:
    """Describe the composition factors of ``M(theta)``.

    Pass either ``theta`` (pairings with the simple coroots) or, for
    characters that are not rational, ``itheta`` directly.  The latter only
    makes sense in cross characteristic.
    """
    if mode not in (CROSS, NATURAL):
        raise ValueError(f"mode must be {CROSS!r} or {NATURAL!r}")
    if (theta is None) == (itheta is None):
        raise ValueError("give exactly one of theta and itheta")
    W = weyl_group(datum)
    notes = [NOTE_END]
    if theta is None:
        if mode == NATURAL:
            raise ValueError("natural mode needs theta: antidominance is undecidable from I(theta)")
        it = frozenset(int(i) for i in itheta)
        if not it <= W.simple_set:
            raise ValueError(f"I(theta)={sorted(it)} is not a subset of 1..{W.rank}")
        coords = None
        notes.append(NOTE_DIRECT)
    else:
        coords = theta.coords if isinstance(theta, RationalCharacter) else tuple(int(c) for c in theta)
        if len(coords) != W.rank:
            raise ValueError(f"theta has {len(coords)} coordinates, rank is {W.rank}")
        it = i_theta(coords)

    witness = None
    if mode == NATURAL and not is_antidominant(coords):
        witness = next(i for i, c in enumerate(coords, 1) if c > 0)
        return DecompositionReport(datum.name, coords, it, mode, False, witness, [], False, notes)

    factors = [_factor(W, coords, J, it) for J in subsets(it)]
    labels = {f.label for f in factors}
    assert len(labels) == len(factors) == 1 << len(it)
    irreducible = len(factors) == 1
    if mode == NATURAL and is_strongly_antidominant(coords):
        irreducible = True
    return DecompositionReport(datum.name, coords, it, mode, True, None, factors, irreducible, notes)


def dimension_identity_check(datum: RootDatum | WeylGroup, itheta: Iterable[int],
                             J: Iterable[int] = ()) -> bool:
    """``sum_{J<=K<=I(theta)} sum_{w in Z_K} t^{l(w w_K)} == sum_{x in X_J} t^{l(x w_J)}``."""
    W = datum if isinstance(datum, WeylGroup) else weyl_group(datum)
    it, J = frozenset(itheta), frozenset(J)
    if not J <= it:
        raise ValueError("J must be contained in I(theta)")
    lhs = IntPolynomial((), "t")
    for extra in subsets(it - J):
        K = J | extra
        lhs = lhs + _factor(W, None, K, it).dim_poly
    lj = W.lengths[W.longest_in(J)]
    rhs = IntPolynomial.from_exponents((W.lengths[x] + lj for x in W.min_coset_reps(J)), var="t")
    return lhs == rhs


def finite_level_dimensions(report: DecompositionReport, a: int, q: int) -> list[int]:
    """Sizes of the ``F_{q^a}`` bases of the factors, in report order."""
    if not report.series_exists:
        raise ValueError("no composition series: the module has infinite length")
    if a < 1 or q < 2:
        raise ValueError("need a >= 1 and q >= 2")
    t = q ** a
    return [f.dim_poly(t) for f in report.factors]
