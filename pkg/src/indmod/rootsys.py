"""Finite crystallographic root systems built from Cartan matrices.

Convention: ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` is the
simple root ``alpha_j`` written in fundamental-weight coordinates.  Simple
indices are 1-based in every public function, matching the usual notation
``s_1, ..., s_n``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .caps import get_caps

__all__ = [
    "PRESETS",
    "CartanMatrix",
    "NotFiniteTypeError",
    "Root",
    "RootDatum",
    "Weight",
    "build_root_system",
    "datum_from_name",
    "reflect_root",
    "reflect_weight",
]


class NotFiniteTypeError(ValueError):
    pass


def _type_a(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


PRESETS: dict[str, list[list[int]]] = {
    "A1": _type_a(1),
    "A2": _type_a(2),
    "A3": _type_a(3),
    "A4": _type_a(4),
    "B2": [[2, -1], [-2, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "G2": [[2, -3], [-1, 2]],
}

# (|Phi+|, |W|, degrees of basic invariants)
KNOWN_TYPES: dict[str, tuple[int, int, tuple[int, ...]]] = {
    "A1": (1, 2, (2,)),
    "A2": (3, 6, (2, 3)),
    "A3": (6, 24, (2, 3, 4)),
    "A4": (10, 120, (2, 3, 4, 5)),
    "B2": (4, 8, (2, 4)),
    "B3": (9, 48, (2, 4, 6)),
    "C3": (9, 48, (2, 4, 6)),
    "D4": (12, 192, (2, 4, 4, 6)),
    "G2": (6, 12, (2, 6)),
}


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("Cartan matrix must be square and non-empty")
        get_caps().check("rank", n)
        for i in range(n):
            if rows[i][i] != 2:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) is not 2")
            for j in range(n):
                if i == j:
                    continue
                if rows[i][j] > 0:
                    raise ValueError(f"off-diagonal entry ({i + 1},{j + 1}) is positive")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise ValueError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) disagree on zero")

    @classmethod
    def preset(cls, name: str) -> "CartanMatrix":
        try:
            return cls(tuple(tuple(r) for r in PRESETS[name.upper()]))
        except KeyError:
            raise ValueError(f"unknown type {name!r}; presets are {', '.join(PRESETS)}") from None

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def preset_name(self) -> str | None:
        for name, rows in PRESETS.items():
            if tuple(tuple(r) for r in rows) == self.entries:
                return name
        return None


@dataclass(frozen=True, order=True)
class Root:
    """A root in the simple-root basis."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coeffs
        if any(x > 0 for x in c) and any(x < 0 for x in c):
            raise ValueError(f"mixed-sign coefficients {c}")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @property
    def is_simple(self) -> bool:
        return self.height == 1

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, 1):
            if c:
                terms.append(("" if abs(c) == 1 else str(abs(c))) + f"a{i}")
                if c < 0:
                    terms[-1] = "-" + terms[-1]
        return "+".join(terms).replace("+-", "-") or "0"


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates: ``coords[i] = <theta, alpha_{i+1}^vee>``."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))

    @classmethod
    def of(cls, values: Iterable[int]) -> "Weight":
        return cls(tuple(values))

    def pairing(self, i: int) -> int:
        return self.coords[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootDatum:
    cartan: CartanMatrix
    positive_roots: tuple[Root, ...]
    name: str | None = None
    # index into ``all_roots``: positives first, then their negatives
    _index: dict[Root, int] = field(default_factory=dict, compare=False, repr=False)
    _reflection: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def simple_indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    def simple_root(self, i: int) -> Root:
        return self.positive_roots[i - 1]

    def root_index(self, alpha: Root) -> int:
        try:
            return self._index[alpha]
        except KeyError:
            raise ValueError(f"{alpha} is not a root") from None

    def negate_index(self, k: int) -> int:
        n = self.n_positive
        return k + n if k < n else k - n

    def reflection_table(self, i: int) -> tuple[int, ...]:
        """Permutation of root indices induced by ``s_i``."""
        return self._reflection[i - 1]

    def coroot_pairing(self, alpha: Root, i: int) -> int:
        """``<alpha, alpha_i^vee>`` for a root written in simple-root coordinates."""
        row = self.cartan.entries[i - 1]
        return sum(c * a for c, a in zip(alpha.coeffs, row))

    def simple_root_weight(self, i: int) -> Weight:
        return Weight(tuple(row[i - 1] for row in self.cartan.entries))

    def max_height(self) -> int:
        return max(r.height for r in self.positive_roots)


def _reflect(cartan: CartanMatrix, i: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    row = cartan.entries[i]
    pair = sum(c * a for c, a in zip(coeffs, row))
    out = list(coeffs)
    out[i] -= pair
    return tuple(out)


def build_root_system(cartan: CartanMatrix | Sequence[Sequence[int]], name: str | None = None) -> RootDatum:
    """Close the simple roots under simple reflections.

    Raises :class:`NotFiniteTypeError` when the closure grows past the
    ``positive_roots`` cap.
    """
    if not isinstance(cartan, CartanMatrix):
        cartan = CartanMatrix(tuple(tuple(r) for r in cartan))
    n = cartan.rank
    bound = get_caps().positive_roots
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    found = list(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            gamma = _reflect(cartan, i, beta)
            if sum(gamma) > 0 and gamma not in seen:
                seen.add(gamma)
                found.append(gamma)
                queue.append(gamma)
                if len(found) > bound:
                    raise NotFiniteTypeError("not finite type: root closure exceeds "
                                             f"{bound} positive roots")
    found.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    positives = tuple(Root(c) for c in found)
    if name is None:
        name = cartan.preset_name()
    if name in KNOWN_TYPES and len(positives) != KNOWN_TYPES[name][0]:
        raise AssertionError(f"{name}: found {len(positives)} positive roots, "
                             f"expected {KNOWN_TYPES[name][0]}")

    npos = len(positives)
    all_roots = positives + tuple(-r for r in positives)
    index = {r: k for k, r in enumerate(all_roots)}
    tables = []
    for i in range(n):
        tables.append(tuple(index[Root(_reflect(cartan, i, r.coeffs))] for r in all_roots))
    datum = RootDatum(cartan, positives, name)
    object.__setattr__(datum, "_index", index)
    object.__setattr__(datum, "_reflection", tuple(tables))
    assert all(len(set(t)) == 2 * npos for t in tables)
    return datum


def datum_from_name(name: str) -> RootDatum:
    return build_root_system(CartanMatrix.preset(name), name.upper())


def reflect_root(datum: RootDatum, i: int, alpha: Root) -> Root:
    """``s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i``; ``alpha`` must be a root."""
    datum.root_index(alpha)
    return datum.all_roots[datum.reflection_table(i)[datum.root_index(alpha)]]


def reflect_weight(datum: RootDatum, i: int, theta: Weight) -> Weight:
    """``s_i(theta) = theta - theta_i * alpha_i`` with ``alpha_i`` taken from column ``i``."""
    c = theta.coords[i - 1]
    if c == 0:
        return theta
    col = [row[i - 1] for row in datum.cartan.entries]
    return Weight(tuple(x - c * a for x, a in zip(theta.coords, col)))
