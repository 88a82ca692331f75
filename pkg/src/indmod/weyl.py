"""Weyl groups as permutation tables on roots.

An element is stored as the tuple of images ``w(alpha)`` of the positive roots
(indices into ``RootDatum.all_roots``).  That representation gives constant
time equality and hashing, multiplication by composition, and the length as
the number of positive roots sent negative.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .caps import CapError, get_caps
from .rootsys import RootDatum

__all__ = [
    "CosetData",
    "PartitionCertificate",
    "WeylElement",
    "WeylGroup",
    "bruhat_leq",
    "enumerate_group",
    "format_word",
    "hasse_dot",
    "longest_element",
    "min_coset_reps",
    "parse_word",
    "partition_check",
    "poincare_polynomial",
    "right_descents",
    "subsets",
    "weyl_group",
    "z_set",
]

Subset = frozenset[int]


@dataclass(frozen=True)
class WeylElement:
    action: tuple[int, ...]
    rank: int

    @property
    def n_positive(self) -> int:
        return len(self.action)

    @property
    def length(self) -> int:
        n = len(self.action)
        return sum(1 for k in self.action if k >= n)

    def image(self, k: int) -> int:
        """Image of the root with index ``k`` (positive or negative)."""
        n = len(self.action)
        if k < n:
            return self.action[k]
        j = self.action[k - n]
        return j + n if j < n else j - n

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(self.image(k) for k in other.action), self.rank)

    def inverse(self) -> "WeylElement":
        n = len(self.action)
        inv = [0] * n
        for k, j in enumerate(self.action):
            if j < n:
                inv[j] = k
            else:
                inv[j - n] = k + n
        return WeylElement(tuple(inv), self.rank)

    def right_descents(self) -> Subset:
        n = len(self.action)
        return frozenset(i + 1 for i in range(self.rank) if self.action[i] >= n)

    def left_descents(self) -> Subset:
        return self.inverse().right_descents()


def right_descents(w: WeylElement) -> Subset:
    """``{i : l(w s_i) < l(w)}``, read off as ``w(alpha_i) < 0``."""
    return w.right_descents()


def format_word(word: Sequence[int]) -> str:
    return "".join(f"s{i}" for i in word) or "e"


def parse_word(text: str) -> tuple[int, ...]:
    """Accept ``"e"``, ``"s1s2s1"``, ``"1,2,1"`` or ``"121"`` (rank < 10)."""
    text = text.strip().replace(" ", "")
    if text in ("", "e", "1e"):
        return ()
    if text.startswith("s"):
        return tuple(int(x) for x in text.split("s")[1:])
    if "," in text:
        return tuple(int(x) for x in text.split(",") if x)
    return tuple(int(ch) for ch in text)


def subsets(base: Iterable[int]) -> list[Subset]:
    """All subsets of ``base`` in binary-counter order over the sorted elements."""
    items = sorted(base)
    return [frozenset(x for b, x in enumerate(items) if mask >> b & 1)
            for mask in range(1 << len(items))]


class WeylGroup:
    """The full finite Weyl group of a root datum, enumerated once."""

    def __init__(self, datum: RootDatum, cap: int | None = None):
        self.datum = datum
        self.rank = datum.rank
        npos = datum.n_positive
        cap = get_caps().weyl_order if cap is None else cap
        gens = [WeylElement(datum.reflection_table(i)[:npos], self.rank)
                for i in datum.simple_indices]
        self.generators = tuple(gens)
        ident = WeylElement(tuple(range(npos)), self.rank)

        seen = {ident}
        order = [ident]
        queue = deque([ident])
        while queue:
            w = queue.popleft()
            for s in gens:
                ws = w * s
                if ws not in seen:
                    seen.add(ws)
                    order.append(ws)
                    queue.append(ws)
                    if len(order) > cap:
                        raise CapError(f"weyl_order cap exceeded: |W| > {cap}")

        # ShortLex words: greedy smallest left descent
        order.sort(key=lambda w: w.length)
        words: dict[WeylElement, tuple[int, ...]] = {ident: ()}
        for w in order[1:]:
            i = min(w.left_descents())
            words[w] = (i,) + words[gens[i - 1] * w]
        order.sort(key=lambda w: (w.length, words[w]))

        self.elements: list[WeylElement] = order
        self._index = {w: k for k, w in enumerate(order)}
        self.words: list[tuple[int, ...]] = [words[w] for w in order]
        self.lengths: list[int] = [w.length for w in order]
        self.rmul: list[tuple[int, ...]] = [tuple(self._index[w * s] for s in gens) for w in order]
        self.lmul: list[tuple[int, ...]] = [tuple(self._index[s * w] for s in gens) for w in order]
        self.inv: list[int] = [self._index[w.inverse()] for w in order]
        self.rdes: list[Subset] = [w.right_descents() for w in order]
        self.ldes: list[Subset] = [self.rdes[self.inv[k]] for k in range(len(order))]
        self._ideal: dict[int, frozenset[int]] = {}
        self._longest: dict[Subset, int] = {}

    # -- basic access ------------------------------------------------------
    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def simple_set(self) -> Subset:
        return frozenset(self.datum.simple_indices)

    def index(self, w: WeylElement | int) -> int:
        if isinstance(w, int):
            return w
        return self._index[w]

    def element(self, k: int) -> WeylElement:
        return self.elements[k]

    def word(self, w: WeylElement | int) -> tuple[int, ...]:
        return self.words[self.index(w)]

    def length(self, w: WeylElement | int) -> int:
        return self.lengths[self.index(w)]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        return self.elements[self.index_from_word(word)]

    def index_from_word(self, word: Iterable[int]) -> int:
        k = 0
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"simple index {i} out of range 1..{self.rank}")
            k = self.rmul[k][i - 1]
        return k

    def mul(self, x: int, y: int) -> int:
        """Index of ``x*y`` for element indices."""
        for i in self.words[y]:
            x = self.rmul[x][i - 1]
        return x

    def longest(self) -> int:
        return len(self.elements) - 1

    def in_parabolic(self, w: int, J: Iterable[int]) -> bool:
        return set(self.words[w]) <= set(J)

    def parabolic(self, J: Iterable[int]) -> list[int]:
        J = frozenset(J)
        return [k for k in range(len(self)) if set(self.words[k]) <= J]

    # -- Bruhat order ------------------------------------------------------
    def bruhat_ideal(self, w: int) -> frozenset[int]:
        """All ``y <= w``: products of subwords of the ShortLex word of ``w``."""
        got = self._ideal.get(w)
        if got is None:
            reach = {0}
            for i in self.words[w]:
                reach |= {self.rmul[x][i - 1] for x in reach}
            got = self._ideal[w] = frozenset(reach)
        return got

    def bruhat_leq(self, y: int, w: int) -> bool:
        if self.lengths[y] > self.lengths[w]:
            return False
        return y in self.bruhat_ideal(w)

    def bruhat_covers(self) -> list[tuple[int, int]]:
        edges = []
        for w in range(len(self)):
            lw = self.lengths[w]
            for y in self.bruhat_ideal(w):
                if self.lengths[y] == lw - 1:
                    edges.append((y, w))
        return sorted(edges)

    # -- parabolic combinatorics ------------------------------------------
    def longest_in(self, J: Iterable[int]) -> int:
        J = frozenset(J)
        got = self._longest.get(J)
        if got is None:
            w = 0
            grew = True
            while grew:
                grew = False
                for j in sorted(J):
                    ws = self.rmul[w][j - 1]
                    if self.lengths[ws] > self.lengths[w]:
                        w, grew = ws, True
                        break
            got = self._longest[J] = w
        return got

    def min_coset_reps(self, J: Iterable[int]) -> list[int]:
        J = frozenset(J)
        return [k for k in range(len(self)) if not (self.rdes[k] & J)]

    def z_set(self, J: Iterable[int], itheta: Iterable[int]) -> list[int]:
        J, itheta = frozenset(J), frozenset(itheta)
        if not J <= itheta:
            raise ValueError(f"J={sorted(J)} is not contained in I(theta)={sorted(itheta)}")
        if not itheta <= self.simple_set:
            raise ValueError("I(theta) must be a subset of the simple indices")
        allowed = J | (self.simple_set - itheta)
        wj = self.longest_in(J)
        return [x for x in self.min_coset_reps(J) if self.rdes[self.mul(x, wj)] <= allowed]


@lru_cache(maxsize=32)
def _weyl_group(datum: RootDatum) -> WeylGroup:
    return WeylGroup(datum)


def weyl_group(datum: RootDatum) -> WeylGroup:
    W = _weyl_group(datum)
    get_caps().check("weyl_order", len(W.elements))  # caps may have shrunk since caching
    return W


def enumerate_group(datum: RootDatum) -> list[WeylElement]:
    return list(weyl_group(datum).elements)


def bruhat_leq(W: WeylGroup, y: WeylElement, w: WeylElement) -> bool:
    return W.bruhat_leq(W.index(y), W.index(w))


def longest_element(W: WeylGroup, J: Iterable[int]) -> WeylElement:
    J = frozenset(J)
    if not J <= W.simple_set:
        raise ValueError(f"{sorted(J)} is not a subset of I")
    return W.elements[W.longest_in(J)]


@dataclass(frozen=True)
class CosetData:
    J: Subset
    reps: tuple[WeylElement, ...]


def min_coset_reps(W: WeylGroup, J: Iterable[int]) -> CosetData:
    J = frozenset(J)
    if not J <= W.simple_set:
        raise ValueError(f"{sorted(J)} is not a subset of I")
    return CosetData(J, tuple(W.elements[k] for k in W.min_coset_reps(J)))


def z_set(W: WeylGroup, J: Iterable[int], itheta: Iterable[int]) -> list[WeylElement]:
    return [W.elements[k] for k in W.z_set(J, itheta)]


@dataclass
class PartitionCertificate:
    J: Subset
    itheta: Subset
    sizes: dict[Subset, int]
    target_size: int
    overlaps: list[tuple[Subset, Subset, int]]
    missing: list[int]
    extra: list[int]

    @property
    def ok(self) -> bool:
        return not (self.overlaps or self.missing or self.extra)


def partition_check(W: WeylGroup, J: Iterable[int], itheta: Iterable[int]) -> tuple[bool, PartitionCertificate]:
    """Check that ``X_J w_J`` is the disjoint union of ``Z_K w_K`` over ``J <= K <= I(theta)``."""
    J, itheta = frozenset(J), frozenset(itheta)
    if not J <= itheta:
        raise ValueError("J must be contained in I(theta)")
    target = {W.mul(x, W.longest_in(J)) for x in W.min_coset_reps(J)}
    owner: dict[int, Subset] = {}
    sizes: dict[Subset, int] = {}
    overlaps = []
    for extra in subsets(itheta - J):
        K = J | extra
        wk = W.longest_in(K)
        zk = W.z_set(K, itheta)
        sizes[K] = len(zk)
        for w in zk:
            y = W.mul(w, wk)
            if y in owner:
                overlaps.append((owner[y], K, y))
            else:
                owner[y] = K
    got = set(owner)
    cert = PartitionCertificate(J, itheta, sizes, len(target), overlaps,
                                sorted(target - got), sorted(got - target))
    return cert.ok, cert


def poincare_polynomial(W: WeylGroup) -> list[int]:
    top = max(W.lengths)
    out = [0] * (top + 1)
    for l in W.lengths:
        out[l] += 1
    return out


def hasse_dot(W: WeylGroup, name: str = "bruhat") -> str:
    from .dot import hasse_to_dot

    labels = [format_word(w) for w in W.words]
    ranks = W.lengths
    return hasse_to_dot(labels, W.bruhat_covers(), name=name, ranks=ranks)
