"""Explicit SL2 modules over an ambient finite field.

``H^0(m)`` has basis ``v_0, ..., v_m`` with ``v_i`` of weight ``m - 2i`` and

* ``u_a v_i = sum_{k<=i} binom(i, k) a^{i-k} v_k``
* ``s v_i = (-1)^{m-i} v_{m-i}``
* ``h(t) v_i = t^{m-2i} v_i``

for ``u_a = [[1, a], [0, 1]]``, ``s = [[0, 1], [-1, 0]]``, ``h(t) = diag(t, 1/t)``.
The acting group is ``SL2(F_{p^d})`` for a subfield of the ambient field; it
is generated by ``s`` and the ``u_b`` with ``b`` in a p-basis of the subfield.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from ..caps import get_caps
from . import kernels
from .field import AmbientField

__all__ = [
    "FqModule",
    "InducedModel",
    "SubspaceBasis",
    "identity",
    "induced_model",
    "make_h0",
    "mat_eq",
    "matmul",
    "matvec",
]

Matrix = np.ndarray


def identity(n: int) -> Matrix:
    return np.eye(n, dtype=np.int64)


def matmul(F: AmbientField, A: Matrix, B: Matrix) -> Matrix:
    n, k = A.shape
    k2, m = B.shape
    assert k == k2
    out = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                a, b = int(A[i, t]), int(B[t, j])
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out[i, j] = acc
    return out


def matvec(F: AmbientField, A: Matrix, v: Sequence[int]) -> np.ndarray:
    return matmul(F, A, np.asarray(v, dtype=np.int64).reshape(-1, 1))[:, 0]


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return A.shape == B.shape and bool((A == B).all())


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace given by its reduced row-echelon basis (canonical)."""

    rows: tuple[tuple[int, ...], ...]
    n: int

    @classmethod
    def from_array(cls, arr: np.ndarray, n: int) -> "SubspaceBasis":
        return cls(tuple(tuple(int(x) for x in r) for r in arr), n)

    @classmethod
    def span(cls, F: AmbientField, vectors: Iterable[Sequence[int]], n: int) -> "SubspaceBasis":
        vecs = np.array([list(v) for v in vectors], dtype=np.int64).reshape(-1, n)
        return cls.from_array(kernels.rref(vecs, F.exp, F.log, F.zech, F.p), n)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.rows)

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.dim, self.n)

    def is_coordinate_split(self) -> bool:
        return all(sum(1 for x in r if x) == 1 for r in self.rows)

    def coordinates(self) -> frozenset[int]:
        """Coordinates ``j`` with ``e_j`` in the subspace (all of them when split)."""
        return frozenset(self.pivots) if self.is_coordinate_split() else frozenset(
            j for j in range(self.n) if self.contains_unit(j))

    def contains_unit(self, j: int) -> bool:
        return any(r[j] == 1 and sum(1 for x in r if x) == 1 for r in self.rows)

    def join(self, F: AmbientField, other: "SubspaceBasis") -> "SubspaceBasis":
        return SubspaceBasis.span(F, list(self.rows) + list(other.rows), self.n)

    def contains(self, F: AmbientField, v: Sequence[int]) -> bool:
        return SubspaceBasis.span(F, list(self.rows) + [list(v)], self.n).dim == self.dim

    def issubspace(self, F: AmbientField, other: "SubspaceBasis") -> bool:
        return self.join(F, other) == other


@dataclass
class FqModule:
    field: AmbientField
    m: int
    d: int                               # acting subfield F_{p^d}
    generators: dict[str, Matrix]
    weights: list[int] | None      # weight of each coordinate, when coordinates are weight vectors
    torus: dict[str, Matrix] = dc_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return next(iter(self.generators.values())).shape[0]

    def gen_stack(self) -> np.ndarray:
        return np.stack(list(self.generators.values()))

    def spin(self, seeds: Iterable[Sequence[int]]) -> SubspaceBasis:
        F = self.field
        seeds = np.array([list(v) for v in seeds], dtype=np.int64).reshape(-1, self.dim)
        out = kernels.spin(self.gen_stack(), seeds, F.exp, F.log, F.zech, F.p)
        return SubspaceBasis.from_array(out, self.dim)

    def unit(self, j: int) -> list[int]:
        v = [0] * self.dim
        v[j] = 1
        return v

    def is_stable(self, V: SubspaceBasis, mats: Iterable[Matrix] | None = None) -> bool:
        mats = list(self.generators.values()) + list(self.torus.values()) if mats is None else list(mats)
        for M in mats:
            for r in V.rows:
                if not V.contains(self.field, matvec(self.field, M, r)):
                    return False
        return True


def u_matrix(F: AmbientField, m: int, a: int) -> Matrix:
    n = m + 1
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for k in range(i + 1):
            c = comb(i, k) % F.p
            if c:
                M[k, i] = F.mul(c, F.pow(a, i - k))
    return M


def s_matrix(F: AmbientField, m: int) -> Matrix:
    n = m + 1
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        M[m - i, i] = F.sign(m - i)
    return M


def h_matrix(F: AmbientField, m: int, t: int) -> Matrix:
    return np.diag([F.pow(t, m - 2 * i) for i in range(m + 1)]).astype(np.int64)


def make_h0(m: int, F: AmbientField, d: int | None = None, check: bool = True) -> FqModule:
    """``H^0(m)`` with ``SL2(F_{p^d})`` acting (``d`` defaults to the full degree)."""
    d = F.N if d is None else d
    if m < 0:
        raise ValueError("m must be non-negative")
    if m >= F.order:
        raise ValueError(f"m={m} must be below the ambient field size {F.order}")
    if F.N % d:
        raise ValueError(f"F_{F.p}^{d} is not a subfield of the ambient field")
    get_caps().check("module_dim", m + 1)
    gens = {f"u[{b}]": u_matrix(F, m, b) for b in F.subfield_basis(d)}
    gens["s"] = s_matrix(F, m)
    t = F.subfield_generator(d)
    mod = FqModule(F, m, d, gens, [m - 2 * i for i in range(m + 1)],
                   {f"h[{t}]": h_matrix(F, m, t)})
    if check and m + 1 <= 32:
        check_relations(mod)
    return mod


def check_relations(mod: FqModule) -> None:
    """``s^2 = h(-1)`` and ``u_1 s^{-1} u_1 s u_1 = s``."""
    F, m = mod.field, mod.m
    s = mod.generators["s"]
    s2 = matmul(F, s, s)
    if not mat_eq(s2, h_matrix(F, m, F.neg(1))):
        raise AssertionError("s^2 != h(-1)")
    s_inv = matmul(F, s2, s)  # s^4 = 1
    u1 = u_matrix(F, m, 1)
    lhs = matmul(F, u1, matmul(F, s_inv, matmul(F, u1, matmul(F, s, u1))))
    if not mat_eq(lhs, s):
        raise AssertionError("u_1 s^-1 u_1 s u_1 != s")


# -- the induced module Ind_B^G(lambda) over F_q ------------------------------

def _m2(F: AmbientField, A, B):
    return ((F.add(F.mul(A[0][0], B[0][0]), F.mul(A[0][1], B[1][0])),
             F.add(F.mul(A[0][0], B[0][1]), F.mul(A[0][1], B[1][1]))),
            (F.add(F.mul(A[1][0], B[0][0]), F.mul(A[1][1], B[1][0])),
             F.add(F.mul(A[1][0], B[0][1]), F.mul(A[1][1], B[1][1]))))


def sl2_u(F: AmbientField, a: int):
    return ((1, a), (0, 1))


def sl2_s(F: AmbientField):
    return ((0, 1), (F.neg(1), 0))


def sl2_h(F: AmbientField, t: int):
    return ((t, 0), (0, F.inv(t)))


@dataclass
class InducedModel:
    """``Ind_{B_q}^{G_q} lambda`` on the basis ``1_lambda, u_t s 1_lambda (t in F_q)``.

    ``b 1_lambda = beta^lambda 1_lambda`` for ``b`` upper triangular with
    diagonal ``(beta, 1/beta)``.  Index 0 is ``1_lambda``; index ``1 + k`` is
    ``u_t s 1_lambda`` for the ``k``-th element ``t`` of ``elements``.
    """

    field: AmbientField
    lam: int
    d: int
    elements: list[int]

    @property
    def dim(self) -> int:
        return len(self.elements) + 1

    def _rep(self, k: int):
        if k == 0:
            return ((1, 0), (0, 1))
        return _m2(self.field, sl2_u(self.field, self.elements[k - 1]), sl2_s(self.field))

    def _decompose(self, y):
        """``y = x b`` with ``x`` a coset representative; returns ``(index of x, beta)``."""
        F = self.field
        if y[1][0] == 0:
            return 0, y[0][0]
        t = F.div(y[0][0], y[1][0])
        return 1 + self.elements.index(t), F.neg(y[1][0])

    def matrix(self, g) -> Matrix:
        F = self.field
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        for k in range(self.dim):
            x2, beta = self._decompose(_m2(F, g, self._rep(k)))
            M[x2, k] = F.pow(beta, self.lam)
        return M

    def generators(self) -> dict[str, Matrix]:
        F = self.field
        gens = {f"u[{b}]": self.matrix(sl2_u(F, b)) for b in F.subfield_basis(self.d)}
        gens["s"] = self.matrix(sl2_s(F))
        return gens

    def torus(self) -> dict[str, Matrix]:
        t = self.field.subfield_generator(self.d)
        return {f"h[{t}]": self.matrix(sl2_h(self.field, t))}

    def as_module(self) -> FqModule:
        return FqModule(self.field, self.lam, self.d, self.generators(), None, self.torus())


def induced_model(lam: int, F: AmbientField, d: int | None = None) -> InducedModel:
    d = F.N if d is None else d
    q = F.p ** d
    get_caps().check("group_order", q * (q * q - 1))
    return InducedModel(F, lam, d, [int(x) for x in F.subfield_elements(d)])
