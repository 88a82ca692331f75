"""Kazhdan-Lusztig polynomials, the elements ``C_w`` and the parabolic expansions.

All arithmetic is over the integers; residues mod ``p`` are taken at the end
(:meth:`GroupAlgebraVector.reduce`), which is harmless because every
transition matrix involved is unitriangular.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .poly import IntPolynomial
from .weyl import WeylElement, WeylGroup, subsets

__all__ = [
    "GroupAlgebraVector",
    "KLTable",
    "OutsideSpanError",
    "c_element",
    "expand_in_translates",
    "hecke_kl_polynomials",
    "kl_basis_expand",
    "kl_polynomial",
    "kl_table",
    "transition_matrices",
]

ONE = IntPolynomial((1,))
ZERO = IntPolynomial(())


class OutsideSpanError(ValueError):
    pass


@dataclass
class GroupAlgebraVector:
    """Finitely supported integer combination of group elements (by index)."""

    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.coeffs = {k: c for k, c in self.coeffs.items() if c}

    @classmethod
    def basis(cls, k: int) -> "GroupAlgebraVector":
        return cls({k: 1})

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupAlgebraVector) and self.coeffs == other.coeffs

    def __add__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return GroupAlgebraVector(out)

    def __sub__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        return self + other * -1

    def __mul__(self, scalar: int) -> "GroupAlgebraVector":
        return GroupAlgebraVector({k: c * scalar for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def left_mul(self, W: WeylGroup, x: int) -> "GroupAlgebraVector":
        return GroupAlgebraVector({W.mul(x, y): c for y, c in self.coeffs.items()})

    def reduce(self, p: int) -> "GroupAlgebraVector":
        return GroupAlgebraVector({k: c % p for k, c in self.coeffs.items()})

    def as_words(self, W: WeylGroup) -> dict[tuple[int, ...], int]:
        return {W.words[k]: c for k, c in sorted(self.coeffs.items())}


class KLTable:
    """All ``P_{y,w}`` of a Weyl group via the standard right-descent recursion."""

    def __init__(self, W: WeylGroup):
        self.W = W
        self._P: dict[tuple[int, int], IntPolynomial] = {}
        self._mu: dict[int, list[tuple[int, int]]] = {}
        for w in range(len(W)):
            self._column(w)

    def _column(self, w: int) -> None:
        W, P = self.W, self._P
        lw = W.lengths[w]
        if lw == 0:
            P[(0, 0)] = ONE
            self._mu[0] = []
            return
        s = W.words[w][-1] - 1
        v = W.rmul[w][s]
        mus = [(z, m) for z, m in self._mu[v] if W.lengths[W.rmul[z][s]] < W.lengths[z]]
        for y in W.bruhat_ideal(w):
            ys = W.rmul[y][s]
            c = 1 if W.lengths[ys] < W.lengths[y] else 0
            val = P.get((ys, v), ZERO).shift(1 - c) + P.get((y, v), ZERO).shift(c)
            for z, m in mus:
                pyz = P.get((y, z))
                if pyz is not None:
                    val = val - (pyz * m).shift((lw - W.lengths[z]) // 2)
            if not val.is_zero():
                P[(y, w)] = val
        col = []
        for y in W.bruhat_ideal(w):
            d = lw - W.lengths[y]
            if y != w and d % 2 == 1:
                m = P.get((y, w), ZERO).coeff((d - 1) // 2)
                if m:
                    col.append((y, m))
        self._mu[w] = col

    def P(self, y: int, w: int) -> IntPolynomial:
        return self._P.get((y, w), ZERO)

    def mu(self, y: int, w: int) -> int:
        d = self.W.lengths[w] - self.W.lengths[y]
        if d <= 0 or d % 2 == 0:
            return 0
        return self.P(y, w).coeff((d - 1) // 2)

    def items(self) -> Iterable[tuple[tuple[int, int], IntPolynomial]]:
        return sorted(self._P.items())

    def c_element(self, w: int) -> GroupAlgebraVector:
        W = self.W
        lw = W.lengths[w]
        return GroupAlgebraVector({y: (-1) ** (lw - W.lengths[y]) * self.P(y, w)(1)
                                   for y in W.bruhat_ideal(w)})


@lru_cache(maxsize=16)
def kl_table(W: WeylGroup) -> KLTable:
    return KLTable(W)


def kl_polynomial(W: WeylGroup, y: WeylElement | int, w: WeylElement | int) -> IntPolynomial:
    return kl_table(W).P(W.index(y), W.index(w))


def c_element(W: WeylGroup, w: WeylElement | int) -> GroupAlgebraVector:
    """``C_w = sum_{y <= w} (-1)^{l(w)-l(y)} P_{y,w}(1) y``."""
    return kl_table(W).c_element(W.index(w))


def _peel(W: WeylGroup, target: GroupAlgebraVector,
          basis: Mapping[object, tuple[int, GroupAlgebraVector]]) -> dict[object, int]:
    """Solve ``target = sum b_key * vec`` for a basis whose vectors have
    coefficient 1 at a distinct leading element and otherwise only shorter
    support.  Leading elements are consumed from longest to shortest.
    """
    by_lead = {lead: (key, vec) for key, (lead, vec) in basis.items()}
    residual = dict(target.coeffs)
    out: dict[object, int] = {}
    for lead in sorted(by_lead, key=lambda k: (-W.lengths[k], k)):
        c = residual.get(lead, 0)
        if not c:
            continue
        key, vec = by_lead[lead]
        out[key] = c
        for k, a in vec.coeffs.items():
            r = residual.get(k, 0) - c * a
            if r:
                residual[k] = r
            else:
                residual.pop(k, None)
    if residual:
        raise OutsideSpanError(f"vector has {len(residual)} coordinates outside the span")
    return out


def expand_in_translates(W: WeylGroup, x: WeylElement | int, J: Iterable[int]) -> dict[int, int]:
    """Coefficients ``a'_y`` with ``x C_{w_J} = sum_y a'_y C_{y w_J}`` over ``y`` in ``X_J``."""
    J = frozenset(J)
    x = W.index(x)
    if W.rdes[x] & J:
        raise ValueError(f"{W.words[x]} is not a minimal coset representative for J={sorted(J)}")
    table = kl_table(W)
    wj = W.longest_in(J)
    target = table.c_element(wj).left_mul(W, x)
    basis = {}
    for y in W.min_coset_reps(J):
        ywj = W.mul(y, wj)
        basis[y] = (ywj, table.c_element(ywj))
    return _peel(W, target, basis)


def kl_basis_expand(W: WeylGroup, v: GroupAlgebraVector, J: Iterable[int],
                    itheta: Iterable[int]) -> dict[tuple[frozenset[int], int], int]:
    """Coordinates of ``v`` in the basis ``{w C_{w_K} : J <= K <= I(theta), w in Z_K}``.

    Every ``w C_{w_K}`` has coefficient 1 at ``w w_K`` and only shorter
    support elsewhere, and the leading elements run over ``X_J w_J`` exactly
    once, so the system is unitriangular.
    """
    J, itheta = frozenset(J), frozenset(itheta)
    table = kl_table(W)
    basis = {}
    for extra in subsets(itheta - J):
        K = J | extra
        wk = W.longest_in(K)
        ck = table.c_element(wk)
        for w in W.z_set(K, itheta):
            basis[(K, w)] = (W.mul(w, wk), ck.left_mul(W, w))
    if len({lead for lead, _ in basis.values()}) != len(basis):
        raise AssertionError("leading elements collide")
    return _peel(W, v, basis)


def transition_matrices(W: WeylGroup, J: Iterable[int]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Return ``(reps, A, Ainv)`` for the minimal coset representatives ``reps``.

    ``C_{x w_J} = sum_y A[x][y] y C_{w_J}`` and
    ``x C_{w_J} = sum_y Ainv[x][y] C_{y w_J}`` (rows and columns follow ``reps``).
    """
    J = frozenset(J)
    reps = W.min_coset_reps(J)
    pos = {y: k for k, y in enumerate(reps)}
    table = kl_table(W)
    wj = W.longest_in(J)
    cwj = table.c_element(wj)
    n = len(reps)
    A = [[0] * n for _ in range(n)]
    Ainv = [[0] * n for _ in range(n)]
    for a, x in enumerate(reps):
        cx = table.c_element(W.mul(x, wj))
        rebuilt = GroupAlgebraVector()
        for y in reps:
            coef = cx[W.mul(y, wj)]
            if coef:
                A[a][pos[y]] = coef
                rebuilt = rebuilt + cwj.left_mul(W, y) * coef
        if rebuilt != cx:
            raise OutsideSpanError("C_{x w_J} is not in k W C_{w_J}")
        for y, c in expand_in_translates(W, x, J).items():
            Ainv[a][pos[y]] = c
    return reps, A, Ainv


# --- independent route: Hecke algebra multiplication -------------------------
# Laurent polynomials in v = q^(1/2) as {exponent: coefficient}.

def _ladd(a: dict[int, int], b: dict[int, int], scale: int = 1) -> dict[int, int]:
    out = dict(a)
    for e, c in b.items():
        r = out.get(e, 0) + scale * c
        if r:
            out[e] = r
        else:
            out.pop(e, None)
    return out


def _lshift(a: dict[int, int], k: int) -> dict[int, int]:
    return {e + k: c for e, c in a.items()}


def _lmul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _hecke_times_ts(W: WeylGroup, X: dict[int, dict[int, int]], s: int) -> dict[int, dict[int, int]]:
    """``X * T_s`` with ``T_s^2 = (q-1) T_s + q``."""
    out: dict[int, dict[int, int]] = {}
    for y, c in X.items():
        ys = W.rmul[y][s]
        if W.lengths[ys] > W.lengths[y]:
            out[ys] = _ladd(out.get(ys, {}), c)
        else:
            out[y] = _ladd(out.get(y, {}), _ladd(_lshift(c, 2), c, -1))
            out[ys] = _ladd(out.get(ys, {}), _lshift(c, 2))
    return {k: c for k, c in out.items() if c}


def _hecke_times_ts_inverse(W: WeylGroup, X: dict[int, dict[int, int]], s: int) -> dict[int, dict[int, int]]:
    """``X * T_s^{-1}`` with ``T_s^{-1} = q^{-1} T_s + (q^{-1} - 1)``."""
    xt = _hecke_times_ts(W, X, s)
    out: dict[int, dict[int, int]] = {}
    for y, c in xt.items():
        out[y] = _lshift(c, -2)
    for y, c in X.items():
        out[y] = _ladd(out.get(y, {}), _ladd(_lshift(c, -2), c, -1))
    return {k: c for k, c in out.items() if c}


def hecke_kl_polynomials(W: WeylGroup) -> dict[tuple[int, int], IntPolynomial]:
    """``P_{y,w}`` characterised by bar-invariance of ``v^{-l(w)} sum_y P_{y,w}(v^2) T_y``.

    The bar images ``T_{y^{-1}}^{-1}`` are computed by explicit Hecke
    multiplication, and each ``P_{x,w}`` is read off from the part of the
    bar-invariance equation below ``v^{-l(x)}``.  No Bruhat order, descent
    recursion or mu-coefficients are used.
    """
    n = len(W)
    bar: list[dict[int, dict[int, int]]] = [dict() for _ in range(n)]
    bar[0] = {0: {0: 1}}
    for y in range(1, n):
        s = min(W.rdes[y]) - 1
        bar[y] = _hecke_times_ts_inverse(W, bar[W.rmul[y][s]], s)

    out: dict[tuple[int, int], IntPolynomial] = {}
    by_length = sorted(range(n), key=lambda k: -W.lengths[k])
    for w in range(n):
        lw = W.lengths[w]
        col: dict[int, IntPolynomial] = {w: ONE}
        for x in by_length:
            lx = W.lengths[x]
            if lx >= lw:
                continue
            rhs: dict[int, int] = {}
            for y, pyw in col.items():
                r = bar[y].get(x)
                if r:
                    # v^{l(w)} P_{y,w}(v^{-2})
                    lifted = {lw - 2 * k: c for k, c in enumerate(pyw.coeffs) if c}
                    rhs = _ladd(rhs, _lmul(lifted, r))
            coeffs = [0] * (lw - lx)
            for e, c in rhs.items():
                if e < -lx:
                    k, rem = divmod(e + lw, 2)
                    if rem or k < 0:
                        raise AssertionError("bar-invariance equation has wrong parity")
                    coeffs[k] = c
            pxw = IntPolynomial(tuple(coeffs))
            if 2 * pxw.degree >= lw - lx:
                raise AssertionError("degree bound violated")
            check = _ladd({-lw + 2 * k: c for k, c in enumerate(pxw.coeffs) if c},
                          {lw - 2 * lx - 2 * k: c for k, c in enumerate(pxw.coeffs) if c}, -1)
            if check != rhs:
                raise AssertionError(f"no bar-invariant solution at x={W.words[x]}, w={W.words[w]}")
            if not pxw.is_zero():
                col[x] = pxw
        for x, pol in col.items():
            out[(x, w)] = pol
    return out
