"""Explicit finite fields ``F_{p^N}`` with log/antilog and Zech tables.

An element is an integer code ``sum c_i p^i`` standing for ``sum c_i x^i``
modulo the defining polynomial.  The defining polynomial is the first monic
irreducible of degree ``N`` met when the lower coefficients are enumerated in
increasing code order, so every run builds the same field.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from ..caps import get_caps

__all__ = ["AmbientField", "ambient_field", "is_irreducible", "prime_factors"]


def prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient lists, lowest degree first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result: list[int] = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` of degree ``N`` over ``F_p``."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p ** n, f, p), x, p):
        return False
    for r in prime_factors(n):
        g = _pgcd(f, _psub(_ppowmod(x, p ** (n // r), f, p), x, p), p)
        if len(g) != 1:
            return False
    return True


def _find_modulus(p: int, n: int) -> tuple[int, ...]:
    for code in range(p ** n):
        low = [(code // p ** i) % p for i in range(n)]
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {n} over F_{p}")


class AmbientField:
    """``F_{p^N}`` with all arithmetic through lookup tables."""

    def __init__(self, p: int, N: int):
        if p < 2 or prime_factors(p) != [p]:
            raise ValueError(f"{p} is not prime")
        if N < 1:
            raise ValueError("degree must be positive")
        caps = get_caps()
        caps.check("field_degree", N)
        caps.check("field_order", p ** N)
        self.p, self.N = p, N
        self.order = Q = p ** N
        self.q1 = Q - 1
        self.modulus = _find_modulus(p, N)
        self.gen = self._primitive_element()

        # antilog table doubled so exp[la + lb] needs no reduction
        lin = self._mult_matrix(self.gen)
        pw = np.zeros(N, dtype=np.int64)
        pw[0] = 1
        place = p ** np.arange(N, dtype=np.int64)
        exp = np.zeros(2 * self.q1, dtype=np.int64)
        for k in range(self.q1):
            exp[k] = int(pw @ place)
            pw = lin @ pw % p
        exp[self.q1:] = exp[:self.q1]
        log = np.full(Q, -1, dtype=np.int64)
        log[exp[:self.q1]] = np.arange(self.q1, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        self.exp, self.log = exp, log
        self.digits = (np.arange(Q, dtype=np.int64)[:, None] // place) % p
        self._place = place
        # zech[k] = log(1 + g^k), -1 when 1 + g^k = 0
        one_plus = self._from_digit_rows((self.digits[exp[:self.q1]] + self.digits[1]) % p)
        self.zech = np.where(one_plus == 0, -1, log[one_plus]).astype(np.int64)
        self.neg_one = int(self.exp[self.q1 // 2]) if p != 2 else 1

    # -- construction helpers ---------------------------------------------
    def _poly(self, code: int) -> list[int]:
        return _trim([(code // self.p ** i) % self.p for i in range(self.N)])

    def _code(self, poly: Sequence[int]) -> int:
        return sum((c % self.p) * self.p ** i for i, c in enumerate(poly))

    def _slow_mul(self, a: int, b: int) -> int:
        return self._code(_pmulmod(self._poly(a), self._poly(b), self.modulus, self.p))

    def _slow_pow(self, a: int, e: int) -> int:
        return self._code(_ppowmod(self._poly(a), e, self.modulus, self.p))

    def _primitive_element(self) -> int:
        factors = prime_factors(self.q1)
        for g in range(1, self.order):
            if all(self._slow_pow(g, self.q1 // r) != 1 for r in factors):
                return g
        raise AssertionError("no primitive element")

    def _mult_matrix(self, g: int) -> np.ndarray:
        cols = [self._poly(self._slow_mul(g, self.p ** i)) for i in range(self.N)]
        M = np.zeros((self.N, self.N), dtype=np.int64)
        for i, col in enumerate(cols):
            M[:len(col), i] = col
        return M

    def _from_digit_rows(self, rows: np.ndarray) -> np.ndarray:
        return rows @ self._place

    # -- arithmetic ----------------------------------------------------------
    def __repr__(self) -> str:
        return f"AmbientField(p={self.p}, N={self.N})"

    def element(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = int(self.log[a])
        z = int(self.zech[(int(self.log[b]) - la) % self.q1])
        return 0 if z < 0 else int(self.exp[la + z])

    def neg(self, a: int) -> int:
        return a if self.p == 2 or a == 0 else self.mul(a, self.neg_one)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self.exp[(self.q1 - self.log[a]) % self.q1])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """``a**e`` with ``0**0 = 1``; negative ``e`` needs ``a != 0``."""
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % self.q1])

    def sign(self, k: int) -> int:
        """``(-1)**k`` as a field element."""
        return 1 if k % 2 == 0 else self.neg(1)

    def sum(self, values: Iterable[int]) -> int:
        arr = np.fromiter(values, dtype=np.int64)
        return self.sum_array(arr)

    def sum_array(self, arr: np.ndarray) -> int:
        if arr.size == 0:
            return 0
        if self.p == 2:
            return int(np.bitwise_xor.reduce(arr))
        return int(self._from_digit_rows(self.digits[arr].sum(axis=0) % self.p))

    def pow_array(self, arr: np.ndarray, e: int) -> np.ndarray:
        out = np.zeros_like(arr)
        nz = arr != 0
        out[nz] = self.exp[(self.log[arr[nz]] * e) % self.q1]
        if e == 0:
            out[~nz] = 1
        return out

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- subfields -----------------------------------------------------------
    def subfield_degrees(self) -> list[int]:
        return [d for d in range(1, self.N + 1) if self.N % d == 0]

    def _check_degree(self, d: int) -> None:
        if d < 1 or self.N % d:
            raise ValueError(f"F_{self.p}^{d} is not a subfield of F_{self.p}^{self.N}")

    def in_subfield(self, a: int, d: int) -> bool:
        self._check_degree(d)
        return self.pow(a, self.p ** d) == a

    def subfield_elements(self, d: int) -> np.ndarray:
        self._check_degree(d)
        codes = np.arange(self.order, dtype=np.int64)
        return codes[self.pow_array(codes, self.p ** d) == codes]

    def subfield_generator(self, d: int) -> int:
        self._check_degree(d)
        return int(self.exp[self.q1 // (self.p ** d - 1)])

    def subfield_basis(self, d: int) -> list[int]:
        """``1, gamma, ..., gamma^{d-1}`` for the primitive ``gamma`` of ``F_{p^d}``."""
        gamma = self.subfield_generator(d)
        return [self.pow(gamma, i) for i in range(d)]


@lru_cache(maxsize=32)
def _ambient_field(p: int, N: int) -> AmbientField:
    return AmbientField(p, N)


def ambient_field(p: int, N: int) -> AmbientField:
    caps = get_caps()
    caps.check("field_degree", N)
    caps.check("field_order", p ** N)
    return _ambient_field(p, N)
