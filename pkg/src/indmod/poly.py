from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = ["IntPolynomial"]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ``coeffs[k]`` is the coefficient of ``var**k``."""

    coeffs: tuple[int, ...] = ()
    var: str = "q"

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1, var: str = "q") -> "IntPolynomial":
        return cls((0,) * k + (c,), var)

    @classmethod
    def from_exponents(cls, exps: Iterable[int], var: str = "q") -> "IntPolynomial":
        exps = list(exps)
        out = [0] * (max(exps, default=-1) + 1)
        for e in exps:
            out[e] += 1
        return cls(tuple(out), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _zip(self, other: "IntPolynomial", sign: int) -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coeff(k) + sign * other.coeff(k) for k in range(n)), self.var)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self._zip(other, 1)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self._zip(other, -1)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs), self.var)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs), self.var)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out), self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``var**k`` (``k >= 0``)."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs, self.var)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text
