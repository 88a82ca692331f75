"""p-adic combinatorics of the SL2 costandard modules ``H^0(m)``.

Weights are non-negative integers; ``v_i`` is the weight vector of weight
``m - 2i``.  ``rho(m, j, p)`` is the reflection ``m -> m - 2 r_j`` where
``m + 1 = lambda_j p^j + r_j``; chains of admissible reflections enumerate the
composition factors of ``H^0(m)``, and a p-adic support order on those weights
describes every submodule.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .caps import CapError, get_caps
from .dot import hasse_to_dot

__all__ = [
    "AdmissibleSequence",
    "ChainCertificate",
    "FactorSet",
    "PAdicExpansion",
    "SubmoduleDescriptor",
    "SubmoduleLattice",
    "admissible_sequences",
    "apply_sequence",
    "factor_set",
    "generates",
    "h0_frobenius_factors",
    "lambda_e",
    "lucas_binom_mod_p",
    "prime_power",
    "preceq",
    "reachable_indices",
    "rho",
    "strict_chain_certificate",
    "submodule_lattice",
]


def prime_power(q: int) -> tuple[int, int]:
    """``(p, d)`` with ``q = p^d``; raises if ``q`` is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(k for k in range(2, q + 1) if q % k == 0)
    d, rest = 0, q
    while rest % p == 0:
        rest //= p
        d += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, d


def _check_prime(p: int) -> None:
    if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class PAdicExpansion:
    p: int
    digits: tuple[int, ...]  # least significant first

    @classmethod
    def of(cls, n: int, p: int) -> "PAdicExpansion":
        if n < 0:
            raise ValueError("p-adic expansion of a negative integer")
        out = []
        while n:
            n, r = divmod(n, p)
            out.append(r)
        return cls(p, tuple(out))

    @property
    def value(self) -> int:
        return sum(c * self.p ** k for k, c in enumerate(self.digits))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(k for k, c in enumerate(self.digits) if c)

    def digit(self, k: int) -> int:
        return self.digits[k] if k < len(self.digits) else 0


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def top_digit(n: int, p: int) -> int:
    """Index of the most significant nonzero p-adic digit of ``n > 0``."""
    if n <= 0:
        raise ValueError("need a positive integer")
    return len(PAdicExpansion.of(n, p).digits) - 1


def rho(m: int, j: int, p: int) -> tuple[int, bool]:
    """``(m - 2 r_j, p does not divide lambda_j)`` for ``m + 1 = lambda_j p^j + r_j``."""
    if m < 0 or j < 1:
        raise ValueError("need m >= 0 and j >= 1")
    lam, r = divmod(m + 1, p ** j)
    return m - 2 * r, lam % p != 0


@dataclass(frozen=True)
class AdmissibleSequence:
    e: tuple[int, ...]       # increasing; e[-1] is applied first
    values: tuple[int, ...]  # m, rho_{e_k}(m), ..., rho_e(m)

    @property
    def result(self) -> int:
        return self.values[-1]


def apply_sequence(m: int, e: Sequence[int], p: int) -> AdmissibleSequence:
    """Apply ``rho_e = rho_{e_1} ... rho_{e_k}`` to ``m``, checking admissibility."""
    e = tuple(e)
    if any(a >= b for a, b in zip(e, e[1:])) or (e and e[0] < 1):
        raise ValueError(f"indices {e} are not strictly increasing positive integers")
    values = [m]
    for j in reversed(e):
        v, ok = rho(values[-1], j, p)
        if not ok:
            raise ValueError(f"rho_{j} is not {values[-1]}-admissible (p={p})")
        if v >= values[-1]:
            raise ValueError(f"rho_{j} does not decrease {values[-1]}")
        values.append(v)
    return AdmissibleSequence(e, tuple(values))


def admissible_sequences(m: int, p: int, max_index: int | None = None,
                         allow_zero: bool = True) -> list[AdmissibleSequence]:
    """All ``m``-admissible sequences, optionally with every index ``<= max_index``.

    Depth-first: the largest index is chosen first and every later choice is
    smaller.  With ``allow_zero=False`` chains ending in weight 0 are dropped.
    """
    _check_prime(p)
    if m < 0:
        raise ValueError("m must be non-negative")
    out: list[AdmissibleSequence] = []

    def walk(val: int, below: int, rev_e: list[int], values: list[int]) -> None:
        if allow_zero or values[-1] > 0:
            out.append(AdmissibleSequence(tuple(reversed(rev_e)), tuple(values)))
        j = 1
        while j < below and p ** j <= val + 1:
            v, ok = rho(val, j, p)
            if ok and v < val:
                walk(v, j, rev_e + [j], values + [v])
            j += 1

    top = (max_index + 1) if max_index is not None else m + 2
    walk(m, top, [], [m])
    out.sort(key=lambda s: (len(s.e), s.e))
    return out


@dataclass(frozen=True)
class FactorSet:
    m: int
    p: int
    S: frozenset[int]

    def sorted(self) -> list[int]:
        return sorted(self.S, reverse=True)


@lru_cache(maxsize=4096)
def factor_set(m: int, p: int, allow_zero: bool = True) -> FactorSet:
    """Highest weights of the composition factors of ``H^0(m)``."""
    return FactorSet(m, p, frozenset(s.result for s in admissible_sequences(m, p, allow_zero=allow_zero)))


def _check_weight(x: int, m: int) -> None:
    if (m - x) % 2 or x > m or x < 0:
        raise ValueError(f"weight {x} is not of the form m - 2i with 0 <= i <= m (m={m})")


def preceq(nu: int, mu: int, m: int, p: int) -> bool:
    """True when the p-adic support of ``(m - nu)/2`` lies inside that of ``(m - mu)/2``.

    This is a partial order on ``S(m)``.  It is not by itself the containment
    order of submodules: see :func:`generates`, which also closes under the
    reflection ``v_i -> v_{m-i}``.
    """
    for x in (nu, mu):
        _check_weight(x, m)
    a = PAdicExpansion.of((m - nu) // 2, p).support
    b = PAdicExpansion.of((m - mu) // 2, p).support
    return a <= b


@lru_cache(maxsize=4096)
def reachable_indices(j: int, m: int, p: int) -> frozenset[int]:
    """Indices ``k`` with ``v_k`` in the submodule generated by ``v_j``.

    Closure of ``i -> k`` for ``k <= i`` with ``binom(i, k)`` nonzero mod p
    (the unipotent part, by Lucas) and ``i -> m - i`` (the Weyl element).
    """
    if not 0 <= j <= m:
        raise ValueError(f"index {j} out of range 0..{m}")
    seen = {j}
    stack = [j]
    while stack:
        i = stack.pop()
        for k in [k for k in range(i + 1) if lucas_binom_mod_p(i, k, p)] + [m - i]:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return frozenset(seen)


def generates(nu: int, mu: int, m: int, p: int) -> bool:
    """True when ``L(nu)`` is a composition factor of the submodule generated by ``v_{(m - mu)/2}``."""
    for x in (nu, mu):
        _check_weight(x, m)
    return (m - nu) // 2 in reachable_indices((m - mu) // 2, m, p)


@dataclass(frozen=True)
class SubmoduleDescriptor:
    E: frozenset[int]              # irredundant generators
    factor_weights: frozenset[int]

    @property
    def dimension_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.factor_weights), tuple(sorted(self.factor_weights, reverse=True)))


@dataclass
class SubmoduleLattice:
    m: int
    p: int
    S: frozenset[int]
    elements: list[SubmoduleDescriptor]
    covers: list[tuple[int, int]] = field(default_factory=list)

    def index_of(self, weights: Iterable[int]) -> int:
        key = frozenset(weights)
        for k, d in enumerate(self.elements):
            if d.factor_weights == key:
                return k
        raise KeyError(sorted(key))

    def leq(self, a: int, b: int) -> bool:
        return self.elements[a].factor_weights <= self.elements[b].factor_weights

    def to_dot(self) -> str:
        labels = ["{" + ",".join(str(w) for w in sorted(d.factor_weights, reverse=True)) + "}"
                  for d in self.elements]
        ranks = [len(d.factor_weights) for d in self.elements]
        return hasse_to_dot(labels, self.covers, name=f"H0_{self.m}_p{self.p}", ranks=ranks)


def _generators(F: frozenset[int], principal: dict[int, frozenset[int]]) -> frozenset[int]:
    return frozenset(mu for mu in F
                     if not any(nu != mu and mu in principal[nu] for nu in F))


def _covers(sets: Sequence[frozenset[int]]) -> list[tuple[int, int]]:
    edges = []
    for b, B in enumerate(sets):
        below = [a for a, A in enumerate(sets) if A < B]
        for a in below:
            if not any(sets[a] < sets[c] for c in below):
                edges.append((a, b))
    return sorted(edges)


def submodule_lattice(m: int, p: int, order: str = "closure") -> SubmoduleLattice:
    """All submodules of ``H^0(m)``, as unions of the principal factor sets.

    ``order="closure"`` (default) takes the principal sets from
    :func:`generates`; ``order="support"`` uses :func:`preceq` instead, which
    gives a different poset for e.g. ``m = 4, p = 2``.
    """
    get_caps().check("sl2_m", m)
    rel = {"closure": generates, "support": preceq}.get(order)
    if rel is None:
        raise ValueError("order must be 'closure' or 'support'")
    S = factor_set(m, p).S
    principal = {mu: frozenset(nu for nu in S if rel(nu, mu, m, p)) for mu in S}
    cap = get_caps().lattice_size
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for F in frontier:
            for P in principal.values():
                G = F | P
                if G not in found:
                    found.add(G)
                    nxt.append(G)
                    if len(found) > cap:
                        raise CapError(f"lattice_size cap exceeded: more than {cap} submodules")
        frontier = nxt
    elems = sorted((SubmoduleDescriptor(_generators(F, principal), F) for F in found),
                   key=lambda d: d.dimension_key)
    return SubmoduleLattice(m, p, S, elems, _covers([d.factor_weights for d in elems]))


def h0_frobenius_factors(lam: int, q: int, r: int) -> frozenset[int]:
    """Factor weights of ``H^0(q^r - 1 - lam)`` from the two families.

    ``rho_f(mu_r)`` for ``mu_r``-admissible ``f`` with all indices ``<= l``, and
    ``rho_e rho_h(mu_r)`` for ``(lam-1)``-admissible ``e`` and ``l < h < rd``,
    where ``l`` is the top p-digit index of ``lam``.
    """
    p, d = prime_power(q)
    if not 0 < lam < q ** r:
        raise ValueError(f"need 0 < lambda < q^r = {q ** r}")
    mu = q ** r - 1 - lam
    l = top_digit(lam, p)
    out = {s.result for s in admissible_sequences(mu, p, max_index=l)}
    for seq in admissible_sequences(lam - 1, p):
        for h in range(l + 1, r * d):
            v, ok = rho(mu, h, p)
            if not ok:
                raise AssertionError(f"rho_{h} is not {mu}-admissible")
            out.add(apply_sequence(v, seq.e, p).result)
    return frozenset(out)


def lambda_e(lam: int, e: Sequence[int], p: int) -> tuple[int, int]:
    """``(lambda_e, i_e)`` with ``lambda_e = lam - (lam - 1 - rho_e(lam - 1))/2``.

    Also checks ``(mu_r - rho_e rho_h(mu_r))/2 = p^h - lambda_e`` at two values
    of ``h`` (with ``q = p`` and ``r = l + 3``), so the value is seen to be
    independent of ``h``.
    """
    _check_prime(p)
    if lam < 1:
        raise ValueError("lambda must be positive")
    low = apply_sequence(lam - 1, e, p).result
    le = lam - (lam - 1 - low) // 2
    if not 0 < le <= lam:
        raise AssertionError(f"lambda_e={le} out of range")
    l = top_digit(lam, p)
    r = l + 3
    mu = p ** r - 1 - lam
    for h in (l + 1, l + 2):
        v, ok = rho(mu, h, p)
        if not ok:
            raise AssertionError(f"rho_{h} is not {mu}-admissible")
        got = apply_sequence(v, e, p).result
        if (mu - got) // 2 != p ** h - le:
            raise AssertionError(f"identity fails at h={h}: {(mu - got) // 2} != {p ** h - le}")
    return le, valuation(le, p)


def lucas_binom_mod_p(m: int, n: int, p: int) -> int:
    """``binom(m, n) mod p`` as the product of digitwise binomials."""
    _check_prime(p)
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    out = 1
    while n:
        m, a = divmod(m, p)
        n, b = divmod(n, p)
        if b > a:
            return 0
        out = out * comb(a, b) % p
    return out % p


@dataclass
class ChainCertificate:
    lam: int
    q: int
    p: int
    d: int
    a: int
    t: int
    tprime: int
    b: int
    s: int
    mu_s: int
    e: tuple[int, ...]
    lambda_e: int
    i_e: int
    target_index: int       # j* : the separating coordinate v_{j*}
    target_weight: int      # mu_s - 2 j*
    lucas_k: int
    lucas_bound: int
    lucas_residue: int
    small_weights: list[int]
    inequalities: list[tuple[tuple[int, ...], int, int]]
    incomparable: bool

    @property
    def membership_ok(self) -> bool:
        return self.lucas_residue != 0 and self.lucas_k < self.lucas_bound

    @property
    def inequality_ok(self) -> bool:
        return all(lhs < rhs for _, lhs, rhs in self.inequalities)

    @property
    def valid(self) -> bool:
        return self.membership_ok and self.inequality_ok and self.incomparable

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam, "q": self.q, "a": self.a, "t": self.t, "tprime": self.tprime,
            "b": self.b, "s": self.s, "mu_s": self.mu_s, "e": list(self.e),
            "lambda_e": self.lambda_e, "i_e": self.i_e,
            "target_index": self.target_index, "target_weight": self.target_weight,
            "lucas": {"k": self.lucas_k, "bound": self.lucas_bound, "residue": self.lucas_residue},
            "small_weights": self.small_weights,
            "inequalities": [{"e": list(e), "lhs": l, "rhs": r} for e, l, r in self.inequalities],
            "membership_ok": self.membership_ok, "inequality_ok": self.inequality_ok,
            "incomparable": self.incomparable, "valid": self.valid,
        }


def strict_chain_certificate(lam: int, q: int, a: int, t: int, tprime: int,
                             e: Sequence[int] = ()) -> ChainCertificate:
    """Evidence that ``v_0(q^b)`` generates a strictly smaller module than ``v_0(q^a)``.

    Works inside ``H^0(mu_s)`` with ``b = a t``, ``s = b t'`` and
    ``mu_s = q^s - 1 - lam``.  The separating vector is ``v_{j*}`` with
    ``j* = p^{(t t' - 1) a d + i_e} - lambda_e``.  Membership in the large
    module is a Lucas computation; exclusion from the small one compares
    ``L(mu_s - 2 j*)`` against every generator weight of a module known to
    contain the small one.
    """
    p, d = prime_power(q)
    if lam < 1:
        raise ValueError("lambda must be positive")
    if q ** a <= lam:
        raise ValueError(f"need q^a > lambda (q^a = {q ** a}, lambda = {lam})")
    if t < 2 or tprime < 2:
        raise ValueError("need t >= 2 and t' >= 2")
    b, T = a * t, t * tprime
    s = b * tprime
    mu = q ** s - 1 - lam
    l = top_digit(lam, p)
    le, ie = lambda_e(lam, e, p)
    h_star = (T - 1) * a * d + ie
    j_star = p ** h_star - le
    v, ok = rho(mu, h_star, p)
    if not ok:
        raise AssertionError(f"rho_{h_star} is not {mu}-admissible")
    nu_star = apply_sequence(v, e, p).result
    if (mu - nu_star) // 2 != j_star:
        raise AssertionError("separating weight disagrees with lambda_e")

    qa = q ** a
    k = p ** ie * sum(qa ** i for i in range(T - 1))
    bound = sum(qa ** i for i in range(1, T))
    residue = lucas_binom_mod_p(k * (qa - 1), j_star, p)

    # generators of a module containing G v_0(q^b): the same families at level b
    small: list[int] = []
    ineq = []
    for seq in admissible_sequences(lam - 1, p):
        _, ie2 = lambda_e(lam, seq.e, p)
        h2 = (tprime - 1) * b * d + ie2
        ineq.append((seq.e, h2, h_star))
        v2, ok2 = rho(mu, h2, p)
        if not ok2:
            raise AssertionError(f"rho_{h2} is not {mu}-admissible")
        small.append(apply_sequence(v2, seq.e, p).result)
    for seq in admissible_sequences(mu, p, max_index=l):
        small.append(seq.result)
    small = sorted(set(small), reverse=True)
    incomparable = not any(generates(nu_star, w, mu, p) for w in small)
    return ChainCertificate(lam, q, p, d, a, t, tprime, b, s, mu, tuple(e), le, ie,
                            j_star, nu_star, k, bound, residue, small, ineq, incomparable)
