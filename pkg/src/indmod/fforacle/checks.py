"""Brute-force checks of the SL2 identities by explicit finite-field algebra."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Any

import numpy as np

from ..caps import CapError, get_caps
from ..sl2lab import PAdicExpansion, prime_power
from .field import AmbientField, ambient_field
from .modules import (
    SubspaceBasis,
    h_matrix,
    induced_model,
    make_h0,
    mat_eq,
    matmul,
    s_matrix,
    u_matrix,
)

__all__ = [
    "CheckResult",
    "SpinLattice",
    "SusSolution",
    "brute_factors",
    "respin_no_growth",
    "solve_sus",
    "spin_lattice",
    "steinberg_dim",
    "sus_unique",
    "verify_chain",
    "verify_exact_sequence",
    "verify_extend",
    "verify_power_sum",
    "verify_wtvec",
]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict[str, Any] = dc_field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "ok": self.ok, **self.detail}


def steinberg_dim(nu: int, p: int) -> int:
    """``dim L(nu) = prod (nu_i + 1)`` over the p-adic digits of ``nu``."""
    out = 1
    for c in PAdicExpansion.of(nu, p).digits:
        out *= c + 1
    return out


def _degree_above(m: int, p: int) -> int:
    k = 1
    while p ** k <= m:
        k += 1
    return k


# -- composition factors by spinning -----------------------------------------

@dataclass
class SpinLattice:
    m: int
    p: int
    k: int
    spins: dict[int, frozenset[int]]       # j -> coordinates of the spin of v_j
    submodules: list[frozenset[int]]       # all submodules as coordinate sets
    chain: list[frozenset[int]]            # a maximal chain from 0 to the whole module
    top_coordinate: dict[int, int]         # factor weight -> its highest-weight coordinate

    @property
    def weights(self) -> frozenset[int]:
        return frozenset(self.top_coordinate)

    def factor_weights(self, coords: frozenset[int]) -> frozenset[int]:
        return frozenset(nu for nu, j in self.top_coordinate.items() if j in coords)


def spin_lattice(m: int, p: int, k: int | None = None) -> SpinLattice:
    get_caps().check("sl2_m", m)
    get_caps().check("module_dim", m + 1)
    return _spin_lattice(m, p, k)


@lru_cache(maxsize=256)
def _spin_lattice(m: int, p: int, k: int | None = None) -> SpinLattice:
    """Spin every ``v_j`` in ``H^0(m)`` under ``SL2(F_{p^k})`` with ``p^k > m``.

    Every spin must be spanned by coordinate vectors; all submodules are then
    unions of the spins' coordinate sets.  A maximal chain is read off by
    always stepping to a smallest strictly larger submodule, and each step's
    factor weight is the weight of the unique coordinate fixed by ``U``
    modulo the smaller submodule.
    """
    caps = get_caps()
    caps.check("sl2_m", m)
    k = _degree_above(m, p) if k is None else k
    if p ** k <= m:
        raise ValueError(f"need p^k > m (p^k = {p ** k}, m = {m})")
    F = ambient_field(p, k)
    M = make_h0(m, F)
    n = m + 1
    spins = {}
    for j in range(n):
        V = M.spin([M.unit(j)])
        if not V.is_coordinate_split():
            raise AssertionError(f"spin of v_{j} is not spanned by coordinate vectors")
        spins[j] = frozenset(V.pivots)

    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for A in frontier:
            for S in spins.values():
                B = A | S
                if B not in found:
                    found.add(B)
                    nxt.append(B)
                    if len(found) > caps.lattice_size:
                        raise CapError(f"lattice_size cap exceeded for H^0({m})")
        frontier = nxt
    subs = sorted(found, key=lambda s: (len(s), sorted(s)))

    u_cols = [M.generators[name] for name in M.generators if name.startswith("u")]
    chain = [frozenset()]
    top: dict[int, int] = {}
    whole = frozenset(range(n))
    while chain[-1] != whole:
        cur = chain[-1]
        nxt_sub = min((s for s in subs if cur < s), key=lambda s: (len(s), sorted(s)))
        fixed = [j for j in sorted(nxt_sub - cur)
                 if all(all(i == j or i in cur for i in np.flatnonzero(U[:, j])) for U in u_cols)]
        if len(fixed) != 1:
            raise AssertionError(f"quotient {sorted(nxt_sub - cur)} has {len(fixed)} U-fixed coordinates")
        nu = m - 2 * fixed[0]
        if nu in top:
            raise AssertionError(f"L({nu}) occurs twice")
        if steinberg_dim(nu, p) != len(nxt_sub - cur):
            raise AssertionError(f"factor L({nu}) has dimension {len(nxt_sub - cur)}, "
                                 f"expected {steinberg_dim(nu, p)}")
        top[nu] = fixed[0]
        chain.append(nxt_sub)
    return SpinLattice(m, p, k, spins, subs, chain, top)


def brute_factors(m: int, p: int, k: int | None = None) -> frozenset[int]:
    """Highest weights of the composition factors of ``H^0(m)``, by spinning."""
    return spin_lattice(m, p, k).weights


def verify_wtvec(m: int, p: int, k: int | None = None, samples: int = 100, seed: int = 0) -> CheckResult:
    """Spins of random vectors contain every coordinate vector in their support."""
    k = _degree_above(m, p) if k is None else k
    F = ambient_field(p, k)
    M = make_h0(m, F)
    rng = random.Random(seed)
    bad = []
    for trial in range(samples):
        v = [rng.randrange(F.order) if rng.random() < 0.5 else 0 for _ in range(m + 1)]
        V = M.spin([v])
        support = [j for j, x in enumerate(v) if x]
        if not V.is_coordinate_split() or not all(j in V.pivots for j in support):
            bad.append(trial)
        elif trial < 5 and not M.is_stable(V, M.torus.values()):
            bad.append(trial)
    return CheckResult("wtvec", not bad, {"m": m, "p": p, "k": k, "samples": samples, "failures": bad})


def respin_no_growth(m: int, p: int, a: int, seeds: int = 10, seed: int = 0) -> CheckResult:
    """For ``m < p^a``, ``SL2(F_{p^a})``-spins are already ``SL2(F_{p^{2a}})``-stable."""
    if p ** a <= m:
        raise ValueError("need m < p^a")
    F = ambient_field(p, 2 * a)
    small, big = make_h0(m, F, a), make_h0(m, F, 2 * a)
    rng = random.Random(seed)
    vecs = [small.unit(j) for j in range(m + 1)]
    sub = F.subfield_elements(a)
    vecs += [[int(rng.choice(sub)) for _ in range(m + 1)] for _ in range(seeds)]
    grew = [i for i, v in enumerate(vecs) if small.spin([v]) != big.spin([v])]
    return CheckResult("respin", not grew, {"m": m, "p": p, "a": a, "grew": grew})


# -- embeddings and the exact sequence ----------------------------------------

def _level_generators(F: AmbientField, m: int, d: int) -> list[tuple[str, np.ndarray]]:
    out = [(f"u[{a}]", u_matrix(F, m, a)) for a in (int(x) for x in F.subfield_elements(d))]
    out.append(("s", s_matrix(F, m)))
    t = F.subfield_generator(d)
    out.append((f"h[{t}]", h_matrix(F, m, t)))
    return out


def extension_vector(i: int, qt: int, r: int, lam: int) -> list[int]:
    """Coordinates of ``v_i(qt)`` inside ``H^0(qt^r - 1 - lam)``."""
    K = sum(qt ** j for j in range(1, r))
    n = qt ** r - lam
    v = [0] * n
    for k in range(K + 1):
        v[i + k * (qt - 1)] = 1
    return v


def verify_extend(lam: int, qt: int, r: int, F: AmbientField | None = None) -> CheckResult:
    """``v_i(qt) -> sum_k v_{i + k(qt-1)}(qt^r)`` intertwines ``G_{qt}`` on both sides."""
    p, d = prime_power(qt)
    if not 0 <= lam < qt:
        raise ValueError("need 0 <= lambda < qt")
    F = ambient_field(p, d * r) if F is None else F
    if F.p != p or F.N % (d * r):
        raise ValueError("ambient field does not contain F_{qt^r}")
    m1, m2 = qt - 1 - lam, qt ** r - 1 - lam
    get_caps().check("module_dim", m2 + 1)
    E = np.array([extension_vector(i, qt, r, lam) for i in range(m1 + 1)], dtype=np.int64).T
    failures = []
    for (name, A1), (_, A2) in zip(_level_generators(F, m1, d), _level_generators(F, m2, d)):
        if not mat_eq(matmul(F, A2, E), matmul(F, E, A1)):
            failures.append(name)
    images = {i: [j for j, x in enumerate(E[:, i]) if x] for i in range(m1 + 1)}
    return CheckResult("extend", not failures,
                       {"lambda": lam, "q": qt, "r": r, "failures": failures, "images": images})


def verify_exact_sequence(lam: int, q: int, F: AmbientField | None = None) -> CheckResult:
    """``0 -> H^0(q-1-lam) -> Ind(lam) -> V(lam) -> 0`` on explicit matrices."""
    p, d = prime_power(q)
    if not 0 < lam < q:
        raise ValueError("need 0 < lambda < q")
    F = ambient_field(p, d) if F is None else F
    ind = induced_model(lam, F, d)
    m = q - 1 - lam
    H = make_h0(m, F, d)
    n = ind.dim
    ts = ind.elements
    W = np.zeros((n, m + 1), dtype=np.int64)
    for kk in range(m + 1):
        sign = F.sign(kk)
        for idx, t in enumerate(ts):
            W[1 + idx, kk] = F.mul(sign, F.pow(t, kk))
        if kk == m:
            W[0, kk] = F.mul(sign, F.sign(lam))
    failures = []
    ind_mats = list(ind.generators().items()) + list(ind.torus().items())
    h_mats = list(H.generators.values()) + list(H.torus.values())
    for (name, A), B in zip(ind_mats, h_mats):
        if not mat_eq(matmul(F, A, W), matmul(F, W, B)):
            failures.append(name)
    image = SubspaceBasis.span(F, W.T.tolist(), n)
    mod = ind.as_module()
    one = mod.unit(0)
    whole = mod.spin([one] + list(image.rows))
    t = F.subfield_generator(d)
    h1 = matmul(F, ind.torus()[f"h[{t}]"], np.array([one]).T)[:, 0]
    weight_ok = list(h1) == [F.pow(t, lam)] + [0] * (n - 1)
    u_fixed = all(list(matmul(F, A, np.array([one]).T)[:, 0]) == one
                  for name, A in ind.generators().items() if name.startswith("u"))
    stable = mod.spin(image.rows) == image
    ok = (not failures and image.dim == q - lam and whole.dim == n
          and n - image.dim == lam + 1 and weight_ok and u_fixed and stable)
    return CheckResult("exact_sequence", ok, {
        "lambda": lam, "q": q, "ind_dim": n, "kernel_dim": image.dim,
        "quotient_dim": n - image.dim, "intertwining_failures": failures,
        "cyclic": whole.dim == n, "weight_ok": weight_ok, "u_fixed": u_fixed, "stable": stable,
    })


def verify_power_sum(q_sub: int, k: int, F: AmbientField) -> CheckResult:
    """Sums of ``t^k`` over ``F_{q_sub}`` and over its unit group."""
    p, d = prime_power(q_sub)
    if p != F.p or F.N % d:
        raise ValueError(f"F_{q_sub} is not a subfield of {F!r}")
    elems = F.subfield_elements(d)
    if len(elems) != q_sub:
        raise AssertionError(f"subfield has {len(elems)} elements, expected {q_sub}")
    units = elems[elems != 0]
    full = F.sum_array(F.pow_array(elems, k))
    mult = F.sum_array(F.pow_array(units, k))
    minus1 = F.neg(1)
    want_mult = minus1 if k % (q_sub - 1) == 0 else 0
    want_full = minus1 if (k % (q_sub - 1) == 0 and k != 0) else 0
    ok = full == want_full and mult == want_mult
    return CheckResult("power_sum", ok, {"q": q_sub, "k": k, "full": full, "mult": mult})


@dataclass(frozen=True)
class SusSolution:
    a: int
    f: tuple          # u_x
    h: tuple          # diag(y, 1/y)
    g: tuple          # u_z
    x: int
    y: int
    z: int


def _m2(F, A, B):
    return tuple(tuple(F.add(F.mul(A[i][0], B[0][j]), F.mul(A[i][1], B[1][j])) for j in range(2))
                 for i in range(2))


def solve_sus(a: int, F: AmbientField) -> SusSolution:
    """Unique ``f = u_x``, ``h = h(y)``, ``g = u_z`` with ``s u_a s^{-1} = f s h g``.

    Expanding ``u_x s h(y) u_z = [[-xy, 1/y - xyz], [-y, -yz]]`` and matching
    entries with ``s u_a s^{-1}`` fixes ``y`` from the lower-left entry and
    then ``x`` and ``z`` from the diagonal; the upper-right entry is checked.
    """
    if a == 0:
        raise ValueError("a = 0 is excluded")
    s = ((0, 1), (F.neg(1), 0))
    s_inv = ((0, F.neg(1)), (1, 0))
    target = _m2(F, _m2(F, s, ((1, a), (0, 1))), s_inv)
    y = F.neg(target[1][0])
    x = F.neg(F.div(target[0][0], y))
    z = F.neg(F.div(target[1][1], y))
    sol = SusSolution(a, ((1, x), (0, 1)), ((y, 0), (0, F.inv(y))), ((1, z), (0, 1)), x, y, z)
    if _sus_product(F, sol.f, sol.h, sol.g) != target:
        raise AssertionError("sus solution does not reproduce s u_a s^-1")
    return sol


def _sus_product(F, f, h, g):
    s = ((0, 1), (F.neg(1), 0))
    return _m2(F, _m2(F, _m2(F, f, s), h), g)


def sus_unique(sol: SusSolution, F: AmbientField) -> bool:
    """Changing any single parameter breaks the identity."""
    s = ((0, 1), (F.neg(1), 0))
    s_inv = ((0, F.neg(1)), (1, 0))
    target = _m2(F, _m2(F, s, ((1, sol.a), (0, 1))), s_inv)
    for dx, dy, dz in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        x, z = F.add(sol.x, dx), F.add(sol.z, dz)
        y = sol.y if not dy else F.mul(sol.y, F.gen)
        if y == sol.y and x == sol.x and z == sol.z:
            continue
        if _sus_product(F, ((1, x), (0, 1)), ((y, 0), (0, F.inv(y))), ((1, z), (0, 1))) == target:
            return False
    return True


# -- the strict chain ---------------------------------------------------------

def verify_chain(lam: int, q: int, a: int, t: int, tprime: int,
                 F: AmbientField | None = None, target_index: int | None = None) -> CheckResult:
    """Spin ``v_0(q^a)`` and ``v_0(q^b)`` inside ``H^0(q^s - 1 - lam)``, ``b = a t``, ``s = b t'``."""
    p, d = prime_power(q)
    if q ** a <= lam:
        raise ValueError(f"need q^a > lambda (q^a = {q ** a})")
    if t < 2 or tprime < 2:
        raise ValueError("need t >= 2 and t' >= 2")
    b = a * t
    s = b * tprime
    mu = q ** s - 1 - lam
    caps = get_caps()
    caps.check("module_dim", mu + 1)
    F = ambient_field(p, d * s) if F is None else F
    H = make_h0(mu, F, d * s, check=False)
    big = H.spin([extension_vector(0, q ** a, s // a, lam)])
    small = H.spin([extension_vector(0, q ** b, s // b, lam)])
    contained = small.issubspace(F, big)
    strict = contained and small.dim < big.dim
    detail: dict[str, Any] = {
        "lambda": lam, "q": q, "a": a, "t": t, "tprime": tprime, "s": s, "mu_s": mu,
        "dim_big": big.dim, "dim_small": small.dim, "contained": contained,
        "split": big.is_coordinate_split() and small.is_coordinate_split(),
    }
    ok = strict
    if target_index is not None:
        unit = H.unit(target_index)
        in_big, in_small = big.contains(F, unit), small.contains(F, unit)
        detail.update(target_index=target_index, in_big=in_big, in_small=in_small)
        ok = ok and in_big and not in_small
    return CheckResult("chain", ok, detail)
