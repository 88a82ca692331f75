import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from indmod import sl2lab
from indmod.caps import CapError
from indmod.fforacle import (
    ambient_field,
    brute_factors,
    induced_model,
    make_h0,
    respin_no_growth,
    solve_sus,
    spin_lattice,
    steinberg_dim,
    sus_unique,
    verify_chain,
    verify_exact_sequence,
    verify_extend,
    verify_power_sum,
    verify_wtvec,
)
from indmod.fforacle.modules import h_matrix, matmul


# -- explicit modules ----------------------------------------------------------

def test_h0_of_one_is_natural_rep():
    F = ambient_field(3, 1)
    M = make_h0(1, F)
    s = M.generators["s"]
    assert s.tolist() == [[0, 1], [F.neg(1), 0]]


def test_torus_acts_by_weight():
    F = ambient_field(2, 4)
    m = 6
    t = F.gen
    h = h_matrix(F, m, t)
    assert int(h[0, 0]) == F.pow(t, m)
    assert int(h[m, m]) == F.pow(t, -m)


def test_h0_too_large_for_field():
    with pytest.raises(ValueError):
        make_h0(16, ambient_field(2, 4))
    with pytest.raises(ValueError):
        make_h0(3, ambient_field(2, 4), d=3)


def test_s_squared_is_minus_one_on_weights():
    F = ambient_field(5, 1)
    M = make_h0(3, F)
    s = M.generators["s"]
    assert np.array_equal(matmul(F, s, s), h_matrix(F, 3, F.neg(1)))


def test_induced_model_dimension():
    F = ambient_field(2, 2)
    ind = induced_model(1, F)
    assert ind.dim == 5
    mod = ind.as_module()
    assert mod.spin([mod.unit(0)]).dim == 5


# -- composition factors by spinning ----------------------------------------------

def test_factors_below_p_are_irreducible():
    for p in (3, 5, 7):
        for m in range(p):
            assert brute_factors(m, p) == {m}


def test_factors_small_examples():
    assert brute_factors(2, 2) == {2, 0}
    assert brute_factors(14, 2) == {14, 12, 8, 0}


def test_factors_independent_of_field_degree():
    assert brute_factors(14, 2, 4) == brute_factors(14, 2, 5)
    assert brute_factors(8, 3, 2) == brute_factors(8, 3, 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_factors_match_combinatorics(p):
    for m in range(41):
        assert brute_factors(m, p) == sl2lab.factor_set(m, p).S, m


def test_factor_dimensions_add_up():
    for p in (2, 3):
        for m in range(1, 20):
            assert sum(steinberg_dim(nu, p) for nu in brute_factors(m, p)) == m + 1


def test_lattice_spins_at_four():
    L = spin_lattice(4, 2)
    # v_1 generates everything, so v_2 lies in its spin
    assert L.spins[1] == frozenset(range(5))
    assert L.spins[2] == frozenset({0, 2, 4})
    assert L.chain[0] == frozenset() and L.chain[-1] == frozenset(range(5))


@pytest.mark.parametrize("p,m", [(2, 9), (2, 12), (3, 10), (5, 13)])
def test_lattice_matches_closure_rule(p, m):
    L = spin_lattice(m, p)
    for j in range(m + 1):
        assert L.spins[j] == sl2lab.reachable_indices(j, m, p)


def test_weight_vectors():
    assert verify_wtvec(14, 2, 4).ok
    assert verify_wtvec(8, 3, 2).ok


def test_respin_no_growth():
    assert respin_no_growth(8, 3, 2).ok
    assert respin_no_growth(3, 2, 2).ok
    with pytest.raises(ValueError):
        respin_no_growth(9, 3, 2)


# -- embeddings and the exact sequence ----------------------------------------

def test_extend_images():
    r = verify_extend(1, 2, 2)
    assert r.ok and r.detail["images"] == {0: [0, 1, 2]}
    r = verify_extend(1, 2, 4)
    assert r.ok and r.detail["images"] == {0: list(range(15))}


def test_extend_larger_q():
    assert verify_extend(1, 3, 2).ok
    assert verify_extend(0, 4, 2).ok


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_exact_sequence(q):
    for lam in range(1, q):
        r = verify_exact_sequence(lam, q)
        assert r.ok, r.detail
        assert r.detail["ind_dim"] == q + 1
        assert r.detail["kernel_dim"] == q - lam
        assert r.detail["quotient_dim"] == lam + 1


def test_exact_sequence_range():
    with pytest.raises(ValueError):
        verify_exact_sequence(0, 4)
    with pytest.raises(ValueError):
        verify_exact_sequence(4, 4)


# -- power sums ---------------------------------------------------------------

def test_power_sums_over_f4():
    F = ambient_field(2, 4)
    r3, r2, r0 = (verify_power_sum(4, k, F) for k in (3, 2, 0))
    assert r3.ok and r3.detail["full"] == F.neg(1)
    assert r2.ok and r2.detail["full"] == 0
    assert r0.ok and r0.detail["full"] == 0 and r0.detail["mult"] == F.neg(1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 2, 9), (3, 4, 9), (3, 4, 3), (2, 6, 8), (5, 2, 25)]),
       st.integers(0, 200))
def test_power_sum_rule(field_and_sub, k):
    p, N, q = field_and_sub
    assert verify_power_sum(q, k, ambient_field(p, N)).ok


def test_power_sum_rejects_non_subfield():
    with pytest.raises(ValueError):
        verify_power_sum(8, 1, ambient_field(2, 4))


# -- the s u s identity -------------------------------------------------------

@pytest.mark.parametrize("pn", [(2, 4), (3, 4), (2, 12), (3, 6)])
def test_sus_random(pn):
    F = ambient_field(*pn)
    rng = random.Random(7)
    for _ in range(20):
        a = rng.randrange(1, F.order)
        sol = solve_sus(a, F)
        assert sol.y == a
        assert sol.x == sol.z == F.neg(F.inv(a))
        assert sus_unique(sol, F)


def test_sus_zero_excluded():
    with pytest.raises(ValueError):
        solve_sus(0, ambient_field(2, 4))


# -- strict chains --------------------------------------------------------------

def test_chain_first_case():
    r = verify_chain(1, 2, 1, 2, 2, target_index=7)
    assert r.ok
    d = r.detail
    assert d["mu_s"] == 14
    assert (d["dim_big"], d["dim_small"]) == (15, 14)
    assert d["in_big"] and not d["in_small"]
    assert d["contained"] and d["split"]


def test_chain_matches_certificate():
    cert = sl2lab.strict_chain_certificate(1, 2, 1, 2, 2)
    r = verify_chain(1, 2, 1, 2, 2, target_index=cert.target_index)
    assert cert.valid and r.ok


def test_chain_argument_errors():
    with pytest.raises(ValueError):
        verify_chain(2, 2, 1, 2, 2)
    with pytest.raises(ValueError):
        verify_chain(1, 2, 1, 1, 2)


def test_caps_enforced():
    from indmod.caps import Caps, set_caps
    set_caps(Caps(module_dim=10))
    try:
        with pytest.raises(CapError):
            make_h0(14, ambient_field(2, 4))
    finally:
        set_caps(None)


def test_caps_from_environment(monkeypatch):
    from indmod.caps import get_caps, set_caps
    monkeypatch.setenv("INDMOD_CAPS", "module_dim=12, sl2_m=20")
    set_caps(None)
    try:
        c = get_caps()
        assert (c.module_dim, c.sl2_m) == (12, 20)
        monkeypatch.setenv("INDMOD_CAPS", "bogus=3")
        set_caps(None)
        with pytest.raises(ValueError):
            get_caps()
    finally:
        monkeypatch.delenv("INDMOD_CAPS")
        set_caps(None)
