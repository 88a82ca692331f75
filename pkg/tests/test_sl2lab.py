from math import comb

import pytest
from hypothesis import given, strategies as st

from indmod.caps import CapError
from indmod.sl2lab import (PAdicExpansion, admissible_sequences, apply_sequence, factor_set, generates,
                           h0_frobenius_factors, lambda_e, lucas_binom_mod_p, preceq, prime_power,
                           reachable_indices, rho, strict_chain_certificate, submodule_lattice)


def test_rho_examples():
    assert rho(14, 1, 2) == (12, True)
    assert rho(14, 2, 2) == (8, True)
    assert rho(14, 3, 2) == (0, True)
    assert rho(4, 1, 2) == (4 - 2, False)


def test_padic_expansion():
    e = PAdicExpansion.of(10, 3)
    assert e.digits == (1, 0, 1) and e.value == 10 and e.support == {0, 2}
    assert e.digit(5) == 0
    with pytest.raises(ValueError):
        PAdicExpansion.of(-1, 2)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    for bad in (1, 6, 12):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_factor_set_examples():
    assert factor_set(14, 2).sorted() == [14, 12, 8, 0]
    assert factor_set(14, 2, allow_zero=False).sorted() == [14, 12, 8]
    assert factor_set(26, 3).S == {26}
    for p in (2, 3, 5, 7):
        for m in range(p - 1):
            assert factor_set(m, p).S == {m}


def test_sequences_for_14():
    seqs = {s.e: s.result for s in admissible_sequences(14, 2)}
    assert seqs == {(): 14, (1,): 12, (2,): 8, (3,): 0}
    assert apply_sequence(14, (2,), 2).values == (14, 8)
    with pytest.raises(ValueError):
        apply_sequence(14, (2, 1), 2)
    with pytest.raises(ValueError):
        apply_sequence(4, (1,), 2)


@given(st.sampled_from([2, 3, 5]), st.integers(0, 200))
def test_factor_set_invariants(p, m):
    S = factor_set(m, p).S
    assert m in S
    assert all(0 <= x <= m and (m - x) % 2 == 0 for x in S)
    for seq in admissible_sequences(m, p):
        assert list(seq.values) == sorted(seq.values, reverse=True)
        assert len(set(seq.values)) == len(seq.values)


def test_preceq_examples_and_errors():
    for mu in factor_set(14, 2).S:
        assert preceq(14, mu, 14, 2)
        assert preceq(mu, mu, 14, 2)
    with pytest.raises(ValueError):
        preceq(13, 14, 14, 2)


@given(st.sampled_from([2, 3, 5]), st.integers(0, 60))
def test_preceq_is_partial_order(p, m):
    S = sorted(factor_set(m, p).S)
    for a in S:
        assert preceq(a, a, m, p)
        for b in S:
            if a != b and preceq(a, b, m, p):
                assert not preceq(b, a, m, p)
            for c in S:
                if preceq(a, b, m, p) and preceq(b, c, m, p):
                    assert preceq(a, c, m, p)


def test_generates_refines_preceq():
    # the support order misses the Weyl reflection: in H^0(4), p = 2, v_1 generates v_2
    assert not preceq(0, 2, 4, 2)
    assert generates(0, 2, 4, 2)
    assert reachable_indices(1, 4, 2) == {0, 1, 2, 3, 4}
    assert reachable_indices(0, 4, 2) == {0, 4}


@given(st.sampled_from([2, 3, 5]), st.integers(0, 60))
def test_preceq_implies_generates(p, m):
    S = factor_set(m, p).S
    for a in S:
        for b in S:
            if preceq(a, b, m, p):
                assert generates(a, b, m, p)


@given(st.sampled_from([2, 3, 5]), st.integers(0, 60), st.data())
def test_reachable_closed_under_reflection(p, m, data):
    j = data.draw(st.integers(0, m))
    R = reachable_indices(j, m, p)
    assert all(m - i in R for i in R)
    assert 0 in R and m in R


def test_lattice_m14_is_chain():
    lat = submodule_lattice(14, 2)
    sizes = [len(d.factor_weights) for d in lat.elements]
    assert sizes == [0, 1, 2, 3, 4]
    assert len(lat.covers) == 4
    assert lat.elements[-1].factor_weights == factor_set(14, 2).S
    dot = lat.to_dot()
    assert dot.count("->") == 4


def test_lattice_small_m_and_orders():
    lat = submodule_lattice(1, 3)
    assert [d.factor_weights for d in lat.elements] == [frozenset(), frozenset({1})]
    assert len(submodule_lattice(4, 2).elements) == 4
    assert len(submodule_lattice(4, 2, order="support").elements) == 5
    with pytest.raises(ValueError):
        submodule_lattice(4, 2, order="nope")
    with pytest.raises(CapError):
        submodule_lattice(65, 2)


@given(st.sampled_from([2, 3]), st.integers(0, 40))
def test_lattice_is_distributive_union_closed(p, m):
    lat = submodule_lattice(m, p)
    sets = {d.factor_weights for d in lat.elements}
    for a in sets:
        for b in sets:
            assert a | b in sets
            assert a & b in sets
    # descriptors determined by their factor sets
    assert len(sets) == len(lat.elements)


def test_h0_frobenius_examples():
    assert h0_frobenius_factors(1, 2, 4) == factor_set(14, 2).S
    assert h0_frobenius_factors(2, 3, 2) == factor_set(6, 3).S
    with pytest.raises(ValueError):
        h0_frobenius_factors(9, 3, 2)


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 4), st.data())
def test_h0_frobenius_matches_factor_set(q, r, data):
    lam = data.draw(st.integers(1, q - 1))
    if q ** r > 400:
        return
    mu = q ** r - 1 - lam
    assert mu in h0_frobenius_factors(lam, q, r)
    assert h0_frobenius_factors(lam, q, r) == factor_set(mu, prime_power(q)[0]).S


def test_lambda_e_examples():
    assert lambda_e(1, (), 2) == (1, 0)
    assert lambda_e(4, (), 2) == (4, 2)
    assert lambda_e(3, (1,), 2) == (2, 1)
    with pytest.raises(ValueError):
        lambda_e(5, (1,), 2)


def test_lucas_examples():
    assert lucas_binom_mod_p(10, 2, 2) == 1
    assert lucas_binom_mod_p(7, 0, 3) == 1
    assert lucas_binom_mod_p(3, 5, 2) == 0
    with pytest.raises(ValueError):
        lucas_binom_mod_p(5, 2, 4)


@given(st.integers(0, 2000), st.integers(0, 2000), st.sampled_from([2, 3, 5, 7, 11]))
def test_lucas_matches_exact(m, n, p):
    assert lucas_binom_mod_p(m, n, p) == comb(m, n) % p


def test_chain_certificate_q2():
    cert = strict_chain_certificate(1, 2, 1, 2, 2)
    assert cert.valid
    assert cert.mu_s == 14 and cert.target_index == 7 and cert.target_weight == 0
    assert (cert.lucas_k, cert.lucas_bound, cert.lucas_residue) == (7, 14, 1)
    assert cert.small_weights == [14, 8]


def test_chain_certificate_q3():
    cert = strict_chain_certificate(1, 3, 1, 2, 2)
    assert cert.valid and cert.mu_s == 79 and cert.target_index == 26
    assert (cert.lucas_k, cert.lucas_bound) == (13, 39)


def test_chain_certificate_errors():
    with pytest.raises(ValueError):
        strict_chain_certificate(2, 2, 1, 2, 2)
    with pytest.raises(ValueError):
        strict_chain_certificate(1, 2, 1, 1, 2)
    with pytest.raises(ValueError):
        strict_chain_certificate(1, 2, 1, 2, 1)
    with pytest.raises(ValueError):
        strict_chain_certificate(1, 6, 1, 2, 2)
